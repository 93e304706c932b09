//! Closed plane curves: representation, point sampling and signed curvature.
//!
//! A contour is either an exact circle, a closed polyline (last vertex joins
//! the first implicitly) or a list of samples taken from some parametric map
//! on [0,1). Points on a contour are addressed by normalized arc length.

use crate::error::{Error, Result};
use crate::scalar::{lit, Real};

/// A point in the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2<R> {
    pub x: R,
    pub y: R,
}

/// A displacement / direction in the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec2<R> {
    pub x: R,
    pub y: R,
}

impl<R: Real> Point2<R> {
    pub fn new(x: R, y: R) -> Self {
        Self { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn distance(&self, other: &Point2<R>) -> R {
        (*self - *other).norm()
    }
}

impl<R: Real> Vec2<R> {
    pub fn new(x: R, y: R) -> Self {
        Self { x, y }
    }

    pub fn dot(&self, other: &Vec2<R>) -> R {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the cross product; positive when `other` is to the left.
    pub fn cross(&self, other: &Vec2<R>) -> R {
        self.x * other.y - self.y * other.x
    }

    pub fn norm_sq(&self) -> R {
        self.dot(self)
    }

    pub fn norm(&self) -> R {
        self.norm_sq().sqrt()
    }

    pub fn scaled(&self, s: R) -> Vec2<R> {
        Vec2::new(self.x * s, self.y * s)
    }

    pub fn normalized(&self) -> Option<Vec2<R>> {
        let n = self.norm();
        if n > R::zero() && n.is_finite() {
            Some(self.scaled(R::one() / n))
        } else {
            None
        }
    }

    /// Counterclockwise perpendicular.
    pub fn perp(&self) -> Vec2<R> {
        Vec2::new(-self.y, self.x)
    }
}

impl<R: Real> std::ops::Sub for Point2<R> {
    type Output = Vec2<R>;
    fn sub(self, rhs: Point2<R>) -> Vec2<R> {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl<R: Real> std::ops::Add<Vec2<R>> for Point2<R> {
    type Output = Point2<R>;
    fn add(self, rhs: Vec2<R>) -> Point2<R> {
        Point2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

/// Traversal direction of a contour.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Ccw,
    Cw,
}

impl Orientation {
    pub fn flipped(self) -> Orientation {
        match self {
            Orientation::Ccw => Orientation::Cw,
            Orientation::Cw => Orientation::Ccw,
        }
    }
}

/// A closed plane curve.
///
/// For the list-backed variants the vertex order carries the orientation;
/// `reversed` flips it. The circle stores its orientation explicitly.
#[derive(Debug, Clone, PartialEq)]
pub enum Contour<R> {
    Circle {
        center: Point2<R>,
        radius: R,
        orientation: Orientation,
    },
    ClosedPolyline { vertices: Vec<Point2<R>> },
    SampledParametric { points: Vec<Point2<R>> },
}

/// A point on a curve participating in a complete graph, indexed from 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LabeledPoint<R> {
    pub index: usize,
    pub position: Point2<R>,
    pub curve_param: Option<R>,
}

/// One curvature evaluation. `y_prime`/`y_double_prime` are populated only
/// for graph-form evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvatureSample<R> {
    pub position: Option<Point2<R>>,
    pub param: Option<R>,
    pub kappa: R,
    pub y_prime: Option<R>,
    pub y_double_prime: Option<R>,
}

impl<R: Real> Contour<R> {
    pub fn circle(center: Point2<R>, radius: R, orientation: Orientation) -> Result<Self> {
        if !center.is_finite() || !radius.is_finite() || radius <= R::zero() {
            return Err(Error::InvalidParams(
                "circle needs finite center and strictly positive radius".into(),
            ));
        }
        Ok(Contour::Circle {
            center,
            radius,
            orientation,
        })
    }

    pub fn closed_polyline(vertices: Vec<Point2<R>>) -> Result<Self> {
        Self::check_vertex_list(&vertices)?;
        Ok(Contour::ClosedPolyline { vertices })
    }

    pub fn sampled_parametric(points: Vec<Point2<R>>) -> Result<Self> {
        Self::check_vertex_list(&points)?;
        Ok(Contour::SampledParametric { points })
    }

    /// Dense samples of a parametric map `f: [0,1) -> R^2`.
    pub fn from_parametric<F>(f: F, samples: usize) -> Result<Self>
    where
        F: Fn(R) -> Point2<R>,
    {
        if samples < 3 {
            return Err(Error::InvalidParams("need at least 3 samples".into()));
        }
        let n = lit::<R>(samples as f64);
        let points = (0..samples)
            .map(|i| f(lit::<R>(i as f64) / n))
            .collect::<Vec<_>>();
        Self::sampled_parametric(points)
    }

    fn check_vertex_list(vertices: &[Point2<R>]) -> Result<()> {
        if vertices.len() < 3 {
            return Err(Error::InvalidParams(
                "closed vertex list needs at least 3 points".into(),
            ));
        }
        if vertices.iter().any(|p| !p.is_finite()) {
            return Err(Error::InvalidParams("non-finite vertex coordinate".into()));
        }
        Ok(())
    }

    /// Vertex list for the list-backed variants.
    pub fn vertex_list(&self) -> Option<&[Point2<R>]> {
        match self {
            Contour::Circle { .. } => None,
            Contour::ClosedPolyline { vertices } => Some(vertices),
            Contour::SampledParametric { points } => Some(points),
        }
    }

    /// Same curve traversed the opposite way.
    pub fn reversed(&self) -> Contour<R> {
        match self {
            Contour::Circle {
                center,
                radius,
                orientation,
            } => Contour::Circle {
                center: *center,
                radius: *radius,
                orientation: orientation.flipped(),
            },
            Contour::ClosedPolyline { vertices } => Contour::ClosedPolyline {
                vertices: reverse_keeping_first(vertices),
            },
            Contour::SampledParametric { points } => Contour::SampledParametric {
                points: reverse_keeping_first(points),
            },
        }
    }

    /// Orientation of the traversal: explicit for circles, the sign of the
    /// shoelace area for vertex lists.
    pub fn orientation(&self) -> Orientation {
        match self {
            Contour::Circle { orientation, .. } => *orientation,
            _ => {
                let vs = self.vertex_list().expect("list variant");
                let mut area2 = R::zero();
                for j in 0..vs.len() {
                    let a = vs[j];
                    let b = vs[(j + 1) % vs.len()];
                    area2 = area2 + (a.x * b.y - b.x * a.y);
                }
                if area2 >= R::zero() {
                    Orientation::Ccw
                } else {
                    Orientation::Cw
                }
            }
        }
    }

    pub fn perimeter(&self) -> R {
        match self {
            Contour::Circle { radius, .. } => (R::PI() + R::PI()) * *radius,
            _ => {
                let vs = self.vertex_list().expect("list variant");
                let mut total = R::zero();
                for j in 0..vs.len() {
                    total = total + (vs[(j + 1) % vs.len()] - vs[j]).norm();
                }
                total
            }
        }
    }

    /// Point at normalized arc length `t` in [0,1), measured from the curve
    /// origin (angle 0 for circles, vertex 0 for vertex lists) along the
    /// traversal direction.
    pub fn point_at(&self, t: R) -> Result<Point2<R>> {
        if !(t >= R::zero() && t < R::one()) {
            return Err(Error::InvalidParams(format!(
                "curve parameter {t} outside [0,1)"
            )));
        }
        match self {
            Contour::Circle {
                center,
                radius,
                orientation,
            } => {
                let two_pi = R::PI() + R::PI();
                let angle = match orientation {
                    Orientation::Ccw => two_pi * t,
                    Orientation::Cw => -(two_pi * t),
                };
                Ok(Point2::new(
                    center.x + *radius * angle.cos(),
                    center.y + *radius * angle.sin(),
                ))
            }
            _ => {
                let vs = self.vertex_list().expect("list variant");
                let total = self.perimeter();
                let mut target = t * total;
                for j in 0..vs.len() {
                    let a = vs[j];
                    let b = vs[(j + 1) % vs.len()];
                    let len = (b - a).norm();
                    if target <= len || j == vs.len() - 1 {
                        if len == R::zero() {
                            return Ok(a);
                        }
                        let u = target / len;
                        return Ok(a + (b - a).scaled(u));
                    }
                    target = target - len;
                }
                unreachable!("arc-length walk covers the perimeter")
            }
        }
    }

    /// Unsigned distance from `p` to the contour.
    pub fn distance_to(&self, p: &Point2<R>) -> R {
        match self {
            Contour::Circle { center, radius, .. } => ((*p - *center).norm() - *radius).abs(),
            _ => {
                let vs = self.vertex_list().expect("list variant");
                let mut best = R::infinity();
                for j in 0..vs.len() {
                    let d = segment_distance(&vs[j], &vs[(j + 1) % vs.len()], p);
                    if d < best {
                        best = d;
                    }
                }
                best
            }
        }
    }
}

fn reverse_keeping_first<R: Real>(vs: &[Point2<R>]) -> Vec<Point2<R>> {
    let mut out = Vec::with_capacity(vs.len());
    out.push(vs[0]);
    out.extend(vs[1..].iter().rev().copied());
    out
}

/// Distance from `p` to the segment `ab`.
fn segment_distance<R: Real>(a: &Point2<R>, b: &Point2<R>, p: &Point2<R>) -> R {
    let ab = *b - *a;
    let ap = *p - *a;
    let len_sq = ab.norm_sq();
    if len_sq == R::zero() {
        return ap.norm();
    }
    let u = (ap.dot(&ab) / len_sq).max(R::zero()).min(R::one());
    (*p - (*a + ab.scaled(u))).norm()
}

/// Sign of the turn a->b->c (positive = left turn).
fn orient<R: Real>(a: &Point2<R>, b: &Point2<R>, c: &Point2<R>) -> R {
    (*b - *a).cross(&(*c - *a))
}

fn on_segment<R: Real>(a: &Point2<R>, b: &Point2<R>, p: &Point2<R>) -> bool {
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

/// Whether the closed segments `ab` and `cd` share any point.
fn segments_intersect<R: Real>(
    a: &Point2<R>,
    b: &Point2<R>,
    c: &Point2<R>,
    d: &Point2<R>,
) -> bool {
    let d1 = orient(a, b, c);
    let d2 = orient(a, b, d);
    let d3 = orient(c, d, a);
    let d4 = orient(c, d, b);
    let zero = R::zero();
    if ((d1 > zero && d2 < zero) || (d1 < zero && d2 > zero))
        && ((d3 > zero && d4 < zero) || (d3 < zero && d4 > zero))
    {
        return true;
    }
    (d1 == zero && on_segment(a, b, c))
        || (d2 == zero && on_segment(a, b, d))
        || (d3 == zero && on_segment(c, d, a))
        || (d4 == zero && on_segment(c, d, b))
}

/// True iff no two non-adjacent boundary segments intersect. A circle is
/// always simple; degenerate vertex lists simply return false rather than
/// erroring.
pub fn validate_simple<R: Real>(contour: &Contour<R>) -> bool {
    let vs = match contour.vertex_list() {
        None => return true,
        Some(vs) => vs,
    };
    let m = vs.len();
    for j in 0..m {
        for k in (j + 1)..m {
            // segments j and k are adjacent when they share a vertex
            if k == j + 1 || (j == 0 && k == m - 1) {
                continue;
            }
            let (a, b) = (&vs[j], &vs[(j + 1) % m]);
            let (c, d) = (&vs[k], &vs[(k + 1) % m]);
            if segments_intersect(a, b, c, d) {
                return false;
            }
        }
    }
    true
}

/// Sample labeled points at strictly increasing normalized arc-length
/// parameters; indices are assigned 1..n in parameter order.
pub fn sample_points<R: Real>(contour: &Contour<R>, params: &[R]) -> Result<Vec<LabeledPoint<R>>> {
    if params.is_empty() {
        return Err(Error::InvalidParams("need at least one parameter".into()));
    }
    for w in params.windows(2) {
        if !(w[0] < w[1]) {
            return Err(Error::InvalidParams(
                "parameters must be strictly increasing".into(),
            ));
        }
    }
    params
        .iter()
        .enumerate()
        .map(|(j, &t)| {
            Ok(LabeledPoint {
                index: j + 1,
                position: contour.point_at(t)?,
                curve_param: Some(t),
            })
        })
        .collect()
}

/// Signed curvature of a graph y(x) from its derivatives: y'' / (1 + y'^2)^(3/2).
pub fn signed_curvature_graph<R: Real>(y_prime: R, y_double_prime: R) -> R {
    let one = R::one();
    y_double_prime / (one + y_prime * y_prime).powf(lit(1.5))
}

/// Signed curvature of a parametric contour at `param`.
///
/// Circles are evaluated in closed form (+1/R counterclockwise, -1/R
/// clockwise). Sampled parametric contours use periodic central differences
/// on the sample grid, so the result is approximate there. Polylines are
/// rejected; use [`discrete_curvature`].
pub fn signed_curvature_parametric<R: Real>(
    contour: &Contour<R>,
    param: R,
) -> Result<CurvatureSample<R>> {
    match contour {
        Contour::Circle {
            radius, orientation, ..
        } => {
            let kappa = match orientation {
                Orientation::Ccw => R::one() / *radius,
                Orientation::Cw => -(R::one() / *radius),
            };
            Ok(CurvatureSample {
                position: Some(contour.point_at(param)?),
                param: Some(param),
                kappa,
                y_prime: None,
                y_double_prime: None,
            })
        }
        Contour::SampledParametric { points } => {
            if !(param >= R::zero() && param < R::one()) {
                return Err(Error::InvalidParams(format!(
                    "curve parameter {param} outside [0,1)"
                )));
            }
            let n = points.len();
            let nf = lit::<R>(n as f64);
            let j = (param * nf).round().to_usize().unwrap_or(0) % n;
            let prev = points[(j + n - 1) % n];
            let here = points[j];
            let next = points[(j + 1) % n];
            let h = R::one() / nf;
            let half = lit::<R>(0.5);
            let xd = (next.x - prev.x) * half / h;
            let yd = (next.y - prev.y) * half / h;
            let xdd = (next.x - here.x - here.x + prev.x) / (h * h);
            let ydd = (next.y - here.y - here.y + prev.y) / (h * h);
            let speed_sq = xd * xd + yd * yd;
            if speed_sq == R::zero() {
                return Err(Error::ZeroLengthEdge { vertex: j });
            }
            let kappa = (xd * ydd - yd * xdd) / speed_sq.powf(lit(1.5));
            Ok(CurvatureSample {
                position: Some(here),
                param: Some(param),
                kappa,
                y_prime: None,
                y_double_prime: None,
            })
        }
        Contour::ClosedPolyline { .. } => Err(Error::WrongContourVariant {
            expected: "circle or sampled parametric",
        }),
    }
}

/// Discrete signed curvature at a polyline vertex: the signed inverse
/// circumradius of the three consecutive vertices around it. Positive for
/// left turns, zero for collinear triples.
pub fn discrete_curvature<R: Real>(polyline: &Contour<R>, vertex_index: usize) -> Result<R> {
    let vs = match polyline {
        Contour::ClosedPolyline { vertices } => vertices,
        _ => {
            return Err(Error::WrongContourVariant {
                expected: "closed polyline",
            })
        }
    };
    let m = vs.len();
    if vertex_index >= m {
        return Err(Error::InvalidParams(format!(
            "vertex index {vertex_index} out of range for {m} vertices"
        )));
    }
    let a = vs[(vertex_index + m - 1) % m];
    let b = vs[vertex_index];
    let c = vs[(vertex_index + 1) % m];
    let ab = b - a;
    let bc = c - b;
    let ac = c - a;
    let (lab, lbc, lac) = (ab.norm(), bc.norm(), ac.norm());
    if lab == R::zero() || lbc == R::zero() {
        return Err(Error::ZeroLengthEdge { vertex: vertex_index });
    }
    let two = lit::<R>(2.0);
    Ok(two * ab.cross(&bc) / (lab * lbc * lac))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::tol;

    fn unit_circle() -> Contour<f64> {
        Contour::circle(Point2::new(0.0, 0.0), 1.0, Orientation::Ccw).unwrap()
    }

    fn square() -> Contour<f64> {
        Contour::closed_polyline(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        ])
        .unwrap()
    }

    fn regular_ngon(n: usize, radius: f64, ccw: bool) -> Contour<f64> {
        let mut vs: Vec<Point2<f64>> = (0..n)
            .map(|k| {
                let a = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64);
                Point2::new(radius * a.cos(), radius * a.sin())
            })
            .collect();
        if !ccw {
            vs = reverse_keeping_first(&vs);
        }
        Contour::closed_polyline(vs).unwrap()
    }

    #[test]
    fn circle_is_simple() {
        assert!(validate_simple(&unit_circle()));
    }

    #[test]
    fn square_is_simple() {
        assert!(validate_simple(&square()));
    }

    #[test]
    fn bowtie_is_not_simple() {
        let bowtie = Contour::closed_polyline(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(1.0, 0.0),
            Point2::new(0.0, 1.0),
        ])
        .unwrap();
        assert!(!validate_simple(&bowtie));
    }

    #[test]
    fn circle_quarter_turns() {
        let pts = sample_points(&unit_circle(), &[0.0, 0.25, 0.5, 0.75]).unwrap();
        let expected = [(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)];
        for (p, (x, y)) in pts.iter().zip(expected) {
            assert!((p.position.x - x).abs() < 1e-12);
            assert!((p.position.y - y).abs() < 1e-12);
        }
        assert_eq!(pts[0].index, 1);
        assert_eq!(pts[3].index, 4);
    }

    #[test]
    fn square_param_zero_is_first_vertex() {
        let pts = sample_points(&square(), &[0.0]).unwrap();
        assert_eq!(pts[0].position, Point2::new(0.0, 0.0));
    }

    #[test]
    fn six_circle_points_make_fifteen_chords() {
        let params: Vec<f64> = (0..6).map(|k| k as f64 / 6.0).collect();
        let pts = sample_points(&unit_circle(), &params).unwrap();
        assert_eq!(pts.len(), 6);
        // C(6,2) distinct unordered pairs
        let mut pairs = 0;
        for i in 0..6 {
            for k in (i + 1)..6 {
                assert!(pts[i].position.distance(&pts[k].position) > 0.0);
                pairs += 1;
            }
        }
        assert_eq!(pairs, 15);
    }

    #[test]
    fn non_increasing_params_rejected() {
        assert!(sample_points(&unit_circle(), &[0.5, 0.5]).is_err());
        assert!(sample_points(&unit_circle(), &[0.0, 1.0]).is_err());
        assert!(sample_points::<f64>(&unit_circle(), &[]).is_err());
    }

    #[test]
    fn graph_curvature_spot_values() {
        assert_eq!(signed_curvature_graph(0.0, 2.0), 2.0);
        assert_eq!(signed_curvature_graph(17.5, 0.0), 0.0);
        let v = signed_curvature_graph(1.0, 1.0);
        assert!((v - 1.0 / 2.0_f64.powf(1.5)).abs() < 1e-15);
    }

    #[test]
    fn circle_parametric_curvature() {
        let c: Contour<f64> =
            Contour::circle(Point2::new(3.0, -1.0), 2.0, Orientation::Ccw).unwrap();
        let s = signed_curvature_parametric(&c, 0.3).unwrap();
        assert!((s.kappa - 0.5).abs() < 1e-15);
        let cw = c.reversed();
        let s = signed_curvature_parametric(&cw, 0.3).unwrap();
        assert!((s.kappa + 0.5).abs() < 1e-15);
    }

    #[test]
    fn ellipse_curvature_matches_analytic_oracle() {
        // oracle: kappa(t) = a*b / (b^2 cos^2 t + a^2 sin^2 t)^(3/2)
        let (a, b) = (2.0_f64, 1.0_f64);
        let ellipse = Contour::from_parametric(
            |t: f64| {
                let ang = 2.0 * std::f64::consts::PI * t;
                Point2::new(a * ang.cos(), b * ang.sin())
            },
            4096,
        )
        .unwrap();
        let s = signed_curvature_parametric(&ellipse, 0.0).unwrap();
        let oracle = a * b / (b * b).powf(1.5); // t = 0
        assert_eq!(oracle, 2.0);
        assert!((s.kappa - oracle).abs() < 1e-4, "kappa = {}", s.kappa);
    }

    #[test]
    fn hexagon_discrete_curvature_is_inverse_circumradius() {
        let hexagon = regular_ngon(6, 1.0, true);
        for v in 0..6 {
            let k = discrete_curvature(&hexagon, v).unwrap();
            assert!((k - 1.0).abs() < 1e-14, "vertex {v}: {k}");
        }
        let cw = regular_ngon(6, 1.0, false);
        for v in 0..6 {
            let k = discrete_curvature(&cw, v).unwrap();
            assert!((k + 1.0).abs() < 1e-14, "vertex {v}: {k}");
        }
    }

    #[test]
    fn collinear_vertices_give_zero_curvature() {
        let c = Contour::closed_polyline(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(1.0, 3.0),
        ])
        .unwrap();
        assert_eq!(discrete_curvature(&c, 1).unwrap(), 0.0);
    }

    #[test]
    fn duplicate_vertex_is_an_error() {
        let c = Contour::closed_polyline(vec![
            Point2::new(0.0, 0.0),
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(2.0, 0.0),
        ])
        .unwrap();
        assert!(matches!(
            discrete_curvature(&c, 1),
            Err(Error::ZeroLengthEdge { .. })
        ));
    }

    #[test]
    fn sampled_points_stay_on_contour() {
        let params: Vec<f64> = (0..64).map(|k| k as f64 / 64.0).collect();
        for contour in [unit_circle(), square()] {
            for p in sample_points(&contour, &params).unwrap() {
                assert!(contour.distance_to(&p.position) <= tol::eps_on::<f64>());
            }
        }
    }

    #[test]
    fn f32_alias_works_for_basic_sampling() {
        let c = Contour::circle(Point2::new(0.0_f32, 0.0), 1.0, Orientation::Ccw).unwrap();
        let pts = sample_points(&c, &[0.0_f32, 0.25, 0.5]).unwrap();
        assert!((pts[1].position.y - 1.0).abs() < 1e-6);
    }
}
