//! Two-colored complete graphs over labeled points.
//!
//! Three coloring rules are supported: chord-slope sign (red for positive
//! slope, green for negative), and equality colorings induced by per-vertex
//! labels (green iff equal labels) for curvature signs and Jordan regions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::contour::LabeledPoint;
use crate::error::{Error, Result};
use crate::scalar::{lit, tol, Real};

/// Edge color of the bi-color complete graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeColor {
    Red,
    Green,
}

impl EdgeColor {
    pub fn swapped(self) -> EdgeColor {
        match self {
            EdgeColor::Red => EdgeColor::Green,
            EdgeColor::Green => EdgeColor::Red,
        }
    }
}

/// The line y(x) = alpha * x + beta through points i and k.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChordLine<R> {
    pub i: usize,
    pub k: usize,
    pub alpha: R,
    pub beta: R,
}

/// How to handle zero-slope or vertical chords.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegeneracyPolicy {
    /// Fail with `DegenerateSlope`.
    Reject,
    /// Jitter every point deterministically (seeded, magnitude 1e-9) and
    /// recompute once; fail if a degenerate chord survives.
    Perturb { seed: u64 },
}

/// Per-vertex discrete labels (curvature sign, region id, ...), vertex
/// indices 1..n.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexLabeling<L> {
    labels: Vec<L>,
}

impl<L: Clone + PartialEq> VertexLabeling<L> {
    pub fn new(labels: Vec<L>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidParams("labeling needs at least one vertex".into()));
        }
        Ok(Self { labels })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, vertex: usize) -> &L {
        &self.labels[vertex - 1]
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }
}

/// Anything that assigns one of two colors to every edge of K_n.
pub trait EdgeColored {
    fn vertex_count(&self) -> usize;
    /// Color of the unordered edge {i,k}; 1-based, i != k.
    fn color(&self, i: usize, k: usize) -> EdgeColor;
}

/// Position of the unordered pair {i,k} (1-based, i < k) in lexicographic
/// edge order: (1,2),(1,3),...,(1,n),(2,3),...
pub fn edge_index(n: usize, i: usize, k: usize) -> usize {
    debug_assert!(1 <= i && i < k && k <= n);
    (i - 1) * n - i * (i - 1) / 2 + (k - i - 1)
}

/// Number of edges of K_n.
pub fn edge_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// A complete graph with one color and one provenance record per edge.
#[derive(Debug, Clone, PartialEq)]
pub struct ColoredCompleteGraph<P> {
    n: usize,
    colors: Vec<EdgeColor>,
    provenance: Vec<P>,
}

impl<P> ColoredCompleteGraph<P> {
    pub fn from_parts(n: usize, colors: Vec<EdgeColor>, provenance: Vec<P>) -> Result<Self> {
        if n < 2 || colors.len() != edge_count(n) || provenance.len() != edge_count(n) {
            return Err(Error::InvalidParams(
                "colored graph needs all C(n,2) edges colored with provenance".into(),
            ));
        }
        Ok(Self {
            n,
            colors,
            provenance,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_color(&self, i: usize, k: usize) -> EdgeColor {
        let (i, k) = if i < k { (i, k) } else { (k, i) };
        self.colors[edge_index(self.n, i, k)]
    }

    pub fn edge_provenance(&self, i: usize, k: usize) -> &P {
        let (i, k) = if i < k { (i, k) } else { (k, i) };
        &self.provenance[edge_index(self.n, i, k)]
    }

    /// Edges in lexicographic order as (i, k, color, provenance).
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, EdgeColor, &P)> {
        let n = self.n;
        (1..=n)
            .flat_map(move |i| ((i + 1)..=n).map(move |k| (i, k)))
            .zip(self.colors.iter().zip(self.provenance.iter()))
            .map(|((i, k), (c, p))| (i, k, *c, p))
    }

    /// Same graph with every edge color swapped.
    pub fn color_swapped(&self) -> ColoredCompleteGraph<P>
    where
        P: Clone,
    {
        ColoredCompleteGraph {
            n: self.n,
            colors: self.colors.iter().map(|c| c.swapped()).collect(),
            provenance: self.provenance.clone(),
        }
    }
}

impl<P> EdgeColored for ColoredCompleteGraph<P> {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn color(&self, i: usize, k: usize) -> EdgeColor {
        self.edge_color(i, k)
    }
}

/// The chord through two labeled points. Errors on coincident points and on
/// vertical chords, which Eq-of-a-line form cannot represent.
pub fn chord<R: Real>(p_i: &LabeledPoint<R>, p_k: &LabeledPoint<R>) -> Result<ChordLine<R>> {
    let (a, b) = (p_i.position, p_k.position);
    if a == b {
        return Err(Error::CoincidentPoints {
            i: p_i.index,
            k: p_k.index,
        });
    }
    let dx = b.x - a.x;
    let scale = R::one().max(a.x.abs()).max(b.x.abs());
    if dx.abs() <= tol::eps_vert::<R>() * scale {
        return Err(Error::DegenerateSlope {
            i: p_i.index,
            k: p_k.index,
        });
    }
    let alpha = (b.y - a.y) / dx;
    // anchor the intercept at the lower-index endpoint so the unordered
    // edge gets bit-identical coefficients from either argument order
    let base = if p_i.index <= p_k.index { a } else { b };
    let beta = base.y - alpha * base.x;
    Ok(ChordLine {
        i: p_i.index.min(p_k.index),
        k: p_i.index.max(p_k.index),
        alpha,
        beta,
    })
}

fn coordinate_scale<R: Real>(points: &[LabeledPoint<R>]) -> R {
    points.iter().fold(R::one(), |m, p| {
        m.max(p.position.x.abs()).max(p.position.y.abs())
    })
}

fn try_slope_coloring<R: Real>(
    points: &[LabeledPoint<R>],
) -> Result<ColoredCompleteGraph<ChordLine<R>>> {
    let n = points.len();
    let eps = tol::eps_slope::<R>() * coordinate_scale(points);
    let mut colors = Vec::with_capacity(edge_count(n));
    let mut provenance = Vec::with_capacity(edge_count(n));
    for i in 0..n {
        for k in (i + 1)..n {
            let line = chord(&points[i], &points[k])?;
            if line.alpha.abs() <= eps {
                return Err(Error::DegenerateSlope {
                    i: points[i].index,
                    k: points[k].index,
                });
            }
            colors.push(if line.alpha > R::zero() {
                EdgeColor::Red
            } else {
                EdgeColor::Green
            });
            provenance.push(line);
        }
    }
    ColoredCompleteGraph::from_parts(n, colors, provenance)
}

fn jittered<R: Real>(points: &[LabeledPoint<R>], seed: u64) -> Vec<LabeledPoint<R>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mag = tol::jitter_magnitude::<R>();
    points
        .iter()
        .map(|p| {
            let dx: f64 = rng.gen_range(-1.0..=1.0);
            let dy: f64 = rng.gen_range(-1.0..=1.0);
            let mut q = *p;
            q.position.x = q.position.x + mag * lit(dx);
            q.position.y = q.position.y + mag * lit(dy);
            q
        })
        .collect()
}

/// Color K_n by chord-slope sign: red for positive slope, green for negative.
/// Zero-slope and vertical chords follow the degeneracy policy.
pub fn color_by_slope<R: Real>(
    points: &[LabeledPoint<R>],
    policy: DegeneracyPolicy,
) -> Result<ColoredCompleteGraph<ChordLine<R>>> {
    if points.len() < 2 {
        return Err(Error::InvalidParams("need at least two points".into()));
    }
    match try_slope_coloring(points) {
        Ok(g) => Ok(g),
        Err(e @ Error::CoincidentPoints { .. }) => Err(e),
        Err(e) => match policy {
            DegeneracyPolicy::Reject => Err(e),
            DegeneracyPolicy::Perturb { seed } => try_slope_coloring(&jittered(points, seed)),
        },
    }
}

/// Equality coloring: green iff the endpoint labels are equal, red otherwise.
pub fn color_by_labels<L: Clone + PartialEq>(
    labeling: &VertexLabeling<L>,
) -> Result<ColoredCompleteGraph<(L, L)>> {
    let n = labeling.vertex_count();
    if n < 2 {
        return Err(Error::InvalidParams("need at least two vertices".into()));
    }
    let mut colors = Vec::with_capacity(edge_count(n));
    let mut provenance = Vec::with_capacity(edge_count(n));
    for i in 1..=n {
        for k in (i + 1)..=n {
            let (li, lk) = (labeling.label(i).clone(), labeling.label(k).clone());
            colors.push(if li == lk {
                EdgeColor::Green
            } else {
                EdgeColor::Red
            });
            provenance.push((li, lk));
        }
    }
    ColoredCompleteGraph::from_parts(n, colors, provenance)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contour::Point2;

    fn pt(index: usize, x: f64, y: f64) -> LabeledPoint<f64> {
        LabeledPoint {
            index,
            position: Point2::new(x, y),
            curve_param: None,
        }
    }

    #[test]
    fn chord_through_origin_diagonal() {
        let line = chord(&pt(1, 0.0, 0.0), &pt(2, 1.0, 1.0)).unwrap();
        assert_eq!(line.alpha, 1.0);
        assert_eq!(line.beta, 0.0);
    }

    #[test]
    fn chord_two_point_form() {
        let line = chord(&pt(1, 0.0, 2.0), &pt(2, 4.0, 0.0)).unwrap();
        assert_eq!(line.alpha, -0.5);
        assert_eq!(line.beta, 2.0);
        // residual at both points
        assert!((line.alpha * 0.0 + line.beta - 2.0).abs() < 1e-12);
        assert!((line.alpha * 4.0 + line.beta - 0.0).abs() < 1e-12);
    }

    #[test]
    fn vertical_chord_is_degenerate() {
        assert!(matches!(
            chord(&pt(1, 0.0, 0.0), &pt(2, 0.0, 1.0)),
            Err(Error::DegenerateSlope { i: 1, k: 2 })
        ));
    }

    #[test]
    fn coincident_points_error() {
        assert!(matches!(
            chord(&pt(3, 2.0, 5.0), &pt(7, 2.0, 5.0)),
            Err(Error::CoincidentPoints { i: 3, k: 7 })
        ));
    }

    #[test]
    fn slope_signs_color_the_triangle() {
        let points = [pt(1, 0.0, 0.0), pt(2, 1.0, 2.0), pt(3, 2.0, 1.0)];
        let g = color_by_slope(&points, DegeneracyPolicy::Reject).unwrap();
        assert_eq!(g.edge_color(1, 2), EdgeColor::Red);
        assert_eq!(g.edge_color(1, 3), EdgeColor::Red);
        assert_eq!(g.edge_color(2, 3), EdgeColor::Green);
        assert_eq!(g.edge_provenance(2, 3).alpha, -1.0);
    }

    #[test]
    fn horizontal_pair_rejected() {
        let points = [pt(1, 0.0, 1.0), pt(2, 3.0, 1.0), pt(3, 1.0, 4.0)];
        assert!(matches!(
            color_by_slope(&points, DegeneracyPolicy::Reject),
            Err(Error::DegenerateSlope { i: 1, k: 2 })
        ));
    }

    #[test]
    fn perturb_resolves_horizontal_pair_deterministically() {
        let points = [pt(1, 0.0, 1.0), pt(2, 3.0, 1.0), pt(3, 1.0, 4.0)];
        let a = color_by_slope(&points, DegeneracyPolicy::Perturb { seed: 42 }).unwrap();
        let b = color_by_slope(&points, DegeneracyPolicy::Perturb { seed: 42 }).unwrap();
        assert_eq!(a, b);
        // jitter is tiny: the clearly-sloped edges keep their colors
        assert_eq!(a.edge_color(1, 3), EdgeColor::Red);
    }

    #[test]
    fn perturb_does_not_mask_coincident_points() {
        let points = [pt(1, 1.0, 1.0), pt(2, 1.0, 1.0), pt(3, 0.0, 4.0)];
        assert!(matches!(
            color_by_slope(&points, DegeneracyPolicy::Perturb { seed: 7 }),
            Err(Error::CoincidentPoints { .. })
        ));
    }

    #[test]
    fn equal_labels_all_green() {
        let labeling = VertexLabeling::new(vec!['+', '+', '+']).unwrap();
        let g = color_by_labels(&labeling).unwrap();
        for (_, _, c, _) in g.edges() {
            assert_eq!(c, EdgeColor::Green);
        }
    }

    #[test]
    fn mixed_signs_give_one_green_edge() {
        let labeling = VertexLabeling::new(vec!['+', '+', '-']).unwrap();
        let g = color_by_labels(&labeling).unwrap();
        assert_eq!(g.edge_color(1, 2), EdgeColor::Green);
        assert_eq!(g.edge_color(1, 3), EdgeColor::Red);
        assert_eq!(g.edge_color(2, 3), EdgeColor::Red);
    }

    #[test]
    fn three_distinct_labels_all_red() {
        let labeling = VertexLabeling::new(vec!["A", "B", "C"]).unwrap();
        let g = color_by_labels(&labeling).unwrap();
        for (_, _, c, _) in g.edges() {
            assert_eq!(c, EdgeColor::Red);
        }
    }

    #[test]
    fn edge_index_is_lexicographic() {
        assert_eq!(edge_index(4, 1, 2), 0);
        assert_eq!(edge_index(4, 1, 3), 1);
        assert_eq!(edge_index(4, 1, 4), 2);
        assert_eq!(edge_index(4, 2, 3), 3);
        assert_eq!(edge_index(4, 3, 4), 5);
    }
}
