//! Plane regions cut out by Jordan curves, identified by winding-number
//! signatures, feeding the equality coloring.
//!
//! Region identity is the vector of winding numbers with respect to each
//! curve of the arrangement. This is exact for pairwise-disjoint (possibly
//! nested) curves; arrangements of mutually intersecting curves are out of
//! scope.

use crate::coloring::{color_by_labels, ColoredCompleteGraph, VertexLabeling};
use crate::contour::{Contour, LabeledPoint, Point2};
use crate::error::{Error, Result};
use crate::scalar::{lit, tol, Real};

/// One or more simple closed curves with optional names ("I", "II", ...).
#[derive(Debug, Clone, PartialEq)]
pub struct Arrangement<R> {
    curves: Vec<Contour<R>>,
    names: Option<Vec<String>>,
}

/// Winding signature of a point: one integer per curve, in arrangement order.
pub type RegionLabel = Vec<i32>;

impl<R: Real> Arrangement<R> {
    /// Every curve must pass `validate_simple`.
    pub fn new(curves: Vec<Contour<R>>, names: Option<Vec<String>>) -> Result<Self> {
        for c in &curves {
            if !crate::contour::validate_simple(c) {
                return Err(Error::InvalidParams(
                    "arrangement curve is not a simple closed curve".into(),
                ));
            }
        }
        if let Some(names) = &names {
            if names.len() != curves.len() {
                return Err(Error::InvalidParams(
                    "one name per curve required when names are given".into(),
                ));
            }
        }
        Ok(Self { curves, names })
    }

    pub fn empty() -> Self {
        Self {
            curves: Vec::new(),
            names: None,
        }
    }

    pub fn curves(&self) -> &[Contour<R>] {
        &self.curves
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }
}

/// Winding number of a simple closed curve around `p`: +1 inside a
/// counterclockwise curve, -1 inside a clockwise one, 0 outside. Points
/// within `eps_region` of the curve are rejected.
pub fn winding_number<R: Real>(curve: &Contour<R>, p: &Point2<R>) -> Result<i32> {
    if curve.distance_to(p) <= tol::eps_region::<R>() {
        return Err(Error::OnBoundary { index: 0 });
    }
    match curve {
        Contour::Circle {
            center,
            radius,
            orientation,
        } => {
            let inside = (*p - *center).norm() < *radius;
            Ok(match (inside, orientation) {
                (false, _) => 0,
                (true, crate::contour::Orientation::Ccw) => 1,
                (true, crate::contour::Orientation::Cw) => -1,
            })
        }
        _ => {
            let vs = curve.vertex_list().expect("list variant");
            // total signed angle subtended by the boundary segments
            let mut total = R::zero();
            for j in 0..vs.len() {
                let a = vs[j] - *p;
                let b = vs[(j + 1) % vs.len()] - *p;
                total = total + a.cross(&b).atan2(a.dot(&b));
            }
            let turns = total / (R::PI() + R::PI());
            let rounded = turns.round();
            let residual = (turns - rounded).abs();
            if residual > lit::<R>(0.25) {
                return Err(Error::WindingResidual {
                    residual: residual.to_f64().unwrap_or(f64::NAN),
                });
            }
            Ok(rounded.to_i32().ok_or_else(|| {
                Error::InvalidParams("winding number does not fit an i32".into())
            })?)
        }
    }
}

/// Label every point with its winding signature. Equal signatures mean the
/// same complement region for pairwise-disjoint curves.
pub fn classify<R: Real>(
    arrangement: &Arrangement<R>,
    points: &[LabeledPoint<R>],
) -> Result<VertexLabeling<RegionLabel>> {
    let mut labels = Vec::with_capacity(points.len());
    for p in points {
        let mut signature = Vec::with_capacity(arrangement.curves.len());
        for curve in &arrangement.curves {
            signature.push(winding_number(curve, &p.position).map_err(|e| match e {
                Error::OnBoundary { .. } => Error::OnBoundary { index: p.index },
                other => other,
            })?);
        }
        labels.push(signature);
    }
    VertexLabeling::new(labels)
}

/// Classify and apply the equality coloring: green for same region, red for
/// different regions.
pub fn region_graph<R: Real>(
    arrangement: &Arrangement<R>,
    points: &[LabeledPoint<R>],
) -> Result<ColoredCompleteGraph<(RegionLabel, RegionLabel)>> {
    let labeling = classify(arrangement, points)?;
    color_by_labels(&labeling)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::EdgeColor;
    use crate::contour::Orientation;
    use crate::ramsey::{self, find_monochromatic_triangles};

    fn circle(r: f64) -> Contour<f64> {
        Contour::circle(Point2::new(0.0, 0.0), r, Orientation::Ccw).unwrap()
    }

    fn lp(index: usize, x: f64, y: f64) -> LabeledPoint<f64> {
        LabeledPoint {
            index,
            position: Point2::new(x, y),
            curve_param: None,
        }
    }

    #[test]
    fn winding_of_unit_circle() {
        let c = circle(1.0);
        assert_eq!(winding_number(&c, &Point2::new(0.0, 0.0)).unwrap(), 1);
        assert_eq!(winding_number(&c, &Point2::new(2.0, 0.0)).unwrap(), 0);
        assert!(matches!(
            winding_number(&c, &Point2::new(1.0, 0.0)),
            Err(Error::OnBoundary { .. })
        ));
        assert_eq!(winding_number(&c.reversed(), &Point2::new(0.0, 0.0)).unwrap(), -1);
    }

    #[test]
    fn winding_of_polyline_square() {
        let sq = Contour::closed_polyline(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        ])
        .unwrap();
        assert_eq!(winding_number(&sq, &Point2::new(0.5, 0.5)).unwrap(), 1);
        assert_eq!(winding_number(&sq, &Point2::new(2.0, 0.5)).unwrap(), 0);
        assert_eq!(
            winding_number(&sq.reversed(), &Point2::new(0.5, 0.5)).unwrap(),
            -1
        );
    }

    #[test]
    fn nested_circles_give_three_signatures() {
        let arr = Arrangement::new(vec![circle(1.0), circle(2.0)], None).unwrap();
        let pts = [lp(1, 0.5, 0.0), lp(2, 1.5, 0.0), lp(3, 3.0, 0.0)];
        let labeling = classify(&arr, &pts).unwrap();
        assert_eq!(labeling.label(1), &vec![1, 1]);
        assert_eq!(labeling.label(2), &vec![0, 1]);
        assert_eq!(labeling.label(3), &vec![0, 0]);
    }

    #[test]
    fn empty_arrangement_puts_everything_in_one_region() {
        let arr = Arrangement::<f64>::empty();
        let pts = [lp(1, 0.0, 0.0), lp(2, 100.0, -3.0), lp(3, 5.0, 5.0)];
        let labeling = classify(&arr, &pts).unwrap();
        assert_eq!(labeling.label(1), labeling.label(2));
        assert_eq!(labeling.label(2), labeling.label(3));
    }

    #[test]
    fn figure5_structure_two_inside_four_outside() {
        let arr = Arrangement::new(vec![circle(1.0)], None).unwrap();
        let pts = [
            lp(1, 0.0, 0.1),
            lp(2, 0.0, -0.1),
            lp(3, 2.0, 0.0),
            lp(4, 0.0, 2.0),
            lp(5, -2.0, 0.0),
            lp(6, 0.0, -2.0),
        ];
        let g = region_graph(&arr, &pts).unwrap();
        let triangles = find_monochromatic_triangles(&g);
        let green: Vec<_> = triangles.iter().filter(|t| t.color == EdgeColor::Green).collect();
        let red: Vec<_> = triangles.iter().filter(|t| t.color == EdgeColor::Red).collect();
        assert_eq!(green.len(), 4); // C(4,3) among the exterior points
        assert!(red.is_empty());
    }

    #[test]
    fn two_two_one_one_partition_forces_red_triangle() {
        // a <=2-points-per-region structure: {1,2},{4,5},{3},{6}
        use crate::coloring::color_by_labels;
        let labeling =
            VertexLabeling::new(vec!["a", "a", "c", "b", "b", "d"].into_iter().map(String::from).collect())
                .unwrap();
        let g = color_by_labels(&labeling).unwrap();
        let triangles = find_monochromatic_triangles(&g);
        assert!(triangles.iter().any(|t| t.color == EdgeColor::Red));
        assert!(triangles.iter().all(|t| t.color != EdgeColor::Green));
    }

    #[test]
    fn nested_three_region_structure() {
        // partition {1,2,6},{3,5},{4}: green triangle {1,2,6}, red {2,3,4} and {4,5,6}
        let arr = Arrangement::new(vec![circle(1.0), circle(2.0)], None).unwrap();
        let pts = [
            lp(1, 0.2, 0.0),
            lp(2, -0.2, 0.0),
            lp(3, 1.5, 0.0),
            lp(4, 3.0, 0.0),
            lp(5, -1.5, 0.0),
            lp(6, 0.0, 0.3),
        ];
        let g = region_graph(&arr, &pts).unwrap();
        let triangles = find_monochromatic_triangles(&g);
        assert!(triangles.contains(&ramsey::MonochromaticClique {
            vertices: vec![1, 2, 6],
            color: EdgeColor::Green
        }));
        assert!(triangles.contains(&ramsey::MonochromaticClique {
            vertices: vec![2, 3, 4],
            color: EdgeColor::Red
        }));
        assert!(triangles.contains(&ramsey::MonochromaticClique {
            vertices: vec![4, 5, 6],
            color: EdgeColor::Red
        }));
    }

    #[test]
    fn on_boundary_point_is_rejected_with_its_index() {
        let arr = Arrangement::new(vec![circle(1.0)], None).unwrap();
        let pts = [lp(1, 0.0, 0.0), lp(2, 1.0, 0.0)];
        assert!(matches!(
            classify(&arr, &pts),
            Err(Error::OnBoundary { index: 2 })
        ));
    }

    #[test]
    fn labels_are_rigid_motion_invariant() {
        // translate + rotate arrangement and points together
        let theta: f64 = 0.7;
        let (s, c) = theta.sin_cos();
        let mv = |p: Point2<f64>| Point2::new(c * p.x - s * p.y + 3.0, s * p.x + c * p.y - 2.0);
        let square: Vec<Point2<f64>> = vec![
            Point2::new(-1.0, -1.0),
            Point2::new(1.0, -1.0),
            Point2::new(1.0, 1.0),
            Point2::new(-1.0, 1.0),
        ];
        let arr0 = Arrangement::new(
            vec![Contour::closed_polyline(square.clone()).unwrap()],
            None,
        )
        .unwrap();
        let arr1 = Arrangement::new(
            vec![Contour::closed_polyline(square.into_iter().map(mv).collect()).unwrap()],
            None,
        )
        .unwrap();
        let pts0 = [lp(1, 0.0, 0.3), lp(2, 5.0, 5.0), lp(3, -0.5, -0.5)];
        let pts1: Vec<_> = pts0
            .iter()
            .map(|p| LabeledPoint {
                index: p.index,
                position: mv(p.position),
                curve_param: None,
            })
            .collect();
        let l0 = classify(&arr0, &pts0).unwrap();
        let l1 = classify(&arr1, &pts1).unwrap();
        assert_eq!(l0.labels(), l1.labels());
    }
}
