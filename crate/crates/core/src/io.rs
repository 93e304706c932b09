//! On-disk JSON schemas used by the CLI and by downstream tooling.
//!
//! These are concrete `f64` representations; conversion to and from the
//! generic in-memory types happens here.

use serde::{Deserialize, Serialize};

use crate::billiard::{ParticleState, Termination, Trajectory};
use crate::coloring::{ChordLine, ColoredCompleteGraph, EdgeColor};
use crate::contour::{Contour, LabeledPoint, Orientation, Point2, Vec2};
use crate::error::{Error, Result};
use crate::ramsey::{RamseyVerdict, TransitiveRamseyVerdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrientationTag {
    #[default]
    Ccw,
    Cw,
}

impl From<Orientation> for OrientationTag {
    fn from(o: Orientation) -> Self {
        match o {
            Orientation::Ccw => OrientationTag::Ccw,
            Orientation::Cw => OrientationTag::Cw,
        }
    }
}

impl From<OrientationTag> for Orientation {
    fn from(t: OrientationTag) -> Self {
        match t {
            OrientationTag::Ccw => Orientation::Ccw,
            OrientationTag::Cw => Orientation::Cw,
        }
    }
}

/// Contour file: `{"type": "circle"|"polyline"|"parametric_samples", ...}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ContourFile {
    Circle {
        center: [f64; 2],
        radius: f64,
        #[serde(default)]
        orientation: OrientationTag,
    },
    Polyline {
        vertices: Vec<[f64; 2]>,
        #[serde(default)]
        orientation: OrientationTag,
    },
    ParametricSamples {
        vertices: Vec<[f64; 2]>,
        #[serde(default)]
        orientation: OrientationTag,
    },
}

fn to_points(vertices: &[[f64; 2]]) -> Vec<Point2<f64>> {
    vertices.iter().map(|&[x, y]| Point2::new(x, y)).collect()
}

fn from_points(points: &[Point2<f64>]) -> Vec<[f64; 2]> {
    points.iter().map(|p| [p.x, p.y]).collect()
}

impl ContourFile {
    /// Build the in-memory contour. A declared orientation that disagrees
    /// with the vertex order reverses the traversal.
    pub fn to_contour(&self) -> Result<Contour<f64>> {
        match self {
            ContourFile::Circle {
                center,
                radius,
                orientation,
            } => Contour::circle(
                Point2::new(center[0], center[1]),
                *radius,
                (*orientation).into(),
            ),
            ContourFile::Polyline {
                vertices,
                orientation,
            } => oriented(Contour::closed_polyline(to_points(vertices))?, *orientation),
            ContourFile::ParametricSamples {
                vertices,
                orientation,
            } => oriented(
                Contour::sampled_parametric(to_points(vertices))?,
                *orientation,
            ),
        }
    }

    pub fn from_contour(contour: &Contour<f64>) -> ContourFile {
        match contour {
            Contour::Circle {
                center,
                radius,
                orientation,
            } => ContourFile::Circle {
                center: [center.x, center.y],
                radius: *radius,
                orientation: (*orientation).into(),
            },
            Contour::ClosedPolyline { vertices } => ContourFile::Polyline {
                vertices: from_points(vertices),
                orientation: contour.orientation().into(),
            },
            Contour::SampledParametric { points } => ContourFile::ParametricSamples {
                vertices: from_points(points),
                orientation: contour.orientation().into(),
            },
        }
    }
}

fn oriented(contour: Contour<f64>, declared: OrientationTag) -> Result<Contour<f64>> {
    if contour.orientation() == declared.into() {
        Ok(contour)
    } else {
        Ok(contour.reversed())
    }
}

/// One edge of the graph file; slope colorings carry `alpha`/`beta`, equality
/// colorings carry the endpoint labels.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphEdgeFile {
    pub i: usize,
    pub k: usize,
    pub color: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<[serde_json::Value; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<GraphEdgeFile>,
}

fn color_name(c: EdgeColor) -> String {
    match c {
        EdgeColor::Red => "red".into(),
        EdgeColor::Green => "green".into(),
    }
}

impl GraphFile {
    pub fn from_slope_graph(graph: &ColoredCompleteGraph<ChordLine<f64>>) -> GraphFile {
        GraphFile {
            n: graph.n(),
            edges: graph
                .edges()
                .map(|(i, k, color, line)| GraphEdgeFile {
                    i,
                    k,
                    color: color_name(color),
                    alpha: Some(line.alpha),
                    beta: Some(line.beta),
                    labels: None,
                })
                .collect(),
        }
    }

    pub fn from_label_graph<L: Serialize>(graph: &ColoredCompleteGraph<(L, L)>) -> GraphFile {
        GraphFile {
            n: graph.n(),
            edges: graph
                .edges()
                .map(|(i, k, color, (li, lk))| GraphEdgeFile {
                    i,
                    k,
                    color: color_name(color),
                    alpha: None,
                    beta: None,
                    labels: Some([
                        serde_json::to_value(li).expect("serializable label"),
                        serde_json::to_value(lk).expect("serializable label"),
                    ]),
                })
                .collect(),
        }
    }
}

/// Verdict sidecar for the brute-force verifiers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerdictFile {
    pub n: usize,
    pub claim: String,
    pub holds: bool,
    pub counterexamples: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl VerdictFile {
    pub fn from_r33(v: &RamseyVerdict) -> VerdictFile {
        VerdictFile {
            n: v.n,
            claim: "r33".into(),
            holds: v.all_colorings_contain_triangle,
            counterexamples: v.counterexample_count,
            witness: v.sample_counterexample.map(|m| format!("{:b}", m.bits)),
        }
    }

    pub fn from_transitive(v: &TransitiveRamseyVerdict) -> VerdictFile {
        VerdictFile {
            n: v.n,
            claim: "trans".into(),
            holds: v.no_red_triangle_ever
                && v.every_assignment_has_green_triangle_or_red_path2,
            counterexamples: 0,
            witness: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StartFile {
    pub position: [f64; 2],
    pub direction: [f64; 2],
}

/// Trajectory file written by the billiard command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryFile {
    pub boundary: ContourFile,
    pub start: StartFile,
    pub reflections: Vec<[f64; 2]>,
    pub termination: String,
}

impl TrajectoryFile {
    pub fn from_trajectory(t: &Trajectory<f64>) -> TrajectoryFile {
        TrajectoryFile {
            boundary: ContourFile::from_contour(&t.boundary),
            start: StartFile {
                position: [t.start.position.x, t.start.position.y],
                direction: [t.start.direction.x, t.start.direction.y],
            },
            reflections: t.reflections.iter().map(|p| [p.position.x, p.position.y]).collect(),
            termination: match t.termination {
                Termination::Completed => "completed".into(),
                Termination::CornerHit { .. } => "corner_hit".into(),
                Termination::Grazing { .. } => "grazing".into(),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArrangementFile {
    pub curves: Vec<ContourFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointsFile {
    pub points: Vec<[f64; 2]>,
}

impl PointsFile {
    /// Labeled points with indices 1..n in file order.
    pub fn to_labeled_points(&self) -> Result<Vec<LabeledPoint<f64>>> {
        if self.points.is_empty() {
            return Err(Error::InvalidParams("points file is empty".into()));
        }
        Ok(self
            .points
            .iter()
            .enumerate()
            .map(|(j, &[x, y])| LabeledPoint {
                index: j + 1,
                position: Point2::new(x, y),
                curve_param: None,
            })
            .collect())
    }
}

impl StartFile {
    pub fn to_state(&self) -> Result<ParticleState<f64>> {
        ParticleState::new(
            Point2::new(self.position[0], self.position[1]),
            Vec2::new(self.direction[0], self.direction[1]),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contour_file_round_trip() {
        let json = r#"{"type":"circle","center":[0.0,0.0],"radius":1.5}"#;
        let file: ContourFile = serde_json::from_str(json).unwrap();
        let contour = file.to_contour().unwrap();
        assert!(matches!(contour, Contour::Circle { .. }));
        let back = ContourFile::from_contour(&contour);
        let reparsed: ContourFile = serde_json::from_str(&serde_json::to_string(&back).unwrap()).unwrap();
        assert_eq!(back, reparsed);
    }

    #[test]
    fn declared_cw_polyline_is_reversed() {
        let json = r#"{"type":"polyline","vertices":[[0,0],[1,0],[1,1],[0,1]],"orientation":"cw"}"#;
        let contour = serde_json::from_str::<ContourFile>(json)
            .unwrap()
            .to_contour()
            .unwrap();
        assert_eq!(contour.orientation(), Orientation::Cw);
    }

    #[test]
    fn malformed_contour_is_rejected() {
        assert!(serde_json::from_str::<ContourFile>(r#"{"type":"blob"}"#).is_err());
        let neg = r#"{"type":"circle","center":[0,0],"radius":-2}"#;
        assert!(serde_json::from_str::<ContourFile>(neg).unwrap().to_contour().is_err());
    }

    #[test]
    fn slope_graph_file_carries_alpha_beta() {
        use crate::coloring::{color_by_slope, DegeneracyPolicy};
        let pts = PointsFile {
            points: vec![[0.0, 0.0], [1.0, 2.0], [2.0, 1.0]],
        }
        .to_labeled_points()
        .unwrap();
        let g = color_by_slope(&pts, DegeneracyPolicy::Reject).unwrap();
        let file = GraphFile::from_slope_graph(&g);
        assert_eq!(file.n, 3);
        assert_eq!(file.edges.len(), 3);
        assert_eq!(file.edges[0].color, "red");
        assert_eq!(file.edges[0].alpha, Some(2.0));
        assert!(file.edges[0].labels.is_none());
    }

    #[test]
    fn label_graph_file_carries_labels() {
        use crate::coloring::{color_by_labels, VertexLabeling};
        let labeling = VertexLabeling::new(vec![vec![1, 0], vec![1, 0], vec![0, 0]]).unwrap();
        let g = color_by_labels(&labeling).unwrap();
        let file = GraphFile::from_label_graph(&g);
        assert_eq!(file.edges[0].color, "green");
        assert!(file.edges[0].labels.is_some());
    }
}
