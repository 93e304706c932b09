//! Ramsey colorings on closed plane curves.
//!
//! Six points on a closed curve, chords colored by slope sign, and the
//! guarantee of a monochromatic triangle via R(3,3) = 6; billiard reflection
//! sequences feeding the same coloring; curvature-sign and Jordan-region
//! equality colorings with their transitive/intransitive structure; and
//! exhaustive brute-force verifiers for every combinatorial claim.
//!
//! Geometry is generic over the scalar type (`scalar::Real`, implemented by
//! `f32` and `f64`); the concrete `f64` aliases below are what most callers
//! want. The combinatorial search and enumeration code is scalar-free.

pub mod billiard;
pub mod coloring;
pub mod contour;
pub mod error;
pub mod io;
pub mod ramsey;
pub mod regions;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::Real;

// Concrete aliases for the common double-precision case.
pub type Point2F64 = contour::Point2<f64>;
pub type Vec2F64 = contour::Vec2<f64>;
pub type ContourF64 = contour::Contour<f64>;
pub type LabeledPointF64 = contour::LabeledPoint<f64>;
pub type CurvatureSampleF64 = contour::CurvatureSample<f64>;
pub type ChordLineF64 = coloring::ChordLine<f64>;
pub type SlopeGraphF64 = coloring::ColoredCompleteGraph<ChordLineF64>;
pub type ParticleStateF64 = billiard::ParticleState<f64>;
pub type TrajectoryF64 = billiard::Trajectory<f64>;
pub type ArrangementF64 = regions::Arrangement<f64>;

// Single-precision geometry, for callers that want it.
pub type Point2F32 = contour::Point2<f32>;
pub type Vec2F32 = contour::Vec2<f32>;
pub type ContourF32 = contour::Contour<f32>;
