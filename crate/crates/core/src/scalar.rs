//! Scalar abstraction: everything geometric is generic over a floating-point
//! type; the combinatorial machinery is scalar-free.

use std::fmt;

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar used by all geometric code. Implemented by `f32` and `f64`.
pub trait Real: Float + FloatConst + FromPrimitive + fmt::Debug + fmt::Display + 'static {}

impl<T> Real for T where T: Float + FloatConst + FromPrimitive + fmt::Debug + fmt::Display + 'static {}

/// Lift an `f64` constant (tolerance, literal) into the working scalar type.
#[inline]
pub fn lit<R: Real>(x: f64) -> R {
    R::from_f64(x).expect("f64 literal must convert into the scalar type")
}

/// Default tolerances, stated once and shared by every module.
pub mod tol {
    use super::{lit, Real};

    /// On-contour distance bound for sampled/reflected points.
    pub fn eps_on<R: Real>() -> R {
        lit(1e-9)
    }

    /// Slope magnitude below which a chord counts as degenerate (scaled by
    /// the largest coordinate magnitude involved).
    pub fn eps_slope<R: Real>() -> R {
        lit(1e-12)
    }

    /// Verticality threshold for chords, same scaling rule as `eps_slope`.
    pub fn eps_vert<R: Real>() -> R {
        lit(1e-12)
    }

    /// Minimum ray advance per bounce; excludes re-hitting the launch point.
    pub fn eps_t<R: Real>() -> R {
        lit(1e-9)
    }

    /// Distance to a polyline vertex under which a hit counts as a corner hit.
    pub fn eps_corner<R: Real>() -> R {
        lit(1e-9)
    }

    /// Near-tangency threshold on |normal . direction| at a reflection.
    pub fn eps_graze<R: Real>() -> R {
        lit(1e-9)
    }

    /// Boundary slack for region classification; closer points are rejected.
    pub fn eps_region<R: Real>() -> R {
        lit(1e-9)
    }

    /// Magnitude of the deterministic jitter applied under the perturb policy.
    pub fn jitter_magnitude<R: Real>() -> R {
        lit(1e-9)
    }
}
