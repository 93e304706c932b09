use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("points {i} and {k} are coincident")]
    CoincidentPoints { i: usize, k: usize },
    #[error("chord {i}-{k} has a degenerate (zero or vertical) slope")]
    DegenerateSlope { i: usize, k: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("operation requires a {expected} contour")]
    WrongContourVariant { expected: &'static str },
    #[error("zero-length edge at vertex {vertex}")]
    ZeroLengthEdge { vertex: usize },
    #[error("point {index} lies on (or within tolerance of) a curve boundary")]
    OnBoundary { index: usize },
    #[error("winding number ill-conditioned: residual {residual} exceeds 0.25 turns")]
    WindingResidual { residual: f64 },
    #[error("trajectory hit a corner at bounce {bounce}")]
    CornerHit { bounce: usize },
    #[error("grazing (near-tangent) hit at bounce {bounce}")]
    Grazing { bounce: usize },
    #[error("ray from the interior found no boundary intersection")]
    NoIntersection,
    #[error("size {size} out of range for n = {n}")]
    SizeOutOfRange { size: usize, n: usize },
    #[error("n = {n} outside enumeration bound [{min}, {max}]")]
    EnumerationBound { n: usize, min: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
