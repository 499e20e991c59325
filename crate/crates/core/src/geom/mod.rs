//! Planar geometry kernel over a pluggable [`Scalar`] backend.

mod isometry;
mod primitives;
mod scalar;
mod triangle;

pub use isometry::Isometry;
pub use primitives::{
    angle_cos, concyclic, concyclicity_determinant, cross, dot, extent, foot_of_perpendicular,
    internal_bisector_line, line_intersection, line_through, midpoint, point_on_line, reflect,
    squared_distance, supplementary, Circle, Cosine, Line, Point, Reflect,
};
pub use scalar::{Backend, Exact, Float, Scalar, Sign};
pub use triangle::{circumcircle, incenter_and_bisector_feet, IncenterFeet, Triangle, Vertex};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("degenerate input: {0}")]
    Degenerate(&'static str),
    #[error("value is not representable in the exact backend: {0}")]
    NotRepresentable(&'static str),
    #[error("lines are parallel")]
    Parallel,
    #[error("expected {expected} distinct points")]
    TooFewPoints { expected: usize },
    #[error("segment lengths differ")]
    LengthMismatch,
}

pub type Result<T> = std::result::Result<T, GeomError>;
