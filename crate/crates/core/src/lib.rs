//! Exact construction, verification and classification of triangle tilings.

pub mod classifier;
pub mod exact;
pub mod generators;
pub mod geometry;
pub mod tiling;

pub use exact::{ExactError, QuadNum, Rational};
pub use geometry::{Point, Shape, Triangle};
pub use tiling::{Report, Tiling, TilingError};
