//! Schur functors on finite-dimensional super vector spaces over the
//! rationals, with exact checks of the mono/epi, super-dimension and
//! exactness criteria they govern.

pub mod calculus;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod linalg;
pub mod partitions;
pub mod report;
pub mod schur;
pub mod suite;
pub mod supervec;

pub use error::{Error, Result};
pub use linalg::{Matrix, Q};
pub use partitions::Partition;
pub use supervec::{SuperDim, SuperMap, SuperSpace, ZeroSequence};
