//! Golden gaskets: overlapping simplex iterated function systems at
//! multinacci contraction ratios, with exact hole analysis, dimension
//! formulas, counting sequences and separation constants.

pub mod algebraic;
pub mod attractor;
pub mod error;
pub mod geometry;
pub mod numtheory;
pub mod registry;
pub mod symbolic;

pub use error::{Error, Result};
