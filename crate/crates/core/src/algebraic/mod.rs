//! Exact algebraic numbers, the field arithmetic built on them, and the
//! named constants with their dimension formulas.

pub mod constants;
pub mod exact;
pub mod number;
pub mod poly;

pub use constants::{
    gasket_dimension, lambda_star, multinacci, multinacci_inverse, sierpinski_dimension, sigma,
    small_pisot, tau, uniqueness_dimension,
};
pub use exact::{compare, ExactReal, FieldElem, LinearCombination};
pub use number::{isolate_root, AlgebraicNumber};
pub use poly::{QPoly, Q};
