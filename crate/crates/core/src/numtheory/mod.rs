//! Separation constants of `{0, ±1}` polynomials, the converse witnesses
//! for non-multinacci ratios, and the gap property of 0/1 sums.

pub mod converse;
pub mod gap;
pub mod separation;

use std::cmp::Ordering;
use std::sync::OnceLock;

use crate::algebraic::{multinacci, multinacci_inverse, AlgebraicNumber, ExactReal};
use crate::error::Result;

pub use converse::{converse_witness, satisfies_witness_inequality, ConverseOutcome, ConverseWitness};
pub use gap::{erdos_joo_gap_check, gap_check, GapReport};
pub use separation::{
    ell_brute, ell_report, ell_upper, separation_bound_check, EllBound, SeparationReport, SignedPolyValue,
};

/// Largest multinacci index tested by the detection helpers.
pub const MULTINACCI_SCAN: usize = 30;

/// Exact comparison of the generator of `x` with an algebraic number.
pub fn cmp_with(x: &ExactReal, a: &AlgebraicNumber) -> Result<Ordering> {
    match (x.as_rational(), x.number()) {
        (Some(r), _) => Ok(a.cmp_rational(r).reverse()),
        (None, Some(n)) => n.cmp_exact(a),
        (None, None) => unreachable!("an exact real is rational or algebraic"),
    }
}

fn table(
    cell: &'static OnceLock<Vec<AlgebraicNumber>>,
    member: fn(usize) -> Result<AlgebraicNumber>,
) -> &'static [AlgebraicNumber] {
    cell.get_or_init(|| {
        (2..=MULTINACCI_SCAN)
            .map(|m| member(m).expect("multinacci numbers exist for m >= 2"))
            .collect()
    })
}

fn family_index(x: &ExactReal, members: &[AlgebraicNumber]) -> Result<Option<usize>> {
    for (i, a) in members.iter().enumerate() {
        if cmp_with(x, a)? == Ordering::Equal {
            return Ok(Some(i + 2));
        }
    }
    Ok(None)
}

/// `Some(m)` when `x = ω_m` for some `m ≤ 30`.
pub fn multinacci_index(x: &ExactReal) -> Result<Option<usize>> {
    static CELL: OnceLock<Vec<AlgebraicNumber>> = OnceLock::new();
    family_index(x, table(&CELL, multinacci))
}

/// `Some(m)` when `x = 1/ω_m` for some `m ≤ 30`.
pub fn inverse_multinacci_index(x: &ExactReal) -> Result<Option<usize>> {
    static CELL: OnceLock<Vec<AlgebraicNumber>> = OnceLock::new();
    family_index(x, table(&CELL, multinacci_inverse))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detects_multinacci_numbers() {
        for m in [2, 3, 7] {
            let w = ExactReal::algebraic(multinacci(m).unwrap(), "omega");
            assert_eq!(multinacci_index(&w).unwrap(), Some(m));
            let t = ExactReal::algebraic(multinacci_inverse(m).unwrap(), "theta");
            assert_eq!(inverse_multinacci_index(&t).unwrap(), Some(m));
            assert_eq!(multinacci_index(&t).unwrap(), None);
        }
        assert_eq!(multinacci_index(&ExactReal::ratio(3, 5)).unwrap(), None);
        assert_eq!(inverse_multinacci_index(&ExactReal::ratio(9, 5)).unwrap(), None);
    }
}
