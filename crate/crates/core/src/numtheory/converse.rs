//! Witnesses that a ratio `λ ∈ (1/2, 2/3)` other than a multinacci number
//! produces a candidate hole meeting `f_0(Δ)`.
//!
//! A witness is `n` with digits `a_1, …, a_{n-1}` such that
//! `(2λ-1)/(1-λ) · λ^n < 1 - Σ_{k<n} a_k λ^k < λ^n`.

use std::cmp::Ordering;

use serde::Serialize;

use crate::algebraic::poly::q;
use crate::algebraic::{lambda_star, multinacci, ExactReal};
use crate::error::{domain, Result};
use crate::geometry::SymbolWord;
use crate::symbolic::greedy_expansion;

use super::{cmp_with, multinacci_index};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    /// `λ < ω_2`: the greedy expansion of 1 supplies the digits.
    Greedy,
    /// `ω_2 < λ < λ*`: the fixed witness `n = 2`, `a_1 = 1`.
    Fixed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConverseWitness {
    pub lambda: String,
    pub n: usize,
    /// `a_1, …, a_{n-1}`
    pub digits: Vec<u8>,
    pub regime: Regime,
    /// The level-`n` hole word `1 ε_1 … ε_{n-1}` with `ε_k = 0` iff `a_k = 1`.
    pub hole_word: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum ConverseOutcome {
    Witness(ConverseWitness),
    NotFound { reason: String },
}

/// Both strict inequalities of the witness condition, decided exactly.
pub fn satisfies_witness_inequality(lambda: &ExactReal, n: usize, digits: &[u8]) -> Result<bool> {
    if digits.len() + 1 != n {
        return domain(format!("expected {} digits for n = {n}, got {}", n.saturating_sub(1), digits.len()));
    }
    let powers = lambda.gen_powers(n);
    let mut rest = lambda.one();
    for (k, &a) in digits.iter().enumerate() {
        if a == 1 {
            rest = lambda.sub(&rest, &powers[k + 1]);
        }
    }
    let one_minus = lambda.sub(&lambda.one(), &lambda.generator());
    let two_minus = lambda.sub(&lambda.scale(&lambda.generator(), &q(2, 1)), &lambda.one());
    // multiply the left inequality through by 1 - λ > 0
    let left = lambda.lt(&lambda.mul(&two_minus, &powers[n]), &lambda.mul(&one_minus, &rest))?;
    let right = lambda.lt(&rest, &powers[n])?;
    Ok(left && right)
}

fn hole_word(digits: &[u8]) -> String {
    let mut w = vec![1u8];
    w.extend(digits.iter().map(|&a| if a == 1 { 0 } else { 1 }));
    SymbolWord::new(w, 2).expect("binary digits").to_string()
}

fn witness(lambda: &ExactReal, n: usize, digits: Vec<u8>, regime: Regime) -> ConverseOutcome {
    ConverseOutcome::Witness(ConverseWitness {
        lambda: lambda.to_string(),
        n,
        hole_word: hole_word(&digits),
        digits,
        regime,
    })
}

/// Searches for a witness with `n ≤ n_max`.
///
/// Below `ω_2` the candidates are the positions with `a_n = 0, a_{n+1} = 1`
/// in the greedy expansion of 1, tried in order. Between `ω_2` and `λ*` the
/// witness is `n = 2, a_1 = 1`. From `λ*` on every non-radial hole is empty
/// near `f_0(Δ) ∩ f_1(Δ)` and no witness of this shape exists.
pub fn converse_witness(lambda: &ExactReal, n_max: usize) -> Result<ConverseOutcome> {
    if lambda.cmp_rational(&q(1, 2)).is_le() || lambda.cmp_rational(&q(2, 3)).is_ge() {
        return domain(format!("lambda must lie in (1/2, 2/3), got {lambda}"));
    }
    if let Some(m) = multinacci_index(lambda)? {
        return domain(format!("lambda = omega_{m} is a multinacci number"));
    }
    if cmp_with(lambda, &lambda_star())? != Ordering::Less {
        return Ok(ConverseOutcome::NotFound {
            reason: "radial regime".into(),
        });
    }
    if cmp_with(lambda, &multinacci(2)?)? == Ordering::Greater {
        if n_max >= 2 && satisfies_witness_inequality(lambda, 2, &[1])? {
            return Ok(witness(lambda, 2, vec![1], Regime::Fixed));
        }
        return Ok(ConverseOutcome::NotFound {
            reason: format!("n = 2, a_1 = 1 fails at {lambda}"),
        });
    }
    let e = greedy_expansion(lambda, &lambda.one(), n_max + 1, false)?;
    let a = &e.digits;
    for n in 1..=n_max {
        if a[n - 1] == 0 && a[n] == 1 && satisfies_witness_inequality(lambda, n, &a[..n - 1])? {
            return Ok(witness(lambda, n, a[..n - 1].to_vec(), Regime::Greedy));
        }
    }
    Ok(ConverseOutcome::NotFound {
        reason: format!("no witness with n <= {n_max}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_below_golden() {
        let l = ExactReal::ratio(59, 100);
        let ConverseOutcome::Witness(w) = converse_witness(&l, 10).unwrap() else {
            panic!("expected a witness");
        };
        assert_eq!(w.n, 5);
        assert_eq!(w.digits, vec![1, 1, 0, 0]);
        assert_eq!(w.regime, Regime::Greedy);
        assert_eq!(w.hole_word, "10011");
        assert!(satisfies_witness_inequality(&l, w.n, &w.digits).unwrap());
    }

    #[test]
    fn fixed_witness_between_golden_and_lambda_star() {
        let l = ExactReal::ratio(63, 100);
        let ConverseOutcome::Witness(w) = converse_witness(&l, 10).unwrap() else {
            panic!("expected a witness");
        };
        assert_eq!((w.n, w.digits.clone()), (2, vec![1]));
        assert_eq!(w.regime, Regime::Fixed);
    }

    #[test]
    fn radial_regime_has_no_witness() {
        let l = ExactReal::ratio(131, 200);
        assert_eq!(
            converse_witness(&l, 10).unwrap(),
            ConverseOutcome::NotFound {
                reason: "radial regime".into()
            }
        );
    }

    #[test]
    fn domain_errors() {
        let w = ExactReal::algebraic(multinacci(2).unwrap(), "omega:2");
        assert!(converse_witness(&w, 10).is_err());
        assert!(converse_witness(&ExactReal::ratio(7, 10), 10).is_err());
        assert!(satisfies_witness_inequality(&ExactReal::ratio(3, 5), 3, &[1]).is_err());
    }

    #[test]
    fn witnesses_satisfy_the_inequality() {
        for num in 501..=665 {
            let l = ExactReal::ratio(num, 1000);
            if let ConverseOutcome::Witness(w) = converse_witness(&l, 30).unwrap() {
                assert!(satisfies_witness_inequality(&l, w.n, &w.digits).unwrap(), "{num}");
            }
        }
    }
}
