use std::cmp::Ordering;

use serde::Serialize;

use crate::algebraic::poly::{q, qi};
use crate::algebraic::{ExactReal, FieldElem};
use crate::error::{domain, Result};

/// Digits `a_1 … a_N` of `x = Σ a_k λ^k`.
#[derive(Clone, Debug)]
pub struct Expansion {
    pub lambda: ExactReal,
    pub x: FieldElem,
    pub digits: Vec<u8>,
    /// Length of the repeating block when the periodic tail rule was applied.
    pub period: Option<usize>,
    /// Position after which the plain greedy expansion is all zeros.
    pub terminates_at: Option<usize>,
}

/// Digits in the shape used for JSON output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpansionDigits {
    pub lambda: String,
    pub digits: Vec<u8>,
    pub period: Option<usize>,
    pub terminates_at: Option<usize>,
}

impl Expansion {
    pub fn to_digits(&self) -> ExpansionDigits {
        ExpansionDigits {
            lambda: self.lambda.to_string(),
            digits: self.digits.clone(),
            period: self.period,
            terminates_at: self.terminates_at,
        }
    }

    /// `Σ_{k ≤ n} a_k λ^k`
    pub fn partial_sum(&self, n: usize) -> FieldElem {
        let l = &self.lambda;
        let powers = l.gen_powers(n);
        self.digits[..n.min(self.digits.len())]
            .iter()
            .enumerate()
            .filter(|(_, &a)| a == 1)
            .fold(l.zero(), |acc, (k, _)| l.add(&acc, &powers[k + 1]))
    }

    /// The tail bound `Σ_{k>n} a_k λ^k ≤ λ^n` for every `n`, decided exactly.
    ///
    /// For a plain greedy expansion the tail after `n` is the remainder
    /// `x - Σ_{k≤n} a_k λ^k`. For a periodic expansion with block length `p`
    /// the tails satisfy `(1 - λ^p) T_n = Σ_{k=n+1}^{n+p} a_k λ^k`, and it
    /// suffices to check `n < p`.
    pub fn satisfies_tail_bound(&self) -> Result<bool> {
        let l = &self.lambda;
        let n_max = self.digits.len();
        let powers = l.gen_powers(n_max + 2 * self.period.unwrap_or(0) + 1);
        match self.period {
            None => {
                let mut rem = self.x.clone();
                for n in 0..=n_max {
                    if n > 0 && self.digits[n - 1] == 1 {
                        rem = l.sub(&rem, &powers[n]);
                    }
                    if l.cmp(&rem, &powers[n])? == Ordering::Greater
                        || l.sign(&rem)? == Ordering::Less
                    {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Some(p) => {
                let block = &self.digits[..p];
                let one_minus = l.sub(&l.one(), &powers[p]);
                for n in 0..p {
                    let mut s = l.zero();
                    for k in n + 1..=n + p {
                        if block[(k - 1) % p] == 1 {
                            s = l.add(&s, &powers[k]);
                        }
                    }
                    if l.cmp(&s, &l.mul(&one_minus, &powers[n]))? == Ordering::Greater {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }
}

/// Greedy expansion `a_k = 1` iff `λ^k` fits into the remainder.
///
/// With `periodic_tail`, a finite expansion `(a_1, …, a_K, 0, …)` with
/// `a_K = 1` is replaced by the block `(a_1, …, a_{K-1}, 0)` repeated.
pub fn greedy_expansion(
    lambda: &ExactReal,
    x: &FieldElem,
    n: usize,
    periodic_tail: bool,
) -> Result<Expansion> {
    if lambda.cmp_rational(&q(1, 2)) != Ordering::Greater || lambda.cmp_rational(&qi(1)) != Ordering::Less {
        return domain(format!("greedy expansion needs 1/2 < lambda < 1, got {lambda}"));
    }
    if lambda.sign(x)? == Ordering::Less || lambda.cmp(x, &lambda.one())? == Ordering::Greater {
        return domain("greedy expansion needs 0 <= x <= 1");
    }
    let powers = lambda.gen_powers(n);
    let mut rem = x.clone();
    let mut digits = Vec::with_capacity(n);
    let mut terminates_at = if lambda.sign(x)? == Ordering::Equal {
        Some(0)
    } else {
        None
    };
    for k in 1..=n {
        if terminates_at.is_none() && lambda.le(&powers[k], &rem)? {
            digits.push(1);
            rem = lambda.sub(&rem, &powers[k]);
            if lambda.sign(&rem)? == Ordering::Equal {
                terminates_at = Some(k);
            }
        } else {
            digits.push(0);
        }
    }
    let mut period = None;
    if periodic_tail {
        if let Some(k) = terminates_at.filter(|&k| k > 0) {
            let mut block = digits[..k].to_vec();
            block[k - 1] = 0;
            digits = (0..n).map(|i| block[i % k]).collect();
            period = Some(k);
        }
    }
    Ok(Expansion {
        lambda: lambda.clone(),
        x: x.clone(),
        digits,
        period,
        terminates_at,
    })
}
