//! Degree-bounded minima of `|ρ|`, `ρ = Σ s_k θ^k ≠ 0`, `s_k ∈ {0, ±1}`.
//!
//! The search runs in floating point with a safety margin and collects
//! every vector whose value could be the minimum or could be zero; the
//! final selection among those is exact.

use std::cmp::Ordering;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering as AtomicOrdering};

use rayon::prelude::*;
use serde::Serialize;

use crate::algebraic::poly::{q, qi};
use crate::algebraic::{ExactReal, FieldElem, LinearCombination};
use crate::error::{domain, Error, Result};

use super::inverse_multinacci_index;

/// Node budget of one branch-and-bound run.
pub const ELL_NODE_CAP: u64 = 1 << 34;

/// Largest degree accepted by [`ell_brute`].
pub const BRUTE_DEGREE_CAP: usize = 12;

/// A `{0, ±1}` polynomial evaluated at `θ`.
#[derive(Clone, Debug)]
pub struct SignedPolyValue {
    /// `s_0, …, s_d` with `s_d = 1`.
    pub coeffs: Vec<i8>,
    pub value: FieldElem,
    /// Enclosure of `|ρ|`.
    pub abs_bracket: (f64, f64),
}

impl SignedPolyValue {
    fn new(theta: &ExactReal, coeffs: Vec<i8>) -> Self {
        let lc = LinearCombination::new(coeffs.iter().map(|&c| i64::from(c)).collect());
        let value = theta.reduce(&lc);
        let (a, e) = (value.approx().abs(), value.error_bound());
        SignedPolyValue {
            coeffs,
            value,
            abs_bracket: ((a - e).max(0.0), a + e),
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

/// The minimum of `|ρ|` over nonzero vectors of degree at most `n_max`.
#[derive(Clone, Debug)]
pub struct EllBound {
    pub theta: ExactReal,
    pub n_max: usize,
    pub min_abs: f64,
    pub witness: SignedPolyValue,
    /// Search nodes visited (leaves included).
    pub nodes: u64,
}

fn powers_f64(theta: f64, n: usize) -> (Vec<f64>, f64) {
    let pw: Vec<f64> = (0..=n).map(|k| theta.powi(k as i32)).collect();
    let total: f64 = pw.iter().sum();
    (pw, 1e-12 * total)
}

fn check_theta(theta: &ExactReal, n_max: usize) -> Result<()> {
    if theta.cmp_rational(&qi(1)) != Ordering::Greater {
        return domain(format!("theta must exceed 1, got {theta}"));
    }
    if n_max == 0 {
        return domain("n_max must be at least 1");
    }
    Ok(())
}

/// Vectors kept by a search: candidates for the minimum and possible zeros.
#[derive(Default)]
struct Pool {
    candidates: Vec<(Vec<i8>, f64)>,
    suspects: Vec<Vec<i8>>,
}

impl Pool {
    fn leaf(&mut self, coeffs: &[i8], v: f64, margin: f64, best: &AtomicU64) {
        let a = v.abs();
        if a <= margin {
            self.suspects.push(coeffs.to_vec());
            return;
        }
        // positive floats order like their bit patterns
        let prev = f64::from_bits(best.fetch_min(a.to_bits(), AtomicOrdering::Relaxed));
        if a <= prev + margin {
            self.candidates.push((coeffs.to_vec(), a));
        }
    }

    fn merge(mut self, other: Pool) -> Pool {
        self.candidates.extend(other.candidates);
        self.suspects.extend(other.suspects);
        self
    }
}

/// Exact minimum among the pooled vectors, ties broken by degree and then
/// lexicographically on `(s_0, …, s_d)`.
fn select(theta: &ExactReal, pool: Pool, margin: f64) -> Result<Option<SignedPolyValue>> {
    let mut cands: Vec<(Vec<i8>, f64)> = pool.candidates;
    for s in pool.suspects {
        let v = SignedPolyValue::new(theta, s);
        if !v.value.is_zero() {
            let a = v.value.approx().abs();
            cands.push((v.coeffs, a));
        }
    }
    let Some(floor) = cands.iter().map(|c| c.1).reduce(f64::min) else {
        return Ok(None);
    };
    let mut best: Option<(SignedPolyValue, FieldElem)> = None;
    let mut near: Vec<Vec<i8>> = cands
        .into_iter()
        .filter(|c| c.1 <= floor + 2.0 * margin)
        .map(|c| c.0)
        .collect();
    near.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    near.dedup();
    for c in near {
        let v = SignedPolyValue::new(theta, c);
        if v.value.is_zero() {
            continue;
        }
        let a = theta.abs(&v.value)?;
        let better = match &best {
            None => true,
            Some((_, b)) => theta.lt(&a, b)?,
        };
        if better {
            best = Some((v, a));
        }
    }
    Ok(best.map(|b| b.0))
}

fn finish(theta: &ExactReal, n_max: usize, pool: Pool, margin: f64, nodes: u64) -> Result<EllBound> {
    let witness = select(theta, pool, margin)?.expect("the constant 1 is always a candidate");
    Ok(EllBound {
        theta: theta.clone(),
        n_max,
        min_abs: witness.value.approx().abs(),
        witness,
        nodes,
    })
}

struct Search<'a> {
    pw: &'a [f64],
    /// `tail[j] = Σ_{k<j} θ^k`
    tail: &'a [f64],
    margin: f64,
    best: &'a AtomicU64,
    nodes: &'a AtomicU64,
    abort: &'a AtomicBool,
}

impl Search<'_> {
    /// Fixes `s_{j-1}, …, s_0` below the prefix already in `coeffs`.
    fn dfs(&self, j: usize, partial: f64, coeffs: &mut [i8], pool: &mut Pool, local: &mut u64) {
        *local += 1;
        if *local & 0xfff == 0 {
            let total = self.nodes.fetch_add(0x1000, AtomicOrdering::Relaxed) + 0x1000;
            if total > ELL_NODE_CAP {
                self.abort.store(true, AtomicOrdering::Relaxed);
            }
        }
        if self.abort.load(AtomicOrdering::Relaxed) {
            return;
        }
        let best = f64::from_bits(self.best.load(AtomicOrdering::Relaxed));
        if partial.abs() - self.tail[j] > best + self.margin {
            return;
        }
        if j == 0 {
            pool.leaf(coeffs, partial, self.margin, self.best);
            return;
        }
        for s in [-1i8, 0, 1] {
            coeffs[j - 1] = s;
            self.dfs(j - 1, partial + f64::from(s) * self.pw[j - 1], coeffs, pool, local);
        }
        coeffs[j - 1] = 0;
    }
}

/// Degree-`≤ n_max` minimum of `|ρ|` by branch and bound.
///
/// The leading coefficient is normalized to `+1`. Subtrees are split by
/// degree and the next two coefficients and searched in parallel against a
/// shared incumbent that only ever decreases.
pub fn ell_upper(theta: &ExactReal, n_max: usize) -> Result<EllBound> {
    check_theta(theta, n_max)?;
    let (pw, margin) = powers_f64(theta.approx(), n_max);
    let tail: Vec<f64> = (0..=n_max + 1).map(|j| pw[..j.min(pw.len())].iter().sum()).collect();
    let best = AtomicU64::new(1f64.to_bits());
    let nodes = AtomicU64::new(0);
    let abort = AtomicBool::new(false);
    let search = Search {
        pw: &pw,
        tail: &tail,
        margin,
        best: &best,
        nodes: &nodes,
        abort: &abort,
    };
    let mut tasks: Vec<Vec<i8>> = Vec::new();
    for d in 0..=n_max {
        let fixed = d.min(2);
        for code in 0..3usize.pow(fixed as u32) {
            let mut coeffs = vec![0i8; d + 1];
            coeffs[d] = 1;
            let mut c = code;
            for t in 0..fixed {
                coeffs[d - 1 - t] = (c % 3) as i8 - 1;
                c /= 3;
            }
            tasks.push(coeffs);
        }
    }
    let pool = tasks
        .into_par_iter()
        .map(|mut coeffs| {
            let d = coeffs.len() - 1;
            let j = d - d.min(2);
            let partial: f64 = (j..=d).map(|k| f64::from(coeffs[k]) * pw[k]).sum();
            let mut pool = Pool::default();
            let mut local = 0u64;
            search.dfs(j, partial, &mut coeffs, &mut pool, &mut local);
            nodes.fetch_add(local & 0xfff, AtomicOrdering::Relaxed);
            pool
        })
        .reduce(Pool::default, Pool::merge);
    if abort.load(AtomicOrdering::Relaxed) {
        let b = f64::from_bits(best.load(AtomicOrdering::Relaxed));
        return Err(Error::ResourceLimit {
            what: format!("branch-and-bound nodes (best bound so far {b:.6})"),
            needed: u128::from(nodes.load(AtomicOrdering::Relaxed)),
            cap: u128::from(ELL_NODE_CAP),
        });
    }
    finish(theta, n_max, pool, margin, nodes.load(AtomicOrdering::Relaxed))
}

/// Exhaustive counterpart of [`ell_upper`] over all `3^{n_max+1}` vectors.
pub fn ell_brute(theta: &ExactReal, n_max: usize) -> Result<EllBound> {
    check_theta(theta, n_max)?;
    if n_max > BRUTE_DEGREE_CAP {
        return Err(Error::ResourceLimit {
            what: "brute-force degree".into(),
            needed: n_max as u128,
            cap: BRUTE_DEGREE_CAP as u128,
        });
    }
    let (pw, margin) = powers_f64(theta.approx(), n_max);
    let total = 3usize.pow(n_max as u32 + 1);
    let mut values: Vec<(Vec<i8>, f64)> = Vec::new();
    let mut suspects = Vec::new();
    for code in 0..total {
        let mut c = code;
        let full: Vec<i8> = (0..=n_max)
            .map(|_| {
                let s = (c % 3) as i8 - 1;
                c /= 3;
                s
            })
            .collect();
        let Some(d) = full.iter().rposition(|&s| s != 0) else {
            continue;
        };
        if full[d] != 1 {
            continue;
        }
        let coeffs = full[..=d].to_vec();
        let v: f64 = coeffs.iter().zip(&pw).map(|(&s, p)| f64::from(s) * p).sum();
        if v.abs() <= margin {
            suspects.push(coeffs);
        } else {
            values.push((coeffs, v.abs()));
        }
    }
    let pool = Pool {
        candidates: values,
        suspects,
    };
    finish(theta, n_max, pool, margin, total as u64)
}

/// Comparison of a degree-bounded minimum with `2/(2+θ)`.
#[derive(Clone, Debug, Serialize)]
pub struct SeparationReport {
    pub theta: String,
    pub n_max: usize,
    /// Minimum over degrees `≤ n_max`; an upper bound for the infimum.
    pub min_abs: f64,
    pub witness_coeffs: Vec<i8>,
    pub bound_2_over_2_plus_theta: f64,
    /// `θ ∈ (3/2, 2)` and `θ ≠ 1/ω_m`, where the bound is a theorem.
    pub bound_applies: bool,
    /// The minimum found is exactly below the bound and the bound applies.
    pub certified: bool,
    /// `Some(m)` when `θ = 1/ω_m`.
    pub multinacci: Option<usize>,
}

/// [`ell_upper`] together with the comparison against `2/(2+θ)`, for any `θ > 1`.
pub fn ell_report(theta: &ExactReal, n_max: usize) -> Result<SeparationReport> {
    let ell = ell_upper(theta, n_max)?;
    let multinacci = inverse_multinacci_index(theta)?;
    let in_range = theta.cmp_rational(&q(3, 2)) == Ordering::Greater
        && theta.cmp_rational(&qi(2)) == Ordering::Less;
    let bound_applies = in_range && multinacci.is_none();
    let abs = theta.abs(&ell.witness.value)?;
    // |ρ| < 2/(2+θ)  ⇔  |ρ|(2+θ) < 2
    let two_plus = theta.add(&theta.int(2), &theta.generator());
    let below = theta.lt(&theta.mul(&abs, &two_plus), &theta.int(2))?;
    Ok(SeparationReport {
        theta: theta.to_string(),
        n_max,
        min_abs: ell.min_abs,
        witness_coeffs: ell.witness.coeffs.clone(),
        bound_2_over_2_plus_theta: 2.0 / (2.0 + theta.approx()),
        bound_applies,
        certified: bound_applies && below,
        multinacci,
    })
}

/// [`ell_report`] restricted to `θ ∈ (3/2, 2)`.
pub fn separation_bound_check(theta: &ExactReal, n_max: usize) -> Result<SeparationReport> {
    if theta.cmp_rational(&q(3, 2)) != Ordering::Greater || theta.cmp_rational(&qi(2)) != Ordering::Less {
        return domain(format!("theta must lie in (3/2, 2), got {theta}"));
    }
    ell_report(theta, n_max)
}
