//! The gap property: distinct sums `Σ_{k≤n} a_k λ^k` with `a_k ∈ {0, 1}`
//! differ by at least `λ^{n+1}`.
//!
//! The minimum difference over ordered pairs is the minimum gap between
//! consecutive distinct values, so sorting the `2^{n+1}` sums decides it.

use std::cmp::Ordering;
use std::collections::HashMap;

use serde::Serialize;

use crate::algebraic::{multinacci, ExactReal, FieldElem};
use crate::error::{domain, Error, Result};

/// Largest `n` accepted by [`gap_check`].
pub const GAP_DEGREE_CAP: usize = 20;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GapReport {
    pub lambda: String,
    pub n: usize,
    pub holds: bool,
    pub distinct_values: usize,
    pub min_gap: f64,
    /// A pair `(a, a')` with `0 < Σ (a_k - a'_k) λ^k < λ^{n+1}`.
    pub counterexample: Option<(Vec<u8>, Vec<u8>)>,
}

pub fn gap_check(lambda: &ExactReal, n: usize) -> Result<GapReport> {
    if n > GAP_DEGREE_CAP {
        return Err(Error::ResourceLimit {
            what: "gap check length".into(),
            needed: n as u128,
            cap: GAP_DEGREE_CAP as u128,
        });
    }
    let powers = lambda.gen_powers(n + 1);
    let mut values: HashMap<FieldElem, Vec<u8>> = HashMap::new();
    for code in 0u32..1 << (n + 1) {
        let digits: Vec<u8> = (0..=n).map(|k| ((code >> k) & 1) as u8).collect();
        let v = digits
            .iter()
            .zip(&powers)
            .filter(|(a, _)| **a == 1)
            .fold(lambda.zero(), |acc, (_, p)| lambda.add(&acc, p));
        values.entry(v).or_insert(digits);
    }
    let mut sorted: Vec<(FieldElem, Vec<u8>)> = values.into_iter().collect();
    let mut failure = None;
    sorted.sort_by(|a, b| match lambda.cmp(&a.0, &b.0) {
        Ok(o) => o,
        Err(e) => {
            failure.get_or_insert(e);
            Ordering::Equal
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    let bound = &powers[n + 1];
    let mut holds = true;
    let mut counterexample = None;
    let mut min_gap = f64::INFINITY;
    for pair in sorted.windows(2) {
        let diff = lambda.sub(&pair[1].0, &pair[0].0);
        min_gap = min_gap.min(diff.approx());
        if holds && lambda.lt(&diff, bound)? {
            holds = false;
            counterexample = Some((pair[1].1.clone(), pair[0].1.clone()));
        }
    }
    Ok(GapReport {
        lambda: lambda.to_string(),
        n,
        holds,
        distinct_values: sorted.len(),
        min_gap,
        counterexample,
    })
}

/// The gap property at `ω_m`.
pub fn erdos_joo_gap_check(m: usize, n: usize) -> Result<bool> {
    if !(2..=5).contains(&m) {
        return domain(format!("m must lie in 2..=5, got {m}"));
    }
    let w = ExactReal::algebraic(multinacci(m)?, format!("omega:{m}"));
    Ok(gap_check(&w, n)?.holds)
}
