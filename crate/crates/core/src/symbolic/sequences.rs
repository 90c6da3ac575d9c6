//! Hole-counting sequences and their generating functions.

use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::algebraic::poly::{qi, Q};
use crate::error::{domain, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SeqKind {
    /// Genuine holes per layer at `ω_2`.
    U,
    /// Hexagonal holes at `ω_m`.
    H,
    /// Non-hexagonal holes at `ω_m`.
    P,
    /// Trapezium holes at `ω_2`.
    Trapezium,
}

/// `values[k]` is the term with index `k`, starting at 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountingSeq {
    pub kind: SeqKind,
    pub m: Option<usize>,
    pub values: Vec<i128>,
}

impl CountingSeq {
    /// Checks the defining recurrence at every index past the seeds.
    pub fn satisfies_recurrence(&self) -> bool {
        let v = &self.values;
        if v.iter().any(|x| *x < 0) {
            return false;
        }
        match (self.kind, self.m) {
            (SeqKind::U, _) => (3..v.len()).all(|n| v[n] == 3 * v[n - 1] - 3 * v[n - 3]),
            (SeqKind::H, Some(m)) => (m + 1..v.len()).all(|k| v[k] == 2 * v[k + 1 - m..k].iter().sum::<i128>()),
            (SeqKind::Trapezium, _) => (2..v.len()).all(|n| v[n] == 2 * v[n - 1]),
            (SeqKind::P, Some(_)) | (SeqKind::H, None) | (SeqKind::P, None) => false,
        }
    }

    /// `values[k+1] / values[k]` for the last available pair.
    pub fn growth_ratio(&self) -> Option<f64> {
        let v = &self.values;
        let n = v.len();
        (n >= 2 && v[n - 2] != 0).then(|| v[n - 1] as f64 / v[n - 2] as f64)
    }
}

fn overflow(what: &str, k: usize) -> Error {
    Error::ResourceLimit {
        what: format!("{what} term {k} in 128-bit integers"),
        needed: k as u128,
        cap: k.saturating_sub(1) as u128,
    }
}

/// `u_0 = 1, u_1 = 3, u_2 = 9, u_{n+3} = 3 u_{n+2} - 3 u_n`.
pub fn u_sequence(n_max: usize) -> Result<CountingSeq> {
    let mut v: Vec<i128> = vec![1, 3, 9];
    for n in 3..=n_max {
        let next = v[n - 1]
            .checked_mul(3)
            .and_then(|a| a.checked_sub(3 * v[n - 3]))
            .ok_or_else(|| overflow("u", n))?;
        v.push(next);
    }
    v.truncate(n_max + 1);
    Ok(CountingSeq {
        kind: SeqKind::U,
        m: None,
        values: v,
    })
}

fn check_m(m: usize) -> Result<()> {
    if m < 3 {
        return domain(format!(
            "the hexagon decomposition needs m >= 3, got {m}; use trapezium_counts for m = 2"
        ));
    }
    Ok(())
}

/// `h_k = 0` for `k < m`, `h_m = 3`, `h_k = 2(h_{k-m+1} + … + h_{k-1})`.
pub fn h_sequence(m: usize, k_max: usize) -> Result<CountingSeq> {
    check_m(m)?;
    let mut v: Vec<i128> = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let x = match k.cmp(&m) {
            std::cmp::Ordering::Less => 0,
            std::cmp::Ordering::Equal => 3,
            std::cmp::Ordering::Greater => v[k + 1 - m..k]
                .iter()
                .try_fold(0i128, |a, b| a.checked_add(*b))
                .and_then(|s| s.checked_mul(2))
                .ok_or_else(|| overflow("h", k))?,
        };
        v.push(x);
    }
    Ok(CountingSeq {
        kind: SeqKind::H,
        m: Some(m),
        values: v,
    })
}

/// `p_k = 0` for `k < m`, `p_m = p_{m+1} = 3`,
/// `p_k = h_{k-m} + 3(h_{k-m+1} + … + h_{k-2})`.
pub fn p_sequence(m: usize, k_max: usize) -> Result<CountingSeq> {
    let h = h_sequence(m, k_max)?.values;
    let mut v = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let x = if k < m {
            0
        } else if k <= m + 1 {
            3
        } else {
            h[k - m + 1..=k - 2]
                .iter()
                .try_fold(0i128, |a, b| a.checked_add(*b))
                .and_then(|s| s.checked_mul(3))
                .and_then(|s| s.checked_add(h[k - m]))
                .ok_or_else(|| overflow("p", k))?
        };
        v.push(x);
    }
    Ok(CountingSeq {
        kind: SeqKind::P,
        m: Some(m),
        values: v,
    })
}

/// Trapezium hole counts `3·2^{n-1}`, `n ≥ 1`, at `m = 2`; index 0 holds 0.
pub fn trapezium_counts(n_max: usize) -> Result<CountingSeq> {
    let mut v = vec![0i128];
    for n in 1..=n_max {
        let x = 1i128
            .checked_shl(n as u32 - 1)
            .filter(|_| n < 126)
            .map(|p| 3 * p)
            .ok_or_else(|| overflow("trapezium", n))?;
        v.push(x);
    }
    Ok(CountingSeq {
        kind: SeqKind::Trapezium,
        m: Some(2),
        values: v,
    })
}

/// First `k_max + 1` Taylor coefficients of `num / den`, `den[0] ≠ 0`.
pub fn series_divide(num: &[Q], den: &[Q], k_max: usize) -> Vec<Q> {
    assert!(!den[0].is_zero());
    let mut c: Vec<Q> = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let mut s = num.get(k).cloned().unwrap_or_else(Q::zero);
        for i in 1..=k.min(den.len() - 1) {
            s -= &den[i] * &c[k - i];
        }
        c.push(s / &den[0]);
    }
    c
}

fn sparse(terms: &[(usize, i64)]) -> Vec<Q> {
    let len = terms.iter().map(|t| t.0).max().unwrap_or(0) + 1;
    let mut v = vec![Q::zero(); len];
    for &(k, c) in terms {
        v[k] += qi(c);
    }
    v
}

/// Denominator `1 - 3t + 2t^m` shared by both generating functions.
fn gf_denominator(m: usize) -> Vec<Q> {
    sparse(&[(0, 1), (1, -3), (m, 2)])
}

/// Taylor coefficients of `Q(t) = 3t^m(1-t) / (1-3t+2t^m)`.
pub fn h_generating_function(m: usize, k_max: usize) -> Vec<Q> {
    series_divide(&sparse(&[(m, 3), (m + 1, -3)]), &gf_denominator(m), k_max)
}

/// Taylor coefficients of `P(t) = 3t^m(1-2t+t^{m+1}) / (1-3t+2t^m)`.
pub fn p_generating_function(m: usize, k_max: usize) -> Vec<Q> {
    series_divide(
        &sparse(&[(m, 3), (m + 1, -6), (2 * m + 1, 3)]),
        &gf_denominator(m),
        k_max,
    )
}

/// Whether both generating functions reproduce the recurrences up to `k_max`.
pub fn gf_series_check(m: usize, k_max: usize) -> Result<bool> {
    let h = h_sequence(m, k_max)?;
    let p = p_sequence(m, k_max)?;
    let agree = |gf: Vec<Q>, seq: &CountingSeq| {
        gf.iter()
            .zip(&seq.values)
            .all(|(c, v)| c.is_integer() && c.to_integer().to_i128() == Some(*v))
    };
    Ok(agree(h_generating_function(m, k_max), &h) && agree(p_generating_function(m, k_max), &p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::tau;

    #[test]
    fn u_values() {
        let u = u_sequence(6).unwrap();
        assert_eq!(u.values, vec![1, 3, 9, 24, 63, 162, 414]);
        assert!(u.satisfies_recurrence());
        assert_eq!(u_sequence(1).unwrap().values, vec![1, 3]);
    }

    #[test]
    fn u_growth_matches_tau() {
        let u = u_sequence(80).unwrap();
        let t = tau(2, 2).unwrap().approx();
        assert!((u.growth_ratio().unwrap() - 1.0 / t).abs() < 1e-9);
    }

    #[test]
    fn hexagon_values() {
        let h = h_sequence(3, 6).unwrap();
        assert_eq!(h.values[3..], [3, 6, 18, 48]);
        let p = p_sequence(3, 6).unwrap();
        assert_eq!(p.values[3..5], [3, 3]);
        // p_5 = h_2 + 3 h_3
        assert_eq!(p.values[5], 9);
        assert!(h.satisfies_recurrence());
        assert!(h_sequence(2, 5).is_err());
    }

    #[test]
    fn trapezia() {
        assert_eq!(trapezium_counts(5).unwrap().values, vec![0, 3, 6, 12, 24, 48]);
        assert!(trapezium_counts(200).is_err());
    }

    #[test]
    fn generating_functions_match_recurrences() {
        for m in 3..=6 {
            assert!(gf_series_check(m, 30).unwrap(), "m={m}");
            assert_eq!(h_generating_function(m, m)[m], qi(3));
        }
    }

    #[test]
    fn series_division_inverts_geometric_series() {
        let c = series_divide(&[qi(1)], &[qi(1), qi(-1)], 5);
        assert!(c.iter().all(|x| *x == qi(1)));
    }

    #[test]
    fn overflow_is_reported() {
        assert!(matches!(h_sequence(3, 200), Err(Error::ResourceLimit { .. })));
    }
}
