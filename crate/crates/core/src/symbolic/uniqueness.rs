//! Words over `{0, …, d}` avoiding every factor `i j^m` with `i ≠ j`.
//!
//! Such a word is an initial run of any length followed by runs of length at
//! most `m - 1`, so a transfer matrix on run lengths counts them.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{domain, Error, Result};

/// Largest word length accepted by [`count_unique_addresses`].
pub const UNIQUE_LENGTH_CAP: usize = 100_000;

/// Largest word length accepted by [`count_unique_addresses_brute`].
pub const BRUTE_LENGTH_CAP: usize = 15;

/// Number of length-`n` words over three letters with no factor `i j^m`.
pub fn count_unique_addresses(m: usize, n: usize) -> Result<BigUint> {
    if m < 2 || n == 0 {
        return domain(format!("need m >= 2 and n >= 1, got m = {m}, n = {n}"));
    }
    if n > UNIQUE_LENGTH_CAP {
        return Err(Error::ResourceLimit {
            what: "word length".into(),
            needed: n as u128,
            cap: UNIQUE_LENGTH_CAP as u128,
        });
    }
    let letters = BigUint::from(3u32);
    let others = BigUint::from(2u32);
    // words still in their initial run, and words whose last run has length ℓ
    let initial = letters;
    let mut runs: Vec<BigUint> = vec![BigUint::zero(); m - 1];
    for _ in 1..n {
        let switched = &others * (&initial + runs.iter().sum::<BigUint>());
        runs.rotate_right(1);
        runs[0] = switched;
    }
    Ok(initial + runs.into_iter().sum::<BigUint>())
}

/// Enumerates all `3^n` words; an oracle for [`count_unique_addresses`].
pub fn count_unique_addresses_brute(m: usize, n: usize) -> Result<u64> {
    if m < 2 || n == 0 {
        return domain(format!("need m >= 2 and n >= 1, got m = {m}, n = {n}"));
    }
    if n > BRUTE_LENGTH_CAP {
        return Err(Error::ResourceLimit {
            what: "brute-force word length".into(),
            needed: n as u128,
            cap: BRUTE_LENGTH_CAP as u128,
        });
    }
    let mut count = 0;
    let mut w = vec![0u8; n];
    for mut x in 0..3u64.pow(n as u32) {
        for slot in w.iter_mut() {
            *slot = (x % 3) as u8;
            x /= 3;
        }
        let bad = (0..(n + 1).saturating_sub(m + 1)).any(|p| {
            let j = w[p + 1];
            w[p] != j && w[p + 1..=p + m].iter().all(|&c| c == j)
        });
        if !bad {
            count += 1;
        }
    }
    Ok(count)
}

/// `log(count) / (n · log σ_m⁻¹)`.
pub fn growth_exponent(m: usize, n: usize, sigma: f64) -> Result<f64> {
    let c = count_unique_addresses(m, n)?;
    let bits = c.bits();
    // ln of a big integer via its leading 53 bits
    let shift = bits.saturating_sub(53);
    let top: BigUint = &c >> shift;
    let mantissa = top.iter_u64_digits().next().unwrap_or(0) as f64;
    let ln = mantissa.ln() + shift as f64 * std::f64::consts::LN_2;
    Ok(ln / (n as f64 * (1.0 / sigma).ln()))
}

/// `count(n) / count(n-1)` for `n ≥ 2`.
pub fn successive_ratio(m: usize, n: usize) -> Result<f64> {
    if n < 2 {
        return domain(format!("the ratio needs n >= 2, got {n}"));
    }
    let a = BigInt::from(count_unique_addresses(m, n)?);
    let b = BigInt::from(count_unique_addresses(m, n - 1)?);
    Ok(BigRational::new(a, b).to_f64().unwrap_or(f64::NAN))
}

/// `3(2^n - 1)`, the closed form at `m = 2`.
pub fn unique_count_m2(n: usize) -> BigUint {
    BigUint::from(3u32) * ((BigUint::one() << n) - BigUint::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::sigma;

    #[test]
    fn small_counts() {
        assert_eq!(count_unique_addresses(2, 1).unwrap(), BigUint::from(3u32));
        assert_eq!(count_unique_addresses(2, 2).unwrap(), BigUint::from(9u32));
        assert_eq!(count_unique_addresses(2, 3).unwrap(), BigUint::from(21u32));
    }

    #[test]
    fn transfer_matrix_matches_enumeration() {
        for m in 2..=5 {
            for n in 1..=11 {
                let fast = count_unique_addresses(m, n).unwrap();
                assert_eq!(fast, BigUint::from(count_unique_addresses_brute(m, n).unwrap()), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn closed_form_at_m2() {
        for n in 1..=40 {
            assert_eq!(count_unique_addresses(2, n).unwrap(), unique_count_m2(n));
        }
    }

    #[test]
    fn ratio_at_m2() {
        for n in 12..=15 {
            assert!((successive_ratio(2, n).unwrap() - 2.0).abs() < 0.05);
        }
        assert!(successive_ratio(2, 1).is_err());
    }

    #[test]
    fn growth_rate_is_inverse_sigma() {
        for m in 2..=3 {
            let s = sigma(m).unwrap().approx();
            let e = growth_exponent(m, 2000, s).unwrap();
            assert!((e - 1.0).abs() < 0.05, "m={m} e={e}");
        }
    }

    #[test]
    fn limits() {
        assert!(count_unique_addresses(2, 0).is_err());
        assert!(matches!(
            count_unique_addresses(2, UNIQUE_LENGTH_CAP + 1),
            Err(Error::ResourceLimit { .. })
        ));
        assert!(count_unique_addresses_brute(2, 16).is_err());
    }
}
