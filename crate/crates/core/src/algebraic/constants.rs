//! The named algebraic constants of the golden gasket family and the
//! dimension formulas built from them.

use num_bigint::BigInt;
use num_traits::One;

use super::number::{isolate_root, AlgebraicNumber};
use super::poly::{q, qi, QPoly, Q};
use crate::error::{domain, Error, Result};

/// Default isolation width used for display values.
pub fn default_tol() -> Q {
    Q::new(BigInt::one(), BigInt::from(10u64).pow(15))
}

/// `x^m + … + x - 1`
pub fn multinacci_poly(m: usize) -> QPoly {
    let mut c = vec![1i64; m + 1];
    c[0] = -1;
    QPoly::from_ints(&c)
}

/// `ω_m`, the positive root of `x^m + … + x = 1`, in `(1/2, 2/3)`.
pub fn multinacci(m: usize) -> Result<AlgebraicNumber> {
    if m < 2 {
        return domain(format!("multinacci index must be at least 2, got {m}"));
    }
    isolate_root(&multinacci_poly(m), q(1, 2), q(2, 3), &default_tol())
}

/// `d(d+1)/2 · t^(m+1) - (d+1) t + 1`
pub fn tau_poly(m: usize, d: usize) -> QPoly {
    let mut c = vec![Q::from_integer(0.into()); m + 2];
    c[0] = qi(1);
    c[1] = -qi(d as i64 + 1);
    c[m + 1] = qi((d * (d + 1) / 2) as i64);
    QPoly::new(c)
}

/// `τ_{m,d}`, the smallest positive root of [`tau_poly`]; it lies in
/// `(1/(d+1), 2/(d+1))`.
pub fn tau(m: usize, d: usize) -> Result<AlgebraicNumber> {
    if m < 2 || d < 2 {
        return domain(format!("tau needs m >= 2 and d >= 2, got m={m}, d={d}"));
    }
    let k = d as i64 + 1;
    isolate_root(&tau_poly(m, d), q(1, k), q(2, k), &default_tol())
}

/// `2(t^(m-1) + … + t) - 1`, which is `(2t^m - 3t + 1)/(t - 1)`.
pub fn sigma_poly(m: usize) -> QPoly {
    let mut c = vec![2i64; m];
    c[0] = -1;
    QPoly::from_ints(&c)
}

/// `σ_m`, the smaller positive root of `2t^m - 3t + 1`.
pub fn sigma(m: usize) -> Result<AlgebraicNumber> {
    if m < 2 {
        return domain(format!("sigma index must be at least 2, got {m}"));
    }
    isolate_root(&sigma_poly(m), q(1, 3), q(2, 3), &default_tol())
}

/// `2x^3 - 2x^2 + 2x - 1`
pub fn lambda_star_poly() -> QPoly {
    QPoly::from_ints(&[-1, 2, -2, 2])
}

/// `λ*`, the real root of `x^3 - x^2 + x = 1/2`.
pub fn lambda_star() -> AlgebraicNumber {
    isolate_root(&lambda_star_poly(), q(3, 5), q(33, 50), &default_tol())
        .expect("lambda-star is isolated in (0.6, 0.66)")
}

/// `1/ω_m`, the root of `x^m = x^(m-1) + … + 1` in `(1, 2)`.
pub fn multinacci_inverse(m: usize) -> Result<AlgebraicNumber> {
    multinacci(m)?.recip()
}

/// The four Pisot numbers below 3/2, in increasing order.
pub fn small_pisot(k: usize) -> Result<AlgebraicNumber> {
    let poly = match k {
        1 => QPoly::from_ints(&[-1, -1, 0, 1]),
        2 => QPoly::from_ints(&[-1, 0, 0, -1, 1]),
        3 => QPoly::from_ints(&[-1, 0, 1, -1, -1, 1]),
        4 => QPoly::from_ints(&[-1, 0, -1, 1]),
        _ => return domain(format!("small Pisot index must be 1..=4, got {k}")),
    };
    isolate_root(&poly, qi(1), q(3, 2), &default_tol())
}

/// Hausdorff dimension `log τ_{m,d} / log ω_m` of the golden `d`-gasket.
pub fn gasket_dimension(m: usize, d: usize) -> Result<f64> {
    let t = tau(m, d)?;
    let w = multinacci(m)?;
    Ok(t.approx().ln() / w.approx().ln())
}

/// Hausdorff dimension `log σ_m / log ω_m` of the set of unique addresses.
pub fn uniqueness_dimension(m: usize) -> Result<f64> {
    let s = sigma(m)?;
    let w = multinacci(m)?;
    Ok(s.approx().ln() / w.approx().ln())
}

/// Dimension `log(d+1) / -log λ` for `0 < λ ≤ 1/2`.
pub fn sierpinski_dimension(d: usize, lambda: f64) -> Result<f64> {
    if !(lambda > 0.0 && lambda <= 0.5) {
        return Err(Error::Domain(format!(
            "sierpinski dimension needs 0 < lambda <= 1/2, got {lambda}"
        )));
    }
    Ok(((d + 1) as f64).ln() / -lambda.ln())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;

    #[test]
    fn multinacci_values() {
        assert!((multinacci(2).unwrap().approx() - 0.61803).abs() < 5e-6);
        assert!((multinacci(3).unwrap().approx() - 0.54369).abs() < 5e-6);
        assert!((multinacci(9).unwrap().approx() - 0.50049).abs() < 5e-6);
        assert!(matches!(multinacci(1), Err(Error::Domain(_))));
    }

    fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
        let s = f(lo) > 0.0;
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if (f(mid) > 0.0) == s {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn tau_values() {
        let expected = 2.0 / 3f64.sqrt() * (7.0 * std::f64::consts::PI / 18.0).cos();
        assert!((tau(2, 2).unwrap().approx() - expected).abs() < 1e-12);
        let t23 = bisect(|t| 6.0 * t * t * t - 4.0 * t + 1.0, 0.0, 0.5);
        assert!((tau(2, 3).unwrap().approx() - t23).abs() < 1e-12);
        assert!((t23 - 0.28456).abs() < 1e-5);
        let t24 = bisect(|t| 10.0 * t * t * t - 5.0 * t + 1.0, 0.0, 0.4);
        assert!((tau(2, 4).unwrap().approx() - t24).abs() < 1e-12);
        assert!((t24 - 0.22183).abs() < 1e-5);
    }

    #[test]
    fn sigma_values() {
        assert_eq!(sigma(2).unwrap().as_rational(), Some(&q(1, 2)));
        let s3 = (3f64.sqrt() - 1.0) / 2.0;
        assert!((sigma(3).unwrap().approx() - s3).abs() < 1e-13);
        let s12 = sigma(12).unwrap();
        assert_eq!(s12.cmp_rational(&q(1, 3)), Ordering::Greater);
        assert_eq!(s12.cmp_rational(&q(35, 100)), Ordering::Less);
    }

    #[test]
    fn lambda_star_value() {
        assert!((lambda_star().approx() - 0.6478).abs() < 5e-5);
    }

    #[test]
    fn dimensions() {
        assert!((gasket_dimension(2, 2).unwrap() - 1.93063).abs() < 1.5e-5);
        assert!((gasket_dimension(4, 2).unwrap() - 1.65411).abs() < 1.5e-5);
        assert!((gasket_dimension(3, 5).unwrap() - 2.92).abs() < 0.005);
        assert!((uniqueness_dimension(2).unwrap() - 1.44042).abs() < 1e-5);
        let s3 = (3f64.sqrt() - 1.0) / 2.0;
        let w3 = bisect(|t| t * t * t + t * t + t - 1.0, 0.5, 0.6);
        assert!((uniqueness_dimension(3).unwrap() - s3.ln() / w3.ln()).abs() < 1e-12);
        assert!(uniqueness_dimension(3).unwrap() < gasket_dimension(3, 2).unwrap());
        assert!((sierpinski_dimension(2, 0.5).unwrap() - 3f64.log2()).abs() < 1e-12);
        assert!((sierpinski_dimension(3, 0.5).unwrap() - 2.0).abs() < 1e-12);
        assert!((sierpinski_dimension(2, 0.25).unwrap() - 0.7925).abs() < 1e-4);
        assert!(sierpinski_dimension(2, 0.6).is_err());
    }

    #[test]
    fn pisot_numbers_increase() {
        let v: Vec<f64> = (1..=4).map(|k| small_pisot(k).unwrap().approx()).collect();
        assert!((v[0] - 1.324718).abs() < 1e-6);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
        assert!(v[3] < 1.5);
    }

    #[test]
    fn multinacci_inverse_is_reciprocal() {
        let t = multinacci_inverse(2).unwrap();
        assert!((t.approx() - 1.6180339887).abs() < 1e-9);
    }
}
