//! Dense univariate polynomials over the rationals, with Sturm root counting.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Polynomial with rational coefficients in ascending degree order.
/// Trailing zero coefficients are always stripped, so the zero polynomial
/// has an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QPoly {
    coeffs: Vec<Q>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| qi(c)).collect())
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().cloned().map(Q::from_integer).collect())
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Q) -> Self {
        Self::new(vec![c])
    }

    /// `x - r`
    pub fn linear_root(r: Q) -> Self {
        Self::new(vec![-r, Q::one()])
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Q> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.coeffs.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + to_f64(c);
        }
        acc
    }

    pub fn sign_at(&self, x: &Q) -> Ordering {
        self.eval(x).cmp(&Q::zero())
    }

    /// Interval Horner evaluation over `[lo, hi]`; the result encloses the
    /// range of the polynomial on that interval.
    pub fn eval_interval(&self, lo: &Q, hi: &Q) -> (Q, Q) {
        let mut a = Q::zero();
        let mut b = Q::zero();
        for c in self.coeffs.iter().rev() {
            let products = [&a * lo, &a * hi, &b * lo, &b * hi];
            let mut min = products[0].clone();
            let mut max = products[0].clone();
            for p in &products[1..] {
                if *p < min {
                    min = p.clone();
                }
                if *p > max {
                    max = p.clone();
                }
            }
            a = min + c;
            b = max + c;
        }
        (a, b)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * qi(k as i64))
                .collect(),
        )
    }

    pub fn scale(&self, s: &Q) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Q::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.lead().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Q::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = &rem[top] / &lead;
            if !c.is_zero() {
                for (k, dc) in divisor.coeffs.iter().enumerate() {
                    rem[top - dd + k] -= &c * dc;
                }
            }
            quot[top - dd] = c;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            Some(l) => self.scale(&l.recip()),
            None => Self::zero(),
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Sturm sequence `p, p', -rem(p, p'), ...`.
    pub fn sturm_chain(&self) -> Vec<QPoly> {
        let mut chain = vec![self.clone()];
        if self.degree().unwrap_or(0) == 0 {
            return chain;
        }
        chain.push(self.derivative());
        loop {
            let n = chain.len();
            let r = chain[n - 2].rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r.neg());
        }
        chain
    }

    /// Number of distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count_roots(&self, lo: &Q, hi: &Q) -> usize {
        let chain = self.sturm_chain();
        let v_lo = sign_variations(&chain, lo);
        let v_hi = sign_variations(&chain, hi);
        v_lo.saturating_sub(v_hi)
    }

    /// Number of distinct real roots in the open interval `(lo, hi)`.
    pub fn count_roots_open(&self, lo: &Q, hi: &Q) -> usize {
        let n = self.count_roots(lo, hi);
        if self.eval(hi).is_zero() {
            n - 1
        } else {
            n
        }
    }

    /// Cauchy bound: every real root has absolute value below this.
    pub fn root_bound(&self) -> Q {
        let lead = self.lead().expect("zero polynomial has no root bound").abs();
        let max = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Q::zero);
        Q::one() + max / lead
    }

    /// Integer coefficients, if every coefficient is an integer.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

fn sign_variations(chain: &[QPoly], x: &Q) -> usize {
    let mut last = Ordering::Equal;
    let mut count = 0;
    for p in chain {
        let s = p.sign_at(x);
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

pub fn to_f64(x: &Q) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or_else(|| {
        // Ratio::to_f64 fails only for huge numerators and denominators
        let n = x.numer().to_f64().unwrap_or(f64::NAN);
        let d = x.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Exact rational from a finite `f64`.
pub fn from_f64_exact(v: f64) -> Option<Q> {
    Q::from_float(v)
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let show_coeff = k == 0 || !a.is_one();
            if show_coeff {
                write!(f, "{a}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn horner_and_derivative() {
        let p = QPoly::from_ints(&[-1, 1, 1]);
        assert_eq!(p.eval(&qi(2)), qi(5));
        assert_eq!(p.derivative(), QPoly::from_ints(&[1, 2]));
    }

    #[test]
    fn division_identity() {
        let a = QPoly::from_ints(&[1, -3, 0, 2]);
        let b = QPoly::from_ints(&[-1, 1]);
        let (quot, rem) = a.div_rem(&b);
        assert!(rem.is_zero());
        assert_eq!(quot.mul(&b), a);
        assert_eq!(quot, QPoly::from_ints(&[-1, 2, 2]));
    }

    #[test]
    fn sturm_counts_roots() {
        // (x - 1)(x - 2)(x + 3)
        let p = QPoly::from_ints(&[6, -7, 0, 1]);
        assert_eq!(p.count_roots(&qi(-10), &qi(10)), 3);
        assert_eq!(p.count_roots(&q(1, 2), &q(5, 2)), 2);
        assert_eq!(p.count_roots(&qi(3), &qi(5)), 0);
        // repeated root counts once
        let sq = QPoly::from_ints(&[1, -2, 1]);
        assert_eq!(sq.count_roots(&qi(0), &qi(3)), 1);
    }

    #[test]
    fn gcd_finds_common_factor() {
        let a = QPoly::from_ints(&[1, -3, 0, 2]);
        let b = QPoly::from_ints(&[-1, 0, 1]);
        assert_eq!(a.gcd(&b), QPoly::from_ints(&[-1, 1]));
    }

    #[test]
    fn interval_eval_encloses() {
        let p = QPoly::from_ints(&[1, -3, 0, 2]);
        let (lo, hi) = p.eval_interval(&q(1, 4), &q(1, 2));
        for k in 0..=8 {
            let x = q(1, 4) + q(k, 32);
            let v = p.eval(&x);
            assert!(lo <= v && v <= hi);
        }
    }

    #[test]
    fn display() {
        assert_eq!(QPoly::from_ints(&[-1, 1, 1]).to_string(), "x^2 + x - 1");
    }
}
