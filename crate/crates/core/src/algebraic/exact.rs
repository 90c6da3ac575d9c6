//! Exact arithmetic in `Q(λ)` for a single real parameter `λ`, which is either
//! a rational or a real algebraic number.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::number::AlgebraicNumber;
use super::poly::{qi, to_f64, QPoly, Q};
use crate::error::{Error, Result};

/// Bisection rounds allowed when deciding the sign of a nonzero element.
pub const REFINEMENT_CAP: usize = 256;

const ULP: f64 = f64::EPSILON;

/// An element of `Q(λ)`, stored as its coefficient vector in the basis
/// `1, λ, …, λ^(D-1)`, together with a floating point value and a rigorous
/// bound on that value's error.
///
/// Equality and hashing use the coefficient vector only, which is canonical.
#[derive(Clone, Debug)]
pub struct FieldElem {
    coeffs: Vec<Q>,
    approx: f64,
    err: f64,
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for FieldElem {}

impl Hash for FieldElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.approx)
    }
}

impl FieldElem {
    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn approx(&self) -> f64 {
        self.approx
    }

    pub fn error_bound(&self) -> f64 {
        self.err
    }

    /// True iff the coefficient vector is zero (which is the only way the
    /// element can be zero when the modulus is irreducible).
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

/// Integer combination `Σ c_k λ^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearCombination {
    pub coeffs: Vec<i64>,
}

impl LinearCombination {
    pub fn new(coeffs: Vec<i64>) -> Self {
        LinearCombination { coeffs }
    }

    /// `λ^k`
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        LinearCombination { coeffs }
    }
}

enum Kind {
    Rational(Q),
    Algebraic { number: AlgebraicNumber, modulus: QPoly },
}

struct Inner {
    label: String,
    kind: Kind,
    value: f64,
    value_err: f64,
    degree: usize,
}

/// The parameter `λ`, with the arithmetic of the field it generates.
#[derive(Clone)]
pub struct ExactReal(Arc<Inner>);

impl fmt::Debug for ExactReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactReal({} ≈ {})", self.0.label, self.0.value)
    }
}

impl fmt::Display for ExactReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.label)
    }
}

impl ExactReal {
    pub fn rational(r: Q) -> Self {
        let label = format!("rational:{}/{}", r.numer(), r.denom());
        Self::rational_labeled(r, label)
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Self::rational(Q::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn rational_labeled(r: Q, label: impl Into<String>) -> Self {
        let value = to_f64(&r);
        ExactReal(Arc::new(Inner {
            label: label.into(),
            kind: Kind::Rational(r),
            value,
            value_err: value.abs() * ULP,
            degree: 1,
        }))
    }

    /// Field generated by an algebraic number; rational numbers collapse to
    /// the rational case.
    pub fn algebraic(number: AlgebraicNumber, label: impl Into<String>) -> Self {
        if let Some(r) = number.as_rational() {
            return Self::rational_labeled(r.clone(), label);
        }
        let poly = number.poly();
        let modulus = poly.div_rem(&poly.gcd(&poly.derivative())).0.monic();
        let degree = modulus.degree().unwrap();
        let tol = Q::new(BigInt::one(), BigInt::one() << 90);
        number.refine_to(&tol);
        let value = number.approx();
        let value_err = value.abs() * ULP + to_f64(&number.width());
        ExactReal(Arc::new(Inner {
            label: label.into(),
            kind: Kind::Algebraic { number, modulus },
            value,
            value_err,
            degree,
        }))
    }

    pub fn label(&self) -> &str {
        &self.0.label
    }

    /// Dimension of `Q(λ)` over `Q` as represented (degree of the modulus).
    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn approx(&self) -> f64 {
        self.0.value
    }

    pub fn as_rational(&self) -> Option<&Q> {
        match &self.0.kind {
            Kind::Rational(r) => Some(r),
            Kind::Algebraic { .. } => None,
        }
    }

    pub fn number(&self) -> Option<&AlgebraicNumber> {
        match &self.0.kind {
            Kind::Rational(_) => None,
            Kind::Algebraic { number, .. } => Some(number),
        }
    }

    pub fn modulus(&self) -> Option<&QPoly> {
        match &self.0.kind {
            Kind::Rational(_) => None,
            Kind::Algebraic { modulus, .. } => Some(modulus),
        }
    }

    /// Exact comparison of `λ` with a rational.
    pub fn cmp_rational(&self, r: &Q) -> Ordering {
        match &self.0.kind {
            Kind::Rational(x) => x.cmp(r),
            Kind::Algebraic { number, .. } => number.cmp_rational(r),
        }
    }

    fn elem(&self, coeffs: Vec<Q>, approx: f64, err: f64) -> FieldElem {
        debug_assert_eq!(coeffs.len(), self.0.degree);
        FieldElem { coeffs, approx, err }
    }

    pub fn constant(&self, c: Q) -> FieldElem {
        let v = to_f64(&c);
        let mut coeffs = vec![Q::zero(); self.0.degree];
        coeffs[0] = c;
        self.elem(coeffs, v, v.abs() * ULP)
    }

    pub fn int(&self, n: i64) -> FieldElem {
        self.constant(qi(n))
    }

    pub fn zero(&self) -> FieldElem {
        self.int(0)
    }

    pub fn one(&self) -> FieldElem {
        self.int(1)
    }

    /// The element `λ`.
    pub fn generator(&self) -> FieldElem {
        match &self.0.kind {
            Kind::Rational(r) => self.elem(vec![r.clone()], self.0.value, self.0.value_err),
            Kind::Algebraic { modulus, .. } => {
                let coeffs = self.reduce_poly(&QPoly::from_ints(&[0, 1]), modulus);
                self.elem(coeffs, self.0.value, self.0.value_err)
            }
        }
    }

    fn reduce_poly(&self, p: &QPoly, modulus: &QPoly) -> Vec<Q> {
        let r = if p.degree().unwrap_or(0) >= self.0.degree {
            p.rem(modulus)
        } else {
            p.clone()
        };
        (0..self.0.degree).map(|k| r.coeff(k)).collect()
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        let v = a.approx + b.approx;
        self.elem(coeffs, v, a.err + b.err + v.abs() * ULP)
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect();
        let v = a.approx - b.approx;
        self.elem(coeffs, v, a.err + b.err + v.abs() * ULP)
    }

    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        let coeffs = a.coeffs.iter().map(|x| -x).collect();
        self.elem(coeffs, -a.approx, a.err)
    }

    pub fn scale(&self, a: &FieldElem, c: &Q) -> FieldElem {
        let cv = to_f64(c);
        let coeffs = a.coeffs.iter().map(|x| x * c).collect();
        let v = a.approx * cv;
        let err = a.err * cv.abs() + a.approx.abs() * cv.abs() * ULP + v.abs() * ULP;
        self.elem(coeffs, v, err)
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let coeffs = match &self.0.kind {
            Kind::Rational(_) => vec![&a.coeffs[0] * &b.coeffs[0]],
            Kind::Algebraic { modulus, .. } => {
                let p = QPoly::new(a.coeffs.clone()).mul(&QPoly::new(b.coeffs.clone()));
                self.reduce_poly(&p, modulus)
            }
        };
        let v = a.approx * b.approx;
        let err = a.approx.abs() * b.err + b.approx.abs() * a.err + a.err * b.err + v.abs() * ULP;
        self.elem(coeffs, v, err)
    }

    pub fn pow(&self, a: &FieldElem, k: usize) -> FieldElem {
        let mut acc = self.one();
        let mut base = a.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `λ^k`
    pub fn gen_pow(&self, k: usize) -> FieldElem {
        self.pow(&self.generator(), k)
    }

    /// Powers `λ^0, …, λ^n`.
    pub fn gen_powers(&self, n: usize) -> Vec<FieldElem> {
        let g = self.generator();
        let mut out = Vec::with_capacity(n + 1);
        out.push(self.one());
        for k in 1..=n {
            let next = self.mul(&out[k - 1], &g);
            out.push(next);
        }
        out
    }

    /// The value `Σ c_k λ^k` as a reduced field element.
    pub fn reduce(&self, lc: &LinearCombination) -> FieldElem {
        let g = self.generator();
        let mut acc = self.zero();
        for &c in lc.coeffs.iter().rev() {
            acc = self.mul(&acc, &g);
            acc = self.add(&acc, &self.int(c));
        }
        acc
    }

    /// `p(λ)` for a rational polynomial `p`.
    pub fn eval_poly(&self, p: &QPoly) -> FieldElem {
        let g = self.generator();
        let mut acc = self.zero();
        for c in p.coeffs().iter().rev() {
            acc = self.mul(&acc, &g);
            acc = self.add(&acc, &self.constant(c.clone()));
        }
        acc
    }

    /// Rational interval enclosing the value of `a`.
    pub fn enclose(&self, a: &FieldElem) -> (Q, Q) {
        match &self.0.kind {
            Kind::Rational(_) => (a.coeffs[0].clone(), a.coeffs[0].clone()),
            Kind::Algebraic { number, .. } => number.enclose(&QPoly::new(a.coeffs.clone())),
        }
    }

    /// Exact sign of `a`.
    ///
    /// The zero vector is zero. Otherwise a floating point filter decides
    /// clear cases; near-zero values are settled by a common-root test
    /// against the defining polynomial and interval refinement.
    pub fn sign(&self, a: &FieldElem) -> Result<Ordering> {
        if a.is_zero() {
            return Ok(Ordering::Equal);
        }
        if a.approx.abs() > 4.0 * a.err + f64::MIN_POSITIVE {
            return Ok(if a.approx > 0.0 {
                Ordering::Greater
            } else {
                Ordering::Less
            });
        }
        match &self.0.kind {
            Kind::Rational(_) => Ok(a.coeffs[0].cmp(&Q::zero())),
            Kind::Algebraic { number, .. } => {
                let p = QPoly::new(a.coeffs.clone());
                let g = p.gcd(number.poly());
                if g.degree().unwrap_or(0) >= 1 {
                    let (lo, hi) = number.interval();
                    if g.count_roots_open(&lo, &hi) > 0 {
                        return Ok(Ordering::Equal);
                    }
                }
                for _ in 0..REFINEMENT_CAP {
                    let (lo, hi) = number.enclose(&p);
                    if lo.is_positive() {
                        return Ok(Ordering::Greater);
                    }
                    if hi.is_negative() {
                        return Ok(Ordering::Less);
                    }
                    number.refine_once();
                }
                Err(Error::PrecisionExhausted(REFINEMENT_CAP))
            }
        }
    }

    pub fn cmp(&self, a: &FieldElem, b: &FieldElem) -> Result<Ordering> {
        if a.coeffs == b.coeffs {
            return Ok(Ordering::Equal);
        }
        let diff = a.approx - b.approx;
        if diff.abs() > 4.0 * (a.err + b.err) + 4.0 * diff.abs() * ULP + f64::MIN_POSITIVE {
            return Ok(if diff > 0.0 {
                Ordering::Greater
            } else {
                Ordering::Less
            });
        }
        self.sign(&self.sub(a, b))
    }

    pub fn lt(&self, a: &FieldElem, b: &FieldElem) -> Result<bool> {
        Ok(self.cmp(a, b)? == Ordering::Less)
    }

    pub fn le(&self, a: &FieldElem, b: &FieldElem) -> Result<bool> {
        Ok(self.cmp(a, b)? != Ordering::Greater)
    }

    pub fn max(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        Ok(if self.cmp(a, b)? == Ordering::Less {
            b.clone()
        } else {
            a.clone()
        })
    }

    pub fn abs(&self, a: &FieldElem) -> Result<FieldElem> {
        Ok(if self.sign(a)? == Ordering::Less {
            self.neg(a)
        } else {
            a.clone()
        })
    }
}

/// Exact comparison of two integer combinations of the same parameter.
pub fn compare(lambda: &ExactReal, a: &LinearCombination, b: &LinearCombination) -> Result<Ordering> {
    lambda.cmp(&lambda.reduce(a), &lambda.reduce(b))
}
