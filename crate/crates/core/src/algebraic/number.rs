//! Real algebraic numbers given by a defining polynomial and an isolating
//! rational interval.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Mutex;

use num_traits::{One, Zero};

use super::poly::{q, to_f64, QPoly, Q};
use crate::error::{Error, Result};

/// Upper bound on bisection rounds when comparing two distinct algebraic numbers.
const COMPARE_CAP: usize = 512;

/// A real root of an integer (or rational) polynomial, pinned down by an
/// open interval `(lo, hi)` that contains no other root.
///
/// Refinements are cached: the interval only ever shrinks, and each refined
/// interval lies inside the previous one.
pub struct AlgebraicNumber {
    poly: QPoly,
    /// Square-free part of `poly`; changes sign exactly once on the interval.
    squarefree: QPoly,
    /// Sign of `squarefree` just right of `lo`.
    lo_sign: Ordering,
    exact: Option<Q>,
    intervals: Mutex<Vec<(Q, Q)>>,
}

impl Clone for AlgebraicNumber {
    fn clone(&self) -> Self {
        let intervals = self.intervals.lock().unwrap().clone();
        AlgebraicNumber {
            poly: self.poly.clone(),
            squarefree: self.squarefree.clone(),
            lo_sign: self.lo_sign,
            exact: self.exact.clone(),
            intervals: Mutex::new(intervals),
        }
    }
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self.interval();
        f.debug_struct("AlgebraicNumber")
            .field("poly", &self.poly.to_string())
            .field("lo", &lo.to_string())
            .field("hi", &hi.to_string())
            .finish()
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root of {} near {:.15}", self.poly, self.approx())
    }
}

fn roots_in_open(p: &QPoly, lo: &Q, hi: &Q) -> usize {
    p.count_roots_open(lo, hi)
}

/// Isolate the unique root of `poly` in the open interval `(lo, hi)` and
/// refine it until the interval is no wider than `tol`.
pub fn isolate_root(poly: &QPoly, lo: Q, hi: Q, tol: &Q) -> Result<AlgebraicNumber> {
    let num = AlgebraicNumber::new(poly.clone(), lo, hi)?;
    num.refine_to(tol);
    Ok(num)
}

impl AlgebraicNumber {
    /// Checks that `poly` has exactly one root in `(lo, hi)` (Sturm count).
    pub fn new(poly: QPoly, lo: Q, hi: Q) -> Result<Self> {
        if poly.degree().unwrap_or(0) == 0 {
            return Err(Error::NoRoot);
        }
        if lo >= hi {
            return Err(Error::Domain(format!("empty interval ({lo}, {hi})")));
        }
        let count = roots_in_open(&poly, &lo, &hi);
        match count {
            0 => return Err(Error::NoRoot),
            1 => {}
            n => return Err(Error::MultipleRoots(n)),
        }
        let squarefree = poly.div_rem(&poly.gcd(&poly.derivative())).0;
        let exact = if squarefree.degree() == Some(1) {
            let c = squarefree.coeffs();
            Some(-&c[0] / &c[1])
        } else {
            None
        };
        let lo_sign = sign_right_of(&squarefree, &lo, &hi);
        Ok(AlgebraicNumber {
            poly,
            squarefree,
            lo_sign,
            exact,
            intervals: Mutex::new(vec![(lo, hi)]),
        })
    }

    /// The rational number `r` as a degree-one algebraic number.
    pub fn rational(r: Q) -> Self {
        let half = q(1, 2);
        Self::new(QPoly::linear_root(r.clone()), &r - &half, &r + &half)
            .expect("a linear polynomial has exactly one root")
    }

    pub fn poly(&self) -> &QPoly {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    /// Current (tightest) isolating interval.
    pub fn interval(&self) -> (Q, Q) {
        self.intervals.lock().unwrap().last().unwrap().clone()
    }

    /// All intervals produced so far, outermost first.
    pub fn refinement_history(&self) -> Vec<(Q, Q)> {
        self.intervals.lock().unwrap().clone()
    }

    pub fn width(&self) -> Q {
        let (lo, hi) = self.interval();
        hi - lo
    }

    pub fn midpoint(&self) -> Q {
        let (lo, hi) = self.interval();
        (lo + hi) / Q::from_integer(2.into())
    }

    pub fn approx(&self) -> f64 {
        match &self.exact {
            Some(r) => to_f64(r),
            None => to_f64(&self.midpoint()),
        }
    }

    /// The exact value, when the number is rational.
    pub fn as_rational(&self) -> Option<&Q> {
        self.exact.as_ref()
    }

    /// One bisection step.
    pub fn refine_once(&self) {
        let mut guard = self.intervals.lock().unwrap();
        let (lo, hi) = guard.last().unwrap().clone();
        let next = self.bisect(&lo, &hi);
        guard.push(next);
    }

    fn bisect(&self, lo: &Q, hi: &Q) -> (Q, Q) {
        let two = Q::from_integer(2.into());
        let mid = (lo + hi) / &two;
        match self.squarefree.sign_at(&mid) {
            Ordering::Equal => {
                let quarter = (hi - lo) / Q::from_integer(4.into());
                (&mid - &quarter, &mid + &quarter)
            }
            s if s == self.lo_sign => (mid, hi.clone()),
            _ => (lo.clone(), mid),
        }
    }

    /// Bisect until the interval width is at most `tol`.
    pub fn refine_to(&self, tol: &Q) {
        let mut guard = self.intervals.lock().unwrap();
        loop {
            let (lo, hi) = guard.last().unwrap().clone();
            if &(&hi - &lo) <= tol {
                break;
            }
            let next = self.bisect(&lo, &hi);
            guard.push(next);
        }
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, r: &Q) -> Ordering {
        if let Some(x) = &self.exact {
            return x.cmp(r);
        }
        let (lo, hi) = self.interval();
        if r <= &lo {
            return Ordering::Greater;
        }
        if r >= &hi {
            return Ordering::Less;
        }
        match self.squarefree.sign_at(r) {
            Ordering::Equal => Ordering::Equal,
            s if s == self.lo_sign => Ordering::Greater,
            _ => Ordering::Less,
        }
    }

    /// Exact comparison of two algebraic numbers.
    ///
    /// Equality is detected through a common root of the defining
    /// polynomials inside both isolating intervals; otherwise the intervals
    /// are refined until they separate.
    pub fn cmp_exact(&self, other: &AlgebraicNumber) -> Result<Ordering> {
        if let Some(r) = &other.exact {
            return Ok(self.cmp_rational(r));
        }
        if let Some(r) = &self.exact {
            return Ok(other.cmp_rational(r).reverse());
        }
        let g = self.squarefree.gcd(&other.squarefree);
        for _ in 0..COMPARE_CAP {
            let (alo, ahi) = self.interval();
            let (blo, bhi) = other.interval();
            if ahi <= blo {
                return Ok(Ordering::Less);
            }
            if bhi <= alo {
                return Ok(Ordering::Greater);
            }
            if g.degree().unwrap_or(0) >= 1 {
                let lo = if alo > blo { alo.clone() } else { blo.clone() };
                let hi = if ahi < bhi { ahi.clone() } else { bhi.clone() };
                if lo < hi && roots_in_open(&g, &lo, &hi) > 0 {
                    return Ok(Ordering::Equal);
                }
            }
            if &ahi - &alo >= &bhi - &blo {
                self.refine_once();
            } else {
                other.refine_once();
            }
        }
        Err(Error::PrecisionExhausted(COMPARE_CAP))
    }

    /// Evaluate `p` at this number as an enclosing rational interval.
    pub fn enclose(&self, p: &QPoly) -> (Q, Q) {
        match &self.exact {
            Some(r) => {
                let v = p.eval(r);
                (v.clone(), v)
            }
            None => {
                let (lo, hi) = self.interval();
                p.eval_interval(&lo, &hi)
            }
        }
    }

    /// Reciprocal `1/x` of a nonzero algebraic number, defined by the
    /// reversed polynomial.
    pub fn recip(&self) -> Result<AlgebraicNumber> {
        if let Some(r) = &self.exact {
            if r.is_zero() {
                return Err(Error::Domain("reciprocal of zero".into()));
            }
            return Ok(AlgebraicNumber::rational(r.recip()));
        }
        let (mut lo, mut hi) = self.interval();
        while lo.is_zero() || hi.is_zero() || (lo < Q::zero() && hi > Q::zero()) {
            self.refine_once();
            (lo, hi) = self.interval();
        }
        let mut rev: Vec<Q> = self.poly.coeffs().to_vec();
        rev.reverse();
        let poly = QPoly::new(rev);
        let (a, b) = (hi.recip(), lo.recip());
        AlgebraicNumber::new(poly, a, b)
    }
}

/// Sign of `p` immediately to the right of `lo`, given a root of `p` in `(lo, hi)`.
fn sign_right_of(p: &QPoly, lo: &Q, hi: &Q) -> Ordering {
    let v = p.sign_at(lo);
    if v != Ordering::Equal {
        return v;
    }
    // lo itself is a root of p (not the isolated one); use hi's opposite.
    let w = p.sign_at(hi);
    if w != Ordering::Equal {
        return w.reverse();
    }
    // both endpoints are roots; the derivative decides the side at lo
    let mut probe = hi.clone();
    let two = Q::one() + Q::one();
    loop {
        probe = (lo + &probe) / &two;
        let s = p.sign_at(&probe);
        if s != Ordering::Equal && roots_in_open(p, lo, &probe) == 0 {
            return s;
        }
    }
}
