//! Barycentric simplex geometry: the similitudes `f_i(x) = λx + (1-λ)p_i`,
//! closed-form compositions, and the corner/hole region calculus.
//!
//! Points of the `d`-simplex are column vectors of `d+1` barycentric
//! coordinates, so every matrix here acts on the left and has unit column
//! sums. For `d > 2` the generators follow the planar pattern: row `i` of
//! `f_i` is `(1-λ, …, 1, …, 1-λ)` and every other row is `λ` on the diagonal.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebraic::{ExactReal, FieldElem};
use crate::error::{domain, Error, Result};

/// A finite word `ε_0 … ε_{n-1}` over `{0, …, d}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SymbolWord {
    digits: Vec<u8>,
    d: usize,
}

impl SymbolWord {
    pub fn new(digits: Vec<u8>, d: usize) -> Result<Self> {
        if let Some(&bad) = digits.iter().find(|&&x| x as usize > d) {
            return domain(format!("digit {bad} out of range 0..={d}"));
        }
        Ok(SymbolWord { digits, d })
    }

    pub fn empty(d: usize) -> Self {
        SymbolWord { digits: Vec::new(), d }
    }

    /// `i^n`
    pub fn repeat(i: u8, n: usize, d: usize) -> Result<Self> {
        Self::new(vec![i; n], d)
    }

    /// Parses a digit string such as `"0112"`; `""` and `"()"` are the empty word.
    pub fn parse(s: &str, d: usize) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(Self::empty(d));
        }
        let digits = s
            .chars()
            .filter(|c| *c != ',' && !c.is_whitespace())
            .map(|c| {
                c.to_digit(10)
                    .map(|v| v as u8)
                    .ok_or_else(|| Error::Parse(format!("bad digit {c:?} in word {s:?}")))
            })
            .collect::<Result<Vec<u8>>>()?;
        Self::new(digits, d)
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// The word followed by the letter `j`.
    pub fn push(&self, j: u8) -> Self {
        let mut digits = self.digits.clone();
        digits.push(j);
        SymbolWord { digits, d: self.d }
    }

    /// Indicator sequence `[ε_k = j]`, e.g. `a_k` for `j = 0`.
    pub fn indicator(&self, j: u8) -> Vec<u8> {
        self.digits.iter().map(|&x| u8::from(x == j)).collect()
    }
}

impl fmt::Display for SymbolWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.digits {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// A point of the simplex in barycentric coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarycentricPoint {
    pub coords: Vec<FieldElem>,
}

impl BarycentricPoint {
    /// Checks that the coordinates are nonnegative and sum to exactly one.
    pub fn new(coords: Vec<FieldElem>, lambda: &ExactReal) -> Result<Self> {
        let mut sum = lambda.zero();
        for c in &coords {
            if lambda.sign(c)? == std::cmp::Ordering::Less {
                return domain("negative barycentric coordinate");
            }
            sum = lambda.add(&sum, c);
        }
        if sum != lambda.one() {
            return domain("barycentric coordinates must sum to 1");
        }
        Ok(BarycentricPoint { coords })
    }

    pub fn vertex(i: usize, d: usize, lambda: &ExactReal) -> Self {
        let coords = (0..=d)
            .map(|j| if i == j { lambda.one() } else { lambda.zero() })
            .collect();
        BarycentricPoint { coords }
    }

    pub fn barycenter(d: usize, lambda: &ExactReal) -> Self {
        let c = lambda.constant(crate::algebraic::poly::q(1, d as i64 + 1));
        BarycentricPoint {
            coords: vec![c; d + 1],
        }
    }

    pub fn approx(&self) -> Vec<f64> {
        self.coords.iter().map(FieldElem::approx).collect()
    }
}

/// A composed map `f_ε` as a `(d+1)×(d+1)` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Similitude {
    pub matrix: Vec<Vec<FieldElem>>,
    pub word: SymbolWord,
}

impl Similitude {
    pub fn apply(&self, x: &BarycentricPoint, lambda: &ExactReal) -> BarycentricPoint {
        let coords = self
            .matrix
            .iter()
            .map(|row| {
                row.iter().zip(&x.coords).fold(lambda.zero(), |acc, (a, b)| {
                    lambda.add(&acc, &lambda.mul(a, b))
                })
            })
            .collect();
        BarycentricPoint { coords }
    }
}

/// The generator `f_i` for the `d`-simplex.
pub fn generator_matrix(i: usize, lambda: &ExactReal, d: usize) -> Result<Similitude> {
    if i > d {
        return domain(format!("generator index {i} out of range 0..={d}"));
    }
    let l = lambda.generator();
    let one_minus = lambda.sub(&lambda.one(), &l);
    let matrix = (0..=d)
        .map(|r| {
            (0..=d)
                .map(|c| match (r == i, r == c) {
                    (true, true) => lambda.one(),
                    (true, false) => one_minus.clone(),
                    (false, true) => l.clone(),
                    (false, false) => lambda.zero(),
                })
                .collect()
        })
        .collect();
    Ok(Similitude {
        matrix,
        word: SymbolWord::new(vec![i as u8], d)?,
    })
}

/// Plain matrix product `a · b`.
pub fn matrix_product(
    a: &[Vec<FieldElem>],
    b: &[Vec<FieldElem>],
    lambda: &ExactReal,
) -> Vec<Vec<FieldElem>> {
    let n = a.len();
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    (0..n).fold(lambda.zero(), |acc, k| {
                        lambda.add(&acc, &lambda.mul(&a[r][k], &b[k][c]))
                    })
                })
                .collect()
        })
        .collect()
}

/// Lower bounds `L_j = (1-λ) Σ_{k: ε_k = j} λ^k`.
fn corner_bounds(w: &SymbolWord, lambda: &ExactReal) -> Vec<FieldElem> {
    let steps = step_sizes(lambda, w.len());
    let mut lower = vec![lambda.zero(); w.d() + 1];
    for (k, &e) in w.digits().iter().enumerate() {
        lower[e as usize] = lambda.add(&lower[e as usize], &steps[k]);
    }
    lower
}

/// `(1-λ)λ^k` for `k = 0..=n`.
pub fn step_sizes(lambda: &ExactReal, n: usize) -> Vec<FieldElem> {
    let one_minus = lambda.sub(&lambda.one(), &lambda.generator());
    lambda
        .gen_powers(n)
        .iter()
        .map(|p| lambda.mul(&one_minus, p))
        .collect()
}

/// `f_ε` in closed form: entry `(r, c)` is `(1-λ) Σ_{k: ε_k = r} λ^k`, plus
/// `λ^n` on the diagonal.
pub fn compose_word(w: &SymbolWord, lambda: &ExactReal) -> Similitude {
    let lower = corner_bounds(w, lambda);
    let top = lambda.gen_pow(w.len());
    let matrix = (0..=w.d())
        .map(|r| {
            (0..=w.d())
                .map(|c| {
                    if r == c {
                        lambda.add(&lower[r], &top)
                    } else {
                        lower[r].clone()
                    }
                })
                .collect()
        })
        .collect();
    Similitude {
        matrix,
        word: w.clone(),
    }
}

/// The closed sub-simplex `{x : x_j ≥ L_j}` of side `λ^n`, the image `f_ε(Δ)`.
#[derive(Clone, Debug)]
pub struct CornerRegion {
    pub lower: Vec<FieldElem>,
    pub level: usize,
    /// A word producing this region (the first one found).
    pub word: SymbolWord,
}

impl PartialEq for CornerRegion {
    fn eq(&self, other: &Self) -> bool {
        self.level == other.level && self.lower == other.lower
    }
}

impl Eq for CornerRegion {}

impl CornerRegion {
    pub fn full(lambda: &ExactReal, d: usize) -> Self {
        CornerRegion {
            lower: vec![lambda.zero(); d + 1],
            level: 0,
            word: SymbolWord::empty(d),
        }
    }

    /// The child region `f_{εj}(Δ)`, given `step = (1-λ)λ^n` for this level.
    pub fn child(&self, j: u8, step: &FieldElem, lambda: &ExactReal) -> Self {
        let mut lower = self.lower.clone();
        lower[j as usize] = lambda.add(&lower[j as usize], step);
        CornerRegion {
            lower,
            level: self.level + 1,
            word: self.word.push(j),
        }
    }

    /// Vertices `L + λ^n e_j` as floating point barycentric coordinates.
    pub fn vertices_approx(&self, lambda: &ExactReal) -> Vec<Vec<f64>> {
        let side = lambda.approx().powi(self.level as i32);
        let base: Vec<f64> = self.lower.iter().map(FieldElem::approx).collect();
        (0..base.len())
            .map(|j| {
                let mut v = base.clone();
                v[j] += side;
                v
            })
            .collect()
    }

    /// True iff `inner ⊆ self`, i.e. every bound of `inner` dominates.
    pub fn contains(&self, inner: &CornerRegion, lambda: &ExactReal) -> Result<bool> {
        for (a, b) in self.lower.iter().zip(&inner.lower) {
            if !lambda.le(a, b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The open inverted simplex `{x ∈ Δ : x_j < U_j}`, the image `f_ε(H_0)`.
#[derive(Clone, Debug)]
pub struct HoleRegion {
    pub upper: Vec<FieldElem>,
    pub level: usize,
    pub word: SymbolWord,
}

impl PartialEq for HoleRegion {
    fn eq(&self, other: &Self) -> bool {
        self.level == other.level && self.upper == other.upper
    }
}

impl Eq for HoleRegion {}

impl HoleRegion {
    /// Built from the enclosing corner region: `U_j = L_j + (1-λ)λ^n`.
    pub fn from_corner(r: &CornerRegion, step: &FieldElem, lambda: &ExactReal) -> Self {
        HoleRegion {
            upper: r.lower.iter().map(|l| lambda.add(l, step)).collect(),
            level: r.level,
            word: r.word.clone(),
        }
    }

    /// Empty inside `Δ` iff `Σ U_j ≤ 1`.
    pub fn is_empty(&self, lambda: &ExactReal) -> Result<bool> {
        let sum = self
            .upper
            .iter()
            .fold(lambda.zero(), |acc, u| lambda.add(&acc, u));
        lambda.le(&sum, &lambda.one())
    }

    /// Vertices `U - (ΣU - 1) e_j` as floating point barycentric coordinates.
    pub fn vertices_approx(&self) -> Vec<Vec<f64>> {
        let u: Vec<f64> = self.upper.iter().map(FieldElem::approx).collect();
        let excess: f64 = u.iter().sum::<f64>() - 1.0;
        (0..u.len())
            .map(|j| {
                let mut v = u.clone();
                v[j] -= excess;
                v
            })
            .collect()
    }
}

pub fn image_region(w: &SymbolWord, lambda: &ExactReal) -> CornerRegion {
    CornerRegion {
        lower: corner_bounds(w, lambda),
        level: w.len(),
        word: w.clone(),
    }
}

pub fn hole_region(w: &SymbolWord, lambda: &ExactReal) -> HoleRegion {
    let r = image_region(w, lambda);
    let steps = step_sizes(lambda, w.len());
    HoleRegion::from_corner(&r, &steps[w.len()], lambda)
}

fn sum(v: &[FieldElem], lambda: &ExactReal) -> FieldElem {
    v.iter().fold(lambda.zero(), |acc, x| lambda.add(&acc, x))
}

/// Lower bounds of `a ∩ b`, or `None` when the regions are disjoint.
pub fn corner_intersection(
    a: &CornerRegion,
    b: &CornerRegion,
    lambda: &ExactReal,
) -> Result<Option<Vec<FieldElem>>> {
    let lower = a
        .lower
        .iter()
        .zip(&b.lower)
        .map(|(x, y)| lambda.max(x, y))
        .collect::<Result<Vec<_>>>()?;
    if lambda.le(&sum(&lower, lambda), &lambda.one())? {
        Ok(Some(lower))
    } else {
        Ok(None)
    }
}

/// Closed corner regions meet iff `Σ_j max(a.L_j, b.L_j) ≤ 1`.
pub fn regions_intersect(a: &CornerRegion, b: &CornerRegion, lambda: &ExactReal) -> Result<bool> {
    Ok(corner_intersection(a, b, lambda)?.is_some())
}

/// The box `{L_j ≤ x_j < U_j}` meets the plane `Σ x_j = 1` iff every
/// `L_j < U_j` and `Σ L_j ≤ 1 < Σ U_j`.
pub fn hole_meets_region(h: &HoleRegion, r: &CornerRegion, lambda: &ExactReal) -> Result<bool> {
    for (l, u) in r.lower.iter().zip(&h.upper) {
        if !lambda.lt(l, u)? {
            return Ok(false);
        }
    }
    let one = lambda.one();
    Ok(lambda.le(&sum(&r.lower, lambda), &one)? && lambda.lt(&one, &sum(&h.upper, lambda))?)
}
