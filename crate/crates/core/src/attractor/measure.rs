//! Area brackets and box counting on the uniform triangular grid.
//!
//! At resolution `r` the simplex splits into `r²` cells. In coordinates
//! scaled by `r`, the upward cell with base `(i, j, k)`, `i+j+k = r-1`, is
//! `{x_t ≥ i_t}` and the downward cell with `i+j+k = r-2` is
//! `{x_t ≤ i_t + 1}`. Against a corner region `{x_t ≥ l_t}`:
//! an upward cell's interior meets it iff `Σ max(i_t, l_t) < r`, a downward
//! cell's interior meets it iff `l_t < i_t + 1` for all `t`, and either cell
//! lies inside it iff `i_t ≥ l_t` for all `t`.

use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebraic::{ExactReal, FieldElem};
use crate::error::{domain, Result};

use super::level::{build_level, LevelSet, Limits};

/// Exact `floor(v)` and whether `v` is an integer.
fn exact_floor(lambda: &ExactReal, v: &FieldElem) -> Result<(i64, bool)> {
    let mut g = v.approx().floor() as i64;
    loop {
        match lambda.cmp(v, &lambda.int(g))? {
            std::cmp::Ordering::Less => g -= 1,
            std::cmp::Ordering::Equal => return Ok((g, true)),
            std::cmp::Ordering::Greater => {
                if lambda.lt(v, &lambda.int(g + 1))? {
                    return Ok((g, false));
                }
                g += 1;
            }
        }
    }
}

/// Integer data of one region at a given resolution: for every subset `T`
/// of the coordinates, `floor(Σ_{t∈T} r·L_t)`, plus the ceilings of each
/// `r·L_t`.
struct ScaledRegion {
    subset_floor: [i64; 8],
    floor: [i64; 3],
    ceil: [i64; 3],
}

fn scale_region(lambda: &ExactReal, lower: &[FieldElem], r: i64) -> Result<ScaledRegion> {
    let rq = crate::algebraic::poly::qi(r);
    let scaled: Vec<FieldElem> = lower.iter().map(|l| lambda.scale(l, &rq)).collect();
    let mut subset_floor = [0i64; 8];
    for (mask, slot) in subset_floor.iter_mut().enumerate().skip(1) {
        let mut s = lambda.zero();
        for (t, v) in scaled.iter().enumerate() {
            if mask & (1 << t) != 0 {
                s = lambda.add(&s, v);
            }
        }
        *slot = exact_floor(lambda, &s)?.0;
    }
    let mut floor = [0i64; 3];
    let mut ceil = [0i64; 3];
    for t in 0..3 {
        let (f, is_int) = exact_floor(lambda, &scaled[t])?;
        floor[t] = f;
        ceil[t] = if is_int { f } else { f + 1 };
    }
    Ok(ScaledRegion {
        subset_floor,
        floor,
        ceil,
    })
}

/// Cell counts of one grid classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridCounts {
    pub resolution: i64,
    /// Cells lying inside a single region.
    pub inside: u64,
    /// Cells whose interior meets some region.
    pub meets: u64,
}

/// Classifies every cell of the resolution-`r` grid against a planar level set.
pub fn classify_grid(level: &LevelSet, r: i64) -> Result<GridCounts> {
    if level.d != 2 {
        return domain("grid classification is implemented for d = 2");
    }
    let lambda = &level.lambda;
    let scaled = level
        .regions
        .par_iter()
        .map(|reg| scale_region(lambda, &reg.lower, r))
        .collect::<Result<Vec<_>>>()?;
    let n = r as usize;
    let mut up_meet = vec![false; n * n];
    let mut up_in = vec![false; n * n];
    let mut down_meet = vec![false; n * n];
    let mut down_in = vec![false; n * n];
    for s in &scaled {
        // a cell meeting the region has i_t in [floor(l_t) - 1, l_t + side],
        // where side = r - Σ l_t ≤ r - floor(Σ l_t)
        let side = r - s.subset_floor[7];
        let lo0 = (s.floor[0] - 1).max(0);
        let lo1 = (s.floor[1] - 1).max(0);
        let hi0 = (s.floor[0] + 1 + side).min(r - 1);
        let hi1 = (s.floor[1] + 1 + side).min(r - 1);
        for i in lo0..=hi0 {
            for j in lo1..=hi1.min(r - 1 - i) {
                let k = r - 1 - i - j;
                if k < 0 {
                    break;
                }
                let cell = [i, j, k];
                // upward cell
                let mut mask = 0usize;
                let mut int_sum = 0i64;
                for t in 0..3 {
                    if cell[t] >= s.ceil[t] {
                        int_sum += cell[t];
                    } else {
                        mask |= 1 << t;
                    }
                }
                let meets = if mask == 0 {
                    int_sum < r
                } else {
                    s.subset_floor[mask] < r - int_sum
                };
                let idx = i as usize * n + j as usize;
                if meets {
                    up_meet[idx] = true;
                    if mask == 0 {
                        up_in[idx] = true;
                    }
                }
                // downward cell with the same (i, j)
                let kd = r - 2 - i - j;
                if kd >= 0 {
                    let dcell = [i, j, kd];
                    if (0..3).all(|t| dcell[t] >= s.floor[t]) {
                        down_meet[idx] = true;
                        if (0..3).all(|t| dcell[t] >= s.ceil[t]) {
                            down_in[idx] = true;
                        }
                    }
                }
            }
        }
    }
    let count = |v: &[bool]| v.iter().filter(|x| **x).count() as u64;
    Ok(GridCounts {
        resolution: r,
        inside: count(&up_in) + count(&down_in),
        meets: count(&up_meet) + count(&down_meet),
    })
}

/// Bracket `[lo, hi]` of the normalized area of `Δ_n`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AreaBracket {
    pub n: usize,
    pub resolution: i64,
    pub lo: f64,
    pub hi: f64,
}

pub fn estimate_area(
    lambda: &ExactReal,
    d: usize,
    n: usize,
    resolution: i64,
    limits: Limits,
) -> Result<AreaBracket> {
    if resolution < 64 {
        return domain(format!("resolution must be at least 64, got {resolution}"));
    }
    let level = build_level(lambda, d, n, limits)?;
    area_of_level(&level, resolution)
}

pub fn area_of_level(level: &LevelSet, resolution: i64) -> Result<AreaBracket> {
    let c = classify_grid(level, resolution)?;
    let total = (resolution * resolution) as f64;
    Ok(AreaBracket {
        n: level.level,
        resolution,
        lo: c.inside as f64 / total,
        hi: c.meets as f64 / total,
    })
}

/// Least-squares box-counting fit.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoxDimension {
    pub slope: f64,
    /// `(resolution, occupied cells)` for each exponent in the range.
    pub points: Vec<(i64, u64)>,
}

/// Box-counting slope of `Δ_n` over grid sizes `δ = λ^k`, `k ∈ ks`
/// (resolution `round(λ^{-k})`).
pub fn box_dimension_estimate(
    lambda: &ExactReal,
    d: usize,
    n: usize,
    ks: RangeInclusive<usize>,
    limits: Limits,
) -> Result<BoxDimension> {
    let level = build_level(lambda, d, n, limits)?;
    box_dimension_of_level(&level, ks)
}

/// Default exponent range `n-5 ..= n`, ending at the level's own scale.
pub fn default_box_range(n: usize) -> RangeInclusive<usize> {
    n.saturating_sub(5).max(1)..=n
}

pub fn box_dimension_of_level(level: &LevelSet, ks: RangeInclusive<usize>) -> Result<BoxDimension> {
    let l = level.lambda.approx();
    let mut points = Vec::new();
    for k in ks {
        let r = (l.powi(-(k as i32))).round().max(1.0) as i64;
        if points.last().is_some_and(|&(pr, _)| pr == r) {
            continue;
        }
        let c = classify_grid(level, r)?;
        points.push((r, c.meets));
    }
    if points.len() < 2 {
        return domain("box counting needs at least two distinct resolutions");
    }
    let xs: Vec<f64> = points.iter().map(|p| (p.0 as f64).ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| (p.1 as f64).ln()).collect();
    let mx = xs.iter().sum::<f64>() / xs.len() as f64;
    let my = ys.iter().sum::<f64>() / ys.len() as f64;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    Ok(BoxDimension {
        slope: sxy / sxx,
        points,
    })
}
