use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebraic::poly::q;
use crate::algebraic::ExactReal;
use crate::error::{domain, Result};
use crate::geometry::{hole_meets_region, step_sizes, HoleRegion, SymbolWord};

use super::level::{LevelTower, Limits};

/// A candidate hole meeting a region of the next level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub hole_word: String,
    pub region_word: String,
}

/// Classification of the candidate holes `f_ε(H_0)`, `ε ∈ Σ^n`.
#[derive(Clone, Debug)]
pub struct HoleReport {
    pub lambda: ExactReal,
    pub n: usize,
    /// Distinct nonempty candidates.
    pub candidates: Vec<HoleRegion>,
    /// Indices into `candidates` of the holes disjoint from `Δ_{n+1}`.
    pub genuine: Vec<usize>,
    /// Pairs `(candidate index, region word)` that intersect.
    pub violations: Vec<(usize, SymbolWord)>,
    /// Number of distinct level-`n` regions whose hole is empty inside `Δ`.
    pub empty: usize,
}

impl HoleReport {
    pub fn violation_words(&self) -> Vec<Violation> {
        self.violations
            .iter()
            .map(|(i, r)| Violation {
                hole_word: self.candidates[*i].word.to_string(),
                region_word: r.to_string(),
            })
            .collect()
    }

    pub fn genuine_words(&self) -> Vec<SymbolWord> {
        self.genuine
            .iter()
            .map(|&i| self.candidates[i].word.clone())
            .collect()
    }
}

/// True for the empty word and the powers `i^k`.
pub fn is_radial(w: &SymbolWord) -> bool {
    w.digits().windows(2).all(|p| p[0] == p[1])
}

/// The first region of level `n+1` (in depth-first order) meeting `hole`,
/// descending only through regions that meet it.
fn first_hit(tower: &LevelTower, hole: &HoleRegion, n: usize) -> Result<Option<SymbolWord>> {
    let lambda = &tower.lambda;
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut stack = vec![(0usize, 0usize)];
    while let Some((k, i)) = stack.pop() {
        if !seen.insert((k, i)) {
            continue;
        }
        let region = &tower.levels[k][i];
        if !hole_meets_region(hole, region, lambda)? {
            continue;
        }
        if k == n + 1 {
            return Ok(Some(region.word.clone()));
        }
        for &c in tower.children[k][i].iter().rev() {
            stack.push((k + 1, c));
        }
    }
    Ok(None)
}

/// Classifies level-`n` holes against a tower of depth at least `n+1`.
pub fn classify_with_tower(tower: &LevelTower, n: usize) -> Result<HoleReport> {
    let lambda = &tower.lambda;
    let step = step_sizes(lambda, n).pop().unwrap();
    let holes: Vec<HoleRegion> = tower.levels[n]
        .iter()
        .map(|r| HoleRegion::from_corner(r, &step, lambda))
        .collect();
    let nonempty = holes
        .par_iter()
        .map(|h| h.is_empty(lambda).map(|e| !e))
        .collect::<Result<Vec<bool>>>()?;
    let empty = nonempty.iter().filter(|x| !**x).count();
    let candidates: Vec<HoleRegion> = holes
        .into_iter()
        .zip(nonempty)
        .filter_map(|(h, keep)| keep.then_some(h))
        .collect();
    let hits = candidates
        .par_iter()
        .map(|h| first_hit(tower, h, n))
        .collect::<Result<Vec<_>>>()?;
    let mut genuine = Vec::new();
    let mut violations = Vec::new();
    for (i, hit) in hits.into_iter().enumerate() {
        match hit {
            None => genuine.push(i),
            Some(w) => violations.push((i, w)),
        }
    }
    Ok(HoleReport {
        lambda: lambda.clone(),
        n,
        candidates,
        genuine,
        violations,
        empty,
    })
}

pub fn classify_holes(lambda: &ExactReal, d: usize, n: usize, limits: Limits) -> Result<HoleReport> {
    let tower = LevelTower::build(lambda, d, n + 1, limits)?;
    classify_with_tower(&tower, n)
}

/// Outcome of the finite-depth hole check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum Verdict {
    /// Every candidate hole up to this level is disjoint from the next level.
    ConsistentUpTo { n_max: usize },
    /// A candidate hole at `level` meets a region of level `level + 1`.
    Violation {
        level: usize,
        hole_word: String,
        region_word: String,
    },
}

/// Runs the hole classification for `n = 0..=n_max`, stopping at the first
/// violation.
pub fn check_total_self_similarity(
    lambda: &ExactReal,
    d: usize,
    n_max: usize,
    limits: Limits,
) -> Result<Verdict> {
    if lambda.cmp_rational(&q(1, 2)).is_le() || lambda.cmp_rational(&q(2, 3)).is_ge() {
        return domain(format!("lambda must lie in (1/2, 2/3), got {lambda}"));
    }
    limits.check(d, n_max + 1)?;
    let mut tower = LevelTower::new(lambda, d, limits);
    for n in 0..=n_max {
        tower.grow_to(n + 1)?;
        let report = classify_with_tower(&tower, n)?;
        if let Some(v) = report.violation_words().into_iter().next() {
            return Ok(Verdict::Violation {
                level: n,
                hole_word: v.hole_word,
                region_word: v.region_word,
            });
        }
    }
    Ok(Verdict::ConsistentUpTo { n_max })
}
