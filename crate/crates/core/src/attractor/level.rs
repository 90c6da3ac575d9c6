use std::collections::HashMap;

use rayon::prelude::*;

use crate::algebraic::{ExactReal, FieldElem};
use crate::error::{Error, Result};
use crate::geometry::{step_sizes, CornerRegion};

/// Default cap on the number of words `(d+1)^n` a level may enumerate.
pub const DEFAULT_WORD_CAP: u128 = 4_782_969; // 3^14

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_words: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_words: DEFAULT_WORD_CAP,
        }
    }
}

impl Limits {
    /// Fails when `(d+1)^n` exceeds the word cap.
    pub fn check(&self, d: usize, n: usize) -> Result<()> {
        let needed = (d as u128 + 1).checked_pow(n as u32).unwrap_or(u128::MAX);
        if needed > self.max_words {
            return Err(Error::ResourceLimit {
                what: format!("words of length {n} over {} letters", d + 1),
                needed,
                cap: self.max_words,
            });
        }
        Ok(())
    }
}

/// The distinct regions `f_ε(Δ)`, `ε ∈ Σ^n`, whose union is `Δ_n`.
#[derive(Clone, Debug)]
pub struct LevelSet {
    pub lambda: ExactReal,
    pub d: usize,
    pub level: usize,
    pub regions: Vec<CornerRegion>,
}

/// All levels `Δ_0, …, Δ_n` with the parent/child links between the
/// deduplicated regions.
#[derive(Clone, Debug)]
pub struct LevelTower {
    pub lambda: ExactReal,
    pub d: usize,
    pub levels: Vec<Vec<CornerRegion>>,
    /// `children[k][i][j]` is the index in level `k+1` of the `j`-th child
    /// of region `i` at level `k`.
    pub children: Vec<Vec<Vec<usize>>>,
    limits: Limits,
}

impl LevelTower {
    pub fn new(lambda: &ExactReal, d: usize, limits: Limits) -> Self {
        LevelTower {
            lambda: lambda.clone(),
            d,
            levels: vec![vec![CornerRegion::full(lambda, d)]],
            children: Vec::new(),
            limits,
        }
    }

    pub fn build(lambda: &ExactReal, d: usize, n: usize, limits: Limits) -> Result<Self> {
        limits.check(d, n)?;
        let mut tower = Self::new(lambda, d, limits);
        tower.grow_to(n)?;
        Ok(tower)
    }

    /// Deepest level built so far.
    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn grow_to(&mut self, n: usize) -> Result<()> {
        while self.depth() < n {
            self.grow()?;
        }
        Ok(())
    }

    /// Adds one level. Children of each region are computed in parallel;
    /// deduplication runs in parent order, so the result is deterministic.
    pub fn grow(&mut self) -> Result<()> {
        let k = self.depth();
        self.limits.check(self.d, k + 1)?;
        let lambda = &self.lambda;
        let step = step_sizes(lambda, k).pop().unwrap();
        let d = self.d;
        let candidates: Vec<Vec<CornerRegion>> = self.levels[k]
            .par_iter()
            .map(|r| (0..=d as u8).map(|j| r.child(j, &step, lambda)).collect())
            .collect();
        let mut index: HashMap<Vec<FieldElem>, usize> = HashMap::new();
        let mut next = Vec::new();
        let mut links = Vec::with_capacity(candidates.len());
        for group in candidates {
            let mut ids = Vec::with_capacity(d + 1);
            for child in group {
                let id = *index.entry(child.lower.clone()).or_insert_with(|| {
                    next.push(child);
                    next.len() - 1
                });
                ids.push(id);
            }
            links.push(ids);
        }
        self.levels.push(next);
        self.children.push(links);
        Ok(())
    }

    pub fn level(&self, k: usize) -> LevelSet {
        LevelSet {
            lambda: self.lambda.clone(),
            d: self.d,
            level: k,
            regions: self.levels[k].clone(),
        }
    }
}

/// Deduplicated level `n`.
pub fn build_level(lambda: &ExactReal, d: usize, n: usize, limits: Limits) -> Result<LevelSet> {
    let tower = LevelTower::build(lambda, d, n, limits)?;
    Ok(LevelSet {
        lambda: lambda.clone(),
        d,
        level: n,
        regions: tower.levels.into_iter().nth(n).unwrap(),
    })
}
