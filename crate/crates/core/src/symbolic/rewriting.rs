//! The word relations `i j^m = j i^m` (`i ≠ j`) that hold at `λ = ω_m`.
//!
//! The oriented rule `i j^m → j i^m` for `i > j` terminates (each step makes
//! the word lexicographically smaller) but its normal forms are not unique:
//! for `m = 2`, `21100` rewrites to both `12022` and `21011`. Canonical forms
//! are therefore taken as the lexicographically least word of the whole
//! equivalence class.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::geometry::SymbolWord;

/// Upper bound on the size of an equivalence class explored by
/// [`canonical_word`].
pub const CLASS_CAP: usize = 1 << 20;

/// Positions `p` where `w[p..p+m+1]` is `i j^m` with `i ≠ j`.
fn rule_sites(w: &[u8], m: usize) -> impl Iterator<Item = usize> + '_ {
    (0..(w.len() + 1).saturating_sub(m + 1)).filter(move |&p| {
        let j = w[p + 1];
        w[p] != j && w[p + 1..=p + m].iter().all(|&x| x == j)
    })
}

fn swap_at(w: &[u8], p: usize, m: usize) -> Vec<u8> {
    let (i, j) = (w[p], w[p + 1]);
    let mut out = w.to_vec();
    out[p] = j;
    for x in &mut out[p + 1..=p + m] {
        *x = i;
    }
    out
}

/// One application of `i j^m → j i^m` (`i > j`) at the leftmost site.
pub fn rewrite_once(w: &SymbolWord, m: usize) -> Option<SymbolWord> {
    let d = w.digits();
    let p = rule_sites(d, m).find(|&p| d[p] > d[p + 1])?;
    Some(SymbolWord::new(swap_at(d, p, m), w.d()).unwrap())
}

/// Fixpoint of the oriented rule applied leftmost-first.
pub fn oriented_normal_form(w: &SymbolWord, m: usize) -> SymbolWord {
    let mut cur = w.clone();
    while let Some(next) = rewrite_once(&cur, m) {
        cur = next;
    }
    cur
}

/// The equivalence class of `w` under the relations, in lexicographic order.
pub fn equivalence_class(w: &SymbolWord, m: usize) -> Result<BTreeSet<Vec<u8>>> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.digits().to_vec());
    queue.push_back(w.digits().to_vec());
    while let Some(cur) = queue.pop_front() {
        for p in rule_sites(&cur, m) {
            let next = swap_at(&cur, p, m);
            if seen.insert(next.clone()) {
                if seen.len() > CLASS_CAP {
                    return Err(Error::ResourceLimit {
                        what: "equivalence class size".into(),
                        needed: seen.len() as u128,
                        cap: CLASS_CAP as u128,
                    });
                }
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}

/// Lexicographically least word equivalent to `w`.
pub fn canonical_word(w: &SymbolWord, m: usize) -> Result<SymbolWord> {
    let class = equivalence_class(w, m)?;
    SymbolWord::new(class.into_iter().next().unwrap(), w.d())
}
