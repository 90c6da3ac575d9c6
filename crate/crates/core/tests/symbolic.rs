use std::collections::BTreeSet;

use gasket_core::algebraic::{multinacci, ExactReal};
use gasket_core::attractor::{build_level, classify_holes, Limits};
use gasket_core::geometry::SymbolWord;
use gasket_core::numtheory::{converse_witness, ConverseOutcome};
use gasket_core::symbolic::canonical_word;

fn all_words(n: usize, d: usize) -> Vec<SymbolWord> {
    let mut words = vec![Vec::new()];
    for _ in 0..n {
        words = words
            .into_iter()
            .flat_map(|w: Vec<u8>| {
                (0..=d as u8).map(move |j| {
                    let mut v = w.clone();
                    v.push(j);
                    v
                })
            })
            .collect();
    }
    words.into_iter().map(|w| SymbolWord::new(w, d).unwrap()).collect()
}

#[test]
fn rewriting_classes_match_distinct_regions() {
    for m in [2, 3] {
        let w = ExactReal::algebraic(multinacci(m).unwrap(), "omega");
        for n in 1..=6 {
            let classes: BTreeSet<String> = all_words(n, 2)
                .iter()
                .map(|x| canonical_word(x, m).unwrap().to_string())
                .collect();
            let level = build_level(&w, 2, n, Limits::default()).unwrap();
            assert_eq!(classes.len(), level.regions.len(), "m={m} n={n}");
        }
    }
}

#[test]
fn converse_hole_word_is_a_violation() {
    let l = ExactReal::ratio(59, 100);
    let ConverseOutcome::Witness(w) = converse_witness(&l, 10).unwrap() else {
        panic!("expected a witness");
    };
    let r = classify_holes(&l, 2, w.n, Limits::default()).unwrap();
    let words: Vec<String> = r.violation_words().into_iter().map(|v| v.hole_word).collect();
    assert!(words.contains(&w.hole_word), "{} not in {words:?}", w.hole_word);
}
