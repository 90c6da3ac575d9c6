use std::cmp::Ordering;

use crate::algebraic::{ExactReal, FieldElem};
use crate::error::{domain, Result};
use crate::geometry::{compose_word, step_sizes, BarycentricPoint, SymbolWord};

/// Image of the barycenter under `f_ε`; the limit point of the address as
/// `ε` grows lies within `λ^n` of it in every coordinate.
pub fn point_from_address(w: &SymbolWord, lambda: &ExactReal) -> Result<BarycentricPoint> {
    if w.is_empty() {
        return domain("an address needs at least one digit");
    }
    let c = BarycentricPoint::barycenter(w.d(), lambda);
    Ok(compose_word(w, lambda).apply(&c, lambda))
}

/// Greedy address of the point `(1-t) p_a + t p_b` on the edge from vertex
/// `a` to vertex `b`: digit `k` is `b` iff `(1-λ)λ^k` fits into the
/// remaining coordinate. For `λ ≥ 1/2` the point lies in `f_ε(Δ)`.
pub fn edge_address(
    a: u8,
    b: u8,
    t: &FieldElem,
    lambda: &ExactReal,
    d: usize,
    n: usize,
) -> Result<SymbolWord> {
    if a == b || a as usize > d || b as usize > d {
        return domain(format!("bad edge ({a}, {b}) for d = {d}"));
    }
    if lambda.sign(t)? == Ordering::Less || lambda.cmp(t, &lambda.one())? == Ordering::Greater {
        return domain("edge parameter must lie in [0, 1]");
    }
    let steps = step_sizes(lambda, n);
    let mut rem = t.clone();
    let mut digits = Vec::with_capacity(n);
    for step in steps.iter().take(n) {
        if lambda.le(step, &rem)? {
            digits.push(b);
            rem = lambda.sub(&rem, step);
        } else {
            digits.push(a);
        }
    }
    SymbolWord::new(digits, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::multinacci;
    use crate::algebraic::poly::q;
    use crate::geometry::image_region;

    fn omega(m: usize) -> ExactReal {
        ExactReal::algebraic(multinacci(m).unwrap(), format!("omega:{m}"))
    }

    #[test]
    fn constant_address_converges_to_vertex() {
        let l = ExactReal::ratio(3, 5);
        for n in [1, 5, 20] {
            let p = point_from_address(&SymbolWord::repeat(0, n, 2).unwrap(), &l).unwrap();
            let x = p.approx();
            assert!((1.0 - x[0]) <= 0.6f64.powi(n as i32) + 1e-15);
        }
    }

    #[test]
    fn related_addresses_give_the_same_point() {
        let w = omega(2);
        for tail in ["", "2", "01", "1202"] {
            let a = SymbolWord::parse(&format!("011{tail}"), 2).unwrap();
            let b = SymbolWord::parse(&format!("100{tail}"), 2).unwrap();
            assert_eq!(
                point_from_address(&a, &w).unwrap(),
                point_from_address(&b, &w).unwrap()
            );
        }
    }

    #[test]
    fn two_letter_address_at_one_half() {
        let h = ExactReal::ratio(1, 2);
        let p = point_from_address(&SymbolWord::parse("01", 2).unwrap(), &h).unwrap();
        let c = |n, d| h.constant(q(n, d));
        assert_eq!(p.coords, vec![c(7, 12), c(1, 3), c(1, 12)]);
    }

    #[test]
    fn edge_points_are_covered() {
        for m in 2..=4 {
            let w = omega(m);
            let n = 12;
            let side = w.approx().powi(n as i32);
            for k in 0..=16 {
                let t = w.constant(q(k, 16));
                for (a, b) in [(0u8, 1u8), (1, 2), (2, 0)] {
                    let addr = edge_address(a, b, &t, &w, 2, n).unwrap();
                    let region = image_region(&addr, &w);
                    let mut target = vec![0.0; 3];
                    target[a as usize] = 1.0 - k as f64 / 16.0;
                    target[b as usize] = k as f64 / 16.0;
                    for j in 0..3 {
                        assert!(target[j] >= region.lower[j].approx() - 1e-12);
                    }
                    let p = point_from_address(&addr, &w).unwrap().approx();
                    for j in 0..3 {
                        assert!((p[j] - target[j]).abs() < side, "m={m} k={k}");
                    }
                }
            }
        }
    }
}
