//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fails.
//!
//! Run with `cargo test -p gasket-core --test acceptance`.

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use gasket_core::algebraic::poly::q;
use gasket_core::algebraic::{
    gasket_dimension, multinacci, multinacci_inverse, sierpinski_dimension, sigma, small_pisot,
    tau, AlgebraicNumber, ExactReal,
};
use gasket_core::attractor::holes::classify_with_tower;
use gasket_core::attractor::measure::{area_of_level, box_dimension_of_level, default_box_range};
use gasket_core::attractor::{
    build_level, check_total_self_similarity, is_radial, LevelTower, Limits, Verdict,
};
use gasket_core::geometry::{corner_intersection, image_region, SymbolWord};
use gasket_core::numtheory::{
    converse_witness, ell_brute, ell_upper, separation_bound_check, ConverseOutcome,
};
use gasket_core::symbolic::sequences::gf_series_check;
use gasket_core::symbolic::u_sequence;
use gasket_core::symbolic::uniqueness::successive_ratio;

/// `(m, ω_m, dimension)` to five decimals.
const REFERENCE_MULTINACCI_TABLE: [(usize, f64, f64); 8] = [
    (2, 0.61803, 1.93063),
    (3, 0.54369, 1.73219),
    (4, 0.51879, 1.65411),
    (5, 0.50866, 1.61900),
    (6, 0.50414, 1.60201),
    (7, 0.50202, 1.59356),
    (8, 0.50099, 1.58930),
    (9, 0.50049, 1.58715),
];
/// Allowed difference in units of the fifth decimal.
const TABLE1_LAST_DIGIT: f64 = 1.0;

/// Rows `d = 2..6`: dimensions at `ω_2 … ω_6`, then at `λ = 1/2`.
const REFERENCE_GASKET_TABLE: [[f64; 6]; 5] = [
    [1.93, 1.73, 1.65, 1.62, 1.60, 1.583],
    [2.61, 2.23, 2.10, 2.05, 2.02, 1.999],
    [3.13, 2.61, 2.45, 2.38, 2.35, 2.322],
    [3.54, 2.92, 2.72, 2.65, 2.62, 2.585],
    [3.89, 3.18, 2.96, 2.88, 2.84, 2.807],
];
const TABLE2_TOL: f64 = 0.005;
const TABLE_TIME: Duration = Duration::from_secs(1);

const TAU_CLOSED_FORM_TOL: f64 = 1e-12;
const ORDERING_M_MAX: usize = 12;
const HOLE_DEPTH: usize = 7;
const HOLE_TIME: Duration = Duration::from_secs(120);
const OVERLAP_M: std::ops::RangeInclusive<usize> = 2..=6;

const CONVERSE_N_MAX: usize = 10;
const RADIAL_DEPTH: usize = 6;
const RADIAL_AREA_LEVEL: usize = 10;
const RADIAL_AREA_FLOOR: f64 = 0.25;
const AREA_RESOLUTION: i64 = 4096;
const MEASURE_ZERO_LEVELS: std::ops::RangeInclusive<usize> = 4..=12;
const MEASURE_ZERO_CEILING: f64 = 0.5;

const BOX_LEVEL: usize = 10;
const BOX_GOLDEN: (f64, f64) = (1.93, 0.05);
const BOX_SIERPINSKI: (f64, f64) = (1.585, 0.05);
const BOX_TIME: Duration = Duration::from_secs(120);

const GF_K_MAX: usize = 30;
const UNIQ_N: usize = 15;
const UNIQ_M2: (f64, f64) = (2.0, 0.05);
const UNIQ_M3_REL: f64 = 0.03;

const ELL_DEGREE: usize = 14;
const PISOT_DEGREE: usize = 16;
const PISOT_CEILINGS: [f64; 4] = [0.07, 0.02, 0.01, 0.16];
const BRUTE_DEGREE: usize = 10;
const BOUND_THETAS: [(i64, i64); 3] = [(17, 10), (18, 10), (19, 10)];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

type Check = fn() -> Outcome;

fn omega(m: usize) -> ExactReal {
    ExactReal::algebraic(multinacci(m).unwrap(), format!("omega:{m}"))
}

fn lt(a: &AlgebraicNumber, b: &AlgebraicNumber) -> bool {
    a.cmp_exact(b).unwrap() == Ordering::Less
}

fn multinacci_table() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for (m, w_ref, dim_ref) in REFERENCE_MULTINACCI_TABLE {
        let w = multinacci(m).unwrap().approx();
        let dim = gasket_dimension(m, 2).unwrap();
        for (name, x, r) in [("omega", w, w_ref), ("dim", dim, dim_ref)] {
            let units = ((x * 1e5).round() - (r * 1e5).round()).abs();
            if units > TABLE1_LAST_DIGIT {
                bad.push(format!("m={m} {name}={x:.6} vs {r}"));
            }
        }
    }
    let limit = sierpinski_dimension(2, 0.5).unwrap();
    if (limit - 3f64.ln() / 2f64.ln()).abs() > 1e-12 {
        bad.push(format!("limit {limit}"));
    }
    let t = start.elapsed();
    let pass = bad.is_empty() && t < TABLE_TIME;
    outcome(pass, format!("{} mismatches {:?}, {:.0?}", bad.len(), bad, t))
}

fn gasket_table() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut worst: f64 = 0.0;
    for (i, row) in REFERENCE_GASKET_TABLE.iter().enumerate() {
        let d = i + 2;
        for (j, &r) in row.iter().enumerate() {
            let x = if j < 5 {
                gasket_dimension(j + 2, d).unwrap()
            } else {
                sierpinski_dimension(d, 0.5).unwrap()
            };
            worst = worst.max((x - r).abs());
            if (x - r).abs() > TABLE2_TOL {
                let col = if j < 5 { format!("m={}", j + 2) } else { "lambda=1/2".into() };
                bad.push(format!("d={d} {col}: {x:.4} vs {r}"));
            }
        }
    }
    let t = start.elapsed();
    let pass = bad.is_empty() && t < TABLE_TIME;
    outcome(pass, format!("worst |diff| {worst:.4}, mismatches {bad:?}, {t:.0?}"))
}

fn closed_forms() -> Outcome {
    let t = tau(2, 2).unwrap().approx();
    let cf = 2.0 / 3f64.sqrt() * (7.0 * std::f64::consts::PI / 18.0).cos();
    let s = sigma(2).unwrap();
    let half = s.as_rational() == Some(&q(1, 2));
    let pass = (t - cf).abs() < TAU_CLOSED_FORM_TOL && half;
    outcome(pass, format!("|tau_2 - cf| = {:.2e}, sigma_2 = 1/2 exactly: {half}", (t - cf).abs()))
}

fn constant_ordering() -> Outcome {
    let third = AlgebraicNumber::rational(q(1, 3));
    let two_thirds = AlgebraicNumber::rational(q(2, 3));
    let mut bad = Vec::new();
    for m in 2..=ORDERING_M_MAX {
        let (t, s, w) = (tau(m, 2).unwrap(), sigma(m).unwrap(), multinacci(m).unwrap());
        if !(lt(&third, &t) && lt(&t, &s) && lt(&s, &w) && lt(&w, &two_thirds)) {
            bad.push(m);
        }
    }
    outcome(bad.is_empty(), format!("m = 2..={ORDERING_M_MAX}, failing m: {bad:?}"))
}

fn multinacci_holes() -> Outcome {
    let start = Instant::now();
    let mut details = Vec::new();
    let mut pass = true;
    for m in 2..=4 {
        let w = omega(m);
        let mut tower = LevelTower::new(&w, 2, Limits::default());
        let mut violations = 0;
        for n in 0..=HOLE_DEPTH {
            tower.grow_to(n + 1).unwrap();
            violations += classify_with_tower(&tower, n).unwrap().violations.len();
        }
        pass &= violations == 0;
        details.push(format!("m={m}: {violations} violations"));
    }
    let t = start.elapsed();
    pass &= t < HOLE_TIME;
    outcome(pass, format!("n <= {HOLE_DEPTH}, {}, {t:.1?}", details.join(", ")))
}

fn overlap_identity() -> Outcome {
    let mut bad = Vec::new();
    for m in OVERLAP_M {
        let w = omega(m);
        let a = image_region(&SymbolWord::parse("0", 2).unwrap(), &w);
        let b = image_region(&SymbolWord::parse("1", 2).unwrap(), &w);
        let word = SymbolWord::parse(&format!("0{}", "1".repeat(m)), 2).unwrap();
        let c = image_region(&word, &w);
        match corner_intersection(&a, &b, &w).unwrap() {
            Some(lower) if lower == c.lower => {}
            _ => bad.push(m),
        }
    }
    outcome(bad.is_empty(), format!("m = 2..=6, failing m: {bad:?}"))
}

fn converse_at_059() -> Outcome {
    let l = ExactReal::ratio(59, 100);
    let w = converse_witness(&l, CONVERSE_N_MAX).unwrap();
    let verdict = check_total_self_similarity(&l, 2, CONVERSE_N_MAX, Limits::default()).unwrap();
    let (found, wdesc) = match &w {
        ConverseOutcome::Witness(w) => (w.n <= CONVERSE_N_MAX, format!("witness n={} digits {:?}", w.n, w.digits)),
        ConverseOutcome::NotFound { reason } => (false, format!("no witness: {reason}")),
    };
    let (violates, vdesc) = match &verdict {
        Verdict::Violation {
            level,
            hole_word,
            region_word,
        } => (true, format!("first violation at level {level} (hole {hole_word}, region {region_word})")),
        Verdict::ConsistentUpTo { n_max } => (false, format!("no violation up to {n_max}")),
    };
    outcome(found && violates, format!("{wdesc}; {vdesc}"))
}

fn radial_regime() -> Outcome {
    let l = ExactReal::ratio(13, 20);
    let mut tower = LevelTower::new(&l, 2, Limits::default());
    let mut non_radial = 0;
    for n in 0..=RADIAL_DEPTH {
        tower.grow_to(n + 1).unwrap();
        non_radial += classify_with_tower(&tower, n)
            .unwrap()
            .genuine_words()
            .iter()
            .filter(|w| !is_radial(w))
            .count();
    }
    let level = build_level(&l, 2, RADIAL_AREA_LEVEL, Limits::default()).unwrap();
    let a = area_of_level(&level, 1024).unwrap();
    let pass = non_radial == 0 && a.lo > RADIAL_AREA_FLOOR;
    outcome(
        pass,
        format!("non-radial genuine holes up to level {RADIAL_DEPTH}: {non_radial}; area at level {RADIAL_AREA_LEVEL} in [{:.4}, {:.4}]", a.lo, a.hi),
    )
}

fn measure_zero_evidence() -> Outcome {
    let w = omega(2);
    let mut tower = LevelTower::new(&w, 2, Limits::default());
    let mut his = Vec::new();
    for n in MEASURE_ZERO_LEVELS {
        tower.grow_to(n).unwrap();
        his.push(area_of_level(&tower.level(n), AREA_RESOLUTION).unwrap().hi);
    }
    let decreasing = his.windows(2).all(|p| p[1] < p[0]);
    let last = *his.last().unwrap();
    let pass = decreasing && last < MEASURE_ZERO_CEILING;
    let shown: Vec<String> = his.iter().map(|h| format!("{h:.4}")).collect();
    outcome(
        pass,
        format!("upper bounds n=4..=12 at resolution {AREA_RESOLUTION}: [{}]; strictly decreasing: {decreasing}; n=12 below {MEASURE_ZERO_CEILING}: {}", shown.join(", "), last < MEASURE_ZERO_CEILING),
    )
}

fn box_dimensions() -> Outcome {
    let mut pass = true;
    let mut details = Vec::new();
    for (l, (target, tol)) in [(omega(2), BOX_GOLDEN), (ExactReal::ratio(1, 2), BOX_SIERPINSKI)] {
        let start = Instant::now();
        let level = build_level(&l, 2, BOX_LEVEL, Limits::default()).unwrap();
        let b = box_dimension_of_level(&level, default_box_range(BOX_LEVEL)).unwrap();
        let t = start.elapsed();
        pass &= (b.slope - target).abs() <= tol && t < BOX_TIME;
        details.push(format!("{l}: {:.4} (target {target} +- {tol}, {t:.1?})", b.slope));
    }
    outcome(pass, details.join("; "))
}

fn counting_consistency() -> Outcome {
    let w = omega(2);
    let u = u_sequence(HOLE_DEPTH).unwrap().values;
    let mut tower = LevelTower::new(&w, 2, Limits::default());
    let mut genuine = Vec::new();
    for n in 0..=HOLE_DEPTH {
        tower.grow_to(n + 1).unwrap();
        genuine.push(classify_with_tower(&tower, n).unwrap().genuine.len() as i128);
    }
    let gf = (3..=6).all(|m| gf_series_check(m, GF_K_MAX).unwrap());
    outcome(
        u == genuine && gf,
        format!("u = {u:?}, genuine holes = {genuine:?}; generating functions m=3..=6, k<={GF_K_MAX}: {gf}"),
    )
}

fn uniqueness_growth() -> Outcome {
    let r2 = successive_ratio(2, UNIQ_N).unwrap();
    let r3 = successive_ratio(3, UNIQ_N).unwrap();
    let s3 = 1.0 / sigma(3).unwrap().approx();
    let pass = (r2 - UNIQ_M2.0).abs() <= UNIQ_M2.1 && ((r3 - s3) / s3).abs() <= UNIQ_M3_REL;
    outcome(pass, format!("n={UNIQ_N}: m=2 ratio {r2:.5}; m=3 ratio {r3:.5} vs 1/sigma_3 = {s3:.5}"))
}

fn separation_constants() -> Outcome {
    let mut pass = true;
    let mut details = Vec::new();
    for m in 2..=4 {
        let t = ExactReal::algebraic(multinacci_inverse(m).unwrap(), format!("omega-inv:{m}"));
        let e = ell_upper(&t, ELL_DEGREE).unwrap();
        // |ρ| = ω_m = 1/θ exactly iff |ρ|·θ = 1
        let a = t.abs(&e.witness.value).unwrap();
        let exact = t.mul(&a, &t.generator()) == t.one();
        pass &= exact;
        details.push(format!("1/omega_{m}: {:.6} exact={exact}", e.min_abs));
    }
    for (k, ceiling) in (1..=4).zip(PISOT_CEILINGS) {
        let t = ExactReal::algebraic(small_pisot(k).unwrap(), format!("pisot:{k}"));
        let e = ell_upper(&t, PISOT_DEGREE).unwrap();
        let ok = e.witness.abs_bracket.1 <= ceiling;
        pass &= ok;
        details.push(format!("pisot {k}: {:.5} <= {ceiling}: {ok}", e.min_abs));
    }
    let mut thetas: Vec<ExactReal> = (2..=4)
        .map(|m| ExactReal::algebraic(multinacci_inverse(m).unwrap(), "omega-inv"))
        .chain((1..=4).map(|k| ExactReal::algebraic(small_pisot(k).unwrap(), "pisot")))
        .collect();
    thetas.extend(BOUND_THETAS.iter().map(|&(a, b)| ExactReal::ratio(a, b)));
    let mut agree = true;
    for t in &thetas {
        for n in 1..=BRUTE_DEGREE {
            let a = ell_upper(t, n).unwrap();
            let b = ell_brute(t, n).unwrap();
            agree &= a.witness.coeffs == b.witness.coeffs;
        }
    }
    pass &= agree;
    details.push(format!("branch-and-bound = brute force for n <= {BRUTE_DEGREE}: {agree}"));
    outcome(pass, details.join("; "))
}

fn separation_bound() -> Outcome {
    let mut pass = true;
    let mut details = Vec::new();
    for (a, b) in BOUND_THETAS {
        let r = separation_bound_check(&ExactReal::ratio(a, b), ELL_DEGREE).unwrap();
        pass &= r.certified;
        details.push(format!("{a}/{b}: {:.6} < {:.6}: {}", r.min_abs, r.bound_2_over_2_plus_theta, r.certified));
    }
    outcome(pass, details.join("; "))
}

fn main() {
    let criteria: [(&str, Check); 14] = [
        ("multinacci dimension table", multinacci_table),
        ("d-gasket dimension table", gasket_table),
        ("closed forms of tau_2 and sigma_2", closed_forms),
        ("1/3 < tau_m < sigma_m < omega_m < 2/3", constant_ordering),
        ("no hole violations at omega_2..4", multinacci_holes),
        ("overlap f0 ∩ f1 = f0 f1^m", overlap_identity),
        ("converse witness at 0.59", converse_at_059),
        ("radial regime at 0.65", radial_regime),
        ("area upper bounds at omega_2", measure_zero_evidence),
        ("box-counting dimensions", box_dimensions),
        ("counting sequences", counting_consistency),
        ("unique-address growth", uniqueness_growth),
        ("separation constants", separation_constants),
        ("2/(2+theta) bound", separation_bound),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = check();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("{tag} {:>2} {name}: {} [{:.1?}]", i + 1, o.detail, start.elapsed());
        if !o.pass {
            failed.push(i + 1);
        }
    }
    println!("{} of {} criteria pass; failing: {failed:?}", criteria.len() - failed.len(), criteria.len());
    if !failed.is_empty() {
        std::process::exit(1);
    }
}
