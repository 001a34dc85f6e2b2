//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.
//!
//! Random corpora come from ChaCha8 with fixed seeds, so every run sees the
//! same instances.

use std::num::NonZeroU64;
use std::time::{Duration, Instant};

use cubecalc::{mc_estimate, PolyDocument};
use cubecalc_core::rat::{frac, int, is_multiple_of, is_positive_integer};
use cubecalc_core::sat::{
    compile_derivative_instance, compile_integration_instance, decide, decide_sat_via_derivative,
    decide_sat_via_integration, default_gadgets, reduce_3sat_to_33sat, scale_multiplier,
    truth_table_sat, verify_gadgets, Clause, CnfFormula, Evidence, Literal, Route,
};
use cubecalc_core::{
    derivative_at_origin_oracle, expand_prodmulti, expand_prodsum, integrate_cwide,
    integrate_disjoint_product, integrate_prodsum, multilinear_coefficient, width_of, Limits,
    Monomial, MultiPoly, ProdMulti, ProdSumUni, Rat, SumFactor, UniPoly, VarId,
};
use num_traits::{Signed, Zero};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

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

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_rat(r: &mut ChaCha8Rng) -> Rat {
    frac(r.random_range(-9..=9), r.random_range(1..=4))
}

fn random_unipoly(r: &mut ChaCha8Rng, max_degree: usize) -> UniPoly {
    let len = r.random_range(1..=max_degree + 1);
    UniPoly::from_coeffs((0..len).map(|_| small_rat(r)).collect())
}

fn random_prodsum(r: &mut ChaCha8Rng) -> ProdSumUni {
    let d = r.random_range(1..=6u32);
    let k = r.random_range(1..=6);
    let factors = (0..k)
        .map(|_| {
            let constant = if r.random_bool(0.3) {
                Rat::zero()
            } else {
                small_rat(r)
            };
            let nparts = r.random_range(1..=d as usize);
            let parts: Vec<(VarId, UniPoly)> = sample(r, d as usize, nparts)
                .into_iter()
                .map(|v| (VarId(v as u32), random_unipoly(r, 2)))
                .collect::<Vec<_>>();
            SumFactor::new(constant, parts)
        })
        .collect();
    ProdSumUni::new(factors, 2).expect("degree at most 2")
}

fn random_monomial(r: &mut ChaCha8Rng, pool: &[u32], max_degree: u32) -> Monomial {
    let mut pairs = Vec::new();
    let mut left = r.random_range(0..=max_degree);
    while left > 0 && !pool.is_empty() {
        let v = pool[r.random_range(0..pool.len())];
        let e = r.random_range(1..=left);
        pairs.push((VarId(v), e));
        left -= e;
    }
    Monomial::from_pairs(pairs)
}

fn random_multipoly(
    r: &mut ChaCha8Rng,
    pool: &[u32],
    max_degree: u32,
    max_terms: usize,
) -> MultiPoly {
    let n = r.random_range(1..=max_terms);
    MultiPoly::from_terms(
        (0..n)
            .map(|_| (random_monomial(r, pool, max_degree), small_rat(r)))
            .collect::<Vec<_>>(),
    )
}

/// Variable `v` may appear in factors `v ..= v + c - 1`.
fn random_cwide(r: &mut ChaCha8Rng) -> (ProdMulti, usize) {
    let c = r.random_range(1..=3usize);
    let m = r.random_range(1..=12usize);
    let factors = (0..m)
        .map(|j| {
            let pool: Vec<u32> = ((j + 1).saturating_sub(c)..=j).map(|v| v as u32).collect();
            random_multipoly(r, &pool, 2, 3)
        })
        .collect();
    (ProdMulti::new(factors, 2).expect("degree at most 2"), c)
}

fn random_prodmulti(r: &mut ChaCha8Rng) -> (ProdMulti, Vec<VarId>) {
    let n = r.random_range(1..=6u32);
    let k = r.random_range(1..=6);
    let pool: Vec<u32> = (0..n).collect();
    let factors = (0..k).map(|_| random_multipoly(r, &pool, 2, 5)).collect();
    (
        ProdMulti::new(factors, 2).expect("degree at most 2"),
        (0..n).map(VarId).collect(),
    )
}

fn random_cnf(r: &mut ChaCha8Rng) -> CnfFormula {
    let n = r.random_range(1..=4usize);
    let k = r.random_range(1..=6);
    let clauses = (0..k)
        .map(|_| {
            let w = r.random_range(1..=n.min(3));
            Clause::new(
                sample(r, n, w)
                    .into_iter()
                    .map(|v| {
                        if r.random_bool(0.5) {
                            Literal::neg(v)
                        } else {
                            Literal::pos(v)
                        }
                    })
                    .collect(),
            )
        })
        .collect();
    CnfFormula::new(n, clauses).expect("variables in range")
}

fn cnf_corpus() -> Vec<CnfFormula> {
    let mut r = rng(7);
    (0..1200).map(|_| random_cnf(&mut r)).collect()
}

fn to_33(f: &CnfFormula) -> CnfFormula {
    if f.is_33sat_instance() {
        f.clone()
    } else {
        reduce_3sat_to_33sat(f).expect("width at most 3")
    }
}

fn c1_gadgets() -> Outcome {
    let report = verify_gadgets(&default_gadgets());
    let expected = [
        ("int f", 1),
        ("int g1", 1),
        ("int g2", 1),
        ("int g1*g2", 4),
        ("int g1*f", 0),
        ("int g2*f", 0),
        ("int g1*g2*f", 0),
    ];
    let bad: Vec<String> = expected
        .iter()
        .filter(|(name, v)| report.get(name).map(|c| c.value.clone()) != Some(int(*v)))
        .map(|(name, _)| name.to_string())
        .collect();
    let values: Vec<String> = report.checks.iter().map(|c| c.value.to_string()).collect();
    outcome(
        bad.is_empty() && report.all_pass(),
        format!("values {}", values.join(",")),
    )
}

fn c2_separable() -> Outcome {
    let x = VarId(0);
    let y = VarId(1);
    let p = MultiPoly::term(Monomial::from_pairs([(x, 2), (y, 3)]), int(1));
    let direct = p.integrate01_all();
    let split = integrate_disjoint_product(
        &MultiPoly::term(Monomial::power(x, 2), int(1)),
        &MultiPoly::term(Monomial::power(y, 3), int(1)),
    )
    .unwrap();
    outcome(
        direct == frac(1, 12) && split == frac(1, 12),
        format!("{direct}, split {split}"),
    )
}

fn c3_examples() -> Outcome {
    let g = default_gadgets();
    let (y1, y2) = (VarId(0), VarId(1));
    let sf = |a: (VarId, &UniPoly), b: Option<(VarId, &UniPoly)>| {
        SumFactor::new(
            Rat::zero(),
            std::iter::once((a.0, a.1.clone())).chain(b.map(|(v, q)| (v, q.clone()))),
        )
    };
    let ex1 = ProdSumUni::new(
        vec![
            sf((y1, &g.g1), Some((y2, &g.g1))),
            sf((y1, &g.g2), Some((y2, &g.f))),
            sf((y1, &g.f), Some((y2, &g.g2))),
        ],
        2,
    )
    .unwrap();
    let ex2 = ProdSumUni::new(
        vec![
            sf((y1, &g.g1), Some((y2, &g.g1))),
            sf((y1, &g.f), None),
            sf((y2, &g.f), None),
        ],
        2,
    )
    .unwrap();
    let l = Limits::default();
    let oracle1 = expand_prodsum(&ex1, &l).unwrap().integrate01_all();
    let dp1 = integrate_prodsum(&ex1, &l).unwrap();
    let oracle2 = expand_prodsum(&ex2, &l).unwrap().integrate01_all();
    let dp2 = integrate_prodsum(&ex2, &l).unwrap();
    let pass = oracle1 == int(8)
        && dp1 == oracle1
        && is_positive_integer(&dp1)
        && oracle2.is_zero()
        && dp2.is_zero();
    outcome(
        pass,
        format!("example 1: oracle {oracle1}, dp {dp1}; example 2: oracle {oracle2}, dp {dp2}"),
    )
}

fn c4_dp_oracle() -> Outcome {
    let mut r = rng(4);
    let l = Limits::default();
    let (mut bad, mut nonzero) = (0, 0);
    let n = 500;
    for _ in 0..n {
        let p = random_prodsum(&mut r);
        let oracle = expand_prodsum(&p, &l).unwrap().integrate01_all();
        let dp = integrate_prodsum(&p, &l).unwrap();
        bad += usize::from(dp != oracle);
        nonzero += usize::from(!oracle.is_zero());
    }
    outcome(
        bad == 0,
        format!("{n} instances, {bad} mismatches, {nonzero} nonzero"),
    )
}

fn c5_cwide_oracle() -> Outcome {
    let mut r = rng(5);
    let l = Limits::default();
    let (mut bad, mut nonzero, mut too_wide) = (0, 0, 0);
    let n = 200;
    for _ in 0..n {
        let (p, c) = random_cwide(&mut r);
        too_wide += usize::from(width_of(&p) > c);
        let oracle = expand_prodmulti(&p, &l).unwrap().integrate01_all();
        let fast = integrate_cwide(&p, c, &l).unwrap();
        bad += usize::from(fast != oracle);
        nonzero += usize::from(!oracle.is_zero());
    }
    outcome(
        bad == 0 && too_wide == 0,
        format!("{n} instances, {bad} mismatches, {nonzero} nonzero"),
    )
}

fn c6_derivative_oracle() -> Outcome {
    let mut r = rng(6);
    let l = Limits::default();
    let (mut bad, mut nonzero) = (0, 0);
    let n = 500;
    for _ in 0..n {
        let (p, vars) = random_prodmulti(&mut r);
        let oracle = derivative_at_origin_oracle(&p, &vars, &l).unwrap();
        let pruned = multilinear_coefficient(&p, &vars, &l).unwrap();
        bad += usize::from(pruned != oracle);
        nonzero += usize::from(!oracle.is_zero());
    }
    outcome(
        bad == 0,
        format!("{n} instances, {bad} mismatches, {nonzero} nonzero"),
    )
}

fn c7_decisions(corpus: &[CnfFormula]) -> Outcome {
    let l = Limits::default();
    let gadgets = default_gadgets();
    let (mut bad, mut sat, mut by_poly, mut raw_derivative) = (0, 0, 0, 0);
    for f in corpus {
        let truth = truth_table_sat(f, &l).unwrap();
        let a = decide_sat_via_integration(f, &l).unwrap();
        let b = decide_sat_via_derivative(f, &l).unwrap();
        bad += usize::from(a != truth || b != truth);
        sat += usize::from(truth);
        let d = decide(f, Route::Integration, &l).unwrap();
        by_poly += usize::from(matches!(d.evidence, Evidence::Integral(_)));

        // the same question without the simplification step
        let g = to_33(f);
        let p = compile_integration_instance(&g, &gadgets, 1).unwrap();
        bad += usize::from(integrate_prodsum(&p, &l).unwrap().is_positive() != truth);
        match compile_derivative_instance(&g, 1) {
            Ok(inst) => {
                let c = multilinear_coefficient(&inst.product, &inst.vars, &l).unwrap();
                bad += usize::from(c.is_positive() != truth);
                raw_derivative += 1;
            }
            Err(cubecalc_core::Error::TooManyClauses { .. }) => {}
            Err(e) => panic!("unexpected compile error {e}"),
        }
    }
    outcome(
        bad == 0,
        format!(
            "{} formulas ({sat} sat); {by_poly} reach the polynomial routes after simplification; \
             unsimplified: {} integrals, {raw_derivative} coefficients; {bad} disagreements",
            corpus.len(),
            corpus.len()
        ),
    )
}

fn c8_reduction(corpus: &[CnfFormula]) -> Outcome {
    let l = Limits::default();
    let (mut not33, mut unequal, mut max_vars) = (0, 0, 0);
    for f in corpus {
        let g = reduce_3sat_to_33sat(f).unwrap();
        max_vars = max_vars.max(g.num_vars());
        not33 += usize::from(!g.is_33sat_instance());
        unequal += usize::from(truth_table_sat(f, &l).unwrap() != truth_table_sat(&g, &l).unwrap());
    }
    outcome(
        not33 == 0 && unequal == 0,
        format!(
            "{} formulas, {not33} not (3,3), {unequal} not equisatisfiable, up to {max_vars} vars",
            corpus.len()
        ),
    )
}

fn c9_scaling(corpus: &[CnfFormula]) -> Outcome {
    let l = Limits::default();
    let gadgets = default_gadgets();
    let (mut checked, mut derivative_checked, mut bad) = (0, 0, 0);
    for f in corpus {
        let sat = truth_table_sat(f, &l).unwrap();
        let g = to_33(f);
        for s in [1u64, 2, 5] {
            let unit = scale_multiplier(s).unwrap();
            let p = compile_integration_instance(&g, &gadgets, s).unwrap();
            let v = integrate_prodsum(&p, &l).unwrap();
            let ok = if sat {
                checked += 1;
                v >= unit && is_multiple_of(&v, unit.numer())
            } else {
                v.is_zero()
            };
            bad += usize::from(!ok);

            // the derivative instance carries the same multiplier
            if let Ok(inst) = compile_derivative_instance(&g, s) {
                let c = multilinear_coefficient(&inst.product, &inst.vars, &l).unwrap();
                let ok = if sat {
                    c >= unit && is_multiple_of(&c, unit.numer())
                } else {
                    c.is_zero()
                };
                derivative_checked += usize::from(sat);
                bad += usize::from(!ok);
            }
        }
    }
    outcome(
        bad == 0,
        format!(
            "{checked} satisfiable (formula, S) pairs by integral, {derivative_checked} by coefficient, {bad} violations"
        ),
    )
}

fn c10_monte_carlo() -> Outcome {
    let g = default_gadgets();
    let x = VarId(0);
    let single = |polys: &[&UniPoly]| {
        let factors = polys
            .iter()
            .map(|q| SumFactor::new(Rat::zero(), [(x, (*q).clone())]))
            .collect();
        ProdSumUni::new(factors, 2).unwrap()
    };
    let mut corpus: Vec<(String, ProdSumUni)> = vec![
        ("f".into(), single(&[&g.f])),
        ("g1".into(), single(&[&g.g1])),
        ("g2".into(), single(&[&g.g2])),
        ("g1*g2".into(), single(&[&g.g1, &g.g2])),
        ("g1*f".into(), single(&[&g.g1, &g.f])),
        ("g2*f".into(), single(&[&g.g2, &g.f])),
        ("g1*g2*f".into(), single(&[&g.g1, &g.g2, &g.f])),
    ];
    let ex1 = CnfFormula::from_signed(2, &[&[1, 2], &[1, -2], &[-1, 2]]);
    let ex2 = CnfFormula::from_signed(2, &[&[1, 2], &[-1], &[-2]]);
    corpus.push((
        "example 1".into(),
        compile_integration_instance(&ex1, &g, 1).unwrap(),
    ));
    corpus.push((
        "example 2".into(),
        compile_integration_instance(&ex2, &g, 1).unwrap(),
    ));

    let samples = NonZeroU64::new(100_000).unwrap();
    let l = Limits::default();
    let mut failures = Vec::new();
    let mut worst: f64 = 0.0;
    for (i, (name, p)) in corpus.iter().enumerate() {
        let exact = integrate_prodsum(p, &l).unwrap();
        let exact = num_traits::ToPrimitive::to_f64(&exact).unwrap();
        let doc = PolyDocument::from_prodsum(p.clone());
        let seed = 1000 + i as u64;
        let a = mc_estimate(&doc, samples, seed);
        let b = mc_estimate(&doc, samples, seed);
        let z = (a.mean - exact).abs() / a.std_error;
        worst = worst.max(z);
        let same =
            a.mean.to_bits() == b.mean.to_bits() && a.std_error.to_bits() == b.std_error.to_bits();
        if !(z <= 5.0 && same) {
            failures.push(format!("{name} (z = {z:.2}, repeatable = {same})"));
        }
    }
    let detail = if failures.is_empty() {
        format!(
            "{} documents, worst deviation {worst:.2} SE, repeat runs bit-identical",
            corpus.len()
        )
    } else {
        format!("failed: {}", failures.join("; "))
    };
    outcome(failures.is_empty(), detail)
}

type Criterion<'a> = (&'static str, Duration, Box<dyn Fn() -> Outcome + 'a>);

fn main() {
    let corpus = cnf_corpus();
    let criteria: Vec<Criterion> = vec![
        (
            "gadget certificate",
            Duration::from_secs(1),
            Box::new(c1_gadgets),
        ),
        (
            "separable integral x^2 y^3 = 1/12",
            Duration::from_secs(1),
            Box::new(c2_separable),
        ),
        (
            "worked examples",
            Duration::from_secs(2),
            Box::new(c3_examples),
        ),
        (
            "integration DP vs expansion",
            Duration::from_secs(120),
            Box::new(c4_dp_oracle),
        ),
        (
            "c-wide vs expansion",
            Duration::from_secs(120),
            Box::new(c5_cwide_oracle),
        ),
        (
            "pruned coefficient vs expansion",
            Duration::from_secs(120),
            Box::new(c6_derivative_oracle),
        ),
        (
            "decision equivalence",
            Duration::from_secs(600),
            Box::new(|| c7_decisions(&corpus)),
        ),
        (
            "reduction soundness",
            Duration::from_secs(600),
            Box::new(|| c8_reduction(&corpus)),
        ),
        (
            "scaling bound",
            Duration::from_secs(600),
            Box::new(|| c9_scaling(&corpus)),
        ),
        (
            "Monte-Carlo sanity",
            Duration::from_secs(120),
            Box::new(c10_monte_carlo),
        ),
    ];

    let mut failed = 0;
    for (i, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = check();
        let took = start.elapsed();
        let in_time = took <= *budget;
        let pass = out.pass && in_time;
        failed += usize::from(!pass);
        let timing = if in_time {
            String::new()
        } else {
            format!(" [over budget {budget:?}]")
        };
        println!(
            "criterion {:>2} {}: {} ({}; {:.2?}){timing}",
            i + 1,
            name,
            if pass { "PASS" } else { "FAIL" },
            out.detail,
            took,
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
