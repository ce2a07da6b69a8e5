//! One test per acceptance criterion. Each prints a single
//! `criterion NN: PASS|FAIL ...` line before asserting.

use std::time::{Duration, Instant};

use neighborly::formulas::{
    fh_formula, height_formula, mapping_cone_recursion, pdpath_formula, pdreg_formula,
};
use neighborly::ideal::{
    check_linear_quotients, complementary_ideal, find_linear_quotients_order, minimal_primes,
    path_ideal,
};
use neighborly::simplicial::{
    fh_vectors, has_free_vertex_property, is_shelling_order, multiplicity_from_sr,
    ni_shelling_order,
};
use neighborly::verify::random_cross_validation;
use neighborly::{
    graph_square, minimal_dominating_sets, ni_pn2, path_graph, Caps, Engine, SeqCm,
    SimplicialComplex,
};

const SECOND: Duration = Duration::from_secs(1);
const LIMIT_HEIGHT: Duration = Duration::from_secs(10);
const LIMIT_DOMINATION: Duration = Duration::from_secs(30);
const LIMIT_PDREG: Duration = Duration::from_secs(300);
const LIMIT_SEQCM: Duration = Duration::from_secs(300);
const LIMIT_PDPATH: Duration = Duration::from_secs(120);
const LIMIT_RECURSION: Duration = SECOND;
const LIMIT_FACES: Duration = Duration::from_secs(5);
const LIMIT_CROSSVAL: Duration = Duration::from_secs(600);

const CROSSVAL_SEED: u64 = 0x5eed_2024;
const CROSSVAL_COUNT: usize = 200;
const CROSSVAL_MAX_AMBIENT: usize = 8;

fn report(id: u32, title: &str, failures: &[String], elapsed: Duration, limit: Option<Duration>) {
    let slow = limit.is_some_and(|l| elapsed > l);
    let ok = failures.is_empty() && !slow;
    let timing = match limit {
        Some(l) => format!("{:.2}s of {:.0}s", elapsed.as_secs_f64(), l.as_secs_f64()),
        None => format!("{:.2}s", elapsed.as_secs_f64()),
    };
    println!(
        "criterion {id:02}: {} {title} ({timing})",
        if ok { "PASS" } else { "FAIL" }
    );
    for f in failures {
        println!("    {f}");
    }
    assert!(failures.is_empty(), "criterion {id} failed: {failures:?}");
    assert!(!slow, "criterion {id} exceeded its time limit: {timing}");
}

fn engine() -> Engine {
    Engine::default()
}

fn facet_complex(n: usize) -> SimplicialComplex {
    SimplicialComplex::facet_complex(&ni_pn2(n).unwrap()).unwrap()
}

#[test]
fn criterion_01_height() {
    let t = Instant::now();
    let caps = Caps::default();
    let failures: Vec<String> = (3..=20)
        .filter_map(|n| {
            let h = minimal_primes(&ni_pn2(n).unwrap(), caps.max_sets)
                .unwrap()
                .height;
            let want = n.div_ceil(5);
            (h != want || height_formula(n).unwrap() != want)
                .then(|| format!("n={n}: engine {h}, expected {want}"))
        })
        .collect();
    report(
        1,
        "minimal-prime height equals ceil(n/5), n in 3..20",
        &failures,
        t.elapsed(),
        Some(LIMIT_HEIGHT),
    );
}

#[test]
fn criterion_02_domination() {
    let t = Instant::now();
    let caps = Caps::default();
    let failures: Vec<String> = (3..=14)
        .filter_map(|n| {
            let d = minimal_dominating_sets(&graph_square(&path_graph(n).unwrap()), caps.max_sets)
                .unwrap();
            let p = minimal_primes(&ni_pn2(n).unwrap(), caps.max_sets).unwrap();
            ((d.gamma, d.gamma_prime) != (p.height, p.bight)).then(|| {
                format!(
                    "n={n}: (gamma, gamma') = ({}, {}), (height, bight) = ({}, {})",
                    d.gamma, d.gamma_prime, p.height, p.bight
                )
            })
        })
        .collect();
    report(
        2,
        "domination numbers equal height and big height, n in 3..14",
        &failures,
        t.elapsed(),
        Some(LIMIT_DOMINATION),
    );
}

fn pdreg_failures(range: std::ops::RangeInclusive<usize>, e: &Engine) -> Vec<String> {
    range
        .filter_map(|n| {
            let inv = e.invariants(&ni_pn2(n).unwrap()).unwrap();
            let want = pdreg_formula(n).unwrap();
            ((inv.pd, inv.reg) != want)
                .then(|| format!("n={n}: engine ({}, {}), formula {want:?}", inv.pd, inv.reg))
        })
        .collect()
}

#[test]
fn criterion_03_pdreg() {
    let t = Instant::now();
    let failures = pdreg_failures(3..=14, &engine());
    report(
        3,
        "Hochster pd/reg match the case formulas, n in 3..14",
        &failures,
        t.elapsed(),
        Some(LIMIT_PDREG),
    );
}

#[test]
#[ignore = "stretch range; run with --ignored"]
fn criterion_03_pdreg_stretch() {
    let t = Instant::now();
    let e = Engine::new(
        neighborly::Field::Rational,
        Caps::default().with_max_ambient(16),
    );
    let failures = pdreg_failures(15..=16, &e);
    report(
        3,
        "stretch: Hochster pd/reg match the case formulas, n in 15..16",
        &failures,
        t.elapsed(),
        None,
    );
}

#[test]
fn criterion_04_depth_equals_reg() {
    let t = Instant::now();
    let e = engine();
    let failures: Vec<String> = (3..=14)
        .filter_map(|n| {
            let inv = e.invariants(&ni_pn2(n).unwrap()).unwrap();
            (inv.depth != inv.reg).then(|| format!("n={n}: depth {} reg {}", inv.depth, inv.reg))
        })
        .collect();
    report(
        4,
        "depth equals reg, n in 3..14",
        &failures,
        t.elapsed(),
        None,
    );
}

/// The stated characterization puts Cohen-Macaulayness at n = 6 only. At
/// n = 3 the ideal is principal, so it is Cohen-Macaulay as well; this
/// criterion is expected to fail on that value.
#[test]
fn criterion_05_cohen_macaulay() {
    let t = Instant::now();
    let e = engine();
    let cm: Vec<usize> = (3..=14)
        .filter(|&n| e.is_cohen_macaulay(&ni_pn2(n).unwrap()).unwrap())
        .collect();
    let failures = if cm == [6] {
        vec![]
    } else {
        vec![format!("Cohen-Macaulay at n in {cm:?}, expected [6]")]
    };
    report(
        5,
        "Cohen-Macaulay exactly at n = 6 within 3..14",
        &failures,
        t.elapsed(),
        None,
    );
}

#[test]
fn criterion_06_sequentially_cm() {
    let t = Instant::now();
    let e = engine();
    let failures: Vec<String> = (7..=10)
        .filter_map(|n| {
            let v = e.is_sequentially_cm(&ni_pn2(n).unwrap()).unwrap();
            (v != SeqCm::Yes).then(|| format!("n={n}: {v:?}"))
        })
        .collect();
    report(
        6,
        "dual squarefree components are linear, n in 7..10",
        &failures,
        t.elapsed(),
        Some(LIMIT_SEQCM),
    );
}

#[test]
fn criterion_07_pd_equals_bight() {
    let t = Instant::now();
    let e = engine();
    let failures: Vec<String> = (7..=14)
        .filter_map(|n| {
            let b = e.bight_vs_pd(&ni_pn2(n).unwrap()).unwrap();
            (!b.equal).then(|| format!("n={n}: bight {} pd {}", b.bight, b.pd))
        })
        .collect();
    report(
        7,
        "pd equals big height, n in 7..14",
        &failures,
        t.elapsed(),
        None,
    );
}

#[test]
fn criterion_08_path_ideals() {
    let t = Instant::now();
    let e = engine();
    let mut failures = Vec::new();
    for n in 2..=11 {
        for k in 2..=n {
            let b = e.betti_hochster(&path_ideal(n, k).unwrap()).unwrap();
            let want = pdpath_formula(n, k).unwrap();
            if (b.pd(), b.reg()) != want {
                failures.push(format!(
                    "n={n} t={k}: engine ({}, {}), formula {want:?}",
                    b.pd(),
                    b.reg()
                ));
            }
        }
    }
    report(
        8,
        "path ideal pd/reg, 2 <= t <= n <= 11",
        &failures,
        t.elapsed(),
        Some(LIMIT_PDPATH),
    );
}

#[test]
fn criterion_09_recursion() {
    let t = Instant::now();
    let failures: Vec<String> = (7..=500)
        .filter_map(|n| {
            let r = mapping_cone_recursion(n).unwrap();
            let f = pdreg_formula(n).unwrap();
            (r != f).then(|| format!("n={n}: recursion {r:?}, formula {f:?}"))
        })
        .collect();
    report(
        9,
        "mapping-cone recursion equals the closed form, n in 7..500",
        &failures,
        t.elapsed(),
        Some(LIMIT_RECURSION),
    );
}

#[test]
fn criterion_10_face_counts() {
    let t = Instant::now();
    let caps = Caps::default();
    let mut failures = Vec::new();
    for n in 7..=40 {
        let got = fh_vectors(&facet_complex(n), caps.max_faces).unwrap();
        let k = n as i64;
        let f = vec![1, k, 4 * k - 14, 6 * k - 30, 4 * k - 23, k - 6];
        let h = vec![1, k - 5, -4, 2, 0, 0];
        if got.f != f || got.h != h || got.euler != 1 || got.reduced_euler != 0 {
            failures.push(format!(
                "n={n}: f {:?} h {:?} chi {} rchi {}",
                got.f, got.h, got.euler, got.reduced_euler
            ));
        }
        let formula = fh_formula(n).unwrap();
        if formula.f != f || formula.h != h {
            failures.push(format!(
                "n={n}: closed form disagrees with the stated vectors"
            ));
        }
    }
    report(
        10,
        "f-vector, h-vector and Euler characteristics, n in 7..40",
        &failures,
        t.elapsed(),
        Some(LIMIT_FACES),
    );
}

#[test]
fn criterion_11_shelling() {
    let t = Instant::now();
    let failures: Vec<String> = (7..=40)
        .filter(|&n| !is_shelling_order(&facet_complex(n), &ni_shelling_order(n).unwrap()).unwrap())
        .map(|n| format!("n={n}: order is not a shelling"))
        .collect();
    report(
        11,
        "standard facet order is a shelling, n in 7..40",
        &failures,
        t.elapsed(),
        None,
    );
}

#[test]
fn criterion_12_free_vertex() {
    let t = Instant::now();
    let depth = Caps::default().max_recursion_depth;
    let failures: Vec<String> = (7..=40)
        .filter(|&n| !has_free_vertex_property(&facet_complex(n), depth).unwrap())
        .map(|n| format!("n={n}: free vertex property fails"))
        .collect();
    report(
        12,
        "free vertex property, n in 7..40",
        &failures,
        t.elapsed(),
        None,
    );
}

#[test]
fn criterion_13_linear_quotients() {
    let t = Instant::now();
    let cap = Caps::default().max_search_nodes;
    let mut failures = Vec::new();
    for n in 7..=12 {
        let ic = complementary_ideal(&facet_complex(n)).unwrap();
        match find_linear_quotients_order(&ic, cap).unwrap() {
            Some(order) if check_linear_quotients(&ic, &order).unwrap() => {}
            Some(_) => failures.push(format!("n={n}: witness failed re-verification")),
            None => failures.push(format!("n={n}: no linear quotients order")),
        }
    }
    report(
        13,
        "complementary ideal has linear quotients, n in 7..12",
        &failures,
        t.elapsed(),
        None,
    );
}

#[test]
fn criterion_14_cross_validation() {
    let t = Instant::now();
    let e = engine();
    let cv =
        random_cross_validation(CROSSVAL_COUNT, CROSSVAL_MAX_AMBIENT, CROSSVAL_SEED, &e).unwrap();
    let mut failures: Vec<String> = cv
        .mismatches
        .iter()
        .map(|m| format!("random ideal mismatch:\n{m}"))
        .collect();
    if cv.tested != CROSSVAL_COUNT {
        failures.push(format!("tested {} ideals", cv.tested));
    }
    for n in 3..=10 {
        let i = ni_pn2(n).unwrap();
        if e.betti_hochster(&i).unwrap() != e.betti_koszul(&i).unwrap() {
            failures.push(format!("n={n}: Hochster and Koszul tables differ"));
        }
    }
    report(
        14,
        "Hochster engine equals Koszul oracle on 200 random ideals and NI(P_n^2), n <= 10",
        &failures,
        t.elapsed(),
        Some(LIMIT_CROSSVAL),
    );
}

#[test]
fn criterion_15_multiplicity() {
    let t = Instant::now();
    let caps = Caps::default();
    let mut failures = Vec::new();
    let h7 = fh_vectors(&facet_complex(7), caps.max_faces)
        .unwrap()
        .h_sum();
    let sr7 = multiplicity_from_sr(&ni_pn2(7).unwrap(), caps.max_sets).unwrap();
    println!("    n=7: sum of h = {h7}, Stanley-Reisner top facets = {sr7} (reported side by side, not asserted equal)");
    if (h7, sr7) != (1, 8) {
        failures.push(format!("n=7: expected (1, 8), got ({h7}, {sr7})"));
    }
    for n in 7..=40 {
        let s = fh_vectors(&facet_complex(n), caps.max_faces)
            .unwrap()
            .h_sum();
        if s != n as i64 - 6 {
            failures.push(format!("n={n}: sum of h = {s}, expected {}", n - 6));
        }
    }
    report(
        15,
        "multiplicity values surfaced; sum of h equals n - 6 for n in 7..40",
        &failures,
        t.elapsed(),
        None,
    );
}
