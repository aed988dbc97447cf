//! End-to-end acceptance run: one line per criterion, exiting non-zero
//! if any of criteria 1 to 9 fails. Criterion 10 is a timing report.

use std::time::{Duration, Instant};

use hyperprod::core::factor::{covering_product, factor_cartesian, factor_oracle, CoveringPair, OracleOptions, DEFAULT_PIPELINE_CAP};
use hyperprod::core::invariant::{chromatic_number, fractional_covering_number, partition_number, Budget, Rational};
use hyperprod::core::iso::is_isomorphic;
use hyperprod::core::product::{categorial, product_with, square, ProductKind, ProductOptions, DEFAULT_CATEGORIAL_CAP};
use hyperprod::core::section::{l2_product, l2_section};
use hyperprod::core::{ExtNat, Hypergraph};
use hyperprod::harness::oracles::{distance_lemma_applies, distance_mismatch, random_cover, two_section_commutes};
use hyperprod::harness::{
    all_hypergraphs, draw_prime_pair, find_associativity_counterexample, generate_with, run_suite, same_factors, trial_rng,
    GenParams, Outcome, TheoremReport,
};
use rand::Rng;

use ProductKind::*;

const SEED: u64 = 20_240_917;

struct Line {
    number: usize,
    title: &'static str,
    passed: Option<bool>,
    detail: String,
}

impl Line {
    fn new(number: usize, title: &'static str, passed: bool, detail: impl Into<String>) -> Self {
        Line { number, title, passed: Some(passed), detail: detail.into() }
    }

    fn info(number: usize, title: &'static str, detail: impl Into<String>) -> Self {
        Line { number, title, passed: None, detail: detail.into() }
    }

    fn print(&self) {
        let tag = match self.passed {
            Some(true) => "PASS",
            Some(false) => "FAIL",
            None => "INFO",
        };
        println!("[{tag}] criterion {:>2}: {}: {}", self.number, self.title, self.detail);
    }
}

fn h(n: usize, edges: &[&[usize]]) -> Hypergraph<usize> {
    Hypergraph::from_index_edges(n, edges).unwrap()
}

fn k2() -> Hypergraph<usize> {
    h(2, &[&[0, 1]])
}

fn e3() -> Hypergraph<usize> {
    h(3, &[&[0, 1, 2]])
}

fn t3() -> Hypergraph<usize> {
    h(3, &[&[0, 1], &[1, 2], &[0, 2]])
}

fn opts() -> ProductOptions {
    ProductOptions::default()
}

/// Draws `count` hypergraph pairs from `params`, one rng stream per pair.
fn random_pairs(tag: &str, count: usize, params: &GenParams) -> Vec<(Hypergraph<usize>, Hypergraph<usize>)> {
    (0..count as u64)
        .map(|i| {
            let mut rng = trial_rng(SEED, tag, i);
            (generate_with(&mut rng, params).unwrap(), generate_with(&mut rng, params).unwrap())
        })
        .collect()
}

fn pfd_round_trip() -> Line {
    let start = Instant::now();
    let (mut cases, mut agree, mut index) = (0, 0, 0u64);
    let mut failures = Vec::new();
    while cases < 100 && index < 10_000 {
        let mut rng = trial_rng(SEED, "acceptance-pfd", index);
        index += 1;
        let Some((h1, h2)) = draw_prime_pair(&mut rng, 12) else { continue };
        cases += 1;
        let p = product_with(Cartesian, &h1, &h2, &opts()).unwrap().hypergraph;
        let pipeline = factor_cartesian(&p, DEFAULT_PIPELINE_CAP).unwrap();
        let oracle = factor_oracle(&p, Cartesian, &OracleOptions::default()).unwrap();
        let ok = same_factors(&pipeline.factors, &[h1, h2])
            && same_factors(&pipeline.factors, &oracle.factors)
            && oracle.distinct_factorizations == 1
            && pipeline.reproduces(&p);
        if ok {
            agree += 1;
        } else {
            failures.push(index - 1);
        }
    }
    let elapsed = start.elapsed();
    let ok = cases == 100 && agree == 100 && elapsed < Duration::from_secs(300);
    Line::new(
        1,
        "prime factorization round trip",
        ok,
        format!("{agree}/{cases} products agree with the oracle in {:.1}s, failing draws {failures:?}", elapsed.as_secs_f64()),
    )
}

fn distances() -> Line {
    let kinds = [Cartesian, DirectMin, DirectR, Normal, Strong, Lex, Square, Categorial];
    let corpus = all_hypergraphs(3);
    let mut pairs: Vec<(Hypergraph<usize>, Hypergraph<usize>)> =
        corpus.iter().flat_map(|a| corpus.iter().map(move |b| (a.clone(), b.clone()))).collect();
    pairs.extend(random_pairs("acceptance-distance", 50, &GenParams::new(1..=5, 0..=5, 1..=3)));
    let (mut checked, mut mismatches) = (0usize, Vec::new());
    for kind in kinds {
        for (a, b) in &pairs {
            if !distance_lemma_applies(kind, a, b) {
                continue;
            }
            match distance_mismatch(kind, a, b, &opts()) {
                Ok(None) => checked += 1,
                Ok(Some(m)) => mismatches.push(format!("{kind} {m:?}")),
                Err(e) => mismatches.push(format!("{kind}: {e}")),
            }
        }
    }
    let detail = format!("{checked} (kind, pair) cases agree, {} mismatches {:?}", mismatches.len(), mismatches.iter().take(3).collect::<Vec<_>>());
    Line::new(2, "distance formulas", mismatches.is_empty() && checked > 0, detail)
}

fn two_sections() -> Line {
    let corpus: Vec<_> = all_hypergraphs(3).into_iter().filter(|g| !g.has_loops()).collect();
    let (mut checked, mut failures) = (0usize, Vec::new());
    for kind in [Cartesian, DirectMin, Normal, Strong, Lex, Square, Categorial] {
        let needs_cover = matches!(kind, Square | Categorial);
        for a in &corpus {
            for b in &corpus {
                if needs_cover && (a.has_isolated_vertices() || b.has_isolated_vertices()) {
                    continue;
                }
                match two_section_commutes(kind, a, b, &opts()) {
                    Ok(true) => checked += 1,
                    Ok(false) => failures.push(format!("{kind}")),
                    Err(e) => failures.push(format!("{kind}: {e}")),
                }
            }
        }
    }
    let witness = [DirectMax, DirectNr].map(|kind| two_section_commutes(kind, &k2(), &e3(), &opts()) == Ok(false));
    let ok = failures.is_empty() && checked > 0 && witness.iter().all(|&w| w);
    let detail = format!(
        "{checked} pairs commute, {} failures; K2 against E3 breaks direct-max: {}, direct-nr: {}",
        failures.len(),
        witness[0],
        witness[1]
    );
    Line::new(3, "2-section commutation", ok, detail)
}

fn l2_identities() -> Line {
    let pairs = random_pairs("acceptance-l2", 50, &GenParams::new(1..=4, 0..=4, 2..=3).simple());
    let (mut checked, mut failures) = (0usize, Vec::new());
    for kind in [Cartesian, DirectMin, Normal, Strong, Lex, Square, Categorial] {
        for (i, (a, b)) in pairs.iter().enumerate() {
            let expected = l2_section(&product_with(kind, a, b, &opts()).unwrap().hypergraph).unwrap();
            let got = l2_product(kind, &l2_section(a).unwrap(), &l2_section(b).unwrap()).unwrap();
            if got == expected {
                checked += 1;
            } else {
                failures.push(format!("{kind} pair {i}"));
            }
        }
    }
    let detail = format!("{checked}/350 identities hold, failures {failures:?}");
    Line::new(4, "L2-section identities", failures.is_empty() && checked == 350, detail)
}

fn counts(reports: &[&TheoremReport]) -> [usize; 4] {
    let mut c = [0; 4];
    for r in reports {
        c[match r.outcome {
            Outcome::Pass => 0,
            Outcome::Fail => 1,
            Outcome::Skip => 2,
            Outcome::Vacuous => 3,
        }] += 1;
    }
    c
}

fn algebra(reports: &[TheoremReport]) -> Line {
    let algebra: Vec<&TheoremReport> = reports.iter().filter(|r| r.group == "algebra").collect();
    let violations: usize = algebra.iter().map(|r| r.fail).sum();
    let verified: usize = algebra.iter().map(|r| r.pass).sum();
    let failing: Vec<&str> = algebra.iter().filter(|r| r.outcome == Outcome::Fail).map(|r| r.id.as_str()).collect();
    let explored: Vec<String> = [DirectMax, DirectNr, Strong]
        .into_iter()
        .map(|kind| match find_associativity_counterexample(kind, 2) {
            Ok(Some(_)) => format!("{kind}: non-associative triple on 2 vertices"),
            Ok(None) => format!("{kind}: none on 2 vertices"),
            Err(e) => format!("{kind}: {e}"),
        })
        .collect();
    let detail = format!(
        "{} laws, {verified} instances verified, {violations} violations {failing:?}; exploratory associativity search: {}",
        algebra.len(),
        explored.join(", ")
    );
    Line::new(5, "algebra suite on the 3-vertex corpus", violations == 0 && failing.is_empty() && !algebra.is_empty(), detail)
}

fn registry(reports: &[TheoremReport], elapsed: Duration) -> Line {
    let all: Vec<&TheoremReport> = reports.iter().collect();
    let [pass, fail, skip, vacuous] = counts(&all);
    let failing: Vec<&str> = reports.iter().filter(|r| r.outcome == Outcome::Fail).map(|r| r.id.as_str()).collect();
    let ok = fail == 0 && vacuous * 10 <= reports.len();
    let detail = format!(
        "{} checks at 50 trials, seed {SEED}: {pass} pass, {fail} fail {failing:?}, {skip} skip, {vacuous} vacuous in {:.1}s",
        reports.len(),
        elapsed.as_secs_f64()
    );
    Line::new(6, "theorem registry", ok, detail)
}

fn worked_values() -> Line {
    let budget = Budget::default();
    let tau_star = fractional_covering_number(&t3(), &budget).unwrap().value;
    let chi = chromatic_number(&t3(), &budget).unwrap();
    let rho = partition_number(&t3(), &budget).unwrap();
    let cat = categorial(&k2(), &k2(), DEFAULT_CATEGORIAL_CAP).unwrap().hypergraph;
    let sq = square(&k2(), &k2()).hypergraph;
    let checks = [
        ("tau*(T3) = 3/2", tau_star == Rational::new(3, 2)),
        ("chi(T3) = 3", chi == 3),
        ("rho(T3) = inf", rho == ExtNat::Infinite),
        ("categorial(K2,K2) has 7 edges", cat.edge_count() == 7),
        ("categorial(K2,K2) has rank 4", cat.rank() == Some(4)),
        ("square(K2,K2) is one 4-edge", sq.edge_count() == 1 && sq.rank() == Some(4)),
    ];
    let wrong: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    let detail = format!("{}/{} values match, wrong {wrong:?}", checks.len() - wrong.len(), checks.len());
    Line::new(7, "worked values", wrong.is_empty(), detail)
}

fn dual_identity() -> Line {
    let pairs = random_pairs("acceptance-dual", 50, &GenParams::new(1..=4, 1..=4, 1..=3).no_isolated());
    let held = pairs
        .iter()
        .filter(|(a, b)| {
            let left = square(a, b).hypergraph.dual().unwrap();
            let right = square(&a.dual().unwrap(), &b.dual().unwrap()).hypergraph;
            is_isomorphic(&left, &right)
        })
        .count();
    Line::new(8, "dual of the square product", held == 50, format!("{held}/50 pairs"))
}

fn coverings() -> Line {
    let mut results = Vec::new();
    for kind in [Cartesian, Square] {
        let mut held = 0;
        for i in 0..20u64 {
            let mut rng = trial_rng(SEED, &format!("acceptance-cover-{kind}"), i);
            let params = GenParams::new(1..=3, 1..=3, 1..=3).no_isolated();
            let (b1, b2) = (generate_with(&mut rng, &params).unwrap(), generate_with(&mut rng, &params).unwrap());
            let (k1, k2) = (rng.gen_range(1..=3), rng.gen_range(1..=2));
            let (c1, cov1) = random_cover(&b1, k1, &mut rng);
            let (c2, cov2) = random_cover(&b2, k2, &mut rng);
            let first = CoveringPair { cover: c1, base: b1, covering: cov1 };
            let second = CoveringPair { cover: c2, base: b2, covering: cov2 };
            if let Ok(p) = covering_product(&first, &second, kind) {
                if p.covering.k == k1 * k2 && p.covering.verify(&p.cover, &p.base).is_ok() {
                    held += 1;
                }
            }
        }
        results.push((kind, held));
    }
    let ok = results.iter().all(|&(_, held)| held == 20);
    let detail = results.iter().map(|(kind, held)| format!("{kind} {held}/20")).collect::<Vec<_>>().join(", ");
    Line::new(9, "covering products", ok, detail)
}

fn timing() -> Line {
    let cartesian = |a: &Hypergraph<usize>, b: &Hypergraph<usize>| {
        let p = product_with(Cartesian, a, b, &opts()).unwrap().hypergraph;
        Hypergraph::new(0..p.vertex_count(), p.edges().to_vec()).unwrap()
    };
    let k2k2 = cartesian(&k2(), &k2());
    let cube = cartesian(&k2k2, &k2());
    let cases = [
        ("K2^3", cube.clone()),
        ("E3 x K2 x K2", cartesian(&e3(), &k2k2)),
        ("K2^4", cartesian(&cube, &k2())),
        ("E3 x K2^3", cartesian(&e3(), &cube)),
    ];
    let rows: Vec<String> = cases
        .iter()
        .map(|(name, g)| {
            let start = Instant::now();
            let result = factor_cartesian(g, DEFAULT_PIPELINE_CAP).unwrap();
            format!(
                "|V|={} ({name}): {} factors in {:.2}ms",
                g.vertex_count(),
                result.factors.len(),
                start.elapsed().as_secs_f64() * 1e3
            )
        })
        .collect();
    Line::info(10, "factor_cartesian timing", rows.join("; "))
}

fn main() {
    let mut lines = vec![pfd_round_trip(), distances(), two_sections(), l2_identities()];
    let start = Instant::now();
    let reports = run_suite("all", 50, SEED, &Budget::default()).unwrap();
    let elapsed = start.elapsed();
    lines.push(algebra(&reports));
    lines.push(registry(&reports, elapsed));
    lines.extend([worked_values(), dual_identity(), coverings(), timing()]);
    lines.sort_by_key(|l| l.number);
    for line in &lines {
        line.print();
    }
    let failed: Vec<usize> = lines.iter().filter(|l| l.passed == Some(false)).map(|l| l.number).collect();
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
    println!("acceptance: criteria 1 to 9 pass");
}
