//! One line per acceptance criterion. Every criterion runs twice; the
//! determinism criterion compares the two JSON renderings byte for byte.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value as Json};
use staride_core::harness::{self, RunOptions, ScenarioReport, Status};
use staride_core::ideal::{self, colon, intersect};
use staride_core::monoid::catalog;
use staride_core::poly::RingPoly;
use staride_core::star::{self, TIdealCertificate};
use staride_core::suites;
use staride_core::{Bounds, Clause, ConstraintIdeal, DegreeFunctional, FracIdeal, Monomial, MonoidSpec, VarKey};

struct Outcome {
    ok: bool,
    detail: String,
    json: Json,
}

impl Outcome {
    fn new(ok: bool, detail: impl Into<String>, json: Json) -> Self {
        Outcome { ok, detail: detail.into(), json }
    }
}

fn find<'a>(r: &'a ScenarioReport, assertion: &str) -> Option<&'a harness::AssertionReport> {
    r.assertions.iter().find(|a| a.assertion == assertion)
}

/// Every named assertion passed with the given verdict label.
fn all_labelled(r: &ScenarioReport, wanted: &[(&str, &str)]) -> Result<(), String> {
    for (name, label) in wanted {
        let Some(a) = find(r, name) else {
            return Err(format!("{name} missing"));
        };
        if a.status != Status::Pass || a.result.label() != *label {
            return Err(format!("{name}: {} ({:?})", a.result, a.status));
        }
    }
    Ok(())
}

fn example(run: fn(&RunOptions) -> staride_core::Result<ScenarioReport>, limit: Duration, wanted: &[(&str, &str)]) -> (Outcome, ScenarioReport) {
    let start = Instant::now();
    let r = run(&RunOptions::default()).expect("example runs");
    let took = start.elapsed();
    let json: Json = serde_json::from_str(&r.to_json()).unwrap();
    let mut problems = Vec::new();
    if r.outcome != Status::Pass {
        problems.extend(r.assertions.iter().filter(|a| a.status != Status::Pass).map(|a| format!("{} -> {}", a.assertion, a.result)));
    }
    if let Err(e) = all_labelled(&r, wanted) {
        problems.push(e);
    }
    if took > limit {
        problems.push(format!("took {took:?}"));
    }
    let detail = if problems.is_empty() {
        format!("{} assertions pass in {} ms", r.assertions.len(), took.as_millis())
    } else {
        problems.join("; ")
    };
    (Outcome::new(problems.is_empty(), detail, json), r)
}

fn certificates(r: &ScenarioReport, assertion: &str) -> u64 {
    find(r, assertion)
        .and_then(|a| a.evidence.as_ref())
        .and_then(|e| e["certificates"].as_u64())
        .unwrap_or(0)
}

fn criterion_1() -> Outcome {
    let (mut o, r) = example(
        harness::run_example_3_1,
        Duration::from_secs(60),
        &[
            ("completely_integrally_closed()", "proved"),
            ("divisorial(P)", "proved"),
            ("maximal_divisorial(P)", "proved-within-bounds"),
            ("not_t_maximal(P, W, y)", "proved"),
        ],
    );
    let n = certificates(&r, "not_t_maximal(P, W, y)");
    if n < 20 {
        o.ok = false;
        o.detail = format!("only {n} fresh-t certificates");
    }
    o
}

fn criterion_2() -> Outcome {
    let (mut o, r) = example(
        harness::run_example_3_2,
        Duration::from_secs(120),
        &[
            ("integrally_closed()", "proved"),
            ("equal(P, PZ)", "proved"),
            ("equal(D, RZ)", "proved-within-bounds"),
            ("strong(P)", "proved"),
            ("maximal_divisorial(P)", "proved-within-bounds"),
            ("not_t_maximal(P, M, Y)", "proved"),
        ],
    );
    if certificates(&r, "not_t_maximal(P, M, Y)") == 0 {
        o.ok = false;
        o.detail = "no fresh-T certificates".into();
    }
    o
}

type Pt = (i64, i64);

const R: i64 = 6;

fn box_points() -> Vec<Pt> {
    (-R..=R).flat_map(|a| (-R..=R).map(move |b| (a, b))).collect()
}

fn geq(u: Pt, g: Pt) -> bool {
    u.0 >= g.0 && u.1 >= g.1
}

fn add(u: Pt, v: Pt) -> Pt {
    (u.0 + v.0, u.1 + v.1)
}

fn in_gens(gens: &[Pt], u: Pt) -> bool {
    gens.iter().any(|&g| geq(u, g))
}

/// Minimal generating sets of all monomial ideals of k[y,z] with at most
/// three generators of degree at most three, without repeats.
fn oracle_ideals() -> Vec<Vec<Pt>> {
    let pool: Vec<Pt> = (0..=3).flat_map(|d| (0..=d).map(move |a| (a, d - a))).collect();
    let mut seen = BTreeSet::new();
    let n = pool.len();
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                let pick = [pool[i], pool[j], pool[k]];
                let mut min: Vec<Pt> = pick.iter().copied().filter(|&g| !pick.iter().any(|&h| h != g && geq(g, h))).collect();
                min.sort();
                min.dedup();
                seen.insert(min);
            }
        }
    }
    seen.into_iter().collect()
}

fn mono(u: Pt) -> Monomial {
    Monomial::from_pairs([(VarKey::scalar("y"), u.0), (VarKey::scalar("z"), u.1)])
}

fn criterion_3() -> Outcome {
    let spec = catalog::free_yz();
    let bounds = Bounds::default();
    let pts = box_points();
    let ideals = oracle_ideals();
    let sym: Vec<FracIdeal> = ideals.iter().map(|g| FracIdeal::fingen(&spec, g.iter().map(|&p| mono(p)).collect()).unwrap()).collect();
    // Members of each ideal inside the box, found by scanning the box.
    let members: Vec<Vec<Pt>> = ideals.iter().map(|g| pts.iter().copied().filter(|&u| in_gens(g, u)).collect()).collect();
    let mut compared = 0usize;
    let mut wrong = 0usize;
    let mut bad: Vec<String> = Vec::new();
    let mut inexact: Vec<String> = Vec::new();
    let mut check = |what: String, oracle: bool, symbolic: bool| {
        compared += 1;
        if oracle != symbolic {
            wrong += 1;
            if bad.len() < 5 {
                bad.push(what);
            }
        }
    };
    for (a, ga) in ideals.iter().enumerate() {
        let dual: Vec<Pt> = pts.iter().copied().filter(|&u| members[a].iter().all(|&x| geq(add(u, x), (0, 0)))).collect();
        let sym_dual = colon(&FracIdeal::ring(), sym[a].gens().unwrap()).unwrap();
        let (vc, ve) = star::v_closure(&spec, &sym[a], bounds);
        if !ve.is_exact() {
            inexact.push(format!("{ga:?}"));
        }
        for &u in &pts {
            check(format!("(R:{ga:?}) at {u:?}"), dual.contains(&u), sym_dual.contains(&spec, &mono(u)));
            let in_v = dual.iter().all(|&x| geq(add(u, x), (0, 0)));
            check(format!("v({ga:?}) at {u:?}"), in_v, vc.contains(&spec, &mono(u)));
        }
        for (b, gb) in ideals.iter().enumerate() {
            let sym_colon = colon(&sym[b], sym[a].gens().unwrap()).unwrap();
            let meet = intersect(&spec, &sym[a], &sym[b]);
            for &u in &pts {
                let oc = members[a].iter().all(|&x| in_gens(gb, add(u, x)));
                check(format!("({gb:?}:{ga:?}) at {u:?}"), oc, sym_colon.contains(&spec, &mono(u)));
                let om = in_gens(ga, u) && in_gens(gb, u);
                check(format!("{ga:?}&{gb:?} at {u:?}"), om, meet.contains(&spec, &mono(u)));
            }
        }
    }
    let json = json!({
        "ideals": ideals.len(),
        "comparisons": compared,
        "disagreements": wrong,
        "first_disagreements": bad,
        "inexact_v_closures": inexact,
    });
    let detail = format!("{} ideals, {compared} comparisons, {wrong} disagreements", ideals.len());
    Outcome::new(wrong == 0 && inexact.is_empty(), detail, json)
}

fn suite_outcome(r: &suites::SuiteReport) -> Outcome {
    let detail = format!("{} cases, {} checks, {} inconclusive, {} violations", r.cases, r.checks, r.inconclusive, r.violations.len());
    Outcome::new(r.passed() && r.checks > 0, detail, serde_json::to_value(r).unwrap())
}

fn criterion_4() -> Outcome {
    let mut o = suite_outcome(&suites::star_axiom_suite(suites::SUITE_BOUNDS).unwrap());
    let named = suites::named_ideals().unwrap().len();
    let samples = suites::fingen_samples(&catalog::free_yz(), 3, 3).len();
    if named != 6 || samples != oracle_ideals().len() {
        o.ok = false;
    }
    o.detail = format!("{samples} sampled and {named} named ideals; {}", o.detail);
    o
}

fn criterion_5() -> Outcome {
    suite_outcome(&suites::chain_inclusion_suite(suites::SUITE_BOUNDS).unwrap())
}

fn criterion_6() -> Outcome {
    let fixtures = suites::default_fixtures().unwrap();
    let r = suites::vtmax_suite(&fixtures, &RunOptions::default()).unwrap();
    let cone_p = r.fixtures.iter().find(|c| c.fixture == "cone:P").map(|c| c.v_finite.clone());
    let ex = harness::run_example_3_1(&RunOptions::default()).unwrap();
    let ex_p = find(&ex, "v_finite(P)").map(|a| a.result.clone());
    let unproved = |v: &Option<staride_core::Verdict>| v.as_ref().is_some_and(|v| !v.is_proved());
    let ok = r.sentinel_hits == 0 && r.suite.passed() && unproved(&cone_p) && unproved(&ex_p);
    let detail = format!(
        "{} fixtures, {} sentinel hits, v_finite(P) for the cone is {}",
        r.fixtures.len(),
        r.sentinel_hits,
        ex_p.map(|v| v.label()).unwrap_or("missing")
    );
    let json = json!({ "sentinel_hits": r.sentinel_hits, "fixtures": r.fixtures, "violations": r.suite.violations });
    Outcome::new(ok, detail, json)
}

const CERTS: usize = 1000;

/// `R ∩ {deg >= 1}` with certificates drawn from `family`.
fn positive_part(functional: DegreeFunctional, family: &str) -> FracIdeal {
    let clauses = vec![Clause::Shift(Monomial::one()), Clause::Degree { functional, at_least: 1 }];
    FracIdeal::Constraint(ConstraintIdeal::new(clauses).unwrap().with_cert_family(family))
}

fn cert_targets() -> Vec<(MonoidSpec, FracIdeal)> {
    let cone = catalog::cone_yzt();
    let q = positive_part(DegreeFunctional::scalars(&["y", "z"]), "t");
    let support = catalog::support_yzxt();
    let m = positive_part(DegreeFunctional::total(), "T");
    vec![(cone, q), (support, m)]
}

/// A finite subset of the target, some elements carrying powers of `X`.
fn honest_f(rng: &mut ChaCha8Rng, pool: &[Monomial]) -> Vec<RingPoly> {
    let n = rng.gen_range(1..=4);
    (0..n)
        .map(|_| {
            let a = pool.choose(rng).unwrap().clone();
            if rng.gen_bool(0.3) {
                let b = pool.choose(rng).unwrap().clone();
                RingPoly::monomial(a).add(&RingPoly::term(b, rng.gen_range(1..=2)))
            } else {
                RingPoly::monomial(a)
            }
        })
        .collect()
}

fn index_of(m: &Monomial) -> u32 {
    m.max_any_index().expect("certificate multipliers are family members")
}

fn mutate(rng: &mut ChaCha8Rng, spec: &MonoidSpec, c: &TIdealCertificate, kind: usize) -> TIdealCertificate {
    let mut bad = c.clone();
    let window = index_of(&c.m) + 1;
    match kind {
        0 => bad.m = spec.members_up_to(3, window).choose(rng).unwrap().clone(),
        1 => {
            let outside: Vec<Monomial> = staride_core::monoid::monomials_up_to(&spec.box_vars(window), 3)
                .into_iter()
                .filter(|u| !spec.contains(u))
                .collect();
            let unmultiplied: Vec<Monomial> = spec.members_up_to(3, window).into_iter().filter(|a| !spec.contains(&a.mul(&c.m))).collect();
            let pool = if rng.gen_bool(0.5) { &outside } else { &unmultiplied };
            let at = rng.gen_range(0..=bad.f.len());
            bad.f.insert(at, RingPoly::monomial(pool.choose(rng).unwrap().clone()));
        }
        _ => {
            let k = rng.gen_range(2..=3);
            let mut clauses = ideal::as_clauses(&c.target);
            clauses.push(Clause::Degree { functional: DegreeFunctional::total(), at_least: k });
            bad.target = FracIdeal::constraint(clauses).unwrap();
        }
    }
    bad
}

fn criterion_7() -> Outcome {
    let bounds = Bounds::default();
    let mut rng = ChaCha8Rng::seed_from_u64(harness::DEFAULT_SEED);
    let targets = cert_targets();
    let pools: Vec<Vec<Monomial>> = targets.iter().map(|(s, t)| t.members_within(s, Bounds::new(4, 3)).unwrap()).collect();
    let (mut honest_ok, mut rejected) = (0usize, [0usize; 3]);
    let mut trail = Vec::new();
    for i in 0..CERTS {
        let which = i % targets.len();
        let (spec, target) = &targets[which];
        let f = honest_f(&mut rng, &pools[which]);
        let Ok(cert) = star::auto_certify_t_ideal(spec, target, &f, bounds) else {
            trail.push(json!({ "honest": "failed to certify" }));
            continue;
        };
        let honest = star::check_t_certificate(spec, &cert, bounds).map(|v| v.is_proved()).unwrap_or(false);
        honest_ok += usize::from(honest);
        let kind = rng.gen_range(0..3);
        let bad = mutate(&mut rng, spec, &cert, kind);
        let verdict = star::check_t_certificate(spec, &bad, bounds);
        let caught = !matches!(&verdict, Ok(v) if v.is_proved());
        rejected[kind] += usize::from(caught);
        trail.push(json!({
            "certificate": cert,
            "honest": honest,
            "mutation": kind,
            "mutated": bad,
            "verdict": verdict.map(|v| v.to_string()).unwrap_or_else(|e| e.to_string()),
        }));
    }
    let caught: usize = rejected.iter().sum();
    let detail = format!("{honest_ok}/{CERTS} honest certificates validate, {caught}/{CERTS} mutations rejected (m {}, F {}, target {})", rejected[0], rejected[1], rejected[2]);
    Outcome::new(honest_ok == CERTS && caught == CERTS, detail, json!({ "honest": honest_ok, "rejected": rejected, "trail": trail }))
}

fn run_file(rel: &str) -> ScenarioReport {
    let path = format!("{}/{rel}", env!("CARGO_MANIFEST_DIR"));
    let src = std::fs::read_to_string(&path).unwrap();
    harness::run_source(rel, &src, &RunOptions::default()).unwrap().remove(0)
}

fn status_of(r: &ScenarioReport, assertion: &str, expected: &str) -> Option<Status> {
    r.assertions.iter().find(|a| a.assertion == assertion && a.expected.starts_with(expected)).map(|a| a.status)
}

fn criterion_9() -> Outcome {
    let no_a = run_file("scenarios/negative/ex3_2_without_rule_a.stide");
    let weak = run_file("scenarios/negative/ex3_1_weakened.stide");
    let inclusion_fails = status_of(&no_a, "equal(P, PZ)", "proved") == Some(Status::Fail);
    let z_separates = no_a.assertions.iter().any(|a| {
        a.assertion == "equal(P, PZ)" && a.status == Status::Pass && a.note.as_deref() == Some("witness Z re-checked")
    });
    let properness_fails = status_of(&weak, "t_member(Q, 1)", "refuted") == Some(Status::Fail);
    let ok = inclusion_fails && z_separates && properness_fails && no_a.outcome == Status::Fail && weak.outcome == Status::Fail;
    let detail = format!(
        "without rule (a): double inclusion {}, Z {}; weakened cone: Q properness {}",
        if inclusion_fails { "fails" } else { "holds" },
        if z_separates { "re-checked as witness" } else { "not a witness" },
        if properness_fails { "fails" } else { "holds" },
    );
    let json = json!([serde_json::from_str::<Json>(&no_a.to_json()).unwrap(), serde_json::from_str::<Json>(&weak.to_json()).unwrap()]);
    Outcome::new(ok, detail, json)
}

fn cold<F: FnOnce() -> Outcome + Send + 'static>(f: F) -> Outcome {
    std::thread::spawn(f).join().expect("criterion panicked")
}

type Criterion = (u32, &'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 8] = [
        (1, "example 3.1 end to end", criterion_1),
        (2, "example 3.2 end to end", criterion_2),
        (3, "brute-force oracle on k[y,z]", criterion_3),
        (4, "star-operation axioms", criterion_4),
        (5, "class inclusion chain", criterion_5),
        (6, "vtmax sentinel", criterion_6),
        (7, "certificate fuzzing", criterion_7),
        (9, "negative controls", criterion_9),
    ];
    let mut lines = Vec::new();
    let mut drift = Vec::new();
    for (n, name, f) in criteria {
        let first = cold(f);
        let second = cold(f);
        if serde_json::to_string(&first.json).unwrap() != serde_json::to_string(&second.json).unwrap() {
            drift.push(n.to_string());
        }
        lines.push((n, name, first.ok, first.detail));
    }
    let det = if drift.is_empty() {
        "JSON identical across two runs of every criterion".to_string()
    } else {
        format!("JSON differs for criteria {}", drift.join(", "))
    };
    lines.insert(7, (8, "determinism", drift.is_empty(), det));
    let mut failed = 0;
    for (n, name, ok, detail) in &lines {
        println!("criterion {n} [{}] {name}: {detail}", if *ok { "PASS" } else { "FAIL" });
        failed += usize::from(!ok);
    }
    println!("{} of {} criteria pass", lines.len() - failed, lines.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
