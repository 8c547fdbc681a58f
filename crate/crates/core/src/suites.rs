//! Property suites: star-operation axioms, the chain of ideal classes, and
//! the implications between v-invertibility, maximality and t-maximality.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::dsl::{self, Arg, Expected, Item, Scenario};
use crate::error::{Error, Result};
use crate::harness::{self, Env, RunOptions, ScenarioReport, Value};
use crate::ideal::{sieve, subset_up_to, FracIdeal};
use crate::monoid::{catalog, MonoidSpec};
use crate::monomial::{Monomial, VarKey};
use crate::polyext::{self, UpperToZero};
use crate::star;
use crate::verdict::{Bounds, Verdict, Witness};
use crate::classify;

pub const PROPS: &str = include_str!("../scenarios/props.stide");

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: usize,
    pub checks: usize,
    /// Checks that returned Inconclusive; never counted as violations.
    pub inconclusive: usize,
    pub violations: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport { suite: name.to_string(), ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Records one check: `ok == Some(false)` is a violation, `None` an
    /// inconclusive outcome.
    fn record(&mut self, ok: Option<bool>, what: impl FnOnce() -> String) {
        self.checks += 1;
        match ok {
            Some(true) => {}
            Some(false) => self.violations.push(what()),
            None => self.inconclusive += 1,
        }
    }
}

/// Every finitely generated monomial ideal of `k[y,z]` with at most
/// `max_gens` generators of total degree at most `max_degree`, deduplicated
/// after reducing to minimal generators.
pub fn fingen_samples(spec: &MonoidSpec, max_gens: usize, max_degree: u32) -> Vec<FracIdeal> {
    let vars: Vec<VarKey> = spec.scalars.iter().map(|s| VarKey::scalar(s)).collect();
    let pool = crate::monoid::monomials_up_to(&vars, max_degree);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut pick = Vec::new();
    subsets(&pool, max_gens, 0, &mut pick, &mut |gens| {
        let g = sieve(spec, gens.to_vec());
        if seen.insert(g.clone()) {
            out.push(FracIdeal::FinGen(g));
        }
    });
    out
}

fn subsets(pool: &[Monomial], k: usize, from: usize, pick: &mut Vec<Monomial>, f: &mut impl FnMut(&[Monomial])) {
    if !pick.is_empty() {
        f(pick);
    }
    if pick.len() == k {
        return;
    }
    for i in from..pool.len() {
        pick.push(pool[i].clone());
        subsets(pool, k, i + 1, pick, f);
        pick.pop();
    }
}

/// Named ideals from the two shipped examples, with their rings.
pub fn named_ideals() -> Result<Vec<(String, MonoidSpec, FracIdeal)>> {
    let mut out = Vec::new();
    for (file, src, names) in [
        ("ex3_1.stide", harness::EX3_1, &["C", "Q"][..]),
        ("ex3_2.stide", harness::EX3_2, &["P", "PZ", "M", "RZ"][..]),
    ] {
        let sc = dsl::parse_scenario(file, src).map_err(Error::Parse)?;
        let mut env = Env::new(&sc.spec, sc.bounds.unwrap_or_default());
        for d in sc.decls() {
            env.declare(&d.name, &d.value)?;
        }
        for n in names {
            out.push((format!("{}:{n}", sc.name), sc.spec.clone(), env.ideal(n)?.clone()));
        }
    }
    Ok(out)
}

/// `Some(true)` for a proof, `Some(false)` for a refutation.
fn known(v: &Verdict) -> Option<bool> {
    match v {
        Verdict::Proved { .. } => Some(true),
        Verdict::Refuted { .. } => Some(false),
        Verdict::Inconclusive { .. } => None,
    }
}

/// Bounds for the membership-level checks on named ideals.
pub const SUITE_BOUNDS: Bounds = Bounds { degree: 4, window: 2 };

fn fingen_closure(spec: &MonoidSpec, i: &FracIdeal) -> Vec<Monomial> {
    let (c, e) = star::v_closure(spec, i, SUITE_BOUNDS);
    debug_assert!(e.is_exact());
    c.exact_gens(spec).unwrap_or_default()
}

fn scaled(spec: &MonoidSpec, g: &[Monomial], a: &Monomial) -> Vec<Monomial> {
    sieve(spec, g.iter().map(|m| m.mul(a)).collect())
}

/// Axioms of a star operation for `v`, and `t ≤ v`: exact on every sample
/// ideal of `k[y,z]`, membership-level on the named ideals.
pub fn star_axiom_suite(bounds: Bounds) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("star-axioms");
    let spec = catalog::free_yz();
    let ring = FracIdeal::ring();
    let rv = fingen_closure(&spec, &ring);
    r.record(Some(rv == vec![Monomial::one()]), || format!("R_v = {rv:?}"));
    let samples = fingen_samples(&spec, 3, 3);
    let closures: Vec<Vec<Monomial>> = samples.iter().map(|i| fingen_closure(&spec, i)).collect();
    let scalers: Vec<Monomial> = ["y", "y^-1*z"].iter().map(|s| s.parse().expect("monomial")).collect();
    let probes = crate::monoid::laurent_up_to(&[VarKey::scalar("y"), VarKey::scalar("z")], 2);
    for (i, (s, v)) in samples.iter().zip(&closures).enumerate() {
        r.cases += 1;
        let vi = FracIdeal::FinGen(v.clone());
        let gens = s.gens().unwrap_or_default();
        r.record(Some(gens.iter().all(|g| vi.contains(&spec, g))), || format!("{s} not inside its closure"));
        r.record(Some(fingen_closure(&spec, &vi) == *v), || format!("closure of {s} not idempotent"));
        for a in &scalers {
            let lhs = fingen_closure(&spec, &FracIdeal::FinGen(scaled(&spec, gens, a)));
            r.record(Some(lhs == scaled(&spec, v, a)), || format!("({a}·{s})_v != {a}·{s}_v"));
        }
        for (j, t) in samples.iter().enumerate() {
            if subset_up_to(&spec, s, t, bounds).is_exact() {
                let vt = FracIdeal::FinGen(closures[j].clone());
                r.record(Some(v.iter().all(|g| vt.contains(&spec, g))), || format!("{s} ⊆ {t} but closures are not nested"));
            }
        }
        if i % 4 == 0 {
            for u in &probes {
                let t = star::t_member(&spec, s, u, bounds);
                let ok = !t.is_proved() || vi.contains(&spec, u);
                r.record(Some(ok), || format!("{u} in ({s})_t but not in ({s})_v"));
            }
        }
    }
    named_axioms(&mut r, bounds)?;
    Ok(r)
}

fn named_axioms(r: &mut SuiteReport, bounds: Bounds) -> Result<()> {
    let named = named_ideals()?;
    for (label, spec, i) in &named {
        r.cases += 1;
        let a = Monomial::var(VarKey::scalar(&spec.scalars[0]));
        let probes: Vec<Monomial> = spec
            .members_up_to(2, 2)
            .into_iter()
            .flat_map(|u| [u.div(&a), u])
            .collect();
        let (iv, _) = star::v_closure(spec, i, bounds);
        let ai = i.scale(&a);
        let ring = FracIdeal::ring();
        for u in &probes {
            let v = star::v_member(spec, i, u, bounds);
            if i.contains(spec, u) {
                r.record(Some(!v.is_refuted()), || format!("{label}: {u} in I but refuted in I_v"));
            }
            let rv = star::v_member(spec, &ring, u, bounds);
            r.record(known(&rv).map(|k| k == spec.contains(u)), || format!("{label}: R_v and R disagree at {u}"));
            let vv = star::v_member(spec, &iv, u, bounds);
            r.record(agree(&v, &vv), || format!("{label}: {u} separates I_v from (I_v)_v"));
            let sv = star::v_member(spec, &ai, &u.mul(&a), bounds);
            r.record(agree(&v, &sv), || format!("{label}: ({a}I)_v and {a}I_v disagree at {a}*{u}"));
            let t = star::t_member(spec, i, u, bounds);
            r.record(Some(!(t.is_proved() && v.is_refuted())), || format!("{label}: {u} in I_t but not in I_v"));
        }
        for (other, spec2, j) in &named {
            if spec2 != spec || other == label || !subset_up_to(spec, i, j, bounds).is_exact() {
                continue;
            }
            for u in &probes {
                let vi = star::v_member(spec, i, u, bounds);
                let vj = star::v_member(spec, j, u, bounds);
                r.record(Some(!(vi.is_exact() && vj.is_refuted())), || format!("{label} ⊆ {other} but {u} breaks monotonicity"));
            }
        }
    }
    Ok(())
}

/// Two membership verdicts for the same element: a disagreement between
/// definite answers is a violation, anything inconclusive is skipped.
fn agree(a: &Verdict, b: &Verdict) -> Option<bool> {
    match (known(a), known(b)) {
        (Some(x), Some(y)) => Some(x == y),
        _ => None,
    }
}

pub const CHAIN: [&str; 5] = ["invertible", "t-invertible t-ideal", "v-finite divisorial", "divisorial", "t-ideal"];

/// Membership in each class of the chain, in order.
pub fn chain_classes(spec: &MonoidSpec, i: &FracIdeal, bounds: Bounds) -> [Verdict; 5] {
    let div = star::is_divisorial(spec, i, bounds);
    let t_ideal = star::is_t_ideal(spec, i, bounds);
    [
        star::is_invertible(spec, i),
        star::is_t_invertible(spec, i, bounds).meet(t_ideal.clone()),
        star::is_v_finite(spec, i, bounds).meet(div.clone()),
        div,
        t_ideal,
    ]
}

/// Each class of the chain lies inside the next: no ideal is proved to be
/// in one class and refuted in a later one.
pub fn chain_inclusion_suite(bounds: Bounds) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("chain-inclusion");
    let free = catalog::free_yz();
    let mut cases: Vec<(String, MonoidSpec, FracIdeal)> =
        fingen_samples(&free, 3, 3).into_iter().map(|i| (i.to_string(), free.clone(), i)).collect();
    cases.extend(named_ideals()?);
    for (label, spec, i) in &cases {
        r.cases += 1;
        let classes = chain_classes(spec, i, bounds);
        for (a, va) in classes.iter().enumerate() {
            for (b, vb) in classes.iter().enumerate().skip(a + 1) {
                let ok = match (known(va), known(vb)) {
                    (Some(true), Some(false)) => Some(false),
                    (Some(_), Some(_)) => Some(true),
                    _ => None,
                };
                r.record(ok, || format!("{label}: {} ({va}) but not {} ({vb})", CHAIN[a], CHAIN[b]));
            }
        }
    }
    Ok(r)
}

/// Classification of one prime used by the implication checks.
#[derive(Clone, Debug, Serialize)]
pub struct FixtureClasses {
    pub fixture: String,
    pub prime: Verdict,
    pub divisorial: Verdict,
    pub v_invertible: Verdict,
    pub v_finite: Verdict,
    pub maximal_divisorial: Verdict,
    pub t_invertible: Verdict,
    pub t_ideal: Verdict,
    pub t_maximal: Verdict,
}

fn or_refuted(v: Result<Verdict>) -> Verdict {
    match v {
        Ok(v) => v,
        Err(Error::Precondition(m)) => Verdict::refuted(Witness::Check(m)),
        Err(e) => Verdict::inconclusive(e.to_string()),
    }
}

/// Whether every t-ideal is divisorial; true for a polynomial ring in
/// finitely many variables, which is Noetherian.
fn t_equals_v(spec: &MonoidSpec) -> bool {
    spec.is_free() && spec.families.is_empty()
}

pub fn classify_fixture(
    spec: &MonoidSpec,
    name: &str,
    value: &Value,
    refuted_t_max: Option<String>,
    bounds: Bounds,
) -> Result<FixtureClasses> {
    let mut c = match value {
        Value::Ideal { ideal: p, .. } => {
            let div = star::is_divisorial(spec, p, bounds);
            FixtureClasses {
                fixture: name.to_string(),
                prime: or_refuted(classify::is_prime(spec, p, bounds)),
                v_invertible: star::is_v_invertible(spec, p, bounds),
                v_finite: star::is_v_finite(spec, p, bounds),
                maximal_divisorial: or_refuted(classify::is_maximal_divisorial(spec, p, bounds)),
                t_invertible: star::is_t_invertible(spec, p, bounds),
                t_ideal: star::is_t_ideal(spec, p, bounds),
                t_maximal: Verdict::inconclusive("no witness and t differs from v"),
                divisorial: div,
            }
        }
        Value::Upper(p) => upper_classes(spec, name, p, bounds)?,
        _ => return Err(Error::Input(format!("fixture `{name}` is not a prime ideal"))),
    };
    if let Some(w) = refuted_t_max {
        c.t_maximal = Verdict::refuted(Witness::Check(w));
    } else if t_equals_v(spec) {
        c.t_maximal = c.maximal_divisorial.clone();
    }
    Ok(c)
}

fn upper_classes(spec: &MonoidSpec, name: &str, p: &UpperToZero, bounds: Bounds) -> Result<FixtureClasses> {
    let r = polyext::upperdiv_check(spec, p, bounds)?;
    let prime = if p.f.degree() == Some(1) {
        Verdict::exact()
    } else {
        Verdict::inconclusive("irreducibility not checked")
    };
    let t_ideal = if r.divisorial.is_proved() { r.divisorial.clone() } else { Verdict::inconclusive("not divisorial") };
    Ok(FixtureClasses {
        fixture: name.to_string(),
        prime,
        divisorial: r.divisorial,
        v_invertible: r.v_invertible,
        v_finite: polyext::upper_is_v_finite(p, bounds),
        maximal_divisorial: r.maximal_divisorial,
        t_invertible: Verdict::inconclusive("t-invertibility of an upper to zero is not decided"),
        t_ideal,
        t_maximal: Verdict::inconclusive("no witness"),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct VtMaxReport {
    pub suite: SuiteReport,
    /// Fixtures with v-finite and maximal divisorial proved but t-maximal
    /// refuted. Must stay zero.
    pub sentinel_hits: usize,
    pub fixtures: Vec<FixtureClasses>,
    pub scenarios: Vec<ScenarioReport>,
}

/// The implications, each as (hypotheses, conclusion).
fn implications(c: &FixtureClasses, t_is_v: bool) -> Vec<(&'static str, Vec<&Verdict>, &Verdict)> {
    let mut out = vec![
        ("v-invertible divisorial prime is maximal divisorial", vec![&c.v_invertible, &c.divisorial, &c.prime], &c.maximal_divisorial),
        ("v-finite maximal divisorial is t-maximal", vec![&c.v_finite, &c.maximal_divisorial], &c.t_maximal),
        (
            "v-finite v-invertible divisorial prime is t-invertible",
            vec![&c.v_finite, &c.v_invertible, &c.divisorial, &c.prime],
            &c.t_invertible,
        ),
        ("t-invertible t-prime is t-maximal", vec![&c.t_invertible, &c.t_ideal, &c.prime], &c.t_maximal),
    ];
    if t_is_v {
        out.push(("maximal divisorial ideals are t-maximal, so v-invertible divisorial primes are t-invertible", vec![&c.v_invertible, &c.divisorial, &c.prime], &c.t_invertible));
        out.push(("maximal divisorial ideals are t-maximal, so v-invertible divisorial primes are t-maximal", vec![&c.v_invertible, &c.divisorial, &c.prime], &c.t_maximal));
    }
    out
}

pub fn vtmax_suite(fixtures: &[Scenario], opts: &RunOptions) -> Result<VtMaxReport> {
    let mut suite = SuiteReport::new("vtmax");
    let mut classes = Vec::new();
    let mut scenarios = Vec::new();
    let mut sentinel_hits = 0;
    for sc in fixtures {
        let report = harness::run_scenario(sc, opts)?;
        let bounds = report.bounds;
        let mut env = Env::new(&sc.spec, bounds);
        for d in sc.decls() {
            env.declare(&d.name, &d.value)?;
        }
        for ar in &report.assertions {
            suite.record(Some(ar.status != harness::Status::Fail && ar.status != harness::Status::Error), || {
                format!("{}: {} expected {}, got {}", sc.name, ar.assertion, ar.expected, ar.result)
            });
        }
        for name in sc.fixtures() {
            suite.cases += 1;
            let witness = t_max_witness(sc, &report, name);
            let c = classify_fixture(&sc.spec, name, env.get(name)?, witness, bounds)?;
            let label = format!("{}:{name}", sc.name);
            for (what, hyps, concl) in implications(&c, t_equals_v(&sc.spec)) {
                let all = hyps.iter().all(|h| h.is_proved());
                let ok = match (all, known(concl)) {
                    (true, Some(false)) => Some(false),
                    (true, None) => None,
                    _ => Some(true),
                };
                suite.record(ok, || format!("{label}: {what} fails ({concl})"));
            }
            if c.v_finite.is_proved() && c.maximal_divisorial.is_proved() && c.t_maximal.is_refuted() {
                sentinel_hits += 1;
                suite.violations.push(format!("{label}: sentinel: v-finite maximal divisorial but not t-maximal"));
            }
            classes.push(FixtureClasses { fixture: label, ..c });
        }
        scenarios.push(report);
    }
    Ok(VtMaxReport { suite, sentinel_hits, fixtures: classes, scenarios })
}

/// A passing `not_t_maximal(name, W, u) = proved` assertion refutes
/// t-maximality of `name`.
fn t_max_witness(sc: &Scenario, report: &ScenarioReport, name: &str) -> Option<String> {
    sc.items
        .iter()
        .filter_map(|i| match i {
            Item::Assert(a) => Some(a),
            _ => None,
        })
        .zip(&report.assertions)
        .find(|(a, r)| {
            a.predicate == "not_t_maximal"
                && a.expected == Expected::Proved
                && r.status == harness::Status::Pass
                && matches!(a.args.first(), Some(Arg::Name(n)) if n == name)
        })
        .map(|(_, r)| format!("{} holds", r.assertion))
}

/// Parses a fixture catalog; an empty catalog is an input error.
pub fn load_fixtures(file: &str, src: &str) -> Result<Vec<Scenario>> {
    let all = dsl::parse(file, src).map_err(Error::Parse)?;
    if all.iter().all(|s| s.fixtures().next().is_none()) {
        return Err(Error::Input(format!("{file}: no fixtures declared")));
    }
    Ok(all)
}

pub fn default_fixtures() -> Result<Vec<Scenario>> {
    load_fixtures("props.stide", PROPS)
}

#[derive(Clone, Debug, Serialize)]
pub struct PropsReport {
    pub schema_version: u32,
    pub star_axioms: SuiteReport,
    pub chain_inclusion: SuiteReport,
    pub vtmax: VtMaxReport,
}

impl PropsReport {
    pub fn passed(&self) -> bool {
        self.star_axioms.passed() && self.chain_inclusion.passed() && self.vtmax.suite.passed() && self.vtmax.sentinel_hits == 0
    }
}

pub fn run_props(fixtures: &[Scenario], opts: &RunOptions) -> Result<PropsReport> {
    Ok(PropsReport {
        schema_version: harness::SCHEMA_VERSION,
        star_axioms: star_axiom_suite(SUITE_BOUNDS)?,
        chain_inclusion: chain_inclusion_suite(SUITE_BOUNDS)?,
        vtmax: vtmax_suite(fixtures, opts)?,
    })
}
