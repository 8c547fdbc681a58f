//! Runs scenarios: evaluates declarations, checks every assertion and
//! collects a deterministic report.

use std::collections::HashMap;
use std::time::Instant;

use serde::Serialize;
use serde_json::json;

use crate::classify::{self, NotTMaximalWitness, PrimeIdeal};
use crate::dsl::{self, Arg, Assertion, Atom, DeclValue, Expected, IdealExpr, Item, Scenario};
use crate::entail;
use crate::error::{Error, Result};
use crate::ideal::{self, as_clauses, colon, colon_r, subset_up_to, Clause, ConstraintIdeal, Exactness, FracIdeal};
use crate::monoid::MonoidSpec;
use crate::monomial::{Monomial, VarKey};
use crate::poly::RingPoly;
use crate::polyext::{self, ExtendedIdeal, UpperToZero};
use crate::star;
use crate::verdict::{Bounds, Verdict, Witness};

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_SEED: u64 = 0x5eed_0001;

pub const EX3_1: &str = include_str!("../scenarios/ex3_1.stide");
pub const EX3_2: &str = include_str!("../scenarios/ex3_2.stide");

#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    /// Override the scenario's `bounds` line, each dial separately.
    pub degree: Option<u32>,
    pub window: Option<u32>,
    pub seed: u64,
    pub cert_samples: usize,
    /// Adds wall-clock time to the report, which makes it nondeterministic.
    pub timings: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { degree: None, window: None, seed: DEFAULT_SEED, cert_samples: classify::DEFAULT_CERT_SAMPLES, timings: false }
    }
}

/// A value bound by a declaration.
#[derive(Clone, Debug)]
pub enum Value {
    Ideal {
        ideal: FracIdeal,
        exactness: Exactness,
        /// Set when the ideal is `(R : I)`; holds `I`.
        dual_of: Option<FracIdeal>,
    },
    Extended(FracIdeal),
    Upper(UpperToZero),
    Poly(RingPoly),
}

impl Value {
    fn exact(ideal: FracIdeal) -> Value {
        Value::Ideal { ideal, exactness: Exactness::Exact, dual_of: None }
    }
}

/// Declarations evaluated against a ring.
pub struct Env<'a> {
    pub spec: &'a MonoidSpec,
    pub bounds: Bounds,
    values: HashMap<String, Value>,
    integrally_closed: Option<Verdict>,
}

impl<'a> Env<'a> {
    pub fn new(spec: &'a MonoidSpec, bounds: Bounds) -> Self {
        Env { spec, bounds, values: HashMap::new(), integrally_closed: None }
    }

    pub fn get(&self, name: &str) -> Result<&Value> {
        self.values.get(name).ok_or_else(|| Error::Input(format!("unknown identifier `{name}`")))
    }

    pub fn ideal(&self, name: &str) -> Result<&FracIdeal> {
        match self.get(name)? {
            Value::Ideal { ideal, .. } => Ok(ideal),
            _ => Err(Error::Input(format!("`{name}` is not an ideal of R"))),
        }
    }

    fn integrally_closed(&mut self) -> Verdict {
        let (spec, bounds) = (self.spec, self.bounds);
        self.integrally_closed
            .get_or_insert_with(|| spec.is_integrally_closed(bounds))
            .clone()
    }

    pub fn declare(&mut self, name: &str, value: &DeclValue) -> Result<()> {
        let v = match value {
            DeclValue::Poly(p) => Value::Poly(p.clone()),
            DeclValue::Upper(f) => {
                let Value::Poly(f) = self.get(f)?.clone() else {
                    return Err(Error::Input(format!("`{f}` is not a polynomial")));
                };
                let ic = self.integrally_closed();
                Value::Upper(UpperToZero::new(self.spec, f, &ic)?)
            }
            DeclValue::Ideal(e) => self.eval(e)?,
        };
        self.values.insert(name.to_string(), v);
        Ok(())
    }

    pub fn eval(&self, e: &IdealExpr) -> Result<Value> {
        let spec = self.spec;
        Ok(match e {
            IdealExpr::Ring => Value::exact(FracIdeal::ring()),
            IdealExpr::Gens(g) => Value::exact(FracIdeal::fingen(spec, g.clone())?),
            IdealExpr::Atoms(_) => {
                return Err(Error::Representation("a constraint block needs a bounding ideal".into()))
            }
            IdealExpr::Adjoin(v) => Value::exact(FracIdeal::constraint(vec![Clause::Adjoin {
                shift: Monomial::one(),
                var: VarKey::scalar(v),
            }])?),
            IdealExpr::Colon(a, b) => {
                let (a, ea) = self.eval_ideal(a)?;
                let (b, eb) = self.eval_ideal(b)?;
                if a.is_ring() {
                    let (d, e) = colon_r(spec, &b, self.bounds);
                    Value::Ideal { ideal: d, exactness: e.meet(eb), dual_of: Some(b) }
                } else {
                    let gens = b
                        .exact_gens(spec)
                        .ok_or_else(|| Error::Unsupported(format!("colon by {b}, which is not finitely generated")))?;
                    let c = FracIdeal::Constraint(colon(&a, &gens)?);
                    Value::Ideal { ideal: c, exactness: ea.meet(eb), dual_of: None }
                }
            }
            IdealExpr::Content(f) => match self.get(f)? {
                Value::Poly(p) => Value::exact(polyext::content(spec, p)?),
                _ => return Err(Error::Input(format!("`{f}` is not a polynomial"))),
            },
            IdealExpr::Extend(q) => Value::Extended(self.ideal(q)?.clone()),
            IdealExpr::Name(n) => self.get(n)?.clone(),
            IdealExpr::Sum(a, b) | IdealExpr::Product(a, b) => {
                let (a, ea) = self.eval_ideal(a)?;
                let (b, eb) = self.eval_ideal(b)?;
                let out = if matches!(e, IdealExpr::Sum(..)) {
                    ideal::sum(spec, &a, &b)?
                } else {
                    ideal::product(spec, &a, &b)?
                };
                Value::Ideal { ideal: out, exactness: ea.meet(eb), dual_of: None }
            }
            IdealExpr::Meet(parts, cert) => {
                let mut clauses = Vec::new();
                let mut exactness = Exactness::Exact;
                for p in parts {
                    match p {
                        IdealExpr::Atoms(atoms) => clauses.extend(atoms.iter().map(atom_clause)),
                        p => {
                            let (i, e) = self.eval_ideal(p)?;
                            exactness = exactness.meet(e);
                            clauses.extend(as_clauses(&i));
                        }
                    }
                }
                let mut c = ConstraintIdeal::new(clauses)?;
                if let Some(f) = cert {
                    c = c.with_cert_family(f);
                }
                let out = FracIdeal::Constraint(c);
                let out = match (spec.is_free(), out.exact_gens(spec)) {
                    (true, Some(g)) => FracIdeal::FinGen(g),
                    _ => out,
                };
                Value::Ideal { ideal: out, exactness, dual_of: None }
            }
        })
    }

    fn eval_ideal(&self, e: &IdealExpr) -> Result<(FracIdeal, Exactness)> {
        match self.eval(e)? {
            Value::Ideal { ideal, exactness, .. } => Ok((ideal, exactness)),
            _ => Err(Error::Input("expected an ideal of R".into())),
        }
    }
}

fn atom_clause(a: &Atom) -> Clause {
    match a {
        Atom::Degree(f, k) => Clause::Degree { functional: f.clone(), at_least: *k },
        Atom::Occurs(f) => Clause::Occurs { selector: f.clone(), shift: Monomial::one() },
    }
}

fn as_monomial(p: &RingPoly) -> Result<Monomial> {
    match (p.degree(), p.coeff(0).as_term()) {
        (Some(0), Some((m, c))) if num_traits::One::is_one(c) => Ok(m.clone()),
        _ => Err(Error::Input(format!("`{p}` is not a monomial"))),
    }
}

impl Env<'_> {
    fn arg(&self, a: &Arg) -> Result<Value> {
        match a {
            Arg::Name(n) => Ok(self.get(n)?.clone()),
            Arg::Elem(p) => Ok(Value::Poly(p.clone())),
        }
    }

    fn elem(a: &Arg) -> Result<&RingPoly> {
        match a {
            Arg::Elem(p) => Ok(p),
            Arg::Name(n) => Err(Error::Input(format!("`{n}` is not an element"))),
        }
    }

    fn prime_of(&self, v: &Value) -> Result<PrimeIdeal> {
        match v {
            Value::Ideal { ideal, .. } => Ok(PrimeIdeal::Ideal(ideal.clone())),
            Value::Upper(p) => Ok(PrimeIdeal::Upper(p.clone())),
            _ => Err(Error::Input("expected an ideal or an upper to zero".into())),
        }
    }

    /// Membership of a monomial, respecting approximate duals: only a
    /// lemma or a search of the true dual counts.
    fn contains_mono(&self, v: &Value, u: &Monomial) -> Verdict {
        match v {
            Value::Ideal { ideal, dual_of: Some(i), exactness, .. } if !exactness.is_exact() => {
                if !ideal.contains(self.spec, u) {
                    return Verdict::refuted_by(u.clone());
                }
                classify::in_dual(self.spec, i, u, self.bounds)
            }
            Value::Ideal { ideal, .. } | Value::Extended(ideal) => {
                if ideal.contains(self.spec, u) {
                    Verdict::exact()
                } else {
                    Verdict::refuted_by(u.clone())
                }
            }
            Value::Upper(p) => match p.member(self.spec, &RingPoly::monomial(u.clone())) {
                Ok(true) => Verdict::exact(),
                _ => Verdict::refuted_by(u.clone()),
            },
            Value::Poly(_) => Verdict::inconclusive("not a set"),
        }
    }

    fn subset(&self, a: &Value, b: &Value) -> Result<Verdict> {
        let (spec, bounds) = (self.spec, self.bounds);
        Ok(match (a, b) {
            (Value::Ideal { ideal: i, exactness: ea, dual_of: da }, Value::Ideal { ideal: j, exactness: eb, dual_of: db }) => {
                if let Some(d) = db {
                    if entail::dual_contains(spec, i, d) {
                        return Ok(Verdict::exact());
                    }
                }
                match da {
                    Some(d) if !ea.is_exact() => classify::dual_within(spec, d, j, bounds),
                    _ => eb.cap(ea.cap(subset_up_to(spec, i, j, bounds))),
                }
            }
            (Value::Upper(p), Value::Ideal { ideal: j, exactness, .. }) => exactness.cap(p.subset_of_extension(spec, j, bounds)),
            (Value::Upper(p), Value::Extended(j)) => p.subset_of_extension(spec, j, bounds),
            (Value::Ideal { ideal: i, exactness, .. }, Value::Extended(j)) => exactness.cap(subset_up_to(spec, i, j, bounds)),
            (Value::Extended(i), Value::Extended(j)) => subset_up_to(spec, i, j, bounds),
            _ => return Err(Error::Unsupported("inclusion between these kinds of sets".into())),
        })
    }

    pub fn evaluate(&mut self, a: &Assertion, opts: &RunOptions) -> Result<(Verdict, Option<serde_json::Value>)> {
        let (spec, bounds) = (self.spec, self.bounds);
        let args: Vec<Value> = a.args.iter().map(|x| self.arg(x)).collect::<Result<_>>()?;
        let ideal_arg = |k: usize| match &args[k] {
            Value::Ideal { ideal, .. } => Ok(ideal.clone()),
            _ => Err(Error::Input(format!("argument {} of `{}` must be an ideal of R", k + 1, a.predicate))),
        };
        let mono_arg = |k: usize| Env::elem(&a.args[k]).and_then(as_monomial);
        let upper_arg = || match &args[0] {
            Value::Upper(p) => Some(p.clone()),
            _ => None,
        };
        let upperdiv = |p: &UpperToZero| polyext::upperdiv_check(spec, p, bounds);
        let v = match a.predicate.as_str() {
            "closed" => spec.closure_check(2000, opts.seed),
            "integrally_closed" => self.integrally_closed(),
            "completely_integrally_closed" => spec.is_completely_integrally_closed(bounds),
            "member" => {
                let g = Env::elem(&a.args[1])?;
                match (&args[0], as_monomial(g)) {
                    (Value::Upper(p), _) => {
                        if p.member(spec, g)? {
                            Verdict::exact()
                        } else {
                            Verdict::refuted(Witness::Poly(g.to_string()))
                        }
                    }
                    (Value::Extended(j), _) => {
                        if ExtendedIdeal::new(j.clone()).contains(spec, g) {
                            Verdict::exact()
                        } else {
                            Verdict::refuted(Witness::Poly(g.to_string()))
                        }
                    }
                    (v, Ok(u)) => self.contains_mono(v, &u),
                    (_, Err(e)) => return Err(e),
                }
            }
            "v_member" => star::v_member(spec, &ideal_arg(0)?, &mono_arg(1)?, bounds),
            "t_member" => star::t_member(spec, &ideal_arg(0)?, &mono_arg(1)?, bounds),
            "divisorial" => match upper_arg() {
                Some(p) => upperdiv(&p)?.divisorial,
                None => star::is_divisorial(spec, &ideal_arg(0)?, bounds),
            },
            "maximal_divisorial" => match upper_arg() {
                Some(p) => upperdiv(&p)?.maximal_divisorial,
                None => classify::is_maximal_divisorial(spec, &ideal_arg(0)?, bounds)?,
            },
            "v_invertible" => match upper_arg() {
                Some(p) => upperdiv(&p)?.v_invertible,
                None => star::is_v_invertible(spec, &ideal_arg(0)?, bounds),
            },
            "v_finite" => match upper_arg() {
                Some(p) => polyext::upper_is_v_finite(&p, bounds),
                None => star::is_v_finite(spec, &ideal_arg(0)?, bounds),
            },
            "prime" => match upper_arg() {
                // fK[X] is prime when f has degree one, and so is its
                // contraction to R[X].
                Some(p) if p.f.degree() == Some(1) => Verdict::exact(),
                Some(p) => Verdict::inconclusive(format!("irreducibility of {} over the fraction field", p.f)),
                None => classify::is_prime(spec, &ideal_arg(0)?, bounds)?,
            },
            "strong" => star::is_strong(spec, &ideal_arg(0)?, bounds),
            "invertible" => star::is_invertible(spec, &ideal_arg(0)?),
            "t_invertible" => star::is_t_invertible(spec, &ideal_arg(0)?, bounds),
            "t_ideal" => star::is_t_ideal(spec, &ideal_arg(0)?, bounds),
            "maxdiv_rep" => match classify::find_maxdiv_representation(spec, &ideal_arg(0)?, bounds)? {
                Some(r) => return Ok((r.verdict, Some(json!({ "x": r.x })))),
                None => Verdict::inconclusive(format!("no x found, {bounds}")),
            },
            "upperdiv" => {
                let p = upper_arg().ok_or_else(|| Error::Input("`upperdiv` takes an upper to zero".into()))?;
                let r = upperdiv(&p)?;
                let v = r.divisorial.clone().meet(r.proof_witness.clone());
                return Ok((v, Some(serde_json::to_value(&r).expect("serializable"))));
            }
            "subset" => self.subset(&args[0], &args[1])?,
            "equal" => self.subset(&args[0], &args[1])?.meet(self.subset(&args[1], &args[0])?),
            "not_t_maximal" => {
                let p = self.prime_of(&args[0])?;
                let (w, polynomial) = match &args[1] {
                    Value::Extended(w) => (w.clone(), true),
                    Value::Ideal { ideal, .. } => (ideal.clone(), false),
                    _ => return Err(Error::Input("W must be an ideal or an extended ideal".into())),
                };
                let u = Env::elem(&a.args[2])?.clone();
                let wit = NotTMaximalWitness { w, u, polynomial };
                let r = classify::refute_t_maximal(spec, &p, &wit, bounds, opts.cert_samples, opts.seed)?;
                let checks: Vec<_> = r.checks.iter().map(|(n, v)| json!({ "check": n, "result": v })).collect();
                let ev = json!({ "checks": checks, "certificates": r.certificates.len() });
                return Ok((r.verdict, Some(ev)));
            }
            "prop_max_converse" => classify::check_prop_max_converse(spec, &ideal_arg(0)?, &mono_arg(1)?, bounds)?,
            other => return Err(Error::Input(format!("unknown predicate `{other}`"))),
        };
        Ok((v, None))
    }

    /// Re-checks an expected refutation witness independently of the
    /// search that produced the verdict.
    fn witness_holds(&self, a: &Assertion, w: &RingPoly) -> Result<bool> {
        let spec = self.spec;
        let w = as_monomial(w)?;
        let args: Vec<Value> = a.args.iter().map(|x| self.arg(x)).collect::<Result<_>>()?;
        let separates = |x: &Value, y: &Value| self.contains_mono(x, &w).is_proved() && self.contains_mono(y, &w).is_refuted();
        Ok(match a.predicate.as_str() {
            "subset" => separates(&args[0], &args[1]),
            "equal" => separates(&args[0], &args[1]) || separates(&args[1], &args[0]),
            "member" | "t_member" | "v_member" => Env::elem(&a.args[1]).and_then(as_monomial)? == w,
            "prop_max_converse" => {
                let Value::Ideal { ideal: p, .. } = &args[0] else {
                    return Ok(false);
                };
                let x = Env::elem(&a.args[1]).and_then(as_monomial)?;
                let rx = FracIdeal::fingen(spec, vec![Monomial::one(), x])?;
                entail::dual_contains(spec, &FracIdeal::principal(w.clone()), p) && !rx.contains(spec, &w)
            }
            _ => {
                return Err(Error::Unsupported(format!("no independent witness check for `{}`", a.predicate)));
            }
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// Neither confirmed nor contradicted.
    Inconclusive,
    /// Evaluation raised an error.
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct AssertionReport {
    pub step: String,
    pub line: usize,
    pub assertion: String,
    pub expected: &'static str,
    pub result: Verdict,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evidence: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScenarioReport {
    pub schema_version: u32,
    pub scenario: String,
    pub bounds: Bounds,
    pub seed: u64,
    pub outcome: Status,
    pub assertions: Vec<AssertionReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

impl ScenarioReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("scenario {} ({}, seed {})\n", self.scenario, self.bounds, self.seed);
        for a in &self.assertions {
            let tag = match a.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Inconclusive => "INCONCLUSIVE",
                Status::Error => "ERROR",
            };
            out += &format!("  [{tag}] {}: {} expected {}, got {}", a.step, a.assertion, a.expected, a.result);
            if let Some(ms) = a.wall_ms {
                out += &format!(" [{ms} ms]");
            }
            out.push('\n');
            if let Some(n) = &a.note {
                out += &format!("         {n}\n");
            }
        }
        out += &format!("outcome: {:?}\n", self.outcome).to_lowercase();
        if let Some(ms) = self.wall_ms {
            out += &format!("wall time: {ms} ms\n");
        }
        out
    }

    pub fn failed(&self) -> impl Iterator<Item = &AssertionReport> {
        self.assertions.iter().filter(|a| matches!(a.status, Status::Fail | Status::Error))
    }
}

fn assertion_text(a: &Assertion, x: &str) -> String {
    let args: Vec<String> = a
        .args
        .iter()
        .map(|g| match g {
            Arg::Name(n) => n.clone(),
            Arg::Elem(p) => p.display_with(x),
        })
        .collect();
    format!("{}({})", a.predicate, args.join(", "))
}

/// Bounds for a run: the override, else the scenario's, else the default.
pub fn effective_bounds(sc: &Scenario, opts: &RunOptions) -> Result<Bounds> {
    let base = sc.bounds.unwrap_or_default();
    let b = Bounds::new(opts.degree.unwrap_or(base.degree), opts.window.unwrap_or(base.window));
    if b.degree == 0 {
        return Err(Error::Input("degree bound must be at least 1".into()));
    }
    if b.window == 0 && !sc.spec.families.is_empty() {
        return Err(Error::Input("family window must be at least 1 for a ring with index families".into()));
    }
    Ok(b)
}

pub fn run_scenario(sc: &Scenario, opts: &RunOptions) -> Result<ScenarioReport> {
    let start = Instant::now();
    let bounds = effective_bounds(sc, opts)?;
    let mut env = Env::new(&sc.spec, bounds);
    let x = sc.indeterminate.as_deref().unwrap_or("X");
    let mut assertions = Vec::new();
    for item in &sc.items {
        match item {
            Item::Decl(d) => env.declare(&d.name, &d.value).map_err(|e| {
                Error::Input(format!("{}:{}:{}: `{}`: {e}", sc.file, d.span.line, d.span.col, d.name))
            })?,
            Item::Fixture(..) => {}
            Item::Assert(a) => assertions.push(check(&mut env, a, opts, x)),
        }
    }
    let outcome = if assertions.iter().any(|a| matches!(a.status, Status::Fail | Status::Error)) {
        Status::Fail
    } else if assertions.iter().any(|a| a.status == Status::Inconclusive) {
        Status::Inconclusive
    } else {
        Status::Pass
    };
    Ok(ScenarioReport {
        schema_version: SCHEMA_VERSION,
        scenario: sc.name.clone(),
        bounds,
        seed: opts.seed,
        outcome,
        assertions,
        wall_ms: opts.timings.then(|| start.elapsed().as_millis() as u64),
    })
}

fn check(env: &mut Env, a: &Assertion, opts: &RunOptions, x: &str) -> AssertionReport {
    let mut report = AssertionReport {
        step: a.step.clone(),
        line: a.span.line,
        assertion: assertion_text(a, x),
        expected: a.expected.keyword(),
        result: Verdict::inconclusive("not evaluated"),
        status: Status::Error,
        evidence: None,
        note: None,
        wall_ms: None,
    };
    let start = Instant::now();
    let outcome = env.evaluate(a, opts);
    report.wall_ms = opts.timings.then(|| start.elapsed().as_millis() as u64);
    let (v, evidence) = match outcome {
        Ok(r) => r,
        Err(e) => {
            report.note = Some(e.to_string());
            return report;
        }
    };
    report.status = match (a.expected, &v) {
        (Expected::Proved, Verdict::Proved { .. }) => Status::Pass,
        (Expected::Refuted, Verdict::Refuted { .. }) => Status::Pass,
        (Expected::Inconclusive, Verdict::Inconclusive { .. }) => Status::Pass,
        (Expected::Unproved, Verdict::Refuted { .. } | Verdict::Inconclusive { .. }) => Status::Pass,
        (Expected::Proved | Expected::Refuted, Verdict::Inconclusive { .. }) => Status::Inconclusive,
        _ => Status::Fail,
    };
    if let (Status::Pass, Some(w)) = (report.status, &a.witness) {
        match env.witness_holds(a, w) {
            Ok(true) => report.note = Some(format!("witness {} re-checked", w.display_with(x))),
            Ok(false) => {
                report.status = Status::Fail;
                report.note = Some(format!("expected witness {} does not separate", w.display_with(x)));
            }
            Err(e) => {
                report.status = Status::Error;
                report.note = Some(e.to_string());
            }
        }
    }
    report.result = v;
    report.evidence = evidence;
    report
}

/// Parses `src` and runs every scenario in it.
pub fn run_source(file: &str, src: &str, opts: &RunOptions) -> Result<Vec<ScenarioReport>> {
    let scenarios = dsl::parse(file, src).map_err(Error::Parse)?;
    scenarios.iter().map(|s| run_scenario(s, opts)).collect()
}

fn run_embedded(file: &str, src: &str, opts: &RunOptions) -> Result<ScenarioReport> {
    let sc = dsl::parse_scenario(file, src).map_err(Error::Parse)?;
    run_scenario(&sc, opts)
}

pub fn run_example_3_1(opts: &RunOptions) -> Result<ScenarioReport> {
    run_embedded("ex3_1.stide", EX3_1, opts)
}

pub fn run_example_3_2(opts: &RunOptions) -> Result<ScenarioReport> {
    run_embedded("ex3_2.stide", EX3_2, opts)
}
