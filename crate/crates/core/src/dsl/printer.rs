//! Canonical text for parsed scenarios; `parse(print(s))` gives back `s`
//! up to source positions.

use std::fmt::Write;

use super::ast::*;
use crate::monoid::{MonoidRule, Trigger, WitnessSel};
use crate::monomial::DegreeFunctional;

pub fn print(sc: &Scenario) -> String {
    let mut out = String::new();
    let x = sc.indeterminate.as_deref().unwrap_or("X");
    let _ = writeln!(out, "scenario \"{}\"", sc.name);
    if !sc.spec.scalars.is_empty() {
        let _ = writeln!(out, "vars {}", join(sc.spec.scalars.iter().map(|s| s.to_string())));
    }
    if !sc.spec.families.is_empty() {
        let _ = writeln!(out, "family {}", join(sc.spec.families.iter().map(|s| s.to_string())));
    }
    if let Some(x) = &sc.indeterminate {
        let _ = writeln!(out, "indeterminate {x}");
    }
    for r in &sc.spec.rules {
        let _ = writeln!(out, "rule {}", rule(r));
    }
    if let Some(b) = sc.bounds {
        let _ = writeln!(out, "bounds degree {} window {}", b.degree, b.window);
    }
    for item in &sc.items {
        match item {
            Item::Decl(d) => {
                let v = match &d.value {
                    DeclValue::Ideal(e) => format!("ideal {} = {}", d.name, ideal(e)),
                    DeclValue::Poly(p) => format!("poly {} = {}", d.name, p.display_with(x)),
                    DeclValue::Upper(f) => format!("upper {} = u2z({f})", d.name),
                };
                let _ = writeln!(out, "{v}");
            }
            Item::Fixture(n, _) => {
                let _ = writeln!(out, "fixture {n}");
            }
            Item::Assert(a) => {
                let args = join(a.args.iter().map(|a| match a {
                    Arg::Name(n) => n.clone(),
                    Arg::Elem(e) => e.display_with(x),
                }));
                let w = a.witness.as_ref().map(|w| format!("({})", w.display_with(x))).unwrap_or_default();
                let _ = writeln!(out, "assert {}({args}) = {}{w} @ \"{}\"", a.predicate, a.expected.keyword(), a.step);
            }
        }
    }
    out
}

fn join<I: IntoIterator<Item = String>>(parts: I) -> String {
    parts.into_iter().collect::<Vec<_>>().join(", ")
}

fn functional(f: &DegreeFunctional) -> String {
    format!("({})", join(f.selectors.iter().map(|s| s.to_string())))
}

fn rule(r: &MonoidRule) -> String {
    match r {
        MonoidRule::NonNegative => "nonneg".into(),
        MonoidRule::LinearDegree { lhs, family } => format!("linear: deg{} >= deg({family}[*])", functional(lhs)),
        MonoidRule::SupportImplication { trigger, witnesses } => {
            let t = match trigger {
                Trigger::Scalar(s) => s.to_string(),
                Trigger::Family(f) => format!("{f}[n]"),
            };
            let ws: Vec<String> = witnesses
                .iter()
                .map(|w| match w {
                    WitnessSel::Scalar(s) => s.to_string(),
                    WitnessSel::Family { family, up_to_trigger: false } => format!("exists {family}[*]"),
                    WitnessSel::Family { family, up_to_trigger: true } => format!("exists {family}[<=n]"),
                })
                .collect();
            format!("support: {t} => {}", ws.join(" or "))
        }
        MonoidRule::DegreeExcludes { functional: f, excluded } => {
            format!("exclude: deg{} != {}", functional(f), join(excluded.iter().map(|e| e.to_string())))
        }
    }
}

fn ideal(e: &IdealExpr) -> String {
    match e {
        IdealExpr::Ring => "ring".into(),
        IdealExpr::Gens(g) => format!("gens({})", join(g.iter().map(|m| m.to_string()))),
        IdealExpr::Atoms(atoms) => {
            let a = atoms.iter().map(|a| match a {
                Atom::Degree(f, k) => format!("deg{} >= {k}", functional(f)),
                Atom::Occurs(f) => format!("occurs{}", functional(f)),
            });
            format!("constraint{{ {} }}", join(a))
        }
        IdealExpr::Adjoin(v) => format!("adjoin({v})"),
        IdealExpr::Colon(a, b) => format!("({} : {})", ideal(a), ideal(b)),
        IdealExpr::Content(f) => format!("content({f})"),
        IdealExpr::Extend(q) => format!("extend({q})"),
        IdealExpr::Name(n) => n.clone(),
        IdealExpr::Sum(a, b) => format!("sum({}, {})", ideal(a), ideal(b)),
        IdealExpr::Product(a, b) => format!("product({}, {})", ideal(a), ideal(b)),
        IdealExpr::Meet(parts, cert) => {
            let body = parts.iter().map(ideal).collect::<Vec<_>>().join(" & ");
            match cert {
                Some(c) => format!("{body} certify {c}"),
                None => body,
            }
        }
    }
}
