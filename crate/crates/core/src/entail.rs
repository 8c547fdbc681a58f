//! Symbolic inclusion lemmas for constraint ideals.
//!
//! Each lemma reasons about an arbitrary monomial `u` satisfying a clause
//! list and shows that it satisfies another clause. Only the shipped rule
//! classes take part; a spec with a `DegreeExcludes` rule gets no symbolic
//! help at all, so every answer about it comes from search.

use crate::ideal::{colon, Clause, ConstraintIdeal, FracIdeal};
use crate::monoid::{trigger_index, witness_selector, MonoidRule, MonoidSpec, Trigger, WitnessSel};
use crate::monomial::{DegreeFunctional, IndexRange, Monomial, Selector};

fn symbolic(spec: &MonoidSpec) -> bool {
    spec.has_nonnegativity() && spec.rules.iter().all(|r| !matches!(r, MonoidRule::DegreeExcludes { .. }))
}

/// Every `u` allowed by `ca` is a non-negative exponent vector.
fn nonneg_members(spec: &MonoidSpec, ca: &ConstraintIdeal) -> bool {
    ca.has_base() || FracIdeal::Constraint(ca.clone()).lower_bound(spec).is_some_and(|lb| lb.is_nonnegative())
}

/// Proves `a ⊆ b` without enumeration. `false` means "no proof found".
pub fn subset(spec: &MonoidSpec, a: &FracIdeal, b: &FracIdeal) -> bool {
    match (a, b) {
        (FracIdeal::FinGen(gens), _) => gens.iter().all(|g| b.contains(spec, g)),
        (FracIdeal::Constraint(ca), FracIdeal::Constraint(cb)) => {
            cb.clauses.iter().all(|cl| entails(spec, ca, cl))
        }
        (FracIdeal::Constraint(_), FracIdeal::FinGen(_)) => false,
    }
}

/// Proves that every `u` satisfying `ca` satisfies `clause`.
pub fn entails(spec: &MonoidSpec, ca: &ConstraintIdeal, clause: &Clause) -> bool {
    if ca.clauses.contains(clause) {
        return true;
    }
    if !symbolic(spec) {
        return false;
    }
    let lb = FracIdeal::Constraint(ca.clone()).lower_bound(spec);
    let nonneg = nonneg_members(spec, ca);
    match clause {
        Clause::Shift(m) => {
            let via_shift = ca.clauses.iter().any(|c| match c {
                Clause::Shift(k) => spec.contains(&m.div(k)),
                _ => false,
            });
            via_shift || (ca.has_base() && m.is_nonnegative() && shift_preserves(spec, ca, m))
        }
        Clause::Degree { functional, at_least } => {
            if lb.as_ref().is_some_and(|lb| functional.eval(lb) >= *at_least) {
                return true;
            }
            if !nonneg {
                return false;
            }
            let weaker = ca.clauses.iter().any(|c| match c {
                Clause::Degree { functional: f2, at_least: c2 } => f2.within(functional) && c2 >= at_least,
                _ => false,
            });
            weaker || degree_by_contradiction(spec, ca, functional, *at_least)
        }
        Clause::Occurs { selector, shift } => {
            if lb.as_ref().is_some_and(|lb| {
                lb.mul(shift).iter().any(|(k, e)| *e > 0 && selector.selects(k))
            }) {
                return true;
            }
            if !nonneg || !shift.is_nonnegative() {
                return false;
            }
            // Positive exponents of u stay positive after a non-negative shift.
            if shift.iter().any(|(k, _)| selector.selects(k)) {
                return true;
            }
            occurs_in_members(spec, ca, selector)
        }
        Clause::Adjoin { .. } | Clause::InIdeal { .. } => false,
    }
}

/// `u` satisfies `ca` and is non-negative; shows some selected indeterminate
/// occurs in `u`.
fn occurs_in_members(spec: &MonoidSpec, ca: &ConstraintIdeal, selector: &DegreeFunctional) -> bool {
    let direct = ca.clauses.iter().any(|c| match c {
        Clause::Occurs { selector: s2, shift } => shift.is_one() && s2.within(selector),
        _ => false,
    });
    if direct {
        return true;
    }
    let nonunit = ca.clauses.iter().any(|c| match c {
        Clause::Degree { functional, at_least } => *functional == DegreeFunctional::total() && *at_least >= 1,
        _ => false,
    });
    if ca.has_base() && nonunit && spec.nonunits_meet(selector) {
        return true;
    }
    // Suppose nothing selected occurs in u. A non-negative shift m with
    // u·m ∈ S fires a support rule whose witnesses are all selected and
    // absent from m: contradiction.
    ca.clauses.iter().any(|c| match c {
        Clause::Shift(m) if m.is_nonnegative() => m.support().any(|k| {
            spec.rules.iter().any(|r| match r {
                MonoidRule::SupportImplication { trigger, witnesses } => match trigger_index(trigger, k) {
                    Some(n) => witnesses.iter().all(|w| {
                        let sel = witness_selector(w, n);
                        DegreeFunctional::new(vec![sel.clone()]).within(selector)
                            && !m.support().any(|x| sel.matches(x))
                    }),
                    None => false,
                },
                _ => false,
            })
        }),
        _ => false,
    })
}

/// Assumes `deg_L(u) <= c - 1` for non-negative `u` satisfying `ca` and looks
/// for a clause that must then fail.
fn degree_by_contradiction(spec: &MonoidSpec, ca: &ConstraintIdeal, l: &DegreeFunctional, c: i64) -> bool {
    if c <= 0 {
        return true;
    }
    if *l == DegreeFunctional::total() && c == 1 && !ca.contains(spec, &Monomial::one()) {
        return true;
    }
    ca.clauses.iter().any(|cl| match cl {
        Clause::Shift(m) if m.is_nonnegative() => spec.rules.iter().any(|r| match r {
            MonoidRule::LinearDegree { lhs, family } if lhs.within(l) => {
                // deg_lhs(u·m) <= c - 1 + deg_lhs(m) while some family
                // exponent of u·m is at least that of m.
                let cap = c - 1 + lhs.eval(m);
                m.iter().any(|(k, e)| k.family() == Some(family) && *e > cap)
            }
            _ => false,
        }),
        _ => false,
    })
}

/// For `u ∈ S` satisfying `ca`, shows `u·m ∈ S` rule by rule.
pub fn shift_preserves(spec: &MonoidSpec, ca: &ConstraintIdeal, m: &Monomial) -> bool {
    if !m.is_nonnegative() {
        return false;
    }
    spec.rules.iter().all(|r| match r {
        MonoidRule::NonNegative => true,
        MonoidRule::LinearDegree { lhs, family } => {
            // deg_lhs(u) >= deg_{f[n]}(u) for all n; adding m keeps this if
            // m satisfies the rule on its own.
            let d = lhs.eval(m);
            d >= 0 && m.iter().filter(|(k, _)| k.family() == Some(family)).all(|(_, e)| d >= *e)
        }
        MonoidRule::SupportImplication { trigger, witnesses } => m.support().all(|k| match trigger_index(trigger, k) {
            None => true,
            Some(n) => witnesses.iter().any(|w| {
                let sel = witness_selector(w, n);
                m.support().any(|x| sel.matches(x))
                    || (!matches!(sel, Selector::Family(_, IndexRange::AtMost(_)))
                        && occurs_in_members(spec, ca, &DegreeFunctional::new(vec![sel])))
            }),
        }),
        MonoidRule::DegreeExcludes { .. } => false,
    })
}

/// For `u ∈ S` satisfying `ca` and any index `N` larger than every index in
/// `u`, shows `u·family[N] ∈ S`.
pub fn fresh_shift_preserves(spec: &MonoidSpec, ca: &ConstraintIdeal, family: &str) -> bool {
    if !symbolic(spec) || !ca.has_base() {
        return false;
    }
    let fresh = Selector::Family(family.into(), IndexRange::Any);
    spec.rules.iter().all(|r| match r {
        MonoidRule::NonNegative => true,
        MonoidRule::LinearDegree { lhs, family: f } => {
            if &**f != family || lhs.selectors.iter().any(|s| s.within(&fresh)) {
                return true;
            }
            entails(spec, ca, &Clause::Degree { functional: lhs.clone(), at_least: 1 })
        }
        MonoidRule::SupportImplication { trigger, witnesses } => match trigger {
            Trigger::Family(f) if &**f == family => {
                // With N above every index in u, "index <= N" is no restriction.
                let classes: Vec<Selector> = witnesses
                    .iter()
                    .map(|w| match w {
                        WitnessSel::Scalar(s) => Selector::Scalar(s.clone()),
                        WitnessSel::Family { family, .. } => Selector::Family(family.clone(), IndexRange::Any),
                    })
                    .collect();
                occurs_in_members(spec, ca, &DegreeFunctional::new(classes))
            }
            _ => true,
        },
        MonoidRule::DegreeExcludes { .. } => false,
    })
}

/// Shows `a ⊆ (R : i)`, i.e. `a·i ⊆ R`.
pub fn dual_contains(spec: &MonoidSpec, a: &FracIdeal, i: &FracIdeal) -> bool {
    let ring = FracIdeal::ring();
    match a {
        FracIdeal::FinGen(gens) => gens.iter().all(|g| match colon(&ring, std::slice::from_ref(g)) {
            Ok(c) => subset(spec, i, &FracIdeal::Constraint(c)),
            Err(_) => false,
        }),
        FracIdeal::Constraint(c) if c.is_ring() => subset(spec, i, &ring),
        // R[v] ⊆ (R : I) whenever I ⊆ R and v·I ⊆ I.
        FracIdeal::Constraint(c) => match c.clauses.as_slice() {
            [Clause::Adjoin { shift, var }] if shift.is_one() => {
                let v = Monomial::var(var.clone());
                let stable = match i {
                    FracIdeal::Constraint(_) => match colon(i, std::slice::from_ref(&v)) {
                        Ok(ci) => subset(spec, i, &FracIdeal::Constraint(ci)),
                        Err(_) => false,
                    },
                    FracIdeal::FinGen(g) => g.iter().all(|x| i.contains(spec, &x.mul(&v))),
                };
                subset(spec, i, &ring) && stable
            }
            _ => false,
        },
    }
}

/// `I = R ∩ {deg_L >= 1}` or `R ∩ {occurs}` over a non-negative spec: the
/// complement in `S` is closed under products, so `I` is prime.
pub fn prime_by_shape(spec: &MonoidSpec, i: &FracIdeal) -> bool {
    let FracIdeal::Constraint(c) = i else { return false };
    if !spec.has_nonnegativity() || !c.has_base() || c.clauses.len() != 2 || c.contains(spec, &Monomial::one()) {
        return false;
    }
    c.clauses.iter().all(|cl| match cl {
        Clause::Shift(m) => m.is_one(),
        Clause::Degree { at_least, .. } => *at_least == 1,
        Clause::Occurs { shift, .. } => shift.is_one(),
        _ => false,
    })
}

/// `I = R ∩ (monotone atoms)` together with members of `I` showing that
/// every element of `(R : I)` is non-negative. Then `(R : I) ⊆ (I : I)`.
pub fn strong_by_shape(spec: &MonoidSpec, i: &FracIdeal, members: &[Monomial]) -> bool {
    let FracIdeal::Constraint(c) = i else { return false };
    if !symbolic(spec) || !c.has_base() {
        return false;
    }
    let monotone = c.clauses.iter().all(|cl| match cl {
        Clause::Shift(m) => m.is_one(),
        Clause::Degree { .. } => true,
        Clause::Occurs { shift, .. } => shift.is_one(),
        _ => false,
    });
    if !monotone || members.iter().any(|m| !c.contains(spec, m)) {
        return false;
    }
    // u·m ∈ S ⊆ (non-negative) forces u_x >= -m_x; a member with m_x = 0
    // pins u_x >= 0.
    members
        .iter()
        .flat_map(|m| m.support())
        .all(|x| members.iter().any(|m| m.exp(x) == 0))
        && !members.is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::catalog::*;
    use crate::monomial::VarKey;

    fn m(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    fn q1() -> ConstraintIdeal {
        ConstraintIdeal::new(vec![
            Clause::Shift(Monomial::one()),
            Clause::Degree { functional: DegreeFunctional::scalars(&["y", "z"]), at_least: 1 },
        ])
        .unwrap()
    }

    fn p2() -> FracIdeal {
        FracIdeal::ring_with(vec![Clause::Occurs { selector: all_x(), shift: Monomial::one() }]).unwrap()
    }

    #[test]
    fn fresh_multiplier_for_cone() {
        let s1 = cone_yzt();
        assert!(fresh_shift_preserves(&s1, &q1(), "t"));
        let bare = ConstraintIdeal::new(vec![Clause::Shift(Monomial::one())]).unwrap();
        assert!(!fresh_shift_preserves(&s1, &bare, "t"));
    }

    #[test]
    fn contradiction_recovers_degree_atom() {
        let s1 = cone_yzt();
        // (R : t[9]) ∩ R ⊆ Q because deg(y,z) = 0 forces t[9] out of S.
        let ca = ConstraintIdeal::new(vec![Clause::Shift(Monomial::one()), Clause::Shift(m("t[9]"))]).unwrap();
        assert!(subset(&s1, &FracIdeal::Constraint(ca), &FracIdeal::Constraint(q1())));
    }

    #[test]
    fn adjoined_ring_lies_in_dual() {
        let s2 = support_yzxt();
        let rz = FracIdeal::constraint(vec![Clause::Adjoin { shift: Monomial::one(), var: VarKey::scalar("Z") }]).unwrap();
        assert!(dual_contains(&s2, &rz, &p2()));
        assert!(dual_contains(&s2, &FracIdeal::principal(m("Z")), &p2()));
        assert!(!dual_contains(&s2, &FracIdeal::principal(m("T[1]")), &p2()));
    }

    #[test]
    fn shapes() {
        let s2 = support_yzxt();
        assert!(prime_by_shape(&s2, &p2()));
        assert!(strong_by_shape(&s2, &p2(), &[m("X[1]"), m("X[2]")]));
        assert!(!strong_by_shape(&s2, &p2(), &[m("X[1]")]));
        let ex = crate::monoid::MonoidSpec::new(
            &["y"],
            &[],
            vec![
                MonoidRule::NonNegative,
                MonoidRule::DegreeExcludes { functional: DegreeFunctional::total(), excluded: vec![1] },
            ],
        )
        .unwrap();
        assert!(!subset(&ex, &FracIdeal::ring(), &FracIdeal::Constraint(q1())));
    }

    #[test]
    fn support_contradiction() {
        let s2 = support_yzxt();
        // u ∈ S and u·Z ∈ S force some X into u.
        let ca = ConstraintIdeal::new(vec![Clause::Shift(Monomial::one()), Clause::Shift(m("Z"))]).unwrap();
        assert!(subset(&s2, &FracIdeal::Constraint(ca), &p2()));
    }
}
