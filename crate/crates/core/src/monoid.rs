//! Constraint-defined monoids of monomials.
//!
//! A [`MonoidSpec`] describes a submonoid `S` of the Laurent monomials by a
//! list of decidable rules; the ring under study is the semigroup ring
//! `k[S]`. Only the three shipped rule classes (non-negativity, linear degree
//! inequalities, support implications) ever earn symbolic proofs. The
//! `DegreeExcludes` class exists so that arbitrary predicates can be stated
//! and tested; it only ever yields refutations or inconclusive answers.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::monomial::{DegreeFunctional, IndexRange, Monomial, Selector, VarKey};
use crate::verdict::{Bounds, Verdict, Witness};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Trigger {
    Scalar(Arc<str>),
    /// `T[n]` for every index `n`.
    Family(Arc<str>),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum WitnessSel {
    Scalar(Arc<str>),
    /// Some member of the family occurs; with `up_to_trigger` the index must
    /// not exceed the trigger's index.
    Family { family: Arc<str>, up_to_trigger: bool },
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum MonoidRule {
    NonNegative,
    /// `deg_lhs(u) >= deg_{family[n]}(u)` for every index `n`.
    LinearDegree { lhs: DegreeFunctional, family: Arc<str> },
    /// If the trigger occurs, some witness occurs.
    SupportImplication { trigger: Trigger, witnesses: Vec<WitnessSel> },
    /// `deg(u)` avoids the listed values.
    DegreeExcludes { functional: DegreeFunctional, excluded: Vec<i64> },
}

impl MonoidRule {
    fn shipped(&self) -> bool {
        !matches!(self, MonoidRule::DegreeExcludes { .. })
    }

    pub fn holds(&self, u: &Monomial) -> bool {
        match self {
            MonoidRule::NonNegative => u.is_nonnegative(),
            MonoidRule::LinearDegree { lhs, family } => {
                let d = lhs.eval(u);
                // Indices absent from u contribute 0 on the right.
                d >= 0
                    && u
                        .iter()
                        .filter(|(k, _)| k.family() == Some(family))
                        .all(|(_, e)| d >= *e)
            }
            MonoidRule::SupportImplication { trigger, witnesses } => u
                .support()
                .filter_map(|k| trigger_index(trigger, k))
                .all(|n| witnesses.iter().any(|w| witness_present(w, n, u))),
            MonoidRule::DegreeExcludes { functional, excluded } => {
                !excluded.contains(&functional.eval(u))
            }
        }
    }
}

/// `Some(n)` when `key` fires the trigger (scalars report index 0).
pub(crate) fn trigger_index(trigger: &Trigger, key: &VarKey) -> Option<u32> {
    match (trigger, key) {
        (Trigger::Scalar(a), VarKey::Scalar(b)) if a == b => Some(0),
        (Trigger::Family(f), VarKey::Indexed(g, n)) if f == g => Some(*n),
        _ => None,
    }
}

pub(crate) fn witness_selector(w: &WitnessSel, trigger_index: u32) -> Selector {
    match w {
        WitnessSel::Scalar(s) => Selector::Scalar(s.clone()),
        WitnessSel::Family { family, up_to_trigger: false } => {
            Selector::Family(family.clone(), IndexRange::Any)
        }
        WitnessSel::Family { family, up_to_trigger: true } => {
            Selector::Family(family.clone(), IndexRange::AtMost(trigger_index))
        }
    }
}

fn witness_present(w: &WitnessSel, n: u32, u: &Monomial) -> bool {
    let sel = witness_selector(w, n);
    u.support().any(|k| sel.matches(k))
}

impl fmt::Display for MonoidRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonoidRule::NonNegative => f.write_str("rule nonneg"),
            MonoidRule::LinearDegree { lhs, family } => {
                write!(f, "rule linear: {lhs} >= deg({family}[*])")
            }
            MonoidRule::SupportImplication { trigger, witnesses } => {
                f.write_str("rule support: ")?;
                match trigger {
                    Trigger::Scalar(s) => write!(f, "{s}")?,
                    Trigger::Family(fam) => write!(f, "{fam}[n]")?,
                }
                f.write_str(" =>")?;
                for (i, w) in witnesses.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" or")?;
                    }
                    match w {
                        WitnessSel::Scalar(s) => write!(f, " {s}")?,
                        WitnessSel::Family { family, up_to_trigger: false } => {
                            write!(f, " exists {family}[*]")?
                        }
                        WitnessSel::Family { family, up_to_trigger: true } => {
                            write!(f, " exists {family}[<=n]")?
                        }
                    }
                }
                Ok(())
            }
            MonoidRule::DegreeExcludes { functional, excluded } => {
                let vals: Vec<String> = excluded.iter().map(|v| v.to_string()).collect();
                write!(f, "rule exclude: {functional} != {}", vals.join(", "))
            }
        }
    }
}

/// The set `S` of monomials satisfying every rule.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MonoidSpec {
    pub scalars: Vec<Arc<str>>,
    pub families: Vec<Arc<str>>,
    pub rules: Vec<MonoidRule>,
}

impl MonoidSpec {
    pub fn new(scalars: &[&str], families: &[&str], rules: Vec<MonoidRule>) -> Result<Self> {
        let spec = MonoidSpec {
            scalars: scalars.iter().map(|s| Arc::from(*s)).collect(),
            families: families.iter().map(|s| Arc::from(*s)).collect(),
            rules,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Checks that names are unique and every rule refers to declared names.
    pub fn validate(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for n in self.scalars.iter().chain(&self.families) {
            if !seen.insert(n.clone()) {
                return Err(Error::Input(format!("duplicate indeterminate name `{n}`")));
            }
        }
        for r in &self.rules {
            let mut names: Vec<(Arc<str>, bool)> = Vec::new();
            let functional = |d: &DegreeFunctional, names: &mut Vec<(Arc<str>, bool)>| {
                for s in &d.selectors {
                    match s {
                        Selector::All => {}
                        Selector::Scalar(n) => names.push((n.clone(), false)),
                        Selector::Family(n, _) => names.push((n.clone(), true)),
                    }
                }
            };
            match r {
                MonoidRule::NonNegative => {}
                MonoidRule::LinearDegree { lhs, family } => {
                    functional(lhs, &mut names);
                    names.push((family.clone(), true));
                }
                MonoidRule::SupportImplication { trigger, witnesses } => {
                    match trigger {
                        Trigger::Scalar(n) => names.push((n.clone(), false)),
                        Trigger::Family(n) => names.push((n.clone(), true)),
                    }
                    for w in witnesses {
                        match w {
                            WitnessSel::Scalar(n) => names.push((n.clone(), false)),
                            WitnessSel::Family { family, up_to_trigger } => {
                                if *up_to_trigger && matches!(trigger, Trigger::Scalar(_)) {
                                    return Err(Error::Input(format!(
                                        "index-bounded witness `{family}[<=n]` needs an indexed trigger"
                                    )));
                                }
                                names.push((family.clone(), true));
                            }
                        }
                    }
                }
                MonoidRule::DegreeExcludes { functional: d, .. } => functional(d, &mut names),
            }
            for (n, is_family) in names {
                let known = if is_family {
                    self.families.contains(&n)
                } else {
                    self.scalars.contains(&n)
                };
                if !known {
                    let kind = if is_family { "family" } else { "variable" };
                    return Err(Error::Input(format!("unknown {kind} `{n}` in `{r}`")));
                }
            }
        }
        Ok(())
    }

    pub fn has_nonnegativity(&self) -> bool {
        self.rules.contains(&MonoidRule::NonNegative)
    }

    /// A polynomial ring over finitely many scalars: no families and no rule
    /// other than non-negativity. Every computation over such a spec is exact.
    pub fn is_free(&self) -> bool {
        self.families.is_empty() && self.rules.iter().all(|r| *r == MonoidRule::NonNegative)
            && self.has_nonnegativity()
    }

    /// Rejects monomials mentioning undeclared names.
    pub fn check_vars(&self, u: &Monomial) -> Result<()> {
        for k in u.support() {
            let ok = match k {
                VarKey::Scalar(n) => self.scalars.contains(n),
                VarKey::Indexed(f, _) => self.families.contains(f),
            };
            if !ok {
                return Err(Error::Input(format!("unknown indeterminate `{k}` in `{u}`")));
            }
        }
        Ok(())
    }

    /// Membership without the name check, for internal hot loops.
    pub fn contains(&self, u: &Monomial) -> bool {
        self.rules.iter().all(|r| r.holds(u))
    }

    pub fn member(&self, u: &Monomial) -> Result<bool> {
        self.check_vars(u)?;
        Ok(self.contains(u))
    }

    /// Scalars followed by `family[1..=window]` for every family.
    pub fn box_vars(&self, window: u32) -> Vec<VarKey> {
        let mut vars: Vec<VarKey> = self.scalars.iter().map(|s| VarKey::Scalar(s.clone())).collect();
        for f in &self.families {
            vars.extend((1..=window).map(|n| VarKey::Indexed(f.clone(), n)));
        }
        vars
    }

    /// Every unit vector over the enumeration box must be a quotient of two
    /// members, so that the group of quotients is the full lattice.
    pub fn check_lattice(&self, window: u32) -> Result<()> {
        let vars = self.box_vars(window.max(1) + 1);
        let probes: Vec<Monomial> = monomials_up_to(&vars, 2)
            .into_iter()
            .filter(|b| self.contains(b))
            .collect();
        for v in &vars {
            let e = Monomial::var(v.clone());
            if !probes.iter().any(|b| self.contains(&b.mul(&e))) {
                return Err(Error::Input(format!(
                    "`{v}` is not a quotient of two members; the quotient group is not the full lattice"
                )));
            }
        }
        Ok(())
    }

    /// Members of `S` over the box, in graded order, excluding 1.
    pub fn members_up_to(&self, degree: u32, window: u32) -> Vec<Monomial> {
        monomials_up_to(&self.box_vars(window), degree)
            .into_iter()
            .filter(|u| !u.is_one() && self.contains(u))
            .collect()
    }

    /// Members of total degree at most `deg_bound` over scalars and family
    /// indices at most `family_window` that are not products of two non-unit
    /// members.
    pub fn generators_up_to(&self, deg_bound: u32, family_window: u32) -> Result<Vec<Monomial>> {
        if deg_bound < 1 || family_window < 1 {
            return Err(Error::Input("degree bound and family window must be >= 1".into()));
        }
        let mut gens: Vec<Monomial> = Vec::new();
        for u in self.members_up_to(deg_bound, family_window) {
            let decomposable = gens.iter().any(|g| {
                let rest = u.div(g);
                !rest.is_one() && self.contains(&rest)
            });
            if !decomposable {
                gens.push(u);
            }
        }
        Ok(gens)
    }

    /// Closure of `S` under products.
    pub fn closure_check(&self, sample_budget: usize, seed: u64) -> Verdict {
        let support_rules = self
            .rules
            .iter()
            .any(|r| matches!(r, MonoidRule::SupportImplication { .. }));
        if self.rules.iter().all(MonoidRule::shipped) && (!support_rules || self.has_nonnegativity()) {
            // Linear inequalities add; supports of non-negative monomials
            // union, and each implication is monotone in the support.
            return Verdict::exact();
        }
        let members = self.members_up_to(4, 2);
        let mut pairs: Vec<(usize, usize)> = (0..members.len())
            .flat_map(|i| (i..members.len()).map(move |j| (i, j)))
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        pairs.shuffle(&mut rng);
        pairs.truncate(sample_budget);
        pairs.sort_unstable();
        for (i, j) in pairs {
            let (u, v) = (&members[i], &members[j]);
            if !self.contains(&u.mul(v)) {
                return Verdict::refuted(Witness::Pair(u.clone(), v.clone()));
            }
        }
        Verdict::inconclusive(format!("{sample_budget} sampled pairs of degree<=4, window<=2"))
    }

    /// Whether `f^n ∈ S` forces `f ∈ S`.
    pub fn is_integrally_closed(&self, bounds: Bounds) -> Verdict {
        if self.rules.iter().all(MonoidRule::shipped) {
            // Supports of f and f^n agree and linear rules scale by n.
            return Verdict::exact();
        }
        for f in self.candidate_quotients(bounds) {
            if self.contains(&f) {
                continue;
            }
            if (2..=4).any(|n| self.contains(&f.pow(n))) {
                return Verdict::refuted_by(f);
            }
        }
        Verdict::inconclusive(format!("searched f with f^n in S, n<=4, {bounds}"))
    }

    /// Complete integral closure: `u q^m ∈ S` for all `m >= 1` forces `q ∈ S`.
    pub fn is_completely_integrally_closed(&self, bounds: Bounds) -> Verdict {
        let cone = self
            .rules
            .iter()
            .all(|r| matches!(r, MonoidRule::NonNegative | MonoidRule::LinearDegree { .. }));
        if cone {
            // S is the set of lattice points of a homogeneous rational cone:
            // a gap between the two sides of a violated inequality grows
            // linearly in m and eventually exceeds the fixed offset of u.
            return Verdict::exact();
        }
        let small = Bounds::new(bounds.degree.min(3), bounds.window.min(2));
        let members: Vec<Monomial> = std::iter::once(Monomial::one())
            .chain(self.members_up_to(small.degree, small.window))
            .collect();
        for q in self.candidate_quotients(small) {
            if self.contains(&q) {
                continue;
            }
            for u in &members {
                let m_star = 1 + u.total_degree().max(0);
                let passes = (1..=m_star).all(|m| self.contains(&u.mul(&q.pow(m))));
                if passes && self.holds_for_every_power(u, &q) {
                    return Verdict::refuted(Witness::Pair(u.clone(), q));
                }
            }
        }
        Verdict::inconclusive(format!("almost-integral search, {small}"))
    }

    /// Given `u q ∈ S`, decides whether `u q^m ∈ S` for every `m >= 1` when
    /// the rule classes make that decidable from `m = 1`.
    fn holds_for_every_power(&self, u: &Monomial, q: &Monomial) -> bool {
        if !q.is_nonnegative() || !self.contains(&u.mul(q)) {
            return false;
        }
        self.rules.iter().all(|r| match r {
            MonoidRule::NonNegative => true,
            // Support of u q^m is constant for m >= 1.
            MonoidRule::SupportImplication { .. } => true,
            MonoidRule::LinearDegree { lhs, family } => {
                let d = lhs.eval(q);
                d >= 0
                    && q.iter()
                        .filter(|(k, _)| k.family() == Some(family))
                        .all(|(_, e)| d >= *e)
            }
            MonoidRule::DegreeExcludes { .. } => false,
        })
    }

    fn candidate_quotients(&self, bounds: Bounds) -> Vec<Monomial> {
        let vars = self.box_vars(bounds.window.max(1));
        if self.has_nonnegativity() {
            monomials_up_to(&vars, bounds.degree)
        } else {
            laurent_up_to(&vars, bounds.degree.min(4))
        }
    }

    /// Proves that every non-unit member of `S` has some indeterminate
    /// selected by `target` in its support, by chasing the rules: an
    /// indeterminate class is good if it is selected, or if its occurrence
    /// forces the occurrence of good classes only.
    pub fn nonunits_meet(&self, target: &DegreeFunctional) -> bool {
        if !self.has_nonnegativity() {
            return false;
        }
        #[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
        enum Class {
            Scalar(Arc<str>),
            Family(Arc<str>),
        }
        let classes: Vec<Class> = self
            .scalars
            .iter()
            .map(|s| Class::Scalar(s.clone()))
            .chain(self.families.iter().map(|f| Class::Family(f.clone())))
            .collect();
        let selected = |c: &Class| match c {
            Class::Scalar(s) => target.selects(&VarKey::Scalar(s.clone())),
            Class::Family(f) => target.selectors.iter().any(|sel| {
                matches!(sel, Selector::All)
                    || matches!(sel, Selector::Family(g, IndexRange::Any) if g == f)
            }),
        };
        let mut good: BTreeMap<Class, bool> = classes.iter().map(|c| (c.clone(), selected(c))).collect();
        loop {
            let mut changed = false;
            for c in &classes {
                if good[c] {
                    continue;
                }
                let forced = self.rules.iter().any(|r| match r {
                    MonoidRule::SupportImplication { trigger, witnesses } => {
                        let fires = match (trigger, c) {
                            (Trigger::Scalar(a), Class::Scalar(b)) => a == b,
                            (Trigger::Family(a), Class::Family(b)) => a == b,
                            _ => false,
                        };
                        fires
                            && witnesses.iter().all(|w| match w {
                                WitnessSel::Scalar(s) => good[&Class::Scalar(s.clone())],
                                WitnessSel::Family { family, .. } => good[&Class::Family(family.clone())],
                            })
                    }
                    // An occurrence of family[n] forces deg_lhs >= 1.
                    MonoidRule::LinearDegree { lhs, family } => {
                        matches!(c, Class::Family(f) if f == family)
                            && lhs.selectors.iter().all(|s| match s {
                                Selector::All => false,
                                Selector::Scalar(n) => good[&Class::Scalar(n.clone())],
                                Selector::Family(f, _) => {
                                    f != family && good[&Class::Family(f.clone())]
                                }
                            })
                    }
                    _ => false,
                });
                if forced {
                    good.insert(c.clone(), true);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        good.values().all(|g| *g)
    }
}

impl fmt::Display for MonoidSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = |v: &[Arc<str>]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(", ");
        if !self.scalars.is_empty() {
            writeln!(f, "vars {}", names(&self.scalars))?;
        }
        for fam in &self.families {
            writeln!(f, "family {fam}")?;
        }
        for r in &self.rules {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

/// All non-negative monomials over `vars` of total degree at most `degree`,
/// in graded order.
pub fn monomials_up_to(vars: &[VarKey], degree: u32) -> Vec<Monomial> {
    fn rec(vars: &[VarKey], left: u32, cur: &mut Vec<(VarKey, i64)>, out: &mut Vec<Monomial>) {
        match vars.split_first() {
            None => out.push(Monomial::from_pairs(cur.iter().cloned())),
            Some((v, rest)) => {
                for e in 0..=left {
                    if e > 0 {
                        cur.push((v.clone(), e as i64));
                    }
                    rec(rest, left - e, cur, out);
                    if e > 0 {
                        cur.pop();
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(vars, degree, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All Laurent monomials over `vars` with l1-norm at most `radius`.
pub fn laurent_up_to(vars: &[VarKey], radius: u32) -> Vec<Monomial> {
    fn rec(vars: &[VarKey], left: i64, cur: &mut Vec<(VarKey, i64)>, out: &mut Vec<Monomial>) {
        match vars.split_first() {
            None => out.push(Monomial::from_pairs(cur.iter().cloned())),
            Some((v, rest)) => {
                for e in -left..=left {
                    if e != 0 {
                        cur.push((v.clone(), e));
                    }
                    rec(rest, left - e.abs(), cur, out);
                    if e != 0 {
                        cur.pop();
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(vars, radius as i64, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Ready-made specs for the two worked examples and the polynomial ring
/// `k[y,z]`.
pub mod catalog {
    use super::*;

    fn family_sel(f: &str, r: IndexRange) -> Selector {
        Selector::Family(Arc::from(f), r)
    }

    /// `k[y,z]`.
    pub fn free_yz() -> MonoidSpec {
        MonoidSpec::new(&["y", "z"], &[], vec![MonoidRule::NonNegative]).unwrap()
    }

    /// Monomials in `y, z, t[1], t[2], ...` with `deg_{y,z} >= deg_{t[n]}`.
    pub fn cone_yzt() -> MonoidSpec {
        MonoidSpec::new(
            &["y", "z"],
            &["t"],
            vec![
                MonoidRule::NonNegative,
                MonoidRule::LinearDegree {
                    lhs: DegreeFunctional::scalars(&["y", "z"]),
                    family: Arc::from("t"),
                },
            ],
        )
        .unwrap()
    }

    /// Monomials in `Y, Z, X[n], T[n]` where `Z` needs some `X`, and `T[n]`
    /// needs `Y` or some `X[i]` with `i <= n`.
    pub fn support_yzxt() -> MonoidSpec {
        MonoidSpec::new(
            &["Y", "Z"],
            &["T", "X"],
            vec![
                MonoidRule::NonNegative,
                MonoidRule::SupportImplication {
                    trigger: Trigger::Scalar(Arc::from("Z")),
                    witnesses: vec![WitnessSel::Family { family: Arc::from("X"), up_to_trigger: false }],
                },
                MonoidRule::SupportImplication {
                    trigger: Trigger::Family(Arc::from("T")),
                    witnesses: vec![
                        WitnessSel::Scalar(Arc::from("Y")),
                        WitnessSel::Family { family: Arc::from("X"), up_to_trigger: true },
                    ],
                },
            ],
        )
        .unwrap()
    }

    pub fn all_x() -> DegreeFunctional {
        DegreeFunctional::new(vec![family_sel("X", IndexRange::Any)])
    }
}

#[cfg(test)]
mod tests {
    use super::catalog::*;
    use super::*;

    fn m(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    fn set(v: &[&str]) -> BTreeSet<Monomial> {
        v.iter().map(|s| m(s)).collect()
    }

    #[test]
    fn membership_examples() {
        let s1 = cone_yzt();
        assert!(s1.member(&m("y*t[1]*t[2]")).unwrap());
        assert!(!s1.member(&m("t[1]")).unwrap());
        let s2 = support_yzxt();
        assert!(!s2.member(&m("T[1]*X[2]")).unwrap());
        assert!(s2.member(&m("T[2]*X[2]")).unwrap());
        assert!(s2.member(&m("Z*X[7]")).unwrap());
        assert!(!s2.member(&m("Z")).unwrap());
        assert!(s1.member(&m("w")).is_err());
    }

    #[test]
    fn one_is_a_member() {
        for s in [free_yz(), cone_yzt(), support_yzxt()] {
            assert!(s.contains(&Monomial::one()));
        }
    }

    #[test]
    fn closure_examples() {
        assert!(cone_yzt().closure_check(100, 0).is_exact());
        assert!(support_yzxt().closure_check(100, 0).is_exact());
        // deg_y != 2 fails: y * y = y^2.
        let bad = MonoidSpec::new(
            &["y", "z"],
            &[],
            vec![
                MonoidRule::NonNegative,
                MonoidRule::DegreeExcludes { functional: DegreeFunctional::scalars(&["y"]), excluded: vec![2] },
            ],
        )
        .unwrap();
        match bad.closure_check(10_000, 0) {
            Verdict::Refuted { witness: Witness::Pair(u, v) } => {
                assert!(bad.contains(&u) && bad.contains(&v) && !bad.contains(&u.mul(&v)));
            }
            v => panic!("expected refutation, got {v}"),
        }
    }

    #[test]
    fn generator_examples() {
        let free = free_yz();
        assert_eq!(
            free.generators_up_to(3, 1).unwrap().into_iter().collect::<BTreeSet<_>>(),
            set(&["y", "z"])
        );
        let s1 = cone_yzt();
        assert_eq!(
            s1.generators_up_to(2, 1).unwrap().into_iter().collect::<BTreeSet<_>>(),
            set(&["y", "z", "y*t[1]", "z*t[1]"])
        );
        let g2: BTreeSet<_> = support_yzxt().generators_up_to(2, 1).unwrap().into_iter().collect();
        for want in ["Y", "X[1]", "Z*X[1]", "T[1]*Y", "T[1]*X[1]"] {
            assert!(g2.contains(&m(want)), "{want}");
        }
        assert!(!g2.contains(&m("Z")) && !g2.contains(&m("T[1]")));
        assert!(free.generators_up_to(0, 1).is_err());
    }

    #[test]
    fn integral_closure_examples() {
        assert!(support_yzxt().is_integrally_closed(Bounds::default()).is_exact());
        assert!(cone_yzt().is_integrally_closed(Bounds::default()).is_exact());
        let gap = MonoidSpec::new(
            &["y"],
            &[],
            vec![
                MonoidRule::NonNegative,
                MonoidRule::DegreeExcludes { functional: DegreeFunctional::scalars(&["y"]), excluded: vec![1] },
            ],
        )
        .unwrap();
        assert_eq!(gap.is_integrally_closed(Bounds::new(4, 1)), Verdict::refuted_by(m("y")));
    }

    #[test]
    fn complete_integral_closure_examples() {
        let b = Bounds::default();
        assert!(cone_yzt().is_completely_integrally_closed(b).is_exact());
        assert!(free_yz().is_completely_integrally_closed(b).is_exact());
        // X[1] Z^m is a member for every m while Z is not.
        match support_yzxt().is_completely_integrally_closed(b) {
            Verdict::Refuted { witness: Witness::Pair(u, q) } => {
                assert_eq!(q, m("Z"));
                assert!(u.support().any(|k| k.family() == Some("X")));
            }
            v => panic!("unexpected {v}"),
        }
    }

    #[test]
    fn lattice_precondition() {
        assert!(cone_yzt().check_lattice(3).is_ok());
        assert!(support_yzxt().check_lattice(3).is_ok());
        // y never occurs in S, so y is not a quotient of members.
        let dead = MonoidSpec::new(
            &["y", "z"],
            &[],
            vec![
                MonoidRule::NonNegative,
                MonoidRule::DegreeExcludes { functional: DegreeFunctional::scalars(&["y"]), excluded: vec![1, 2, 3] },
            ],
        )
        .unwrap();
        assert!(dead.check_lattice(1).is_err());
    }

    #[test]
    fn nonunits_of_the_support_monoid_meet_x_or_y() {
        let s2 = support_yzxt();
        let target = DegreeFunctional::new(vec![
            Selector::Scalar(Arc::from("Y")),
            Selector::Family(Arc::from("X"), IndexRange::Any),
        ]);
        assert!(s2.nonunits_meet(&target));
        assert!(!s2.nonunits_meet(&all_x()));
        let s1 = cone_yzt();
        assert!(s1.nonunits_meet(&DegreeFunctional::scalars(&["y", "z"])));
    }

    #[test]
    fn validation_rejects_unknown_names() {
        let r = MonoidSpec::new(
            &["y"],
            &[],
            vec![MonoidRule::LinearDegree { lhs: DegreeFunctional::scalars(&["y"]), family: Arc::from("t") }],
        );
        assert!(r.is_err());
        assert!(MonoidSpec::new(&["y", "y"], &[], vec![]).is_err());
    }
}
