//! Primes, maximal divisorial ideals and witnesses against t-maximality.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::entail;
use crate::error::{Error, Result};
use crate::ideal::{colon_r, equal_up_to, subset_up_to, Clause, FracIdeal};
use crate::monoid::MonoidSpec;
use crate::monomial::Monomial;
use crate::poly::{LinComb, RingPoly};
use crate::polyext::{ExtendedIdeal, UpperToZero};
use crate::star::{auto_certify_t_ideal, is_divisorial, is_t_ideal, is_v_invertible, TIdealCertificate};
use crate::verdict::{Bounds, Verdict, Witness};

/// Refuses ideals with a member outside `R`.
fn require_integral(spec: &MonoidSpec, i: &FracIdeal, bounds: Bounds) -> Result<()> {
    match subset_up_to(spec, i, &FracIdeal::ring(), bounds) {
        Verdict::Refuted { witness } => Err(Error::Precondition(format!("{i} is not integral: {witness}"))),
        _ => Ok(()),
    }
}

pub fn is_prime(spec: &MonoidSpec, i: &FracIdeal, bounds: Bounds) -> Result<Verdict> {
    require_integral(spec, i, bounds)?;
    if i.contains(spec, &Monomial::one()) {
        return Ok(Verdict::refuted(Witness::Check("the unit ideal is not prime".into())));
    }
    if entail::prime_by_shape(spec, i) {
        return Ok(Verdict::exact());
    }
    // Monomial ideals of a polynomial ring: prime iff generated by variables.
    if let (true, Some(gens)) = (spec.is_free(), i.exact_gens(spec)) {
        if gens.iter().all(|g| g.total_degree() == 1) {
            return Ok(Verdict::exact());
        }
    }
    let half = Bounds::new(bounds.degree.div_ceil(2), bounds.window);
    let outside: Vec<Monomial> = std::iter::once(Monomial::one())
        .chain(spec.members_up_to(half.degree, half.window))
        .filter(|u| !i.contains(spec, u))
        .collect();
    for (a, u) in outside.iter().enumerate() {
        for v in &outside[a..] {
            if i.contains(spec, &u.mul(v)) {
                return Ok(Verdict::refuted(Witness::Pair(u.clone(), v.clone())));
            }
        }
    }
    Ok(Verdict::within(bounds))
}

/// `M = x^-1 R ∩ R` with `x ∈ (R : M) ∖ R`.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct MaxDivRepresentation {
    pub x: Monomial,
    pub verdict: Verdict,
}

/// `x^-1 R ∩ R` as a constraint ideal.
pub fn inverse_slice(x: &Monomial) -> FracIdeal {
    FracIdeal::constraint(vec![Clause::Shift(Monomial::one()), Clause::Shift(x.clone())]).expect("bounded")
}

fn proved_divisorial(spec: &MonoidSpec, m: &FracIdeal, bounds: Bounds) -> Result<Verdict> {
    let d = is_divisorial(spec, m, bounds);
    if !d.is_proved() {
        return Err(Error::Precondition(format!("{m} is not known to be divisorial: {d}")));
    }
    Ok(d)
}

/// `x ∈ (R : i)`, exactly when a lemma applies, otherwise within bounds.
pub fn in_dual(spec: &MonoidSpec, i: &FracIdeal, x: &Monomial, bounds: Bounds) -> Verdict {
    if entail::dual_contains(spec, &FracIdeal::principal(x.clone()), i) {
        return Verdict::exact();
    }
    let target = FracIdeal::constraint(vec![Clause::Shift(x.clone())]).expect("bounded");
    subset_up_to(spec, i, &target, bounds)
}

pub fn find_maxdiv_representation(spec: &MonoidSpec, m: &FracIdeal, bounds: Bounds) -> Result<Option<MaxDivRepresentation>> {
    proved_divisorial(spec, m, bounds)?;
    let (dual, _) = colon_r(spec, m, bounds);
    let candidates = dual
        .box_members(spec, Bounds::new(bounds.gen_degree(), bounds.window))
        .unwrap_or_default();
    for x in candidates.into_iter().filter(|x| !spec.contains(x)) {
        let member = in_dual(spec, m, &x, bounds);
        if !member.is_proved() {
            continue;
        }
        let eq = equal_up_to(spec, m, &inverse_slice(&x), bounds);
        if eq.is_proved() {
            return Ok(Some(MaxDivRepresentation { x, verdict: member.meet(eq) }));
        }
    }
    Ok(None)
}

/// `(R : P) = R + xR`, the hypothesis under which a prime divisorial `P`
/// is maximal divisorial.
pub fn check_prop_max_converse(spec: &MonoidSpec, p: &FracIdeal, x: &Monomial, bounds: Bounds) -> Result<Verdict> {
    if is_prime(spec, p, bounds)?.is_refuted() {
        return Err(Error::Precondition(format!("{p} is not prime")));
    }
    proved_divisorial(spec, p, bounds)?;
    let rx = FracIdeal::fingen(spec, vec![Monomial::one(), x.clone()])?;
    let up = if entail::dual_contains(spec, &rx, p) {
        Verdict::exact()
    } else {
        in_dual(spec, p, x, bounds)
    };
    let down = dual_within(spec, p, &rx, bounds);
    Ok(up.meet(down))
}

/// `(R : p) ⊆ target`. With an approximate dual, a separating element only
/// counts once it is shown to lie in the true dual.
pub fn dual_within(spec: &MonoidSpec, p: &FracIdeal, target: &FracIdeal, bounds: Bounds) -> Verdict {
    let (dual, e) = colon_r(spec, p, bounds);
    if e.is_exact() {
        return subset_up_to(spec, &dual, target, bounds);
    }
    let mut unverified = None;
    for w in dual.box_members(spec, bounds).unwrap_or_default() {
        if target.contains(spec, &w) {
            continue;
        }
        if entail::dual_contains(spec, &FracIdeal::principal(w.clone()), p) {
            return Verdict::refuted_by(w);
        }
        unverified.get_or_insert(w);
    }
    match unverified {
        Some(w) => Verdict::inconclusive(format!("{w} separates an approximate dual")),
        None => Verdict::within(bounds),
    }
}

/// Errors when `p` is refuted to be prime or divisorial; otherwise the
/// meet of both verdicts.
fn require_prime_divisorial(spec: &MonoidSpec, p: &FracIdeal, bounds: Bounds) -> Result<Verdict> {
    let prime = is_prime(spec, p, bounds)?;
    if prime.is_refuted() {
        return Err(Error::Precondition(format!("{p} is not prime: {prime}")));
    }
    let div = is_divisorial(spec, p, bounds);
    if div.is_refuted() {
        return Err(Error::Precondition(format!("{p} is not divisorial: {div}")));
    }
    Ok(prime.meet(div))
}

/// Maximal among proper divisorial ideals. Either `P` is v-invertible, or
/// every monomial enlargement `P + mR` (with `m ∈ R ∖ P` up to the
/// enlargement degree) has `(P + mR)_v = R`. Only monomial enlargements
/// are tested.
pub fn is_maximal_divisorial(spec: &MonoidSpec, p: &FracIdeal, bounds: Bounds) -> Result<Verdict> {
    let base = require_prime_divisorial(spec, p, bounds)?;
    let inv = is_v_invertible(spec, p, bounds);
    if inv.is_proved() {
        return Ok(base.meet(inv));
    }
    // (P + mR)_v = R iff (R : P) ∩ (R : m) ⊆ R. Candidates w for the left
    // side come from the approximate dual, which contains the true one.
    let (dual, e) = colon_r(spec, p, bounds);
    let outside: Vec<Monomial> = dual
        .box_members(spec, bounds)
        .unwrap_or_default()
        .into_iter()
        .filter(|w| !spec.contains(w))
        .collect();
    let ed = bounds.enlargement_degree();
    let enlargements = std::iter::once(Monomial::one())
        .chain(spec.members_up_to(ed, bounds.window))
        .filter(|m| !p.contains(spec, m));
    for m in enlargements {
        if m.is_one() {
            continue;
        }
        if let Some(w) = outside.iter().find(|w| spec.contains(&w.mul(&m))) {
            if e.is_exact() || entail::dual_contains(spec, &FracIdeal::principal(w.clone()), p) {
                return Ok(Verdict::refuted_by(m));
            }
            return Ok(Verdict::inconclusive(format!("{w} may lie in (R:P) ∩ (R:{m})")));
        }
    }
    Ok(base.meet(Verdict::within(Bounds::new(ed, bounds.window))))
}

/// A prime of `R` or an upper to zero in `R[X]`.
#[derive(Clone, Debug)]
pub enum PrimeIdeal {
    Ideal(FracIdeal),
    Upper(UpperToZero),
}

impl PrimeIdeal {
    fn contains(&self, spec: &MonoidSpec, g: &RingPoly) -> Result<bool> {
        match self {
            PrimeIdeal::Ideal(i) => Ok(g.degree() == Some(0) && g.monomials().all(|m| i.contains(spec, m))
                || g.is_zero()),
            PrimeIdeal::Upper(p) => p.member(spec, g),
        }
    }

    fn subset_of(&self, spec: &MonoidSpec, w: &FracIdeal, bounds: Bounds) -> Verdict {
        match self {
            PrimeIdeal::Ideal(i) => subset_up_to(spec, i, w, bounds),
            PrimeIdeal::Upper(p) => p.subset_of_extension(spec, w, bounds),
        }
    }
}

/// A proper t-ideal `W` (read as `W[X]` over the polynomial ring) with an
/// element `u ∈ W ∖ P`.
#[derive(Clone, Debug)]
pub struct NotTMaximalWitness {
    pub w: FracIdeal,
    pub u: RingPoly,
    pub polynomial: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TMaxReport {
    pub verdict: Verdict,
    pub checks: Vec<(String, Verdict)>,
    pub certificates: Vec<TIdealCertificate>,
}

/// Number of finite subsets of `W` certified by default.
pub const DEFAULT_CERT_SAMPLES: usize = 24;

/// Random finite subsets of `W` (or `W[X]`) drawn from bounded members.
pub fn sample_finite_subsets(
    spec: &MonoidSpec,
    w: &FracIdeal,
    polynomial: bool,
    bounds: Bounds,
    count: usize,
    seed: u64,
) -> Vec<Vec<RingPoly>> {
    let pool = w
        .box_members(spec, Bounds::new(bounds.gen_degree(), bounds.window))
        .unwrap_or_default();
    if pool.is_empty() {
        return Vec::new();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let size = rng.gen_range(1..=3);
            (0..size)
                .map(|_| {
                    if polynomial {
                        let terms = rng.gen_range(1..=3u32);
                        RingPoly::from_coeffs((0..terms).map(|k| {
                            let a = pool.choose(&mut rng).expect("nonempty").clone();
                            (k, LinComb::monomial(a))
                        }))
                    } else {
                        RingPoly::monomial(pool.choose(&mut rng).expect("nonempty").clone())
                    }
                })
                .collect()
        })
        .collect()
}

/// Shows `P` is not t-maximal: `P ⊊ W ⊊ R` with `W` a t-ideal.
pub fn refute_t_maximal(
    spec: &MonoidSpec,
    p: &PrimeIdeal,
    wit: &NotTMaximalWitness,
    bounds: Bounds,
    samples: usize,
    seed: u64,
) -> Result<TMaxReport> {
    let ext = ExtendedIdeal::new(wit.w.clone());
    let mut checks: Vec<(String, Verdict)> = Vec::new();
    let flag = |ok: bool, what: &str| {
        if ok {
            Verdict::exact()
        } else {
            Verdict::refuted(Witness::Check(what.to_string()))
        }
    };
    checks.push(("u in W".into(), flag(ext.contains(spec, &wit.u), "u is not in W")));
    checks.push(("u not in P".into(), flag(!p.contains(spec, &wit.u)?, "u lies in P")));
    checks.push(("1 not in W".into(), flag(!wit.w.contains(spec, &Monomial::one()), "W is not proper")));
    checks.push(("P in W".into(), p.subset_of(spec, &wit.w, bounds)));
    checks.push(("W is a t-ideal".into(), is_t_ideal(spec, &wit.w, bounds)));
    let mut certificates = Vec::new();
    let mut sampled = Verdict::exact();
    for f in sample_finite_subsets(spec, &wit.w, wit.polynomial, bounds, samples, seed) {
        match auto_certify_t_ideal(spec, &wit.w, &f, bounds) {
            Ok(c) => certificates.push(c),
            Err(e) => {
                sampled = Verdict::refuted(Witness::Check(e.to_string()));
                break;
            }
        }
    }
    if certificates.len() < samples && sampled.is_proved() {
        sampled = Verdict::inconclusive(format!("only {} finite subsets sampled", certificates.len()));
    }
    checks.push((format!("{samples} sampled certificates"), sampled));
    let verdict = checks.iter().fold(Verdict::exact(), |acc, (_, v)| acc.meet(v.clone()));
    Ok(TMaxReport { verdict, checks, certificates })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::catalog::*;
    use crate::monomial::DegreeFunctional;
    use crate::ideal::ConstraintIdeal;

    fn m(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    fn gens(spec: &MonoidSpec, v: &[&str]) -> FracIdeal {
        FracIdeal::fingen(spec, v.iter().map(|s| m(s)).collect()).unwrap()
    }

    fn p2() -> FracIdeal {
        FracIdeal::ring_with(vec![Clause::Occurs { selector: all_x(), shift: Monomial::one() }]).unwrap()
    }

    fn m2() -> FracIdeal {
        let c = ConstraintIdeal::new(vec![
            Clause::Shift(Monomial::one()),
            Clause::Degree { functional: DegreeFunctional::total(), at_least: 1 },
        ])
        .unwrap()
        .with_cert_family("T");
        FracIdeal::Constraint(c)
    }

    const B: Bounds = Bounds { degree: 6, window: 2 };

    #[test]
    fn primes() {
        let f = free_yz();
        assert!(is_prime(&f, &gens(&f, &["y"]), B).unwrap().is_exact());
        assert_eq!(
            is_prime(&f, &gens(&f, &["y^2"]), B).unwrap(),
            Verdict::refuted(Witness::Pair(m("y"), m("y")))
        );
        assert!(is_prime(&support_yzxt(), &m2(), B).unwrap().is_exact());
        assert!(is_prime(&f, &gens(&f, &["y^-1"]), B).is_err());
    }

    #[test]
    fn maxdiv_representations() {
        let s2 = support_yzxt();
        assert_eq!(find_maxdiv_representation(&s2, &p2(), B).unwrap().unwrap().x, m("Z"));
        let f = free_yz();
        assert_eq!(find_maxdiv_representation(&f, &gens(&f, &["y"]), B).unwrap().unwrap().x, m("y^-1"));
        assert!(find_maxdiv_representation(&f, &gens(&f, &["y", "z"]), B).is_err());
    }

    #[test]
    fn converse_of_max() {
        let f = free_yz();
        assert!(check_prop_max_converse(&f, &gens(&f, &["y"]), &m("y^-1"), B).unwrap().is_exact());
        let s2 = support_yzxt();
        assert_eq!(check_prop_max_converse(&s2, &p2(), &m("Z"), B).unwrap(), Verdict::refuted_by(m("Z^2")));
        assert!(check_prop_max_converse(&f, &gens(&f, &["y", "z"]), &m("y^-1"), B).is_err());
    }

    #[test]
    fn maximal_divisorial() {
        let f = free_yz();
        assert!(is_maximal_divisorial(&f, &gens(&f, &["y"]), B).unwrap().is_exact());
        assert!(is_maximal_divisorial(&support_yzxt(), &p2(), B).unwrap().is_proved());
        assert!(is_maximal_divisorial(&f, &gens(&f, &["y^2"]), B).is_err());
    }

    #[test]
    fn not_t_maximal_in_support_monoid() {
        let s2 = support_yzxt();
        let wit = NotTMaximalWitness { w: m2(), u: RingPoly::monomial(m("Y")), polynomial: false };
        let r = refute_t_maximal(&s2, &PrimeIdeal::Ideal(p2()), &wit, B, 20, 0).unwrap();
        assert!(r.verdict.is_exact(), "{:?}", r.checks);
        assert_eq!(r.certificates.len(), 20);
        let unit = NotTMaximalWitness { w: FracIdeal::ring(), ..wit };
        assert!(refute_t_maximal(&s2, &PrimeIdeal::Ideal(p2()), &unit, B, 5, 0).unwrap().verdict.is_refuted());
    }
}
