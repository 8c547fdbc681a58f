//! The v- and t-operations and the predicates built on them.

use serde::Serialize;

use crate::entail;
use crate::error::{Error, Result};
use crate::ideal::{colon, colon_r, product, subset_search, subset_up_to, Clause, ConstraintIdeal, Exactness, FracIdeal};
use crate::memo::Memo;
use crate::monoid::MonoidSpec;
use crate::monomial::{fresh_index_past, Monomial, VarKey};
use crate::poly::RingPoly;
use crate::verdict::{meet_all, Bounds, Verdict, Witness};

/// `I_v = (R : (R : I))`.
pub fn v_closure(spec: &MonoidSpec, i: &FracIdeal, bounds: Bounds) -> (FracIdeal, Exactness) {
    let (c1, e1) = colon_r(spec, i, bounds);
    let (c2, e2) = colon_r(spec, &c1, bounds);
    (c2, e1.meet(e2))
}

/// `u ∈ I_v`, i.e. `u·(R : I) ⊆ R`.
pub fn v_member(spec: &MonoidSpec, i: &FracIdeal, u: &Monomial, bounds: Bounds) -> Verdict {
    if i.contains(spec, u) {
        return Verdict::exact();
    }
    let (c1, e) = colon_r(spec, i, bounds);
    let target = FracIdeal::Constraint(ConstraintIdeal::new(vec![Clause::Shift(u.clone())]).expect("bounded"));
    match subset_up_to(spec, &c1, &target, bounds) {
        // A member w of the approximate colon with u·w ∉ S only refutes
        // when the colon is exact.
        v @ Verdict::Refuted { .. } if !e.is_exact() => Verdict::inconclusive(format!("approximate dual separates {u}: {v}")),
        v => e.cap(v),
    }
}

/// `I` is divisorial, i.e. `I = I_v`.
pub fn is_divisorial(spec: &MonoidSpec, i: &FracIdeal, bounds: Bounds) -> Verdict {
    thread_local! {
        static TABLE: Memo<(MonoidSpec, FracIdeal, Bounds), Verdict> = Memo::new();
    }
    TABLE.with(|t| t.get_or((spec.clone(), i.clone(), bounds), || divisorial_uncached(spec, i, bounds)))
}

fn divisorial_uncached(spec: &MonoidSpec, i: &FracIdeal, bounds: Bounds) -> Verdict {
    if let FracIdeal::FinGen(g) = i {
        if g.len() == 1 {
            return Verdict::exact();
        }
    }
    if let FracIdeal::Constraint(c) = i {
        if c.is_colon_of_fingen() {
            // An intersection of principal fractional ideals.
            return Verdict::exact();
        }
    }
    let (c1, e1) = colon_r(spec, i, bounds);
    let gens = match c1.exact_gens(spec) {
        Some(g) => Some(g),
        None => c1.gens_within(spec, Bounds::new(bounds.gen_degree(), bounds.gen_window())),
    };
    let Some(gens) = gens.filter(|g| !g.is_empty()) else {
        return Verdict::inconclusive(format!("no generators of the dual within {bounds}"));
    };
    // D = (R : G) for G ⊆ (R : I) found above. D is an intersection of
    // principal fractional ideals, so I = D makes I divisorial.
    let d = FracIdeal::Constraint(colon(&FracIdeal::ring(), &gens).expect("nonempty"));
    let down = subset_up_to(spec, i, &d, bounds);
    let up = subset_up_to(spec, &d, i, bounds);
    if down.is_exact() && up.is_exact() {
        return Verdict::exact();
    }
    match (&down, &up) {
        (Verdict::Refuted { .. }, _) => Verdict::inconclusive(format!("approximate dual, {bounds}")),
        (_, Verdict::Refuted { witness: Witness::Monomial(u) }) => {
            // u ∈ D ∖ I; it lies in I_v when D ⊆ I_v, which holds for an
            // exact dual generated by G.
            if e1.is_exact() && c1.exact_gens(spec).is_some() {
                Verdict::refuted_by(u.clone())
            } else if !e1.is_exact() {
                // An approximate dual caps any membership proof, so u could
                // only be placed in I_v within bounds.
                Verdict::inconclusive(format!("{u} in D but the dual is approximate, {bounds}"))
            } else {
                v_member(spec, i, u, bounds).and_then_refute(u)
            }
        }
        _ => down.meet(up).bounded(bounds),
    }
}

trait RefuteOnProof {
    fn and_then_refute(self, u: &Monomial) -> Verdict;
}

impl RefuteOnProof for Verdict {
    /// A proof that `u ∈ I_v` (with `u ∉ I`) refutes divisoriality with the
    /// same scope caveat.
    fn and_then_refute(self, u: &Monomial) -> Verdict {
        match self {
            Verdict::Proved { scope: crate::verdict::Scope::Exact } => Verdict::refuted_by(u.clone()),
            Verdict::Proved { .. } => Verdict::inconclusive(format!("{u} in I_v only within bounds")),
            other => other,
        }
    }
}

/// `(R : I) = (I : I)`.
pub fn is_strong(spec: &MonoidSpec, i: &FracIdeal, bounds: Bounds) -> Verdict {
    if i.is_ring() {
        return Verdict::exact();
    }
    if let Some(small) = i.members_within(spec, Bounds::new(2, bounds.window)) {
        if entail::strong_by_shape(spec, i, &small) {
            return Verdict::exact();
        }
    }
    let (c1, e) = colon_r(spec, i, bounds);
    let ii = match i.exact_gens(spec) {
        Some(g) => FracIdeal::Constraint(colon(i, &g).expect("nonempty")),
        None => match i.gens_within(spec, Bounds::new(bounds.gen_degree(), bounds.gen_window())) {
            Some(g) if !g.is_empty() => FracIdeal::Constraint(colon(i, &g).expect("nonempty")),
            _ => return Verdict::inconclusive(format!("no generators within {bounds}")),
        },
    };
    let exact_ii = i.exact_gens(spec).is_some();
    match subset_up_to(spec, &c1, &ii, bounds) {
        v @ Verdict::Refuted { .. } if e.is_exact() && exact_ii => v,
        Verdict::Refuted { witness } => Verdict::inconclusive(format!("approximate colons separate at {witness}")),
        v => e.cap(v).bounded_unless(exact_ii, bounds),
    }
}

trait BoundedUnless {
    fn bounded_unless(self, exact: bool, bounds: Bounds) -> Verdict;
}

impl BoundedUnless for Verdict {
    fn bounded_unless(self, exact: bool, bounds: Bounds) -> Verdict {
        if exact {
            self
        } else {
            self.bounded(bounds)
        }
    }
}

/// `I (R : I) = R`. The product is a monomial module, so it contains 1
/// exactly when `g^-1 ∈ (R : I)` for some `g ∈ I`, i.e. `I = gR`.
pub fn is_invertible(spec: &MonoidSpec, i: &FracIdeal) -> Verdict {
    let Some(gens) = i.exact_gens(spec) else {
        return Verdict::inconclusive("not known to be finitely generated");
    };
    let principal = gens.iter().find(|g| gens.iter().all(|h| spec.contains(&h.div(g))));
    match (principal, gens.len()) {
        (Some(_), _) => Verdict::exact(),
        (None, 0) => Verdict::refuted(Witness::Check("zero ideal".into())),
        (None, _) => Verdict::refuted(Witness::Check(format!("no generator of {i} divides the others"))),
    }
}

/// `(I (R : I))_v = R`, i.e. `(R : I·(R : I)) ⊆ R`.
pub fn is_v_invertible(spec: &MonoidSpec, i: &FracIdeal, bounds: Bounds) -> Verdict {
    if let FracIdeal::FinGen(g) = i {
        if g.len() == 1 {
            return Verdict::exact();
        }
    }
    if i.is_ring() {
        return Verdict::exact();
    }
    if !i.contains(spec, &Monomial::one())
        && is_strong(spec, i, bounds).is_exact()
        && is_divisorial(spec, i, bounds).is_exact()
    {
        // (I(R:I))_v = (I(I:I))_v = I_v = I, a proper ideal.
        return Verdict::refuted(Witness::Check("proper divisorial and strong, so (I(R:I))_v = I".into()));
    }
    let gb = Bounds::new(bounds.gen_degree(), bounds.gen_window());
    let (c1, _) = colon_r(spec, i, bounds);
    let (ig, dual_gens_exact) = match (i.exact_gens(spec), c1.exact_gens(spec)) {
        (Some(a), Some(b)) => (a, b),
        (a, b) => {
            // Members of I and of (R:I) that are genuinely members: the
            // product generated by them lies inside I(R:I).
            let a = a.or_else(|| i.gens_within(spec, gb));
            let true_dual = match i.exact_gens(spec) {
                Some(_) => c1.gens_within(spec, gb),
                None => None,
            };
            match (a, b.or(true_dual)) {
                (Some(a), Some(b)) if !a.is_empty() && !b.is_empty() => (a, b),
                _ => return Verdict::inconclusive(format!("generators unavailable within {bounds}")),
            }
        }
    };
    let both_exact = i.exact_gens(spec).is_some() && c1.exact_gens(spec).is_some();
    let prod = match product(spec, &FracIdeal::FinGen(ig), &FracIdeal::FinGen(dual_gens_exact)) {
        Ok(p) => p,
        Err(e) => return Verdict::inconclusive(e.to_string()),
    };
    let (c, _) = colon_r(spec, &prod, bounds);
    // The product lies inside I(R:I), so its dual contains the true dual.
    match subset_up_to(spec, &c, &FracIdeal::ring(), bounds) {
        v @ Verdict::Refuted { .. } if both_exact => v,
        Verdict::Refuted { witness } => Verdict::inconclusive(format!("approximate product, dual element {witness}")),
        v => v,
    }
}

/// Some finite `F ⊆ I` has `(R : F) = (R : I)`.
pub fn is_v_finite(spec: &MonoidSpec, i: &FracIdeal, bounds: Bounds) -> Verdict {
    if let Some(g) = i.exact_gens(spec) {
        let _ = g;
        return Verdict::exact();
    }
    if i.is_ring() {
        return Verdict::exact();
    }
    let gb = Bounds::new(bounds.gen_degree(), bounds.gen_window());
    let Some(f) = i.gens_within(spec, gb).filter(|g| !g.is_empty()) else {
        return Verdict::inconclusive(format!("no finite subideal within {bounds}"));
    };
    let ff = FracIdeal::Constraint(colon(&FracIdeal::ring(), &f).expect("nonempty"));
    // Separators are members w of (R:F) with w·q ∉ S for some q ∈ I; both
    // are searched over the box plus one index per family past F.
    let extra: Vec<VarKey> = spec
        .families
        .iter()
        .map(|fam| VarKey::indexed(fam, fresh_index_past(f.iter()).max(gb.window + 1)))
        .collect();
    let (Some(duals), Some(sample)) = (ff.members_within_extra(spec, gb, &extra), i.members_within_extra(spec, gb, &extra)) else {
        return Verdict::inconclusive(format!("no lower bound for {i}"));
    };
    let separated = duals.iter().find(|w| sample.iter().any(|q| !spec.contains(&w.mul(q))));
    match separated {
        Some(w) => {
            let mut note = format!("no finite F within {bounds} has (R:F) = (R:I); {w} separates the largest sampled F");
            if let Some(fam) = i.cert_family() {
                note.push_str(&format!("; a fresh {fam}[N] separates every finite F"));
            }
            Verdict::inconclusive(note)
        }
        None => Verdict::within(bounds),
    }
}

/// `I` and `(R : I)` v-finite and `I` v-invertible.
pub fn is_t_invertible(spec: &MonoidSpec, i: &FracIdeal, bounds: Bounds) -> Verdict {
    let (c1, e) = colon_r(spec, i, bounds);
    let dual = if e.is_exact() {
        is_v_finite(spec, &c1, bounds)
    } else {
        Verdict::inconclusive(format!("dual only approximated within {bounds}"))
    };
    meet_all([is_v_invertible(spec, i, bounds), is_v_finite(spec, i, bounds), dual])
}

/// Evidence that `F_v ⊆ I`: `m ∉ R`, `m·F ⊆ R`, and `(R : m) ∩ R ⊆ I`.
///
/// `F` may hold polynomials in `X`; then the target is read as `I[X]`, and
/// the conditions are checked coefficient by coefficient.
#[derive(Clone, PartialEq, Debug)]
pub struct TIdealCertificate {
    pub f: Vec<RingPoly>,
    pub m: Monomial,
    pub target: FracIdeal,
}

#[derive(Serialize)]
struct CertView {
    f: Vec<String>,
    m: String,
    target: String,
}

impl Serialize for TIdealCertificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CertView {
            f: self.f.iter().map(|p| p.to_string()).collect(),
            m: self.m.to_string(),
            target: self.target.to_string(),
        }
        .serialize(s)
    }
}

/// `(R : m) ∩ R` as a constraint ideal.
fn annihilated_part(m: &Monomial) -> FracIdeal {
    FracIdeal::constraint(vec![Clause::Shift(Monomial::one()), Clause::Shift(m.clone())]).expect("bounded")
}

pub fn check_t_certificate(spec: &MonoidSpec, c: &TIdealCertificate, bounds: Bounds) -> Result<Verdict> {
    if c.f.is_empty() || c.f.iter().any(RingPoly::is_zero) {
        return Err(Error::Input("certificate needs a nonempty list of nonzero elements".into()));
    }
    spec.check_vars(&c.m)?;
    if spec.contains(&c.m) {
        return Ok(Verdict::refuted(Witness::Check(format!("multiplier {} lies in R", c.m))));
    }
    for a in c.f.iter().flat_map(|p| p.monomials()) {
        spec.check_vars(a)?;
        if !spec.contains(a) {
            return Ok(Verdict::refuted(Witness::Check(format!("{a} is not in R"))));
        }
        if !spec.contains(&a.mul(&c.m)) {
            return Ok(Verdict::refuted(Witness::Check(format!("{} * {a} is not in R", c.m))));
        }
    }
    let ann = annihilated_part(&c.m);
    if entail::subset(spec, &ann, &c.target) {
        return Ok(Verdict::exact());
    }
    Ok(subset_search(spec, &ann, &c.target, bounds))
}

/// Builds the certificate with a fresh member of the ideal's certificate
/// family and checks it.
pub fn auto_certify_t_ideal(spec: &MonoidSpec, i: &FracIdeal, f: &[RingPoly], bounds: Bounds) -> Result<TIdealCertificate> {
    let family = i
        .cert_family()
        .ok_or_else(|| Error::Precondition(format!("{i} declares no certificate family")))?;
    let n = fresh_index_past(f.iter().flat_map(|p| p.monomials()));
    let cert = TIdealCertificate { f: f.to_vec(), m: Monomial::var(VarKey::indexed(family, n)), target: i.clone() };
    match check_t_certificate(spec, &cert, bounds)? {
        Verdict::Proved { .. } => Ok(cert),
        v => Err(Error::Precondition(format!("certificate with {} does not validate: {v}", cert.m))),
    }
}

/// `I` is a t-ideal, via the fresh-multiplier argument made uniform in `F`:
/// for every finite `F ⊆ I` the family member past every index in `F`
/// multiplies `F` into `R`, and `(R : m) ∩ R ⊆ I` holds for every fresh `m`.
pub fn is_t_ideal(spec: &MonoidSpec, i: &FracIdeal, bounds: Bounds) -> Verdict {
    // A finitely generated ideal has I_t = I_v.
    if i.exact_gens(spec).is_some() {
        return is_divisorial(spec, i, bounds);
    }
    let lemma = match (i, i.cert_family()) {
        (FracIdeal::Constraint(c), Some(fam)) => uniform_certificate(spec, c, fam, bounds),
        _ => Verdict::inconclusive("no certificate family"),
    };
    if lemma.is_exact() {
        return lemma;
    }
    // Divisorial ideals are t-ideals; nothing else is concluded here.
    match is_divisorial(spec, i, bounds) {
        v if v.is_exact() => v,
        _ => lemma,
    }
}

fn uniform_certificate(spec: &MonoidSpec, c: &ConstraintIdeal, fam: &str, bounds: Bounds) -> Verdict {
    if !entail::fresh_shift_preserves(spec, c, fam) {
        return Verdict::inconclusive(format!("fresh {fam}[N] not shown to multiply I into R"));
    }
    // Indices beyond every index the ideal mentions behave alike.
    let n = fresh_index_past(c.clauses.iter().flat_map(clause_monomials)) + bounds.gen_window();
    let m = Monomial::var(VarKey::indexed(fam, n));
    if entail::subset(spec, &annihilated_part(&m), &FracIdeal::Constraint(c.clone())) {
        Verdict::exact()
    } else {
        Verdict::inconclusive(format!("(R:{m}) ∩ R ⊆ I not shown"))
    }
}

fn clause_monomials(c: &Clause) -> Vec<&Monomial> {
    match c {
        Clause::Shift(m) | Clause::Adjoin { shift: m, .. } | Clause::Occurs { shift: m, .. } | Clause::InIdeal { shift: m, .. } => vec![m],
        Clause::Degree { .. } => vec![],
    }
}

/// `u ∈ I_t`: proved by a finite `F ⊆ I` with `u ∈ F_v`; refuted when `I`
/// is shown to be a t-ideal and `u ∉ I`.
pub fn t_member(spec: &MonoidSpec, i: &FracIdeal, u: &Monomial, bounds: Bounds) -> Verdict {
    if i.contains(spec, u) {
        return Verdict::exact();
    }
    if i.exact_gens(spec).is_none() && is_t_ideal(spec, i, bounds).is_exact() {
        return Verdict::refuted_by(u.clone());
    }
    let f = i
        .exact_gens(spec)
        .or_else(|| i.gens_within(spec, Bounds::new(bounds.gen_degree(), bounds.gen_window())));
    if let Some(f) = f.filter(|g| !g.is_empty()) {
        let v = v_member(spec, &FracIdeal::FinGen(f), u, bounds);
        if v.is_proved() {
            return v;
        }
        if v.is_refuted() && i.exact_gens(spec).is_some() {
            // For finitely generated I, I_t = I_v.
            return v;
        }
    }
    Verdict::inconclusive(format!("no finite F within {bounds} puts {u} in F_v"))
}
