//! The polynomial ring `R[X]`: contents, extended ideals and uppers to zero.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{colon, colon_r, subset_up_to, FracIdeal};
use crate::monoid::MonoidSpec;
use crate::monomial::Monomial;
use crate::poly::{LinComb, RingPoly};
use crate::star::is_v_invertible;
use crate::verdict::{Bounds, Verdict, Witness};

/// `c(f)`, for polynomials whose coefficients are single terms.
pub fn content(spec: &MonoidSpec, f: &RingPoly) -> Result<FracIdeal> {
    if f.is_zero() {
        return Err(Error::Input("content of the zero polynomial".into()));
    }
    let mut gens = Vec::new();
    for (k, c) in f.coeffs() {
        let (m, _) = c
            .as_term()
            .ok_or_else(|| Error::Unsupported(format!("coefficient of X^{k} in `{f}` is not a monomial")))?;
        gens.push(m.clone());
    }
    FracIdeal::fingen(spec, gens)
}

/// `I[X]`: polynomials whose coefficients have all their monomials in `I`.
#[derive(Clone, PartialEq, Debug)]
pub struct ExtendedIdeal {
    pub base: FracIdeal,
}

impl ExtendedIdeal {
    pub fn new(base: FracIdeal) -> Self {
        ExtendedIdeal { base }
    }

    pub fn contains(&self, spec: &MonoidSpec, g: &RingPoly) -> bool {
        g.monomials().all(|m| self.base.contains(spec, m))
    }
}

/// `fK[X] ∩ R[X]`, held in the product form `f·(R : c(f))[X]`, which is
/// valid because the ambient ring is integrally closed.
#[derive(Clone, PartialEq, Debug)]
pub struct UpperToZero {
    pub f: RingPoly,
    pub content: FracIdeal,
    /// `(R : c(f))`, exact since `c(f)` is finitely generated.
    pub dual_content: FracIdeal,
}

impl UpperToZero {
    /// `integrally_closed` is the monoid engine's verdict for `S`; only a
    /// proof is accepted.
    pub fn new(spec: &MonoidSpec, f: RingPoly, integrally_closed: &Verdict) -> Result<Self> {
        if !integrally_closed.is_proved() {
            return Err(Error::Precondition(format!(
                "product form needs an integrally closed ring, got: {integrally_closed}"
            )));
        }
        if f.degree().unwrap_or(0) == 0 {
            return Err(Error::Input(format!("`{f}` is constant; an upper to zero needs a nonconstant polynomial")));
        }
        let content = content(spec, &f)?;
        let (dual_content, e) = colon_r(spec, &content, Bounds::default());
        debug_assert!(e.is_exact());
        Ok(UpperToZero { f, content, dual_content })
    }

    /// `g ∈ P`: `f` divides `g` over the Laurent coefficients and every
    /// monomial of the quotient lies in `(R : c(f))`.
    pub fn member(&self, spec: &MonoidSpec, g: &RingPoly) -> Result<bool> {
        if g.is_zero() {
            return Ok(true);
        }
        let (q, r) = g.div_rem(&self.f)?;
        Ok(r.is_zero() && q.monomials().all(|m| self.dual_content.contains(spec, m)))
    }

    /// `f·h` for a polynomial `h` with coefficients in `(R : c(f))`.
    pub fn element(&self, h: &RingPoly) -> RingPoly {
        self.f.mul(h)
    }

    /// Members `f·h` with `h` a single term `w·X^k`, `w` over the bounded
    /// members of `(R : c(f))` and `k <= 1`.
    pub fn sample(&self, spec: &MonoidSpec, bounds: Bounds) -> Vec<RingPoly> {
        let ws = self.dual_content.members_within(spec, bounds).unwrap_or_default();
        ws.iter()
            .flat_map(|w| (0..=1).map(move |k| RingPoly::term(w.clone(), k)))
            .map(|h| self.element(&h))
            .collect()
    }

    /// `P ⊆ J[X]`. Every coefficient of `f·h` is a sum of terms `a·w` with
    /// `a` a coefficient monomial of `f` and `w ∈ (R : c(f))`, so it is
    /// enough that `a·(R : c(f)) ⊆ J` for each `a`.
    pub fn subset_of_extension(&self, spec: &MonoidSpec, j: &FracIdeal, bounds: Bounds) -> Verdict {
        let mut out = Verdict::exact();
        for a in self.content.gens().unwrap_or_default() {
            let target = FracIdeal::Constraint(colon(j, std::slice::from_ref(a)).expect("nonempty"));
            let v = subset_up_to(spec, &self.dual_content, &target, bounds);
            out = out.meet(match v {
                Verdict::Refuted { witness: Witness::Monomial(w) } => {
                    let g = self.element(&RingPoly::monomial(w.clone()));
                    if ExtendedIdeal::new(j.clone()).contains(spec, &g) {
                        Verdict::inconclusive(format!("a*{w} outside J but cancelled in f*{w}"))
                    } else {
                        Verdict::refuted(Witness::Poly(g.to_string()))
                    }
                }
                v => v,
            });
        }
        out
    }
}

/// Verdicts for the divisorial-upper-to-zero criterion: such an upper is
/// maximal divisorial exactly when it is v-invertible, and that reduces to
/// v-invertibility of the content.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct UpperDivReport {
    pub divisorial: Verdict,
    pub v_invertible: Verdict,
    /// `g/f ∈ (R[X] : P)` and `g/f ∉ (P : P)` for the coefficient `g`.
    pub proof_witness: Verdict,
    pub witness_coefficient: Option<Monomial>,
    pub maximal_divisorial: Verdict,
}

pub fn upperdiv_check(spec: &MonoidSpec, p: &UpperToZero, bounds: Bounds) -> Result<UpperDivReport> {
    // (R : c(f)) is an exact colon, so the product form is exact and P is
    // divisorial.
    let divisorial = Verdict::exact();
    let v_invertible = is_v_invertible(spec, &p.content, bounds);
    // g ∈ c(f) gives (g/f)·f·h = g·h ∈ R[X] for h ∈ (R:c(f))[X]; and
    // (g/f)·f = g, a nonzero constant, never lies in P.
    let mut proof_witness = Verdict::inconclusive("no coefficient outside P");
    let mut witness_coefficient = None;
    for g in p.content.gens().unwrap_or_default() {
        let gp = RingPoly::constant(LinComb::monomial(g.clone()));
        if !p.member(spec, &gp)? && p.member(spec, &p.f)? {
            proof_witness = Verdict::exact();
            witness_coefficient = Some(g.clone());
            break;
        }
    }
    let maximal_divisorial = match &v_invertible {
        Verdict::Refuted { .. } => Verdict::refuted(Witness::Check("divisorial upper to zero that is not v-invertible".into())),
        v => divisorial.clone().meet(v.clone()).meet(proof_witness.clone()),
    };
    Ok(UpperDivReport { divisorial, v_invertible, proof_witness, witness_coefficient, maximal_divisorial })
}

/// v-finiteness of an upper to zero is not decided here: the only exact
/// information is the product form, which says nothing about finite
/// subideals of `(R : c(f))[X]`.
pub fn upper_is_v_finite(p: &UpperToZero, bounds: Bounds) -> Verdict {
    Verdict::inconclusive(format!("no finite-subideal search for {} in R[X], {bounds}", p.f))
}
