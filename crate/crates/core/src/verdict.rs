//! Three-valued results for semi-decidable predicates.

use std::fmt;

use serde::Serialize;

use crate::monomial::Monomial;

/// Search limits shared by every bounded procedure.
///
/// `degree` bounds the total degree of enumerated monomials (measured above
/// the lower bound of the set being enumerated); `window` is the largest
/// family index used when enumerating. Generator extraction for dual
/// (colon) tests uses one extra family index so that a candidate with
/// indices up to `window` always meets a strictly larger index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Bounds {
    pub degree: u32,
    pub window: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { degree: 8, window: 3 }
    }
}

impl Bounds {
    pub fn new(degree: u32, window: u32) -> Self {
        Bounds { degree, window }
    }

    /// Degree used when extracting generators of an ideal to approximate
    /// its dual.
    pub fn gen_degree(&self) -> u32 {
        self.degree.div_ceil(2).max(1)
    }

    pub fn gen_window(&self) -> u32 {
        self.window + 1
    }

    /// Degree of the monomial enlargements `P + mR` tested for maximality.
    pub fn enlargement_degree(&self) -> u32 {
        self.degree.saturating_sub(2).max(1)
    }
}

impl fmt::Display for Bounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "degree<={}, window<={}", self.degree, self.window)
    }
}

/// How much of a claim has actually been established.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    Exact,
    WithinBounds(Bounds),
}

/// A re-checkable reason for a refutation.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Witness {
    Monomial(Monomial),
    Pair(Monomial, Monomial),
    Poly(String),
    /// A named sub-check that failed.
    Check(String),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Monomial(m) => write!(f, "{m}"),
            Witness::Pair(a, b) => write!(f, "({a}, {b})"),
            Witness::Poly(p) => f.write_str(p),
            Witness::Check(c) => f.write_str(c),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Proved { scope: Scope },
    Refuted { witness: Witness },
    Inconclusive { bound: String },
}

impl Verdict {
    pub fn exact() -> Self {
        Verdict::Proved { scope: Scope::Exact }
    }

    pub fn within(bounds: Bounds) -> Self {
        Verdict::Proved { scope: Scope::WithinBounds(bounds) }
    }

    pub fn refuted(witness: Witness) -> Self {
        Verdict::Refuted { witness }
    }

    pub fn refuted_by(m: Monomial) -> Self {
        Verdict::Refuted { witness: Witness::Monomial(m) }
    }

    pub fn inconclusive(bound: impl Into<String>) -> Self {
        Verdict::Inconclusive { bound: bound.into() }
    }

    pub fn is_proved(&self) -> bool {
        matches!(self, Verdict::Proved { .. })
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Verdict::Proved { scope: Scope::Exact })
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, Verdict::Refuted { .. })
    }

    pub fn is_inconclusive(&self) -> bool {
        matches!(self, Verdict::Inconclusive { .. })
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Refuted { witness } => Some(witness),
            _ => None,
        }
    }

    fn rank(&self) -> u8 {
        match self {
            Verdict::Refuted { .. } => 0,
            Verdict::Inconclusive { .. } => 1,
            Verdict::Proved { scope: Scope::WithinBounds(_) } => 2,
            Verdict::Proved { scope: Scope::Exact } => 3,
        }
    }

    /// Conjunction. Refuted dominates, then Inconclusive, then bounded
    /// proofs, then exact proofs; the left operand wins ties.
    pub fn meet(self, other: Verdict) -> Verdict {
        if other.rank() < self.rank() {
            other
        } else {
            self
        }
    }

    /// Downgrades an exact proof to a bounded one.
    pub fn bounded(self, bounds: Bounds) -> Verdict {
        match self {
            Verdict::Proved { scope: Scope::Exact } => Verdict::within(bounds),
            v => v,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Proved { scope: Scope::Exact } => "proved",
            Verdict::Proved { .. } => "proved-within-bounds",
            Verdict::Refuted { .. } => "refuted",
            Verdict::Inconclusive { .. } => "inconclusive",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Proved { scope: Scope::Exact } => f.write_str("proved"),
            Verdict::Proved { scope: Scope::WithinBounds(b) } => {
                write!(f, "proved within bounds ({b})")
            }
            Verdict::Refuted { witness } => write!(f, "refuted by {witness}"),
            Verdict::Inconclusive { bound } => write!(f, "inconclusive ({bound})"),
        }
    }
}

/// Meet of a sequence; the empty conjunction is an exact proof.
pub fn meet_all<I: IntoIterator<Item = Verdict>>(verdicts: I) -> Verdict {
    verdicts.into_iter().fold(Verdict::exact(), Verdict::meet)
}
