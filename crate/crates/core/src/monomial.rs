//! Laurent monomials over a lazily infinite set of indeterminates.
//!
//! An indeterminate is either a named scalar (`y`) or a member of an
//! indexed family (`t[3]`). Families are countably infinite; nothing in this
//! module ever enumerates them, and [`fresh_index`] always finds an unused
//! index.

use std::cmp::Ordering;
use std::collections::btree_map::{self, BTreeMap};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::Error;

/// A single indeterminate.
///
/// Ordering: scalars before indexed variables; scalars by name; indexed
/// variables by family name, then index.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum VarKey {
    Scalar(Arc<str>),
    Indexed(Arc<str>, u32),
}

impl VarKey {
    pub fn scalar(name: &str) -> Self {
        VarKey::Scalar(Arc::from(name))
    }

    pub fn indexed(family: &str, index: u32) -> Self {
        assert!(index >= 1, "family indices start at 1");
        VarKey::Indexed(Arc::from(family), index)
    }

    pub fn family(&self) -> Option<&str> {
        match self {
            VarKey::Indexed(f, _) => Some(f),
            VarKey::Scalar(_) => None,
        }
    }

    pub fn index(&self) -> Option<u32> {
        match self {
            VarKey::Indexed(_, n) => Some(*n),
            VarKey::Scalar(_) => None,
        }
    }
}

impl Ord for VarKey {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (VarKey::Scalar(a), VarKey::Scalar(b)) => a.cmp(b),
            (VarKey::Scalar(_), VarKey::Indexed(..)) => Ordering::Less,
            (VarKey::Indexed(..), VarKey::Scalar(_)) => Ordering::Greater,
            (VarKey::Indexed(fa, ia), VarKey::Indexed(fb, ib)) => fa.cmp(fb).then(ia.cmp(ib)),
        }
    }
}

impl PartialOrd for VarKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VarKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarKey::Scalar(name) => f.write_str(name),
            VarKey::Indexed(family, n) => write!(f, "{family}[{n}]"),
        }
    }
}

/// A Laurent monomial stored as a finite-support exponent vector.
///
/// Zero exponents are never stored, so derived equality and hashing are
/// entry-wise.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Monomial {
    exps: BTreeMap<VarKey, i64>,
}

impl Monomial {
    /// The empty vector, i.e. the monomial `1`.
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(key: VarKey) -> Self {
        Monomial::from_pairs([(key, 1)])
    }

    pub fn from_pairs<I: IntoIterator<Item = (VarKey, i64)>>(pairs: I) -> Self {
        let mut m = Monomial::one();
        for (k, e) in pairs {
            m.add_exp(k, e);
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exp(&self, key: &VarKey) -> i64 {
        self.exps.get(key).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, VarKey, i64> {
        self.exps.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &VarKey> {
        self.exps.keys()
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    /// Adds `e` to the exponent of `key`, dropping the entry if it cancels.
    pub fn add_exp(&mut self, key: VarKey, e: i64) {
        if e == 0 {
            return;
        }
        match self.exps.entry(key) {
            btree_map::Entry::Vacant(v) => {
                v.insert(e);
            }
            btree_map::Entry::Occupied(mut o) => {
                let s = o.get().checked_add(e).expect("exponent overflow");
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Product of Laurent monomials (entry-wise sum of exponents).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (big, small) = if self.len() >= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = big.clone();
        for (k, e) in small.iter() {
            out.add_exp(k.clone(), *e);
        }
        out
    }

    pub fn inv(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|(k, e)| (k.clone(), -e)).collect(),
        }
    }

    /// `self / other`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        let mut out = self.clone();
        for (k, e) in other.iter() {
            out.add_exp(k.clone(), -e);
        }
        out
    }

    pub fn pow(&self, n: i64) -> Monomial {
        if n == 0 {
            return Monomial::one();
        }
        Monomial {
            exps: self
                .exps
                .iter()
                .map(|(k, e)| (k.clone(), e.checked_mul(n).expect("exponent overflow")))
                .collect(),
        }
    }

    /// Sum of all exponents.
    pub fn total_degree(&self) -> i64 {
        self.exps.values().sum()
    }

    /// Sum of absolute values of all exponents.
    pub fn l1_norm(&self) -> i64 {
        self.exps.values().map(|e| e.abs()).sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.exps.values().all(|&e| e > 0)
    }

    /// Component-wise `self >= other`.
    pub fn dominates(&self, other: &Monomial) -> bool {
        self.div(other).is_nonnegative()
    }

    /// Component-wise maximum.
    pub fn join(&self, other: &Monomial) -> Monomial {
        let keys: BTreeSet<&VarKey> = self.support().chain(other.support()).collect();
        Monomial::from_pairs(
            keys.into_iter()
                .map(|k| (k.clone(), self.exp(k).max(other.exp(k)))),
        )
    }

    /// Component-wise minimum.
    pub fn meet(&self, other: &Monomial) -> Monomial {
        let keys: BTreeSet<&VarKey> = self.support().chain(other.support()).collect();
        Monomial::from_pairs(
            keys.into_iter()
                .map(|k| (k.clone(), self.exp(k).min(other.exp(k)))),
        )
    }

    /// Largest index of `family` occurring in this monomial.
    pub fn max_index(&self, family: &str) -> Option<u32> {
        self.exps
            .keys()
            .filter(|k| k.family() == Some(family))
            .filter_map(VarKey::index)
            .max()
    }

    /// Largest family index of any family occurring.
    pub fn max_any_index(&self) -> Option<u32> {
        self.exps.keys().filter_map(VarKey::index).max()
    }

    /// Graded ordering: total degree, then lexicographic on the sorted
    /// entries. Used to make enumerations and reports deterministic.
    pub fn graded_cmp(&self, other: &Monomial) -> Ordering {
        self.l1_norm()
            .cmp(&other.l1_norm())
            .then_with(|| self.exps.iter().cmp(other.exps.iter()))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.graded_cmp(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        for (i, (k, e)) in self.exps.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{k}")?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Monomial {
    type Err = Error;

    /// Parses the textual syntax `y*z*t[1]^2`, `y^-1`, `1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |msg: &str| Error::Input(format!("bad monomial `{s}`: {msg}"));
        let text = s.trim();
        if text == "1" {
            return Ok(Monomial::one());
        }
        if text.is_empty() {
            return Err(bad("empty"));
        }
        let mut m = Monomial::one();
        for factor in text.split('*') {
            let factor = factor.trim();
            let (base, exp) = match factor.split_once('^') {
                Some((b, e)) => (
                    b.trim(),
                    e.trim().parse::<i64>().map_err(|_| bad("bad exponent"))?,
                ),
                None => (factor, 1),
            };
            let key = parse_var(base).ok_or_else(|| bad("bad variable"))?;
            m.add_exp(key, exp);
        }
        Ok(m)
    }
}

fn parse_var(s: &str) -> Option<VarKey> {
    let is_ident = |n: &str| {
        let mut cs = n.chars();
        matches!(cs.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
            && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
    };
    match s.split_once('[') {
        Some((fam, rest)) => {
            let idx = rest.strip_suffix(']')?.trim().parse::<u32>().ok()?;
            (is_ident(fam.trim()) && idx >= 1).then(|| VarKey::indexed(fam.trim(), idx))
        }
        None => is_ident(s).then(|| VarKey::scalar(s)),
    }
}

/// Smallest index `N >= 1` such that `family[N]` occurs in none of `used`.
pub fn fresh_index<'a, I>(family: &str, used: I) -> u32
where
    I: IntoIterator<Item = &'a Monomial>,
{
    let taken: BTreeSet<u32> = used
        .into_iter()
        .flat_map(|m| m.support())
        .filter(|k| k.family() == Some(family))
        .filter_map(VarKey::index)
        .collect();
    (1..).find(|n| !taken.contains(n)).expect("index space exhausted")
}

/// An index larger than every index, of any family, occurring in `used`. Rules such as `T[n] => exists X[<=n]` compare indices across
/// families, so a multiplier that must meet every occurring witness needs
/// this stronger freshness.
pub fn fresh_index_past<'a, I>(used: I) -> u32
where
    I: IntoIterator<Item = &'a Monomial>,
{
    let top = used.into_iter().filter_map(Monomial::max_any_index).max().unwrap_or(0);
    top + 1
}

/// Which indices of a family a selector covers.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum IndexRange {
    Any,
    Exactly(u32),
    AtMost(u32),
}

impl IndexRange {
    pub fn contains(&self, n: u32) -> bool {
        match *self {
            IndexRange::Any => true,
            IndexRange::Exactly(k) => n == k,
            IndexRange::AtMost(k) => n <= k,
        }
    }

    /// `self ⊆ other` as index sets.
    pub fn within(&self, other: &IndexRange) -> bool {
        match (*self, *other) {
            (_, IndexRange::Any) => true,
            (IndexRange::Any, _) => false,
            (IndexRange::Exactly(a), r) => r.contains(a),
            (IndexRange::AtMost(a), IndexRange::AtMost(b)) => a <= b,
            (IndexRange::AtMost(_), IndexRange::Exactly(_)) => false,
        }
    }
}

/// Selects a set of indeterminates.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Selector {
    /// Every indeterminate.
    All,
    Scalar(Arc<str>),
    Family(Arc<str>, IndexRange),
}

impl Selector {
    pub fn matches(&self, key: &VarKey) -> bool {
        match (self, key) {
            (Selector::All, _) => true,
            (Selector::Scalar(a), VarKey::Scalar(b)) => a == b,
            (Selector::Family(f, r), VarKey::Indexed(g, n)) => f == g && r.contains(*n),
            _ => false,
        }
    }

    /// `self ⊆ other` as sets of indeterminates.
    pub fn within(&self, other: &Selector) -> bool {
        match (self, other) {
            (_, Selector::All) => true,
            (Selector::All, _) => false,
            (Selector::Scalar(a), Selector::Scalar(b)) => a == b,
            (Selector::Family(f, r), Selector::Family(g, s)) => f == g && r.within(s),
            _ => false,
        }
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selector::All => f.write_str("*"),
            Selector::Scalar(n) => f.write_str(n),
            Selector::Family(fam, IndexRange::Any) => write!(f, "{fam}[*]"),
            Selector::Family(fam, IndexRange::Exactly(n)) => write!(f, "{fam}[{n}]"),
            Selector::Family(fam, IndexRange::AtMost(n)) => write!(f, "{fam}[<={n}]"),
        }
    }
}

/// A linear functional summing the exponents of the selected indeterminates.
/// An indeterminate matched by several selectors is counted once.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DegreeFunctional {
    pub selectors: Vec<Selector>,
}

impl DegreeFunctional {
    pub fn new(selectors: Vec<Selector>) -> Self {
        DegreeFunctional { selectors }
    }

    pub fn total() -> Self {
        DegreeFunctional::new(vec![Selector::All])
    }

    pub fn scalars(names: &[&str]) -> Self {
        DegreeFunctional::new(
            names
                .iter()
                .map(|n| Selector::Scalar(Arc::from(*n)))
                .collect(),
        )
    }

    pub fn selects(&self, key: &VarKey) -> bool {
        self.selectors.iter().any(|s| s.matches(key))
    }

    pub fn eval(&self, u: &Monomial) -> i64 {
        u.iter()
            .filter(|(k, _)| self.selects(k))
            .map(|(_, e)| *e)
            .sum()
    }

    /// Whether every indeterminate this functional selects is also selected
    /// by `other`.
    pub fn within(&self, other: &DegreeFunctional) -> bool {
        self.selectors
            .iter()
            .all(|s| other.selectors.iter().any(|o| s.within(o)))
    }

    /// Some selected indeterminate has a nonzero exponent.
    pub fn occurs_in(&self, u: &Monomial) -> bool {
        u.support().any(|k| self.selects(k))
    }
}

impl fmt::Display for DegreeFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.selectors.iter().map(|s| s.to_string()).collect();
        write!(f, "deg({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(m("y").mul(&m("z")), m("y*z"));
        assert_eq!(m("y").mul(&m("y^-1")), Monomial::one());
        assert!(m("y").mul(&m("y^-1")).is_empty());
        assert_eq!(m("y*t[1]").mul(&m("z*t[1]")), m("y*z*t[1]^2"));
    }

    #[test]
    fn degree_examples() {
        let yz = DegreeFunctional::scalars(&["y", "z"]);
        let t1 = DegreeFunctional::new(vec![Selector::Family(Arc::from("t"), IndexRange::Exactly(1))]);
        assert_eq!(yz.eval(&m("y*z*t[1]^2")), 2);
        assert_eq!(t1.eval(&m("y*z*t[1]^2")), 2);
        assert_eq!(yz.eval(&m("y^-1*z")), 0);
    }

    #[test]
    fn fresh_index_examples() {
        assert_eq!(fresh_index("t", &[m("y*t[1]"), m("z*t[2]")]), 3);
        assert_eq!(fresh_index("t", &[]), 1);
        assert_eq!(fresh_index("T", &[m("T[2]*X[1]")]), 1);
        assert_eq!(fresh_index_past(&[m("T[2]*X[1]")]), 3);
        assert_eq!(fresh_index_past(&[m("y^2"), m("z*t[1]*t[2]")]), 3);
    }

    #[test]
    fn printing_is_canonical() {
        assert_eq!(m("t[1]^2*z*y").to_string(), "y*z*t[1]^2");
        assert_eq!(m("y^-1").to_string(), "y^-1");
        assert_eq!(Monomial::one().to_string(), "1");
        assert_eq!(m("y*y^-1").to_string(), "1");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<Monomial>().is_err());
        assert!("y**z".parse::<Monomial>().is_err());
        assert!("t[0]".parse::<Monomial>().is_err());
        assert!("y^x".parse::<Monomial>().is_err());
    }

    #[test]
    fn varkey_order() {
        let mut keys = [
            VarKey::indexed("t", 2),
            VarKey::scalar("z"),
            VarKey::indexed("t", 1),
            VarKey::scalar("y"),
            VarKey::indexed("T", 9),
        ];
        keys.sort();
        let shown: Vec<String> = keys.iter().map(|k| k.to_string()).collect();
        assert_eq!(shown, ["y", "z", "T[9]", "t[1]", "t[2]"]);
    }
}
