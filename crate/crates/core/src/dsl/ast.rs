//! Parsed scenarios. Nodes own all their data; nothing borrows the source.

use crate::monoid::MonoidSpec;
use crate::monomial::{DegreeFunctional, Monomial};
use crate::poly::RingPoly;
use crate::verdict::Bounds;

use super::SourceSpan;

#[derive(Clone, PartialEq, Debug)]
pub struct Scenario {
    pub name: String,
    pub file: String,
    pub spec: MonoidSpec,
    /// Name of the polynomial indeterminate, if the scenario uses `R[X]`.
    pub indeterminate: Option<String>,
    pub bounds: Option<Bounds>,
    pub items: Vec<Item>,
}

impl Scenario {
    pub fn decls(&self) -> impl Iterator<Item = &Decl> {
        self.items.iter().filter_map(|i| match i {
            Item::Decl(d) => Some(d),
            _ => None,
        })
    }

    pub fn assertions(&self) -> impl Iterator<Item = &Assertion> {
        self.items.iter().filter_map(|i| match i {
            Item::Assert(a) => Some(a),
            _ => None,
        })
    }

    pub fn fixtures(&self) -> impl Iterator<Item = &str> {
        self.items.iter().filter_map(|i| match i {
            Item::Fixture(n, _) => Some(n.as_str()),
            _ => None,
        })
    }
}

/// Declarations, fixtures and assertions in source order.
#[derive(Clone, PartialEq, Debug)]
pub enum Item {
    Decl(Decl),
    Fixture(String, SourceSpan),
    Assert(Assertion),
}

#[derive(Clone, PartialEq, Debug)]
pub struct Decl {
    pub name: String,
    pub value: DeclValue,
    pub span: SourceSpan,
}

#[derive(Clone, PartialEq, Debug)]
pub enum DeclValue {
    Ideal(IdealExpr),
    Poly(RingPoly),
    /// `u2z(f)`: the upper to zero `fK[X] ∩ R[X]`.
    Upper(String),
}

#[derive(Clone, PartialEq, Debug)]
pub enum IdealExpr {
    Ring,
    Gens(Vec<Monomial>),
    /// Atoms intersected with the rest of an `&` chain.
    Atoms(Vec<Atom>),
    Adjoin(String),
    /// `(a : b)`.
    Colon(Box<IdealExpr>, Box<IdealExpr>),
    Content(String),
    Extend(String),
    Name(String),
    Sum(Box<IdealExpr>, Box<IdealExpr>),
    Product(Box<IdealExpr>, Box<IdealExpr>),
    /// `a & b & ...`, optionally naming a certificate family.
    Meet(Vec<IdealExpr>, Option<String>),
}

#[derive(Clone, PartialEq, Debug)]
pub enum Atom {
    Degree(DegreeFunctional, i64),
    Occurs(DegreeFunctional),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Expected {
    Proved,
    Refuted,
    Inconclusive,
    /// Refuted or inconclusive.
    Unproved,
}

impl Expected {
    pub fn keyword(&self) -> &'static str {
        match self {
            Expected::Proved => "proved",
            Expected::Refuted => "refuted",
            Expected::Inconclusive => "inconclusive",
            Expected::Unproved => "unproved",
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub enum Arg {
    Name(String),
    /// A ring element: a monomial, or a polynomial in the indeterminate.
    Elem(RingPoly),
}

#[derive(Clone, PartialEq, Debug)]
pub struct Assertion {
    pub predicate: String,
    pub args: Vec<Arg>,
    pub expected: Expected,
    /// Optional witness the refutation must be able to exhibit.
    pub witness: Option<RingPoly>,
    pub step: String,
    pub span: SourceSpan,
}

/// Value kinds, for type checking assertion arguments.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Kind {
    Ideal,
    Extended,
    Upper,
    Poly,
}

impl Kind {
    pub fn describe(&self) -> &'static str {
        match self {
            Kind::Ideal => "ideal",
            Kind::Extended => "extended ideal",
            Kind::Upper => "upper to zero",
            Kind::Poly => "polynomial",
        }
    }
}
