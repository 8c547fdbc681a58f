//! Monomial ideals of semigroup rings `k[S]` and the star operations on them.

pub mod classify;
pub mod dsl;
pub mod entail;
pub mod error;
pub mod harness;
pub mod ideal;
mod memo;
pub mod suites;
pub mod monoid;
pub mod monomial;
pub mod poly;
pub mod polyext;
pub mod star;
pub mod verdict;

pub use error::{Error, Result};
pub use ideal::{Clause, ConstraintIdeal, Exactness, FracIdeal};
pub use monoid::{MonoidRule, MonoidSpec, Trigger, WitnessSel};
pub use monomial::{DegreeFunctional, IndexRange, Monomial, Selector, VarKey};
pub use verdict::{Bounds, Scope, Verdict, Witness};
