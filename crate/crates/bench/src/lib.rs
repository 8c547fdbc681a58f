//! Shared fixtures for the benchmarks.

use staride_core::monoid::catalog;
use staride_core::{Clause, ConstraintIdeal, DegreeFunctional, FracIdeal, Monomial, MonoidSpec};

/// The 40 monomial ideals of `k[y,z]` with at most three generators of
/// degree at most three.
pub fn small_ideals() -> (MonoidSpec, Vec<FracIdeal>) {
    let spec = catalog::free_yz();
    let ideals = staride_core::suites::fingen_samples(&spec, 3, 3);
    (spec, ideals)
}

/// `R ∩ {deg(y, z) >= 1}` in the cone ring, certified by `t`.
pub fn cone_q() -> (MonoidSpec, FracIdeal) {
    let clauses = vec![
        Clause::Shift(Monomial::one()),
        Clause::Degree { functional: DegreeFunctional::scalars(&["y", "z"]), at_least: 1 },
    ];
    (catalog::cone_yzt(), FracIdeal::Constraint(ConstraintIdeal::new(clauses).unwrap().with_cert_family("t")))
}
