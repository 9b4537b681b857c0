//! Exact arithmetic for Mordell-Weil rank bounds in the pro-p tower of Fermat
//! curves `x^(p^n) + y^(p^n) + z^(p^n) = 0`.
//!
//! The crate covers:
//! - characters of `(Z/p^n Z)^2` and their orbits under scalar or matrix
//!   actions ([`character`], [`action`]);
//! - irreducible representations of `(Z/p^n Z)^2 ⋊ H` for abelian `H`, their
//!   fixed spaces, and the split by `B = ker((Z/p^n)^2 → (Z/p^(n-1))^2)` ([`rep`]);
//! - genera, Jacobian new parts and cyclotomic degrees along the tower ([`tower`]);
//! - the H^1 filtration bound and the assembled rank bounds ([`cohomology`]).
//!
//! All bound values are exact rationals.

pub mod action;
pub mod arith;
pub mod character;
pub mod cohomology;
pub mod error;
pub mod rational;
pub mod rep;
pub mod tower;

pub use action::{all_orbits, orbit_of, stabilizer_order, GaloisActionSpec, GroupElement, Orbit};
pub use character::{
    char_exact_order, is_trivial_on_b, p_adic_valuation, primitive_character_count, Character, PrimePower,
};
pub use cohomology::{
    bound_report, chabauty_check, fermat_rank_bound_asymptotic, fermat_rank_bound_exact, filtration_h1_bound,
    h1_level_from_infinity, iwasawa_h1_bound, prop_fnrank_bound, subquotient_h1_bound, theorem_main_bound,
    theorem_main_bound_rational, BoundKind, BoundReport, CohomParams, FiltrationData,
};
pub use error::{Error, Hypothesis, Result};
pub use rep::{
    enumerate_irreps, fixed_dim_bound, fixed_space_dim, new_part_fixed_bound, split_by_b, IrrepDatum, RepSpectrum,
};
pub use tower::{
    fermat_genus, field_degrees, rank_sum, sum_growth_ratio, tower_level, tower_table, FieldDegrees, TowerLevel,
    TowerTable,
};
