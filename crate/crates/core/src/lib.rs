//! Exact Tate cohomology of modules over finite cyclic groups.
//!
//! The crate computes `Ĥ⁰ = A^G / N_G A`, `H¹ = ker N_G / (1 − σ)A` and the
//! Herbrand quotient `#Ĥ⁰ / #H¹` for finitely generated modules given by a
//! presentation `ℤᵏ / R` and an integer matrix for the generator `σ`. Every
//! subobject is a lattice between `R` and `ℤᵏ`, so all orders are exact
//! lattice indices.
//!
//! On top of that sit permutation modules built from cyclic G-sets and real
//! quadratic fields `ℚ(√D)`: fundamental units, Pell equations, prime
//! splitting and Herbrand quotients of S-unit groups.
//!
//! ```
//! use herbrand::{herbrand_quotient, CyclicModule, IntMatrix, PresentedGroup};
//!
//! // ℤ with σ = −1 over the group of order 2
//! let a = PresentedGroup::free(1);
//! let sigma = IntMatrix::from_rows(1, vec![vec![(-1).into()]]);
//! let m = CyclicModule::new(2, a, sigma).unwrap();
//! let r = herbrand_quotient(&m);
//! assert_eq!(r.quotient.to_string(), "1/2");
//! ```

pub mod cohomology;
pub mod error;
pub mod group;
pub mod lattice;
pub mod matrix;
pub mod oracle;
pub mod permutation;
pub mod quadratic;
pub mod random;

pub use cohomology::{
    fixed_submodule, h1, herbrand_quotient, norm_matrix, order2_profile, remark_formula_h1,
    tate_groups, tate_h0, validate_module, CyclicModule, HerbrandReport, Order2Profile,
    RemarkReport, TateGroups,
};
pub use error::{Error, Result};
pub use group::{
    group_order, invariant_factors, m_torsion, Cardinality, InvariantFactors, PresentedGroup,
};
pub use lattice::{kernel_basis, lattice_index, preimage_lattice, Lattice};
pub use matrix::{hermite_normal_form, smith_normal_form, Hermite, IntMatrix, Smith};
pub use oracle::{brute_force_cohomology, BruteForceOrders, DEFAULT_ORACLE_BOUND};
pub use permutation::{
    burnside_orbit_count, finite_index_perturbation, orbit_decomposition, orbit_h1_formula,
    orbit_herbrand_formula, permutation_module, GSet, OrbitDecomposition,
};
pub use quadratic::{
    cf_expand, field_data, fundamental_unit, h1_from_norm_index, ok_module, pell_solve,
    places_above, splitting_type, sunit_herbrand, trace_index, unit_group_h1, unit_module,
    CFExpansion, FundamentalUnitData, Omega, PellVariant, Place, QuadraticField, QuadraticInteger,
    SUnitReport, SplittingType,
};
pub use random::{random_cyclic_module, random_finite_module, scramble};
