//! Finite-group enumeration engine.
//!
//! Groups are realized as permutation groups, matrix groups over finite fields
//! (optionally modulo scalars) or direct products of these, enumerated in full
//! by closure. On top of an enumerated [`GroupHandle`] the crate computes the
//! element-order spectrum `t -> s_t`, the same-order type (the set of distinct
//! `s_t`), and a handful of structural invariants.

pub mod any;
pub mod arith;
pub mod element;
pub mod error;
pub mod field;
pub mod group;
pub mod invariants;
pub mod matrix;
pub mod perm;
pub mod spectrum;
#[cfg(feature = "testkit")]
pub mod testkit;

pub use any::{any_direct_product, AnyElement};
pub use element::{power, ElementKind, GroupElement, Pair};
pub use error::GroupError;
pub use field::{field_make, FiniteField};
pub use group::{closure, element_order, refined_order, GroupHandle, DEFAULT_CAP};
pub use invariants::{
    center, certificate_from_invariants, conjugacy_classes, derived_series, is_simple,
    noniso_certificate, odd_prime_witness, odd_prime_witness_from_spectrum, DerivedSeries,
    GroupInvariants, NonIsoCertificate, OddPrimeWitness, Subgroup,
};
pub use matrix::{
    classical_group, classical_order, projectivize, sl_generators, su_generators, ClassicalFamily,
    Matrix,
};
pub use perm::{
    direct_product, family_generators, family_group, perm_order, PermFamily, Permutation,
};
pub use spectrum::{
    alpha_type, order_spectrum, spectrum_direct_product, AlphaType, OrderSpectrum, SpectrumError,
};
