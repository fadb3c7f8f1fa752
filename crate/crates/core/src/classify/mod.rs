//! Labels for `G_M` with `M` nonderogatory, Cartan detection, derivation
//! algebras, automorphisms and invariants for the general case.

mod automorphism;
mod cartan;
mod derivations;
mod invariants;
mod profile;

pub use automorphism::verify_automorphism;
pub use cartan::{cartan_sample_count, cartan_search, curve_point, find_cyclic_generator, is_cartan, CartanDecision};
pub use derivations::{derivations_direct, derivations_via_normalizer, is_derivation, DerivationSpace};
pub use invariants::{invariant_bundle, separating_invariants, square_form, InvariantBundle, SquareForm};
pub use profile::{classify_gm, eig_profile, iso_gm, Atom, ClassLabel, EigProfile, ProfileEntry};
