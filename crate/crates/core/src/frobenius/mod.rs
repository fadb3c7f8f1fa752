//! Semidirect products `B ⋉ Q^n`, coboundaries, Frobenius functionals,
//! open orbits and the induced left-symmetric product.

mod forms;
mod lie;
mod lsa;
mod orbit;

pub use forms::{ce_coboundary, factorial, is_frobenius_functional, LinForm, TwoForm, WEDGE_DIM_LIMIT};
pub use lie::{build_semidirect, build_semidirect_with_module_basis, LieAlg, Semidirect};
pub use lsa::{lsa_product, principal_element, verify_lsa, LeftSymmetric, LsaReport};
pub use orbit::{
    frobenius_polynomial, nonzero_point, open_orbit_exists, orbital_matrix, orbital_polynomial, OrbitDecision,
    PolyVerdict, ZeroCertificate,
};
