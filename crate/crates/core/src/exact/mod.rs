//! Exact scalars and polynomials.

pub mod mpoly;
pub mod poly;
pub mod rat;

pub use mpoly::{mpoly_det, MPoly, Monomial};
pub use poly::{is_squarefree, poly_gcd, squarefree_decompose, sturm_real_root_count, Poly};
pub use rat::{frac, int, parse_rat, format_rat, Rat};
