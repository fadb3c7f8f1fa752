use super::{closure, MatAlgebra};
use crate::decide::DecisionConfig;
use crate::error::{Error, Result};
use crate::frobenius::{open_orbit_exists, LinForm, OrbitDecision};
use crate::matrix::Mat;

/// Result of [`gerstenhaber_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GerstenhaberCheck {
    /// Dimension of the algebra generated by the chosen subset.
    pub dimension: usize,
    /// `dimension <= n`.
    pub bound_ok: bool,
    /// Whether the algebra generated by the full basis is `b` itself.
    pub full_closure_is_b: bool,
    /// The open-orbit witness the check relied on.
    pub witness: LinForm,
}

/// Dimension of the algebra generated by `b.basis()[i]` for `i` in
/// `subset`, for an `n`-dimensional commutative `b` with an open orbit.
///
/// Without an open orbit the bound is not claimed, and the result is
/// [`Error::Inapplicable`].
pub fn gerstenhaber_check(b: &MatAlgebra, subset: &[usize], cfg: &DecisionConfig) -> Result<GerstenhaberCheck> {
    if !b.is_commutative() {
        return Err(Error::NotCommutative);
    }
    let witness = match open_orbit_exists(b, cfg)? {
        OrbitDecision::Witness { alpha, .. } => alpha,
        OrbitDecision::NoOpenOrbit(_) => {
            return Err(Error::Inapplicable("no open orbit, so the bound is not asserted".into()))
        }
    };
    let mut gens: Vec<Mat> = Vec::with_capacity(subset.len());
    for &i in subset {
        gens.push(b.basis().get(i).ok_or(Error::SizeMismatch { expected: b.dim(), found: i + 1 })?.clone());
    }
    let n = b.n();
    let c = closure(n, &gens)?;
    let full = closure(n, b.basis())?;
    Ok(GerstenhaberCheck {
        dimension: c.dim(),
        bound_ok: c.dim() <= n,
        full_closure_is_b: full.same_span(b),
        witness,
    })
}
