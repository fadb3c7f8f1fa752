use crate::algebra::{closure, MatAlgebra};
use crate::error::{Error, Result};
use crate::exact::rat::int;
use crate::exact::{is_squarefree, Rat};
use crate::matrix::{char_poly, is_nonderogatory, Mat};

/// Outcome of [`cartan_search`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CartanDecision {
    /// `element = sum t^(i-1) b_i` has squarefree characteristic polynomial
    /// and generates `b`.
    Regular { element: Mat, t: Rat },
    /// None of the `samples` points on the curve worked.
    NoRegularElement { samples: usize },
}

/// `sum_i t^(i-1) b_i`.
pub fn curve_point(b: &MatAlgebra, t: &Rat) -> Mat {
    let n = b.n();
    let mut acc = Mat::zeros(n, n);
    let mut w = int(1);
    for bi in b.basis() {
        acc = &acc + &bi.scale(&w);
        w *= t;
    }
    acc
}

/// Number of curve points sampled for an `n`-dimensional algebra.
pub fn cartan_sample_count(n: usize) -> usize {
    let deg = n.saturating_sub(1).max(1);
    n * n.saturating_sub(1) * deg + 1
}

fn check_shape(b: &MatAlgebra) -> Result<()> {
    if !b.is_commutative() {
        return Err(Error::NotCommutative);
    }
    if !b.is_unital() {
        return Err(Error::NotUnital);
    }
    if b.dim() != b.n() {
        return Err(Error::SizeMismatch { expected: b.n(), found: b.dim() });
    }
    Ok(())
}

/// Looks for an element of `b` with `n` distinct eigenvalues that
/// generates `b`, along the curve `t -> sum t^(i-1) b_i` at
/// `t = 0, 1, ..., cartan_sample_count(n) - 1`.
pub fn cartan_search(b: &MatAlgebra) -> Result<CartanDecision> {
    check_shape(b)?;
    let samples = cartan_sample_count(b.n());
    for t in 0..samples {
        let t = int(t as i64);
        let m = curve_point(b, &t);
        if !is_squarefree(&char_poly(&m)?) || !is_nonderogatory(&m) {
            continue;
        }
        if closure(b.n(), std::slice::from_ref(&m))?.same_span(b) {
            return Ok(CartanDecision::Regular { element: m, t });
        }
    }
    Ok(CartanDecision::NoRegularElement { samples })
}

pub fn is_cartan(b: &MatAlgebra) -> Result<bool> {
    Ok(matches!(cartan_search(b)?, CartanDecision::Regular { .. }))
}

/// A nonderogatory `M` with `K[M] = b`, searched among the basis and then
/// along the same curve as [`cartan_search`]. `None` means none was found.
pub fn find_cyclic_generator(b: &MatAlgebra) -> Option<Mat> {
    if !b.is_commutative() || !b.is_unital() || b.dim() != b.n() {
        return None;
    }
    let n = b.n();
    let candidates = b
        .basis()
        .iter()
        .cloned()
        .chain((1..cartan_sample_count(n)).map(|t| curve_point(b, &int(t as i64))));
    for m in candidates {
        if m.is_zero() || !is_nonderogatory(&m) {
            continue;
        }
        if closure(n, std::slice::from_ref(&m)).ok()?.same_span(b) {
            return Some(m);
        }
    }
    None
}
