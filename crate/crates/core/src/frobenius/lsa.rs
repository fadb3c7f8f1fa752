use num_traits::Zero;

use super::{LieAlg, LinForm, Semidirect, TwoForm};
use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::matrix::Mat;

/// The left-symmetric product induced by a symplectic form:
/// `w(u*v, x) = -w(v, [u, x])` for all `x`.
#[derive(Clone, Debug)]
pub struct LeftSymmetric<'a> {
    g: &'a LieAlg,
    omega: &'a TwoForm,
    transpose_inv: Mat,
}

impl<'a> LeftSymmetric<'a> {
    pub fn new(g: &'a LieAlg, omega: &'a TwoForm) -> Result<Self> {
        if omega.dim() != g.dim() {
            return Err(Error::SizeMismatch { expected: g.dim(), found: omega.dim() });
        }
        let transpose_inv = omega.matrix().transpose().inverse().ok_or(Error::Degenerate)?;
        Ok(LeftSymmetric { g, omega, transpose_inv })
    }

    /// `u * v`.
    pub fn product(&self, u: &[Rat], v: &[Rat]) -> Vec<Rat> {
        // w(y, e_m) = (M^T y)_m, so y = M^{-T} r with r_m = -w(v, [u, e_m]).
        let rhs: Vec<Rat> =
            (0..self.g.dim()).map(|m| -self.omega.eval(v, &self.g.bracket(u, &self.g.unit(m)))).collect();
        self.transpose_inv.mul_vec(&rhs)
    }

    /// `(u*v)*w - u*(v*w)`.
    pub fn associator(&self, u: &[Rat], v: &[Rat], w: &[Rat]) -> Vec<Rat> {
        let a = self.product(&self.product(u, v), w);
        let b = self.product(u, &self.product(v, w));
        a.iter().zip(&b).map(|(x, y)| x - y).collect()
    }
}

pub fn lsa_product(g: &LieAlg, omega: &TwoForm, u: &[Rat], v: &[Rat]) -> Result<Vec<Rat>> {
    Ok(LeftSymmetric::new(g, omega)?.product(u, v))
}

/// The `v0` with `w(v0, .) = alpha`.
pub fn principal_element(g: &LieAlg, omega: &TwoForm, alpha: &LinForm) -> Result<Vec<Rat>> {
    if omega.dim() != g.dim() || alpha.0.len() != g.dim() {
        return Err(Error::SizeMismatch { expected: g.dim(), found: omega.dim() });
    }
    let t = omega.matrix().transpose().inverse().ok_or(Error::Degenerate)?;
    Ok(t.mul_vec(&alpha.0))
}

/// Which identities of the left-symmetric product held on all basis
/// elements of a semidirect product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LsaReport {
    /// `a*b = -ab` for `a, b` in `B`.
    pub ab: bool,
    /// `a*x = 0`.
    pub ax: bool,
    /// `x*y = 0`.
    pub xy: bool,
    /// `x*a = -ax`.
    pub xa: bool,
    /// `a*b` lies in `B`.
    pub b_closed: bool,
    /// Associator symmetric in its first two arguments.
    pub left_symmetric: bool,
    /// `u*v - v*u = [u, v]`.
    pub commutator: bool,
    /// The principal element, and whether it is `-I`.
    pub principal: Vec<Rat>,
    pub principal_is_minus_identity: bool,
}

impl LsaReport {
    pub fn all_hold(&self) -> bool {
        self.ab
            && self.ax
            && self.xy
            && self.xa
            && self.b_closed
            && self.left_symmetric
            && self.commutator
            && self.principal_is_minus_identity
    }
}

/// Checks the identities on every basis pair (and triple, for the
/// associator), with `alpha` given on the whole algebra.
pub fn verify_lsa(sd: &Semidirect, alpha: &LinForm) -> Result<LsaReport> {
    let g = sd.lie();
    let omega = super::ce_coboundary(g, alpha);
    let lsa = LeftSymmetric::new(g, &omega)?;
    let b = sd.algebra();
    let (k, n) = (sd.k(), sd.n());
    let d = k + n;
    let units: Vec<Vec<Rat>> = (0..d).map(|i| g.unit(i)).collect();
    let zero = vec![Rat::zero(); d];
    let is_zero = |v: &[Rat]| v.iter().all(Zero::is_zero);

    let mut ab = true;
    let mut b_closed = true;
    for i in 0..k {
        for j in 0..k {
            let got = lsa.product(&units[i], &units[j]);
            if got[k..].iter().any(|x| !x.is_zero()) {
                b_closed = false;
            }
            let prod = &b.basis()[i] * &b.basis()[j];
            match b.coordinates(&prod) {
                Some(c) => {
                    let want: Vec<Rat> = sd.embed_b(&c).iter().map(|x| -x).collect();
                    ab &= got == want;
                }
                None => ab = false,
            }
        }
    }
    let mut ax = true;
    let mut xa = true;
    for i in 0..k {
        for j in 0..n {
            let x = &units[k + j];
            ax &= lsa.product(&units[i], x) == zero;
            let act = sd.act(&b.basis()[i], &units[k + j][k..]);
            let want: Vec<Rat> = sd.embed_x(&act).iter().map(|v| -v).collect();
            xa &= lsa.product(x, &units[i]) == want;
        }
    }
    let mut xy = true;
    for i in k..d {
        for j in k..d {
            xy &= is_zero(&lsa.product(&units[i], &units[j]));
        }
    }
    let mut commutator = true;
    let mut left_symmetric = true;
    for u in 0..d {
        for v in 0..d {
            let a = lsa.product(&units[u], &units[v]);
            let c = lsa.product(&units[v], &units[u]);
            let diff: Vec<Rat> = a.iter().zip(&c).map(|(x, y)| x - y).collect();
            commutator &= diff == g.bracket_basis(u, v);
            if v > u {
                for w in 0..d {
                    left_symmetric &=
                        lsa.associator(&units[u], &units[v], &units[w]) == lsa.associator(&units[v], &units[u], &units[w]);
                }
            }
        }
    }
    let principal = principal_element(g, &omega, alpha)?;
    let minus_id = b
        .coordinates(&Mat::identity(n))
        .map(|c| sd.embed_b(&c).iter().map(|x| -x).collect::<Vec<Rat>>());
    let principal_is_minus_identity = minus_id.as_ref() == Some(&principal);
    Ok(LsaReport { ab, ax, xy, xa, b_closed, left_symmetric, commutator, principal, principal_is_minus_identity })
}
