//! Commutative matrix algebras: closure, centralizers, normalizers,
//! maximality, polynomial freedom and the Gerstenhaber bound.

mod centralizer;
mod freedom;
mod gerstenhaber;
mod heisenberg;
mod subspace;

pub use centralizer::{centralizer, is_masa, normalizer};
pub use freedom::{combinations, freedom_degree};
pub use gerstenhaber::{gerstenhaber_check, GerstenhaberCheck};
pub use heisenberg::{heisenberg_omega, in_heisenberg_model, is_lagrangian_in_heisenberg};
pub use subspace::Subspace;

use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::matrix::{commutator, Mat};

/// An ordered, linearly independent family of `n x n` matrices.
///
/// The flags are computed, never assumed: `unital` means the identity is
/// in the span, `commutative` that all basis elements commute pairwise.
/// The span itself need not be closed under products.
#[derive(Clone, Debug)]
pub struct MatAlgebra {
    n: usize,
    basis: Vec<Mat>,
    unital: bool,
    commutative: bool,
    span: Subspace,
}

impl MatAlgebra {
    pub fn new(n: usize, basis: Vec<Mat>) -> Result<MatAlgebra> {
        if n == 0 {
            return Err(Error::EmptyAmbient);
        }
        check_sizes(n, &basis)?;
        let mut span = Subspace::zero(n * n);
        for b in &basis {
            if !span.insert(b.vectorize()) {
                return Err(Error::LinearlyDependent);
            }
        }
        let unital = span.contains(&Mat::identity(n).vectorize());
        let commutative = first_noncommuting(&basis).is_none();
        Ok(MatAlgebra { n, basis, unital, commutative, span })
    }

    /// Like [`MatAlgebra::new`], additionally insisting on both flags.
    pub fn commutative_unital(n: usize, basis: Vec<Mat>) -> Result<MatAlgebra> {
        let a = MatAlgebra::new(n, basis)?;
        if !a.commutative {
            return Err(Error::NotCommutative);
        }
        if !a.unital {
            return Err(Error::NotUnital);
        }
        Ok(a)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Mat] {
        &self.basis
    }

    pub fn is_unital(&self) -> bool {
        self.unital
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn span(&self) -> &Subspace {
        &self.span
    }

    pub fn contains(&self, m: &Mat) -> bool {
        m.rows() == self.n && m.cols() == self.n && self.span.contains(&m.vectorize())
    }

    /// Coordinates of `m` with respect to the stored (ordered) basis.
    pub fn coordinates(&self, m: &Mat) -> Option<Vec<Rat>> {
        if !self.contains(m) {
            return None;
        }
        let rows: Vec<Vec<Rat>> =
            (0..self.n * self.n).map(|r| self.basis.iter().map(|b| b.entries()[r].clone()).collect()).collect();
        crate::matrix::elim::solve_rows(&rows, self.dim(), &m.vectorize())
    }

    /// Same span, regardless of basis order.
    pub fn same_span(&self, other: &MatAlgebra) -> bool {
        self.n == other.n && self.span == other.span
    }

    /// True if the span is closed under matrix products.
    pub fn is_closed_under_products(&self) -> bool {
        self.basis.iter().all(|a| self.basis.iter().all(|b| self.contains(&(a * b))))
    }

    /// `P b P^-1` elementwise; conjugate algebras give isomorphic semidirect products.
    pub fn conjugate(&self, p: &Mat) -> Result<MatAlgebra> {
        if p.rows() != self.n || !p.is_square() {
            return Err(Error::SizeMismatch { expected: self.n, found: p.rows() });
        }
        let inv = p.inverse().ok_or(Error::Singular)?;
        MatAlgebra::new(self.n, self.basis.iter().map(|b| &(p * b) * &inv).collect())
    }
}

fn check_sizes(n: usize, ms: &[Mat]) -> Result<()> {
    for m in ms {
        if !m.is_square() {
            return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
        }
        if m.rows() != n {
            return Err(Error::SizeMismatch { expected: n, found: m.rows() });
        }
    }
    Ok(())
}

fn first_noncommuting(ms: &[Mat]) -> Option<(usize, usize)> {
    for i in 0..ms.len() {
        for j in i + 1..ms.len() {
            if !commutator(&ms[i], &ms[j]).map(|c| c.is_zero()).unwrap_or(false) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Checks that the matrices are square of size `n` and commute pairwise.
pub fn check_commuting(n: usize, ms: &[Mat]) -> Result<()> {
    check_sizes(n, ms)?;
    match first_noncommuting(ms) {
        Some((i, j)) => Err(Error::NonCommuting(i, j)),
        None => Ok(()),
    }
}

/// The unital algebra generated by pairwise commuting matrices.
///
/// Starts from `I` and the generators, then multiplies the elements
/// accepted in the latest wave by every generator, keeping those that
/// enlarge the span, until a wave adds nothing.
pub fn closure(n: usize, generators: &[Mat]) -> Result<MatAlgebra> {
    if n == 0 {
        return Err(Error::EmptyAmbient);
    }
    check_commuting(n, generators)?;
    let mut span = Subspace::zero(n * n);
    let mut basis = Vec::new();
    let id = Mat::identity(n);
    span.insert(id.vectorize());
    basis.push(id);
    let mut wave = Vec::new();
    for g in generators {
        if span.insert(g.vectorize()) {
            basis.push(g.clone());
            wave.push(g.clone());
        }
    }
    while !wave.is_empty() {
        let mut next = Vec::new();
        for w in &wave {
            for g in generators {
                let p = w * g;
                if span.insert(p.vectorize()) {
                    basis.push(p.clone());
                    next.push(p);
                }
            }
        }
        wave = next;
    }
    Ok(MatAlgebra { n, basis, unital: true, commutative: true, span })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, i: usize, j: usize) -> Mat {
        Mat::unit(n, i - 1, j - 1)
    }

    #[test]
    fn closure_examples() {
        let g = vec![e(4, 1, 3), e(4, 1, 4), e(4, 2, 3), e(4, 2, 4)];
        let c = closure(4, &g).unwrap();
        assert_eq!(c.dim(), 5);
        assert_eq!(c.basis()[0], Mat::identity(4));
        assert_eq!(&c.basis()[1..], &g[..]);
        let c = closure(3, &[e(3, 1, 2), e(3, 1, 3)]).unwrap();
        assert_eq!(c.dim(), 3);
        let c = closure(5, &[]).unwrap();
        assert_eq!(c.dim(), 1);
        assert!(matches!(closure(0, &[]), Err(Error::EmptyAmbient)));
        assert!(matches!(closure(2, &[e(2, 1, 2), e(2, 2, 1)]), Err(Error::NonCommuting(0, 1))));
    }

    #[test]
    fn closure_of_nilpotent_is_powers() {
        let m0 = &(&e(4, 1, 2) + &e(4, 2, 3)) + &e(4, 3, 4);
        let c = closure(4, std::slice::from_ref(&m0)).unwrap();
        assert_eq!(c.basis(), &[Mat::identity(4), m0.clone(), m0.pow(2), m0.pow(3)]);
        assert!(c.is_closed_under_products());
    }

    #[test]
    fn construction_checks() {
        assert!(matches!(MatAlgebra::new(2, vec![e(2, 1, 2), e(2, 1, 2)]), Err(Error::LinearlyDependent)));
        let a = MatAlgebra::new(2, vec![e(2, 1, 2), e(2, 2, 1)]).unwrap();
        assert!(!a.is_commutative() && !a.is_unital());
        let b = MatAlgebra::new(2, vec![e(2, 1, 1), e(2, 2, 2)]).unwrap();
        assert!(b.is_commutative() && b.is_unital());
        assert_eq!(b.coordinates(&Mat::identity(2)), Some(crate::exact::rat::ints(&[1, 1])));
    }
}
