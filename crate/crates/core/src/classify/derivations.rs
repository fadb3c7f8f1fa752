use num_traits::Zero;

use crate::algebra::{normalizer, MatAlgebra};
use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::frobenius::LieAlg;
use crate::matrix::{Echelon, Mat};

/// A basis of `Der(g)`, as matrices acting on coordinate columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationSpace {
    pub basis: Vec<Mat>,
}

impl DerivationSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

/// Whether `d[x, y] = [dx, y] + [x, dy]` on all basis pairs.
pub fn is_derivation(g: &LieAlg, d: &Mat) -> bool {
    let n = g.dim();
    (0..n).all(|i| {
        (i + 1..n).all(|j| {
            let lhs = d.mul_vec(g.bracket_basis(i, j));
            let a = g.bracket(&d.col(i), &g.unit(j));
            let b = g.bracket(&g.unit(i), &d.col(j));
            lhs.iter().zip(a.iter().zip(&b)).all(|(l, (x, y))| *l == x + y)
        })
    })
}

/// Solves the Leibniz identity on all basis pairs for an unknown `D`.
pub fn derivations_direct(g: &LieAlg) -> DerivationSpace {
    let d = g.dim();
    let var = |row: usize, col: usize| row * d + col;
    let mut eqs = Echelon::new(d * d);
    for i in 0..d {
        for j in i + 1..d {
            for m in 0..d {
                let mut row = vec![Rat::zero(); d * d];
                for k in 0..d {
                    let c = g.constant(i, j, k);
                    if !c.is_zero() {
                        row[var(m, k)] += c;
                    }
                    let c = g.constant(k, j, m);
                    if !c.is_zero() {
                        row[var(k, i)] -= c;
                    }
                    let c = g.constant(i, k, m);
                    if !c.is_zero() {
                        row[var(k, j)] -= c;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    eqs.insert(row);
                }
            }
        }
    }
    let basis = eqs.null_space().into_iter().map(|v| Mat::from_vec(d, &v)).collect();
    DerivationSpace { basis }
}

/// `dim N(b) + n`, the derivation dimension of `b ⋉ Q^n` for a
/// commutative unital `b`.
pub fn derivations_via_normalizer(b: &MatAlgebra) -> Result<usize> {
    if !b.is_commutative() {
        return Err(Error::NotCommutative);
    }
    if !b.is_unital() {
        return Err(Error::NotUnital);
    }
    Ok(normalizer(b).dim() + b.n())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::closure;
    use crate::frobenius::build_semidirect;

    fn e(n: usize, i: usize, j: usize) -> Mat {
        Mat::unit(n, i - 1, j - 1)
    }

    fn m0(n: usize) -> Mat {
        (1..n).fold(Mat::zeros(n, n), |acc, i| &acc + &e(n, i, i + 1))
    }

    #[test]
    fn examples() {
        for (n, want) in [(1, 2), (2, 5), (3, 8)] {
            let b = closure(n, &[m0(n)]).unwrap();
            let g = build_semidirect(&b).unwrap();
            let der = derivations_direct(g.lie());
            assert_eq!(der.dimension(), want, "n = {n}");
            assert!(der.basis.iter().all(|d| is_derivation(g.lie(), d)));
            assert_eq!(derivations_via_normalizer(&b).unwrap(), want);
        }
    }

    #[test]
    fn inner_derivations_are_derivations() {
        let b = closure(3, &[e(3, 1, 2), e(3, 1, 3)]).unwrap();
        let g = build_semidirect(&b).unwrap();
        for i in 0..g.lie().dim() {
            assert!(is_derivation(g.lie(), &g.lie().ad(&g.lie().unit(i))));
        }
        assert!(!is_derivation(g.lie(), &Mat::identity(6)));
    }
}
