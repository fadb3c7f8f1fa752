use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::LieAlg;
use crate::error::{Error, Result};
use crate::exact::rat::int;
use crate::exact::Rat;
use crate::matrix::Mat;

/// Largest dimension accepted by [`TwoForm::top_wedge`].
pub const WEDGE_DIM_LIMIT: usize = 6;

/// A linear form, by its values on the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinForm(pub Vec<Rat>);

impl LinForm {
    /// The dual basis vector `e_{i+1}^*`.
    pub fn dual(dim: usize, i: usize) -> LinForm {
        let mut v = vec![Rat::zero(); dim];
        v[i] = Rat::one();
        LinForm(v)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.0
    }

    pub fn eval(&self, v: &[Rat]) -> Rat {
        self.0.iter().zip(v).filter(|(a, b)| !a.is_zero() && !b.is_zero()).map(|(a, b)| a * b).sum()
    }
}

/// A 2-cochain by its skew Gram matrix: `w(u, v) = u^T M v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoForm {
    matrix: Mat,
}

impl TwoForm {
    pub fn new(matrix: Mat) -> Result<TwoForm> {
        if !matrix.is_square() {
            return Err(Error::NotSquare { rows: matrix.rows(), cols: matrix.cols() });
        }
        if !matrix.is_skew() {
            return Err(Error::NotAntisymmetric(0, 0));
        }
        Ok(TwoForm { matrix })
    }

    /// `sum c * e_i^* ^ e_j^*` over the given `(i, j, c)`, zero-based.
    pub fn from_wedges(dim: usize, terms: &[(usize, usize, Rat)]) -> TwoForm {
        let mut m = Mat::zeros(dim, dim);
        for (i, j, c) in terms {
            m.set(*i, *j, m.get(*i, *j) + c);
            m.set(*j, *i, m.get(*j, *i) - c);
        }
        TwoForm { matrix: m }
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn eval(&self, u: &[Rat], v: &[Rat]) -> Rat {
        let mv = self.matrix.mul_vec(v);
        u.iter().zip(&mv).map(|(a, b)| a * b).sum()
    }

    pub fn determinant(&self) -> Rat {
        self.matrix.det().unwrap()
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.determinant().is_zero()
    }

    /// Coefficient of `e_1^* ^ ... ^ e_d^*` in the `d/2`-th wedge power,
    /// computed by multiplying out in the exterior algebra (no determinant).
    /// Odd dimensions give zero.
    pub fn top_wedge(&self) -> Result<Rat> {
        let d = self.dim();
        if d > WEDGE_DIM_LIMIT {
            return Err(Error::OverBudget { dim: d, budget: WEDGE_DIM_LIMIT });
        }
        if d % 2 == 1 {
            return Ok(Rat::zero());
        }
        let mut omega: BTreeMap<u32, Rat> = BTreeMap::new();
        for i in 0..d {
            for j in i + 1..d {
                let c = self.matrix.get(i, j);
                if !c.is_zero() {
                    omega.insert((1 << i) | (1 << j), c.clone());
                }
            }
        }
        let mut acc: BTreeMap<u32, Rat> = BTreeMap::from([(0u32, Rat::one())]);
        for _ in 0..d / 2 {
            let mut next: BTreeMap<u32, Rat> = BTreeMap::new();
            for (&ma, ca) in &acc {
                for (&mb, cb) in &omega {
                    if ma & mb != 0 {
                        continue;
                    }
                    let v = ca * cb;
                    let signed = if merge_sign(ma, mb) { -v } else { v };
                    *next.entry(ma | mb).or_insert_with(Rat::zero) += signed;
                }
            }
            next.retain(|_, c| !c.is_zero());
            acc = next;
        }
        Ok(acc.get(&((1u32 << d) - 1)).cloned().unwrap_or_else(Rat::zero))
    }
}

/// Whether sorting the indices of `a` followed by those of `b` needs an
/// odd number of transpositions.
fn merge_sign(a: u32, b: u32) -> bool {
    let mut inversions = 0;
    for i in 0..32 {
        if b & (1 << i) != 0 {
            inversions += (a >> (i + 1)).count_ones();
        }
    }
    inversions % 2 == 1
}

/// `dα(e_i, e_j) = -α([e_i, e_j])`.
pub fn ce_coboundary(g: &LieAlg, alpha: &LinForm) -> TwoForm {
    let d = g.dim();
    assert_eq!(alpha.0.len(), d, "form length");
    let mut m = Mat::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            let v = alpha.eval(g.bracket_basis(i, j));
            if !v.is_zero() {
                m.set(i, j, -v);
            }
        }
    }
    TwoForm { matrix: m }
}

/// Whether `dα` is nondegenerate.
pub fn is_frobenius_functional(g: &LieAlg, alpha: &LinForm) -> bool {
    if g.dim() % 2 == 1 {
        return false;
    }
    ce_coboundary(g, alpha).is_nondegenerate()
}

/// `k!`.
pub fn factorial(k: usize) -> Rat {
    (1..=k as i64).map(int).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{closure, MatAlgebra};
    use crate::frobenius::build_semidirect;

    fn e(n: usize, i: usize, j: usize) -> Mat {
        Mat::unit(n, i - 1, j - 1)
    }

    fn g31() -> LieAlg {
        let b = MatAlgebra::new(3, vec![Mat::identity(3), e(3, 1, 2), e(3, 1, 3)]).unwrap();
        build_semidirect(&b).unwrap().lie().clone()
    }

    #[test]
    fn coboundary_of_g31() {
        let g = g31();
        let w = ce_coboundary(&g, &LinForm::dual(6, 3));
        let expect = TwoForm::from_wedges(6, &[(0, 3, int(-1)), (1, 4, int(-1)), (2, 5, int(-1))]);
        assert_eq!(w, expect);
        assert!(is_frobenius_functional(&g, &LinForm::dual(6, 3)));
        assert!(!is_frobenius_functional(&g, &LinForm(vec![Rat::zero(); 6])));
        // forms supported on the B-dual part are closed to zero
        let w0 = ce_coboundary(&g, &LinForm(crate::exact::rat::ints(&[3, -1, 2, 0, 0, 0])));
        assert!(w0.matrix().is_zero());
    }

    #[test]
    fn wedge_matches_pfaffian_square() {
        let g = g31();
        let w = ce_coboundary(&g, &LinForm::dual(6, 3));
        let top = w.top_wedge().unwrap();
        // (dα)^3 = 3! Pf; Pf^2 = det
        let pf = &top / factorial(3);
        assert_eq!(&pf * &pf, w.determinant());
        assert!(!top.is_zero());
        let big = TwoForm::from_wedges(8, &[]);
        assert!(matches!(big.top_wedge(), Err(Error::OverBudget { .. })));
    }

    #[test]
    fn d0n_coboundary() {
        for n in 1..=4 {
            let mut m0 = Mat::zeros(n, n);
            for i in 1..n {
                m0 = &m0 + &e(n, i, i + 1);
            }
            let b = closure(n, &[m0]).unwrap();
            let mut p = Mat::zeros(n, n);
            for j in 0..n {
                p.set(n - 1 - j, j, int(1));
            }
            let g = crate::frobenius::build_semidirect_with_module_basis(&b, &p).unwrap();
            let w = ce_coboundary(g.lie(), &LinForm::dual(2 * n, 2 * n - 1));
            let terms: Vec<(usize, usize, Rat)> = (1..=n).map(|j| (j - 1, 2 * n - j, int(-1))).collect();
            assert_eq!(w, TwoForm::from_wedges(2 * n, &terms));
        }
    }
}
