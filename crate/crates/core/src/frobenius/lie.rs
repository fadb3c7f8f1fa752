use num_traits::{One, Zero};

use crate::algebra::{MatAlgebra, Subspace};
use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::matrix::Mat;

/// Lie algebra over Q by structure constants: `[e_i, e_j] = sum_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlg {
    dim: usize,
    labels: Vec<String>,
    c: Vec<Rat>,
}

impl LieAlg {
    /// `c` is flat, indexed `(i * dim + j) * dim + k`. Antisymmetry and the
    /// Jacobi identity are checked here.
    pub fn new(labels: Vec<String>, c: Vec<Rat>) -> Result<LieAlg> {
        let dim = labels.len();
        if c.len() != dim * dim * dim {
            return Err(Error::SizeMismatch { expected: dim * dim * dim, found: c.len() });
        }
        let g = LieAlg { dim, labels, c };
        for i in 0..dim {
            for j in i..dim {
                for k in 0..dim {
                    if g.constant(i, j, k) != &-g.constant(j, i, k) {
                        return Err(Error::NotAntisymmetric(i, j));
                    }
                }
            }
        }
        if let Some((i, j, k)) = g.jacobi_failure() {
            return Err(Error::JacobiFails(i, j, k));
        }
        Ok(g)
    }

    /// From the nonzero brackets `[e_i, e_j] = v` with `i < j`.
    pub fn from_brackets(labels: Vec<String>, brackets: &[(usize, usize, Vec<Rat>)]) -> Result<LieAlg> {
        let d = labels.len();
        let mut c = vec![Rat::zero(); d * d * d];
        for (i, j, v) in brackets {
            if *i >= d || *j >= d || v.len() != d {
                return Err(Error::SizeMismatch { expected: d, found: v.len() });
            }
            for (k, x) in v.iter().enumerate() {
                c[(i * d + j) * d + k] = x.clone();
                c[(j * d + i) * d + k] = -x;
            }
        }
        LieAlg::new(labels, c)
    }

    /// The abelian Lie algebra of dimension `dim`.
    pub fn abelian(dim: usize) -> LieAlg {
        LieAlg { dim, labels: default_labels(dim), c: vec![Rat::zero(); dim * dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Rat] {
        let d = self.dim;
        &self.c[(i * d + j) * d..(i * d + j + 1) * d]
    }

    pub fn bracket(&self, u: &[Rat], v: &[Rat]) -> Vec<Rat> {
        let d = self.dim;
        let mut out = vec![Rat::zero(); d];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let w = ui * vj;
                for (o, c) in out.iter_mut().zip(self.bracket_basis(i, j)) {
                    if !c.is_zero() {
                        *o += &w * c;
                    }
                }
            }
        }
        out
    }

    pub fn unit(&self, i: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.dim];
        v[i] = Rat::one();
        v
    }

    /// Matrix of `ad u` acting on coordinate columns.
    pub fn ad(&self, u: &[Rat]) -> Mat {
        let cols: Vec<Vec<Rat>> = (0..self.dim).map(|j| self.bracket(u, &self.unit(j))).collect();
        Mat::from_rows(cols).unwrap().transpose()
    }

    fn jacobi_failure(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim;
        for i in 0..d {
            for j in i + 1..d {
                let eij = self.bracket_basis(i, j).to_vec();
                for k in j + 1..d {
                    let a = self.bracket(&eij, &self.unit(k));
                    let b = self.bracket(self.bracket_basis(j, k), &self.unit(i));
                    let c = self.bracket(self.bracket_basis(k, i), &self.unit(j));
                    if a.iter().zip(&b).zip(&c).any(|((x, y), z)| !(x + y + z).is_zero()) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Span of all brackets.
    pub fn derived_ideal(&self) -> Subspace {
        let d = self.dim;
        let mut s = Subspace::zero(d);
        for i in 0..d {
            for j in i + 1..d {
                s.insert(self.bracket_basis(i, j).to_vec());
            }
        }
        s
    }

    /// Whether the derived ideal is abelian.
    pub fn is_two_step_solvable(&self) -> bool {
        let b = self.derived_ideal().basis().to_vec();
        b.iter().all(|u| b.iter().all(|v| self.bracket(u, v).iter().all(Zero::is_zero)))
    }

    /// Dimension of the center.
    pub fn center_dim(&self) -> usize {
        let d = self.dim;
        let rows = (0..d).flat_map(|j| (0..d).map(move |k| (j, k))).map(|(j, k)| {
            (0..d).map(|i| self.constant(i, j, k).clone()).collect::<Vec<Rat>>()
        });
        crate::matrix::elim::kernel_of_rows(d, rows).len()
    }

    /// Nonzero brackets `[e_i, e_j]` with `i < j`.
    pub fn nonzero_brackets(&self) -> Vec<(usize, usize, Vec<Rat>)> {
        let d = self.dim;
        let mut out = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                let v = self.bracket_basis(i, j);
                if v.iter().any(|x| !x.is_zero()) {
                    out.push((i, j, v.to_vec()));
                }
            }
        }
        out
    }
}

pub(crate) fn default_labels(d: usize) -> Vec<String> {
    (1..=d).map(|i| format!("e{i}")).collect()
}

/// `B ⋉ Q^n` together with the data it was built from.
///
/// Basis order: the basis of `B` (`e_1..e_k`), then the module basis
/// (`e_{k+1}..e_{k+n}`).
#[derive(Clone, Debug)]
pub struct Semidirect {
    lie: LieAlg,
    b: MatAlgebra,
    module: Mat,
    module_inv: Mat,
}

/// Semidirect product with the standard basis of `Q^n`.
pub fn build_semidirect(b: &MatAlgebra) -> Result<Semidirect> {
    build_semidirect_with_module_basis(b, &Mat::identity(b.n()))
}

/// Semidirect product whose module basis is given by the columns of `p`.
pub fn build_semidirect_with_module_basis(b: &MatAlgebra, p: &Mat) -> Result<Semidirect> {
    if !b.is_commutative() {
        return Err(Error::NotCommutative);
    }
    let n = b.n();
    if p.rows() != n || !p.is_square() {
        return Err(Error::SizeMismatch { expected: n, found: p.rows() });
    }
    let pinv = p.inverse().ok_or(Error::Singular)?;
    let k = b.dim();
    let d = k + n;
    let mut c = vec![Rat::zero(); d * d * d];
    for (i, a) in b.basis().iter().enumerate() {
        let local = &(&pinv * a) * p;
        for j in 0..n {
            for l in 0..n {
                let x = local.get(l, j);
                if !x.is_zero() {
                    c[(i * d + k + j) * d + k + l] = x.clone();
                    c[((k + j) * d + i) * d + k + l] = -x;
                }
            }
        }
    }
    let lie = LieAlg::new(default_labels(d), c)?;
    Ok(Semidirect { lie, b: b.clone(), module: p.clone(), module_inv: pinv })
}

impl Semidirect {
    pub fn lie(&self) -> &LieAlg {
        &self.lie
    }

    pub fn algebra(&self) -> &MatAlgebra {
        &self.b
    }

    /// `dim B`.
    pub fn k(&self) -> usize {
        self.b.dim()
    }

    /// Size of the module.
    pub fn n(&self) -> usize {
        self.b.n()
    }

    /// Columns are the module basis vectors.
    pub fn module_basis(&self) -> &Mat {
        &self.module
    }

    /// Vector with the given `B`-coordinates and zero module part.
    pub fn embed_b(&self, coords: &[Rat]) -> Vec<Rat> {
        let mut v = coords.to_vec();
        v.resize(self.k() + self.n(), Rat::zero());
        v
    }

    /// Vector with zero `B`-part and the given module coordinates.
    pub fn embed_x(&self, coords: &[Rat]) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.k()];
        v.extend(coords.iter().cloned());
        v
    }

    /// The form on the whole algebra that vanishes on `B` and agrees with
    /// `alpha` (given on the standard basis of `Q^n`) on the module.
    pub fn extend_form(&self, alpha: &[Rat]) -> Vec<Rat> {
        self.embed_x(&self.module.vec_mul(alpha))
    }

    /// `a x` for a matrix `a` and module coordinates `x`, in module coordinates.
    pub fn act(&self, a: &Mat, x: &[Rat]) -> Vec<Rat> {
        let v = self.module.mul_vec(x);
        self.module_inv.mul_vec(&a.mul_vec(&v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::closure;
    use crate::exact::rat::{int, ints};

    fn e(n: usize, i: usize, j: usize) -> Mat {
        Mat::unit(n, i - 1, j - 1)
    }

    fn unit(d: usize, i: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); d];
        v[i - 1] = int(1);
        v
    }

    #[test]
    fn b31_brackets() {
        let b = MatAlgebra::new(3, vec![Mat::identity(3), e(3, 1, 2), e(3, 1, 3)]).unwrap();
        let g = build_semidirect(&b).unwrap();
        let l = g.lie();
        for j in 4..=6 {
            assert_eq!(l.bracket_basis(0, j - 1), &unit(6, j)[..]);
        }
        assert_eq!(l.bracket_basis(1, 4), &unit(6, 4)[..]);
        assert_eq!(l.bracket_basis(2, 5), &unit(6, 4)[..]);
        assert_eq!(l.nonzero_brackets().len(), 5);
        assert!(l.is_two_step_solvable());
        assert_eq!(l.derived_ideal().dim(), 3);
    }

    #[test]
    fn d0n_brackets_in_reversed_module_basis() {
        for n in 1..=5 {
            let mut m0 = Mat::zeros(n, n);
            for i in 1..n {
                m0 = &m0 + &e(n, i, i + 1);
            }
            let b = closure(n, &[m0]).unwrap();
            // e_{n+j} is the standard vector with index n-j+1
            let mut p = Mat::zeros(n, n);
            for j in 0..n {
                p.set(n - 1 - j, j, int(1));
            }
            let g = build_semidirect_with_module_basis(&b, &p).unwrap();
            for i in 1..=n {
                for j in 1..=n {
                    let expect = if j + i - 1 <= n { unit(2 * n, n + j + i - 1) } else { vec![Rat::zero(); 2 * n] };
                    assert_eq!(g.lie().bracket_basis(i - 1, n + j - 1), &expect[..], "n={n} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn aff_c_table() {
        let m = &e(2, 2, 1) - &e(2, 1, 2);
        let g = build_semidirect(&closure(2, &[m]).unwrap()).unwrap();
        let l = g.lie();
        assert_eq!(l.bracket_basis(0, 2), &ints(&[0, 0, 1, 0])[..]);
        assert_eq!(l.bracket_basis(0, 3), &ints(&[0, 0, 0, 1])[..]);
        assert_eq!(l.bracket_basis(1, 2), &ints(&[0, 0, 0, 1])[..]);
        assert_eq!(l.bracket_basis(1, 3), &ints(&[0, 0, -1, 0])[..]);
        assert_eq!(l.center_dim(), 0);
    }

    #[test]
    fn rejects_bad_constants() {
        let labels = default_labels(3);
        assert!(matches!(
            LieAlg::from_brackets(labels.clone(), &[(0, 1, ints(&[1, 0, 0])), (0, 2, ints(&[0, 0, 1])), (1, 2, ints(&[1, 0, 0]))]),
            Err(Error::JacobiFails(..))
        ));
        let mut c = vec![Rat::zero(); 27];
        c[1] = int(1); // [e1, e1] has an e2 component
        assert!(matches!(LieAlg::new(labels, c), Err(Error::NotAntisymmetric(0, 0))));
        let nc = MatAlgebra::new(2, vec![e(2, 1, 2), e(2, 2, 1)]).unwrap();
        assert!(matches!(build_semidirect(&nc), Err(Error::NotCommutative)));
    }
}
