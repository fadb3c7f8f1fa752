use num_traits::{One, Zero};

use super::forms::ce_coboundary;
use super::{LieAlg, LinForm};
use crate::algebra::MatAlgebra;
use crate::decide::{sampled_zero_test, seeded_rationals, DecisionConfig, SampledVerdict};
use crate::error::{Error, Result};
use crate::exact::{mpoly_det, MPoly, Rat};
use crate::matrix::elim::bareiss_det;
use crate::matrix::Mat;

/// Rows are the covectors `x -> alpha(a_i x)` for the basis `a_i` of `b`.
pub fn orbital_matrix(b: &MatAlgebra, alpha: &[Rat]) -> Mat {
    Mat::from_rows(b.basis().iter().map(|a| a.vec_mul(alpha)).collect()).unwrap()
}

/// `det` of the orbital matrix with `alpha = (s_1, ..., s_n)` symbolic.
pub fn orbital_polynomial(b: &MatAlgebra, budget: usize) -> Result<MPoly> {
    let n = b.n();
    let m: Vec<Vec<MPoly>> =
        b.basis().iter().map(|a| (0..n).map(|j| MPoly::linear(&a.col(j))).collect()).collect();
    mpoly_det(&m, n, budget)
}

/// Why there is no open orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZeroCertificate {
    /// The symbolic determinant, identically zero.
    Symbolic(MPoly),
    /// Every sampled determinant vanished; one-sided, see [`SampledVerdict`].
    Sampled(SampledVerdict),
}

/// Outcome of [`open_orbit_exists`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrbitDecision {
    /// `alpha` on `(Q^n)^*` with `det` of its orbital matrix nonzero.
    Witness { alpha: LinForm, determinant: Rat },
    NoOpenOrbit(ZeroCertificate),
}

impl OrbitDecision {
    pub fn witness(&self) -> Option<&LinForm> {
        match self {
            OrbitDecision::Witness { alpha, .. } => Some(alpha),
            _ => None,
        }
    }

    pub fn is_probabilistic(&self) -> bool {
        matches!(self, OrbitDecision::NoOpenOrbit(ZeroCertificate::Sampled(_)))
    }
}

/// Decides whether a commutative `n`-dimensional `b` has an open orbit on
/// covectors.
///
/// Tries `e_j^*`, the all-ones covector and a few seeded rationals first.
/// Failing those, the orbital determinant is expanded symbolically (or
/// sampled when `n` exceeds the budget); a nonzero polynomial is then
/// turned into an explicit witness.
pub fn open_orbit_exists(b: &MatAlgebra, cfg: &DecisionConfig) -> Result<OrbitDecision> {
    if !b.is_commutative() {
        return Err(Error::NotCommutative);
    }
    let n = b.n();
    if b.dim() != n {
        return Err(Error::Inapplicable(format!("algebra has dimension {} but acts on Q^{n}", b.dim())));
    }
    let try_alpha = |alpha: Vec<Rat>| -> Option<OrbitDecision> {
        let d = bareiss_det(&orbital_matrix(b, &alpha).row_vecs());
        (!d.is_zero()).then_some(OrbitDecision::Witness { alpha: LinForm(alpha), determinant: d })
    };
    for j in 0..n {
        if let Some(w) = try_alpha(LinForm::dual(n, j).0) {
            return Ok(w);
        }
    }
    if let Some(w) = try_alpha(vec![Rat::one(); n]) {
        return Ok(w);
    }
    let mut rng = cfg.rng(0x0b17);
    for _ in 0..4 {
        if let Some(w) = try_alpha(seeded_rationals(n, &mut rng)) {
            return Ok(w);
        }
    }
    if n <= cfg.budget_dim {
        let p = orbital_polynomial(b, cfg.budget_dim)?;
        if p.is_zero() {
            return Ok(OrbitDecision::NoOpenOrbit(ZeroCertificate::Symbolic(p)));
        }
        let point = nonzero_point(&p);
        return Ok(try_alpha(point).expect("point chosen where the determinant is nonzero"));
    }
    let v = sampled_zero_test(n, n, cfg, 0x0b18, |s| bareiss_det(&orbital_matrix(b, s).row_vecs()));
    match v.nonzero_at.clone() {
        Some(p) => Ok(try_alpha(p).unwrap()),
        None => Ok(OrbitDecision::NoOpenOrbit(ZeroCertificate::Sampled(v))),
    }
}

/// A point of `{0..=deg}^n` where a nonzero polynomial does not vanish.
/// Such a point always exists when every variable has degree at most `deg`.
pub fn nonzero_point(p: &MPoly) -> Vec<Rat> {
    assert!(!p.is_zero(), "zero polynomial has no nonzero point");
    let n = p.nvars();
    let deg = p.total_degree().unwrap() as usize;
    let mut idx = vec![0usize; n];
    loop {
        let pt: Vec<Rat> = idx.iter().map(|&i| Rat::from_integer((i as i64).into())).collect();
        if !p.eval(&pt).is_zero() {
            return pt;
        }
        let mut k = 0;
        loop {
            assert!(k < n, "exhausted the grid");
            idx[k] += 1;
            if idx[k] <= deg {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Existence of a Frobenius functional: symbolic `det dα`, or a sample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyVerdict {
    Exact(MPoly),
    Sampled(SampledVerdict),
}

impl PolyVerdict {
    /// True when no Frobenius functional exists (exactly, or as far as sampling saw).
    pub fn vanishes(&self) -> bool {
        match self {
            PolyVerdict::Exact(p) => p.is_zero(),
            PolyVerdict::Sampled(v) => v.nonzero_at.is_none(),
        }
    }

    pub fn is_probabilistic(&self) -> bool {
        matches!(self, PolyVerdict::Sampled(v) if v.nonzero_at.is_none())
    }
}

/// `det` of `dα` for symbolic `α = sum s_i e_i^*`.
pub fn frobenius_polynomial(g: &LieAlg, cfg: &DecisionConfig) -> PolyVerdict {
    let d = g.dim();
    if d <= cfg.budget_dim {
        let m: Vec<Vec<MPoly>> = (0..d)
            .map(|i| (0..d).map(|j| MPoly::linear(g.bracket_basis(i, j)).scale(&-Rat::one())).collect())
            .collect();
        return PolyVerdict::Exact(mpoly_det(&m, d, cfg.budget_dim).unwrap());
    }
    PolyVerdict::Sampled(sampled_zero_test(d, d, cfg, 0xf0b, |s| {
        ce_coboundary(g, &LinForm(s.to_vec())).determinant()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::int;

    fn e(n: usize, i: usize, j: usize) -> Mat {
        Mat::unit(n, i - 1, j - 1)
    }

    fn b31() -> MatAlgebra {
        MatAlgebra::new(3, vec![Mat::identity(3), e(3, 1, 2), e(3, 1, 3)]).unwrap()
    }

    #[test]
    fn b31_witness_and_polynomial() {
        let cfg = DecisionConfig::default();
        let d = open_orbit_exists(&b31(), &cfg).unwrap();
        assert_eq!(d.witness(), Some(&LinForm::dual(3, 0)));
        let p = orbital_polynomial(&b31(), 8).unwrap();
        // rows (s1,s2,s3), (0,s1,0), (0,0,s1)
        assert_eq!(p.to_string(), "s1^3");
    }

    #[test]
    fn ln_family_has_none() {
        let cfg = DecisionConfig::default();
        for n in 3..=5 {
            let mut basis = vec![Mat::identity(n)];
            basis.extend((1..n).map(|i| e(n, i, n)));
            let b = MatAlgebra::new(n, basis).unwrap();
            match open_orbit_exists(&b, &cfg).unwrap() {
                OrbitDecision::NoOpenOrbit(ZeroCertificate::Symbolic(p)) => assert!(p.is_zero()),
                other => panic!("unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn inapplicable_when_dimension_differs() {
        let b = MatAlgebra::new(3, vec![Mat::identity(3), e(3, 1, 3)]).unwrap();
        assert!(matches!(open_orbit_exists(&b, &DecisionConfig::default()), Err(Error::Inapplicable(_))));
    }

    #[test]
    fn nonzero_point_on_grid() {
        // (s1 - s2) * s2 vanishes on the diagonal and on s2 = 0
        let q = &MPoly::linear(&[int(1), int(-1)]) * &MPoly::linear(&[int(0), int(1)]);
        let pt = nonzero_point(&q);
        assert_eq!(pt, vec![int(0), int(1)]);
    }

    #[test]
    fn frobenius_polynomial_examples() {
        let cfg = DecisionConfig::default();
        let g = crate::frobenius::build_semidirect(&b31()).unwrap();
        let p = frobenius_polynomial(g.lie(), &cfg);
        assert!(!p.vanishes());
        let ab = LieAlg::abelian(4);
        assert!(frobenius_polynomial(&ab, &cfg).vanishes());
        let small = DecisionConfig { budget_dim: 4, ..cfg };
        let s = frobenius_polynomial(g.lie(), &small);
        assert!(matches!(s, PolyVerdict::Sampled(_)) && !s.vanishes() && !s.is_probabilistic());
    }
}
