use std::fmt;

use super::{classify_gm, derivations_direct, find_cyclic_generator, ClassLabel};
use crate::algebra::{freedom_degree, MatAlgebra};
use crate::error::{Error, Result};
use crate::algebra::Subspace;
use crate::exact::Rat;
use crate::frobenius::build_semidirect;
use crate::matrix::elim::kernel_of_rows;
use crate::matrix::{char_poly, Mat};
use num_traits::{Signed, Zero};

/// Isomorphism invariants of `b ⋉ Q^n` that do not need `b = K[M]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvariantBundle {
    pub lie_dim: usize,
    pub derived_dim: usize,
    pub center_dim: usize,
    pub derivation_dim: usize,
    /// Freedom degree of the basis of `b`, taken as a system.
    pub freedom_degree: usize,
    /// Present when a nonderogatory generator of `b` was found.
    pub label: Option<ClassLabel>,
    /// Present when [`square_form`] applies to `b`.
    pub square_form: Option<SquareForm>,
}

/// Rank and absolute signature of the product `V x V -> N^2`, where `N` is
/// the nilpotent radical of a local `b`, `N^2` is a line, `N^3 = 0` and `V`
/// is a complement of `N^2` in `N`. Both numbers are conjugation invariants:
/// a change of generator of `N^2` only flips the sign of the form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SquareForm {
    pub rank: usize,
    pub abs_signature: usize,
}

impl fmt::Display for InvariantBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "dim {}, derived {}, center {}, derivations {}, freedom {}, label {}{}",
            self.lie_dim,
            self.derived_dim,
            self.center_dim,
            self.derivation_dim,
            self.freedom_degree,
            self.label.as_ref().map_or("n/a".to_string(), |l| l.to_string()),
            self.square_form.map_or(String::new(), |q| format!(", square form rank {} |sig| {}", q.rank, q.abs_signature))
        )
    }
}

pub fn invariant_bundle(b: &MatAlgebra) -> Result<InvariantBundle> {
    if !b.is_commutative() {
        return Err(Error::NotCommutative);
    }
    let sd = build_semidirect(b)?;
    let g = sd.lie();
    let label = match find_cyclic_generator(b) {
        Some(m) => Some(classify_gm(&m)?),
        None => None,
    };
    Ok(InvariantBundle {
        lie_dim: g.dim(),
        derived_dim: g.derived_ideal().dim(),
        center_dim: g.center_dim(),
        derivation_dim: derivations_direct(g).dimension(),
        freedom_degree: freedom_degree(b.basis())?,
        label,
        square_form: square_form(b),
    })
}

/// Names of the fields in which two bundles differ.
pub fn separating_invariants(a: &InvariantBundle, b: &InvariantBundle) -> Vec<&'static str> {
    let mut out = Vec::new();
    if a.lie_dim != b.lie_dim {
        out.push("dimension");
    }
    if a.derived_dim != b.derived_dim {
        out.push("derived ideal");
    }
    if a.center_dim != b.center_dim {
        out.push("center");
    }
    if a.derivation_dim != b.derivation_dim {
        out.push("derivations");
    }
    if a.freedom_degree != b.freedom_degree {
        out.push("freedom degree");
    }
    if a.label != b.label {
        out.push("label");
    }
    if a.square_form != b.square_form {
        out.push("square form");
    }
    out
}

/// See [`SquareForm`]. `None` when `b` is not of that shape.
pub fn square_form(b: &MatAlgebra) -> Option<SquareForm> {
    let n = b.n();
    if !b.is_commutative() || !b.is_unital() {
        return None;
    }
    let trace_row: Vec<Rat> = b.basis().iter().map(Mat::trace).collect();
    let kernel = kernel_of_rows(b.dim(), [trace_row]);
    let radical: Vec<Mat> = kernel
        .iter()
        .map(|c| c.iter().zip(b.basis()).fold(Mat::zeros(n, n), |acc, (x, m)| &acc + &m.scale(x)))
        .collect();
    if radical.len() + 1 != b.dim() || radical.iter().any(|m| !m.pow(n as u32).is_zero()) {
        return None;
    }
    let mut square = Subspace::zero(n * n);
    for u in &radical {
        for v in &radical {
            square.insert((u * v).vectorize());
        }
    }
    if square.dim() != 1 {
        return None;
    }
    let z = square.basis()[0].clone();
    let zm = Mat::from_vec(n, &z);
    if radical.iter().any(|u| !(u * &zm).is_zero()) {
        return None;
    }
    let mut seen = square.clone();
    let complement: Vec<&Mat> = radical.iter().filter(|u| seen.insert(u.vectorize())).collect();
    let pivot = z.iter().position(|x| !x.is_zero())?;
    let m = complement.len();
    let mut s = Mat::zeros(m, m);
    for (i, u) in complement.iter().enumerate() {
        for (j, v) in complement.iter().enumerate() {
            s.set(i, j, (*u * *v).vectorize()[pivot].clone() / &z[pivot]);
        }
    }
    let chi = char_poly(&s).ok()?;
    let (pos, neg) = (sign_changes(chi.coeffs().iter().cloned()), sign_changes(reflected(chi.coeffs())));
    Some(SquareForm { rank: pos + neg, abs_signature: pos.abs_diff(neg) })
}

/// Coefficients of `p(-x)`.
fn reflected(c: &[Rat]) -> impl Iterator<Item = Rat> + '_ {
    c.iter().enumerate().map(|(k, x)| if k % 2 == 1 { -x } else { x.clone() })
}

/// Descartes' count, exact for real-rooted polynomials such as the
/// characteristic polynomial of a symmetric matrix.
fn sign_changes(c: impl Iterator<Item = Rat>) -> usize {
    let signs: Vec<bool> = c.filter(|x| !x.is_zero()).map(|x| x.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::int;

    fn e(n: usize, i: usize, j: usize) -> Mat {
        Mat::unit(n, i - 1, j - 1)
    }

    #[test]
    fn definite_and_split_forms() {
        // I, E12 + E24, E13 + E34, E14: identity form on a plane
        let def = MatAlgebra::new(4, vec![Mat::identity(4), &e(4, 1, 2) + &e(4, 2, 4), &e(4, 1, 3) + &e(4, 3, 4), e(4, 1, 4)]).unwrap();
        assert_eq!(square_form(&def), Some(SquareForm { rank: 2, abs_signature: 2 }));
        // I, E12 + E34, E13 + E24, E14: hyperbolic plane
        let split = MatAlgebra::new(4, vec![Mat::identity(4), &e(4, 1, 2) + &e(4, 3, 4), &e(4, 1, 3) + &e(4, 2, 4), e(4, 1, 4)]).unwrap();
        assert_eq!(square_form(&split), Some(SquareForm { rank: 2, abs_signature: 0 }));
        let conj = def.conjugate(&Mat::from_ints(&[&[1, 2, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 3], &[1, 0, 0, 1]])).unwrap();
        assert_eq!(square_form(&conj), square_form(&def));
        let diag = MatAlgebra::new(2, vec![Mat::identity(2), Mat::diag(&[int(1), int(0)])]).unwrap();
        assert_eq!(square_form(&diag), None);
    }
}
