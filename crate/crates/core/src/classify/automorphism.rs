use crate::algebra::closure;
use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::frobenius::build_semidirect;
use crate::matrix::Mat;

/// Checks that `a + x -> phi a phi^-1 + phi a phi^-1 x0 + phi x` preserves
/// brackets on `K[m] ⋉ Q^n`.
///
/// Requires `phi` invertible with `phi m phi^-1` in `K[m]`; otherwise the
/// map is not defined and the result is [`Error::Inapplicable`].
pub fn verify_automorphism(m: &Mat, phi: &Mat, x0: &[Rat]) -> Result<bool> {
    let n = m.rows();
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    if phi.rows() != n || !phi.is_square() {
        return Err(Error::SizeMismatch { expected: n, found: phi.rows() });
    }
    if x0.len() != n {
        return Err(Error::SizeMismatch { expected: n, found: x0.len() });
    }
    let inv = phi.inverse().ok_or(Error::Singular)?;
    let b = closure(n, std::slice::from_ref(m))?;
    if !b.contains(&(&(phi * m) * &inv)) {
        return Err(Error::Inapplicable("phi M phi^-1 is not in K[M]".into()));
    }
    let sd = build_semidirect(&b)?;
    let g = sd.lie();
    let k = b.dim();
    let d = k + n;
    let mut cols: Vec<Vec<Rat>> = Vec::with_capacity(d);
    for a in b.basis() {
        let ad = &(phi * a) * &inv;
        let mut col = b.coordinates(&ad).expect("conjugate of a polynomial in M stays in K[M]");
        col.extend(ad.mul_vec(x0));
        cols.push(col);
    }
    for j in 0..n {
        cols.push(sd.embed_x(&phi.col(j)));
    }
    let psi = Mat::from_rows(cols).unwrap().transpose();
    for u in 0..d {
        for v in u + 1..d {
            let lhs = psi.mul_vec(g.bracket_basis(u, v));
            let rhs = g.bracket(&psi.col(u), &psi.col(v));
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
