use super::Subspace;
use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::matrix::{commutator, Mat};

/// Whether `m` lies in `span{E_1j, E_jn (2 <= j <= n-1), E_1n}`.
pub fn in_heisenberg_model(m: &Mat) -> bool {
    let n = m.rows();
    if !m.is_square() || n < 2 {
        return false;
    }
    (0..n).all(|i| {
        (0..n).all(|j| {
            let allowed = (i == 0 && j >= 1) || (j == n - 1 && i >= 1 && i < n - 1);
            allowed || num_traits::Zero::is_zero(m.get(i, j))
        })
    })
}

/// The `E_1n` coefficient of `[a, b]`; on the Heisenberg model the
/// commutator is this multiple of `E_1n`.
pub fn heisenberg_omega(a: &Mat, b: &Mat) -> Result<Rat> {
    let c = commutator(a, b)?;
    Ok(c.get(0, c.rows() - 1).clone())
}

/// Whether the span of `mats` is an (n-1)-dimensional subspace of the
/// Heisenberg model on which the commutator form vanishes.
pub fn is_lagrangian_in_heisenberg(n: usize, mats: &[Mat]) -> Result<bool> {
    for m in mats {
        if m.rows() != n || !in_heisenberg_model(m) {
            return Err(Error::NotInHeisenberg);
        }
    }
    let span = Subspace::from_vectors(n * n, mats.iter().map(Mat::vectorize));
    if span.dim() + 1 != n {
        return Ok(false);
    }
    for (i, a) in mats.iter().enumerate() {
        for b in &mats[i + 1..] {
            if !num_traits::Zero::is_zero(&heisenberg_omega(a, b)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, i: usize, j: usize) -> Mat {
        Mat::unit(n, i - 1, j - 1)
    }

    #[test]
    fn lagrangian_examples() {
        for n in 4..7 {
            let mut l: Vec<Mat> = (2..n).map(|j| &e(n, 1, j) + &e(n, j, n)).collect();
            l.push(e(n, 1, n));
            assert!(is_lagrangian_in_heisenberg(n, &l).unwrap());
            let lp: Vec<Mat> = (2..=n).map(|j| &e(n, 1, j) + &e(n, n - j + 1, n)).collect();
            assert!(is_lagrangian_in_heisenberg(n, &lp).unwrap());
            assert!(!is_lagrangian_in_heisenberg(n, &[e(n, 1, 2), e(n, 2, n)]).unwrap());
            let mut iso: Vec<Mat> = (2..n).map(|j| e(n, 1, j)).collect();
            iso.push(e(n, 2, n));
            assert!(!is_lagrangian_in_heisenberg(n, &iso).unwrap());
        }
        assert!(matches!(is_lagrangian_in_heisenberg(3, &[e(3, 2, 1)]), Err(Error::NotInHeisenberg)));
    }
}
