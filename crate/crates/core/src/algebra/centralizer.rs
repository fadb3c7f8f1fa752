use super::{MatAlgebra, Subspace};
use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::matrix::{commutator, elim::kernel_of_rows, Mat};

/// Kernel of the linear map on `gl(n)` whose value on the matrix unit
/// `E_pq` (index `p*n + q`) is `image(p, q)`.
fn kernel_on_gl(n: usize, image: impl Fn(&Mat) -> Vec<Rat>) -> Vec<Mat> {
    let cols: Vec<Vec<Rat>> = (0..n * n).map(|k| image(&Mat::unit(n, k / n, k % n))).collect();
    let out = cols.first().map_or(0, |c| c.len());
    let rows = (0..out)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect::<Vec<Rat>>())
        .filter(|r| r.iter().any(|x| !num_traits::Zero::is_zero(x)));
    kernel_of_rows(n * n, rows).into_iter().map(|v| Mat::from_vec(n, &v)).collect()
}

/// `{X in gl(n) : [X, b_i] = 0 for all i}`.
pub fn centralizer(b: &MatAlgebra) -> MatAlgebra {
    let n = b.n();
    let basis = kernel_on_gl(n, |x| {
        b.basis().iter().flat_map(|bi| commutator(x, bi).unwrap().vectorize()).collect()
    });
    MatAlgebra::new(n, basis).expect("kernel basis is independent")
}

/// `{X in gl(n) : [X, b_i] in span(b) for all i}`, computed modulo span(b)
/// through its echelon complement.
pub fn normalizer(b: &MatAlgebra) -> MatAlgebra {
    let n = b.n();
    let span: &Subspace = b.span();
    let basis = kernel_on_gl(n, |x| {
        b.basis().iter().flat_map(|bi| span.reduce(&commutator(x, bi).unwrap().vectorize())).collect()
    });
    MatAlgebra::new(n, basis).expect("kernel basis is independent")
}

/// Whether a commutative `b` equals its own centralizer.
pub fn is_masa(b: &MatAlgebra) -> Result<bool> {
    if !b.is_commutative() {
        return Err(Error::NotCommutative);
    }
    Ok(centralizer(b).span() == b.span())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::closure;

    fn e(n: usize, i: usize, j: usize) -> Mat {
        Mat::unit(n, i - 1, j - 1)
    }

    fn m0(n: usize) -> Mat {
        (1..n).fold(Mat::zeros(n, n), |acc, i| &acc + &e(n, i, i + 1))
    }

    #[test]
    fn centralizer_examples() {
        for n in 1..5 {
            let k = closure(n, &[m0(n)]).unwrap();
            let c = centralizer(&k);
            assert_eq!(c.dim(), n);
            assert!(c.same_span(&k));
        }
        let id = closure(3, &[]).unwrap();
        assert_eq!(centralizer(&id).dim(), 9);
    }

    #[test]
    fn masa_examples() {
        let b31 = closure(3, &[e(3, 1, 2), e(3, 1, 3)]).unwrap();
        assert!(is_masa(&b31).unwrap());
        let small = closure(3, &[e(3, 1, 2)]).unwrap();
        assert!(!is_masa(&small).unwrap());
        let nc = MatAlgebra::new(2, vec![e(2, 1, 2), e(2, 2, 1)]).unwrap();
        assert!(matches!(is_masa(&nc), Err(Error::NotCommutative)));
    }

    #[test]
    fn normalizer_examples() {
        let n2 = normalizer(&closure(2, &[e(2, 1, 2)]).unwrap());
        assert_eq!(n2.dim(), 3);
        let expected = MatAlgebra::new(2, vec![e(2, 1, 1), e(2, 1, 2), e(2, 2, 2)]).unwrap();
        assert!(n2.same_span(&expected));
        assert_eq!(normalizer(&closure(3, &[m0(3)]).unwrap()).dim(), 5);
        // M_s + M_n for n = 4
        let m01 = &(&(&(&(&e(4, 2, 1) - &e(4, 1, 2)) + &e(4, 4, 3)) - &e(4, 3, 4)) + &e(4, 1, 3)) + &e(4, 2, 4);
        assert_eq!(normalizer(&closure(4, &[m01]).unwrap()).dim(), 6);
    }
}
