use num_traits::{One, Zero};

use super::elim::{solve_rows, Echelon};
use super::Mat;
use crate::error::{Error, Result};
use crate::exact::rat::{int, Rat};
use crate::exact::Poly;

/// `det(X I - m)` by the Faddeev–LeVerrier recursion.
pub fn char_poly(m: &Mat) -> Result<Poly> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    let mut c = vec![Rat::zero(); n + 1];
    c[n] = Rat::one();
    let mut mk = Mat::zeros(n, n);
    let id = Mat::identity(n);
    for k in 1..=n {
        mk = &(m * &mk) + &id.scale(&c[n - k + 1]);
        let am = m * &mk;
        c[n - k] = -am.trace() / int(k as i64);
    }
    Ok(Poly::new(c))
}

/// Monic minimal polynomial, from the first linear dependence among
/// the vectorized powers `I, m, m^2, ...`.
pub fn min_poly(m: &Mat) -> Result<Poly> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    let mut powers: Vec<Vec<Rat>> = Vec::new();
    let mut span = Echelon::new(n * n);
    let mut p = Mat::identity(n);
    loop {
        let v = p.vectorize();
        if !span.insert(v.clone()) {
            // v = sum beta_i powers[i]; solve with the powers as columns.
            let d = powers.len();
            let rows: Vec<Vec<Rat>> = (0..n * n).map(|r| powers.iter().map(|col| col[r].clone()).collect()).collect();
            let beta = solve_rows(&rows, d, &v).expect("dependent power must be a combination");
            let mut coeffs: Vec<Rat> = beta.into_iter().map(|b| -b).collect();
            coeffs.push(Rat::one());
            return Ok(Poly::new(coeffs));
        }
        powers.push(v);
        p = &p * m;
    }
}

/// True iff the minimal and characteristic polynomials coincide.
pub fn is_nonderogatory(m: &Mat) -> bool {
    match (min_poly(m), char_poly(m)) {
        (Ok(a), Ok(b)) => a == b,
        _ => false,
    }
}
