//! Elimination: incremental reduced echelon form, kernels, solves, and a
//! fraction-free determinant.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exact::rat::{primitive_integer, Rat};

/// Row space kept in reduced row echelon form.
///
/// Rows are sorted by pivot column, every pivot entry is 1 and every other
/// row is zero in that column. Pivots are taken as the first nonzero entry
/// in column order, so the stored rows depend only on the span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Echelon {
        Echelon { ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_rows<I: IntoIterator<Item = Vec<Rat>>>(ncols: usize, rows: I) -> Echelon {
        let mut e = Echelon::new(ncols);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its component along the stored rows; zero at every pivot.
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.ncols, "vector length");
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            axpy(&mut v, &c, row);
        }
        v
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Coefficients of `v` with respect to the stored rows, if `v` is in the span.
    pub fn coordinates(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<Rat>) -> bool {
        let mut r = self.reduce(&v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        for x in r.iter_mut().skip(p) {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for row in &mut self.rows {
            if !row[p].is_zero() {
                let c = row[p].clone();
                axpy(row, &c, &r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }

    /// Right null space of the stored rows: one primitive integer vector
    /// per non-pivot column, with a positive entry in that column.
    pub fn null_space(&self) -> Vec<Vec<Rat>> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for f in (0..self.ncols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Rat::zero(); self.ncols];
            v[f] = Rat::one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                if !row[f].is_zero() {
                    v[p] = -&row[f];
                }
            }
            out.push(primitive_integer(&v));
        }
        out
    }
}

/// `v -= c * w`, skipping zeros of `w`.
fn axpy(v: &mut [Rat], c: &Rat, w: &[Rat]) {
    for (x, y) in v.iter_mut().zip(w) {
        if !y.is_zero() {
            *x -= c * y;
        }
    }
}

/// Right null space of the matrix whose rows are given.
pub fn kernel_of_rows(ncols: usize, rows: impl IntoIterator<Item = Vec<Rat>>) -> Vec<Vec<Rat>> {
    Echelon::from_rows(ncols, rows).null_space()
}

/// One solution of `A x = b` (free variables set to zero), or `None`.
pub fn solve_rows(rows: &[Vec<Rat>], ncols: usize, b: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(rows.len(), b.len(), "right-hand side length");
    let aug = rows.iter().zip(b).map(|(r, bi)| {
        let mut v = r.clone();
        v.push(bi.clone());
        v
    });
    let e = Echelon::from_rows(ncols + 1, aug);
    if e.pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Rat::zero(); ncols];
    for (row, &p) in e.rows.iter().zip(&e.pivots) {
        x[p] = row[ncols].clone();
    }
    Some(x)
}

/// Determinant by Bareiss elimination after clearing denominators row by row.
pub fn bareiss_det(rows: &[Vec<Rat>]) -> Rat {
    let n = rows.len();
    if n == 0 {
        return Rat::one();
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), n, "determinant of a non-square matrix");
            let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &l;
            let lr = Rat::from_integer(l);
            r.iter().map(|x| (x * &lr).to_integer()).collect()
        })
        .collect();
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return Rat::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    Rat::new(a[n - 1][n - 1].clone() * sign, scale)
}
