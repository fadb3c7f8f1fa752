// Small textbook routines used as independent oracles. Nothing here calls the
// library's elimination, determinant or polynomial code.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub type Q = num_rational::BigRational;

pub fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

/// Plain Gauss-Jordan; returns (rank, reduced rows).
pub fn rref(mut rows: Vec<Vec<Q>>) -> (usize, Vec<Vec<Q>>) {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Q::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let v = &rows[r][j] * &f;
                    rows[i][j] -= v;
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (r, rows)
}

pub fn rank(rows: &[Vec<Q>]) -> usize {
    rref(rows.to_vec()).0
}

/// Determinant by cofactor expansion along the first row (small sizes only).
pub fn det_cofactor(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    if n == 0 {
        return Q::one();
    }
    let mut acc = Q::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Q>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| x.clone()).collect()).collect();
        let t = &m[0][j] * det_cofactor(&minor);
        if j % 2 == 0 {
            acc += t;
        } else {
            acc -= t;
        }
    }
    acc
}

/// Determinant by elimination with row swaps (any size).
pub fn det_gauss(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= a[c][c].clone();
        for i in c + 1..n {
            let f = &a[i][c] / &a[c][c];
            for j in c..n {
                let v = &a[c][j] * &f;
                a[i][j] -= v;
            }
        }
    }
    d
}

/// One solution of `m x = b`, or `None`.
pub fn solve(m: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let ncols = m[0].len();
    let aug: Vec<Vec<Q>> = m.iter().zip(b).map(|(row, x)| row.iter().cloned().chain([x.clone()]).collect()).collect();
    let (_, red) = rref(aug);
    let mut x = vec![Q::zero(); ncols];
    for row in &red {
        let lead = row.iter().position(|v| !v.is_zero()).unwrap();
        if lead == ncols {
            return None;
        }
        x[lead] = row[ncols].clone();
    }
    Some(x)
}

pub fn matmul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let (n, k, m) = (a.len(), b.len(), b[0].len());
    (0..n).map(|i| (0..m).map(|j| (0..k).fold(Q::zero(), |s, l| s + &a[i][l] * &b[l][j])).collect()).collect()
}

pub fn flatten(a: &[Vec<Q>]) -> Vec<Q> {
    a.iter().flatten().cloned().collect()
}

/// Span dimension of the unital algebra generated by `gens`, by saturating
/// the set of all products.
pub fn closure_dim(n: usize, gens: &[Vec<Vec<Q>>]) -> usize {
    let id: Vec<Vec<Q>> = (0..n).map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()).collect();
    let mut span = vec![id];
    span.extend(gens.iter().cloned());
    let mut r = rank(&span.iter().map(|m| flatten(m)).collect::<Vec<_>>());
    loop {
        let mut grown = span.clone();
        for a in &span {
            for g in gens {
                grown.push(matmul(a, g));
            }
        }
        let (nr, red) = rref(grown.iter().map(|m| flatten(m)).collect());
        if nr == r {
            return r;
        }
        r = nr;
        span = red.into_iter().map(|v| v.chunks(n).map(|c| c.to_vec()).collect()).collect();
    }
}

/// Dimension of `{X : [b, X] = 0 for all b}`.
pub fn centralizer_dim(n: usize, basis: &[Vec<Vec<Q>>]) -> usize {
    let mut rows = Vec::new();
    for b in basis {
        for i in 0..n {
            for j in 0..n {
                // ([b, X])_{ij} = sum_l b_il X_lj - X_il b_lj, as a row in the n^2 unknowns X_{pq}
                let mut row = vec![Q::zero(); n * n];
                for l in 0..n {
                    row[l * n + j] += b[i][l].clone();
                    row[i * n + l] -= b[l][j].clone();
                }
                rows.push(row);
            }
        }
    }
    n * n - rank(&rows)
}
