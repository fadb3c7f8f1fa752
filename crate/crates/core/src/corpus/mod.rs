//! Builders for the matrix families used throughout the tests and the CLI.
//!
//! Bases are listed in the same order as in the literature the families
//! come from, so bracket tables can be compared index by index.

mod validate;

pub use validate::{validate, ExpectationCheck};

use crate::algebra::{closure, MatAlgebra};
use crate::classify::{Atom, ClassLabel};
use crate::error::{Error, Result};
use crate::exact::rat::int;
use crate::exact::Rat;
use crate::matrix::Mat;

/// What is known in advance about an entry. `None` means "not stated".
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expectation {
    pub closure_dim: Option<usize>,
    pub open_orbit: Option<bool>,
    /// Open-orbit witness on `(Q^n)^*`.
    pub witness: Option<Vec<Rat>>,
    /// Zero-based `k` such that `e_{k+1}^*` is a Frobenius functional on `B ⋉ Q^n`.
    pub frobenius_functional: Option<usize>,
    /// Whether `B ⋉ Q^n` admits any Frobenius functional.
    pub frobenius: Option<bool>,
    pub masa: Option<bool>,
    pub freedom_degree: Option<usize>,
    pub label: Option<ClassLabel>,
    pub derivation_dim: Option<usize>,
    pub normalizer_dim: Option<usize>,
    pub cartan: Option<bool>,
}

/// One built family member.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub params: Vec<usize>,
    pub generators: Vec<Mat>,
    pub algebra: MatAlgebra,
    /// A nonderogatory `M` with `algebra = K[M]`, when the family is given that way.
    pub matrix: Option<Mat>,
    pub expected: Expectation,
}

impl CorpusEntry {
    pub fn n(&self) -> usize {
        self.algebra.n()
    }
}

/// Family names accepted by [`build`], with their parameter lists.
pub const FAMILIES: &[(&str, &str)] = &[
    ("gerstenhaber4", ""),
    ("B31", ""),
    ("B42", ""),
    ("Bnp", "n p"),
    ("D0", "n"),
    ("D01", "n"),
    ("affR", ""),
    ("affC", ""),
    ("Bnn", "n"),
    ("BnnPrime", "n"),
    ("Ln", "n"),
    ("circperm", "n"),
    ("winternitz", "i"),
    ("cartan_form", "n k"),
];

/// `E_{i,j}` in `gl(n)`, one-based.
pub fn e(n: usize, i: usize, j: usize) -> Mat {
    Mat::unit(n, i - 1, j - 1)
}

fn sum(n: usize, terms: impl IntoIterator<Item = (i64, usize, usize)>) -> Mat {
    let mut m = Mat::zeros(n, n);
    for (c, i, j) in terms {
        m.set(i - 1, j - 1, m.get(i - 1, j - 1) + int(c));
    }
    m
}

/// `sum_{l=1}^p E_{l,l+1}`.
pub fn m_np(n: usize, p: usize) -> Mat {
    sum(n, (1..=p).map(|l| (1, l, l + 1)))
}

/// The principal nilpotent `sum E_{i,i+1}`.
pub fn m0(n: usize) -> Mat {
    m_np(n, n - 1)
}

/// `M_s + M_n` for even `n`: rotation blocks plus `sum E_{j,j+2}`.
pub fn m01(n: usize) -> Mat {
    let ms = sum(n, (0..n / 2).flat_map(|j| [(-1, 2 * j + 1, 2 * j + 2), (1, 2 * j + 2, 2 * j + 1)]));
    let mn = sum(n, (1..=n.saturating_sub(2)).map(|j| (1, j, j + 2)));
    &ms + &mn
}

/// `E_{1,n} + sum E_{i+1,i}`.
pub fn circular_permutation(n: usize) -> Mat {
    sum(n, std::iter::once((1, 1, n)).chain((1..n).map(|i| (1, i + 1, i))))
}

fn powers(m: &Mat) -> Vec<Mat> {
    (0..m.rows() as u32).map(|k| m.pow(k)).collect()
}

fn invalid(family: &str, reason: impl Into<String>) -> Error {
    Error::InvalidParams { family: family.into(), reason: reason.into() }
}

fn expect_params(family: &str, params: &[usize], count: usize) -> Result<()> {
    if params.len() != count {
        return Err(invalid(family, format!("expected {count} parameter(s), got {}", params.len())));
    }
    Ok(())
}

fn dual(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![int(0); n];
    v[i] = int(1);
    v
}

/// Entry for `K[m]` with basis `I, m, ..., m^{n-1}`.
fn polynomial_entry(name: &str, params: Vec<usize>, m: Mat, expected: Expectation) -> Result<CorpusEntry> {
    let n = m.rows();
    let algebra = MatAlgebra::new(n, powers(&m))?;
    Ok(CorpusEntry { name: name.into(), params, generators: vec![m.clone()], algebra, matrix: Some(m), expected })
}

/// An entry whose algebra is written out basis element by basis element.
fn basis_entry(name: &str, params: Vec<usize>, basis: Vec<Mat>, expected: Expectation) -> Result<CorpusEntry> {
    let n = basis[0].rows();
    let generators = basis[1..].to_vec();
    let algebra = MatAlgebra::new(n, basis)?;
    Ok(CorpusEntry { name: name.into(), params, generators, algebra, matrix: None, expected })
}

fn frobenius_family(n: usize, freedom: Option<usize>) -> Expectation {
    Expectation {
        closure_dim: Some(n),
        open_orbit: Some(true),
        witness: Some(dual(n, 0)),
        frobenius_functional: Some(n),
        frobenius: Some(true),
        masa: Some(true),
        freedom_degree: freedom,
        ..Expectation::default()
    }
}

pub fn build(name: &str, params: &[usize]) -> Result<CorpusEntry> {
    let p = params.to_vec();
    match name {
        "gerstenhaber4" => {
            expect_params(name, params, 0)?;
            let generators = vec![e(4, 1, 3), e(4, 1, 4), e(4, 2, 3), e(4, 2, 4)];
            let algebra = closure(4, &generators)?;
            let expected = Expectation { closure_dim: Some(5), ..Expectation::default() };
            Ok(CorpusEntry { name: name.into(), params: p, generators, algebra, matrix: None, expected })
        }
        "B31" | "G31" => {
            expect_params(name, params, 0)?;
            let mut entry = basis_entry("B31", p, vec![Mat::identity(3), e(3, 1, 2), e(3, 1, 3)], frobenius_family(3, Some(2)))?;
            entry.expected.frobenius_functional = Some(3);
            Ok(entry)
        }
        "B42" => {
            expect_params(name, params, 0)?;
            let m1 = &e(4, 1, 2) + &e(4, 2, 3);
            let m2 = e(4, 1, 4);
            let mut entry = basis_entry(name, p, vec![Mat::identity(4), m1.clone(), e(4, 1, 3), m2.clone()], frobenius_family(4, Some(2)))?;
            entry.generators = vec![m1, m2];
            Ok(entry)
        }
        "Bnp" => {
            expect_params(name, params, 2)?;
            let (n, q) = (params[0], params[1]);
            if n < 2 || q < 1 || q >= n {
                return Err(invalid(name, "need n >= 2 and 1 <= p <= n-1"));
            }
            let m = m_np(n, q);
            let mut basis: Vec<Mat> = (0..=q as u32).map(|k| m.pow(k)).collect();
            basis.extend((q + 2..=n).map(|j| e(n, 1, j)));
            let mut entry = basis_entry(name, p, basis, frobenius_family(n, Some(n - q)))?;
            entry.generators = std::iter::once(m).chain((q + 2..=n).map(|j| e(n, 1, j))).collect();
            Ok(entry)
        }
        "D0" => {
            expect_params(name, params, 1)?;
            let n = params[0];
            if n < 1 {
                return Err(invalid(name, "need n >= 1"));
            }
            let mut ex = frobenius_family(n, Some(usize::from(n > 1)));
            ex.label = Some(ClassLabel::new(vec![Atom::RealBlock(n)]));
            ex.derivation_dim = Some(3 * n - 1);
            ex.normalizer_dim = Some(2 * n - 1);
            ex.cartan = Some(n == 1);
            polynomial_entry(name, p, m0(n), ex)
        }
        "D01" => {
            expect_params(name, params, 1)?;
            let n = params[0];
            if n < 2 || n % 2 == 1 {
                return Err(invalid(name, "need even n >= 2"));
            }
            let ex = Expectation {
                closure_dim: Some(n),
                open_orbit: Some(true),
                frobenius: Some(true),
                masa: Some(true),
                label: Some(ClassLabel::new(vec![Atom::ComplexBlock(n / 2)])),
                derivation_dim: (n == 4).then_some(10),
                normalizer_dim: (n == 4).then_some(6),
                cartan: Some(n == 2),
                ..Expectation::default()
            };
            polynomial_entry(name, p, m01(n), ex)
        }
        "affR" => {
            expect_params(name, params, 0)?;
            let ex = Expectation {
                closure_dim: Some(1),
                open_orbit: Some(true),
                witness: Some(dual(1, 0)),
                frobenius_functional: Some(1),
                frobenius: Some(true),
                masa: Some(true),
                label: Some(ClassLabel::new(vec![Atom::RealBlock(1)])),
                derivation_dim: Some(2),
                normalizer_dim: Some(1),
                cartan: Some(true),
                ..Expectation::default()
            };
            polynomial_entry(name, p, Mat::identity(1), ex)
        }
        "affC" => {
            expect_params(name, params, 0)?;
            let ex = Expectation {
                closure_dim: Some(2),
                open_orbit: Some(true),
                witness: Some(dual(2, 0)),
                frobenius_functional: Some(2),
                frobenius: Some(true),
                masa: Some(true),
                label: Some(ClassLabel::new(vec![Atom::ComplexBlock(1)])),
                derivation_dim: Some(4),
                cartan: Some(true),
                ..Expectation::default()
            };
            polynomial_entry(name, p, sum(2, [(1, 2, 1), (-1, 1, 2)]), ex)
        }
        "Bnn" => {
            expect_params(name, params, 1)?;
            let n = params[0];
            if n < 3 {
                return Err(invalid(name, "need n >= 3"));
            }
            let mut basis = vec![Mat::identity(n)];
            basis.extend((2..n).map(|j| &e(n, 1, j) + &e(n, j, n)));
            basis.push(e(n, 1, n));
            basis_entry(name, p, basis, frobenius_family(n, None))
        }
        "BnnPrime" => {
            expect_params(name, params, 1)?;
            let n = params[0];
            if n < 3 {
                return Err(invalid(name, "need n >= 3"));
            }
            let mut basis = vec![Mat::identity(n)];
            basis.extend((2..=n).map(|j| &e(n, 1, j) + &e(n, n - j + 1, n)));
            basis_entry(name, p, basis, frobenius_family(n, None))
        }
        "Ln" => {
            expect_params(name, params, 1)?;
            let n = params[0];
            if n < 3 {
                return Err(invalid(name, "need n >= 3"));
            }
            let mut basis = vec![Mat::identity(n)];
            basis.extend((1..n).map(|i| e(n, i, n)));
            let ex = Expectation {
                closure_dim: Some(n),
                open_orbit: Some(false),
                frobenius: Some(false),
                masa: Some(true),
                ..Expectation::default()
            };
            basis_entry(name, p, basis, ex)
        }
        "circperm" => {
            expect_params(name, params, 1)?;
            let n = params[0];
            if n < 2 {
                return Err(invalid(name, "need n >= 2"));
            }
            let label = match n {
                2 => Some(vec![Atom::RealBlock(1); 2]),
                3 => Some(vec![Atom::RealBlock(1), Atom::ComplexBlock(1)]),
                4 => Some(vec![Atom::RealBlock(1), Atom::RealBlock(1), Atom::ComplexBlock(1)]),
                5 => Some(vec![Atom::RealBlock(1), Atom::ComplexBlock(1), Atom::ComplexBlock(1)]),
                7 => Some(vec![Atom::RealBlock(1), Atom::ComplexBlock(1), Atom::ComplexBlock(1), Atom::ComplexBlock(1)]),
                _ => None,
            };
            let ex = Expectation {
                closure_dim: Some(n),
                open_orbit: Some(true),
                witness: Some(dual(n, 0)),
                frobenius: Some(true),
                masa: Some(true),
                label: label.map(ClassLabel::new),
                derivation_dim: Some(2 * n),
                cartan: Some(true),
                ..Expectation::default()
            };
            polynomial_entry(name, p, circular_permutation(n), ex)
        }
        "winternitz" => {
            expect_params(name, params, 1)?;
            winternitz(params[0])
        }
        "cartan_form" => {
            expect_params(name, params, 2)?;
            let (n, k) = (params[0], params[1]);
            if n < 1 || 2 * k > n {
                return Err(invalid(name, "need n >= 1 and 0 <= 2k <= n"));
            }
            let mut basis = Vec::new();
            for j in 0..k {
                basis.push(sum(n, [(1, 2 * j + 1, 2 * j + 1), (1, 2 * j + 2, 2 * j + 2)]));
            }
            for j in 0..k {
                basis.push(sum(n, [(-1, 2 * j + 1, 2 * j + 2), (1, 2 * j + 2, 2 * j + 1)]));
            }
            basis.extend((2 * k + 1..=n).map(|s| e(n, s, s)));
            let mut atoms = vec![Atom::ComplexBlock(1); k];
            atoms.extend(vec![Atom::RealBlock(1); n - 2 * k]);
            let ex = Expectation {
                closure_dim: Some(n),
                open_orbit: Some(true),
                frobenius: Some(true),
                masa: Some(true),
                label: Some(ClassLabel::new(atoms)),
                derivation_dim: Some(2 * n),
                cartan: Some(true),
                ..Expectation::default()
            };
            let mut entry = basis_entry(name, p, basis, ex)?;
            entry.generators = entry.algebra.basis().to_vec();
            Ok(entry)
        }
        _ => Err(Error::UnknownFamily(name.into())),
    }
}

fn winternitz(i: usize) -> Result<CorpusEntry> {
    let name = "winternitz";
    let id = Mat::identity(3);
    let real3 = || ClassLabel::new(vec![Atom::RealBlock(1); 3]);
    let (basis, s, label, frob): (Vec<Mat>, Option<Mat>, Option<ClassLabel>, bool) = match i {
        1 => (
            vec![id, sum(3, [(1, 1, 1), (-1, 2, 2)]), sum(3, [(1, 1, 1), (1, 2, 2), (-2, 3, 3)])],
            Some(sum(3, [(1, 1, 1), (-1, 3, 3)])),
            Some(real3()),
            true,
        ),
        2 => (
            vec![id, sum(3, [(1, 1, 1), (1, 2, 2), (-2, 3, 3)]), sum(3, [(1, 1, 2), (-1, 2, 1)])],
            Some(sum(3, [(1, 1, 2), (-1, 2, 1)])),
            Some(ClassLabel::new(vec![Atom::RealBlock(1), Atom::ComplexBlock(1)])),
            true,
        ),
        3 => (
            vec![id, sum(3, [(1, 1, 1), (1, 2, 2), (-2, 3, 3)]), e(3, 1, 2)],
            Some(sum(3, [(1, 1, 2), (1, 3, 3)])),
            Some(ClassLabel::new(vec![Atom::RealBlock(1), Atom::RealBlock(2)])),
            true,
        ),
        4 => (vec![id, e(3, 1, 3), e(3, 2, 3)], None, None, false),
        5 => (vec![id, e(3, 1, 2), e(3, 1, 3)], None, None, true),
        6 => (vec![id, &e(3, 1, 2) + &e(3, 2, 3), e(3, 1, 3)], Some(m0(3)), Some(ClassLabel::new(vec![Atom::RealBlock(3)])), true),
        _ => return Err(invalid(name, "i must be in 1..=6")),
    };
    let expected = Expectation {
        closure_dim: Some(3),
        open_orbit: Some(frob),
        frobenius: Some(frob),
        masa: Some(true),
        label,
        cartan: Some(i <= 2),
        ..Expectation::default()
    };
    let mut entry = basis_entry(name, vec![i], basis, expected)?;
    entry.matrix = s;
    Ok(entry)
}

/// Every entry used by the self-validation suite.
pub fn standard_entries() -> Vec<CorpusEntry> {
    let mut list: Vec<(&str, Vec<usize>)> = vec![("gerstenhaber4", vec![]), ("B31", vec![]), ("B42", vec![])];
    for n in 2..=6 {
        for q in 1..n {
            list.push(("Bnp", vec![n, q]));
        }
    }
    for n in 1..=6 {
        list.push(("D0", vec![n]));
    }
    for n in [2, 4, 6] {
        list.push(("D01", vec![n]));
    }
    list.push(("affR", vec![]));
    list.push(("affC", vec![]));
    for n in 3..=6 {
        list.push(("Bnn", vec![n]));
        list.push(("BnnPrime", vec![n]));
    }
    for n in 3..=5 {
        list.push(("Ln", vec![n]));
    }
    for n in 2..=7 {
        list.push(("circperm", vec![n]));
    }
    for i in 1..=6 {
        list.push(("winternitz", vec![i]));
    }
    for n in 1..=5 {
        for k in 0..=n / 2 {
            list.push(("cartan_form", vec![n, k]));
        }
    }
    list.into_iter().map(|(nm, p)| build(nm, &p).expect("standard entry builds")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Poly;
    use crate::matrix::{char_poly, min_poly};

    #[test]
    fn printed_matrices() {
        assert_eq!(m01(2), sum(2, [(1, 2, 1), (-1, 1, 2)]));
        assert_eq!(m01(4), sum(4, [(1, 2, 1), (-1, 1, 2), (1, 4, 3), (-1, 3, 4), (1, 1, 3), (1, 2, 4)]));
        assert_eq!(char_poly(&m01(4)).unwrap(), Poly::from_ints(&[1, 0, 1]).pow(2));
        assert_eq!(char_poly(&circular_permutation(5)).unwrap(), Poly::from_ints(&[-1, 0, 0, 0, 0, 1]));
        let p = build("BnnPrime", &[4]).unwrap();
        assert_eq!(p.algebra.basis()[3], e(4, 1, 4).scale(&int(2)));
    }

    #[test]
    fn bnn_minimal_polynomial() {
        for n in 4..=6 {
            let b = build("Bnn", &[n]).unwrap();
            // m1 e1 + ... with some middle coefficient nonzero
            let mut m = b.algebra.basis()[0].scale(&int(3));
            m = &m + &b.algebra.basis()[1].scale(&int(-2));
            m = &m + &b.algebra.basis()[n - 1];
            assert_eq!(min_poly(&m).unwrap(), Poly::from_ints(&[-3, 1]).pow(3));
        }
    }

    #[test]
    fn rejects_bad_params() {
        assert!(matches!(build("D01", &[3]), Err(Error::InvalidParams { .. })));
        assert!(matches!(build("Bnp", &[4, 4]), Err(Error::InvalidParams { .. })));
        assert!(matches!(build("nope", &[]), Err(Error::UnknownFamily(_))));
        assert!(matches!(build("winternitz", &[7]), Err(Error::InvalidParams { .. })));
        assert!(matches!(build("D0", &[]), Err(Error::InvalidParams { .. })));
    }
}
