use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{squarefree_decompose, sturm_real_root_count};
use crate::matrix::{char_poly, is_nonderogatory, Mat};

/// Root counts of one squarefree level of the characteristic polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProfileEntry {
    pub multiplicity: usize,
    pub real_roots: usize,
    pub complex_pairs: usize,
}

/// Distinct eigenvalues grouped by multiplicity, split into real roots and
/// conjugate pairs. Entries are sorted by multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EigProfile {
    pub entries: Vec<ProfileEntry>,
}

impl EigProfile {
    /// `sum e (r_e + 2 c_e)`, the matrix size.
    pub fn size(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity * (e.real_roots + 2 * e.complex_pairs)).sum()
    }
}

impl fmt::Display for EigProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|e| format!("(e={}, real={}, pairs={})", e.multiplicity, e.real_roots, e.complex_pairs))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub fn eig_profile(m: &Mat) -> Result<EigProfile> {
    let chi = char_poly(m)?;
    let mut entries = Vec::new();
    for (g, e) in squarefree_decompose(&chi)? {
        let r = sturm_real_root_count(&g)?;
        let deg = g.degree().unwrap();
        entries.push(ProfileEntry { multiplicity: e, real_roots: r, complex_pairs: (deg - r) / 2 });
    }
    entries.sort();
    Ok(EigProfile { entries })
}

/// An indecomposable summand of `G_M` for nonderogatory `M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    /// One real eigenvalue of multiplicity `k`: `aff(R)` for `k = 1`, else `D0^k`.
    RealBlock(usize),
    /// One conjugate pair of multiplicity `m`: `aff(C)` for `m = 1`, else
    /// the `4m`-dimensional `D0,1` summand.
    ComplexBlock(usize),
}

impl Atom {
    /// Size of the matrix block.
    pub fn size(&self) -> usize {
        match *self {
            Atom::RealBlock(k) => k,
            Atom::ComplexBlock(m) => 2 * m,
        }
    }

    /// The name indexed by matrix size, as in `D0,1^4` for `ComplexBlock(2)`.
    pub fn matrix_form(&self) -> String {
        match *self {
            Atom::RealBlock(1) => "aff(R)".into(),
            Atom::ComplexBlock(1) => "aff(C)".into(),
            Atom::RealBlock(k) => format!("D0^{k}"),
            Atom::ComplexBlock(m) => format!("D0,1^{}", 2 * m),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Atom::ComplexBlock(m) if m >= 2 => write!(f, "D0,1(m={m})"),
            _ => write!(f, "{}", self.matrix_form()),
        }
    }
}

/// Multiset of atoms, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassLabel {
    atoms: Vec<Atom>,
}

impl ClassLabel {
    pub fn new(mut atoms: Vec<Atom>) -> ClassLabel {
        atoms.sort();
        ClassLabel { atoms }
    }

    pub fn from_profile(p: &EigProfile) -> ClassLabel {
        let mut atoms = Vec::new();
        for e in &p.entries {
            atoms.extend(std::iter::repeat_n(Atom::RealBlock(e.multiplicity), e.real_roots));
            atoms.extend(std::iter::repeat_n(Atom::ComplexBlock(e.multiplicity), e.complex_pairs));
        }
        ClassLabel::new(atoms)
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    /// Matrix size `n`; the Lie algebra has dimension `2n`.
    pub fn n(&self) -> usize {
        self.atoms.iter().map(Atom::size).sum()
    }

    fn render(&self, name: impl Fn(&Atom) -> String) -> String {
        let mut counts: BTreeMap<Atom, usize> = BTreeMap::new();
        for a in &self.atoms {
            *counts.entry(*a).or_default() += 1;
        }
        let parts: Vec<String> = counts
            .iter()
            .map(|(a, &c)| if c == 1 { name(a) } else { format!("{c}·{}", name(a)) })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" ⊕ ")
        }
    }

    /// Rendering with complex blocks indexed by matrix size.
    pub fn matrix_form(&self) -> String {
        self.render(Atom::matrix_form)
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(|a| a.to_string()))
    }
}

/// Direct-sum label of `G_M` for nonderogatory `M`.
pub fn classify_gm(m: &Mat) -> Result<ClassLabel> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    if !is_nonderogatory(m) {
        return Err(Error::Derogatory);
    }
    Ok(ClassLabel::from_profile(&eig_profile(m)?))
}

/// Whether `G_{m1}` and `G_{m2}` carry the same label.
pub fn iso_gm(m1: &Mat, m2: &Mat) -> Result<bool> {
    Ok(classify_gm(m1)? == classify_gm(m2)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::int;

    fn e(n: usize, i: usize, j: usize) -> Mat {
        Mat::unit(n, i - 1, j - 1)
    }

    fn m0(n: usize) -> Mat {
        (1..n).fold(Mat::zeros(n, n), |acc, i| &acc + &e(n, i, i + 1))
    }

    fn circ(n: usize) -> Mat {
        (1..n).fold(e(n, 1, n), |acc, i| &acc + &e(n, i + 1, i))
    }

    fn m01_4() -> Mat {
        &(&(&(&(&e(4, 2, 1) - &e(4, 1, 2)) + &e(4, 4, 3)) - &e(4, 3, 4)) + &e(4, 1, 3)) + &e(4, 2, 4)
    }

    fn entry(e: usize, r: usize, c: usize) -> ProfileEntry {
        ProfileEntry { multiplicity: e, real_roots: r, complex_pairs: c }
    }

    #[test]
    fn profiles() {
        assert_eq!(eig_profile(&m0(3)).unwrap().entries, vec![entry(3, 1, 0)]);
        assert_eq!(eig_profile(&m01_4()).unwrap().entries, vec![entry(2, 0, 1)]);
        assert_eq!(eig_profile(&circ(4)).unwrap().entries, vec![entry(1, 2, 1)]);
        assert_eq!(eig_profile(&circ(7)).unwrap().size(), 7);
    }

    #[test]
    fn labels() {
        use Atom::*;
        assert_eq!(classify_gm(&circ(3)).unwrap(), ClassLabel::new(vec![RealBlock(1), ComplexBlock(1)]));
        let l7 = classify_gm(&circ(7)).unwrap();
        assert_eq!(l7.to_string(), "aff(R) ⊕ 3·aff(C)");
        assert_eq!(classify_gm(&m0(5)).unwrap(), ClassLabel::new(vec![RealBlock(5)]));
        let l = classify_gm(&m01_4()).unwrap();
        assert_eq!(l.to_string(), "D0,1(m=2)");
        assert_eq!(l.matrix_form(), "D0,1^4");
        assert!(matches!(classify_gm(&Mat::identity(2)), Err(Error::Derogatory)));
    }

    #[test]
    fn isomorphism() {
        let p = Mat::from_ints(&[&[1, 2, 0], &[0, 1, 0], &[3, 0, 1]]);
        let shifted = &(&(&p * &m0(3)) * &p.inverse().unwrap()) + &Mat::identity(3).scale(&int(5));
        assert!(iso_gm(&m0(3), &shifted).unwrap());
        assert!(!iso_gm(&m0(4), &m01_4()).unwrap());
        assert!(iso_gm(&circ(2), &Mat::diag(&[int(1), int(-1)])).unwrap());
    }
}
