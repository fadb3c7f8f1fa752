use crate::exact::Rat;
use crate::matrix::Echelon;

/// A linear subspace of `Q^ambient`, stored by its reduced echelon basis.
///
/// Equal subspaces have identical stored bases, so `==` is equality of spans.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    echelon: Echelon,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Subspace {
        Subspace { echelon: Echelon::new(ambient) }
    }

    pub fn from_vectors<I: IntoIterator<Item = Vec<Rat>>>(ambient: usize, vs: I) -> Subspace {
        Subspace { echelon: Echelon::from_rows(ambient, vs) }
    }

    pub fn ambient(&self) -> usize {
        self.echelon.ncols()
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    /// The canonical (reduced echelon) basis.
    pub fn basis(&self) -> &[Vec<Rat>] {
        self.echelon.rows()
    }

    pub fn pivots(&self) -> &[usize] {
        self.echelon.pivots()
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.echelon.contains(v)
    }

    /// Adds a vector; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<Rat>) -> bool {
        self.echelon.insert(v)
    }

    /// Coordinates in the canonical basis.
    pub fn coordinates(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        self.echelon.coordinates(v)
    }

    /// Representative of `v` modulo the subspace, in the complement spanned
    /// by the non-pivot coordinate axes.
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        self.echelon.reduce(v)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient() == other.ambient() && self.basis().iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in other.basis() {
            s.insert(v.clone());
        }
        s
    }
}
