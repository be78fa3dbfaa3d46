use crate::error::{Error, Result};
use crate::linalg::{hnf, Hnf, Matrix};
use crate::scalar::IntScalar;

/// A sublattice of `Z^n` held by its Hermite basis (row convention).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RowLattice<T> {
    basis: Matrix<T>,
    pivots: Vec<usize>,
}

impl<T: IntScalar> RowLattice<T> {
    /// Span of the rows of `generators`.
    pub fn span(generators: &Matrix<T>) -> Self {
        Self::from_hnf(&hnf(generators))
    }

    pub fn from_hnf(r: &Hnf<T>) -> Self {
        RowLattice {
            basis: r.basis(),
            pivots: r.pivots.clone(),
        }
    }

    pub fn zero(ambient: usize) -> Self {
        RowLattice {
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        RowLattice {
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn basis(&self) -> &Matrix<T> {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    /// Coefficients of `v` in the Hermite basis, or `None` when `v` lies
    /// outside the lattice.
    pub fn coordinates(&self, v: &[T]) -> Option<Vec<T>> {
        assert_eq!(v.len(), self.ambient_dim());
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        for (r, &c) in self.pivots.iter().enumerate() {
            let p = self.basis.get(r, c);
            let (q, rem) = rest[c].div_rem(p);
            if !rem.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for (x, b) in rest.iter_mut().zip(self.basis.row(r)) {
                    *x = x.clone() - q.clone() * b.clone();
                }
            }
            coords.push(q);
        }
        rest.iter().all(|x| x.is_zero()).then_some(coords)
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Checks `other ⊆ self`; on failure reports the first basis vector of
    /// `other` that escapes.
    pub fn check_contains(&self, other: &RowLattice<T>) -> Result<()> {
        for i in 0..other.rank() {
            let row = other.basis.row(i);
            if !self.contains(row) {
                return Err(Error::NotContained {
                    witness: format_vec(row),
                });
            }
        }
        Ok(())
    }

    pub fn is_sublattice_of(&self, other: &RowLattice<T>) -> bool {
        other.check_contains(self).is_ok()
    }
}

pub(crate) fn format_vec<T: IntScalar>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}
