//! Exact integer linear algebra.
//!
//! Row-vector convention throughout: a matrix `A` with `m` rows acts on row
//! vectors `x ∈ Zᵐ` by `x ↦ x·A`, lattices are row spans, and cokernels are
//! `Z^cols` modulo the row span.

mod hnf;
mod lattice;
mod matrix;
mod snf;

pub use hnf::{hnf, Hnf};
pub use lattice::RowLattice;
pub(crate) use lattice::format_vec;
pub use matrix::Matrix;
pub use snf::{invariant_factors, snf, Snf};

use crate::scalar::IntScalar;

/// Basis of `{x : x·A = 0}`, rows in Hermite form.
pub fn kernel_basis<T: IntScalar>(a: &Matrix<T>) -> Matrix<T> {
    let r = hnf(a);
    let zero_rows: Vec<usize> = (r.rank()..a.rows()).collect();
    let gens = r.transform.select_rows(&zero_rows);
    if gens.rows() == 0 {
        return Matrix::zeros(0, a.rows());
    }
    hnf(&gens).basis()
}

/// Free rank and torsion (each factor > 1, each dividing the next) of
/// `Z^cols / rowspan(A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cokernel<T> {
    pub free_rank: usize,
    pub torsion: Vec<T>,
}

pub fn cokernel_invariants<T: IntScalar>(a: &Matrix<T>) -> Cokernel<T> {
    let factors = invariant_factors(a);
    Cokernel {
        free_rank: a.cols() - factors.len(),
        torsion: factors.into_iter().filter(|d| !d.is_one()).collect(),
    }
}

/// Some `x` with `x·A = b`, if one exists over the integers.
pub fn solve_left<T: IntScalar>(a: &Matrix<T>, b: &[T]) -> Option<Vec<T>> {
    assert_eq!(b.len(), a.cols());
    let r = hnf(a);
    let lattice_coords = RowLattice::from_hnf(&r).coordinates(b)?;
    let mut y = vec![T::zero(); a.rows()];
    for (slot, c) in y.iter_mut().zip(lattice_coords) {
        *slot = c;
    }
    Some(r.transform.left_mul_vec(&y))
}

pub fn rank<T: IntScalar>(a: &Matrix<T>) -> usize {
    hnf(a).rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_identity_and_zero() {
        assert_eq!(kernel_basis(&Matrix::<i64>::identity(3)).rows(), 0);
        assert_eq!(kernel_basis(&Matrix::<i64>::zeros(2, 2)), Matrix::identity(2));
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let a = Matrix::<i64>::from_i32_rows(&[&[1, 2], &[2, 4], &[3, 6], &[0, 1]]);
        let k = kernel_basis(&a);
        assert_eq!(k.rows(), 2);
        assert!((&k * &a).is_zero());
    }

    #[test]
    fn cokernel_examples() {
        let c = cokernel_invariants(&Matrix::<i64>::from_i32_rows(&[&[2]]));
        assert_eq!((c.free_rank, c.torsion), (0, vec![2]));
        let d = Matrix::<i64>::diagonal(3, 4, &[1, 4, 6]);
        let c = cokernel_invariants(&d);
        assert_eq!((c.free_rank, c.torsion), (1, vec![2, 12]));
    }

    #[test]
    fn solve_left_finds_combination() {
        let a = Matrix::<i64>::from_i32_rows(&[&[2, 4], &[0, 3], &[2, 7]]);
        let x = solve_left(&a, &[4, 5]).unwrap();
        assert_eq!(a.left_mul_vec(&x), vec![4, 5]);
        assert!(solve_left(&a, &[1, 0]).is_none());
    }
}
