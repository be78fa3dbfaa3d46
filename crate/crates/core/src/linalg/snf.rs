//! Smith normal form by classical pivoting.
//!
//! At every step the pivot is the nonzero entry of smallest magnitude in the
//! remaining block (first in row-major order on ties), so the output,
//! including the transforms, is a deterministic function of the input.

use crate::linalg::Matrix;
use crate::scalar::IntScalar;

/// `U·A·V = D` with `U`, `V` unimodular and `D` diagonal with a positive
/// divisor chain `d₁ | d₂ | … | d_r` followed by zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf<T> {
    pub u: Matrix<T>,
    pub d: Matrix<T>,
    pub v: Matrix<T>,
}

impl<T: IntScalar> Snf<T> {
    /// Nonzero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<T> {
        diagonal_nonzero(&self.d)
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

pub fn snf<T: IntScalar>(a: &Matrix<T>) -> Snf<T> {
    let mut elim = Elimination {
        d: a.clone(),
        u: Some(Matrix::identity(a.rows())),
        v: Some(Matrix::identity(a.cols())),
    };
    elim.run();
    Snf {
        u: elim.u.unwrap(),
        d: elim.d,
        v: elim.v.unwrap(),
    }
}

/// Invariant factors only; skips the transform bookkeeping.
pub fn invariant_factors<T: IntScalar>(a: &Matrix<T>) -> Vec<T> {
    let mut elim = Elimination {
        d: a.clone(),
        u: None,
        v: None,
    };
    elim.run();
    diagonal_nonzero(&elim.d)
}

fn diagonal_nonzero<T: IntScalar>(d: &Matrix<T>) -> Vec<T> {
    (0..d.rows().min(d.cols()))
        .map(|i| d.get(i, i).clone())
        .take_while(|x| !x.is_zero())
        .collect()
}

struct Elimination<T> {
    d: Matrix<T>,
    u: Option<Matrix<T>>,
    v: Option<Matrix<T>>,
}

impl<T: IntScalar> Elimination<T> {
    fn run(&mut self) {
        let (m, n) = self.d.shape();
        for t in 0..m.min(n) {
            if !self.settle_pivot(t) {
                return;
            }
            if self.d.get(t, t).is_negative() {
                self.d.negate_row(t);
                if let Some(u) = &mut self.u {
                    u.negate_row(t);
                }
            }
        }
    }

    /// Clears row and column `t` outside the diagonal and enforces that the
    /// pivot divides the remaining block. Returns false when the block is zero.
    fn settle_pivot(&mut self, t: usize) -> bool {
        let (m, n) = self.d.shape();
        loop {
            let Some((pi, pj)) = self.smallest_entry(t) else {
                return false;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            let p = self.d.get(t, t).clone();

            let mut clean = true;
            for i in t + 1..m {
                let e = self.d.get(i, t);
                if e.is_zero() {
                    continue;
                }
                let q = e.div_floor(&p);
                self.add_row_multiple(i, t, &-q);
                clean &= self.d.get(i, t).is_zero();
            }
            for j in t + 1..n {
                let e = self.d.get(t, j);
                if e.is_zero() {
                    continue;
                }
                let q = e.div_floor(&p);
                self.add_col_multiple(j, t, &-q);
                clean &= self.d.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }

            let offender = (t + 1..m).find(|&i| {
                (t + 1..n).any(|j| !self.d.get(i, j).is_multiple_of(&p))
            });
            match offender {
                // Pulling the row up leaves a remainder smaller than the pivot.
                Some(i) => self.add_row_multiple(t, i, &T::one()),
                None => return true,
            }
        }
    }

    fn smallest_entry(&self, t: usize) -> Option<(usize, usize)> {
        let (m, n) = self.d.shape();
        let mut best: Option<(usize, usize, T)> = None;
        for i in t..m {
            for j in t..n {
                let e = self.d.get(i, j);
                if e.is_zero() {
                    continue;
                }
                let mag = e.abs();
                if best.as_ref().is_none_or(|(_, _, b)| mag < *b) {
                    let unit = mag.is_one();
                    best = Some((i, j, mag));
                    if unit {
                        return best.map(|(i, j, _)| (i, j));
                    }
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        if let Some(u) = &mut self.u {
            u.swap_rows(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        if let Some(v) = &mut self.v {
            v.swap_cols(a, b);
        }
    }

    fn add_row_multiple(&mut self, target: usize, source: usize, c: &T) {
        self.d.add_row_multiple(target, source, c);
        if let Some(u) = &mut self.u {
            u.add_row_multiple(target, source, c);
        }
    }

    fn add_col_multiple(&mut self, target: usize, source: usize, c: &T) {
        self.d.add_col_multiple(target, source, c);
        if let Some(v) = &mut self.v {
            v.add_col_multiple(target, source, c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn check(a: &Matrix<i64>) -> Snf<i64> {
        let s = snf(a);
        assert_eq!(&(&s.u * a) * &s.v, s.d);
        assert_eq!(s.u.determinant().unwrap().abs(), 1);
        assert_eq!(s.v.determinant().unwrap().abs(), 1);
        s
    }

    #[test]
    fn identity_is_fixed() {
        let s = check(&Matrix::identity(3));
        assert_eq!(s.d, Matrix::identity(3));
    }

    #[test]
    fn two_by_two_example() {
        // d1 = gcd of entries = 2, d1*d2 = |det| = 8
        let s = check(&Matrix::from_i32_rows(&[&[2, 4], &[6, 8]]));
        assert_eq!(s.d, Matrix::from_i32_rows(&[&[2, 0], &[0, 4]]));
    }

    #[test]
    fn zero_and_empty_shapes() {
        let s = check(&Matrix::zeros(2, 3));
        assert_eq!(s.d, Matrix::zeros(2, 3));
        let s = check(&Matrix::zeros(0, 3));
        assert_eq!(s.v, Matrix::identity(3));
        assert!(invariant_factors(&Matrix::<i64>::zeros(4, 0)).is_empty());
    }

    #[test]
    fn divisibility_fixup() {
        let s = check(&Matrix::from_i32_rows(&[&[4, 0], &[0, 6]]));
        assert_eq!(s.invariant_factors(), vec![2, 12]);
    }

    #[test]
    fn bigint_matches_machine_ints() {
        let a = Matrix::<i64>::from_i32_rows(&[&[3, -6, 9], &[2, 7, -1], &[5, 1, 8]]);
        let b = a.map(|x| BigInt::from(*x));
        let fa: Vec<BigInt> = invariant_factors(&a).into_iter().map(BigInt::from).collect();
        assert_eq!(fa, invariant_factors(&b));
    }
}
