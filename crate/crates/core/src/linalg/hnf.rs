use crate::linalg::Matrix;
use crate::scalar::IntScalar;

/// Row-style Hermite normal form: `transform·A = h`.
///
/// `h` is upper echelon, every pivot is positive, entries above a pivot lie
/// in `[0, pivot)`, and zero rows sit at the bottom. `h` depends only on the
/// row lattice of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hnf<T> {
    pub h: Matrix<T>,
    pub transform: Matrix<T>,
    /// Column of the pivot in each nonzero row of `h`.
    pub pivots: Vec<usize>,
}

impl<T: IntScalar> Hnf<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// The nonzero rows of `h`: a canonical basis of the row lattice.
    pub fn basis(&self) -> Matrix<T> {
        let idx: Vec<usize> = (0..self.rank()).collect();
        self.h.select_rows(&idx)
    }
}

pub fn hnf<T: IntScalar>(a: &Matrix<T>) -> Hnf<T> {
    let (m, n) = a.shape();
    let mut h = a.clone();
    let mut tr = Matrix::identity(m);
    let mut pivots = Vec::new();
    let mut r = 0;
    for j in 0..n {
        if r == m {
            break;
        }
        loop {
            let best = (r..m)
                .filter(|&i| !h.get(i, j).is_zero())
                .min_by(|&x, &y| h.get(x, j).abs().cmp(&h.get(y, j).abs()));
            let Some(p) = best else { break };
            h.swap_rows(r, p);
            tr.swap_rows(r, p);
            let pivot = h.get(r, j).clone();
            let mut done = true;
            for i in r + 1..m {
                let e = h.get(i, j);
                if e.is_zero() {
                    continue;
                }
                let q = -e.div_floor(&pivot);
                h.add_row_multiple(i, r, &q);
                tr.add_row_multiple(i, r, &q);
                done &= h.get(i, j).is_zero();
            }
            if done {
                break;
            }
        }
        if h.get(r, j).is_zero() {
            continue;
        }
        if h.get(r, j).is_negative() {
            h.negate_row(r);
            tr.negate_row(r);
        }
        let pivot = h.get(r, j).clone();
        for i in 0..r {
            let q = -h.get(i, j).div_floor(&pivot);
            h.add_row_multiple(i, r, &q);
            tr.add_row_multiple(i, r, &q);
        }
        pivots.push(j);
        r += 1;
    }
    Hnf {
        h,
        transform: tr,
        pivots,
    }
}
