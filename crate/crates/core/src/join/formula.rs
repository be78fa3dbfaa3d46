use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Ranks of the free groups `K⁰` and `K¹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct KTheoryRanks {
    #[serde(with = "crate::serde_dec")]
    pub k0_rank: BigInt,
    #[serde(with = "crate::serde_dec")]
    pub k1_rank: BigInt,
}

impl KTheoryRanks {
    pub fn new(k0: impl Into<BigInt>, k1: impl Into<BigInt>) -> Self {
        KTheoryRanks {
            k0_rank: k0.into(),
            k1_rank: k1.into(),
        }
    }
}

/// Joining a space with `K⁰ ≅ Zˡ`, `K¹ ≅ Zʳ` to an `N`-point set gives
/// `K⁰ ≅ Z^{r(N−1)+1}` and `K¹ ≅ Z^{(l−1)(N−1)}`.
pub fn join_step_formula(x: &KTheoryRanks, part_size: usize) -> Result<KTheoryRanks> {
    if part_size == 0 {
        return Err(Error::InvalidInput("the finite set must be nonempty".into()));
    }
    if x.k0_rank < BigInt::one() || x.k1_rank < BigInt::zero() {
        return Err(Error::InvalidInput(format!(
            "K0 rank {} must be at least 1 and K1 rank {} nonnegative",
            x.k0_rank, x.k1_rank
        )));
    }
    let m = BigInt::from(part_size - 1);
    Ok(KTheoryRanks {
        k0_rank: &x.k1_rank * &m + 1,
        k1_rank: (&x.k0_rank - 1) * &m,
    })
}

/// K-theory of the `k`-fold join of an `N`-point set: `(N−1)^k + 1` and `0`
/// for odd `k`, `1` and `(N−1)^k` for even `k`.
pub fn join_k_theory_formula(part_size: usize, copies: usize) -> Result<KTheoryRanks> {
    if part_size == 0 || copies == 0 {
        return Err(Error::InvalidInput(
            "set size and number of copies must be positive".into(),
        ));
    }
    let wedge = BigInt::from(part_size - 1).pow(copies as u32);
    Ok(if copies % 2 == 1 {
        KTheoryRanks::new(wedge + 1, 0)
    } else {
        KTheoryRanks::new(1, wedge)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn step_examples() {
        let s = |l: i64, r: i64, n| join_step_formula(&KTheoryRanks::new(l, r), n).unwrap();
        assert_eq!(s(3, 0, 3), KTheoryRanks::new(1, 4));
        assert_eq!(s(1, 0, 5), KTheoryRanks::new(1, 0));
        assert_eq!(s(2, 0, 2), KTheoryRanks::new(1, 1));
        assert!(join_step_formula(&KTheoryRanks::new(0, 0), 3).is_err());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(join_k_theory_formula(3, 2).unwrap(), KTheoryRanks::new(1, 4));
        assert_eq!(join_k_theory_formula(7, 1).unwrap(), KTheoryRanks::new(7, 0));
        assert_eq!(join_k_theory_formula(2, 4).unwrap(), KTheoryRanks::new(1, 1));
        assert!(join_k_theory_formula(0, 2).is_err());
    }

    #[test]
    fn closed_form_is_iterated_step() {
        for n in 1..=6 {
            let mut x = KTheoryRanks::new(n as i64, 0);
            for k in 1..=6 {
                assert_eq!(join_k_theory_formula(n, k).unwrap(), x, "N={n} k={k}");
                x = join_step_formula(&x, n).unwrap();
            }
        }
    }
}
