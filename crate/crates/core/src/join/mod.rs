//! Joins of finite sets.
//!
//! The `k`-fold join of an `N`-point set is realised as the complete
//! `k`-partite simplicial complex: `k` parts of `N` vertices, one face for
//! every vertex set meeting each part at most once. Its integer homology is
//! computed exactly and compared with the closed-form K-theory of joins.

mod complex;
mod formula;
mod mayer_vietoris;

pub use complex::{
    boundary_matrices, build_join_complex, reduced_homology, BettiTable, ChainComplex,
    JoinComplex, JOIN_FACE_CAP,
};
pub use formula::{join_k_theory_formula, join_step_formula, KTheoryRanks};
pub use mayer_vietoris::{
    mayer_vietoris_delta, mayer_vietoris_delta1, mayer_vietoris_step, MvDelta,
};

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::Result;

/// Closed-form K-theory ranks side by side with the homology of the
/// multipartite model.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub part_size: usize,
    pub copies: usize,
    pub formula: KTheoryRanks,
    pub homology: BettiTable,
    pub torsion_free: bool,
    pub consistent: bool,
}

/// The join is a wedge of `(N−1)^k` spheres of dimension `k−1`, so `K⁰`
/// has rank `1 + Σ_{d even} b̃_d` and `K¹` rank `Σ_{d odd} b̃_d`.
pub fn oracle_consistency(part_size: usize, copies: usize) -> Result<OracleReport> {
    let formula = join_k_theory_formula(part_size, copies)?;
    let complex = build_join_complex(part_size, copies)?;
    let homology = reduced_homology(&boundary_matrices(&complex));
    let mut even = BigInt::from(1);
    let mut odd = BigInt::from(0);
    for (d, g) in homology.groups().iter().enumerate() {
        if d % 2 == 0 {
            even += g.free_rank();
        } else {
            odd += g.free_rank();
        }
    }
    let torsion_free = homology.groups().iter().all(|g| g.is_torsion_free());
    let consistent = torsion_free && formula.k0_rank == even && formula.k1_rank == odd;
    Ok(OracleReport {
        part_size,
        copies,
        formula,
        homology,
        torsion_free,
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_small_cases() {
        let r = oracle_consistency(3, 2).unwrap();
        assert!(r.consistent);
        assert_eq!(r.formula.k0_rank, BigInt::from(1));
        assert_eq!(r.formula.k1_rank, BigInt::from(4));
        let r = oracle_consistency(4, 3).unwrap();
        assert!(r.consistent);
        assert_eq!(r.homology.groups()[2].free_rank(), 27);
        assert_eq!(r.formula.k0_rank, BigInt::from(28));
    }
}
