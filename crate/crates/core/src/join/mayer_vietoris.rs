use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::FgAbelianGroup;
use crate::linalg::{cokernel_invariants, rank, Matrix};
use crate::IntMatrix;

use super::formula::KTheoryRanks;

/// A Mayer–Vietoris connecting map with its kernel rank and cokernel.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MvDelta {
    pub matrix: IntMatrix,
    pub kernel_rank: usize,
    pub cokernel: FgAbelianGroup,
}

fn summarize(matrix: IntMatrix) -> MvDelta {
    let kernel_rank = matrix.rows() - rank(&matrix);
    let c = cokernel_invariants(&matrix);
    let cokernel = FgAbelianGroup::from_cyclic_orders(c.free_rank, c.torsion);
    MvDelta {
        matrix,
        kernel_rank,
        cokernel,
    }
}

fn check(part_size: usize) -> Result<()> {
    if part_size == 0 {
        return Err(Error::InvalidInput("the finite set must be nonempty".into()));
    }
    Ok(())
}

/// `Δ₀ : Zˡ ⊕ Z^N → Zˡ ⊗ Z^N`, `(a, b) ↦ a·(1…1) − (1;…;1)·b`. Rows
/// `0..l` are the `a` generators, rows `l..l+N` the `b` generators; the
/// codomain coordinate `(i, j)` sits at `i·N + j`.
pub fn mayer_vietoris_delta(l: usize, part_size: usize) -> Result<MvDelta> {
    check(part_size)?;
    if l == 0 {
        return Err(Error::InvalidInput("K0 rank must be at least 1".into()));
    }
    let n = part_size;
    let mut m = Matrix::zeros(l + n, l * n);
    for i in 0..l {
        for j in 0..n {
            m.set(i, i * n + j, BigInt::from(1));
            m.set(l + j, i * n + j, BigInt::from(-1));
        }
    }
    Ok(summarize(m))
}

/// `Δ₁ : Zʳ → Zʳ ⊗ Z^N`, `a ↦ a·(1…1)`.
pub fn mayer_vietoris_delta1(r: usize, part_size: usize) -> Result<MvDelta> {
    check(part_size)?;
    let n = part_size;
    let mut m = Matrix::zeros(r, r * n);
    for i in 0..r {
        for j in 0..n {
            m.set(i, i * n + j, BigInt::from(1));
        }
    }
    Ok(summarize(m))
}

/// One join step read off the exact sequence: `K⁰` is the cokernel of `Δ₁`
/// (as free rank, with one summand for the unit) and `K¹` combines the
/// kernel of `Δ₀` modulo constants with the cokernel of `Δ₀`.
pub fn mayer_vietoris_step(l: usize, r: usize, part_size: usize) -> Result<KTheoryRanks> {
    let d0 = mayer_vietoris_delta(l, part_size)?;
    let d1 = mayer_vietoris_delta1(r, part_size)?;
    if !d0.cokernel.is_torsion_free() || !d1.cokernel.is_torsion_free() {
        return Err(Error::Unsupported("torsion in a join step".into()));
    }
    // ker Δ₀ contains the diagonal constants, which come from K⁰ of the join.
    let k0 = d1.cokernel.free_rank() + d0.kernel_rank;
    let k1 = d0.cokernel.free_rank() + d1.kernel_rank;
    Ok(KTheoryRanks::new(k0 as u64, k1 as u64))
}
