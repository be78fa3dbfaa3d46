//! Modules over based rings as models of equivariant K-theory, with ideal
//! images, the Künneth pieces of a product, and stability of nonvanishing
//! under multiplication maps.

mod descriptor;
mod kunneth;
mod module;

pub use descriptor::KModelDescriptor;
pub use kunneth::{
    graded_kunneth, kunneth_pieces, GradedGroups, GradedKunneth, GradedModulePair, KunnethPieces,
};
pub use module::{circle_module, truncated_ring_module, RingModule};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::groups::{subquotient, FgAbelianGroup};
use crate::linalg::Matrix;
use crate::ring::{augmentation_ideal, same_ring, IdealLattice, DEFAULT_PRODUCT_CAP};
use crate::IntMatrix;

fn image_generators(ideal: &IdealLattice, m: &RingModule, x: Option<&[BigInt]>) -> Result<IntMatrix> {
    same_ring(ideal.ring(), m.ring())?;
    let mut rows = Vec::new();
    for b in ideal.basis_elements() {
        let a = m.action_of(&b)?;
        match x {
            Some(x) => rows.push(a.left_mul_vec(x)),
            None => rows.extend(a.row_vecs()),
        }
    }
    Matrix::from_rows_with_cols(rows, m.generators())
}

fn image_group(gens: IntMatrix, m: &RingModule) -> Result<FgAbelianGroup> {
    let all = gens.vstack(m.relations())?;
    subquotient(&all, m.relations())
}

/// The subgroup `I·M`, up to isomorphism.
pub fn ideal_image(ideal: &IdealLattice, m: &RingModule) -> Result<FgAbelianGroup> {
    image_group(image_generators(ideal, m, None)?, m)
}

/// The subgroup `I·x`, up to isomorphism.
pub fn element_image(ideal: &IdealLattice, m: &RingModule, x: &[BigInt]) -> Result<FgAbelianGroup> {
    if x.len() != m.generators() {
        return Err(Error::Shape(format!(
            "module element of length {} for {} generators",
            x.len(),
            m.generators()
        )));
    }
    image_group(image_generators(ideal, m, Some(x))?, m)
}

/// Largest `n ≤ cap` with `Iⁿ·M ≠ 0` for the augmentation ideal `I`, or
/// `-1` when `M` itself is trivial.
pub fn max_nonvanishing_power(m: &RingModule, cap: usize) -> Result<i64> {
    if m.is_trivial() {
        return Ok(-1);
    }
    let i = augmentation_ideal(m.ring());
    let mut power = i.clone();
    for n in 1..=cap {
        if n > 1 {
            power = power.product(&i, DEFAULT_PRODUCT_CAP)?;
        }
        if ideal_image(&power, m)?.is_trivial() {
            return Ok(n as i64 - 1);
        }
    }
    Ok(cap as i64)
}

/// Whether some element of `G` survives multiplication by every power of
/// `N`: a free summand, or a cyclic order with a prime factor not dividing
/// `N`.
pub fn survives_multiplication(g: &FgAbelianGroup, n: &BigInt) -> bool {
    g.free_rank() > 0
        || g.torsion().iter().any(|d| {
            let mut d = d.clone();
            loop {
                let c = d.gcd(n);
                if c.is_one() {
                    break;
                }
                d /= c;
            }
            !d.is_one()
        })
}

/// Whether `I·(Nʲ·x) ≠ 0` for every `j ≥ 0`.
pub fn stable_nonvanishing_under(
    ideal: &IdealLattice,
    m: &RingModule,
    x: &[BigInt],
    n: &BigInt,
) -> Result<bool> {
    if n < &BigInt::one() {
        return Err(Error::InvalidInput(format!("multiplier {n} must be at least 1")));
    }
    Ok(survives_multiplication(&element_image(ideal, m, x)?, n))
}

/// [`stable_nonvanishing_under`] for the `n`-th power of the augmentation
/// ideal.
pub fn element_stable_nonvanishing(
    m: &RingModule,
    x: &[BigInt],
    n: usize,
    multiplier: &BigInt,
) -> Result<bool> {
    let ideal = augmentation_ideal(m.ring()).power(n, DEFAULT_PRODUCT_CAP)?;
    stable_nonvanishing_under(&ideal, m, x, multiplier)
}
