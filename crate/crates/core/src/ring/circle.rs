use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::ring::{BasedRing, IdealLattice, RingElement};
use crate::IntMatrix;

/// `R(S¹)/I(S¹)ⁿ = Z[λ]/(λⁿ)` in the basis `λ⁰, …, λⁿ⁻¹`, where `λ = 1 − t`
/// and `t` is the standard character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircleRingTruncation {
    order: usize,
    based: Arc<BasedRing>,
}

pub fn circle_truncation(n: usize) -> Result<CircleRingTruncation> {
    if n == 0 {
        return Err(Error::InvalidInput("truncation order must be positive".into()));
    }
    let labels = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "l".to_string(),
            _ => format!("l^{i}"),
        })
        .collect();
    let mut augmentation = vec![BigInt::zero(); n];
    augmentation[0] = BigInt::one();
    let mut products = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            products.push(if i + j < n {
                vec![(i + j, BigInt::one())]
            } else {
                Vec::new()
            });
        }
    }
    let based = BasedRing::from_parts(format!("S1/I^{n}"), labels, augmentation, products);
    Ok(CircleRingTruncation {
        order: n,
        based: Arc::new(based),
    })
}

/// Sublattice spanned by `λʲ, …, λⁿ⁻¹`; zero once `j ≥ n`.
pub fn circle_ideal_image(n: usize, j: usize) -> Result<IdealLattice> {
    let ring = circle_truncation(n)?;
    let rows: Vec<usize> = (j.min(n)..n).collect();
    let gens = Matrix::<BigInt>::identity(n).select_rows(&rows);
    IdealLattice::new(ring.based.clone(), &gens)
}

impl CircleRingTruncation {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn based(&self) -> &Arc<BasedRing> {
        &self.based
    }

    pub fn multiply(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.based.multiply(a, b)
    }

    pub fn lambda_power(&self, j: usize) -> RingElement {
        if j < self.order {
            self.based.basis_element(j)
        } else {
            RingElement::zero(self.order)
        }
    }

    /// The class `t = 1 − λ` of the standard character.
    pub fn t(&self) -> RingElement {
        self.based.one().sub(&self.lambda_power(1))
    }

    /// `t⁻¹ = 1 + λ + ⋯ + λⁿ⁻¹`.
    pub fn t_inverse(&self) -> RingElement {
        RingElement::new(vec![BigInt::one(); self.order])
    }

    /// Companion-style matrix of multiplication by `t`.
    pub fn t_action(&self) -> IntMatrix {
        self.based
            .multiplication_matrix(&self.t())
            .expect("t has the ring's rank")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ideal_power;

    #[test]
    fn truncation_kills_high_powers() {
        let c = circle_truncation(3).unwrap();
        let p = c.multiply(&c.lambda_power(1), &c.lambda_power(2)).unwrap();
        assert!(p.is_zero());
        assert!(circle_truncation(0).is_err());
    }

    #[test]
    fn t_is_invertible() {
        for n in 1..8 {
            let c = circle_truncation(n).unwrap();
            assert_eq!(c.multiply(&c.t(), &c.t_inverse()).unwrap(), c.based().one());
        }
        let c = circle_truncation(3).unwrap();
        assert_eq!(c.t_action(), Matrix::from_i32_rows(&[&[1, -1, 0], &[0, 1, -1], &[0, 0, 1]]));
    }

    #[test]
    fn ideal_images_match_powers() {
        assert!(circle_ideal_image(4, 4).unwrap().is_zero());
        for n in 1..6 {
            let ring = circle_truncation(n).unwrap();
            for j in 0..=n + 1 {
                let direct = circle_ideal_image(n, j).unwrap();
                let power = ideal_power(ring.based(), j).unwrap();
                assert_eq!(direct.basis(), power.basis(), "n={n} j={j}");
            }
        }
    }
}
