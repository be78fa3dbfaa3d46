use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::IntMatrix;

/// Element of a based ring as its coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RingElement {
    #[serde(with = "crate::serde_dec::vec")]
    coeffs: Vec<BigInt>,
}

impl RingElement {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        RingElement { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        RingElement::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        RingElement::new(vec![BigInt::zero(); rank])
    }

    pub fn basis(rank: usize, i: usize) -> Self {
        let mut e = Self::zero(rank);
        e.coeffs[i] = BigInt::one();
        e
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        RingElement::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        RingElement::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        RingElement::new(self.coeffs.iter().map(|a| a * c).collect())
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::linalg::format_vec(&self.coeffs))
    }
}

/// Commutative ring with a Z-basis, unit `e₀` and augmentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasedRing {
    name: String,
    labels: Vec<String>,
    augmentation: Vec<BigInt>,
    /// `products[i * rank + j]` holds the nonzero coefficients of `eᵢ·eⱼ`.
    products: Vec<Vec<(usize, BigInt)>>,
}

impl BasedRing {
    /// Callers guarantee the ring axioms; [`BasedRing::check_axioms`]
    /// verifies them.
    pub(crate) fn from_parts(
        name: String,
        labels: Vec<String>,
        augmentation: Vec<BigInt>,
        products: Vec<Vec<(usize, BigInt)>>,
    ) -> Self {
        debug_assert_eq!(products.len(), labels.len() * labels.len());
        BasedRing {
            name,
            labels,
            augmentation,
            products,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn augmentation(&self) -> &[BigInt] {
        &self.augmentation
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, BigInt)] {
        &self.products[i * self.rank() + j]
    }

    pub fn one(&self) -> RingElement {
        RingElement::basis(self.rank(), 0)
    }

    pub fn basis_element(&self, i: usize) -> RingElement {
        RingElement::basis(self.rank(), i)
    }

    fn check_len(&self, a: &RingElement) -> Result<()> {
        if a.len() != self.rank() {
            return Err(Error::Shape(format!(
                "element of length {} in a ring of rank {}",
                a.len(),
                self.rank()
            )));
        }
        Ok(())
    }

    pub fn multiply(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.check_len(a)?;
        self.check_len(b)?;
        let mut out = vec![BigInt::zero(); self.rank()];
        for (i, ai) in a.coeffs().iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.coeffs().iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let c = ai * bj;
                for (k, n) in self.basis_product(i, j) {
                    out[*k] += &c * n;
                }
            }
        }
        Ok(RingElement::new(out))
    }

    /// `ε(a) = Σ aᵢ·ε(eᵢ)`.
    pub fn augment(&self, a: &RingElement) -> Result<BigInt> {
        self.check_len(a)?;
        Ok(a.coeffs()
            .iter()
            .zip(&self.augmentation)
            .map(|(x, d)| x * d)
            .sum())
    }

    /// Matrix of `x ↦ x·a` in the row convention: row `j` is `eⱼ·a`.
    pub fn multiplication_matrix(&self, a: &RingElement) -> Result<IntMatrix> {
        self.check_len(a)?;
        let rows = (0..self.rank())
            .map(|j| {
                self.multiply(&self.basis_element(j), a)
                    .map(|e| e.coeffs().to_vec())
            })
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows_with_cols(rows, self.rank())
    }

    /// `R₁ ⊗_Z R₂` with basis `e_i ⊗ f_j` at index `i·rank₂ + j`.
    pub fn tensor(&self, other: &BasedRing) -> BasedRing {
        let (r1, r2) = (self.rank(), other.rank());
        let r = r1 * r2;
        let mut labels = Vec::with_capacity(r);
        let mut augmentation = Vec::with_capacity(r);
        for i in 0..r1 {
            for j in 0..r2 {
                labels.push(format!("({},{})", self.labels[i], other.labels[j]));
                augmentation.push(&self.augmentation[i] * &other.augmentation[j]);
            }
        }
        let mut products = Vec::with_capacity(r * r);
        for a in 0..r {
            for b in 0..r {
                let (i1, j1) = (a / r2, a % r2);
                let (i2, j2) = (b / r2, b % r2);
                let mut entry = Vec::new();
                for (k1, n1) in self.basis_product(i1, i2) {
                    for (k2, n2) in other.basis_product(j1, j2) {
                        entry.push((k1 * r2 + k2, n1 * n2));
                    }
                }
                products.push(entry);
            }
        }
        BasedRing {
            name: format!("{}x{}", self.name, other.name),
            labels,
            augmentation,
            products,
        }
    }

    /// Exhaustive check of unit, commutativity, associativity and
    /// multiplicativity of the augmentation.
    pub fn check_axioms(&self) -> Result<()> {
        let r = self.rank();
        for j in 0..r {
            if self.basis_product(0, j) != [(j, BigInt::one())] {
                return Err(Error::Axiom {
                    axiom: "unit law",
                    indices: vec![j],
                });
            }
        }
        for i in 0..r {
            for j in 0..r {
                let a = self.multiply(&self.basis_element(i), &self.basis_element(j))?;
                let b = self.multiply(&self.basis_element(j), &self.basis_element(i))?;
                if a != b {
                    return Err(Error::Axiom {
                        axiom: "commutativity",
                        indices: vec![i, j],
                    });
                }
                if self.augment(&a)? != &self.augmentation[i] * &self.augmentation[j] {
                    return Err(Error::Axiom {
                        axiom: "augmentation homomorphism",
                        indices: vec![i, j],
                    });
                }
                for k in 0..r {
                    let left = self.multiply(&a, &self.basis_element(k))?;
                    let jk = self.multiply(&self.basis_element(j), &self.basis_element(k))?;
                    let right = self.multiply(&self.basis_element(i), &jk)?;
                    if left != right {
                        return Err(Error::Axiom {
                            axiom: "associativity",
                            indices: vec![i, j, k],
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn same_ring(a: &Arc<BasedRing>, b: &Arc<BasedRing>) -> Result<()> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(Error::RingMismatch(format!("{} vs {}", a.name(), b.name())))
    }
}
