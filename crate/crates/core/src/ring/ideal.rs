use std::collections::HashSet;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::groups::{self, FgAbelianGroup};
use crate::linalg::{kernel_basis, Matrix, RowLattice};
use crate::ring::based::same_ring;
use crate::ring::{BasedRing, FusionRing, RingElement};
use crate::IntMatrix;

/// Largest number of candidate products formed in one multiplication step.
pub const DEFAULT_PRODUCT_CAP: usize = 200_000;

/// An ideal of a based ring, held as a Z-lattice in Hermite form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealLattice {
    ring: Arc<BasedRing>,
    lattice: RowLattice<BigInt>,
}

impl IdealLattice {
    /// Z-span of `generators`, which must already be closed under the ring
    /// action.
    pub fn new(ring: Arc<BasedRing>, generators: &IntMatrix) -> Result<Self> {
        if generators.rows() > 0 && generators.cols() != ring.rank() {
            return Err(Error::Shape(format!(
                "generators of length {} for a ring of rank {}",
                generators.cols(),
                ring.rank()
            )));
        }
        let lattice = if generators.rows() == 0 {
            RowLattice::zero(ring.rank())
        } else {
            RowLattice::span(generators)
        };
        let ideal = IdealLattice { ring, lattice };
        ideal.check_closure()?;
        Ok(ideal)
    }

    /// The ideal generated (as an ideal, not just a lattice) by `elements`.
    pub fn generated_by(ring: Arc<BasedRing>, elements: &[RingElement]) -> Result<Self> {
        let mut rows = Vec::new();
        for a in elements {
            for i in 0..ring.rank() {
                rows.push(ring.multiply(&ring.basis_element(i), a)?.coeffs().to_vec());
            }
        }
        let gens = Matrix::from_rows_with_cols(rows, ring.rank())?;
        Self::new(ring, &gens)
    }

    pub fn zero(ring: Arc<BasedRing>) -> Self {
        let lattice = RowLattice::zero(ring.rank());
        IdealLattice { ring, lattice }
    }

    pub fn full(ring: Arc<BasedRing>) -> Self {
        let lattice = RowLattice::full(ring.rank());
        IdealLattice { ring, lattice }
    }

    fn check_closure(&self) -> Result<()> {
        for b in self.basis_elements() {
            for i in 0..self.ring.rank() {
                let prod = self.ring.multiply(&self.ring.basis_element(i), &b)?;
                if !self.lattice.contains(prod.coeffs()) {
                    return Err(Error::InvalidInput(format!(
                        "lattice is not an ideal: e_{i} * {b} = {prod} escapes"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &Arc<BasedRing> {
        &self.ring
    }

    pub fn lattice(&self) -> &RowLattice<BigInt> {
        &self.lattice
    }

    /// Hermite basis, one row per basis vector.
    pub fn basis(&self) -> &IntMatrix {
        self.lattice.basis()
    }

    pub fn basis_elements(&self) -> Vec<RingElement> {
        (0..self.rank())
            .map(|i| RingElement::new(self.basis().row(i).to_vec()))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.lattice.is_zero()
    }

    pub fn contains(&self, a: &RingElement) -> bool {
        a.len() == self.ring.rank() && self.lattice.contains(a.coeffs())
    }

    pub fn is_subideal_of(&self, other: &IdealLattice) -> bool {
        same_ring(&self.ring, &other.ring).is_ok() && self.lattice.is_sublattice_of(&other.lattice)
    }

    /// Product ideal `I·J`: the Z-span of products of basis vectors.
    pub fn product(&self, other: &IdealLattice, cap: usize) -> Result<Self> {
        same_ring(&self.ring, &other.ring)?;
        let count = self.rank() * other.rank();
        if count > cap {
            return Err(Error::CapExceeded {
                what: "ideal product enumeration",
                needed: count.to_string(),
                cap,
            });
        }
        let mut seen = HashSet::new();
        let mut rows = Vec::new();
        for a in self.basis_elements() {
            for b in other.basis_elements() {
                let c = self.ring.multiply(&a, &b)?;
                if !c.is_zero() && seen.insert(c.clone()) {
                    rows.push(c.coeffs().to_vec());
                }
            }
        }
        let gens = Matrix::from_rows_with_cols(rows, self.ring.rank())?;
        Self::new(self.ring.clone(), &gens)
    }

    /// `Iⁿ`, with `I⁰` the whole ring. Each step multiplies the Hermite
    /// basis of `Iᵏ` by that of `I` and re-reduces.
    pub fn power(&self, n: usize, cap: usize) -> Result<Self> {
        if n == 0 {
            return Ok(Self::full(self.ring.clone()));
        }
        let mut acc = self.clone();
        for _ in 1..n {
            if acc.is_zero() {
                break;
            }
            acc = acc.product(self, cap)?;
        }
        Ok(acc)
    }

    /// The group `self / sub`.
    pub fn quotient(&self, sub: &IdealLattice) -> Result<FgAbelianGroup> {
        same_ring(&self.ring, &sub.ring)?;
        groups::lattice_quotient(&self.lattice, &sub.lattice)
    }

    /// `I ⊗_Z R₂` inside `R₁ ⊗_Z R₂` (product basis as in
    /// [`BasedRing::tensor`]).
    pub fn extend_to_product(&self, right: &BasedRing) -> Result<Self> {
        let product = Arc::new(self.ring.tensor(right));
        let r2 = right.rank();
        let mut rows = Vec::new();
        for b in self.basis_elements() {
            for j in 0..r2 {
                let mut v = vec![BigInt::from(0); product.rank()];
                for (i, c) in b.coeffs().iter().enumerate() {
                    v[i * r2 + j] = c.clone();
                }
                rows.push(v);
            }
        }
        let gens = Matrix::from_rows_with_cols(rows, product.rank())?;
        Self::new(product, &gens)
    }
}

/// Kernel of the augmentation `a ↦ Σ aᵢ·ε(eᵢ)`.
pub fn augmentation_ideal(ring: &Arc<BasedRing>) -> IdealLattice {
    let column = Matrix::new(ring.rank(), 1, ring.augmentation().to_vec())
        .expect("augmentation has one entry per basis element");
    let kernel = kernel_basis(&column);
    IdealLattice::new(ring.clone(), &kernel).expect("augmentation kernel is an ideal")
}

pub fn ideal_power(ring: &Arc<BasedRing>, n: usize) -> Result<IdealLattice> {
    augmentation_ideal(ring).power(n, DEFAULT_PRODUCT_CAP)
}

/// `outer / inner`; fails with a witness when `inner ⊄ outer`.
pub fn lattice_quotient(outer: &IdealLattice, inner: &IdealLattice) -> Result<FgAbelianGroup> {
    outer.quotient(inner)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularClassCheck {
    pub reg: RingElement,
    pub annihilated: bool,
}

/// Whether every augmentation-ideal generator kills `Σ dimᵢ·eᵢ`.
pub fn regular_class_check(ring: &FusionRing) -> RegularClassCheck {
    let based = ring.based();
    let reg = ring.regular_class();
    let annihilated = augmentation_ideal(based)
        .basis_elements()
        .iter()
        .all(|g| based.multiply(g, &reg).expect("same rank").is_zero());
    RegularClassCheck { reg, annihilated }
}

/// Greatest common divisor of the entries of a vector.
pub fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::from(0), |g, x| g.gcd(x))
}
