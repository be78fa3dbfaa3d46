use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groups::{FgAbelianGroup, Presentation};
use crate::linalg::{Matrix, RowLattice};
use crate::ring::{ideal_power, BasedRing, RingElement};
use crate::IntMatrix;

/// A finitely presented module `Z^g / L` over a based ring. Elements are row
/// vectors and a ring element `a` acts by `x ↦ x·A(a)`, where
/// `A(a) = Σ aᵢ·action[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingModule {
    ring: Arc<BasedRing>,
    generators: usize,
    relations: RowLattice<BigInt>,
    action: Vec<IntMatrix>,
}

impl RingModule {
    /// Builds and validates a module: the unit acts as the identity, actions
    /// commute and multiply like the basis, and `L` is invariant, all modulo
    /// `L`.
    pub fn new(
        ring: Arc<BasedRing>,
        generators: usize,
        relations: &IntMatrix,
        action: Vec<IntMatrix>,
    ) -> Result<Self> {
        let m = Self::from_parts(ring, generators, relations, action)?;
        m.validate()?;
        Ok(m)
    }

    /// Shape checks only. Used for constructions that are valid by design.
    pub(crate) fn from_parts(
        ring: Arc<BasedRing>,
        generators: usize,
        relations: &IntMatrix,
        action: Vec<IntMatrix>,
    ) -> Result<Self> {
        if relations.rows() > 0 && relations.cols() != generators {
            return Err(Error::Shape(format!(
                "relations have {} columns for {generators} generators",
                relations.cols()
            )));
        }
        if action.len() != ring.rank() {
            return Err(Error::Shape(format!(
                "{} action matrices for a ring of rank {}",
                action.len(),
                ring.rank()
            )));
        }
        if let Some(a) = action.iter().find(|a| a.shape() != (generators, generators)) {
            return Err(Error::Shape(format!(
                "action matrix of shape {:?} on {generators} generators",
                a.shape()
            )));
        }
        let relations = if relations.rows() == 0 {
            RowLattice::zero(generators)
        } else {
            RowLattice::span(relations)
        };
        Ok(RingModule {
            ring,
            generators,
            relations,
            action,
        })
    }

    pub fn zero(ring: Arc<BasedRing>) -> Self {
        let action = vec![Matrix::zeros(0, 0); ring.rank()];
        RingModule {
            ring,
            generators: 0,
            relations: RowLattice::zero(0),
            action,
        }
    }

    pub fn ring(&self) -> &Arc<BasedRing> {
        &self.ring
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    /// Hermite basis of the relation lattice.
    pub fn relations(&self) -> &IntMatrix {
        self.relations.basis()
    }

    pub fn relation_lattice(&self) -> &RowLattice<BigInt> {
        &self.relations
    }

    pub fn action(&self) -> &[IntMatrix] {
        &self.action
    }

    pub fn generator(&self, i: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.generators];
        v[i] = BigInt::from(1);
        v
    }

    pub fn underlying_group(&self) -> FgAbelianGroup {
        Presentation::new(self.generators, self.relations().clone())
            .expect("relation columns match generators")
            .normalize()
    }

    pub fn is_trivial(&self) -> bool {
        self.relations.rank() == self.generators && self.underlying_group().is_trivial()
    }

    /// `A(a)`.
    pub fn action_of(&self, a: &RingElement) -> Result<IntMatrix> {
        if a.len() != self.ring.rank() {
            return Err(Error::Shape(format!(
                "element of length {} in a ring of rank {}",
                a.len(),
                self.ring.rank()
            )));
        }
        let mut out = Matrix::zeros(self.generators, self.generators);
        for (c, m) in a.coeffs().iter().zip(&self.action) {
            if !c.is_zero() {
                add_scaled(&mut out, m, c);
            }
        }
        Ok(out)
    }

    pub fn act(&self, a: &RingElement, x: &[BigInt]) -> Result<Vec<BigInt>> {
        if x.len() != self.generators {
            return Err(Error::Shape(format!(
                "module element of length {} for {} generators",
                x.len(),
                self.generators
            )));
        }
        Ok(self.action_of(a)?.left_mul_vec(x))
    }

    /// Whether `x` is zero in the module.
    pub fn is_zero_element(&self, x: &[BigInt]) -> bool {
        self.relations.contains(x)
    }

    fn congruent(&self, a: &IntMatrix, b: &IntMatrix) -> bool {
        (0..a.rows()).all(|i| {
            let d: Vec<BigInt> = a.row(i).iter().zip(b.row(i)).map(|(x, y)| x - y).collect();
            self.relations.contains(&d)
        })
    }

    pub fn validate(&self) -> Result<()> {
        let r = self.ring.rank();
        let fail = |axiom, indices| Err(Error::Axiom { axiom, indices });
        if !self.congruent(&self.action[0], &Matrix::identity(self.generators)) {
            return fail("module unit", vec![0]);
        }
        for (i, a) in self.action.iter().enumerate() {
            for k in 0..self.relations.rank() {
                if !self.relations.contains(&a.left_mul_vec(self.relations.basis().row(k))) {
                    return fail("relation invariance", vec![i, k]);
                }
            }
        }
        for i in 0..r {
            for j in i..r {
                let ij = &self.action[i] * &self.action[j];
                let ji = &self.action[j] * &self.action[i];
                if !self.congruent(&ij, &ji) {
                    return fail("module commutativity", vec![i, j]);
                }
                let mut expected = Matrix::zeros(self.generators, self.generators);
                for (k, n) in self.ring.basis_product(i, j) {
                    add_scaled(&mut expected, &self.action[*k], n);
                }
                if !self.congruent(&ij, &expected) {
                    return fail("fusion compatibility", vec![i, j]);
                }
            }
        }
        Ok(())
    }

    /// Block sum `M ⊕ N` over the same ring.
    pub fn direct_sum(&self, other: &RingModule) -> Result<RingModule> {
        crate::ring::same_ring(&self.ring, &other.ring)?;
        let g = self.generators + other.generators;
        let rel = block_diag(self.relations(), other.relations(), 0, self.generators);
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| block_diag(a, b, self.generators, self.generators))
            .collect();
        RingModule::from_parts(self.ring.clone(), g, &rel, action)
    }
}

fn add_scaled(out: &mut IntMatrix, m: &IntMatrix, c: &BigInt) {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let v = m.get(i, j);
            if !v.is_zero() {
                let cur = out.get(i, j) + c * v;
                out.set(i, j, cur);
            }
        }
    }
}

/// `[[a, 0], [0, b]]`; `a_rows_min`/`a_cols` fix the shape of an empty `a`.
fn block_diag(a: &IntMatrix, b: &IntMatrix, a_rows_min: usize, a_cols: usize) -> IntMatrix {
    let ar = a.rows().max(a_rows_min);
    let (br, bc) = b.shape();
    let mut out = Matrix::zeros(ar + br, a_cols + bc);
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            out.set(i, j, a.get(i, j).clone());
        }
    }
    for i in 0..br {
        for j in 0..bc {
            out.set(ar + i, a_cols + j, b.get(i, j).clone());
        }
    }
    out
}

/// `R / Iⁿ` with the regular action, `I` the augmentation ideal.
pub fn truncated_ring_module(ring: &Arc<BasedRing>, n: usize) -> Result<RingModule> {
    if n == 0 {
        return Err(Error::InvalidInput("truncation power must be at least 1".into()));
    }
    let ideal = ideal_power(ring, n)?;
    let action = (0..ring.rank())
        .map(|i| ring.multiplication_matrix(&ring.basis_element(i)))
        .collect::<Result<Vec<_>>>()?;
    RingModule::new(ring.clone(), ring.rank(), ideal.basis(), action)
}

/// `R(S¹)/I(S¹)ⁿ` as a free module of rank `n` on `1, λ, …, λⁿ⁻¹` over the
/// truncated circle ring.
pub fn circle_module(n: usize) -> Result<RingModule> {
    let t = crate::ring::circle_truncation(n)?;
    let ring = t.based().clone();
    let action = (0..n)
        .map(|i| ring.multiplication_matrix(&ring.basis_element(i)))
        .collect::<Result<Vec<_>>>()?;
    RingModule::new(ring, n, &Matrix::zeros(0, n), action)
}
