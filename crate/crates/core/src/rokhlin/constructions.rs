use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modules::KModelDescriptor;
use crate::ring::RingSpec;

use super::bound::{
    tensor_rule, AnnihilatorWitness, Certificate, CommutativeGroup, DimBound, IdealKind, Stability,
    TensorRule, Upper,
};
use super::check::{recompute_witness, sphere_identification, SPHERE_CHECK_MAX_COPIES};

fn positive(name: &str, v: u64) -> Result<()> {
    if v == 0 {
        return Err(Error::InvalidInput(format!("{name} must be positive")));
    }
    Ok(())
}

fn count(v: u64) -> Result<usize> {
    usize::try_from(v).map_err(|_| Error::InvalidInput(format!("{v} is too large")))
}

/// Builds a witness and computes its image group live.
fn witness(
    model: KModelDescriptor,
    power: usize,
    ideal: IdealKind,
    multiplier: Option<BigInt>,
) -> Result<Certificate> {
    let module = model.instantiate()?;
    let stability = multiplier.map(|multiplier| Stability {
        multiplier,
        element: module.generator(0),
    });
    let mut w = AnnihilatorWitness {
        ring: module.ring().name().to_string(),
        model,
        power,
        ideal,
        nonzero_group: Default::default(),
        stability,
    };
    let (group, stable) = recompute_witness(&w)?;
    if group.is_trivial() || stable == Some(false) {
        return Err(Error::Certificate(format!(
            "I^{power} image on {} is {group}; no witness",
            w.model
        )));
    }
    w.nonzero_group = group;
    Ok(Certificate::AnnihilatorWitness(w))
}

fn join_upper(copies: u64) -> Result<(Upper, Certificate)> {
    Ok((
        Upper::Finite(copies - 1),
        Certificate::JoinFactorWitness { copies: count(copies)? },
    ))
}

/// `Z₂` on an AF algebra: `m ≤ dim ≤ 2m+2`, with `K⁰ ≅ R(Z₂)/I(Z₂)^{m+1}`
/// for the `(2m+3)`-fold join.
pub fn z2_af_bounds(m: u64) -> Result<DimBound> {
    positive("m", m)?;
    let l = count(m)?;
    let lower_certificate = witness(
        KModelDescriptor::TruncatedZ2 { l: l + 1 },
        l,
        IdealKind::Augmentation,
        None,
    )?;
    let (upper, upper_certificate) = join_upper(2 * m + 3)?;
    Ok(DimBound {
        lower: m,
        upper,
        lower_certificate,
        upper_certificate,
    })
}

/// `S¹` on an AH algebra: `dim = d`. The lower witness is stable under
/// doubling.
pub fn circle_ah_dimension(d: u64) -> Result<DimBound> {
    let n = count(d)?;
    let lower_certificate = if d == 0 {
        Certificate::Vacuous
    } else {
        witness(
            KModelDescriptor::Circle { n: n + 1 },
            n,
            IdealKind::Augmentation,
            Some(BigInt::from(2)),
        )?
    };
    let (upper, upper_certificate) = join_upper(d + 1)?;
    Ok(DimBound {
        lower: d,
        upper,
        lower_certificate,
        upper_certificate,
    })
}

/// `Z₂ × G` for `G` of odd order `n`: `m ≤ dim ≤ 2m+2`. The witness
/// `(I(Z₂) ⊗ R(G))^m` survives multiplication by `n`.
pub fn product_z2_bounds(m: u64, group: &RingSpec) -> Result<DimBound> {
    positive("m", m)?;
    let order = group.build()?.group_order();
    if (&order % 2u32) == BigInt::from(0) {
        return Err(Error::InvalidInput(format!(
            "{group} has even order {order}; the construction needs |G| coprime to 2"
        )));
    }
    let l = count(m)?;
    let model = KModelDescriptor::kunneth(
        KModelDescriptor::TruncatedZ2 { l: l + 1 },
        KModelDescriptor::TruncatedRing {
            ring: group.clone(),
            n: 1,
        },
    );
    let lower_certificate = witness(model, l, IdealKind::LeftFactor, Some(order))?;
    let (upper, upper_certificate) = join_upper(2 * m + 3)?;
    Ok(DimBound {
        lower: m,
        upper,
        lower_certificate,
        upper_certificate,
    })
}

/// `S¹ × G`: `dim = d`. The upper end absorbs a Rokhlin `G`-factor.
pub fn circle_product_dimension(d: u64, group: &RingSpec) -> Result<DimBound> {
    let n = count(d)?;
    group.build()?;
    let lower_certificate = if d == 0 {
        Certificate::Vacuous
    } else {
        let model = KModelDescriptor::kunneth(
            KModelDescriptor::Circle { n: n + 1 },
            KModelDescriptor::TruncatedRing {
                ring: group.clone(),
                n: 1,
            },
        );
        witness(model, n, IdealKind::LeftFactor, Some(BigInt::from(2)))?
    };
    let upper = tensor_rule(TensorRule::Absorb, &circle_ah_dimension(d)?, &DimBound::rokhlin())?;
    Ok(DimBound {
        lower: d,
        upper: upper.upper,
        lower_certificate,
        upper_certificate: upper.upper_certificate,
    })
}

/// The two factors and the product of the `Z₆` collapse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Z6Collapse {
    pub d: u64,
    /// `Z₂` factor of dimension `> d` tensored with a Rokhlin `Z₃`-action.
    pub factor1: DimBound,
    /// `Z₃` factor of dimension `> d` tensored with a Rokhlin `Z₂`-action.
    pub factor2: DimBound,
    /// The Rokhlin part `D₁ ⊗ D₂`.
    pub rokhlin_part: DimBound,
    pub product: DimBound,
}

impl Z6Collapse {
    /// Both factor lower bounds exceed `d` while the product has upper 0.
    pub fn non_monotone(&self) -> bool {
        self.factor1.lower > self.d
            && self.factor2.lower > self.d
            && self.product.upper == Upper::Finite(0)
    }
}

pub fn z6_collapse_report(d: u64) -> Result<Z6Collapse> {
    positive("d", d)?;
    let z2 = RingSpec::named("z2")?;
    let z3 = RingSpec::named("z3")?;
    let factor1 = product_z2_bounds(d + 1, &z3)?;
    let n = count(d)?;
    let model = KModelDescriptor::kunneth(
        KModelDescriptor::TruncatedRing { ring: z2, n: 1 },
        KModelDescriptor::TruncatedRing { ring: z3, n: n + 2 },
    );
    let factor2 = DimBound {
        lower: d + 1,
        upper: Upper::Infinite,
        lower_certificate: witness(model, n + 1, IdealKind::Augmentation, Some(BigInt::from(2)))?,
        upper_certificate: Certificate::Vacuous,
    };
    let rokhlin_part = tensor_rule(TensorRule::Sum, &DimBound::rokhlin(), &DimBound::rokhlin())?;
    // B₁ ⊗ B₂ carries an unknown action; the diagonal tensor with the
    // Rokhlin part is governed by the minimum.
    let product = tensor_rule(TensorRule::Min, &DimBound::unknown(), &rokhlin_part)?;
    Ok(Z6Collapse {
        d,
        factor1,
        factor2,
        rokhlin_part,
        product,
    })
}

/// `dim` and `ind` for the free `G`-space `G^{⋆k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutativeDimension {
    pub dim: u64,
    pub ind: u64,
    pub bound: DimBound,
    /// For `Z₂` with `k ≤ 6`: the join complex has the homology of `S^{k−1}`.
    pub sphere_checked: Option<bool>,
}

pub fn commutative_dimension(group: CommutativeGroup, copies: u64) -> Result<CommutativeDimension> {
    positive("k", copies)?;
    if let CommutativeGroup::Cyclic(n) = group {
        if n < 2 {
            return Err(Error::InvalidInput(format!("group z{n} is trivial")));
        }
    }
    let k = count(copies)?;
    let cert = Certificate::IndexWitness {
        group,
        copies: k,
        ind: k,
    };
    let sphere_checked = if group == CommutativeGroup::Cyclic(2) && k <= SPHERE_CHECK_MAX_COPIES {
        Some(sphere_identification(k)?)
    } else {
        None
    };
    Ok(CommutativeDimension {
        dim: copies - 1,
        ind: copies,
        bound: DimBound {
            lower: copies - 1,
            upper: Upper::Finite(copies - 1),
            lower_certificate: cert.clone(),
            upper_certificate: cert,
        },
        sphere_checked,
    })
}

/// Finite group on an AF algebra with `n < dim < ∞`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum FiniteAfOutcome {
    Bounded { bound: DimBound },
    /// Some odd number of join copies works, but no effective bound is known
    /// without a K-theory model of the joins.
    ExistenceOnly { group: String },
}

pub fn finite_af_bounds(group: &RingSpec, n: u64) -> Result<FiniteAfOutcome> {
    positive("n", n)?;
    group.build()?;
    if group.cyclic_order() == Some(2) {
        return Ok(FiniteAfOutcome::Bounded {
            bound: z2_af_bounds(n + 1)?,
        });
    }
    Ok(FiniteAfOutcome::ExistenceOnly {
        group: group.to_string(),
    })
}
