use crate::error::{Error, Result};
use crate::groups::FgAbelianGroup;
use crate::join::{boundary_matrices, build_join_complex, reduced_homology};
use crate::modules::{ideal_image, stable_nonvanishing_under, KModelDescriptor, RingModule};
use crate::ring::{augmentation_ideal, IdealLattice, DEFAULT_PRODUCT_CAP};

use super::bound::{combine, kind_name, AnnihilatorWitness, Certificate, CommutativeGroup, DimBound, IdealKind, Upper};

/// Largest join for which the sphere identification is recomputed.
pub const SPHERE_CHECK_MAX_COPIES: usize = 6;

fn reject<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Certificate(msg.into()))
}

/// The ideal a witness raises to its power, over the model's ring.
pub(crate) fn witness_ideal(
    model: &KModelDescriptor,
    module: &RingModule,
    kind: IdealKind,
    power: usize,
) -> Result<IdealLattice> {
    match kind {
        IdealKind::Augmentation => augmentation_ideal(module.ring()).power(power, DEFAULT_PRODUCT_CAP),
        IdealKind::LeftFactor => {
            let KModelDescriptor::Kunneth { left, right } = model else {
                return reject(format!("left-factor ideal needs a Künneth model, got {model}"));
            };
            let (l, r) = (left.instantiate()?, right.instantiate()?);
            augmentation_ideal(l.ring())
                .power(power, DEFAULT_PRODUCT_CAP)?
                .extend_to_product(r.ring())
        }
    }
}

/// Recomputes the image group of a witness and, if present, its stability.
pub(crate) fn recompute_witness(w: &AnnihilatorWitness) -> Result<(FgAbelianGroup, Option<bool>)> {
    let module = w.model.instantiate()?;
    if module.ring().name() != w.ring {
        return reject(format!("model {} lives over {}, not {}", w.model, module.ring().name(), w.ring));
    }
    let ideal = witness_ideal(&w.model, &module, w.ideal, w.power)?;
    let group = ideal_image(&ideal, &module)?;
    let stable = match &w.stability {
        Some(s) => Some(stable_nonvanishing_under(&ideal, &module, &s.element, &s.multiplier)?),
        None => None,
    };
    Ok((group, stable))
}

fn check_witness(w: &AnnihilatorWitness, lower: u64) -> Result<()> {
    if (w.power as u64) < lower {
        return reject(format!("witness power {} is below the claimed lower bound {lower}", w.power));
    }
    let (group, stable) = recompute_witness(w)?;
    if group.is_trivial() {
        return reject(format!("I^{} acts as zero on {}", w.power, w.model));
    }
    if group != w.nonzero_group {
        return reject(format!("image is {group}, certificate claims {}", w.nonzero_group));
    }
    if stable == Some(false) {
        let n = &w.stability.as_ref().expect("stability present").multiplier;
        return reject(format!("image dies under multiplication by powers of {n}"));
    }
    Ok(())
}

/// Reduced homology of the `k`-fold join of two points is that of `S^{k−1}`.
pub fn sphere_identification(copies: usize) -> Result<bool> {
    let h = reduced_homology(&boundary_matrices(&build_join_complex(2, copies)?));
    Ok(h.groups().iter().enumerate().all(|(d, g)| {
        if d + 1 == copies {
            *g == FgAbelianGroup::free(1)
        } else {
            g.is_trivial()
        }
    }))
}

fn check_index(group: CommutativeGroup, copies: usize, ind: usize, value: u64) -> Result<()> {
    if copies == 0 || ind != copies {
        return reject(format!("index {ind} does not match {group}^(*{copies})"));
    }
    if value != ind as u64 - 1 {
        return reject(format!("index {ind} gives dimension {}, not {value}", ind - 1));
    }
    if group == CommutativeGroup::Cyclic(2) && copies <= SPHERE_CHECK_MAX_COPIES && !sphere_identification(copies)? {
        return reject(format!("join of {copies} copies of Z2 is not a sphere"));
    }
    Ok(())
}

fn check_lower(b: &DimBound) -> Result<()> {
    match &b.lower_certificate {
        Certificate::Vacuous if b.lower == 0 => Ok(()),
        Certificate::Vacuous => reject(format!("lower {} claimed without a certificate", b.lower)),
        Certificate::AnnihilatorWitness(w) => check_witness(w, b.lower),
        Certificate::IndexWitness { group, copies, ind } => check_index(*group, *copies, *ind, b.lower),
        other => reject(format!("{} cannot certify a lower bound", kind_name(other))),
    }
}

fn check_upper(b: &DimBound) -> Result<()> {
    match &b.upper_certificate {
        Certificate::Vacuous if b.upper == Upper::Infinite => Ok(()),
        Certificate::Vacuous => reject(format!("upper {} claimed without a certificate", b.upper)),
        Certificate::JoinFactorWitness { copies } => {
            if *copies == 0 || b.upper != Upper::Finite(*copies as u64 - 1) {
                return reject(format!("a {copies}-fold join gives upper {}, not {}", copies.saturating_sub(1), b.upper));
            }
            Ok(())
        }
        Certificate::IndexWitness { group, copies, ind } => match b.upper {
            Upper::Finite(u) => check_index(*group, *copies, *ind, u),
            Upper::Infinite => reject("index witness with infinite upper bound"),
        },
        Certificate::RuleApplication { rule, inputs } => {
            let [a, c] = inputs.as_slice() else {
                return reject(format!("rule {rule} needs two inputs, found {}", inputs.len()));
            };
            check(a)?;
            check(c)?;
            let expected = combine(*rule, a.upper, c.upper).or_else(|e| reject(e.to_string()))?;
            if expected != b.upper {
                return reject(format!("rule {rule} gives upper {expected}, not {}", b.upper));
            }
            Ok(())
        }
        Certificate::AnnihilatorWitness(_) => reject("annihilator witness cannot certify an upper bound"),
    }
}

/// Recomputes every certificate of `b`, failing with the first mismatch.
pub fn check(b: &DimBound) -> Result<()> {
    if !b.upper.is_at_least(b.lower) {
        return reject(format!("lower {} exceeds upper {}", b.lower, b.upper));
    }
    check_lower(b)?;
    check_upper(b)
}

/// `true` iff every certificate reproduces and `lower ≤ upper`.
pub fn validate(b: &DimBound) -> bool {
    check(b).is_ok()
}

