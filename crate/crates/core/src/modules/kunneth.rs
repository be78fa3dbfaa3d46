use std::sync::Arc;

use serde::Serialize;

use crate::error::Result;
use crate::groups::{self, FgAbelianGroup};
use crate::linalg::Matrix;

use super::module::RingModule;

/// Tensor and Tor terms of the Künneth sequence. The extension between them
/// is not computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KunnethPieces {
    pub tensor: RingModule,
    pub tor: FgAbelianGroup,
}

/// `M ⊗_Z N` as a module over `R ⊗_Z S`: generator `(a, b)` sits at
/// `a·g_N + b` and basis element `eᵢ ⊗ fⱼ` acts by `Aᵢ ⊗ Bⱼ`.
pub fn kunneth_pieces(mg: &RingModule, mh: &RingModule) -> Result<KunnethPieces> {
    let ring = Arc::new(mg.ring().tensor(mh.ring()));
    let (g1, g2) = (mg.generators(), mh.generators());
    let rel = mg
        .relations()
        .kronecker(&Matrix::identity(g2))
        .vstack(&Matrix::identity(g1).kronecker(mh.relations()))?;
    let mut action = Vec::with_capacity(ring.rank());
    for a in mg.action() {
        for b in mh.action() {
            action.push(a.kronecker(b));
        }
    }
    let tensor = RingModule::from_parts(ring, g1 * g2, &rel, action)?;
    let tor = groups::tor(&mg.underlying_group(), &mh.underlying_group());
    Ok(KunnethPieces { tensor, tor })
}

/// A `Z/2`-graded module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedModulePair {
    pub even: RingModule,
    pub odd: RingModule,
}

impl GradedModulePair {
    pub fn new(even: RingModule, odd: RingModule) -> Result<Self> {
        crate::ring::same_ring(even.ring(), odd.ring())?;
        Ok(GradedModulePair { even, odd })
    }

    pub fn even_only(even: RingModule) -> Self {
        let odd = RingModule::zero(even.ring().clone());
        GradedModulePair { even, odd }
    }
}

/// Graded pieces of the Künneth sequence. The Tor term placed in degree
/// `n` is the one feeding `K_n` through the connecting map, i.e. built from
/// degrees summing to `n + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedKunneth {
    pub even_tensor: RingModule,
    pub odd_tensor: RingModule,
    pub even_tor: FgAbelianGroup,
    pub odd_tor: FgAbelianGroup,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedGroups {
    pub even_tensor: FgAbelianGroup,
    pub odd_tensor: FgAbelianGroup,
    pub even_tor: FgAbelianGroup,
    pub odd_tor: FgAbelianGroup,
}

impl GradedKunneth {
    pub fn groups(&self) -> GradedGroups {
        GradedGroups {
            even_tensor: self.even_tensor.underlying_group(),
            odd_tensor: self.odd_tensor.underlying_group(),
            even_tor: self.even_tor.clone(),
            odd_tor: self.odd_tor.clone(),
        }
    }
}

pub fn graded_kunneth(pg: &GradedModulePair, ph: &GradedModulePair) -> Result<GradedKunneth> {
    let ee = kunneth_pieces(&pg.even, &ph.even)?;
    let oo = kunneth_pieces(&pg.odd, &ph.odd)?;
    let eo = kunneth_pieces(&pg.even, &ph.odd)?;
    let oe = kunneth_pieces(&pg.odd, &ph.even)?;
    Ok(GradedKunneth {
        even_tensor: ee.tensor.direct_sum(&oo.tensor)?,
        odd_tensor: eo.tensor.direct_sum(&oe.tensor)?,
        even_tor: eo.tor.direct_sum(&oe.tor),
        odd_tor: ee.tor.direct_sum(&oo.tor),
    })
}
