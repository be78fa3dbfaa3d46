use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::FgAbelianGroup;
use crate::linalg::{invariant_factors, Matrix};
use crate::IntMatrix;

/// Largest number of top-dimensional faces `N^k` a model may have.
pub const JOIN_FACE_CAP: usize = 100_000;

/// Complete `k`-partite complex on `k` parts of `N` vertices each. Vertex
/// `part·N + element` is the copy of `element` in the given join factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinComplex {
    parts: usize,
    part_size: usize,
}

pub fn build_join_complex(part_size: usize, copies: usize) -> Result<JoinComplex> {
    if part_size == 0 || copies == 0 {
        return Err(Error::InvalidInput(
            "set size and number of copies must be positive".into(),
        ));
    }
    let top = (part_size as u128).checked_pow(copies as u32);
    match top {
        Some(t) if t <= JOIN_FACE_CAP as u128 => Ok(JoinComplex {
            parts: copies,
            part_size,
        }),
        _ => Err(Error::CapExceeded {
            what: "join top faces",
            needed: format!("{part_size}^{copies}"),
            cap: JOIN_FACE_CAP,
        }),
    }
}

impl JoinComplex {
    pub fn parts(&self) -> usize {
        self.parts
    }

    pub fn part_size(&self) -> usize {
        self.part_size
    }

    pub fn dimension(&self) -> usize {
        self.parts - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.parts * self.part_size
    }

    /// `d`-faces as increasing vertex lists, in lexicographic order.
    pub fn faces(&self, d: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if d < self.parts {
            let mut cur = Vec::with_capacity(d + 1);
            self.extend_faces(0, d + 1, &mut cur, &mut out);
        }
        out
    }

    fn extend_faces(
        &self,
        first_part: usize,
        remaining: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if remaining == 0 {
            out.push(cur.clone());
            return;
        }
        for part in first_part..=self.parts - remaining {
            for e in 0..self.part_size {
                cur.push(part * self.part_size + e);
                self.extend_faces(part + 1, remaining - 1, cur, out);
                cur.pop();
            }
        }
    }
}

/// Simplicial boundary maps in row convention: `boundaries[d-1]` has one row
/// per `d`-face and one column per `(d−1)`-face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    pub face_counts: Vec<usize>,
    pub boundaries: Vec<IntMatrix>,
}

impl ChainComplex {
    pub fn top_dimension(&self) -> usize {
        self.face_counts.len().saturating_sub(1)
    }

    /// Checks `∂_{d} ∘ ∂_{d+1} = 0` for every consecutive pair.
    pub fn boundary_squared_vanishes(&self) -> bool {
        self.boundaries.windows(2).all(|w| {
            w[1].checked_mul(&w[0])
                .map(|m| m.is_zero())
                .unwrap_or(false)
        })
    }
}

pub fn boundary_matrices(complex: &JoinComplex) -> ChainComplex {
    let top = complex.dimension();
    let faces: Vec<Vec<Vec<usize>>> = (0..=top).map(|d| complex.faces(d)).collect();
    let face_counts = faces.iter().map(Vec::len).collect();
    let mut boundaries = Vec::with_capacity(top);
    for d in 1..=top {
        let index: HashMap<&[usize], usize> = faces[d - 1]
            .iter()
            .enumerate()
            .map(|(i, f)| (f.as_slice(), i))
            .collect();
        let mut m = Matrix::zeros(faces[d].len(), faces[d - 1].len());
        let mut facet = Vec::with_capacity(d);
        for (row, face) in faces[d].iter().enumerate() {
            for i in 0..=d {
                facet.clear();
                facet.extend(face.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v));
                let col = index[facet.as_slice()];
                let sign = if i % 2 == 0 { 1 } else { -1 };
                m.set(row, col, BigInt::from(sign));
            }
        }
        boundaries.push(m);
    }
    ChainComplex {
        face_counts,
        boundaries,
    }
}

/// Reduced integer homology `H̃_0, …, H̃_top`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    groups: Vec<FgAbelianGroup>,
}

impl BettiTable {
    pub fn groups(&self) -> &[FgAbelianGroup] {
        &self.groups
    }

    pub fn rank(&self, d: usize) -> usize {
        self.groups.get(d).map_or(0, FgAbelianGroup::free_rank)
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, g) in self.groups.iter().enumerate() {
            if d > 0 {
                write!(f, ", ")?;
            }
            write!(f, "H{d} = {g}")?;
        }
        Ok(())
    }
}

/// Homology from the Smith forms of the boundary maps, with `∂_0` the
/// augmentation. The boundary maps are reduced on separate threads.
pub fn reduced_homology(chain: &ChainComplex) -> BettiTable {
    let factors: Vec<Vec<BigInt>> = std::thread::scope(|s| {
        let handles: Vec<_> = chain
            .boundaries
            .iter()
            .map(|b| s.spawn(move || invariant_factors(b)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let top = chain.top_dimension();
    // rank of ∂_d for d = 0..=top+1
    let mut ranks = vec![0usize; top + 2];
    ranks[0] = usize::from(chain.face_counts.first().is_some_and(|&n| n > 0));
    for (d, f) in factors.iter().enumerate() {
        ranks[d + 1] = f.len();
    }
    let groups = (0..=top)
        .map(|d| {
            let free = chain.face_counts[d] - ranks[d] - ranks[d + 1];
            let torsion = factors
                .get(d)
                .map(|f| f.iter().filter(|x| !x.is_one()).cloned().collect())
                .unwrap_or_default();
            FgAbelianGroup::new(free, torsion).expect("Smith factors form a chain")
        })
        .collect();
    BettiTable { groups }
}
