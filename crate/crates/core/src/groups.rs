//! Finitely generated abelian groups in invariant-factor form.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{cokernel_invariants, invariant_factors, Matrix, RowLattice};
use crate::IntMatrix;

/// `Z^free_rank ⊕ Z_{d₁} ⊕ … ⊕ Z_{d_k}` with `1 < d₁ | d₂ | … | d_k`.
///
/// The form is canonical, so two groups are isomorphic exactly when they
/// compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FgAbelianGroup {
    #[serde(with = "crate::serde_dec")]
    free_rank: usize,
    #[serde(with = "crate::serde_dec::vec")]
    torsion: Vec<BigInt>,
}

impl FgAbelianGroup {
    /// Validates an invariant-factor chain.
    pub fn new(free_rank: usize, torsion: Vec<BigInt>) -> Result<Self> {
        if let Some(d) = torsion.iter().find(|d| **d <= BigInt::one()) {
            return Err(Error::InvalidInput(format!("invariant factor {d} is not > 1")));
        }
        if let Some(w) = torsion.windows(2).find(|w| !w[1].is_multiple_of(&w[0])) {
            return Err(Error::InvalidInput(format!("{} does not divide {}", w[0], w[1])));
        }
        Ok(FgAbelianGroup { free_rank, torsion })
    }

    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FgAbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// `Z/n`; `n = 0` gives `Z`.
    pub fn cyclic(n: impl Into<BigInt>) -> Self {
        Self::from_cyclic_orders(0, vec![n.into()])
    }

    /// Direct sum of `Z^free_rank` and the cyclic groups `Z/nᵢ`, in any
    /// order. Zeros count as free summands and units vanish.
    pub fn from_cyclic_orders(free_rank: usize, orders: Vec<BigInt>) -> Self {
        let mut free = free_rank;
        let mut finite = Vec::new();
        for n in orders {
            let n = n.abs();
            if n.is_zero() {
                free += 1;
            } else if !n.is_one() {
                finite.push(n);
            }
        }
        let torsion = if finite.len() <= 1 {
            finite
        } else {
            let k = finite.len();
            invariant_factors(&Matrix::diagonal(k, k, &finite))
                .into_iter()
                .filter(|d| !d.is_one())
                .collect()
        };
        FgAbelianGroup {
            free_rank: free,
            torsion,
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Order of a finite group; `None` when there is a free part.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }

    /// Minimal number of generators.
    pub fn num_generators(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        direct_sum(self, other)
    }

    pub fn tensor(&self, other: &Self) -> Self {
        tensor(self, other)
    }

    pub fn tor(&self, other: &Self) -> Self {
        tor(self, other)
    }

    /// A presentation with one generator per cyclic summand.
    pub fn presentation(&self) -> Presentation {
        let g = self.num_generators();
        let t = self.torsion.len();
        let mut rel = Matrix::zeros(t, g);
        for (i, d) in self.torsion.iter().enumerate() {
            rel.set(i, self.free_rank + i, d.clone());
        }
        Presentation {
            generators: g,
            relations: rel,
        }
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z_{d}")));
        f.write_str(&parts.join(" ⊕ "))
    }
}

impl FromStr for FgAbelianGroup {
    type Err = Error;

    /// Parses the rendering produced by `Display`; `+` may stand in for `⊕`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" || s.is_empty() {
            return Ok(Self::trivial());
        }
        let mut free = 0usize;
        let mut orders = Vec::new();
        for token in s.split(['+', '⊕']).map(str::trim) {
            let bad = || Error::Parse(format!("bad group summand {token:?}"));
            if token == "Z" {
                free += 1;
            } else if let Some(r) = token.strip_prefix("Z^") {
                free += r.parse::<usize>().map_err(|_| bad())?;
            } else if let Some(d) = token.strip_prefix("Z_") {
                let d: BigInt = d.trim_matches(['{', '}']).parse().map_err(|_| bad())?;
                if d <= BigInt::zero() {
                    return Err(bad());
                }
                orders.push(d);
            } else {
                return Err(bad());
            }
        }
        Ok(Self::from_cyclic_orders(free, orders))
    }
}

pub fn direct_sum(a: &FgAbelianGroup, b: &FgAbelianGroup) -> FgAbelianGroup {
    let orders = a.torsion.iter().chain(&b.torsion).cloned().collect();
    FgAbelianGroup::from_cyclic_orders(a.free_rank + b.free_rank, orders)
}

/// `A ⊗_Z B` from the closed forms `Z⊗Z = Z`, `Z⊗Z_e = Z_e`,
/// `Z_d⊗Z_e = Z_gcd(d,e)`.
pub fn tensor(a: &FgAbelianGroup, b: &FgAbelianGroup) -> FgAbelianGroup {
    let mut orders = Vec::new();
    for _ in 0..a.free_rank {
        orders.extend(b.torsion.iter().cloned());
    }
    for _ in 0..b.free_rank {
        orders.extend(a.torsion.iter().cloned());
    }
    for d in &a.torsion {
        for e in &b.torsion {
            orders.push(d.gcd(e));
        }
    }
    FgAbelianGroup::from_cyclic_orders(a.free_rank * b.free_rank, orders)
}

/// `Tor(A, B)`: free summands are flat and `Tor(Z_d, Z_e) = Z_gcd(d,e)`.
pub fn tor(a: &FgAbelianGroup, b: &FgAbelianGroup) -> FgAbelianGroup {
    let orders = a
        .torsion
        .iter()
        .flat_map(|d| b.torsion.iter().map(move |e| d.gcd(e)))
        .collect();
    FgAbelianGroup::from_cyclic_orders(0, orders)
}

/// Generators and relations: the group `Z^generators / rowspan(relations)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: usize,
    relations: IntMatrix,
}

impl Presentation {
    pub fn new(generators: usize, relations: IntMatrix) -> Result<Self> {
        if relations.rows() > 0 && relations.cols() != generators {
            return Err(Error::Shape(format!(
                "relations have {} columns for {generators} generators",
                relations.cols()
            )));
        }
        let relations = if relations.rows() == 0 {
            Matrix::zeros(0, generators)
        } else {
            relations
        };
        Ok(Presentation {
            generators,
            relations,
        })
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    pub fn normalize(&self) -> FgAbelianGroup {
        let c = cokernel_invariants(&self.relations);
        FgAbelianGroup {
            free_rank: c.free_rank,
            torsion: c.torsion,
        }
    }
}

/// The group `span(generators) / span(sub)` for row lattices with
/// `span(sub) ⊆ span(generators)`.
pub fn subquotient(generators: &IntMatrix, sub: &IntMatrix) -> Result<FgAbelianGroup> {
    let outer = RowLattice::span(generators);
    let inner = if sub.rows() == 0 {
        RowLattice::zero(outer.ambient_dim())
    } else {
        RowLattice::span(sub)
    };
    lattice_quotient(&outer, &inner)
}

/// `outer / inner` for nested lattices, presented in the Hermite basis of
/// `outer`.
pub fn lattice_quotient(
    outer: &RowLattice<BigInt>,
    inner: &RowLattice<BigInt>,
) -> Result<FgAbelianGroup> {
    outer.check_contains(inner)?;
    let coords = (0..inner.rank())
        .map(|i| {
            outer
                .coordinates(inner.basis().row(i))
                .expect("containment checked")
        })
        .collect();
    let rel = Matrix::from_rows_with_cols(coords, outer.rank())?;
    Ok(Presentation::new(outer.rank(), rel)?.normalize())
}
