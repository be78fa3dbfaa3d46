use std::path::Path;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{BasedRing, RingElement};
use crate::serde_dec::Dec;

/// On-disk fusion table: `fusion[i][j]` lists `(k, N_{ij}^k)` pairs with
/// nonzero multiplicity. Integers are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FusionTable {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub labels: Vec<String>,
    pub dims: Vec<Dec<BigInt>>,
    pub fusion: Vec<Vec<Vec<(Dec<usize>, Dec<u64>)>>>,
}

/// Representation ring `R(G)` given by fusion data.
///
/// Index 0 is the trivial representation, `dims` are the dimensions and
/// `N_{ij}^k` the multiplicity of `V_k` in `V_i ⊗ V_j`. All ring axioms are
/// checked when the ring is built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionRing {
    labels: Vec<String>,
    dims: Vec<BigInt>,
    /// Dense `N_{ij}^k` at `(i * rank + j) * rank + k`.
    fusion: Vec<u64>,
    based: Arc<BasedRing>,
}

impl FusionRing {
    fn build(name: String, labels: Vec<String>, dims: Vec<BigInt>, fusion: Vec<u64>) -> Result<Self> {
        let r = labels.len();
        if r == 0 {
            return Err(Error::InvalidInput("a fusion ring needs at least the unit".into()));
        }
        if dims.len() != r || fusion.len() != r * r * r {
            return Err(Error::Shape(format!(
                "{r} labels, {} dims, fusion of size {}",
                dims.len(),
                fusion.len()
            )));
        }
        if !dims[0].is_one() {
            return Err(Error::Axiom {
                axiom: "unit dimension",
                indices: vec![0],
            });
        }
        if let Some(i) = dims.iter().position(|d| !d.is_positive()) {
            return Err(Error::Axiom {
                axiom: "positive dimensions",
                indices: vec![i],
            });
        }
        let n = |i: usize, j: usize, k: usize| fusion[(i * r + j) * r + k];

        for j in 0..r {
            for k in 0..r {
                if n(0, j, k) != u64::from(j == k) {
                    return Err(Error::Axiom {
                        axiom: "unit law",
                        indices: vec![0, j, k],
                    });
                }
            }
        }
        for i in 0..r {
            for j in 0..i {
                if let Some(k) = (0..r).find(|&k| n(i, j, k) != n(j, i, k)) {
                    return Err(Error::Axiom {
                        axiom: "commutativity",
                        indices: vec![i, j, k],
                    });
                }
            }
        }
        for i in 0..r {
            for j in 0..r {
                let rhs: BigInt = (0..r).map(|k| BigInt::from(n(i, j, k)) * &dims[k]).sum();
                if &dims[i] * &dims[j] != rhs {
                    return Err(Error::Axiom {
                        axiom: "dimension homomorphism",
                        indices: vec![i, j],
                    });
                }
            }
        }
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    for l in 0..r {
                        let left: u128 = (0..r)
                            .map(|m| u128::from(n(i, j, m)) * u128::from(n(m, k, l)))
                            .sum();
                        let right: u128 = (0..r)
                            .map(|m| u128::from(n(j, k, m)) * u128::from(n(i, m, l)))
                            .sum();
                        if left != right {
                            return Err(Error::Axiom {
                                axiom: "associativity",
                                indices: vec![i, j, k, l],
                            });
                        }
                    }
                }
            }
        }

        let products = (0..r * r)
            .map(|ij| {
                (0..r)
                    .filter(|&k| fusion[ij * r + k] != 0)
                    .map(|k| (k, BigInt::from(fusion[ij * r + k])))
                    .collect()
            })
            .collect();
        let based = BasedRing::from_parts(name, labels.clone(), dims.clone(), products);
        Ok(FusionRing {
            labels,
            dims,
            fusion,
            based: Arc::new(based),
        })
    }

    pub fn from_table(table: &FusionTable) -> Result<Self> {
        let r = table.labels.len();
        if table.fusion.len() != r || table.fusion.iter().any(|row| row.len() != r) {
            return Err(Error::Shape(format!("fusion table must be {r}x{r}")));
        }
        let mut fusion = vec![0u64; r * r * r];
        for (i, row) in table.fusion.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                for (Dec(k), Dec(mult)) in cell {
                    if *k >= r {
                        return Err(Error::InvalidInput(format!(
                            "fusion[{i}][{j}] names class {k} of a rank-{r} ring"
                        )));
                    }
                    fusion[(i * r + j) * r + k] += mult;
                }
            }
        }
        let dims = table.dims.iter().map(|d| d.0.clone()).collect();
        let name = table.name.clone().unwrap_or_else(|| "R".into());
        Self::build(name, table.labels.clone(), dims, fusion)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let table: FusionTable =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_table(&table)
    }

    pub fn from_fusion_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// The symmetric group on three letters: trivial, sign and the
    /// two-dimensional standard representation.
    pub fn s3() -> Self {
        Self::from_json(include_str!("../../data/s3_fusion.json")).expect("bundled S3 table is valid")
    }

    pub fn to_table(&self) -> FusionTable {
        let r = self.rank();
        let fusion = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        (0..r)
                            .filter(|&k| self.coefficient(i, j, k) != 0)
                            .map(|k| (Dec(k), Dec(self.coefficient(i, j, k))))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        FusionTable {
            name: Some(self.name().to_string()),
            labels: self.labels.clone(),
            dims: self.dims.iter().cloned().map(Dec).collect(),
            fusion,
        }
    }

    pub fn name(&self) -> &str {
        self.based.name()
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dims(&self) -> &[BigInt] {
        &self.dims
    }

    /// `N_{ij}^k`.
    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> u64 {
        let r = self.rank();
        self.fusion[(i * r + j) * r + k]
    }

    pub fn based(&self) -> &Arc<BasedRing> {
        &self.based
    }

    /// `Σ dimᵢ²`, the order of the group.
    pub fn group_order(&self) -> BigInt {
        self.dims.iter().map(|d| d * d).sum()
    }

    pub fn multiply(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.based.multiply(a, b)
    }

    /// The class `Σ dimᵢ·[Vᵢ]` of the regular representation.
    pub fn regular_class(&self) -> RingElement {
        RingElement::new(self.dims.clone())
    }
}

/// `R(Z_n)`: characters `1, s, …, s^{n-1}` with `sⁱ·sʲ = s^{i+j mod n}`.
pub fn cyclic_ring(n: usize) -> Result<FusionRing> {
    if n == 0 {
        return Err(Error::InvalidInput("cyclic group order must be positive".into()));
    }
    let labels = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "s".to_string(),
            _ => format!("s^{i}"),
        })
        .collect();
    let mut fusion = vec![0u64; n * n * n];
    for i in 0..n {
        for j in 0..n {
            fusion[(i * n + j) * n + (i + j) % n] = 1;
        }
    }
    FusionRing::build(format!("Z{n}"), labels, vec![BigInt::one(); n], fusion)
}

/// `R(G × H) ≅ R(G) ⊗_Z R(H)`: Kronecker products of dims and fusion.
pub fn product_ring(a: &FusionRing, b: &FusionRing) -> FusionRing {
    let (r1, r2) = (a.rank(), b.rank());
    let r = r1 * r2;
    let mut labels = Vec::with_capacity(r);
    let mut dims = Vec::with_capacity(r);
    for i in 0..r1 {
        for j in 0..r2 {
            labels.push(format!("({},{})", a.labels[i], b.labels[j]));
            dims.push(&a.dims[i] * &b.dims[j]);
        }
    }
    let mut fusion = vec![0u64; r * r * r];
    for x in 0..r {
        for y in 0..r {
            for z in 0..r {
                let n = a.coefficient(x / r2, y / r2, z / r2) * b.coefficient(x % r2, y % r2, z % r2);
                if n != 0 {
                    fusion[(x * r + y) * r + z] = n;
                }
            }
        }
    }
    FusionRing::build(format!("{}x{}", a.name(), b.name()), labels, dims, fusion)
        .expect("product of fusion rings is a fusion ring")
}
