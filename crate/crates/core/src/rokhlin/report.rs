use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::RingSpec;

use super::bound::{Certificate, CommutativeGroup, DimBound, TensorRule};
use super::check::check;
use super::constructions::{
    circle_ah_dimension, circle_product_dimension, commutative_dimension, finite_af_bounds,
    product_z2_bounds, z2_af_bounds, z6_collapse_report, FiniteAfOutcome,
};

/// A named construction with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActionDescriptor {
    FiniteGroupAf { group: RingSpec, n: u64 },
    Z2Af { m: u64 },
    CircleAh { d: u64 },
    ProductZ2G { m: u64, group: RingSpec },
    CircleProduct { d: u64, group: RingSpec },
    Z6Collapse { d: u64 },
    CommutativeJoin { group: CommutativeGroup, copies: u64 },
}

impl ActionDescriptor {
    pub fn name(&self) -> &'static str {
        match self {
            ActionDescriptor::FiniteGroupAf { .. } => "finite-af",
            ActionDescriptor::Z2Af { .. } => "z2-af",
            ActionDescriptor::CircleAh { .. } => "circle-ah",
            ActionDescriptor::ProductZ2G { .. } => "product-z2",
            ActionDescriptor::CircleProduct { .. } => "circle-product",
            ActionDescriptor::Z6Collapse { .. } => "z6-collapse",
            ActionDescriptor::CommutativeJoin { .. } => "commutative",
        }
    }

    pub fn parameters(&self) -> BTreeMap<String, String> {
        let pairs: Vec<(&str, String)> = match self {
            ActionDescriptor::FiniteGroupAf { group, n } => vec![("group", group.to_string()), ("n", n.to_string())],
            ActionDescriptor::Z2Af { m } => vec![("m", m.to_string())],
            ActionDescriptor::CircleAh { d } => vec![("d", d.to_string())],
            ActionDescriptor::ProductZ2G { m, group } => vec![("m", m.to_string()), ("group", group.to_string())],
            ActionDescriptor::CircleProduct { d, group } => vec![("d", d.to_string()), ("group", group.to_string())],
            ActionDescriptor::Z6Collapse { d } => vec![("d", d.to_string())],
            ActionDescriptor::CommutativeJoin { group, copies } => {
                vec![("group", group.to_string()), ("k", copies.to_string())]
            }
        };
        pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Citation {
    pub role: String,
    pub statement: String,
}

fn cite(role: &str, statement: &str) -> Citation {
    Citation {
        role: role.into(),
        statement: statement.into(),
    }
}

const LOWER_CRITERION: &str = "I(G)^n K^G_*(A) ≠ 0 implies dim_Rok^c(α) ≥ n";
const JOIN_UPPER: &str = "the G^{⋆(d+1)}-Rokhlin property implies dim_Rok^c(α) ≤ d";

/// Machine-readable report:
/// `{construction, parameters, lower, upper, certificates, citations}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub construction: String,
    pub parameters: BTreeMap<String, String>,
    #[serde(flatten)]
    pub bound: DimBound,
    pub citations: Vec<Citation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outcome: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub components: Vec<Report>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub findings: Vec<String>,
}

impl Report {
    fn simple(desc: &ActionDescriptor, bound: DimBound, citations: Vec<Citation>) -> Self {
        Report {
            construction: desc.name().into(),
            parameters: desc.parameters(),
            bound,
            citations,
            outcome: None,
            components: Vec::new(),
            findings: Vec::new(),
        }
    }

    pub fn build(desc: &ActionDescriptor) -> Result<Self> {
        Ok(match desc {
            ActionDescriptor::Z2Af { m } => Report::simple(
                desc,
                z2_af_bounds(*m)?,
                vec![
                    cite("result", "m ≤ dim_Rok^c(α_m) ≤ 2m+2"),
                    cite("model", "K^0_{Z_2}(Z_2^{⋆(2l+1)}) ≅ R(Z_2)/I(Z_2)^l"),
                    cite("lower", LOWER_CRITERION),
                    cite("upper", JOIN_UPPER),
                ],
            ),
            ActionDescriptor::CircleAh { d } => Report::simple(
                desc,
                circle_ah_dimension(*d)?,
                vec![
                    cite("result", "dim_Rok^c(α) = d"),
                    cite("model", "K^*_{S^1}((S^1)^{⋆n}) ≅ R(S^1)/I(S^1)^n"),
                    cite("stability", "I(S^1)^n · 2^m [1] ≠ 0 for n ≤ d"),
                    cite("lower", LOWER_CRITERION),
                    cite("upper", JOIN_UPPER),
                    cite("join", "(S^1)^{⋆n} ≅ S^{2n−1}"),
                ],
            ),
            ActionDescriptor::ProductZ2G { m, group } => Report::simple(
                desc,
                product_z2_bounds(*m, group)?,
                vec![
                    cite("result", "m ≤ dim_Rok^c(α) ≤ 2m+2 for Z_2 × G, |G| odd"),
                    cite("model", "K_*^G(A) ⊗ K_*^H(B) ↪ K_*^{G×H}(A ⊗ B), with Tor(K_*^G(A), K_{*+1}^H(B)) as cokernel"),
                    cite("witness", "(I(Z_2) ⊗ R(G))^m K ≅ Z_2, and I(Z_2 × G) ⊇ I(Z_2) ⊗ R(G)"),
                    cite("stability", "connecting maps multiply by |G|, which is odd"),
                    cite("lower", LOWER_CRITERION),
                    cite("upper", "dim_Rok^c(β ⊗ γ) ≤ dim_Rok^c(β) when γ has the Rokhlin property"),
                ],
            ),
            ActionDescriptor::CircleProduct { d, group } => Report::simple(
                desc,
                circle_product_dimension(*d, group)?,
                vec![
                    cite("result", "dim_Rok^c(α) = d for S^1 × G"),
                    cite("model", "K^0_G(G) = R(G)/I(G) ≅ Z and K^1_G(G) = 0"),
                    cite("stability", "I(S^1 × G)^n N [1] ≠ 0 for n ≤ d and every N ≥ 1"),
                    cite("lower", LOWER_CRITERION),
                    cite("upper", "dim_Rok^c(β ⊗ γ) ≤ dim_Rok^c(β) when γ has the Rokhlin property"),
                ],
            ),
            ActionDescriptor::CommutativeJoin { group, copies } => {
                let c = commutative_dimension(*group, *copies)?;
                let mut r = Report::simple(
                    desc,
                    c.bound,
                    vec![
                        cite("result", "dim_Rok^c(α) = ind_G(Y) − 1 for commutative C(Y)"),
                        cite("index", "ind_G(G^{⋆k}) = k"),
                    ],
                );
                if let Some(ok) = c.sphere_checked {
                    r.citations.push(cite("sphere", "Z_2^{⋆k} ≅ S^{k−1}"));
                    r.findings.push(format!(
                        "join complex homology {} that of S^{}",
                        if ok { "matches" } else { "differs from" },
                        copies - 1
                    ));
                }
                r
            }
            ActionDescriptor::FiniteGroupAf { group, n } => match finite_af_bounds(group, *n)? {
                FiniteAfOutcome::Bounded { bound } => {
                    let mut r = Report::simple(
                        desc,
                        bound,
                        vec![
                            cite("result", "n < dim_Rok^c(α) < ∞"),
                            cite("model", "K^0_{Z_2}(Z_2^{⋆(2l+1)}) ≅ R(Z_2)/I(Z_2)^l"),
                            cite("lower", LOWER_CRITERION),
                            cite("upper", JOIN_UPPER),
                        ],
                    );
                    r.outcome = Some("bounded".into());
                    r
                }
                FiniteAfOutcome::ExistenceOnly { group } => {
                    let mut r = Report::simple(
                        desc,
                        DimBound::unknown(),
                        vec![
                            cite("result", "n < dim_Rok^c(α) < ∞"),
                            cite("existence", "I(G)^n K^*_G(G^{⋆k}) ≠ 0 for some odd k"),
                        ],
                    );
                    r.outcome = Some("existence_only".into());
                    r.findings.push(format!(
                        "no K-theory model for joins of {group}: a finite bound exists but none is computed"
                    ));
                    r
                }
            },
            ActionDescriptor::Z6Collapse { d } => {
                let z = z6_collapse_report(*d)?;
                let part = |name: &str, bound: DimBound, citations: Vec<Citation>| Report {
                    construction: name.into(),
                    parameters: desc.parameters(),
                    bound,
                    citations,
                    outcome: None,
                    components: Vec::new(),
                    findings: Vec::new(),
                };
                let mut r = Report::simple(
                    desc,
                    z.product.clone(),
                    vec![
                        cite("result", "dim_Rok^c(α_1 ⊗ α_2) = 0 while dim_Rok^c(α_i) > d"),
                        cite("upper", "dim_Rok^c(β ⊗ γ) ≤ min(dim_Rok^c(β), dim_Rok^c(γ)) for one group"),
                    ],
                );
                r.components = vec![
                    part("z6-factor-z2", z.factor1.clone(), vec![cite("lower", LOWER_CRITERION)]),
                    part(
                        "z6-factor-z3",
                        z.factor2.clone(),
                        vec![
                            cite("lower", LOWER_CRITERION),
                            cite("witness", "I(Z_p)^m / I(Z_p)^{m+1} ≅ Z_p"),
                        ],
                    ),
                    part(
                        "z6-rokhlin-part",
                        z.rokhlin_part.clone(),
                        vec![cite("upper", "dim_Rok^c(β ⊗ γ) ≤ dim_Rok^c(β) + dim_Rok^c(γ) for product groups")],
                    ),
                ];
                r.findings.push(format!(
                    "factor lower bounds {} and {} exceed d = {d}; product upper bound is {}",
                    z.factor1.lower, z.factor2.lower, z.product.upper
                ));
                r
            }
        })
    }

    /// Applies a tensor rule to two reports.
    pub fn tensor_rule(rule: TensorRule, r1: &Report, r2: &Report) -> Result<Self> {
        let bound = super::bound::tensor_rule(rule, &r1.bound, &r2.bound)?;
        let statement = match rule {
            TensorRule::Sum => "dim_Rok^c(β ⊗ γ) ≤ dim_Rok^c(β) + dim_Rok^c(γ) for product groups",
            TensorRule::Min => "dim_Rok^c(β ⊗ γ) ≤ min(dim_Rok^c(β), dim_Rok^c(γ)) for one group",
            TensorRule::Absorb => "dim_Rok^c(β ⊗ γ) ≤ dim_Rok^c(β) when γ has the Rokhlin property",
        };
        let mut parameters = BTreeMap::new();
        parameters.insert("rule".to_string(), rule.to_string());
        Ok(Report {
            construction: "tensor-rule".into(),
            parameters,
            bound,
            citations: vec![cite("upper", statement)],
            outcome: None,
            components: vec![r1.clone(), r2.clone()],
            findings: Vec::new(),
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("report: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Recomputes the bound and every component.
    pub fn check(&self) -> Result<()> {
        check(&self.bound)?;
        self.components.iter().try_for_each(Report::check)
    }

    pub fn validate(&self) -> bool {
        self.check().is_ok()
    }

    /// Number of annihilator witnesses in the report, components included.
    pub fn witness_count(&self) -> usize {
        fn count(b: &DimBound) -> usize {
            [&b.lower_certificate, &b.upper_certificate]
                .iter()
                .map(|c| match c {
                    Certificate::AnnihilatorWitness(_) => 1,
                    Certificate::RuleApplication { inputs, .. } => inputs.iter().map(count).sum(),
                    _ => 0,
                })
                .sum()
        }
        count(&self.bound) + self.components.iter().map(Report::witness_count).sum::<usize>()
    }
}
