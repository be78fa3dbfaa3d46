use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::FgAbelianGroup;
use crate::modules::KModelDescriptor;

/// Upper end of a dimension interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Upper {
    Finite(u64),
    Infinite,
}

impl Upper {
    pub fn finite(self) -> Option<u64> {
        match self {
            Upper::Finite(n) => Some(n),
            Upper::Infinite => None,
        }
    }

    fn add(self, other: Upper) -> Result<Upper> {
        match (self, other) {
            (Upper::Finite(a), Upper::Finite(b)) => a
                .checked_add(b)
                .map(Upper::Finite)
                .ok_or_else(|| Error::InvalidInput("bound overflows u64".into())),
            _ => Ok(Upper::Infinite),
        }
    }

    fn min(self, other: Upper) -> Upper {
        match (self, other) {
            (Upper::Finite(a), Upper::Finite(b)) => Upper::Finite(a.min(b)),
            (Upper::Finite(a), Upper::Infinite) | (Upper::Infinite, Upper::Finite(a)) => {
                Upper::Finite(a)
            }
            (Upper::Infinite, Upper::Infinite) => Upper::Infinite,
        }
    }

    pub fn is_at_least(self, lower: u64) -> bool {
        self.finite().is_none_or(|u| lower <= u)
    }
}

impl fmt::Display for Upper {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Upper::Finite(n) => write!(f, "{n}"),
            Upper::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Upper {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(Upper::Infinite),
            t => t
                .parse()
                .map(Upper::Finite)
                .map_err(|_| Error::Parse(format!("bad upper bound {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TensorRule {
    /// Product of actions of two groups: uppers add.
    Sum,
    /// Diagonal tensor product of two actions of one group.
    Min,
    /// Product with a Rokhlin factor: the other factor's upper survives.
    Absorb,
}

impl fmt::Display for TensorRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TensorRule::Sum => "sum",
            TensorRule::Min => "min",
            TensorRule::Absorb => "absorb",
        })
    }
}

impl FromStr for TensorRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "sum" => Ok(TensorRule::Sum),
            "min" => Ok(TensorRule::Min),
            "absorb" => Ok(TensorRule::Absorb),
            _ => Err(Error::Parse(format!("unknown rule {s:?}; expected sum, min or absorb"))),
        }
    }
}

/// Which ideal an annihilator witness raises to its power.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealKind {
    /// Augmentation ideal of the model's ring.
    Augmentation,
    /// `I(R) ⊗ S` for a Künneth model over `R ⊗ S`.
    LeftFactor,
}

/// `I·(Nʲ·x) ≠ 0` for all `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stability {
    #[serde(with = "crate::serde_dec")]
    pub multiplier: BigInt,
    #[serde(with = "crate::serde_dec::vec")]
    pub element: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnihilatorWitness {
    pub ring: String,
    pub model: KModelDescriptor,
    #[serde(with = "crate::serde_dec")]
    pub power: usize,
    pub ideal: IdealKind,
    pub nonzero_group: FgAbelianGroup,
    pub stability: Option<Stability>,
}

/// Groups with a built-in index computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CommutativeGroup {
    Circle,
    Cyclic(usize),
}

impl fmt::Display for CommutativeGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CommutativeGroup::Circle => f.write_str("s1"),
            CommutativeGroup::Cyclic(n) => write!(f, "z{n}"),
        }
    }
}

impl FromStr for CommutativeGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        if t == "s1" || t == "circle" {
            return Ok(CommutativeGroup::Circle);
        }
        match t.strip_prefix('z').and_then(|n| n.parse::<usize>().ok()) {
            Some(n) if n >= 2 => Ok(CommutativeGroup::Cyclic(n)),
            Some(_) => Err(Error::InvalidInput(format!("group {s:?} is trivial"))),
            None => Err(Error::Unsupported(format!(
                "no index model for group {s:?}; supported: z<n> (n ≥ 2), s1"
            ))),
        }
    }
}

impl Serialize for CommutativeGroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CommutativeGroup {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    AnnihilatorWitness(AnnihilatorWitness),
    /// The action has the `G^{⋆k}`-Rokhlin property.
    JoinFactorWitness {
        #[serde(with = "crate::serde_dec")]
        copies: usize,
    },
    /// `Y = G^{⋆k}` with `ind_G(Y) = ind`.
    IndexWitness {
        group: CommutativeGroup,
        #[serde(with = "crate::serde_dec")]
        copies: usize,
        #[serde(with = "crate::serde_dec")]
        ind: usize,
    },
    RuleApplication {
        rule: TensorRule,
        inputs: Vec<DimBound>,
    },
    Vacuous,
}

/// An interval `lower ≤ dim ≤ upper` with a certificate for each end.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "BoundRepr", try_from = "BoundRepr")]
pub struct DimBound {
    pub lower: u64,
    pub upper: Upper,
    pub lower_certificate: Certificate,
    pub upper_certificate: Certificate,
}

/// File form: certificates are listed lower first.
#[derive(Serialize, Deserialize)]
struct BoundRepr {
    #[serde(with = "crate::serde_dec")]
    lower: u64,
    #[serde(with = "crate::serde_dec")]
    upper: Upper,
    certificates: Vec<Certificate>,
}

impl From<DimBound> for BoundRepr {
    fn from(b: DimBound) -> Self {
        BoundRepr {
            lower: b.lower,
            upper: b.upper,
            certificates: vec![b.lower_certificate, b.upper_certificate],
        }
    }
}

impl TryFrom<BoundRepr> for DimBound {
    type Error = String;

    fn try_from(r: BoundRepr) -> std::result::Result<Self, String> {
        let [lower_certificate, upper_certificate]: [Certificate; 2] = r
            .certificates
            .try_into()
            .map_err(|v: Vec<_>| format!("expected 2 certificates, found {}", v.len()))?;
        Ok(DimBound {
            lower: r.lower,
            upper: r.upper,
            lower_certificate,
            upper_certificate,
        })
    }
}

impl DimBound {
    /// `{0, ∞}`: nothing known.
    pub fn unknown() -> Self {
        DimBound {
            lower: 0,
            upper: Upper::Infinite,
            lower_certificate: Certificate::Vacuous,
            upper_certificate: Certificate::Vacuous,
        }
    }

    /// `{0, 0}` from the Rokhlin property (`k = 1`).
    pub fn rokhlin() -> Self {
        DimBound {
            lower: 0,
            upper: Upper::Finite(0),
            lower_certificate: Certificate::Vacuous,
            upper_certificate: Certificate::JoinFactorWitness { copies: 1 },
        }
    }

    /// One-line rendering, e.g. `lower 2 (witness Z_2), upper 6 (join k=7)`.
    pub fn summary(&self) -> String {
        let lower = match &self.lower_certificate {
            Certificate::AnnihilatorWitness(w) => format!("witness {}", w.nonzero_group),
            Certificate::IndexWitness { ind, .. } => format!("index {ind}"),
            Certificate::Vacuous => "vacuous".into(),
            other => kind_name(other).into(),
        };
        let upper = match &self.upper_certificate {
            Certificate::JoinFactorWitness { copies } => format!("join k={copies}"),
            Certificate::IndexWitness { ind, .. } => format!("index {ind}"),
            Certificate::RuleApplication { rule, .. } => format!("rule {rule}"),
            Certificate::Vacuous => "no bound".into(),
            other => kind_name(other).into(),
        };
        format!("lower {} ({lower}), upper {} ({upper})", self.lower, self.upper)
    }
}

pub(crate) fn kind_name(c: &Certificate) -> &'static str {
    match c {
        Certificate::AnnihilatorWitness(_) => "annihilator witness",
        Certificate::JoinFactorWitness { .. } => "join factor witness",
        Certificate::IndexWitness { .. } => "index witness",
        Certificate::RuleApplication { .. } => "rule application",
        Certificate::Vacuous => "vacuous",
    }
}

pub(crate) fn combine(rule: TensorRule, a: Upper, b: Upper) -> Result<Upper> {
    match rule {
        TensorRule::Sum => a.add(b),
        TensorRule::Min => Ok(a.min(b)),
        TensorRule::Absorb => {
            if b != Upper::Finite(0) {
                return Err(Error::InvalidInput(format!(
                    "absorb needs a Rokhlin second factor (upper 0), found upper {b}"
                )));
            }
            Ok(a)
        }
    }
}

/// Upper bound for a tensor product. The lower end is always `0`: factor
/// lower bounds do not pass to products.
pub fn tensor_rule(rule: TensorRule, b1: &DimBound, b2: &DimBound) -> Result<DimBound> {
    let upper = combine(rule, b1.upper, b2.upper)?;
    Ok(DimBound {
        lower: 0,
        upper,
        lower_certificate: Certificate::Vacuous,
        upper_certificate: Certificate::RuleApplication {
            rule,
            inputs: vec![b1.clone(), b2.clone()],
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(lower: u64, upper: Upper) -> DimBound {
        DimBound {
            lower,
            upper,
            ..DimBound::unknown()
        }
    }

    #[test]
    fn rule_examples() {
        let f = Upper::Finite;
        assert_eq!(tensor_rule(TensorRule::Sum, &b(1, f(4)), &b(2, f(6))).unwrap().upper, f(10));
        assert_eq!(tensor_rule(TensorRule::Min, &b(3, f(5)), &b(0, f(0))).unwrap().upper, f(0));
        assert_eq!(
            tensor_rule(TensorRule::Sum, &b(0, Upper::Infinite), &b(0, f(3))).unwrap().upper,
            Upper::Infinite
        );
        assert_eq!(tensor_rule(TensorRule::Absorb, &b(2, f(7)), &DimBound::rokhlin()).unwrap().upper, f(7));
        assert!(tensor_rule(TensorRule::Absorb, &b(2, f(7)), &b(0, f(1))).is_err());
        assert_eq!(tensor_rule(TensorRule::Min, &b(1, f(4)), &b(2, f(6))).unwrap().lower, 0);
    }

    #[test]
    fn upper_text() {
        assert_eq!("inf".parse::<Upper>().unwrap(), Upper::Infinite);
        assert_eq!("12".parse::<Upper>().unwrap(), Upper::Finite(12));
        assert!("-1".parse::<Upper>().is_err());
        assert_eq!(Upper::Infinite.to_string(), "inf");
    }

    #[test]
    fn bound_json_shape() {
        let json = serde_json::to_value(DimBound::rokhlin()).unwrap();
        assert_eq!(json["lower"], "0");
        assert_eq!(json["upper"], "0");
        assert_eq!(json["certificates"][1]["kind"], "join_factor_witness");
        assert_eq!(json["certificates"][1]["copies"], "1");
        let back: DimBound = serde_json::from_value(json).unwrap();
        assert_eq!(back, DimBound::rokhlin());
        let unknown = serde_json::to_string(&DimBound::unknown()).unwrap();
        assert!(unknown.contains(r#""upper":"inf""#));
    }

    #[test]
    fn group_tags() {
        assert_eq!("Z2".parse::<CommutativeGroup>().unwrap(), CommutativeGroup::Cyclic(2));
        assert_eq!("s1".parse::<CommutativeGroup>().unwrap(), CommutativeGroup::Circle);
        assert!(matches!("s3".parse::<CommutativeGroup>(), Err(Error::Unsupported(_))));
        assert!(matches!("z1".parse::<CommutativeGroup>(), Err(Error::InvalidInput(_))));
    }
}
