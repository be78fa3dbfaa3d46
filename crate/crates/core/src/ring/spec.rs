use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{cyclic_ring, product_ring, FusionRing, FusionTable};

/// Names a representation ring so it can be rebuilt from a report.
///
/// Named rings are `z<n>` (cyclic), `s3`, and products joined by `x`, such
/// as `z2xz3`. Anything else travels as an explicit fusion table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RingSpec {
    Named(String),
    Table(FusionTable),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Factor {
    Cyclic(usize),
    S3,
}

fn parse_factors(name: &str) -> Result<Vec<Factor>> {
    let lower = name.trim().to_ascii_lowercase();
    lower
        .split('x')
        .map(|f| match f {
            "s3" => Ok(Factor::S3),
            _ => f
                .strip_prefix('z')
                .and_then(|n| n.parse::<usize>().ok())
                .filter(|&n| n >= 1)
                .map(Factor::Cyclic)
                .ok_or_else(|| Error::Parse(format!("unknown group {f:?} in {name:?}"))),
        })
        .collect()
}

impl RingSpec {
    pub fn named(name: &str) -> Result<Self> {
        parse_factors(name)?;
        Ok(RingSpec::Named(name.trim().to_ascii_lowercase()))
    }

    pub fn build(&self) -> Result<FusionRing> {
        match self {
            RingSpec::Named(name) => {
                let mut ring: Option<FusionRing> = None;
                for f in parse_factors(name)? {
                    let next = match f {
                        Factor::Cyclic(n) => cyclic_ring(n)?,
                        Factor::S3 => FusionRing::s3(),
                    };
                    ring = Some(match ring {
                        None => next,
                        Some(r) => product_ring(&r, &next),
                    });
                }
                ring.ok_or_else(|| Error::Parse("empty group name".into()))
            }
            RingSpec::Table(t) => FusionRing::from_table(t),
        }
    }

    /// Order of the cyclic group, for names of the form `z<n>`.
    pub fn cyclic_order(&self) -> Option<usize> {
        match self {
            RingSpec::Named(name) => match parse_factors(name).ok()?.as_slice() {
                [Factor::Cyclic(n)] => Some(*n),
                _ => None,
            },
            RingSpec::Table(_) => None,
        }
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RingSpec::named(s)
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Named(n) => f.write_str(n),
            RingSpec::Table(t) => f.write_str(t.name.as_deref().unwrap_or("table")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_build_rings() {
        assert_eq!(RingSpec::named("Z5").unwrap().build().unwrap().rank(), 5);
        assert_eq!(RingSpec::named("z2xz3").unwrap().build().unwrap().rank(), 6);
        assert_eq!(RingSpec::named("s3").unwrap().build().unwrap(), FusionRing::s3());
        assert!(RingSpec::named("q8").is_err());
        assert!(RingSpec::named("z0").is_err());
        assert_eq!(RingSpec::named("z7").unwrap().cyclic_order(), Some(7));
        assert_eq!(RingSpec::named("z2xz3").unwrap().cyclic_order(), None);
    }

    #[test]
    fn tables_travel_inline() {
        let spec = RingSpec::Table(FusionRing::s3().to_table());
        let json = serde_json::to_string(&spec).unwrap();
        let back: RingSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back.build().unwrap(), FusionRing::s3());
        let named: RingSpec = serde_json::from_str("\"z3\"").unwrap();
        assert_eq!(named, RingSpec::Named("z3".into()));
    }
}
