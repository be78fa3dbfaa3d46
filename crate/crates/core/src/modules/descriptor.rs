use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{cyclic_ring, RingSpec};

use super::kunneth::kunneth_pieces;
use super::module::{circle_module, truncated_ring_module, RingModule};

/// A built-in K-theory model, addressable by name:
/// `trunc-z2:l`, `circle:n`, `trunc:<ring>:n` and `kunneth(<a>,<b>)` for
/// the tensor piece of two models.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum KModelDescriptor {
    TruncatedZ2 {
        #[serde(with = "crate::serde_dec")]
        l: usize,
    },
    Circle {
        #[serde(with = "crate::serde_dec")]
        n: usize,
    },
    TruncatedRing {
        ring: RingSpec,
        #[serde(with = "crate::serde_dec")]
        n: usize,
    },
    Kunneth { left: Box<KModelDescriptor>, right: Box<KModelDescriptor> },
}

impl KModelDescriptor {
    pub fn kunneth(left: KModelDescriptor, right: KModelDescriptor) -> Self {
        KModelDescriptor::Kunneth {
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub fn instantiate(&self) -> Result<RingModule> {
        match self {
            KModelDescriptor::TruncatedZ2 { l } => {
                truncated_ring_module(&Arc::clone(cyclic_ring(2)?.based()), *l)
            }
            KModelDescriptor::Circle { n } => circle_module(*n),
            KModelDescriptor::TruncatedRing { ring, n } => {
                truncated_ring_module(ring.build()?.based(), *n)
            }
            KModelDescriptor::Kunneth { left, right } => {
                Ok(kunneth_pieces(&left.instantiate()?, &right.instantiate()?)?.tensor)
            }
        }
    }
}

impl fmt::Display for KModelDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KModelDescriptor::TruncatedZ2 { l } => write!(f, "trunc-z2:{l}"),
            KModelDescriptor::Circle { n } => write!(f, "circle:{n}"),
            KModelDescriptor::TruncatedRing { ring, n } => write!(f, "trunc:{ring}:{n}"),
            KModelDescriptor::Kunneth { left, right } => write!(f, "kunneth({left},{right})"),
        }
    }
}

fn parse_count(s: &str, what: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad {what} {s:?}")))
}

impl FromStr for KModelDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix("kunneth(").and_then(|r| r.strip_suffix(')')) {
            let mut depth = 0usize;
            for (i, c) in inner.char_indices() {
                match c {
                    '(' => depth += 1,
                    ')' => depth = depth.saturating_sub(1),
                    ',' if depth == 0 => {
                        return Ok(KModelDescriptor::kunneth(
                            inner[..i].parse()?,
                            inner[i + 1..].parse()?,
                        ))
                    }
                    _ => {}
                }
            }
            return Err(Error::Parse(format!("kunneth model needs two parts: {s:?}")));
        }
        if let Some(l) = s.strip_prefix("trunc-z2:") {
            return Ok(KModelDescriptor::TruncatedZ2 { l: parse_count(l, "power")? });
        }
        if let Some(n) = s.strip_prefix("circle:") {
            return Ok(KModelDescriptor::Circle { n: parse_count(n, "power")? });
        }
        if let Some(rest) = s.strip_prefix("trunc:") {
            if let Some((ring, n)) = rest.rsplit_once(':') {
                return Ok(KModelDescriptor::TruncatedRing {
                    ring: RingSpec::named(ring)?,
                    n: parse_count(n, "power")?,
                });
            }
        }
        Err(Error::Parse(format!("unknown model {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::FgAbelianGroup;

    #[test]
    fn names_round_trip() {
        for s in ["trunc-z2:3", "circle:4", "trunc:z2xz3:2", "kunneth(trunc-z2:2,trunc:z3:1)"] {
            let d: KModelDescriptor = s.parse().unwrap();
            assert_eq!(d.to_string(), s);
            let json = serde_json::to_string(&d).unwrap();
            assert_eq!(serde_json::from_str::<KModelDescriptor>(&json).unwrap(), d);
        }
        assert!("trunc:q7:1".parse::<KModelDescriptor>().is_err());
        assert!("circle:x".parse::<KModelDescriptor>().is_err());
    }

    #[test]
    fn instantiation() {
        let m = "trunc-z2:2".parse::<KModelDescriptor>().unwrap().instantiate().unwrap();
        assert_eq!(m.underlying_group(), "Z + Z_2".parse::<FgAbelianGroup>().unwrap());
        let m = "kunneth(trunc-z2:3,trunc:z3:1)"
            .parse::<KModelDescriptor>()
            .unwrap()
            .instantiate()
            .unwrap();
        assert_eq!(m.underlying_group(), "Z + Z_4".parse::<FgAbelianGroup>().unwrap());
        assert!("circle:0".parse::<KModelDescriptor>().unwrap().instantiate().is_err());
    }
}
