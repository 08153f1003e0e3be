//! Natural numbers extended by a single point at infinity.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A natural number or `∞`. `Fin(_) < Inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtNat {
    Fin(u64),
    Inf,
}

pub use ExtNat::{Fin, Inf};

impl ExtNat {
    pub fn is_inf(self) -> bool {
        matches!(self, Inf)
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Fin(n) => Some(n),
            Inf => None,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Fin(0)
    }

    /// Multiplication with `a * ∞ = ∞` for `a >= 1`; `0 * ∞` is `None`.
    pub fn checked_mul(self, other: ExtNat) -> Option<ExtNat> {
        match (self, other) {
            (Fin(a), Fin(b)) => Some(Fin(a.checked_mul(b).expect("ExtNat overflow"))),
            (Fin(0), Inf) | (Inf, Fin(0)) => None,
            _ => Some(Inf),
        }
    }
}

impl Add for ExtNat {
    type Output = ExtNat;

    fn add(self, rhs: ExtNat) -> ExtNat {
        match (self, rhs) {
            (Fin(a), Fin(b)) => Fin(a.checked_add(b).expect("ExtNat overflow")),
            _ => Inf,
        }
    }
}

impl From<u64> for ExtNat {
    fn from(n: u64) -> Self {
        Fin(n)
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fin(n) => write!(f, "{n}"),
            Inf => write!(f, "inf"),
        }
    }
}

/// Compare `a1/b1` with `a2/b2` for finite-or-infinite numerators and
/// denominators, none of the fractions being `0/0` or `∞/∞`.
pub(crate) fn cmp_ratio(a1: ExtNat, b1: ExtNat, a2: ExtNat, b2: ExtNat) -> Ordering {
    fn class(a: ExtNat, b: ExtNat) -> u8 {
        match (a, b) {
            (Inf, _) => 2,
            (_, Inf) => 0,
            (Fin(_), Fin(0)) => 2,
            _ => 1,
        }
    }
    let (c1, c2) = (class(a1, b1), class(a2, b2));
    if c1 != 1 || c2 != 1 {
        return c1.cmp(&c2);
    }
    let (a1, b1, a2, b2) = (
        a1.finite().unwrap() as u128,
        b1.finite().unwrap() as u128,
        a2.finite().unwrap() as u128,
        b2.finite().unwrap() as u128,
    );
    (a1 * b2).cmp(&(a2 * b1))
}

impl Serialize for ExtNat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Fin(n) => s.serialize_u64(*n),
            Inf => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtNat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = ExtNat;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a natural number or \"inf\"")
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<ExtNat, E> {
                Ok(Fin(v))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<ExtNat, E> {
                u64::try_from(v)
                    .map(Fin)
                    .map_err(|_| E::custom("negative value"))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<ExtNat, E> {
                match v {
                    "inf" | "∞" => Ok(Inf),
                    _ => v.parse().map(Fin).map_err(E::custom),
                }
            }
        }
        d.deserialize_any(V)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_and_arithmetic() {
        assert!(Fin(10) < Inf);
        assert_eq!(Fin(2) + Fin(3), Fin(5));
        assert_eq!(Fin(2) + Inf, Inf);
        assert_eq!(Fin(3).checked_mul(Inf), Some(Inf));
        assert_eq!(Fin(0).checked_mul(Inf), None);
    }

    #[test]
    fn ratio_comparison() {
        assert_eq!(cmp_ratio(Fin(1), Fin(2), Fin(2), Fin(4)), Ordering::Equal);
        assert_eq!(cmp_ratio(Inf, Fin(1), Fin(100), Fin(1)), Ordering::Greater);
        assert_eq!(cmp_ratio(Fin(1), Inf, Fin(1), Fin(100)), Ordering::Less);
    }

    #[test]
    fn json_forms() {
        let v: Vec<ExtNat> = serde_json::from_str(r#"[3, "inf"]"#).unwrap();
        assert_eq!(v, vec![Fin(3), Inf]);
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"[3,"inf"]"#);
    }
}
