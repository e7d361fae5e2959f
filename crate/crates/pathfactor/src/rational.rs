//! Exact rational values extended with positive infinity.
//!
//! Toughness-style parameters are minima of ratios |X|/count and equal +∞ on
//! complete graphs, so every comparison here must stay exact. The finite case
//! delegates to `num_rational::Ratio<i64>`; at desk scale (numerators and
//! denominators bounded by the graph order) this never overflows.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;
use serde::de::Error as _;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtRational {
    Finite(Ratio<i64>),
    Infinity,
}

impl ExtRational {
    /// Canonical finite value; panics on a zero denominator.
    pub fn new(numerator: i64, denominator: i64) -> ExtRational {
        ExtRational::Finite(Ratio::new(numerator, denominator))
    }

    pub fn from_ratio(numerator: usize, denominator: usize) -> ExtRational {
        ExtRational::new(numerator as i64, denominator as i64)
    }

    pub fn zero() -> ExtRational {
        ExtRational::Finite(Ratio::from_integer(0))
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtRational::Finite(_))
    }

    pub fn as_ratio(self) -> Option<Ratio<i64>> {
        match self {
            ExtRational::Finite(r) => Some(r),
            ExtRational::Infinity => None,
        }
    }
}

impl From<Ratio<i64>> for ExtRational {
    fn from(r: Ratio<i64>) -> Self {
        ExtRational::Finite(r)
    }
}

impl PartialOrd for ExtRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtRational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtRational::Infinity, ExtRational::Infinity) => Ordering::Equal,
            (ExtRational::Infinity, ExtRational::Finite(_)) => Ordering::Greater,
            (ExtRational::Finite(_), ExtRational::Infinity) => Ordering::Less,
            (ExtRational::Finite(a), ExtRational::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Debug for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::Finite(r) => {
                if r.denom() == &1 {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            ExtRational::Infinity => write!(f, "inf"),
        }
    }
}

/// Wire form: `{"num": n, "den": d}` for finite values, the string `"inf"`
/// otherwise. Rationals are never serialized as floats.
impl Serialize for ExtRational {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtRational::Finite(r) => {
                use serde::ser::SerializeStruct;
                let mut s = serializer.serialize_struct("ExtRational", 2)?;
                s.serialize_field("num", r.numer())?;
                s.serialize_field("den", r.denom())?;
                s.end()
            }
            ExtRational::Infinity => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtRational {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Wire {
            Finite { num: i64, den: i64 },
            Tag(String),
        }
        match Wire::deserialize(deserializer)? {
            Wire::Finite { num, den } => {
                if den <= 0 {
                    return Err(D::Error::custom("denominator must be positive"));
                }
                Ok(ExtRational::new(num, den))
            }
            Wire::Tag(s) if s == "inf" => Ok(ExtRational::Infinity),
            Wire::Tag(s) => Err(D::Error::custom(format!("unknown rational tag {s:?}"))),
        }
    }
}
