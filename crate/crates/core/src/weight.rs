//! Exact nonnegative distances.
//!
//! Every algorithm in this crate branches on equality of distances, so
//! weights are stored as reduced rationals and compared exactly.

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// An exact nonnegative rational distance.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Weight(Ratio<i128>);

impl Weight {
    pub const ZERO: Weight = Weight(Ratio::new_raw(0, 1));

    /// Builds `numer / denom`. Returns `None` for a zero denominator or a
    /// negative value.
    pub fn from_fraction(numer: i128, denom: i128) -> Option<Weight> {
        if denom == 0 {
            return None;
        }
        let r = Ratio::new(numer, denom);
        if r < Ratio::zero() {
            None
        } else {
            Some(Weight(r))
        }
    }

    pub fn from_integer(value: u64) -> Weight {
        Weight(Ratio::from_integer(value as i128))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn checked_add(&self, other: &Weight) -> Option<Weight> {
        self.0.checked_add(&other.0).map(Weight)
    }

    /// Sums the weights, returning `None` on `i128` overflow.
    pub fn checked_sum<'a>(weights: impl IntoIterator<Item = &'a Weight>) -> Option<Weight> {
        weights
            .into_iter()
            .try_fold(Weight::ZERO, |acc, w| acc.checked_add(w))
    }

    /// Approximate value for display and plotting only.
    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }
}

/// Panics on `i128` overflow; use [`Weight::checked_add`] for untrusted input.
impl Add for Weight {
    type Output = Weight;

    fn add(self, rhs: Weight) -> Weight {
        self.checked_add(&rhs).expect("weight sum overflows i128")
    }
}

impl From<u64> for Weight {
    fn from(value: u64) -> Weight {
        Weight::from_integer(value)
    }
}

/// Denominators of the form 2^a 5^b print as finite decimals, anything else
/// as `p/q`. The output always parses back to the same weight.
impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let numer = self.numer();
        let denom = self.denom();
        if denom == 1 {
            return write!(f, "{numer}");
        }
        let mut rest = denom;
        let mut twos = 0u32;
        let mut fives = 0u32;
        while rest % 2 == 0 {
            rest /= 2;
            twos += 1;
        }
        while rest % 5 == 0 {
            rest /= 5;
            fives += 1;
        }
        if rest != 1 {
            return write!(f, "{numer}/{denom}");
        }
        let digits = twos.max(fives);
        let scale = 10i128.checked_pow(digits);
        let scaled = scale.and_then(|s| numer.checked_mul(s / denom));
        match (scale, scaled) {
            (Some(scale), Some(scaled)) => {
                let (int, frac) = scaled.div_rem(&scale);
                let frac = format!("{:0width$}", frac, width = digits as usize);
                write!(f, "{int}.{}", frac.trim_end_matches('0'))
            }
            _ => write!(f, "{numer}/{denom}"),
        }
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight({self})")
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Accepts plain decimals (`3`, `0.25`, `.5`, `7.`) and fractions (`1/3`).
    fn from_str(s: &str) -> Result<Weight, Error> {
        let bad = || Error::InvalidWeight(s.to_string());
        let text = s.trim();
        if let Some((p, q)) = text.split_once('/') {
            let p = parse_digits(p).ok_or_else(bad)?;
            let q = parse_digits(q).ok_or_else(bad)?;
            return Weight::from_fraction(p, q).ok_or_else(bad);
        }
        let (int, frac) = text.split_once('.').unwrap_or((text, ""));
        if int.is_empty() && frac.is_empty() {
            return Err(bad());
        }
        let int_value = if int.is_empty() {
            0
        } else {
            parse_digits(int).ok_or_else(bad)?
        };
        if frac.is_empty() {
            if text.ends_with('.') && int.is_empty() {
                return Err(bad());
            }
            return Ok(Weight(Ratio::from_integer(int_value)));
        }
        let frac_value = parse_digits(frac).ok_or_else(bad)?;
        let scale = 10i128.checked_pow(frac.len() as u32).ok_or_else(bad)?;
        let numer = int_value
            .checked_mul(scale)
            .and_then(|v| v.checked_add(frac_value))
            .ok_or_else(bad)?;
        Ok(Weight(Ratio::new(numer, scale)))
    }
}

fn parse_digits(s: &str) -> Option<i128> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Weight, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
