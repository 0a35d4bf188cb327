//! Value groups: the ordered divisible groups that carry magnitudes.
//!
//! Two instantiations are provided. [`Rational`] is exact and is what every
//! algebraic routine is tested against. `f64` is used by the valuation lab,
//! where measured log-ratios never land exactly on ties; it compares with an
//! absolute tolerance (see [`set_float_tolerance`]).

use std::cmp::Ordering;
use std::fmt::{Debug, Display};
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational magnitudes.
pub type Rational = Ratio<i64>;

/// Default absolute tolerance for comparing `f64` magnitudes.
pub const DEFAULT_FLOAT_TOLERANCE: f64 = 1e-9;

static FLOAT_TOLERANCE_BITS: AtomicU64 = AtomicU64::new(0x3E11_2E0B_E826_D695); // 1e-9

/// Sets the tolerance used when two `f64` magnitudes are compared.
pub fn set_float_tolerance(eps: f64) {
    assert!(eps >= 0.0 && eps.is_finite(), "tolerance must be finite and non-negative");
    FLOAT_TOLERANCE_BITS.store(eps.to_bits(), AtomicOrdering::Relaxed);
}

pub fn float_tolerance() -> f64 {
    f64::from_bits(FLOAT_TOLERANCE_BITS.load(AtomicOrdering::Relaxed))
}

/// A totally ordered, divisible abelian group written additively.
pub trait ValueGroup:
    Copy
    + Debug
    + Display
    + PartialOrd
    + Num
    + Signed
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    /// Differences up to this size count as equal.
    fn tolerance() -> Self;

    /// Parses a magnitude (`3`, `-1`, `3/2`, `2.5`).
    fn parse_value(s: &str) -> Result<Self>;

    fn compare(&self, other: &Self) -> Ordering {
        let d = *self - *other;
        if d.abs() <= Self::tolerance() {
            Ordering::Equal
        } else if d > Self::zero() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    fn approx_eq(&self, other: &Self) -> bool {
        self.compare(other) == Ordering::Equal
    }

    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer fits the value group")
    }

    /// Multiplies by a rational `k`; divisibility makes this total.
    fn scale(self, k: Rational) -> Self {
        self * Self::from_int(*k.numer()) / Self::from_int(*k.denom())
    }

    fn to_float(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl ValueGroup for Rational {
    fn tolerance() -> Self {
        Rational::zero()
    }

    fn parse_value(s: &str) -> Result<Self> {
        parse_rational(s)
    }

    fn compare(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }
}

impl ValueGroup for f64 {
    fn tolerance() -> Self {
        float_tolerance()
    }

    fn parse_value(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let n: f64 = n.trim().parse().map_err(|_| Error::parse(format!("bad number `{s}`")))?;
            let d: f64 = d.trim().parse().map_err(|_| Error::parse(format!("bad number `{s}`")))?;
            if d == 0.0 {
                return Err(Error::parse(format!("zero denominator in `{s}`")));
            }
            return Ok(n / d);
        }
        s.parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .ok_or_else(|| Error::parse(format!("bad number `{s}`")))
    }
}

/// Parses `a`, `a/b`, or a finite decimal `a.bcd` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::parse(format!("bad rational `{s}`"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: i64 = n.trim().parse().map_err(|_| bad())?;
        let d: i64 = d.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) || frac.len() > 15 {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let int_part: i64 = match int {
            "" | "-" | "+" => 0,
            _ => int.parse().map_err(|_| bad())?,
        };
        let den = 10i64.pow(frac.len() as u32);
        let frac_part: i64 = frac.parse().map_err(|_| bad())?;
        let num = int_part
            .abs()
            .checked_mul(den)
            .and_then(|x| x.checked_add(frac_part))
            .ok_or_else(bad)?;
        return Ok(Rational::new(if negative { -num } else { num }, den));
    }
    s.parse::<i64>().map(Rational::from_integer).map_err(|_| bad())
}
