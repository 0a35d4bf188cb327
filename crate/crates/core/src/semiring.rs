//! Scalars of the max-plus semiring T_max and its symmetrization S_max.
//!
//! Both are written multiplicatively in the tropical sense: `add` is max,
//! `mul` adds magnitudes. S_max elements are either `Zero` or a sign
//! (positive, negative, balanced) attached to a magnitude.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero as _;
use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::value::{Rational, ValueGroup};

/// Common interface of T_max and S_max used by generic matrix code.
pub trait Semiring: Copy + fmt::Debug + PartialEq + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(self, other: Self) -> Self;
    fn mul(self, other: Self) -> Self;
    fn is_zero(&self) -> bool;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Pos,
    Neg,
    Bal,
}

impl Sign {
    pub(crate) fn times(self, other: Sign) -> Sign {
        match (self, other) {
            (Sign::Bal, _) | (_, Sign::Bal) => Sign::Bal,
            (a, b) if a == b => Sign::Pos,
            _ => Sign::Neg,
        }
    }

    pub(crate) fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
            Sign::Bal => Sign::Bal,
        }
    }
}

// ---------------------------------------------------------------------------
// T_max

#[derive(Debug, Clone, Copy)]
pub enum TScalar<G> {
    Bottom,
    Val(G),
}

impl<G: ValueGroup> TScalar<G> {
    pub fn from_int(m: i64) -> Self {
        TScalar::Val(G::from_int(m))
    }

    pub fn value(&self) -> Option<G> {
        match *self {
            TScalar::Bottom => None,
            TScalar::Val(g) => Some(g),
        }
    }

    /// Total order with `Bottom` below everything.
    pub fn compare(&self, other: &Self) -> Ordering {
        match (self, other) {
            (TScalar::Bottom, TScalar::Bottom) => Ordering::Equal,
            (TScalar::Bottom, _) => Ordering::Less,
            (_, TScalar::Bottom) => Ordering::Greater,
            (TScalar::Val(a), TScalar::Val(b)) => a.compare(b),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        match *self {
            TScalar::Bottom => Err(Error::NotInvertible),
            TScalar::Val(g) => Ok(TScalar::Val(-g)),
        }
    }

    pub fn pow(&self, k: Rational) -> Result<Self> {
        match *self {
            TScalar::Val(g) => Ok(TScalar::Val(g.scale(k))),
            TScalar::Bottom if k.is_zero() => Ok(TScalar::one()),
            TScalar::Bottom if k > Rational::zero() => Ok(TScalar::Bottom),
            TScalar::Bottom => Err(Error::NotInvertible),
        }
    }

    pub fn to_s(&self) -> SScalar<G> {
        match *self {
            TScalar::Bottom => SScalar::Zero,
            TScalar::Val(g) => SScalar::Val(Sign::Pos, g),
        }
    }
}

impl<G: ValueGroup> PartialEq for TScalar<G> {
    fn eq(&self, other: &Self) -> bool {
        self.compare(other) == Ordering::Equal
    }
}

impl<G: ValueGroup> PartialOrd for TScalar<G> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.compare(other))
    }
}

impl<G: ValueGroup> Semiring for TScalar<G> {
    fn zero() -> Self {
        TScalar::Bottom
    }

    fn one() -> Self {
        TScalar::Val(G::zero())
    }

    fn add(self, other: Self) -> Self {
        if self.compare(&other) == Ordering::Less {
            other
        } else {
            self
        }
    }

    fn mul(self, other: Self) -> Self {
        match (self, other) {
            (TScalar::Val(a), TScalar::Val(b)) => TScalar::Val(a + b),
            _ => TScalar::Bottom,
        }
    }

    fn is_zero(&self) -> bool {
        matches!(self, TScalar::Bottom)
    }
}

impl<G: ValueGroup> fmt::Display for TScalar<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TScalar::Bottom => f.write_str("z"),
            TScalar::Val(g) => write!(f, "{g}"),
        }
    }
}

impl<G: ValueGroup> TScalar<G> {
    /// Accepts `z`/`𝟘` for bottom or a bare magnitude.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "z" || s == "𝟘" {
            Ok(TScalar::Bottom)
        } else {
            G::parse_value(s).map(TScalar::Val)
        }
    }
}

// ---------------------------------------------------------------------------
// S_max

#[derive(Debug, Clone, Copy)]
pub enum SScalar<G> {
    Zero,
    Val(Sign, G),
}

impl<G: ValueGroup> SScalar<G> {
    pub fn pos(m: G) -> Self {
        SScalar::Val(Sign::Pos, m)
    }

    pub fn neg(m: G) -> Self {
        SScalar::Val(Sign::Neg, m)
    }

    pub fn bal(m: G) -> Self {
        SScalar::Val(Sign::Bal, m)
    }

    /// Integer-magnitude shorthands, handy for literals.
    pub fn p(m: i64) -> Self {
        Self::pos(G::from_int(m))
    }

    pub fn n(m: i64) -> Self {
        Self::neg(G::from_int(m))
    }

    pub fn b(m: i64) -> Self {
        Self::bal(G::from_int(m))
    }

    pub fn sign(&self) -> Option<Sign> {
        match *self {
            SScalar::Zero => None,
            SScalar::Val(s, _) => Some(s),
        }
    }

    pub fn magnitude(&self) -> Option<G> {
        match *self {
            SScalar::Zero => None,
            SScalar::Val(_, m) => Some(m),
        }
    }

    pub fn modulus(&self) -> TScalar<G> {
        match *self {
            SScalar::Zero => TScalar::Bottom,
            SScalar::Val(_, m) => TScalar::Val(m),
        }
    }

    /// `⊖a`.
    pub fn negate(&self) -> Self {
        match *self {
            SScalar::Zero => SScalar::Zero,
            SScalar::Val(s, m) => SScalar::Val(s.flip(), m),
        }
    }

    /// `a°`, that is `a ⊖ a`.
    pub fn balance(&self) -> Self {
        match *self {
            SScalar::Zero => SScalar::Zero,
            SScalar::Val(_, m) => SScalar::Val(Sign::Bal, m),
        }
    }

    pub fn sub(self, other: Self) -> Self {
        self.add(other.negate())
    }

    pub fn is_pos(&self) -> bool {
        matches!(self, SScalar::Val(Sign::Pos, _))
    }

    pub fn is_neg(&self) -> bool {
        matches!(self, SScalar::Val(Sign::Neg, _))
    }

    pub fn is_balanced(&self) -> bool {
        matches!(self, SScalar::Val(Sign::Bal, _))
    }

    /// Member of S^∨: zero, positive, or negative.
    pub fn is_signed(&self) -> bool {
        !self.is_balanced()
    }

    /// Zero or balanced: the elements that balance `𝟘`.
    pub fn is_null(&self) -> bool {
        matches!(self, SScalar::Zero | SScalar::Val(Sign::Bal, _))
    }

    pub fn inverse(&self) -> Result<Self> {
        match *self {
            SScalar::Val(s @ (Sign::Pos | Sign::Neg), m) => Ok(SScalar::Val(s, -m)),
            _ => Err(Error::NotInvertible),
        }
    }

    /// Rational power. Integer exponents work for every sign (negative ones
    /// need an invertible base); fractional exponents only for `S^⊕`.
    pub fn pow(&self, k: Rational) -> Result<Self> {
        if k.is_zero() {
            return Ok(SScalar::one());
        }
        let negative = k < Rational::zero();
        if !k.is_integer() {
            return match *self {
                SScalar::Zero if !negative => Ok(SScalar::Zero),
                SScalar::Zero => Err(Error::NotInvertible),
                SScalar::Val(Sign::Pos, m) => Ok(SScalar::pos(m.scale(k))),
                _ => Err(Error::FractionalPowerOfSigned),
            };
        }
        match *self {
            SScalar::Zero if negative => Err(Error::NotInvertible),
            SScalar::Zero => Ok(SScalar::Zero),
            SScalar::Val(Sign::Bal, _) if negative => Err(Error::NotInvertible),
            SScalar::Val(Sign::Bal, m) => Ok(SScalar::bal(m.scale(k))),
            SScalar::Val(Sign::Pos, m) => Ok(SScalar::pos(m.scale(k))),
            SScalar::Val(Sign::Neg, m) => {
                let odd = (k.to_integer() % 2) != 0;
                let s = if odd { Sign::Neg } else { Sign::Pos };
                Ok(SScalar::Val(s, m.scale(k)))
            }
        }
    }

    pub fn pow_int(&self, k: i64) -> Result<Self> {
        self.pow(Rational::from_integer(k))
    }

    /// `(⊖𝟙)^k`.
    pub fn minus_one_pow(k: usize) -> Self {
        if k % 2 == 0 {
            SScalar::one()
        } else {
            SScalar::one().negate()
        }
    }
}

impl<G: ValueGroup> PartialEq for SScalar<G> {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (SScalar::Zero, SScalar::Zero) => true,
            (SScalar::Val(s, a), SScalar::Val(t, b)) => s == t && a.approx_eq(b),
            _ => false,
        }
    }
}

impl<G: ValueGroup> Semiring for SScalar<G> {
    fn zero() -> Self {
        SScalar::Zero
    }

    fn one() -> Self {
        SScalar::Val(Sign::Pos, G::zero())
    }

    fn add(self, other: Self) -> Self {
        match (self, other) {
            (SScalar::Zero, x) | (x, SScalar::Zero) => x,
            (SScalar::Val(s, a), SScalar::Val(t, b)) => match a.compare(&b) {
                Ordering::Greater => self,
                Ordering::Less => other,
                Ordering::Equal => {
                    let m = if a < b { b } else { a };
                    SScalar::Val(if s == t { s } else { Sign::Bal }, m)
                }
            },
        }
    }

    fn mul(self, other: Self) -> Self {
        match (self, other) {
            (SScalar::Val(s, a), SScalar::Val(t, b)) => SScalar::Val(s.times(t), a + b),
            _ => SScalar::Zero,
        }
    }

    fn is_zero(&self) -> bool {
        matches!(self, SScalar::Zero)
    }
}

/// `a ∇ b`: the difference is zero or balanced.
pub fn balances<G: ValueGroup>(a: SScalar<G>, b: SScalar<G>) -> bool {
    a.sub(b).is_null()
}

/// `a ⪯ b` iff `a ⊕ b = b`.
pub fn preceq<G: ValueGroup>(a: SScalar<G>, b: SScalar<G>) -> bool {
    a.add(b) == b
}

/// `a ⪯° b`: `b = a ⊕ c` for some zero-or-balanced `c`.
pub fn preceq_circ<G: ValueGroup>(a: SScalar<G>, b: SScalar<G>) -> bool {
    a == b || (b.is_balanced() && a.modulus().compare(&b.modulus()) != Ordering::Greater)
}

/// `a ≤ b`: `b ⊖ a` is zero, positive, or balanced.
pub fn leq_signed<G: ValueGroup>(a: SScalar<G>, b: SScalar<G>) -> bool {
    !b.sub(a).is_neg()
}

/// `a < b`: `b ⊖ a` is positive.
pub fn lt_signed<G: ValueGroup>(a: SScalar<G>, b: SScalar<G>) -> bool {
    b.sub(a).is_pos()
}

// ---------------------------------------------------------------------------
// text forms

impl<G: ValueGroup> fmt::Display for SScalar<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SScalar::Zero => f.write_str("z"),
            SScalar::Val(Sign::Pos, m) => write!(f, "p{m}"),
            SScalar::Val(Sign::Neg, m) => write!(f, "n{m}"),
            SScalar::Val(Sign::Bal, m) => write!(f, "b{m}"),
        }
    }
}

impl<G: ValueGroup> SScalar<G> {
    /// Parses a token. Canonical forms are `z`, `p3`, `n-1`, `b3/2`; the
    /// pretty forms `3`, `(-)3`, `3*`, `(-)(-1)` and their unicode
    /// counterparts (`⊖3`, `3°`, `𝟘`) are accepted as well.
    pub fn parse(token: &str) -> Result<Self> {
        let t = token.trim();
        if t.is_empty() {
            return Err(Error::parse("empty scalar token"));
        }
        if t == "z" || t == "𝟘" {
            return Ok(SScalar::Zero);
        }
        if t == "𝟙" {
            return Ok(SScalar::one());
        }
        let mag = |s: &str| -> Result<G> {
            let s = s.trim();
            let s = s
                .strip_prefix('(')
                .and_then(|x| x.strip_suffix(')'))
                .unwrap_or(s);
            let s = if s == "𝟙" { "0" } else { s };
            G::parse_value(s).map_err(|_| Error::parse(format!("bad scalar token `{t}`")))
        };
        if let Some(rest) = t.strip_prefix('p') {
            return mag(rest).map(SScalar::pos);
        }
        if let Some(rest) = t.strip_prefix('n') {
            return mag(rest).map(SScalar::neg);
        }
        if let Some(rest) = t.strip_prefix('b') {
            return mag(rest).map(SScalar::bal);
        }
        let (negated, rest) = if let Some(r) = t.strip_prefix("(-)") {
            (true, r)
        } else if let Some(r) = t.strip_prefix('⊖') {
            (true, r)
        } else {
            (false, t)
        };
        let (balanced, rest) = if let Some(r) = rest.strip_suffix('*') {
            (true, r)
        } else if let Some(r) = rest.strip_suffix('°') {
            (true, r)
        } else {
            (false, rest)
        };
        if negated && balanced {
            return Err(Error::parse(format!("bad scalar token `{t}`")));
        }
        let m = mag(rest)?;
        Ok(if balanced {
            SScalar::bal(m)
        } else if negated {
            SScalar::neg(m)
        } else {
            SScalar::pos(m)
        })
    }

    /// Human-readable form: `3`, `(-)3`, `3*`, `z` (or `⊖3`, `3°`, `𝟘`).
    pub fn pretty(&self, unicode: bool) -> String {
        let wrap = |m: &G| {
            let s = m.to_string();
            if s.starts_with('-') {
                format!("({s})")
            } else {
                s
            }
        };
        match self {
            SScalar::Zero => if unicode { "𝟘" } else { "z" }.to_string(),
            SScalar::Val(Sign::Pos, m) => m.to_string(),
            SScalar::Val(Sign::Neg, m) => {
                format!("{}{}", if unicode { "⊖" } else { "(-)" }, wrap(m))
            }
            SScalar::Val(Sign::Bal, m) => {
                format!("{}{}", wrap(m), if unicode { "°" } else { "*" })
            }
        }
    }
}

impl<G: ValueGroup> Serialize for SScalar<G> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            SScalar::Zero => {
                let mut map = serializer.serialize_map(Some(1))?;
                map.serialize_entry("s", "z")?;
                map.end()
            }
            SScalar::Val(s, m) => {
                let mut map = serializer.serialize_map(Some(2))?;
                let tag = match s {
                    Sign::Pos => "p",
                    Sign::Neg => "n",
                    Sign::Bal => "b",
                };
                map.serialize_entry("s", tag)?;
                map.serialize_entry("m", &m.to_string())?;
                map.end()
            }
        }
    }
}

#[derive(Deserialize)]
struct RawScalar {
    s: String,
    m: Option<String>,
}

impl<'de, G: ValueGroup> Deserialize<'de> for SScalar<G> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawScalar::deserialize(deserializer)?;
        if raw.s == "z" {
            return Ok(SScalar::Zero);
        }
        let m = raw.m.ok_or_else(|| de::Error::missing_field("m"))?;
        let m = G::parse_value(&m).map_err(de::Error::custom)?;
        match raw.s.as_str() {
            "p" => Ok(SScalar::pos(m)),
            "n" => Ok(SScalar::neg(m)),
            "b" => Ok(SScalar::bal(m)),
            other => Err(de::Error::custom(format!("unknown sign tag `{other}`"))),
        }
    }
}

impl<G: ValueGroup> std::ops::Mul for SScalar<G> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Semiring::mul(self, rhs)
    }
}

impl<G: ValueGroup> std::ops::Add for SScalar<G> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Semiring::add(self, rhs)
    }
}

impl<G: ValueGroup> std::ops::Neg for SScalar<G> {
    type Output = Self;
    fn neg(self) -> Self {
        self.negate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type S = SScalar<Rational>;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn addition_and_multiplication() {
        assert_eq!(S::p(1) + S::n(-2), S::p(1));
        assert_eq!(S::p(2) + S::n(2), S::b(2));
        assert_eq!(S::Zero + S::n(5), S::n(5));
        assert_eq!(S::p(6) * S::p(2), S::p(8));
        assert_eq!(S::n(3) * S::n(4), S::p(7));
        assert_eq!(S::b(2) * S::Zero, S::Zero);
        assert_eq!(S::b(3) + S::p(3), S::b(3));
        assert_eq!(S::b(2) + S::p(3), S::p(3));
    }

    #[test]
    fn unary_operators() {
        assert_eq!(S::n(4).negate(), S::p(4));
        assert_eq!(S::b(3).modulus(), TScalar::from_int(3));
        assert_eq!(S::p(5).balance(), S::b(5));
        assert_eq!(S::Zero.modulus(), TScalar::Bottom);
    }

    #[test]
    fn balance_relation() {
        assert!(balances(S::n(4), S::b(4)));
        assert!(!balances(S::n(4), S::p(4)));
        assert!(balances(S::b(4), S::b(3)));
    }

    #[test]
    fn partial_orders() {
        assert!(preceq(S::p(2), S::n(3)));
        assert!(!preceq(S::p(3), S::n(3)));
        assert!(!preceq(S::n(3), S::p(3)));
        assert!(preceq_circ(S::n(2), S::b(2)));
        assert!(!preceq_circ(S::n(3), S::b(2)));
        assert!(preceq_circ(S::Zero, S::b(1)));
    }

    #[test]
    fn signed_order_chain() {
        let chain = [S::n(3), S::n(2), S::Zero, S::p(2), S::p(3)];
        for w in chain.windows(2) {
            assert!(lt_signed(w[0], w[1]), "{} < {}", w[0], w[1]);
        }
        assert!(leq_signed(S::p(2), S::b(3)));
        assert!(leq_signed(S::b(3), S::p(2)));
        assert!(!lt_signed(S::p(2), S::p(2)));
    }

    #[test]
    fn powers() {
        assert_eq!(S::p(2).pow_int(3).unwrap(), S::p(6));
        assert_eq!(S::n(3).pow_int(2).unwrap(), S::p(6));
        assert_eq!(S::n(3).pow_int(3).unwrap(), S::n(9));
        assert_eq!(S::p(5).pow(q(1, 2)).unwrap(), S::pos(q(5, 2)));
        assert_eq!(S::n(5).pow(q(1, 2)), Err(Error::FractionalPowerOfSigned));
        assert_eq!(S::b(5).pow(q(1, 2)), Err(Error::FractionalPowerOfSigned));
        assert_eq!(S::b(5).pow_int(-1), Err(Error::NotInvertible));
        assert_eq!(S::n(2).pow_int(-1).unwrap(), S::n(-2));
        assert_eq!(S::b(2).pow_int(2).unwrap(), S::b(4));
        assert_eq!(S::Zero.pow_int(0).unwrap(), S::p(0));
    }

    #[test]
    fn tokens_round_trip() {
        for tok in ["z", "p3", "n-1", "b3/2", "p0"] {
            let s = S::parse(tok).unwrap();
            assert_eq!(s.to_string(), tok);
        }
        assert_eq!(S::parse("(-)(-1)").unwrap(), S::n(-1));
        assert_eq!(S::parse("⊖3").unwrap(), S::n(3));
        assert_eq!(S::parse("3*").unwrap(), S::b(3));
        assert_eq!(S::parse("(-3)°").unwrap(), S::b(-3));
        assert_eq!(S::parse("-2").unwrap(), S::p(-2));
        assert!(S::parse("(-)3*").is_err());
        assert!(S::parse("q3").is_err());
        for s in [S::Zero, S::n(-1), S::b(-3), S::pos(q(7, 2))] {
            assert_eq!(S::parse(&s.pretty(false)).unwrap(), s);
            assert_eq!(S::parse(&s.pretty(true)).unwrap(), s);
        }
    }

    #[test]
    fn json_form() {
        assert_eq!(serde_json::to_string(&S::Zero).unwrap(), r#"{"s":"z"}"#);
        assert_eq!(serde_json::to_string(&S::b(3)).unwrap(), r#"{"s":"b","m":"3"}"#);
        let back: S = serde_json::from_str(r#"{"s":"n","m":"-3/2"}"#).unwrap();
        assert_eq!(back, S::neg(q(-3, 2)));
    }
}
