//! Symmetric families `A(t)` with entries `±t^e`, the signed valuation map,
//! and entrywise tropicalization of real matrices.

use std::fmt;

use crate::error::{Error, Result};
use crate::lab::jacobi::RealSymMatrix;
use crate::matrix::SMatrix;
use crate::semiring::{SScalar, Sign};
use crate::spectral::pd_class;
use crate::value::{parse_rational, Rational, ValueGroup};

/// `sgn(x) ⊙ log|x| / log t`, and `𝟘` for `x = 0`.
pub fn sv_t(x: f64, t: f64) -> Result<SScalar<f64>> {
    if !(t > 1.0) {
        return Err(Error::BadBase(t));
    }
    if x == 0.0 {
        return Ok(SScalar::Zero);
    }
    let m = x.abs().ln() / t.ln();
    Ok(if x > 0.0 { SScalar::pos(m) } else { SScalar::neg(m) })
}

/// One entry of a monomial family: `sign · t^exponent`, or zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monomial {
    Zero,
    Term { negative: bool, exponent: Rational },
}

impl Monomial {
    pub fn at(&self, t: f64) -> f64 {
        match *self {
            Monomial::Zero => 0.0,
            Monomial::Term { negative, exponent } => {
                let v = t.powf(exponent.to_float());
                if negative {
                    -v
                } else {
                    v
                }
            }
        }
    }

    /// Accepts `0`, `+5`, `-2`, `+3/2`, and the colon forms `+:5`, `-:-1`.
    pub fn parse(tok: &str) -> Result<Self> {
        let tok = tok.trim();
        if tok == "0" {
            return Ok(Monomial::Zero);
        }
        let bad = || Error::parse(format!("bad monomial token `{tok}`"));
        let (negative, rest) = match tok.chars().next() {
            Some('+') => (false, &tok[1..]),
            Some('-') => (true, &tok[1..]),
            _ => return Err(bad()),
        };
        let rest = rest.strip_prefix(':').unwrap_or(rest);
        let exponent = parse_rational(rest).map_err(|_| bad())?;
        Ok(Monomial::Term { negative, exponent })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Monomial::Zero => f.write_str("0"),
            Monomial::Term { negative, exponent } => {
                write!(f, "{}{exponent}", if *negative { '-' } else { '+' })
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MonomialMatrix {
    n: usize,
    entries: Vec<Monomial>,
}

impl MonomialMatrix {
    pub fn new(rows: Vec<Vec<Monomial>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch("monomial matrix must be square".into()));
        }
        let m = MonomialMatrix { n, entries: rows.into_iter().flatten().collect() };
        for i in 0..n {
            for j in 0..i {
                if m.get(i, j) != m.get(j, i) {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(m)
    }

    /// Text form: the size `n`, then `n` rows of monomial tokens.
    pub fn parse(text: &str) -> Result<Self> {
        let lines: Vec<&str> = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .collect();
        let Some((head, body)) = lines.split_first() else {
            return Err(Error::parse("empty monomial matrix"));
        };
        let n: usize = head
            .split_whitespace()
            .next()
            .and_then(|x| x.parse().ok())
            .ok_or_else(|| Error::parse(format!("bad size line `{head}`")))?;
        if body.len() != n {
            return Err(Error::parse(format!("expected {n} rows, found {}", body.len())));
        }
        let rows = body
            .iter()
            .map(|l| l.split_whitespace().map(Monomial::parse).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::parse("row length differs from the size"));
        }
        MonomialMatrix::new(rows).map_err(|e| Error::parse(e.to_string()))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Monomial {
        self.entries[i * self.n + j]
    }

    pub fn evaluate(&self, t: f64) -> Result<RealSymMatrix> {
        if !(t > 1.0) {
            return Err(Error::BadBase(t));
        }
        Ok(RealSymMatrix::from_upper(self.n, |i, j| self.get(i, j).at(t)))
    }

    /// The exact `(sign, exponent)` matrix.
    pub fn signed_valuation(&self) -> SMatrix<Rational> {
        let data = self
            .entries
            .iter()
            .map(|m| match *m {
                Monomial::Zero => SScalar::Zero,
                Monomial::Term { negative: false, exponent } => SScalar::pos(exponent),
                Monomial::Term { negative: true, exponent } => SScalar::neg(exponent),
            })
            .collect();
        SMatrix::new(self.n, self.n, data).expect("square by construction")
    }
}

impl fmt::Display for MonomialMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Entrywise `sv_t`.
pub fn tropicalize_real(b: &RealSymMatrix, t: f64) -> Result<SMatrix<f64>> {
    let n = b.n();
    let mut data = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            data.push(sv_t(b.get(i, j), t)?);
        }
    }
    SMatrix::new(n, n, data)
}

/// Copies signs and exponents of a TPD matrix into a monomial family.
pub fn lift_tpd(a: &SMatrix<Rational>) -> Result<MonomialMatrix> {
    if let Some(w) = pd_class(a)?.witness {
        return Err(Error::NotTPD(w.to_string()));
    }
    let rows = (0..a.rows())
        .map(|i| {
            a.row(i)
                .iter()
                .map(|x| match *x {
                    SScalar::Zero => Monomial::Zero,
                    SScalar::Val(s, m) => Monomial::Term { negative: s == Sign::Neg, exponent: m },
                })
                .collect()
        })
        .collect();
    MonomialMatrix::new(rows)
}
