//! Formal univariate polynomials over T_max and S_max.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::semiring::{balances, Semiring, SScalar, TScalar};
use crate::value::ValueGroup;

/// Coefficients indexed by degree, trailing zeros stripped. The zero
/// polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

pub type TPoly<G> = Poly<TScalar<G>>;
pub type SPoly<G> = Poly<SScalar<G>>;

impl<T: Semiring> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Semiring::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, reported as 0 for the zero polynomial (see [`Poly::is_zero`]).
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Lowest exponent with a non-zero coefficient; `None` for zero.
    pub fn lower_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).copied().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, x: T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, &c| acc.mul(x).add(c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(a.mul(b));
            }
        }
        Self::new(out)
    }
}

/// Roots with multiplicities, ordered by decreasing modulus.
#[derive(Debug, Clone, PartialEq)]
pub struct RootList<T> {
    pub roots: Vec<(T, usize)>,
}

impl<T: Copy + PartialEq> RootList<T> {
    fn from_sequence(seq: impl IntoIterator<Item = T>) -> Self {
        let mut roots: Vec<(T, usize)> = Vec::new();
        for r in seq {
            match roots.last_mut() {
                Some((last, m)) if *last == r => *m += 1,
                _ => roots.push((r, 1)),
            }
        }
        RootList { roots }
    }

    pub fn total(&self) -> usize {
        self.roots.iter().map(|(_, m)| m).sum()
    }

    /// Every root repeated according to its multiplicity.
    pub fn expanded(&self) -> Vec<T> {
        self.roots.iter().flat_map(|&(r, m)| std::iter::repeat(r).take(m)).collect()
    }

    pub fn multiplicity_of(&self, r: T) -> usize {
        self.roots.iter().find(|(x, _)| *x == r).map_or(0, |(_, m)| *m)
    }
}

// ---------------------------------------------------------------------------
// T_max

impl<G: ValueGroup> TPoly<G> {
    /// Corner roots read off the upper concave hull of `k ↦ P_k`.
    /// `Bottom` appears with multiplicity equal to the lower degree.
    pub fn tmax_roots(&self) -> Result<RootList<TScalar<G>>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let pts: Vec<(i64, G)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter_map(|(k, c)| c.value().map(|v| (k as i64, v)))
            .collect();
        let mut hull: Vec<(i64, G)> = Vec::new();
        for &p in &pts {
            while hull.len() >= 2 {
                let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
                // Drop b when it lies on or below the chord a-p.
                let cross = G::from_int(b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * G::from_int(p.0 - a.0);
                if cross.compare(&G::zero()) != Ordering::Less {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(p);
        }
        let mut roots = Vec::new();
        for w in hull.windows(2).rev() {
            let ((k1, v1), (k2, v2)) = (w[0], w[1]);
            let width = k2 - k1;
            let r = (v1 - v2) / G::from_int(width);
            roots.push((TScalar::Val(r), width as usize));
        }
        let low = pts[0].0 as usize;
        if low > 0 {
            roots.push((TScalar::Bottom, low));
        }
        Ok(RootList { roots })
    }

    /// Full support between lower degree and degree plus the concavity
    /// chain `2 P_k ≥ P_{k-1} + P_{k+1}`.
    pub fn is_factored(&self) -> bool {
        let Some(low) = self.lower_degree() else {
            return true;
        };
        let vals: Option<Vec<G>> = self.coeffs[low..].iter().map(TScalar::value).collect();
        let Some(vals) = vals else {
            return false;
        };
        vals.windows(3).all(|w| {
            (w[1] + w[1]).compare(&(w[0] + w[2])) != Ordering::Less
        })
    }

    /// `Π (X ⊕ c_i)`.
    pub fn from_roots(roots: &[TScalar<G>]) -> Self {
        roots.iter().fold(Poly::new(vec![TScalar::one()]), |acc, &c| {
            acc.mul(&Poly::new(vec![c, TScalar::one()]))
        })
    }
}

// ---------------------------------------------------------------------------
// S_max

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SRootKind {
    /// `P(r) = P^∨(r) ∇ 𝟘`.
    SVeeRoot,
    /// `P(r) ∇ 𝟘` only.
    SRoot,
    NotRoot,
}

#[derive(Debug, Clone)]
pub struct Factorization<G> {
    pub roots: RootList<SScalar<G>>,
    /// No modulus carries two different signed roots.
    pub unique: bool,
}

impl<G: ValueGroup> PartialEq for Factorization<G> {
    fn eq(&self, other: &Self) -> bool {
        self.roots == other.roots && self.unique == other.unique
    }
}

impl<G: ValueGroup> SPoly<G> {
    pub fn modulus(&self) -> TPoly<G> {
        Poly::new(self.coeffs.iter().map(SScalar::modulus).collect())
    }

    pub fn all_signed(&self) -> bool {
        self.coeffs.iter().all(SScalar::is_signed)
    }

    /// `P^∨`: balanced coefficients replaced by zero.
    pub fn signed_part(&self) -> Self {
        Poly::new(
            self.coeffs.iter().map(|&c| if c.is_balanced() { SScalar::Zero } else { c }).collect(),
        )
    }

    /// `P_n (X ⊖ r_1) ⋯ (X ⊖ r_n)`.
    pub fn from_roots(lead: SScalar<G>, roots: &[SScalar<G>]) -> Self {
        roots.iter().fold(Poly::new(vec![lead]), |acc, &r| {
            acc.mul(&Poly::new(vec![r.negate(), SScalar::one()]))
        })
    }

    /// Signed roots with `r_i ⊙ P_{n-i+1} = ⊖P_{n-i}`, valid when the
    /// coefficients are signed and `|P|` is factored.
    pub fn factor_smax(&self) -> Result<Factorization<G>> {
        if let Some(c) = self.coeffs.iter().find(|c| c.is_balanced()) {
            return Err(Error::NotSigned(c.to_string()));
        }
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !self.modulus().is_factored() {
            return Err(Error::NotFactoredModulus);
        }
        let n = self.degree();
        let low = self.lower_degree().expect("non-zero");
        let mut seq = Vec::with_capacity(n);
        for i in 1..=n - low {
            let inv = self.coeffs[n - i + 1].inverse()?;
            seq.push(self.coeffs[n - i].negate().mul(inv));
        }
        seq.extend(std::iter::repeat(SScalar::Zero).take(low));
        let unique = seq.windows(2).all(|w| w[0].modulus() != w[1].modulus() || w[0] == w[1]);
        Ok(Factorization { roots: RootList::from_sequence(seq), unique })
    }

    /// `±c` for every corner root `c` of `|P|`, plus `𝟘` when the constant
    /// coefficient balances zero.
    pub fn smax_root_candidates(&self) -> Result<Vec<SScalar<G>>> {
        let mut out = Vec::new();
        for (c, _) in self.modulus().tmax_roots()?.roots {
            if let TScalar::Val(m) = c {
                out.push(SScalar::pos(m));
                out.push(SScalar::neg(m));
            }
        }
        if self.coeff(0).is_null() {
            out.push(SScalar::Zero);
        }
        Ok(out)
    }

    /// Classifies a signed test point; balanced points are never roots.
    pub fn verify_smax_root(&self, r: SScalar<G>) -> SRootKind {
        if r.is_balanced() {
            return SRootKind::NotRoot;
        }
        let v = self.eval(r);
        if !balances(v, SScalar::Zero) {
            return SRootKind::NotRoot;
        }
        if self.signed_part().eval(r) == v {
            SRootKind::SVeeRoot
        } else {
            SRootKind::SRoot
        }
    }

    /// Root multiplicity when the factorization is unique; other cases
    /// need the general recursive definition and are refused.
    pub fn multiplicity(&self, r: SScalar<G>) -> Result<usize> {
        if !self.all_signed() {
            return Err(Error::UnsupportedCase("balanced coefficients".into()));
        }
        let f = self.factor_smax().map_err(|e| match e {
            Error::NotFactoredModulus => Error::UnsupportedCase("|P| is not factored".into()),
            other => other,
        })?;
        if !f.unique {
            return Err(Error::UnsupportedCase("factorization is not unique".into()));
        }
        if self.verify_smax_root(r) == SRootKind::NotRoot {
            return Ok(0);
        }
        Ok(f.roots.multiplicity_of(r))
    }

    /// Renders `X^3 (-) 3 X^2 (+) 5 X (-) 6`, or with `⊖ ⊕ °` when
    /// `unicode` is set.
    pub fn pretty(&self, unicode: bool) -> String {
        if self.is_zero() {
            return if unicode { "𝟘" } else { "z" }.to_string();
        }
        let (plus, minus) = if unicode { ("⊕", "⊖") } else { ("(+)", "(-)") };
        let mut out = String::new();
        for k in (0..self.coeffs.len()).rev() {
            let c = self.coeffs[k];
            let SScalar::Val(sign, m) = c else { continue };
            let negative = sign == crate::semiring::Sign::Neg;
            if out.is_empty() {
                if negative {
                    out.push_str(minus);
                    out.push(' ');
                }
            } else {
                out.push(' ');
                out.push_str(if negative { minus } else { plus });
                out.push(' ');
            }
            let mut mag = m.to_string();
            if mag.starts_with('-') {
                mag = format!("({mag})");
            }
            let bal = if unicode { "°" } else { "*" };
            let body = match (c.is_balanced(), m.compare(&G::zero()) == Ordering::Equal, k) {
                (true, _, _) => format!("{mag}{bal}"),
                (false, true, k) if k > 0 => String::new(),
                _ => mag,
            };
            let mono = match k {
                0 => String::new(),
                1 => "X".to_string(),
                _ => format!("X^{k}"),
            };
            match (body.is_empty(), mono.is_empty()) {
                (true, _) => out.push_str(&mono),
                (false, true) => out.push_str(&body),
                (false, false) => {
                    out.push_str(&body);
                    out.push(' ');
                    out.push_str(&mono);
                }
            }
        }
        out
    }
}

impl<T: fmt::Display> fmt::Display for Poly<T> {
    /// Space-separated tokens, lowest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("z");
        }
        let toks: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        f.write_str(&toks.join(" "))
    }
}

impl<G: ValueGroup> SPoly<G> {
    /// Coefficient tokens, lowest degree first (`n6 p5 n3 p0`), or the
    /// pretty form produced by [`SPoly::pretty`].
    pub fn parse(text: &str) -> Result<Self> {
        let pretty = text.contains('X')
            || text.split_whitespace().any(|t| matches!(t, "(+)" | "(-)" | "⊕" | "⊖"));
        if pretty {
            return parse_pretty(text);
        }
        let coeffs = text.split_whitespace().map(SScalar::parse).collect::<Result<Vec<_>>>()?;
        if coeffs.is_empty() {
            return Err(Error::parse("empty polynomial"));
        }
        Ok(Poly::new(coeffs))
    }
}

fn parse_pretty<G: ValueGroup>(text: &str) -> Result<SPoly<G>> {
    let mut coeffs: Vec<SScalar<G>> = Vec::new();
    let mut negative = false;
    let mut coeff: Option<SScalar<G>> = None;
    let mut pending = false;
    let mut push = |negative: bool, coeff: Option<SScalar<G>>, degree: usize| {
        let c = coeff.unwrap_or_else(SScalar::one);
        let c = if negative { c.negate() } else { c };
        if coeffs.len() <= degree {
            coeffs.resize(degree + 1, SScalar::Zero);
        }
        coeffs[degree] = coeffs[degree].add(c);
    };
    for tok in text.split_whitespace() {
        match tok {
            "(+)" | "⊕" | "(-)" | "⊖" => {
                if pending {
                    push(negative, coeff.take(), 0);
                }
                negative = matches!(tok, "(-)" | "⊖");
                pending = false;
            }
            _ if tok.starts_with('X') => {
                let degree = match tok.strip_prefix("X^") {
                    Some(d) => d.parse().map_err(|_| Error::parse(format!("bad monomial `{tok}`")))?,
                    None if tok == "X" => 1,
                    None => return Err(Error::parse(format!("bad monomial `{tok}`"))),
                };
                push(negative, coeff.take(), degree);
                negative = false;
                pending = false;
            }
            _ => {
                if pending {
                    return Err(Error::parse(format!("two coefficients in a row at `{tok}`")));
                }
                coeff = Some(SScalar::parse(tok)?);
                pending = true;
            }
        }
    }
    if pending {
        push(negative, coeff, 0);
    }
    Ok(Poly::new(coeffs))
}

impl<G: ValueGroup> TPoly<G> {
    pub fn parse(text: &str) -> Result<Self> {
        let coeffs = text.split_whitespace().map(TScalar::parse).collect::<Result<Vec<_>>>()?;
        if coeffs.is_empty() {
            return Err(Error::parse("empty polynomial"));
        }
        Ok(Poly::new(coeffs))
    }
}
