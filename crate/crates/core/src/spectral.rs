//! Positive definiteness, characteristic polynomials and eigenpairs of
//! symmetric S_max matrices.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{k_subsets, SMatrix, SVector, TMatrix};
use crate::poly::{Poly, RootList, SPoly, TPoly};
use crate::semiring::{balances, leq_signed, lt_signed, Semiring, SScalar, TScalar};
use crate::value::ValueGroup;

/// `xᵀ A x` for symmetric `A`.
pub fn quadratic_form<G: ValueGroup>(a: &SMatrix<G>, x: &[SScalar<G>]) -> Result<SScalar<G>> {
    let n = a.require_square()?;
    if x.len() != n {
        return Err(Error::ShapeMismatch(format!("vector of length {} for n = {n}", x.len())));
    }
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let ax = a.mul_vec(x)?;
    Ok(x.iter().zip(&ax).fold(SScalar::Zero, |acc, (&xi, &yi)| acc.add(xi.mul(yi))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PDVerdict {
    #[serde(rename = "TPD")]
    Tpd,
    #[serde(rename = "TPSD")]
    TpsdOnly,
    #[serde(rename = "NotTPSD")]
    NotTpsd,
}

impl fmt::Display for PDVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PDVerdict::Tpd => "TPD",
            PDVerdict::TpsdOnly => "TPSD",
            PDVerdict::NotTpsd => "NotTPSD",
        })
    }
}

/// First condition that failed, with 0-based indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Asymmetric { i: usize, j: usize },
    Diagonal { i: usize },
    Minor { i: usize, j: usize },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Witness::Asymmetric { i, j } => write!(f, "asymmetric pair ({},{})", i + 1, j + 1),
            Witness::Diagonal { i } => write!(f, "diagonal entry ({},{})", i + 1, i + 1),
            Witness::Minor { i, j } => write!(f, "minor ({},{})", i + 1, j + 1),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PDClass {
    pub verdict: PDVerdict,
    /// Absent exactly when the verdict is TPD.
    pub witness: Option<Witness>,
}

/// Entrywise TPD/TPSD test: symmetry, diagonal sign, and
/// `a_ij² ≤ a_ii a_jj` (strict for TPD).
pub fn pd_class<G: ValueGroup>(a: &SMatrix<G>) -> Result<PDClass> {
    let n = a.require_square()?;
    if let Some(x) = a.entries().iter().find(|x| x.is_balanced()) {
        return Err(Error::NotSigned(x.to_string()));
    }
    let not_tpsd = |w| Ok(PDClass { verdict: PDVerdict::NotTpsd, witness: Some(w) });
    for i in 0..n {
        for j in 0..i {
            if a[(i, j)] != a[(j, i)] {
                return not_tpsd(Witness::Asymmetric { i: j, j: i });
            }
        }
    }
    let mut tpd_failure = None;
    for i in 0..n {
        let d = a[(i, i)];
        if d.is_neg() {
            return not_tpsd(Witness::Diagonal { i });
        }
        if d.is_zero() && tpd_failure.is_none() {
            tpd_failure = Some(Witness::Diagonal { i });
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let sq = a[(i, j)].mul(a[(i, j)]);
            let prod = a[(i, i)].mul(a[(j, j)]);
            if !leq_signed(sq, prod) {
                return not_tpsd(Witness::Minor { i, j });
            }
            if !lt_signed(sq, prod) && tpd_failure.is_none() {
                tpd_failure = Some(Witness::Minor { i, j });
            }
        }
    }
    Ok(match tpd_failure {
        None => PDClass { verdict: PDVerdict::Tpd, witness: None },
        Some(w) => PDClass { verdict: PDVerdict::TpsdOnly, witness: Some(w) },
    })
}

pub fn is_tpd<G: ValueGroup>(a: &SMatrix<G>) -> Result<bool> {
    Ok(pd_class(a)?.verdict == PDVerdict::Tpd)
}

pub fn is_tpsd<G: ValueGroup>(a: &SMatrix<G>) -> Result<bool> {
    Ok(pd_class(a)?.verdict != PDVerdict::NotTpsd)
}

fn require_tpd<G: ValueGroup>(a: &SMatrix<G>) -> Result<()> {
    let c = pd_class(a)?;
    match c.witness {
        None => Ok(()),
        Some(w) => Err(Error::NotTPD(w.to_string())),
    }
}

/// Characteristic polynomial `Σ_k (⊖𝟙)^{n-k} tr_{n-k}(A) X^k`. TPD inputs
/// take the shortcut `tr_j A = d_1 ⋯ d_j` over the sorted diagonal.
pub fn charpoly<G: ValueGroup>(a: &SMatrix<G>) -> Result<SPoly<G>> {
    a.require_square()?;
    let tpd = a.all_signed() && is_tpd(a)?;
    if !tpd {
        return charpoly_general(a);
    }
    let n = a.rows();
    let d: Vec<SScalar<G>> = sorted_diagonal(a).into_iter().map(|(_, g)| g).collect();
    let mut coeffs = vec![SScalar::Zero; n + 1];
    let mut prefix = SScalar::one();
    for j in 0..=n {
        if j > 0 {
            prefix = prefix.mul(d[j - 1]);
        }
        coeffs[n - j] = SScalar::minus_one_pow(j).mul(prefix);
    }
    Ok(Poly::new(coeffs))
}

/// Characteristic polynomial through the k-th traces.
pub fn charpoly_general<G: ValueGroup>(a: &SMatrix<G>) -> Result<SPoly<G>> {
    let n = a.require_square()?;
    let mut coeffs = Vec::with_capacity(n + 1);
    for k in 0..=n {
        coeffs.push(SScalar::minus_one_pow(n - k).mul(a.trace_k(n - k)?));
    }
    Ok(Poly::new(coeffs))
}

/// Corner roots of `per(X I ⊕ M)`.
pub fn tmax_eigenvalues<G: ValueGroup>(m: &TMatrix<G>) -> Result<RootList<TScalar<G>>> {
    let n = m.require_square()?;
    let mut coeffs = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc = TScalar::Bottom;
        for s in k_subsets(n, n - k) {
            acc = acc.add(m.submatrix(&s, &s).permanent()?);
        }
        coeffs.push(acc);
    }
    TPoly::new(coeffs).tmax_roots()
}

/// Diagonal entries with their original index, in decreasing order; ties
/// keep index order.
pub fn sorted_diagonal<G: ValueGroup>(a: &SMatrix<G>) -> Vec<(usize, SScalar<G>)> {
    let mut d: Vec<(usize, SScalar<G>)> = a.diag().into_iter().enumerate().collect();
    d.sort_by(|x, y| y.1.modulus().compare(&x.1.modulus()));
    d
}

/// Eigenvalues of a TPD matrix: the sorted diagonal, each checked to be a
/// root of the characteristic polynomial.
pub fn smax_eigenvalues<G: ValueGroup>(a: &SMatrix<G>) -> Result<RootList<SScalar<G>>> {
    require_tpd(a)?;
    let p = charpoly(a)?;
    let mut roots: Vec<(SScalar<G>, usize)> = Vec::new();
    for (_, g) in sorted_diagonal(a) {
        match roots.last_mut() {
            Some((last, m)) if *last == g => *m += 1,
            _ => roots.push((g, 1)),
        }
    }
    for &(g, _) in &roots {
        if !balances(p.eval(g), SScalar::Zero) {
            return Err(Error::InternalMismatch(format!("{g} is not a root of the characteristic polynomial")));
        }
    }
    Ok(RootList { roots })
}

struct Indexed<G> {
    /// Original index of each sorted position.
    order: Vec<usize>,
    gammas: Vec<SScalar<G>>,
}

impl<G: ValueGroup> Indexed<G> {
    fn new(a: &SMatrix<G>) -> Self {
        let d = sorted_diagonal(a);
        Indexed { order: d.iter().map(|x| x.0).collect(), gammas: d.iter().map(|x| x.1).collect() }
    }

    fn check_k(&self, k: usize) -> Result<()> {
        let n = self.order.len();
        if k == 0 || k > n {
            Err(Error::BadK { k, n })
        } else {
            Ok(())
        }
    }

    fn is_simple(&self, k: usize) -> bool {
        let g = self.gammas[k - 1];
        self.gammas.iter().enumerate().all(|(i, &h)| i == k - 1 || h != g)
    }
}

/// `γ_k I ⊖ A`.
pub fn shifted<G: ValueGroup>(a: &SMatrix<G>, gamma: SScalar<G>) -> Result<SMatrix<G>> {
    let n = a.require_square()?;
    SMatrix::identity(n).scale(gamma).sub(a)
}

/// `v^(k)`: the column of `adj(γ_k I ⊖ A)` belonging to the k-th largest
/// diagonal entry. `k` is 1-based.
pub fn eigvec_adjugate<G: ValueGroup>(a: &SMatrix<G>, k: usize) -> Result<SVector<G>> {
    require_tpd(a)?;
    let ix = Indexed::new(a);
    ix.check_k(k)?;
    shifted(a, ix.gammas[k - 1])?.adjugate_column(ix.order[k - 1])
}

/// `v^(k)` through the star formula
/// `λ_k ((γ I ⊖ D^(k))^{-1} A^(k))*` with
/// `λ_k = (⊖𝟙)^{k-1} γ_1 ⋯ γ_{k-1} γ^{n-k}`, where `D^(k)` carries the
/// k-1 larger diagonal entries and `A^(k)` the rest of `A`.
pub fn eigvec_kleene<G: ValueGroup>(a: &SMatrix<G>, k: usize) -> Result<SVector<G>> {
    require_tpd(a)?;
    let ix = Indexed::new(a);
    ix.check_k(k)?;
    if !ix.is_simple(k) {
        return Err(Error::NotSimple(k));
    }
    let n = a.rows();
    let gamma = ix.gammas[k - 1];
    let mut rest = a.clone();
    let mut scale = vec![gamma; n];
    let mut lambda = SScalar::minus_one_pow(k - 1);
    for i in 0..k - 1 {
        let idx = ix.order[i];
        rest[(idx, idx)] = SScalar::Zero;
        // γ ⊖ γ_i = ⊖γ_i because γ_i is strictly larger.
        scale[idx] = gamma.sub(ix.gammas[i]);
        lambda = lambda.mul(ix.gammas[i]);
    }
    lambda = lambda.mul(gamma.pow_int((n - k) as i64)?);
    for (i, s) in scale.iter().enumerate() {
        let inv = s.inverse()?;
        for j in 0..n {
            rest[(i, j)] = inv.mul(rest[(i, j)]);
        }
    }
    let star = rest.kleene_star()?;
    Ok(star.col(ix.order[k - 1]).into_iter().map(|x| lambda.mul(x)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EigClass {
    None,
    Weak,
    Eigen,
    Strong,
}

impl fmt::Display for EigClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EigClass::None => "none",
            EigClass::Weak => "weak",
            EigClass::Eigen => "eigen",
            EigClass::Strong => "strong",
        })
    }
}

/// Strongest of: `A v = γ v` with `v` signed (strong), `A v ∇ γ v` with `v`
/// signed (eigen), `A v ∇ γ v` with some signed non-zero coordinate (weak).
pub fn classify_eigenvector<G: ValueGroup>(
    a: &SMatrix<G>,
    gamma: SScalar<G>,
    v: &[SScalar<G>],
) -> Result<EigClass> {
    let av = a.mul_vec(v)?;
    let gv: Vec<SScalar<G>> = v.iter().map(|&x| gamma.mul(x)).collect();
    let balanced = av.iter().zip(&gv).all(|(&l, &r)| balances(l, r));
    let signed = v.iter().all(SScalar::is_signed);
    let nonzero = v.iter().any(|x| !x.is_zero());
    let some_signed = v.iter().any(|x| x.is_signed() && !x.is_zero());
    Ok(if signed && nonzero && av == gv {
        EigClass::Strong
    } else if signed && nonzero && balanced {
        EigClass::Eigen
    } else if some_signed && balanced {
        EigClass::Weak
    } else {
        EigClass::None
    })
}

/// A signed eigenvector with the moduli of `v^(k)`, agreeing with it on its
/// signed coordinates.
pub fn eigvec_construct<G: ValueGroup>(a: &SMatrix<G>, k: usize) -> Result<SVector<G>> {
    require_tpd(a)?;
    let ix = Indexed::new(a);
    ix.check_k(k)?;
    if !ix.is_simple(k) {
        return Err(Error::NotSimple(k));
    }
    let gamma = ix.gammas[k - 1];
    let b = shifted(a, gamma)?;
    let idx = ix.order[k - 1];
    let v = b.adjugate_column(idx)?;
    let acceptable = |w: &[SScalar<G>]| -> Result<bool> {
        let agrees = w.iter().zip(&v).all(|(x, y)| {
            x.modulus() == y.modulus() && (y.is_balanced() || x == y)
        });
        Ok(agrees && classify_eigenvector(a, gamma, w)? >= EigClass::Eigen)
    };
    if v.iter().all(SScalar::is_signed) {
        return Ok(v);
    }
    // Fix the k-th coordinate and solve the remaining rows of B v ∇ 𝟘.
    let others: Vec<usize> = (0..a.rows()).filter(|&i| i != idx).collect();
    let f = b.submatrix(&others, &others);
    let col = b.submatrix(&others, &[idx]).col(0);
    let rhs: Vec<SScalar<G>> = col.iter().map(|&c| v[idx].mul(c).negate()).collect();
    if let Ok(w) = f.signed_solution(&rhs) {
        let mut cand = v.clone();
        for (p, &i) in others.iter().enumerate() {
            cand[i] = w[p];
        }
        if acceptable(&cand)? {
            return Ok(cand);
        }
    }
    // Sign search over the balanced coordinates, index order, positive first.
    let free: Vec<usize> = (0..v.len()).filter(|&i| v[i].is_balanced()).collect();
    let kf = free.len();
    for mask in 0u64..(1u64 << kf) {
        let mut cand = v.clone();
        for (bit, &i) in free.iter().enumerate() {
            let m = v[i].magnitude().expect("balanced entries are non-zero");
            cand[i] = if mask >> (kf - 1 - bit) & 1 == 1 { SScalar::neg(m) } else { SScalar::pos(m) };
        }
        if acceptable(&cand)? {
            return Ok(cand);
        }
    }
    Err(Error::SearchExhausted)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StrongExists {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for StrongExists {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StrongExists::Yes => "yes",
            StrongExists::No => "no",
            StrongExists::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Uniqueness {
    pub unique_up_to_scalar: bool,
    pub strong_exists: StrongExists,
}

/// What can be said about uniqueness and strong eigenvectors for a simple
/// `γ_k`. Reducible matrices with `k ≥ 2` give `Unknown` unless `v^(k)`
/// itself turns out to be strong.
pub fn uniqueness_and_strength<G: ValueGroup>(a: &SMatrix<G>, k: usize) -> Result<Uniqueness> {
    require_tpd(a)?;
    let ix = Indexed::new(a);
    ix.check_k(k)?;
    if !ix.is_simple(k) {
        return Err(Error::NotSimple(k));
    }
    let v = eigvec_adjugate(a, k)?;
    let signed = v.iter().all(SScalar::is_signed);
    let strong_exists = if !signed {
        StrongExists::No
    } else if k == 1 {
        StrongExists::Yes
    } else if a.is_irreducible()? {
        StrongExists::No
    } else if classify_eigenvector(a, ix.gammas[k - 1], &v)? == EigClass::Strong {
        StrongExists::Yes
    } else {
        StrongExists::Unknown
    };
    Ok(Uniqueness { unique_up_to_scalar: signed, strong_exists })
}

/// Pairwise distinct diagonal and every `v^(k)` signed with no zero entry.
pub fn genericity_check<G: ValueGroup>(a: &SMatrix<G>) -> Result<bool> {
    require_tpd(a)?;
    let ix = Indexed::new(a);
    let n = a.rows();
    if !(1..=n).all(|k| ix.is_simple(k)) {
        return Ok(false);
    }
    for k in 1..=n {
        let v = eigvec_adjugate(a, k)?;
        if v.iter().any(|x| x.is_null()) {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// report

#[derive(Debug, Clone, Serialize)]
pub struct EigenvalueEntry {
    pub value: String,
    pub mult: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct VectorReport {
    pub k: usize,
    pub gamma: String,
    pub adjugate: Vec<String>,
    pub kleene: Option<Vec<String>>,
    pub class: EigClass,
    pub simple: bool,
    pub unique: bool,
    pub strong_exists: StrongExists,
}

/// Everything the spectral routines say about a TPD matrix. Scalars are
/// stored as text tokens (`p3`, `n-1`, `b2`, `z`).
#[derive(Debug, Clone, Serialize)]
pub struct SpectralReport {
    pub eigenvalues: Vec<EigenvalueEntry>,
    pub vectors: Vec<VectorReport>,
    pub generic: bool,
}

impl SpectralReport {
    pub fn build<G: ValueGroup>(a: &SMatrix<G>) -> Result<Self> {
        let eig = smax_eigenvalues(a)?;
        let ix = Indexed::new(a);
        let tokens = |v: &[SScalar<G>]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        let mut vectors = Vec::new();
        for k in 1..=a.rows() {
            let gamma = ix.gammas[k - 1];
            let adj = eigvec_adjugate(a, k)?;
            let simple = ix.is_simple(k);
            let (kleene, unique, strong_exists) = if simple {
                let kl = eigvec_kleene(a, k)?;
                if kl != adj {
                    return Err(Error::InternalMismatch(format!("star and adjugate differ for k = {k}")));
                }
                let u = uniqueness_and_strength(a, k)?;
                (Some(tokens(&kl)), u.unique_up_to_scalar, u.strong_exists)
            } else {
                (None, false, StrongExists::Unknown)
            };
            vectors.push(VectorReport {
                k,
                gamma: gamma.to_string(),
                adjugate: tokens(&adj),
                kleene,
                class: classify_eigenvector(a, gamma, &adj)?,
                simple,
                unique,
                strong_exists,
            });
        }
        Ok(SpectralReport {
            eigenvalues: eig
                .roots
                .iter()
                .map(|(g, m)| EigenvalueEntry { value: g.to_string(), mult: *m })
                .collect(),
            vectors,
            generic: genericity_check(a)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_matrix;
    use crate::value::Rational;

    type S = SScalar<Rational>;

    fn m(text: &str) -> SMatrix<Rational> {
        parse_matrix(text).unwrap()
    }

    fn ex44() -> SMatrix<Rational> {
        m("3 2 1; 2 2 1; 1 1 1")
    }

    fn ex56() -> SMatrix<Rational> {
        m("3 (-)2 1; (-)2 2 1; 1 1 1")
    }

    fn ex58() -> SMatrix<Rational> {
        m("3 (-)2 0; (-)2 2 1; 0 1 1")
    }

    #[test]
    fn pd_verdicts() {
        assert_eq!(pd_class(&ex44()).unwrap(), PDClass { verdict: PDVerdict::Tpd, witness: None });
        let ones = m("0 0; 0 0");
        let c = pd_class(&ones).unwrap();
        assert_eq!(c.verdict, PDVerdict::TpsdOnly);
        assert_eq!(c.witness, Some(Witness::Minor { i: 0, j: 1 }));
        assert_eq!(pd_class(&m("0 1; 1 0")).unwrap().verdict, PDVerdict::NotTpsd);
        assert_eq!(pd_class(&m("(-)1 z; z 1")).unwrap().witness, Some(Witness::Diagonal { i: 0 }));
        assert_eq!(pd_class(&m("1 2; 3 1")).unwrap().witness, Some(Witness::Asymmetric { i: 0, j: 1 }));
        assert!(matches!(pd_class(&m("1 0*; 0* 1")), Err(Error::NotSigned(_))));
    }

    #[test]
    fn quadratic_form_of_tpd_is_positive() {
        let a = ex56();
        let q = quadratic_form(&a, &[S::p(0), S::n(1), S::p(0)]).unwrap();
        assert!(q.is_pos());
        assert_eq!(quadratic_form(&m("1 2; 3 1"), &[S::p(0), S::p(0)]), Err(Error::NotSymmetric));
    }

    #[test]
    fn characteristic_polynomials() {
        let p = charpoly(&ex44()).unwrap();
        assert_eq!(p.coeffs(), &[S::n(6), S::p(5), S::n(3), S::p(0)]);
        assert_eq!(charpoly_general(&ex44()).unwrap(), p);
        let q = charpoly(&m("0 0; 0 0")).unwrap();
        assert_eq!(q.coeffs(), &[S::b(0), S::n(0), S::p(0)]);
    }

    #[test]
    fn eigenvalues_are_the_diagonal() {
        let e = smax_eigenvalues(&ex56()).unwrap();
        assert_eq!(e.roots, vec![(S::p(3), 1), (S::p(2), 1), (S::p(1), 1)]);
        let dup = smax_eigenvalues(&m("2 0; 0 2")).unwrap();
        assert_eq!(dup.roots, vec![(S::p(2), 2)]);
        let t = tmax_eigenvalues(&ex44().modulus()).unwrap();
        assert_eq!(t.expanded(), vec![TScalar::from_int(3), TScalar::from_int(2), TScalar::from_int(1)]);
    }

    #[test]
    fn adjugate_eigenvectors() {
        let a = ex56();
        assert_eq!(eigvec_adjugate(&a, 1).unwrap(), vec![S::p(6), S::n(5), S::p(4)]);
        assert_eq!(eigvec_adjugate(&a, 2).unwrap(), vec![S::n(4), S::n(5), S::n(4)]);
        assert_eq!(eigvec_adjugate(&a, 3).unwrap(), vec![S::n(3), S::n(4), S::p(5)]);
        assert_eq!(eigvec_adjugate(&ex44(), 3).unwrap(), vec![S::b(3), S::n(4), S::p(5)]);
        assert_eq!(eigvec_adjugate(&ex58(), 1).unwrap(), vec![S::p(6), S::n(5), S::b(3)]);
        assert_eq!(eigvec_adjugate(&a, 4), Err(Error::BadK { k: 4, n: 3 }));
        assert!(matches!(eigvec_adjugate(&m("0 0; 0 0"), 1), Err(Error::NotTPD(_))));
    }

    #[test]
    fn star_formula_matches_adjugate() {
        for a in [ex44(), ex56(), ex58()] {
            for k in 1..=3 {
                assert_eq!(eigvec_kleene(&a, k).unwrap(), eigvec_adjugate(&a, k).unwrap(), "k = {k}");
            }
        }
        assert_eq!(eigvec_kleene(&m("2 0; 0 2"), 1), Err(Error::NotSimple(1)));
    }

    #[test]
    fn classification() {
        let a = ex56();
        let g = |k: i64| S::p(k);
        assert_eq!(classify_eigenvector(&a, g(3), &eigvec_adjugate(&a, 1).unwrap()).unwrap(), EigClass::Strong);
        assert_eq!(classify_eigenvector(&a, g(2), &eigvec_adjugate(&a, 2).unwrap()).unwrap(), EigClass::Eigen);
        assert_eq!(classify_eigenvector(&a, g(1), &eigvec_adjugate(&a, 3).unwrap()).unwrap(), EigClass::Eigen);
        let b = ex44();
        assert_eq!(classify_eigenvector(&b, g(2), &eigvec_adjugate(&b, 2).unwrap()).unwrap(), EigClass::Eigen);
        assert_eq!(classify_eigenvector(&b, g(1), &eigvec_adjugate(&b, 3).unwrap()).unwrap(), EigClass::Weak);
        assert_eq!(classify_eigenvector(&b, g(1), &[S::Zero; 3]).unwrap(), EigClass::None);
    }

    #[test]
    fn constructed_eigenvector_is_signed() {
        let a = ex58();
        let w = eigvec_construct(&a, 1).unwrap();
        assert!(w == vec![S::p(6), S::n(5), S::p(3)] || w == vec![S::p(6), S::n(5), S::n(3)]);
        assert!(classify_eigenvector(&a, S::p(3), &[S::p(6), S::n(5), S::p(3)]).unwrap() >= EigClass::Eigen);
        assert!(classify_eigenvector(&a, S::p(3), &[S::p(6), S::n(5), S::n(3)]).unwrap() >= EigClass::Eigen);
        assert_eq!(eigvec_construct(&ex56(), 1).unwrap(), eigvec_adjugate(&ex56(), 1).unwrap());
    }

    #[test]
    fn uniqueness_and_strong_vectors() {
        let u = uniqueness_and_strength(&ex56(), 1).unwrap();
        assert_eq!(u, Uniqueness { unique_up_to_scalar: true, strong_exists: StrongExists::Yes });
        let u = uniqueness_and_strength(&ex44(), 2).unwrap();
        assert_eq!(u, Uniqueness { unique_up_to_scalar: true, strong_exists: StrongExists::No });
        let u = uniqueness_and_strength(&ex58(), 1).unwrap();
        assert_eq!(u, Uniqueness { unique_up_to_scalar: false, strong_exists: StrongExists::No });
    }

    #[test]
    fn genericity() {
        assert!(genericity_check(&ex56()).unwrap());
        assert!(!genericity_check(&ex44()).unwrap());
        assert!(!genericity_check(&m("2 0; 0 2")).unwrap());
    }

    #[test]
    fn report_round_up() {
        let r = SpectralReport::build(&ex56()).unwrap();
        assert_eq!(r.eigenvalues.len(), 3);
        assert_eq!(r.vectors[0].adjugate, vec!["p6", "n5", "p4"]);
        assert_eq!(r.vectors[0].class, EigClass::Strong);
        assert!(r.generic);
    }
}
