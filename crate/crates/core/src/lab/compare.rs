//! Tropical predictions against classical spectra.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lab::jacobi::{jacobi_eigen, jacobi_eigen_extended, RealSymMatrix, DEFAULT_MAX_SWEEPS, DEFAULT_TOL, EXTENDED_TOL};
use crate::lab::monomial::{sv_t, tropicalize_real, MonomialMatrix};
use crate::lab::random::random_gram_pd;
use crate::semiring::{Semiring, SScalar, Sign};
use crate::spectral::{eigvec_adjugate, pd_class, smax_eigenvalues, sorted_diagonal, PDClass};
use crate::value::{Rational, ValueGroup};

/// Allowed excess of a measured modulus over a balanced prediction.
pub const BALANCED_SLACK: f64 = 0.05;

/// A measured or predicted signed log-magnitude, flattened for output.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SignedLog {
    /// `"+"`, `"-"`, `"bal"` or `"zero"`.
    pub sign: &'static str,
    pub value: f64,
}

impl SignedLog {
    fn from_f64(s: SScalar<f64>) -> Self {
        match s {
            SScalar::Zero => SignedLog { sign: "zero", value: f64::NEG_INFINITY },
            SScalar::Val(sg, m) => SignedLog { sign: sign_tag(sg), value: m },
        }
    }

    fn from_q(s: SScalar<Rational>) -> Self {
        SignedLog::from_f64(match s {
            SScalar::Zero => SScalar::Zero,
            SScalar::Val(sg, m) => SScalar::Val(sg, m.to_float()),
        })
    }

    pub fn pretty(&self) -> String {
        match self.sign {
            "zero" => "z".to_string(),
            "-" => format!("(-){:.4}", self.value),
            "bal" => format!("{:.4}*", self.value),
            _ => format!("{:.4}", self.value),
        }
    }
}

fn sign_tag(s: Sign) -> &'static str {
    match s {
        Sign::Pos => "+",
        Sign::Neg => "-",
        Sign::Bal => "bal",
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EigenvalueRow {
    pub k: usize,
    pub t: f64,
    pub gamma: f64,
    pub sv: SignedLog,
    pub residual: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct VectorRow {
    pub k: usize,
    pub t: f64,
    pub coord: usize,
    pub predicted: SignedLog,
    pub measured: SignedLog,
    /// Signed predictions: measured sign equals predicted sign.
    pub sign_match: Option<bool>,
    /// Signed predictions: `|measured − predicted|` on log-moduli.
    /// Balanced ones: `predicted − measured`, which should be non-negative.
    pub gap: f64,
    pub ok: bool,
    pub degenerate: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValuationReport {
    pub t_values: Vec<f64>,
    pub eigenvalues: Vec<EigenvalueRow>,
    pub vectors: Vec<VectorRow>,
}

/// Eigenvector coordinates of a graded family span many decades, so the
/// classical side runs in extended precision.
fn classical(m: &MonomialMatrix, t: f64) -> Result<crate::lab::jacobi::SymEigen> {
    jacobi_eigen_extended(&m.evaluate(t)?, EXTENDED_TOL, DEFAULT_MAX_SWEEPS)
}

/// `sv_t(λ_k)` against the tropical eigenvalues `γ_k` for each `t`.
pub fn compare_eigenvalues(m: &MonomialMatrix, t_values: &[f64]) -> Result<ValuationReport> {
    let a = m.signed_valuation();
    let gammas: Vec<f64> = smax_eigenvalues(&a)?
        .expanded()
        .iter()
        .map(|g| g.magnitude().expect("TPD eigenvalues are non-zero").to_float())
        .collect();
    let mut rows = Vec::new();
    for &t in t_values {
        let eig = classical(m, t)?;
        for (k, (&lambda, &gamma)) in eig.values.iter().zip(&gammas).enumerate() {
            let sv = sv_t(lambda, t)?;
            let residual = match sv {
                SScalar::Val(Sign::Pos, x) => (x - gamma).abs(),
                _ => f64::INFINITY,
            };
            rows.push(EigenvalueRow { k: k + 1, t, gamma, sv: SignedLog::from_f64(sv), residual });
        }
    }
    Ok(ValuationReport { t_values: t_values.to_vec(), eigenvalues: rows, vectors: Vec::new() })
}

/// Classical eigenvectors scaled so the coordinate of the k-th largest
/// diagonal entry is 1, against `(v^(k)_k)^{-1} v^(k)`.
pub fn compare_eigenvectors(m: &MonomialMatrix, t_values: &[f64]) -> Result<ValuationReport> {
    let a = m.signed_valuation();
    let mut report = compare_eigenvalues(m, t_values)?;
    let diag = sorted_diagonal(&a);
    if diag.windows(2).any(|w| w[0].1 == w[1].1) {
        return Err(Error::NotGenericDiagonal);
    }
    let n = a.rows();
    let mut predictions = Vec::with_capacity(n);
    for k in 1..=n {
        let v = eigvec_adjugate(&a, k)?;
        let idx = diag[k - 1].0;
        let inv = v[idx].inverse()?;
        predictions.push(v.iter().map(|&x| inv.mul(x)).collect::<Vec<_>>());
    }
    for &t in t_values {
        let eig = classical(m, t)?;
        for k in 1..=n {
            let idx = diag[k - 1].0;
            let u = &eig.vectors[k - 1];
            let scale = u[idx];
            let umax = u.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
            let degenerate = scale == 0.0 || scale.abs() < 1e-300 || scale.abs() < 1e-15 * umax;
            for i in 0..n {
                let pred = predictions[k - 1][i];
                let meas = sv_t(u[i] / scale, t)?;
                let (sign_match, gap, ok) = judge(pred, meas);
                report.vectors.push(VectorRow {
                    k,
                    t,
                    coord: i + 1,
                    predicted: SignedLog::from_q(pred),
                    measured: SignedLog::from_f64(meas),
                    sign_match,
                    gap,
                    ok: ok && !degenerate,
                    degenerate,
                });
            }
        }
    }
    Ok(report)
}

fn judge(pred: SScalar<Rational>, meas: SScalar<f64>) -> (Option<bool>, f64, bool) {
    match (pred, meas) {
        (SScalar::Zero, SScalar::Zero) => (Some(true), 0.0, true),
        (SScalar::Zero, _) | (SScalar::Val(Sign::Pos | Sign::Neg, _), SScalar::Zero) => {
            (Some(false), f64::INFINITY, false)
        }
        (SScalar::Val(Sign::Bal, p), SScalar::Zero) => (None, f64::INFINITY, p.to_float().is_finite()),
        (SScalar::Val(Sign::Bal, p), SScalar::Val(_, x)) => {
            let gap = p.to_float() - x;
            (None, gap, x <= p.to_float() + BALANCED_SLACK)
        }
        (SScalar::Val(ps, p), SScalar::Val(ms, x)) => {
            let gap = (x - p.to_float()).abs();
            (Some(ps == ms), gap, ps == ms)
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Ball {
    pub center: f64,
    pub radius: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct GershgorinReport {
    /// `min_{i<j} sqrt(a_ii a_jj) / |a_ij|`; infinite without off-diagonal mass.
    pub gamma: f64,
    pub balls: Vec<Ball>,
    pub eigenvalues: Vec<f64>,
    pub contained: bool,
    /// `γ < 1`: the balls are too wide to say much.
    pub weak: bool,
}

/// Balls `B(a_ii, a_ii (n−1)/γ)` and whether they cover the spectrum.
pub fn gershgorin_pd_bound(b: &RealSymMatrix) -> Result<GershgorinReport> {
    let n = b.n();
    for i in 0..n {
        if !(b.get(i, i) > 0.0) {
            return Err(Error::NonpositiveDiagonal(i + 1));
        }
    }
    let mut gamma = f64::INFINITY;
    for i in 0..n {
        for j in i + 1..n {
            let off = b.get(i, j).abs();
            if off > 0.0 {
                gamma = gamma.min((b.get(i, i) * b.get(j, j)).sqrt() / off);
            }
        }
    }
    let balls: Vec<Ball> = (0..n)
        .map(|i| {
            let c = b.get(i, i);
            let r = if gamma.is_infinite() { 0.0 } else { c * (n as f64 - 1.0) / gamma };
            Ball { center: c, radius: r }
        })
        .collect();
    let eig = jacobi_eigen(b, DEFAULT_TOL, DEFAULT_MAX_SWEEPS)?;
    let contained = eig.values.iter().all(|&l| {
        balls
            .iter()
            .any(|ball| (l - ball.center).abs() <= ball.radius + 1e-12 * ball.center.abs().max(l.abs()))
    });
    Ok(GershgorinReport { gamma, balls, eigenvalues: eig.values, contained, weak: gamma < 1.0 })
}

#[derive(Debug, Clone, Serialize)]
pub struct GramRow {
    pub i: usize,
    pub lambda: f64,
    pub sv: f64,
    pub gamma: f64,
    pub rel_error: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct GramReport {
    pub n: usize,
    pub seed: u64,
    pub t: f64,
    pub class: PDClass,
    pub rows: Vec<GramRow>,
}

/// Random Gram matrix `B`, its tropicalization `A = sv_t(B)`, and the
/// relative errors `|sv_t(λ_i) − γ_i| / |sv_t(λ_i)|` where `γ_i` is the
/// i-th largest diagonal entry of `A`.
pub fn gram_experiment(n: usize, seed: u64, t: f64) -> Result<GramReport> {
    let b = random_gram_pd(n, seed)?;
    let a = tropicalize_real(&b, t)?;
    let class = pd_class(&a)?;
    let gammas: Vec<f64> = sorted_diagonal(&a)
        .into_iter()
        .map(|(_, g)| match g {
            SScalar::Val(Sign::Pos, m) => m,
            _ => f64::NAN,
        })
        .collect();
    let eig = jacobi_eigen(&b, DEFAULT_TOL, DEFAULT_MAX_SWEEPS)?;
    let rows = eig
        .values
        .iter()
        .zip(&gammas)
        .enumerate()
        .map(|(i, (&lambda, &gamma))| {
            let sv = match sv_t(lambda, t) {
                Ok(SScalar::Val(Sign::Pos, x)) => x,
                _ => f64::NAN,
            };
            GramRow { i: i + 1, lambda, sv, gamma, rel_error: (sv - gamma).abs() / sv.abs() }
        })
        .collect();
    Ok(GramReport { n, seed, t, class, rows })
}
