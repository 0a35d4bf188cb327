//! Dense real symmetric matrices and a cyclic Jacobi eigensolver.

use std::cmp::Ordering;

use num_traits::Float;
use twofloat::TwoFloat;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct RealSymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl RealSymMatrix {
    /// Builds from rows; rejects input that is not symmetric to 1e-12
    /// relative precision.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch("symmetric matrix must be square".into()));
        }
        let data: Vec<f64> = rows.iter().flatten().copied().collect();
        let m = RealSymMatrix { n, data };
        let scale = m.frobenius().max(f64::MIN_POSITIVE);
        for i in 0..n {
            for j in 0..i {
                if (m.get(i, j) - m.get(j, i)).abs() > 1e-12 * scale {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(m)
    }

    /// Fills the matrix from the upper triangle, `f(i, j)` with `i <= j`.
    pub fn from_upper(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let x = f(i, j);
                data[i * n + j] = x;
                data[j * n + i] = x;
            }
        }
        RealSymMatrix { n, data }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_upper(n, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.data.chunks(self.n.max(1)).map(<[f64]>::to_vec).collect()
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}

/// Eigenvalues in decreasing order; `vectors[k]` is the unit eigenvector of
/// `values[k]`.
#[derive(Debug, Clone)]
pub struct SymEigen {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
    pub sweeps: usize,
}

impl SymEigen {
    /// `‖V diag(λ) Vᵀ − B‖_F / ‖B‖_F`.
    pub fn reconstruction_error(&self, b: &RealSymMatrix) -> f64 {
        let n = b.n();
        let mut err = 0.0;
        for i in 0..n {
            for j in 0..n {
                let r: f64 = (0..n).map(|k| self.vectors[k][i] * self.values[k] * self.vectors[k][j]).sum();
                err += (r - b.get(i, j)).powi(2);
            }
        }
        err.sqrt() / b.frobenius().max(f64::MIN_POSITIVE)
    }

    /// `max |VᵀV − I|`.
    pub fn orthogonality_defect(&self) -> f64 {
        let n = self.vectors.len();
        let mut worst: f64 = 0.0;
        for a in 0..n {
            for b in 0..n {
                let dot: f64 = self.vectors[a].iter().zip(&self.vectors[b]).map(|(x, y)| x * y).sum();
                let target = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }
}

pub const DEFAULT_TOL: f64 = 1e-12;
pub const DEFAULT_MAX_SWEEPS: usize = 50;
/// Threshold for [`jacobi_eigen_extended`], near double-double epsilon.
pub const EXTENDED_TOL: f64 = 1e-30;

/// Row-cyclic Jacobi. An off-diagonal entry is annihilated while
/// `|a_pq| > tol · sqrt(|a_pp a_qq|)`; this relative test keeps small
/// eigenvalues of graded matrices accurate.
pub fn jacobi_eigen(b: &RealSymMatrix, tol: f64, max_sweeps: usize) -> Result<SymEigen> {
    cyclic_jacobi(b.n, b.data.clone(), tol, max_sweeps)
}

/// Same rotations carried out in double-double arithmetic, results rounded
/// back to `f64`. Eigenvector coordinates many orders of magnitude below the
/// largest one keep their relative accuracy, which plain `f64` loses.
pub fn jacobi_eigen_extended(b: &RealSymMatrix, tol: f64, max_sweeps: usize) -> Result<SymEigen> {
    let data = b.data.iter().map(|&x| TwoFloat::from(x)).collect();
    cyclic_jacobi(b.n, data, TwoFloat::from(tol), max_sweeps)
}

fn cyclic_jacobi<F: Float>(n: usize, mut a: Vec<F>, tol: F, max_sweeps: usize) -> Result<SymEigen> {
    if !(tol > F::zero()) {
        return Err(Error::BadParams(format!("tolerance must be positive, got {}", to_f64(tol))));
    }
    let mut v = vec![F::zero(); n * n];
    for i in 0..n {
        v[i * n + i] = F::one();
    }
    let two = F::one() + F::one();
    // Not F::epsilon(): twofloat reports the smallest positive value there.
    let floor = F::from(f64::MIN_POSITIVE / f64::EPSILON).expect("representable");
    let mut sweeps = 0;
    loop {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                if apq.abs() <= (tol * (app * aqq).abs().sqrt()).max(floor) {
                    continue;
                }
                rotated = true;
                let theta = (aqq - app) / (two * apq);
                let t = theta.signum() / (theta.abs() + theta.hypot(F::one()));
                let c = F::one() / t.hypot(F::one());
                let s = t * c;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    let np = c * arp - s * arq;
                    let nq = s * arp + c * arq;
                    a[r * n + p] = np;
                    a[p * n + r] = np;
                    a[r * n + q] = nq;
                    a[q * n + r] = nq;
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = F::zero();
                a[q * n + p] = F::zero();
                for r in 0..n {
                    let vrp = v[r * n + p];
                    let vrq = v[r * n + q];
                    v[r * n + p] = c * vrp - s * vrq;
                    v[r * n + q] = s * vrp + c * vrq;
                }
            }
        }
        if !rotated {
            break;
        }
        sweeps += 1;
        if sweeps >= max_sweeps {
            return Err(Error::NoConvergence(max_sweeps));
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].partial_cmp(&a[i * n + i]).unwrap_or(Ordering::Equal));
    Ok(SymEigen {
        values: order.iter().map(|&i| to_f64(a[i * n + i])).collect(),
        vectors: order.iter().map(|&k| (0..n).map(|r| to_f64(v[r * n + k])).collect()).collect(),
        sweeps,
    })
}

fn to_f64<F: Float>(x: F) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}
