//! Seeded generators for TPD matrices and classical Gram matrices.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::lab::jacobi::RealSymMatrix;
use crate::matrix::SMatrix;
use crate::semiring::SScalar;
use crate::value::Rational;

/// Random TPD matrix. Diagonal exponents are integers drawn from
/// `exponents`; each off-diagonal pair gets a random sign and an integer
/// exponent `e` with `2e ≤ d_i + d_j − margin`, or is left at `𝟘` with
/// probability 1/8.
pub fn random_tpd(
    n: usize,
    seed: u64,
    exponents: (i64, i64),
    margin: Rational,
) -> Result<SMatrix<Rational>> {
    let (lo, hi) = exponents;
    if n == 0 || lo > hi || margin <= Rational::from_integer(0) {
        return Err(Error::BadParams(format!(
            "need n > 0, lo <= hi and margin > 0 (n = {n}, range {lo}..={hi}, margin {margin})"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d: Vec<i64> = (0..n).map(|_| rng.gen_range(lo..=hi)).collect();
    let mut a = SMatrix::zeros(n, n);
    for i in 0..n {
        a[(i, i)] = SScalar::p(d[i]);
        for j in i + 1..n {
            if rng.gen_ratio(1, 8) {
                continue;
            }
            let top = ((Rational::from_integer(d[i] + d[j]) - margin) / 2).floor().to_integer();
            let e = rng.gen_range(top - (hi - lo) - 2..=top);
            let x = if rng.gen_bool(0.5) { SScalar::p(e) } else { SScalar::n(e) };
            a[(i, j)] = x;
            a[(j, i)] = x;
        }
    }
    Ok(a)
}

/// `C Cᵀ` with `C` uniform on `(−1, 1)`.
pub fn random_gram_pd(n: usize, seed: u64) -> Result<RealSymMatrix> {
    if n == 0 {
        return Err(Error::BadParams("n must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let c: Vec<Vec<f64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect()).collect();
    Ok(RealSymMatrix::from_upper(n, |i, j| c[i].iter().zip(&c[j]).map(|(x, y)| x * y).sum()))
}

/// Random symmetric matrix with entries uniform on `(−1, 1)`.
pub fn random_symmetric(n: usize, seed: u64) -> RealSymMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    RealSymMatrix::from_upper(n, |_, _| rng.gen_range(-1.0..1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::is_tpd;

    #[test]
    fn generated_matrices_are_tpd() {
        for seed in 0..200 {
            let a = random_tpd(4, seed, (0, 5), Rational::from_integer(1)).unwrap();
            assert!(is_tpd(&a).unwrap(), "seed {seed}");
        }
    }

    #[test]
    fn generators_are_deterministic() {
        let one = Rational::from_integer(1);
        assert_eq!(random_tpd(5, 7, (0, 5), one).unwrap(), random_tpd(5, 7, (0, 5), one).unwrap());
        assert_eq!(random_gram_pd(6, 3).unwrap(), random_gram_pd(6, 3).unwrap());
        assert!(random_tpd(0, 1, (0, 5), one).is_err());
        assert!(random_tpd(3, 1, (0, 5), Rational::from_integer(0)).is_err());
    }
}
