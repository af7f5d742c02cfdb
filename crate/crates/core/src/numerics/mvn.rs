//! Monte Carlo multivariate normal CDF.
//!
//! Genz's separation-of-variables estimator: with `Σ = L Lᵀ`, each sample
//! draws the coordinates sequentially from their truncated conditionals and
//! scores the product of the conditional probabilities. The estimator is
//! unbiased and, unlike a raw indicator count, has zero variance when the
//! region is the whole space.

use crate::error::{Error, Result};
use crate::multivariate::CorrelationMatrix;
use crate::numerics::normal::{inv_phi, std_normal_cdf};
use crate::numerics::rng::RngStream;
use crate::parallel::{map_chunks, Execution};

/// Smallest accepted sample count.
pub const MIN_SAMPLES: usize = 1000;

/// A Monte Carlo value with its standard error. Deterministic evaluations
/// report `std_error = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub value: f64,
    pub std_error: f64,
}

impl McEstimate {
    pub fn exact(value: f64) -> Self {
        Self { value, std_error: 0.0 }
    }
}

/// `Φ_Σ(x)` estimated from `n` samples of `rng`.
pub fn mvn_cdf(x: &[f64], sigma: &CorrelationMatrix, rng: &mut RngStream, n: usize) -> Result<McEstimate> {
    mvn_cdf_with(x, sigma, rng, n, Execution::default())
}

pub fn mvn_cdf_with(
    x: &[f64],
    sigma: &CorrelationMatrix,
    rng: &mut RngStream,
    n: usize,
    exec: Execution,
) -> Result<McEstimate> {
    let d = sigma.dim();
    if x.len() != d {
        return Err(Error::DimensionMismatch { expected: d, got: x.len() });
    }
    if n < MIN_SAMPLES {
        return Err(Error::Domain(format!("mvn_cdf needs at least {MIN_SAMPLES} samples, got {n}")));
    }
    if x.iter().any(|v| v.is_nan()) {
        return Err(Error::Domain("mvn_cdf: NaN coordinate".into()));
    }
    if x.contains(&f64::NEG_INFINITY) {
        return Ok(McEstimate::exact(0.0));
    }
    let l = sigma.cholesky();

    let partials = map_chunks(n, rng, exec, |mut s, range| {
        let mut y = vec![0.0; d];
        let mut sum = 0.0;
        let mut sum_sq = 0.0;
        for _ in range {
            let f = sov_sample(x, l, d, &mut y, &mut s);
            sum += f;
            sum_sq += f * f;
        }
        (sum, sum_sq)
    });
    let (sum, sum_sq) = partials.into_iter().fold((0.0, 0.0), |(a, b), (c, e)| (a + c, b + e));
    let nf = n as f64;
    let mean = sum / nf;
    let var = ((sum_sq - nf * mean * mean) / (nf - 1.0)).max(0.0);
    Ok(McEstimate { value: mean, std_error: (var / nf).sqrt() })
}

fn sov_sample(x: &[f64], l: &[f64], d: usize, y: &mut [f64], rng: &mut RngStream) -> f64 {
    let mut f = 1.0;
    for i in 0..d {
        let shift: f64 = (0..i).map(|j| l[i * d + j] * y[j]).sum();
        let e = std_normal_cdf((x[i] - shift) / l[i * d + i]);
        f *= e;
        if f == 0.0 {
            return 0.0;
        }
        if i + 1 < d {
            y[i] = inv_phi(rng.uniform_open() * e);
        }
    }
    f
}
