//! The α → ∞ limit: Rademacher margins glued by a Gauss copula.

use crate::error::{Error, Result};
use crate::multivariate::{gauss_copula, CorrelationMatrix, McConfig};
use crate::numerics::bivariate::bivariate_normal_cdf;
use crate::numerics::mvn::McEstimate;
use crate::numerics::normal::std_normal_cdf;
use crate::numerics::rng::RngStream;

/// Largest dimension for which the PMF is enumerated.
pub const MAX_PMF_DIM: usize = 20;

/// Right-continuous step CDF of the fair ±1 law.
pub fn rademacher_cdf(x: f64) -> f64 {
    if x < -1.0 {
        0.0
    } else if x < 1.0 {
        0.5
    } else {
        1.0
    }
}

/// A point of `{-1, 1}^d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignVector(Vec<i8>);

impl SignVector {
    pub fn new(coords: Vec<i8>) -> Result<Self> {
        if let Some(c) = coords.iter().find(|c| c.abs() != 1) {
            return Err(Error::Domain(format!("sign vector coordinate {c} is not ±1")));
        }
        Ok(Self(coords))
    }

    /// Bit `i` of `mask` set means coordinate `i` is `+1`.
    pub fn from_mask(dim: usize, mask: u64) -> Self {
        Self((0..dim).map(|i| if mask >> i & 1 == 1 { 1 } else { -1 }).collect())
    }

    pub fn mask(&self) -> u64 {
        self.0.iter().enumerate().filter(|(_, &c)| c == 1).fold(0, |m, (i, _)| m | 1 << i)
    }

    pub fn coords(&self) -> &[i8] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(|&c| c as f64).collect()
    }

    pub fn negate(&self) -> Self {
        Self(self.0.iter().map(|c| -c).collect())
    }

    /// All `2^d` sign vectors, first coordinate varying fastest.
    pub fn all(dim: usize) -> impl Iterator<Item = SignVector> {
        (0..1u64 << dim).map(move |m| Self::from_mask(dim, m))
    }
}

/// Limiting law `C_Σ(Φ_∞(x₁), …, Φ_∞(x_d))`.
#[derive(Debug, Clone, PartialEq)]
pub struct MetaRademacher {
    sigma: CorrelationMatrix,
}

impl MetaRademacher {
    pub fn new(sigma: CorrelationMatrix) -> Self {
        Self { sigma }
    }

    pub fn sigma_matrix(&self) -> &CorrelationMatrix {
        &self.sigma
    }

    pub fn dim(&self) -> usize {
        self.sigma.dim()
    }

    pub fn limit_cdf(&self, x: &[f64], mc: &McConfig) -> Result<McEstimate> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: x.len() });
        }
        let u: Vec<f64> = x.iter().map(|&v| rademacher_cdf(v)).collect();
        gauss_copula(&self.sigma, &u, mc)
    }

    /// Point mass at `x` by inclusion–exclusion over the sign vectors below
    /// `x` in the componentwise order.
    ///
    /// Each corner `y` is evaluated on its own substream keyed by `y`, so
    /// the masses of all `2^d` points telescope to exactly 1.
    pub fn pmf(&self, x: &SignVector, mc: &McConfig) -> Result<McEstimate> {
        let d = self.dim();
        if x.dim() != d {
            return Err(Error::DimensionMismatch { expected: d, got: x.dim() });
        }
        if d > MAX_PMF_DIM {
            return Err(Error::Resource(format!(
                "pmf enumerates 2^{d} corners; at most d = {MAX_PMF_DIM} is supported"
            )));
        }
        let top = x.mask();
        let mut value = 0.0;
        let mut var = 0.0;
        // Walk the submasks of the positive coordinates of x.
        let mut sub = top;
        loop {
            let y = SignVector::from_mask(d, sub);
            let cfg = McConfig { stream_id: mc.stream_id.wrapping_add(sub), ..*mc };
            let f = self.limit_cdf(&y.to_f64(), &cfg)?;
            let flips = (top ^ sub).count_ones();
            value += if flips.is_multiple_of(2) { f.value } else { -f.value };
            var += f.std_error * f.std_error;
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & top;
        }
        Ok(McEstimate { value: value.clamp(0.0, 1.0), std_error: var.sqrt() })
    }

    /// Signs of a `N(0, Σ)` draw, zeros mapped to `-1`.
    pub fn sample(&self, rng: &mut RngStream) -> SignVector {
        let z = self.sigma.sample_normal(rng);
        SignVector(z.iter().map(|&v| if v > 0.0 { 1 } else { -1 }).collect())
    }
}

/// Closed form of the bivariate limiting PMF.
pub fn pmf_bivariate(rho: f64, x: i8, y: i8) -> Result<f64> {
    if !(rho.abs() < 1.0) {
        return Err(Error::Domain(format!("pmf_bivariate needs |rho| < 1, got {rho}")));
    }
    if x.abs() != 1 || y.abs() != 1 {
        return Err(Error::Domain(format!("pmf_bivariate needs ±1 arguments, got ({x}, {y})")));
    }
    let c = bivariate_normal_cdf(0.0, 0.0, rho);
    Ok(if x == y { c } else { 0.5 - c })
}

/// `|Φ_{σ,α}(x) - Φ_∞(x)|` for each α.
pub fn weak_convergence_check(sigma: f64, x: f64, alphas: &[f64]) -> Result<Vec<f64>> {
    if !(sigma > 0.0) || !sigma.is_finite() {
        return Err(Error::Domain(format!("sigma must be positive, got {sigma}")));
    }
    if x.abs() == 1.0 {
        return Err(Error::Domain(format!("x = {x} is a jump of the limiting CDF")));
    }
    if x.is_nan() {
        return Err(Error::Domain("x is NaN".into()));
    }
    if alphas.windows(2).any(|w| !(w[0] < w[1])) || alphas.iter().any(|a| !(*a > 0.0)) {
        return Err(Error::Domain("alphas must be positive and increasing".into()));
    }
    let limit = rademacher_cdf(x);
    Ok(alphas
        .iter()
        .map(|&a| {
            let z = x.signum() * x.abs().powf(0.5 * a) / sigma;
            let z = if x == 0.0 { 0.0 } else { z };
            (std_normal_cdf(z) - limit).abs()
        })
        .collect())
}
