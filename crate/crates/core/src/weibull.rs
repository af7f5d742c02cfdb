//! Two-parameter Weibull law `λX^(1/α)`, `X ~ Exp(1)`, and the tail
//! comparison between α-normal and Weibull variables.

use crate::alpha_normal::AlphaNormal;
use crate::error::{domain, Result};
use crate::numerics::gamma::EULER_GAMMA;
use crate::numerics::quad::{adaptive_quad, QuadratureSpec};
use crate::numerics::rng::{sample_std_exponential, RngStream};
use crate::numerics::roots::find_root;
use crate::parallel::{sample_vec, Execution};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Weibull {
    shape: f64,
    scale: f64,
}

fn check_nonnegative(t: f64) -> Result<()> {
    if !(t >= 0.0) {
        return Err(domain(format!("Weibull argument must be >= 0, got {t}")));
    }
    Ok(())
}

impl Weibull {
    pub fn new(shape: f64, scale: f64) -> Result<Self> {
        if !(shape > 0.0 && shape.is_finite()) || !(scale > 0.0 && scale.is_finite()) {
            return Err(domain(format!("Weibull needs shape, scale > 0 (got {shape}, {scale})")));
        }
        Ok(Self { shape, scale })
    }

    pub fn shape(&self) -> f64 {
        self.shape
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// `P(W ≥ t) = exp(-(t/λ)^α)`.
    pub fn survival(&self, t: f64) -> Result<f64> {
        check_nonnegative(t)?;
        Ok((-(t / self.scale).powf(self.shape)).exp())
    }

    pub fn cdf(&self, t: f64) -> Result<f64> {
        check_nonnegative(t)?;
        Ok(-(-(t / self.scale).powf(self.shape)).exp_m1())
    }

    /// Density; at `t = 0` this is the right limit (`+∞` when shape < 1).
    pub fn pdf(&self, t: f64) -> Result<f64> {
        check_nonnegative(t)?;
        let (a, l) = (self.shape, self.scale);
        if t == 0.0 {
            return Ok(if a < 1.0 {
                f64::INFINITY
            } else if a == 1.0 {
                1.0 / l
            } else {
                0.0
            });
        }
        let z = t / l;
        let decay = (-z.powf(a)).exp();
        if decay == 0.0 {
            return Ok(0.0);
        }
        Ok(a / l * z.powf(a - 1.0) * decay)
    }

    fn ln_pdf(&self, t: f64) -> f64 {
        let (a, l) = (self.shape, self.scale);
        let z = t / l;
        (a / l).ln() + (a - 1.0) * z.ln() - z.powf(a)
    }

    pub fn sample(&self, rng: &mut RngStream) -> f64 {
        self.scale * sample_std_exponential(rng).powf(1.0 / self.shape)
    }

    pub fn sample_n(&self, n: usize, rng: &mut RngStream, exec: Execution) -> Vec<f64> {
        sample_vec(n, rng, exec, |s| self.sample(s))
    }

    /// `γ(1 - 1/α) + ln(λ/α) + 1`.
    pub fn entropy(&self) -> f64 {
        EULER_GAMMA * (1.0 - 1.0 / self.shape) + (self.scale / self.shape).ln() + 1.0
    }

    /// `-∫ f ln f` by quadrature.
    pub fn entropy_numeric(&self) -> Result<f64> {
        let f = |t: f64| {
            if t == 0.0 {
                return 0.0;
            }
            let lp = self.ln_pdf(t);
            if lp == f64::NEG_INFINITY {
                0.0
            } else {
                -lp.exp() * lp
            }
        };
        Ok(adaptive_quad(f, 0.0, f64::INFINITY, &QuadratureSpec::with_tol(1e-13))?.value)
    }

    /// `∫₀^∞ f` by quadrature.
    pub fn total_mass(&self) -> Result<f64> {
        let f = |t: f64| if t == 0.0 { 0.0 } else { self.pdf(t).unwrap_or(f64::NAN) };
        Ok(adaptive_quad(f, 0.0, f64::INFINITY, &QuadratureSpec::with_tol(1e-13))?.value)
    }

    /// `‖W‖_ψα = λ 2^(1/α)`.
    pub fn psi_norm(&self) -> f64 {
        self.scale * 2f64.powf(1.0 / self.shape)
    }

    /// `E exp((W/K)^α) = 1/(1 - (λ/K)^α)`, `+∞` for `K ≤ λ`.
    pub fn orlicz_functional_closed(&self, k: f64) -> f64 {
        let r = (self.scale / k).powf(self.shape);
        if r >= 1.0 {
            f64::INFINITY
        } else {
            1.0 / (1.0 - r)
        }
    }

    /// `E exp((W/K)^α)` by quadrature over the density.
    pub fn orlicz_functional(&self, k: f64) -> Result<f64> {
        if !(k > 0.0) {
            return Err(domain(format!("Orlicz functional needs K > 0, got {k}")));
        }
        let a = self.shape;
        if k <= self.scale {
            return Ok(f64::INFINITY);
        }
        let rate = self.scale.powf(-a) - k.powf(-a);
        let stretch = rate.powf(-1.0 / a);
        let f = |y: f64| {
            if y == 0.0 {
                return 0.0;
            }
            let t = stretch * y;
            (self.ln_pdf(t) + (t / k).powf(a)).exp() * stretch
        };
        Ok(adaptive_quad(f, 0.0, f64::INFINITY, &QuadratureSpec::with_tol(1e-13))?.value)
    }

    /// Root of `E exp((W/K)^α) = 2` found numerically.
    pub fn psi_norm_numeric(&self) -> Result<f64> {
        let lo = self.scale * 1.25f64.powf(1.0 / self.shape);
        let hi = self.scale * 100f64.powf(1.0 / self.shape);
        let g = |k: f64| self.orlicz_functional(k).map(|v| v - 2.0).unwrap_or(f64::NAN);
        find_root(g, lo, hi, 1e-12 * lo)
    }
}

/// Pointwise comparison of the α-normal two-sided tail with the Weibull
/// tails that sandwich it.
#[derive(Debug, Clone, PartialEq)]
pub struct MajorizationReport {
    pub alpha: f64,
    pub t_grid: Vec<f64>,
    /// `P(|G_α| ≥ t)`.
    pub tail: Vec<f64>,
    /// Survival of Weibull(α, 2^(1/α)).
    pub upper_bound: Vec<f64>,
    /// Survival of Weibull(α, 1).
    pub lower_bound: Vec<f64>,
    pub upper_ok: Vec<bool>,
    /// `None` below the threshold, where no ordering is claimed.
    pub lower_ok: Vec<Option<bool>>,
    pub threshold: f64,
}

impl MajorizationReport {
    pub fn all_upper_ok(&self) -> bool {
        self.upper_ok.iter().all(|&b| b)
    }

    pub fn all_lower_ok(&self) -> bool {
        self.lower_ok.iter().all(|b| b.unwrap_or(true))
    }
}

pub fn majorization_report(alpha: f64, t_grid: &[f64]) -> Result<MajorizationReport> {
    let g = AlphaNormal::standard(alpha)?;
    let upper = Weibull::new(alpha, 2f64.powf(1.0 / alpha))?;
    let lower = Weibull::new(alpha, 1.0)?;
    let threshold = g.tail_lower_threshold()?;
    let mut report = MajorizationReport {
        alpha,
        t_grid: t_grid.to_vec(),
        tail: Vec::with_capacity(t_grid.len()),
        upper_bound: Vec::with_capacity(t_grid.len()),
        lower_bound: Vec::with_capacity(t_grid.len()),
        upper_ok: Vec::with_capacity(t_grid.len()),
        lower_ok: Vec::with_capacity(t_grid.len()),
        threshold,
    };
    for &t in t_grid {
        let up = upper.survival(t)?;
        let lo = lower.survival(t)?;
        let tail = g.two_sided_tail(t);
        report.tail.push(tail);
        report.upper_bound.push(up);
        report.lower_bound.push(lo);
        report.upper_ok.push(tail <= up);
        report.lower_ok.push((t >= threshold).then_some(tail >= lo));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stats::{ks_critical, ks_statistic, mean_and_se};
    use std::f64::consts::LN_2;

    fn w(a: f64, l: f64) -> Weibull {
        Weibull::new(a, l).unwrap()
    }

    #[test]
    fn survival_values() {
        assert!((w(1.0, 1.0).survival(1.0).unwrap() - (-1f64).exp()).abs() < 1e-16);
        assert_eq!(w(3.0, 2.0).survival(0.0).unwrap(), 1.0);
        assert!((w(2.0, 2f64.sqrt()).survival(1.0).unwrap() - (-0.5f64).exp()).abs() < 1e-15);
        assert!(w(1.0, 1.0).survival(-0.1).is_err());
        let d = w(1.7, 0.6);
        let mut prev = 1.0;
        for i in 1..50 {
            let t = 0.05 * i as f64;
            let s = d.survival(t).unwrap();
            assert!(s < prev);
            assert!((s + d.cdf(t).unwrap() - 1.0).abs() < 1e-15);
            prev = s;
        }
    }

    #[test]
    fn pdf_and_cdf() {
        assert_eq!(w(2.0, 3.0).cdf(0.0).unwrap(), 0.0);
        for &t in &[0.1, 1.0, 4.0] {
            assert!((w(1.0, 1.0).pdf(t).unwrap() - (-t).exp()).abs() < 1e-15);
        }
        assert!(w(1.0, 1.0).pdf(-1.0).is_err());
        for &(a, l) in &[(0.5, 1.0), (2.0, 1.0), (3.0, 2.0)] {
            assert!((w(a, l).total_mass().unwrap() - 1.0).abs() < 1e-8);
        }
    }

    #[test]
    fn sampling() {
        let n = 1_000_000;
        let xs = w(1.0, 1.0).sample_n(n, &mut RngStream::new(4, 0), Execution::default());
        let (m, se) = mean_and_se(&xs);
        assert!((m - 1.0).abs() < 4.0 * se);
        assert!(xs.iter().all(|&x| x >= 0.0));
        let d = w(2.0, 1.0);
        let xs = d.sample_n(100_000, &mut RngStream::new(4, 1), Execution::default());
        assert!(ks_statistic(&xs, |x| d.cdf(x).unwrap()) < ks_critical(100_000, 0.01));
    }

    #[test]
    fn entropy() {
        assert!((w(1.0, 1.0).entropy() - 1.0).abs() < 1e-15);
        assert!((w(2.0, 1.0).entropy() - (EULER_GAMMA / 2.0 + 1.0 - LN_2)).abs() < 1e-15);
        assert!((w(2.0, 1.0).entropy() - 0.595_461).abs() < 1e-6);
        for &(a, l) in &[(0.5, 1.0), (1.0, 1.0), (2.0, 1.0), (3.0, 2.0)] {
            assert!((w(a, l).entropy_numeric().unwrap() - w(a, l).entropy()).abs() < 1e-6);
        }
    }

    #[test]
    fn psi_norm() {
        assert_eq!(w(1.0, 1.0).psi_norm(), 2.0);
        assert!((w(2.0, 1.0).psi_norm() - 2f64.sqrt()).abs() < 1e-15);
        let d = w(3.0, 2.0);
        assert!((d.psi_norm_numeric().unwrap() - 2.0 * 2f64.powf(1.0 / 3.0)).abs() < 1e-6);
        assert!((w(0.7, 1.3).psi_norm_numeric().unwrap() - w(0.7, 1.3).psi_norm()).abs() < 1e-6);
        for &(a, l) in &[(0.5, 1.0), (1.0, 3.0), (4.0, 0.2)] {
            let d = w(a, l);
            assert!((d.orlicz_functional_closed(d.psi_norm()) - 2.0).abs() < 1e-9);
        }
        assert!((d.orlicz_functional(3.0).unwrap() - d.orlicz_functional_closed(3.0)).abs() < 1e-9);
    }

    #[test]
    fn majorization() {
        let grid: Vec<f64> = (0..=20).map(|i| 0.25 * i as f64).collect();
        for &a in &[0.5, 1.0, 2.0, 3.0, 5.0] {
            let r = majorization_report(a, &grid).unwrap();
            assert!(r.all_upper_ok(), "alpha {a}");
            assert!(r.all_lower_ok(), "alpha {a}");
            assert!(r.threshold > 0.0);
            assert_eq!(r.t_grid.len(), r.upper_ok.len());
        }
        let r = majorization_report(2.0, &[0.0]).unwrap();
        assert_eq!(r.tail[0], 1.0);
        assert_eq!(r.upper_bound[0], 1.0);
        assert!(majorization_report(1.0, &[-1.0]).is_err());
    }
}
