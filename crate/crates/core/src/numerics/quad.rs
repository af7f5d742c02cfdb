//! Adaptive double-exponential (tanh-sinh) quadrature.
//!
//! Half-infinite ranges are mapped onto `[0, 1)` with `x = a + s/(1-s)`.
//! Every node carries its exact distance to both original endpoints, so
//! integrable endpoint singularities such as `x^(-1/2)` at 0 are sampled
//! without cancellation. When a piece does not settle by the deepest level
//! it is bisected, up to `max_subdivisions` times.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
}

impl QuadratureSpec {
    pub fn new(abs_tol: f64, rel_tol: f64, max_subdivisions: usize) -> Result<Self> {
        if !(abs_tol > 0.0) || !(rel_tol >= 0.0) || max_subdivisions < 1 {
            return Err(Error::Domain(format!(
                "quadrature spec needs abs_tol > 0, rel_tol >= 0, max_subdivisions >= 1 \
                 (got {abs_tol}, {rel_tol}, {max_subdivisions})"
            )));
        }
        Ok(Self { abs_tol, rel_tol, max_subdivisions })
    }

    /// Both tolerances set to `tol`.
    pub fn with_tol(tol: f64) -> Self {
        Self { abs_tol: tol, rel_tol: tol, ..Self::default() }
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self { abs_tol: 1e-10, rel_tol: 1e-10, max_subdivisions: 2000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub error: f64,
}

#[derive(Clone, Copy)]
enum Map {
    Finite {
        a: f64,
        b: f64,
    },
    /// `[a, ∞)` over `s ∈ [0, 1)`.
    Upper {
        a: f64,
    },
    /// `(-∞, b]` over `s ∈ [0, 1)`.
    Lower {
        b: f64,
    },
}

impl Map {
    fn span(self) -> (f64, f64) {
        match self {
            Map::Finite { a, b } => (a, b),
            _ => (0.0, 1.0),
        }
    }

    /// Point and Jacobian given the distances to the two ends of the span.
    #[inline]
    fn eval(self, dl: f64, dr: f64) -> Option<(f64, f64)> {
        match self {
            Map::Finite { a, b } => Some((if dl <= dr { a + dl } else { b - dr }, 1.0)),
            Map::Upper { a } if dr > 0.0 => Some((a + dl / dr, 1.0 / (dr * dr))),
            Map::Lower { b } if dr > 0.0 => Some((b - dl / dr, 1.0 / (dr * dr))),
            _ => None,
        }
    }
}

const MAX_LEVEL: u32 = 8;
const MIN_LEVEL: u32 = 3;
const T_MAX: f64 = 6.8;

/// Integrate `f` over `(a, b)`; either end may be infinite.
pub fn adaptive_quad<F>(f: F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<QuadResult>
where
    F: Fn(f64) -> f64,
{
    if a.is_nan() || b.is_nan() {
        return Err(Error::Domain("quadrature bounds must not be NaN".into()));
    }
    if a == b {
        return Ok(QuadResult { value: 0.0, error: 0.0 });
    }
    if a > b {
        return adaptive_quad(f, b, a, spec).map(|r| QuadResult { value: -r.value, error: r.error });
    }
    match (a.is_finite(), b.is_finite()) {
        (true, true) => integrate_mapped(&f, Map::Finite { a, b }, spec),
        (true, false) => integrate_mapped(&f, Map::Upper { a }, spec),
        (false, true) => integrate_mapped(&f, Map::Lower { b }, spec),
        (false, false) => {
            let half = QuadratureSpec { abs_tol: 0.5 * spec.abs_tol, ..*spec };
            let lo = integrate_mapped(&f, Map::Lower { b: 0.0 }, &half)?;
            let hi = integrate_mapped(&f, Map::Upper { a: 0.0 }, &half)?;
            Ok(QuadResult { value: lo.value + hi.value, error: lo.error + hi.error })
        }
    }
}

struct Piece {
    p: f64,
    q: f64,
    target: f64,
}

fn integrate_mapped<F>(f: &F, map: Map, spec: &QuadratureSpec) -> Result<QuadResult>
where
    F: Fn(f64) -> f64,
{
    let (lo, hi) = map.span();
    let mut stack = vec![Piece { p: lo, q: hi, target: spec.abs_tol }];
    let mut first = true;
    let mut value = 0.0f64;
    let mut error = 0.0f64;
    let mut splits = 0usize;
    let mut exhausted = false;

    while let Some(piece) = stack.pop() {
        let target = if first {
            piece.target
        } else {
            piece.target.max(spec.rel_tol * value.abs() * (piece.q - piece.p) / (hi - lo))
        };
        let est = tanh_sinh(f, map, lo, hi, piece.p, piece.q, target, spec.rel_tol, first)?;
        first = false;
        if est.converged || exhausted {
            value += est.value;
            error += est.error;
            continue;
        }
        splits += 1;
        if splits > spec.max_subdivisions {
            exhausted = true;
            value += est.value;
            error += est.error;
            continue;
        }
        let mid = 0.5 * (piece.p + piece.q);
        // Relative targets are recomputed from the running total.
        let child = 0.5 * piece.target;
        stack.push(Piece { p: mid, q: piece.q, target: child });
        stack.push(Piece { p: piece.p, q: mid, target: child });
    }

    if exhausted || !value.is_finite() {
        return Err(Error::Convergence { estimate: value, error });
    }
    Ok(QuadResult { value, error })
}

struct Estimate {
    value: f64,
    error: f64,
    converged: bool,
}

#[allow(clippy::too_many_arguments)]
fn tanh_sinh<F>(
    f: &F,
    map: Map,
    lo: f64,
    hi: f64,
    p: f64,
    q: f64,
    abs_target: f64,
    rel_tol: f64,
    whole: bool,
) -> Result<Estimate>
where
    F: Fn(f64) -> f64,
{
    let half = 0.5 * (q - p);
    let left_gap = p - lo;
    let right_gap = hi - q;

    // Value of f·jacobian at the node whose distances to p and q are given.
    let sample = |dp: f64, dq: f64| -> Result<f64> {
        let dl = left_gap + dp;
        let dr = right_gap + dq;
        match map.eval(dl, dr) {
            Some((x, jac)) => {
                let y = f(x);
                if y == 0.0 {
                    return Ok(0.0);
                }
                let v = y * jac;
                if !v.is_finite() {
                    return Err(Error::NonFinite(x));
                }
                Ok(v)
            }
            None => Ok(0.0),
        }
    };

    // Sum over nodes ±t_k: returns the weighted contribution.
    let pair = |t: f64| -> Result<Option<f64>> {
        let u = FRAC_PI_2 * t.sinh();
        let cu = u.cosh();
        let w = FRAC_PI_2 * t.cosh() / (cu * cu);
        // distance of the outer node to its endpoint, i.e. half·(1 - tanh u)
        let delta = half * (-u).exp() / cu;
        if !(delta > f64::MIN_POSITIVE) || w == 0.0 {
            return Ok(None);
        }
        let inner = 2.0 * half - delta;
        let right = sample(inner, delta)?;
        let left = sample(delta, inner)?;
        Ok(Some(w * (left + right)))
    };

    let mut sum = FRAC_PI_2 * sample(half, half)?;
    let mut h = 1.0;
    let mut step = 1.0;
    let mut level = 0u32;
    let mut prev;
    let add_nodes = |start: f64, step: f64, sum: &mut f64| -> Result<()> {
        let mut t = start;
        let mut small = 0;
        while t <= T_MAX {
            match pair(t)? {
                None => break,
                Some(term) => {
                    *sum += term;
                    if term.abs() <= 1e-22 * sum.abs() {
                        small += 1;
                        if small >= 2 {
                            break;
                        }
                    } else {
                        small = 0;
                    }
                }
            }
            t += step;
        }
        Ok(())
    };
    add_nodes(1.0, 1.0, &mut sum)?;
    let mut estimate = h * half * sum;

    loop {
        prev = estimate;
        level += 1;
        h *= 0.5;
        // odd multiples of the new step
        add_nodes(h, step, &mut sum)?;
        step = h;
        estimate = h * half * sum;
        let err = (estimate - prev).abs();
        let tol = abs_target.max(rel_tol * estimate.abs());
        if level >= MIN_LEVEL && err <= tol {
            return Ok(Estimate { value: estimate, error: err, converged: true });
        }
        let deepest = if whole { MAX_LEVEL } else { MAX_LEVEL - 2 };
        if level >= deepest {
            return Ok(Estimate { value: estimate, error: err, converged: false });
        }
    }
}
