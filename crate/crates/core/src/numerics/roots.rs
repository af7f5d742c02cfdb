use crate::error::{Error, Result};

/// Brent's method on a sign-changing bracket.
///
/// Returns once the bracket around the root is no wider than `tol` (or an
/// exact zero is hit). A bracket without a sign change is an error.
pub fn find_root<F>(f: F, lo: f64, hi: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if !(tol > 0.0) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::Domain(format!("find_root needs finite bounds and tol > 0 (tol = {tol})")));
    }
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (f(a), f(b));
    if fa.is_nan() || fb.is_nan() {
        return Err(Error::NonFinite(if fa.is_nan() { a } else { b }));
    }
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::Bracket { lo, hi, f_lo: fa, f_hi: fb });
    }

    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = d;
    for _ in 0..200 {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let half_width = 0.5 * (c - b);
        let slack = 2.0 * f64::EPSILON * b.abs();
        if half_width.abs() <= (0.5 * tol).max(slack) || fb == 0.0 {
            return Ok(b);
        }
        if e.abs() >= (0.5 * tol).max(slack) && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * half_width * s;
                q = 1.0 - s;
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * half_width * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            } else {
                p = -p;
            }
            let accept = 2.0 * p < (3.0 * half_width * q - (0.5 * tol * q).abs()).min((e * q).abs());
            if accept {
                e = d;
                d = p / q;
            } else {
                d = half_width;
                e = d;
            }
        } else {
            d = half_width;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > 0.5 * tol { d } else { (0.5 * tol).copysign(half_width) };
        fb = f(b);
        if fb.is_nan() {
            return Err(Error::NonFinite(b));
        }
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::normal::SQRT_2PI;

    #[test]
    fn sqrt_two() {
        let r = find_root(|x| x * x - 2.0, 1.0, 2.0, 1e-12).unwrap();
        assert!((r - 2f64.sqrt()).abs() <= 1e-12);
    }

    #[test]
    fn gaussian_tail_threshold_matches_bisection() {
        let g = |t: f64| SQRT_2PI * t * (-0.5 * t * t).exp() - 1.0;
        let (mut lo, mut hi) = (1.5f64, 1.8f64);
        for _ in 0..100 {
            let mid = 0.5 * (lo + hi);
            if g(mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let r = find_root(g, 1.5, 1.8, 1e-12).unwrap();
        assert!((r - 0.5 * (lo + hi)).abs() < 1e-6);
        assert!((r - 1.704_097_53).abs() < 1e-8);
    }

    #[test]
    fn orlicz_gaussian_constant() {
        let r = find_root(|k| (1.0 - 2.0 / (k * k)).powf(-0.5) - 2.0, 1.5, 2.0, 1e-12).unwrap();
        assert!((r - (8.0f64 / 3.0).sqrt()).abs() < 1e-10);
        assert!((r - 1.632993).abs() < 1e-6);
    }

    #[test]
    fn no_sign_change() {
        assert!(matches!(find_root(|x| x * x + 1.0, -1.0, 1.0, 1e-10), Err(Error::Bracket { .. })));
    }
}
