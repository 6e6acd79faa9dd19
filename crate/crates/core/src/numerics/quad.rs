//! Adaptive Gauss-Kronrod quadrature with substitutions for infinite limits.

use crate::error::{Error, Result};

/// 15-point Kronrod nodes on [0, 1] (positive half; even indices are
/// Kronrod-only, odd indices and the center belong to the embedded G7 rule).
const XGK: [f64; 8] = [
    0.991_455_371_120_812_7,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_94,
    0.417_959_183_673_469_4,
];

/// Tolerances and subdivision budget for the adaptive scheme.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
}

impl QuadratureSpec {
    pub fn new(abs_tol: f64, rel_tol: f64, max_subdivisions: usize) -> Result<Self> {
        if !(abs_tol > 0.0) || !(rel_tol > 0.0) {
            return Err(Error::Domain(
                "quadrature tolerances must be strictly positive".into(),
            ));
        }
        if max_subdivisions < 1 {
            return Err(Error::Domain("max_subdivisions must be >= 1".into()));
        }
        Ok(Self {
            abs_tol,
            rel_tol,
            max_subdivisions,
        })
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            rel_tol: 1e-10,
            max_subdivisions: 400,
        }
    }
}

/// Which half-line to integrate over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// (-inf, cutoff]
    Lower,
    /// [cutoff, +inf)
    Upper,
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut scaled = err.abs();
    if res_asc != 0.0 && scaled != 0.0 {
        let scale = (200.0 * scaled / res_asc).powf(1.5);
        scaled = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        let min_err = 50.0 * f64::EPSILON * res_abs;
        if min_err > scaled {
            scaled = min_err;
        }
    }
    scaled
}

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<Segment> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    if !fc.is_finite() {
        return Err(Error::Numeric(format!(
            "integrand evaluated to a non-finite value at {center}"
        )));
    }
    let mut resk = WGK[7] * fc;
    let mut resg = WG[3] * fc;
    let mut res_abs = resk.abs();
    let mut fv = [0.0f64; 15];
    fv[7] = fc;
    for i in 0..7 {
        let x = half * XGK[i];
        let f1 = f(center - x);
        let f2 = f(center + x);
        if !f1.is_finite() || !f2.is_finite() {
            return Err(Error::Numeric(format!(
                "integrand evaluated to a non-finite value near {center}"
            )));
        }
        fv[i] = f1;
        fv[14 - i] = f2;
        resk += WGK[i] * (f1 + f2);
        res_abs += WGK[i] * (f1.abs() + f2.abs());
        if i % 2 == 1 {
            resg += WG[i / 2] * (f1 + f2);
        }
    }
    let mean = resk * 0.5;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for i in 0..7 {
        res_asc += WGK[i] * ((fv[i] - mean).abs() + (fv[14 - i] - mean).abs());
    }
    let value = resk * half;
    let err = rescale_error((resk - resg) * half, res_abs * half.abs(), res_asc * half.abs());
    Ok(Segment {
        a,
        b,
        value,
        error: err,
    })
}

/// Adaptive integral of `f` over the finite interval [a, b].
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    let (lo, hi, sign) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };
    let mut segments = vec![gk15(&f, lo, hi)?];
    for _ in 0..spec.max_subdivisions {
        let total: f64 = segments.iter().map(|s| s.value).sum();
        let err: f64 = segments.iter().map(|s| s.error).sum();
        if !total.is_finite() {
            return Err(Error::Numeric("integral accumulated to a non-finite value".into()));
        }
        if err <= spec.abs_tol.max(spec.rel_tol * total.abs()) {
            return Ok(sign * total);
        }
        let worst = segments
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.error.partial_cmp(&b.1.error).unwrap())
            .map(|(i, _)| i)
            .unwrap();
        let seg = segments.swap_remove(worst);
        let mid = 0.5 * (seg.a + seg.b);
        if mid <= seg.a || mid >= seg.b {
            // interval at machine resolution, keep its estimate
            segments.push(seg);
            let total: f64 = segments.iter().map(|s| s.value).sum();
            return Ok(sign * total);
        }
        segments.push(gk15(&f, seg.a, mid)?);
        segments.push(gk15(&f, mid, seg.b)?);
    }
    let total: f64 = segments.iter().map(|s| s.value).sum();
    let err: f64 = segments.iter().map(|s| s.error).sum();
    if err <= spec.abs_tol.max(spec.rel_tol * total.abs()) {
        return Ok(sign * total);
    }
    Err(Error::Quadrature {
        estimate: sign * total,
        error_bound: err,
    })
}

/// Adaptive integral over the whole real line via r = t / (1 - t^2).
pub fn integrate_real_line<F: Fn(f64) -> f64>(f: F, spec: &QuadratureSpec) -> Result<f64> {
    let g = |t: f64| {
        let d = 1.0 - t * t;
        let r = t / d;
        f(r) * (1.0 + t * t) / (d * d)
    };
    integrate(g, -1.0, 1.0, spec)
}

/// Adaptive integral of `f` over a half-line with the given finite or
/// infinite cutoff. Diverging integrands surface as a numeric error
/// carrying the best estimate.
pub fn integrate_half_line<F: Fn(f64) -> f64>(
    f: F,
    side: Side,
    cutoff: f64,
    spec: &QuadratureSpec,
) -> Result<f64> {
    match side {
        Side::Lower => {
            if cutoff == f64::NEG_INFINITY {
                return Ok(0.0);
            }
            if cutoff == f64::INFINITY {
                return integrate_real_line(f, spec);
            }
            // r = cutoff - (1 - t)/t maps (0, 1] onto (-inf, cutoff]
            let g = |t: f64| f(cutoff - (1.0 - t) / t) / (t * t);
            integrate(g, 0.0, 1.0, spec)
        }
        Side::Upper => {
            if cutoff == f64::INFINITY {
                return Ok(0.0);
            }
            if cutoff == f64::NEG_INFINITY {
                return integrate_real_line(f, spec);
            }
            let g = |t: f64| f(cutoff + (1.0 - t) / t) / (t * t);
            integrate(g, 0.0, 1.0, spec)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::special::std_normal;
    use approx::assert_relative_eq;

    fn phi(x: f64) -> f64 {
        std_normal(x).0
    }

    #[test]
    fn half_normal_mass() {
        let spec = QuadratureSpec::default();
        let v = integrate_half_line(phi, Side::Lower, 0.0, &spec).unwrap();
        assert_relative_eq!(v, 0.5, max_relative = 1e-12);
    }

    #[test]
    fn divergent_integrand_is_an_error() {
        let spec = QuadratureSpec::default();
        let r = integrate_half_line(|r: f64| (-r).exp(), Side::Lower, 0.0, &spec);
        assert!(r.is_err());
    }

    #[test]
    fn gaussian_full_line() {
        let spec = QuadratureSpec::default();
        let v = integrate_half_line(|r: f64| (-r * r).exp(), Side::Lower, f64::INFINITY, &spec)
            .unwrap();
        assert_relative_eq!(v, std::f64::consts::PI.sqrt(), max_relative = 1e-12);
    }

    #[test]
    fn upper_half_line_matches_complement() {
        let spec = QuadratureSpec::default();
        let v = integrate_half_line(phi, Side::Upper, 1.0, &spec).unwrap();
        let (_, cdf) = std_normal(1.0);
        assert_relative_eq!(v, 1.0 - cdf, max_relative = 1e-10);
    }

    #[test]
    fn finite_interval_polynomial_is_exact() {
        let spec = QuadratureSpec::default();
        let v = integrate(|x| x * x * x - 2.0 * x + 1.0, -1.0, 2.0, &spec).unwrap();
        // antiderivative x^4/4 - x^2 + x
        assert_relative_eq!(v, (4.0 - 4.0 + 2.0) - (0.25 - 1.0 - 1.0), max_relative = 1e-14);
    }

    #[test]
    fn half_line_matches_normal_cdf_at_random_cutoffs() {
        let spec = QuadratureSpec::default();
        for &c in &[-3.2, -1.0, -0.1, 0.4, 1.7, 4.5] {
            let v = integrate_half_line(phi, Side::Lower, c, &spec).unwrap();
            let (_, cdf) = std_normal(c);
            assert_relative_eq!(v, cdf, max_relative = 1e-9, epsilon = 1e-12);
        }
    }

    #[test]
    fn spec_validation() {
        assert!(QuadratureSpec::new(0.0, 1e-10, 10).is_err());
        assert!(QuadratureSpec::new(1e-10, -1.0, 10).is_err());
        assert!(QuadratureSpec::new(1e-10, 1e-10, 0).is_err());
        assert!(QuadratureSpec::new(1e-10, 1e-10, 1).is_ok());
    }
}
