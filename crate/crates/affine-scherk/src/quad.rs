//! Adaptive Gauss-Kronrod quadrature for complex-valued integrands on a
//! real parameter interval.
//!
//! A 7-point Gauss / 15-point Kronrod pair supplies the embedded error
//! estimate; the interval with the largest estimate is bisected until the
//! total satisfies the requested tolerance or the subdivision budget runs
//! out. Deterministic: no randomness, and the worst-interval scan breaks
//! ties by position.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerances and budgets for the contour integrator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
    /// Minimum distance the integration path must keep from any pole of the
    /// Weierstrass data, in the omega-plane.
    pub pole_clearance: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            rel_tol: 1e-10,
            max_subdivisions: 2000,
            pole_clearance: 1e-2,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        let positive = |v: f64| v > 0.0; // false for NaN as well
        if !positive(self.abs_tol) || !positive(self.rel_tol) {
            return Err(Error::InvalidArgument(
                "quadrature tolerances must be positive".into(),
            ));
        }
        if self.max_subdivisions == 0 {
            return Err(Error::InvalidArgument(
                "max_subdivisions must be at least 1".into(),
            ));
        }
        if !positive(self.pole_clearance) {
            return Err(Error::InvalidArgument(
                "pole_clearance must be positive".into(),
            ));
        }
        Ok(())
    }
}

// 15-point Kronrod abscissae (positive half, descending) and weights, with
// the embedded 7-point Gauss weights. QUADPACK dqk15 constants, kept at
// their published 20-digit precision.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_2,
    0.949_107_912_342_758_524_5,
    0.864_864_423_359_769_072_8,
    0.741_531_185_599_394_439_9,
    0.586_087_235_467_691_130_3,
    0.405_845_151_377_397_166_9,
    0.207_784_955_007_898_467_6,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_96,
    0.063_092_092_629_978_553_29,
    0.104_790_010_322_250_183_8,
    0.140_653_259_715_525_918_7,
    0.169_004_726_639_267_902_8,
    0.190_350_578_064_785_409_9,
    0.204_432_940_075_298_892_4,
    0.209_482_141_084_727_828_0,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_3,
    0.279_705_391_489_276_667_9,
    0.381_830_050_505_118_944_9,
    0.417_959_183_673_469_387_8,
];

/// Result of one Gauss-Kronrod pass over a subinterval.
#[derive(Debug, Clone, Copy)]
struct Panel {
    lo: f64,
    hi: f64,
    value: Complex64,
    error: f64,
}

fn gauss_kronrod<F: Fn(f64) -> Complex64>(f: &F, lo: f64, hi: f64) -> Panel {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let f_center = f(center);

    let mut kron = f_center * WGK[7];
    let mut gauss = Complex64::new(0.0, 0.0);

    for (j, &x) in XGK.iter().enumerate().take(7) {
        let dx = half * x;
        let sum = f(center - dx) + f(center + dx);
        kron += sum * WGK[j];
        if j % 2 == 1 {
            // odd Kronrod indices are the embedded Gauss nodes
            gauss += sum * WG[j / 2];
        }
    }
    gauss += f_center * WG[3];

    let value = kron * half;
    let error = ((kron - gauss) * half).norm();
    Panel {
        lo,
        hi,
        value,
        error,
    }
}

/// Integral estimate with its accumulated error bound.
#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: Complex64,
    pub est_error: f64,
    pub subdivisions: usize,
}

/// Adaptively integrate `f` over `[0, 1]`.
pub fn integrate<F: Fn(f64) -> Complex64>(f: F, cfg: &QuadratureConfig) -> Result<QuadResult> {
    cfg.validate()?;
    let mut panels = vec![gauss_kronrod(&f, 0.0, 1.0)];
    let mut subdivisions = 0usize;

    loop {
        let total: Complex64 = panels.iter().map(|p| p.value).sum();
        let err: f64 = panels.iter().map(|p| p.error).sum();
        let tol = cfg.abs_tol.max(cfg.rel_tol * total.norm());
        if err <= tol {
            return Ok(QuadResult {
                value: total,
                est_error: err,
                subdivisions,
            });
        }
        if subdivisions >= cfg.max_subdivisions {
            return Err(Error::ToleranceNotMet {
                est_error: err,
                subdivisions,
            });
        }
        // bisect the worst panel; ties resolve to the leftmost
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|(ia, a), (ib, b)| a.error.partial_cmp(&b.error).unwrap().then(ib.cmp(ia)))
            .map(|(i, _)| i)
            .expect("panel list is never empty");
        let Panel { lo, hi, .. } = panels[worst];
        let mid = 0.5 * (lo + hi);
        panels[worst] = gauss_kronrod(&f, lo, mid);
        panels.push(gauss_kronrod(&f, mid, hi));
        subdivisions += 1;
    }
}

/// Distance from the segment `[a, b]` to the point `p` in the complex plane.
pub fn segment_distance(a: Complex64, b: Complex64, p: Complex64) -> f64 {
    let ab = b - a;
    let len_sq = ab.norm_sqr();
    if len_sq == 0.0 {
        return (p - a).norm();
    }
    let t = ((p - a).re * ab.re + (p - a).im * ab.im) / len_sq;
    let t = t.clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

#[cfg(test)]
#[allow(clippy::excessive_precision, clippy::approx_constant)]
mod tests {
    use super::*;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn kronrod_constants_integrate_polynomials_exactly() {
        // K15 is exact through degree 22; x^10 over [0,1] = 1/11.
        let r = integrate(|t| Complex64::new(t.powi(10), 0.0), &cfg()).unwrap();
        assert!((r.value.re - 1.0 / 11.0).abs() < 1e-16);
        assert_eq!(r.value.im, 0.0);
    }

    #[test]
    fn integrates_exp_to_machine_precision() {
        let r = integrate(|t| Complex64::new(t.exp(), 0.0), &cfg()).unwrap();
        assert!((r.value.re - (std::f64::consts::E - 1.0)).abs() < 1e-14);
    }

    #[test]
    fn complex_integrand() {
        // int_0^1 e^{2 pi i t} dt = 0
        let r = integrate(
            |t| Complex64::new(0.0, 2.0 * std::f64::consts::PI * t).exp(),
            &cfg(),
        )
        .unwrap();
        assert!(r.value.norm() < 1e-13);
    }

    #[test]
    fn adaptive_refinement_handles_peaked_integrand() {
        // u = 1/((t-0.3)^2 + 1e-4): sharp Lorentzian peak, known antiderivative.
        let r = integrate(
            |t| Complex64::new(1.0 / ((t - 0.3) * (t - 0.3) + 1e-4), 0.0),
            &cfg(),
        )
        .unwrap();
        let exact = 100.0 * ((0.7f64 / 0.01).atan() + (0.3f64 / 0.01).atan());
        assert!((r.value.re - exact).abs() < 1e-8 * exact);
        assert!(r.subdivisions > 0);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let tight = QuadratureConfig {
            max_subdivisions: 1,
            abs_tol: 1e-16,
            rel_tol: 1e-16,
            ..cfg()
        };
        let r = integrate(
            |t| Complex64::new(1.0 / ((t - 0.3) * (t - 0.3) + 1e-6), 0.0),
            &tight,
        );
        assert!(matches!(r, Err(Error::ToleranceNotMet { .. })));
    }

    #[test]
    fn segment_distance_cases() {
        let a = Complex64::new(0.0, 0.0);
        let b = Complex64::new(1.0, 0.0);
        assert!((segment_distance(a, b, Complex64::new(0.5, 0.25)) - 0.25).abs() < 1e-15);
        assert!((segment_distance(a, b, Complex64::new(2.0, 0.0)) - 1.0).abs() < 1e-15);
        assert!((segment_distance(a, a, Complex64::new(0.0, 0.3)) - 0.3).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_config() {
        let bad = QuadratureConfig {
            abs_tol: 0.0,
            ..cfg()
        };
        assert!(integrate(|_| Complex64::new(1.0, 0.0), &bad).is_err());
    }
}
