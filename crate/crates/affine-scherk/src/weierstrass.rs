//! Weierstrass-Enneper machinery: the meromorphic data `R(omega)` for both
//! signatures, its unit-circle poles, numerical contour integration of the
//! representation, the as-printed lambda/mu closed forms, and the
//! hodographic coordinate maps.
//!
//! Two variants of `R` are carried side by side. The corrected form is the
//! one whose contour integrals reproduce the closed-form height exactly
//! (`phi(xi) = height(x(xi), y(xi))` to quadrature tolerance); the
//! as-printed form follows the source formulas verbatim and is retained for
//! discrepancy audits. The same split applies to the third integrand of the
//! representation: `2 omega R(omega)` is the working form, `2 R(omega)` the
//! audited one.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quad::{self, QuadratureConfig};
use crate::surfaces::{Signature, SurfaceSpec};

/// Default pole clearance used by the point evaluators (`weierstrass_r`),
/// matching `QuadratureConfig::default().pole_clearance`.
pub const DEFAULT_POLE_CLEARANCE: f64 = 1e-2;

/// Which form of the meromorphic data to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RVariant {
    /// The form validated by the cross-route identity.
    Corrected,
    /// The source formula taken verbatim, kept for audits.
    AsPrinted,
}

/// Which third (height) integrand to use in the representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZVariant {
    /// `2 omega R(omega)`, the standard Weierstrass-Enneper height form.
    OmegaWeighted,
    /// `2 R(omega)` as printed in the source; fails the cross-route check.
    AsPrinted2R,
}

/// A point on the isothermal chart: parameter, surface coordinates, and the
/// quadrature error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WEPoint {
    pub xi: Complex64,
    pub x: f64,
    pub y: f64,
    pub phi: f64,
    pub est_error: f64,
}

fn require_we_signature(spec: &SurfaceSpec) -> Result<()> {
    match spec.signature {
        Signature::Euclidean | Signature::Lorentz => Ok(()),
        Signature::BornInfeldWick => Err(Error::Domain(
            "the wick signature has no real Weierstrass-Enneper chart; use Euclidean data".into(),
        )),
    }
}

fn r_value(spec: &SurfaceSpec, variant: RVariant, w: Complex64) -> Complex64 {
    let a = spec.a;
    let s = spec.stretch();
    let one_ia = Complex64::new(1.0, a);
    let w2 = w * w;
    match (spec.signature, variant) {
        (Signature::Euclidean | Signature::BornInfeldWick, RVariant::Corrected) => {
            // (1+ia)^2 / ((1+a^2) + (1+ia)^2 w^2) + 1/(1 - w^2)
            let d = Complex64::new(1.0 + a * a, 0.0) + one_ia * one_ia * w2;
            one_ia * one_ia / d + 1.0 / (Complex64::new(1.0, 0.0) - w2)
        }
        (Signature::Euclidean | Signature::BornInfeldWick, RVariant::AsPrinted) => {
            let d = Complex64::new(1.0 + a * a, 0.0) + one_ia * one_ia * w2;
            s * one_ia / d + 1.0 / (Complex64::new(1.0, 0.0) - w2)
        }
        (Signature::Lorentz, RVariant::Corrected) => {
            // -2 (1+ia) / (((1+a^2) - (1+ia)^2 w^2)(1 + w^2))
            let d = Complex64::new(1.0 + a * a, 0.0) - one_ia * one_ia * w2;
            -2.0 * one_ia / (d * (Complex64::new(1.0, 0.0) + w2))
        }
        (Signature::Lorentz, RVariant::AsPrinted) => {
            let one_mia = Complex64::new(1.0, -a);
            let d = Complex64::new(1.0 + a * a, 0.0) + one_mia * one_mia * w2;
            s * one_ia / d + 1.0 / (Complex64::new(1.0, 0.0) - w2)
        }
    }
}

fn poles_of(spec: &SurfaceSpec, variant: RVariant) -> [Complex64; 4] {
    let s = spec.stretch();
    let one_ia = Complex64::new(1.0, spec.a);
    match (spec.signature, variant) {
        (Signature::Euclidean | Signature::BornInfeldWick, _) => {
            let p = Complex64::i() * s / one_ia;
            [Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0), p, -p]
        }
        (Signature::Lorentz, RVariant::Corrected) => {
            let p = Complex64::new(s, 0.0) / one_ia;
            [Complex64::i(), -Complex64::i(), p, -p]
        }
        (Signature::Lorentz, RVariant::AsPrinted) => {
            let p = Complex64::i() * s / Complex64::new(1.0, -spec.a);
            [Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0), p, -p]
        }
    }
}

fn min_pole_distance(poles: &[Complex64; 4], w: Complex64) -> f64 {
    poles
        .iter()
        .map(|p| (w - p).norm())
        .fold(f64::INFINITY, f64::min)
}

/// The meromorphic Weierstrass data `R(omega)` (corrected form).
///
/// Euclidean: `(1+ia)^2/((1+a^2)+(1+ia)^2 w^2) + 1/(1-w^2)`, which for
/// `a = 0` collapses to the Scherk value `2/(1-w^4)`. Lorentz:
/// `-2(1+ia)/(((1+a^2)-(1+ia)^2 w^2)(1+w^2))`, same `a = 0` limit up to
/// sign. The wick signature shares the Euclidean chart data.
pub fn weierstrass_r(spec: &SurfaceSpec, w: Complex64) -> Result<Complex64> {
    let dist = min_pole_distance(&poles_of(spec, RVariant::Corrected), w);
    if dist < DEFAULT_POLE_CLEARANCE {
        return Err(Error::PoleProximity {
            distance: dist,
            clearance: DEFAULT_POLE_CLEARANCE,
        });
    }
    Ok(r_value(spec, RVariant::Corrected, w))
}

/// `R(omega)` evaluated exactly as the source prints it, for audits.
///
/// The Euclidean numerator reads `sqrt(1+a^2)(1+ia)` instead of `(1+ia)^2`,
/// and the Lorentz denominator carries `(1-ia)^2 w^2` with a `1/(1-w^2)`
/// tail; neither reproduces the closed-form height through the contour
/// integrals when `a != 0`.
pub fn weierstrass_r_as_printed(spec: &SurfaceSpec, w: Complex64) -> Result<Complex64> {
    let dist = min_pole_distance(&poles_of(spec, RVariant::AsPrinted), w);
    if dist < DEFAULT_POLE_CLEARANCE {
        return Err(Error::PoleProximity {
            distance: dist,
            clearance: DEFAULT_POLE_CLEARANCE,
        });
    }
    Ok(r_value(spec, RVariant::AsPrinted, w))
}

/// The four poles of the corrected `R`, all of unit modulus; they are the
/// umbilical points of the surface.
///
/// Euclidean: `{+1, -1, +i sqrt(1+a^2)/(1+ia), -i sqrt(1+a^2)/(1+ia)}`.
/// Lorentz (corrected data): `{+i, -i, +sqrt(1+a^2)/(1+ia), -sqrt(1+a^2)/(1+ia)}`.
pub fn umbilic_poles(spec: &SurfaceSpec) -> [Complex64; 4] {
    poles_of(spec, RVariant::Corrected)
}

fn check_path_clear(
    spec: &SurfaceSpec,
    variant: RVariant,
    path: &[Complex64],
    cfg: &QuadratureConfig,
) -> Result<()> {
    let poles = poles_of(spec, variant);
    let mut prev = Complex64::new(0.0, 0.0);
    for &stop in path {
        for p in poles {
            let d = quad::segment_distance(prev, stop, p);
            if d < cfg.pole_clearance {
                return Err(Error::PoleProximity {
                    distance: d,
                    clearance: cfg.pole_clearance,
                });
            }
        }
        prev = stop;
    }
    Ok(())
}

/// Integrate the representation along an explicit polyline from the origin
/// through `waypoints`, with selectable `R` and height-integrand variants.
pub fn we_integrate_path(
    spec: &SurfaceSpec,
    waypoints: &[Complex64],
    cfg: &QuadratureConfig,
    r_variant: RVariant,
    z_variant: ZVariant,
) -> Result<WEPoint> {
    require_we_signature(spec)?;
    cfg.validate()?;
    if waypoints.is_empty() {
        return Err(Error::InvalidArgument(
            "integration path needs at least one endpoint".into(),
        ));
    }
    check_path_clear(spec, r_variant, waypoints, cfg)?;

    let r = |w: Complex64| r_value(spec, r_variant, w);
    let one = Complex64::new(1.0, 0.0);
    let wx = move |w: Complex64| match spec.signature {
        Signature::Lorentz => r(w) * (one + w * w),
        _ => r(w) * (one - w * w),
    };
    let wy = move |w: Complex64| match spec.signature {
        Signature::Lorentz => Complex64::i() * r(w) * (one - w * w),
        _ => Complex64::i() * r(w) * (one + w * w),
    };
    let wz = move |w: Complex64| match z_variant {
        ZVariant::OmegaWeighted => 2.0 * w * r(w),
        ZVariant::AsPrinted2R => 2.0 * r(w),
    };

    let mut acc = [Complex64::new(0.0, 0.0); 3];
    let mut est_error = 0.0f64;
    let mut subdivisions = 0usize;
    let mut start = Complex64::new(0.0, 0.0);
    for &stop in waypoints {
        let leg = stop - start;
        if leg.norm() == 0.0 {
            continue;
        }
        for (slot, f) in [&wx as &dyn Fn(Complex64) -> Complex64, &wy, &wz]
            .iter()
            .enumerate()
        {
            let res = quad::integrate(|t| f(start + leg * t) * leg, cfg)?;
            acc[slot] += res.value;
            est_error = est_error.max(res.est_error);
            subdivisions += res.subdivisions;
        }
        start = stop;
    }
    let _ = subdivisions;
    Ok(WEPoint {
        xi: start,
        x: acc[0].re,
        y: acc[1].re,
        phi: acc[2].re,
        est_error,
    })
}

/// Chart point by adaptive contour integration along the straight segment
/// `[0, xi]`, which stays inside the pole-free disc by convexity.
///
/// Base point: `xi_0 = 0` with `(x_0, y_0, z_0) = (0, 0, 0)`, consistent
/// with `height(0, 0) = 0`. Integrand triple - Euclidean:
/// `(R(1-w^2), iR(1+w^2), 2wR)`; Lorentz: `(R(1+w^2), iR(1-w^2), 2wR)`.
/// Real parts are taken after integration.
pub fn we_integrate(spec: &SurfaceSpec, xi: Complex64, cfg: &QuadratureConfig) -> Result<WEPoint> {
    if xi.norm() >= 1.0 - cfg.pole_clearance {
        return Err(Error::PoleProximity {
            distance: (1.0 - xi.norm()).max(0.0),
            clearance: cfg.pole_clearance,
        });
    }
    we_integrate_path(
        spec,
        &[xi],
        cfg,
        RVariant::Corrected,
        ZVariant::OmegaWeighted,
    )
}

/// As `we_integrate` but with the audited strict-source height integrand
/// `2 R(omega)`; expected to disagree with the closed-form height.
pub fn we_integrate_strict_z(
    spec: &SurfaceSpec,
    xi: Complex64,
    cfg: &QuadratureConfig,
) -> Result<WEPoint> {
    we_integrate_path(spec, &[xi], cfg, RVariant::Corrected, ZVariant::AsPrinted2R)
}

/// Deviation of a closed-form route from the integrated one, component-wise.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RouteDeviation {
    pub x_dev: f64,
    pub y_dev: f64,
    pub phi_dev: f64,
}

impl RouteDeviation {
    /// Largest component deviation; NaN if any component is NaN (a printed
    /// expression with no finite value must not look like agreement).
    pub fn max(&self) -> f64 {
        if self.x_dev.is_nan() || self.y_dev.is_nan() || self.phi_dev.is_nan() {
            return f64::NAN;
        }
        self.x_dev.max(self.y_dev).max(self.phi_dev)
    }
}

/// The five as-printed lambda expressions with their assembled chart point
/// and a comparison against the integrated route.
#[derive(Debug, Clone)]
pub struct LambdaData {
    pub lambda: [Complex64; 5],
    pub x: f64,
    pub y: f64,
    pub phi: f64,
    pub branch_warnings: Vec<String>,
    pub vs_integrated: RouteDeviation,
}

/// The six as-printed mu expressions (Lorentz analogue of `LambdaData`).
#[derive(Debug, Clone)]
pub struct MuData {
    pub mu: [Complex64; 6],
    pub x: f64,
    pub y: f64,
    pub phi: f64,
    pub branch_warnings: Vec<String>,
    pub vs_integrated: RouteDeviation,
}

/// Distance from `z` to the principal-log branch cut `(-inf, 0]`.
fn log_cut_distance(z: Complex64) -> f64 {
    if z.re <= 0.0 {
        z.im.abs()
    } else {
        z.norm()
    }
}

/// Distance from `z` to the principal-atan branch cuts `+-i [1, inf)`.
fn atan_cut_distance(z: Complex64) -> f64 {
    let to_ray = |sign: f64| {
        if sign * z.im >= 1.0 {
            z.re.abs()
        } else {
            (z.re * z.re + (sign * z.im - 1.0) * (sign * z.im - 1.0)).sqrt()
        }
    };
    to_ray(1.0).min(to_ray(-1.0))
}

const BRANCH_CUT_TOL: f64 = 1e-6;

fn warn_near_log_cut(z: Complex64, what: &str, warnings: &mut Vec<String>) {
    if log_cut_distance(z) < BRANCH_CUT_TOL {
        warnings.push(format!(
            "{what} lies within {BRANCH_CUT_TOL:.0e} of the log branch cut"
        ));
    }
}

fn warn_near_atan_cut(z: Complex64, what: &str, warnings: &mut Vec<String>) {
    if atan_cut_distance(z) < BRANCH_CUT_TOL {
        warnings.push(format!(
            "{what} lies within {BRANCH_CUT_TOL:.0e} of the atan branch cut"
        ));
    }
}

/// Evaluate the printed lambda closed forms at `xi` (principal branches)
/// and assemble `x = Im l1 + Re l2`, `y = Im l3 + 2 Re l4`, `phi = Re l5`.
///
/// The expressions are taken verbatim: `l4` applies `atan` to an argument
/// containing `1/xi` (singular at the origin) and `l5` carries an additive
/// `(xi^2+1)^2` term. They are never asserted correct - the deviation from
/// the integrated route is reported instead.
pub fn lambda_data(a: f64, xi: Complex64) -> Result<LambdaData> {
    if xi.norm() > 0.5 {
        return Err(Error::Domain(format!(
            "|xi| = {} exceeds the 0.5 disc where the printed branches are tame",
            xi.norm()
        )));
    }
    let mut warnings = Vec::new();
    let i = Complex64::i();
    let sq = Complex64::new((1.0 + a * a).sqrt(), 0.0);
    let ipa = Complex64::new(a, 1.0); // iota + a
    let ami = Complex64::new(a, -1.0); // a - iota
    let sqrt_ipa = ipa.sqrt();
    let sqrt_ami = ami.sqrt();

    let l1 = -(ipa / sq) * xi;

    let c2 = sqrt_ami / (i * sqrt_ipa);
    warn_near_atan_cut(c2 * xi, "lambda2 atan argument", &mut warnings);
    let l2 = xi - 2.0 * sq * (c2 * xi).atan() / (i * sqrt_ipa * ami.powf(1.5));

    let l3 = (Complex64::new(1.0, -a) / sq - 1.0) * xi + 2.0 * xi.atan();
    warn_near_atan_cut(xi, "lambda3 atan argument", &mut warnings);

    let l4 = if xi.norm() == 0.0 {
        warnings.push(
            "lambda4 argument contains 1/xi as printed; the expression is singular at xi = 0"
                .to_string(),
        );
        Complex64::new(f64::NAN, f64::NAN)
    } else {
        let arg = sqrt_ami / (i * sqrt_ipa * xi);
        warn_near_atan_cut(arg, "lambda4 atan argument", &mut warnings);
        a * sq * arg.atan() / (i * sqrt_ipa * ami.powf(1.5))
    };

    let xi2 = xi * xi;
    let log_arg = Complex64::new(a * a, 0.0) * (xi2 - 1.0) * (xi2 - 1.0);
    if log_arg.norm() < 1e-300 {
        warnings.push("lambda5 log argument a^2 (xi^2-1)^2 vanishes (a = 0)".to_string());
    } else {
        warn_near_log_cut(log_arg, "lambda5 log argument", &mut warnings);
    }
    warn_near_log_cut(
        Complex64::new(1.0, 0.0) - xi2,
        "lambda5 log(1 - xi^2) argument",
        &mut warnings,
    );
    let inner = 2.0 * (Complex64::new(a, 0.0) - 2.0 * a / (xi2 + 1.0)).atan() - i * log_arg.ln()
        + (xi2 + 1.0) * (xi2 + 1.0);
    let l5 = (ipa / (2.0 * sq)) * inner - (Complex64::new(1.0, 0.0) - xi2).ln();

    let x = l1.im + l2.re;
    let y = l3.im + 2.0 * l4.re;
    let phi = l5.re;

    let we = we_integrate(&SurfaceSpec::euclidean(a), xi, &QuadratureConfig::default())?;
    let vs_integrated = RouteDeviation {
        x_dev: (x - we.x).abs(),
        y_dev: (y - we.y).abs(),
        phi_dev: (phi - we.phi).abs(),
    };

    Ok(LambdaData {
        lambda: [l1, l2, l3, l4, l5],
        x,
        y,
        phi,
        branch_warnings: warnings,
        vs_integrated,
    })
}

/// Evaluate the printed mu closed forms at `zeta` and assemble
/// `x = Re m1 + Im m2`, `y = Re m3 + Im m4`, `phi = Re m5 + Re m6`,
/// with the deviation against the integrated Lorentz route.
pub fn mu_data(a: f64, zeta: Complex64) -> Result<MuData> {
    if zeta.norm() > 0.5 {
        return Err(Error::Domain(format!(
            "|zeta| = {} exceeds the 0.5 disc where the printed branches are tame",
            zeta.norm()
        )));
    }
    let mut warnings = Vec::new();
    let i = Complex64::i();
    let sq = Complex64::new((a * a + 1.0).sqrt(), 0.0);
    let ipa = Complex64::new(a, 1.0); // iota + a
    let ima = Complex64::new(-a, 1.0); // iota - a
    let sqrt_ipa = ipa.sqrt();
    let sqrt_ima = ima.sqrt();

    // shared linear coefficient of mu1 and mu4
    let c1 = -((Complex64::new(a * a, 0.0) + i * (sq + 2.0) * a + sq - 1.0) * zeta) / (ipa * ipa);

    let moebius = (Complex64::new(1.0, 0.0) + zeta) / (Complex64::new(1.0, 0.0) - zeta);
    warn_near_log_cut(moebius, "mu1/mu5 log argument", &mut warnings);
    let m1 = c1 + moebius.ln();

    let atan_arg = (sqrt_ipa / sqrt_ima) * zeta;
    warn_near_atan_cut(atan_arg, "mu2/mu6 atan argument", &mut warnings);
    let m2 = -2.0 * (a * sqrt_ima * sq / ipa.powf(2.5)) * atan_arg.atan();

    let log_arg = (sqrt_ima - i * sqrt_ipa * zeta) / (sqrt_ima + i * sqrt_ipa * zeta);
    warn_near_log_cut(log_arg, "mu3 log argument", &mut warnings);
    let m3 = (sqrt_ima * sq / ipa.powf(2.5)) * log_arg.ln();

    let m4 = c1;
    let m5 = moebius.ln();
    let m6 = -2.0 * (sqrt_ima * sq / ipa.powf(1.5)) * atan_arg.atan();

    let x = m1.re + m2.im;
    let y = m3.re + m4.im;
    let phi = m5.re + m6.re;

    let we = we_integrate(&SurfaceSpec::lorentz(a), zeta, &QuadratureConfig::default())?;
    let vs_integrated = RouteDeviation {
        x_dev: (x - we.x).abs(),
        y_dev: (y - we.y).abs(),
        phi_dev: (phi - we.phi).abs(),
    };

    Ok(MuData {
        mu: [m1, m2, m3, m4, m5, m6],
        x,
        y,
        phi,
        branch_warnings: warnings,
        vs_integrated,
    })
}

/// A hodographic coordinate pair with a proximity-to-cut diagnostic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HodographPair {
    pub first: Complex64,
    pub second: Complex64,
    pub branch_warning: bool,
}

/// Forward hodographic map from the gradient variables `(u, v)` to the
/// chart pair.
///
/// Euclidean: `xi = (sqrt(1+4uv)-1)/(2v)`, `xibar = (sqrt(1+4uv)-1)/(2u)`;
/// Lorentz: `zeta = (1-sqrt(1-4uv))/(2v)`, `zetabar = (1-sqrt(1-4uv))/(2u)`.
/// Both are evaluated in the cancellation-free form `2u/(1 + sqrt(1 +- 4uv))`
/// so the `uv -> 0` limit is exact.
pub fn hodograph_forward(
    signature: Signature,
    u: Complex64,
    v: Complex64,
) -> Result<HodographPair> {
    if u.norm() == 0.0 || v.norm() == 0.0 {
        return Err(Error::Domain(
            "hodograph map requires u != 0 and v != 0".into(),
        ));
    }
    let radicand = match signature {
        Signature::Euclidean => Complex64::new(1.0, 0.0) + 4.0 * u * v,
        Signature::Lorentz => Complex64::new(1.0, 0.0) - 4.0 * u * v,
        Signature::BornInfeldWick => {
            return Err(Error::Domain(
                "hodograph map is defined for Euclidean and Lorentz".into(),
            ))
        }
    };
    let branch_warning = log_cut_distance(radicand) < BRANCH_CUT_TOL;
    let den = 1.0 + radicand.sqrt();
    Ok(HodographPair {
        first: 2.0 * u / den,
        second: 2.0 * v / den,
        branch_warning,
    })
}

/// Inverse hodographic map. Euclidean: `u = xi/(1 - xi xibar)`,
/// `v = xibar/(1 - xi xibar)`; Lorentz: `u = zeta/(1 + zeta zetabar)`,
/// `v = zetabar/(1 + zeta zetabar)`.
pub fn hodograph_inverse(
    signature: Signature,
    xi: Complex64,
    xibar: Complex64,
) -> Result<(Complex64, Complex64)> {
    let den = match signature {
        Signature::Euclidean => Complex64::new(1.0, 0.0) - xi * xibar,
        Signature::Lorentz => Complex64::new(1.0, 0.0) + xi * xibar,
        Signature::BornInfeldWick => {
            return Err(Error::Domain(
                "hodograph map is defined for Euclidean and Lorentz".into(),
            ))
        }
    };
    if den.norm() < 1e-14 {
        return Err(Error::Domain(format!(
            "hodograph inverse singular: |1 -+ product| = {:.3e}",
            den.norm()
        )));
    }
    Ok((xi / den, xibar / den))
}

#[cfg(test)]
#[allow(clippy::excessive_precision, clippy::approx_constant)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn assert_close(z: Complex64, re: f64, im: f64, tol: f64) {
        assert!(
            (z.re - re).abs() < tol && (z.im - im).abs() < tol,
            "expected {re}+{im}i, got {}+{}i",
            z.re,
            z.im
        );
    }

    #[test]
    fn r_scherk_limit() {
        let spec = SurfaceSpec::euclidean(0.0);
        let r = weierstrass_r(&spec, c(0.0, 0.5)).unwrap();
        assert_close(r, 2.0 / 0.9375, 0.0, 1e-14);
        let r = weierstrass_r(&spec, c(0.0, 0.0)).unwrap();
        assert_close(r, 2.0, 0.0, 1e-15);
    }

    #[test]
    fn r_reduces_to_scherk_everywhere_at_a0() {
        let spec = SurfaceSpec::euclidean(0.0);
        for &(re, im) in &[(0.3, 0.4), (-0.7, 0.2), (0.1, -0.75), (0.0, 0.8)] {
            let w = c(re, im);
            let expect = 2.0 / (Complex64::new(1.0, 0.0) - w * w * w * w);
            let got = weierstrass_r(&spec, w).unwrap();
            assert!((got - expect).norm() < 1e-13);
        }
    }

    #[test]
    fn r_corrected_golden_values() {
        let r = weierstrass_r(&SurfaceSpec::euclidean(1.0), c(0.2, 0.1)).unwrap();
        assert_close(r, 1.0616980440361433, 1.0830907248064523, 1e-14);
        let r = weierstrass_r(&SurfaceSpec::lorentz(1.0), c(0.2, 0.1)).unwrap();
        assert_close(r, -0.94169813883983154, -0.92309197119956528, 1e-14);
    }

    #[test]
    fn r_as_printed_golden_values() {
        // sqrt(2)(1+i)/2 + 1 at omega = 0
        let r = weierstrass_r_as_printed(&SurfaceSpec::euclidean(1.0), c(0.0, 0.0)).unwrap();
        assert_close(r, 1.7071067811865475, 0.70710678118654752, 1e-14);
        let r = weierstrass_r_as_printed(&SurfaceSpec::lorentz(1.0), c(0.2, 0.1)).unwrap();
        assert_close(r, 1.6889263091316561, 0.74138189416345503, 1e-14);
    }

    #[test]
    fn r_rejects_pole_proximity() {
        let spec = SurfaceSpec::euclidean(0.0);
        assert!(matches!(
            weierstrass_r(&spec, c(0.0, 0.995)),
            Err(Error::PoleProximity { .. })
        ));
        assert!(matches!(
            weierstrass_r(&spec, c(1.005, 0.0)),
            Err(Error::PoleProximity { .. })
        ));
    }

    #[test]
    fn poles_have_unit_modulus() {
        for a in [0.0, 0.5, 1.0, 2.0, 4.0] {
            for spec in [SurfaceSpec::euclidean(a), SurfaceSpec::lorentz(a)] {
                for p in umbilic_poles(&spec) {
                    assert!(
                        (p.norm() - 1.0).abs() < 1e-14,
                        "pole {p} of a={a} {:?} off the circle",
                        spec.signature
                    );
                }
            }
        }
    }

    #[test]
    fn poles_scherk_limit_and_golden() {
        let poles = umbilic_poles(&SurfaceSpec::euclidean(0.0));
        assert_close(poles[0], 1.0, 0.0, 1e-15);
        assert_close(poles[1], -1.0, 0.0, 1e-15);
        assert_close(poles[2], 0.0, 1.0, 1e-15);
        assert_close(poles[3], 0.0, -1.0, 1e-15);

        let poles = umbilic_poles(&SurfaceSpec::euclidean(2.0));
        assert_close(poles[2], 0.89442719099991588, 0.44721359549995794, 1e-14);
        let poles = umbilic_poles(&SurfaceSpec::lorentz(2.0));
        assert_close(poles[2], 0.44721359549995794, -0.89442719099991588, 1e-14);
    }

    #[test]
    fn we_integrate_trivial_base_point() {
        let cfg = QuadratureConfig::default();
        for spec in [SurfaceSpec::euclidean(1.0), SurfaceSpec::lorentz(0.5)] {
            let p = we_integrate(&spec, c(0.0, 0.0), &cfg).unwrap();
            assert_eq!((p.x, p.y, p.phi), (0.0, 0.0, 0.0));
        }
    }

    #[test]
    fn we_integrate_scherk_closed_forms() {
        // exact antiderivatives at a = 0: x = 2 atan(xi), y = 0,
        // phi = log((1+xi^2)/(1-xi^2))
        let cfg = QuadratureConfig::default();
        let p = we_integrate(&SurfaceSpec::euclidean(0.0), c(0.3, 0.0), &cfg).unwrap();
        assert!((p.x - 0.58291358895573418).abs() < 1e-12);
        assert!(p.y.abs() < 1e-12);
        assert!((p.phi - 0.18048837571229366).abs() < 1e-12);
        assert!(p.est_error <= 1e-10);
    }

    #[test]
    fn we_integrate_golden_euclid_a1() {
        let cfg = QuadratureConfig::default();
        let p = we_integrate(&SurfaceSpec::euclidean(1.0), c(0.3, 0.2), &cfg).unwrap();
        assert!((p.x - 0.11394588526886614).abs() < 1e-11);
        assert!((p.y - (-0.54489487266924265)).abs() < 1e-11);
        assert!((p.phi - (-0.082843386549740001)).abs() < 1e-11);
    }

    #[test]
    fn we_integrate_golden_lorentz_a1() {
        let cfg = QuadratureConfig::default();
        let p = we_integrate(&SurfaceSpec::lorentz(1.0), c(0.2, -0.15), &cfg).unwrap();
        assert!((p.x - (-0.35692480122334804)).abs() < 1e-11);
        assert!((p.y - 0.066687792195431816).abs() < 1e-11);
        assert!((p.phi - (-0.080786375529649625)).abs() < 1e-11);
    }

    #[test]
    fn cross_route_identity_holds() {
        let cfg = QuadratureConfig::default();
        for a in [0.0, 1.0, 2.0] {
            let spec = SurfaceSpec::euclidean(a);
            let p = we_integrate(&spec, c(0.25, -0.35), &cfg).unwrap();
            let h = crate::surfaces::height(&spec, p.x, p.y).unwrap();
            assert!(
                (p.phi - h).abs() < 1e-8,
                "a = {a}: phi = {} vs height = {h}",
                p.phi
            );
            let spec = SurfaceSpec::lorentz(a);
            let p = we_integrate(&spec, c(0.25, -0.35), &cfg).unwrap();
            let h = crate::surfaces::height(&spec, p.x, p.y).unwrap();
            assert!((p.phi - h).abs() < 1e-8);
        }
    }

    #[test]
    fn strict_z_integrand_fails_cross_route() {
        let cfg = QuadratureConfig::default();
        let p = we_integrate_strict_z(&SurfaceSpec::euclidean(0.0), c(0.3, 0.0), &cfg).unwrap();
        assert!((p.phi - 1.2019527973619576).abs() < 1e-11);
        let h = crate::surfaces::height(&SurfaceSpec::euclidean(0.0), p.x, p.y).unwrap();
        assert!((p.phi - h).abs() > 0.5);
    }

    #[test]
    fn path_independence() {
        let cfg = QuadratureConfig::default();
        let spec = SurfaceSpec::euclidean(1.0);
        let xi = c(0.4, 0.1);
        let straight = we_integrate_path(
            &spec,
            &[xi],
            &cfg,
            RVariant::Corrected,
            ZVariant::OmegaWeighted,
        )
        .unwrap();
        let detour = we_integrate_path(
            &spec,
            &[xi * 0.5 + c(0.0, 0.1), xi],
            &cfg,
            RVariant::Corrected,
            ZVariant::OmegaWeighted,
        )
        .unwrap();
        assert!((straight.x - detour.x).abs() < 1e-9);
        assert!((straight.y - detour.y).abs() < 1e-9);
        assert!((straight.phi - detour.phi).abs() < 1e-9);
    }

    #[test]
    fn we_integrate_rejects_disc_edge_and_wick() {
        let cfg = QuadratureConfig::default();
        assert!(matches!(
            we_integrate(&SurfaceSpec::euclidean(1.0), c(0.995, 0.0), &cfg),
            Err(Error::PoleProximity { .. })
        ));
        assert!(we_integrate(&SurfaceSpec::born_infeld_wick(1.0), c(0.1, 0.0), &cfg).is_err());
    }

    #[test]
    fn lambda_golden_values() {
        let data = lambda_data(1.0, c(0.1, 0.0)).unwrap();
        assert_close(
            data.lambda[0],
            -0.070710678118654752,
            -0.070710678118654752,
            1e-14,
        );
        assert_close(
            data.lambda[1],
            0.24141852796730872,
            -0.00047138431902569506,
            1e-13,
        );
        assert_close(
            data.lambda[2],
            0.17004798310097881,
            -0.070710678118654752,
            1e-14,
        );
        assert_close(
            data.lambda[3],
            -0.78516247123793546,
            0.71468889941379395,
            1e-13,
        );
        assert_close(
            data.lambda[4],
            -0.18468604618356273,
            -0.18052306076663785,
            1e-13,
        );
        assert!((data.x - 0.17070784984865397).abs() < 1e-13);
        assert!((data.y - (-1.6410356205945257)).abs() < 1e-13);
        assert!((data.phi - (-0.18468604618356273)).abs() < 1e-13);
        // printed forms deviate from the integrated route by ~1.54 here
        assert!((data.vs_integrated.max() - 1.5407043014348942).abs() < 1e-9);
    }

    #[test]
    fn lambda_flags_singular_origin() {
        let data = lambda_data(1.0, c(0.0, 0.0)).unwrap();
        assert_eq!(data.lambda[0], c(0.0, 0.0));
        assert_eq!(data.lambda[1], c(0.0, 0.0));
        assert!(data.lambda[3].re.is_nan());
        assert!(data.branch_warnings.iter().any(|w| w.contains("1/xi")));
    }

    #[test]
    fn lambda_rejects_large_disc() {
        assert!(lambda_data(1.0, c(0.6, 0.0)).is_err());
    }

    #[test]
    fn lambda_y_assembly_matches_integrated_y_at_a0() {
        // on the real axis at a = 0 the integrated chart has y = 0 and the
        // printed y-assembly agrees there
        let data = lambda_data(0.0, c(0.2, 0.0)).unwrap();
        assert!(data.y.abs() < 1e-12);
        assert!(data.vs_integrated.y_dev < 1e-10);
    }

    #[test]
    fn mu_golden_values_a0() {
        let data = mu_data(0.0, c(0.2, 0.0)).unwrap();
        assert_close(data.mu[0], 0.40546510810816438, 0.0, 1e-14);
        assert_close(data.mu[1], 0.0, 0.0, 1e-14);
        assert_close(data.mu[2], 0.0, 0.39479111969976152, 1e-14);
        assert_close(data.mu[3], 0.0, 0.0, 1e-14);
        assert_close(data.mu[4], 0.40546510810816438, 0.0, 1e-14);
        assert_close(data.mu[5], 0.0, 0.39479111969976152, 1e-14);
        assert!((data.x - 0.40546510810816438).abs() < 1e-14);
        assert!(data.y.abs() < 1e-14);
        assert!((data.phi - 0.40546510810816438).abs() < 1e-14);
        // the printed phi disagrees with height(L, x, y) by ~0.4855
        let h = crate::surfaces::height(&SurfaceSpec::lorentz(0.0), data.x, data.y).unwrap();
        assert!(((data.phi - h).abs() - 0.48550781578170081).abs() < 1e-12);
    }

    #[test]
    fn mu_vanishes_at_origin() {
        let data = mu_data(0.0, c(0.0, 0.0)).unwrap();
        for m in data.mu {
            assert_eq!(m, c(0.0, 0.0));
        }
        assert_eq!((data.x, data.y, data.phi), (0.0, 0.0, 0.0));
    }

    #[test]
    fn mu_golden_values_a1() {
        let data = mu_data(1.0, c(0.0, 0.1)).unwrap();
        assert_close(
            data.mu[0],
            -0.070710678118654752,
            0.028626626863669302,
            1e-13,
        );
        assert_close(
            data.mu[1],
            -0.14141852796730872,
            0.00047138431902569506,
            1e-13,
        );
        assert_close(
            data.mu[2],
            -0.00047138431902569506,
            -0.14141852796730872,
            1e-13,
        );
        assert_close(
            data.mu[3],
            -0.070710678118654752,
            -0.17071067811865475,
            1e-13,
        );
        assert_close(data.mu[4], 0.0, 0.19933730498232405, 1e-13);
        assert_close(
            data.mu[5],
            -0.14188991228633442,
            -0.14094714364828303,
            1e-13,
        );
        assert!((data.x - (-0.070239293799629057)).abs() < 1e-13);
        assert!((data.y - (-0.17118206243768045)).abs() < 1e-13);
        assert!((data.phi - (-0.14188991228633442)).abs() < 1e-13);
    }

    #[test]
    fn hodograph_forward_golden() {
        let pair = hodograph_forward(Signature::Euclidean, c(0.1, 0.2), c(0.05, -0.1)).unwrap();
        assert_close(pair.first, 0.097617696340303094, 0.19523539268060619, 1e-15);
        assert_close(
            pair.second,
            0.048808848170151547,
            -0.097617696340303094,
            1e-15,
        );
        assert!(!pair.branch_warning);

        let pair = hodograph_forward(Signature::Lorentz, c(0.25, 0.0), c(0.25, 0.0)).unwrap();
        assert_close(pair.first, 0.26794919243112271, 0.0, 1e-15);
    }

    #[test]
    fn hodograph_round_trip() {
        for sig in [Signature::Euclidean, Signature::Lorentz] {
            let (u, v) = (c(0.1, 0.2), c(0.05, -0.1));
            let pair = hodograph_forward(sig, u, v).unwrap();
            let (u2, v2) = hodograph_inverse(sig, pair.first, pair.second).unwrap();
            assert!((u2 - u).norm() < 1e-12);
            assert!((v2 - v).norm() < 1e-12);
        }
    }

    #[test]
    fn hodograph_small_u_limit() {
        // xi = u (1 + O(uv)) without cancellation
        let u = c(1e-18, 0.0);
        let v = c(0.3, 0.0);
        let pair = hodograph_forward(Signature::Euclidean, u, v).unwrap();
        assert!((pair.first - u).norm() < 1e-28);
    }

    #[test]
    fn hodograph_domain_errors() {
        assert!(hodograph_forward(Signature::Euclidean, c(0.0, 0.0), c(0.3, 0.0)).is_err());
        assert!(hodograph_forward(Signature::BornInfeldWick, c(0.1, 0.0), c(0.3, 0.0)).is_err());
        assert!(hodograph_inverse(Signature::Euclidean, c(1.0, 0.0), c(1.0, 0.0)).is_err());
    }

    #[test]
    fn hodograph_inverse_examples() {
        let (u, v) = hodograph_inverse(Signature::Euclidean, c(0.5, 0.0), c(0.5, 0.0)).unwrap();
        assert_close(u, 2.0 / 3.0, 0.0, 1e-15);
        assert_close(v, 2.0 / 3.0, 0.0, 1e-15);
        let (u, v) = hodograph_inverse(Signature::Lorentz, c(0.5, 0.0), c(0.5, 0.0)).unwrap();
        assert_close(u, 0.4, 0.0, 1e-15);
        assert_close(v, 0.4, 0.0, 1e-15);
        let (u, v) = hodograph_inverse(Signature::Euclidean, c(0.0, 0.0), c(0.0, 0.0)).unwrap();
        assert_eq!((u, v), (c(0.0, 0.0), c(0.0, 0.0)));
    }
}
