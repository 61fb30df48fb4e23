//! Closed-form height functions of the affine minimal translation surfaces,
//! their analytic jets, and the PDE residuals certifying the
//! minimal/maximal/soliton property.
//!
//! Three families share the shear parameter `a`:
//!
//! * Euclidean: `phi = log(cos(y + a x) / cos(sqrt(1 + a^2) x))`, a minimal
//!   graph in E^3;
//! * Lorentz: `phi = log(cosh(y + a x) / cosh(sqrt(1 + a^2) x))`, a maximal
//!   spacelike graph in L^3;
//! * BornInfeldWick: the complex-valued wick rotation
//!   `log(cos(i y + a x) / cos(sqrt(1 + a^2) x))`, real for `a = 0` where it
//!   reduces to the soliton `log(cosh y / cos x)`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default safety margin kept between an evaluation point and the singular
/// lines `cos(.) = 0` (value margin on the cosine) or the spacelike boundary
/// (margin on the gradient-norm slack).
pub const DEFAULT_DOMAIN_MARGIN: f64 = 1e-3;

/// Which ambient geometry the surface lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Signature {
    Euclidean,
    Lorentz,
    BornInfeldWick,
}

impl Signature {
    pub fn as_str(self) -> &'static str {
        match self {
            Signature::Euclidean => "euclidean",
            Signature::Lorentz => "lorentz",
            Signature::BornInfeldWick => "wick",
        }
    }
}

impl std::str::FromStr for Signature {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "euclidean" | "euclid" | "e" => Ok(Signature::Euclidean),
            "lorentz" | "l" => Ok(Signature::Lorentz),
            "wick" | "born-infeld-wick" | "borninfeldwick" | "bi" => Ok(Signature::BornInfeldWick),
            other => Err(Error::InvalidArgument(format!(
                "unknown signature '{other}' (expected euclidean | lorentz | wick)"
            ))),
        }
    }
}

/// A surface family member: shear parameter plus signature.
///
/// `a = 0` is accepted and reduces to the classical Scherk surfaces.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SurfaceSpec {
    /// Dimensionless shear parameter of the affine translation structure.
    pub a: f64,
    pub signature: Signature,
}

impl SurfaceSpec {
    pub fn new(a: f64, signature: Signature) -> Result<Self> {
        if !a.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "shear parameter a = {a} is not finite"
            )));
        }
        Ok(Self { a, signature })
    }

    pub fn euclidean(a: f64) -> Self {
        Self {
            a,
            signature: Signature::Euclidean,
        }
    }

    pub fn lorentz(a: f64) -> Self {
        Self {
            a,
            signature: Signature::Lorentz,
        }
    }

    pub fn born_infeld_wick(a: f64) -> Self {
        Self {
            a,
            signature: Signature::BornInfeldWick,
        }
    }

    /// `sqrt(1 + a^2)`, the stretch factor of the second generator.
    #[inline]
    pub fn stretch(&self) -> f64 {
        (1.0 + self.a * self.a).sqrt()
    }
}

/// Second-order jet of the height function at a point: value, both first
/// partials, and the three second partials.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Jet2 {
    pub phi: f64,
    pub phi_x: f64,
    pub phi_y: f64,
    pub phi_xx: f64,
    pub phi_xy: f64,
    pub phi_yy: f64,
}

impl Jet2 {
    pub const ZERO: Jet2 = Jet2 {
        phi: 0.0,
        phi_x: 0.0,
        phi_y: 0.0,
        phi_xx: 0.0,
        phi_xy: 0.0,
        phi_yy: 0.0,
    };

    pub fn is_finite(&self) -> bool {
        self.phi.is_finite()
            && self.phi_x.is_finite()
            && self.phi_y.is_finite()
            && self.phi_xx.is_finite()
            && self.phi_xy.is_finite()
            && self.phi_yy.is_finite()
    }
}

/// Complex-valued wick height together with a principal-branch diagnostic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WickHeight {
    pub value: Complex64,
    /// Set when the log argument lies on or hugs the negative real axis,
    /// where the principal branch is discontinuous.
    pub branch_warning: bool,
}

/// Closed-form height of the Euclidean or Lorentz surface.
pub fn height(spec: &SurfaceSpec, x: f64, y: f64) -> Result<f64> {
    let s = spec.stretch();
    match spec.signature {
        Signature::Euclidean => {
            let num = (y + spec.a * x).cos();
            let den = (s * x).cos();
            if den <= 0.0 {
                return Err(Error::Domain(format!(
                    "cos(sqrt(1+a^2) x) = {den:.6e} must be positive at x = {x}"
                )));
            }
            if num <= 0.0 {
                return Err(Error::Domain(format!(
                    "cos(y + a x) = {num:.6e} must be positive at (x, y) = ({x}, {y})"
                )));
            }
            Ok((num / den).ln())
        }
        Signature::Lorentz => {
            if !in_domain(spec, x, y) {
                let j = lorentz_jet(spec.a, x, y);
                return Err(Error::SpacelikeViolation {
                    norm_sq: j.phi_x * j.phi_x + j.phi_y * j.phi_y,
                });
            }
            // log(cosh u / cosh w) via log1p for stability at large arguments.
            let u = y + spec.a * x;
            let w = s * x;
            Ok(ln_cosh(u) - ln_cosh(w))
        }
        Signature::BornInfeldWick => Err(Error::Domain(
            "the wick-rotated height is complex-valued; use wick_height".into(),
        )),
    }
}

/// `log cosh` without overflow for large arguments:
/// `|t| + log1p(exp(-2|t|)) - log 2`.
fn ln_cosh(t: f64) -> f64 {
    let a = t.abs();
    a + (-2.0 * a).exp().ln_1p() - std::f64::consts::LN_2
}

/// Complex wick-rotated height `log(cos(i y + a x) / cos(sqrt(1+a^2) x))`
/// with the principal branch of the logarithm.
///
/// For `a = 0` the imaginary part vanishes and the real part is the
/// Born-Infeld soliton `log(cosh y / cos x)`.
///
/// Evaluated through `|cos(b + i y)|^2 = cosh^2 y - sin^2 b` and
/// `arg cos(b + i y) = atan2(-sin b tanh y, cos b)`, so large |y| (where
/// `cosh y` itself overflows) still yields the finite logarithm.
pub fn wick_height(a: f64, x: f64, y: f64) -> Result<WickHeight> {
    let s = (1.0 + a * a).sqrt();
    let b = a * x;
    let (sin_b, cos_b) = b.sin_cos();
    let tanh_y = y.tanh();
    let sech2_y = 1.0 - tanh_y * tanh_y;

    // log |cos(b + i y)| = ln cosh y + (1/2) log1p(-sin^2 b sech^2 y)
    let num_ln_mag = ln_cosh(y) + 0.5 * (-sin_b * sin_b * sech2_y).ln_1p();
    let num_arg = (-sin_b * tanh_y).atan2(cos_b);
    let den = (s * x).cos();

    // a cosine below 1e-12 in magnitude is indistinguishable from a zero
    // crossing at f64 argument resolution
    if den.abs() < 1e-12 {
        return Err(Error::Domain(format!(
            "cos(sqrt(1+a^2) x) vanishes at x = {x}"
        )));
    }
    if num_ln_mag < (1e-12f64).ln() {
        return Err(Error::Domain(format!(
            "cos(i y + a x) vanishes at (x, y) = ({x}, {y})"
        )));
    }

    // principal log of the ratio; a negative real denominator contributes pi
    let re = num_ln_mag - den.abs().ln();
    let mut im = if den < 0.0 { num_arg - std::f64::consts::PI } else { num_arg };
    if im <= -std::f64::consts::PI {
        im += 2.0 * std::f64::consts::PI;
    }
    // the principal log jumps across the negative real axis; flag arguments
    // within a razor's width of it
    let branch_warning = std::f64::consts::PI - im.abs() <= 1e-6;
    Ok(WickHeight {
        value: Complex64::new(re, im),
        branch_warning,
    })
}

fn euclid_jet(a: f64, x: f64, y: f64) -> Jet2 {
    let s = (1.0 + a * a).sqrt();
    let u = y + a * x;
    let w = s * x;
    let tan_u = u.tan();
    let tan_w = w.tan();
    let sec2_u = 1.0 + tan_u * tan_u;
    let sec2_w = 1.0 + tan_w * tan_w;
    Jet2 {
        phi: (u.cos() / w.cos()).ln(),
        phi_x: s * tan_w - a * tan_u,
        phi_y: -tan_u,
        phi_xx: s * s * sec2_w - a * a * sec2_u,
        phi_xy: -a * sec2_u,
        phi_yy: -sec2_u,
    }
}

fn lorentz_jet(a: f64, x: f64, y: f64) -> Jet2 {
    let s = (1.0 + a * a).sqrt();
    let u = y + a * x;
    let w = s * x;
    let tanh_u = u.tanh();
    let tanh_w = w.tanh();
    let sech2_u = 1.0 - tanh_u * tanh_u;
    let sech2_w = 1.0 - tanh_w * tanh_w;
    Jet2 {
        phi: ln_cosh(u) - ln_cosh(w),
        phi_x: a * tanh_u - s * tanh_w,
        phi_y: tanh_u,
        phi_xx: a * a * sech2_u - s * s * sech2_w,
        phi_xy: a * sech2_u,
        phi_yy: sech2_u,
    }
}

/// Jet of the real part of the wick surface; real-valued only for `a = 0`,
/// where it differentiates `log(cosh y / cos x)`.
fn wick_jet_a0(x: f64, y: f64) -> Jet2 {
    let tan_x = x.tan();
    let tanh_y = y.tanh();
    Jet2 {
        phi: ln_cosh(y) - x.cos().ln(),
        phi_x: tan_x,
        phi_y: tanh_y,
        phi_xx: 1.0 + tan_x * tan_x,
        phi_xy: 0.0,
        phi_yy: 1.0 - tanh_y * tanh_y,
    }
}

/// Exact closed-form jet (tan/tanh based, no finite differences).
///
/// For `BornInfeldWick` the jet is real only at `a = 0`; other shear values
/// are rejected since the surface is genuinely complex there.
pub fn analytic_jet(spec: &SurfaceSpec, x: f64, y: f64) -> Result<Jet2> {
    if !in_domain(spec, x, y) {
        return Err(Error::Domain(format!(
            "({x}, {y}) is outside the {} domain (margin {DEFAULT_DOMAIN_MARGIN:.0e})",
            spec.signature.as_str()
        )));
    }
    match spec.signature {
        Signature::Euclidean => Ok(euclid_jet(spec.a, x, y)),
        Signature::Lorentz => Ok(lorentz_jet(spec.a, x, y)),
        Signature::BornInfeldWick => {
            if spec.a != 0.0 {
                return Err(Error::Domain(
                    "real jet of the wick surface exists only for a = 0".into(),
                ));
            }
            Ok(wick_jet_a0(x, y))
        }
    }
}

/// Residual of the minimal-surface equation
/// `(1 + phi_y^2) phi_xx - 2 phi_x phi_y phi_xy + (1 + phi_x^2) phi_yy`.
pub fn minimal_residual(j: &Jet2) -> f64 {
    (1.0 + j.phi_y * j.phi_y) * j.phi_xx - 2.0 * j.phi_x * j.phi_y * j.phi_xy
        + (1.0 + j.phi_x * j.phi_x) * j.phi_yy
}

/// Residual of the maximal-surface equation
/// `(1 - phi_y^2) phi_xx + 2 phi_x phi_y phi_xy + (1 - phi_x^2) phi_yy`,
/// defined only on spacelike jets.
pub fn maximal_residual(j: &Jet2) -> Result<f64> {
    let norm_sq = j.phi_x * j.phi_x + j.phi_y * j.phi_y;
    if norm_sq >= 1.0 {
        return Err(Error::SpacelikeViolation { norm_sq });
    }
    Ok((1.0 - j.phi_y * j.phi_y) * j.phi_xx
        + 2.0 * j.phi_x * j.phi_y * j.phi_xy
        + (1.0 - j.phi_x * j.phi_x) * j.phi_yy)
}

/// Residual of the Born-Infeld soliton equation
/// `(1 - phi_y^2) phi_xx + 2 phi_x phi_y phi_xy - (1 + phi_x^2) phi_yy`.
///
/// This is the scalar Born-Infeld field equation with `y` in the timelike
/// slot; the wick rotation `y -> i y` of a minimal graph solves it, and the
/// `a = 0` wick surface `log(cosh y / cos x)` satisfies it identically.
pub fn born_infeld_residual(j: &Jet2) -> f64 {
    (1.0 - j.phi_y * j.phi_y) * j.phi_xx + 2.0 * j.phi_x * j.phi_y * j.phi_xy
        - (1.0 + j.phi_x * j.phi_x) * j.phi_yy
}

/// Domain membership with the default safety margin.
pub fn in_domain(spec: &SurfaceSpec, x: f64, y: f64) -> bool {
    in_domain_with_margin(spec, x, y, DEFAULT_DOMAIN_MARGIN)
}

/// Domain membership with an explicit margin `delta`.
///
/// Euclidean: both cosines must exceed `delta`. Lorentz: the squared
/// gradient norm must stay below `1 - delta`. BornInfeldWick: both complex
/// cosine magnitudes must exceed `delta`.
pub fn in_domain_with_margin(spec: &SurfaceSpec, x: f64, y: f64, delta: f64) -> bool {
    if !x.is_finite() || !y.is_finite() {
        return false;
    }
    let s = spec.stretch();
    match spec.signature {
        Signature::Euclidean => (s * x).cos() > delta && (y + spec.a * x).cos() > delta,
        Signature::Lorentz => {
            let j = lorentz_jet(spec.a, x, y);
            j.phi_x * j.phi_x + j.phi_y * j.phi_y < 1.0 - delta
        }
        Signature::BornInfeldWick => {
            let num = Complex64::new(spec.a * x, y).cos();
            let den = Complex64::new(s * x, 0.0).cos();
            num.norm() > delta && den.norm() > delta
        }
    }
}
