//! Series routes to the height function: the Ramanujan cosine-product
//! identity as a sum of logarithms, its affine Euclidean and Lorentz
//! specializations, and the Dirichlet P/T expansion.
//!
//! The product identity over half-odd multiples of pi,
//! `cos(X+A)/cos A = prod_k [(a_k - (X+A))(a_k + (X+A))] / [(a_k - A)(a_k + A)]`
//! with `a_k = (k - 1/2) pi`, is summed in log form with compensated
//! accumulation; truncation at `K` terms leaves an `O(1/K)` tail whose
//! estimate is returned alongside the value.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kahan::{KahanComplexSum, KahanSum};
use crate::surfaces::{self, SurfaceSpec};

/// `alpha_k = (k - 1/2) pi`, the k-th positive zero spacing anchor of the
/// cosine product. `k >= 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaK {
    pub k: usize,
    pub value: f64,
}

impl AlphaK {
    pub fn new(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument(
                "alpha_k index starts at k = 1".into(),
            ));
        }
        Ok(Self {
            k,
            value: alpha_k(k),
        })
    }
}

#[inline]
pub fn alpha_k(k: usize) -> f64 {
    (k as f64 - 0.5) * std::f64::consts::PI
}

/// Guard policy for the |ratio| < 1 convergence-domain conditions of the
/// Dirichlet expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GuardPolicy {
    /// Reject points violating the conditions.
    Strict,
    /// Shrink the evaluation point toward the origin until they hold,
    /// recording a warning.
    Clamp,
}

/// Truncation orders and guard policy for the series evaluators.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesConfig {
    /// Outer product/sum index bound K.
    pub outer_terms: usize,
    /// Inner power-series index bound N.
    pub inner_terms: usize,
    pub guard: GuardPolicy,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        Self {
            outer_terms: 10_000,
            inner_terms: 200,
            guard: GuardPolicy::Strict,
        }
    }
}

impl SeriesConfig {
    fn validate(&self) -> Result<()> {
        if self.outer_terms == 0 || self.inner_terms == 0 {
            return Err(Error::InvalidArgument(
                "series truncation orders must be >= 1".into(),
            ));
        }
        Ok(())
    }
}

/// A truncated series value with its tail estimate and any warnings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesValue {
    pub value: f64,
    /// Empirical `O(1/K)` tail estimate: |last term| * K.
    pub tail_estimate: f64,
    pub warnings: Vec<String>,
}

/// Complex-valued counterpart of [`SeriesValue`].
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSeriesValue {
    pub value: Complex64,
    pub tail_estimate: f64,
    pub warnings: Vec<String>,
}

/// Relative size of the final term above which a truncation warning fires.
const CONVERGENCE_WARN_RTOL: f64 = 1e-9;

/// Partial sum of the log-form Ramanujan identity with principal complex
/// logarithms:
/// `sum_{k=1..K} log((a_k - (X+A))/(a_k - A)) + log((a_k + (X+A))/(a_k + A))`,
/// converging to `log(cos(X+A)/cos A)` as `K -> inf`.
pub fn ramanujan_log_sum(
    x: Complex64,
    shift: Complex64,
    terms: usize,
) -> Result<ComplexSeriesValue> {
    if terms == 0 {
        return Err(Error::InvalidArgument("term count must be >= 1".into()));
    }
    // cos A = 0 exactly at the odd multiples of pi/2; |cos A| ~ distance there.
    if shift.cos().norm() < 1e-8 {
        return Err(Error::Domain(
            "A is within ~1e-8 of an odd multiple of pi/2; cos A vanishes".into(),
        ));
    }
    let total = x + shift;
    let mut acc = KahanComplexSum::new();
    let mut last = Complex64::new(0.0, 0.0);
    for k in 1..=terms {
        let alpha = Complex64::new(alpha_k(k), 0.0);
        let factors = [alpha - total, alpha - shift, alpha + total, alpha + shift];
        for f in factors {
            if f.norm() < alpha.re * 1e-14 {
                return Err(Error::SingularFactor { k });
            }
        }
        last = (factors[0] / factors[1]).ln() + (factors[2] / factors[3]).ln();
        acc.add(last);
    }
    let value = acc.value();
    let tail_estimate = last.norm() * terms as f64;
    let mut warnings = Vec::new();
    if last.norm() > CONVERGENCE_WARN_RTOL * (1.0 + value.norm()) {
        warnings.push(format!(
            "final term {:.3e} is large relative to the sum; increase K",
            last.norm()
        ));
    }
    Ok(ComplexSeriesValue {
        value,
        tail_estimate,
        warnings,
    })
}

/// Require the principal periodicity cell, where every product factor is
/// positive and the real sum of real logs equals the principal value.
fn require_principal_cell(spec: &SurfaceSpec, x: f64, y: f64) -> Result<()> {
    if !surfaces::in_domain(spec, x, y) {
        return Err(Error::Domain(format!(
            "({x}, {y}) is outside the {} domain",
            spec.signature.as_str()
        )));
    }
    let s = spec.stretch();
    let half_pi = std::f64::consts::FRAC_PI_2;
    if (s * x).abs() >= half_pi - 1e-8 {
        return Err(Error::Domain(format!(
            "x = {x} is within 1e-8 of an odd multiple of pi/(2 sqrt(1+a^2))"
        )));
    }
    if spec.signature == crate::surfaces::Signature::Euclidean && (y + spec.a * x).abs() >= half_pi
    {
        return Err(Error::Domain(format!(
            "(x, y) = ({x}, {y}) leaves the principal cell |y + a x| < pi/2"
        )));
    }
    Ok(())
}

/// Euclidean Ramanujan route: the log-sum with `X+A = y + a x` and
/// `A = sqrt(1+a^2) x`, all factors real and positive in the principal
/// cell; converges to `height(Euclidean)`.
pub fn affine_ramanujan(a: f64, x: f64, y: f64, terms: usize) -> Result<SeriesValue> {
    if terms == 0 {
        return Err(Error::InvalidArgument("term count must be >= 1".into()));
    }
    let spec = SurfaceSpec::euclidean(a);
    require_principal_cell(&spec, x, y)?;
    let total = y + a * x;
    let shift = spec.stretch() * x;
    let mut acc = KahanSum::new();
    let mut last = 0.0f64;
    for k in 1..=terms {
        let alpha = alpha_k(k);
        let num = alpha * alpha - total * total;
        let den = alpha * alpha - shift * shift;
        if num.abs() < alpha * 1e-14 || den.abs() < alpha * 1e-14 {
            return Err(Error::SingularFactor { k });
        }
        last = (num / den).ln();
        acc.add(last);
    }
    let value = acc.value();
    let tail_estimate = last.abs() * terms as f64;
    let mut warnings = Vec::new();
    if last.abs() > CONVERGENCE_WARN_RTOL * (1.0 + value.abs()) {
        warnings.push(format!(
            "final term {:.3e} is large relative to the sum; increase K",
            last.abs()
        ));
    }
    Ok(SeriesValue {
        value,
        tail_estimate,
        warnings,
    })
}

/// Lorentz Ramanujan route: the identity with imaginary arguments
/// `X+A = i(y + a x)`, `A = i sqrt(1+a^2) x`. The sum is evaluated through
/// the complex log-sum; its imaginary part must vanish to rounding and the
/// real part converges to `height(Lorentz)`.
pub fn lorentz_ramanujan(a: f64, x: f64, y: f64, terms: usize) -> Result<SeriesValue> {
    let spec = SurfaceSpec::lorentz(a);
    if !surfaces::in_domain(&spec, x, y) {
        return Err(Error::Domain(format!(
            "({x}, {y}) violates the spacelike condition"
        )));
    }
    let total = Complex64::new(0.0, y + a * x);
    let shift = Complex64::new(0.0, spec.stretch() * x);
    let sum = ramanujan_log_sum(total - shift, shift, terms)?;
    let (re, im) = (sum.value.re, sum.value.im);
    if im.abs() > 1e-8 * (1.0 + re.abs()) {
        return Err(Error::ImaginaryResidue { real: re, imag: im });
    }
    Ok(SeriesValue {
        value: re,
        tail_estimate: sum.tail_estimate,
        warnings: sum.warnings,
    })
}

/// Truncated Dirichlet series `P(s, p) = sum_{n=1..N} (-1)^(n+1) p^n / n^s`;
/// for `s = 1` it converges to `log(1 + p)`.
pub fn dirichlet_p(s: f64, p: f64, terms: usize) -> Result<f64> {
    if p.abs() >= 1.0 {
        return Err(Error::Domain(format!("|p| = {} must be < 1", p.abs())));
    }
    if terms == 0 {
        return Err(Error::InvalidArgument("term count must be >= 1".into()));
    }
    let mut acc = KahanSum::new();
    let mut power = 1.0f64;
    for n in 1..=terms {
        power *= p;
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        acc.add(sign * power / (n as f64).powf(s));
    }
    Ok(acc.value())
}

/// Truncated Dirichlet series `T(s, b) = sum_{n=1..N} b^n / n^s`;
/// for `s = 1` it converges to `-log(1 - b)`.
pub fn dirichlet_t(s: f64, b: f64, terms: usize) -> Result<f64> {
    if b.abs() >= 1.0 {
        return Err(Error::Domain(format!("|b| = {} must be < 1", b.abs())));
    }
    if terms == 0 {
        return Err(Error::InvalidArgument("term count must be >= 1".into()));
    }
    let mut acc = KahanSum::new();
    let mut power = 1.0f64;
    for n in 1..=terms {
        power *= b;
        acc.add(power / (n as f64).powf(s));
    }
    Ok(acc.value())
}

/// Height via the Dirichlet expansion:
/// `sum_{k=1..K} [P(1, (1+a^2)x^2/(a_k^2 - (1+a^2)x^2)) - T(1, (y+ax)^2/a_k^2)]`
/// truncated at `N` inner terms; approaches `height(Euclidean)`.
///
/// The convergence conditions `|ratio| < 1` bind only at `k = 1`; the guard
/// policy decides whether a violating point is rejected or shrunk toward
/// the origin (with a warning naming the clamped point).
pub fn height_via_dirichlet(a: f64, x: f64, y: f64, cfg: &SeriesConfig) -> Result<SeriesValue> {
    cfg.validate()?;
    let spec = SurfaceSpec::euclidean(a);
    require_principal_cell(&spec, x, y)?;

    let mut warnings = Vec::new();
    let (mut x, mut y) = (x, y);
    let alpha1 = alpha_k(1);
    let s2 = 1.0 + a * a;

    let ratio_q = |x: f64| s2 * x * x / (alpha1 * alpha1 - s2 * x * x);
    let ratio_p = |x: f64, y: f64| {
        let t = y + a * x;
        t * t / (alpha1 * alpha1)
    };
    if ratio_q(x).abs() >= 1.0 || ratio_p(x, y) >= 1.0 {
        match cfg.guard {
            GuardPolicy::Strict => {
                let (rq, rp) = (ratio_q(x), ratio_p(x, y));
                let worst = if rq.abs() >= 1.0 { rq } else { rp };
                return Err(Error::GuardViolation { k: 1, ratio: worst });
            }
            GuardPolicy::Clamp => {
                // largest scaling of (x, y) satisfying both k = 1 conditions
                let t_q = alpha1 / ((2.0 * s2).sqrt() * x.abs().max(1e-300));
                let t_p = alpha1 / (y + a * x).abs().max(1e-300);
                let t = (0.999 * t_q.min(t_p)).min(1.0);
                x *= t;
                y *= t;
                warnings.push(format!(
                    "convergence guard clamped the evaluation point by {t:.6} to ({x:.6}, {y:.6})"
                ));
            }
        }
    }

    let total = y + a * x;
    let mut outer = KahanSum::new();
    let mut last = 0.0f64;
    for k in 1..=cfg.outer_terms {
        let ak = alpha_k(k);
        let q = s2 * x * x / (ak * ak - s2 * x * x);
        let p = total * total / (ak * ak);
        let term = dirichlet_p(1.0, q, cfg.inner_terms)? - dirichlet_t(1.0, p, cfg.inner_terms)?;
        outer.add(term);
        last = term;
    }
    let value = outer.value();

    // outer tail ~ O(1/K); inner tails are geometric, dominated by k = 1
    let n1 = (cfg.inner_terms + 1) as f64;
    let q1 = ratio_q(x).abs();
    let p1 = ratio_p(x, y);
    let inner_tail =
        q1.powf(n1) / (n1 * (1.0 - q1).max(1e-300)) + p1.powf(n1) / (n1 * (1.0 - p1).max(1e-300));
    let tail_estimate = last.abs() * cfg.outer_terms as f64 + inner_tail;
    if last.abs() > CONVERGENCE_WARN_RTOL * (1.0 + value.abs()) {
        warnings.push(format!(
            "final term {:.3e} is large relative to the sum; increase K",
            last.abs()
        ));
    }
    Ok(SeriesValue {
        value,
        tail_estimate,
        warnings,
    })
}

#[cfg(test)]
#[allow(clippy::excessive_precision, clippy::approx_constant)]
mod tests {
    use super::*;
    use crate::surfaces::height;

    #[test]
    fn alpha_k_basics() {
        assert!((alpha_k(1) - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        assert!(AlphaK::new(0).is_err());
        let a = AlphaK::new(3).unwrap();
        assert!((a.value - 2.5 * std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn ramanujan_zero_increment_is_exactly_zero() {
        let r = ramanujan_log_sum(Complex64::new(0.0, 0.0), Complex64::new(0.3, 0.0), 10).unwrap();
        assert_eq!(r.value, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn ramanujan_frozen_partial_sums() {
        // 50-digit truncations at K = 1000
        let r =
            ramanujan_log_sum(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0), 1000).unwrap();
        assert!((r.value.re - (-0.61552514920910436)).abs() < 1e-12);
        assert!(r.value.im.abs() < 1e-15);

        let r =
            ramanujan_log_sum(Complex64::new(0.3, 0.0), Complex64::new(0.2, 0.0), 1000).unwrap();
        assert!((r.value.re - (-0.1104281899444184)).abs() < 1e-12);
    }

    #[test]
    fn ramanujan_converges_to_log_cos() {
        // tail ~ 1/(pi^2 K) ~ 1.0e-7 at K = 1e6
        let r = ramanujan_log_sum(
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.0),
            1_000_000,
        )
        .unwrap();
        assert!((r.value.re - (-0.61562647038601426)).abs() < 5e-7);
        assert!(r.warnings.is_empty());
        assert!(r.tail_estimate < 1e-5);
    }

    #[test]
    fn ramanujan_partial_close_to_limit_at_1e5_terms() {
        // log(cos 0.5 / cos 0.2); O(1/K) tail ~ 2e-7 at K = 1e5
        let r =
            ramanujan_log_sum(Complex64::new(0.3, 0.0), Complex64::new(0.2, 0.0), 100_000).unwrap();
        assert!((r.value.re - (-0.11044946739131437)).abs() < 1e-4);
    }

    #[test]
    fn ramanujan_rejects_singular_shift() {
        let r = ramanujan_log_sum(
            Complex64::new(0.1, 0.0),
            Complex64::new(std::f64::consts::FRAC_PI_2, 0.0),
            10,
        );
        assert!(r.is_err());
    }

    #[test]
    fn affine_ramanujan_trivial_and_convergent() {
        let r = affine_ramanujan(1.0, 0.0, 0.0, 100).unwrap();
        assert_eq!(r.value, 0.0);

        let h = height(&SurfaceSpec::euclidean(1.0), 0.2, 0.3).unwrap();
        let r = affine_ramanujan(1.0, 0.2, 0.3, 100_000).unwrap();
        assert!((r.value - h).abs() < 2e-4, "err = {}", (r.value - h).abs());

        let h = height(&SurfaceSpec::euclidean(0.0), 0.4, 0.5).unwrap();
        let r = affine_ramanujan(0.0, 0.4, 0.5, 100_000).unwrap();
        assert!((r.value - h).abs() < 2e-4);
    }

    #[test]
    fn affine_ramanujan_error_shrinks_with_k() {
        let h = height(&SurfaceSpec::euclidean(1.0), 0.2, 0.3).unwrap();
        let e3 = (affine_ramanujan(1.0, 0.2, 0.3, 1_000).unwrap().value - h).abs();
        let e4 = (affine_ramanujan(1.0, 0.2, 0.3, 10_000).unwrap().value - h).abs();
        assert!(e3 / e4 > 5.0, "decade ratio {}", e3 / e4);
    }

    #[test]
    fn affine_ramanujan_rejects_out_of_domain() {
        assert!(affine_ramanujan(0.0, 1.6, 0.0, 100).is_err());
    }

    #[test]
    fn lorentz_ramanujan_matches_height() {
        let r = lorentz_ramanujan(0.0, 0.0, 0.0, 100).unwrap();
        assert_eq!(r.value, 0.0);

        let r = lorentz_ramanujan(0.0, 0.0, 0.5, 100_000).unwrap();
        assert!((r.value - 0.12011450695827752).abs() < 2e-4);

        let h = height(&SurfaceSpec::lorentz(1.0), 0.1, 0.2).unwrap();
        let r = lorentz_ramanujan(1.0, 0.1, 0.2, 10_000).unwrap();
        assert!((r.value - h).abs() < 1e-5);
    }

    #[test]
    fn dirichlet_p_values() {
        assert!((dirichlet_p(1.0, 0.5, 200).unwrap() - 0.40546510810816438).abs() < 1e-10);
        assert_eq!(dirichlet_p(1.0, 0.0, 50).unwrap(), 0.0);
        assert!((dirichlet_p(2.0, 0.5, 200).unwrap() - 0.4484142069236462).abs() < 1e-14);
        assert!(dirichlet_p(1.0, 1.0, 10).is_err());
    }

    #[test]
    fn dirichlet_t_values() {
        assert!((dirichlet_t(1.0, 0.5, 200).unwrap() - 0.69314718055994531).abs() < 1e-10);
        assert_eq!(dirichlet_t(1.0, 0.0, 50).unwrap(), 0.0);
        assert!((dirichlet_t(3.0, 0.25, 200).unwrap() - 0.25846139579657331).abs() < 1e-14);
        assert!(dirichlet_t(1.0, -1.0, 10).is_err());
    }

    #[test]
    fn dirichlet_height_route() {
        let cfg = SeriesConfig {
            outer_terms: 10_000,
            inner_terms: 100,
            guard: GuardPolicy::Strict,
        };
        let r = height_via_dirichlet(1.0, 0.0, 0.0, &cfg).unwrap();
        assert_eq!(r.value, 0.0);

        let h = height(&SurfaceSpec::euclidean(1.0), 0.2, 0.3).unwrap();
        let r = height_via_dirichlet(1.0, 0.2, 0.3, &cfg).unwrap();
        assert!((r.value - h).abs() < 5e-4, "err = {}", (r.value - h).abs());

        let h = height(&SurfaceSpec::euclidean(0.0), 0.3, 0.4).unwrap();
        let r = height_via_dirichlet(0.0, 0.3, 0.4, &cfg).unwrap();
        assert!((r.value - h).abs() < 5e-4);
    }

    #[test]
    fn dirichlet_guard_policies() {
        // sqrt(1+a^2)|x| above alpha_1/sqrt(2) violates the k = 1 condition
        let strict = SeriesConfig {
            outer_terms: 100,
            inner_terms: 50,
            guard: GuardPolicy::Strict,
        };
        let clamp = SeriesConfig {
            guard: GuardPolicy::Clamp,
            ..strict
        };
        let (x, y) = (1.3, 0.1);
        assert!(matches!(
            height_via_dirichlet(0.0, x, y, &strict),
            Err(Error::GuardViolation { k: 1, .. })
        ));
        let r = height_via_dirichlet(0.0, x, y, &clamp).unwrap();
        assert!(r.value.is_finite());
        assert!(r.warnings.iter().any(|w| w.contains("clamped")));
    }
}
