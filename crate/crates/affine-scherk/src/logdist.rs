//! Logarithmic-distribution decomposition of the Euclidean height function:
//! per-k expansion terms, the resulting probability mass function with
//! normalization and sign diagnostics, and the truncated double sum that
//! reproduces the height.
//!
//! The k-th expansion contributes the pair
//! `p_k = (y+ax)^2 / a_k^2 >= 0` and
//! `q_k = -(1+a^2) x^2 / (a_k^2 - (1+a^2) x^2) <= 0`, and
//! `sum_k [log(1-p_k) + log(1-q_k)]` telescopes against
//! `sum_j sum_k -(p_k^j + q_k^j)/j`, which is what makes the PMF sum to
//! one exactly in the limit.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::identities::alpha_k;
use crate::kahan::KahanSum;
use crate::surfaces::{self, SurfaceSpec};

/// The k-th pair of expansion ratios.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AkTerms {
    pub k: usize,
    /// `(y + a x)^2 / alpha_k^2`, never negative.
    pub p: f64,
    /// `-(1+a^2) x^2 / (alpha_k^2 - (1+a^2) x^2)`, non-positive whenever
    /// `alpha_k^2 > (1+a^2) x^2`.
    pub q: f64,
}

impl AkTerms {
    /// Diagnostic for the source's stated constraint `0 < A_k < 1` under the
    /// scalar reading `A_k = p + q`. Recorded, never asserted.
    pub fn scalar_in_unit_interval(&self) -> bool {
        let a = self.p + self.q;
        0.0 < a && a < 1.0
    }
}

/// Compute `(p_k, q_k)` at the point; errors on the resonance
/// `alpha_k^2 = (1+a^2) x^2`.
pub fn ak_terms(a: f64, x: f64, y: f64, k: usize) -> Result<AkTerms> {
    if k == 0 {
        return Err(Error::InvalidArgument("k starts at 1".into()));
    }
    let ak = alpha_k(k);
    let s2 = 1.0 + a * a;
    let den = ak * ak - s2 * x * x;
    if den.abs() < 1e-12 * ak * ak {
        return Err(Error::Domain(format!(
            "resonance alpha_{k}^2 = (1+a^2) x^2 at x = {x}"
        )));
    }
    let t = y + a * x;
    Ok(AkTerms {
        k,
        p: t * t / (ak * ak),
        q: -s2 * x * x / den,
    })
}

/// Which reading of the source's `A_k^i` powers the PMF uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PmfMode {
    /// Distributive power: `A_k^j` means `p_k^j + q_k^j`. This is the
    /// reading consistent with the Dirichlet expansion of the height.
    Split,
    /// Scalar parameter: `A_k = p_k + q_k`, requiring `|A_k| < 1`.
    Scalar,
}

impl std::str::FromStr for PmfMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "split" => Ok(PmfMode::Split),
            "scalar" => Ok(PmfMode::Scalar),
            other => Err(Error::InvalidArgument(format!(
                "unknown pmf mode '{other}' (expected split | scalar)"
            ))),
        }
    }
}

/// Tabulated probability mass function `f(j)`, `j = 1..=j_max`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PmfTable {
    /// Number of k-terms aggregated.
    pub n: usize,
    pub j_max: usize,
    pub mode: PmfMode,
    /// `f[j - 1]` holds `f(j)`.
    pub f: Vec<f64>,
    /// Sum of the tabulated masses; approaches 1 as `j_max` grows.
    pub cumulative: f64,
    /// Geometric bound on the mass beyond `j_max`.
    pub tail_bound: f64,
    /// Whether every tabulated `f(j)` is non-negative. Odd powers of the
    /// non-positive `q_k` can flip signs; this is reported, not asserted.
    pub nonneg: bool,
}

impl PmfTable {
    /// CSV rows `j, f_j, cumulative` with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("j,f_j,cumulative\n");
        let mut running = 0.0;
        for (i, &fj) in self.f.iter().enumerate() {
            running += fj;
            out.push_str(&format!("{},{:.16e},{:.16e}\n", i + 1, fj, running));
        }
        out
    }
}

fn gather_terms(a: f64, x: f64, y: f64, n: usize) -> Result<Vec<AkTerms>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be >= 1".into()));
    }
    let spec = SurfaceSpec::euclidean(a);
    if !surfaces::in_domain(&spec, x, y) {
        return Err(Error::Domain(format!(
            "({x}, {y}) is outside the Euclidean domain"
        )));
    }
    (1..=n).map(|k| ak_terms(a, x, y, k)).collect()
}

/// Probability mass function of the logarithmic decomposition at a point.
///
/// Split mode: `f(j) = [sum_k -(p_k^j + q_k^j)/j] / [sum_k log(1-p_k) + log(1-q_k)]`.
/// Scalar mode: `f(j) = [sum_k -(p_k+q_k)^j/j] / [sum_k log(1-p_k-q_k)]`.
/// Both normalize to 1 as `j_max -> inf`; `cumulative` and `tail_bound`
/// quantify the truncation.
pub fn pmf(a: f64, x: f64, y: f64, n: usize, j_max: usize, mode: PmfMode) -> Result<PmfTable> {
    if j_max == 0 {
        return Err(Error::InvalidArgument("j_max must be >= 1".into()));
    }
    let terms = gather_terms(a, x, y, n)?;

    // per-k geometric bases of the numerator series
    let bases: Vec<(f64, f64)> = match mode {
        PmfMode::Split => terms.iter().map(|t| (t.p, t.q)).collect(),
        PmfMode::Scalar => {
            for t in &terms {
                let ak = t.p + t.q;
                if ak.abs() >= 1.0 {
                    return Err(Error::ScalarDomain {
                        k: t.k,
                        magnitude: ak.abs(),
                    });
                }
            }
            terms.iter().map(|t| (t.p + t.q, 0.0)).collect()
        }
    };

    let mut den = KahanSum::new();
    for &(b1, b2) in &bases {
        if b1 >= 1.0 || b2 >= 1.0 {
            return Err(Error::Domain(format!(
                "log(1 - ratio) undefined: ratio >= 1 at ({x}, {y})"
            )));
        }
        den.add((1.0 - b1).ln());
        den.add((1.0 - b2).ln());
    }
    let den = den.value();
    if den == 0.0 {
        return Err(Error::ZeroDenominator);
    }

    let mut f = Vec::with_capacity(j_max);
    let mut powers: Vec<(f64, f64)> = vec![(1.0, 1.0); bases.len()];
    let mut cumulative = KahanSum::new();
    let mut nonneg = true;
    for j in 1..=j_max {
        let mut num = KahanSum::new();
        for (pw, &(b1, b2)) in powers.iter_mut().zip(&bases) {
            pw.0 *= b1;
            pw.1 *= b2;
            num.add(-(pw.0 + pw.1) / j as f64);
        }
        let fj = num.value() / den;
        if fj < 0.0 {
            nonneg = false;
        }
        cumulative.add(fj);
        f.push(fj);
    }

    let tail_bound = pmf_tail_bound(&bases, j_max, den);
    Ok(PmfTable {
        n,
        j_max,
        mode,
        f,
        cumulative: cumulative.value(),
        tail_bound,
        nonneg,
    })
}

/// Bound on the mass beyond `j_max`:
/// `sum_{j>J} |b|^j / j <= |b|^(J+1) / ((J+1)(1-|b|))` per base.
fn pmf_tail_bound(bases: &[(f64, f64)], j_max: usize, den: f64) -> f64 {
    let jp1 = (j_max + 1) as f64;
    let mut bound = 0.0;
    for &(b1, b2) in bases {
        for b in [b1.abs(), b2.abs()] {
            if b > 0.0 {
                bound += b.powf(jp1) / (jp1 * (1.0 - b));
            }
        }
    }
    bound / den.abs()
}

/// As [`pmf`] but with `j_max` chosen as the smallest truncation whose tail
/// bound is below `tail_tol` (capped at 100 000).
pub fn pmf_auto_j(
    a: f64,
    x: f64,
    y: f64,
    n: usize,
    tail_tol: f64,
    mode: PmfMode,
) -> Result<PmfTable> {
    if tail_tol <= 0.0 || tail_tol.is_nan() {
        return Err(Error::InvalidArgument(
            "tail tolerance must be positive".into(),
        ));
    }
    let terms = gather_terms(a, x, y, n)?;
    let bases: Vec<(f64, f64)> = match mode {
        PmfMode::Split => terms.iter().map(|t| (t.p, t.q)).collect(),
        PmfMode::Scalar => terms.iter().map(|t| (t.p + t.q, 0.0)).collect(),
    };
    let mut den = 0.0;
    for &(b1, b2) in &bases {
        if b1 < 1.0 && b2 < 1.0 {
            den += (1.0 - b1).ln() + (1.0 - b2).ln();
        }
    }
    if den == 0.0 {
        return Err(Error::ZeroDenominator);
    }
    let mut j_max = 1;
    while pmf_tail_bound(&bases, j_max, den) >= tail_tol && j_max < 100_000 {
        j_max *= 2;
    }
    pmf(a, x, y, n, j_max, mode)
}

/// The truncated double sum
/// `sum_{k<=n} sum_{j<=J} -(p_k^j + q_k^j)/j`, which converges to
/// `height(Euclidean, a, x, y)` as both truncations grow.
pub fn partial_sum_series(a: f64, x: f64, y: f64, n: usize, j_max: usize) -> Result<f64> {
    if j_max == 0 {
        return Err(Error::InvalidArgument("j_max must be >= 1".into()));
    }
    let terms = gather_terms(a, x, y, n)?;
    let mut acc = KahanSum::new();
    for t in &terms {
        let (mut pw_p, mut pw_q) = (1.0, 1.0);
        for j in 1..=j_max {
            pw_p *= t.p;
            pw_q *= t.q;
            acc.add(-(pw_p + pw_q) / j as f64);
        }
    }
    Ok(acc.value())
}

#[cfg(test)]
#[allow(clippy::excessive_precision, clippy::approx_constant)]
mod tests {
    use super::*;
    use crate::surfaces::height;

    #[test]
    fn ak_terms_examples() {
        let t = ak_terms(0.0, 0.0, 0.0, 1).unwrap();
        assert_eq!((t.p, t.q), (0.0, 0.0));

        let t = ak_terms(1.0, 0.2, 0.3, 1).unwrap();
        assert!((t.p - 0.10132118364233777).abs() < 1e-15);
        assert!((t.q - (-0.033509241488945492)).abs() < 1e-15);
        assert!(t.scalar_in_unit_interval());

        let t = ak_terms(0.0, 0.3, 0.0, 2).unwrap();
        assert_eq!(t.p, 0.0);
        assert!((t.q - (-0.0040693397585326048)).abs() < 1e-15);
    }

    #[test]
    fn ak_terms_resonance() {
        // alpha_1 = pi/2; a = 0, x = pi/2 hits the resonance exactly
        assert!(ak_terms(0.0, std::f64::consts::FRAC_PI_2, 0.0, 1).is_err());
        assert!(ak_terms(0.0, 0.1, 0.1, 0).is_err());
    }

    #[test]
    fn single_term_reduction_is_classical_log_distribution() {
        // x = 0 kills q; y = alpha_1 sqrt(p) dials the parameter exactly.
        for p in [0.1f64, 0.5, 0.9] {
            let y = alpha_k(1) * p.sqrt();
            let table = pmf(0.0, 0.0, y, 1, 60, PmfMode::Split).unwrap();
            let norm = -(1.0 - p).ln();
            for j in 1..=60usize {
                let expect = p.powi(j as i32) / (j as f64 * norm);
                assert!(
                    (table.f[j - 1] - expect).abs() < 1e-12,
                    "p = {p}, j = {j}: {} vs {expect}",
                    table.f[j - 1]
                );
            }
        }
    }

    #[test]
    fn classical_f1_value() {
        // f(1) = p / (-log(1-p)) = 0.7213... at p = 0.5
        let y = alpha_k(1) * 0.5f64.sqrt();
        let table = pmf(0.0, 0.0, y, 1, 10, PmfMode::Split).unwrap();
        assert!((table.f[0] - 0.7213475204444817).abs() < 1e-12);
    }

    #[test]
    fn normalization_single_k() {
        let table = pmf(1.0, 0.0, 0.3, 1, 50, PmfMode::Split).unwrap();
        assert!((table.cumulative - 1.0).abs() < 1e-10);
        assert!(table.nonneg);
    }

    #[test]
    fn normalization_both_modes() {
        for mode in [PmfMode::Split, PmfMode::Scalar] {
            let table = pmf(1.0, 0.2, 0.3, 3, 100, mode).unwrap();
            assert!(
                (table.cumulative - 1.0).abs() < 1e-8,
                "{mode:?}: cumulative = {}",
                table.cumulative
            );
        }
    }

    #[test]
    fn modes_share_normalization_not_masses() {
        let split = pmf(1.0, 0.2, 0.3, 1, 50, PmfMode::Split).unwrap();
        let scalar = pmf(1.0, 0.2, 0.3, 1, 50, PmfMode::Scalar).unwrap();
        assert!((split.cumulative - 1.0).abs() < 1e-10);
        assert!((scalar.cumulative - 1.0).abs() < 1e-10);
        // the j = 2 masses genuinely differ: p^2 + q^2 != (p + q)^2
        assert!((split.f[1] - scalar.f[1]).abs() > 1e-4);
    }

    #[test]
    fn auto_j_meets_tail_tolerance() {
        let table = pmf_auto_j(1.0, 0.2, 0.3, 3, 1e-8, PmfMode::Split).unwrap();
        assert!(table.tail_bound < 1e-8);
        assert!((table.cumulative - 1.0).abs() < 1e-8 + table.tail_bound);
    }

    #[test]
    fn scalar_mode_domain_error() {
        // sqrt(1+a^2)|x| close to alpha_1 makes q_1 hugely negative
        let r = pmf(0.0, 1.56, 0.1, 1, 10, PmfMode::Scalar);
        assert!(matches!(r, Err(Error::ScalarDomain { k: 1, .. })));
        // split mode tolerates the same point (log(1 - q) is fine)
        let t = pmf(0.0, 1.56, 0.1, 1, 10, PmfMode::Split).unwrap();
        assert!(!t.nonneg);
    }

    #[test]
    fn zero_denominator_at_origin() {
        assert!(matches!(
            pmf(1.0, 0.0, 0.0, 2, 10, PmfMode::Split),
            Err(Error::ZeroDenominator)
        ));
    }

    #[test]
    fn partial_sums_reproduce_height() {
        assert_eq!(partial_sum_series(1.0, 0.0, 0.0, 10, 10).unwrap(), 0.0);

        let h = height(&SurfaceSpec::euclidean(1.0), 0.2, 0.3).unwrap();
        let s = partial_sum_series(1.0, 0.2, 0.3, 10_000, 60).unwrap();
        assert!((s - h).abs() < 5e-4, "err = {}", (s - h).abs());

        let h = height(&SurfaceSpec::euclidean(0.0), 0.3, 0.4).unwrap();
        let s = partial_sum_series(0.0, 0.3, 0.4, 10_000, 60).unwrap();
        assert!((s - h).abs() < 5e-4);
    }

    #[test]
    fn csv_shape() {
        let table = pmf(1.0, 0.0, 0.3, 1, 5, PmfMode::Split).unwrap();
        let csv = table.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 6);
        assert_eq!(lines[0], "j,f_j,cumulative");
        assert!(lines[1].starts_with("1,"));
    }
}
