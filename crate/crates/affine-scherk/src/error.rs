//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by surface evaluation, series summation, contour
/// integration, and mesh export.
#[derive(Debug, Error)]
pub enum Error {
    /// The evaluation point violates a domain precondition (log argument
    /// not positive, vanishing denominator, unsupported signature, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// The gradient left the open unit disc required of a spacelike graph.
    #[error("spacelike condition violated: |grad phi|^2 = {norm_sq} >= 1")]
    SpacelikeViolation { norm_sq: f64 },

    /// An evaluation or integration path came closer to a pole of the
    /// Weierstrass data than the configured clearance.
    #[error("pole proximity: distance {distance:.3e} below clearance {clearance:.3e}")]
    PoleProximity { distance: f64, clearance: f64 },

    /// Adaptive quadrature exhausted its subdivision budget.
    #[error("quadrature tolerance not met: estimated error {est_error:.3e} after {subdivisions} subdivisions")]
    ToleranceNotMet { est_error: f64, subdivisions: usize },

    /// A factor of the Ramanujan product vanishes at the requested point.
    #[error("singular factor in product term k = {k}")]
    SingularFactor { k: usize },

    /// A nominally real series summed to a value with a non-negligible
    /// imaginary part.
    #[error("imaginary residue {imag:.3e} exceeds tolerance for real part {real:.3e}")]
    ImaginaryResidue { real: f64, imag: f64 },

    /// A convergence-domain condition |ratio| < 1 failed under the Strict
    /// guard policy.
    #[error("convergence guard violated at k = {k}: |{ratio}| >= 1")]
    GuardViolation { k: usize, ratio: f64 },

    /// The normalizing denominator of the probability mass function is zero.
    #[error("zero denominator in probability mass function")]
    ZeroDenominator,

    /// Scalar-mode PMF requires |A_k| < 1 for every k.
    #[error("scalar mode domain violated at k = {k}: |A_k| = {magnitude} >= 1")]
    ScalarDomain { k: usize, magnitude: f64 },

    /// A sampled grid contained no in-domain node.
    #[error("empty mesh: no grid node lies in the surface domain")]
    EmptyMesh,

    /// File export/import failure.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    /// Malformed input to a parser or command.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
