//! Affine minimal translation surfaces evaluated through three independent
//! routes, with numerical cross-validation of the identities tying them
//! together.
//!
//! The families (Euclidean minimal, Lorentz maximal, and the wick-rotated
//! Born-Infeld variant) share the closed-form heights in [`surfaces`]. The
//! same surfaces are reproduced by contour integration of Weierstrass-
//! Enneper data in [`weierstrass`], by the Ramanujan cosine-product and
//! Dirichlet series in [`identities`], and decomposed into a logarithmic
//! probability distribution in [`logdist`]. [`meshio`] samples and exports
//! them; [`cli`] and [`verify`] drive every route with machine-readable
//! reports.

pub mod cli;
pub mod error;
pub mod identities;
pub mod jsonfmt;
pub mod kahan;
pub mod logdist;
pub mod meshio;
pub mod quad;
pub mod report;
pub mod sampling;
pub mod surfaces;
pub mod verify;
pub mod weierstrass;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use quad::QuadratureConfig;
pub use surfaces::{Jet2, Signature, SurfaceSpec};
