//! C ABI over the affine-scherk library.
//!
//! Conventions: fallible calls return an [`AscherkStatus`] and write their
//! output through pointers; pointer arguments must be valid for the call;
//! the PMF table is an opaque handle with `new`/`free` lifecycle. All
//! functions are thread-safe (the library is pure).

use std::ffi::{c_char, CStr};

use num_complex::Complex64;

use affine_scherk::error::Error;
use affine_scherk::identities::{self, GuardPolicy, SeriesConfig};
use affine_scherk::logdist::{self, PmfMode, PmfTable};
use affine_scherk::quad::QuadratureConfig;
use affine_scherk::surfaces::{self, Jet2, Signature, SurfaceSpec};
use affine_scherk::weierstrass;

/// Status codes of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AscherkStatus {
    Ok = 0,
    DomainError = 1,
    SpacelikeViolation = 2,
    PoleProximity = 3,
    ToleranceNotMet = 4,
    SingularFactor = 5,
    ImaginaryResidue = 6,
    GuardViolation = 7,
    ZeroDenominator = 8,
    ScalarDomain = 9,
    EmptyMesh = 10,
    IoError = 11,
    InvalidArgument = 12,
    NullPointer = 13,
}

impl From<&Error> for AscherkStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Domain(_) => AscherkStatus::DomainError,
            Error::SpacelikeViolation { .. } => AscherkStatus::SpacelikeViolation,
            Error::PoleProximity { .. } => AscherkStatus::PoleProximity,
            Error::ToleranceNotMet { .. } => AscherkStatus::ToleranceNotMet,
            Error::SingularFactor { .. } => AscherkStatus::SingularFactor,
            Error::ImaginaryResidue { .. } => AscherkStatus::ImaginaryResidue,
            Error::GuardViolation { .. } => AscherkStatus::GuardViolation,
            Error::ZeroDenominator => AscherkStatus::ZeroDenominator,
            Error::ScalarDomain { .. } => AscherkStatus::ScalarDomain,
            Error::EmptyMesh => AscherkStatus::EmptyMesh,
            Error::Io(_) => AscherkStatus::IoError,
            Error::InvalidArgument(_) => AscherkStatus::InvalidArgument,
        }
    }
}

/// Surface family selector.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AscherkSignature {
    Euclidean = 0,
    Lorentz = 1,
    BornInfeldWick = 2,
}

impl From<AscherkSignature> for Signature {
    fn from(s: AscherkSignature) -> Self {
        match s {
            AscherkSignature::Euclidean => Signature::Euclidean,
            AscherkSignature::Lorentz => Signature::Lorentz,
            AscherkSignature::BornInfeldWick => Signature::BornInfeldWick,
        }
    }
}

/// A complex number as a re/im pair.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AscherkComplex {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for AscherkComplex {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<AscherkComplex> for Complex64 {
    fn from(z: AscherkComplex) -> Self {
        Complex64::new(z.re, z.im)
    }
}

/// Second-order jet of the height function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AscherkJet2 {
    pub phi: f64,
    pub phi_x: f64,
    pub phi_y: f64,
    pub phi_xx: f64,
    pub phi_xy: f64,
    pub phi_yy: f64,
}

impl From<Jet2> for AscherkJet2 {
    fn from(j: Jet2) -> Self {
        Self {
            phi: j.phi,
            phi_x: j.phi_x,
            phi_y: j.phi_y,
            phi_xx: j.phi_xx,
            phi_xy: j.phi_xy,
            phi_yy: j.phi_yy,
        }
    }
}

impl From<&AscherkJet2> for Jet2 {
    fn from(j: &AscherkJet2) -> Self {
        Jet2 {
            phi: j.phi,
            phi_x: j.phi_x,
            phi_y: j.phi_y,
            phi_xx: j.phi_xx,
            phi_xy: j.phi_xy,
            phi_yy: j.phi_yy,
        }
    }
}

/// Chart point produced by the contour integration.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AscherkWePoint {
    pub xi: AscherkComplex,
    pub x: f64,
    pub y: f64,
    pub phi: f64,
    pub est_error: f64,
}

/// Quadrature tolerances and budgets.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AscherkQuadConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
    pub pole_clearance: f64,
}

impl From<&AscherkQuadConfig> for QuadratureConfig {
    fn from(c: &AscherkQuadConfig) -> Self {
        QuadratureConfig {
            abs_tol: c.abs_tol,
            rel_tol: c.rel_tol,
            max_subdivisions: c.max_subdivisions,
            pole_clearance: c.pole_clearance,
        }
    }
}

fn spec_of(signature: AscherkSignature, a: f64) -> Result<SurfaceSpec, AscherkStatus> {
    SurfaceSpec::new(a, signature.into()).map_err(|e| AscherkStatus::from(&e))
}

macro_rules! write_out {
    ($ptr:expr, $value:expr) => {{
        if $ptr.is_null() {
            return AscherkStatus::NullPointer;
        }
        unsafe { *$ptr = $value };
    }};
}

/// Library version as a static C string.
#[no_mangle]
pub extern "C" fn ascherk_version() -> *const c_char {
    static VERSION: &CStr =
        match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
            Ok(s) => s,
            Err(_) => unreachable!(),
        };
    VERSION.as_ptr()
}

/// Static human-readable description of a status code.
#[no_mangle]
pub extern "C" fn ascherk_status_message(status: AscherkStatus) -> *const c_char {
    let msg: &CStr = match status {
        AscherkStatus::Ok => c"ok",
        AscherkStatus::DomainError => c"evaluation point violates a domain precondition",
        AscherkStatus::SpacelikeViolation => c"gradient left the spacelike unit disc",
        AscherkStatus::PoleProximity => c"too close to a pole of the Weierstrass data",
        AscherkStatus::ToleranceNotMet => c"adaptive quadrature exhausted its budget",
        AscherkStatus::SingularFactor => c"a product factor vanishes",
        AscherkStatus::ImaginaryResidue => c"nominally real series kept an imaginary part",
        AscherkStatus::GuardViolation => c"series convergence guard rejected the point",
        AscherkStatus::ZeroDenominator => c"probability normalization denominator is zero",
        AscherkStatus::ScalarDomain => c"scalar-mode parameter left (-1, 1)",
        AscherkStatus::EmptyMesh => c"no grid node lies in the surface domain",
        AscherkStatus::IoError => c"file input/output failed",
        AscherkStatus::InvalidArgument => c"malformed argument",
        AscherkStatus::NullPointer => c"required pointer argument was null",
    };
    msg.as_ptr()
}

/// Closed-form height. Real signatures only; the wick surface is complex,
/// see `ascherk_wick_height`.
///
/// # Safety
/// Pointer arguments must be valid for reads/writes of their type for
/// the duration of the call. Null output pointers are rejected with
/// `NullPointer`; null inputs yield NaN/no-op where documented.
#[no_mangle]
pub unsafe extern "C" fn ascherk_height(
    signature: AscherkSignature,
    a: f64,
    x: f64,
    y: f64,
    out: *mut f64,
) -> AscherkStatus {
    let spec = match spec_of(signature, a) {
        Ok(s) => s,
        Err(st) => return st,
    };
    match surfaces::height(&spec, x, y) {
        Ok(h) => {
            write_out!(out, h);
            AscherkStatus::Ok
        }
        Err(e) => AscherkStatus::from(&e),
    }
}

/// Complex wick-rotated height with the principal-branch diagnostic.
///
/// # Safety
/// Pointer arguments must be valid for reads/writes of their type for
/// the duration of the call. Null output pointers are rejected with
/// `NullPointer`; null inputs yield NaN/no-op where documented.
#[no_mangle]
pub unsafe extern "C" fn ascherk_wick_height(
    a: f64,
    x: f64,
    y: f64,
    out: *mut AscherkComplex,
    branch_warning: *mut bool,
) -> AscherkStatus {
    match surfaces::wick_height(a, x, y) {
        Ok(w) => {
            write_out!(out, w.value.into());
            if !branch_warning.is_null() {
                unsafe { *branch_warning = w.branch_warning };
            }
            AscherkStatus::Ok
        }
        Err(e) => AscherkStatus::from(&e),
    }
}

/// Exact closed-form jet (no finite differences).
///
/// # Safety
/// Pointer arguments must be valid for reads/writes of their type for
/// the duration of the call. Null output pointers are rejected with
/// `NullPointer`; null inputs yield NaN/no-op where documented.
#[no_mangle]
pub unsafe extern "C" fn ascherk_analytic_jet(
    signature: AscherkSignature,
    a: f64,
    x: f64,
    y: f64,
    out: *mut AscherkJet2,
) -> AscherkStatus {
    let spec = match spec_of(signature, a) {
        Ok(s) => s,
        Err(st) => return st,
    };
    match surfaces::analytic_jet(&spec, x, y) {
        Ok(j) => {
            write_out!(out, j.into());
            AscherkStatus::Ok
        }
        Err(e) => AscherkStatus::from(&e),
    }
}

/// Minimal-surface residual of a jet; NaN on a null pointer.
///
/// # Safety
/// Pointer arguments must be valid for reads/writes of their type for
/// the duration of the call. Null output pointers are rejected with
/// `NullPointer`; null inputs yield NaN/no-op where documented.
#[no_mangle]
pub unsafe extern "C" fn ascherk_minimal_residual(jet: *const AscherkJet2) -> f64 {
    if jet.is_null() {
        return f64::NAN;
    }
    surfaces::minimal_residual(&Jet2::from(unsafe { &*jet }))
}

/// Maximal-surface residual; fails unless the jet is spacelike.
///
/// # Safety
/// Pointer arguments must be valid for reads/writes of their type for
/// the duration of the call. Null output pointers are rejected with
/// `NullPointer`; null inputs yield NaN/no-op where documented.
#[no_mangle]
pub unsafe extern "C" fn ascherk_maximal_residual(
    jet: *const AscherkJet2,
    out: *mut f64,
) -> AscherkStatus {
    if jet.is_null() {
        return AscherkStatus::NullPointer;
    }
    match surfaces::maximal_residual(&Jet2::from(unsafe { &*jet })) {
        Ok(r) => {
            write_out!(out, r);
            AscherkStatus::Ok
        }
        Err(e) => AscherkStatus::from(&e),
    }
}

/// Born-Infeld soliton residual of a jet; NaN on a null pointer.
///
/// # Safety
/// Pointer arguments must be valid for reads/writes of their type for
/// the duration of the call. Null output pointers are rejected with
/// `NullPointer`; null inputs yield NaN/no-op where documented.
#[no_mangle]
pub unsafe extern "C" fn ascherk_born_infeld_residual(jet: *const AscherkJet2) -> f64 {
    if jet.is_null() {
        return f64::NAN;
    }
    surfaces::born_infeld_residual(&Jet2::from(unsafe { &*jet }))
}

/// Domain membership with an explicit safety margin.
#[no_mangle]
pub extern "C" fn ascherk_in_domain(
    signature: AscherkSignature,
    a: f64,
    x: f64,
    y: f64,
    delta: f64,
) -> bool {
    match spec_of(signature, a) {
        Ok(spec) => surfaces::in_domain_with_margin(&spec, x, y, delta),
        Err(_) => false,
    }
}

/// The corrected meromorphic Weierstrass data R(w).
///
/// # Safety
/// Pointer arguments must be valid for reads/writes of their type for
/// the duration of the call. Null output pointers are rejected with
/// `NullPointer`; null inputs yield NaN/no-op where documented.
#[no_mangle]
pub unsafe extern "C" fn ascherk_weierstrass_r(
    signature: AscherkSignature,
    a: f64,
    w: AscherkComplex,
    out: *mut AscherkComplex,
) -> AscherkStatus {
    let spec = match spec_of(signature, a) {
        Ok(s) => s,
        Err(st) => return st,
    };
    match weierstrass::weierstrass_r(&spec, w.into()) {
        Ok(r) => {
            write_out!(out, r.into());
            AscherkStatus::Ok
        }
        Err(e) => AscherkStatus::from(&e),
    }
}

/// The four unit-modulus poles of R; `out` must hold four entries.
///
/// # Safety
/// Pointer arguments must be valid for reads/writes of their type for
/// the duration of the call. Null output pointers are rejected with
/// `NullPointer`; null inputs yield NaN/no-op where documented.
#[no_mangle]
pub unsafe extern "C" fn ascherk_umbilic_poles(
    signature: AscherkSignature,
    a: f64,
    out: *mut AscherkComplex,
) -> AscherkStatus {
    if out.is_null() {
        return AscherkStatus::NullPointer;
    }
    let spec = match spec_of(signature, a) {
        Ok(s) => s,
        Err(st) => return st,
    };
    let poles = weierstrass::umbilic_poles(&spec);
    for (i, p) in poles.into_iter().enumerate() {
        unsafe { *out.add(i) = p.into() };
    }
    AscherkStatus::Ok
}

/// Default quadrature configuration (1e-10 tolerances, 2000 subdivisions,
/// 1e-2 pole clearance).
#[no_mangle]
pub extern "C" fn ascherk_quad_config_default() -> AscherkQuadConfig {
    let c = QuadratureConfig::default();
    AscherkQuadConfig {
        abs_tol: c.abs_tol,
        rel_tol: c.rel_tol,
        max_subdivisions: c.max_subdivisions,
        pole_clearance: c.pole_clearance,
    }
}

/// Integrate the Weierstrass-Enneper representation along `[0, xi]`.
/// A null config selects the defaults.
///
/// # Safety
/// Pointer arguments must be valid for reads/writes of their type for
/// the duration of the call. Null output pointers are rejected with
/// `NullPointer`; null inputs yield NaN/no-op where documented.
#[no_mangle]
pub unsafe extern "C" fn ascherk_we_integrate(
    signature: AscherkSignature,
    a: f64,
    xi: AscherkComplex,
    cfg: *const AscherkQuadConfig,
    out: *mut AscherkWePoint,
) -> AscherkStatus {
    let spec = match spec_of(signature, a) {
        Ok(s) => s,
        Err(st) => return st,
    };
    let cfg = if cfg.is_null() {
        QuadratureConfig::default()
    } else {
        QuadratureConfig::from(unsafe { &*cfg })
    };
    match weierstrass::we_integrate(&spec, xi.into(), &cfg) {
        Ok(p) => {
            write_out!(
                out,
                AscherkWePoint {
                    xi: p.xi.into(),
                    x: p.x,
                    y: p.y,
                    phi: p.phi,
                    est_error: p.est_error,
                }
            );
            AscherkStatus::Ok
        }
        Err(e) => AscherkStatus::from(&e),
    }
}

/// Euclidean Ramanujan route; `tail` (optional) receives the truncation
/// estimate.
///
/// # Safety
/// Pointer arguments must be valid for reads/writes of their type for
/// the duration of the call. Null output pointers are rejected with
/// `NullPointer`; null inputs yield NaN/no-op where documented.
#[no_mangle]
pub unsafe extern "C" fn ascherk_affine_ramanujan(
    a: f64,
    x: f64,
    y: f64,
    terms: usize,
    value: *mut f64,
    tail: *mut f64,
) -> AscherkStatus {
    match identities::affine_ramanujan(a, x, y, terms) {
        Ok(sv) => {
            write_out!(value, sv.value);
            if !tail.is_null() {
                unsafe { *tail = sv.tail_estimate };
            }
            AscherkStatus::Ok
        }
        Err(e) => AscherkStatus::from(&e),
    }
}

/// Lorentz Ramanujan route.
///
/// # Safety
/// Pointer arguments must be valid for reads/writes of their type for
/// the duration of the call. Null output pointers are rejected with
/// `NullPointer`; null inputs yield NaN/no-op where documented.
#[no_mangle]
pub unsafe extern "C" fn ascherk_lorentz_ramanujan(
    a: f64,
    x: f64,
    y: f64,
    terms: usize,
    value: *mut f64,
    tail: *mut f64,
) -> AscherkStatus {
    match identities::lorentz_ramanujan(a, x, y, terms) {
        Ok(sv) => {
            write_out!(value, sv.value);
            if !tail.is_null() {
                unsafe { *tail = sv.tail_estimate };
            }
            AscherkStatus::Ok
        }
        Err(e) => AscherkStatus::from(&e),
    }
}

/// Truncated Dirichlet series P(s, p).
///
/// # Safety
/// Pointer arguments must be valid for reads/writes of their type for
/// the duration of the call. Null output pointers are rejected with
/// `NullPointer`; null inputs yield NaN/no-op where documented.
#[no_mangle]
pub unsafe extern "C" fn ascherk_dirichlet_p(
    s: f64,
    p: f64,
    terms: usize,
    out: *mut f64,
) -> AscherkStatus {
    match identities::dirichlet_p(s, p, terms) {
        Ok(v) => {
            write_out!(out, v);
            AscherkStatus::Ok
        }
        Err(e) => AscherkStatus::from(&e),
    }
}

/// Truncated Dirichlet series T(s, b).
///
/// # Safety
/// Pointer arguments must be valid for reads/writes of their type for
/// the duration of the call. Null output pointers are rejected with
/// `NullPointer`; null inputs yield NaN/no-op where documented.
#[no_mangle]
pub unsafe extern "C" fn ascherk_dirichlet_t(
    s: f64,
    b: f64,
    terms: usize,
    out: *mut f64,
) -> AscherkStatus {
    match identities::dirichlet_t(s, b, terms) {
        Ok(v) => {
            write_out!(out, v);
            AscherkStatus::Ok
        }
        Err(e) => AscherkStatus::from(&e),
    }
}

/// Height via the Dirichlet expansion; `clamp_guard` selects the shrinking
/// guard policy instead of strict rejection.
///
/// # Safety
/// Pointer arguments must be valid for reads/writes of their type for
/// the duration of the call. Null output pointers are rejected with
/// `NullPointer`; null inputs yield NaN/no-op where documented.
#[no_mangle]
pub unsafe extern "C" fn ascherk_height_via_dirichlet(
    a: f64,
    x: f64,
    y: f64,
    outer_terms: usize,
    inner_terms: usize,
    clamp_guard: bool,
    value: *mut f64,
    tail: *mut f64,
) -> AscherkStatus {
    let cfg = SeriesConfig {
        outer_terms,
        inner_terms,
        guard: if clamp_guard {
            GuardPolicy::Clamp
        } else {
            GuardPolicy::Strict
        },
    };
    match identities::height_via_dirichlet(a, x, y, &cfg) {
        Ok(sv) => {
            write_out!(value, sv.value);
            if !tail.is_null() {
                unsafe { *tail = sv.tail_estimate };
            }
            AscherkStatus::Ok
        }
        Err(e) => AscherkStatus::from(&e),
    }
}

/// Forward hodographic map (gradient variables to chart pair).
///
/// # Safety
/// Pointer arguments must be valid for reads/writes of their type for
/// the duration of the call. Null output pointers are rejected with
/// `NullPointer`; null inputs yield NaN/no-op where documented.
#[no_mangle]
pub unsafe extern "C" fn ascherk_hodograph_forward(
    signature: AscherkSignature,
    u: AscherkComplex,
    v: AscherkComplex,
    first: *mut AscherkComplex,
    second: *mut AscherkComplex,
) -> AscherkStatus {
    match weierstrass::hodograph_forward(signature.into(), u.into(), v.into()) {
        Ok(pair) => {
            write_out!(first, pair.first.into());
            write_out!(second, pair.second.into());
            AscherkStatus::Ok
        }
        Err(e) => AscherkStatus::from(&e),
    }
}

/// Inverse hodographic map.
///
/// # Safety
/// Pointer arguments must be valid for reads/writes of their type for
/// the duration of the call. Null output pointers are rejected with
/// `NullPointer`; null inputs yield NaN/no-op where documented.
#[no_mangle]
pub unsafe extern "C" fn ascherk_hodograph_inverse(
    signature: AscherkSignature,
    xi: AscherkComplex,
    xibar: AscherkComplex,
    u: *mut AscherkComplex,
    v: *mut AscherkComplex,
) -> AscherkStatus {
    match weierstrass::hodograph_inverse(signature.into(), xi.into(), xibar.into()) {
        Ok((uu, vv)) => {
            write_out!(u, uu.into());
            write_out!(v, vv.into());
            AscherkStatus::Ok
        }
        Err(e) => AscherkStatus::from(&e),
    }
}

/// Opaque logarithmic-distribution table. Construct with
/// `ascherk_pmf_new`, inspect with the accessors, release with
/// `ascherk_pmf_free`.
pub struct AscherkPmf {
    table: PmfTable,
}

/// Build a PMF table. `scalar_mode = false` selects the distributive
/// (split) reading. On success the handle is owned by the caller.
///
/// # Safety
/// Pointer arguments must be valid for reads/writes of their type for
/// the duration of the call. Null output pointers are rejected with
/// `NullPointer`; null inputs yield NaN/no-op where documented.
#[no_mangle]
pub unsafe extern "C" fn ascherk_pmf_new(
    a: f64,
    x: f64,
    y: f64,
    n: usize,
    j_max: usize,
    scalar_mode: bool,
    out: *mut *mut AscherkPmf,
) -> AscherkStatus {
    if out.is_null() {
        return AscherkStatus::NullPointer;
    }
    let mode = if scalar_mode {
        PmfMode::Scalar
    } else {
        PmfMode::Split
    };
    match logdist::pmf(a, x, y, n, j_max, mode) {
        Ok(table) => {
            let handle = Box::into_raw(Box::new(AscherkPmf { table }));
            unsafe { *out = handle };
            AscherkStatus::Ok
        }
        Err(e) => AscherkStatus::from(&e),
    }
}

/// Number of tabulated masses.
///
/// # Safety
/// Pointer arguments must be valid for reads/writes of their type for
/// the duration of the call. Null output pointers are rejected with
/// `NullPointer`; null inputs yield NaN/no-op where documented.
#[no_mangle]
pub unsafe extern "C" fn ascherk_pmf_len(pmf: *const AscherkPmf) -> usize {
    if pmf.is_null() {
        return 0;
    }
    unsafe { &*pmf }.table.f.len()
}

/// Mass `f(j)` for 1-based `j`; NaN out of range.
///
/// # Safety
/// Pointer arguments must be valid for reads/writes of their type for
/// the duration of the call. Null output pointers are rejected with
/// `NullPointer`; null inputs yield NaN/no-op where documented.
#[no_mangle]
pub unsafe extern "C" fn ascherk_pmf_value(pmf: *const AscherkPmf, j: usize) -> f64 {
    if pmf.is_null() || j == 0 {
        return f64::NAN;
    }
    unsafe { &*pmf }
        .table
        .f
        .get(j - 1)
        .copied()
        .unwrap_or(f64::NAN)
}

/// Total tabulated mass (approaches 1 as the table grows).
///
/// # Safety
/// Pointer arguments must be valid for reads/writes of their type for
/// the duration of the call. Null output pointers are rejected with
/// `NullPointer`; null inputs yield NaN/no-op where documented.
#[no_mangle]
pub unsafe extern "C" fn ascherk_pmf_cumulative(pmf: *const AscherkPmf) -> f64 {
    if pmf.is_null() {
        return f64::NAN;
    }
    unsafe { &*pmf }.table.cumulative
}

/// Geometric bound on the truncated mass.
///
/// # Safety
/// Pointer arguments must be valid for reads/writes of their type for
/// the duration of the call. Null output pointers are rejected with
/// `NullPointer`; null inputs yield NaN/no-op where documented.
#[no_mangle]
pub unsafe extern "C" fn ascherk_pmf_tail_bound(pmf: *const AscherkPmf) -> f64 {
    if pmf.is_null() {
        return f64::NAN;
    }
    unsafe { &*pmf }.table.tail_bound
}

/// Sign diagnostic: true iff every tabulated mass is non-negative.
///
/// # Safety
/// Pointer arguments must be valid for reads/writes of their type for
/// the duration of the call. Null output pointers are rejected with
/// `NullPointer`; null inputs yield NaN/no-op where documented.
#[no_mangle]
pub unsafe extern "C" fn ascherk_pmf_nonneg(pmf: *const AscherkPmf) -> bool {
    if pmf.is_null() {
        return false;
    }
    unsafe { &*pmf }.table.nonneg
}

/// Release a PMF handle. Null is a no-op; a handle must not be freed twice.
///
/// # Safety
/// Pointer arguments must be valid for reads/writes of their type for
/// the duration of the call. Null output pointers are rejected with
/// `NullPointer`; null inputs yield NaN/no-op where documented.
#[no_mangle]
pub unsafe extern "C" fn ascherk_pmf_free(pmf: *mut AscherkPmf) {
    if !pmf.is_null() {
        drop(unsafe { Box::from_raw(pmf) });
    }
}
