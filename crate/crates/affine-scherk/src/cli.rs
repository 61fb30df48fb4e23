//! Library-side implementations of the CLI commands. Each returns a
//! [`RunReport`]; the binary serializes it and exits nonzero when a check
//! fails. Keeping the logic here makes every command testable in-process.

use std::path::Path;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::identities::{self, SeriesConfig};
use crate::logdist::{self, PmfMode};
use crate::meshio::{self, ExportFormat};
use crate::quad::QuadratureConfig;
use crate::report::{Check, RunReport};
use crate::surfaces::{self, Signature, SurfaceSpec};
use crate::verify;
use crate::weierstrass::{self, RVariant, ZVariant};

fn spec_inputs(report: &mut RunReport, spec: &SurfaceSpec) {
    report.input("signature", spec.signature.as_str());
    report.input("a", spec.a);
}

/// `height`: evaluate the closed-form height (or complex wick height).
pub fn cmd_height(spec: &SurfaceSpec, x: f64, y: f64) -> Result<RunReport> {
    let mut report = RunReport::new("height");
    spec_inputs(&mut report, spec);
    report.input("x", x).input("y", y);
    report.result("in_domain", surfaces::in_domain(spec, x, y));
    match spec.signature {
        Signature::BornInfeldWick => {
            let w = surfaces::wick_height(spec.a, x, y)?;
            report.result_f64("height_re", w.value.re);
            report.result_f64("height_im", w.value.im);
            if w.branch_warning {
                report.warn("log argument hugs the negative real axis; principal branch unstable");
            }
        }
        _ => {
            let h = surfaces::height(spec, x, y)?;
            report.result_f64("height", h);
        }
    }
    Ok(report)
}

/// `residual`: sweep the PDE residual of the analytic jet over a grid and
/// report the worst in-domain node.
///
/// The default mask margin (0.05 on the cosine / spacelike slack) keeps the
/// f64 evaluation of the residual well-conditioned; nodes nearer the
/// singular lines produce tan^4-scale cancellation noise that says nothing
/// about the surface.
pub fn cmd_residual(
    spec: &SurfaceSpec,
    grid: usize,
    range: f64,
    delta: f64,
    tol: f64,
) -> Result<RunReport> {
    if grid < 2 {
        return Err(Error::InvalidArgument("grid must be >= 2".into()));
    }
    if range <= 0.0 || range.is_nan() {
        return Err(Error::InvalidArgument("range must be positive".into()));
    }
    let mut report = RunReport::new("residual");
    spec_inputs(&mut report, spec);
    report
        .input("grid", grid)
        .input("range", range)
        .input("delta", delta)
        .input("tol", tol);

    let residual_name = match spec.signature {
        Signature::Euclidean => "minimal",
        Signature::Lorentz => "maximal",
        Signature::BornInfeldWick => "born_infeld",
    };
    let mut worst = 0.0f64;
    let mut kept = 0usize;
    for j in 0..grid {
        for i in 0..grid {
            let x = -range + 2.0 * range * i as f64 / (grid - 1) as f64;
            let y = -range + 2.0 * range * j as f64 / (grid - 1) as f64;
            if !surfaces::in_domain_with_margin(spec, x, y, delta) {
                continue;
            }
            let jet = surfaces::analytic_jet(spec, x, y)?;
            let r = match spec.signature {
                Signature::Euclidean => surfaces::minimal_residual(&jet),
                Signature::Lorentz => surfaces::maximal_residual(&jet)?,
                Signature::BornInfeldWick => surfaces::born_infeld_residual(&jet),
            };
            worst = worst.max(r.abs());
            kept += 1;
        }
    }
    if kept == 0 {
        return Err(Error::EmptyMesh);
    }
    report.result("residual", residual_name);
    report.result("nodes_checked", kept);
    report.result_f64("max_abs_residual", worst);
    report.push_check(Check::le("max_abs_residual", worst, tol));
    Ok(report)
}

/// `wedata`: integrate the Weierstrass-Enneper representation at one chart
/// point and cross-check against the closed-form height. With `as_printed`
/// the report adds the audited discrepancies of the strict-source height
/// integrand, the printed `R`, and the printed lambda/mu closed forms.
pub fn cmd_wedata(
    spec: &SurfaceSpec,
    xi: Complex64,
    cfg: &QuadratureConfig,
    as_printed: bool,
    tol: f64,
) -> RunReport {
    let mut report = RunReport::new("wedata");
    spec_inputs(&mut report, spec);
    report
        .input("xi_re", xi.re)
        .input("xi_im", xi.im)
        .input("as_printed", as_printed);
    report
        .input("abs_tol", cfg.abs_tol)
        .input("rel_tol", cfg.rel_tol);

    let p = match weierstrass::we_integrate(spec, xi, cfg) {
        Ok(p) => p,
        Err(e) => {
            report.warn(format!("integration failed: {e}"));
            report.push_check(Check::le("integration_succeeded", f64::NAN, 0.0));
            return report;
        }
    };
    report.result_f64("x", p.x);
    report.result_f64("y", p.y);
    report.result_f64("phi", p.phi);
    report.result_f64("est_error", p.est_error);

    match surfaces::height(spec, p.x, p.y) {
        Ok(h) => {
            let dev = (p.phi - h).abs();
            report.result_f64("height_at_image", h);
            report.result_f64("cross_route_deviation", dev);
            report.push_check(Check::le("cross_route_deviation", dev, tol));
        }
        Err(e) => {
            report.warn(format!("chart image left the height domain: {e}"));
        }
    }

    if as_printed {
        audit_as_printed(&mut report, spec, xi, cfg);
    }
    report
}

fn audit_as_printed(
    report: &mut RunReport,
    spec: &SurfaceSpec,
    xi: Complex64,
    cfg: &QuadratureConfig,
) {
    if let Ok(strict) = weierstrass::we_integrate_strict_z(spec, xi, cfg) {
        report.result_f64("strict_z_phi", strict.phi);
        if let Ok(h) = surfaces::height(spec, strict.x, strict.y) {
            report.result_f64("strict_z_deviation", (strict.phi - h).abs());
        }
    }
    if let Ok(printed) = weierstrass::we_integrate_path(
        spec,
        &[xi],
        cfg,
        RVariant::AsPrinted,
        ZVariant::OmegaWeighted,
    ) {
        report.result_f64("printed_r_phi", printed.phi);
        if let Ok(h) = surfaces::height(spec, printed.x, printed.y) {
            report.result_f64("printed_r_deviation", (printed.phi - h).abs());
        }
    }
    let closed_form = match spec.signature {
        Signature::Lorentz => weierstrass::mu_data(spec.a, xi)
            .map(|m| (m.x, m.y, m.phi, m.vs_integrated, m.branch_warnings)),
        _ => weierstrass::lambda_data(spec.a, xi)
            .map(|l| (l.x, l.y, l.phi, l.vs_integrated, l.branch_warnings)),
    };
    let label = if spec.signature == Signature::Lorentz {
        "mu"
    } else {
        "lambda"
    };
    match closed_form {
        Ok((x, y, phi, dev, warnings)) => {
            report.result_f64(&format!("{label}_x"), x);
            report.result_f64(&format!("{label}_y"), y);
            report.result_f64(&format!("{label}_phi"), phi);
            report.result_f64(&format!("{label}_x_deviation"), dev.x_dev);
            report.result_f64(&format!("{label}_y_deviation"), dev.y_dev);
            report.result_f64(&format!("{label}_phi_deviation"), dev.phi_dev);
            report.result_f64(&format!("{label}_max_deviation"), dev.max());
            for w in warnings {
                report.warn(format!("{label}: {w}"));
            }
        }
        Err(e) => {
            report.warn(format!("{label} closed forms not evaluable here: {e}"));
        }
    }
}

/// `ramanujan`: truncation sweep of the product-identity route, errors
/// measured against the closed-form height.
pub fn cmd_ramanujan(
    spec: &SurfaceSpec,
    x: f64,
    y: f64,
    k_max: usize,
    tol: f64,
) -> Result<RunReport> {
    let mut report = RunReport::new("ramanujan");
    spec_inputs(&mut report, spec);
    report
        .input("x", x)
        .input("y", y)
        .input("K", k_max)
        .input("tol", tol);

    let h = surfaces::height(spec, x, y)?;
    report.result_f64("height", h);

    let eval = |k: usize| -> Result<crate::identities::SeriesValue> {
        match spec.signature {
            Signature::Euclidean => identities::affine_ramanujan(spec.a, x, y, k),
            Signature::Lorentz => identities::lorentz_ramanujan(spec.a, x, y, k),
            Signature::BornInfeldWick => Err(Error::Domain(
                "the ramanujan route is defined for the euclidean and lorentz signatures".into(),
            )),
        }
    };

    // decade sweep up to k_max
    let mut k = 100usize.min(k_max);
    loop {
        let sv = eval(k)?;
        report.result_f64(&format!("value_K_{k}"), sv.value);
        report.result_f64(&format!("error_K_{k}"), (sv.value - h).abs());
        for w in sv.warnings {
            report.warn(format!("K = {k}: {w}"));
        }
        if k == k_max {
            report.result_f64("value", sv.value);
            report.result_f64("error", (sv.value - h).abs());
            report.result_f64("tail_estimate", sv.tail_estimate);
            report.push_check(Check::le("final_error", (sv.value - h).abs(), tol));
            break;
        }
        k = (k * 10).min(k_max);
    }
    Ok(report)
}

/// `dirichlet`: the P/T-series route with a (K, N) refinement sweep and
/// guard diagnostics.
pub fn cmd_dirichlet(a: f64, x: f64, y: f64, cfg: &SeriesConfig, tol: f64) -> Result<RunReport> {
    let mut report = RunReport::new("dirichlet");
    report.input("a", a).input("x", x).input("y", y);
    report
        .input("K", cfg.outer_terms)
        .input("N", cfg.inner_terms);
    report.input(
        "guard",
        match cfg.guard {
            identities::GuardPolicy::Strict => "strict",
            identities::GuardPolicy::Clamp => "clamp",
        },
    );
    report.input("tol", tol);

    let spec = SurfaceSpec::euclidean(a);
    let h = surfaces::height(&spec, x, y)?;
    report.result_f64("height", h);

    // guard diagnostics at k = 1
    let t1 = logdist::ak_terms(a, x, y, 1)?;
    report.result_f64("guard_ratio_p1", t1.p);
    report.result_f64("guard_ratio_q1", t1.q.abs());

    for scale in [100usize, 10, 1] {
        let sub = SeriesConfig {
            outer_terms: (cfg.outer_terms / scale).max(1),
            inner_terms: (cfg.inner_terms / scale.min(2)).max(1),
            guard: cfg.guard,
        };
        let sv = identities::height_via_dirichlet(a, x, y, &sub)?;
        report.result_f64(
            &format!("value_K_{}_N_{}", sub.outer_terms, sub.inner_terms),
            sv.value,
        );
        report.result_f64(
            &format!("error_K_{}_N_{}", sub.outer_terms, sub.inner_terms),
            (sv.value - h).abs(),
        );
        if scale == 1 {
            report.result_f64("value", sv.value);
            report.result_f64("error", (sv.value - h).abs());
            report.result_f64("tail_estimate", sv.tail_estimate);
            for w in sv.warnings {
                report.warn(w);
            }
            report.push_check(Check::le("final_error", (sv.value - h).abs(), tol));
        }
    }
    Ok(report)
}

/// `pmf`: tabulate the logarithmic-distribution mass function in one or
/// both modes, check normalization against the tail bound, and optionally
/// write the tables out (split-mode CSV, all modes as one JSON document).
#[allow(clippy::too_many_arguments)]
pub fn cmd_pmf(
    a: f64,
    x: f64,
    y: f64,
    n: usize,
    j_max: Option<usize>,
    modes: &[PmfMode],
    csv_out: Option<&Path>,
    json_out: Option<&Path>,
) -> Result<RunReport> {
    let mut report = RunReport::new("pmf");
    report
        .input("a", a)
        .input("x", x)
        .input("y", y)
        .input("n", n);
    match j_max {
        Some(j) => report.input("J", j),
        None => report.input("J", "auto"),
    };

    let mut tables = std::collections::BTreeMap::new();
    for &mode in modes {
        let name = match mode {
            PmfMode::Split => "split",
            PmfMode::Scalar => "scalar",
        };
        let table = match j_max {
            Some(j) => logdist::pmf(a, x, y, n, j, mode)?,
            None => logdist::pmf_auto_j(a, x, y, n, 1e-9, mode)?,
        };
        report.result(&format!("{name}_j_max"), table.j_max);
        report.result_f64(&format!("{name}_cumulative"), table.cumulative);
        report.result_f64(&format!("{name}_tail_bound"), table.tail_bound);
        report.result(&format!("{name}_nonneg"), table.nonneg);
        report.result_f64(&format!("{name}_f1"), table.f[0]);
        if !table.nonneg {
            report.warn(format!(
                "{name} mode produced negative masses (sign diagnostic)"
            ));
        }
        report.push_check(Check::le(
            format!("{name}_normalization_defect"),
            (table.cumulative - 1.0).abs(),
            table.tail_bound + 1e-10,
        ));
        if mode == PmfMode::Split {
            if let Some(path) = csv_out {
                std::fs::write(path, table.to_csv())?;
                report.result("csv_path", path.display().to_string());
            }
        }
        tables.insert(name, table);
    }
    if let Some(path) = json_out {
        let doc = serde_json::to_string_pretty(&tables)
            .map_err(|e| Error::InvalidArgument(format!("table serialization failed: {e}")))?;
        std::fs::write(path, doc)?;
        report.result("json_path", path.display().to_string());
    }
    Ok(report)
}

/// `mesh`: sample a grid or chart patch and export it.
#[allow(clippy::too_many_arguments)]
pub fn cmd_mesh(
    spec: &SurfaceSpec,
    kind: &str,
    grid: usize,
    range: f64,
    radius: f64,
    n_r: usize,
    n_theta: usize,
    delta: f64,
    format: ExportFormat,
    out: &Path,
) -> Result<RunReport> {
    let mut report = RunReport::new("mesh");
    spec_inputs(&mut report, spec);
    report
        .input("kind", kind)
        .input("out", out.display().to_string());

    let mesh = match kind {
        "grid" => meshio::sample_grid_with_margin(
            spec,
            (-range, range),
            (-range, range),
            grid,
            grid,
            delta,
        )?,
        "patch" => meshio::we_patch(spec, radius, n_r, n_theta, &QuadratureConfig::default())?,
        other => {
            return Err(Error::InvalidArgument(format!(
                "unknown mesh kind '{other}' (expected grid | patch)"
            )))
        }
    };
    meshio::export(&mesh, format, out)?;
    report.result("vertices", mesh.vertices.len());
    report.result("faces", mesh.faces.len());
    if let Some(err) = mesh.meta.max_quad_error {
        report.result_f64("max_quad_error", err);
    }
    Ok(report)
}

/// `report`: the aggregated verification suite as one JSON document.
///
/// The suite runs twice and the two serializations are compared byte for
/// byte; that comparison is the determinism criterion, so the emitted
/// document carries all eleven entries.
pub fn cmd_report() -> (String, bool) {
    let first = verify::run_all();
    let second = verify::run_all();
    let bytes_first = verify::criteria_json(&first).pretty();
    let bytes_second = verify::criteria_json(&second).pretty();
    let identical = bytes_first == bytes_second;

    let determinism = verify::CriterionResult {
        id: 10,
        name: "report_determinism",
        checks: vec![Check::le(
            "repeat_run_byte_difference",
            if identical { 0.0 } else { 1.0 },
            0.0,
        )],
    };

    let mut all: Vec<verify::CriterionResult> = first;
    all.push(determinism);
    all.sort_by_key(|r| r.id);
    let json = verify::criteria_json(&all);
    let pass = all.iter().all(|r| r.pass());
    (json.pretty(), pass)
}

/// Pretty one-line summary for stderr alongside the JSON report.
pub fn summarize(report: &RunReport) -> String {
    let status = if report.passed() { "PASS" } else { "FAIL" };
    format!(
        "{} [{}] ({} checks, {} warnings)",
        report.command,
        status,
        report.checks.len(),
        report.warnings.len()
    )
}

/// Convert a report into the JSON string plus process exit code.
pub fn finish(report: &RunReport) -> (String, i32) {
    (report.to_json_string(), if report.passed() { 0 } else { 1 })
}

/// Shared helper for the binary: write or print a document.
pub fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

/// Parse a `--mode` argument into the set of PMF modes to run.
pub fn parse_pmf_modes(mode: &str) -> Result<Vec<PmfMode>> {
    match mode.to_ascii_lowercase().as_str() {
        "both" => Ok(vec![PmfMode::Split, PmfMode::Scalar]),
        other => Ok(vec![other.parse()?]),
    }
}

/// Every numeric default of the CLI in one block. An optional JSON config
/// file overrides these; explicit flags override both. No environment
/// variables are consulted.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Defaults {
    /// Outer truncation of the Ramanujan route.
    pub ramanujan_terms: usize,
    /// Outer / inner truncations of the Dirichlet route.
    pub dirichlet_outer_terms: usize,
    pub dirichlet_inner_terms: usize,
    /// Number of k-terms aggregated by the pmf command.
    pub pmf_terms: usize,
    /// Residual sweep: nodes per axis, half-width, conditioning margin.
    pub residual_grid: usize,
    pub residual_range: f64,
    pub residual_margin: f64,
    /// Domain mask margin for mesh sampling.
    pub domain_margin: f64,
    /// Check tolerances.
    pub residual_tol: f64,
    pub cross_route_tol: f64,
    pub ramanujan_tol: f64,
    pub dirichlet_tol: f64,
    /// Contour-integration settings.
    pub quad_abs_tol: f64,
    pub quad_rel_tol: f64,
    pub quad_max_subdivisions: usize,
    pub pole_clearance: f64,
}

impl Default for Defaults {
    fn default() -> Self {
        let quad = QuadratureConfig::default();
        Self {
            ramanujan_terms: 100_000,
            dirichlet_outer_terms: 10_000,
            dirichlet_inner_terms: 100,
            pmf_terms: 3,
            residual_grid: 41,
            residual_range: 1.0,
            residual_margin: 0.05,
            domain_margin: surfaces::DEFAULT_DOMAIN_MARGIN,
            residual_tol: 1e-9,
            cross_route_tol: 1e-6,
            ramanujan_tol: 2e-4,
            dirichlet_tol: 5e-4,
            quad_abs_tol: quad.abs_tol,
            quad_rel_tol: quad.rel_tol,
            quad_max_subdivisions: quad.max_subdivisions,
            pole_clearance: quad.pole_clearance,
        }
    }
}

impl Defaults {
    /// Compiled defaults, optionally overridden by a JSON config file.
    /// Unknown keys are rejected so typos do not silently fall back.
    pub fn load(config: Option<&Path>) -> Result<Self> {
        match config {
            None => Ok(Self::default()),
            Some(path) => {
                let text = std::fs::read_to_string(path)?;
                serde_json::from_str(&text).map_err(|e| {
                    Error::InvalidArgument(format!("config file {}: {e}", path.display()))
                })
            }
        }
    }

    pub fn quadrature(&self) -> QuadratureConfig {
        QuadratureConfig {
            abs_tol: self.quad_abs_tol,
            rel_tol: self.quad_rel_tol,
            max_subdivisions: self.quad_max_subdivisions,
            pole_clearance: self.pole_clearance,
        }
    }
}
