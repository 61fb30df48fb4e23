//! Command-line front-end: every verification route and exporter, with
//! machine-readable JSON reports. Exit code 0 iff all checks pass; 2 on
//! argument or domain errors.
//!
//! Numeric defaults live in one block ([`cli::Defaults`]); an optional
//! `--config file.json` overrides them, and explicit flags override both.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use affine_scherk::cli::{self, Defaults};
use affine_scherk::error::Result;
use affine_scherk::identities::{GuardPolicy, SeriesConfig};
use affine_scherk::meshio::ExportFormat;
use affine_scherk::report::RunReport;
use affine_scherk::surfaces::{Signature, SurfaceSpec};

#[derive(Parser)]
#[command(
    name = "affine-scherk",
    about = "Affine minimal translation surfaces: closed forms, Weierstrass-Enneper integration, series routes, and cross-route verification",
    version
)]
struct CliArgs {
    /// JSON file overriding the compiled numeric defaults
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SpecArgs {
    /// Surface family: euclidean | lorentz | wick
    #[arg(long, default_value = "euclidean")]
    signature: String,
    /// Shear parameter of the affine translation structure
    #[arg(long, default_value_t = 0.0)]
    a: f64,
}

impl SpecArgs {
    fn spec(&self) -> Result<SurfaceSpec> {
        let signature: Signature = self.signature.parse()?;
        SurfaceSpec::new(self.a, signature)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the closed-form height at a point
    Height {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 0.0)]
        x: f64,
        #[arg(long, default_value_t = 0.0)]
        y: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep the PDE residual of the analytic jet over a grid
    Residual {
        #[command(flatten)]
        spec: SpecArgs,
        /// Nodes per axis
        #[arg(long)]
        grid: Option<usize>,
        /// Half-width of the square sweep window
        #[arg(long)]
        range: Option<f64>,
        /// Mask margin on the cosine / spacelike slack (conditioning floor)
        #[arg(long)]
        delta: Option<f64>,
        /// Residual acceptance tolerance
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Integrate the Weierstrass-Enneper representation at a chart point
    Wedata {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 0.3)]
        xi_re: f64,
        #[arg(long, default_value_t = 0.0)]
        xi_im: f64,
        /// Audit the published closed forms and the strict-source integrand
        #[arg(long)]
        as_printed: bool,
        /// Cross-route tolerance
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Ramanujan product-identity route with a truncation sweep
    Ramanujan {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 0.2)]
        x: f64,
        #[arg(long, default_value_t = 0.3)]
        y: f64,
        /// Outer truncation order
        #[arg(long = "K")]
        k: Option<usize>,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dirichlet P/T series route
    Dirichlet {
        #[arg(long, default_value_t = 0.0)]
        a: f64,
        #[arg(long, default_value_t = 0.2)]
        x: f64,
        #[arg(long, default_value_t = 0.3)]
        y: f64,
        /// Outer truncation order
        #[arg(long = "K")]
        k: Option<usize>,
        /// Inner truncation order
        #[arg(long = "N")]
        n: Option<usize>,
        /// Convergence-guard policy: strict | clamp
        #[arg(long, default_value = "strict")]
        guard: String,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Logarithmic-distribution mass function table
    Pmf {
        #[arg(long, default_value_t = 1.0)]
        a: f64,
        #[arg(long, default_value_t = 0.2)]
        x: f64,
        #[arg(long, default_value_t = 0.3)]
        y: f64,
        /// Number of k-terms aggregated
        #[arg(long)]
        n: Option<usize>,
        /// Mass-table truncation; chosen from the tail bound when omitted
        #[arg(long = "J")]
        j: Option<usize>,
        /// split | scalar | both
        #[arg(long, default_value = "both")]
        mode: String,
        /// Write the split-mode table as CSV here
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Write the full table(s) as JSON here
        #[arg(long)]
        table_json: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample a surface mesh and export it
    Mesh {
        #[command(flatten)]
        spec: SpecArgs,
        /// grid | patch
        #[arg(long, default_value = "grid")]
        kind: String,
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long)]
        range: Option<f64>,
        /// Chart-patch radius in the unit disc
        #[arg(long, default_value_t = 0.6)]
        radius: f64,
        #[arg(long, default_value_t = 10)]
        n_r: usize,
        #[arg(long, default_value_t = 32)]
        n_theta: usize,
        /// Domain mask margin
        #[arg(long)]
        delta: Option<f64>,
        /// obj | csv | json
        #[arg(long, default_value = "obj")]
        format: String,
        /// Output file
        #[arg(long)]
        out: PathBuf,
        /// Where to write the run report (stdout otherwise)
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Run the full verification suite and emit the aggregate JSON
    Report {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn finish_report(report: RunReport, out: Option<PathBuf>) -> Result<ExitCode> {
    let (text, code) = cli::finish(&report);
    cli::emit(&text, out.as_deref())?;
    eprintln!("{}", cli::summarize(&report));
    Ok(ExitCode::from(code as u8))
}

fn run() -> Result<ExitCode> {
    let args = CliArgs::parse();
    let defaults = Defaults::load(args.config.as_deref())?;
    match args.command {
        Command::Height { spec, x, y, out } => {
            finish_report(cli::cmd_height(&spec.spec()?, x, y)?, out)
        }
        Command::Residual {
            spec,
            grid,
            range,
            delta,
            tol,
            out,
        } => {
            let report = cli::cmd_residual(
                &spec.spec()?,
                grid.unwrap_or(defaults.residual_grid),
                range.unwrap_or(defaults.residual_range),
                delta.unwrap_or(defaults.residual_margin),
                tol.unwrap_or(defaults.residual_tol),
            )?;
            finish_report(report, out)
        }
        Command::Wedata {
            spec,
            xi_re,
            xi_im,
            as_printed,
            tol,
            out,
        } => {
            let report = cli::cmd_wedata(
                &spec.spec()?,
                Complex64::new(xi_re, xi_im),
                &defaults.quadrature(),
                as_printed,
                tol.unwrap_or(defaults.cross_route_tol),
            );
            finish_report(report, out)
        }
        Command::Ramanujan {
            spec,
            x,
            y,
            k,
            tol,
            out,
        } => {
            let report = cli::cmd_ramanujan(
                &spec.spec()?,
                x,
                y,
                k.unwrap_or(defaults.ramanujan_terms),
                tol.unwrap_or(defaults.ramanujan_tol),
            )?;
            finish_report(report, out)
        }
        Command::Dirichlet {
            a,
            x,
            y,
            k,
            n,
            guard,
            tol,
            out,
        } => {
            let guard = match guard.to_ascii_lowercase().as_str() {
                "strict" => GuardPolicy::Strict,
                "clamp" => GuardPolicy::Clamp,
                other => {
                    return Err(affine_scherk::Error::InvalidArgument(format!(
                        "unknown guard policy '{other}' (expected strict | clamp)"
                    )))
                }
            };
            let cfg = SeriesConfig {
                outer_terms: k.unwrap_or(defaults.dirichlet_outer_terms),
                inner_terms: n.unwrap_or(defaults.dirichlet_inner_terms),
                guard,
            };
            let report = cli::cmd_dirichlet(a, x, y, &cfg, tol.unwrap_or(defaults.dirichlet_tol))?;
            finish_report(report, out)
        }
        Command::Pmf {
            a,
            x,
            y,
            n,
            j,
            mode,
            csv,
            table_json,
            out,
        } => {
            let modes = cli::parse_pmf_modes(&mode)?;
            let report = cli::cmd_pmf(
                a,
                x,
                y,
                n.unwrap_or(defaults.pmf_terms),
                j,
                &modes,
                csv.as_deref(),
                table_json.as_deref(),
            )?;
            finish_report(report, out)
        }
        Command::Mesh {
            spec,
            kind,
            grid,
            range,
            radius,
            n_r,
            n_theta,
            delta,
            format,
            out,
            report,
        } => {
            let format: ExportFormat = format.parse()?;
            let rep = cli::cmd_mesh(
                &spec.spec()?,
                &kind,
                grid.unwrap_or(defaults.residual_grid),
                range.unwrap_or(defaults.residual_range),
                radius,
                n_r,
                n_theta,
                delta.unwrap_or(defaults.domain_margin),
                format,
                &out,
            )?;
            finish_report(rep, report)
        }
        Command::Report { out } => {
            let (text, pass) = cli::cmd_report();
            cli::emit(&text, out.as_deref())?;
            eprintln!("report [{}]", if pass { "PASS" } else { "FAIL" });
            Ok(ExitCode::from(if pass { 0 } else { 1 }))
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
