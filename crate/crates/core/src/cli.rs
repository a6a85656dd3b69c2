//! Command-line front end. Every command writes machine-readable output to
//! stdout; exit codes are 0 on success, 1 on verification or accuracy
//! failure, 2 on invalid arguments or malformed input.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::value::RawValue;

use crate::error::{Error, Result};
use crate::kernel::{reproducing_kernel, CPoint};
use crate::rational::render;
use crate::symbols::{convention_report, CoeffTable, Family, Multiplier, SpaceParams, SymbolRep};
use crate::transform::{
    berezin_direct_with, berezin_spectral, fmt_float, DirectOptions, GridFunction2D, DEFAULT_MARGIN,
};
use crate::verify::{raw_number, run_suite, SuiteId};

/// Largest level accepted by the exact-arithmetic commands.
pub const MAX_M: u32 = 64;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "bargmann", version, about = "Landau-level kernels, symbols and Berezin transforms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, clap::Args)]
struct Level {
    /// Complex dimension.
    #[arg(long, default_value_t = 1)]
    n: u32,
    /// Landau level.
    #[arg(long, default_value_t = 0)]
    m: u32,
}

impl Level {
    fn params(self) -> Result<SpaceParams> {
        if self.m > MAX_M {
            return Err(Error::InvalidParameter(format!("m = {} exceeds the limit {MAX_M}", self.m)));
        }
        SpaceParams::new(self.n, self.m)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Spectral,
    Direct,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact coefficient tables and the convention report.
    Coeffs {
        #[command(flatten)]
        level: Level,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run a verification suite and print its JSON report.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: SuiteId,
        #[command(flatten)]
        level: Level,
        /// Override every error tolerance of the suite.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Berezin transform of a grid file.
    Transform {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
        #[arg(long, default_value_t = 0)]
        m: u32,
        #[arg(long, value_enum, default_value_t = Method::Spectral)]
        method: Method,
        #[arg(long, value_parser = parse_rep, default_value = "oracle")]
        rep: SymbolRep,
        /// Minimal distance from evaluation nodes to the grid boundary (direct method).
        #[arg(long, default_value_t = DEFAULT_MARGIN)]
        margin: f64,
    },
    /// Evaluate the reproducing kernel K_m(z, w).
    Kernel {
        #[command(flatten)]
        level: Level,
        /// 2n real coordinates of z.
        #[arg(long, num_args = 1.., allow_negative_numbers = true, required = true)]
        z: Vec<f64>,
        /// 2n real coordinates of w.
        #[arg(long, num_args = 1.., allow_negative_numbers = true, required = true)]
        w: Vec<f64>,
    },
    /// Evaluate the symbol ĥ_m at a frequency of the given norm.
    Symbol {
        #[command(flatten)]
        level: Level,
        #[arg(long, allow_negative_numbers = true)]
        xi_norm: f64,
        #[arg(long, value_parser = parse_rep, default_value = "oracle")]
        rep: SymbolRep,
    },
}

fn parse_suite(s: &str) -> std::result::Result<SuiteId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_rep(s: &str) -> std::result::Result<SymbolRep, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn exit_code(error: &Error) -> i32 {
    match error {
        Error::InvalidParameter(_)
        | Error::Domain { .. }
        | Error::DimensionMismatch { .. }
        | Error::MalformedGrid(_)
        | Error::Json(_) => EXIT_USAGE,
        _ => EXIT_FAILURE,
    }
}

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Coeffs { level, format } => {
            let params = level.params()?;
            let text = match format {
                Format::Json => coeffs_json(params),
                Format::Csv => coeffs_csv(params),
            };
            out.write_all(text.as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Verify { suite, level, tol } => {
            if let Some(t) = tol {
                if !(t.is_finite() && t >= 0.0) {
                    return Err(Error::InvalidParameter(format!("tolerance must be finite and >= 0, got {t}")));
                }
            }
            let report = run_suite(suite, level.params()?, tol);
            writeln!(out, "{}", report.to_json())?;
            Ok(if report.pass() { EXIT_OK } else { EXIT_FAILURE })
        }
        Command::Transform {
            input,
            output,
            m,
            method,
            rep,
            margin,
        } => {
            Level { n: 1, m }.params()?;
            let phi = GridFunction2D::read(&input).map_err(|e| match e {
                Error::Io(io) => Error::MalformedGrid(format!("{}: {io}", input.display())),
                other => other,
            })?;
            let result = match method {
                Method::Spectral => berezin_spectral(&phi, m, rep)?,
                Method::Direct => direct_on_nodes(&phi, m, rep, margin)?,
            };
            for warning in &result.meta.warnings {
                writeln!(err, "warning: {warning}")?;
            }
            result.write(&output)?;
            Ok(EXIT_OK)
        }
        Command::Kernel { level, z, w } => {
            let params = level.params()?;
            let expected = 2 * params.n() as usize;
            for coords in [&z, &w] {
                if coords.len() != expected {
                    return Err(Error::DimensionMismatch {
                        expected,
                        got: coords.len(),
                    });
                }
            }
            let value = reproducing_kernel(params, &CPoint::from_reals(&z)?, &CPoint::from_reals(&w)?)?;
            writeln!(out, "{}", complex_json(params, value))?;
            Ok(EXIT_OK)
        }
        Command::Symbol { level, xi_norm, rep } => {
            let params = level.params()?;
            if !(xi_norm.is_finite() && xi_norm >= 0.0) {
                return Err(crate::error::domain("symbol", format!("|ξ| must be finite and >= 0, got {xi_norm}")));
            }
            let value = Multiplier::new(params, rep).eval(xi_norm * xi_norm);
            #[derive(Serialize)]
            struct Out {
                n: u32,
                m: u32,
                rep: &'static str,
                xi_norm: Box<RawValue>,
                value: Box<RawValue>,
            }
            let o = Out {
                n: params.n(),
                m: params.m(),
                rep: rep.as_str(),
                xi_norm: number(xi_norm),
                value: number(value),
            };
            writeln!(out, "{}", serde_json::to_string(&o)?)?;
            Ok(EXIT_OK)
        }
    }
}

fn number(x: f64) -> Box<RawValue> {
    raw_number(x).unwrap_or_else(|| RawValue::from_string("null".into()).expect("valid JSON"))
}

fn complex_json(params: SpaceParams, value: Complex64) -> String {
    #[derive(Serialize)]
    struct Out {
        n: u32,
        m: u32,
        re: Box<RawValue>,
        im: Box<RawValue>,
    }
    serde_json::to_string(&Out {
        n: params.n(),
        m: params.m(),
        re: number(value.re),
        im: number(value.im),
    })
    .expect("serializes")
}

/// Direct transform at every node at least `margin` from the boundary; the
/// remaining nodes are NaN. Fails when no node qualifies.
fn direct_on_nodes(phi: &GridFunction2D, m: u32, rep: SymbolRep, margin: f64) -> Result<GridFunction2D> {
    let options = DirectOptions {
        margin,
        ..DirectOptions::default()
    };
    let mut nodes = Vec::new();
    for i in 0..phi.nx() {
        for j in 0..phi.ny() {
            if phi.distance_to_boundary(phi.node(i, j)) >= margin {
                nodes.push((i, j));
            }
        }
    }
    if nodes.is_empty() {
        let (x0, x1) = phi.x_range();
        let (y0, y1) = phi.y_range();
        let center = Complex64::new(0.5 * (x0 + x1), 0.5 * (y0 + y1));
        return Err(Error::BoundaryMargin {
            x: center.re,
            y: center.im,
            distance: phi.distance_to_boundary(center),
            margin,
        });
    }
    let points: Vec<CPoint> = nodes.iter().map(|&(i, j)| CPoint::planar(phi.node(i, j))).collect();
    let values = berezin_direct_with(phi, m, &points, &options)?;
    let mut out = vec![Complex64::new(f64::NAN, f64::NAN); phi.nx() * phi.ny()];
    for (&(i, j), v) in nodes.iter().zip(values) {
        out[phi.index(i, j)] = v;
    }
    let mut result = phi.with_values(out)?;
    result.meta.method = Some("direct".into());
    result.meta.rep = Some(rep.as_str().into());
    result.meta.m = Some(m);
    let skipped = phi.nx() * phi.ny() - nodes.len();
    if skipped > 0 {
        result.meta.warnings.push(format!(
            "{skipped} nodes closer than {} to the boundary are NaN",
            fmt_float(margin)
        ));
    }
    Ok(result)
}

fn coeffs_json(params: SpaceParams) -> String {
    let table = CoeffTable::new(params);
    let render_all = |v: &[crate::rational::Rational]| v.iter().map(render).collect::<Vec<_>>();
    let value = serde_json::json!({
        "params": { "n": params.n(), "m": params.m() },
        "gamma": render_all(&table.gamma),
        "sigma": render_all(&table.sigma),
        "c": render_all(&table.c),
        "kappa": render_all(&table.kappa),
        "report": convention_report(params).to_json(),
    });
    let mut text = serde_json::to_string_pretty(&value).expect("serializes");
    text.push('\n');
    text
}

/// One row per index `j`; the verdict column lists the per-entry verdict of
/// every family as `family=VERDICT` joined by `;`.
fn coeffs_csv(params: SpaceParams) -> String {
    let table = CoeffTable::new(params);
    let report = convention_report(params);
    let mut text = String::from("j,gamma,sigma,c,kappa,verdict\n");
    for j in 0..table.gamma.len() {
        let verdicts: Vec<String> = [Family::Gamma, Family::Sigma, Family::C, Family::Kappa, Family::Factored]
            .iter()
            .map(|&f| {
                let r = report.family(f);
                format!("{}={}", f.as_str(), r.entry_verdicts[j].as_str())
            })
            .collect();
        text.push_str(&format!(
            "{j},{},{},{},{},{}\n",
            render(&table.gamma[j]),
            render(&table.sigma[j]),
            render(&table.c[j]),
            render(&table.kappa[j]),
            verdicts.join(";")
        ));
    }
    text
}
