//! Command-line front end: curve and surface exporters plus the numeric
//! verification harness.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid configuration,
//! 3 I/O failure.

mod export;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde::Serialize;

use bubbleton::*;
// The library exports a single-parameter Result alias; this module handles
// its own error type.
use std::result::Result;

#[derive(Parser)]
#[command(
    name = "bubbleton",
    version,
    about = "Constant mean curvature bubbletons: dressed cylinder frames, planar curves, meshes, and verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample the planar y=0 curve of a single bubbleton to CSV and/or SVG.
    Curve(CurveArgs),
    /// Sample the immersion on a grid and export a Wavefront OBJ mesh.
    Surface(SurfaceArgs),
    /// Run the verification battery and emit a JSON report.
    Verify(VerifyArgs),
    /// Compute the turning number of the y=0 curve.
    TurningNumber(TurningArgs),
    /// Evaluate the removable-singularity limit at lambda = alpha(K).
    Residue(ResidueArgs),
}

#[derive(Args)]
struct CurveArgs {
    /// Lobe number (integer >= 2).
    #[arg(long = "K")]
    k: i64,
    /// Number of uniform parameter steps; the CSV has samples+1 data rows.
    #[arg(long, default_value_t = 2000)]
    samples: usize,
    /// CSV output path (stdout when omitted and no --svg given).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Optional SVG plot path.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct SurfaceArgs {
    /// Single lobe number (integer >= 2).
    #[arg(long = "K", conflicts_with = "lobes")]
    k: Option<i64>,
    /// Comma-separated list of distinct lobe numbers for a multi-bubbleton.
    #[arg(long, value_delimiter = ',')]
    lobes: Vec<i64>,
    /// Grid resolution along the periodic x direction.
    #[arg(long, default_value_t = 256)]
    nx: usize,
    /// Grid resolution along y.
    #[arg(long, default_value_t = 256)]
    ny: usize,
    /// Mean curvature of the immersion.
    #[arg(long = "H", default_value_t = -0.5, allow_hyphen_values = true)]
    h: f64,
    /// y range as "min,max".
    #[arg(long = "y-range", value_parser = parse_range, default_value = "-3,3")]
    y_range: (f64, f64),
    /// OBJ output path (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated lobe numbers to verify.
    #[arg(long = "K", value_delimiter = ',', default_value = "2,3,4,5")]
    k: Vec<i64>,
    /// Override every residual tolerance with this value.
    #[arg(long)]
    tol: Option<f64>,
    /// Also write the JSON report to this path.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TurningArgs {
    /// Lobe number (integer >= 2).
    #[arg(long = "K")]
    k: i64,
    /// Initial uniform sample count before adaptive refinement.
    #[arg(long, default_value_t = 4096)]
    samples: usize,
}

#[derive(Args)]
struct ResidueArgs {
    /// Lobe number (integer >= 2).
    #[arg(long = "K")]
    k: i64,
}

fn parse_range(s: &str) -> Result<(f64, f64), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err("expected \"min,max\"".into());
    }
    let lo: f64 = parts[0].trim().parse().map_err(|_| "invalid number")?;
    let hi: f64 = parts[1].trim().parse().map_err(|_| "invalid number")?;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err("range must satisfy min < max".into());
    }
    Ok((lo, hi))
}

enum CliError {
    Config(String),
    Io(String),
    VerificationFailed,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Config(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

fn lobe_number(k: i64) -> Result<u32, CliError> {
    if k < 2 {
        return Err(CliError::Config(format!(
            "lobe number must be an integer >= 2, got {k}"
        )));
    }
    u32::try_from(k).map_err(|_| CliError::Config(format!("lobe number {k} out of range")))
}

fn emit(out: Option<&PathBuf>, contents: &str) -> Result<(), CliError> {
    match out {
        Some(path) => export::write_atomic(path, contents).map_err(CliError::from),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

fn cmd_curve(args: &CurveArgs) -> Result<(), CliError> {
    let k = lobe_number(args.k)?;
    if args.samples < 16 {
        return Err(CliError::Config("need at least 16 samples".into()));
    }
    let eval = move |x: f64| -> [f64; 2] {
        let (cx, cz) = bubbleton_curve_closed_form(x, k).expect("valid lobe number");
        [cx, cz]
    };
    if let Some(svg_path) = &args.svg {
        let curve = PlanarCurve::bubbleton(k, args.samples)?;
        export::write_atomic(svg_path, &export::curve_svg(&curve))?;
    }
    if args.out.is_some() || args.svg.is_none() {
        emit(args.out.as_ref(), &export::curve_csv(&eval, args.samples))?;
    }
    Ok(())
}

fn cmd_surface(args: &SurfaceArgs) -> Result<(), CliError> {
    let ks: Vec<u32> = if let Some(k) = args.k {
        vec![lobe_number(k)?]
    } else if !args.lobes.is_empty() {
        args.lobes
            .iter()
            .map(|&k| lobe_number(k))
            .collect::<Result<_, _>>()?
    } else {
        return Err(CliError::Config(
            "specify --K <n> or --lobes <n,m,...>".into(),
        ));
    };
    if args.nx < 2 || args.ny < 2 {
        return Err(CliError::Config("grid must be at least 2x2".into()));
    }
    if args.h == 0.0 {
        return Err(CliError::Config("mean curvature must be nonzero".into()));
    }
    let params = BubbletonParams::multi(&ks)?.with_mean_curvature(args.h)?;
    let mesh = surface_mesh(&params, args.nx, args.ny, args.y_range)?;
    emit(args.out.as_ref(), &export::mesh_obj(&mesh))
}

fn cmd_verify(args: &VerifyArgs) -> Result<(), CliError> {
    let ks: Vec<u32> = args
        .k
        .iter()
        .map(|&k| lobe_number(k))
        .collect::<Result<_, _>>()?;
    if ks.is_empty() {
        return Err(CliError::Config("no lobe numbers given".into()));
    }
    let mut sorted = ks.clone();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(CliError::Config(
            "each lobe number may appear only once".into(),
        ));
    }
    if let Some(t) = args.tol {
        if !(t.is_finite() && t > 0.0) {
            return Err(CliError::Config("tolerance must be positive".into()));
        }
    }
    let report = verify::run_verify(&ks, args.tol)?;
    let json = serde_json::to_string_pretty(&report).expect("report serializes");
    println!("{json}");
    if let Some(path) = &args.out {
        export::write_atomic(path, &json)?;
    }
    if report.pass {
        Ok(())
    } else {
        Err(CliError::VerificationFailed)
    }
}

#[derive(Serialize)]
struct TurningOutput {
    schema: u32,
    k: u32,
    turning_number: i64,
    raw: f64,
    residual: f64,
    expected: i64,
}

fn cmd_turning(args: &TurningArgs) -> Result<(), CliError> {
    let k = lobe_number(args.k)?;
    let curve = PlanarCurve::bubbleton(k, args.samples.max(16))?;
    let tn = turning_number(&curve)?;
    let out = TurningOutput {
        schema: 1,
        k,
        turning_number: tn.value,
        raw: tn.raw,
        residual: tn.residual,
        expected: 2 * k as i64 - 1,
    };
    println!("{}", serde_json::to_string_pretty(&out).expect("serializes"));
    Ok(())
}

#[derive(Serialize)]
struct ResidueOutput {
    schema: u32,
    k: u32,
    limit: [[f64; 2]; 4],
    expected_off_diagonal: f64,
    measured_off_diagonal: f64,
    relative_deviation: f64,
    extrapolation_spread: f64,
}

fn cmd_residue(args: &ResidueArgs) -> Result<(), CliError> {
    let k = lobe_number(args.k)?;
    let res = residue_check(k)?;
    let expect = residue_closed_form(k)?;
    let entry = |z: Complex64| [z.re, z.im];
    let out = ResidueOutput {
        schema: 1,
        k,
        limit: [
            entry(res.limit.a),
            entry(res.limit.b),
            entry(res.limit.c),
            entry(res.limit.d),
        ],
        expected_off_diagonal: expect.b.im,
        measured_off_diagonal: res.limit.b.im,
        relative_deviation: res.limit.dist(&expect) / expect.norm(),
        extrapolation_spread: res.convergence,
    };
    println!("{}", serde_json::to_string_pretty(&out).expect("serializes"));
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Curve(args) => cmd_curve(args),
        Command::Surface(args) => cmd_surface(args),
        Command::Verify(args) => cmd_verify(args),
        Command::TurningNumber(args) => cmd_turning(args),
        Command::Residue(args) => cmd_residue(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::VerificationFailed) => ExitCode::from(1),
        Err(CliError::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("i/o error: {msg}");
            ExitCode::from(3)
        }
    }
}
