//! Command-line surface over the library.
//!
//! Five subcommands: `compute` (area decomposition), `solve` (inscribed
//! radii), `verify` (oracle check), `render` (SVG figure), and `sweep`
//! (dimensionless table). Human output rounds to 7 significant digits;
//! json output is the machine contract, with fixed field names and every
//! float printed with 17 significant digits so parsing recovers the exact
//! double.
//!
//! Exit codes: 0 on success, 1 when verification ran and failed, 2 on
//! usage or validation errors.

use std::io;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::construction::Figure;
use crate::dimensionless::{self, Branch};
use crate::geometry::ArbelosConfig;
use crate::oracle::{self, Method, OracleConfig, VerificationReport};
use crate::svg::{render_figure, RenderOptions};

#[derive(Parser)]
#[command(
    name = "arbelos",
    version,
    about = "Closed-form arbelos areas with numerical verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the area decomposition for a configuration (R, T)
    Compute(ComputeArgs),
    /// Solve for the inscribed radii determined by (R, T)
    Solve(SolveArgs),
    /// Check the closed-form areas against the numerical oracle
    Verify(VerifyArgs),
    /// Render the figure for (R, n) as an SVG document
    Render(RenderArgs),
    /// Tabulate the dimensionless solution over t in [0, 1]
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Human,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BranchArg {
    Plus,
    Minus,
}

impl From<BranchArg> for Branch {
    fn from(arg: BranchArg) -> Self {
        match arg {
            BranchArg::Plus => Branch::Plus,
            BranchArg::Minus => Branch::Minus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Mc,
    Grid,
}

#[derive(Args)]
struct ComputeArgs {
    /// Radius of the circumscribing semicircle
    #[arg(long = "R", value_name = "LENGTH")]
    radius: f64,
    /// Chord length T = |PN|
    #[arg(long = "T", value_name = "LENGTH")]
    chord: f64,
    #[arg(long, value_enum, default_value_t = FormatArg::Human)]
    format: FormatArg,
}

#[derive(Args)]
struct SolveArgs {
    /// Radius of the circumscribing semicircle
    #[arg(long = "R", value_name = "LENGTH")]
    radius: f64,
    /// Chord length T = |PN|
    #[arg(long = "T", value_name = "LENGTH")]
    chord: f64,
    /// Which quadratic root names R1
    #[arg(long, value_enum, default_value_t = BranchArg::Plus)]
    branch: BranchArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Human)]
    format: FormatArg,
}

#[derive(Args)]
struct VerifyArgs {
    /// Radius of the circumscribing semicircle
    #[arg(long = "R", value_name = "LENGTH")]
    radius: f64,
    /// Chord length T = |PN|, must be positive
    #[arg(long = "T", value_name = "LENGTH")]
    chord: f64,
    /// Estimation method
    #[arg(long, value_enum, default_value_t = MethodArg::Mc)]
    method: MethodArg,
    /// Monte Carlo sample count
    #[arg(long, default_value_t = oracle::DEFAULT_SAMPLES, value_parser = clap::value_parser!(u64).range(1..))]
    samples: u64,
    /// Grid resolution (cells per axis)
    #[arg(long, default_value_t = oracle::DEFAULT_GRID_RESOLUTION, value_parser = clap::value_parser!(u32).range(2..))]
    resolution: u32,
    /// Monte Carlo seed
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = FormatArg::Human)]
    format: FormatArg,
}

#[derive(Args)]
struct RenderArgs {
    /// Radius of the circumscribing semicircle
    #[arg(long = "R", value_name = "LENGTH")]
    radius: f64,
    /// Signed offset of N from the center O
    #[arg(long = "n", value_name = "LENGTH", allow_hyphen_values = true)]
    offset: f64,
    /// Output path, or - for standard output
    #[arg(long, default_value = "-")]
    out: String,
    /// Shade the knife region
    #[arg(long)]
    shade: bool,
    /// Suppress point markers and labels
    #[arg(long)]
    no_labels: bool,
    /// Canvas width in pixels
    #[arg(long, default_value_t = 640)]
    width: u32,
    /// Margin in pixels
    #[arg(long, default_value_t = 40)]
    margin: u32,
    /// Stroke width in pixels
    #[arg(long, default_value_t = 2.0)]
    stroke_width: f64,
}

#[derive(Args)]
struct SweepArgs {
    /// Number of steps; the table has steps + 1 rows
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(2..))]
    steps: u32,
    #[arg(long, value_enum, default_value_t = FormatArg::Human)]
    format: FormatArg,
}

/// Parses arguments from the process environment and dispatches.
pub fn run() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // clap reports help and version through Err as well and picks the
        // conventional exit code (0 for those, 2 for usage errors).
        Err(err) => err.exit(),
    };
    let result = match cli.command {
        Command::Compute(args) => compute(args),
        Command::Solve(args) => solve(args),
        Command::Verify(args) => verify(args),
        Command::Render(args) => render(args),
        Command::Sweep(args) => sweep(args),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

#[derive(Serialize)]
struct ComputeJson {
    #[serde(rename = "R")]
    radius: f64,
    #[serde(rename = "T")]
    chord: f64,
    t: f64,
    r1: f64,
    r2: f64,
    #[serde(rename = "area_C")]
    area_c: f64,
    #[serde(rename = "area_C1")]
    area_c1: f64,
    #[serde(rename = "area_C2")]
    area_c2: f64,
    area_knife: f64,
}

fn compute(args: ComputeArgs) -> crate::Result<ExitCode> {
    let config = ArbelosConfig::new(args.radius, args.chord)?;
    let areas = config.area_decomposition();
    let t = dimensionless::normalize(&config);
    let state = dimensionless::complete_state(t, Branch::Plus)?;

    match args.format {
        FormatArg::Json => {
            let report = ComputeJson {
                radius: config.radius(),
                chord: config.chord(),
                t,
                r1: state.r1(),
                r2: state.r2(),
                area_c: areas.area_c,
                area_c1: areas.area_c1,
                area_c2: areas.area_c2,
                area_knife: areas.area_knife,
            };
            println!("{}", to_json(&report));
        }
        FormatArg::Human => {
            let rows = [
                ("R", config.radius()),
                ("T", config.chord()),
                ("t", t),
                ("r1", state.r1()),
                ("r2", state.r2()),
                ("area_C", areas.area_c),
                ("area_C1", areas.area_c1),
                ("area_C2", areas.area_c2),
                ("area_knife", areas.area_knife),
            ];
            for (name, value) in rows {
                println!("{name:<12}{}", sig7(value));
            }
        }
    }
    if config.chord() == 0.0 {
        eprintln!("note: degenerate: C2 vanishes");
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct SolveJson {
    #[serde(rename = "R")]
    radius: f64,
    #[serde(rename = "T")]
    chord: f64,
    branch: &'static str,
    #[serde(rename = "R1")]
    r1: f64,
    #[serde(rename = "R2")]
    r2: f64,
}

fn solve(args: SolveArgs) -> crate::Result<ExitCode> {
    let config = ArbelosConfig::new(args.radius, args.chord)?;
    let radii = config.radii(args.branch.into());
    let branch = match args.branch {
        BranchArg::Plus => "plus",
        BranchArg::Minus => "minus",
    };

    match args.format {
        FormatArg::Json => {
            let report = SolveJson {
                radius: config.radius(),
                chord: config.chord(),
                branch,
                r1: radii.r1,
                r2: radii.r2,
            };
            println!("{}", to_json(&report));
        }
        FormatArg::Human => {
            println!("branch      {branch}");
            println!("R1          {}", sig7(radii.r1));
            println!("R2          {}", sig7(radii.r2));
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct VerifyJson {
    #[serde(rename = "R")]
    radius: f64,
    #[serde(rename = "T")]
    chord: f64,
    method: &'static str,
    samples: u64,
    resolution: u32,
    seed: u64,
    pass: bool,
    regions: Vec<RegionJson>,
}

#[derive(Serialize)]
struct RegionJson {
    region: &'static str,
    closed_form: f64,
    estimate: f64,
    std_error: f64,
    discrepancy: f64,
    tolerance: f64,
    pass: bool,
}

fn verify(args: VerifyArgs) -> crate::Result<ExitCode> {
    let config = ArbelosConfig::new(args.radius, args.chord)?;
    let oracle_config = OracleConfig {
        method: match args.method {
            MethodArg::Mc => Method::MonteCarlo,
            MethodArg::Grid => Method::Grid,
        },
        samples: args.samples,
        grid_resolution: args.resolution,
        seed: args.seed,
    };
    let report = oracle::verify_config(&config, &oracle_config)?;
    let method = match args.method {
        MethodArg::Mc => "mc",
        MethodArg::Grid => "grid",
    };

    match args.format {
        FormatArg::Json => {
            let json = VerifyJson {
                radius: config.radius(),
                chord: config.chord(),
                method,
                samples: args.samples,
                resolution: args.resolution,
                seed: args.seed,
                pass: report.pass,
                regions: report
                    .regions
                    .iter()
                    .map(|check| RegionJson {
                        region: check.region.label(),
                        closed_form: check.closed_form,
                        estimate: check.estimate.value,
                        std_error: check.estimate.std_error,
                        discrepancy: check.discrepancy,
                        tolerance: check.tolerance,
                        pass: check.pass,
                    })
                    .collect(),
            };
            println!("{}", to_json(&json));
        }
        FormatArg::Human => print_verify_table(&config, method, &args, &report),
    }

    Ok(if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn print_verify_table(
    config: &ArbelosConfig,
    method: &str,
    args: &VerifyArgs,
    report: &VerificationReport,
) {
    let detail = match method {
        "mc" => format!("samples {}, seed {}", args.samples, args.seed),
        _ => format!("resolution {}", args.resolution),
    };
    println!(
        "R {}, T {}, method {method}, {detail}",
        sig7(config.radius()),
        sig7(config.chord())
    );
    println!(
        "{:<8}{:<14}{:<14}{:<14}{:<14}{:<14}status",
        "region", "closed", "estimate", "std_error", "discrepancy", "tolerance"
    );
    for check in &report.regions {
        println!(
            "{:<8}{:<14}{:<14}{:<14}{:<14}{:<14}{}",
            check.region.label(),
            sig7(check.closed_form),
            sig7(check.estimate.value),
            sig7(check.estimate.std_error),
            sig7(check.discrepancy),
            sig7(check.tolerance),
            if check.pass { "pass" } else { "FAIL" }
        );
    }
    println!("overall: {}", if report.pass { "pass" } else { "FAIL" });
}

fn render(args: RenderArgs) -> crate::Result<ExitCode> {
    let figure = Figure::build(args.radius, args.offset)?;
    let options = RenderOptions {
        canvas_width: args.width,
        margin: args.margin,
        shade_knife: args.shade,
        show_labels: !args.no_labels,
        stroke_width: args.stroke_width,
    };
    let svg = render_figure(&figure, &options)?;
    if args.out == "-" {
        print!("{svg}");
    } else if let Err(err) = std::fs::write(&args.out, &svg) {
        eprintln!("error: cannot write {}: {err}", args.out);
        return Ok(ExitCode::from(2));
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct SweepRow {
    t: f64,
    r1: f64,
    r2: f64,
    a_knife: f64,
    #[serde(rename = "a_C1")]
    a_c1: f64,
    #[serde(rename = "a_C2")]
    a_c2: f64,
}

fn sweep(args: SweepArgs) -> crate::Result<ExitCode> {
    let steps = args.steps;
    let mut rows = Vec::with_capacity(steps as usize + 1);
    for i in 0..=steps {
        let t = f64::from(i) / f64::from(steps);
        let state = dimensionless::complete_state(t, Branch::Plus)?;
        rows.push(SweepRow {
            t,
            r1: state.r1(),
            r2: state.r2(),
            a_knife: std::f64::consts::FRAC_PI_4 * t * t,
            a_c1: std::f64::consts::FRAC_PI_2 * state.r1() * state.r1(),
            a_c2: std::f64::consts::FRAC_PI_2 * state.r2() * state.r2(),
        });
    }

    match args.format {
        FormatArg::Json => println!("{}", to_json(&rows)),
        FormatArg::Human => {
            println!(
                "{:<12}{:<12}{:<12}{:<12}{:<12}a_C2",
                "t", "r1", "r2", "a_knife", "a_C1"
            );
            for row in &rows {
                println!(
                    "{:<12}{:<12}{:<12}{:<12}{:<12}{}",
                    sig7(row.t),
                    sig7(row.r1),
                    sig7(row.r2),
                    sig7(row.a_knife),
                    sig7(row.a_c1),
                    sig7(row.a_c2)
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// json formatter printing every float with 17 significant digits, enough
/// for parsing to recover the exact double.
struct Sig17;

impl serde_json::ser::Formatter for Sig17 {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        write!(writer, "{value:.16e}")
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, Sig17);
    value
        .serialize(&mut ser)
        .expect("plain data structures serialize without error");
    String::from_utf8(out).expect("json output is utf-8")
}

/// Formats with 7 significant digits: plain decimal inside a readable
/// magnitude window, scientific notation outside it.
fn sig7(value: f64) -> String {
    if value == 0.0 {
        return "0".to_string();
    }
    let magnitude = value.abs();
    if (1e-4..1e7).contains(&magnitude) {
        let exponent = magnitude.log10().floor() as i32;
        let decimals = (6 - exponent).max(0) as usize;
        trim_decimal(format!("{value:.decimals$}"))
    } else {
        format!("{value:.6e}")
    }
}

fn trim_decimal(mut text: String) -> String {
    if text.contains('.') {
        while text.ends_with('0') {
            text.pop();
        }
        if text.ends_with('.') {
            text.pop();
        }
    }
    text
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig7_covers_the_display_ranges() {
        assert_eq!(sig7(0.0), "0");
        assert_eq!(sig7(0.6), "0.6");
        assert_eq!(sig7(0.9), "0.9");
        assert_eq!(sig7(1.8660254037844386), "1.866025");
        assert_eq!(sig7(0.13397459621556135), "0.1339746");
        assert_eq!(sig7(0.2827433388230814), "0.2827433");
        assert_eq!(sig7(-2.5), "-2.5");
        assert_eq!(sig7(1234567.0), "1234567");
        assert_eq!(sig7(1e-7), "1.000000e-7");
        assert_eq!(sig7(2.5e12), "2.500000e12");
    }

    #[test]
    fn json_floats_round_trip_exactly() {
        for value in [
            0.2827433388230814,
            std::f64::consts::PI,
            1.0 / 3.0,
            2.5e-17,
            -0.1339745962155614,
            0.0,
            1e300,
        ] {
            let text = to_json(&value);
            let back: f64 = serde_json::from_str(&text).unwrap();
            assert_eq!(back.to_bits(), value.to_bits(), "text {text}");
        }
    }

    #[test]
    fn json_objects_keep_declared_field_order() {
        let report = ComputeJson {
            radius: 1.0,
            chord: 0.6,
            t: 0.6,
            r1: 0.9,
            r2: 0.1,
            area_c: 1.0,
            area_c1: 1.0,
            area_c2: 1.0,
            area_knife: 1.0,
        };
        let text = to_json(&report);
        let keys = [
            "\"R\"",
            "\"T\"",
            "\"t\"",
            "\"r1\"",
            "\"r2\"",
            "\"area_C\"",
            "\"area_C1\"",
            "\"area_C2\"",
            "\"area_knife\"",
        ];
        let mut last = 0;
        for key in keys {
            let at = text.find(key).unwrap_or_else(|| panic!("{key} missing"));
            assert!(at >= last, "{key} out of order in {text}");
            last = at;
        }
    }
}
