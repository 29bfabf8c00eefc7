use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use annulus_cli::bench::{run_bench, to_tsv};
use annulus_cli::io::{parse_points, points_to_csv, points_to_json, solution_json, Format};
use annulus_cli::svg::render_svg;
use annulus_cli::verify::{run_verify, VerifyConfig};
use annulus_cli::{solve, Problem};
use annulus_core::gen::{generate, BoundingBox, Distribution, GenSpec};
use annulus_core::{DecisionMode, Error};
use clap::{Parser, Subcommand, ValueEnum};

/// Widest empty axis-parallel square and rectangular annuli.
#[derive(Parser)]
#[command(name = "annulus", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one point file and print the annulus as JSON.
    Solve {
        #[arg(long, value_enum)]
        shape: ShapeArg,
        /// Point file, or `-` for stdin.
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        /// Also write an SVG drawing here.
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        pretty: bool,
    },
    /// Print a seeded random point file.
    Gen {
        #[arg(long)]
        dist: Distribution,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Bounding box as `x0,y0,x1,y1`.
        #[arg(long, value_parser = parse_bbox)]
        bbox: Option<BoundingBox>,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
    },
    /// Time the solvers (and the oracles, for small sizes) as TSV.
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value = "uniform")]
        dist: Distribution,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compare the solvers with the brute-force oracles on random inputs.
    Verify {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, hide = true)]
        literal_decision: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ShapeArg {
    Square,
    Rect,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

fn parse_bbox(s: &str) -> Result<BoundingBox, String> {
    let v: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| format!("`{t}` is not a number")))
        .collect::<Result<_, _>>()?;
    match v[..] {
        [x0, y0, x1, y1] => Ok(BoundingBox { x0, y0, x1, y1 }),
        _ => Err("expected four values x0,y0,x1,y1".into()),
    }
}

/// Failure with the exit code it maps to.
struct Failure(u8, String);

fn io_failure(e: impl std::fmt::Display) -> Failure {
    Failure(1, e.to_string())
}

fn read_input(input: &str) -> Result<String, Failure> {
    if input == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io_failure)?;
        Ok(s)
    } else {
        std::fs::read_to_string(input).map_err(|e| Failure(1, format!("{input}: {e}")))
    }
}

fn emit(text: &str) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes()).and_then(|_| out.flush()).map_err(io_failure)
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Solve { shape, input, format, svg, pretty } => {
            let text = read_input(&input)?;
            let ps = parse_points(&text, format.into()).map_err(|e| Failure(1, format!("{input}: {e}")))?;
            let problem = match shape {
                ShapeArg::Square => Problem::Square,
                ShapeArg::Rect => Problem::Rect,
            };
            let result = solve(&ps, problem);
            if let Some(path) = svg {
                std::fs::write(&path, render_svg(&ps, result.as_ref().ok()))
                    .map_err(|e| Failure(1, format!("{}: {e}", path.display())))?;
            }
            match result {
                Ok(sol) => {
                    let doc = solution_json(problem.name(), &sol);
                    let body = if pretty { serde_json::to_string_pretty(&doc) } else { serde_json::to_string(&doc) };
                    emit(&(body.map_err(io_failure)? + "\n"))
                }
                Err(Error::NoValidAnnulus) => {
                    emit("{\"error\":\"no-valid-annulus\"}\n")?;
                    Err(Failure(2, String::new()))
                }
                Err(e) => Err(Failure(1, e.to_string())),
            }
        }
        Command::Gen { dist, n, seed, bbox, format } => {
            let spec = GenSpec { dist, n, seed, bbox: bbox.unwrap_or_default() };
            spec.check().map_err(|e| Failure(1, e))?;
            let ps = generate(&spec);
            match format {
                FormatArg::Csv => emit(&points_to_csv(&ps)),
                FormatArg::Json => {
                    let coords: Vec<(f64, f64)> = ps.points().iter().map(|p| (p.x, p.y)).collect();
                    emit(&format!("{}\n", points_to_json(&coords)))
                }
            }
        }
        Command::Bench { sizes, dist, seed } => emit(&to_tsv(&run_bench(&sizes, dist, seed))),
        Command::Verify { trials, n_max, seed, literal_decision } => {
            let mode = if literal_decision { DecisionMode::Literal } else { DecisionMode::Strengthened };
            let report = run_verify(&VerifyConfig { trials, n_max, seed, mode });
            match report.mismatch {
                None => emit(&format!(
                    "verified {} instances, {} comparisons, no mismatches\n",
                    report.instances, report.comparisons
                )),
                Some(m) => {
                    emit(&format!("{}\n", m.to_json()))?;
                    Err(Failure(1, format!("{} solver disagrees with its oracle", m.check)))
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, msg)) => {
            if !msg.is_empty() {
                eprintln!("error: {msg}");
            }
            ExitCode::from(code)
        }
    }
}
