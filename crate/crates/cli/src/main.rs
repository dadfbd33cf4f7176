//! `sltile`: generate, check and transform SL_k-tilings from the shell.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sltiling::algebra::scalar::int;
use sltiling::duality::{derived_window, dual_window};
use sltiling::frieze::{
    check_frieze_symmetries, enumerate_friezes, frieze_tiling, reduce_quiddity, render_frieze,
    scalar_value, y_product, Classification, Quiddity,
};
use sltiling::linearization::build_from_linearization;
use sltiling::path::path_tiling;
use sltiling::quarter_plane::{binomial_tiling, zigzag_fixture, Zigzag};
use sltiling::random::{random_linearization, random_wild_sl2};
use sltiling::tiling::{check_tame, verify_slk};
use sltiling::tsystem::{
    check_determinant, check_hirota, hirota_propagate, tsystem_from_tiling, TSystemState,
};
use sltiling::{fixtures, BiInfiniteWord, Error, Result, Tiling, VerifyReport, Window};

use output::{parse_window_spec, read_window, render_window, usage, Format, Sink};

type WindowSpec = (i64, i64, usize, usize);

#[derive(Parser)]
#[command(
    name = "sltile",
    version,
    about = "Exact SL_k-tilings, friezes and T-systems"
)]
struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for randomized fixtures.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a tiling on a window.
    Generate {
        #[command(subcommand)]
        kind: Generate,
    },
    /// Check that every adjacent k x k minor of a window equals 1.
    Verify {
        input: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        /// Also require rank exactly k.
        #[arg(long)]
        tame: bool,
    },
    /// Array of adjacent m x m minors.
    Derive {
        input: PathBuf,
        #[arg(long)]
        m: usize,
    },
    /// Array of adjacent (k-1) x (k-1) minors.
    Dualize {
        input: PathBuf,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Frieze enumeration and quiddity tools.
    Frieze {
        #[command(subcommand)]
        action: FriezeCmd,
    },
    /// T-system propagation and checks.
    Tsystem {
        #[command(subcommand)]
        action: TsystemCmd,
    },
    /// Print a window file as a right-aligned grid.
    Render { input: PathBuf },
}

#[derive(Args)]
struct WindowArg {
    /// `i,j,rows,cols`
    #[arg(long, value_parser = parse_window_spec, allow_hyphen_values = true)]
    window: WindowSpec,
}

#[derive(Subcommand)]
enum Generate {
    /// Tiling of an admissible word, e.g. `(xy)*||(xy)*`.
    Path {
        #[arg(long)]
        word: String,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        w: WindowArg,
    },
    /// Skew-periodic frieze tiling of a quiddity.
    Frieze {
        #[arg(long)]
        quiddity: Quiddity,
        #[command(flatten)]
        w: WindowArg,
    },
    /// `a_ij = sum_{l<k} binom(i,l) binom(j,l)` on the quarter plane.
    Binomial {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        w: WindowArg,
    },
    /// Fibonacci or Catalan window of the zigzag path.
    Zigzag {
        #[arg(long, value_enum)]
        kind: ZigzagKind,
        #[arg(long)]
        size: usize,
    },
    /// Wild SL2-tiling with seeded free entries.
    Wild {
        #[command(flatten)]
        w: WindowArg,
    },
    /// Tame tiling from seeded random linearization data.
    Linearization {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 6)]
        span: usize,
    },
    /// A transcribed figure.
    Fixture {
        #[arg(long, value_enum)]
        name: FixtureName,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ZigzagKind {
    Fibonacci,
    Catalan,
}

#[derive(Clone, Copy, ValueEnum)]
enum FixtureName {
    Fig1,
    Fig2,
    Fig7,
    Display19,
    Display20,
    Fig5,
    WildSl4,
}

#[derive(Subcommand)]
enum FriezeCmd {
    /// All positive integer friezes with n diagonals.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        render: bool,
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Rewrite (a+1) 1 (b+1) -> a b until stuck.
    Reduce {
        #[arg(long)]
        quiddity: Quiddity,
    },
    /// Y-product and the periodicity checks of a quiddity's tiling.
    Check {
        #[arg(long)]
        quiddity: Quiddity,
        #[arg(long)]
        render: bool,
    },
}

#[derive(Subcommand)]
enum TsystemCmd {
    /// Propagate a state file `steps` levels.
    Run {
        input: PathBuf,
        #[arg(long)]
        steps: usize,
    },
    /// Hirota and determinant checks on a state file.
    Check { input: PathBuf },
    /// Read a window as the alpha = 1 slice of a T-system.
    FromTiling {
        input: PathBuf,
        #[arg(long)]
        r: usize,
    },
}

fn window_of(t: &Tiling, (i, j, rows, cols): WindowSpec) -> Result<Window> {
    t.window((i, j), rows, cols)
}

fn declared_k(w: &Window, k: Option<usize>) -> Result<usize> {
    k.or(w.k)
        .ok_or_else(|| usage("the window declares no k; pass --k"))
}

fn generate(kind: Generate, seed: u64) -> Result<Window> {
    match kind {
        Generate::Path { word, k, w } => {
            let word: BiInfiniteWord = word.parse()?;
            window_of(&path_tiling(&word, k)?, w.window)
        }
        Generate::Frieze { quiddity, w } => {
            window_of(&frieze_tiling(&quiddity.scalars())?, w.window)
        }
        Generate::Binomial { k, w } => window_of(&binomial_tiling(k)?, w.window),
        Generate::Zigzag { kind, size } => {
            let kind = match kind {
                ZigzagKind::Fibonacci => Zigzag::Fibonacci,
                ZigzagKind::Catalan => Zigzag::Catalan,
            };
            zigzag_fixture(kind, size)
        }
        Generate::Wild { w } => {
            let blocks =
                (w.window.2.max(w.window.3) as i64 + w.window.0.abs().max(w.window.1.abs())) / 2
                    + 1;
            window_of(&random_wild_sl2(blocks, seed), w.window)
        }
        Generate::Linearization { k, span } => {
            if k < 2 {
                return Err(usage("linearization data needs k >= 2"));
            }
            let d = random_linearization(k, span, seed);
            build_from_linearization(&d)?.window((0, 0), k + span, k + span)
        }
        Generate::Fixture { name } => Ok(match name {
            FixtureName::Fig1 => fixtures::fig1(),
            FixtureName::Fig2 => fixtures::fig2_specialized(),
            FixtureName::Fig7 => fixtures::fig7(),
            FixtureName::Display19 => fixtures::display19(),
            FixtureName::Display20 => fixtures::display20(),
            FixtureName::Fig5 => fixtures::fig5_block(),
            FixtureName::WildSl4 => fixtures::wild_sl4_window(),
        }),
    }
}

/// Exit status 1 when any report has failures.
fn verdict(reports: &[VerifyReport]) -> ExitCode {
    if reports.iter().all(VerifyReport::is_verified) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn frieze(action: FriezeCmd, sink: &Sink) -> Result<ExitCode> {
    match action {
        FriezeCmd::Enumerate {
            n,
            count_only,
            render,
            bound,
        } => {
            let all = enumerate_friezes(n, bound)?;
            if count_only {
                sink.emit(&all.len().to_string())?;
            } else if sink.format == Format::Json {
                sink.json(&all)?;
            } else if render {
                sink.emit(
                    &all.iter()
                        .map(|q| format!("{q}\n{}", render_frieze(q)))
                        .collect::<Vec<_>>()
                        .join("\n"),
                )?;
            } else {
                sink.emit(
                    &all.iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join("\n"),
                )?;
            }
        }
        FriezeCmd::Reduce { quiddity } => {
            let r = reduce_quiddity(quiddity.word());
            if sink.format == Format::Json {
                sink.json(&r)?;
            } else {
                let mut lines: Vec<String> = r
                    .steps
                    .iter()
                    .map(|w| w.iter().map(u64::to_string).collect::<Vec<_>>().join(","))
                    .collect();
                lines.push(format!("classification: {:?}", r.classification));
                sink.emit(&lines.join("\n"))?;
            }
        }
        FriezeCmd::Check { quiddity, render } => {
            let n = quiddity.len() - 1;
            let y = scalar_value(&y_product(&quiddity.scalars()));
            let minus_id = y.as_ref().is_some_and(|c| *c == int(-1));
            let t = frieze_tiling(&quiddity.scalars())?;
            let p = quiddity.len() as i64;
            let w = t.window((-p, -p), 3 * quiddity.len(), 3 * quiddity.len())?;
            let s =
                check_frieze_symmetries(&t, n, (-p, -p), 2 * quiddity.len(), 2 * quiddity.len())?;
            let mut reports = vec![verify_slk(&w, 2)?, check_tame(&w, 2)?];
            reports.extend(s.reports().into_iter().cloned());
            let class = reduce_quiddity(quiddity.word()).classification;
            if render && sink.format == Format::Text {
                sink.emit(&render_frieze(&quiddity))?;
            }
            let summary = format!(
                "{}: Y-product {}; reduction {:?}",
                if minus_id { "ok" } else { "FAILED" },
                y.map_or("is not scalar".to_string(), |c| format!("= {c} Id")),
                class
            );
            match sink.format {
                Format::Text => sink.emit(&format!(
                    "{summary}\n{}",
                    reports
                        .iter()
                        .map(|r| format!(
                            "{}: {}",
                            if r.is_verified() { "ok" } else { "FAILED" },
                            r.criterion
                        ))
                        .collect::<Vec<_>>()
                        .join("\n")
                ))?,
                _ => sink.report(&reports)?,
            }
            let all_ok = minus_id
                && class == Classification::MinusIdentity
                && reports.iter().all(VerifyReport::is_verified);
            return Ok(if all_ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            });
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn read_state(path: &PathBuf) -> Result<TSystemState> {
    Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
}

fn tsystem(action: TsystemCmd, sink: &Sink) -> Result<ExitCode> {
    match action {
        TsystemCmd::Run { input, steps } => {
            let s = hirota_propagate(&read_state(&input)?, steps)?;
            sink.json(&s)?;
        }
        TsystemCmd::Check { input } => {
            let s = read_state(&input)?;
            let mut reports = check_hirota(&s);
            reports.extend(check_determinant(&s));
            sink.report(&reports)?;
            return Ok(verdict(&reports));
        }
        TsystemCmd::FromTiling { input, r } => {
            let (state, map) = tsystem_from_tiling(&read_window(&input)?, r)?;
            eprintln!("index map: {map}");
            sink.json(&state)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode> {
    let sink = Sink {
        format: cli.format,
        out: cli.out,
    };
    match cli.command {
        Command::Generate { kind } => sink.window(&generate(kind, cli.seed)?)?,
        Command::Verify { input, k, tame } => {
            let w = read_window(&input)?;
            let k = declared_k(&w, k)?;
            let mut reports = vec![verify_slk(&w, k)?];
            if tame {
                reports.push(check_tame(&w, k)?);
            }
            sink.report(&reports)?;
            return Ok(verdict(&reports));
        }
        Command::Derive { input, m } => sink.window(&derived_window(&read_window(&input)?, m)?)?,
        Command::Dualize { input, k } => {
            let w = read_window(&input)?;
            let k = declared_k(&w, k)?;
            sink.window(&dual_window(&w, k)?)?
        }
        Command::Frieze { action } => return frieze(action, &sink),
        Command::Tsystem { action } => return tsystem(action, &sink),
        Command::Render { input } => sink.emit(&render_window(&read_window(&input)?))?,
    }
    Ok(ExitCode::SUCCESS)
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Argument(_) | Error::Parse(_) => 2,
        _ => 3,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
