//! `parsigame` command-line front end.
//!
//! Exit status: 0 on success, 1 when a verification check fails, 2 on
//! invalid input.

mod docs;
mod text;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use parsigame::oracle::{DEFAULT_SWEEP_MAX_N, MAX_SWEEP_N};
use parsigame::{
    balanced_lottery, build_game, build_incidence_matrix, enumerate_p_games_bounded,
    expected_payoffs, full_verify, simulate, twin_game, FreeTypeRep, PGame, VerificationReport,
};
use rayon::prelude::*;
use serde_json::Value;

#[derive(Parser, Debug)]
#[command(
    name = "parsigame",
    version,
    about = "Build and verify parsimonious weighted majority games in exact arithmetic"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct GlobalOpts {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Upper bound on n for enumeration and sweeps.
    #[arg(
        long,
        global = true,
        env = "PARSIGAME_MAX_N",
        default_value_t = DEFAULT_SWEEP_MAX_N as u32,
        value_parser = clap::value_parser!(u32).range(4..=MAX_SWEEP_N as i64)
    )]
    max_n: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimal homogeneous representation, type table and incidence matrix.
    Game {
        /// Free type representation, e.g. 3,1,2,2
        rep: String,
    },
    /// Twin game with the transposed and re-indexed incidence matrices.
    Twin { rep: String },
    /// Balanced lottery and expected payoffs.
    Lottery { rep: String },
    /// Check one game, or every game up to a size, against brute force.
    Verify {
        #[arg(required_unless_present = "all_n", conflicts_with = "all_n")]
        rep: Option<String>,
        /// Verify every game with 4 <= n <= N.
        #[arg(long, value_name = "N")]
        all_n: Option<usize>,
    },
    /// List every game with n players.
    Enumerate { n: usize },
    /// Monte-Carlo run of the draw-and-split mechanism (demonstration only).
    Simulate {
        rep: String,
        #[arg(long, default_value_t = 100_000)]
        draws: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    Input(String),
    Checks,
}

impl From<parsigame::Error> for Failure {
    fn from(e: parsigame::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(format!("write failed: {e}"))
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            let _ = out.flush();
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli, out: &mut impl Write) -> CmdResult {
    let json = cli.global.json;
    match &cli.command {
        Command::Game { rep } => {
            let g = game_from(rep)?;
            let a = build_incidence_matrix(&g);
            if json {
                emit(out, &docs::game(&g, &a))?;
            } else {
                out.write_all(text::game(&g, &a).as_bytes())?;
            }
        }
        Command::Twin { rep } => {
            let pair = twin_game(&game_from(rep)?)?;
            if json {
                emit(out, &docs::twin(&pair))?;
            } else {
                out.write_all(text::twin(&pair).as_bytes())?;
            }
        }
        Command::Lottery { rep } => {
            let g = game_from(rep)?;
            let l = balanced_lottery(&g)?;
            let e = expected_payoffs(&g, &l)?;
            if json {
                emit(out, &docs::lottery(&g, &l, &e))?;
            } else {
                let a = build_incidence_matrix(&g);
                out.write_all(text::lottery(&g, &a, &l, &e).as_bytes())?;
            }
        }
        Command::Verify { rep: Some(rep), .. } => {
            let report = full_verify(&game_from(rep)?)?;
            if json {
                emit(out, &docs::report(&report))?;
            } else {
                out.write_all(text::report(&report).as_bytes())?;
            }
            if !report.pass() {
                return Err(Failure::Checks);
            }
        }
        Command::Verify { rep: None, all_n } => {
            let hi = all_n.expect("clap requires a rep or --all-n");
            sweep(hi, cli.global.max_n as usize, json, out)?;
        }
        Command::Enumerate { n } => {
            let games = enumerate_p_games_bounded(*n, cli.global.max_n as usize)?
                .iter()
                .map(build_game)
                .collect::<Result<Vec<_>, _>>()?;
            if json {
                emit(out, &docs::enumeration(*n, &games))?;
            } else {
                out.write_all(text::enumeration(&games).as_bytes())?;
            }
        }
        Command::Simulate { rep, draws, seed } => {
            let g = game_from(rep)?;
            let l = balanced_lottery(&g)?;
            let summary = simulate(&g, &l, *draws, *seed)?;
            if json {
                emit(out, &docs::simulation(&g, &summary))?;
            } else {
                out.write_all(text::simulation(&g, &l, &summary).as_bytes())?;
            }
        }
    }
    Ok(())
}

fn game_from(rep: &str) -> Result<PGame, Failure> {
    let rep: FreeTypeRep = rep.parse()?;
    Ok(build_game(&rep)?)
}

fn emit(out: &mut impl Write, doc: &Value) -> io::Result<()> {
    writeln!(out, "{}", docs::render(doc))
}

/// Verifies every game with `4 <= n <= hi`, one line per game, in
/// enumeration order. Games of one size are checked in parallel.
fn sweep(hi: usize, max_n: usize, json: bool, out: &mut impl Write) -> CmdResult {
    // Validate the bound before doing any work.
    enumerate_p_games_bounded(hi, max_n)?;
    let mut checked = 0usize;
    let mut failures = 0usize;
    for n in 4..=hi {
        let reps = enumerate_p_games_bounded(n, max_n)?;
        let reports: Vec<Result<VerificationReport, parsigame::Error>> = reps
            .par_iter()
            .map(|rep| build_game(rep).and_then(|g: PGame| full_verify(&g)))
            .collect();
        for report in reports {
            let report = report?;
            checked += 1;
            if !report.pass() {
                failures += 1;
            }
            if json {
                writeln!(out, "{}", docs::render_line(&docs::report(&report)))?;
            } else {
                writeln!(out, "{}", text::report_line(&report))?;
            }
        }
        out.flush()?;
    }
    if json {
        writeln!(
            out,
            "{}",
            docs::render_line(&docs::summary(hi, checked, failures))
        )?;
    } else {
        writeln!(
            out,
            "checked {checked} games with 4 <= n <= {hi}: {failures} failures"
        )?;
    }
    if failures > 0 {
        Err(Failure::Checks)
    } else {
        Ok(())
    }
}
