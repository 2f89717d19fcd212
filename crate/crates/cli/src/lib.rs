//! Command dispatch for the `ufa` binary.
//!
//! Exit codes: 0 success (or the checked property holds), 1 a theorem check
//! failed, 2 bad input (ambiguous automaton, unreadable or malformed file,
//! usage error), 3 the determinization state cap was exceeded.

pub mod verify;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use ufa_core::automata::{
    backward_determinize, complement_ufa, format_word, forward_determinize, is_unambiguous,
    ComplementError, Nfa, DEFAULT_CAP,
};
use ufa_core::bridge::{extract_graph, graph_to_ufa, verify_tightness, witness_ufa, ExtractError};
use ufa_core::format::{parse_automaton, parse_graph, serialize_automaton, serialize_graph};
use ufa_core::graph::{verify_product_bound, Graph};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// Largest `n` for which `verify-graphs` enumerates all labeled graphs.
pub const MAX_EXHAUSTIVE_N: usize = 6;

#[derive(Parser, Debug)]
#[command(
    name = "ufa",
    version,
    about = "Complement unambiguous automata and check clique/coclique bounds"
)]
struct Cli {
    /// Limit on subsets discovered by a determinization
    #[arg(long, global = true, env = "UFA_CAP", default_value_t = DEFAULT_CAP)]
    cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Complement an unambiguous automaton (smaller of the two determinizations)
    Complement {
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Forward or backward subset construction
    Determinize {
        input: PathBuf,
        #[arg(long, value_enum)]
        direction: DirectionArg,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check whether an automaton is unambiguous
    CheckUnambiguous { input: PathBuf },
    /// Graph of state pairs reachable by a common word
    ExtractGraph {
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Unambiguous automaton with one letter per clique and per coclique
    GraphToUfa {
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Count cliques and cocliques and check the product bound
    CountCliques { input: PathBuf },
    /// Write the n-state automaton with two large determinizations
    Witness {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Exhaustively check the clique/coclique bounds on all small graphs
    VerifyGraphs {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
    /// Check both determinization sizes of the witness automata
    VerifyTightness {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DirectionArg {
    Fwd,
    Bwd,
}

/// A failure that ends a command with the given exit code and message.
struct Exit {
    code: i32,
    message: String,
}

fn bad_input(message: impl Into<String>) -> Exit {
    Exit {
        code: EXIT_BAD_INPUT,
        message: message.into(),
    }
}

/// Parses `args` (including the program name) and runs the command, writing
/// to the given streams. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_BAD_INPUT
            } else {
                EXIT_OK
            };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let result = dispatch(cli, out).unwrap_or_else(|e| {
        let _ = writeln!(err, "error: {}", e.message);
        e.code
    });
    let _ = out.flush();
    result
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, Exit> {
    let cap = cli.cap;
    match cli.command {
        Command::Complement { input, output } => {
            let nfa = read_automaton(&input)?;
            let (complement, report) = complement_ufa(&nfa, cap).map_err(|e| match e {
                ComplementError::Ambiguous { witness } => bad_input(format!(
                    "input is ambiguous; witness {}",
                    format_word(&witness)
                )),
                e @ ComplementError::CapExceeded { .. } => Exit {
                    code: EXIT_CAP,
                    message: e.to_string(),
                },
            })?;
            emit(out, &report.to_string())?;
            deliver(out, output.as_deref(), &serialize_automaton(&complement))?;
            Ok(EXIT_OK)
        }
        Command::Determinize {
            input,
            direction,
            output,
        } => {
            let nfa = read_automaton(&input)?;
            let det = match direction {
                DirectionArg::Fwd => forward_determinize(&nfa, cap),
                DirectionArg::Bwd => backward_determinize(&nfa, cap),
            }
            .map_err(|e| Exit {
                code: EXIT_CAP,
                message: e.to_string(),
            })?;
            emit(
                out,
                &format!(
                    "direction={} states={} marked={}",
                    det.direction().short_name(),
                    det.len(),
                    det.marked().len()
                ),
            )?;
            deliver(out, output.as_deref(), &serialize_automaton(&det.to_nfa()))?;
            Ok(EXIT_OK)
        }
        Command::CheckUnambiguous { input } => {
            let nfa = read_automaton(&input)?;
            match is_unambiguous(&nfa).witness() {
                None => {
                    emit(out, "unambiguous")?;
                    Ok(EXIT_OK)
                }
                Some(w) => {
                    emit(out, &format!("ambiguous witness={}", format_word(w)))?;
                    Ok(EXIT_BAD_INPUT)
                }
            }
        }
        Command::ExtractGraph { input, output } => {
            let nfa = read_automaton(&input)?;
            let g = extract_graph(&nfa).map_err(|ExtractError::Ambiguous { witness }| {
                bad_input(format!(
                    "input is ambiguous; witness {}",
                    format_word(&witness)
                ))
            })?;
            deliver(out, output.as_deref(), &serialize_graph(&g))?;
            Ok(EXIT_OK)
        }
        Command::GraphToUfa { input, output } => {
            let g = read_graph(&input)?;
            deliver(
                out,
                output.as_deref(),
                &serialize_automaton(&graph_to_ufa(&g)),
            )?;
            Ok(EXIT_OK)
        }
        Command::CountCliques { input } => {
            let g = read_graph(&input)?;
            let r = verify_product_bound(&g);
            emit(
                out,
                &format!(
                    "n={} cliques={} cocliques={} product={} bound={} holds={}",
                    r.n,
                    r.cliques,
                    r.cocliques,
                    r.product,
                    r.bound,
                    yes_no(r.holds && r.min_side_holds)
                ),
            )?;
            Ok(if r.holds && r.min_side_holds {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            })
        }
        Command::Witness { n, output } => {
            let report = verify_tightness(n, cap).map_err(|e| Exit {
                code: EXIT_CAP,
                message: e.to_string(),
            })?;
            emit(out, &report.to_string())?;
            deliver(
                out,
                output.as_deref(),
                &serialize_automaton(&witness_ufa(n)),
            )?;
            Ok(if report.holds() {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            })
        }
        Command::VerifyGraphs { max_n } => {
            if max_n > MAX_EXHAUSTIVE_N {
                return Err(bad_input(format!(
                    "--max-n {max_n} is too large for exhaustive enumeration (at most {MAX_EXHAUSTIVE_N})"
                )));
            }
            let mut code = EXIT_OK;
            for n in 0..=max_n {
                let summary = verify::verify_all_graphs(n);
                emit(
                    out,
                    &format!(
                        "n={n} graphs={} violations={}",
                        summary.graphs, summary.violations
                    ),
                )?;
                if let Some(g) = summary.first_violation {
                    emit(out, "# first violating graph:")?;
                    write_text(out, &serialize_graph(&g))?;
                    code = EXIT_VIOLATION;
                }
            }
            Ok(code)
        }
        Command::VerifyTightness { max_n } => {
            let mut code = EXIT_OK;
            for n in 0..=max_n {
                let report = verify_tightness(n, cap).map_err(|e| Exit {
                    code: EXIT_CAP,
                    message: e.to_string(),
                })?;
                emit(out, &report.to_string())?;
                if !report.holds() {
                    code = EXIT_VIOLATION;
                }
            }
            Ok(code)
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn read_text(path: &Path) -> Result<String, Exit> {
    fs::read_to_string(path).map_err(|e| bad_input(format!("cannot read {}: {e}", path.display())))
}

fn read_automaton(path: &Path) -> Result<Nfa, Exit> {
    parse_automaton(&read_text(path)?).map_err(|e| bad_input(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Exit> {
    parse_graph(&read_text(path)?).map_err(|e| bad_input(format!("{}: {e}", path.display())))
}

fn io_failure(e: io::Error) -> Exit {
    bad_input(format!("write failed: {e}"))
}

fn emit(out: &mut dyn Write, line: &str) -> Result<(), Exit> {
    writeln!(out, "{line}").map_err(io_failure)
}

fn write_text(out: &mut dyn Write, text: &str) -> Result<(), Exit> {
    out.write_all(text.as_bytes()).map_err(io_failure)
}

/// Writes a file body to `path`, or to stdout after the summary line.
fn deliver(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<(), Exit> {
    match path {
        Some(p) => {
            fs::write(p, text).map_err(|e| bad_input(format!("cannot write {}: {e}", p.display())))
        }
        None => write_text(out, text),
    }
}
