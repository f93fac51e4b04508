use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use swapundo::census::{census, CensusRow};
use swapundo::identity::identity_word;
use swapundo::keeler::keeler_undo;
use swapundo::log::{format_plan, format_sequence, parse_log, SwapLog};
use swapundo::optimal::optimal_undo;
use swapundo::oracle::{min_outsiders, min_undo_for_scramble, SearchConfig, DEFAULT_BUDGET};
use swapundo::special::{build_p1, build_p2, undo_p1, undo_p2};
use swapundo::{compose, cycle_decompose, undoes, Error, SwapSequence, UndoPlan};

/// Undo mind-swap scrambles where no pair may swap twice.
///
/// Logs list one swap per line (`a b`) in the order the swaps happened; `#`
/// starts a comment and `n=<int>` declares the number of bodies. Use `-` to
/// read a log from stdin.
#[derive(Parser)]
#[command(name = "swapundo", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Keeler,
    Optimal,
    AutoSpecial,
}

#[derive(Clone, Copy)]
enum Outsiders {
    Fixed(usize),
    Auto,
}

fn parse_outsiders(s: &str) -> Result<Outsiders, String> {
    match s {
        "auto" => Ok(Outsiders::Auto),
        "0" | "1" | "2" => Ok(Outsiders::Fixed(s.parse().unwrap())),
        _ => Err(format!("expected 0, 1, 2 or auto, got '{s}'")),
    }
}

#[derive(clap::Args)]
struct SearchArgs {
    /// Longest undo to search for
    #[arg(long)]
    max_len: Option<usize>,
    /// Node budget for the exhaustive search
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

impl SearchArgs {
    fn config(&self) -> SearchConfig {
        SearchConfig {
            budget: self.budget,
            ..SearchConfig::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the cycle decomposition of a scramble
    Decompose { log: String },
    /// Print a plan that undoes a scramble
    Undo {
        log: String,
        #[arg(long, value_enum, default_value = "optimal")]
        method: Method,
    },
    /// Plan for (12)(23)...(n-1,n)
    UndoP1 { n: usize },
    /// Plan for (n-1,n)...(2n)(1n)
    UndoP2 { n: usize },
    /// The identity as m distinct transpositions of S_n
    IdentityWord { m: usize, n: usize },
    /// Check that a plan undoes a scramble
    Verify { scramble: String, plan: String },
    /// Shortest undo by exhaustive search
    MinUndo {
        log: String,
        #[arg(long, value_parser = parse_outsiders, default_value = "auto")]
        outsiders: Outsiders,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Fewest outsiders needed, with a witness plan
    MinOutsiders {
        log: String,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// TSV comparison of Keeler, optimal and oracle lengths over S_n
    Census {
        n: usize,
        /// Fill the oracle column (default: only for n <= 5)
        #[arg(long)]
        oracle: Option<bool>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

enum Failure {
    /// Infeasible request or nothing found.
    None(String),
    /// Bad input or usage.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::ZeroLabel | Error::DegenerateTransposition(_) => {
                Failure::Usage(e.to_string())
            }
            Error::LabelOutOfRange { .. } | Error::Unsupported(_) | Error::Precondition(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::None(e.to_string()),
        }
    }
}

fn read_log(path: &str) -> Result<SwapLog, Failure> {
    let text = if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?
    };
    parse_log(&text).map_err(|e| Failure::Usage(format!("{path}: {e}")))
}

fn auto_special(
    scramble: &SwapSequence,
    n: usize,
) -> Result<Option<(UndoPlan, &'static str)>, Error> {
    if n >= 2 {
        if *scramble == build_p1(n)? {
            return Ok(Some((undo_p1(n)?, "p1")));
        }
        if *scramble == build_p2(n)? {
            return Ok(Some((undo_p2(n)?, "p2")));
        }
    }
    Ok(None)
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Decompose { log } => {
            let log = read_log(&log)?;
            let p = compose(&log.to_sequence(), log.universe())?;
            let d = cycle_decompose(&p);
            Ok(format!(
                "{}\n# r={} support={} product={}\n",
                d,
                d.r(),
                d.support_size(),
                log.to_sequence()
            ))
        }
        Command::Undo { log, method } => {
            let log = read_log(&log)?;
            let scramble = log.to_sequence();
            let n = log.universe();
            let p = compose(&scramble, n)?;
            let (plan, name) = match method {
                Method::Keeler => (keeler_undo(&p)?, "keeler"),
                Method::Optimal => (optimal_undo(&p)?, "optimal"),
                Method::AutoSpecial => match auto_special(&scramble, n)? {
                    Some(found) => found,
                    None => (optimal_undo(&p)?, "optimal"),
                },
            };
            if !undoes(plan.sequence(), &scramble, plan.universe()) {
                return Err(Failure::None(format!(
                    "{name} plan reuses a swap from the log"
                )));
            }
            Ok(format_plan(&plan, name))
        }
        Command::UndoP1 { n } => Ok(format_plan(&undo_p1(n)?, "p1")),
        Command::UndoP2 { n } => Ok(format_plan(&undo_p2(n)?, "p2")),
        Command::IdentityWord { m, n } => {
            let w = identity_word(m, n)?;
            Ok(format!(
                "# identity word: {m} distinct swaps in S_{n}\n# product (right to left): {}\n{}",
                w.word(),
                format_sequence(w.word(), Some(n))
            ))
        }
        Command::Verify { scramble, plan } => {
            let scramble = read_log(&scramble)?;
            let plan = read_log(&plan)?;
            let universe = scramble.universe().max(plan.universe());
            let (s, c) = (scramble.to_sequence(), plan.to_sequence());
            if undoes(&c, &s, universe) {
                Ok(format!(
                    "ok: {} swaps undo the scramble on {universe} bodies\n",
                    c.len()
                ))
            } else if !c.is_distinct() {
                Err(Failure::None("plan repeats a swap".into()))
            } else if c.iter().any(|t| s.contains(t)) {
                Err(Failure::None("plan reuses a swap from the scramble".into()))
            } else {
                Err(Failure::None("plan does not restore every body".into()))
            }
        }
        Command::MinUndo {
            log,
            outsiders,
            search,
        } => {
            let log = read_log(&log)?;
            let scramble = log.to_sequence();
            let n = log.universe();
            let levels = match outsiders {
                Outsiders::Fixed(j) => vec![j],
                Outsiders::Auto => vec![0, 1, 2],
            };
            let mut notes = String::new();
            for j in levels {
                let result =
                    min_undo_for_scramble(&scramble, n, j, search.max_len, &search.config())?;
                notes.push_str(&format!(
                    "# {j} outsiders: searched to length {}, {} nodes\n",
                    result.stats.depth_reached, result.stats.nodes
                ));
                if let Some(plan) = result.plan {
                    return Ok(format!("{notes}{}", format_plan(&plan, "minimal")));
                }
            }
            Err(Failure::None(format!("{notes}no undo within the bound")))
        }
        Command::MinOutsiders { log, search } => {
            let log = read_log(&log)?;
            let report = min_outsiders(
                &log.to_sequence(),
                log.universe(),
                search.max_len,
                &search.config(),
            )?;
            let mut out = format!("{}\n", report.outsiders);
            for level in &report.levels {
                match level.stats {
                    Some(stats) => out.push_str(&format!(
                        "# {} outsiders: {} free swaps, {} nodes, {}\n",
                        level.outsiders,
                        level.free_factors,
                        stats.nodes,
                        if level.found { "undo found" } else { "no undo" }
                    )),
                    None => out.push_str(&format!(
                        "# {} outsiders: undo by construction\n",
                        level.outsiders
                    )),
                }
            }
            out.push_str(&format_plan(&report.witness, "witness"));
            Ok(out)
        }
        Command::Census { n, oracle, budget } => {
            let with_oracle = oracle.unwrap_or(n <= 5);
            let config = SearchConfig {
                budget,
                ..SearchConfig::default()
            };
            let rows = census(n, with_oracle, &config)?;
            let mut out = format!("{}\n", CensusRow::HEADER);
            for row in rows {
                out.push_str(&row.to_tsv());
                out.push('\n');
            }
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::None(msg)) => {
            eprintln!("swapundo: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("swapundo: {msg}");
            ExitCode::from(2)
        }
    }
}
