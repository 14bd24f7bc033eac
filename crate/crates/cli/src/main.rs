//! `gcx`: command-line front end for graded-convexity.
//!
//! Exit codes: 0 success (or a check that holds / does not apply), 1 a check
//! that fails, 2 input or parse error, 3 node budget exhausted.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use graded_convexity::{Error, DEFAULT_NODE_BUDGET};

use crate::output::{Mode, Record};

#[derive(Parser, Debug)]
#[command(name = "gcx", version, about = "Convexity and homological parameters of finite set systems and complexes")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "table", global = true)]
    output: Mode,
    /// Worker threads (0 = one per core).
    #[arg(long, default_value_t = 0, global = true)]
    threads: usize,
    /// Node budget for exponential searches.
    #[arg(long, env = "GCX_BUDGET", default_value_t = DEFAULT_NODE_BUDGET, global = true)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Helly number of a set system (.ss).
    Helly {
        #[arg(long)]
        input: PathBuf,
    },
    /// Radon number, with a largest point set admitting no Radon partition.
    Radon {
        #[arg(long)]
        input: PathBuf,
    },
    /// Minimal Helly obstructions.
    Obstructions {
        #[arg(long)]
        input: PathBuf,
    },
    /// Graded profile of a registered parameter.
    Graded {
        #[arg(long)]
        input: PathBuf,
        /// helly, radon, partition, colorful or colorful-plain.
        #[arg(long, default_value = "radon")]
        param: String,
        /// Largest sub-list size (defaults to the member count).
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        c: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// k-th partition number.
    Partition {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Colorful Helly number; plain cliques unless --c is given.
    Colorful {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        c: Option<usize>,
    },
    /// Clique density among s-tuples and the largest c-wise clique.
    FhProfile {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long, default_value_t = 2)]
        c: usize,
    },
    /// Reduced Betti numbers over GF(2) of a complex (.sc).
    Betti {
        #[arg(long)]
        input: PathBuf,
    },
    /// Homological shatter profile of a subcomplex family (.scf).
    Shatter {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        h: usize,
        /// Largest selector size (defaults to the family size).
        #[arg(long)]
        k: Option<usize>,
    },
    /// h-level topological complexity of a subcomplex family (.scf).
    Level {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        h: usize,
    },
    /// Largest dim σ + dim τ over vertex-disjoint faces of a complex.
    Mu {
        #[arg(long)]
        input: PathBuf,
    },
    /// k-skeleton of the simplex on n vertices, as .sc text.
    Skeleton {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Check a chain map (.cm) for being a homological almost-embedding.
    VerifyHae {
        #[arg(long)]
        k: PathBuf,
        #[arg(long)]
        l: PathBuf,
        #[arg(long)]
        map: PathBuf,
    },
    /// Search for a homological almost-embedding of K into L.
    SearchHae {
        #[arg(long)]
        k: PathBuf,
        #[arg(long)]
        l: PathBuf,
    },
    /// The tower bound Xi(r).
    Xi {
        #[arg(long)]
        r: u64,
    },
    /// Run a named check on a set system.
    Check {
        /// levi, jamison, graded-linear, radongrowth, hellygrowth or holmsen.
        #[arg(long)]
        suite: String,
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated key=value arguments, e.g. m=2,n=3.
        #[arg(long, default_value = "")]
        args: String,
    },
    /// Least t1 in [t0^2, tmax] with Xi(Psi(t1)) * Psi(t0) < t1.
    Rg2Witness {
        #[arg(long)]
        psi: PathBuf,
        #[arg(long)]
        tmax: u64,
    },
    /// Sign of rad(t) - log2 t for t = 1..=T.
    DiagnoseGrowth {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        t: usize,
    },
    /// Generate a seeded corpus of set systems.
    GenCorpus {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 6)]
        ground: usize,
        #[arg(long, default_value_t = 6)]
        members: usize,
        #[arg(long, default_value = "random")]
        kind: String,
        /// Directory for one .ss file per instance; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// How a successfully executed command ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Fails,
    Budget,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global() {
            eprintln!("error: thread pool: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::dispatch(&cli) {
        Ok((records, status)) => {
            for r in &records {
                println!("{}", r.render(cli.output));
            }
            ExitCode::from(match status {
                Status::Ok => 0,
                Status::Fails => 1,
                Status::Budget => 3,
            })
        }
        Err(e) => {
            let code = match e {
                Error::BudgetExceeded { .. } => 3,
                _ => 2,
            };
            if cli.output == Mode::Structured {
                let mut r = Record::new("error").field("message", e.to_string());
                if let Error::BudgetExceeded { limit, lower_bound } = e {
                    r = r.field("budget", limit);
                    if let Some(b) = lower_bound {
                        r = r.field("lower_bound", b);
                    }
                }
                println!("{}", r.render(Mode::Structured));
            }
            eprintln!("error: {e}");
            ExitCode::from(code)
        }
    }
}
