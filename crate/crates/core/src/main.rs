use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use braid_shift::analysis::{count_braid_subgroups, count_subgroups};
use braid_shift::extension::compute_tower;
use braid_shift::oracle::DEFAULT_BUDGET;
use braid_shift::report::{
    csv_cycles, csv_tower, listing_cycles, listing_tower, shift_report, tower_report,
};
use braid_shift::shift::{ShiftDecomposition, DEFAULT_VERTEX_CAP};
use braid_shift::verify::run_all;
use braid_shift::{Error, FiniteGroup, Result};

#[derive(Parser)]
#[command(
    name = "braid-shift",
    version,
    about = "Finite representations of braid commutator subgroups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Worker threads for the per-class searches (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Cap on |Σ|² shift-graph vertices.
    #[arg(long, global = true, default_value_t = DEFAULT_VERTEX_CAP)]
    vertex_cap: usize,
}

#[derive(Args)]
struct GroupArg {
    /// Group: S4, A5, SL2(3), Z6, Z2xZ4, table:<path>.
    #[arg(value_name = "GROUP")]
    group: Option<String>,

    #[arg(
        short = 'g',
        long = "group",
        value_name = "GROUP",
        conflicts_with = "group"
    )]
    group_flag: Option<String>,
}

impl GroupArg {
    fn spec(&self) -> Result<&str> {
        self.group
            .as_deref()
            .or(self.group_flag.as_deref())
            .ok_or_else(|| Error::usage("no group given"))
    }
}

#[derive(Args)]
struct LevelArg {
    /// Top of the tower.
    #[arg(value_name = "NMAX")]
    nmax: Option<usize>,

    #[arg(long = "nmax", value_name = "NMAX", conflicts_with = "nmax")]
    nmax_flag: Option<usize>,
}

impl LevelArg {
    fn get(&self, default: usize) -> usize {
        self.nmax.or(self.nmax_flag).unwrap_or(default)
    }
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Listing,
    Json,
    Csv,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Cycle decomposition of Hom(K3, Σ).
    Shift {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, value_enum, default_value = "listing")]
        format: Format,
        /// Only list type-II cycles.
        #[arg(long)]
        type2: bool,
        /// Print only the number of listed cycles.
        #[arg(long)]
        count_only: bool,
    },
    /// Census of Hom(K_n, Σ) and Hom(B_n, Σ) for n = 3..NMAX.
    Tower {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        nmax: LevelArg,
        #[arg(long, value_enum, default_value = "listing")]
        format: Format,
    },
    /// Subgroups of index r of K_n and B_n, for Σ = S_r.
    Subgroups {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        nmax: LevelArg,
    },
    /// Extensions to the braid groups, level by level.
    Braid {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        nmax: LevelArg,
    },
    /// Run every invariant suite and the brute-force cross-check.
    Verify {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        nmax: LevelArg,
        /// Relation-check budget for the brute-force oracle.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Graphviz rendering of the shift graph.
    ExportGraph {
        #[command(flatten)]
        group: GroupArg,
    },
}

fn decompose(spec: &str, cap: usize) -> Result<Arc<ShiftDecomposition>> {
    let g = Arc::new(FiniteGroup::from_spec(spec)?);
    Ok(Arc::new(ShiftDecomposition::decompose(g, cap)?))
}

fn run(cli: Cli) -> Result<bool> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::usage(e.to_string()))?;
    }
    let cap = cli.vertex_cap;
    match cli.command {
        Command::Shift {
            group,
            format,
            type2,
            count_only,
        } => {
            let dec = decompose(group.spec()?, cap)?;
            let report = shift_report(&dec, type2);
            if count_only {
                println!("{}", report.cycles.len());
                return Ok(true);
            }
            match format {
                Format::Listing => print!("{}", listing_cycles(&report)),
                Format::Json => println!("{}", to_json(&report)?),
                Format::Csv => print!("{}", csv_cycles(&report)?),
                Format::Dot => print!("{}", dec.to_dot()),
            }
        }
        Command::Tower {
            group,
            nmax,
            format,
        } => {
            let tower = compute_tower(decompose(group.spec()?, cap)?, nmax.get(5))?;
            let report = tower_report(&tower, true)?;
            match format {
                Format::Listing => print!("{}", listing_tower(&report)),
                Format::Json => println!("{}", to_json(&report)?),
                Format::Csv => print!("{}", csv_tower(&report)?),
                Format::Dot => print!("{}", tower.decomposition().to_dot()),
            }
        }
        Command::Subgroups { group, nmax } => {
            let tower = compute_tower(decompose(group.spec()?, cap)?, nmax.get(5))?;
            let r = tower
                .group()
                .degree()
                .ok_or_else(|| Error::usage("subgroup counting needs a symmetric group"))?;
            for n in 3..=tower.n_max() {
                println!(
                    "n={n}: index-{r} subgroups of K{n}: {}, of B{n}: {}",
                    count_subgroups(&tower, n)?,
                    count_braid_subgroups(&tower, n)?
                );
            }
        }
        Command::Braid { group, nmax } => {
            let tower = compute_tower(decompose(group.spec()?, cap)?, nmax.get(5))?;
            println!("B2: {} homomorphisms", tower.braid_hom_count(2));
            for n in 3..=tower.n_max() {
                println!(
                    "B{n}: {} homomorphisms from {} (class, c) pairs",
                    tower.braid_hom_count(n),
                    tower.braid_class_count(n)
                );
            }
        }
        Command::Verify {
            group,
            nmax,
            budget,
        } => {
            let n = nmax.get(5);
            let tower = compute_tower(decompose(group.spec()?, cap)?, n)?;
            let mut all_passed = true;
            for suite in run_all(&tower, n, budget)? {
                let verdict = if suite.passed { "PASS" } else { "FAIL" };
                all_passed &= suite.passed;
                println!("{verdict} {}", suite.name);
                for note in &suite.notes {
                    println!("     {note}");
                }
            }
            return Ok(all_passed);
        }
        Command::ExportGraph { group } => {
            print!("{}", decompose(group.spec()?, cap)?.to_dot());
        }
    }
    Ok(true)
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value).map_err(|e| Error::Io(std::io::Error::other(e)))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(4),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Usage(_) | Error::Io(_) => 2,
                Error::Resource { .. } => 3,
                Error::Invariant(_) => 4,
            })
        }
    }
}
