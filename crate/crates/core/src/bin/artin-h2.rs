use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use artin_homology::check::run_checks;
use artin_homology::graph::catalog_names;
use artin_homology::io::{
    parse_graph, render_generators_json, render_generators_text, render_json,
    render_stability_json, render_text,
};
use artin_homology::{
    from_catalog, homology_summary, omega_sets, stability_scan, CoxeterGraph, Flavor,
};

#[derive(Parser)]
#[command(
    name = "artin-h2",
    version,
    about = "Homology invariants of Artin and Coxeter groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariant profile and homology summary.
    Compute {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        json: bool,
    },
    /// Explicit generator words of the second homology.
    Generators {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = FlavorArg::Artin)]
        flavor: FlavorArg,
        #[arg(long)]
        json: bool,
    },
    /// Run every internal identity and oracle comparison.
    Check {
        #[command(flatten)]
        source: Source,
    },
    /// Mod-2 rank trajectory along the family grown from a seed graph.
    Stability {
        #[arg(
            long,
            value_name = "PATH",
            required_unless_present = "seed_type",
            conflicts_with = "seed_type"
        )]
        seed_file: Option<PathBuf>,
        #[arg(long, value_name = "NAME")]
        seed_type: Option<String>,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        json: bool,
    },
    /// Supported catalog names.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Graph file in the `vertex` / `edge` line format.
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
    /// Catalog name such as `A3`, `I2(5)` or `~D4`.
    #[arg(long = "type", value_name = "NAME")]
    type_name: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FlavorArg {
    Artin,
    Coxeter,
}

/// Exit codes: 1 usage, 2 parse, 3 failed internal consistency.
struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn usage(message: impl fmt::Display) -> Self {
        CliError {
            code: 1,
            message: message.to_string(),
        }
    }

    fn parse(message: impl fmt::Display) -> Self {
        CliError {
            code: 2,
            message: message.to_string(),
        }
    }

    fn inconsistent(message: impl fmt::Display) -> Self {
        CliError {
            code: 3,
            message: message.to_string(),
        }
    }
}

fn read_graph_file(path: &Path) -> Result<CoxeterGraph, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| CliError::parse(format!("{}: {e}", path.display())))
}

fn load(source: &Source) -> Result<CoxeterGraph, CliError> {
    match (&source.file, &source.type_name) {
        (Some(path), _) => read_graph_file(path),
        (None, Some(name)) => from_catalog(name).map_err(CliError::parse),
        (None, None) => Err(CliError::usage("one of --file or --type is required")),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Compute { source, json } => {
            let g = load(&source)?;
            let summary = homology_summary(&g);
            if json {
                println!("{}", render_json(&g, &summary));
            } else {
                print!("{}", render_text(&g, &summary));
            }
            if !summary.profile.howlett_identity_holds() {
                return Err(CliError::inconsistent("Howlett identity violated"));
            }
        }
        Command::Generators {
            source,
            flavor,
            json,
        } => {
            let g = load(&source)?;
            let flavor = match flavor {
                FlavorArg::Artin => Flavor::Artin,
                FlavorArg::Coxeter => Flavor::Coxeter,
            };
            let om = omega_sets(&g, flavor);
            if json {
                println!("{}", render_generators_json(&g, &om));
            } else {
                print!("{}", render_generators_text(&g, &om));
            }
            if !om.all_words().all(artin_homology::in_commutator_subgroup) {
                return Err(CliError::inconsistent(
                    "a generator word does not abelianize to zero",
                ));
            }
        }
        Command::Check { source } => {
            let g = load(&source)?;
            let results = run_checks(&g);
            let mut failed = 0;
            for r in &results {
                println!(
                    "[{}] {}: {}",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.name,
                    r.detail
                );
                failed += usize::from(!r.passed);
            }
            if failed > 0 {
                return Err(CliError::inconsistent(format!("{failed} check(s) failed")));
            }
        }
        Command::Stability {
            seed_file,
            seed_type,
            n_max,
            json,
        } => {
            let seed = match (seed_file, seed_type) {
                (Some(path), _) => read_graph_file(&path)?,
                (None, Some(name)) => from_catalog(&name).map_err(CliError::parse)?,
                (None, None) => return Err(CliError::usage("--seed-file is required")),
            };
            let report = stability_scan(&seed, n_max).map_err(CliError::usage)?;
            if json {
                println!("{}", render_stability_json(&seed, &report));
            } else {
                for (n, rank) in &report.ranks {
                    println!("n = {n:>3}  rank H2(A; Z_2) = {rank}");
                }
                println!("stable from n = 3: {}", report.stable);
            }
            if !report.stable {
                return Err(CliError::inconsistent("rank trajectory is not stable"));
            }
        }
        Command::Catalog {
            action: CatalogAction::List,
        } => {
            for name in catalog_names() {
                println!("{name}");
            }
        }
    }
    Ok(())
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
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
