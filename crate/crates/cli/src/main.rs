//! `plancol`: command-line front end for the plane-graph coloring toolkit.
//!
//! Exit codes: 0 success / property holds, 1 property fails (violation,
//! UNSAT, failing precoloring or configuration, negative case minimum),
//! 2 usage or input error, 3 internal error.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "plancol", version, about = "Defective colorings and discharging on plane graphs")]
struct Cli {
    /// Also write the report as JSON to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json_out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Test membership in F: no 5-cycles, no two triangles sharing an edge.
    Check(InputArgs),
    /// Find a defective coloring.
    Color {
        #[command(flatten)]
        input: InputArgs,
        /// Per-color defect caps, e.g. 1,1,0.
        #[arg(long, default_value = "1,1,0")]
        spec: String,
    },
    /// Extend a precoloring of C0 so that inner vertices avoid their C0 neighbors' colors.
    Superextend {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        root: RootArgs,
        /// Colors of the C0 vertices in order, 1-based, comma separated.
        #[arg(long)]
        precolor: String,
        #[arg(long, default_value = "1,1,0")]
        spec: String,
    },
    /// Check that every valid precoloring of C0 superextends.
    Theorem {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        root: RootArgs,
        #[arg(long, default_value = "1,1,0")]
        spec: String,
        /// Check one precoloring per orbit under permutations of equal-cap colors.
        #[arg(long)]
        symmetry: bool,
    },
    /// Reducible configuration catalog.
    Configs {
        #[command(subcommand)]
        action: ConfigsAction,
    },
    /// Apply the discharging rules and print the charge ledger.
    Discharge {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        root: RootArgs,
        /// Print `key=value` lines instead of the table.
        #[arg(long)]
        kv: bool,
    },
    /// Minimum final charge over all local scenarios around a center.
    Cases {
        /// vertex:K, c0-vertex:K, face:3, face:4, c0:3 or c0:7.
        #[arg(long)]
        center: String,
        /// Predicate id or lemma label to switch off; repeatable.
        #[arg(long, value_name = "PREDICATE")]
        disable: Vec<String>,
        /// Print every scenario with its verdict instead of the minimum.
        #[arg(long)]
        table: bool,
    },
    /// Generate connected plane graphs up to isomorphism of the embedding.
    Gen {
        #[arg(long)]
        max_n: usize,
        /// all, family_F or has_triangle.
        #[arg(long, default_value = "all")]
        filter: String,
        #[arg(long, value_enum, default_value_t = Format::Pcode)]
        out: Format,
        /// Write here instead of standard output.
        #[arg(long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum ConfigsAction {
    /// Verify local extendability.
    Verify {
        /// A single configuration by name.
        #[arg(long, conflicts_with = "all")]
        id: Option<String>,
        /// Every catalog entry (the default).
        #[arg(long)]
        all: bool,
        /// Also run the deliberately falsified variants (expected to fail).
        #[arg(long)]
        falsified: bool,
        /// Read configurations from a text file instead of the catalog.
        #[arg(long, value_name = "PATH")]
        file: Option<PathBuf>,
    },
    /// Print the catalog in its text format.
    List,
}

#[derive(Args, Debug)]
struct InputArgs {
    #[arg(long, value_name = "PATH")]
    input: PathBuf,
    /// Input format; inferred from the extension (.pcode) when omitted.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args, Debug)]
struct RootArgs {
    /// C0 as 1-based vertex ids; defaults to the document's `outer:` line.
    #[arg(long, value_name = "VERTICES")]
    c0: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Rot,
    Pcode,
}

/// What a command run produced.
pub struct Outcome {
    pub code: u8,
    pub json: serde_json::Value,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Internal(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

pub fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

pub fn internal(e: impl std::fmt::Display) -> CliError {
    CliError::Internal(e.to_string())
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    use commands::*;
    match cli.command {
        Command::Check(i) => check(&i),
        Command::Color { input, spec } => color(&input, &spec),
        Command::Superextend { input, root, precolor, spec } => superextend(&input, &root, &precolor, &spec),
        Command::Theorem { input, root, spec, symmetry } => theorem(&input, &root, &spec, symmetry),
        Command::Configs { action: ConfigsAction::Verify { id, all: _, falsified, file } } => {
            configs_verify(id.as_deref(), falsified, file.as_deref())
        }
        Command::Configs { action: ConfigsAction::List } => configs_list(),
        Command::Discharge { input, root, kv } => discharge(&input, &root, kv),
        Command::Cases { center, disable, table } => cases(&center, &disable, table),
        Command::Gen { max_n, filter, out, output } => gen(max_n, &filter, out, output.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let json_out = cli.json_out.clone();
    // Invariant violations inside the library surface as panics.
    std::panic::set_hook(Box::new(|info| eprintln!("internal error: {info}")));
    let result = std::panic::catch_unwind(|| run(cli)).unwrap_or_else(|_| Err(internal("panic")));
    match result {
        Ok(out) => {
            if let Some(p) = json_out {
                let text = serde_json::to_string_pretty(&out.json).expect("JSON values serialize") + "\n";
                if let Err(e) = std::fs::write(&p, text) {
                    eprintln!("error: cannot write {}: {e}", p.display());
                    return ExitCode::from(2);
                }
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            match &e {
                CliError::Usage(m) => eprintln!("error: {m}"),
                CliError::Internal(m) => eprintln!("internal error: {m}"),
            }
            ExitCode::from(e.code())
        }
    }
}
