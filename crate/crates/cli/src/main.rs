use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

/// Recognize and decompose cographs and N-free posets.
///
/// Results go to stdout as JSON. Exit status is 0 when the property holds,
/// 1 when it fails (a witness is printed), 2 on bad input or usage.
#[derive(Parser)]
#[command(version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test a graph for P4-freeness.
    GraphCheck {
        /// Edge-list file, `-` for stdin.
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Property::P4free)]
        property: Property,
    },
    /// Print the cotree of a cograph.
    Cotree {
        file: PathBuf,
        #[command(flatten)]
        format: TreeFormat,
    },
    /// Find a vertex whose N_x is nonempty in a connected graph.
    Theorem2 { file: PathBuf },
    /// Poset queries.
    Poset {
        /// Relation file, `-` for stdin.
        file: PathBuf,
        #[arg(value_enum)]
        action: PosetAction,
        /// Treat the relations as covers and close them (default).
        #[arg(long, conflicts_with = "full")]
        covers: bool,
        /// Require the relations to be transitively closed already.
        #[arg(long)]
        full: bool,
        /// Element label for `endpoint`.
        #[arg(long)]
        x: Option<u32>,
        /// Procedure for `nfree`.
        #[arg(long, value_enum, default_value_t = Method::Lemma3)]
        method: Method,
        #[command(flatten)]
        format: TreeFormat,
    },
    /// Generate an instance in the text formats.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        size: usize,
        /// Edge probability for `gnp` and `poset`.
        p: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// First integer of the window for `h`.
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        offset: i64,
        /// Emit one fixture record instead of the text format.
        #[arg(long)]
        ndjson: bool,
    },
    /// Check the engines against brute force on every small instance.
    OracleCompare {
        #[arg(long, default_value_t = 5)]
        max_graph_n: usize,
        #[arg(long, default_value_t = 4)]
        max_poset_n: usize,
    },
}

#[derive(Args)]
#[group(multiple = false)]
struct TreeFormat {
    /// JSON tree (default).
    #[arg(long)]
    json: bool,
    /// Graphviz DOT.
    #[arg(long)]
    dot: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    P4free,
    Cograph,
}

#[derive(Clone, Copy, ValueEnum)]
enum PosetAction {
    Nfree,
    Sptree,
    Lemma4,
    Endpoint,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Lemma3,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    H,
    Cotree,
    Sptree,
    Gnp,
    Poset,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::GraphCheck { file, property } => commands::graph_check(&file, property),
        Command::Cotree { file, format } => commands::cotree(&file, format.dot),
        Command::Theorem2 { file } => commands::theorem2(&file),
        Command::Poset {
            file,
            action,
            full,
            x,
            method,
            format,
            ..
        } => commands::poset(&file, action, full, x, method, format.dot),
        Command::Gen {
            kind,
            size,
            p,
            seed,
            offset,
            ndjson,
        } => commands::gen(kind, size, p, seed, offset, ndjson),
        Command::OracleCompare {
            max_graph_n,
            max_poset_n,
        } => commands::oracle_compare(max_graph_n, max_poset_n),
    };
    match result {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
