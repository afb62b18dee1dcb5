use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod cmd;
mod render;

#[derive(Parser, Debug)]
#[command(
    name = "constacyclic",
    version,
    about = "Factor binomials and build, dualize and classify constacyclic codes over finite fields"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write output to FILE instead of stdout.
    #[arg(long, value_name = "FILE", global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args, Debug, Clone)]
struct FieldArgs {
    /// Characteristic.
    #[arg(long)]
    p: u64,
    /// Extension degree.
    #[arg(long, default_value_t = 1)]
    s: u32,
    /// Monic irreducible modulus, coefficients constant term first
    /// (default: smallest in canonical order).
    #[arg(long, value_delimiter = ',')]
    modulus: Option<Vec<u32>>,
}

#[derive(Args, Debug, Clone)]
struct CodeArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Code length.
    #[arg(long)]
    n: u64,
    /// Shift constant: `1`, `-1`, an element encoding or `b^k`.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    lambda: String,
}

#[derive(Args, Debug, Clone)]
struct GenArgs {
    #[command(flatten)]
    code: CodeArgs,
    /// Generator polynomial: comma-separated elements, constant term first.
    #[arg(long, allow_hyphen_values = true)]
    gen: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Field parameters and canonical generator.
    Field {
        #[command(subcommand)]
        cmd: FieldCmd,
    },
    /// Factor x^m - c.
    Factor {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        m: u64,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        c: String,
    },
    /// Twisted factorization of x^(2^a m) -/+ scale^(2^a m).
    Grid {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        a: u32,
        #[arg(long)]
        m: u64,
        #[arg(long, value_enum, default_value_t = Variant::All)]
        variant: Variant,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        scale: String,
    },
    /// Constacyclic codes.
    Codes {
        #[command(subcommand)]
        cmd: CodesCmd,
    },
    /// Run the brute-force checks on one code.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
struct VerifyArgs {
    #[command(flatten)]
    gen: GenArgs,
    /// Cap on the number of vectors any exhaustive check may enumerate.
    #[arg(long, default_value_t = 20_000)]
    bound: u64,
}

#[derive(Subcommand, Debug)]
enum FieldCmd {
    Info(FieldArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Variant {
    All,
    Even,
    Odd,
}

#[derive(Subcommand, Debug)]
enum CodesCmd {
    /// Number of codes of the given length and constant.
    Count(CodeArgs),
    /// List the codes by exponent vector.
    List {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        listing: ListArgs,
    },
    /// Euclidean dual of a code.
    Dual(GenArgs),
    /// Self-dual negacyclic codes.
    Selfdual {
        #[command(subcommand)]
        cmd: SelfdualCmd,
    },
    /// Monomial equivalence with a cyclic code.
    Equiv(GenArgs),
}

#[derive(Args, Debug, Clone)]
struct ListArgs {
    /// Emit at most this many entries.
    #[arg(long)]
    limit: Option<usize>,
    /// Listings larger than this need an explicit --limit.
    #[arg(long, default_value_t = 10_000)]
    max_list: u64,
}

#[derive(Subcommand, Debug)]
enum SelfdualCmd {
    /// Decide existence.
    Exists {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Criterion::Structural)]
        criterion: Criterion,
    },
    /// List self-dual codes.
    List {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        listing: ListArgs,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Criterion {
    Structural,
    Paper,
    Both,
}

fn emit(text: &str, out: Option<&PathBuf>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let echo = argv[1..].join(" ");
    match cmd::dispatch(&cli.command) {
        Ok(outcome) => {
            let text = match cli.format {
                Format::Json => render::json(&echo, &outcome.doc),
                Format::Table => render::table(&echo, &outcome.doc),
            };
            if let Err(e) = emit(&text, cli.out.as_ref()) {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(outcome.status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
