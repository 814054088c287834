use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod input;

/// Exact analysis and construction of p-ary bent functions.
#[derive(Parser, Debug)]
#[command(name = "pbent", version)]
struct Cli {
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    width: usize,
    #[command(subcommand)]
    command: Command,
}

/// Field selection shared by commands that build a field.
#[derive(Args, Debug, Clone)]
pub struct FieldArgs {
    /// Characteristic.
    #[arg(long)]
    p: Option<u32>,
    /// Extension degree.
    #[arg(long)]
    m: Option<u32>,
    /// Modulus coefficients, constant term first, e.g. 2,0,1,1 for x^3+x^2+2.
    /// Defaults to a built-in or the first irreducible found.
    #[arg(long, value_delimiter = ',')]
    modulus: Option<Vec<u32>>,
    /// Index of the primitive element bound to `g` (default: smallest).
    #[arg(long)]
    primitive: Option<u32>,
}

/// A function given as a truth table or as an expression over a field.
#[derive(Args, Debug, Clone)]
pub struct InputArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Expression such as "Tr(x^2)" or "Tr(g^7 x^98)".
    #[arg(long, conflicts_with = "tt")]
    expr: Option<String>,
    /// Truth-table file.
    #[arg(long)]
    tt: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Bentness, regularity and dual-bentness report as JSON.
    Classify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Truth table of the dual of a bent function.
    Dual {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact Walsh spectrum as JSON.
    Spectrum {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a function and write its truth table.
    Construct {
        #[command(subcommand)]
        kind: Construct,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Scan (alpha, beta) pairs for non-dual-bent functions; JSON lines on
    /// stdout, summary on stderr.
    Search {
        #[command(flatten)]
        field: FieldArgs,
        /// Maximum number of pairs to examine.
        #[arg(long)]
        limit: Option<usize>,
        /// Include wall-clock timings (output no longer reproducible).
        #[arg(long)]
        timed: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the worked examples and sporadic functions; exits 1 on any failure.
    VerifyPaper {
        /// Modulus for F_{3^6}, enabling the g1 and g3 rows.
        #[arg(long = "modulus-36", value_delimiter = ',')]
        modulus36: Option<Vec<u32>>,
        /// Emit JSON instead of a table.
        #[arg(long)]
        json: bool,
        /// Perturb one expected value (harness self-test).
        #[arg(long, hide = true)]
        corrupt: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum Construct {
    /// Tr(alpha x^{p^k+1}).
    Monomial {
        #[command(flatten)]
        field: FieldArgs,
        /// Coefficient, e.g. "w^2+1", "g^5" or "@7"; random nonzero if omitted.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, default_value_t = 0)]
        k: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Tr(alpha x^{(3^k+1)/2}) over characteristic 3.
    Cm {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// f(x) + g(y) from two truth tables.
    Directsum {
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        g: PathBuf,
    },
    /// f(x) + g(y + h(x)); g on F_p^n, one --h per coordinate of y.
    Sds {
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        g: PathBuf,
        #[arg(long, required = true)]
        h: Vec<PathBuf>,
        /// Also print the bentness condition and its witness to stderr.
        #[arg(long)]
        check: bool,
    },
    /// f_{a0}(x) + g(y_1 + f_{a1}(x), ..., y_n + f_{an}(x)).
    Cor1 {
        #[command(flatten)]
        field: FieldArgs,
        /// n+1 elements separated by ';'.
        #[arg(long, allow_hyphen_values = true)]
        alphas: String,
        /// Bent function on F_p^n; y1*y2 on F_p^2 if omitted.
        #[arg(long)]
        g: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Family::Monomial)]
        family: Family,
        #[arg(long, default_value_t = 0)]
        k: u32,
    },
    /// Tr(x^2) + (y1 + Tr(alpha x^2))(y2 + Tr(beta x^2)); random pair if omitted.
    Ndcor {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, allow_hyphen_values = true, requires = "beta")]
        alpha: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "alpha")]
        beta: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print the character sum to stderr.
        #[arg(long)]
        report: bool,
    },
    /// f_y(x) + t*y from exactly p truth tables on a common domain.
    Agw {
        #[arg(long, required = true)]
        f: Vec<PathBuf>,
    },
    /// One of the sporadic ternary functions g1, g2, g3.
    Sporadic {
        #[arg(long, value_enum)]
        name: SporadicName,
        #[command(flatten)]
        field: FieldArgs,
        /// Coefficient a0 of g2.
        #[arg(long, value_enum, default_value_t = A0::PlusXi10)]
        a0: A0,
        /// Primitive element to use as xi (default: the field's `g`).
        #[arg(long, allow_hyphen_values = true)]
        xi: Option<String>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Family {
    Monomial,
    Cm,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum SporadicName {
    G1,
    G2,
    G3,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum A0 {
    PlusXi10,
    MinusXi10,
    PlusXi30,
    MinusXi30,
    Zero,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.width > 0 {
        // ignore the error if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.width)
            .build_global();
    }
    let result = match cli.command {
        Command::Classify { input, out } => commands::classify(&input, out.as_deref()),
        Command::Dual { input, out } => commands::dual(&input, out.as_deref()),
        Command::Spectrum { input, out } => commands::spectrum(&input, out.as_deref()),
        Command::Construct { kind, out } => commands::construct(kind, out.as_deref()),
        Command::Search {
            field,
            limit,
            timed,
            out,
        } => commands::search(&field, limit, timed, cli.width, out.as_deref()),
        Command::VerifyPaper {
            modulus36,
            json,
            corrupt,
        } => commands::verify(modulus36.as_deref(), json, corrupt),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
