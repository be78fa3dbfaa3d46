mod commands;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use commands::{CliError, Output};

/// Exact algebra for Rokhlin-dimension bounds.
#[derive(Parser, Debug)]
#[command(name = "equik", version, about)]
struct Cli {
    /// Emit the machine-readable JSON form.
    #[arg(long, global = true)]
    json: bool,
    /// Write run metadata to stderr (never part of the payload).
    #[arg(long, global = true)]
    meta: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Integer normal forms of a matrix file.
    #[command(subcommand)]
    Linalg(LinalgCmd),
    /// Tensor product and Tor of finitely generated abelian groups.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Representation rings, augmentation filtrations and λ-expansions.
    #[command(subcommand)]
    Rep(RepCmd),
    /// K-theory and homology of joins of finite sets.
    #[command(subcommand)]
    Join(JoinCmd),
    /// Certified Rokhlin-dimension bounds for the named constructions.
    #[command(subcommand)]
    Rokhlin(RokhlinCmd),
    /// Recompute every certificate in a report file.
    Validate {
        report: std::path::PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum LinalgCmd {
    /// Smith normal form with transforms `U·A·V = D`.
    Snf { matrix: std::path::PathBuf },
    /// Row Hermite normal form with transform `T·A = H`.
    Hnf { matrix: std::path::PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum GroupCmd {
    /// `A ⊗ B`, groups written like `Z^2 + Z_4`.
    Tensor { a: String, b: String },
    /// `Tor(A, B)`.
    Tor { a: String, b: String },
}

/// A ring named on the command line or loaded from a fusion-table file.
#[derive(Args, Debug, Clone)]
pub struct RingArg {
    /// Named ring: z<n>, s3, or products such as z2xz3.
    #[arg(long, conflicts_with = "table")]
    pub group: Option<String>,
    /// Fusion-table JSON file.
    #[arg(long)]
    pub table: Option<std::path::PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum RepCmd {
    /// Basis, dimensions and fusion rules; checks the ring axioms.
    Ring(RingArg),
    /// Hermite bases of `Iᵐ` and the quotients `Iᵐ/Iᵐ⁺¹`.
    IdealPowers {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long, default_value_t = 3)]
        max: usize,
    },
    /// Coefficients of `λᵖ` in the basis `λ, …, λᵖ⁻¹` of `R(Z_p)`, odd `p`.
    Lambda {
        #[arg(long)]
        p: usize,
    },
    /// Whether the augmentation ideal kills the regular class.
    Regular(RingArg),
}

#[derive(Subcommand, Debug)]
pub enum JoinCmd {
    /// K-theory ranks of the k-fold join of an N-point set.
    Ktheory {
        #[arg(long)]
        set_size: usize,
        #[arg(long)]
        copies: usize,
        /// Compare with the homology of the multipartite complex.
        #[arg(long)]
        verify_oracle: bool,
    },
    /// Reduced integer homology of the multipartite complex.
    Homology {
        #[arg(long)]
        set_size: usize,
        #[arg(long)]
        copies: usize,
    },
    /// The connecting map for joining a space with K⁰ of rank l.
    MvDelta {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        set_size: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum RokhlinCmd {
    /// Z_2 on an AF algebra.
    Z2 {
        #[arg(long)]
        m: u64,
    },
    /// S¹ on an AH algebra.
    Circle {
        #[arg(long)]
        d: u64,
    },
    /// Z_2 × G with G of odd order.
    ProductZ2 {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        group: String,
    },
    /// S¹ × G.
    CircleProduct {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        group: String,
    },
    /// Two Z_6 actions of large dimension whose tensor product is Rokhlin.
    Z6Collapse {
        #[arg(long)]
        d: u64,
    },
    /// Free action on G^{⋆k} for commutative G.
    Commutative {
        #[arg(long)]
        group: String,
        #[arg(long)]
        k: u64,
    },
    /// Finite group on an AF algebra with dimension above n.
    Finite {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        n: u64,
    },
    /// Combine two report files with sum, min or absorb.
    TensorRule {
        #[arg(long)]
        rule: String,
        first: std::path::PathBuf,
        second: std::path::PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = match &cli.command {
        Command::Linalg(c) => commands::linalg(c),
        Command::Group(c) => commands::group(c),
        Command::Rep(c) => commands::rep(c),
        Command::Join(c) => commands::join(c),
        Command::Rokhlin(c) => commands::rokhlin(c),
        Command::Validate { report } => commands::validate(report),
    };
    if cli.meta {
        eprintln!(
            "meta: equik {} command={:?} elapsed_ms={}",
            env!("CARGO_PKG_VERSION"),
            cli.command,
            start.elapsed().as_millis()
        );
    }
    match result {
        Ok(out) => emit(&out, cli.json),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn emit(out: &Output, json: bool) -> ExitCode {
    let mut payload = if json { out.json.clone() } else { out.text.clone() };
    if !payload.ends_with('\n') {
        payload.push('\n');
    }
    // A closed pipe downstream (`| head`) is not an error.
    let _ = std::io::stdout().lock().write_all(payload.as_bytes());
    if out.success {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(CliError::FAILED_CHECK)
    }
}
