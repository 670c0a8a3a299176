use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qrgp::commands::{self, RunOptions, DEFAULT_SEED};
use qrgp::{error_exit_code, exit, parallel, Format, Report};
use qrgp_core::cyccode::DEFAULT_BUDGET;

/// Verifier for quadratic-residue codes, their extensions and the
/// Gleason-Prange theorem.
#[derive(Parser)]
#[command(name = "qr", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Maximum number of messages an enumeration may visit.
    #[arg(long, default_value_t = DEFAULT_BUDGET, global = true, value_parser = parse_budget)]
    budget: u128,
    #[arg(long, env = "QR_WORKERS", global = true)]
    workers: Option<usize>,
    /// Allow runs above the default runtime limits.
    #[arg(long, global = true)]
    long: bool,
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    seed: u64,
}

#[derive(Args)]
struct Family {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    ell: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Build the QR family and check its invariants.
    Family(Family),
    /// Check that sigma preserves A_inf.
    Gp(Family),
    /// Check that sigma with e0 = -1 does not preserve A_inf.
    Epsilon(Family),
    /// Evaluate D (case 1) or D' (case 2) on the spanning set.
    D {
        #[command(flatten)]
        fam: Family,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        case: Option<u8>,
        #[arg(long)]
        s: Option<u64>,
    },
    /// Root split of the little polynomial over GF(l).
    Little {
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        s: Option<u64>,
    },
    /// Exact identities for the Gaussian periods.
    Periods {
        #[arg(long)]
        ell: u64,
    },
    /// Sweep the square minors of (zeta^(ij)) over Z[zeta].
    Chebotarev {
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        max_order: Option<usize>,
    },
    /// Certify every cyclic code of length l over GF(p) as MDS.
    Mds {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        ell: u64,
    },
    /// Compare the trace code with the code recursive for h*.
    Lemma {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: u64,
    },
    /// Orbits of minimum-weight words of A_inf under PSL2(l).
    Orbits(Family),
    /// Weight distribution of A_inf (or A+ with --base).
    Weights {
        #[command(flatten)]
        fam: Family,
        #[arg(long)]
        base: bool,
    },
}

fn parse_budget(s: &str) -> Result<u128, String> {
    match s.parse::<u128>() {
        Ok(0) => Err("budget must be at least 1".into()),
        Ok(b) => Ok(b),
        Err(e) => Err(e.to_string()),
    }
}

fn run(cli: &Cli) -> qrgp_core::Result<Report> {
    let opts = RunOptions {
        budget: cli.budget,
        workers: cli.workers.unwrap_or_else(parallel::default_workers).max(1),
        long: cli.long,
        seed: cli.seed,
    };
    match &cli.command {
        Command::Family(f) => commands::family(f.p, f.ell),
        Command::Gp(f) => commands::gleason_prange(f.p, f.ell),
        Command::Epsilon(f) => commands::epsilon(f.p, f.ell),
        Command::D { fam, case, s } => commands::d_identity(fam.p, fam.ell, *case, *s),
        Command::Little { ell, s } => commands::little(*ell, *s),
        Command::Periods { ell } => commands::periods(*ell),
        Command::Chebotarev { ell, max_order } => commands::chebotarev(*ell, *max_order, &opts),
        Command::Mds { p, ell } => commands::mds(*p, *ell, &opts),
        Command::Lemma { p, m, n } => commands::lemma(*p, *m, *n),
        Command::Orbits(f) => commands::orbits(f.p, f.ell, &opts),
        Command::Weights { fam, base } => commands::weights(fam.p, fam.ell, *base, &opts),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(report) => {
            print!("{}", report.render(cli.format));
            if report.pass() {
                exit::PASS
            } else {
                exit::CHECK_FAILED
            }
        }
        Err(e) => {
            eprintln!("qr: {e}");
            error_exit_code(&e)
        }
    };
    ExitCode::from(code as u8)
}
