mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "escobar", version, about = "Escobar constants of planar domains")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form values for disks and regular polygons.
    Exact(ExactArgs),
    /// Emit an explicit k-tuple from one of the constructions.
    Construct(ConstructArgs),
    /// Search for the best k-tuple in a domain.
    Optimize(OptimizeArgs),
    /// Compare regular polygons against the disk over an (n, k) grid.
    ConjectureScan(ScanArgs),
    /// Randomized checks of the symmetrization inequalities on regular polygons.
    SymmetryAudit(AuditArgs),
    /// Draw a domain and a tuple as SVG.
    Render(RenderArgs),
}

#[derive(Args)]
struct ExactArgs {
    #[arg(long, conflicts_with = "regular")]
    disk: bool,
    /// Number of sides.
    #[arg(long)]
    regular: Option<usize>,
    /// Single value or inclusive range such as `2..6`.
    #[arg(long)]
    k: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Where the domain comes from. Exactly one must be given.
#[derive(Args, Clone)]
struct DomainArgs {
    /// Domain JSON file.
    #[arg(long)]
    domain: Option<PathBuf>,
    /// Regular polygon with this many sides and unit circumradius.
    #[arg(long)]
    regular: Option<usize>,
    /// Disk with this radius.
    #[arg(long)]
    disk: Option<f64>,
    /// Axis-aligned rectangle `WIDTH,HEIGHT` centred at the origin.
    #[arg(long, value_delimiter = ',')]
    rect: Option<Vec<f64>>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    EqualArcs,
    EqualBoundary,
    Corner,
    Inscribed,
    Stripe,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(value_enum)]
    family: Family,
    #[command(flatten)]
    domain: DomainArgs,
    #[arg(long)]
    k: usize,
    /// Arclength where the first region starts.
    #[arg(long)]
    offset: Option<f64>,
    /// Junction index for the corner family.
    #[arg(long, default_value_t = 0)]
    corner: usize,
    #[arg(long, default_value_t = 1e-6)]
    epsilon: f64,
    /// Stripe height.
    #[arg(long)]
    height: Option<f64>,
    /// Tuple JSON output; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Per-region CSV.
    #[arg(long)]
    table: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Enumeration grid size; chosen automatically when absent.
    #[arg(long)]
    grid: Option<usize>,
    #[arg(long, default_value_t = 4)]
    restarts: usize,
    /// Largest number of placements an explicit grid may enumerate.
    #[arg(long, default_value_t = 1e9)]
    budget: f64,
}

#[derive(Args)]
struct OptimizeArgs {
    /// Domain JSON file.
    domain: PathBuf,
    #[arg(long)]
    k: usize,
    #[command(flatten)]
    search: SearchArgs,
    /// Skip the cap families.
    #[arg(long)]
    no_caps: bool,
    /// Skip the corner family.
    #[arg(long)]
    no_corners: bool,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long, default_value = "3..12")]
    n: String,
    #[arg(long, default_value = "2..12")]
    k: String,
    #[command(flatten)]
    search: SearchArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AuditArgs {
    /// Number of sides, or a range such as `3..8`.
    n: String,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RenderArgs {
    /// Domain JSON file.
    domain: PathBuf,
    /// Tuple JSON file.
    tuple: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Exact(a) => commands::exact(a),
        Command::Construct(a) => commands::construct(a),
        Command::Optimize(a) => commands::optimize(a),
        Command::ConjectureScan(a) => commands::conjecture_scan(a),
        Command::SymmetryAudit(a) => commands::symmetry_audit(a),
        Command::Render(a) => commands::render(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
