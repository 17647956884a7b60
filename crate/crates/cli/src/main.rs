use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod manifest;

use commands::Ctx;

#[derive(Parser, Debug)]
#[command(
    name = "forcing",
    version,
    about = "Forcing numbers of perfect matchings"
)]
struct Cli {
    /// Write a run manifest describing this invocation.
    #[arg(long, global = true, value_name = "FILE")]
    manifest: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a graph from one of the built-in families.
    Generate(GenerateArgs),
    /// Compute f(G, M) with a minimum forcing set.
    ForcingNumber(ForcingNumberArgs),
    /// Compute Spec(G) by enumerating every perfect matching.
    Spectrum(SpectrumArgs),
    /// Check whether a set of matching edges forces the matching.
    Verify(VerifyArgs),
    /// Build one of the constructive matchings.
    Construct(ConstructArgs),
    /// Build the reduction graph H from (G, M).
    Reduce(ReduceArgs),
    /// Find a 2-switch sequence between two matchings of a column-continuous grid.
    Connect(ConnectArgs),
    /// Remove all brackets from a matching by 2-switches.
    Eliminate(EliminateArgs),
    /// Apply a recorded 2-switch trace to a matching.
    Replay(ReplayArgs),
    /// Re-execute the invocation recorded in a manifest.
    Rerun(RerunArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Grid,
    Cylinder,
    Torus,
    StopSign,
    GadgetG,
    Glued,
    Hypercube,
}

#[derive(Args, Debug)]
struct GenerateArgs {
    family: Family,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    /// Spectrum values for `glued`, comma separated.
    #[arg(long, value_delimiter = ',')]
    set: Vec<usize>,
    /// Graph JSON destination; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    dot: Option<PathBuf>,
    /// For `gadget-g`: write the forcing edges as an edge-set file.
    #[arg(long)]
    forcing_out: Option<PathBuf>,
    /// For `gadget-g`: write the matching containing every forcing edge.
    #[arg(long)]
    matching_out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ForcingNumberArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    matching: PathBuf,
    /// Certificate JSON destination.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Maximum solver nodes before giving up as inconclusive.
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args, Debug)]
struct SpectrumArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: u64,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, required_unless_present = "certificate")]
    matching: Option<PathBuf>,
    #[arg(long, required_unless_present = "certificate")]
    set: Option<PathBuf>,
    /// Check a certificate written by `forcing-number` instead.
    #[arg(long, conflicts_with_all = ["matching", "set"])]
    certificate: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Pattern {
    Cacm,
    Ucacm,
    Dcacm,
    Theorem13,
    AllHorizontal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Height {
    Even,
    Odd,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    pattern: Pattern,
    /// Rows (cacm, ucacm, dcacm).
    #[arg(long)]
    m: Option<usize>,
    /// Columns (cacm, ucacm, dcacm).
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long, value_enum, default_value = "even")]
    height: Height,
    /// Input graph for `all-horizontal`.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Matching JSON destination; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Where to write the generated host grid.
    #[arg(long)]
    graph_out: Option<PathBuf>,
    /// Where to write the pattern's forcing set (cacm, theorem13).
    #[arg(long)]
    set_out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ReduceArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    matching: PathBuf,
    #[arg(long)]
    out: PathBuf,
    /// Gadget map: the two added vertices and three edges per non-matching edge.
    #[arg(long)]
    map_out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ConnectArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    from: PathBuf,
    #[arg(long)]
    to: PathBuf,
    /// Trace JSON destination; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct EliminateArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    matching: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Where to write the bracket-free matching.
    #[arg(long)]
    result_out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ReplayArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    matching: PathBuf,
    #[arg(long)]
    trace: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct RerunArgs {
    manifest_file: PathBuf,
}

fn run(cli: Cli, argv: &[String]) -> anyhow::Result<()> {
    let mut ctx = Ctx::default();
    match cli.command {
        Command::Generate(a) => commands::generate(&mut ctx, a)?,
        Command::ForcingNumber(a) => commands::forcing_number(&mut ctx, a)?,
        Command::Spectrum(a) => commands::spectrum(&mut ctx, a)?,
        Command::Verify(a) => commands::verify(&mut ctx, a)?,
        Command::Construct(a) => commands::construct(&mut ctx, a)?,
        Command::Reduce(a) => commands::reduce(&mut ctx, a)?,
        Command::Connect(a) => commands::connect(&mut ctx, a)?,
        Command::Eliminate(a) => commands::eliminate(&mut ctx, a)?,
        Command::Replay(a) => commands::replay(&mut ctx, a)?,
        Command::Rerun(a) => {
            let recorded = manifest::RunManifest::load(&a.manifest_file)?;
            let mut args = vec!["forcing".to_string()];
            args.extend(recorded.args.iter().cloned());
            let cli = Cli::try_parse_from(&args)?;
            if matches!(cli.command, Command::Rerun(_)) {
                return Err(commands::usage("a manifest cannot record `rerun`"));
            }
            return run(cli, &recorded.args);
        }
    }
    if let Some(path) = cli.manifest {
        manifest::RunManifest::new(argv, &ctx).save(&path)?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let cli = Cli::parse();
    match run(cli, &manifest::strip_manifest_flag(&argv)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(commands::exit_code(&err))
        }
    }
}
