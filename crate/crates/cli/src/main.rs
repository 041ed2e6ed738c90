//! Command-line front end: classify subspaces from files, enumerate orbit
//! atlases, emit canonical representatives, report open orbits, construct
//! witnesses, and run the verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 precondition violation (non-isotropic input, distinct orbits),
//! 4 internal consistency failure.

use clap::{Args, Parser, Subcommand};
use isogr::io;
use isogr::verify::{self, Scale};
use isogr::{
    canonical_rep, classify, enumerate_orbits, open_orbits, orbit_witness, CaseTag, Error,
    GroupParams, OrbitParams,
};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "isogr", version, about = "Orbit calculus on isotropic Grassmannians")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify an isotropic subspace read from a JSON file.
    Classify(ClassifyArgs),
    /// Enumerate the orbit atlas for given group data and isotropic rank.
    Enumerate(EnumerateArgs),
    /// Emit the canonical representative of an orbit tuple.
    Canonical(CanonicalArgs),
    /// Report the open orbits for given group data and isotropic rank.
    OpenOrbits(OpenOrbitsArgs),
    /// Construct a subgroup element mapping one subspace onto another.
    Witness(WitnessArgs),
    /// Run the verification suites.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct GroupFlags {
    /// One of: real-orthogonal, unitary, complex-orthogonal, symplectic.
    #[arg(long)]
    case: String,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    p1: Option<usize>,
    #[arg(long)]
    q1: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
}

impl GroupFlags {
    fn case(&self) -> Result<CaseTag, Error> {
        CaseTag::parse(&self.case)
    }

    fn params(&self) -> Result<GroupParams, Error> {
        let case = self.case()?;
        let params = if case.is_signed() {
            let need = |v: Option<usize>, name: &str| {
                v.ok_or_else(|| Error::Parse(format!("--{name} is required for case {case}")))
            };
            GroupParams::Signature {
                p: need(self.p, "p")?,
                q: need(self.q, "q")?,
                p1: need(self.p1, "p1")?,
                q1: need(self.q1, "q1")?,
            }
        } else {
            let need = |v: Option<usize>, name: &str| {
                v.ok_or_else(|| Error::Parse(format!("--{name} is required for case {case}")))
            };
            GroupParams::Split { n: need(self.n, "n")?, m: need(self.m, "m")? }
        };
        params.validate(case)?;
        Ok(params)
    }
}

#[derive(Args)]
struct ClassifyArgs {
    /// Subspace JSON file (carries its own case and parameters).
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    group: GroupFlags,
    #[arg(long)]
    r: usize,
    /// json (default) or csv.
    #[arg(long, default_value = "json")]
    format: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CanonicalArgs {
    #[command(flatten)]
    group: GroupFlags,
    /// Comma-separated tuple entries, e.g. `0,0,1,0,0`.
    #[arg(long)]
    tuple: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OpenOrbitsArgs {
    #[command(flatten)]
    group: GroupFlags,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct WitnessArgs {
    /// Two subspace JSON files (pass --in twice: source then target).
    #[arg(long = "in", num_args = 1, action = clap::ArgAction::Append)]
    input: Vec<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Identity-component samples per factor in the invariance suite.
    #[arg(long, default_value_t = 100)]
    trials: u64,
    /// Seeded pairs per case in the witness suite.
    #[arg(long, default_value_t = 100)]
    pairs: u64,
    /// Random classifications in the symplectic parity suite.
    #[arg(long, default_value_t = 10000)]
    parity_samples: u64,
    /// Worker threads (defaults to the number of cores).
    #[arg(long)]
    threads: Option<usize>,
    /// `full` (ambient up to 8, symplectic 10) or `quick`.
    #[arg(long, default_value = "full")]
    scale: String,
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::NotIsotropic | Error::DifferentOrbits(_, _) | Error::NotIsometry => 3,
        Error::Inconsistency(_) | Error::MatchingFailed | Error::SamplerExhausted => 4,
        _ => 2,
    }
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{}", text.trim_end_matches('\n'));
            Ok(())
        }
    }
}

fn read_subspace(path: &Path) -> Result<isogr::Subspace, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("bad JSON: {e}")))?;
    io::subspace_from_json(&value)
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Classify(args) => {
            let s = read_subspace(&args.input)?;
            let t = classify(&s)?;
            let space = s.space();
            let infos = enumerate_orbits(space.case, space.params, t.r())?;
            let info = infos
                .into_iter()
                .find(|i| i.tuple == t.tuple)
                .ok_or_else(|| Error::Inconsistency("classified orbit missing from atlas".into()))?;
            let text = serde_json::to_string_pretty(&io::orbit_info_to_json(&info))
                .expect("serializable");
            emit(&text, &args.out)?;
            Ok(0)
        }
        Command::Enumerate(args) => {
            let case = args.group.case()?;
            let params = args.group.params()?;
            let infos = enumerate_orbits(case, params, args.r)?;
            let text = match args.format.as_str() {
                "json" => serde_json::to_string_pretty(&io::atlas_to_json(&infos))
                    .expect("serializable"),
                "csv" => io::atlas_to_csv(&infos),
                other => return Err(Error::Parse(format!("unknown format `{other}`"))),
            };
            emit(&text, &args.out)?;
            Ok(0)
        }
        Command::Canonical(args) => {
            let case = args.group.case()?;
            let params = args.group.params()?;
            let t = OrbitParams::parse(case, &args.tuple)?;
            let s = canonical_rep(case, params, &t)?;
            let text =
                serde_json::to_string_pretty(&io::subspace_to_json(&s)).expect("serializable");
            emit(&text, &args.out)?;
            Ok(0)
        }
        Command::OpenOrbits(args) => {
            let case = args.group.case()?;
            let params = args.group.params()?;
            let open = open_orbits(case, params, args.r)?;
            let tuples: Vec<serde_json::Value> = open
                .iter()
                .map(|t| serde_json::json!(t.tuple.entries()))
                .collect();
            let text = serde_json::to_string_pretty(&serde_json::Value::Array(tuples))
                .expect("serializable");
            emit(&text, &args.out)?;
            Ok(0)
        }
        Command::Witness(args) => {
            if args.input.len() != 2 {
                return Err(Error::Parse("witness needs exactly two --in files".into()));
            }
            let s = read_subspace(&args.input[0])?;
            let s2 = read_subspace(&args.input[1])?;
            let h = orbit_witness(&s, &s2)?;
            let text = serde_json::to_string_pretty(&io::witness_to_json(s.space(), &h))
                .expect("serializable");
            emit(&text, &args.out)?;
            Ok(0)
        }
        Command::Verify(args) => {
            let scale = match args.scale.as_str() {
                "full" => verify::ACCEPTANCE_SCALE,
                "quick" => verify::QUICK_SCALE,
                other => return Err(Error::Parse(format!("unknown scale `{other}`"))),
            };
            let reports = match args.threads {
                Some(threads) => {
                    let pool = rayon::ThreadPoolBuilder::new()
                        .num_threads(threads)
                        .build()
                        .map_err(|e| Error::Parse(format!("thread pool: {e}")))?;
                    pool.install(|| run_verify(&scale, &args))
                }
                None => run_verify(&scale, &args),
            };
            let mut failed = false;
            for report in &reports {
                println!("{}", report.summary_line());
                failed |= !report.passed();
            }
            Ok(if failed { 1 } else { 0 })
        }
    }
}

fn run_verify(scale: &Scale, args: &VerifyArgs) -> Vec<verify::SuiteReport> {
    verify::run_all(scale, args.seed, args.trials, args.pairs, args.parity_samples)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
