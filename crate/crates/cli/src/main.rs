//! `rigbar`: JSON front end to the engine.

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rigbar::bar::{bar_nerve, DiscreteModule};
use rigbar::contraction::{contract_verify, VerifyConfig};
use rigbar::homology::homology;
use rigbar::matrix::{is_weakly_invertible, pi0_matrix, Mat};
use rigbar::rig::{grothendieck, Presentation};
use rigbar::sset::{nerve, CyclicGroup, Diagonal, SSet};
use rigbar::RigCategory;
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "rigbar", version, about = "Matrix categories over rig categories and their bar constructions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// `sets`, `naturals`, `zmod:K`, `free:K`, or a JSON presentation file.
    #[arg(long, default_value = "sets")]
    category: String,
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    ell: usize,
    #[arg(long, default_value_t = 2)]
    p: usize,
    #[arg(long, default_value_t = 2)]
    q: usize,
    #[arg(long, default_value_t = 3)]
    obj_bound: u64,
    #[arg(long, default_value_t = 2)]
    witness_bound: u64,
    #[arg(long, default_value_t = 3)]
    max_dim: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Machine-readable report; the human summary goes to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// π₀ rig table and its Grothendieck ring.
    Pi0 {
        #[command(flatten)]
        common: Common,
    },
    /// Weak invertibility of an object matrix, e.g. `[[2,1],[1,1]]`.
    Gl {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        matrix: String,
    },
    /// Integral homology of a dumped simplicial set.
    Homology {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        dump: PathBuf,
    },
    /// Writes a simplicial set dump: `bar:K` is the diagonal of the bar
    /// nerve of `ℤ/K` acting on itself, `nerve:K` the nerve of `ℤ/K`.
    Dump {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        source: String,
    },
    /// Witness identities, the contraction maps and their homotopies over
    /// a seeded enumeration of chains.
    ContractVerify {
        #[command(flatten)]
        common: Common,
        /// Chains drawn per shape.
        #[arg(long, default_value_t = 1)]
        chains: usize,
        /// Skip the maps and homotopies.
        #[arg(long)]
        identities_only: bool,
        /// Corrupt one witness in every chain with `q ≥ 2`.
        #[arg(long)]
        corrupt_witness: bool,
    },
}

const SETS_UNIVERSE: u64 = 1 << 16;
const NATURALS_UNIVERSE: u64 = 1 << 30;

fn category(spec: &str) -> Result<RigCategory> {
    let parse_k = |s: &str| s.parse::<u64>().with_context(|| format!("bad modulus in `{spec}`"));
    let cat = match spec.split_once(':') {
        None if spec == "sets" => RigCategory::finite_sets(SETS_UNIVERSE)?,
        None if spec == "naturals" => RigCategory::discrete_naturals(NATURALS_UNIVERSE),
        Some(("zmod", k)) => RigCategory::discrete_zmod(parse_k(k)?)?,
        Some(("free", k)) => RigCategory::free_modules(parse_k(k)?, SETS_UNIVERSE)?,
        _ => {
            let text = std::fs::read_to_string(spec).with_context(|| format!("reading presentation `{spec}`"))?;
            Presentation::parse(&text)?.build()?
        }
    };
    Ok(cat)
}

fn parse_matrix(text: &str) -> Result<Mat<u64>> {
    let rows: Vec<Vec<u64>> = serde_json::from_str(text).context("matrix must be a JSON array of rows")?;
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        bail!("matrix must be square and nonempty");
    }
    Ok(Mat::new(n, rows.concat())?)
}

fn emit(common: &Common, summary: &str, report: &Value) -> Result<()> {
    println!("{summary}");
    let text = serde_json::to_string_pretty(report)? + "\n";
    match &common.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Pi0 { common } => {
            let cat = category(&common.category)?;
            let pi0 = cat.pi0();
            let gr = grothendieck(&pi0);
            let report = json!({
                "category": cat.name(),
                "pi0": pi0.describe(),
                "pi0_table": pi0,
                "gr": gr.as_ref().ok().map(|g| g.describe()),
                "gr_error": gr.as_ref().err().map(|e| e.to_string()),
            });
            emit(&common, &format!("π₀ {}: {}", cat.name(), pi0.describe()), &report)?;
            Ok(true)
        }
        Command::Gl { common, matrix } => {
            let cat = category(&common.category)?;
            let m = parse_matrix(&matrix)?;
            if let Some(a) = m.entries().iter().find(|&&a| !cat.contains(a)) {
                bail!("object {a} is not in {}", cat.name());
            }
            let ok = is_weakly_invertible(&cat, &m)?;
            let labels = pi0_matrix(&cat, &m);
            let report = json!({
                "category": cat.name(),
                "matrix": (0..m.n()).map(|i| (0..m.n()).map(|j| *m.get(i, j)).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "pi0_labels": (0..m.n()).map(|i| (0..m.n()).map(|j| *labels.get(i, j)).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "weakly_invertible": ok,
            });
            emit(&common, &format!("weakly invertible: {ok}"), &report)?;
            Ok(true)
        }
        Command::Homology { common, dump } => {
            let text = std::fs::read_to_string(&dump).with_context(|| format!("reading {}", dump.display()))?;
            let x: SSet = serde_json::from_str(&text).context("dump is not a simplicial set")?;
            x.check_identities()?;
            let top = common.max_dim.min(x.top.saturating_sub(1));
            let h = homology(&x, top)?;
            let shown: Vec<String> = h.iter().enumerate().map(|(i, g)| format!("H{i} = {g}")).collect();
            let report = json!({ "top": x.top, "max_dim": top, "homology": h });
            emit(&common, &shown.join(", "), &report)?;
            Ok(true)
        }
        Command::Dump { common, source } => {
            let (kind, k) = source.split_once(':').context("source is `bar:K` or `nerve:K`")?;
            let k: u64 = k.parse().context("bad order")?;
            let x = match kind {
                "bar" => {
                    let md = DiscreteModule::Cyclic { k, point: false };
                    SSet::from_simplicial(&Diagonal(&bar_nerve(&md)), common.max_dim)?
                }
                "nerve" => SSet::from_simplicial(&nerve(&CyclicGroup(k)), common.max_dim)?,
                _ => bail!("unknown source `{kind}`"),
            };
            let counts: Vec<usize> = (0..=x.top).map(|d| x.count(d)).collect();
            emit(&common, &format!("{source}: cells per degree {counts:?}"), &serde_json::to_value(&x)?)?;
            Ok(true)
        }
        Command::ContractVerify { common, chains, identities_only, corrupt_witness } => {
            let cat = category(&common.category)?;
            let cfg = VerifyConfig {
                n_max: common.n,
                ell: common.ell,
                p_max: common.p,
                q_max: common.q,
                obj_bound: common.obj_bound,
                witness_bound: common.witness_bound,
                chains,
                seed: common.seed,
                maps: !identities_only,
                corrupt: corrupt_witness,
            };
            let report = contract_verify(&cat, &cfg)?;
            let mut summary = format!("{}: {}\n", cat.name(), if report.passed { "all stages pass" } else { "FAILED" });
            for s in &report.stages {
                summary += &format!(
                    "  {:<15} {:<4} runs={} checked={} failures={}\n",
                    s.stage,
                    if s.passed { "ok" } else { "FAIL" },
                    s.runs,
                    s.checked,
                    s.failures
                );
            }
            emit(&common, summary.trim_end(), &serde_json::to_value(&report)?)?;
            Ok(report.passed)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
