//! The full check over a seeded enumeration of chains.

use super::cells::MapKind;
use super::chain::{corrupt_witness, random_chain, validate_chain, verify_witness_identities, ChainShape, IdentityReport};
use super::report::{verify_chain, MapReport};
use crate::counters::Snapshot;
use crate::error::{Error, Result};
use crate::rig::RigCategory;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    /// Shapes run over `1 ≤ n ≤ n_max`, `ℓ ≤ ell`, `p ≤ p_max`, `q ≤ q_max`.
    pub n_max: usize,
    pub ell: usize,
    pub p_max: usize,
    pub q_max: usize,
    pub obj_bound: u64,
    pub witness_bound: u64,
    /// Chains drawn per shape.
    pub chains: usize,
    pub seed: u64,
    /// Also verify the four maps and three homotopies.
    pub maps: bool,
    /// Corrupt `x^0_{02∞}` of `m^0` in every drawn chain with `q ≥ 2`.
    #[serde(default)]
    pub corrupt: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { n_max: 2, ell: 1, p_max: 2, q_max: 2, obj_bound: 3, witness_bound: 2, chains: 1, seed: 0, maps: true, corrupt: false }
    }
}

impl VerifyConfig {
    pub fn shapes(&self) -> Vec<ChainShape> {
        let mut out = Vec::new();
        for n in 1..=self.n_max {
            for level in 0..=self.ell {
                for p in 0..=self.p_max {
                    for q in 0..=self.q_max {
                        out.push(ChainShape { n, level, p, q, obj_bound: self.obj_bound, witness_bound: self.witness_bound });
                    }
                }
            }
        }
        out
    }
}

/// Outcome on one drawn chain.
#[derive(Debug, Clone, Serialize)]
pub struct ChainRun {
    pub shape: ChainShape,
    pub draw: usize,
    /// ChaCha stream the chain was drawn from.
    pub stream: u64,
    pub rejected: usize,
    pub chain_error: Option<String>,
    pub identities: Option<IdentityReport>,
    pub maps: Vec<MapReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub shape: ChainShape,
    pub draw: usize,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct StageSummary {
    pub stage: String,
    pub passed: bool,
    pub runs: usize,
    pub checked: usize,
    pub failures: usize,
    pub first_counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ContractReport {
    pub category: String,
    pub config: VerifyConfig,
    pub passed: bool,
    pub stages: Vec<StageSummary>,
    /// Counter totals over the witness-identity validators.
    pub identity_counters: Snapshot,
    pub runs: Vec<ChainRun>,
}

impl ContractReport {
    pub fn stage(&self, name: &str) -> Option<&StageSummary> {
        self.stages.iter().find(|s| s.stage == name)
    }
}

fn run_one(cat: &RigCategory, cfg: &VerifyConfig, shape: ChainShape, draw: usize, stream: u64) -> ChainRun {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(stream);
    let mut run = ChainRun { shape, draw, stream, rejected: 0, chain_error: None, identities: None, maps: Vec::new() };
    let drawn = match random_chain(cat, shape, &mut rng) {
        Ok(d) => d,
        Err(e) => {
            run.chain_error = Some(e.to_string());
            return run;
        }
    };
    run.rejected = drawn.rejected;
    let mut drawn = drawn;
    if cfg.corrupt && shape.q >= 2 {
        if let Err(e) = corrupt_witness(&mut drawn.chain, 0, 0, 2, 0) {
            run.chain_error = Some(e.to_string());
            return run;
        }
    }
    if let Err(e) = validate_chain(cat, shape.level, &drawn.chain) {
        run.chain_error = Some(e.to_string());
    }
    match verify_witness_identities(cat, shape.level, &drawn.chain) {
        Ok(r) => run.identities = Some(r),
        Err(e) => run.chain_error = Some(format!("identity check: {e}")),
    }
    if cfg.maps {
        run.maps = verify_chain(cat, shape.level, &drawn.chain, &MapKind::ALL);
    }
    run
}

fn summarize(stage: &str, runs: &[ChainRun], mut per_run: impl FnMut(&ChainRun) -> (usize, usize, Option<String>)) -> StageSummary {
    let mut s = StageSummary { stage: stage.into(), passed: true, runs: 0, checked: 0, failures: 0, first_counterexample: None };
    for r in runs {
        let (checked, failures, first) = per_run(r);
        s.runs += 1;
        s.checked += checked;
        s.failures += failures;
        if s.first_counterexample.is_none() {
            if let Some(detail) = first {
                s.first_counterexample = Some(Counterexample { shape: r.shape, draw: r.draw, detail });
            }
        }
    }
    s.passed = s.failures == 0;
    s
}

/// Draws `chains` chains per shape, checks each chain, both witness
/// identity families with the symmetry audit, and (optionally) every map
/// and homotopy. Runs are independent and aggregated in enumeration order,
/// so the report depends only on the category and the config.
pub fn contract_verify(cat: &RigCategory, cfg: &VerifyConfig) -> Result<ContractReport> {
    if cfg.n_max == 0 || cfg.chains == 0 || cfg.obj_bound == 0 {
        return Err(Error::Invalid("n, chains and object bound must be positive".into()));
    }
    let jobs: Vec<(ChainShape, usize, u64)> = cfg
        .shapes()
        .into_iter()
        .flat_map(|s| (0..cfg.chains).map(move |d| (s, d)))
        .enumerate()
        .map(|(k, (s, d))| (s, d, k as u64))
        .collect();
    let runs: Vec<ChainRun> = jobs.par_iter().map(|&(s, d, k)| run_one(cat, cfg, s, d, k)).collect();

    let mut stages = vec![summarize("chains", &runs, |r| (1, r.chain_error.is_some() as usize, r.chain_error.clone()))];
    for family in ["1identity", "2identity"] {
        stages.push(summarize(family, &runs, |r| match &r.identities {
            Some(rep) => {
                let fails: Vec<_> = rep.failures.iter().filter(|f| f.family == family).collect();
                let first = fails.first().map(|f| format!("{} {}", f.kind, f.location));
                (rep.per_family.get(family).copied().unwrap_or(0), fails.len(), first)
            }
            None => (0, 1, Some("not checked".into())),
        }));
    }
    let mut totals = Snapshot::default();
    for rep in runs.iter().filter_map(|r| r.identities.as_ref()) {
        totals.symmetry += rep.counters.symmetry;
        totals.symmetry_in_structure += rep.counters.symmetry_in_structure;
        totals.mat_assoc += rep.counters.mat_assoc;
        totals.mat_dist += rep.counters.mat_dist;
    }
    let audit_ok = totals.symmetry == 0 && totals.mat_assoc > 0;
    stages.push(StageSummary {
        stage: "symmetry_audit".into(),
        passed: audit_ok,
        runs: runs.len(),
        checked: 1,
        failures: (!audit_ok) as usize,
        first_counterexample: None,
    });
    if cfg.maps {
        for kind in MapKind::ALL {
            stages.push(summarize(kind.name(), &runs, |r| match r.maps.iter().find(|m| m.map == kind) {
                Some(m) => (
                    m.cells + m.face_checks + m.degeneracy_checks + m.composition_checks + m.oracle_checks,
                    m.failures,
                    m.examples.first().map(|f| format!("{} at {}: {}", f.check, f.at, f.detail)),
                ),
                None => (0, 1, Some("not checked".into())),
            }));
        }
    }
    Ok(ContractReport {
        category: cat.name(),
        config: *cfg,
        passed: stages.iter().all(|s| s.passed),
        stages,
        identity_counters: totals,
        runs,
    })
}
