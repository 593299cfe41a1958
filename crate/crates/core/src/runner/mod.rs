//! Sweeps over `(k, l, m)`, claim dispatch, and the result cache.

mod cache;
pub mod selftest;

use std::path::PathBuf;
use std::sync::Mutex;

use log::{info, warn};
use rayon::prelude::*;

pub use cache::{default_cache_path, persist_report, ReportCache, CACHE_ENV};

use crate::error::{precondition, Result};
use crate::report::{Claim, ConjectureReport, Identity, Verdict};
use crate::{endo, filtration, lefschetz, qseries};

/// Which `m` values a sweep visits for claims that take one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MPolicy {
    /// Every `m` in the claim's range for the box.
    All,
    /// The smallest and largest `m` in the claim's range.
    Boundary,
    Explicit(Vec<u32>),
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub k_min: u32,
    pub k_max: u32,
    pub l_min: u32,
    pub l_max: u32,
    /// Skip boxes with `k > l`.
    pub k_le_l: bool,
    pub m_policy: MPolicy,
    pub claims: Vec<Claim>,
    pub jobs: usize,
    pub cache: Option<PathBuf>,
    /// Recompute instances already cached as holding.
    pub force: bool,
    /// Zero every `elapsed_ms` so output bytes depend only on the inputs.
    pub no_timing: bool,
}

impl SweepConfig {
    /// Conjectures 1 through 4' over `1..=k_max x 1..=l_max`.
    pub fn new(k_max: u32, l_max: u32) -> Self {
        SweepConfig {
            k_min: 1,
            k_max,
            l_min: 1,
            l_max,
            k_le_l: false,
            m_policy: MPolicy::All,
            claims: default_claims(),
            jobs: 1,
            cache: None,
            force: false,
            no_timing: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.k_min < 1 || self.k_min > self.k_max || self.l_min < 1 || self.l_min > self.l_max {
            return Err(precondition(format!(
                "empty or invalid range k in {}..={}, l in {}..={}",
                self.k_min, self.k_max, self.l_min, self.l_max
            )));
        }
        if self.jobs < 1 {
            return Err(precondition("jobs must be at least 1"));
        }
        if self.claims.is_empty() {
            return Err(precondition("no claims selected"));
        }
        Ok(())
    }
}

pub fn default_claims() -> Vec<Claim> {
    vec![Claim::Conj1, Claim::Conj2, Claim::Conj3, Claim::Conj4, Claim::Conj4Prime]
}

/// One unit of work.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Instance {
    pub claim: Claim,
    pub k: u32,
    pub l: u32,
    pub m: Option<u32>,
}

impl Instance {
    pub fn key(&self) -> (Claim, u32, u32, Option<u32>) {
        (self.claim, self.k, self.l, self.m)
    }
}

/// The range of `m` a claim is stated for in a `k x l` box, or `None` for
/// claims without `m`.
pub fn m_range(claim: Claim, k: u32) -> Option<std::ops::RangeInclusive<u32>> {
    match claim {
        Claim::Conj1 | Claim::Identity(Identity::RhsViaF) => Some(0..=k),
        Claim::Conj2 | Claim::Conj3 => Some(1..=k),
        Claim::Identity(Identity::AxB | Identity::ETriangular | Identity::QuotientHilb) => Some(1..=k),
        Claim::Conj4 | Claim::Conj4Prime | Claim::Identity(Identity::Induction) => Some(3..=k),
        _ => None,
    }
}

pub fn instances(config: &SweepConfig) -> Vec<Instance> {
    let mut out = Vec::new();
    for k in config.k_min..=config.k_max {
        for l in config.l_min..=config.l_max {
            if config.k_le_l && k > l {
                continue;
            }
            for &claim in &config.claims {
                match m_range(claim, k) {
                    None => out.push(Instance { claim, k, l, m: None }),
                    Some(range) => {
                        let ms: Vec<u32> = match &config.m_policy {
                            MPolicy::All => range.collect(),
                            MPolicy::Boundary => {
                                let mut v = vec![*range.start(), *range.end()];
                                v.retain(|m| range.contains(m));
                                v.dedup();
                                v
                            }
                            MPolicy::Explicit(list) => list.clone(),
                        };
                        out.extend(ms.into_iter().map(|m| Instance { claim, k, l, m: Some(m) }));
                    }
                }
            }
        }
    }
    out.sort_by_key(|i| (i.k, i.l, i.m, i.claim.as_str()));
    out.dedup();
    out
}

/// Runs one claim at one instance.
pub fn run_instance(inst: &Instance) -> ConjectureReport {
    let Instance { claim, k, l, m } = *inst;
    let need_m = |f: fn(u32, u32, u32) -> ConjectureReport| match m {
        Some(m) => f(k, l, m),
        None => ConjectureReport::not_applicable(claim, k, l, None, "claim needs m"),
    };
    match claim {
        Claim::Conj1 => need_m(filtration::check_conj1),
        Claim::Conj2 => need_m(filtration::check_conj2),
        Claim::Conj3 => need_m(filtration::check_conj3),
        Claim::Conj4 => need_m(filtration::check_conj4),
        Claim::Conj4Prime => need_m(filtration::check_conj4prime),
        Claim::Prop5 => qseries::prop5_check(k, l),
        Claim::Lefschetz => lefschetz::check_hard_lefschetz(k, l),
        Claim::LemmaM2 => endo::lemma_m2_check(k, l),
        Claim::Identity(id) => match id {
            Identity::AxB => need_m(lefschetz::check_ax_equals_b),
            Identity::ETriangular => need_m(lefschetz::check_e_schur_triangular),
            Identity::GammaFormula => endo::gamma_formula_check(k, l),
            Identity::H2Branch => endo::verify_h2_branch_for(k, l),
            Identity::Induction => need_m(endo::induction_step_demo),
            Identity::QuotientHilb => need_m(qseries::quotient_hilb_check),
            Identity::RhsViaF => need_m(qseries::rhs_via_f_check),
        },
    }
}

/// Result of a sweep: freshly computed reports in canonical order plus
/// the instances answered from the cache.
#[derive(Clone, Debug, Default)]
pub struct SweepSummary {
    pub reports: Vec<ConjectureReport>,
    pub cached: Vec<Instance>,
    pub corrupted_cache_lines: usize,
}

impl SweepSummary {
    pub fn count(&self, verdict: Verdict) -> usize {
        self.reports.iter().filter(|r| r.verdict == verdict).count()
    }

    pub fn any_fails(&self) -> bool {
        self.reports.iter().any(ConjectureReport::is_fails)
    }

    /// Reports as JSON lines, one per instance.
    pub fn to_jsonl(&self) -> String {
        self.reports
            .iter()
            .map(|r| serde_json::to_string(r).expect("report serializes") + "\n")
            .collect()
    }
}

pub fn run_sweep(config: &SweepConfig) -> Result<SweepSummary> {
    config.validate()?;
    let cache = match &config.cache {
        Some(path) => Some(ReportCache::open(path)?),
        None => None,
    };
    let mut todo = Vec::new();
    let mut cached = Vec::new();
    for inst in instances(config) {
        let hit = cache
            .as_ref()
            .and_then(|c| c.get(&inst.key()))
            .is_some_and(ConjectureReport::is_holds);
        if hit && !config.force {
            cached.push(inst);
        } else {
            todo.push(inst);
        }
    }
    info!("sweep: {} instances to run, {} cached", todo.len(), cached.len());
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| precondition(format!("thread pool: {e}")))?;
    let write_error = Mutex::new(None);
    let mut reports: Vec<ConjectureReport> = pool.install(|| {
        todo.par_iter()
            .map(|inst| {
                let mut report = run_instance(inst);
                if config.no_timing {
                    report.elapsed_ms = 0;
                }
                info!(
                    "{} k={} l={} m={} -> {} ({} ms)",
                    report.claim,
                    report.k,
                    report.l,
                    report.m.map_or("-".to_string(), |m| m.to_string()),
                    report.verdict,
                    report.elapsed_ms
                );
                if let Some(c) = &cache {
                    if let Err(e) = c.append(&report) {
                        warn!("cache write failed: {e}");
                        write_error.lock().expect("lock").get_or_insert(e);
                    }
                }
                report
            })
            .collect()
    });
    if let Some(e) = write_error.into_inner().expect("lock") {
        return Err(e);
    }
    reports.sort_by(ConjectureReport::sort_order);
    Ok(SweepSummary {
        reports,
        cached,
        corrupted_cache_lines: cache.map_or(0, |c| c.corrupted_lines()),
    })
}
