use std::collections::BTreeMap;
use std::path::PathBuf;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::{mix_seed, FamilySpec};
use crate::graph::{Graph, GraphFormat};

use super::{check_inequalities, GraphMetrics, InequalityResult, VerifyOptions};

/// Where a batch run takes its graphs from.
#[derive(Clone, Debug)]
pub enum BatchSource {
    /// `trials` graphs of a family; trial `i` uses seed `mix_seed(seed, i)`.
    /// Deterministic families are checked once.
    Family(FamilySpec),
    /// A single graph file.
    File(PathBuf, GraphFormat),
    /// Every regular file in a directory, in file-name order.
    Directory(PathBuf, GraphFormat),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphSize {
    pub n: usize,
    pub m: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphReport {
    /// Family spec with trial index, or file name.
    pub source: String,
    pub graph: GraphSize,
    pub metrics: GraphMetrics,
    pub inequalities: Vec<InequalityResult>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Aggregates {
    pub graphs: usize,
    pub violations: usize,
    pub tight_counts: BTreeMap<String, usize>,
}

impl Aggregates {
    fn add(&mut self, report: &GraphReport) {
        self.graphs += 1;
        for r in &report.inequalities {
            if r.is_violation() {
                self.violations += 1;
            }
            if r.applicable && r.tight {
                *self.tight_counts.entry(r.name.to_string()).or_default() += 1;
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub source: String,
    pub seed: u64,
    pub trials: usize,
    pub options: VerifyOptions,
    pub graphs: Vec<GraphReport>,
    pub aggregates: Aggregates,
}

impl VerifyReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Checks every graph of `source` and aggregates the results.
pub fn batch_verify(source: &BatchSource, trials: usize, seed: u64, options: &VerifyOptions) -> Result<VerifyReport> {
    if trials < 1 {
        return Err(Error::input("trials must be at least 1"));
    }
    let inputs: Vec<(String, Graph)> = match source {
        BatchSource::Family(spec) => {
            let count = if spec.is_random() { trials } else { 1 };
            (0..count)
                .into_par_iter()
                .map(|i| Ok((format!("{spec}#{i}"), spec.generate(mix_seed(seed, i as u64))?)))
                .collect::<Result<_>>()?
        }
        BatchSource::File(path, format) => vec![(file_name(path), format.read(path)?)],
        BatchSource::Directory(dir, format) => {
            let entries = std::fs::read_dir(dir)
                .map_err(|e| Error::input(format!("cannot read directory {}: {e}", dir.display())))?;
            let mut files: Vec<PathBuf> = entries
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.is_file())
                .collect();
            files.sort();
            files
                .iter()
                .map(|p| Ok((file_name(p), format.read(p)?)))
                .collect::<Result<_>>()?
        }
    };
    let graphs: Vec<GraphReport> = inputs
        .into_par_iter()
        .map(|(name, g)| {
            let (metrics, inequalities) = check_inequalities(&g, options)?;
            Ok(GraphReport {
                source: name,
                graph: GraphSize { n: g.n(), m: g.m() },
                metrics,
                inequalities,
            })
        })
        .collect::<Result<_>>()?;
    let mut aggregates = Aggregates::default();
    for report in &graphs {
        aggregates.add(report);
    }
    Ok(VerifyReport {
        source: describe(source),
        seed,
        trials,
        options: *options,
        graphs,
        aggregates,
    })
}

fn file_name(path: &std::path::Path) -> String {
    path.file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn describe(source: &BatchSource) -> String {
    match source {
        BatchSource::Family(spec) => spec.to_string(),
        BatchSource::File(p, _) | BatchSource::Directory(p, _) => p.display().to_string(),
    }
}
