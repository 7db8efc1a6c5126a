//! Report documents emitted by the commands. Every report is JSON and
//! re-parses to an equal value.

use serde::{Deserialize, Serialize};

use hcolor::local::local_partition;
use hcolor::model::{validate_instance, HColoredGraph, Violation};
use hcolor::theorems::{check_degree_hypothesis, check_no_c3_exactly2, check_no_c4_exactly3};
use hcolor::walks::{find_h_cycle_through, CycleReport};

use crate::format::InstanceFile;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationDoc {
    pub code: String,
    pub detail: String,
}

impl From<&Violation> for ViolationDoc {
    fn from(v: &Violation) -> Self {
        ViolationDoc { code: v.code().to_string(), detail: format!("{v:?}") }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalEntry {
    pub vertex: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parts: Option<Vec<Vec<usize>>>,
    /// Witness edges (by opposite endpoint) of an intransitive same-part
    /// relation.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub not_multipartite: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleDoc {
    pub cycle: Vec<usize>,
    pub obstructions: Vec<usize>,
}

impl From<&CycleReport> for CycleDoc {
    fn from(r: &CycleReport) -> Self {
        CycleDoc {
            cycle: r.walk.vertices().to_vec(),
            obstructions: r.obstruction_vertices(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeDoc {
    pub holds: bool,
    pub part_counts: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleHypothesisDoc {
    pub holds: bool,
    pub witnesses: Vec<CycleDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesesDoc {
    pub degree: DegreeDoc,
    pub no_c4_exactly3: CycleHypothesisDoc,
    pub no_c3_exactly2: CycleHypothesisDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclePresence {
    pub vertex: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub on_c3: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub on_c4: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub file: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub violations: Vec<ViolationDoc>,
    pub complete: bool,
    pub local: Vec<LocalEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hypotheses: Option<HypothesesDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hypotheses_error: Option<String>,
    pub cycles: Vec<CyclePresence>,
}

impl CheckReport {
    pub fn clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// The full per-instance analysis behind `check`: validation, per-vertex
/// partitions, hypothesis checks, and short-cycle presence.
pub fn build_check_report(source: &str, file: &InstanceFile, inst: &HColoredGraph) -> CheckReport {
    let n = inst.order();
    let violations: Vec<ViolationDoc> =
        validate_instance(inst).iter().map(Into::into).collect();
    let valid = violations.is_empty();
    let complete = inst.graph().is_complete();

    let mut local = Vec::with_capacity(n);
    for x in 0..n {
        let entry = match local_partition(inst, x) {
            Ok(p) => LocalEntry {
                vertex: x,
                k: Some(p.k()),
                parts: Some(p.parts.clone()),
                not_multipartite: None,
                error: None,
            },
            Err(hcolor::Error::NotMultipartite { witness, .. }) => LocalEntry {
                vertex: x,
                k: None,
                parts: None,
                not_multipartite: Some(witness.to_vec()),
                error: None,
            },
            Err(e) => LocalEntry {
                vertex: x,
                k: None,
                parts: None,
                not_multipartite: None,
                error: Some(e.to_string()),
            },
        };
        local.push(entry);
    }

    let (hypotheses, hypotheses_error) = if valid && complete && n >= 3 {
        let run = || -> hcolor::Result<HypothesesDoc> {
            let degree = check_degree_hypothesis(inst)?;
            let c4 = check_no_c4_exactly3(inst)?;
            let c3 = check_no_c3_exactly2(inst)?;
            Ok(HypothesesDoc {
                degree: DegreeDoc { holds: degree.holds, part_counts: degree.part_counts },
                no_c4_exactly3: CycleHypothesisDoc {
                    holds: c4.holds,
                    witnesses: c4.witnesses.iter().map(Into::into).collect(),
                },
                no_c3_exactly2: CycleHypothesisDoc {
                    holds: c3.holds,
                    witnesses: c3.witnesses.iter().map(Into::into).collect(),
                },
            })
        };
        match run() {
            Ok(h) => (Some(h), None),
            Err(e) => (None, Some(e.to_string())),
        }
    } else {
        (None, None)
    };

    let mut cycles = Vec::with_capacity(n);
    if valid {
        for v in 0..n {
            let on_c3 = (n >= 3).then(|| {
                find_h_cycle_through(inst, v, 3).map(|c| c.is_some()).unwrap_or(false)
            });
            let on_c4 = (n >= 4).then(|| {
                find_h_cycle_through(inst, v, 4).map(|c| c.is_some()).unwrap_or(false)
            });
            cycles.push(CyclePresence { vertex: v, on_c3, on_c4 });
        }
    }

    CheckReport {
        file: source.to_string(),
        n,
        labels: file.labels.clone(),
        violations,
        complete,
        local,
        hypotheses,
        hypotheses_error,
        cycles,
    }
}

// ---------------------------------------------------------------------------
// Campaign and search reports
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignConfigDoc {
    pub which: String,
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub mode: String,
    pub threads: usize,
    pub budget: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDoc {
    pub index: usize,
    pub attempts: u64,
    pub sampled: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hypotheses_hold: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conclusion_holds: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub part_counts: Option<Vec<usize>>,
    /// `(vertex, length)` lacking the concluded cycle.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AggregateDoc {
    pub instances: u64,
    pub exhausted: u64,
    pub hypothesis_pass: u64,
    pub conclusion_pass: u64,
    pub violations: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub config: CampaignConfigDoc,
    pub verdicts: Vec<VerdictDoc>,
    pub aggregate: AggregateDoc,
    /// Hypothesis-satisfying instances whose conclusion failed, verbatim.
    pub falsifiers: Vec<InstanceFile>,
    pub wall_time_ms: u64,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReportDoc {
    pub found: bool,
    pub nodes: u64,
    pub budget: u64,
    pub budget_exhausted: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deepest_conflict: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out: Option<String>,
    pub spec_check_failures: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub check: Option<CheckReport>,
}
