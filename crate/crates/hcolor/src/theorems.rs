//! Hypothesis predicates and conclusion verifiers for the short-cycle
//! statements on colored complete graphs, with structured evidence.
//!
//! The statements share two cycle hypotheses (no 4-cycle with exactly 3
//! obstructions, no 3-cycle with exactly 2) and a part-count hypothesis
//! (`2 k_x >= n + 1` at every vertex, kept in exact integer arithmetic).
//! A verdict records the hypothesis breakdown, whether every vertex lies
//! on a constrained cycle of the statement's length, and a counterexample
//! vertex when one does not.

use alloc::vec::Vec;

use crate::local::local_partition;
use crate::model::{HColoredGraph, Vertex};
use crate::walks::{cycles_with_obstruction_count, find_h_cycle_through, CycleReport};
use crate::{Error, Result};

/// Offending-cycle lists in verdicts are capped at this many entries.
pub const WITNESS_CAP: usize = 100;

/// The verifiable statements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statement {
    /// Order at least 3; degree and 4-cycle hypotheses; conclusion: every
    /// vertex on a constrained cycle of length 3.
    T3cycle,
    /// Order in 4..9; degree and 4-cycle hypotheses; conclusion: length 4.
    T4small,
    /// Order at least 9; degree and both cycle hypotheses; length 4.
    T4large,
    /// Order at least 4; degree and both cycle hypotheses; length 4.
    Cor4,
}

impl Statement {
    pub const ALL: [Statement; 4] = [
        Statement::T3cycle,
        Statement::T4small,
        Statement::T4large,
        Statement::Cor4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statement::T3cycle => "T3cycle",
            Statement::T4small => "T4small",
            Statement::T4large => "T4large",
            Statement::Cor4 => "Cor4",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Statement::ALL.into_iter().find(|w| w.name() == s)
    }

    /// Admissible orders, inclusive.
    pub fn order_range(self) -> (usize, usize) {
        match self {
            Statement::T3cycle => (3, usize::MAX),
            Statement::T4small => (4, 8),
            Statement::T4large => (9, usize::MAX),
            Statement::Cor4 => (4, usize::MAX),
        }
    }

    /// Length of the cycle the conclusion asks for.
    pub fn conclusion_length(self) -> usize {
        match self {
            Statement::T3cycle => 3,
            _ => 4,
        }
    }

    /// Whether the hypothesis set includes the 3-cycle condition.
    pub fn needs_c3_hypothesis(self) -> bool {
        matches!(self, Statement::T4large | Statement::Cor4)
    }
}

/// Outcome of the part-count hypothesis with the per-vertex counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeCheck {
    pub holds: bool,
    pub part_counts: Vec<usize>,
}

/// Outcome of a cycle hypothesis with offending cycles (capped).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleCheck {
    pub holds: bool,
    pub witnesses: Vec<CycleReport>,
}

fn require_complete(inst: &HColoredGraph) -> Result<()> {
    if !inst.graph().is_complete() {
        return Err(Error::NotComplete);
    }
    Ok(())
}

/// Whether `2 k_x >= n + 1` at every vertex of a complete instance of
/// order at least 3. Exact integer arithmetic throughout.
pub fn check_degree_hypothesis(inst: &HColoredGraph) -> Result<DegreeCheck> {
    require_complete(inst)?;
    let n = inst.order();
    if n < 3 {
        return Err(Error::OrderOutOfRange { n, min: 3, max: usize::MAX });
    }
    let mut part_counts = Vec::with_capacity(n);
    for x in 0..n {
        part_counts.push(local_partition(inst, x)?.k());
    }
    let holds = part_counts.iter().all(|&k| 2 * k >= n + 1);
    Ok(DegreeCheck { holds, part_counts })
}

fn check_cycle_hypothesis(inst: &HColoredGraph, length: usize, count: usize) -> Result<CycleCheck> {
    require_complete(inst)?;
    let mut witnesses = cycles_with_obstruction_count(inst, length, count)?;
    let holds = witnesses.is_empty();
    witnesses.truncate(WITNESS_CAP);
    Ok(CycleCheck { holds, witnesses })
}

/// Whether no 4-cycle has exactly 3 obstructions.
pub fn check_no_c4_exactly3(inst: &HColoredGraph) -> Result<CycleCheck> {
    check_cycle_hypothesis(inst, 4, 3)
}

/// Whether no 3-cycle has exactly 2 obstructions.
pub fn check_no_c3_exactly2(inst: &HColoredGraph) -> Result<CycleCheck> {
    check_cycle_hypothesis(inst, 3, 2)
}

/// A vertex that lies on no constrained cycle of the required length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Counterexample {
    pub vertex: Vertex,
    pub length: usize,
}

/// Full evidence for one statement on one instance.
///
/// When `hypotheses_hold` is true and `conclusion_holds` is false the
/// counterexample is present and the statement itself is falsified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub statement: Statement,
    pub degree: DegreeCheck,
    pub no_c4_exactly3: CycleCheck,
    /// Present only for statements whose hypothesis set includes it.
    pub no_c3_exactly2: Option<CycleCheck>,
    pub hypotheses_hold: bool,
    pub conclusion_holds: bool,
    pub counterexample: Option<Counterexample>,
}

/// Evaluates the exact hypothesis set of the statement, then searches for
/// a constrained cycle of the statement's length through every vertex.
/// The conclusion is evaluated regardless of the hypotheses so that
/// tightness instances can exhibit their failing vertex.
pub fn verify_theorem(inst: &HColoredGraph, which: Statement) -> Result<TheoremVerdict> {
    require_complete(inst)?;
    let n = inst.order();
    let (min, max) = which.order_range();
    if n < min || n > max {
        return Err(Error::OrderOutOfRange { n, min, max });
    }

    let degree = check_degree_hypothesis(inst)?;
    let no_c4_exactly3 = check_no_c4_exactly3(inst)?;
    let no_c3_exactly2 = if which.needs_c3_hypothesis() {
        Some(check_no_c3_exactly2(inst)?)
    } else {
        None
    };
    let hypotheses_hold = degree.holds
        && no_c4_exactly3.holds
        && no_c3_exactly2.as_ref().is_none_or(|c| c.holds);

    let length = which.conclusion_length();
    let mut counterexample = None;
    for v in 0..n {
        if find_h_cycle_through(inst, v, length)?.is_none() {
            counterexample = Some(Counterexample { vertex: v, length });
            break;
        }
    }

    Ok(TheoremVerdict {
        statement: which,
        degree,
        no_c4_exactly3,
        no_c3_exactly2,
        hypotheses_hold,
        conclusion_holds: counterexample.is_none(),
        counterexample,
    })
}
