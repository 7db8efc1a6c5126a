//! Instance generators and constrained searches: seeded random instances,
//! locally bipartite colorings, patterns from color sequences, samplers
//! that enforce theorem hypotheses, and the backtracking tightness search
//! with its two built-in target specs.

mod search;

use alloc::string::String;
use alloc::vec::Vec;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::local::part_count;
use crate::model::{Color, HColoredGraph, PatternGraph, SimpleGraph, Vertex, Walk};
use crate::proper::{lift_to_h, EdgeColoredGraph};
use crate::theorems::{check_degree_hypothesis, check_no_c3_exactly2, check_no_c4_exactly3, Statement};
use crate::walks::{find_h_cycle_through, obstructions};
use crate::{Error, Result};

pub use search::{search_tightness, SearchOutcome, SearchStats};

/// A declarative constraint of a tightness spec. Cycles are vertex
/// sequences without the closing repetition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Constraint {
    /// The local partition at `vertex` has exactly `k` parts.
    PartCount { vertex: Vertex, k: usize },
    /// The obstruction set of the closed cycle equals `obstructions`.
    CycleObstructions { cycle: Vec<Vertex>, obstructions: Vec<Vertex> },
    /// `vertex` is among the obstructions of the closed cycle.
    ObstructionAt { cycle: Vec<Vertex>, vertex: Vertex },
    /// No obstruction-free cycle of `length` passes through `vertex`.
    NoHCycleThrough { vertex: Vertex, length: usize },
}

/// A searchable description of a colored complete graph: the order, a
/// palette size (derived from the stated part counts when absent), the
/// constraints, a node budget and a seed (carried for reproducibility;
/// the backtracking itself is deterministic).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSpec {
    pub n: usize,
    pub colors: Option<usize>,
    pub constraints: Vec<Constraint>,
    pub budget: u64,
    pub seed: u64,
}

impl SearchSpec {
    /// The palette the search runs with: the explicit size, or the
    /// largest stated part count plus two.
    pub fn palette(&self) -> usize {
        if let Some(c) = self.colors {
            return c;
        }
        let max_k = self
            .constraints
            .iter()
            .filter_map(|c| match c {
                Constraint::PartCount { k, .. } => Some(*k),
                _ => None,
            })
            .max()
            .unwrap_or(1);
        max_k + 2
    }

    /// Structural validation; satisfiability is the search's concern.
    pub fn validate(&self) -> Result<()> {
        let fail = |reason: String| Err(Error::InvalidSpec { reason });
        if self.budget == 0 {
            return fail(String::from("budget must be positive"));
        }
        if self.n > crate::model::MAX_VERTICES {
            return fail(alloc::format!("order {} exceeds {}", self.n, crate::model::MAX_VERTICES));
        }
        let palette = self.palette();
        if palette == 0 || palette > crate::model::MAX_VERTICES {
            return fail(alloc::format!("palette size {palette} not in 1..=64"));
        }
        let check_vertex = |v: Vertex| v < self.n;
        for c in &self.constraints {
            match c {
                Constraint::PartCount { vertex, k } => {
                    if !check_vertex(*vertex) || *k == 0 {
                        return fail(alloc::format!("bad part-count constraint at {vertex}"));
                    }
                }
                Constraint::CycleObstructions { cycle, obstructions } => {
                    if cycle.len() < 3 || !cycle.iter().all(|&v| check_vertex(v)) {
                        return fail(String::from("cycle constraint is not a cycle"));
                    }
                    let mut sorted = cycle.clone();
                    sorted.sort_unstable();
                    sorted.dedup();
                    if sorted.len() != cycle.len() {
                        return fail(String::from("cycle constraint repeats a vertex"));
                    }
                    if !obstructions.iter().all(|v| cycle.contains(v)) {
                        return fail(String::from("obstruction set leaves the cycle"));
                    }
                }
                Constraint::ObstructionAt { cycle, vertex } => {
                    if cycle.len() < 3 || !cycle.iter().all(|&v| check_vertex(v)) {
                        return fail(String::from("witness constraint is not a cycle"));
                    }
                    let mut sorted = cycle.clone();
                    sorted.sort_unstable();
                    sorted.dedup();
                    if sorted.len() != cycle.len() {
                        return fail(String::from("witness constraint repeats a vertex"));
                    }
                    if !cycle.contains(vertex) {
                        return fail(String::from("obstruction witness leaves the cycle"));
                    }
                }
                Constraint::NoHCycleThrough { vertex, length } => {
                    if !check_vertex(*vertex) || *length < 3 || *length > self.n {
                        return fail(String::from("bad cycle-absence constraint"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Default node budget of the built-in specs.
pub const FIGURE_BUDGET: u64 = 10_000_000;

/// The order-4 tightness target: part count 2 everywhere, one clean
/// 4-cycle, two 4-cycles with two obstructions each, and the first vertex
/// on no obstruction-free triangle.
pub fn figure1_spec() -> SearchSpec {
    let mut constraints: Vec<Constraint> =
        (0..4).map(|vertex| Constraint::PartCount { vertex, k: 2 }).collect();
    constraints.push(Constraint::CycleObstructions {
        cycle: alloc::vec![0, 1, 2, 3],
        obstructions: alloc::vec![],
    });
    constraints.push(Constraint::CycleObstructions {
        cycle: alloc::vec![0, 1, 3, 2],
        obstructions: alloc::vec![0, 2],
    });
    constraints.push(Constraint::CycleObstructions {
        cycle: alloc::vec![0, 3, 1, 2],
        obstructions: alloc::vec![1, 3],
    });
    constraints.push(Constraint::ObstructionAt { cycle: alloc::vec![0, 1, 2], vertex: 0 });
    constraints.push(Constraint::ObstructionAt { cycle: alloc::vec![0, 2, 3], vertex: 2 });
    constraints.push(Constraint::ObstructionAt { cycle: alloc::vec![0, 1, 3], vertex: 3 });
    constraints.push(Constraint::NoHCycleThrough { vertex: 0, length: 3 });
    SearchSpec { n: 4, colors: None, constraints, budget: FIGURE_BUDGET, seed: 0 }
}

/// The order-7 tightness target: part count 4 everywhere, each of the 15
/// triangles through vertex 0 with exactly one prescribed obstruction,
/// and one 4-cycle with exactly three.
///
/// Six colors admit no solution under these constraints (the whole
/// 6-color space exhausts without one); seven is the smallest workable
/// palette, so the spec pins it rather than using the derived default.
pub fn figure2_spec() -> SearchSpec {
    let mut constraints: Vec<Constraint> =
        (0..7).map(|vertex| Constraint::PartCount { vertex, k: 4 }).collect();
    // (cycle through 0, its unique obstruction)
    let triangles: [([Vertex; 3], Vertex); 15] = [
        ([0, 6, 5], 5),
        ([0, 6, 4], 6),
        ([0, 6, 3], 6),
        ([0, 6, 2], 2),
        ([0, 6, 1], 1),
        ([0, 5, 4], 5),
        ([0, 5, 3], 3),
        ([0, 5, 2], 2),
        ([0, 5, 1], 1),
        ([0, 4, 3], 3),
        ([0, 4, 2], 4),
        ([0, 4, 1], 4),
        ([0, 3, 2], 0),
        ([0, 3, 1], 0),
        ([0, 2, 1], 0),
    ];
    for (cycle, at) in triangles {
        constraints.push(Constraint::CycleObstructions {
            cycle: cycle.to_vec(),
            obstructions: alloc::vec![at],
        });
    }
    constraints.push(Constraint::CycleObstructions {
        cycle: alloc::vec![0, 1, 6, 2],
        obstructions: alloc::vec![0, 1, 2],
    });
    constraints.push(Constraint::NoHCycleThrough { vertex: 0, length: 3 });
    SearchSpec { n: 7, colors: Some(7), constraints, budget: FIGURE_BUDGET, seed: 0 }
}

/// Re-verifies an instance against a spec using the public analysis
/// modules only; the search engine evaluates its constraints through an
/// entirely separate representation. Returns one message per failure.
pub fn check_spec(inst: &HColoredGraph, spec: &SearchSpec) -> Vec<String> {
    let mut failures = Vec::new();
    if inst.order() != spec.n {
        failures.push(alloc::format!("order {} differs from spec order {}", inst.order(), spec.n));
        return failures;
    }
    if !inst.graph().is_complete() {
        failures.push(String::from("instance graph is not complete"));
    }
    if !crate::model::validate_instance(inst).is_empty() {
        failures.push(String::from("instance fails validation"));
    }
    for c in &spec.constraints {
        match c {
            Constraint::PartCount { vertex, k } => match part_count(inst, *vertex) {
                Ok(found) if found == *k => {}
                Ok(found) => {
                    failures.push(alloc::format!("vertex {vertex}: {found} parts, expected {k}"))
                }
                Err(e) => failures.push(alloc::format!("vertex {vertex}: {e}")),
            },
            Constraint::CycleObstructions { cycle, obstructions: expected } => {
                let walk = Walk::closed(cycle.clone());
                match obstructions(inst, &walk) {
                    Ok(positions) => {
                        let mut found: Vec<Vertex> =
                            positions.iter().map(|&i| cycle[i]).collect();
                        found.sort_unstable();
                        let mut expected = expected.clone();
                        expected.sort_unstable();
                        if found != expected {
                            failures.push(alloc::format!(
                                "cycle {cycle:?}: obstructions {found:?}, expected {expected:?}"
                            ));
                        }
                    }
                    Err(e) => failures.push(alloc::format!("cycle {cycle:?}: {e}")),
                }
            }
            Constraint::ObstructionAt { cycle, vertex } => {
                let walk = Walk::closed(cycle.clone());
                match obstructions(inst, &walk) {
                    Ok(positions) => {
                        if !positions.iter().any(|&i| cycle[i] == *vertex) {
                            failures.push(alloc::format!(
                                "cycle {cycle:?}: vertex {vertex} is not an obstruction"
                            ));
                        }
                    }
                    Err(e) => failures.push(alloc::format!("cycle {cycle:?}: {e}")),
                }
            }
            Constraint::NoHCycleThrough { vertex, length } => {
                match find_h_cycle_through(inst, *vertex, *length) {
                    Ok(None) => {}
                    Ok(Some(w)) => failures.push(alloc::format!(
                        "vertex {vertex} lies on clean cycle {:?}",
                        w.vertices()
                    )),
                    Err(e) => failures.push(alloc::format!("vertex {vertex}: {e}")),
                }
            }
        }
    }
    failures
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

/// A complete graph of order `n` with every edge colored uniformly at
/// random from the palette of `h`; identical `(n, h, seed)` triples give
/// identical instances.
pub fn random_instance(n: usize, h: &PatternGraph, seed: u64) -> Result<HColoredGraph> {
    if n < 3 {
        return Err(Error::OrderOutOfRange { n, min: 3, max: crate::model::MAX_VERTICES });
    }
    let m = h.color_count();
    if m == 0 {
        return Err(Error::EmptyPalette);
    }
    let g = SimpleGraph::complete(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entries: Vec<(Vertex, Vertex, Color)> =
        g.edges().iter().map(|&(u, v)| (u, v, rng.random_range(0..m))).collect();
    Ok(HColoredGraph::from_parts(g, h.clone(), entries))
}

/// Colors every edge of `g` with one of two adjacent loopless colors of
/// `h` (the lexicographically first such pair), so that every local graph
/// of the result is complete bipartite or edgeless. `None` when `h` has
/// no qualifying pair.
pub fn bipartite_local_coloring(
    g: &SimpleGraph,
    h: &PatternGraph,
    seed: u64,
) -> Option<HColoredGraph> {
    let m = h.color_count();
    let (h1, h2) = (0..m)
        .flat_map(|a| ((a + 1)..m).map(move |b| (a, b)))
        .find(|&(a, b)| h.allows(a, b) && !h.allows(a, a) && !h.allows(b, b))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entries: Vec<(Vertex, Vertex, Color)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (u, v, if rng.random_range(0..2u8) == 0 { h1 } else { h2 }))
        .collect();
    Some(HColoredGraph::from_parts(g.clone(), h.clone(), entries))
}

/// The pattern induced by an ordered color sequence: consecutive entries
/// become adjacencies, the last wraps to the first, and repeated
/// consecutive entries induce loops. The palette spans `0..=max(seq)`;
/// colors outside the sequence stay isolated.
pub fn pattern_from_sequence(seq: &[Color]) -> Result<PatternGraph> {
    let Some(&max) = seq.iter().max() else {
        return Err(Error::EmptySequence);
    };
    let mut h = PatternGraph::new(max + 1)?;
    for window in seq.windows(2) {
        h.add_pair(window[0], window[1])?;
    }
    h.add_pair(seq[seq.len() - 1], seq[0])?;
    Ok(h)
}

// ---------------------------------------------------------------------------
// Hypothesis-satisfying sampler
// ---------------------------------------------------------------------------

/// Sampling strategy for [`sample_hypothesis_satisfying`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleMode {
    /// Edge colorings over the complete loopless pattern with the color
    /// degree bound enforced; every hypothesis holds by construction.
    ProperlyColored,
    /// Rejection sampling over random patterns (complete patterns with
    /// random loops, and fully random ones) until the hypothesis set of
    /// the statement holds.
    GeneralPattern,
}

impl SampleMode {
    pub fn name(self) -> &'static str {
        match self {
            SampleMode::ProperlyColored => "pc",
            SampleMode::GeneralPattern => "general",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "pc" => Some(SampleMode::ProperlyColored),
            "general" => Some(SampleMode::GeneralPattern),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleStats {
    pub attempts: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SampleOutcome {
    Sampled { instance: HColoredGraph, stats: SampleStats },
    Exhausted { stats: SampleStats },
}

fn min_color_degree_ok(colors: &[Color], n: usize) -> bool {
    // colors indexed like the edges of K_n in lexicographic order
    let mut seen = alloc::vec![0u64; n];
    let mut idx = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            seen[u] |= 1 << colors[idx];
            seen[v] |= 1 << colors[idx];
            idx += 1;
        }
    }
    seen.iter().all(|m| 2 * m.count_ones() as usize >= n + 1)
}

/// A proper edge coloring of `K_n` by the circle method, with color and
/// vertex labels shuffled by `rng`; every vertex then meets `n - 1`
/// distinct colors.
#[allow(clippy::needless_range_loop)]
fn shuffled_proper_coloring(n: usize, rng: &mut ChaCha8Rng) -> Vec<Color> {
    let even = if n.is_multiple_of(2) { n } else { n + 1 };
    let rounds = even - 1;
    let mut color_label: Vec<Color> = (0..rounds).collect();
    let mut vertex_label: Vec<Vertex> = (0..n).collect();
    shuffle(&mut color_label, rng);
    shuffle(&mut vertex_label, rng);

    let mut table = alloc::vec![0usize; n * n];
    for r in 0..rounds {
        let mut pairs: Vec<(usize, usize)> = alloc::vec![(even - 1, r)];
        for i in 1..even / 2 {
            pairs.push(((r + i) % (even - 1), (r + even - 1 - i) % (even - 1)));
        }
        for (a, b) in pairs {
            if a < n && b < n {
                let (u, v) = (vertex_label[a], vertex_label[b]);
                table[u * n + v] = color_label[r];
                table[v * n + u] = color_label[r];
            }
        }
    }
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            out.push(table[u * n + v]);
        }
    }
    out
}

fn shuffle<T>(items: &mut [T], rng: &mut ChaCha8Rng) {
    for i in (1..items.len()).rev() {
        let j = rng.random_range(0..=i);
        items.swap(i, j);
    }
}

/// A random edge-colored complete graph with `2 d^c(x) >= n + 1` at every
/// vertex: rejection from uniform colorings over `n` colors, falling back
/// to a shuffled proper coloring (color degree `n - 1`) when the budget
/// of uniform tries runs out. `None` only when `budget` is smaller than
/// the tries needed. Returns the graph with the attempt count.
pub fn random_high_color_degree(
    n: usize,
    seed: u64,
    budget: u64,
) -> Result<Option<(EdgeColoredGraph, u64)>> {
    if n < 3 {
        return Err(Error::OrderOutOfRange { n, min: 3, max: crate::model::MAX_VERTICES });
    }
    if n > crate::model::MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: crate::model::MAX_VERTICES });
    }
    let g = SimpleGraph::complete(n)?;
    let edge_count = g.edge_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut attempts = 0u64;
    let uniform_tries = budget.min(64);
    while attempts < uniform_tries {
        attempts += 1;
        let colors: Vec<Color> = (0..edge_count).map(|_| rng.random_range(0..n)).collect();
        if min_color_degree_ok(&colors, n) {
            let entries: Vec<_> =
                g.edges().iter().zip(&colors).map(|(&(u, v), &c)| (u, v, c)).collect();
            return Ok(Some((EdgeColoredGraph::new(g, n, &entries)?, attempts)));
        }
    }
    if attempts >= budget {
        return Ok(None);
    }
    attempts += 1;
    let colors = shuffled_proper_coloring(n, &mut rng);
    let palette = if n.is_multiple_of(2) { n - 1 } else { n };
    let entries: Vec<_> = g.edges().iter().zip(&colors).map(|(&(u, v), &c)| (u, v, c)).collect();
    Ok(Some((EdgeColoredGraph::new(g, palette, &entries)?, attempts)))
}

fn complete_instance(n: usize, h: PatternGraph, colors: &[Color]) -> HColoredGraph {
    let g = SimpleGraph::complete(n).expect("order within bounds");
    let entries: Vec<(Vertex, Vertex, Color)> =
        g.edges().iter().zip(colors).map(|(&(u, v), &c)| (u, v, c)).collect();
    HColoredGraph::from_parts(g, h, entries)
}

fn hypotheses_hold(inst: &HColoredGraph, which: Statement) -> Result<bool> {
    if !check_degree_hypothesis(inst)?.holds {
        return Ok(false);
    }
    if !check_no_c4_exactly3(inst)?.holds {
        return Ok(false);
    }
    if which.needs_c3_hypothesis() && !check_no_c3_exactly2(inst)?.holds {
        return Ok(false);
    }
    Ok(true)
}

/// Draws an instance of order `n` satisfying the hypothesis set of the
/// statement, or exhausts the attempt budget. Deterministic in the seed.
pub fn sample_hypothesis_satisfying(
    n: usize,
    seed: u64,
    which: Statement,
    mode: SampleMode,
    budget: u64,
) -> Result<SampleOutcome> {
    let (min, max) = which.order_range();
    if n < min || n > max {
        return Err(Error::OrderOutOfRange { n, min, max });
    }
    if n > crate::model::MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: crate::model::MAX_VERTICES });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edge_count = n * (n - 1) / 2;
    let mut attempts: u64 = 0;

    match mode {
        SampleMode::ProperlyColored => match random_high_color_degree(n, seed, budget)? {
            Some((ecg, attempts)) => Ok(SampleOutcome::Sampled {
                instance: lift_to_h(&ecg),
                stats: SampleStats { attempts },
            }),
            None => Ok(SampleOutcome::Exhausted { stats: SampleStats { attempts: budget } }),
        },
        SampleMode::GeneralPattern => {
            while attempts < budget {
                attempts += 1;
                let m = rng.random_range(n.div_ceil(2).max(2)..=n);
                let h = if rng.random_range(0..2u8) == 0 {
                    // complete pattern with random loops: hypotheses stay
                    // satisfiable while the pattern leaves the properly
                    // colored special case
                    let mut h = PatternGraph::complete_loopless(m)?;
                    let loops = rng.random_range(1..=m);
                    for _ in 0..loops {
                        let c = rng.random_range(0..m);
                        h.add_pair(c, c)?;
                    }
                    h
                } else {
                    let mut h = PatternGraph::new(m)?;
                    for a in 0..m {
                        for b in a..m {
                            if rng.random_range(0..4u8) < 3 {
                                h.add_pair(a, b)?;
                            }
                        }
                    }
                    h
                };
                let colors: Vec<Color> =
                    (0..edge_count).map(|_| rng.random_range(0..m)).collect();
                let inst = complete_instance(n, h, &colors);
                let multipartite = (0..n).all(|x| part_count(&inst, x).is_ok());
                if multipartite && hypotheses_hold(&inst, which)? {
                    return Ok(SampleOutcome::Sampled { instance: inst, stats: SampleStats { attempts } });
                }
            }
            Ok(SampleOutcome::Exhausted { stats: SampleStats { attempts } })
        }
    }
}
