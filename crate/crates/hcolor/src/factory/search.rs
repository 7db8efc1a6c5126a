//! Backtracking search for colored complete graphs meeting a constraint
//! spec.
//!
//! The search assigns edge colors in lexicographic edge order (new colors
//! only one past the highest used, which quotients away palette
//! relabelings) while the pattern graph is kept three-valued: each color
//! pair is undecided until some constraint forces it in or out. Cycle
//! constraints whose edges are fully colored force their transition
//! pairs; part-count constraints force the same-part relation to stay
//! transitive and bound the final part count from both sides. Once every
//! edge is colored, the still-undecided pairs that could influence a
//! constraint (pairs of colors meeting at a vertex) are branched on
//! explicitly, and a final exact evaluation accepts or rejects the leaf.
//!
//! The engine evaluates constraints over its own packed state and shares
//! no code with [`super::check_spec`], which re-verifies results through
//! the analysis modules.

use alloc::vec;
use alloc::vec::Vec;

use crate::model::{HColoredGraph, PatternGraph, SimpleGraph, Vertex};
use crate::Result;

use super::{Constraint, SearchSpec};

const UNKNOWN: u8 = 0;
const IN: u8 = 1;
const OUT: u8 = 2;
const UNCOLORED: u8 = u8::MAX;

/// Search effort counters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchStats {
    /// Assignments tried, edge colors and pattern pairs alike.
    pub nodes: u64,
    /// Whether the node budget cut the search short.
    pub budget_exhausted: bool,
    /// Greatest decision depth at which a conflict was recorded.
    pub deepest_conflict: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SearchOutcome {
    Found { instance: HColoredGraph, stats: SearchStats },
    Exhausted { stats: SearchStats },
}

/// Searches for a complete-graph instance satisfying every constraint of
/// the spec, deterministically for a fixed spec.
pub fn search_tightness(spec: &SearchSpec) -> Result<SearchOutcome> {
    spec.validate()?;
    let mut engine = Engine::new(spec);
    let found = engine.edge_phase(0, 0);
    let stats = SearchStats {
        nodes: engine.nodes,
        budget_exhausted: engine.nodes >= engine.budget,
        deepest_conflict: engine.deepest_conflict,
    };
    if matches!(found, Step::Found) {
        Ok(SearchOutcome::Found { instance: engine.extract()?, stats })
    } else {
        Ok(SearchOutcome::Exhausted { stats })
    }
}

enum Step {
    Found,
    Pruned,
    Budget,
}

/// One transition requirement of a cycle constraint: the colors of two
/// edges must (or must not) be adjacent in the pattern.
struct TransitionReq {
    pred: usize,
    succ: usize,
    need_in: bool,
}

struct Engine {
    n: usize,
    m: usize,
    edges: Vec<(Vertex, Vertex)>,
    incident: Vec<Vec<usize>>,
    transition_reqs: Vec<TransitionReq>,
    part_reqs: Vec<(Vertex, usize)>,
    absence: Vec<(Vertex, usize)>,
    color: Vec<u8>,
    hstate: Vec<u8>,
    trail: Vec<u32>,
    nodes: u64,
    budget: u64,
    depth: usize,
    deepest_conflict: Option<usize>,
}

#[inline]
fn pair_index(a: u8, b: u8) -> usize {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    (b as usize) * (b as usize + 1) / 2 + a as usize
}

impl Engine {
    fn new(spec: &SearchSpec) -> Engine {
        let n = spec.n;
        let m = spec.palette();
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        let edge_index = |u: Vertex, v: Vertex| -> usize {
            let (u, v) = crate::model::ordered(u, v);
            edges.binary_search(&(u, v)).expect("complete edge list")
        };
        let mut incident = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
        }

        let mut transition_reqs = Vec::new();
        let mut part_reqs = Vec::new();
        let mut absence = Vec::new();
        for c in &spec.constraints {
            match c {
                Constraint::PartCount { vertex, k } => part_reqs.push((*vertex, *k)),
                Constraint::CycleObstructions { cycle, obstructions } => {
                    let k = cycle.len();
                    for i in 0..k {
                        transition_reqs.push(TransitionReq {
                            pred: edge_index(cycle[(i + k - 1) % k], cycle[i]),
                            succ: edge_index(cycle[i], cycle[(i + 1) % k]),
                            need_in: !obstructions.contains(&cycle[i]),
                        });
                    }
                }
                Constraint::ObstructionAt { cycle, vertex } => {
                    let k = cycle.len();
                    let i = cycle.iter().position(|v| v == vertex).expect("validated");
                    transition_reqs.push(TransitionReq {
                        pred: edge_index(cycle[(i + k - 1) % k], cycle[i]),
                        succ: edge_index(cycle[i], cycle[(i + 1) % k]),
                        need_in: false,
                    });
                }
                Constraint::NoHCycleThrough { vertex, length } => {
                    absence.push((*vertex, *length));
                }
            }
        }

        Engine {
            n,
            m,
            color: vec![UNCOLORED; edges.len()],
            edges,
            incident,
            transition_reqs,
            part_reqs,
            absence,
            hstate: vec![UNKNOWN; m * (m + 1) / 2],
            trail: Vec::new(),
            nodes: 0,
            budget: spec.budget,
            depth: 0,
            deepest_conflict: None,
        }
    }

    fn set_pair(&mut self, a: u8, b: u8, val: u8) -> core::result::Result<bool, ()> {
        let idx = pair_index(a, b);
        match self.hstate[idx] {
            UNKNOWN => {
                self.hstate[idx] = val;
                self.trail.push(idx as u32);
                Ok(true)
            }
            current if current == val => Ok(false),
            _ => Err(()),
        }
    }

    fn conflict(&mut self) -> bool {
        let best = self.deepest_conflict.get_or_insert(self.depth);
        *best = (*best).max(self.depth);
        false
    }

    /// Forces every implied pair and checks every partial bound; `false`
    /// on conflict. Runs to a fixpoint: a pair forced at one vertex can
    /// tighten the relation at another.
    fn propagate(&mut self) -> bool {
        loop {
            let mut changed = false;
            for r in 0..self.transition_reqs.len() {
                let TransitionReq { pred, succ, need_in } = self.transition_reqs[r];
                let (ca, cb) = (self.color[pred], self.color[succ]);
                if ca == UNCOLORED || cb == UNCOLORED {
                    continue;
                }
                let want = if need_in { IN } else { OUT };
                match self.set_pair(ca, cb, want) {
                    Ok(set) => changed |= set,
                    Err(()) => return self.conflict(),
                }
            }
            for p in 0..self.part_reqs.len() {
                let (x, k) = self.part_reqs[p];
                match self.check_partition(x, k) {
                    Ok(set) => changed |= set,
                    Err(()) => return self.conflict(),
                }
            }
            if !changed {
                return true;
            }
        }
    }

    /// Transitivity, closure forcing, and part-count bounds at one
    /// constrained vertex. `Ok(true)` when a pair was forced.
    fn check_partition(&mut self, x: Vertex, k: usize) -> core::result::Result<bool, ()> {
        let colored: Vec<usize> = self.incident[x]
            .iter()
            .copied()
            .filter(|&e| self.color[e] != UNCOLORED)
            .collect();
        let d = colored.len();
        if d < 2 {
            if d < self.incident[x].len() {
                return Ok(false); // nothing checkable yet
            }
            // fewer than two incident edges altogether
            return if d == k { Ok(false) } else { Err(()) };
        }
        // union-find over decided same-part pairs
        let mut parent: Vec<usize> = (0..d).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        let mut undecided: Vec<(usize, usize)> = Vec::new();
        let mut in_pairs: Vec<(usize, usize)> = Vec::new();
        for i in 0..d {
            for j in (i + 1)..d {
                let idx = pair_index(self.color[colored[i]], self.color[colored[j]]);
                match self.hstate[idx] {
                    OUT => {
                        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                        parent[ri] = rj;
                    }
                    IN => in_pairs.push((i, j)),
                    _ => undecided.push((i, j)),
                }
            }
        }
        for &(i, j) in &in_pairs {
            if find(&mut parent, i) == find(&mut parent, j) {
                return Err(());
            }
        }
        let mut changed = false;
        for &(i, j) in &undecided {
            if find(&mut parent, i) == find(&mut parent, j) {
                match self.set_pair(self.color[colored[i]], self.color[colored[j]], OUT) {
                    Ok(set) => changed |= set,
                    Err(()) => return Err(()),
                }
            }
        }
        let full = d == self.incident[x].len();
        let mut roots: Vec<usize> = (0..d).map(|i| find(&mut parent, i)).collect();
        roots.sort_unstable();
        roots.dedup();
        let classes = roots.len();
        if full && classes < k {
            return Err(()); // classes only merge from here on
        }
        if full && undecided.iter().all(|&(i, j)| find(&mut parent, i) == find(&mut parent, j)) {
            // relation fully determined
            if classes != k {
                return Err(());
            }
        }
        // pairwise-distinct classes force at least a clique's worth of parts
        if classes <= 16 {
            let mut adj = vec![0u32; classes];
            for &(i, j) in &in_pairs {
                let a = roots.binary_search(&find(&mut parent, i)).unwrap();
                let b = roots.binary_search(&find(&mut parent, j)).unwrap();
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
            if max_clique(&adj) > k {
                return Err(());
            }
        }
        Ok(changed)
    }

    fn edge_phase(&mut self, next: usize, max_used: u8) -> Step {
        if next == self.edges.len() {
            return self.h_phase();
        }
        let limit = (max_used as usize + 2).min(self.m);
        for c in 0..limit as u8 {
            if self.nodes >= self.budget {
                return Step::Budget;
            }
            self.nodes += 1;
            self.depth += 1;
            self.color[next] = c;
            let mark = self.trail.len();
            if self.propagate() {
                match self.edge_phase(next + 1, max_used.max(c)) {
                    Step::Found => return Step::Found,
                    Step::Budget => return Step::Budget,
                    Step::Pruned => {}
                }
            }
            self.undo(mark);
            self.color[next] = UNCOLORED;
            self.depth -= 1;
        }
        Step::Pruned
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let idx = self.trail.pop().unwrap();
            self.hstate[idx as usize] = UNKNOWN;
        }
    }

    /// First undecided color pair that meets at some vertex; only those
    /// can influence a transition or a partition.
    fn relevant_unknown_pair(&self) -> Option<(u8, u8)> {
        let mut best: Option<(u8, u8)> = None;
        for x in 0..self.n {
            let inc = &self.incident[x];
            for i in 0..inc.len() {
                for j in (i + 1)..inc.len() {
                    let (a, b) = (self.color[inc[i]], self.color[inc[j]]);
                    let (a, b) = if a <= b { (a, b) } else { (b, a) };
                    if self.hstate[pair_index(a, b)] == UNKNOWN
                        && best.is_none_or(|p| (a, b) < p)
                    {
                        best = Some((a, b));
                    }
                }
            }
        }
        best
    }

    fn h_phase(&mut self) -> Step {
        let Some((a, b)) = self.relevant_unknown_pair() else {
            return if self.final_check() { Step::Found } else { Step::Pruned };
        };
        for val in [IN, OUT] {
            if self.nodes >= self.budget {
                return Step::Budget;
            }
            self.nodes += 1;
            self.depth += 1;
            let mark = self.trail.len();
            if self.set_pair(a, b, val).is_ok() && self.propagate() {
                match self.h_phase() {
                    Step::Found => return Step::Found,
                    Step::Budget => return Step::Budget,
                    Step::Pruned => {}
                }
            }
            self.undo(mark);
            self.depth -= 1;
        }
        Step::Pruned
    }

    #[inline]
    fn allowed(&self, e: usize, f: usize) -> bool {
        self.hstate[pair_index(self.color[e], self.color[f])] == IN
    }

    /// Exact evaluation of every constraint once all edges are colored
    /// and all relevant pairs are decided.
    fn final_check(&self) -> bool {
        for r in &self.transition_reqs {
            if self.allowed(r.pred, r.succ) != r.need_in {
                return false;
            }
        }
        for &(x, k) in &self.part_reqs {
            if self.final_part_count(x) != Some(k) {
                return false;
            }
        }
        for &(v, len) in &self.absence {
            if self.some_clean_cycle_through(v, len) {
                return false;
            }
        }
        true
    }

    fn final_part_count(&self, x: Vertex) -> Option<usize> {
        let inc = &self.incident[x];
        let d = inc.len();
        if d == 0 {
            return None;
        }
        let mut parent: Vec<usize> = (0..d).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for i in 0..d {
            for j in (i + 1)..d {
                if !self.allowed(inc[i], inc[j]) {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    parent[ri] = rj;
                }
            }
        }
        // reject intransitive relations outright
        for i in 0..d {
            for j in (i + 1)..d {
                if self.allowed(inc[i], inc[j]) && find(&mut parent, i) == find(&mut parent, j) {
                    return None;
                }
            }
        }
        let mut roots: Vec<usize> = (0..d).map(|i| find(&mut parent, i)).collect();
        roots.sort_unstable();
        roots.dedup();
        Some(roots.len())
    }

    fn some_clean_cycle_through(&self, v: Vertex, length: usize) -> bool {
        let mut path = vec![v];
        let mut used: u64 = 1 << v;
        self.extend_clean(&mut path, &mut used, length)
    }

    fn extend_clean(&self, path: &mut Vec<Vertex>, used: &mut u64, length: usize) -> bool {
        let depth = path.len();
        let last = path[depth - 1];
        if depth == length {
            let first = path[0];
            if path[1] > path[length - 1] {
                return false;
            }
            let e_last = self.edge_of(last, first);
            let before = self.edge_of(path[depth - 2], last);
            let e_first = self.edge_of(first, path[1]);
            return self.hstate[pair_index(self.color[before], self.color[e_last])] == IN
                && self.hstate[pair_index(self.color[e_last], self.color[e_first])] == IN;
        }
        for next in 0..self.n {
            if *used & (1 << next) != 0 {
                continue;
            }
            if depth >= 2 {
                let before = self.edge_of(path[depth - 2], last);
                let here = self.edge_of(last, next);
                if self.hstate[pair_index(self.color[before], self.color[here])] != IN {
                    continue;
                }
            }
            path.push(next);
            *used |= 1 << next;
            if self.extend_clean(path, used, length) {
                return true;
            }
            *used &= !(1 << next);
            path.pop();
        }
        false
    }

    fn edge_of(&self, u: Vertex, v: Vertex) -> usize {
        let (u, v) = crate::model::ordered(u, v);
        self.edges.binary_search(&(u, v)).expect("complete edge list")
    }

    fn extract(&self) -> Result<HColoredGraph> {
        let g = SimpleGraph::complete(self.n)?;
        let mut h = PatternGraph::new(self.m)?;
        for a in 0..self.m as u8 {
            for b in a..self.m as u8 {
                if self.hstate[pair_index(a, b)] == IN {
                    h.add_pair(a as usize, b as usize)?;
                }
            }
        }
        let entries: Vec<(Vertex, Vertex, usize)> = self
            .edges
            .iter()
            .zip(&self.color)
            .map(|(&(u, v), &c)| (u, v, c as usize))
            .collect();
        Ok(HColoredGraph::from_parts(g, h, entries))
    }
}

/// Exact maximum clique on a small adjacency-bitset graph.
fn max_clique(adj: &[u32]) -> usize {
    fn extend(adj: &[u32], current: usize, candidates: u32, best: &mut usize) {
        *best = (*best).max(current);
        if current + candidates.count_ones() as usize <= *best {
            return;
        }
        let mut c = candidates;
        while c != 0 {
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            extend(adj, current + 1, c & adj[v], best);
        }
    }
    let mut best = 0;
    extend(adj, 0, (1u32 << adj.len()) - 1, &mut best);
    best
}
