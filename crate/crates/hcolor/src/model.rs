//! Shared data model: simple graphs, pattern graphs with loops, colorings
//! and walks.
//!
//! Vertices and colors are dense indices `0..n`. Adjacency is kept in
//! 64-bit masks, which caps orders and palettes at 64 — far beyond the
//! desk scale everything here runs at.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Vertex of the underlying graph.
pub type Vertex = usize;
/// Color, i.e. a vertex of the pattern graph.
pub type Color = usize;

/// Maximum supported order and palette size.
pub const MAX_VERTICES: usize = 64;

const NO_COLOR: u32 = u32::MAX;

/// Normalizes an unordered pair to ascending order.
#[inline]
pub fn ordered(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

// ---------------------------------------------------------------------------
// SimpleGraph
// ---------------------------------------------------------------------------

/// A finite simple graph on vertices `0..n`: no loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
    edges: Vec<(Vertex, Vertex)>,
}

impl SimpleGraph {
    /// An edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(SimpleGraph { n, adj: vec![0; n], edges: Vec::new() })
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        let mut g = SimpleGraph::new(n)?;
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    /// Builds a graph from an edge list.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = SimpleGraph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(())
    }

    /// Inserts the edge `{u, v}`. Rejects loops and duplicates.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::LoopEdge { u, v });
        }
        let e = ordered(u, v);
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge { u: e.0, v: e.1 });
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        let pos = self.edges.partition_point(|&x| x < e);
        self.edges.insert(pos, e);
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as ascending pairs, in lexicographic order.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && u != v && self.adj[u] & (1 << v) != 0
    }

    /// Neighborhood of `v` as a bit mask.
    #[inline]
    pub fn neighbors_mask(&self, v: Vertex) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        let mask = self.adj[v];
        (0..self.n).filter(move |u| mask & (1 << u) != 0)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn is_isolated(&self, v: Vertex) -> bool {
        self.adj[v] == 0
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }
}

// ---------------------------------------------------------------------------
// PatternGraph
// ---------------------------------------------------------------------------

/// The pattern graph `H` on colors `0..colors`; loops are permitted and
/// stored in the same adjacency as ordinary edges, normalized as `(c, c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternGraph {
    colors: usize,
    adj: Vec<u64>,
}

impl PatternGraph {
    /// A pattern with `colors` colors and no adjacencies.
    pub fn new(colors: usize) -> Result<Self> {
        if colors > MAX_VERTICES {
            return Err(Error::TooManyColors { colors, max: MAX_VERTICES });
        }
        Ok(PatternGraph { colors, adj: vec![0; colors] })
    }

    /// The complete loopless pattern: every transition between *distinct*
    /// colors is legal. This is the properly-colored specialization.
    pub fn complete_loopless(colors: usize) -> Result<Self> {
        let mut h = PatternGraph::new(colors)?;
        for a in 0..colors {
            for b in (a + 1)..colors {
                h.add_pair(a, b)?;
            }
        }
        Ok(h)
    }

    pub fn from_pairs(colors: usize, pairs: &[(Color, Color)]) -> Result<Self> {
        let mut h = PatternGraph::new(colors)?;
        for &(a, b) in pairs {
            h.add_pair(a, b)?;
        }
        Ok(h)
    }

    fn check_color(&self, c: Color) -> Result<()> {
        if c >= self.colors {
            return Err(Error::UnknownColor { color: c, colors: self.colors });
        }
        Ok(())
    }

    /// Declares the pair `{a, b}` adjacent; `a == b` declares a loop.
    /// Idempotent.
    pub fn add_pair(&mut self, a: Color, b: Color) -> Result<()> {
        self.check_color(a)?;
        self.check_color(b)?;
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
        Ok(())
    }

    pub fn color_count(&self) -> usize {
        self.colors
    }

    pub fn has_color(&self, c: Color) -> bool {
        c < self.colors
    }

    /// Whether the transition between colors `a` and `b` is legal,
    /// including the loop case `a == b`. Both colors must be in range.
    #[inline]
    pub fn allows(&self, a: Color, b: Color) -> bool {
        debug_assert!(a < self.colors && b < self.colors);
        self.adj[a] & (1 << b) != 0
    }

    /// All adjacent pairs in ascending normalized order, loops as `(c, c)`.
    pub fn pairs(&self) -> Vec<(Color, Color)> {
        let mut out = Vec::new();
        for a in 0..self.colors {
            for b in a..self.colors {
                if self.adj[a] & (1 << b) != 0 {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

/// Whether the unordered color pair `{c1, c2}` (the loop `(c, c)` when
/// equal) is an adjacency of `h`. Unknown colors are a domain error.
pub fn transition_allowed(h: &PatternGraph, c1: Color, c2: Color) -> Result<bool> {
    h.check_color(c1)?;
    h.check_color(c2)?;
    Ok(h.allows(c1, c2))
}

// ---------------------------------------------------------------------------
// HColoring / HColoredGraph
// ---------------------------------------------------------------------------

/// A raw edge-to-color assignment. Entries are normalized to ascending
/// endpoint order and sorted; duplicates are retained so that validation
/// can report them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HColoring {
    entries: Vec<(Vertex, Vertex, Color)>,
}

impl HColoring {
    pub fn from_entries(entries: impl IntoIterator<Item = (Vertex, Vertex, Color)>) -> Self {
        let mut entries: Vec<_> = entries
            .into_iter()
            .map(|(u, v, c)| {
                let (u, v) = ordered(u, v);
                (u, v, c)
            })
            .collect();
        entries.sort_unstable();
        HColoring { entries }
    }

    pub fn entries(&self) -> &[(Vertex, Vertex, Color)] {
        &self.entries
    }
}

/// A graph together with a pattern and an edge coloring.
///
/// Construction is unchecked so that [`validate_instance`] can report
/// violations as data; every value is immutable afterwards and safe to
/// share across workers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HColoredGraph {
    g: SimpleGraph,
    h: PatternGraph,
    coloring: HColoring,
    lut: Vec<u32>,
}

impl HColoredGraph {
    pub fn new(g: SimpleGraph, h: PatternGraph, coloring: HColoring) -> Self {
        let n = g.order();
        let mut lut = vec![NO_COLOR; n * n];
        for &(u, v, c) in coloring.entries() {
            if g.has_edge(u, v) && c < u32::MAX as usize {
                lut[u * n + v] = c as u32;
                lut[v * n + u] = c as u32;
            }
        }
        HColoredGraph { g, h, coloring, lut }
    }

    /// Convenience constructor from raw parts.
    pub fn from_parts(
        g: SimpleGraph,
        h: PatternGraph,
        entries: impl IntoIterator<Item = (Vertex, Vertex, Color)>,
    ) -> Self {
        HColoredGraph::new(g, h, HColoring::from_entries(entries))
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.g
    }

    pub fn pattern(&self) -> &PatternGraph {
        &self.h
    }

    pub fn coloring(&self) -> &HColoring {
        &self.coloring
    }

    pub fn order(&self) -> usize {
        self.g.order()
    }

    /// The color of edge `{u, v}`, if that edge exists and is colored.
    #[inline]
    pub fn color_of(&self, u: Vertex, v: Vertex) -> Option<Color> {
        let n = self.g.order();
        if u >= n || v >= n {
            return None;
        }
        match self.lut[u * n + v] {
            NO_COLOR => None,
            c => Some(c as usize),
        }
    }

    /// The color of edge `{u, v}`, or a domain error when missing.
    #[inline]
    pub fn edge_color(&self, u: Vertex, v: Vertex) -> Result<Color> {
        if !self.g.has_edge(u, v) {
            let (u, v) = ordered(u, v);
            return Err(Error::MissingEdge { u, v });
        }
        self.color_of(u, v).ok_or_else(|| {
            let (u, v) = ordered(u, v);
            Error::MissingEdgeColor { u, v }
        })
    }

    /// Whether the transition through `b` along edges `{a, b}`, `{b, c}`
    /// is legal. Errors on missing edges, colors, or out-of-palette colors.
    pub fn transition_through(&self, a: Vertex, b: Vertex, c: Vertex) -> Result<bool> {
        let c1 = self.edge_color(a, b)?;
        let c2 = self.edge_color(b, c)?;
        transition_allowed(&self.h, c1, c2)
    }
}

// ---------------------------------------------------------------------------
// Walks
// ---------------------------------------------------------------------------

/// A vertex sequence, open or closed. Closed walks do not repeat the
/// starting vertex at the end; the wrap-around edge is implicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Walk {
    vertices: Vec<Vertex>,
    closed: bool,
}

impl Walk {
    pub fn open(vertices: Vec<Vertex>) -> Self {
        Walk { vertices, closed: false }
    }

    pub fn closed(vertices: Vec<Vertex>) -> Self {
        Walk { vertices, closed: true }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    /// Number of edges traversed.
    pub fn edge_count(&self) -> usize {
        if self.closed {
            self.vertices.len()
        } else {
            self.vertices.len().saturating_sub(1)
        }
    }

    /// Checks that every consecutive pair (and the wrap-around pair when
    /// closed) is an edge of `g`. Returns the first failing position.
    pub fn check_in(&self, g: &SimpleGraph) -> Result<()> {
        if self.vertices.is_empty() {
            return Err(Error::NotAWalk { position: 0 });
        }
        for (i, &v) in self.vertices.iter().enumerate() {
            if v >= g.order() {
                return Err(Error::VertexOutOfRange { vertex: v, n: g.order() });
            }
            if i + 1 < self.vertices.len() && !g.has_edge(v, self.vertices[i + 1]) {
                return Err(Error::NotAWalk { position: i + 1 });
            }
        }
        if self.closed {
            let last = *self.vertices.last().unwrap();
            let first = self.vertices[0];
            if self.vertices.len() < 2 || !g.has_edge(last, first) {
                return Err(Error::NotAWalk { position: self.vertices.len() });
            }
        }
        Ok(())
    }

    fn all_distinct(&self) -> bool {
        let mut seen: u64 = 0;
        for &v in &self.vertices {
            if v >= MAX_VERTICES || seen & (1 << v) != 0 {
                return false;
            }
            seen |= 1 << v;
        }
        true
    }

    /// An open walk with pairwise distinct vertices.
    pub fn is_path_in(&self, g: &SimpleGraph) -> bool {
        !self.closed && self.check_in(g).is_ok() && self.all_distinct()
    }

    /// A closed walk of length at least 3 with pairwise distinct vertices.
    pub fn is_cycle_in(&self, g: &SimpleGraph) -> bool {
        self.closed && self.vertices.len() >= 3 && self.check_in(g).is_ok() && self.all_distinct()
    }
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

/// One structural defect of an instance. Violations are data, not errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// An edge of the graph carries no color.
    MissingEdgeColor { u: Vertex, v: Vertex },
    /// An assigned color is not a vertex of the pattern.
    UnknownColor { u: Vertex, v: Vertex, color: Color },
    /// A coloring entry references a pair that is not an edge.
    NotAnEdge { u: Vertex, v: Vertex },
    /// A coloring entry references a vertex outside `0..n`.
    EndpointOutOfRange { u: Vertex, v: Vertex },
    /// The same edge is colored more than once.
    DuplicateEntry { u: Vertex, v: Vertex },
}

impl Violation {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Violation::MissingEdgeColor { .. } => "missing_edge_color",
            Violation::UnknownColor { .. } => "unknown_color",
            Violation::NotAnEdge { .. } => "not_an_edge",
            Violation::EndpointOutOfRange { .. } => "endpoint_out_of_range",
            Violation::DuplicateEntry { .. } => "duplicate_entry",
        }
    }
}

/// Checks every type invariant of an instance and returns one entry per
/// violation; an empty list means the instance is well-formed.
pub fn validate_instance(inst: &HColoredGraph) -> Vec<Violation> {
    let mut out = Vec::new();
    let g = inst.graph();
    let h = inst.pattern();
    let n = g.order();

    let entries = inst.coloring().entries();
    for (i, &(u, v, c)) in entries.iter().enumerate() {
        if u >= n || v >= n {
            out.push(Violation::EndpointOutOfRange { u, v });
            continue;
        }
        if !g.has_edge(u, v) {
            out.push(Violation::NotAnEdge { u, v });
            continue;
        }
        if i > 0 && entries[i - 1].0 == u && entries[i - 1].1 == v {
            out.push(Violation::DuplicateEntry { u, v });
        }
        if !h.has_color(c) {
            out.push(Violation::UnknownColor { u, v, color: c });
        }
    }
    for &(u, v) in g.edges() {
        if inst.color_of(u, v).is_none() {
            out.push(Violation::MissingEdgeColor { u, v });
        }
    }
    out
}
