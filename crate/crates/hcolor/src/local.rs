//! Local structure at a vertex: the auxiliary graph on its incident edges
//! and the complete-multipartite partition of that graph.
//!
//! For a non-isolated vertex `x`, the auxiliary graph has one vertex per
//! edge incident with `x` (identified with the opposite endpoint, which is
//! unambiguous in a simple graph) and joins two of them when their colors
//! are adjacent in the pattern. Two incident edges lie in the same part of
//! the partition exactly when their transition is illegal, so the parts
//! are the connected components of the complement — provided that
//! complement is a disjoint union of cliques.

use alloc::vec::Vec;

use crate::model::{HColoredGraph, Vertex};
use crate::{Error, Result};

/// The auxiliary graph at a vertex. Vertices are the incident edges,
/// listed by ascending opposite endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxiliaryGraph {
    pub x: Vertex,
    pub opposite: Vec<Vertex>,
    adj: Vec<u64>,
}

impl AuxiliaryGraph {
    pub fn order(&self) -> usize {
        self.opposite.len()
    }

    /// Adjacency between the `i`-th and `j`-th incident edges.
    #[inline]
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.adj[i] & (1 << j) != 0
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }
}

/// Builds the auxiliary graph at `x`: incident edges joined when their
/// colors are adjacent in the pattern (loops in the pattern make equal
/// colors adjacent). The result is always simple. `x` must not be
/// isolated, and every incident edge must carry an in-palette color.
pub fn auxiliary_graph(inst: &HColoredGraph, x: Vertex) -> Result<AuxiliaryGraph> {
    let g = inst.graph();
    if x >= g.order() {
        return Err(Error::VertexOutOfRange { vertex: x, n: g.order() });
    }
    if g.is_isolated(x) {
        return Err(Error::IsolatedVertex { vertex: x });
    }
    let opposite: Vec<Vertex> = g.neighbors(x).collect();
    let h = inst.pattern();
    let mut colors = Vec::with_capacity(opposite.len());
    for &u in &opposite {
        let c = inst.edge_color(x, u)?;
        if !h.has_color(c) {
            return Err(Error::UnknownColor { color: c, colors: h.color_count() });
        }
        colors.push(c);
    }
    let mut adj = alloc::vec![0u64; opposite.len()];
    for i in 0..opposite.len() {
        for j in (i + 1)..opposite.len() {
            if h.allows(colors[i], colors[j]) {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    Ok(AuxiliaryGraph { x, opposite, adj })
}

/// The complete-multipartite partition of the auxiliary graph at `x`.
///
/// Parts hold opposite endpoints, each part ascending; parts are ordered
/// by their smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalPartition {
    pub x: Vertex,
    pub parts: Vec<Vec<Vertex>>,
}

impl LocalPartition {
    /// Number of parts.
    pub fn k(&self) -> usize {
        self.parts.len()
    }

    /// Index of the part containing the edge toward `opposite`.
    pub fn part_of(&self, opposite: Vertex) -> Option<usize> {
        self.parts.iter().position(|p| p.binary_search(&opposite).is_ok())
    }

    /// Whether the edges toward `a` and `b` lie in the same part.
    pub fn same_part(&self, a: Vertex, b: Vertex) -> bool {
        match (self.part_of(a), self.part_of(b)) {
            (Some(i), Some(j)) => i == j,
            _ => false,
        }
    }
}

/// Partitions the auxiliary graph at `x` into its complete-multipartite
/// parts, or fails with a witness when no such partition exists.
///
/// The parts are the connected components of the complement when each
/// component is a clique there. Otherwise the complement contains an
/// induced path on three incident edges `e, f, g` — `{e,f}` and `{f,g}`
/// non-adjacent but `{e,g}` adjacent in the auxiliary graph — and the
/// lexicographically first such triple is reported.
pub fn local_partition(inst: &HColoredGraph, x: Vertex) -> Result<LocalPartition> {
    let aux = auxiliary_graph(inst, x)?;
    partition_auxiliary(&aux)
}

/// Partition step on an already-built auxiliary graph.
pub fn partition_auxiliary(aux: &AuxiliaryGraph) -> Result<LocalPartition> {
    let d = aux.order();
    // components of the complement via union-find
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
            if !aux.adjacent(i, j) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri] = rj;
            }
        }
    }
    // clique check per component: same component + adjacent => violation
    let mut bad = false;
    'scan: for i in 0..d {
        for j in (i + 1)..d {
            if aux.adjacent(i, j) && find(&mut parent, i) == find(&mut parent, j) {
                bad = true;
                break 'scan;
            }
        }
    }
    if bad {
        // lexicographically first (e, f, g) with e-f and f-g complement
        // edges and e-g an auxiliary edge; guaranteed to exist here
        for e in 0..d {
            for f in 0..d {
                if f == e || aux.adjacent(e, f) {
                    continue;
                }
                for g in (e + 1)..d {
                    if g == f || aux.adjacent(f, g) || !aux.adjacent(e, g) {
                        continue;
                    }
                    return Err(Error::NotMultipartite {
                        x: aux.x,
                        witness: [aux.opposite[e], aux.opposite[f], aux.opposite[g]],
                    });
                }
            }
        }
        unreachable!("complement is not a cluster graph yet has no induced path witness");
    }
    let mut parts: Vec<Vec<Vertex>> = Vec::new();
    let mut roots: Vec<usize> = Vec::new();
    for i in 0..d {
        let r = find(&mut parent, i);
        match roots.iter().position(|&q| q == r) {
            Some(p) => parts[p].push(aux.opposite[i]),
            None => {
                roots.push(r);
                parts.push(alloc::vec![aux.opposite[i]]);
            }
        }
    }
    // `opposite` is ascending, so parts are born sorted and ordered by
    // smallest member
    Ok(LocalPartition { x: aux.x, parts })
}

/// The part count of the partition at `x`.
pub fn part_count(inst: &HColoredGraph, x: Vertex) -> Result<usize> {
    Ok(local_partition(inst, x)?.k())
}

/// The part count of the partition restricted to the subgraph induced by
/// `subset`: the number of parts that still meet an edge of the induced
/// graph at `x`. Requires `x` in `subset` and non-isolated there.
pub fn induced_part_count(inst: &HColoredGraph, subset: &[Vertex], x: Vertex) -> Result<usize> {
    let g = inst.graph();
    let mut mask: u64 = 0;
    for &v in subset {
        if v >= g.order() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.order() });
        }
        mask |= 1 << v;
    }
    if mask & (1 << x) == 0 {
        return Err(Error::VertexNotInSet { vertex: x });
    }
    if g.neighbors_mask(x) & mask & !(1 << x) == 0 {
        return Err(Error::IsolatedInSubgraph { vertex: x });
    }
    let partition = local_partition(inst, x)?;
    Ok(partition
        .parts
        .iter()
        .filter(|part| part.iter().any(|&u| mask & (1 << u) != 0))
        .count())
}
