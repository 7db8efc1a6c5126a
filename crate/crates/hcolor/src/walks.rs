//! Obstruction analysis and constrained walk/cycle recognition and search.
//!
//! An interior vertex of an open walk (any vertex of a closed walk, taken
//! cyclically) is an obstruction when the colors of its two incident walk
//! edges are not adjacent in the pattern. A path or cycle is an `H`-path
//! or `H`-cycle exactly when it has no obstructions.

use alloc::vec::Vec;

use crate::model::{HColoredGraph, Vertex, Walk};
use crate::{Error, Result};

/// A closed walk together with its obstruction positions (indices into the
/// vertex sequence, ascending). Empty obstructions means the cycle is an
/// `H`-cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleReport {
    pub walk: Walk,
    pub obstructions: Vec<usize>,
}

impl CycleReport {
    /// Obstructions as vertices rather than positions.
    pub fn obstruction_vertices(&self) -> Vec<Vertex> {
        let vs = self.walk.vertices();
        let mut out: Vec<Vertex> = self.obstructions.iter().map(|&i| vs[i]).collect();
        out.sort_unstable();
        out
    }
}

/// Positions of the walk whose two incident edge colors are not adjacent
/// in the pattern. For open walks only interior positions qualify; for
/// closed walks every position is examined cyclically. Open walks of a
/// single edge have no interior and report nothing.
pub fn obstructions(inst: &HColoredGraph, walk: &Walk) -> Result<Vec<usize>> {
    walk.check_in(inst.graph())?;
    let vs = walk.vertices();
    let m = vs.len();
    let mut out = Vec::new();
    if walk.is_closed() {
        for i in 0..m {
            let prev = vs[(i + m - 1) % m];
            let next = vs[(i + 1) % m];
            if !inst.transition_through(prev, vs[i], next)? {
                out.push(i);
            }
        }
    } else {
        for i in 1..m.saturating_sub(1) {
            if !inst.transition_through(vs[i - 1], vs[i], vs[i + 1])? {
                out.push(i);
            }
        }
    }
    Ok(out)
}

/// Whether an open path is an `H`-path: every interior transition legal.
pub fn is_h_path(inst: &HColoredGraph, walk: &Walk) -> Result<bool> {
    if !walk.is_path_in(inst.graph()) {
        return Err(Error::NotAPath);
    }
    Ok(obstructions(inst, walk)?.is_empty())
}

/// Whether a cycle is an `H`-cycle: every transition legal, including the
/// wrap-around pair.
pub fn is_h_cycle(inst: &HColoredGraph, walk: &Walk) -> Result<bool> {
    if !walk.is_cycle_in(inst.graph()) {
        return Err(Error::NotACycle);
    }
    Ok(obstructions(inst, walk)?.is_empty())
}

/// Searches for an `H`-cycle of exactly `length` through `v`.
///
/// Plain depth-first search over distinct-vertex sequences rooted at `v`,
/// pruning as soon as a transition fails. Rotations are avoided by fixing
/// `v` first and reflections by requiring the second vertex to be smaller
/// than the last. Returns the first cycle in that order, or `None`.
pub fn find_h_cycle_through(
    inst: &HColoredGraph,
    v: Vertex,
    length: usize,
) -> Result<Option<Walk>> {
    let g = inst.graph();
    let n = g.order();
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    if length < 3 || length > n {
        return Err(Error::LengthOutOfRange { length, min: 3, max: n });
    }

    struct Dfs<'a> {
        inst: &'a HColoredGraph,
        length: usize,
        path: Vec<Vertex>,
        used: u64,
    }

    impl Dfs<'_> {
        fn run(&mut self) -> Result<Option<Walk>> {
            let depth = self.path.len();
            let g = self.inst.graph();
            let last = *self.path.last().unwrap();
            if depth == self.length {
                let first = self.path[0];
                if !g.has_edge(last, first) {
                    return Ok(None);
                }
                // reflection break plus the two closing transitions
                if self.path[1] > self.path[self.length - 1] {
                    return Ok(None);
                }
                let before_last = self.path[depth - 2];
                if !self.inst.transition_through(before_last, last, first)? {
                    return Ok(None);
                }
                if !self.inst.transition_through(last, first, self.path[1])? {
                    return Ok(None);
                }
                return Ok(Some(Walk::closed(self.path.clone())));
            }
            for next in 0..g.order() {
                if self.used & (1 << next) != 0 || !g.has_edge(last, next) {
                    continue;
                }
                if depth >= 2 {
                    let before = self.path[depth - 2];
                    if !self.inst.transition_through(before, last, next)? {
                        continue;
                    }
                }
                self.path.push(next);
                self.used |= 1 << next;
                let found = self.run()?;
                self.used &= !(1 << next);
                self.path.pop();
                if found.is_some() {
                    return Ok(found);
                }
            }
            Ok(None)
        }
    }

    let mut dfs = Dfs { inst, length, path: alloc::vec![v], used: 1 << v };
    dfs.run()
}

/// Enumerates every cycle of the given length once, up to rotation and
/// reflection: the minimum vertex leads and the second vertex is smaller
/// than the last.
pub fn for_each_cycle<F>(g: &crate::model::SimpleGraph, length: usize, mut f: F) -> Result<()>
where
    F: FnMut(&[Vertex]) -> Result<()>,
{
    let n = g.order();
    if length < 3 {
        return Err(Error::LengthOutOfRange { length, min: 3, max: n });
    }
    if length > n {
        return Ok(()); // no cycles that long
    }
    let mut path: Vec<Vertex> = Vec::with_capacity(length);
    let mut used: u64 = 0;

    fn extend<F>(
        g: &crate::model::SimpleGraph,
        length: usize,
        path: &mut Vec<Vertex>,
        used: &mut u64,
        f: &mut F,
    ) -> Result<()>
    where
        F: FnMut(&[Vertex]) -> Result<()>,
    {
        let last = *path.last().unwrap();
        if path.len() == length {
            if g.has_edge(last, path[0]) && path[1] < path[length - 1] {
                f(path)?;
            }
            return Ok(());
        }
        let start = path[0];
        for next in (start + 1)..g.order() {
            if *used & (1 << next) != 0 || !g.has_edge(last, next) {
                continue;
            }
            path.push(next);
            *used |= 1 << next;
            extend(g, length, path, used, f)?;
            *used &= !(1 << next);
            path.pop();
        }
        Ok(())
    }

    for v0 in 0..n {
        path.push(v0);
        used |= 1 << v0;
        extend(g, length, &mut path, &mut used, &mut f)?;
        used &= !(1 << v0);
        path.pop();
    }
    Ok(())
}

/// All cycles of the given length (3 or 4), up to rotation and reflection,
/// whose obstruction count equals `count`, each with its report.
pub fn cycles_with_obstruction_count(
    inst: &HColoredGraph,
    length: usize,
    count: usize,
) -> Result<Vec<CycleReport>> {
    if length != 3 && length != 4 {
        return Err(Error::LengthOutOfRange { length, min: 3, max: 4 });
    }
    let mut out = Vec::new();
    if inst.order() < length {
        return Ok(out);
    }
    for_each_cycle(inst.graph(), length, |vs| {
        let walk = Walk::closed(vs.to_vec());
        let obs = obstructions(inst, &walk)?;
        if obs.len() == count {
            out.push(CycleReport { walk, obstructions: obs });
        }
        Ok(())
    })?;
    Ok(out)
}
