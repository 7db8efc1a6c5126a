//! Dependence-module oracles: the exhaustive tournament bound, arc
//! soundness of the orientation, subset monotonicity, and the witness
//! against an exhaustive scan with standalone-recomputed part counts.

mod common;

use common::color_entries;
use hcolor::dependence::{
    bounded_part_vertex, has_h_dependence, max_outdegree_vertex, orient_dependence, Tournament,
};
use hcolor::factory::bipartite_local_coloring;
use hcolor::local::local_partition;
use hcolor::model::{HColoredGraph, PatternGraph, SimpleGraph, Vertex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every orientation of every complete graph up to order 6 has a vertex
/// of out-degree at least (n-1)/2.
#[test]
fn tournament_outdegree_bound_exhaustive() {
    for n in 1..=6usize {
        let pairs = n * (n - 1) / 2;
        for bits in 0u64..(1 << pairs) {
            let t = Tournament::from_bits(n, bits).unwrap();
            let (_, d) = max_outdegree_vertex(&t).unwrap();
            assert!(2 * d >= n - 1, "n={n}, bits={bits:b}, max out-degree {d}");
        }
    }
}

#[test]
fn tournament_outdegree_bound_random_larger() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..2000 {
        let n = rng.random_range(7..=11); // 11 keeps the pair count in 64 bits
        let pairs = n * (n - 1) / 2;
        let bits: u64 = rng.random::<u64>() & (u64::MAX >> (64 - pairs));
        let t = Tournament::from_bits(n, bits).unwrap();
        let (_, d) = max_outdegree_vertex(&t).unwrap();
        assert!(2 * d >= n - 1);
    }
}

/// Instances whose local graphs are all complete multipartite and whose
/// dependent sets are reasonably common: two adjacent loopless colors.
fn bipartite_instance(n: usize, seed: u64) -> HColoredGraph {
    let g = SimpleGraph::complete(n).unwrap();
    let h = PatternGraph::from_pairs(2, &[(0, 1)]).unwrap();
    bipartite_local_coloring(&g, &h, seed).unwrap()
}

fn random_candidate(
    rng: &mut ChaCha8Rng,
) -> (HColoredGraph, Vec<Vertex>, Vertex) {
    let n = rng.random_range(4..=9);
    let inst = bipartite_instance(n, rng.random::<u64>());
    let mut vertices: Vec<Vertex> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        vertices.swap(i, j);
    }
    let v = vertices[0];
    let size = rng.random_range(2..=7.min(n - 1));
    let mut set: Vec<Vertex> = vertices[1..=size].to_vec();
    set.sort_unstable();
    (inst, set, v)
}

/// Every arc of the orientation certifies its obstruction: the source's
/// edge toward `v` and toward the target lie in the same part.
#[test]
fn orientation_arcs_are_sound() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut found = 0;
    while found < 300 {
        let (inst, set, v) = random_candidate(&mut rng);
        if !has_h_dependence(&inst, &set, v).unwrap() {
            continue;
        }
        found += 1;
        let t = orient_dependence(&inst, &set, v).unwrap();
        assert_eq!(t.arcs().len(), set.len() * (set.len() - 1) / 2);
        for &(x, y) in t.arcs() {
            let p = local_partition(&inst, x).unwrap();
            assert!(p.same_part(v, y), "arc ({x}, {y}) does not certify an obstruction");
        }
    }
}

/// Subsets of a dependent set stay dependent.
#[test]
fn dependence_is_monotone() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    let mut found = 0;
    while found < 120 {
        let (inst, set, v) = random_candidate(&mut rng);
        if set.len() > 6 || !has_h_dependence(&inst, &set, v).unwrap() {
            continue;
        }
        found += 1;
        for mask in 0u32..(1 << set.len()) {
            let subset: Vec<Vertex> = set
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &x)| x)
                .collect();
            assert!(has_h_dependence(&inst, &subset, v).unwrap());
        }
    }
}

/// Part count of the subgraph induced by `set` at `a`, computed on a
/// standalone rebuild of the induced instance.
fn standalone_induced_parts(inst: &HColoredGraph, set: &[Vertex], a: Vertex) -> usize {
    let relabel = |v: Vertex| set.iter().position(|&u| u == v).unwrap();
    let entries: Vec<_> = color_entries(inst)
        .into_iter()
        .filter(|&(u, v, _)| set.contains(&u) && set.contains(&v))
        .map(|(u, v, c)| (relabel(u), relabel(v), c))
        .collect();
    let g = SimpleGraph::complete(set.len()).unwrap();
    let induced = HColoredGraph::from_parts(g, inst.pattern().clone(), entries);
    local_partition(&induced, relabel(a)).unwrap().k()
}

/// Exhaustive witness scan: all vertices of the set that satisfy both
/// halves of the bound, partner existence checked by raw color queries.
fn witness_oracle(inst: &HColoredGraph, set: &[Vertex], v: Vertex) -> Vec<(Vertex, usize)> {
    let mut out = Vec::new();
    for &a in set {
        let parts = standalone_induced_parts(inst, set, a);
        if 2 * parts > set.len() + 1 {
            continue;
        }
        let partner = set.iter().any(|&b| {
            b != a && {
                let c1 = inst.color_of(v, a).unwrap();
                let c2 = inst.color_of(a, b).unwrap();
                !inst.pattern().allows(c1, c2)
            }
        });
        if set.len() < 2 || partner {
            out.push((a, parts));
        }
    }
    out
}

/// The extracted witness always passes both invariants and appears in the
/// exhaustive scan.
#[test]
fn witness_matches_exhaustive_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let mut found = 0;
    while found < 250 {
        let (inst, set, v) = random_candidate(&mut rng);
        if !has_h_dependence(&inst, &set, v).unwrap() {
            continue;
        }
        found += 1;
        let w = bounded_part_vertex(&inst, &set, v).unwrap();
        assert!(2 * w.bound <= set.len() + 1, "bound {} for |A| = {}", w.bound, set.len());
        assert_eq!(w.bound, standalone_induced_parts(&inst, &set, w.a));
        let partner = w.obstruction_partner.expect("set has at least two vertices");
        assert!(set.contains(&partner));
        // the certified obstruction, checked through the walk machinery
        let obs =
            hcolor::walks::obstructions(&inst, &hcolor::model::Walk::open(vec![v, w.a, partner]))
                .unwrap();
        assert_eq!(obs, vec![1]);

        let oracle = witness_oracle(&inst, &set, v);
        assert!(!oracle.is_empty());
        assert!(oracle.contains(&(w.a, w.bound)), "{w:?} not among {oracle:?}");
    }
}

#[test]
fn witness_base_case_two_vertices() {
    // c(v, x) = c(x, y): x obstructs the walk toward y
    let g = SimpleGraph::complete(3).unwrap();
    let h = PatternGraph::from_pairs(2, &[(0, 1)]).unwrap();
    let inst = HColoredGraph::from_parts(g, h, [(0, 1, 0), (0, 2, 1), (1, 2, 0)]);
    let w = bounded_part_vertex(&inst, &[1, 2], 0).unwrap();
    assert_eq!(w.a, 1);
    assert_eq!(w.bound, 1);
    assert_eq!(w.obstruction_partner, Some(2));
}

#[test]
fn witness_requires_multipartite_set_vertices() {
    let g = SimpleGraph::complete(4).unwrap();
    let mut h = PatternGraph::new(3).unwrap();
    h.add_pair(0, 2).unwrap();
    // intransitive same-part relation at vertex 1
    let inst = HColoredGraph::from_parts(
        g,
        h,
        [(0, 1, 0), (1, 2, 1), (1, 3, 2), (0, 2, 0), (0, 3, 0), (2, 3, 0)],
    );
    assert!(matches!(
        bounded_part_vertex(&inst, &[1, 2], 0),
        Err(hcolor::Error::NotMultipartite { x: 1, .. })
    ));
}
