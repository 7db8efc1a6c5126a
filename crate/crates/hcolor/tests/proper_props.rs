//! Properly colored specialization: the lifted pattern agrees with direct
//! color-inequality scans, the two forbidden obstruction counts never
//! occur, and pc-cycle-free graphs always expose a separating vertex.

mod common;

use hcolor::model::{SimpleGraph, Walk};
use hcolor::proper::{
    color_degree, has_pc_cycle, lift_to_h, verify_corollary, yeo_qualifies, yeo_vertex,
    EdgeColoredGraph,
};
use hcolor::walks::{cycles_with_obstruction_count, obstructions};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_ecg(n: usize, colors: usize, rng: &mut ChaCha8Rng) -> EdgeColoredGraph {
    let g = SimpleGraph::complete(n).unwrap();
    let entries: Vec<_> =
        g.edges().iter().map(|&(u, v)| (u, v, rng.random_range(0..colors))).collect();
    EdgeColoredGraph::new(g, colors, &entries).unwrap()
}

/// Properly colored if and only if obstruction-free, on random walks
/// through lifted instances (open and closed, repeats allowed).
#[test]
fn properly_colored_iff_no_obstructions() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..400 {
        let n = rng.random_range(3..=8);
        let colors = rng.random_range(1..=4);
        let ecg = random_ecg(n, colors, &mut rng);
        let inst = lift_to_h(&ecg);

        // random walk following edges of the complete graph
        let len = rng.random_range(2..=6);
        let mut vs = vec![rng.random_range(0..n)];
        while vs.len() < len {
            let last = *vs.last().unwrap();
            let next = rng.random_range(0..n);
            if next != last {
                vs.push(next);
            }
        }
        let closed = vs.len() >= 2 && vs[0] != *vs.last().unwrap() && rng.random_range(0..2) == 0;
        let walk = if closed { Walk::closed(vs.clone()) } else { Walk::open(vs.clone()) };

        // direct consecutive-color-inequality scan
        let k = vs.len();
        let proper = if closed {
            (0..k).all(|i| {
                ecg.color_of(vs[i], vs[(i + 1) % k]) != ecg.color_of(vs[(i + 1) % k], vs[(i + 2) % k])
            })
        } else {
            (0..k.saturating_sub(2)).all(|i| {
                ecg.color_of(vs[i], vs[i + 1]) != ecg.color_of(vs[i + 1], vs[i + 2])
            })
        };
        let no_obstructions = obstructions(&inst, &walk).unwrap().is_empty();
        assert_eq!(proper, no_obstructions, "walk {vs:?} closed {closed}");
    }
}

/// No 3-cycle with exactly two obstructions and no 4-cycle with exactly
/// three, over random lifted instances.
#[test]
fn forbidden_obstruction_counts_never_occur() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..500 {
        let n = rng.random_range(3..=8);
        let colors = rng.random_range(1..=5);
        let inst = lift_to_h(&random_ecg(n, colors, &mut rng));
        assert!(cycles_with_obstruction_count(&inst, 3, 2).unwrap().is_empty());
        assert!(cycles_with_obstruction_count(&inst, 4, 3).unwrap().is_empty());
    }
}

/// Exhaustive over connected graphs of order up to 4 with every
/// 2-coloring: no properly colored cycle forces a separating vertex.
/// Wider orders run in the acceptance suite.
#[test]
fn pc_cycle_free_graphs_have_separating_vertex() {
    for n in 3..=4usize {
        let slots: Vec<(usize, usize)> =
            (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
        let m = slots.len();
        // each slot: absent / color 0 / color 1
        let mut state = vec![0u8; m];
        loop {
            let edges: Vec<(usize, usize)> = slots
                .iter()
                .zip(&state)
                .filter(|(_, &s)| s > 0)
                .map(|(&e, _)| e)
                .collect();
            if let Ok(g) = SimpleGraph::from_edges(n, &edges) {
                let connected = {
                    let mut seen = 1u64;
                    let mut stack = vec![0usize];
                    while let Some(v) = stack.pop() {
                        for u in g.neighbors(v) {
                            if seen & (1 << u) == 0 {
                                seen |= 1 << u;
                                stack.push(u);
                            }
                        }
                    }
                    seen.count_ones() as usize == n
                };
                if connected {
                    let entries: Vec<_> = slots
                        .iter()
                        .zip(&state)
                        .filter(|(_, &s)| s > 0)
                        .map(|(&(u, v), &s)| (u, v, (s - 1) as usize))
                        .collect();
                    let ecg = EdgeColoredGraph::new(g, 2, &entries).unwrap();
                    if ecg.used_colors() >= 2 && !has_pc_cycle(&ecg).unwrap() {
                        let z = yeo_vertex(&ecg).unwrap();
                        assert!(z.is_some(), "no separating vertex: {entries:?}");
                        assert!(yeo_qualifies(&ecg, z.unwrap()).unwrap());
                    }
                }
            }
            // next ternary state
            let mut i = 0;
            while i < m && state[i] == 2 {
                state[i] = 0;
                i += 1;
            }
            if i == m {
                break;
            }
            state[i] += 1;
        }
    }
}

/// Seven colors on K7 with color degree at least 4 everywhere puts every
/// vertex on a properly colored triangle.
#[test]
fn high_color_degree_guarantees_triangles() {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    let mut found = 0;
    while found < 60 {
        let ecg = random_ecg(7, 7, &mut rng);
        if (0..7).any(|x| 2 * color_degree(&ecg, x).unwrap() < 8) {
            continue;
        }
        found += 1;
        let verdict = verify_corollary(&ecg, 3).unwrap();
        assert!(verdict.hypotheses_hold);
        assert!(verdict.theorem.unwrap().conclusion_holds);
    }
}
