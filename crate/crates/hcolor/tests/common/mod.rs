#![allow(dead_code)] // each test binary uses a different subset

//! Shared helpers for the integration suites: seeded random patterns and
//! instances, and direct color-transition checks that bypass the walk
//! machinery under test.

use hcolor::factory::random_instance;
use hcolor::model::{Color, HColoredGraph, PatternGraph, Vertex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A pattern on `colors` colors with every pair (loops included) present
/// independently with probability 1/2.
pub fn random_pattern(colors: usize, rng: &mut ChaCha8Rng) -> PatternGraph {
    let mut h = PatternGraph::new(colors).unwrap();
    for a in 0..colors {
        for b in a..colors {
            if rng.random_range(0..2u8) == 0 {
                h.add_pair(a, b).unwrap();
            }
        }
    }
    h
}

/// A random complete instance: order in 3..=9, palette in 1..=5, pattern
/// and coloring drawn from the seed.
pub fn random_h_instance(seed: u64) -> HColoredGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(3..=9);
    let colors = rng.random_range(1..=5);
    let h = random_pattern(colors, &mut rng);
    random_instance(n, &h, rng.random::<u64>()).unwrap()
}

/// Direct transition check from raw colors, independent of the walk and
/// local-structure modules.
pub fn raw_transition(inst: &HColoredGraph, a: Vertex, b: Vertex, c: Vertex) -> bool {
    let c1 = inst.color_of(a, b).expect("edge colored");
    let c2 = inst.color_of(b, c).expect("edge colored");
    inst.pattern().allows(c1, c2)
}

/// Obstruction vertex set of a closed vertex sequence, computed directly
/// from colors.
pub fn raw_cycle_obstructions(inst: &HColoredGraph, cycle: &[Vertex]) -> Vec<Vertex> {
    let k = cycle.len();
    let mut out = Vec::new();
    for i in 0..k {
        if !raw_transition(inst, cycle[(i + k - 1) % k], cycle[i], cycle[(i + 1) % k]) {
            out.push(cycle[i]);
        }
    }
    out.sort_unstable();
    out
}

/// All color entries of an instance, for rebuilding induced subgraphs.
pub fn color_entries(inst: &HColoredGraph) -> Vec<(Vertex, Vertex, Color)> {
    inst.coloring().entries().to_vec()
}
