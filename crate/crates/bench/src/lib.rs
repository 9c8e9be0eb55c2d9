//! Shared fixtures for the benchmarks.

use factorlab_core::families::{build_family, FamilyId, Params};
use factorlab_core::graph::Graph;

pub fn h5(p: usize) -> Graph {
    build_family(FamilyId::H5, Params::p(p)).unwrap().graph
}

pub fn h12(p: usize) -> Graph {
    build_family(FamilyId::H12, Params::p(p)).unwrap().graph
}

pub fn h11() -> Graph {
    build_family(FamilyId::H11, Params::none()).unwrap().graph
}

/// Deterministic pseudo-random graph, dense enough to be interesting.
pub fn scrambled(n: usize, seed: u64) -> Graph {
    let mut state = seed;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let mut g = Graph::new(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if next() % 100 < 45 {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}
