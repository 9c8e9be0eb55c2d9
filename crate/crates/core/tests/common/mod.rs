//! Shared helpers for the integration suites: a tiny deterministic rng
//! and random graph generation.
#![allow(dead_code)] // each integration test compiles its own copy

use factorlab_core::Graph;

/// splitmix64; deterministic across platforms, good enough for test
/// corpora.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in 0..bound.
    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }

    /// True with probability pct/100.
    pub fn chance(&mut self, pct: u64) -> bool {
        self.next_u64() % 100 < pct
    }
}

/// Random graph on `n` vertices with edge probability `pct`/100.
pub fn random_graph(rng: &mut Rng, n: usize, pct: u64) -> Graph {
    let mut g = Graph::new(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.chance(pct) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}
