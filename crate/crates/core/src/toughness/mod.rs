//! Exact toughness: min over cutsets S of |S| / c(G - S), computed with
//! rational arithmetic, plus toughset extraction and the structural check
//! that every toughset vertex sees at least two components.

pub mod rational;

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
pub use rational::Rational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ToughnessError {
    #[error("complete graphs have no cutsets")]
    CompleteGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("{0:?} is not a toughset of the graph")]
    NotAToughset(VertexSet),
}

/// Iterate all `k`-subsets of the low `n` bits in increasing mask order
/// (Gosper's hack).
fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut cur = if k == 0 {
        Some(0u64)
    } else if k > n {
        None
    } else {
        Some((1u64 << k) - 1)
    };
    std::iter::from_fn(move || {
        let out = cur?;
        if out > limit {
            cur = None;
            return None;
        }
        if k == 0 || out == 0 {
            cur = None;
        } else {
            let c = out & out.wrapping_neg();
            let r = out + c;
            if r > limit || c == 0 {
                cur = None;
            } else {
                cur = Some((((r ^ out) >> 2) / c) | r);
            }
        }
        Some(out)
    })
}

/// Exact toughness. Infinity for complete graphs (including the empty and
/// one-vertex graphs), 0 for disconnected graphs, otherwise the minimum of
/// |S| / c(G - S) over all cutsets, as a reduced rational.
///
/// Subsets are enumerated by increasing size; sizes whose best conceivable
/// ratio |S| / (n - |S|) already exceeds the current minimum are skipped.
pub fn toughness(g: &Graph) -> Rational {
    if g.is_complete() {
        return Rational::Infinity;
    }
    if !g.is_connected() {
        return Rational::ZERO;
    }
    let n = g.n();
    assert!(
        n <= 32,
        "cutset enumeration is exponential; refusing n > 32"
    );
    let mut best = Rational::Infinity;
    for size in 1..=n.saturating_sub(2) {
        // c(G - S) <= n - |S|, so |S| / (n - |S|) lower-bounds every ratio
        // at this size and beyond (it grows with |S|).
        if best.cmp_fraction(size as u64, (n - size) as u64).is_lt() {
            break;
        }
        for mask in k_subsets(n, size) {
            let c = g.component_count(VertexSet(mask));
            if c >= 2 {
                let ratio = Rational::new(size as u64, c as u64);
                if ratio < best {
                    best = ratio;
                }
            }
        }
    }
    best
}

/// Reference implementation: plain scan over every vertex subset with no
/// pruning and no early exit. Kept separate from [`toughness`] so the two
/// can be checked against each other.
pub fn toughness_naive(g: &Graph) -> Rational {
    let n = g.n();
    assert!(
        n <= 32,
        "cutset enumeration is exponential; refusing n > 32"
    );
    let mut best = Rational::Infinity;
    for mask in 0..(1u64 << n) {
        let s = VertexSet(mask);
        let c = g.component_count(s);
        if c >= 2 {
            let ratio = Rational::new(s.len() as u64, c as u64);
            if ratio < best {
                best = ratio;
            }
        }
    }
    best
}

/// True iff `t * c(G - S) <= |S|` for every cutset S. The empty set counts
/// as a cutset of a disconnected graph, so disconnected graphs are t-tough
/// only for t = 0. Complete graphs are t-tough for every t.
pub fn is_t_tough(g: &Graph, t: Rational) -> bool {
    if g.is_complete() {
        return true;
    }
    let n = g.n();
    assert!(
        n <= 32,
        "cutset enumeration is exponential; refusing n > 32"
    );
    for mask in 0..(1u64 << n) {
        let s = VertexSet(mask);
        let c = g.component_count(s);
        if c >= 2 && t.scale(c as u64).cmp_fraction(s.len() as u64, 1).is_gt() {
            return false;
        }
    }
    true
}

/// All cutsets achieving the toughness ratio, sorted lexicographically by
/// their vertex lists. Errors on complete or disconnected input.
pub fn toughsets(g: &Graph) -> Result<Vec<VertexSet>, ToughnessError> {
    if g.is_complete() {
        return Err(ToughnessError::CompleteGraph);
    }
    if !g.is_connected() {
        return Err(ToughnessError::Disconnected);
    }
    let tau = toughness(g);
    let n = g.n();
    assert!(
        n <= 32,
        "cutset enumeration is exponential; refusing n > 32"
    );
    let mut out = Vec::new();
    for mask in 1..(1u64 << n) {
        let s = VertexSet(mask);
        let c = g.component_count(s);
        if c >= 2 && tau.cmp_fraction(s.len() as u64, c as u64).is_eq() {
            out.push(s);
        }
    }
    out.sort_by(|a, b| a.cmp_lex(*b));
    Ok(out)
}

/// Per-vertex outcome of the toughset neighborhood check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToughsetVertexCheck {
    pub vertex: usize,
    /// Components of G - S that the vertex has a neighbor in.
    pub touched_components: Vec<VertexSet>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToughsetReport {
    pub toughset: VertexSet,
    pub checks: Vec<ToughsetVertexCheck>,
}

impl ToughsetReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

impl fmt::Display for ToughsetReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "vertex {}: touches {} components -> {}",
                c.vertex,
                c.touched_components.len(),
                if c.pass { "pass" } else { "FAIL" }
            )?;
        }
        Ok(())
    }
}

/// Check that every vertex of the toughset `s` has neighbors in at least
/// two components of G - s. Errors when `s` is not a toughset.
pub fn check_toughset_neighborhood(
    g: &Graph,
    s: VertexSet,
) -> Result<ToughsetReport, ToughnessError> {
    if g.is_complete() {
        return Err(ToughnessError::CompleteGraph);
    }
    if !g.is_connected() {
        return Err(ToughnessError::Disconnected);
    }
    let c = g.component_count(s);
    if c < 2 || toughness(g).cmp_fraction(s.len() as u64, c as u64).is_ne() {
        return Err(ToughnessError::NotAToughset(s));
    }
    let comps = g.components(s);
    let checks = s
        .iter()
        .map(|x| {
            let nbrs = g.neighbors(x);
            let touched: Vec<VertexSet> = comps
                .iter()
                .copied()
                .filter(|comp| !comp.intersection(nbrs).is_empty())
                .collect();
            ToughsetVertexCheck {
                vertex: x,
                pass: touched.len() >= 2,
                touched_components: touched,
            }
        })
        .collect();
    Ok(ToughsetReport {
        toughset: s,
        checks,
    })
}
