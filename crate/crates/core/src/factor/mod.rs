//! 2-factors and barriers.
//!
//! The deficiency of a disjoint vertex pair (S, T) is
//! `delta(S,T) = 2|S| - 2|T| + sum_{y in T} d_{G-S}(y) - h(S,T)`,
//! where h counts the odd components of G - (S u T): those components D
//! with e(D, T) odd. A graph has a 2-factor iff delta(S,T) >= 0 for every
//! disjoint pair; a pair with delta <= -2 is a barrier and certifies that
//! no 2-factor exists.
//!
//! The module decides 2-factor existence twice over, on purpose: once by
//! reducing to a perfect matching in a gadget graph, and once by
//! enumerating (S, T) pairs. The two routes cross-validate each other.

pub mod matching;
mod witness;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
pub use witness::{extract_long_path_witness, extract_p4_witness, ForestWitness};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FactorError {
    #[error("S and T must be disjoint but share vertex {0}")]
    OverlappingPair(usize),
    #[error("vertex {0} is not in T")]
    VertexNotInT(usize),
    #[error("the pair has no odd component with at least 3 edges to T")]
    NoNontrivialOddComponent,
    #[error("no vertex of T touches two or more odd components")]
    NoSpreadVertex,
    #[error("vertex {0} does not touch two or more odd components")]
    BadSpreadVertex(usize),
    #[error("constructed witness failed the induced check; is the pair a biased barrier?")]
    WitnessNotInduced,
}

/// A disjoint pair (S, T) with its deficiency value and the component
/// classification of G - (S u T).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BarrierPair {
    pub s: VertexSet,
    pub t: VertexSet,
    pub delta: i64,
    /// Number of odd components.
    pub h: usize,
    /// k -> odd components D with e(D, T) = 2k + 1.
    pub odd_classes: BTreeMap<usize, Vec<VertexSet>>,
    pub even_components: Vec<VertexSet>,
}

impl BarrierPair {
    /// Odd components with at least three edges to T (classes k >= 1),
    /// ordered by smallest vertex.
    pub fn nontrivial_odd_components(&self) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = self
            .odd_classes
            .iter()
            .filter(|(k, _)| **k >= 1)
            .flat_map(|(_, comps)| comps.iter().copied())
            .collect();
        out.sort_by_key(|&c| c.min());
        out
    }

    pub fn odd_components(&self) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = self
            .odd_classes
            .values()
            .flat_map(|comps| comps.iter().copied())
            .collect();
        out.sort_by_key(|&c| c.min());
        out
    }

    /// Counts per class as (k, |C_{2k+1}|), for display.
    pub fn class_counts(&self) -> Vec<(usize, usize)> {
        self.odd_classes
            .iter()
            .filter(|(_, c)| !c.is_empty())
            .map(|(k, c)| (*k, c.len()))
            .collect()
    }
}

impl fmt::Display for BarrierPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "S={} T={} delta={} classes={{",
            self.s, self.t, self.delta
        )?;
        for (i, (k, count)) in self.class_counts().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}:{count}")?;
        }
        write!(f, "}}")
    }
}

/// Evaluate delta(S, T) and classify the components of G - (S u T).
pub fn evaluate_delta(g: &Graph, s: VertexSet, t: VertexSet) -> Result<BarrierPair, FactorError> {
    if let Some(v) = s.intersection(t).min() {
        return Err(FactorError::OverlappingPair(v));
    }
    let deg_sum: i64 = t
        .iter()
        .map(|y| g.neighbors(y).difference(s).len() as i64)
        .sum();
    let mut odd_classes: BTreeMap<usize, Vec<VertexSet>> = BTreeMap::new();
    let mut even_components = Vec::new();
    let mut h = 0usize;
    for comp in g.components(s.union(t)) {
        let e_to_t = g
            .count_edges_between(comp, t)
            .expect("components are disjoint from T");
        if e_to_t % 2 == 1 {
            odd_classes.entry((e_to_t - 1) / 2).or_default().push(comp);
            h += 1;
        } else {
            even_components.push(comp);
        }
    }
    let delta = 2 * s.len() as i64 - 2 * t.len() as i64 + deg_sum - h as i64;
    debug_assert_eq!(delta.rem_euclid(2), 0, "delta must be even");
    Ok(BarrierPair {
        s,
        t,
        delta,
        h,
        odd_classes,
        even_components,
    })
}

/// A pair is a barrier iff its deficiency is at most -2. Odd deficiency
/// cannot arise from `evaluate_delta`; it is treated as a corrupted pair.
pub fn is_barrier(pair: &BarrierPair) -> bool {
    assert_eq!(
        pair.delta.rem_euclid(2),
        0,
        "odd delta: corrupted BarrierPair"
    );
    pair.delta <= -2
}

/// A 2-regular spanning subgraph, stored as its edge set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoFactor {
    pub edges: Vec<(usize, usize)>,
}

impl TwoFactor {
    /// Check the certificate: all edges present in `g`, every vertex
    /// incident to exactly two of them.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let mut deg = vec![0usize; g.n()];
        for &(u, v) in &self.edges {
            if !g.has_edge(u, v) {
                return false;
            }
            deg[u] += 1;
            deg[v] += 1;
        }
        deg.iter().all(|&d| d == 2)
    }
}

/// Decide 2-factor existence by the gadget reduction to perfect matching.
pub fn has_two_factor(g: &Graph) -> bool {
    find_two_factor(g).is_some()
}

/// Find a 2-factor if one exists.
///
/// Each vertex v of degree d becomes a gadget with d edge stubs and d - 2
/// core vertices, cores joined to all stubs of the same vertex; each
/// original edge joins its two stubs. Perfect matchings of the gadget
/// graph correspond to 2-factors: an original edge is picked exactly when
/// its stub pair is matched. Vertices of degree below 2 short-circuit to
/// "none" (the gadget would need a negative number of cores).
pub fn find_two_factor(g: &Graph) -> Option<TwoFactor> {
    let n = g.n();
    if n == 0 {
        return Some(TwoFactor { edges: Vec::new() });
    }
    if (0..n).any(|v| g.degree(v) < 2) {
        return None;
    }
    let edges = g.edges();
    // stub ids: two per edge, (2i) at the lower endpoint, (2i+1) at the upper
    let stub_count = 2 * edges.len();
    let mut stubs_at = vec![Vec::new(); n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        stubs_at[u].push(2 * i);
        stubs_at[v].push(2 * i + 1);
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); stub_count];
    let mut next_core = stub_count;
    for stubs in &stubs_at {
        for _ in 0..stubs.len() - 2 {
            let core = next_core;
            next_core += 1;
            adj.push(Vec::new());
            for &stub in stubs {
                adj[core].push(stub);
                adj[stub].push(core);
            }
        }
    }
    for i in 0..edges.len() {
        adj[2 * i].push(2 * i + 1);
        adj[2 * i + 1].push(2 * i);
    }

    let matching = matching::maximum_matching(&adj);
    if !matching.is_perfect() {
        return None;
    }
    let picked: Vec<(usize, usize)> = edges
        .iter()
        .enumerate()
        .filter(|(i, _)| matching.mate[2 * i] == Some(2 * i + 1))
        .map(|(_, &e)| e)
        .collect();
    let factor = TwoFactor { edges: picked };
    debug_assert!(factor.is_valid(g));
    Some(factor)
}

/// Ascending enumeration of the submasks of `mask`, including 0 and `mask`.
fn submasks_ascending(mask: u64) -> impl Iterator<Item = u64> {
    let mut cur = Some(0u64);
    std::iter::from_fn(move || {
        let out = cur?;
        cur = if out == mask {
            None
        } else {
            Some(out.wrapping_sub(mask) & mask)
        };
        Some(out)
    })
}

/// Quick lower bound skip for the barrier scan: with q = 2|S| - 2|T| +
/// sum deg, delta >= q - (number of leftover vertices), so pairs with
/// q - hmax > -2 cannot be barriers.
fn delta_if_barrier(g: &Graph, s: VertexSet, t: VertexSet, deg_in_gs: &[i64]) -> Option<i64> {
    let q: i64 =
        2 * s.len() as i64 - 2 * t.len() as i64 + t.iter().map(|y| deg_in_gs[y]).sum::<i64>();
    let hmax = (g.n() - s.len() - t.len()) as i64;
    if q - hmax > -2 {
        return None;
    }
    // count odd components of G - (S u T)
    let removed = s.union(t);
    let mut unseen = g.vertex_set().difference(removed).0;
    let mut h = 0i64;
    while unseen != 0 {
        let start = unseen.trailing_zeros() as usize;
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        unseen &= !comp;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= g.neighbors(u).0 & unseen;
            }
            comp |= next;
            unseen &= !next;
            frontier = next;
        }
        let mut e_to_t = 0u32;
        let mut c = comp;
        while c != 0 {
            let u = c.trailing_zeros() as usize;
            c &= c - 1;
            e_to_t += (g.neighbors(u).0 & t.0).count_ones();
        }
        if e_to_t % 2 == 1 {
            h += 1;
        }
    }
    let delta = q - h;
    (delta <= -2).then_some(delta)
}

/// Find some barrier by enumerating disjoint (S, T) pairs, or `None` iff
/// the graph has a 2-factor. The scan visits S in increasing mask order
/// and, within each S, T in increasing mask order over the complement;
/// the first barrier found is returned. This first-found choice is a
/// determinism convention, nothing deeper.
pub fn find_barrier(g: &Graph) -> Option<BarrierPair> {
    let n = g.n();
    assert!(
        n <= 32,
        "barrier enumeration is exponential; refusing n > 32"
    );
    let full = VertexSet::full(n).0;
    let mut deg_in_gs = vec![0i64; n];
    for s_mask in submasks_ascending(full) {
        let s = VertexSet(s_mask);
        for (v, deg) in deg_in_gs.iter_mut().enumerate() {
            *deg = g.neighbors(v).difference(s).len() as i64;
        }
        for t_mask in submasks_ascending(full & !s_mask) {
            let t = VertexSet(t_mask);
            if delta_if_barrier(g, s, t, &deg_in_gs).is_some() {
                return Some(evaluate_delta(g, s, t).expect("disjoint by construction"));
            }
        }
    }
    None
}

/// Find the biased barrier: among all barriers, |S| maximum, then |T|
/// minimum, remaining ties broken lexicographically on (S, T) as vertex
/// lists. `None` iff the graph has a 2-factor.
pub fn find_biased_barrier(g: &Graph) -> Option<BarrierPair> {
    let n = g.n();
    assert!(
        n <= 32,
        "barrier enumeration is exponential; refusing n > 32"
    );
    let full = VertexSet::full(n).0;
    let mut best: Option<(VertexSet, VertexSet)> = None;
    let mut deg_in_gs = vec![0i64; n];
    // sizes of S descending so the |S|-maximum shows up early and smaller
    // sizes can be skipped wholesale once a barrier is known
    for s_size in (0..=n).rev() {
        if best.is_some() {
            break;
        }
        for s_mask in submasks_ascending(full) {
            if s_mask.count_ones() as usize != s_size {
                continue;
            }
            let s = VertexSet(s_mask);
            for (v, deg) in deg_in_gs.iter_mut().enumerate() {
                *deg = g.neighbors(v).difference(s).len() as i64;
            }
            for t_mask in submasks_ascending(full & !s_mask) {
                let t = VertexSet(t_mask);
                if delta_if_barrier(g, s, t, &deg_in_gs).is_some() {
                    let better = match &best {
                        None => true,
                        Some((bs, bt)) => {
                            (t.len(), s.cmp_lex(*bs), t.cmp_lex(*bt))
                                < (
                                    bt.len(),
                                    std::cmp::Ordering::Equal,
                                    std::cmp::Ordering::Equal,
                                )
                        }
                    };
                    if better {
                        best = Some((s, t));
                    }
                }
            }
        }
    }
    best.map(|(s, t)| evaluate_delta(g, s, t).expect("disjoint by construction"))
}

/// Outcome of checking one clause of the biased-barrier structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClauseOutcome {
    Pass,
    /// An edge violating the clause.
    FailEdge(usize, usize),
    /// A vertex with too many edges to the named set.
    FailVertex(usize),
}

impl ClauseOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, ClauseOutcome::Pass)
    }
}

/// Pass/fail per structural property of a biased barrier: T independent,
/// even components see no T edge, every y in T sends at most one edge
/// into each odd component, and every vertex of an odd component
/// receives at most one edge from T.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiasedBarrierReport {
    pub t_independent: ClauseOutcome,
    pub even_components_untouched: ClauseOutcome,
    pub odd_in_degree: ClauseOutcome,
    pub odd_out_degree: ClauseOutcome,
}

impl BiasedBarrierReport {
    pub fn all_pass(&self) -> bool {
        self.t_independent.passed()
            && self.even_components_untouched.passed()
            && self.odd_in_degree.passed()
            && self.odd_out_degree.passed()
    }
}

impl fmt::Display for BiasedBarrierReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let line = |o: &ClauseOutcome| match o {
            ClauseOutcome::Pass => "pass".to_string(),
            ClauseOutcome::FailEdge(u, v) => format!("FAIL (edge {u}-{v})"),
            ClauseOutcome::FailVertex(v) => format!("FAIL (vertex {v})"),
        };
        writeln!(f, "T independent:            {}", line(&self.t_independent))?;
        writeln!(
            f,
            "even components untouched: {}",
            line(&self.even_components_untouched)
        )?;
        writeln!(
            f,
            "e(y, D) <= 1 per odd D:    {}",
            line(&self.odd_in_degree)
        )?;
        write!(
            f,
            "e(x, T) <= 1 on odd D:     {}",
            line(&self.odd_out_degree)
        )
    }
}

/// Check the four structural clauses a biased barrier must satisfy,
/// reporting a violating witness for each failed clause.
pub fn verify_biased_barrier_properties(g: &Graph, pair: &BarrierPair) -> BiasedBarrierReport {
    let t = pair.t;

    let mut t_independent = ClauseOutcome::Pass;
    'outer: for u in t.iter() {
        for v in g.neighbors(u).intersection(t).iter() {
            if v > u {
                t_independent = ClauseOutcome::FailEdge(u, v);
                break 'outer;
            }
        }
    }

    let mut even_ok = ClauseOutcome::Pass;
    'outer: for comp in &pair.even_components {
        for u in comp.iter() {
            if let Some(y) = g.neighbors(u).intersection(t).min() {
                even_ok = ClauseOutcome::FailEdge(y, u);
                break 'outer;
            }
        }
    }

    let mut odd_in = ClauseOutcome::Pass;
    'outer: for comp in pair.odd_components() {
        for y in t.iter() {
            if g.neighbors(y).intersection(comp).len() > 1 {
                odd_in = ClauseOutcome::FailVertex(y);
                break 'outer;
            }
        }
    }

    let mut odd_out = ClauseOutcome::Pass;
    'outer: for comp in pair.odd_components() {
        for x in comp.iter() {
            if g.neighbors(x).intersection(t).len() > 1 {
                odd_out = ClauseOutcome::FailVertex(x);
                break 'outer;
            }
        }
    }

    BiasedBarrierReport {
        t_independent,
        even_components_untouched: even_ok,
        odd_in_degree: odd_in,
        odd_out_degree: odd_out,
    }
}

/// The size bound a biased barrier satisfies:
/// |T| >= |S| + sum_{k>=1} k * |C_{2k+1}| + 1.
#[allow(clippy::int_plus_one)] // keep the bound in its stated shape
pub fn check_t_bound(pair: &BarrierPair) -> bool {
    let weighted: usize = pair
        .odd_classes
        .iter()
        .filter(|(k, _)| **k >= 1)
        .map(|(k, comps)| k * comps.len())
        .sum();
    pair.t.len() >= pair.s.len() + weighted + 1
}

/// h(y): the number of odd components with at least 3 edges to T that `y`
/// has a neighbor in. Errors when `y` is not in T.
pub fn h_of_vertex(g: &Graph, pair: &BarrierPair, y: usize) -> Result<usize, FactorError> {
    if !pair.t.contains(y) {
        return Err(FactorError::VertexNotInT(y));
    }
    Ok(pair
        .nontrivial_odd_components()
        .iter()
        .filter(|comp| !g.neighbors(y).intersection(**comp).is_empty())
        .count())
}
