//! Induced linear forests: pattern parsing ("P4+3P1"), a backtracking
//! search for induced embeddings, and an independent brute-force oracle.

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PatternError {
    #[error("byte {0}: expected `P` introducing a path term")]
    ExpectedP(usize),
    #[error("byte {0}: expected a path order after `P`")]
    ExpectedOrder(usize),
    #[error("byte {0}: path order must be at least 1")]
    ZeroOrder(usize),
    #[error("pattern is empty")]
    EmptyPattern,
    #[error("pattern spans {0} vertices, the limit is 64")]
    TooLarge(usize),
}

/// A multiset of path orders, e.g. `P4 + 3P1` is `[4, 1, 1, 1]`.
/// Parts are kept sorted in descending order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForestPattern {
    parts: Vec<usize>,
}

impl LinearForestPattern {
    pub fn new(parts: impl IntoIterator<Item = usize>) -> Result<Self, PatternError> {
        let mut parts: Vec<usize> = parts.into_iter().collect();
        if parts.is_empty() {
            return Err(PatternError::EmptyPattern);
        }
        if parts.contains(&0) {
            return Err(PatternError::ZeroOrder(0));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let total: usize = parts.iter().sum();
        if total > 64 {
            return Err(PatternError::TooLarge(total));
        }
        Ok(LinearForestPattern { parts })
    }

    /// Parse `term (+ term)*` where `term := [multiplier] "P" order`.
    pub fn parse(text: &str) -> Result<Self, PatternError> {
        let bytes = text.as_bytes();
        let mut parts = Vec::new();
        let mut i = 0;
        loop {
            // optional multiplier
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let mult: usize = if i > start {
                text[start..i]
                    .parse()
                    .map_err(|_| PatternError::ExpectedOrder(start))?
            } else {
                1
            };
            if i >= bytes.len() || (bytes[i] != b'P' && bytes[i] != b'p') {
                return Err(PatternError::ExpectedP(i));
            }
            i += 1;
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if i == start {
                return Err(PatternError::ExpectedOrder(i));
            }
            let order: usize = text[start..i]
                .parse()
                .map_err(|_| PatternError::ExpectedOrder(start))?;
            if order == 0 {
                return Err(PatternError::ZeroOrder(start));
            }
            for _ in 0..mult {
                parts.push(order);
            }
            if i == bytes.len() {
                break;
            }
            if bytes[i] != b'+' {
                return Err(PatternError::ExpectedP(i));
            }
            i += 1;
        }
        LinearForestPattern::new(parts)
    }

    /// Path orders, descending.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total_vertices(&self) -> usize {
        self.parts.iter().sum()
    }

    /// True iff `self` is an induced subgraph of `other` viewed as linear
    /// forests: the parts of `self` can be packed into the parts of
    /// `other`, where a path of order b hosts disjoint induced subpaths
    /// whose orders plus separating gaps fit inside b.
    pub fn embeds_in(&self, other: &LinearForestPattern) -> bool {
        // Subpaths taken from one host path of order b must be separated
        // by at least one unused vertex, so orders a1..ak (k >= 1) fit in
        // b iff a1+..+ak + (k-1) <= b. Search over assignments of our
        // parts to host parts, largest first.
        fn fits(mut need: Vec<usize>, hosts: &mut Vec<usize>) -> bool {
            let Some(part) = need.pop() else { return true };
            for i in 0..hosts.len() {
                let room = hosts[i];
                if room >= part {
                    // reserve part vertices plus a gap for any later use
                    hosts[i] = room.saturating_sub(part + 1);
                    if fits(need.clone(), hosts) {
                        return true;
                    }
                    hosts[i] = room;
                }
            }
            false
        }
        let mut need = self.parts.clone();
        need.sort_unstable(); // pop() takes largest last -> largest first
        let mut hosts = other.parts.clone();
        fits(need, &mut hosts)
    }

    /// All linear forest patterns on exactly `total` vertices, i.e. the
    /// integer partitions of `total`, in descending lexicographic order.
    pub fn all_with_total(total: usize) -> Vec<LinearForestPattern> {
        fn partitions(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if rest == 0 {
                out.push(cur.clone());
                return;
            }
            for next in (1..=rest.min(max)).rev() {
                cur.push(next);
                partitions(rest - next, next, cur, out);
                cur.pop();
            }
        }
        let mut raw = Vec::new();
        partitions(total, total, &mut Vec::new(), &mut raw);
        raw.into_iter()
            .map(|parts| LinearForestPattern { parts })
            .collect()
    }
}

impl fmt::Display for LinearForestPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.parts.len() {
            let order = self.parts[i];
            let mut count = 1;
            while i + count < self.parts.len() && self.parts[i + count] == order {
                count += 1;
            }
            if !first {
                write!(f, "+")?;
            }
            if count > 1 {
                write!(f, "{count}")?;
            }
            write!(f, "P{order}")?;
            first = false;
            i += count;
        }
        Ok(())
    }
}

impl fmt::Debug for LinearForestPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for LinearForestPattern {
    type Err = PatternError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LinearForestPattern::parse(s)
    }
}

/// An induced embedding of a pattern: one vertex path per part, in the
/// pattern's (descending) part order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub paths: Vec<Vec<usize>>,
}

impl Embedding {
    pub fn vertices(&self) -> Vec<usize> {
        self.paths.iter().flatten().copied().collect()
    }

    /// Re-check the embedding against a graph: consecutive vertices along
    /// each path adjacent, every other image pair non-adjacent, all
    /// vertices distinct.
    pub fn is_valid(&self, g: &Graph, pattern: &LinearForestPattern) -> bool {
        if self.paths.len() != pattern.parts().len() {
            return false;
        }
        for (path, &want) in self.paths.iter().zip(pattern.parts()) {
            if path.len() != want {
                return false;
            }
        }
        let verts = self.vertices();
        let mut seen = VertexSet::EMPTY;
        for &v in &verts {
            if v >= g.n() || seen.contains(v) {
                return false;
            }
            seen.insert(v);
        }
        for path in &self.paths {
            for w in path.windows(2) {
                if !g.has_edge(w[0], w[1]) {
                    return false;
                }
            }
        }
        for (i, &u) in verts.iter().enumerate() {
            for &v in verts.iter().skip(i + 1) {
                let consecutive = self.paths.iter().any(|p| {
                    p.windows(2)
                        .any(|w| (w[0] == u && w[1] == v) || (w[0] == v && w[1] == u))
                });
                if !consecutive && g.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, path) in self.paths.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "P{}: ", path.len())?;
            for (j, v) in path.iter().enumerate() {
                if j > 0 {
                    write!(f, "-")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// Backtracking search for an induced copy of `pattern` in `g`.
///
/// Parts are placed largest first. Each newly placed vertex must be
/// adjacent to its path predecessor and non-adjacent to every other
/// already-placed vertex, so inducedness is maintained incrementally.
/// Branching is smallest-vertex-first, which makes the returned embedding
/// deterministic. Symmetry is reduced by forcing each path's first
/// endpoint below its last and equal-length parts to start at increasing
/// vertices.
pub fn find_induced(g: &Graph, pattern: &LinearForestPattern) -> Option<Embedding> {
    let parts = pattern.parts();
    if pattern.total_vertices() > g.n() {
        return None;
    }

    struct State<'a> {
        g: &'a Graph,
        parts: &'a [usize],
        paths: Vec<Vec<usize>>,
        used: VertexSet,
    }

    fn place_part(st: &mut State, part_idx: usize) -> bool {
        if part_idx == st.parts.len() {
            return true;
        }
        let order = st.parts[part_idx];
        let min_start = if part_idx > 0 && st.parts[part_idx - 1] == order {
            // equal-length parts in increasing order of first vertex
            st.paths[part_idx - 1][0] + 1
        } else {
            0
        };
        for start in min_start..st.g.n() {
            if st.used.contains(start) {
                continue;
            }
            // the new path's first vertex must avoid all placed vertices'
            // neighborhoods entirely
            if !st.g.neighbors(start).intersection(st.used).is_empty() {
                continue;
            }
            st.paths.push(vec![start]);
            st.used.insert(start);
            if extend_path(st, part_idx, order) {
                return true;
            }
            st.used.remove(start);
            st.paths.pop();
        }
        false
    }

    fn extend_path(st: &mut State, part_idx: usize, order: usize) -> bool {
        let len = st.paths[part_idx].len();
        if len == order {
            // endpoint symmetry: first endpoint below last (paths of
            // length >= 2 are counted once per direction otherwise)
            let path = &st.paths[part_idx];
            if order >= 2 && path[0] > path[order - 1] {
                return false;
            }
            return place_part(st, part_idx + 1);
        }
        let prev = *st.paths[part_idx].last().unwrap();
        // candidates: neighbors of prev, unused, non-adjacent to every
        // other placed vertex
        let placed_minus_prev = st.used.difference(VertexSet::singleton(prev));
        let mut cand = st.g.neighbors(prev).difference(st.used);
        while let Some(v) = cand.min() {
            cand.remove(v);
            if !st.g.neighbors(v).intersection(placed_minus_prev).is_empty() {
                continue;
            }
            st.paths[part_idx].push(v);
            st.used.insert(v);
            if extend_path(st, part_idx, order) {
                return true;
            }
            st.used.remove(v);
            st.paths[part_idx].pop();
        }
        false
    }

    let mut st = State {
        g,
        parts,
        paths: Vec::new(),
        used: VertexSet::EMPTY,
    };
    if place_part(&mut st, 0) {
        Some(Embedding { paths: st.paths })
    } else {
        None
    }
}

/// True iff `g` contains no induced copy of `pattern`.
pub fn is_r_free(g: &Graph, pattern: &LinearForestPattern) -> bool {
    find_induced(g, pattern).is_none()
}

/// Brute-force oracle, independent of [`find_induced`]: enumerate every
/// vertex subset of the right size and test whether the induced subgraph
/// is a linear forest with exactly the pattern's component orders.
pub fn find_induced_bruteforce(g: &Graph, pattern: &LinearForestPattern) -> bool {
    let total = pattern.total_vertices();
    if total > g.n() {
        return false;
    }
    let mut want: Vec<usize> = pattern.parts().to_vec();
    want.sort_unstable();
    subsets_of_size(g.n(), total).any(|mask| {
        let set = VertexSet(mask);
        induced_linear_forest_orders(g, set).map(|mut orders| {
            orders.sort_unstable();
            orders == want
        }) == Some(true)
    })
}

/// If `g[set]` is a linear forest, return its component orders; else None.
fn induced_linear_forest_orders(g: &Graph, set: VertexSet) -> Option<Vec<usize>> {
    let mut orders = Vec::new();
    for v in set.iter() {
        if g.degree_in(v, set) > 2 {
            return None;
        }
    }
    for comp in g.components(g.vertex_set().difference(set)) {
        let k = comp.len();
        let mut edge_twice = 0;
        for v in comp.iter() {
            edge_twice += g.degree_in(v, comp);
        }
        // a connected graph with max degree 2 is a path iff it has k-1 edges
        if edge_twice / 2 != k - 1 {
            return None;
        }
        orders.push(k);
    }
    Some(orders)
}

fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut cur = if k > n {
        None
    } else if k == 0 {
        Some(0u64)
    } else {
        Some((1u64 << k) - 1)
    };
    std::iter::from_fn(move || {
        let out = cur?;
        if k == 0 {
            cur = None;
        } else {
            let c = out & out.wrapping_neg();
            let r = out + c;
            if r > limit {
                cur = None;
            } else {
                cur = Some((((r ^ out) >> 2) / c) | r);
            }
        }
        Some(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(s: &str) -> LinearForestPattern {
        LinearForestPattern::parse(s).unwrap()
    }

    #[test]
    fn parses_patterns() {
        assert_eq!(pat("P4+3P1").parts(), &[4, 1, 1, 1]);
        assert_eq!(pat("5P1").parts(), &[1, 1, 1, 1, 1]);
        assert_eq!(pat("P7+2P1").parts(), &[7, 1, 1]);
        assert_eq!(pat("2P2+P1").parts(), &[2, 2, 1]);
        assert_eq!(pat("p3+p2").parts(), &[3, 2]);
    }

    #[test]
    fn pattern_errors_carry_positions() {
        assert_eq!(
            LinearForestPattern::parse("Q4"),
            Err(PatternError::ExpectedP(0))
        );
        assert_eq!(
            LinearForestPattern::parse("P"),
            Err(PatternError::ExpectedOrder(1))
        );
        assert_eq!(
            LinearForestPattern::parse("P0"),
            Err(PatternError::ZeroOrder(1))
        );
        assert_eq!(
            LinearForestPattern::parse("P2+"),
            Err(PatternError::ExpectedP(3))
        );
        assert_eq!(
            LinearForestPattern::parse(""),
            Err(PatternError::ExpectedP(0))
        );
    }

    #[test]
    fn displays_canonically() {
        assert_eq!(pat("P1+P4+P1+P1").to_string(), "P4+3P1");
        assert_eq!(pat("P2+P2").to_string(), "2P2");
    }

    #[test]
    fn finds_induced_in_path() {
        // P5: 0-1-2-3-4; P3 at 0-1-2 plus singleton 4 is induced
        let p5 = Graph::path(5);
        let emb = find_induced(&p5, &pat("P3+P1")).unwrap();
        assert!(emb.is_valid(&p5, &pat("P3+P1")));
        assert_eq!(emb.paths, vec![vec![0, 1, 2], vec![4]]);
    }

    #[test]
    fn complete_graphs_have_no_two_independent_vertices() {
        assert!(is_r_free(&Graph::complete(5), &pat("2P1")));
        assert!(!is_r_free(&Graph::complete(5), &pat("P2")));
    }

    #[test]
    fn c7_contains_p3_plus_p2() {
        let c7 = Graph::cycle(7);
        assert!(!is_r_free(&c7, &pat("P3+P2")));
        assert!(find_induced_bruteforce(&c7, &pat("P3+P2")));
    }

    #[test]
    fn complete_bipartite_is_p5_free() {
        for n in 2..=5 {
            let g = Graph::complete_bipartite(n, n - 1);
            assert!(is_r_free(&g, &pat("P5")));
            // P4-free too, which is the stronger statement
            assert!(is_r_free(&g, &pat("P4")));
        }
    }

    #[test]
    fn oracle_agrees_on_fixed_graphs() {
        let graphs = [
            Graph::cycle(7),
            Graph::path(8),
            Graph::complete_bipartite(3, 4),
            Graph::from_edges(7, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (5, 6), (6, 3)]).unwrap(),
        ];
        for total in 2..=7 {
            for p in LinearForestPattern::all_with_total(total) {
                for g in &graphs {
                    assert_eq!(
                        find_induced(g, &p).is_some(),
                        find_induced_bruteforce(g, &p),
                        "disagree on {p} in {g:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn partition_counts_match_linear_forest_lists() {
        assert_eq!(LinearForestPattern::all_with_total(5).len(), 7);
        assert_eq!(LinearForestPattern::all_with_total(6).len(), 11);
        assert_eq!(LinearForestPattern::all_with_total(7).len(), 15);
    }

    #[test]
    fn pattern_embedding_order() {
        assert!(pat("P4+P1").embeds_in(&pat("P4+3P1")));
        assert!(pat("2P2").embeds_in(&pat("P5")));
        assert!(!pat("P5").embeds_in(&pat("P4+3P1")));
        // P2 and one P1 both fit inside the P4, the rest go to the P1s
        assert!(pat("P2+3P1").embeds_in(&pat("P4+2P1")));
    }

    #[test]
    fn embedding_validity_is_checked() {
        let p5 = Graph::path(5);
        let bogus = Embedding {
            paths: vec![vec![0, 2], vec![4]],
        };
        assert!(!bogus.is_valid(&p5, &pat("P2+P1")));
    }
}
