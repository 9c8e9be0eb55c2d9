//! Simple undirected graphs on at most 64 vertices, stored as bit-set
//! adjacency rows, together with the structural queries the rest of the
//! crate is built on: components, independence, edge counting.

use std::fmt;

use thiserror::Error;

/// Hard cap on vertex count; adjacency rows are single `u64` words.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {0} vertices, the limit is {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("vertex sets must be disjoint but share vertex {0}")]
    OverlappingSets(usize),
}

/// A set of vertices of a graph on at most 64 vertices.
///
/// Plain bit mask with set-algebra helpers; ordering-sensitive callers use
/// [`VertexSet::cmp_lex`], which compares by sorted vertex lists.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The full set {0, .., n-1}.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & (1u64 << v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint_from(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member, if any.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterate members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic order on the sorted vertex lists: the set containing
    /// the smallest vertex where the two sets differ comes first, and a
    /// proper prefix precedes its extensions.
    pub fn cmp_lex(self, other: Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff & diff.wrapping_neg();
        if self.0 & low != 0 {
            // `self` contains the smallest differing vertex. That makes it
            // lexicographically smaller unless the other set had already
            // ended, which cannot happen here because a strict subset
            // relation is caught by the prefix rule below.
            if other.0 & (low - 1) == self.0 & (low - 1) && other.0 & !(low | (low - 1)) == 0 {
                // other is a proper prefix of self
                Ordering::Greater
            } else {
                Ordering::Less
            }
        } else {
            if self.0 & (low - 1) == other.0 & (low - 1) && self.0 & !(low | (low - 1)) == 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A simple undirected graph on vertices `0..n`.
///
/// `adj[u]` is the neighbor set of `u`. The representation is kept
/// symmetric and irreflexive by construction; values are immutable once
/// built and safe to share across threads.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut g = Graph::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: u,
                n: self.n,
            });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1u64 << v) != 0
    }

    pub fn neighbors(&self, u: usize) -> VertexSet {
        VertexSet(self.adj[u])
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    /// Degree of `u` counting only neighbors inside `within`.
    pub fn degree_in(&self, u: usize, within: VertexSet) -> usize {
        (self.adj[u] & within.0).count_ones() as usize
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            // neighbors of u with index > u
            let higher = if u + 1 >= 64 {
                0
            } else {
                self.adj[u] & !((1u64 << (u + 1)) - 1)
            };
            let mut bits = higher;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn is_complete(&self) -> bool {
        let full = self.vertex_set().0;
        self.adj
            .iter()
            .enumerate()
            .all(|(u, &row)| row == full & !(1u64 << u))
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components(VertexSet::EMPTY).len() == 1
    }

    /// Connected components of the graph obtained by deleting `removed`,
    /// ordered by smallest contained vertex.
    pub fn components(&self, removed: VertexSet) -> Vec<VertexSet> {
        let mut unseen = self.vertex_set().difference(removed).0;
        let mut out = Vec::new();
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
                    next |= self.adj[u] & unseen;
                }
                comp |= next;
                unseen &= !next;
                frontier = next;
            }
            out.push(VertexSet(comp));
        }
        out
    }

    /// Number of components of the graph minus `removed`; avoids building
    /// the component sets on hot paths.
    pub fn component_count(&self, removed: VertexSet) -> usize {
        let mut unseen = self.vertex_set().difference(removed).0;
        let mut count = 0;
        while unseen != 0 {
            let start = unseen.trailing_zeros() as usize;
            let mut frontier = 1u64 << start;
            unseen &= !frontier;
            while frontier != 0 {
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let u = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= self.adj[u] & unseen;
                }
                unseen &= !next;
                frontier = next;
            }
            count += 1;
        }
        count
    }

    /// Number of edges with one endpoint in `a` and the other in `b`.
    /// The sets must be disjoint.
    pub fn count_edges_between(&self, a: VertexSet, b: VertexSet) -> Result<usize, GraphError> {
        if let Some(v) = a.intersection(b).min() {
            return Err(GraphError::OverlappingSets(v));
        }
        Ok(a.iter()
            .map(|u| (self.adj[u] & b.0).count_ones() as usize)
            .sum())
    }

    /// True iff no edge has both endpoints in `s`.
    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|u| self.adj[u] & s.0 == 0)
    }

    /// Exact independence number via branch and bound.
    pub fn independence_number(&self) -> usize {
        fn go(g: &Graph, rem: u64, best: &mut usize, have: usize) {
            if have + rem.count_ones() as usize <= *best {
                return;
            }
            if rem == 0 {
                *best = (*best).max(have);
                return;
            }
            // branch on a vertex of maximum degree within the remainder
            let mut pivot = rem.trailing_zeros() as usize;
            let mut pivot_deg = 0;
            let mut scan = rem;
            while scan != 0 {
                let v = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                let d = (g.adj[v] & rem).count_ones();
                if d > pivot_deg {
                    pivot_deg = d;
                    pivot = v;
                }
            }
            if pivot_deg == 0 {
                *best = (*best).max(have + rem.count_ones() as usize);
                return;
            }
            // include the pivot
            go(g, rem & !g.adj[pivot] & !(1u64 << pivot), best, have + 1);
            // exclude the pivot
            go(g, rem & !(1u64 << pivot), best, have);
        }
        let mut best = 0;
        go(self, self.vertex_set().0, &mut best, 0);
        best
    }

    /// All neighbors of any vertex in `s`.
    pub fn neighborhood_of_set(&self, s: VertexSet) -> VertexSet {
        let mut out = 0u64;
        for u in s.iter() {
            out |= self.adj[u];
        }
        VertexSet(out)
    }

    // ----- small standard constructors, used by families and tests -----

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n).expect("path size");
        for u in 1..n {
            g.add_edge(u - 1, u).unwrap();
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0).unwrap();
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n).expect("complete graph size");
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    pub fn complete_bipartite(m: usize, n: usize) -> Self {
        let mut g = Graph::new(m + n).expect("bipartite size");
        for u in 0..m {
            for v in m..m + n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
