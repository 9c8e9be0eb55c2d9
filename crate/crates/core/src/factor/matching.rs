//! Maximum cardinality matching in general graphs (Edmonds' blossom
//! algorithm, O(V^3)). Works on a plain adjacency-list graph because the
//! 2-factor gadget it serves can exceed 64 vertices.

const NONE: usize = usize::MAX;

/// `mate[v]` is the vertex matched to `v`, or `None`.
#[derive(Debug, Clone)]
pub struct Matching {
    pub mate: Vec<Option<usize>>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.mate.iter().flatten().count() / 2
    }

    pub fn is_perfect(&self) -> bool {
        self.mate.iter().all(|m| m.is_some())
    }
}

/// Compute a maximum matching of the graph given by adjacency lists.
pub fn maximum_matching(adj: &[Vec<usize>]) -> Matching {
    let n = adj.len();
    let mut mate = vec![NONE; n];

    // greedy seed matching cuts down the number of augmenting phases
    for v in 0..n {
        if mate[v] == NONE {
            for &w in &adj[v] {
                if mate[w] == NONE {
                    mate[v] = w;
                    mate[w] = v;
                    break;
                }
            }
        }
    }

    let mut parent = vec![NONE; n];
    let mut base = vec![0usize; n];
    let mut in_queue = vec![false; n];
    let mut in_blossom = vec![false; n];
    let mut in_path = vec![false; n];

    for root in 0..n {
        if mate[root] != NONE {
            continue;
        }
        // BFS for an augmenting path from `root`, contracting blossoms
        for v in 0..n {
            parent[v] = NONE;
            base[v] = v;
            in_queue[v] = false;
        }
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(root);
        in_queue[root] = true;
        let mut augmented = false;

        'bfs: while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if base[v] == base[w] || mate[v] == w {
                    continue;
                }
                if w == root || (mate[w] != NONE && parent[mate[w]] != NONE) {
                    // odd cycle: contract the blossom rooted at lca(v, w)
                    let cur_base = lca(&mate, &parent, &base, &mut in_path, v, w);
                    in_blossom.iter_mut().for_each(|b| *b = false);
                    mark_path(&mate, &base, &mut parent, &mut in_blossom, v, cur_base, w);
                    mark_path(&mate, &base, &mut parent, &mut in_blossom, w, cur_base, v);
                    for i in 0..n {
                        if in_blossom[base[i]] {
                            base[i] = cur_base;
                            if !in_queue[i] {
                                in_queue[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if parent[w] == NONE {
                    parent[w] = v;
                    if mate[w] == NONE {
                        augment(&mut mate, &parent, w);
                        augmented = true;
                        break 'bfs;
                    } else {
                        let mw = mate[w];
                        if !in_queue[mw] {
                            in_queue[mw] = true;
                            queue.push_back(mw);
                        }
                    }
                }
            }
        }
        let _ = augmented;
    }

    Matching {
        mate: mate
            .into_iter()
            .map(|m| if m == NONE { None } else { Some(m) })
            .collect(),
    }
}

fn lca(
    mate: &[usize],
    parent: &[usize],
    base: &[usize],
    in_path: &mut [bool],
    mut a: usize,
    mut b: usize,
) -> usize {
    in_path.iter_mut().for_each(|p| *p = false);
    a = base[a];
    loop {
        in_path[a] = true;
        if mate[a] == NONE {
            break;
        }
        a = base[parent[mate[a]]];
    }
    b = base[b];
    loop {
        if in_path[b] {
            return b;
        }
        b = base[parent[mate[b]]];
    }
}

fn mark_path(
    mate: &[usize],
    base: &[usize],
    parent: &mut [usize],
    in_blossom: &mut [bool],
    mut v: usize,
    cur_base: usize,
    mut child: usize,
) {
    while base[v] != cur_base {
        in_blossom[base[v]] = true;
        in_blossom[base[mate[v]]] = true;
        parent[v] = child;
        child = mate[v];
        v = parent[mate[v]];
    }
}

fn augment(mate: &mut [usize], parent: &[usize], mut w: usize) {
    while w != NONE {
        let pv = parent[w];
        let ppv = mate[pv];
        mate[w] = pv;
        mate[pv] = w;
        w = ppv;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn adj_from_edges(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    fn check(m: &Matching, adj: &[Vec<usize>]) {
        for (v, &mv) in m.mate.iter().enumerate() {
            if let Some(w) = mv {
                assert_eq!(m.mate[w], Some(v));
                assert!(adj[v].contains(&w));
            }
        }
    }

    #[test]
    fn matches_even_path_perfectly() {
        let adj = adj_from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]);
        let m = maximum_matching(&adj);
        check(&m, &adj);
        assert_eq!(m.size(), 3);
        assert!(m.is_perfect());
    }

    #[test]
    fn odd_cycle_leaves_one_exposed() {
        let adj = adj_from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let m = maximum_matching(&adj);
        check(&m, &adj);
        assert_eq!(m.size(), 2);
    }

    #[test]
    fn blossom_requiring_graph() {
        // two triangles joined by an edge; perfect matching exists
        let adj = adj_from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)]);
        let m = maximum_matching(&adj);
        check(&m, &adj);
        assert_eq!(m.size(), 3);
    }

    #[test]
    fn petersen_graph_has_perfect_matching() {
        let edges = [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0), // outer C5
            (5, 7),
            (7, 9),
            (9, 6),
            (6, 8),
            (8, 5), // inner star
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
        ];
        let adj = adj_from_edges(10, &edges);
        let m = maximum_matching(&adj);
        check(&m, &adj);
        assert!(m.is_perfect());
    }

    #[test]
    fn star_matches_single_edge() {
        let adj = adj_from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        let m = maximum_matching(&adj);
        check(&m, &adj);
        assert_eq!(m.size(), 1);
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        // exhaustive check against brute-force maximum matching size
        fn brute(n: usize, edges: &[(usize, usize)]) -> usize {
            fn go(edges: &[(usize, usize)], used: u64) -> usize {
                let Some((i, &(u, v))) = edges
                    .iter()
                    .enumerate()
                    .find(|(_, &(u, v))| used & (1 << u) == 0 && used & (1 << v) == 0)
                else {
                    return 0;
                };
                let take = 1 + go(&edges[i + 1..], used | (1 << u) | (1 << v));
                let skip = go(&edges[i + 1..], used);
                take.max(skip)
            }
            let _ = n;
            go(edges, 0)
        }
        // a handful of adversarial small graphs
        let cases: Vec<(usize, Vec<(usize, usize)>)> = vec![
            (4, vec![(0, 1), (1, 2), (2, 0), (2, 3)]),
            (
                7,
                vec![
                    (0, 1),
                    (1, 2),
                    (2, 0),
                    (2, 3),
                    (3, 4),
                    (4, 5),
                    (5, 3),
                    (5, 6),
                ],
            ),
            (
                8,
                vec![
                    (0, 1),
                    (1, 2),
                    (2, 3),
                    (3, 0),
                    (4, 5),
                    (5, 6),
                    (6, 7),
                    (7, 4),
                    (0, 4),
                ],
            ),
            (
                6,
                vec![
                    (0, 1),
                    (0, 2),
                    (1, 2),
                    (1, 3),
                    (2, 4),
                    (3, 4),
                    (3, 5),
                    (4, 5),
                ],
            ),
        ];
        for (n, edges) in cases {
            let adj = adj_from_edges(n, &edges);
            let m = maximum_matching(&adj);
            check(&m, &adj);
            assert_eq!(m.size(), brute(n, &edges), "graph {edges:?}");
        }
    }
}
