//! Spanning-subgraph exception checks: does G contain some listed H as a
//! spanning subgraph such that every edge of G outside the embedded H
//! lies in the clause's allowed set (edges from S to the rest, inside S,
//! or inside the rest, depending on the clause — never touching T)?

use std::str::FromStr;

use crate::graph::{Graph, VertexSet};

use super::{build_family, FamilyError, FamilyId, FamilyInstance, Params};

/// Which extra-edge classes a clause tolerates on top of the embedded H.
/// "Rest" is V(G) minus the embedded S and T.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AllowedExtras {
    pub s_to_rest: bool,
    pub within_s: bool,
    pub within_rest: bool,
}

impl AllowedExtras {
    pub const NONE: AllowedExtras = AllowedExtras {
        s_to_rest: false,
        within_s: false,
        within_rest: false,
    };
    pub const S_TO_REST: AllowedExtras = AllowedExtras {
        s_to_rest: true,
        within_s: false,
        within_rest: false,
    };
    pub const S_TO_REST_AND_WITHIN_S: AllowedExtras = AllowedExtras {
        s_to_rest: true,
        within_s: true,
        within_rest: false,
    };
    pub const ALL_BUT_T: AllowedExtras = AllowedExtras {
        s_to_rest: true,
        within_s: true,
        within_rest: true,
    };
}

/// The exception clauses: which H graphs may span G and which extra
/// edges are tolerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExceptionCase {
    /// G is exactly H0, or H1..H4 spans G with extras from S to the rest.
    OneA,
    /// H1 spans G with extras from S to the rest.
    OneB,
    /// H5 (p=5) spans G with extras from S to the rest or inside S.
    TwoA,
    /// TwoA, or one of H6..H11 spans G with extras from S to the rest,
    /// inside S, or inside the rest.
    TwoB,
    /// Same rule as TwoA (the 7-singleton clause shares its exception).
    Three,
}

impl std::fmt::Display for ExceptionCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ExceptionCase::OneA => "1a",
            ExceptionCase::OneB => "1b",
            ExceptionCase::TwoA => "2a",
            ExceptionCase::TwoB => "2b",
            ExceptionCase::Three => "3",
        };
        write!(f, "{s}")
    }
}

impl FromStr for ExceptionCase {
    type Err = FamilyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "1a" => ExceptionCase::OneA,
            "1b" => ExceptionCase::OneB,
            "2a" => ExceptionCase::TwoA,
            "2b" => ExceptionCase::TwoB,
            "3" => ExceptionCase::Three,
            _ => return Err(FamilyError::UnknownFamily(format!("exception case `{s}`"))),
        })
    }
}

impl ExceptionCase {
    /// The (H, allowed-extras) pairs this clause accepts.
    fn rules(self) -> Vec<(FamilyInstance, AllowedExtras)> {
        let h = |id| build_family(id, Params::none()).expect("parameterless family");
        match self {
            ExceptionCase::OneA => {
                let mut rules = vec![(h(FamilyId::H0), AllowedExtras::NONE)];
                for id in [FamilyId::H1, FamilyId::H2, FamilyId::H3, FamilyId::H4] {
                    rules.push((h(id), AllowedExtras::S_TO_REST));
                }
                rules
            }
            ExceptionCase::OneB => vec![(h(FamilyId::H1), AllowedExtras::S_TO_REST)],
            ExceptionCase::TwoA | ExceptionCase::Three => vec![(
                build_family(FamilyId::H5, Params::p(5)).expect("H5 with p=5"),
                AllowedExtras::S_TO_REST_AND_WITHIN_S,
            )],
            ExceptionCase::TwoB => {
                let mut rules = ExceptionCase::TwoA.rules();
                for id in [
                    FamilyId::H6,
                    FamilyId::H7,
                    FamilyId::H8,
                    FamilyId::H9,
                    FamilyId::H10,
                    FamilyId::H11,
                ] {
                    rules.push((h(id), AllowedExtras::ALL_BUT_T));
                }
                rules
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Role {
    S,
    T,
    Rest,
}

/// Backtracking search for a spanning embedding of `h.graph` into `g`
/// (same vertex count, every H edge present in G) such that each extra
/// edge of G joins role classes permitted by `allowed`. Returns the
/// vertex map H -> G when one exists.
pub fn find_spanning_embedding(
    g: &Graph,
    h: &FamilyInstance,
    allowed: AllowedExtras,
) -> Option<Vec<usize>> {
    let n = g.n();
    if n != h.graph.n() {
        return None;
    }
    if g.edge_count() < h.graph.edge_count() {
        return None;
    }

    let s_set = h.role("S");
    let t_set = h.role("T");
    let role: Vec<Role> = (0..n)
        .map(|v| {
            if s_set.contains(v) {
                Role::S
            } else if t_set.contains(v) {
                Role::T
            } else {
                Role::Rest
            }
        })
        .collect();

    // Place H vertices in an order that keeps each new vertex attached to
    // the already-placed ones: descending degree works on all families.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(h.graph.degree(v)));

    struct Search<'a> {
        g: &'a Graph,
        h: &'a Graph,
        role: &'a [Role],
        order: &'a [usize],
        allowed: AllowedExtras,
        image: Vec<usize>, // h vertex -> g vertex
        used: VertexSet,
    }

    impl Search<'_> {
        fn extra_ok(&self, a: Role, b: Role) -> bool {
            match (a, b) {
                (Role::T, _) | (_, Role::T) => false,
                (Role::S, Role::S) => self.allowed.within_s,
                (Role::Rest, Role::Rest) => self.allowed.within_rest,
                _ => self.allowed.s_to_rest,
            }
        }

        fn feasible(&self, hv: usize, gv: usize) -> bool {
            let hd = self.h.degree(hv);
            let gd = self.g.degree(gv);
            match self.role[hv] {
                // T vertices tolerate no extras at all
                Role::T => gd == hd,
                _ => gd >= hd,
            }
        }

        fn place(&mut self, depth: usize) -> bool {
            if depth == self.order.len() {
                return true;
            }
            let hv = self.order[depth];
            for gv in 0..self.g.n() {
                if self.used.contains(gv) || !self.feasible(hv, gv) {
                    continue;
                }
                let mut ok = true;
                for &hu in &self.order[..depth] {
                    let gu = self.image[hu];
                    if self.h.has_edge(hv, hu) {
                        if !self.g.has_edge(gv, gu) {
                            ok = false;
                            break;
                        }
                    } else if self.g.has_edge(gv, gu)
                        && !self.extra_ok(self.role[hv], self.role[hu])
                    {
                        ok = false;
                        break;
                    }
                }
                if !ok {
                    continue;
                }
                self.image[hv] = gv;
                self.used.insert(gv);
                if self.place(depth + 1) {
                    return true;
                }
                self.used.remove(gv);
                self.image[hv] = usize::MAX;
            }
            false
        }
    }

    let mut search = Search {
        g,
        h: &h.graph,
        role: &role,
        order: &order,
        allowed,
        image: vec![usize::MAX; n],
        used: VertexSet::EMPTY,
    };
    search.place(0).then_some(search.image)
}

/// Like [`find_spanning_embedding`] without materializing the map.
pub fn spanning_embedding_exists(g: &Graph, h: &FamilyInstance, allowed: AllowedExtras) -> bool {
    find_spanning_embedding(g, h, allowed).is_some()
}

/// Does `g` satisfy the given exception clause?
pub fn check_spanning_exception(g: &Graph, case: ExceptionCase) -> bool {
    case.rules()
        .iter()
        .any(|(h, allowed)| spanning_embedding_exists(g, h, *allowed))
}

/// Independent re-validation of an embedding map: h-edges map onto
/// g-edges, the map is a bijection, and every extra g-edge joins roles
/// the clause tolerates. Used by tests to audit search results.
pub fn embedding_is_valid(
    g: &Graph,
    h: &FamilyInstance,
    allowed: AllowedExtras,
    image: &[usize],
) -> bool {
    let n = g.n();
    if image.len() != h.graph.n() || h.graph.n() != n {
        return false;
    }
    let mut seen = VertexSet::EMPTY;
    for &gv in image {
        if gv >= n || seen.contains(gv) {
            return false;
        }
        seen.insert(gv);
    }
    let s_set = h.role("S");
    let t_set = h.role("T");
    let role_of = |hv: usize| {
        if s_set.contains(hv) {
            Role::S
        } else if t_set.contains(hv) {
            Role::T
        } else {
            Role::Rest
        }
    };
    // preimage for classifying extra g-edges by role
    let mut pre = vec![usize::MAX; n];
    for (hv, &gv) in image.iter().enumerate() {
        pre[gv] = hv;
    }
    for hu in 0..n {
        for hv in hu + 1..n {
            if h.graph.has_edge(hu, hv) && !g.has_edge(image[hu], image[hv]) {
                return false;
            }
        }
    }
    for (gu, gv) in g.edges() {
        let (hu, hv) = (pre[gu], pre[gv]);
        if h.graph.has_edge(hu, hv) {
            continue;
        }
        let ok = match (role_of(hu), role_of(hv)) {
            (Role::T, _) | (_, Role::T) => false,
            (Role::S, Role::S) => allowed.within_s,
            (Role::Rest, Role::Rest) => allowed.within_rest,
            _ => allowed.s_to_rest,
        };
        if !ok {
            return false;
        }
    }
    true
}
