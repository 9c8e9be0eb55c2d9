//! Constructors for the named extremal graphs H0..H12 and the standard
//! families (complete, complete bipartite, paths, cycles), each with a
//! published role map, plus the catalog of claimed invariants that the
//! acceptance suite checks.
//!
//! Every H-graph consists of a (possibly empty) set S, an independent set
//! T, and a clique-or-structured remainder D, with T attached to S and to
//! distinguished D-vertices. Vertices are numbered S first, then T, then
//! D, following subscript order inside each role.
//!
//! H6..H11 are not given explicitly by a figure anywhere; their structure
//! is pinned down by the case analysis that produces them (how D - v0
//! decomposes: K1+K4 with the K1 tied to S, K2+K3, a cutvertex against a
//! triangle, two triangles sharing the cutvertex, a spanning C5, and two
//! disjoint triangles bridged through one T vertex). Each reconstruction
//! is validated by the invariant suite: toughness exactly 7/6, no
//! 2-factor, and no induced P2+5P1.

mod spanning;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::forbidden::LinearForestPattern;
use crate::graph::{Graph, GraphError, VertexSet};
use crate::toughness::Rational;
pub use spanning::{
    check_spanning_exception, embedding_is_valid, find_spanning_embedding,
    spanning_embedding_exists, AllowedExtras, ExceptionCase,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyId {
    H0,
    H1,
    H2,
    H3,
    H4,
    H5,
    H6,
    H7,
    H8,
    H9,
    H10,
    H11,
    H12,
    /// Complete bipartite K_{m,n}; takes `m` and `n`.
    Kmn,
    /// Path on n vertices.
    Pn,
    /// Cycle on n vertices.
    Cn,
    /// Complete graph on n vertices.
    Kn,
}

impl FamilyId {
    pub const ALL_H: [FamilyId; 13] = [
        FamilyId::H0,
        FamilyId::H1,
        FamilyId::H2,
        FamilyId::H3,
        FamilyId::H4,
        FamilyId::H5,
        FamilyId::H6,
        FamilyId::H7,
        FamilyId::H8,
        FamilyId::H9,
        FamilyId::H10,
        FamilyId::H11,
        FamilyId::H12,
    ];
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FamilyId::H0 => "H0",
            FamilyId::H1 => "H1",
            FamilyId::H2 => "H2",
            FamilyId::H3 => "H3",
            FamilyId::H4 => "H4",
            FamilyId::H5 => "H5",
            FamilyId::H6 => "H6",
            FamilyId::H7 => "H7",
            FamilyId::H8 => "H8",
            FamilyId::H9 => "H9",
            FamilyId::H10 => "H10",
            FamilyId::H11 => "H11",
            FamilyId::H12 => "H12",
            FamilyId::Kmn => "Kmn",
            FamilyId::Pn => "Pn",
            FamilyId::Cn => "Cn",
            FamilyId::Kn => "Kn",
        };
        write!(f, "{s}")
    }
}

impl std::str::FromStr for FamilyId {
    type Err = FamilyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        Ok(match lower.as_str() {
            "h0" => FamilyId::H0,
            "h1" => FamilyId::H1,
            "h2" => FamilyId::H2,
            "h3" => FamilyId::H3,
            "h4" => FamilyId::H4,
            "h5" => FamilyId::H5,
            "h6" => FamilyId::H6,
            "h7" => FamilyId::H7,
            "h8" => FamilyId::H8,
            "h9" => FamilyId::H9,
            "h10" => FamilyId::H10,
            "h11" => FamilyId::H11,
            "h12" => FamilyId::H12,
            "kmn" => FamilyId::Kmn,
            "pn" => FamilyId::Pn,
            "cn" => FamilyId::Cn,
            "kn" => FamilyId::Kn,
            _ => return Err(FamilyError::UnknownFamily(s.to_string())),
        })
    }
}

/// Optional integer parameters for a family constructor.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Params {
    pub p: Option<usize>,
    pub m: Option<usize>,
    pub n: Option<usize>,
}

impl Params {
    pub fn none() -> Self {
        Params::default()
    }
    pub fn p(p: usize) -> Self {
        Params {
            p: Some(p),
            ..Default::default()
        }
    }
    pub fn n(n: usize) -> Self {
        Params {
            n: Some(n),
            ..Default::default()
        }
    }
    pub fn mn(m: usize, n: usize) -> Self {
        Params {
            m: Some(m),
            n: Some(n),
            ..Default::default()
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("{family} requires parameter `{param}`")]
    MissingParam {
        family: FamilyId,
        param: &'static str,
    },
    #[error("{family} parameter {param}={value} is out of range ({requirement})")]
    OutOfRange {
        family: FamilyId,
        param: &'static str,
        value: usize,
        requirement: &'static str,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A constructed family member together with its role map. The coarse
/// roles (S, T and the D-parts) partition the vertex set; named vertices
/// (x, x1, t3, y2, v0, ...) are additionally exposed as singletons.
#[derive(Debug, Clone)]
pub struct FamilyInstance {
    pub name: String,
    pub graph: Graph,
    pub roles: BTreeMap<String, VertexSet>,
}

impl FamilyInstance {
    pub fn role(&self, name: &str) -> VertexSet {
        self.roles.get(name).copied().unwrap_or(VertexSet::EMPTY)
    }

    /// The roles that partition V: S, T, and the D parts.
    pub fn coarse_roles(&self) -> Vec<(&str, VertexSet)> {
        ["S", "T", "D", "D1", "D2", "A", "B", "V"]
            .iter()
            .filter_map(|k| self.roles.get(*k).map(|v| (*k, *v)))
            .collect()
    }

    fn assert_partition(&self) {
        let mut seen = VertexSet::EMPTY;
        let mut total = 0;
        for (_, set) in self.coarse_roles() {
            total += set.len();
            seen = seen.union(set);
        }
        assert_eq!(total, self.graph.n(), "{}: coarse roles overlap", self.name);
        assert_eq!(
            seen,
            self.graph.vertex_set(),
            "{}: coarse roles miss vertices",
            self.name
        );
    }
}

struct Builder {
    name: String,
    graph: Graph,
    roles: BTreeMap<String, VertexSet>,
}

impl Builder {
    fn new(name: String, n: usize) -> Result<Self, FamilyError> {
        Ok(Builder {
            name,
            graph: Graph::new(n)?,
            roles: BTreeMap::new(),
        })
    }

    fn edge(&mut self, u: usize, v: usize) -> &mut Self {
        self.graph
            .add_edge(u, v)
            .expect("family edges are in range");
        self
    }

    fn clique(&mut self, verts: &[usize]) -> &mut Self {
        for (i, &u) in verts.iter().enumerate() {
            for &v in &verts[i + 1..] {
                self.edge(u, v);
            }
        }
        self
    }

    fn role(&mut self, name: &str, verts: impl IntoIterator<Item = usize>) -> &mut Self {
        self.roles
            .insert(name.to_string(), verts.into_iter().collect());
        self
    }

    fn finish(self) -> FamilyInstance {
        let inst = FamilyInstance {
            name: self.name,
            graph: self.graph,
            roles: self.roles,
        };
        inst.assert_partition();
        inst
    }
}

fn require(params: Params, field: &'static str, family: FamilyId) -> Result<usize, FamilyError> {
    let v = match field {
        "p" => params.p,
        "m" => params.m,
        _ => params.n,
    };
    v.ok_or(FamilyError::MissingParam {
        family,
        param: field,
    })
}

fn range_check(
    family: FamilyId,
    param: &'static str,
    value: usize,
    min: usize,
    requirement: &'static str,
) -> Result<(), FamilyError> {
    if value < min {
        Err(FamilyError::OutOfRange {
            family,
            param,
            value,
            requirement,
        })
    } else {
        Ok(())
    }
}

/// Build a family member. `p` parametrizes H5 (p >= 5) and H12 (p >= 3);
/// `m`,`n` parametrize Kmn; `n` parametrizes Pn, Cn, Kn.
pub fn build_family(id: FamilyId, params: Params) -> Result<FamilyInstance, FamilyError> {
    match id {
        FamilyId::H0 => build_h0(),
        FamilyId::H1 => build_h1(),
        FamilyId::H2 | FamilyId::H3 | FamilyId::H4 => build_h2_h3_h4(id),
        FamilyId::H5 => {
            let p = require(params, "p", id)?;
            range_check(id, "p", p, 5, "p >= 5")?;
            build_h5(p)
        }
        FamilyId::H6 | FamilyId::H7 | FamilyId::H8 | FamilyId::H9 | FamilyId::H10 => {
            build_h6_to_h10(id)
        }
        FamilyId::H11 => build_h11(),
        FamilyId::H12 => {
            let p = require(params, "p", id)?;
            range_check(id, "p", p, 3, "p >= 3")?;
            build_h12(p)
        }
        FamilyId::Kmn => {
            let m = require(params, "m", id)?;
            let n = require(params, "n", id)?;
            range_check(id, "m", m, 1, "m >= 1")?;
            range_check(id, "n", n, 1, "n >= 1")?;
            let mut b = Builder::new(format!("K{{{m},{n}}}"), m + n)?;
            for u in 0..m {
                for v in m..m + n {
                    b.edge(u, v);
                }
            }
            b.role("A", 0..m).role("B", m..m + n);
            Ok(b.finish())
        }
        FamilyId::Pn => {
            let n = require(params, "n", id)?;
            range_check(id, "n", n, 1, "n >= 1")?;
            let mut b = Builder::new(format!("P{n}"), n)?;
            for u in 1..n {
                b.edge(u - 1, u);
            }
            b.role("V", 0..n);
            Ok(b.finish())
        }
        FamilyId::Cn => {
            let n = require(params, "n", id)?;
            range_check(id, "n", n, 3, "n >= 3")?;
            let mut b = Builder::new(format!("C{n}"), n)?;
            for u in 1..n {
                b.edge(u - 1, u);
            }
            b.edge(n - 1, 0);
            b.role("V", 0..n);
            Ok(b.finish())
        }
        FamilyId::Kn => {
            let n = require(params, "n", id)?;
            let mut b = Builder::new(format!("K{n}"), n)?;
            let all: Vec<usize> = (0..n).collect();
            b.clique(&all);
            b.role("V", 0..n);
            Ok(b.finish())
        }
    }
}

/// Two triangles D1, D2 and an independent T of three vertices, t_i tied
/// to the i-th vertex of each triangle. No S side.
fn build_h0() -> Result<FamilyInstance, FamilyError> {
    let mut b = Builder::new("H0".into(), 9)?;
    // T = 0,1,2; D1 = 3,4,5; D2 = 6,7,8
    b.clique(&[3, 4, 5]).clique(&[6, 7, 8]);
    for i in 0..3 {
        b.edge(i, 3 + i).edge(i, 6 + i);
    }
    b.role("S", [])
        .role("T", 0..3)
        .role("D1", 3..6)
        .role("D2", 6..9);
    for i in 0..3 {
        b.role(&format!("t{}", i + 1), [i]);
        b.role(&format!("v{}", i + 1), [3 + i]);
        b.role(&format!("v{}", i + 4), [6 + i]);
    }
    Ok(b.finish())
}

/// S = {x}, T of three vertices each tied to x, D a triangle with t_i
/// tied to its i-th vertex.
fn build_h1() -> Result<FamilyInstance, FamilyError> {
    let mut b = Builder::new("H1".into(), 7)?;
    // x = 0; T = 1,2,3; D = 4,5,6
    b.clique(&[4, 5, 6]);
    for i in 1..=3 {
        b.edge(0, i).edge(i, 3 + i);
    }
    b.role("S", [0])
        .role("T", 1..4)
        .role("D", 4..7)
        .role("x", [0]);
    for i in 1..=3 {
        b.role(&format!("t{i}"), [i]);
        b.role(&format!("v{i}"), [3 + i]);
    }
    Ok(b.finish())
}

/// H2, H3, H4 share the skeleton: S = {x}, T = {t1,t2,t3} tied to x, a
/// four-vertex D with attachments t1-v3, t2-v1, t3-v2. They differ in the
/// edges of D: H2 has all six, H3 drops v2v3, H4 drops v2v3 and v1v3.
fn build_h2_h3_h4(id: FamilyId) -> Result<FamilyInstance, FamilyError> {
    let mut b = Builder::new(id.to_string(), 8)?;
    // x = 0; T = 1,2,3; D: v1 = 4, v2 = 5, v3 = 6, v4 = 7
    for i in 1..=3 {
        b.edge(0, i);
    }
    b.edge(1, 6).edge(2, 4).edge(3, 5);
    let d_edges: &[(usize, usize)] = match id {
        FamilyId::H2 => &[(4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7)],
        FamilyId::H3 => &[(4, 5), (4, 6), (4, 7), (5, 7), (6, 7)],
        FamilyId::H4 => &[(4, 5), (4, 7), (5, 7), (6, 7)],
        _ => unreachable!(),
    };
    for &(u, v) in d_edges {
        b.edge(u, v);
    }
    b.role("S", [0])
        .role("T", 1..4)
        .role("D", 4..8)
        .role("x", [0]);
    for i in 1..=3 {
        b.role(&format!("t{i}"), [i]);
    }
    for i in 1..=4 {
        b.role(&format!("v{i}"), [3 + i]);
    }
    Ok(b.finish())
}

/// S = {x1, x2}, independent T of five vertices joined to both of S, and
/// D = K_p with five distinguished vertices y_i, t_i tied to y_i.
fn build_h5(p: usize) -> Result<FamilyInstance, FamilyError> {
    let n = 7 + p;
    let mut b = Builder::new(format!("H5(p={p})"), n)?;
    // x1 = 0, x2 = 1; T = 2..7; D = 7..7+p with y_i = 7+i-1
    let d: Vec<usize> = (7..n).collect();
    b.clique(&d);
    for i in 0..5 {
        let t = 2 + i;
        b.edge(t, 0).edge(t, 1).edge(t, 7 + i);
    }
    b.role("S", [0, 1]).role("T", 2..7).role("D", 7..n);
    b.role("x1", [0]).role("x2", [1]);
    for i in 0..5 {
        b.role(&format!("t{}", i + 1), [2 + i]);
        b.role(&format!("y{}", i + 1), [7 + i]);
    }
    Ok(b.finish())
}

/// Shared skeleton of H6..H10: S = {x1,x2} joined to all of T (five
/// vertices), D on six vertices v0..v5 where v0 is the only D-vertex with
/// no T edge, v0 adjacent to v1..v5, and t_i tied to v_i. The families
/// differ in how D - v0 looks.
fn build_h6_to_h10(id: FamilyId) -> Result<FamilyInstance, FamilyError> {
    let mut b = Builder::new(id.to_string(), 13)?;
    // x1 = 0, x2 = 1; T = 2..7; v0 = 7, v1..v5 = 8..13
    for t in 2..7 {
        b.edge(t, 0).edge(t, 1);
    }
    for i in 0..5 {
        b.edge(2 + i, 8 + i);
        b.edge(7, 8 + i);
    }
    match id {
        // D - v0 = K1 + K4, the isolated v1 leaning on S
        FamilyId::H6 => {
            b.clique(&[9, 10, 11, 12]);
            b.edge(8, 0);
        }
        // D - v0 = K2 + K3
        FamilyId::H7 => {
            b.edge(8, 9);
            b.clique(&[10, 11, 12]);
        }
        // D - v0 has cutvertex v2: pendant v1, then a K3
        FamilyId::H8 => {
            b.edge(8, 9).edge(9, 10);
            b.clique(&[10, 11, 12]);
        }
        // D - v0 is two triangles sharing v3
        FamilyId::H9 => {
            b.clique(&[8, 9, 10]).clique(&[10, 11, 12]);
        }
        // D - v0 is a spanning C5 (so D is a wheel)
        FamilyId::H10 => {
            b.edge(8, 9)
                .edge(9, 10)
                .edge(10, 11)
                .edge(11, 12)
                .edge(12, 8);
        }
        _ => unreachable!(),
    }
    b.role("S", [0, 1]).role("T", 2..7).role("D", 7..13);
    b.role("x1", [0]).role("x2", [1]).role("v0", [7]);
    for i in 0..5 {
        b.role(&format!("t{}", i + 1), [2 + i]);
        b.role(&format!("v{}", i + 1), [8 + i]);
    }
    Ok(b.finish())
}

/// S = {x1,x2} joined to all of T (five vertices); two disjoint triangles
/// D1 = {v1,v2,v3}, D2 = {v4,v5,v6}; t3 bridges the triangles through v3
/// and v4, the other T vertices take one triangle vertex each.
fn build_h11() -> Result<FamilyInstance, FamilyError> {
    let mut b = Builder::new("H11".into(), 13)?;
    // x1 = 0, x2 = 1; T = 2..7; D1 = 7,8,9; D2 = 10,11,12
    for t in 2..7 {
        b.edge(t, 0).edge(t, 1);
    }
    b.clique(&[7, 8, 9]).clique(&[10, 11, 12]);
    b.edge(2, 7) // t1 - v1
        .edge(3, 8) // t2 - v2
        .edge(4, 9) // t3 - v3
        .edge(4, 10) // t3 - v4
        .edge(5, 11) // t4 - v5
        .edge(6, 12); // t5 - v6
    b.role("S", [0, 1])
        .role("T", 2..7)
        .role("D1", 7..10)
        .role("D2", 10..13);
    b.role("x1", [0]).role("x2", [1]);
    for i in 0..5 {
        b.role(&format!("t{}", i + 1), [2 + i]);
    }
    for i in 0..6 {
        b.role(&format!("v{}", i + 1), [7 + i]);
    }
    Ok(b.finish())
}

/// S = {x}, T of three vertices each tied to x, D = K_p with three
/// distinguished vertices y_i, t_i tied to y_i.
fn build_h12(p: usize) -> Result<FamilyInstance, FamilyError> {
    let n = 4 + p;
    let mut b = Builder::new(format!("H12(p={p})"), n)?;
    // x = 0; T = 1,2,3; D = 4..4+p with y_i = 3+i
    let d: Vec<usize> = (4..n).collect();
    b.clique(&d);
    for i in 1..=3 {
        b.edge(i, 0).edge(i, 3 + i);
    }
    b.role("S", [0])
        .role("T", 1..4)
        .role("D", 4..n)
        .role("x", [0]);
    for i in 1..=3 {
        b.role(&format!("t{i}"), [i]);
        b.role(&format!("y{i}"), [3 + i]);
    }
    Ok(b.finish())
}

/// One row of the claims table: a concrete family member together with
/// its claimed toughness, forbidden patterns, and 2-factor status.
#[derive(Debug, Clone)]
pub struct CatalogClaim {
    pub instance: FamilyInstance,
    pub toughness: Rational,
    pub r_free: Vec<LinearForestPattern>,
    pub has_two_factor: bool,
}

fn pat(s: &str) -> LinearForestPattern {
    LinearForestPattern::parse(s).expect("catalog patterns are well-formed")
}

/// The full claims table the acceptance suite replays: every H family at
/// its admissible parameters plus the unbalanced complete bipartite runs.
pub fn catalog() -> Vec<CatalogClaim> {
    let mut rows = Vec::new();
    let h01234 = [
        FamilyId::H0,
        FamilyId::H1,
        FamilyId::H2,
        FamilyId::H3,
        FamilyId::H4,
    ];
    for id in h01234 {
        let mut r_free = vec![pat("P2+3P1")];
        if id == FamilyId::H1 {
            r_free.push(pat("P3+2P1"));
        }
        rows.push(CatalogClaim {
            instance: build_family(id, Params::none()).unwrap(),
            toughness: Rational::ONE,
            r_free,
            has_two_factor: false,
        });
    }
    rows.push(CatalogClaim {
        instance: build_family(FamilyId::H5, Params::p(5)).unwrap(),
        toughness: Rational::new(6, 5),
        r_free: vec![pat("P3+4P1"), pat("P2+5P1"), pat("6P1")],
        has_two_factor: false,
    });
    for p in 6..=9 {
        // (P2+5P1)-freeness genuinely fails for p >= 7: two clique
        // vertices away from T plus all of T form an induced copy. Only
        // the 7P1 claim survives for large p.
        rows.push(CatalogClaim {
            instance: build_family(FamilyId::H5, Params::p(p)).unwrap(),
            toughness: Rational::new(7, 6),
            r_free: vec![pat("7P1")],
            has_two_factor: false,
        });
    }
    for id in [
        FamilyId::H6,
        FamilyId::H7,
        FamilyId::H8,
        FamilyId::H9,
        FamilyId::H10,
        FamilyId::H11,
    ] {
        rows.push(CatalogClaim {
            instance: build_family(id, Params::none()).unwrap(),
            toughness: Rational::new(7, 6),
            r_free: vec![pat("P2+5P1")],
            has_two_factor: false,
        });
    }
    for p in 3..=8 {
        rows.push(CatalogClaim {
            instance: build_family(FamilyId::H12, Params::p(p)).unwrap(),
            toughness: Rational::ONE,
            r_free: vec![pat("5P1"), pat("P4+2P1")],
            has_two_factor: false,
        });
    }
    for n in 2..=6 {
        rows.push(CatalogClaim {
            instance: build_family(FamilyId::Kmn, Params::mn(n, n - 1)).unwrap(),
            toughness: Rational::new(n as u64 - 1, n as u64),
            r_free: vec![pat("P4")],
            has_two_factor: false,
        });
    }
    rows
}
