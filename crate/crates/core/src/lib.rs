//! Exact combinatorics of 2-factors and toughness on small graphs.
//!
//! The crate decides 2-factor existence two independent ways (a gadget
//! reduction to perfect matching, and barrier enumeration over disjoint
//! vertex pairs), computes toughness with exact rational arithmetic,
//! detects induced linear forests, constructs the extremal families
//! H0..H12, and drives exhaustive verification scans over graph6 streams.

pub mod factor;
pub mod families;
pub mod forbidden;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod toughness;

pub use factor::{
    evaluate_delta, find_barrier, find_biased_barrier, find_two_factor, has_two_factor,
    BarrierPair, TwoFactor,
};
pub use families::{
    build_family, catalog, check_spanning_exception, FamilyId, FamilyInstance, Params,
};
pub use forbidden::{find_induced, is_r_free, Embedding, LinearForestPattern};
pub use graph::{Graph, VertexSet};
pub use graph6::{encode_graph6, parse_graph6};
pub use harness::{
    enumerate_small_graphs, scan, verify_case, ClauseSpec, ScanReport, Status, Verdict,
};
pub use toughness::{is_t_tough, toughness, toughsets, Rational};
