//! Maximum matchings, the matching-number edge bounds, and bounded-length
//! internally disjoint paths with a three-valued well-connectedness check.

mod bounds;
mod matching;
mod paths;

pub use bounds::{erdos_gallai_max_edges, konig_edge_bound_check, verify_erdos_gallai};
pub use matching::{is_matching, max_matching};
pub use paths::{
    disjoint_short_paths, exact_disjoint_paths, well_connected_check, DisjointPathCert, Verdict,
    WellConnected, MATCHING_EXACT_MAX_LEN, MAX_EXACT_PATHS_N,
};
