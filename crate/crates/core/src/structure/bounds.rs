use alloc::format;
use alloc::vec;

use super::matching::max_matching;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

fn choose2(x: u128) -> u128 {
    x * x.saturating_sub(1) / 2
}

/// Most edges an `n`-vertex graph can have when its maximum matching has
/// `k` edges: `max(C(2k+1, 2), C(k, 2) + (n−k)k)`.
pub fn erdos_gallai_max_edges(n: usize, k: usize) -> Result<u128> {
    if 2 * k > n {
        return Err(Error::Domain(format!("matching size {k} exceeds n/2 for n = {n}")));
    }
    let (n, k) = (n as u128, k as u128);
    Ok(choose2(2 * k + 1).max(choose2(k) + (n - k) * k))
}

/// Whether `g` respects the matching-number edge bound. Always true; a
/// false answer means a bug in matching or counting.
pub fn verify_erdos_gallai(g: &SimpleGraph) -> bool {
    let k = max_matching(g).len();
    match erdos_gallai_max_edges(g.n(), k) {
        Ok(bound) => g.edge_count() as u128 <= bound,
        Err(_) => false,
    }
}

/// For a bipartite `g` with parts `left` and `right` (every vertex in
/// exactly one, no edge inside a part): true iff a maximum matching of at
/// most `k` edges forces at most `k·n` edges, `n` the larger part size.
pub fn konig_edge_bound_check(
    g: &SimpleGraph,
    left: &[usize],
    right: &[usize],
    k: usize,
) -> Result<bool> {
    let mut side = vec![None; g.n()];
    for (s, part) in [left, right].into_iter().enumerate() {
        for &v in part {
            if v >= g.n() {
                return Err(Error::Domain(format!("vertex {v} out of range")));
            }
            if side[v].is_some() {
                return Err(Error::Domain(format!("vertex {v} listed twice")));
            }
            side[v] = Some(s);
        }
    }
    if let Some(v) = side.iter().position(Option::is_none) {
        return Err(Error::Domain(format!("vertex {v} is in neither part")));
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| side[u] == side[v]) {
        return Err(Error::Domain(format!("edge ({u},{v}) lies inside a part")));
    }
    let n = left.len().max(right.len());
    if max_matching(g).len() > k {
        return Ok(true);
    }
    Ok(g.edge_count() <= k * n)
}
