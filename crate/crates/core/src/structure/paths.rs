use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::matching::max_matching;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::par::map_range;

/// Largest host graph for the backtracking exact mode.
pub const MAX_EXACT_PATHS_N: usize = 14;
/// Path lengths up to this are solved exactly by a matching argument at any `n`.
pub const MATCHING_EXACT_MAX_LEN: usize = 3;

/// Internally vertex-disjoint `u`–`v` paths of length at most `max_len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointPathCert {
    pub u: usize,
    pub v: usize,
    pub max_len: usize,
    pub paths: Vec<Vec<usize>>,
}

impl DisjointPathCert {
    pub fn t_certified(&self) -> usize {
        self.paths.len()
    }

    /// Checks every path against `g` independently of how it was found.
    pub fn validate(&self, g: &SimpleGraph) -> Result<()> {
        let bad = |msg: alloc::string::String| Err(Error::Internal(msg));
        let mut used = vec![false; g.n()];
        for p in &self.paths {
            if p.first() != Some(&self.u) || p.last() != Some(&self.v) {
                return bad(format!("path {p:?} does not join {} and {}", self.u, self.v));
            }
            if p.len() < 2 || p.len() - 1 > self.max_len {
                return bad(format!("path {p:?} has bad length"));
            }
            if p.windows(2).any(|w| w[0] >= g.n() || w[1] >= g.n() || !g.has_edge(w[0], w[1])) {
                return bad(format!("path {p:?} uses a non-edge"));
            }
            for &x in &p[1..p.len() - 1] {
                if x == self.u || x == self.v || used[x] {
                    return bad(format!("interior vertex {x} reused"));
                }
                used[x] = true;
            }
        }
        let direct = self.paths.iter().filter(|p| p.len() == 2).count();
        if direct > 1 {
            return bad("direct edge used twice".into());
        }
        Ok(())
    }
}

fn check_endpoints(g: &SimpleGraph, u: usize, v: usize, l: usize) -> Result<()> {
    if u >= g.n() || v >= g.n() {
        return Err(Error::Domain(format!("endpoint out of range for n = {}", g.n())));
    }
    if u == v {
        return Err(Error::Domain("endpoints must differ".into()));
    }
    if l == 0 {
        return Err(Error::Domain("maximum length must be at least 1".into()));
    }
    Ok(())
}

/// Shortest `u`–`v` path avoiding `used` interiors and not the direct edge.
fn shortest_detour(g: &SimpleGraph, u: usize, v: usize, l: usize, used: &[bool]) -> Option<Vec<usize>> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut dist = vec![usize::MAX; n];
    let mut queue = alloc::collections::VecDeque::new();
    dist[u] = 0;
    queue.push_back(u);
    while let Some(x) = queue.pop_front() {
        if dist[x] + 1 >= l {
            continue;
        }
        for w in g.neighbors(x) {
            if w == v || used[w] || dist[w] != usize::MAX {
                continue;
            }
            dist[w] = dist[x] + 1;
            parent[w] = x;
            if g.has_edge(w, v) {
                let mut path = vec![v, w];
                let mut cur = w;
                while parent[cur] != usize::MAX {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            queue.push_back(w);
        }
    }
    None
}

/// Greedy shortest-first extraction: the direct edge, then repeatedly a
/// shortest path through unused interior vertices, until `t_target` paths
/// are found or none remain. A lower bound on the true maximum.
pub fn disjoint_short_paths(
    g: &SimpleGraph,
    u: usize,
    v: usize,
    l: usize,
    t_target: usize,
) -> Result<DisjointPathCert> {
    check_endpoints(g, u, v, l)?;
    let mut cert = DisjointPathCert { u, v, max_len: l, paths: Vec::new() };
    if t_target == 0 {
        return Ok(cert);
    }
    if g.has_edge(u, v) {
        cert.paths.push(vec![u, v]);
    }
    let mut used = vec![false; g.n()];
    while cert.paths.len() < t_target {
        match shortest_detour(g, u, v, l, &used) {
            Some(p) => {
                for &x in &p[1..p.len() - 1] {
                    used[x] = true;
                }
                cert.paths.push(p);
            }
            None => break,
        }
    }
    Ok(cert)
}

/// Exact maximum for `l <= 3`. Any optimal family can be rearranged so that
/// every common neighbour carries its own length-2 path, so the answer is
/// the direct edge, the common neighbours, and a maximum matching between
/// the private neighbourhoods.
fn exact_short(g: &SimpleGraph, u: usize, v: usize, l: usize) -> DisjointPathCert {
    let mut paths = Vec::new();
    if g.has_edge(u, v) {
        paths.push(vec![u, v]);
    }
    if l >= 2 {
        let common: Vec<usize> = g
            .neighbors(u)
            .filter(|&x| x != v && g.has_edge(x, v))
            .collect();
        paths.extend(common.iter().map(|&c| vec![u, c, v]));
        if l >= 3 {
            let a: Vec<usize> = g
                .neighbors(u)
                .filter(|&x| x != v && !g.has_edge(x, v))
                .collect();
            let b: Vec<usize> = g
                .neighbors(v)
                .filter(|&y| y != u && !g.has_edge(y, u))
                .collect();
            let mut bip = SimpleGraph::empty(a.len() + b.len());
            for (i, &x) in a.iter().enumerate() {
                for (j, &y) in b.iter().enumerate() {
                    if g.has_edge(x, y) {
                        bip.add_edge(i, a.len() + j);
                    }
                }
            }
            for (i, j) in max_matching(&bip) {
                paths.push(vec![u, a[i], b[j - a.len()], v]);
            }
        }
    }
    DisjointPathCert { u, v, max_len: l, paths }
}

/// Exact maximum for `n <= 14` at any `l`: the minimal interior sets of
/// short `u`–`v` paths, then a memoised packing over available vertices.
fn exact_backtrack(g: &SimpleGraph, u: usize, v: usize, l: usize) -> DisjointPathCert {
    let n = g.n();
    let size = 1usize << n;
    let forbid = (1u32 << u) | (1u32 << v);
    let adj: Vec<u32> = (0..n).map(|x| g.mask64(x) as u32).collect();
    // reach[m]: ends e such that some u-path visits exactly m and ends at e
    let mut reach = vec![0u32; size];
    for w in 0..n {
        if adj[u] >> w & 1 == 1 && forbid >> w & 1 == 0 {
            reach[1 << w] |= 1 << w;
        }
    }
    let max_interior = l.saturating_sub(1);
    let mut valid = vec![false; size];
    for m in 1..size {
        if m as u32 & forbid != 0 || reach[m] == 0 {
            continue;
        }
        let k = m.count_ones() as usize;
        if k > max_interior {
            continue;
        }
        if reach[m] & adj[v] != 0 {
            valid[m] = true;
        }
        if k == max_interior {
            continue;
        }
        let mut ends = reach[m];
        while ends != 0 {
            let e = ends.trailing_zeros() as usize;
            ends &= ends - 1;
            let mut next = adj[e] & !(m as u32) & !forbid;
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                reach[m | 1 << w] |= 1 << w;
            }
        }
    }
    // keep only inclusion-minimal interior sets
    let mut has_valid_subset = valid.clone();
    for b in 0..n {
        for m in 0..size {
            if m >> b & 1 == 1 && has_valid_subset[m ^ (1 << b)] {
                has_valid_subset[m] = true;
            }
        }
    }
    let mut by_min: Vec<Vec<u32>> = vec![Vec::new(); n];
    for m in 1..size {
        if valid[m] && (0..n).all(|b| m >> b & 1 == 0 || !has_valid_subset[m ^ (1 << b)]) {
            by_min[m.trailing_zeros() as usize].push(m as u32);
        }
    }
    // best[avail]: most disjoint sets inside avail
    let all = (size - 1) as u32 & !forbid;
    let mut best = vec![u8::MAX; size];
    fn solve(avail: u32, by_min: &[Vec<u32>], best: &mut [u8]) -> u8 {
        if avail == 0 {
            return 0;
        }
        if best[avail as usize] != u8::MAX {
            return best[avail as usize];
        }
        let w = avail.trailing_zeros() as usize;
        let mut r = solve(avail & (avail - 1), by_min, best);
        for &s in &by_min[w] {
            if s & !avail == 0 {
                r = r.max(1 + solve(avail & !s, by_min, best));
            }
        }
        best[avail as usize] = r;
        r
    }
    let mut chosen = Vec::new();
    let mut avail = all;
    let mut left = solve(avail, &by_min, &mut best);
    while left > 0 {
        let w = avail.trailing_zeros() as usize;
        let rest = avail & (avail - 1);
        if solve(rest, &by_min, &mut best) == left {
            avail = rest;
            continue;
        }
        let s = *by_min[w]
            .iter()
            .find(|&&s| s & !avail == 0 && 1 + solve(avail & !s, &by_min, &mut best) == left)
            .expect("a set realises the optimum");
        chosen.push(s);
        avail &= !s;
        left -= 1;
    }
    let mut paths = Vec::new();
    if g.has_edge(u, v) {
        paths.push(vec![u, v]);
    }
    for s in chosen {
        paths.push(path_through(&adj, u, v, s, &reach));
    }
    DisjointPathCert { u, v, max_len: l, paths }
}

/// A `u`–`v` path whose interior is exactly `s`, rebuilt from `reach`.
fn path_through(adj: &[u32], u: usize, v: usize, s: u32, reach: &[u32]) -> Vec<usize> {
    let mut rev = vec![v];
    let mut m = s;
    let mut next = v;
    while m != 0 {
        let ends = reach[m as usize] & adj[next];
        let e = ends.trailing_zeros() as usize;
        rev.push(e);
        m &= !(1 << e);
        next = e;
    }
    rev.push(u);
    rev.reverse();
    rev
}

/// The exact maximum number of disjoint short paths when an exact mode
/// applies (`l <= 3`, or `n <= 14`), with the paths realising it.
pub fn exact_disjoint_paths(g: &SimpleGraph, u: usize, v: usize, l: usize) -> Result<Option<DisjointPathCert>> {
    check_endpoints(g, u, v, l)?;
    if l <= MATCHING_EXACT_MAX_LEN {
        Ok(Some(exact_short(g, u, v, l)))
    } else if g.n() <= MAX_EXACT_PATHS_N {
        Ok(Some(exact_backtrack(g, u, v, l)))
    } else {
        Ok(None)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Certified,
    Refuted,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WellConnected {
    pub verdict: Verdict,
    /// One certificate per pair reaching `t`.
    pub certificates: Vec<DisjointPathCert>,
    /// A pair proved to fall short, with its exact count or upper bound.
    pub refuted_pair: Option<(usize, usize, usize)>,
    /// Pairs left undecided.
    pub unknown_pairs: Vec<(usize, usize)>,
}

enum PairOutcome {
    Certified(DisjointPathCert),
    Refuted(usize),
    Unknown,
}

fn check_pair(g: &SimpleGraph, u: usize, v: usize, t: usize, l: usize) -> Result<PairOutcome> {
    let greedy = disjoint_short_paths(g, u, v, l, t)?;
    if greedy.t_certified() >= t {
        return Ok(PairOutcome::Certified(greedy));
    }
    if let Some(exact) = exact_disjoint_paths(g, u, v, l)? {
        return Ok(if exact.t_certified() >= t {
            let mut exact = exact;
            exact.paths.truncate(t);
            PairOutcome::Certified(exact)
        } else {
            PairOutcome::Refuted(exact.t_certified())
        });
    }
    let dist = g.bfs_distances(u, None)[v];
    if !matches!(dist, Some(d) if d <= l) {
        return Ok(PairOutcome::Refuted(0));
    }
    let direct = g.has_edge(u, v) as usize;
    let upper = direct + (g.degree(u) - direct).min(g.degree(v) - direct);
    if upper < t {
        return Ok(PairOutcome::Refuted(upper));
    }
    Ok(PairOutcome::Unknown)
}

/// Whether every pair of `w` is joined by `t` internally disjoint paths of
/// length at most `l` (interiors may leave `w`).
pub fn well_connected_check(g: &SimpleGraph, w: &[usize], t: usize, l: usize) -> Result<WellConnected> {
    if t == 0 || l == 0 {
        return Err(Error::Domain("t and l must be at least 1".into()));
    }
    if let Some(&x) = w.iter().find(|&&x| x >= g.n()) {
        return Err(Error::Domain(format!("vertex {x} out of range")));
    }
    let pairs: Vec<(usize, usize)> = (0..w.len())
        .flat_map(|i| (i + 1..w.len()).map(move |j| (i, j)))
        .map(|(i, j)| (w[i], w[j]))
        .filter(|(a, b)| a != b)
        .collect();
    let outcomes = map_range(pairs.len(), |i| check_pair(g, pairs[i].0, pairs[i].1, t, l));
    let mut report = WellConnected {
        verdict: Verdict::Certified,
        certificates: Vec::new(),
        refuted_pair: None,
        unknown_pairs: Vec::new(),
    };
    for (&(a, b), outcome) in pairs.iter().zip(outcomes) {
        match outcome? {
            PairOutcome::Certified(c) => report.certificates.push(c),
            PairOutcome::Refuted(k) => {
                if report.refuted_pair.is_none() {
                    report.refuted_pair = Some((a, b, k));
                }
            }
            PairOutcome::Unknown => report.unknown_pairs.push((a, b)),
        }
    }
    report.verdict = if report.refuted_pair.is_some() {
        Verdict::Refuted
    } else if !report.unknown_pairs.is_empty() {
        Verdict::Unknown
    } else {
        Verdict::Certified
    };
    Ok(report)
}
