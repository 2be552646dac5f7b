//! Exact counts of monochromatic paths, cycles, stars and small cliques.
//!
//! All counts are of unlabeled copies. Paths and cycles are counted by a
//! dynamic program over `(vertex subset, last vertex)` states restricted to
//! subsets of at most `k` vertices: a dense table when `n <= 16`, otherwise
//! one layer of ranked subsets at a time. Paths are counted as vertex
//! sequences and halved; cycles are anchored at their smallest vertex, grown
//! through larger vertices only, closed back to the anchor and halved.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::coloring::{pair_count, Color, ColorView, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Largest host size for path and cycle counting.
pub const MAX_SUBSET_DP_N: usize = 24;
const DENSE_DP_N: usize = 16;
/// Largest clique order supported by [`Pattern::Clique`].
pub const MAX_CLIQUE_K: usize = 5;

/// A pattern graph whose monochromatic copies are counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pattern {
    /// `P_k`: `k` vertices, `k − 1` edges.
    Path(usize),
    /// `C_k`: `k >= 3` vertices and edges.
    Cycle(usize),
    /// `K_{1,k}`: a center and `k` leaves.
    Star(usize),
    /// `K_k` for `k <= 5`; `K_3` is the triangle.
    Clique(usize),
}

impl Pattern {
    pub const TRIANGLE: Pattern = Pattern::Clique(3);

    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            Pattern::Path(k) => k >= 1,
            Pattern::Cycle(k) => k >= 3,
            Pattern::Star(k) => k >= 1,
            Pattern::Clique(k) => (1..=MAX_CLIQUE_K).contains(&k),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Domain(format!("unsupported pattern {self}")))
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            Pattern::Path(k) | Pattern::Cycle(k) | Pattern::Clique(k) => k,
            Pattern::Star(k) => k + 1,
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Pattern::Path(k) => write!(f, "P_{k}"),
            Pattern::Cycle(k) => write!(f, "C_{k}"),
            Pattern::Star(k) => write!(f, "S_{k}"),
            Pattern::Clique(k) => write!(f, "K{k}"),
        }
    }
}

/// Parses `P_k`, `C_k`, `S_k` (star with `k` leaves), `K3` and `K_k`.
impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Pattern> {
        let bad = || Error::Domain(format!("unknown pattern {s:?}; expected P_k, C_k, S_k or K3"));
        let s = s.trim();
        let (head, rest) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let digits = rest.strip_prefix('_').unwrap_or(rest);
        if digits.is_empty() || (head != "K" && !rest.starts_with('_')) {
            return Err(bad());
        }
        let k: usize = digits.parse().map_err(|_| bad())?;
        let p = match head {
            "P" => Pattern::Path(k),
            "C" => Pattern::Cycle(k),
            "S" => Pattern::Star(k),
            "K" => Pattern::Clique(k),
            _ => return Err(bad()),
        };
        p.validate()?;
        Ok(p)
    }
}

/// A nonnegative count of monochromatic copies.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct MonoCount(pub BigUint);

impl MonoCount {
    pub fn zero() -> MonoCount {
        MonoCount(BigUint::zero())
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn to_u128(&self) -> Option<u128> {
        self.0.to_u128()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_decimal(&self) -> String {
        self.0.to_str_radix(10)
    }
}

impl From<u128> for MonoCount {
    fn from(v: u128) -> Self {
        MonoCount(BigUint::from(v))
    }
}

impl From<u64> for MonoCount {
    fn from(v: u64) -> Self {
        MonoCount(BigUint::from(v))
    }
}

impl From<BigUint> for MonoCount {
    fn from(v: BigUint) -> Self {
        MonoCount(v)
    }
}

impl core::ops::Add for MonoCount {
    type Output = MonoCount;
    fn add(self, o: MonoCount) -> MonoCount {
        MonoCount(self.0 + o.0)
    }
}

impl fmt::Display for MonoCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// `C(n, k)` as a big integer.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Falling factorial `(n)_k = n (n−1) ⋯ (n−k+1)`.
pub fn falling(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i))
}

pub fn factorial(n: u64) -> BigUint {
    falling(n, n)
}

pub(crate) fn binomial_u128(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc.checked_mul(n as u128 - i)? / (i + 1);
    }
    Some(acc)
}

fn adjacency_masks(g: &SimpleGraph) -> Vec<u32> {
    debug_assert!(g.n() <= 32);
    (0..g.n()).map(|v| g.mask64(v) as u32).collect()
}

pub(crate) fn view_masks(view: &ColorView<'_>) -> Vec<u32> {
    let n = view.n();
    let mut adj = vec![0u32; n];
    for i in 0..n {
        for j in i + 1..n {
            if view.adjacent(i, j) {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

fn guard_subset_dp(n: usize, what: &str) -> Result<()> {
    if n > MAX_SUBSET_DP_N {
        return Err(Error::Capability(format!(
            "{what} counting supports n <= {MAX_SUBSET_DP_N}, got n={n}"
        )));
    }
    Ok(())
}

/// Directed `k`-vertex path sequences (`anchored = false`) or, with
/// `anchored = true`, directed `k`-cycles rooted at their minimum vertex.
pub(crate) fn sequence_count(adj: &[u32], k: usize, anchored: bool) -> u128 {
    let n = adj.len();
    if k == 0 || k > n {
        return 0;
    }
    if n <= DENSE_DP_N {
        dense_sequences(adj, k, anchored)
    } else if k <= 21 {
        layered_sequences::<u64>(adj, k, anchored)
    } else {
        layered_sequences::<u128>(adj, k, anchored)
    }
}

fn dense_sequences(adj: &[u32], k: usize, anchored: bool) -> u128 {
    let n = adj.len();
    let full = 1usize << n;
    let mut dp = vec![0u64; full * n];
    for v in 0..n {
        dp[(1 << v) * n + v] = 1;
    }
    let mut total: u128 = 0;
    for mask in 1..full {
        let size = mask.count_ones() as usize;
        if size > k {
            continue;
        }
        let low = mask.trailing_zeros() as usize;
        let row = &dp[mask * n..mask * n + n];
        if size == k {
            for end in 0..n {
                let val = row[end];
                if val != 0 && (!anchored || (k >= 3 && adj[end] >> low & 1 == 1)) {
                    total += val as u128;
                }
            }
            continue;
        }
        let allowed: u32 = if anchored {
            !((1u32 << (low + 1)).wrapping_sub(1)) & !(mask as u32)
        } else {
            !(mask as u32)
        };
        let mut ends = mask as u32;
        while ends != 0 {
            let end = ends.trailing_zeros() as usize;
            ends &= ends - 1;
            let val = dp[mask * n + end];
            if val == 0 {
                continue;
            }
            let mut ext = adj[end] & allowed;
            while ext != 0 {
                let w = ext.trailing_zeros() as usize;
                ext &= ext - 1;
                dp[(mask | 1 << w) * n + w] += val;
            }
        }
    }
    total
}

trait Acc: Copy + Default + core::ops::AddAssign + Into<u128> {
    fn one() -> Self;
}

impl Acc for u64 {
    fn one() -> Self {
        1
    }
}

impl Acc for u128 {
    fn one() -> Self {
        1
    }
}

/// Colex rank of a mask among masks of equal popcount.
fn colex_rank(mask: u32, choose: &[Vec<usize>]) -> usize {
    let mut rank = 0;
    let mut m = mask;
    let mut i = 1;
    while m != 0 {
        let p = m.trailing_zeros() as usize;
        m &= m - 1;
        rank += choose[p][i];
        i += 1;
    }
    rank
}

/// Next mask with the same popcount (Gosper); masks come out in colex order.
fn next_same_popcount(x: u32) -> u32 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

fn layered_sequences<T: Acc>(adj: &[u32], k: usize, anchored: bool) -> u128 {
    let n = adj.len();
    let mut choose = vec![vec![0usize; n + 2]; n + 1];
    for a in 0..=n {
        choose[a][0] = 1;
        for b in 1..=a {
            choose[a][b] = choose[a - 1][b - 1] + if b <= a - 1 { choose[a - 1][b] } else { 0 };
        }
    }
    // Layer j stores, for each j-subset in colex order, one slot per vertex
    // of the subset (ordered by vertex index).
    let mut layer: Vec<T> = vec![T::one(); n];
    let limit: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    for j in 1..k {
        let size_next = choose[n][j + 1];
        let mut next: Vec<T> = vec![T::default(); size_next * (j + 1)];
        let mut mask: u32 = (1u32 << j) - 1;
        let mut rank = 0usize;
        loop {
            let low = mask.trailing_zeros() as usize;
            let allowed = if anchored {
                !((1u32 << (low + 1)).wrapping_sub(1)) & !mask & limit
            } else {
                !mask & limit
            };
            let mut ends = mask;
            let mut slot = 0;
            while ends != 0 {
                let end = ends.trailing_zeros() as usize;
                ends &= ends - 1;
                let val = layer[rank * j + slot];
                slot += 1;
                if val.into() == 0 {
                    continue;
                }
                let mut ext = adj[end] & allowed;
                while ext != 0 {
                    let w = ext.trailing_zeros() as usize;
                    ext &= ext - 1;
                    let sup = mask | 1 << w;
                    let r = colex_rank(sup, &choose);
                    let pos = (sup & ((1u32 << w) - 1)).count_ones() as usize;
                    next[r * (j + 1) + pos] += val;
                }
            }
            rank += 1;
            if rank == choose[n][j] {
                break;
            }
            mask = next_same_popcount(mask);
        }
        layer = next;
    }
    let mut total: u128 = 0;
    let mut mask: u32 = (1u32 << k) - 1;
    for rank in 0..choose[n][k] {
        let low = mask.trailing_zeros() as usize;
        let mut ends = mask;
        let mut slot = 0;
        while ends != 0 {
            let end = ends.trailing_zeros() as usize;
            ends &= ends - 1;
            let val: u128 = layer[rank * k + slot].into();
            slot += 1;
            if val != 0 && (!anchored || (k >= 3 && adj[end] >> low & 1 == 1)) {
                total += val;
            }
        }
        if rank + 1 < choose[n][k] {
            mask = next_same_popcount(mask);
        }
    }
    total
}

pub(crate) fn paths_from_masks(adj: &[u32], k: usize) -> u128 {
    let seq = sequence_count(adj, k, false);
    if k >= 2 {
        seq / 2
    } else {
        seq
    }
}

pub(crate) fn cycles_from_masks(adj: &[u32], k: usize) -> u128 {
    if k < 3 {
        return 0;
    }
    sequence_count(adj, k, true) / 2
}

/// Number of `k`-vertex paths in `g` (`n <= 24`).
pub fn count_paths_in(g: &SimpleGraph, k: usize) -> Result<MonoCount> {
    if k == 0 {
        return Err(Error::Domain("path patterns need k >= 1".into()));
    }
    guard_subset_dp(g.n(), "path")?;
    Ok(paths_from_masks(&adjacency_masks(g), k).into())
}

/// Number of `k`-vertex cycles in `g` (`n <= 24`).
pub fn count_cycles_in(g: &SimpleGraph, k: usize) -> Result<MonoCount> {
    if k < 3 {
        return Err(Error::Domain("cycle patterns need k >= 3".into()));
    }
    guard_subset_dp(g.n(), "cycle")?;
    Ok(cycles_from_masks(&adjacency_masks(g), k).into())
}

/// Stars `K_{1,k}`: `Σ_u C(deg u, k)`. For `k = 1` the star is an edge and
/// each edge is counted once.
pub fn count_stars_in(g: &SimpleGraph, k: usize) -> Result<MonoCount> {
    if k == 0 {
        return Err(Error::Domain("stars need k >= 1 leaves".into()));
    }
    if k == 1 {
        return Ok(MonoCount(BigUint::from(g.edge_count())));
    }
    let mut total = BigUint::zero();
    for u in 0..g.n() {
        total += binomial(g.degree(u) as u64, k as u64);
    }
    Ok(MonoCount(total))
}

pub fn count_triangles_in(g: &SimpleGraph) -> MonoCount {
    count_cliques_in(g, 3).expect("k=3 is supported")
}

/// Copies of `K_k` (`1 <= k <= 5`) by nested bitset intersection.
pub fn count_cliques_in(g: &SimpleGraph, k: usize) -> Result<MonoCount> {
    Pattern::Clique(k).validate()?;
    let n = g.n();
    let words = n.div_ceil(64);
    fn rec(g: &SimpleGraph, cand: &[u64], depth: usize) -> u128 {
        if depth == 0 {
            return 1;
        }
        if depth == 1 {
            return cand.iter().map(|w| w.count_ones() as u128).sum();
        }
        let mut total = 0;
        for v in crate::graph::iter_bits(cand) {
            // only neighbours above v, so each clique is built in increasing order
            let next: Vec<u64> = g
                .row(v)
                .iter()
                .zip(cand)
                .enumerate()
                .map(|(wi, (a, b))| {
                    let above = if wi * 64 > v {
                        u64::MAX
                    } else if (wi + 1) * 64 <= v + 1 {
                        0
                    } else {
                        let bit = v % 64;
                        if bit == 63 { 0 } else { !((1u64 << (bit + 1)) - 1) }
                    };
                    a & b & above
                })
                .collect();
            total += rec(g, &next, depth - 1);
        }
        total
    }
    let mut all = vec![0u64; words];
    for v in 0..n {
        all[v / 64] |= 1 << (v % 64);
    }
    Ok(rec(g, &all, k).into())
}

pub fn count_paths(view: &ColorView<'_>, k: usize) -> Result<MonoCount> {
    if k == 0 {
        return Err(Error::Domain("path patterns need k >= 1".into()));
    }
    guard_subset_dp(view.n(), "path")?;
    Ok(paths_from_masks(&view_masks(view), k).into())
}

pub fn count_cycles(view: &ColorView<'_>, k: usize) -> Result<MonoCount> {
    if k < 3 {
        return Err(Error::Domain("cycle patterns need k >= 3".into()));
    }
    guard_subset_dp(view.n(), "cycle")?;
    Ok(cycles_from_masks(&view_masks(view), k).into())
}

pub fn count_stars(view: &ColorView<'_>, k: usize) -> Result<MonoCount> {
    count_stars_in(&view.to_graph(), k)
}

pub fn count_triangles(view: &ColorView<'_>) -> MonoCount {
    count_triangles_in(&view.to_graph())
}

/// Copies of `p` in one color class.
pub fn count_in_view(view: &ColorView<'_>, p: Pattern) -> Result<MonoCount> {
    p.validate()?;
    match p {
        Pattern::Path(k) => count_paths(view, k),
        Pattern::Cycle(k) => count_cycles(view, k),
        Pattern::Star(k) => count_stars(view, k),
        Pattern::Clique(k) => count_cliques_in(&view.to_graph(), k),
    }
}

/// Monochromatic copies of `p`: red copies plus blue copies.
pub fn count_mono(c: &EdgeColoring, p: Pattern) -> Result<MonoCount> {
    Ok(count_in_view(&c.view(Color::Red), p)? + count_in_view(&c.view(Color::Blue), p)?)
}

/// Closed-form monochromatic `P_k` count of the flip-free `χ(a, b)`.
pub fn formula_split_paths(a: usize, b: usize, k: usize) -> MonoCount {
    let (a, b, k) = (a as u64, b as u64, k as u64);
    if k == 0 {
        return MonoCount::zero();
    }
    if k == 1 {
        return MonoCount(BigUint::from(2 * (a + b)));
    }
    let two = BigUint::from(2u8);
    let blue = falling(a, k) / &two + falling(b, k) / &two;
    let red = if k % 2 == 0 {
        falling(a, k / 2) * falling(b, k / 2)
    } else {
        let (hi, lo) = (k.div_ceil(2), k / 2);
        (falling(a, hi) * falling(b, lo) + falling(b, hi) * falling(a, lo)) / &two
    };
    MonoCount(blue + red)
}

/// Number of copies of `p` in `K_n`.
pub fn total_copies_in_complete(n: usize, p: Pattern) -> Result<MonoCount> {
    p.validate()?;
    let nn = n as u64;
    let two = BigUint::from(2u8);
    let v = match p {
        Pattern::Path(1) => BigUint::from(nn),
        Pattern::Path(k) => binomial(nn, k as u64) * factorial(k as u64) / two,
        Pattern::Cycle(k) => binomial(nn, k as u64) * factorial(k as u64 - 1) / two,
        Pattern::Star(1) => BigUint::from(pair_count(n)),
        Pattern::Star(k) => binomial(nn.saturating_sub(1), k as u64) * nn,
        Pattern::Clique(k) => binomial(nn, k as u64),
    };
    Ok(MonoCount(v))
}

/// Directed walks-without-repeats from `start` with exactly `length` edges,
/// optionally required to finish at `end`. Counts vertex sequences, so with
/// `end = None` every path from `start` is counted once. `n <= 64`.
pub fn count_paths_from(
    g: &SimpleGraph,
    start: usize,
    length: usize,
    end: Option<usize>,
) -> Result<BigUint> {
    let n = g.n();
    if n > 64 {
        return Err(Error::Capability(format!(
            "fixed-endpoint path counting supports n <= 64, got {n}"
        )));
    }
    if start >= n || end.is_some_and(|e| e >= n) {
        return Err(Error::Domain("endpoint out of range".into()));
    }
    if end == Some(start) {
        return Ok(BigUint::from(u8::from(length == 0)));
    }
    let adj: Vec<u64> = (0..n).map(|v| g.mask64(v)).collect();
    fn dfs(adj: &[u64], cur: usize, visited: u64, left: usize, end: Option<usize>) -> u128 {
        if left == 0 {
            return u128::from(end.is_none_or(|e| e == cur));
        }
        let free = adj[cur] & !visited;
        if left == 1 {
            return match end {
                Some(e) => u128::from(free >> e & 1 == 1),
                None => free.count_ones() as u128,
            };
        }
        let mut total = 0;
        let mut ext = match end {
            // the end vertex may only appear last
            Some(e) => free & !(1u64 << e),
            None => free,
        };
        while ext != 0 {
            let w = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            total += dfs(adj, w, visited | 1 << w, left - 1, end);
        }
        total
    }
    Ok(BigUint::from(dfs(&adj, start, 1u64 << start, length, end)))
}

/// Vertex sequences of `k` vertices that form a path and start in `starts`.
pub fn count_sequences_from_set(g: &SimpleGraph, starts: &[usize], k: usize) -> Result<BigUint> {
    if k == 0 {
        return Ok(BigUint::zero());
    }
    let mut total = BigUint::zero();
    for &s in starts {
        total += count_paths_from(g, s, k - 1, None)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{construct_split, split, SplitSpec};

    /// Permutation-free oracle: enumerate vertex sequences by plain DFS.
    fn oracle_paths(g: &SimpleGraph, k: usize) -> u128 {
        let n = g.n();
        let mut seqs = 0u128;
        for s in 0..n {
            seqs += count_paths_from(g, s, k - 1, None).unwrap().to_u128().unwrap();
        }
        if k >= 2 {
            seqs / 2
        } else {
            seqs
        }
    }

    #[test]
    fn path_examples() {
        let c = split(6, 2);
        assert_eq!(count_paths(&c.view(Color::Blue), 6).unwrap(), 360u128.into());
        let c = split(5, 3);
        assert_eq!(count_paths(&c.view(Color::Red), 6).unwrap(), 360u128.into());
        assert_eq!(count_paths(&c.view(Color::Red), 1).unwrap(), 8u128.into());
        let c = split(4, 2);
        assert_eq!(count_paths(&c.view(Color::Red), 5).unwrap(), 24u128.into());
    }

    #[test]
    fn cycle_examples() {
        let c = construct_split(&SplitSpec::new(6, 2).flip(0, 1)).unwrap();
        assert_eq!(count_cycles(&c.view(Color::Blue), 6).unwrap(), 36u128.into());
        let c = split(5, 4);
        assert_eq!(count_cycles(&c.view(Color::Blue), 5).unwrap(), 12u128.into());
        assert_eq!(count_cycles(&c.view(Color::Red), 5).unwrap(), 0u128.into());
    }

    #[test]
    fn star_and_triangle_examples() {
        let c = split(5, 2);
        assert_eq!(count_stars(&c.view(Color::Red), 2).unwrap(), 25u128.into());
        let red5 = EdgeColoring::monochromatic(5, Color::Red);
        assert_eq!(count_stars(&red5.view(Color::Blue), 1).unwrap(), 0u128.into());
        assert_eq!(count_stars(&red5.view(Color::Red), 3).unwrap(), (5u128 * 4).into());
        assert_eq!(count_triangles(&c.view(Color::Blue)), 10u128.into());
        assert_eq!(count_triangles(&c.view(Color::Red)), 0u128.into());
        let k3 = EdgeColoring::monochromatic(3, Color::Red);
        assert_eq!(count_triangles(&k3.view(Color::Red)), 1u128.into());
        assert_eq!(count_triangles(&k3.view(Color::Blue)), 0u128.into());
    }

    #[test]
    fn count_mono_examples() {
        // Red K_{5,2}: A-B-A-B-A sequences 5·2·4·1·3 = 120, halved = 60.
        // Blue K_5: 5!/2 = 60.
        assert_eq!(count_mono(&split(5, 2), Pattern::Path(5)).unwrap(), 120u128.into());
        assert_eq!(count_mono(&split(4, 1), Pattern::Path(5)).unwrap(), 0u128.into());
        let single = EdgeColoring::monochromatic(2, Color::Red);
        assert_eq!(count_mono(&single, Pattern::Path(2)).unwrap(), 1u128.into());
    }

    #[test]
    fn formula_examples() {
        assert_eq!(formula_split_paths(6, 2, 6), 360u128.into());
        assert_eq!(formula_split_paths(4, 2, 5), 24u128.into());
        assert_eq!(formula_split_paths(5, 3, 6), 360u128.into());
    }

    #[test]
    fn complete_totals() {
        assert_eq!(total_copies_in_complete(8, Pattern::Path(6)).unwrap(), 10080u128.into());
        assert_eq!(total_copies_in_complete(8, Pattern::Cycle(6)).unwrap(), 1680u128.into());
        assert_eq!(total_copies_in_complete(6, Pattern::Star(3)).unwrap(), 60u128.into());
        for n in 1..9 {
            let kn = SimpleGraph::complete(n);
            for k in 1..=n {
                assert_eq!(
                    count_paths_in(&kn, k).unwrap(),
                    total_copies_in_complete(n, Pattern::Path(k)).unwrap()
                );
                if k >= 3 {
                    assert_eq!(
                        count_cycles_in(&kn, k).unwrap(),
                        total_copies_in_complete(n, Pattern::Cycle(k)).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn layered_dp_matches_dense() {
        // K_17 and K_18 exercise the ranked-layer path.
        for n in [17usize, 18] {
            let kn = SimpleGraph::complete(n);
            for k in [1usize, 2, 3, 5] {
                assert_eq!(
                    count_paths_in(&kn, k).unwrap(),
                    total_copies_in_complete(n, Pattern::Path(k)).unwrap()
                );
            }
            for k in [3usize, 4, 5] {
                assert_eq!(
                    count_cycles_in(&kn, k).unwrap(),
                    total_copies_in_complete(n, Pattern::Cycle(k)).unwrap()
                );
            }
        }
        // a sparse 18-vertex graph against the DFS oracle
        let mut g = SimpleGraph::cycle(18);
        for i in 0..18 {
            g.add_edge(i, (i + 5) % 18);
        }
        for k in 1..7 {
            assert_eq!(count_paths_in(&g, k).unwrap().to_u128().unwrap(), oracle_paths(&g, k));
        }
    }

    #[test]
    fn guards() {
        let c = EdgeColoring::monochromatic(25, Color::Red);
        assert!(matches!(count_paths(&c.view(Color::Red), 3), Err(Error::Capability(_))));
        assert!(matches!(count_cycles(&c.view(Color::Red), 3), Err(Error::Capability(_))));
        assert!(count_stars(&c.view(Color::Red), 3).is_ok());
        assert!(matches!(count_cycles(&c.view(Color::Red), 2), Err(Error::Domain(_))));
    }

    #[test]
    fn pattern_syntax() {
        assert_eq!("P_6".parse::<Pattern>().unwrap(), Pattern::Path(6));
        assert_eq!("C_4".parse::<Pattern>().unwrap(), Pattern::Cycle(4));
        assert_eq!("S_3".parse::<Pattern>().unwrap(), Pattern::Star(3));
        assert_eq!("K3".parse::<Pattern>().unwrap(), Pattern::TRIANGLE);
        assert_eq!("K_4".parse::<Pattern>().unwrap(), Pattern::Clique(4));
        assert!("C_2".parse::<Pattern>().is_err());
        assert!("K6".parse::<Pattern>().is_err());
        assert!("Q_3".parse::<Pattern>().is_err());
        assert!("P6".parse::<Pattern>().is_err());
        for p in [Pattern::Path(6), Pattern::Cycle(5), Pattern::Star(3), Pattern::TRIANGLE] {
            assert_eq!(p.to_string().parse::<Pattern>().unwrap(), p);
        }
    }

    #[test]
    fn fixed_endpoint_counts() {
        // K_{8,8}: from a vertex, ∏_{i=1}^{l} (8 − ⌊i/2⌋)
        let g = SimpleGraph::complete_bipartite(8, 8);
        let got = count_paths_from(&g, 0, 5, None).unwrap();
        assert_eq!(got, BigUint::from(8u32 * 7 * 7 * 6 * 6));
        // u in A, v in B, length 3: (v's other side picks) 7 · 7
        let got = count_paths_from(&g, 0, 3, Some(8)).unwrap();
        assert_eq!(got, BigUint::from(49u32));
        let got = count_paths_from(&g, 0, 2, Some(1)).unwrap();
        assert_eq!(got, BigUint::from(8u32));
    }
}
