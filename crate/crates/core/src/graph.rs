//! Simple undirected graphs stored as per-vertex adjacency bitsets.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use alloc::format;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// A loop-free symmetric graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> SimpleGraph {
        let words = words_for(n);
        SimpleGraph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn complete(n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j);
            }
        }
        g
    }

    /// Builds a graph from an edge list; rejects loops and out-of-range ends.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<SimpleGraph> {
        let mut g = SimpleGraph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::Domain(format!("bad edge ({u},{v}) for n={n}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::empty(n);
        if n >= 3 {
            for i in 0..n {
                g.add_edge(i, (i + 1) % n);
            }
        }
        g
    }

    pub fn path(n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::empty(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> SimpleGraph {
        let mut g = SimpleGraph::empty(a + b);
        for i in 0..a {
            for j in a..a + b {
                g.add_edge(i, j);
            }
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] &= !(1 << (v % 64));
        self.rows[v * self.words + u / 64] &= !(1 << (u % 64));
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Number of neighbours of `v` inside the bitset `set` (same word layout).
    pub fn degree_in(&self, v: usize, set: &[u64]) -> usize {
        self.row(v)
            .iter()
            .zip(set)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(v))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> SimpleGraph {
        let mut g = SimpleGraph::empty(self.n);
        for i in 0..self.n {
            for j in i + 1..self.n {
                if !self.has_edge(i, j) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Induced subgraph on `vertices`, relabelled `0..vertices.len()` in order.
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph::empty(vertices.len());
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// Adjacency of `v` as a single word. Only valid when `n <= 64`.
    #[inline]
    pub fn mask64(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.rows[v * self.words]
    }

    /// Bitset with the given vertices set, in this graph's word layout.
    pub fn set_of(&self, vertices: &[usize]) -> Vec<u64> {
        let mut s = vec![0u64; self.words];
        for &v in vertices {
            s[v / 64] |= 1 << (v % 64);
        }
        s
    }

    /// Vertices at distance at most `radius` from `src` (including `src`).
    pub fn ball(&self, src: usize, radius: usize) -> Vec<usize> {
        let dist = self.bfs_distances(src, None);
        (0..self.n)
            .filter(|&v| matches!(dist[v], Some(d) if d <= radius))
            .collect()
    }

    /// BFS distances from `src`, optionally forbidding a set of vertices.
    pub fn bfs_distances(&self, src: usize, forbidden: Option<&[bool]>) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = alloc::collections::VecDeque::new();
        dist[src] = Some(0);
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for w in self.neighbors(u) {
                if dist[w].is_none() && !forbidden.is_some_and(|f| f[w]) {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected_pair(&self, u: usize, v: usize) -> bool {
        self.bfs_distances(u, None)[v].is_some()
    }
}

pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        core::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            }
        })
    })
}
