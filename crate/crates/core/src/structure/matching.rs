use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::SimpleGraph;

const NONE: usize = usize::MAX;

/// Edmonds' blossom algorithm: repeated BFS for augmenting paths from each
/// exposed vertex, contracting odd cycles (blossoms) as they are found.
struct Blossom<'a> {
    g: &'a SimpleGraph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a SimpleGraph) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_path(&mut self, root: usize) -> usize {
        let n = self.g.n();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for i in 0..n {
            self.base[i] = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            let neighbors: Vec<usize> = self.g.neighbors(v).collect();
            for to in neighbors {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        NONE
    }

    fn run(mut self) -> Vec<usize> {
        let n = self.g.n();
        // greedy warm start
        for v in 0..n {
            if self.mate[v] == NONE {
                if let Some(w) = self.g.neighbors(v).find(|&w| self.mate[w] == NONE) {
                    self.mate[v] = w;
                    self.mate[w] = v;
                }
            }
        }
        for root in 0..n {
            if self.mate[root] != NONE {
                continue;
            }
            let mut v = self.find_path(root);
            while v != NONE {
                let pv = self.parent[v];
                let ppv = self.mate[pv];
                self.mate[v] = pv;
                self.mate[pv] = v;
                v = ppv;
            }
        }
        self.mate
    }
}

/// A maximum-cardinality matching of a general graph, as edges `(u, v)`
/// with `u < v`, sorted.
pub fn max_matching(g: &SimpleGraph) -> Vec<(usize, usize)> {
    let mate = Blossom::new(g).run();
    let mut edges: Vec<(usize, usize)> = mate
        .iter()
        .enumerate()
        .filter(|&(v, &m)| m != NONE && v < m)
        .map(|(v, &m)| (v, m))
        .collect();
    edges.sort_unstable();
    edges
}

/// Whether `edges` is a matching of `g`.
pub fn is_matching(g: &SimpleGraph, edges: &[(usize, usize)]) -> bool {
    let mut used = vec![false; g.n()];
    for &(u, v) in edges {
        if u >= g.n() || v >= g.n() || u == v || !g.has_edge(u, v) || used[u] || used[v] {
            return false;
        }
        used[u] = true;
        used[v] = true;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_matching(g: &SimpleGraph) -> usize {
        fn rec(g: &SimpleGraph, free: u32) -> usize {
            if free == 0 {
                return 0;
            }
            let v = free.trailing_zeros() as usize;
            let rest = free & !(1 << v);
            let mut best = rec(g, rest);
            for w in g.neighbors(v) {
                if rest >> w & 1 == 1 {
                    best = best.max(1 + rec(g, rest & !(1 << w)));
                }
            }
            best
        }
        rec(g, ((1u64 << g.n()) - 1) as u32)
    }

    #[test]
    fn examples() {
        assert_eq!(max_matching(&SimpleGraph::cycle(5)).len(), 2);
        assert_eq!(max_matching(&SimpleGraph::complete(4)).len(), 2);
        let star = SimpleGraph::complete_bipartite(1, 5);
        assert_eq!(max_matching(&star).len(), 1);
        assert_eq!(max_matching(&SimpleGraph::empty(3)).len(), 0);
    }

    #[test]
    fn exhaustive_small_graphs() {
        for n in 1..=5usize {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
            for mask in 0u32..(1 << pairs.len()) {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = SimpleGraph::from_edges(n, &edges).unwrap();
                let m = max_matching(&g);
                assert!(is_matching(&g, &m));
                assert_eq!(m.len(), brute_matching(&g), "n={n} mask={mask}");
            }
        }
    }

    #[test]
    fn blossom_needed() {
        // Two triangles joined by a path: greedy can get stuck; blossoms resolve it.
        let g = SimpleGraph::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 5)],
        )
        .unwrap();
        assert_eq!(max_matching(&g).len(), 4);
        let petersen = SimpleGraph::from_edges(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            ],
        )
        .unwrap();
        assert_eq!(max_matching(&petersen).len(), 5);
    }
}
