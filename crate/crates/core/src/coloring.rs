//! Two-colorings of `E(K_n)`, the split colorings `χ(a, b)`, and
//! monochromatic views.
//!
//! Only red edges are stored. Pair `(i, j)` with `i < j` lives at bit
//! `i·(2n−i−1)/2 + (j−i−1)`, i.e. the upper triangle in row-major order.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Color::Red => "red",
            Color::Blue => "blue",
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Number of unordered pairs `C(n, 2)`.
#[inline]
pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Bit index of the pair `{i, j}`; requires `i < j < n`.
#[inline]
pub const fn pair_index(n: usize, i: usize, j: usize) -> usize {
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// A red/blue coloring of the edges of `K_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    n: usize,
    red: Vec<u64>,
}

impl fmt::Debug for EdgeColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeColoring(n={}, red=", self.n)?;
        for b in self.to_packed_bytes() {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

/// Colorings compare by their packed red bitstring, which is the same order
/// as their serialized form.
impl Ord for EdgeColoring {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.to_packed_bytes().cmp(&other.to_packed_bytes()))
    }
}

impl PartialOrd for EdgeColoring {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl EdgeColoring {
    pub fn monochromatic(n: usize, color: Color) -> EdgeColoring {
        let m = pair_count(n);
        let mut red = vec![0u64; m.div_ceil(64)];
        if color == Color::Red {
            for i in 0..m {
                red[i / 64] |= 1 << (i % 64);
            }
        }
        EdgeColoring { n, red }
    }

    /// Red edges are exactly the edges of `g`.
    pub fn from_red_graph(g: &SimpleGraph) -> EdgeColoring {
        let mut c = EdgeColoring::monochromatic(g.n(), Color::Blue);
        for (u, v) in g.edges() {
            c.set_unchecked(u, v, Color::Red);
        }
        c
    }

    /// Colors pairs from the low `C(n, 2)` bits of `mask` in pair-index order.
    pub fn from_index_mask(n: usize, mask: u64) -> EdgeColoring {
        debug_assert!(pair_count(n) <= 64);
        let m = pair_count(n);
        let keep = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        let mut red = vec![0u64; m.div_ceil(64)];
        if !red.is_empty() {
            red[0] = mask & keep;
        }
        EdgeColoring { n, red }
    }

    /// Inverse of [`from_index_mask`](Self::from_index_mask) for `C(n,2) <= 64`.
    pub fn index_mask(&self) -> u64 {
        debug_assert!(pair_count(self.n) <= 64);
        self.red.first().copied().unwrap_or(0)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    fn check_pair(&self, i: usize, j: usize) -> Result<()> {
        if i >= self.n || j >= self.n {
            return Err(Error::Domain(format!(
                "vertex out of range: ({i},{j}) with n={}",
                self.n
            )));
        }
        if i == j {
            return Err(Error::Domain(format!("no self-loop at vertex {i}")));
        }
        Ok(())
    }

    pub fn color_of(&self, i: usize, j: usize) -> Result<Color> {
        self.check_pair(i, j)?;
        Ok(if self.is_red(i, j) { Color::Red } else { Color::Blue })
    }

    /// Unchecked red test; `i != j`, both `< n`.
    #[inline]
    pub fn is_red(&self, i: usize, j: usize) -> bool {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        let k = pair_index(self.n, a, b);
        self.red[k / 64] >> (k % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn set_unchecked(&mut self, i: usize, j: usize, color: Color) {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        let k = pair_index(self.n, a, b);
        match color {
            Color::Red => self.red[k / 64] |= 1 << (k % 64),
            Color::Blue => self.red[k / 64] &= !(1 << (k % 64)),
        }
    }

    #[inline]
    pub(crate) fn flip_unchecked(&mut self, i: usize, j: usize) {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        let k = pair_index(self.n, a, b);
        self.red[k / 64] ^= 1 << (k % 64);
    }

    /// Copy with the color of `{i, j}` inverted.
    pub fn with_flip(&self, i: usize, j: usize) -> Result<EdgeColoring> {
        self.check_pair(i, j)?;
        let mut c = self.clone();
        c.flip_unchecked(i, j);
        Ok(c)
    }

    pub fn red_edge_count(&self) -> usize {
        self.red.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn blue_edge_count(&self) -> usize {
        pair_count(self.n) - self.red_edge_count()
    }

    pub fn edge_count(&self, color: Color) -> usize {
        match color {
            Color::Red => self.red_edge_count(),
            Color::Blue => self.blue_edge_count(),
        }
    }

    /// The coloring with red and blue exchanged.
    pub fn swapped(&self) -> EdgeColoring {
        let m = pair_count(self.n);
        let mut red: Vec<u64> = self.red.iter().map(|w| !w).collect();
        if m % 64 != 0 {
            let last = red.len() - 1;
            red[last] &= (1u64 << (m % 64)) - 1;
        }
        EdgeColoring { n: self.n, red }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> EdgeColoring {
        debug_assert_eq!(perm.len(), self.n);
        let mut c = EdgeColoring::monochromatic(self.n, Color::Blue);
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.is_red(i, j) {
                    c.set_unchecked(perm[i], perm[j], Color::Red);
                }
            }
        }
        c
    }

    pub fn view(&self, color: Color) -> ColorView<'_> {
        ColorView {
            coloring: self,
            color,
        }
    }

    pub fn graph(&self, color: Color) -> SimpleGraph {
        let mut g = SimpleGraph::empty(self.n);
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.is_red(i, j) == (color == Color::Red) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Red bits packed high-bit-first, `ceil(C(n,2)/8)` bytes, unused
    /// trailing bits zero.
    pub fn to_packed_bytes(&self) -> Vec<u8> {
        let m = pair_count(self.n);
        let mut out = vec![0u8; m.div_ceil(8)];
        for k in 0..m {
            if self.red[k / 64] >> (k % 64) & 1 == 1 {
                out[k / 8] |= 0x80 >> (k % 8);
            }
        }
        out
    }

    /// Inverse of [`to_packed_bytes`](Self::to_packed_bytes).
    pub fn from_packed_bytes(n: usize, bytes: &[u8]) -> Result<EdgeColoring> {
        let m = pair_count(n);
        if bytes.len() != m.div_ceil(8) {
            return Err(Error::Domain(format!(
                "expected {} payload bytes for n={n}, got {}",
                m.div_ceil(8),
                bytes.len()
            )));
        }
        let mut c = EdgeColoring::monochromatic(n, Color::Blue);
        for (bi, &byte) in bytes.iter().enumerate() {
            for bit in 0..8 {
                if byte & (0x80 >> bit) != 0 {
                    let k = bi * 8 + bit;
                    if k >= m {
                        return Err(Error::Domain("trailing padding bits must be zero".into()));
                    }
                    c.red[k / 64] |= 1 << (k % 64);
                }
            }
        }
        Ok(c)
    }
}

/// Parameters of `χ(a, b)`: two blue cliques `A = 0..a`, `B = a..a+b`, all
/// `A × B` pairs red, then each pair of `flips` inverted in list order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SplitSpec {
    pub a: usize,
    pub b: usize,
    pub flips: Vec<(usize, usize)>,
}

impl SplitSpec {
    pub fn new(a: usize, b: usize) -> SplitSpec {
        SplitSpec {
            a,
            b,
            flips: Vec::new(),
        }
    }

    pub fn flip(mut self, i: usize, j: usize) -> SplitSpec {
        self.flips.push((i, j));
        self
    }

    pub fn n(&self) -> usize {
        self.a + self.b
    }
}

pub fn construct_split(spec: &SplitSpec) -> Result<EdgeColoring> {
    let n = spec.n();
    let mut seen = BTreeSet::new();
    for &(i, j) in &spec.flips {
        if i >= n || j >= n || i == j {
            return Err(Error::InvalidSpec(format!(
                "flip ({i},{j}) is not a pair of distinct vertices below {n}"
            )));
        }
        if !seen.insert((i.min(j), i.max(j))) {
            return Err(Error::InvalidSpec(format!("duplicate flip ({i},{j})")));
        }
    }
    let mut c = EdgeColoring::monochromatic(n, Color::Blue);
    for i in 0..spec.a {
        for j in spec.a..n {
            c.set_unchecked(i, j, Color::Red);
        }
    }
    for &(i, j) in &spec.flips {
        c.flip_unchecked(i, j);
    }
    Ok(c)
}

/// `χ(a, b)` with no flips.
pub fn split(a: usize, b: usize) -> EdgeColoring {
    construct_split(&SplitSpec::new(a, b)).expect("flip-free split spec is always valid")
}

/// The monochromatic graph of one color, viewed without copying.
#[derive(Debug, Clone, Copy)]
pub struct ColorView<'a> {
    pub coloring: &'a EdgeColoring,
    pub color: Color,
}

impl<'a> ColorView<'a> {
    pub fn n(&self) -> usize {
        self.coloring.n()
    }

    /// Unchecked; `i != j`.
    #[inline]
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.coloring.is_red(i, j) == (self.color == Color::Red)
    }

    pub fn to_graph(&self) -> SimpleGraph {
        self.coloring.graph(self.color)
    }

    /// Number of `w` in `within`, `w != u`, joined to `u` in this color.
    pub fn mono_degree(&self, u: usize, within: &[usize]) -> Result<usize> {
        let n = self.n();
        if u >= n {
            return Err(Error::Domain(format!("vertex {u} out of range (n={n})")));
        }
        let mut seen = BTreeSet::new();
        let mut deg = 0;
        for &w in within {
            if w >= n {
                return Err(Error::Domain(format!("vertex {w} out of range (n={n})")));
            }
            if w != u && seen.insert(w) && self.adjacent(u, w) {
                deg += 1;
            }
        }
        Ok(deg)
    }

    pub fn degree(&self, u: usize) -> usize {
        (0..self.n()).filter(|&w| w != u && self.adjacent(u, w)).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_edge_counts() {
        let c = split(5, 2);
        assert_eq!(c.n(), 7);
        assert_eq!(c.red_edge_count(), 10);
        assert_eq!(c.blue_edge_count(), 11);
        let e = split(0, 0);
        assert_eq!(e.n(), 0);
        assert_eq!(e.red_edge_count(), 0);
    }

    #[test]
    fn flipped_split() {
        let c = construct_split(&SplitSpec::new(6, 2).flip(0, 1)).unwrap();
        assert_eq!(c.n(), 8);
        assert_eq!(c.color_of(0, 1).unwrap(), Color::Red);
        for i in 0..6 {
            for j in i + 1..6 {
                if (i, j) != (0, 1) {
                    assert_eq!(c.color_of(i, j).unwrap(), Color::Blue);
                }
            }
        }
        assert_eq!(c.red_edge_count(), 13);
    }

    #[test]
    fn flip_errors() {
        assert!(matches!(
            construct_split(&SplitSpec::new(3, 2).flip(0, 5)),
            Err(Error::InvalidSpec(_))
        ));
        assert!(matches!(
            construct_split(&SplitSpec::new(3, 2).flip(1, 1)),
            Err(Error::InvalidSpec(_))
        ));
        assert!(matches!(
            construct_split(&SplitSpec::new(3, 2).flip(0, 1).flip(1, 0)),
            Err(Error::InvalidSpec(_))
        ));
    }

    #[test]
    fn color_of_examples() {
        let c = split(5, 2);
        assert_eq!(c.color_of(0, 6).unwrap(), Color::Red);
        assert_eq!(c.color_of(6, 0).unwrap(), Color::Red);
        assert_eq!(c.color_of(0, 1).unwrap(), Color::Blue);
        assert!(c.color_of(2, 2).is_err());
        assert!(c.color_of(0, 7).is_err());
    }

    #[test]
    fn mono_degree_examples() {
        let c = split(5, 2);
        let all: Vec<usize> = (0..7).collect();
        let a: Vec<usize> = (0..5).collect();
        assert_eq!(c.view(Color::Red).mono_degree(0, &all).unwrap(), 2);
        assert_eq!(c.view(Color::Blue).mono_degree(0, &a).unwrap(), 4);
        assert_eq!(c.view(Color::Blue).mono_degree(5, &a).unwrap(), 0);
        assert!(c.view(Color::Blue).mono_degree(9, &a).is_err());
    }

    #[test]
    fn packed_bytes() {
        let red = EdgeColoring::monochromatic(2, Color::Red);
        assert_eq!(red.to_packed_bytes(), vec![0x80]);
        let blue = EdgeColoring::monochromatic(2, Color::Blue);
        assert_eq!(blue.to_packed_bytes(), vec![0x00]);
        assert!(EdgeColoring::from_packed_bytes(2, &[0x40]).is_err());
        assert!(EdgeColoring::from_packed_bytes(2, &[0x80, 0]).is_err());
        let c = split(5, 2);
        let back = EdgeColoring::from_packed_bytes(7, &c.to_packed_bytes()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn pair_index_is_row_major() {
        let n = 5;
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                assert_eq!(pair_index(n, i, j), k);
                k += 1;
            }
        }
    }

    #[test]
    fn swap_and_views_are_complementary() {
        let c = construct_split(&SplitSpec::new(4, 3).flip(0, 5)).unwrap();
        let s = c.swapped();
        assert_eq!(s.red_edge_count(), c.blue_edge_count());
        assert_eq!(s.swapped(), c);
        let r = c.graph(Color::Red);
        let b = c.graph(Color::Blue);
        assert_eq!(r.complement(), b);
    }
}
