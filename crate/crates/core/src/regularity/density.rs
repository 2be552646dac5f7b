use crate::error::Result;
use crate::frac::Frac;
use crate::graph::SimpleGraph;

use super::check_set;

/// `e(X, Y) / |X||Y|`, with `e` counting ordered pairs in `X × Y`, so that
/// `d(X, X) = 2e(X)/|X|²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Density {
    pub edges: u64,
    pub pairs: u64,
}

impl Density {
    pub fn value(&self) -> Frac {
        Frac::new(self.edges as i128, self.pairs as i128)
    }

    pub fn to_f64(&self) -> f64 {
        self.edges as f64 / self.pairs as f64
    }
}

pub(crate) fn edges_between(g: &SimpleGraph, x: &[usize], y: &[usize]) -> u64 {
    let ys = g.set_of(y);
    x.iter().map(|&v| g.degree_in(v, &ys) as u64).sum()
}

pub fn pair_density(g: &SimpleGraph, x: &[usize], y: &[usize]) -> Result<Density> {
    check_set(g.n(), x, "X")?;
    check_set(g.n(), y, "Y")?;
    Ok(Density {
        edges: edges_between(g, x, y),
        pairs: (x.len() * y.len()) as u64,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeDeviation {
    /// Vertices of `X` with degree into `Y'` above `(d+ε)|Y'|`.
    pub high: usize,
    /// Vertices of `X` with degree into `Y'` below `(d−ε)|Y'|`.
    pub low: usize,
    /// Both counts below `ε|X|`.
    pub pass: bool,
}

pub fn degree_deviation_check(
    g: &SimpleGraph,
    x: &[usize],
    y_sub: &[usize],
    d: Frac,
    eps: Frac,
) -> Result<DegreeDeviation> {
    check_set(g.n(), x, "X")?;
    check_set(g.n(), y_sub, "Y'")?;
    let ys = g.set_of(y_sub);
    let size = Frac::from(y_sub.len());
    let (hi, lo) = ((d + eps) * size, (d - eps) * size);
    let mut out = DegreeDeviation { high: 0, low: 0, pass: false };
    for &v in x {
        let deg = Frac::from(g.degree_in(v, &ys));
        if deg > hi {
            out.high += 1;
        }
        if deg < lo {
            out.low += 1;
        }
    }
    let limit = eps * Frac::from(x.len());
    out.pass = Frac::from(out.high) < limit && Frac::from(out.low) < limit;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{split, Color};
    use alloc::vec::Vec;

    #[test]
    fn examples() {
        let c = split(5, 2);
        let a: Vec<usize> = (0..5).collect();
        let b = [5, 6];
        assert_eq!(pair_density(&c.graph(Color::Red), &a, &b).unwrap().value(), Frac::ONE);
        let blue = pair_density(&c.graph(Color::Blue), &a, &a).unwrap();
        assert_eq!(blue.value(), Frac::new(4, 5));
        assert_eq!(blue.edges, 20);
        let empty = SimpleGraph::empty(4);
        assert_eq!(pair_density(&empty, &[0, 1], &[2, 3]).unwrap().to_f64(), 0.0);
        assert!(pair_density(&empty, &[], &[2]).is_err());
    }

    #[test]
    fn deviation() {
        let g = SimpleGraph::complete_bipartite(4, 4);
        let x = [0, 1, 2, 3];
        let y = [4, 5, 6];
        let r = degree_deviation_check(&g, &x, &y, Frac::ONE, Frac::new(1, 10)).unwrap();
        assert_eq!(r, DegreeDeviation { high: 0, low: 0, pass: true });
        // half of X isolated
        let mut h = SimpleGraph::empty(8);
        for u in 0..2 {
            for v in 4..8 {
                h.add_edge(u, v);
            }
        }
        let d = pair_density(&h, &x, &[4, 5, 6, 7]).unwrap().value();
        let r = degree_deviation_check(&h, &x, &[4, 5, 6, 7], d, Frac::new(1, 10)).unwrap();
        assert_eq!(r.low, 2);
        assert!(!r.pass);
    }
}
