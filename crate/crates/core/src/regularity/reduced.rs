use alloc::format;
use alloc::vec::Vec;

use super::regular::{eps_regular_exact, eps_regular_sample};
use super::VertexPartition;
use crate::coloring::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::frac::Frac;
use crate::graph::SimpleGraph;
use crate::par::map_range;
use crate::structure::{is_matching, max_matching};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegularityMode {
    Exact,
    /// Sampled checks; a pair without a found violation counts as regular,
    /// and the whole graph is flagged as evidence only.
    Sample { trials: usize, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairRegularity {
    Regular,
    Irregular { deviation: Frac },
    NoViolationFound,
}

impl PairRegularity {
    fn admits_edge(self) -> bool {
        !matches!(self, PairRegularity::Irregular { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairAnnotation {
    pub i: usize,
    pub j: usize,
    pub red_density: Frac,
    pub blue_density: Frac,
    pub red: PairRegularity,
    pub blue: PairRegularity,
}

/// A two-colored multigraph on the parts; a pair may carry both colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedGraph {
    pub red: SimpleGraph,
    pub blue: SimpleGraph,
    pub annotations: Vec<PairAnnotation>,
    pub evidence_only: bool,
}

impl ReducedGraph {
    /// A reduced graph given directly by its two edge sets.
    pub fn from_graphs(red: SimpleGraph, blue: SimpleGraph) -> Result<ReducedGraph> {
        if red.n() != blue.n() {
            return Err(Error::Domain("red and blue reduced graphs differ in size".into()));
        }
        Ok(ReducedGraph { red, blue, annotations: Vec::new(), evidence_only: false })
    }

    pub fn m(&self) -> usize {
        self.red.n()
    }

    pub fn graph(&self, color: Color) -> &SimpleGraph {
        match color {
            Color::Red => &self.red,
            Color::Blue => &self.blue,
        }
    }

    /// The coloring of `K_M` this graph describes when every pair carries
    /// exactly one color.
    pub fn as_coloring(&self) -> Option<EdgeColoring> {
        let m = self.m();
        for i in 0..m {
            for j in i + 1..m {
                if self.red.has_edge(i, j) == self.blue.has_edge(i, j) {
                    return None;
                }
            }
        }
        Some(EdgeColoring::from_red_graph(&self.red))
    }
}

fn classify(
    g: &SimpleGraph,
    x: &[usize],
    y: &[usize],
    eps: Frac,
    mode: RegularityMode,
) -> Result<PairRegularity> {
    Ok(match mode {
        RegularityMode::Exact => {
            let r = eps_regular_exact(g, x, y, eps)?;
            if r.regular {
                PairRegularity::Regular
            } else {
                PairRegularity::Irregular { deviation: r.max_deviation }
            }
        }
        RegularityMode::Sample { trials, seed } => match eps_regular_sample(g, x, y, eps, trials, seed)? {
            super::SampleVerdict::NoViolationFound { .. } => PairRegularity::NoViolationFound,
            super::SampleVerdict::Violated(w) => PairRegularity::Irregular { deviation: w.deviation },
        },
    })
}

/// Color `c` joins parts `i` and `j` iff the pair is ε-regular in `c` with
/// `c`-density at least `d`.
pub fn build_reduced(
    c: &EdgeColoring,
    partition: &VertexPartition,
    eps: Frac,
    d: Frac,
    mode: RegularityMode,
) -> Result<ReducedGraph> {
    let n = c.n();
    for part in partition.parts() {
        if let Some(&v) = part.iter().find(|&&v| v >= n) {
            return Err(Error::Domain(format!("vertex {v} out of range (n={n})")));
        }
    }
    let parts = partition.parts();
    let m = parts.len();
    let red_g = c.graph(Color::Red);
    let blue_g = c.graph(Color::Blue);
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
    let annotated = map_range(pairs.len(), |k| -> Result<PairAnnotation> {
        let (i, j) = pairs[k];
        let (x, y) = (&parts[i][..], &parts[j][..]);
        let red_density = super::pair_density(&red_g, x, y)?.value();
        let blue_density = super::pair_density(&blue_g, x, y)?.value();
        Ok(PairAnnotation {
            i,
            j,
            red_density,
            blue_density,
            red: classify(&red_g, x, y, eps, mode)?,
            blue: classify(&blue_g, x, y, eps, mode)?,
        })
    });
    let mut rg = ReducedGraph {
        red: SimpleGraph::empty(m),
        blue: SimpleGraph::empty(m),
        annotations: Vec::with_capacity(pairs.len()),
        evidence_only: matches!(mode, RegularityMode::Sample { .. }),
    };
    for a in annotated {
        let a = a?;
        if a.red.admits_edge() && a.red_density >= d {
            rg.red.add_edge(a.i, a.j);
        }
        if a.blue.admits_edge() && a.blue_density >= d {
            rg.blue.add_edge(a.i, a.j);
        }
        rg.annotations.push(a);
    }
    Ok(rg)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Dichotomy {
    /// A matching in `color` covering at least `(2/3 + λ)M` parts; for blue,
    /// every matched part lies within distance 3 of `core`.
    Case1 {
        color: Color,
        matching: Vec<(usize, usize)>,
        core: Option<usize>,
    },
    NotCase1,
}

impl Dichotomy {
    /// Re-checks a case-1 certificate against `rg`.
    pub fn validate(&self, rg: &ReducedGraph, lambda: Frac) -> bool {
        match self {
            Dichotomy::NotCase1 => true,
            Dichotomy::Case1 { color, matching, core } => {
                let g = rg.graph(*color);
                if !is_matching(g, matching) || !covers_enough(matching.len(), rg.m(), lambda) {
                    return false;
                }
                match (color, core) {
                    (Color::Red, None) => true,
                    (Color::Blue, Some(v)) => {
                        let ball = g.ball(*v, 3);
                        matching.iter().all(|(a, b)| ball.contains(a) && ball.contains(b))
                    }
                    _ => false,
                }
            }
        }
    }
}

fn covers_enough(edges: usize, m: usize, lambda: Frac) -> bool {
    Frac::from(2 * edges) >= (Frac::new(2, 3) + lambda) * Frac::from(m)
}

/// Looks for a large red matching, then for a large blue matching inside
/// the radius-3 ball of some part.
pub fn dichotomy_classify(rg: &ReducedGraph, lambda: Frac) -> Dichotomy {
    let m = rg.m();
    let red = max_matching(&rg.red);
    if covers_enough(red.len(), m, lambda) {
        return Dichotomy::Case1 { color: Color::Red, matching: red, core: None };
    }
    for v in 0..m {
        let ball = rg.blue.ball(v, 3);
        if !covers_enough(ball.len() / 2, m, lambda) {
            continue;
        }
        let local = max_matching(&rg.blue.induced(&ball));
        if covers_enough(local.len(), m, lambda) {
            let mut matching: Vec<(usize, usize)> = local.iter().map(|&(a, b)| (ball[a], ball[b])).collect();
            matching.sort_unstable();
            return Dichotomy::Case1 { color: Color::Blue, matching, core: Some(v) };
        }
    }
    Dichotomy::NotCase1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::split;
    use alloc::vec;

    #[test]
    fn split_reduces_to_split() {
        let c = split(6, 3);
        let p = VertexPartition::new(9, vec![(0..6).collect(), (6..9).collect()]).unwrap();
        let rg = build_reduced(&c, &p, Frac::new(1, 10), Frac::new(1, 2), RegularityMode::Exact).unwrap();
        assert!(rg.red.has_edge(0, 1));
        assert!(!rg.blue.has_edge(0, 1));
        assert_eq!(rg.annotations[0].red_density, Frac::ONE);
        assert!(!rg.evidence_only);
    }

    #[test]
    fn all_blue() {
        let c = EdgeColoring::monochromatic(12, Color::Blue);
        let all: Vec<usize> = (0..12).collect();
        let p = VertexPartition::equitable(12, &all, 4).unwrap();
        let rg = build_reduced(&c, &p, Frac::new(1, 5), Frac::new(1, 2), RegularityMode::Exact).unwrap();
        assert_eq!(rg.blue.edge_count(), 6);
        assert_eq!(rg.red.edge_count(), 0);
        assert!(rg.annotations.iter().all(|a| a.blue_density == Frac::ONE && a.red_density == Frac::ZERO));
        let sampled = build_reduced(
            &c,
            &p,
            Frac::new(1, 5),
            Frac::new(1, 2),
            RegularityMode::Sample { trials: 50, seed: 1 },
        )
        .unwrap();
        assert!(sampled.evidence_only);
        assert_eq!(sampled.blue, rg.blue);
        assert_eq!(rg.as_coloring(), Some(EdgeColoring::monochromatic(4, Color::Blue)));
    }

    #[test]
    fn dichotomy_examples() {
        let lambda = Frac::new(1, 20);
        let rg = ReducedGraph::from_graphs(SimpleGraph::complete(9), SimpleGraph::empty(9)).unwrap();
        let d = dichotomy_classify(&rg, lambda);
        assert!(matches!(&d, Dichotomy::Case1 { color: Color::Red, matching, .. } if matching.len() == 4));
        assert!(d.validate(&rg, lambda));

        let two = SimpleGraph::from_edges(9, &[(0, 1), (2, 3)]).unwrap();
        let rg = ReducedGraph::from_graphs(two, SimpleGraph::empty(9)).unwrap();
        assert_eq!(dichotomy_classify(&rg, lambda), Dichotomy::NotCase1);

        // blue triangles hanging off a centre
        let mut blue = SimpleGraph::empty(9);
        for (a, b) in [(0, 1), (0, 2), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6), (0, 7), (7, 8)] {
            blue.add_edge(a, b);
        }
        let rg = ReducedGraph::from_graphs(SimpleGraph::empty(9), blue).unwrap();
        let d = dichotomy_classify(&rg, lambda);
        assert!(matches!(d, Dichotomy::Case1 { color: Color::Blue, .. }));
        assert!(d.validate(&rg, lambda));
    }
}
