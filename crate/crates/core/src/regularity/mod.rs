//! ε-regular pairs, reduced graphs, the matching dichotomy, extremal
//! colorings and numeric checks of the path-counting lower bounds, all at
//! desk scale with exact rational decisions.

mod density;
mod extremal;
mod lemmas;
mod reduced;
mod regular;

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

pub use density::{degree_deviation_check, pair_density, DegreeDeviation, Density};
pub use extremal::{check_extremal_partition, dirac_check, extremal_detect, ExtremalVerdict};
pub use lemmas::{
    verify_count_bounds, BipartiteEndpoints, BoundReport, BoundVerdict, DenseBipartite, LemmaParams,
    StartVertex,
};
pub use reduced::{
    build_reduced, dichotomy_classify, Dichotomy, PairAnnotation, PairRegularity, ReducedGraph,
    RegularityMode,
};
pub use regular::{
    eps_regular_exact, eps_regular_sample, ExactRegularity, RegularityWitness, SampleVerdict,
    MAX_EXACT_PART,
};

use crate::error::{Error, Result};

/// Disjoint vertex sets covering part of `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    parts: Vec<Vec<usize>>,
}

impl VertexPartition {
    pub fn new(n: usize, parts: Vec<Vec<usize>>) -> Result<VertexPartition> {
        let mut seen = vec![false; n];
        for part in &parts {
            if part.is_empty() {
                return Err(Error::Domain("empty part".into()));
            }
            for &v in part {
                if v >= n {
                    return Err(Error::Domain(format!("vertex {v} out of range (n={n})")));
                }
                if seen[v] {
                    return Err(Error::Domain(format!("vertex {v} in two parts")));
                }
                seen[v] = true;
            }
        }
        Ok(VertexPartition { parts })
    }

    /// `vertices` cut into `m` consecutive parts whose sizes differ by at most one.
    pub fn equitable(n: usize, vertices: &[usize], m: usize) -> Result<VertexPartition> {
        if m == 0 || m > vertices.len() {
            return Err(Error::Domain(format!(
                "cannot split {} vertices into {m} parts",
                vertices.len()
            )));
        }
        let (q, r) = (vertices.len() / m, vertices.len() % m);
        let mut parts = Vec::with_capacity(m);
        let mut at = 0;
        for i in 0..m {
            let size = q + usize::from(i < r);
            parts.push(vertices[at..at + size].to_vec());
            at += size;
        }
        VertexPartition::new(n, parts)
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_equitable(&self) -> bool {
        let min = self.parts.iter().map(Vec::len).min().unwrap_or(0);
        let max = self.parts.iter().map(Vec::len).max().unwrap_or(0);
        max - min <= 1
    }
}

/// Checks a vertex set: nonempty, in range, no repeats.
pub(crate) fn check_set(n: usize, set: &[usize], what: &str) -> Result<()> {
    if set.is_empty() {
        return Err(Error::Domain(format!("{what} is empty")));
    }
    let mut seen = vec![false; n];
    for &v in set {
        if v >= n {
            return Err(Error::Domain(format!("vertex {v} in {what} out of range (n={n})")));
        }
        if seen[v] {
            return Err(Error::Domain(format!("vertex {v} repeated in {what}")));
        }
        seen[v] = true;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions() {
        let all: Vec<usize> = (0..10).collect();
        let p = VertexPartition::equitable(10, &all, 3).unwrap();
        assert!(p.is_equitable());
        assert_eq!(p.parts().iter().map(Vec::len).collect::<Vec<_>>(), [4, 3, 3]);
        let q = VertexPartition::new(10, vec![vec![0, 1, 2], vec![3]]).unwrap();
        assert!(!q.is_equitable());
        assert!(VertexPartition::new(4, vec![vec![0, 1], vec![1]]).is_err());
        assert!(VertexPartition::new(4, vec![vec![0, 5]]).is_err());
    }
}
