use alloc::format;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::check_set;
use super::density::edges_between;
use crate::error::{Error, Result};
use crate::frac::Frac;
use crate::graph::SimpleGraph;

/// Largest part size for exhaustive subset enumeration.
pub const MAX_EXACT_PART: usize = 14;

/// A subpair `(U, V)` and how far its density strays from `d(X, Y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityWitness {
    pub u: Vec<usize>,
    pub v: Vec<usize>,
    pub density: Frac,
    pub deviation: Frac,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactRegularity {
    pub regular: bool,
    pub density: Frac,
    /// Largest deviation over all qualifying subpairs.
    pub max_deviation: Frac,
    /// The subpair attaining `max_deviation`, when it exceeds ε.
    pub witness: Option<RegularityWitness>,
}

/// Either a refutation or the absence of one; never a proof of regularity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SampleVerdict {
    NoViolationFound { trials: usize },
    Violated(RegularityWitness),
}

impl SampleVerdict {
    pub fn is_violated(&self) -> bool {
        matches!(self, SampleVerdict::Violated(_))
    }
}

fn check_eps(eps: Frac) -> Result<()> {
    if !eps.is_positive() || eps > Frac::ONE {
        return Err(Error::Domain(format!("eps must lie in (0, 1], got {eps}")));
    }
    Ok(())
}

/// Least subset size `s >= 1` with `s >= eps·size`.
fn min_size(eps: Frac, size: usize) -> usize {
    ((eps * Frac::from(size)).ceil().max(1)) as usize
}

struct Pair<'a> {
    x: &'a [usize],
    y: &'a [usize],
    /// For each `y`, its neighbours in `X` as a mask over positions in `x`.
    nbrs: Vec<u32>,
    d: Frac,
}

impl<'a> Pair<'a> {
    fn new(g: &SimpleGraph, x: &'a [usize], y: &'a [usize]) -> Pair<'a> {
        let nbrs = y
            .iter()
            .map(|&b| {
                x.iter()
                    .enumerate()
                    .filter(|&(_, &a)| a != b && g.has_edge(a, b))
                    .fold(0u32, |m, (i, _)| m | 1 << i)
            })
            .collect();
        let d = Frac::new(edges_between(g, x, y) as i128, (x.len() * y.len()) as i128);
        Pair { x, y, nbrs, d }
    }

    /// The worst `V` (top or bottom degrees into `U`) over sizes `>= s_min`.
    fn worst_for(&self, u_mask: u32, s_min: usize) -> (Frac, Frac, Vec<usize>) {
        let k = u_mask.count_ones() as i128;
        let mut degs: Vec<(u32, usize)> = self
            .nbrs
            .iter()
            .enumerate()
            .map(|(j, &m)| ((m & u_mask).count_ones(), j))
            .collect();
        degs.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let total = degs.len();
        let (mut top, mut bottom) = (0i128, 0i128);
        let mut best = (Frac::ZERO, Frac::new(-1, 1), 0usize, true);
        for s in 1..=total {
            top += degs[s - 1].0 as i128;
            bottom += degs[total - s].0 as i128;
            if s < s_min {
                continue;
            }
            for (sum, is_top) in [(top, true), (bottom, false)] {
                let dens = Frac::new(sum, k * s as i128);
                let dev = (dens - self.d).abs();
                if dev > best.1 {
                    best = (dens, dev, s, is_top);
                }
            }
        }
        let (dens, dev, s, is_top) = best;
        let picked = if is_top { &degs[..s] } else { &degs[total - s..] };
        let mut v: Vec<usize> = picked.iter().map(|&(_, j)| self.y[j]).collect();
        v.sort_unstable();
        (dens, dev, v)
    }

    fn u_from_mask(&self, mask: u32) -> Vec<usize> {
        (0..self.x.len()).filter(|&i| mask >> i & 1 == 1).map(|i| self.x[i]).collect()
    }
}

/// Decides ε-regularity of `(X, Y)` by enumerating every `U ⊆ X` with
/// `|U| >= ε|X|`; for fixed `U` the extreme subpair densities come from the
/// `s` vertices of `Y` with most or fewest neighbours in `U`.
pub fn eps_regular_exact(g: &SimpleGraph, x: &[usize], y: &[usize], eps: Frac) -> Result<ExactRegularity> {
    check_set(g.n(), x, "X")?;
    check_set(g.n(), y, "Y")?;
    check_eps(eps)?;
    if x.len() > MAX_EXACT_PART || y.len() > MAX_EXACT_PART {
        return Err(Error::Capability(format!(
            "exact regularity supports parts of size <= {MAX_EXACT_PART}, got {} and {}; use eps_regular_sample",
            x.len(),
            y.len()
        )));
    }
    let pair = Pair::new(g, x, y);
    let (u_min, s_min) = (min_size(eps, x.len()), min_size(eps, y.len()));
    let mut worst: Option<(Frac, u32, Frac, Vec<usize>)> = None;
    for mask in 1u32..(1 << x.len()) {
        if (mask.count_ones() as usize) < u_min {
            continue;
        }
        let (dens, dev, v) = pair.worst_for(mask, s_min);
        if worst.as_ref().is_none_or(|w| dev > w.0) {
            worst = Some((dev, mask, dens, v));
        }
    }
    let (dev, mask, dens, v) = worst.expect("X itself qualifies");
    let regular = dev <= eps;
    Ok(ExactRegularity {
        regular,
        density: pair.d,
        max_deviation: dev,
        witness: (!regular).then(|| RegularityWitness {
            u: pair.u_from_mask(mask),
            v,
            density: dens,
            deviation: dev,
        }),
    })
}

/// One-sided sampling test: random qualifying `U`, paired alternately with
/// a random `V` and with the most deviant `V` for that `U`.
pub fn eps_regular_sample(
    g: &SimpleGraph,
    x: &[usize],
    y: &[usize],
    eps: Frac,
    trials: usize,
    seed: u64,
) -> Result<SampleVerdict> {
    check_set(g.n(), x, "X")?;
    check_set(g.n(), y, "Y")?;
    check_eps(eps)?;
    let d = Frac::new(edges_between(g, x, y) as i128, (x.len() * y.len()) as i128);
    let (u_min, s_min) = (min_size(eps, x.len()), min_size(eps, y.len()));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut xs = x.to_vec();
    let mut yv = y.to_vec();
    for t in 0..trials {
        let k = rng.gen_range(u_min..=x.len());
        let (u, _) = xs.partial_shuffle(&mut rng, k);
        let mut u = u.to_vec();
        u.sort_unstable();
        let us = g.set_of(&u);
        let v: Vec<usize> = if t % 2 == 0 {
            let s = rng.gen_range(s_min..=y.len());
            let (v, _) = yv.partial_shuffle(&mut rng, s);
            v.to_vec()
        } else {
            let mut degs: Vec<(usize, usize)> = y.iter().map(|&b| (g.degree_in(b, &us), b)).collect();
            degs.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
            let s = rng.gen_range(s_min..=y.len());
            if rng.gen::<bool>() {
                degs[..s].iter().map(|&(_, b)| b).collect()
            } else {
                degs[y.len() - s..].iter().map(|&(_, b)| b).collect()
            }
        };
        let mut v = v;
        v.sort_unstable();
        let e = edges_between(g, &u, &v);
        let dens = Frac::new(e as i128, (u.len() * v.len()) as i128);
        let dev = (dens - d).abs();
        if dev > eps {
            return Ok(SampleVerdict::Violated(RegularityWitness { u, v, density: dens, deviation: dev }));
        }
    }
    Ok(SampleVerdict::NoViolationFound { trials })
}
