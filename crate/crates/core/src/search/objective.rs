//! Total monochromatic count on red adjacency masks, with cheap per-flip
//! deltas where the pattern allows it (stars and cliques).

use alloc::format;
use alloc::vec::Vec;

use crate::coloring::EdgeColoring;
use crate::counting::{binomial_u128, cycles_from_masks, paths_from_masks, Pattern, MAX_SUBSET_DP_N};
use crate::error::{Error, Result};

/// Largest `n` for mask-based objectives (stars and cliques).
pub(crate) const MAX_MASK_N: usize = 32;

pub(crate) struct Objective {
    pattern: Pattern,
    n: usize,
    full: u32,
}

impl Objective {
    pub(crate) fn new(pattern: Pattern, n: usize) -> Result<Objective> {
        pattern.validate()?;
        let limit = match pattern {
            Pattern::Path(_) | Pattern::Cycle(_) => MAX_SUBSET_DP_N,
            _ => MAX_MASK_N,
        };
        if n > limit {
            return Err(Error::Capability(format!(
                "{pattern} minimization supports n <= {limit}, got {n}"
            )));
        }
        let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        Ok(Objective { pattern, n, full })
    }

    #[inline]
    pub(crate) fn blue(&self, red: &[u32], v: usize) -> u32 {
        !red[v] & self.full & !(1u32 << v)
    }

    pub(crate) fn red_masks(c: &EdgeColoring) -> Vec<u32> {
        let n = c.n();
        let mut adj = alloc::vec![0u32; n];
        for i in 0..n {
            for j in i + 1..n {
                if c.is_red(i, j) {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
            }
        }
        adj
    }

    pub(crate) fn total(&self, red: &[u32]) -> u128 {
        let blue: Vec<u32> = (0..self.n).map(|v| self.blue(red, v)).collect();
        match self.pattern {
            Pattern::Path(k) => paths_from_masks(red, k) + paths_from_masks(&blue, k),
            Pattern::Cycle(k) => cycles_from_masks(red, k) + cycles_from_masks(&blue, k),
            Pattern::Star(1) => (self.n * self.n.saturating_sub(1) / 2) as u128,
            Pattern::Star(k) => (0..self.n)
                .map(|v| {
                    star_term(red[v].count_ones(), k) + star_term(blue[v].count_ones(), k)
                })
                .sum(),
            Pattern::Clique(k) => cliques_in(red, self.full, k) + cliques_in(&blue, self.full, k),
        }
    }

    /// Whether [`flip_delta`](Self::flip_delta) is available.
    pub(crate) fn incremental(&self) -> bool {
        matches!(self.pattern, Pattern::Star(_) | Pattern::Clique(_))
    }

    /// Change in total when pair `{i, j}` switches color. Only for
    /// incremental patterns.
    pub(crate) fn flip_delta(&self, red: &[u32], i: usize, j: usize) -> i128 {
        let was_red = red[i] >> j & 1 == 1;
        match self.pattern {
            Pattern::Star(1) => 0,
            Pattern::Star(k) => {
                let mut delta = 0i128;
                for v in [i, j] {
                    let r = red[v].count_ones();
                    let b = self.n as u32 - 1 - r;
                    let before = star_term(r, k) + star_term(b, k);
                    let after = if was_red {
                        star_term(r - 1, k) + star_term(b + 1, k)
                    } else {
                        star_term(r + 1, k) + star_term(b - 1, k)
                    };
                    delta += after as i128 - before as i128;
                }
                delta
            }
            Pattern::Clique(k) if k <= 2 => 0,
            Pattern::Clique(k) => {
                let red_common = red[i] & red[j];
                let blue_common = self.blue(red, i) & self.blue(red, j);
                let through_red = cliques_in(red, red_common, k - 2) as i128;
                let through_blue = cliques_in_blue(self, red, blue_common, k - 2) as i128;
                if was_red {
                    through_blue - through_red
                } else {
                    through_red - through_blue
                }
            }
            _ => unreachable!("flip_delta on a non-incremental pattern"),
        }
    }
}

#[inline]
fn star_term(deg: u32, k: usize) -> u128 {
    binomial_u128(deg as u64, k as u64).expect("star counts at n <= 32 fit in u128")
}

/// `k`-cliques of the mask graph `adj` inside the vertex set `within`.
fn cliques_in(adj: &[u32], within: u32, k: usize) -> u128 {
    if k == 0 {
        return 1;
    }
    if k == 1 {
        return within.count_ones() as u128;
    }
    let mut total = 0;
    let mut cand = within;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        total += cliques_in(adj, adj[v] & cand, k - 1);
    }
    total
}

fn cliques_in_blue(obj: &Objective, red: &[u32], within: u32, k: usize) -> u128 {
    if k == 0 {
        return 1;
    }
    if k == 1 {
        return within.count_ones() as u128;
    }
    let mut total = 0;
    let mut cand = within;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        total += cliques_in_blue(obj, red, obj.blue(red, v) & cand, k - 1);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::split;
    use crate::counting::count_mono;

    #[test]
    fn totals_match_count_mono() {
        let c = split(5, 3);
        let red = Objective::red_masks(&c);
        for p in [
            Pattern::Path(4),
            Pattern::Path(6),
            Pattern::Cycle(4),
            Pattern::Star(1),
            Pattern::Star(3),
            Pattern::TRIANGLE,
            Pattern::Clique(4),
        ] {
            let obj = Objective::new(p, 8).unwrap();
            assert_eq!(
                obj.total(&red),
                count_mono(&c, p).unwrap().to_u128().unwrap(),
                "{p}"
            );
        }
    }

    #[test]
    fn deltas_match_recount() {
        let c = crate::coloring::construct_split(
            &crate::coloring::SplitSpec::new(4, 4).flip(0, 5).flip(1, 2),
        )
        .unwrap();
        for p in [Pattern::Star(2), Pattern::Star(3), Pattern::TRIANGLE, Pattern::Clique(4)] {
            let obj = Objective::new(p, 8).unwrap();
            let mut red = Objective::red_masks(&c);
            for i in 0..8 {
                for j in i + 1..8 {
                    let before = obj.total(&red) as i128;
                    let d = obj.flip_delta(&red, i, j);
                    red[i] ^= 1 << j;
                    red[j] ^= 1 << i;
                    assert_eq!(obj.total(&red) as i128 - before, d, "{p} ({i},{j})");
                }
            }
        }
    }
}
