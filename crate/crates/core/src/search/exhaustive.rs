use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::objective::Objective;
use super::{verified, MinimizationResult};
use crate::canonical::{canonical_key, canonical_representative};
use crate::coloring::{pair_count, EdgeColoring};
use crate::counting::{MonoCount, Pattern};
use crate::error::{Error, Result};
use crate::par::map_range;

pub const MAX_EXHAUSTIVE_N: usize = 7;
/// Up to this `n` every raw bitmask is enumerated.
const RAW_ENUMERATION_N: usize = 6;
const CHUNKS: usize = 64;

/// Packed-form order key of an index mask: pair 0 is the most significant.
#[inline]
fn packed_order(mask: u64, m: usize) -> u64 {
    if m == 0 {
        0
    } else {
        mask.reverse_bits() >> (64 - m)
    }
}

fn red_masks_from_index(n: usize, mask: u64, out: &mut [u32]) {
    out.iter_mut().for_each(|w| *w = 0);
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> k & 1 == 1 {
                out[i] |= 1 << j;
                out[j] |= 1 << i;
            }
            k += 1;
        }
    }
}

/// One representative per class of two-colorings of `K_n` under vertex
/// relabeling and color exchange, grown one vertex at a time: every
/// coloring minus its last vertex is (up to color exchange) an extension
/// of a smaller representative. Sorted by canonical key.
pub fn coloring_classes(n: usize) -> Result<Vec<EdgeColoring>> {
    if n > MAX_EXHAUSTIVE_N + 1 {
        return Err(Error::Capability(format!(
            "class generation supports n <= {}, got {n}",
            MAX_EXHAUSTIVE_N + 1
        )));
    }
    let mut reps = alloc::vec![EdgeColoring::from_index_mask(n.min(1), 0)];
    if n == 0 {
        return Ok(alloc::vec![EdgeColoring::from_index_mask(0, 0)]);
    }
    for size in 2..=n {
        let mut next: BTreeMap<Vec<u8>, EdgeColoring> = BTreeMap::new();
        for rep in &reps {
            for nbhd in 0u32..(1 << (size - 1)) {
                let mut ext = EdgeColoring::from_index_mask(size, 0);
                for i in 0..size - 1 {
                    for j in i + 1..size - 1 {
                        if rep.is_red(i, j) {
                            ext.set_unchecked(i, j, crate::coloring::Color::Red);
                        }
                    }
                    if nbhd >> i & 1 == 1 {
                        ext.set_unchecked(i, size - 1, crate::coloring::Color::Red);
                    }
                }
                let key = canonical_key(&ext, true)?;
                if !next.contains_key(&key) {
                    let canon = canonical_representative(&ext, true)?;
                    next.insert(key, canon);
                }
            }
        }
        reps = next.into_values().collect();
    }
    Ok(reps)
}

/// Lexicographically least packed form over all relabelings and the color
/// exchange of `c` (`n <= 7`).
fn orbit_minimum(c: &EdgeColoring) -> EdgeColoring {
    let n = c.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = c.clone();
    let swapped = c.swapped();
    // Heap's algorithm over all permutations.
    let mut stack = alloc::vec![0usize; n];
    let consider = |perm: &[usize], best: &mut EdgeColoring| {
        for base in [c, &swapped] {
            let cand = base.permuted(perm);
            if cand < *best {
                *best = cand;
            }
        }
    };
    consider(&perm, &mut best);
    let mut i = 0;
    while i < n {
        if stack[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(stack[i], i);
            }
            consider(&perm, &mut best);
            stack[i] += 1;
            i = 0;
        } else {
            stack[i] = 0;
            i += 1;
        }
    }
    best
}

/// Exact `M(H, n)` for `n <= 7` with the lexicographically least (in
/// packed form) minimizing coloring as witness.
///
/// Raw bitmasks are enumerated up to `n = 6`; at `n = 7` one representative
/// per relabeling/color-exchange class is evaluated.
pub fn exhaustive_min(p: Pattern, n: usize) -> Result<MinimizationResult> {
    p.validate()?;
    if n > MAX_EXHAUSTIVE_N {
        return Err(Error::Capability(format!(
            "exhaustive search supports n <= {MAX_EXHAUSTIVE_N}, got {n}; use anneal_min"
        )));
    }
    let obj = Objective::new(p, n)?;
    if n <= RAW_ENUMERATION_N {
        let m = pair_count(n);
        let total: u64 = 1 << m;
        let chunk = total.div_ceil(CHUNKS as u64).max(1);
        let parts = map_range(CHUNKS, |ci| {
            let lo = ci as u64 * chunk;
            let hi = ((ci as u64 + 1) * chunk).min(total);
            let mut red = alloc::vec![0u32; n];
            let mut best: Option<(u128, u64, u64)> = None;
            for mask in lo..hi {
                red_masks_from_index(n, mask, &mut red);
                let v = obj.total(&red);
                let key = (v, packed_order(mask, m), mask);
                if best.is_none_or(|b| (key.0, key.1) < (b.0, b.1)) {
                    best = Some(key);
                }
            }
            best
        });
        let (count, _, mask) = parts
            .into_iter()
            .flatten()
            .min_by_key(|b| (b.0, b.1))
            .expect("at least one coloring");
        return verified(MinimizationResult {
            pattern: p,
            n,
            best_count: MonoCount::from(count),
            witness: EdgeColoring::from_index_mask(n, mask),
            exact: true,
            explored: total,
        });
    }
    let classes = coloring_classes(n)?;
    let values = map_range(classes.len(), |i| obj.total(&Objective::red_masks(&classes[i])));
    let best = *values.iter().min().expect("at least one class");
    let witness = classes
        .iter()
        .zip(&values)
        .filter(|(_, &v)| v == best)
        .map(|(c, _)| orbit_minimum(c))
        .min()
        .expect("a minimizing class");
    verified(MinimizationResult {
        pattern: p,
        n,
        best_count: MonoCount::from(best),
        witness,
        exact: true,
        explored: classes.len() as u64,
    })
}
