//! Canonical keys for colorings up to vertex relabeling (and optionally
//! color exchange), used for isomorph rejection in exhaustive search.
//!
//! The search refines an ordered partition of the vertices by red degree
//! into each cell until it is equitable, then individualizes vertices of
//! the first non-singleton cell and recurses. Every discrete partition is a
//! relabeling; the key is the lexicographically least relabeled bitstring.
//! Refinement and branching depend only on the isomorphism type, so the
//! minimum is an invariant. Vertices of a cell that are twins of an
//! already-explored sibling are skipped: swapping twins is an automorphism
//! fixing the partition, so both subtrees produce the same leaves.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::{pair_count, EdgeColoring};
use crate::error::{Error, Result};

/// Largest `n` accepted by [`canonical_key`].
pub const MAX_CANONICAL_N: usize = 12;

fn red_masks(c: &EdgeColoring) -> Vec<u32> {
    let n = c.n();
    let mut adj = vec![0u32; n];
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

fn refine(adj: &[u32], cells: &mut Vec<Vec<usize>>) {
    loop {
        let masks: Vec<u32> = cells
            .iter()
            .map(|cell| cell.iter().fold(0u32, |m, &v| m | 1 << v))
            .collect();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(adj.len());
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u8>, usize)> = cell
                .iter()
                .map(|&v| {
                    let sig = masks
                        .iter()
                        .map(|m| (adj[v] & m).count_ones() as u8)
                        .collect::<Vec<u8>>();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        let split = next.len() > cells.len();
        *cells = next;
        if !split {
            return;
        }
    }
}

fn leaf_key(adj: &[u32], order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut bytes = vec![0u8; pair_count(n).div_ceil(8)];
    let mut k = 0;
    for p in 0..n {
        for q in p + 1..n {
            if adj[order[p]] >> order[q] & 1 == 1 {
                bytes[k / 8] |= 0x80 >> (k % 8);
            }
            k += 1;
        }
    }
    bytes
}

fn search(adj: &[u32], mut cells: Vec<Vec<usize>>, best: &mut Option<Vec<u8>>) {
    refine(adj, &mut cells);
    let Some(t) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let key = leaf_key(adj, &order);
        if best.as_ref().is_none_or(|b| key < *b) {
            *best = Some(key);
        }
        return;
    };
    let cell = cells[t].clone();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        let twin = tried.iter().any(|&w| {
            (adj[v] & !(1u32 << w)) == (adj[w] & !(1u32 << v))
        });
        if twin {
            continue;
        }
        tried.push(v);
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..t]);
        next.push(vec![v]);
        next.push(cell.iter().copied().filter(|&w| w != v).collect());
        next.extend_from_slice(&cells[t + 1..]);
        search(adj, next, best);
    }
}

fn key_of(c: &EdgeColoring) -> Vec<u8> {
    let adj = red_masks(c);
    let n = c.n();
    if n == 0 {
        return Vec::new();
    }
    let mut best = None;
    search(&adj, vec![(0..n).collect()], &mut best);
    best.unwrap_or_default()
}

/// Key that is equal for two colorings iff they are isomorphic (under
/// relabeling, plus color exchange when `swap_colors`). The first byte is
/// `n`; the rest is the packed red bitstring of the canonical relabeling.
pub fn canonical_key(c: &EdgeColoring, swap_colors: bool) -> Result<Vec<u8>> {
    let n = c.n();
    if n > MAX_CANONICAL_N {
        return Err(Error::Capability(format!(
            "canonical_key supports n <= {MAX_CANONICAL_N}, got {n}"
        )));
    }
    let mut body = key_of(c);
    if swap_colors {
        let other = key_of(&c.swapped());
        if other < body {
            body = other;
        }
    }
    let mut key = Vec::with_capacity(body.len() + 1);
    key.push(n as u8);
    key.extend(body);
    Ok(key)
}

/// The coloring whose packed form is the canonical key body.
pub fn canonical_representative(c: &EdgeColoring, swap_colors: bool) -> Result<EdgeColoring> {
    let key = canonical_key(c, swap_colors)?;
    EdgeColoring::from_packed_bytes(c.n(), &key[1..])
}
