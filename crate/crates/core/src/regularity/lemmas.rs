//! Numeric checks of three path-count lower bounds for dense or regular
//! bipartite pairs: from a fixed start vertex, between two fixed endpoints,
//! and from either side of a nearly complete bipartite graph.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::density::edges_between;
use super::regular::eps_regular_exact;
use crate::counting::count_paths_from;
use crate::error::{Error, Result};
use crate::frac::Frac;
use crate::graph::SimpleGraph;

/// Paths of length `l` from `start ∈ V` inside an ε-regular pair `(U, V)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StartVertex {
    pub start: usize,
    pub length: usize,
    pub eps: Frac,
    /// Lower bound on both part sizes; defaults to the smaller part.
    pub n: Option<usize>,
}

/// Paths of length `l` joining two fixed vertices of an ε-regular pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteEndpoints {
    pub from: usize,
    pub to: usize,
    pub length: usize,
    pub eps: Frac,
    pub n: Option<usize>,
}

/// Paths on `k` vertices starting in `V` of a bipartite graph with density
/// at least `1 − β` and every `U`-vertex of degree at least `δ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseBipartite {
    pub k: usize,
    pub beta: Frac,
    pub delta: Frac,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LemmaParams {
    StartVertex(StartVertex),
    Endpoints(BipartiteEndpoints),
    DenseBipartite(DenseBipartite),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundVerdict {
    Holds,
    Violated,
    /// Some hypothesis fails, so the bound claims nothing.
    Vacuous,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub hypotheses_hold: bool,
    /// Names of the failing hypotheses.
    pub failed: Vec<&'static str>,
    pub bound: f64,
    pub exact: BigUint,
    pub verdict: BoundVerdict,
}

/// The bipartite graph `G[U, V]` relabelled with `U` first, then `V`.
fn bipartite_part(g: &SimpleGraph, u: &[usize], v: &[usize]) -> SimpleGraph {
    let mut h = SimpleGraph::empty(u.len() + v.len());
    for (i, &a) in u.iter().enumerate() {
        for (j, &b) in v.iter().enumerate() {
            if g.has_edge(a, b) {
                h.add_edge(i, u.len() + j);
            }
        }
    }
    h
}

fn check_disjoint(n: usize, u: &[usize], v: &[usize]) -> Result<()> {
    super::check_set(n, u, "U")?;
    super::check_set(n, v, "V")?;
    if u.iter().any(|x| v.contains(x)) {
        return Err(Error::Domain("U and V must be disjoint".into()));
    }
    Ok(())
}

/// `√x ≤ r`, exactly.
fn sqrt_le(x: Frac, r: Frac) -> bool {
    !r.is_negative() && x <= r * r
}

/// `(n − ⌊i/2⌋)` multiplied over `i` in `lo..=hi`.
fn product(n: usize, lo: usize, hi: usize) -> f64 {
    (lo..=hi).map(|i| n as f64 - (i / 2) as f64).product()
}

fn falling(n: usize, k: usize) -> f64 {
    (0..k).map(|i| n as f64 - i as f64).product()
}

struct Gate {
    failed: Vec<&'static str>,
}

impl Gate {
    fn require(&mut self, ok: bool, name: &'static str) {
        if !ok {
            self.failed.push(name);
        }
    }
}

fn finish(gate: Gate, bound: f64, exact: BigUint) -> BoundReport {
    let hypotheses_hold = gate.failed.is_empty();
    let verdict = if !hypotheses_hold {
        BoundVerdict::Vacuous
    } else {
        let e = exact.to_f64().unwrap_or(f64::INFINITY);
        if bound <= e * (1.0 + 1e-12) {
            BoundVerdict::Holds
        } else {
            BoundVerdict::Violated
        }
    };
    BoundReport { hypotheses_hold, failed: gate.failed, bound, exact, verdict }
}

/// Compares a path-count lower bound with the exact count on `G[U, V]`.
/// Every hypothesis is decided with exact arithmetic; if any fails the
/// verdict is [`BoundVerdict::Vacuous`].
pub fn verify_count_bounds(g: &SimpleGraph, u: &[usize], v: &[usize], params: &LemmaParams) -> Result<BoundReport> {
    check_disjoint(g.n(), u, v)?;
    let h = bipartite_part(g, u, v);
    let local = |x: usize| -> Result<usize> {
        u.iter()
            .position(|&y| y == x)
            .or_else(|| v.iter().position(|&y| y == x).map(|p| u.len() + p))
            .ok_or_else(|| Error::Domain(format!("vertex {x} is in neither part")))
    };
    let d = Frac::new(edges_between(g, u, v) as i128, (u.len() * v.len()) as i128);
    let mut gate = Gate { failed: Vec::new() };
    match params {
        LemmaParams::StartVertex(p) => {
            let n = p.n.unwrap_or(u.len().min(v.len()));
            let eps = p.eps;
            let start = local(p.start)?;
            gate.require(start >= u.len(), "start vertex lies in V");
            gate.require(eps_regular_exact(g, u, v, eps)?.regular, "pair is eps-regular");
            gate.require(u.len() >= n && v.len() >= n, "both parts have at least n vertices");
            gate.require(Frac::from(n) * eps * eps >= Frac::ONE, "n >= eps^-2");
            gate.require((d - eps).gt_sqrt(eps), "d > eps + sqrt(eps)");
            let deg = Frac::from(h.degree(start));
            gate.require(deg >= (d - eps) * Frac::from(u.len()), "start has (d - eps)|U| neighbours");
            // l <= 2(1 - √ε)n − 1  ⇔  √ε <= 1 − (l + 1)/2n
            gate.require(p.length >= 1, "l >= 1");
            gate.require(
                sqrt_le(eps, Frac::ONE - Frac::new(p.length as i128 + 1, 2 * n as i128)),
                "l <= 2(1 - sqrt(eps))n - 1",
            );
            let exact = count_paths_from(&h, start, p.length, None)?;
            let base = d.to_f64() - eps.to_f64() - libm::sqrt(eps.to_f64());
            let bound = libm::pow(base, p.length as f64) * product(n, 1, p.length);
            Ok(finish(gate, bound, exact))
        }
        LemmaParams::Endpoints(p) => {
            let n = p.n.unwrap_or(u.len().min(v.len()));
            let eps = p.eps;
            let (a, b) = (local(p.from)?, local(p.to)?);
            if a == b {
                return Err(Error::Domain("endpoints must differ".into()));
            }
            let l = p.length;
            gate.require(eps_regular_exact(g, u, v, eps)?.regular, "pair is eps-regular");
            gate.require(u.len() >= n && v.len() >= n, "both parts have at least n vertices");
            gate.require(Frac::from(n) * eps * eps >= Frac::int(5), "n >= 5 eps^-2");
            gate.require((d * Frac::new(1, 5)).gt_sqrt(eps), "d > 5 sqrt(eps)");
            for x in [a, b] {
                let other = if x < u.len() { v.len() } else { u.len() };
                gate.require(
                    Frac::from(h.degree(x)) >= (d - eps) * Frac::from(other),
                    "endpoints see a (d - eps) fraction of the other part",
                );
            }
            gate.require(l >= 3, "l >= 3");
            // l <= 2(1 − 2√ε)n  ⇔  √ε <= (1 − l/2n)/2
            gate.require(
                sqrt_le(eps, (Frac::ONE - Frac::new(l as i128, 2 * n as i128)) * Frac::new(1, 2)),
                "l <= 2(1 - 2 sqrt(eps))n",
            );
            let same_side = (a < u.len()) == (b < u.len());
            gate.require((l % 2 == 0) == same_side, "parity of l matches the endpoint sides");
            let exact = count_paths_from(&h, a, l, Some(b))?;
            let base = d.to_f64() - 7.0 * libm::sqrt(eps.to_f64());
            let bound = libm::pow(base, l as f64 - 1.0) * (eps.to_f64() * n as f64) * product(n, 1, l.saturating_sub(2));
            Ok(finish(gate, bound, exact))
        }
        LemmaParams::DenseBipartite(p) => {
            let (k, beta, delta) = (p.k, p.beta, p.delta);
            let (nu, nv) = (u.len(), v.len());
            gate.require(k >= 1, "k >= 1");
            gate.require(4 * nv >= 3 * k, "|V| >= 3k/4");
            gate.require(nu >= k / 2, "|U| >= floor(k/2)");
            gate.require(d >= Frac::ONE - beta, "density >= 1 - beta");
            gate.require(!beta.is_negative() && beta < Frac::new(1, 10_000), "0 <= beta < 1e-4");
            let min_deg = (0..nu).map(|i| h.degree(i)).min().unwrap_or(0);
            gate.require(Frac::from(min_deg) >= delta, "every U vertex has degree >= delta");
            let big = Frac::from(nv.max(2 * nu));
            // δ >= 4√β·max  ⇔  √β <= δ / (4·max)
            gate.require(sqrt_le(beta, delta * Frac::new(1, 4) * big.recip()), "delta >= 4 sqrt(beta) max(|V|, 2|U|)");
            let starts: Vec<usize> = (nu..nu + nv).collect();
            let exact = crate::counting::count_sequences_from_set(&h, &starts, k)?;
            let sb = libm::sqrt(beta.to_f64());
            let (df, half) = (delta.to_f64(), k as f64 / 2.0);
            let bound = if sb == 0.0 {
                falling(nu, k / 2) * falling(nv, k.div_ceil(2))
            } else {
                libm::pow(df / (4.0 * nv as f64), 2.0 * sb * nu as f64)
                    * libm::pow(1.0 - 4.0 * sb * nu as f64 / df, half)
                    * libm::pow(1.0 - 6.0 * sb, half)
                    * falling(nu, k / 2)
                    * falling(nv, k.div_ceil(2))
            };
            Ok(finish(gate, bound, exact))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts(a: usize, b: usize) -> (Vec<usize>, Vec<usize>) {
        ((0..a).collect(), (a..a + b).collect())
    }

    #[test]
    fn complete_bipartite_start_vertex() {
        let g = SimpleGraph::complete_bipartite(8, 8);
        let (u, v) = parts(8, 8);
        let r = verify_count_bounds(
            &g,
            &u,
            &v,
            &LemmaParams::StartVertex(StartVertex { start: 8, length: 5, eps: Frac::new(1, 2), n: None }),
        )
        .unwrap();
        // 8·7·7·6·6
        assert_eq!(r.exact, BigUint::from(14112u32));
        assert_eq!(r.verdict, BoundVerdict::Vacuous);
        // ε = 1/8: n ε² = 1/8 < 1 still fails; larger parts are needed for a live instance
        let g = SimpleGraph::complete_bipartite(12, 12);
        let (u, v) = parts(12, 12);
        let r = verify_count_bounds(
            &g,
            &u,
            &v,
            &LemmaParams::StartVertex(StartVertex { start: 12, length: 5, eps: Frac::new(3, 10), n: None }),
        )
        .unwrap();
        assert!(r.hypotheses_hold, "{:?}", r.failed);
        assert_eq!(r.verdict, BoundVerdict::Holds);
        assert_eq!(r.exact, BigUint::from(12u32 * 11 * 11 * 10 * 10));
    }

    #[test]
    fn endpoints_are_vacuous_at_small_sizes() {
        let g = SimpleGraph::complete_bipartite(12, 12);
        let (u, v) = parts(12, 12);
        let r = verify_count_bounds(
            &g,
            &u,
            &v,
            &LemmaParams::Endpoints(BipartiteEndpoints { from: 0, to: 12, length: 3, eps: Frac::new(1, 100), n: None }),
        )
        .unwrap();
        assert_eq!(r.verdict, BoundVerdict::Vacuous);
        assert!(r.failed.contains(&"n >= 5 eps^-2"));
        // 11 · 11 middle pairs
        assert_eq!(r.exact, BigUint::from(121u32));
    }

    #[test]
    fn dense_bipartite_complete() {
        let g = SimpleGraph::complete_bipartite(4, 5);
        let (u, v) = parts(4, 5);
        let r = verify_count_bounds(
            &g,
            &u,
            &v,
            &LemmaParams::DenseBipartite(DenseBipartite { k: 5, beta: Frac::ZERO, delta: Frac::int(5) }),
        )
        .unwrap();
        assert!(r.hypotheses_hold, "{:?}", r.failed);
        assert_eq!(r.verdict, BoundVerdict::Holds);
        // V U V U V from V: 5·4·4·3·3
        assert_eq!(r.exact, BigUint::from(720u32));
        assert_eq!(r.bound, 720.0);
    }

    #[test]
    fn bad_inputs() {
        let g = SimpleGraph::complete_bipartite(3, 3);
        let p = LemmaParams::DenseBipartite(DenseBipartite { k: 3, beta: Frac::ZERO, delta: Frac::ONE });
        assert!(verify_count_bounds(&g, &[0, 1], &[1, 2], &p).is_err());
    }
}
