use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rml_core::canonical::canonical_key;
use rml_core::coloring::{pair_count, split};
use rml_core::counting::{
    count_cycles, count_mono, count_paths, formula_split_paths, total_copies_in_complete,
};
use rml_core::regularity::{eps_regular_exact, extremal_detect, check_extremal_partition};
use rml_core::structure::{is_matching, max_matching, verify_erdos_gallai};
use rml_core::{Color, EdgeColoring, Frac, MonoCount, Pattern, SimpleGraph};

fn coloring(n: usize, mask: u64) -> EdgeColoring {
    let m = pair_count(n);
    let keep = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    EdgeColoring::from_index_mask(n, mask & keep)
}

/// Ordered vertex sequences forming a path (or cycle), by brute force.
fn sequences(g: &SimpleGraph, k: usize, closed: bool) -> u64 {
    fn go(g: &SimpleGraph, k: usize, closed: bool, seq: &mut Vec<usize>) -> u64 {
        if seq.len() == k {
            return u64::from(!closed || g.has_edge(seq[k - 1], seq[0]));
        }
        let mut total = 0;
        for v in 0..g.n() {
            if !seq.contains(&v) && seq.last().is_none_or(|&l| g.has_edge(l, v)) {
                seq.push(v);
                total += go(g, k, closed, seq);
                seq.pop();
            }
        }
        total
    }
    go(g, k, closed, &mut Vec::new())
}

fn oracle_paths(g: &SimpleGraph, k: usize) -> u64 {
    let s = sequences(g, k, false);
    if k >= 2 {
        s / 2
    } else {
        s
    }
}

fn oracle_cycles(g: &SimpleGraph, k: usize) -> u64 {
    sequences(g, k, true) / (2 * k as u64)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn canonical_key_is_constant_on_orbits(n in 1usize..=8, mask in any::<u64>(), seed in any::<u64>()) {
        let c = coloring(n, mask);
        let key = canonical_key(&c, false).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..10 {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            prop_assert_eq!(&canonical_key(&c.permuted(&perm), false).unwrap(), &key);
        }
        prop_assert_eq!(canonical_key(&c, true).unwrap(), canonical_key(&c.swapped(), true).unwrap());
    }

    #[test]
    fn views_are_complementary(n in 2usize..=11, mask in any::<u64>()) {
        let c = coloring(n, mask);
        for i in 0..n {
            for j in i + 1..n {
                prop_assert!(c.view(Color::Red).adjacent(i, j) != c.view(Color::Blue).adjacent(i, j));
            }
        }
        prop_assert_eq!(c.red_edge_count() + c.blue_edge_count(), pair_count(n));
    }

    #[test]
    fn packed_bytes_round_trip(n in 0usize..=11, mask in any::<u64>()) {
        let c = coloring(n, mask);
        prop_assert_eq!(EdgeColoring::from_packed_bytes(n, &c.to_packed_bytes()).unwrap(), c);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn counts_match_permutation_oracle(n in 1usize..=7, mask in any::<u64>(), k in 1usize..=7) {
        prop_assume!(k <= n);
        let c = coloring(n, mask);
        for color in [Color::Red, Color::Blue] {
            let view = c.view(color);
            let g = view.to_graph();
            prop_assert_eq!(count_paths(&view, k).unwrap(), MonoCount::from(oracle_paths(&g, k)));
            if k >= 3 {
                prop_assert_eq!(count_cycles(&view, k).unwrap(), MonoCount::from(oracle_cycles(&g, k)));
            }
        }
    }

    #[test]
    fn mono_count_below_total(n in 1usize..=9, mask in any::<u64>(), k in 1usize..=6) {
        prop_assume!(k <= n);
        let c = coloring(n, mask);
        // a lone vertex is a monochromatic P_1 in both colors, so start at P_2
        for p in [Pattern::Path(k), Pattern::Star(k)] {
            if p == Pattern::Path(1) || p.validate().is_err() || p.vertex_count() > n {
                continue;
            }
            let mono = count_mono(&c, p).unwrap();
            let total = total_copies_in_complete(n, p).unwrap();
            prop_assert!(mono.value() <= total.value());
            if p == Pattern::Star(1) {
                prop_assert_eq!(mono, total);
            }
        }
    }

    #[test]
    fn adding_a_red_edge_never_loses_red_paths(n in 3usize..=9, mask in any::<u64>(), k in 2usize..=6, pick in any::<usize>()) {
        let c = coloring(n, mask);
        let blue: Vec<(usize, usize)> = c.graph(Color::Blue).edges().collect();
        prop_assume!(!blue.is_empty());
        let (i, j) = blue[pick % blue.len()];
        let flipped = c.with_flip(i, j).unwrap();
        let before = count_paths(&c.view(Color::Red), k).unwrap();
        let after = count_paths(&flipped.view(Color::Red), k).unwrap();
        prop_assert!(after.value() >= before.value());
    }

    #[test]
    fn max_matching_is_maximum(n in 1usize..=8, mask in any::<u64>()) {
        let g = coloring(n, mask).graph(Color::Red);
        let m = max_matching(&g);
        prop_assert!(is_matching(&g, &m));
        prop_assert_eq!(m.len(), brute_matching(&g));
        prop_assert!(verify_erdos_gallai(&g));
    }
}

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
fn split_formula_agrees_with_counting() {
    for a in 0..=8 {
        for b in 0..=8 {
            let c = split(a, b);
            for k in 1..=8 {
                assert_eq!(
                    formula_split_paths(a, b, k),
                    count_mono(&c, Pattern::Path(k)).unwrap(),
                    "a={a} b={b} k={k}"
                );
            }
        }
    }
}

#[test]
fn split_edge_counts() {
    for a in 0..=7 {
        for b in 0..=7 {
            let c = split(a, b);
            assert_eq!(c.red_edge_count(), a * b);
            assert_eq!(c.blue_edge_count(), a * a.saturating_sub(1) / 2 + b * b.saturating_sub(1) / 2);
        }
    }
}

fn random_bipartite(rng: &mut ChaCha8Rng, a: usize, b: usize, p: f64) -> SimpleGraph {
    let mut g = SimpleGraph::empty(a + b);
    for i in 0..a {
        for j in a..a + b {
            if rng.gen_bool(p) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

#[test]
fn regularity_passes_to_large_subpairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let eps = Frac::new(1, 3);
    let mut regular_pairs = 0;
    for _ in 0..200 {
        let (a, b) = (rng.gen_range(6..=10), rng.gen_range(6..=10));
        let p = rng.gen_range(0.3..0.95);
        let g = random_bipartite(&mut rng, a, b, p);
        let x: Vec<usize> = (0..a).collect();
        let y: Vec<usize> = (a..a + b).collect();
        if !eps_regular_exact(&g, &x, &y, eps).unwrap().regular {
            continue;
        }
        regular_pairs += 1;
        let alpha = Frac::new(rng.gen_range(2..=4), 4);
        let loose = (eps * alpha.recip()).max(eps + eps);
        for _ in 0..5 {
            let xs = rng.gen_range((alpha * Frac::from(a)).ceil() as usize..=a);
            let ys = rng.gen_range((alpha * Frac::from(b)).ceil() as usize..=b);
            let mut xp = x.clone();
            xp.shuffle(&mut rng);
            let mut yp = y.clone();
            yp.shuffle(&mut rng);
            let r = eps_regular_exact(&g, &xp[..xs], &yp[..ys], loose).unwrap();
            assert!(r.regular, "subpair deviation {}", r.max_deviation);
        }
    }
    assert!(regular_pairs >= 10, "only {regular_pairs} regular pairs sampled");
}

#[test]
fn regularity_is_color_symmetric() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..40 {
        let (a, b) = (rng.gen_range(3..=8), rng.gen_range(3..=8));
        let p = rng.gen_range(0.1..0.9);
        let g = random_bipartite(&mut rng, a, b, p);
        let c = EdgeColoring::from_red_graph(&g);
        let x: Vec<usize> = (0..a).collect();
        let y: Vec<usize> = (a..a + b).collect();
        for eps in [Frac::new(1, 5), Frac::new(1, 3)] {
            let red = eps_regular_exact(&c.graph(Color::Red), &x, &y, eps).unwrap();
            let blue = eps_regular_exact(&c.graph(Color::Blue), &x, &y, eps).unwrap();
            assert_eq!(red.regular, blue.regular);
            assert_eq!(red.max_deviation, blue.max_deviation);
        }
    }
}

#[test]
fn extremal_verdicts_revalidate() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for trial in 0..40 {
        let (a, b) = (rng.gen_range(6..=14), rng.gen_range(3..=7));
        let mut c = split(a, b);
        for _ in 0..rng.gen_range(0..6) {
            let (i, j) = (rng.gen_range(0..a + b), rng.gen_range(0..a + b));
            if i != j {
                c = c.with_flip(i, j).unwrap();
            }
        }
        if trial % 2 == 1 {
            c = c.swapped();
        }
        let alpha = Frac::new(rng.gen_range(1..=4), 10);
        let v = extremal_detect(&c, alpha).unwrap();
        if v.is_extremal {
            let (inside, din) = v.inside.unwrap();
            let (_, dacross) = v.across.unwrap();
            assert_eq!(check_extremal_partition(&c, &v.a, &v.b, inside, alpha), Some((din, dacross)));
        }
    }
}
