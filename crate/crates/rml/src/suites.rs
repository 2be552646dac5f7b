//! Named verification suites behind `rml verify`.

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rml_core::coloring::{construct_split, split, SplitSpec};
use rml_core::counting::{count_mono, factorial};
use rml_core::ramsey::{m_star, r_path};
use rml_core::regularity::{
    build_reduced, check_extremal_partition, dichotomy_classify, extremal_detect, verify_count_bounds,
    BipartiteEndpoints, BoundVerdict, DenseBipartite, Dichotomy, LemmaParams, RegularityMode, StartVertex,
    VertexPartition,
};
use rml_core::search::exhaustive_min;
use rml_core::structure::{konig_edge_bound_check, verify_erdos_gallai, well_connected_check, Verdict};
use rml_core::{Color, EdgeColoring, Frac, Pattern, SimpleGraph};

use crate::error::CliError;
use crate::report::Provenance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Formulas,
    Bounds,
    Structure,
    Stability,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Formulas => "formulas",
            Suite::Bounds => "bounds",
            Suite::Structure => "structure",
            Suite::Stability => "stability",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub anchor: String,
    pub passed: bool,
    pub detail: String,
    pub provenance: Provenance,
}

impl Check {
    fn new(anchor: impl Into<String>, passed: bool, detail: impl Into<String>, provenance: Provenance) -> Check {
        Check { anchor: anchor.into(), passed, detail: detail.into(), provenance }
    }

    pub fn line(&self) -> String {
        format!("{} {}: {}", if self.passed { "PASS" } else { "FAIL" }, self.anchor, self.detail)
    }
}

pub fn run(suite: Suite, seed: u64) -> Result<Vec<Check>, CliError> {
    match suite {
        Suite::Formulas => formulas(),
        Suite::Bounds => bounds(seed),
        Suite::Structure => structure(seed),
        Suite::Stability => stability(seed),
    }
}

fn count(c: &EdgeColoring, p: Pattern) -> Result<BigUint, CliError> {
    Ok(count_mono(c, p)?.0)
}

fn equal(anchor: String, got: BigUint, want: BigUint) -> Check {
    Check::new(anchor, got == want, format!("{got} (expected {want})"), Provenance::Exact)
}

fn formulas() -> Result<Vec<Check>, CliError> {
    let mut out = Vec::new();
    for k in [4usize, 6, 8, 10] {
        let want = factorial(k as u64) / 2u32;
        out.push(equal(format!("even path count on χ({k},{})", k / 2 - 1), count(&split(k, k / 2 - 1), Pattern::Path(k))?, want.clone()));
        out.push(equal(format!("even path count on χ({},{})", k - 1, k / 2), count(&split(k - 1, k / 2), Pattern::Path(k))?, want));
    }
    for k in [5usize, 7, 9] {
        let want = BigUint::from(k - 1) * factorial(k as u64 - 1) / 4u32;
        out.push(equal(format!("odd path count P_{k} on χ({},{})", k - 1, k / 2), count(&split(k - 1, k / 2), Pattern::Path(k))?, want));
    }
    for k in [6usize, 8] {
        let c = construct_split(&SplitSpec::new(k, k / 2 - 1).flip(0, 1))?;
        let want = BigUint::from(k - 3) * factorial(k as u64 - 2) / 2u32;
        out.push(equal(format!("even cycle count C_{k} on χ({k},{}) with flip (0,1)", k / 2 - 1), count(&c, Pattern::Cycle(k))?, want));
    }
    for k in [5usize, 7] {
        let want = factorial(k as u64 - 1) / 2u32;
        out.push(equal(format!("odd cycle count C_{k} on χ({k},{})", k - 1), count(&split(k, k - 1), Pattern::Cycle(k))?, want));
    }
    for k in 3..=12usize {
        let r = r_path(k)?;
        let (a, b) = (k - 1, k / 2 - 1);
        let got = count(&split(a, b), Pattern::Path(k))?;
        let ok = got == BigUint::ZERO && a + b == r - 1;
        out.push(Check::new(
            format!("path Ramsey lower witness P_{k}"),
            ok,
            format!("χ({a},{b}) on r-1 = {} vertices has {got} copies", r - 1),
            Provenance::Exact,
        ));
    }
    for k in 3..=4usize {
        let r = r_path(k)?;
        let m = exhaustive_min(Pattern::Path(k), r)?.best_count;
        out.push(Check::new(format!("path Ramsey upper end P_{k}"), !m.is_zero(), format!("M(P_{k},{r}) = {m}"), Provenance::Exact));
    }
    for (k, n) in [(3usize, 6usize), (4, 7)] {
        let got = exhaustive_min(Pattern::Star(k), n)?.best_count;
        let want = m_star(k)?;
        out.push(Check::new(format!("star threshold S_{k}"), got == want, format!("M(S_{k},{n}) = {got} (expected {want})"), Provenance::Exact));
    }
    let t6 = exhaustive_min(Pattern::TRIANGLE, 6)?.best_count;
    let t5 = exhaustive_min(Pattern::TRIANGLE, 5)?.best_count;
    out.push(Check::new(
        "triangle threshold",
        t6 == 2u64.into() && t5.is_zero(),
        format!("M(K3,6) = {t6}, M(K3,5) = {t5}"),
        Provenance::Exact,
    ));
    Ok(out)
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

fn sides(a: usize, b: usize) -> (Vec<usize>, Vec<usize>) {
    ((0..a).collect(), (a..a + b).collect())
}

struct Tally {
    name: &'static str,
    instances: usize,
    live: usize,
    violation: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Tally {
        Tally { name, instances: 0, live: 0, violation: None }
    }

    fn add(&mut self, r: &rml_core::regularity::BoundReport) {
        self.instances += 1;
        match r.verdict {
            BoundVerdict::Holds => self.live += 1,
            BoundVerdict::Violated if self.violation.is_none() => {
                self.violation = Some(format!("bound {} exceeds exact {}", r.bound, r.exact))
            }
            _ => {}
        }
    }

    fn check(self) -> Check {
        let detail = match &self.violation {
            Some(v) => v.clone(),
            None => format!("{} instances, {} with all hypotheses met, no violations", self.instances, self.live),
        };
        Check::new(self.name, self.violation.is_none(), detail, Provenance::Evidence)
    }
}

fn bounds(seed: u64) -> Result<Vec<Check>, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let eps_choices = [Frac::new(1, 4), Frac::new(3, 10), Frac::new(7, 20), Frac::new(2, 5), Frac::new(1, 2)];
    let mut out = Vec::new();

    let mut start = Tally::new("start-vertex path bound");
    let mut product_bad = None;
    for i in 0..100 {
        let complete = i % 2 == 0;
        let (a, b) = if complete {
            let s = rng.gen_range(4..=12);
            (s, s)
        } else {
            (rng.gen_range(6..=12), rng.gen_range(6..=12))
        };
        let g = if complete {
            SimpleGraph::complete_bipartite(a, b)
        } else {
            let p = rng.gen_range(0.75..1.0);
            random_bipartite(&mut rng, a, b, p)
        };
        let (u, v) = sides(a, b);
        let l = rng.gen_range(1..=6);
        let s = v[rng.gen_range(0..b)];
        let eps = *eps_choices.choose(&mut rng).expect("nonempty");
        let r = verify_count_bounds(&g, &u, &v, &LemmaParams::StartVertex(StartVertex { start: s, length: l, eps, n: None }))?;
        start.add(&r);
        if complete {
            let want: BigUint = (1..=l).map(|i| BigUint::from(a - i / 2)).product();
            if r.exact != want && product_bad.is_none() {
                product_bad = Some(format!("K_{{{a},{a}}} l={l}: {} != {want}", r.exact));
            }
        }
    }
    out.push(start.check());
    out.push(Check::new(
        "complete bipartite path product",
        product_bad.is_none(),
        product_bad.unwrap_or_else(|| "exact counts equal the falling product".into()),
        Provenance::Exact,
    ));

    let mut ends = Tally::new("fixed-endpoint path bound");
    for _ in 0..100 {
        let (a, b) = (rng.gen_range(6..=12), rng.gen_range(6..=12));
        let p = rng.gen_range(0.6..1.0);
        let g = random_bipartite(&mut rng, a, b, p);
        let (u, v) = sides(a, b);
        let from = u[rng.gen_range(0..a)];
        let same = rng.gen::<bool>();
        let to = if same {
            let others: Vec<usize> = u.iter().copied().filter(|&x| x != from).collect();
            others[rng.gen_range(0..others.len())]
        } else {
            v[rng.gen_range(0..b)]
        };
        let mut l = rng.gen_range(3..=6);
        if (l % 2 == 0) != same {
            l += 1;
        }
        let eps = *eps_choices.choose(&mut rng).expect("nonempty");
        let r = verify_count_bounds(&g, &u, &v, &LemmaParams::Endpoints(BipartiteEndpoints { from, to, length: l, eps, n: None }))?;
        ends.add(&r);
    }
    out.push(ends.check());

    let mut dense = Tally::new("dense bipartite path bound");
    for i in 0..100 {
        let (a, b) = (rng.gen_range(2..=8), rng.gen_range(3..=10));
        let g = if i % 4 == 3 { random_bipartite(&mut rng, a, b, 0.9) } else { SimpleGraph::complete_bipartite(a, b) };
        let (u, v) = sides(a, b);
        let k = rng.gen_range(3..=6);
        let delta = Frac::from(rng.gen_range(1..=b));
        let r = verify_count_bounds(&g, &u, &v, &LemmaParams::DenseBipartite(DenseBipartite { k, beta: Frac::ZERO, delta }))?;
        dense.add(&r);
    }
    out.push(dense.check());
    Ok(out)
}

fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> SimpleGraph {
    let mut g = SimpleGraph::empty(n);
    for (k, &(i, j)) in pairs.iter().enumerate() {
        if mask >> k & 1 == 1 {
            g.add_edge(i, j);
        }
    }
    g
}

fn konig_holds(g: &SimpleGraph, a: usize, b: usize) -> Result<bool, CliError> {
    let (left, right) = sides(a, b);
    for k in 0..=a.min(b) {
        if !konig_edge_bound_check(g, &left, &right, k)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn structure(seed: u64) -> Result<Vec<Check>, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();

    let (mut total, mut failed) = (0u64, 0u64);
    for n in 1..=5 {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        for mask in 0..1u64 << pairs.len() {
            total += 1;
            failed += u64::from(!verify_erdos_gallai(&graph_from_mask(n, &pairs, mask)));
        }
    }
    out.push(Check::new("matching-number edge bound, all graphs n<=5", failed == 0, format!("{failed}/{total} fail"), Provenance::Exact));

    let (mut total, mut failed) = (0u64, 0u64);
    for _ in 0..5_000 {
        let n = rng.gen_range(6..=10);
        let p: f64 = rng.gen_range(0.05..0.95);
        let mut g = SimpleGraph::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(i, j);
                }
            }
        }
        total += 1;
        failed += u64::from(!verify_erdos_gallai(&g));
    }
    out.push(Check::new("matching-number edge bound, sampled n in 6..10", failed == 0, format!("{failed}/{total} fail"), Provenance::Evidence));

    let (mut total, mut failed) = (0u64, 0u64);
    for a in 1..=3 {
        for b in 1..=4 {
            let cross: Vec<(usize, usize)> = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect();
            for mask in 0..1u64 << cross.len() {
                total += 1;
                failed += u64::from(!konig_holds(&graph_from_mask(a + b, &cross, mask), a, b)?);
            }
        }
    }
    out.push(Check::new("bipartite k·n edge bound, all parts <=3x4", failed == 0, format!("{failed}/{total} fail"), Provenance::Exact));

    let (mut total, mut failed) = (0u64, 0u64);
    for _ in 0..5_000 {
        let (a, b) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
        let p: f64 = rng.gen_range(0.05..0.95);
        let g = random_bipartite(&mut rng, a, b, p);
        total += 1;
        failed += u64::from(!konig_holds(&g, a, b)?);
    }
    out.push(Check::new("bipartite k·n edge bound, sampled parts <=8", failed == 0, format!("{failed}/{total} fail"), Provenance::Evidence));

    let red = split(8, 8).graph(Color::Red);
    let all: Vec<usize> = (0..16).collect();
    let wc = well_connected_check(&red, &all, 7, 3)?;
    let valid = wc.certificates.iter().all(|c| c.validate(&red).is_ok());
    out.push(Check::new(
        "well-connectedness of χ(8,8) red, t=7 l=3",
        wc.verdict == Verdict::Certified && valid,
        format!("{:?} with {} certificates", wc.verdict, wc.certificates.len()),
        Provenance::Exact,
    ));
    Ok(out)
}

fn stability(seed: u64) -> Result<Vec<Check>, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (eps, d, alpha, lambda) = (Frac::new(1, 5), Frac::new(1, 2), Frac::new(1, 10), Frac::new(1, 20));
    let mut out = Vec::new();

    let c = split(18, 9);
    let all: Vec<usize> = (0..27).collect();
    let parts = VertexPartition::equitable(27, &all, 9)?;
    let rg = build_reduced(&c, &parts, eps, d, RegularityMode::Exact)?;
    let k63 = SimpleGraph::complete_bipartite(6, 3);
    out.push(Check::new(
        "reduced graph of χ(18,9)",
        rg.red == k63 && rg.blue == k63.complement(),
        "red K_{6,3}, blue K_6 + K_3 over 9 parts",
        Provenance::Exact,
    ));
    let sampled = build_reduced(&c, &parts, eps, d, RegularityMode::Sample { trials: 40, seed })?;
    out.push(Check::new(
        "sampled reduced graph agrees",
        sampled.red == rg.red && sampled.blue == rg.blue,
        "sampled regularity keeps every exact edge",
        Provenance::Evidence,
    ));
    let dich = dichotomy_classify(&rg, lambda);
    out.push(Check::new("dichotomy on χ(18,9)", dich == Dichotomy::NotCase1, format!("{dich:?}"), Provenance::Exact));
    let red18 = EdgeColoring::monochromatic(18, Color::Red);
    let parts18 = VertexPartition::equitable(18, &all[..18], 6)?;
    let rg18 = build_reduced(&red18, &parts18, eps, d, RegularityMode::Exact)?;
    let dich18 = dichotomy_classify(&rg18, lambda);
    out.push(Check::new(
        "dichotomy on all-red K_18",
        matches!(dich18, Dichotomy::Case1 { color: Color::Red, .. }) && dich18.validate(&rg18, lambda),
        "red matching certificate",
        Provenance::Exact,
    ));

    let mut found = 0;
    let mut revalidated = true;
    let trials = 20;
    for _ in 0..trials {
        let mut p = SplitSpec::new(18, 9);
        let mut used = std::collections::BTreeSet::new();
        let flips = rng.gen_range(0..=4);
        while used.len() < flips {
            let (i, j) = (rng.gen_range(0..27), rng.gen_range(0..27));
            if i != j && used.insert((i.min(j), i.max(j))) {
                p = p.flip(i, j);
            }
        }
        let mut c = construct_split(&p)?;
        let mut perm: Vec<usize> = (0..27).collect();
        perm.shuffle(&mut rng);
        c = c.permuted(&perm);
        let v = extremal_detect(&c, alpha)?;
        if v.is_extremal {
            found += 1;
            let inside = v.inside.map(|x| x.0).unwrap_or(Color::Blue);
            revalidated &= check_extremal_partition(&c, &v.a, &v.b, inside, alpha).is_some();
        }
    }
    out.push(Check::new(
        "extremal detection under perturbation",
        found == trials && revalidated,
        format!("{found}/{trials} relabelled χ(18,9) with up to 4 flips detected at α=1/10"),
        Provenance::Exact,
    ));

    let n = 30;
    let mut g = SimpleGraph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen::<bool>() {
                g.add_edge(i, j);
            }
        }
    }
    let random = extremal_detect(&EdgeColoring::from_red_graph(&g), Frac::new(1, 20))?;
    out.push(Check::new(
        "random coloring is not extremal",
        !random.is_extremal,
        "uniform coloring of K_30 at α=1/20",
        Provenance::Evidence,
    ));
    Ok(out)
}
