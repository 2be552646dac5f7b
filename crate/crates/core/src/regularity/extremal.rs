use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::check_set;
use crate::coloring::{Color, ColorView, EdgeColoring};
use crate::error::{Error, Result};
use crate::frac::Frac;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalVerdict {
    pub is_extremal: bool,
    pub alpha: Frac,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    /// Color dense inside `A`, and its density `2e(A)/|A|²`.
    pub inside: Option<(Color, Frac)>,
    /// The other color's density across `A × B`.
    pub across: Option<(Color, Frac)>,
    pub diagnostic: Option<String>,
}

fn inside_density(view: ColorView<'_>, a: &[usize]) -> Frac {
    if a.is_empty() {
        return Frac::ONE;
    }
    let mut e = 0i128;
    for (k, &u) in a.iter().enumerate() {
        for &v in &a[k + 1..] {
            if view.adjacent(u, v) {
                e += 1;
            }
        }
    }
    Frac::new(2 * e, (a.len() * a.len()) as i128)
}

fn across_density(view: ColorView<'_>, a: &[usize], b: &[usize]) -> Frac {
    if a.is_empty() || b.is_empty() {
        return Frac::ONE;
    }
    let e = a
        .iter()
        .map(|&u| b.iter().filter(|&&v| view.adjacent(u, v)).count())
        .sum::<usize>();
    Frac::new(e as i128, (a.len() * b.len()) as i128)
}

/// Tests the four extremal conditions for the split `(A, B)` exactly, with
/// `inside` the color dense within `A`. Empty sets satisfy density
/// conditions vacuously. Returns both densities when all hold.
pub fn check_extremal_partition(
    c: &EdgeColoring,
    a: &[usize],
    b: &[usize],
    inside: Color,
    alpha: Frac,
) -> Option<(Frac, Frac)> {
    let n = Frac::from(c.n());
    let one = Frac::ONE;
    if Frac::from(a.len()) < (Frac::new(2, 3) - alpha) * n || Frac::from(b.len()) < (Frac::new(1, 3) - alpha) * n {
        return None;
    }
    let din = inside_density(c.view(inside), a);
    let dacross = across_density(c.view(inside.other()), a, b);
    (din >= one - alpha && dacross >= one - alpha).then_some((din, dacross))
}

/// Searches for an extremal partition: for each choice of color dense
/// inside `A`, start from a vertex and its neighbourhood in that color and
/// repeatedly keep the vertices with at least `2|A|/3` such neighbours in
/// `A`, up to `n` rounds; the fixed point is then tested exactly.
pub fn extremal_detect(c: &EdgeColoring, alpha: Frac) -> Result<ExtremalVerdict> {
    let n = c.n();
    if n < 3 {
        return Err(Error::Domain(format!("extremal detection needs n >= 3, got {n}")));
    }
    let everyone: Vec<usize> = (0..n).collect();
    if alpha >= Frac::new(2, 3) {
        return Ok(ExtremalVerdict {
            is_extremal: true,
            alpha,
            a: Vec::new(),
            b: everyone,
            inside: None,
            across: None,
            diagnostic: Some("alpha >= 2/3: A may be empty".into()),
        });
    }
    let mut nonconvergent = 0usize;
    let mut tried: BTreeSet<Vec<usize>> = BTreeSet::new();
    for inside in [Color::Blue, Color::Red] {
        let view = c.view(inside);
        let seeds = (0..n)
            .map(|s| {
                let mut a: Vec<usize> = (0..n).filter(|&v| v == s || view.adjacent(s, v)).collect();
                a.sort_unstable();
                a
            })
            .chain(core::iter::once(everyone.clone()));
        for seed in seeds {
            let mut a = seed;
            let mut stable = false;
            for _ in 0..n {
                let size = a.len();
                let next: Vec<usize> = (0..n)
                    .filter(|&v| {
                        let deg = a.iter().filter(|&&w| w != v && view.adjacent(v, w)).count();
                        3 * deg >= 2 * size
                    })
                    .collect();
                if next == a {
                    stable = true;
                    break;
                }
                a = next;
            }
            if !stable {
                nonconvergent += 1;
                continue;
            }
            if !tried.insert(a.clone()) {
                continue;
            }
            let b: Vec<usize> = (0..n).filter(|v| a.binary_search(v).is_err()).collect();
            if let Some((din, dacross)) = check_extremal_partition(c, &a, &b, inside, alpha) {
                return Ok(ExtremalVerdict {
                    is_extremal: true,
                    alpha,
                    a,
                    b,
                    inside: Some((inside, din)),
                    across: Some((inside.other(), dacross)),
                    diagnostic: None,
                });
            }
        }
        tried.clear();
    }
    Ok(ExtremalVerdict {
        is_extremal: false,
        alpha,
        a: Vec::new(),
        b: Vec::new(),
        inside: None,
        across: None,
        diagnostic: (nonconvergent > 0)
            .then(|| format!("{nonconvergent} seeds did not reach a fixed point within {n} rounds")),
    })
}

/// Every vertex of `S` has at least `|S|/2` neighbours in `S`.
pub fn dirac_check(view: ColorView<'_>, s: &[usize]) -> Result<bool> {
    check_set(view.n(), s, "S")?;
    if s.len() < 3 {
        return Err(Error::Domain(format!("Dirac check needs |S| >= 3, got {}", s.len())));
    }
    Ok(s.iter().all(|&v| 2 * s.iter().filter(|&&w| w != v && view.adjacent(v, w)).count() >= s.len()))
}
