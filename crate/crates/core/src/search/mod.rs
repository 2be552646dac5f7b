//! Minimizing the number of monochromatic copies of a pattern over all
//! two-colorings of `K_n`.
//!
//! [`exhaustive_min`] computes `M(H, n)` exactly for `n <= 7`;
//! [`anneal_min`] certifies upper bounds at larger `n` with a witness.
//! [`ramsey_via_search`] and [`threshold_multiplicity`] build `r(H)` and
//! `m(H) = M(H, r(H))` on top of them.

mod anneal;
mod exhaustive;
mod objective;

use alloc::format;

pub use anneal::{anneal_from, anneal_min};
pub use exhaustive::{coloring_classes, exhaustive_min, MAX_EXHAUSTIVE_N};

use crate::coloring::{split, EdgeColoring};
use crate::counting::{count_mono, MonoCount, Pattern};
use crate::error::{Error, Result};
use crate::ramsey::{ramsey_formula, Provenance, RamseyValue};

/// Annealing parameters. Identical config and inputs give identical output.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchConfig {
    pub seed: u64,
    pub restarts: usize,
    pub steps_per_restart: usize,
    pub initial_temperature: f64,
    /// Per-step multiplicative temperature decay, in `(0, 1)`.
    pub cooling_rate: f64,
}

impl SearchConfig {
    /// The default schedule (32 restarts × 20000 single-edge flips,
    /// `T₀ = 2.0`, cooling 0.999) with an explicit seed.
    pub fn with_seed(seed: u64) -> SearchConfig {
        SearchConfig {
            seed,
            restarts: 32,
            steps_per_restart: 20_000,
            initial_temperature: 2.0,
            cooling_rate: 0.999,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.cooling_rate > 0.0 && self.cooling_rate < 1.0) {
            return Err(Error::Domain(format!(
                "cooling rate must lie in (0,1), got {}",
                self.cooling_rate
            )));
        }
        if !(self.initial_temperature > 0.0 && self.initial_temperature.is_finite()) {
            return Err(Error::Domain("initial temperature must be positive".into()));
        }
        if self.restarts == 0 {
            return Err(Error::Domain("at least one restart is required".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimizationResult {
    pub pattern: Pattern,
    pub n: usize,
    pub best_count: MonoCount,
    pub witness: EdgeColoring,
    /// True only for complete enumeration.
    pub exact: bool,
    /// Colorings (exhaustive) or annealing steps examined.
    pub explored: u64,
}

/// Re-counts the witness; a mismatch is a bug.
fn verified(result: MinimizationResult) -> Result<MinimizationResult> {
    let recount = count_mono(&result.witness, result.pattern)?;
    if recount != result.best_count {
        return Err(Error::Internal(format!(
            "witness recount {recount} != reported {}",
            result.best_count
        )));
    }
    Ok(result)
}

/// Outcome of a search for `r(H)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RamseySearch {
    Determined(RamseyValue),
    /// `r(H) >= at_least`, certified by exhaustive search and zero-count
    /// witnesses; the upper end could not be reached.
    Bounded { pattern: Pattern, at_least: usize },
}

/// Least `n` with `M(H, n) > 0`, by exhaustive search for `n <= 7`. Beyond
/// that only zero-count split colorings `χ(a, n−a)` can push the lower
/// bound up, and the answer is an interval.
pub fn ramsey_via_search(p: Pattern, n_max: usize) -> Result<RamseySearch> {
    p.validate()?;
    let exhaustive_top = n_max.min(MAX_EXHAUSTIVE_N);
    for n in 1..=exhaustive_top {
        if !exhaustive_min(p, n)?.best_count.is_zero() {
            return Ok(RamseySearch::Determined(RamseyValue {
                pattern: p,
                n,
                provenance: Provenance::Search,
            }));
        }
    }
    let mut at_least = exhaustive_top + 1;
    for n in exhaustive_top + 1..=n_max {
        let mut zero = false;
        for a in 0..=n {
            match count_mono(&split(a, n - a), p) {
                Ok(c) if c.is_zero() => {
                    zero = true;
                    break;
                }
                Ok(_) => {}
                Err(Error::Capability(_)) => break,
                Err(e) => return Err(e),
            }
        }
        if !zero {
            break;
        }
        at_least = n + 1;
    }
    Ok(RamseySearch::Bounded {
        pattern: p,
        at_least,
    })
}

/// `m(H) = M(H, r(H))`: exact when `r(H) <= 7`, otherwise an annealed
/// upper bound. `r(H)` comes from the closed forms for paths and cycles and
/// from exhaustive search otherwise.
pub fn threshold_multiplicity(p: Pattern, cfg: &SearchConfig) -> Result<MinimizationResult> {
    let r = match ramsey_formula(p) {
        Ok(v) => v.n,
        Err(_) => match ramsey_via_search(p, MAX_EXHAUSTIVE_N)? {
            RamseySearch::Determined(v) => v.n,
            RamseySearch::Bounded { at_least, .. } => {
                return Err(Error::Capability(format!(
                    "r({p}) >= {at_least} is beyond exhaustive range"
                )))
            }
        },
    };
    if r <= MAX_EXHAUSTIVE_N {
        exhaustive_min(p, r)
    } else {
        anneal_min(p, r, cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ramsey_numbers_by_search() {
        let det = |p| match ramsey_via_search(p, 7).unwrap() {
            RamseySearch::Determined(v) => v.n,
            other => panic!("undetermined: {other:?}"),
        };
        assert_eq!(det(Pattern::Path(4)), 5);
        assert_eq!(det(Pattern::Path(3)), 3);
        assert_eq!(det(Pattern::Cycle(4)), 6);
        assert_eq!(det(Pattern::TRIANGLE), 6);
        assert_eq!(det(Pattern::Star(3)), 6);
    }

    #[test]
    fn ramsey_beyond_exhaustive_is_an_interval() {
        // χ(5, 2) has no monochromatic P_6 and χ(5,3) does, so only n=7 is certified.
        let r = ramsey_via_search(Pattern::Path(6), 9).unwrap();
        assert_eq!(
            r,
            RamseySearch::Bounded {
                pattern: Pattern::Path(6),
                at_least: 8
            }
        );
    }

    #[test]
    fn threshold_values() {
        let cfg = SearchConfig::with_seed(3);
        let s = threshold_multiplicity(Pattern::Star(3), &cfg).unwrap();
        assert_eq!(s.best_count, 6u64.into());
        assert!(s.exact);
        let p4 = threshold_multiplicity(Pattern::Path(4), &cfg).unwrap();
        assert!(p4.exact);
        assert_eq!(p4.n, 5);
        assert_eq!(p4.best_count, exhaustive_min(Pattern::Path(4), 5).unwrap().best_count);
    }

    #[test]
    fn config_validation() {
        let mut cfg = SearchConfig::with_seed(1);
        assert!(cfg.validate().is_ok());
        cfg.cooling_rate = 1.0;
        assert!(cfg.validate().is_err());
        cfg.cooling_rate = 0.5;
        cfg.initial_temperature = 0.0;
        assert!(cfg.validate().is_err());
    }
}
