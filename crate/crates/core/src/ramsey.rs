//! Closed-form Ramsey numbers of paths and cycles, star threshold
//! multiplicities, and the conjectured threshold multiplicities of paths
//! and cycles (flagged as conjectures, never as theorems).

use alloc::format;

use num_bigint::BigUint;

use crate::counting::{factorial, MonoCount, Pattern};
use crate::error::{Error, Result};

/// Where a value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// A proved closed form.
    Formula,
    /// Exhaustive computation.
    Search,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RamseyValue {
    pub pattern: Pattern,
    pub n: usize,
    pub provenance: Provenance,
}

/// `r(P_k) = k − 1 + ⌊k/2⌋`.
pub fn r_path(k: usize) -> Result<usize> {
    if k < 2 {
        return Err(Error::Domain(format!("r(P_k) needs k >= 2, got {k}")));
    }
    Ok(k - 1 + k / 2)
}

/// `r(C_3) = r(C_4) = 6`; `k + k/2 − 1` for even `k >= 6`; `2k − 1` for odd `k >= 5`.
pub fn r_cycle(k: usize) -> Result<usize> {
    match k {
        0..=2 => Err(Error::Domain(format!("r(C_k) needs k >= 3, got {k}"))),
        3 | 4 => Ok(6),
        k if k % 2 == 0 => Ok(k + k / 2 - 1),
        k => Ok(2 * k - 1),
    }
}

pub fn ramsey_formula(p: Pattern) -> Result<RamseyValue> {
    let n = match p {
        Pattern::Path(k) => r_path(k)?,
        Pattern::Cycle(k) => r_cycle(k)?,
        _ => {
            return Err(Error::Domain(format!(
                "no closed-form Ramsey number for {p}; use search"
            )))
        }
    };
    Ok(RamseyValue {
        pattern: p,
        n,
        provenance: Provenance::Formula,
    })
}

/// Threshold multiplicity of the star `K_{1,k}`: 1 for even `k` and for
/// `k = 1`, `2k` for odd `k >= 3`.
pub fn m_star(k: usize) -> Result<MonoCount> {
    if k == 0 {
        return Err(Error::Domain("stars need k >= 1 leaves".into()));
    }
    let v: u64 = if k % 2 == 0 || k == 1 { 1 } else { 2 * k as u64 };
    Ok(v.into())
}

/// A conjectured value. Always carries `conjecture = true`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conjectured {
    pub pattern: Pattern,
    pub value: MonoCount,
    pub conjecture: bool,
}

/// Conjectured `m(P_k)` (`k >= 4`) and `m(C_k)` (`k >= 5`).
///
/// Paths: `k!/2` for even `k`, `(k−1)/4 · (k−1)!` for odd `k`.
/// Cycles: `(k−3)/2 · (k−2)!` for even `k`, `(k−1)!/2` for odd `k`.
pub fn conjectured_m(p: Pattern) -> Result<Conjectured> {
    let value: BigUint = match p {
        Pattern::Path(k) if k >= 4 => {
            let k = k as u64;
            if k % 2 == 0 {
                factorial(k) / 2u8
            } else {
                factorial(k - 1) * (k - 1) / 4u8
            }
        }
        Pattern::Cycle(k) if k >= 5 => {
            let k = k as u64;
            if k % 2 == 0 {
                factorial(k - 2) * (k - 3) / 2u8
            } else {
                factorial(k - 1) / 2u8
            }
        }
        _ => {
            return Err(Error::Domain(format!(
                "no conjectured threshold multiplicity for {p}"
            )))
        }
    };
    Ok(Conjectured {
        pattern: p,
        value: MonoCount(value),
        conjecture: true,
    })
}
