//! Exact rationals for threshold comparisons.
//!
//! Every density or size threshold that decides a verdict is compared with
//! these, never with floats, so verdicts are reproducible bit-for-bit.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use crate::error::{Error, Result};
use alloc::format;

/// A reduced fraction `num / den` with `den > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Frac {
    num: i128,
    den: i128,
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Frac {
    pub const ZERO: Frac = Frac { num: 0, den: 1 };
    pub const ONE: Frac = Frac { num: 1, den: 1 };

    /// Panics if `den == 0`.
    pub fn new(num: i128, den: i128) -> Frac {
        assert!(den != 0, "zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        Frac {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn int(v: i128) -> Frac {
        Frac { num: v, den: 1 }
    }

    pub fn numer(&self) -> i128 {
        self.num
    }

    pub fn denom(&self) -> i128 {
        self.den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    pub fn is_positive(&self) -> bool {
        self.num > 0
    }

    pub fn is_negative(&self) -> bool {
        self.num < 0
    }

    pub fn abs(self) -> Frac {
        Frac {
            num: self.num.abs(),
            den: self.den,
        }
    }

    pub fn recip(self) -> Frac {
        Frac::new(self.den, self.num)
    }

    /// Smallest integer `>= self`.
    pub fn ceil(&self) -> i128 {
        let q = self.num.div_euclid(self.den);
        if self.num.rem_euclid(self.den) == 0 {
            q
        } else {
            q + 1
        }
    }

    /// Largest integer `<= self`.
    pub fn floor(&self) -> i128 {
        self.num.div_euclid(self.den)
    }

    /// `self <= sqrt(rhs)` for `rhs >= 0`, decided exactly.
    pub fn le_sqrt(self, rhs: Frac) -> bool {
        if self.num <= 0 {
            return true;
        }
        self * self <= rhs
    }

    /// `self > sqrt(rhs)` for `rhs >= 0`, decided exactly.
    pub fn gt_sqrt(self, rhs: Frac) -> bool {
        !self.le_sqrt(rhs)
    }
}

impl Default for Frac {
    fn default() -> Self {
        Frac::ZERO
    }
}

impl From<i64> for Frac {
    fn from(v: i64) -> Self {
        Frac::int(v as i128)
    }
}

impl From<usize> for Frac {
    fn from(v: usize) -> Self {
        Frac::int(v as i128)
    }
}

impl Ord for Frac {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

impl PartialOrd for Frac {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Frac {
    type Output = Frac;
    fn add(self, o: Frac) -> Frac {
        Frac::new(self.num * o.den + o.num * self.den, self.den * o.den)
    }
}

impl Sub for Frac {
    type Output = Frac;
    fn sub(self, o: Frac) -> Frac {
        Frac::new(self.num * o.den - o.num * self.den, self.den * o.den)
    }
}

impl Mul for Frac {
    type Output = Frac;
    fn mul(self, o: Frac) -> Frac {
        Frac::new(self.num * o.num, self.den * o.den)
    }
}

impl Neg for Frac {
    type Output = Frac;
    fn neg(self) -> Frac {
        Frac {
            num: -self.num,
            den: self.den,
        }
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Accepts `"3"`, `"-2/7"` and terminating decimals such as `"0.25"`.
impl FromStr for Frac {
    type Err = Error;

    fn from_str(s: &str) -> Result<Frac> {
        let s = s.trim();
        let bad = || Error::Domain(format!("not a rational number: {s:?}"));
        if let Some((n, d)) = s.split_once('/') {
            let n: i128 = n.trim().parse().map_err(|_| bad())?;
            let d: i128 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            return Ok(Frac::new(n, d));
        }
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if !int_part.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
            || frac_part.len() > 30
        {
            return Err(bad());
        }
        let mut num: i128 = 0;
        for c in int_part.chars().chain(frac_part.chars()) {
            num = num
                .checked_mul(10)
                .and_then(|v| v.checked_add((c as u8 - b'0') as i128))
                .ok_or_else(bad)?;
        }
        let den = 10i128.pow(frac_part.len() as u32);
        Ok(Frac::new(if neg { -num } else { num }, den))
    }
}
