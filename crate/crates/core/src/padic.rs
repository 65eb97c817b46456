//! Truncated p-adic integers.
//!
//! A p-adic integer is a coherent sequence of residues `a_r mod p^r`; here
//! it is stored truncated to a fixed precision `R` as base-`p` digits
//! `d_0, ..., d_{R-1}`. The residue at level `r` is `sum_{i<r} d_i p^i`,
//! so the coherence `a_r = a_s (mod p^s)` for `r >= s` holds structurally
//! rather than as a checked condition. Only the additive group is needed
//! downstream (framings compose additively), so there is no ring product.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A p-adic integer truncated to `precision` base-`p` digits.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PadicApprox {
    p: u64,
    digits: Vec<u64>,
}

pub(crate) fn check_prime(p: u64) -> Result<()> {
    if p < 2 {
        return Err(Error::InvalidPrime(p));
    }
    let mut k = 2;
    while k * k <= p {
        if p.is_multiple_of(k) {
            return Err(Error::InvalidPrime(p));
        }
        k += 1;
    }
    Ok(())
}

/// `p^r`, with an error when it does not fit in 64 bits.
pub fn prime_power(p: u64, r: u32) -> Result<u64> {
    p.checked_pow(r)
        .ok_or(Error::PrecisionOverflow { p, precision: r })
}

impl PadicApprox {
    /// Builds a value from explicit digits. `digits[i]` is the coefficient
    /// of `p^i` and must lie in `[0, p)`.
    pub fn new(p: u64, digits: Vec<u64>) -> Result<Self> {
        check_prime(p)?;
        if digits.is_empty() {
            return Err(Error::InvalidPrecision);
        }
        prime_power(p, digits.len() as u32)?;
        if let Some(d) = digits.iter().find(|&&d| d >= p) {
            return Err(Error::IndexOutOfRange {
                index: *d as usize,
                bound: (p - 1) as usize,
            });
        }
        Ok(PadicApprox { p, digits })
    }

    /// The constant sequence `(k mod p, k mod p^2, ...)` truncated to
    /// `precision` levels; negative `k` reduces modularly at every level.
    pub fn from_int(k: i64, p: u64, precision: u32) -> Result<Self> {
        check_prime(p)?;
        if precision == 0 {
            return Err(Error::InvalidPrecision);
        }
        let modulus = prime_power(p, precision)? as i128;
        let mut res = (k as i128).rem_euclid(modulus) as u64;
        let digits = (0..precision)
            .map(|_| {
                let d = res % p;
                res /= p;
                d
            })
            .collect();
        Ok(PadicApprox { p, digits })
    }

    pub fn zero(p: u64, precision: u32) -> Result<Self> {
        PadicApprox::from_int(0, p, precision)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> usize {
        self.digits.len()
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn is_zero(&self) -> bool {
        self.digits.iter().all(|&d| d == 0)
    }

    /// The residue `sum_{i<r} d_i p^i` in `[0, p^r)`, for `1 <= r <= R`.
    pub fn residue(&self, r: usize) -> Result<u64> {
        if r < 1 || r > self.digits.len() {
            return Err(Error::LevelOutOfRange {
                level: r,
                max: self.digits.len(),
            });
        }
        let mut acc = 0u64;
        for &d in self.digits[..r].iter().rev() {
            acc = acc * self.p + d;
        }
        Ok(acc)
    }

    /// The connecting epimorphism to precision `s <= R`: cuts the top
    /// `R - s` digits.
    pub fn theta(&self, s: usize) -> Result<Self> {
        if s < 1 || s > self.digits.len() {
            return Err(Error::LevelOutOfRange {
                level: s,
                max: self.digits.len(),
            });
        }
        Ok(PadicApprox {
            p: self.p,
            digits: self.digits[..s].to_vec(),
        })
    }

    /// Digit-wise addition with carry. The primes must agree; the result
    /// precision is the minimum of the two.
    pub fn add(&self, rhs: &PadicApprox) -> Result<Self> {
        if self.p != rhs.p {
            return Err(Error::PrimeMismatch {
                left: self.p,
                right: rhs.p,
            });
        }
        let len = self.digits.len().min(rhs.digits.len());
        let mut digits = Vec::with_capacity(len);
        let mut carry = 0;
        for i in 0..len {
            let s = self.digits[i] + rhs.digits[i] + carry;
            digits.push(s % self.p);
            carry = s / self.p;
        }
        Ok(PadicApprox { p: self.p, digits })
    }

    /// Additive inverse: `p^R - a` when `a != 0`, so that `a + neg(a)` is
    /// zero at every level.
    pub fn neg(&self) -> Self {
        let mut digits = vec![0; self.digits.len()];
        if let Some(first) = self.digits.iter().position(|&d| d != 0) {
            digits[first] = self.p - self.digits[first];
            for i in (first + 1)..self.digits.len() {
                digits[i] = self.p - 1 - self.digits[i];
            }
        }
        PadicApprox { p: self.p, digits }
    }

    /// The approximating sequence of constants: the `k`-th element is the
    /// constant `residue(k)` embedded at full precision, and agrees with
    /// `self` at all levels up to `k`.
    pub fn approx_sequence(&self) -> Vec<PadicApprox> {
        (1..=self.digits.len())
            .map(|k| {
                let mut digits = self.digits.clone();
                for d in digits[k..].iter_mut() {
                    *d = 0;
                }
                PadicApprox { p: self.p, digits }
            })
            .collect()
    }
}

impl fmt::Display for PadicApprox {
    /// Text format `p^R:d0,d1,...`, e.g. `3^3:1,1,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}:", self.p, self.digits.len())?;
        for (i, d) in self.digits.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for PadicApprox {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |message: &str| Error::Parse {
            column: 1,
            message: format!("{message} in p-adic literal `{s}` (expected p^R:d0,d1,...)"),
        };
        let (head, tail) = s.split_once(':').ok_or_else(|| parse_err("missing `:`"))?;
        let (p_str, r_str) = head
            .split_once('^')
            .ok_or_else(|| parse_err("missing `^`"))?;
        let p: u64 = p_str.parse().map_err(|_| parse_err("bad prime"))?;
        let r: usize = r_str.parse().map_err(|_| parse_err("bad precision"))?;
        let digits: Vec<u64> = tail
            .split(',')
            .map(|d| d.trim().parse().map_err(|_| parse_err("bad digit")))
            .collect::<Result<_>>()?;
        if digits.len() != r {
            return Err(parse_err("digit count does not match precision"));
        }
        PadicApprox::new(p, digits)
    }
}
