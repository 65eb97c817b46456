//! Truncated realizations of the inverse-limit objects: coherent families
//! of algebra elements over the levels `d = p, p^2, ..., p^R`, and the
//! p-adic Markov trace computed levelwise on them.

use std::fmt;

use super::{delta_map, markov_trace};
use crate::algebra::{YBasisElt, YElement, YParams};
use crate::braid::FramedBraidWord;
use crate::coeff::{ratio, LaurentU, TracePoly};
use crate::error::{Error, Result};
use crate::padic::{prime_power, PadicApprox};
use crate::symmetric::Perm;

/// A coherent family `(x_1, ..., x_R)` with `x_r` in `Y_{p^r,n}(u)` and
/// `phi(x_r) = x_s` for `r >= s`: the depth-`R` truncation of an element
/// of the inverse-limit algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerElement {
    p: u64,
    n: usize,
    levels: Vec<YElement>,
}

impl TowerElement {
    fn params_at(p: u64, n: usize, r: u32) -> Result<YParams> {
        YParams::new(prime_power(p, r)?, n)
    }

    fn from_levels(p: u64, n: usize, levels: Vec<YElement>) -> Self {
        debug_assert!(!levels.is_empty());
        TowerElement { p, n, levels }
    }

    fn build<F>(p: u64, depth: u32, n: usize, mut make: F) -> Result<Self>
    where
        F: FnMut(YParams, u32) -> Result<YElement>,
    {
        crate::padic::check_prime(p)?;
        if depth == 0 {
            return Err(Error::InvalidPrecision);
        }
        let levels = (1..=depth)
            .map(|r| make(Self::params_at(p, n, r)?, r))
            .collect::<Result<_>>()?;
        Ok(Self::from_levels(p, n, levels))
    }

    pub fn one(p: u64, depth: u32, n: usize) -> Result<Self> {
        Self::build(p, depth, n, |params, _| Ok(YElement::one(params)))
    }

    /// The topological generator `g_i` as a constant tower.
    pub fn g(p: u64, depth: u32, n: usize, i: usize) -> Result<Self> {
        Self::build(p, depth, n, |params, _| YElement::g(params, i))
    }

    pub fn g_inverse(p: u64, depth: u32, n: usize, i: usize) -> Result<Self> {
        Self::build(p, depth, n, |params, _| YElement::g_inverse(params, i))
    }

    /// The idempotent family `e_{i,j} = (e_{p,i,j}, e_{p^2,i,j}, ...)`.
    pub fn e(p: u64, depth: u32, n: usize, i: usize, j: usize) -> Result<Self> {
        Self::build(p, depth, n, |params, _| YElement::e(params, i, j))
    }

    /// The framing generator `t_i` raised to a p-adic exponent: level `r`
    /// carries `t_i^{residue(exp, r)}`.
    pub fn t(p: u64, depth: u32, n: usize, i: usize, exp: &PadicApprox) -> Result<Self> {
        if exp.prime() != p {
            return Err(Error::PrimeMismatch {
                left: exp.prime(),
                right: p,
            });
        }
        if exp.precision() < depth as usize {
            return Err(Error::PrecisionTooSmall {
                have: exp.precision(),
                need: depth as usize,
            });
        }
        Self::build(p, depth, n, |params, r| {
            let m = exp.residue(r as usize)?;
            YElement::t(
                params,
                i,
                i64::try_from(m).map_err(|_| Error::IntegerOverflow)?,
            )
        })
    }

    /// The constant tower of `t_i^m` for an integer exponent.
    pub fn t_int(p: u64, depth: u32, n: usize, i: usize, m: i64) -> Result<Self> {
        Self::build(p, depth, n, |params, _| YElement::t(params, i, m))
    }

    /// Evaluates a framed braid word at every level, reducing each framing
    /// exponent to its residue mod `p^r` first. P-adic exponents need
    /// precision at least `depth`. Coherence holds by construction.
    pub fn from_word(word: &FramedBraidWord, p: u64, depth: u32, n: usize) -> Result<Self> {
        if word.n() != n {
            return Err(Error::StrandMismatch {
                left: word.n(),
                right: n,
            });
        }
        Self::build(p, depth, n, |params, r| {
            let reduced = word.reduce_framings_at_level(p, r)?;
            YElement::eval_word(&reduced, params)
        })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn depth(&self) -> u32 {
        self.levels.len() as u32
    }

    /// The projection to level `r` (1-based).
    pub fn level(&self, r: u32) -> Result<&YElement> {
        self.levels
            .get(r.wrapping_sub(1) as usize)
            .ok_or(Error::LevelOutOfRange {
                level: r as usize,
                max: self.levels.len(),
            })
    }

    pub fn levels(&self) -> &[YElement] {
        &self.levels
    }

    fn check_compatible(&self, rhs: &TowerElement) -> Result<()> {
        if self.p != rhs.p {
            return Err(Error::PrimeMismatch {
                left: self.p,
                right: rhs.p,
            });
        }
        if self.n != rhs.n {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: rhs.n,
            });
        }
        if self.levels.len() != rhs.levels.len() {
            return Err(Error::PrecisionTooSmall {
                have: rhs.levels.len(),
                need: self.levels.len(),
            });
        }
        Ok(())
    }

    /// Levelwise product; coherence is preserved because every connecting
    /// map is an algebra homomorphism.
    pub fn mul(&self, rhs: &TowerElement) -> Result<TowerElement> {
        self.check_compatible(rhs)?;
        let levels = self
            .levels
            .iter()
            .zip(&rhs.levels)
            .map(|(a, b)| a.mul(b))
            .collect::<Result<_>>()?;
        Ok(Self::from_levels(self.p, self.n, levels))
    }

    pub fn add(&self, rhs: &TowerElement) -> Result<TowerElement> {
        self.check_compatible(rhs)?;
        let levels = self
            .levels
            .iter()
            .zip(&rhs.levels)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(Self::from_levels(self.p, self.n, levels))
    }

    pub fn sub(&self, rhs: &TowerElement) -> Result<TowerElement> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> TowerElement {
        Self::from_levels(
            self.p,
            self.n,
            self.levels.iter().map(YElement::neg).collect(),
        )
    }

    pub fn scale(&self, c: &LaurentU) -> TowerElement {
        Self::from_levels(
            self.p,
            self.n,
            self.levels.iter().map(|x| x.scale(c)).collect(),
        )
    }

    /// Verifies the defining coherence `phi(x_r) = x_{r-1}` at every
    /// adjacent pair of levels.
    pub fn is_coherent(&self) -> bool {
        (2..=self.levels.len()).all(|r| {
            self.levels[r - 1]
                .phi(self.p, r as u32 - 1)
                .map(|down| down == self.levels[r - 2])
                .unwrap_or(false)
        })
    }
}

/// A coherent family of trace values over the connecting maps
/// `delta: C[X_r] -> C[X_s]`; the codomain of the p-adic Markov trace,
/// truncated to depth `R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicTraceValue {
    p: u64,
    levels: Vec<TracePoly>,
}

impl PadicTraceValue {
    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn depth(&self) -> u32 {
        self.levels.len() as u32
    }

    pub fn level(&self, r: u32) -> Result<&TracePoly> {
        self.levels
            .get(r.wrapping_sub(1) as usize)
            .ok_or(Error::LevelOutOfRange {
                level: r as usize,
                max: self.levels.len(),
            })
    }

    pub fn levels(&self) -> &[TracePoly] {
        &self.levels
    }

    /// Verifies `delta(q_r) = q_{r-1}` at every adjacent pair of levels.
    pub fn is_coherent(&self) -> bool {
        (2..=self.levels.len()).all(|r| {
            delta_map(&self.levels[r - 1], self.p, r as u32 - 1)
                .map(|down| down == self.levels[r - 2])
                .unwrap_or(false)
        })
    }
}

impl fmt::Display for PadicTraceValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, q) in self.levels.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{q}")?;
        }
        write!(f, ")")
    }
}

/// The p-adic Markov trace: the levelwise trace of a coherent family.
/// Its output is coherent under the delta maps because the trace commutes
/// with the connecting maps on both sides.
pub fn padic_trace(x: &TowerElement) -> PadicTraceValue {
    PadicTraceValue {
        p: x.prime(),
        levels: x.levels().iter().map(markov_trace).collect(),
    }
}

/// The averaged framing sum
/// `z_{r,k,i} = (1/p^k) sum_{m=0}^{p^k - 1} t_i^m t_{i+1}^{-m}`
/// in `Y_{p^r,n}(u)`; at `k = r` it is exactly the idempotent `e_{p^r,i}`,
/// and for `k < r` it is the level-`k` approximant of the idempotent
/// family.
pub fn z_approx(p: u64, r: u32, n: usize, k: u32, i: usize) -> Result<YElement> {
    if k > r {
        return Err(Error::LevelOutOfRange {
            level: k as usize,
            max: r as usize,
        });
    }
    let d = prime_power(p, r)?;
    let params = YParams::new(d, n)?;
    if i < 1 || i + 1 > n {
        return Err(Error::IndexOutOfRange {
            index: i,
            bound: n.saturating_sub(1),
        });
    }
    let summands = prime_power(p, k)?;
    let coeff = LaurentU::from_rational(ratio(1, summands as i64));
    let mut terms = Vec::with_capacity(summands as usize);
    for m in 0..summands {
        let mut framing = vec![0; n];
        framing[i - 1] = m;
        framing[i] = (d - m) % d;
        terms.push((
            YBasisElt::new(params, framing, Perm::identity(n))?,
            coeff.clone(),
        ));
    }
    YElement::from_terms(params, terms)
}
