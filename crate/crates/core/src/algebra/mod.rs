//! The Yokonuma-Hecke algebra `Y_{d,n}(u)` as a normal-form algebra.
//!
//! Elements are finite linear combinations over the basis
//! `{ t_1^{a_1} ... t_n^{a_n} g_w : a_i in Z/dZ, w in S_n }` with
//! coefficients in the Laurent ring `Z[u, u^{-1}, 1/d]`. Multiplication is
//! right-folding: the right factor's framing is transported through the
//! left factor's permutation, then the canonical reduced word of the right
//! permutation is folded one generator at a time. Each generator step
//! either extends the permutation (length-increasing branch) or fires one
//! quadratic expansion
//!
//! `g_x g_i = g_{x s_i} + (u - 1)(g_{x s_i} - g_x) e_{d,i}`
//!
//! so the rewriting terminates and the defining ideal is computed without
//! ever being materialized. The basis is assumed linearly independent
//! (dimension `d^n n!`, known from the literature); internal consistency
//! is certified by the associativity and relation suites rather than by a
//! faithfulness proof.

mod relations;

pub use relations::{relation_suite, RelationCheck, RelationReport};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::braid::{power_of, FramedBraidWord, FramingExp, Letter};
use crate::coeff::{ratio, LaurentU};
use crate::error::{Error, Result};
use crate::padic::prime_power;
use crate::symmetric::Perm;

/// Framing modulus and strand count of one algebra in the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct YParams {
    pub d: u64,
    pub n: usize,
}

impl YParams {
    pub fn new(d: u64, n: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidModulus(0));
        }
        if n == 0 {
            return Err(Error::IndexOutOfRange { index: 0, bound: 1 });
        }
        Ok(YParams { d, n })
    }

    fn check_gen(&self, i: usize) -> Result<()> {
        if i < 1 || i + 1 > self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: self.n.saturating_sub(1),
            });
        }
        Ok(())
    }

    fn check_strand(&self, i: usize) -> Result<()> {
        if i < 1 || i > self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: self.n,
            });
        }
        Ok(())
    }
}

/// One basis element `t_1^{a_1} ... t_n^{a_n} g_w`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct YBasisElt {
    framing: Vec<u64>,
    perm: Perm,
}

impl YBasisElt {
    pub fn new(params: YParams, framing: Vec<u64>, perm: Perm) -> Result<Self> {
        if framing.len() != params.n || perm.n() != params.n {
            return Err(Error::StrandMismatch {
                left: framing.len(),
                right: params.n,
            });
        }
        if framing.iter().any(|&a| a >= params.d) {
            return Err(Error::InvalidModulus(params.d));
        }
        Ok(YBasisElt { framing, perm })
    }

    pub fn identity(params: YParams) -> Self {
        YBasisElt {
            framing: vec![0; params.n],
            perm: Perm::identity(params.n),
        }
    }

    pub fn framing(&self) -> &[u64] {
        &self.framing
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }
}

impl PartialOrd for YBasisElt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for YBasisElt {
    /// Permutation first, then framing vector: the canonical term order of
    /// the text rendering.
    fn cmp(&self, other: &Self) -> Ordering {
        self.perm
            .cmp(&other.perm)
            .then_with(|| self.framing.cmp(&other.framing))
    }
}

/// Right multiplication of a basis element by `t_j^m`: the exponent lands
/// on the strand the permutation sends `j` to, reduced mod `d`.
pub fn mul_basis_t(params: YParams, b: &YBasisElt, j: usize, m: i64) -> Result<YBasisElt> {
    params.check_strand(j)?;
    let mut out = b.clone();
    let target = b.perm.apply(j);
    let d = params.d as i64;
    let cur = out.framing[target - 1] as i64;
    out.framing[target - 1] = (cur + m).rem_euclid(d) as u64;
    Ok(out)
}

/// Right multiplication of a basis element by `g_i`. Length-increasing
/// products stay a single basis element; a right descent fires the
/// quadratic expansion through `e_{d,i}`.
pub fn mul_basis_g(params: YParams, b: &YBasisElt, i: usize) -> Result<YElement> {
    params.check_gen(i)?;
    let si = Perm::transposition(params.n, i)?;
    if !b.perm.right_descent(i)? {
        let longer = YBasisElt {
            framing: b.framing.clone(),
            perm: b.perm.compose(&si)?,
        };
        return Ok(YElement::from_single(params, longer, LaurentU::one()));
    }
    // g_x g_i = g_{x s_i} + (u-1)(g_{x s_i} - g_x) e_{d,i} with x s_i shorter.
    let shorter = YBasisElt {
        framing: b.framing.clone(),
        perm: b.perm.compose(&si)?,
    };
    let mut out = YElement::from_single(params, shorter.clone(), LaurentU::one());
    let scale =
        LaurentU::term(1, ratio(1, params.d as i64)) - LaurentU::term(0, ratio(1, params.d as i64));
    for m in 0..params.d {
        let m = m as i64;
        let plus = mul_basis_t(params, &mul_basis_t(params, &shorter, i, m)?, i + 1, -m)?;
        let minus = mul_basis_t(params, &mul_basis_t(params, b, i, m)?, i + 1, -m)?;
        out.insert_add(plus, scale.clone());
        out.insert_add(minus, -&scale);
    }
    Ok(out)
}

/// An element of `Y_{d,n}(u)`: a canonical linear combination of basis
/// elements with no stored zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YElement {
    params: YParams,
    terms: BTreeMap<YBasisElt, LaurentU>,
}

impl YElement {
    pub fn zero(params: YParams) -> Self {
        YElement {
            params,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(params: YParams) -> Self {
        YElement::from_single(params, YBasisElt::identity(params), LaurentU::one())
    }

    fn from_single(params: YParams, basis: YBasisElt, coeff: LaurentU) -> Self {
        let mut out = YElement::zero(params);
        out.insert_add(basis, coeff);
        out
    }

    pub fn from_terms<I>(params: YParams, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (YBasisElt, LaurentU)>,
    {
        let mut out = YElement::zero(params);
        for (basis, coeff) in terms {
            if basis.framing.len() != params.n || basis.perm.n() != params.n {
                return Err(Error::StrandMismatch {
                    left: basis.framing.len(),
                    right: params.n,
                });
            }
            if basis.framing.iter().any(|&a| a >= params.d) {
                return Err(Error::InvalidModulus(params.d));
            }
            out.insert_add(basis, coeff);
        }
        Ok(out)
    }

    /// The framing generator power `t_i^m` (reduced mod `d`).
    pub fn t(params: YParams, i: usize, m: i64) -> Result<Self> {
        params.check_strand(i)?;
        let mut framing = vec![0; params.n];
        framing[i - 1] = m.rem_euclid(params.d as i64) as u64;
        Ok(YElement::from_single(
            params,
            YBasisElt {
                framing,
                perm: Perm::identity(params.n),
            },
            LaurentU::one(),
        ))
    }

    /// The braid generator image `g_i`.
    pub fn g(params: YParams, i: usize) -> Result<Self> {
        params.check_gen(i)?;
        Ok(YElement::from_single(
            params,
            YBasisElt {
                framing: vec![0; params.n],
                perm: Perm::transposition(params.n, i)?,
            },
            LaurentU::one(),
        ))
    }

    /// The idempotent `e_{d,i,j} = (1/d) sum_m t_i^m t_j^{-m}` for `i != j`.
    pub fn e(params: YParams, i: usize, j: usize) -> Result<Self> {
        params.check_strand(i)?;
        params.check_strand(j)?;
        if i == j {
            return Err(Error::EqualIndices(i));
        }
        let mut out = YElement::zero(params);
        let c = LaurentU::from_rational(ratio(1, params.d as i64));
        for m in 0..params.d {
            let mut framing = vec![0; params.n];
            framing[i - 1] = m;
            framing[j - 1] = (params.d - m) % params.d;
            out.insert_add(
                YBasisElt {
                    framing,
                    perm: Perm::identity(params.n),
                },
                c.clone(),
            );
        }
        Ok(out)
    }

    /// The inverse of `g_i`:
    /// `g_i^{-1} = g_i - (u^{-1} - 1) e_{d,i} + (u^{-1} - 1) e_{d,i} g_i`.
    pub fn g_inverse(params: YParams, i: usize) -> Result<Self> {
        let g = YElement::g(params, i)?;
        let e = YElement::e(params, i, i + 1)?;
        let uinv_minus_one = LaurentU::u_pow(-1) - LaurentU::one();
        let eg = e.mul(&g)?;
        g.sub(&e.scale(&uinv_minus_one))?
            .add(&eg.scale(&uinv_minus_one))
    }

    pub fn params(&self) -> YParams {
        self.params
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&YBasisElt, &LaurentU)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub(crate) fn insert_add(&mut self, basis: YBasisElt, coeff: LaurentU) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(basis) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get() + &coeff;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    fn check_params(&self, rhs: &YElement) -> Result<()> {
        if self.params != rhs.params {
            return Err(Error::ModulusMismatch {
                left: self.params.d,
                right: rhs.params.d,
            });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &YElement) -> Result<YElement> {
        self.check_params(rhs)?;
        let mut out = self.clone();
        for (b, c) in &rhs.terms {
            out.insert_add(b.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &YElement) -> Result<YElement> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> YElement {
        YElement {
            params: self.params,
            terms: self.terms.iter().map(|(b, c)| (b.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &LaurentU) -> YElement {
        let mut out = YElement::zero(self.params);
        for (b, v) in &self.terms {
            out.insert_add(b.clone(), v * c);
        }
        out
    }

    /// Bilinear product in normal form. For each basis pair, the right
    /// framing is transported through the left permutation and the reduced
    /// word of the right permutation is folded through [`mul_basis_g`].
    pub fn mul(&self, rhs: &YElement) -> Result<YElement> {
        self.check_params(rhs)?;
        let params = self.params;
        let d = params.d;
        let mut out = YElement::zero(params);
        for (by, cy) in &rhs.terms {
            let word = by.perm.reduced_word();
            for (bx, cx) in &self.terms {
                let mut framing = bx.framing.clone();
                for j in 1..=params.n {
                    let target = bx.perm.apply(j);
                    framing[target - 1] = (framing[target - 1] + by.framing[j - 1]) % d;
                }
                let start = YBasisElt {
                    framing,
                    perm: bx.perm.clone(),
                };
                let mut acc = YElement::from_single(params, start, cx * cy);
                for &i in &word {
                    let mut next = YElement::zero(params);
                    for (b, c) in &acc.terms {
                        for (b2, c2) in mul_basis_g(params, b, i)?.terms {
                            next.insert_add(b2, c * &c2);
                        }
                    }
                    acc = next;
                }
                for (b, c) in acc.terms {
                    out.insert_add(b, c);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u64) -> Result<YElement> {
        let mut out = YElement::one(self.params);
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Multiplicative evaluation of a framed braid word through the
    /// quotient map: `f_i^e -> t_i^e`, `s_i -> g_i`, `s_i^{-1} -> g_i^{-1}`.
    pub fn eval_word(word: &FramedBraidWord, params: YParams) -> Result<YElement> {
        if word.n() != params.n {
            return Err(Error::StrandMismatch {
                left: word.n(),
                right: params.n,
            });
        }
        let mut out = YElement::one(params);
        for letter in word.letters() {
            let factor = match letter {
                Letter::Framing { strand, exp } => match exp {
                    FramingExp::Int(e) => YElement::t(params, *strand, *e)?,
                    FramingExp::Padic(_) => return Err(Error::PadicFramingInWord),
                },
                Letter::Braid(g) => {
                    if g.inverse {
                        YElement::g_inverse(params, g.index)?
                    } else {
                        YElement::g(params, g.index)?
                    }
                }
            };
            out = out.mul(&factor)?;
        }
        Ok(out)
    }

    /// The connecting epimorphism `Y_{p^r,n}(u) -> Y_{p^s,n}(u)`: framings
    /// reduce mod `p^s`, coefficients pass through, terms may merge.
    pub fn phi(&self, p: u64, s: u32) -> Result<YElement> {
        let r = power_of(self.params.d, p)?;
        if s < 1 || s > r {
            return Err(Error::LevelOutOfRange {
                level: s as usize,
                max: r as usize,
            });
        }
        let modulus = prime_power(p, s)?;
        let params = YParams::new(modulus, self.params.n)?;
        let mut out = YElement::zero(params);
        for (b, c) in &self.terms {
            out.insert_add(
                YBasisElt {
                    framing: b.framing.iter().map(|a| a % modulus).collect(),
                    perm: b.perm.clone(),
                },
                c.clone(),
            );
        }
        Ok(out)
    }
}

impl fmt::Display for YElement {
    /// Canonical text form: terms ordered by (permutation, framing),
    /// coefficients in the Laurent canonical order, e.g.
    /// `u*1 - (u - 1)*g[2,1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (b, c)) in self.terms.iter().enumerate() {
            let mut parts = Vec::new();
            for (i, &a) in b.framing.iter().enumerate() {
                if a != 0 {
                    parts.push(format!("t{}^{}", i + 1, a));
                }
            }
            if !b.perm.is_identity() {
                parts.push(format!("g{}", b.perm));
            }
            let mono = if parts.is_empty() {
                "1".to_string()
            } else {
                parts.join("*")
            };
            let neg = c.leading_is_negative();
            let mag = if neg { -c } else { c.clone() };
            let piece = crate::coeff::render_term(&mag, &mono);
            if idx == 0 {
                write!(f, "{}{}", if neg { "-" } else { "" }, piece)?;
            } else {
                write!(f, " {} {}", if neg { "-" } else { "+" }, piece)?;
            }
        }
        Ok(())
    }
}
