use std::collections::BTreeMap;
use std::fmt;

use super::LaurentU;
use crate::error::{Error, Result};

/// A monomial `z^a * x_{i1}^{e1} * ... * x_{ik}^{ek}` in the codomain of
/// the Markov trace. The empty monomial is the constant term.
///
/// The derived ordering (`z`-exponent, then the x-exponent map) is what the
/// canonical rendering uses, with the `z`-exponent reversed so higher
/// powers of `z` print first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct TraceMono {
    z_exp: u32,
    x_exps: BTreeMap<u64, u32>,
}

impl TraceMono {
    pub fn z_exp(&self) -> u32 {
        self.z_exp
    }

    pub fn x_exps(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.x_exps.iter().map(|(i, e)| (*i, *e))
    }

    pub fn is_constant(&self) -> bool {
        self.z_exp == 0 && self.x_exps.is_empty()
    }

    fn mul(&self, rhs: &TraceMono) -> TraceMono {
        let mut x_exps = self.x_exps.clone();
        for (i, e) in &rhs.x_exps {
            *x_exps.entry(*i).or_insert(0) += e;
        }
        TraceMono {
            z_exp: self.z_exp + rhs.z_exp,
            x_exps,
        }
    }
}

impl fmt::Display for TraceMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.z_exp {
            0 => {}
            1 => parts.push("z".to_string()),
            e => parts.push(format!("z^{e}")),
        }
        for (i, e) in &self.x_exps {
            match e {
                1 => parts.push(format!("x_{i}")),
                e => parts.push(format!("x_{i}^{e}")),
            }
        }
        write!(f, "{}", parts.join("*"))
    }
}

/// A polynomial in `z` and `x_1, ..., x_{d-1}` with [`LaurentU`]
/// coefficients; the value ring of the Markov trace at framing modulus `d`.
///
/// The index `0` never appears: `x_0` is the scalar `1`, and any
/// out-of-range index fed to [`TracePoly::x_var`] is reduced mod `d` first
/// (the framings satisfy `t^d = 1`, so only residues are meaningful).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TracePoly {
    d: u64,
    terms: BTreeMap<TraceMono, LaurentU>,
}

impl TracePoly {
    pub fn zero(d: u64) -> Self {
        TracePoly {
            d,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(d: u64) -> Self {
        TracePoly::constant(d, LaurentU::one())
    }

    pub fn constant(d: u64, c: LaurentU) -> Self {
        let mut out = TracePoly::zero(d);
        out.insert_add(TraceMono::default(), c);
        out
    }

    /// The trace parameter `z`.
    pub fn z(d: u64) -> Self {
        let mono = TraceMono {
            z_exp: 1,
            x_exps: BTreeMap::new(),
        };
        let mut out = TracePoly::zero(d);
        out.insert_add(mono, LaurentU::one());
        out
    }

    /// The framing indeterminate `x_{m mod d}`, with `x_0 := 1`.
    pub fn x_var(d: u64, m: i64) -> Self {
        let r = m.rem_euclid(d as i64) as u64;
        if r == 0 {
            return TracePoly::one(d);
        }
        let mono = TraceMono {
            z_exp: 0,
            x_exps: BTreeMap::from([(r, 1)]),
        };
        let mut out = TracePoly::zero(d);
        out.insert_add(mono, LaurentU::one());
        out
    }

    pub fn modulus(&self) -> u64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self == &TracePoly::one(self.d)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TraceMono, &LaurentU)> {
        self.terms.iter()
    }

    /// Whether any monomial involves an `x` indeterminate (used by the
    /// Hecke-collapse checks: at `d = 1` the trace ring is `C[z]`).
    pub fn uses_x(&self) -> bool {
        self.terms.keys().any(|m| !m.x_exps.is_empty())
    }

    fn insert_add(&mut self, mono: TraceMono, c: LaurentU) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get() + &c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    fn check_modulus(&self, rhs: &TracePoly) -> Result<()> {
        if self.d != rhs.d {
            return Err(Error::ModulusMismatch {
                left: self.d,
                right: rhs.d,
            });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &TracePoly) -> Result<TracePoly> {
        self.check_modulus(rhs)?;
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_add(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &TracePoly) -> Result<TracePoly> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> TracePoly {
        TracePoly {
            d: self.d,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &TracePoly) -> Result<TracePoly> {
        self.check_modulus(rhs)?;
        let mut out = TracePoly::zero(self.d);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.insert_add(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    /// Scalar multiplication by a Laurent polynomial in `u`.
    pub fn scale(&self, c: &LaurentU) -> TracePoly {
        let mut out = TracePoly::zero(self.d);
        for (m, v) in &self.terms {
            out.insert_add(m.clone(), v * c);
        }
        out
    }

    /// Substitute `x_i -> x_{i mod m}` (index 0 becomes the scalar 1),
    /// leaving `z` and `u` untouched; used by the connecting maps between
    /// trace rings of different levels.
    pub(crate) fn substitute_indices_mod(&self, m: u64) -> TracePoly {
        let mut out = TracePoly::zero(m);
        for (mono, c) in &self.terms {
            let mut x_exps: BTreeMap<u64, u32> = BTreeMap::new();
            for (i, e) in &mono.x_exps {
                let j = i % m;
                if j != 0 {
                    *x_exps.entry(j).or_insert(0) += e;
                }
            }
            out.insert_add(
                TraceMono {
                    z_exp: mono.z_exp,
                    x_exps,
                },
                c.clone(),
            );
        }
        out
    }
}

impl fmt::Display for TracePoly {
    /// Canonical text form: `z`-exponent descending, then x-index
    /// lexicographic; coefficients rendered per [`LaurentU`], wrapped in
    /// parentheses when they have more than one term.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&TraceMono> = self.terms.keys().collect();
        keys.sort_by(|a, b| b.z_exp.cmp(&a.z_exp).then_with(|| a.x_exps.cmp(&b.x_exps)));
        for (idx, mono) in keys.iter().enumerate() {
            let c = &self.terms[*mono];
            let neg = c.leading_is_negative();
            let mag = if neg { -c } else { c.clone() };
            let piece = render_term(&mag, &mono.to_string());
            if idx == 0 {
                write!(f, "{}{}", if neg { "-" } else { "" }, piece)?;
            } else {
                write!(f, " {} {}", if neg { "-" } else { "+" }, piece)?;
            }
        }
        Ok(())
    }
}

/// Shared coefficient-and-monomial rendering for trace polynomials and
/// algebra elements. `mono` empty means the constant/identity term.
pub(crate) fn render_term(c: &LaurentU, mono: &str) -> String {
    if mono.is_empty() {
        return if c.is_single_term() {
            c.to_string()
        } else {
            format!("({c})")
        };
    }
    if c.is_one() {
        mono.to_string()
    } else if c.is_single_term() {
        format!("{c}*{mono}")
    } else {
        format!("({c})*{mono}")
    }
}
