use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{rational, Rational};

/// A Laurent polynomial in the deformation parameter `u` with rational
/// coefficients, stored as a sparse exponent -> coefficient map.
///
/// Canonical form: no zero coefficients are ever stored, so `==` is
/// exact ring equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentU {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentU {
    pub fn zero() -> Self {
        LaurentU::default()
    }

    pub fn one() -> Self {
        LaurentU::term(0, rational(1))
    }

    /// The monomial `c * u^exp`.
    pub fn term(exp: i64, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentU { terms }
    }

    /// The variable `u`.
    pub fn u() -> Self {
        LaurentU::term(1, rational(1))
    }

    /// The monomial `u^exp` (negative exponents allowed).
    pub fn u_pow(exp: i64) -> Self {
        LaurentU::term(exp, rational(1))
    }

    pub fn from_int(n: i64) -> Self {
        LaurentU::term(0, rational(n))
    }

    pub fn from_rational(c: Rational) -> Self {
        LaurentU::term(0, c)
    }

    /// The factor `u - 1` that scales every idempotent correction term.
    pub fn u_minus_one() -> Self {
        LaurentU::u() - LaurentU::one()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coefficient(0).is_one()
    }

    /// Coefficient of `u^exp`, zero if absent.
    pub fn coefficient(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Sign of the highest-degree coefficient; drives `-` folding in the
    /// canonical rendering.
    pub(crate) fn leading_is_negative(&self) -> bool {
        self.terms
            .last_key_value()
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false)
    }

    pub(crate) fn is_single_term(&self) -> bool {
        self.terms.len() == 1
    }

    fn insert_add(&mut self, exp: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }
}

impl Add for &LaurentU {
    type Output = LaurentU;
    fn add(self, rhs: &LaurentU) -> LaurentU {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_add(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentU {
    type Output = LaurentU;
    fn sub(self, rhs: &LaurentU) -> LaurentU {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_add(*e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentU {
    type Output = LaurentU;
    fn mul(self, rhs: &LaurentU) -> LaurentU {
        let mut out = LaurentU::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.insert_add(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentU {
    type Output = LaurentU;
    fn neg(self) -> LaurentU {
        LaurentU {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for LaurentU {
            type Output = LaurentU;
            fn $method(self, rhs: LaurentU) -> LaurentU {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LaurentU> for LaurentU {
            type Output = LaurentU;
            fn $method(self, rhs: &LaurentU) -> LaurentU {
                (&self).$method(rhs)
            }
        }
        impl $trait<LaurentU> for &LaurentU {
            type Output = LaurentU;
            fn $method(self, rhs: LaurentU) -> LaurentU {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for LaurentU {
    type Output = LaurentU;
    fn neg(self) -> LaurentU {
        -&self
    }
}

/// Renders one monomial `c * u^e` with `c` already non-negative.
fn term_string(exp: i64, c: &Rational) -> String {
    let var = match exp {
        0 => return c.to_string(),
        1 => "u".to_string(),
        e => format!("u^{e}"),
    };
    if c.is_one() {
        var
    } else {
        format!("{c}*{var}")
    }
}

impl fmt::Display for LaurentU {
    /// Canonical text form: terms by descending `u`-exponent, signs folded
    /// into the separators, e.g. `u - 1`, `1/2*u + 1/2`, `u^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (exp, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                write!(
                    f,
                    "{}{}",
                    if neg { "-" } else { "" },
                    term_string(*exp, &mag)
                )?;
            } else {
                write!(
                    f,
                    " {} {}",
                    if neg { "-" } else { "+" },
                    term_string(*exp, &mag)
                )?;
            }
        }
        Ok(())
    }
}
