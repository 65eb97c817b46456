//! Framed braid groups: words, the framing/braiding split, modular
//! reductions and p-adic framed braids.
//!
//! A word multiplies by the semidirect-product law: a framing vector `a`
//! followed by a braid `beta` absorbs a right factor `(b, gamma)` as
//! `(a + T(b), beta gamma)`, where `T` transports the framing at strand
//! `j` to strand `pi(beta)(j)` and `pi` is the permutation image of the
//! braid word. Braid words are kept freely reduced; no stronger word
//! problem is solved here, since every downstream algebra has a complete
//! normal form of its own.

use std::fmt;

use crate::error::{Error, Result};
use crate::padic::{prime_power, PadicApprox};
use crate::symmetric::Perm;

/// A single braid generator `sigma_i` or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BraidGen {
    pub index: usize,
    pub inverse: bool,
}

impl BraidGen {
    pub fn flipped(self) -> Self {
        BraidGen {
            index: self.index,
            inverse: !self.inverse,
        }
    }
}

/// Exponent of a framing letter: an integer, or a truncated p-adic integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FramingExp {
    Int(i64),
    Padic(PadicApprox),
}

/// One letter of a framed braid word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Letter {
    Framing { strand: usize, exp: FramingExp },
    Braid(BraidGen),
}

/// A word in the framing generators `f_i` and braid generators `sigma_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FramedBraidWord {
    n: usize,
    letters: Vec<Letter>,
}

impl FramedBraidWord {
    pub fn empty(n: usize) -> Self {
        FramedBraidWord {
            n,
            letters: Vec::new(),
        }
    }

    pub fn from_letters(n: usize, letters: Vec<Letter>) -> Result<Self> {
        for letter in &letters {
            match letter {
                Letter::Framing { strand, .. } => {
                    if *strand < 1 || *strand > n {
                        return Err(Error::IndexOutOfRange {
                            index: *strand,
                            bound: n,
                        });
                    }
                }
                Letter::Braid(g) => {
                    if g.index < 1 || g.index + 1 > n {
                        return Err(Error::IndexOutOfRange {
                            index: g.index,
                            bound: n.saturating_sub(1),
                        });
                    }
                }
            }
        }
        Ok(FramedBraidWord { n, letters })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn push_framing(&mut self, strand: usize, exp: FramingExp) -> Result<()> {
        if strand < 1 || strand > self.n {
            return Err(Error::IndexOutOfRange {
                index: strand,
                bound: self.n,
            });
        }
        self.letters.push(Letter::Framing { strand, exp });
        Ok(())
    }

    pub fn push_braid(&mut self, index: usize, inverse: bool) -> Result<()> {
        if index < 1 || index + 1 > self.n {
            return Err(Error::IndexOutOfRange {
                index,
                bound: self.n.saturating_sub(1),
            });
        }
        self.letters
            .push(Letter::Braid(BraidGen { index, inverse }));
        Ok(())
    }

    pub fn concat(&self, rhs: &FramedBraidWord) -> Result<FramedBraidWord> {
        if self.n != rhs.n {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: rhs.n,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend(rhs.letters.iter().cloned());
        Ok(FramedBraidWord { n: self.n, letters })
    }

    /// The formal inverse word: letters reversed and inverted.
    pub fn inverse(&self) -> FramedBraidWord {
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|letter| match letter {
                Letter::Framing { strand, exp } => Letter::Framing {
                    strand: *strand,
                    exp: match exp {
                        FramingExp::Int(e) => FramingExp::Int(-e),
                        FramingExp::Padic(a) => FramingExp::Padic(a.neg()),
                    },
                },
                Letter::Braid(g) => Letter::Braid(g.flipped()),
            })
            .collect();
        FramedBraidWord { n: self.n, letters }
    }

    /// Whether any framing letter carries a p-adic exponent.
    pub fn has_padic_framing(&self) -> bool {
        self.letters.iter().any(|l| {
            matches!(
                l,
                Letter::Framing {
                    exp: FramingExp::Padic(_),
                    ..
                }
            )
        })
    }

    /// Splits into the framing part and the freely reduced braiding part.
    /// Requires integer framings; p-adic words split via [`PadicFramedBraid`].
    pub fn split(&self) -> Result<SplitFramedBraid> {
        let mut acc = SplitFramedBraid::identity(self.n);
        let mut perm = Perm::identity(self.n);
        for letter in &self.letters {
            match letter {
                Letter::Framing { strand, exp } => {
                    let e = match exp {
                        FramingExp::Int(e) => *e,
                        FramingExp::Padic(_) => return Err(Error::PadicFramingInWord),
                    };
                    let target = perm.apply(*strand);
                    acc.framings[target - 1] = acc.framings[target - 1]
                        .checked_add(e)
                        .ok_or(Error::IntegerOverflow)?;
                }
                Letter::Braid(g) => {
                    push_reduced(&mut acc.braid, *g);
                    perm = perm.compose(&Perm::transposition(self.n, g.index)?)?;
                }
            }
        }
        Ok(acc)
    }

    /// Splits with p-adic framing arithmetic at prime `p`, precision `R`.
    /// Integer exponents embed as constants; p-adic exponents must carry
    /// the same prime and at least `R` digits (extra digits are cut).
    pub fn split_padic(&self, p: u64, precision: u32) -> Result<PadicFramedBraid> {
        let mut acc = PadicFramedBraid::identity(self.n, p, precision)?;
        let mut perm = Perm::identity(self.n);
        for letter in &self.letters {
            match letter {
                Letter::Framing { strand, exp } => {
                    let value = match exp {
                        FramingExp::Int(e) => PadicApprox::from_int(*e, p, precision)?,
                        FramingExp::Padic(a) => {
                            if a.prime() != p {
                                return Err(Error::PrimeMismatch {
                                    left: a.prime(),
                                    right: p,
                                });
                            }
                            if a.precision() < precision as usize {
                                return Err(Error::PrecisionTooSmall {
                                    have: a.precision(),
                                    need: precision as usize,
                                });
                            }
                            a.theta(precision as usize)?
                        }
                    };
                    let target = perm.apply(*strand);
                    acc.framings[target - 1] = acc.framings[target - 1].add(&value)?;
                }
                Letter::Braid(g) => {
                    push_reduced(&mut acc.braid, *g);
                    perm = perm.compose(&Perm::transposition(self.n, g.index)?)?;
                }
            }
        }
        Ok(acc)
    }

    /// Replaces every framing exponent by its residue at level `r`
    /// (`d = p^r`), producing an integer-framing word. P-adic exponents
    /// need precision at least `r`.
    pub fn reduce_framings_at_level(&self, p: u64, r: u32) -> Result<FramedBraidWord> {
        let modulus = prime_power(p, r)? as i64;
        let letters = self
            .letters
            .iter()
            .map(|letter| {
                Ok(match letter {
                    Letter::Framing { strand, exp } => {
                        let e = match exp {
                            FramingExp::Int(e) => e.rem_euclid(modulus),
                            FramingExp::Padic(a) => {
                                if a.prime() != p {
                                    return Err(Error::PrimeMismatch {
                                        left: a.prime(),
                                        right: p,
                                    });
                                }
                                if a.precision() < r as usize {
                                    return Err(Error::PrecisionTooSmall {
                                        have: a.precision(),
                                        need: r as usize,
                                    });
                                }
                                a.residue(r as usize)? as i64
                            }
                        };
                        Letter::Framing {
                            strand: *strand,
                            exp: FramingExp::Int(e),
                        }
                    }
                    other => other.clone(),
                })
            })
            .collect::<Result<_>>()?;
        Ok(FramedBraidWord { n: self.n, letters })
    }

    /// Parses the word grammar: whitespace-separated tokens `f<i>`,
    /// `f<i>^<e>`, `f<i>^{p^R:d0,d1,...}`, `s<i>`, `s<i>^<e>`.
    pub fn parse(input: &str, n: usize) -> Result<FramedBraidWord> {
        let mut word = FramedBraidWord::empty(n);
        let mut rest = input;
        let mut offset = 0;
        loop {
            let trimmed = rest.trim_start();
            offset += rest.len() - trimmed.len();
            if trimmed.is_empty() {
                break;
            }
            let end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
            let token = &trimmed[..end];
            parse_token(token, offset + 1, &mut word)?;
            rest = &trimmed[end..];
            offset += end;
        }
        Ok(word)
    }
}

fn parse_token(token: &str, column: usize, word: &mut FramedBraidWord) -> Result<()> {
    let err = |message: String| Error::Parse { column, message };
    let at_range = |e: Error| match e {
        Error::IndexOutOfRange { index, bound } => err(format!(
            "index {index} out of range 1..={bound} in `{token}`"
        )),
        other => other,
    };
    let (kind, rest) = token.split_at(1);
    let (idx_str, exp_str) = match rest.find('^') {
        Some(pos) => (&rest[..pos], Some(&rest[pos + 1..])),
        None => (rest, None),
    };
    let index: usize = idx_str
        .parse()
        .map_err(|_| err(format!("bad generator index in `{token}`")))?;
    match kind {
        "s" => {
            let exp: i64 = match exp_str {
                None => 1,
                Some(e) => e
                    .parse()
                    .map_err(|_| err(format!("bad braid exponent in `{token}`")))?,
            };
            for _ in 0..exp.unsigned_abs() {
                word.push_braid(index, exp < 0).map_err(at_range)?;
            }
            Ok(())
        }
        "f" => {
            let exp = match exp_str {
                None => FramingExp::Int(1),
                Some(e) if e.starts_with('{') => {
                    let inner = e
                        .strip_prefix('{')
                        .and_then(|t| t.strip_suffix('}'))
                        .ok_or_else(|| err(format!("unterminated p-adic literal in `{token}`")))?;
                    let a: PadicApprox = inner.parse().map_err(|e| match e {
                        Error::Parse { message, .. } => err(message),
                        other => other,
                    })?;
                    FramingExp::Padic(a)
                }
                Some(e) => FramingExp::Int(
                    e.parse()
                        .map_err(|_| err(format!("bad framing exponent in `{token}`")))?,
                ),
            };
            word.push_framing(index, exp).map_err(at_range)
        }
        _ => Err(err(format!("unknown token `{token}`"))),
    }
}

impl fmt::Display for FramedBraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, letter) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match letter {
                Letter::Framing { strand, exp } => match exp {
                    FramingExp::Int(e) => write!(f, "f{strand}^{e}")?,
                    FramingExp::Padic(a) => write!(f, "f{strand}^{{{a}}}")?,
                },
                Letter::Braid(g) => {
                    if g.inverse {
                        write!(f, "s{}^-1", g.index)?;
                    } else {
                        write!(f, "s{}", g.index)?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// The defining conjugation `f_i = s_{i-1} ... s_1 f_1 s_1^{-1} ... s_{i-1}^{-1}`.
pub fn elementary_framing_word(i: usize, n: usize) -> Result<FramedBraidWord> {
    if i < 1 || i > n {
        return Err(Error::IndexOutOfRange { index: i, bound: n });
    }
    let mut word = FramedBraidWord::empty(n);
    for j in (1..i).rev() {
        word.push_braid(j, false)?;
    }
    word.push_framing(1, FramingExp::Int(1))?;
    for j in 1..i {
        word.push_braid(j, true)?;
    }
    Ok(word)
}

/// Pushes a generator onto a freely-reduced braid word, cancelling an
/// adjacent inverse pair.
fn push_reduced(braid: &mut Vec<BraidGen>, g: BraidGen) {
    match braid.last() {
        Some(top) if *top == g.flipped() => {
            braid.pop();
        }
        _ => braid.push(g),
    }
}

fn free_reduce_concat(left: &[BraidGen], right: &[BraidGen]) -> Vec<BraidGen> {
    let mut out = left.to_vec();
    for g in right {
        push_reduced(&mut out, *g);
    }
    out
}

fn perm_of_braid(n: usize, braid: &[BraidGen]) -> Perm {
    let mut perm = Perm::identity(n);
    for g in braid {
        let s = Perm::transposition(n, g.index).expect("validated braid index");
        perm = perm.compose(&s).expect("same size");
    }
    perm
}

/// A framed braid in split form: a framing vector and a freely reduced
/// braid word. `modulus: None` is the classical group with integer
/// framings; `Some(d)` is the d-modular group with residues in `[0, d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitFramedBraid {
    framings: Vec<i64>,
    braid: Vec<BraidGen>,
    modulus: Option<u64>,
}

impl SplitFramedBraid {
    pub fn identity(n: usize) -> Self {
        SplitFramedBraid {
            framings: vec![0; n],
            braid: Vec::new(),
            modulus: None,
        }
    }

    pub fn identity_mod(n: usize, d: u64) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidModulus(0));
        }
        Ok(SplitFramedBraid {
            framings: vec![0; n],
            braid: Vec::new(),
            modulus: Some(d),
        })
    }

    pub fn n(&self) -> usize {
        self.framings.len()
    }

    pub fn framings(&self) -> &[i64] {
        &self.framings
    }

    pub fn braid(&self) -> &[BraidGen] {
        &self.braid
    }

    pub fn modulus(&self) -> Option<u64> {
        self.modulus
    }

    pub fn is_identity(&self) -> bool {
        self.braid.is_empty() && self.framings.iter().all(|&a| a == 0)
    }

    /// Permutation image of the braiding part.
    pub fn braid_perm(&self) -> Perm {
        perm_of_braid(self.n(), &self.braid)
    }

    /// Total framing; conserved under multiplication since framings are
    /// only ever permuted and added.
    pub fn framing_sum(&self) -> i64 {
        self.framings.iter().sum()
    }

    fn reduce_framings(&mut self) {
        if let Some(d) = self.modulus {
            for a in &mut self.framings {
                *a = a.rem_euclid(d as i64);
            }
        }
    }

    /// Semidirect-product multiplication: the right factor's framings are
    /// transported through this element's permutation image, the braid
    /// words concatenate and freely reduce.
    pub fn multiply(&self, rhs: &SplitFramedBraid) -> Result<SplitFramedBraid> {
        if self.n() != rhs.n() {
            return Err(Error::StrandMismatch {
                left: self.n(),
                right: rhs.n(),
            });
        }
        if self.modulus != rhs.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.unwrap_or(0),
                right: rhs.modulus.unwrap_or(0),
            });
        }
        let perm_inv = self.braid_perm().inverse();
        let framings = (1..=self.n())
            .map(|i| {
                self.framings[i - 1]
                    .checked_add(rhs.framings[perm_inv.apply(i) - 1])
                    .ok_or(Error::IntegerOverflow)
            })
            .collect::<Result<_>>()?;
        let mut out = SplitFramedBraid {
            framings,
            braid: free_reduce_concat(&self.braid, &rhs.braid),
            modulus: self.modulus,
        };
        out.reduce_framings();
        Ok(out)
    }

    /// Group inverse: reversed, sign-flipped braid; framings negated and
    /// transported back.
    pub fn inverse(&self) -> SplitFramedBraid {
        let perm = self.braid_perm();
        let framings = (1..=self.n())
            .map(|i| -self.framings[perm.apply(i) - 1])
            .collect();
        let braid = self.braid.iter().rev().map(|g| g.flipped()).collect();
        let mut out = SplitFramedBraid {
            framings,
            braid,
            modulus: self.modulus,
        };
        out.reduce_framings();
        out
    }

    /// Reduces framings mod `d`. From the classical group this is the
    /// quotient onto the d-modular group; from a modular group it requires
    /// `d` to divide the current modulus.
    pub fn project_modular(&self, d: u64) -> Result<SplitFramedBraid> {
        if d == 0 {
            return Err(Error::InvalidModulus(0));
        }
        if let Some(e) = self.modulus {
            if e % d != 0 {
                return Err(Error::ModulusMismatch { left: e, right: d });
            }
        }
        let mut out = self.clone();
        out.modulus = Some(d);
        out.reduce_framings();
        Ok(out)
    }

    /// The connecting map between modular levels: `p^r -> p^s` for `s <= r`.
    pub fn pi_level_map(&self, p: u64, s: u32) -> Result<SplitFramedBraid> {
        let d = self.modulus.ok_or(Error::InvalidModulus(0))?;
        let r = power_of(d, p)?;
        if s > r {
            return Err(Error::LevelOutOfRange {
                level: s as usize,
                max: r as usize,
            });
        }
        self.project_modular(prime_power(p, s)?)
    }
}

/// Writes `d = p^r` and returns `r`, or an error when `d` is not a pure
/// power of `p`.
pub(crate) fn power_of(d: u64, p: u64) -> Result<u32> {
    if p < 2 || d == 0 {
        return Err(Error::NotPowerOfPrime { d, p });
    }
    let mut rest = d;
    let mut r = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        r += 1;
    }
    if rest != 1 {
        return Err(Error::NotPowerOfPrime { d, p });
    }
    Ok(r)
}

impl fmt::Display for SplitFramedBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.framings.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")?;
        for g in &self.braid {
            if g.inverse {
                write!(f, " s{}^-1", g.index)?;
            } else {
                write!(f, " s{}", g.index)?;
            }
        }
        Ok(())
    }
}

/// A p-adic framed braid: a braid with a truncated p-adic framing on each
/// strand. All framings share the prime and precision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicFramedBraid {
    framings: Vec<PadicApprox>,
    braid: Vec<BraidGen>,
}

impl PadicFramedBraid {
    pub fn identity(n: usize, p: u64, precision: u32) -> Result<Self> {
        let zero = PadicApprox::zero(p, precision)?;
        Ok(PadicFramedBraid {
            framings: vec![zero; n],
            braid: Vec::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.framings.len()
    }

    pub fn prime(&self) -> u64 {
        self.framings[0].prime()
    }

    pub fn precision(&self) -> usize {
        self.framings[0].precision()
    }

    pub fn framings(&self) -> &[PadicApprox] {
        &self.framings
    }

    pub fn braid(&self) -> &[BraidGen] {
        &self.braid
    }

    pub fn braid_perm(&self) -> Perm {
        perm_of_braid(self.n(), &self.braid)
    }

    pub fn is_identity(&self) -> bool {
        self.braid.is_empty() && self.framings.iter().all(|a| a.is_zero())
    }

    /// Multiplication with p-adic framing addition and the same framing
    /// transport as the classical groups.
    pub fn multiply(&self, rhs: &PadicFramedBraid) -> Result<PadicFramedBraid> {
        if self.n() != rhs.n() {
            return Err(Error::StrandMismatch {
                left: self.n(),
                right: rhs.n(),
            });
        }
        if self.precision() != rhs.precision() {
            return Err(Error::PrecisionTooSmall {
                have: rhs.precision(),
                need: self.precision(),
            });
        }
        let perm_inv = self.braid_perm().inverse();
        let framings = (1..=self.n())
            .map(|i| self.framings[i - 1].add(&rhs.framings[perm_inv.apply(i) - 1]))
            .collect::<Result<_>>()?;
        Ok(PadicFramedBraid {
            framings,
            braid: free_reduce_concat(&self.braid, &rhs.braid),
        })
    }

    pub fn inverse(&self) -> PadicFramedBraid {
        let perm = self.braid_perm();
        let framings = (1..=self.n())
            .map(|i| self.framings[perm.apply(i) - 1].neg())
            .collect();
        let braid = self.braid.iter().rev().map(|g| g.flipped()).collect();
        PadicFramedBraid { framings, braid }
    }

    /// Projection onto the modular group at level `r`: framings become
    /// their residues mod `p^r`.
    pub fn project_level(&self, r: u32) -> Result<SplitFramedBraid> {
        let d = prime_power(self.prime(), r)?;
        let framings = self
            .framings
            .iter()
            .map(|a| {
                let res = a.residue(r as usize)?;
                i64::try_from(res).map_err(|_| Error::IntegerOverflow)
            })
            .collect::<Result<_>>()?;
        Ok(SplitFramedBraid {
            framings,
            braid: self.braid.clone(),
            modulus: Some(d),
        })
    }

    /// The `k`-th classical approximant: the same braid with the integer
    /// framings `residue(a_i, k)`. It agrees with `self` after projection
    /// to any level `<= k`.
    pub fn approximant(&self, k: u32) -> Result<SplitFramedBraid> {
        if k as usize > self.precision() || k == 0 {
            return Err(Error::LevelOutOfRange {
                level: k as usize,
                max: self.precision(),
            });
        }
        let framings = self
            .framings
            .iter()
            .map(|a| {
                let res = a.residue(k as usize)?;
                i64::try_from(res).map_err(|_| Error::IntegerOverflow)
            })
            .collect::<Result<_>>()?;
        Ok(SplitFramedBraid {
            framings,
            braid: self.braid.clone(),
            modulus: None,
        })
    }
}
