//! Symmetric-group combinatorics.
//!
//! Permutations are stored in one-line notation with 1-based values, and
//! composition is function composition throughout: `(w * v)(i) = w(v(i))`.
//! Every transport formula in the braid and algebra layers is derived from
//! this one convention; the group-law property tests certify it.
//!
//! The module also provides the strand-stripping coset decomposition
//! `w = v * c_k`, `c_k = s_{n-1} * ... * s_k`, which exhibits any basis
//! element as `a * g_{n-1} * b` with `a`, `b` one strand down. That shape
//! is exactly what the Markov trace recursion consumes, so the canonical
//! reduced word is the staircase word read off the decomposition.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `{1, ..., n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

/// Result of stripping the top strand: either `w` fixes `n` and restricts,
/// or `w = v * c_k` with `v` fixing `n` and `c_k(k) = n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CosetDecomposition {
    /// `w(n) = n`; the restriction of `w` to `S_{n-1}`.
    FixesTop(Perm),
    /// `w = v * c_k` with `v` (restricted to `S_{n-1}`) and `1 <= k <= n-1`;
    /// `length(w) = length(v) + (n - k)` and `k = w^{-1}(n)`.
    Cycle { v: Perm, k: usize },
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (1..=n).collect(),
        }
    }

    /// The adjacent transposition `s_i = (i, i+1)` in `S_n`.
    pub fn transposition(n: usize, i: usize) -> Result<Self> {
        if i < 1 || i + 1 > n {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: n.saturating_sub(1),
            });
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, i);
        Ok(Perm { images })
    }

    /// The staircase cycle `c_k = s_{n-1} * s_{n-2} * ... * s_k` in `S_n`:
    /// sends `k` to `n` and shifts everything above `k` down by one.
    /// `k = n` gives the identity.
    pub fn staircase_cycle(n: usize, k: usize) -> Result<Self> {
        if k < 1 || k > n {
            return Err(Error::IndexOutOfRange { index: k, bound: n });
        }
        let mut images = Vec::with_capacity(n);
        for i in 1..=n {
            images.push(if i < k {
                i
            } else if i == k {
                n
            } else {
                i - 1
            });
        }
        Ok(Perm { images })
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v < 1 || v > n || seen[v - 1] {
                return Err(Error::NotAPermutation(images));
            }
            seen[v - 1] = true;
        }
        Ok(Perm { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `w(j)` for `1 <= j <= n`.
    pub fn apply(&self, j: usize) -> usize {
        self.images[j - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Function composition `(self * v)(i) = self(v(i))`.
    pub fn compose(&self, v: &Perm) -> Result<Perm> {
        if self.n() != v.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: v.n(),
            });
        }
        Ok(Perm {
            images: v.images.iter().map(|&i| self.images[i - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Perm { images }
    }

    /// Coxeter length: the number of inversions, which equals the length
    /// of any reduced word.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Whether right multiplication by `s_i` shortens `w`; equivalently
    /// `w(i) > w(i+1)`.
    pub fn right_descent(&self, i: usize) -> Result<bool> {
        if i < 1 || i >= self.n() {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: self.n().saturating_sub(1),
            });
        }
        Ok(self.images[i - 1] > self.images[i])
    }

    /// Strips the top strand. Requires `n >= 2`.
    pub fn coset_decompose(&self) -> CosetDecomposition {
        let n = self.n();
        assert!(n >= 2, "coset decomposition needs n >= 2");
        if self.images[n - 1] == n {
            return CosetDecomposition::FixesTop(Perm {
                images: self.images[..n - 1].to_vec(),
            });
        }
        let k = self.inverse().apply(n);
        // v = w * c_k^{-1}: v(i) = w(i) for i < k, v(i) = w(i+1) for i >= k.
        let mut images = Vec::with_capacity(n - 1);
        for i in 1..n {
            images.push(if i < k {
                self.images[i - 1]
            } else {
                self.images[i]
            });
        }
        CosetDecomposition::Cycle {
            v: Perm { images },
            k,
        }
    }

    /// Embeds into `S_m` (`m >= n`) by fixing the new top strands.
    pub fn embed(&self, m: usize) -> Result<Perm> {
        if m < self.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: m,
            });
        }
        let mut images = self.images.clone();
        images.extend(self.n() + 1..=m);
        Ok(Perm { images })
    }

    /// The canonical reduced word: generator indices whose left-to-right
    /// composition reproduces `w`. Built recursively from the coset
    /// decomposition, so it ends in the staircase `n-1, n-2, ..., k`.
    pub fn reduced_word(&self) -> Vec<usize> {
        if self.n() <= 1 {
            return Vec::new();
        }
        match self.coset_decompose() {
            CosetDecomposition::FixesTop(rest) => rest.reduced_word(),
            CosetDecomposition::Cycle { v, k } => {
                let mut word = v.reduced_word();
                word.extend((k..self.n()).rev());
                word
            }
        }
    }

    /// Evaluates a word of generator indices by left-to-right composition.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Perm> {
        let mut w = Perm::identity(n);
        for &i in word {
            w = w.compose(&Perm::transposition(n, i)?)?;
        }
        Ok(w)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Perm {
    type Err = Error;

    /// Parses one-line notation, e.g. `[3,1,2]`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse {
                column: 1,
                message: format!("expected one-line notation like [3,1,2], got `{s}`"),
            })?;
        let images: Vec<usize> = inner
            .split(',')
            .map(|t| {
                t.trim().parse().map_err(|_| Error::Parse {
                    column: 1,
                    message: format!("bad image `{t}` in `{s}`"),
                })
            })
            .collect::<Result<_>>()?;
        Perm::from_images(images)
    }
}
