//! Seeded random generators for the property suites, the CLI `check`
//! command and the benchmarks. Everything is driven by a caller-supplied
//! RNG so failures reproduce from a seed.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::{YBasisElt, YElement, YParams};
use crate::braid::{FramedBraidWord, FramingExp};
use crate::coeff::{ratio, LaurentU, TracePoly};
use crate::symmetric::Perm;

pub fn random_rational(rng: &mut impl Rng) -> crate::coeff::Rational {
    let num = loop {
        let n = rng.random_range(-3..=3i64);
        if n != 0 {
            break n;
        }
    };
    ratio(num, rng.random_range(1..=3))
}

pub fn random_laurent(rng: &mut impl Rng) -> LaurentU {
    let mut out = LaurentU::zero();
    for _ in 0..rng.random_range(1..=3) {
        out = out + LaurentU::term(rng.random_range(-2..=2), random_rational(rng));
    }
    if out.is_zero() {
        LaurentU::one()
    } else {
        out
    }
}

pub fn random_trace_poly(d: u64, rng: &mut impl Rng) -> TracePoly {
    let mut out = TracePoly::zero(d);
    for _ in 0..rng.random_range(1..=3) {
        let mut mono = TracePoly::one(d);
        for _ in 0..rng.random_range(0..=2u32) {
            mono = mono.mul(&TracePoly::z(d)).expect("same modulus");
        }
        if d > 1 {
            for _ in 0..rng.random_range(0..=2u32) {
                let idx = rng.random_range(1..d) as i64;
                mono = mono.mul(&TracePoly::x_var(d, idx)).expect("same modulus");
            }
        }
        out = out
            .add(&mono.scale(&random_laurent(rng)))
            .expect("same modulus");
    }
    out
}

pub fn random_perm(n: usize, rng: &mut impl Rng) -> Perm {
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    Perm::from_images(images).expect("shuffled identity is a permutation")
}

pub fn random_framing(d: u64, n: usize, rng: &mut impl Rng) -> Vec<u64> {
    (0..n).map(|_| rng.random_range(0..d)).collect()
}

pub fn random_basis(params: YParams, rng: &mut impl Rng) -> YBasisElt {
    YBasisElt::new(
        params,
        random_framing(params.d, params.n, rng),
        random_perm(params.n, rng),
    )
    .expect("sampled in range")
}

/// A random element with up to `max_terms` basis terms and small Laurent
/// coefficients.
pub fn random_y_element(params: YParams, rng: &mut impl Rng, max_terms: usize) -> YElement {
    let k = rng.random_range(1..=max_terms.max(1));
    YElement::from_terms(
        params,
        (0..k).map(|_| (random_basis(params, rng), random_laurent(rng))),
    )
    .expect("sampled in range")
}

/// A random element supported on the subalgebra of the first `n-1`
/// strands: top framing zero, permutation fixing `n`.
pub fn random_subalgebra_element(
    params: YParams,
    rng: &mut impl Rng,
    max_terms: usize,
) -> YElement {
    assert!(params.n >= 2, "subalgebra sampling needs n >= 2");
    let k = rng.random_range(1..=max_terms.max(1));
    YElement::from_terms(
        params,
        (0..k).map(|_| {
            let mut framing = random_framing(params.d, params.n, rng);
            framing[params.n - 1] = 0;
            let perm = random_perm(params.n - 1, rng)
                .embed(params.n)
                .expect("embedding grows the size");
            (
                YBasisElt::new(params, framing, perm).expect("sampled in range"),
                random_laurent(rng),
            )
        }),
    )
    .expect("sampled in range")
}

/// A random word in the framing and braid generators with integer framing
/// exponents in `[-3, 3]`.
pub fn random_word(n: usize, len: usize, rng: &mut impl Rng) -> FramedBraidWord {
    let mut word = FramedBraidWord::empty(n);
    for _ in 0..len {
        if n >= 2 && rng.random_bool(0.5) {
            word.push_braid(rng.random_range(1..n), rng.random_bool(0.5))
                .expect("index in range");
        } else {
            word.push_framing(
                rng.random_range(1..=n),
                FramingExp::Int(rng.random_range(-3..=3)),
            )
            .expect("index in range");
        }
    }
    word
}
