//! The inductive Markov trace on `Y_{d,n}(u)` and its p-adic extension.
//!
//! The trace is the unique linear functional with `tr(1) = 1`,
//! `tr(ab) = tr(ba)`, `tr(a g_n b) = z tr(ab)` and
//! `tr(a t_{n+1}^m b) = x_m tr(ab)`. It is computed here by structural
//! recursion on the top strand: the coset decomposition `w = v * c_k`
//! rewrites any basis element of `Y_{d,n}` as `A * g_{n-1} * B` with `A`,
//! `B` one strand down, where the stripping rules apply directly.
//! Well-definedness is certified by the trace-property and
//! commuting-square test suites rather than re-derived.

mod tower;

pub use tower::{padic_trace, z_approx, PadicTraceValue, TowerElement};

use crate::algebra::{YBasisElt, YElement, YParams};
use crate::braid::power_of;
use crate::coeff::{LaurentU, TracePoly};
use crate::error::{Error, Result};
use crate::padic::prime_power;
use crate::symmetric::{CosetDecomposition, Perm};

/// The Markov trace of an element of `Y_{d,n}(u)`, valued in the
/// polynomial ring over `z` and `x_1, ..., x_{d-1}`.
pub fn markov_trace(x: &YElement) -> TracePoly {
    let params = x.params();
    let mut out = TracePoly::zero(params.d);
    for (basis, coeff) in x.terms() {
        let term = basis_trace(params, basis).scale(coeff);
        out = out.add(&term).expect("traces share the modulus");
    }
    out
}

fn basis_trace(params: YParams, basis: &YBasisElt) -> TracePoly {
    let d = params.d;
    let n = params.n;
    if n == 1 {
        return TracePoly::x_var(d, basis.framing()[0] as i64);
    }
    let sub = YParams { d, n: n - 1 };
    match basis.perm().coset_decompose() {
        CosetDecomposition::FixesTop(rest) => {
            // tr(a t_n^m) = x_m tr(a): peel the untouched top strand.
            let factor = TracePoly::x_var(d, basis.framing()[n - 1] as i64);
            let lower = YBasisElt::new(sub, basis.framing()[..n - 1].to_vec(), rest)
                .expect("restriction stays in range");
            factor
                .mul(&basis_trace(sub, &lower))
                .expect("traces share the modulus")
        }
        CosetDecomposition::Cycle { v, k } => {
            // t^a g_w = A g_{n-1} B with A = t^{a'} g_v and
            // B = t_{n-1}^{a_n} g_{s_{n-2} ... s_k}, both in Y_{d,n-1},
            // so tr = z tr(A B).
            let a_elt = YElement::from_terms(
                sub,
                [(
                    YBasisElt::new(sub, basis.framing()[..n - 1].to_vec(), v)
                        .expect("v fixes the top strand"),
                    LaurentU::one(),
                )],
            )
            .expect("valid subalgebra element");
            let mut b_framing = vec![0; n - 1];
            b_framing[n - 2] = basis.framing()[n - 1];
            let b_perm = Perm::staircase_cycle(n - 1, k).expect("1 <= k <= n-1");
            let b_elt = YElement::from_terms(
                sub,
                [(
                    YBasisElt::new(sub, b_framing, b_perm).expect("valid subalgebra element"),
                    LaurentU::one(),
                )],
            )
            .expect("valid subalgebra element");
            let product = a_elt.mul(&b_elt).expect("same parameters");
            TracePoly::z(d)
                .mul(&markov_trace(&product))
                .expect("traces share the modulus")
        }
    }
}

/// The connecting ring epimorphism `C[X_r] -> C[X_s]` between trace rings
/// of levels `r >= s`: `x_i` maps to `x_{i mod p^s}` with `x_0 = 1`, and
/// `z`, `u` pass through.
pub fn delta_map(q: &TracePoly, p: u64, s: u32) -> Result<TracePoly> {
    let r = power_of(q.modulus(), p)?;
    if s < 1 || s > r {
        return Err(Error::LevelOutOfRange {
            level: s as usize,
            max: r as usize,
        });
    }
    Ok(q.substitute_indices_mod(prime_power(p, s)?))
}
