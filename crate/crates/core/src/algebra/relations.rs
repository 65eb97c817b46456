//! The defining-relation suite: every presentation relation and
//! commutation rule of `Y_{d,n}(u)`, checked as exact identities of
//! canonical normal forms.

use super::{YBasisElt, YElement, YParams};
use crate::braid::elementary_framing_word;
use crate::coeff::LaurentU;
use crate::error::Result;
use crate::symmetric::Perm;

/// One named identity and whether it held.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: String,
    pub passed: bool,
}

/// Outcome of [`relation_suite`].
#[derive(Debug, Clone)]
pub struct RelationReport {
    pub params: YParams,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn t_monomial(params: YParams, framing: Vec<u64>) -> Result<YElement> {
    YElement::from_terms(
        params,
        [(
            YBasisElt::new(params, framing, Perm::identity(params.n))?,
            LaurentU::one(),
        )],
    )
}

/// All framing vectors in `[0,d)^n`, capped so huge parameter choices stay
/// feasible; the acceptance grids are always fully enumerated.
fn framing_vectors(d: u64, n: usize, cap: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut current = vec![0u64; n];
    loop {
        out.push(current.clone());
        if out.len() >= cap {
            return out;
        }
        let mut pos = 0;
        loop {
            if pos == n {
                return out;
            }
            current[pos] += 1;
            if current[pos] < d {
                break;
            }
            current[pos] = 0;
            pos += 1;
        }
    }
}

/// Checks, as exact identities, the reduced presentation (braid
/// relations, framing commutations, `t_1^d = 1`, the quadratic relation)
/// together with the idempotent and commutation rules of the `e_{d,i,j}`.
pub fn relation_suite(params: YParams) -> Result<RelationReport> {
    let YParams { d, n } = params;
    let mut checks = Vec::new();
    let mut push = |name: String, passed: bool| checks.push(RelationCheck { name, passed });

    let one = YElement::one(params);
    let g: Vec<YElement> = (1..n)
        .map(|i| YElement::g(params, i))
        .collect::<Result<_>>()?;
    let g_inv: Vec<YElement> = (1..n)
        .map(|i| YElement::g_inverse(params, i))
        .collect::<Result<_>>()?;
    let gen = |i: usize| &g[i - 1];
    let gen_inv = |i: usize| &g_inv[i - 1];

    // Braid relations among the g_i.
    for i in 1..n.saturating_sub(1) {
        let lhs = gen(i).mul(gen(i + 1))?.mul(gen(i))?;
        let rhs = gen(i + 1).mul(gen(i))?.mul(gen(i + 1))?;
        push(format!("braid_adjacent_g{i}"), lhs == rhs);
    }
    for i in 1..n {
        for j in (i + 2)..n {
            let lhs = gen(i).mul(gen(j))?;
            let rhs = gen(j).mul(gen(i))?;
            push(format!("braid_far_g{i}_g{j}"), lhs == rhs);
        }
    }

    // g_i g_i^{-1} = 1.
    for i in 1..n {
        let passed = gen(i).mul(gen_inv(i))? == one && gen_inv(i).mul(gen(i))? == one;
        push(format!("inverse_g{i}"), passed);
    }

    let t1 = YElement::t(params, 1, 1)?;

    // t_1 commutes with the far generators.
    for i in 2..n {
        push(
            format!("t1_commutes_g{i}"),
            t1.mul(gen(i))? == gen(i).mul(&t1)?,
        );
    }

    // t_1 g_1 t_1 g_1^{-1} = g_1 t_1 g_1^{-1} t_1.
    if n >= 2 {
        let lhs = t1.mul(gen(1))?.mul(&t1)?.mul(gen_inv(1))?;
        let rhs = gen(1).mul(&t1)?.mul(gen_inv(1))?.mul(&t1)?;
        push("t1_g1_mixed_relation".into(), lhs == rhs);
    }

    // t_1^d = 1.
    push(format!("t1_order_{d}"), t1.pow(d)? == one);

    // The conjugated framings: the defining word for t_i evaluates to t_i,
    // and conjugating it by g_i from either side agrees.
    for i in 1..=n {
        let h_i = YElement::eval_word(&elementary_framing_word(i, n)?, params)?;
        push(
            format!("elementary_framing_t{i}"),
            h_i == YElement::t(params, i, 1)?,
        );
    }
    for i in 1..n {
        let h_i = YElement::t(params, i, 1)?;
        let lhs = gen(i).mul(&h_i)?.mul(gen_inv(i))?;
        let rhs = gen_inv(i).mul(&h_i)?.mul(gen(i))?;
        push(format!("framing_conjugate_symmetry_g{i}"), lhs == rhs);
    }

    // Quadratic relation g_i^2 = 1 + (u-1) e_{d,i} (1 - g_i).
    let u_minus_one = LaurentU::u_minus_one();
    for i in 1..n {
        let e_i = YElement::e(params, i, i + 1)?;
        let lhs = gen(i).mul(gen(i))?;
        let rhs = one.add(&e_i.mul(&one.sub(gen(i))?)?.scale(&u_minus_one))?;
        push(format!("quadratic_g{i}"), lhs == rhs);
    }

    // Idempotent and symmetric: e_{d,i,j}^2 = e_{d,i,j}, e_{d,i,j} = e_{d,j,i}.
    for i in 1..=n {
        for j in (i + 1)..=n {
            let e = YElement::e(params, i, j)?;
            push(format!("e_idempotent_{i}_{j}"), e.mul(&e)? == e);
            push(
                format!("e_symmetric_{i}_{j}"),
                e == YElement::e(params, j, i)?,
            );
        }
    }

    // Commutations of g_i^{+-1} with e_{d,j} = e_{d,j,j+1}: plain
    // commutation away from j = i-1, i+1, index swap by s_i next to it.
    let si_image = |i: usize, k: usize| {
        if k == i {
            i + 1
        } else if k == i + 1 {
            i
        } else {
            k
        }
    };
    for i in 1..n {
        for j in 1..n {
            let e_j = YElement::e(params, j, j + 1)?;
            if j + 1 != i && j != i + 1 {
                let passed = gen(i).mul(&e_j)? == e_j.mul(gen(i))?
                    && gen_inv(i).mul(&e_j)? == e_j.mul(gen_inv(i))?;
                push(format!("e_commute_g{i}_e{j}"), passed);
            } else {
                let e_swapped = YElement::e(params, si_image(i, j), si_image(i, j + 1))?;
                let passed = gen(i).mul(&e_j)? == e_swapped.mul(gen(i))?
                    && gen_inv(i).mul(&e_j)? == e_swapped.mul(gen_inv(i))?
                    && e_j.mul(gen(i))? == gen(i).mul(&e_swapped)?
                    && e_j.mul(gen_inv(i))? == gen_inv(i).mul(&e_swapped)?;
                push(format!("e_swap_g{i}_e{j}"), passed);
            }
        }
    }

    // e_{d,i} t^a = e_{d,i} t^{a'} with the i, i+1 framing entries swapped.
    for i in 1..n {
        let e_i = YElement::e(params, i, i + 1)?;
        let mut passed = true;
        for a in framing_vectors(d, n, 4096) {
            let mut swapped = a.clone();
            swapped.swap(i - 1, i);
            if e_i.mul(&t_monomial(params, a)?)? != e_i.mul(&t_monomial(params, swapped)?)? {
                passed = false;
                break;
            }
        }
        push(format!("e_framing_swap_g{i}"), passed);
    }

    Ok(RelationReport { params, checks })
}
