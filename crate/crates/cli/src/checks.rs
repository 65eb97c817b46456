//! The `check` subcommand: the relation suite on exact identities plus
//! seeded randomized property checks (trace rules, homomorphism and
//! commuting-square properties in tower mode).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use yokonuma::sample::{random_subalgebra_element, random_y_element};
use yokonuma::{
    delta_map, markov_trace, relation_suite, Error, RelationCheck, TowerElement, TracePoly,
    YElement, YParams,
};

fn check(name: impl Into<String>, passed: bool) -> RelationCheck {
    RelationCheck {
        name: name.into(),
        passed,
    }
}

/// Trace-rule spot checks on seeded random elements of one algebra.
fn trace_property_checks(
    params: YParams,
    rng: &mut ChaCha8Rng,
    samples: usize,
    out: &mut Vec<RelationCheck>,
) -> Result<(), Error> {
    let d = params.d;
    let mut central = true;
    for _ in 0..samples {
        let a = random_y_element(params, rng, 3);
        let b = random_y_element(params, rng, 3);
        if markov_trace(&a.mul(&b)?) != markov_trace(&b.mul(&a)?) {
            central = false;
            break;
        }
    }
    out.push(check(format!("trace_central_d{d}"), central));

    if params.n >= 2 {
        let g_top = YElement::g(params, params.n - 1)?;
        let mut markov = true;
        let mut framing = true;
        for _ in 0..samples {
            let a = random_subalgebra_element(params, rng, 2);
            let b = random_subalgebra_element(params, rng, 2);
            let lhs = markov_trace(&a.mul(&g_top)?.mul(&b)?);
            if lhs != TracePoly::z(d).mul(&markov_trace(&a.mul(&b)?))? {
                markov = false;
            }
            let m = rng.random_range(0..d) as i64;
            let t_top = YElement::t(params, params.n, m)?;
            if markov_trace(&a.mul(&t_top)?) != TracePoly::x_var(d, m).mul(&markov_trace(&a))? {
                framing = false;
            }
            if !markov && !framing {
                break;
            }
        }
        out.push(check(format!("trace_markov_rule_d{d}"), markov));
        out.push(check(format!("trace_framing_rule_d{d}"), framing));
    }
    Ok(())
}

pub fn classical_checks(
    d: u64,
    n: usize,
    seed: u64,
    samples: usize,
) -> Result<Vec<RelationCheck>, Error> {
    let params = YParams::new(d, n)?;
    let mut out = relation_suite(params)?.checks;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    trace_property_checks(params, &mut rng, samples, &mut out)?;
    Ok(out)
}

pub fn tower_checks(
    p: u64,
    depth: u32,
    n: usize,
    seed: u64,
    samples: usize,
    square: bool,
) -> Result<Vec<RelationCheck>, Error> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // Relation suite at every level of the tower.
    for r in 1..=depth {
        let d = p
            .checked_pow(r)
            .ok_or(Error::PrecisionOverflow { p, precision: r })?;
        let report = relation_suite(YParams::new(d, n)?)?;
        out.push(check(
            format!("relations_level_r{r}_d{d}"),
            report.all_passed(),
        ));
    }

    // The idempotent families are coherent under phi.
    if n >= 2 {
        let mut coherent = true;
        for i in 1..n {
            let e = TowerElement::e(p, depth, n, i, i + 1)?;
            coherent &= e.is_coherent();
        }
        out.push(check("idempotent_tower_coherent", coherent));
    }

    // phi is an algebra homomorphism on random pairs at the top level.
    let top = YParams::new(
        p.checked_pow(depth).ok_or(Error::PrecisionOverflow {
            p,
            precision: depth,
        })?,
        n,
    )?;
    let mut hom = true;
    for _ in 0..samples {
        let x = random_y_element(top, &mut rng, 2);
        let y = random_y_element(top, &mut rng, 2);
        for s in 1..depth {
            if x.mul(&y)?.phi(p, s)? != x.phi(p, s)?.mul(&y.phi(p, s)?)? {
                hom = false;
            }
        }
    }
    out.push(check("phi_homomorphism", hom));

    if square {
        let mut commutes = true;
        for _ in 0..samples {
            let x = random_y_element(top, &mut rng, 2);
            for s in 1..=depth {
                if delta_map(&markov_trace(&x), p, s)? != markov_trace(&x.phi(p, s)?) {
                    commutes = false;
                }
            }
        }
        out.push(check("trace_commuting_square", commutes));
    }

    trace_property_checks(top, &mut rng, samples.min(25), &mut out)?;
    Ok(out)
}
