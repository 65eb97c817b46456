//! Acceptance suite: every criterion the kernel must meet, one test per
//! criterion, each printing a pass/fail line with its runtime (visible
//! with `cargo test --test acceptance -- --nocapture`). Arithmetic is
//! exact everywhere, so every comparison is canonical-form equality.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use yokonuma::sample::{random_subalgebra_element, random_word, random_y_element};
use yokonuma::{
    delta_map, markov_trace, padic_trace, relation_suite, z_approx, LaurentU, PadicApprox, Perm,
    TowerElement, TracePoly, YBasisElt, YElement, YParams,
};

fn params(d: u64, n: usize) -> YParams {
    YParams::new(d, n).unwrap()
}

fn finish(name: &str, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    let within = elapsed <= budget;
    println!(
        "[acceptance] {name}: {} ({elapsed:.2?})",
        if within { "PASS" } else { "FAIL" }
    );
    assert!(within, "{name} exceeded its {budget:?} budget: {elapsed:?}");
}

/// `(1/d) sum_m x_m x_{-m}`, straight from the closed form.
fn idempotent_trace_formula(d: u64) -> TracePoly {
    let mut sum = TracePoly::zero(d);
    for m in 0..d as i64 {
        sum = sum
            .add(
                &TracePoly::x_var(d, m)
                    .mul(&TracePoly::x_var(d, -m))
                    .unwrap(),
            )
            .unwrap();
    }
    sum.scale(&LaurentU::from_rational(yokonuma::Rational::new(
        1.into(),
        (d as i64).into(),
    )))
}

fn partial_idempotent_trace_formula(p: u64, r: u32, k: u32) -> TracePoly {
    let d = p.pow(r);
    let summands = p.pow(k);
    let mut sum = TracePoly::zero(d);
    for m in 0..summands as i64 {
        sum = sum
            .add(
                &TracePoly::x_var(d, m)
                    .mul(&TracePoly::x_var(d, -m))
                    .unwrap(),
            )
            .unwrap();
    }
    sum.scale(&LaurentU::from_rational(yokonuma::Rational::new(
        1.into(),
        (summands as i64).into(),
    )))
}

#[test]
fn criterion_01_quadratic_relation() {
    let start = Instant::now();
    for d in [1, 2, 3, 4] {
        for n in [2, 3] {
            let p = params(d, n);
            let one = YElement::one(p);
            for i in 1..n {
                let g = YElement::g(p, i).unwrap();
                let e = YElement::e(p, i, i + 1).unwrap();
                let rhs = one
                    .add(
                        &e.mul(&one.sub(&g).unwrap())
                            .unwrap()
                            .scale(&LaurentU::u_minus_one()),
                    )
                    .unwrap();
                assert_eq!(g.mul(&g).unwrap(), rhs, "d={d} n={n} i={i}");
            }
        }
    }
    finish("01 quadratic relation", start, Duration::from_secs(1));
}

#[test]
fn criterion_02_inverse_formula() {
    let start = Instant::now();
    for d in [1, 2, 3, 4] {
        for n in [2, 3] {
            let p = params(d, n);
            for i in 1..n {
                let g = YElement::g(p, i).unwrap();
                let ginv = YElement::g_inverse(p, i).unwrap();
                assert_eq!(g.mul(&ginv).unwrap(), YElement::one(p), "d={d} n={n} i={i}");
                assert_eq!(ginv.mul(&g).unwrap(), YElement::one(p), "d={d} n={n} i={i}");
            }
        }
    }
    finish("02 inverse formula", start, Duration::from_secs(1));
}

#[test]
fn criterion_03_idempotents() {
    let start = Instant::now();
    for d in [1, 2, 3, 4] {
        for n in [2, 3, 4] {
            let p = params(d, n);
            for i in 1..=n {
                for j in 1..=n {
                    if i == j {
                        continue;
                    }
                    let e = YElement::e(p, i, j).unwrap();
                    assert_eq!(e.mul(&e).unwrap(), e, "d={d} n={n} i={i} j={j}");
                }
            }
        }
    }
    finish("03 idempotents", start, Duration::from_secs(1));
}

#[test]
fn criterion_04_presentation_and_commutations() {
    let start = Instant::now();
    for d in [1, 2, 3] {
        for n in [2, 3, 4] {
            let report = relation_suite(params(d, n)).unwrap();
            let failures: Vec<_> = report.failures().collect();
            assert!(failures.is_empty(), "d={d} n={n}: {failures:?}");
        }
    }
    finish(
        "04 presentation and commutations",
        start,
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_05_trace_closed_forms() {
    let start = Instant::now();
    for d in [2u64, 3, 4, 9] {
        for n in [2usize, 3, 4] {
            let p = params(d, n);
            assert_eq!(markov_trace(&YElement::one(p)), TracePoly::one(d));
            let e_formula = idempotent_trace_formula(d);
            for i in 1..n {
                let g = YElement::g(p, i).unwrap();
                let e = YElement::e(p, i, i + 1).unwrap();
                assert_eq!(markov_trace(&g), TracePoly::z(d), "tr(g) d={d} n={n} i={i}");
                assert_eq!(
                    markov_trace(&e.mul(&g).unwrap()),
                    TracePoly::z(d),
                    "tr(eg) d={d} n={n} i={i}"
                );
                assert_eq!(markov_trace(&e), e_formula, "tr(e) d={d} n={n} i={i}");
                let umo = LaurentU::u_minus_one();
                let g2_expected = TracePoly::one(d)
                    .sub(&TracePoly::z(d).scale(&umo))
                    .unwrap()
                    .add(&e_formula.scale(&umo))
                    .unwrap();
                assert_eq!(
                    markov_trace(&g.mul(&g).unwrap()),
                    g2_expected,
                    "tr(g^2) d={d} n={n} i={i}"
                );
            }
            // tr(t_1^{m_1} ... t_n^{m_n}) = x_{m_1} ... x_{m_n}, full
            // enumeration of framing vectors.
            let mut framing = vec![0u64; n];
            loop {
                let basis = YBasisElt::new(p, framing.clone(), Perm::identity(n)).unwrap();
                let elt = YElement::from_terms(p, [(basis, LaurentU::one())]).unwrap();
                let mut expected = TracePoly::one(d);
                for &m in &framing {
                    expected = expected.mul(&TracePoly::x_var(d, m as i64)).unwrap();
                }
                assert_eq!(markov_trace(&elt), expected, "d={d} framing={framing:?}");
                let mut pos = 0;
                loop {
                    if pos == n {
                        break;
                    }
                    framing[pos] += 1;
                    if framing[pos] < d {
                        break;
                    }
                    framing[pos] = 0;
                    pos += 1;
                }
                if pos == n {
                    break;
                }
            }
        }
    }
    finish("05 trace closed forms", start, Duration::from_secs(5));
}

#[test]
fn criterion_06_trace_property_suite() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2026);
    for d in [2u64, 3] {
        let n = 3;
        let p = params(d, n);
        // tr(ab) = tr(ba) on 250 pairs per algebra (500 random pairs total).
        for _ in 0..250 {
            let a = random_y_element(p, &mut rng, 3);
            let b = random_y_element(p, &mut rng, 3);
            assert_eq!(
                markov_trace(&a.mul(&b).unwrap()),
                markov_trace(&b.mul(&a).unwrap()),
                "centrality d={d}"
            );
        }
        // tr(A g_top B) = z tr(AB) and tr(A t_top^m) = x_m tr(A).
        let g_top = YElement::g(p, n - 1).unwrap();
        for _ in 0..125 {
            let a = random_subalgebra_element(p, &mut rng, 2);
            let b = random_subalgebra_element(p, &mut rng, 2);
            assert_eq!(
                markov_trace(&a.mul(&g_top).unwrap().mul(&b).unwrap()),
                TracePoly::z(d)
                    .mul(&markov_trace(&a.mul(&b).unwrap()))
                    .unwrap(),
                "markov rule d={d}"
            );
            for m in 0..d as i64 {
                let t_top = YElement::t(p, n, m).unwrap();
                assert_eq!(
                    markov_trace(&a.mul(&t_top).unwrap()),
                    TracePoly::x_var(d, m).mul(&markov_trace(&a)).unwrap(),
                    "framing rule d={d} m={m}"
                );
            }
        }
    }
    finish("06 trace property suite", start, Duration::from_secs(60));
}

#[test]
fn criterion_07_associativity() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(4096);
    for d in [2u64, 3] {
        let p = params(d, 3);
        for _ in 0..250 {
            let x = random_y_element(p, &mut rng, 3);
            let y = random_y_element(p, &mut rng, 3);
            let z = random_y_element(p, &mut rng, 3);
            assert_eq!(
                x.mul(&y).unwrap().mul(&z).unwrap(),
                x.mul(&y.mul(&z).unwrap()).unwrap(),
                "associativity d={d}"
            );
        }
    }
    finish("07 associativity", start, Duration::from_secs(60));
}

#[test]
fn criterion_08_tower_coherence_and_commuting_square() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(512);
    let p = 2u64;
    for n in [2usize, 3] {
        // phi maps the idempotent family onto itself at every level pair.
        for r in 1..=3u32 {
            for s in 1..=r {
                for i in 1..n {
                    let e_r = YElement::e(params(p.pow(r), n), i, i + 1).unwrap();
                    let e_s = YElement::e(params(p.pow(s), n), i, i + 1).unwrap();
                    assert_eq!(e_r.phi(p, s).unwrap(), e_s, "r={r} s={s} i={i}");
                }
            }
        }
        // phi is an algebra homomorphism on 100 random pairs.
        let top = params(p.pow(3), n);
        for _ in 0..100 {
            let x = random_y_element(top, &mut rng, 2);
            let y = random_y_element(top, &mut rng, 2);
            for s in 1..=2u32 {
                assert_eq!(
                    x.mul(&y).unwrap().phi(p, s).unwrap(),
                    x.phi(p, s).unwrap().mul(&y.phi(p, s).unwrap()).unwrap(),
                    "phi hom n={n} s={s}"
                );
            }
        }
        // The commuting square delta . tau_r = tau_s . phi on 100 random
        // elements.
        for _ in 0..100 {
            let x = random_y_element(top, &mut rng, 2);
            for s in 1..=2u32 {
                assert_eq!(
                    delta_map(&markov_trace(&x), p, s).unwrap(),
                    markov_trace(&x.phi(p, s).unwrap()),
                    "square n={n} s={s}"
                );
            }
        }
    }
    finish(
        "08 tower coherence and commuting square",
        start,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_09_padic_computations() {
    let start = Instant::now();
    // tau(t^b) = x_b levelwise for b = (1, 1+p, 1+p+p^2) at p = 3, R = 3.
    let b = PadicApprox::new(3, vec![1, 1, 1]).unwrap();
    let tower = TowerElement::t(3, 3, 1, 1, &b).unwrap();
    assert!(tower.is_coherent());
    let value = padic_trace(&tower);
    assert!(value.is_coherent());
    for (r, exp) in [(1u32, 1i64), (2, 4), (3, 13)] {
        assert_eq!(value.level(r).unwrap(), &TracePoly::x_var(3u64.pow(r), exp));
    }
    // tau(e_i g_i) = z at every level.
    for p in [2u64, 3] {
        let e = TowerElement::e(p, 3, 2, 1, 2).unwrap();
        let g = TowerElement::g(p, 3, 2, 1).unwrap();
        let teg = padic_trace(&e.mul(&g).unwrap());
        for r in 1..=3u32 {
            assert_eq!(
                teg.level(r).unwrap(),
                &TracePoly::z(p.pow(r)),
                "p={p} r={r}"
            );
        }
    }
    // z_{r,r,i} = e_{p^r,i}; tr(z_{r,k,i}) matches the closed form.
    for p in [2u64, 3] {
        for r in 1..=2u32 {
            assert_eq!(
                z_approx(p, r, 2, r, 1).unwrap(),
                YElement::e(params(p.pow(r), 2), 1, 2).unwrap(),
                "p={p} r={r}"
            );
            for k in 0..=r {
                assert_eq!(
                    markov_trace(&z_approx(p, r, 2, k, 1).unwrap()),
                    partial_idempotent_trace_formula(p, r, k),
                    "p={p} r={r} k={k}"
                );
            }
        }
    }
    finish("09 p-adic computations", start, Duration::from_secs(10));
}

#[test]
fn criterion_10_padic_arithmetic() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1024);
    use rand::Rng;
    for case in 0..1000 {
        let p = [2u64, 3, 5][case % 3];
        let precision = rng.random_range(1..=6u32);
        let k: i64 = rng.random_range(-100_000..=100_000);
        let j: i64 = rng.random_range(-100_000..=100_000);
        let a = PadicApprox::from_int(k, p, precision).unwrap();
        let b = PadicApprox::from_int(j, p, precision).unwrap();

        // Coherence: residues agree downward.
        for r in 1..=precision as usize {
            for s in 1..=r {
                let pr = a.residue(r).unwrap();
                let ps = a.residue(s).unwrap();
                assert_eq!(pr % p.pow(s as u32), ps);
            }
        }
        // theta composition and homomorphism.
        let s = rng.random_range(1..=precision as usize);
        let t = rng.random_range(1..=s);
        assert_eq!(a.theta(s).unwrap().theta(t).unwrap(), a.theta(t).unwrap());
        assert_eq!(
            a.add(&b).unwrap().theta(s).unwrap(),
            a.theta(s).unwrap().add(&b.theta(s).unwrap()).unwrap()
        );
        // from_int is additive.
        assert_eq!(
            a.add(&b).unwrap(),
            PadicApprox::from_int(k.wrapping_add(j), p, precision).unwrap()
        );
        // Approximation sequence agrees to its level.
        for (idx, approx) in a.approx_sequence().iter().enumerate() {
            let level = idx + 1;
            assert_eq!(approx.theta(level).unwrap(), a.theta(level).unwrap());
        }
    }
    finish("10 p-adic arithmetic", start, Duration::from_secs(5));
}

#[test]
fn criterion_11_hecke_collapse() {
    let start = Instant::now();
    let p = params(1, 3);
    let one = YElement::one(p);
    for i in 1..3 {
        let g = YElement::g(p, i).unwrap();
        let poly = g
            .add(&one.scale(&LaurentU::u()))
            .unwrap()
            .mul(&g.sub(&one).unwrap())
            .unwrap();
        assert!(poly.is_zero(), "(g_{i} + u)(g_{i} - 1) != 0");
    }
    // The trace collapses to the two-rule system: no x variables appear
    // and the stripping rules hold with the single parameter z.
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let g_top = YElement::g(p, 2).unwrap();
    for _ in 0..50 {
        let a = random_subalgebra_element(p, &mut rng, 2);
        let b = random_subalgebra_element(p, &mut rng, 2);
        let lhs = markov_trace(&a.mul(&g_top).unwrap().mul(&b).unwrap());
        assert!(!lhs.uses_x());
        assert_eq!(
            lhs,
            TracePoly::z(1)
                .mul(&markov_trace(&a.mul(&b).unwrap()))
                .unwrap()
        );
        assert_eq!(
            markov_trace(&a.mul(&b).unwrap()),
            markov_trace(&b.mul(&a).unwrap())
        );
    }
    assert_eq!(markov_trace(&YElement::one(p)), TracePoly::one(1));
    finish("11 hecke collapse", start, Duration::from_secs(1));
}

#[test]
fn criterion_12_group_layer() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(96);
    for n in 1..=4usize {
        for _ in 0..50 {
            let w1 = random_word(n, 12, &mut rng);
            let w2 = random_word(n, 12, &mut rng);
            let w3 = random_word(n, 12, &mut rng);
            let (x, y, z) = (
                w1.split().unwrap(),
                w2.split().unwrap(),
                w3.split().unwrap(),
            );
            // Split multiplicativity.
            assert_eq!(
                x.multiply(&y).unwrap(),
                w1.concat(&w2).unwrap().split().unwrap()
            );
            // Associativity and inverses.
            assert_eq!(
                x.multiply(&y).unwrap().multiply(&z).unwrap(),
                x.multiply(&y.multiply(&z).unwrap()).unwrap()
            );
            assert!(x.multiply(&x.inverse()).unwrap().is_identity());
            // pi_s^r . id is a homomorphism on the modular groups.
            let xm = x.project_modular(4).unwrap();
            let ym = y.project_modular(4).unwrap();
            assert_eq!(
                xm.multiply(&ym).unwrap().pi_level_map(2, 1).unwrap(),
                xm.pi_level_map(2, 1)
                    .unwrap()
                    .multiply(&ym.pi_level_map(2, 1).unwrap())
                    .unwrap()
            );
        }
    }
    finish("12 group layer", start, Duration::from_secs(10));
}
