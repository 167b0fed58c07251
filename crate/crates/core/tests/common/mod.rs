//! Oracles and randomized suites shared by the acceptance and property tests.

#![allow(dead_code)]

use num_integer::Integer;
use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use galois_core::exact::Rational;
use galois_core::galois::galois_group;
use galois_core::irr::factor_q;
use galois_core::modp::{factor_over_fp, PrimeField, QuotientField};
use galois_core::permgrp::{generate_on, lattice, Permutation};
use galois_core::{Field, Poly, QPoly, RationalField, Ring};

pub const CASES: u32 = 256;

// ---------------------------------------------------------------------------
// Exhaustive integer-factor oracle

fn positive_divisors(n: i64) -> Vec<i64> {
    let n = n.abs();
    (1..=n).filter(|d| n % d == 0).collect()
}

// exact division of integer polynomials (low degree first)
fn divides(g: &[i64], f: &[i64]) -> bool {
    let mut r: Vec<i64> = f.to_vec();
    let dg = g.len() - 1;
    let lg = g[dg];
    while r.len() > dg {
        let lr = *r.last().unwrap();
        if lr % lg != 0 {
            return false;
        }
        let c = lr / lg;
        let shift = r.len() - 1 - dg;
        for (i, gi) in g.iter().enumerate() {
            r[shift + i] -= c * gi;
        }
        r.pop();
    }
    r.iter().all(|&x| x == 0)
}

/// Reducibility over ℚ of an integer polynomial of degree ≤ 4 by enumerating
/// every integer factor of degree 1 or 2 inside the Mignotte bound. The
/// input's content is ignored.
pub fn brute_force_reducible(f: &[i64]) -> bool {
    let mut f: Vec<i64> = f.to_vec();
    while f.last() == Some(&0) {
        f.pop();
    }
    let n = f.len() - 1;
    assert!((1..=4).contains(&n));
    let content = f.iter().fold(0i64, |g, &c| g.gcd(&c));
    let f: Vec<i64> = f.iter().map(|c| c / content).collect();
    if n == 1 {
        return false;
    }
    if f[0] == 0 {
        return true;
    }
    let norm = (f.iter().map(|c| c * c).sum::<i64>() as f64).sqrt();
    let bound = (2.0 * norm).ceil() as i64;
    let lcs = positive_divisors(f[n]);
    let consts: Vec<i64> = positive_divisors(f[0])
        .into_iter()
        .flat_map(|d| [d, -d])
        .collect();
    for &a in &lcs {
        for &b in &consts {
            if divides(&[b, a], &f) {
                return true;
            }
        }
    }
    if n == 4 {
        for &a in &lcs {
            for &c in &consts {
                for b in -bound..=bound {
                    if divides(&[c, b, a], &f) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

// ---------------------------------------------------------------------------
// Strategies

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

pub fn qpoly(max_deg: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(small_rational(), 0..=max_deg + 1).prop_map(QPoly::from_rationals)
}

pub fn nonzero_qpoly(max_deg: usize) -> impl Strategy<Value = QPoly> {
    qpoly(max_deg).prop_filter("nonzero", |f| !f.is_zero())
}

pub fn fp_poly(p: u64, max_deg: usize) -> impl Strategy<Value = Poly<PrimeField>> {
    prop::collection::vec(0..p, 0..=max_deg + 1)
        .prop_map(move |c| Poly::new(PrimeField::new(p).unwrap(), c))
}

pub fn small_prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5, 7, 11, 13])
}

/// A finite field `𝔽_p[x]/⟨g⟩` with `g` the first irreducible of degree `d`.
pub fn extension(p: u64, d: usize) -> QuotientField<PrimeField> {
    let base = PrimeField::new(p).unwrap();
    let g = galois_core::modp::find_irreducible(&base, d).unwrap();
    QuotientField::new(base, g).unwrap()
}

pub fn field_element(
    field: &QuotientField<PrimeField>,
) -> impl Strategy<Value = Poly<PrimeField>> + Clone {
    let base = *field.base();
    let d = field.degree();
    let p = base.modulus();
    prop::collection::vec(0..p, d).prop_map(move |c| Poly::new(base, c))
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    })
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

fn ring_axioms<R: Ring>(
    r: &R,
    a: &R::Element,
    b: &R::Element,
    c: &R::Element,
) -> Result<(), TestCaseError> {
    check(r.add(a, b) == r.add(b, a), || "add commutes".into())?;
    check(r.mul(a, b) == r.mul(b, a), || "mul commutes".into())?;
    check(r.add(&r.add(a, b), c) == r.add(a, &r.add(b, c)), || {
        "add associates".into()
    })?;
    check(r.mul(&r.mul(a, b), c) == r.mul(a, &r.mul(b, c)), || {
        "mul associates".into()
    })?;
    check(
        r.mul(a, &r.add(b, c)) == r.add(&r.mul(a, b), &r.mul(a, c)),
        || "distributive".into(),
    )?;
    check(
        r.add(a, &r.zero()) == *a && r.mul(a, &r.one()) == *a,
        || "identities".into(),
    )?;
    check(r.is_zero(&r.add(a, &r.neg(a))), || {
        "additive inverse".into()
    })
}

fn field_axioms<F: Field>(f: &F, a: &F::Element) -> Result<(), TestCaseError> {
    if f.is_zero(a) {
        return check(f.try_inverse(a).is_none(), || "zero has no inverse".into());
    }
    let inv = f
        .inverse(a)
        .map_err(|e| TestCaseError::fail(e.to_string()))?;
    check(f.is_one(&f.mul(a, &inv)), || "inverse".into())?;
    check(f.inverse(&inv).unwrap() == *a, || {
        "inverse round trip".into()
    })
}

// ---------------------------------------------------------------------------
// Property suites, each returning an error message on the first failure

fn run<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    runner(cases)
        .run(&strategy, test)
        .map_err(|e| e.to_string())
}

pub fn ring_and_field_axioms(cases: u32) -> Result<(), String> {
    run(
        cases,
        (small_rational(), small_rational(), small_rational()),
        |(a, b, c)| {
            ring_axioms(&RationalField, &a, &b, &c)?;
            field_axioms(&RationalField, &a)
        },
    )?;
    run(cases, (qpoly(5), qpoly(5), qpoly(5)), |(a, b, c)| {
        check(a.add(&b) == b.add(&a), || "poly add commutes".into())?;
        check(a.mul(&b) == b.mul(&a), || "poly mul commutes".into())?;
        check(a.mul(&b).mul(&c) == a.mul(&b.mul(&c)), || {
            "poly mul associates".into()
        })?;
        check(a.mul(&b.add(&c)) == a.mul(&b).add(&a.mul(&c)), || {
            "poly distributive".into()
        })?;
        if !a.is_zero() && !b.is_zero() {
            check(
                a.mul(&b).deg() == Some(a.deg().unwrap() + b.deg().unwrap()),
                || "degree of product".into(),
            )?;
        }
        check(a.sub(&a).is_zero(), || "f − f".into())
    })?;
    for (p, d) in [(2, 3), (3, 2), (5, 2), (7, 1), (2, 4)] {
        let f = extension(p, d);
        let e = field_element(&f);
        run(cases, (e.clone(), e.clone(), e), |(a, b, c)| {
            ring_axioms(&f, &a, &b, &c)?;
            field_axioms(&f, &a)
        })?;
    }
    Ok(())
}

pub fn divmod_round_trip(cases: u32) -> Result<(), String> {
    run(cases, (qpoly(7), nonzero_qpoly(4)), |(f, g)| {
        let (q, r) = f.divmod(&g).unwrap();
        check(q.mul(&g).add(&r) == f, || {
            format!("q·g + r ≠ f for {f} / {g}")
        })?;
        check(r.deg() < g.deg() || r.is_zero(), || {
            "remainder degree".into()
        })
    })?;
    run(cases, (small_prime(), any::<u64>()), |(p, seed)| {
        let base = PrimeField::new(p).unwrap();
        let f = Poly::new(base, (0..8).map(|i| (seed >> (i * 4)) % p).collect());
        let g = Poly::new(
            base,
            (0..3)
                .map(|i| (seed >> (i * 7 + 1)) % p)
                .chain([1])
                .collect(),
        );
        let (q, r) = f.divmod(&g).unwrap();
        check(q.mul(&g).add(&r) == f, || "q·g + r ≠ f over 𝔽_p".into())?;
        check(r.deg() < g.deg() || r.is_zero(), || {
            "remainder degree".into()
        })
    })
}

pub fn bezout_identity(cases: u32) -> Result<(), String> {
    let pairs =
        (qpoly(6), qpoly(6)).prop_filter("not both zero", |(f, g)| !(f.is_zero() && g.is_zero()));
    run(cases, pairs, |(f, g)| {
        let (d, a, b) = f.gcd_bezout(&g).unwrap();
        check(a.mul(&f).add(&b.mul(&g)) == d, || {
            format!("Bézout fails for {f}, {g}")
        })?;
        check(d.is_monic(), || "gcd monic".into())?;
        check(
            f.rem(&d).unwrap().is_zero() && g.rem(&d).unwrap().is_zero(),
            || "gcd divides".into(),
        )
    })?;
    run(cases, (fp_poly(7, 6), fp_poly(7, 6)), |(f, g)| {
        if f.is_zero() && g.is_zero() {
            return Ok(());
        }
        let (d, a, b) = f.gcd_bezout(&g).unwrap();
        check(a.mul(&f).add(&b.mul(&g)) == d, || "Bézout over 𝔽_7".into())
    })
}

pub fn frobenius(cases: u32) -> Result<(), String> {
    for (p, d) in [(2, 3), (3, 2), (3, 3), (5, 2), (7, 2), (2, 5)] {
        let f = extension(p, d);
        let e = field_element(&f);
        run(cases, (e.clone(), e), |(a, b)| {
            let lhs = f.pow(&f.add(&a, &b), p);
            let rhs = f.add(&f.pow(&a, p), &f.pow(&b, p));
            check(lhs == rhs, || format!("(a+b)^{p} in 𝔽_{p}^{d}"))
        })?;
    }
    Ok(())
}

fn product_fp(lc: u64, fs: &[(Poly<PrimeField>, usize)], base: PrimeField) -> Poly<PrimeField> {
    fs.iter().fold(Poly::constant(base, lc), |acc, (g, k)| {
        acc.mul(&g.pow(*k as u32))
    })
}

pub fn factor_remultiplication(cases: u32) -> Result<(), String> {
    run(cases, (small_prime(), fp_poly(13, 6)), |(p, f)| {
        let base = PrimeField::new(p).unwrap();
        let f = Poly::new(base, f.coeffs().iter().map(|c| c % p).collect());
        if f.is_zero() {
            return Ok(());
        }
        let (lc, fs) = factor_over_fp(&f).unwrap();
        check(product_fp(lc, &fs, base) == f, || {
            format!("𝔽_{p} factors of {f}")
        })?;
        for (g, _) in &fs {
            check(
                galois_core::modp::is_irreducible(g).unwrap() && g.is_monic(),
                || format!("factor {g} not monic irreducible"),
            )?;
        }
        Ok(())
    })?;
    let factors = prop::collection::vec(
        prop::collection::vec(-5i64..=5, 2..=3)
            .prop_filter("nonconstant", |c| *c.last().unwrap() != 0),
        1..=3,
    );
    run(cases, factors, |parts| {
        let f = parts.iter().fold(QPoly::from_ints(&[1]), |acc, c| {
            acc.mul(&QPoly::from_ints(c))
        });
        if f.deg().unwrap_or(0) > 5 || f.deg() == Some(0) {
            return Ok(());
        }
        let (content, fs) = factor_q(&f).unwrap();
        let back = fs
            .iter()
            .fold(QPoly::constant(RationalField, content), |acc, (g, k)| {
                acc.mul(&g.pow(*k as u32))
            });
        check(back == f, || format!("ℚ factors of {f}"))
    })
}

pub fn galois_scaling_invariance(cases: u32) -> Result<(), String> {
    let polys = (
        prop::collection::vec(-6i64..=6, 4),
        2usize..=5,
        small_rational(),
    )
        .prop_filter("nonzero scale", |(_, _, c)| !c.is_zero());
    run(cases, polys, |(low, n, c)| {
        let mut coeffs: Vec<i64> = low.into_iter().take(n).collect();
        coeffs.resize(n, 0);
        coeffs.push(1);
        let f = QPoly::from_ints(&coeffs);
        if !f.squarefree().unwrap() {
            return Ok(());
        }
        let g = f.scale(&c);
        let a = galois_group(&f);
        let b = galois_group(&g);
        check(a == b, || {
            format!("class of {f} changes under scaling by {c}")
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(&v).unwrap())
}

pub fn lagrange_divisibility(cases: u32) -> Result<(), String> {
    let gens = (2usize..=5).prop_flat_map(|n| prop::collection::vec(permutation(n), 1..=2));
    run(cases, gens, |gens| {
        let n = gens[0].degree();
        let g = generate_on(n, &gens).unwrap();
        if g.order() > galois_core::permgrp::LATTICE_LIMIT {
            return check(g.order_divides_factorial(), || "|G| divides n!".into());
        }
        let lat = lattice(&g).unwrap();
        for h in &lat.subgroups {
            check(g.order() % h.order() == 0, || {
                format!("|H| = {} does not divide |G| = {}", h.order(), g.order())
            })?;
        }
        Ok(())
    })
}
