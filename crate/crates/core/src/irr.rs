//! Irreducibility over ℚ: rational roots, Eisenstein with shifts, reduction
//! modulo primes and a bounded quadratic-factor search, combined into a
//! certificate-producing dispatcher that is complete up to degree 5.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{divisors, prime_factors, BigInt, Rational};
use crate::modp::{self, PrimeField};
use crate::poly::{Poly, QPoly};
use crate::ring::Ring;

/// Shifts tried by [`is_irreducible_q`] for Eisenstein's criterion.
pub const EISENSTEIN_SHIFT: i64 = 10;

/// Largest prime tried by the reduction test in [`is_irreducible_q`].
pub const REDUCTION_PRIME_BOUND: u64 = 97;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Irreducible,
    Reducible,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Irreducible => "irreducible",
            Verdict::Reducible => "reducible",
            Verdict::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `f(x + shift)` is Eisenstein at `p`.
    EisensteinPrime {
        p: BigInt,
        shift: i64,
    },
    /// `f mod p` keeps its degree and is irreducible over `𝔽_p`.
    ReductionPrime(u64),
    RationalRoot(Rational),
    /// Primitive integer factors whose product is the primitive part of the input.
    FactorPair(QPoly, QPoly),
    /// Every applicable search ran without finding a factor.
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibilityCertificate {
    pub verdict: Verdict,
    pub witness: Witness,
}

impl IrreducibilityCertificate {
    fn new(verdict: Verdict, witness: Witness) -> Self {
        IrreducibilityCertificate { verdict, witness }
    }

    pub fn is_irreducible(&self) -> bool {
        self.verdict == Verdict::Irreducible
    }
}

// primes for the modular pre-filter in `rational_roots`
const ROOT_FILTER_PRIMES: [u64; 3] = [10007, 10009, 10037];

// candidate count above which the pre-filter pays for itself
const ROOT_FILTER_MIN: usize = 2000;

/// All rational roots, ascending. Candidates are `±m/n` with `m | a_0` and
/// `n | a_r` after clearing denominators; a candidate is evaluated exactly
/// only if it is a root modulo a few primes. Fails with
/// [`Error::BoundExceeded`] when the end coefficients cannot be factored.
pub fn rational_roots(f: &QPoly) -> Result<Vec<Rational>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (_, c) = f.primitive_integer_part();
    let low = c.iter().position(|a| !a.is_zero()).unwrap();
    let mut roots = BTreeSet::new();
    if low > 0 {
        roots.insert(Rational::zero());
    }
    let c = &c[low..];
    if c.len() > 1 {
        let g = Poly::from_bigints(c);
        let nums = divisors(&c[0])?;
        let dens = divisors(c.last().unwrap())?;
        let filters: Vec<(PrimeField, Vec<bool>)> = if nums.len() * dens.len() > ROOT_FILTER_MIN {
            ROOT_FILTER_PRIMES
                .iter()
                .map(|&p| {
                    let field = PrimeField::new(p).expect("prime");
                    let fp = reduce_mod_p(c, field);
                    (field, (0..p).map(|x| fp.evaluate(&x) == 0).collect())
                })
                .collect()
        } else {
            Vec::new()
        };
        let residues = |v: &BigInt| -> Vec<u64> {
            filters
                .iter()
                .map(|(f, _)| v.mod_floor(&BigInt::from(f.modulus())).to_u64().unwrap())
                .collect()
        };
        // n with the inverses of its residues, 0 where p | n
        let dens: Vec<(BigInt, Vec<u64>)> = dens
            .into_iter()
            .map(|n| {
                let inv = residues(&n)
                    .into_iter()
                    .zip(&filters)
                    .map(|(r, (field, _))| field.try_inverse(&r).unwrap_or(0))
                    .collect();
                (n, inv)
            })
            .collect();
        for m in nums {
            for s in [BigInt::one(), -BigInt::one()] {
                let sm = &s * &m;
                let mr = residues(&sm);
                for (n, ninv) in &dens {
                    let passes = filters.iter().enumerate().all(|(i, (field, is_root))| {
                        ninv[i] == 0 || is_root[field.mul(&mr[i], &ninv[i]) as usize]
                    });
                    if !passes {
                        continue;
                    }
                    let r = Rational::new(sm.clone(), n.clone());
                    if g.evaluate(&r).is_zero() {
                        roots.insert(r);
                    }
                }
            }
        }
    }
    Ok(roots.into_iter().collect())
}

/// Checks Eisenstein's criterion at `p` for an integer coefficient list.
pub fn satisfies_eisenstein(c: &[BigInt], p: &BigInt) -> bool {
    let n = c.len() - 1;
    if n == 0 {
        return false;
    }
    let p2 = p * p;
    c[..n].iter().all(|a| a.is_multiple_of(p))
        && !c[n].is_multiple_of(p)
        && !c[0].is_multiple_of(&p2)
}

/// Coefficients of `f(x + a)` by repeated synthetic division.
fn taylor_shift(c: &[BigInt], a: &BigInt) -> Vec<BigInt> {
    let mut c = c.to_vec();
    let n = c.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let t = &c[j + 1] * a;
            c[j] += t;
        }
    }
    c
}

fn shift_order(shifts: std::ops::RangeInclusive<i64>) -> Vec<i64> {
    let mut v: Vec<i64> = shifts.collect();
    v.sort_by_key(|&a| (a.abs(), a < 0));
    v
}

/// Searches for a shift `a` and prime `p` such that `f(x + a)` is Eisenstein
/// at `p`. Shifts are tried in the order `0, 1, −1, 2, −2, …`; primes are the
/// prime divisors of the gcd of the non-leading coefficients, ascending.
pub fn eisenstein(f: &QPoly, shifts: std::ops::RangeInclusive<i64>) -> Option<(BigInt, i64)> {
    if f.deg()? < 1 {
        return None;
    }
    let (_, prim) = f.primitive_integer_part();
    for a in shift_order(shifts) {
        let c = taylor_shift(&prim, &BigInt::from(a));
        let n = c.len() - 1;
        let common = c[..n].iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if common.is_zero() || common.is_one() {
            continue;
        }
        let Some(primes) = prime_factors(&common, 1_000_000) else {
            continue;
        };
        if let Some(p) = primes.into_iter().find(|p| satisfies_eisenstein(&c, p)) {
            return Some((p, a));
        }
    }
    None
}

/// Reduces integer coefficients modulo `p`.
pub fn reduce_mod_p(c: &[BigInt], field: PrimeField) -> Poly<PrimeField> {
    let p = BigInt::from(field.modulus());
    Poly::new(
        field,
        c.iter()
            .map(|a| a.mod_floor(&p).to_u64().unwrap())
            .collect(),
    )
}

/// First prime in `primes` at which the primitive part of `f` keeps its degree
/// and becomes irreducible over `𝔽_p`, decided by distinct-degree
/// factorisation.
pub fn reduction_test(f: &QPoly, primes: &[u64]) -> Option<u64> {
    let n = f.deg()?;
    if n < 1 {
        return None;
    }
    let (_, c) = f.primitive_integer_part();
    primes.iter().copied().find(|&p| {
        let Ok(field) = PrimeField::new(p) else {
            return false;
        };
        let fp = reduce_mod_p(&c, field);
        fp.deg() == Some(n) && modp::is_irreducible_ddf(&fp).unwrap_or(false)
    })
}

fn eval_int(c: &[BigInt], x: &BigInt) -> BigInt {
    c.iter().rev().fold(BigInt::zero(), |acc, a| acc * x + a)
}

fn signed_divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    Ok(divisors(n)?
        .into_iter()
        .flat_map(|d| [d.clone(), -d])
        .collect())
}

/// Monic integer division; `None` unless `h` divides `g` exactly.
fn monic_exact_div(g: &[BigInt], h: &[BigInt]) -> Option<Vec<BigInt>> {
    let dh = h.len() - 1;
    let mut r = g.to_vec();
    let mut q = vec![BigInt::zero(); g.len() - dh];
    for i in (0..q.len()).rev() {
        let c = r[i + dh].clone();
        for (j, hj) in h.iter().enumerate() {
            r[i + j] -= &c * hj;
        }
        q[i] = c;
    }
    r[..dh].iter().all(|a| a.is_zero()).then_some(q)
}

/// Searches for a quadratic factor of a primitive integer polynomial without
/// rational roots. The polynomial is made monic by `y = a_n·x`; a monic
/// integer factor `y² + u·y + v` then satisfies `v | G(0)`,
/// `1 + u + v | G(1)`, `1 − u + v | G(−1)` and the Cauchy bounds
/// `|u| ≤ 2B`, `|v| ≤ B²`. Fails with [`Error::BoundExceeded`] when `G(0)`
/// or `G(1)` cannot be factored.
pub fn quadratic_factor(c: &[BigInt]) -> Result<Option<(QPoly, QPoly)>> {
    let n = c.len() - 1;
    if n < 4 {
        return Ok(None);
    }
    let an = &c[n];
    let mut g: Vec<BigInt> = (0..n)
        .map(|i| &c[i] * num_traits::pow(an.clone(), n - 1 - i))
        .collect();
    g.push(BigInt::one());
    let bound = BigInt::one() + g[..n].iter().map(|a| a.abs()).max().unwrap();
    let u_max = &bound * 2;
    let v_max = &bound * &bound;
    let (g0, g1, gm1) = (
        g[0].clone(),
        eval_int(&g, &BigInt::one()),
        eval_int(&g, &-BigInt::one()),
    );
    if g0.is_zero() || g1.is_zero() || gm1.is_zero() {
        return Ok(None);
    }
    let d1 = signed_divisors(&g1)?;
    for v in signed_divisors(&g0)?
        .into_iter()
        .filter(|v| v.abs() <= v_max)
    {
        for d in &d1 {
            let u = d - BigInt::one() - &v;
            if u.abs() > u_max {
                continue;
            }
            let hm1 = BigInt::one() - &u + &v;
            if hm1.is_zero() || !gm1.is_multiple_of(&hm1) {
                continue;
            }
            let h = [v.clone(), u.clone(), BigInt::one()];
            if monic_exact_div(&g, &h).is_none() {
                continue;
            }
            // y = a_n x maps y² + uy + v to a_n² x² + u a_n x + v
            let back = Poly::from_bigints(&[v.clone(), &u * an, an * an]).primitive_part();
            let f = Poly::from_bigints(c);
            let (q, r) = f.divmod(&back).expect("nonzero divisor");
            debug_assert!(r.is_zero());
            return Ok(Some((back, q.primitive_part())));
        }
    }
    Ok(None)
}

/// Irreducibility over ℚ with a certificate. Complete for degrees 1 to 5;
/// higher degrees may come back `Unknown`.
pub fn is_irreducible_q(f: &QPoly) -> Result<IrreducibilityCertificate> {
    let n = match f.deg() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(n) => n,
    };
    use Verdict::*;
    if n == 1 {
        return Ok(IrreducibilityCertificate::new(
            Irreducible,
            Witness::Exhausted,
        ));
    }
    let (_, c) = f.primitive_integer_part();
    let prim = Poly::from_bigints(&c);
    // huge end coefficients leave the root test undecided; the later tests
    // can still certify irreducibility
    let roots_searched = match rational_roots(&prim) {
        Ok(roots) => {
            if let Some(r) = roots.into_iter().next() {
                return Ok(IrreducibilityCertificate::new(
                    Reducible,
                    Witness::RationalRoot(r),
                ));
            }
            true
        }
        Err(Error::BoundExceeded(_)) => false,
        Err(e) => return Err(e),
    };
    if let Some((p, shift)) = eisenstein(&prim, -EISENSTEIN_SHIFT..=EISENSTEIN_SHIFT) {
        return Ok(IrreducibilityCertificate::new(
            Irreducible,
            Witness::EisensteinPrime { p, shift },
        ));
    }
    let primes: Vec<u64> = primal::Primes::all()
        .take_while(|&p| p as u64 <= REDUCTION_PRIME_BOUND)
        .map(|p| p as u64)
        .collect();
    if let Some(p) = reduction_test(&prim, &primes) {
        return Ok(IrreducibilityCertificate::new(
            Irreducible,
            Witness::ReductionPrime(p),
        ));
    }
    if !roots_searched || n > 5 {
        return Ok(IrreducibilityCertificate::new(Unknown, Witness::Exhausted));
    }
    if n <= 3 {
        return Ok(IrreducibilityCertificate::new(
            Irreducible,
            Witness::Exhausted,
        ));
    }
    Ok(match quadratic_factor(&c) {
        Ok(Some((g, h))) => IrreducibilityCertificate::new(Reducible, Witness::FactorPair(g, h)),
        Ok(None) => IrreducibilityCertificate::new(Irreducible, Witness::Exhausted),
        Err(Error::BoundExceeded(_)) => IrreducibilityCertificate::new(Unknown, Witness::Exhausted),
        Err(e) => return Err(e),
    })
}

/// Factorisation over ℚ for degree ≤ 5 (or any degree whose pieces the
/// dispatcher can decide): `f = content · Π gᵢ^{eᵢ}` with each `gᵢ` a
/// primitive integer irreducible with positive leading coefficient. Factors
/// are sorted by degree, then by coefficients.
pub fn factor_q(f: &QPoly) -> Result<(Rational, Vec<(QPoly, usize)>)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (content, c) = f.primitive_integer_part();
    let mut stack = vec![Poly::from_bigints(&c)];
    let mut irreducibles: Vec<QPoly> = Vec::new();
    while let Some(p) = stack.pop() {
        if p.deg() == Some(0) {
            continue;
        }
        let cert = is_irreducible_q(&p)?;
        match cert.witness {
            _ if cert.verdict == Verdict::Irreducible => irreducibles.push(p),
            Witness::RationalRoot(r) => {
                let lin = Poly::from_bigints(&[-r.numer().clone(), r.denom().clone()]);
                let (q, _) = p.divmod(&lin)?;
                irreducibles.push(lin);
                stack.push(q.primitive_part());
            }
            Witness::FactorPair(g, h) => {
                stack.push(g);
                stack.push(h);
            }
            _ => {
                return Err(match p.deg().unwrap() {
                    n if n > 5 => Error::UnsupportedDegree(n),
                    _ => Error::BoundExceeded(format!("coefficients of {p} too large to factor")),
                })
            }
        }
    }
    irreducibles.sort_by(|a, b| {
        a.deg()
            .cmp(&b.deg())
            .then_with(|| a.integer_coeffs().cmp(&b.integer_coeffs()))
    });
    let mut out: Vec<(QPoly, usize)> = Vec::new();
    for g in irreducibles {
        match out.last_mut() {
            Some((h, k)) if *h == g => *k += 1,
            _ => out.push((g, 1)),
        }
    }
    Ok((content, out))
}
