//! Prime fields, modular rings and quotient fields `F[x]/⟨f⟩`, with the
//! brute-force factorisation and search routines that work over any finite
//! field (including towers of quotient fields).

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::is_prime;
use crate::poly::Poly;
use crate::ring::{Field, FiniteField, FiniteRing, Ring};

/// Enumeration guard for the brute-force searches.
pub const SEARCH_LIMIT: u64 = 10_000_000;

/// Largest field for which full tables are produced.
pub const TABLE_LIMIT: u64 = 4096;

/// Largest field searched for a multiplicative generator.
pub const GENERATOR_LIMIT: u64 = 1_000_000;

/// `𝔽_p`, elements `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) || p >= 1 << 32 {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce_i128(&self, v: i128) -> u64 {
        v.rem_euclid(self.p as i128) as u64
    }
}

impl Ring for PrimeField {
    type Element = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i128(n as i128)
    }
    fn try_inverse(&self, a: &u64) -> Option<u64> {
        mod_inverse(*a, self.p)
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn format_element(&self, a: &u64) -> String {
        a.to_string()
    }
}

impl Field for PrimeField {}

impl FiniteRing for PrimeField {
    fn order(&self) -> u64 {
        self.p
    }
    fn element(&self, index: u64) -> u64 {
        index
    }
    fn index_of(&self, a: &u64) -> u64 {
        *a
    }
}

/// `ℤ/nℤ` for arbitrary `n ≥ 2`. Not assumed to be a field: inverses exist
/// only for units.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModRing {
    n: u64,
}

impl ModRing {
    pub fn new(n: u64) -> Result<Self> {
        if !(2..1 << 32).contains(&n) {
            return Err(Error::InvalidArgument(format!("modulus {n} out of range")));
        }
        Ok(ModRing { n })
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }
}

impl Ring for ModRing {
    type Element = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.n
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.n - a) % self.n
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.n
    }
    fn from_i64(&self, v: i64) -> u64 {
        (v as i128).rem_euclid(self.n as i128) as u64
    }
    fn try_inverse(&self, a: &u64) -> Option<u64> {
        mod_inverse(*a, self.n)
    }
    fn characteristic(&self) -> u64 {
        self.n
    }
    fn format_element(&self, a: &u64) -> String {
        a.to_string()
    }
}

impl FiniteRing for ModRing {
    fn order(&self) -> u64 {
        self.n
    }
    fn element(&self, index: u64) -> u64 {
        index
    }
    fn index_of(&self, a: &u64) -> u64 {
        *a
    }
}

fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    let (mut r0, mut r1) = (n as i128, (a % n) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0 == 1).then(|| t0.rem_euclid(n as i128) as u64)
}

struct QuotientInner<F: Ring> {
    base: F,
    modulus: Poly<F>,
    var: String,
}

/// `F[x]/⟨f⟩` for a monic modulus `f`. Elements are the reduced
/// representatives of degree below `deg f`.
pub struct QuotientField<F: Ring> {
    inner: Arc<QuotientInner<F>>,
}

impl<F: Ring> Clone for QuotientField<F> {
    fn clone(&self) -> Self {
        QuotientField {
            inner: Arc::clone(&self.inner),
        }
    }
}

impl<F: Ring> PartialEq for QuotientField<F> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.base == other.inner.base && self.inner.modulus == other.inner.modulus)
    }
}

impl<F: Ring> fmt::Debug for QuotientField<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QuotientField")
            .field("base", &self.inner.base)
            .field("modulus", &self.inner.modulus.to_string())
            .finish()
    }
}

impl<F: Field> QuotientField<F> {
    /// Builds the quotient without checking irreducibility. The modulus is
    /// made monic and must have degree at least 1.
    pub fn new_unchecked(base: F, modulus: Poly<F>, var: &str) -> Result<Self> {
        match modulus.deg() {
            Some(d) if d >= 1 => {}
            _ => return Err(Error::ConstantPolynomial),
        }
        let modulus = modulus.monic();
        Ok(QuotientField {
            inner: Arc::new(QuotientInner {
                base,
                modulus,
                var: var.to_string(),
            }),
        })
    }

    pub fn base(&self) -> &F {
        &self.inner.base
    }

    pub fn modulus(&self) -> &Poly<F> {
        &self.inner.modulus
    }

    pub fn var(&self) -> &str {
        &self.inner.var
    }

    /// Degree of the extension over the base.
    pub fn degree(&self) -> usize {
        self.inner.modulus.deg().unwrap()
    }

    pub fn reduce(&self, rep: &Poly<F>) -> Poly<F> {
        rep.rem(&self.inner.modulus).expect("monic modulus")
    }

    /// The class of `x`.
    pub fn generator(&self) -> QFElement<F> {
        self.element_of(Poly::x(self.inner.base.clone()))
    }

    pub fn element_of(&self, rep: Poly<F>) -> QFElement<F> {
        QFElement {
            rep: self.reduce(&rep),
            field: self.clone(),
        }
    }

    pub fn embed(&self, c: F::Element) -> QFElement<F> {
        self.element_of(Poly::constant(self.inner.base.clone(), c))
    }

    /// Coordinates on the basis `1, α, …, α^{d−1}`.
    pub fn coordinates(&self, rep: &Poly<F>) -> Vec<F::Element> {
        (0..self.degree()).map(|i| rep.coeff(i)).collect()
    }
}

impl<F: FiniteField> QuotientField<F> {
    /// Quotient field over a finite base; rejects reducible moduli.
    pub fn new(base: F, modulus: Poly<F>) -> Result<Self> {
        Self::with_var(base, modulus, "α")
    }

    pub fn with_var(base: F, modulus: Poly<F>, var: &str) -> Result<Self> {
        if !is_irreducible(&modulus)? {
            return Err(Error::ReducibleModulus(modulus.to_string()));
        }
        Self::new_unchecked(base, modulus, var)
    }
}

impl<F: Field> Ring for QuotientField<F> {
    type Element = Poly<F>;

    fn zero(&self) -> Poly<F> {
        Poly::zero(self.inner.base.clone())
    }
    fn one(&self) -> Poly<F> {
        Poly::one(self.inner.base.clone())
    }
    fn add(&self, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        a.add(b)
    }
    fn neg(&self, a: &Poly<F>) -> Poly<F> {
        a.neg()
    }
    fn sub(&self, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        a.sub(b)
    }
    fn mul(&self, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        self.reduce(&a.mul(b))
    }
    fn is_zero(&self, a: &Poly<F>) -> bool {
        a.is_zero()
    }
    fn from_i64(&self, n: i64) -> Poly<F> {
        Poly::constant(self.inner.base.clone(), self.inner.base.from_i64(n))
    }
    fn try_inverse(&self, a: &Poly<F>) -> Option<Poly<F>> {
        if a.is_zero() {
            return None;
        }
        let (d, s, _) = a.gcd_bezout(&self.inner.modulus).ok()?;
        d.is_constant().then(|| self.reduce(&s))
    }
    fn characteristic(&self) -> u64 {
        self.inner.base.characteristic()
    }
    fn format_element(&self, a: &Poly<F>) -> String {
        a.format_with(&self.inner.var).replace(' ', "")
    }
}

impl<F: Field> Field for QuotientField<F> {}

impl<F: FiniteField> FiniteRing for QuotientField<F> {
    fn order(&self) -> u64 {
        self.inner.base.order().pow(self.degree() as u32)
    }

    fn element(&self, mut index: u64) -> Poly<F> {
        let q = self.inner.base.order();
        let cs = (0..self.degree())
            .map(|_| {
                let c = self.inner.base.element(index % q);
                index /= q;
                c
            })
            .collect();
        Poly::new(self.inner.base.clone(), cs)
    }

    fn index_of(&self, a: &Poly<F>) -> u64 {
        let q = self.inner.base.order();
        a.coeffs()
            .iter()
            .rev()
            .fold(0, |acc, c| acc * q + self.inner.base.index_of(c))
    }
}

/// An element of a quotient field paired with the field it lives in.
#[derive(Clone, Debug, PartialEq)]
pub struct QFElement<F: Field> {
    field: QuotientField<F>,
    rep: Poly<F>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl<F: Field> QFElement<F> {
    pub fn field(&self) -> &QuotientField<F> {
        &self.field
    }

    pub fn rep(&self) -> &Poly<F> {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn arith(&self, other: &Self, op: FieldOp) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let f = &self.field;
        let rep = match op {
            FieldOp::Add => f.add(&self.rep, &other.rep),
            FieldOp::Sub => f.sub(&self.rep, &other.rep),
            FieldOp::Mul => f.mul(&self.rep, &other.rep),
            FieldOp::Div => f.mul(&self.rep, &f.inverse(&other.rep)?),
        };
        Ok(QFElement {
            field: f.clone(),
            rep,
        })
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(QFElement {
            rep: self.field.inverse(&self.rep)?,
            field: self.field.clone(),
        })
    }

    pub fn pow(&self, e: u64) -> Self {
        QFElement {
            rep: self.field.pow(&self.rep, e),
            field: self.field.clone(),
        }
    }
}

impl<F: Field> fmt::Display for QFElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format_element(&self.rep))
    }
}

/// Monic polynomial of degree `d` with index `idx`: the base-`q` digits of
/// `idx` are the coefficients of `x^0, …, x^{d−1}`. Increasing `idx` gives the
/// lexicographic order used by all searches here.
pub fn monic_with_index<F: FiniteRing>(base: &F, d: usize, mut idx: u64) -> Poly<F> {
    let q = base.order();
    let mut cs = Vec::with_capacity(d + 1);
    for _ in 0..d {
        cs.push(base.element(idx % q));
        idx /= q;
    }
    cs.push(base.one());
    Poly::new(base.clone(), cs)
}

fn checked_count(q: u64, d: usize) -> Option<u64> {
    q.checked_pow(d as u32).filter(|&n| n <= SEARCH_LIMIT)
}

fn search_guard(q: u64, deg: usize) -> Result<()> {
    let half = deg.div_ceil(2);
    checked_count(q, half)
        .map(|_| ())
        .ok_or_else(|| Error::BoundExceeded(format!("{q}^{half} candidates exceed {SEARCH_LIMIT}")))
}

/// Irreducibility over a finite field. Degree ≤ 3 is decided by root search;
/// higher degrees by trial division by monic polynomials of degree at most
/// `deg/2`, smallest degree first.
pub fn is_irreducible<F: FiniteField>(f: &Poly<F>) -> Result<bool> {
    let n = match f.deg() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Ok(false),
        Some(1) => return Ok(true),
        Some(n) => n,
    };
    let base = f.ring();
    if n <= 3 {
        return Ok(!base.elements().iter().any(|a| base.is_zero(&f.evaluate(a))));
    }
    search_guard(base.order(), n)?;
    for d in 1..=n / 2 {
        let count = base.order().pow(d as u32);
        for idx in 0..count {
            if f.is_divisible_by(&monic_with_index(base, d, idx))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A factor with its multiplicity.
pub type Factor<F> = (Poly<F>, usize);

/// Complete factorisation into monic irreducibles by trial division.
/// Returns the leading coefficient and the factors, ordered by degree and
/// then lexicographically.
pub fn factor_over_fp<F: FiniteField>(f: &Poly<F>) -> Result<(F::Element, Vec<Factor<F>>)> {
    let lc = f.leading().cloned().ok_or(Error::ZeroPolynomial)?;
    let base = f.ring();
    let n = f.deg().unwrap();
    search_guard(base.order(), n)?;
    let mut rest = f.monic();
    let mut factors = Vec::new();
    let mut d = 1;
    while 2 * d <= rest.deg().unwrap() {
        let count = base.order().pow(d as u32);
        for idx in 0..count {
            let h = monic_with_index(base, d, idx);
            let mut mult = 0;
            loop {
                let (q, r) = rest.divmod(&h)?;
                if !r.is_zero() {
                    break;
                }
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                factors.push((h, mult));
            }
            if 2 * d > rest.deg().unwrap() {
                break;
            }
        }
        d += 1;
    }
    if rest.deg().unwrap() >= 1 {
        factors.push((rest, 1));
    }
    Ok((lc, factors))
}

/// First monic irreducible of degree `d` in lexicographic order.
pub fn find_irreducible<F: FiniteField>(base: &F, d: usize) -> Result<Poly<F>> {
    if d == 0 {
        return Err(Error::InvalidArgument("degree must be positive".into()));
    }
    let count = checked_count(base.order(), d).ok_or_else(|| {
        Error::BoundExceeded(format!(
            "{}^{d} candidates exceed {SEARCH_LIMIT}",
            base.order()
        ))
    })?;
    for idx in 0..count {
        let f = monic_with_index(base, d, idx);
        if is_irreducible(&f)? {
            return Ok(f);
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// All monic irreducibles of degree `d`, in lexicographic order.
pub fn irreducibles_of_degree<F: FiniteField>(base: &F, d: usize) -> Result<Vec<Poly<F>>> {
    let count = checked_count(base.order(), d)
        .ok_or_else(|| Error::BoundExceeded(format!("{}^{d} candidates", base.order())))?;
    let mut out = Vec::new();
    for idx in 0..count {
        let f = monic_with_index(base, d, idx);
        if is_irreducible(&f)? {
            out.push(f);
        }
    }
    Ok(out)
}

/// Full `q × q` multiplication table, rows and columns in index order.
pub fn multiplication_table<R: FiniteRing>(ring: &R) -> Result<Vec<Vec<R::Element>>> {
    let q = ring.order();
    if q > TABLE_LIMIT {
        return Err(Error::BoundExceeded(format!(
            "order {q} exceeds {TABLE_LIMIT}"
        )));
    }
    let els = ring.elements();
    Ok(els
        .iter()
        .map(|a| els.iter().map(|b| ring.mul(a, b)).collect())
        .collect())
}

pub fn addition_table<R: FiniteRing>(ring: &R) -> Result<Vec<Vec<R::Element>>> {
    let q = ring.order();
    if q > TABLE_LIMIT {
        return Err(Error::BoundExceeded(format!(
            "order {q} exceeds {TABLE_LIMIT}"
        )));
    }
    let els = ring.elements();
    Ok(els
        .iter()
        .map(|a| els.iter().map(|b| ring.add(a, b)).collect())
        .collect())
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Multiplicative order of a nonzero element of a finite field.
pub fn multiplicative_order<F: FiniteField>(field: &F, a: &F::Element) -> u64 {
    let mut order = field.order() - 1;
    for r in distinct_prime_factors(order) {
        while order.is_multiple_of(r) && field.is_one(&field.pow(a, order / r)) {
            order /= r;
        }
    }
    order
}

/// First element (in index order) of multiplicative order `q − 1`.
pub fn multiplicative_generator<F: FiniteField>(field: &F) -> Result<F::Element> {
    let q = field.order();
    if q > GENERATOR_LIMIT {
        return Err(Error::BoundExceeded(format!(
            "order {q} exceeds {GENERATOR_LIMIT}"
        )));
    }
    let primes = distinct_prime_factors(q - 1);
    for idx in 1..q {
        let a = field.element(idx);
        if primes
            .iter()
            .all(|r| !field.is_one(&field.pow(&a, (q - 1) / r)))
        {
            return Ok(a);
        }
    }
    unreachable!("the multiplicative group of a finite field is cyclic")
}

/// Checks that every element is a root of `x^q − x` and that `x^q − x` is
/// squarefree over the field.
pub fn verify_xq_minus_x<F: FiniteField>(field: &F) -> Result<bool> {
    let q = field.order();
    if q > TABLE_LIMIT {
        return Err(Error::BoundExceeded(format!(
            "order {q} exceeds {TABLE_LIMIT}"
        )));
    }
    let all_roots = field.elements().iter().all(|a| field.pow(a, q) == *a);
    let xq = Poly::monomial(field.clone(), field.one(), q as usize);
    let f = xq.sub(&Poly::x(field.clone()));
    Ok(all_roots && f.squarefree()?)
}

/// `base^e mod m`.
pub fn pow_mod<F: Field>(base: &Poly<F>, mut e: u64, m: &Poly<F>) -> Result<Poly<F>> {
    let mut acc = Poly::one(base.ring().clone()).rem(m)?;
    let mut b = base.rem(m)?;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&b).rem(m)?;
        }
        e >>= 1;
        if e > 0 {
            b = b.mul(&b).rem(m)?;
        }
    }
    Ok(acc)
}

/// Irreducibility over a prime field by distinct-degree factorisation; no
/// search bound applies.
pub fn is_irreducible_ddf(f: &Poly<PrimeField>) -> Result<bool> {
    let n = match f.deg() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Ok(false),
        Some(n) => n,
    };
    if !f.squarefree()? {
        return Ok(false);
    }
    Ok(factor_degree_pattern(f)? == [n])
}

/// Degrees of the irreducible factors of a squarefree polynomial over `𝔽_p`,
/// ascending, by distinct-degree factorisation.
pub fn factor_degree_pattern(f: &Poly<PrimeField>) -> Result<Vec<usize>> {
    let n = f.deg().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    if !f.squarefree()? {
        return Err(Error::RepeatedRoot);
    }
    let p = f.ring().modulus();
    let x = Poly::x(*f.ring());
    let mut rest = f.monic();
    let mut h = x.clone();
    let mut pattern = Vec::new();
    let mut d = 1;
    while rest.deg().unwrap() >= 2 * d {
        h = pow_mod(&h, p, &rest)?;
        let g = h.sub(&x).gcd(&rest)?;
        let gd = g.deg().unwrap();
        if gd > 0 {
            pattern.extend(std::iter::repeat_n(d, gd / d));
            rest = rest.divmod(&g)?.0;
            h = h.rem(&rest)?;
        }
        d += 1;
    }
    if let Some(r) = rest.deg().filter(|&r| r > 0) {
        pattern.push(r);
    }
    pattern.sort_unstable();
    Ok(pattern)
}
