//! Dense univariate polynomials over a [`Ring`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{BigInt, Rational};
use crate::ring::{Field, RationalField, Ring};

/// Degree of a polynomial; the zero polynomial has degree −∞.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    MinusInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::MinusInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

/// `coeffs[i]` is the coefficient of `x^i`. There are never trailing zeros.
#[derive(Clone, Debug)]
pub struct Poly<R: Ring> {
    ring: R,
    coeffs: Vec<R::Element>,
}

pub type QPoly = Poly<RationalField>;

impl<R: Ring> PartialEq for Poly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.ring == other.ring
    }
}

impl<R: Ring> Eq for Poly<R> {}

impl<R: Ring> Poly<R> {
    pub fn new(ring: R, coeffs: Vec<R::Element>) -> Self {
        let mut p = Poly { ring, coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while let Some(c) = self.coeffs.last() {
            if self.ring.is_zero(c) {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    pub fn zero(ring: R) -> Self {
        Poly {
            ring,
            coeffs: Vec::new(),
        }
    }

    pub fn one(ring: R) -> Self {
        let one = ring.one();
        Self::new(ring, vec![one])
    }

    pub fn constant(ring: R, c: R::Element) -> Self {
        Self::new(ring, vec![c])
    }

    /// `c·x^k`.
    pub fn monomial(ring: R, c: R::Element, k: usize) -> Self {
        let mut coeffs = vec![ring.zero(); k + 1];
        coeffs[k] = c;
        Self::new(ring, coeffs)
    }

    pub fn x(ring: R) -> Self {
        let one = ring.one();
        Self::monomial(ring, one, 1)
    }

    /// Coefficients given as small integers, lowest degree first.
    pub fn from_i64s(ring: R, coeffs: &[i64]) -> Self {
        let cs = coeffs.iter().map(|&c| ring.from_i64(c)).collect();
        Self::new(ring, cs)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn coeffs(&self) -> &[R::Element] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R::Element> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R::Element {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::MinusInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    /// Degree, with the zero polynomial mapped to `None`.
    pub fn deg(&self) -> Option<usize> {
        self.degree().finite()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&R::Element> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| self.ring.is_one(c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let cs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => self.ring.add(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::new(self.ring.clone(), cs)
    }

    pub fn neg(&self) -> Self {
        let cs = self.coeffs.iter().map(|c| self.ring.neg(c)).collect();
        Self::new(self.ring.clone(), cs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ring.clone());
        }
        let mut cs = vec![self.ring.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if self.ring.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = self.ring.mul(a, b);
                cs[i + j] = self.ring.add(&cs[i + j], &t);
            }
        }
        Self::new(self.ring.clone(), cs)
    }

    pub fn scale(&self, c: &R::Element) -> Self {
        let cs = self.coeffs.iter().map(|a| self.ring.mul(a, c)).collect();
        Self::new(self.ring.clone(), cs)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one(self.ring.clone());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Division with remainder: `self = q·g + r` with `deg r < deg g`.
    /// The leading coefficient of `g` must be a unit.
    pub fn divmod(&self, g: &Self) -> Result<(Self, Self)> {
        let lc = g.leading().ok_or(Error::DivisionByZero)?;
        let inv = self
            .ring
            .try_inverse(lc)
            .ok_or_else(|| Error::NonInvertibleLeading(self.ring.format_element(lc)))?;
        let dg = g.coeffs.len() - 1;
        if self.coeffs.len() <= dg {
            return Ok((Self::zero(self.ring.clone()), self.clone()));
        }
        let mut r = self.coeffs.clone();
        let mut q = vec![self.ring.zero(); r.len() - dg];
        for i in (0..q.len()).rev() {
            let c = self.ring.mul(&r[i + dg], &inv);
            if self.ring.is_zero(&c) {
                continue;
            }
            for (j, gj) in g.coeffs.iter().enumerate() {
                let t = self.ring.mul(&c, gj);
                r[i + j] = self.ring.sub(&r[i + j], &t);
            }
            q[i] = c;
        }
        r.truncate(dg);
        Ok((
            Self::new(self.ring.clone(), q),
            Self::new(self.ring.clone(), r),
        ))
    }

    pub fn rem(&self, g: &Self) -> Result<Self> {
        Ok(self.divmod(g)?.1)
    }

    /// `true` when `g` divides `self` exactly.
    pub fn is_divisible_by(&self, g: &Self) -> Result<bool> {
        Ok(self.rem(g)?.is_zero())
    }

    /// Horner evaluation at `c`.
    pub fn evaluate(&self, c: &R::Element) -> R::Element {
        self.coeffs.iter().rev().fold(self.ring.zero(), |acc, a| {
            self.ring.add(&self.ring.mul(&acc, c), a)
        })
    }

    /// Formal derivative `Σ k·a_k x^{k−1}`.
    pub fn derivative(&self) -> Self {
        let cs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, a)| self.ring.mul(&self.ring.from_i64(k as i64), a))
            .collect();
        Self::new(self.ring.clone(), cs)
    }

    /// Applies a ring homomorphism to every coefficient.
    pub fn map_coefficients<S: Ring>(
        &self,
        target: &S,
        sigma: impl Fn(&R::Element) -> S::Element,
    ) -> Poly<S> {
        Poly::new(target.clone(), self.coeffs.iter().map(sigma).collect())
    }

    /// `self(g(x))`.
    pub fn compose(&self, g: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(self.ring.clone()), |acc, a| {
                acc.mul(g)
                    .add(&Self::constant(self.ring.clone(), a.clone()))
            })
    }

    /// `self(x + a)`.
    pub fn shift(&self, a: &R::Element) -> Self {
        let xa = Self::new(self.ring.clone(), vec![a.clone(), self.ring.one()]);
        self.compose(&xa)
    }

    /// Renders with the given variable name, highest degree first.
    pub fn format_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if self.ring.is_zero(c) {
                continue;
            }
            let s = self.ring.format_element(c);
            let compound = s.chars().skip(1).any(|c| matches!(c, '+' | '-' | ' '));
            let negative = !compound && s.starts_with('-');
            let mut body = if compound {
                format!("({s})")
            } else if negative {
                s[1..].to_string()
            } else {
                s
            };
            if k > 0 && body == "1" {
                body.clear();
            }
            match k {
                0 => {}
                1 => body.push_str(var),
                _ => body.push_str(&format!("{var}^{k}")),
            }
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
}

impl<F: Field> Poly<F> {
    /// Scales to leading coefficient 1. The zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.ring.try_inverse(lc).expect("nonzero in a field");
                self.scale(&inv)
            }
        }
    }

    /// Extended Euclid: monic `d = gcd(self, g)` with `d = a·self + b·g`.
    pub fn gcd_bezout(&self, g: &Self) -> Result<(Self, Self, Self)> {
        if self.is_zero() && g.is_zero() {
            return Err(Error::BothZero);
        }
        let ring = self.ring.clone();
        let (mut r0, mut r1) = (self.clone(), g.clone());
        let (mut s0, mut s1) = (Self::one(ring.clone()), Self::zero(ring.clone()));
        let (mut t0, mut t1) = (Self::zero(ring.clone()), Self::one(ring.clone()));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = ring.inverse(r0.leading().expect("nonzero"))?;
        Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
    }

    /// Monic gcd by the plain Euclidean algorithm.
    pub fn gcd(&self, g: &Self) -> Result<Self> {
        if self.is_zero() && g.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut a, mut b) = (self.clone(), g.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = std::mem::replace(&mut b, r);
        }
        Ok(a.monic())
    }

    /// `gcd(f, f') = 1`.
    pub fn squarefree(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let d = self.gcd(&self.derivative())?;
        Ok(d.is_constant())
    }

    /// Resultant by the Euclidean remainder sequence.
    pub fn resultant(&self, g: &Self) -> F::Element {
        let ring = self.ring.clone();
        if self.is_zero() || g.is_zero() {
            return ring.zero();
        }
        let mut acc = ring.one();
        let (mut a, mut b) = (self.clone(), g.clone());
        loop {
            let m = a.coeffs.len() - 1;
            let n = b.coeffs.len() - 1;
            if n == 0 {
                return ring.mul(&acc, &ring.pow(&b.coeffs[0], m as u64));
            }
            if m == 0 {
                return ring.mul(&acc, &ring.pow(&a.coeffs[0], n as u64));
            }
            // Res(a, b) = (−1)^{mn} Res(b, a) = (−1)^{mn} lc(b)^{m − deg r} Res(b, r)
            let r = a.rem(&b).expect("field division");
            if r.is_zero() {
                return ring.zero();
            }
            let k = r.coeffs.len() - 1;
            let mut factor = ring.pow(b.leading().unwrap(), (m - k) as u64);
            if (m * n) % 2 == 1 {
                factor = ring.neg(&factor);
            }
            acc = ring.mul(&acc, &factor);
            a = b;
            b = r;
        }
    }

    /// `(−1)^{n(n−1)/2} · Res(f, f') / lc(f)`.
    pub fn discriminant(&self) -> Result<F::Element> {
        let n = match self.deg() {
            Some(n) if n >= 1 => n,
            _ => return Err(Error::ConstantPolynomial),
        };
        let ring = &self.ring;
        let res = self.resultant(&self.derivative());
        let mut d = ring.div(&res, self.leading().unwrap())?;
        if (n * (n - 1) / 2) % 2 == 1 {
            d = ring.neg(&d);
        }
        Ok(d)
    }
}

impl Poly<RationalField> {
    pub fn from_rationals(coeffs: Vec<Rational>) -> Self {
        Self::new(RationalField, coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_i64s(RationalField, coeffs)
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::new(
            RationalField,
            coeffs
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// `true` if every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Splits `f = content · g` with `g` a primitive integer polynomial whose
    /// leading coefficient is positive.
    pub fn primitive_integer_part(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let mut g = nums.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if nums.last().unwrap().is_negative() {
            g = -g;
        }
        let prim = nums.iter().map(|c| c / &g).collect();
        (Rational::new(g, den), prim)
    }

    /// Primitive integer part, as a rational polynomial.
    pub fn primitive_part(&self) -> Self {
        Self::from_bigints(&self.primitive_integer_part().1)
    }

    /// Integer coefficients; panics if any coefficient is not an integer.
    pub fn integer_coeffs(&self) -> Vec<BigInt> {
        self.coeffs
            .iter()
            .map(|c| {
                assert!(c.is_integer(), "non-integer coefficient {c}");
                c.to_integer()
            })
            .collect()
    }

    /// gcd by the primitive remainder sequence, normalised monic.
    pub fn gcd_primitive(&self, g: &Self) -> Result<Self> {
        if self.is_zero() && g.is_zero() {
            return Err(Error::BothZero);
        }
        let mut a = self.primitive_part();
        let mut b = g.primitive_part();
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        Ok(a.monic())
    }

    /// `lc(g)^{deg f − deg g + 1} · f mod g`, which stays integral for integer inputs.
    fn pseudo_rem(&self, g: &Self) -> Self {
        let (Some(m), Some(n)) = (self.deg(), g.deg()) else {
            return self.clone();
        };
        if m < n {
            return self.clone();
        }
        let lc = g.leading().unwrap().clone();
        let k = (m - n + 1) as u64;
        self.scale(&RationalField.pow(&lc, k))
            .rem(g)
            .expect("nonzero divisor")
    }
}

/// The `p`-th cyclotomic polynomial `x^{p−1} + ⋯ + x + 1`.
pub fn cyclotomic_p(p: u64) -> Result<QPoly> {
    if !crate::exact::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(Poly::from_ints(&vec![1; p as usize]))
}

impl<R: Ring> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with("x"))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl<R: Ring> $tr<&Poly<R>> for &Poly<R> {
            type Output = Poly<R>;
            fn $method(self, rhs: &Poly<R>) -> Poly<R> {
                Poly::$method(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl<R: Ring> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly::neg(self)
    }
}
