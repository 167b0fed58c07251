//! Coefficient domains.
//!
//! A domain is a small descriptor value (`RationalField`, a prime modulus,
//! a quotient field handle) that knows how to combine its elements. Elements
//! themselves carry no context, which lets runtime-chosen moduli and towers
//! of quotient fields share one polynomial implementation.

use std::fmt::Debug;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{BigInt, Rational};

/// A commutative ring with identity.
pub trait Ring: Clone + Debug + PartialEq + Send + Sync {
    type Element: Clone + Debug + PartialEq + Eq + Send + Sync;

    fn zero(&self) -> Self::Element;
    fn one(&self) -> Self::Element;
    fn add(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn neg(&self, a: &Self::Element) -> Self::Element;
    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;

    /// Multiplicative inverse, `None` for non-units.
    fn try_inverse(&self, a: &Self::Element) -> Option<Self::Element>;

    /// 0 for characteristic zero.
    fn characteristic(&self) -> u64;

    fn format_element(&self, a: &Self::Element) -> String;

    fn sub(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Element) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Element) -> bool {
        *a == self.one()
    }

    fn from_i64(&self, n: i64) -> Self::Element {
        let mut acc = self.zero();
        let mut base = self.one();
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            base = self.add(&base, &base);
            k >>= 1;
        }
        if n < 0 {
            self.neg(&acc)
        } else {
            acc
        }
    }

    fn pow(&self, a: &Self::Element, mut e: u64) -> Self::Element {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inverse(&self, a: &Self::Element) -> Result<Self::Element> {
        self.try_inverse(a).ok_or(Error::DivisionByZero)
    }

    fn div(&self, a: &Self::Element, b: &Self::Element) -> Result<Self::Element> {
        Ok(self.mul(a, &self.inverse(b)?))
    }
}

/// A ring with finitely many elements, indexed `0..order`.
///
/// Index 0 is zero and index 1 is one.
pub trait FiniteRing: Ring {
    fn order(&self) -> u64;
    fn element(&self, index: u64) -> Self::Element;
    fn index_of(&self, a: &Self::Element) -> u64;

    fn elements(&self) -> Vec<Self::Element> {
        (0..self.order()).map(|i| self.element(i)).collect()
    }
}

pub trait FiniteField: FiniteRing + Field {}

impl<T: FiniteRing + Field> FiniteField for T {}

/// The rational numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RationalField;

impl Ring for RationalField {
    type Element = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn from_i64(&self, n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }
    fn try_inverse(&self, a: &Rational) -> Option<Rational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn format_element(&self, a: &Rational) -> String {
        a.to_string()
    }
}

impl Field for RationalField {}
