//! Exact integers, rationals and dense rational linear algebra.
//!
//! Integers are [`num_bigint::BigInt`]; rationals are
//! [`num_rational::BigRational`], which keeps every value in lowest terms
//! with a positive denominator, so structural equality is numeric equality.

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use num_bigint::BigInt;
pub type Rational = num_rational::BigRational;

/// The four field operations on rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn rational_arith(a: &Rational, b: &Rational, op: ArithOp) -> Result<Rational> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => {
            if b.is_zero() {
                return Err(Error::DivisionByZero);
            }
            a / b
        }
    })
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Integer square root of `n` when `n` is a perfect square.
pub fn is_perfect_square(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Square root of a rational square. `p/q` in lowest terms is a square exactly
/// when both `p` and `q` are.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    let n = is_perfect_square(q.numer())?;
    let d = is_perfect_square(q.denom())?;
    Some(Rational::new(n, d))
}

pub fn is_prime(n: u64) -> bool {
    primal::is_prime(n)
}

/// Trial-division limit used by [`divisors`].
pub const DIVISOR_TRIAL_LIMIT: u64 = 1 << 20;

/// Largest divisor count [`divisors`] will enumerate.
pub const MAX_DIVISORS: usize = 1 << 16;

/// Prime factorisation of `|n|` as `(p, e)` pairs, increasing, by trial
/// division. Returns `None` if a cofactor larger than `trial_limit²` survives
/// and is not a prime below `2⁶⁴`.
pub fn factorize(n: &BigInt, trial_limit: u64) -> Option<Vec<(BigInt, u32)>> {
    let mut m = n.abs();
    let mut out = Vec::new();
    if m.is_zero() {
        return Some(out);
    }
    let mut d = 2u64;
    while d <= trial_limit {
        if let Some(small) = m.to_u128() {
            // same loop without bignum division
            let mut small = small;
            while d <= trial_limit && (d as u128) * (d as u128) <= small {
                let mut e = 0;
                while small % d as u128 == 0 {
                    small /= d as u128;
                    e += 1;
                }
                if e > 0 {
                    out.push((BigInt::from(d), e));
                }
                d += if d == 2 { 1 } else { 2 };
            }
            m = BigInt::from(small);
            break;
        }
        let bd = BigInt::from(d);
        if &bd * &bd > m {
            break;
        }
        let mut e = 0;
        while (&m % d).is_zero() {
            m /= d;
            e += 1;
        }
        if e > 0 {
            out.push((bd, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > BigInt::one() {
        let bd = BigInt::from(d.min(trial_limit));
        if m > &bd * &bd {
            match m.to_u64() {
                Some(v) if is_prime(v) => out.push((m, 1)),
                _ => return None,
            }
        } else {
            out.push((m, 1));
        }
    }
    Some(out)
}

/// Distinct prime factors of `|n|` in increasing order; see [`factorize`].
pub fn prime_factors(n: &BigInt, trial_limit: u64) -> Option<Vec<BigInt>> {
    Some(
        factorize(n, trial_limit)?
            .into_iter()
            .map(|(p, _)| p)
            .collect(),
    )
}

/// Positive divisors of `|n|`, `n ≠ 0`, in increasing order. Fails when `n`
/// cannot be factored by trial division up to [`DIVISOR_TRIAL_LIMIT`] or has
/// more than [`MAX_DIVISORS`] divisors.
pub fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    if n.is_zero() {
        return Err(Error::InvalidArgument("divisors of zero".into()));
    }
    let factors = factorize(n, DIVISOR_TRIAL_LIMIT)
        .ok_or_else(|| Error::BoundExceeded(format!("cannot factor {n}")))?;
    let count = factors
        .iter()
        .try_fold(1usize, |acc, (_, e)| acc.checked_mul(*e as usize + 1))
        .filter(|&c| c <= MAX_DIVISORS)
        .ok_or_else(|| Error::BoundExceeded(format!("{n} has too many divisors")))?;
    let mut out = Vec::with_capacity(count);
    out.push(BigInt::one());
    for (p, e) in &factors {
        let len = out.len();
        let mut pk = BigInt::one();
        for _ in 0..*e {
            pk *= p;
            for i in 0..len {
                let d = &out[i] * &pk;
                out.push(d);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Dense rational matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl QMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidArgument(format!(
                "{} entries for a {}x{} matrix",
                entries.len(),
                rows,
                cols
            )));
        }
        Ok(QMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Result<Self> {
        let cols = columns.len();
        let mut m = Self::zeros(rows, cols);
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::InvalidArgument(format!(
                    "column {} has length {}, expected {}",
                    j,
                    c.len(),
                    rows
                )));
            }
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| self.get(r, c) * &v[c])
                    .fold(Rational::zero(), |acc, t| acc + t)
            })
            .collect()
    }

    /// Reduced row echelon form together with the pivot columns. Pivots are
    /// the first nonzero entry found scanning down each column.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    m.entries.swap(p * m.cols + c, row * m.cols + c);
                }
            }
            let inv = m.get(row, col).recip();
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let v = m.get(r, c) - &factor * m.get(row, c);
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space, one vector per free column, in
    /// increasing free-column order. Empty iff the matrix has full column rank.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(i, free).clone();
            }
            basis.push(v);
        }
        basis
    }
}
