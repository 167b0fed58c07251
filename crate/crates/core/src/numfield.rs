//! Number fields `ℚ[x]/⟨f⟩`, two-generator fields on a tensor basis, minimum
//! polynomials by exact linear algebra, primitive elements and Kronecker's
//! construction of a root.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{QMatrix, Rational};
use crate::irr::{self, Verdict};
use crate::modp::{self, PrimeField, QFElement, QuotientField};
use crate::poly::{Poly, QPoly};
use crate::ring::{Field, FiniteField, RationalField, Ring};

/// Largest ambient dimension accepted by [`min_poly_of_element`].
pub const MAX_DIMENSION: usize = 24;

/// Largest `c` tried when searching for a primitive element `α + cβ`.
pub const PRIMITIVE_SEARCH_CAP: i64 = 100;

pub type NumberField = QuotientField<RationalField>;
pub type NFElement = QFElement<RationalField>;

/// `ℚ[x]/⟨f⟩`; the modulus must be certified irreducible over ℚ.
pub fn number_field(modulus: QPoly) -> Result<NumberField> {
    number_field_with_var(modulus, "α")
}

pub fn number_field_with_var(modulus: QPoly, var: &str) -> Result<NumberField> {
    let cert = irr::is_irreducible_q(&modulus)?;
    if cert.verdict != Verdict::Irreducible {
        return Err(Error::ReducibleModulus(modulus.to_string()));
    }
    NumberField::new_unchecked(RationalField, modulus, var)
}

/// A finite-dimensional commutative ℚ-algebra with a fixed basis.
pub trait QAlgebra: Ring {
    fn dimension(&self) -> usize;
    fn coordinates(&self, e: &Self::Element) -> Vec<Rational>;
}

impl QAlgebra for RationalField {
    fn dimension(&self) -> usize {
        1
    }
    fn coordinates(&self, e: &Rational) -> Vec<Rational> {
        vec![e.clone()]
    }
}

impl QAlgebra for NumberField {
    fn dimension(&self) -> usize {
        self.degree()
    }
    fn coordinates(&self, e: &QPoly) -> Vec<Rational> {
        QuotientField::coordinates(self, e)
    }
}

struct TensorInner {
    alpha: QPoly,
    beta: QPoly,
}

/// `ℚ(α, β)` with `f(α) = 0`, `g(β) = 0`, elements stored on the basis
/// `α^i β^j` (`i < deg f`, `j < deg g`) at index `i·deg g + j`. Products are
/// reduced with the rewrite rules `α^{deg f} = …` and `β^{deg g} = …`.
#[derive(Clone)]
pub struct TensorBasisField {
    inner: Arc<TensorInner>,
}

impl PartialEq for TensorBasisField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.alpha == other.inner.alpha && self.inner.beta == other.inner.beta)
    }
}

impl std::fmt::Debug for TensorBasisField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TensorBasisField")
            .field("alpha", &self.inner.alpha.to_string())
            .field("beta", &self.inner.beta.to_string())
            .finish()
    }
}

impl TensorBasisField {
    /// Builds the algebra and checks that it is a field of degree
    /// `deg f · deg g`, i.e. that some `α + cβ` with `0 ≤ c ≤ 100` has an
    /// irreducible minimum polynomial of full degree.
    pub fn new(alpha_poly: QPoly, beta_poly: QPoly) -> Result<Self> {
        for p in [&alpha_poly, &beta_poly] {
            if irr::is_irreducible_q(p)?.verdict != Verdict::Irreducible {
                return Err(Error::ReducibleModulus(p.to_string()));
            }
        }
        let t = Self::new_unchecked(alpha_poly, beta_poly)?;
        primitive_element(&t)?;
        Ok(t)
    }

    /// Builds the algebra without any field check.
    pub fn new_unchecked(alpha_poly: QPoly, beta_poly: QPoly) -> Result<Self> {
        for p in [&alpha_poly, &beta_poly] {
            if p.deg().unwrap_or(0) < 1 {
                return Err(Error::ConstantPolynomial);
            }
        }
        Ok(TensorBasisField {
            inner: Arc::new(TensorInner {
                alpha: alpha_poly.monic(),
                beta: beta_poly.monic(),
            }),
        })
    }

    pub fn alpha_degree(&self) -> usize {
        self.inner.alpha.deg().unwrap()
    }

    pub fn beta_degree(&self) -> usize {
        self.inner.beta.deg().unwrap()
    }

    /// The generator α; a rational number when `f` is linear.
    pub fn alpha(&self) -> Vec<Rational> {
        let mut v = self.zero();
        if self.alpha_degree() == 1 {
            v[0] = -self.inner.alpha.coeff(0);
        } else {
            v[self.beta_degree()] = Rational::one();
        }
        v
    }

    /// The generator β; a rational number when `g` is linear.
    pub fn beta(&self) -> Vec<Rational> {
        let mut v = self.zero();
        if self.beta_degree() == 1 {
            v[0] = -self.inner.beta.coeff(0);
        } else {
            v[1] = Rational::one();
        }
        v
    }

    pub fn from_rational(&self, c: Rational) -> Vec<Rational> {
        let mut v = self.zero();
        v[0] = c;
        v
    }

    /// `α + c·β`.
    pub fn alpha_plus_c_beta(&self, c: i64) -> Vec<Rational> {
        let cb: Vec<Rational> = self
            .beta()
            .iter()
            .map(|b| b * Rational::from_integer(c.into()))
            .collect();
        self.add(&self.alpha(), &cb)
    }

    fn multiplication_matrix(&self, a: &[Rational]) -> QMatrix {
        let dim = self.dimension();
        let columns: Vec<Vec<Rational>> = (0..dim)
            .map(|k| {
                let mut e = self.zero();
                e[k] = Rational::one();
                self.mul(&a.to_vec(), &e)
            })
            .collect();
        QMatrix::from_columns(dim, &columns).expect("square")
    }
}

impl Ring for TensorBasisField {
    type Element = Vec<Rational>;

    fn zero(&self) -> Vec<Rational> {
        vec![Rational::zero(); self.dimension()]
    }

    fn one(&self) -> Vec<Rational> {
        self.from_rational(Rational::one())
    }

    fn add(&self, a: &Vec<Rational>, b: &Vec<Rational>) -> Vec<Rational> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn neg(&self, a: &Vec<Rational>) -> Vec<Rational> {
        a.iter().map(|x| -x).collect()
    }

    fn mul(&self, a: &Vec<Rational>, b: &Vec<Rational>) -> Vec<Rational> {
        let (m, n) = (self.alpha_degree(), self.beta_degree());
        // rows indexed by the power of α, each row a polynomial in β
        let mut rows = vec![vec![Rational::zero(); 2 * n - 1]; 2 * m - 1];
        for i1 in 0..m {
            for j1 in 0..n {
                let x = &a[i1 * n + j1];
                if x.is_zero() {
                    continue;
                }
                for i2 in 0..m {
                    for j2 in 0..n {
                        let y = &b[i2 * n + j2];
                        if !y.is_zero() {
                            rows[i1 + i2][j1 + j2] += x * y;
                        }
                    }
                }
            }
        }
        let mut rows: Vec<QPoly> = rows
            .into_iter()
            .map(|r| {
                QPoly::from_rationals(r)
                    .rem(&self.inner.beta)
                    .expect("monic")
            })
            .collect();
        let alpha = &self.inner.alpha;
        for i in (m..rows.len()).rev() {
            let top = std::mem::replace(&mut rows[i], QPoly::zero(RationalField));
            if top.is_zero() {
                continue;
            }
            for k in 0..m {
                let c = alpha.coeff(k);
                if !c.is_zero() {
                    rows[i - m + k] = rows[i - m + k].sub(&top.scale(&c));
                }
            }
        }
        let mut out = self.zero();
        for (i, row) in rows.iter().take(m).enumerate() {
            for j in 0..n {
                out[i * n + j] = row.coeff(j);
            }
        }
        out
    }

    fn is_zero(&self, a: &Vec<Rational>) -> bool {
        a.iter().all(|x| x.is_zero())
    }

    fn try_inverse(&self, a: &Vec<Rational>) -> Option<Vec<Rational>> {
        // solve M_a · v = 1
        let dim = self.dimension();
        let m = self.multiplication_matrix(a);
        let mut aug = QMatrix::zeros(dim, dim + 1);
        for r in 0..dim {
            for c in 0..dim {
                aug.set(r, c, m.get(r, c).clone());
            }
        }
        aug.set(0, dim, -Rational::one());
        if m.rank() < dim {
            return None;
        }
        let k = aug.kernel();
        let v = k.first()?;
        let scale = v[dim].recip();
        Some(v[..dim].iter().map(|x| x * &scale).collect())
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn format_element(&self, a: &Vec<Rational>) -> String {
        let n = self.beta_degree();
        let mut terms = Vec::new();
        for (k, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (i, j) = (k / n, k % n);
            let mono = match (i, j) {
                (0, 0) => String::new(),
                _ => {
                    let pa = match i {
                        0 => String::new(),
                        1 => "α".into(),
                        _ => format!("α^{i}"),
                    };
                    let pb = match j {
                        0 => String::new(),
                        1 => "β".into(),
                        _ => format!("β^{j}"),
                    };
                    pa + &pb
                }
            };
            terms.push(if mono.is_empty() {
                c.to_string()
            } else if c.is_one() {
                mono
            } else {
                format!("{c}{mono}")
            });
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

impl QAlgebra for TensorBasisField {
    fn dimension(&self) -> usize {
        self.alpha_degree() * self.beta_degree()
    }
    fn coordinates(&self, e: &Vec<Rational>) -> Vec<Rational> {
        e.clone()
    }
}

/// Minimum polynomial by linear algebra, with no irreducibility check: the
/// first `k` for which the coordinate vectors of `1, e, …, e^k` are dependent
/// gives the monic relation.
pub fn min_poly_unchecked<A: QAlgebra>(alg: &A, e: &A::Element) -> Result<QPoly> {
    let n = alg.dimension();
    if n > MAX_DIMENSION {
        return Err(Error::BoundExceeded(format!(
            "dimension {n} exceeds {MAX_DIMENSION}"
        )));
    }
    let mut powers = vec![alg.coordinates(&alg.one())];
    let mut cur = alg.one();
    for k in 1..=n {
        cur = alg.mul(&cur, e);
        powers.push(alg.coordinates(&cur));
        let m = QMatrix::from_columns(n, &powers)?;
        if let Some(v) = m.kernel().into_iter().next() {
            let lead = v[k].clone();
            debug_assert!(!lead.is_zero());
            return Ok(QPoly::from_rationals(v.iter().map(|x| x / &lead).collect()));
        }
    }
    unreachable!("n + 1 vectors in dimension n are dependent")
}

/// Minimum polynomial over ℚ of an element of a number field or tensor-basis
/// field. Fails with [`Error::Reducible`] if the result is certified
/// reducible, which happens only when the algebra is not a field.
pub fn min_poly_of_element<A: QAlgebra>(alg: &A, e: &A::Element) -> Result<QPoly> {
    let p = min_poly_unchecked(alg, e)?;
    if irr::is_irreducible_q(&p)?.verdict == Verdict::Reducible {
        return Err(Error::Reducible(p.to_string()));
    }
    Ok(p)
}

/// A primitive element `θ = α + cβ` with its minimum polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct PrimitiveElement {
    pub c: i64,
    pub theta: Vec<Rational>,
    pub min_poly: QPoly,
}

/// Smallest `c ≥ 0` such that `α + cβ` has degree `[E:ℚ]`.
pub fn primitive_element(field: &TensorBasisField) -> Result<PrimitiveElement> {
    let full = field.dimension();
    for c in 0..=PRIMITIVE_SEARCH_CAP {
        let theta = field.alpha_plus_c_beta(c);
        let p = min_poly_unchecked(field, &theta)?;
        if irr::is_irreducible_q(&p)?.verdict == Verdict::Reducible {
            return Err(Error::Reducible(format!(
                "minimum polynomial {p} of α + {c}β factors, so the algebra is not a field"
            )));
        }
        if p.deg() == Some(full) {
            return Ok(PrimitiveElement {
                c,
                theta,
                min_poly: p,
            });
        }
    }
    Err(Error::BoundExceeded(format!(
        "no primitive element α + cβ with c ≤ {PRIMITIVE_SEARCH_CAP}"
    )))
}

/// Fields over which Kronecker's construction can pick an irreducible factor.
pub trait KroneckerBase: Field {
    fn irreducible_factor(&self, f: &Poly<Self>) -> Result<Poly<Self>>;
    fn quotient(&self, g: Poly<Self>) -> Result<QuotientField<Self>>;
}

// the factor of largest degree, first in the factor ordering on ties
fn largest<F: Field>(factors: Vec<(Poly<F>, usize)>) -> Poly<F> {
    let mut best: Option<Poly<F>> = None;
    for (g, _) in factors {
        if best.as_ref().is_none_or(|b| g.deg() > b.deg()) {
            best = Some(g);
        }
    }
    best.expect("nonconstant input has a factor")
}

impl KroneckerBase for RationalField {
    fn irreducible_factor(&self, f: &QPoly) -> Result<QPoly> {
        Ok(largest(irr::factor_q(f)?.1).monic())
    }
    fn quotient(&self, g: QPoly) -> Result<NumberField> {
        number_field(g)
    }
}

impl KroneckerBase for PrimeField {
    fn irreducible_factor(&self, f: &Poly<Self>) -> Result<Poly<Self>> {
        Ok(largest(modp::factor_over_fp(f)?.1))
    }
    fn quotient(&self, g: Poly<Self>) -> Result<QuotientField<Self>> {
        QuotientField::new(*self, g)
    }
}

impl<F: FiniteField> KroneckerBase for QuotientField<F> {
    fn irreducible_factor(&self, f: &Poly<Self>) -> Result<Poly<Self>> {
        Ok(largest(modp::factor_over_fp(f)?.1))
    }
    fn quotient(&self, g: Poly<Self>) -> Result<QuotientField<Self>> {
        QuotientField::with_var(self.clone(), g, "β")
    }
}

/// An extension of `base` containing a root of `f`: the quotient by an
/// irreducible factor of `f`, together with the class of `x`.
pub fn kronecker_extend<F: KroneckerBase>(
    base: &F,
    f: &Poly<F>,
) -> Result<(QuotientField<F>, QFElement<F>)> {
    if f.deg().unwrap_or(0) < 1 {
        return Err(Error::ConstantPolynomial);
    }
    let g = base.irreducible_factor(f)?;
    let ext = base.quotient(g)?;
    let root = ext.generator();
    let lifted = f.map_coefficients(&ext, |c| ext.embed(c.clone()).rep().clone());
    if !lifted.evaluate(root.rep()).is_zero() {
        return Err(Error::InvalidArgument(format!(
            "x is not a root of {f} in the extension"
        )));
    }
    Ok((ext, root))
}

/// Degree of a tower from the degrees of its steps.
pub fn tower_degree(steps: &[usize]) -> Result<usize> {
    if let Some(bad) = steps.iter().find(|&&d| d == 0) {
        return Err(Error::InvalidArgument(format!(
            "step degree {bad} must be at least 1"
        )));
    }
    Ok(steps.iter().product())
}
