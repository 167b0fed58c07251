//! Ruler-and-compass decisions: Fermat primes, regular n-gons, angles `π/n`
//! and the power-of-two degree test for constructible numbers.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{is_prime, Rational};
use crate::irr::is_irreducible_q;
use crate::poly::QPoly;

/// The Fermat primes below `2³²`.
pub const KNOWN_FERMAT_PRIMES: [u64; 5] = [3, 5, 17, 257, 65537];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Answer {
    Yes,
    No,
    NecessaryConditionFails,
    NecessaryConditionHolds,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Reason {
    /// `n = 2^k · Π pᵢ^{eᵢ}` with odd primes `pᵢ`.
    Factorization {
        n: u64,
        power_of_two: u32,
        odd_primes: Vec<(u64, u32)>,
    },
    /// Degree of the minimum polynomial over ℚ.
    Degree { degree: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructibilityVerdict {
    pub answer: Answer,
    pub reason: Reason,
}

impl ConstructibilityVerdict {
    pub fn is_yes(&self) -> bool {
        self.answer == Answer::Yes
    }
}

pub fn is_fermat_prime(p: u64) -> bool {
    if p <= 65537 {
        return KNOWN_FERMAT_PRIMES.contains(&p);
    }
    // 2^(2^t) + 1 with 2^t ≥ 32
    let m = p - 1;
    m.is_power_of_two() && m.trailing_zeros().is_power_of_two() && is_prime(p)
}

fn factor_small(mut n: u64) -> (u32, Vec<(u64, u32)>) {
    let twos = n.trailing_zeros();
    n >>= twos;
    let mut odd = Vec::new();
    let mut d = 3;
    while d * d <= n {
        let mut e = 0;
        while n.is_multiple_of(d) {
            n /= d;
            e += 1;
        }
        if e > 0 {
            odd.push((d, e));
        }
        d += 2;
    }
    if n > 1 {
        odd.push((n, 1));
    }
    (twos, odd)
}

/// Yes exactly when `n` is a power of two times distinct Fermat primes.
pub fn ngon_constructible(n: u64) -> Result<ConstructibilityVerdict> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "a polygon needs n ≥ 3, got {n}"
        )));
    }
    let (power_of_two, odd_primes) = factor_small(n);
    let ok = odd_primes
        .iter()
        .all(|&(p, e)| e == 1 && is_fermat_prime(p));
    Ok(ConstructibilityVerdict {
        answer: if ok { Answer::Yes } else { Answer::No },
        reason: Reason::Factorization {
            n,
            power_of_two,
            odd_primes,
        },
    })
}

/// The angle `π/n`, decided through the regular `2n`-gon.
pub fn angle_pi_over_n_constructible(n: u64) -> Result<ConstructibilityVerdict> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    ngon_constructible(2 * n)
}

/// The angle `q·π` for rational `q = a/b` in lowest terms. It is constructible
/// exactly when `π/b` is: `ua + vb = 1` for some integers `u, v`, so `π/b` is
/// an integer combination of `aπ/b` and `π`.
pub fn angle_constructible(q: &Rational) -> Result<ConstructibilityVerdict> {
    let b = q.denom();
    let b: u64 = b
        .try_into()
        .map_err(|_| Error::BoundExceeded(format!("denominator {b} too large")))?;
    if b == 1 {
        return Ok(ConstructibilityVerdict {
            answer: Answer::Yes,
            reason: Reason::Factorization {
                n: 1,
                power_of_two: 0,
                odd_primes: vec![],
            },
        });
    }
    angle_pi_over_n_constructible(b)
}

/// `n` in `2..=max` with `π/n` constructible.
pub fn constructible_angles(max: u64) -> Vec<u64> {
    (2..=max)
        .filter(|&n| angle_pi_over_n_constructible(n).is_ok_and(|v| v.is_yes()))
        .collect()
}

fn degree_verdict(degree: usize) -> ConstructibilityVerdict {
    ConstructibilityVerdict {
        answer: if degree.is_power_of_two() {
            Answer::NecessaryConditionHolds
        } else {
            Answer::NecessaryConditionFails
        },
        reason: Reason::Degree { degree },
    }
}

/// Power-of-two test on the degree of a minimum polynomial. Passing it does
/// not make a number constructible, so the answer is never `Yes`.
pub fn number_necessary_test_degree(degree: usize) -> Result<ConstructibilityVerdict> {
    if degree == 0 {
        return Err(Error::InvalidArgument("degree must be at least 1".into()));
    }
    Ok(degree_verdict(degree))
}

/// [`number_necessary_test_degree`] for a root of `f`, which must be
/// irreducible over ℚ.
pub fn number_necessary_test(f: &QPoly) -> Result<ConstructibilityVerdict> {
    let cert = is_irreducible_q(f)?;
    if !cert.is_irreducible() {
        return Err(Error::Reducible(f.to_string()));
    }
    Ok(degree_verdict(f.deg().unwrap()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Solid {
    Cube,
    Octahedron,
    Dodecahedron,
    Icosahedron,
    /// Four-dimensional cube; doubling needs `⁴√2`.
    Tesseract,
}

impl Solid {
    pub const ALL: [Solid; 5] = [
        Solid::Cube,
        Solid::Octahedron,
        Solid::Dodecahedron,
        Solid::Icosahedron,
        Solid::Tesseract,
    ];

    /// Minimum polynomial of the edge scale factor that doubles the volume.
    pub fn scale_min_poly(self) -> QPoly {
        match self {
            Solid::Tesseract => QPoly::from_ints(&[-2, 0, 0, 0, 1]),
            _ => QPoly::from_ints(&[-2, 0, 0, 1]),
        }
    }
}

impl fmt::Display for Solid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Solid::Cube => "cube",
            Solid::Octahedron => "octahedron",
            Solid::Dodecahedron => "dodecahedron",
            Solid::Icosahedron => "icosahedron",
            Solid::Tesseract => "tesseract",
        })
    }
}

impl std::str::FromStr for Solid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Solid::ALL
            .into_iter()
            .find(|x| x.to_string() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::InvalidArgument(format!("unknown solid {s}")))
    }
}

/// Volume scales with the cube of the edge (fourth power for the tesseract),
/// so doubling needs the real root of `x³ − 2` (resp. `x⁴ − 2`).
pub fn platonic_doubling(solid: Solid) -> ConstructibilityVerdict {
    number_necessary_test(&solid.scale_min_poly()).expect("irreducible by Eisenstein at 2")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn fermat() {
        for p in [3, 5, 17, 257, 65537] {
            assert!(is_fermat_prime(p));
        }
        for p in [2, 7, 9, 13, 4294967297] {
            assert!(!is_fermat_prime(p), "{p}");
        }
    }

    #[test]
    fn polygons() {
        assert!(ngon_constructible(17).unwrap().is_yes());
        assert!(!ngon_constructible(7).unwrap().is_yes());
        let nine = ngon_constructible(9).unwrap();
        assert_eq!(nine.answer, Answer::No);
        assert_eq!(
            nine.reason,
            Reason::Factorization {
                n: 9,
                power_of_two: 0,
                odd_primes: vec![(3, 2)]
            }
        );
        assert!(ngon_constructible(2).is_err());
    }

    #[test]
    fn angles() {
        assert!(!angle_pi_over_n_constructible(9).unwrap().is_yes());
        assert!(angle_pi_over_n_constructible(2).unwrap().is_yes());
        assert!(!angle_constructible(&rat(2, 9)).unwrap().is_yes());
        assert!(angle_constructible(&rat(3, 1)).unwrap().is_yes());
        assert_eq!(constructible_angles(15), vec![2, 3, 4, 5, 6, 8, 10, 12, 15]);
    }

    #[test]
    fn necessary_test() {
        let cube = QPoly::from_ints(&[-2, 0, 0, 1]);
        assert_eq!(
            number_necessary_test(&cube).unwrap().answer,
            Answer::NecessaryConditionFails
        );
        let trisect = QPoly::from_ints(&[-1, -3, 0, 1]);
        assert_eq!(
            number_necessary_test(&trisect).unwrap().answer,
            Answer::NecessaryConditionFails
        );
        let root2 = QPoly::from_ints(&[-2, 0, 1]);
        assert_eq!(
            number_necessary_test(&root2).unwrap().answer,
            Answer::NecessaryConditionHolds
        );
        assert!(number_necessary_test(&QPoly::from_ints(&[1, 2, 1])).is_err());
    }

    #[test]
    fn solids() {
        for s in [
            Solid::Cube,
            Solid::Octahedron,
            Solid::Dodecahedron,
            Solid::Icosahedron,
        ] {
            assert_eq!(platonic_doubling(s).answer, Answer::NecessaryConditionFails);
        }
        assert_eq!(
            platonic_doubling(Solid::Tesseract).answer,
            Answer::NecessaryConditionHolds
        );
        assert_eq!("Icosahedron".parse::<Solid>().unwrap(), Solid::Icosahedron);
    }
}
