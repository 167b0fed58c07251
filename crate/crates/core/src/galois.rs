//! Galois groups of rational polynomials of degree at most 5.
//!
//! Quadratics and cubics follow the discriminant rules. Irreducible quartics
//! and quintics are placed among the transitive subgroups of `S_n` from the
//! square class of the discriminant and the factorisation patterns of `f`
//! modulo unramified primes, whose cycle types the group must realise.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{rational_sqrt, BigInt, Rational};
use crate::irr::{factor_q, rational_roots, reduce_mod_p};
use crate::modp::{factor_degree_pattern, PrimeField};
use crate::permgrp::{parse_cycles_on, PermGroup};
use crate::poly::{Poly, QPoly};

/// Default number of admissible primes sampled before giving up.
pub const DEFAULT_MAX_PRIMES: usize = 200;

/// Samples needed before the absence of a cycle type is taken as evidence.
pub const ABSENCE_SAMPLES: usize = 40;

/// Largest `R` accepted by [`quintic_map`].
pub const QUINTIC_MAP_LIMIT: i64 = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GroupLabel {
    Trivial,
    C2,
    C3,
    S3,
    C4,
    V4,
    D4,
    A4,
    S4,
    C5,
    D5,
    F20,
    A5,
    S5,
    /// Cyclic of the given order, for `Φ_p` of degree above 5.
    Cyclic(usize),
    Reducible,
}

impl GroupLabel {
    pub const TRANSITIVE: [GroupLabel; 14] = [
        GroupLabel::Trivial,
        GroupLabel::C2,
        GroupLabel::C3,
        GroupLabel::S3,
        GroupLabel::C4,
        GroupLabel::V4,
        GroupLabel::D4,
        GroupLabel::A4,
        GroupLabel::S4,
        GroupLabel::C5,
        GroupLabel::D5,
        GroupLabel::F20,
        GroupLabel::A5,
        GroupLabel::S5,
    ];

    /// Group order; `None` for `Reducible`, whose order depends on the factors.
    pub fn order(self) -> Option<usize> {
        use GroupLabel::*;
        Some(match self {
            Trivial => 1,
            C2 => 2,
            C3 => 3,
            S3 => 6,
            C4 | V4 => 4,
            D4 => 8,
            A4 => 12,
            S4 => 24,
            C5 => 5,
            D5 => 10,
            F20 => 20,
            A5 => 60,
            S5 => 120,
            Cyclic(n) => n,
            Reducible => return None,
        })
    }

    pub fn is_solvable(self) -> bool {
        !matches!(self, GroupLabel::A5 | GroupLabel::S5)
    }

    /// Number of permuted roots.
    pub fn degree(self) -> Option<usize> {
        use GroupLabel::*;
        Some(match self {
            Trivial => 1,
            C2 => 2,
            C3 | S3 => 3,
            C4 | V4 | D4 | A4 | S4 => 4,
            C5 | D5 | F20 | A5 | S5 => 5,
            Cyclic(n) => n,
            Reducible => return None,
        })
    }

    /// Generators as permutations of the roots.
    pub fn generators(self) -> &'static [&'static str] {
        use GroupLabel::*;
        match self {
            Trivial | Cyclic(_) | Reducible => &[],
            C2 => &["(1,2)"],
            C3 => &["(1,2,3)"],
            S3 => &["(1,2,3)", "(1,2)"],
            C4 => &["(1,2,3,4)"],
            V4 => &["(1,2)(3,4)", "(1,3)(2,4)"],
            D4 => &["(1,2,3,4)", "(2,4)"],
            A4 => &["(1,2,3)", "(2,3,4)"],
            S4 => &["(1,2,3,4)", "(1,2)"],
            C5 => &["(1,2,3,4,5)"],
            D5 => &["(1,2,3,4,5)", "(2,5)(3,4)"],
            F20 => &["(1,2,3,4,5)", "(2,3,5,4)"],
            A5 => &["(1,2,3,4,5)", "(1,2)(3,4)"],
            S5 => &["(1,2,3,4,5)", "(1,2)"],
        }
    }

    /// The transitive permutation group this label names.
    pub fn concrete_group(self) -> Option<PermGroup> {
        let n = self.degree()?;
        if let GroupLabel::Cyclic(n) = self {
            return PermGroup::cyclic(n)
                .ok()
                .filter(|_| n <= crate::permgrp::MAX_POINTS);
        }
        let gens = self
            .generators()
            .iter()
            .map(|s| parse_cycles_on(s, Some(n)))
            .collect::<Result<Vec<_>>>()
            .expect("well-formed generators");
        Some(crate::permgrp::generate_on(n, &gens).expect("at most 5 points"))
    }

    /// Cycle types (descending partitions of the degree) of its elements.
    pub fn cycle_types(self) -> &'static BTreeSet<Vec<usize>> {
        static TABLE: OnceLock<HashMap<GroupLabel, BTreeSet<Vec<usize>>>> = OnceLock::new();
        static EMPTY: BTreeSet<Vec<usize>> = BTreeSet::new();
        let table = TABLE.get_or_init(|| {
            GroupLabel::TRANSITIVE
                .iter()
                .map(|&l| {
                    let g = l.concrete_group().unwrap();
                    (l, g.elements().iter().map(|x| x.cycle_type()).collect())
                })
                .collect()
        });
        table.get(&self).unwrap_or(&EMPTY)
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupLabel::Cyclic(n) => write!(f, "C{n}"),
            _ => fmt::Debug::fmt(self, f),
        }
    }
}

/// Irreducible factors of a reducible input with their own groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducibleInfo {
    /// Primitive integer factors, by degree.
    pub factors: Vec<(QPoly, GroupLabel)>,
    /// Factor degrees, ascending.
    pub shape: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisClass {
    pub label: GroupLabel,
    /// Order of the group, equal to the degree of the splitting field.
    pub order: usize,
    pub solvable: bool,
    pub reducible: Option<ReducibleInfo>,
}

impl GaloisClass {
    fn of(label: GroupLabel) -> Self {
        GaloisClass {
            label,
            order: label.order().unwrap(),
            solvable: label.is_solvable(),
            reducible: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleTypeSample {
    pub p: u64,
    /// Degrees of the irreducible factors of `f mod p`, descending.
    pub partition: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SamplingConfig {
    pub max_primes: usize,
}

impl Default for SamplingConfig {
    fn default() -> Self {
        SamplingConfig {
            max_primes: DEFAULT_MAX_PRIMES,
        }
    }
}

fn integer_part(f: &QPoly) -> Vec<BigInt> {
    f.primitive_integer_part().1
}

fn degree_in(f: &QPoly, allowed: usize) -> Result<usize> {
    match f.deg() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::ConstantPolynomial),
        Some(n) if n == allowed => Ok(n),
        Some(n) => Err(Error::UnsupportedDegree(n)),
    }
}

fn require_squarefree(f: &QPoly) -> Result<()> {
    if f.squarefree()? {
        Ok(())
    } else {
        Err(Error::RepeatedRoot)
    }
}

fn is_rational_square(q: &Rational) -> bool {
    rational_sqrt(q).is_some()
}

pub fn galois_group_quadratic(f: &QPoly) -> Result<GaloisClass> {
    degree_in(f, 2)?;
    require_squarefree(f)?;
    Ok(if is_rational_square(&f.discriminant()?) {
        GaloisClass::of(GroupLabel::Trivial)
    } else {
        GaloisClass::of(GroupLabel::C2)
    })
}

pub fn galois_group_cubic(f: &QPoly) -> Result<GaloisClass> {
    degree_in(f, 3)?;
    require_squarefree(f)?;
    let roots = rational_roots(f)?;
    match roots.len() {
        0 if is_rational_square(&f.discriminant()?) => Ok(GaloisClass::of(GroupLabel::C3)),
        0 => Ok(GaloisClass::of(GroupLabel::S3)),
        _ => Ok(reducible_class(f)?.with_small_label()),
    }
}

impl GaloisClass {
    // a reducible polynomial of degree ≤ 3 is named after its group
    fn with_small_label(mut self) -> Self {
        self.label = match self.order {
            1 => GroupLabel::Trivial,
            _ => GroupLabel::C2,
        };
        self
    }
}

/// Factorisation patterns of `f` modulo the first `max_primes` admissible
/// primes, ascending. A prime is admissible when it does not divide the
/// leading coefficient and `f mod p` is squarefree. Non-squarefree `f` has no
/// admissible primes and gives an empty list.
pub fn cycle_type_samples(f: &QPoly, max_primes: usize) -> Vec<CycleTypeSample> {
    let mut out = Vec::new();
    sample_until(f, max_primes, |s| {
        out.push(s);
        false
    });
    out
}

// feeds samples to `stop` until it returns true or the cap is reached
fn sample_until(f: &QPoly, max_primes: usize, mut stop: impl FnMut(CycleTypeSample) -> bool) {
    if max_primes == 0 || f.deg().is_none_or(|n| n == 0) || !f.squarefree().unwrap_or(false) {
        return;
    }
    let c = integer_part(f);
    let n = c.len() - 1;
    let mut taken = 0;
    for p in primal::Primes::all() {
        let field = PrimeField::new(p as u64).expect("prime below 2^32");
        let g = reduce_mod_p(&c, field);
        if g.deg() != Some(n) {
            continue;
        }
        let Ok(mut partition) = factor_degree_pattern(&g) else {
            continue;
        };
        partition.reverse();
        taken += 1;
        if stop(CycleTypeSample {
            p: p as u64,
            partition,
        }) || taken >= max_primes
        {
            return;
        }
    }
}

/// Candidate groups for an irreducible polynomial of degree `n`, smallest
/// first; each contains the previous one's cycle types.
pub fn candidate_chain(n: usize, square_disc: bool) -> &'static [GroupLabel] {
    use GroupLabel::*;
    match (n, square_disc) {
        (1, _) => &[Trivial],
        (2, _) => &[C2],
        (3, true) => &[C3],
        (3, false) => &[S3],
        (4, true) => &[V4, A4],
        (4, false) => &[C4, D4, S4],
        (5, true) => &[C5, D5, A5],
        (5, false) => &[F20, S5],
        _ => &[],
    }
}

/// Smallest group in the chain whose cycle types include every observed one.
/// A group below the top of the chain is chosen only after
/// [`ABSENCE_SAMPLES`] samples, since it rests on types never showing up.
pub fn classify_by_cycle_types(
    n: usize,
    square_disc: bool,
    observed: &BTreeSet<Vec<usize>>,
    samples: usize,
) -> Result<GroupLabel> {
    let chain = candidate_chain(n, square_disc);
    let names = || chain.iter().map(ToString::to_string).collect::<Vec<_>>();
    let Some(pos) = chain
        .iter()
        .position(|l| observed.is_subset(l.cycle_types()))
    else {
        return Err(Error::Unknown(names()));
    };
    if pos + 1 < chain.len() && samples < ABSENCE_SAMPLES {
        return Err(Error::Unknown(
            chain[pos..].iter().map(ToString::to_string).collect(),
        ));
    }
    Ok(chain[pos])
}

fn classify_irreducible(f: &QPoly, config: SamplingConfig) -> Result<GroupLabel> {
    let n = f.deg().unwrap();
    let square = is_rational_square(&f.discriminant()?);
    let chain = candidate_chain(n, square);
    if chain.len() == 1 {
        return Ok(chain[0]);
    }
    let below_top = chain[chain.len() - 2].cycle_types();
    let mut observed = BTreeSet::new();
    let mut count = 0;
    sample_until(f, config.max_primes, |s| {
        count += 1;
        let pinned = !below_top.contains(&s.partition);
        observed.insert(s.partition);
        pinned
    });
    classify_by_cycle_types(n, square, &observed, count)
}

fn quadratic_disc(g: &QPoly) -> Rational {
    g.discriminant().expect("degree 2")
}

// Group order of a squarefree product of irreducibles of total degree ≤ 5:
// the compositum degree of the factors' splitting fields.
fn compositum_order(factors: &[(QPoly, GroupLabel)]) -> usize {
    let nonlinear: Vec<&(QPoly, GroupLabel)> =
        factors.iter().filter(|(g, _)| g.deg() != Some(1)).collect();
    match nonlinear.as_slice() {
        [] => 1,
        [(_, l)] => l.order().unwrap(),
        [(g, _), (h, _)] if g.deg() == Some(2) && h.deg() == Some(2) => {
            if is_rational_square(&(quadratic_disc(g) * quadratic_disc(h))) {
                2
            } else {
                4
            }
        }
        [(q, _), (c, l)] if q.deg() == Some(2) && c.deg() == Some(3) => match l {
            // a cyclic cubic field has no quadratic subfield
            GroupLabel::C3 => 6,
            _ => {
                let d = quadratic_disc(q) * c.discriminant().expect("degree 3");
                if is_rational_square(&d) {
                    6
                } else {
                    12
                }
            }
        },
        _ => unreachable!("total degree at most 5"),
    }
}

fn reducible_class(f: &QPoly) -> Result<GaloisClass> {
    reducible_class_with(f, SamplingConfig::default())
}

fn reducible_class_with(f: &QPoly, config: SamplingConfig) -> Result<GaloisClass> {
    let (_, factors) = factor_q(f)?;
    if factors.iter().any(|(_, k)| *k > 1) {
        return Err(Error::RepeatedRoot);
    }
    let factors = factors
        .into_iter()
        .map(|(g, _)| {
            let label = if g.deg() == Some(1) {
                GroupLabel::Trivial
            } else {
                classify_irreducible(&g, config)?
            };
            Ok((g, label))
        })
        .collect::<Result<Vec<_>>>()?;
    let shape = factors.iter().map(|(g, _)| g.deg().unwrap()).collect();
    Ok(GaloisClass {
        label: GroupLabel::Reducible,
        order: compositum_order(&factors),
        solvable: factors.iter().all(|(_, l)| l.is_solvable()),
        reducible: Some(ReducibleInfo { factors, shape }),
    })
}

pub fn galois_group(f: &QPoly) -> Result<GaloisClass> {
    galois_group_with(f, SamplingConfig::default())
}

pub fn galois_group_with(f: &QPoly, config: SamplingConfig) -> Result<GaloisClass> {
    let n = match f.deg() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(n) if n > 5 => return cyclotomic_class(f).ok_or(Error::UnsupportedDegree(n)),
        Some(n) => n,
    };
    require_squarefree(f)?;
    match n {
        1 => Ok(GaloisClass::of(GroupLabel::Trivial)),
        2 => galois_group_quadratic(f),
        3 => galois_group_cubic(f),
        _ => {
            let (_, factors) = factor_q(f)?;
            if factors.len() == 1 {
                Ok(GaloisClass::of(classify_irreducible(f, config)?))
            } else {
                reducible_class_with(f, config)
            }
        }
    }
}

// Φ_p up to a scalar: Gal(ℚ(ζ_p)/ℚ) ≅ (ℤ/p)^×, cyclic of order p − 1
fn cyclotomic_class(f: &QPoly) -> Option<GaloisClass> {
    let p = f.deg()? as u64 + 1;
    let phi = crate::poly::cyclotomic_p(p).ok()?;
    (f.monic() == phi).then(|| GaloisClass::of(GroupLabel::Cyclic(p as usize - 1)))
}

/// Degree of the splitting field over ℚ.
pub fn splitting_degree(f: &QPoly) -> Result<usize> {
    Ok(galois_group(f)?.order)
}

pub fn is_solvable_by_radicals(f: &QPoly) -> Result<bool> {
    Ok(galois_group(f)?.solvable)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum MapCell {
    Reducible,
    C5,
    D5,
    F20,
    A5,
    S5,
    Unknown,
}

impl MapCell {
    pub const ALL: [MapCell; 7] = [
        MapCell::Reducible,
        MapCell::C5,
        MapCell::D5,
        MapCell::F20,
        MapCell::A5,
        MapCell::S5,
        MapCell::Unknown,
    ];

    pub fn rgb(self) -> (u8, u8, u8) {
        match self {
            MapCell::Reducible => (0, 0, 0),
            MapCell::C5 => (0, 0, 255),
            MapCell::D5 => (0, 128, 255),
            MapCell::F20 => (0, 255, 128),
            MapCell::A5 => (255, 128, 0),
            MapCell::S5 => (230, 230, 230),
            MapCell::Unknown => (255, 0, 255),
        }
    }
}

impl fmt::Display for MapCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Class of `x⁵ + a x + b`.
pub fn classify_trinomial(a: i64, b: i64, config: SamplingConfig) -> MapCell {
    let f = Poly::from_ints(&[b, a, 0, 0, 0, 1]);
    let irreducible = match factor_q(&f) {
        Ok((_, fs)) => fs.len() == 1 && fs[0].1 == 1,
        Err(_) => return MapCell::Unknown,
    };
    if !irreducible {
        return MapCell::Reducible;
    }
    match classify_irreducible(&f, config) {
        Ok(GroupLabel::C5) => MapCell::C5,
        Ok(GroupLabel::D5) => MapCell::D5,
        Ok(GroupLabel::F20) => MapCell::F20,
        Ok(GroupLabel::A5) => MapCell::A5,
        Ok(GroupLabel::S5) => MapCell::S5,
        _ => MapCell::Unknown,
    }
}

/// Classes of `x⁵ + a x + b` for `−R ≤ a, b ≤ R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuinticMap {
    pub range: i64,
    /// Row-major; row 0 is `b = R`, column 0 is `a = −R`.
    pub cells: Vec<MapCell>,
    pub counts: BTreeMap<MapCell, usize>,
}

impl QuinticMap {
    pub fn side(&self) -> usize {
        (2 * self.range + 1) as usize
    }

    fn index(range: i64, a: i64, b: i64) -> usize {
        let side = 2 * range + 1;
        ((range - b) * side + (a + range)) as usize
    }

    pub fn cell(&self, a: i64, b: i64) -> Option<MapCell> {
        if a.abs() > self.range || b.abs() > self.range {
            return None;
        }
        Some(self.cells[Self::index(self.range, a, b)])
    }

    /// Plain PPM (P3), one pixel per cell.
    pub fn to_ppm(&self) -> String {
        let side = self.side();
        let mut out = format!("P3\n{side} {side}\n255\n");
        for row in self.cells.chunks(side) {
            let line: Vec<String> = row
                .iter()
                .map(|c| {
                    let (r, g, b) = c.rgb();
                    format!("{r} {g} {b}")
                })
                .collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    fn from_cells(range: i64, cells: Vec<MapCell>) -> Self {
        let mut counts = BTreeMap::new();
        for &c in &cells {
            *counts.entry(c).or_insert(0) += 1;
        }
        QuinticMap {
            range,
            cells,
            counts,
        }
    }
}

fn map_coordinates(range: i64) -> Result<Vec<(i64, i64)>> {
    if !(0..=QUINTIC_MAP_LIMIT).contains(&range) {
        return Err(Error::BoundExceeded(format!(
            "range {range} outside 0..={QUINTIC_MAP_LIMIT}"
        )));
    }
    Ok((-range..=range)
        .rev()
        .flat_map(|b| (-range..=range).map(move |a| (a, b)))
        .collect())
}

pub fn quintic_map(range: i64, config: SamplingConfig) -> Result<QuinticMap> {
    let cells = map_coordinates(range)?
        .into_iter()
        .map(|(a, b)| classify_trinomial(a, b, config))
        .collect();
    Ok(QuinticMap::from_cells(range, cells))
}

/// [`quintic_map`] with cells evaluated on the rayon pool.
pub fn quintic_map_parallel(range: i64, config: SamplingConfig) -> Result<QuinticMap> {
    let cells = map_coordinates(range)?
        .into_par_iter()
        .map(|(a, b)| classify_trinomial(a, b, config))
        .collect();
    Ok(QuinticMap::from_cells(range, cells))
}

/// The `b` with `|b| ≤ bound` and `x⁵ + b` reducible: exactly the fifth powers.
pub fn reducible_pure_quintics(bound: i64) -> Vec<i64> {
    let mut out: Vec<i64> = (-bound..=bound)
        .filter(|&b| {
            let r = (b.unsigned_abs() as f64).powf(0.2).round() as i64;
            (r - 1..=r + 1).any(|k| k.pow(5) == b.abs())
        })
        .collect();
    out.sort_unstable();
    out
}
