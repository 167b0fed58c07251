//! Permutations of `{1, …, n}` (n ≤ 8) and the groups they generate:
//! closure, subgroup lattices, normality, derived series, solubility and
//! simplicity by direct enumeration.
//!
//! Products compose right to left: `a.compose(&b)` applies `b` first.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_POINTS: usize = 8;

/// Largest group whose full subgroup lattice or simplicity is computed.
pub const LATTICE_LIMIT: usize = 60;

/// Largest group whose derived series is computed.
pub const SERIES_LIMIT: usize = 120;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-indexed images
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    /// From 1-indexed images: `images[i−1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > MAX_POINTS {
            return Err(Error::InvalidArgument(format!(
                "{n} points exceeds {MAX_POINTS}"
            )));
        }
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidArgument(format!(
                    "{images:?} is not a bijection"
                )));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&x| (x - 1) as u8).collect(),
        })
    }

    /// Product of the given cycles, composed right to left, on `n` points.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut p = Permutation::identity(n);
        for c in cycles.iter().rev() {
            p = Permutation::cycle(n, c)?.compose(&p)?;
        }
        Ok(p)
    }

    fn cycle(n: usize, points: &[usize]) -> Result<Self> {
        let mut p = Permutation::identity(n);
        let mut seen = HashSet::new();
        for (i, &a) in points.iter().enumerate() {
            if a == 0 || a > n {
                return Err(Error::InvalidArgument(format!("point {a} outside 1..={n}")));
            }
            if !seen.insert(a) {
                return Err(Error::InvalidArgument(format!(
                    "point {a} repeated in a cycle"
                )));
            }
            let b = points[(i + 1) % points.len()];
            p.images[a - 1] = (b - 1) as u8;
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 1-indexed images.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    /// Image of the 1-indexed point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_unchecked(other))
    }

    fn compose_unchecked(&self, other: &Self) -> Self {
        Permutation {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u8;
        }
        Permutation { images }
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        (0..e.unsigned_abs()).fold(Permutation::identity(self.degree()), |acc, _| {
            base.compose_unchecked(&acc)
        })
    }

    /// Same permutation on `n ≥ degree` points.
    pub fn extend(&self, n: usize) -> Self {
        let mut images = self.images.clone();
        images.extend(self.degree() as u8..n as u8);
        Permutation { images }
    }

    /// Disjoint cycles of length ≥ 2, each starting at its smallest point,
    /// sorted by first point. 1-indexed.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut c = Vec::new();
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                c.push(j + 1);
                j = self.images[j] as usize;
            }
            out.push(c);
        }
        out
    }

    /// Cycle lengths including fixed points, descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        let moved: usize = t.iter().sum();
        t.extend(std::iter::repeat_n(1, self.degree() - moved));
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn order(&self) -> usize {
        self.cycles().iter().map(Vec::len).fold(1, num_integer::lcm)
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// Applies the letters of `word` in reading order starting from `self`:
    /// the result is `w_k ∘ ⋯ ∘ w_1 ∘ self`. This is the path product of a
    /// Cayley graph read left to right.
    pub fn apply_word(&self, word: &[Permutation]) -> Result<Self> {
        word.iter().try_fold(self.clone(), |acc, w| w.compose(&acc))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("id");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

pub fn format_cycles(p: &Permutation) -> String {
    p.to_string()
}

/// Parses cycle notation such as `(1,2)(1,2,4,3)`; adjacent cycles are
/// multiplied right to left. `""` and `"id"` are the identity. The degree is
/// the largest point mentioned unless `degree` is given.
pub fn parse_cycles_on(s: &str, degree: Option<usize>) -> Result<Permutation> {
    let err = |offset: usize, message: &str| Error::CycleSyntax {
        offset,
        message: message.to_string(),
    };
    let trimmed = s.trim();
    if trimmed.is_empty() || trimmed == "id" || trimmed == "()" {
        return Ok(Permutation::identity(degree.unwrap_or(1)));
    }
    let bytes = s.as_bytes();
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b if b.is_ascii_whitespace() => i += 1,
            b'(' => {
                i += 1;
                let mut cur = Vec::new();
                loop {
                    while i < bytes.len() && bytes[i].is_ascii_whitespace() {
                        i += 1;
                    }
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if start == i {
                        return Err(err(i, "expected a point"));
                    }
                    let v: usize = s[start..i].parse().map_err(|_| err(start, "bad number"))?;
                    if v == 0 {
                        return Err(err(start, "points start at 1"));
                    }
                    if cur.contains(&v) {
                        return Err(err(start, "repeated point"));
                    }
                    cur.push(v);
                    while i < bytes.len() && bytes[i].is_ascii_whitespace() {
                        i += 1;
                    }
                    match bytes.get(i) {
                        Some(b',') => i += 1,
                        Some(b')') => {
                            i += 1;
                            break;
                        }
                        _ => return Err(err(i, "expected ',' or ')'")),
                    }
                }
                cycles.push(cur);
            }
            _ => return Err(err(i, "expected '('")),
        }
    }
    let max = cycles.iter().flatten().copied().max().unwrap_or(1);
    let n = degree.unwrap_or(max);
    if max > n {
        return Err(err(0, &format!("point {max} exceeds degree {n}")));
    }
    let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
    Permutation::from_cycles(n, &refs)
}

pub fn parse_cycles(s: &str) -> Result<Permutation> {
    parse_cycles_on(s, None)
}

/// A permutation group with its full element list (sorted).
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

/// Closure of `gens` under composition, breadth first from the identity.
pub fn generate(gens: &[Permutation]) -> Result<PermGroup> {
    let n = gens
        .first()
        .map(Permutation::degree)
        .ok_or_else(|| Error::InvalidArgument("at least one generator is required".into()))?;
    generate_on(n, gens)
}

/// Like [`generate`], on `n` points; an empty generator list gives the
/// trivial group.
pub fn generate_on(n: usize, gens: &[Permutation]) -> Result<PermGroup> {
    if n > MAX_POINTS {
        return Err(Error::InvalidArgument(format!(
            "{n} points exceeds {MAX_POINTS}"
        )));
    }
    if let Some(g) = gens.iter().find(|g| g.degree() != n) {
        return Err(Error::DegreeMismatch(n, g.degree()));
    }
    let id = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.compose_unchecked(&x);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let mut elements: Vec<Permutation> = seen.into_iter().collect();
    elements.sort();
    Ok(PermGroup {
        degree: n,
        generators: gens.to_vec(),
        elements,
    })
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

impl PermGroup {
    pub fn trivial(n: usize) -> Self {
        generate_on(n, &[]).expect("small degree")
    }

    pub fn symmetric(n: usize) -> Result<Self> {
        match n {
            0 | 1 => Ok(Self::trivial(1)),
            2 => generate(&[Permutation::from_cycles(2, &[&[1, 2]])?]),
            _ => generate(&[
                Permutation::from_cycles(n, &[&[1, 2]])?,
                Permutation::from_cycles(n, &[&(1..=n).collect::<Vec<_>>()])?,
            ]),
        }
    }

    /// Generated by the 3-cycles `(1,2,k)`.
    pub fn alternating(n: usize) -> Result<Self> {
        if n < 3 {
            return Ok(Self::trivial(n.max(1)));
        }
        let gens = (3..=n)
            .map(|k| Permutation::from_cycles(n, &[&[1, 2, k]]))
            .collect::<Result<Vec<_>>>()?;
        generate(&gens)
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        if n <= 1 {
            return Ok(Self::trivial(1));
        }
        generate(&[Permutation::from_cycles(
            n,
            &[&(1..=n).collect::<Vec<_>>()],
        )?])
    }

    /// Symmetries of the regular `n`-gon with vertices `1..=n`, order `2n`.
    pub fn dihedral(n: usize) -> Result<Self> {
        let rotation = Permutation::from_cycles(n, &[&(1..=n).collect::<Vec<_>>()])?;
        // reflection fixing vertex 1: k ↦ n + 2 − k
        let images: Vec<usize> = (1..=n)
            .map(|k| if k == 1 { 1 } else { n + 2 - k })
            .collect();
        generate(&[rotation, Permutation::from_images(&images)?])
    }

    /// Groups by name: `s3`, `a5`, `d4`, `c6`, `c_6`, …
    pub fn named(name: &str) -> Result<Self> {
        let lower = name.to_ascii_lowercase();
        let (kind, num) = lower.split_at(1);
        let num = num.trim_start_matches('_');
        let n: usize = num
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("unknown group {name}")))?;
        if n == 0 || n > MAX_POINTS {
            return Err(Error::InvalidArgument(format!("unknown group {name}")));
        }
        match kind {
            "s" => Self::symmetric(n),
            "a" => Self::alternating(n),
            "c" => Self::cyclic(n),
            "d" if n >= 3 => Self::dihedral(n),
            _ => Err(Error::InvalidArgument(format!("unknown group {name}"))),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_subgroup_of(&self, g: &PermGroup) -> bool {
        self.degree == g.degree && self.elements.iter().all(|x| g.contains(x))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|a| {
            self.generators
                .iter()
                .all(|b| a.compose_unchecked(b) == b.compose_unchecked(a))
        })
    }

    /// `true` if `n!` is divisible by the order, as Lagrange requires.
    pub fn order_divides_factorial(&self) -> bool {
        factorial(self.degree).is_multiple_of(self.order())
    }

    fn smallest_generating_set(degree: usize, elements: &[Permutation]) -> Vec<Permutation> {
        let mut gens: Vec<Permutation> = Vec::new();
        let mut span = Self::trivial(degree);
        for x in elements {
            if !span.contains(x) {
                gens.push(x.clone());
                span = generate_on(degree, &gens).expect("same degree");
            }
        }
        gens
    }

    fn from_elements(degree: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort();
        let generators = Self::smallest_generating_set(degree, &elements);
        PermGroup {
            degree,
            generators,
            elements,
        }
    }
}

/// `H ⊴ G`: `H ≤ G` and `g h g⁻¹ ∈ H` for generators `g` of `G`, `h` of `H`.
pub fn is_normal(h: &PermGroup, g: &PermGroup) -> bool {
    if !h.is_subgroup_of(g) {
        return false;
    }
    g.generators.iter().all(|x| {
        let xi = x.inverse();
        h.generators
            .iter()
            .all(|y| h.contains(&x.compose_unchecked(y).compose_unchecked(&xi)))
    })
}

/// `[G, G]`, generated by all commutators `a⁻¹b⁻¹ab`.
pub fn commutator_subgroup(g: &PermGroup) -> Result<PermGroup> {
    if g.order() > SERIES_LIMIT {
        return Err(Error::BoundExceeded(format!(
            "|G| = {} exceeds {SERIES_LIMIT}",
            g.order()
        )));
    }
    let mut comms: HashSet<Permutation> = HashSet::new();
    for a in &g.elements {
        let ai = a.inverse();
        for b in &g.elements {
            let c = ai
                .compose_unchecked(&b.inverse())
                .compose_unchecked(a)
                .compose_unchecked(b);
            if !c.is_identity() {
                comms.insert(c);
            }
        }
    }
    let mut comms: Vec<Permutation> = comms.into_iter().collect();
    comms.sort();
    let closure = generate_on(g.degree, &comms)?;
    Ok(PermGroup::from_elements(g.degree, closure.elements))
}

/// `G ⊵ G' ⊵ G'' ⊵ …` until it stabilises.
pub fn derived_series(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let mut series = vec![g.clone()];
    loop {
        let last = series.last().unwrap();
        let next = commutator_subgroup(last)?;
        if next == *last {
            return Ok(series);
        }
        series.push(next);
    }
}

pub fn is_solvable(g: &PermGroup) -> Result<bool> {
    Ok(derived_series(g)?.last().unwrap().is_trivial())
}

/// Smallest normal subgroup containing `x`.
pub fn normal_closure(x: &Permutation, g: &PermGroup) -> Result<PermGroup> {
    let conj: HashSet<Permutation> = g
        .elements
        .iter()
        .map(|y| y.compose_unchecked(x).compose_unchecked(&y.inverse()))
        .collect();
    let mut conj: Vec<Permutation> = conj.into_iter().collect();
    conj.sort();
    generate_on(g.degree, &conj)
}

/// Nontrivial, and the normal closure of every non-identity element is `G`.
pub fn is_simple(g: &PermGroup) -> Result<bool> {
    if g.order() > LATTICE_LIMIT {
        return Err(Error::BoundExceeded(format!(
            "|G| = {} exceeds {LATTICE_LIMIT}",
            g.order()
        )));
    }
    if g.is_trivial() {
        return Ok(false);
    }
    for x in g.elements.iter().filter(|x| !x.is_identity()) {
        if normal_closure(x, g)?.order() != g.order() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All subgroups with the covering relations between them.
#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    /// Sorted by order, then by element list.
    pub subgroups: Vec<PermGroup>,
    /// `(i, j)`: `subgroups[i]` is a maximal proper subgroup of `subgroups[j]`.
    pub edges: Vec<(usize, usize)>,
}

// subsets of G as bitmasks over the sorted element list
struct Indexed<'a> {
    g: &'a PermGroup,
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl<'a> Indexed<'a> {
    fn new(g: &'a PermGroup) -> Self {
        let index: HashMap<&Permutation, usize> =
            g.elements.iter().enumerate().map(|(i, x)| (x, i)).collect();
        let table = g
            .elements
            .iter()
            .map(|a| {
                g.elements
                    .iter()
                    .map(|b| index[&a.compose_unchecked(b)])
                    .collect()
            })
            .collect();
        let identity = index[&Permutation::identity(g.degree)];
        Indexed { g, table, identity }
    }

    fn closure(&self, gens: u128) -> u128 {
        let gen_list: Vec<usize> = (0..self.g.order())
            .filter(|&i| gens >> i & 1 == 1)
            .collect();
        let mut mask = 1u128 << self.identity;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &s in &gen_list {
                let y = self.table[s][x];
                if mask >> y & 1 == 0 {
                    mask |= 1 << y;
                    queue.push_back(y);
                }
            }
        }
        mask
    }

    fn group(&self, mask: u128) -> PermGroup {
        let els = (0..self.g.order())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| self.g.elements[i].clone())
            .collect();
        PermGroup::from_elements(self.g.degree, els)
    }
}

fn enumerate_subgroup_masks(ix: &Indexed) -> Vec<u128> {
    let mut all: Vec<u128> = Vec::new();
    let mut known: HashSet<u128> = HashSet::new();
    for i in 0..ix.g.order() {
        let m = ix.closure(1 << i);
        if known.insert(m) {
            all.push(m);
        }
    }
    let mut fresh = all.clone();
    while !fresh.is_empty() {
        let mut next = Vec::new();
        for &a in &fresh {
            for b in all.clone() {
                let j = ix.closure(a | b);
                if known.insert(j) {
                    next.push(j);
                    all.push(j);
                }
            }
        }
        fresh = next;
    }
    all
}

/// Every subgroup of `g`, found by closing cyclic subgroups under joins.
pub fn subgroups(g: &PermGroup) -> Result<Vec<PermGroup>> {
    Ok(lattice(g)?.subgroups)
}

pub fn lattice(g: &PermGroup) -> Result<SubgroupLattice> {
    if g.order() > LATTICE_LIMIT {
        return Err(Error::BoundExceeded(format!(
            "|G| = {} exceeds {LATTICE_LIMIT}",
            g.order()
        )));
    }
    let ix = Indexed::new(g);
    let mut masks = enumerate_subgroup_masks(&ix);
    masks.sort_by_key(|&m| (m.count_ones(), m.reverse_bits()));
    let subset = |a: u128, b: u128| a != b && a & b == a;
    let mut edges = Vec::new();
    for (i, &a) in masks.iter().enumerate() {
        for (j, &b) in masks.iter().enumerate() {
            if subset(a, b) && !masks.iter().any(|&c| subset(a, c) && subset(c, b)) {
                edges.push((i, j));
            }
        }
    }
    Ok(SubgroupLattice {
        subgroups: masks.into_iter().map(|m| ix.group(m)).collect(),
        edges,
    })
}

impl SubgroupLattice {
    /// Node names `"<order>.<k>"`, with `k` counting subgroups of that order.
    pub fn node_names(&self) -> Vec<String> {
        let mut counts: HashMap<usize, usize> = HashMap::new();
        self.subgroups
            .iter()
            .map(|h| {
                let k = counts.entry(h.order()).or_insert(0);
                let name = format!("{}.{}", h.order(), k);
                *k += 1;
                name
            })
            .collect()
    }

    /// `graph lattice { "a" -- "b"; … }`, smaller subgroup first on each edge.
    pub fn to_dot(&self) -> String {
        let names = self.node_names();
        let mut out = String::from("graph lattice {\n");
        for name in &names {
            out.push_str(&format!("  \"{name}\";\n"));
        }
        for &(i, j) in &self.edges {
            out.push_str(&format!("  \"{}\" -- \"{}\";\n", names[i], names[j]));
        }
        out.push_str("}\n");
        out
    }
}
