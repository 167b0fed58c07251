//! Subcommands. Each returns one JSON value for standard output.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use galois_core::construct::{
    angle_constructible, constructible_angles, ngon_constructible, number_necessary_test,
    number_necessary_test_degree, platonic_doubling, Solid,
};
use galois_core::exact::{BigInt, Rational};
use galois_core::galois::{
    galois_group_with, quintic_map, quintic_map_parallel, GaloisClass, SamplingConfig,
    DEFAULT_MAX_PRIMES,
};
use galois_core::irr::{is_irreducible_q, Witness};
use galois_core::modp::{
    factor_over_fp, find_irreducible, multiplication_table, multiplicative_generator,
    verify_xq_minus_x, ModRing, PrimeField, QuotientField,
};
use galois_core::numfield::{
    min_poly_of_element, number_field, primitive_element, tower_degree, TensorBasisField,
};
use galois_core::permgrp::{
    format_cycles, generate, is_simple, is_solvable, lattice, parse_cycles_on, PermGroup,
    LATTICE_LIMIT,
};
use galois_core::{FiniteRing, Poly, QPoly, RationalField, Ring};

use crate::parse::parse_poly;
use crate::CliError;

/// Environment variable overriding the prime cap for cycle-type sampling.
pub const MAX_PRIMES_ENV: &str = "GALOIS_MAX_PRIMES";

#[derive(Debug, Parser)]
#[command(name = "galois", version, about = "Exact computational Galois theory")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Irreducibility with a certificate, over ℚ or 𝔽_p
    Irr {
        #[arg(value_parser = poly_arg, allow_hyphen_values = true)]
        poly: QPoly,
        /// Work over 𝔽_p instead of ℚ
        #[arg(long = "mod", value_name = "P")]
        modulus: Option<u64>,
    },
    /// Monic gcd with Bézout cofactors a, b (a·f + b·g = gcd)
    Gcd {
        #[arg(value_parser = poly_arg, allow_hyphen_values = true)]
        f: QPoly,
        #[arg(value_parser = poly_arg, allow_hyphen_values = true)]
        g: QPoly,
        #[arg(long = "mod", value_name = "P")]
        modulus: Option<u64>,
    },
    /// Galois group of a squarefree polynomial of degree ≤ 5
    Group {
        #[arg(value_parser = poly_arg, allow_hyphen_values = true)]
        poly: QPoly,
    },
    /// Whether the polynomial is solvable by radicals
    Solvable {
        #[arg(value_parser = poly_arg, allow_hyphen_values = true)]
        poly: QPoly,
    },
    /// Minimum polynomial of an element of ℚ(α) or ℚ(α, β)
    Minpoly(MinpolyArgs),
    /// A finite field 𝔽_{p^d}, or the ring ℤ_n with --ring
    Ff(FfArgs),
    /// Constructibility of the regular n-gon
    Ngon { n: u64 },
    /// Constructibility of the angle qπ
    Angle(AngleArgs),
    /// Power-of-two degree test for a constructible number
    Constructible(ConstructibleArgs),
    /// Multiply permutations given in cycle notation
    Perm {
        /// Cycle products such as "(1,2)(1,2,4,3)", multiplied in order
        #[arg(required = true)]
        cycles: Vec<String>,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Subgroup lattice of a permutation group
    Lattice(LatticeArgs),
    /// Galois classes of x⁵ + ax + b over a square grid
    QuinticMap {
        #[arg(long, default_value_t = 40)]
        range: i64,
        /// Write the grid as a plain PPM image
        #[arg(long)]
        out: Option<PathBuf>,
        /// Classify cells on all cores
        #[arg(long)]
        parallel: bool,
    },
    /// Degree of a tower of extensions
    Tower {
        #[arg(required = true)]
        degrees: Vec<usize>,
        /// Order of the base field, to report the order of the top field
        #[arg(long)]
        base_order: Option<u64>,
    },
}

#[derive(Debug, Args)]
pub struct MinpolyArgs {
    /// Minimum polynomial f of α
    #[arg(value_parser = poly_arg, allow_hyphen_values = true)]
    pub modulus: QPoly,
    /// The element as a polynomial in x = α (default α)
    #[arg(long, value_parser = poly_arg, allow_hyphen_values = true)]
    pub element: Option<QPoly>,
    /// Minimum polynomial g of a second generator β; the element is then α + cβ
    #[arg(long, value_parser = poly_arg, allow_hyphen_values = true, conflicts_with = "element")]
    pub adjoin: Option<QPoly>,
    #[arg(long, requires = "adjoin", conflicts_with = "primitive")]
    pub c: Option<i64>,
    /// Search for the smallest c making α + cβ primitive
    #[arg(long, requires = "adjoin")]
    pub primitive: bool,
}

#[derive(Debug, Args)]
pub struct FfArgs {
    /// Characteristic p, or any modulus n with --ring
    pub p: u64,
    #[arg(long, default_value_t = 1)]
    pub degree: usize,
    /// Defining polynomial over 𝔽_p (default: the first irreducible)
    #[arg(long, value_parser = poly_arg, allow_hyphen_values = true, conflicts_with = "degree")]
    pub modulus: Option<QPoly>,
    /// ℤ_n as a ring, with no field checks
    #[arg(long, conflicts_with_all = ["degree", "modulus"])]
    pub ring: bool,
    /// Include addition and multiplication tables
    #[arg(long)]
    pub table: bool,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct AngleArgs {
    /// q in lowest or any terms, e.g. 2/9 for 2π/9
    #[arg(value_parser = rational_arg)]
    pub q: Option<Rational>,
    /// The angle in degrees
    #[arg(long, value_parser = rational_arg)]
    pub degrees: Option<Rational>,
    /// List n ≤ N with π/n constructible
    #[arg(long, value_name = "N")]
    pub list: Option<u64>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct ConstructibleArgs {
    /// Minimum polynomial of the number
    #[arg(value_parser = poly_arg, allow_hyphen_values = true)]
    pub poly: Option<QPoly>,
    /// Degree of the minimum polynomial
    #[arg(long)]
    pub degree: Option<usize>,
    /// Doubling the volume of a solid: cube, octahedron, dodecahedron, icosahedron, tesseract
    #[arg(long, value_parser = solid_arg)]
    pub solid: Option<Solid>,
}

#[derive(Debug, Args)]
pub struct LatticeArgs {
    /// s3, d4, d5, a4, s4, a5, c6, …
    #[arg(group = "source", required_unless_present = "gens")]
    pub name: Option<String>,
    /// Generators in cycle notation
    #[arg(long = "gen", value_name = "CYCLES", group = "source")]
    pub gens: Vec<String>,
    #[arg(long, requires = "gens")]
    pub degree: Option<usize>,
    /// Write the lattice in DOT format
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn poly_arg(s: &str) -> Result<QPoly, String> {
    parse_poly(s).map_err(|e| e.to_string())
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    let t = s.trim().replace('\u{2212}', "-");
    let (n, d) = t.split_once('/').unwrap_or((&t, "1"));
    let n: BigInt = n
        .trim()
        .parse()
        .map_err(|_| format!("not a rational: {s}"))?;
    let d: BigInt = d
        .trim()
        .parse()
        .map_err(|_| format!("not a rational: {s}"))?;
    if d == BigInt::from(0) {
        return Err("zero denominator".into());
    }
    Ok(Rational::new(n, d))
}

fn solid_arg(s: &str) -> Result<Solid, String> {
    s.parse().map_err(|e: galois_core::Error| e.to_string())
}

/// Sampling cap from [`MAX_PRIMES_ENV`], or the default.
pub fn sampling_config() -> Result<SamplingConfig, CliError> {
    match std::env::var(MAX_PRIMES_ENV) {
        Err(_) => Ok(SamplingConfig::default()),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(SamplingConfig { max_primes: n }),
            _ => Err(CliError::Usage(format!(
                "{MAX_PRIMES_ENV} must be a positive integer (default {DEFAULT_MAX_PRIMES}), got {v:?}"
            ))),
        },
    }
}

// ---------------------------------------------------------------------------
// JSON rendering

/// `{key: "string", key_coeffs: [...]}`, coefficients lowest degree first.
fn put_poly<R: Ring>(obj: &mut Map<String, Value>, key: &str, f: &Poly<R>) {
    obj.insert(key.into(), json!(f.to_string()));
    obj.insert(format!("{key}_coeffs"), coeffs_json(f));
}

fn coeffs_json<R: Ring>(f: &Poly<R>) -> Value {
    let r = f.ring();
    json!(f
        .coeffs()
        .iter()
        .map(|c| r.format_element(c))
        .collect::<Vec<_>>())
}

fn poly_json<R: Ring>(f: &Poly<R>) -> Value {
    json!({"poly": f.to_string(), "coeffs": coeffs_json(f)})
}

fn bigint_json(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::EisensteinPrime { p, shift } => {
            json!({"eisenstein": {"p": bigint_json(p), "shift": shift}})
        }
        Witness::ReductionPrime(p) => json!({"reduction": {"p": p}}),
        Witness::RationalRoot(r) => json!({"rational_root": r.to_string()}),
        Witness::FactorPair(g, h) => json!({"factor_pair": [poly_json(g), poly_json(h)]}),
        Witness::Exhausted => json!({"exhausted": true}),
    }
}

fn class_json(f: &QPoly, class: &GaloisClass) -> Value {
    let mut obj = Map::new();
    put_poly(&mut obj, "polynomial", f);
    obj.insert("group".into(), json!(class.label.to_string()));
    obj.insert("order".into(), json!(class.order));
    obj.insert("solvable".into(), json!(class.solvable));
    let reducible = class.reducible.as_ref().map(|info| {
        json!({
            "shape": info.shape,
            "factors": info.factors.iter().map(|(g, l)| {
                json!({"factor": g.to_string(), "coeffs": coeffs_json(g), "group": l.to_string()})
            }).collect::<Vec<_>>(),
        })
    });
    obj.insert("reducible".into(), json!(reducible));
    Value::Object(obj)
}

fn to_fp(f: &QPoly, field: PrimeField) -> Result<Poly<PrimeField>, CliError> {
    let p = BigInt::from(field.modulus());
    let reduce = |n: &BigInt| -> u64 {
        let r = ((n % &p) + &p) % &p;
        u64::try_from(&r).expect("reduced below p")
    };
    let coeffs = f
        .coeffs()
        .iter()
        .map(|c| {
            let den = reduce(c.denom());
            let inv = field
                .try_inverse(&den)
                .ok_or_else(|| CliError::Domain(format!("{p} divides a denominator of {f}")))?;
            Ok(field.mul(&reduce(c.numer()), &inv))
        })
        .collect::<Result<Vec<u64>, CliError>>()?;
    Ok(Poly::new(field, coeffs))
}

fn write_file(path: &PathBuf, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

// ---------------------------------------------------------------------------
// Dispatch

pub fn run(cmd: Command) -> Result<Value, CliError> {
    match cmd {
        Command::Irr { poly, modulus } => irr(&poly, modulus),
        Command::Gcd { f, g, modulus } => gcd(&f, &g, modulus),
        Command::Group { poly } => {
            let class = galois_group_with(&poly, sampling_config()?)?;
            Ok(class_json(&poly, &class))
        }
        Command::Solvable { poly } => {
            let class = galois_group_with(&poly, sampling_config()?)?;
            let mut obj = Map::new();
            put_poly(&mut obj, "polynomial", &poly);
            obj.insert("solvable".into(), json!(class.solvable));
            obj.insert("group".into(), json!(class.label.to_string()));
            Ok(Value::Object(obj))
        }
        Command::Minpoly(args) => minpoly(args),
        Command::Ff(args) => ff(args),
        Command::Ngon { n } => Ok(serde_json::to_value(ngon_constructible(n)?)?),
        Command::Angle(args) => angle(args),
        Command::Constructible(args) => {
            let verdict = match (args.poly, args.degree, args.solid) {
                (Some(f), _, _) => number_necessary_test(&f)?,
                (_, Some(d), _) => number_necessary_test_degree(d)?,
                (_, _, Some(s)) => platonic_doubling(s),
                _ => unreachable!("clap requires one argument"),
            };
            Ok(serde_json::to_value(verdict)?)
        }
        Command::Perm { cycles, degree } => perm(&cycles, degree),
        Command::Lattice(args) => lattice_cmd(args),
        Command::QuinticMap {
            range,
            out,
            parallel,
        } => {
            let config = sampling_config()?;
            let map = if parallel {
                quintic_map_parallel(range, config)?
            } else {
                quintic_map(range, config)?
            };
            if let Some(path) = &out {
                write_file(path, &map.to_ppm())?;
            }
            let counts: Map<String, Value> = map
                .counts
                .iter()
                .map(|(c, n)| (c.to_string(), json!(n)))
                .collect();
            Ok(json!({
                "range": range,
                "side": map.side(),
                "cells": map.cells.len(),
                "counts": counts,
                "out": out.map(|p| p.display().to_string()),
            }))
        }
        Command::Tower {
            degrees,
            base_order,
        } => {
            let degree = tower_degree(&degrees)?;
            let order = match base_order {
                Some(q) => Some(
                    u32::try_from(degree)
                        .ok()
                        .and_then(|d| q.checked_pow(d))
                        .ok_or_else(|| CliError::Domain(format!("{q}^{degree} overflows")))?,
                ),
                None => None,
            };
            Ok(json!({"steps": degrees, "degree": degree, "order": order}))
        }
    }
}

fn irr(f: &QPoly, modulus: Option<u64>) -> Result<Value, CliError> {
    let Some(p) = modulus else {
        let cert = is_irreducible_q(f)?;
        return Ok(json!({
            "verdict": cert.verdict.to_string(),
            "witness": witness_json(&cert.witness),
        }));
    };
    let field = PrimeField::new(p)?;
    let fp = to_fp(f, field)?;
    if fp.deg().unwrap_or(0) < 1 {
        return Err(CliError::Domain(format!("{f} is constant modulo {p}")));
    }
    let (lc, factors) = factor_over_fp(&fp)?;
    let irreducible = factors.len() == 1 && factors[0].1 == 1;
    let mut obj = Map::new();
    obj.insert(
        "verdict".into(),
        json!(if irreducible {
            "irreducible"
        } else {
            "reducible"
        }),
    );
    obj.insert("modulus".into(), json!(p));
    put_poly(&mut obj, "polynomial", &fp);
    obj.insert("leading".into(), json!(lc));
    obj.insert(
        "factors".into(),
        json!(factors
            .iter()
            .map(|(g, k)| json!({"factor": g.to_string(), "coeffs": coeffs_json(g), "multiplicity": k}))
            .collect::<Vec<_>>()),
    );
    Ok(Value::Object(obj))
}

fn gcd_json<R: galois_core::Field>(f: &Poly<R>, g: &Poly<R>) -> Result<Value, CliError> {
    let (d, a, b) = f.gcd_bezout(g)?;
    let mut obj = Map::new();
    put_poly(&mut obj, "gcd", &d);
    put_poly(&mut obj, "a", &a);
    put_poly(&mut obj, "b", &b);
    Ok(Value::Object(obj))
}

fn gcd(f: &QPoly, g: &QPoly, modulus: Option<u64>) -> Result<Value, CliError> {
    let mut out = match modulus {
        None => gcd_json(f, g)?,
        Some(p) => {
            let field = PrimeField::new(p)?;
            gcd_json(&to_fp(f, field)?, &to_fp(g, field)?)?
        }
    };
    out["modulus"] = json!(modulus);
    Ok(out)
}

fn minpoly(args: MinpolyArgs) -> Result<Value, CliError> {
    let mut obj = Map::new();
    match args.adjoin {
        None => {
            let k = number_field(args.modulus.clone())?;
            let rep = args.element.unwrap_or_else(|| QPoly::x(RationalField));
            let e = k.reduce(&rep);
            let m = min_poly_of_element(&k, &e)?;
            put_poly(&mut obj, "field", &args.modulus);
            obj.insert("element".into(), json!(k.format_element(&e)));
            obj.insert("field_degree".into(), json!(k.degree()));
            put_poly(&mut obj, "min_poly", &m);
            obj.insert("degree".into(), json!(m.deg()));
        }
        Some(g) => {
            let t = TensorBasisField::new(args.modulus.clone(), g.clone())?;
            put_poly(&mut obj, "alpha", &args.modulus);
            put_poly(&mut obj, "beta", &g);
            obj.insert(
                "field_degree".into(),
                json!(t.alpha_degree() * t.beta_degree()),
            );
            let (c, m) = if args.primitive {
                let pe = primitive_element(&t)?;
                (pe.c, pe.min_poly)
            } else {
                let c = args.c.unwrap_or(1);
                (c, min_poly_of_element(&t, &t.alpha_plus_c_beta(c))?)
            };
            obj.insert("c".into(), json!(c));
            obj.insert(
                "element".into(),
                json!(t.format_element(&t.alpha_plus_c_beta(c))),
            );
            put_poly(&mut obj, "min_poly", &m);
            obj.insert("degree".into(), json!(m.deg()));
        }
    }
    Ok(Value::Object(obj))
}

fn table_json<R: FiniteRing>(ring: &R, table: Vec<Vec<R::Element>>) -> Value {
    json!(table
        .iter()
        .map(|row| row
            .iter()
            .map(|e| ring.format_element(e))
            .collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn ff(args: FfArgs) -> Result<Value, CliError> {
    if args.ring {
        let ring = ModRing::new(args.p)?;
        let mut obj = json!({
            "ring": format!("Z_{}", args.p),
            "order": ring.order(),
            "is_field": galois_core::exact::is_prime(args.p),
        });
        if args.table {
            let els = ring.elements();
            obj["elements"] = json!(els
                .iter()
                .map(|e| ring.format_element(e))
                .collect::<Vec<_>>());
            obj["addition"] = table_json(&ring, galois_core::modp::addition_table(&ring)?);
            obj["multiplication"] = table_json(&ring, multiplication_table(&ring)?);
        }
        return Ok(obj);
    }
    let base = PrimeField::new(args.p)?;
    let modulus = match &args.modulus {
        Some(f) => to_fp(f, base)?,
        None => find_irreducible(&base, args.degree)?,
    };
    let field = QuotientField::new(base, modulus.clone())?;
    let mut obj = Map::new();
    obj.insert("p".into(), json!(args.p));
    obj.insert("degree".into(), json!(field.degree()));
    obj.insert("order".into(), json!(field.order()));
    put_poly(&mut obj, "modulus", &modulus);
    let generator = multiplicative_generator(&field)?;
    obj.insert("generator".into(), json!(field.format_element(&generator)));
    if field.order() <= galois_core::modp::TABLE_LIMIT {
        obj.insert("xq_minus_x".into(), json!(verify_xq_minus_x(&field)?));
    }
    if args.table {
        let els = field.elements();
        obj.insert(
            "elements".into(),
            json!(els
                .iter()
                .map(|e| field.format_element(e))
                .collect::<Vec<_>>()),
        );
        obj.insert(
            "addition".into(),
            table_json(&field, galois_core::modp::addition_table(&field)?),
        );
        obj.insert(
            "multiplication".into(),
            table_json(&field, multiplication_table(&field)?),
        );
    }
    Ok(Value::Object(obj))
}

fn angle(args: AngleArgs) -> Result<Value, CliError> {
    if let Some(max) = args.list {
        return Ok(json!({"max": max, "n": constructible_angles(max)}));
    }
    let q = match (args.q, args.degrees) {
        (Some(q), _) => q,
        (_, Some(d)) => d / Rational::from_integer(180.into()),
        _ => unreachable!("clap requires one argument"),
    };
    let verdict = angle_constructible(&q)?;
    let mut v = serde_json::to_value(verdict)?;
    v["angle_over_pi"] = json!(q.to_string());
    Ok(v)
}

fn perm(cycles: &[String], degree: Option<usize>) -> Result<Value, CliError> {
    let parsed = cycles
        .iter()
        .map(|c| parse_cycles_on(c, None))
        .collect::<Result<Vec<_>, _>>()?;
    let n = parsed
        .iter()
        .map(|p| p.degree())
        .max()
        .unwrap_or(1)
        .max(degree.unwrap_or(0));
    if degree.is_some_and(|d| d < n) {
        return Err(CliError::Domain(format!(
            "points exceed degree {}",
            degree.unwrap()
        )));
    }
    let mut acc = galois_core::permgrp::Permutation::identity(n);
    for p in &parsed {
        acc = acc.compose(&p.extend(n))?;
    }
    Ok(json!({
        "result": format_cycles(&acc),
        "degree": n,
        "images": acc.images(),
        "cycles": acc.cycles(),
        "cycle_type": acc.cycle_type(),
        "order": acc.order(),
        "even": acc.is_even(),
    }))
}

fn lattice_cmd(args: LatticeArgs) -> Result<Value, CliError> {
    let (label, g) = match &args.name {
        Some(name) => (name.clone(), PermGroup::named(name)?),
        None => {
            let gens = args
                .gens
                .iter()
                .map(|s| parse_cycles_on(s, None))
                .collect::<Result<Vec<_>, _>>()?;
            let n = gens
                .iter()
                .map(|p| p.degree())
                .max()
                .unwrap_or(1)
                .max(args.degree.unwrap_or(0));
            let gens: Vec<_> = gens.iter().map(|p| p.extend(n)).collect();
            (args.gens.join(" "), generate(&gens)?)
        }
    };
    if g.order() > LATTICE_LIMIT {
        return Err(CliError::Domain(format!(
            "group of order {} exceeds the lattice limit {LATTICE_LIMIT}",
            g.order()
        )));
    }
    let lat = lattice(&g)?;
    let names = lat.node_names();
    if let Some(path) = &args.out {
        write_file(path, &lat.to_dot())?;
    }
    let nodes: Vec<Value> = lat
        .subgroups
        .iter()
        .zip(&names)
        .map(|(h, name)| {
            json!({
                "name": name,
                "order": h.order(),
                "generators": h.generators().iter().map(format_cycles).collect::<Vec<_>>(),
            })
        })
        .collect();
    let edges: Vec<Value> = lat
        .edges
        .iter()
        .map(|&(i, j)| json!([names[i], names[j]]))
        .collect();
    Ok(json!({
        "group": label,
        "order": g.order(),
        "abelian": g.is_abelian(),
        "solvable": is_solvable(&g)?,
        "simple": is_simple(&g)?,
        "subgroups": nodes,
        "edges": edges,
        "out": args.out.map(|p| p.display().to_string()),
    }))
}
