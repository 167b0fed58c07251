use galois_core::modp::{
    factor_over_fp, find_irreducible, irreducibles_of_degree, is_irreducible, multiplication_table,
    multiplicative_generator, multiplicative_order, verify_xq_minus_x, FieldOp, ModRing,
    PrimeField, QuotientField,
};
use galois_core::{Error, FiniteRing, Poly, Ring};

fn fp(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn field(p: u64, modulus: &[i64]) -> QuotientField<PrimeField> {
    QuotientField::new(fp(p), Poly::from_i64s(fp(p), modulus)).unwrap()
}

#[test]
fn f8_product() {
    let f8 = field(2, &[1, 1, 0, 1]);
    let a = f8.element_of(Poly::from_i64s(fp(2), &[1, 1, 1]));
    let b = f8.element_of(Poly::from_i64s(fp(2), &[0, 1, 1]));
    assert_eq!(a.arith(&b, FieldOp::Mul).unwrap().to_string(), "α^2");
    assert!(a.arith(&a, FieldOp::Div).unwrap().rep().is_one_poly());
}

trait OnePoly {
    fn is_one_poly(&self) -> bool;
}

impl OnePoly for Poly<PrimeField> {
    fn is_one_poly(&self) -> bool {
        *self == Poly::one(*self.ring())
    }
}

#[test]
fn f4_table() {
    let f4 = field(2, &[1, 1, 1]);
    let table = multiplication_table(&f4).unwrap();
    let shown: Vec<Vec<String>> = table
        .iter()
        .map(|row| row.iter().map(|e| f4.format_element(e)).collect())
        .collect();
    let expected = [
        ["0", "0", "0", "0"],
        ["0", "1", "α", "α+1"],
        ["0", "α", "α+1", "1"],
        ["0", "α+1", "1", "α"],
    ];
    assert_eq!(shown, expected);
    for row in &table[1..] {
        assert!(row.iter().any(|e| f4.is_one(e)));
    }
}

#[test]
fn small_tables() {
    assert_eq!(
        multiplication_table(&fp(2)).unwrap(),
        vec![vec![0, 0], vec![0, 1]]
    );
    let z4 = ModRing::new(4).unwrap();
    let t = multiplication_table(&z4).unwrap();
    assert_eq!(t[2], vec![0, 2, 0, 2]);
    assert!(!t[2].contains(&1));
    assert_eq!(z4.try_inverse(&2), None);
}

#[test]
fn quotient_field_errors() {
    let f4 = field(2, &[1, 1, 1]);
    let f8 = field(2, &[1, 1, 0, 1]);
    let zero = f4.embed(0);
    assert_eq!(
        f4.generator().arith(&zero, FieldOp::Div),
        Err(Error::DivisionByZero)
    );
    assert_eq!(
        f4.generator().arith(&f8.generator(), FieldOp::Add),
        Err(Error::FieldMismatch)
    );
    let reducible = Poly::from_i64s(fp(2), &[1, 0, 1]);
    assert!(matches!(
        QuotientField::new(fp(2), reducible),
        Err(Error::ReducibleModulus(_))
    ));
}

#[test]
fn factorisations() {
    let (lc, fs) = factor_over_fp(&Poly::from_i64s(fp(2), &[0, 1, 1])).unwrap();
    assert_eq!(lc, 1);
    assert_eq!(
        fs,
        vec![
            (Poly::from_i64s(fp(2), &[0, 1]), 1),
            (Poly::from_i64s(fp(2), &[1, 1]), 1)
        ]
    );
    let f = Poly::from_i64s(fp(2), &[1, 1, 0, 0, 1]);
    assert!(is_irreducible(&f).unwrap());
    assert_eq!(factor_over_fp(&f).unwrap().1, vec![(f.clone(), 1)]);
    let (_, fs) = factor_over_fp(&Poly::from_i64s(fp(5), &[2, 3, 1])).unwrap();
    assert_eq!(
        fs,
        vec![
            (Poly::from_i64s(fp(5), &[1, 1]), 1),
            (Poly::from_i64s(fp(5), &[2, 1]), 1)
        ]
    );
    // 3(x+1)²(x²+1) over 𝔽_7
    let g = Poly::from_i64s(fp(7), &[1, 1]);
    let h = Poly::from_i64s(fp(7), &[1, 0, 1]);
    let f = g.mul(&g).mul(&h).scale(&3);
    assert_eq!(factor_over_fp(&f).unwrap(), (3, vec![(g, 2), (h, 1)]));
}

#[test]
fn search_guard() {
    let big = fp(4_294_967_291);
    let f = Poly::from_i64s(big, &[1, 0, 0, 0, 1]);
    assert!(matches!(is_irreducible(&f), Err(Error::BoundExceeded(_))));
}

#[test]
fn irreducible_search() {
    assert_eq!(
        find_irreducible(&fp(2), 2).unwrap(),
        Poly::from_i64s(fp(2), &[1, 1, 1])
    );
    assert_eq!(irreducibles_of_degree(&fp(2), 2).unwrap().len(), 1);
    assert_eq!(find_irreducible(&fp(3), 1).unwrap(), Poly::x(fp(3)));
    // number of monic irreducible quartics over 𝔽_2 is 3
    assert_eq!(irreducibles_of_degree(&fp(2), 4).unwrap().len(), 3);
}

fn f9() -> QuotientField<PrimeField> {
    // α² = 2α + 1
    field(3, &[-1, -2, 1])
}

fn paper_cubic(f9: &QuotientField<PrimeField>) -> Poly<QuotientField<PrimeField>> {
    let alpha = f9.generator().rep().clone();
    let c1 = f9.add(&f9.mul(&f9.from_i64(2), &alpha), &f9.one());
    Poly::new(f9.clone(), vec![f9.one(), c1, f9.zero(), f9.one()])
}

#[test]
fn cubic_over_f9() {
    let f9 = f9();
    let g = paper_cubic(&f9);
    assert_eq!(g.to_string(), "x^3 + (2α+1)x + 1");
    assert!(is_irreducible(&g).unwrap());
    let first = find_irreducible(&f9, 3).unwrap();
    assert!(is_irreducible(&first).unwrap());
    assert!(irreducibles_of_degree(&f9, 3).unwrap().contains(&g));
}

#[test]
fn tower_of_order_729() {
    let f9 = f9();
    let big = QuotientField::with_var(f9.clone(), paper_cubic(&f9), "β").unwrap();
    assert_eq!(big.order(), 729);
    let mut seen = std::collections::HashSet::new();
    for i in 0..729 {
        let e = big.element(i);
        assert_eq!(big.index_of(&e), i);
        assert!(seen.insert(big.format_element(&e)));
    }
    assert_eq!(big.characteristic(), 3);
}

#[test]
fn generators() {
    assert_eq!(multiplicative_generator(&fp(5)).unwrap(), 2);
    assert_eq!(multiplicative_order(&fp(5), &4), 2);
    assert_eq!(multiplicative_generator(&fp(2)).unwrap(), 1);
    let f4 = field(2, &[1, 1, 1]);
    let g = multiplicative_generator(&f4).unwrap();
    assert_eq!(f4.format_element(&g), "α");
    assert_eq!(multiplicative_order(&f4, &g), 3);
}

#[test]
fn fields_are_splitting_fields_of_xq_minus_x() {
    assert!(verify_xq_minus_x(&field(2, &[1, 1, 0, 1])).unwrap());
    assert!(verify_xq_minus_x(&fp(2)).unwrap());
    let f27 = field(3, &[1, 2, 0, 1]);
    assert_eq!(f27.order(), 27);
    assert!(verify_xq_minus_x(&f27).unwrap());
}

#[test]
fn characteristic_is_least_summand_count() {
    for f in [
        field(2, &[1, 1, 1]),
        field(3, &[1, 2, 0, 1]),
        field(5, &[2, 0, 1]),
    ] {
        let p = f.characteristic();
        let mut acc = f.zero();
        for k in 1..=p {
            acc = f.add(&acc, &f.one());
            assert_eq!(f.is_zero(&acc), k == p);
        }
    }
}
