use frobhom::combinatorics::Word;
use frobhom::rings::{
    generic_central_map, generic_linear_map, projection_sum_map, trace_map, CPolyRing, CPolynomial,
    CentralMap, FreeAlgebra, IntMatrix, Integers, MatrixRing, ModularIntegers, Monomial,
    NCPolynomial, ProductElem, ProductRing, Ring, VariableId,
};
use proptest::prelude::*;

fn check_axioms<R: Ring>(r: &R, a: &R::Elem, b: &R::Elem, c: &R::Elem) {
    let ab = r.mul(a, b).unwrap();
    assert_eq!(
        r.mul(&ab, c).unwrap(),
        r.mul(a, &r.mul(b, c).unwrap()).unwrap()
    );
    assert_eq!(
        r.add(&r.add(a, b).unwrap(), c).unwrap(),
        r.add(a, &r.add(b, c).unwrap()).unwrap()
    );
    assert_eq!(r.add(a, b).unwrap(), r.add(b, a).unwrap());
    let left = r.mul(a, &r.add(b, c).unwrap()).unwrap();
    assert_eq!(left, r.add(&ab, &r.mul(a, c).unwrap()).unwrap());
    let right = r.mul(&r.add(a, b).unwrap(), c).unwrap();
    assert_eq!(
        right,
        r.add(&r.mul(a, c).unwrap(), &r.mul(b, c).unwrap()).unwrap()
    );
    assert_eq!(&r.mul(a, &r.one()).unwrap(), a);
    assert_eq!(&r.mul(&r.one(), a).unwrap(), a);
    assert_eq!(&r.add(a, &r.zero()).unwrap(), a);
    assert!(r.is_zero(&r.add(a, &r.neg(a).unwrap()).unwrap()));
    assert_eq!(
        r.scale(3, a).unwrap(),
        r.add(a, &r.add(a, a).unwrap()).unwrap()
    );
    assert_eq!(r.scale(-1, a).unwrap(), r.neg(a).unwrap());
    if r.is_commutative() {
        assert_eq!(ab, r.mul(b, a).unwrap());
    }
}

fn matrix(d: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, d), d)
        .prop_map(|rows| IntMatrix::from_rows(rows).unwrap())
}

fn product(p: usize) -> impl Strategy<Value = ProductElem> {
    prop::collection::vec(-50i64..=50, p).prop_map(ProductElem::new)
}

fn cpoly() -> impl Strategy<Value = CPolynomial> {
    let monomial = prop::collection::vec((0usize..3, 1u32..3), 0..3).prop_map(|fs| {
        Monomial::from_factors(
            fs.into_iter()
                .map(|(v, e)| (VariableId::User(["u", "v", "w"][v].to_string()), e)),
        )
        .unwrap()
    });
    prop::collection::vec((monomial, -5i64..=5), 0..5)
        .prop_map(|terms| CPolynomial::from_terms(terms).unwrap())
}

fn ncpoly(k: usize) -> impl Strategy<Value = NCPolynomial> {
    let word = prop::collection::vec(0u32..k as u32, 0..4);
    prop::collection::vec((word, -5i64..=5), 0..5).prop_map(move |terms| {
        let mut p = NCPolynomial::zero(k);
        for (w, c) in terms {
            p = p
                .add(&NCPolynomial::word(k, Word::from_letters(w), c).unwrap())
                .unwrap();
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn integers(a in -1000i64..1000, b in -1000i64..1000, c in -1000i64..1000) {
        check_axioms(&Integers, &a, &b, &c);
    }

    #[test]
    fn modular(a in 0u64..97, b in 0u64..97, c in 0u64..97) {
        check_axioms(&ModularIntegers::new(97).unwrap(), &a, &b, &c);
    }

    #[test]
    fn matrices(a in matrix(2), b in matrix(2), c in matrix(2)) {
        check_axioms(&MatrixRing::new(2).unwrap(), &a, &b, &c);
    }

    #[test]
    fn matrices_3(a in matrix(3), b in matrix(3), c in matrix(3)) {
        check_axioms(&MatrixRing::new(3).unwrap(), &a, &b, &c);
    }

    #[test]
    fn products(a in product(3), b in product(3), c in product(3)) {
        check_axioms(&ProductRing::new(3), &a, &b, &c);
    }

    #[test]
    fn commutative_polynomials(a in cpoly(), b in cpoly(), c in cpoly()) {
        check_axioms(&CPolyRing, &a, &b, &c);
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
    }

    #[test]
    fn free_algebra(a in ncpoly(3), b in ncpoly(3), c in ncpoly(3)) {
        check_axioms(&FreeAlgebra::new(3), &a, &b, &c);
    }

    #[test]
    fn central_maps_are_additive(
        x in ncpoly(3), y in ncpoly(3),
        m in matrix(2), n in matrix(2),
        u in product(4), v in product(4),
        p in cpoly(), q in cpoly(),
    ) {
        additive(&generic_central_map(3), &x, &y);
        additive(&trace_map(2).unwrap(), &m, &n);
        additive(&projection_sum_map(4, &[1, 3]).unwrap(), &u, &v);
        additive(&generic_linear_map(), &p, &q);
    }
}

fn additive<S: Ring, T: Ring>(f: &CentralMap<S, T>, x: &S::Elem, y: &S::Elem) {
    let (s, t) = (f.source(), f.target());
    assert_eq!(
        f.apply(&s.add(x, y).unwrap()).unwrap(),
        t.add(&f.apply(x).unwrap(), &f.apply(y).unwrap()).unwrap()
    );
    assert_eq!(
        f.apply(&s.neg(x).unwrap()).unwrap(),
        t.neg(&f.apply(x).unwrap()).unwrap()
    );
}

#[test]
fn free_algebra_is_noncommutative() {
    let r = FreeAlgebra::new(2);
    let g = r.generators();
    assert_ne!(r.mul(&g[0], &g[1]).unwrap(), r.mul(&g[1], &g[0]).unwrap());
    assert!(!r.is_commutative());
    assert!(!MatrixRing::new(2).unwrap().is_commutative());
}

#[test]
fn generic_central_map_is_exactly_central_on_short_words() {
    let f = generic_central_map(3);
    let mut words = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..6 {
        let next: Vec<Word> = layer
            .iter()
            .flat_map(|w| (0..3).map(move |l| w.concat(&Word::letter(l))))
            .collect();
        words.extend(next.iter().cloned());
        layer = next;
    }
    let alg = *f.source();
    let elems: Vec<(usize, NCPolynomial)> = words
        .iter()
        .map(|w| (w.len(), NCPolynomial::word(3, w.clone(), 1).unwrap()))
        .collect();
    let mut pairs = 0;
    for (la, a) in &elems {
        for (lb, b) in &elems {
            if la + lb > 6 {
                continue;
            }
            let ab = f.apply(&alg.mul(a, b).unwrap()).unwrap();
            let ba = f.apply(&alg.mul(b, a).unwrap()).unwrap();
            assert_eq!(ab, ba);
            pairs += 1;
        }
    }
    // sum over total length L <= 6 of (L + 1) * 3^L
    assert_eq!(pairs, 7108);
}
