use proptest::prelude::*;

use yokonuma_hecke::algebra::{all_basis_words, AlgebraElement, Permutation};
use yokonuma_hecke::combinatorics::{all_standard_dtableaux, enumerate_dpartitions, ContentArray};
use yokonuma_hecke::representations::Representation;
use yokonuma_hecke::scalars::{CyclotomicNumber, LaurentPolynomial, RationalFunction};
use yokonuma_hecke::Error;

fn laurent() -> impl Strategy<Value = LaurentPolynomial> {
    (prop::collection::vec((-3i64..=3, -3i64..=3), 0..4), 0i64..3).prop_map(|(terms, k)| {
        let p = LaurentPolynomial::from_int_terms(&terms);
        if k == 0 { p } else { p.scale(&CyclotomicNumber::root(3, k)) }
    })
}

fn ratfunc() -> impl Strategy<Value = RationalFunction> {
    (laurent(), laurent())
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

fn element(d: usize, n: usize) -> impl Strategy<Value = AlgebraElement> {
    let words = all_basis_words(d, n);
    let len = words.len();
    prop::collection::vec((0..len, -2i64..=2, -2i64..=2), 1..4).prop_map(move |terms| {
        AlgebraElement::from_terms(
            d,
            n,
            terms.into_iter().map(|(i, e, c)| (words[i].clone(), RationalFunction::from_laurent(LaurentPolynomial::from_int_terms(&[(e, c)])))),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        if !b.is_zero() {
            prop_assert_eq!(a.div(&b).unwrap().mul(&b), a.clone());
            prop_assert!(b.mul(&b.inv().unwrap()).is_one());
        } else {
            prop_assert_eq!(a.div(&b), Err(Error::DivideByZero));
        }
    }

    #[test]
    fn evaluation_is_multiplicative(a in ratfunc(), b in ratfunc(), k in 1i64..5) {
        let qbar = CyclotomicNumber::root(5, k);
        if let (Ok(x), Ok(y)) = (a.evaluate(&qbar), b.evaluate(&qbar)) {
            prop_assert_eq!(a.mul(&b).evaluate(&qbar).unwrap(), x.mul(&y));
            prop_assert_eq!(a.add(&b).evaluate(&qbar).unwrap(), x.add(&y));
        }
    }

    #[test]
    fn ratfunc_json_round_trip(a in ratfunc()) {
        let text = serde_json::to_string(&a).unwrap();
        let back: RationalFunction = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn cyclotomic_inverse(coeffs in prop::collection::vec(-4i64..=4, 4)) {
        let x = (0..4).fold(CyclotomicNumber::zero(5), |acc, i| acc.add(&CyclotomicNumber::root(5, i as i64).mul(&CyclotomicNumber::from_integer(coeffs[i]))));
        if !x.is_zero() {
            prop_assert!(x.mul(&x.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn multiplication_is_associative(a in element(2, 3), b in element(2, 3), c in element(2, 3)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!((&a * &b).tau(), (&b * &a).tau());
    }

    #[test]
    fn json_round_trip_of_elements(a in element(3, 2)) {
        let text = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(AlgebraElement::from_json(3, 2, &text).unwrap(), a);
    }

    #[test]
    fn represent_is_multiplicative(a in element(2, 3), b in element(2, 3), s in 0usize..10) {
        let shape = &enumerate_dpartitions(2, 3)[s];
        let rep = Representation::build(shape).unwrap();
        let lhs = rep.represent(&(&a * &b)).unwrap();
        prop_assert_eq!(lhs, rep.represent(&a).unwrap().mul(&rep.represent(&b).unwrap()));
    }

    #[test]
    fn reduced_words(images in Just((1..=5usize).collect::<Vec<_>>()).prop_shuffle()) {
        let w = Permutation::from_one_line(&images).unwrap();
        let inversions = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).filter(|&(i, j)| images[i] > images[j]).count();
        let word = w.reduced_word();
        prop_assert_eq!(word.len(), inversions);
        prop_assert_eq!(w.length(), inversions);
        prop_assert_eq!(Permutation::from_word(5, &word).unwrap(), w.clone());
        prop_assert_eq!(w.compose(&w.inverse()), Permutation::identity(5));
    }

    #[test]
    fn content_arrays_round_trip(d in 1usize..=3, n in 0usize..=5, pick in any::<prop::sample::Index>()) {
        let all = all_standard_dtableaux(d, n);
        let t = pick.get(&all);
        let a = ContentArray::from_tableau(t).unwrap();
        prop_assert!(a.is_content_array(d));
        prop_assert_eq!(&a.to_tableau(d).unwrap(), t);
    }
}
