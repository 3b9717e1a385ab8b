use super::*;
use crate::algebra::{generator, jm_element, AlgebraElement, BasisWord, Generator, JmMode, Permutation};
use crate::combinatorics::{enumerate_dpartitions, ContentArray, DPartition};
use crate::linalg::RepMatrix;
use crate::roots::XiOrder;
use crate::scalars::{CyclotomicNumber, LaurentPolynomial, RationalFunction};

fn dp(parts: &[&[usize]]) -> DPartition {
    DPartition::from_parts(parts).unwrap()
}

fn q(e: i64) -> RationalFunction {
    RationalFunction::q_pow(e)
}

#[test]
fn one_dimensional_reps() {
    let row = Representation::build(&dp(&[&[2]])).unwrap();
    assert_eq!(row.dim(), 1);
    assert_eq!(row.g_matrix(1).get(0, 0), &q(1));
    let col = Representation::build(&dp(&[&[1, 1]])).unwrap();
    assert_eq!(col.g_matrix(1).get(0, 0), &q(-1).neg());
}

#[test]
fn two_components_swap() {
    let rep = Representation::build(&dp(&[&[1], &[1]])).unwrap();
    let one = RationalFunction::one();
    let zero = RationalFunction::zero();
    assert_eq!(rep.g_matrix(1), &RepMatrix::from_rows(vec![vec![zero.clone(), one.clone()], vec![one, zero]]));
    assert_eq!(
        rep.t_matrix(1),
        &RepMatrix::diagonal(vec![RationalFunction::from_integer(1), RationalFunction::from_integer(-1)])
    );
    let e1 = generator(Generator::E(1), 2, 2).unwrap();
    assert!(rep.represent(&e1).unwrap().is_zero());
}

#[test]
fn empty_shape_rejected() {
    assert_eq!(Representation::build(&DPartition::empty(2)).unwrap_err(), crate::Error::EmptyShape);
}

#[test]
fn represent_is_a_homomorphism() {
    let (d, n) = (2, 3);
    let words = crate::algebra::all_basis_words(d, n);
    for shape in enumerate_dpartitions(d, n) {
        let rep = Representation::build(&shape).unwrap();
        assert_eq!(rep.represent(&AlgebraElement::one(d, n)).unwrap(), RepMatrix::identity(rep.dim()));
        for (k, a) in words.iter().enumerate().step_by(5) {
            let b = &words[(k * 7 + 3) % words.len()];
            let ea = AlgebraElement::basis(d, a.clone());
            let eb = AlgebraElement::basis(d, b.clone());
            let lhs = rep.represent(&(&ea * &eb)).unwrap();
            assert_eq!(lhs, rep.word_matrix(a).mul(&rep.word_matrix(b)), "{} {} {}", shape, a, b);
        }
        let g1 = rep.represent(&generator(Generator::G(1), d, n).unwrap()).unwrap();
        let e1g1 = rep.represent(&(&generator(Generator::E(1), d, n).unwrap() * &generator(Generator::G(1), d, n).unwrap())).unwrap();
        assert_eq!(g1.mul(&g1).sub(&e1g1.scale(&RationalFunction::q_minus_q_inv())), RepMatrix::identity(rep.dim()));
    }
}

#[test]
fn relations_hold_and_mutation_is_caught() {
    for (d, n) in [(1, 4), (2, 3), (3, 3)] {
        for shape in enumerate_dpartitions(d, n) {
            let rep = Representation::build(&shape).unwrap();
            let report = rep.verify_relations();
            assert!(report.passed(), "{}", report);
        }
    }
    let mut rep = Representation::build(&dp(&[&[2, 1], &[1]])).unwrap();
    let old = rep.g_matrix(1).get(0, 0).clone();
    rep.set_g_entry(1, 0, 0, old.add(&RationalFunction::one()));
    let report = rep.verify_relations();
    assert!(!report.passed());
    assert!(report.failures().any(|c| c.name == "quadratic g1"));
}

#[test]
fn jm_matrices_match_the_algebra() {
    for (d, n) in [(1, 3), (2, 3)] {
        for shape in enumerate_dpartitions(d, n) {
            let rep = Representation::build(&shape).unwrap();
            let js = rep.jm_matrices();
            assert_eq!(js[0], RepMatrix::identity(rep.dim()));
            for i in 1..=n {
                let ji = jm_element(i, d, n, JmMode::Explicit).unwrap();
                assert_eq!(rep.represent(&ji).unwrap(), js[i - 1]);
                if i < n {
                    let g = rep.g_matrix(i);
                    assert_eq!(js[i], g.mul(&js[i - 1]).mul(g));
                }
            }
        }
    }
    let row = Representation::build(&dp(&[&[2]])).unwrap();
    assert_eq!(row.jm_matrices()[1].get(0, 0), &q(2));
}

#[test]
fn spectrum_is_the_content_array() {
    for (d, n) in [(2, 3), (3, 2)] {
        let mut seen = std::collections::HashSet::new();
        let xi = XiOrder::standard(d);
        for rep in all_representations(d, n, &xi).unwrap() {
            let js = rep.jm_matrices();
            for (idx, t) in rep.tableaux().iter().enumerate() {
                let a = ContentArray::from_tableau(t).unwrap();
                let tuple: Vec<(RationalFunction, RationalFunction)> =
                    (0..n).map(|i| (rep.t_matrix(i + 1).get(idx, idx).clone(), js[i].get(idx, idx).clone())).collect();
                let expected: Vec<_> = (0..n)
                    .map(|i| (RationalFunction::from_cyclotomic(xi.xi(a.positions[i])), q(2 * a.content_exps[i])))
                    .collect();
                assert_eq!(tuple, expected);
                assert!(seen.insert(format!("{:?}", expected)));
            }
        }
    }
    assert!(jm_separation_check(1, 3));
    assert!(jm_separation_check(2, 2));
    assert!(jm_separation_check(4, 1));
}

#[test]
fn equal_position_neighbours_give_eps_q_eps() {
    for shape in enumerate_dpartitions(2, 4) {
        let rep = Representation::build(&shape).unwrap();
        for (col, t) in rep.tableaux().iter().enumerate() {
            for i in 1..4 {
                let diff = t.content_exp(i + 1) - t.content_exp(i);
                if t.position(i) == t.position(i + 1) && diff.abs() == 1 {
                    let g = rep.g_matrix(i);
                    let expected = q(diff).scale(&CyclotomicNumber::from_integer(diff));
                    assert_eq!(g.get(col, col), &expected);
                    assert!((0..rep.dim()).all(|r| r == col || g.get(r, col).is_zero()));
                }
            }
        }
    }
}

#[test]
fn characters() {
    let row = Representation::build(&dp(&[&[2]])).unwrap();
    let s1 = BasisWord::new(vec![0, 0], Permutation::from_one_line(&[2, 1]).unwrap());
    assert_eq!(row.character(&s1), q(1));
    let rep = Representation::build(&dp(&[&[2, 1], &[1]])).unwrap();
    assert_eq!(rep.character(&BasisWord::identity(4)), RationalFunction::from_integer(rep.dim() as i64));
    let t1 = BasisWord::new(vec![1, 0, 0, 0], Permutation::identity(4));
    // trace of diag(ξ_{p(T|1)}) counts tableaux by the position of 1
    let by_pos = rep.tableaux().iter().fold(RationalFunction::zero(), |acc, t| {
        acc.add(&RationalFunction::from_cyclotomic(CyclotomicNumber::root(2, t.position(1) as i64 - 1)))
    });
    assert_eq!(rep.character(&t1), by_pos);
}

#[test]
fn characters_separate_shapes() {
    for (d, n) in [(2, 2), (2, 3), (1, 4)] {
        let rows: Vec<_> =
            all_representations(d, n, &XiOrder::standard(d)).unwrap().iter().map(character_table_row).collect();
        for i in 0..rows.len() {
            for j in 0..i {
                assert_ne!(rows[i], rows[j]);
            }
        }
    }
}

#[test]
fn branching_examples() {
    let xi2 = XiOrder::standard(2);
    assert!(branching_check(&dp(&[&[2]]), &XiOrder::standard(1)).unwrap().passed());
    let r = branching_check(&dp(&[&[1], &[1]]), &xi2).unwrap();
    assert!(r.passed());
    assert_eq!(r.checks.len(), 2);
    for shape in enumerate_dpartitions(2, 3) {
        let r = branching_check(&shape, &xi2).unwrap();
        assert!(r.passed(), "{}", r);
        assert_eq!(r.checks.len(), 8);
    }
    assert!(branching_check(&dp(&[&[1], &[]]), &xi2).is_err());
}

#[test]
fn irreducible_by_commutant() {
    for (d, n) in [(1, 3), (2, 2), (2, 3)] {
        for shape in enumerate_dpartitions(d, n) {
            let rep = Representation::build(&shape).unwrap();
            assert_eq!(commutant_dimension(&rep), 1, "{}", shape);
        }
    }
}

#[test]
fn xi_order_is_a_relabelling() {
    let shape = dp(&[&[1], &[1], &[1]]);
    let std = Representation::build(&shape).unwrap();
    let other = Representation::new(&shape, &XiOrder::new(vec![3, 1, 2]).unwrap()).unwrap();
    assert!(other.verify_relations().passed());
    let b = BasisWord::new(vec![1, 0, 0], Permutation::identity(3));
    assert_eq!(std.character(&b), other.character(&b));
}

fn c_rf(e: i64) -> RationalFunction {
    q(e)
}

#[test]
fn affine_families() {
    let one = CyclotomicNumber::from_integer(1);
    let f1 = AffineY2Rep::new(2, &AffineFamily::OneDimensional { a: one.clone(), c: RationalFunction::one(), epsilon: 1 }).unwrap();
    assert_eq!(f1.g.get(0, 0), &q(1));
    assert_eq!(f1.x2.get(0, 0), &q(2));
    assert!(f1.verify().passed());

    let f3 = AffineY2Rep::new(
        2,
        &AffineFamily::IdempotentZero { a: one.clone(), b: CyclotomicNumber::from_integer(-1), c: RationalFunction::one(), d_eig: q(1) },
    )
    .unwrap();
    assert!(f3.e().is_zero());
    assert!(f3.verify().passed(), "{}", f3.verify());

    let f2 = AffineY2Rep::new(3, &AffineFamily::IdempotentOne { a: CyclotomicNumber::root(3, 1), c: c_rf(0), d_eig: c_rf(4) }).unwrap();
    assert_eq!(f2.e(), RepMatrix::identity(2));
    assert!(f2.verify().passed(), "{}", f2.verify());

    let rejected = AffineY2Rep::new(2, &AffineFamily::IdempotentOne { a: one.clone(), c: c_rf(1), d_eig: c_rf(3) });
    assert!(matches!(rejected, Err(crate::Error::BadParameters(_))));
    let same = AffineY2Rep::new(2, &AffineFamily::IdempotentZero { a: one.clone(), b: one.clone(), c: c_rf(0), d_eig: c_rf(1) });
    assert!(matches!(same, Err(crate::Error::BadParameters(_))));
    let not_root = AffineY2Rep::new(2, &AffineFamily::OneDimensional { a: CyclotomicNumber::root(3, 1), c: c_rf(0), epsilon: 1 });
    assert!(not_root.is_err());
    let c = RationalFunction::from_laurent(LaurentPolynomial::from_int_terms(&[(1, 1), (0, 2)]));
    let f2b = AffineY2Rep::new(2, &AffineFamily::IdempotentOne { a: one, c: c.clone(), d_eig: c.mul(&q(4)) }).unwrap();
    assert!(f2b.verify().passed());
}
