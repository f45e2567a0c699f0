//! Worked examples with frozen expected values. Values not taken from the
//! published examples were computed with the oracles in `common` (and
//! cross-checked with an independent CAS) before being frozen here.

mod common;

use common::*;
use wedgekit::combinadics::{binomial, enumerate_subsets, rank, unrank, IndexSet};
use wedgekit::cramer::{solve, solve_by_cross, solve_component, LinearSystem};
use wedgekit::matrix::{det, Matrix, Vector};
use wedgekit::reversing::{exchange_det, prop3_sign, reverse_matrix, SignParity};
use wedgekit::wedge::{cross, det_via_wedge, wedge, wedge_k1, WedgeVector};
use wedgekit::Rational;

fn v(xs: &[i64]) -> Vector<Rational> {
    Vector::from_i64(xs)
}

fn m(rows: &[&[i64]]) -> Matrix<Rational> {
    Matrix::from_i64(rows).unwrap()
}

const SIX: [&[i64]; 6] = [
    &[3, -1, 4, 1, -5, 9],
    &[2, 6, -5, 3, 5, -8],
    &[9, 7, -9, 3, 2, 3],
    &[8, -4, 6, 2, 6, 4],
    &[3, 3, -8, 3, 2, 7],
    &[9, 5, 0, -2, 8, 8],
];

#[test]
fn subset_counts_and_ranks() {
    assert_eq!(binomial(5, 3).unwrap(), 10);
    assert_eq!(binomial(5, 2).unwrap(), 10);
    assert_eq!(binomial(12, 6).unwrap(), 924);
    let r = |xs: &[usize]| rank(&IndexSet::new(xs, 5).unwrap()).unwrap();
    assert_eq!(r(&[2, 3, 4]), 7);
    assert_eq!(r(&[3, 4, 5]), 10);
    assert_eq!(r(&[2, 5]), 7);
    assert_eq!(r(&[3, 5]), 9);
    assert_eq!(unrank(7, 5, 3).unwrap().one_based(), [2, 3, 4]);
}

#[test]
fn enumeration_matches_bitmask_oracle() {
    for n in 1..=10 {
        for k in 1..=n {
            let ours: Vec<Vec<usize>> = enumerate_subsets(n, k)
                .unwrap()
                .iter()
                .map(|s| s.zero_based().to_vec())
                .collect();
            assert_eq!(ours, brute_subsets(n, k), "n={n} k={k}");
        }
    }
}

#[test]
fn worked_exterior_products() {
    let w = wedge(&[v(&[2, 3, -1, 5]), v(&[4, 7, 2, 0])]).unwrap();
    assert_eq!(w.components(), &v(&[-10, 35, 13, 20, 8, -2]));
    let w = wedge(&[v(&[5, -1, 3, 2]), v(&[0, 2, 7, 4])]).unwrap();
    assert_eq!(w.components(), &v(&[-2, 8, -13, -20, 35, -10]));
}

#[test]
fn plucker_example_against_direct_minors() {
    let u = m(&[&[2, 3, -1, 5], &[4, 7, 2, 0]]);
    let expected = oracle_plucker(&rows_of(&u));
    assert_eq!(expected, int_rows(&[vec![2, 8, -20, 13, -35, -10]])[0]);
    let w = wedge(&u.row_vectors()).unwrap();
    assert_eq!(w.to_plucker().entries(), expected.as_slice());
    assert_eq!(WedgeVector::from_plucker(4, 2, &w.to_plucker()).unwrap(), w);
}

#[test]
fn cross_examples() {
    let rows = [v(&[1, 2, 3]), v(&[4, 5, 6])];
    let oracle = oracle_cross(&int_rows(&[vec![1, 2, 3], vec![4, 5, 6]]));
    assert_eq!(oracle, int_rows(&[vec![-3, 6, -3]])[0]);
    assert_eq!(cross(&rows).unwrap(), v(&[-3, 6, -3]));
}

#[test]
fn six_by_six_determinant() {
    let a = m(&SIX);
    assert_eq!(cofactor_det(&rows_of(&a)), q(340_956));
    assert_eq!(det(&a).unwrap(), q(340_956));
    let five = m(&[
        &[2, -3, 1, 0, 5],
        &[4, 1, -2, 7, -1],
        &[0, 3, 3, -4, 2],
        &[-6, 2, 1, 1, 0],
        &[5, -5, 4, 2, 3],
    ]);
    assert_eq!(det_via_wedge(&five).unwrap(), q(-6160));
    assert_eq!(cofactor_det(&rows_of(&five)), q(-6160));
}

#[test]
fn six_by_six_cramer() {
    let a = m(&SIX);
    let b = v(&[1, -2, 3, -4, 5, -6]);
    let sys = LinearSystem::from_matrix(&a, b.clone()).unwrap();
    let frac = |p: i64, d: i64| Rational::new(p.into(), d.into());
    let expected = vec![
        frac(-15, 3157),
        frac(-1795, 3157),
        frac(-21520, 28413),
        frac(7072, 28413),
        frac(-4174, 9471),
        frac(3229, 28413),
    ];
    assert_eq!(gauss_solve(&rows_of(&a), b.entries()).unwrap(), expected);
    assert_eq!(solve(&sys).unwrap().entries(), expected.as_slice());
    assert_eq!(solve_by_cross(&sys).unwrap().entries(), expected.as_slice());
    for (i, e) in expected.iter().enumerate() {
        assert_eq!(&solve_component(&sys, i + 1).unwrap(), e);
    }
}

#[test]
fn two_by_two_system() {
    let sys = LinearSystem::new(vec![v(&[2, 1]), v(&[1, 3])], v(&[5, 10])).unwrap();
    assert_eq!(
        gauss_solve(&int_rows(&[vec![2, 1], vec![1, 3]]), &[q(5), q(10)]).unwrap(),
        vec![q(1), q(3)]
    );
    assert_eq!(solve(&sys).unwrap(), v(&[1, 3]));
}

#[test]
fn k1_even_form() {
    assert_eq!(
        wedge_k1(&v(&[3, 1, 4, 1])).unwrap().components(),
        &v(&[1, -4, 1, -3])
    );
}

#[test]
fn reversal_examples() {
    let u = m(&[&[2, 3, -1, 5], &[4, 7, 2, 0]]);
    assert_eq!(reverse_matrix(&u), m(&[&[5, -1, 3, 2], &[0, 2, 7, 4]]));
    assert_eq!(exchange_det(1).unwrap(), SignParity::Plus);
    assert_eq!(prop3_sign(2).unwrap(), SignParity::Minus);
    assert_eq!(prop3_sign(3).unwrap(), SignParity::Minus);
}
