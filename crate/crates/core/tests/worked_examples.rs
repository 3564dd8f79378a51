mod common;

use common::*;
use parsigame::{
    balanced_lottery, build_incidence_matrix, check_axioms, determinant, full_verify, is_self_twin,
    modified_transpose, twin_game, Rational,
};

#[test]
fn first_example_matrices() {
    let g = game(&[3, 1, 2, 2]);
    let a = build_incidence_matrix(&g);
    assert_eq!(a.to_string(), EX1_A);
    assert_eq!(a.transpose().to_string(), EX1_A_TRANSPOSED);
    assert_eq!(modified_transpose(&a).to_string(), EX1_A_TAU);

    let pair = twin_game(&g).unwrap();
    assert_eq!(pair.a_transposed, parse_matrix(EX1_A_TRANSPOSED));
    assert_eq!(pair.a_tau, parse_matrix(EX1_A_TAU));
    assert_eq!(build_incidence_matrix(&pair.twin), parse_matrix(EX1_A_TAU));
    assert_eq!(pair.twin.quota(), 26);
}

#[test]
fn second_example_matrices() {
    let g = game(&[3, 1, 1, 3]);
    let a = build_incidence_matrix(&g);
    assert_eq!(a.to_string(), EX2_A);
    assert_eq!(a.transpose().to_string(), EX2_A_TRANSPOSED);
    assert_eq!(modified_transpose(&a).to_string(), EX2_A_TAU);
    assert_eq!(modified_transpose(&a), a);
    let pair = twin_game(&g).unwrap();
    assert_eq!(pair.twin, g);
    assert!(is_self_twin(&g));
}

#[test]
fn example_determinants() {
    assert_eq!(determinant(&parse_matrix(EX1_A)).unwrap(), 26);
    assert_eq!(determinant(&parse_matrix(EX1_A_TRANSPOSED)).unwrap(), 26);
    assert_eq!(determinant(&parse_matrix(EX1_A_TAU)).unwrap(), 26);
    assert_eq!(determinant(&parse_matrix(EX2_A)).unwrap(), 25);
}

#[test]
fn example_lotteries() {
    let l = balanced_lottery(&game(&[3, 1, 2, 2])).unwrap();
    assert_eq!(l.probs, over(51, &[7, 7, 7, 5, 2, 2, 1, 1, 19]));
    assert_eq!(l.pi, Rational::new(26, 51));
    let l = balanced_lottery(&game(&[2, 2, 1, 3])).unwrap();
    assert_eq!(l.probs, over(51, &[11, 11, 4, 4, 3, 1, 1, 1, 15]));
    // These numerators sum to 49, so 49 is the only denominator that
    // makes a distribution.
    let l = balanced_lottery(&game(&[3, 1, 1, 3])).unwrap();
    assert_eq!(l.probs, over(49, &[7, 7, 7, 4, 3, 1, 1, 1, 18]));
    let numerator_sum: i64 = [7, 7, 7, 4, 3, 1, 1, 1, 18].iter().sum();
    assert_eq!(numerator_sum, 49);
}

#[test]
fn examples_fully_verify() {
    for counts in [&[3, 1, 2, 2][..], &[3, 1, 1, 3]] {
        let r = full_verify(&game(counts)).unwrap();
        assert!(r.pass(), "{counts:?}: {:?}", r.failures());
    }
    let r = check_axioms(25, &[1, 1, 1, 3, 4, 7, 7, 7, 18]).unwrap();
    assert!(r.parsimony && r.homogeneity && r.constant_sum);
}
