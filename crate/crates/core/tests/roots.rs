//! Inversion sets of adapted words against knitted dimension vectors.

mod common;

use std::collections::BTreeSet;

use terminal_cluster::{adapted_word, build_category, cartan, inversion_roots, validate_quiver, TerminalData};

#[test]
fn seven_roots_of_the_triangle_quiver() {
    let q = validate_quiver(3, &[(1, 2), (1, 3), (2, 3)]).unwrap();
    let c = cartan(&q);
    let cat = build_category(&TerminalData::new(q, vec![2, 1, 1]).unwrap()).unwrap();
    let w = adapted_word(&cat, &cat.canonical_ordering()).unwrap();
    assert_eq!(w.written(), vec![1, 3, 2, 1, 3, 2, 1]);
    let roots: BTreeSet<Vec<i64>> = inversion_roots(&w, &c).unwrap().into_iter().map(|r| r.0).collect();
    let expected: BTreeSet<Vec<i64>> = [
        [1, 0, 0],
        [1, 1, 0],
        [2, 1, 1],
        [2, 2, 1],
        [3, 2, 2],
        [3, 3, 2],
        [4, 3, 3],
    ]
    .iter()
    .map(|r| r.to_vec())
    .collect();
    assert_eq!(roots, expected);
    let dims: BTreeSet<Vec<i64>> = cat.dims().iter().map(|d| d.0.clone()).collect();
    assert_eq!(dims, expected);
}

#[test]
fn inversion_roots_are_knitted_dimension_vectors() {
    let mut rng = common::rng(5);
    for _ in 0..100 {
        let (td, cat) = common::random_category(&mut rng, 6, 3);
        let c = cartan(td.quiver());
        let w = adapted_word(&cat, &cat.canonical_ordering()).unwrap();
        let roots: Vec<Vec<i64>> = inversion_roots(&w, &c).unwrap().into_iter().map(|r| r.0).collect();
        let mut sorted_roots = roots.clone();
        sorted_roots.sort();
        let mut dims: Vec<Vec<i64>> = cat.dims().iter().map(|d| d.0.clone()).collect();
        dims.sort();
        assert_eq!(sorted_roots, dims);
    }
}
