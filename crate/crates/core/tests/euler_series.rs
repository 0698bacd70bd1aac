//! Generating functions of the summands of the dual cluster-tilting module
//! for the Kronecker-type quiver `1 ⇉ 2 → 3` with levels `(2, 1, 1)`.

use terminal_cluster::euler::{
    coefficient_i64, evaluate_phi, flag_oracle, g_module, shuffle, ShuffleSeries, ThinModule,
};
use terminal_cluster::{build_category, validate_quiver, AdaptedOrdering, CategoryModel, MeshVertex, TerminalData};

fn setup() -> (CategoryModel, AdaptedOrdering) {
    let q = validate_quiver(3, &[(1, 2), (1, 2), (2, 3)]).unwrap();
    let cat = build_category(&TerminalData::new(q, vec![2, 1, 1]).unwrap()).unwrap();
    let ord = AdaptedOrdering::new(
        [(1, 0), (2, 0), (1, 1), (3, 0), (2, 1), (1, 2), (3, 1)]
            .iter()
            .map(|&(i, a)| MeshVertex::new(i, a))
            .collect(),
    );
    (cat, ord)
}

#[test]
fn third_summand() {
    let (cat, ord) = setup();
    let g = g_module(&cat, &ord, 3).unwrap();
    assert_eq!(
        g,
        ShuffleSeries::from_terms([(vec![1, 2, 1, 2, 1, 1], 4), (vec![1, 2, 2, 1, 1, 1], 12)])
    );
}

#[test]
fn fifth_and_sixth_summands_are_integral() {
    let (cat, ord) = setup();
    let g5 = g_module(&cat, &ord, 5).unwrap();
    assert_eq!(g5.len(), 402);
    assert!(g5.is_integral());
    let g6 = g_module(&cat, &ord, 6).unwrap();
    assert!(g6.is_integral() && !g6.is_empty());
}

#[test]
fn seventh_summand() {
    let (cat, ord) = setup();
    let g = g_module(&cat, &ord, 7).unwrap();
    let expected = ShuffleSeries::from_terms([
        (vec![3, 2, 1, 1, 2, 2, 2, 1, 1, 1, 1], 288),
        (vec![3, 2, 1, 1, 2, 2, 1, 2, 1, 1, 1], 144),
        (vec![3, 2, 1, 2, 1, 2, 2, 1, 1, 1, 1], 96),
        (vec![3, 2, 1, 1, 2, 2, 1, 1, 2, 1, 1], 48),
        (vec![3, 2, 1, 2, 1, 1, 2, 2, 1, 1, 1], 48),
        (vec![3, 2, 1, 2, 1, 2, 1, 2, 1, 1, 1], 48),
        (vec![3, 2, 1, 1, 2, 1, 2, 2, 1, 1, 1], 48),
        (vec![3, 2, 1, 2, 1, 2, 1, 1, 2, 1, 1], 16),
        (vec![3, 2, 1, 2, 1, 1, 2, 1, 2, 1, 1], 16),
        (vec![3, 2, 1, 1, 2, 1, 2, 1, 2, 1, 1], 16),
    ]);
    assert_eq!(g, expected);
}

#[test]
fn content_matches_dimension_vectors() {
    let (cat, ord) = setup();
    for (k, v) in ord.vertices().iter().enumerate() {
        let g = g_module(&cat, &ord, k + 1).unwrap();
        let content = g.homogeneous_content(3).expect("homogeneous");
        let mut dim = vec![0i64; 3];
        for l in 0..=v.a {
            let d = cat.dim(MeshVertex::new(v.i, l)).unwrap();
            dim.iter_mut().zip(&d.0).for_each(|(x, y)| *x += y);
        }
        assert_eq!(content, dim, "summand {}", k + 1);
    }
}

#[test]
fn phi_of_seventh_summand_is_integral() {
    let (cat, ord) = setup();
    let g = g_module(&cat, &ord, 7).unwrap();
    let p = evaluate_phi(&g, &[3, 2, 1, 2, 1, 2, 1]);
    assert!(p.to_integer_poly().is_some());
    let total: i64 = p.terms().map(|(_, c)| coefficient_i64(c).unwrap()).sum();
    assert!(total > 0);
}

#[test]
fn flag_identities_in_type_a3() {
    // 1 over 2: slot 2 is the socle; 2 over 1 the other way round.
    let g = |labels: Vec<usize>, arrows: Vec<(usize, usize)>| flag_oracle(&ThinModule::new(labels, arrows).unwrap());
    let s = |i| flag_oracle(&ThinModule::simple(i));
    let g12 = g(vec![1, 2], vec![(0, 1)]);
    let g21 = g(vec![2, 1], vec![(0, 1)]);
    assert_eq!(g12, shuffle(&s(1), &s(2)).sub(&g21));
    let g32 = g(vec![3, 2], vec![(0, 1)]);
    let g23 = g(vec![2, 3], vec![(0, 1)]);
    assert_eq!(g32, shuffle(&s(3), &s(2)).sub(&g23));
    let g13_2 = g(vec![1, 3, 2], vec![(0, 2), (1, 2)]);
    let g2_13 = g(vec![2, 1, 3], vec![(0, 1), (0, 2)]);
    let rhs = g2_13
        .add(&shuffle(&shuffle(&s(1), &s(2)), &s(3)))
        .sub(&shuffle(&s(1), &g23))
        .sub(&shuffle(&s(3), &g21));
    assert_eq!(g13_2, rhs);
}
