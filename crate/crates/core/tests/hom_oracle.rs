//! Knitted hom dimensions against a brute-force intertwiner solver on
//! linearly oriented type-A quivers, where every indecomposable is a thin
//! interval representation.

mod common;

use common::{thin_hom, Thin};
use terminal_cluster::{build_category, validate_quiver, TerminalData};

fn check(n: usize, arrows: &[(usize, usize)], t: Vec<usize>, expect_vertices: usize) {
    let cat = build_category(&TerminalData::new(validate_quiver(n, arrows).unwrap(), t).unwrap()).unwrap();
    assert_eq!(cat.r(), expect_vertices);
    let arrows0: Vec<(usize, usize)> = arrows.iter().map(|&(s, t)| (s - 1, t - 1)).collect();
    let reps: Vec<Thin> = cat
        .dims()
        .iter()
        .map(|d| {
            assert!(d.0.iter().all(|&x| x == 0 || x == 1), "not thin: {:?}", d.0);
            Thin {
                support: d.0.iter().map(|&x| x == 1).collect(),
            }
        })
        .collect();
    for (a, va) in cat.vertices().iter().enumerate() {
        for (b, vb) in cat.vertices().iter().enumerate() {
            let knitted = cat.hom_dim(*va, *vb).unwrap() as usize;
            assert_eq!(knitted, thin_hom(&reps[a], &reps[b], &arrows0), "Hom({va}, {vb})");
        }
    }
}

#[test]
fn linear_a3_all_indecomposables() {
    check(3, &[(3, 2), (2, 1)], vec![0, 1, 2], 6);
}

#[test]
fn linear_a3_other_orientation() {
    check(3, &[(1, 2), (2, 3)], vec![2, 1, 0], 6);
}

#[test]
fn linear_a4_all_indecomposables() {
    check(4, &[(4, 3), (3, 2), (2, 1)], vec![0, 1, 2, 3], 10);
}

#[test]
fn linear_a4_partial() {
    check(4, &[(4, 3), (3, 2), (2, 1)], vec![0, 1, 1, 1], 7);
}
