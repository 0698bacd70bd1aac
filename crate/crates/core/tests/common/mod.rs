//! Random generators shared by the integration and acceptance tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use terminal_cluster::{
    build_category, initial_seed, mutate_seed, validate_quiver, CategoryModel, ExchangeMatrix, Quiver, Seed,
    TerminalData,
};

/// A random connected tree-shaped quiver (edges possibly doubled) on
/// `2..=max_n` vertices together with levels satisfying the terminal
/// constraint, obtained by propagating levels along the edges.
pub fn random_terminal(rng: &mut StdRng, max_n: usize, max_t: usize) -> TerminalData {
    let n = rng.gen_range(2..=max_n);
    let mut t = vec![0usize; n + 1];
    t[1] = rng.gen_range(0..=max_t);
    let mut arrows = Vec::new();
    for v in 2..=n {
        let u = rng.gen_range(1..v);
        let mult = if rng.gen_bool(0.2) { 2 } else { 1 };
        let forward = rng.gen_bool(0.5);
        // u -> v needs t_v ∈ {t_u − 1, t_u}; v -> u needs t_v ∈ {t_u, t_u + 1}.
        t[v] = if forward {
            if t[u] == 0 || rng.gen_bool(0.5) {
                t[u]
            } else {
                t[u] - 1
            }
        } else if t[u] < max_t && rng.gen_bool(0.5) {
            t[u] + 1
        } else {
            t[u]
        };
        for _ in 0..mult {
            arrows.push(if forward { (u, v) } else { (v, u) });
        }
    }
    let q = validate_quiver(n, &arrows).expect("trees are valid quivers");
    TerminalData::new(q, t[1..].to_vec()).expect("levels propagated along edges")
}

/// Random terminal data whose category can be knitted (Dynkin quivers
/// overflow when the levels are too large).
pub fn random_category(rng: &mut StdRng, max_n: usize, max_t: usize) -> (TerminalData, CategoryModel) {
    loop {
        let td = random_terminal(rng, max_n, max_t);
        if let Ok(cat) = build_category(&td) {
            return (td, cat);
        }
    }
}

/// A random skew-symmetric matrix of size `1..=max_r` with entries in
/// `-3..=3` and a random frozen set.
#[allow(clippy::needless_range_loop)]
pub fn random_matrix(rng: &mut StdRng, max_r: usize) -> ExchangeMatrix {
    let r = rng.gen_range(1..=max_r);
    let mut b = vec![vec![0i64; r]; r];
    for i in 0..r {
        for j in i + 1..r {
            let v = rng.gen_range(-3..=3);
            b[i][j] = v;
            b[j][i] = -v;
        }
    }
    let frozen: BTreeSet<usize> = (0..r).filter(|_| rng.gen_bool(0.2)).collect();
    ExchangeMatrix::new(b, frozen).unwrap()
}

/// A random acyclic connected quiver on `2..=max_n` vertices.
pub fn random_quiver(rng: &mut StdRng, max_n: usize) -> Quiver {
    loop {
        let n = rng.gen_range(2..=max_n);
        let mut arrows = Vec::new();
        for v in 2..=n {
            let u = rng.gen_range(1..v);
            arrows.push((u, v));
        }
        for _ in 0..rng.gen_range(0..n) {
            let u = rng.gen_range(1..n);
            let v = rng.gen_range(u + 1..=n);
            arrows.push((u, v));
        }
        // Shuffle vertex names so arrows do not always increase.
        let mut perm: Vec<usize> = (1..=n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let arrows: Vec<(usize, usize)> = arrows.iter().map(|&(u, v)| (perm[u - 1], perm[v - 1])).collect();
        if let Ok(q) = validate_quiver(n, &arrows) {
            return q;
        }
    }
}

/// A seed reached from the initial seed of random terminal data by a random
/// walk of `steps` mutations, with rank at most `max_r`.
pub fn random_reachable_seed(rng: &mut StdRng, max_r: usize, steps: usize, with_vars: bool) -> Seed {
    loop {
        let (_, cat) = random_category(rng, 4, 2);
        if cat.r() > max_r || cat.r() == 0 {
            continue;
        }
        let seed = initial_seed(&cat, &cat.canonical_ordering()).unwrap();
        let mut seed = if with_vars { seed } else { seed.without_vars() };
        let mutable = seed.matrix.mutable_positions();
        if mutable.is_empty() {
            continue;
        }
        for _ in 0..steps {
            let k = mutable[rng.gen_range(0..mutable.len())];
            match mutate_seed(&seed, k) {
                Ok(s) => seed = s,
                // Trackers can hit an undecidable branch off the schedule.
                Err(_) => {
                    seed.dim_tracker = None;
                    seed.delta_tracker = None;
                    seed = mutate_seed(&seed, k).unwrap();
                }
            }
        }
        return seed;
    }
}

/// Deterministic generator.
pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A representation with one-dimensional spaces on `support` and identity
/// maps along every arrow inside the support.
pub struct Thin {
    pub support: Vec<bool>,
}

#[allow(clippy::needless_range_loop)]
fn rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let piv = m[r][c].clone();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] / &piv;
                for j in c..cols {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        r += 1;
    }
    r
}

/// `dim Hom(x, y)`: unknowns are scalars `f_v` where both supports meet;
/// each arrow `s -> t` imposes `y_α f_s = f_t x_α`.
pub fn thin_hom(x: &Thin, y: &Thin, arrows: &[(usize, usize)]) -> usize {
    let n = x.support.len();
    let unknowns: Vec<usize> = (0..n).filter(|&v| x.support[v] && y.support[v]).collect();
    let idx = |v: usize| unknowns.iter().position(|&u| u == v);
    let mut rows = Vec::new();
    for &(s, t) in arrows {
        let mut row = vec![BigRational::zero(); unknowns.len()];
        // y_α f_s: nonzero when y carries the arrow (both ends supported).
        if y.support[s] && y.support[t] {
            if let Some(k) = idx(s) {
                row[k] += BigRational::one();
            }
        }
        // f_t x_α: nonzero when x carries the arrow.
        if x.support[s] && x.support[t] {
            if let Some(k) = idx(t) {
                row[k] -= BigRational::one();
            }
        }
        rows.push(row);
    }
    unknowns.len() - rank(rows)
}
