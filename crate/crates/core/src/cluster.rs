//! Seeds, seed mutation, and the two dimension-vector calculi carried along
//! as trackers.
//!
//! Seed positions are 0-based. A seed built from a [`CategoryModel`] uses
//! the category's display order, so position `p` holds the summand whose
//! initial label is `T_{i,[a,t_i]}` for the vertex `(i,a)` at display
//! position `p`, and every tracker is a vector over the same positions.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exchange::{b_matrix, mutate_matrix, ExchangeMatrix};
use crate::laurent::LaurentPoly;
use crate::mesh::{AdaptedOrdering, CategoryModel, IntervalLabel};

/// A seed: cluster variables, an exchange matrix, and optional per-position
/// bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Seed {
    /// Cluster variables as Laurent polynomials in the initial ones; `None`
    /// for purely combinatorial runs that skip polynomial arithmetic.
    pub vars: Option<Vec<LaurentPoly>>,
    /// Names of the initial variables, used for printing.
    pub names: Vec<String>,
    /// The exchange matrix.
    pub matrix: ExchangeMatrix,
    /// Interval labels, where known.
    pub labels: Vec<Option<IntervalLabel>>,
    /// Dimension vectors of `Hom(T_p, T_M)` per position.
    pub dim_tracker: Option<Vec<Vec<i64>>>,
    /// Δ-dimension vectors per position.
    pub delta_tracker: Option<Vec<Vec<i64>>>,
    /// Dimensions of the standard modules, needed to mutate Δ-dimension
    /// vectors.
    pub d_delta: Option<Vec<i64>>,
}

/// The two monomials of one exchange relation
/// `y_k y_k' = ∏ y_i^{out_i} + ∏ y_i^{in_i}`, as exponent vectors over seed
/// positions: `out` counts arrows `k -> i`, `in` arrows `i -> k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeRelation {
    /// Mutated position.
    pub k: usize,
    /// Exponents of the monomial over arrows leaving `k`.
    pub out_exponents: Vec<u32>,
    /// Exponents of the monomial over arrows entering `k`.
    pub in_exponents: Vec<u32>,
}

/// Outcome of mutating one tracker vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrackerMutation {
    /// The new vector at the mutated position.
    pub vector: Vec<i64>,
    /// Whether one arrow sum dominated the other componentwise.
    pub dominance: bool,
    /// Whether the sum over arrows leaving `k` was used.
    pub used_out: bool,
}

/// Everything recorded about a single seed mutation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MutationStep {
    /// The exchange relation that was applied.
    pub relation: ExchangeRelation,
    /// Dimension-vector update, when tracked.
    pub dim: Option<TrackerMutation>,
    /// Δ-dimension-vector update, when tracked.
    pub delta: Option<TrackerMutation>,
}

impl Seed {
    /// A seed with fresh variables `y1, …, yr` and no trackers.
    pub fn from_matrix(matrix: ExchangeMatrix) -> Seed {
        let r = matrix.size();
        let names = (1..=r).map(|i| format!("y{i}")).collect();
        Seed {
            vars: Some((0..r).map(|i| LaurentPoly::var(r, i)).collect()),
            names,
            matrix,
            labels: vec![None; r],
            dim_tracker: None,
            delta_tracker: None,
            d_delta: None,
        }
    }

    /// Number of positions.
    pub fn size(&self) -> usize {
        self.matrix.size()
    }

    /// The same seed without cluster variables, for combinatorial runs.
    pub fn without_vars(mut self) -> Seed {
        self.vars = None;
        self
    }

    /// Position carrying the given label.
    pub fn position_of(&self, lbl: IntervalLabel) -> Option<usize> {
        self.labels.iter().position(|l| *l == Some(lbl))
    }

    /// Equality of variables, matrix and trackers, ignoring labels and
    /// entries between frozen positions.
    pub fn same_state(&self, other: &Seed) -> bool {
        self.vars == other.vars
            && self.matrix.eq_ignoring_frozen_pairs(&other.matrix)
            && self.dim_tracker == other.dim_tracker
            && self.delta_tracker == other.delta_tracker
    }

    /// The exchange relation at position `k`.
    pub fn exchange_relation(&self, k: usize) -> ExchangeRelation {
        let r = self.size();
        let mut out_exponents = vec![0u32; r];
        let mut in_exponents = vec![0u32; r];
        for i in 0..r {
            let b = self.matrix.get(i, k);
            if b > 0 {
                out_exponents[i] = b as u32;
            } else if b < 0 {
                in_exponents[i] = (-b) as u32;
            }
        }
        ExchangeRelation {
            k,
            out_exponents,
            in_exponents,
        }
    }

    /// Renders a variable with the initial variable names.
    pub fn var_text(&self, p: usize) -> Option<String> {
        self.vars.as_ref().map(|v| v[p].to_text(&self.names))
    }
}

/// The initial seed of a category: one variable per vertex, exchange matrix
/// of `Γ_M*` with the level-0 vertices frozen, and both trackers.
pub fn initial_seed(cat: &CategoryModel, ordering: &AdaptedOrdering) -> Result<Seed> {
    let d_delta = cat.delta_dims(ordering)?;
    let r = cat.r();
    let td = cat.terminal();
    let labels: Vec<IntervalLabel> = cat
        .vertices()
        .iter()
        .map(|v| IntervalLabel::new(v.i, v.a as i64, td.level(v.i) as i64))
        .collect();
    let frozen: BTreeSet<usize> = (0..r).filter(|&p| cat.vertices()[p].a == 0).collect();
    let matrix = b_matrix(cat.gamma_m_star(), &frozen)?;
    let dim_tracker = labels
        .iter()
        .map(|&l| cat.projected_dimvec(l))
        .collect::<Result<Vec<_>>>()?;
    let delta_tracker = labels
        .iter()
        .map(|l| {
            cat.vertices()
                .iter()
                .map(|v| i64::from(v.i == l.i && v.a as i64 >= l.a))
                .collect()
        })
        .collect();
    Ok(Seed {
        vars: Some((0..r).map(|p| LaurentPoly::var(r, p)).collect()),
        names: labels.iter().map(|l| l.to_string()).collect(),
        matrix,
        labels: labels.into_iter().map(Some).collect(),
        dim_tracker: Some(dim_tracker),
        delta_tracker: Some(delta_tracker),
        d_delta: Some(d_delta),
    })
}

fn check_mutable(s: &Seed, k: usize) -> Result<()> {
    if k >= s.size() {
        return Err(Error::Index(format!("position {k} out of range")));
    }
    if !s.matrix.is_mutable(k) {
        return Err(Error::FrozenMutation(k));
    }
    Ok(())
}

/// The two arrow sums `Σ_{k -> i} v_i` and `Σ_{i -> k} v_i` over a tracker.
pub(crate) fn arrow_sums(s: &Seed, k: usize, tracker: &[Vec<i64>]) -> (Vec<i64>, Vec<i64>) {
    let len = tracker[k].len();
    let mut out = vec![0i64; len];
    let mut inn = vec![0i64; len];
    for (i, v) in tracker.iter().enumerate() {
        let b = s.matrix.get(i, k);
        let target = if b > 0 { &mut out } else { &mut inn };
        for (t, x) in target.iter_mut().zip(v) {
            *t += b.abs() * x;
        }
    }
    (out, inn)
}

fn dominates(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x >= y)
}

fn finish(dk: &[i64], chosen: &[i64], dominance: bool, used_out: bool) -> TrackerMutation {
    TrackerMutation {
        vector: chosen.iter().zip(dk).map(|(c, d)| c - d).collect(),
        dominance,
        used_out,
    }
}

/// New dimension vector at `k`: `−d_k + max(Σ_{k -> i} d_i, Σ_{j -> k} d_j)`.
///
/// When one sum dominates the other componentwise it is used directly.
/// Otherwise the sum with the larger total is used; equal totals with
/// different sums raise [`Error::Ambiguity`].
pub fn mutate_dimvec(s: &Seed, k: usize) -> Result<TrackerMutation> {
    check_mutable(s, k)?;
    let tracker = s
        .dim_tracker
        .as_ref()
        .ok_or_else(|| Error::Index("seed has no dimension tracker".into()))?;
    let (out, inn) = arrow_sums(s, k, tracker);
    let dk = &tracker[k];
    if dominates(&out, &inn) {
        return Ok(finish(dk, &out, true, true));
    }
    if dominates(&inn, &out) {
        return Ok(finish(dk, &inn, true, false));
    }
    let (so, si): (i64, i64) = (out.iter().sum(), inn.iter().sum());
    match so.cmp(&si) {
        std::cmp::Ordering::Greater => Ok(finish(dk, &out, false, true)),
        std::cmp::Ordering::Less => Ok(finish(dk, &inn, false, false)),
        std::cmp::Ordering::Equal => Err(Error::Ambiguity(k)),
    }
}

/// New Δ-dimension vector at `k`: `−d_k` plus the arrow sum whose pairing
/// with `d_delta` is larger.
///
/// On a tie between different sums, the unique branch keeping all entries
/// nonnegative is used; if there is none, [`Error::Ambiguity`] is raised.
pub fn mutate_delta_dimvec(s: &Seed, k: usize, d_delta: &[i64]) -> Result<TrackerMutation> {
    check_mutable(s, k)?;
    let tracker = s
        .delta_tracker
        .as_ref()
        .ok_or_else(|| Error::Index("seed has no delta tracker".into()))?;
    let (out, inn) = arrow_sums(s, k, tracker);
    let dk = &tracker[k];
    let dominance = dominates(&out, &inn) || dominates(&inn, &out);
    let dot = |v: &[i64]| -> i64 { v.iter().zip(d_delta).map(|(a, b)| a * b).sum() };
    match dot(&out).cmp(&dot(&inn)) {
        std::cmp::Ordering::Greater => Ok(finish(dk, &out, dominance, true)),
        std::cmp::Ordering::Less => Ok(finish(dk, &inn, dominance, false)),
        std::cmp::Ordering::Equal => {
            if out == inn {
                return Ok(finish(dk, &out, dominance, true));
            }
            let a = finish(dk, &out, dominance, true);
            let b = finish(dk, &inn, dominance, false);
            match (a.vector.iter().all(|&x| x >= 0), b.vector.iter().all(|&x| x >= 0)) {
                (true, false) => Ok(a),
                (false, true) => Ok(b),
                _ => Err(Error::Ambiguity(k)),
            }
        }
    }
}

/// Mutates a seed at position `k`, returning the new seed and a record of
/// the step.
///
/// The label at `k` becomes unknown; callers that know the new label (the
/// mutation schedule does) set it afterwards.
pub fn mutate_seed_traced(s: &Seed, k: usize) -> Result<(Seed, MutationStep)> {
    check_mutable(s, k)?;
    let relation = s.exchange_relation(k);
    let vars = match &s.vars {
        Some(vars) => {
            let r = s.size();
            let nv = vars[k].nvars();
            let mono = |exps: &[u32]| {
                let mut p = LaurentPoly::one(nv);
                for (i, &e) in exps.iter().enumerate().take(r) {
                    if e > 0 {
                        p = &p * &vars[i].pow(e);
                    }
                }
                p
            };
            let num = &mono(&relation.out_exponents) + &mono(&relation.in_exponents);
            let mut new = vars.clone();
            new[k] = num.exact_div(&vars[k])?;
            Some(new)
        }
        None => None,
    };
    let dim = s.dim_tracker.as_ref().map(|_| mutate_dimvec(s, k)).transpose()?;
    let delta = match (&s.delta_tracker, &s.d_delta) {
        (Some(_), Some(dd)) => Some(mutate_delta_dimvec(s, k, dd)?),
        _ => None,
    };
    let mut next = s.clone();
    next.vars = vars;
    next.matrix = mutate_matrix(&s.matrix, k)?;
    next.labels[k] = None;
    if let (Some(t), Some(m)) = (next.dim_tracker.as_mut(), &dim) {
        t[k] = m.vector.clone();
    }
    if let (Some(t), Some(m)) = (next.delta_tracker.as_mut(), &delta) {
        t[k] = m.vector.clone();
    }
    Ok((next, MutationStep { relation, dim, delta }))
}

/// Mutates a seed at position `k`.
pub fn mutate_seed(s: &Seed, k: usize) -> Result<Seed> {
    mutate_seed_traced(s, k).map(|(s, _)| s)
}
