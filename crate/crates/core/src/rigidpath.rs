//! The explicit mutation path from `T_M` to `T_M^∨`, the generalized
//! determinantal identities met along it, and the dual PBW expansion of
//! interval variables.
//!
//! The path is driven by the quiver `Q_M^op`: the full subquiver of `Γ_M*`
//! on the top vertices `(i, t_i)`. A `Q`-arrow `i -> j` becomes `j -> i` when
//! `t_j = t_i` and stays `i -> j` when `t_j = t_i − 1`. Vertices of `Q` are
//! visited in a sources-first topological order of `Q_M^op` (the
//! `Q_M`-adapted order); any other topological order may be supplied.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::cluster::{arrow_sums, mutate_seed_traced, Seed, TrackerMutation};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::mesh::{CategoryModel, IntervalLabel, MeshVertex, TerminalData};
use crate::quiver::Multigraph;

/// `Q_M^op` on 0-based quiver vertices.
pub fn qm_opposite(td: &TerminalData) -> Multigraph {
    let arrows = td
        .quiver()
        .arrows()
        .into_iter()
        .map(|(i, j)| {
            if td.level(i) == td.level(j) {
                (j - 1, i - 1)
            } else {
                (i - 1, j - 1)
            }
        })
        .collect();
    Multigraph::new(td.quiver().n(), arrows)
}

/// The canonical `Q_M`-adapted order of the quiver vertices (1-based).
pub fn qm_adapted_order(td: &TerminalData) -> Result<Vec<usize>> {
    qm_opposite(td)
        .topological_order()
        .map(|o| o.into_iter().map(|v| v + 1).collect())
        .map_err(|v| Error::TerminalConstraint(format!("Q_M^op has a cycle through {}", v + 1)))
}

fn check_qm_order(td: &TerminalData, order: &[usize]) -> Result<()> {
    let n = td.quiver().n();
    let mut pos = vec![usize::MAX; n];
    for (k, &i) in order.iter().enumerate() {
        if i == 0 || i > n || pos[i - 1] != usize::MAX {
            return Err(Error::NotAdapted(format!("{order:?} is not a permutation of 1..={n}")));
        }
        pos[i - 1] = k;
    }
    if order.len() != n {
        return Err(Error::NotAdapted(format!("{order:?} is not a permutation of 1..={n}")));
    }
    for &(s, t) in qm_opposite(td).arrows() {
        if pos[s] > pos[t] {
            return Err(Error::NotAdapted(format!(
                "arrow {} -> {} of Q_M^op points backwards",
                s + 1,
                t + 1
            )));
        }
    }
    Ok(())
}

/// The ordered list of labels to mutate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Schedule {
    /// Labels `T_{i,[a,b]}` in mutation order.
    pub steps: Vec<IntervalLabel>,
}

impl Schedule {
    /// Number of steps.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    /// Whether there are no steps.
    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// `Σ t_i (t_i + 1) / 2`, the length of the path.
pub fn path_length(td: &TerminalData) -> usize {
    td.t().iter().map(|t| t * (t + 1) / 2).sum()
}

/// The schedule in the canonical `Q_M`-adapted order.
pub fn make_schedule(td: &TerminalData) -> Result<Schedule> {
    make_schedule_with(td, &qm_adapted_order(td)?)
}

/// The schedule for a given `Q_M`-adapted order.
///
/// Step `k` visits each vertex `i` in order and mutates
/// `T_{i,[b,b]}, T_{i,[b−1,b]}, …, T_{i,[1,b]}` with `b = t_i − (k − 1)`.
pub fn make_schedule_with(td: &TerminalData, order: &[usize]) -> Result<Schedule> {
    check_qm_order(td, order)?;
    let max_t = td.t().iter().copied().max().unwrap_or(0);
    let mut steps = Vec::with_capacity(path_length(td));
    for k in 1..=max_t {
        for &i in order {
            let t = td.level(i);
            if t < k {
                continue;
            }
            let b = (t + 1 - k) as i64;
            for a in (1..=b).rev() {
                steps.push(IntervalLabel::new(i, a, b));
            }
        }
    }
    Ok(Schedule { steps })
}

/// One generalized determinantal identity
/// `T_{i,[a−1,b]} T_{i,[a,b−1]} = T_{i,[a,b]} T_{i,[a−1,b−1]} − ∏ product`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetIdentity {
    /// Quiver vertex.
    pub i: usize,
    /// Lower end of the mutated interval.
    pub a: i64,
    /// Upper end of the mutated interval.
    pub b: i64,
    /// `T_{i,[a−1,b]}` and `T_{i,[a,b−1]}` (the latter may be the unit).
    pub left: [IntervalLabel; 2],
    /// `T_{i,[a,b]}` and `T_{i,[a−1,b−1]}`.
    pub exchanged: [IntervalLabel; 2],
    /// Factors of the subtracted product, sorted, with multiplicity.
    pub product: Vec<IntervalLabel>,
}

impl DetIdentity {
    /// The non-unit factors of the left-hand side, sorted.
    pub fn left_factors(&self) -> Vec<IntervalLabel> {
        let mut v: Vec<_> = self.left.iter().copied().filter(|l| !l.is_unit()).collect();
        v.sort();
        v
    }

    /// Text form `left = T_{i,[a,b]}*T_{i,[a-1,b-1]} - product`, with unit
    /// factors omitted.
    pub fn to_text(&self) -> String {
        let join = |v: &[IntervalLabel]| {
            let parts: Vec<String> = v.iter().filter(|l| !l.is_unit()).map(|l| l.to_string()).collect();
            if parts.is_empty() {
                "1".to_string()
            } else {
                parts.join("*")
            }
        };
        format!(
            "{} = {} - {}",
            join(&self.left),
            join(&self.exchanged),
            join(&self.product)
        )
    }
}

/// The identity attached to `(i, a, b)` with `1 ≤ a ≤ b ≤ t_i`.
///
/// Factors over arrows `i -> j` of `Q_M^op` are `T_{j,[a+s,b+s]}` and over
/// arrows `k -> i` are `T_{k,[a−1+s,b−1+s]}`, with `s` the level difference
/// to `i`. Factors with a negative end are dropped.
pub fn det_identity(td: &TerminalData, i: usize, a: i64, b: i64) -> Result<DetIdentity> {
    let n = td.quiver().n();
    if i == 0 || i > n {
        return Err(Error::Index(format!("vertex {i} out of range")));
    }
    let ti = td.level(i) as i64;
    if a < 1 || a > b || b > ti {
        return Err(Error::Index(format!("need 1 <= a <= b <= {ti}, got a={a}, b={b}")));
    }
    let mut product = Vec::new();
    for &(s, t) in qm_opposite(td).arrows() {
        let (s, t) = (s + 1, t + 1);
        let lbl = if s == i {
            let sh = td.level(t) as i64 - ti;
            IntervalLabel::new(t, a + sh, b + sh)
        } else if t == i {
            let sh = td.level(s) as i64 - ti;
            IntervalLabel::new(s, a - 1 + sh, b - 1 + sh)
        } else {
            continue;
        };
        if lbl.a >= 0 && lbl.b >= 0 && !lbl.is_unit() {
            product.push(lbl);
        }
    }
    product.sort();
    Ok(DetIdentity {
        i,
        a,
        b,
        left: [IntervalLabel::new(i, a - 1, b), IntervalLabel::new(i, a, b - 1)],
        exchanged: [IntervalLabel::new(i, a, b), IntervalLabel::new(i, a - 1, b - 1)],
        product,
    })
}

/// Record of one step of [`run_path`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathStep {
    /// The label that was mutated.
    pub target: IntervalLabel,
    /// Its replacement.
    pub new_label: IntervalLabel,
    /// Seed position.
    pub position: usize,
    /// The identity the exchange relation was matched against.
    pub identity: DetIdentity,
    /// The new cluster variable in text form, when variables are tracked.
    pub variable: Option<String>,
    /// Dimension-vector update.
    pub dim: Option<TrackerMutation>,
    /// Δ-dimension-vector update.
    pub delta: Option<TrackerMutation>,
}

/// Final seed plus the per-step record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathResult {
    /// The seed after the last step.
    pub seed: Seed,
    /// One entry per step.
    pub steps: Vec<PathStep>,
}

impl PathResult {
    /// Whether every step saw one arrow sum of dimension vectors dominate
    /// the other componentwise, so that the componentwise maximum is one of
    /// the two sums. Steps without a dimension tracker count as `false`.
    ///
    /// Δ-dimension vectors are chosen by pairing with `d_Δ` instead and are
    /// not expected to satisfy this.
    pub fn max_dominance_everywhere(&self) -> bool {
        self.steps.iter().all(|s| s.dim.as_ref().is_some_and(|m| m.dominance))
    }
}

fn sorted_labels(seed: &Seed, exps: &[u32]) -> Option<Vec<IntervalLabel>> {
    let mut out = Vec::new();
    for (p, &e) in exps.iter().enumerate() {
        if e > 0 {
            let l = seed.labels[p]?;
            out.extend(std::iter::repeat_n(l, e as usize));
        }
    }
    out.sort();
    Some(out)
}

/// Runs a schedule from the initial seed of `cat`.
///
/// Each step locates the current label, checks that the two monomials of the
/// exchange relation are exactly the two products of the predicted
/// determinantal identity, mutates, and relabels `T_{i,[a,b]}` as
/// `T_{i,[a−1,b−1]}`. When the seed carries a dimension tracker, the step
/// additionally checks that the dominant arrow sum is the product
/// `T_{i,[a−1,b]} T_{i,[a,b−1]}` and that the new tracker entry is the
/// projected dimension vector of the new label. Any discrepancy is a
/// [`Error::ScheduleMismatch`].
pub fn run_path(cat: &CategoryModel, seed: &Seed, sch: &Schedule) -> Result<PathResult> {
    let td = cat.terminal();
    let mut seed = seed.clone();
    let mut steps = Vec::with_capacity(sch.len());
    for (idx, &target) in sch.steps.iter().enumerate() {
        let mismatch = |msg: String| Error::ScheduleMismatch(format!("step {}: {msg}", idx + 1));
        let position = seed
            .position_of(target)
            .ok_or_else(|| mismatch(format!("no vertex labelled {target}")))?;
        let identity = det_identity(td, target.i, target.a, target.b)?;
        let rel = seed.exchange_relation(position);
        let seen = (
            sorted_labels(&seed, &rel.out_exponents),
            sorted_labels(&seed, &rel.in_exponents),
        );
        let expected = (identity.left_factors(), identity.product.clone());
        let out_is_left = match &seen {
            (Some(o), Some(i)) if *o == expected.0 && *i == expected.1 => true,
            (Some(o), Some(i)) if *o == expected.1 && *i == expected.0 => false,
            _ => {
                return Err(mismatch(format!(
                    "relation at {target} has monomials {seen:?}, expected {expected:?}"
                )))
            }
        };
        let (mut next, rec) = mutate_seed_traced(&seed, position)?;
        let new_label = IntervalLabel::new(target.i, target.a - 1, target.b - 1);
        next.labels[position] = Some(new_label);
        if let (Some(dim), Some(tracker)) = (&rec.dim, &seed.dim_tracker) {
            // With equal arrow sums either side is dominant.
            let (out, inn) = arrow_sums(&seed, position, tracker);
            if out != inn && dim.used_out != out_is_left {
                return Err(mismatch(format!(
                    "the dominant side at {target} is the subtracted product"
                )));
            }
            let projected = cat.projected_dimvec(new_label)?;
            if dim.vector != projected {
                return Err(mismatch(format!(
                    "tracker gives {:?} for {new_label}, projected dimension vector is {:?}",
                    dim.vector, projected
                )));
            }
        }
        steps.push(PathStep {
            target,
            new_label,
            position,
            identity,
            variable: next.var_text(position),
            dim: rec.dim,
            delta: rec.delta,
        });
        seed = next;
    }
    Ok(PathResult { seed, steps })
}

/// Names `T_{l,[c,c]}` of the dual PBW generators, in display order of the
/// category.
pub fn pbw_names(cat: &CategoryModel) -> Vec<String> {
    cat.vertices()
        .iter()
        .map(|v| IntervalLabel::new(v.i, v.a as i64, v.a as i64).to_string())
        .collect()
}

/// Expands `T_{i,[c,d]}` as a polynomial in the single-interval variables
/// `z_{l,c} = T_{l,[c,c]}` (indexed by display position).
///
/// Uses `T_{i,[c,d]} = (T_{i,[c+1,d]} T_{i,[c,d−1]} − R) / T_{i,[c+1,d−1]}`
/// where `R` is the subtracted product of the identity for `(i, c+1, d)`,
/// recursing with memoization. A failed division or a negative exponent in
/// the result would contradict polynomiality and is reported as an error.
pub fn pbw_expand(cat: &CategoryModel, lbl: IntervalLabel) -> Result<LaurentPoly> {
    let mut memo = HashMap::new();
    let p = expand(cat, lbl, &mut memo)?;
    if !p.is_polynomial() {
        return Err(Error::NotDivisible(format!("expansion of {lbl} is not a polynomial")));
    }
    Ok(p)
}

fn expand(
    cat: &CategoryModel,
    lbl: IntervalLabel,
    memo: &mut HashMap<IntervalLabel, LaurentPoly>,
) -> Result<LaurentPoly> {
    let r = cat.r();
    if lbl.is_unit() {
        return Ok(LaurentPoly::one(r));
    }
    if let Some(p) = memo.get(&lbl) {
        return Ok(p.clone());
    }
    let t = cat.terminal().level(lbl.i) as i64;
    if lbl.a < 0 || lbl.b > t {
        return Err(Error::Index(format!("label {lbl} outside the region")));
    }
    let p = if lbl.is_single() {
        let pos = cat
            .index_of(MeshVertex::new(lbl.i, lbl.a as usize))
            .expect("checked range");
        LaurentPoly::var(r, pos)
    } else {
        let (i, c, d) = (lbl.i, lbl.a, lbl.b);
        let id = det_identity(cat.terminal(), i, c + 1, d)?;
        let mut rest = LaurentPoly::one(r);
        for &f in &id.product {
            rest = &rest * &expand(cat, f, memo)?;
        }
        let upper = expand(cat, IntervalLabel::new(i, c + 1, d), memo)?;
        let lower = expand(cat, IntervalLabel::new(i, c, d - 1), memo)?;
        let inner = expand(cat, IntervalLabel::new(i, c + 1, d - 1), memo)?;
        (&(&upper * &lower) - &rest).exact_div(&inner)?
    };
    memo.insert(lbl, p.clone());
    Ok(p)
}
