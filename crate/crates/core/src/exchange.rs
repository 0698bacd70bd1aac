//! Exchange matrices of quivers and Fomin–Zelevinsky matrix mutation.
//!
//! Matrix indices are 0-based positions. Entries between two frozen
//! positions are carried along but are not controlled by mutation, so
//! comparisons ignore them by default (see
//! [`ExchangeMatrix::eq_ignoring_frozen_pairs`]).

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::Multigraph;

/// A skew-symmetric integer matrix together with a set of frozen positions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExchangeMatrix {
    /// Rows of `b`, `b[i][j] = #(j -> i) − #(i -> j)`.
    pub b: Vec<Vec<i64>>,
    /// Frozen positions.
    pub frozen: BTreeSet<usize>,
}

impl ExchangeMatrix {
    /// Wraps a matrix, checking that it is square and that its principal part
    /// (rows and columns over mutable positions) is skew-symmetric.
    pub fn new(b: Vec<Vec<i64>>, frozen: BTreeSet<usize>) -> Result<Self> {
        let r = b.len();
        if b.iter().any(|row| row.len() != r) {
            return Err(Error::Shape("exchange matrix must be square".into()));
        }
        if let Some(&f) = frozen.iter().find(|&&f| f >= r) {
            return Err(Error::Index(format!("frozen position {f} out of range")));
        }
        let m = ExchangeMatrix { b, frozen };
        for i in 0..r {
            for j in 0..r {
                if (m.is_mutable(i) || m.is_mutable(j)) && m.b[i][j] != -m.b[j][i] {
                    return Err(Error::Shape(format!(
                        "entries ({i},{j}) and ({j},{i}) are not opposite"
                    )));
                }
            }
        }
        Ok(m)
    }

    /// Matrix size `r`.
    pub fn size(&self) -> usize {
        self.b.len()
    }

    /// Entry `b_{ij}`.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.b[i][j]
    }

    /// Whether position `k` may be mutated.
    pub fn is_mutable(&self, k: usize) -> bool {
        !self.frozen.contains(&k)
    }

    /// Mutable positions in increasing order.
    pub fn mutable_positions(&self) -> Vec<usize> {
        (0..self.size()).filter(|&k| self.is_mutable(k)).collect()
    }

    /// Equality of matrices and frozen sets, ignoring entries between two
    /// frozen positions.
    pub fn eq_ignoring_frozen_pairs(&self, other: &Self) -> bool {
        if self.size() != other.size() || self.frozen != other.frozen {
            return false;
        }
        (0..self.size()).all(|i| {
            (0..self.size()).all(|j| (!self.is_mutable(i) && !self.is_mutable(j)) || self.b[i][j] == other.b[i][j])
        })
    }

    /// The quiver with `b_{ij}` arrows `j -> i` whenever `b_{ij} > 0`.
    pub fn to_quiver(&self) -> Multigraph {
        let mut arrows = Vec::new();
        for i in 0..self.size() {
            for j in 0..self.size() {
                for _ in 0..self.b[i][j].max(0) {
                    arrows.push((j, i));
                }
            }
        }
        Multigraph::new(self.size(), arrows)
    }
}

/// The exchange matrix `b_{ij} = #(j -> i) − #(i -> j)` of a quiver.
///
/// Opposite arrows between two positions are rejected unless both
/// positions are frozen.
pub fn b_matrix(g: &Multigraph, frozen: &BTreeSet<usize>) -> Result<ExchangeMatrix> {
    let r = g.n();
    let mut fwd = vec![vec![0i64; r]; r];
    for &(s, t) in g.arrows() {
        fwd[s][t] += 1;
    }
    let mut b = vec![vec![0i64; r]; r];
    for i in 0..r {
        for j in 0..r {
            if fwd[i][j] > 0 && fwd[j][i] > 0 && !(frozen.contains(&i) && frozen.contains(&j)) {
                return Err(Error::TwoCycle(i, j));
            }
            b[i][j] = fwd[j][i] - fwd[i][j];
        }
    }
    ExchangeMatrix::new(b, frozen.clone())
}

/// Matrix mutation at a mutable position `k`:
/// `b'_{ij} = −b_{ij}` if `k ∈ {i, j}`, else
/// `b_{ij} + (|b_{ik}| b_{kj} + b_{ik} |b_{kj}|) / 2`.
#[allow(clippy::needless_range_loop)]
pub fn mutate_matrix(m: &ExchangeMatrix, k: usize) -> Result<ExchangeMatrix> {
    if k >= m.size() {
        return Err(Error::Index(format!("position {k} out of range")));
    }
    if !m.is_mutable(k) {
        return Err(Error::FrozenMutation(k));
    }
    let r = m.size();
    let mut b = m.b.clone();
    for i in 0..r {
        for j in 0..r {
            b[i][j] = if i == k || j == k {
                -m.b[i][j]
            } else {
                let (bik, bkj) = (m.b[i][k], m.b[k][j]);
                m.b[i][j] + (bik.abs() * bkj + bik * bkj.abs()) / 2
            };
        }
    }
    Ok(ExchangeMatrix {
        b,
        frozen: m.frozen.clone(),
    })
}
