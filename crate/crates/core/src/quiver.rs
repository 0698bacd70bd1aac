//! Quivers, symmetric Cartan matrices, reflections, the Weyl-group action on
//! weights and roots, and reduced words adapted to a quiver.
//!
//! Quiver vertices are 1-based (`1..=n`) throughout the public API. Weights
//! and roots are plain integer vectors with entry `j - 1` belonging to
//! vertex `j`.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mesh::{AdaptedOrdering, CategoryModel};

/// A directed multigraph on vertices `0..n` with no further invariants.
///
/// This is the carrier for translation quivers and exchange quivers, which
/// may be disconnected or consist of a single vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Multigraph {
    n: usize,
    arrows: Vec<(usize, usize)>,
}

impl Multigraph {
    /// Creates a multigraph; arrows are stored sorted.
    ///
    /// # Panics
    /// Panics when an arrow mentions a vertex `>= n`.
    pub fn new(n: usize, mut arrows: Vec<(usize, usize)>) -> Self {
        assert!(
            arrows.iter().all(|&(s, t)| s < n && t < n),
            "arrow endpoint out of range"
        );
        arrows.sort_unstable();
        Multigraph { n, arrows }
    }

    /// Vertex count.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Arrows `(source, target)`, sorted, repeated according to multiplicity.
    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    /// Number of arrows `s -> t`.
    pub fn count(&self, s: usize, t: usize) -> usize {
        self.arrows.iter().filter(|&&a| a == (s, t)).count()
    }

    /// Reverses every arrow incident to `k`.
    pub fn reflect(&self, k: usize) -> Multigraph {
        let arrows = self
            .arrows
            .iter()
            .map(|&(s, t)| if s == k || t == k { (t, s) } else { (s, t) })
            .collect();
        Multigraph::new(self.n, arrows)
    }

    /// Reverses every arrow.
    pub fn opposite(&self) -> Multigraph {
        Multigraph::new(self.n, self.arrows.iter().map(|&(s, t)| (t, s)).collect())
    }

    /// A topological order listing sources first, ties broken by the
    /// smallest index; `Err(v)` names a vertex on a cycle.
    pub fn topological_order(&self) -> std::result::Result<Vec<usize>, usize> {
        let mut indeg = vec![0usize; self.n];
        for &(_, t) in &self.arrows {
            indeg[t] += 1;
        }
        let mut heap: BinaryHeap<Reverse<usize>> = (0..self.n).filter(|&v| indeg[v] == 0).map(Reverse).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(Reverse(v)) = heap.pop() {
            order.push(v);
            for &(s, t) in &self.arrows {
                if s == v {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        heap.push(Reverse(t));
                    }
                }
            }
        }
        if order.len() == self.n {
            Ok(order)
        } else {
            Err((0..self.n).find(|&v| indeg[v] > 0).expect("cycle vertex"))
        }
    }

    /// Whether the underlying undirected graph is connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(s, t) in &self.arrows {
                let w = if s == v {
                    t
                } else if t == v {
                    s
                } else {
                    continue;
                };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|b| b)
    }
}

/// A finite, connected, acyclic, loop-free quiver on vertices `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    graph: Multigraph,
}

/// Validates a vertex count and a list of 1-based arrows.
pub fn validate_quiver(n: usize, arrows: &[(usize, usize)]) -> Result<Quiver> {
    if n < 2 {
        return Err(Error::TooSmall(n));
    }
    for &(s, t) in arrows {
        if s == 0 || t == 0 || s > n || t > n {
            return Err(Error::Index(format!("arrow ({s},{t}) outside 1..={n}")));
        }
        if s == t {
            return Err(Error::Loop(s));
        }
    }
    let graph = Multigraph::new(n, arrows.iter().map(|&(s, t)| (s - 1, t - 1)).collect());
    graph.topological_order().map_err(|v| Error::Cycle(v + 1))?;
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(Quiver { graph })
}

impl Quiver {
    /// Vertex count.
    pub fn n(&self) -> usize {
        self.graph.n
    }

    /// Arrows as 1-based `(source, target)` pairs, sorted, with multiplicity.
    pub fn arrows(&self) -> Vec<(usize, usize)> {
        self.graph.arrows.iter().map(|&(s, t)| (s + 1, t + 1)).collect()
    }

    /// Number of arrows `s -> t` (1-based).
    pub fn arrow_count(&self, s: usize, t: usize) -> usize {
        self.graph.count(s - 1, t - 1)
    }

    /// The 0-based underlying multigraph.
    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    /// Sources-first topological order (1-based).
    pub fn sources_first_order(&self) -> Vec<usize> {
        self.graph
            .topological_order()
            .expect("validated quivers are acyclic")
            .into_iter()
            .map(|v| v + 1)
            .collect()
    }

    /// Whether no arrow starts at `k`.
    pub fn is_sink(&self, k: usize) -> bool {
        self.graph.arrows.iter().all(|&(s, _)| s + 1 != k)
    }

    /// The opposite quiver.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            graph: self.graph.opposite(),
        }
    }

    fn check_vertex(&self, k: usize) -> Result<()> {
        if k == 0 || k > self.n() {
            Err(Error::Index(format!("vertex {k} outside 1..={}", self.n())))
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrows: Vec<String> = self.arrows().iter().map(|(s, t)| format!("{s}->{t}")).collect();
        write!(f, "Q(n={}; {})", self.n(), arrows.join(", "))
    }
}

/// Reverses all arrows incident to `k`.
///
/// Reflecting at a vertex that is neither a sink nor a source can create an
/// oriented cycle; that is reported as [`Error::Cycle`] since the result is
/// no longer a quiver in our sense. Use [`Multigraph::reflect`] for the raw
/// operation.
pub fn reflect(q: &Quiver, k: usize) -> Result<Quiver> {
    q.check_vertex(k)?;
    let graph = q.graph.reflect(k - 1);
    graph.topological_order().map_err(|v| Error::Cycle(v + 1))?;
    Ok(Quiver { graph })
}

/// A symmetric generalized Cartan matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    /// Size `n`.
    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// Entry `c_{ij}` for 1-based `i`, `j`.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i - 1][j - 1]
    }

    /// Rows of the matrix.
    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }
}

/// The Cartan matrix of the underlying graph: `2` on the diagonal and minus
/// the number of edges between `i` and `j` elsewhere.
pub fn cartan(q: &Quiver) -> CartanMatrix {
    let n = q.n();
    let mut entries = vec![vec![0i64; n]; n];
    for (i, row) in entries.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(s, t) in q.graph.arrows() {
        entries[s][t] -= 1;
        entries[t][s] -= 1;
    }
    CartanMatrix { entries }
}

/// A weight, stored through its pairings with the simple coroots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    /// The fundamental weight of vertex `i` (1-based).
    pub fn fundamental(n: usize, i: usize) -> Weight {
        let mut v = vec![0; n];
        v[i - 1] = 1;
        Weight(v)
    }

    /// Pairing with the coroot of vertex `i` (1-based).
    pub fn pairing(&self, i: usize) -> i64 {
        self.0[i - 1]
    }
}

/// An element of the root lattice in the basis of simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootVec(pub Vec<i64>);

impl RootVec {
    /// The simple root of vertex `i` (1-based).
    pub fn simple(n: usize, i: usize) -> RootVec {
        let mut v = vec![0; n];
        v[i - 1] = 1;
        RootVec(v)
    }

    /// Whether every coordinate is nonnegative and at least one is positive.
    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&x| x >= 0) && self.0.iter().any(|&x| x > 0)
    }
}

/// Simple reflection on a weight: `λ'_j = λ_j − λ_i c_{ij}`.
pub fn s_weight(w: &Weight, i: usize, c: &CartanMatrix) -> Weight {
    let li = w.pairing(i);
    Weight((1..=c.n()).map(|j| w.pairing(j) - li * c.get(i, j)).collect())
}

/// Simple reflection on a root: only coordinate `i` changes, to
/// `d_i − Σ_j d_j c_{ji}`.
pub fn s_root(d: &RootVec, i: usize, c: &CartanMatrix) -> RootVec {
    let pairing: i64 = (1..=c.n()).map(|j| d.0[j - 1] * c.get(j, i)).sum();
    let mut out = d.clone();
    out.0[i - 1] -= pairing;
    out
}

/// A word `(i_1, …, i_r)` standing for `w = s_{i_r} ⋯ s_{i_1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReducedWord {
    /// Letters in the order `i_1, …, i_r`.
    pub letters: Vec<usize>,
}

impl ReducedWord {
    /// Length of the word.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Whether the word is empty.
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The letters in the written order `(i_r, …, i_1)` of the product
    /// `s_{i_r} ⋯ s_{i_1}`.
    pub fn written(&self) -> Vec<usize> {
        self.letters.iter().rev().copied().collect()
    }
}

/// The word read off an adapted ordering: `i_j` is the quiver vertex of
/// `x(j)`.
///
/// The result is checked to be adapted to `Q^op`: each letter must be a sink
/// of the opposite quiver after reflecting at all earlier letters.
pub fn adapted_word(cat: &CategoryModel, ordering: &AdaptedOrdering) -> Result<ReducedWord> {
    cat.validate_ordering(ordering)?;
    let letters: Vec<usize> = ordering.vertices().iter().map(|v| v.i).collect();
    let mut g = cat.terminal().quiver().graph().opposite();
    for (pos, &i) in letters.iter().enumerate() {
        if g.arrows().iter().any(|&(s, _)| s == i - 1) {
            return Err(Error::NotAdapted(format!(
                "letter {i} at position {} is not a sink",
                pos + 1
            )));
        }
        g = g.reflect(i - 1);
    }
    Ok(ReducedWord { letters })
}

/// The inversion roots `α_{i_1}, s_{i_1}(α_{i_2}), …,
/// s_{i_1}⋯s_{i_{r−1}}(α_{i_r})`.
///
/// A negative or repeated root certifies that the word is not reduced.
pub fn inversion_roots(word: &ReducedWord, c: &CartanMatrix) -> Result<Vec<RootVec>> {
    let n = c.n();
    let mut roots = Vec::with_capacity(word.len());
    let mut seen = BTreeSet::new();
    for (k, &ik) in word.letters.iter().enumerate() {
        if ik == 0 || ik > n {
            return Err(Error::Index(format!("letter {ik} outside 1..={n}")));
        }
        let mut beta = RootVec::simple(n, ik);
        for &j in word.letters[..k].iter().rev() {
            beta = s_root(&beta, j, c);
        }
        if !beta.is_positive() {
            return Err(Error::NotReduced(format!("root {} is {:?}", k + 1, beta.0)));
        }
        if !seen.insert(beta.clone()) {
            return Err(Error::NotReduced(format!("root {} repeats {:?}", k + 1, beta.0)));
        }
        roots.push(beta);
    }
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kronecker_tail() -> Quiver {
        validate_quiver(3, &[(1, 2), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn validation_errors() {
        assert!(validate_quiver(2, &[(1, 2)]).is_ok());
        assert!(validate_quiver(3, &[(1, 2), (1, 2), (2, 3)]).is_ok());
        assert!(matches!(validate_quiver(2, &[(1, 2), (2, 1)]), Err(Error::Cycle(_))));
        assert!(matches!(validate_quiver(2, &[(1, 1)]), Err(Error::Loop(1))));
        assert!(matches!(validate_quiver(3, &[(1, 2)]), Err(Error::Disconnected)));
        assert!(matches!(validate_quiver(1, &[]), Err(Error::TooSmall(1))));
    }

    #[test]
    fn cartan_matrices() {
        let a2 = validate_quiver(2, &[(1, 2)]).unwrap();
        assert_eq!(cartan(&a2).rows(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(
            cartan(&kronecker_tail()).rows(),
            &[vec![2, -2, 0], vec![-2, 2, -1], vec![0, -1, 2]]
        );
        let a3 = validate_quiver(3, &[(2, 1), (2, 3)]).unwrap();
        assert_eq!(cartan(&a3).rows(), &[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
    }

    #[test]
    fn reflections_of_quivers() {
        let a2 = validate_quiver(2, &[(1, 2)]).unwrap();
        assert_eq!(reflect(&a2, 2).unwrap().arrows(), vec![(2, 1)]);
        let r = reflect(&kronecker_tail(), 1).unwrap();
        assert_eq!(r.arrows(), vec![(2, 1), (2, 1), (2, 3)]);
        assert!(matches!(reflect(&a2, 3), Err(Error::Index(_))));
        let tri = validate_quiver(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert!(matches!(reflect(&tri, 2), Err(Error::Cycle(_))));
    }

    #[test]
    fn weight_reflection() {
        let c = cartan(&kronecker_tail());
        let w2 = Weight::fundamental(3, 2);
        assert_eq!(s_weight(&w2, 2, &c).0, vec![2, -1, 1]);
        assert_eq!(s_weight(&w2, 1, &c), w2);
        assert_eq!(s_weight(&s_weight(&w2, 2, &c), 2, &c), w2);
    }

    #[test]
    fn root_reflection() {
        let q = validate_quiver(3, &[(1, 2), (1, 3), (2, 3)]).unwrap();
        let c = cartan(&q);
        let mut beta = RootVec::simple(3, 1);
        for i in [3, 2, 1] {
            beta = s_root(&beta, i, &c);
        }
        assert_eq!(beta.0, vec![2, 2, 1]);
        assert_eq!(s_root(&RootVec::simple(3, 2), 2, &c).0, vec![0, -1, 0]);
    }

    #[test]
    fn inversion_roots_small_words() {
        let c = cartan(&kronecker_tail());
        let one = ReducedWord { letters: vec![1] };
        assert_eq!(inversion_roots(&one, &c).unwrap(), vec![RootVec::simple(3, 1)]);
        let twice = ReducedWord { letters: vec![1, 1] };
        assert!(matches!(inversion_roots(&twice, &c), Err(Error::NotReduced(_))));
    }

    #[test]
    fn topological_order_is_sources_first() {
        let q = validate_quiver(4, &[(4, 3), (3, 2), (2, 1)]).unwrap();
        assert_eq!(q.sources_first_order(), vec![4, 3, 2, 1]);
    }
}
