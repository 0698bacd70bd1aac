//! The truncated translation quiver of a terminal module and the additive
//! functions knitted on it: dimension vectors, hom dimensions, projected
//! dimension vectors and dimensions of standard modules.
//!
//! A terminal module is encoded by levels `t_i`: its summands are the
//! translates `τ^a(I_i)` of the indecomposable injectives for
//! `0 ≤ a ≤ t_i`, written `(i,a)`. For each arrow `i -> j` of `Q` the
//! quiver `Γ_M` has arrows `(j,z) -> (i,z)` and `(i,z+1) -> (j,z)`;
//! `Γ_M*` adds the translation arrows `(i,z) -> (i,z+1)`.
//!
//! The alternative reading, with the roles of `Q` and `Q^op` swapped, sends
//! `(i,z) -> (j,z)` instead; it does not reproduce the hom triangles of the
//! worked examples (compare the tests of this module) and is not used.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::{Multigraph, Quiver, RootVec};

/// A quiver together with a level `t_i ≥ 0` for each vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TerminalData {
    q: Quiver,
    t: Vec<usize>,
}

impl TerminalData {
    /// Checks that `t` has one entry per vertex and that every arrow
    /// `u -> v` satisfies `t_u − 1 ≤ t_v ≤ t_u`, which makes the vertex set
    /// closed under successors.
    pub fn new(q: Quiver, t: Vec<usize>) -> Result<Self> {
        if t.len() != q.n() {
            return Err(Error::TerminalConstraint(format!(
                "expected {} levels, got {}",
                q.n(),
                t.len()
            )));
        }
        for (u, v) in q.arrows() {
            let (tu, tv) = (t[u - 1], t[v - 1]);
            if tv > tu || tv + 1 < tu {
                return Err(Error::TerminalConstraint(format!(
                    "arrow {u}->{v} with t_{u}={tu}, t_{v}={tv} needs t_{u}-1 <= t_{v} <= t_{u}"
                )));
            }
        }
        Ok(TerminalData { q, t })
    }

    /// The underlying quiver.
    pub fn quiver(&self) -> &Quiver {
        &self.q
    }

    /// Levels, entry `i − 1` for vertex `i`.
    pub fn t(&self) -> &[usize] {
        &self.t
    }

    /// Level of vertex `i` (1-based).
    pub fn level(&self, i: usize) -> usize {
        self.t[i - 1]
    }

    /// Number of summands `Σ (t_i + 1)`.
    pub fn rank(&self) -> usize {
        self.t.iter().map(|t| t + 1).sum()
    }
}

/// The summand `τ^a(I_i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MeshVertex {
    /// Quiver vertex (1-based).
    pub i: usize,
    /// Translation level.
    pub a: usize,
}

impl MeshVertex {
    /// Shorthand constructor.
    pub fn new(i: usize, a: usize) -> Self {
        MeshVertex { i, a }
    }
}

impl fmt::Display for MeshVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.a)
    }
}

/// The interval label `T_{i,[a,b]}`; labels with `a > b` stand for the unit.
///
/// Levels are signed so that shifted labels can be formed before deciding
/// whether they are meaningful.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntervalLabel {
    /// Quiver vertex (1-based).
    pub i: usize,
    /// Lower end.
    pub a: i64,
    /// Upper end.
    pub b: i64,
}

impl IntervalLabel {
    /// Shorthand constructor.
    pub fn new(i: usize, a: i64, b: i64) -> Self {
        IntervalLabel { i, a, b }
    }

    /// Whether this is the empty interval, i.e. the unit.
    pub fn is_unit(&self) -> bool {
        self.a > self.b
    }

    /// Whether `a = b`.
    pub fn is_single(&self) -> bool {
        self.a == self.b
    }
}

impl fmt::Display for IntervalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T_{{{},[{},{}]}}", self.i, self.a, self.b)
    }
}

/// An ordering `x(1) < … < x(r)` of the vertices of `Γ_M`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AdaptedOrdering(Vec<MeshVertex>);

impl AdaptedOrdering {
    /// Wraps a vertex list without validation; see
    /// [`CategoryModel::validate_ordering`].
    pub fn new(vertices: Vec<MeshVertex>) -> Self {
        AdaptedOrdering(vertices)
    }

    /// The vertices `x(1), …, x(r)`.
    pub fn vertices(&self) -> &[MeshVertex] {
        &self.0
    }
}

/// Everything derived from terminal data.
///
/// Vertices are stored in display order: by quiver vertex, and within each
/// vertex by decreasing level, i.e. `(1,t_1), …, (1,0), (2,t_2), …`. All
/// vectors indexed by vertices (dimension vectors of hom spaces, trackers,
/// `d_Δ`) use this order.
#[derive(Clone, Debug)]
pub struct CategoryModel {
    terminal: TerminalData,
    vertices: Vec<MeshVertex>,
    offsets: Vec<usize>,
    gamma_m: Multigraph,
    gamma_m_star: Multigraph,
    dims: Vec<RootVec>,
    hom: Vec<Vec<u64>>,
}

/// Knits the dimension vectors `dim τ^a(I_i)` for all vertices of the
/// region.
///
/// `dim I_i` counts paths `j -> i` in `Q`; higher translates follow from the
/// mesh relation `dim τY = Σ dim(middle terms) − dim Y`. A translate that
/// comes out non-positive does not exist and is reported as
/// [`Error::DynkinOverflow`].
pub fn dim_vectors(td: &TerminalData) -> Result<BTreeMap<MeshVertex, RootVec>> {
    let q = td.quiver();
    let n = q.n();
    let order = q.sources_first_order();
    let arrows = q.arrows();
    let mut dims: BTreeMap<MeshVertex, RootVec> = BTreeMap::new();
    // Entry j of dim I_i counts paths j -> i; sources-first order makes every
    // predecessor of i available before i.
    for &i in &order {
        let mut v = vec![0i64; n];
        v[i - 1] = 1;
        for &(k, tgt) in &arrows {
            if tgt == i {
                let pk = &dims[&MeshVertex::new(k, 0)].0;
                for (x, y) in v.iter_mut().zip(pk) {
                    *x += y;
                }
            }
        }
        dims.insert(MeshVertex::new(i, 0), RootVec(v));
    }
    let max_t = td.t().iter().copied().max().unwrap_or(0);
    for z in 0..max_t {
        for &i in &order {
            if td.level(i) < z + 1 {
                continue;
            }
            let mut v: Vec<i64> = dims[&MeshVertex::new(i, z)].0.iter().map(|x| -x).collect();
            for &(s, tgt) in &arrows {
                let mid = if s == i {
                    MeshVertex::new(tgt, z)
                } else if tgt == i {
                    MeshVertex::new(s, z + 1)
                } else {
                    continue;
                };
                let d = dims
                    .get(&mid)
                    .ok_or_else(|| Error::TerminalConstraint(format!("mesh input {mid} missing")))?;
                for (x, y) in v.iter_mut().zip(&d.0) {
                    *x += y;
                }
            }
            let root = RootVec(v);
            if !root.is_positive() {
                return Err(Error::DynkinOverflow(format!(
                    "translate ({i},{}) would have dimension vector {:?}",
                    z + 1,
                    root.0
                )));
            }
            dims.insert(MeshVertex::new(i, z + 1), root);
        }
    }
    Ok(dims)
}

/// Builds the category model: vertices, `Γ_M`, `Γ_M*`, dimension vectors
/// and the full hom-dimension table.
pub fn build_category(td: &TerminalData) -> Result<CategoryModel> {
    let dim_map = dim_vectors(td)?;
    let n = td.quiver().n();
    let mut vertices = Vec::with_capacity(td.rank());
    let mut offsets = Vec::with_capacity(n);
    for i in 1..=n {
        offsets.push(vertices.len());
        for a in (0..=td.level(i)).rev() {
            vertices.push(MeshVertex::new(i, a));
        }
    }
    let dims = vertices.iter().map(|v| dim_map[v].clone()).collect();
    let mut cat = CategoryModel {
        terminal: td.clone(),
        vertices,
        offsets,
        gamma_m: Multigraph::new(0, vec![]),
        gamma_m_star: Multigraph::new(0, vec![]),
        dims,
        hom: vec![],
    };
    let r = cat.vertices.len();
    let mut mesh_arrows = Vec::new();
    for (i, j) in td.quiver().arrows() {
        for z in 0..=td.level(i).max(td.level(j)) {
            if let (Some(s), Some(t)) = (cat.index_of(MeshVertex::new(j, z)), cat.index_of(MeshVertex::new(i, z))) {
                mesh_arrows.push((s, t));
            }
            if let (Some(s), Some(t)) = (
                cat.index_of(MeshVertex::new(i, z + 1)),
                cat.index_of(MeshVertex::new(j, z)),
            ) {
                mesh_arrows.push((s, t));
            }
        }
    }
    let mut star_arrows = mesh_arrows.clone();
    for (idx, v) in cat.vertices.iter().enumerate() {
        if let Some(next) = cat.index_of(MeshVertex::new(v.i, v.a + 1)) {
            star_arrows.push((idx, next));
        }
    }
    cat.gamma_m = Multigraph::new(r, mesh_arrows);
    cat.gamma_m_star = Multigraph::new(r, star_arrows);
    cat.hom = (0..r).map(|x| cat.knit_hom_from(x)).collect();
    Ok(cat)
}

impl CategoryModel {
    /// The terminal data the model was built from.
    pub fn terminal(&self) -> &TerminalData {
        &self.terminal
    }

    /// Number of vertices `r`.
    pub fn r(&self) -> usize {
        self.vertices.len()
    }

    /// Vertices in display order.
    pub fn vertices(&self) -> &[MeshVertex] {
        &self.vertices
    }

    /// Position of a vertex in display order, if it belongs to the region.
    pub fn index_of(&self, v: MeshVertex) -> Option<usize> {
        let n = self.terminal.quiver().n();
        if v.i == 0 || v.i > n || v.a > self.terminal.level(v.i) {
            return None;
        }
        Some(self.offsets[v.i - 1] + self.terminal.level(v.i) - v.a)
    }

    fn require(&self, v: MeshVertex) -> Result<usize> {
        self.index_of(v)
            .ok_or_else(|| Error::Index(format!("vertex {v} is not in the region")))
    }

    /// `Γ_M` on vertex positions.
    pub fn gamma_m(&self) -> &Multigraph {
        &self.gamma_m
    }

    /// `Γ_M*` on vertex positions.
    pub fn gamma_m_star(&self) -> &Multigraph {
        &self.gamma_m_star
    }

    /// Dimension vectors in display order.
    pub fn dims(&self) -> &[RootVec] {
        &self.dims
    }

    /// Dimension vector of one vertex.
    pub fn dim(&self, v: MeshVertex) -> Result<&RootVec> {
        Ok(&self.dims[self.require(v)?])
    }

    /// The table `hom[x][z] = dim Hom(M_x, M_z)` over display positions.
    pub fn hom_table(&self) -> &[Vec<u64>] {
        &self.hom
    }

    /// Knits the covariant hom functor of the vertex at position `x`.
    ///
    /// Levels are processed from `level(x)` down to `0`, and within a level
    /// sinks of `Q` come first so that every mesh input is known. Vertices
    /// above `x` or outside the region carry the value `0`.
    fn knit_hom_from(&self, x: usize) -> Vec<u64> {
        let q = self.terminal.quiver();
        let arrows = q.arrows();
        let mut order = q.sources_first_order();
        order.reverse();
        let xv = self.vertices[x];
        let mut h = vec![0i64; self.r()];
        let val = |h: &[i64], v: MeshVertex| -> i64 {
            if v.a > xv.a {
                return 0;
            }
            self.index_of(v).map(|p| h[p]).unwrap_or(0)
        };
        for z in (0..=xv.a).rev() {
            for &i in &order {
                let Some(p) = self.index_of(MeshVertex::new(i, z)) else {
                    continue;
                };
                let mut s = if p == x { 1 } else { 0 };
                for &(u, v) in &arrows {
                    if u == i {
                        s += val(&h, MeshVertex::new(v, z));
                    } else if v == i {
                        s += val(&h, MeshVertex::new(u, z + 1));
                    }
                }
                s -= val(&h, MeshVertex::new(i, z + 1));
                h[p] = s;
            }
        }
        h.into_iter()
            .map(|v| u64::try_from(v).expect("knitted hom dimensions are nonnegative"))
            .collect()
    }

    /// `dim Hom(M_x, M_z)`.
    pub fn hom_dim(&self, x: MeshVertex, z: MeshVertex) -> Result<u64> {
        Ok(self.hom[self.require(x)?][self.require(z)?])
    }

    /// The dimension vector of `Hom(T_{i,[a,b]}, T_M)`: entry `s` is
    /// `Σ_{l=a}^{b} dim Hom(M_{(i,l)}, M_s)`.
    pub fn projected_dimvec(&self, lbl: IntervalLabel) -> Result<Vec<i64>> {
        let t = self.level_checked(lbl.i)? as i64;
        if lbl.a < 0 || lbl.a > lbl.b || lbl.b > t {
            return Err(Error::Index(format!("label {lbl} outside 0 <= a <= b <= {t}")));
        }
        let mut out = vec![0i64; self.r()];
        for l in lbl.a..=lbl.b {
            let row = &self.hom[self.require(MeshVertex::new(lbl.i, l as usize))?];
            for (o, &h) in out.iter_mut().zip(row) {
                *o += h as i64;
            }
        }
        Ok(out)
    }

    fn level_checked(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.terminal.quiver().n() {
            return Err(Error::Index(format!("vertex {i} out of range")));
        }
        Ok(self.terminal.level(i))
    }

    /// The canonical adapted ordering: levels ascending, and within a level
    /// sources of `Q` first.
    pub fn canonical_ordering(&self) -> AdaptedOrdering {
        let order = self.terminal.quiver().sources_first_order();
        let max_t = self.terminal.t().iter().copied().max().unwrap_or(0);
        let mut out = Vec::with_capacity(self.r());
        for z in 0..=max_t {
            for &i in &order {
                if z <= self.terminal.level(i) {
                    out.push(MeshVertex::new(i, z));
                }
            }
        }
        AdaptedOrdering(out)
    }

    /// Checks that an ordering lists every vertex exactly once and that
    /// every arrow `x(j) -> x(i)` of `Γ_M` has `j > i`.
    pub fn validate_ordering(&self, ord: &AdaptedOrdering) -> Result<()> {
        let pos = self.ordering_positions(ord)?;
        for &(s, t) in self.gamma_m.arrows() {
            if pos[s] < pos[t] {
                return Err(Error::NotAdapted(format!(
                    "arrow {} -> {} points forward",
                    self.vertices[s], self.vertices[t]
                )));
            }
        }
        Ok(())
    }

    /// `pos[p]` = index in the ordering of the vertex at display position `p`.
    fn ordering_positions(&self, ord: &AdaptedOrdering) -> Result<Vec<usize>> {
        if ord.0.len() != self.r() {
            return Err(Error::NotAdapted(format!(
                "ordering has {} vertices, expected {}",
                ord.0.len(),
                self.r()
            )));
        }
        let mut pos = vec![usize::MAX; self.r()];
        for (k, &v) in ord.0.iter().enumerate() {
            let p = self
                .index_of(v)
                .ok_or_else(|| Error::NotAdapted(format!("{v} is not a vertex")))?;
            if pos[p] != usize::MAX {
                return Err(Error::NotAdapted(format!("{v} listed twice")));
            }
            pos[p] = k;
        }
        Ok(pos)
    }

    /// Dimensions of the standard modules: entry for `x(j)` is
    /// `Σ_{j' ≤ j} dim Hom(M_{x(j)}, M_{x(j')})`, returned in display order.
    pub fn delta_dims(&self, ord: &AdaptedOrdering) -> Result<Vec<i64>> {
        self.validate_ordering(ord)?;
        let pos = self.ordering_positions(ord)?;
        Ok((0..self.r())
            .map(|p| {
                (0..self.r())
                    .filter(|&q| pos[q] <= pos[p])
                    .map(|q| self.hom[p][q] as i64)
                    .sum()
            })
            .collect())
    }

    /// Formats a vertex-indexed vector as its triangle, one block per quiver
    /// vertex: `(1,3,9 | 2,6 | 0,2)`.
    pub fn triangle(&self, v: &[i64]) -> String {
        let blocks: Vec<String> = (1..=self.terminal.quiver().n())
            .map(|i| {
                let start = self.offsets[i - 1];
                let len = self.terminal.level(i) + 1;
                v[start..start + len]
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        format!("({})", blocks.join(" | "))
    }

    /// Graphviz rendering of `Γ_M` (or `Γ_M*`, with translation arrows
    /// dashed).
    pub fn to_dot(&self, star: bool) -> String {
        let mut s = String::from("digraph gamma {\n  rankdir=RL;\n");
        for (p, v) in self.vertices.iter().enumerate() {
            let d: Vec<String> = self.dims[p].0.iter().map(|x| x.to_string()).collect();
            s.push_str(&format!("  v{p} [label=\"{v}\\n[{}]\"];\n", d.join(",")));
        }
        for &(a, b) in self.gamma_m.arrows() {
            s.push_str(&format!("  v{a} -> v{b};\n"));
        }
        if star {
            for &(a, b) in self.gamma_m_star.arrows() {
                if self.vertices[a].i == self.vertices[b].i {
                    s.push_str(&format!("  v{a} -> v{b} [style=dashed];\n"));
                }
            }
        }
        s.push_str("}\n");
        s
    }

    /// A serializable summary keyed by `"(i,a)"` strings.
    pub fn report(&self, ord: &AdaptedOrdering) -> Result<CategoryReport> {
        let names: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        let arrows = |g: &Multigraph| {
            g.arrows()
                .iter()
                .map(|&(a, b)| (names[a].clone(), names[b].clone()))
                .collect()
        };
        Ok(CategoryReport {
            vertices: names.clone(),
            gamma_m: arrows(&self.gamma_m),
            gamma_m_star: arrows(&self.gamma_m_star),
            dims: names
                .iter()
                .cloned()
                .zip(self.dims.iter().map(|d| d.0.clone()))
                .collect(),
            hom_table: self.hom.clone(),
            ordering: ord.0.iter().map(|v| v.to_string()).collect(),
            d_delta: self.delta_dims(ord)?,
        })
    }
}

/// Serializable view of a [`CategoryModel`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryReport {
    /// Vertices in display order.
    pub vertices: Vec<String>,
    /// Arrows of `Γ_M`.
    pub gamma_m: Vec<(String, String)>,
    /// Arrows of `Γ_M*`.
    pub gamma_m_star: Vec<(String, String)>,
    /// Dimension vectors keyed by vertex.
    pub dims: BTreeMap<String, Vec<i64>>,
    /// Hom dimensions, rows and columns in display order.
    pub hom_table: Vec<Vec<u64>>,
    /// The adapted ordering used for `d_delta`.
    pub ordering: Vec<String>,
    /// Dimensions of the standard modules in display order.
    pub d_delta: Vec<i64>,
}
