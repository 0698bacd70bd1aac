//! Exact symbolic engine for cluster structures attached to terminal
//! modules over preprojective algebras.
//!
//! Starting from an acyclic quiver `Q` and a level vector `t`, the crate
//! builds the truncated translation quiver of the terminal module, knits
//! dimension and hom data in its mesh category, and sets up the initial
//! seed. On top of that it provides every mutation calculus needed to walk
//! from the initial cluster-tilting object to its dual:
//!
//! * [`exchange`] — exchange matrices and matrix mutation;
//! * [`laurent`] — exact Laurent polynomials for cluster variables;
//! * [`cluster`] — seeds, seed mutation and the dimension-vector trackers;
//! * [`rigidpath`] — the explicit mutation schedule, the generalized
//!   determinantal identities and dual PBW expansions;
//! * [`euler`] — shuffle algebra, Euler-characteristic generating functions
//!   and a flag-counting oracle;
//! * [`minors`] — type-A unitriangular minors and their matching with
//!   interval variables.
//!
//! ```
//! use terminal_cluster::{build_category, validate_quiver, IntervalLabel, TerminalData};
//!
//! let q = validate_quiver(3, &[(1, 2), (1, 2), (2, 3)]).unwrap();
//! let cat = build_category(&TerminalData::new(q, vec![2, 1, 1]).unwrap()).unwrap();
//! let v = cat.projected_dimvec(IntervalLabel::new(1, 2, 2)).unwrap();
//! assert_eq!(cat.triangle(&v), "(1,3,9 | 2,6 | 0,2)");
//! ```

pub mod cluster;
pub mod error;
pub mod euler;
pub mod exchange;
pub mod laurent;
pub mod mesh;
pub mod minors;
pub mod quiver;
pub mod rigidpath;

pub use error::{Error, Result};
pub use euler::{flag_oracle, g_module, shuffle, ShuffleSeries, ThinModule, Word};
pub use laurent::LaurentPoly;
pub use mesh::{build_category, dim_vectors, AdaptedOrdering, CategoryModel, IntervalLabel, MeshVertex, TerminalData};
pub use quiver::{
    adapted_word, cartan, inversion_roots, reflect, s_root, s_weight, validate_quiver, CartanMatrix, Multigraph,
    Quiver, ReducedWord, RootVec, Weight,
};

pub use cluster::{initial_seed, mutate_seed, Seed};
pub use exchange::{b_matrix, mutate_matrix, ExchangeMatrix};
pub use rigidpath::{det_identity, make_schedule, pbw_expand, run_path, Schedule};
