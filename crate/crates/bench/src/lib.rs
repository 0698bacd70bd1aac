//! Fixtures shared by the benchmarks: the worked examples as ready-made
//! categories.

use terminal_cluster::{
    build_category, validate_quiver, AdaptedOrdering, CategoryModel, MeshVertex, Result, TerminalData,
};

/// Terminal data from 1-based arrows and a level vector.
pub fn terminal(n: usize, arrows: &[(usize, usize)], t: Vec<usize>) -> Result<TerminalData> {
    TerminalData::new(validate_quiver(n, arrows)?, t)
}

/// `1 ⇉ 2 -> 3` with `t = (2, 1, 1)`.
pub fn kronecker() -> TerminalData {
    terminal(3, &[(1, 2), (1, 2), (2, 3)], vec![2, 1, 1]).expect("valid example")
}

/// The adapted ordering `x(1) < … < x(7)` of the Kronecker example.
pub fn kronecker_ordering() -> AdaptedOrdering {
    AdaptedOrdering::new(
        [(1, 0), (2, 0), (1, 1), (3, 0), (2, 1), (1, 2), (3, 1)]
            .iter()
            .map(|&(i, a)| MeshVertex::new(i, a))
            .collect(),
    )
}

/// Five vertices with a double arrow, `t = (3, 2, 3, 1, 2)`: 19 mutations.
pub fn five_vertex() -> TerminalData {
    terminal(5, &[(3, 1), (3, 5), (3, 5), (5, 2), (2, 4)], vec![3, 2, 3, 1, 2]).expect("valid example")
}

/// `E_8` with every level 14: 840 mutations.
pub fn e8() -> TerminalData {
    terminal(
        8,
        &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (8, 5)],
        vec![14; 8],
    )
    .expect("valid example")
}

/// The category of terminal data that is known to be valid.
pub fn category(td: &TerminalData) -> CategoryModel {
    build_category(td).expect("valid example")
}
