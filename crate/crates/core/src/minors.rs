//! Type-A minors: symbolic unitriangular matrices, their minors, the map
//! sending interval variables `T_{i,[a,b]}` of the linearly oriented `A_n`
//! example to minors, and products of one-parameter subgroups used to
//! compare minors with evaluated Euler-characteristic generating functions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// A square matrix of Laurent polynomials over a shared variable set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicMatrix {
    nvars: usize,
    entries: Vec<Vec<LaurentPoly>>,
}

impl SymbolicMatrix {
    /// Wraps entries, checking that the matrix is square and that every
    /// entry uses `nvars` variables.
    pub fn new(nvars: usize, entries: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let m = entries.len();
        if entries.iter().any(|r| r.len() != m) {
            return Err(Error::Shape("matrix must be square".into()));
        }
        if entries.iter().flatten().any(|e| e.nvars() != nvars) {
            return Err(Error::ArityMismatch(nvars, 0));
        }
        Ok(SymbolicMatrix { nvars, entries })
    }

    /// The identity matrix.
    pub fn identity(size: usize, nvars: usize) -> Self {
        let entries = (0..size)
            .map(|r| {
                (0..size)
                    .map(|c| {
                        if r == c {
                            LaurentPoly::one(nvars)
                        } else {
                            LaurentPoly::zero(nvars)
                        }
                    })
                    .collect()
            })
            .collect();
        SymbolicMatrix { nvars, entries }
    }

    /// Number of rows.
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// Number of variables.
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Entry in 1-based row `r`, column `c`.
    pub fn entry(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.entries[r - 1][c - 1]
    }

    /// Matrix product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.size() != other.size() {
            return Err(Error::Shape("matrix sizes differ".into()));
        }
        if self.nvars != other.nvars {
            return Err(Error::ArityMismatch(self.nvars, other.nvars));
        }
        let m = self.size();
        let mut entries = vec![vec![LaurentPoly::zero(self.nvars); m]; m];
        for (r, row) in entries.iter_mut().enumerate() {
            for (c, e) in row.iter_mut().enumerate() {
                for k in 0..m {
                    let (a, b) = (&self.entries[r][k], &other.entries[k][c]);
                    if !a.is_zero() && !b.is_zero() {
                        *e = &*e + &(a * b);
                    }
                }
            }
        }
        Ok(SymbolicMatrix {
            nvars: self.nvars,
            entries,
        })
    }
}

/// The size-`m` upper unitriangular matrix whose strictly upper entries are
/// the variables `x_1, x_2, …` filled row by row.
pub fn unitriangular(m: usize) -> Result<SymbolicMatrix> {
    if m < 2 {
        return Err(Error::Shape(format!("size {m} < 2")));
    }
    let nvars = m * (m - 1) / 2;
    let mut x = SymbolicMatrix::identity(m, nvars);
    let mut next = 0;
    for r in 0..m {
        for c in r + 1..m {
            x.entries[r][c] = LaurentPoly::var(nvars, next);
            next += 1;
        }
    }
    Ok(x)
}

/// Names `x1, x2, …` of the variables of [`unitriangular`].
pub fn x_names(m: usize) -> Vec<String> {
    (1..=m * (m - 1) / 2).map(|k| format!("x{k}")).collect()
}

/// A pair of equally sized, strictly increasing, 1-based index sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MinorKey {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl MinorKey {
    /// Validates a key.
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Result<Self> {
        if rows.len() != cols.len() {
            return Err(Error::Shape(format!("{} rows but {} columns", rows.len(), cols.len())));
        }
        for set in [&rows, &cols] {
            if set.contains(&0) || set.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Index(format!("{set:?} is not an increasing 1-based set")));
            }
        }
        Ok(MinorKey { rows, cols })
    }

    /// The key with rows `[1, |J|]` and columns `J`.
    pub fn initial(cols: Vec<usize>) -> Result<Self> {
        MinorKey::new((1..=cols.len()).collect(), cols)
    }

    /// Row set `I`.
    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Column set `J`.
    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    /// Removes the longest common prefix `[1, b]` of `I` and `J`, which
    /// leaves minors of unitriangular matrices unchanged.
    pub fn stripped(&self) -> MinorKey {
        let b = self
            .rows
            .iter()
            .zip(&self.cols)
            .enumerate()
            .take_while(|&(k, (&r, &c))| r == k + 1 && c == k + 1)
            .count();
        MinorKey {
            rows: self.rows[b..].to_vec(),
            cols: self.cols[b..].to_vec(),
        }
    }
}

impl fmt::Display for MinorKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |s: &[usize]| {
            let sep = if s.iter().any(|&x| x > 9) { "," } else { "" };
            s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
        };
        if self.rows.iter().enumerate().all(|(k, &r)| r == k + 1) {
            write!(f, "Δ_{{{}}}", join(&self.cols))
        } else {
            write!(f, "Δ_{{{},{}}}", join(&self.rows), join(&self.cols))
        }
    }
}

/// The minor `Δ_{I,J}` of a matrix.
///
/// Small minors use cofactor expansion, larger ones fraction-free
/// elimination; both are exact.
pub fn minor(mtx: &SymbolicMatrix, key: &MinorKey) -> Result<LaurentPoly> {
    let m = mtx.size();
    if key.rows.iter().chain(&key.cols).any(|&x| x > m) {
        return Err(Error::Index(format!("key {key} exceeds size {m}")));
    }
    let sub: Vec<Vec<LaurentPoly>> = key
        .rows
        .iter()
        .map(|&r| key.cols.iter().map(|&c| mtx.entries[r - 1][c - 1].clone()).collect())
        .collect();
    if sub.len() < 6 {
        Ok(cofactor(&sub, mtx.nvars))
    } else {
        bareiss(sub, mtx.nvars)
    }
}

fn cofactor(a: &[Vec<LaurentPoly>], nvars: usize) -> LaurentPoly {
    fn go(a: &[Vec<LaurentPoly>], row: usize, cols: &mut Vec<usize>, nvars: usize) -> LaurentPoly {
        if row == a.len() {
            return LaurentPoly::one(nvars);
        }
        let mut acc = LaurentPoly::zero(nvars);
        for k in 0..cols.len() {
            let c = cols[k];
            if a[row][c].is_zero() {
                continue;
            }
            cols.remove(k);
            let term = &a[row][c] * &go(a, row + 1, cols, nvars);
            cols.insert(k, c);
            acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }
    go(a, 0, &mut (0..a.len()).collect(), nvars)
}

fn bareiss(mut a: Vec<Vec<LaurentPoly>>, nvars: usize) -> Result<LaurentPoly> {
    let n = a.len();
    let mut sign = 1;
    let mut prev = LaurentPoly::one(nvars);
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(LaurentPoly::zero(nvars)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if sign < 0 { -det } else { det })
}

/// The minor key attached to `T_{i,[a,b]}` in the linearly oriented `A_n`
/// example: `I = [1, i−a]`, `J = [1, i−b−1] ∪ [n−b+1, n−a+1]`.
pub fn interval_minor_key(i: usize, a: usize, b: usize, n: usize) -> Result<MinorKey> {
    if i == 0 || i > n || a > b || b >= i {
        return Err(Error::Index(format!(
            "(i,a,b) = ({i},{a},{b}) outside 0 <= a <= b < i <= {n}"
        )));
    }
    let rows = (1..=i - a).collect();
    let cols = (1..i - b).chain(n + 1 - b..=n + 1 - a).collect();
    MinorKey::new(rows, cols)
}

/// `x_{i_1}(t_1) ⋯ x_{i_m}(t_m)` with `x_i(t) = 1 + t E_{i,i+1}`, a matrix
/// over the variables `t_1, …, t_m`.
pub fn one_param_product(word: &[usize], size: usize) -> Result<SymbolicMatrix> {
    let m = word.len();
    let mut out = SymbolicMatrix::identity(size, m);
    for (k, &i) in word.iter().enumerate() {
        if i == 0 || i >= size {
            return Err(Error::Index(format!("letter {i} outside 1..{size}")));
        }
        // Right multiplication by 1 + t E_{i,i+1} adds t·(column i) to column i+1.
        let t = LaurentPoly::var(m, k);
        for r in 0..size {
            if !out.entries[r][i - 1].is_zero() {
                let add = &out.entries[r][i - 1] * &t;
                out.entries[r][i] = &out.entries[r][i] + &add;
            }
        }
    }
    Ok(out)
}

/// Rows `[1, j]` and columns `s_{i_1} ⋯ s_{i_k}([1, j])` (the rightmost
/// transposition applied first), sorted.
pub fn w_minor(prefix: &[usize], j: usize, n: usize) -> Result<MinorKey> {
    if j == 0 || j > n {
        return Err(Error::Index(format!("j = {j} outside 1..={n}")));
    }
    let mut cols: Vec<usize> = (1..=j).collect();
    for &i in prefix.iter().rev() {
        if i == 0 || i >= n {
            return Err(Error::Index(format!("letter {i} outside 1..{n}")));
        }
        for c in cols.iter_mut() {
            if *c == i {
                *c = i + 1;
            } else if *c == i + 1 {
                *c = i;
            }
        }
    }
    cols.sort_unstable();
    MinorKey::initial(cols)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(k: usize) -> LaurentPoly {
        LaurentPoly::var(10, k - 1)
    }

    #[test]
    fn unitriangular_layout() {
        let m = unitriangular(5).unwrap();
        assert_eq!(m.entry(2, 5), &x(7));
        assert_eq!(m.entry(1, 2), &x(1));
        assert_eq!(m.entry(4, 5), &x(10));
        assert!(m.entry(3, 1).is_zero());
        assert_eq!(unitriangular(2).unwrap().nvars(), 1);
        assert!(unitriangular(1).is_err());
    }

    #[test]
    fn small_minors() {
        let m = unitriangular(5).unwrap();
        let k = MinorKey::new(vec![2, 3], vec![3, 5]).unwrap();
        assert_eq!(minor(&m, &k).unwrap(), &(&x(5) * &x(9)) - &x(7));
        assert_eq!(minor(&m, &MinorKey::initial(vec![3]).unwrap()).unwrap(), x(2));
        let diag = MinorKey::new(vec![4], vec![4]).unwrap();
        assert!(minor(&m, &diag).unwrap().is_unit());
        let zero = MinorKey::new(vec![4, 5], vec![1, 2]).unwrap();
        assert!(minor(&m, &zero).unwrap().is_zero());
    }

    #[test]
    fn key_display_and_stripping() {
        let k = MinorKey::new(vec![1, 2, 3], vec![1, 2, 5]).unwrap();
        assert_eq!(k.to_string(), "Δ_{125}");
        assert_eq!(k.stripped().to_string(), "Δ_{3,5}");
        assert!(MinorKey::new(vec![1], vec![1, 2]).is_err());
        assert!(MinorKey::new(vec![2, 1], vec![1, 2]).is_err());
    }

    #[test]
    fn elimination_agrees_with_cofactors() {
        let m = unitriangular(7).unwrap();
        let k = MinorKey::new(vec![1, 2, 3, 4, 5, 6], vec![2, 3, 4, 5, 6, 7]).unwrap();
        let a: Vec<Vec<LaurentPoly>> = k
            .rows
            .iter()
            .map(|&r| k.cols.iter().map(|&c| m.entry(r, c).clone()).collect())
            .collect();
        assert_eq!(minor(&m, &k).unwrap(), cofactor(&a, m.nvars()));
    }

    #[test]
    fn interval_keys() {
        assert_eq!(interval_minor_key(2, 0, 0, 4).unwrap().to_string(), "Δ_{15}");
        assert_eq!(interval_minor_key(1, 0, 0, 4).unwrap().to_string(), "Δ_{5}");
        assert_eq!(interval_minor_key(4, 3, 3, 4).unwrap().to_string(), "Δ_{2}");
        assert!(interval_minor_key(2, 0, 2, 4).is_err());
    }

    #[test]
    fn one_parameter_products() {
        let p = one_param_product(&[1], 3).unwrap();
        assert_eq!(p.entry(1, 2), &LaurentPoly::var(1, 0));
        let p = one_param_product(&[1, 1], 3).unwrap();
        assert_eq!(p.entry(1, 2), &(&LaurentPoly::var(2, 0) + &LaurentPoly::var(2, 1)));
        assert!(one_param_product(&[3], 3).is_err());
    }

    #[test]
    fn permuted_columns() {
        assert_eq!(w_minor(&[], 2, 4).unwrap(), MinorKey::initial(vec![1, 2]).unwrap());
        assert_eq!(w_minor(&[2, 1], 1, 4).unwrap(), MinorKey::initial(vec![3]).unwrap());
        assert_eq!(
            w_minor(&[1, 2, 3], 3, 4).unwrap(),
            MinorKey::initial(vec![2, 3, 4]).unwrap()
        );
    }
}
