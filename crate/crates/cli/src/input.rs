//! Input files and argument values: quivers, orderings, seeds and
//! mutation targets.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Deserialize;
use terminal_cluster::{
    build_category, validate_quiver, AdaptedOrdering, CategoryModel, ExchangeMatrix, IntervalLabel, MeshVertex, Seed,
    TerminalData,
};

use crate::error::{CliError, CliResult};

/// Quiver file: `{"n": 3, "arrows": [[1, 2], [1, 2], [2, 3]]}` with 1-based
/// vertices; repeated arrows are parallel arrows.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverFile {
    /// Number of vertices.
    pub n: usize,
    /// Arrows as `[source, target]` pairs.
    pub arrows: Vec<(usize, usize)>,
}

/// Exchange-matrix seed file: `{"b": [[0, 1], [-1, 0]], "frozen": [3]}` with
/// 1-based frozen positions. The seed gets fresh variables `y1, …, yr`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    /// Skew-symmetric exchange matrix.
    pub b: Vec<Vec<i64>>,
    /// Frozen positions.
    #[serde(default)]
    pub frozen: Vec<usize>,
}

/// Choice of adapted ordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderingArg {
    /// The canonical ordering of the category.
    Canonical,
    /// A JSON file holding a list of `[i, a]` vertices.
    File(PathBuf),
}

impl FromStr for OrderingArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "canonical" => Ok(OrderingArg::Canonical),
            _ => s
                .strip_prefix("file:")
                .filter(|p| !p.is_empty())
                .map(|p| OrderingArg::File(PathBuf::from(p)))
                .ok_or_else(|| format!("expected `canonical` or `file:PATH`, got `{s}`")),
        }
    }
}

/// A mutation target: a 1-based seed position or an interval label.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    /// Seed position, 1-based.
    Position(usize),
    /// Interval label such as `T_{1,[1,2]}` or `1[1,2]`.
    Label(IntervalLabel),
}

impl FromStr for Target {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("expected a position or a label like `1[1,2]`, got `{s}`");
        if let Ok(p) = s.parse::<usize>() {
            return if p == 0 { Err(bad()) } else { Ok(Target::Position(p)) };
        }
        let body = s.trim();
        let body = body
            .strip_prefix("T_{")
            .and_then(|b| b.strip_suffix('}'))
            .unwrap_or(body);
        let body = body.strip_prefix('T').unwrap_or(body);
        let (i, rest) = body.split_once('[').ok_or_else(bad)?;
        let (a, b) = rest.strip_suffix(']').and_then(|r| r.split_once(',')).ok_or_else(bad)?;
        let i = i.trim_end_matches(',').trim().parse().map_err(|_| bad())?;
        let a = a.trim().parse().map_err(|_| bad())?;
        let b = b.trim().parse().map_err(|_| bad())?;
        Ok(Target::Label(IntervalLabel::new(i, a, b)))
    }
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

fn parse_json<T: for<'de> Deserialize<'de>>(path: &Path, text: &str) -> CliResult<T> {
    serde_json::from_str(text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Reads a quiver file and builds the category of the level vector `t`.
pub fn load_category(path: &Path, t: &[usize]) -> CliResult<CategoryModel> {
    let file: QuiverFile = parse_json(path, &read(path)?)?;
    let q = validate_quiver(file.n, &file.arrows)?;
    Ok(build_category(&TerminalData::new(q, t.to_vec())?)?)
}

/// Resolves and validates an ordering for `cat`.
pub fn load_ordering(cat: &CategoryModel, arg: &OrderingArg) -> CliResult<AdaptedOrdering> {
    let ord = match arg {
        OrderingArg::Canonical => cat.canonical_ordering(),
        OrderingArg::File(path) => {
            let pairs: Vec<(usize, usize)> = parse_json(path, &read(path)?)?;
            AdaptedOrdering::new(pairs.into_iter().map(|(i, a)| MeshVertex::new(i, a)).collect())
        }
    };
    cat.validate_ordering(&ord)?;
    Ok(ord)
}

/// Reads a seed: either a full serialized seed, as printed by
/// `mutate --format json`, or an exchange-matrix file.
pub fn load_seed(path: &Path) -> CliResult<Seed> {
    let text = read(path)?;
    if let Ok(seed) = serde_json::from_str::<Seed>(&text) {
        return Ok(seed);
    }
    let file: MatrixFile = parse_json(path, &text)?;
    let frozen = file
        .frozen
        .iter()
        .map(|&p| {
            p.checked_sub(1)
                .filter(|&q| q < file.b.len())
                .ok_or_else(|| CliError::Input(format!("frozen position {p} out of range")))
        })
        .collect::<CliResult<BTreeSet<usize>>>()?;
    Ok(Seed::from_matrix(ExchangeMatrix::new(file.b, frozen)?))
}

/// Writes `contents` to `path`.
pub fn write(path: &Path, contents: &str) -> CliResult<()> {
    fs::write(path, contents).map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn targets() {
        assert_eq!("3".parse::<Target>(), Ok(Target::Position(3)));
        let lbl = Target::Label(IntervalLabel::new(1, 1, 2));
        assert_eq!("1[1,2]".parse::<Target>(), Ok(lbl));
        assert_eq!("T_{1,[1,2]}".parse::<Target>(), Ok(lbl));
        assert_eq!("T1[1, 2]".parse::<Target>(), Ok(lbl));
        assert!("0".parse::<Target>().is_err());
        assert!("1[1]".parse::<Target>().is_err());
    }

    #[test]
    fn orderings() {
        assert_eq!("canonical".parse::<OrderingArg>(), Ok(OrderingArg::Canonical));
        assert_eq!(
            "file:o.json".parse::<OrderingArg>(),
            Ok(OrderingArg::File("o.json".into()))
        );
        assert!("file:".parse::<OrderingArg>().is_err());
        assert!("lex".parse::<OrderingArg>().is_err());
    }
}
