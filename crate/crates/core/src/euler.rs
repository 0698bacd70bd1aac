//! Shuffle algebra on words, the letter-insertion action `ρ_λ`, generating
//! functions of Euler characteristics of flag varieties, their evaluation,
//! and a flag-counting oracle for thin modules.
//!
//! A word `w[j_1,…,j_k]` records the composition factors of a flag of
//! submodules read from the bottom up. The generating function `g_X` of a
//! module `X` is the sum over words of the Euler characteristic of the
//! variety of flags of that type.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::mesh::{AdaptedOrdering, CategoryModel};
use crate::quiver::{adapted_word, cartan, s_weight, CartanMatrix, ReducedWord, Weight};

/// A word over the vertex alphabet `{1, …, n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word(pub Vec<usize>);

impl Word {
    /// The empty word.
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    /// Length.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Whether the word is empty.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// How often each letter `1..=n` occurs.
    pub fn content(&self, n: usize) -> Vec<i64> {
        let mut c = vec![0; n];
        for &l in &self.0 {
            c[l - 1] += 1;
        }
        c
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "w[{}]", parts.join(","))
    }
}

/// A finite linear combination of words with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ShuffleSeries {
    terms: BTreeMap<Word, BigRational>,
}

impl ShuffleSeries {
    /// The zero series.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The empty word, unit of the shuffle product.
    pub fn unit() -> Self {
        Self::word(&[], 1)
    }

    /// `c · w[letters]`.
    pub fn word(letters: &[usize], c: i64) -> Self {
        let mut s = Self::zero();
        s.add_term(Word(letters.to_vec()), BigRational::from_integer(c.into()));
        s
    }

    /// Builds a series from `(letters, coefficient)` pairs.
    pub fn from_terms<I: IntoIterator<Item = (Vec<usize>, i64)>>(terms: I) -> Self {
        let mut s = Self::zero();
        for (w, c) in terms {
            s.add_term(Word(w), BigRational::from_integer(c.into()));
        }
        s
    }

    fn add_term(&mut self, w: Word, c: BigRational) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Terms in lexicographic word order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigRational)> {
        self.terms.iter()
    }

    /// Number of words with nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Whether the series is zero.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of a word.
    pub fn coefficient(&self, letters: &[usize]) -> BigRational {
        self.terms
            .get(&Word(letters.to_vec()))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero();
        for (w, v) in &self.terms {
            out.add_term(w.clone(), v * c);
        }
        out
    }

    /// Whether every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Integer numerators over a common denominator.
    fn integer_form(&self) -> (HashMap<Vec<usize>, BigInt>, BigInt) {
        let den = self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = self
            .terms
            .iter()
            .map(|(w, c)| (w.0.clone(), c.numer() * (&den / c.denom())))
            .collect();
        (ints, den)
    }

    fn from_integer_form(ints: HashMap<Vec<usize>, BigInt>, den: &BigInt) -> Self {
        let terms = ints
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(w, c)| (Word(w), BigRational::new(c, den.clone())))
            .collect();
        ShuffleSeries { terms }
    }

    /// The common letter content if all words share one.
    pub fn homogeneous_content(&self, n: usize) -> Option<Vec<i64>> {
        let mut it = self.terms.keys().map(|w| w.content(n));
        let first = it.next()?;
        it.all(|c| c == first).then_some(first)
    }

    /// Text form `c·w[…] + …`, words in lexicographic order, unit
    /// coefficients omitted.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (idx, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            if !a.is_one() {
                s.push_str(&a.to_string());
                s.push('·');
            }
            s.push_str(&w.to_string());
        }
        s
    }

    /// Serializable map from comma-joined words to coefficient strings.
    pub fn to_json_map(&self) -> BTreeMap<String, String> {
        self.terms
            .iter()
            .map(|(w, c)| {
                let k: Vec<String> = w.0.iter().map(|l| l.to_string()).collect();
                (k.join(","), c.to_string())
            })
            .collect()
    }

    /// Inverse of [`ShuffleSeries::to_json_map`].
    pub fn from_json_map(m: &BTreeMap<String, String>) -> Result<Self> {
        let mut s = Self::zero();
        for (k, v) in m {
            let letters = if k.is_empty() {
                Vec::new()
            } else {
                k.split(',')
                    .map(|x| x.trim().parse::<usize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|e| Error::Shape(format!("bad word {k:?}: {e}")))?
            };
            let c: BigRational = v
                .parse()
                .map_err(|e| Error::Shape(format!("bad coefficient {v:?}: {e:?}")))?;
            s.add_term(Word(letters), c);
        }
        Ok(s)
    }
}

impl fmt::Display for ShuffleSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Serialize for ShuffleSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_map().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ShuffleSeries {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let m = BTreeMap::<String, String>::deserialize(d)?;
        ShuffleSeries::from_json_map(&m).map_err(serde::de::Error::custom)
    }
}

/// All interleavings of two words, with multiplicity.
fn shuffle_words(u: &[usize], v: &[usize], out: &mut Vec<Vec<usize>>) {
    fn go(u: &[usize], v: &[usize], acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if u.is_empty() || v.is_empty() {
            let mut w = acc.clone();
            w.extend_from_slice(u);
            w.extend_from_slice(v);
            out.push(w);
            return;
        }
        acc.push(u[0]);
        go(&u[1..], v, acc, out);
        acc.pop();
        acc.push(v[0]);
        go(u, &v[1..], acc, out);
        acc.pop();
    }
    go(u, v, &mut Vec::new(), out);
}

/// The commutative shuffle product, extended bilinearly.
pub fn shuffle(a: &ShuffleSeries, b: &ShuffleSeries) -> ShuffleSeries {
    let mut out = ShuffleSeries::zero();
    let mut buf = Vec::new();
    for (u, cu) in &a.terms {
        for (v, cv) in &b.terms {
            buf.clear();
            shuffle_words(&u.0, &v.0, &mut buf);
            let c = cu * cv;
            for w in buf.drain(..) {
                out.add_term(Word(w), c.clone());
            }
        }
    }
    out
}

/// `ρ_λ(f_i)`: inserts `i` at every position `r` of each word
/// `w[j_1,…,j_k]`, with coefficient `λ_i − Σ_{l ≤ r} c_{j_l,i}`.
pub fn f_action(s: &ShuffleSeries, i: usize, lambda: &Weight, c: &CartanMatrix) -> ShuffleSeries {
    let (ints, den) = s.integer_form();
    ShuffleSeries::from_integer_form(f_integral(ints, i, lambda, c), &den)
}

/// One insertion step on integer coefficients.
fn f_integral(
    s: HashMap<Vec<usize>, BigInt>,
    i: usize,
    lambda: &Weight,
    c: &CartanMatrix,
) -> HashMap<Vec<usize>, BigInt> {
    let mut out: HashMap<Vec<usize>, BigInt> = HashMap::with_capacity(s.len() * 2);
    let base = lambda.pairing(i);
    for (w, coeff) in s {
        let mut pairing = base;
        for r in 0..=w.len() {
            if r > 0 {
                pairing -= c.get(w[r - 1], i);
            }
            if pairing != 0 {
                let mut nw = Vec::with_capacity(w.len() + 1);
                nw.extend_from_slice(&w[..r]);
                nw.push(i);
                nw.extend_from_slice(&w[r..]);
                *out.entry(nw).or_insert_with(BigInt::zero) += &coeff * pairing;
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// `ρ_λ(e_i)`: removes a final letter `i`, killing words ending otherwise.
pub fn e_action(s: &ShuffleSeries, i: usize) -> ShuffleSeries {
    let mut out = ShuffleSeries::zero();
    for (w, coeff) in &s.terms {
        if w.0.last() == Some(&i) {
            out.add_term(Word(w.0[..w.len() - 1].to_vec()), coeff.clone());
        }
    }
    out
}

/// The divided power `f_i^{(b)} = f_i^b / b!`.
///
/// Computed in one sweep: placing `m_r` new letters `i` in gap `r` of a
/// word contributes `∏_k (p_{g(k)} − (k − 1))`, the product running over
/// the new letters from left to right, where `p_g` is the pairing that a
/// single insertion into gap `g` of the original word would receive.
/// Gaps separated only by letters `i` produce the same word, so they are
/// summed as one block.
///
/// With `require_integral` set, a non-integral result is reported as
/// [`Error::NonIntegral`]; module-derived inputs always stay integral.
pub fn divided_f(
    s: &ShuffleSeries,
    i: usize,
    b: u32,
    lambda: &Weight,
    c: &CartanMatrix,
    require_integral: bool,
) -> Result<ShuffleSeries> {
    let (ints, den) = s.integer_form();
    let b = b as usize;
    let mut out: HashMap<Vec<usize>, BigInt> = HashMap::new();
    let base = lambda.pairing(i);
    for (w, coeff) in &ints {
        let blocks = insertion_blocks(w, i, base, c, b);
        let mut acc = Vec::with_capacity(w.len() + b);
        place_blocks(&blocks, i, 0, b, 0, BigInt::one(), &mut acc, &mut |word, f| {
            *out.entry(word.to_vec()).or_insert_with(BigInt::zero) += coeff * f;
        });
    }
    let out = ShuffleSeries::from_integer_form(out, &den);
    if require_integral && !out.is_integral() {
        return Err(Error::NonIntegral(format!("f_{i}^({b}) leaves fractions")));
    }
    Ok(out)
}

/// A maximal run of insertion gaps separated only by letters `i`.
struct Block {
    /// Letters `i` already present in the run.
    existing: usize,
    /// The letter following the run, if any.
    next: Option<usize>,
    /// `coef[placed][m]`: summed coefficient of putting `m` new letters in
    /// this run after `placed` new letters further left.
    coef: Vec<Vec<BigInt>>,
}

fn insertion_blocks(w: &[usize], i: usize, base: i64, c: &CartanMatrix, b: usize) -> Vec<Block> {
    let mut blocks = Vec::new();
    let mut p = base;
    let mut gaps = vec![p];
    let mut existing = 0;
    for &l in w {
        p -= c.get(l, i);
        if l == i {
            existing += 1;
            gaps.push(p);
        } else {
            blocks.push(block_table(std::mem::take(&mut gaps), existing, Some(l), b));
            existing = 0;
            gaps.push(p);
        }
    }
    blocks.push(block_table(gaps, existing, None, b));
    blocks
}

#[allow(clippy::needless_range_loop)] // `m` indexes two tables of different lengths.
fn block_table(gaps: Vec<i64>, existing: usize, next: Option<usize>, b: usize) -> Block {
    let mut coef = vec![vec![BigInt::zero(); b + 1]; b + 1];
    for (placed, row) in coef.iter_mut().enumerate() {
        // dp[m]: sum over distributions of m letters among the gaps seen so far.
        let mut dp = vec![BigInt::zero(); b + 1 - placed];
        dp[0] = BigInt::one();
        for &g in &gaps {
            let mut next_dp = vec![BigInt::zero(); dp.len()];
            for (m0, v) in dp.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                let mut f = v.clone();
                for m in m0..dp.len() {
                    if m > m0 {
                        f *= g - (placed + m - 1) as i64;
                        if f.is_zero() {
                            break;
                        }
                    }
                    next_dp[m] += &f;
                }
            }
            dp = next_dp;
        }
        for (slot, v) in row.iter_mut().zip(dp) {
            *slot = v;
        }
    }
    Block { existing, next, coef }
}

#[allow(clippy::too_many_arguments)]
fn place_blocks(
    blocks: &[Block],
    i: usize,
    r: usize,
    left: usize,
    placed: usize,
    f: BigInt,
    acc: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize], &BigInt),
) {
    let blk = &blocks[r];
    let len = acc.len();
    let last = r + 1 == blocks.len();
    let range = if last { left..=left } else { 0..=left };
    for m in range {
        let k = &blk.coef[placed][m];
        if k.is_zero() {
            continue;
        }
        acc.extend(std::iter::repeat_n(i, blk.existing + m));
        let f_here = &f * k;
        match blk.next {
            Some(l) => {
                acc.push(l);
                place_blocks(blocks, i, r + 1, left - m, placed + m, f_here, acc, emit);
            }
            None => emit(acc, &f_here),
        }
        acc.truncate(len);
    }
}

/// Exponents `b_1, …, b_k` with `b_k = 1` and
/// `b_j = (s_{i_{j+1}} ⋯ s_{i_k}(ϖ_{i_k}))(α_{i_j}^∨)`.
pub fn b_exponents(word: &ReducedWord, k: usize, c: &CartanMatrix) -> Result<Vec<i64>> {
    if k == 0 || k > word.len() {
        return Err(Error::Index(format!("k = {k} outside 1..={}", word.len())));
    }
    let l = &word.letters;
    let mut b = vec![0i64; k];
    b[k - 1] = 1;
    let mut lambda = Weight::fundamental(c.n(), l[k - 1]);
    for j in (0..k - 1).rev() {
        lambda = s_weight(&lambda, l[j + 1], c);
        b[j] = lambda.pairing(l[j]);
    }
    Ok(b)
}

/// The generating function of the `k`-th summand (1-based, numbered by the
/// adapted ordering) of the dual cluster-tilting module:
/// `ρ_{ϖ_{i_k}}(f_{i_1}^{(b_1)} ⋯ f_{i_k}^{(b_k)})(w[])`, rightmost factor
/// applied first.
pub fn g_module(cat: &CategoryModel, ordering: &AdaptedOrdering, k: usize) -> Result<ShuffleSeries> {
    let word = adapted_word(cat, ordering)?;
    let c = cartan(cat.terminal().quiver());
    let b = b_exponents(&word, k, &c)?;
    let lambda = Weight::fundamental(c.n(), word.letters[k - 1]);
    let mut s = ShuffleSeries::unit();
    for j in (0..k).rev() {
        let bj =
            u32::try_from(b[j]).map_err(|_| Error::NonIntegral(format!("negative exponent b_{} = {}", j + 1, b[j])))?;
        s = divided_f(&s, word.letters[j], bj, &lambda, &c, true)?;
    }
    Ok(s)
}

/// A polynomial with rational coefficients in a fixed number of variables.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RationalPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl RationalPoly {
    /// Number of variables.
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Terms keyed by exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    /// The same polynomial as a [`LaurentPoly`], if all coefficients are
    /// integers.
    pub fn to_integer_poly(&self) -> Option<LaurentPoly> {
        let mut out = LaurentPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if !c.is_integer() {
                return None;
            }
            let exps = e.iter().map(|&x| x as i32).collect();
            out = &out + &LaurentPoly::monomial(c.to_integer(), exps);
        }
        Some(out)
    }
}

/// Evaluates a series along a sequence `(i_1, …, i_m)`:
/// `Σ_a coeff(i_1^{a_1} ⋯ i_m^{a_m}) · ∏ t_l^{a_l} / a_l!`, summed over all
/// exponent tuples `a` and all ways the word splits into such blocks.
pub fn evaluate_phi(s: &ShuffleSeries, seq: &[usize]) -> RationalPoly {
    let m = seq.len();
    let mut out = RationalPoly {
        nvars: m,
        terms: BTreeMap::new(),
    };
    let mut fact = vec![BigInt::one()];
    for (w, c) in &s.terms {
        let mut a = vec![0u32; m];
        parse_blocks(&w.0, seq, 0, &mut a, &mut |a| {
            while fact.len() <= w.len() {
                let k = fact.len();
                let next = &fact[k - 1] * k;
                fact.push(next);
            }
            let den: BigInt = a.iter().map(|&x| fact[x as usize].clone()).product();
            let e = out.terms.entry(a.to_vec()).or_insert_with(BigRational::zero);
            *e += c / BigRational::from_integer(den);
        });
    }
    out.terms.retain(|_, v| !v.is_zero());
    out
}

fn parse_blocks(w: &[usize], seq: &[usize], l: usize, a: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
    if l == seq.len() {
        if w.is_empty() {
            emit(a);
        }
        return;
    }
    let run = w.iter().take_while(|&&x| x == seq[l]).count();
    for len in 0..=run {
        a[l] = len as u32;
        parse_blocks(&w[len..], seq, l + 1, a, emit);
    }
    a[l] = 0;
}

/// A module given by one-dimensional slots labelled by vertices, with
/// arrows `u -> v` meaning that a submodule containing slot `u` contains
/// slot `v`.
///
/// Only the zero/nonzero pattern of the structure maps matters for counting
/// flags; that the pattern comes from an actual module over the
/// preprojective algebra is the caller's responsibility.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ThinModule {
    labels: Vec<usize>,
    arrows: Vec<(usize, usize)>,
}

impl ThinModule {
    /// Slots labelled `labels[s]` and active arrows between slot indices.
    pub fn new(labels: Vec<usize>, arrows: Vec<(usize, usize)>) -> Result<Self> {
        let k = labels.len();
        if labels.contains(&0) {
            return Err(Error::NotThin("vertex labels are 1-based".into()));
        }
        for &(u, v) in &arrows {
            if u >= k || v >= k || u == v {
                return Err(Error::NotThin(format!("bad arrow ({u},{v})")));
            }
        }
        let m = ThinModule { labels, arrows };
        let g = crate::quiver::Multigraph::new(k, m.arrows.clone());
        if g.topological_order().is_err() {
            return Err(Error::NotThin("arrow relation is cyclic".into()));
        }
        Ok(m)
    }

    /// The simple module at vertex `i`.
    pub fn simple(i: usize) -> Self {
        ThinModule {
            labels: vec![i],
            arrows: vec![],
        }
    }

    /// Direct sum: disjoint union of slots.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let off = self.labels.len();
        let mut labels = self.labels.clone();
        labels.extend_from_slice(&other.labels);
        let mut arrows = self.arrows.clone();
        arrows.extend(other.arrows.iter().map(|&(u, v)| (u + off, v + off)));
        ThinModule { labels, arrows }
    }
}

/// Counts flags of a thin module: every way of adding slots one at a time
/// so that each intermediate set is closed under the arrows contributes the
/// word of added labels, bottom first.
pub fn flag_oracle(m: &ThinModule) -> ShuffleSeries {
    let k = m.labels.len();
    let mut need = vec![0u64; k];
    for &(u, v) in &m.arrows {
        need[u] |= 1 << v;
    }
    let mut counts: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    fn go(m: &ThinModule, need: &[u64], have: u64, word: &mut Vec<usize>, counts: &mut BTreeMap<Vec<usize>, i64>) {
        let k = m.labels.len();
        if word.len() == k {
            *counts.entry(word.clone()).or_insert(0) += 1;
            return;
        }
        for s in 0..k {
            if have & (1 << s) == 0 && need[s] & !have == 0 {
                word.push(m.labels[s]);
                go(m, need, have | (1 << s), word, counts);
                word.pop();
            }
        }
    }
    go(m, &need, 0, &mut Vec::new(), &mut counts);
    ShuffleSeries::from_terms(counts)
}

/// Converts an integral coefficient to `i64` for display or testing.
pub fn coefficient_i64(c: &BigRational) -> Option<i64> {
    if c.is_integer() {
        c.to_integer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::{build_category, MeshVertex, TerminalData};
    use crate::quiver::validate_quiver;

    fn kronecker() -> (CategoryModel, AdaptedOrdering, CartanMatrix) {
        let q = validate_quiver(3, &[(1, 2), (1, 2), (2, 3)]).unwrap();
        let c = cartan(&q);
        let cat = build_category(&TerminalData::new(q, vec![2, 1, 1]).unwrap()).unwrap();
        let ord = AdaptedOrdering::new(
            [(1, 0), (2, 0), (1, 1), (3, 0), (2, 1), (1, 2), (3, 1)]
                .iter()
                .map(|&(i, a)| MeshVertex::new(i, a))
                .collect(),
        );
        (cat, ord, c)
    }

    #[test]
    fn shuffles() {
        let (w1, w2) = (ShuffleSeries::word(&[1], 1), ShuffleSeries::word(&[2], 1));
        assert_eq!(
            shuffle(&w1, &w2),
            ShuffleSeries::from_terms([(vec![1, 2], 1), (vec![2, 1], 1)])
        );
        assert_eq!(shuffle(&w1, &w1), ShuffleSeries::word(&[1, 1], 2));
        assert_eq!(shuffle(&w1, &ShuffleSeries::unit()), w1);
    }

    #[test]
    fn insertion_action() {
        let (_, _, c) = kronecker();
        let l2 = Weight::fundamental(3, 2);
        let s = f_action(&ShuffleSeries::unit(), 2, &l2, &c);
        assert_eq!(s, ShuffleSeries::word(&[2], 1));
        assert_eq!(f_action(&s, 1, &l2, &c), ShuffleSeries::word(&[2, 1], 2));
        assert_eq!(
            divided_f(&s, 1, 2, &l2, &c, true).unwrap(),
            ShuffleSeries::word(&[2, 1, 1], 2)
        );
        assert_eq!(divided_f(&s, 1, 0, &l2, &c, true).unwrap(), s);
    }

    #[test]
    fn divided_power_matches_iterated_insertion() {
        let (_, _, c) = kronecker();
        let start = ShuffleSeries::from_terms([(vec![2, 1, 3], 1), (vec![1, 2], 3), (vec![], 1)]);
        for i in 1..=3 {
            let lam = Weight(vec![3, 1, 2]);
            let mut iter = start.clone();
            let mut fact = BigInt::one();
            for b in 0..=4u32 {
                if b > 0 {
                    iter = f_action(&iter, i, &lam, &c);
                    fact *= b;
                }
                let expect = iter.scale(&BigRational::new(BigInt::one(), fact.clone()));
                assert_eq!(divided_f(&start, i, b, &lam, &c, false).unwrap(), expect, "i={i} b={b}");
            }
        }
    }

    #[test]
    fn removal_action() {
        let s = ShuffleSeries::word(&[2, 1], 1);
        assert_eq!(e_action(&s, 1), ShuffleSeries::word(&[2], 1));
        assert!(e_action(&s, 2).is_empty());
    }

    #[test]
    fn exponents() {
        let (cat, ord, c) = kronecker();
        let w = adapted_word(&cat, &ord).unwrap();
        assert_eq!(b_exponents(&w, 1, &c).unwrap(), vec![1]);
        assert_eq!(b_exponents(&w, 2, &c).unwrap(), vec![2, 1]);
        assert_eq!(b_exponents(&w, 7, &c).unwrap(), vec![4, 3, 2, 0, 1, 0, 1]);
    }

    #[test]
    fn small_generating_functions() {
        let (cat, ord, _) = kronecker();
        assert_eq!(g_module(&cat, &ord, 1).unwrap().to_text(), "w[1]");
        assert_eq!(g_module(&cat, &ord, 2).unwrap().to_text(), "2·w[2,1,1]");
        assert_eq!(g_module(&cat, &ord, 4).unwrap().to_text(), "2·w[3,2,1,1]");
    }

    #[test]
    fn phi_evaluation() {
        let s = ShuffleSeries::word(&[2, 1, 1], 2);
        let p = evaluate_phi(&s, &[2, 1]).to_integer_poly().unwrap();
        assert_eq!(p, LaurentPoly::monomial(1, vec![1, 2]));
        let p1 = evaluate_phi(&ShuffleSeries::word(&[1], 1), &[1])
            .to_integer_poly()
            .unwrap();
        assert_eq!(p1, LaurentPoly::var(1, 0));
    }

    #[test]
    fn flags_of_small_modules() {
        assert_eq!(flag_oracle(&ThinModule::simple(1)), ShuffleSeries::word(&[1], 1));
        let one_over_two = ThinModule::new(vec![1, 2], vec![(0, 1)]).unwrap();
        assert_eq!(flag_oracle(&one_over_two), ShuffleSeries::word(&[2, 1], 1));
        assert!(ThinModule::new(vec![1, 2], vec![(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let s = ShuffleSeries::from_terms([(vec![1, 2], 3), (vec![], -1)]);
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(serde_json::from_str::<ShuffleSeries>(&j).unwrap(), s);
    }
}
