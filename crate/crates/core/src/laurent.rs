//! Exact multivariate Laurent polynomials with arbitrary-precision integer
//! coefficients.
//!
//! A [`LaurentPoly`] lives in a ring with a fixed number of variables. Terms
//! are kept in a sparse map keyed by dense exponent vectors, ordered by the
//! graded-lexicographic order, with zero coefficients never stored. The
//! representation is therefore canonical: structural equality is
//! mathematical equality.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BinaryHeap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An exponent vector, ordered graded-lexicographically.
///
/// Total degree is compared first; ties are broken lexicographically on the
/// exponents, so `y1` is larger than `y2`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<i32>);

impl Monomial {
    /// Wraps an exponent vector.
    pub fn new(exps: Vec<i32>) -> Self {
        Monomial(exps)
    }

    /// The all-zero exponent vector.
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// Exponents, one per variable.
    pub fn exponents(&self) -> &[i32] {
        &self.0
    }

    /// Sum of the exponents.
    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    fn inverse(&self) -> Monomial {
        Monomial(self.0.iter().map(|e| -e).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A Laurent polynomial in a fixed number of variables.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial `1`.
    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    /// A constant polynomial.
    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(c, vec![0; nvars])
    }

    /// The variable with 0-based index `i`.
    ///
    /// # Panics
    /// Panics when `i >= nvars`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(1, e)
    }

    /// A single term `c * y^exps`.
    pub fn monomial(c: impl Into<BigInt>, exps: Vec<i32>) -> Self {
        let nvars = exps.len();
        let mut p = Self::zero(nvars);
        p.add_term(Monomial(exps), c.into());
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, combining
    /// repeated monomials.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i32>, BigInt)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::ArityMismatch(nvars, e.len()));
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    /// Number of variables of the ambient ring.
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Coefficient of the given monomial (zero when absent).
    pub fn coefficient(&self, exps: &[i32]) -> BigInt {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Returns the single term when the polynomial is a monomial.
    pub fn as_monomial(&self) -> Option<(&Monomial, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Whether the polynomial is `±y^e`, i.e. a unit of the Laurent ring.
    pub fn is_unit(&self) -> bool {
        self.as_monomial().map(|(_, c)| c.abs().is_one()).unwrap_or(false)
    }

    /// Whether no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|m| m.0.iter().all(|&e| e >= 0))
    }

    /// Componentwise minimum of exponents over all terms (zeros for the zero
    /// polynomial).
    pub fn min_exponents(&self) -> Vec<i32> {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return vec![0; self.nvars];
        };
        let mut m = first.0.clone();
        for k in it {
            for (a, b) in m.iter_mut().zip(&k.0) {
                *a = (*a).min(*b);
            }
        }
        m
    }

    /// Largest exponent of variable `i` over all terms, if any term exists.
    pub fn degree_in(&self, i: usize) -> Option<i32> {
        self.terms.keys().map(|m| m.0[i]).max()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::ArityMismatch(self.nvars, other.nvars))
        }
    }

    /// Sum, failing on an arity mismatch.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    /// Difference, failing on an arity mismatch.
    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    /// Product, failing on an arity mismatch.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                *acc.entry(m1.mul(m2)).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(LaurentPoly {
            nvars: self.nvars,
            terms,
        })
    }

    /// `self * c * y^m` for a single term.
    fn mul_term(&self, m: &Monomial, c: &BigInt) -> Self {
        let terms = self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect();
        LaurentPoly {
            nvars: self.nvars,
            terms,
        }
    }

    /// Non-negative integer power by repeated squaring.
    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / den` in the Laurent ring.
    ///
    /// Both operands are first shifted by monomials into honest polynomials
    /// with the divisor coprime to every variable; a quotient in the Laurent
    /// ring then exists exactly when ordinary long division leaves no
    /// remainder. Any remainder is reported as [`Error::NotDivisible`].
    pub fn exact_div(&self, den: &Self) -> Result<Self> {
        self.check_arity(den)?;
        if den.is_zero() {
            return Err(Error::NotDivisible("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        if let Some((dm, dc)) = den.as_monomial() {
            let inv = dm.inverse();
            let mut out = Self::zero(self.nvars);
            for (m, c) in &self.terms {
                let (q, r) = c.div_rem(dc);
                if !r.is_zero() {
                    return Err(Error::NotDivisible(format!("coefficient {c} by {dc}")));
                }
                out.terms.insert(m.mul(&inv), q);
            }
            return Ok(out);
        }
        let dshift = Monomial(den.min_exponents());
        let nshift = Monomial(self.min_exponents());
        let d = den.mul_term(&dshift.inverse(), &BigInt::one());
        let f = self.mul_term(&nshift.inverse(), &BigInt::one());
        let quot = heap_divide(&f, &d)?;
        Ok(quot.mul_term(&nshift.div(&dshift), &BigInt::one()))
    }

    /// Substitutes `images[i]` for variable `i`.
    ///
    /// All images must share one arity, which becomes the arity of the
    /// result. A variable occurring with a negative exponent may only be
    /// replaced by a unit `±y^e`.
    pub fn substitute(&self, images: &[LaurentPoly]) -> Result<Self> {
        if images.len() != self.nvars {
            return Err(Error::ArityMismatch(self.nvars, images.len()));
        }
        let target = images.first().map(|p| p.nvars).unwrap_or(0);
        if let Some(p) = images.iter().find(|p| p.nvars != target) {
            return Err(Error::ArityMismatch(target, p.nvars));
        }
        let mut inverses: Vec<Option<LaurentPoly>> = vec![None; self.nvars];
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut term = Self::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term = &term * &images[i].pow(e as u32);
                } else if e < 0 {
                    if inverses[i].is_none() {
                        if !images[i].is_unit() {
                            return Err(Error::NegativeExponentSubstitution(i));
                        }
                        inverses[i] = Some(Self::one(target).exact_div(&images[i])?);
                    }
                    term = &term * &inverses[i].as_ref().expect("cached").pow((-e) as u32);
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Renders the polynomial with the given variable names, leading term
    /// first, e.g. `y1^2*y2^-1 - 3*y3 + 1`.
    pub fn to_text(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let factors: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e != 0)
                    .map(|(i, &e)| {
                        let name = names.get(i).cloned().unwrap_or_else(|| format!("y{}", i + 1));
                        if e == 1 {
                            name
                        } else {
                            format!("{name}^{e}")
                        }
                    })
                    .collect();
            if factors.is_empty() {
                s.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    s.push_str(&abs.to_string());
                    s.push('*');
                }
                s.push_str(&factors.join("*"));
            }
        }
        s
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(&[]))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            /// # Panics
            /// Panics on an arity mismatch; use the `checked_*` form to recover.
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$checked(rhs).expect("Laurent polynomial arity mismatch")
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Serialized form: the arity plus a list of `(exponents, coefficient)`
/// pairs, coefficients as decimal strings so that no precision is lost.
#[derive(Serialize, Deserialize)]
struct PolyRepr {
    nvars: usize,
    terms: Vec<(Vec<i32>, String)>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.0.clone(), c.to_string())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = PolyRepr::deserialize(d)?;
        let terms = r
            .terms
            .into_iter()
            .map(|(e, c)| {
                c.parse::<BigInt>()
                    .map(|c| (e, c))
                    .map_err(|e| D::Error::custom(format!("bad coefficient: {e}")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        LaurentPoly::from_terms(r.nvars, terms).map_err(D::Error::custom)
    }
}

/// A product `q_i · d_j` waiting in the division heap, ordered by monomial.
struct Pending {
    degree: i64,
    mono: Monomial,
    i: usize,
    j: usize,
}

impl PartialEq for Pending {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Pending {}

impl PartialOrd for Pending {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Pending {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.mono.0.cmp(&other.mono.0))
    }
}

/// Sparse polynomial division of `f` by `d` (both with nonnegative
/// exponents), failing on any remainder.
///
/// Terms of `f − q·d` are generated in decreasing order by merging `f` with
/// a heap of the pending products `q_i · d_j`, so no remainder polynomial
/// is ever materialized.
fn heap_divide(f: &LaurentPoly, d: &LaurentPoly) -> Result<LaurentPoly> {
    let fs: Vec<(&Monomial, &BigInt)> = f.terms.iter().rev().collect();
    let ds: Vec<(&Monomial, &BigInt)> = d.terms.iter().rev().collect();
    let (lead_m, lead_c) = ds[0];
    let mut q: Vec<(Monomial, BigInt)> = Vec::new();
    let mut heap: BinaryHeap<Pending> = BinaryHeap::new();
    let push = |heap: &mut BinaryHeap<Pending>, q: &[(Monomial, BigInt)], i: usize, j: usize| {
        let mono = q[i].0.mul(ds[j].0);
        heap.push(Pending {
            degree: mono.degree(),
            mono,
            i,
            j,
        });
    };
    let mut fi = 0;
    loop {
        let from_f = fs.get(fi).map(|(m, _)| *m);
        let m = match (from_f, heap.peek()) {
            (None, None) => break,
            (Some(a), None) => a.clone(),
            (None, Some(p)) => p.mono.clone(),
            (Some(a), Some(p)) => {
                if *a >= p.mono {
                    a.clone()
                } else {
                    p.mono.clone()
                }
            }
        };
        let mut c = BigInt::zero();
        if from_f == Some(&m) {
            c += fs[fi].1;
            fi += 1;
        }
        while heap.peek().is_some_and(|p| p.mono == m) {
            let p = heap.pop().expect("peeked");
            c -= &q[p.i].1 * ds[p.j].1;
            if p.j + 1 < ds.len() {
                push(&mut heap, &q, p.i, p.j + 1);
            }
        }
        if c.is_zero() {
            continue;
        }
        let qm = m.div(lead_m);
        if qm.0.iter().any(|&e| e < 0) {
            return Err(Error::NotDivisible(format!(
                "leading monomial {:?} not divisible by {:?}",
                m.0, lead_m.0
            )));
        }
        let (qc, r) = c.div_rem(lead_c);
        if !r.is_zero() {
            return Err(Error::NotDivisible(format!("coefficient {c} by {lead_c}")));
        }
        q.push((qm, qc));
        if ds.len() > 1 {
            push(&mut heap, &q, q.len() - 1, 1);
        }
    }
    Ok(LaurentPoly {
        nvars: f.nvars,
        terms: q.into_iter().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(n: usize, i: usize) -> LaurentPoly {
        LaurentPoly::var(n, i)
    }

    #[test]
    fn difference_of_squares() {
        let (a, b) = (y(2, 0), y(2, 1));
        let lhs = &(&a + &b) * &(&a - &b);
        assert_eq!(lhs, &a.pow(2) - &b.pow(2));
    }

    #[test]
    fn unit_laws() {
        let p = &y(3, 0) + &LaurentPoly::constant(3, 7);
        assert_eq!(&p * &LaurentPoly::one(3), p);
        let inv = LaurentPoly::monomial(1, vec![-1, 0, 0]);
        assert_eq!(&inv * &y(3, 0), LaurentPoly::one(3));
    }

    #[test]
    fn monomial_denominator() {
        let num = &y(2, 1) + &LaurentPoly::one(2);
        let q = num.exact_div(&y(2, 0)).unwrap();
        let expected = &LaurentPoly::monomial(1, vec![-1, 1]) + &LaurentPoly::monomial(1, vec![-1, 0]);
        assert_eq!(q, expected);
    }

    #[test]
    fn polynomial_denominator() {
        let (a, b) = (y(2, 0), y(2, 1));
        let num = &a.pow(2) - &b.pow(2);
        assert_eq!(num.exact_div(&(&a - &b)).unwrap(), &a + &b);
    }

    #[test]
    fn non_divisible() {
        let one = LaurentPoly::one(2);
        let num = &y(2, 0) + &one;
        let den = &y(2, 1) + &one;
        assert!(matches!(num.exact_div(&den), Err(Error::NotDivisible(_))));
    }

    #[test]
    fn laurent_quotient_with_shifts() {
        let one = LaurentPoly::one(2);
        let d = &LaurentPoly::monomial(1, vec![-2, 1]) + &one;
        let q = &LaurentPoly::monomial(3, vec![1, -1]) - &y(2, 1);
        let p = &d * &q;
        assert_eq!(p.exact_div(&d).unwrap(), q);
    }

    #[test]
    fn substitution() {
        // y1 -> x1*x2 - x3 inside y1^2 - y2
        let x = |i| LaurentPoly::var(3, i);
        let p = &y(2, 0).pow(2) - &y(2, 1);
        let img0 = &(&x(0) * &x(1)) - &x(2);
        let out = p.substitute(&[img0.clone(), x(2)]).unwrap();
        assert_eq!(out, &img0.pow(2) - &x(2));
        let id = p.substitute(&[y(2, 0), y(2, 1)]).unwrap();
        assert_eq!(id, p);
    }

    #[test]
    fn negative_exponent_substitution() {
        let p = LaurentPoly::monomial(1, vec![-1]);
        let bad = &LaurentPoly::var(1, 0) + &LaurentPoly::one(1);
        assert!(matches!(
            p.substitute(&[bad]),
            Err(Error::NegativeExponentSubstitution(0))
        ));
        let ok = p.substitute(&[LaurentPoly::monomial(-1, vec![2])]).unwrap();
        assert_eq!(ok, LaurentPoly::monomial(-1, vec![-2]));
    }

    #[test]
    fn arity_mismatch() {
        assert!(matches!(y(2, 0).checked_add(&y(3, 0)), Err(Error::ArityMismatch(2, 3))));
    }

    #[test]
    fn text_form() {
        let p = &(&y(2, 0).pow(2) - &LaurentPoly::monomial(3, vec![0, -1])) + &LaurentPoly::one(2);
        assert_eq!(p.to_string(), "y1^2 + 1 - 3*y2^-1");
        assert_eq!(LaurentPoly::zero(1).to_string(), "0");
    }

    #[test]
    fn json_round_trip() {
        let p = &LaurentPoly::monomial(BigInt::from(10).pow(30), vec![1, -2]) - &y(2, 1);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<LaurentPoly>(&s).unwrap(), p);
    }
}
