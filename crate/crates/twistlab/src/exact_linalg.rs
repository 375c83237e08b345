//! Exact scalars (rationals and Gaussian rationals), sparse vectors keyed by
//! ordered basis labels, fraction-free rank, span solving and Smith normal form.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Rational {
        let d: BigInt = denom.into();
        assert!(!d.is_zero(), "zero denominator");
        Rational(BigRational::new(numer.into(), d))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Rational {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Rational {
        Rational(BigRational::zero())
    }

    pub fn one() -> Rational {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Rational {
        Rational(self.0.recip())
    }

    /// The value as an `i64` when it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        if self.0.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Rational {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Rational {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl core::str::FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Rational, ParseRationalError> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| ParseRationalError)?;
        let d: BigInt = d.parse().map_err(|_| ParseRationalError)?;
        if d.is_zero() {
            return Err(ParseRationalError);
        }
        Ok(Rational::new(n, d))
    }
}

/// Error returned when a string is not of the form `p` or `p/q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError;

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("expected an integer or a fraction p/q")
    }
}

macro_rules! forward_binop {
    ($ty:ident, $trait:ident, $method:ident) => {
        impl $trait for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                $trait::$method(&self, &rhs)
            }
        }
        impl<'a> $trait<&'a $ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &'a $ty) -> $ty {
                $trait::$method(&self, rhs)
            }
        }
    };
}

impl<'b> Add<&'b Rational> for &Rational {
    type Output = Rational;
    fn add(self, rhs: &'b Rational) -> Rational {
        Rational(&self.0 + &rhs.0)
    }
}
impl<'b> Sub<&'b Rational> for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &'b Rational) -> Rational {
        Rational(&self.0 - &rhs.0)
    }
}
impl<'b> Mul<&'b Rational> for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &'b Rational) -> Rational {
        Rational(&self.0 * &rhs.0)
    }
}
impl<'b> Div<&'b Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &'b Rational) -> Rational {
        Rational(&self.0 / &rhs.0)
    }
}
forward_binop!(Rational, Add, add);
forward_binop!(Rational, Sub, sub);
forward_binop!(Rational, Mul, mul);
forward_binop!(Rational, Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}
impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}
impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}
impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

/// A Gaussian rational `re + im·i` with `i² = −1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> GaussianRational {
        GaussianRational { re, im }
    }

    pub fn from_integer(n: i64) -> GaussianRational {
        GaussianRational::new(Rational::from(n), Rational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> GaussianRational {
        GaussianRational::new(Rational::zero(), Rational::one())
    }

    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> GaussianRational {
        match k.rem_euclid(4) {
            0 => GaussianRational::from_integer(1),
            1 => GaussianRational::i(),
            2 => GaussianRational::from_integer(-1),
            _ => -GaussianRational::i(),
        }
    }

    pub fn conj(&self) -> GaussianRational {
        GaussianRational::new(self.re.clone(), -&self.im)
    }

    pub fn norm(&self) -> Rational {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn pow(&self, k: i64) -> GaussianRational {
        let mut base = if k < 0 { Scalar::inv(self) } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = GaussianRational::from_integer(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> GaussianRational {
        GaussianRational::new(r, Rational::zero())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => {
                if self.im.is_negative() {
                    write!(f, "{}-{}i", self.re, self.im.abs())
                } else {
                    write!(f, "{}+{}i", self.re, self.im)
                }
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'b> Add<&'b GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &'b GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}
impl<'b> Sub<&'b GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &'b GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}
impl<'b> Mul<&'b GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &'b GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        )
    }
}
impl<'b> Div<&'b GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &'b GaussianRational) -> GaussianRational {
        self * &Scalar::inv(rhs)
    }
}
forward_binop!(GaussianRational, Add, add);
forward_binop!(GaussianRational, Sub, sub);
forward_binop!(GaussianRational, Mul, mul);
forward_binop!(GaussianRational, Div, div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}
impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}
impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}
impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

/// An integral domain with exact division, used by fraction-free elimination.
pub trait IntegralDomain: Clone + PartialEq + fmt::Debug {
    fn dzero() -> Self;
    fn done() -> Self;
    fn dis_zero(&self) -> bool;
    fn dmul(&self, other: &Self) -> Self;
    fn dsub(&self, other: &Self) -> Self;
    /// `self / other`, which the caller guarantees is exact.
    fn exact_div(&self, other: &Self) -> Self;
}

impl IntegralDomain for BigInt {
    fn dzero() -> Self {
        Zero::zero()
    }
    fn done() -> Self {
        One::one()
    }
    fn dis_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn dmul(&self, other: &Self) -> Self {
        self * other
    }
    fn dsub(&self, other: &Self) -> Self {
        self - other
    }
    fn exact_div(&self, other: &Self) -> Self {
        let (q, r) = self.div_rem(other);
        debug_assert!(Zero::is_zero(&r), "inexact division");
        q
    }
}

/// A Gaussian integer `re + im·i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl IntegralDomain for GaussianInt {
    fn dzero() -> Self {
        GaussianInt { re: Zero::zero(), im: Zero::zero() }
    }
    fn done() -> Self {
        GaussianInt { re: One::one(), im: Zero::zero() }
    }
    fn dis_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn dmul(&self, o: &Self) -> Self {
        GaussianInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
    fn dsub(&self, o: &Self) -> Self {
        GaussianInt { re: &self.re - &o.re, im: &self.im - &o.im }
    }
    fn exact_div(&self, o: &Self) -> Self {
        let n = &o.re * &o.re + &o.im * &o.im;
        let c = GaussianInt { re: o.re.clone(), im: -&o.im };
        let p = self.dmul(&c);
        GaussianInt { re: IntegralDomain::exact_div(&p.re, &n), im: IntegralDomain::exact_div(&p.im, &n) }
    }
}

/// An exact field usable as the coefficient type of a [`SparseVector`].
pub trait Scalar: Clone + PartialEq + Eq + fmt::Debug + fmt::Display {
    /// Fraction-free elimination ring obtained by clearing denominators.
    type Integral: IntegralDomain;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self) -> Self;
    fn from_i64(n: i64) -> Self;
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Multiply the row by a common nonzero integer so that all entries become
    /// integral, and return the integral entries.
    fn clear_denominators(row: &[Self]) -> Vec<Self::Integral>;
}

impl Scalar for Rational {
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }

    type Integral = BigInt;

    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        self.recip()
    }
    fn from_i64(n: i64) -> Self {
        Rational::from(n)
    }
    fn clear_denominators(row: &[Self]) -> Vec<BigInt> {
        let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
    }
}

impl Scalar for GaussianRational {
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }

    type Integral = GaussianInt;

    fn zero() -> Self {
        GaussianRational::default()
    }
    fn one() -> Self {
        GaussianRational::from_integer(1)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn inv(&self) -> Self {
        let n = self.norm();
        assert!(!n.is_zero(), "inverse of zero");
        GaussianRational::new(&self.re / &n, -&(&self.im / &n))
    }
    fn from_i64(n: i64) -> Self {
        GaussianRational::from_integer(n)
    }
    fn clear_denominators(row: &[Self]) -> Vec<GaussianInt> {
        let l = row
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.re.denom()).lcm(x.im.denom()));
        row.iter()
            .map(|x| GaussianInt {
                re: x.re.numer() * (&l / x.re.denom()),
                im: x.im.numer() * (&l / x.im.denom()),
            })
            .collect()
    }
}

/// A finite linear combination of basis keys. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SparseVector<K: Ord, S> {
    entries: BTreeMap<K, S>,
}

impl<K: Ord + fmt::Debug, S: fmt::Debug> fmt::Debug for SparseVector<K, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries.iter()).finish()
    }
}

impl<K: Ord, S> Default for SparseVector<K, S> {
    fn default() -> Self {
        SparseVector { entries: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, S: Scalar> SparseVector<K, S> {
    pub fn new() -> Self {
        Self::default()
    }

    /// The basis vector `1·key`.
    pub fn basis(key: K) -> Self {
        let mut v = Self::new();
        v.entries.insert(key, S::one());
        v
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (K, S)>) -> Self {
        let mut v = Self::new();
        for (k, s) in entries {
            v.add_term(k, &s);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Coefficient of `key` (zero when absent).
    pub fn get(&self, key: &K) -> S {
        self.entries.get(key).cloned().unwrap_or_else(S::zero)
    }

    pub fn coefficient(&self, key: &K) -> Option<&S> {
        self.entries.get(key)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &S)> {
        self.entries.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.entries.keys()
    }

    pub fn into_entries(self) -> BTreeMap<K, S> {
        self.entries
    }

    /// Add `c·key` in place.
    pub fn add_term(&mut self, key: K, c: &S) {
        if c.is_zero() {
            return;
        }
        match self.entries.entry(key) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() = e.get().add_ref(c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c·other`.
    pub fn axpy(&mut self, c: &S, other: &Self) {
        if c.is_zero() {
            return;
        }
        let one = c == &S::one();
        for (k, v) in other.entries.iter() {
            if one {
                self.add_term(k.clone(), v);
            } else {
                self.add_term(k.clone(), &c.mul_ref(v));
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.axpy(&S::one(), other);
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.axpy(&S::one().neg_ref(), other);
        r
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        SparseVector { entries: self.entries.iter().map(|(k, v)| (k.clone(), c.mul_ref(v))).collect() }
    }

    pub fn neg(&self) -> Self {
        SparseVector { entries: self.entries.iter().map(|(k, v)| (k.clone(), v.neg_ref())).collect() }
    }

    /// Relabel keys; coefficients of colliding keys are summed.
    pub fn map_keys<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> K2) -> SparseVector<K2, S> {
        let mut r = SparseVector::new();
        for (k, v) in self.entries.iter() {
            r.add_term(f(k), v);
        }
        r
    }

    /// Restrict to the keys accepted by `keep`.
    pub fn filter_keys(&self, mut keep: impl FnMut(&K) -> bool) -> Self {
        SparseVector {
            entries: self.entries.iter().filter(|(k, _)| keep(k)).map(|(k, v)| (k.clone(), v.clone())).collect(),
        }
    }

    /// Leading (smallest-key) entry.
    pub fn first(&self) -> Option<(&K, &S)> {
        self.entries.iter().next()
    }

    /// If `other = c·self` for some scalar `c`, return `c`.
    pub fn ratio_to(&self, other: &Self) -> Option<S> {
        if self.is_zero() {
            return if other.is_zero() { Some(S::one()) } else { None };
        }
        if self.len() != other.len() {
            return None;
        }
        let (k0, v0) = self.first()?;
        let c = other.get(k0).mul_ref(&v0.inv());
        if self.scale(&c) == *other {
            Some(c)
        } else {
            None
        }
    }
}

/// Rank of the span of `vectors`, computed by fraction-free (Bareiss) elimination
/// after clearing denominators row by row. Columns are taken in key order, so the
/// elimination sequence is deterministic.
pub fn rank<K: Ord + Clone, S: Scalar>(vectors: &[SparseVector<K, S>]) -> usize {
    let keys: BTreeSet<&K> = vectors.iter().flat_map(|v| v.keys()).collect();
    if keys.is_empty() {
        return 0;
    }
    let index: BTreeMap<&K, usize> = keys.iter().enumerate().map(|(i, k)| (*k, i)).collect();
    let ncols = keys.len();
    let mut rows: Vec<Vec<S::Integral>> = vectors
        .iter()
        .filter(|v| !v.is_zero())
        .map(|v| {
            let mut dense = vec![S::zero(); ncols];
            for (k, c) in v.iter() {
                dense[index[k]] = c.clone();
            }
            S::clear_denominators(&dense)
        })
        .collect();
    bareiss_rank(&mut rows, ncols)
}

/// Fraction-free row reduction; returns the rank. `rows` is destroyed.
pub fn bareiss_rank<D: IntegralDomain>(rows: &mut [Vec<D>], ncols: usize) -> usize {
    let m = rows.len();
    let mut prev = D::done();
    let mut r = 0;
    for col in 0..ncols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !rows[i][col].dis_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let (top, rest) = rows.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[col];
        for row in rest.iter_mut() {
            let factor = row[col].clone();
            for c in col + 1..ncols {
                let v = pivot.dmul(&row[c]).dsub(&factor.dmul(&pivot_row[c]));
                row[c] = v.exact_div(&prev);
            }
            row[col] = D::dzero();
        }
        prev = rows[r][col].clone();
        r += 1;
    }
    r
}

/// Solves for coordinates with respect to a fixed list of linearly independent
/// vectors. The reduced rows are kept in reduced echelon form over the field,
/// together with the change of basis back to the input vectors.
#[derive(Clone, Debug)]
pub struct SpanSolver<K: Ord, S> {
    /// `(pivot key, reduced row, coefficients of that row in the input basis)`.
    rows: Vec<(K, SparseVector<K, S>, Vec<S>)>,
    n: usize,
}

/// Returned when the vectors handed to [`SpanSolver::new`] are dependent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DependentVectors {
    /// Position of the first input vector lying in the span of its predecessors.
    pub index: usize,
}

impl<K: Ord + Clone, S: Scalar> SpanSolver<K, S> {
    pub fn new(vectors: &[SparseVector<K, S>]) -> Result<Self, DependentVectors> {
        let n = vectors.len();
        let mut rows: Vec<(K, SparseVector<K, S>, Vec<S>)> = Vec::with_capacity(n);
        for (idx, v) in vectors.iter().enumerate() {
            let mut r = v.clone();
            let mut t = vec![S::zero(); n];
            t[idx] = S::one();
            for (p, row, tr) in rows.iter() {
                let c = r.get(p);
                if !c.is_zero() {
                    let nc = c.neg_ref();
                    r.axpy(&nc, row);
                    for (a, b) in t.iter_mut().zip(tr) {
                        *a = a.add_ref(&nc.mul_ref(b));
                    }
                }
            }
            let Some((p, c)) = r.first().map(|(k, c)| (k.clone(), c.clone())) else {
                return Err(DependentVectors { index: idx });
            };
            let ci = c.inv();
            let r = r.scale(&ci);
            let t: Vec<S> = t.iter().map(|x| x.mul_ref(&ci)).collect();
            for (_, row, tr) in rows.iter_mut() {
                let c = row.get(&p);
                if !c.is_zero() {
                    let nc = c.neg_ref();
                    row.axpy(&nc, &r);
                    for (a, b) in tr.iter_mut().zip(&t) {
                        *a = a.add_ref(&nc.mul_ref(b));
                    }
                }
            }
            rows.push((p, r, t));
        }
        Ok(SpanSolver { rows, n })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Coordinates of `x` in the input basis, or `None` if `x` is not in the span.
    pub fn coordinates(&self, x: &SparseVector<K, S>) -> Option<Vec<S>> {
        let mut residual = x.clone();
        let mut coords = vec![S::zero(); self.n];
        for (p, row, t) in self.rows.iter() {
            let c = x.get(p);
            if c.is_zero() {
                continue;
            }
            residual.axpy(&c.neg_ref(), row);
            for (a, b) in coords.iter_mut().zip(t) {
                *a = a.add_ref(&c.mul_ref(b));
            }
        }
        if residual.is_zero() {
            Some(coords)
        } else {
            None
        }
    }
}

/// Smith normal form `D = U·M·V` of an integer matrix, with `U`, `V` unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: Vec<Vec<BigInt>>,
    pub d: Vec<Vec<BigInt>>,
    pub v: Vec<Vec<BigInt>>,
}

impl SmithForm {
    /// Diagonal entries `d_0 | d_1 | …` (length `min(rows, cols)`).
    pub fn diagonal(&self) -> Vec<BigInt> {
        let k = self.d.len().min(self.d.first().map_or(0, |r| r.len()));
        (0..k).map(|i| self.d[i][i].clone()).collect()
    }
}

fn identity_big(n: usize) -> Vec<Vec<BigInt>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

/// Compute the Smith normal form of `m` (rows × cols).
pub fn smith_normal_form(m: &[Vec<i64>]) -> SmithForm {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut d: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut u = identity_big(rows);
    let mut v = identity_big(cols);
    let row_op = |a: &mut Vec<Vec<BigInt>>, i: usize, j: usize, q: &BigInt| {
        // row_i -= q * row_j
        let rj = a[j].clone();
        for (x, y) in a[i].iter_mut().zip(rj.iter()) {
            *x -= q * y;
        }
    };
    let col_op = |a: &mut Vec<Vec<BigInt>>, i: usize, j: usize, q: &BigInt| {
        // col_i -= q * col_j
        for r in a.iter_mut() {
            let y = r[j].clone();
            r[i] -= q * y;
        }
    };
    let swap_cols = |a: &mut Vec<Vec<BigInt>>, i: usize, j: usize| {
        for r in a.iter_mut() {
            r.swap(i, j);
        }
    };
    let mut t = 0;
    while t < rows.min(cols) {
        // choose the smallest nonzero entry in the remaining block as pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !d[i][j].is_zero() && best.is_none_or(|(bi, bj)| d[i][j].abs() < d[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        d.swap(t, pi);
        u.swap(t, pi);
        swap_cols(&mut d, t, pj);
        swap_cols(&mut v, t, pj);
        loop {
            let mut changed = false;
            for i in t + 1..rows {
                if !d[i][t].is_zero() {
                    let q = d[i][t].div_floor(&d[t][t]);
                    row_op(&mut d, i, t, &q);
                    row_op(&mut u, i, t, &q);
                    if !d[i][t].is_zero() {
                        d.swap(t, i);
                        u.swap(t, i);
                        changed = true;
                    }
                }
            }
            for j in t + 1..cols {
                if !d[t][j].is_zero() {
                    let q = d[t][j].div_floor(&d[t][t]);
                    col_op(&mut d, j, t, &q);
                    col_op(&mut v, j, t, &q);
                    if !d[t][j].is_zero() {
                        swap_cols(&mut d, t, j);
                        swap_cols(&mut v, t, j);
                        changed = true;
                    }
                }
            }
            if changed {
                continue;
            }
            // enforce divisibility of the rest of the block by the pivot
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(&d[i][j] % &d[t][t]).is_zero());
            match bad {
                Some((i, _)) => {
                    let q = -BigInt::one();
                    row_op(&mut d, t, i, &q);
                    row_op(&mut u, t, i, &q);
                }
                None => break,
            }
        }
        if d[t][t].is_negative() {
            for x in d[t].iter_mut() {
                *x = -&*x;
            }
            for x in u[t].iter_mut() {
                *x = -&*x;
            }
        }
        t += 1;
    }
    SmithForm { u, d, v }
}

/// Inverse of a square rational matrix, or `None` if singular.
pub fn invert(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&i| !a[i][col].is_zero())?;
        a.swap(col, p);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..n {
            if i != col && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                let pr = a[col].clone();
                for (x, y) in a[i].iter_mut().zip(pr.iter()) {
                    *x -= &(&f * y);
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// `m · x` for a rational matrix and vector.
pub fn mat_vec(m: &[Vec<Rational>], x: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| row.iter().zip(x).fold(Rational::zero(), |acc, (a, b)| &acc + &(a * b)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn rational_basics() {
        assert_eq!(q(1, 2) + q(1, 3), q(5, 6));
        assert_eq!(q(2, -4), q(-1, 2));
        assert!(q(-1, 2).denom() > &BigInt::zero());
        assert_eq!("3/6".parse::<Rational>().unwrap(), q(1, 2));
        assert_eq!(alloc::format!("{}", q(-3, 6)), "-1/2");
    }

    #[test]
    fn gaussian_basics() {
        let i = GaussianRational::i();
        assert_eq!(&i * &i, GaussianRational::from_integer(-1));
        assert_eq!(GaussianRational::i_pow(7), -i.clone());
        let z = GaussianRational::new(q(1, 2), q(-3, 4));
        assert_eq!(z.conj().conj(), z);
        assert_eq!(&z * &Scalar::inv(&z), GaussianRational::from_integer(1));
        assert_eq!(z.pow(-2), Scalar::inv(&(&z * &z)));
    }

    #[test]
    fn sparse_vector_arithmetic() {
        let v: SparseVector<u32, Rational> = SparseVector::from_entries([(1, q(1, 2)), (2, q(3, 1))]);
        assert!(v.add(&v.scale(&q(-1, 1))).is_zero());
        assert!(v.scale(&Rational::zero()).is_zero());
        let a = SparseVector::from_entries([(7u32, q(1, 2))]);
        let b = SparseVector::from_entries([(7u32, q(1, 3))]);
        assert_eq!(a.add(&b), SparseVector::from_entries([(7u32, q(5, 6))]));
        assert_eq!(v.ratio_to(&v.scale(&q(-2, 3))), Some(q(-2, 3)));
    }

    #[test]
    fn rank_examples() {
        let empty: Vec<SparseVector<u8, Rational>> = Vec::new();
        assert_eq!(rank(&empty), 0);
        let k1 = SparseVector::<u8, Rational>::basis(1);
        let k2 = SparseVector::<u8, Rational>::basis(2);
        let k12 = k1.add(&k2);
        assert_eq!(rank(&[k1, k2, k12]), 2);
    }

    #[test]
    fn gaussian_rank() {
        let i = GaussianRational::i();
        let a = SparseVector::<u8, GaussianRational>::from_entries([(0, GaussianRational::from_integer(1)), (1, i.clone())]);
        let b = a.scale(&GaussianRational::new(q(1, 3), q(2, 1)));
        let c = SparseVector::from_entries([(0, i.clone()), (1, GaussianRational::from_integer(1))]);
        assert_eq!(rank(&[a.clone(), b]), 1);
        assert_eq!(rank(&[a, c]), 2);
    }

    #[test]
    fn solver_roundtrip() {
        let v1 = SparseVector::<u8, Rational>::from_entries([(0, q(1, 1)), (1, q(2, 1))]);
        let v2 = SparseVector::from_entries([(1, q(1, 1)), (2, q(1, 2))]);
        let s = SpanSolver::new(&[v1.clone(), v2.clone()]).unwrap();
        let x = v1.scale(&q(3, 1)).add(&v2.scale(&q(-1, 7)));
        assert_eq!(s.coordinates(&x), Some(vec![q(3, 1), q(-1, 7)]));
        assert_eq!(s.coordinates(&SparseVector::basis(2)), None);
        assert!(SpanSolver::new(&[v1.clone(), v1]).is_err());
    }

    #[test]
    fn smith_form_examples() {
        let s = smith_normal_form(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        assert_eq!(s.diagonal(), vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        // U·M·V = D
        let m = [vec![2i64, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = BigInt::zero();
                for a in 0..3 {
                    for b in 0..3 {
                        acc += &s.u[i][a] * BigInt::from(m[a][b]) * &s.v[b][j];
                    }
                }
                assert_eq!(acc, s.d[i][j]);
            }
        }
    }

    #[test]
    fn inverse_of_cartan_a2() {
        let m = vec![vec![q(2, 1), q(-1, 1)], vec![q(-1, 1), q(2, 1)]];
        let inv = invert(&m).unwrap();
        assert_eq!(inv, vec![vec![q(2, 3), q(1, 3)], vec![q(1, 3), q(2, 3)]]);
    }
}
