//! Sparse multivariate Laurent polynomials over ℚ.
//!
//! Exponents are exact rationals so that the half-integer (and, for the
//! coset rings, any rational) lattice is representable. Terms are kept in a
//! `BTreeMap` under pure lexicographic order with `x1 > x2 > …`, so the
//! leading term is always the last entry.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::integer::{gcd, lcm};
use num::rational::Ratio;
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub type Rational = BigRational;
pub type Exponent = Ratio<i64>;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// An exponent vector `(e_1, …, e_n)` with rational entries.
///
/// Stored as integer numerators over one common positive denominator, in
/// lowest terms. The canonical form makes derived `Eq`/`Hash` agree with
/// value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector {
    num: SmallVec<[i64; 6]>,
    den: i64,
}

impl ExponentVector {
    pub fn zeros(n: usize) -> Self {
        ExponentVector { num: SmallVec::from_elem(0, n), den: 1 }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        ExponentVector { num: SmallVec::from_slice(v), den: 1 }
    }

    pub fn new(entries: &[Exponent]) -> Self {
        let den = entries.iter().fold(1i64, |acc, e| lcm(acc, *e.denom()));
        let num = entries.iter().map(|e| e.numer() * (den / e.denom())).collect();
        Self::normalized(num, den)
    }

    fn normalized(mut num: SmallVec<[i64; 6]>, mut den: i64) -> Self {
        if den != 1 {
            let g = num.iter().fold(den, |acc, &x| gcd(acc, x));
            if g != 1 {
                num.iter_mut().for_each(|x| *x /= g);
                den /= g;
            }
        }
        ExponentVector { num, den }
    }

    pub fn len(&self) -> usize {
        self.num.len()
    }

    pub fn is_empty(&self) -> bool {
        self.num.is_empty()
    }

    #[inline]
    pub fn get(&self, i: usize) -> Exponent {
        Exponent::new(self.num[i], self.den)
    }

    pub fn entries(&self) -> Vec<Exponent> {
        (0..self.len()).map(|i| self.get(i)).collect()
    }

    /// Common denominator of all entries.
    pub fn denominator(&self) -> i64 {
        self.den
    }

    pub fn is_integral(&self) -> bool {
        self.den == 1
    }

    /// The entries as integers, when they all are.
    pub fn as_ints(&self) -> Option<&[i64]> {
        (self.den == 1).then_some(&self.num[..])
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|&x| x == 0)
    }

    pub fn total_degree(&self) -> Exponent {
        Exponent::new(self.num.iter().sum(), self.den)
    }

    pub fn checked_add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        if self.den == other.den {
            let num = self.num.iter().zip(&other.num).map(|(a, b)| a + b).collect();
            Self::normalized(num, self.den)
        } else {
            let den = lcm(self.den, other.den);
            let (sa, sb) = (den / self.den, den / other.den);
            let num = self.num.iter().zip(&other.num).map(|(a, b)| a * sa + b * sb).collect();
            Self::normalized(num, den)
        }
    }

    pub fn negate(&self) -> Self {
        ExponentVector { num: self.num.iter().map(|x| -x).collect(), den: self.den }
    }

    pub fn checked_sub(&self, other: &Self) -> Self {
        self.checked_add(&other.negate())
    }

    /// Entry `i` moves to position `w(i)`.
    pub fn permute(&self, w: &Permutation) -> Self {
        let mut num = self.num.clone();
        for (i, &x) in self.num.iter().enumerate() {
            num[w.apply(i)] = x;
        }
        ExponentVector { num, den: self.den }
    }

    /// Remove the entries at the given (sorted, distinct) positions.
    pub fn remove(&self, positions: &[usize]) -> Self {
        let num = self
            .num
            .iter()
            .enumerate()
            .filter(|(i, _)| !positions.contains(i))
            .map(|(_, &x)| x)
            .collect();
        Self::normalized(num, self.den)
    }

    /// Prepend one entry.
    pub fn prepend(&self, e: Exponent) -> Self {
        let mut entries = vec![e];
        entries.extend(self.entries());
        Self::new(&entries)
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.den == other.den {
            return self.num.cmp(&other.num);
        }
        for (a, b) in self.num.iter().zip(&other.num) {
            let lhs = *a as i128 * other.den as i128;
            let rhs = *b as i128 * self.den as i128;
            match lhs.cmp(&rhs) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.len().cmp(&other.len())
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for i in 0..self.len() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", self.get(i))?;
        }
        write!(f, ")")
    }
}

/// Fractional part in `[0, 1)`.
pub fn frac(e: &Exponent) -> Exponent {
    e - e.floor()
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(Rational::one(), nvars)
    }

    pub fn constant(c: Rational, nvars: usize) -> Self {
        Self::monomial(ExponentVector::zeros(nvars), c)
    }

    pub fn monomial(exps: ExponentVector, c: Rational) -> Self {
        let nvars = exps.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        LaurentPoly { nvars, terms }
    }

    /// `x^e` with integer exponents and coefficient 1.
    pub fn x_pow(exps: &[i64]) -> Self {
        Self::monomial(ExponentVector::from_ints(exps), Rational::one())
    }

    /// The variable `x_{i+1}` (0-based index `i`).
    pub fn var(i: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::x_pow(&e)
    }

    /// Coalesce a term list, dropping zero coefficients.
    pub fn make(terms: Vec<(ExponentVector, Rational)>, nvars: usize) -> Result<Self> {
        let mut out = BTreeMap::new();
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::LengthMismatch { expected: nvars, found: e.len() });
            }
            accumulate(&mut out, e, c);
        }
        Ok(LaurentPoly { nvars, terms: out })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &ExponentVector) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Lex-greatest exponent vector in the support.
    pub fn leading_exponent(&self) -> Result<&ExponentVector> {
        self.terms.keys().next_back().ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_term(&self) -> Result<(&ExponentVector, &Rational)> {
        self.terms.iter().next_back().ok_or(Error::ZeroPolynomial)
    }

    /// Constant term, if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.is_zero().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_integral(&self) -> bool {
        self.terms.keys().all(ExponentVector::is_integral)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::VarCountMismatch(self.nvars, other.nvars))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            accumulate(&mut terms, e.clone(), c.clone());
        }
        Ok(LaurentPoly { nvars: self.nvars, terms })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut acc: HashMap<ExponentVector, Rational> =
            HashMap::with_capacity(self.len() * other.len());
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let c = ca * cb;
                match acc.entry(a.checked_add(b)) {
                    std::collections::hash_map::Entry::Occupied(mut o) => *o.get_mut() += c,
                    std::collections::hash_map::Entry::Vacant(v) => {
                        v.insert(c);
                    }
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(LaurentPoly { nvars: self.nvars, terms })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Multiply by the monomial `c·x^e`.
    pub fn mul_monomial(&self, e: &ExponentVector, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, x)| (k.checked_add(e), x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Exact quotient `f / g` in the Laurent ring.
    ///
    /// Repeatedly cancels the lex-leading term of the remainder against the
    /// lex-leading term of `g`. If `f = q·g` then every exponent of `q` lies in
    /// the box `[min f - min g, max f - max g]` (coordinatewise and in total
    /// degree); a quotient term outside that box proves that no exact quotient
    /// exists. Quotient terms strictly decrease in lex order inside a finite
    /// lattice box, so the loop terminates.
    pub fn exact_div(&self, g: &Self) -> Result<Self> {
        self.check_same(g)?;
        let (g_lead, g_lc) = g.leading_term().map_err(|_| Error::DivisionByZero)?;
        if self.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        let fb = self.bounds();
        let gb = g.bounds();
        let lo: Vec<Exponent> = fb.min.iter().zip(&gb.min).map(|(a, b)| a - b).collect();
        let hi: Vec<Exponent> = fb.max.iter().zip(&gb.max).map(|(a, b)| a - b).collect();
        let deg_lo = fb.min_degree - gb.min_degree;
        let deg_hi = fb.max_degree - gb.max_degree;

        let tail: Vec<(&ExponentVector, &Rational)> = g.terms.iter().rev().skip(1).collect();
        let mut rem = self.terms.clone();
        let mut quot = BTreeMap::new();
        while let Some((e, c)) = rem.pop_last() {
            let qe = e.checked_sub(g_lead);
            let deg = qe.total_degree();
            if deg < deg_lo
                || deg > deg_hi
                || (0..self.nvars).any(|k| {
                    let x = qe.get(k);
                    x < lo[k] || x > hi[k]
                })
            {
                return Err(Error::DivisionFailure);
            }
            let qc = c / g_lc;
            for (ge, gc) in &tail {
                accumulate(&mut rem, qe.checked_add(ge), -(&qc * *gc));
            }
            quot.insert(qe, qc);
        }
        Ok(LaurentPoly { nvars: self.nvars, terms: quot })
    }

    /// Substitute `x_i -> x_{w(i)}`.
    pub fn act_permutation(&self, w: &Permutation) -> Result<Self> {
        if w.len() != self.nvars {
            return Err(Error::LengthMismatch { expected: self.nvars, found: w.len() });
        }
        Ok(LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.permute(w), c.clone())).collect(),
        })
    }

    /// `Σ_w (-1)^{l(w)} w(f)` over the given permutations.
    ///
    /// Small integer coefficients are summed in machine integers; anything
    /// else (or an overflow) falls back to exact rationals.
    pub fn signed_orbit_sum(&self, perms: &[Permutation]) -> Result<Self> {
        if let Some(w) = perms.iter().find(|w| w.len() != self.nvars) {
            return Err(Error::LengthMismatch { expected: self.nvars, found: w.len() });
        }
        let small: Option<Vec<(&ExponentVector, i64)>> = self
            .terms
            .iter()
            .map(|(e, c)| c.is_integer().then(|| c.numer().to_i64()).flatten().map(|c| (e, c)))
            .collect();
        if let Some(small) = small {
            let mut acc: HashMap<ExponentVector, i128> = HashMap::new();
            let mut overflow = false;
            'outer: for w in perms {
                let s = w.sign() as i128;
                for &(e, c) in &small {
                    let slot = acc.entry(e.permute(w)).or_insert(0);
                    match slot.checked_add(s * c as i128) {
                        Some(v) => *slot = v,
                        None => {
                            overflow = true;
                            break 'outer;
                        }
                    }
                }
            }
            if !overflow {
                let terms = acc
                    .into_iter()
                    .filter(|&(_, c)| c != 0)
                    .map(|(e, c)| (e, Rational::from_integer(BigInt::from(c))))
                    .collect();
                return Ok(LaurentPoly { nvars: self.nvars, terms });
            }
        }
        let mut acc: HashMap<ExponentVector, Rational> = HashMap::new();
        for w in perms {
            let s = sign_rational(w.sign());
            for (e, c) in &self.terms {
                *acc.entry(e.permute(w)).or_insert_with(Rational::zero) += c * &s;
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(LaurentPoly { nvars: self.nvars, terms })
    }

    /// Invariance under all adjacent transpositions.
    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| {
            let s = Permutation::transposition(self.nvars, i, i + 1);
            self.terms.iter().all(|(e, c)| self.terms.get(&e.permute(&s)) == Some(c))
        })
    }

    /// Restrict to the wall `x_i = t, x_j = -t` (0-based indices).
    ///
    /// The result lives in `n-1` variables: `t` first, then the remaining
    /// variables in their original order. A monomial with `x_i`-exponent `a`
    /// and `x_j`-exponent `b` becomes `(-1)^b t^{a+b}` times the rest.
    pub fn wall_substitute(&self, i: usize, j: usize) -> Result<Self> {
        let n = self.nvars;
        for idx in [i, j] {
            if idx >= n {
                return Err(Error::IndexOutOfRange { index: idx, nvars: n });
            }
        }
        if i == j {
            return Err(Error::DegenerateWall(i, j));
        }
        let mut drop = [i, j];
        drop.sort_unstable();
        let mut out = BTreeMap::new();
        for (e, c) in &self.terms {
            let (a, b) = (e.get(i), e.get(j));
            for (var, x) in [(i, a), (j, b)] {
                if !x.is_integer() {
                    return Err(Error::FractionalWallExponent { var, i, j });
                }
            }
            let rest = e.remove(&drop).prepend(a + b);
            let c = if b.numer().rem_euclid(2) == 1 { -c } else { c.clone() };
            accumulate(&mut out, rest, c);
        }
        Ok(LaurentPoly { nvars: n - 1, terms: out })
    }

    /// Split by total degree.
    pub fn homogeneous_components(&self) -> BTreeMap<Exponent, LaurentPoly> {
        self.split_by(|e| e.total_degree())
    }

    /// Split by the common fractional part `a ∈ [0,1)` of each monomial's
    /// exponents.
    pub fn coset_components(&self) -> Result<BTreeMap<Exponent, LaurentPoly>> {
        for e in self.terms.keys() {
            coset_class(e)?;
        }
        Ok(self.split_by(|e| coset_class(e).expect("checked above")))
    }

    fn split_by<K: Ord>(&self, key: impl Fn(&ExponentVector) -> K) -> BTreeMap<K, LaurentPoly> {
        let mut out: BTreeMap<K, LaurentPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            out.entry(key(e))
                .or_insert_with(|| LaurentPoly::zero(self.nvars))
                .terms
                .insert(e.clone(), c.clone());
        }
        out
    }

    /// Coordinatewise and total-degree extremes of the support.
    pub fn bounds(&self) -> SupportBounds {
        let n = self.nvars;
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            let z = Exponent::zero();
            return SupportBounds {
                min: vec![z; n],
                max: vec![z; n],
                min_degree: z,
                max_degree: z,
            };
        };
        let mut b = SupportBounds {
            min: first.entries(),
            max: first.entries(),
            min_degree: first.total_degree(),
            max_degree: first.total_degree(),
        };
        for e in it {
            for k in 0..n {
                let x = e.get(k);
                if x < b.min[k] {
                    b.min[k] = x;
                }
                if x > b.max[k] {
                    b.max[k] = x;
                }
            }
            let d = e.total_degree();
            b.min_degree = b.min_degree.min(d);
            b.max_degree = b.max_degree.max(d);
        }
        b
    }

    /// Keep only the terms satisfying `pred`.
    pub fn filter_terms(&self, pred: impl Fn(&ExponentVector) -> bool) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| pred(e))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drop the given variables; every remaining monomial must have zero
    /// exponent there.
    pub fn drop_variables(&self, positions: &[usize]) -> Option<Self> {
        let mut positions = positions.to_vec();
        positions.sort_unstable();
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if positions.iter().any(|&p| !e.get(p).is_zero()) {
                return None;
            }
            terms.insert(e.remove(&positions), c.clone());
        }
        Some(LaurentPoly { nvars: self.nvars - positions.len(), terms })
    }

    /// Embed into `nvars + 1` variables with a new first variable carrying
    /// exponent zero.
    pub fn prepend_variable(&self) -> Self {
        LaurentPoly {
            nvars: self.nvars + 1,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.prepend(Exponent::zero()), c.clone()))
                .collect(),
        }
    }

    /// Evaluate at a point with nonzero rational coordinates. Only defined
    /// for integral exponents.
    pub fn evaluate(&self, point: &[Rational]) -> Option<Rational> {
        if point.len() != self.nvars || point.iter().any(Zero::is_zero) {
            return None;
        }
        let mut sum = Rational::zero();
        for (e, c) in &self.terms {
            let ints = e.as_ints()?;
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(ints) {
                term *= pow_signed(x, k);
            }
            sum += term;
        }
        Some(sum)
    }
}

/// `x^k` for a nonzero rational and any integer `k`.
pub fn pow_signed(x: &Rational, k: i64) -> Rational {
    let p = num::pow(x.clone(), k.unsigned_abs() as usize);
    if k < 0 {
        p.recip()
    } else {
        p
    }
}

/// Common fractional part of the exponents of one monomial.
pub fn coset_class(e: &ExponentVector) -> Result<Exponent> {
    let mut class: Option<Exponent> = None;
    for k in 0..e.len() {
        let f = frac(&e.get(k));
        match class {
            None => class = Some(f),
            Some(a) if a != f => return Err(Error::MixedCoset(e.clone())),
            _ => {}
        }
    }
    Ok(class.unwrap_or_else(Exponent::zero))
}

#[derive(Clone, Debug)]
pub struct SupportBounds {
    pub min: Vec<Exponent>,
    pub max: Vec<Exponent>,
    pub min_degree: Exponent,
    pub max_degree: Exponent,
}

fn accumulate(terms: &mut BTreeMap<ExponentVector, Rational>, e: ExponentVector, c: Rational) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match terms.entry(e) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        self.terms.values_mut().for_each(|c| *c = -c.clone());
        self
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            /// Panics on a variable-count mismatch; use the `checked_*` form
            /// to get an error instead.
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$checked(rhs).expect("variable count mismatch")
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

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl std::iter::Sum for LaurentPoly {
    /// Panics on an empty iterator, whose variable count is unknown.
    fn sum<I: Iterator<Item = LaurentPoly>>(mut iter: I) -> LaurentPoly {
        let first = iter.next().expect("sum of an empty iterator");
        let nvars = first.nvars;
        let mut acc: HashMap<ExponentVector, Rational> = first.terms.into_iter().collect();
        for p in iter {
            assert_eq!(nvars, p.nvars, "variable count mismatch");
            for (e, c) in p.terms {
                *acc.entry(e).or_insert_with(Rational::zero) += c;
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        LaurentPoly { nvars, terms }
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `(-1)^k` for the sign factor of a permutation.
pub(crate) fn sign_rational(s: i32) -> Rational {
    if s < 0 {
        -Rational::one()
    } else {
        Rational::one()
    }
}

/// `true` when `c` is a nonnegative integer.
pub fn is_nonneg_integer(c: &Rational) -> bool {
    c.is_integer() && !c.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize, n: usize) -> LaurentPoly {
        LaurentPoly::var(i, n)
    }

    fn half(n: i64) -> Exponent {
        Exponent::new(n, 2)
    }

    #[test]
    fn make_coalesces_and_drops_zeros() {
        let f = LaurentPoly::make(
            vec![
                (ExponentVector::from_ints(&[1, 0]), int(1)),
                (ExponentVector::from_ints(&[0, 1]), int(1)),
            ],
            2,
        )
        .unwrap();
        assert_eq!(f, x(0, 2) + x(1, 2));

        let z = LaurentPoly::make(
            vec![
                (ExponentVector::from_ints(&[1, 0]), int(1)),
                (ExponentVector::from_ints(&[1, 0]), int(-1)),
            ],
            2,
        )
        .unwrap();
        assert!(z.is_zero());

        let h = LaurentPoly::make(vec![(ExponentVector::new(&[half(1), half(1)]), int(1))], 2)
            .unwrap();
        let (e, _) = h.leading_term().unwrap();
        assert_eq!(e.denominator(), 2);
        assert_eq!(e.get(0), half(1));

        assert_eq!(
            LaurentPoly::make(vec![(ExponentVector::from_ints(&[1]), int(1))], 2),
            Err(Error::LengthMismatch { expected: 2, found: 1 })
        );
    }

    #[test]
    fn exponent_vectors_are_canonical() {
        let a = ExponentVector::new(&[Exponent::new(2, 2), Exponent::new(4, 2)]);
        assert_eq!(a, ExponentVector::from_ints(&[1, 2]));
        let b = ExponentVector::new(&[half(1), Exponent::new(1, 3)]);
        assert_eq!(b.denominator(), 6);
        let c = b.checked_add(&ExponentVector::new(&[half(1), Exponent::new(2, 3)]));
        assert_eq!(c, ExponentVector::from_ints(&[1, 1]));
        assert!(c.is_integral());
    }

    #[test]
    fn ring_examples() {
        let s = x(0, 2) + x(1, 2);
        let sq = LaurentPoly::x_pow(&[2, 0])
            + LaurentPoly::x_pow(&[1, 1]).scale(&int(2))
            + LaurentPoly::x_pow(&[0, 2]);
        assert_eq!(&s * &s, sq);
        assert!((s.clone() + s.scale(&int(-1))).is_zero());
        assert_eq!(LaurentPoly::x_pow(&[-1, 0]) * x(0, 2), LaurentPoly::one(2));
        assert_eq!(s.checked_add(&x(0, 3)), Err(Error::VarCountMismatch(2, 3)));
    }

    #[test]
    fn exact_division_examples() {
        let (a, b) = (x(0, 2), x(1, 2));
        let num = &a * &a - &b * &b;
        assert_eq!(num.exact_div(&(&a - &b)).unwrap(), &a + &b);
        assert_eq!((&a + &b).exact_div(&(&a + &b)).unwrap(), LaurentPoly::one(2));
        let sum_sq = &a * &a + &b * &b;
        assert_eq!(sum_sq.exact_div(&(&a + &b)), Err(Error::DivisionFailure));
        assert_eq!(a.exact_div(&LaurentPoly::zero(2)), Err(Error::DivisionByZero));
        // sign carried through the division
        assert_eq!((&a - &b).exact_div(&(&b - &a)).unwrap(), LaurentPoly::constant(int(-1), 2));
        // Laurent quotient with negative exponents
        let f = LaurentPoly::x_pow(&[-2, 1]) + LaurentPoly::x_pow(&[-1, 0]);
        assert_eq!(f.exact_div(&(&a + &b)).unwrap(), LaurentPoly::x_pow(&[-2, 0]));
    }

    #[test]
    fn exact_division_brute_force_nonexistence() {
        // x1^2 + x2^2 = q (x1 + x2) would force q(x1, -x1) * 0 = 2 x1^2.
        let f = x(0, 2).pow(2) + x(1, 2).pow(2);
        let g = x(0, 2) + x(1, 2);
        let at = f.evaluate(&[int(1), int(-1)]).unwrap();
        assert_eq!(g.evaluate(&[int(1), int(-1)]).unwrap(), int(0));
        assert_ne!(at, int(0));
        assert!(f.exact_div(&g).is_err());
    }

    #[test]
    fn permutation_action() {
        let s = Permutation::transposition(2, 0, 1);
        assert_eq!(x(0, 2).act_permutation(&s).unwrap(), x(1, 2));
        let e = x(0, 2) + x(1, 2);
        assert_eq!(e.act_permutation(&s).unwrap(), e);
        let c = Permutation::cycle(3, &[0, 1, 2]).unwrap();
        assert_eq!(
            LaurentPoly::x_pow(&[2, 1, 0]).act_permutation(&c).unwrap(),
            LaurentPoly::x_pow(&[0, 2, 1])
        );
        assert!(x(0, 2).act_permutation(&Permutation::identity(3)).is_err());
    }

    #[test]
    fn symmetry() {
        assert!((x(0, 2) + x(1, 2)).is_symmetric());
        assert!(!x(0, 2).is_symmetric());
        assert!(LaurentPoly::x_pow(&[2, 2]).is_symmetric());
        assert!(LaurentPoly::one(0).is_symmetric());
    }

    #[test]
    fn wall_substitution() {
        assert!((x(0, 2) + x(1, 2)).wall_substitute(0, 1).unwrap().is_zero());
        assert_eq!(
            LaurentPoly::x_pow(&[2, 2]).wall_substitute(0, 1).unwrap(),
            LaurentPoly::x_pow(&[4])
        );
        let f = x(0, 3) + x(1, 3) + x(2, 3);
        assert_eq!(f.wall_substitute(0, 1).unwrap(), LaurentPoly::x_pow(&[0, 1]));
        // odd power of x_j flips the sign
        assert_eq!(
            LaurentPoly::x_pow(&[1, 1]).wall_substitute(0, 1).unwrap(),
            LaurentPoly::constant(int(-1), 1).mul_monomial(&ExponentVector::from_ints(&[2]), &int(1))
        );
        let h = LaurentPoly::monomial(ExponentVector::new(&[half(1), half(1)]), int(1));
        assert!(matches!(h.wall_substitute(0, 1), Err(Error::FractionalWallExponent { .. })));
        assert_eq!(x(0, 2).wall_substitute(0, 0), Err(Error::DegenerateWall(0, 0)));
    }

    #[test]
    fn homogeneous_split() {
        let f = x(0, 2) + LaurentPoly::x_pow(&[1, 1]);
        let parts = f.homogeneous_components();
        assert_eq!(parts[&Exponent::from_integer(1)], x(0, 2));
        assert_eq!(parts[&Exponent::from_integer(2)], LaurentPoly::x_pow(&[1, 1]));
        assert!(LaurentPoly::zero(2).homogeneous_components().is_empty());
        let g = LaurentPoly::x_pow(&[1, -1]) + LaurentPoly::one(2);
        assert_eq!(g.homogeneous_components().len(), 1);
    }

    #[test]
    fn coset_split() {
        let h = LaurentPoly::monomial(ExponentVector::new(&[half(1), half(1)]), int(1));
        let f = x(0, 2) + x(1, 2) + h.clone();
        let parts = f.coset_components().unwrap();
        assert_eq!(parts[&Exponent::zero()], x(0, 2) + x(1, 2));
        assert_eq!(parts[&half(1)], h);
        let mixed = LaurentPoly::monomial(
            ExponentVector::new(&[half(1), Exponent::from_integer(1)]),
            int(1),
        );
        assert!(matches!(mixed.coset_components(), Err(Error::MixedCoset(_))));
        assert!(LaurentPoly::zero(2).coset_components().unwrap().is_empty());
        // negative exponents share the fractional part of their class
        let neg = LaurentPoly::monomial(ExponentVector::new(&[half(-1), half(3)]), int(1));
        assert!(neg.coset_components().unwrap().contains_key(&half(1)));
    }

    #[test]
    fn leading_exponent_is_lex() {
        let s = x(0, 2) + x(1, 2);
        assert_eq!(s.pow(2).leading_exponent().unwrap(), &ExponentVector::from_ints(&[2, 0]));
        assert_eq!(
            LaurentPoly::x_pow(&[1, 1]).leading_exponent().unwrap(),
            &ExponentVector::from_ints(&[1, 1])
        );
        let f = LaurentPoly::x_pow(&[0, 2]) + x(0, 2);
        assert_eq!(f.leading_exponent().unwrap(), &ExponentVector::from_ints(&[1, 0]));
        assert_eq!(LaurentPoly::zero(2).leading_exponent(), Err(Error::ZeroPolynomial));
    }
}
