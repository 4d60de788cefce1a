//! Weights and the closed-form characters built from them: Schur Laurent
//! polynomials `s_λ`, Schur P-functions `p_{λ,n}`, Euler characteristics
//! `E(λ)` and typical characters.
//!
//! Every rational-function sum is taken over the single common denominator
//! `V = ∏_{i<j}(x_i - x_j) = e^{ρ₀}R₀` and finished with one exact division.
//! The odd denominator enters through `e^{ρ₀}R₁ = ∏_{i<j}(x_i + x_j)`.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::{int, sign_rational, Exponent, ExponentVector, LaurentPoly, Rational};
use crate::perm::{minimal_coset_reps, symmetric_group, Permutation};

/// A weakly decreasing integer vector; indexes `s_λ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneralWeight(Vec<i64>);

impl GeneralWeight {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(parts));
        }
        Ok(GeneralWeight(parts))
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// `λ + ρ₀`, always strictly decreasing.
    pub fn plus_rho(&self) -> Weight {
        let parts = self.0.iter().zip(rho0(self.n()).0).map(|(a, r)| a + r).collect();
        Weight::new(parts).expect("λ + ρ₀ is strictly decreasing")
    }
}

/// A queer-dominant integral weight: weakly decreasing, and two equal
/// consecutive parts must both be zero. Indexes `p_λ`, `E(λ)` and `L(λ)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(parts));
        }
        if !is_in_lambda_n(&parts) {
            return Err(Error::NotQueerDominant(parts));
        }
        Ok(Weight(parts))
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn to_general(&self) -> GeneralWeight {
        GeneralWeight(self.0.clone())
    }

    pub fn exponents(&self) -> ExponentVector {
        ExponentVector::from_ints(&self.0)
    }

    pub fn stats(&self) -> WeightStats {
        weight_stats(&self.0)
    }

    pub fn is_typical(&self) -> bool {
        is_typical(&self.0.iter().map(|&x| Exponent::from_integer(x)).collect_vec())
    }

    /// Remove two zero parts (the inverse of the surjectivity lift).
    pub fn drop_two_zeros(&self) -> Option<Weight> {
        let pos = self.0.iter().position(|&x| x == 0)?;
        if self.0.get(pos + 1) != Some(&0) {
            return None;
        }
        let mut parts = self.0.clone();
        parts.drain(pos..pos + 2);
        Some(Weight(parts))
    }
}

macro_rules! weight_display {
    ($t:ty) => {
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "({})", self.0.iter().join(","))
            }
        }

        impl fmt::Debug for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Display::fmt(self, f)
            }
        }
    };
}

weight_display!(Weight);
weight_display!(GeneralWeight);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightStats {
    /// `l(λ)`: number of nonzero parts.
    pub length: usize,
    /// `δ(λ) = l(λ) mod 2`.
    pub parity: usize,
    /// `|S_λ|`: product of factorials of the part multiplicities.
    pub stabilizer_order: u64,
}

pub fn weight_stats(parts: &[i64]) -> WeightStats {
    let length = parts.iter().filter(|&&x| x != 0).count();
    let mut mult: BTreeMap<i64, u64> = BTreeMap::new();
    for &p in parts {
        *mult.entry(p).or_default() += 1;
    }
    let stabilizer_order = mult.values().map(|&m| (1..=m).product::<u64>()).product();
    WeightStats { length, parity: length % 2, stabilizer_order }
}

/// Membership in `Λₙ`: weakly decreasing, repeated parts only at zero.
pub fn is_in_lambda_n(parts: &[i64]) -> bool {
    parts.windows(2).all(|w| w[0] > w[1] || (w[0] == w[1] && w[0] == 0))
}

/// `λ_i + λ_j ≠ 0` for all `i ≠ j`.
pub fn is_typical(parts: &[Exponent]) -> bool {
    parts.iter().tuple_combinations().all(|(a, b)| !(a + b).is_zero())
}

/// `ρ₀ = (n-1, n-2, …, 1, 0)`.
pub fn rho0(n: usize) -> Weight {
    Weight((0..n as i64).rev().collect())
}

fn pair_factors(n: usize, sign: i64, pred: impl Fn(usize, usize) -> bool) -> Vec<LaurentPoly> {
    (0..n)
        .tuple_combinations()
        .filter(|&(i, j)| pred(i, j))
        .map(|(i, j)| LaurentPoly::var(i, n) + LaurentPoly::var(j, n).scale(&int(sign)))
        .collect()
}

fn pair_product(n: usize, sign: i64, pred: impl Fn(usize, usize) -> bool) -> LaurentPoly {
    pair_factors(n, sign, pred)
        .iter()
        .fold(LaurentPoly::one(n), |acc, f| &acc * f)
}

/// Exact division by a product given as its factors, one factor at a time.
/// Dividing by the linear factors of `V` in turn is much cheaper than one
/// division by the expanded product.
fn divide_by_factors(f: &LaurentPoly, factors: &[LaurentPoly]) -> Result<LaurentPoly> {
    factors.iter().try_fold(f.clone(), |acc, g| acc.exact_div(g))
}

/// Division by `V = ∏_{i<j}(x_i - x_j)`.
pub fn divide_by_vandermonde(f: &LaurentPoly) -> Result<LaurentPoly> {
    divide_by_factors(f, &pair_factors(f.nvars(), -1, |_, _| true))
}

/// Division by the odd product `∏_{i<j}(x_i + x_j)`.
pub fn divide_by_odd_product(f: &LaurentPoly) -> Result<LaurentPoly> {
    divide_by_factors(f, &pair_factors(f.nvars(), 1, |_, _| true))
}

/// `∏_{i<j}(x_i + x_j) = e^{ρ₀}R₁`.
pub fn odd_product(n: usize) -> LaurentPoly {
    pair_product(n, 1, |_, _| true)
}

/// `∏_{i<j}(x_i - x_j) = e^{ρ₀}R₀`.
pub fn vandermonde(n: usize) -> LaurentPoly {
    pair_product(n, -1, |_, _| true)
}

/// `(R₀, R₁) = (∏_{i<j}(1 - x_j/x_i), ∏_{i<j}(1 + x_j/x_i))`.
pub fn weyl_denominators(n: usize) -> (LaurentPoly, LaurentPoly) {
    let rho_inv = LaurentPoly::x_pow(&rho0(n).0.iter().map(|r| -r).collect_vec());
    (&rho_inv * &vandermonde(n), &rho_inv * &odd_product(n))
}

/// Minimal length representatives of `Sₙ/S_λ`.
pub fn coset_reps(lambda: &GeneralWeight) -> Vec<Permutation> {
    minimal_coset_reps(&lambda.0)
}

/// `Σ_{w ∈ Sₙ} (-1)^{l(w)} x^{w(e)}`.
pub fn alternant(e: &ExponentVector) -> LaurentPoly {
    let n = e.len();
    let terms = symmetric_group(n)
        .iter()
        .map(|w| (e.permute(w), sign_rational(w.sign())))
        .collect();
    LaurentPoly::make(terms, n).expect("lengths agree")
}

/// Alternating symmetrization `Σ_w (-1)^{l(w)} w(f)`.
fn antisymmetrize(f: &LaurentPoly) -> LaurentPoly {
    f.signed_orbit_sum(&symmetric_group(f.nvars())).expect("lengths agree")
}

/// The Schur Laurent polynomial `s_λ = a_{λ+ρ₀} / a_{ρ₀}`.
pub fn schur_s(lambda: &GeneralWeight) -> LaurentPoly {
    divide_by_vandermonde(&alternant(&lambda.plus_rho().exponents()))
        .expect("the Vandermonde divides every alternant")
}

/// Schur's P-function
/// `p_{λ,n} = Σ_{w ∈ Sₙ/S_λ} w(x^λ ∏_{i<j, λ_i>λ_j} (1 + x_j/x_i)/(1 - x_j/x_i))`.
///
/// With `P = ∏_{λ_i>λ_j}(x_i - x_j)` each summand is `w(N) · (V / w(P)) / V`
/// where `N = x^λ ∏_{λ_i>λ_j}(x_i + x_j)`. Since `w(V) = (-1)^{l(w)} V`, the
/// cofactor is `V / w(P) = (-1)^{l(w)} w(V / P)`, so only one exact division
/// by `P` is needed before the sum and one by `V` after it.
pub fn schur_p(lambda: &Weight) -> LaurentPoly {
    let n = lambda.n();
    let parts = &lambda.0;
    let strict = |i: usize, j: usize| parts[i] > parts[j];
    let numerator = &LaurentPoly::x_pow(parts) * &pair_product(n, 1, strict);
    let cofactor = divide_by_factors(&vandermonde(n), &pair_factors(n, -1, strict))
        .expect("P divides V");
    let summand = &numerator * &cofactor;

    let total = summand
        .signed_orbit_sum(&coset_reps(&lambda.to_general()))
        .expect("lengths agree");
    divide_by_vandermonde(&total).expect("the P-function sum is a Laurent polynomial")
}

fn pow2(k: usize) -> Rational {
    int(2).pow(k as i32)
}

/// The Euler characteristic
/// `E(λ) = 2^{⌊l(λ)/2⌋} R^{-1} Σ_{w∈W} (-1)^{l(w)} w(e^λ / ∏_{β∈Φ⁺(λ)}(1 + e^{-β}))`
/// with `Φ⁺(λ) = {ε_i - ε_j : i<j, λ_i = λ_j}`.
///
/// Evaluated as `2^k · Σ_w (-1)^{l(w)} w(M) / V` where
/// `M = x^λ ∏_{λ_i=λ_j} x_i ∏_{λ_i≠λ_j}(x_i + x_j)`. The result is checked
/// against `2^{⌊l/2⌋} p_λ`; a mismatch is returned as an error carrying both.
pub fn euler_char(lambda: &Weight) -> Result<LaurentPoly> {
    let n = lambda.n();
    let parts = &lambda.0;
    let mut m = LaurentPoly::x_pow(parts);
    for (i, j) in (0..n).tuple_combinations() {
        let factor = if parts[i] == parts[j] {
            LaurentPoly::var(i, n)
        } else {
            LaurentPoly::var(i, n) + LaurentPoly::var(j, n)
        };
        m = &m * &factor;
    }
    let scalar = pow2(lambda.stats().length / 2);
    let euler = divide_by_vandermonde(&antisymmetrize(&m))
        .map_err(|_| Error::DivisionFailure)?
        .scale(&scalar);
    let expected = schur_p(lambda).scale(&scalar);
    if euler != expected {
        return Err(Error::ProportionalityFailure {
            euler: euler.to_string(),
            expected: expected.to_string(),
            scalar: scalar.to_string(),
        });
    }
    Ok(euler)
}

/// Character of the typical simple module `L(λ)` for `λ ∈ Λₙ`.
pub fn typical_char(lambda: &Weight) -> Result<LaurentPoly> {
    let parts = lambda.0.iter().map(|&x| Exponent::from_integer(x)).collect_vec();
    typical_char_rational(&parts)
}

/// `ch L(λ) = 2^{⌈l(λ)/2⌉} R^{-1} Σ_{w∈W} (-1)^{l(w)} e^{w(λ)}`, i.e. the
/// alternant of `λ` times `∏_{i<j}(x_i + x_j)`, divided by `V`.
///
/// `λ` may lie in any single coset `a + ℤⁿ` with `a` rational; it must be
/// strictly decreasing (for integral `λ`, in `Λₙ`) and typical.
pub fn typical_char_rational(parts: &[Exponent]) -> Result<LaurentPoly> {
    let n = parts.len();
    let shown = || format!("({})", parts.iter().join(","));
    let exps = ExponentVector::new(parts);
    let single_coset = crate::laurent::coset_class(&exps).is_ok();
    if !single_coset || parts.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::InvalidTypicalWeight(shown()));
    }
    if !is_typical(parts) {
        return Err(Error::Atypical(shown()));
    }
    let length = parts.iter().filter(|x| !x.is_zero()).count();
    let scalar = pow2(length.div_ceil(2));
    let numer = &alternant(&exps) * &odd_product(n);
    Ok(divide_by_vandermonde(&numer)?.scale(&scalar))
}

/// All `λ ∈ Λₙ` with entries in `[lo, hi]`.
pub fn weights_in_box(n: usize, lo: i64, hi: i64) -> Vec<Weight> {
    general_weights_in_box(n, lo, hi)
        .into_iter()
        .filter(|g| is_in_lambda_n(&g.0))
        .map(|g| Weight(g.0))
        .collect()
}

/// All weakly decreasing `μ` of length `n` with entries in `[lo, hi]`.
pub fn general_weights_in_box(n: usize, lo: i64, hi: i64) -> Vec<GeneralWeight> {
    fn rec(n: usize, lo: i64, hi: i64, prefix: &mut Vec<i64>, out: &mut Vec<GeneralWeight>) {
        if prefix.len() == n {
            out.push(GeneralWeight(prefix.clone()));
            return;
        }
        let top = prefix.last().copied().unwrap_or(hi);
        for v in (lo..=top).rev() {
            prefix.push(v);
            rec(n, lo, hi, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if lo <= hi || n == 0 {
        rec(n, lo, hi, &mut Vec::new(), &mut out);
    }
    out
}

/// Lex-leading coefficient and exponent, for normalization checks.
pub fn leading_is_monic_at(f: &LaurentPoly, e: &ExponentVector) -> bool {
    matches!(f.leading_term(), Ok((le, c)) if le == e && c.is_one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(parts: &[i64]) -> Weight {
        Weight::new(parts.to_vec()).unwrap()
    }

    fn g(parts: &[i64]) -> GeneralWeight {
        GeneralWeight::new(parts.to_vec()).unwrap()
    }

    fn x(i: usize, n: usize) -> LaurentPoly {
        LaurentPoly::var(i, n)
    }

    fn xp(e: &[i64]) -> LaurentPoly {
        LaurentPoly::x_pow(e)
    }

    #[test]
    fn rho_values() {
        assert_eq!(rho0(2).parts(), &[1, 0]);
        assert_eq!(rho0(1).parts(), &[0]);
        assert_eq!(rho0(4).parts(), &[3, 2, 1, 0]);
    }

    #[test]
    fn odd_products() {
        assert_eq!(odd_product(2), x(0, 2) + x(1, 2));
        assert_eq!(odd_product(1), LaurentPoly::one(1));
        let expected = (x(0, 3) + x(1, 3)) * (x(0, 3) + x(2, 3)) * (x(1, 3) + x(2, 3));
        assert_eq!(odd_product(3), expected);
        assert_eq!(odd_product(3).len(), 7);
    }

    #[test]
    fn denominators() {
        let (r0, r1) = weyl_denominators(2);
        assert_eq!(r0, LaurentPoly::one(2) - xp(&[-1, 1]));
        assert_eq!(r1, LaurentPoly::one(2) + xp(&[-1, 1]));
        let (r0, r1) = weyl_denominators(1);
        assert_eq!((r0, r1), (LaurentPoly::one(1), LaurentPoly::one(1)));
        // e^{ρ₀}R₀ is anti-invariant, e^{ρ₀}R₁ invariant
        let (r0, r1) = weyl_denominators(3);
        let rho = xp(rho0(3).parts());
        for s in [Permutation::transposition(3, 0, 1), Permutation::transposition(3, 1, 2)] {
            let a = &rho * &r0;
            assert_eq!(a.act_permutation(&s).unwrap(), -&a);
            let b = &rho * &r1;
            assert_eq!(b.act_permutation(&s).unwrap(), b);
        }
    }

    #[test]
    fn coset_rep_counts() {
        assert_eq!(coset_reps(&g(&[1, 0])).len(), 2);
        assert_eq!(coset_reps(&g(&[0, 0])).len(), 1);
        assert_eq!(coset_reps(&g(&[2, 0, 0])).len(), 3);
    }

    #[test]
    fn schur_s_examples() {
        assert_eq!(schur_s(&g(&[1, 0])), x(0, 2) + x(1, 2));
        assert_eq!(schur_s(&g(&[2, 1])), xp(&[2, 1]) + xp(&[1, 2]));
        assert_eq!(schur_s(&g(&[0, -1])), xp(&[-1, 0]) + xp(&[0, -1]));
        assert_eq!(schur_s(&g(&[1, 1])), xp(&[1, 1]));
        assert_eq!(schur_s(&g(&[2, 0])), xp(&[2, 0]) + xp(&[1, 1]) + xp(&[0, 2]));
        assert_eq!(schur_s(&g(&[])), LaurentPoly::one(0));
    }

    #[test]
    fn schur_p_examples() {
        assert_eq!(schur_p(&w(&[1, 0])), x(0, 2) + x(1, 2));
        assert_eq!(schur_p(&w(&[2, 1])), xp(&[2, 1]) + xp(&[1, 2]));
        assert_eq!(schur_p(&w(&[0, 0])), LaurentPoly::one(2));
        let p31 = xp(&[3, 1]) + xp(&[2, 2]).scale(&int(2)) + xp(&[1, 3]);
        assert_eq!(schur_p(&w(&[3, 1])), p31);
        assert_eq!(p31, xp(&[1, 1]) * (x(0, 2) + x(1, 2)).pow(2));
        assert_eq!(schur_p(&w(&[])), LaurentPoly::one(0));
        assert_eq!(schur_p(&w(&[-4])), xp(&[-4]));
    }

    #[test]
    fn cofactor_identity_matches_direct_division() {
        // V / w(P) computed by exact division agrees with (-1)^{l(w)} w(V / P)
        let lambda = w(&[3, 1, 0, 0]);
        let parts = lambda.parts();
        let strict = |i: usize, j: usize| parts[i] > parts[j];
        let p = pair_product(4, -1, strict);
        let v = vandermonde(4);
        let base = v.exact_div(&p).unwrap();
        for perm in coset_reps(&lambda.to_general()) {
            let direct = v.exact_div(&p.act_permutation(&perm).unwrap()).unwrap();
            let mut via = base.act_permutation(&perm).unwrap();
            if perm.sign() < 0 {
                via = -via;
            }
            assert_eq!(direct, via);
        }
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_char(&w(&[1, 0])).unwrap(), x(0, 2) + x(1, 2));
        assert_eq!(
            euler_char(&w(&[2, 1])).unwrap(),
            (xp(&[2, 1]) + xp(&[1, 2])).scale(&int(2))
        );
        assert_eq!(euler_char(&w(&[0, 0])).unwrap(), LaurentPoly::one(2));
        // two zero parts exercise the Φ⁺(λ) convention
        let e = euler_char(&w(&[2, 0, 0, -1])).unwrap();
        assert_eq!(e, schur_p(&w(&[2, 0, 0, -1])).scale(&int(2)));
    }

    #[test]
    fn typical_examples() {
        assert_eq!(
            typical_char(&w(&[2, 1])).unwrap(),
            (xp(&[2, 1]) + xp(&[1, 2])).scale(&int(2))
        );
        assert_eq!(typical_char(&w(&[1, 0])).unwrap(), (x(0, 2) + x(1, 2)).scale(&int(2)));
        assert_eq!(typical_char(&w(&[5])).unwrap(), xp(&[5]).scale(&int(2)));
        assert_eq!(typical_char(&w(&[-3])).unwrap(), xp(&[-3]).scale(&int(2)));
        assert!(matches!(typical_char(&w(&[1, 0, -1])), Err(Error::Atypical(_))));
        assert!(matches!(typical_char(&w(&[1, 0, 0])), Err(Error::InvalidTypicalWeight(_))));
        // half-integer weight: (1/2, -3/2) is typical
        let half = [Exponent::new(1, 2), Exponent::new(-3, 2)];
        let ch = typical_char_rational(&half).unwrap();
        assert!(ch.is_symmetric());
        assert!(ch.exact_div(&odd_product(2)).is_ok());
        assert_eq!(ch.coeff(&ExponentVector::new(&half)), int(2));
        // mixed cosets are rejected
        let mixed = [Exponent::new(1, 2), Exponent::from_integer(0)];
        assert!(typical_char_rational(&mixed).is_err());
    }

    #[test]
    fn stats_and_validators() {
        let s = weight_stats(&[3, 1, 0, 0]);
        assert_eq!(s, WeightStats { length: 2, parity: 0, stabilizer_order: 2 });
        assert!(is_in_lambda_n(&[3, 1, 0, 0]));
        assert!(!is_in_lambda_n(&[2, 2]));
        assert!(is_in_lambda_n(&[1, 0, -1]));
        assert!(!w(&[1, 0, -1]).is_typical());
        assert!(Weight::new(vec![2, 2]).is_err());
        assert!(Weight::new(vec![0, 1]).is_err());
        assert!(GeneralWeight::new(vec![2, 2]).is_ok());
        assert_eq!(w(&[3, 1, 0, 0]).drop_two_zeros(), Some(w(&[3, 1])));
        assert_eq!(w(&[3, 1, 0]).drop_two_zeros(), None);
    }

    #[test]
    fn weight_enumeration() {
        assert_eq!(general_weights_in_box(2, 0, 1).len(), 3);
        assert_eq!(weights_in_box(2, 0, 1).len(), 2);
        assert_eq!(weights_in_box(0, 0, 1).len(), 1);
        assert!(weights_in_box(3, -2, 3).iter().all(|w| is_in_lambda_n(w.parts())));
    }
}
