//! The ring `Jₙ`: membership, the evaluation map `ev: Jₙ → Jₙ₋₂`, the
//! lift of weights back along `ev`, the kernel of `ev`, and the expansion
//! of an element in the basis `{p_λ : λ ∈ Λₙ}`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use num::{Signed, Zero};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::laurent::{Exponent, ExponentVector, LaurentPoly, Rational};
use crate::perm::Permutation;
use crate::schur::{
    divide_by_odd_product, is_in_lambda_n, odd_product, schur_p, schur_s, weights_in_box,
    GeneralWeight, Weight,
};

/// Outcome of a membership test. A negative verdict carries a diagnostic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub member: bool,
    pub reason: Option<String>,
}

impl Verdict {
    pub fn yes() -> Self {
        Verdict { member: true, reason: None }
    }

    pub fn no(reason: impl Into<String>) -> Self {
        Verdict { member: false, reason: Some(reason.into()) }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.reason, self.member) {
            (_, true) => write!(f, "member"),
            (Some(r), false) => write!(f, "not a member: {r}"),
            (None, false) => write!(f, "not a member"),
        }
    }
}

/// Why `f` fails to be symmetric, if it does.
pub fn symmetry_defect(f: &LaurentPoly) -> Option<String> {
    let n = f.nvars();
    for i in 0..n.saturating_sub(1) {
        let s = Permutation::transposition(n, i, i + 1);
        for (e, c) in f.terms() {
            if f.coeff(&e.permute(&s)) != *c {
                return Some(format!(
                    "not symmetric: swapping x{} and x{} changes the coefficient of x^{}",
                    i + 1,
                    i + 2,
                    e.permute(&s)
                ));
            }
        }
    }
    None
}

/// The `t`-dependence left after restricting to the wall `x_i = -x_j = t`,
/// reported for the highest surviving power of `t`.
pub fn wall_defect(f: &LaurentPoly, i: usize, j: usize) -> Result<Option<String>> {
    let g = f.wall_substitute(i, j)?;
    let defect = g
        .terms()
        .rev()
        .find(|(e, _)| !e.get(0).is_zero())
        .map(|(e, _)| format!("t-dependence t^{} on wall ({},{})", e.get(0), i + 1, j + 1));
    Ok(defect)
}

/// Membership in `Jₙ`: symmetric, and `f(t, -t, x₃, …)` free of `t`.
/// Fractional exponents are rejected; those belong to the superalgebra
/// rings.
pub fn is_in_jn(f: &LaurentPoly) -> Result<Verdict> {
    if !f.is_integral() {
        return Err(Error::FractionalExponents);
    }
    if let Some(r) = symmetry_defect(f) {
        return Ok(Verdict::no(r));
    }
    if f.nvars() < 2 {
        return Ok(Verdict::yes());
    }
    Ok(match wall_defect(f, 0, 1)? {
        Some(r) => Verdict::no(r),
        None => Verdict::yes(),
    })
}

fn require_jn(f: &LaurentPoly) -> Result<()> {
    match is_in_jn(f)? {
        Verdict { member: true, .. } => Ok(()),
        Verdict { reason, .. } => Err(Error::NotInJn(reason.unwrap_or_default())),
    }
}

/// `ev(f) = f|_{x_{n-1} = -x_n}`, a ring map `Jₙ → Jₙ₋₂`.
pub fn ev(f: &LaurentPoly) -> Result<LaurentPoly> {
    let n = f.nvars();
    if n < 2 {
        return Err(Error::TooFewVariables(n));
    }
    if !f.is_integral() {
        return Err(Error::FractionalExponents);
    }
    if let Some(r) = symmetry_defect(f) {
        return Err(Error::NotInJn(r));
    }
    if let Some(r) = wall_defect(f, n - 2, n - 1)? {
        return Err(Error::ResidualT(r));
    }
    Ok(f.wall_substitute(n - 2, n - 1)?
        .drop_variables(&[0])
        .expect("no t left"))
}

/// Pad `μ ∈ Λ_{n-2}` with two zeros, placed between its positive and
/// negative parts. `ev(p_{lift(μ)}) = p_μ`.
pub fn lift_weight(mu: &Weight) -> Weight {
    let mut parts = mu.parts().to_vec();
    let at = parts.iter().position(|&x| x <= 0).unwrap_or(parts.len());
    parts.splice(at..at, [0, 0]);
    Weight::new(parts).expect("padding with zeros stays in Λₙ")
}

/// Coefficients `a_λ` with `f = Σ a_λ p_λ`.
#[derive(Clone, PartialEq, Eq)]
pub struct PBasisExpansion {
    nvars: usize,
    coefficients: BTreeMap<Weight, Rational>,
}

impl PBasisExpansion {
    pub fn new(nvars: usize) -> Self {
        PBasisExpansion { nvars, coefficients: BTreeMap::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Add `c · p_λ`, dropping the entry if it cancels.
    pub fn add(&mut self, lambda: Weight, c: Rational) {
        assert_eq!(lambda.n(), self.nvars, "weight length");
        let slot = self.coefficients.entry(lambda.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coefficients.remove(&lambda);
        }
    }

    pub fn coefficients(&self) -> &BTreeMap<Weight, Rational> {
        &self.coefficients
    }

    pub fn coeff(&self, lambda: &Weight) -> Rational {
        self.coefficients.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    /// `Σ a_λ p_λ`
    pub fn reconstruct(&self) -> LaurentPoly {
        self.coefficients
            .iter()
            .fold(LaurentPoly::zero(self.nvars), |acc, (l, c)| acc + schur_p(l).scale(c))
    }

    /// `{"(2,0)": "1", …}` with exact fractions as strings.
    pub fn to_json(&self) -> Value {
        let map: Map<String, Value> = self
            .coefficients
            .iter()
            .map(|(l, c)| (l.to_string(), Value::String(c.to_string())))
            .collect();
        Value::Object(map)
    }
}

impl fmt::Display for PBasisExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return write!(f, "0");
        }
        let body = self
            .coefficients
            .iter()
            .rev()
            .map(|(l, c)| format!("{c}*p{l}"))
            .join(" + ");
        write!(f, "{}", body.replace("+ -", "- "))
    }
}

impl fmt::Debug for PBasisExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Expand `f ∈ Jₙ` in the P-basis.
///
/// Each homogeneous component is reduced greedily: its lex-leading
/// exponent `λ` must lie in `Λₙ`, and `c·p_λ` is subtracted. Since `p_λ`
/// only involves exponents between `λ_n` and `λ_1`, the remainder never
/// leaves the exponent box of the component and the loop ends. If the
/// leading exponent ever falls outside `Λₙ` or the box, the component is
/// handed to [`solve_p_coefficients`] instead.
pub fn decompose_p(f: &LaurentPoly) -> Result<PBasisExpansion> {
    require_jn(f)?;
    let n = f.nvars();
    if n <= 1 {
        return Ok(low_rank_expansion(f));
    }
    let mut out = PBasisExpansion::new(n);
    for comp in f.homogeneous_components().into_values() {
        match greedy_p(&comp) {
            Some(found) => merge(&mut out, found),
            None => merge(&mut out, solve_p_coefficients(&comp)?),
        }
    }
    Ok(out)
}

/// `J₀` is the constants and `J₁` all of `ℚ[x₁^{±1}]`, where `p_{(m)} = x₁^m`.
fn low_rank_expansion(f: &LaurentPoly) -> PBasisExpansion {
    let mut out = PBasisExpansion::new(f.nvars());
    for (e, c) in f.terms() {
        let parts = e.as_ints().expect("integral").to_vec();
        out.add(Weight::new(parts).expect("length at most one"), c.clone());
    }
    out
}

fn merge(into: &mut PBasisExpansion, from: PBasisExpansion) {
    for (l, c) in from.coefficients {
        into.add(l, c);
    }
}

fn in_box(e: &ExponentVector, lo: Exponent, hi: Exponent) -> bool {
    (0..e.len()).all(|k| (lo..=hi).contains(&e.get(k)))
}

/// Smallest and largest exponent over all coordinates of the support.
fn exponent_range(f: &LaurentPoly) -> (Exponent, Exponent) {
    let b = f.bounds();
    let lo = b.min.iter().copied().min().unwrap_or_else(Exponent::zero);
    let hi = b.max.iter().copied().max().unwrap_or_else(Exponent::zero);
    (lo, hi)
}

fn greedy_p(component: &LaurentPoly) -> Option<PBasisExpansion> {
    let n = component.nvars();
    let (lo, hi) = exponent_range(component);
    let mut rem = component.clone();
    let mut out = PBasisExpansion::new(n);
    while let Ok((e, c)) = rem.leading_term() {
        let parts = e.as_ints()?;
        if !is_in_lambda_n(parts) || !in_box(e, lo, hi) {
            return None;
        }
        let lambda = Weight::new(parts.to_vec()).ok()?;
        let c = c.clone();
        rem = rem - schur_p(&lambda).scale(&c);
        out.add(lambda, c);
    }
    Some(out)
}

/// Solve `f = Σ a_λ p_λ` as an exact linear system over every `λ ∈ Λₙ`
/// whose degree occurs in `f` and whose entries stay inside the exponent
/// range of `f`. Needs integral exponents but no membership test; an
/// inconsistent system means `f ∉ Jₙ`.
pub fn solve_p_coefficients(f: &LaurentPoly) -> Result<PBasisExpansion> {
    if !f.is_integral() {
        return Err(Error::FractionalExponents);
    }
    let n = f.nvars();
    if n <= 1 {
        return Ok(low_rank_expansion(f));
    }
    let mut out = PBasisExpansion::new(n);
    for (degree, comp) in f.homogeneous_components() {
        let (lo, hi) = exponent_range(&comp);
        let d = degree.to_integer();
        let candidates = weights_in_box(n, lo.to_integer(), hi.to_integer())
            .into_iter()
            .filter(|l| l.degree() == d)
            .collect_vec();
        let columns = candidates.iter().map(schur_p).collect_vec();
        let coeffs = solve_exact(&columns, &comp)
            .ok_or(Error::NotInSpan { degree: degree.to_string() })?;
        for (l, c) in candidates.into_iter().zip(coeffs) {
            if !c.is_zero() {
                out.add(l, c);
            }
        }
    }
    Ok(out)
}

/// Exact Gauss-Jordan elimination for `Σ a_k columns[k] = target`.
/// Free variables are set to zero.
fn solve_exact(columns: &[LaurentPoly], target: &LaurentPoly) -> Option<Vec<Rational>> {
    let rows: Vec<ExponentVector> = columns
        .iter()
        .chain(std::iter::once(target))
        .flat_map(|p| p.terms().map(|(e, _)| e.clone()))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let m = columns.len();
    let mut a: Vec<Vec<Rational>> = rows
        .iter()
        .map(|e| {
            columns
                .iter()
                .map(|p| p.coeff(e))
                .chain(std::iter::once(target.coeff(e)))
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..m {
        let Some(p) = (r..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][col].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        let pivot = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, p) in row[col..].iter_mut().zip(&pivot[col..]) {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if a[r..].iter().any(|row| !row[m].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); m];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = a[i][m].clone();
    }
    Some(x)
}

/// `ev(f) = 0`.
pub fn is_in_kernel(f: &LaurentPoly) -> Result<bool> {
    Ok(ev(f)?.is_zero())
}

/// A kernel element written as `odd_product(n) · Σ a_μ s_μ`.
#[derive(Clone, PartialEq, Eq)]
pub struct KernelFactorization {
    nvars: usize,
    s_coefficients: BTreeMap<GeneralWeight, Rational>,
}

impl KernelFactorization {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn s_coefficients(&self) -> &BTreeMap<GeneralWeight, Rational> {
        &self.s_coefficients
    }

    /// `odd_product(n) · Σ a_μ s_μ`
    pub fn reconstruct(&self) -> LaurentPoly {
        let g = self
            .s_coefficients
            .iter()
            .fold(LaurentPoly::zero(self.nvars), |acc, (mu, c)| acc + schur_s(mu).scale(c));
        &odd_product(self.nvars) * &g
    }

    /// The same data in the P-basis, using `odd_product(n) · s_μ = p_{μ+ρ₀}`.
    pub fn to_p_expansion(&self) -> PBasisExpansion {
        let mut out = PBasisExpansion::new(self.nvars);
        for (mu, c) in &self.s_coefficients {
            out.add(mu.plus_rho(), c.clone());
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let map: Map<String, Value> = self
            .s_coefficients
            .iter()
            .map(|(mu, c)| (mu.to_string(), Value::String(c.to_string())))
            .collect();
        Value::Object(map)
    }
}

impl fmt::Display for KernelFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = if self.s_coefficients.is_empty() {
            "0".to_string()
        } else {
            self.s_coefficients
                .iter()
                .rev()
                .map(|(mu, c)| format!("{c}*s{mu}"))
                .join(" + ")
                .replace("+ -", "- ")
        };
        write!(f, "odd_product({}) * ({body})", self.nvars)
    }
}

impl fmt::Debug for KernelFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Factor a kernel element of `ev` as `∏_{i<j}(x_i + x_j) · g` and expand
/// the symmetric quotient `g` in Schur Laurent polynomials.
///
/// Only the unordered product is divided out. Squaring it (one factor per
/// ordered pair) would already fail for `x₁ + x₂`, which lies in the
/// kernel at `n = 2`.
pub fn kernel_decompose(f: &LaurentPoly) -> Result<KernelFactorization> {
    if !is_in_kernel(f)? {
        return Err(Error::NotInKernel(format!("ev(f) = {}", ev(f)?)));
    }
    let n = f.nvars();
    let mut rem = divide_by_odd_product(f)?;
    let mut s_coefficients = BTreeMap::new();
    while let Ok((e, c)) = rem.leading_term() {
        let parts = e.as_ints().expect("integral").to_vec();
        let mu = GeneralWeight::new(parts).map_err(|_| {
            Error::NotInKernel(format!("quotient by the odd product is not symmetric at x^{e}"))
        })?;
        let c = c.clone();
        rem = rem - schur_s(&mu).scale(&c);
        s_coefficients.insert(mu, c);
    }
    Ok(KernelFactorization { nvars: n, s_coefficients })
}

/// Split `f ∈ Jₙ` as `Σ a_μ p_{lift(μ)} + k` with `ev(f) = Σ a_μ p_μ` and
/// `ev(k) = 0`.
pub fn induction_split(f: &LaurentPoly) -> Result<(PBasisExpansion, LaurentPoly)> {
    let below = decompose_p_inductive(&ev(f)?)?;
    let mut lifted = PBasisExpansion::new(f.nvars());
    for (mu, c) in below.coefficients() {
        lifted.add(lift_weight(mu), c.clone());
    }
    let kernel_part = f - &lifted.reconstruct();
    Ok((lifted, kernel_part))
}

/// P-basis expansion by induction on `n`, following the surjectivity of
/// `ev` and the shape of its kernel. Independent of the greedy reduction
/// in [`decompose_p`], which makes it a useful cross-check.
pub fn decompose_p_inductive(f: &LaurentPoly) -> Result<PBasisExpansion> {
    require_jn(f)?;
    if f.nvars() <= 1 {
        return Ok(low_rank_expansion(f));
    }
    let (mut out, kernel_part) = induction_split(f)?;
    merge(&mut out, kernel_decompose(&kernel_part)?.to_p_expansion());
    Ok(out)
}

/// Members of `Jₙ` with no negative exponents: characters of polynomial
/// representations.
pub fn is_polynomial_character(f: &LaurentPoly) -> bool {
    f.is_integral()
        && matches!(is_in_jn(f), Ok(Verdict { member: true, .. }))
        && f.terms().all(|(e, _)| (0..e.len()).all(|k| !e.get(k).is_negative()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_poly;
    use crate::laurent::int;

    fn poly(s: &str, n: usize) -> LaurentPoly {
        parse_poly(s, n).unwrap()
    }

    fn w(parts: &[i64]) -> Weight {
        Weight::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn membership_examples() {
        assert!(is_in_jn(&poly("x1+x2", 2)).unwrap().member);
        let v = is_in_jn(&poly("x1^2*x2^2", 2)).unwrap();
        assert!(!v.member);
        assert_eq!(v.reason.as_deref(), Some("t-dependence t^4 on wall (1,2)"));
        assert!(is_in_jn(&LaurentPoly::one(3)).unwrap().member);
        assert!(is_in_jn(&poly("x1^3*x2+2*x1^2*x2^2+x1*x2^3", 2)).unwrap().member);
        assert!(!is_in_jn(&poly("x1", 2)).unwrap().member);
        assert_eq!(
            is_in_jn(&poly("x1^(1/2)*x2^(1/2)", 2)),
            Err(Error::FractionalExponents)
        );
    }

    #[test]
    fn ev_examples() {
        assert!(ev(&poly("x1+x2", 2)).unwrap().is_zero());
        assert_eq!(ev(&poly("x1+x2+x3", 3)).unwrap(), poly("x1", 1));
        assert_eq!(ev(&schur_p(&w(&[3, 1, 0, 0]))).unwrap(), schur_p(&w(&[3, 1])));
        assert!(matches!(ev(&poly("x1^2*x2^2", 2)), Err(Error::ResidualT(_))));
        assert_eq!(ev(&poly("x1", 1)), Err(Error::TooFewVariables(1)));
    }

    #[test]
    fn lift_examples() {
        assert_eq!(lift_weight(&w(&[3, 1])), w(&[3, 1, 0, 0]));
        assert_eq!(lift_weight(&w(&[2, -1])), w(&[2, 0, 0, -1]));
        assert_eq!(lift_weight(&w(&[])), w(&[0, 0]));
        assert_eq!(lift_weight(&w(&[0, -2])), w(&[0, 0, 0, -2]));
    }

    #[test]
    fn decompose_examples() {
        let d = decompose_p(&poly("x1^2+2*x1*x2+x2^2", 2)).unwrap();
        assert_eq!(d.to_json().to_string(), r#"{"(2,0)":"1"}"#);
        let d = decompose_p(&poly("x1*x2*(x1+x2)^2", 2)).unwrap();
        assert_eq!(d.coefficients().len(), 1);
        assert_eq!(d.coeff(&w(&[3, 1])), int(1));
        assert!(decompose_p(&LaurentPoly::zero(3)).unwrap().is_empty());
        let d = decompose_p(&poly("3*x1^(-2) + x1", 1)).unwrap();
        assert_eq!(d.coeff(&w(&[-2])), int(3));
        assert!(matches!(decompose_p(&poly("x1^2*x2^2", 2)), Err(Error::NotInJn(_))));
    }

    #[test]
    fn linear_solve_agrees_and_certifies() {
        let f = schur_p(&w(&[2, 0, -1])).scale(&int(3)) - schur_p(&w(&[1, 0, 0]));
        assert_eq!(solve_p_coefficients(&f).unwrap(), decompose_p(&f).unwrap());
        assert!(matches!(
            solve_p_coefficients(&poly("x1^2*x2^2", 2)),
            Err(Error::NotInSpan { .. })
        ));
    }

    #[test]
    fn kernel_examples() {
        let f = poly("x1*x2*(x1+x2)^2", 2);
        assert!(is_in_kernel(&f).unwrap());
        let k = kernel_decompose(&f).unwrap();
        assert_eq!(k.to_json().to_string(), r#"{"(2,1)":"1"}"#);
        assert_eq!(k.reconstruct(), f);
        let k = kernel_decompose(&poly("x1+x2", 2)).unwrap();
        assert_eq!(k.to_json().to_string(), r#"{"(0,0)":"1"}"#);
        assert!(!is_in_kernel(&poly("x1+x2+x3", 3)).unwrap());
        assert!(matches!(kernel_decompose(&poly("x1+x2+x3", 3)), Err(Error::NotInKernel(_))));
    }

    #[test]
    fn inductive_decomposition_matches_greedy() {
        let f = &schur_p(&w(&[3, 1, 0, 0])) * &schur_p(&w(&[1, 0, 0, 0]));
        assert_eq!(decompose_p_inductive(&f).unwrap(), decompose_p(&f).unwrap());
        assert_eq!(decompose_p(&f).unwrap().reconstruct(), f);
    }

    #[test]
    fn polynomial_characters() {
        assert!(is_polynomial_character(&poly("x1+x2", 2)));
        assert!(!is_polynomial_character(&poly("x1^(-1)+x2^(-1)", 2)));
        assert!(is_in_jn(&poly("x1^(-1)+x2^(-1)", 2)).unwrap().member);
        assert!(is_polynomial_character(&LaurentPoly::one(2)));
    }
}
