//! Membership and coset splitting for the character rings of `SQ(n)`,
//! `PQ(n)`, `PSQ(n)`, the half-integer weight category of `q(n)`, and the
//! full rings of `q(n)` (equivalently `sq(n)`) and `pq(n)` (equivalently
//! `psq(n)`).
//!
//! A monomial of a superalgebra character has all exponents in one coset
//! `a + ℤ`, `a ∈ ℚ/ℤ`. The class `a = 0` must lie in `Jₙ`. Every other class
//! must be `∏_{i<j}(x_i + x_j)` times a symmetric quotient.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::{One, Zero};

use crate::char_ring::{is_in_jn, symmetry_defect, Verdict};
use crate::error::{Error, Result};
use crate::laurent::{Exponent, ExponentVector, LaurentPoly, Rational};
use crate::schur::{divide_by_odd_product, odd_product};

/// Largest coset denominator accepted unless the caller raises it.
pub const DEFAULT_DENOM_BOUND: i64 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingId {
    GroupQ,
    GroupSQ,
    GroupPQ,
    GroupPSQ,
    HalfIntegerCategory,
    AlgebraQ,
    AlgebraPQ,
}

impl RingId {
    pub const ALL: [RingId; 7] = [
        RingId::GroupQ,
        RingId::GroupSQ,
        RingId::GroupPQ,
        RingId::GroupPSQ,
        RingId::HalfIntegerCategory,
        RingId::AlgebraQ,
        RingId::AlgebraPQ,
    ];

    /// Name used in diagnostics.
    pub fn name(self) -> &'static str {
        match self {
            RingId::GroupQ => "Q(n)",
            RingId::GroupSQ => "SQ(n)",
            RingId::GroupPQ => "PQ(n)",
            RingId::GroupPSQ => "PSQ(n)",
            RingId::HalfIntegerCategory => "q(n), half-integer weights",
            RingId::AlgebraQ => "q(n)",
            RingId::AlgebraPQ => "pq(n)",
        }
    }

    /// Short name accepted by [`FromStr`].
    pub fn tag(self) -> &'static str {
        match self {
            RingId::GroupQ => "q",
            RingId::GroupSQ => "sq",
            RingId::GroupPQ => "pq",
            RingId::GroupPSQ => "psq",
            RingId::HalfIntegerCategory => "half",
            RingId::AlgebraQ => "alg-q",
            RingId::AlgebraPQ => "alg-pq",
        }
    }
}

impl fmt::Display for RingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RingId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        RingId::ALL
            .into_iter()
            .find(|r| r.tag() == s)
            .ok_or_else(|| format!("unknown ring {s:?}"))
    }
}

/// `f = integer_part + Σ_a odd_product(n) · g_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetDecomposition {
    pub integer_part: LaurentPoly,
    pub fractional_parts: BTreeMap<Exponent, LaurentPoly>,
}

impl CosetDecomposition {
    pub fn reconstruct(&self) -> LaurentPoly {
        let odd = odd_product(self.integer_part.nvars());
        self.fractional_parts
            .values()
            .fold(self.integer_part.clone(), |acc, g| acc + &odd * g)
    }
}

fn check_bound(classes: &BTreeMap<Exponent, LaurentPoly>, bound: i64) -> Result<()> {
    match classes.keys().find(|a| *a.denom() > bound) {
        Some(a) => Err(Error::DenominatorBound { den: *a.denom(), bound }),
        None => Ok(()),
    }
}

fn not_in(ring: RingId, reason: String) -> Error {
    Error::NotInRing { ring: ring.name().to_string(), reason }
}

/// Split by coset class and factor each fractional class through the odd
/// product, for elements of the full `q(n)` character ring. Class `0` is
/// handled by the `Jₙ` summand alone.
pub fn coset_split(f: &LaurentPoly) -> Result<CosetDecomposition> {
    coset_split_with_bound(f, DEFAULT_DENOM_BOUND)
}

pub fn coset_split_with_bound(f: &LaurentPoly, bound: i64) -> Result<CosetDecomposition> {
    let ring = RingId::AlgebraQ;
    let classes = f.coset_components()?;
    check_bound(&classes, bound)?;
    let mut integer_part = LaurentPoly::zero(f.nvars());
    let mut fractional_parts = BTreeMap::new();
    for (a, part) in classes {
        if a.is_zero() {
            let v = is_in_jn(&part)?;
            if !v.member {
                let reason = v.reason.unwrap_or_default();
                return Err(not_in(ring, format!("integral part: {reason}")));
            }
            integer_part = part;
            continue;
        }
        let g = divide_by_odd_product(&part).map_err(|_| {
            not_in(ring, format!("coset class a={a} is not divisible by the odd product"))
        })?;
        if let Some(r) = symmetry_defect(&g) {
            return Err(not_in(ring, format!("coset class a={a}: quotient {r}")));
        }
        fractional_parts.insert(a, g);
    }
    Ok(CosetDecomposition { integer_part, fractional_parts })
}

/// Membership in one of the variant rings, with a diagnostic on failure.
pub fn is_in_ring(f: &LaurentPoly, ring: RingId) -> Result<Verdict> {
    is_in_ring_with_bound(f, ring, DEFAULT_DENOM_BOUND)
}

pub fn is_in_ring_with_bound(f: &LaurentPoly, ring: RingId, bound: i64) -> Result<Verdict> {
    let classes = f.coset_components()?;
    let fractional = classes.keys().find(|a| !a.is_zero()).copied();
    match ring {
        RingId::GroupQ | RingId::GroupSQ => match fractional {
            Some(a) => Ok(Verdict::no(format!("coset class a={a} has non-integral exponents"))),
            None => is_in_jn(f),
        },
        RingId::GroupPQ | RingId::GroupPSQ | RingId::AlgebraPQ => {
            if let Some(a) = fractional {
                return Ok(Verdict::no(format!("coset class a={a} has non-integral exponents")));
            }
            let v = is_in_jn(f)?;
            if !v.member {
                return Ok(v);
            }
            Ok(degree_defect(f).map_or_else(Verdict::yes, Verdict::no))
        }
        RingId::HalfIntegerCategory => {
            let half = Exponent::new(1, 2);
            if let Some(a) = classes.keys().find(|a| !a.is_zero() && **a != half) {
                return Ok(Verdict::no(format!("coset class a={a} is neither 0 nor 1/2")));
            }
            split_verdict(f, bound)
        }
        RingId::AlgebraQ => {
            check_bound(&classes, bound)?;
            split_verdict(f, bound)
        }
    }
}

fn split_verdict(f: &LaurentPoly, bound: i64) -> Result<Verdict> {
    match coset_split_with_bound(f, bound) {
        Ok(_) => Ok(Verdict::yes()),
        Err(Error::NotInRing { reason, .. }) => Ok(Verdict::no(reason)),
        Err(e) => Err(e),
    }
}

fn degree_defect(f: &LaurentPoly) -> Option<String> {
    f.terms()
        .find(|(e, _)| !e.total_degree().is_zero())
        .map(|(e, _)| format!("monomial x^{e} has total degree {} != 0", e.total_degree()))
}

/// `(x₁ ⋯ x_n)^a`, the simplest symmetric element of class `a`.
pub fn determinant_power(n: usize, a: Exponent) -> LaurentPoly {
    LaurentPoly::monomial(ExponentVector::new(&vec![a; n]), Rational::one())
}
