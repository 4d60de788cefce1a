//! Replayable identity checks over bounded families of weights, shared by
//! the `verify` command and the acceptance tests. Randomized parts draw
//! from a seeded ChaCha stream, so every run is reproducible.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::{Duration, Instant};

use itertools::Itertools;
use num::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::char_ring::{
    decompose_p, decompose_p_inductive, ev, is_in_jn, is_in_kernel, kernel_decompose, lift_weight,
    PBasisExpansion,
};
use crate::laurent::{is_nonneg_integer, int, rat, Exponent, ExponentVector, LaurentPoly, Rational};
use crate::perm::{symmetric_group, Permutation};
use crate::schur::{
    euler_char, general_weights_in_box, odd_product, schur_p, schur_s, typical_char,
    weights_in_box, GeneralWeight, Weight,
};
use crate::super_rings::{coset_split, determinant_power, is_in_ring, RingId};
use crate::weyl_groupoid::{
    build_groupoid, check_functoriality, check_reflection_exchange, check_reflection_inverse,
    check_weyl_composition, is_groupoid_invariant, AffineRealization, GroupoidObject, Root,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: Option<String>,
}

impl Check {
    fn new(label: impl Into<String>, passed: bool) -> Self {
        Check { label: label.into(), passed, detail: None }
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        if !self.passed {
            self.detail = Some(detail.into());
        }
        self
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}", self.label)?;
        if let Some(d) = &self.detail {
            write!(f, " ({d})")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn summary(&self) -> String {
        let ok = self.checks.iter().filter(|c| c.passed).count();
        format!(
            "{} {}: {ok}/{} checks in {:.2?}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.suite,
            self.checks.len(),
            self.elapsed
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Oracle,
    Lift,
    Kernel,
    Basis,
    Euler,
    Typical,
    Groupoid,
    Rings,
    Degree,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Oracle,
        Suite::Lift,
        Suite::Kernel,
        Suite::Basis,
        Suite::Euler,
        Suite::Typical,
        Suite::Groupoid,
        Suite::Rings,
        Suite::Degree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Lift => "lift",
            Suite::Kernel => "kernel",
            Suite::Basis => "basis",
            Suite::Euler => "euler",
            Suite::Typical => "typical",
            Suite::Groupoid => "groupoid",
            Suite::Rings => "rings",
            Suite::Degree => "degree",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// `n` is the largest rank exercised and entries range over
/// `[-max_entry, max_entry]`.
#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub n: usize,
    pub max_entry: i64,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { n: 4, max_entry: 2, seed: 2024 }
    }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> SuiteReport {
    let start = Instant::now();
    let (n, b) = (cfg.n, cfg.max_entry);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let checks = match suite {
        Suite::Oracle => oracle_suite(1..=n.min(5), -b, b, &mut rng),
        Suite::Lift => lift_suite(2..=n, -b, b),
        Suite::Kernel => kernel_suite(2..=n, -b, b),
        Suite::Basis => basis_suite(n, -b, b, 25, 15, &mut rng),
        Suite::Euler => euler_suite(1..=n, -b, b),
        Suite::Typical => typical_suite(1..=n, -b, b),
        Suite::Groupoid => groupoid_suite(2..=n.max(2), &mut rng),
        Suite::Rings => rings_suite(2..=n.clamp(2, 3), &mut rng),
        Suite::Degree => degree_suite(2..=n.max(2), &mut rng),
    };
    SuiteReport { suite, checks, elapsed: start.elapsed() }
}

/// The defining sum for `p_{λ,n}` evaluated at a rational point with
/// distinct nonzero coordinates, summed over all of `Sₙ` and divided by
/// `|S_λ|`. Uses no polynomial division at all.
pub fn p_oracle_at(lambda: &Weight, x: &[Rational]) -> Rational {
    let parts = lambda.parts();
    let n = parts.len();
    let mut total = Rational::zero();
    for w in symmetric_group(n) {
        // w sends x_k to x_{w(k)}
        let y = |k: usize| &x[w.apply(k)];
        let mut term = Rational::one();
        for (k, &p) in parts.iter().enumerate() {
            term *= crate::laurent::pow_signed(y(k), p);
        }
        for (i, j) in (0..n).tuple_combinations() {
            if parts[i] > parts[j] {
                term *= (y(i) + y(j)) / (y(i) - y(j));
            }
        }
        total += term;
    }
    total / int(lambda.stats().stabilizer_order as i64)
}

/// A random point with distinct, nonzero, pairwise non-opposite
/// coordinates.
pub fn generic_point<R: Rng>(n: usize, rng: &mut R) -> Vec<Rational> {
    loop {
        let x: Vec<Rational> =
            (0..n).map(|_| rat(rng.gen_range(-40..=40), rng.gen_range(1..=7))).collect();
        let ok = x.iter().all(|v| !v.is_zero())
            && x.iter().tuple_combinations().all(|(a, b)| a != b && (a + b) != Rational::zero());
        if ok {
            return x;
        }
    }
}

pub fn oracle_suite<R: Rng>(
    ns: RangeInclusive<usize>,
    lo: i64,
    hi: i64,
    rng: &mut R,
) -> Vec<Check> {
    let mut out = Vec::new();
    for n in ns {
        for lambda in weights_in_box(n, lo, hi) {
            let p = schur_p(&lambda);
            let x = generic_point(n, rng);
            let expect = p_oracle_at(&lambda, &x);
            let got = p.evaluate(&x).expect("integral exponents");
            out.push(
                Check::new(format!("p{lambda} matches the defining sum at a random point"), got == expect)
                    .with_detail(format!("{got} vs {expect}")),
            );
        }
    }
    out
}

/// `ev(p_{lift(μ)}) = p_μ` for all `μ ∈ Λ_{n-2}` in the box.
pub fn lift_suite(ns: RangeInclusive<usize>, lo: i64, hi: i64) -> Vec<Check> {
    let mut out = Vec::new();
    for n in ns.filter(|&n| n >= 2) {
        for mu in weights_in_box(n - 2, lo, hi) {
            let lifted = lift_weight(&mu);
            let label = format!("ev(p{lifted}) = p{mu}");
            let check = match ev(&schur_p(&lifted)) {
                Ok(v) => Check::new(label, v == schur_p(&mu)).with_detail(format!("got {v}")),
                Err(e) => Check::new(label, false).with_detail(e.to_string()),
            };
            out.push(check);
        }
    }
    out
}

/// `odd_product(n)·s_μ = p_{μ+ρ₀}` and `ev(p_{μ+ρ₀}) = 0`. On failure the
/// ratio of leading coefficients is reported.
pub fn kernel_suite(ns: RangeInclusive<usize>, lo: i64, hi: i64) -> Vec<Check> {
    let mut out = Vec::new();
    for n in ns.filter(|&n| n >= 2) {
        let odd = odd_product(n);
        for mu in general_weights_in_box(n, lo, hi) {
            let shifted = mu.plus_rho();
            let lhs = &odd * &schur_s(&mu);
            let rhs = schur_p(&shifted);
            let scalar = match (lhs.leading_term(), rhs.leading_term()) {
                (Ok((_, a)), Ok((_, b))) => (a / b).to_string(),
                _ => "undefined".into(),
            };
            out.push(
                Check::new(format!("odd_product({n})*s{mu} = p{shifted}"), lhs == rhs)
                    .with_detail(format!("scalar {scalar}")),
            );
            let in_kernel = is_in_kernel(&rhs);
            out.push(
                Check::new(format!("ev(p{shifted}) = 0"), matches!(in_kernel, Ok(true)))
                    .with_detail(format!("{in_kernel:?}")),
            );
        }
    }
    out
}

/// A random rational combination of at most `terms` P-functions.
pub fn random_combination<R: Rng>(
    n: usize,
    lo: i64,
    hi: i64,
    terms: usize,
    rng: &mut R,
) -> PBasisExpansion {
    let pool = weights_in_box(n, lo, hi);
    let k = rng.gen_range(1..=terms);
    let mut out = PBasisExpansion::new(n);
    for lambda in pool.choose_multiple(rng, k.min(pool.len())) {
        let c = rat(rng.gen_range(-9..=9), rng.gen_range(1..=5));
        out.add(lambda.clone(), c);
    }
    out
}

/// Exact recovery of random combinations, and closure under products.
pub fn basis_suite<R: Rng>(
    max_n: usize,
    lo: i64,
    hi: i64,
    combos: usize,
    products: usize,
    rng: &mut R,
) -> Vec<Check> {
    let ns = (1..=max_n).collect_vec();
    let mut out = Vec::new();
    for k in 0..combos {
        let n = ns[k % ns.len()];
        let truth = random_combination(n, lo, hi, 5, rng);
        let f = truth.reconstruct();
        let got = decompose_p(&f);
        let label = format!("decompose({truth}) in {n} variables");
        out.push(match got {
            Ok(d) => Check::new(label, d == truth).with_detail(format!("got {d}")),
            Err(e) => Check::new(label, false).with_detail(e.to_string()),
        });
    }
    for k in 0..products {
        let n = ns[k % ns.len()].max(2);
        let pool = weights_in_box(n, lo, hi);
        let l = pool.choose(rng).expect("nonempty").clone();
        let m = pool.choose(rng).expect("nonempty").clone();
        let f = &schur_p(&l) * &schur_p(&m);
        let member = is_in_jn(&f).map(|v| v.member).unwrap_or(false);
        out.push(Check::new(format!("p{l}*p{m} lies in J_{n}"), member));
        let label = format!("p{l}*p{m} decomposes exactly");
        out.push(match (decompose_p(&f), decompose_p_inductive(&f)) {
            (Ok(d), Ok(i)) => Check::new(label, d.reconstruct() == f && d == i)
                .with_detail("reconstruction or inductive cross-check differs"),
            (Err(e), _) | (_, Err(e)) => Check::new(label, false).with_detail(e.to_string()),
        });
        out.push(middle_exactness(&f));
    }
    out
}

fn pow2(k: usize) -> Rational {
    Rational::from_integer(num::BigInt::one() << k)
}

/// `E(λ) = 2^{⌊l/2⌋} p_λ` over the box.
pub fn euler_suite(ns: RangeInclusive<usize>, lo: i64, hi: i64) -> Vec<Check> {
    let mut out = Vec::new();
    for n in ns {
        for lambda in weights_in_box(n, lo, hi) {
            let l = lambda.stats().length;
            let label = format!("E{lambda} = 2^{} p{lambda}", l / 2);
            out.push(match euler_char(&lambda) {
                Ok(e) => Check::new(label, e == schur_p(&lambda).scale(&pow2(l / 2))),
                Err(err) => Check::new(label, false).with_detail(err.to_string()),
            });
        }
    }
    out
}

/// For typical `λ`: `ch L(λ) = 2^{⌈l/2⌉} p_λ` with nonnegative integer
/// coefficients.
pub fn typical_suite(ns: RangeInclusive<usize>, lo: i64, hi: i64) -> Vec<Check> {
    let mut out = Vec::new();
    for n in ns {
        for lambda in weights_in_box(n, lo, hi).into_iter().filter(Weight::is_typical) {
            let l = lambda.stats().length;
            let label = format!("ch L{lambda} = 2^{} p{lambda}", l.div_ceil(2));
            out.push(match typical_char(&lambda) {
                Ok(ch) => {
                    let scalar_ok = ch == schur_p(&lambda).scale(&pow2(l.div_ceil(2)));
                    let nonneg = ch.terms().all(|(_, c)| is_nonneg_integer(c));
                    Check::new(label, scalar_ok && nonneg)
                        .with_detail(format!("scalar {scalar_ok}, nonnegative integral {nonneg}"))
                }
                Err(err) => Check::new(label, false).with_detail(err.to_string()),
            });
        }
    }
    out
}

/// A polynomial with a known answer to a membership question.
#[derive(Clone, Debug)]
pub struct Sample {
    pub label: String,
    pub poly: LaurentPoly,
    pub expected: bool,
}

/// Monomial symmetric function `m_e`: the sum over the `Sₙ`-orbit of `x^e`.
pub fn monomial_symmetric(e: &[i64]) -> LaurentPoly {
    let orbit: std::collections::BTreeSet<Vec<i64>> = symmetric_group(e.len())
        .iter()
        .map(|w| w.permute(e))
        .collect();
    orbit
        .into_iter()
        .fold(LaurentPoly::zero(e.len()), |acc, v| acc + LaurentPoly::x_pow(&v))
}

/// Members of `Jₙ` (products and combinations of P-functions, including
/// some of degree zero) and certified non-members.
///
/// Non-members are either single non-constant-vector monomials, which are
/// not symmetric, or `p_λ + c·m_{(k,k,0,…)}`: the restriction of `p_λ` to
/// the wall is free of `t`, while `x₁^k x₂^k` alone contributes
/// `±t^{2k}` there.
pub fn jn_battery<R: Rng>(ns: RangeInclusive<usize>, per_n: usize, rng: &mut R) -> Vec<Sample> {
    let mut out = Vec::new();
    for n in ns {
        let pool = weights_in_box(n, -2, 2);
        for _ in 0..per_n {
            let l = pool.choose(rng).expect("nonempty");
            let m = pool.choose(rng).expect("nonempty");
            let (a, b) = (int(rng.gen_range(-4..=4)), rat(rng.gen_range(-4..=4), 3));
            out.push(Sample {
                label: format!("p{l}*p{m}"),
                poly: &schur_p(l) * &schur_p(m),
                expected: true,
            });
            out.push(Sample {
                label: format!("{a}*p{l} + {b}*p{m}"),
                poly: schur_p(l).scale(&a) + schur_p(m).scale(&b),
                expected: true,
            });
        }
        // degree zero members
        let zero_pool = pool.iter().filter(|l| l.degree() == 0).collect_vec();
        for l in zero_pool.iter().take(per_n) {
            let m = pool.choose(rng).expect("nonempty");
            let dual = Weight::new(m.parts().iter().rev().map(|x| -x).collect())
                .expect("negated reversal stays in Λₙ");
            out.push(Sample {
                label: format!("p{l} + p{m}*p{dual}"),
                poly: schur_p(l) + &schur_p(m) * &schur_p(&dual),
                expected: true,
            });
        }
        for _ in 0..per_n.div_ceil(2) {
            let e = loop {
                let e: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
                if e.iter().any(|&x| x != e[0]) {
                    break e;
                }
            };
            out.push(Sample {
                label: format!("x^{}", ExponentVector::from_ints(&e)),
                poly: LaurentPoly::x_pow(&e),
                expected: false,
            });
            let l = pool.choose(rng).expect("nonempty");
            let k = *[-2i64, -1, 1, 2, 3].choose(rng).expect("nonempty");
            let mut e = vec![0; n];
            e[0] = k;
            e[1] = k;
            let c = int(rng.gen_range(1..=3));
            out.push(Sample {
                label: format!("p{l} + {c}*m{}", ExponentVector::from_ints(&e)),
                poly: schur_p(l) + monomial_symmetric(&e).scale(&c),
                expected: false,
            });
        }
    }
    out
}

/// Groupoid invariance agrees with `Jₙ` membership, and the relations hold
/// on sampled words of length at most 4.
pub fn groupoid_suite<R: Rng>(ns: RangeInclusive<usize>, rng: &mut R) -> Vec<Check> {
    let battery = jn_battery(ns.clone(), 6, rng);
    let mut out = groupoid_invariance_checks(&battery);
    out.extend(groupoid_relation_checks(ns, rng));
    out
}

pub fn groupoid_invariance_checks(battery: &[Sample]) -> Vec<Check> {
    battery
        .iter()
        .map(|s| {
            let inv = is_groupoid_invariant(&s.poly);
            let jn = is_in_jn(&s.poly).map(|v| v.member);
            let ok = matches!((&inv, &jn), (Ok(a), Ok(b)) if a == b && *a == s.expected);
            Check::new(format!("groupoid invariance of {} is {}", s.label, s.expected), ok)
                .with_detail(format!("groupoid {inv:?}, J_n {jn:?}"))
        })
        .collect()
}

/// `r_α r_{-α} = id`, both commuting diagrams, and functoriality of random
/// words of length at most 4, all checked at random points of the walls.
pub fn groupoid_relation_checks<R: Rng>(ns: RangeInclusive<usize>, rng: &mut R) -> Vec<Check> {
    let mut out = Vec::new();
    for n in ns {
        let g = build_groupoid(n).expect("n >= 2");
        let group = symmetric_group(n);
        let walls = g.objects.iter().filter(|o| **o != GroupoidObject::Base).copied().collect_vec();
        let mut ok = true;
        let mut sampled = 0;
        for &obj in &walls {
            let GroupoidObject::Wall(a) = obj else { unreachable!() };
            for _ in 0..4 {
                let x = AffineRealization::of(obj).sample(n, rng);
                let u: &Permutation = group.choose(rng).expect("nonempty");
                let w: &Permutation = group.choose(rng).expect("nonempty");
                ok &= check_reflection_inverse(n, a, &x);
                ok &= check_weyl_composition(n, a, u, w, &x);
                ok &= check_reflection_exchange(n, a, w, &x);
                for len in 0..=4 {
                    let m = g.random_word(obj, len, rng);
                    ok &= check_functoriality(&m, &x);
                    sampled += 1;
                }
            }
        }
        let base_x = AffineRealization::Whole.sample(n, rng);
        for len in 0..=4 {
            let m = g.random_word(GroupoidObject::Base, len, rng);
            ok &= check_functoriality(&m, &base_x);
            sampled += 1;
        }
        out.push(Check::new(
            format!("groupoid relations for n={n} on {sampled} sampled words"),
            ok,
        ));
        let a = Root::new(0, 1).expect("distinct");
        out.push(Check::new(
            format!("r[{a:?}] then r[{:?}] normalizes to the identity (n={n})", a.negate()),
            check_reflection_inverse(n, a, &AffineRealization::of(GroupoidObject::Wall(a)).sample(n, rng)),
        ));
    }
    out
}

/// Constructed members and non-members of the half-integer and full `q(n)`
/// rings. Each rank contributes `per_n` elements `p_λ + odd·det^a·s_μ`,
/// tested against both rings, and a fixed set of non-members: a bare
/// `det^a`, an asymmetric quotient, and an integral part outside `Jₙ`.
pub fn ring_battery<R: Rng>(
    ns: RangeInclusive<usize>,
    per_n: usize,
    rng: &mut R,
) -> Vec<(Sample, RingId)> {
    let classes = [
        Exponent::new(1, 2),
        Exponent::new(1, 3),
        Exponent::new(2, 3),
        Exponent::new(1, 4),
        Exponent::new(5, 6),
    ];
    let mut out = Vec::new();
    for n in ns {
        let odd = odd_product(n);
        let pool = weights_in_box(n, -1, 2);
        let spool = general_weights_in_box(n, -1, 1);
        for k in 0..per_n {
            let a = classes[k % classes.len()];
            let base = schur_p(pool.choose(rng).expect("nonempty"));
            let mu: &GeneralWeight = spool.choose(rng).expect("nonempty");
            let frac_part = &(&odd * &determinant_power(n, a)) * &schur_s(mu);
            let f = &base + &frac_part;
            let label = format!("p + odd*det^{a}*s{mu} (n={n})");
            out.push((
                Sample { label: label.clone(), poly: f.clone(), expected: true },
                RingId::AlgebraQ,
            ));
            out.push((
                Sample { label, poly: f, expected: a == Exponent::new(1, 2) },
                RingId::HalfIntegerCategory,
            ));
        }
        for k in 0..4 {
            let a = classes[k % classes.len()];
            let det = determinant_power(n, a);
            let mut e = vec![0; n];
            e[0] = 1;
            e[1] = 1;
            let non = [
                (format!("det^{a} (n={n})"), det.clone()),
                (format!("odd*det^{a}*x1 (n={n})"), &(&odd * &det) * &LaurentPoly::var(0, n)),
                (
                    format!("m(1,1,..) + odd*det^{a} (n={n})"),
                    monomial_symmetric(&e) + &odd * &det,
                ),
            ];
            for (label, poly) in non {
                let ring = if k % 2 == 0 { RingId::AlgebraQ } else { RingId::HalfIntegerCategory };
                out.push((Sample { label, poly, expected: false }, ring));
            }
        }
    }
    out
}

pub fn rings_suite<R: Rng>(ns: RangeInclusive<usize>, rng: &mut R) -> Vec<Check> {
    let mut out = half_integer_typical_checks(ns.clone());
    out.extend(ring_checks(&ring_battery(ns, 12, rng)));
    out
}

/// Classification of each sample, plus exact coset-split reconstruction
/// for the members of the full ring.
pub fn ring_checks(battery: &[(Sample, RingId)]) -> Vec<Check> {
    let mut out = Vec::new();
    for (s, ring) in battery {
        let ring = *ring;
        let got = is_in_ring(&s.poly, ring);
        let ok = matches!(&got, Ok(v) if v.member == s.expected);
        out.push(
            Check::new(format!("{} in {} is {}", s.label, ring, s.expected), ok)
                .with_detail(format!("{got:?}")),
        );
        if s.expected && ring == RingId::AlgebraQ {
            let split = coset_split(&s.poly);
            let exact = matches!(&split, Ok(d) if d.reconstruct() == s.poly);
            out.push(Check::new(format!("coset split of {} reconstructs", s.label), exact));
        }
    }
    out
}

/// Typical characters with half-integer highest weight lie in the
/// half-integer category, with a symmetric class-1/2 quotient.
pub fn half_integer_typical_checks(ns: RangeInclusive<usize>) -> Vec<Check> {
    let mut out = Vec::new();
    for n in ns {
        // strictly decreasing vectors in 1/2 + Z with entries in [-5/2, 5/2]
        for shifted in general_weights_in_box(n, -3, 2) {
            let parts = shifted.parts();
            if parts.windows(2).any(|w| w[0] == w[1]) {
                continue;
            }
            let lambda = parts.iter().map(|&k| Exponent::new(2 * k + 1, 2)).collect_vec();
            if !crate::schur::is_typical(&lambda) {
                continue;
            }
            let shown = format!("({})", lambda.iter().join(","));
            let label = format!("typical ch L{shown} lies in the half-integer category");
            let ch = match crate::schur::typical_char_rational(&lambda) {
                Ok(ch) => ch,
                Err(e) => {
                    out.push(Check::new(label, false).with_detail(e.to_string()));
                    continue;
                }
            };
            let member = is_in_ring(&ch, RingId::HalfIntegerCategory);
            let split = coset_split(&ch);
            let ok = matches!(&member, Ok(v) if v.member)
                && matches!(&split, Ok(d) if d.integer_part.is_zero()
                    && d.fractional_parts.len() == 1
                    && d.reconstruct() == ch);
            out.push(Check::new(label, ok).with_detail(format!("{member:?}")));
        }
    }
    out
}

/// `PQ(n)` membership is `Q(n)` membership plus total degree zero.
pub fn degree_suite<R: Rng>(ns: RangeInclusive<usize>, rng: &mut R) -> Vec<Check> {
    degree_checks(&jn_battery(ns, 6, rng))
}

pub fn degree_checks(battery: &[Sample]) -> Vec<Check> {
    let mut out = Vec::new();
    for s in battery {
        let q = is_in_ring(&s.poly, RingId::GroupQ).map(|v| v.member);
        let pq = is_in_ring(&s.poly, RingId::GroupPQ).map(|v| v.member);
        let psq = is_in_ring(&s.poly, RingId::GroupPSQ).map(|v| v.member);
        let deg0 = s.poly.terms().all(|(e, _)| e.total_degree().is_zero());
        let ok = matches!((&q, &pq, &psq), (Ok(q), Ok(pq), Ok(psq)) if *pq == (*q && deg0) && pq == psq);
        out.push(
            Check::new(format!("PQ membership of {} is Q membership and degree 0", s.label), ok)
                .with_detail(format!("Q {q:?}, PQ {pq:?}, degree zero {deg0}")),
        );
    }
    out
}

/// Kernel part of the inductive split reconstructs exactly.
pub fn middle_exactness(f: &LaurentPoly) -> Check {
    let label = format!("kernel part of the inductive split in {} variables", f.nvars());
    match crate::char_ring::induction_split(f).and_then(|(_, k)| {
        let fac = kernel_decompose(&k)?;
        Ok(fac.reconstruct() == k)
    }) {
        Ok(ok) => Check::new(label, ok),
        Err(e) => Check::new(label, false).with_detail(e.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_matches_known_value() {
        // p_{(3,1)} = x1^3 x2 + 2 x1^2 x2^2 + x1 x2^3 at (2, 3): 24 + 72 + 54
        let w = Weight::new(vec![3, 1]).unwrap();
        assert_eq!(p_oracle_at(&w, &[int(2), int(3)]), int(150));
    }

    #[test]
    fn small_suites_pass() {
        let cfg = VerifyConfig { n: 3, max_entry: 1, seed: 1 };
        for suite in Suite::ALL {
            let r = run_suite(suite, &cfg);
            assert!(r.passed(), "{}: {:?}", r.summary(), r.failures().collect_vec());
            assert!(!r.checks.is_empty(), "{suite} ran no checks");
        }
    }
}
