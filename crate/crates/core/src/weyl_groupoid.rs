//! A concrete Weyl groupoid for `q(n)`.
//!
//! Objects are the roots `α = ε_i - ε_j` (each standing for its wall
//! `Π_α = {x_i = -x_j}`, shared with `-α`) together with a base point `[W]`.
//! Morphisms are words in the generators
//!
//! * `r_α : [α] → [-α]`, realized on `Π_α` as `τ_α(x) = x + ε_i - ε_j`;
//! * `w : [α] → [wα]` for `w ∈ Sₙ`, realized as the coordinate permutation,
//!   and `w : [W] → [W]`.
//!
//! On Laurent characters, restriction to `Π_α` is `x_i = t, x_j = -t`, and
//! the translation scales the `t^d` component by `c^d` for a formal `c`.
//! Invariance therefore means the restriction is free of `t`. This is a
//! modeling choice; its agreement with `Jₙ` membership is checked, not
//! assumed.

use std::fmt;

use itertools::Itertools;
use num::Zero;
use rand::Rng;

use crate::char_ring::{symmetry_defect, Verdict};
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Rational};
use crate::perm::{symmetric_group, Permutation};

/// The root `ε_i - ε_j`, `i ≠ j`, 0-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub i: usize,
    pub j: usize,
}

impl Root {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == j {
            return Err(Error::DegenerateWall(i, j));
        }
        Ok(Root { i, j })
    }

    pub fn negate(self) -> Root {
        Root { i: self.j, j: self.i }
    }

    /// `wα = ε_{w(i)} - ε_{w(j)}`
    pub fn act(self, w: &Permutation) -> Root {
        Root { i: w.apply(self.i), j: w.apply(self.j) }
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}-e{}", self.i + 1, self.j + 1)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupoidObject {
    Wall(Root),
    Base,
}

impl fmt::Debug for GroupoidObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupoidObject::Wall(a) => write!(f, "[{a:?}]"),
            GroupoidObject::Base => write!(f, "[W]"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Generator {
    /// `r_α`, only defined at the object `[α]`.
    Reflection(Root),
    WeylElement(Permutation),
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Reflection(a) => write!(f, "r[{a:?}]"),
            Generator::WeylElement(w) => write!(f, "w{w:?}"),
        }
    }
}

impl Generator {
    /// Target of the generator applied at `source`, if it is defined there.
    pub fn target(&self, source: GroupoidObject) -> Option<GroupoidObject> {
        match (self, source) {
            (Generator::Reflection(a), GroupoidObject::Wall(b)) if *a == b => {
                Some(GroupoidObject::Wall(a.negate()))
            }
            (Generator::Reflection(_), _) => None,
            (Generator::WeylElement(w), GroupoidObject::Wall(b)) => {
                Some(GroupoidObject::Wall(b.act(w)))
            }
            (Generator::WeylElement(_), GroupoidObject::Base) => Some(GroupoidObject::Base),
        }
    }
}

/// A word of generators, applied first to last, starting at `source`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupoidMorphism {
    n: usize,
    source: GroupoidObject,
    target: GroupoidObject,
    word: Vec<Generator>,
}

impl fmt::Debug for GroupoidMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} -> {:?} via {:?}", self.source, self.target, self.word)
    }
}

impl GroupoidMorphism {
    pub fn identity(n: usize, object: GroupoidObject) -> Self {
        GroupoidMorphism { n, source: object, target: object, word: Vec::new() }
    }

    /// Check composability along the word and record its target.
    pub fn new(n: usize, source: GroupoidObject, word: Vec<Generator>) -> Result<Self> {
        let mut at = source;
        for (k, g) in word.iter().enumerate() {
            if let Generator::WeylElement(w) = g {
                if w.len() != n {
                    return Err(Error::InvalidPermutation(n));
                }
            }
            at = g.target(at).ok_or_else(|| {
                Error::NotComposable(format!("generator {k} ({g:?}) is not defined at {at:?}"))
            })?;
        }
        Ok(GroupoidMorphism { n, source, target: at, word })
    }

    pub fn source(&self) -> GroupoidObject {
        self.source
    }

    pub fn target(&self) -> GroupoidObject {
        self.target
    }

    pub fn word(&self) -> &[Generator] {
        &self.word
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// `other ∘ self`: first `self`, then `other`.
    pub fn then(&self, other: &GroupoidMorphism) -> Result<Self> {
        if self.target != other.source {
            return Err(Error::NotComposable(format!(
                "target {:?} differs from source {:?}",
                self.target, other.source
            )));
        }
        let word = self.word.iter().chain(&other.word).cloned().collect();
        Ok(GroupoidMorphism { n: self.n, source: self.source, target: other.target, word })
    }

    /// Rewrite with the defining relations until nothing changes: adjacent
    /// Weyl elements multiply, identities disappear, and `r_α` followed by
    /// `r_{-α}` cancels.
    pub fn normalize(&self) -> Self {
        let mut out: Vec<Generator> = Vec::with_capacity(self.word.len());
        for g in &self.word {
            match (out.last(), g) {
                (Some(Generator::WeylElement(v)), Generator::WeylElement(w)) => {
                    let uw = w.compose(v);
                    out.pop();
                    if !uw.is_identity() {
                        out.push(Generator::WeylElement(uw));
                    }
                }
                (Some(Generator::Reflection(a)), Generator::Reflection(b)) if *b == a.negate() => {
                    out.pop();
                }
                (_, Generator::WeylElement(w)) if w.is_identity() => {}
                _ => out.push(g.clone()),
            }
        }
        GroupoidMorphism { n: self.n, source: self.source, target: self.target, word: out }
    }

    /// The induced affine map `F(φ)` at a point of `F(source)`.
    pub fn apply(&self, point: &[Rational]) -> Vec<Rational> {
        self.word.iter().fold(point.to_vec(), |x, g| match g {
            Generator::Reflection(a) => translate(&x, *a),
            Generator::WeylElement(w) => w.permute(&x),
        })
    }
}

/// `τ_α(x) = x + ε_i - ε_j`
pub fn translate(x: &[Rational], a: Root) -> Vec<Rational> {
    let mut y = x.to_vec();
    y[a.i] += Rational::from_integer(1.into());
    y[a.j] -= Rational::from_integer(1.into());
    y
}

/// `F(object)`: the wall `Π_α` or all of affine space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AffineRealization {
    Wall { i: usize, j: usize },
    Whole,
}

impl AffineRealization {
    pub fn of(object: GroupoidObject) -> Self {
        match object {
            GroupoidObject::Wall(a) => AffineRealization::Wall { i: a.i.min(a.j), j: a.i.max(a.j) },
            GroupoidObject::Base => AffineRealization::Whole,
        }
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        match *self {
            AffineRealization::Wall { i, j } => (&x[i] + &x[j]).is_zero(),
            AffineRealization::Whole => true,
        }
    }

    /// A random rational point of the realization.
    pub fn sample<R: Rng>(&self, n: usize, rng: &mut R) -> Vec<Rational> {
        let mut x: Vec<Rational> = (0..n)
            .map(|_| Rational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=4).into()))
            .collect();
        if let AffineRealization::Wall { i, j } = *self {
            x[j] = -x[i].clone();
        }
        x
    }
}

#[derive(Clone, Debug)]
pub struct Groupoid {
    pub n: usize,
    pub objects: Vec<GroupoidObject>,
    pub generators: Vec<GroupoidMorphism>,
}

/// All wall objects `[α]` (ordered pairs) and `[W]`, with one reflection
/// per wall object and one transposition morphism per transposition and
/// object.
pub fn build_groupoid(n: usize) -> Result<Groupoid> {
    if n < 2 {
        return Err(Error::TooFewVariables(n));
    }
    let mut objects: Vec<GroupoidObject> = (0..n)
        .permutations(2)
        .map(|p| GroupoidObject::Wall(Root { i: p[0], j: p[1] }))
        .collect();
    objects.push(GroupoidObject::Base);
    let transpositions = (0..n)
        .tuple_combinations()
        .map(|(i, j)| Permutation::transposition(n, i, j))
        .collect_vec();
    let mut generators = Vec::new();
    for &obj in &objects {
        if let GroupoidObject::Wall(a) = obj {
            generators.push(GroupoidMorphism::new(n, obj, vec![Generator::Reflection(a)])?);
        }
        for s in &transpositions {
            generators.push(GroupoidMorphism::new(n, obj, vec![Generator::WeylElement(s.clone())])?);
        }
    }
    Ok(Groupoid { n, objects, generators })
}

impl Groupoid {
    /// A random composable word of `len` generators from `source`, drawing
    /// Weyl elements from all of `Sₙ`.
    pub fn random_word<R: Rng>(
        &self,
        source: GroupoidObject,
        len: usize,
        rng: &mut R,
    ) -> GroupoidMorphism {
        let group = symmetric_group(self.n);
        let mut word = Vec::with_capacity(len);
        let mut at = source;
        for _ in 0..len {
            let g = match at {
                GroupoidObject::Wall(a) if rng.gen_bool(0.5) => Generator::Reflection(a),
                _ => Generator::WeylElement(group[rng.gen_range(0..group.len())].clone()),
            };
            at = g.target(at).expect("chosen to be defined");
            word.push(g);
        }
        GroupoidMorphism::new(self.n, source, word).expect("composable by construction")
    }
}

/// `r_α ∘ r_{-α}` is the identity at `[-α]`, pointwise and after
/// normalization.
pub fn check_reflection_inverse(n: usize, a: Root, point: &[Rational]) -> bool {
    let word = vec![Generator::Reflection(a.negate()), Generator::Reflection(a)];
    let m = GroupoidMorphism::new(n, GroupoidObject::Wall(a.negate()), word)
        .expect("composable");
    m.normalize().is_identity() && m.apply(point) == point
}

/// `(uw)_α = u_{wα} ∘ w_α` as affine maps at a point of `Π_α`.
pub fn check_weyl_composition(
    n: usize,
    a: Root,
    u: &Permutation,
    w: &Permutation,
    point: &[Rational],
) -> bool {
    let obj = GroupoidObject::Wall(a);
    let two = GroupoidMorphism::new(
        n,
        obj,
        vec![Generator::WeylElement(w.clone()), Generator::WeylElement(u.clone())],
    )
    .expect("composable");
    let one = GroupoidMorphism::new(n, obj, vec![Generator::WeylElement(u.compose(w))])
        .expect("composable");
    two.target() == one.target() && two.apply(point) == one.apply(point)
}

/// The square `r_{wα} ∘ w_α = w_{-α} ∘ r_α : [α] → [-wα]`.
pub fn check_reflection_exchange(n: usize, a: Root, w: &Permutation, point: &[Rational]) -> bool {
    let obj = GroupoidObject::Wall(a);
    let left = GroupoidMorphism::new(
        n,
        obj,
        vec![Generator::WeylElement(w.clone()), Generator::Reflection(a.act(w))],
    )
    .expect("composable");
    let right = GroupoidMorphism::new(
        n,
        obj,
        vec![Generator::Reflection(a), Generator::WeylElement(w.clone())],
    )
    .expect("composable");
    left.target() == right.target() && left.apply(point) == right.apply(point)
}

/// Functoriality at a point: normalizing changes neither endpoint nor the
/// induced map, and every prefix keeps the point on the matching wall.
pub fn check_functoriality(m: &GroupoidMorphism, point: &[Rational]) -> bool {
    let norm = m.normalize();
    let mut at = m.source();
    let mut x = point.to_vec();
    for g in m.word() {
        at = g.target(at).expect("composable");
        x = match g {
            Generator::Reflection(a) => translate(&x, *a),
            Generator::WeylElement(w) => w.permute(&x),
        };
        if !AffineRealization::of(at).contains(&x) {
            return false;
        }
    }
    norm.source() == m.source()
        && norm.target() == m.target()
        && x == m.apply(point)
        && norm.apply(point) == x
}

/// `f` restricted to `Π_α`: `x_i = t, x_j = -t`, with `t` as the first
/// variable of the result.
pub fn wall_restrict(f: &LaurentPoly, a: Root) -> Result<LaurentPoly> {
    f.wall_substitute(a.i, a.j)
}

/// The translation along a wall acting on a restriction `g(t, …)`: the
/// `t^d` component gains the factor `c^d`. The result has `c` prepended
/// as a new first variable.
pub fn translate_action(g: &LaurentPoly) -> LaurentPoly {
    let terms = g
        .terms()
        .map(|(e, c)| (e.prepend(e.get(0)), c.clone()))
        .collect_vec();
    LaurentPoly::make(terms, g.nvars() + 1).expect("lengths agree")
}

/// Fixed by the translation: the action only introduces `c^0`.
pub fn is_translation_fixed(g: &LaurentPoly) -> bool {
    translate_action(g) == g.prepend_variable()
}

/// Invariance under the whole groupoid, with a diagnostic.
pub fn groupoid_verdict(f: &LaurentPoly) -> Result<Verdict> {
    if !f.is_integral() {
        return Err(Error::FractionalExponents);
    }
    if let Some(r) = symmetry_defect(f) {
        return Ok(Verdict::no(r));
    }
    for p in (0..f.nvars()).permutations(2) {
        let a = Root { i: p[0], j: p[1] };
        let g = wall_restrict(f, a)?;
        if !is_translation_fixed(&g) {
            let d = g.terms().rev().find(|(e, _)| !e.get(0).is_zero()).map(|(e, _)| e.get(0));
            return Ok(Verdict::no(format!(
                "translation along wall ({},{}) scales the t^{} part",
                a.i + 1,
                a.j + 1,
                d.expect("some t-degree is nonzero")
            )));
        }
    }
    Ok(Verdict::yes())
}

pub fn is_groupoid_invariant(f: &LaurentPoly) -> Result<bool> {
    Ok(groupoid_verdict(f)?.member)
}
