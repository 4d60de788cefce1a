//! Permutations of `{0, …, n-1}` and the symmetric group `S_n`.
//!
//! A permutation `w` acts on monomials by sending the variable `x_i` to
//! `x_{w(i)}`, so that `(w ∘ v)·f = w·(v·f)`.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Build from the image list `[w(0), …, w(n-1)]`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(n));
            }
            seen[i] = true;
        }
        Ok(Permutation(images))
    }

    /// The transposition swapping `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        Permutation(images)
    }

    /// Cycle `c[0] -> c[1] -> … -> c[0]`.
    pub fn cycle(n: usize, c: &[usize]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for (k, &from) in c.iter().enumerate() {
            let to = c[(k + 1) % c.len()];
            if from >= n || to >= n {
                return Err(Error::InvalidPermutation(n));
            }
            images[from] = to;
        }
        Permutation::from_images(images)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &w)| i == w)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &w) in self.0.iter().enumerate() {
            inv[w] = i;
        }
        Permutation(inv)
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    /// `(-1)^{l(w)}`
    pub fn sign(&self) -> i32 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Apply to a vector of values: entry `i` moves to position `w(i)`.
    pub fn permute<T: Clone>(&self, v: &[T]) -> Vec<T> {
        let mut out = v.to_vec();
        for (i, x) in v.iter().enumerate() {
            out[self.0[i]] = x.clone();
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().map(|i| i + 1).join(" "))
    }
}

/// All of `S_n` in lexicographic order of image lists.
pub fn symmetric_group(n: usize) -> Vec<Permutation> {
    if n == 0 {
        return vec![Permutation(vec![])];
    }
    (0..n).permutations(n).map(Permutation).collect()
}

/// Minimal length representatives of the left cosets `w S_λ`, where `S_λ`
/// is the stabilizer of `values` under position permutation.
///
/// `w` is minimal in its coset iff it is increasing on every block of
/// positions carrying equal values.
pub fn minimal_coset_reps<T: PartialEq>(values: &[T]) -> Vec<Permutation> {
    let n = values.len();
    symmetric_group(n)
        .into_iter()
        .filter(|w| {
            (0..n).all(|i| (i + 1..n).all(|j| values[i] != values[j] || w.apply(i) < w.apply(j)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_order_and_signs() {
        let s4 = symmetric_group(4);
        assert_eq!(s4.len(), 24);
        assert_eq!(s4.iter().filter(|w| w.sign() == 1).count(), 12);
        assert_eq!(symmetric_group(0).len(), 1);
    }

    #[test]
    fn compose_and_inverse() {
        let a = Permutation::cycle(3, &[0, 1, 2]).unwrap();
        let b = Permutation::transposition(3, 0, 1);
        assert_eq!(a.compose(&b).apply(0), a.apply(b.apply(0)));
        assert!(a.compose(&a.inverse()).is_identity());
        assert_eq!(a.length(), 2);
    }

    #[test]
    fn coset_rep_counts() {
        assert_eq!(minimal_coset_reps(&[1, 0]).len(), 2);
        assert_eq!(minimal_coset_reps(&[0, 0]).len(), 1);
        assert_eq!(minimal_coset_reps(&[2, 0, 0]).len(), 3);
        assert_eq!(minimal_coset_reps(&[3, 1, 0, 0]).len(), 12);
        // each representative is the shortest element of its coset
        let reps = minimal_coset_reps(&[2, 0, 0]);
        for w in &reps {
            let other = w.compose(&Permutation::transposition(3, 1, 2));
            assert!(w.length() < other.length());
        }
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![0, 2]).is_err());
    }
}
