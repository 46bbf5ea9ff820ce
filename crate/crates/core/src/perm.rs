use std::fmt;

use crate::error::{input_err, Result};

/// A permutation of `{0, .., m-1}` stored as its image table.
///
/// Cover matchings are permutations: the matching of a graph edge pairs
/// index `j` of the lower endpoint's list with index `apply(j)` of the
/// higher endpoint's list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(m: usize) -> Perm {
        Perm((0..m).collect())
    }

    /// Cyclic shift `j -> (j + shift) mod m`.
    pub fn rotation(m: usize, shift: usize) -> Perm {
        Perm((0..m).map(|j| (j + shift) % m).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Perm> {
        let m = images.len();
        if m == 0 {
            return input_err("permutation must act on at least one point");
        }
        let mut seen = vec![false; m];
        for &x in &images {
            if x >= m {
                return input_err(format!("permutation image {x} out of range for size {m}"));
            }
            if seen[x] {
                return input_err(format!("permutation repeats image {x}"));
            }
            seen[x] = true;
        }
        Ok(Perm(images))
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, j: usize) -> usize {
        self.0[j]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Perm(inv)
    }

    /// Composition `self ∘ inner`: apply `inner` first, then `self`.
    pub fn compose(&self, inner: &Perm) -> Perm {
        debug_assert_eq!(self.size(), inner.size());
        Perm(inner.0.iter().map(|&x| self.0[x]).collect())
    }

    /// Lexicographic rank of the image table among all permutations of the
    /// same size (0-based Lehmer code).
    pub fn rank(&self) -> u64 {
        let m = self.0.len();
        let mut rank: u64 = 0;
        for i in 0..m {
            let smaller = self.0[i + 1..].iter().filter(|&&x| x < self.0[i]).count() as u64;
            rank = rank * (m - i) as u64 + smaller;
        }
        rank
    }

    /// Inverse of [`Perm::rank`]: the `rank`-th permutation of size `m` in
    /// lexicographic order.
    pub fn from_rank(m: usize, mut rank: u64) -> Perm {
        let mut radix: Vec<u64> = vec![1; m];
        for i in (0..m.saturating_sub(1)).rev() {
            radix[i] = radix[i + 1] * (m - i - 1) as u64;
        }
        let mut pool: Vec<usize> = (0..m).collect();
        let mut images = Vec::with_capacity(m);
        for r in radix {
            let idx = (rank / r) as usize;
            rank %= r;
            images.push(pool.remove(idx));
        }
        Perm(images)
    }
}

pub fn factorial(m: usize) -> u64 {
    (1..=m as u64).product()
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.0)
    }
}
