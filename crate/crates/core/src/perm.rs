//! Permutations of `{1..n}` stored 0-based.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `images[i] = p(i)`; composition `p.compose(q) = p o q` applies `q` first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::Invalid(format!("not a permutation: {images:?}")));
            }
            seen[i] = true;
        }
        Ok(Perm(images))
    }

    /// From 1-based images.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::Invalid("0 in 1-based permutation".into()));
        }
        Self::from_images(images.iter().map(|&i| i - 1).collect())
    }

    /// Transposition `(i, i+1)`, `i` 1-based.
    pub fn simple(n: usize, i: usize) -> Self {
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(i - 1, i);
        Perm(v)
    }

    /// `i -> i+1 mod n`.
    pub fn cycle(n: usize) -> Self {
        Perm((0..n).map(|i| (i + 1) % n).collect())
    }

    /// `i -> n+1-i`.
    pub fn reversal(n: usize) -> Self {
        Perm((0..n).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn compose(&self, q: &Perm) -> Perm {
        assert_eq!(self.len(), q.len(), "permutation sizes differ");
        Perm(q.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0; self.len()];
        for (i, &j) in self.0.iter().enumerate() {
            v[j] = i;
        }
        Perm(v)
    }

    /// Block sum: `self` on the first strands, `q` shifted after them.
    pub fn juxtapose(&self, q: &Perm) -> Perm {
        let n = self.len();
        Perm(self.0.iter().copied().chain(q.0.iter().map(|&i| i + n)).collect())
    }

    /// Block permutation moving the first `n` positions past the next `m`.
    pub fn block_swap(n: usize, m: usize) -> Perm {
        Perm((0..n).map(|i| i + m).chain(0..m).collect())
    }

    /// Permutes a vector of positions: `(p . v)[p(i)] = v[i]`.
    pub fn act_vec<T: Clone>(&self, v: &[T]) -> Vec<T> {
        let mut out = v.to_vec();
        for (i, x) in v.iter().enumerate() {
            out[self.0[i]] = x.clone();
        }
        out
    }

    /// Relabels a sequence along the permutation: the result `r` satisfies `r o p = s`, i.e. `r[p(i)] = s[i]`.
    pub fn push_seq<T: Clone>(&self, s: &[T]) -> Vec<T> {
        self.act_vec(s)
    }

    /// All permutations of `n` in lexicographic order of image vectors.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Perm(cur.clone()));
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("exists");
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "]")
    }
}
