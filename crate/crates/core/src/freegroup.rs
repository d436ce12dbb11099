//! Reduced words in free groups and the Artin action of braid groups.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// Freely reduced word in the free group on `x_1..x_rank`, stored as runs `(generator, exponent)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeWord {
    rank: usize,
    runs: Vec<(usize, i64)>,
}

impl FreeWord {
    pub fn identity(rank: usize) -> Self {
        FreeWord { rank, runs: Vec::new() }
    }

    pub fn gen(rank: usize, i: usize) -> Result<Self> {
        Self::from_runs(rank, &[(i, 1)])
    }

    /// Reduces an arbitrary letter sequence; exponents may be any integers.
    pub fn from_runs(rank: usize, letters: &[(usize, i64)]) -> Result<Self> {
        let mut w = FreeWord::identity(rank);
        for &(g, e) in letters {
            if g == 0 || g > rank {
                return Err(Error::Index(format!("generator x{g} in rank {rank}")));
            }
            w.push(g, e);
        }
        Ok(w)
    }

    /// `fw_reduce` on a sequence of signed unit letters.
    pub fn reduce(rank: usize, letters: &[(usize, i64)]) -> Result<Self> {
        if let Some(&(_, e)) = letters.iter().find(|l| l.1.abs() != 1) {
            return Err(Error::Invalid(format!("letter exponent {e}")));
        }
        Self::from_runs(rank, letters)
    }

    fn push(&mut self, g: usize, e: i64) {
        if e == 0 {
            return;
        }
        if let Some(last) = self.runs.last_mut() {
            if last.0 == g {
                last.1 += e;
                if last.1 == 0 {
                    self.runs.pop();
                }
                return;
            }
        }
        self.runs.push((g, e));
    }

    fn append(&mut self, other: &FreeWord) {
        for &(g, e) in &other.runs {
            self.push(g, e);
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn runs(&self) -> &[(usize, i64)] {
        &self.runs
    }

    pub fn is_identity(&self) -> bool {
        self.runs.is_empty()
    }

    /// Number of unit letters.
    pub fn len(&self) -> usize {
        self.runs.iter().map(|r| r.1.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Expanded unit letters `(i, ±1)`.
    pub fn letters(&self) -> Vec<(usize, i64)> {
        self.runs
            .iter()
            .flat_map(|&(g, e)| std::iter::repeat_n((g, e.signum()), e.unsigned_abs() as usize))
            .collect()
    }

    fn check_rank(&self, other: &FreeWord) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::Dimension(format!("free group ranks {} and {}", self.rank, other.rank)));
        }
        Ok(())
    }

    pub fn mul(&self, other: &FreeWord) -> Result<FreeWord> {
        self.check_rank(other)?;
        let mut w = self.clone();
        w.append(other);
        Ok(w)
    }

    pub fn inv(&self) -> FreeWord {
        FreeWord { rank: self.rank, runs: self.runs.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    pub fn pow(&self, k: i64) -> FreeWord {
        let base = if k < 0 { self.inv() } else { self.clone() };
        let mut w = FreeWord::identity(self.rank);
        for _ in 0..k.unsigned_abs() {
            w.append(&base);
        }
        w
    }

    /// Exponent sum of each generator (abelianization).
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut v = vec![0; self.rank];
        for &(g, e) in &self.runs {
            v[g - 1] += e;
        }
        v
    }

    /// Applies the homomorphism `x_i -> images[i-1]`.
    pub fn substitute(&self, images: &[FreeWord]) -> Result<FreeWord> {
        if images.len() != self.rank {
            return Err(Error::Dimension(format!("{} images for rank {}", images.len(), self.rank)));
        }
        let target = images.first().map_or(0, |w| w.rank);
        if images.iter().any(|w| w.rank != target) {
            return Err(Error::Dimension("images of different ranks".into()));
        }
        let invs: Vec<FreeWord> = images.iter().map(|w| w.inv()).collect();
        let mut out = FreeWord::identity(target);
        for &(g, e) in &self.runs {
            let piece = if e > 0 { &images[g - 1] } else { &invs[g - 1] };
            for _ in 0..e.unsigned_abs() {
                out.append(piece);
            }
        }
        Ok(out)
    }
}

pub fn fw_reduce(rank: usize, letters: &[(usize, i64)]) -> Result<FreeWord> {
    FreeWord::reduce(rank, letters)
}

pub fn fw_mul(a: &FreeWord, b: &FreeWord) -> Result<FreeWord> {
    a.mul(b)
}

pub fn fw_inv(a: &FreeWord) -> FreeWord {
    a.inv()
}

pub fn fw_substitute(w: &FreeWord, images: &[FreeWord]) -> Result<FreeWord> {
    w.substitute(images)
}

/// Images of `x_1..x_n` under the Artin automorphism of `b`.
///
/// `artin_act(b1 b2, w) = artin_act(b2, artin_act(b1, w))`, so the automorphism of the
/// word `l_1 .. l_k` is `phi_k o .. o phi_1`; images are accumulated from the right end.
pub fn artin_images(b: &BraidWord) -> Vec<FreeWord> {
    let n = b.strands();
    let mut img: Vec<FreeWord> = (1..=n).map(|i| FreeWord::gen(n, i).expect("in range")).collect();
    for &(i, e) in b.letters().iter().rev() {
        let (a, c) = (img[i - 1].clone(), img[i].clone());
        if e > 0 {
            // x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
            let mut w = a.clone();
            w.append(&c);
            w.append(&a.inv());
            img[i - 1] = w;
            img[i] = a;
        } else {
            // x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
            let mut w = c.inv();
            w.append(&a);
            w.append(&c);
            img[i - 1] = c;
            img[i] = w;
        }
    }
    img
}

pub fn artin_act(b: &BraidWord, w: &FreeWord) -> Result<FreeWord> {
    if b.strands() != w.rank() {
        return Err(Error::Dimension(format!("{} strands acting on rank {}", b.strands(), w.rank())));
    }
    w.substitute(&artin_images(b))
}

#[derive(Serialize, Deserialize)]
struct FreeWordJson {
    rank: usize,
    letters: Vec<(usize, i64)>,
}

impl Serialize for FreeWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FreeWordJson { rank: self.rank, letters: self.letters() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FreeWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = FreeWordJson::deserialize(d)?;
        FreeWord::reduce(j.rank, &j.letters).map_err(serde::de::Error::custom)
    }
}
