//! Braid words, distinguished braids, exact equality in `B_n` and `B_n/Z_n`, framed braids.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::freegroup::artin_images;
use crate::perm::Perm;

/// Word in the Artin generators `sigma_i^{+-1}`, `1 <= i < strands`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<(usize, i64)>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<(usize, i64)>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Invalid("braid on zero strands".into()));
        }
        for &(i, e) in &letters {
            if i == 0 || i >= strands {
                return Err(Error::Index(format!("sigma_{i} on {strands} strands")));
            }
            if e.abs() != 1 {
                return Err(Error::Invalid(format!("letter exponent {e}")));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord { strands: strands.max(1), letters: Vec::new() }
    }

    pub fn sigma(strands: usize, i: usize, e: i64) -> Result<Self> {
        Self::new(strands, vec![(i, e)])
    }

    /// Product of `sigma_i` for `i` in the given order (all positive).
    pub fn from_indices(strands: usize, idx: &[usize]) -> Result<Self> {
        Self::new(strands, idx.iter().map(|&i| (i, 1)).collect())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[(usize, i64)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn check(&self, other: &BraidWord) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::Dimension(format!("braids on {} and {} strands", self.strands, other.strands)));
        }
        Ok(())
    }

    /// Product `self * other` (composition `self o other`: `other` first).
    pub fn mul(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn inv(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|&(i, e)| (i, -e)).collect() }
    }

    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.inv() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// Cancels adjacent inverse pairs (cosmetic; equality never depends on it).
    pub fn freely_reduced(&self) -> BraidWord {
        let mut out: Vec<(usize, i64)> = Vec::new();
        for &l in &self.letters {
            if out.last().is_some_and(|&(i, e)| i == l.0 && e == -l.1) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord { strands: self.strands, letters: out }
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.1).sum()
    }

    pub fn perm(&self) -> Perm {
        perm_image(self)
    }

    /// Embeds into more strands (extra strands on the right).
    pub fn widen(&self, strands: usize) -> Result<BraidWord> {
        if strands < self.strands {
            return Err(Error::Dimension("cannot narrow a braid".into()));
        }
        Ok(BraidWord { strands, letters: self.letters.clone() })
    }

    /// Shifts all letters by `k` strands into a braid on `strands` strands.
    pub fn shifted(&self, k: usize, strands: usize) -> Result<BraidWord> {
        if self.strands + k > strands {
            return Err(Error::Dimension("shift out of range".into()));
        }
        Ok(BraidWord { strands, letters: self.letters.iter().map(|&(i, e)| (i + k, e)).collect() })
    }
}

/// `B_n -> S_n`, `sigma_i -> (i, i+1)`; a word maps to the composite with its last letter applied first.
pub fn perm_image(b: &BraidWord) -> Perm {
    let mut images: Vec<usize> = (0..b.strands).collect();
    for &(i, _) in b.letters.iter().rev() {
        for x in images.iter_mut() {
            if *x == i - 1 {
                *x = i;
            } else if *x == i {
                *x = i - 1;
            }
        }
    }
    Perm::from_images(images).expect("valid permutation")
}

pub fn braid_eq(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    a.check(b)?;
    Ok(artin_images(a) == artin_images(b))
}

pub fn braid_is_identity(a: &BraidWord) -> bool {
    artin_images(a).iter().enumerate().all(|(k, w)| w.runs() == [(k + 1, 1)])
}

pub fn juxtapose(a: &BraidWord, b: &BraidWord) -> BraidWord {
    let n = a.strands;
    let mut letters = a.letters.clone();
    letters.extend(b.letters.iter().map(|&(i, e)| (i + n, e)));
    BraidWord { strands: n + b.strands, letters }
}

pub fn star_involution(b: &BraidWord) -> BraidWord {
    let n = b.strands;
    BraidWord { strands: n, letters: b.letters.iter().map(|&(i, e)| (n - i, e)).collect() }
}

/// A positive braid with the given permutation (one letter per inversion).
pub fn positive_lift(p: &Perm) -> BraidWord {
    let n = p.len().max(1);
    let mut cur = p.clone();
    let mut found = Vec::new();
    while let Some(i) = (0..cur.len().saturating_sub(1)).find(|&i| cur.apply(i) > cur.apply(i + 1)) {
        found.push((i + 1, 1));
        cur = cur.compose(&Perm::simple(cur.len(), i + 1));
    }
    found.reverse();
    BraidWord { strands: n, letters: found }
}

/// `sigma_1 .. sigma_{n-1}`.
pub fn rho(n: usize) -> BraidWord {
    BraidWord { strands: n, letters: (1..n).map(|i| (i, 1)).collect() }
}

/// `(sigma_1 .. sigma_{n-1})^n`.
pub fn full_twist(n: usize) -> BraidWord {
    rho(n).pow(n as i64)
}

/// `sigma_1 (sigma_2 sigma_1) .. (sigma_{n-1} .. sigma_1)`.
pub fn half_twist(n: usize) -> BraidWord {
    let mut letters = Vec::new();
    for k in 1..n {
        letters.extend((1..=k).rev().map(|i| (i, 1)));
    }
    BraidWord { strands: n.max(1), letters }
}

/// `sigma_1 .. sigma_{n-2} sigma_{n-1}^2 sigma_{n-2} .. sigma_1`.
pub fn sphere_relator(n: usize) -> BraidWord {
    let mut letters: Vec<(usize, i64)> = (1..n).map(|i| (i, 1)).collect();
    letters.extend((1..n).rev().map(|i| (i, 1)));
    BraidWord { strands: n, letters }
}

/// `b_{nn'} = (sigma_{n'} .. sigma_1)(sigma_{n'+1} .. sigma_2) .. (sigma_{n+n'-1} .. sigma_n)`.
pub fn braiding_block(n: usize, m: usize) -> BraidWord {
    let mut letters = Vec::new();
    if m > 0 {
        for k in 1..=n {
            letters.extend((k..m + k).rev().map(|i| (i, 1)));
        }
    }
    BraidWord { strands: (n + m).max(1), letters }
}

/// `x_{ij} = A sigma_i^2 A^{-1}` with `A = sigma_{j-1} .. sigma_{i+1}`.
pub fn pure_gen(n: usize, i: usize, j: usize) -> Result<BraidWord> {
    if !(1 <= i && i < j && j <= n) {
        return Err(Error::Index(format!("x_{{{i}{j}}} on {n} strands")));
    }
    let a = BraidWord { strands: n, letters: ((i + 1)..j).rev().map(|k| (k, 1)).collect() };
    let s2 = BraidWord { strands: n, letters: vec![(i, 1), (i, 1)] };
    a.mul(&s2)?.mul(&a.inv())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialKind {
    HalfTwist,
    FullTwist,
    Rho,
    SphereRelator,
    BraidingBlock(usize),
    PureGen(usize, usize),
}

impl SpecialKind {
    pub fn parse(kind: &str, args: &[usize]) -> Result<Self> {
        Ok(match (kind, args) {
            ("half_twist", []) => SpecialKind::HalfTwist,
            ("full_twist", []) => SpecialKind::FullTwist,
            ("rho", []) => SpecialKind::Rho,
            ("sphere_relator", []) => SpecialKind::SphereRelator,
            ("braiding_block", [m]) => SpecialKind::BraidingBlock(*m),
            ("pure_gen", [i, j]) => SpecialKind::PureGen(*i, *j),
            _ => return Err(Error::Invalid(format!("special braid `{kind}` with arguments {args:?}"))),
        })
    }
}

pub fn special(kind: SpecialKind, n: usize) -> Result<BraidWord> {
    if n == 0 {
        return Err(Error::Invalid("n must be positive".into()));
    }
    Ok(match kind {
        SpecialKind::HalfTwist => half_twist(n),
        SpecialKind::FullTwist => full_twist(n),
        SpecialKind::Rho => rho(n),
        SpecialKind::SphereRelator => sphere_relator(n),
        SpecialKind::BraidingBlock(m) => braiding_block(n, m),
        SpecialKind::PureGen(i, j) => pure_gen(n, i, j)?,
    })
}

/// Equality in `B_n / Z_n` by the exponent-sum reduction to `B_n`.
pub fn eq_mod_center(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    a.check(b)?;
    let n = a.strands as i64;
    if n < 2 {
        return Ok(true);
    }
    let d = a.mul(&b.inv())?;
    let e = d.exponent_sum();
    if e % (n * (n - 1)) != 0 {
        return Ok(false);
    }
    let k = e / (n * (n - 1));
    Ok(braid_is_identity(&d.mul(&full_twist(a.strands).pow(-k))?))
}

/// Element of `Z^n x| B_n`; `frame[k]` is the exponent of `delta_{k+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FramedBraid {
    pub frame: Vec<i64>,
    pub braid: BraidWord,
}

impl FramedBraid {
    pub fn new(frame: Vec<i64>, braid: BraidWord) -> Result<Self> {
        if frame.len() != braid.strands() {
            return Err(Error::Dimension(format!("frame of length {} on {} strands", frame.len(), braid.strands())));
        }
        Ok(FramedBraid { frame, braid })
    }

    pub fn unframed(braid: BraidWord) -> Self {
        FramedBraid { frame: vec![0; braid.strands()], braid }
    }

    pub fn identity(n: usize) -> Self {
        Self::unframed(BraidWord::identity(n))
    }

    pub fn delta(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::Index(format!("delta_{i} on {n} strands")));
        }
        let mut frame = vec![0; n];
        frame[i - 1] = 1;
        Self::new(frame, BraidWord::identity(n))
    }

    pub fn mul(&self, other: &FramedBraid) -> Result<FramedBraid> {
        let braid = self.braid.mul(&other.braid)?;
        let moved = perm_image(&self.braid).act_vec(&other.frame);
        let frame = self.frame.iter().zip(&moved).map(|(a, b)| a + b).collect();
        Ok(FramedBraid { frame, braid })
    }

    pub fn inv(&self) -> FramedBraid {
        let p = perm_image(&self.braid).inverse();
        let frame = p.act_vec(&self.frame).into_iter().map(|x| -x).collect();
        FramedBraid { frame, braid: self.braid.inv() }
    }

    pub fn eq(&self, other: &FramedBraid) -> Result<bool> {
        Ok(self.frame == other.frame && braid_eq(&self.braid, &other.braid)?)
    }
}

pub fn framed_mul(a: &FramedBraid, b: &FramedBraid) -> Result<FramedBraid> {
    a.mul(b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientKind {
    BnModZ,
    Gamma0n,
    TildeBnModZ,
    TildeGamma0n,
}

impl QuotientKind {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "Bn_mod_Z" => QuotientKind::BnModZ,
            "Gamma0n" => QuotientKind::Gamma0n,
            "tilde_Bn_mod_Z" => QuotientKind::TildeBnModZ,
            "tilde_Gamma0n" => QuotientKind::TildeGamma0n,
            _ => return Err(Error::Invalid(format!("quotient kind `{s}`"))),
        })
    }
}

pub fn quotient_relators(kind: QuotientKind, n: usize) -> Result<Vec<FramedBraid>> {
    if n < 3 {
        return Err(Error::Invalid("relators need n >= 3".into()));
    }
    let z = FramedBraid::unframed(full_twist(n));
    let sph = FramedBraid::unframed(sphere_relator(n));
    let all_delta = FramedBraid::new(vec![1; n], BraidWord::identity(n))?;
    let mut d1 = vec![0; n];
    d1[0] = 2;
    let d1sq = FramedBraid::new(d1, BraidWord::identity(n))?;
    Ok(match kind {
        QuotientKind::BnModZ => vec![z],
        QuotientKind::Gamma0n => vec![z, sph],
        QuotientKind::TildeBnModZ => vec![all_delta.mul(&z)?],
        QuotientKind::TildeGamma0n => vec![all_delta.mul(&z)?, d1sq.mul(&sph)?],
    })
}

#[derive(Serialize, Deserialize)]
struct BraidJson {
    strands: usize,
    letters: Vec<(usize, i64)>,
}

impl Serialize for BraidWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BraidJson { strands: self.strands, letters: self.letters.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BraidWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = BraidJson::deserialize(d)?;
        BraidWord::new(j.strands, j.letters).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct FramedJson {
    strands: usize,
    letters: Vec<(usize, i64)>,
    frame: Vec<i64>,
}

impl Serialize for FramedBraid {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FramedJson { strands: self.braid.strands, letters: self.braid.letters.clone(), frame: self.frame.clone() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FramedBraid {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = FramedJson::deserialize(d)?;
        let b = BraidWord::new(j.strands, j.letters).map_err(serde::de::Error::custom)?;
        FramedBraid::new(j.frame, b).map_err(serde::de::Error::custom)
    }
}
