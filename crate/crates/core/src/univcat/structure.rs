//! Targets for evaluating constraint words: a strict group-valued model of a (half-)balanced
//! braided monoidal category in which hom sets of objects of size `n` sit in one group.

use crate::braid::{braid_eq, braiding_block, full_twist, half_twist, juxtapose, BraidWord};
use crate::error::{Error, Result};
use crate::exactalg::Rational;

pub trait Structure {
    type Elem: Clone + std::fmt::Debug;

    fn identity(&self, n: usize) -> Self::Elem;
    /// `g o f` (apply `f` first).
    fn compose(&self, g: &Self::Elem, f: &Self::Elem) -> Result<Self::Elem>;
    fn inverse(&self, e: &Self::Elem) -> Self::Elem;
    /// `id_left (x) e (x) id_right` where `e` lives on `n` strands.
    fn whisker(&self, left: usize, e: &Self::Elem, n: usize, right: usize) -> Result<Self::Elem>;
    /// `a (x) b` for `a` on `na` and `b` on `nb` strands.
    fn tensor(&self, a: &Self::Elem, na: usize, b: &Self::Elem, nb: usize) -> Result<Self::Elem> {
        let l = self.whisker(0, a, na, nb)?;
        let r = self.whisker(na, b, nb, 0)?;
        self.compose(&l, &r)
    }
    fn equal(&self, a: &Self::Elem, b: &Self::Elem) -> Result<bool>;
    /// Rational power of an element (integers at least; pure elements for non-integers).
    fn power(&self, e: &Self::Elem, k: &Rational) -> Result<Self::Elem>;

    /// `beta_{X,Y}` with `|X| = n`, `|Y| = m`.
    fn beta(&self, n: usize, m: usize) -> Result<Self::Elem>;
    /// `a_{X,Y,Z}: (XY)Z -> X(YZ)`.
    fn assoc(&self, a: usize, b: usize, c: usize) -> Result<Self::Elem>;
    /// Balancing `theta_X`.
    fn theta(&self, n: usize) -> Result<Self::Elem>;
    /// Half-balancing `a_X: X -> X*`.
    fn hbal(&self, n: usize) -> Result<Self::Elem>;

    fn compose_all(&self, n: usize, factors: &[Self::Elem]) -> Result<Self::Elem> {
        // factors listed in composition order: factors[0] o factors[1] o ...
        let mut out = self.identity(n);
        for f in factors {
            out = self.compose(&out, f)?;
        }
        Ok(out)
    }
}

/// The universal category of parenthesized braids: every morphism is a braid, associators are trivial.
#[derive(Clone, Copy, Debug, Default)]
pub struct BraidStructure;

impl Structure for BraidStructure {
    type Elem = BraidWord;

    fn identity(&self, n: usize) -> BraidWord {
        BraidWord::identity(n)
    }

    fn compose(&self, g: &BraidWord, f: &BraidWord) -> Result<BraidWord> {
        g.mul(f)
    }

    fn inverse(&self, e: &BraidWord) -> BraidWord {
        e.inv()
    }

    fn whisker(&self, left: usize, e: &BraidWord, n: usize, right: usize) -> Result<BraidWord> {
        if e.strands() != n.max(1) {
            return Err(Error::Dimension(format!("braid on {} strands whiskered as {n}", e.strands())));
        }
        e.shifted(left, (left + n + right).max(1))
    }

    fn equal(&self, a: &BraidWord, b: &BraidWord) -> Result<bool> {
        braid_eq(a, b)
    }

    fn power(&self, e: &BraidWord, k: &Rational) -> Result<BraidWord> {
        let k = k.to_i64().ok_or_else(|| Error::Invalid("non-integer power of a braid".into()))?;
        Ok(e.pow(k))
    }

    fn beta(&self, n: usize, m: usize) -> Result<BraidWord> {
        Ok(braiding_block(n, m))
    }

    fn assoc(&self, a: usize, b: usize, c: usize) -> Result<BraidWord> {
        Ok(BraidWord::identity(a + b + c))
    }

    fn theta(&self, n: usize) -> Result<BraidWord> {
        Ok(full_twist(n.max(1)))
    }

    fn hbal(&self, n: usize) -> Result<BraidWord> {
        Ok(half_twist(n.max(1)))
    }

    fn tensor(&self, a: &BraidWord, na: usize, b: &BraidWord, nb: usize) -> Result<BraidWord> {
        match (na, nb) {
            (0, _) => Ok(b.clone()),
            (_, 0) => Ok(a.clone()),
            _ => Ok(juxtapose(a, b)),
        }
    }
}
