//! The action of GT on braided structures, the endofunctors `i_(lambda,f)` of `PaB_S`, and the induced
//! `j_(lambda,f)` on `PaDih_S` and on the Teichmuller groupoids.

use std::collections::HashMap;

use super::element::{eval_word, pro_f, GtElement};
use crate::assoc::{Associator, GradedMorphism, PacdStructure};
use crate::braid::BraidWord;
use crate::catcore::CatMorphism;
use crate::error::{Error, Result};
use crate::exactalg::Rational;
use crate::liealg::GroupLike;
use crate::univcat::{decompose_to_constraints, eval_constraints, BraidStructure, ParenTree, Structure, TeichObject, UMorphism, UObject};

/// Structures in which `f(u, v)` can be evaluated.
pub trait EvalF: Structure {
    /// `f(u, v)` for automorphisms `u, v` of an object of size `n`.
    fn eval_f(&self, e: &GtElement, n: usize, u: &Self::Elem, v: &Self::Elem) -> Result<Self::Elem>;
}

fn word_in<S: Structure>(s: &S, e: &GtElement, n: usize, u: &S::Elem, v: &S::Elem) -> Result<S::Elem> {
    let GtElement::Discrete { f, .. } = e else {
        return Err(Error::Invalid("expected a discrete element".into()));
    };
    eval_word(f, s.identity(n), u, v, &|a, b| s.compose(a, b), &|a| s.inverse(a))
}

impl EvalF for BraidStructure {
    fn eval_f(&self, e: &GtElement, n: usize, u: &BraidWord, v: &BraidWord) -> Result<BraidWord> {
        match e {
            GtElement::Discrete { .. } => word_in(self, e, n, u, v),
            GtElement::Pro { .. } => Err(Error::Invalid("pro-unipotent elements act on PaB through PaCD; pass an associator".into())),
        }
    }
}

impl EvalF for PacdStructure {
    fn eval_f(&self, e: &GtElement, n: usize, u: &GroupLike, v: &GroupLike) -> Result<GroupLike> {
        match e {
            GtElement::Discrete { .. } => word_in(self, e, n, u, v),
            GtElement::Pro { degree, log_f, .. } => pro_f(log_f, *degree, u, v),
        }
    }
}

/// `(lambda, f) * C`: `beta' = beta (beta_YX beta_XY)^m`,
/// `a' = a f(beta_YX beta_XY (x) id_Z, a^{-1} (id_X (x) beta_ZY beta_YZ) a)`, `theta' = theta^lambda`,
/// `a'_X = (a_X* a_X)^m a_X`.
#[derive(Clone, Debug)]
pub struct GtStructure<S> {
    pub e: GtElement,
    pub inner: S,
}

impl<S> GtStructure<S> {
    pub fn new(e: GtElement, inner: S) -> Self {
        GtStructure { e, inner }
    }
}

impl<S: EvalF> GtStructure<S> {
    /// `a_X (a_X* a_X)^m`, the second expression for the transformed half-balancing.
    pub fn hbal_alt(&self, n: usize) -> Result<S::Elem> {
        let h = self.inner.hbal(n)?;
        let hh = self.inner.compose(&h, &h)?;
        self.inner.compose(&h, &self.inner.power(&hh, &self.e.m())?)
    }
}

impl<S: EvalF> Structure for GtStructure<S> {
    type Elem = S::Elem;

    fn identity(&self, n: usize) -> S::Elem {
        self.inner.identity(n)
    }
    fn compose(&self, g: &S::Elem, f: &S::Elem) -> Result<S::Elem> {
        self.inner.compose(g, f)
    }
    fn inverse(&self, e: &S::Elem) -> S::Elem {
        self.inner.inverse(e)
    }
    fn whisker(&self, left: usize, e: &S::Elem, n: usize, right: usize) -> Result<S::Elem> {
        self.inner.whisker(left, e, n, right)
    }
    fn equal(&self, a: &S::Elem, b: &S::Elem) -> Result<bool> {
        self.inner.equal(a, b)
    }
    fn power(&self, e: &S::Elem, k: &Rational) -> Result<S::Elem> {
        self.inner.power(e, k)
    }

    fn beta(&self, n: usize, m: usize) -> Result<S::Elem> {
        let s = &self.inner;
        let b = s.beta(n, m)?;
        let double = s.compose(&s.beta(m, n)?, &b)?;
        s.compose(&b, &s.power(&double, &self.e.m())?)
    }

    fn assoc(&self, x: usize, y: usize, z: usize) -> Result<S::Elem> {
        let s = &self.inner;
        let n = x + y + z;
        let a = s.assoc(x, y, z)?;
        let u = s.whisker(0, &s.compose(&s.beta(y, x)?, &s.beta(x, y)?)?, x + y, z)?;
        let w = s.whisker(x, &s.compose(&s.beta(z, y)?, &s.beta(y, z)?)?, y + z, 0)?;
        let v = s.compose(&s.inverse(&a), &s.compose(&w, &a)?)?;
        s.compose(&a, &s.eval_f(&self.e, n, &u, &v)?)
    }

    fn theta(&self, n: usize) -> Result<S::Elem> {
        self.inner.power(&self.inner.theta(n)?, &self.e.lambda())
    }

    fn hbal(&self, n: usize) -> Result<S::Elem> {
        let h = self.inner.hbal(n)?;
        let hh = self.inner.compose(&h, &h)?;
        self.inner.compose(&self.inner.power(&hh, &self.e.m())?, &h)
    }
}

impl<S: EvalF> EvalF for GtStructure<S> {
    fn eval_f(&self, e: &GtElement, n: usize, u: &S::Elem, v: &S::Elem) -> Result<S::Elem> {
        self.inner.eval_f(e, n, u, v)
    }
}

/// Evaluation of the parenthesized braid `b: src -> tgt` in a structure, through the right comb with
/// the images of the generators computed once.
pub fn eval_between<S: Structure>(s: &S, src: &ParenTree, tgt: &ParenTree, b: &BraidWord) -> Result<S::Elem> {
    let n = src.leaves();
    if tgt.leaves() != n || b.strands() != n.max(1) {
        return Err(Error::Dimension(format!("braid on {} strands between trees with {n} and {} leaves", b.strands(), tgt.leaves())));
    }
    let comb = ParenTree::right_comb(n);
    let into = eval_constraints(&decompose_to_constraints(&BraidWord::identity(n), src, &comb)?, s)?;
    let mut acc = eval_constraints(&decompose_to_constraints(&BraidWord::identity(n), &comb, tgt)?, s)?;
    let mut cache: HashMap<(usize, bool), S::Elem> = HashMap::new();
    for &(i, e) in b.letters() {
        let key = (i, e > 0);
        if !cache.contains_key(&key) {
            let pos = eval_constraints(&decompose_to_constraints(&BraidWord::sigma(n, i, 1)?, &comb, &comb)?, s)?;
            let neg = s.inverse(&pos);
            cache.insert((i, true), pos);
            cache.insert((i, false), neg);
        }
        acc = s.compose(&acc, &cache[&key])?;
    }
    s.compose(&acc, &into)
}

fn trees(m: &UMorphism) -> Result<(ParenTree, ParenTree)> {
    match (&m.source, &m.target) {
        (UObject::PaB { tree: s, .. }, UObject::PaB { tree: t, .. }) => Ok((s.clone(), t.clone())),
        (UObject::B { .. }, UObject::B { .. }) => {
            let n = m.source.len();
            Ok((ParenTree::right_comb(n), ParenTree::right_comb(n)))
        }
        (UObject::PaDih { tree: Some(s), .. }, UObject::PaDih { tree: Some(t), .. }) => Ok((s.rooted(), t.rooted())),
        _ => Err(Error::Invalid(format!("no parenthesized representative for a {} morphism", m.kind()))),
    }
}

/// `i_e(m)` for a discrete element and a morphism of `PaB_S` (or `B_S`, through right combs).
pub fn i_endofunctor(e: &GtElement, m: &UMorphism) -> Result<UMorphism> {
    if m.source.is_empty() {
        return Ok(m.clone());
    }
    let (s, t) = trees(m)?;
    let b = eval_between(&GtStructure::new(e.clone(), BraidStructure), &s, &t, &m.elem)?;
    UMorphism::new(m.source.clone(), m.target.clone(), b)
}

/// `j_Phi(i_e(m))`: the action of a (pro or discrete) element on `PaB_S`, realized in `PaCD^Phi_S`.
pub fn i_endofunctor_graded(e: &GtElement, m: &UMorphism, a: &Associator) -> Result<GradedMorphism> {
    let (s, t) = trees(m)?;
    if m.source.kind() != crate::univcat::CatKind::PaB {
        return Err(Error::Invalid("expected a PaB morphism".into()));
    }
    let x = eval_between(&GtStructure::new(e.clone(), a.structure()), &s, &t, &m.elem)?;
    GradedMorphism::new(m.source.clone(), m.target.clone(), x)
}

/// `j_e(m)` on a morphism of `PaDih_S` between objects with planar trees (discrete elements).
pub fn j_on_padih(e: &GtElement, m: &UMorphism) -> Result<UMorphism> {
    let (s, t) = trees(m)?;
    let b = eval_between(&GtStructure::new(e.clone(), BraidStructure), &s, &t, &m.elem)?;
    UMorphism::new(m.source.clone(), m.target.clone(), b)
}

/// `k_Phi(j_e(m))` for a morphism of `PaDih_S`: the action of any element, read in `PaDih^gr_S`.
pub fn j_on_padih_graded(e: &GtElement, m: &UMorphism, a: &Associator) -> Result<GradedMorphism> {
    if m.source.len() < 3 {
        return Err(Error::Invalid("PaDih^gr is realized for n >= 3".into()));
    }
    let (s, t) = trees(m)?;
    let x = eval_between(&GtStructure::new(e.clone(), a.structure()), &s, &t, &m.elem)?;
    GradedMorphism::new(m.source.clone(), m.target.clone(), x.project()?)
}

/// The action on a morphism of `T_{0,S}` (discrete elements).
pub fn teich_act(e: &GtElement, m: &CatMorphism<TeichObject, BraidWord>) -> Result<CatMorphism<TeichObject, BraidWord>> {
    let b = eval_between(&GtStructure::new(e.clone(), BraidStructure), &m.source.0.rooted(), &m.target.0.rooted(), &m.elem)?;
    Ok(CatMorphism::new(m.source.clone(), m.target.clone(), b))
}

/// The action on `T_{0,S}(Q)^{<=N}`, evaluated on the image of a morphism of `T_{0,S}`.
pub fn teich_act_graded(e: &GtElement, m: &CatMorphism<TeichObject, BraidWord>, a: &Associator) -> Result<CatMorphism<TeichObject, GroupLike>> {
    let s = GtStructure::new(e.clone(), a.structure());
    let x = eval_between(&s, &m.source.0.rooted(), &m.target.0.rooted(), &m.elem)?;
    Ok(CatMorphism::new(m.source.clone(), m.target.clone(), x.project()?))
}

/// `e * (mu, Phi)`: the associator read off the transformed structure, `mu' = lambda mu`.
pub fn gt_act_on_associator(e: &GtElement, a: &Associator) -> Result<Associator> {
    let s = GtStructure::new(e.clone(), a.structure());
    let mu = &e.lambda() * &a.mu;
    let beta = s.beta(1, 1)?;
    let expected = PacdStructure::trivial(a.degree, mu.clone()).beta(1, 1)?;
    if beta != expected {
        return Err(Error::Law("transformed braiding is not of the form c exp(mu t12 / 2)".into()));
    }
    let phi = s.assoc(1, 1, 1)?;
    Associator::new(a.degree, mu, super::grt::f2_coords(&phi.log_element())?)
}
