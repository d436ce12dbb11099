//! Small categories with morphisms stored as `(source, target, element)` triples.

use std::fmt::Debug;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatMorphism<O, E> {
    pub source: O,
    pub target: O,
    pub elem: E,
}

impl<O, E> CatMorphism<O, E> {
    pub fn new(source: O, target: O, elem: E) -> Self {
        CatMorphism { source, target, elem }
    }
}

pub type Mor<C> = CatMorphism<<C as SmallCategory>::Obj, <C as SmallCategory>::Elem>;

pub trait SmallCategory {
    type Obj: Clone + Ord + Debug;
    type Elem: Clone + Debug;

    /// The enumerated object set.
    fn objects(&self) -> Vec<Self::Obj>;
    fn identity(&self, x: &Self::Obj) -> Mor<Self>;
    /// `g o f`; requires `f.target == g.source`.
    fn compose(&self, g: &Mor<Self>, f: &Mor<Self>) -> Result<Mor<Self>>;
    fn mor_eq(&self, a: &Mor<Self>, b: &Mor<Self>) -> Result<bool>;
    /// Whether the triple is a morphism of this category.
    fn is_morphism(&self, m: &Mor<Self>) -> Result<bool>;
    /// Explicit hom set, when finite and enumerable.
    fn hom_list(&self, _x: &Self::Obj, _y: &Self::Obj) -> Option<Vec<Mor<Self>>> {
        None
    }
}

pub trait Groupoid: SmallCategory {
    fn inverse(&self, m: &Mor<Self>) -> Result<Mor<Self>>;
}

pub fn check_composable<O: PartialEq + Debug, E>(g: &CatMorphism<O, E>, f: &CatMorphism<O, E>) -> Result<()> {
    if f.target != g.source {
        return Err(Error::Invalid(format!("cannot compose: target {:?} != source {:?}", f.target, g.source)));
    }
    Ok(())
}

/// Composite of a chain listed in application order.
pub fn compose_chain<C: SmallCategory>(c: &C, chain: &[Mor<C>]) -> Result<Mor<C>> {
    let mut it = chain.iter();
    let first = it.next().ok_or_else(|| Error::Invalid("empty chain".into()))?;
    let mut acc = first.clone();
    for m in it {
        acc = c.compose(m, &acc)?;
    }
    Ok(acc)
}

/// Checks identity and associativity laws on the given morphisms; returns the first failure.
pub fn check_category_laws<C: SmallCategory>(c: &C, sample: &[Mor<C>]) -> Result<Option<String>> {
    for f in sample {
        let l = c.compose(&c.identity(&f.target), f)?;
        let r = c.compose(f, &c.identity(&f.source))?;
        if !c.mor_eq(&l, f)? || !c.mor_eq(&r, f)? {
            return Ok(Some(format!("identity law fails on {f:?}")));
        }
    }
    for f in sample {
        for g in sample.iter().filter(|g| g.source == f.target) {
            for h in sample.iter().filter(|h| h.source == g.target) {
                let a = c.compose(h, &c.compose(g, f)?)?;
                let b = c.compose(&c.compose(h, g)?, f)?;
                if !c.mor_eq(&a, &b)? {
                    return Ok(Some(format!("associativity fails on {f:?}, {g:?}, {h:?}")));
                }
            }
        }
    }
    Ok(None)
}

/// A functor given on objects and morphisms.
pub trait Functor<C: SmallCategory, D: SmallCategory> {
    fn map_obj(&self, x: &C::Obj) -> Result<D::Obj>;
    fn map_mor(&self, m: &Mor<C>) -> Result<Mor<D>>;
}

/// A functor built from two closures.
pub struct FnFunctor<C: SmallCategory, D: SmallCategory> {
    #[allow(clippy::type_complexity)]
    pub obj: Box<dyn Fn(&C::Obj) -> Result<D::Obj> + Send + Sync>,
    #[allow(clippy::type_complexity)]
    pub mor: Box<dyn Fn(&Mor<C>) -> Result<Mor<D>> + Send + Sync>,
}

impl<C: SmallCategory, D: SmallCategory> Functor<C, D> for FnFunctor<C, D> {
    fn map_obj(&self, x: &C::Obj) -> Result<D::Obj> {
        (self.obj)(x)
    }
    fn map_mor(&self, m: &Mor<C>) -> Result<Mor<D>> {
        (self.mor)(m)
    }
}

/// Checks `F(g o f) = F(g) o F(f)` and `F(id) = id` on a sample.
pub fn check_functor<C: SmallCategory, D: SmallCategory, F: Functor<C, D>>(
    c: &C,
    d: &D,
    f: &F,
    sample: &[Mor<C>],
) -> Result<Option<String>> {
    for m in sample {
        let id = f.map_mor(&c.identity(&m.source))?;
        if !d.mor_eq(&id, &d.identity(&f.map_obj(&m.source)?))? {
            return Ok(Some(format!("identity not preserved at {:?}", m.source)));
        }
        for g in sample.iter().filter(|g| g.source == m.target) {
            let lhs = f.map_mor(&c.compose(g, m)?)?;
            let rhs = d.compose(&f.map_mor(g)?, &f.map_mor(m)?)?;
            if !d.mor_eq(&lhs, &rhs)? {
                return Ok(Some(format!("composition not preserved on {m:?}, {g:?}")));
            }
        }
    }
    Ok(None)
}
