//! Group actions on categories and the quotient category `C/G`.

use std::fmt::Debug;
use std::sync::Arc;

use super::category::{CatMorphism, Groupoid, Mor, SmallCategory};
use crate::error::{Error, Result};

type ActFn<O, A> = Arc<dyn Fn(&A, &O) -> O + Send + Sync>;
type IsoFn<O, E, A> = Arc<dyn Fn(&A, &O) -> Result<CatMorphism<O, E>> + Send + Sync>;

/// An action of a group on a category: objects `X -> gX` and isomorphisms `i_X^g : X -> gX`
/// with `i_X^{gh} = i_{gX}^h i_X^g`. The product `g * h` acts by `g` first.
pub struct CatAction<C: SmallCategory, A> {
    pub name: String,
    pub gens: Vec<A>,
    pub identity: A,
    pub mul: Arc<dyn Fn(&A, &A) -> A + Send + Sync>,
    /// Whether the generated group is finite (orbits and stabilizers are then computable).
    pub finite: bool,
    pub act: ActFn<C::Obj, A>,
    pub iso: IsoFn<C::Obj, C::Elem, A>,
}

impl<C: SmallCategory, A: Clone> Clone for CatAction<C, A> {
    fn clone(&self) -> Self {
        CatAction {
            name: self.name.clone(),
            gens: self.gens.clone(),
            identity: self.identity.clone(),
            mul: self.mul.clone(),
            finite: self.finite,
            act: self.act.clone(),
            iso: self.iso.clone(),
        }
    }
}

const MAX_GROUP: usize = 100_000;

impl<C: SmallCategory, A: Clone + Debug + PartialEq> CatAction<C, A> {
    /// All group elements, by closure of the generators.
    pub fn elements(&self) -> Result<Vec<A>> {
        if !self.finite {
            return Err(Error::Invalid(format!("group of `{}` is infinite", self.name)));
        }
        let mut out = vec![self.identity.clone()];
        let mut i = 0;
        while i < out.len() {
            for g in &self.gens {
                let x = (self.mul)(&out[i], g);
                if !out.contains(&x) {
                    if out.len() >= MAX_GROUP {
                        return Err(Error::Invalid("group too large to enumerate".into()));
                    }
                    out.push(x);
                }
            }
            i += 1;
        }
        Ok(out)
    }

    /// Checks the cocycle law and that `i_X^g` goes from `X` to `gX`; returns a witness `(g, h, X)` on failure.
    pub fn check_cocycle(&self, c: &C, objects: &[C::Obj], elems: &[A]) -> Result<Option<(A, A, C::Obj)>> {
        for x in objects {
            for g in elems {
                let ig = (self.iso)(g, x)?;
                let gx = (self.act)(g, x);
                if ig.source != *x || ig.target != gx || !c.is_morphism(&ig)? {
                    return Ok(Some((g.clone(), self.identity.clone(), x.clone())));
                }
                for h in elems {
                    let gh = (self.mul)(g, h);
                    let lhs = (self.iso)(&gh, x)?;
                    let rhs = c.compose(&(self.iso)(h, &gx)?, &ig)?;
                    if !c.mor_eq(&lhs, &rhs)? {
                        return Ok(Some((g.clone(), h.clone(), x.clone())));
                    }
                }
            }
        }
        Ok(None)
    }
}

/// The quotient `C/G` for a finite group acting on a groupoid. Objects are orbits, stored by their
/// least element; morphisms between orbits are the `G x G`-fixed families, stored by their
/// component between the representatives, which lies in `C(X,Y)^{G_X x G_Y}`.
pub struct Quotient<C: SmallCategory, A> {
    pub base: C,
    pub action: CatAction<C, A>,
    elements: Vec<A>,
}

impl<C: Groupoid, A: Clone + Debug + PartialEq> Quotient<C, A> {
    /// Builds the quotient, checking the cocycle law on `check_objects` (all objects if `None`).
    pub fn new(base: C, action: CatAction<C, A>, check_objects: Option<&[C::Obj]>) -> Result<Self> {
        let elements = action.elements()?;
        let objs = match check_objects {
            Some(o) => o.to_vec(),
            None => base.objects(),
        };
        if let Some((g, h, x)) = action.check_cocycle(&base, &objs, &elements)? {
            return Err(Error::Law(format!("cocycle law fails for g={g:?}, h={h:?}, X={x:?}")));
        }
        Ok(Quotient { base, action, elements })
    }

    pub fn group_elements(&self) -> &[A] {
        &self.elements
    }

    pub fn orbit(&self, x: &C::Obj) -> Vec<C::Obj> {
        let mut o: Vec<C::Obj> = self.elements.iter().map(|g| (self.action.act)(g, x)).collect();
        o.sort();
        o.dedup();
        o
    }

    /// Least element of the orbit and the first group element reaching it.
    pub fn canonical(&self, x: &C::Obj) -> (C::Obj, A) {
        let mut best: Option<(C::Obj, A)> = None;
        for g in &self.elements {
            let y = (self.action.act)(g, x);
            if best.as_ref().is_none_or(|(b, _)| y < *b) {
                best = Some((y, g.clone()));
            }
        }
        best.expect("group has an identity")
    }

    pub fn is_canonical(&self, x: &C::Obj) -> bool {
        self.canonical(x).0 == *x
    }

    /// `i_X^g : X -> rep(X)`.
    pub fn path(&self, x: &C::Obj) -> Result<Mor<C>> {
        let (_, g) = self.canonical(x);
        (self.action.iso)(&g, x)
    }

    pub fn stabilizer(&self, x: &C::Obj) -> Vec<A> {
        self.elements.iter().filter(|g| (self.action.act)(g, x) == *x).cloned().collect()
    }

    /// Whether `phi : X -> Y` is fixed by `G_X x G_Y`.
    pub fn is_fixed(&self, phi: &Mor<C>) -> Result<bool> {
        for g in self.stabilizer(&phi.source) {
            let ig = (self.action.iso)(&g, &phi.source)?;
            let moved = self.base.compose(phi, &self.base.inverse(&ig)?)?;
            if !self.base.mor_eq(&moved, phi)? {
                return Ok(false);
            }
        }
        for h in self.stabilizer(&phi.target) {
            let ih = (self.action.iso)(&h, &phi.target)?;
            let moved = self.base.compose(&ih, phi)?;
            if !self.base.mor_eq(&moved, phi)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The projection `C -> C/G` on morphisms: `path_Y o phi o path_X^{-1}`.
    pub fn project(&self, phi: &Mor<C>) -> Result<Mor<C>> {
        let p = self.path(&phi.source)?;
        let q = self.path(&phi.target)?;
        let m = self.base.compose(&q, &self.base.compose(phi, &self.base.inverse(&p)?)?)?;
        if !self.is_fixed(&m)? {
            return Err(Error::Law(format!("image of {phi:?} is not fixed by the stabilizers")));
        }
        Ok(m)
    }

    /// `(g, h) . phi = i_Y^h phi (i_X^g)^{-1}`.
    pub fn act_pair(&self, g: &A, h: &A, phi: &Mor<C>) -> Result<Mor<C>> {
        let ig = (self.action.iso)(g, &phi.source)?;
        let ih = (self.action.iso)(h, &phi.target)?;
        self.base.compose(&ih, &self.base.compose(phi, &self.base.inverse(&ig)?)?)
    }

    /// Number of `G x G`-fixed families over `alpha x beta` by exhaustive search (finite hom sets only).
    pub fn fixed_family_count(&self, alpha: &C::Obj, beta: &C::Obj) -> Result<usize> {
        let xs = self.orbit(alpha);
        let ys = self.orbit(beta);
        let mut comps = Vec::new();
        for x in &xs {
            for y in &ys {
                let homs = self.base.hom_list(x, y).ok_or_else(|| Error::Invalid("hom sets are not enumerable".into()))?;
                comps.push(((x.clone(), y.clone()), homs));
            }
        }
        let idx = |x: &C::Obj, y: &C::Obj| comps.iter().position(|((a, b), _)| a == x && b == y).expect("component");
        let mut choice = vec![0usize; comps.len()];
        let mut count = 0;
        if comps.iter().any(|(_, h)| h.is_empty()) {
            return Ok(0);
        }
        'outer: loop {
            let mut fixed = true;
            'check: for (k, (_, homs)) in comps.iter().enumerate() {
                let phi = &homs[choice[k]];
                let id = &self.action.identity;
                for g in &self.action.gens {
                    for (a, b) in [(g, id), (id, g)] {
                        let moved = self.act_pair(a, b, phi)?;
                        let j = idx(&moved.source, &moved.target);
                        if !self.base.mor_eq(&moved, &comps[j].1[choice[j]])? {
                            fixed = false;
                            break 'check;
                        }
                    }
                }
            }
            if fixed {
                count += 1;
            }
            for k in 0..comps.len() {
                choice[k] += 1;
                if choice[k] < comps[k].1.len() {
                    continue 'outer;
                }
                choice[k] = 0;
            }
            break;
        }
        Ok(count)
    }
}

impl<C: Groupoid, A: Clone + Debug + PartialEq> SmallCategory for Quotient<C, A> {
    type Obj = C::Obj;
    type Elem = C::Elem;

    fn objects(&self) -> Vec<C::Obj> {
        let mut v: Vec<C::Obj> = self.base.objects().iter().map(|x| self.canonical(x).0).collect();
        v.sort();
        v.dedup();
        v
    }

    fn identity(&self, x: &C::Obj) -> Mor<C> {
        self.base.identity(x)
    }

    fn compose(&self, g: &Mor<C>, f: &Mor<C>) -> Result<Mor<C>> {
        self.base.compose(g, f)
    }

    fn mor_eq(&self, a: &Mor<C>, b: &Mor<C>) -> Result<bool> {
        self.base.mor_eq(a, b)
    }

    fn is_morphism(&self, m: &Mor<C>) -> Result<bool> {
        Ok(self.is_canonical(&m.source) && self.is_canonical(&m.target) && self.base.is_morphism(m)? && self.is_fixed(m)?)
    }

    fn hom_list(&self, x: &C::Obj, y: &C::Obj) -> Option<Vec<Mor<C>>> {
        let all = self.base.hom_list(x, y)?;
        Some(all.into_iter().filter(|m| self.is_fixed(m).unwrap_or(false)).collect())
    }
}

impl<C: Groupoid, A: Clone + Debug + PartialEq> Groupoid for Quotient<C, A> {
    fn inverse(&self, m: &Mor<C>) -> Result<Mor<C>> {
        self.base.inverse(m)
    }
}

/// Outcome of the factorization criterion.
#[derive(Clone, Debug, PartialEq)]
pub enum Factorization {
    Factors,
    /// The first generator and object where `F(gX) = F(X)` or `F(i_X^g) = id` fails.
    Fails { generator: String, object: String, reason: String },
}

/// Decides whether `F : C -> D` factors through `C/G`: `F(gX) = F(X)` and `F(i_X^g) = id_{F(X)}`
/// for every generator `g` and every object in `objects`.
pub fn factor_functor<C, D, F, A>(action: &CatAction<C, A>, objects: &[C::Obj], d: &D, f: &F) -> Result<Factorization>
where
    C: SmallCategory,
    D: SmallCategory,
    F: super::category::Functor<C, D>,
    A: Clone + Debug,
{
    for g in &action.gens {
        for x in objects {
            let fx = f.map_obj(x)?;
            if f.map_obj(&(action.act)(g, x))? != fx {
                return Ok(Factorization::Fails { generator: format!("{g:?}"), object: format!("{x:?}"), reason: "F(gX) != F(X)".into() });
            }
            let img = f.map_mor(&(action.iso)(g, x)?)?;
            if !d.mor_eq(&img, &d.identity(&fx))? {
                return Ok(Factorization::Fails {
                    generator: format!("{g:?}"),
                    object: format!("{x:?}"),
                    reason: "F(i_X^g) != id".into(),
                });
            }
        }
    }
    Ok(Factorization::Factors)
}

/// The functor `C/G -> D` induced by a functor satisfying the factorization criterion.
pub struct Induced<'a, F> {
    pub f: &'a F,
}

impl<C, D, F, A> super::category::Functor<Quotient<C, A>, D> for Induced<'_, F>
where
    C: Groupoid,
    D: SmallCategory,
    F: super::category::Functor<C, D>,
    A: Clone + Debug + PartialEq,
{
    fn map_obj(&self, x: &C::Obj) -> Result<D::Obj> {
        self.f.map_obj(x)
    }
    fn map_mor(&self, m: &Mor<C>) -> Result<Mor<D>> {
        self.f.map_mor(m)
    }
}
