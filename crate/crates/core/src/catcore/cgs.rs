//! The groupoids `C_{G,S}` and `C_{Gamma,G,S} = C_{G,S}/Gamma`, and pullbacks `pi^* C`.

use std::fmt::Debug;
use std::sync::Arc;

use super::action::{CatAction, Quotient};
use super::category::{check_composable, CatMorphism, Groupoid, Mor, SmallCategory};
use crate::braid::{braid_eq, eq_mod_center, half_twist, rho, BraidWord};
use crate::error::{Error, Result};
use crate::perm::Perm;

/// A group with a morphism to `S_n`; the product `a.mul(b)` is the composite `a o b`.
pub trait PermGroup {
    type Elem: Clone + Debug;
    fn name(&self) -> String;
    fn degree(&self) -> usize;
    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> Result<bool>;
    fn perm(&self, a: &Self::Elem) -> Perm;
    /// The fiber over a permutation, when finite.
    fn fiber(&self, _p: &Perm) -> Option<Vec<Self::Elem>> {
        None
    }
}

/// `S_n` itself.
#[derive(Clone, Copy, Debug)]
pub struct SymGroup(pub usize);

impl PermGroup for SymGroup {
    type Elem = Perm;
    fn name(&self) -> String {
        format!("S_{}", self.0)
    }
    fn degree(&self) -> usize {
        self.0
    }
    fn identity(&self) -> Perm {
        Perm::identity(self.0)
    }
    fn mul(&self, a: &Perm, b: &Perm) -> Result<Perm> {
        Ok(a.compose(b))
    }
    fn inv(&self, a: &Perm) -> Perm {
        a.inverse()
    }
    fn eq(&self, a: &Perm, b: &Perm) -> Result<bool> {
        Ok(a == b)
    }
    fn perm(&self, a: &Perm) -> Perm {
        a.clone()
    }
    fn fiber(&self, p: &Perm) -> Option<Vec<Perm>> {
        Some(vec![p.clone()])
    }
}

/// `B_n`, or `B_n / Z_n` when `mod_center` is set.
#[derive(Clone, Copy, Debug)]
pub struct BraidGroup {
    pub n: usize,
    pub mod_center: bool,
}

impl PermGroup for BraidGroup {
    type Elem = BraidWord;
    fn name(&self) -> String {
        if self.mod_center {
            format!("B_{}/Z_{}", self.n, self.n)
        } else {
            format!("B_{}", self.n)
        }
    }
    fn degree(&self) -> usize {
        self.n
    }
    fn identity(&self) -> BraidWord {
        BraidWord::identity(self.n)
    }
    fn mul(&self, a: &BraidWord, b: &BraidWord) -> Result<BraidWord> {
        a.mul(b)
    }
    fn inv(&self, a: &BraidWord) -> BraidWord {
        a.inv()
    }
    fn eq(&self, a: &BraidWord, b: &BraidWord) -> Result<bool> {
        if self.mod_center {
            if self.n <= 2 {
                // B_2 / Z_2 = Z/2 via exponent sum modulo 2; B_1 trivial.
                return Ok(self.n < 2 || (a.exponent_sum() - b.exponent_sum()).rem_euclid(2) == 0);
            }
            eq_mod_center(a, b)
        } else {
            braid_eq(a, b)
        }
    }
    fn perm(&self, a: &BraidWord) -> Perm {
        a.perm()
    }
}

/// The category `C_{G,S}`: objects are bijections `[n] -> S` (sequences listing `S`), and
/// `Hom(s, s')` is the set of `g` with `perm(g) . s = s'`.
#[derive(Clone, Debug)]
pub struct Cgs<G> {
    pub group: G,
    pub letters: Vec<String>,
}

impl<G: PermGroup> Cgs<G> {
    pub fn new(group: G, letters: Vec<String>) -> Result<Self> {
        if letters.len() != group.degree() {
            return Err(Error::Dimension(format!("|S| = {} but {} acts on {}", letters.len(), group.name(), group.degree())));
        }
        let mut sorted = letters.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != letters.len() {
            return Err(Error::Invalid("S must consist of distinct letters".into()));
        }
        Ok(Cgs { group, letters })
    }

    pub fn morphism(&self, source: Vec<String>, elem: G::Elem) -> Mor<Self> {
        let target = self.group.perm(&elem).act_vec(&source);
        CatMorphism::new(source, target, elem)
    }
}

impl<G: PermGroup> SmallCategory for Cgs<G> {
    type Obj = Vec<String>;
    type Elem = G::Elem;

    fn objects(&self) -> Vec<Vec<String>> {
        let mut v: Vec<Vec<String>> = Perm::all(self.letters.len()).iter().map(|p| p.act_vec(&self.letters)).collect();
        v.sort();
        v
    }

    fn identity(&self, x: &Vec<String>) -> Mor<Self> {
        CatMorphism::new(x.clone(), x.clone(), self.group.identity())
    }

    fn compose(&self, g: &Mor<Self>, f: &Mor<Self>) -> Result<Mor<Self>> {
        check_composable(g, f)?;
        Ok(CatMorphism::new(f.source.clone(), g.target.clone(), self.group.mul(&g.elem, &f.elem)?))
    }

    fn mor_eq(&self, a: &Mor<Self>, b: &Mor<Self>) -> Result<bool> {
        Ok(a.source == b.source && a.target == b.target && self.group.eq(&a.elem, &b.elem)?)
    }

    fn is_morphism(&self, m: &Mor<Self>) -> Result<bool> {
        Ok(m.source.len() == self.letters.len() && self.group.perm(&m.elem).act_vec(&m.source) == m.target)
    }

    fn hom_list(&self, x: &Vec<String>, y: &Vec<String>) -> Option<Vec<Mor<Self>>> {
        let p = Perm::all(x.len()).into_iter().find(|p| p.act_vec(x) == *y)?;
        Some(self.group.fiber(&p)?.into_iter().map(|e| CatMorphism::new(x.clone(), y.clone(), e)).collect())
    }
}

impl<G: PermGroup> Groupoid for Cgs<G> {
    fn inverse(&self, m: &Mor<Self>) -> Result<Mor<Self>> {
        Ok(CatMorphism::new(m.target.clone(), m.source.clone(), self.group.inv(&m.elem)))
    }
}

pub type Lift<G> = Arc<dyn Fn(&Perm) -> Result<<G as PermGroup>::Elem> + Send + Sync>;

/// `C_{Gamma,G,S}`: the quotient of `C_{G,S}` by `gamma . s = s gamma^{-1}` with `i_s^gamma = lift(gamma)`.
/// Checks that `perm(lift(gamma)) = gamma` on all of `Gamma` and the cocycle law.
pub fn build_cgs<G>(group: G, gamma_gens: Vec<Perm>, lift: Lift<G>, letters: Vec<String>) -> Result<Quotient<Cgs<G>, Perm>>
where
    G: PermGroup + Clone + Send + Sync + 'static,
{
    let n = group.degree();
    let base = Cgs::new(group.clone(), letters)?;
    if gamma_gens.iter().any(|g| g.len() != n) {
        return Err(Error::Dimension("Gamma must be a subgroup of S_n".into()));
    }
    let lift_iso = lift.clone();
    let g2 = group.clone();
    let action: CatAction<Cgs<G>, Perm> = CatAction {
        name: format!("Gamma < S_{n} on C_{{{}}}", group.name()),
        gens: gamma_gens,
        identity: Perm::identity(n),
        mul: Arc::new(|g: &Perm, h: &Perm| h.compose(g)),
        finite: true,
        act: Arc::new(|g: &Perm, s: &Vec<String>| g.act_vec(s)),
        iso: Arc::new(move |g: &Perm, s: &Vec<String>| {
            let e = lift_iso(g)?;
            Ok(CatMorphism::new(s.clone(), g2.perm(&e).act_vec(s), e))
        }),
    };
    for g in action.elements()? {
        let e = lift(&g)?;
        if group.perm(&e) != g {
            return Err(Error::Law(format!("lift of {g:?} has permutation {:?}", group.perm(&e))));
        }
    }
    let first = vec![base.letters.clone()];
    Quotient::new(base, action, Some(&first))
}

pub fn cyclic_gens(n: usize) -> Vec<Perm> {
    vec![Perm::cycle(n)]
}

pub fn dihedral_gens(n: usize) -> Vec<Perm> {
    vec![Perm::cycle(n), Perm::reversal(n)]
}

/// Writes a dihedral permutation as `c^k r^e` with `c` the cycle and `r` the reversal.
pub fn dihedral_decompose(g: &Perm) -> Option<(usize, bool)> {
    let n = g.len();
    let c = Perm::cycle(n);
    let mut ck = Perm::identity(n);
    for k in 0..n.max(1) {
        if ck == *g {
            return Some((k, false));
        }
        if ck.compose(&Perm::reversal(n)) == *g {
            return Some((k, true));
        }
        ck = ck.compose(&c);
    }
    None
}

/// Lift `c^k r^e -> rho^k h^e` of the cyclic/dihedral group into braids.
pub fn braid_lift(n: usize) -> impl Fn(&Perm) -> Result<BraidWord> + Send + Sync + Clone {
    move |g: &Perm| {
        let (k, e) = dihedral_decompose(g).ok_or_else(|| Error::Invalid(format!("{g:?} is not dihedral")))?;
        let mut b = rho(n).pow(k as i64);
        if e {
            b = b.mul(&half_twist(n))?;
        }
        Ok(b)
    }
}

/// `Cyc(S) = C_{C_n, B_n/Z_n, S}`.
pub fn cyc_groupoid(letters: Vec<String>) -> Result<Quotient<Cgs<BraidGroup>, Perm>> {
    let n = letters.len();
    build_cgs(BraidGroup { n, mod_center: true }, cyclic_gens(n), Arc::new(braid_lift(n)), letters)
}

/// The cyclic group acting through `Z` on `B_n` (generator `1 -> rho`): not a finite action on
/// `C_{B_n,S}` since `rho^n = z_n`; used for the factorization criterion.
pub fn z_action_on_braids(n: usize) -> CatAction<Cgs<BraidGroup>, i64> {
    CatAction {
        name: format!("Z on C_{{B_{n}}}"),
        gens: vec![1],
        identity: 0,
        mul: Arc::new(|a: &i64, b: &i64| a + b),
        finite: false,
        act: Arc::new(move |k: &i64, s: &Vec<String>| {
            let c = Perm::cycle(n);
            let mut p = Perm::identity(n);
            for _ in 0..k.rem_euclid(n as i64) {
                p = p.compose(&c);
            }
            p.act_vec(s)
        }),
        iso: Arc::new(move |k: &i64, s: &Vec<String>| {
            let b = rho(n).pow(*k);
            Ok(CatMorphism::new(s.clone(), b.perm().act_vec(s), b))
        }),
    }
}

/// The pullback `pi^* C`: objects `T`, `Hom(t, t') = Hom_C(pi t, pi t')`.
pub struct Pullback<C: SmallCategory, T> {
    pub base: C,
    pub objects: Vec<T>,
    pub pi: Arc<dyn Fn(&T) -> C::Obj + Send + Sync>,
}

impl<C: SmallCategory, T: Clone + Ord + Debug> Pullback<C, T> {
    pub fn new(base: C, objects: Vec<T>, pi: Arc<dyn Fn(&T) -> C::Obj + Send + Sync>) -> Self {
        Pullback { base, objects, pi }
    }

    pub fn down(&self, m: &CatMorphism<T, C::Elem>) -> Mor<C> {
        CatMorphism::new((self.pi)(&m.source), (self.pi)(&m.target), m.elem.clone())
    }

    /// Lifts a base morphism `pi t -> pi t'` to `t -> t'`.
    pub fn lift(&self, t: &T, t2: &T, m: &Mor<C>) -> Result<CatMorphism<T, C::Elem>> {
        if m.source != (self.pi)(t) || m.target != (self.pi)(t2) {
            return Err(Error::Invalid("morphism does not lie over the given objects".into()));
        }
        Ok(CatMorphism::new(t.clone(), t2.clone(), m.elem.clone()))
    }
}

impl<C: SmallCategory, T: Clone + Ord + Debug> SmallCategory for Pullback<C, T> {
    type Obj = T;
    type Elem = C::Elem;

    fn objects(&self) -> Vec<T> {
        self.objects.clone()
    }

    fn identity(&self, x: &T) -> CatMorphism<T, C::Elem> {
        let id = self.base.identity(&(self.pi)(x));
        CatMorphism::new(x.clone(), x.clone(), id.elem)
    }

    fn compose(&self, g: &CatMorphism<T, C::Elem>, f: &CatMorphism<T, C::Elem>) -> Result<CatMorphism<T, C::Elem>> {
        check_composable(g, f)?;
        let c = self.base.compose(&self.down(g), &self.down(f))?;
        Ok(CatMorphism::new(f.source.clone(), g.target.clone(), c.elem))
    }

    fn mor_eq(&self, a: &CatMorphism<T, C::Elem>, b: &CatMorphism<T, C::Elem>) -> Result<bool> {
        Ok(a.source == b.source && a.target == b.target && self.base.mor_eq(&self.down(a), &self.down(b))?)
    }

    fn is_morphism(&self, m: &CatMorphism<T, C::Elem>) -> Result<bool> {
        self.base.is_morphism(&self.down(m))
    }

    fn hom_list(&self, x: &T, y: &T) -> Option<Vec<CatMorphism<T, C::Elem>>> {
        let homs = self.base.hom_list(&(self.pi)(x), &(self.pi)(y))?;
        Some(homs.into_iter().map(|m| CatMorphism::new(x.clone(), y.clone(), m.elem)).collect())
    }
}

impl<C: Groupoid, T: Clone + Ord + Debug> Groupoid for Pullback<C, T> {
    fn inverse(&self, m: &CatMorphism<T, C::Elem>) -> Result<CatMorphism<T, C::Elem>> {
        let i = self.base.inverse(&self.down(m))?;
        Ok(CatMorphism::new(m.target.clone(), m.source.clone(), i.elem))
    }
}
