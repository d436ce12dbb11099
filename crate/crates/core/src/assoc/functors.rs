//! Morphisms of `PaCD^Phi_S` and `PaDih^gr_S`, and the functors `j_Phi: PaB_S -> PaCD^Phi_S`,
//! `<->: PaCD^Phi_S -> PaDih^gr_S`, `k_Phi: PaDih_S -> PaDih^gr_S`.

use std::sync::Arc;

use serde_json::{json, Value};

use super::associator::{per_degree, Associator};
use super::graded::{i_phi_between, k_phi_between};
use super::groups::{dih_graded_groupoid, GradedGamma};
use crate::braid::BraidWord;
use crate::catcore::{CatMorphism, Cgs, Pullback, Quotient};
use crate::error::{Error, Result};
use crate::liealg::{AlgKind, GroupLike};
use crate::perm::Perm;
use crate::univcat::{contract_object, teich_objects, CatKind, ParenTree, TeichObject, UMorphism, UObject};

/// A morphism of `PaCD^Phi_S` (over `t_n`, `PaB` objects) or of `PaDih^gr_S` (over `p_n`, `PaDih` objects).
#[derive(Clone, Debug, PartialEq)]
pub struct GradedMorphism {
    pub source: UObject,
    pub target: UObject,
    pub elem: GroupLike,
}

impl GradedMorphism {
    pub fn new(source: UObject, target: UObject, elem: GroupLike) -> Result<Self> {
        let n = source.len();
        let kind_ok = match (source.kind(), elem.kind) {
            (CatKind::PaB, AlgKind::T(m)) | (CatKind::PaDih, AlgKind::P(m)) => m == n,
            _ => false,
        };
        if !kind_ok || target.kind() != source.kind() || target.len() != n {
            return Err(Error::Invalid(format!("{} element between {} objects", elem.kind.label(), source.kind())));
        }
        if elem.perm.act_vec(source.seq()) != target.seq() {
            return Err(Error::Invalid("the permutation part does not carry the source sequence to the target".into()));
        }
        Ok(GradedMorphism { source, target, elem })
    }

    /// `self o f`.
    pub fn after(&self, f: &GradedMorphism) -> Result<GradedMorphism> {
        if f.target != self.source {
            return Err(Error::Invalid("morphisms are not composable".into()));
        }
        Ok(GradedMorphism { source: f.source.clone(), target: self.target.clone(), elem: self.elem.mul(&f.elem)? })
    }

    pub fn inverse(&self) -> GradedMorphism {
        GradedMorphism { source: self.target.clone(), target: self.source.clone(), elem: self.elem.inv() }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "source": self.source,
            "target": self.target,
            "algebra": self.elem.kind.label(),
            "log": per_degree(&self.elem.alg, &self.elem.log),
            "perm": self.elem.perm.images().iter().map(|i| i + 1).collect::<Vec<_>>(),
        })
    }
}

fn pab_tree(x: &UObject) -> Result<&ParenTree> {
    match x {
        UObject::PaB { tree, .. } => Ok(tree),
        _ => Err(Error::Invalid(format!("expected a PaB object, got {}", x.kind()))),
    }
}

/// `j_Phi(m)`.
pub fn j_phi(m: &UMorphism, a: &Associator) -> Result<GradedMorphism> {
    let (s, t) = (pab_tree(&m.source)?, pab_tree(&m.target)?);
    if m.source.len() < 2 {
        let e = GroupLike::identity(AlgKind::T(m.source.len()), a.degree);
        return GradedMorphism::new(m.source.clone(), m.target.clone(), e);
    }
    GradedMorphism::new(m.source.clone(), m.target.clone(), i_phi_between(s, t, a, &m.elem)?)
}

/// The contraction `PaCD^Phi_S -> PaDih^gr_S`: project to `p_n` and move to the canonical
/// representatives along the dihedral isomorphisms `(1, gamma)`.
pub fn pacd_contract(m: &GradedMorphism) -> Result<GradedMorphism> {
    let n = m.source.len();
    if n < 3 {
        return Err(Error::Invalid("PaDih^gr is realized for n >= 3".into()));
    }
    let (src, p) = contract_object(CatKind::PaDih, &m.source)?;
    let (tgt, q) = contract_object(CatKind::PaDih, &m.target)?;
    let d = m.elem.degree();
    let gp = GroupLike::from_perm(AlgKind::P(n), d, p.perm());
    let gq = GroupLike::from_perm(AlgKind::P(n), d, q.perm());
    let elem = gq.mul(&m.elem.project()?)?.mul(&gp.inv())?;
    GradedMorphism::new(src, tgt, elem)
}

fn rooted(x: &UObject) -> Result<ParenTree> {
    match x {
        UObject::PaDih { tree: Some(t), .. } => Ok(t.rooted()),
        _ => Err(Error::Invalid(format!("expected a PaDih object with a planar tree, got {}", x.kind()))),
    }
}

/// `k_Phi(m)` for a morphism of `PaDih_S` between objects with `n >= 3` leaves.
pub fn k_phi(m: &UMorphism, a: &Associator) -> Result<GradedMorphism> {
    if m.source.len() < 3 {
        return Err(Error::Invalid("k_Phi is realized for n >= 3".into()));
    }
    let e = k_phi_between(&rooted(&m.source)?, &rooted(&m.target)?, a, &m.elem)?;
    GradedMorphism::new(m.source.clone(), m.target.clone(), e)
}

/// `T_{0,S}(Q)` at truncation: `T_{0,S}`'s objects over `PaDih^gr_S`.
pub type TeichGraded = Pullback<Quotient<Cgs<GradedGamma>, Perm>, TeichObject>;

pub fn t0n_prounipotent(letters: &[String], degree: usize) -> Result<TeichGraded> {
    let objects = teich_objects(letters, true)?;
    let base = dih_graded_groupoid(letters.to_vec(), degree)?;
    Ok(Pullback::new(base, objects, Arc::new(|x: &TeichObject| x.1.clone())))
}

/// The canonical functor `T_{0,S} -> T_{0,S}(Q)^{<=N}` on one morphism.
pub fn teich_to_graded(m: &CatMorphism<TeichObject, BraidWord>, a: &Associator) -> Result<CatMorphism<TeichObject, GroupLike>> {
    let e = k_phi_between(&m.source.0.rooted(), &m.target.0.rooted(), a, &m.elem)?;
    Ok(CatMorphism::new(m.source.clone(), m.target.clone(), e))
}
