//! The Teichmuller groupoids `T_{0,S}` and `T'_{0,S}`: pullbacks of `Dih(S)` and `Cyc(S)` along the
//! projection from pairs (planar tree, ordering of `S`) taken up to the dihedral, resp. cyclic, group.

use std::collections::BTreeSet;
use std::sync::Arc;

use super::categories::{canonicalize, UMorphism, UObject};
use super::planar::PlanarTree;
use crate::assoc::{dih_groupoid, Gamma0n};
use crate::braid::BraidWord;
use crate::catcore::{cyc_groupoid, BraidGroup, CatMorphism, Cgs, Pullback, Quotient};
use crate::error::{Error, Result};
use crate::perm::Perm;

/// An object of `T_{0,S}`: the canonical pair in its orbit.
pub type TeichObject = (PlanarTree, Vec<String>);

pub type TeichGroupoid = Pullback<Quotient<Cgs<Gamma0n>, Perm>, TeichObject>;
pub type TeichCycGroupoid = Pullback<Quotient<Cgs<BraidGroup>, Perm>, TeichObject>;

fn check_letters(letters: &[String]) -> Result<usize> {
    let n = letters.len();
    if n < 3 {
        return Err(Error::Invalid("Teichmuller groupoids need |S| >= 3".into()));
    }
    let set: BTreeSet<&String> = letters.iter().collect();
    if set.len() != n {
        return Err(Error::Invalid("S must consist of distinct letters".into()));
    }
    Ok(n)
}

/// Canonical classes of `PlT_n x Bij([n], S)` under `D_n` (or `C_n`), sorted.
pub fn teich_objects(letters: &[String], dihedral: bool) -> Result<Vec<TeichObject>> {
    let n = check_letters(letters)?;
    let mut out = BTreeSet::new();
    for t in PlanarTree::all(n) {
        for p in Perm::all(n) {
            let seq = p.act_vec(letters);
            let x = if dihedral {
                UObject::PaDih { tree: Some(t.clone()), seq }
            } else {
                UObject::PaCyc { tree: Some(t.clone()), seq }
            };
            let (c, _) = canonicalize(&x)?;
            let tree = c.planar_tree().cloned().expect("tree present");
            out.insert((tree, c.seq().to_vec()));
        }
    }
    Ok(out.into_iter().collect())
}

/// `T_{0,S}` with equality of morphisms decided through the truncated representation at `degree`.
pub fn teich_groupoid(letters: &[String], degree: usize) -> Result<TeichGroupoid> {
    let objects = teich_objects(letters, true)?;
    let base = dih_groupoid(letters.to_vec(), degree)?;
    Ok(Pullback::new(base, objects, Arc::new(|x: &TeichObject| x.1.clone())))
}

/// `T'_{0,S}`, the cyclic variant.
pub fn teich_cyc(letters: &[String]) -> Result<TeichCycGroupoid> {
    let objects = teich_objects(letters, false)?;
    let base = cyc_groupoid(letters.to_vec())?;
    Ok(Pullback::new(base, objects, Arc::new(|x: &TeichObject| x.1.clone())))
}

pub fn teich_to_umorphism(m: &CatMorphism<TeichObject, BraidWord>) -> Result<UMorphism> {
    let obj = |x: &TeichObject| UObject::PaDih { tree: Some(x.0.clone()), seq: x.1.clone() };
    UMorphism::new(obj(&m.source), obj(&m.target), m.elem.clone())
}

pub fn umorphism_to_teich(m: &UMorphism) -> Result<CatMorphism<TeichObject, BraidWord>> {
    let obj = |x: &UObject| -> Result<TeichObject> {
        match x {
            UObject::PaDih { tree: Some(t), seq } => Ok((t.clone(), seq.clone())),
            _ => Err(Error::Invalid(format!("{} object is not in T_0,S", x.kind()))),
        }
    };
    Ok(CatMorphism::new(obj(&m.source)?, obj(&m.target)?, m.elem.clone()))
}

/// A braid representing a morphism between two objects (the positive lift of the permutation).
pub fn teich_connecting(x: &TeichObject, y: &TeichObject) -> Result<BraidWord> {
    let n = x.1.len();
    let p = Perm::all(n)
        .into_iter()
        .find(|p| p.act_vec(&x.1) == y.1)
        .ok_or_else(|| Error::Invalid("objects over different letter sets".into()))?;
    Ok(crate::braid::positive_lift(&p))
}
