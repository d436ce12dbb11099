//! The contraction identities, checked on all parenthesized objects up to a given size.

use super::categories::{contract, contract_object, is_identity, letters, structure_morphism, umor_pow, CatKind, StructureKind, UMorphism, UObject};
use super::tree::ParenTree;
use crate::error::Result;

/// All `PaB` objects with the given part sizes (every choice of trees), letters `a, b, ...` in order.
pub fn pab_families(sizes: &[usize]) -> Vec<Vec<UObject>> {
    let total: usize = sizes.iter().sum();
    let names = letters(total);
    let mut out: Vec<Vec<UObject>> = vec![Vec::new()];
    let mut off = 0;
    for &k in sizes {
        let seq = names[off..off + k].to_vec();
        off += k;
        let mut next = Vec::new();
        for prefix in &out {
            for t in ParenTree::all(k) {
                let mut v = prefix.clone();
                v.push(UObject::PaB { tree: t, seq: seq.clone() });
                next.push(v);
            }
        }
        out = next;
    }
    out
}

fn compositions(total_max: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            out.push(cur.clone());
            return;
        }
        for k in 1..=left.saturating_sub(parts - 1) {
            cur.push(k);
            go(left - k, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total_max, parts, &mut Vec::new(), &mut out);
    out
}

/// `(theta_Y (x) id_X) beta_{XY}`.
pub fn twisted_braiding(x: &UObject, y: &UObject) -> Result<UMorphism> {
    let beta = structure_morphism(StructureKind::Beta, &[x.clone(), y.clone()])?;
    let theta = structure_morphism(StructureKind::Theta, std::slice::from_ref(y))?.tensor(&UMorphism::identity(x)?)?;
    theta.after(&beta)
}

/// `theta_X (x) theta_Y^{-1}`.
pub fn theta_difference(x: &UObject, y: &UObject) -> Result<UMorphism> {
    let tx = structure_morphism(StructureKind::Theta, std::slice::from_ref(x))?;
    let ty = structure_morphism(StructureKind::Theta, std::slice::from_ref(y))?;
    tx.tensor(&ty.inverse())
}

/// `(theta_X^2 (x) id_Y) beta_{YX} beta_{XY}`.
pub fn double_twist_braiding(x: &UObject, y: &UObject) -> Result<UMorphism> {
    let bxy = structure_morphism(StructureKind::Beta, &[x.clone(), y.clone()])?;
    let byx = structure_morphism(StructureKind::Beta, &[y.clone(), x.clone()])?;
    let t2 = umor_pow(&structure_morphism(StructureKind::Theta, std::slice::from_ref(x))?, 2)?.tensor(&UMorphism::identity(y)?)?;
    t2.after(&byx.after(&bxy)?)
}

/// Counts `(passed, total)` of one identity over all shapes.
fn tally(results: impl IntoIterator<Item = Result<bool>>) -> Result<(usize, usize)> {
    let mut pass = 0;
    let mut total = 0;
    for r in results {
        total += 1;
        if r? {
            pass += 1;
        }
    }
    Ok((pass, total))
}

fn labelled(name: String, r: Result<(usize, usize)>) -> (String, bool) {
    match r {
        Ok((p, t)) => (format!("{name} [{p}/{t}]"), p == t && t > 0),
        Err(e) => (format!("{name} [error: {e}]"), false),
    }
}

/// The five contraction identities for every target and every shape of total size `<= max_total`.
pub fn contraction_checks(max_total: usize, degree: usize) -> Vec<(String, bool)> {
    let mut out = Vec::new();
    let targets = [CatKind::Cyc, CatKind::Dih, CatKind::PaCyc, CatKind::PaDih];
    for target in targets {
        let pairs: Vec<Vec<UObject>> = compositions(max_total, 2).iter().flat_map(|s| pab_families(s)).collect();
        let triples: Vec<Vec<UObject>> = compositions(max_total, 3).iter().flat_map(|s| pab_families(s)).collect();
        let r = tally(pairs.iter().map(|v| {
            let a = contract_object(target, &v[0].tensor(&v[1])?)?.0;
            let b = contract_object(target, &v[1].tensor(&v[0])?)?.0;
            Ok(a == b)
        }));
        out.push(labelled(format!("{target}: <X(x)Y> = <Y(x)X>"), r));
        let r = tally(triples.iter().map(|v| {
            let m = structure_morphism(StructureKind::Assoc, v)?;
            is_identity(&contract(target, &m)?, degree)
        }));
        out.push(labelled(format!("{target}: <a_XYZ> = id"), r));
        let r = tally(pairs.iter().map(|v| is_identity(&contract(target, &twisted_braiding(&v[0], &v[1])?)?, degree)));
        out.push(labelled(format!("{target}: <(theta_Y(x)id_X) beta_XY> = id"), r));
        if target.is_dihedral() {
            let singles: Vec<Vec<UObject>> = (1..=max_total).flat_map(|k| pab_families(&[k])).collect();
            let r = tally(singles.iter().map(|v| Ok(contract_object(target, &v[0].star()?)?.0 == contract_object(target, &v[0])?.0)));
            out.push(labelled(format!("{target}: <X*> = <X>"), r));
            let r = tally(singles.iter().map(|v| {
                let m = structure_morphism(StructureKind::HbalA, &[v[0].clone()])?;
                is_identity(&contract(target, &m)?, degree)
            }));
            out.push(labelled(format!("{target}: <a_X> = id"), r));
        }
    }
    out
}

/// Consequences of the half-balanced contraction: `<theta_X (x) theta_Y^{-1}> = id` and
/// `<(theta_X^2 (x) id_Y) beta_YX beta_XY> = id` in `Dih`, for `|X|, |Y| <= max_part`.
pub fn hbal_lemma_checks(max_part: usize, degree: usize) -> Vec<(String, bool)> {
    let shapes: Vec<Vec<usize>> = (1..=max_part).flat_map(|x| (1..=max_part).map(move |y| vec![x, y])).collect();
    let pairs: Vec<Vec<UObject>> = shapes
        .iter()
        .map(|s| pab_families(s).into_iter().next().expect("a family"))
        .collect();
    let r = tally(pairs.iter().map(|v| is_identity(&contract(CatKind::Dih, &theta_difference(&v[0], &v[1])?)?, degree)));
    let a = labelled("Dih: <theta_X (x) theta_Y^-1> = id".into(), r);
    let r = tally(pairs.iter().map(|v| is_identity(&contract(CatKind::Dih, &double_twist_braiding(&v[0], &v[1])?)?, degree)));
    let b = labelled("Dih: <(theta_X^2 (x) id_Y) beta_YX beta_XY> = id".into(), r);
    vec![a, b]
}
