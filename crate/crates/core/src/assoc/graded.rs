//! The representations `i_{t,Phi}: B_n -> exp(t_n) x| S_n` and `Gamma_{0,n} -> exp(p_n) x| S_n`,
//! the functors `j_Phi`, `k_Phi`, and the infinitesimally braided structure of PaCD.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::associator::Associator;
use super::pacd::t_between;
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::exactalg::Rational;
use crate::liealg::{t_alg, t_total, AlgKind, GroupLike, LieElement};
use crate::perm::Perm;
use crate::univcat::{decompose_to_constraints, eval_constraints, ParenTree};

type LetterKey = (usize, usize, String, String);

type LetterCache = OnceLock<Mutex<HashMap<(LetterKey, bool), Arc<Vec<(GroupLike, GroupLike)>>>>>;

/// Images of `sigma_i^{+-1}` as automorphisms of the right comb (projected to `p_n` if asked),
/// cached per associator.
fn letter_images(n: usize, a: &Associator, projected: bool) -> Result<Arc<Vec<(GroupLike, GroupLike)>>> {
    static CACHE: LetterCache = OnceLock::new();
    let key = ((n, a.degree, a.mu.to_string(), format!("{:?}", a.log_phi)), projected);
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().expect("letter cache").get(&key) {
        return Ok(v.clone());
    }
    let comb = ParenTree::right_comb(n);
    let s = a.structure();
    let mut out = Vec::new();
    for i in 1..n {
        let mut pos = eval_constraints(&decompose_to_constraints(&BraidWord::sigma(n, i, 1)?, &comb, &comb)?, &s)?;
        if projected {
            pos = pos.project()?;
        }
        let neg = pos.inv();
        out.push((pos, neg));
    }
    let out = Arc::new(out);
    cache.lock().expect("letter cache").insert(key, out.clone());
    Ok(out)
}

/// Image of the parenthesized braid `b : (src, -) -> (tgt, -)` in PaCD with the associator's
/// structure: the evaluation of `decompose_to_constraints(b, src, tgt)`, computed letter by letter.
pub fn i_phi_between(src: &ParenTree, tgt: &ParenTree, a: &Associator, b: &BraidWord) -> Result<GroupLike> {
    image_between(src, tgt, a, b, false)
}

/// `i_phi_between` followed by `t_n -> p_n`, multiplying in `p_n`.
pub fn k_phi_between(src: &ParenTree, tgt: &ParenTree, a: &Associator, b: &BraidWord) -> Result<GroupLike> {
    image_between(src, tgt, a, b, true)
}

fn image_between(src: &ParenTree, tgt: &ParenTree, a: &Associator, b: &BraidWord, projected: bool) -> Result<GroupLike> {
    let n = src.leaves();
    if tgt.leaves() != n || b.strands() != n {
        return Err(Error::Dimension(format!("braid on {} strands between trees with {} and {} leaves", b.strands(), n, tgt.leaves())));
    }
    let s = a.structure();
    let comb = ParenTree::right_comb(n);
    let mut into = eval_constraints(&decompose_to_constraints(&BraidWord::identity(n), src, &comb)?, &s)?;
    let mut out = eval_constraints(&decompose_to_constraints(&BraidWord::identity(n), &comb, tgt)?, &s)?;
    if projected {
        into = into.project()?;
        out = out.project()?;
    }
    let imgs = if n >= 2 { letter_images(n, a, projected)? } else { Arc::new(Vec::new()) };
    let mut acc = out;
    for &(i, e) in b.letters() {
        let (p, q) = &imgs[i - 1];
        acc = acc.mul(if e > 0 { p } else { q })?;
    }
    acc.mul(&into)
}

/// Direct evaluation of the full constraint word (reference implementation of [`i_phi_between`]).
pub fn i_phi_between_by_word(src: &ParenTree, tgt: &ParenTree, a: &Associator, b: &BraidWord) -> Result<GroupLike> {
    let w = decompose_to_constraints(b, src, tgt)?;
    eval_constraints(&w, &a.structure())
}

/// `i_{t,Phi}(b)`.
pub fn i_t_phi(t: &ParenTree, a: &Associator, b: &BraidWord) -> Result<GroupLike> {
    if t.leaves() != b.strands() {
        return Err(Error::Dimension(format!("tree with {} leaves for a braid on {} strands", t.leaves(), b.strands())));
    }
    i_phi_between(t, t, a, b)
}

/// The induced representation of `Gamma_{0,n}` in `exp(p_n) x| S_n`.
pub fn gamma_rep(t: &ParenTree, a: &Associator, b: &BraidWord) -> Result<GroupLike> {
    if b.strands() < 3 {
        return Err(Error::Invalid("Gamma_{0,n} needs n >= 3".into()));
    }
    if t.leaves() != b.strands() {
        return Err(Error::Dimension(format!("tree with {} leaves for a braid on {} strands", t.leaves(), b.strands())));
    }
    k_phi_between(t, t, a, b)
}

/// `Phi_{t,t'}`: the image of the trivial braid from `t` to `t'`.
pub fn tree_change(src: &ParenTree, tgt: &ParenTree, a: &Associator) -> Result<GroupLike> {
    i_phi_between(src, tgt, a, &BraidWord::identity(src.leaves()))
}

/// The infinitesimally braided data of PaCD at sizes `(|X|, |Y|)`.
#[derive(Clone, Debug)]
pub struct IbmcData {
    /// `c_{XY} = s_{|X|,|Y|}`.
    pub c: GroupLike,
    /// `a_{XYZ} = id` (with `|Z| = 1`).
    pub a: GroupLike,
    /// `t_{XY}` in `t_{|X|+|Y|}`.
    pub t_xy: LieElement,
    /// `t_X = sum_{i<j} t_ij` in `t_{|X|}`.
    pub t_x: LieElement,
}

pub fn ibmc_data(x: usize, y: usize, degree: usize) -> Result<IbmcData> {
    if x == 0 || y == 0 {
        return Err(Error::Invalid("sizes must be positive".into()));
    }
    let n = x + y;
    let alg = t_alg(n, degree);
    Ok(IbmcData {
        c: GroupLike::from_perm(AlgKind::T(n), degree, Perm::block_swap(x, y)),
        a: GroupLike::identity(AlgKind::T(n + 1), degree),
        t_xy: t_between(&alg, n, 0, x, y),
        t_x: t_total(&t_alg(x, degree), x),
    })
}

/// `t_X (x) id_Y` and `id_X (x) t_Y` inside `t_{|X|+|Y|}`.
pub fn whiskered_totals(x: usize, y: usize, degree: usize) -> (LieElement, LieElement) {
    let n = x + y;
    let alg = t_alg(n, degree);
    let mut l = LieElement::zero(&alg);
    let mut r = LieElement::zero(&alg);
    for i in 1..=n {
        for j in i + 1..=n {
            let g = crate::liealg::t_gen(&alg, n, i, j);
            if j <= x {
                l = l.add(&g).expect("same algebra");
            } else if i > x {
                r = r.add(&g).expect("same algebra");
            }
        }
    }
    (l, r)
}

/// `<t_{XY} + 2 id_X (x) t_Y> = 0` in `p_{|X|+|Y|}`, together with `<c_{XY}>` and `<a_{XYZ}>` having
/// trivial exponential part.
pub fn check_ibmc_contraction(x: usize, y: usize, degree: usize) -> Result<bool> {
    let n = x + y;
    let d = ibmc_data(x, y, degree)?;
    let (_, ty) = whiskered_totals(x, y, degree);
    let e = d.t_xy.add(&ty.scale(&Rational::int(2)))?;
    let projected = crate::liealg::project_tp(&e, n)?;
    let c_ok = d.c.project()?.log.iter().all(Rational::is_zero);
    let a_ok = d.a.project()?.is_identity();
    Ok(projected.is_zero() && c_ok && a_ok)
}

/// `<t_X> = 0` in `p_n`.
pub fn check_total_contracts(n: usize, degree: usize) -> Result<bool> {
    let alg = t_alg(n, degree);
    Ok(crate::liealg::project_tp(&t_total(&alg, n), n)?.is_zero())
}
