//! Words in the structure constraints and their evaluation in any `Structure`.

use serde::{Deserialize, Serialize};

use super::structure::Structure;
use super::tree::ParenTree;
use crate::braid::BraidWord;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Elementary {
    /// `beta_{X,Y}`, sizes `(|X|, |Y|)`.
    Beta(usize, usize),
    /// `a_{X,Y,Z}`, sizes `(|X|, |Y|, |Z|)`.
    Assoc(usize, usize, usize),
    Theta(usize),
    /// The half-balancing `a_X`.
    HalfBal(usize),
    /// Unit constraints; strict, evaluate to identities.
    Unit(usize),
}

impl Elementary {
    pub fn size(&self) -> usize {
        match *self {
            Elementary::Beta(a, b) => a + b,
            Elementary::Assoc(a, b, c) => a + b + c,
            Elementary::Theta(n) | Elementary::HalfBal(n) | Elementary::Unit(n) => n,
        }
    }
}

/// One elementary constraint (or its inverse), tensored with identities on `left` and `right` strands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Step {
    pub kind: Elementary,
    pub inverse: bool,
    pub left: usize,
    pub right: usize,
}

impl Step {
    pub fn new(kind: Elementary, inverse: bool, left: usize, right: usize) -> Self {
        Step { kind, inverse, left, right }
    }

    pub fn total(&self) -> usize {
        self.left + self.kind.size() + self.right
    }

    pub fn inverted(&self) -> Step {
        Step { inverse: !self.inverse, ..*self }
    }
}

/// Steps in order of application (the first step is applied first).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintWord {
    pub strands: usize,
    pub src_tree: ParenTree,
    pub tgt_tree: ParenTree,
    pub steps: Vec<Step>,
}

impl ConstraintWord {
    pub fn identity(t: &ParenTree) -> Self {
        ConstraintWord { strands: t.leaves(), src_tree: t.clone(), tgt_tree: t.clone(), steps: Vec::new() }
    }

    pub fn inverse(&self) -> Self {
        ConstraintWord {
            strands: self.strands,
            src_tree: self.tgt_tree.clone(),
            tgt_tree: self.src_tree.clone(),
            steps: self.steps.iter().rev().map(|s| s.inverted()).collect(),
        }
    }

    /// `self` then `next`.
    pub fn then(&self, next: &ConstraintWord) -> Result<Self> {
        if self.tgt_tree != next.src_tree {
            return Err(Error::Invalid(format!("cannot compose: {} then {}", self.tgt_tree, next.src_tree)));
        }
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&next.steps);
        Ok(ConstraintWord { strands: self.strands, src_tree: self.src_tree.clone(), tgt_tree: next.tgt_tree.clone(), steps })
    }
}

/// Value of one step in a structure.
pub fn eval_step<S: Structure>(s: &S, st: &Step) -> Result<S::Elem> {
    let e = match st.kind {
        Elementary::Beta(a, b) => s.beta(a, b)?,
        Elementary::Assoc(a, b, c) => s.assoc(a, b, c)?,
        Elementary::Theta(n) => s.theta(n)?,
        Elementary::HalfBal(n) => s.hbal(n)?,
        Elementary::Unit(n) => s.identity(n),
    };
    let e = if st.inverse { s.inverse(&e) } else { e };
    if st.left == 0 && st.right == 0 {
        Ok(e)
    } else {
        s.whisker(st.left, &e, st.kind.size(), st.right)
    }
}

/// Composite of a list of steps (first applied first) on `n` strands.
pub fn eval_steps<S: Structure>(s: &S, n: usize, steps: &[Step]) -> Result<S::Elem> {
    let mut out = s.identity(n);
    for st in steps {
        if st.total() != n {
            return Err(Error::Dimension(format!("step on {} strands in a word on {n}", st.total())));
        }
        let e = eval_step(s, st)?;
        out = s.compose(&e, &out)?;
    }
    Ok(out)
}

pub fn eval_constraints<S: Structure>(w: &ConstraintWord, s: &S) -> Result<S::Elem> {
    check_composable(w)?;
    eval_steps(s, w.strands, &w.steps)
}

/// Follows the trees through the word; fails if some step does not apply.
pub fn check_composable(w: &ConstraintWord) -> Result<()> {
    let mut t = w.src_tree.clone();
    for st in &w.steps {
        t = apply_step_to_tree(&t, st)?;
    }
    if t != w.tgt_tree {
        return Err(Error::Invalid(format!("word ends at {t}, expected {}", w.tgt_tree)));
    }
    Ok(())
}

/// The tree after applying `st`; associators rotate the subtree at the given offset.
pub fn apply_step_to_tree(t: &ParenTree, st: &Step) -> Result<ParenTree> {
    match st.kind {
        Elementary::Assoc(a, b, c) => {
            let (from_l, from_r) = (a + b, c);
            let rotate = |sub: &ParenTree| -> Option<ParenTree> {
                match (sub, st.inverse) {
                    (ParenTree::Node(l, z), false) if l.leaves() == from_l && z.leaves() == from_r => match &**l {
                        ParenTree::Node(x, y) if x.leaves() == a && y.leaves() == b => {
                            Some(ParenTree::node((**x).clone(), ParenTree::node((**y).clone(), (**z).clone())))
                        }
                        _ => None,
                    },
                    (ParenTree::Node(x, r), true) if x.leaves() == a && r.leaves() == b + c => match &**r {
                        ParenTree::Node(y, z) if y.leaves() == b && z.leaves() == c => {
                            Some(ParenTree::node(ParenTree::node((**x).clone(), (**y).clone()), (**z).clone()))
                        }
                        _ => None,
                    },
                    _ => None,
                }
            };
            replace_subtree(t, st.left, a + b + c, &rotate)
                .ok_or_else(|| Error::Invalid(format!("associator {:?} does not apply to {t}", st)))
        }
        Elementary::Beta(a, b) => {
            let (x, y) = if st.inverse { (b, a) } else { (a, b) };
            let swap = |sub: &ParenTree| -> Option<ParenTree> {
                match sub {
                    ParenTree::Node(l, r) if l.leaves() == x && r.leaves() == y => Some(ParenTree::node((**r).clone(), (**l).clone())),
                    _ => None,
                }
            };
            replace_subtree(t, st.left, a + b, &swap)
                .ok_or_else(|| Error::Invalid(format!("braiding {:?} does not apply to {t}", st)))
        }
        Elementary::HalfBal(n) => {
            let mirror = |sub: &ParenTree| Some(super::tree::tree_mirror(sub));
            if n == 1 {
                return Ok(t.clone());
            }
            replace_subtree(t, st.left, n, &mirror).ok_or_else(|| Error::Invalid(format!("half-balancing does not apply to {t}")))
        }
        Elementary::Theta(_) | Elementary::Unit(_) => Ok(t.clone()),
    }
}

/// Applies `f` to the subtree spanning leaves `offset..offset+size` (if it is a subtree).
fn replace_subtree(t: &ParenTree, offset: usize, size: usize, f: &dyn Fn(&ParenTree) -> Option<ParenTree>) -> Option<ParenTree> {
    if offset == 0 && t.leaves() == size {
        if let Some(r) = f(t) {
            return Some(r);
        }
    }
    match t {
        ParenTree::Node(l, r) => {
            let nl = l.leaves();
            if offset + size <= nl {
                replace_subtree(l, offset, size, f).map(|x| ParenTree::node(x, (**r).clone()))
            } else if offset >= nl {
                replace_subtree(r, offset - nl, size, f).map(|x| ParenTree::node((**l).clone(), x))
            } else {
                None
            }
        }
        _ => None,
    }
}

/// Associator steps turning `t` into the right comb.
pub fn to_right_comb(t: &ParenTree) -> Vec<Step> {
    fn go(t: &ParenTree, offset: usize, total: usize, out: &mut Vec<Step>) {
        let mut cur = t.clone();
        loop {
            match &cur {
                ParenTree::Node(l, r) => match &**l {
                    ParenTree::Node(x, y) => {
                        let (a, b, c) = (x.leaves(), y.leaves(), r.leaves());
                        out.push(Step::new(Elementary::Assoc(a, b, c), false, offset, total - offset - a - b - c));
                        cur = ParenTree::node((**x).clone(), ParenTree::node((**y).clone(), (**r).clone()));
                    }
                    _ => {
                        let r = (**r).clone();
                        go(&r, offset + 1, total, out);
                        return;
                    }
                },
                _ => return,
            }
        }
    }
    let mut out = Vec::new();
    go(t, 0, t.leaves(), &mut out);
    out
}

/// Factors the parenthesized braid `b: (src, s) -> (tgt, s')` into constraints: move to the right
/// comb, realize each letter (rightmost first) as a whiskered braiding of two adjacent leaves,
/// then move to the target tree.
pub fn decompose_to_constraints(b: &BraidWord, src: &ParenTree, tgt: &ParenTree) -> Result<ConstraintWord> {
    let n = src.leaves();
    if tgt.leaves() != n || (n > 0 && b.strands() != n) {
        return Err(Error::Dimension(format!("braid on {} strands between trees with {} and {} leaves", b.strands(), n, tgt.leaves())));
    }
    let mut steps = to_right_comb(src);
    for &(i, e) in b.letters().iter().rev() {
        let inverse = e < 0;
        if i + 1 == n {
            steps.push(Step::new(Elementary::Beta(1, 1), inverse, n - 2, 0));
        } else {
            let rest = n - i - 1;
            steps.push(Step::new(Elementary::Assoc(1, 1, rest), true, i - 1, 0));
            steps.push(Step::new(Elementary::Beta(1, 1), inverse, i - 1, rest));
            steps.push(Step::new(Elementary::Assoc(1, 1, rest), false, i - 1, 0));
        }
    }
    let back: Vec<Step> = to_right_comb(tgt).iter().rev().map(|s| s.inverted()).collect();
    steps.extend(back);
    let w = ConstraintWord { strands: n, src_tree: src.clone(), tgt_tree: tgt.clone(), steps };
    check_composable(&w)?;
    Ok(w)
}
