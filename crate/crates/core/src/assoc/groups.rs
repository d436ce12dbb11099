//! `Gamma_{0,n}` with equality through the truncated graded representation, and the graded
//! replacement `exp(p_n) x| S_n`.

use std::sync::Arc;

use super::associator::{solve_associator, Associator};
use super::graded::gamma_rep;
use crate::braid::BraidWord;
use crate::catcore::{build_cgs, dihedral_decompose, dihedral_gens, braid_lift, Cgs, PermGroup, Quotient};
use crate::error::{Error, Result};
use crate::exactalg::Rational;
use crate::liealg::{AlgKind, GroupLike};
use crate::perm::Perm;
use crate::univcat::ParenTree;

/// `Gamma_{0,n} = B_n / <z_n, sphere relator>`; two braids are identified when their images in
/// `exp(p_n^{<=N}) x| S_n` agree.
#[derive(Clone, Debug)]
pub struct Gamma0n {
    pub n: usize,
    pub assoc: Arc<Associator>,
}

impl Gamma0n {
    pub fn new(n: usize, degree: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Invalid("Gamma_{0,n} needs n >= 3".into()));
        }
        Ok(Gamma0n { n, assoc: solve_associator(degree, &Rational::one())? })
    }

    pub fn image(&self, b: &BraidWord) -> Result<GroupLike> {
        gamma_rep(&ParenTree::right_comb(self.n), &self.assoc, b)
    }
}

impl PermGroup for Gamma0n {
    type Elem = BraidWord;
    fn name(&self) -> String {
        format!("Gamma_{{0,{}}}", self.n)
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
        if a.perm() != b.perm() {
            return Ok(false);
        }
        Ok(self.image(a)? == self.image(b)?)
    }
    fn perm(&self, a: &BraidWord) -> Perm {
        a.perm()
    }
}

/// `exp(p_n^{<=N}) x| S_n`.
#[derive(Clone, Copy, Debug)]
pub struct GradedGamma {
    pub n: usize,
    pub degree: usize,
}

impl PermGroup for GradedGamma {
    type Elem = GroupLike;
    fn name(&self) -> String {
        format!("exp(p_{}) x| S_{}", self.n, self.n)
    }
    fn degree(&self) -> usize {
        self.n
    }
    fn identity(&self) -> GroupLike {
        GroupLike::identity(AlgKind::P(self.n), self.degree)
    }
    fn mul(&self, a: &GroupLike, b: &GroupLike) -> Result<GroupLike> {
        a.mul(b)
    }
    fn inv(&self, a: &GroupLike) -> GroupLike {
        a.inv()
    }
    fn eq(&self, a: &GroupLike, b: &GroupLike) -> Result<bool> {
        Ok(a == b)
    }
    fn perm(&self, a: &GroupLike) -> Perm {
        a.perm.clone()
    }
}

/// `Dih(S) = C_{D_n, Gamma_{0,n}, S}` with lift `c^k r^e -> rho^k h_n^e`.
pub fn dih_groupoid(letters: Vec<String>, degree: usize) -> Result<Quotient<Cgs<Gamma0n>, Perm>> {
    let n = letters.len();
    build_cgs(Gamma0n::new(n, degree)?, dihedral_gens(n), Arc::new(braid_lift(n)), letters)
}

/// The graded analogue with `G = exp(p_n) x| S_n` and lift `gamma -> (1, gamma)`.
pub fn dih_graded_groupoid(letters: Vec<String>, degree: usize) -> Result<Quotient<Cgs<GradedGamma>, Perm>> {
    let n = letters.len();
    let lift = move |g: &Perm| {
        dihedral_decompose(g).ok_or_else(|| Error::Invalid(format!("{g:?} is not dihedral")))?;
        Ok(GroupLike::from_perm(AlgKind::P(n), degree, g.clone()))
    };
    build_cgs(GradedGamma { n, degree }, dihedral_gens(n), Arc::new(lift), letters)
}
