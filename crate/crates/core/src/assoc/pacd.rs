//! The category of parenthesized chord diagrams with the braided structure given by an associator,
//! realized as the groups `exp(t_n^{<=N}) x| S_n`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactalg::Rational;
use crate::liealg::{free2, insertion, substitute, t_alg, t_gen, t_total, AlgKind, GroupLike, LieAlgebra, LieElement};
use crate::perm::Perm;
use crate::univcat::Structure;

/// `t_{X,Y} = sum_{a in X, b in Y} t_{ab}` for consecutive blocks starting at leaf `offset + 1`.
pub fn t_between(alg: &Arc<LieAlgebra>, n: usize, offset: usize, x: usize, y: usize) -> LieElement {
    let mut e = LieElement::zero(alg);
    for a in offset + 1..=offset + x {
        for b in offset + x + 1..=offset + x + y {
            e = e.add(&t_gen(alg, n, a, b)).expect("same algebra");
        }
    }
    e
}

/// Braided structure on PaCD from `(mu, Phi)`: `beta = c exp(mu t_{XY}/2)`, `a = Phi(t_{XY}, t_{YZ})`,
/// `theta_X = exp(mu t_X)`, `a_X = exp(mu t_X / 2) * reversal`.
#[derive(Clone, Debug)]
pub struct PacdStructure {
    pub degree: usize,
    pub mu: Rational,
    /// `log Phi` in the free Lie algebra on `A, B`.
    pub log_phi: Vec<Rational>,
}

impl PacdStructure {
    pub fn new(degree: usize, mu: Rational, log_phi: Vec<Rational>) -> Result<Self> {
        if mu.is_zero() {
            return Err(Error::Invalid("mu must be invertible".into()));
        }
        if log_phi.len() != free2(degree).dim() {
            return Err(Error::Dimension("log Phi coordinates".into()));
        }
        Ok(PacdStructure { degree, mu, log_phi })
    }

    /// Trivial associator `Phi = 1`.
    pub fn trivial(degree: usize, mu: Rational) -> Self {
        PacdStructure { degree, mu, log_phi: vec![Rational::zero(); free2(degree).dim()] }
    }

    pub fn pure(&self, n: usize, x: &LieElement) -> GroupLike {
        GroupLike::exp(x, AlgKind::T(n))
    }

    /// `Phi^{X,Y,Z}` evaluated at arbitrary Lie elements `A`, `B` of `t_n`.
    pub fn phi_at(&self, n: usize, a: &[Rational], b: &[Rational]) -> GroupLike {
        let alg = t_alg(n, self.degree);
        let f2 = free2(self.degree);
        let log = substitute(&self.log_phi, &f2, &alg, &[a.to_vec(), b.to_vec()]);
        GroupLike { kind: AlgKind::T(n), alg, log, perm: Perm::identity(n) }
    }
}

impl Structure for PacdStructure {
    type Elem = GroupLike;

    fn identity(&self, n: usize) -> GroupLike {
        GroupLike::identity(AlgKind::T(n), self.degree)
    }

    fn compose(&self, g: &GroupLike, f: &GroupLike) -> Result<GroupLike> {
        g.mul(f)
    }

    fn inverse(&self, e: &GroupLike) -> GroupLike {
        e.inv()
    }

    fn whisker(&self, left: usize, e: &GroupLike, n: usize, right: usize) -> Result<GroupLike> {
        if e.kind != AlgKind::T(n) {
            return Err(Error::Dimension(format!("element of {} whiskered as size {n}", e.kind.label())));
        }
        let total = left + n + right;
        if left == 0 && right == 0 {
            return Ok(e.clone());
        }
        let blocks: Vec<Vec<usize>> = (left + 1..=left + n).map(|i| vec![i]).collect();
        let f = insertion(n, total, &blocks, self.degree)?;
        let perm = Perm::identity(left).juxtapose(&e.perm).juxtapose(&Perm::identity(right));
        Ok(GroupLike { kind: AlgKind::T(total), alg: f.tgt.clone(), log: f.apply_coords(&e.log), perm })
    }

    fn equal(&self, a: &GroupLike, b: &GroupLike) -> Result<bool> {
        Ok(a == b)
    }

    fn power(&self, e: &GroupLike, k: &Rational) -> Result<GroupLike> {
        e.pow(k)
    }

    fn beta(&self, n: usize, m: usize) -> Result<GroupLike> {
        let alg = t_alg(n + m, self.degree);
        let t = t_between(&alg, n + m, 0, n, m).scale(&(&self.mu / &Rational::int(2)));
        let c = GroupLike::from_perm(AlgKind::T(n + m), self.degree, Perm::block_swap(n, m));
        c.mul(&self.pure(n + m, &t))
    }

    fn assoc(&self, a: usize, b: usize, c: usize) -> Result<GroupLike> {
        let n = a + b + c;
        let alg = t_alg(n, self.degree);
        let x = t_between(&alg, n, 0, a, b);
        let y = t_between(&alg, n, a, b, c);
        Ok(self.phi_at(n, &x.coords, &y.coords))
    }

    fn theta(&self, n: usize) -> Result<GroupLike> {
        let alg = t_alg(n, self.degree);
        Ok(self.pure(n, &t_total(&alg, n).scale(&self.mu)))
    }

    fn hbal(&self, n: usize) -> Result<GroupLike> {
        let alg = t_alg(n, self.degree);
        let half = t_total(&alg, n).scale(&(&self.mu / &Rational::int(2)));
        let rev = GroupLike::from_perm(AlgKind::T(n), self.degree, Perm::reversal(n));
        self.pure(n, &half).mul(&rev)
    }
}

/// `log(lhs rhs^{-1})`, requiring equal permutations.
pub fn discrepancy(lhs: &GroupLike, rhs: &GroupLike) -> Result<Vec<Rational>> {
    if lhs.perm != rhs.perm {
        return Err(Error::Law(format!("permutations differ: {:?} vs {:?}", lhs.perm, rhs.perm)));
    }
    Ok(lhs.mul(&rhs.inv())?.log)
}
