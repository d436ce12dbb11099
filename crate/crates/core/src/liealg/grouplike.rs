//! Group-like elements `exp(x) * pi` of `exp(g^{<=N}) x| S_n`, stored by their logarithm.

use std::sync::Arc;

use super::algebra::LieAlgebra;
use super::bch::{bch, exp_ad};
use super::element::{scale_vec, LieElement};
use super::registry::{algebra, perm_map, project_map, AlgKind};
use crate::error::{Error, Result};
use crate::exactalg::Rational;
use crate::perm::Perm;

/// `(u, pi)` standing for `exp(u) pi`; `(u,pi)(v,rho) = (log(e^u e^{pi(v)}), pi rho)`.
#[derive(Clone)]
pub struct GroupLike {
    pub kind: AlgKind,
    pub alg: Arc<LieAlgebra>,
    pub log: Vec<Rational>,
    pub perm: Perm,
}

impl std::fmt::Debug for GroupLike {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "exp({}) {:?}", self.log_element().pretty(), self.perm)
    }
}

impl GroupLike {
    pub fn identity(kind: AlgKind, degree: usize) -> Self {
        let alg = algebra(kind, degree);
        let n = kind.strands().unwrap_or(0);
        GroupLike { kind, log: vec![Rational::zero(); alg.dim()], alg, perm: Perm::identity(n) }
    }

    pub fn new(kind: AlgKind, alg: &Arc<LieAlgebra>, log: Vec<Rational>, perm: Perm) -> Result<Self> {
        if log.len() != alg.dim() {
            return Err(Error::Dimension("log coordinates".into()));
        }
        if perm.len() != kind.strands().unwrap_or(0) {
            return Err(Error::Dimension(format!("permutation of {} in {}", perm.len(), kind.label())));
        }
        Ok(GroupLike { kind, alg: alg.clone(), log, perm })
    }

    pub fn exp(x: &LieElement, kind: AlgKind) -> Self {
        let n = kind.strands().unwrap_or(0);
        GroupLike { kind, alg: x.alg.clone(), log: x.coords.clone(), perm: Perm::identity(n) }
    }

    pub fn from_perm(kind: AlgKind, degree: usize, perm: Perm) -> Self {
        let mut g = Self::identity(kind, degree);
        assert_eq!(perm.len(), kind.strands().unwrap_or(0), "permutation size");
        g.perm = perm;
        g
    }

    pub fn degree(&self) -> usize {
        self.alg.degree
    }

    /// `{"algebra": "t_n", "N": N, "log": [[degree 1], ...], "perm": [one-based images]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let blocks: Vec<Vec<Rational>> = (1..=self.alg.dims().len()).map(|d| self.log[self.alg.degree_range(d)].to_vec()).collect();
        serde_json::json!({
            "algebra": self.kind.label(),
            "N": self.degree(),
            "log": blocks,
            "perm": self.perm.images().iter().map(|i| i + 1).collect::<Vec<_>>(),
        })
    }

    pub fn log_element(&self) -> LieElement {
        LieElement { alg: self.alg.clone(), coords: self.log.clone() }
    }

    fn check(&self, o: &GroupLike) -> Result<()> {
        if self.kind != o.kind || !Arc::ptr_eq(&self.alg, &o.alg) {
            return Err(Error::Dimension(format!("group-like elements over {} and {}", self.alg.name, o.alg.name)));
        }
        Ok(())
    }

    /// Action of the permutation part on a Lie element.
    pub fn permute(&self, p: &Perm, x: &[Rational]) -> Vec<Rational> {
        if p.is_identity() {
            return x.to_vec();
        }
        perm_map(self.kind, self.alg.degree, p).apply(x)
    }

    pub fn mul(&self, o: &GroupLike) -> Result<GroupLike> {
        self.check(o)?;
        let moved = self.permute(&self.perm, &o.log);
        Ok(GroupLike {
            kind: self.kind,
            alg: self.alg.clone(),
            log: bch(&self.alg, &self.log, &moved),
            perm: self.perm.compose(&o.perm),
        })
    }

    pub fn inv(&self) -> GroupLike {
        let pinv = self.perm.inverse();
        let log = scale_vec(&self.permute(&pinv, &self.log), &-Rational::one());
        GroupLike { kind: self.kind, alg: self.alg.clone(), log, perm: pinv }
    }

    /// Rational power of a pure element.
    pub fn pow(&self, k: &Rational) -> Result<GroupLike> {
        if self.perm.is_identity() {
            return Ok(GroupLike { log: scale_vec(&self.log, k), ..self.clone() });
        }
        let Some(k) = k.to_i64() else {
            return Err(Error::Invalid("non-integer power of a non-pure element".into()));
        };
        let base = if k < 0 { self.inv() } else { self.clone() };
        let mut out = GroupLike { log: vec![Rational::zero(); self.alg.dim()], perm: Perm::identity(self.perm.len()), ..self.clone() };
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base)?;
        }
        Ok(out)
    }

    /// `g x g^{-1}` for a Lie element `x`.
    pub fn ad(&self, x: &[Rational]) -> Vec<Rational> {
        exp_ad(&self.alg, &self.log, &self.permute(&self.perm, x))
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.log.iter().all(|c| c.is_zero())
    }

    pub fn is_pure(&self) -> bool {
        self.perm.is_identity()
    }

    /// Image under `t_n -> p_n`.
    pub fn project(&self) -> Result<GroupLike> {
        let AlgKind::T(n) = self.kind else {
            return Err(Error::Invalid("projection from an algebra other than t_n".into()));
        };
        let f = project_map(n, self.alg.degree);
        Ok(GroupLike { kind: AlgKind::P(n), alg: f.tgt.clone(), log: f.apply_coords(&self.log), perm: self.perm.clone() })
    }

    /// Keeps degrees `<= d` of the logarithm.
    pub fn truncated(&self, d: usize) -> GroupLike {
        GroupLike { log: self.log_element().truncated(d).coords, ..self.clone() }
    }
}

impl PartialEq for GroupLike {
    fn eq(&self, o: &Self) -> bool {
        self.kind == o.kind && Arc::ptr_eq(&self.alg, &o.alg) && self.perm == o.perm && self.log == o.log
    }
}
