//! Drinfeld associators `(mu, Phi)` at a finite truncation degree.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde_json::{json, Value};

use super::pacd::{discrepancy, PacdStructure};
use crate::error::{Error, Result};
use crate::exactalg::Rational;
use crate::liealg::{bch, free2, solve_degreewise, substitute, LieAlgebra, LieElement, Residual};
use crate::univcat::axioms;

#[derive(Clone, Debug, PartialEq)]
pub struct Associator {
    pub mu: Rational,
    pub degree: usize,
    /// `log Phi` on the Lyndon basis of the free Lie algebra on `A = t12`, `B = t23`.
    pub log_phi: Vec<Rational>,
}

/// `x(B, A)` for `x` in the free Lie algebra on `A, B`.
pub fn swap_ab(f2: &LieAlgebra, x: &[Rational]) -> Vec<Rational> {
    let n = f2.dim();
    let unit = |g: usize| {
        let mut v = vec![Rational::zero(); n];
        v[f2.degree_range(1).start + g] = Rational::one();
        v
    };
    substitute(x, f2, f2, &[unit(1), unit(0)])
}

/// Residuals of the duality, both hexagons and the pentagon for `(mu, log Phi)`.
pub fn associator_residuals(degree: usize, mu: &Rational, log_phi: &[Rational]) -> Result<Vec<Residual>> {
    let f2 = free2(degree);
    let duality = bch(&f2, &swap_ab(&f2, log_phi), log_phi);
    let s = PacdStructure::new(degree, mu.clone(), log_phi.to_vec())?;
    let (l1, r1) = axioms::hexagon1_sides(&s, 1, 1, 1)?;
    let (l2, r2) = axioms::hexagon2_sides(&s, 1, 1, 1)?;
    let (l3, r3) = axioms::pentagon_sides(&s, 1, 1, 1, 1)?;
    Ok(vec![
        (f2.clone(), duality),
        (l1.alg.clone(), discrepancy(&l1, &r1)?),
        (l2.alg.clone(), discrepancy(&l2, &r2)?),
        (l3.alg.clone(), discrepancy(&l3, &r3)?),
    ])
}

fn solve_uncached(degree: usize, mu: &Rational) -> Result<Associator> {
    if degree == 0 {
        return Err(Error::Invalid("truncation degree must be at least 1".into()));
    }
    if mu.is_zero() {
        return Err(Error::Invalid("mu must be invertible".into()));
    }
    let f2 = free2(degree);
    let res = |x: &[Rational]| associator_residuals(degree, mu, x);
    let log_phi = solve_degreewise(&f2, vec![Rational::zero(); f2.dim()], 1, degree, &res, &mut |_, _| Rational::zero())?;
    Ok(Associator { mu: mu.clone(), degree, log_phi })
}

/// Solves duality, hexagons and pentagon degree by degree with free variables pinned to zero.
/// Results are cached per `(N, mu)`.
pub fn solve_associator(degree: usize, mu: &Rational) -> Result<Arc<Associator>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, String), Arc<Associator>>>> = OnceLock::new();
    let key = (degree, mu.to_string());
    let cache = CACHE.get_or_init(Default::default);
    if let Some(a) = cache.lock().expect("cache poisoned").get(&key) {
        return Ok(a.clone());
    }
    let a = Arc::new(solve_uncached(degree, mu)?);
    cache.lock().expect("cache poisoned").insert(key, a.clone());
    Ok(a)
}

impl Associator {
    pub fn new(degree: usize, mu: Rational, log_phi: Vec<Rational>) -> Result<Self> {
        if mu.is_zero() {
            return Err(Error::Invalid("mu must be invertible".into()));
        }
        if log_phi.len() != free2(degree).dim() {
            return Err(Error::Dimension(format!("log Phi needs {} coordinates", free2(degree).dim())));
        }
        Ok(Associator { mu, degree, log_phi })
    }

    pub fn structure(&self) -> PacdStructure {
        PacdStructure { degree: self.degree, mu: self.mu.clone(), log_phi: self.log_phi.clone() }
    }

    pub fn log_element(&self) -> LieElement {
        LieElement { alg: free2(self.degree), coords: self.log_phi.clone() }
    }

    pub fn residuals(&self) -> Result<Vec<Residual>> {
        associator_residuals(self.degree, &self.mu, &self.log_phi)
    }

    /// True iff all residuals vanish exactly.
    pub fn is_valid(&self) -> Result<bool> {
        Ok(self.residuals()?.iter().all(|(_, r)| r.iter().all(Rational::is_zero)))
    }

    /// `{"mu", "N", "logphi": [[coords of degree 1], [degree 2], ...], "basis": [...]}`.
    pub fn to_json(&self) -> Value {
        let f2 = free2(self.degree);
        json!({
            "mu": self.mu,
            "N": self.degree,
            "logphi": per_degree(&f2, &self.log_phi),
            "basis": (0..f2.dim()).map(|i| f2.describe_basis(i)).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let mu: Rational = serde_json::from_value(v.get("mu").cloned().unwrap_or(json!("1"))).map_err(|e| Error::Parse(e.to_string()))?;
        let degree = v.get("N").and_then(Value::as_u64).ok_or_else(|| Error::Parse("missing N".into()))? as usize;
        let log_phi = from_per_degree(&free2(degree), v.get("logphi").ok_or_else(|| Error::Parse("missing logphi".into()))?)?;
        Associator::new(degree, mu, log_phi)
    }
}

/// Splits coordinates into per-degree blocks.
pub fn per_degree(alg: &LieAlgebra, x: &[Rational]) -> Vec<Vec<Rational>> {
    (1..=alg.dims().len()).map(|d| x[alg.degree_range(d)].to_vec()).collect()
}

/// Inverse of [`per_degree`]; missing trailing degrees are zero.
pub fn from_per_degree(alg: &LieAlgebra, v: &Value) -> Result<Vec<Rational>> {
    let blocks: Vec<Vec<Rational>> = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    let mut out = vec![Rational::zero(); alg.dim()];
    if blocks.len() > alg.dims().len() {
        return Err(Error::Dimension(format!("{} degree blocks for truncation {}", blocks.len(), alg.dims().len())));
    }
    for (i, b) in blocks.iter().enumerate() {
        let r = alg.degree_range(i + 1);
        if b.len() != r.len() {
            return Err(Error::Dimension(format!("degree {} block has {} entries, expected {}", i + 1, b.len(), r.len())));
        }
        for (k, c) in r.zip(b) {
            out[k] = c.clone();
        }
    }
    Ok(out)
}
