//! Elements `(lambda, f)` of the Grothendieck-Teichmuller semigroup: discrete ones with `f` in the free
//! group `F_2`, and pro-unipotent ones with `f = exp(log f)` in `exp(f_2^{<=N})`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::assoc::{discrepancy, from_per_degree, i_phi_between, per_degree, solve_associator, swap_ab};
use crate::braid::{braid_eq, pure_gen, BraidWord};
use crate::error::{Error, Result};
use crate::exactalg::Rational;
use crate::freegroup::FreeWord;
use crate::liealg::{bch, exp_ad, free2, scale_vec, solve_degreewise, substitute, t_alg, AlgKind, GroupLike, LieElement, Residual};
use crate::univcat::ParenTree;

#[derive(Clone, Debug, PartialEq)]
pub enum GtElement {
    Discrete { lambda: i64, f: FreeWord },
    Pro { lambda: Rational, degree: usize, log_f: Vec<Rational> },
}

/// Outcome of the three defining relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GtReport {
    pub duality: bool,
    pub hexagon: bool,
    pub pentagon: bool,
}

impl GtReport {
    pub fn all(&self) -> bool {
        self.duality && self.hexagon && self.pentagon
    }

    pub fn to_json(&self) -> Value {
        json!({ "duality": self.duality, "hexagon": self.hexagon, "pentagon": self.pentagon, "valid": self.all() })
    }
}

impl GtElement {
    pub fn identity_discrete() -> Self {
        GtElement::Discrete { lambda: 1, f: FreeWord::identity(2) }
    }

    pub fn identity_pro(degree: usize) -> Self {
        GtElement::Pro { lambda: Rational::one(), degree, log_f: vec![Rational::zero(); free2(degree).dim()] }
    }

    pub fn discrete(lambda: i64, f: FreeWord) -> Result<Self> {
        if f.rank() != 2 {
            return Err(Error::Dimension(format!("f must lie in F_2, got rank {}", f.rank())));
        }
        Ok(GtElement::Discrete { lambda, f })
    }

    pub fn pro(lambda: Rational, degree: usize, log_f: Vec<Rational>) -> Result<Self> {
        if log_f.len() != free2(degree).dim() {
            return Err(Error::Dimension(format!("log f needs {} coordinates", free2(degree).dim())));
        }
        Ok(GtElement::Pro { lambda, degree, log_f })
    }

    pub fn lambda(&self) -> Rational {
        match self {
            GtElement::Discrete { lambda, .. } => Rational::int(*lambda),
            GtElement::Pro { lambda, .. } => lambda.clone(),
        }
    }

    /// `m = (lambda - 1) / 2`.
    pub fn m(&self) -> Rational {
        &(&self.lambda() - &Rational::one()) / &Rational::int(2)
    }

    pub fn degree(&self) -> Option<usize> {
        match self {
            GtElement::Discrete { .. } => None,
            GtElement::Pro { degree, .. } => Some(*degree),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            GtElement::Discrete { lambda, f } => *lambda == 1 && f.is_identity(),
            GtElement::Pro { lambda, log_f, .. } => lambda.is_one() && log_f.iter().all(Rational::is_zero),
        }
    }

    /// `{"lambda": 3, "f": {...}}` or `{"lambda": "p/q", "N": N, "logf": [[degree 1], ...]}`.
    pub fn to_json(&self) -> Value {
        match self {
            GtElement::Discrete { lambda, f } => json!({ "lambda": lambda, "f": f }),
            GtElement::Pro { lambda, degree, log_f } => {
                json!({ "lambda": lambda, "N": degree, "logf": per_degree(&free2(*degree), log_f) })
            }
        }
    }

    /// Parses either form; a pro element without `N` takes `default_degree`.
    pub fn from_json(v: &Value, default_degree: usize) -> Result<Self> {
        let parse = |e: serde_json::Error| Error::Parse(e.to_string());
        if let Some(f) = v.get("f") {
            let lambda = v.get("lambda").and_then(|l| l.as_i64().or_else(|| l.as_str().and_then(|s| s.trim().parse().ok()))).ok_or_else(|| Error::Parse("discrete lambda must be an integer".into()))?;
            return GtElement::discrete(lambda, serde_json::from_value(f.clone()).map_err(parse)?);
        }
        let lambda: Rational = serde_json::from_value(v.get("lambda").cloned().unwrap_or(json!("1"))).map_err(parse)?;
        let degree = v.get("N").and_then(Value::as_u64).map(|d| d as usize).unwrap_or(default_degree);
        let log_f = match v.get("logf") {
            Some(l) => from_per_degree(&free2(degree), l)?,
            None => vec![Rational::zero(); free2(degree).dim()],
        };
        GtElement::pro(lambda, degree, log_f)
    }
}

/// `x_{ij}` in `P_4`, as braids, in the order used by the coface maps.
fn coface_args_braid() -> Result<[(BraidWord, BraidWord); 5]> {
    let x = |i, j| pure_gen(4, i, j);
    Ok([
        (x(2, 3)?, x(3, 4)?),
        (x(1, 3)?.mul(&x(2, 3)?)?, x(3, 4)?),
        (x(1, 2)?.mul(&x(1, 3)?)?, x(2, 4)?.mul(&x(3, 4)?)?),
        (x(1, 2)?, x(2, 3)?.mul(&x(2, 4)?)?),
        (x(1, 2)?, x(2, 3)?),
    ])
}

/// `f(u, v)` for a word `f` in a group given by `mul`.
pub fn eval_word<E: Clone>(f: &FreeWord, id: E, u: &E, v: &E, mul: &dyn Fn(&E, &E) -> Result<E>, inv: &dyn Fn(&E) -> E) -> Result<E> {
    let (ui, vi) = (inv(u), inv(v));
    let mut out = id;
    for (g, e) in f.letters() {
        let x = match (g, e > 0) {
            (1, true) => u,
            (1, false) => &ui,
            (_, true) => v,
            (_, false) => &vi,
        };
        out = mul(&out, x)?;
    }
    Ok(out)
}

fn braid_f(f: &FreeWord, u: &BraidWord, v: &BraidWord) -> Result<BraidWord> {
    eval_word(f, BraidWord::identity(u.strands()), u, v, &|a, b| a.mul(b), &|a| a.inv())
}

/// The images of the pentagon's `x_{ij}` arguments in `exp(t_4^{<=N})` under `i_Phi` on the right comb
/// (an isomorphism `P_4(Q) -> exp(t_4)` at `mu = 1`).
fn coface_args_graded(degree: usize) -> Result<Vec<(GroupLike, GroupLike)>> {
    let a = solve_associator(degree, &Rational::one())?;
    let comb = ParenTree::right_comb(4);
    coface_args_braid()?
        .iter()
        .map(|(u, v)| Ok((i_phi_between(&comb, &comb, &a, u)?, i_phi_between(&comb, &comb, &a, v)?)))
        .collect()
}

/// `exp(log f (log u, log v))` for pure `u, v`.
pub fn pro_f(log_f: &[Rational], degree: usize, u: &GroupLike, v: &GroupLike) -> Result<GroupLike> {
    if !u.is_pure() || !v.is_pure() {
        return Err(Error::Invalid("f is evaluated at pure elements".into()));
    }
    if u.degree() != degree || v.degree() != degree {
        return Err(Error::Dimension(format!("f at degree {degree} evaluated at degree {}", u.degree())));
    }
    let log = substitute(log_f, &free2(degree), &u.alg, &[u.log.clone(), v.log.clone()]);
    Ok(GroupLike { log, ..u.clone() })
}

/// Residuals of duality and hexagon (in `f_2`) and pentagon (in `t_4`) for a pro element.
pub fn gt_residuals(lambda: &Rational, degree: usize, log_f: &[Rational]) -> Result<Vec<Residual>> {
    let f2 = free2(degree);
    let dim = f2.dim();
    let duality = bch(&f2, &swap_ab(&f2, log_f), log_f);
    let m = &(lambda - &Rational::one()) / &Rational::int(2);
    let (a, b) = (LieElement::gen(&f2, 0).coords, LieElement::gen(&f2, 1).coords);
    let x3 = scale_vec(&bch(&f2, &a, &b), &-Rational::one());
    let at = |p: &[Rational], q: &[Rational]| substitute(log_f, &f2, &f2, &[p.to_vec(), q.to_vec()]);
    let factors = [at(&x3, &a), scale_vec(&x3, &m), at(&b, &x3), scale_vec(&b, &m), at(&a, &b), scale_vec(&a, &m)];
    let mut hex = vec![Rational::zero(); dim];
    for x in &factors {
        hex = bch(&f2, &hex, x);
    }
    let args = coface_args_graded(degree)?;
    let d: Vec<GroupLike> = args.iter().map(|(u, v)| pro_f(log_f, degree, u, v)).collect::<Result<_>>()?;
    let lhs = d[3].mul(&d[1])?;
    let rhs = d[0].mul(&d[2])?.mul(&d[4])?;
    let t4 = t_alg(4, degree);
    Ok(vec![(f2.clone(), duality), (f2, hex), (t4, discrepancy(&lhs, &rhs)?)])
}

fn zero(r: &[Residual]) -> bool {
    r.iter().all(|(_, v)| v.iter().all(Rational::is_zero))
}

/// Evaluates duality, hexagon (with `X_1 X_2 X_3 = 1`, `m = (lambda-1)/2`) and the pentagon
/// `d3(f) d1(f) = d0(f) d2(f) d4(f)` in `P_4`.
pub fn check_gt_relations(e: &GtElement) -> Result<GtReport> {
    match e {
        GtElement::Discrete { lambda, f } => {
            if lambda.rem_euclid(2) != 1 {
                return Err(Error::Invalid(format!("lambda = {lambda} must be odd")));
            }
            let m = (lambda - 1) / 2;
            let (x, y) = (FreeWord::gen(2, 1)?, FreeWord::gen(2, 2)?);
            let duality = f.substitute(&[y.clone(), x.clone()])? == f.inv();
            let x3 = x.mul(&y)?.inv();
            let at = |p: &FreeWord, q: &FreeWord| f.substitute(&[p.clone(), q.clone()]);
            let hex = [at(&x3, &x)?, x3.pow(m), at(&y, &x3)?, y.pow(m), at(&x, &y)?, x.pow(m)];
            let mut acc = FreeWord::identity(2);
            for w in &hex {
                acc = acc.mul(w)?;
            }
            let args = coface_args_braid()?;
            let d: Vec<BraidWord> = args.iter().map(|(u, v)| braid_f(f, u, v)).collect::<Result<_>>()?;
            let lhs = d[3].mul(&d[1])?;
            let rhs = d[0].mul(&d[2])?.mul(&d[4])?;
            Ok(GtReport { duality, hexagon: acc.is_identity(), pentagon: braid_eq(&lhs, &rhs)? })
        }
        GtElement::Pro { lambda, degree, log_f } => {
            let r = gt_residuals(lambda, *degree, log_f)?;
            Ok(GtReport { duality: zero(&r[..1]), hexagon: zero(&r[1..2]), pentagon: zero(&r[2..]) })
        }
    }
}

/// A pro element with the given `lambda`, solving the relations degree by degree; free coordinates
/// are drawn from small rationals with the given seed.
pub fn solve_gt(lambda: &Rational, degree: usize, seed: u64) -> Result<GtElement> {
    if lambda.is_zero() {
        return Err(Error::Invalid("lambda must be invertible".into()));
    }
    let f2 = free2(degree);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let res = |x: &[Rational]| gt_residuals(lambda, degree, x);
    let log_f = solve_degreewise(&f2, vec![Rational::zero(); f2.dim()], 1, degree, &res, &mut |_, _| {
        Rational::new(rng.gen_range(-3..=3), rng.gen_range(1..=3)).expect("nonzero denominator")
    })?;
    GtElement::pro(lambda.clone(), degree, log_f)
}

/// `(lambda, f)(lambda', f') = (lambda lambda', theta(f) f')` with
/// `theta: X -> f' X^{lambda'} f'^{-1}, Y -> Y^{lambda'}`.
pub fn gt_mul(a: &GtElement, b: &GtElement) -> Result<GtElement> {
    match (a, b) {
        (GtElement::Discrete { lambda: l1, f: f1 }, GtElement::Discrete { lambda: l2, f: f2w }) => {
            let (x, y) = (FreeWord::gen(2, 1)?, FreeWord::gen(2, 2)?);
            let tx = f2w.mul(&x.pow(*l2))?.mul(&f2w.inv())?;
            let f = f1.substitute(&[tx, y.pow(*l2)])?.mul(f2w)?;
            GtElement::discrete(l1 * l2, f)
        }
        (GtElement::Pro { lambda: l1, degree: d1, log_f: f1 }, GtElement::Pro { lambda: l2, degree: d2, log_f: f2v }) => {
            if d1 != d2 {
                return Err(Error::Dimension(format!("truncation degrees {d1} and {d2}")));
            }
            let alg = free2(*d1);
            let (x, y) = (LieElement::gen(&alg, 0).coords, LieElement::gen(&alg, 1).coords);
            let tx = exp_ad(&alg, f2v, &scale_vec(&x, l2));
            let theta_f = substitute(f1, &alg, &alg, &[tx, scale_vec(&y, l2)]);
            GtElement::pro(l1 * l2, *d1, bch(&alg, &theta_f, f2v))
        }
        _ => Err(Error::Invalid("cannot multiply a discrete and a pro element".into())),
    }
}

/// The pro element determined by a discrete one at truncation `degree` (via `log` in `f_2`).
pub fn to_pro(e: &GtElement, degree: usize) -> Result<GtElement> {
    match e {
        GtElement::Pro { .. } => Ok(e.clone()),
        GtElement::Discrete { lambda, f } => {
            let alg = free2(degree);
            let g = |k| GroupLike { kind: AlgKind::Free(2), alg: alg.clone(), log: LieElement::gen(&alg, k).coords, perm: crate::perm::Perm::identity(0) };
            let w = eval_word(f, GroupLike::identity(AlgKind::Free(2), degree), &g(0), &g(1), &|a, b| a.mul(b), &|a| a.inv())?;
            GtElement::pro(Rational::int(*lambda), degree, w.log)
        }
    }
}
