//! Degree-by-degree solution of equations whose degree-`d` part is affine in the degree-`d`
//! part of the unknown once lower degrees are fixed.

use std::sync::Arc;

use super::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::exactalg::{free_columns, mat_solve_with, RatMatrix, Rational};

/// A residual component: coordinates in some truncated Lie algebra.
pub type Residual = (Arc<LieAlgebra>, Vec<Rational>);

fn part(r: &Residual, d: usize) -> Vec<Rational> {
    r.1[r.0.degree_range(d)].to_vec()
}

/// Solves `residual(x) = 0` degree by degree for `x` in `unknown`, starting from `start` and
/// solving degrees `from..=to`. Free variables at degree `d` take `free_value(d, k)` where `k`
/// is the index within that degree.
pub fn solve_degreewise(
    unknown: &Arc<LieAlgebra>,
    start: Vec<Rational>,
    from: usize,
    to: usize,
    residual: &dyn Fn(&[Rational]) -> Result<Vec<Residual>>,
    free_value: &mut dyn FnMut(usize, usize) -> Rational,
) -> Result<Vec<Rational>> {
    let mut x = start;
    for d in from..=to {
        let r0 = residual(&x)?;
        for lower in 1..d {
            if r0.iter().any(|r| part(r, lower).iter().any(|c| !c.is_zero())) {
                return Err(Error::Inconsistent(format!(" (degree {lower} residual nonzero while solving degree {d})")));
            }
        }
        let range = unknown.degree_range(d);
        let b: Vec<Rational> = r0.iter().flat_map(|r| part(r, d)).map(|c| -c).collect();
        let mut cols: Vec<Vec<Rational>> = Vec::new();
        for k in range.clone() {
            let mut xk = x.clone();
            xk[k] += &Rational::one();
            let rk = residual(&xk)?;
            let col: Vec<Rational> = rk.iter().zip(&r0).flat_map(|(a, z)| part(a, d).into_iter().zip(part(z, d)).map(|(p, q)| p - q)).collect();
            cols.push(col);
        }
        let rows = b.len();
        let mut m = RatMatrix::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        let fixed: Vec<(usize, Rational)> = free_columns(&m).into_iter().map(|k| (k, free_value(d, k))).collect();
        let y = mat_solve_with(&m, &b, &fixed).map_err(|e| match e {
            Error::Inconsistent(_) => Error::Inconsistent(format!(" at degree {d}")),
            other => other,
        })?;
        for (k, v) in range.zip(y) {
            x[k] += &v;
        }
    }
    let r = residual(&x)?;
    for d in 1..=to {
        if r.iter().any(|c| part(c, d).iter().any(|v| !v.is_zero())) {
            return Err(Error::Inconsistent(format!(" (residual nonzero in degree {d} after solving)")));
        }
    }
    Ok(x)
}
