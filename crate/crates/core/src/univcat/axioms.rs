//! The coherence axioms of (half-)balanced braided monoidal structures, evaluated in a `Structure`.

use super::constraint::{eval_steps, Elementary, Step};
use super::structure::Structure;
use crate::error::Result;

fn st(kind: Elementary, inverse: bool, left: usize, right: usize) -> Step {
    Step::new(kind, inverse, left, right)
}

/// Composite of steps (first applied first).
pub fn route<S: Structure>(s: &S, n: usize, steps: &[Step]) -> Result<S::Elem> {
    eval_steps(s, n, steps)
}

/// `a_{X,Y,ZW} a_{XY,Z,W} = (id_X a_{Y,Z,W}) a_{X,YZ,W} (a_{X,Y,Z} id_W)`.
pub fn pentagon_sides<S: Structure>(s: &S, x: usize, y: usize, z: usize, w: usize) -> Result<(S::Elem, S::Elem)> {
    let n = x + y + z + w;
    let lhs = route(s, n, &[st(Elementary::Assoc(x + y, z, w), false, 0, 0), st(Elementary::Assoc(x, y, z + w), false, 0, 0)])?;
    let rhs = route(
        s,
        n,
        &[
            st(Elementary::Assoc(x, y, z), false, 0, w),
            st(Elementary::Assoc(x, y + z, w), false, 0, 0),
            st(Elementary::Assoc(y, z, w), false, x, 0),
        ],
    )?;
    Ok((lhs, rhs))
}

pub fn pentagon<S: Structure>(s: &S, x: usize, y: usize, z: usize, w: usize) -> Result<bool> {
    let (lhs, rhs) = pentagon_sides(s, x, y, z, w)?;
    s.equal(&lhs, &rhs)
}

/// `a_{Y,Z,X} beta_{X,YZ} a_{X,Y,Z} = (id_Y beta_{X,Z}) a_{Y,X,Z} (beta_{X,Y} id_Z)`.
pub fn hexagon1_sides<S: Structure>(s: &S, x: usize, y: usize, z: usize) -> Result<(S::Elem, S::Elem)> {
    let n = x + y + z;
    let lhs = route(
        s,
        n,
        &[st(Elementary::Assoc(x, y, z), false, 0, 0), st(Elementary::Beta(x, y + z), false, 0, 0), st(Elementary::Assoc(y, z, x), false, 0, 0)],
    )?;
    let rhs = route(
        s,
        n,
        &[st(Elementary::Beta(x, y), false, 0, z), st(Elementary::Assoc(y, x, z), false, 0, 0), st(Elementary::Beta(x, z), false, y, 0)],
    )?;
    Ok((lhs, rhs))
}

pub fn hexagon1<S: Structure>(s: &S, x: usize, y: usize, z: usize) -> Result<bool> {
    let (lhs, rhs) = hexagon1_sides(s, x, y, z)?;
    s.equal(&lhs, &rhs)
}

/// `a^{-1}_{Z,X,Y} beta_{XY,Z} a^{-1}_{X,Y,Z} = (beta_{X,Z} id_Y) a^{-1}_{X,Z,Y} (id_X beta_{Y,Z})`.
pub fn hexagon2_sides<S: Structure>(s: &S, x: usize, y: usize, z: usize) -> Result<(S::Elem, S::Elem)> {
    let n = x + y + z;
    let lhs = route(
        s,
        n,
        &[st(Elementary::Assoc(x, y, z), true, 0, 0), st(Elementary::Beta(x + y, z), false, 0, 0), st(Elementary::Assoc(z, x, y), true, 0, 0)],
    )?;
    let rhs = route(
        s,
        n,
        &[st(Elementary::Beta(y, z), false, x, 0), st(Elementary::Assoc(x, z, y), true, 0, 0), st(Elementary::Beta(x, z), false, 0, y)],
    )?;
    Ok((lhs, rhs))
}

pub fn hexagon2<S: Structure>(s: &S, x: usize, y: usize, z: usize) -> Result<bool> {
    let (lhs, rhs) = hexagon2_sides(s, x, y, z)?;
    s.equal(&lhs, &rhs)
}

/// `theta_{XY} = (theta_X theta_Y) beta_{YX} beta_{XY}`.
pub fn balanced_sides<S: Structure>(s: &S, x: usize, y: usize) -> Result<(S::Elem, S::Elem)> {
    let n = x + y;
    let lhs = s.theta(n)?;
    let rhs = route(
        s,
        n,
        &[
            st(Elementary::Beta(x, y), false, 0, 0),
            st(Elementary::Beta(y, x), false, 0, 0),
            st(Elementary::Theta(x), false, 0, y),
            st(Elementary::Theta(y), false, x, 0),
        ],
    )?;
    Ok((lhs, rhs))
}

pub fn balanced<S: Structure>(s: &S, x: usize, y: usize) -> Result<bool> {
    let (lhs, rhs) = balanced_sides(s, x, y)?;
    s.equal(&lhs, &rhs)
}

/// `a_{XY} = (a_Y a_X) beta_{XY}`.
pub fn half_balanced_sides<S: Structure>(s: &S, x: usize, y: usize) -> Result<(S::Elem, S::Elem)> {
    let n = x + y;
    let lhs = s.hbal(n)?;
    let rhs = route(
        s,
        n,
        &[st(Elementary::Beta(x, y), false, 0, 0), st(Elementary::HalfBal(y), false, 0, x), st(Elementary::HalfBal(x), false, y, 0)],
    )?;
    Ok((lhs, rhs))
}

pub fn half_balanced<S: Structure>(s: &S, x: usize, y: usize) -> Result<bool> {
    let (lhs, rhs) = half_balanced_sides(s, x, y)?;
    s.equal(&lhs, &rhs)
}

/// `theta_X = a_{X*} a_X`.
pub fn theta_from_hbal_sides<S: Structure>(s: &S, n: usize) -> Result<(S::Elem, S::Elem)> {
    let lhs = s.theta(n)?;
    let a = s.hbal(n)?;
    let rhs = s.compose(&a, &a)?;
    Ok((lhs, rhs))
}

pub fn theta_from_hbal<S: Structure>(s: &S, n: usize) -> Result<bool> {
    let (lhs, rhs) = theta_from_hbal_sides(s, n)?;
    s.equal(&lhs, &rhs)
}

/// All axioms on every size tuple with parts `>= 1` and total `<= max_total`; returns failures.
pub fn check_all<S: Structure>(s: &S, max_total: usize, with_balance: bool) -> Result<Vec<String>> {
    let mut fails = Vec::new();
    for x in 1..=max_total {
        for y in 1..=max_total - x {
            if with_balance {
                if !balanced(s, x, y)? {
                    fails.push(format!("balanced ({x},{y})"));
                }
                if !half_balanced(s, x, y)? {
                    fails.push(format!("half-balanced ({x},{y})"));
                }
            }
            for z in 1..=max_total.saturating_sub(x + y) {
                if !hexagon1(s, x, y, z)? {
                    fails.push(format!("hexagon1 ({x},{y},{z})"));
                }
                if !hexagon2(s, x, y, z)? {
                    fails.push(format!("hexagon2 ({x},{y},{z})"));
                }
                for w in 1..=max_total.saturating_sub(x + y + z) {
                    if !pentagon(s, x, y, z, w)? {
                        fails.push(format!("pentagon ({x},{y},{z},{w})"));
                    }
                }
            }
        }
        if with_balance && !theta_from_hbal(s, x)? {
            fails.push(format!("theta = a* a ({x})"));
        }
    }
    Ok(fails)
}
