use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{Error, Result};

/// Dense row-major matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(RatMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rational::int(x)).collect()).collect())
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!("{} columns vs vector of length {}", self.cols, v.len())));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut s = Rational::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        s.add_mul(a, b);
                    }
                }
                s
            })
            .collect())
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
            if p != r {
                for j in 0..m.cols {
                    m.entries.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    if m.get(r, j).is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &(&f * m.get(r, j));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }
}

/// Basis of the right null space, one vector per free column, each with a 1 in its free column.
pub fn mat_kernel(m: &RatMatrix) -> Vec<Vec<Rational>> {
    let (r, pivots) = m.rref();
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); m.cols];
            v[f] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, f);
            }
            v
        })
        .collect()
}

/// One exact solution of `m x = b` with free variables set to zero.
pub fn mat_solve(m: &RatMatrix, b: &[Rational]) -> Result<Vec<Rational>> {
    mat_solve_with(m, b, &[])
}

/// Like `mat_solve`, but free variables listed in `fixed` take the given values instead of zero.
pub fn mat_solve_with(m: &RatMatrix, b: &[Rational], fixed: &[(usize, Rational)]) -> Result<Vec<Rational>> {
    if b.len() != m.rows {
        return Err(Error::Dimension(format!("{} rows vs right-hand side of length {}", m.rows, b.len())));
    }
    let mut aug = RatMatrix::zeros(m.rows, m.cols + 1);
    for i in 0..m.rows {
        for j in 0..m.cols {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, m.cols, b[i].clone());
    }
    let (r, pivots) = aug.rref();
    if pivots.last() == Some(&m.cols) {
        return Err(Error::Inconsistent(String::new()));
    }
    let mut x = vec![Rational::zero(); m.cols];
    for (c, v) in fixed {
        if *c >= m.cols {
            return Err(Error::Index(format!("variable {c}")));
        }
        if !pivots.contains(c) {
            x[*c] = v.clone();
        }
    }
    for (i, &p) in pivots.iter().enumerate() {
        let mut v = r.get(i, m.cols).clone();
        for j in (p + 1)..m.cols {
            if !pivots.contains(&j) && !x[j].is_zero() && !r.get(i, j).is_zero() {
                v -= &(r.get(i, j) * &x[j]);
            }
        }
        x[p] = v;
    }
    Ok(x)
}

/// Columns of `m` that carry no pivot, i.e. the free variables of `m x = b`.
pub fn free_columns(m: &RatMatrix) -> Vec<usize> {
    let (_, pivots) = m.rref();
    (0..m.cols).filter(|c| !pivots.contains(c)).collect()
}
