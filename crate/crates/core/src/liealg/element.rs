//! Elements of truncated graded Lie algebras and Lie algebra morphisms.

use std::collections::HashMap;
use std::sync::Arc;

use super::algebra::LieAlgebra;
use super::lyndon::{standard_factorization, Word};
use crate::error::{Error, Result};
use crate::exactalg::Rational;

/// Element of a truncated graded Lie algebra in its Lyndon-derived basis.
#[derive(Clone)]
pub struct LieElement {
    pub alg: Arc<LieAlgebra>,
    pub coords: Vec<Rational>,
}

impl std::fmt::Debug for LieElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

impl PartialEq for LieElement {
    fn eq(&self, o: &Self) -> bool {
        Arc::ptr_eq(&self.alg, &o.alg) && self.coords == o.coords
    }
}

impl LieElement {
    pub fn zero(alg: &Arc<LieAlgebra>) -> Self {
        LieElement { alg: alg.clone(), coords: vec![Rational::zero(); alg.dim()] }
    }

    pub fn from_coords(alg: &Arc<LieAlgebra>, coords: Vec<Rational>) -> Result<Self> {
        if coords.len() != alg.dim() {
            return Err(Error::Dimension(format!("{} coordinates for dimension {}", coords.len(), alg.dim())));
        }
        Ok(LieElement { alg: alg.clone(), coords })
    }

    pub fn gen(alg: &Arc<LieAlgebra>, g: usize) -> Self {
        let mut e = Self::zero(alg);
        for (i, c) in alg.gen_sparse(g) {
            e.coords[*i] = c.clone();
        }
        e
    }

    pub fn basis(alg: &Arc<LieAlgebra>, i: usize) -> Self {
        let mut e = Self::zero(alg);
        e.coords[i] = Rational::one();
        e
    }

    fn check(&self, o: &LieElement) -> Result<()> {
        if !Arc::ptr_eq(&self.alg, &o.alg) {
            return Err(Error::Dimension(format!("elements of {} and {}", self.alg.name, o.alg.name)));
        }
        Ok(())
    }

    pub fn add(&self, o: &LieElement) -> Result<LieElement> {
        self.check(o)?;
        Ok(LieElement { alg: self.alg.clone(), coords: add_vec(&self.coords, &o.coords) })
    }

    pub fn sub(&self, o: &LieElement) -> Result<LieElement> {
        self.check(o)?;
        Ok(LieElement { alg: self.alg.clone(), coords: sub_vec(&self.coords, &o.coords) })
    }

    pub fn scale(&self, c: &Rational) -> LieElement {
        LieElement { alg: self.alg.clone(), coords: scale_vec(&self.coords, c) }
    }

    pub fn neg(&self) -> LieElement {
        self.scale(&-Rational::one())
    }

    pub fn bracket(&self, o: &LieElement) -> Result<LieElement> {
        self.check(o)?;
        Ok(LieElement { alg: self.alg.clone(), coords: self.alg.bracket(&self.coords, &o.coords) })
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Homogeneous component of degree `d`.
    pub fn degree_part(&self, d: usize) -> Vec<Rational> {
        self.coords[self.alg.degree_range(d)].to_vec()
    }

    /// Keeps only degrees `<= d`.
    pub fn truncated(&self, d: usize) -> LieElement {
        let mut e = self.clone();
        for i in 0..e.coords.len() {
            if self.alg.basis_deg(i) > d {
                e.coords[i] = Rational::zero();
            }
        }
        e
    }

    /// Lowest degree with a nonzero coordinate.
    pub fn min_degree(&self) -> Option<usize> {
        (0..self.coords.len()).filter(|&i| !self.coords[i].is_zero()).map(|i| self.alg.basis_deg(i)).min()
    }

    pub fn pretty(&self) -> String {
        let terms: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("{}*{}", c, self.alg.describe_basis(i)))
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

pub fn add_vec(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(a: &[Rational], c: &Rational) -> Vec<Rational> {
    if c.is_zero() {
        return vec![Rational::zero(); a.len()];
    }
    a.iter().map(|x| if x.is_zero() { Rational::zero() } else { x * c }).collect()
}

/// Linear map between coordinate spaces, stored column by column (image of each source basis vector).
#[derive(Clone, Debug)]
pub struct LinearMap {
    pub tgt_dim: usize,
    pub columns: Vec<Vec<(usize, Rational)>>,
}

impl LinearMap {
    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.tgt_dim];
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, v) in &self.columns[i] {
                out[*j].add_mul(c, v);
            }
        }
        out
    }
}

/// Evaluates the Lie morphism from the free Lie algebra on the source generators
/// sending generator `g` to `images[g]`, on Lyndon words via standard factorization.
pub struct WordEvaluator<'a> {
    tgt: &'a LieAlgebra,
    images: &'a [Vec<Rational>],
    memo: HashMap<Word, Vec<Rational>>,
}

impl<'a> WordEvaluator<'a> {
    pub fn new(tgt: &'a LieAlgebra, images: &'a [Vec<Rational>]) -> Self {
        WordEvaluator { tgt, images, memo: HashMap::new() }
    }

    pub fn eval(&mut self, w: &[u8]) -> Vec<Rational> {
        if w.len() == 1 {
            return self.images[w[0] as usize].clone();
        }
        if let Some(v) = self.memo.get(w) {
            return v.clone();
        }
        let (u, v) = standard_factorization(w);
        let (u, v) = (u.to_vec(), v.to_vec());
        let a = self.eval(&u);
        let b = self.eval(&v);
        let r = self.tgt.bracket(&a, &b);
        self.memo.insert(w.to_vec(), r.clone());
        r
    }
}

/// Lie algebra morphism determined by generator images.
#[derive(Clone)]
pub struct LieMorphism {
    pub src: Arc<LieAlgebra>,
    pub tgt: Arc<LieAlgebra>,
    pub map: LinearMap,
}

impl LieMorphism {
    pub fn from_generator_images(src: &Arc<LieAlgebra>, tgt: &Arc<LieAlgebra>, images: &[Vec<Rational>]) -> Result<Self> {
        if images.len() != src.num_gens() || images.iter().any(|v| v.len() != tgt.dim()) {
            return Err(Error::Dimension("generator images do not match the algebras".into()));
        }
        let map = linear_map_from_images(src, tgt, images);
        Ok(LieMorphism { src: src.clone(), tgt: tgt.clone(), map })
    }

    pub fn apply(&self, x: &LieElement) -> Result<LieElement> {
        if !Arc::ptr_eq(&x.alg, &self.src) {
            return Err(Error::Dimension("morphism applied outside its source".into()));
        }
        Ok(LieElement { alg: self.tgt.clone(), coords: self.map.apply(&x.coords) })
    }

    pub fn apply_coords(&self, x: &[Rational]) -> Vec<Rational> {
        self.map.apply(x)
    }
}

pub fn linear_map_from_images(src: &LieAlgebra, tgt: &LieAlgebra, images: &[Vec<Rational>]) -> LinearMap {
    let mut ev = WordEvaluator::new(tgt, images);
    let columns = (0..src.dim())
        .map(|i| {
            let v = ev.eval(src.basis_word(i));
            v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
        })
        .collect();
    LinearMap { tgt_dim: tgt.dim(), columns }
}

/// Evaluates an element of `src` (a quotient of a free Lie algebra) at arbitrary generator images
/// in `tgt`; the images must satisfy the relations of `src` for the result to be meaningful.
pub fn substitute(x: &[Rational], src: &LieAlgebra, tgt: &LieAlgebra, images: &[Vec<Rational>]) -> Vec<Rational> {
    let mut ev = WordEvaluator::new(tgt, images);
    let mut out = vec![Rational::zero(); tgt.dim()];
    for (i, c) in x.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let v = ev.eval(src.basis_word(i));
        for (j, y) in v.iter().enumerate() {
            if !y.is_zero() {
                out[j].add_mul(c, y);
            }
        }
    }
    out
}
