//! Truncated free associative algebras and the Baker-Campbell-Hausdorff product.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use super::algebra::LieAlgebra;
use super::lyndon::Word;
use crate::error::{Error, Result};
use crate::exactalg::Rational;

/// Element of the free associative algebra on `letters` letters, truncated above degree `degree`.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorSeries {
    pub letters: usize,
    pub degree: usize,
    pub terms: BTreeMap<Word, Rational>,
}

impl TensorSeries {
    pub fn zero(letters: usize, degree: usize) -> Self {
        TensorSeries { letters, degree, terms: BTreeMap::new() }
    }

    pub fn scalar(letters: usize, degree: usize, c: Rational) -> Self {
        let mut s = Self::zero(letters, degree);
        if !c.is_zero() {
            s.terms.insert(Vec::new(), c);
        }
        s
    }

    pub fn letter(letters: usize, degree: usize, i: usize) -> Self {
        let mut s = Self::zero(letters, degree);
        if degree >= 1 {
            s.terms.insert(vec![i as u8], Rational::one());
        }
        s
    }

    pub fn constant_term(&self) -> Rational {
        self.terms.get(&Vec::new()).cloned().unwrap_or_default()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut s = self.clone();
        for (w, c) in &o.terms {
            *s.terms.entry(w.clone()).or_default() += c;
        }
        s.terms.retain(|_, c| !c.is_zero());
        s
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut s = self.clone();
        for v in s.terms.values_mut() {
            *v *= c;
        }
        s.terms.retain(|_, c| !c.is_zero());
        s
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut s = Self::zero(self.letters, self.degree);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                if a.len() + b.len() > self.degree {
                    continue;
                }
                let mut w = a.clone();
                w.extend_from_slice(b);
                *s.terms.entry(w).or_default() += &(x * y);
            }
        }
        s.terms.retain(|_, c| !c.is_zero());
        s
    }

    /// `exp(x)` for `x` without constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::Invalid("exp of a series with constant term".into()));
        }
        let mut out = Self::scalar(self.letters, self.degree, Rational::one());
        let mut power = out.clone();
        for k in 1..=self.degree {
            power = power.mul(self).scale(&Rational::new(1, k as i64)?);
            out = out.add(&power);
        }
        Ok(out)
    }

    /// `log(u)` for `u` with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.constant_term().is_one() {
            return Err(Error::Invalid("log of a series whose constant term is not 1".into()));
        }
        let x = self.add(&Self::scalar(self.letters, self.degree, -Rational::one()));
        let mut out = Self::zero(self.letters, self.degree);
        let mut power = Self::scalar(self.letters, self.degree, Rational::one());
        for k in 1..=self.degree {
            power = power.mul(&x);
            let sign = if k % 2 == 1 { 1 } else { -1 };
            out = out.add(&power.scale(&Rational::new(sign, k as i64)?));
        }
        Ok(out)
    }

    /// Degree-`d` part.
    pub fn part(&self, d: usize) -> BTreeMap<Word, Rational> {
        self.terms.iter().filter(|(w, _)| w.len() == d).map(|(w, c)| (w.clone(), c.clone())).collect()
    }
}

/// Coefficients `c_w` with `log(e^X e^Y) = sum_w c_w [..[[w_1,w_2],w_3]..,w_k]`, letters 0 = X, 1 = Y.
pub fn bch_terms(degree: usize) -> Arc<Vec<(Word, Rational)>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<(Word, Rational)>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("bch cache").get(&degree) {
        return t.clone();
    }
    let x = TensorSeries::letter(2, degree, 0);
    let y = TensorSeries::letter(2, degree, 1);
    let z = x.exp().and_then(|ex| Ok(ex.mul(&y.exp()?))).and_then(|p| p.log()).expect("well-defined series");
    // Dynkin-Specht-Wever: a homogeneous Lie element of degree d equals (1/d) times the left-normed
    // bracketing of its expansion.
    let terms: Vec<(Word, Rational)> = z
        .terms
        .iter()
        .filter(|(w, _)| !w.is_empty())
        .map(|(w, c)| (w.clone(), c / &Rational::int(w.len() as i64)))
        .collect();
    let t = Arc::new(terms);
    cache.lock().expect("bch cache").insert(degree, t.clone());
    t
}

/// `log(exp(a) exp(b))` in a truncated graded Lie algebra.
pub fn bch(alg: &LieAlgebra, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let zero_a = a.iter().all(|c| c.is_zero());
    let zero_b = b.iter().all(|c| c.is_zero());
    if zero_a {
        return b.to_vec();
    }
    if zero_b {
        return a.to_vec();
    }
    let terms = bch_terms(alg.degree);
    let mut memo: HashMap<Word, Vec<Rational>> = HashMap::new();
    let mut out = vec![Rational::zero(); alg.dim()];
    for (w, c) in terms.iter() {
        let v = left_normed(alg, w, a, b, &mut memo);
        for (i, x) in v.iter().enumerate() {
            if !x.is_zero() {
                out[i].add_mul(c, x);
            }
        }
    }
    out
}

fn left_normed(alg: &LieAlgebra, w: &[u8], a: &[Rational], b: &[Rational], memo: &mut HashMap<Word, Vec<Rational>>) -> Vec<Rational> {
    let letter = |i: u8| if i == 0 { a } else { b };
    if w.len() == 1 {
        return letter(w[0]).to_vec();
    }
    if let Some(v) = memo.get(w) {
        return v.clone();
    }
    let prefix = left_normed(alg, &w[..w.len() - 1], a, b, memo);
    let r = if prefix.iter().all(|c| c.is_zero()) {
        prefix
    } else {
        alg.bracket(&prefix, letter(w[w.len() - 1]))
    };
    memo.insert(w.to_vec(), r.clone());
    r
}

/// `exp(ad x)(y) = y + [x,y] + [x,[x,y]]/2 + ...`.
pub fn exp_ad(alg: &LieAlgebra, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let mut out = y.to_vec();
    let mut term = y.to_vec();
    for k in 1..=alg.degree {
        term = alg.bracket(x, &term);
        if term.iter().all(|c| c.is_zero()) {
            break;
        }
        let f = Rational::new(1, k as i64).expect("nonzero");
        for t in term.iter_mut() {
            *t *= &f;
        }
        for (o, t) in out.iter_mut().zip(&term) {
            *o += t;
        }
    }
    out
}
