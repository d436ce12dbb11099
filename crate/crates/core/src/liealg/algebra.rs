//! Truncated graded Lie algebras presented by degree-one generators and homogeneous relations.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use super::lyndon::{commutator, expand_lyndon, lyndon_words, IntPoly, RatPoly, Word};
use crate::error::{Error, Result};
use crate::exactalg::Rational;

/// Lie polynomial expression in the generators.
#[derive(Clone, Debug, PartialEq)]
pub enum LieExpr {
    Gen(usize),
    Sum(Vec<(Rational, LieExpr)>),
    Bracket(Box<LieExpr>, Box<LieExpr>),
}

impl LieExpr {
    pub fn gen(i: usize) -> Self {
        LieExpr::Gen(i)
    }

    pub fn br(a: LieExpr, b: LieExpr) -> Self {
        LieExpr::Bracket(Box::new(a), Box::new(b))
    }

    pub fn sum_of(gens: &[usize]) -> Self {
        LieExpr::Sum(gens.iter().map(|&g| (Rational::one(), LieExpr::Gen(g))).collect())
    }

    /// Expansion in the free associative algebra.
    pub fn expand(&self) -> RatPoly {
        match self {
            LieExpr::Gen(i) => RatPoly::from([(vec![*i as u8], Rational::one())]),
            LieExpr::Sum(terms) => {
                let mut out = RatPoly::new();
                for (c, e) in terms {
                    for (w, x) in e.expand() {
                        *out.entry(w).or_default() += &(c * &x);
                    }
                }
                out.retain(|_, c| !c.is_zero());
                out
            }
            LieExpr::Bracket(a, b) => commutator(&a.expand(), &b.expand()),
        }
    }
}

/// Generators (all of degree one), relations, truncation degree.
#[derive(Clone, Debug)]
pub struct GradedPresentation {
    pub gen_names: Vec<String>,
    pub relations: Vec<LieExpr>,
    pub degree: usize,
}

/// Echelon form of a subspace of one graded piece, pivot = largest column.
#[derive(Clone, Debug, Default)]
struct Echelon {
    rows: HashMap<usize, Vec<(usize, Rational)>>,
    /// The independent vectors as inserted (sparser than reduced rows).
    raw: Vec<BTreeMap<usize, Rational>>,
}

impl Echelon {
    fn reduce(&self, v: &mut BTreeMap<usize, Rational>) {
        let mut cursor = usize::MAX;
        loop {
            let next = v.range(..cursor).rev().find(|(c, _)| self.rows.contains_key(c)).map(|(c, x)| (*c, x.clone()));
            let Some((c, coef)) = next else { break };
            for (j, r) in &self.rows[&c] {
                let e = v.entry(*j).or_default();
                *e -= &(&coef * r);
                if e.is_zero() {
                    v.remove(j);
                }
            }
            cursor = c;
        }
    }

    /// Inserts `v`; returns whether the span grew.
    fn insert(&mut self, v: BTreeMap<usize, Rational>) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        let Some((&p, lead)) = w.iter().next_back() else { return false };
        let inv = lead.inv().expect("nonzero");
        let row: Vec<(usize, Rational)> = w.iter().map(|(j, x)| (*j, x * &inv)).collect();
        self.rows.insert(p, row);
        self.raw.push(v);
        true
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// Sparse vector over the global basis.
pub type Sparse = Vec<(usize, Rational)>;

pub struct LieAlgebra {
    pub name: String,
    pub gen_names: Vec<String>,
    pub degree: usize,
    /// Lyndon words per degree (index `d-1`), sorted.
    lyndon: Vec<Vec<Word>>,
    lyndon_index: HashMap<Word, usize>,
    ideal: Vec<Echelon>,
    /// Global basis: Lyndon labels of the non-pivot words, ordered by degree then word.
    basis_words: Vec<Word>,
    basis_deg: Vec<usize>,
    /// For each degree, Lyndon index -> global basis index.
    lyndon_to_basis: Vec<HashMap<usize, usize>>,
    deg_start: Vec<usize>,
    table: Vec<Vec<Sparse>>,
    gen_elems: Vec<Sparse>,
    expansions: HashMap<Word, IntPoly>,
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra({}, N={}, dims={:?})", self.name, self.degree, self.dims())
    }
}

impl LieAlgebra {
    pub fn build(name: &str, p: &GradedPresentation) -> Result<LieAlgebra> {
        let k = p.gen_names.len();
        if k > 255 {
            return Err(Error::Invalid("too many generators".into()));
        }
        let nmax = p.degree;
        let all = lyndon_words(k, nmax);
        let mut lyndon: Vec<Vec<Word>> = vec![Vec::new(); nmax];
        for w in all {
            lyndon[w.len() - 1].push(w);
        }
        for l in lyndon.iter_mut() {
            l.sort();
        }
        let mut lyndon_index = HashMap::new();
        for l in &lyndon {
            for (i, w) in l.iter().enumerate() {
                lyndon_index.insert(w.clone(), i);
            }
        }
        let mut expansions = HashMap::new();
        for l in &lyndon {
            for w in l {
                expand_lyndon(w, &mut expansions);
            }
        }
        let mut alg = LieAlgebra {
            name: name.to_string(),
            gen_names: p.gen_names.clone(),
            degree: nmax,
            lyndon,
            lyndon_index,
            ideal: vec![Echelon::default(); nmax],
            basis_words: Vec::new(),
            basis_deg: Vec::new(),
            lyndon_to_basis: Vec::new(),
            deg_start: Vec::new(),
            table: Vec::new(),
            gen_elems: Vec::new(),
            expansions,
        };
        let mut rels_by_deg: Vec<Vec<RatPoly>> = vec![Vec::new(); nmax];
        for r in &p.relations {
            let e = r.expand();
            let Some(d) = e.keys().next().map(|w| w.len()) else { continue };
            if e.keys().any(|w| w.len() != d) {
                return Err(Error::Invalid("inhomogeneous relation".into()));
            }
            if d <= nmax {
                rels_by_deg[d - 1].push(e);
            }
        }
        for d in 1..=nmax {
            let mut span = Echelon::default();
            for r in &rels_by_deg[d - 1] {
                let v = alg.poly_to_lyndon(r.clone())?;
                span.insert(v);
            }
            if d > 1 {
                let prev = alg.ideal[d - 2].raw.clone();
                for g in 0..k {
                    let gp = RatPoly::from([(vec![g as u8], Rational::one())]);
                    for y in &prev {
                        let yp = alg.lyndon_to_poly(y, d - 1);
                        let v = alg.poly_to_lyndon(commutator(&gp, &yp))?;
                        span.insert(v);
                    }
                }
            }
            alg.ideal[d - 1] = span;
        }
        alg.finish_basis();
        Ok(alg)
    }

    /// Lyndon coordinates (within one degree) of a homogeneous Lie polynomial.
    fn poly_to_lyndon(&self, mut p: RatPoly) -> Result<BTreeMap<usize, Rational>> {
        let mut out = BTreeMap::new();
        while let Some((w, c)) = p.iter().next().map(|(w, c)| (w.clone(), c.clone())) {
            let Some(&idx) = self.lyndon_index.get(&w) else {
                return Err(Error::Invalid(format!("not a Lie polynomial (leading word {w:?})")));
            };
            for (u, x) in &self.expansions[&w] {
                let e = p.entry(u.clone()).or_default();
                *e -= &(&c * &Rational::int(*x));
                if e.is_zero() {
                    p.remove(u);
                }
            }
            out.insert(idx, c);
        }
        Ok(out)
    }

    fn lyndon_to_poly(&self, v: &BTreeMap<usize, Rational>, d: usize) -> RatPoly {
        let mut out = RatPoly::new();
        for (i, c) in v {
            for (u, x) in &self.expansions[&self.lyndon[d - 1][*i]] {
                *out.entry(u.clone()).or_default() += &(c * &Rational::int(*x));
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    fn finish_basis(&mut self) {
        let nmax = self.degree;
        for d in 1..=nmax {
            self.deg_start.push(self.basis_words.len());
            let mut map = HashMap::new();
            for (i, w) in self.lyndon[d - 1].iter().enumerate() {
                if !self.ideal[d - 1].rows.contains_key(&i) {
                    map.insert(i, self.basis_words.len());
                    self.basis_words.push(w.clone());
                    self.basis_deg.push(d);
                }
            }
            self.lyndon_to_basis.push(map);
        }
        self.deg_start.push(self.basis_words.len());
        let dim = self.basis_words.len();
        let mut table = vec![vec![Sparse::new(); dim]; dim];
        for i in 0..dim {
            for j in (i + 1)..dim {
                let d = self.basis_deg[i] + self.basis_deg[j];
                if d > nmax {
                    continue;
                }
                let pu = self.word_poly(&self.basis_words[i]);
                let pv = self.word_poly(&self.basis_words[j]);
                let v = self.poly_to_lyndon(commutator(&pu, &pv)).expect("bracket of Lie polynomials");
                let s = self.normal_form(d, v);
                table[j][i] = s.iter().map(|(k, x)| (*k, -x)).collect();
                table[i][j] = s;
            }
        }
        self.table = table;
        self.gen_elems = (0..self.gen_names.len())
            .map(|g| self.normal_form(1, BTreeMap::from([(self.lyndon_index[&vec![g as u8]], Rational::one())])))
            .collect();
    }

    fn word_poly(&self, w: &Word) -> RatPoly {
        self.expansions[w].iter().map(|(u, x)| (u.clone(), Rational::int(*x))).collect()
    }

    /// Reduces Lyndon coordinates in degree `d` modulo the relations, giving global basis coordinates.
    fn normal_form(&self, d: usize, mut v: BTreeMap<usize, Rational>) -> Sparse {
        self.ideal[d - 1].reduce(&mut v);
        v.into_iter()
            .map(|(i, c)| (*self.lyndon_to_basis[d - 1].get(&i).expect("non-pivot after reduction"), c))
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.basis_words.len()
    }

    pub fn dims(&self) -> Vec<usize> {
        (1..=self.degree).map(|d| self.deg_start[d] - self.deg_start[d - 1]).collect()
    }

    pub fn num_gens(&self) -> usize {
        self.gen_names.len()
    }

    pub fn basis_deg(&self, i: usize) -> usize {
        self.basis_deg[i]
    }

    pub fn basis_word(&self, i: usize) -> &Word {
        &self.basis_words[i]
    }

    /// Global basis indices of degree `d`.
    pub fn degree_range(&self, d: usize) -> std::ops::Range<usize> {
        if d == 0 || d > self.degree {
            return 0..0;
        }
        self.deg_start[d - 1]..self.deg_start[d]
    }

    /// Dimension of the relation subspace in degree `d` inside the free Lie algebra.
    pub fn relation_rank(&self, d: usize) -> usize {
        self.ideal[d - 1].dim()
    }

    /// Bracket of two basis elements.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &Sparse {
        &self.table[i][j]
    }

    /// Normal form of generator `g` as a sparse vector.
    pub fn gen_sparse(&self, g: usize) -> &Sparse {
        &self.gen_elems[g]
    }

    /// Coordinates of an arbitrary Lie polynomial (any degrees; parts above the truncation dropped).
    pub fn coords_of_poly(&self, p: &RatPoly) -> Result<Vec<Rational>> {
        let mut by_deg: BTreeMap<usize, RatPoly> = BTreeMap::new();
        for (w, c) in p {
            by_deg.entry(w.len()).or_default().insert(w.clone(), c.clone());
        }
        let mut out = vec![Rational::zero(); self.dim()];
        for (d, q) in by_deg {
            if d == 0 {
                return Err(Error::Invalid("constant term in a Lie polynomial".into()));
            }
            if d > self.degree {
                continue;
            }
            for (i, c) in self.normal_form(d, self.poly_to_lyndon(q)?) {
                out[i] = c;
            }
        }
        Ok(out)
    }

    pub fn coords_of_expr(&self, e: &LieExpr) -> Result<Vec<Rational>> {
        self.coords_of_poly(&e.expand())
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        let nz_x: Vec<usize> = (0..x.len()).filter(|&i| !x[i].is_zero()).collect();
        let nz_y: Vec<usize> = (0..y.len()).filter(|&j| !y[j].is_zero()).collect();
        for &i in &nz_x {
            let di = self.basis_deg[i];
            for &j in &nz_y {
                if di + self.basis_deg[j] > self.degree || i == j {
                    continue;
                }
                let t = &self.table[i][j];
                if t.is_empty() {
                    continue;
                }
                let c = &x[i] * &y[j];
                for (k, v) in t {
                    out[*k].add_mul(&c, v);
                }
            }
        }
        out
    }

    pub fn describe_basis(&self, i: usize) -> String {
        describe_word(&self.basis_words[i], &self.gen_names)
    }
}

/// Standard bracketing of a Lyndon word, written with generator names.
pub fn describe_word(w: &[u8], names: &[String]) -> String {
    if w.len() == 1 {
        return names[w[0] as usize].clone();
    }
    let (u, v) = super::lyndon::standard_factorization(w);
    format!("[{},{}]", describe_word(u, names), describe_word(v, names))
}
