//! The Drinfeld-Kohno algebras `t_n`, their quotients `p_n`, free Lie algebras, and the
//! standard morphisms between them; all built once per truncation degree and cached.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::algebra::{GradedPresentation, LieAlgebra, LieExpr};
use super::element::{LieElement, LieMorphism, LinearMap};
use crate::error::{Error, Result};
use crate::exactalg::Rational;
use crate::perm::Perm;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgKind {
    /// `t_n`
    T(usize),
    /// `p_n`
    P(usize),
    /// Free Lie algebra on `k` generators (`A`, `B` when `k = 2`).
    Free(usize),
}

impl AlgKind {
    pub fn parse(name: &str, n: usize) -> Result<Self> {
        Ok(match name {
            "t" => AlgKind::T(n),
            "p" => AlgKind::P(n),
            "free" | "f" => AlgKind::Free(n),
            _ => return Err(Error::Invalid(format!("algebra `{name}`"))),
        })
    }

    pub fn label(&self) -> String {
        match self {
            AlgKind::T(n) => format!("t_{n}"),
            AlgKind::P(n) => format!("p_{n}"),
            AlgKind::Free(k) => format!("f_{k}"),
        }
    }

    pub fn strands(&self) -> Option<usize> {
        match self {
            AlgKind::T(n) | AlgKind::P(n) => Some(*n),
            AlgKind::Free(_) => None,
        }
    }
}

/// Index of the generator `t_{ij}` (1-based, `i != j`) in the lexicographic list of pairs.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    assert!(1 <= i && i < j && j <= n, "t_{i}{j} not in t_{n}");
    (1..i).map(|a| n - a).sum::<usize>() + (j - i - 1)
}

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            v.push((i, j));
        }
    }
    v
}

fn t_relations(n: usize) -> Vec<LieExpr> {
    let g = |i: usize, j: usize| LieExpr::gen(pair_index(n, i, j));
    let mut rels = Vec::new();
    for (i, j) in pairs(n) {
        for k in 1..=n {
            if k == i || k == j {
                continue;
            }
            rels.push(LieExpr::br(g(i, j), LieExpr::Sum(vec![(Rational::one(), g(i, k)), (Rational::one(), g(j, k))])));
        }
        for (k, l) in pairs(n) {
            if [k, l].iter().all(|x| *x != i && *x != j) && (i, j) < (k, l) {
                rels.push(LieExpr::br(g(i, j), g(k, l)));
            }
        }
    }
    rels
}

pub fn presentation(kind: AlgKind, degree: usize) -> GradedPresentation {
    match kind {
        AlgKind::T(n) => GradedPresentation {
            gen_names: pairs(n).iter().map(|(i, j)| format!("t{i}{j}")).collect(),
            relations: t_relations(n),
            degree,
        },
        AlgKind::P(n) => {
            let mut relations = t_relations(n);
            for i in 1..=n {
                let row: Vec<usize> = (1..=n).filter(|&j| j != i).map(|j| pair_index(n, i, j)).collect();
                if !row.is_empty() {
                    relations.push(LieExpr::sum_of(&row));
                }
            }
            GradedPresentation { gen_names: pairs(n).iter().map(|(i, j)| format!("t{i}{j}")).collect(), relations, degree }
        }
        AlgKind::Free(k) => GradedPresentation {
            gen_names: if k == 2 { vec!["A".into(), "B".into()] } else { (1..=k).map(|i| format!("x{i}")).collect() },
            relations: Vec::new(),
            degree,
        },
    }
}

type Cache<K, V> = OnceLock<Mutex<HashMap<K, V>>>;

/// The cached algebra of the given kind truncated at `degree`.
pub fn algebra(kind: AlgKind, degree: usize) -> Arc<LieAlgebra> {
    static CACHE: Cache<(AlgKind, usize), Arc<OnceLock<Arc<LieAlgebra>>>> = OnceLock::new();
    let cell = {
        let mut c = CACHE.get_or_init(Default::default).lock().expect("algebra cache");
        c.entry((kind, degree)).or_insert_with(|| Arc::new(OnceLock::new())).clone()
    };
    cell.get_or_init(|| {
        Arc::new(LieAlgebra::build(&kind.label(), &presentation(kind, degree)).expect("standard presentations are valid"))
    })
    .clone()
}

pub fn t_alg(n: usize, degree: usize) -> Arc<LieAlgebra> {
    algebra(AlgKind::T(n), degree)
}

pub fn p_alg(n: usize, degree: usize) -> Arc<LieAlgebra> {
    algebra(AlgKind::P(n), degree)
}

pub fn free2(degree: usize) -> Arc<LieAlgebra> {
    algebra(AlgKind::Free(2), degree)
}

/// `t_{ij}` as an element of `t_n` or `p_n`.
pub fn t_gen(alg: &Arc<LieAlgebra>, n: usize, i: usize, j: usize) -> LieElement {
    LieElement::gen(alg, pair_index(n, i, j))
}

/// `sum_{i<j} t_{ij}`.
pub fn t_total(alg: &Arc<LieAlgebra>, n: usize) -> LieElement {
    let mut e = LieElement::zero(alg);
    for (i, j) in pairs(n) {
        e = e.add(&t_gen(alg, n, i, j)).expect("same algebra");
    }
    e
}

/// Action of a permutation on `t_n` or `p_n`: `t_{ij} -> t_{p(i) p(j)}`.
pub fn perm_map(kind: AlgKind, degree: usize, p: &Perm) -> Arc<LinearMap> {
    static CACHE: Cache<(AlgKind, usize, Perm), Arc<LinearMap>> = OnceLock::new();
    let key = (kind, degree, p.clone());
    if let Some(m) = CACHE.get_or_init(Default::default).lock().expect("perm cache").get(&key) {
        return m.clone();
    }
    let n = kind.strands().expect("permutation action needs strands");
    assert_eq!(p.len(), n, "permutation size");
    let alg = algebra(kind, degree);
    let images: Vec<Vec<Rational>> =
        pairs(n).iter().map(|&(i, j)| t_gen(&alg, n, p.apply(i - 1) + 1, p.apply(j - 1) + 1).coords).collect();
    let m = Arc::new(LieMorphism::from_generator_images(&alg, &alg, &images).expect("valid images").map);
    CACHE.get_or_init(Default::default).lock().expect("perm cache").insert(key, m.clone());
    m
}

/// The insertion morphism `t_n -> t_m`, `t_{ij} -> sum_{a in I_i, b in I_j} t_{ab}` (blocks 1-based).
pub fn insertion(n: usize, m: usize, blocks: &[Vec<usize>], degree: usize) -> Result<Arc<LieMorphism>> {
    static CACHE: Cache<(usize, usize, Vec<Vec<usize>>, usize), Arc<LieMorphism>> = OnceLock::new();
    if blocks.len() != n {
        return Err(Error::Dimension(format!("{} blocks for t_{n}", blocks.len())));
    }
    let mut seen = vec![false; m + 1];
    for b in blocks {
        for &x in b {
            if x == 0 || x > m {
                return Err(Error::Index(format!("block element {x} outside [1,{m}]")));
            }
            if seen[x] {
                return Err(Error::Invalid(format!("blocks overlap at {x}")));
            }
            seen[x] = true;
        }
    }
    let key = (n, m, blocks.to_vec(), degree);
    if let Some(f) = CACHE.get_or_init(Default::default).lock().expect("insertion cache").get(&key) {
        return Ok(f.clone());
    }
    let src = t_alg(n, degree);
    let tgt = t_alg(m, degree);
    let images: Vec<Vec<Rational>> = pairs(n)
        .iter()
        .map(|&(i, j)| {
            let mut e = LieElement::zero(&tgt);
            for &a in &blocks[i - 1] {
                for &b in &blocks[j - 1] {
                    e = e.add(&t_gen(&tgt, m, a, b)).expect("same algebra");
                }
            }
            e.coords
        })
        .collect();
    let f = Arc::new(LieMorphism::from_generator_images(&src, &tgt, &images)?);
    CACHE.get_or_init(Default::default).lock().expect("insertion cache").insert(key, f.clone());
    Ok(f)
}

/// Insertion given by consecutive block sizes, e.g. `[2,1,1]` gives blocks `{1,2},{3},{4}`.
pub fn insertion_sizes(sizes: &[usize], degree: usize) -> Result<Arc<LieMorphism>> {
    let mut blocks = Vec::new();
    let mut next = 1;
    for &s in sizes {
        blocks.push((next..next + s).collect());
        next += s;
    }
    insertion(sizes.len(), next - 1, &blocks, degree)
}

/// The projection `t_n -> p_n`.
pub fn project_map(n: usize, degree: usize) -> Arc<LieMorphism> {
    static CACHE: Cache<(usize, usize), Arc<LieMorphism>> = OnceLock::new();
    if let Some(f) = CACHE.get_or_init(Default::default).lock().expect("projection cache").get(&(n, degree)) {
        return f.clone();
    }
    let src = t_alg(n, degree);
    let tgt = p_alg(n, degree);
    let images: Vec<Vec<Rational>> = (0..src.num_gens()).map(|g| LieElement::gen(&tgt, g).coords).collect();
    let f = Arc::new(LieMorphism::from_generator_images(&src, &tgt, &images).expect("valid images"));
    CACHE.get_or_init(Default::default).lock().expect("projection cache").insert((n, degree), f.clone());
    f
}

pub fn project_tp(x: &LieElement, n: usize) -> Result<LieElement> {
    project_map(n, x.alg.degree).apply(x)
}

/// `{"algebra": "t"|"p"|"f", "n", "N", "coords": {degree: [rationals]}}`.
pub fn element_to_json(kind: AlgKind, x: &LieElement) -> Value {
    let (name, n) = match kind {
        AlgKind::T(n) => ("t", n),
        AlgKind::P(n) => ("p", n),
        AlgKind::Free(k) => ("f", k),
    };
    let coords: serde_json::Map<String, Value> = (1..=x.alg.degree)
        .map(|d| (d.to_string(), serde_json::to_value(x.degree_part(d)).expect("serializable")))
        .collect();
    json!({ "algebra": name, "n": n, "N": x.alg.degree, "coords": coords })
}

/// Inverse of [`element_to_json`]; missing degrees are zero.
pub fn element_from_json(v: &Value) -> Result<(AlgKind, LieElement)> {
    let bad = |what: &str| Error::Parse(format!("Lie element: {what}"));
    let name = v.get("algebra").and_then(Value::as_str).ok_or_else(|| bad("missing `algebra`"))?;
    let n = v.get("n").and_then(Value::as_u64).ok_or_else(|| bad("missing `n`"))? as usize;
    let degree = v.get("N").and_then(Value::as_u64).ok_or_else(|| bad("missing `N`"))? as usize;
    let kind = AlgKind::parse(name, n)?;
    let alg = algebra(kind, degree);
    let mut coords = vec![Rational::zero(); alg.dim()];
    if let Some(map) = v.get("coords") {
        let map = map.as_object().ok_or_else(|| bad("`coords` must map degrees to lists"))?;
        for (d, part) in map {
            let d: usize = d.parse().map_err(|_| bad("degree keys must be integers"))?;
            if d == 0 || d > degree {
                return Err(Error::Dimension(format!("degree {d} outside 1..={degree}")));
            }
            let part: Vec<Rational> = serde_json::from_value(part.clone()).map_err(|e| Error::Parse(e.to_string()))?;
            let range = alg.degree_range(d);
            if part.len() != range.len() {
                return Err(Error::Dimension(format!("degree {d} needs {} coordinates, got {}", range.len(), part.len())));
            }
            for (slot, c) in coords[range].iter_mut().zip(part) {
                *slot = c;
            }
        }
    }
    Ok((kind, LieElement::from_coords(&alg, coords)?))
}
