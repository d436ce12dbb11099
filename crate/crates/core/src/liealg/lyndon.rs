//! Lyndon words and their standard bracketings.

use std::collections::BTreeMap;

use crate::exactalg::Rational;

pub type Word = Vec<u8>;

/// All Lyndon words of length `1..=max_len` over `k` letters, in lexicographic order (Duval).
pub fn lyndon_words(k: usize, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if k == 0 || max_len == 0 {
        return out;
    }
    let mut w: Vec<u8> = vec![0];
    loop {
        out.push(w.clone());
        let m = w.len();
        while w.len() < max_len {
            let c = w[w.len() - m];
            w.push(c);
        }
        while let Some(&last) = w.last() {
            if last as usize == k - 1 {
                w.pop();
            } else {
                break;
            }
        }
        match w.last_mut() {
            Some(x) => *x += 1,
            None => break,
        }
    }
    out
}

pub fn is_lyndon(w: &[u8]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// Standard factorization `w = u v` with `v` the longest proper Lyndon suffix.
pub fn standard_factorization(w: &[u8]) -> (&[u8], &[u8]) {
    debug_assert!(w.len() > 1);
    for i in 1..w.len() {
        if is_lyndon(&w[i..]) {
            return (&w[..i], &w[i..]);
        }
    }
    unreachable!("a word of length >= 2 has a Lyndon suffix")
}

/// Noncommutative polynomial with integer coefficients.
pub type IntPoly = BTreeMap<Word, i64>;

/// Expansion of the standard bracketing `P_w` in the free associative algebra.
pub fn expand_lyndon(w: &[u8], cache: &mut std::collections::HashMap<Word, IntPoly>) -> IntPoly {
    if let Some(p) = cache.get(w) {
        return p.clone();
    }
    let p = if w.len() == 1 {
        IntPoly::from([(w.to_vec(), 1)])
    } else {
        let (u, v) = standard_factorization(w);
        let pu = expand_lyndon(u, cache);
        let pv = expand_lyndon(v, cache);
        commutator_int(&pu, &pv)
    };
    cache.insert(w.to_vec(), p.clone());
    p
}

pub fn commutator_int(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut out = IntPoly::new();
    for (x, cx) in a {
        for (y, cy) in b {
            let mut xy = x.clone();
            xy.extend_from_slice(y);
            *out.entry(xy).or_insert(0) += cx * cy;
            let mut yx = y.clone();
            yx.extend_from_slice(x);
            *out.entry(yx).or_insert(0) -= cx * cy;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Noncommutative polynomial with rational coefficients.
pub type RatPoly = BTreeMap<Word, Rational>;

pub fn commutator(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut out = RatPoly::new();
    for (x, cx) in a {
        for (y, cy) in b {
            let c = cx * cy;
            let mut xy = x.clone();
            xy.extend_from_slice(y);
            *out.entry(xy).or_default() += &c;
            let mut yx = y.clone();
            yx.extend_from_slice(x);
            *out.entry(yx).or_default() -= &c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}
