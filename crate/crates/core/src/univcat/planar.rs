//! Planar 3-valent trees with leaves labeled `1..n` in cyclic order, encoded by their
//! internal edges; each internal edge is the split of the leaves into two cyclic intervals.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Value};

use super::tree::ParenTree;
use crate::error::{Error, Result};
use crate::perm::Perm;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarTree {
    n: usize,
    /// Each split stored as the interval `[a, b]` of the side not containing leaf `n`.
    splits: BTreeSet<(usize, usize)>,
}

/// Canonical form of a cyclic interval of labels, or `None` for a trivial split.
fn canonical_split(n: usize, labels: &BTreeSet<usize>) -> Result<Option<(usize, usize)>> {
    let side: BTreeSet<usize> = if labels.contains(&n) { (1..=n).filter(|x| !labels.contains(x)).collect() } else { labels.clone() };
    let k = side.len();
    if k < 2 || k > n.saturating_sub(2) {
        return Ok(None);
    }
    let a = *side.iter().next().expect("nonempty");
    let b = *side.iter().next_back().expect("nonempty");
    if b - a + 1 != k {
        return Err(Error::Invalid(format!("leaf set {labels:?} is not a cyclic interval")));
    }
    Ok(Some((a, b)))
}

impl PlanarTree {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn splits(&self) -> &BTreeSet<(usize, usize)> {
        &self.splits
    }

    pub fn from_splits(n: usize, splits: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n < 2 {
            return Err(Error::Invalid("planar trees need at least 2 leaves".into()));
        }
        let mut s = BTreeSet::new();
        for (a, b) in splits {
            let labels: BTreeSet<usize> = (a..=b).collect();
            if let Some(x) = canonical_split(n, &labels)? {
                s.insert(x);
            }
        }
        if s.len() != n.saturating_sub(3) {
            return Err(Error::Invalid(format!("{} internal edges for {n} leaves", s.len())));
        }
        for &(a, b) in &s {
            for &(c, d) in &s {
                let disjoint = b < c || d < a;
                let nested = (a <= c && d <= b) || (c <= a && b <= d);
                if !disjoint && !nested {
                    return Err(Error::Invalid("crossing splits".into()));
                }
            }
        }
        Ok(PlanarTree { n, splits: s })
    }

    /// Relabels leaves along `p` (label `x` becomes `p(x)`); only dihedral `p` keep planarity.
    pub fn relabel(&self, p: &Perm) -> Result<Self> {
        let mut s = BTreeSet::new();
        for &(a, b) in &self.splits {
            let labels: BTreeSet<usize> = (a..=b).map(|x| p.apply(x - 1) + 1).collect();
            if let Some(x) = canonical_split(self.n, &labels)? {
                s.insert(x);
            }
        }
        Ok(PlanarTree { n: self.n, splits: s })
    }

    /// The rooted tree obtained by cutting the edge of leaf `n`: `t_L •` with `t_L` on leaves `1..n-1`.
    pub fn rooted(&self) -> ParenTree {
        let n = self.n;
        if n == 2 {
            return ParenTree::node(ParenTree::Leaf, ParenTree::Leaf);
        }
        let left = self.build(1, n - 1);
        ParenTree::node(left, ParenTree::Leaf)
    }

    fn build(&self, a: usize, b: usize) -> ParenTree {
        if a == b {
            return ParenTree::Leaf;
        }
        let c = self.splits.iter().filter(|&&(x, y)| x == a && y < b).map(|&(_, y)| y).max().unwrap_or(a);
        ParenTree::node(self.build(a, c), self.build(c + 1, b))
    }

    /// All planar trees with `n` leaves.
    pub fn all(n: usize) -> Vec<PlanarTree> {
        let mut set = BTreeSet::new();
        for t in ParenTree::all(n) {
            set.insert(root_contract(&t).expect("n >= 2"));
        }
        set.into_iter().collect()
    }

    /// Edge list over vertices `0..n` (leaf with label `i` is vertex `i-1`), internal vertices after.
    pub fn to_json(&self) -> Value {
        let n = self.n;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut next = n;
        fn go(t: &PlanarTree, a: usize, b: usize, parent: usize, next: &mut usize, edges: &mut Vec<(usize, usize)>) {
            if a == b {
                edges.push((a - 1, parent));
                return;
            }
            let v = *next;
            *next += 1;
            edges.push((v, parent));
            let c = t.splits.iter().filter(|&&(x, y)| x == a && y < b).map(|&(_, y)| y).max().unwrap_or(a);
            go(t, a, c, v, next, edges);
            go(t, c + 1, b, v, next, edges);
        }
        if n == 2 {
            edges.push((0, 1));
        } else {
            // the internal vertex adjacent to leaf n carries the interval [1, n-1]
            let v = next;
            next += 1;
            edges.push((n - 1, v));
            let c = self.splits.iter().filter(|&&(x, y)| x == 1 && y < n - 1).map(|&(_, y)| y).max().unwrap_or(1);
            go(self, 1, c, v, &mut next, &mut edges);
            go(self, c + 1, n - 1, v, &mut next, &mut edges);
        }
        let mut edges: Vec<(usize, usize)> = edges.into_iter().map(|(x, y)| (x.min(y), x.max(y))).collect();
        edges.sort();
        let labels: BTreeMap<String, usize> = (0..n).map(|i| (i.to_string(), i + 1)).collect();
        json!({ "edges": edges, "leaf_labels": labels })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = || Error::Parse("planar tree must be {\"edges\": [[u,v],..], \"leaf_labels\": {..}}".into());
        let edges: Vec<(usize, usize)> = serde_json::from_value(v.get("edges").ok_or_else(bad)?.clone()).map_err(|_| bad())?;
        let labels: BTreeMap<String, usize> =
            serde_json::from_value(v.get("leaf_labels").ok_or_else(bad)?.clone()).map_err(|_| bad())?;
        let labels: BTreeMap<usize, usize> =
            labels.into_iter().map(|(k, x)| k.parse::<usize>().map(|k| (k, x)).map_err(|_| bad())).collect::<Result<_>>()?;
        let n = labels.len();
        let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(a, b) in &edges {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        for (v, nb) in &adj {
            let leaf = labels.contains_key(v);
            if (leaf && nb.len() != 1) || (!leaf && nb.len() != 3) {
                return Err(Error::Invalid(format!("vertex {v} has valence {}", nb.len())));
            }
        }
        if edges.len() + 1 != adj.len() {
            return Err(Error::Invalid("not a tree".into()));
        }
        let mut splits = Vec::new();
        for &(a, b) in &edges {
            if labels.contains_key(&a) || labels.contains_key(&b) {
                continue;
            }
            let mut side = BTreeSet::new();
            let mut stack = vec![(b, a)];
            while let Some((v, from)) = stack.pop() {
                if let Some(l) = labels.get(&v) {
                    side.insert(*l);
                }
                for &w in &adj[&v] {
                    if w != from {
                        stack.push((w, v));
                    }
                }
            }
            let (lo, hi) = canonical_split(n, &side)?.ok_or_else(|| Error::Invalid("degenerate internal edge".into()))?;
            splits.push((lo, hi));
        }
        PlanarTree::from_splits(n, splits)
    }
}

/// `pi`: labels leaves `1..n` from left to right and replaces the root by a single edge.
pub fn root_contract(t: &ParenTree) -> Result<PlanarTree> {
    let n = t.leaves();
    if n < 2 {
        return Err(Error::Invalid("root contraction needs at least 2 leaves".into()));
    }
    let mut s = BTreeSet::new();
    for (a, b) in t.internal_intervals() {
        let labels: BTreeSet<usize> = (a..=b).collect();
        if let Some(x) = canonical_split(n, &labels)? {
            s.insert(x);
        }
    }
    PlanarTree::from_splits(n, s)
}

impl serde::Serialize for PlanarTree {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for PlanarTree {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let v = Value::deserialize(d)?;
        PlanarTree::from_json(&v).map_err(D::Error::custom)
    }
}
