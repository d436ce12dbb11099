//! Parenthesization trees.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::error::{Error, Result};

/// Full binary rooted tree; `Unit` is the tree of the unit object (zero leaves).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParenTree {
    Unit,
    Leaf,
    Node(Box<ParenTree>, Box<ParenTree>),
}

impl ParenTree {
    pub fn node(a: ParenTree, b: ParenTree) -> Self {
        ParenTree::Node(Box::new(a), Box::new(b))
    }

    pub fn leaves(&self) -> usize {
        match self {
            ParenTree::Unit => 0,
            ParenTree::Leaf => 1,
            ParenTree::Node(a, b) => a.leaves() + b.leaves(),
        }
    }

    /// `•(•(•...))`.
    pub fn right_comb(n: usize) -> Self {
        match n {
            0 => ParenTree::Unit,
            1 => ParenTree::Leaf,
            _ => ParenTree::node(ParenTree::Leaf, ParenTree::right_comb(n - 1)),
        }
    }

    /// `((•)•)...•`.
    pub fn left_comb(n: usize) -> Self {
        match n {
            0 => ParenTree::Unit,
            1 => ParenTree::Leaf,
            _ => ParenTree::node(ParenTree::left_comb(n - 1), ParenTree::Leaf),
        }
    }

    /// All parenthesizations with `n >= 1` leaves.
    pub fn all(n: usize) -> Vec<ParenTree> {
        if n == 0 {
            return vec![ParenTree::Unit];
        }
        if n == 1 {
            return vec![ParenTree::Leaf];
        }
        let mut out = Vec::new();
        for k in 1..n {
            for a in ParenTree::all(k) {
                for b in ParenTree::all(n - k) {
                    out.push(ParenTree::node(a.clone(), b));
                }
            }
        }
        out
    }

    /// Leaf intervals `[a, b]` (1-based) of all internal nodes, root included.
    pub fn internal_intervals(&self) -> Vec<(usize, usize)> {
        fn go(t: &ParenTree, off: usize, out: &mut Vec<(usize, usize)>) {
            if let ParenTree::Node(a, b) = t {
                out.push((off + 1, off + t.leaves()));
                go(a, off, out);
                go(b, off + a.leaves(), out);
            }
        }
        let mut v = Vec::new();
        go(self, 0, &mut v);
        v
    }
}

pub fn tree_concat(a: &ParenTree, b: &ParenTree) -> ParenTree {
    match (a, b) {
        (ParenTree::Unit, _) => b.clone(),
        (_, ParenTree::Unit) => a.clone(),
        _ => ParenTree::node(a.clone(), b.clone()),
    }
}

pub fn tree_mirror(t: &ParenTree) -> ParenTree {
    match t {
        ParenTree::Node(a, b) => ParenTree::node(tree_mirror(b), tree_mirror(a)),
        other => other.clone(),
    }
}

impl fmt::Display for ParenTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParenTree::Unit => write!(f, "1"),
            ParenTree::Leaf => write!(f, "•"),
            ParenTree::Node(a, b) => {
                let wrap = |t: &ParenTree| matches!(t, ParenTree::Node(..));
                if wrap(a) { write!(f, "({a})")? } else { write!(f, "{a}")? }
                if wrap(b) { write!(f, "({b})") } else { write!(f, "{b}") }
            }
        }
    }
}

impl fmt::Debug for ParenTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl ParenTree {
    pub fn to_json(&self) -> Value {
        match self {
            ParenTree::Unit => Value::Array(vec![]),
            ParenTree::Leaf => Value::String("leaf".into()),
            ParenTree::Node(a, b) => Value::Array(vec![a.to_json(), b.to_json()]),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) if s.chars().all(|c| ".•()1 ".contains(c)) => Self::parse_dots(s),
            Value::String(_) => Ok(ParenTree::Leaf),
            Value::Array(xs) if xs.is_empty() => Ok(ParenTree::Unit),
            Value::Array(xs) if xs.len() == 2 => {
                let a = Self::from_json(&xs[0])?;
                let b = Self::from_json(&xs[1])?;
                if a == ParenTree::Unit || b == ParenTree::Unit {
                    return Err(Error::Parse("unit inside a tree".into()));
                }
                Ok(ParenTree::node(a, b))
            }
            _ => Err(Error::Parse(format!("bad tree {v}"))),
        }
    }

    /// Parses the dot notation, e.g. `(••)•` or `(..).`.
    pub fn parse_dots(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() || chars == ['1'] {
            return Ok(ParenTree::Unit);
        }
        let mut pos = 0;
        let t = parse_seq(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(Error::Parse(format!("trailing input in `{s}`")));
        }
        Ok(t)
    }
}

fn parse_seq(c: &[char], pos: &mut usize) -> Result<ParenTree> {
    let mut items = Vec::new();
    while *pos < c.len() && c[*pos] != ')' {
        match c[*pos] {
            '•' | '.' | '*' => {
                items.push(ParenTree::Leaf);
                *pos += 1;
            }
            '(' => {
                *pos += 1;
                let t = parse_seq(c, pos)?;
                if *pos >= c.len() || c[*pos] != ')' {
                    return Err(Error::Parse("unbalanced parenthesis".into()));
                }
                *pos += 1;
                items.push(t);
            }
            x => return Err(Error::Parse(format!("unexpected `{x}`"))),
        }
    }
    match items.len() {
        1 => Ok(items.pop().expect("one item")),
        2 => {
            let b = items.pop().expect("two");
            let a = items.pop().expect("two");
            Ok(ParenTree::node(a, b))
        }
        _ => Err(Error::Parse("each group must contain one or two items".into())),
    }
}

impl Serialize for ParenTree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ParenTree {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        ParenTree::from_json(&v).map_err(D::Error::custom)
    }
}
