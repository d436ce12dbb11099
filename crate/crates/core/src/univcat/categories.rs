//! Objects and morphisms of `B_S`, `PaB_S` and of the contraction targets `(Pa)Cyc_S`, `(Pa)Dih_S`.
//!
//! Quotient objects are stored by their canonical representative: the least sequence (then the
//! least planar tree) in the orbit under `C_n` or `D_n`. A quotient morphism is a braid between
//! the representatives, compared in `B_n / Z_n` (cyclic side) or in `Gamma_{0,n}` through the
//! truncated graded representation (dihedral side).

use std::fmt;

use serde::{Deserialize, Serialize};

use super::planar::{root_contract, PlanarTree};
use super::tree::{tree_concat, tree_mirror, ParenTree};
use crate::braid::{
    braid_eq, braiding_block, eq_mod_center, full_twist, half_twist, juxtapose, positive_lift, rho, BraidWord,
};
use crate::error::{Error, Result};
use crate::perm::Perm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CatKind {
    B,
    PaB,
    Cyc,
    Dih,
    PaCyc,
    PaDih,
}

impl CatKind {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "b" => CatKind::B,
            "pab" => CatKind::PaB,
            "cyc" => CatKind::Cyc,
            "dih" => CatKind::Dih,
            "pacyc" => CatKind::PaCyc,
            "padih" => CatKind::PaDih,
            _ => return Err(Error::Parse(format!("unknown category `{s}` (B, PaB, Cyc, Dih, PaCyc, PaDih)"))),
        })
    }

    pub fn is_quotient(self) -> bool {
        !matches!(self, CatKind::B | CatKind::PaB)
    }

    pub fn is_dihedral(self) -> bool {
        matches!(self, CatKind::Dih | CatKind::PaDih)
    }

    pub fn has_tree(self) -> bool {
        matches!(self, CatKind::PaB | CatKind::PaCyc | CatKind::PaDih)
    }
}

impl fmt::Display for CatKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", try_from = "RawObject")]
pub enum UObject {
    B { seq: Vec<String> },
    PaB { tree: ParenTree, seq: Vec<String> },
    Cyc { seq: Vec<String> },
    Dih { seq: Vec<String> },
    /// `tree` is absent for fewer than two letters.
    PaCyc { tree: Option<PlanarTree>, seq: Vec<String> },
    PaDih { tree: Option<PlanarTree>, seq: Vec<String> },
}

#[derive(Deserialize)]
#[serde(tag = "kind")]
enum RawObject {
    B { seq: Vec<String> },
    PaB { tree: ParenTree, seq: Vec<String> },
    Cyc { seq: Vec<String> },
    Dih { seq: Vec<String> },
    PaCyc { tree: Option<PlanarTree>, seq: Vec<String> },
    PaDih { tree: Option<PlanarTree>, seq: Vec<String> },
}

impl TryFrom<RawObject> for UObject {
    type Error = Error;

    fn try_from(r: RawObject) -> Result<Self> {
        let x = match r {
            RawObject::B { seq } => UObject::B { seq },
            RawObject::PaB { tree, seq } => UObject::PaB { tree, seq },
            RawObject::Cyc { seq } => UObject::Cyc { seq },
            RawObject::Dih { seq } => UObject::Dih { seq },
            RawObject::PaCyc { tree, seq } => UObject::PaCyc { tree, seq },
            RawObject::PaDih { tree, seq } => UObject::PaDih { tree, seq },
        };
        x.validate()?;
        Ok(x)
    }
}

impl UObject {
    pub fn b(seq: &[&str]) -> Self {
        UObject::B { seq: seq.iter().map(|s| s.to_string()).collect() }
    }

    pub fn pab(tree: ParenTree, seq: &[&str]) -> Result<Self> {
        let o = UObject::PaB { tree, seq: seq.iter().map(|s| s.to_string()).collect() };
        o.validate()?;
        Ok(o)
    }

    pub fn kind(&self) -> CatKind {
        match self {
            UObject::B { .. } => CatKind::B,
            UObject::PaB { .. } => CatKind::PaB,
            UObject::Cyc { .. } => CatKind::Cyc,
            UObject::Dih { .. } => CatKind::Dih,
            UObject::PaCyc { .. } => CatKind::PaCyc,
            UObject::PaDih { .. } => CatKind::PaDih,
        }
    }

    pub fn seq(&self) -> &[String] {
        match self {
            UObject::B { seq }
            | UObject::PaB { seq, .. }
            | UObject::Cyc { seq }
            | UObject::Dih { seq }
            | UObject::PaCyc { seq, .. }
            | UObject::PaDih { seq, .. } => seq,
        }
    }

    pub fn len(&self) -> usize {
        self.seq().len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq().is_empty()
    }

    pub fn paren_tree(&self) -> Option<&ParenTree> {
        match self {
            UObject::PaB { tree, .. } => Some(tree),
            _ => None,
        }
    }

    pub fn planar_tree(&self) -> Option<&PlanarTree> {
        match self {
            UObject::PaCyc { tree, .. } | UObject::PaDih { tree, .. } => tree.as_ref(),
            _ => None,
        }
    }

    /// Shape invariants; quotient objects must also be canonical.
    pub fn validate(&self) -> Result<()> {
        let n = self.len();
        match self {
            UObject::PaB { tree, .. } if tree.leaves() != n => {
                return Err(Error::Invalid(format!("tree with {} leaves for a sequence of length {n}", tree.leaves())));
            }
            UObject::PaCyc { tree, .. } | UObject::PaDih { tree, .. } => match tree {
                Some(t) if t.n() != n => return Err(Error::Invalid(format!("planar tree with {} leaves for length {n}", t.n()))),
                None if n >= 2 => return Err(Error::Invalid("missing planar tree".into())),
                Some(_) if n < 2 => return Err(Error::Invalid("planar trees need two leaves".into())),
                _ => {}
            },
            _ => {}
        }
        if self.kind().is_quotient() && canonicalize(self)?.0 != *self {
            return Err(Error::Invalid("quotient objects must be given by their canonical representative".into()));
        }
        Ok(())
    }

    /// `X (x) Y` in `B_S` or `PaB_S`.
    pub fn tensor(&self, other: &UObject) -> Result<UObject> {
        let mut seq = self.seq().to_vec();
        seq.extend_from_slice(other.seq());
        match (self, other) {
            (UObject::B { .. }, UObject::B { .. }) => Ok(UObject::B { seq }),
            (UObject::PaB { tree: a, .. }, UObject::PaB { tree: b, .. }) => Ok(UObject::PaB { tree: tree_concat(a, b), seq }),
            _ => Err(Error::Invalid("tensor products are taken in B or PaB".into())),
        }
    }

    /// `X*`: reversed sequence and mirrored tree.
    pub fn star(&self) -> Result<UObject> {
        let seq: Vec<String> = self.seq().iter().rev().cloned().collect();
        match self {
            UObject::B { .. } => Ok(UObject::B { seq }),
            UObject::PaB { tree, .. } => Ok(UObject::PaB { tree: tree_mirror(tree), seq }),
            _ => Err(Error::Invalid("X* is taken in B or PaB".into())),
        }
    }
}

/// `c^k r^e` with `c: i -> i+1` and `r` the reversal, listed `k`-major, and their braid lifts `rho^k h^e`.
pub fn group_elements(dihedral: bool, n: usize) -> Vec<(Perm, BraidWord)> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let c = Perm::cycle(n);
    let r = Perm::reversal(n);
    let mut ck = Perm::identity(n);
    for k in 0..n {
        let lift = rho(n).pow(k as i64);
        out.push((ck.clone(), lift.clone()));
        if dihedral {
            out.push((ck.compose(&r), lift.mul(&half_twist(n)).expect("same strands")));
        }
        ck = ck.compose(&c);
    }
    out
}

fn distinct(seq: &[String]) -> bool {
    let mut s = seq.to_vec();
    s.sort();
    s.dedup();
    s.len() == seq.len()
}

/// The canonical representative of the class of `x` and the braid `x -> representative`
/// (`B` and `PaB` objects are returned unchanged).
pub fn canonicalize(x: &UObject) -> Result<(UObject, BraidWord)> {
    let n = x.len();
    let id = BraidWord::identity(n);
    let dihedral = x.kind().is_dihedral();
    match x {
        UObject::B { .. } | UObject::PaB { .. } => Ok((x.clone(), id)),
        UObject::Cyc { seq } | UObject::Dih { seq } => {
            let (s, b) = least_seq(dihedral, seq)?;
            let o = if dihedral { UObject::Dih { seq: s } } else { UObject::Cyc { seq: s } };
            Ok((o, b))
        }
        UObject::PaCyc { tree, seq } | UObject::PaDih { tree, seq } => {
            let (t, s, b) = least_pair(dihedral, tree.as_ref(), seq)?;
            let o = if dihedral { UObject::PaDih { tree: t, seq: s } } else { UObject::PaCyc { tree: t, seq: s } };
            Ok((o, b))
        }
    }
}

fn least_seq(dihedral: bool, seq: &[String]) -> Result<(Vec<String>, BraidWord)> {
    if !distinct(seq) {
        return Err(Error::Invalid("cyclic and dihedral classes are formed from sequences of distinct letters".into()));
    }
    let n = seq.len();
    let mut best: Option<(Vec<String>, BraidWord)> = None;
    for (g, lift) in group_elements(dihedral, n) {
        let s = g.act_vec(seq);
        if best.as_ref().is_none_or(|(b, _)| s < *b) {
            best = Some((s, lift));
        }
    }
    Ok(best.unwrap_or((Vec::new(), BraidWord::identity(0))))
}

type Pair = (Option<PlanarTree>, Vec<String>, BraidWord);

fn least_pair(dihedral: bool, tree: Option<&PlanarTree>, seq: &[String]) -> Result<Pair> {
    if !distinct(seq) {
        return Err(Error::Invalid("cyclic and dihedral classes are formed from sequences of distinct letters".into()));
    }
    let n = seq.len();
    let mut best: Option<Pair> = None;
    for (g, lift) in group_elements(dihedral, n) {
        let s = g.act_vec(seq);
        let t = match tree {
            Some(t) => Some(t.relabel(&g)?),
            None => None,
        };
        let better = match &best {
            None => true,
            Some((bt, bs, _)) => (&s, &t) < (bs, bt),
        };
        if better {
            best = Some((t, s, lift));
        }
    }
    Ok(best.unwrap_or((None, Vec::new(), BraidWord::identity(0))))
}

/// The object of `target` obtained by contracting `x`, with the braid from `x` to it.
pub fn contract_object(target: CatKind, x: &UObject) -> Result<(UObject, BraidWord)> {
    if !target.is_quotient() {
        if target == x.kind() {
            return Ok((x.clone(), BraidWord::identity(x.len())));
        }
        if target == CatKind::B && x.kind() == CatKind::PaB {
            return Ok((UObject::B { seq: x.seq().to_vec() }, BraidWord::identity(x.len())));
        }
        return Err(Error::Invalid(format!("no functor from {} to {target}", x.kind())));
    }
    let seq = x.seq().to_vec();
    let pre = match (target, x) {
        (CatKind::Cyc, UObject::B { .. } | UObject::PaB { .. } | UObject::Cyc { .. } | UObject::PaCyc { .. }) => {
            UObject::Cyc { seq }
        }
        (CatKind::Dih, _) => UObject::Dih { seq },
        (CatKind::PaCyc | CatKind::PaDih, UObject::PaB { tree, .. }) => {
            let t = if seq.len() >= 2 { Some(root_contract(tree)?) } else { None };
            if target == CatKind::PaCyc {
                UObject::PaCyc { tree: t, seq }
            } else {
                UObject::PaDih { tree: t, seq }
            }
        }
        (CatKind::PaDih, UObject::PaCyc { tree, .. } | UObject::PaDih { tree, .. }) => UObject::PaDih { tree: tree.clone(), seq },
        (CatKind::PaCyc, UObject::PaCyc { .. }) => x.clone(),
        _ => return Err(Error::Invalid(format!("no contraction from {} to {target}", x.kind()))),
    };
    canonicalize(&pre)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawMorphism")]
pub struct UMorphism {
    pub source: UObject,
    pub target: UObject,
    pub elem: BraidWord,
}

#[derive(Deserialize)]
struct RawMorphism {
    source: UObject,
    target: UObject,
    elem: BraidWord,
}

impl TryFrom<RawMorphism> for UMorphism {
    type Error = Error;

    fn try_from(r: RawMorphism) -> Result<Self> {
        UMorphism::new(r.source, r.target, r.elem)
    }
}

impl UMorphism {
    /// Builds `elem : source -> target`, checking kinds and that the braid's permutation carries
    /// the source sequence to the target sequence.
    pub fn new(source: UObject, target: UObject, elem: BraidWord) -> Result<Self> {
        if source.kind() != target.kind() {
            return Err(Error::Invalid(format!("{} object and {} object", source.kind(), target.kind())));
        }
        source.validate()?;
        target.validate()?;
        let n = source.len();
        if target.len() != n || elem.strands() != n.max(1) {
            return Err(Error::Dimension(format!("braid on {} strands between objects of length {n} and {}", elem.strands(), target.len())));
        }
        if n > 0 && elem.perm().act_vec(source.seq()) != target.seq() {
            return Err(Error::Invalid("the braid's permutation does not carry the source sequence to the target".into()));
        }
        Ok(UMorphism { source, target, elem })
    }

    pub fn identity(x: &UObject) -> Result<Self> {
        UMorphism::new(x.clone(), x.clone(), BraidWord::identity(x.len()))
    }

    pub fn kind(&self) -> CatKind {
        self.source.kind()
    }

    /// `self o f`.
    pub fn after(&self, f: &UMorphism) -> Result<UMorphism> {
        if f.target != self.source {
            return Err(Error::Invalid("morphisms are not composable".into()));
        }
        Ok(UMorphism { source: f.source.clone(), target: self.target.clone(), elem: self.elem.mul(&f.elem)? })
    }

    pub fn inverse(&self) -> UMorphism {
        UMorphism { source: self.target.clone(), target: self.source.clone(), elem: self.elem.inv() }
    }

    /// `self (x) other` in `B_S` or `PaB_S`.
    pub fn tensor(&self, other: &UMorphism) -> Result<UMorphism> {
        let elem = match (self.source.len(), other.source.len()) {
            (0, _) => other.elem.clone(),
            (_, 0) => self.elem.clone(),
            _ => juxtapose(&self.elem, &other.elem),
        };
        UMorphism::new(self.source.tensor(&other.source)?, self.target.tensor(&other.target)?, elem)
    }
}

/// Equality of parallel morphisms in their category; `degree` is the truncation used on the dihedral side.
pub fn umor_eq(a: &UMorphism, b: &UMorphism, degree: usize) -> Result<bool> {
    if a.source != b.source || a.target != b.target {
        return Ok(false);
    }
    let n = a.source.len();
    match a.kind() {
        CatKind::B | CatKind::PaB => braid_eq(&a.elem, &b.elem),
        CatKind::Cyc | CatKind::PaCyc if n >= 3 => eq_mod_center(&a.elem, &b.elem),
        CatKind::Dih | CatKind::PaDih if n >= 3 => {
            let g = crate::assoc::Gamma0n::new(n, degree)?;
            use crate::catcore::PermGroup;
            g.eq(&a.elem, &b.elem)
        }
        // B_2 / Z_2 and Gamma_{0,2} are S_2; smaller groups are trivial.
        _ => Ok(a.elem.perm() == b.elem.perm()),
    }
}

pub fn is_identity(m: &UMorphism, degree: usize) -> Result<bool> {
    umor_eq(m, &UMorphism::identity(&m.source)?, degree)
}

/// The functor `<->` from `B_S`/`PaB_S` (or a finer quotient) to `target`.
pub fn contract(target: CatKind, m: &UMorphism) -> Result<UMorphism> {
    let (src, p) = contract_object(target, &m.source)?;
    let (tgt, q) = contract_object(target, &m.target)?;
    let elem = q.mul(&m.elem)?.mul(&p.inv())?;
    UMorphism::new(src, tgt, elem)
}

/// Description of a hom set.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HomDescriptor {
    pub kind: CatKind,
    pub empty: bool,
    /// The group whose elements (over the listed permutations) form the hom set.
    pub group: String,
    /// Permutations `f` (one-based images) with `f . s = s'`.
    pub permutations: Vec<Vec<usize>>,
    /// One morphism of the hom set when nonempty.
    pub representative: Option<UMorphism>,
}

pub fn hom(kind: CatKind, x: &UObject, y: &UObject) -> Result<HomDescriptor> {
    if x.kind() != kind || y.kind() != kind {
        return Err(Error::Invalid(format!("objects of {} and {} in {kind}", x.kind(), y.kind())));
    }
    x.validate()?;
    y.validate()?;
    let n = x.len();
    let group = match kind {
        CatKind::B | CatKind::PaB => format!("B_{n}"),
        CatKind::Cyc | CatKind::PaCyc => format!("B_{n}/Z_{n}"),
        CatKind::Dih | CatKind::PaDih => format!("Gamma_{{0,{n}}}"),
    };
    let perms: Vec<Perm> = if y.len() != n {
        Vec::new()
    } else {
        Perm::all(n).into_iter().filter(|p| p.act_vec(x.seq()) == y.seq()).collect()
    };
    let representative = match perms.first() {
        Some(p) => Some(UMorphism::new(x.clone(), y.clone(), positive_lift(p))?),
        None => None,
    };
    Ok(HomDescriptor {
        kind,
        empty: perms.is_empty(),
        group,
        permutations: perms.iter().map(|p| p.images().iter().map(|i| i + 1).collect()).collect(),
        representative,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StructureKind {
    Beta,
    Assoc,
    Theta,
    HbalA,
}

impl StructureKind {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "beta" => StructureKind::Beta,
            "assoc" => StructureKind::Assoc,
            "theta" => StructureKind::Theta,
            "hbal_a" | "hbal" => StructureKind::HbalA,
            _ => return Err(Error::Parse(format!("unknown structure morphism `{s}` (beta, assoc, theta, hbal_a)"))),
        })
    }

    pub fn arity(self) -> usize {
        match self {
            StructureKind::Beta => 2,
            StructureKind::Assoc => 3,
            StructureKind::Theta | StructureKind::HbalA => 1,
        }
    }
}

/// `beta_{X,Y} = b_{|X||Y|}`, `a_{X,Y,Z} = 1`, `theta_X = z_{|X|}`, `a_X = h_{|X|}` in `B_S` or `PaB_S`.
pub fn structure_morphism(kind: StructureKind, objects: &[UObject]) -> Result<UMorphism> {
    if objects.len() != kind.arity() {
        return Err(Error::Invalid(format!("{kind:?} takes {} objects", kind.arity())));
    }
    let sizes: Vec<usize> = objects.iter().map(UObject::len).collect();
    match kind {
        StructureKind::Beta => {
            let (x, y) = (&objects[0], &objects[1]);
            UMorphism::new(x.tensor(y)?, y.tensor(x)?, braiding_block(sizes[0], sizes[1]))
        }
        StructureKind::Assoc => {
            let (x, y, z) = (&objects[0], &objects[1], &objects[2]);
            let n = sizes.iter().sum::<usize>();
            UMorphism::new(x.tensor(y)?.tensor(z)?, x.tensor(&y.tensor(z)?)?, BraidWord::identity(n))
        }
        StructureKind::Theta => UMorphism::new(objects[0].clone(), objects[0].clone(), full_twist(sizes[0].max(1))),
        StructureKind::HbalA => UMorphism::new(objects[0].clone(), objects[0].star()?, half_twist(sizes[0].max(1))),
    }
}

/// `m^k` for an endomorphism.
pub fn umor_pow(m: &UMorphism, k: i64) -> Result<UMorphism> {
    if m.source != m.target {
        return Err(Error::Invalid("powers of non-endomorphisms".into()));
    }
    Ok(UMorphism { source: m.source.clone(), target: m.target.clone(), elem: m.elem.pow(k) })
}

/// `id_X` as a morphism.
pub fn id_of(x: &UObject) -> Result<UMorphism> {
    UMorphism::identity(x)
}

/// The default letters `a, b, c, ...`.
pub fn letters(n: usize) -> Vec<String> {
    (0..n).map(|i| ((b'a' + (i % 26) as u8) as char).to_string()).collect()
}
