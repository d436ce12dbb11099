use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use teich0::assoc::{from_per_degree, i_phi_between, k_phi_between, solve_associator, Associator};
use teich0::braid::{braid_eq, positive_lift, eq_mod_center, special, star_involution, BraidWord, SpecialKind};
use teich0::catcore::{cyc_groupoid, CatMorphism, SmallCategory};
use teich0::error::{Error, Result};
use teich0::exactalg::Rational;
use teich0::gt::{check_grt, check_gt_relations, gt_act_on_associator, gt_mul, i_endofunctor, i_endofunctor_graded, i_phi, solve_gt, GtElement};
use teich0::liealg::{algebra, bch, element_from_json, element_to_json, AlgKind, LieElement};
use teich0::univcat::{canonicalize, contract, contract_object, hom, teich_objects, CatKind, ParenTree, UMorphism, UObject};
use teich0::perm::Perm;
use teich0::verify;

#[derive(Parser)]
#[command(name = "teich0", version, about = "Exact braid, universal-category, Teichmuller groupoid and Grothendieck-Teichmuller computations")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Global {
    /// Truncation degree N.
    #[arg(long, global = true, env = "TEICH0_DEGREE", default_value_t = 4)]
    degree: usize,
    /// The coupling mu of associators.
    #[arg(long, global = true, default_value = "1")]
    mu: String,
    /// Seed for randomized sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output format (verify defaults to text, everything else to json).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Shorthand for `--format json`.
    #[arg(long, global = true, conflicts_with = "format")]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Braid words.
    #[command(subcommand)]
    Braid(BraidCmd),
    /// The groupoids C_{Gamma,G,S}.
    #[command(subcommand)]
    Cat(CatCmd),
    /// The universal categories, contractions and Teichmuller groupoids.
    #[command(subcommand)]
    Ucat(UcatCmd),
    /// Graded Lie algebras t_n, p_n and f_2.
    #[command(subcommand)]
    Lie(LieCmd),
    /// Associators and the graded representation.
    #[command(subcommand)]
    Assoc(AssocCmd),
    /// The Grothendieck-Teichmuller semigroup.
    #[command(subcommand)]
    Gt(GtCmd),
    /// Run the verification suite: `all` or one section.
    Verify {
        #[arg(default_value = "all")]
        section: String,
    },
}

#[derive(Subcommand)]
enum BraidCmd {
    /// Equality of two braids (in B_n, or B_n/Z_n with --center).
    Eq {
        a: String,
        b: String,
        #[arg(long)]
        strands: Option<usize>,
        #[arg(long)]
        center: bool,
    },
    /// A distinguished braid: half_twist, full_twist, rho, sphere_relator, braiding_block, pure_gen.
    Special {
        kind: String,
        #[arg(long)]
        n: usize,
        /// Extra indices (braiding_block m; pure_gen i j).
        #[arg(long, value_delimiter = ',')]
        args: Vec<usize>,
    },
    /// The permutation of a braid (one-based images).
    Perm {
        b: String,
        #[arg(long)]
        strands: Option<usize>,
    },
    /// The involution sigma_i -> sigma_{n-i}.
    Star {
        b: String,
        #[arg(long)]
        strands: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Groupoid {
    Cyc,
    Dih,
}

#[derive(Subcommand)]
enum CatCmd {
    /// Objects of Cyc_S or Dih_S.
    Objects {
        #[arg(long, value_enum)]
        group: Groupoid,
        #[arg(long, value_delimiter = ',')]
        letters: Vec<String>,
    },
    /// A morphism between two objects (sequences of letters), projected to the quotient.
    Hom {
        #[arg(long, value_enum)]
        group: Groupoid,
        x: String,
        y: String,
        /// A braid from x to a sequence in the orbit of y (defaults to the positive lift).
        #[arg(long)]
        braid: Option<String>,
    },
    /// `g o f` for morphisms {"source", "target", "elem"}.
    Compose {
        #[arg(long, value_enum)]
        group: Groupoid,
        g: String,
        f: String,
    },
}

#[derive(Subcommand)]
enum UcatCmd {
    /// Validate an object and report its canonical representative.
    Obj { x: String },
    /// The hom set between two objects of the same category.
    Hom { x: String, y: String },
    /// Contract an object or morphism to Cyc, Dih, PaCyc or PaDih.
    Contract {
        #[arg(long)]
        target: String,
        m: String,
    },
    /// Objects of T_{0,S} (or T'_{0,S} with --cyclic).
    Teich {
        #[arg(long, value_delimiter = ',')]
        letters: Vec<String>,
        #[arg(long)]
        cyclic: bool,
    },
}

#[derive(Subcommand)]
enum LieCmd {
    /// Dimensions per degree.
    Dims {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// `[x, y]`; elements are per-degree coordinate lists or generator names (t12, A, B).
    Bracket {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        x: String,
        y: String,
    },
    /// `log(exp(x) exp(y))`.
    Exp {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        x: String,
        y: String,
    },
}

#[derive(Subcommand)]
enum AssocCmd {
    /// Solve for an associator at (mu, N).
    Solve,
    /// The image of a braid in exp(t_n) x| S_n (or exp(p_n) x| S_n with `--target p`).
    Eval {
        #[arg(long)]
        braid: String,
        /// Source parenthesization, nested pairs or dot notation.
        #[arg(long)]
        tree: String,
        #[arg(long, value_enum, default_value = "t")]
        target: EvalTarget,
        /// Target parenthesization (defaults to the source one).
        #[arg(long)]
        to_tree: Option<String>,
        /// Associator JSON (solved at (mu, N) when absent).
        #[arg(long)]
        assoc: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EvalTarget {
    T,
    P,
}

#[derive(Subcommand)]
enum GtCmd {
    /// Check duality, hexagon and pentagon.
    Check { e: String },
    /// Solve for a pro element with the given lambda.
    Solve {
        #[arg(long, default_value = "1")]
        lambda: String,
    },
    /// `(lambda, f)(lambda', f')`.
    Mul { a: String, b: String },
    /// Act on an associator (default) or on a PaB morphism with --morphism.
    Act {
        e: String,
        #[arg(long)]
        assoc: Option<String>,
        #[arg(long)]
        morphism: Option<String>,
    },
    /// `i_Phi(e)` in GRT.
    ToGrt {
        e: String,
        #[arg(long)]
        assoc: Option<String>,
    },
}

fn read_arg(s: &str) -> Result<String> {
    if s == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(buf)
    } else if let Some(path) = s.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))
    } else {
        Ok(s.to_string())
    }
}

fn parse_json(s: &str) -> Result<Value> {
    serde_json::from_str(&read_arg(s)?).map_err(|e| Error::Parse(format!("malformed JSON: {e}")))
}

fn from_value<T: serde::de::DeserializeOwned>(v: Value) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))
}

/// `{"strands", "letters"}` or a bare letter list (strands from --strands or the largest index).
fn parse_braid(s: &str, strands: Option<usize>) -> Result<BraidWord> {
    let v = parse_json(s)?;
    if v.is_object() {
        return from_value(v);
    }
    let letters: Vec<(usize, i64)> = from_value(v)?;
    let n = strands.unwrap_or_else(|| letters.iter().map(|l| l.0 + 1).max().unwrap_or(1));
    BraidWord::new(n, letters)
}

/// Nested pairs (`[["leaf","leaf"],"leaf"]`) or dot notation (`(..).`).
fn parse_tree(s: &str) -> Result<ParenTree> {
    let s = read_arg(s)?;
    match serde_json::from_str::<Value>(&s) {
        Ok(v) => ParenTree::from_json(&v),
        Err(_) => ParenTree::parse_dots(&s),
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    s.parse()
}

struct Ctx {
    degree: usize,
    mu: Rational,
    seed: u64,
}

impl Ctx {
    fn associator(&self, given: &Option<String>) -> Result<Associator> {
        match given {
            Some(s) => Associator::from_json(&parse_json(s)?),
            None => Ok(solve_associator(self.degree, &self.mu)?.as_ref().clone()),
        }
    }
}

fn lie_kind(name: &str, n: usize) -> Result<AlgKind> {
    AlgKind::parse(name, n)
}

/// A generator name (`t12`, `A`, `x1`), an element object, or per-degree coordinate lists.
fn lie_element(s: &str, kind: AlgKind, degree: usize) -> Result<LieElement> {
    let alg = algebra(kind, degree);
    let v: Value = serde_json::from_str(&read_arg(s)?).unwrap_or_else(|_| Value::String(s.to_string()));
    match v {
        Value::String(g) => {
            let swapped = g.strip_prefix('t').filter(|r| r.len() == 2).map(|r| format!("t{}", r.chars().rev().collect::<String>()));
            let idx = alg.gen_names.iter().position(|x| *x == g || Some(x) == swapped.as_ref());
            idx.map(|i| LieElement::gen(&alg, i)).ok_or_else(|| Error::Parse(format!("`{g}` is not a generator of {}", kind.label())))
        }
        Value::Object(_) => {
            let (k, x) = element_from_json(&v)?;
            if k != kind || x.alg.degree != degree {
                return Err(Error::Dimension(format!("element of {} at N = {} used in {} at N = {degree}", k.label(), x.alg.degree, kind.label())));
            }
            Ok(x)
        }
        v => LieElement::from_coords(&alg, from_per_degree(&alg, &v)?),
    }
}

fn run(cli: Cli) -> Result<(Value, bool)> {
    let g = cli.global;
    let ctx = Ctx { degree: g.degree, mu: parse_rational(&g.mu)?, seed: g.seed };
    if ctx.degree == 0 {
        return Err(Error::Invalid("the truncation degree must be at least 1".into()));
    }
    if ctx.mu.is_zero() {
        return Err(Error::Invalid("mu must be nonzero".into()));
    }
    let out = match cli.cmd {
        Cmd::Braid(c) => match c {
            BraidCmd::Eq { a, b, strands, center } => {
                let (a, b) = (parse_braid(&a, strands)?, parse_braid(&b, strands)?);
                if a.strands() != b.strands() {
                    return Err(Error::Dimension(format!("braids on {} and {} strands", a.strands(), b.strands())));
                }
                json!(if center { eq_mod_center(&a, &b)? } else { braid_eq(&a, &b)? })
            }
            BraidCmd::Special { kind, n, args } => json!(special(SpecialKind::parse(&kind, &args)?, n)?),
            BraidCmd::Perm { b, strands } => {
                let b = parse_braid(&b, strands)?;
                json!(b.perm().images().iter().map(|i| i + 1).collect::<Vec<_>>())
            }
            BraidCmd::Star { b, strands } => json!(star_involution(&parse_braid(&b, strands)?)),
        },
        Cmd::Cat(c) => cat_cmd(c, &ctx)?,
        Cmd::Ucat(c) => match c {
            UcatCmd::Obj { x } => {
                let x: UObject = from_value(parse_json(&x)?)?;
                let (canon, path) = canonicalize(&x)?;
                json!({ "kind": x.kind(), "size": x.len(), "canonical": canon, "path": path, "is_canonical": canon == x })
            }
            UcatCmd::Hom { x, y } => {
                let x: UObject = from_value(parse_json(&x)?)?;
                let y: UObject = from_value(parse_json(&y)?)?;
                json!(hom(x.kind(), &x, &y)?)
            }
            UcatCmd::Contract { target, m } => {
                let target = CatKind::parse(&target)?;
                let v = parse_json(&m)?;
                if v.get("kind").is_some() {
                    let x: UObject = from_value(v)?;
                    let (obj, path) = contract_object(target, &x)?;
                    json!({ "object": obj, "path": path })
                } else {
                    let m: UMorphism = from_value(v)?;
                    json!(contract(target, &m)?)
                }
            }
            UcatCmd::Teich { letters, cyclic } => {
                let objs = teich_objects(&letters, !cyclic)?;
                json!({
                    "count": objs.len(),
                    "objects": objs.iter().map(|(t, s)| json!({"tree": t, "seq": s})).collect::<Vec<_>>(),
                })
            }
        },
        Cmd::Lie(c) => match c {
            LieCmd::Dims { algebra: name, n } => json!(algebra(lie_kind(&name, n)?, ctx.degree).dims()),
            LieCmd::Bracket { algebra: name, n, x, y } => {
                let kind = lie_kind(&name, n)?;
                let (x, y) = (lie_element(&x, kind, ctx.degree)?, lie_element(&y, kind, ctx.degree)?);
                element_to_json(kind, &x.bracket(&y)?)
            }
            LieCmd::Exp { algebra: name, n, x, y } => {
                let kind = lie_kind(&name, n)?;
                let (x, y) = (lie_element(&x, kind, ctx.degree)?, lie_element(&y, kind, ctx.degree)?);
                element_to_json(kind, &LieElement { alg: x.alg.clone(), coords: bch(&x.alg, &x.coords, &y.coords) })
            }
        },
        Cmd::Assoc(c) => match c {
            AssocCmd::Solve => {
                let a = solve_associator(ctx.degree, &ctx.mu)?;
                let mut v = a.to_json();
                v["valid"] = json!(a.is_valid()?);
                v
            }
            AssocCmd::Eval { braid, tree, target, to_tree, assoc } => {
                let a = ctx.associator(&assoc)?;
                let b = parse_braid(&braid, None)?;
                let src = parse_tree(&tree)?;
                let tgt = match to_tree {
                    Some(t) => parse_tree(&t)?,
                    None => src.clone(),
                };
                if src.leaves() != b.strands() || tgt.leaves() != b.strands() {
                    return Err(Error::Dimension(format!("trees with {} and {} leaves for a braid on {} strands", src.leaves(), tgt.leaves(), b.strands())));
                }
                match target {
                    EvalTarget::T => i_phi_between(&src, &tgt, &a, &b)?.to_json(),
                    EvalTarget::P => k_phi_between(&src, &tgt, &a, &b)?.to_json(),
                }
            }
        },
        Cmd::Gt(c) => match c {
            GtCmd::Check { e } => {
                let r = check_gt_relations(&GtElement::from_json(&parse_json(&e)?, ctx.degree)?)?;
                return Ok((r.to_json(), r.all()));
            }
            GtCmd::Solve { lambda } => {
                let e = solve_gt(&parse_rational(&lambda)?, ctx.degree, ctx.seed)?;
                json!({ "seed": ctx.seed, "element": e.to_json(), "relations": check_gt_relations(&e)?.to_json() })
            }
            GtCmd::Mul { a, b } => {
                let a = GtElement::from_json(&parse_json(&a)?, ctx.degree)?;
                let b = GtElement::from_json(&parse_json(&b)?, ctx.degree)?;
                gt_mul(&a, &b)?.to_json()
            }
            GtCmd::Act { e, assoc, morphism } => {
                let e = GtElement::from_json(&parse_json(&e)?, ctx.degree)?;
                match morphism {
                    Some(m) => {
                        let m: UMorphism = from_value(parse_json(&m)?)?;
                        match e {
                            GtElement::Discrete { .. } if assoc.is_none() => json!(i_endofunctor(&e, &m)?),
                            _ => {
                                let a = ctx.associator(&assoc)?;
                                i_endofunctor_graded(&e, &m, &a)?.to_json()
                            }
                        }
                    }
                    None => {
                        let a = ctx.associator(&assoc)?;
                        gt_act_on_associator(&e, &a)?.to_json()
                    }
                }
            }
            GtCmd::ToGrt { e, assoc } => {
                let e = GtElement::from_json(&parse_json(&e)?, ctx.degree)?;
                let a = ctx.associator(&assoc)?;
                let h = i_phi(&e, &a)?;
                json!({ "grt": h.to_json(), "relations": check_grt(&h)?.to_json() })
            }
        },
        Cmd::Verify { section } => {
            let cfg = verify::Config { degree: ctx.degree, mu: ctx.mu.clone(), seed: ctx.seed };
            let r = verify::run(&section, &cfg)?;
            let pass = r.all_pass();
            return Ok((if g.json || g.format == Some(Format::Json) { r.to_json() } else { Value::String(r.to_text()) }, pass));
        }
    };
    Ok((out, true))
}

fn cat_cmd(c: CatCmd, ctx: &Ctx) -> Result<Value> {
    macro_rules! with_groupoid {
        ($group:expr, $letters:expr, |$q:ident| $body:expr) => {
            match $group {
                Groupoid::Cyc => {
                    let $q = cyc_groupoid($letters)?;
                    $body
                }
                Groupoid::Dih => {
                    let $q = teich0::assoc::dih_groupoid($letters, ctx.degree)?;
                    $body
                }
            }
        };
    }
    let seq = |s: &str| -> Result<Vec<String>> { from_value(parse_json(s)?) };
    Ok(match c {
        CatCmd::Objects { group, letters } => with_groupoid!(group, letters, |q| json!(q.objects())),
        CatCmd::Hom { group, x, y, braid } => {
            let (x, y) = (seq(&x)?, seq(&y)?);
            let mut letters = x.clone();
            letters.sort();
            with_groupoid!(group, letters, |q| {
                let b = match &braid {
                    Some(b) => parse_braid(b, Some(x.len()))?,
                    None => {
                        let images = x.iter().map(|l| y.iter().position(|m| m == l)).collect::<Option<Vec<_>>>();
                        let images = images.ok_or_else(|| Error::Invalid("x and y must use the same letters".into()))?;
                        positive_lift(&Perm::from_images(images)?)
                    }
                };
                let m = CatMorphism::new(x.clone(), b.perm().act_vec(&x), b);
                if q.canonical(&m.target).0 != q.canonical(&y).0 {
                    return Err(Error::Invalid("the braid does not reach the orbit of y".into()));
                }
                json!(q.project(&m)?)
            })
        }
        CatCmd::Compose { group, g, f } => {
            let g: CatMorphism<Vec<String>, BraidWord> = from_value(parse_json(&g)?)?;
            let f: CatMorphism<Vec<String>, BraidWord> = from_value(parse_json(&f)?)?;
            let mut letters = f.source.clone();
            letters.sort();
            with_groupoid!(group, letters, |q| {
                for m in [&f, &g] {
                    if !q.is_morphism(m)? {
                        return Err(Error::Invalid(format!("{m:?} is not a morphism of the quotient")));
                    }
                }
                json!(q.compose(&g, &f)?)
            })
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = if cli.global.json { Some(Format::Json) } else { cli.global.format };
    match run(cli) {
        Ok((v, pass)) => {
            match (v, format) {
                (Value::String(s), _) => print!("{s}"),
                (v, Some(Format::Text)) => println!("{}", serde_json::to_string_pretty(&v).expect("serializable")),
                (v, _) => println!("{v}"),
            }
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
