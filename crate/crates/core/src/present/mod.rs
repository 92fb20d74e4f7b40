//! Generators-and-relations machinery: formal bracket expressions over
//! indexed generator symbols, relation families with quantifier ranges,
//! assignment homomorphisms into bracket-bearing targets, and the audit
//! engine that evaluates every relation instance to an exact residual.

pub mod audit;
pub mod expad;
pub mod models;
pub mod relations;
pub mod section4;

use crate::coeff::{Param, ParamPoly};
use crate::Result;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Fam {
    Xp,
    Xm,
    H,
}

impl fmt::Display for Fam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fam::Xp => write!(f, "X+"),
            Fam::Xm => write!(f, "X-"),
            Fam::H => write!(f, "H"),
        }
    }
}

/// Indexed generator symbol: family, node label (allowing -1 and n+1),
/// and loop level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GenSymbol {
    pub fam: Fam,
    pub node: i64,
    pub level: i64,
}

pub fn xp(node: i64, level: i64) -> FormalExpr {
    FormalExpr::Gen(GenSymbol {
        fam: Fam::Xp,
        node,
        level,
    })
}

pub fn xm(node: i64, level: i64) -> FormalExpr {
    FormalExpr::Gen(GenSymbol {
        fam: Fam::Xm,
        node,
        level,
    })
}

pub fn h(node: i64, level: i64) -> FormalExpr {
    FormalExpr::Gen(GenSymbol {
        fam: Fam::H,
        node,
        level,
    })
}

/// Formal bracket expression tree. Named leaves are twisted matrix elements
/// resolved by the active assignment; `Unit` is the algebra unit, legal only
/// in targets that have one (or with coefficient zero).
#[derive(Clone, Debug, PartialEq)]
pub enum FormalExpr {
    Gen(GenSymbol),
    FTwist { i: i32, j: i32, r: i64, s: i64 },
    Unit,
    Bracket(Box<FormalExpr>, Box<FormalExpr>),
    Scalar(ParamPoly, Box<FormalExpr>),
    Sum(Vec<FormalExpr>),
    Zero,
}

pub fn br(a: FormalExpr, b: FormalExpr) -> FormalExpr {
    FormalExpr::Bracket(Box::new(a), Box::new(b))
}

pub fn sc(c: ParamPoly, a: FormalExpr) -> FormalExpr {
    FormalExpr::Scalar(c, Box::new(a))
}

pub fn sci(c: i64, a: FormalExpr) -> FormalExpr {
    sc(ParamPoly::int(c), a)
}

pub fn sum(terms: Vec<FormalExpr>) -> FormalExpr {
    FormalExpr::Sum(terms)
}

pub fn ftw(i: i32, j: i32, r: i64, s: i64) -> FormalExpr {
    FormalExpr::FTwist { i, j, r, s }
}

/// A bracket-bearing evaluation target. Implementations expose an optional
/// parameter substitution that the evaluator applies to every scalar
/// coefficient (the classical-limit audits set hbar = eps = 0 this way).
pub trait TargetAlgebra {
    type El: Clone + PartialEq;

    fn gen(&self, g: &GenSymbol) -> Result<Self::El>;
    fn named(&self, i: i32, j: i32, r: i64, s: i64) -> Result<Self::El>;
    fn unit(&self) -> Option<Self::El>;
    fn bracket(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn add(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn scale(&self, c: &ParamPoly, a: &Self::El) -> Self::El;
    fn zero(&self) -> Self::El;
    fn is_zero(&self, a: &Self::El) -> bool;
    fn repr(&self, a: &Self::El) -> String;
    fn subst(&self) -> Option<&BTreeMap<Param, ParamPoly>> {
        None
    }
}

/// Evaluate a closed expression in the target, exactly.
pub fn evaluate<T: TargetAlgebra>(expr: &FormalExpr, target: &T) -> Result<T::El> {
    match expr {
        FormalExpr::Gen(g) => target.gen(g),
        FormalExpr::FTwist { i, j, r, s } => target.named(*i, *j, *r, *s),
        FormalExpr::Unit => match target.unit() {
            Some(u) => Ok(u),
            None => Err(crate::EngineError::Unresolvable("unit".into())),
        },
        FormalExpr::Zero => Ok(target.zero()),
        FormalExpr::Bracket(a, b) => {
            let ea = evaluate(a, target)?;
            let eb = evaluate(b, target)?;
            Ok(target.bracket(&ea, &eb))
        }
        FormalExpr::Scalar(c, a) => {
            let c = match target.subst() {
                Some(bind) => c.substitute(bind),
                None => c.clone(),
            };
            if c.is_zero() {
                return Ok(target.zero());
            }
            let ea = evaluate(a, target)?;
            Ok(target.scale(&c, &ea))
        }
        FormalExpr::Sum(terms) => {
            let mut acc = target.zero();
            for t in terms {
                let e = evaluate(t, target)?;
                acc = target.add(&acc, &e);
            }
            Ok(acc)
        }
    }
}

/// One relation instance ready for evaluation: the corrected reading is the
/// default audited one; when the literal text differs, the printed right
/// side rides along and its residual is reported with a ledger note.
#[derive(Clone, Debug)]
pub struct RelInstance {
    pub id: String,
    pub bindings: Vec<(char, i64)>,
    pub lhs: FormalExpr,
    pub rhs: FormalExpr,
    pub printed_rhs: Option<FormalExpr>,
    pub note: Option<String>,
}

impl RelInstance {
    pub fn plain(id: &str, bindings: Vec<(char, i64)>, lhs: FormalExpr, rhs: FormalExpr) -> Self {
        RelInstance {
            id: id.to_string(),
            bindings,
            lhs,
            rhs,
            printed_rhs: None,
            note: None,
        }
    }

    pub fn corrected(
        id: &str,
        bindings: Vec<(char, i64)>,
        lhs: FormalExpr,
        rhs: FormalExpr,
        printed_rhs: FormalExpr,
        note: &str,
    ) -> Self {
        RelInstance {
            id: id.to_string(),
            bindings,
            lhs,
            rhs,
            printed_rhs: Some(printed_rhs),
            note: Some(note.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Presentation {
    A,
    D,
    Dfin,
    Ty,
}

impl Presentation {
    pub fn parse(s: &str) -> Option<Presentation> {
        match s {
            "A" | "a" => Some(Presentation::A),
            "D" | "d" => Some(Presentation::D),
            "Dfin" | "dfin" => Some(Presentation::Dfin),
            "ty" | "Ty" | "TY" => Some(Presentation::Ty),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Presentation::A => "A",
            Presentation::D => "D",
            Presentation::Dfin => "Dfin",
            Presentation::Ty => "ty",
        }
    }
}

/// Level window for relation instantiation.
#[derive(Clone, Copy, Debug)]
pub struct Window {
    pub rmax: i64,
    pub smax: i64,
}
