//! The universal affine vertex superalgebra underlying the rectangular
//! W-algebra: even generators F on a two-column index model, odd generators
//! psi on the (column 2, column 1) block, exact n-th products on PBW states,
//! the odd differential, and the W-generators with their OPE table.
//!
//! Index model: a component index is (column, row) with column in {1, 2} and
//! row in I_n = {±1..±n}. The form-dual of (c, i) is (3-c, -i); the sign
//! rule for the sp symmetry is keyed on column parity. The paper-facing
//! dictionary is: column 2 = the "n+i" labels, column 1 = the "-n+i" labels,
//! hat = column 1 -> 2, tilde = column 2 -> 1. Reports print indices in the
//! two-column form so every value is traceable to this convention.

pub mod d0;
pub mod ope;
pub mod state;
pub mod wgen;

use crate::coeff::{rat, ParamPoly, Rational};
use std::fmt;

/// Component index: column 1 or 2, row in I_n.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CIdx {
    pub col: u8,
    pub row: i8,
}

pub fn ci(col: u8, row: i8) -> CIdx {
    debug_assert!(col == 1 || col == 2);
    debug_assert!(row != 0);
    CIdx { col, row }
}

impl CIdx {
    /// form-dual index
    pub fn neg(self) -> CIdx {
        CIdx {
            col: 3 - self.col,
            row: -self.row,
        }
    }
}

impl fmt::Debug for CIdx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.col, self.row)
    }
}

impl fmt::Display for CIdx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.col, self.row)
    }
}

/// sp-symmetry sign (-1)^{p(A)+p(B)} with column parity: +1 on the diagonal
/// blocks, -1 across columns.
fn mirror_sign(a: CIdx, b: CIdx) -> i64 {
    if a.col == b.col {
        1
    } else {
        -1
    }
}

/// Basis generator of the superalgebra, stored in canonical form.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GenA {
    F(CIdx, CIdx),
    Psi(CIdx, CIdx),
}

impl GenA {
    pub fn parity(&self) -> u8 {
        match self {
            GenA::F(..) => 0,
            GenA::Psi(..) => 1,
        }
    }
}

impl fmt::Display for GenA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenA::F(a, b) => write!(f, "F[{a},{b}]"),
            GenA::Psi(a, b) => write!(f, "psi[{a},{b}]"),
        }
    }
}

/// Canonicalise an F index pair: the (2,2) block maps to the (1,1) block
/// with a sign, and the (2,1) block folds onto its own mirror. The (1,2)
/// block never occurs in the even part we model.
pub fn f_gen(a: CIdx, b: CIdx) -> (Rational, GenA) {
    let s = mirror_sign(a, b);
    match (a.col, b.col) {
        (2, 2) => {
            // F_{A,B} = -sigma F_{-B,-A}
            (rat(-s), GenA::F(b.neg(), a.neg()))
        }
        (1, 1) => (rat(1), GenA::F(a, b)),
        (2, 1) => {
            let (ma, mb) = (b.neg(), a.neg());
            if (a, b) <= (ma, mb) {
                (rat(1), GenA::F(a, b))
            } else {
                (rat(-s), GenA::F(ma, mb))
            }
        }
        _ => panic!("F generator in the (1,2) block is outside the modelled algebra"),
    }
}

/// Canonicalise a psi index pair in the (column 2, column 1) block:
/// psi_{A,B} = -sigma psi_{-B,-A} with the same row-parity sigma as the
/// even part; on the mixed-sign chart this is the identification psi_{i,j}
/// = psi_{-j,-i} and on equal-sign pairs it carries a minus.
pub fn psi_gen(a: CIdx, b: CIdx) -> (Rational, GenA) {
    assert_eq!(
        (a.col, b.col),
        (2, 1),
        "psi generator outside the cross block"
    );
    let (ma, mb) = (b.neg(), a.neg());
    if (a, b) <= (ma, mb) {
        (rat(1), GenA::Psi(a, b))
    } else {
        (rat(-mirror_sign(a, b)), GenA::Psi(ma, mb))
    }
}

/// Expand a canonical F generator into its matrix-unit terms.
fn expand_f(a: CIdx, b: CIdx) -> Vec<(i64, (CIdx, CIdx))> {
    let s = mirror_sign(a, b);
    vec![(1, (a, b)), (-s, (b.neg(), a.neg()))]
}

/// Linear combination of canonical generators with rational coefficients.
pub type GenCombo = Vec<(Rational, GenA)>;

pub fn push_combo(out: &mut Vec<(Rational, GenA)>, c: Rational, g: GenA) {
    use num_traits::Zero;
    if c.is_zero() {
        return;
    }
    if let Some(slot) = out.iter_mut().find(|(_, h)| *h == g) {
        slot.0 += c;
    } else {
        out.push((c, g));
    }
}

fn cleanup(mut v: GenCombo) -> GenCombo {
    use num_traits::Zero;
    v.retain(|(c, _)| !c.is_zero());
    v.sort_by(|x, y| x.1.cmp(&y.1));
    v
}

/// Super-bracket of canonical generators. F-F goes through the matrix-unit
/// expansion and regroups; F-psi uses the cross-block action; psi-psi is
/// zero (the odd part is abelian with zero pairing).
pub fn bracket_gens(x: &GenA, y: &GenA) -> GenCombo {
    match (x, y) {
        (GenA::F(a, b), GenA::F(c, d)) => {
            let mut e_terms: Vec<(i64, (CIdx, CIdx))> = Vec::new();
            for (s1, (p, q)) in expand_f(*a, *b) {
                for (s2, (r, t)) in expand_f(*c, *d) {
                    if q == r {
                        e_terms.push((s1 * s2, (p, t)));
                    }
                    if t == p {
                        e_terms.push((-s1 * s2, (r, q)));
                    }
                }
            }
            // regroup matrix units into canonical F's; self-mirror units
            // belong to F_{A,-A} = 2 e_{A,-A}
            let mut out: GenCombo = Vec::new();
            let mut seen: Vec<(CIdx, CIdx)> = Vec::new();
            for idx in 0..e_terms.len() {
                let (coeff, (p, q)) = e_terms[idx];
                if coeff == 0 || seen.contains(&(p, q)) {
                    continue;
                }
                let total: i64 = e_terms
                    .iter()
                    .filter(|(_, pq)| *pq == (p, q))
                    .map(|(c, _)| c)
                    .sum();
                seen.push((p, q));
                if total == 0 {
                    continue;
                }
                let (mp, mq) = (q.neg(), p.neg());
                if (mp, mq) == (p, q) {
                    // F_{p, -p} = 2 e
                    let (sgn, g) = f_gen(p, q);
                    push_combo(&mut out, sgn * Rational::new(total.into(), 2.into()), g);
                } else {
                    seen.push((mp, mq));
                    let (sgn, g) = f_gen(p, q);
                    push_combo(&mut out, sgn * rat(total), g);
                }
            }
            cleanup(out)
        }
        (GenA::F(i, j), GenA::Psi(a, b)) => {
            // honest matrix action of the e-expansion on the cross block
            let mut out: GenCombo = Vec::new();
            for (s, (p, q)) in expand_f(*i, *j) {
                if q == *a {
                    let (sg, g) = psi_gen(p, *b);
                    push_combo(&mut out, rat(s) * sg, g);
                }
                if *b == p {
                    let (sg, g) = psi_gen(*a, q);
                    push_combo(&mut out, rat(-s) * sg, g);
                }
            }
            cleanup(out)
        }
        (GenA::Psi(a, b), GenA::F(..)) => {
            let inner = bracket_gens(y, &GenA::Psi(*a, *b));
            inner.into_iter().map(|(c, g)| (-c, g)).collect()
        }
        (GenA::Psi(..), GenA::Psi(..)) => Vec::new(),
    }
}

/// Invariant pairing: alpha/2 times the matrix trace on the even part,
/// zero on anything odd.
pub fn kappa(x: &GenA, y: &GenA) -> ParamPoly {
    match (x, y) {
        (GenA::F(a, b), GenA::F(c, d)) => {
            let mut tr = 0i64;
            for (s1, (p, q)) in expand_f(*a, *b) {
                for (s2, (r, t)) in expand_f(*c, *d) {
                    if q == r && t == p {
                        tr += s1 * s2;
                    }
                }
            }
            ParamPoly::alpha().scale(&Rational::new(tr.into(), 2.into()))
        }
        _ => ParamPoly::zero(),
    }
}
