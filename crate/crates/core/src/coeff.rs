//! Exact coefficient arithmetic: arbitrary-precision rationals and sparse
//! multivariate polynomials in the formal parameters `hbar`, `eps`, `alpha`.
//!
//! Everything downstream (loop brackets, vertex products, mode sums) carries
//! these as coefficients, so there is no floating point anywhere in the engine.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The three formal parameters of the engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Param {
    Hbar,
    Eps,
    Alpha,
}

impl Param {
    fn idx(self) -> usize {
        match self {
            Param::Hbar => 0,
            Param::Eps => 1,
            Param::Alpha => 2,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Param::Hbar => "hbar",
            Param::Eps => "eps",
            Param::Alpha => "alpha",
        }
    }
}

/// Sparse polynomial over the rationals in (hbar, eps, alpha).
///
/// Invariant: no zero coefficient is ever stored, so `terms.is_empty()`
/// is exactly "is the zero polynomial".
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ParamPoly {
    terms: BTreeMap<[u16; 3], Rational>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly::default()
    }

    pub fn one() -> Self {
        ParamPoly::constant(rat(1))
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = ParamPoly::default();
        if !c.is_zero() {
            p.terms.insert([0, 0, 0], c);
        }
        p
    }

    pub fn int(n: i64) -> Self {
        ParamPoly::constant(rat(n))
    }

    pub fn param(p: Param) -> Self {
        let mut e = [0u16; 3];
        e[p.idx()] = 1;
        let mut poly = ParamPoly::default();
        poly.terms.insert(e, rat(1));
        poly
    }

    pub fn hbar() -> Self {
        Self::param(Param::Hbar)
    }

    pub fn eps() -> Self {
        Self::param(Param::Eps)
    }

    pub fn alpha() -> Self {
        Self::param(Param::Alpha)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&[0, 0, 0])
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn add_term(&mut self, exps: [u16; 3], c: &Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        let mut out = ParamPoly::default();
        for (e, v) in &self.terms {
            out.terms.insert(*e, v * c);
        }
        out
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&rat(c))
    }

    /// Simultaneous substitution of parameters by polynomials; parameters
    /// without a binding are left alone.
    pub fn substitute(&self, bindings: &BTreeMap<Param, ParamPoly>) -> ParamPoly {
        let images: [ParamPoly; 3] = [
            bindings
                .get(&Param::Hbar)
                .cloned()
                .unwrap_or_else(ParamPoly::hbar),
            bindings
                .get(&Param::Eps)
                .cloned()
                .unwrap_or_else(ParamPoly::eps),
            bindings
                .get(&Param::Alpha)
                .cloned()
                .unwrap_or_else(ParamPoly::alpha),
        ];
        let mut out = ParamPoly::zero();
        for (e, c) in &self.terms {
            let mut term = ParamPoly::constant(c.clone());
            for (k, img) in images.iter().enumerate() {
                for _ in 0..e[k] {
                    term = &term * img;
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Exact evaluation at rational parameter values; used as an independent
    /// oracle in tests.
    pub fn eval(&self, at: &[Rational; 3]) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for k in 0..3 {
                for _ in 0..e[k] {
                    t *= &at[k];
                }
            }
            acc += t;
        }
        acc
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u16; 3], &Rational)> {
        self.terms.iter()
    }
}

impl Add for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Sub for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &-c.clone());
        }
        out
    }
}

impl Mul for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                out.add_term(e, &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        self.scale(&rat(-1))
    }
}

impl Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        (&self).neg()
    }
}

fn fmt_rational(c: &Rational) -> String {
    if c.denom().is_one() {
        format!("{}", c.numer())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || e.iter().all(|&x| x == 0) {
                factors.push(fmt_rational(&mag));
            }
            for p in [Param::Hbar, Param::Eps, Param::Alpha] {
                let k = e[p.idx()];
                if k == 1 {
                    factors.push(p.name().to_string());
                } else if k > 1 {
                    factors.push(format!("{}^{}", p.name(), k));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
