//! The matrix loop algebra gl(m) ⊗ Q[u^{±1}, v] together with the central
//! extension by differential one-forms modulo exact forms, the involution
//! `tau`, and the twisted basis elements built by [`LoopElement::f_elem`].
//!
//! One-forms are kept in the canonical basis
//! `{u^{-1} v^s du : s >= 0} ∪ {u^r v^s dv : r != 0, s >= 0}`;
//! every other monomial form reduces deterministically into that basis using
//! exactness of d(u^a v^b).

use crate::coeff::{rat, ParamPoly, Rational};
use crate::{EngineError, Result};
use std::collections::BTreeMap;
use std::fmt;

/// Canonicalised element of the one-form quotient.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct CenterElement {
    /// coefficient of u^{-1} v^s du, keyed by s
    pub du: BTreeMap<u32, ParamPoly>,
    /// coefficient of u^r v^s dv, keyed by (r, s) with r != 0
    pub dv: BTreeMap<(i64, u32), ParamPoly>,
}

impl CenterElement {
    pub fn zero() -> Self {
        CenterElement::default()
    }

    pub fn is_zero(&self) -> bool {
        self.du.is_empty() && self.dv.is_empty()
    }

    pub fn add_du(&mut self, s: u32, c: &ParamPoly) {
        if c.is_zero() {
            return;
        }
        let e = self.du.entry(s).or_insert_with(ParamPoly::zero);
        *e = &*e + c;
        if e.is_zero() {
            self.du.remove(&s);
        }
    }

    pub fn add_dv(&mut self, r: i64, s: u32, c: &ParamPoly) {
        assert!(r != 0, "dv part stored only for r != 0");
        if c.is_zero() {
            return;
        }
        let e = self.dv.entry((r, s)).or_insert_with(ParamPoly::zero);
        *e = &*e + c;
        if e.is_zero() {
            self.dv.remove(&(r, s));
        }
    }

    pub fn add(&self, other: &CenterElement) -> CenterElement {
        let mut out = self.clone();
        for (s, c) in &other.du {
            out.add_du(*s, c);
        }
        for ((r, s), c) in &other.dv {
            out.add_dv(*r, *s, c);
        }
        out
    }

    pub fn scale(&self, c: &ParamPoly) -> CenterElement {
        let mut out = CenterElement::zero();
        for (s, v) in &self.du {
            out.add_du(*s, &(v * c));
        }
        for ((r, s), v) in &self.dv {
            out.add_dv(*r, *s, &(v * c));
        }
        out
    }

    /// Reduce the monomial form u^a v^b du into the canonical basis.
    pub fn push_du_monomial(&mut self, a: i64, b: u32, coeff: &ParamPoly) {
        if coeff.is_zero() {
            return;
        }
        if a == -1 {
            self.add_du(b, coeff);
        } else if b == 0 {
            // u^a du = d(u^{a+1}/(a+1)), exact
        } else {
            // u^a v^b du = -(b/(a+1)) u^{a+1} v^{b-1} dv, and a+1 != 0
            let factor = -Rational::new(b.into(), (a + 1).into());
            self.push_dv_monomial(a + 1, b - 1, &coeff.scale(&factor));
        }
    }

    /// Reduce the monomial form u^a v^b dv into the canonical basis.
    pub fn push_dv_monomial(&mut self, a: i64, b: u32, coeff: &ParamPoly) {
        if coeff.is_zero() {
            return;
        }
        if a == 0 {
            // v^b dv = d(v^{b+1}/(b+1)), exact
        } else {
            self.add_dv(a, b, coeff);
        }
    }
}

/// The class of (u^p v^q) * d(u^a v^b) in the quotient, in canonical form.
pub fn omega_canonicalize(p: i64, q: u32, a: i64, b: u32) -> CenterElement {
    let mut out = CenterElement::zero();
    // d(u^a v^b) = a u^{a-1} v^b du + b u^a v^{b-1} dv
    if a != 0 {
        out.push_du_monomial(p + a - 1, q + b, &ParamPoly::int(a));
    }
    if b != 0 {
        out.push_dv_monomial(p + a, q + b - 1, &ParamPoly::int(b as i64));
    }
    out
}

/// Element of gl(m)[u^{±1}, v] plus a canonicalised central part.
///
/// Indices are nonzero integers in {±1..±n} for the twisted model or
/// {1..m} for the plain one; the arithmetic never needs to know which.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LoopElement {
    /// (i, j, r, s) -> coefficient of E_{i,j} u^r v^s
    pub body: BTreeMap<(i32, i32, i64, u32), ParamPoly>,
    pub center: CenterElement,
}

impl LoopElement {
    pub fn zero() -> Self {
        LoopElement::default()
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_empty() && self.center.is_zero()
    }

    pub fn e_mono(i: i32, j: i32, r: i64, s: u32) -> Self {
        let mut el = LoopElement::zero();
        el.add_body(i, j, r, s, &ParamPoly::one());
        el
    }

    /// Twisted basis element (E_{i,j} - (-1)^s E_{-j,-i}) u^r v^s.
    pub fn f_elem(i: i32, j: i32, r: i64, s: u32) -> Self {
        let mut el = LoopElement::zero();
        el.add_body(i, j, r, s, &ParamPoly::one());
        let sign = if s % 2 == 0 { -1 } else { 1 };
        el.add_body(-j, -i, r, s, &ParamPoly::int(sign));
        el
    }

    pub fn from_center(center: CenterElement) -> Self {
        LoopElement {
            body: BTreeMap::new(),
            center,
        }
    }

    pub fn add_body(&mut self, i: i32, j: i32, r: i64, s: u32, c: &ParamPoly) {
        if c.is_zero() {
            return;
        }
        let e = self
            .body
            .entry((i, j, r, s))
            .or_insert_with(ParamPoly::zero);
        *e = &*e + c;
        if e.is_zero() {
            self.body.remove(&(i, j, r, s));
        }
    }

    pub fn add(&self, other: &LoopElement) -> LoopElement {
        let mut out = self.clone();
        for ((i, j, r, s), c) in &other.body {
            out.add_body(*i, *j, *r, *s, c);
        }
        out.center = out.center.add(&other.center);
        out
    }

    pub fn sub(&self, other: &LoopElement) -> LoopElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LoopElement {
        self.scale(&ParamPoly::int(-1))
    }

    pub fn scale(&self, c: &ParamPoly) -> LoopElement {
        let mut out = LoopElement::zero();
        for ((i, j, r, s), v) in &self.body {
            out.add_body(*i, *j, *r, *s, &(v * c));
        }
        out.center = self.center.scale(c);
        out
    }

    pub fn scale_int(&self, c: i64) -> LoopElement {
        self.scale(&ParamPoly::int(c))
    }

    /// Lie bracket. Central parts of the inputs are inert; when
    /// `with_center` is set the Kassel cocycle kappa(z1,z2) a2 da1 valued in
    /// the canonical one-form basis is added, otherwise the bracket is the
    /// plain loop-algebra one.
    pub fn bracket(&self, other: &LoopElement, with_center: bool) -> LoopElement {
        let mut out = LoopElement::zero();
        for ((i1, j1, r1, s1), c1) in &self.body {
            for ((i2, j2, r2, s2), c2) in &other.body {
                let c = c1 * c2;
                let r = r1 + r2;
                let s = s1 + s2;
                if j1 == i2 {
                    out.add_body(*i1, *j2, r, s, &c);
                }
                if j2 == i1 {
                    out.add_body(*i2, *j1, r, s, &c.scale(&rat(-1)));
                }
                if with_center && j1 == i2 && j2 == i1 {
                    // trace form kappa(E_{i1,j1}, E_{i2,j2}) = 1 here
                    let form = omega_canonicalize(*r2, *s2, *r1, *s1);
                    out.center = out.center.add(&form.scale(&c));
                }
            }
        }
        out
    }

    /// tau(E_{i,j} u^r v^s) = -(-1)^s E_{-j,-i} u^r v^s, defined on the
    /// centerless part only. The global minus makes every f element a fixed
    /// point and tau a bracket automorphism; without it the f span would be
    /// the (-1) eigenspace, which is not a subalgebra.
    pub fn tau_apply(&self) -> Result<LoopElement> {
        if !self.center.is_zero() {
            return Err(EngineError::TauOnCenter);
        }
        let mut out = LoopElement::zero();
        for ((i, j, r, s), c) in &self.body {
            let sign = if s % 2 == 0 { -1 } else { 1 };
            out.add_body(-j, -i, *r, *s, &c.scale_int(sign));
        }
        Ok(out)
    }

    /// Trace of the coefficient of u^r v^s for every (r, s); all must vanish
    /// for an sl element.
    pub fn is_traceless(&self) -> bool {
        let mut traces: BTreeMap<(i64, u32), ParamPoly> = BTreeMap::new();
        for ((i, j, r, s), c) in &self.body {
            if i == j {
                let e = traces.entry((*r, *s)).or_insert_with(ParamPoly::zero);
                *e = &*e + c;
            }
        }
        traces.values().all(|p| p.is_zero())
    }
}

fn fmt_uv(r: i64, s: u32) -> String {
    let mut out = String::new();
    if r == 1 {
        out.push_str(" u");
    } else if r != 0 {
        out.push_str(&format!(" u^{}", r));
    }
    if s == 1 {
        out.push_str(" v");
    } else if s != 0 {
        out.push_str(&format!(" v^{}", s));
    }
    out
}

impl fmt::Display for LoopElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        for ((i, j, r, s), c) in &self.body {
            parts.push(format!("({})*E[{},{}]{}", c, i, j, fmt_uv(*r, *s)));
        }
        for (s, c) in &self.center.du {
            let vs = if *s == 0 {
                String::new()
            } else {
                format!(" v^{}", s)
            };
            parts.push(format!("({})*u^-1{} du", c, vs));
        }
        for ((r, s), c) in &self.center.dv {
            parts.push(format!("({})*{} dv", c, fmt_uv(*r, *s).trim()));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for LoopElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn omega_examples() {
        // v^3 dv is exact
        let mut c = CenterElement::zero();
        c.push_dv_monomial(0, 3, &ParamPoly::one());
        assert!(c.is_zero());
        // u^2 v du = -(1/3) u^3 dv, oracle: d(u^3 v) = 3 u^2 v du + u^3 dv
        let mut c = CenterElement::zero();
        c.push_du_monomial(2, 1, &ParamPoly::one());
        let mut expect = CenterElement::zero();
        expect.add_dv(3, 0, &ParamPoly::constant(crate::coeff::ratio(-1, 3)));
        assert_eq!(c, expect);
        // u^{-1} v^2 du is canonical
        let mut c = CenterElement::zero();
        c.push_du_monomial(-1, 2, &ParamPoly::one());
        let mut expect = CenterElement::zero();
        expect.add_du(2, &ParamPoly::one());
        assert_eq!(c, expect);
    }

    #[test]
    fn omega_derivation_rule_reduces_to_zero() {
        // class of d(ab) - (da)b - a(db) is zero for monomials a, b
        for (pa, qa, pb, qb) in [(2i64, 1u32, -3i64, 2u32), (0, 3, 4, 0), (-1, 2, 1, 1)] {
            let dab = omega_canonicalize(0, 0, pa + pb, qa + qb);
            let da_b = omega_canonicalize(pb, qb, pa, qa);
            let a_db = omega_canonicalize(pa, qa, pb, qb);
            let total = dab.add(&da_b.scale(&ParamPoly::int(-1))).add(&a_db.scale(&ParamPoly::int(-1)));
            assert!(total.is_zero(), "not exact for ({pa},{qa},{pb},{qb})");
        }
    }

    #[test]
    fn bracket_with_cocycle_example() {
        // [E12 u v, E21 u^{-1}] = (E11 - E22) v + u^{-1} v du
        let x = LoopElement::e_mono(1, 2, 1, 1);
        let y = LoopElement::e_mono(2, 1, -1, 0);
        let b = x.bracket(&y, true);
        let mut expect = LoopElement::e_mono(1, 1, 0, 1);
        expect = expect.add(&LoopElement::e_mono(2, 2, 0, 1).neg());
        expect.center.add_du(1, &ParamPoly::one());
        assert_eq!(b, expect);
    }

    #[test]
    fn f_elem_examples() {
        // f^{0,1}_{1,-1} = 2 E_{1,-1} v
        let f = LoopElement::f_elem(1, -1, 0, 1);
        assert_eq!(f, LoopElement::e_mono(1, -1, 0, 1).scale_int(2));
        // even-s self-pairing vanishes
        let n = 4;
        assert!(LoopElement::f_elem(n, -n, 0, 0).is_zero());
        // f elements are tau-fixed
        let g = LoopElement::f_elem(2, -3, 1, 2);
        assert_eq!(g.tau_apply().unwrap(), g);
    }

    #[test]
    fn f_bracket_matrix_unit_oracle() {
        // [f^{0,0}_{1,2}, f^{0,0}_{2,3}] = f^{0,0}_{1,3} at n = 3
        let a = LoopElement::f_elem(1, 2, 0, 0);
        let b = LoopElement::f_elem(2, 3, 0, 0);
        assert_eq!(a.bracket(&b, false), LoopElement::f_elem(1, 3, 0, 0));
    }

    #[test]
    fn f_bracket_closed_formula_oracle() {
        // [f^{r1,s1}_{i,j}, f^{r2,s2}_{p,q}] =
        //   d_{j,p} f_{i,q} - d_{i,q} f_{p,j}
        //   - (-1)^{s1} d_{i,-p} f_{-j,q} + (-1)^{s1} d_{j,-q} f_{p,-i}
        // whenever (i,j) != (q,p) and (i,j) != (-p,-q); all at (r1+r2, s1+s2).
        let n = 4i32;
        let idx: Vec<i32> = (1..=n).flat_map(|k| [k, -k]).collect();
        let mut checked = 0;
        for &i in &idx {
            for &j in &idx {
                if i == j {
                    continue;
                }
                for &p in &idx {
                    for &q in &idx {
                        if p == q || (i, j) == (q, p) || (i, j) == (-p, -q) {
                            continue;
                        }
                        let (r1, s1, r2, s2) = (1i64, 1u32, -1i64, 2u32);
                        let lhs = LoopElement::f_elem(i, j, r1, s1)
                            .bracket(&LoopElement::f_elem(p, q, r2, s2), false);
                        let sgn = if s1 % 2 == 0 { 1 } else { -1 };
                        let mut rhs = LoopElement::zero();
                        let (r, s) = (r1 + r2, s1 + s2);
                        if j == p {
                            rhs = rhs.add(&LoopElement::f_elem(i, q, r, s));
                        }
                        if i == q {
                            rhs = rhs.add(&LoopElement::f_elem(p, j, r, s).neg());
                        }
                        if i == -p {
                            rhs = rhs.add(&LoopElement::f_elem(-j, q, r, s).scale_int(-sgn));
                        }
                        if j == -q {
                            rhs = rhs.add(&LoopElement::f_elem(p, -i, r, s).scale_int(sgn));
                        }
                        assert_eq!(lhs, rhs, "mismatch at ({i},{j}),({p},{q})");
                        checked += 1;
                    }
                }
            }
        }
        assert!(checked > 1000);
    }

    #[test]
    fn tau_examples() {
        // odd v-degree: the two signs cancel
        let x = LoopElement::e_mono(1, 2, 1, 1);
        assert_eq!(x.tau_apply().unwrap(), LoopElement::e_mono(-2, -1, 1, 1));
        // even v-degree keeps the global minus
        let y = LoopElement::e_mono(1, 1, 0, 2);
        assert_eq!(y.tau_apply().unwrap(), LoopElement::e_mono(-1, -1, 0, 2).neg());
        let mut z = LoopElement::zero();
        z.center.add_du(0, &ParamPoly::one());
        assert!(z.tau_apply().is_err());
    }

    fn arb_loop_elem() -> impl Strategy<Value = LoopElement> {
        proptest::collection::vec(
            ((1i32..4, prop::bool::ANY), (1i32..4, prop::bool::ANY), -2i64..3, 0u32..3, -3i64..4),
            1..4,
        )
        .prop_map(|terms| {
            let mut el = LoopElement::zero();
            for ((i, si), (j, sj), r, s, c) in terms {
                let ii = if si { -i } else { i };
                let jj = if sj { -j } else { j };
                el.add_body(ii, jj, r, s, &ParamPoly::int(c));
            }
            el
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn jacobi_with_center(x in arb_loop_elem(), y in arb_loop_elem(), z in arb_loop_elem()) {
            let a = x.bracket(&y, true).bracket(&z, true);
            let b = y.bracket(&z, true).bracket(&x, true);
            let c = z.bracket(&x, true).bracket(&y, true);
            let total = a.add(&b).add(&c);
            prop_assert!(total.is_zero(), "jacobi failed: {total}");
        }

        #[test]
        fn antisymmetry_with_center(x in arb_loop_elem(), y in arb_loop_elem()) {
            let a = x.bracket(&y, true);
            let b = y.bracket(&x, true);
            prop_assert!(a.add(&b).is_zero());
            prop_assert!(x.bracket(&x, true).is_zero());
        }

        #[test]
        fn tau_is_bracket_automorphism(x in arb_loop_elem(), y in arb_loop_elem()) {
            let lhs = x.bracket(&y, false).tau_apply().unwrap();
            let rhs = x.tau_apply().unwrap().bracket(&y.tau_apply().unwrap(), false);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn tau_is_involutive(x in arb_loop_elem()) {
            prop_assert_eq!(x.tau_apply().unwrap().tau_apply().unwrap(), x);
        }
    }
}
