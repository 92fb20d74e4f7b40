//! PBW states and exact n-th products. A state is a finite sum of ordered
//! monomials g_1[-n_1]...g_k[-n_k]|0> with polynomial coefficients; the
//! straightening uses the mode relations
//! [g[m], h[-n]] = [g,h][m-n] + m d_{m,n} kappa(g,h)
//! with super-signs for odd pairs, and products of composite states go
//! through the iterate expansion on the head mode.

use super::{bracket_gens, kappa, GenA};
use crate::coeff::{rat, ParamPoly, Rational};
use num_traits::One;
use once_cell::sync::Lazy;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

/// (generator, depth) meaning g[-depth]; depth >= 1.
pub type Mode = (GenA, u32);
pub type Mono = Vec<Mode>;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct VAState {
    pub terms: BTreeMap<Mono, ParamPoly>,
}

impl VAState {
    pub fn zero() -> Self {
        VAState::default()
    }

    pub fn vacuum() -> Self {
        let mut s = VAState::default();
        s.terms.insert(Vec::new(), ParamPoly::one());
        s
    }

    pub fn gen_state(g: GenA) -> Self {
        let mut s = VAState::default();
        s.terms.insert(vec![(g, 1)], ParamPoly::one());
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mono: Mono, c: &ParamPoly) {
        if c.is_zero() {
            return;
        }
        let key = mono.clone();
        let e = self.terms.entry(mono).or_insert_with(ParamPoly::zero);
        *e = &*e + c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &VAState) -> VAState {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &VAState) -> VAState {
        self.add(&other.scale(&ParamPoly::int(-1)))
    }

    pub fn scale(&self, c: &ParamPoly) -> VAState {
        let mut out = VAState::zero();
        if c.is_zero() {
            return out;
        }
        for (m, v) in &self.terms {
            out.add_term(m.clone(), &(v * c));
        }
        out
    }

    pub fn scale_rat(&self, c: &Rational) -> VAState {
        self.scale(&ParamPoly::constant(c.clone()))
    }

    /// max total depth over monomials (conformal-weight bound)
    pub fn max_weight(&self) -> i64 {
        self.terms
            .keys()
            .map(|m| m.iter().map(|(_, n)| *n as i64).sum())
            .max()
            .unwrap_or(0)
    }

    /// parity of the state if homogeneous (number of odd modes mod 2)
    pub fn parity(&self) -> Option<u8> {
        let mut p = None;
        for m in self.terms.keys() {
            let q = (m.iter().filter(|(g, _)| g.parity() == 1).count() % 2) as u8;
            match p {
                None => p = Some(q),
                Some(x) if x == q => {}
                _ => return None,
            }
        }
        p.or(Some(0))
    }

    /// substitute parameters in every coefficient
    pub fn substitute(&self, binds: &BTreeMap<crate::coeff::Param, ParamPoly>) -> VAState {
        let mut out = VAState::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &c.substitute(binds));
        }
        out
    }
}

impl fmt::Display for VAState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (m, c) in &self.terms {
            let mono = if m.is_empty() {
                "|0>".to_string()
            } else {
                m.iter()
                    .map(|(g, n)| format!("{g}[-{n}]"))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            parts.push(format!("({c}) {mono}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for VAState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn mode_cmp(a: &Mode, b: &Mode) -> std::cmp::Ordering {
    a.cmp(b)
}

/// Straighten a raw monomial into PBW order, collecting the result.
fn normalize_into(mono: Mono, coeff: ParamPoly, out: &mut VAState) {
    let mut work: Vec<(Mono, ParamPoly)> = vec![(mono, coeff)];
    while let Some((m, c)) = work.pop() {
        if c.is_zero() {
            continue;
        }
        // find first out-of-order adjacent pair
        let mut disorder = None;
        for idx in 0..m.len().saturating_sub(1) {
            match mode_cmp(&m[idx], &m[idx + 1]) {
                std::cmp::Ordering::Greater => {
                    disorder = Some(idx);
                    break;
                }
                std::cmp::Ordering::Equal => {
                    if m[idx].0.parity() == 1 {
                        // odd square is zero
                        disorder = Some(usize::MAX);
                        break;
                    }
                }
                _ => {}
            }
        }
        match disorder {
            None => out.add_term(m, &c),
            Some(usize::MAX) => {}
            Some(i) => {
                let (x, a) = m[i];
                let (y, b) = m[i + 1];
                // swapped term
                let sign = if x.parity() == 1 && y.parity() == 1 {
                    -1i64
                } else {
                    1
                };
                let mut swapped = m.clone();
                swapped.swap(i, i + 1);
                work.push((swapped, c.scale(&rat(sign))));
                // commutator term [x[-a], y[-b]] = [x,y][-a-b]
                for (cc, g) in bracket_gens(&x, &y) {
                    let mut reduced: Mono = m[..i].to_vec();
                    reduced.push((g, a + b));
                    reduced.extend_from_slice(&m[i + 2..]);
                    work.push((reduced, c.scale(&cc)));
                }
            }
        }
    }
}

/// g[-n] acting on a state (creation): prepend and straighten.
pub fn apply_neg_mode(g: GenA, n: u32, state: &VAState) -> VAState {
    let mut out = VAState::zero();
    for (m, c) in &state.terms {
        let mut mono = Vec::with_capacity(m.len() + 1);
        mono.push((g, n));
        mono.extend_from_slice(m);
        normalize_into(mono, c.clone(), &mut out);
    }
    out
}

/// g[m] for m >= 0 acting on a state (annihilation-side).
pub fn apply_nonneg_mode(g: GenA, m: i64, state: &VAState) -> VAState {
    assert!(m >= 0);
    let mut out = VAState::zero();
    for (mono, c) in &state.terms {
        let contrib = nonneg_on_mono(g, m, mono);
        out = out.add(&contrib.scale(c));
    }
    out
}

fn nonneg_on_mono(g: GenA, m: i64, mono: &[Mode]) -> VAState {
    if mono.is_empty() {
        return VAState::zero();
    }
    let (x, n) = mono[0];
    let rest = &mono[1..];
    let mut out = VAState::zero();
    // commute g[m] past x[-n]
    let sign = if g.parity() == 1 && x.parity() == 1 {
        -1i64
    } else {
        1
    };
    let past = nonneg_on_mono(g, m, rest);
    out = out.add(&apply_neg_mode(x, n, &past).scale(&ParamPoly::int(sign)));
    // [g[m], x[-n]] = [g,x][m-n] + m d_{m,n} kappa(g,x)
    let rest_state = {
        let mut s = VAState::zero();
        s.terms.insert(rest.to_vec(), ParamPoly::one());
        s
    };
    for (cc, z) in bracket_gens(&g, &x) {
        let k = m - n as i64;
        let piece = if k < 0 {
            apply_neg_mode(z, (-k) as u32, &rest_state)
        } else {
            nonneg_on_mono(z, k, rest)
        };
        out = out.add(&piece.scale_rat(&cc));
    }
    if m == n as i64 {
        let kap = kappa(&g, &x).scale(&rat(m));
        out = out.add(&rest_state.scale(&kap));
    }
    out
}

/// The translation operator: a derivation bumping each depth by one.
pub fn translate(state: &VAState) -> VAState {
    let mut out = VAState::zero();
    for (m, c) in &state.terms {
        for k in 0..m.len() {
            let mut bumped = m.clone();
            let (g, n) = bumped[k];
            bumped[k] = (g, n + 1);
            let mut s = VAState::zero();
            normalize_into(bumped, c.scale(&rat(n as i64)), &mut s);
            out = out.add(&s);
        }
    }
    out
}

pub fn translate_k(state: &VAState, k: u32) -> VAState {
    let mut s = state.clone();
    for _ in 0..k {
        s = translate(&s);
    }
    s
}

type MemoKey = (Mono, i64, Mono);
static PRODUCT_MEMO: Lazy<Mutex<HashMap<MemoKey, VAState>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// The m-th product of states, by linearity and the head-mode iterate
/// expansion; exact for every integer m.
pub fn nth_product(a: &VAState, m: i64, b: &VAState) -> VAState {
    let mut out = VAState::zero();
    for (ma, ca) in &a.terms {
        for (mb, cb) in &b.terms {
            let p = mono_product(ma, m, mb);
            out = out.add(&p.scale(&(ca * cb)));
        }
    }
    out
}

fn mono_weight(m: &[Mode]) -> i64 {
    m.iter().map(|(_, n)| *n as i64).sum()
}

fn binom_c(top: i64, k: u32) -> Rational {
    // C(top, k) for integer top (possibly negative), exact
    let mut num = Rational::one();
    for t in 0..k as i64 {
        num *= rat(top - t);
        num /= rat(t + 1);
    }
    num
}

fn mono_product(a: &[Mode], m: i64, b: &[Mode]) -> VAState {
    if a.is_empty() {
        // vacuum: |0>_{(m)} y = d_{m,-1} y
        let mut s = VAState::zero();
        if m == -1 {
            s.terms.insert(b.to_vec(), ParamPoly::one());
        }
        return s;
    }
    let key: MemoKey = (a.to_vec(), m, b.to_vec());
    if let Some(hit) = PRODUCT_MEMO.lock().unwrap().get(&key) {
        return hit.clone();
    }
    let (g, n) = a[0];
    let rest = &a[1..];
    let gp = g.parity() as i64;
    let restp = (rest.iter().filter(|(h, _)| h.parity() == 1).count() % 2) as i64;
    let cross_sign = if gp == 1 && restp == 1 { -1i64 } else { 1 };
    let par_sign = if (n as i64) % 2 == 0 { 1i64 } else { -1 };

    let mut out = VAState::zero();
    // sum 1: C(n+i-1, i) g[-n-i] (rest_{(m+i)} b); products at index
    // >= wt(rest)+wt(b) vanish by the weight grading
    let mut i: i64 = 0;
    while m + i <= mono_weight(rest) + mono_weight(b) - 1 {
        let coeff = binom_c(n as i64 + i - 1, i as u32);
        let inner = mono_product(rest, m + i, b);
        if !inner.is_zero() {
            out = out.add(&apply_neg_mode(g, (n as i64 + i) as u32, &inner).scale_rat(&coeff));
        }
        i += 1;
    }
    // sum 2: -(-1)^n (-1)^{|g||rest|} C(n+i-1,i) rest_{(m-n-i)} (g[i] b)
    for i in 0..=mono_weight(b) {
        let gb = nonneg_on_mono(g, i, b);
        if gb.is_zero() {
            continue;
        }
        let coeff = binom_c(n as i64 + i - 1, i as u32);
        let mut piece = VAState::zero();
        for (mono_gb, c_gb) in &gb.terms {
            let inner = mono_product(rest, m - n as i64 - i, mono_gb);
            piece = piece.add(&inner.scale(c_gb));
        }
        out = out.add(&piece.scale_rat(&(coeff * rat(-par_sign * cross_sign))));
    }
    PRODUCT_MEMO.lock().unwrap().insert(key, out.clone());
    out
}
