//! Evaluation targets inside the loop model: the map `pi` onto the twisted
//! loop algebra (centerless), the embedding `phi` into the full Kassel
//! extension, and the untwisted model for the cyclic presentation.

use super::{Fam, GenSymbol, TargetAlgebra};
use crate::coeff::{Param, ParamPoly};
use crate::loop_alg::{omega_canonicalize, CenterElement, LoopElement};
use crate::{EngineError, Result};
use std::collections::BTreeMap;

/// Shared arithmetic for loop-valued targets.
macro_rules! loop_target_ops {
    () => {
        type El = LoopElement;

        fn unit(&self) -> Option<LoopElement> {
            None
        }

        fn add(&self, a: &LoopElement, b: &LoopElement) -> LoopElement {
            a.add(b)
        }

        fn scale(&self, c: &ParamPoly, a: &LoopElement) -> LoopElement {
            a.scale(c)
        }

        fn zero(&self) -> LoopElement {
            LoopElement::zero()
        }

        fn is_zero(&self, a: &LoopElement) -> bool {
            a.is_zero()
        }

        fn repr(&self, a: &LoopElement) -> String {
            format!("{}", a)
        }
    };
}

/// Images of the twisted-presentation generators; `phi` adds the one-form
/// correction on the even zero-node Cartan generators, `pi` drops all
/// central terms.
pub struct TwistedLoopModel {
    pub n: i64,
    pub with_center: bool,
    /// keep the (-1)^r sign on the zero-node images (the printed form)
    pub zero_node_sign: bool,
    pub classical_subst: Option<BTreeMap<Param, ParamPoly>>,
}

impl TwistedLoopModel {
    pub fn pi(n: i64) -> Self {
        TwistedLoopModel {
            n,
            with_center: false,
            zero_node_sign: true,
            classical_subst: None,
        }
    }

    pub fn phi(n: i64) -> Self {
        TwistedLoopModel {
            n,
            with_center: true,
            zero_node_sign: true,
            classical_subst: None,
        }
    }

    /// Classical-limit target: same images, scalar coefficients evaluated
    /// at hbar = eps = 0.
    pub fn classical(mut self) -> Self {
        let mut b = BTreeMap::new();
        b.insert(Param::Hbar, ParamPoly::zero());
        b.insert(Param::Eps, ParamPoly::zero());
        self.classical_subst = Some(b);
        self
    }

    fn fe(&self, i: i64, j: i64, r: i64, s: i64) -> Result<LoopElement> {
        let n = self.n;
        if i == 0 || j == 0 || i.abs() > n || j.abs() > n || s < 0 {
            return Err(EngineError::Unresolvable(format!(
                "f[{},{}] u^{} v^{} at n={}",
                i, j, r, s, n
            )));
        }
        Ok(LoopElement::f_elem(i as i32, j as i32, r, s as u32))
    }

    pub fn image(&self, g: &GenSymbol) -> Result<LoopElement> {
        let n = self.n;
        let (node, r) = (g.node, g.level);
        if r < 0 {
            return Err(EngineError::Unresolvable(format!("negative level {:?}", g)));
        }
        let zsign = if self.zero_node_sign && r % 2 == 1 {
            -1i64
        } else {
            1
        };
        let el = match (g.fam, node) {
            (Fam::H, i) if 1 <= i && i <= n - 1 => {
                self.fe(i, i, 0, r)?.sub(&self.fe(i + 1, i + 1, 0, r)?)
            }
            (Fam::H, i) if i == n && r % 2 == 0 => {
                self.fe(n - 1, n - 1, 0, r)?.add(&self.fe(n, n, 0, r)?)
            }
            (Fam::H, 0) if r % 2 == 0 => {
                let mut el = self.fe(1, 1, 0, r)?.add(&self.fe(2, 2, 0, r)?).neg();
                if self.with_center {
                    // the embedding's one-form correction 2 u^{-1} v^r du
                    let mut c = CenterElement::zero();
                    c.add_du(r as u32, &ParamPoly::int(2));
                    el = el.add(&LoopElement::from_center(c));
                }
                el
            }
            (Fam::Xp, i) if 1 <= i && i <= n - 1 => self.fe(i, i + 1, 0, r)?,
            (Fam::Xp, i) if i == n => self.fe(n - 1, -n, 0, r)?,
            (Fam::Xp, 0) => self.fe(-2, 1, 1, r)?.scale_int(zsign),
            (Fam::Xp, i) if i == n + 1 && r % 2 == 1 => self.fe(n, -n, 0, r)?,
            (Fam::Xp, -1) if r % 2 == 1 => self.fe(-1, 1, 1, r)?,
            (Fam::Xm, i) if 1 <= i && i <= n - 1 => self.fe(i + 1, i, 0, r)?,
            (Fam::Xm, i) if i == n => self.fe(-n, n - 1, 0, r)?,
            (Fam::Xm, 0) => self.fe(1, -2, -1, r)?.scale_int(zsign),
            (Fam::Xm, i) if i == n + 1 && r % 2 == 1 => self.fe(-n, n, 0, r)?,
            (Fam::Xm, -1) if r % 2 == 1 => self.fe(1, -1, -1, r)?,
            _ => {
                return Err(EngineError::Unresolvable(format!(
                    "{} node {} level {}",
                    g.fam, node, r
                )))
            }
        };
        Ok(el)
    }
}

impl TargetAlgebra for TwistedLoopModel {
    loop_target_ops!();

    fn gen(&self, g: &GenSymbol) -> Result<LoopElement> {
        self.image(g)
    }

    fn named(&self, i: i32, j: i32, r: i64, s: i64) -> Result<LoopElement> {
        self.fe(i as i64, j as i64, r, s)
    }

    fn bracket(&self, a: &LoopElement, b: &LoopElement) -> LoopElement {
        a.bracket(b, self.with_center)
    }

    fn subst(&self) -> Option<&BTreeMap<Param, ParamPoly>> {
        self.classical_subst.as_ref()
    }
}

/// The untwisted cyclic model on gl(m): node range 0..m-1, all levels; the
/// Cartan generators are realised as brackets so their one-form parts come
/// out of the cocycle itself.
pub struct CyclicLoopModel {
    pub m: i64,
}

impl CyclicLoopModel {
    pub fn new(m: i64) -> Self {
        CyclicLoopModel { m }
    }

    pub fn xp_image(&self, i: i64, r: i64) -> LoopElement {
        let m = self.m;
        if i == 0 {
            LoopElement::e_mono(m as i32, 1, 1, r as u32)
        } else {
            LoopElement::e_mono(i as i32, (i + 1) as i32, 0, r as u32)
        }
    }

    pub fn xm_image(&self, i: i64, r: i64) -> LoopElement {
        let m = self.m;
        if i == 0 {
            LoopElement::e_mono(1, m as i32, -1, r as u32)
        } else {
            LoopElement::e_mono((i + 1) as i32, i as i32, 0, r as u32)
        }
    }

    /// h_{i,r} = [x+_{i,r}, x-_{i,0}] with the cocycle included.
    pub fn h_image(&self, i: i64, r: i64) -> LoopElement {
        self.xp_image(i, r).bracket(&self.xm_image(i, 0), true)
    }
}

impl TargetAlgebra for CyclicLoopModel {
    loop_target_ops!();

    fn gen(&self, g: &GenSymbol) -> Result<LoopElement> {
        let m = self.m;
        if g.node < 0 || g.node >= m || g.level < 0 {
            return Err(EngineError::Unresolvable(format!("{:?} at m={}", g, m)));
        }
        Ok(match g.fam {
            Fam::Xp => self.xp_image(g.node, g.level),
            Fam::Xm => self.xm_image(g.node, g.level),
            Fam::H => self.h_image(g.node, g.level),
        })
    }

    fn named(&self, i: i32, j: i32, r: i64, s: i64) -> Result<LoopElement> {
        if s < 0 {
            return Err(EngineError::Unresolvable("negative v degree".into()));
        }
        Ok(LoopElement::e_mono(i, j, r, s as u32))
    }

    fn bracket(&self, a: &LoopElement, b: &LoopElement) -> LoopElement {
        a.bracket(b, true)
    }
}

/// Weight bookkeeping: the root-lattice degree of a homogeneous loop element
/// and its level, or None when the element mixes degrees. The e-coordinate
/// of E_{i,j} is eps_i - eps_j with eps_{-k} = -eps_k, and each power of u
/// adds one copy of the zero node.
pub fn loop_weight(el: &LoopElement, n: usize) -> Option<(crate::roots::RootVector, i64)> {
    let mut found: Option<(crate::roots::RootVector, i64)> = None;
    for ((i, j, r, s), _c) in &el.body {
        let mut e = vec![0i64; n];
        let add_eps = |e: &mut Vec<i64>, k: i32, sign: i64| {
            let idx = (k.abs() - 1) as usize;
            e[idx] += sign * if k > 0 { 1 } else { -1 };
        };
        add_eps(&mut e, *i, 1);
        add_eps(&mut e, *j, -1);
        // u^r shifts by r copies of (e_1 + e_2) relative to the zero node
        e[0] += r;
        e[1] += r;
        let lifted = lift_or_none(&e, n)?;
        let mut q = lifted;
        q[0] += r;
        let v = *s as i64;
        match &found {
            None => found = Some((q, v)),
            Some((q0, v0)) => {
                if *q0 != q || *v0 != v {
                    return None;
                }
            }
        }
    }
    found
}

fn lift_or_none(e: &[i64], n: usize) -> Option<crate::roots::RootVector> {
    let mut t = vec![0i64; n + 1];
    for k in 1..=n {
        t[k] = t[k - 1] + e[k - 1];
    }
    let mut c = vec![0i64; n + 1];
    for i in 1..=n.saturating_sub(2) {
        c[i] = t[i];
    }
    let x = t[n - 2] + e[n - 2] - e[n - 1];
    let y = t[n - 2] + e[n - 2] + e[n - 1];
    if x % 2 != 0 || y % 2 != 0 {
        return None;
    }
    c[n - 1] = x / 2;
    c[n] = y / 2;
    Some(c)
}

/// Check the one-form correction carried by the embedding on the even
/// zero-node Cartan generators: exactly 2 u^{-1} v^r du.
pub fn phi_center_correction(n: i64, r: i64) -> Result<(CenterElement, bool)> {
    let phi = TwistedLoopModel::phi(n);
    let img = phi.image(&GenSymbol {
        fam: Fam::H,
        node: 0,
        level: r,
    })?;
    let mut expect = CenterElement::zero();
    expect.add_du(r as u32, &ParamPoly::int(2));
    Ok((img.center.clone(), img.center == expect))
}

/// The class of u^p v^q d(u^a v^b); re-exported here so audits can build
/// expected one-form values directly.
pub fn form_class(p: i64, q: u32, a: i64, b: u32) -> CenterElement {
    omega_canonicalize(p, q, a, b)
}
