//! The odd differential: generator values on the diagonal blocks and the
//! cross block, extended as an odd derivation with respect to the (-1)
//! product and commuting with the translation operator.

use super::state::{apply_neg_mode, nth_product, translate_k, VAState};
use super::{ci, f_gen, psi_gen, GenA};
use crate::coeff::{ParamPoly, Rational};
use crate::{EngineError, Result};
use num_traits::One;

/// d0 of a single generator state g[-1]|0>.
fn d0_generator(g: &GenA, n: i8) -> Result<VAState> {
    match g {
        GenA::Psi(..) => Err(EngineError::Unresolvable(
            "d0 input contains odd generators".into(),
        )),
        GenA::F(a, b) => {
            let mut out = VAState::zero();
            match (a.col, b.col) {
                (1, 1) => {
                    // hat on the first slot; tilde on the second is absent
                    let (s, p) = psi_gen(ci(2, a.row), *b);
                    out = out.add(&VAState::gen_state(p).scale_rat(&s));
                }
                (2, 2) => {
                    // canonical storage never holds this block
                    unreachable!("canonical F generators avoid the (2,2) block");
                }
                (2, 1) => {
                    // quadratic rule with the level constant alpha - 1
                    for u in (1..=n).flat_map(|t| [t, -t]) {
                        // F_{(1,u),(1,b)}[-1] psi_{(2,a),(1,u)}[-1]
                        let (s1, f1) = f_gen(ci(1, u), ci(1, b.row));
                        let (sp1, p1) = psi_gen(ci(2, a.row), ci(1, u));
                        let term1 = apply_neg_mode(f1, 1, &VAState::gen_state(p1))
                            .scale_rat(&(s1 * sp1));
                        out = out.add(&term1);
                        // - psi_{(2,u),(1,b)}[-1] F_{(2,a),(2,u)}[-1]
                        let (sp2, p2) = psi_gen(ci(2, u), ci(1, b.row));
                        let (s2, f2) = f_gen(ci(2, a.row), ci(2, u));
                        let term2 = apply_neg_mode(p2, 1, &VAState::gen_state(f2))
                            .scale_rat(&(-(s2 * sp2)));
                        out = out.add(&term2);
                    }
                    // (alpha - 1) psi_{(2,a),(1,b)}[-2]
                    let (sp, p) = psi_gen(*a, *b);
                    let mut depth2 = VAState::zero();
                    depth2.terms.insert(vec![(p, 2)], ParamPoly::one());
                    let am1 = (&ParamPoly::alpha() - &ParamPoly::one()).scale(&sp);
                    out = out.add(&depth2.scale(&am1));
                }
                _ => unreachable!("even generators stay inside the modelled blocks"),
            }
            Ok(out)
        }
    }
}

/// Apply d0 to a psi-free state: peel the head mode of each monomial,
/// g[-m] x = (∂^{m-1} G / (m-1)!)_{(-1)} x, and use the odd-derivation rule.
pub fn d0_apply(state: &VAState, n: i8) -> Result<VAState> {
    let mut out = VAState::zero();
    for (mono, coeff) in &state.terms {
        let piece = d0_mono(mono, n)?;
        out = out.add(&piece.scale(coeff));
    }
    Ok(out)
}

fn d0_mono(mono: &[super::state::Mode], n: i8) -> Result<VAState> {
    if mono.is_empty() {
        return Ok(VAState::zero());
    }
    let (g, depth) = mono[0];
    if g.parity() == 1 {
        return Err(EngineError::Unresolvable(
            "d0 input contains odd generators".into(),
        ));
    }
    let rest = {
        let mut s = VAState::zero();
        s.terms.insert(mono[1..].to_vec(), ParamPoly::one());
        s
    };
    // first piece: (∂^{depth-1} d0(G) / (depth-1)!)_{(-1)} rest
    let d0g = d0_generator(&g, n)?;
    let mut fact = Rational::one();
    for k in 1..depth as i64 {
        fact *= crate::coeff::rat(k);
    }
    let shifted = translate_k(&d0g, depth - 1).scale_rat(&(Rational::one() / fact));
    let mut out = nth_product(&shifted, -1, &rest);
    // second piece: even head passes through with sign +1
    let d0rest = d0_mono(&mono[1..], n)?;
    out = out.add(&apply_neg_mode(g, depth, &d0rest));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vertex::wgen::{w1, w2};

    #[test]
    fn d0_kills_vacuum_and_commutes_with_translation() {
        assert!(d0_apply(&VAState::vacuum(), 4).unwrap().is_zero());
        // [d0, ∂] = 0 on generator states of both blocks
        let gens = [
            VAState::gen_state(f_gen(ci(1, 1), ci(1, 2)).1),
            VAState::gen_state(f_gen(ci(2, 2), ci(1, -1)).1),
        ];
        for g in &gens {
            let lhs = d0_apply(&super::super::state::translate(g), 4).unwrap();
            let rhs = super::super::state::translate(&d0_apply(g, 4).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn d0_closure_of_w_generators_n4() {
        let n = 4i8;
        for i in (1..=n).flat_map(|t| [t, -t]) {
            for j in (1..=n).flat_map(|t| [t, -t]) {
                let a = w1(i, j, n);
                if !a.is_zero() {
                    let da = d0_apply(&a, n).unwrap();
                    assert!(da.is_zero(), "d0 W1[{i},{j}] = {da}");
                }
                let b = w2(i, j, n);
                let db = d0_apply(&b, n).unwrap();
                assert!(db.is_zero(), "d0 W2[{i},{j}] = {db}");
            }
        }
    }
}
