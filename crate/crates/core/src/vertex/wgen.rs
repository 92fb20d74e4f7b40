//! The W-generators: a depth-one diagonal pair and the depth-mixed quadratic
//! family, together with the mirror identity relating the quadratic family
//! to its transpose.

use super::state::{apply_neg_mode, translate, VAState};
use super::{ci, f_gen};
use crate::coeff::ParamPoly;

/// W1_{i,j} = F_{(1,i),(1,j)}[-1] + F_{(2,i),(2,j)}[-1]; vanishes when
/// j = -i by the sp symmetry.
pub fn w1(i: i8, j: i8, _n: i8) -> VAState {
    let (s1, g1) = f_gen(ci(1, i), ci(1, j));
    let (s2, g2) = f_gen(ci(2, i), ci(2, j));
    VAState::gen_state(g1)
        .scale_rat(&s1)
        .add(&VAState::gen_state(g2).scale_rat(&s2))
}

/// W2_{i,j} = F_{(2,i),(1,j)}[-1] + (alpha-1) F_{(2,i),(2,j)}[-2]
///          + sum_u F_{(1,u),(1,j)}[-1] F_{(2,i),(2,u)}[-1].
pub fn w2(i: i8, j: i8, n: i8) -> VAState {
    let (s0, g0) = f_gen(ci(2, i), ci(1, j));
    let mut out = VAState::gen_state(g0).scale_rat(&s0);
    let (s1, g1) = f_gen(ci(2, i), ci(2, j));
    let mut depth2 = VAState::zero();
    depth2.terms.insert(vec![(g1, 2)], ParamPoly::one());
    let am1 = &ParamPoly::alpha() - &ParamPoly::one();
    out = out.add(&depth2.scale(&am1.scale(&s1)));
    for u in (1..=n).flat_map(|t| [t, -t]) {
        let (su, gu) = f_gen(ci(1, u), ci(1, j));
        let (sv, gv) = f_gen(ci(2, i), ci(2, u));
        let term = apply_neg_mode(gu, 1, &VAState::gen_state(gv)).scale_rat(&(su * sv));
        out = out.add(&term);
    }
    out
}

/// The mirror identity: W2_{i,j} - W2_{-j,-i} - (alpha+1) ∂W1_{i,j} = 0.
pub fn mirror_residual(i: i8, j: i8, n: i8) -> VAState {
    let ap1 = &ParamPoly::alpha() + &ParamPoly::one();
    w2(i, j, n)
        .sub(&w2(-j, -i, n))
        .sub(&translate(&w1(i, j, n)).scale(&ap1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn w1_examples() {
        // W1_{1,1} is the diagonal pair
        let w = w1(1, 1, 4);
        assert_eq!(w.terms.len(), 2);
        // W1_{i,-i} = 0
        assert!(w1(3, -3, 4).is_zero());
        // W1_{i,j} = -W1_{-j,-i}
        assert_eq!(w1(1, 2, 4), w1(-2, -1, 4).scale(&ParamPoly::int(-1)));
    }

    #[test]
    fn mirror_identity_all_pairs_n4() {
        let n = 4;
        for i in (1..=n).flat_map(|t| [t, -t]) {
            for j in (1..=n).flat_map(|t| [t, -t]) {
                let r = mirror_residual(i, j, n);
                assert!(r.is_zero(), "mirror identity fails at ({i},{j}): {r}");
            }
        }
    }
}
