use yangian_audit::coeff::ParamPoly;
use yangian_audit::vertex::d0::d0_apply;
use yangian_audit::vertex::state::{apply_neg_mode, nth_product, translate, VAState};
use yangian_audit::vertex::wgen::{w1, w2};
use yangian_audit::vertex::{ci, f_gen, GenA};

#[test]
fn probe_residual_closure() {
    let n = 4i8;
    let a = ParamPoly::alpha();
    // OPE5 residual at (1,2) recomputed
    let lhs = nth_product(&w2(1, 1, n), 1, &w2(2, 2, n));
    let rhs = translate(&w1(1, 1, n)).scale(&ParamPoly::int(2))
        .add(&translate(&w1(2, 2, n)).scale(&a))
        .sub(&w2(1, 1, n).scale(&ParamPoly::int(2)))
        .sub(&w2(2, 2, n).scale(&ParamPoly::int(2)))
        .add(&nth_product(&w1(1, 2, n), -1, &w1(2, 1, n)).scale(&(&a - &ParamPoly::int(2))))
        .add(&nth_product(&w1(1, -2, n), -1, &w1(-2, 1, n)).scale(&(&a - &ParamPoly::int(2))));
    let residual = lhs.sub(&rhs);
    println!("residual = {residual}");
    let d = d0_apply(&residual, n).unwrap();
    println!("d0(residual) = {d}");
    println!("d0(residual).is_zero() = {}", d.is_zero());
    // sanity: d0 of a single T-like element is nonzero
    let (s1, g1) = f_gen(ci(1, 1), ci(1, 1));
    let (s2, g2) = f_gen(ci(1, -1), ci(1, -1));
    let t1 = VAState::gen_state(g1).scale_rat(&s1).add(&VAState::gen_state(g2).scale_rat(&s2));
    println!("d0(T1) = {}", d0_apply(&t1, n).unwrap());
    // is d0 a derivation of products? test on closed and non-closed inputs
    let x = VAState::gen_state(f_gen(ci(1, 1), ci(1, 2)).1);
    let y = VAState::gen_state(f_gen(ci(2, 2), ci(1, 1)).1);
    for m in [-2i64, -1, 0, 1] {
        let lhs = d0_apply(&nth_product(&x, m, &y), n).unwrap();
        let rhs = nth_product(&d0_apply(&x, n).unwrap(), m, &y)
            .add(&nth_product(&x, m, &d0_apply(&y, n).unwrap()));
        println!("m={m}: d0-derivation residual = {}", lhs.sub(&rhs));
    }
    let _ = GenA::F(ci(1,1), ci(1,1));
}
