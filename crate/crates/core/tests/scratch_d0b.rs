use yangian_audit::vertex::d0::d0_apply;
use yangian_audit::vertex::state::{nth_product, VAState};
use yangian_audit::vertex::wgen::w2;
use yangian_audit::vertex::{ci, f_gen};

#[test]
fn derivation_on_cross_block_pairs() {
    let n = 4i8;
    // two cross-block generators (their d0 values are quadratic)
    let x = VAState::gen_state(f_gen(ci(2, 1), ci(1, 1)).1);
    let y = VAState::gen_state(f_gen(ci(2, 2), ci(1, 2)).1);
    for m in [-1i64, 0, 1] {
        let lhs = d0_apply(&nth_product(&x, m, &y), n).unwrap();
        let rhs = nth_product(&d0_apply(&x, n).unwrap(), m, &y)
            .add(&nth_product(&x, m, &d0_apply(&y, n).unwrap()));
        let r = lhs.sub(&rhs);
        println!("cross pair m={m}: derivation residual zero = {} ({})", r.is_zero(),
                 format!("{r}").chars().take(200).collect::<String>());
    }
    // mixed: diagonal-block with cross-block
    let a = VAState::gen_state(f_gen(ci(1, 1), ci(1, 2)).1);
    let b = VAState::gen_state(f_gen(ci(2, 2), ci(1, 1)).1);
    for m in [-1i64, 0, 1] {
        let lhs = d0_apply(&nth_product(&a, m, &b), n).unwrap();
        let rhs = nth_product(&d0_apply(&a, n).unwrap(), m, &b)
            .add(&nth_product(&a, m, &d0_apply(&b, n).unwrap()));
        let r = lhs.sub(&rhs);
        println!("mixed pair m={m}: derivation residual zero = {}", r.is_zero());
    }
    // W2 pair at m=1 directly
    let lhs = d0_apply(&nth_product(&w2(1, 1, n), 1, &w2(2, 2, n)), n).unwrap();
    println!("d0(W2_11 (1) W2_22) zero = {}", lhs.is_zero());
}
