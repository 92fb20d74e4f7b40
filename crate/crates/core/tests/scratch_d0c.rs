use yangian_audit::vertex::d0::d0_apply;
use yangian_audit::vertex::state::{apply_neg_mode, nth_product, VAState};
use yangian_audit::vertex::{ci, f_gen};

#[test]
fn derivation_generator_times_composite() {
    let n = 4i8;
    let gens = [
        f_gen(ci(1, 1), ci(1, 2)).1,
        f_gen(ci(1, 2), ci(1, 1)).1,
        f_gen(ci(1, 1), ci(1, 1)).1,
        f_gen(ci(2, 1), ci(1, 1)).1,
        f_gen(ci(2, 2), ci(1, 2)).1,
    ];
    // composite: F[-1]F[-1] quadratics
    let composites = [
        apply_neg_mode(f_gen(ci(1, 1), ci(1, 2)).1, 1,
            &VAState::gen_state(f_gen(ci(2, 2), ci(1, 1)).1)),
        apply_neg_mode(f_gen(ci(1, -1), ci(1, -1)).1, 1,
            &VAState::gen_state(f_gen(ci(1, 1), ci(1, 1)).1)),
        apply_neg_mode(f_gen(ci(1, 2), ci(1, 2)).1, 1,
            &VAState::gen_state(f_gen(ci(2, 1), ci(1, 2)).1)),
    ];
    let mut bad = 0;
    for g in &gens {
        let gs = VAState::gen_state(*g);
        for (ci_, c) in composites.iter().enumerate() {
            for m in 0..3i64 {
                let lhs = d0_apply(&nth_product(&gs, m, c), n).unwrap();
                let rhs = nth_product(&d0_apply(&gs, n).unwrap(), m, c)
                    .add(&nth_product(&gs, m, &d0_apply(c, n).unwrap()));
                let r = lhs.sub(&rhs);
                if !r.is_zero() {
                    bad += 1;
                    if bad < 4 {
                        println!("FAIL g={g} c#{ci_} m={m}: {}", format!("{r}").chars().take(220).collect::<String>());
                    }
                }
            }
        }
    }
    println!("total failures: {bad}");
}
