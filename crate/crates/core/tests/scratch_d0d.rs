use yangian_audit::vertex::d0::d0_apply;
use yangian_audit::vertex::state::{nth_product, VAState};
use yangian_audit::vertex::{ci, f_gen};

#[test]
fn generator_level_obstructions() {
    let n = 2i8; // small n for readable output
    let diag = [
        f_gen(ci(1, 1), ci(1, 1)).1,
        f_gen(ci(1, 2), ci(1, 2)).1,
        f_gen(ci(1, -1), ci(1, -1)).1,
        f_gen(ci(1, 1), ci(1, 2)).1,
        f_gen(ci(1, 2), ci(1, 1)).1,
        f_gen(ci(1, 1), ci(1, -2)).1,
    ];
    let cross = [
        f_gen(ci(2, 1), ci(1, 1)).1,
        f_gen(ci(2, 1), ci(1, 2)).1,
        f_gen(ci(2, 2), ci(1, 1)).1,
        f_gen(ci(2, 1), ci(1, -1)).1,
    ];
    let mut nbad = 0;
    for x in &diag {
        let xs = VAState::gen_state(*x);
        for y in &cross {
            let ys = VAState::gen_state(*y);
            for m in 0..3i64 {
                let lhs = d0_apply(&nth_product(&xs, m, &ys), n).unwrap();
                let rhs = nth_product(&d0_apply(&xs, n).unwrap(), m, &ys)
                    .add(&nth_product(&xs, m, &d0_apply(&ys, n).unwrap()));
                let r = lhs.sub(&rhs);
                if !r.is_zero() {
                    nbad += 1;
                    if nbad <= 8 {
                        println!("FAIL x={x} y={y} m={m}:\n   {}", format!("{r}").chars().take(300).collect::<String>());
                    }
                }
            }
        }
    }
    println!("bad = {nbad}");
}
