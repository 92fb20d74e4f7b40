use yangian_audit::coeff::ParamPoly;
use yangian_audit::vertex::state::{nth_product, translate, VAState};
use yangian_audit::vertex::wgen::{w1, w2};

#[test]
fn probe_printed_ope_coefficients() {
    let n = 4i8;
    // OPE2-1 at (i,j,p,q) = (1,2,2,1): expect 2 alpha |0>
    let p = nth_product(&w1(1, 2, n), 1, &w1(2, 1, n));
    println!("w1(12)_(1) w1(21) = {p}");
    // OPE2-1 mirror tuple (p,q) = (-1,-2): printed says 0
    let p2 = nth_product(&w1(1, 2, n), 1, &w1(-1, -2, n));
    println!("w1(12)_(1) w1(-1-2) = {p2}");
    // OPE3 at (1,2),(2,1): printed alpha(alpha+1)
    let q = nth_product(&w1(1, 2, n), 2, &w2(2, 1, n));
    println!("w1(12)_(2) w2(21) = {q}");
    // OPE3 at (1,2),(-1,-2): printed -alpha(alpha+1) delta_{q,-j} delta_{i,-p}
    let q2 = nth_product(&w1(1, 2, n), 2, &w2(-1, -2, n));
    println!("w1(12)_(2) w2(-1,-2) = {q2}");
    // OPE2 at (1,2),(2,3): printed RHS = delta_{jp} -> -(alpha-1) W1_{-q,-i} = -(a-1)W1_{-3,-1}
    let r = nth_product(&w1(1, 2, n), 1, &w2(2, 3, n));
    let w_expect = w1(-3, -1, n).scale(&(&(&ParamPoly::alpha() - &ParamPoly::one())).scale(&yangian_audit::coeff::rat(-1)));
    println!("w1(12)_(1) w2(23) = {r}");
    println!("  expected -(a-1) W1(-3,-1) = {w_expect}");
    println!("  diff = {}", r.sub(&w_expect));
    // OPE5-ish probe: (W2_{ii})_(1) W2_{jj} at i=1, j=2 vs printed RHS
    let lhs = nth_product(&w2(1, 1, n), 1, &w2(2, 2, n));
    let a = ParamPoly::alpha();
    let rhs = translate(&w1(1, 1, n)).scale(&ParamPoly::int(2))
        .add(&translate(&w1(2, 2, n)).scale(&a))
        .sub(&w2(1, 1, n).scale(&ParamPoly::int(2)))
        .sub(&w2(2, 2, n).scale(&ParamPoly::int(2)))
        .add(&nth_product(&w1(1, 2, n), -1, &w1(2, 1, n)).scale(&(&a - &ParamPoly::int(2))))
        .add(&nth_product(&w1(1, -2, n), -1, &w1(-2, 1, n)).scale(&(&a - &ParamPoly::int(2))));
    println!("OPE5 residual at (1,2) = {}", lhs.sub(&rhs));
}
