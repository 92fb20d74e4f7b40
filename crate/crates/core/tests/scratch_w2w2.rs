use yangian_audit::coeff::ParamPoly;
use yangian_audit::vertex::ope::{lin, sym_to_state, SymAtom, SymExpr, WK};
use yangian_audit::vertex::state::nth_product;
use yangian_audit::vertex::wgen::{w1, w2};

fn al() -> ParamPoly { ParamPoly::alpha() }
fn c(v: i64) -> ParamPoly { ParamPoly::int(v) }

// printed OPE4 rhs for (W2_ii)_(0) W2_jj
fn ope4(i: i8, j: i8) -> SymExpr {
    let mut e = SymExpr::zero();
    e.push(al(), SymAtom::Lin(lin(WK::W1, j, j, 2)));
    e.push(c(-2), SymAtom::Lin(lin(WK::W2, j, j, 1)));
    e.push(c(-1), SymAtom::NProd(lin(WK::W1, i, j, 0), lin(WK::W2, j, i, 0)));
    e.push(c(1), SymAtom::NProd(lin(WK::W1, j, i, 0), lin(WK::W2, i, j, 0)));
    e.push(c(-1), SymAtom::NProd(lin(WK::W1, i, -j, 0), lin(WK::W2, -j, i, 0)));
    e.push(c(-1), SymAtom::NProd(lin(WK::W1, -i, j, 0), lin(WK::W2, j, -i, 0)));
    e.push(&al() - &c(1), SymAtom::NProd(lin(WK::W1, i, j, 0), lin(WK::W1, j, i, 1)));
    e.push(c(-1), SymAtom::NProd(lin(WK::W1, j, i, 0), lin(WK::W1, i, j, 1)));
    e.push(&al() - &c(1), SymAtom::NProd(lin(WK::W1, i, -j, 0), lin(WK::W1, -j, i, 1)));
    e.push(&al() - &c(1), SymAtom::NProd(lin(WK::W1, -i, j, 0), lin(WK::W1, j, -i, 1)));
    e
}

// printed OPE5 rhs for (W2_ii)_(1) W2_jj
fn ope5(i: i8, j: i8) -> SymExpr {
    let mut e = SymExpr::zero();
    e.push(c(2), SymAtom::Lin(lin(WK::W1, i, i, 1)));
    e.push(al(), SymAtom::Lin(lin(WK::W1, j, j, 1)));
    e.push(c(-2), SymAtom::Lin(lin(WK::W2, i, i, 0)));
    e.push(c(-2), SymAtom::Lin(lin(WK::W2, j, j, 0)));
    e.push(&al() - &c(2), SymAtom::NProd(lin(WK::W1, i, j, 0), lin(WK::W1, j, i, 0)));
    e.push(&al() - &c(2), SymAtom::NProd(lin(WK::W1, i, -j, 0), lin(WK::W1, -j, i, 0)));
    e
}

// printed OPE6 rhs for (W2_{i,-j})_(0) W2_{-j,i}
fn ope6(i: i8, j: i8) -> SymExpr {
    let mut e = SymExpr::zero();
    e.push(al(), SymAtom::Lin(lin(WK::W1, j, j, 2)));
    e.push(al().scale(&yangian_audit::coeff::rat(-1)), SymAtom::Lin(lin(WK::W2, j, j, 1)));
    e.push(c(-1), SymAtom::NProd(lin(WK::W1, j, j, 0), lin(WK::W2, i, i, 0)));
    e.push(c(-1), SymAtom::NProd(lin(WK::W1, i, i, 0), lin(WK::W2, j, j, 0)));
    e.push(c(-1), SymAtom::NProd(lin(WK::W1, i, j, 0), lin(WK::W2, j, i, 0)));
    e.push(c(-1), SymAtom::NProd(lin(WK::W1, j, i, 0), lin(WK::W2, i, j, 0)));
    e.push(c(1), SymAtom::NProd(lin(WK::W1, j, j, 0), lin(WK::W1, i, i, 1)));
    e.push(c(1), SymAtom::NProd(lin(WK::W1, i, i, 0), lin(WK::W1, j, j, 1)));
    e.push(c(1), SymAtom::NProd(lin(WK::W1, i, j, 0), lin(WK::W1, j, i, 1)));
    e.push(c(1), SymAtom::NProd(lin(WK::W1, j, i, 0), lin(WK::W1, i, j, 1)));
    e
}

// printed OPE7 rhs for (W2_{i,-j})_(1) W2_{-j,i}
fn ope7(i: i8, j: i8) -> SymExpr {
    let mut e = SymExpr::zero();
    e.push(&al() - &c(1), SymAtom::Lin(lin(WK::W1, i, i, 1)));
    e.push(&(&c(1) + &(&c(2) * &al())) - &(&al() * &al()), SymAtom::Lin(lin(WK::W1, j, j, 1)));
    e.push(al().scale(&yangian_audit::coeff::rat(-1)), SymAtom::Lin(lin(WK::W2, i, i, 0)));
    e.push(al().scale(&yangian_audit::coeff::rat(-1)), SymAtom::Lin(lin(WK::W2, j, j, 0)));
    e.push(&c(2) - &al(), SymAtom::NProd(lin(WK::W1, i, i, 0), lin(WK::W1, j, j, 0)));
    e.push(&c(2) - &al(), SymAtom::NProd(lin(WK::W1, i, j, 0), lin(WK::W1, j, i, 0)));
    e
}

#[test]
fn survey_w2w2() {
    let n = 4i8;
    for (i, j) in [(1i8, 2i8), (1, 3), (2, 3), (1, -2), (3, 1), (2, 2)] {
        let r4 = nth_product(&w2(i, i, n), 0, &w2(j, j, n)).sub(&sym_to_state(&ope4(i, j), n));
        let r5 = nth_product(&w2(i, i, n), 1, &w2(j, j, n)).sub(&sym_to_state(&ope5(i, j), n));
        let r6 = nth_product(&w2(i, -j, n), 0, &w2(-j, i, n)).sub(&sym_to_state(&ope6(i, j), n));
        let r7 = nth_product(&w2(i, -j, n), 1, &w2(-j, i, n)).sub(&sym_to_state(&ope7(i, j), n));
        println!("(i,j)=({i},{j}): OPE4 {} OPE5 {} OPE6 {} OPE7 {}",
            r4.is_zero(), r5.is_zero(), r6.is_zero(), r7.is_zero());
        if !r5.is_zero() {
            println!("   OPE5 res: {}", format!("{r5}").chars().take(260).collect::<String>());
        }
        if !r4.is_zero() {
            println!("   OPE4 res: {}", format!("{r4}").chars().take(260).collect::<String>());
        }
    }
}
