use yangian_audit::coeff::rat;
use yangian_audit::vertex::state::{nth_product, VAState};
use yangian_audit::vertex::wgen::{w1, w2};
use yangian_audit::vertex::{ci, f_gen};
use num_traits::One;

fn binom(top: i64, k: u32) -> yangian_audit::coeff::Rational {
    let mut num = yangian_audit::coeff::Rational::one();
    for t in 0..k as i64 {
        num *= rat(top - t);
        num /= rat(t + 1);
    }
    num
}

#[test]
fn full_borcherds_identity_on_samples() {
    let nn = 2i8;
    let triples = vec![
        (w1(1, 2, nn), w1(2, 1, nn), w1(1, 1, nn)),
        (w2(1, 1, nn), w1(1, 2, nn), w1(2, 1, nn)),
        (w2(1, 2, nn), w2(2, 1, nn), w1(1, 1, nn)),
        (
            VAState::gen_state(f_gen(ci(2, 1), ci(1, 1)).1),
            w1(1, -2, nn),
            w2(2, 2, nn),
        ),
    ];
    // sum_j C(m,j) (a_(n+j) b)_(m+k-j) c
    //   = sum_j (-1)^j C(n,j) [ a_(m+n-j)(b_(k+j)c) - (-1)^n b_(n+k-j)(a_(m+j)c) ]
    for (a, b, c) in &triples {
        for (m, n, k) in [(0i64, 0i64, -1i64), (1, 0, 0), (0, 1, -1), (2, -1, 0), (1, 1, -2), (0, -2, 1)] {
            let wa = a.max_weight();
            let wb = b.max_weight();
            let wc = c.max_weight();
            let mut lhs = VAState::zero();
            for j in 0..=(wa + wb + 8).max(0) {
                let co = binom(m, j as u32);
                if co == rat(0) && j > m.unsigned_abs() as i64 && m >= 0 {
                    break;
                }
                let inner = nth_product(a, n + j, b);
                if inner.is_zero() {
                    if n + j > wa + wb { break; }
                    continue;
                }
                lhs = lhs.add(&nth_product(&inner, m + k - j, c).scale_rat(&co));
            }
            let mut rhs = VAState::zero();
            for j in 0..=(wa + wb + wc + 10) {
                let co = binom(n, j as u32);
                let sgn = if j % 2 == 0 { 1 } else { -1 };
                let t1 = nth_product(a, m + n - j, &nth_product(b, k + j, c));
                let nsgn = if n % 2 == 0 { 1 } else { -1 };
                let t2 = nth_product(b, n + k - j, &nth_product(a, m + j, c));
                rhs = rhs.add(&t1.scale_rat(&(co.clone() * rat(sgn))));
                rhs = rhs.add(&t2.scale_rat(&(co * rat(-sgn * nsgn))));
                if k + j > wb + wc && m + j > wa + wc {
                    break;
                }
            }
            let r = lhs.sub(&rhs);
            assert!(r.is_zero(), "borcherds failed at (m,n,k)=({m},{n},{k}): {}",
                format!("{r}").chars().take(200).collect::<String>());
        }
    }
    println!("borcherds identity holds on all samples");
}
