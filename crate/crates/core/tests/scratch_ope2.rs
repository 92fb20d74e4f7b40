use yangian_audit::vertex::ope::{survey_w1w1, survey_w1w2};

#[test]
fn survey() {
    for n in [2i8, 3] {
        let r1 = survey_w1w1(n, 3);
        let bad1 = r1.unexpected();
        println!("n={n} w1w1: total={} unexpected={} ledgered={}", r1.results.len(), bad1.len(),
            r1.results.iter().filter(|e| e.ledger_entry.is_some()).count());
        for e in bad1.iter().take(6) {
            println!("   {} {:?} [{}] -> {}", e.id, e.bindings, e.reading, &e.residual_repr[..e.residual_repr.len().min(140)]);
        }
        let r2 = survey_w1w2(n, 3);
        let bad2 = r2.unexpected();
        println!("n={n} w1w2: total={} unexpected={}", r2.results.len(), bad2.len());
        let mut by_r = std::collections::BTreeMap::new();
        for e in bad2.iter() {
            *by_r.entry(e.bindings["r"]).or_insert(0usize) += 1;
        }
        println!("   failures by r: {:?}", by_r);
        for e in bad2.iter().take(8) {
            println!("   {:?} -> {}", e.bindings, &e.residual_repr[..e.residual_repr.len().min(160)]);
        }
    }
}
