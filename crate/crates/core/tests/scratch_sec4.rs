use yangian_audit::present::section4;

#[test]
fn sec4_detail() {
    let rep = section4::verify_section4(4, 3, 3);
    let bad = rep.unexpected();
    println!("total={} unexpected={}", rep.results.len(), bad.len());
    for e in bad.iter().take(10) {
        println!("  BAD {} {:?} -> {}", e.id, e.bindings, &e.residual_repr[..e.residual_repr.len().min(150)]);
    }
    for e in rep.results.iter().filter(|e| !e.residual_zero && e.ledger_entry.is_some()) {
        println!("  LEDG {} {:?} -> {}", e.id, e.bindings, &e.residual_repr[..e.residual_repr.len().min(120)]);
    }
}
