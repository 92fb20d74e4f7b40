use yangian_audit::present::audit::{audit, TargetKind};
use yangian_audit::present::{Presentation, Window};

#[test]
fn d_audit_discovery() {
    let w = Window { rmax: 3, smax: 3 };
    for n in [4i64, 3] {
        let rep = audit(Presentation::D, TargetKind::Pi, n, &w);
        let bad = rep.unexpected();
        println!("n={} total={} unexpected={}", n, rep.results.len(), bad.len());
        let mut seen = std::collections::BTreeSet::new();
        for e in bad.iter() {
            if seen.insert(e.id.clone()) || seen.len() < 12 {
                println!("  {} {:?} -> {}", e.id, e.bindings, &e.residual_repr[..e.residual_repr.len().min(150)]);
            }
        }
        let mut ids: Vec<_> = bad.iter().map(|e| e.id.clone()).collect();
        ids.sort(); ids.dedup();
        println!("  failing ids: {:?}", ids);
    }
}
