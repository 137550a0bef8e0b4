//! Repairing a single-conflict code by rewriting one canonical basis row at a
//! time, preserving each member's Schubert signature. A first rewrite may
//! create one new conflict in its own half; a second rewrite can then finish
//! the job. Run with `cargo run --example minimal_change_repair`.

use spreadcode::catalog;
use spreadcode::code::doubling;
use spreadcode::repair::minimal_change_repair;

fn main() {
    let ev = doubling(&catalog::spread("S1").unwrap(), &catalog::spread("S2").unwrap());
    println!("input: {}", ev.certificate.summary());

    let outcome = minimal_change_repair(&ev.code).unwrap();
    println!("{} distinct repaired code(s), sorted by change count:\n", outcome.repairs.len());
    for (i, r) in outcome.repairs.iter().enumerate().take(4) {
        println!("repair {} ({} changes):", i + 1, r.changes.len());
        for ch in &r.changes {
            println!("  {ch}");
        }
        let is_mev = r.code == catalog::code("MEV").unwrap();
        println!("  -> {}{}\n", r.certificate.summary(), if is_mev { "  (the catalog MEV code)" } else { "" });
    }

    for d in &outcome.diagnostics {
        println!(
            "{} {}: {} neighbors tried, {} direct, {} via cascade",
            d.side,
            d.member.gens_string(),
            d.neighbors_tried,
            d.direct_repairs,
            d.cascade_repairs
        );
    }
}
