//! The doubling construction: nine spread lines plus the nine dual planes of
//! another spread form an 18-codeword candidate for the optimal (5,3)_2
//! subspace code. Run with `cargo run --example doubling_codes`.

use spreadcode::catalog::{self, trio_truth_table};
use spreadcode::code::{doubling, dual_code, is_optimal_53};

fn main() {
    // the classic near-miss: one line lands inside one dual plane
    let s1 = catalog::spread("S1").unwrap();
    let s2 = catalog::spread("S2").unwrap();
    let ev = doubling(&s1, &s2);
    println!("S1 + dual(S2): {}", ev.certificate.summary());
    for c in &ev.certificate.conflicts {
        println!("  conflict: {c}");
    }

    // swapping one spread for its repaired variant fixes it
    let mev = doubling(&catalog::spread("S1p").unwrap(), &s2);
    println!("S1p + dual(S2): {}", mev.certificate.summary());
    assert!(mev.certificate.optimal);

    // duality preserves everything (lines <-> planes swap roles)
    let dual = dual_code(&mev.code);
    let cert = is_optimal_53(&dual).unwrap();
    println!("element-wise dual:  {}", cert.summary());

    // the full ordered table over the S1 / S1p / S2 trio
    println!("\nordered doubling table:");
    for row in trio_truth_table() {
        println!("  {row}");
    }
}
