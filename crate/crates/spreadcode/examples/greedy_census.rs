//! Randomized greedy completions from the empty spread land on maximal sizes
//! 5, 7, or 9 — never anything else — with regulus counts 10, 4, 4.
//! Run with `cargo run --example greedy_census --release`.

use spreadcode::spread::greedy_census;

fn main() {
    let report = greedy_census(2000, 42).unwrap();
    println!("{} seeded greedy runs:", report.seeds);
    for (size, count) in &report.size_counts {
        let reguli = &report.regulus_counts[size];
        println!("  size {size}: {count} runs, regulus counts {reguli:?}");
    }
    println!("\nsize-9 spreads by pattern:");
    for (kind, count) in &report.size9_patterns {
        println!("  {kind}: {count}");
    }
}
