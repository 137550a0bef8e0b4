//! The four reguli of each maximum partial spread and the three sharing
//! patterns X, IDelta, E: `cargo run --example spread_patterns`.

use spreadcode::catalog;

fn main() {
    for name in ["S1", "S2", "mS1po", "E1"] {
        let spread = catalog::spread(name).unwrap();
        let holes = spread.holes();
        println!("{name}: {} lines, {} holes", spread.len(), holes.len());
        for (i, r) in spread.reguli().iter().enumerate() {
            let members: Vec<String> = r
                .lines()
                .iter()
                .map(|l| format!("l{}", spread.lines().iter().position(|s| s == l).unwrap() + 1))
                .collect();
            println!("  regulus {}: {}", i + 1, members.join(" "));
        }
        let pattern = spread.classify_pattern().unwrap();
        println!("  type {} — {}", pattern.kind(), pattern.describe());
        println!(
            "  holes: {}",
            holes.iter().map(|h| h.tuple().unwrap()).collect::<Vec<_>>().join(", ")
        );
        println!();
    }
}
