//! Counting the subspaces of GF(2)^5: `cargo run --example enumeration`.

use spreadcode::gf2::{enumerate_subspaces, gaussian_binomial, Subspace};

fn main() {
    println!("subspaces of GF(2)^5 by dimension:");
    for k in 0..=5u32 {
        let listed = enumerate_subspaces(5, k as usize).unwrap();
        let counted = gaussian_binomial(5, k);
        assert_eq!(listed.len() as u128, counted);
        println!("  dim {k}: {counted}");
    }
    println!();

    // the dual pairs dimensions k and 5-k; on lines it is a bijection onto planes
    let lines = enumerate_subspaces(5, 2).unwrap();
    let mut dual_planes: Vec<Subspace> = lines.iter().map(Subspace::dual).collect();
    dual_planes.sort();
    dual_planes.dedup();
    println!("the {} lines dualize to {} distinct planes", lines.len(), dual_planes.len());

    // sample of the enumeration order (canonical bases, lexicographic)
    println!("\nfirst three lines:");
    for l in &lines[..3] {
        println!("  {}  points {}", l.gens_string(), l.points_string());
    }
}
