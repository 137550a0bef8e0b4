//! Regulus surgery: a regulus covers a 3x3 point quadric whose rows are its
//! lines and whose columns are the transversals — the opposite regulus.
//! Replacing one by the other produces a new spread on the same point set.
//! Run with `cargo run --example opposite_regulus`.

use spreadcode::catalog;

fn main() {
    let s2 = catalog::spread("S2").unwrap();
    println!("S2 is type {}", s2.classify_pattern().unwrap().kind());

    // its distinguished regulus sits on the last three lines
    let r4 = s2
        .reguli()
        .into_iter()
        .find(|r| r.lines().iter().all(|l| s2.lines()[6..].contains(l)))
        .unwrap();

    let quadric = r4.quadric_array();
    println!("\nquadric array (rows = regulus, columns = opposite):");
    println!("{}", quadric.render());

    println!("\nopposite lines:");
    for t in r4.opposite().lines() {
        println!("  {}", t.points_string());
    }

    let replaced = s2.replace_regulus(&r4).unwrap();
    assert_eq!(replaced, catalog::spread("S2o").unwrap());
    println!("\nsurgery on S2 reproduces the catalog spread S2o, type {}", replaced.classify_pattern().unwrap().kind());

    // applying the surgery twice returns to the original line set
    let back = replaced
        .reguli()
        .into_iter()
        .map(|r| replaced.replace_regulus(&r).unwrap())
        .find(|s| {
            let mut a = s.lines().to_vec();
            let mut b = s2.lines().to_vec();
            a.sort();
            b.sort();
            a == b
        });
    assert!(back.is_some());
    println!("replacing the opposite regulus again restores S2");
}
