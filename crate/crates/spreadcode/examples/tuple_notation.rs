//! The compressed tuple notation for points of PG(4,2) and how subspaces
//! print: run with `cargo run --example tuple_notation`.

use spreadcode::gf2::{line_from_points, Subspace, Vector};

fn main() {
    // a token names the coordinates that are set, leftmost = coordinate 1
    for token in ["135", "4", "u", "4u"] {
        let v = Vector::parse_tuple(token, 5).unwrap();
        println!("{token:>4} = {:05b}  (weight {})", v.bits(), v.weight());
    }
    println!();

    // lines are spanned by two points; the third point is their sum
    let l = line_from_points(
        Vector::parse_tuple("13", 5).unwrap(),
        Vector::parse_tuple("235", 5).unwrap(),
        Vector::parse_tuple("125", 5).unwrap(),
    )
    .unwrap();
    println!("line {} has canonical basis {}", l.points_string(), l.gens_string());
    println!("its Schubert signature (pivot set) is {:?}", l.schubert_signature().pivots());
    println!("its dual plane is {}", l.dual().gens_string());
    println!();

    // weight-4 and weight-5 points print as complements: 4u = everything but 4
    let heavy = Vector::new(5, 0b11101);
    println!("{:05b} prints as {}", heavy.bits(), heavy.tuple().unwrap());

    // spans canonicalize: generator order and redundancy never matter
    let a = Subspace::span(5, &[v("35"), v("45")]);
    let b = Subspace::span(5, &[v("45"), v("34"), v("35")]);
    assert_eq!(a, b);
    println!("span{{35,45}} == span{{45,34,35}} == {}", a.points_string());
}

fn v(token: &str) -> Vector {
    Vector::parse_tuple(token, 5).unwrap()
}
