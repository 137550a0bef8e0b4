//! From rank metric to subspace metric: lift the 64-word Gabidulin codebook
//! over GF(8) into PG(5,2), pick a context (two extra planes, a point, a
//! hyperplane), shorten into PG(4,2), and certify the result.
//! Run with `cargo run --example hkk_pipeline`.

use spreadcode::hkk;

fn main() {
    let book = hkk::gabidulin_codebook();
    let ranks: Vec<usize> = book.iter().filter(|m| !m.is_zero()).map(|m| m.rank()).collect();
    println!(
        "codebook: {} matrices, nonzero ranks min {} max {}",
        book.len(),
        ranks.iter().min().unwrap(),
        ranks.iter().max().unwrap()
    );

    // lifting [I | M] doubles rank distance into subspace distance
    let a = hkk::lift(&book[1]);
    let b = hkk::lift(&book[2]);
    println!("two lifted planes in GF(2)^6 at distance {}", a.distance(&b));

    let ctx = hkk::find_context().unwrap();
    println!("\ncontext found:");
    println!("  extra planes {} and {}", ctx.extra_planes.0.gens_string(), ctx.extra_planes.1.gens_string());
    println!("  point {} / hyperplane {}", ctx.point, ctx.hyperplane.gens_string());

    let shortened = hkk::shorten(&ctx).unwrap();
    println!(
        "\nshortened: {} lines from lifts + 1, {} planes from lifts + 1",
        shortened.lines_from_lifted.len(),
        shortened.planes_from_lifted.len()
    );

    let report = hkk::certify_hkk(&shortened.code).unwrap();
    println!("certificate: {}", report.certificate.summary());
    println!("line spread type {}, dual spread type {}", report.line_type, report.dual_type);
    println!(
        "moving line {} sweeps hole plane {} over a regulus-free 8-line core ({} reguli)",
        report.moving_line.moving_line.points_string(),
        report.moving_line.plane.points_string(),
        report.sub_spread_regulus_count
    );
}
