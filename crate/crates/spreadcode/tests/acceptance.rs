//! End-to-end acceptance checks, one test per criterion. Each test prints a
//! single PASS line on success (visible with --nocapture / --show-output).

use std::collections::{BTreeMap, BTreeSet};

use spreadcode::catalog::{self, trio_truth_table};
use spreadcode::code::{doubling, is_optimal_53, min_distance, SubspaceCode};
use spreadcode::gf2::{enumerate_subspaces, Subspace};
use spreadcode::hkk;
use spreadcode::repair::{minimal_change_repair, CodeSide};
use spreadcode::spread::{greedy_census, PartialSpread, PatternKind};

fn line_set(s: &PartialSpread) -> BTreeSet<Subspace> {
    s.lines().iter().cloned().collect()
}

fn types_of(code: &SubspaceCode) -> (PatternKind, PatternKind) {
    let t = is_optimal_53(code).unwrap().spread_types.unwrap();
    (t.lines, t.duals)
}

#[test]
fn c01_six_catalog_codes_certify_as_5_18_3() {
    for name in ["MEV", "MEV-dual", "OR1", "OR1-dual", "OR2", "OR2-dual"] {
        let cert = is_optimal_53(&catalog::code(name).unwrap()).unwrap();
        assert_eq!(cert.size, 18, "{name}");
        assert_eq!(cert.min_distance, 3, "{name}");
        assert!(cert.conflicts.is_empty(), "{name}");
        assert!(cert.optimal, "{name}");
        assert_eq!(cert.dimension_distribution, BTreeMap::from([(2, 9), (3, 9)]), "{name}");
    }
    println!("criterion 1 PASS: MEV, OR1, OR2 and their duals all certify as (5, 18, 3)");
}

#[test]
fn c02_ev_union_has_one_conflict_and_two_17_word_resolutions() {
    let s1 = catalog::spread("S1").unwrap();
    let s2 = catalog::spread("S2").unwrap();
    let dc = doubling(&s1, &s2);
    let conflicts = &dc.certificate.conflicts;
    assert_eq!(conflicts.len(), 1);
    let c = &conflicts[0];
    assert_eq!(c.distance, 1);
    // the conflicting pair is the second line of the left spread inside the
    // dual of the fifth line of the right spread
    let l2 = &s1.lines()[1];
    let p5 = s2.lines()[4].dual();
    assert_eq!(BTreeSet::from([c.a.clone(), c.b.clone()]), BTreeSet::from([l2.clone(), p5.clone()]));
    assert!(l2.is_subspace_of(&p5));

    for member in [&c.a, &c.b] {
        let shrunk = dc.code.without(member).unwrap();
        assert_eq!(shrunk.len(), 17);
        assert_eq!(min_distance(&shrunk).unwrap(), 3);
    }
    println!("criterion 2 PASS: the size-17 union has the single known conflict; deleting either member gives a (5, 17, 3) code");
}

#[test]
fn c03_spread_type_table() {
    let expected = [
        ("MEV", (PatternKind::IDelta, PatternKind::IDelta)),
        ("OR1", (PatternKind::X, PatternKind::IDelta)),
        ("OR2", (PatternKind::E, PatternKind::IDelta)),
        ("OR2-dual", (PatternKind::IDelta, PatternKind::E)),
    ];
    for (name, want) in expected {
        assert_eq!(types_of(&catalog::code(name).unwrap()), want, "{name}");
    }
    let trio = doubling(&catalog::spread("S1").unwrap(), &catalog::spread("S1p").unwrap());
    assert_eq!(types_of(&trio.code), (PatternKind::X, PatternKind::IDelta));
    println!("criterion 3 PASS: classifier reproduces the spread-type table, corrected fixture included");
}

#[test]
fn c04_regulus_census() {
    for name in ["S1", "S2", "S1p", "S2o", "S1po", "mS1po", "E1", "mS2o"] {
        let s = catalog::spread(name).unwrap();
        assert_eq!(s.reguli().len(), 4, "{name} should have exactly 4 reguli");
    }
    // greedy runs essentially never land on size 5, so the 5-line row of the
    // size/regulus table is pinned by an explicit witness found by search
    let five = PartialSpread::new(
        [["4", "5"], ["2", "3"], ["24", "35"], ["34", "235"], ["25", "234"]]
            .iter()
            .map(|[a, b]| Subspace::span(5, &[v(a), v(b)]))
            .collect(),
    )
    .unwrap();
    assert!(five.is_maximal(), "the 5-line witness should admit no sixth line");
    assert_eq!(five.reguli().len(), 10, "every triple of the witness is a regulus");
    assert_eq!(five.holes().len(), 16);

    let report = greedy_census(1000, 0x5eed).unwrap();
    let observed: BTreeSet<usize> = report.size_counts.keys().copied().collect();
    assert!(observed.is_subset(&BTreeSet::from([5, 7, 9])), "sizes {observed:?}");
    assert!(report.size_counts.contains_key(&9), "1000 runs should reach size 9");
    let expected_reguli = BTreeMap::from([(5usize, 10usize), (7, 4), (9, 4)]);
    for (size, counts) in &report.regulus_counts {
        assert_eq!(counts, &BTreeSet::from([expected_reguli[size]]), "size {size}");
    }
    let classified: u64 = report.size9_patterns.values().sum();
    assert_eq!(classified, report.size_counts[&9]);
    println!(
        "criterion 4 PASS: catalog spreads have 4 reguli; {} greedy runs gave sizes {:?} with regulus counts 10/4/4",
        report.seeds, report.size_counts
    );
}

#[test]
fn c05_opposite_regulus_reproduction() {
    // the distinguished regulus of S2 is its last three lines; surgery
    // reproduces the printed S2o position for position
    let s2 = catalog::spread("S2").unwrap();
    let r4 = s2
        .reguli()
        .into_iter()
        .find(|r| r.lines().iter().all(|l| s2.lines()[6..].contains(l)))
        .expect("S2 has a regulus on its last three lines");
    assert_eq!(s2.replace_regulus(&r4).unwrap(), catalog::spread("S2o").unwrap());

    // the distinguished regulus of S1p sits on lines 2, 4, 6
    let s1p = catalog::spread("S1p").unwrap();
    let picked: Vec<Subspace> = [1usize, 3, 5].iter().map(|&i| s1p.lines()[i].clone()).collect();
    let r2 = s1p
        .reguli()
        .into_iter()
        .find(|r| r.lines().iter().all(|l| picked.contains(l)))
        .expect("S1p has a regulus on lines 2, 4, 6");
    assert_eq!(s1p.replace_regulus(&r2).unwrap(), catalog::spread("S1po").unwrap());

    // replacing twice restores every catalog spread (as a line set)
    let mut involutions = 0;
    for name in ["S1", "S2", "S1p", "S2o", "S1po", "mS1po", "E1", "mS2o"] {
        let s = catalog::spread(name).unwrap();
        for r in s.reguli() {
            let once = s.replace_regulus(&r).unwrap();
            let back = once
                .reguli()
                .into_iter()
                .find(|opp| {
                    let twice = once.replace_regulus(opp).unwrap();
                    line_set(&twice) == line_set(&s)
                })
                .is_some();
            assert!(back, "{name}: no inverse surgery for one regulus");
            involutions += 1;
        }
    }
    assert_eq!(involutions, 32);
    println!("criterion 5 PASS: surgery reproduces the printed spreads and inverts on all 32 catalog reguli");
}

#[test]
fn c06_repair_reproduction() {
    // (a) the 17+1 conflict resolves by the known two-line rewrite
    let ev = doubling(&catalog::spread("S1").unwrap(), &catalog::spread("S2").unwrap());
    let outcome = minimal_change_repair(&ev.code).unwrap();
    let mev = catalog::code("MEV").unwrap();
    let hit = outcome
        .repairs
        .iter()
        .find(|r| r.code == mev)
        .expect("repair list should contain the two-change rewrite to MEV");
    assert_eq!(hit.changes.len(), 2);
    let news: BTreeSet<String> =
        hit.changes.iter().map(|ch| ch.new.points_string()).collect();
    assert_eq!(news, BTreeSet::from(["{13,25,4u}".to_string(), "{u,14,235}".to_string()]));

    // (b) the post-surgery pair repairs to the first opposite-regulus code,
    // ending with the printed third-line rewrite
    let or1_input = doubling(&catalog::spread("S1po").unwrap(), &catalog::spread("S2o").unwrap());
    let outcome = minimal_change_repair(&or1_input.code).unwrap();
    let or1 = catalog::code("OR1").unwrap();
    let hit = outcome
        .repairs
        .iter()
        .find(|r| r.code == or1)
        .expect("repair list should contain the rewrite to OR1");
    assert_eq!(hit.changes.len(), 2);
    assert!(hit.changes.iter().any(|ch| ch.new.points_string() == "{14,125,245}"));

    // (c) the second opposite-regulus pair repairs by one plane rewrite, and
    // every line-side attempt is a recorded dead end
    let or2_input = doubling(&catalog::spread("E1").unwrap(), &catalog::spread("S2o").unwrap());
    let outcome = minimal_change_repair(&or2_input.code).unwrap();
    let or2 = catalog::code("OR2").unwrap();
    let hit = outcome
        .repairs
        .iter()
        .find(|r| r.code == or2)
        .expect("repair list should contain the rewrite to OR2");
    assert_eq!(hit.changes.len(), 1);
    let ch = &hit.changes[0];
    assert_eq!(ch.side, CodeSide::Planes);
    assert_eq!(ch.old, Subspace::span(5, &[v("1"), v("2"), v("345")]));
    assert_eq!(ch.new, Subspace::span(5, &[v("1"), v("2"), v("34")]));
    let line_side = outcome
        .diagnostics
        .iter()
        .find(|d| d.side == CodeSide::Lines)
        .expect("diagnostics should cover the line-side member");
    assert!(line_side.neighbors_tried > 0);
    assert_eq!(line_side.direct_repairs, 0);
    assert_eq!(line_side.cascade_repairs, 0);
    println!("criterion 6 PASS: all three published repairs found, with the line-side dead end recorded");
}

fn v(token: &str) -> spreadcode::gf2::Vector {
    spreadcode::gf2::Vector::parse_tuple(token, 5).unwrap()
}

#[test]
fn c07_rank_metric_pipeline() {
    let book = hkk::gabidulin_codebook();
    assert_eq!(book.len(), 64);
    let min_rank = book.iter().filter(|m| !m.is_zero()).map(|m| m.rank()).min().unwrap();
    assert_eq!(min_rank, 2);

    let lifted: Vec<Subspace> = book.iter().map(hkk::lift).collect();
    let mut min_d = usize::MAX;
    for (i, a) in lifted.iter().enumerate() {
        for b in &lifted[i + 1..] {
            min_d = min_d.min(a.distance(b));
        }
    }
    assert_eq!(min_d, 4);

    let report = hkk::build().unwrap();
    assert!(report.certificate.optimal);
    assert_eq!(report.certificate.size, 18);
    assert_eq!(report.certificate.min_distance, 3);
    assert_eq!(report.line_type, PatternKind::X);
    assert_eq!(report.dual_type, PatternKind::X);
    assert_eq!(report.sub_spread_regulus_count, 0);
    println!("criterion 7 PASS: rank-metric shortening yields an (X, X) optimal code over a regulus-free core");
}

#[test]
fn c08_duality_properties() {
    let code_names = ["EV-union", "MEV", "MEV-dual", "OR1", "OR1-dual", "OR2", "OR2-dual"];
    for name in code_names {
        let c = catalog::code(name).unwrap();
        let d = spreadcode::code::dual_code(&c);
        let multiset = |code: &SubspaceCode| {
            let m = code.members();
            let mut out: Vec<usize> = (0..m.len())
                .flat_map(|i| (i + 1..m.len()).map(move |j| (i, j)))
                .map(|(i, j)| m[i].distance(&m[j]))
                .collect();
            out.sort_unstable();
            out
        };
        assert_eq!(multiset(&c), multiset(&d), "{name}: dual should preserve distances");
    }

    let mut checked = 0;
    for name in code_names {
        let Some((a, b)) = catalog::doubling_pair(name) else { continue };
        let forward = doubling(&catalog::spread(a).unwrap(), &catalog::spread(b).unwrap());
        if forward.certificate.optimal {
            let reverse = doubling(&catalog::spread(b).unwrap(), &catalog::spread(a).unwrap());
            assert!(reverse.certificate.optimal, "{name}: dual union should stay optimal");
            checked += 1;
        }
    }
    assert!(checked >= 6);
    println!("criterion 8 PASS: duals preserve distance multisets and dual unions of optimal pairs stay optimal");
}

#[test]
fn c09_enumeration_counts_and_dual_bijection() {
    let points = enumerate_subspaces(5, 1).unwrap();
    let lines = enumerate_subspaces(5, 2).unwrap();
    let planes = enumerate_subspaces(5, 3).unwrap();
    assert_eq!(points.len(), 31);
    assert_eq!(lines.len(), 155);
    assert_eq!(planes.len(), 155);

    let plane_set: BTreeSet<Subspace> = planes.iter().cloned().collect();
    let images: BTreeSet<Subspace> = lines.iter().map(Subspace::dual).collect();
    assert_eq!(images.len(), 155, "dual should be injective on lines");
    assert_eq!(images, plane_set, "dual should map lines onto planes");
    println!("criterion 9 PASS: 31 points, 155 lines, 155 planes; dual is a bijection lines <-> planes");
}

#[test]
fn c10_trio_resolution() {
    let table = trio_truth_table();
    assert_eq!(table.len(), 6);
    for row in &table {
        println!("  {row}");
    }
    let find = |l: &str, r: &str| table.iter().find(|e| e.left == l && e.right == r).unwrap();
    // only the uncontested rows are asserted; the S1/S1p rows are data
    assert!(find("S1p", "S2").optimal);
    assert!(!find("S1", "S2").optimal);
    println!(
        "criterion 10 PASS: trio table emitted; S1p+dual(S2) optimal, S1+dual(S2) not; S1/S1p rows recorded ({} and {})",
        find("S1", "S1p").optimal,
        find("S1p", "S1").optimal
    );
}
