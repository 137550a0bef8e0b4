use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::Subspace;
use crate::spread::PartialSpread;

/// How the four reguli of a size-9 maximal spread share lines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PatternKind {
    /// All four reguli share one common line.
    X,
    /// Three reguli pairwise share one line each (a triangle of three
    /// distinct lines); the fourth regulus is isolated.
    IDelta,
    /// One central regulus shares one distinct line with each of the other
    /// three, which are otherwise disjoint from each other.
    E,
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PatternKind::X => "X",
            PatternKind::IDelta => "IDelta",
            PatternKind::E => "E",
        })
    }
}

/// A classification with its witness. Regulus indices refer to
/// [`PartialSpread::reguli`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PatternType {
    X { common_line: Subspace },
    IDelta { isolated: usize, shared_lines: [Subspace; 3] },
    E { center: usize, shared_lines: [Subspace; 3] },
}

impl PatternType {
    pub fn kind(&self) -> PatternKind {
        match self {
            PatternType::X { .. } => PatternKind::X,
            PatternType::IDelta { .. } => PatternKind::IDelta,
            PatternType::E { .. } => PatternKind::E,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            PatternType::X { common_line } => {
                format!("X: common line {}", common_line.points_string())
            }
            PatternType::IDelta { isolated, shared_lines } => format!(
                "IDelta: regulus {} isolated; triangle lines {}",
                isolated,
                shared_lines.iter().map(|l| l.points_string()).collect::<Vec<_>>().join(" ")
            ),
            PatternType::E { center, shared_lines } => format!(
                "E: regulus {} central; shared lines {}",
                center,
                shared_lines.iter().map(|l| l.points_string()).collect::<Vec<_>>().join(" ")
            ),
        }
    }
}

pub(super) fn classify(s: &PartialSpread) -> Result<PatternType> {
    if s.len() != 9 {
        return Err(Error::NotSize9(s.len()));
    }
    if let Some(witness) = s.extending_line() {
        return Err(Error::NotMaximal { witness: witness.points_string() });
    }
    let reguli = s.reguli();
    let member_sets: Vec<BTreeSet<usize>> = reguli
        .iter()
        .map(|r| r.indices().expect("regulus listed from a spread").into_iter().collect())
        .collect();
    let details = || {
        let mut parts = Vec::new();
        for i in 0..member_sets.len() {
            for j in i + 1..member_sets.len() {
                let shared: Vec<usize> = member_sets[i].intersection(&member_sets[j]).copied().collect();
                parts.push(format!("r{i}&r{j}={shared:?}"));
            }
        }
        format!("{} reguli; {}", member_sets.len(), parts.join(" "))
    };
    if member_sets.len() != 4 {
        return Err(Error::PatternUnmatched { details: details() });
    }

    // X: a line on all four reguli
    let common: Vec<usize> = member_sets
        .iter()
        .skip(1)
        .fold(member_sets[0].clone(), |acc, m| acc.intersection(m).copied().collect())
        .into_iter()
        .collect();
    if common.len() == 1 {
        return Ok(PatternType::X { common_line: s.lines()[common[0]].clone() });
    }
    if common.len() > 1 {
        return Err(Error::PatternUnmatched { details: details() });
    }

    // otherwise we need exactly three sharing pairs, one line each, all
    // distinct, forming either a triangle or a star
    let mut edges: Vec<(usize, usize, usize)> = Vec::new(); // (i, j, shared line index)
    for i in 0..4 {
        for j in i + 1..4 {
            let shared: Vec<usize> = member_sets[i].intersection(&member_sets[j]).copied().collect();
            match shared.len() {
                0 => {}
                1 => edges.push((i, j, shared[0])),
                _ => return Err(Error::PatternUnmatched { details: details() }),
            }
        }
    }
    if edges.len() != 3 {
        return Err(Error::PatternUnmatched { details: details() });
    }
    let shared_set: BTreeSet<usize> = edges.iter().map(|&(_, _, l)| l).collect();
    if shared_set.len() != 3 {
        return Err(Error::PatternUnmatched { details: details() });
    }
    let mut degree = [0usize; 4];
    for &(i, j, _) in &edges {
        degree[i] += 1;
        degree[j] += 1;
    }
    let shared_lines: Vec<Subspace> = shared_set.iter().map(|&l| s.lines()[l].clone()).collect();
    let shared_lines: [Subspace; 3] = shared_lines.try_into().expect("three shared lines");
    if let Some(isolated) = (0..4).find(|&i| degree[i] == 0) {
        // remaining three vertices must pairwise share: degrees 2,2,2
        if (0..4).filter(|&i| i != isolated).all(|i| degree[i] == 2) {
            return Ok(PatternType::IDelta { isolated, shared_lines });
        }
    }
    if let Some(center) = (0..4).find(|&i| degree[i] == 3) {
        if (0..4).filter(|&i| i != center).all(|i| degree[i] == 1) {
            return Ok(PatternType::E { center, shared_lines });
        }
    }
    Err(Error::PatternUnmatched { details: details() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn classify(name: &str) -> PatternType {
        catalog::spread(name).unwrap().classify_pattern().unwrap()
    }

    #[test]
    fn s1p_is_idelta_with_r2_isolated() {
        match classify("S1p") {
            PatternType::IDelta { isolated, shared_lines } => {
                // reguli in index order: (l1 l5 l9), (l2 l4 l6), (l3 l5 l7), (l7 l8 l9);
                // the second one is the isolated 'I'
                assert_eq!(isolated, 1);
                let s1p = catalog::spread("S1p").unwrap();
                let expect: Vec<_> =
                    [4, 6, 8].iter().map(|&i| s1p.lines()[i].clone()).collect();
                let mut got = shared_lines.to_vec();
                got.sort();
                let mut expect = expect;
                expect.sort();
                assert_eq!(got, expect, "triangle lines are l5, l7, l9");
            }
            other => panic!("expected IDelta, got {other:?}"),
        }
    }

    #[test]
    fn ms1po_is_x_on_the_fixed_line() {
        match classify("mS1po") {
            PatternType::X { common_line } => {
                assert_eq!(common_line.points_string(), "{2,5u,134}");
            }
            other => panic!("expected X, got {other:?}"),
        }
    }

    #[test]
    fn e1_is_e_centered_on_the_replacement_regulus() {
        match classify("E1") {
            PatternType::E { center, shared_lines } => {
                let e1 = catalog::spread("E1").unwrap();
                let centre_set = e1.reguli()[center].indices().unwrap();
                assert_eq!(centre_set, [1, 3, 8], "central regulus is l2, l4, l9");
                assert_eq!(shared_lines.len(), 3);
            }
            other => panic!("expected E, got {other:?}"),
        }
    }

    #[test]
    fn expected_kinds_for_all_catalog_spreads() {
        for (name, kind) in [
            ("S1", PatternKind::X),
            ("S2", PatternKind::IDelta),
            ("S1p", PatternKind::IDelta),
            ("S2o", PatternKind::IDelta),
            ("S1po", PatternKind::IDelta),
            ("mS1po", PatternKind::X),
            ("E1", PatternKind::E),
            ("mS2o", PatternKind::IDelta),
        ] {
            assert_eq!(classify(name).kind(), kind, "{name}");
        }
    }

    #[test]
    fn non_maximal_and_wrong_size_are_rejected() {
        let s1 = catalog::spread("S1").unwrap();
        let eight = PartialSpread::new(s1.lines()[..8].to_vec()).unwrap();
        assert!(matches!(eight.classify_pattern(), Err(Error::NotSize9(8))));
    }
}
