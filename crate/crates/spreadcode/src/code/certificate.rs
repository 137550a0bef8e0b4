use std::collections::BTreeMap;
use std::fmt;

use crate::gf2::Subspace;
use crate::spread::PatternKind;

/// A pair of codewords closer than the required minimum distance.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Conflict {
    pub a: Subspace,
    pub b: Subspace,
    pub distance: usize,
}

impl fmt::Display for Conflict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ~ {} (distance {})", self.a.gens_string(), self.b.gens_string(), self.distance)
    }
}

/// Pattern kinds of the two spreads hiding in a doubled code: the nine lines,
/// and the element-wise duals of the nine planes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpreadTypePair {
    pub lines: PatternKind,
    pub duals: PatternKind,
}

impl fmt::Display for SpreadTypePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lines, self.duals)
    }
}

/// Everything the optimality check found out about a code. `optimal` means
/// exactly: 18 codewords of GF(2)^5 at pairwise distance >= 3, the largest
/// possible size for minimum distance 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub size: usize,
    pub min_distance: usize,
    /// codeword dimension -> count
    pub dimension_distribution: BTreeMap<usize, usize>,
    /// all pairs at distance < 3, deterministically ordered
    pub conflicts: Vec<Conflict>,
    pub optimal: bool,
    /// present when the code splits into nine lines and nine planes whose
    /// two spreads both classify
    pub spread_types: Option<SpreadTypePair>,
}

impl Certificate {
    pub fn summary(&self) -> String {
        let dist = self
            .dimension_distribution
            .iter()
            .map(|(d, n)| format!("{d}:{n}"))
            .collect::<Vec<_>>()
            .join(" ");
        let verdict = if self.optimal { "optimal" } else { "not optimal" };
        let types = match &self.spread_types {
            Some(t) => format!(", spread types {t}"),
            None => String::new(),
        };
        format!(
            "size {}, min distance {}, dims {{{dist}}}, {} conflict(s), {verdict}{types}",
            self.size,
            self.min_distance,
            self.conflicts.len()
        )
    }
}
