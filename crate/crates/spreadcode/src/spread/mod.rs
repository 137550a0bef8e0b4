//! Partial line spreads of PG(4,2): ordered lists of pairwise disjoint lines
//! (2-subspaces of GF(2)^5). A maximal partial spread cannot be extended by
//! any further line; the maximal sizes are 5, 7 and 9, carrying 10, 4 and 4
//! reguli respectively, and the size-9 ones miss exactly 4 points (holes).

mod pattern;
mod regulus;

pub use pattern::{PatternKind, PatternType};
pub use regulus::{QuadricArray, Regulus};

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gf2::{enumerate_subspaces, Subspace, Vector};

/// An ordered list of pairwise disjoint lines of PG(4,2). Order matters for
/// printing and for regulus surgery, but comparisons of spreads elsewhere in
/// the crate are usually made on the underlying line sets.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartialSpread {
    lines: Vec<Subspace>,
}

impl PartialSpread {
    /// Validate and wrap: every entry must be a line of GF(2)^5 and all pairs
    /// must meet trivially. The error reports every offending pair at once.
    pub fn new(lines: Vec<Subspace>) -> Result<PartialSpread> {
        for l in &lines {
            if l.ambient() != 5 {
                return Err(Error::AmbientNotFive(l.ambient()));
            }
            if l.dim() != 2 {
                return Err(Error::WrongDimension { expected: 2, got: l.dim() });
            }
        }
        let mut bad = Vec::new();
        for i in 0..lines.len() {
            for j in i + 1..lines.len() {
                let d = lines[i].intersection_dim(&lines[j]);
                if d != 0 {
                    bad.push((i, j, d));
                }
            }
        }
        if !bad.is_empty() {
            return Err(Error::SpreadOverlap { pairs: bad });
        }
        Ok(PartialSpread { lines })
    }

    pub fn lines(&self) -> &[Subspace] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    /// Position of a line in the spread, if present.
    pub fn position_of(&self, line: &Subspace) -> Option<usize> {
        self.lines.iter().position(|l| l == line)
    }

    pub fn line_set(&self) -> BTreeSet<Subspace> {
        self.lines.iter().cloned().collect()
    }

    pub fn covered_points(&self) -> BTreeSet<Vector> {
        self.lines.iter().flat_map(|l| l.points()).collect()
    }

    /// The points of PG(4,2) on no line of the spread, ascending.
    pub fn holes(&self) -> Vec<Vector> {
        let covered = self.covered_points();
        (1u16..32)
            .map(|b| Vector::new(5, b))
            .filter(|p| !covered.contains(p))
            .collect()
    }

    /// First line (in enumeration order) disjoint from every member, i.e. a
    /// witness that the spread is not maximal. `None` means maximal.
    pub fn extending_line(&self) -> Option<Subspace> {
        let all = enumerate_subspaces(5, 2).expect("lines of PG(4,2)");
        all.into_iter()
            .find(|cand| self.lines.iter().all(|l| cand.intersection_dim(l) == 0))
    }

    pub fn is_maximal(&self) -> bool {
        self.extending_line().is_none()
    }

    /// All reguli: 3-subsets of members that are pairwise skew (automatic
    /// here) and span a solid rather than all of GF(2)^5. Ordered by
    /// ascending index triples.
    pub fn reguli(&self) -> Vec<Regulus> {
        let n = self.lines.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let span = self.lines[i].sum(&self.lines[j]).sum(&self.lines[k]);
                    if span.dim() == 4 {
                        let lines = [self.lines[i].clone(), self.lines[j].clone(), self.lines[k].clone()];
                        out.push(Regulus::in_spread(lines, span, [i, j, k]));
                    }
                }
            }
        }
        out
    }

    /// Swap a member regulus for its opposite: the three transversal lines
    /// covering the same 9 points. The replacement happens in place, each
    /// opposite line taking the spread position of the member line in the
    /// corresponding quadric-array row. Covered points — and hence holes and
    /// maximality — are unchanged.
    pub fn replace_regulus(&self, reg: &Regulus) -> Result<PartialSpread> {
        let positions: Vec<usize> = reg
            .lines()
            .iter()
            .map(|l| {
                self.position_of(l)
                    .ok_or_else(|| Error::RegulusNotInSpread(l.points_string()))
            })
            .collect::<Result<_>>()?;
        let opposite = reg.opposite();
        let mut lines = self.lines.clone();
        for (pos, new_line) in positions.into_iter().zip(opposite.lines().iter()) {
            lines[pos] = new_line.clone();
        }
        PartialSpread::new(lines)
    }

    /// Classify a size-9 maximal spread by how its four reguli share lines.
    pub fn classify_pattern(&self) -> Result<PatternType> {
        pattern::classify(self)
    }
}

/// Grow a spread greedily: scan `order` once, adding every line disjoint from
/// all current members. One pass suffices — a line that conflicts once
/// conflicts forever — and the result is always maximal with respect to the
/// full line set as long as `order` contains all 155 lines.
pub fn greedy_maximal(seed: &PartialSpread, order: &[Subspace]) -> PartialSpread {
    let mut lines = seed.lines.to_vec();
    for cand in order {
        if lines.iter().all(|l| l.intersection_dim(cand) == 0) {
            lines.push(cand.clone());
        }
    }
    PartialSpread::new(lines).expect("greedy extension keeps lines disjoint")
}

/// Aggregate results of a randomized greedy census.
#[derive(Debug)]
pub struct CensusReport {
    pub seeds: u64,
    /// spread size -> number of seeds that produced it
    pub size_counts: BTreeMap<usize, u64>,
    /// spread size -> set of regulus counts observed at that size
    pub regulus_counts: BTreeMap<usize, BTreeSet<usize>>,
    /// pattern kind -> number of size-9 spreads of that kind
    pub size9_patterns: BTreeMap<PatternKind, u64>,
}

/// Run `seeds` greedy completions from the empty spread, each over an
/// independently shuffled line order (ChaCha-seeded, so fully deterministic
/// for a given `master_seed`). Every size-9 result is classified; a spread
/// matching no pattern is surfaced as an error rather than force-fitted.
pub fn greedy_census(seeds: u64, master_seed: u64) -> Result<CensusReport> {
    let all = enumerate_subspaces(5, 2)?;
    let empty = PartialSpread::new(Vec::new())?;
    let mut report = CensusReport {
        seeds,
        size_counts: BTreeMap::new(),
        regulus_counts: BTreeMap::new(),
        size9_patterns: BTreeMap::new(),
    };
    for s in 0..seeds {
        let mut rng = ChaCha8Rng::seed_from_u64(master_seed.wrapping_add(s));
        let mut order = all.clone();
        order.shuffle(&mut rng);
        let spread = greedy_maximal(&empty, &order);
        let size = spread.len();
        *report.size_counts.entry(size).or_insert(0) += 1;
        report.regulus_counts.entry(size).or_default().insert(spread.reguli().len());
        if size == 9 {
            let pattern = spread.classify_pattern()?;
            *report.size9_patterns.entry(pattern.kind()).or_insert(0) += 1;
        }
    }
    Ok(report)
}
