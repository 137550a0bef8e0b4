//! Subspace codes under the injection distance d(U,V) = dim U + dim V − 2 dim(U∩V):
//! minimum distance, conflict detection, the doubling construction S_a ∪ (S_b)⊥,
//! element-wise duals, and optimality certification for (5,3)₂ codes.

mod certificate;

pub use certificate::{Certificate, Conflict, SpreadTypePair};

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{enumerate_subspaces, Subspace};
use crate::spread::PartialSpread;

/// A finite set of subspaces of GF(2)^n, kept in insertion order for display.
/// Equality ignores order.
#[derive(Clone, Debug)]
pub struct SubspaceCode {
    ambient: u8,
    members: Vec<Subspace>,
}

impl SubspaceCode {
    /// Builds a code from distinct codewords. Panics if the members disagree
    /// on the ambient dimension; returns an error on duplicates or emptiness.
    pub fn new(members: Vec<Subspace>) -> Result<Self> {
        let first = members.first().ok_or(Error::EmptyCode)?;
        let ambient = first.ambient();
        for m in &members {
            assert_eq!(m.ambient(), ambient, "codewords from different ambient spaces");
        }
        let mut sorted = members.clone();
        sorted.sort();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateCodeword(w[0].gens_string()));
            }
        }
        Ok(SubspaceCode { ambient, members })
    }

    pub fn ambient(&self) -> u8 {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Subspace] {
        &self.members
    }

    pub fn contains(&self, s: &Subspace) -> bool {
        self.members.contains(s)
    }

    pub fn position_of(&self, s: &Subspace) -> Option<usize> {
        self.members.iter().position(|m| m == s)
    }

    /// Members with the given dimension, in code order.
    pub fn members_of_dim(&self, dim: usize) -> Vec<&Subspace> {
        self.members.iter().filter(|m| m.dim() == dim).collect()
    }

    /// Codeword dimension -> count.
    pub fn dimension_distribution(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for m in &self.members {
            *out.entry(m.dim()).or_insert(0) += 1;
        }
        out
    }

    /// Same code with `old` swapped for `new` in place. Panics if `old` is
    /// not a codeword; errors if `new` already is one.
    pub fn with_replacement(&self, old: &Subspace, new: Subspace) -> Result<Self> {
        let idx = self
            .position_of(old)
            .unwrap_or_else(|| panic!("{} is not a codeword", old.gens_string()));
        if self.contains(&new) {
            return Err(Error::DuplicateCodeword(new.gens_string()));
        }
        let mut members = self.members.clone();
        members[idx] = new;
        SubspaceCode::new(members)
    }

    /// Same code without one member. Errors (EmptyCode) when that would
    /// leave nothing.
    pub fn without(&self, member: &Subspace) -> Result<Self> {
        let members: Vec<Subspace> =
            self.members.iter().filter(|m| *m != member).cloned().collect();
        SubspaceCode::new(members)
    }
}

impl PartialEq for SubspaceCode {
    fn eq(&self, other: &Self) -> bool {
        if self.ambient != other.ambient || self.members.len() != other.members.len() {
            return false;
        }
        let mut a = self.members.clone();
        let mut b = other.members.clone();
        a.sort();
        b.sort();
        a == b
    }
}

impl Eq for SubspaceCode {}

impl fmt::Display for SubspaceCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.members {
            writeln!(f, "{}", m.gens_string())?;
        }
        Ok(())
    }
}

/// Minimum pairwise subspace distance. Needs at least two codewords.
pub fn min_distance(c: &SubspaceCode) -> Result<usize> {
    if c.len() < 2 {
        return Err(Error::TooFewCodewords);
    }
    let mut best = usize::MAX;
    for (i, u) in c.members().iter().enumerate() {
        for v in &c.members()[i + 1..] {
            best = best.min(u.distance(v));
        }
    }
    Ok(best)
}

/// All pairs at distance below `threshold`, each with a < b, sorted.
pub fn conflicts(c: &SubspaceCode, threshold: usize) -> Vec<Conflict> {
    let mut out = Vec::new();
    for (i, u) in c.members().iter().enumerate() {
        for v in &c.members()[i + 1..] {
            let d = u.distance(v);
            if d < threshold {
                let (a, b) = if u <= v { (u, v) } else { (v, u) };
                out.push(Conflict { a: a.clone(), b: b.clone(), distance: d });
            }
        }
    }
    out.sort();
    out
}

/// Element-wise orthogonal complement; preserves order, size, and (by the
/// duality isometry) the whole distance spectrum.
pub fn dual_code(c: &SubspaceCode) -> SubspaceCode {
    let members = c.members().iter().map(|m| m.dual()).collect();
    SubspaceCode::new(members).expect("dual of a valid code is a valid code")
}

/// Outcome of the doubling construction: the code, its certificate, and any
/// warnings about the input spreads (wrong size, not maximal). The
/// construction itself never refuses well-formed spreads.
#[derive(Clone, Debug)]
pub struct DoubledCode {
    pub code: SubspaceCode,
    pub certificate: Certificate,
    pub warnings: Vec<String>,
}

/// The doubling construction: `sa`'s lines together with the element-wise
/// duals of `sb`'s lines. With two maximal 9-spreads this yields 9 lines and
/// 9 planes; anything else still builds but carries warnings.
pub fn doubling(sa: &PartialSpread, sb: &PartialSpread) -> DoubledCode {
    let mut warnings = Vec::new();
    for (tag, s) in [("left", sa), ("right", sb)] {
        if s.len() != 9 {
            warnings.push(format!("{tag} spread has {} lines, not 9", s.len()));
        } else if !s.is_maximal() {
            warnings.push(format!("{tag} spread is not maximal"));
        }
    }
    let mut members: Vec<Subspace> = sa.lines().to_vec();
    members.extend(sb.lines().iter().map(|l| l.dual()));
    let code = SubspaceCode::new(members).expect("doubling of nonempty spreads");
    let certificate = is_optimal_53(&code).expect("doubled code lives in GF(2)^5");
    DoubledCode { code, certificate, warnings }
}

/// The dual union S_b ∪ (S_a)⊥ — the same construction with the roles
/// swapped, provided under its customary name.
pub fn dual_union(sa: &PartialSpread, sb: &PartialSpread) -> DoubledCode {
    doubling(sb, sa)
}

/// Certifies a code in GF(2)^5 against the (5, 18, 3) target: `optimal` in
/// the result means size 18 with minimum distance ≥ 3, the largest possible
/// code at that distance. Also reports the dimension distribution, all
/// conflicts at threshold 3, and — when the code splits into 9 lines and 9
/// planes forming classifiable spreads — the two spread pattern types.
pub fn is_optimal_53(c: &SubspaceCode) -> Result<Certificate> {
    if c.ambient() != 5 {
        return Err(Error::AmbientNotFive(c.ambient()));
    }
    let min_distance = min_distance(c)?;
    let conflicts = conflicts(c, 3);
    let optimal = c.len() == 18 && min_distance >= 3;
    Ok(Certificate {
        size: c.len(),
        min_distance,
        dimension_distribution: c.dimension_distribution(),
        conflicts,
        optimal,
        spread_types: extract_spread_types(c),
    })
}

/// When the code is exactly 9 lines + 9 planes whose line halves (and the
/// duals of the plane half) form classifiable spreads, report both types.
fn extract_spread_types(c: &SubspaceCode) -> Option<SpreadTypePair> {
    if c.len() != 18 {
        return None;
    }
    let lines: Vec<Subspace> = c.members().iter().filter(|m| m.dim() == 2).cloned().collect();
    let planes: Vec<Subspace> = c.members().iter().filter(|m| m.dim() == 3).cloned().collect();
    if lines.len() != 9 || planes.len() != 9 {
        return None;
    }
    let line_spread = PartialSpread::new(lines).ok()?;
    let dual_spread = PartialSpread::new(planes.iter().map(|p| p.dual()).collect()).ok()?;
    let lines_kind = line_spread.classify_pattern().ok()?.kind();
    let duals_kind = dual_spread.classify_pattern().ok()?.kind();
    Some(SpreadTypePair { lines: lines_kind, duals: duals_kind })
}

/// All optimal codes reachable from an optimal 9-line + 9-plane code by
/// swapping one line for a point, or one plane for a hyperplane, keeping
/// every pairwise distance ≥ 3. Exhaustive over all 31 points and all 31
/// hyperplanes per deletion; outputs re-certified, deterministic order.
pub fn promote_variants(c: &SubspaceCode) -> Result<Vec<SubspaceCode>> {
    let cert = is_optimal_53(c)?;
    let balanced =
        cert.dimension_distribution == BTreeMap::from([(2usize, 9usize), (3usize, 9usize)]);
    if !cert.optimal || !balanced {
        return Err(Error::NotDoubledOptimal(cert.summary()));
    }
    let points = enumerate_subspaces(5, 1).expect("points of GF(2)^5");
    let hyperplanes = enumerate_subspaces(5, 4).expect("hyperplanes of GF(2)^5");
    let mut out = Vec::new();
    for (dim, pool) in [(2usize, &points), (3usize, &hyperplanes)] {
        for member in c.members().iter().filter(|m| m.dim() == dim) {
            for candidate in pool {
                let variant = c
                    .with_replacement(member, candidate.clone())
                    .expect("replacement dimensions never collide with existing codewords");
                if conflicts(&variant, 3).is_empty() {
                    debug_assert!(is_optimal_53(&variant).unwrap().optimal);
                    out.push(variant);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::gf2::Vector;
    use std::collections::BTreeSet;

    fn code_of(pair: (&str, &str)) -> DoubledCode {
        doubling(&catalog::spread(pair.0).unwrap(), &catalog::spread(pair.1).unwrap())
    }

    fn distance_multiset(c: &SubspaceCode) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, u) in c.members().iter().enumerate() {
            for v in &c.members()[i + 1..] {
                out.push(u.distance(v));
            }
        }
        out.sort();
        out
    }

    #[test]
    fn two_skew_lines_are_at_distance_four() {
        let s1 = catalog::spread("S1").unwrap();
        let c = SubspaceCode::new(vec![s1.lines()[0].clone(), s1.lines()[1].clone()]).unwrap();
        assert_eq!(min_distance(&c).unwrap(), 4);
    }

    #[test]
    fn min_distance_needs_two_codewords() {
        let s1 = catalog::spread("S1").unwrap();
        let c = SubspaceCode::new(vec![s1.lines()[0].clone()]).unwrap();
        assert!(matches!(min_distance(&c), Err(Error::TooFewCodewords)));
    }

    #[test]
    fn duplicates_are_rejected() {
        let s1 = catalog::spread("S1").unwrap();
        let l = s1.lines()[0].clone();
        assert!(matches!(
            SubspaceCode::new(vec![l.clone(), l]),
            Err(Error::DuplicateCodeword(_))
        ));
    }

    #[test]
    fn plain_ev_union_has_the_single_containment_conflict() {
        let dc = code_of(("S1", "S2"));
        assert_eq!(dc.certificate.min_distance, 1);
        assert!(!dc.certificate.optimal);
        let s1 = catalog::spread("S1").unwrap();
        let s2 = catalog::spread("S2").unwrap();
        let expected_a = s1.lines()[1].clone();
        let expected_b = s2.lines()[4].dual();
        assert_eq!(dc.certificate.conflicts.len(), 1);
        let c = &dc.certificate.conflicts[0];
        assert_eq!(c.distance, 1);
        assert_eq!(
            (&c.a, &c.b),
            if expected_a <= expected_b {
                (&expected_a, &expected_b)
            } else {
                (&expected_b, &expected_a)
            }
        );
        assert!(expected_a.is_subspace_of(&expected_b));
    }

    #[test]
    fn deleting_either_conflict_member_leaves_a_17_word_distance_3_code() {
        let dc = code_of(("S1", "S2"));
        let c = &dc.certificate.conflicts[0];
        for member in [&c.a, &c.b] {
            let trimmed = dc.code.without(member).unwrap();
            assert_eq!(trimmed.len(), 17);
            assert_eq!(min_distance(&trimmed).unwrap(), 3);
        }
    }

    #[test]
    fn doubled_optimal_code_certifies_as_5_18_3() {
        let dc = code_of(("S1p", "S2"));
        assert!(dc.warnings.is_empty());
        let cert = &dc.certificate;
        assert!(cert.optimal);
        assert_eq!(cert.size, 18);
        assert_eq!(cert.min_distance, 3);
        assert!(cert.conflicts.is_empty());
        assert_eq!(
            cert.dimension_distribution,
            BTreeMap::from([(2, 9), (3, 9)])
        );
    }

    #[test]
    fn doubled_code_distances_split_by_dimension_parity() {
        // equal-dimension pairs come from spreads (or their duals), so they sit
        // at distance 4 exactly; mixed pairs have odd distance, and without
        // conflicts that leaves 3 (meet in a point) or 5 (complementary)
        let dc = code_of(("S1p", "S2"));
        let members = dc.code.members();
        let mut seen = BTreeSet::new();
        for (i, a) in members.iter().enumerate() {
            for b in &members[i + 1..] {
                let d = a.distance(b);
                seen.insert(d);
                if a.dim() == b.dim() {
                    assert_eq!(d, 4, "{} vs {}", a.gens_string(), b.gens_string());
                } else {
                    assert!(d == 3 || d == 5, "{} vs {}: d = {d}", a.gens_string(), b.gens_string());
                }
            }
        }
        assert_eq!(seen, BTreeSet::from([3, 4, 5]));
        let spectrum = distance_multiset(&dc.code);
        assert_eq!(*spectrum.first().unwrap(), 3);
    }

    #[test]
    fn no_line_plane_pair_sits_at_distance_two() {
        for pair in [("S1", "S2"), ("S1p", "S2"), ("mS1po", "S2o"), ("E1", "mS2o")] {
            let dc = code_of(pair);
            assert!(distance_multiset(&dc.code).iter().all(|d| *d != 2));
        }
    }

    #[test]
    fn dual_code_is_an_involution_and_swaps_the_halves() {
        let dc = code_of(("S1p", "S2"));
        let dual = dual_code(&dc.code);
        assert_eq!(dual_code(&dual), dc.code);
        assert_eq!(dual, code_of(("S2", "S1p")).code);
    }

    #[test]
    fn dual_union_is_doubling_with_the_roles_swapped() {
        let a = catalog::spread("S1p").unwrap();
        let b = catalog::spread("S2").unwrap();
        assert_eq!(dual_union(&a, &b).code, doubling(&b, &a).code);
    }

    #[test]
    fn duality_preserves_the_distance_multiset() {
        for pair in [("S1", "S2"), ("S1p", "S2"), ("E1", "S2o")] {
            let dc = code_of(pair);
            assert_eq!(
                distance_multiset(&dc.code),
                distance_multiset(&dual_code(&dc.code))
            );
        }
    }

    #[test]
    fn short_spreads_still_double_but_warn() {
        let s1 = catalog::spread("S1").unwrap();
        let s2 = catalog::spread("S2").unwrap();
        let short = PartialSpread::new(s1.lines()[..8].to_vec()).unwrap();
        let dc = doubling(&short, &s2);
        assert_eq!(dc.code.len(), 17);
        assert!(dc.warnings.iter().any(|w| w.contains("8 lines")));
    }

    #[test]
    fn spread_types_survive_certification() {
        let dc = code_of(("S1p", "S2"));
        let types = dc.certificate.spread_types.unwrap();
        assert_eq!(types.lines, crate::spread::PatternKind::IDelta);
        assert_eq!(types.duals, crate::spread::PatternKind::IDelta);
    }

    #[test]
    fn promote_variants_requires_a_balanced_optimal_code() {
        let dc = code_of(("S1", "S2"));
        assert!(matches!(
            promote_variants(&dc.code),
            Err(Error::NotDoubledOptimal(_))
        ));
    }

    #[test]
    fn promoted_variants_are_optimal_with_one_promoted_codeword() {
        let dc = code_of(("S1p", "S2"));
        let variants = promote_variants(&dc.code).unwrap();
        for v in &variants {
            let cert = is_optimal_53(v).unwrap();
            assert!(cert.optimal);
            let dims = cert.dimension_distribution;
            let point_kind = BTreeMap::from([(1, 1), (2, 8), (3, 9)]);
            let hyperplane_kind = BTreeMap::from([(2, 9), (3, 8), (4, 1)]);
            assert!(dims == point_kind || dims == hyperplane_kind);
        }
    }

    // The exhaustive count below was frozen from an independent set-based
    // search (31 points x 9 line slots, 31 hyperplanes x 9 plane slots).
    #[test]
    fn mev_admits_no_promoted_variant() {
        let dc = code_of(("S1p", "S2"));
        let variants = promote_variants(&dc.code).unwrap();
        assert_eq!(variants.len(), 0);

        // why: a replacement point must avoid every plane of the code, but
        // each of the 4 holes of the line spread lies in at least one dual
        // plane; dually, each of the 31 hyperplanes fully contains a line
        let lines = dc.code.members_of_dim(2);
        let planes = dc.code.members_of_dim(3);
        let covered: BTreeSet<Vector> =
            lines.iter().flat_map(|l| l.points()).collect();
        let holes: Vec<Vector> = Subspace::full(5)
            .points()
            .into_iter()
            .filter(|p| !covered.contains(p))
            .collect();
        assert_eq!(holes.len(), 4);
        for h in &holes {
            assert!(planes.iter().any(|p| p.contains(h)), "hole {h} avoids all planes");
        }
        for p in Subspace::full(5).points() {
            let hyperplane = Subspace::span(5, &[p]).dual();
            assert!(lines.iter().any(|l| l.is_subspace_of(&hyperplane)));
        }
    }
}
