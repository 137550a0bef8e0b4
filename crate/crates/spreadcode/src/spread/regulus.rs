use crate::error::{Error, Result};
use crate::gf2::{enumerate_subspaces, Subspace, Vector};

/// Three pairwise skew lines spanning a solid (4-subspace). The 9 covered
/// points form a hyperbolic quadric inside that solid, and the three
/// transversal lines of the quadric form the *opposite* regulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Regulus {
    lines: [Subspace; 3],
    solid: Subspace,
    /// Positions in the owning spread, when the regulus came from one.
    indices: Option<[usize; 3]>,
}

impl Regulus {
    /// Validate three explicit lines: pairwise skew, joint span of dimension 4.
    pub fn from_lines(lines: [Subspace; 3]) -> Result<Regulus> {
        let fmt = || lines.iter().map(|l| l.points_string()).collect::<Vec<_>>();
        for l in &lines {
            if l.dim() != 2 {
                return Err(Error::NotARegulus {
                    lines: fmt(),
                    reason: format!("{} has dimension {}", l.points_string(), l.dim()),
                });
            }
        }
        for i in 0..3 {
            for j in i + 1..3 {
                if lines[i].intersection_dim(&lines[j]) != 0 {
                    return Err(Error::NotARegulus {
                        lines: fmt(),
                        reason: format!("lines {i} and {j} intersect"),
                    });
                }
            }
        }
        let solid = lines[0].sum(&lines[1]).sum(&lines[2]);
        if solid.dim() != 4 {
            return Err(Error::NotARegulus {
                lines: fmt(),
                reason: format!("lines span dimension {}, not a solid", solid.dim()),
            });
        }
        Ok(Regulus { lines, solid, indices: None })
    }

    pub(crate) fn in_spread(lines: [Subspace; 3], solid: Subspace, indices: [usize; 3]) -> Regulus {
        Regulus { lines, solid, indices: Some(indices) }
    }

    pub fn lines(&self) -> &[Subspace; 3] {
        &self.lines
    }

    pub fn solid(&self) -> &Subspace {
        &self.solid
    }

    /// Positions of the member lines in the spread this regulus was listed
    /// from, if any.
    pub fn indices(&self) -> Option<[usize; 3]> {
        self.indices
    }

    pub fn contains_line(&self, l: &Subspace) -> bool {
        self.lines.iter().any(|m| m == l)
    }

    /// The 3x3 point array of the regulus quadric: row i lists the points of
    /// member line i, column j the points of transversal line j, so each cell
    /// is the intersection of a member with a transversal.
    ///
    /// Rows keep the member order; the first row is sorted shortlex by tuple
    /// token and fixes the column order, which makes the array deterministic.
    pub fn quadric_array(&self) -> QuadricArray {
        let transversals = self.transversals();
        let mut row1 = self.lines[0].points();
        row1.sort_by_key(|p| p.shortlex_key());
        let columns: Vec<&Subspace> = row1
            .iter()
            .map(|p| {
                transversals
                    .iter()
                    .find(|t| t.contains(p))
                    .expect("the opposite regulus covers every quadric point")
            })
            .collect();
        let mut grid = [[Vector::zero(5); 3]; 3];
        for (i, member) in self.lines.iter().enumerate() {
            for (j, t) in columns.iter().enumerate() {
                let cell: Vec<Vector> =
                    member.points().into_iter().filter(|p| t.contains(p)).collect();
                assert_eq!(cell.len(), 1, "member and transversal meet in one point");
                grid[i][j] = cell[0];
            }
        }
        QuadricArray {
            grid,
            transversals: [columns[0].clone(), columns[1].clone(), columns[2].clone()],
        }
    }

    /// The three transversal lines: brute force over all 155 lines, keeping
    /// those inside the solid that meet each member in exactly one point.
    fn transversals(&self) -> Vec<Subspace> {
        let found: Vec<Subspace> = enumerate_subspaces(5, 2)
            .expect("lines of PG(4,2)")
            .into_iter()
            .filter(|t| {
                t.is_subspace_of(&self.solid)
                    && self.lines.iter().all(|m| t.intersection_dim(m) == 1)
            })
            .collect();
        assert_eq!(found.len(), 3, "a regulus of PG(4,2) has exactly 3 transversals");
        found
    }

    /// The opposite regulus, lines in quadric-array column order. Applying
    /// this twice returns the original line set.
    pub fn opposite(&self) -> Regulus {
        let array = self.quadric_array();
        Regulus {
            lines: array.transversals.clone(),
            solid: self.solid.clone(),
            indices: None,
        }
    }
}

/// Deterministic 3x3 presentation of a regulus quadric; see
/// [`Regulus::quadric_array`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricArray {
    grid: [[Vector; 3]; 3],
    transversals: [Subspace; 3],
}

impl QuadricArray {
    pub fn grid(&self) -> &[[Vector; 3]; 3] {
        &self.grid
    }

    pub fn row(&self, i: usize) -> [Vector; 3] {
        self.grid[i]
    }

    /// Transversal lines in column order.
    pub fn transversals(&self) -> &[Subspace; 3] {
        &self.transversals
    }

    pub fn render(&self) -> String {
        self.grid
            .iter()
            .map(|row| format!("({})", row.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::gf2::Vector;

    fn v5(t: &str) -> Vector {
        Vector::parse_tuple(t, 5).unwrap()
    }

    fn tokens(row: [Vector; 3]) -> Vec<String> {
        row.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn regulus_rejects_full_span() {
        let s1 = catalog::spread("S1").unwrap();
        // l1, l2, l3 of S1 span all of GF(2)^5
        let r = Regulus::from_lines([
            s1.lines()[0].clone(),
            s1.lines()[1].clone(),
            s1.lines()[2].clone(),
        ]);
        assert!(matches!(r, Err(Error::NotARegulus { .. })));
    }

    #[test]
    fn quadric_array_of_s2_r4() {
        let s2 = catalog::spread("S2").unwrap();
        let reguli = s2.reguli();
        let r4 = reguli
            .iter()
            .find(|r| r.indices() == Some([6, 7, 8]))
            .expect("the last three lines of S2 form a regulus");
        let arr = r4.quadric_array();
        assert_eq!(tokens(arr.row(0)), ["2", "5u", "134"]);
        assert_eq!(tokens(arr.row(1)), ["4", "234", "23"]);
        assert_eq!(tokens(arr.row(2)), ["24", "1", "124"]);
    }

    #[test]
    fn quadric_array_of_s1p_r2() {
        let s1p = catalog::spread("S1p").unwrap();
        let reguli = s1p.reguli();
        let r2 = reguli
            .iter()
            .find(|r| r.indices() == Some([1, 3, 5]))
            .expect("l2, l4, l6 of S1' form a regulus");
        let arr = r2.quadric_array();
        assert_eq!(tokens(arr.row(0)), ["13", "25", "4u"]);
        assert_eq!(tokens(arr.row(1)), ["345", "245", "23"]);
        assert_eq!(tokens(arr.row(2)), ["145", "4", "15"]);
    }

    #[test]
    fn opposite_of_s2_r4_is_the_printed_replacement() {
        let s2 = catalog::spread("S2").unwrap();
        let r4 = s2.reguli().into_iter().find(|r| r.indices() == Some([6, 7, 8])).unwrap();
        let opp = r4.opposite();
        let expected = [
            Subspace::span(5, &[v5("2"), v5("4")]),
            Subspace::span(5, &[v5("5u"), v5("234")]),
            Subspace::span(5, &[v5("134"), v5("23")]),
        ];
        assert_eq!(opp.lines(), &expected);
    }

    #[test]
    fn opposite_is_an_involution_on_line_sets() {
        for name in ["S1", "S2", "S1p", "S2o", "S1po", "mS1po", "E1", "mS2o"] {
            let s = catalog::spread(name).unwrap();
            for r in s.reguli() {
                let twice = r.opposite().opposite();
                let mut a: Vec<_> = r.lines().to_vec();
                let mut b: Vec<_> = twice.lines().to_vec();
                a.sort();
                b.sort();
                assert_eq!(a, b, "{name}");
                // both reguli cover the same 9 quadric points
                let pts = |reg: &Regulus| {
                    let mut p: Vec<_> = reg.lines().iter().flat_map(|l| l.points()).collect();
                    p.sort();
                    p
                };
                assert_eq!(pts(&r), pts(&r.opposite()), "{name}");
            }
        }
    }

    #[test]
    fn replace_regulus_keeps_covered_points() {
        let s2 = catalog::spread("S2").unwrap();
        let r4 = s2.reguli().into_iter().find(|r| r.indices() == Some([6, 7, 8])).unwrap();
        let replaced = s2.replace_regulus(&r4).unwrap();
        assert_eq!(replaced.covered_points(), s2.covered_points());
        assert_eq!(replaced.holes(), s2.holes());
        assert!(replaced.is_maximal());
    }

    #[test]
    fn replace_regulus_matches_catalog_s2o_exactly() {
        let s2 = catalog::spread("S2").unwrap();
        let s2o = catalog::spread("S2o").unwrap();
        let r4 = s2.reguli().into_iter().find(|r| r.indices() == Some([6, 7, 8])).unwrap();
        assert_eq!(s2.replace_regulus(&r4).unwrap(), s2o, "including line order");
    }

    #[test]
    fn replace_regulus_matches_catalog_s1po_exactly() {
        let s1p = catalog::spread("S1p").unwrap();
        let s1po = catalog::spread("S1po").unwrap();
        let r2 = s1p.reguli().into_iter().find(|r| r.indices() == Some([1, 3, 5])).unwrap();
        assert_eq!(s1p.replace_regulus(&r2).unwrap(), s1po);
    }

    #[test]
    fn replace_regulus_on_ms1po_gives_e1_line_set() {
        let ms1po = catalog::spread("mS1po").unwrap();
        let e1 = catalog::spread("E1").unwrap();
        let r = ms1po.reguli().into_iter().find(|r| r.indices() == Some([1, 3, 8])).unwrap();
        let replaced = ms1po.replace_regulus(&r).unwrap();
        assert_eq!(replaced.line_set(), e1.line_set());
    }

    #[test]
    fn foreign_regulus_is_rejected() {
        let s1 = catalog::spread("S1").unwrap();
        let s2 = catalog::spread("S2").unwrap();
        let r4 = s2.reguli().into_iter().find(|r| r.indices() == Some([6, 7, 8])).unwrap();
        // l7..l9 of S2 are not all members of S1
        assert!(matches!(
            s1.replace_regulus(&r4),
            Err(Error::RegulusNotInSpread(_))
        ));
    }
}
