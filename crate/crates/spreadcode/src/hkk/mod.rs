//! The rank-metric route to an optimal (5,3)₂ code: lift a 64-word Gabidulin
//! code of 3×3 matrices into planes of GF(2)⁶, adjoin two extra planes, then
//! shorten through a point-hyperplane pair down to GF(2)⁵ and certify what
//! comes out — an 18-word code whose line spread and dual spread are both of
//! pattern type X, with a regulus-free 8-line core and a moving line.

mod gf8;

pub use gf8::{gabidulin_codebook, Gf8, RankCodeword};

use crate::code::{is_optimal_53, Certificate, SubspaceCode};
use crate::error::{Error, Result};
use crate::gf2::{enumerate_subspaces, Subspace, Vector};
use crate::spread::{PartialSpread, PatternKind, PatternType};

/// Row space of [I | M] in GF(2)⁶: the graph of the matrix's linear map.
pub fn lift(m: &RankCodeword) -> Subspace {
    let rows = m.rows();
    let lifted: Vec<u16> = (0..3).map(|i| (1u16 << (5 - i)) | rows[i] as u16).collect();
    Subspace::from_rows_unchecked(6, lifted)
}

/// The plane spanned by the last three coordinates — disjoint from every
/// lifted codeword, and the pivot of the whole construction.
pub fn special_plane() -> Subspace {
    Subspace::from_rows_unchecked(6, vec![0b000100, 0b000010, 0b000001])
}

/// Everything the shortening step needs: the 64 lifted planes, the special
/// plane 𝒮, two extra planes A₁/A₂ keeping the minimum distance at 4, a
/// point P ∈ A₁ off 𝒮, and a hyperplane H ⊇ A₂ avoiding both P and 𝒮.
#[derive(Clone, Debug)]
pub struct HkkContext {
    pub lifted: Vec<Subspace>,
    pub special_plane: Subspace,
    pub extra_planes: (Subspace, Subspace),
    pub point: Vector,
    pub hyperplane: Subspace,
}

impl HkkContext {
    /// Rechecks every defining constraint.
    pub fn validate(&self) -> Result<()> {
        let complain = |msg: &str| Err(Error::CertificationFailed(msg.to_string()));
        let s = &self.special_plane;
        let (a1, a2) = &self.extra_planes;
        if self.lifted.len() != 64 {
            return complain("expected 64 lifted codewords");
        }
        for x in &self.lifted {
            if x.intersection_dim(s) != 0 {
                return complain("a lifted codeword meets the special plane");
            }
        }
        let mut family: Vec<&Subspace> = self.lifted.iter().collect();
        family.push(a1);
        family.push(a2);
        for (i, x) in family.iter().enumerate() {
            for y in &family[i + 1..] {
                if x.distance(y) < 4 {
                    return complain("two members sit at distance below 4");
                }
            }
        }
        for a in [a1, a2] {
            if a.intersection_dim(s) != 2 {
                return complain("an extra plane does not meet the special plane in a line");
            }
        }
        if !a1.contains(&self.point) || s.contains(&self.point) {
            return complain("the point must lie in the first extra plane but off the special plane");
        }
        if self.hyperplane.contains(&self.point)
            || !a2.is_subspace_of(&self.hyperplane)
            || s.is_subspace_of(&self.hyperplane)
        {
            return complain("the hyperplane must contain the second extra plane and avoid the point and the special plane");
        }
        Ok(())
    }
}

/// Deterministic search for a valid context: extra-plane pairs in enumeration
/// order, then points of A₁ off 𝒮, then hyperplanes. Fails loudly if the
/// stated constraints admit no solution.
pub fn find_context() -> Result<HkkContext> {
    let lifted: Vec<Subspace> = gabidulin_codebook().iter().map(lift).collect();
    let s = special_plane();
    let planes = enumerate_subspaces(6, 3).expect("planes of GF(2)^6");
    let candidates: Vec<&Subspace> = planes
        .iter()
        .filter(|a| {
            a.intersection_dim(&s) == 2 && lifted.iter().all(|x| a.intersection_dim(x) <= 1)
        })
        .collect();
    let hyperplanes = enumerate_subspaces(6, 5).expect("hyperplanes of GF(2)^6");
    for a1 in &candidates {
        for a2 in &candidates {
            if a1 == a2 || a1.intersection_dim(a2) > 1 {
                continue;
            }
            for p in a1.points() {
                if s.contains(&p) {
                    continue;
                }
                for h in &hyperplanes {
                    if h.contains(&p) || !a2.is_subspace_of(h) || s.is_subspace_of(h) {
                        continue;
                    }
                    let ctx = HkkContext {
                        lifted,
                        special_plane: s,
                        extra_planes: ((*a1).clone(), (*a2).clone()),
                        point: p,
                        hyperplane: h.clone(),
                    };
                    ctx.validate()?;
                    return Ok(ctx);
                }
            }
        }
    }
    Err(Error::ContextSearchExhausted)
}

/// Rewrites a subspace of the hyperplane in the coordinates of the
/// hyperplane's own canonical basis, landing in GF(2)⁵.
fn into_hyperplane_coordinates(h: &Subspace, s: &Subspace) -> Subspace {
    assert!(s.is_subspace_of(h), "subspace must lie inside the hyperplane");
    let pivot_bits: Vec<u16> =
        h.rows().iter().map(|r| 1u16 << (15 - r.leading_zeros() as u16)).collect();
    let mapped: Vec<Vector> = s
        .basis()
        .iter()
        .map(|v| {
            let mut out = 0u16;
            for (i, bit) in pivot_bits.iter().enumerate() {
                if v.bits() & bit != 0 {
                    out |= 1 << (4 - i);
                }
            }
            Vector::new(5, out)
        })
        .collect();
    Subspace::span(5, &mapped)
}

/// The shortened code in GF(2)⁵, with its four construction layers kept
/// apart: 8 planes (lifted codewords inside H), 8 lines (codewords through P,
/// cut by H), the line A₁∩H, and the plane A₂.
#[derive(Clone, Debug)]
pub struct ShortenedCode {
    pub code: SubspaceCode,
    pub lines_from_lifted: Vec<Subspace>,
    pub planes_from_lifted: Vec<Subspace>,
    pub line_from_extra: Subspace,
    pub plane_from_extra: Subspace,
}

/// Point-hyperplane shortening of the augmented lifted code.
pub fn shorten(ctx: &HkkContext) -> Result<ShortenedCode> {
    let h = &ctx.hyperplane;
    let inside: Vec<&Subspace> = ctx.lifted.iter().filter(|x| x.is_subspace_of(h)).collect();
    let through: Vec<&Subspace> = ctx.lifted.iter().filter(|y| y.contains(&ctx.point)).collect();
    if inside.len() != 8 || through.len() != 8 {
        return Err(Error::ShortenCountMismatch {
            got_planes: inside.len(),
            got_lines: through.len(),
            details: "expected 8 lifted codewords inside the hyperplane and 8 through the point"
                .to_string(),
        });
    }
    let lines_from_lifted: Vec<Subspace> = through
        .iter()
        .map(|y| {
            let cut = y.intersection(h);
            assert_eq!(cut.dim(), 2, "a codeword through the point cuts H in a line");
            into_hyperplane_coordinates(h, &cut)
        })
        .collect();
    let planes_from_lifted: Vec<Subspace> =
        inside.iter().map(|x| into_hyperplane_coordinates(h, x)).collect();
    let line_from_extra = {
        let cut = ctx.extra_planes.0.intersection(h);
        assert_eq!(cut.dim(), 2, "the first extra plane cuts H in a line");
        into_hyperplane_coordinates(h, &cut)
    };
    let plane_from_extra = into_hyperplane_coordinates(h, &ctx.extra_planes.1);
    let mut members = lines_from_lifted.clone();
    members.push(line_from_extra.clone());
    members.extend(planes_from_lifted.iter().cloned());
    members.push(plane_from_extra.clone());
    let code = SubspaceCode::new(members)?;
    Ok(ShortenedCode {
        code,
        lines_from_lifted,
        planes_from_lifted,
        line_from_extra,
        plane_from_extra,
    })
}

/// The moving-line anatomy of a shortened spread: the plane Y₀ spanned by
/// the four holes, the one spread line X₀ inside it, and the holes
/// themselves (exactly Y₀ minus X₀).
#[derive(Clone, Debug)]
pub struct MovingLineReport {
    pub plane: Subspace,
    pub moving_line: Subspace,
    pub holes: Vec<Vector>,
}

/// Full certification of a shortened code.
#[derive(Clone, Debug)]
pub struct HkkReport {
    pub code: SubspaceCode,
    pub certificate: Certificate,
    pub line_type: PatternKind,
    pub dual_type: PatternKind,
    pub moving_line: MovingLineReport,
    pub sub_spread_regulus_count: usize,
}

fn fail(msg: String) -> Error {
    Error::CertificationFailed(msg)
}

/// Certifies that a code has the full shortened-construction shape: an
/// optimal (5, 18, 3) code of 9 lines + 9 planes, both spreads of type X, a
/// regulus-free 8-line core whose lines partition the space together with
/// the hole plane Y₀, and a moving line replaceable by any line of Y₀.
pub fn certify_hkk(code: &SubspaceCode) -> Result<HkkReport> {
    let certificate = is_optimal_53(code)?;
    if !certificate.optimal || certificate.min_distance != 3 {
        return Err(fail(format!(
            "expected an optimal (5, 18, 3) code, certified: {}",
            certificate.summary()
        )));
    }
    let lines: Vec<Subspace> = code.members().iter().filter(|m| m.dim() == 2).cloned().collect();
    let planes: Vec<Subspace> = code.members().iter().filter(|m| m.dim() == 3).cloned().collect();
    if lines.len() != 9 || planes.len() != 9 {
        return Err(fail(format!(
            "expected 9 lines and 9 planes, found {} and {}",
            lines.len(),
            planes.len()
        )));
    }
    let spread = PartialSpread::new(lines).expect("distance 3 keeps the lines disjoint");
    let dual_spread = PartialSpread::new(planes.iter().map(|p| p.dual()).collect())
        .expect("distance 3 keeps the dual lines disjoint");
    let pattern = spread.classify_pattern()?;
    let dual_pattern = dual_spread.classify_pattern()?;
    let (line_type, dual_type) = (pattern.kind(), dual_pattern.kind());
    if line_type != PatternKind::X || dual_type != PatternKind::X {
        return Err(fail(format!(
            "expected spread types (X, X), classified ({line_type}, {dual_type})"
        )));
    }
    let holes = spread.holes();
    if holes.len() != 4 {
        return Err(fail(format!("expected 4 holes, found {}", holes.len())));
    }
    let y0 = Subspace::span(5, &holes);
    if y0.dim() != 3 {
        return Err(fail(format!("holes span dimension {}, not a plane", y0.dim())));
    }
    let inside: Vec<&Subspace> =
        spread.lines().iter().filter(|l| l.is_subspace_of(&y0)).collect();
    let x0 = match inside.as_slice() {
        [only] => (*only).clone(),
        _ => {
            return Err(fail(format!(
                "expected exactly one spread line inside the hole plane, found {}",
                inside.len()
            )))
        }
    };
    match &pattern {
        PatternType::X { common_line } if *common_line == x0 => {}
        _ => return Err(fail("the moving line is not the common line of the four reguli".into())),
    }
    let core: Vec<Subspace> =
        spread.lines().iter().filter(|l| **l != x0).cloned().collect();
    let core = PartialSpread::new(core).expect("sub-spread of a spread");
    let sub_spread_regulus_count = core.reguli().len();
    if sub_spread_regulus_count != 0 {
        return Err(fail(format!(
            "the 8-line core has {sub_spread_regulus_count} reguli, expected none"
        )));
    }
    let mut covered = core.covered_points();
    covered.extend(y0.points());
    if covered.len() != 31 {
        return Err(fail("the core and the hole plane do not partition the point set".into()));
    }
    for line in lines_of_plane(&y0) {
        let mut replaced = core.lines().to_vec();
        replaced.push(line.clone());
        let candidate = PartialSpread::new(replaced)
            .map_err(|_| fail(format!("core + {} is not a spread", line.points_string())))?;
        if !candidate.is_maximal() {
            return Err(fail(format!(
                "core + {} is not maximal; the moving property fails",
                line.points_string()
            )));
        }
    }
    Ok(HkkReport {
        code: code.clone(),
        certificate,
        line_type,
        dual_type,
        moving_line: MovingLineReport { plane: y0, moving_line: x0, holes },
        sub_spread_regulus_count,
    })
}

/// All 7 lines of a plane.
fn lines_of_plane(p: &Subspace) -> Vec<Subspace> {
    let pts = p.points();
    let mut out: Vec<Subspace> = Vec::new();
    for (i, a) in pts.iter().enumerate() {
        for b in &pts[i + 1..] {
            let l = Subspace::span(p.ambient(), &[*a, *b]);
            if !out.contains(&l) {
                out.push(l);
            }
        }
    }
    out
}

/// The whole pipeline: find a context, shorten it, certify the result.
pub fn build() -> Result<HkkReport> {
    let ctx = find_context()?;
    let shortened = shorten(&ctx)?;
    certify_hkk(&shortened.code)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::OnceLock;

    fn context() -> &'static HkkContext {
        static CONTEXT: OnceLock<HkkContext> = OnceLock::new();
        CONTEXT.get_or_init(|| find_context().expect("a valid context exists"))
    }

    fn shortened() -> &'static ShortenedCode {
        static SHORTENED: OnceLock<ShortenedCode> = OnceLock::new();
        SHORTENED.get_or_init(|| shorten(context()).expect("shortening succeeds"))
    }

    #[test]
    fn the_zero_matrix_lifts_to_the_identity_block() {
        let book = gabidulin_codebook();
        let expected = Subspace::span(
            6,
            &[Vector::basis(6, 1), Vector::basis(6, 2), Vector::basis(6, 3)],
        );
        assert_eq!(lift(&book[0]), expected);
    }

    #[test]
    fn lifts_are_planes_disjoint_from_the_special_plane() {
        let s = special_plane();
        for m in gabidulin_codebook() {
            let x = lift(&m);
            assert_eq!(x.dim(), 3);
            assert_eq!(x.intersection_dim(&s), 0);
        }
    }

    #[test]
    fn lifting_doubles_the_rank_distance() {
        let book = gabidulin_codebook();
        let lifts: Vec<Subspace> = book.iter().map(lift).collect();
        let mut min = usize::MAX;
        for i in 0..book.len() {
            for j in (i + 1)..book.len() {
                let d = lifts[i].distance(&lifts[j]);
                assert_eq!(d, 2 * (book[i] + book[j]).rank());
                min = min.min(d);
            }
        }
        assert_eq!(min, 4);
    }

    #[test]
    fn the_found_context_satisfies_every_constraint() {
        let ctx = context();
        ctx.validate().unwrap();
        let (a1, a2) = &ctx.extra_planes;
        assert_eq!(a1.intersection_dim(&ctx.special_plane), 2);
        assert_eq!(a2.intersection_dim(&ctx.special_plane), 2);
        assert!(a1.contains(&ctx.point));
        assert!(!ctx.hyperplane.contains(&ctx.point));
        assert!(a2.is_subspace_of(&ctx.hyperplane));
        assert!(!ctx.special_plane.is_subspace_of(&ctx.hyperplane));
    }

    #[test]
    fn shortening_yields_the_advertised_layer_sizes() {
        let sc = shortened();
        assert_eq!(sc.lines_from_lifted.len(), 8);
        assert_eq!(sc.planes_from_lifted.len(), 8);
        assert_eq!(sc.line_from_extra.dim(), 2);
        assert_eq!(sc.plane_from_extra.dim(), 3);
        assert_eq!(sc.code.len(), 18);
        assert_eq!(sc.code.ambient(), 5);
    }

    #[test]
    fn the_shortened_code_certifies_with_type_x_on_both_sides() {
        let sc = shortened();
        let report = certify_hkk(&sc.code).unwrap();
        assert!(report.certificate.optimal);
        assert_eq!(report.certificate.min_distance, 3);
        assert_eq!(report.line_type, PatternKind::X);
        assert_eq!(report.dual_type, PatternKind::X);
        assert_eq!(report.sub_spread_regulus_count, 0);
        assert_eq!(report.moving_line.holes.len(), 4);
        assert_eq!(report.moving_line.moving_line, sc.line_from_extra);
        assert!(report.moving_line.moving_line.is_subspace_of(&report.moving_line.plane));
    }

    #[test]
    fn certification_rejects_codes_without_the_shortened_shape() {
        let mev = crate::catalog::code("MEV").unwrap();
        assert!(matches!(certify_hkk(&mev), Err(Error::CertificationFailed(_))));
    }

    #[test]
    fn a_plane_has_seven_lines() {
        let p = Subspace::span(
            5,
            &[Vector::basis(5, 1), Vector::basis(5, 2), Vector::basis(5, 3)],
        );
        assert_eq!(lines_of_plane(&p).len(), 7);
    }
}
