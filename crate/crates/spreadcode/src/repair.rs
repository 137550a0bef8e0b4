//! The minimal change strategy: given a doubled code with a single conflict,
//! search one-row modifications of the canonical bases — keeping each
//! codeword's Schubert cell — for replacements that make the code optimal,
//! cascading once when a fix trades the original conflict for one new
//! conflict in the same half of the code.

use std::fmt;

use crate::code::{conflicts, is_optimal_53, Certificate, SubspaceCode};
use crate::error::{Error, Result};
use crate::gf2::{Subspace, Vector};

/// Which half of a doubled code a changed codeword belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CodeSide {
    Lines,
    Planes,
}

impl fmt::Display for CodeSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeSide::Lines => write!(f, "line side"),
            CodeSide::Planes => write!(f, "plane side"),
        }
    }
}

fn side_of(s: &Subspace) -> Option<CodeSide> {
    match s.dim() {
        2 => Some(CodeSide::Lines),
        3 => Some(CodeSide::Planes),
        _ => None,
    }
}

/// One applied modification: codeword `old` became `new` by rewriting row
/// `row_index` of its canonical basis from `old_row` to `new_row`. The pivot
/// set is unchanged, so both rows share their leading coordinate.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ChangeRecord {
    pub side: CodeSide,
    pub old: Subspace,
    pub new: Subspace,
    pub row_index: usize,
    pub old_row: Vector,
    pub new_row: Vector,
}

impl fmt::Display for ChangeRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} -> {} (row {}: {:?} -> {:?})",
            self.side,
            self.old.gens_string(),
            self.new.gens_string(),
            self.row_index + 1,
            self.old_row,
            self.new_row
        )
    }
}

/// A repaired code together with how it was reached (one or two changes) and
/// its certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepairResult {
    pub code: SubspaceCode,
    pub changes: Vec<ChangeRecord>,
    pub certificate: Certificate,
}

/// What the search tried for one member of the conflicting pair. A member
/// with both counts zero is a recorded dead end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MemberDiagnostics {
    pub member: Subspace,
    pub side: CodeSide,
    pub neighbors_tried: usize,
    pub direct_repairs: usize,
    pub cascade_repairs: usize,
}

/// All distinct repairs, deduplicated by resulting code and deterministically
/// ordered by (change count, change records), plus per-member diagnostics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepairOutcome {
    pub repairs: Vec<RepairResult>,
    pub diagnostics: Vec<MemberDiagnostics>,
}

/// All subspaces whose canonical basis differs from `u`'s in exactly one row
/// and shares its pivot set: per row, every free-coordinate pattern other
/// than the current one. Rows are scanned top to bottom, patterns in
/// increasing binary order.
pub fn cell_neighbors_one_row(u: &Subspace) -> Vec<Subspace> {
    neighbors_with_records(u).into_iter().map(|(_, _, _, s)| s).collect()
}

/// (row index, old row bits, new row bits, modified subspace) per neighbor.
fn neighbors_with_records(u: &Subspace) -> Vec<(usize, u16, u16, Subspace)> {
    let n = u.ambient();
    let rows = u.rows().to_vec();
    let pivot_mask: u16 = rows.iter().map(|r| highest_bit(*r)).fold(0, |a, b| a | b);
    let mut out = Vec::new();
    for (i, &row) in rows.iter().enumerate() {
        let pivot = highest_bit(row);
        // columns strictly right of this row's pivot that are nobody's pivot
        let free_mask = (pivot - 1) & !pivot_mask & ((1u16 << n) - 1);
        let free_bits: Vec<u16> =
            (0..n).map(|j| 1u16 << j).filter(|b| free_mask & b != 0).collect();
        for pattern in 0..(1u32 << free_bits.len()) {
            let mut candidate = pivot;
            for (j, bit) in free_bits.iter().enumerate() {
                if pattern & (1 << j) != 0 {
                    candidate |= bit;
                }
            }
            if candidate == row {
                continue;
            }
            let mut new_rows = rows.clone();
            new_rows[i] = candidate;
            out.push((i, row, candidate, Subspace::from_rows_unchecked(n, new_rows)));
        }
    }
    out
}

fn highest_bit(row: u16) -> u16 {
    debug_assert!(row != 0, "canonical rows are nonzero");
    1u16 << (15 - row.leading_zeros() as u16)
}

fn record_for(s: &Subspace, side: CodeSide, entry: &(usize, u16, u16, Subspace)) -> ChangeRecord {
    let (row_index, old_row, new_row, new) = entry;
    ChangeRecord {
        side,
        old: s.clone(),
        new: new.clone(),
        row_index: *row_index,
        old_row: Vector::new(s.ambient(), *old_row),
        new_row: Vector::new(s.ambient(), *new_row),
    }
}

/// Searches for minimal repairs of a code with exactly one conflict at
/// threshold 3. Each member of the conflicting pair is rewritten one
/// canonical row at a time; a rewrite that leaves the code conflict-free is
/// a direct repair, and a rewrite that trades the conflict for exactly one
/// new conflict within the changed member's half earns one follow-up rewrite
/// on either member of the new conflict.
pub fn minimal_change_repair(c: &SubspaceCode) -> Result<RepairOutcome> {
    let found = conflicts(c, 3);
    let pair = match found.len() {
        0 => return Err(Error::NoConflicts),
        1 => &found[0],
        n => return Err(Error::MultipleConflicts(n)),
    };
    let mut repairs: Vec<RepairResult> = Vec::new();
    let mut diagnostics = Vec::new();
    for member in [&pair.a, &pair.b] {
        let side = side_of(member).ok_or(Error::UnsupportedRepairTarget(member.dim()))?;
        let mut diag = MemberDiagnostics {
            member: member.clone(),
            side,
            neighbors_tried: 0,
            direct_repairs: 0,
            cascade_repairs: 0,
        };
        for entry in neighbors_with_records(member) {
            diag.neighbors_tried += 1;
            let replacement = &entry.3;
            if c.contains(replacement) {
                continue;
            }
            let candidate = c.with_replacement(member, replacement.clone())?;
            let first_change = record_for(member, side, &entry);
            let remaining = conflicts(&candidate, 3);
            match remaining.len() {
                0 => {
                    let certificate = is_optimal_53(&candidate)?;
                    if certificate.optimal {
                        diag.direct_repairs += 1;
                        repairs.push(RepairResult {
                            code: candidate,
                            changes: vec![first_change],
                            certificate,
                        });
                    }
                }
                1 => {
                    let new_pair = &remaining[0];
                    if (new_pair.a == pair.a && new_pair.b == pair.b)
                        || side_of(&new_pair.a) != Some(side)
                        || side_of(&new_pair.b) != Some(side)
                    {
                        continue;
                    }
                    for second in [&new_pair.a, &new_pair.b] {
                        for entry2 in neighbors_with_records(second) {
                            let replacement2 = &entry2.3;
                            if candidate.contains(replacement2) {
                                continue;
                            }
                            let fixed = candidate.with_replacement(second, replacement2.clone())?;
                            if !conflicts(&fixed, 3).is_empty() {
                                continue;
                            }
                            let certificate = is_optimal_53(&fixed)?;
                            if certificate.optimal {
                                diag.cascade_repairs += 1;
                                repairs.push(RepairResult {
                                    code: fixed,
                                    changes: vec![
                                        first_change.clone(),
                                        record_for(second, side, &entry2),
                                    ],
                                    certificate,
                                });
                            }
                        }
                    }
                }
                _ => {}
            }
        }
        diagnostics.push(diag);
    }
    repairs.sort_by(|a, b| (a.changes.len(), &a.changes).cmp(&(b.changes.len(), &b.changes)));
    let mut deduped: Vec<RepairResult> = Vec::new();
    for r in repairs {
        if deduped.iter().all(|kept| kept.code != r.code) {
            deduped.push(r);
        }
    }
    Ok(RepairOutcome { repairs: deduped, diagnostics })
}
