//! Maximal partial line spreads of PG(4,2) and the optimal binary subspace
//! codes built from them.
//!
//! The crate covers the full workflow:
//!
//! * exact GF(2) subspace arithmetic with the tuple notation of the finite
//!   geometry literature ([`gf2`]);
//! * partial line spreads, their reguli, opposite-regulus surgery and the
//!   X / IDelta / E pattern classification ([`spread`]);
//! * subspace codes under the injection distance, the doubling construction
//!   that pairs a spread with the dual of another, conflict certificates and
//!   point/hyperplane promotion variants ([`code`]);
//! * minimal-change repair of almost-optimal codes by single-row edits inside
//!   a Schubert cell ([`repair`]);
//! * the rank-metric route: a Gabidulin codebook over GF(8), its lifting into
//!   PG(5,2), augmentation and point-hyperplane shortening down to an optimal
//!   (5, 18, 3) code ([`hkk`]);
//! * a catalog of reference spreads and codes with end-to-end verification
//!   and byte-stable certificates ([`catalog`]), plus a plain-text exchange
//!   format ([`format`]).
//!
//! The `examples/` directory walks through each capability; the `spreadcode`
//! binary exposes the same operations as subcommands.

pub mod catalog;
pub mod code;
pub mod error;
pub mod format;
pub mod gf2;
pub mod hkk;
pub mod repair;
pub mod spread;

pub use error::{Error, Result};
pub use gf2::{
    enumerate_subspaces, gaussian_binomial, line_from_points, LinearMap, SchubertSignature,
    Subspace, Vector,
};
pub use spread::{greedy_census, greedy_maximal, PartialSpread, PatternKind, PatternType, QuadricArray, Regulus};
pub use code::{
    conflicts, doubling, dual_code, dual_union, is_optimal_53, min_distance, promote_variants,
    Certificate, Conflict, DoubledCode, SpreadTypePair, SubspaceCode,
};
pub use repair::{
    cell_neighbors_one_row, minimal_change_repair, ChangeRecord, CodeSide, MemberDiagnostics,
    RepairOutcome, RepairResult,
};
pub use catalog::{catalog_get, trio_truth_table, verify_all, CatalogEntry, CertificateDocument};
pub use hkk::{certify_hkk, find_context, gabidulin_codebook, lift, shorten, HkkContext, HkkReport};
