use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::gf2::Vector;

/// A subspace of GF(2)^n held in canonical form: the rows of its reduced
/// row-echelon basis, ordered by ascending pivot coordinate. Equality, hashing
/// and ordering all act on that form, so two spans of the same subspace
/// compare equal no matter how they were generated.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    ambient: u8,
    rows: Vec<u16>,
}

/// The set of pivot coordinates of a subspace's canonical basis. Subspaces
/// with equal signatures form one Schubert cell of the Grassmannian.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SchubertSignature(Vec<usize>);

impl SchubertSignature {
    pub fn pivots(&self) -> &[usize] {
        &self.0
    }
}

fn msb_bit(row: u16) -> u16 {
    debug_assert!(row != 0);
    1 << (15 - row.leading_zeros())
}

/// Reduce `v` against RREF rows (each row's leading bit is cleared from `v`).
fn reduce(rows: &[u16], mut v: u16) -> u16 {
    for &r in rows {
        if v & msb_bit(r) != 0 {
            v ^= r;
        }
    }
    v
}

/// Incremental RREF: returns rows sorted by descending value, which for a
/// fixed width equals ascending pivot coordinate.
fn rref(gens: impl IntoIterator<Item = u16>) -> Vec<u16> {
    let mut rows: Vec<u16> = Vec::new();
    for g in gens {
        let v = reduce(&rows, g);
        if v != 0 {
            let pb = msb_bit(v);
            for r in rows.iter_mut() {
                if *r & pb != 0 {
                    *r ^= v;
                }
            }
            rows.push(v);
        }
    }
    rows.sort_unstable_by(|a, b| b.cmp(a));
    rows
}

impl Subspace {
    /// Canonicalize the span of `gens`. All generators must share one ambient
    /// dimension (zero generators are allowed and ignored).
    pub fn span(ambient: u8, gens: &[Vector]) -> Subspace {
        for g in gens {
            assert_eq!(g.ambient(), ambient, "mixed ambient dimensions");
        }
        Subspace { ambient, rows: rref(gens.iter().map(|g| g.bits())) }
    }

    pub(crate) fn from_rows_unchecked(ambient: u8, rows: Vec<u16>) -> Subspace {
        debug_assert_eq!(rows, rref(rows.iter().copied()), "rows not in canonical form");
        Subspace { ambient, rows }
    }

    pub fn zero(ambient: u8) -> Subspace {
        Subspace { ambient, rows: Vec::new() }
    }

    pub fn full(ambient: u8) -> Subspace {
        Subspace::span(ambient, &(1..=ambient as usize).map(|i| Vector::basis(ambient, i)).collect::<Vec<_>>())
    }

    pub fn ambient(&self) -> u8 {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Canonical basis rows, ascending pivot order.
    pub fn basis(&self) -> Vec<Vector> {
        self.rows.iter().map(|&r| Vector::new(self.ambient, r)).collect()
    }

    pub(crate) fn rows(&self) -> &[u16] {
        &self.rows
    }

    /// All 2^dim − 1 nonzero points.
    pub fn points(&self) -> Vec<Vector> {
        let k = self.rows.len();
        (1u32..1 << k)
            .map(|mask| {
                let bits = (0..k).filter(|i| mask >> i & 1 == 1).fold(0, |acc, i| acc ^ self.rows[i]);
                Vector::new(self.ambient, bits)
            })
            .collect()
    }

    pub fn contains(&self, v: &Vector) -> bool {
        assert_eq!(v.ambient(), self.ambient, "mixed ambient dimensions");
        reduce(&self.rows, v.bits()) == 0
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient, "mixed ambient dimensions");
        self.rows.iter().all(|&r| reduce(&other.rows, r) == 0)
    }

    /// Span of the union.
    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "mixed ambient dimensions");
        Subspace {
            ambient: self.ambient,
            rows: rref(self.rows.iter().chain(other.rows.iter()).copied()),
        }
    }

    /// dim(U ∩ V), via dim U + dim V − dim(U + V).
    pub fn intersection_dim(&self, other: &Subspace) -> usize {
        self.dim() + other.dim() - self.sum(other).dim()
    }

    /// U ∩ V, computed as the dual of dual(U) + dual(V).
    pub fn intersection(&self, other: &Subspace) -> Subspace {
        self.dual().sum(&other.dual()).dual()
    }

    /// The subspace distance d(U, V) = dim U + dim V − 2 dim(U ∩ V).
    pub fn distance(&self, other: &Subspace) -> usize {
        self.dim() + other.dim() - 2 * self.intersection_dim(other)
    }

    /// Orthogonal complement under the standard dot product.
    pub fn dual(&self) -> Subspace {
        let n = self.ambient as usize;
        let pivots: Vec<usize> = self.rows.iter().map(|&r| n - (15 - r.leading_zeros() as usize)).collect();
        let mut gens = Vec::with_capacity(n - self.rows.len());
        for f in 1..=n {
            if pivots.contains(&f) {
                continue;
            }
            let fbit = 1u16 << (n - f);
            let mut bits = fbit;
            for (i, &p) in pivots.iter().enumerate() {
                if self.rows[i] & fbit != 0 {
                    bits |= 1 << (n - p);
                }
            }
            gens.push(bits);
        }
        Subspace { ambient: self.ambient, rows: rref(gens) }
    }

    pub fn schubert_signature(&self) -> SchubertSignature {
        let n = self.ambient as usize;
        SchubertSignature(self.rows.iter().map(|&r| n - (15 - r.leading_zeros() as usize)).collect())
    }

    /// Image under an invertible linear map given by basis images; see
    /// [`LinearMap::apply`](crate::gf2::LinearMap::apply).
    pub(crate) fn map_rows(&self, f: impl Fn(u16) -> u16) -> Subspace {
        Subspace { ambient: self.ambient, rows: rref(self.rows.iter().map(|&r| f(r))) }
    }

    /// Generator-form string: canonical basis tuples in angle brackets.
    pub fn gens_string(&self) -> String {
        format!("<{}>", self.basis().iter().map(|v| v.to_string()).join(","))
    }

    /// Point-set string in shortlex order, the conventional way to list a
    /// line: `{35,45,34}` sorts to `{34,35,45}`.
    pub fn points_string(&self) -> String {
        let mut pts = self.points();
        pts.sort_by_key(|p| p.shortlex_key());
        format!("{{{}}}", pts.iter().map(|p| p.to_string()).join(","))
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.gens_string())
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.ambient as usize;
        write!(f, "[{}]", self.rows.iter().map(|r| format!("{r:0w$b}")).join(" "))
    }
}

/// The line through three mutually distinct nonzero points, which must be
/// additively closed (a + b = c). Rejects point triples that cannot lie on a
/// common line, such as {35, 5, 345}.
pub fn line_from_points(a: Vector, b: Vector, c: Vector) -> Result<Subspace> {
    let closed = !a.is_zero() && !b.is_zero() && !c.is_zero() && a != b && (a ^ b) == c;
    if !closed {
        return Err(Error::PointsNotClosed {
            a: a.to_string(),
            b: b.to_string(),
            c: c.to_string(),
        });
    }
    Ok(Subspace::span(a.ambient(), &[a, b]))
}

/// Number of k-subspaces of GF(2)^n (Gaussian binomial coefficient for q=2).
pub fn gaussian_binomial(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    // [n k] = [n-1 k-1] + 2^k [n-1 k]
    let mut row = vec![1u128];
    for m in 1..=n {
        let mut next = vec![1u128; m as usize + 1];
        for j in 1..m {
            next[j as usize] = row[j as usize - 1] + (1u128 << j) * row[j as usize];
        }
        row = next;
    }
    row[k as usize]
}

/// Every k-subspace of GF(2)^n exactly once, sorted by canonical row matrix
/// (lexicographically on the row vectors). The list is materialized, so this
/// is only meant for small parameters; the whole Grassmannian of PG(4,2) or
/// PG(5,2) is a few thousand entries.
pub fn enumerate_subspaces(n: u8, k: usize) -> Result<Vec<Subspace>> {
    if !(1..=16).contains(&n) || k > n as usize {
        return Err(Error::DimOutOfRange { n, k });
    }
    let mut out = Vec::new();
    for pivots in (1..=n as usize).combinations(k) {
        // free columns of row i: non-pivot coordinates right of pivots[i]
        let free: Vec<Vec<usize>> = (0..k)
            .map(|i| (pivots[i] + 1..=n as usize).filter(|c| !pivots.contains(c)).collect())
            .collect();
        let total: u64 = free.iter().map(|f| f.len() as u64).sum();
        for mut idx in 0..(1u64 << total) {
            let mut rows = Vec::with_capacity(k);
            for i in 0..k {
                let mut row = 1u16 << (n as usize - pivots[i]);
                for &c in &free[i] {
                    if idx & 1 == 1 {
                        row |= 1 << (n as usize - c);
                    }
                    idx >>= 1;
                }
                rows.push(row);
            }
            out.push(Subspace { ambient: n, rows });
        }
    }
    out.sort_unstable();
    Ok(out)
}
