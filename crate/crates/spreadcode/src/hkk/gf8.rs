//! GF(8) as GF(2)[x]/(x³+x+1) and the rank-distance-2 codebook of 3×3
//! matrices: the linearized polynomials a₀x + a₁x² over that field, written
//! in the polynomial basis {1, x, x²}.

use std::ops::{Add, Mul};

/// A field element; bit i of the payload is the coefficient of x^i.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Gf8(pub u8);

impl Gf8 {
    const MODULUS: u16 = 0b1011; // x³ + x + 1

    pub fn square(self) -> Gf8 {
        self * self
    }

    pub fn all() -> impl Iterator<Item = Gf8> {
        (0..8).map(Gf8)
    }
}

impl Add for Gf8 {
    type Output = Gf8;

    // addition in characteristic 2 is xor
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, other: Gf8) -> Gf8 {
        Gf8(self.0 ^ other.0)
    }
}

impl Mul for Gf8 {
    type Output = Gf8;

    fn mul(self, other: Gf8) -> Gf8 {
        let mut acc: u16 = 0;
        for i in 0..3 {
            if self.0 & (1 << i) != 0 {
                acc ^= (other.0 as u16) << i;
            }
        }
        for i in (3..5).rev() {
            if acc & (1 << i) != 0 {
                acc ^= Self::MODULUS << (i - 3);
            }
        }
        Gf8(acc as u8)
    }
}

/// A 3×3 matrix over GF(2); row i is the image of the i-th basis element of
/// GF(8) under a linearized polynomial, so the row space of [I | M] is the
/// graph of that map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RankCodeword {
    rows: [u8; 3],
}

impl RankCodeword {
    pub fn rows(&self) -> [u8; 3] {
        self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows == [0, 0, 0]
    }

    /// GF(2) rank by row elimination.
    pub fn rank(&self) -> usize {
        let mut rows = self.rows;
        let mut rank = 0;
        for col in (0..3).rev() {
            let bit = 1u8 << col;
            if let Some(p) = (rank..3).find(|&r| rows[r] & bit != 0) {
                rows.swap(rank, p);
                for r in 0..3 {
                    if r != rank && rows[r] & bit != 0 {
                        rows[r] ^= rows[rank];
                    }
                }
                rank += 1;
            }
        }
        rank
    }
}

impl Add for RankCodeword {
    type Output = RankCodeword;

    // addition in characteristic 2 is xor
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, other: RankCodeword) -> RankCodeword {
        RankCodeword {
            rows: [
                self.rows[0] ^ other.rows[0],
                self.rows[1] ^ other.rows[1],
                self.rows[2] ^ other.rows[2],
            ],
        }
    }
}

/// Field element -> matrix row: the leftmost of the three matrix columns
/// carries the constant coefficient, matching the left-to-right coordinate
/// convention of the ambient bit rows.
fn element_row(v: Gf8) -> u8 {
    let mut row = 0u8;
    for i in 0..3 {
        if v.0 & (1 << i) != 0 {
            row |= 1 << (2 - i);
        }
    }
    row
}

/// All 64 matrices of the maps v ↦ a₀·v + a₁·v², ordered by (a₀, a₁). The
/// code is linear and every nonzero member has rank ≥ 2 (in fact exactly 2
/// or 3), which doubles into subspace distance 4 after lifting.
pub fn gabidulin_codebook() -> Vec<RankCodeword> {
    let basis = [Gf8(0b001), Gf8(0b010), Gf8(0b100)];
    let mut out = Vec::with_capacity(64);
    for a0 in Gf8::all() {
        for a1 in Gf8::all() {
            let mut rows = [0u8; 3];
            for (i, b) in basis.iter().enumerate() {
                let image = a0 * *b + a1 * b.square();
                rows[i] = element_row(image);
            }
            out.push(RankCodeword { rows });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn the_modulus_relation_holds() {
        let x = Gf8(0b010);
        assert_eq!(x * x * x, Gf8(0b011)); // x³ = x + 1
    }

    #[test]
    fn multiplication_is_commutative_associative_and_distributive() {
        for a in Gf8::all() {
            for b in Gf8::all() {
                assert_eq!(a * b, b * a);
                for c in Gf8::all() {
                    assert_eq!((a * b) * c, a * (b * c));
                    assert_eq!(a * (b + c), a * b + a * c);
                }
            }
        }
    }

    #[test]
    fn nonzero_elements_form_a_group_of_order_seven() {
        for a in Gf8::all().skip(1) {
            let mut pow = a;
            let mut order = 1;
            while pow != Gf8(1) {
                pow = pow * a;
                order += 1;
            }
            assert!(order == 1 || order == 7);
        }
    }

    #[test]
    fn the_codebook_has_64_members_and_is_linear() {
        let book = gabidulin_codebook();
        assert_eq!(book.len(), 64);
        assert!(book[0].is_zero());
        for &a in &book {
            for &b in &book {
                assert!(book.contains(&(a + b)));
            }
        }
    }

    #[test]
    fn nonzero_codewords_have_rank_at_least_two() {
        let book = gabidulin_codebook();
        let min = book
            .iter()
            .filter(|m| !m.is_zero())
            .map(|m| m.rank())
            .min()
            .unwrap();
        assert_eq!(min, 2);
    }

    #[test]
    fn rank_agrees_with_hand_picked_matrices() {
        assert_eq!(RankCodeword { rows: [0, 0, 0] }.rank(), 0);
        assert_eq!(RankCodeword { rows: [0b100, 0b100, 0b100] }.rank(), 1);
        assert_eq!(RankCodeword { rows: [0b100, 0b010, 0b001] }.rank(), 3);
        assert_eq!(RankCodeword { rows: [0b110, 0b011, 0b101] }.rank(), 2);
    }
}
