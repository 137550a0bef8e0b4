use std::fmt;
use std::ops::BitXor;

use crate::error::{Error, Result};

/// A vector of GF(2)^n for n <= 16, stored as a bitmask.
///
/// Coordinate 1 is the *leftmost* (most significant) of the n used bits, so
/// for n = 5 the vector 10101 has coordinates 1, 3 and 5 set and is written
/// "135" in tuple notation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector {
    ambient: u8,
    bits: u16,
}

impl Vector {
    pub fn new(ambient: u8, bits: u16) -> Self {
        assert!((1..=16).contains(&ambient), "ambient dimension must be 1..=16");
        assert!(
            ambient == 16 || bits < (1 << ambient),
            "bits 0x{bits:x} out of range for ambient dimension {ambient}"
        );
        Vector { ambient, bits }
    }

    pub fn zero(ambient: u8) -> Self {
        Vector::new(ambient, 0)
    }

    /// The standard basis vector e_i (1-based coordinate).
    pub fn basis(ambient: u8, i: usize) -> Self {
        assert!(i >= 1 && i <= ambient as usize, "basis index out of range");
        Vector::new(ambient, 1 << (ambient as usize - i))
    }

    /// The all-ones vector, written "u" in tuple notation when n = 5.
    pub fn all_ones(ambient: u8) -> Self {
        let bits = if ambient == 16 { u16::MAX } else { (1u16 << ambient) - 1 };
        Vector { ambient, bits }
    }

    pub fn ambient(&self) -> u8 {
        self.ambient
    }

    pub fn bits(&self) -> u16 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    /// Value of coordinate i (1-based).
    pub fn coord(&self, i: usize) -> bool {
        assert!(i >= 1 && i <= self.ambient as usize);
        self.bits >> (self.ambient as usize - i) & 1 == 1
    }

    /// 1-based coordinates with value 1, ascending.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.ambient as usize).filter(|&i| self.coord(i)).collect()
    }

    /// Parity of the standard dot product.
    pub fn dot(&self, other: &Vector) -> bool {
        assert_eq!(self.ambient, other.ambient, "mixed ambient dimensions");
        (self.bits & other.bits).count_ones() % 2 == 1
    }

    /// Parse tuple notation: each digit d toggles coordinate d, and 'u'
    /// (ambient 5 only) toggles all coordinates. "135" is 10101, "4u" is
    /// 11101. The zero vector is rejected — tuples name projective points.
    pub fn parse_tuple(token: &str, ambient: u8) -> Result<Vector> {
        if ambient > 9 {
            return Err(Error::TupleAmbientTooLarge(ambient));
        }
        if token.is_empty() {
            return Err(Error::EmptyToken);
        }
        let mut bits = 0u16;
        for ch in token.chars() {
            match ch {
                'u' if ambient == 5 => bits ^= Vector::all_ones(5).bits,
                '1'..='9' => {
                    let i = ch as usize - '0' as usize;
                    if i > ambient as usize {
                        return Err(Error::BadTokenChar { token: token.into(), ch, ambient });
                    }
                    bits ^= 1 << (ambient as usize - i);
                }
                _ => return Err(Error::BadTokenChar { token: token.into(), ch, ambient }),
            }
        }
        if bits == 0 {
            return Err(Error::ZeroTuple { token: token.into() });
        }
        Ok(Vector { ambient, bits })
    }

    /// Inverse of [`parse_tuple`](Self::parse_tuple). In ambient 5 a vector of
    /// weight <= 3 becomes its sorted digit string; heavier vectors use the
    /// complement-and-'u' form ("4u" for 11101, "u" for 11111). Other ambient
    /// dimensions (<= 9) always use the plain digit string.
    pub fn tuple(&self) -> Result<String> {
        if self.ambient > 9 {
            return Err(Error::TupleAmbientTooLarge(self.ambient));
        }
        if self.is_zero() {
            return Err(Error::ZeroTuple { token: String::new() });
        }
        let digits = |v: &Vector| v.support().iter().map(|i| i.to_string()).collect::<String>();
        if self.ambient == 5 && self.weight() > 3 {
            let complement = Vector::new(5, self.bits ^ Vector::all_ones(5).bits);
            Ok(format!("{}u", digits(&complement)))
        } else {
            Ok(digits(self))
        }
    }

    /// Sort key ordering tuple tokens shortest-first, then lexicographically:
    /// "2" < "5u" < "134". This is the order in which a line's points are
    /// conventionally listed.
    pub(crate) fn shortlex_key(&self) -> (usize, String) {
        match self.tuple() {
            Ok(t) => (t.len(), t),
            Err(_) => (usize::MAX, format!("{:016b}", self.bits)),
        }
    }
}

impl BitXor for Vector {
    type Output = Vector;
    fn bitxor(self, rhs: Vector) -> Vector {
        assert_eq!(self.ambient, rhs.ambient, "mixed ambient dimensions");
        Vector { ambient: self.ambient, bits: self.bits ^ rhs.bits }
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tuple() {
            Ok(t) => f.write_str(&t),
            Err(_) => write!(f, "{:0width$b}", self.bits, width = self.ambient as usize),
        }
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:0width$b}", self.bits, width = self.ambient as usize)
    }
}
