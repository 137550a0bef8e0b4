use crate::error::{Error, Result};
use crate::gf2::{Subspace, Vector};

/// A linear map GF(2)^n -> GF(2)^n given by the images of the standard basis
/// vectors e_1..e_n. Maps need not be invertible as values, but applying one
/// to a subspace requires full rank so that dimensions are preserved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    ambient: u8,
    images: Vec<Vector>,
}

impl LinearMap {
    pub fn new(ambient: u8, images: Vec<Vector>) -> Result<LinearMap> {
        if images.len() != ambient as usize {
            return Err(Error::BadMapImages { ambient, got: images.len() });
        }
        for img in &images {
            assert_eq!(img.ambient(), ambient, "mixed ambient dimensions");
        }
        Ok(LinearMap { ambient, images })
    }

    /// Parse images from tuple tokens, e.g. the spread automorphism
    /// `["45","134","234","145","u"]`.
    pub fn from_tokens(ambient: u8, tokens: &[&str]) -> Result<LinearMap> {
        let images = tokens
            .iter()
            .map(|t| Vector::parse_tuple(t, ambient))
            .collect::<Result<Vec<_>>>()?;
        LinearMap::new(ambient, images)
    }

    pub fn identity(ambient: u8) -> LinearMap {
        LinearMap {
            ambient,
            images: (1..=ambient as usize).map(|i| Vector::basis(ambient, i)).collect(),
        }
    }

    pub fn ambient(&self) -> u8 {
        self.ambient
    }

    pub fn is_invertible(&self) -> bool {
        Subspace::span(self.ambient, &self.images).dim() == self.ambient as usize
    }

    pub fn apply_vector(&self, v: &Vector) -> Vector {
        assert_eq!(v.ambient(), self.ambient, "mixed ambient dimensions");
        v.support()
            .into_iter()
            .fold(Vector::zero(self.ambient), |acc, i| acc ^ self.images[i - 1])
    }

    /// Image of a subspace. Errors on singular maps, which would not preserve
    /// dimensions (and so could not be spread automorphisms).
    pub fn apply(&self, s: &Subspace) -> Result<Subspace> {
        assert_eq!(s.ambient(), self.ambient, "mixed ambient dimensions");
        if !self.is_invertible() {
            return Err(Error::SingularMap);
        }
        Ok(s.map_rows(|row| {
            self.apply_vector(&Vector::new(self.ambient, row)).bits()
        }))
    }
}
