use crate::error::{Error, Result};

use super::field::PrimeField;
use super::matrix::Matrix;
use super::subspace::Subspace;

/// A linear map `𝔽^domain → 𝔽^codomain`, acting on column vectors:
/// the matrix has `codomain` rows and `domain` columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Self {
        Self { matrix }
    }

    /// The map sending the `k`-th basis vector to `images[k]` (columns).
    pub fn from_columns(field: PrimeField, codomain: usize, images: &[Vec<u8>]) -> Self {
        let mut m = Matrix::zeros(field, codomain, images.len());
        for (c, col) in images.iter().enumerate() {
            for (r, &x) in col.iter().enumerate() {
                m.set(r, c, x);
            }
        }
        Self { matrix: m }
    }

    pub fn identity(field: PrimeField, dim: usize) -> Self {
        Self {
            matrix: Matrix::identity(field, dim),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn field(&self) -> PrimeField {
        self.matrix.field()
    }

    pub fn domain_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn codomain_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, v: &[u8]) -> Vec<u8> {
        debug_assert_eq!(v.len(), self.domain_dim());
        let f = self.field();
        (0..self.codomain_dim())
            .map(|r| {
                self.matrix
                    .row(r)
                    .iter()
                    .zip(v)
                    .fold(0u8, |acc, (&a, &x)| f.add(acc, f.mul(a, x)))
            })
            .collect()
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinearMap) -> Result<LinearMap> {
        Ok(Self {
            matrix: self.matrix.mul(&inner.matrix)?,
        })
    }

    fn check_domain(&self, u: &Subspace) -> Result<()> {
        if u.ambient_dim() != self.domain_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.domain_dim(),
                found: u.ambient_dim(),
            });
        }
        if u.field() != self.field() {
            return Err(Error::FieldMismatch {
                left: self.field().p(),
                right: u.field().p(),
            });
        }
        Ok(())
    }

    pub fn image(&self, u: &Subspace) -> Result<Subspace> {
        self.check_domain(u)?;
        // rows u ↦ u Aᵗ
        Ok(Subspace::from_matrix(
            u.basis().mul(&self.matrix.transpose())?,
        ))
    }

    pub fn kernel(&self) -> Subspace {
        Subspace::from_matrix(self.matrix.kernel_basis())
    }

    /// `{x : A x ∈ z}`.
    pub fn preimage(&self, z: &Subspace) -> Result<Subspace> {
        if z.ambient_dim() != self.codomain_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.codomain_dim(),
                found: z.ambient_dim(),
            });
        }
        if z.field() != self.field() {
            return Err(Error::FieldMismatch {
                left: self.field().p(),
                right: z.field().p(),
            });
        }
        let constraints = z.annihilator().basis().mul(&self.matrix)?;
        Ok(Subspace::from_matrix(constraints.kernel_basis()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projection_image_kernel() {
        let f = PrimeField::new(3).unwrap();
        // kills e_1, fixes e_2, e_3
        let pr = LinearMap::from_columns(f, 3, &[vec![0, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(pr.kernel(), Subspace::coordinate(f, 3, &[1]).unwrap());
        let u = Subspace::span(f, 3, &[vec![1, 1, 0]]).unwrap();
        assert_eq!(
            pr.image(&u).unwrap(),
            Subspace::coordinate(f, 3, &[2]).unwrap()
        );
        let back = pr.preimage(&pr.image(&u).unwrap()).unwrap();
        assert_eq!(back, Subspace::coordinate(f, 3, &[1, 2]).unwrap());
        assert_eq!(pr.preimage(&Subspace::zero(f, 3)).unwrap(), pr.kernel());
    }
}
