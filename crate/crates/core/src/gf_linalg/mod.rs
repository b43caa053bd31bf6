//! Exact linear algebra over small prime fields.

mod enumerate;
mod field;
mod forms;
mod map;
mod matrix;
mod subspace;

pub use enumerate::{
    for_each_flag, grassmannian, max_ambient_dim, subspaces_between, GrassmannianIter, IntervalIter,
};
pub use field::{PrimeField, SUPPORTED_PRIMES};
pub use forms::{perp, symplectic_form_e, torus_act, FormMatrix, TorusElement};
pub use map::LinearMap;
pub use matrix::Matrix;
pub use subspace::Subspace;

use crate::error::{Error, Result};

/// Canonical row space of `matrix`.
pub fn rref(matrix: &Matrix) -> Subspace {
    Subspace::from_matrix(matrix.clone())
}

pub fn sum(u: &Subspace, v: &Subspace) -> Result<Subspace> {
    u.sum(v)
}

pub fn intersect(u: &Subspace, v: &Subspace) -> Result<Subspace> {
    u.intersect(v)
}

/// `inner ⊆ outer`.
pub fn contains(outer: &Subspace, inner: &Subspace) -> Result<bool> {
    if outer.ambient_dim() != inner.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: outer.ambient_dim(),
            found: inner.ambient_dim(),
        });
    }
    Ok(outer.contains(inner))
}

pub fn image(map: &LinearMap, u: &Subspace) -> Result<Subspace> {
    map.image(u)
}

pub fn preimage(map: &LinearMap, z: &Subspace) -> Result<Subspace> {
    map.preimage(z)
}
