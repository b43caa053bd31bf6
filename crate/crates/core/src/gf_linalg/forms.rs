//! Bilinear forms and the diagonal torus.

use crate::error::{Error, Result};

use super::field::PrimeField;
use super::matrix::Matrix;
use super::subspace::Subspace;

/// Square matrix `B` of the bilinear form `b(x, y) = xᵗ B y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FormMatrix {
    matrix: Matrix,
}

impl FormMatrix {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if matrix.rows() != matrix.cols() {
            return Err(Error::DimensionMismatch {
                expected: matrix.rows(),
                found: matrix.cols(),
            });
        }
        Ok(Self { matrix })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn field(&self) -> PrimeField {
        self.matrix.field()
    }

    /// `b(e_i, e_j)`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> u8 {
        self.matrix.get(i - 1, j - 1)
    }

    pub fn eval(&self, x: &[u8], y: &[u8]) -> u8 {
        let f = self.field();
        let mut acc = 0u8;
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                acc = f.add(acc, f.mul(xi, f.mul(self.matrix.get(i, j), yj)));
            }
        }
        acc
    }

    pub fn is_skew_symmetric(&self) -> bool {
        let f = self.field();
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.matrix.get(i, j) == f.neg(self.matrix.get(j, i))))
    }

    /// `b(v, v) = 0` for every `v`: skew with zero diagonal. In
    /// characteristic 2 skewness alone does not imply this.
    pub fn is_alternating(&self) -> bool {
        self.is_skew_symmetric() && (0..self.dim()).all(|i| self.matrix.get(i, i) == 0)
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.matrix.rank() == self.dim()
    }
}

/// `E = [[0, J], [−J, 0]]` on `𝔽^{2n}` with `J` the `n × n` antidiagonal of ones.
pub fn symplectic_form_e(n: usize, field: PrimeField) -> FormMatrix {
    let size = 2 * n;
    let mut m = Matrix::zeros(field, size, size);
    for k in 0..n {
        // e_{k+1} pairs with e_{2n-k}
        m.set(k, size - 1 - k, 1);
        m.set(size - 1 - k, k, field.neg(1));
    }
    FormMatrix { matrix: m }
}

/// `{w : b(u, w) = 0 ∀ u ∈ U}`.
pub fn perp(u: &Subspace, form: &FormMatrix) -> Result<Subspace> {
    if u.ambient_dim() != form.dim() {
        return Err(Error::DimensionMismatch {
            expected: form.dim(),
            found: u.ambient_dim(),
        });
    }
    if u.field() != form.field() {
        return Err(Error::FieldMismatch {
            left: form.field().p(),
            right: u.field().p(),
        });
    }
    if !form.is_nondegenerate() {
        return Err(Error::DegenerateForm);
    }
    Ok(Subspace::from_matrix(
        u.basis().mul(&form.matrix)?.kernel_basis(),
    ))
}

/// `λ = (λ_1, …, λ_m)` acting by `e_k ↦ λ_k e_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TorusElement {
    field: PrimeField,
    entries: Vec<u8>,
}

impl TorusElement {
    pub fn new(field: PrimeField, entries: &[u64]) -> Result<Self> {
        let mut out = Vec::with_capacity(entries.len());
        for (k, &x) in entries.iter().enumerate() {
            let r = field.residue(x)?;
            if r == 0 {
                return Err(Error::NonInvertibleTorusEntry(k + 1));
            }
            out.push(r);
        }
        Ok(Self {
            field,
            entries: out,
        })
    }

    pub fn ones(field: PrimeField, dim: usize) -> Self {
        Self {
            field,
            entries: vec![1; dim],
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// `λ_k`, 1-based.
    pub fn get(&self, k: usize) -> u8 {
        self.entries[k - 1]
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    /// Entrywise product.
    pub fn mul(&self, other: &TorusElement) -> Result<TorusElement> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        let f = self.field;
        Ok(Self {
            field: f,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| f.mul(a, b))
                .collect(),
        })
    }

    /// Every element of `(𝔽_p^×)^dim`, lexicographic.
    pub fn all(field: PrimeField, dim: usize) -> Vec<TorusElement> {
        let units = field.p() as usize - 1;
        let total = units.pow(dim as u32);
        (0..total)
            .map(|mut code| {
                let mut entries = vec![0u8; dim];
                for slot in entries.iter_mut().rev() {
                    *slot = (code % units) as u8 + 1;
                    code /= units;
                }
                Self { field, entries }
            })
            .collect()
    }

    /// `diag(λ) · U`.
    pub fn act(&self, u: &Subspace) -> Result<Subspace> {
        if u.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: u.ambient_dim(),
            });
        }
        let f = self.field;
        let basis = u.basis();
        let mut m = basis.clone();
        for r in 0..basis.rows() {
            for c in 0..basis.cols() {
                m.set(r, c, f.mul(basis.get(r, c), self.entries[c]));
            }
        }
        Ok(Subspace::from_matrix(m))
    }
}

pub fn torus_act(lambda: &TorusElement, u: &Subspace) -> Result<Subspace> {
    lambda.act(u)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn form_e_structure() {
        for p in [2u64, 3, 5] {
            let f = PrimeField::new(p).unwrap();
            for n in 1..=4 {
                let e = symplectic_form_e(n, f);
                assert!(e.is_skew_symmetric());
                assert!(e.is_alternating());
                assert!(e.is_nondegenerate());
                let sq = e.matrix().mul(e.matrix()).unwrap();
                let mut minus_id = Matrix::zeros(f, 2 * n, 2 * n);
                for i in 0..2 * n {
                    minus_id.set(i, i, f.neg(1));
                }
                assert_eq!(sq, minus_id);
                for k in 1..=2 * n {
                    assert_ne!(e.entry(k, 2 * n + 1 - k), 0);
                }
                if n >= 2 {
                    assert_eq!(e.entry(1, 2), 0);
                }
            }
        }
    }

    #[test]
    fn perp_of_zero_is_full() {
        let f = PrimeField::new(3).unwrap();
        let e = symplectic_form_e(2, f);
        assert_eq!(
            perp(&Subspace::zero(f, 4), &e).unwrap(),
            Subspace::full(f, 4)
        );
        assert_eq!(
            perp(&Subspace::full(f, 4), &e).unwrap(),
            Subspace::zero(f, 4)
        );
    }

    #[test]
    fn degenerate_form_rejected() {
        let f = PrimeField::new(3).unwrap();
        let form = FormMatrix::new(Matrix::zeros(f, 2, 2)).unwrap();
        assert_eq!(
            perp(&Subspace::zero(f, 2), &form),
            Err(Error::DegenerateForm)
        );
    }

    #[test]
    fn torus_basics() {
        let f = PrimeField::new(3).unwrap();
        assert_eq!(
            TorusElement::new(f, &[1, 0, 2]),
            Err(Error::NonInvertibleTorusEntry(2))
        );
        let u = Subspace::span(f, 3, &[vec![1, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(TorusElement::ones(f, 3).act(&u).unwrap(), u);
        let lam = TorusElement::new(f, &[1, 2, 2]).unwrap();
        assert_eq!(
            lam.act(&u).unwrap(),
            Subspace::span(f, 3, &[vec![1, 2, 0], vec![0, 0, 1]]).unwrap()
        );
        let c = Subspace::coordinate(f, 3, &[1, 3]).unwrap();
        for lam in TorusElement::all(f, 3) {
            assert_eq!(lam.act(&c).unwrap(), c);
        }
        assert_eq!(TorusElement::all(f, 3).len(), 8);
    }
}
