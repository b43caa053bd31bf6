use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

use super::field::PrimeField;
use super::matrix::Matrix;

/// A subspace of `𝔽_p^m`, stored as the reduced row-echelon basis of its row
/// space. Two subspaces are equal exactly when their canonical bases are.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_matrix(mut spanning: Matrix) -> Self {
        let pivots = spanning.rref_in_place();
        Self {
            basis: spanning,
            pivots,
        }
    }

    /// Row space of the given residue rows.
    pub fn span(field: PrimeField, ambient: usize, rows: &[Vec<u64>]) -> Result<Self> {
        Ok(Self::from_matrix(Matrix::from_rows(field, ambient, rows)?))
    }

    // Caller guarantees `basis` is already in reduced row-echelon form.
    pub(crate) fn from_rref(basis: Matrix, pivots: Vec<usize>) -> Self {
        Self { basis, pivots }
    }

    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Self {
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        Self {
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// `⟨e_k : k ∈ indices⟩` for 1-based indices.
    pub fn coordinate(field: PrimeField, ambient: usize, indices: &[usize]) -> Result<Self> {
        let mut m = Matrix::zeros(field, indices.len(), ambient);
        for (r, &k) in indices.iter().enumerate() {
            if k == 0 || k > ambient {
                return Err(Error::IndexOutOfRange {
                    index: k,
                    bound: ambient,
                });
            }
            m.set(r, k - 1, 1);
        }
        Ok(Self::from_matrix(m))
    }

    /// `⟨e_1, …, e_k⟩`.
    pub fn standard(field: PrimeField, ambient: usize, k: usize) -> Self {
        let indices: Vec<usize> = (1..=k.min(ambient)).collect();
        Self::coordinate(field, ambient, &indices).expect("indices in range")
    }

    pub fn field(&self) -> PrimeField {
        self.basis.field()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Whether this is spanned by standard basis vectors.
    pub fn is_coordinate(&self) -> bool {
        (0..self.dim()).all(|r| self.basis.row(r).iter().filter(|&&x| x != 0).count() == 1)
    }

    fn compatible(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch {
                left: self.field().p(),
                right: other.field().p(),
            });
        }
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: other.ambient_dim(),
            });
        }
        Ok(())
    }

    /// Reduces `v` modulo this subspace in place.
    pub(crate) fn reduce(&self, v: &mut [u8]) {
        let f = self.field();
        for (r, &c) in self.pivots.iter().enumerate() {
            let factor = v[c];
            if factor == 0 {
                continue;
            }
            let row = self.basis.row(r);
            for k in c..v.len() {
                v[k] = f.sub(v[k], f.mul(factor, row[k]));
            }
        }
    }

    pub fn contains_vector(&self, v: &[u8]) -> bool {
        debug_assert_eq!(v.len(), self.ambient_dim());
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> bool {
        self.field() == other.field()
            && self.ambient_dim() == other.ambient_dim()
            && other.dim() <= self.dim()
            && (0..other.dim()).all(|r| self.contains_vector(other.basis.row(r)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.compatible(other)?;
        Ok(Self::from_matrix(self.basis.vstack(&other.basis)?))
    }

    /// `{x : x · u = 0 ∀ u}` for the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        Self::from_matrix(self.basis.kernel_basis())
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.compatible(other)?;
        let constraints = self
            .annihilator()
            .basis
            .vstack(&other.annihilator().basis)?;
        Ok(Self::from_matrix(constraints.kernel_basis()))
    }

    /// Includes into `𝔽^{ambient}` by appending zero coordinates.
    pub fn embed(&self, ambient: usize) -> Result<Subspace> {
        if ambient < self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: ambient,
            });
        }
        let mut m = Matrix::zeros(self.field(), self.dim(), ambient);
        for r in 0..self.dim() {
            for (c, &x) in self.basis.row(r).iter().enumerate() {
                m.set(r, c, x);
            }
        }
        Ok(Self::from_rref(m, self.pivots.clone()))
    }

    /// Inverse of [`Subspace::embed`]: drops trailing coordinates, which must
    /// vanish on the subspace.
    pub fn truncate(&self, ambient: usize) -> Result<Subspace> {
        if ambient > self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: ambient,
            });
        }
        let mut m = Matrix::zeros(self.field(), self.dim(), ambient);
        for r in 0..self.dim() {
            let row = self.basis.row(r);
            if row[ambient..].iter().any(|&x| x != 0) {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: self.ambient_dim(),
                });
            }
            for (c, &x) in row[..ambient].iter().enumerate() {
                m.set(r, c, x);
            }
        }
        Ok(Self::from_rref(m, self.pivots.clone()))
    }

    /// `dim(self ∩ ⟨e_1, …, e_k⟩)` for `k = 0..=m`, by echelon reduction
    /// from the right.
    pub fn standard_flag_profile(&self) -> Vec<usize> {
        let f = self.field();
        let m = self.ambient_dim();
        let mut rows: Vec<Vec<u8>> = (0..self.dim())
            .map(|r| self.basis.row(r).to_vec())
            .collect();
        let mut lasts = Vec::with_capacity(rows.len());
        let mut remaining: Vec<usize> = (0..rows.len()).collect();
        for c in (0..m).rev() {
            let Some(pos) = remaining.iter().position(|&r| rows[r][c] != 0) else {
                continue;
            };
            let pr = remaining.swap_remove(pos);
            let inv = f.inv(rows[pr][c]);
            let pivot_row: Vec<u8> = rows[pr].iter().map(|&x| f.mul(x, inv)).collect();
            for &r in &remaining {
                let factor = rows[r][c];
                if factor != 0 {
                    for k in 0..=c {
                        rows[r][k] = f.sub(rows[r][k], f.mul(factor, pivot_row[k]));
                    }
                }
            }
            lasts.push(c);
        }
        let mut profile = vec![0usize; m + 1];
        for c in lasts {
            for slot in profile.iter_mut().skip(c + 1) {
                *slot += 1;
            }
        }
        profile
    }

    /// All vectors of the subspace, for brute-force checks at tiny sizes.
    pub fn vectors(&self) -> Vec<Vec<u8>> {
        let f = self.field();
        let p = f.p() as usize;
        let total = p.pow(self.dim() as u32);
        let mut out = Vec::with_capacity(total);
        for mut code in 0..total {
            let mut v = vec![0u8; self.ambient_dim()];
            for r in 0..self.dim() {
                let coef = (code % p) as u8;
                code /= p;
                for (c, &x) in self.basis.row(r).iter().enumerate() {
                    v[c] = f.add(v[c], f.mul(coef, x));
                }
            }
            out.push(v);
        }
        out
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} in F_{}^{}",
            self.dim(),
            self.field().p(),
            self.ambient_dim()
        )?;
        for r in 0..self.dim() {
            write!(f, " {:?}", self.basis.row(r))?;
        }
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
struct SubspaceJson {
    p: u64,
    ambient_dim: usize,
    basis: Vec<Vec<u64>>,
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SubspaceJson {
            p: self.field().order(),
            ambient_dim: self.ambient_dim(),
            basis: self.basis.to_rows(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Subspace {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = SubspaceJson::deserialize(d)?;
        let field = PrimeField::new(raw.p).map_err(serde::de::Error::custom)?;
        Subspace::span(field, raw.ambient_dim, &raw.basis).map_err(serde::de::Error::custom)
    }
}
