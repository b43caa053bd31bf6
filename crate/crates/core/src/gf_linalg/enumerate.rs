//! Exhaustive subspace enumeration in canonical order.

use crate::error::{Error, Result};

use super::field::PrimeField;
use super::matrix::Matrix;
use super::subspace::Subspace;

/// Largest ambient dimension accepted by [`grassmannian`] for the prime `p`:
/// 8 at `p = 2`, otherwise the largest `m` with `p^m ≤ 3^6`.
pub fn max_ambient_dim(field: PrimeField) -> usize {
    if field.p() == 2 {
        return 8;
    }
    let mut m = 0;
    let mut size = 1u64;
    while size * field.order() <= 729 {
        size *= field.order();
        m += 1;
    }
    m
}

/// Iterator over `Gr_k(𝔽_p^m)`: pivot sets in lexicographic order, and for
/// each pivot set the free entries as an odometer (last entry fastest).
#[derive(Debug, Clone)]
pub struct GrassmannianIter {
    field: PrimeField,
    k: usize,
    m: usize,
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    counter: Vec<u8>,
    done: bool,
}

impl GrassmannianIter {
    pub(crate) fn new(field: PrimeField, k: usize, m: usize) -> Self {
        let mut it = Self {
            field,
            k,
            m,
            pivots: (0..k).collect(),
            free: Vec::new(),
            counter: Vec::new(),
            done: k > m,
        };
        if !it.done {
            it.reset_free();
        }
        it
    }

    fn reset_free(&mut self) {
        self.free.clear();
        for (r, &pc) in self.pivots.iter().enumerate() {
            for c in pc + 1..self.m {
                if !self.pivots.contains(&c) {
                    self.free.push((r, c));
                }
            }
        }
        self.counter = vec![0; self.free.len()];
    }

    fn current(&self) -> Subspace {
        let mut m = Matrix::zeros(self.field, self.k, self.m);
        for (r, &c) in self.pivots.iter().enumerate() {
            m.set(r, c, 1);
        }
        for (&(r, c), &x) in self.free.iter().zip(&self.counter) {
            m.set(r, c, x);
        }
        Subspace::from_rref(m, self.pivots.clone())
    }

    fn advance_counter(&mut self) -> bool {
        let p = self.field.p();
        for slot in self.counter.iter_mut().rev() {
            *slot += 1;
            if *slot < p {
                return true;
            }
            *slot = 0;
        }
        false
    }

    fn advance_pivots(&mut self) -> bool {
        let k = self.k;
        let m = self.m;
        let Some(i) = (0..k).rev().find(|&i| self.pivots[i] < m - k + i) else {
            return false;
        };
        self.pivots[i] += 1;
        for j in i + 1..k {
            self.pivots[j] = self.pivots[j - 1] + 1;
        }
        true
    }
}

impl Iterator for GrassmannianIter {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        if self.done {
            return None;
        }
        let out = self.current();
        if !self.advance_counter() {
            if self.advance_pivots() {
                self.reset_free();
            } else {
                self.done = true;
            }
        }
        Some(out)
    }
}

/// All `k`-dimensional subspaces of `𝔽_p^m`.
pub fn grassmannian(k: usize, m: usize, field: PrimeField) -> Result<GrassmannianIter> {
    let limit = max_ambient_dim(field);
    if m > limit {
        return Err(Error::BoundExceeded {
            what: format!("Grassmannian of F_{}^{m}", field.p()),
            limit,
        });
    }
    if k > m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: k,
        });
    }
    Ok(GrassmannianIter::new(field, k, m))
}

/// Subspaces `X` with `lower ⊆ X ⊆ upper` and `dim X = k`, enumerated as
/// `Gr_{k − dim lower}(upper / lower)` in quotient coordinates.
pub struct IntervalIter {
    lower: Subspace,
    complement: Matrix,
    inner: Option<GrassmannianIter>,
}

impl Iterator for IntervalIter {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        let s = self.inner.as_mut()?.next()?;
        let lifted = s.basis().mul(&self.complement).expect("shapes agree");
        Some(Subspace::from_matrix(
            self.lower.basis().vstack(&lifted).expect("same ambient"),
        ))
    }
}

pub fn subspaces_between(lower: &Subspace, upper: &Subspace, k: usize) -> Result<IntervalIter> {
    if lower.ambient_dim() != upper.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: upper.ambient_dim(),
            found: lower.ambient_dim(),
        });
    }
    let field = upper.field();
    let ambient = upper.ambient_dim();
    let mut reduced = Matrix::zeros(field, upper.dim(), ambient);
    for r in 0..upper.dim() {
        let mut v = upper.basis().row(r).to_vec();
        lower.reduce(&mut v);
        for (c, &x) in v.iter().enumerate() {
            reduced.set(r, c, x);
        }
    }
    reduced.rref_in_place();
    let feasible = upper.contains(lower) && k >= lower.dim() && k <= upper.dim();
    let inner = feasible.then(|| GrassmannianIter::new(field, k - lower.dim(), reduced.rows()));
    Ok(IntervalIter {
        lower: lower.clone(),
        complement: reduced,
        inner,
    })
}

/// Calls `visit` on every chain `W_1 ⊂ … ⊂ W_s` in `𝔽_p^ambient` with
/// `dim W_i = dims[i]`.
pub fn for_each_flag<F: FnMut(&[Subspace])>(
    field: PrimeField,
    ambient: usize,
    dims: &[usize],
    mut visit: F,
) {
    fn rec<F: FnMut(&[Subspace])>(
        full: &Subspace,
        dims: &[usize],
        chain: &mut Vec<Subspace>,
        visit: &mut F,
    ) {
        if chain.len() == dims.len() {
            visit(chain);
            return;
        }
        let lower = chain
            .last()
            .cloned()
            .unwrap_or_else(|| Subspace::zero(full.field(), full.ambient_dim()));
        for w in subspaces_between(&lower, full, dims[chain.len()]).expect("same ambient") {
            chain.push(w);
            rec(full, dims, chain, visit);
            chain.pop();
        }
    }
    let full = Subspace::full(field, ambient);
    rec(&full, dims, &mut Vec::with_capacity(dims.len()), &mut visit);
}
