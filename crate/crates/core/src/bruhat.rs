//! Bruhat order through rank-matrix dominance, parabolic quotients
//! `Sym_{2n}^J`, and lower intervals below a quotient element.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permgroup::{is_minimal_rep, sigma_n, DimensionVector, Permutation};

/// Largest permutation size for which the quotient may be enumerated.
pub const QUOTIENT_MAX_SIZE: usize = 12;
/// Largest `n` accepted by [`genocchi_numbers`].
pub const GENOCCHI_MAX_N: usize = 5;

/// `r(i, j) = #{l ≤ i : τ(l) ≤ j}` for `1 ≤ i, j ≤ size`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankMatrix {
    size: usize,
    entries: Vec<u8>,
}

impl RankMatrix {
    pub fn size(&self) -> usize {
        self.size
    }

    /// 1-based lookup; `r(0, j) = r(i, 0) = 0`.
    pub fn get(&self, i: usize, j: usize) -> usize {
        if i == 0 || j == 0 {
            return 0;
        }
        self.entries[(i - 1) * self.size + (j - 1)] as usize
    }

    /// Entrywise `self ≥ other`.
    pub fn dominates(&self, other: &RankMatrix) -> bool {
        self.entries.iter().zip(&other.entries).all(|(a, b)| a >= b)
    }
}

pub fn rank_matrix(tau: &Permutation) -> RankMatrix {
    let size = tau.size();
    let mut entries = vec![0u8; size * size];
    let images = tau.zero_based();
    for i in 0..size {
        for j in 0..size {
            let above = if i == 0 {
                0
            } else {
                entries[(i - 1) * size + j]
            };
            entries[i * size + j] = above + u8::from(images[i] as usize <= j);
        }
    }
    RankMatrix { size, entries }
}

/// `u ≤ v` in the Bruhat order.
pub fn bruhat_leq(u: &Permutation, v: &Permutation) -> Result<bool> {
    if u.size() != v.size() {
        return Err(Error::SizeMismatch {
            left: u.size(),
            right: v.size(),
        });
    }
    Ok(rank_matrix(u).dominates(&rank_matrix(v)))
}

/// Lexicographic stream of the minimal coset representatives `Sym_{2n}^J`.
pub struct QuotientIter {
    size: usize,
    ascent: Vec<bool>,
    prefix: Vec<u8>,
    used: u64,
    floor: usize,
    started: bool,
    done: bool,
}

impl QuotientIter {
    fn with_prefix(dv: &DimensionVector, prefix: Vec<u8>) -> Self {
        let size = 2 * dv.n();
        let mut ascent = vec![false; size];
        for k in dv.generators() {
            ascent[k] = true;
        }
        let used = prefix.iter().fold(0u64, |acc, &v| acc | (1 << v));
        let floor = prefix.len();
        Self {
            size,
            ascent,
            prefix,
            used,
            floor,
            started: false,
            done: false,
        }
    }

    // Extends `prefix` (currently of length `pos`) to the lexicographically
    // next full permutation whose entry at `pos` is at least `from`.
    fn search(&mut self, mut pos: usize, mut from: u8) -> bool {
        let size = self.size as u8;
        loop {
            let lower = if pos > 0 && self.ascent[pos] {
                from.max(self.prefix[pos - 1] + 1)
            } else {
                from
            };
            if let Some(v) = (lower..size).find(|&v| self.used & (1 << v) == 0) {
                self.prefix.push(v);
                self.used |= 1 << v;
                pos += 1;
                if pos == self.size {
                    return true;
                }
                from = 0;
            } else {
                if pos == self.floor {
                    return false;
                }
                let v = self.prefix.pop().unwrap();
                self.used &= !(1 << v);
                pos -= 1;
                from = v + 1;
            }
        }
    }
}

impl Iterator for QuotientIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let found = if !self.started {
            self.started = true;
            if self.prefix.len() == self.size {
                true
            } else {
                self.search(self.prefix.len(), 0)
            }
        } else if self.prefix.len() == self.floor {
            false
        } else {
            let last = self.prefix.pop().unwrap();
            self.used &= !(1 << last);
            self.search(self.size - 1, last + 1)
        };
        if found {
            Some(Permutation::from_zero_based(self.prefix.clone()))
        } else {
            self.done = true;
            None
        }
    }
}

fn check_quotient_size(dv: &DimensionVector) -> Result<()> {
    if 2 * dv.n() > QUOTIENT_MAX_SIZE {
        return Err(Error::BoundExceeded {
            what: format!("quotient enumeration of Sym_{}", 2 * dv.n()),
            limit: QUOTIENT_MAX_SIZE,
        });
    }
    Ok(())
}

/// All `τ ∈ Sym_{2n}` with `τ(k) < τ(k+1)` for `k ∈ K`, in lexicographic
/// one-line order.
pub fn enumerate_quotient(dv: &DimensionVector) -> Result<QuotientIter> {
    check_quotient_size(dv)?;
    Ok(QuotientIter::with_prefix(dv, Vec::new()))
}

// Quotient elements below `sigma`, split by the first entry so the chunks can
// be filtered in parallel and concatenated back in lexicographic order.
fn lower_interval(sigma: &Permutation, dv: &DimensionVector) -> Result<Vec<Permutation>> {
    check_quotient_size(dv)?;
    if !is_minimal_rep(sigma, dv) {
        return Err(Error::NotMinimalRepresentative);
    }
    let top = rank_matrix(sigma);
    let chunks: Vec<Vec<Permutation>> = (0..sigma.size() as u8)
        .into_par_iter()
        .map(|first| {
            QuotientIter::with_prefix(dv, vec![first])
                .filter(|tau| rank_matrix(tau).dominates(&top))
                .collect()
        })
        .collect();
    Ok(chunks.into_iter().flatten().collect())
}

/// Minimal representatives `τ ≤ σ`, lexicographically ordered.
pub fn bruhat_interval(sigma: &Permutation, dv: &DimensionVector) -> Result<Vec<Permutation>> {
    if sigma.size() != 2 * dv.n() {
        return Err(Error::SizeMismatch {
            left: sigma.size(),
            right: 2 * dv.n(),
        });
    }
    lower_interval(sigma, dv)
}

/// `Σ_m c_m q^m` with `c_m = #{τ ≤ σ minimal : ℓ(τ) = m}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoincarePolynomial {
    coeffs: Vec<u64>,
}

impl PoincarePolynomial {
    pub fn from_coeffs(mut coeffs: Vec<u64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, q: u64) -> u128 {
        self.coeffs
            .iter()
            .rev()
            .fold(0u128, |acc, &c| acc * q as u128 + c as u128)
    }

    /// Value at `q = 1`, the number of cells.
    pub fn cardinality(&self) -> u64 {
        self.coeffs.iter().sum()
    }
}

pub fn interval_poincare(sigma: &Permutation, dv: &DimensionVector) -> Result<PoincarePolynomial> {
    let interval = bruhat_interval(sigma, dv)?;
    let mut coeffs = vec![0u64; sigma.length() + 1];
    for tau in &interval {
        coeffs[tau.length()] += 1;
    }
    Ok(PoincarePolynomial::from_coeffs(coeffs))
}

/// `h_n = #{τ ∈ Sym_{2n}^J : τ ≤ σ_n}` for `n = 1..=max_n`.
pub fn genocchi_numbers(max_n: usize) -> Result<Vec<u64>> {
    if max_n > GENOCCHI_MAX_N {
        return Err(Error::BoundExceeded {
            what: "median Genocchi enumeration".into(),
            limit: GENOCCHI_MAX_N,
        });
    }
    (1..=max_n)
        .map(|n| {
            let dv = DimensionVector::complete(n)?;
            Ok(interval_poincare(&sigma_n(n)?, &dv)?.cardinality())
        })
        .collect()
}

/// `#{τ minimal : τ ≤ σ, ι(τ) = τ}`.
pub fn iota_fixed_count(sigma: &Permutation, dv: &DimensionVector) -> Result<u64> {
    if !dv.is_symplectic() {
        return Err(Error::SymplecticSetting(format!(
            "n = 2m − 1 and d stable under d ↦ 2m − d, got n = {} and d = {:?}",
            dv.n(),
            dv.dims()
        )));
    }
    if !sigma.is_iota_fixed() {
        return Err(Error::NotIotaFixed);
    }
    Ok(bruhat_interval(sigma, dv)?
        .iter()
        .filter(|t| t.is_iota_fixed())
        .count() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::from_one_line(v).unwrap()
    }

    #[test]
    fn identity_rank_matrix_is_min() {
        let r = rank_matrix(&Permutation::identity(6).unwrap());
        for i in 1..=6 {
            for j in 1..=6 {
                assert_eq!(r.get(i, j), i.min(j));
            }
        }
    }

    #[test]
    fn rank_matrix_margins() {
        let tau = perm(&[3, 6, 1, 5, 2, 4]);
        let r = rank_matrix(&tau);
        for k in 1..=6 {
            assert_eq!(r.get(6, k), k);
            assert_eq!(r.get(k, 6), k);
        }
        for i in 1..=6 {
            for j in 1..6 {
                let step = r.get(i, j + 1) - r.get(i, j);
                assert!(step <= 1);
            }
        }
    }

    #[test]
    fn leq_basic() {
        let v = perm(&[3, 1, 4, 2]);
        let id = Permutation::identity(4).unwrap();
        assert!(bruhat_leq(&id, &v).unwrap());
        assert!(bruhat_leq(&v, &v).unwrap());
        assert!(!bruhat_leq(&v, &id).unwrap());
        assert!(bruhat_leq(&id, &Permutation::identity(3).unwrap()).is_err());
    }

    #[test]
    fn quotient_counts() {
        assert_eq!(
            enumerate_quotient(&DimensionVector::complete(1).unwrap())
                .unwrap()
                .count(),
            2
        );
        assert_eq!(
            enumerate_quotient(&DimensionVector::complete(2).unwrap())
                .unwrap()
                .count(),
            12
        );
        assert_eq!(
            enumerate_quotient(&DimensionVector::complete(3).unwrap())
                .unwrap()
                .count(),
            180
        );
        assert!(enumerate_quotient(&DimensionVector::complete(7).unwrap()).is_err());
    }

    #[test]
    fn quotient_is_lexicographic() {
        let dv = DimensionVector::new(3, vec![2]).unwrap();
        let all: Vec<_> = enumerate_quotient(&dv).unwrap().collect();
        assert!(all.windows(2).all(|w| w[0].one_line() < w[1].one_line()));
        assert!(all.iter().all(|t| is_minimal_rep(t, &dv)));
    }

    #[test]
    fn small_polynomials() {
        let dv = DimensionVector::complete(1).unwrap();
        assert_eq!(
            interval_poincare(&sigma_n(1).unwrap(), &dv)
                .unwrap()
                .coeffs(),
            &[1, 1]
        );
        let dv = DimensionVector::complete(2).unwrap();
        let poly = interval_poincare(&sigma_n(2).unwrap(), &dv).unwrap();
        assert_eq!(poly.coeffs(), &[1, 2, 3, 1]);
        assert_eq!(poly.eval(2), 25);
        assert_eq!(poly.cardinality(), 7);
    }

    #[test]
    fn poincare_rejects_non_minimal() {
        let dv = DimensionVector::complete(2).unwrap();
        assert_eq!(
            interval_poincare(&perm(&[1, 3, 2, 4]), &dv),
            Err(Error::NotMinimalRepresentative)
        );
    }

    #[test]
    fn genocchi_small() {
        let h = genocchi_numbers(2).unwrap();
        assert_eq!(h, vec![2, 7]);
        assert!(genocchi_numbers(6).is_err());
    }

    #[test]
    fn iota_fixed_small() {
        let dv = DimensionVector::complete(1).unwrap();
        assert_eq!(iota_fixed_count(&sigma_n(1).unwrap(), &dv).unwrap(), 2);
        let dv = DimensionVector::complete(2).unwrap();
        assert!(matches!(
            iota_fixed_count(&sigma_n(2).unwrap(), &dv),
            Err(Error::SymplecticSetting(_))
        ));
        let dv = DimensionVector::complete(3).unwrap();
        assert_eq!(
            iota_fixed_count(&perm(&[2, 1, 3, 4, 5, 6]), &dv),
            Err(Error::NotIotaFixed)
        );
    }

    #[test]
    fn json_shape() {
        let poly = PoincarePolynomial::from_coeffs(vec![1, 2, 3, 1]);
        assert_eq!(
            serde_json::to_string(&poly).unwrap(),
            r#"{"coeffs":[1,2,3,1]}"#
        );
    }
}
