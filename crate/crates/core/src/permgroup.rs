//! Permutations of `Sym_{2n}` in one-line notation.
//!
//! Externally every permutation is 1-based: `one_line()[r - 1]` is `τ(r)`. The
//! internal storage is 0-based and the only conversion points are
//! [`Permutation::from_one_line`], [`Permutation::one_line`] and
//! [`Permutation::apply`].
//!
//! Composition follows `(u ∘ v)(i) = u(v(i))`: the right factor acts first.
//! With this convention the word `(2, 1, 3)` multiplies out to `[3, 1, 4, 2]`
//! in `Sym_4`, which is `σ_2`; the opposite convention gives `[2, 4, 1, 3]`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported permutation size.
pub const MAX_SIZE: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(size: usize) -> Result<Self> {
        check_size(size)?;
        Ok(Self {
            images: (0..size as u8).collect(),
        })
    }

    /// Builds a permutation from 1-based one-line notation.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let size = images.len();
        check_size(size)?;
        let mut seen = vec![false; size];
        for &x in images {
            if x == 0 || x > size || seen[x - 1] {
                return Err(Error::NotAPermutation {
                    images: images.to_vec(),
                    size,
                });
            }
            seen[x - 1] = true;
        }
        Ok(Self {
            images: images.iter().map(|&x| (x - 1) as u8).collect(),
        })
    }

    /// Simple transposition `s_i = (i, i+1)` in `Sym_size`.
    pub fn simple_reflection(i: usize, size: usize) -> Result<Self> {
        if i == 0 || i >= size {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: size.saturating_sub(1),
            });
        }
        let mut p = Self::identity(size)?;
        p.images.swap(i - 1, i);
        Ok(p)
    }

    pub(crate) fn from_zero_based(images: Vec<u8>) -> Self {
        debug_assert!(images.len() <= MAX_SIZE);
        Self { images }
    }

    pub(crate) fn zero_based(&self) -> &[u8] {
        &self.images
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// `τ(r)` for 1-based `r`.
    pub fn apply(&self, r: usize) -> usize {
        self.images[r - 1] as usize + 1
    }

    /// One-line notation, 1-based.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    /// Number of inversion pairs.
    pub fn length(&self) -> usize {
        let v = &self.images;
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Positions `k` (1-based) with `τ(k) > τ(k+1)`.
    pub fn descents(&self) -> Vec<usize> {
        self.images
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(k, _)| k + 1)
            .collect()
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        same_size(self, other)?;
        Ok(Self {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.size()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Self { images: inv }
    }

    /// The involution `ι(τ)(r) = 2n + 1 − τ(2n + 1 − r)`, conjugation by the
    /// longest element.
    pub fn iota(&self) -> Self {
        let last = self.size() as u8 - 1;
        Self {
            images: (0..self.size())
                .rev()
                .map(|r| last - self.images[r])
                .collect(),
        }
    }

    pub fn is_iota_fixed(&self) -> bool {
        self.iota() == *self
    }
}

fn check_size(size: usize) -> Result<()> {
    if size > MAX_SIZE {
        return Err(Error::PermutationTooLarge {
            size,
            max: MAX_SIZE,
        });
    }
    Ok(())
}

fn same_size(a: &Permutation, b: &Permutation) -> Result<()> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch {
            left: a.size(),
            right: b.size(),
        });
    }
    Ok(())
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.one_line())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in self.one_line() {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
            first = false;
        }
        Ok(())
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Self::from_one_line(&images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.one_line()
    }
}

pub fn compose(u: &Permutation, v: &Permutation) -> Result<Permutation> {
    u.compose(v)
}

pub fn inverse(u: &Permutation) -> Permutation {
    u.inverse()
}

pub fn length(tau: &Permutation) -> usize {
    tau.length()
}

/// `ι(τ)` after checking that `τ ∈ Sym_{2n}`.
pub fn iota_perm(tau: &Permutation, n: usize) -> Result<Permutation> {
    if tau.size() != 2 * n {
        return Err(Error::SizeMismatch {
            left: tau.size(),
            right: 2 * n,
        });
    }
    Ok(tau.iota())
}

/// Strictly increasing `d = (d_1 < … < d_s)` with `1 ≤ d_1` and `d_s ≤ n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDimensionVector")]
pub struct DimensionVector {
    n: usize,
    d: Vec<usize>,
}

#[derive(Deserialize)]
struct RawDimensionVector {
    n: usize,
    d: Vec<usize>,
}

impl TryFrom<RawDimensionVector> for DimensionVector {
    type Error = Error;

    fn try_from(raw: RawDimensionVector) -> Result<Self> {
        Self::new(raw.n, raw.d)
    }
}

impl DimensionVector {
    pub fn new(n: usize, d: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        if 2 * n > MAX_SIZE {
            return Err(Error::PermutationTooLarge {
                size: 2 * n,
                max: MAX_SIZE,
            });
        }
        if d.is_empty() {
            return Err(Error::InvalidDimensionVector("empty".into()));
        }
        if d[0] == 0 || *d.last().unwrap() > n {
            return Err(Error::InvalidDimensionVector(format!(
                "{d:?} not within 1..={n}"
            )));
        }
        if d.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidDimensionVector(format!(
                "{d:?} not strictly increasing"
            )));
        }
        Ok(Self { n, d })
    }

    /// `d = (1, 2, …, n)`.
    pub fn complete(n: usize) -> Result<Self> {
        Self::new(n, (1..=n).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dims(&self) -> &[usize] {
        &self.d
    }

    pub fn len(&self) -> usize {
        self.d.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_complete(&self) -> bool {
        self.d.len() == self.n
    }

    /// `d_t` with the conventions `d_0 = 0` and `d_{s+1} = n + 1`.
    pub fn get(&self, t: usize) -> usize {
        match t {
            0 => 0,
            t if t <= self.d.len() => self.d[t - 1],
            _ => self.n + 1,
        }
    }

    /// Dimensions `2 d_i − 1` of the members of a flag in `W = 𝔽^{2n}`.
    pub fn flag_dims(&self) -> Vec<usize> {
        self.d.iter().map(|&x| 2 * x - 1).collect()
    }

    /// `K = {1, …, 2n} \ {2 d_i − 1}`.
    pub fn k_set(&self) -> Vec<usize> {
        let excluded = self.flag_dims();
        (1..=2 * self.n).filter(|k| !excluded.contains(k)).collect()
    }

    /// Indices `k` of the simple reflections `(k, k+1)` generating `W_J`.
    pub fn generators(&self) -> Vec<usize> {
        self.k_set()
            .into_iter()
            .filter(|&k| k < 2 * self.n)
            .collect()
    }

    /// Maximal runs of consecutive positions permuted by `W_J`, 1-based and
    /// inclusive: `[1, 2d_1 − 1], [2d_1, 2d_2 − 1], …, [2d_s, 2n]`.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.d.len() + 1);
        let mut start = 1;
        for &x in &self.d {
            out.push((start, 2 * x - 1));
            start = 2 * x;
        }
        out.push((start, 2 * self.n));
        out
    }

    /// Whether `d` is stable under `d_i ↦ 2m − d_i` where `n = 2m − 1`.
    pub fn is_symplectic(&self) -> bool {
        if self.n % 2 == 0 {
            return false;
        }
        let two_m = self.n + 1;
        self.d.iter().all(|&x| self.d.contains(&(two_m - x)))
    }
}

/// `σ_n(2k) = k`, `σ_n(2k + 1) = n + 1 + k`.
pub fn sigma_n(n: usize) -> Result<Permutation> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    check_size(2 * n)?;
    let images: Vec<usize> = (1..=2 * n)
        .map(|r| if r % 2 == 0 { r / 2 } else { n + 1 + r / 2 })
        .collect();
    Permutation::from_one_line(&images)
}

/// Minimal-length representative of the coset `σ_n W_J`.
pub fn sigma_d(dv: &DimensionVector) -> Permutation {
    let n = dv.n();
    let mut images = vec![0usize; 2 * n];
    for i in 0..=dv.len() {
        let (lo, hi) = (dv.get(i), dv.get(i + 1));
        for k in (2 * lo).max(1)..lo + hi {
            if k <= 2 * n {
                images[k - 1] = k - lo;
            }
        }
        for k in lo + hi..2 * hi {
            if k <= 2 * n {
                images[k - 1] = n + 1 + k - hi;
            }
        }
    }
    Permutation::from_one_line(&images).expect("σ_d is a bijection")
}

/// `τ(k) < τ(k + 1)` for every `k ∈ K`.
pub fn is_minimal_rep(tau: &Permutation, dv: &DimensionVector) -> bool {
    tau.size() == 2 * dv.n()
        && dv
            .generators()
            .into_iter()
            .all(|k| tau.apply(k) < tau.apply(k + 1))
}

/// Multiplies out `s_{w_1} ∘ s_{w_2} ∘ … ∘ s_{w_r}` in `Sym_size` and reports
/// whether the word is reduced.
pub fn word_to_perm(word: &[usize], size: usize) -> Result<(Permutation, bool)> {
    let mut p = Permutation::identity(size)?;
    for &i in word {
        if i == 0 || i >= size {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: size.saturating_sub(1),
            });
        }
    }
    // Right-multiplying by s_i swaps the values in positions i and i+1.
    for &i in word {
        p.images.swap(i - 1, i);
    }
    let reduced = p.length() == word.len();
    Ok((p, reduced))
}
