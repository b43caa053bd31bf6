//! The linear-algebra model of the degenerate flag variety `Fl^a_d` inside
//! `∏ Gr_{d_l}(V)`, `V = 𝔽_p^{n+1}` with basis `f_1, …, f_{n+1}`, and its
//! embedding `ζ` into partial flags of `W = 𝔽_p^{2n}` with basis
//! `e_1, …, e_{2n}`.
//!
//! `ζ` sends `(V_l)` to `(π_{d_l}^{-1}(V_l))`, where `π_i : U_{n+i} → V` is the
//! surjection from the coordinate subspace `U_{n+i} = ⟨e_1, …, e_{n+i}⟩`.
//! Its image is the set `Y_n` of chains with
//! `⟨e_1, …, e_{d_l − 1}⟩ ⊆ W_l ⊆ ⟨e_1, …, e_{n + d_l}⟩`.

pub mod symplectic;

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bruhat::{rank_matrix, RankMatrix};
use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gf_linalg::{subspaces_between, LinearMap, Matrix, PrimeField, Subspace, TorusElement};
use crate::permgroup::{DimensionVector, Permutation};

/// `pr_k : V → V`, the projection along `f_k`.
pub fn pr(k: usize, n: usize, field: PrimeField) -> Result<LinearMap> {
    let dim = n + 1;
    if k == 0 || k > dim {
        return Err(Error::IndexOutOfRange {
            index: k,
            bound: dim,
        });
    }
    let columns: Vec<Vec<u8>> = (1..=dim)
        .map(|c| {
            let mut col = vec![0u8; dim];
            if c != k {
                col[c - 1] = 1;
            }
            col
        })
        .collect();
    Ok(LinearMap::from_columns(field, dim, &columns))
}

/// `pr_{i,j} = pr_{j−1} ∘ … ∘ pr_{i+1} ∘ pr_i`, for `1 ≤ i < j ≤ n + 2`.
pub fn pr_range(i: usize, j: usize, n: usize, field: PrimeField) -> Result<LinearMap> {
    if i == 0 || i >= j || j > n + 2 {
        return Err(Error::IndexOutOfRange {
            index: j,
            bound: n + 2,
        });
    }
    let mut map = pr(i, n, field)?;
    for k in i + 1..j {
        map = pr(k, n, field)?.compose(&map)?;
    }
    Ok(map)
}

/// `π_i : U_{n+i} → V`:
/// `e_k ↦ 0` for `k < i`, `e_k ↦ f_k` for `i ≤ k ≤ n + 1`,
/// `e_k ↦ f_{k − n − 1}` for `n + 2 ≤ k ≤ n + i`.
pub fn pi_map(n: usize, i: usize, field: PrimeField) -> Result<LinearMap> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, bound: n });
    }
    let dim_v = n + 1;
    let columns: Vec<Vec<u8>> = (1..=n + i)
        .map(|k| {
            let mut col = vec![0u8; dim_v];
            if (i..=n + 1).contains(&k) {
                col[k - 1] = 1;
            } else if k >= n + 2 {
                col[k - n - 2] = 1;
            }
            col
        })
        .collect();
    Ok(LinearMap::from_columns(field, dim_v, &columns))
}

/// `ζ_i(U) = π_i^{-1}(U)`, as a subspace of `W`.
pub fn zeta_component(u: &Subspace, i: usize, n: usize) -> Result<Subspace> {
    let pi = pi_map(n, i, u.field())?;
    pi.preimage(u)?.embed(2 * n)
}

/// Restricts `w ⊆ U_{n+i}` and applies `π_i`.
pub fn pi_image(w: &Subspace, i: usize, n: usize) -> Result<Subspace> {
    let pi = pi_map(n, i, w.field())?;
    pi.image(&w.truncate(n + i)?)
}

/// A point `(V_1, …, V_s)` of `Fl^a_d(𝔽_p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegFlagPoint {
    spaces: Vec<Subspace>,
}

impl DegFlagPoint {
    /// Validates dimensions and `pr_{d_l, d_{l+1}}(V_l) ⊆ V_{l+1}`.
    pub fn new(spaces: Vec<Subspace>, dv: &DimensionVector) -> Result<Self> {
        let point = Self { spaces };
        point.validate(dv)?;
        Ok(point)
    }

    pub(crate) fn new_unchecked(spaces: Vec<Subspace>) -> Self {
        Self { spaces }
    }

    pub fn validate(&self, dv: &DimensionVector) -> Result<()> {
        let n = dv.n();
        if self.spaces.len() != dv.len() {
            return Err(Error::DimensionMismatch {
                expected: dv.len(),
                found: self.spaces.len(),
            });
        }
        for (v, &d) in self.spaces.iter().zip(dv.dims()) {
            if v.ambient_dim() != n + 1 {
                return Err(Error::DimensionMismatch {
                    expected: n + 1,
                    found: v.ambient_dim(),
                });
            }
            if v.dim() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: v.dim(),
                });
            }
        }
        for l in 0..dv.len().saturating_sub(1) {
            let map = pr_range(dv.dims()[l], dv.dims()[l + 1], n, self.spaces[l].field())?;
            if !self.spaces[l + 1].contains(&map.image(&self.spaces[l])?) {
                return Err(Error::InvalidCollection(format!(
                    "pr(V_{}) is not contained in V_{}",
                    l + 1,
                    l + 2
                )));
            }
        }
        Ok(())
    }

    pub fn spaces(&self) -> &[Subspace] {
        &self.spaces
    }
}

/// A partial flag `W_1 ⊂ … ⊂ W_s` in `W` with `dim W_l = 2 d_l − 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SchubertFlagPoint {
    spaces: Vec<Subspace>,
}

impl SchubertFlagPoint {
    /// Validates the ambient dimension, the dimensions and the nesting.
    pub fn new(spaces: Vec<Subspace>, dv: &DimensionVector) -> Result<Self> {
        let point = Self { spaces };
        point.check_shape(dv)?;
        if point.spaces.windows(2).any(|w| !w[1].contains(&w[0])) {
            return Err(Error::InvalidCollection("flag is not nested".into()));
        }
        Ok(point)
    }

    pub(crate) fn new_unchecked(spaces: Vec<Subspace>) -> Self {
        Self { spaces }
    }

    fn check_shape(&self, dv: &DimensionVector) -> Result<()> {
        if self.spaces.len() != dv.len() {
            return Err(Error::DimensionMismatch {
                expected: dv.len(),
                found: self.spaces.len(),
            });
        }
        for (w, dim) in self.spaces.iter().zip(dv.flag_dims()) {
            if w.ambient_dim() != 2 * dv.n() {
                return Err(Error::DimensionMismatch {
                    expected: 2 * dv.n(),
                    found: w.ambient_dim(),
                });
            }
            if w.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: w.dim(),
                });
            }
        }
        Ok(())
    }

    pub fn spaces(&self) -> &[Subspace] {
        &self.spaces
    }
}

/// `(V_l) ↦ (π_{d_l}^{-1}(V_l))`.
pub fn zeta(pt: &DegFlagPoint, dv: &DimensionVector) -> Result<SchubertFlagPoint> {
    let n = dv.n();
    let spaces = pt
        .spaces
        .iter()
        .zip(dv.dims())
        .map(|(v, &d)| zeta_component(v, d, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(SchubertFlagPoint::new_unchecked(spaces))
}

/// `(W_l) ↦ (π_{d_l}(W_l))`, the inverse of [`zeta`] on `Y_n`.
pub fn zeta_inverse(fl: &SchubertFlagPoint, dv: &DimensionVector) -> Result<DegFlagPoint> {
    let n = dv.n();
    let spaces = fl
        .spaces
        .iter()
        .zip(dv.dims())
        .map(|(w, &d)| pi_image(w, d, n))
        .collect::<Result<Vec<_>>>()?;
    DegFlagPoint::new(spaces, dv)
}

/// Membership in `Y_n`: nested, with `⟨e_1..e_{d_l−1}⟩ ⊆ W_l ⊆ ⟨e_1..e_{n+d_l}⟩`.
pub fn yn_membership(fl: &SchubertFlagPoint, dv: &DimensionVector) -> Result<bool> {
    fl.check_shape(dv)?;
    let n = dv.n();
    let field = fl.spaces[0].field();
    let nested = fl.spaces.windows(2).all(|w| w[1].contains(&w[0]));
    let bounded = fl
        .spaces
        .iter()
        .zip(dv.dims())
        .all(|(w, &d)| yn_level(w, d, n, field));
    Ok(nested && bounded)
}

/// `⟨e_1..e_{d−1}⟩ ⊆ W ⊆ ⟨e_1..e_{n+d}⟩`.
fn yn_level(w: &Subspace, d: usize, n: usize, field: PrimeField) -> bool {
    w.contains(&Subspace::standard(field, 2 * n, d - 1))
        && Subspace::standard(field, 2 * n, n + d).contains(w)
}

fn schubert_level(w: &Subspace, ranks: &RankMatrix) -> bool {
    let profile = w.standard_flag_profile();
    (1..=w.ambient_dim()).all(|k| profile[k] >= ranks.get(w.dim(), k))
}

/// `dim(W_l ∩ ⟨e_1..e_k⟩) ≥ #{r ≤ 2 d_l − 1 : σ(r) ≤ k}` for all `l` and `k`.
pub fn schubert_conditions(
    fl: &SchubertFlagPoint,
    sigma: &Permutation,
    dv: &DimensionVector,
) -> Result<bool> {
    fl.check_shape(dv)?;
    if sigma.size() != 2 * dv.n() {
        return Err(Error::SizeMismatch {
            left: sigma.size(),
            right: 2 * dv.n(),
        });
    }
    let ranks = rank_matrix(sigma);
    Ok(fl.spaces.iter().all(|w| schubert_level(w, &ranks)))
}

/// Chains tested exhaustively by [`yn_schubert_equivalence`] at most.
pub const EXHAUSTIVE_FLAG_LIMIT: u128 = 8_000_000;
/// Random chains drawn when the exhaustive test is too large.
pub const SAMPLED_FLAGS: usize = 200_000;

/// Outcome of [`yn_schubert_equivalence`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    /// Chains tested, `Y_n` included.
    pub chains: u64,
    /// Every chain of the partial flag variety was tested.
    pub exhaustive: bool,
    /// Tested chains lying in `Y_n`.
    pub in_yn: u64,
    /// Tested chains on which the two descriptions disagree.
    pub mismatches: u64,
    /// Subspaces `W` of dimension `2 d_l − 1`, over all `l`, compared one
    /// level at a time. Both descriptions are conjunctions of such
    /// single-level conditions, so zero level mismatches settles every chain.
    pub level_subspaces: u64,
    pub level_mismatches: u64,
}

/// Number of chains `W_1 ⊂ … ⊂ W_s` in `𝔽_q^m` with the given dimensions.
pub fn flag_count(q: u64, m: usize, dims: &[usize]) -> u128 {
    let gaussian = |top: usize, k: usize| -> u128 {
        let q = q as u128;
        let mut num = 1u128;
        let mut den = 1u128;
        for r in 0..k {
            num *= q.pow((top - r) as u32) - 1;
            den *= q.pow((r + 1) as u32) - 1;
        }
        num / den
    };
    let mut prev = 0;
    let mut total = 1u128;
    for &d in dims {
        total *= gaussian(m - prev, d - prev);
        prev = d;
    }
    total
}

/// Compares [`yn_membership`] with [`schubert_conditions`] for `σ_d`. Every
/// chain of the partial flag variety is tested when there are at most
/// [`EXHAUSTIVE_FLAG_LIMIT`]; otherwise all of `Y_n` plus
/// [`SAMPLED_FLAGS`] uniformly random chains (fixed seed). The single-level
/// conditions are always compared on whole Grassmannians.
pub fn yn_schubert_equivalence(
    dv: &DimensionVector,
    field: PrimeField,
) -> Result<EquivalenceReport> {
    let n = dv.n();
    let sigma = crate::permgroup::sigma_d(dv);
    let dims = dv.flag_dims();
    let ranks = rank_matrix(&sigma);
    let (mut level_subspaces, mut level_mismatches) = (0, 0);
    for &d in dv.dims() {
        for w in crate::gf_linalg::grassmannian(2 * d - 1, 2 * n, field)? {
            level_subspaces += 1;
            level_mismatches += (yn_level(&w, d, n, field) != schubert_level(&w, &ranks)) as u64;
        }
    }
    let test = |c: &[Subspace]| -> (bool, bool) {
        let fl = SchubertFlagPoint::new_unchecked(c.to_vec());
        let a = yn_membership(&fl, dv).expect("shape");
        let b = schubert_conditions(&fl, &sigma, dv).expect("shape");
        (a, a != b)
    };
    let tally = |acc: (u64, u64, u64), (inside, bad): (bool, bool)| {
        (acc.0 + 1, acc.1 + inside as u64, acc.2 + bad as u64)
    };
    let ambient = 2 * n;
    if flag_count(field.order(), ambient, &dims) <= EXHAUSTIVE_FLAG_LIMIT
        && ambient <= crate::gf_linalg::max_ambient_dim(field)
    {
        let firsts: Vec<Subspace> =
            crate::gf_linalg::grassmannian(dims[0], ambient, field)?.collect();
        let full = Subspace::full(field, ambient);
        let (chains, in_yn, mismatches) = firsts
            .into_par_iter()
            .map(|w| {
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
                    let lower = chain.last().expect("nonempty").clone();
                    for w in
                        subspaces_between(&lower, full, dims[chain.len()]).expect("same ambient")
                    {
                        chain.push(w);
                        rec(full, dims, chain, visit);
                        chain.pop();
                    }
                }
                let mut acc = (0, 0, 0);
                rec(&full, &dims, &mut vec![w], &mut |c| {
                    acc = tally(acc, test(c))
                });
                acc
            })
            .reduce(|| (0, 0, 0), |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2));
        return Ok(EquivalenceReport {
            chains,
            exhaustive: true,
            in_yn,
            mismatches,
            level_subspaces,
            level_mismatches,
        });
    }
    let mut acc = (0, 0, 0);
    for_each_yn(dv, field, |c| acc = tally(acc, test(c)))?;
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..SAMPLED_FLAGS {
        let chain = random_chain(&mut rng, field, ambient, &dims);
        acc = tally(acc, test(&chain));
    }
    Ok(EquivalenceReport {
        chains: acc.0,
        exhaustive: false,
        in_yn: acc.1,
        mismatches: acc.2,
        level_subspaces,
        level_mismatches,
    })
}

/// A uniformly random chain: the row spans of an invertible matrix.
fn random_chain(
    rng: &mut ChaCha8Rng,
    field: PrimeField,
    ambient: usize,
    dims: &[usize],
) -> Vec<Subspace> {
    loop {
        let rows: Vec<Vec<u64>> = (0..ambient)
            .map(|_| {
                (0..ambient)
                    .map(|_| rng.random_range(0..field.order()))
                    .collect()
            })
            .collect();
        let m = Matrix::from_rows(field, ambient, &rows).expect("residues in range");
        if m.rank() < ambient {
            continue;
        }
        return dims
            .iter()
            .map(|&d| Subspace::span(field, ambient, &rows[..d]).expect("residues in range"))
            .collect();
    }
}

/// Exhaustive point enumeration is limited to `n ≤ 4` at `p = 2`, `n ≤ 3` at
/// `p = 3`, and `n ≤ 2` otherwise.
pub fn check_enumeration_bounds(n: usize, field: PrimeField) -> Result<()> {
    let limit = match field.p() {
        2 => 4,
        3 => 3,
        _ => 2,
    };
    if n > limit {
        return Err(Error::BoundExceeded {
            what: format!("point enumeration at p = {}", field.p()),
            limit,
        });
    }
    Ok(())
}

struct DegFlagSearch<'a> {
    dv: &'a DimensionVector,
    full: Subspace,
    links: Vec<LinearMap>,
}

impl<'a> DegFlagSearch<'a> {
    fn new(dv: &'a DimensionVector, field: PrimeField) -> Result<Self> {
        let n = dv.n();
        let links = dv
            .dims()
            .windows(2)
            .map(|w| pr_range(w[0], w[1], n, field))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            dv,
            full: Subspace::full(field, n + 1),
            links,
        })
    }

    fn lower_bound(&self, chain: &[Subspace]) -> Subspace {
        match chain.last() {
            None => Subspace::zero(self.full.field(), self.full.ambient_dim()),
            Some(prev) => self.links[chain.len() - 1].image(prev).expect("dims agree"),
        }
    }

    fn run<F: FnMut(&[Subspace])>(&self, chain: &mut Vec<Subspace>, visit: &mut F) {
        let level = chain.len();
        if level == self.dv.len() {
            visit(chain);
            return;
        }
        let lower = self.lower_bound(chain);
        for v in subspaces_between(&lower, &self.full, self.dv.dims()[level]).expect("same ambient")
        {
            chain.push(v);
            self.run(chain, visit);
            chain.pop();
        }
    }
}

/// Calls `visit` on every `𝔽_p`-point of `Fl^a_d` in deterministic order.
pub fn for_each_degflag<F: FnMut(&[Subspace])>(
    dv: &DimensionVector,
    field: PrimeField,
    mut visit: F,
) -> Result<()> {
    check_enumeration_bounds(dv.n(), field)?;
    let search = DegFlagSearch::new(dv, field)?;
    search.run(&mut Vec::with_capacity(dv.len()), &mut visit);
    Ok(())
}

pub fn enumerate_degflag(dv: &DimensionVector, field: PrimeField) -> Result<Vec<DegFlagPoint>> {
    let mut out = Vec::new();
    for_each_degflag(dv, field, |c| {
        out.push(DegFlagPoint::new_unchecked(c.to_vec()))
    })?;
    Ok(out)
}

/// `|Fl^a_d(𝔽_p)|`, counted in parallel over the choice of `V_1`.
pub fn count_degflag(dv: &DimensionVector, field: PrimeField) -> Result<u64> {
    check_enumeration_bounds(dv.n(), field)?;
    let search = DegFlagSearch::new(dv, field)?;
    let firsts: Vec<Subspace> =
        subspaces_between(&search.lower_bound(&[]), &search.full, dv.dims()[0])?.collect();
    Ok(firsts
        .into_par_iter()
        .map(|v| {
            let mut count = 0u64;
            search.run(&mut vec![v], &mut |_| count += 1);
            count
        })
        .sum())
}

/// Calls `visit` on every `𝔽_p`-point of `Y_n`, enumerated in quotient
/// coordinates: `W_l` ranges over subspaces between
/// `W_{l−1} + ⟨e_1..e_{d_l−1}⟩` and `⟨e_1..e_{n+d_l}⟩`.
pub fn for_each_yn<F: FnMut(&[Subspace])>(
    dv: &DimensionVector,
    field: PrimeField,
    mut visit: F,
) -> Result<()> {
    check_enumeration_bounds(dv.n(), field)?;
    fn rec<F: FnMut(&[Subspace])>(
        dv: &DimensionVector,
        field: PrimeField,
        chain: &mut Vec<Subspace>,
        visit: &mut F,
    ) {
        let level = chain.len();
        if level == dv.len() {
            visit(chain);
            return;
        }
        let n = dv.n();
        let d = dv.dims()[level];
        let floor = Subspace::standard(field, 2 * n, d - 1);
        let lower = match chain.last() {
            Some(prev) => prev.sum(&floor).expect("same ambient"),
            None => floor,
        };
        let upper = Subspace::standard(field, 2 * n, n + d);
        for w in subspaces_between(&lower, &upper, 2 * d - 1).expect("same ambient") {
            chain.push(w);
            rec(dv, field, chain, visit);
            chain.pop();
        }
    }
    rec(dv, field, &mut Vec::with_capacity(dv.len()), &mut visit);
    Ok(())
}

pub fn enumerate_yn(dv: &DimensionVector, field: PrimeField) -> Result<Vec<SchubertFlagPoint>> {
    let mut out = Vec::new();
    for_each_yn(dv, field, |c| {
        out.push(SchubertFlagPoint::new_unchecked(c.to_vec()))
    })?;
    Ok(out)
}

/// Torus action on the copy `V^{(i)}`:
/// `f_k ↦ λ_k f_k` for `i ≤ k ≤ n + 1` and `f_k ↦ λ_{n+1+k} f_k` for `k < i`.
pub fn torus_on_copy(lambda: &TorusElement, i: usize, n: usize) -> Result<TorusElement> {
    if lambda.dim() != 2 * n {
        return Err(Error::DimensionMismatch {
            expected: 2 * n,
            found: lambda.dim(),
        });
    }
    let entries: Vec<u64> =
        (1..=n + 1).map(|k| if k >= i { lambda.get(k) } else { lambda.get(n + 1 + k) } as u64).collect();
    TorusElement::new(lambda.field(), &entries)
}

/// `λ · (V_l)`, with `V_l` living in the copy `V^{(d_l)}`.
pub fn torus_act_degflag(
    lambda: &TorusElement,
    pt: &DegFlagPoint,
    dv: &DimensionVector,
) -> Result<DegFlagPoint> {
    let spaces = pt
        .spaces
        .iter()
        .zip(dv.dims())
        .map(|(v, &d)| torus_on_copy(lambda, d, dv.n())?.act(v))
        .collect::<Result<Vec<_>>>()?;
    Ok(DegFlagPoint::new_unchecked(spaces))
}

pub fn torus_act_flag(lambda: &TorusElement, fl: &SchubertFlagPoint) -> Result<SchubertFlagPoint> {
    let spaces = fl
        .spaces
        .iter()
        .map(|w| lambda.act(w))
        .collect::<Result<Vec<_>>>()?;
    Ok(SchubertFlagPoint::new_unchecked(spaces))
}

/// Torus elements used by [`torus_equivariance_check`]: all of
/// `(𝔽_p^×)^{2n}` when there are at most 4096, otherwise every 97th one
/// (97 is prime, so the stride visits distinct residues).
pub fn torus_sample(field: PrimeField, n: usize) -> Vec<TorusElement> {
    let units = field.p() as u64 - 1;
    let total = units.saturating_pow(2 * n as u32);
    let all = TorusElement::all;
    if total <= 4096 {
        return all(field, 2 * n);
    }
    (0..256u64)
        .map(|i| {
            let mut code = (i * 97) % total;
            let mut entries = vec![0u64; 2 * n];
            for slot in entries.iter_mut().rev() {
                *slot = code % units + 1;
                code /= units;
            }
            TorusElement::new(field, &entries).expect("nonzero entries")
        })
        .collect()
}

/// `ζ(λ · x) = λ · ζ(x)` for every point `x` of `Fl^a_d(𝔽_p)` and every
/// sampled `λ`; also checks that `λ · x` is again a point.
pub fn torus_equivariance_check(dv: &DimensionVector, field: PrimeField) -> Result<bool> {
    let points = enumerate_degflag(dv, field)?;
    let lambdas = torus_sample(field, dv.n());
    let lookup: HashSet<&DegFlagPoint> = points.iter().collect();
    for pt in &points {
        let image = zeta(pt, dv)?;
        for lambda in &lambdas {
            let moved = torus_act_degflag(lambda, pt, dv)?;
            if !lookup.contains(&moved) || zeta(&moved, dv)? != torus_act_flag(lambda, &image)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Coordinate-subspace points of `Fl^a_d`, encoded as bitmasks over
/// `f_1, …, f_{n+1}` (bit `k − 1` for `f_k`).
pub fn coordinate_collections(dv: &DimensionVector) -> Vec<Vec<u32>> {
    let n = dv.n();
    let dims = dv.dims();
    // pr_{d_l, d_{l+1}} kills f_{d_l}, …, f_{d_{l+1} − 1}
    let killed: Vec<u32> = dims
        .windows(2)
        .map(|w| (w[0]..w[1]).fold(0u32, |m, k| m | 1 << (k - 1)))
        .collect();
    let subsets_of_size = |d: usize| -> Vec<u32> {
        (0u32..1 << (n + 1))
            .filter(|s| s.count_ones() as usize == d)
            .collect()
    };
    let by_size: Vec<Vec<u32>> = dims.iter().map(|&d| subsets_of_size(d)).collect();
    let mut out = Vec::new();
    fn rec(by_size: &[Vec<u32>], killed: &[u32], chain: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let level = chain.len();
        if level == by_size.len() {
            out.push(chain.clone());
            return;
        }
        for &s in &by_size[level] {
            if let Some(&prev) = chain.last() {
                if prev & !killed[level - 1] & !s != 0 {
                    continue;
                }
            }
            chain.push(s);
            rec(by_size, killed, chain, out);
            chain.pop();
        }
    }
    rec(&by_size, &killed, &mut Vec::new(), &mut out);
    out
}

/// Number of torus-fixed points of `Fl^a_d`, i.e. collections of coordinate
/// subspaces satisfying the projection containments.
pub fn fixed_points_count(dv: &DimensionVector) -> u64 {
    coordinate_collections(dv).len() as u64
}

/// The coordinate collections realised as points over `field`.
pub fn coordinate_points(dv: &DimensionVector, field: PrimeField) -> Vec<DegFlagPoint> {
    let n = dv.n();
    coordinate_collections(dv)
        .into_iter()
        .map(|masks| {
            let spaces = masks
                .into_iter()
                .map(|mask| {
                    let idx: Vec<usize> =
                        (1..=n + 1).filter(|k| mask & (1 << (k - 1)) != 0).collect();
                    Subspace::coordinate(field, n + 1, &idx).expect("indices in range")
                })
                .collect();
            DegFlagPoint::new_unchecked(spaces)
        })
        .collect()
}
