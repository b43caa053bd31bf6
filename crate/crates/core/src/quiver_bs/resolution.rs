//! Collections indexed by `Γ_n`: the resolution `R_n`, the model `B_n` of
//! the Bott–Samelson variety, and the maps between them.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::degflag::{enumerate_degflag, pr, zeta, DegFlagPoint, SchubertFlagPoint};
use crate::error::{Error, Result};
use crate::gf_linalg::{subspaces_between, LinearMap, PrimeField, Subspace};
use crate::permgroup::DimensionVector;

use super::{BetaOrder, QuiverVertex};

/// Upper bound on `(1 + p)^N` for [`enumerate_rn`] and [`enumerate_bn`].
pub const TOWER_MAX_POINTS: u64 = 60_000;

fn check_tower_bounds(n: usize, field: PrimeField) -> Result<()> {
    let big_n = (n * (n + 1) / 2) as u32;
    let size = (field.order() + 1).checked_pow(big_n);
    if size.is_none_or(|s| s > TOWER_MAX_POINTS) {
        return Err(Error::BoundExceeded {
            what: format!("(1 + {})^{big_n} collections", field.p()),
            limit: TOWER_MAX_POINTS as usize,
        });
    }
    Ok(())
}

fn serialize_collection<S: Serializer>(
    spaces: &[Subspace],
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    let n = n_from_len(spaces.len())
        .ok_or_else(|| serde::ser::Error::custom("collection size is not triangular"))?;
    let order = BetaOrder::new(n).map_err(serde::ser::Error::custom)?;
    let mut map = serializer.serialize_map(Some(spaces.len()))?;
    for (v, u) in order.vertices().iter().zip(spaces) {
        map.serialize_entry(&v.label(), u)?;
    }
    map.end()
}

fn n_from_len(len: usize) -> Option<usize> {
    (1..)
        .take_while(|n| n * (n + 1) / 2 <= len)
        .find(|n| n * (n + 1) / 2 == len)
}

struct CollectionVisitor;

impl<'de> Visitor<'de> for CollectionVisitor {
    type Value = Vec<Subspace>;

    fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
        f.write_str("a map from vertex labels a_i_j to subspaces")
    }

    fn visit_map<A: MapAccess<'de>>(
        self,
        mut access: A,
    ) -> std::result::Result<Self::Value, A::Error> {
        let mut entries = BTreeMap::new();
        while let Some((key, value)) = access.next_entry::<String, Subspace>()? {
            let v = QuiverVertex::from_label(&key)
                .ok_or_else(|| de::Error::custom(format!("bad label {key}")))?;
            if entries.insert(v, value).is_some() {
                return Err(de::Error::custom(format!("duplicate label {key}")));
            }
        }
        let n = n_from_len(entries.len())
            .ok_or_else(|| de::Error::custom("collection size is not triangular"))?;
        let order = BetaOrder::new(n).map_err(de::Error::custom)?;
        order
            .vertices()
            .iter()
            .map(|v| {
                entries
                    .remove(v)
                    .ok_or_else(|| de::Error::custom(format!("missing {}", v.label())))
            })
            .collect()
    }
}

fn deserialize_collection<'de, D: Deserializer<'de>>(
    deserializer: D,
) -> std::result::Result<Vec<Subspace>, D::Error> {
    deserializer.deserialize_map(CollectionVisitor)
}

/// A point `(Z_{β_k})_{k=1}^N` of `R_n`, `Z_{β_k} ⊆ V`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RnPoint {
    spaces: Vec<Subspace>,
}

/// A point `(U_{β_k})_{k=1}^N` of `B_n`, `U_{β_k} ⊆ W`; the decorated
/// entries `U_{β_{−t}} = F_t` are implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BnPoint {
    spaces: Vec<Subspace>,
}

macro_rules! collection_impls {
    ($ty:ident) => {
        impl $ty {
            /// Entries in β-order.
            pub fn spaces(&self) -> &[Subspace] {
                &self.spaces
            }

            /// The entry at vertex `v` of `Γ_n`.
            pub fn get(&self, order: &BetaOrder, v: QuiverVertex) -> Option<&Subspace> {
                let s = order.position(v)?;
                (s >= 1).then(|| &self.spaces[s as usize - 1])
            }
        }

        impl Serialize for $ty {
            fn serialize<S: Serializer>(
                &self,
                serializer: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                serialize_collection(&self.spaces, serializer)
            }
        }

        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: Deserializer<'de>>(
                deserializer: D,
            ) -> std::result::Result<Self, D::Error> {
                Ok(Self {
                    spaces: deserialize_collection(deserializer)?,
                })
            }
        }
    };
}

collection_impls!(RnPoint);
collection_impls!(BnPoint);

/// Per vertex `β_k`: the subspace `Z_{β_k}` (or `U_{β_k}`) ranges over
/// subspaces between `lower` and `upper` of dimension `dim`, both bounds
/// depending on the entries already chosen.
trait Tower: Sync {
    fn len(&self) -> usize;
    fn bounds(&self, chain: &[Subspace]) -> (Subspace, Subspace, usize);

    fn run<F: FnMut(&[Subspace], usize)>(&self, chain: &mut Vec<Subspace>, visit: &mut F) {
        let (lower, upper, dim) = self.bounds(chain);
        let level = chain.len();
        let mut children = 0;
        for z in subspaces_between(&lower, &upper, dim).expect("same ambient") {
            children += 1;
            chain.push(z);
            if chain.len() == self.len() {
                visit(chain, 0);
            } else {
                self.run(chain, visit);
            }
            chain.pop();
        }
        // report the fiber size of the truncation map over this prefix
        visit(&chain[..level], children);
    }

    /// Leaves in deterministic order, computed in parallel over the first
    /// entry, plus the fiber-size histogram.
    fn collect(&self) -> (Vec<Vec<Subspace>>, BTreeMap<usize, u64>) {
        let (lower, upper, dim) = self.bounds(&[]);
        let firsts: Vec<Subspace> = subspaces_between(&lower, &upper, dim)
            .expect("same ambient")
            .collect();
        let mut histogram = BTreeMap::new();
        *histogram.entry(firsts.len()).or_insert(0) += 1;
        let parts: Vec<(Vec<Vec<Subspace>>, BTreeMap<usize, u64>)> = firsts
            .into_par_iter()
            .map(|z| {
                let mut leaves = Vec::new();
                let mut hist = BTreeMap::new();
                let mut chain = vec![z];
                if self.len() == 1 {
                    leaves.push(chain.clone());
                } else {
                    self.run(&mut chain, &mut |c, children| {
                        if c.len() == self.len() {
                            leaves.push(c.to_vec());
                        } else {
                            *hist.entry(children).or_insert(0) += 1;
                        }
                    });
                }
                (leaves, hist)
            })
            .collect();
        let mut leaves = Vec::new();
        for (part, hist) in parts {
            leaves.extend(part);
            for (k, v) in hist {
                *histogram.entry(k).or_insert(0) += v;
            }
        }
        (leaves, histogram)
    }
}

struct RnTower {
    dim_v: usize,
    field: PrimeField,
    minus: Vec<Option<usize>>,
    plus: Vec<Option<usize>>,
    ambient: Vec<Subspace>,
    projections: Vec<LinearMap>,
    dims: Vec<usize>,
}

impl RnTower {
    fn new(order: &BetaOrder, field: PrimeField) -> Result<Self> {
        let n = order.n();
        let slot = |v: Option<QuiverVertex>| -> Option<usize> {
            let s = order.position(v?)?;
            (s >= 1).then(|| s as usize - 1)
        };
        let vs = order.vertices();
        Ok(Self {
            dim_v: n + 1,
            field,
            minus: vs.iter().map(|v| slot(v.minus())).collect(),
            plus: vs.iter().map(|v| slot(Some(v.plus()))).collect(),
            // V_β = ⟨f_1..f_{i−1}, f_j..f_{n+1}⟩
            ambient: vs
                .iter()
                .map(|v| {
                    let idx: Vec<usize> = (1..v.i).chain(v.j..=n + 1).collect();
                    Subspace::coordinate(field, n + 1, &idx)
                })
                .collect::<Result<_>>()?,
            projections: vs
                .iter()
                .map(|v| pr(v.j, n, field))
                .collect::<Result<_>>()?,
            dims: vs.iter().map(|v| v.i).collect(),
        })
    }
}

impl Tower for RnTower {
    fn len(&self) -> usize {
        self.dims.len()
    }

    fn bounds(&self, chain: &[Subspace]) -> (Subspace, Subspace, usize) {
        let k = chain.len();
        let lower = match self.minus[k] {
            Some(s) => chain[s].clone(),
            None => Subspace::zero(self.field, self.dim_v),
        };
        let upper = match self.plus[k] {
            Some(s) => {
                let back = self.projections[k].preimage(&chain[s]).expect("square map");
                self.ambient[k].intersect(&back).expect("same ambient")
            }
            None => self.ambient[k].clone(),
        };
        (lower, upper, self.dims[k])
    }
}

struct BnTower {
    field: PrimeField,
    ambient: usize,
    // Err(t) stands for the decorated entry F_t
    minus: Vec<std::result::Result<usize, usize>>,
    plus: Vec<std::result::Result<usize, usize>>,
    caps: Vec<usize>,
    dims: Vec<usize>,
}

impl BnTower {
    fn new(order: &BetaOrder, field: PrimeField) -> Self {
        let slot = |v: QuiverVertex| -> std::result::Result<usize, usize> {
            let s = order.position(v).expect("vertex of the decorated quiver");
            if s >= 1 {
                Ok(s as usize - 1)
            } else {
                Err((-s) as usize)
            }
        };
        let vs = order.vertices();
        Self {
            field,
            ambient: 2 * order.n(),
            minus: vs.iter().map(|v| slot(v.minus().expect("i ≥ 1"))).collect(),
            plus: vs.iter().map(|v| slot(v.plus())).collect(),
            caps: vs.iter().map(|v| order.n() + v.i).collect(),
            dims: vs.iter().map(|v| v.column()).collect(),
        }
    }

    fn entry(&self, chain: &[Subspace], slot: std::result::Result<usize, usize>) -> Subspace {
        match slot {
            Ok(s) => chain[s].clone(),
            Err(t) => Subspace::standard(self.field, self.ambient, t),
        }
    }
}

impl Tower for BnTower {
    fn len(&self) -> usize {
        self.dims.len()
    }

    fn bounds(&self, chain: &[Subspace]) -> (Subspace, Subspace, usize) {
        let k = chain.len();
        let lower = self.entry(chain, self.minus[k]);
        let cap = Subspace::standard(self.field, self.ambient, self.caps[k]);
        let upper = self
            .entry(chain, self.plus[k])
            .intersect(&cap)
            .expect("same ambient");
        (lower, upper, self.dims[k])
    }
}

/// All points of `R_n(𝔽_p)` in β-order lexicographic order.
pub fn enumerate_rn(n: usize, field: PrimeField) -> Result<Vec<RnPoint>> {
    check_tower_bounds(n, field)?;
    let order = BetaOrder::new(n)?;
    let (leaves, _) = RnTower::new(&order, field)?.collect();
    Ok(leaves
        .into_iter()
        .map(|spaces| RnPoint { spaces })
        .collect())
}

pub fn count_rn(n: usize, field: PrimeField) -> Result<u64> {
    Ok(enumerate_rn(n, field)?.len() as u64)
}

/// Fiber size of `R_n(s+1) → R_n(s)` mapped to the number of points of
/// `R_n(s)` (over all `0 ≤ s < N`) with that fiber size.
pub fn rn_fiber_histogram(n: usize, field: PrimeField) -> Result<BTreeMap<usize, u64>> {
    check_tower_bounds(n, field)?;
    let order = BetaOrder::new(n)?;
    Ok(RnTower::new(&order, field)?.collect().1)
}

/// All points of `B_n(𝔽_p)` in β-order lexicographic order.
pub fn enumerate_bn(n: usize, field: PrimeField) -> Result<Vec<BnPoint>> {
    check_tower_bounds(n, field)?;
    let order = BetaOrder::new(n)?;
    let (leaves, _) = BnTower::new(&order, field).collect();
    Ok(leaves
        .into_iter()
        .map(|spaces| BnPoint { spaces })
        .collect())
}

pub fn count_bn(n: usize, field: PrimeField) -> Result<u64> {
    Ok(enumerate_bn(n, field)?.len() as u64)
}

fn check_len(len: usize, order: &BetaOrder) -> Result<()> {
    if len != order.len() {
        return Err(Error::InvalidCollection(format!(
            "expected {} entries, found {len}",
            order.len()
        )));
    }
    Ok(())
}

/// `U_{β_k} = π_{j_k}^{-1}(Z_{β_k})`.
pub fn zeta_quiver(pt: &RnPoint, order: &BetaOrder) -> Result<BnPoint> {
    check_len(pt.spaces.len(), order)?;
    let n = order.n();
    let spaces = order
        .vertices()
        .iter()
        .zip(&pt.spaces)
        .map(|(v, z)| crate::degflag::zeta_component(z, v.j, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(BnPoint { spaces })
}

/// `(Z_{α_{k,k}})_{k=1}^n`.
pub fn pn(pt: &RnPoint, order: &BetaOrder) -> Result<DegFlagPoint> {
    check_len(pt.spaces.len(), order)?;
    let n = order.n();
    let spaces = (1..=n)
        .map(|k| {
            pt.get(order, QuiverVertex::new(k, k))
                .cloned()
                .expect("diagonal vertex")
        })
        .collect();
    DegFlagPoint::new(spaces, &DimensionVector::complete(n)?)
}

/// A point `(U^{β_k}_•)_{k=0}^N` of `BS_n`; each flag is stored as
/// `U_1 ⊂ … ⊂ U_{2n−1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BsPoint {
    flags: Vec<Vec<Subspace>>,
}

impl BsPoint {
    pub fn flags(&self) -> &[Vec<Subspace>] {
        &self.flags
    }
}

/// `U^{β_k}_t = U_{(β_k : t)}`, validated: every `U^{β_k}_•` is a complete
/// flag, `U^{β_0}_•` is the standard flag, and consecutive flags are in
/// relative position `ℓ_{k+1}`.
pub fn psi(pt: &BnPoint, order: &BetaOrder) -> Result<BsPoint> {
    check_len(pt.spaces.len(), order)?;
    let n = order.n();
    let field = pt.spaces[0].field();
    let mut flags = Vec::with_capacity(order.len() + 1);
    for k in 0..=order.len() as isize {
        let flag = (1..2 * n)
            .map(|t| {
                let s = order.lookup(k, t)?;
                Ok(if s >= 1 {
                    pt.spaces[s as usize - 1].clone()
                } else {
                    Subspace::standard(field, 2 * n, t)
                })
            })
            .collect::<Result<Vec<_>>>()?;
        flags.push(flag);
    }
    let point = BsPoint { flags };
    validate_bs(&point, order)?;
    Ok(point)
}

fn validate_bs(pt: &BsPoint, order: &BetaOrder) -> Result<()> {
    let n = order.n();
    if pt.flags.len() != order.len() + 1 {
        return Err(Error::InvalidCollection(format!(
            "expected {} flags",
            order.len() + 1
        )));
    }
    for flag in &pt.flags {
        let complete = flag.len() == 2 * n - 1
            && flag
                .iter()
                .enumerate()
                .all(|(t, u)| u.dim() == t + 1 && u.ambient_dim() == 2 * n)
            && flag.windows(2).all(|w| w[1].contains(&w[0]));
        if !complete {
            return Err(Error::InvalidCollection("not a complete flag".into()));
        }
    }
    let field = pt.flags[0][0].field();
    if pt.flags[0]
        .iter()
        .enumerate()
        .any(|(t, u)| *u != Subspace::standard(field, 2 * n, t + 1))
    {
        return Err(Error::InvalidCollection(
            "first flag is not the standard flag".into(),
        ));
    }
    for (k, w) in pt.flags.windows(2).enumerate() {
        let column = order.vertex(k as isize + 1).column();
        if (1..2 * n).any(|t| t != column && w[0][t - 1] != w[1][t - 1]) {
            return Err(Error::InvalidCollection(format!(
                "flags {k} and {} not in relative position {column}",
                k + 1
            )));
        }
    }
    Ok(())
}

/// `U_{β_k} = U^{β_k}_{ℓ_k}`.
pub fn theta(pt: &BsPoint, order: &BetaOrder) -> Result<BnPoint> {
    validate_bs(pt, order)?;
    let spaces = order
        .vertices()
        .iter()
        .enumerate()
        .map(|(k, v)| pt.flags[k + 1][v.column() - 1].clone())
        .collect();
    Ok(BnPoint { spaces })
}

/// `(U^{β_N}_{2k−1})_{k=1}^n`.
pub fn rho_of_psi(pt: &BsPoint) -> Result<SchubertFlagPoint> {
    let last = pt
        .flags
        .last()
        .ok_or_else(|| Error::InvalidCollection("empty".into()))?;
    let n = last.len().div_ceil(2);
    let spaces = (1..=n).map(|k| last[2 * k - 2].clone()).collect();
    SchubertFlagPoint::new(spaces, &DimensionVector::complete(n)?)
}

/// Outcome of the resolution checks for one `(n, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesingSummary {
    pub rn_count: u64,
    pub bn_count: u64,
    pub fiber_histogram: BTreeMap<usize, u64>,
    /// `ζ_quiver` is injective and its image is `B_n(𝔽_p)`.
    pub zeta_bijective: bool,
    /// `θ(ψ(x)) = x` for all `x ∈ B_n(𝔽_p)` (`ψ` validates relative positions).
    pub psi_valid: bool,
    /// `ζ(p_n(x)) = ρ_n(ψ(ζ_quiver(x)))` for all `x ∈ R_n(𝔽_p)`.
    pub square_commutes: bool,
    /// `p_n(R_n(𝔽_p)) = Fl^a_{n+1}(𝔽_p)`.
    pub pn_surjective: bool,
}

impl DesingSummary {
    pub fn passed(&self) -> bool {
        self.rn_count == self.bn_count
            && self.zeta_bijective
            && self.psi_valid
            && self.square_commutes
            && self.pn_surjective
    }
}

pub fn desing_check(n: usize, field: PrimeField) -> Result<DesingSummary> {
    let order = BetaOrder::new(n)?;
    let rn = enumerate_rn(n, field)?;
    let bn = enumerate_bn(n, field)?;
    let fiber_histogram = rn_fiber_histogram(n, field)?;
    let images = rn
        .iter()
        .map(|x| zeta_quiver(x, &order))
        .collect::<Result<Vec<_>>>()?;
    let image_set: HashSet<&BnPoint> = images.iter().collect();
    let bn_set: HashSet<&BnPoint> = bn.iter().collect();
    let zeta_bijective = image_set.len() == rn.len() && image_set == bn_set;
    let mut psi_valid = true;
    for x in &bn {
        match psi(x, &order) {
            Ok(bs) => psi_valid &= theta(&bs, &order)? == *x,
            Err(Error::InvalidCollection(_)) => psi_valid = false,
            Err(e) => return Err(e),
        }
    }
    let dv = DimensionVector::complete(n)?;
    let mut square_commutes = true;
    let mut pn_image = HashSet::new();
    for (x, u) in rn.iter().zip(&images) {
        let flag = pn(x, &order)?;
        let lhs = zeta(&flag, &dv)?;
        square_commutes &= psi(u, &order)
            .and_then(|bs| rho_of_psi(&bs))
            .is_ok_and(|rhs| rhs == lhs);
        pn_image.insert(flag);
    }
    let degflag: HashSet<DegFlagPoint> = enumerate_degflag(&dv, field)?.into_iter().collect();
    Ok(DesingSummary {
        rn_count: rn.len() as u64,
        bn_count: bn.len() as u64,
        fiber_histogram,
        zeta_bijective,
        psi_valid,
        square_commutes,
        pn_surjective: pn_image == degflag,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    #[test]
    fn r1_is_projective_line() {
        assert_eq!(count_rn(1, f2()).unwrap(), 3);
        assert_eq!(count_bn(1, f2()).unwrap(), 3);
    }

    #[test]
    fn n2_counts_and_fibers() {
        assert_eq!(count_rn(2, f2()).unwrap(), 27);
        assert_eq!(count_bn(2, f2()).unwrap(), 27);
        let hist = rn_fiber_histogram(2, f2()).unwrap();
        // 1 + 3 + 9 truncated points, all with fiber P^1(F_2)
        assert_eq!(hist, BTreeMap::from([(3, 13)]));
    }

    #[test]
    fn desing_n2() {
        let summary = desing_check(2, f2()).unwrap();
        assert!(summary.passed(), "{summary:?}");
    }

    #[test]
    fn bounds() {
        assert!(enumerate_rn(5, f2()).is_err());
        assert!(enumerate_bn(4, PrimeField::new(3).unwrap()).is_err());
    }

    #[test]
    fn theta_rejects_broken_flags() {
        let order = BetaOrder::new(2).unwrap();
        let x = enumerate_bn(2, f2()).unwrap().pop().unwrap();
        let mut bs = psi(&x, &order).unwrap();
        bs.flags[1].swap(0, 1);
        assert!(theta(&bs, &order).is_err());
    }

    #[test]
    fn json_map_in_beta_order() {
        let x = enumerate_rn(2, f2()).unwrap().remove(0);
        let json = serde_json::to_string(&x).unwrap();
        assert!(json.starts_with(r#"{"a_1_2":"#));
        let a11 = json.find("a_1_1").unwrap();
        assert!(json.find("a_1_2").unwrap() < a11 && a11 < json.find("a_2_2").unwrap());
        let back: RnPoint = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<RnPoint>(
            r#"{"a_1_1":{"p":2,"ambient_dim":3,"basis":[[1,0,0]]}}"#
        )
        .is_ok());
        assert!(serde_json::from_str::<RnPoint>(
            r#"{"a_2_2":{"p":2,"ambient_dim":3,"basis":[[1,0,0]]}}"#
        )
        .is_err());
    }
}
