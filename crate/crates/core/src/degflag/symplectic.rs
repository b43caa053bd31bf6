//! The symplectic involution on `Fl^a_d` and on partial flags of `W`.
//!
//! `n = 2m − 1`. The form on `W` defaults to `E`. The form `b_V` on `V` is
//! transported from `b_W` through `π_m`, using the section
//! `f_k ↦ e_k` (`k ≥ m`) and `f_k ↦ e_{2m+k}` (`k < m`).

use crate::error::{Error, Result};
use crate::gf_linalg::{perp, symplectic_form_e, FormMatrix, Matrix, PrimeField, Subspace};
use crate::permgroup::DimensionVector;

use super::{
    enumerate_degflag, enumerate_yn, pi_map, zeta_component, DegFlagPoint, SchubertFlagPoint,
};

/// Forms on `W` and `V` for a given `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticSetting {
    m: usize,
    form_w: FormMatrix,
    form_v: FormMatrix,
}

impl SymplecticSetting {
    /// `b_W = E`.
    pub fn new(m: usize, field: PrimeField) -> Result<Self> {
        if m == 0 {
            return Err(Error::SymplecticSetting("m must be positive".into()));
        }
        Self::with_form_w(m, symplectic_form_e(2 * m - 1, field))
    }

    /// Uses `form_w` on `W`; `b_V` is transported from it. Fails if the
    /// kernel of `π_m` does not pair to zero with `U_{n+m}`, or if the
    /// result is not a nondegenerate alternating form.
    pub fn with_form_w(m: usize, form_w: FormMatrix) -> Result<Self> {
        if m == 0 {
            return Err(Error::SymplecticSetting("m must be positive".into()));
        }
        let n = 2 * m - 1;
        if form_w.dim() != 2 * n {
            return Err(Error::DimensionMismatch {
                expected: 2 * n,
                found: form_w.dim(),
            });
        }
        let field = form_w.field();
        for a in 1..m {
            for b in 1..=n + m {
                if form_w.entry(a, b) != 0 {
                    return Err(Error::SymplecticSetting(format!(
                        "b_W[e_{a}, e_{b}] != 0 on ker pi_m"
                    )));
                }
            }
        }
        let section = |k: usize| if k >= m { k } else { 2 * m + k };
        let mut bv = Matrix::zeros(field, 2 * m, 2 * m);
        for a in 1..=2 * m {
            for b in 1..=2 * m {
                bv.set(a - 1, b - 1, form_w.entry(section(a), section(b)));
            }
        }
        let form_v = FormMatrix::new(bv)?;
        if !form_v.is_alternating() || !form_v.is_nondegenerate() {
            return Err(Error::SymplecticSetting(
                "transported form is not symplectic".into(),
            ));
        }
        Ok(Self { m, form_w, form_v })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        2 * self.m - 1
    }

    pub fn field(&self) -> PrimeField {
        self.form_w.field()
    }

    pub fn form_w(&self) -> &FormMatrix {
        &self.form_w
    }

    pub fn form_v(&self) -> &FormMatrix {
        &self.form_v
    }
}

/// The antidiagonal form with `b[e_k, e_{2n+1−k}] = (−1)^{k+1}` for
/// `k ≤ n`. It differs from `E` only by signs.
pub fn signed_antidiagonal_form(n: usize, field: PrimeField) -> FormMatrix {
    let size = 2 * n;
    let mut m = Matrix::zeros(field, size, size);
    for k in 0..n {
        let c = if k % 2 == 0 { 1 } else { field.neg(1) };
        m.set(k, size - 1 - k, c);
        m.set(size - 1 - k, k, field.neg(c));
    }
    FormMatrix::new(m).expect("square")
}

/// `m` for a dimension vector of the symplectic case.
fn symplectic_m(dv: &DimensionVector) -> Result<usize> {
    let n = dv.n();
    if n % 2 == 0 {
        return Err(Error::SymplecticSetting(format!(
            "n = {n} is not of the form 2m - 1"
        )));
    }
    if !dv.is_symplectic() {
        return Err(Error::SymplecticSetting(
            "dimension vector is not stable under d -> 2m - d".into(),
        ));
    }
    Ok(n.div_ceil(2))
}

fn check_setting(setting: &SymplecticSetting, dv: &DimensionVector) -> Result<()> {
    let m = symplectic_m(dv)?;
    if m != setting.m {
        return Err(Error::SymplecticSetting(format!(
            "setting has m = {}, dimension vector has m = {m}",
            setting.m
        )));
    }
    Ok(())
}

/// `(V_l) ↦ (V_{s+1−l}^⊥)`.
pub fn iota_flag(pt: &DegFlagPoint, form_v: &FormMatrix) -> Result<DegFlagPoint> {
    let spaces = pt
        .spaces()
        .iter()
        .rev()
        .map(|v| perp(v, form_v))
        .collect::<Result<Vec<_>>>()?;
    Ok(DegFlagPoint::new_unchecked(spaces))
}

/// `(W_i) ↦ (W_{s+1−i}^⊥)`.
pub fn iota_schubert_flag(
    fl: &SchubertFlagPoint,
    form_w: &FormMatrix,
) -> Result<SchubertFlagPoint> {
    let spaces = fl
        .spaces()
        .iter()
        .rev()
        .map(|w| perp(w, form_w))
        .collect::<Result<Vec<_>>>()?;
    Ok(SchubertFlagPoint::new_unchecked(spaces))
}

/// Points of `Fl^a_d(𝔽_p)` fixed by [`iota_flag`].
pub fn symplectic_fixed(
    dv: &DimensionVector,
    setting: &SymplecticSetting,
) -> Result<Vec<DegFlagPoint>> {
    check_setting(setting, dv)?;
    let mut out = Vec::new();
    for pt in enumerate_degflag(dv, setting.field())? {
        if iota_flag(&pt, setting.form_v())? == pt {
            out.push(pt);
        }
    }
    Ok(out)
}

/// Points of `Y_n(𝔽_p)` fixed by [`iota_schubert_flag`].
pub fn symplectic_fixed_yn(
    dv: &DimensionVector,
    setting: &SymplecticSetting,
) -> Result<Vec<SchubertFlagPoint>> {
    check_setting(setting, dv)?;
    let mut out = Vec::new();
    for fl in enumerate_yn(dv, setting.field())? {
        if iota_schubert_flag(&fl, setting.form_w())? == fl {
            out.push(fl);
        }
    }
    Ok(out)
}

/// Basis pairs `(e_a, e_b)`, `a ≤ n+m−i`, `b ≤ n+m+i`, `0 ≤ i < m`, at
/// which `b_V[π_{m−i} e_a, π_{m+i} e_b] ≠ b_W[e_a, e_b]`, as `(i, a, b)`.
pub fn metric_preserving_failures(
    setting: &SymplecticSetting,
) -> Result<Vec<(usize, usize, usize)>> {
    let m = setting.m;
    let n = setting.n();
    let field = setting.field();
    let mut failures = Vec::new();
    for i in 0..m {
        let left = pi_map(n, m - i, field)?;
        let right = pi_map(n, m + i, field)?;
        for a in 1..=n + m - i {
            let x = left.matrix().transpose().row(a - 1).to_vec();
            for b in 1..=n + m + i {
                let y = right.matrix().transpose().row(b - 1).to_vec();
                if setting.form_v.eval(&x, &y) != setting.form_w.entry(a, b) {
                    failures.push((i, a, b));
                }
            }
        }
    }
    Ok(failures)
}

/// `b_V[π_{m−i}(v), π_{m+i}(w)] = b_W[v, w]` on all basis pairs. Requires
/// `p` odd.
pub fn metric_preserving_check(m: usize, field: PrimeField) -> Result<bool> {
    if field.p() == 2 {
        return Err(Error::UnsupportedPrime(2));
    }
    Ok(metric_preserving_failures(&SymplecticSetting::new(m, field)?)?.is_empty())
}

/// Subspaces `U ⊆ V` and `i` with `ζ_{m−i}(U)^⊥ ≠ ζ_{m+i}(U^⊥)`, over all
/// `U` and `0 ≤ i < m`.
pub fn perp_failures(setting: &SymplecticSetting) -> Result<Vec<(usize, Subspace)>> {
    let m = setting.m;
    let n = setting.n();
    let field = setting.field();
    let mut failures = Vec::new();
    for k in 0..=n + 1 {
        for u in crate::gf_linalg::grassmannian(k, n + 1, field)? {
            let u_perp = perp(&u, setting.form_v())?;
            for i in 0..m {
                let lhs = perp(&zeta_component(&u, m - i, n)?, setting.form_w())?;
                if lhs != zeta_component(&u_perp, m + i, n)? {
                    failures.push((i, u.clone()));
                }
            }
        }
    }
    Ok(failures)
}

/// Points `x` of `Fl^a_d(𝔽_p)` with `ζ(ι x) ≠ ι ζ(x)`.
pub fn zeta_iota_failures(
    dv: &DimensionVector,
    setting: &SymplecticSetting,
) -> Result<Vec<DegFlagPoint>> {
    check_setting(setting, dv)?;
    let mut out = Vec::new();
    for pt in enumerate_degflag(dv, setting.field())? {
        let lhs = super::zeta(&iota_flag(&pt, setting.form_v())?, dv)?;
        let rhs = iota_schubert_flag(&super::zeta(&pt, dv)?, setting.form_w())?;
        if lhs != rhs {
            out.push(pt);
        }
    }
    Ok(out)
}

/// Number of coordinate collections (see [`super::coordinate_collections`])
/// fixed by `ι`. Requires `b_V` to pair each `f_k` with a single `f_{ρ(k)}`.
pub fn iota_fixed_coordinate_count(dv: &DimensionVector, form_v: &FormMatrix) -> Result<u64> {
    symplectic_m(dv)?;
    let dim = dv.n() + 1;
    if form_v.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: form_v.dim(),
        });
    }
    let mut partner = vec![0usize; dim];
    for (a, slot) in partner.iter_mut().enumerate() {
        let support: Vec<usize> = (0..dim)
            .filter(|&b| form_v.entry(a + 1, b + 1) != 0)
            .collect();
        match support[..] {
            [b] => *slot = b,
            _ => return Err(Error::SymplecticSetting("b_V is not monomial".into())),
        }
    }
    let full = (1u32 << dim) - 1;
    let perp_mask = |s: u32| {
        let image = (0..dim)
            .filter(|&k| s & (1 << k) != 0)
            .fold(0u32, |acc, k| acc | 1 << partner[k]);
        full & !image
    };
    Ok(super::coordinate_collections(dv)
        .into_iter()
        .filter(|c| {
            c.iter()
                .rev()
                .zip(c)
                .all(|(&far, &near)| perp_mask(far) == near)
        })
        .count() as u64)
}
