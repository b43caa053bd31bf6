//! The involution on `Fl^a_d` and `Y_n` for `n = 2m − 1`.

use std::collections::BTreeSet;

use degflag_core::bruhat::iota_fixed_count;
use degflag_core::degflag::symplectic::{
    iota_fixed_coordinate_count, iota_flag, iota_schubert_flag, metric_preserving_check,
    metric_preserving_failures, perp_failures, signed_antidiagonal_form, symplectic_fixed,
    symplectic_fixed_yn, zeta_iota_failures, SymplecticSetting,
};
use degflag_core::degflag::{coordinate_points, enumerate_degflag, enumerate_yn};
use degflag_core::gf_linalg::{grassmannian, symplectic_form_e, FormMatrix, PrimeField, Subspace};
use degflag_core::permgroup::{sigma_d, DimensionVector};
use degflag_core::Error;

fn f(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn complete(n: usize) -> DimensionVector {
    DimensionVector::complete(n).unwrap()
}

fn signed(m: usize, p: u64) -> SymplecticSetting {
    SymplecticSetting::with_form_w(m, signed_antidiagonal_form(2 * m - 1, f(p))).unwrap()
}

fn symplectic_dvs(n: usize) -> Vec<DimensionVector> {
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let d: Vec<usize> = (1..=n).filter(|k| mask >> (k - 1) & 1 == 1).collect();
        let dv = DimensionVector::new(n, d).unwrap();
        if dv.is_symplectic() {
            out.push(dv);
        }
    }
    out
}

/// `U^⊥` by testing every vector of the ambient space.
fn brute_perp(u: &Subspace, form: &FormMatrix) -> BTreeSet<Vec<u8>> {
    let field = u.field();
    let dim = form.dim();
    let p = field.p() as usize;
    let vectors = u.vectors();
    (0..p.pow(dim as u32))
        .map(|mut code| {
            (0..dim)
                .map(|_| {
                    let x = (code % p) as u8;
                    code /= p;
                    x
                })
                .collect::<Vec<u8>>()
        })
        .filter(|w| vectors.iter().all(|x| form.eval(x, w) == 0))
        .collect()
}

#[test]
fn forms_are_symplectic() {
    for p in [2, 3, 5, 7] {
        for n in 1..=5 {
            for form in [
                symplectic_form_e(n, f(p)),
                signed_antidiagonal_form(n, f(p)),
            ] {
                assert!(
                    form.is_alternating() && form.is_nondegenerate(),
                    "n={n} p={p}"
                );
            }
        }
    }
}

#[test]
fn transported_forms_are_symplectic() {
    for p in [3, 5] {
        for m in 1..=4 {
            for setting in [SymplecticSetting::new(m, f(p)).unwrap(), signed(m, p)] {
                assert!(setting.form_v().is_alternating() && setting.form_v().is_nondegenerate());
                assert_eq!(setting.n(), 2 * m - 1);
            }
        }
    }
}

#[test]
fn kernel_must_be_isotropic_against_u() {
    // e_1 spans ker π_2 for m = 2; pairing it with e_2 makes b_V ill-defined.
    let field = f(3);
    let mut m = signed_antidiagonal_form(3, field).matrix().clone();
    m.set(0, 1, 1);
    m.set(1, 0, 2);
    let form = FormMatrix::new(m).unwrap();
    assert!(matches!(
        SymplecticSetting::with_form_w(2, form),
        Err(Error::SymplecticSetting(_))
    ));
}

#[test]
fn metric_identity_with_e_fails_at_one_pair_per_level_pair() {
    // With E, b_V(f_j, f_{2m+1−j}) = −1 at j < m while E(e_j, e_{2n+1−j}) = +1.
    for p in [3, 5, 7] {
        let setting = SymplecticSetting::new(2, f(p)).unwrap();
        assert_eq!(
            metric_preserving_failures(&setting).unwrap(),
            vec![(1, 1, 6)],
            "p={p}"
        );
        assert_eq!(metric_preserving_check(2, f(p)).unwrap(), false);
    }
    for m in 1..=4 {
        let setting = SymplecticSetting::new(m, f(3)).unwrap();
        assert_eq!(
            metric_preserving_failures(&setting).unwrap().len(),
            m * (m - 1) / 2,
            "m={m}"
        );
    }
    assert_eq!(metric_preserving_check(1, f(3)).unwrap(), true);
    assert_eq!(
        metric_preserving_check(2, f(2)),
        Err(Error::UnsupportedPrime(2))
    );
}

#[test]
fn metric_identity_with_signed_form() {
    for p in [3, 5, 7] {
        for m in 1..=5 {
            assert!(
                metric_preserving_failures(&signed(m, p))
                    .unwrap()
                    .is_empty(),
                "m={m} p={p}"
            );
        }
    }
}

#[test]
fn perp_identity_with_signed_form() {
    for (m, p) in [(1, 3), (2, 3), (2, 5), (3, 3)] {
        assert!(
            perp_failures(&signed(m, p)).unwrap().is_empty(),
            "m={m} p={p}"
        );
    }
    assert_eq!(
        perp_failures(&SymplecticSetting::new(2, f(3)).unwrap())
            .unwrap()
            .len(),
        156
    );
}

#[test]
fn perp_matches_brute_force_on_v() {
    let setting = signed(2, 3);
    for k in 0..=4 {
        for u in grassmannian(k, 4, f(3)).unwrap() {
            let got: BTreeSet<Vec<u8>> = degflag_core::gf_linalg::perp(&u, setting.form_v())
                .unwrap()
                .vectors()
                .into_iter()
                .collect();
            assert_eq!(got, brute_perp(&u, setting.form_v()));
        }
    }
}

#[test]
fn iota_is_an_involution_on_both_sides() {
    for setting in [SymplecticSetting::new(2, f(3)).unwrap(), signed(2, 3)] {
        for dv in symplectic_dvs(3) {
            for x in enumerate_degflag(&dv, f(3)).unwrap() {
                let y = iota_flag(&x, setting.form_v()).unwrap();
                y.validate(&dv).unwrap();
                assert_eq!(iota_flag(&y, setting.form_v()).unwrap(), x);
            }
            for c in enumerate_yn(&dv, f(3)).unwrap() {
                let y = iota_schubert_flag(&c, setting.form_w()).unwrap();
                assert_eq!(iota_schubert_flag(&y, setting.form_w()).unwrap(), c);
            }
        }
    }
}

#[test]
fn zeta_intertwines_iota_with_signed_form() {
    let setting = signed(2, 3);
    for dv in symplectic_dvs(3) {
        assert!(
            zeta_iota_failures(&dv, &setting).unwrap().is_empty(),
            "{dv:?}"
        );
    }
}

#[test]
fn zeta_does_not_intertwine_iota_with_e() {
    let setting = SymplecticSetting::new(2, f(3)).unwrap();
    assert_eq!(
        zeta_iota_failures(&complete(3), &setting).unwrap().len(),
        2628
    );
    let partial = DimensionVector::new(3, vec![2]).unwrap();
    assert!(zeta_iota_failures(&partial, &setting).unwrap().is_empty());
}

#[test]
fn fixed_point_counts_agree() {
    for setting in [SymplecticSetting::new(2, f(3)).unwrap(), signed(2, 3)] {
        for dv in symplectic_dvs(3) {
            let a = symplectic_fixed(&dv, &setting).unwrap().len();
            let b = symplectic_fixed_yn(&dv, &setting).unwrap().len();
            assert_eq!(a, b, "{dv:?}");
        }
    }
    assert_eq!(
        symplectic_fixed(&complete(3), &signed(2, 3)).unwrap().len(),
        196
    );
}

#[test]
fn coordinate_fixed_points_match_weyl_side() {
    for setting in [SymplecticSetting::new(2, f(3)).unwrap(), signed(2, 3)] {
        for dv in symplectic_dvs(3) {
            let direct = coordinate_points(&dv, f(3))
                .into_iter()
                .filter(|x| iota_flag(x, setting.form_v()).unwrap() == *x)
                .count() as u64;
            let combinatorial = iota_fixed_coordinate_count(&dv, setting.form_v()).unwrap();
            assert_eq!(direct, combinatorial, "{dv:?}");
            assert_eq!(
                combinatorial,
                iota_fixed_count(&sigma_d(&dv), &dv).unwrap(),
                "{dv:?}"
            );
        }
    }
    let dv = complete(5);
    let form = signed(3, 3);
    assert_eq!(
        iota_fixed_coordinate_count(&dv, form.form_v()).unwrap(),
        iota_fixed_count(&sigma_d(&dv), &dv).unwrap()
    );
}

#[test]
fn m1_is_the_projective_line() {
    for p in [3, 5] {
        let setting = signed(1, p);
        let dv = complete(1);
        assert_eq!(symplectic_fixed(&dv, &setting).unwrap().len() as u64, p + 1);
        assert!(zeta_iota_failures(&dv, &setting).unwrap().is_empty());
    }
}
