//! Points of `Fl^a_d` and `Y_n` against brute force over products of
//! Grassmannians and explicit vector sets.

use std::collections::{BTreeSet, HashSet};

use degflag_core::bruhat::interval_poincare;
use degflag_core::degflag::{
    coordinate_points, count_degflag, enumerate_degflag, enumerate_yn, fixed_points_count,
    torus_act_degflag, torus_equivariance_check, yn_membership, yn_schubert_equivalence, zeta,
    zeta_inverse, DegFlagPoint, SchubertFlagPoint,
};
use degflag_core::gf_linalg::{for_each_flag, grassmannian, PrimeField, Subspace, TorusElement};
use degflag_core::permgroup::{sigma_d, DimensionVector};
use itertools::Itertools;

fn f(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn proper_dimension_vectors(n: usize) -> Vec<DimensionVector> {
    (1..=n)
        .powerset()
        .filter(|d| !d.is_empty() && d.len() < n)
        .map(|d| DimensionVector::new(n, d).unwrap())
        .collect()
}

fn all_vectors(field: PrimeField, m: usize) -> Vec<Vec<u8>> {
    let p = field.p() as usize;
    (0..p.pow(m as u32))
        .map(|mut code| {
            (0..m)
                .map(|_| {
                    let x = (code % p) as u8;
                    code /= p;
                    x
                })
                .collect()
        })
        .collect()
}

/// Zeroes the coordinates `f_i, …, f_{j−1}` (1-based).
fn kill(v: &[u8], i: usize, j: usize) -> Vec<u8> {
    v.iter()
        .enumerate()
        .map(|(k, &x)| if (i..j).contains(&(k + 1)) { 0 } else { x })
        .collect()
}

/// Tuples in `∏ Gr_{d_l}(V)` with `pr_{d_l, d_{l+1}} V_l ⊆ V_{l+1}`, tested
/// vector by vector.
fn brute_degflag(dv: &DimensionVector, field: PrimeField) -> BTreeSet<Vec<Subspace>> {
    let n = dv.n();
    let grass: Vec<Vec<Subspace>> = dv
        .dims()
        .iter()
        .map(|&d| grassmannian(d, n + 1, field).unwrap().collect())
        .collect();
    grass
        .into_iter()
        .multi_cartesian_product()
        .filter(|tuple| {
            tuple.windows(2).zip(dv.dims().windows(2)).all(|(v, d)| {
                v[0].vectors()
                    .iter()
                    .all(|x| v[1].contains_vector(&kill(x, d[0], d[1])))
            })
        })
        .collect()
}

/// `{w ∈ ⟨e_1..e_{n+i}⟩ : π_i(w) ∈ U}` as a vector set.
fn brute_zeta_component(u: &Subspace, i: usize, n: usize) -> BTreeSet<Vec<u8>> {
    let field = u.field();
    all_vectors(field, 2 * n)
        .into_iter()
        .filter(|w| w[n + i..].iter().all(|&x| x == 0))
        .filter(|w| {
            let mut image = vec![0u8; n + 1];
            for k in i..=n + 1 {
                image[k - 1] = field.add(image[k - 1], w[k - 1]);
            }
            for k in n + 2..=n + i {
                image[k - n - 2] = field.add(image[k - n - 2], w[k - 1]);
            }
            u.contains_vector(&image)
        })
        .collect()
}

/// Chains of the partial flag variety satisfying the `Y_n` containments.
fn brute_yn(dv: &DimensionVector, field: PrimeField) -> BTreeSet<Vec<Subspace>> {
    let n = dv.n();
    let mut out = BTreeSet::new();
    for_each_flag(field, 2 * n, &dv.flag_dims(), |chain| {
        let ok = chain.iter().zip(dv.dims()).all(|(w, &d)| {
            w.contains(&Subspace::standard(field, 2 * n, d - 1))
                && Subspace::standard(field, 2 * n, n + d).contains(w)
        });
        if ok {
            out.insert(chain.to_vec());
        }
    });
    out
}

fn as_sets(points: &[DegFlagPoint]) -> BTreeSet<Vec<Subspace>> {
    points.iter().map(|x| x.spaces().to_vec()).collect()
}

#[test]
fn enumeration_matches_brute_force() {
    for (n, p) in [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2)] {
        let dv = DimensionVector::complete(n).unwrap();
        let field = f(p);
        let points = enumerate_degflag(&dv, field).unwrap();
        let brute = brute_degflag(&dv, field);
        assert_eq!(points.len(), brute.len(), "n={n} p={p}");
        assert_eq!(as_sets(&points), brute);
        assert_eq!(count_degflag(&dv, field).unwrap(), brute.len() as u64);
        for x in &points {
            x.validate(&dv).unwrap();
        }
    }
}

#[test]
fn twenty_five_points_for_n2_p2() {
    let dv = DimensionVector::complete(2).unwrap();
    assert_eq!(brute_degflag(&dv, f(2)).len(), 25);
}

#[test]
fn partial_enumeration_matches_brute_force() {
    for dv in proper_dimension_vectors(3) {
        let points = enumerate_degflag(&dv, f(2)).unwrap();
        assert_eq!(as_sets(&points), brute_degflag(&dv, f(2)), "{dv:?}");
    }
}

#[test]
fn main_identity_at_small_sizes() {
    for (n, p) in [
        (1, 2),
        (1, 3),
        (1, 5),
        (2, 2),
        (2, 3),
        (2, 5),
        (3, 2),
        (3, 3),
    ] {
        let dv = DimensionVector::complete(n).unwrap();
        let poly = interval_poincare(&sigma_d(&dv), &dv).unwrap();
        assert_eq!(
            count_degflag(&dv, f(p)).unwrap() as u128,
            poly.eval(p),
            "n={n} p={p}"
        );
    }
}

#[test]
fn partial_identity_for_all_proper_d_at_n3() {
    let dvs = proper_dimension_vectors(3);
    assert_eq!(dvs.len(), 6);
    for dv in dvs {
        let poly = interval_poincare(&sigma_d(&dv), &dv).unwrap();
        assert_eq!(
            count_degflag(&dv, f(2)).unwrap() as u128,
            poly.eval(2),
            "{dv:?}"
        );
        let points = enumerate_degflag(&dv, f(2)).unwrap();
        let images: HashSet<_> = points.iter().map(|x| zeta(x, &dv).unwrap()).collect();
        assert_eq!(images.len(), points.len());
        assert_eq!(
            images,
            enumerate_yn(&dv, f(2))
                .unwrap()
                .into_iter()
                .collect::<HashSet<_>>()
        );
        let eq = yn_schubert_equivalence(&dv, f(2)).unwrap();
        assert!(eq.exhaustive);
        assert_eq!((eq.mismatches, eq.level_mismatches), (0, 0), "{dv:?}");
        assert_eq!(eq.in_yn, points.len() as u64);
    }
}

#[test]
fn zeta_components_match_brute_force() {
    for (n, p) in [(1, 3), (2, 2), (2, 3), (3, 2)] {
        let dv = DimensionVector::complete(n).unwrap();
        let field = f(p);
        for x in enumerate_degflag(&dv, field).unwrap() {
            let image = zeta(&x, &dv).unwrap();
            for ((w, v), &d) in image.spaces().iter().zip(x.spaces()).zip(dv.dims()) {
                let got: BTreeSet<Vec<u8>> = w.vectors().into_iter().collect();
                assert_eq!(got, brute_zeta_component(v, d, n));
                assert_eq!(w.dim(), 2 * d - 1);
            }
            assert_eq!(zeta_inverse(&image, &dv).unwrap(), x);
        }
    }
}

#[test]
fn zeta_is_a_bijection_onto_yn() {
    for (n, p) in [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2), (3, 3)] {
        let dv = DimensionVector::complete(n).unwrap();
        let field = f(p);
        let points = enumerate_degflag(&dv, field).unwrap();
        let images: HashSet<SchubertFlagPoint> =
            points.iter().map(|x| zeta(x, &dv).unwrap()).collect();
        assert_eq!(images.len(), points.len(), "n={n} p={p}");
        let yn: HashSet<SchubertFlagPoint> =
            enumerate_yn(&dv, field).unwrap().into_iter().collect();
        assert_eq!(images, yn, "n={n} p={p}");
        assert!(yn.iter().all(|c| yn_membership(c, &dv).unwrap()));
    }
}

#[test]
fn yn_enumeration_matches_filtered_flags() {
    for (n, p) in [(1, 3), (2, 2), (2, 3)] {
        let dv = DimensionVector::complete(n).unwrap();
        let yn: BTreeSet<Vec<Subspace>> = enumerate_yn(&dv, f(p))
            .unwrap()
            .into_iter()
            .map(|c| c.spaces().to_vec())
            .collect();
        assert_eq!(yn, brute_yn(&dv, f(p)), "n={n} p={p}");
    }
    for dv in proper_dimension_vectors(3) {
        let yn: BTreeSet<Vec<Subspace>> = enumerate_yn(&dv, f(2))
            .unwrap()
            .into_iter()
            .map(|c| c.spaces().to_vec())
            .collect();
        assert_eq!(yn, brute_yn(&dv, f(2)), "{dv:?}");
    }
}

#[test]
fn yn_iff_schubert_conditions_on_every_chain() {
    for (n, p) in [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2)] {
        let dv = DimensionVector::complete(n).unwrap();
        let eq = yn_schubert_equivalence(&dv, f(p)).unwrap();
        assert!(eq.exhaustive);
        assert_eq!((eq.mismatches, eq.level_mismatches), (0, 0));
        assert_eq!(eq.in_yn, count_degflag(&dv, f(p)).unwrap());
    }
}

#[test]
fn torus_fixed_points_are_the_coordinate_points() {
    for (n, p) in [(1, 3), (2, 3), (2, 5)] {
        let field = f(p);
        let mut dvs = proper_dimension_vectors(n);
        dvs.push(DimensionVector::complete(n).unwrap());
        for dv in dvs {
            let points = enumerate_degflag(&dv, field).unwrap();
            let lambdas = TorusElement::all(field, 2 * n);
            let fixed: BTreeSet<Vec<Subspace>> = points
                .iter()
                .filter(|x| {
                    lambdas
                        .iter()
                        .all(|l| torus_act_degflag(l, x, &dv).unwrap() == **x)
                })
                .map(|x| x.spaces().to_vec())
                .collect();
            assert_eq!(
                fixed,
                as_sets(&coordinate_points(&dv, field)),
                "n={n} p={p} {dv:?}"
            );
            let poly = interval_poincare(&sigma_d(&dv), &dv).unwrap();
            assert_eq!(fixed.len() as u64, fixed_points_count(&dv));
            assert_eq!(fixed_points_count(&dv), poly.cardinality());
        }
    }
}

#[test]
fn torus_equivariance() {
    for (n, p) in [(1, 3), (2, 3), (2, 5), (3, 3)] {
        assert!(torus_equivariance_check(&DimensionVector::complete(n).unwrap(), f(p)).unwrap());
    }
    for dv in proper_dimension_vectors(3) {
        assert!(torus_equivariance_check(&dv, f(3)).unwrap());
    }
}

#[test]
fn invalid_points_are_rejected() {
    let field = f(2);
    let dv = DimensionVector::complete(2).unwrap();
    let line = Subspace::span(field, 3, &[vec![0, 1, 0]]).unwrap();
    let plane = Subspace::span(field, 3, &[vec![1, 0, 0], vec![0, 0, 1]]).unwrap();
    // pr_1 fixes f_2, which is not in the plane.
    assert!(DegFlagPoint::new(vec![line.clone(), plane.clone()], &dv).is_err());
    assert!(DegFlagPoint::new(vec![plane.clone(), line.clone()], &dv).is_err());
    assert!(DegFlagPoint::new(vec![line.clone()], &dv).is_err());
    let ok = Subspace::span(field, 3, &[vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
    assert!(DegFlagPoint::new(vec![line, ok], &dv).is_ok());
}

#[test]
fn enumeration_is_deterministic() {
    let dv = DimensionVector::complete(3).unwrap();
    let a = serde_json::to_string(&enumerate_degflag(&dv, f(2)).unwrap()).unwrap();
    let b = serde_json::to_string(&enumerate_degflag(&dv, f(2)).unwrap()).unwrap();
    assert_eq!(a, b);
    let a = serde_json::to_string(&enumerate_yn(&dv, f(2)).unwrap()).unwrap();
    let b = serde_json::to_string(&enumerate_yn(&dv, f(2)).unwrap()).unwrap();
    assert_eq!(a, b);
}
