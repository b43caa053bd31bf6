use std::collections::{BTreeMap, HashSet};

use degflag_core::bruhat::{
    enumerate_quotient, genocchi_numbers, interval_poincare, iota_fixed_count,
};
use degflag_core::degflag::symplectic::{
    iota_fixed_coordinate_count, iota_flag, iota_schubert_flag, metric_preserving_failures,
    perp_failures, signed_antidiagonal_form, SymplecticSetting,
};
use degflag_core::degflag::{
    count_degflag, enumerate_degflag, enumerate_yn, fixed_points_count, for_each_yn,
    torus_equivariance_check, yn_schubert_equivalence, zeta,
};
use degflag_core::gf_linalg::PrimeField;
use degflag_core::permgroup::{sigma_d, sigma_n, word_to_perm, DimensionVector, Permutation};
use degflag_core::quiver_bs::{
    build_quiver, count_bn, count_rn, desing_check, lemma_check, reduced_word_sigma,
};
use degflag_core::Error;
use serde_json::Value;

use crate::report::RunReport;

#[derive(Debug)]
pub enum CliError {
    /// Exit code 2.
    Invalid(String),
    /// Exit code 3.
    Bound(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::BoundExceeded { .. } | Error::PermutationTooLarge { .. } => {
                CliError::Bound(e.to_string())
            }
            other => CliError::Invalid(other.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Which form to use on `W` in the symplectic suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum FormChoice {
    /// `E = [[0, J], [−J, 0]]`.
    E,
    /// Antidiagonal with alternating signs.
    Signed,
}

impl FormChoice {
    fn name(self) -> &'static str {
        match self {
            FormChoice::E => "e",
            FormChoice::Signed => "signed",
        }
    }
}

pub fn dimension_vector(n: usize, d: Option<&[usize]>) -> CliResult<DimensionVector> {
    Ok(match d {
        Some(d) => DimensionVector::new(n, d.to_vec())?,
        None => DimensionVector::complete(n)?,
    })
}

pub fn field(p: u64) -> CliResult<PrimeField> {
    Ok(PrimeField::new(p)?)
}

pub fn params(entries: &[(&str, Value)]) -> BTreeMap<String, Value> {
    entries
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn one_line(tau: &Permutation) -> String {
    tau.to_string()
}

pub fn sigma(n: usize, d: Option<&[usize]>) -> CliResult<RunReport> {
    let dv = dimension_vector(n, d)?;
    let tau = if dv.is_complete() {
        sigma_n(n)?
    } else {
        sigma_d(&dv)
    };
    let mut r = RunReport::new("sigma", params(&[("n", n.into()), ("d", dv.dims().into())]));
    r.result("one_line", one_line(&tau));
    r.result("length", tau.length());
    r.result(
        "minimal_rep",
        degflag_core::permgroup::is_minimal_rep(&tau, &dv),
    );
    r.result("iota_fixed", tau.is_iota_fixed());
    Ok(r)
}

pub fn verify_iso(n: usize, d: Option<&[usize]>, p: u64) -> CliResult<RunReport> {
    let dv = dimension_vector(n, d)?;
    let f = field(p)?;
    let mut r = RunReport::new(
        "verify iso",
        params(&[("n", n.into()), ("d", dv.dims().into()), ("p", p.into())]),
    );
    let points = enumerate_degflag(&dv, f)?;
    let yn = enumerate_yn(&dv, f)?;
    let sigma = sigma_d(&dv);
    let poly = interval_poincare(&sigma, &dv)?;
    let fixed = fixed_points_count(&dv);
    r.result("sigma", one_line(&sigma));
    r.result("degflag_points", points.len());
    r.result("yn_points", yn.len());
    r.result("poincare", poly.coeffs());
    r.result("poincare_at_p", poly.eval(p) as u64);
    r.result("interval_cardinality", poly.cardinality());
    r.result("fixed_points", fixed);
    r.check(
        "point count equals interval polynomial at p",
        points.len() as u128 == poly.eval(p),
        format!("{} vs {}", points.len(), poly.eval(p)),
    );
    let images = points
        .iter()
        .map(|x| zeta(x, &dv))
        .collect::<Result<Vec<_>, _>>()?;
    let dims_ok = images.iter().all(|w| {
        w.spaces()
            .iter()
            .zip(dv.flag_dims())
            .all(|(s, d)| s.dim() == d)
    });
    r.check("dim W_l = 2 d_l - 1", dims_ok, "");
    let image_set: HashSet<_> = images.iter().collect();
    r.check("zeta injective", image_set.len() == points.len(), "");
    r.check(
        "zeta image equals Y_n",
        image_set == yn.iter().collect::<HashSet<_>>(),
        "",
    );
    let eq = yn_schubert_equivalence(&dv, f)?;
    let scope = if eq.exhaustive {
        "all"
    } else {
        "Y_n plus sampled"
    };
    r.check(
        "Y_n membership iff Schubert conditions",
        eq.mismatches == 0
            && eq.level_mismatches == 0
            && (!eq.exhaustive || eq.in_yn == yn.len() as u64),
        format!(
            "{scope} {} chains, {} in Y_n; {} subspaces level by level",
            eq.chains, eq.in_yn, eq.level_subspaces
        ),
    );
    r.check(
        "torus equivariance of zeta",
        torus_equivariance_check(&dv, f)?,
        "",
    );
    r.check(
        "fixed points equal interval cardinality",
        fixed == poly.cardinality(),
        format!("{fixed} vs {}", poly.cardinality()),
    );
    Ok(r)
}

pub fn verify_symplectic(
    n: usize,
    d: Option<&[usize]>,
    p: u64,
    form: FormChoice,
) -> CliResult<RunReport> {
    let dv = dimension_vector(n, d)?;
    let f = field(p)?;
    if n % 2 == 0 {
        return Err(CliError::Invalid(format!(
            "n = {n} must be odd (n = 2m - 1)"
        )));
    }
    let m = n.div_ceil(2);
    let mut r = RunReport::new(
        "verify symplectic",
        params(&[
            ("n", n.into()),
            ("d", dv.dims().into()),
            ("p", p.into()),
            ("form", form.name().into()),
        ]),
    );
    let setting = match form {
        FormChoice::E => SymplecticSetting::new(m, f),
        FormChoice::Signed => SymplecticSetting::with_form_w(m, signed_antidiagonal_form(n, f)),
    };
    let setting = match setting {
        Ok(s) => s,
        Err(Error::SymplecticSetting(msg)) => {
            r.check(
                "transported b_V is well defined, alternating and nondegenerate",
                false,
                msg,
            );
            return Ok(r);
        }
        Err(e) => return Err(e.into()),
    };
    r.check(
        "transported b_V is well defined, alternating and nondegenerate",
        true,
        "",
    );
    let metric = metric_preserving_failures(&setting)?;
    let detail = match metric.first() {
        Some((i, a, b)) => format!("{} failing pairs, first i={i} (e_{a}, e_{b})", metric.len()),
        None => String::new(),
    };
    r.check("metric identity on basis pairs", metric.is_empty(), detail);
    let perp = perp_failures(&setting)?;
    r.check(
        "perp identity on all subspaces of V",
        perp.is_empty(),
        format!("{} failures", perp.len()),
    );

    let points = enumerate_degflag(&dv, f)?;
    let mut involutive = true;
    let mut commutes = 0usize;
    let mut fixed = 0u64;
    for x in &points {
        let y = iota_flag(x, setting.form_v())?;
        involutive &= iota_flag(&y, setting.form_v())? == *x;
        fixed += (y == *x) as u64;
        let lhs = zeta(&y, &dv)?;
        let rhs = iota_schubert_flag(&zeta(x, &dv)?, setting.form_w())?;
        commutes += (lhs == rhs) as usize;
    }
    let mut yn_involutive = true;
    let mut yn_fixed = 0u64;
    for_each_yn(&dv, f, |c| {
        let fl = degflag_core::degflag::SchubertFlagPoint::new(c.to_vec(), &dv)
            .expect("enumerated chain");
        let y = iota_schubert_flag(&fl, setting.form_w()).expect("nondegenerate");
        yn_involutive &= iota_schubert_flag(&y, setting.form_w()).expect("nondegenerate") == fl;
        yn_fixed += (y == fl) as u64;
    })?;
    r.result("degflag_points", points.len());
    r.result("iota_fixed_degflag", fixed);
    r.result("iota_fixed_yn", yn_fixed);
    r.check("iota is an involution on Fl^a", involutive, "");
    r.check("iota is an involution on Y_n", yn_involutive, "");
    r.check(
        "zeta commutes with iota",
        commutes == points.len(),
        format!("{} of {} points", commutes, points.len()),
    );
    r.check(
        "fixed counts agree on both sides",
        fixed == yn_fixed,
        format!("{fixed} vs {yn_fixed}"),
    );
    let coord = iota_fixed_coordinate_count(&dv, setting.form_v())?;
    let bruhat = iota_fixed_count(&sigma_d(&dv), &dv)?;
    r.result("iota_fixed_coordinate_collections", coord);
    r.result("iota_fixed_interval", bruhat);
    r.check(
        "coordinate count equals iota-fixed interval count",
        coord == bruhat,
        format!("{coord} vs {bruhat}"),
    );
    Ok(r)
}

pub fn verify_desing(n: usize, p: u64) -> CliResult<RunReport> {
    let f = field(p)?;
    let mut r = RunReport::new("verify desing", params(&[("n", n.into()), ("p", p.into())]));
    let s = desing_check(n, f)?;
    let big_n = (n * (n + 1) / 2) as u32;
    let expected = (p + 1).pow(big_n);
    r.result("rn_points", s.rn_count);
    r.result("bn_points", s.bn_count);
    let hist: BTreeMap<String, u64> = s
        .fiber_histogram
        .iter()
        .map(|(k, v)| (k.to_string(), *v))
        .collect();
    r.result("fiber_histogram", hist);
    r.check(
        "|R_n| = (1 + p)^N",
        s.rn_count == expected,
        format!("{} vs {expected}", s.rn_count),
    );
    r.check("|B_n| = |R_n|", s.bn_count == s.rn_count, "");
    r.check(
        "every truncation fiber has p + 1 points",
        s.fiber_histogram.keys().all(|&k| k as u64 == p + 1),
        "",
    );
    r.check("zeta_quiver is a bijection onto B_n", s.zeta_bijective, "");
    r.check("psi lands in BS_n and theta inverts it", s.psi_valid, "");
    r.check("desingularization square commutes", s.square_commutes, "");
    r.check("p_n surjects onto Fl^a", s.pn_surjective, "");
    Ok(r)
}

pub fn verify_lemma(n: usize) -> CliResult<RunReport> {
    let mut r = RunReport::new("verify lemma", params(&[("n", n.into())]));
    r.check("column lemma", lemma_check(n)?, "");
    let word = reduced_word_sigma(n)?;
    let (product, reduced) = word_to_perm(&word, 2 * n)?;
    r.result("reduced_word", &word);
    r.check("word is reduced", reduced, "");
    r.check(
        "word multiplies to sigma_n",
        product == sigma_n(n)?,
        one_line(&product),
    );
    Ok(r)
}

pub fn verify_genocchi(max_n: usize) -> CliResult<RunReport> {
    let mut r = RunReport::new("verify genocchi", params(&[("max_n", max_n.into())]));
    let bruhat = genocchi_numbers(max_n)?;
    let coord: Vec<u64> = (1..=max_n)
        .map(|n| Ok(fixed_points_count(&DimensionVector::complete(n)?)))
        .collect::<CliResult<_>>()?;
    r.result("interval_cardinalities", &bruhat);
    r.result("coordinate_collections", &coord);
    for (i, (a, b)) in bruhat.iter().zip(&coord).enumerate() {
        r.check(&format!("n={}", i + 1), a == b, format!("{a} vs {b}"));
    }
    Ok(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum CountTarget {
    Degflag,
    Yn,
    Rn,
    Bn,
    Quotient,
    Interval,
}

pub fn count(target: CountTarget, n: usize, d: Option<&[usize]>, p: u64) -> CliResult<RunReport> {
    let dv = dimension_vector(n, d)?;
    let with_p = |name: &str| -> CliResult<RunReport> {
        field(p)?;
        Ok(RunReport::new(
            name,
            params(&[("n", n.into()), ("d", dv.dims().into()), ("p", p.into())]),
        ))
    };
    let without_p =
        |name: &str| RunReport::new(name, params(&[("n", n.into()), ("d", dv.dims().into())]));
    let quiver = |name: &str| -> CliResult<RunReport> {
        if !dv.is_complete() {
            return Err(CliError::Invalid(
                "the quiver collections exist for complete flags only".into(),
            ));
        }
        field(p)?;
        Ok(RunReport::new(
            name,
            params(&[("n", n.into()), ("p", p.into())]),
        ))
    };
    Ok(match target {
        CountTarget::Degflag => {
            let mut r = with_p("count degflag")?;
            r.result("count", count_degflag(&dv, field(p)?)?);
            r
        }
        CountTarget::Yn => {
            let mut r = with_p("count yn")?;
            let mut c = 0u64;
            for_each_yn(&dv, field(p)?, |_| c += 1)?;
            r.result("count", c);
            r
        }
        CountTarget::Rn => {
            let mut r = quiver("count rn")?;
            r.result("count", count_rn(n, field(p)?)?);
            r
        }
        CountTarget::Bn => {
            let mut r = quiver("count bn")?;
            r.result("count", count_bn(n, field(p)?)?);
            r
        }
        CountTarget::Quotient => {
            let mut r = without_p("count quotient");
            r.result("count", enumerate_quotient(&dv)?.count());
            r
        }
        CountTarget::Interval => {
            let mut r = without_p("count interval");
            let poly = interval_poincare(&sigma_d(&dv), &dv)?;
            r.result("coefficients", poly.coeffs());
            r.result("cardinality", poly.cardinality());
            r
        }
    })
}

pub fn quiver(n: usize) -> CliResult<RunReport> {
    let q = build_quiver(n)?;
    let mut r = RunReport::new("quiver", params(&[("n", n.into())]));
    let labels: Vec<String> = q.order.vertices().iter().map(|v| v.label()).collect();
    let columns: Vec<usize> = q.order.vertices().iter().map(|v| v.column()).collect();
    let decorated: Vec<String> = (0..=2 * n)
        .map(|t| q.order.vertex(-(t as isize)).label())
        .collect();
    r.result("beta_order", labels);
    r.result("columns", columns);
    r.result("decorated", decorated);
    r.result("edges", q.edges.len());
    r.result("decorated_edges", q.decorated_edges.len());
    r.result("reduced_word", reduced_word_sigma(n)?);
    Ok(r)
}
