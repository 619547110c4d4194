//! Verification suites.
//!
//! Every check compares a computed object with an independent
//! characterization (Virasoro constraints, Schur functions, Kac–Schwarz
//! operators, free-energy derivatives) or with a printed reference table.
//! A mismatch against a printed table that is fully accounted for by a
//! known misprint is reported as [`Status::Documented`] together with the
//! exact difference; anything else is a [`Status::Fail`].

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::correlators::{
    closed_form, loop_residual, nabla_crosscheck, nabla_series, printed_differential,
    w03_corrected, CorrelatorTable,
};
use crate::cutjoin::{divisibility_failures, euler_failures, tau_expansion, Nu, TauSeries};
use crate::error::{Error, Result};
use crate::exactalg::{Scalar, TimeMonomial, TimesPoly};
use crate::freenergy::{
    b_decompose, genus0_coefficient, genus_split, log_expansion_truncated, moment_monomial,
    multi_indices, n_view_moments, to_moments, GenusTable,
};
use crate::reference::{
    moment_poly, times_poly, BGW_FREE_ENERGIES, B_DECOMPOSITIONS, MOMENT_FREE_ENERGIES, TAU_ORDERS,
    TRIANGULAR_TAUS,
};
use crate::satobasis::{ks_check, principal_check, qsc_check, SeriesCheck};
use crate::schurkdv::triangular_tau;
use crate::virasoro::check_virasoro;

/// A group of related checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Cutjoin,
    Virasoro,
    Schur,
    Freenergy,
    Sato,
    Correlators,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Cutjoin,
        Suite::Virasoro,
        Suite::Schur,
        Suite::Freenergy,
        Suite::Sato,
        Suite::Correlators,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Cutjoin => "cutjoin",
            Suite::Virasoro => "virasoro",
            Suite::Schur => "schur",
            Suite::Freenergy => "freenergy",
            Suite::Sato => "sato",
            Suite::Correlators => "correlators",
        }
    }

    pub fn parse(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Differs from a printed value exactly by the described misprint.
    Documented(String),
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Documented(_) => "documented",
        }
    }

    fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// One named comparison; `criterion` ties it to an acceptance criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub criterion: Option<u32>,
    pub status: Status,
    pub detail: Value,
}

impl Check {
    fn new(
        name: impl Into<String>,
        criterion: Option<u32>,
        status: Status,
        detail: Value,
    ) -> Check {
        Check {
            name: name.into(),
            criterion,
            status,
            detail,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "name": self.name,
            "criterion": self.criterion,
            "status": self.status.label(),
        });
        if let Status::Documented(note) = &self.status {
            v["note"] = json!(note);
        }
        v["detail"] = self.detail.clone();
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    /// True unless some check has [`Status::Fail`].
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn to_json(&self) -> Value {
        let count = |s: &str| self.checks.iter().filter(|c| c.status.label() == s).count();
        json!({
            "suite": self.suite.name(),
            "passed": self.passed(),
            "counts": {"pass": count("pass"), "fail": count("fail"), "documented": count("documented")},
            "checks": self.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Runs one suite.
pub fn run_suite<C: Scalar>(suite: Suite) -> Result<SuiteReport> {
    let checks = match suite {
        Suite::Cutjoin => cutjoin_suite::<C>()?,
        Suite::Virasoro => virasoro_suite::<C>()?,
        Suite::Schur => schur_suite::<C>()?,
        Suite::Freenergy => freenergy_suite::<C>()?,
        Suite::Sato => sato_suite::<C>()?,
        Suite::Correlators => correlator_suite::<C>()?,
    };
    Ok(SuiteReport { suite, checks })
}

/// Runs suites concurrently; reports come back in the order requested.
pub fn run_suites<C: Scalar>(suites: &[Suite]) -> Result<Vec<SuiteReport>> {
    suites.par_iter().map(|&s| run_suite::<C>(s)).collect()
}

fn poly_detail<C: Scalar>(computed: &TimesPoly<C>, printed: &TimesPoly<C>) -> Value {
    json!({
        "computed": computed.to_string(),
        "printed": printed.to_string(),
        "difference": computed.sub(printed).to_string(),
    })
}

/// Exact comparison with a printed polynomial.
fn compare_printed<C: Scalar>(
    name: String,
    criterion: Option<u32>,
    computed: &TimesPoly<C>,
    printed: &TimesPoly<C>,
) -> Check {
    let status = Status::from_bool(computed == printed);
    Check::new(name, criterion, status, poly_detail(computed, printed))
}

/// Comparison with a printed polynomial that carries a known misprint: equality
/// with `corrected` is reported as documented.
fn compare_with_misprint<C: Scalar>(
    name: String,
    criterion: Option<u32>,
    computed: &TimesPoly<C>,
    printed: &TimesPoly<C>,
    corrected: &TimesPoly<C>,
    note: &str,
) -> Check {
    let mut check = compare_printed(name, criterion, computed, printed);
    if check.status == Status::Fail && computed == corrected {
        check.status = Status::Documented(note.to_string());
    }
    check
}

fn symbolic_tau<C: Scalar>(k: usize) -> TauSeries<C> {
    tau_expansion(k, Nu::Symbolic)
}

fn cutjoin_suite<C: Scalar>() -> Result<Vec<Check>> {
    let tau = symbolic_tau::<C>(24);
    let mut checks = Vec::new();
    let half = C::from_frac(1, 2);
    for &(k, table) in TAU_ORDERS {
        let printed = times_poly::<C>(table)?;
        let computed = tau.order(k as usize);
        let criterion = matches!(k, 1..=7).then_some(6);
        let name = format!("tau order {k} vs printed");
        let check = if matches!(k, 2 | 3) {
            compare_with_misprint(
                name,
                criterion,
                computed,
                &printed,
                &printed.scale(&half),
                "printed with twice the normalization; computed/printed = 1/2",
            )
        } else {
            compare_printed(name, criterion, computed, &printed)
        };
        checks.push(check);
    }
    let div = divisibility_failures(&tau);
    checks.push(Check::new(
        "B_m(nu) divides tau order k for k > m(m-1)/2, k <= 24",
        None,
        Status::from_bool(div.is_empty()),
        json!({"failed": div}),
    ));
    let euler = euler_failures(&tau);
    checks.push(Check::new(
        "tau order k is weighted-homogeneous of degree k, k <= 24",
        None,
        Status::from_bool(euler.is_empty()),
        json!({"failed": euler}),
    ));
    Ok(checks)
}

fn virasoro_suite<C: Scalar>() -> Result<Vec<Check>> {
    let tau = symbolic_tau::<C>(16);
    let report = check_virasoro(&tau, 7);
    Ok(vec![Check::new(
        "L_m tau^(k) = d/dt_{2m+1} tau^(k+1), k <= 15, m <= 7, symbolic nu",
        Some(1),
        Status::from_bool(report.passed()),
        json!({"virasoro": {"checked": report.checked, "failed": report.failed}}),
    )])
}

fn schur_suite<C: Scalar>() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for l in 0..=5u32 {
        let top = (l * (l + 1) / 2) as usize;
        let tau = tau_expansion::<C>(top + 3, Nu::half_integer(l));
        let schur = triangular_tau::<C>(l as i64)?;
        let sum = tau.truncated(top).sum();
        checks.push(Check::new(
            format!("sum of tau orders at N = {l} + 1/2 equals C_l s_lambda({l})(t~)"),
            Some(2),
            Status::from_bool(sum == schur),
            json!({"difference": sum.sub(&schur).to_string(), "terms": schur.len()}),
        ));
        let nonzero: Vec<usize> = (top + 1..=top + 3)
            .filter(|&k| !tau.order(k).is_zero())
            .collect();
        checks.push(Check::new(
            format!(
                "tau orders {}..{} vanish at N = {l} + 1/2",
                top + 1,
                top + 3
            ),
            Some(2),
            Status::from_bool(nonzero.is_empty()),
            json!({"nonzero_orders": nonzero}),
        ));
    }
    for &(l, table) in TRIANGULAR_TAUS {
        let printed = times_poly::<C>(table)?;
        let computed = triangular_tau::<C>(l as i64)?;
        checks.push(compare_printed(
            format!("triangular tau at N = {l} + 1/2 vs printed"),
            Some(2),
            &computed,
            &printed,
        ));
    }
    Ok(checks)
}

/// Free-energy genus table from `τ` at symbolic `ν` through order 24, eight time factors.
fn genus_table<C: Scalar>(
    tau: &TauSeries<C>,
) -> Result<(GenusTable<C>, crate::freenergy::FreeEnergySeries<C>)> {
    let f = log_expansion_truncated(tau, Some(8))?;
    Ok((genus_split(&f)?, f))
}

/// The printed genus-9 value omits the `T_3^8` term.
fn bgw_genus9_correction<C: Scalar>() -> Result<TimesPoly<C>> {
    let c = C::parse_fraction("1638661285390380352317/1073741824")
        .ok_or_else(|| Error::Parse("genus-9 correction".into()))?;
    Ok(TimesPoly::monomial(
        TimeMonomial::from_pairs(&[(3, 8)], 0)?,
        c,
    ))
}

/// Replaces the misprinted `T_3^6` of the printed `F_{6,3}` by `T_3^5`.
fn b63_corrected<C: Scalar>(printed: &TimesPoly<C>) -> Result<TimesPoly<C>> {
    let wrong = TimeMonomial::from_pairs(&[(3, 6)], 0)?;
    let right = TimeMonomial::from_pairs(&[(3, 5)], 0)?;
    Ok(TimesPoly::from_terms(printed.iter().map(|(m, c)| {
        (
            if m == &wrong {
                right.clone()
            } else {
                m.clone()
            },
            c.clone(),
        )
    })))
}

fn freenergy_suite<C: Scalar>() -> Result<Vec<Check>> {
    let tau = symbolic_tau::<C>(24);
    let (table, f) = genus_table(&tau)?;
    let mut checks = Vec::new();

    let genera: Vec<u32> = (0..=9).collect();
    let moments = genera
        .iter()
        .map(|&g| to_moments(g, &table, 8))
        .collect::<Result<Vec<_>>>()?;

    for &(g, printed) in BGW_FREE_ENERGIES {
        let printed = moment_poly::<C>(printed)?;
        let gm = &moments[g as usize];
        let computed = gm.pieces[0].clone();
        let criterion = (2..=5).contains(&g).then_some(3);
        let name = format!("F~_{g} at S = 0 vs printed");
        let mut check = if g == 9 {
            compare_with_misprint(
                name,
                criterion,
                &computed,
                &printed,
                &printed.add(&bgw_genus9_correction()?),
                "printed value omits the T_3^8 term",
            )
        } else {
            compare_printed(name, criterion, &computed, &printed)
        };
        if !gm.log_coeff.is_zero() {
            check.status = Status::Fail;
            check.detail["log_coeff"] = json!(gm.log_coeff.to_string());
        }
        checks.push(check);
    }

    for &(g, d, printed) in MOMENT_FREE_ENERGIES {
        let printed = moment_poly::<C>(printed)?;
        let computed = moments[g as usize]
            .pieces
            .get(d as usize)
            .cloned()
            .ok_or_else(|| {
                Error::MissingDependency(format!("F~_{g}^({d}) is beyond the computed window"))
            })?;
        let criterion = matches!((g, d), (0, 2) | (0, 3) | (1, 1) | (2, 1)).then_some(4);
        checks.push(compare_printed(
            format!("F~_{g}^({d}) vs printed"),
            criterion,
            &computed,
            &printed,
        ));
    }

    for big_g in 2..=6u32 {
        let factors = 8.min(24 - (2 * big_g - 2));
        let decomposition =
            n_view_moments(&f, big_g, factors).and_then(|form| b_decompose(big_g, &form));
        let parts = match decomposition {
            Ok(parts) => parts,
            Err(e) => {
                checks.push(Check::new(
                    format!("F_{big_g} lies in the span of B_2..B_{big_g}"),
                    Some(5),
                    Status::Fail,
                    json!({"error": e.to_string()}),
                ));
                continue;
            }
        };
        checks.push(Check::new(
            format!("F_{big_g} lies in the span of B_2..B_{big_g}"),
            Some(5),
            Status::Pass,
            json!({"factors": factors, "parts": parts.iter().map(|(k, p)| json!({"k": k, "F": p.to_string()})).collect::<Vec<_>>()}),
        ));
        for &(g, k, printed) in B_DECOMPOSITIONS.iter().filter(|e| e.0 == big_g) {
            let printed = moment_poly::<C>(printed)?;
            let computed = parts
                .iter()
                .find(|(kk, _)| *kk == k)
                .map(|(_, p)| p.clone())
                .unwrap_or_default();
            let criterion = (g <= 4).then_some(5);
            let name = format!("F_{{{g},{k}}} vs printed");
            checks.push(if (g, k) == (6, 3) {
                compare_with_misprint(
                    name,
                    criterion,
                    &computed,
                    &printed,
                    &b63_corrected(&printed)?,
                    "printed T_3^6 should read T_3^5",
                )
            } else {
                compare_printed(name, criterion, &computed, &printed)
            });
        }
    }

    let g0 = &moments[0];
    let mut compared = 0usize;
    let mut mismatches = Vec::new();
    for m in 1..=6u32 {
        for j in multi_indices(m) {
            let (c, s_power) = genus0_coefficient::<C>(&j)?;
            let computed = g0.s_coefficient(s_power as usize / 2, &moment_monomial(&j));
            compared += 1;
            if computed != c {
                mismatches.push(json!({
                    "j": j,
                    "formula": c.to_fraction_string(),
                    "computed": computed.to_fraction_string(),
                }));
            }
        }
    }
    checks.push(Check::new(
        "genus-zero closed form vs computed F~_0, m <= 6",
        Some(10),
        Status::from_bool(mismatches.is_empty()),
        json!({"compared": compared, "mismatches": mismatches}),
    ));
    Ok(checks)
}

fn series_check_json<C: Scalar>(c: &SeriesCheck<C>) -> Value {
    json!({
        "label": c.label,
        "known_down_to": c.known_down_to(),
        "failing_powers": c.failing_powers(),
    })
}

/// A residual series check that is conclusive through `λ^{-order}`.
fn series_status<C: Scalar>(c: &SeriesCheck<C>, order: i64) -> Status {
    Status::from_bool(c.passed() && c.known_down_to() <= -order)
}

fn sato_suite<C: Scalar>() -> Result<Vec<Check>> {
    const ORDER: u32 = 12;
    let mut checks = Vec::new();
    for j in 1..=4 {
        // the residuals of Φ_j lose j + 1 orders against the series length
        for c in ks_check::<C>(j, ORDER + j as u32 + 1)? {
            checks.push(Check::new(
                format!("Kac-Schwarz {} through lambda^-{ORDER}", c.label),
                Some(11),
                series_status(&c, ORDER as i64),
                series_check_json(&c),
            ));
        }
    }
    let qsc = qsc_check::<C>(ORDER)?;
    for c in [&qsc.curve, &qsc.solution] {
        checks.push(Check::new(
            format!(
                "quantum spectral curve: {} through lambda^-{ORDER}",
                c.label
            ),
            Some(11),
            series_status(c, ORDER as i64),
            series_check_json(c),
        ));
    }
    checks.push(Check::new(
        "mu_0 from the quantum spectral curve equals 1/16 - nu/4",
        Some(11),
        Status::from_bool(qsc.mu0_matches),
        json!({"mu0": qsc.mu0.to_string()}),
    ));
    let tau = symbolic_tau::<C>(ORDER as usize);
    let principal = principal_check(&tau, ORDER)?;
    checks.push(Check::new(
        format!("principal specialization of tau vs Phi_1 through lambda^-{ORDER}"),
        Some(11),
        series_status(&principal, ORDER as i64),
        series_check_json(&principal),
    ));
    Ok(checks)
}

const CLOSED_FORMS: [(u32, usize); 6] = [(0, 1), (0, 2), (1, 1), (0, 3), (1, 2), (2, 1)];
const PRINTED_DIFFERENTIALS: [(u32, usize); 4] = [(1, 1), (2, 1), (1, 2), (0, 3)];

/// Whether a function of `(s, x_1, …, x_n)` is a polynomial in the `1/x_i`.
fn polynomial_in_inverse<C: Scalar>(r: &crate::exactalg::RatFunc<C>, n: usize) -> bool {
    let nv = n + 1;
    let mut pole = vec![0u32; nv];
    for (a, e) in r.denominator() {
        match (1..nv).find(|&i| a == &crate::exactalg::MultiPoly::var(nv, i)) {
            Some(i) => pole[i] = *e,
            None => return false,
        }
    }
    (0..nv).all(|i| r.numerator().degree_in(i) <= pole[i])
}

fn correlator_suite<C: Scalar>() -> Result<Vec<Check>> {
    let table = CorrelatorTable::<C>::compute(7)?;
    let mut checks = Vec::new();
    let names = |n: usize| -> Vec<String> {
        let mut v = vec!["S^2".to_string()];
        v.extend((1..=n).map(|i| format!("u{i}")));
        v
    };
    let render = |f: &crate::exactalg::RatFunc<C>, n: usize| {
        let names = names(n);
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        f.render(&refs)
    };

    for (g, n) in CLOSED_FORMS {
        let computed = table.get(g, n)?;
        let printed = closed_form::<C>(g, n)?;
        let diff = computed.sub(&printed);
        let mut status = Status::from_bool(diff.is_zero());
        if (g, n) == (0, 3) && status == Status::Fail && computed.sub(&w03_corrected()).is_zero() {
            status = Status::Documented(
                "printed W_{0,3} has Π u_i where the loop equations give Π u_i^3".into(),
            );
        }
        checks.push(Check::new(
            format!("W_{{{g},{n}}} vs printed closed form"),
            Some(7),
            status,
            json!({"computed": render(computed, n), "printed": render(&printed, n)}),
        ));
    }

    for (g, n) in table.keys() {
        if 2 * g as usize + n > 6 {
            continue;
        }
        let r = loop_residual(&table, g, n)?;
        checks.push(Check::new(
            format!("loop equation residual for W_{{{g},{n}}}"),
            Some(7),
            Status::from_bool(r.is_zero()),
            json!({"residual": render(&r, n)}),
        ));
    }

    let stable: Vec<(u32, usize)> = table
        .keys()
        .into_iter()
        .filter(|&(g, n)| 2 * g as usize + n >= 3)
        .collect();
    let differentials = stable
        .par_iter()
        .map(|&(g, n)| {
            table
                .correlator(g, n)?
                .to_z_differential()
                .map(|z| ((g, n), z))
        })
        .collect::<Result<Vec<_>>>();
    let differentials = match differentials {
        Ok(d) => d,
        Err(e) => {
            checks.push(Check::new(
                "omega_{g,n} exists as a differential in z for 2g+n <= 7",
                Some(8),
                Status::Fail,
                json!({"error": e.to_string()}),
            ));
            return Ok(checks);
        }
    };
    for ((g, n), z) in &differentials {
        let failures = z.polynomiality_failures();
        checks.push(Check::new(
            format!("z^2-cleared omega_{{{g},{n}}} is polynomial in 1/z_i"),
            Some(8),
            Status::from_bool(failures.is_empty()),
            json!({"failures": failures}),
        ));
    }
    for (g, n) in PRINTED_DIFFERENTIALS {
        let (_, z) = differentials
            .iter()
            .find(|(k, _)| *k == (g, n))
            .ok_or_else(|| Error::MissingDependency(format!("omega_{{{g},{n}}}")))?;
        let printed = printed_differential::<C>(g, n)?;
        let mut status = Status::from_bool(z.value.sub(&printed).is_zero());
        if status == Status::Fail && z.value.add(&printed).is_zero() {
            status = Status::Documented(
                "equals minus the printed form under the branch sqrt(x) = S r/(z-2), u = z/(2r); \
                 omega_{0,3} and omega_{1,2} agree with print under the same branch"
                    .into(),
            );
        }
        let zn: Vec<String> = z.variable_names();
        let refs: Vec<&str> = zn.iter().map(String::as_str).collect();
        checks.push(Check::new(
            format!("omega_{{{g},{n}}} vs printed z-form"),
            Some(8),
            status,
            json!({"computed": z.value.render(&refs), "printed": printed.render(&refs)}),
        ));
    }

    for (g, n) in table.keys() {
        let c = table.correlator(g, n)?;
        let symmetric = c.is_symmetric()?;
        let at_zero = c.multilinear().and_then(|m| m.at_s_zero());
        let polynomial_in_inverse_x = at_zero.as_ref().is_ok_and(|r| polynomial_in_inverse(r, n));
        checks.push(Check::new(
            format!("W_{{{g},{n}}} is symmetric and polynomial in 1/x_i at S = 0"),
            None,
            Status::from_bool(symmetric && polynomial_in_inverse_x),
            json!({"symmetric": symmetric, "polynomial_in_inverse_x": polynomial_in_inverse_x}),
        ));
    }

    const MAX_POWER: u32 = 6;
    let tau = symbolic_tau::<C>(3 * (2 * MAX_POWER as usize - 1));
    let f = genus_split(&log_expansion_truncated(&tau, Some(3))?)?;
    for (g, n) in CLOSED_FORMS {
        let report = nabla_crosscheck(&table.correlator(g, n)?, &f, MAX_POWER)?;
        checks.push(Check::new(
            format!("series of W_{{{g},{n}}} vs free-energy derivatives through x^-{MAX_POWER}"),
            Some(9),
            Status::from_bool(report.passed()),
            json!({"compared": report.compared, "mismatches": report.mismatches}),
        ));
    }
    let series = nabla_series(&table.correlator(1, 1)?, 1)?;
    let from_w = series.coefficient(&[0, 1]);
    let from_f = f
        .genus(1)
        .coefficient(&TimeMonomial::from_pairs(&[(1, 1)], 0)?);
    let sixteenth = C::from_frac(1, 16);
    checks.push(Check::new(
        "x^-1 coefficient of W_{1,1} and dF_1/dt_1 at t = 0 both equal 1/16",
        Some(9),
        Status::from_bool(from_w == sixteenth && from_f == sixteenth),
        json!({"w11": from_w.to_fraction_string(), "dF1_dt1": from_f.to_fraction_string()}),
    ));
    Ok(checks)
}
