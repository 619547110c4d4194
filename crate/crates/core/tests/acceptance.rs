//! Acceptance run: one line per criterion.
//!
//! A criterion prints PASS when all its checks pass. Checks that differ from
//! a printed value exactly by a known misprint are listed after the verdict.
//! Criterion 6 allows the per-order ratio for orders 2 and 3, so those keep
//! it a PASS. Criteria 7 and 8 demand equality with print, so a documented
//! difference makes them FAIL. The process exits non-zero only when a check
//! fails for any other reason.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use gbgw::cutjoin::{tau_expansion, Nu};
use gbgw::verify::{run_suites, Check, Status, Suite};
use gbgw::Rational;

const TITLES: [&str; 12] = [
    "Virasoro constraints, k <= 15, m <= 7, symbolic nu",
    "Schur oracle at N = l + 1/2, l = 0..5",
    "BGW free energies at S = 0, g = 2..5, vs printed",
    "moment-form pieces F~_g^(d) vs printed",
    "B_k(N) decomposition, g <= 6",
    "tau orders 1..7 vs printed",
    "correlators W_{g,n}: closed forms and loop-equation residuals",
    "differentials omega_{g,n}: printed z-forms and polynomiality",
    "series of W_{g,n} vs free-energy derivatives",
    "genus-zero closed form, m <= 6",
    "Kac-Schwarz, quantum spectral curve and principal specialization",
    "performance of tau_expansion at symbolic nu",
];

/// Checks the documented differences are allowed for: (criterion, check name).
const EXPECTED_DOCUMENTED: [(u32, &str); 5] = [
    (6, "tau order 2 vs printed"),
    (6, "tau order 3 vs printed"),
    (7, "W_{0,3} vs printed closed form"),
    (8, "omega_{1,1} vs printed z-form"),
    (8, "omega_{2,1} vs printed z-form"),
];

/// Criteria whose statement tolerates their documented differences.
const TOLERATING: [u32; 1] = [6];

fn timed(k: usize) -> (Duration, usize) {
    let start = Instant::now();
    let tau = tau_expansion::<Rational>(k, Nu::Symbolic);
    (start.elapsed(), tau.order(k).len())
}

fn main() -> ExitCode {
    let reports = run_suites::<Rational>(&Suite::ALL).expect("suites run");
    let mut by_criterion: BTreeMap<u32, Vec<&Check>> = BTreeMap::new();
    let mut unexpected = Vec::new();
    for check in reports.iter().flat_map(|r| &r.checks) {
        match &check.status {
            Status::Fail => unexpected.push(check.name.clone()),
            Status::Documented(_) => {
                let known = EXPECTED_DOCUMENTED
                    .iter()
                    .any(|&(c, n)| check.criterion == Some(c) && check.name == n);
                if check.criterion.is_some() && !known {
                    unexpected.push(format!("{} (undocumented difference)", check.name));
                }
            }
            Status::Pass => {}
        }
        if let Some(c) = check.criterion {
            by_criterion.entry(c).or_default().push(check);
        }
    }

    let (t24, n24) = timed(24);
    let (t40, n40) = timed(40);
    let perf_ok = t24 <= Duration::from_secs(60) && t40 <= Duration::from_secs(600);
    if !perf_ok {
        unexpected.push("performance budget".into());
    }

    println!();
    for (i, title) in TITLES.iter().enumerate() {
        let c = i as u32 + 1;
        if c == 12 {
            let verdict = if perf_ok { "PASS" } else { "FAIL" };
            println!(
                "criterion {c:>2} {verdict}  {title}: k = 24 in {:.2?} ({n24} terms), k = 40 in {:.2?} ({n40} terms)",
                t24, t40
            );
            continue;
        }
        let checks = by_criterion.get(&c).map(Vec::as_slice).unwrap_or(&[]);
        let failed = checks.iter().filter(|k| k.status == Status::Fail).count();
        let documented: Vec<&&Check> = checks
            .iter()
            .filter(|k| matches!(k.status, Status::Documented(_)))
            .collect();
        let ok =
            !checks.is_empty() && failed == 0 && (documented.is_empty() || TOLERATING.contains(&c));
        let verdict = if ok { "PASS" } else { "FAIL" };
        println!(
            "criterion {c:>2} {verdict}  {title} ({} checks, {failed} failed, {} documented)",
            checks.len(),
            documented.len()
        );
        for d in documented {
            if let Status::Documented(note) = &d.status {
                println!("              documented: {}: {note}", d.name);
            }
        }
    }
    println!();

    if unexpected.is_empty() {
        println!("acceptance: every non-passing check is a documented misprint");
        ExitCode::SUCCESS
    } else {
        for u in &unexpected {
            println!("unexpected failure: {u}");
        }
        ExitCode::FAILURE
    }
}
