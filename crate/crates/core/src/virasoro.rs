//! Virasoro operators `𝓛_m` and the graded check `𝓛_m τ^{(k)} = ∂_{2m+1} τ^{(k+1)}`.

use rayon::prelude::*;

use crate::cutjoin::{mu0, Nu, TauSeries};
use crate::exactalg::{Scalar, TimesPoly};

/// `𝓛_m p` with symbolic `ν`.
pub fn apply_virasoro<C: Scalar>(m: u32, p: &TimesPoly<C>) -> TimesPoly<C> {
    apply_virasoro_at(m, p, &Nu::Symbolic)
}

/// `𝓛_m p`, with the constant `μ_0 = 1/16 − ν/4` taken at the given `ν`.
pub fn apply_virasoro_at<C: Scalar>(m: u32, p: &TimesPoly<C>, nu: &Nu<C>) -> TimesPoly<C> {
    let m = m as usize;
    let half = C::from_frac(1, 2);
    let quarter = C::from_frac(1, 4);
    let mut out = TimesPoly::zero();
    // ½ Σ_k (2k+1) t_{2k+1} ∂_{2k+2m+1}
    for (mono, c) in p.iter() {
        for (slot, &e) in mono.exponents().iter().enumerate() {
            if e == 0 || slot < m {
                continue;
            }
            let k = slot - m;
            let mut mm = mono.clone();
            mm.lower_slot(slot);
            mm.raise_slot(k, 1);
            out.add_term(
                mm,
                c.mul_int(((2 * k + 1) as i64) * e as i64).mul_ref(&half),
            );
        }
    }
    // ¼ Σ_{a+b=m−1} ∂_{2a+1} ∂_{2b+1}
    if m >= 1 {
        for a in 0..m {
            let b = m - 1 - a;
            let d = p.diff_slot(a).diff_slot(b);
            out.add_assign(&d.scale(&quarter));
        }
    }
    if m == 0 {
        let mu = match nu {
            Nu::Symbolic => TimesPoly::from_nu_poly(&mu0()),
            Nu::Value(v) => TimesPoly::constant(mu0::<C>().evaluate(v)),
        };
        out.add_assign(&p.mul(&mu));
    }
    out
}

/// Outcome of [`check_virasoro`]; pairs are `(k, m)` in ascending order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VirasoroReport {
    pub checked: Vec<(usize, u32)>,
    pub failed: Vec<(usize, u32)>,
}

impl VirasoroReport {
    pub fn passed(&self) -> bool {
        self.failed.is_empty()
    }
}

/// `𝓛_m τ^{(k)} − ∂_{2m+1} τ^{(k+1)}`.
pub fn virasoro_residual<C: Scalar>(tau: &TauSeries<C>, k: usize, m: u32) -> TimesPoly<C> {
    let lhs = apply_virasoro_at(m, tau.order(k), &tau.nu);
    let rhs = tau.order(k + 1).diff_slot(m as usize);
    lhs.sub(&rhs)
}

/// Checks every `0 ≤ k < K`, `0 ≤ m ≤ m_max`.
pub fn check_virasoro<C: Scalar>(tau: &TauSeries<C>, m_max: u32) -> VirasoroReport {
    let pairs: Vec<(usize, u32)> = (0..tau.max_order())
        .flat_map(|k| (0..=m_max).map(move |m| (k, m)))
        .collect();
    let failed = pairs
        .par_iter()
        .filter(|&&(k, m)| !virasoro_residual(tau, k, m).is_zero())
        .copied()
        .collect();
    VirasoroReport {
        checked: pairs,
        failed,
    }
}

/// String-equation residuals `𝓛_0 τ^{(k)} − ∂_1 τ^{(k+1)}` for `k < K`.
pub fn string_residual<C: Scalar>(tau: &TauSeries<C>) -> Vec<TimesPoly<C>> {
    (0..tau.max_order())
        .map(|k| virasoro_residual(tau, k, 0))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cutjoin::tau_expansion;
    use crate::exactalg::{Rational, UniPoly};

    type P = TimesPoly<Rational>;

    #[test]
    fn operator_examples() {
        assert_eq!(apply_virasoro(0, &P::one()), P::from_nu_poly(&mu0()));
        let t3 = P::time(3).unwrap();
        let t1 = P::time(1).unwrap();
        assert_eq!(apply_virasoro(1, &t3), t1.scale(&Rational::from_frac(1, 2)));
        assert_eq!(
            apply_virasoro(1, &t1.pow(2)),
            P::constant(Rational::from_frac(1, 2))
        );
        assert!(apply_virasoro(2, &P::one()).is_zero());
    }

    #[test]
    fn low_order_suite() {
        let tau = tau_expansion::<Rational>(8, Nu::Symbolic);
        let report = check_virasoro(&tau, 4);
        assert!(report.passed(), "{:?}", report.failed);
        assert_eq!(report.checked.len(), 8 * 5);
        assert!(string_residual(&tau).iter().all(P::is_zero));
    }

    #[test]
    fn corrupted_order_is_caught() {
        let mut tau = tau_expansion::<Rational>(3, Nu::Symbolic);
        tau.orders[2] = tau.orders[2].scale(&Rational::from_frac(1, 2));
        let residuals = string_residual(&tau);
        assert!(residuals[0].is_zero());
        assert!(!residuals[1].is_zero());
    }

    #[test]
    fn numeric_nu_matches_symbolic() {
        let v = Rational::from_frac(-7, 3);
        let tau = tau_expansion::<Rational>(6, Nu::Symbolic);
        let numeric = tau.at_nu(&v);
        assert!(check_virasoro(&numeric, 3).passed());
        for k in 0..6 {
            for m in 0..=3 {
                assert_eq!(
                    virasoro_residual(&tau, k, m).substitute_nu(&v),
                    virasoro_residual(&numeric, k, m)
                );
            }
        }
        let _ = UniPoly::<Rational>::one();
    }
}
