//! Asymptotic basis vectors `Φ_j(λ)`, their Kac–Schwarz operators and the
//! quantum spectral curve, all as exact Laurent series in `λ^{-1}`.
//!
//! Coefficients here are polynomials in `N` itself: `Φ_j` depends on `j − N`
//! and is not even in `N`. Conversion to `ν = N²` happens only when a result
//! meets the time-polynomial world.

use crate::cutjoin::{mu0, Nu, TauSeries};
use crate::error::{domain, Error, Result};
use crate::exactalg::{specialize_principal, LaurentSeries, Scalar, UniPoly};

/// `a_k(j) = Π_{i=1}^{k} (4(j − 1)² − (2i − 1)²)` for a polynomial argument `j`.
pub fn a_coefficient<C: Scalar>(k: i64, j: &UniPoly<C>) -> Result<UniPoly<C>> {
    if k < 1 {
        return domain(format!("a_k needs k >= 1, got {k}"));
    }
    let shifted = j.sub(&UniPoly::one());
    let square = shifted.mul(&shifted).scale(&C::from_int(4));
    let mut out = UniPoly::one();
    for i in 1..=k {
        let odd = C::from_int((2 * i - 1) * (2 * i - 1));
        out = out.mul(&square.sub(&UniPoly::constant(odd)));
    }
    Ok(out)
}

/// The argument `j − N` as a polynomial in `N`.
fn j_minus_n<C: Scalar>(j: i64) -> UniPoly<C> {
    UniPoly::from_coefficients(vec![C::from_int(j), -C::one()])
}

/// Coefficient of `λ^{j−1−k}` in `Φ_j`: `(−1)^k a_k(j − N)/(16^k k!)`.
pub fn phi_coefficient<C: Scalar>(j: i64, k: u32) -> UniPoly<C> {
    if k == 0 {
        return UniPoly::one();
    }
    let a = a_coefficient(k as i64, &j_minus_n(j)).expect("k >= 1");
    let mut den = C::from_int(16).powi(k);
    for i in 1..=k as i64 {
        den = den.mul_int(i);
    }
    let sign = if k % 2 == 1 { -C::one() } else { C::one() };
    a.scale(&(sign / den))
}

/// `Φ_j = λ^{j−1}(1 + Σ_{k=1}^{order} (−1)^k a_k(j − N)/(16^k k!) λ^{−k})`,
/// exact down to `λ^{j−1−order}`.
pub fn phi_series<C: Scalar>(j: i64, order: u32) -> LaurentSeries<C> {
    LaurentSeries::from_terms(
        (0..=order).map(|k| (j - 1 - k as i64, phi_coefficient(j, k))),
        j - 1 - order as i64,
    )
}

/// Rewrites a series whose coefficients are even in `N` in terms of `ν = N²`.
pub fn series_in_nu<C: Scalar>(s: &LaurentSeries<C>) -> Result<LaurentSeries<C>> {
    let mut terms = Vec::new();
    for (p, c) in s.iter() {
        let even = c
            .even_part_in_square()
            .ok_or_else(|| Error::Consistency(format!("coefficient of λ^{p} is not even in N")))?;
        terms.push((*p, even));
    }
    Ok(LaurentSeries::from_terms(terms, s.known_down_to()))
}

/// A residual series together with the power of `λ` down to which it is meaningful.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesCheck<C: Scalar> {
    pub label: String,
    pub residual: LaurentSeries<C>,
}

impl<C: Scalar> SeriesCheck<C> {
    pub fn passed(&self) -> bool {
        self.residual.is_zero()
    }

    pub fn known_down_to(&self) -> i64 {
        self.residual.known_down_to()
    }

    /// Powers of `λ` carrying a nonzero residual.
    pub fn failing_powers(&self) -> Vec<i64> {
        self.residual.iter().map(|(p, _)| *p).collect()
    }
}

/// `a = ½ λ d/dλ + λ − ¼`.
pub fn ks_a<C: Scalar>(s: &LaurentSeries<C>) -> LaurentSeries<C> {
    let half = UniPoly::constant(C::from_frac(1, 2));
    let quarter = UniPoly::constant(C::from_frac(1, 4));
    s.theta()
        .scale(&half)
        .add(&s.shift(1))
        .sub(&s.scale(&quarter))
}

/// `b = λ²`.
pub fn ks_b<C: Scalar>(s: &LaurentSeries<C>) -> LaurentSeries<C> {
    s.shift(2)
}

/// Kac–Schwarz residuals for explicit `Φ_j, Φ_{j+1}, Φ_{j+2}`:
/// `a Φ_j − (j − 1 − N/2) Φ_j − Φ_{j+1}` and `b Φ_j − (j − N) Φ_{j+1} − Φ_{j+2}`.
pub fn ks_residuals<C: Scalar>(
    j: i64,
    phi: [&LaurentSeries<C>; 3],
) -> (LaurentSeries<C>, LaurentSeries<C>) {
    let [p0, p1, p2] = phi;
    let ca = UniPoly::from_coefficients(vec![C::from_int(j - 1), C::from_frac(-1, 2)]);
    let ra = ks_a(p0).sub(&p0.scale(&ca)).sub(p1);
    let rb = ks_b(p0).sub(&p1.scale(&j_minus_n(j))).sub(p2);
    (ra, rb)
}

/// Kac–Schwarz check for `Φ_j` with `order` corrections.
pub fn ks_check<C: Scalar>(j: i64, order: u32) -> Result<[SeriesCheck<C>; 2]> {
    if order < 2 {
        return domain(format!("ks_check needs order >= 2, got {order}"));
    }
    let p0 = phi_series(j, order);
    let p1 = phi_series(j + 1, order + 1);
    let p2 = phi_series(j + 2, order + 2);
    let (ra, rb) = ks_residuals(j, [&p0, &p1, &p2]);
    Ok([
        SeriesCheck {
            label: format!("a Phi_{j}"),
            residual: ra,
        },
        SeriesCheck {
            label: format!("b Phi_{j}"),
            residual: rb,
        },
    ])
}

/// `λ²(c_N − 1) Φ = (a² − N²/4 − λ²) Φ`.
pub fn qsc_residual<C: Scalar>(phi: &LaurentSeries<C>) -> LaurentSeries<C> {
    let n2 = UniPoly::monomial(2, C::from_frac(1, 4));
    ks_a(&ks_a(phi)).sub(&phi.scale(&n2)).sub(&phi.shift(2))
}

/// Solves `(c_N − 1) Φ = 0` with `Φ = 1 + O(λ^{-1})` directly:
/// `d_{p−1} = d_p (α_p² − N²/4)/(1 − p)`, `α_p = p/2 − 1/4`.
pub fn qsc_solution<C: Scalar>(order: u32) -> LaurentSeries<C> {
    let mut d = UniPoly::one();
    let mut terms = vec![(0, d.clone())];
    for p in (-(order as i64) + 1..=0).rev() {
        let alpha = C::from_frac(2 * p - 1, 4);
        let factor =
            UniPoly::from_coefficients(vec![alpha.mul_ref(&alpha), C::zero(), C::from_frac(-1, 4)]);
        d = d.mul(&factor).scale(&(C::one() / C::from_int(1 - p)));
        terms.push((p - 1, d.clone()));
    }
    LaurentSeries::from_terms(terms, -(order as i64))
}

/// Outcome of [`qsc_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QscReport<C: Scalar> {
    /// `(c_N − 1) Φ_1` on the closed-form series.
    pub curve: SeriesCheck<C>,
    /// Closed-form `Φ_1` minus the recurrence solution.
    pub solution: SeriesCheck<C>,
    /// `λ^{-1}` coefficient of the recurrence solution, in `ν`.
    pub mu0: UniPoly<C>,
    pub mu0_matches: bool,
}

impl<C: Scalar> QscReport<C> {
    pub fn passed(&self) -> bool {
        self.curve.passed() && self.solution.passed() && self.mu0_matches
    }
}

/// Quantum spectral curve check of `Φ_1` through `λ^{-order}`.
pub fn qsc_check<C: Scalar>(order: u32) -> Result<QscReport<C>> {
    if order < 2 {
        return domain(format!("qsc_check needs order >= 2, got {order}"));
    }
    let phi = phi_series::<C>(1, order + 2);
    let curve = SeriesCheck {
        label: "(c_N - 1) Phi_1".into(),
        residual: qsc_residual(&phi).truncate(-(order as i64)),
    };
    let solved = qsc_solution::<C>(order);
    let solution = SeriesCheck {
        label: "Phi_1 - QSC solution".into(),
        residual: phi.truncate(-(order as i64)).sub(&solved),
    };
    let mu = solved
        .coefficient(-1)
        .even_part_in_square()
        .ok_or_else(|| Error::Consistency("λ^-1 coefficient is not even in N".into()))?;
    let mu0_matches = mu == mu0();
    Ok(QscReport {
        curve,
        solution,
        mu0: mu,
        mu0_matches,
    })
}

/// Principal specialization of `Σ τ^{(k)}` against `Φ_1` through `λ^{-order}`.
/// The `ν` of the tau series (symbolic or numeric) is used on both sides.
pub fn principal_check<C: Scalar>(tau: &TauSeries<C>, order: u32) -> Result<SeriesCheck<C>> {
    if tau.max_order() < order as usize {
        return Err(Error::MissingDependency(format!(
            "principal check to λ^-{order} needs tau order {order}, have {}",
            tau.max_order()
        )));
    }
    let lhs = specialize_principal(&tau.sum(), order);
    let phi = series_in_nu(&phi_series::<C>(1, order))?;
    let rhs = match &tau.nu {
        Nu::Symbolic => phi,
        Nu::Value(v) => phi.evaluate_coefficients(v),
    };
    Ok(SeriesCheck {
        label: format!("principal tau vs Phi_1 at nu={}", tau.nu.label()),
        residual: lhs.sub(&rhs),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cutjoin::{b_polynomial, tau_expansion};
    use crate::exactalg::Rational;

    type U = UniPoly<Rational>;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_frac(n, d)
    }

    #[test]
    fn a_coefficient_examples() {
        let one = U::one();
        assert_eq!(a_coefficient(1, &one).unwrap(), U::constant(q(-1, 1)));
        assert!(a_coefficient::<Rational>(0, &one).is_err());
        // 2(j − 1) = 3 kills a_k for k ≥ 2
        let j = U::constant(q(5, 2));
        assert!(a_coefficient(2, &j).unwrap().is_zero());
        assert!(!a_coefficient(1, &j).unwrap().is_zero());
    }

    #[test]
    fn b_polynomials_from_a() {
        let n_plus_one = U::from_coefficients(vec![q(1, 1), q(1, 1)]);
        for k in 1..=6 {
            let a = a_coefficient(k, &n_plus_one).unwrap();
            let a = if k % 2 == 1 { a.neg() } else { a };
            assert_eq!(a.even_part_in_square().unwrap(), b_polynomial(k).unwrap());
        }
    }

    #[test]
    fn phi_examples() {
        let phi = phi_series::<Rational>(1, 1);
        assert_eq!(phi.coefficient(0), U::one());
        assert_eq!(phi.coefficient(-1).evaluate(&q(0, 1)), q(1, 16));
        let nu = series_in_nu(&phi).unwrap();
        assert_eq!(nu.coefficient(-1), mu0());
        // half-integer degeneration
        for l in 0..5 {
            let s = phi_series::<Rational>(l + 2, 12).evaluate_coefficients(&q(2 * l + 1, 2));
            assert_eq!(s.iter().count(), 1);
            assert_eq!(s.coefficient(l + 1), U::one());
        }
        assert!(series_in_nu(&phi_series::<Rational>(2, 2)).is_err());
    }

    #[test]
    fn kac_schwarz() {
        for j in -2..=4 {
            for check in ks_check::<Rational>(j, 8).unwrap() {
                assert!(
                    check.passed(),
                    "{} {:?}",
                    check.label,
                    check.failing_powers()
                );
            }
        }
        let [a, b] = ks_check::<Rational>(1, 4).unwrap();
        assert_eq!(a.known_down_to(), -3);
        assert_eq!(b.known_down_to(), -2);
        assert!(ks_check::<Rational>(1, 1).is_err());
    }

    #[test]
    fn kac_schwarz_negative_control() {
        let j = 1;
        let mut p0 = phi_series::<Rational>(j, 6);
        let coefficient = p0.coefficient(j - 3);
        p0.add_term(j - 3, U::constant(q(1, 16 * 16 * 2)));
        assert_ne!(p0.coefficient(j - 3), coefficient);
        let p1 = phi_series(j + 1, 7);
        let p2 = phi_series(j + 2, 8);
        let (ra, rb) = ks_residuals(j, [&p0, &p1, &p2]);
        assert_eq!(ra.leading_power(), Some(j - 2));
        assert_eq!(rb.leading_power(), Some(j - 1));
    }

    #[test]
    fn quantum_spectral_curve() {
        let report = qsc_check::<Rational>(12).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.mu0, mu0());
        let residual = qsc_residual(&phi_series::<Rational>(1, 8)).truncate(-6);
        assert!(residual.evaluate_coefficients(&q(0, 1)).is_zero());
    }

    #[test]
    fn principal_specialization() {
        let tau = tau_expansion::<Rational>(6, Nu::Symbolic);
        assert!(principal_check(&tau, 6).unwrap().passed());
        let numeric = tau_expansion(6, Nu::Value(q(0, 1)));
        let check = principal_check(&numeric, 1).unwrap();
        assert!(check.passed());
        assert!(principal_check(&tau, 7).is_err());
    }
}
