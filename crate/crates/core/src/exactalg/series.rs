//! Truncated Laurent series in `λ` with polynomial coefficients.
//!
//! A series records, besides its terms, the lowest power of `λ` down to
//! which it is known exactly. Operations propagate that bound, so a
//! residual is only ever inspected where it is meaningful.

use std::collections::BTreeMap;

use super::scalar::Scalar;
use super::times::TimesPoly;
use super::unipoly::UniPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries<C: Scalar> {
    terms: BTreeMap<i64, UniPoly<C>>,
    known_down_to: i64,
}

impl<C: Scalar> LaurentSeries<C> {
    /// The zero series, exact down to `λ^known_down_to`.
    pub fn zero(known_down_to: i64) -> Self {
        LaurentSeries {
            terms: BTreeMap::new(),
            known_down_to,
        }
    }

    /// Builds from `(power, coefficient)` pairs; terms below the bound are discarded.
    pub fn from_terms(
        terms: impl IntoIterator<Item = (i64, UniPoly<C>)>,
        known_down_to: i64,
    ) -> Self {
        let mut s = Self::zero(known_down_to);
        for (p, c) in terms {
            s.add_term(p, c);
        }
        s
    }

    pub fn known_down_to(&self) -> i64 {
        self.known_down_to
    }

    pub fn add_term(&mut self, power: i64, c: UniPoly<C>) {
        if power < self.known_down_to || c.is_zero() {
            return;
        }
        let entry = self.terms.entry(power).or_default();
        *entry = entry.add(&c);
        if entry.is_zero() {
            self.terms.remove(&power);
        }
    }

    pub fn coefficient(&self, power: i64) -> UniPoly<C> {
        self.terms.get(&power).cloned().unwrap_or_default()
    }

    /// Nonzero terms, ascending in the power of `λ`.
    pub fn iter(&self) -> impl Iterator<Item = (&i64, &UniPoly<C>)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_power(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add(&self, other: &Self) -> Self {
        let bound = self.known_down_to.max(other.known_down_to);
        let mut out = Self::zero(bound);
        for (p, c) in self.terms.iter().chain(&other.terms) {
            out.add_term(*p, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&UniPoly::constant(-C::one())))
    }

    /// Multiplies every coefficient by a polynomial.
    pub fn scale(&self, k: &UniPoly<C>) -> Self {
        Self::from_terms(
            self.terms.iter().map(|(p, c)| (*p, c.mul(k))),
            self.known_down_to,
        )
    }

    /// Multiplies by `λ^k`; the known bound shifts with it.
    pub fn shift(&self, k: i64) -> Self {
        Self::from_terms(
            self.terms.iter().map(|(p, c)| (p + k, c.clone())),
            self.known_down_to + k,
        )
    }

    /// Applies `λ d/dλ`.
    pub fn theta(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(p, c)| (*p, c.scale(&C::from_int(*p)))),
            self.known_down_to,
        )
    }

    /// Lowers the known bound, dropping terms that fall below it.
    pub fn truncate(&self, known_down_to: i64) -> Self {
        Self::from_terms(
            self.terms.iter().map(|(p, c)| (*p, c.clone())),
            known_down_to.max(self.known_down_to),
        )
    }

    /// Substitutes a value for the coefficient indeterminate.
    pub fn evaluate_coefficients(&self, x: &C) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(p, c)| (*p, UniPoly::constant(c.evaluate(x)))),
            self.known_down_to,
        )
    }
}

/// Principal specialization `t_k = 1/(k λ^k)` of a time polynomial, with the
/// `ν` dependence kept as the coefficient indeterminate, truncated at `λ^{-order}`.
pub fn specialize_principal<C: Scalar>(p: &TimesPoly<C>, order: u32) -> LaurentSeries<C> {
    let mut out = LaurentSeries::zero(-(order as i64));
    for (m, c) in p.iter() {
        let w = m.weighted_degree();
        if w > order {
            continue;
        }
        let mut value = c.clone();
        for (index, e) in m.pairs() {
            value = value / C::from_int(index as i64).powi(e);
        }
        out.add_term(-(w as i64), UniPoly::monomial(m.nu_power() as usize, value));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::scalar::Rational;

    #[test]
    fn principal_examples() {
        let one = TimesPoly::<Rational>::one();
        let s = specialize_principal(&one, 3);
        assert_eq!(s.coefficient(0), UniPoly::one());
        assert_eq!(s.iter().count(), 1);
        let t1 = TimesPoly::<Rational>::time(1)
            .unwrap()
            .scale(&Rational::from_frac(1, 16));
        let s = specialize_principal(&t1, 3);
        assert_eq!(
            s.coefficient(-1),
            UniPoly::constant(Rational::from_frac(1, 16))
        );
        let t3 = TimesPoly::<Rational>::time(3).unwrap();
        assert_eq!(
            specialize_principal(&t3, 3).coefficient(-3),
            UniPoly::constant(Rational::from_frac(1, 3))
        );
        assert!(specialize_principal(&t3, 2).is_zero());
    }

    #[test]
    fn bounds_propagate() {
        let mut s = LaurentSeries::<Rational>::zero(-4);
        s.add_term(0, UniPoly::one());
        s.add_term(-5, UniPoly::one());
        assert_eq!(s.iter().count(), 1);
        let shifted = s.shift(2);
        assert_eq!(shifted.known_down_to(), -2);
        assert_eq!(shifted.add(&s).known_down_to(), -2);
        assert_eq!(s.theta().coefficient(0), UniPoly::zero());
    }
}
