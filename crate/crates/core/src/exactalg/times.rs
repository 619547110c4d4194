//! The sparse doubly graded ring `Q[ν][t_1, t_3, t_5, ...]`.
//!
//! Only odd times exist in this ring; `ν` stands for `N²`. A monomial
//! `ν^d t_1^{e_0} t_3^{e_1} ...` carries two gradings: the weighted time
//! degree `Σ (2i+1) e_i` and the `ν` degree `d`.

use std::collections::hash_map::Entry;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rustc_hash::FxHashMap;

use super::scalar::Scalar;
use super::unipoly::UniPoly;
use crate::error::{domain, Result};

/// Converts an odd positive time index `2i+1` to its slot `i`.
pub fn time_slot(index: u32) -> Result<usize> {
    if index == 0 || index.is_multiple_of(2) {
        return domain(format!("time index {index} is not odd and positive"));
    }
    Ok(((index - 1) / 2) as usize)
}

/// `ν^nu · Π t_{2i+1}^{exps[i]}`; trailing zero exponents are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TimeMonomial {
    exps: Vec<u32>,
    nu: u32,
}

impl TimeMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn new(mut exps: Vec<u32>, nu: u32) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        TimeMonomial { exps, nu }
    }

    /// The monomial `t_index`.
    pub fn time(index: u32) -> Result<Self> {
        let slot = time_slot(index)?;
        let mut exps = vec![0; slot + 1];
        exps[slot] = 1;
        Ok(TimeMonomial { exps, nu: 0 })
    }

    /// Builds a monomial from `(odd index, power)` pairs.
    pub fn from_pairs(pairs: &[(u32, u32)], nu: u32) -> Result<Self> {
        let mut exps = Vec::new();
        for &(index, power) in pairs {
            let slot = time_slot(index)?;
            if exps.len() <= slot {
                exps.resize(slot + 1, 0);
            }
            exps[slot] += power;
        }
        Ok(Self::new(exps, nu))
    }

    pub fn nu_power(&self) -> u32 {
        self.nu
    }

    /// Exponent vector by slot (`exps[i]` is the power of `t_{2i+1}`).
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Power of `t_{2·slot+1}`.
    pub fn slot_exponent(&self, slot: usize) -> u32 {
        self.exps.get(slot).copied().unwrap_or(0)
    }

    pub fn exponent(&self, index: u32) -> Result<u32> {
        Ok(self.slot_exponent(time_slot(index)?))
    }

    /// `Σ index · power`.
    pub fn weighted_degree(&self) -> u32 {
        self.exps
            .iter()
            .enumerate()
            .map(|(i, &e)| (2 * i as u32 + 1) * e)
            .sum()
    }

    /// Number of time factors counted with multiplicity.
    pub fn factor_count(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// `(odd index, power)` pairs with non-zero power, ascending.
    pub fn pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (2 * i as u32 + 1, e))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (long, short) = if self.exps.len() >= other.exps.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut exps = long.exps.clone();
        for (e, s) in exps.iter_mut().zip(&short.exps) {
            *e += s;
        }
        TimeMonomial {
            exps,
            nu: self.nu + other.nu,
        }
    }

    pub fn with_nu(&self, nu: u32) -> Self {
        TimeMonomial {
            exps: self.exps.clone(),
            nu,
        }
    }

    /// Multiplies in `t_{2·slot+1}^by` in place.
    pub(crate) fn raise_slot(&mut self, slot: usize, by: u32) {
        if by == 0 {
            return;
        }
        if self.exps.len() <= slot {
            self.exps.resize(slot + 1, 0);
        }
        self.exps[slot] += by;
    }

    /// Divides by `t_{2·slot+1}` in place; the caller guarantees the exponent is positive.
    pub(crate) fn lower_slot(&mut self, slot: usize) {
        self.exps[slot] -= 1;
        while self.exps.last() == Some(&0) {
            self.exps.pop();
        }
    }

    /// Divides by `t_{2·slot+1}`, returning the old exponent, or `None` if absent.
    pub fn divide_slot(&self, slot: usize) -> Option<(u32, Self)> {
        let e = self.slot_exponent(slot);
        if e == 0 {
            return None;
        }
        let mut m = self.clone();
        m.lower_slot(slot);
        Some((e, m))
    }

    /// Sort key used for deterministic output: weighted degree, then `ν`, then exponents.
    pub fn canonical_key(&self) -> (u32, u32, Vec<u32>) {
        (self.weighted_degree(), self.nu, self.exps.clone())
    }
}

impl fmt::Display for TimeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.nu {
            0 => {}
            1 => parts.push("nu".to_string()),
            d => parts.push(format!("nu^{d}")),
        }
        for (index, e) in self.pairs() {
            if e == 1 {
                parts.push(format!("t{index}"));
            } else {
                parts.push(format!("t{index}^{e}"));
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Result of [`TimesPoly::weighted_degree`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightedDegree {
    /// The zero polynomial.
    Empty,
    Homogeneous(u32),
    Inhomogeneous,
}

/// A finite linear combination of [`TimeMonomial`]s with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TimesPoly<C: Scalar> {
    terms: FxHashMap<TimeMonomial, C>,
}

impl<C: Scalar> Default for TimesPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Scalar> TimesPoly<C> {
    pub fn zero() -> Self {
        TimesPoly {
            terms: FxHashMap::default(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(TimeMonomial::one(), c)
    }

    pub fn monomial(m: TimeMonomial, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    /// `t_index`.
    pub fn time(index: u32) -> Result<Self> {
        Ok(Self::monomial(TimeMonomial::time(index)?, C::one()))
    }

    /// The parameter `ν = N²`.
    pub fn nu() -> Self {
        Self::monomial(TimeMonomial::new(Vec::new(), 1), C::one())
    }

    /// Embeds a polynomial in `ν`.
    pub fn from_nu_poly(p: &UniPoly<C>) -> Self {
        let mut out = Self::zero();
        for (d, c) in p.coefficients().iter().enumerate() {
            out.add_term(TimeMonomial::new(Vec::new(), d as u32), c.clone());
        }
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (TimeMonomial, C)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&TimeMonomial, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &TimeMonomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Adds `c·m`, dropping the entry if it cancels.
    pub fn add_term(&mut self, m: TimeMonomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                e.get_mut().add_assign_ref(&c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub(crate) fn add_term_ref(&mut self, m: TimeMonomial, c: &C) {
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                e.get_mut().add_assign_ref(c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c.clone());
                }
            }
        }
    }

    /// Terms sorted by [`TimeMonomial::canonical_key`].
    pub fn sorted_terms(&self) -> Vec<(&TimeMonomial, &C)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_cached_key(|(m, _)| m.canonical_key());
        v
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term_ref(m.clone(), c);
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        TimesPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        TimesPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.mul_ref(k)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.mul_ref(cb));
            }
        }
        out
    }

    /// Product modulo monomials with more than `max_factors` time factors.
    pub fn mul_truncated(&self, other: &Self, max_factors: u32) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            let fa = ma.factor_count();
            if fa > max_factors {
                continue;
            }
            for (mb, cb) in &other.terms {
                if fa + mb.factor_count() <= max_factors {
                    out.add_term(ma.mul(mb), ca.mul_ref(cb));
                }
            }
        }
        out
    }

    /// `p · c · m` for a single term.
    pub fn mul_term(&self, m: &TimeMonomial, c: &C) -> Self {
        TimesPoly {
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc.mul_ref(c)))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Partial derivative `∂/∂t_index`.
    pub fn diff(&self, index: u32) -> Result<Self> {
        Ok(self.diff_slot(time_slot(index)?))
    }

    pub(crate) fn diff_slot(&self, slot: usize) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if let Some((e, lowered)) = m.divide_slot(slot) {
                out.add_term(lowered, c.mul_int(e as i64));
            }
        }
        out
    }

    pub fn weighted_degree(&self) -> WeightedDegree {
        let mut degrees = self.terms.keys().map(TimeMonomial::weighted_degree);
        let Some(first) = degrees.next() else {
            return WeightedDegree::Empty;
        };
        if degrees.all(|d| d == first) {
            WeightedDegree::Homogeneous(first)
        } else {
            WeightedDegree::Inhomogeneous
        }
    }

    pub fn max_weighted_degree(&self) -> Option<u32> {
        self.terms.keys().map(TimeMonomial::weighted_degree).max()
    }

    pub fn nu_degree(&self) -> Option<u32> {
        self.terms.keys().map(TimeMonomial::nu_power).max()
    }

    /// Keeps the terms whose monomial satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&TimeMonomial) -> bool) -> Self {
        TimesPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The homogeneous component of weighted degree `d`.
    pub fn component(&self, d: u32) -> Self {
        self.filter(|m| m.weighted_degree() == d)
    }

    /// Substitutes a value for `ν`.
    pub fn substitute_nu(&self, value: &C) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.with_nu(0), c.mul_ref(&value.powi(m.nu_power())));
        }
        out
    }

    /// Coefficient of `ν^d`, as a `ν`-free polynomial in the times.
    pub fn nu_coefficient(&self, d: u32) -> Self {
        TimesPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.nu_power() == d)
                .map(|(m, c)| (m.with_nu(0), c.clone()))
                .collect(),
        }
    }

    /// Splits into a polynomial in `ν` whose coefficients are `ν`-free time
    /// polynomials, grouped by time monomial: `Σ_m (Σ_d c_{m,d} ν^d) m`.
    pub fn by_time_monomial(&self) -> Vec<(TimeMonomial, UniPoly<C>)> {
        let mut grouped: FxHashMap<TimeMonomial, Vec<(u32, C)>> = FxHashMap::default();
        for (m, c) in &self.terms {
            grouped
                .entry(m.with_nu(0))
                .or_default()
                .push((m.nu_power(), c.clone()));
        }
        let mut out: Vec<_> = grouped
            .into_iter()
            .map(|(m, cs)| {
                let mut p = UniPoly::zero();
                for (d, c) in cs {
                    p = p.add(&UniPoly::monomial(d as usize, c));
                }
                (m, p)
            })
            .collect();
        out.sort_by_cached_key(|(m, _)| m.canonical_key());
        out
    }

    /// Exact quotient by a polynomial in `ν`, or `None` if some time
    /// coefficient is not divisible.
    pub fn div_exact_nu(&self, divisor: &UniPoly<C>) -> Option<Self> {
        let mut out = Self::zero();
        for (m, p) in self.by_time_monomial() {
            let q = p.div_exact(divisor)?;
            for (d, c) in q.coefficients().iter().enumerate() {
                out.add_term(m.with_nu(d as u32), c.clone());
            }
        }
        Some(out)
    }

    /// Rescales `t_k → w^k t_k` (the weighted grading made explicit).
    pub fn rescale_weighted(&self, w: &C) -> Self {
        TimesPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.mul_ref(&w.powi(m.weighted_degree()))))
                .collect(),
        }
    }

    /// Substitutes values for all times (and `ν`), producing a scalar.
    pub fn evaluate(&self, nu: &C, times: impl Fn(u32) -> C) -> C {
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut v = c.mul_ref(&nu.powi(m.nu_power()));
            for (index, e) in m.pairs() {
                v = v.mul_ref(&times(index).powi(e));
            }
            acc.add_assign_ref(&v);
        }
        acc
    }

    /// Shifts one time: `p(…, t_index + a, …)`.
    pub fn translate(&self, index: u32, a: &C) -> Result<Self> {
        let slot = time_slot(index)?;
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.slot_exponent(slot);
            let mut base = m.clone();
            for _ in 0..e {
                base.lower_slot(slot);
            }
            // Σ_j binom(e, j) t^j a^{e−j}
            let mut binom = C::one();
            for j in 0..=e {
                let mut mm = base.clone();
                mm.raise_slot(slot, j);
                out.add_term(mm, c.mul_ref(&binom).mul_ref(&a.powi(e - j)));
                binom = binom.mul_int((e - j) as i64) / C::from_int(j as i64 + 1);
            }
        }
        Ok(out)
    }

    /// Truncates to monomials with at most `n` time factors.
    pub fn truncate_factors(&self, n: u32) -> Self {
        self.filter(|m| m.factor_count() <= n)
    }
}

impl<C: Scalar> fmt::Display for TimesPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .sorted_terms()
            .into_iter()
            .map(|(m, c)| format!("({})*{}", c.to_fraction_string(), m))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<C: Scalar> Add for &TimesPoly<C> {
    type Output = TimesPoly<C>;
    fn add(self, rhs: Self) -> TimesPoly<C> {
        TimesPoly::add(self, rhs)
    }
}

impl<C: Scalar> Sub for &TimesPoly<C> {
    type Output = TimesPoly<C>;
    fn sub(self, rhs: Self) -> TimesPoly<C> {
        TimesPoly::sub(self, rhs)
    }
}

impl<C: Scalar> Mul for &TimesPoly<C> {
    type Output = TimesPoly<C>;
    fn mul(self, rhs: Self) -> TimesPoly<C> {
        TimesPoly::mul(self, rhs)
    }
}

impl<C: Scalar> Neg for &TimesPoly<C> {
    type Output = TimesPoly<C>;
    fn neg(self) -> TimesPoly<C> {
        TimesPoly::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::scalar::Rational;

    type P = TimesPoly<Rational>;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_frac(n, d)
    }

    fn t(i: u32) -> P {
        P::time(i).unwrap()
    }

    #[test]
    fn add_examples() {
        assert!(t(1).add(&t(1).neg()).is_zero());
        let sum = t(1).scale(&q(1, 16)).add(&t(3));
        assert_eq!(sum.len(), 2);
        assert_eq!(sum.coefficient(&TimeMonomial::time(1).unwrap()), q(1, 16));
        // (1-4ν)/16 t1 + 4ν/16 t1 = t1/16
        let one_minus = P::one().sub(&P::nu().scale(&q(4, 1)));
        let a = one_minus.mul(&t(1)).scale(&q(1, 16));
        let b = P::nu().mul(&t(1)).scale(&q(4, 16));
        assert_eq!(a.add(&b), t(1).scale(&q(1, 16)));
    }

    #[test]
    fn mul_examples() {
        let t1sq = t(1).mul(&t(1));
        assert_eq!(
            t1sq,
            P::monomial(TimeMonomial::from_pairs(&[(1, 2)], 0).unwrap(), q(1, 1))
        );
        // (1 - t1/2)(1 + t1/2 + t1^2/4) = 1 - t1^3/8
        let a = P::one().sub(&t(1).scale(&q(1, 2)));
        let b = P::one()
            .add(&t(1).scale(&q(1, 2)))
            .add(&t1sq.scale(&q(1, 4)));
        let prod = a.mul(&b);
        assert_eq!(prod.component(0), P::one());
        assert!(prod.component(1).is_zero());
        assert!(prod.component(2).is_zero());
        let lhs = t(1).scale(&q(1, 16)).mul(&t(1).scale(&q(9, 16)));
        assert_eq!(lhs, t1sq.scale(&q(9, 256)));
    }

    #[test]
    fn diff_examples() {
        let t1sq = t(1).mul(&t(1));
        assert_eq!(t1sq.diff(1).unwrap(), t(1).scale(&q(2, 1)));
        assert!(t(1).diff(3).unwrap().is_zero());
        let p = t(3).scale(&q(24, 1)).add(&t(1).pow(3).scale(&q(17, 1)));
        assert_eq!(p.diff(3).unwrap(), P::constant(q(24, 1)));
        assert!(p.diff(2).is_err());
        assert!(p.diff(0).is_err());
    }

    #[test]
    fn weighted_degree_examples() {
        assert_eq!(
            t(1).pow(3).weighted_degree(),
            WeightedDegree::Homogeneous(3)
        );
        assert_eq!(
            t(3).mul(&t(5)).weighted_degree(),
            WeightedDegree::Homogeneous(8)
        );
        assert_eq!(
            t(1).add(&t(3)).weighted_degree(),
            WeightedDegree::Inhomogeneous
        );
        assert_eq!(P::zero().weighted_degree(), WeightedDegree::Empty);
    }

    #[test]
    fn even_index_is_unrepresentable() {
        assert!(TimeMonomial::time(4).is_err());
        assert!(TimeMonomial::from_pairs(&[(1, 1), (2, 1)], 0).is_err());
    }

    #[test]
    fn nu_division() {
        // (1-4ν)(9-4ν) t1^2 / (1-4ν) = (9-4ν) t1^2
        let b1 = UniPoly::from_coefficients(vec![q(1, 1), q(-4, 1)]);
        let b2 = b1.mul(&UniPoly::from_coefficients(vec![q(9, 1), q(-4, 1)]));
        let p = P::from_nu_poly(&b2).mul(&t(1).pow(2));
        let quotient = p.div_exact_nu(&b1).unwrap();
        assert_eq!(
            quotient,
            P::from_nu_poly(&UniPoly::from_coefficients(vec![q(9, 1), q(-4, 1)])).mul(&t(1).pow(2))
        );
        let b3 = UniPoly::from_coefficients(vec![q(25, 1), q(-4, 1)]);
        assert!(p.div_exact_nu(&b3).is_none());
    }
}
