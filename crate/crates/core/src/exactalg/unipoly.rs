//! Dense univariate polynomials, used for `ν` (or `N`) dependence.

use std::fmt;

use super::scalar::Scalar;

/// `Σ c_i X^i`, stored densely with no trailing zero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly<C: Scalar> {
    coeffs: Vec<C>,
}

impl<C: Scalar> Default for UniPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Scalar> UniPoly<C> {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::from_coefficients(vec![c])
    }

    /// The indeterminate `X`.
    pub fn x() -> Self {
        Self::monomial(1, C::one())
    }

    pub fn monomial(degree: usize, c: C) -> Self {
        let mut coeffs = vec![C::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coefficients(coeffs)
    }

    /// Builds from ascending coefficients.
    pub fn from_coefficients(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn coefficients(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coefficient(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.coefficient(i) + other.coefficient(i))
            .collect();
        Self::from_coefficients(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        Self::from_coefficients(self.coeffs.iter().map(|c| c.mul_ref(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j].add_assign_ref(&a.mul_ref(b));
            }
        }
        Self::from_coefficients(coeffs)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn evaluate(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x);
            acc.add_assign_ref(c);
        }
        acc
    }

    /// Substitutes a polynomial for the indeterminate.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![C::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = rem[top].clone() / lead.clone();
            if !c.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    let idx = top - dd + i;
                    rem[idx] = rem[idx].clone() - c.mul_ref(d);
                }
                quot[top - dd] = c;
            }
            rem.pop();
        }
        (Self::from_coefficients(quot), Self::from_coefficients(rem))
    }

    /// The exact quotient, or `None` if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Keeps only even powers, re-indexed as a polynomial in `X²`
    /// (returns `None` if an odd power is present).
    pub fn even_part_in_square(&self) -> Option<Self> {
        if self.coeffs.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coefficients(
            self.coeffs.iter().step_by(2).cloned().collect(),
        ))
    }
}

impl<C: Scalar> fmt::Display for UniPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("({})", c.to_fraction_string()),
                1 => format!("({})*X", c.to_fraction_string()),
                _ => format!("({})*X^{i}", c.to_fraction_string()),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::scalar::Rational;

    fn p(cs: &[i64]) -> UniPoly<Rational> {
        UniPoly::from_coefficients(cs.iter().map(|&c| Rational::from_int(c)).collect())
    }

    #[test]
    fn division_round_trip() {
        let a = p(&[1, -4]);
        let b = p(&[9, -4]);
        let prod = a.mul(&b);
        assert_eq!(prod, p(&[9, -40, 16]));
        assert_eq!(prod.div_exact(&a), Some(b));
        assert_eq!(prod.div_exact(&p(&[25, -4])), None);
    }

    #[test]
    fn evaluate_and_compose() {
        let a = p(&[1, -4]);
        assert_eq!(
            a.evaluate(&Rational::from_frac(25, 4)),
            Rational::from_int(-24)
        );
        // (1 - 4X) ∘ X² = 1 - 4X²
        assert_eq!(a.compose(&p(&[0, 0, 1])), p(&[1, 0, -4]));
        assert_eq!(p(&[1, 0, -4]).even_part_in_square(), Some(a));
        assert_eq!(p(&[1, 1]).even_part_in_square(), None);
    }
}
