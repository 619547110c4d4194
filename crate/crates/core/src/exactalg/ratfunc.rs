//! Rational functions with a factored denominator.
//!
//! A value is `numerator / Π atom^e` where every atom is a monic,
//! non-constant polynomial. After each operation the numerator is divided
//! by each atom for as long as the division is exact, so no atom divides
//! the numerator. Equality is decided by subtracting and testing for zero,
//! which needs no global gcd.

use std::fmt;

use super::multipoly::MultiPoly;
use super::scalar::Scalar;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc<C: Scalar> {
    num: MultiPoly<C>,
    den: Vec<(MultiPoly<C>, u32)>,
}

/// Splits a polynomial into `(constant, monic)`; `None` for constants.
fn normalize_atom<C: Scalar>(p: &MultiPoly<C>) -> Option<(C, MultiPoly<C>)> {
    if p.as_constant().is_some() || p.is_zero() {
        return None;
    }
    let (monic, c) = p.make_monic();
    Some((c, monic))
}

/// The index `v` if `p` is exactly the variable `x_v`.
fn single_variable<C: Scalar>(p: &MultiPoly<C>) -> Option<usize> {
    let (e, c) = p.leading_term()?;
    if p.len() != 1 || !c.is_one() || e.iter().sum::<u32>() != 1 {
        return None;
    }
    e.iter().position(|&x| x == 1)
}

impl<C: Scalar> RatFunc<C> {
    pub fn zero(nvars: usize) -> Self {
        Self::from_poly(MultiPoly::zero(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_poly(MultiPoly::one(nvars))
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::from_poly(MultiPoly::constant(nvars, c))
    }

    pub fn from_poly(num: MultiPoly<C>) -> Self {
        RatFunc {
            num,
            den: Vec::new(),
        }
    }

    /// `1 / p^e`; fails if `p` is zero.
    pub fn recip_power(p: &MultiPoly<C>, e: u32) -> Result<Self> {
        let nvars = p.nvars();
        if p.is_zero() {
            return Err(Error::Consistency("division by the zero polynomial".into()));
        }
        if p.len() == 1 {
            let (exps, c) = p.iter().next().expect("one term");
            let den = exps
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(v, &a)| (MultiPoly::var(nvars, v), a * e))
                .collect();
            return Ok(RatFunc {
                num: MultiPoly::constant(nvars, C::one() / c.powi(e)),
                den,
            });
        }
        match normalize_atom(p) {
            None => {
                let c = p.as_constant().expect("constant");
                Ok(Self::constant(nvars, C::one() / c.powi(e)))
            }
            Some((c, atom)) => {
                let mut r = RatFunc {
                    num: MultiPoly::constant(nvars, C::one() / c.powi(e)),
                    den: vec![(atom, e)],
                };
                r.reduce();
                Ok(r)
            }
        }
    }

    /// `a / b` for polynomials.
    pub fn quotient(a: &MultiPoly<C>, b: &MultiPoly<C>) -> Result<Self> {
        Ok(Self::recip_power(b, 1)?.mul_poly(a))
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn numerator(&self) -> &MultiPoly<C> {
        &self.num
    }

    /// Denominator atoms with their exponents.
    pub fn denominator(&self) -> &[(MultiPoly<C>, u32)] {
        &self.den
    }

    pub fn denominator_poly(&self) -> MultiPoly<C> {
        let mut d = MultiPoly::one(self.nvars());
        for (a, e) in &self.den {
            d = d.mul(&a.pow(*e));
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The value as a polynomial, if the denominator is trivial.
    pub fn as_poly(&self) -> Option<&MultiPoly<C>> {
        self.den.is_empty().then_some(&self.num)
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        for (atom, e) in self.den.iter_mut() {
            if let Some(v) = single_variable(atom) {
                let k = (*e).min(self.num.min_degree_in(v));
                if k > 0 {
                    self.num = self.num.shift_down(v, k);
                    *e -= k;
                }
                continue;
            }
            while *e > 0 {
                match self.num.div_exact(atom) {
                    Some(q) => {
                        self.num = q;
                        *e -= 1;
                    }
                    None => break,
                }
            }
        }
        self.den.retain(|(_, e)| *e > 0);
    }

    fn exponent_of(&self, atom: &MultiPoly<C>) -> u32 {
        self.den
            .iter()
            .find(|(a, _)| a == atom)
            .map_or(0, |(_, e)| *e)
    }

    /// Multiplies the numerator by `Π atom^(target − own)` so the denominator becomes `target`.
    fn lift_to(&self, target: &[(MultiPoly<C>, u32)]) -> MultiPoly<C> {
        let mut num = self.num.clone();
        for (atom, e) in target {
            let missing = e - self.exponent_of(atom);
            if missing > 0 {
                num = num.mul(&atom.pow(missing));
            }
        }
        num
    }

    fn common_denominator(&self, other: &Self) -> Vec<(MultiPoly<C>, u32)> {
        let mut den = self.den.clone();
        for (atom, e) in &other.den {
            match den.iter_mut().find(|(a, _)| a == atom) {
                Some((_, f)) => *f = (*f).max(*e),
                None => den.push((atom.clone(), *e)),
            }
        }
        den
    }

    pub fn add(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let den = self.common_denominator(other);
        let num = self.lift_to(&den).add(&other.lift_to(&den));
        let mut r = RatFunc { num, den };
        r.reduce();
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero(self.nvars());
        }
        RatFunc {
            num: self.num.scale(k),
            den: self.den.clone(),
        }
    }

    pub fn mul_poly(&self, p: &MultiPoly<C>) -> Self {
        let mut r = RatFunc {
            num: self.num.mul(p),
            den: self.den.clone(),
        };
        r.reduce();
        r
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.nvars());
        }
        let mut den = self.den.clone();
        for (atom, e) in &other.den {
            match den.iter_mut().find(|(a, _)| a == atom) {
                Some((_, f)) => *f += e,
                None => den.push((atom.clone(), *e)),
            }
        }
        let mut r = RatFunc {
            num: self.num.mul(&other.num),
            den,
        };
        r.reduce();
        r
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.nvars());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Rebuilds from a transformed numerator and transformed atoms,
    /// absorbing atoms that became constants.
    fn rebuild(
        num: MultiPoly<C>,
        atoms: impl IntoIterator<Item = (MultiPoly<C>, u32)>,
    ) -> Result<Self> {
        let mut r = Self::from_poly(num);
        for (atom, e) in atoms {
            r = r.mul(&Self::recip_power(&atom, e).map_err(|_| {
                Error::Consistency("a denominator factor vanishes under substitution".into())
            })?);
        }
        Ok(r)
    }

    /// Renames variables as in [`MultiPoly::remap`]; merging variables may
    /// make a denominator factor vanish, which is an error.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> Result<Self> {
        Self::rebuild(
            self.num.remap(nvars, map),
            self.den.iter().map(|(a, e)| (a.remap(nvars, map), *e)),
        )
    }

    /// Substitutes a polynomial for `x_var`.
    pub fn substitute(&self, var: usize, value: &MultiPoly<C>) -> Result<Self> {
        Self::rebuild(
            self.num.substitute(var, value),
            self.den.iter().map(|(a, e)| (a.substitute(var, value), *e)),
        )
    }

    /// `∂/∂x_var`.
    pub fn diff(&self, var: usize) -> Self {
        let nvars = self.nvars();
        // d(N/Π a^e) = (N' Π a − N Σ e a' Π_{b≠a} b) / Π a^{e+1}
        let moving: Vec<usize> = (0..self.den.len())
            .filter(|&i| !self.den[i].0.diff(var).is_zero())
            .collect();
        let mut num = self.num.diff(var);
        for &i in &moving {
            num = num.mul(&self.den[i].0);
        }
        for &i in &moving {
            let (a, e) = &self.den[i];
            let mut term = self.num.mul(&a.diff(var)).scale(&C::from_int(*e as i64));
            for &j in &moving {
                if j != i {
                    term = term.mul(&self.den[j].0);
                }
            }
            num = num.sub(&term);
        }
        let mut den = self.den.clone();
        for &i in &moving {
            den[i].1 += 1;
        }
        let mut r = RatFunc { num, den };
        if r.num.is_zero() {
            return Self::zero(nvars);
        }
        r.reduce();
        r
    }

    /// Renders with variable names, as `(numerator)/(atom^e*...)`.
    pub fn render(&self, names: &[&str]) -> String {
        let num = self.num.render(names);
        if self.den.is_empty() {
            return num;
        }
        format!("({num})/({})", self.render_denominator(names))
    }

    pub fn render_denominator(&self, names: &[&str]) -> String {
        if self.den.is_empty() {
            return "1".into();
        }
        let mut atoms: Vec<String> = self
            .den
            .iter()
            .map(|(a, e)| {
                let body = format!("({})", a.render(names));
                if *e == 1 {
                    body
                } else {
                    format!("{body}^{e}")
                }
            })
            .collect();
        atoms.sort();
        atoms.join("*")
    }
}

impl<C: Scalar> fmt::Display for RatFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Rational;

    type P = MultiPoly<Rational>;
    type R = RatFunc<Rational>;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_frac(n, d)
    }

    fn x() -> P {
        P::var(2, 0)
    }

    fn y() -> P {
        P::var(2, 1)
    }

    #[test]
    fn cancellation() {
        let d = x().sub(&y());
        let r = R::quotient(&x().mul(&x()).sub(&y().mul(&y())), &d).unwrap();
        assert_eq!(r.as_poly(), Some(&x().add(&y())));
        let r = R::recip_power(&d.scale(&q(3, 1)), 2).unwrap();
        assert_eq!(r.denominator().len(), 1);
        assert_eq!(r.numerator(), &P::constant(2, q(1, 9)));
    }

    #[test]
    fn field_identities() {
        let a = R::quotient(&x(), &x().add(&P::one(2))).unwrap();
        let b = R::quotient(&y(), &x().sub(&y())).unwrap();
        let sum = a.add(&b);
        assert!(sum.sub(&a).sub(&b).is_zero());
        let prod = a.mul(&b);
        let back = prod.mul(&R::quotient(&x().sub(&y()), &y()).unwrap());
        assert!(back.sub(&a).is_zero());
        // 1/(x − y) − 1/(x + y) = 2y/(x² − y²)
        let lhs = R::recip_power(&x().sub(&y()), 1)
            .unwrap()
            .sub(&R::recip_power(&x().add(&y()), 1).unwrap());
        let rhs = R::quotient(&y().scale(&q(2, 1)), &x().mul(&x()).sub(&y().mul(&y()))).unwrap();
        assert!(lhs.sub(&rhs).is_zero());
    }

    #[test]
    fn derivative_quotient_rule() {
        // d/dx (x / (x − y)^2) = (−x − y)/(x − y)^3
        let f = R::quotient(&x(), &x().sub(&y()).pow(2)).unwrap();
        let expect = R::quotient(&x().add(&y()).neg(), &x().sub(&y()).pow(3)).unwrap();
        assert!(f.diff(0).sub(&expect).is_zero());
    }

    #[test]
    fn substitution_and_vanishing_atoms() {
        let f = R::quotient(&P::one(2), &x().add(&y())).unwrap();
        let merged = f.remap(2, &[0, 0]).unwrap();
        assert!(merged
            .sub(&R::quotient(&P::one(2), &x().scale(&q(2, 1))).unwrap())
            .is_zero());
        let g = R::recip_power(&x().sub(&y()), 1).unwrap();
        assert!(g.remap(2, &[0, 0]).is_err());
        let flipped = f.substitute(1, &y().neg()).unwrap();
        assert!(flipped
            .sub(&R::recip_power(&x().sub(&y()), 1).unwrap())
            .is_zero());
    }
}
