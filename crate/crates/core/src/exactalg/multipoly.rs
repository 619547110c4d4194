//! Sparse multivariate polynomials over a fixed number of variables.
//!
//! Used where the odd-times ring is too narrow: Schur functions need the
//! even times while being expanded, and correlators live in a ring of
//! polynomials in `S²` and the sheet coordinates `u_i`. Monomials are
//! exponent vectors ordered lexicographically (variable 0 most significant),
//! so the leading term is the last map entry.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use super::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly<C: Scalar> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, C>,
}

impl<C: Scalar> MultiPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    /// The variable `x_var`.
    pub fn var(nvars: usize, var: usize) -> Self {
        Self::monomial(nvars, var, 1, C::one())
    }

    /// `c · x_var^power`.
    pub fn monomial(nvars: usize, var: usize, power: u32, c: C) -> Self {
        let mut e = vec![0; nvars];
        e[var] = power;
        let mut p = Self::zero(nvars);
        p.add_term(e, c);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, C)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
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

    /// Terms in ascending lexicographic order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Vec<u32>, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &[u32]) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    pub fn leading_term(&self) -> Option<(&Vec<u32>, &C)> {
        self.terms.iter().next_back()
    }

    /// The constant value, if the polynomial has no variable dependence.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => {
                let (e, c) = self.terms.iter().next()?;
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: C) {
        debug_assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign_ref(&c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.mul_ref(k)))
                .collect(),
        }
    }

    /// Multiplies by the monomial `c · x^e`.
    pub fn mul_monomial(&self, e: &[u32], c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(ee, cc)| (add_exps(ee, e), cc.mul_ref(c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(add_exps(ea, eb), ca.mul_ref(cb));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// `∂/∂x_var`.
    pub fn diff(&self, var: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[var] > 0 {
                let mut ee = e.clone();
                ee[var] -= 1;
                out.add_term(ee, c.mul_int(e[var] as i64));
            }
        }
        out
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    /// Total degree (0 for the zero polynomial).
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Largest power of `x_var` dividing every term.
    pub fn min_degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).min().unwrap_or(0)
    }

    /// Divides every term by `x_var^k`; the caller guarantees divisibility.
    pub fn shift_down(&self, var: usize, k: u32) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut ee = e.clone();
                    ee[var] -= k;
                    (ee, c.clone())
                })
                .collect(),
        }
    }

    /// Substitutes a polynomial (in the same variables) for `x_var`.
    pub fn substitute(&self, var: usize, value: &Self) -> Self {
        let top = self.degree_in(var);
        let mut powers = vec![Self::one(self.nvars)];
        for i in 1..=top as usize {
            powers.push(powers[i - 1].mul(value));
        }
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            for (pe, pc) in &powers[e[var] as usize].terms {
                let mut ee = pe.clone();
                for (i, x) in e.iter().enumerate() {
                    if i != var {
                        ee[i] += x;
                    }
                }
                out.add_term(ee, c.mul_ref(pc));
            }
        }
        out
    }

    /// Substitutes a constant for `x_var`.
    pub fn evaluate_var(&self, var: usize, value: &C) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            rest[var] = 0;
            out.add_term(rest, c.mul_ref(&value.powi(e[var])));
        }
        out
    }

    /// Renames variables: variable `i` becomes `map[i]` in a ring of `nvars` variables.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> Self {
        let mut out = Self::zero(nvars);
        for (e, c) in &self.terms {
            let mut ee = vec![0; nvars];
            for (i, &x) in e.iter().enumerate() {
                ee[map[i]] += x;
            }
            out.add_term(ee, c.clone());
        }
        out
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (lead_e, lead_c) = divisor.leading_term().expect("division by zero polynomial");
        let lead_e = lead_e.clone();
        let inv = C::one() / lead_c.clone();
        let mut rem = self.terms.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((e, c)) = rem.pop_last() {
            if e.iter().zip(&lead_e).any(|(a, b)| a < b) {
                return None;
            }
            let qe: Vec<u32> = e.iter().zip(&lead_e).map(|(a, b)| a - b).collect();
            let qc = c.mul_ref(&inv);
            for (de, dc) in divisor.terms.iter().rev().skip(1) {
                let ne = add_exps(de, &qe);
                let delta = dc.mul_ref(&qc);
                match rem.entry(ne) {
                    Entry::Occupied(mut o) => {
                        let v = o.get().clone() - delta;
                        if v.is_zero() {
                            o.remove();
                        } else {
                            *o.get_mut() = v;
                        }
                    }
                    Entry::Vacant(v) => {
                        v.insert(-delta);
                    }
                }
            }
            quot.add_term(qe, qc);
        }
        Some(quot)
    }

    /// Divides by the leading coefficient, returning the normalized polynomial and that coefficient.
    pub fn make_monic(&self) -> (Self, C) {
        match self.leading_term() {
            None => (self.clone(), C::one()),
            Some((_, c)) => {
                let c = c.clone();
                (self.scale(&(C::one() / c.clone())), c)
            }
        }
    }

    /// Splits by the power of `x_var`: entry `k` is the coefficient of `x_var^k`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Self> {
        let mut out = vec![Self::zero(self.nvars); self.degree_in(var) as usize + 1];
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            rest[var] = 0;
            out[e[var] as usize].add_term(rest, c.clone());
        }
        out
    }
}

fn add_exps(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl<C: Scalar> fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with_names(f, &[])
    }
}

impl<C: Scalar> MultiPoly<C> {
    /// Renders with the given variable names (defaults to `x0, x1, ...`).
    pub fn render(&self, names: &[&str]) -> String {
        struct W<'a, C: Scalar>(&'a MultiPoly<C>, &'a [&'a str]);
        impl<C: Scalar> fmt::Display for W<'_, C> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_with_names(f, self.1)
            }
        }
        W(self, names).to_string()
    }

    fn fmt_with_names(&self, f: &mut fmt::Formatter<'_>, names: &[&str]) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let name = names
                    .get(i)
                    .map(|s| s.to_string())
                    .unwrap_or(format!("x{i}"));
                factors.push(if x == 1 { name } else { format!("{name}^{x}") });
            }
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            let coeff = abs.to_fraction_string();
            let coeff = coeff.strip_suffix("/1").unwrap_or(&coeff).to_string();
            let body = if factors.is_empty() {
                coeff
            } else if abs.is_one() {
                factors.join("*")
            } else {
                format!("{coeff}*{}", factors.join("*"))
            };
            match (first, neg) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::scalar::Rational;

    type P = MultiPoly<Rational>;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn exact_division() {
        let x = P::var(2, 0);
        let y = P::var(2, 1);
        let a = x.sub(&y);
        let b = x.add(&y).add(&P::constant(2, q(3)));
        let prod = a.mul(&b);
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(prod.div_exact(&x), None);
        assert_eq!(P::one(2).div_exact(&a), None);
    }

    #[test]
    fn substitution() {
        let x = P::var(2, 0);
        let y = P::var(2, 1);
        let p = x.mul(&x).add(&y);
        let s = p.substitute(0, &y.add(&P::one(2)));
        assert_eq!(s, y.mul(&y).add(&y.scale(&q(3))).add(&P::one(2)));
        assert_eq!(p.evaluate_var(0, &q(2)), y.add(&P::constant(2, q(4))));
        assert_eq!(p.render(&["x", "y"]), "x^2 + y");
    }
}
