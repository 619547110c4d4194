//! The cut-and-join operator `Ŵ_N` and the order-by-order tau-function.
//!
//! `τ^{(k)} = Ŵ_N^k · 1 / k!`. The expansion runs on the rescaled orders
//! `σ^{(k)} = 16^k k! τ^{(k)}`, which obey `σ^{(k+1)} = 16 Ŵ_N σ^{(k)}`
//! with integer operator coefficients; the rational normalization is put
//! back once per order.

use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde_json::{json, Value};

use crate::error::{domain, Result};
use crate::exactalg::json::times_poly_to_json;
use crate::exactalg::{Scalar, TimeMonomial, TimesPoly, UniPoly};

/// The value of `ν = N²` a series was computed at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Nu<C: Scalar> {
    Symbolic,
    Value(C),
}

impl<C: Scalar> Nu<C> {
    /// `"symbolic"` or the `"p/q"` value.
    pub fn label(&self) -> String {
        match self {
            Nu::Symbolic => "symbolic".to_string(),
            Nu::Value(v) => v.to_fraction_string(),
        }
    }

    /// `ν = (l + 1/2)²`.
    pub fn half_integer(l: u32) -> Self {
        let two_n = C::from_int(2 * l as i64 + 1);
        Nu::Value(two_n.mul_ref(&two_n) / C::from_int(4))
    }
}

/// `τ^{(0)} = 1, τ^{(1)}, …, τ^{(K)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauSeries<C: Scalar> {
    pub orders: Vec<TimesPoly<C>>,
    pub nu: Nu<C>,
}

impl<C: Scalar> TauSeries<C> {
    /// Highest computed order `K`.
    pub fn max_order(&self) -> usize {
        self.orders.len() - 1
    }

    pub fn order(&self, k: usize) -> &TimesPoly<C> {
        &self.orders[k]
    }

    /// `Σ_k τ^{(k)}`.
    pub fn sum(&self) -> TimesPoly<C> {
        let mut out = TimesPoly::zero();
        for p in &self.orders {
            out.add_assign(p);
        }
        out
    }

    /// Substitutes a numeric `ν` into a symbolic series.
    pub fn at_nu(&self, value: &C) -> Self {
        TauSeries {
            orders: self.orders.iter().map(|p| p.substitute_nu(value)).collect(),
            nu: Nu::Value(value.clone()),
        }
    }

    /// The first `k + 1` orders.
    pub fn truncated(&self, k: usize) -> Self {
        TauSeries {
            orders: self.orders[..=k.min(self.max_order())].to_vec(),
            nu: self.nu.clone(),
        }
    }

    pub fn term_counts(&self) -> Vec<usize> {
        self.orders.iter().map(TimesPoly::len).collect()
    }

    /// `{"nu": "symbolic"|"p/q", "orders": K, "tau": [τ^{(0)}, …, τ^{(K)}]}`.
    pub fn to_json(&self) -> Value {
        json!({
            "nu": self.nu.label(),
            "orders": self.max_order(),
            "tau": self.orders.iter().map(times_poly_to_json).collect::<Vec<_>>(),
        })
    }
}

/// `μ_0 = 1/16 − ν/4` as a polynomial in `ν`.
pub fn mu0<C: Scalar>() -> UniPoly<C> {
    UniPoly::from_coefficients(vec![C::from_frac(1, 16), C::from_frac(-1, 4)])
}

/// `Ŵ_N p`, evaluated term by term from the definition.
pub fn apply_cut_and_join<C: Scalar>(p: &TimesPoly<C>) -> TimesPoly<C> {
    let half = C::from_frac(1, 2);
    let quarter = C::from_frac(1, 4);
    let mut out = TimesPoly::zero();
    for (m, c) in p.iter() {
        let exps = m.exponents();
        // ½ Σ (2a+1)(2b+1) t_{2a+1} t_{2b+1} ∂_{2(a+b)+1}
        for (j, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let mut lowered = m.clone();
            lowered.lower_slot(j);
            for a in 0..=j {
                let b = j - a;
                let mut mm = lowered.clone();
                mm.raise_slot(a, 1);
                mm.raise_slot(b, 1);
                let w = ((2 * a + 1) * (2 * b + 1)) as i64 * e as i64;
                out.add_term(mm, c.mul_int(w).mul_ref(&half));
            }
        }
        // ¼ Σ (2a+2b+3) t_{2a+2b+3} ∂_{2a+1} ∂_{2b+1}
        for (a, &ea) in exps.iter().enumerate() {
            for (b, &eb) in exps.iter().enumerate() {
                let mult = if a == b {
                    ea as i64 * (ea as i64 - 1)
                } else {
                    ea as i64 * eb as i64
                };
                if mult == 0 {
                    continue;
                }
                let mut mm = m.clone();
                mm.lower_slot(a);
                mm.lower_slot(b);
                mm.raise_slot(a + b + 1, 1);
                let w = (2 * a + 2 * b + 3) as i64 * mult;
                out.add_term(mm, c.mul_int(w).mul_ref(&quarter));
            }
        }
        // (1/16 − ν/4) t_1
        let mut mm = m.clone();
        mm.raise_slot(0, 1);
        out.add_term(mm.clone(), c.mul_ref(&C::from_frac(1, 16)));
        out.add_term(
            mm.with_nu(m.nu_power() + 1),
            c.mul_ref(&C::from_frac(-1, 4)),
        );
    }
    out
}

/// Time polynomial with `ν`-polynomial coefficients, keyed by the `ν`-free monomial.
type Grouped<C> = FxHashMap<TimeMonomial, Vec<C>>;

fn accumulate<C: Scalar>(
    out: &mut Grouped<C>,
    m: TimeMonomial,
    nu_shift: usize,
    w: i64,
    src: &[C],
) {
    let slot = out.entry(m).or_default();
    if slot.len() < src.len() + nu_shift {
        slot.resize(src.len() + nu_shift, C::zero());
    }
    for (d, c) in src.iter().enumerate() {
        if !c.is_zero() {
            slot[d + nu_shift].add_assign_ref(&c.mul_int(w));
        }
    }
}

/// `16 Ŵ_N` on one grouped term, accumulated into `out`.
fn scaled_cut_and_join_term<C: Scalar>(out: &mut Grouped<C>, m: &TimeMonomial, coeffs: &[C]) {
    let exps = m.exponents();
    for (j, &e) in exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let mut lowered = m.clone();
        lowered.lower_slot(j);
        for a in 0..=j / 2 {
            let b = j - a;
            let mut mm = lowered.clone();
            mm.raise_slot(a, 1);
            mm.raise_slot(b, 1);
            let pair = if a == b { 1 } else { 2 };
            let w = 8 * pair * ((2 * a + 1) * (2 * b + 1)) as i64 * e as i64;
            accumulate(out, mm, 0, w, coeffs);
        }
    }
    for (a, &ea) in exps.iter().enumerate() {
        if ea == 0 {
            continue;
        }
        for (b, &eb) in exps.iter().enumerate().skip(a) {
            let mult = if a == b {
                ea as i64 * (ea as i64 - 1)
            } else {
                2 * ea as i64 * eb as i64
            };
            if mult == 0 {
                continue;
            }
            let mut mm = m.clone();
            mm.lower_slot(a);
            mm.lower_slot(b);
            mm.raise_slot(a + b + 1, 1);
            accumulate(out, mm, 0, 4 * (2 * a + 2 * b + 3) as i64 * mult, coeffs);
        }
    }
    let mut mm = m.clone();
    mm.raise_slot(0, 1);
    accumulate(out, mm.clone(), 0, 1, coeffs);
    accumulate(out, mm, 1, -4, coeffs);
}

fn scaled_step<C: Scalar>(sigma: &Grouped<C>) -> Grouped<C> {
    let terms: Vec<_> = sigma.iter().collect();
    let chunk = (terms.len() / (4 * rayon::current_num_threads())).max(64);
    let partials: Vec<Grouped<C>> = terms
        .par_chunks(chunk)
        .map(|part| {
            let mut out = Grouped::default();
            for (m, c) in part {
                scaled_cut_and_join_term(&mut out, m, c);
            }
            out
        })
        .collect();
    let mut merged = Grouped::default();
    for part in partials {
        for (m, c) in part {
            match merged.get_mut(&m) {
                Some(slot) => {
                    if slot.len() < c.len() {
                        slot.resize(c.len(), C::zero());
                    }
                    for (s, x) in slot.iter_mut().zip(&c) {
                        s.add_assign_ref(x);
                    }
                }
                None => {
                    merged.insert(m, c);
                }
            }
        }
    }
    merged.retain(|_, c| {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        !c.is_empty()
    });
    merged
}

fn ungroup<C: Scalar>(g: &Grouped<C>, scale: &C) -> TimesPoly<C> {
    let mut out = TimesPoly::zero();
    for (m, cs) in g {
        for (d, c) in cs.iter().enumerate() {
            if !c.is_zero() {
                out.add_term(m.with_nu(d as u32), c.mul_ref(scale));
            }
        }
    }
    out
}

/// Computes `τ^{(0)}, …, τ^{(K)}` with symbolic `ν`, then substitutes `ν` if a value is given.
pub fn tau_expansion<C: Scalar>(k_max: usize, nu: Nu<C>) -> TauSeries<C> {
    let mut sigma: Grouped<C> = Grouped::default();
    sigma.insert(TimeMonomial::one(), vec![C::one()]);
    let mut norm = C::one();
    let mut orders = vec![TimesPoly::one()];
    for k in 1..=k_max {
        sigma = scaled_step(&sigma);
        norm = norm.mul_int(16 * k as i64);
        orders.push(ungroup(&sigma, &(C::one() / norm.clone())));
    }
    let series = TauSeries {
        orders,
        nu: Nu::Symbolic,
    };
    match nu {
        Nu::Symbolic => series,
        Nu::Value(v) => series.at_nu(&v),
    }
}

/// `B_k(ν) = Π_{i=1}^{k} ((2i−1)² − 4ν)`.
pub fn b_polynomial<C: Scalar>(k: i64) -> Result<UniPoly<C>> {
    if k < 0 {
        return domain(format!("B_k needs k >= 0, got {k}"));
    }
    let mut acc = UniPoly::one();
    for i in 1..=k {
        let odd = 2 * i - 1;
        acc = acc.mul(&UniPoly::from_coefficients(vec![
            C::from_int(odd * odd),
            C::from_int(-4),
        ]));
    }
    Ok(acc)
}

/// Pairs `(k, m)` with `k > m(m−1)/2` for which `B_m(ν)` fails to divide `τ^{(k)}`.
pub fn divisibility_failures<C: Scalar>(tau: &TauSeries<C>) -> Vec<(usize, usize)> {
    let mut failures = Vec::new();
    for (k, p) in tau.orders.iter().enumerate() {
        for m in 1.. {
            if k <= m * (m - 1) / 2 {
                break;
            }
            let b = b_polynomial::<C>(m as i64).expect("m is non-negative");
            if p.div_exact_nu(&b).is_none() {
                failures.push((k, m));
            }
        }
    }
    failures
}

/// Orders `k` where `Σ_i (2i+1) t_{2i+1} ∂_{2i+1} τ^{(k)} ≠ k τ^{(k)}`.
pub fn euler_failures<C: Scalar>(tau: &TauSeries<C>) -> Vec<usize> {
    tau.orders
        .iter()
        .enumerate()
        .filter(|(k, p)| p.iter().any(|(m, _)| m.weighted_degree() as usize != *k))
        .map(|(k, _)| k)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Rational;

    type P = TimesPoly<Rational>;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_frac(n, d)
    }

    fn t(i: u32) -> P {
        P::time(i).unwrap()
    }

    fn nu_lin(c0: i64, c1: i64, d: i64) -> P {
        P::from_nu_poly(&UniPoly::from_coefficients(vec![q(c0, d), q(c1, d)]))
    }

    #[test]
    fn operator_examples() {
        assert_eq!(apply_cut_and_join(&P::one()), nu_lin(1, -4, 16).mul(&t(1)));
        assert_eq!(
            apply_cut_and_join(&t(3)),
            nu_lin(49, -4, 16).mul(&t(1)).mul(&t(3))
        );
        assert_eq!(
            apply_cut_and_join(&t(1).pow(2)),
            nu_lin(17, -4, 16)
                .mul(&t(1).pow(3))
                .add(&t(3).scale(&q(3, 2)))
        );
    }

    #[test]
    fn fast_expansion_matches_definition() {
        let tau = tau_expansion::<Rational>(9, Nu::Symbolic);
        let mut p = P::one();
        for k in 1..=9 {
            p = apply_cut_and_join(&p).scale(&q(1, k));
            assert_eq!(tau.order(k as usize), &p, "order {k}");
        }
    }

    #[test]
    fn low_orders() {
        let tau = tau_expansion::<Rational>(2, Nu::Symbolic);
        assert_eq!(tau.order(1), &nu_lin(1, -4, 16).mul(&t(1)));
        let b2 = P::from_nu_poly(&b_polynomial(2).unwrap());
        assert_eq!(tau.order(2), &b2.mul(&t(1).pow(2)).scale(&q(1, 512)));
        let tau = tau_expansion::<Rational>(2, Nu::Value(q(25, 4)));
        assert_eq!(tau.order(2), &t(1).pow(2).scale(&q(3, 4)));
    }

    #[test]
    fn b_polynomial_examples() {
        assert_eq!(
            b_polynomial::<Rational>(1).unwrap(),
            UniPoly::from_coefficients(vec![q(1, 1), q(-4, 1)])
        );
        assert_eq!(
            b_polynomial::<Rational>(2).unwrap().evaluate(&q(0, 1)),
            q(9, 1)
        );
        assert_eq!(
            b_polynomial::<Rational>(2).unwrap().evaluate(&q(25, 4)),
            q(384, 1)
        );
        assert_eq!(b_polynomial::<Rational>(0).unwrap(), UniPoly::one());
        assert!(b_polynomial::<Rational>(-1).is_err());
    }

    #[test]
    fn structural_invariants() {
        let tau = tau_expansion::<Rational>(12, Nu::Symbolic);
        assert!(euler_failures(&tau).is_empty());
        assert!(divisibility_failures(&tau).is_empty());
    }
}
