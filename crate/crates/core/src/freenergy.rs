//! Free energy `F = log τ`, its genus expansion, moment variables and the
//! `B_k(N)` decomposition.
//!
//! A monomial `ν^d Π t^e` of weighted degree `k` with `n` time factors has
//! genus `g = (k − n − 2d + 2)/2` once `ν^d` is read as `S^{2d}` (`S = ħN`);
//! read with `N` held fixed instead, it belongs to `ħ^{k−n}`, i.e. to
//! `F_G(T, N)` with `G = (k − n + 2)/2`. Both views are kept, never mixed.
//!
//! Moment variables are `T_k = t_k/(2 − t_1)^k`. Polynomials in them reuse
//! [`TimesPoly`], a monomial `T_3^a T_5^b …` being stored as `t_3^a t_5^b …`
//! and the `ν` slot carrying the grading parameter (`S²` or `ν`).

use std::collections::BTreeMap;

use crate::cutjoin::{b_polynomial, TauSeries};
use crate::error::{domain, Error, Result};
use crate::exactalg::{Scalar, TimeMonomial, TimesPoly, UniPoly};

/// `F^{(0)} = 0, F^{(1)}, …, F^{(K)}`, optionally modulo monomials with
/// more than `max_factors` time factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeEnergySeries<C: Scalar> {
    pub orders: Vec<TimesPoly<C>>,
    pub max_factors: Option<u32>,
}

impl<C: Scalar> FreeEnergySeries<C> {
    pub fn max_order(&self) -> usize {
        self.orders.len() - 1
    }

    fn factor_window(&self) -> u32 {
        self.max_factors.unwrap_or(u32::MAX)
    }
}

fn mul_window<C: Scalar>(a: &TimesPoly<C>, b: &TimesPoly<C>, window: Option<u32>) -> TimesPoly<C> {
    match window {
        Some(n) => a.mul_truncated(b, n),
        None => a.mul(b),
    }
}

/// `log Σ_k τ^{(k)}` order by order: `k F^{(k)} = k τ^{(k)} − Σ_{j<k} j F^{(j)} τ^{(k−j)}`.
pub fn log_expansion<C: Scalar>(tau: &TauSeries<C>) -> Result<FreeEnergySeries<C>> {
    log_expansion_truncated(tau, None)
}

/// [`log_expansion`] modulo monomials with more than `max_factors` time factors.
pub fn log_expansion_truncated<C: Scalar>(
    tau: &TauSeries<C>,
    max_factors: Option<u32>,
) -> Result<FreeEnergySeries<C>> {
    if tau.orders.first() != Some(&TimesPoly::one()) {
        return domain("the zeroth tau order must be 1");
    }
    let t: Vec<TimesPoly<C>> = match max_factors {
        Some(n) => tau.orders.iter().map(|p| p.truncate_factors(n)).collect(),
        None => tau.orders.clone(),
    };
    let mut f = vec![TimesPoly::zero()];
    for k in 1..t.len() {
        let mut acc = t[k].scale(&C::from_int(k as i64));
        for j in 1..k {
            let prod = mul_window(&f[j], &t[k - j], max_factors);
            acc = acc.sub(&prod.scale(&C::from_int(j as i64)));
        }
        f.push(acc.scale(&(C::one() / C::from_int(k as i64))));
    }
    Ok(FreeEnergySeries {
        orders: f,
        max_factors,
    })
}

/// `exp Σ_k F^{(k)}` order by order: `k τ^{(k)} = Σ_{j≤k} j F^{(j)} τ^{(k−j)}`.
pub fn exp_expansion<C: Scalar>(f: &FreeEnergySeries<C>) -> Vec<TimesPoly<C>> {
    let mut tau = vec![TimesPoly::one()];
    for k in 1..f.orders.len() {
        let mut acc = TimesPoly::zero();
        for j in 1..=k {
            let prod = mul_window(&f.orders[j], &tau[k - j], f.max_factors);
            acc.add_assign(&prod.scale(&C::from_int(j as i64)));
        }
        tau.push(acc.scale(&(C::one() / C::from_int(k as i64))));
    }
    tau
}

/// Genus of a monomial of weighted degree `k` in the `S` view.
pub fn monomial_genus(k: u32, m: &TimeMonomial) -> Result<u32> {
    let num = k as i64 + 2 - m.factor_count() as i64 - 2 * m.nu_power() as i64;
    if num < 0 || num % 2 != 0 {
        return Err(Error::Consistency(format!(
            "monomial {m} at order {k} has genus {num}/2"
        )));
    }
    Ok((num / 2) as u32)
}

/// `F_g(t, S)` for every genus present; `ν^d` in an entry stands for `S^{2d}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusTable<C: Scalar> {
    pub genera: BTreeMap<u32, TimesPoly<C>>,
    pub max_order: usize,
    pub max_factors: Option<u32>,
}

impl<C: Scalar> GenusTable<C> {
    pub fn genus(&self, g: u32) -> TimesPoly<C> {
        self.genera.get(&g).cloned().unwrap_or_default()
    }

    /// Whether every monomial of genus `g`, `S`-power `2d` and `n` factors has been computed.
    pub fn is_complete(&self, g: u32, d: u32, n: u32) -> bool {
        2 * g as i64 - 2 + n as i64 + 2 * d as i64 <= self.max_order as i64
            && self.max_factors.is_none_or(|w| n <= w)
    }
}

/// Regroups the free energy by genus, failing on a negative or fractional genus.
pub fn genus_split<C: Scalar>(f: &FreeEnergySeries<C>) -> Result<GenusTable<C>> {
    let mut genera: BTreeMap<u32, TimesPoly<C>> = BTreeMap::new();
    for (k, p) in f.orders.iter().enumerate() {
        for (m, c) in p.iter() {
            let g = monomial_genus(k as u32, m)?;
            genera.entry(g).or_default().add_term(m.clone(), c.clone());
        }
    }
    Ok(GenusTable {
        genera,
        max_order: f.max_order(),
        max_factors: f.max_factors,
    })
}

/// `F = L · log(1 − t_1/2) + P(T)` with `L` and the coefficients of `P`
/// polynomials in the grading parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentForm<C: Scalar> {
    pub log_coeff: UniPoly<C>,
    pub poly: TimesPoly<C>,
    /// Number of time factors through which the reconstruction was checked.
    pub factors: u32,
}

/// Expansion of `T^j = Π t_k^{j_k} 2^{−w} (1 − t_1/2)^{−w}`, `w = Σ k j_k`,
/// through `max_factors` time factors.
pub fn expand_moment_monomial<C: Scalar>(
    m: &TimeMonomial,
    c: &C,
    max_factors: u32,
) -> TimesPoly<C> {
    let w = m.weighted_degree() as i64;
    let base = m.factor_count();
    let mut out = TimesPoly::zero();
    if base > max_factors {
        return out;
    }
    let lead = c.clone() / C::from_int(2).powi(w as u32);
    // binom(w+i−1, i) / 2^i
    let mut coeff = lead;
    for i in 0..=(max_factors - base) {
        let mut mm = m.clone();
        mm.raise_slot(0, i);
        out.add_term(mm, coeff.clone());
        coeff = coeff.mul_int(w + i as i64) / C::from_int(2 * (i as i64 + 1));
    }
    out
}

/// `L · log(1 − t_1/2)` through `t_1^{max_factors}`, with `L` a polynomial in the grading parameter.
pub fn expand_log<C: Scalar>(l: &UniPoly<C>, max_factors: u32) -> TimesPoly<C> {
    let mut out = TimesPoly::zero();
    for i in 1..=max_factors {
        let c = -(C::one() / (C::from_int(2).powi(i) * C::from_int(i as i64)));
        for (d, ld) in l.coefficients().iter().enumerate() {
            let m = TimeMonomial::new(vec![i], d as u32);
            out.add_term(m, ld.mul_ref(&c));
        }
    }
    out
}

/// Expands a moment form back into the times through `max_factors` factors.
pub fn expand_moment_form<C: Scalar>(form: &MomentForm<C>, max_factors: u32) -> TimesPoly<C> {
    let mut out = expand_log(&form.log_coeff, max_factors);
    for (m, c) in form.poly.iter() {
        out.add_assign(&expand_moment_monomial(m, c, max_factors));
    }
    out
}

/// Reconstructs `p` (given through `factors` time factors) as a moment form.
///
/// The log coefficient is read from `t_1`, each `T`-monomial coefficient from
/// the matching `t_1`-free monomial; every remaining coefficient in the
/// window is then checked against the expansion.
pub fn reconstruct_moments<C: Scalar>(p: &TimesPoly<C>, factors: u32) -> Result<MomentForm<C>> {
    let p = p.truncate_factors(factors);
    let mut log_coeff = UniPoly::zero();
    let mut poly = TimesPoly::zero();
    for (m, c) in p.iter() {
        if m.factor_count() == 0 {
            return Err(Error::Consistency(format!(
                "constant term {m} in a free energy"
            )));
        }
        if m.slot_exponent(0) == 0 {
            let w = m.weighted_degree();
            poly.add_term(m.clone(), c.mul_ref(&C::from_int(2).powi(w)));
        } else if m.factor_count() == 1 {
            let l = UniPoly::monomial(m.nu_power() as usize, c.mul_int(-2));
            log_coeff = log_coeff.add(&l);
        }
    }
    let form = MomentForm {
        log_coeff,
        poly,
        factors,
    };
    let residual = p.sub(&expand_moment_form(&form, factors));
    if !residual.is_zero() {
        return Err(Error::Consistency(format!(
            "moment reconstruction leaves {} residual terms within {factors} factors",
            residual.len()
        )));
    }
    Ok(form)
}

/// `F̃_g(T, S) = Σ_d (−1)^d S^{2d} F̃_g^{(d)}(T)` plus the log coefficient (a polynomial in `S²`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusMoments<C: Scalar> {
    pub genus: u32,
    pub log_coeff: UniPoly<C>,
    /// `pieces[d] = F̃_g^{(d)}`.
    pub pieces: Vec<TimesPoly<C>>,
}

impl<C: Scalar> GenusMoments<C> {
    /// Coefficient of `S^{2d} T^j` in `F̃_g(T, S)`.
    pub fn s_coefficient(&self, d: usize, m: &TimeMonomial) -> C {
        let c = self
            .pieces
            .get(d)
            .map(|p| p.coefficient(m))
            .unwrap_or_else(C::zero);
        if d % 2 == 1 {
            -c
        } else {
            c
        }
    }
}

/// Moment form of genus `g` in the `S` view, using data through `factors` time factors.
/// Returns every piece `F̃_g^{(d)}` the table determines completely.
pub fn to_moments<C: Scalar>(
    g: u32,
    table: &GenusTable<C>,
    factors: u32,
) -> Result<GenusMoments<C>> {
    let factors = factors.min(table.max_factors.unwrap_or(u32::MAX));
    let by_order = (table.max_order as i64 + 2 - 2 * g as i64 - factors as i64).div_euclid(2);
    let by_factors = factors as i64 + 1 - g as i64;
    let d_max = by_order.min(by_factors);
    if d_max < 0 {
        return Err(Error::MissingDependency(format!(
            "genus {g} needs tau order {} for {factors} factors",
            2 * g as i64 - 2 + factors as i64
        )));
    }
    let data = table.genus(g).filter(|m| m.nu_power() as i64 <= d_max);
    let form = reconstruct_moments(&data, factors)?;
    let pieces = (0..=d_max as u32)
        .map(|d| {
            let piece = form.poly.nu_coefficient(d);
            if d % 2 == 1 {
                piece.neg()
            } else {
                piece
            }
        })
        .collect();
    Ok(GenusMoments {
        genus: g,
        log_coeff: form.log_coeff,
        pieces,
    })
}

/// `F_G(t, N)`: the monomials with `k − n = 2G − 2`, `ν` kept.
pub fn n_view_genus<C: Scalar>(f: &FreeEnergySeries<C>, big_g: u32) -> TimesPoly<C> {
    let mut out = TimesPoly::zero();
    for (k, p) in f.orders.iter().enumerate() {
        for (m, c) in p.iter() {
            if k as i64 - m.factor_count() as i64 == 2 * big_g as i64 - 2 {
                out.add_term(m.clone(), c.clone());
            }
        }
    }
    out
}

/// Moment form of `F_G(t, N)` with coefficients in `ν`, checked through `factors` factors.
pub fn n_view_moments<C: Scalar>(
    f: &FreeEnergySeries<C>,
    big_g: u32,
    factors: u32,
) -> Result<MomentForm<C>> {
    let factors = factors.min(f.factor_window());
    let needed = 2 * big_g as i64 - 2 + factors as i64;
    if needed > f.max_order() as i64 {
        return Err(Error::MissingDependency(format!(
            "F_{big_g} through {factors} factors needs tau order {needed}"
        )));
    }
    reconstruct_moments(&n_view_genus(f, big_g), factors)
}

/// Solves `F_G = Σ_{k=2}^{G} B_k(ν) F_{G,k}(T)`; returns `(k, F_{G,k})` for `k = G, …, 2`.
pub fn b_decompose<C: Scalar>(
    big_g: u32,
    form: &MomentForm<C>,
) -> Result<Vec<(u32, TimesPoly<C>)>> {
    if big_g < 2 {
        return domain(format!("B_k decomposition needs genus >= 2, got {big_g}"));
    }
    if !form.log_coeff.is_zero() {
        return Err(Error::Consistency(format!(
            "genus {big_g} carries a log term"
        )));
    }
    let bs: Vec<UniPoly<C>> = (0..=big_g)
        .map(|k| b_polynomial(k as i64).expect("k is non-negative"))
        .collect();
    let mut parts: Vec<TimesPoly<C>> = vec![TimesPoly::zero(); big_g as usize + 1];
    for (m, mut p) in form.poly.by_time_monomial() {
        for k in (2..=big_g as usize).rev() {
            let lead = bs[k].coefficient(k);
            let c = p.coefficient(k) / lead;
            if !c.is_zero() {
                p = p.sub(&bs[k].scale(&c));
                parts[k].add_term(m.clone(), c);
            }
        }
        if !p.is_zero() {
            return Err(Error::Consistency(format!(
                "coefficient of {m} in F_{big_g} is not in the span of B_2..B_{big_g}: remainder {p}"
            )));
        }
    }
    Ok((2..=big_g as usize)
        .rev()
        .map(|k| (k as u32, parts[k].clone()))
        .collect())
}

fn double_factorial<C: Scalar>(n: u32) -> C {
    (1..=n as i64)
        .rev()
        .step_by(2)
        .fold(C::one(), |acc, i| acc.mul_int(i))
}

fn factorial<C: Scalar>(n: u32) -> C {
    (1..=n as i64).fold(C::one(), |acc, i| acc.mul_int(i))
}

/// Closed-form genus-zero coefficient of `T_3^{j_1} T_5^{j_2} …` and its `S` power `2m + 2`,
/// `m = Σ i j_i`.
pub fn genus0_coefficient<C: Scalar>(j: &[u32]) -> Result<(C, u32)> {
    if j.iter().all(|&x| x == 0) {
        return domain("genus-zero coefficient needs a non-empty multi-index");
    }
    let m: u32 = j.iter().enumerate().map(|(i, &x)| (i as u32 + 1) * x).sum();
    let w: u32 = j
        .iter()
        .enumerate()
        .map(|(i, &x)| (2 * i as u32 + 3) * x)
        .sum();
    let mut c = factorial::<C>(w - 1) / (C::from_int(2).powi(m) * factorial::<C>(2 * m + 2));
    for (idx, &x) in j.iter().enumerate() {
        let i = idx as u32 + 1;
        let num = double_factorial::<C>(2 * i + 1).powi(x);
        let den = factorial::<C>(i).powi(x) * factorial::<C>(x);
        c = c * num / den;
    }
    if m.is_multiple_of(2) {
        c = -c;
    }
    Ok((c, 2 * m + 2))
}

/// The moment monomial `T_3^{j_1} T_5^{j_2} …`.
pub fn moment_monomial(j: &[u32]) -> TimeMonomial {
    let mut exps = vec![0];
    exps.extend_from_slice(j);
    TimeMonomial::new(exps, 0)
}

/// All multi-indices `(j_1, j_2, …)` with `Σ i j_i = m`.
pub fn multi_indices(m: u32) -> Vec<Vec<u32>> {
    fn rec(rest: u32, max_part: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(acc.clone());
            return;
        }
        for part in (1..=max_part.min(rest)).rev() {
            if acc.len() < part as usize {
                acc.resize(part as usize, 0);
            }
            acc[part as usize - 1] += 1;
            rec(rest - part, part, acc, out);
            acc[part as usize - 1] -= 1;
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    for j in &mut out {
        while j.last() == Some(&0) {
            j.pop();
        }
    }
    out
}

/// Monomials of a moment polynomial violating `Σ m·j_m = degree` (`T_{2m+1}` has weight `m`).
pub fn degree_rule_failures<C: Scalar>(piece: &TimesPoly<C>, degree: u32) -> Vec<TimeMonomial> {
    piece
        .iter()
        .filter(|(m, _)| {
            m.slot_exponent(0) != 0
                || m.exponents()
                    .iter()
                    .enumerate()
                    .map(|(i, &e)| i as u32 * e)
                    .sum::<u32>()
                    != degree
        })
        .map(|(m, _)| m.clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cutjoin::{tau_expansion, Nu};
    use crate::exactalg::Rational;

    type P = TimesPoly<Rational>;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_frac(n, d)
    }

    fn tmono(pairs: &[(u32, u32)]) -> TimeMonomial {
        TimeMonomial::from_pairs(pairs, 0).unwrap()
    }

    #[test]
    fn log_low_orders() {
        let tau = tau_expansion::<Rational>(4, Nu::Symbolic);
        let f = log_expansion(&tau).unwrap();
        assert_eq!(f.orders[1], tau.orders[1]);
        let expect = tau.orders[2].sub(&tau.orders[1].pow(2).scale(&q(1, 2)));
        assert_eq!(f.orders[2], expect);
        // F^{(2)} = μ/4 t_1² with μ = (1 − 4ν)/16
        let mu = P::from_nu_poly(&UniPoly::from_coefficients(vec![q(1, 64), q(-4, 64)]));
        assert_eq!(f.orders[2], mu.mul(&P::time(1).unwrap().pow(2)));
        let mut bad = tau.clone();
        bad.orders[0] = P::constant(q(2, 1));
        assert!(log_expansion(&bad).is_err());
    }

    #[test]
    fn exp_log_round_trip() {
        let tau = tau_expansion::<Rational>(10, Nu::Symbolic);
        let f = log_expansion(&tau).unwrap();
        assert_eq!(exp_expansion(&f), tau.orders);
        let ft = log_expansion_truncated(&tau, Some(3)).unwrap();
        let back = exp_expansion(&ft);
        for (a, b) in back.iter().zip(&tau.orders) {
            assert_eq!(a, &b.truncate_factors(3));
        }
    }

    #[test]
    fn genus_assignment() {
        let tau = tau_expansion::<Rational>(1, Nu::Symbolic);
        let table = genus_split(&log_expansion(&tau).unwrap()).unwrap();
        let t1 = tmono(&[(1, 1)]);
        assert_eq!(table.genus(0).coefficient(&t1.with_nu(1)), q(-1, 4));
        assert_eq!(table.genus(1).coefficient(&t1), q(1, 16));
        assert!(table.genus(0).nu_coefficient(0).is_zero());
    }

    #[test]
    fn moment_examples() {
        let tau = tau_expansion::<Rational>(12, Nu::Symbolic);
        let f = log_expansion_truncated(&tau, Some(5)).unwrap();
        let table = genus_split(&f).unwrap();
        let g1 = to_moments(1, &table, 5).unwrap();
        assert_eq!(g1.log_coeff, UniPoly::constant(q(-1, 8)));
        assert!(g1.pieces[0].is_zero());
        assert_eq!(g1.pieces[1], P::monomial(tmono(&[(3, 1)]), q(5, 16)));
        let g2 = to_moments(2, &table, 5).unwrap();
        assert_eq!(g2.pieces[0], P::monomial(tmono(&[(3, 1)]), q(9, 128)));
        let g0 = to_moments(0, &table, 5).unwrap();
        assert_eq!(g0.log_coeff, UniPoly::monomial(1, q(1, 2)));
        assert_eq!(g0.pieces[2], P::monomial(tmono(&[(3, 1)]), q(1, 8)));
    }

    #[test]
    fn b_decomposition_genus_two() {
        let tau = tau_expansion::<Rational>(8, Nu::Symbolic);
        let f = log_expansion_truncated(&tau, Some(4)).unwrap();
        let form = n_view_moments(&f, 2, 4).unwrap();
        let parts = b_decompose(2, &form).unwrap();
        assert_eq!(parts, vec![(2, P::monomial(tmono(&[(3, 1)]), q(1, 128)))]);
    }

    #[test]
    fn genus0_formula_examples() {
        assert_eq!(genus0_coefficient::<Rational>(&[1]).unwrap(), (q(1, 8), 4));
        assert_eq!(
            genus0_coefficient::<Rational>(&[0, 1]).unwrap(),
            (q(-1, 16), 6)
        );
        assert_eq!(
            genus0_coefficient::<Rational>(&[2]).unwrap(),
            (q(-3, 16), 6)
        );
        assert!(genus0_coefficient::<Rational>(&[]).is_err());
        assert!(genus0_coefficient::<Rational>(&[0, 0]).is_err());
    }

    #[test]
    fn multi_index_enumeration() {
        assert_eq!(multi_indices(1), vec![vec![1]]);
        let mut three = multi_indices(3);
        three.sort();
        assert_eq!(three, vec![vec![0, 0, 1], vec![1, 1], vec![3]]);
        assert_eq!(multi_indices(6).len(), 11);
    }
}
