//! Schur functions of triangular partitions: the polynomial tau-functions at
//! half-integer `N`.
//!
//! Schur functions are expanded in all times `t_1, t_2, …` (variable `i`
//! of a [`MultiPoly`] is `t_{i+1}`) and restricted to the odd times only
//! after the determinant has been expanded.

use std::fmt;

use crate::error::{domain, Result};
use crate::exactalg::{MultiPoly, Scalar, TimeMonomial, TimesPoly};

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return domain(format!(
                "{parts:?} is not a weakly decreasing list of positive parts"
            ));
        }
        Ok(Partition { parts })
    }

    /// `(l, l−1, …, 1)`.
    pub fn triangular(l: u32) -> Self {
        Partition {
            parts: (1..=l).rev().collect(),
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Self {
        let width = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (1..=width)
                .map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u32)
                .collect(),
        }
    }

    /// Hook lengths, row by row.
    pub fn hooks(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut out = Vec::new();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                let arm = row - j as u32 - 1;
                let leg = conj.parts[j] - i as u32 - 1;
                out.push(arm + leg + 1);
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `h_n` in the times `t_1 … t_nvars`, from `n h_n = Σ_k k t_k h_{n−k}`; zero for `n < 0`.
pub fn complete_homogeneous<C: Scalar>(n: i64, nvars: usize) -> MultiPoly<C> {
    complete_homogeneous_table(n.max(0) as usize, nvars)
        .pop()
        .filter(|_| n >= 0)
        .unwrap_or_else(|| MultiPoly::zero(nvars))
}

/// `[h_0, h_1, …, h_n]`.
pub fn complete_homogeneous_table<C: Scalar>(n: usize, nvars: usize) -> Vec<MultiPoly<C>> {
    let mut h = vec![MultiPoly::one(nvars)];
    for d in 1..=n {
        let mut acc = MultiPoly::zero(nvars);
        for k in 1..=d.min(nvars) {
            let tk = MultiPoly::monomial(nvars, k - 1, 1, C::from_int(k as i64));
            acc = acc.add(&tk.mul(&h[d - k]));
        }
        h.push(acc.scale(&(C::one() / C::from_int(d as i64))));
    }
    h
}

fn determinant<C: Scalar>(m: &[Vec<MultiPoly<C>>], nvars: usize) -> MultiPoly<C> {
    let n = m.len();
    if n == 0 {
        return MultiPoly::one(nvars);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = MultiPoly::zero(nvars);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<MultiPoly<C>>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = m[0][j].mul(&determinant(&minor, nvars));
        acc = if j % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}

/// `s_λ` in all times `t_1 … t_{|λ|}` via Jacobi–Trudi, `det(h_{λ_i − i + j})`.
pub fn schur_all_times<C: Scalar>(lambda: &Partition) -> MultiPoly<C> {
    let nvars = (lambda.size() as usize).max(1);
    let l = lambda.len();
    let top = lambda.parts.first().copied().unwrap_or(0) as usize + l;
    let h = complete_homogeneous_table::<C>(top, nvars);
    let matrix: Vec<Vec<MultiPoly<C>>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let idx = lambda.parts[i] as i64 - i as i64 + j as i64;
                    if idx < 0 {
                        MultiPoly::zero(nvars)
                    } else {
                        h[idx as usize].clone()
                    }
                })
                .collect()
        })
        .collect();
    determinant(&matrix, nvars)
}

/// Sets the even times to zero and moves a polynomial in all times to the odd-times ring.
pub fn restrict_to_odd<C: Scalar>(p: &MultiPoly<C>) -> TimesPoly<C> {
    let mut out = TimesPoly::zero();
    'terms: for (e, c) in p.iter() {
        let mut exps = Vec::new();
        for (var, &x) in e.iter().enumerate() {
            if x == 0 {
                continue;
            }
            if var % 2 == 1 {
                continue 'terms;
            }
            let slot = var / 2;
            if exps.len() <= slot {
                exps.resize(slot + 1, 0);
            }
            exps[slot] = x;
        }
        out.add_term(TimeMonomial::new(exps, 0), c.clone());
    }
    out
}

/// `s_λ(t)` restricted to odd times.
pub fn schur_in_times<C: Scalar>(lambda: &Partition) -> TimesPoly<C> {
    restrict_to_odd(&schur_all_times(lambda))
}

/// `s_λ(t_k = δ_{k,1}) = Π_cells 1/hook`.
pub fn hook_product<C: Scalar>(lambda: &Partition) -> C {
    lambda
        .hooks()
        .into_iter()
        .fold(C::one(), |acc, h| acc / C::from_int(h as i64))
}

fn factorial<C: Scalar>(n: u32) -> C {
    (1..=n as i64).fold(C::one(), |acc, i| acc.mul_int(i))
}

/// `C_l = (−1)^{l(l+1)/2} / 2^{l²} · Π_{k=1}^{l} (2l−2k+1)!/(l−k)!`.
pub fn triangular_constant<C: Scalar>(l: u32) -> C {
    let mut c = C::one() / C::from_int(2).powi(l * l);
    for k in 1..=l {
        c = c.mul_ref(&factorial::<C>(2 * l - 2 * k + 1)) / factorial::<C>(l - k);
    }
    if (l * (l + 1) / 2) % 2 == 1 {
        c = -c;
    }
    c
}

/// `C_l · s_{λ(l)}(t̃)` with `t̃_1 = t_1 − 2`.
pub fn triangular_tau<C: Scalar>(l: i64) -> Result<TimesPoly<C>> {
    if l < 0 {
        return domain(format!("triangular level must be non-negative, got {l}"));
    }
    let l = l as u32;
    let s = schur_in_times::<C>(&Partition::triangular(l));
    let shifted = s.translate(1, &C::from_int(-2))?;
    Ok(shifted.scale(&triangular_constant(l)))
}

/// `½ Σ_k (2k+1) (t_{2k+1} + shift·δ_{k,0}) ∂_{2k+2m+1} + ¼ Σ_{a+b=m−1} ∂_{2a+1}∂_{2b+1} + constant·δ_{m,0}`.
pub fn schur_virasoro<C: Scalar>(
    m: u32,
    p: &TimesPoly<C>,
    shift: &C,
    constant: &C,
) -> TimesPoly<C> {
    let m = m as usize;
    let half = C::from_frac(1, 2);
    let mut out = TimesPoly::zero();
    for (mono, c) in p.iter() {
        for (slot, &e) in mono.exponents().iter().enumerate() {
            if e == 0 || slot < m {
                continue;
            }
            let k = slot - m;
            let mut lowered = mono.clone();
            lowered.lower_slot(slot);
            let w = c.mul_int(((2 * k + 1) as i64) * e as i64).mul_ref(&half);
            if k == 0 && !shift.is_zero() {
                out.add_term(lowered.clone(), w.mul_ref(shift));
            }
            let mut mm = lowered;
            mm.raise_slot(k, 1);
            out.add_term(mm, w);
        }
    }
    for a in 0..m {
        let b = m - 1 - a;
        out.add_assign(&p.diff_slot(a).diff_slot(b).scale(&C::from_frac(1, 4)));
    }
    if m == 0 {
        out.add_assign(&p.scale(constant));
    }
    out
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

    #[test]
    fn complete_homogeneous_examples() {
        let h = |n| complete_homogeneous::<Rational>(n, 3);
        assert_eq!(h(0), MultiPoly::one(3));
        assert_eq!(h(1), MultiPoly::var(3, 0));
        let t1 = MultiPoly::<Rational>::var(3, 0);
        let t2 = MultiPoly::<Rational>::var(3, 1);
        assert_eq!(h(2), t1.mul(&t1).scale(&q(1, 2)).add(&t2));
        assert!(h(-1).is_zero());
        assert_eq!(restrict_to_odd(&h(2)), t(1).pow(2).scale(&q(1, 2)));
    }

    #[test]
    fn schur_examples() {
        let one = Partition::new(vec![1]).unwrap();
        assert_eq!(schur_in_times::<Rational>(&one), t(1));
        let two_one = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(
            schur_in_times::<Rational>(&two_one),
            t(1).pow(3).scale(&q(1, 3)).sub(&t(3))
        );
        assert_eq!(hook_product::<Rational>(&one), q(1, 1));
        assert_eq!(hook_product::<Rational>(&two_one), q(1, 3));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn hooks_evaluate_schur() {
        for l in 1..=4 {
            let lambda = Partition::triangular(l);
            let s = schur_in_times::<Rational>(&lambda);
            let at_delta = s.evaluate(&q(0, 1), |k| if k == 1 { q(1, 1) } else { q(0, 1) });
            assert_eq!(at_delta, hook_product::<Rational>(&lambda));
        }
    }

    #[test]
    fn constant_reconstruction() {
        // C_l = 1 / ((−2)^{l(l+1)/2} s_λ(δ))
        for l in 0..=5 {
            let lambda = Partition::triangular(l);
            let expect = Rational::one()
                / (Rational::from_int(-2).powi(l * (l + 1) / 2)
                    * hook_product::<Rational>(&lambda));
            assert_eq!(triangular_constant::<Rational>(l), expect);
        }
        assert_eq!(triangular_constant::<Rational>(1), q(-1, 2));
    }

    #[test]
    fn triangular_examples() {
        assert_eq!(triangular_tau::<Rational>(0).unwrap(), P::one());
        assert_eq!(
            triangular_tau::<Rational>(1).unwrap(),
            P::one().sub(&t(1).scale(&q(1, 2)))
        );
        let expect = P::one()
            .sub(&t(1).scale(&q(3, 2)))
            .add(&t(1).pow(2).scale(&q(3, 4)))
            .add(&t(3).scale(&q(3, 8)))
            .sub(&t(1).pow(3).scale(&q(1, 8)));
        assert_eq!(triangular_tau::<Rational>(2).unwrap(), expect);
        assert!(triangular_tau::<Rational>(-1).is_err());
    }

    #[test]
    fn triangular_schur_ignores_even_times() {
        for l in 1..=4 {
            let s = schur_all_times::<Rational>(&Partition::triangular(l));
            for var in (1..s.nvars()).step_by(2) {
                assert!(s.diff(var).is_zero(), "l={l}, t_{}", var + 1);
            }
        }
    }

    #[test]
    fn virasoro_annihilates_triangular_schur() {
        for l in 0..=4u32 {
            let s = schur_in_times::<Rational>(&Partition::triangular(l));
            let s_shifted = s.translate(1, &q(-2, 1)).unwrap();
            let constant = q(-((l * (l + 1)) as i64), 4);
            for m in 0..=4 {
                assert!(schur_virasoro(m, &s, &q(0, 1), &constant).is_zero());
                assert!(schur_virasoro(m, &s_shifted, &q(-2, 1), &constant).is_zero());
            }
        }
        // shifted operators applied to the unshifted Schur function do not annihilate it
        let s = schur_in_times::<Rational>(&Partition::triangular(1));
        assert!(!schur_virasoro(0, &s, &q(-2, 1), &q(-1, 2)).is_zero());
    }

    use num_traits::One;
}
