//! Property tests for the exact algebra and the recursions built on it.

use num_rational::Ratio;
use proptest::prelude::*;

use gbgw::cutjoin::{tau_expansion, Nu};
use gbgw::exactalg::{MultiPoly, RatFunc, TimeMonomial, TimesPoly};
use gbgw::freenergy::{exp_expansion, log_expansion};
use gbgw::virasoro::check_virasoro;
use gbgw::{Rational, Scalar};

type P = MultiPoly<Rational>;
type R = RatFunc<Rational>;
type T = TimesPoly<Rational>;

fn q(n: i64, d: i64) -> Rational {
    Rational::from_frac(n, d)
}

fn multipoly(nvars: usize) -> impl Strategy<Value = P> {
    prop::collection::vec(
        (prop::collection::vec(0u32..3, nvars), -6i64..6, 1i64..4),
        0..6,
    )
    .prop_map(move |terms| P::from_terms(nvars, terms.into_iter().map(|(e, n, d)| (e, q(n, d)))))
}

fn nonzero_multipoly(nvars: usize) -> impl Strategy<Value = P> {
    multipoly(nvars).prop_filter("non-zero", |p| !p.is_zero())
}

fn times_poly() -> impl Strategy<Value = T> {
    prop::collection::vec(
        (
            prop::collection::vec(0u32..3, 3),
            0u32..3,
            -6i64..6,
            1i64..4,
        ),
        0..6,
    )
    .prop_map(|terms| {
        T::from_terms(
            terms
                .into_iter()
                .map(|(e, nu, n, d)| (TimeMonomial::new(e, nu), q(n, d))),
        )
    })
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-12i64..12, 1i64..6).prop_map(|(n, d)| q(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multipoly_distributes(a in multipoly(3), b in multipoly(3), c in multipoly(3)) {
        prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn exact_division_inverts_multiplication(a in multipoly(3), b in nonzero_multipoly(3)) {
        prop_assert_eq!(a.mul(&b).div_exact(&b), Some(a));
    }

    #[test]
    fn substitution_is_a_ring_map(a in multipoly(3), b in multipoly(3), v in multipoly(3)) {
        prop_assert_eq!(a.mul(&b).substitute(1, &v), a.substitute(1, &v).mul(&b.substitute(1, &v)));
    }

    #[test]
    fn ratfunc_quotient_round_trip(a in multipoly(2), b in nonzero_multipoly(2)) {
        let f = R::quotient(&a, &b).unwrap();
        prop_assert_eq!(f.mul_poly(&b), R::from_poly(a));
    }

    #[test]
    fn ratfunc_leibniz(a in multipoly(2), b in nonzero_multipoly(2), c in multipoly(2)) {
        let f = R::quotient(&a, &b).unwrap();
        let g = R::from_poly(c);
        let lhs = f.mul(&g).diff(0);
        let rhs = f.diff(0).mul(&g).add(&f.mul(&g.diff(0)));
        prop_assert!(lhs.sub(&rhs).is_zero());
    }

    #[test]
    fn times_leibniz(a in times_poly(), b in times_poly(), i in prop::sample::select(vec![1u32, 3, 5])) {
        let lhs = a.mul(&b).diff(i).unwrap();
        let rhs = a.diff(i).unwrap().mul(&b).add(&a.mul(&b.diff(i).unwrap()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn numeric_nu_commutes_with_the_recursion(nu in small_rational()) {
        let direct = tau_expansion::<Rational>(7, Nu::Value(nu.clone()));
        let symbolic = tau_expansion::<Rational>(7, Nu::Symbolic).at_nu(&nu);
        prop_assert_eq!(direct.orders, symbolic.orders);
    }

    #[test]
    fn virasoro_holds_at_numeric_nu(nu in small_rational()) {
        let tau = tau_expansion::<Rational>(7, Nu::Value(nu));
        prop_assert!(check_virasoro(&tau, 4).passed());
    }

    #[test]
    fn exp_inverts_log(nu in small_rational()) {
        let tau = tau_expansion::<Rational>(8, Nu::Value(nu));
        prop_assert_eq!(exp_expansion(&log_expansion(&tau).unwrap()), tau.orders);
    }
}

/// Every coefficient as `"p/q"`, in canonical term order.
fn coefficient_strings<C: Scalar>(p: &TimesPoly<C>) -> Vec<(String, String)> {
    p.sorted_terms()
        .into_iter()
        .map(|(m, c)| (m.to_string(), c.to_fraction_string()))
        .collect()
}

#[test]
fn machine_rationals_agree_with_big_rationals() {
    let big = tau_expansion::<Rational>(10, Nu::Symbolic);
    let small = tau_expansion::<Ratio<i64>>(6, Nu::Symbolic);
    let wide = tau_expansion::<Ratio<i128>>(10, Nu::Symbolic);
    for (k, p) in small.orders.iter().enumerate() {
        assert_eq!(
            coefficient_strings(p),
            coefficient_strings(big.order(k)),
            "order {k}, i64"
        );
    }
    for (k, p) in wide.orders.iter().enumerate() {
        assert_eq!(
            coefficient_strings(p),
            coefficient_strings(big.order(k)),
            "order {k}, i128"
        );
    }
}
