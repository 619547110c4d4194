//! Correlators `W_{g,n}` from the loop equations, the differentials
//! `ω_{g,n}` on the rational spectral curve, and the series cross-check
//! against free-energy derivatives.
//!
//! Everything is computed in the coordinates `s = S²` and `u_i` with
//! `u_i² = 1 + s/(4x_i)`, i.e. `x_i = s/(4(u_i² − 1))`. The field
//! `Q(s, u_1, …, u_n)` is the quadratic extension of `Q(S², x_1, …, x_n)` by
//! the `u_i`, so equality there is equality in the extension field. Ring
//! variable `0` is `s` and variable `i ≥ 1` is `u_i`; the physical sheet is
//! `u → 1` as `x → ∞`. The multilinear form `Σ_A R_A(x, S) Π_{i∈A} u_i`
//! is recovered by [`Correlator::multilinear`].

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{domain, Error, Result};
use crate::exactalg::{MultiPoly, RatFunc, Scalar, TimeMonomial};
use crate::freenergy::GenusTable;

type Poly<C> = MultiPoly<C>;
type Rf<C> = RatFunc<C>;

fn cst<C: Scalar>(nvars: usize, n: i64, d: i64) -> Poly<C> {
    Poly::constant(nvars, C::from_frac(n, d))
}

fn var<C: Scalar>(nvars: usize, i: usize) -> Poly<C> {
    Poly::var(nvars, i)
}

/// Builds `c · Π num_k^{a_k} / Π den_k^{b_k}` with every factor passed separately.
fn from_factors<C: Scalar>(
    nvars: usize,
    c: C,
    num: &[(Poly<C>, u32)],
    den: &[(Poly<C>, u32)],
) -> Result<Rf<C>> {
    let mut p = Poly::constant(nvars, c);
    for (f, e) in num {
        p = p.mul(&f.pow(*e));
    }
    let mut r = Rf::from_poly(p);
    for (f, e) in den {
        r = r.mul(&Rf::recip_power(f, *e)?);
    }
    Ok(r)
}

/// `x_i = s / (4(u_i − 1)(u_i + 1))`.
pub fn x_coordinate<C: Scalar>(nvars: usize, i: usize) -> Rf<C> {
    let u = var::<C>(nvars, i);
    from_factors(
        nvars,
        C::from_frac(1, 4),
        &[(var(nvars, 0), 1)],
        &[(u.sub(&Poly::one(nvars)), 1), (u.add(&Poly::one(nvars)), 1)],
    )
    .expect("non-zero factors")
}

/// `1/(x_a − x_b) = 4(u_a² − 1)(u_b² − 1) / (s (u_b − u_a)(u_b + u_a))`.
fn inverse_difference<C: Scalar>(nvars: usize, a: usize, b: usize) -> Rf<C> {
    let one = Poly::one(nvars);
    let (ua, ub) = (var::<C>(nvars, a), var::<C>(nvars, b));
    from_factors(
        nvars,
        C::from_int(4),
        &[
            (ua.sub(&one), 1),
            (ua.add(&one), 1),
            (ub.sub(&one), 1),
            (ub.add(&one), 1),
        ],
        &[(var(nvars, 0), 1), (ub.sub(&ua), 1), (ub.add(&ua), 1)],
    )
    .expect("non-zero factors")
}

/// `(x_i ∂/∂x_i + ½) f` using `x ∂_x = −(u² − 1)/(2u) ∂_u`.
fn euler_half<C: Scalar>(f: &Rf<C>, i: usize) -> Rf<C> {
    let nvars = f.nvars();
    let u = var::<C>(nvars, i);
    let factor = Rf::quotient(
        &u.mul(&u).sub(&Poly::one(nvars)).scale(&C::from_frac(-1, 2)),
        &u,
    )
    .expect("u is non-zero");
    factor.mul(&f.diff(i)).add(&f.scale(&C::from_frac(1, 2)))
}

/// Places an `n'`-point function at the given points (ring variables) of an `nvars` ring.
fn embed<C: Scalar>(f: &Rf<C>, nvars: usize, points: &[usize]) -> Result<Rf<C>> {
    let mut map = vec![0];
    map.extend_from_slice(points);
    f.remap(nvars, &map)
}

/// `W_{g,n}` as a rational function of `(s, u_1, …, u_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Correlator<C: Scalar> {
    pub g: u32,
    pub n: usize,
    pub value: Rf<C>,
}

/// `W_{0,1} = 2(1 − u)`.
pub fn w01<C: Scalar>() -> Correlator<C> {
    Correlator {
        g: 0,
        n: 1,
        value: Rf::from_poly(cst(2, 2, 1).sub(&var::<C>(2, 1).scale(&C::from_int(2)))),
    }
}

/// `W_{0,2}`, obtained by one loop step from `W_{0,1}`.
pub fn w02<C: Scalar>() -> Correlator<C> {
    let table = CorrelatorTable::compute(2).expect("level two needs only W_{0,1}");
    table.correlator(0, 2).expect("computed")
}

/// All `W_{g,n}` with `2g + n ≤ max_level`.
#[derive(Clone, Debug)]
pub struct CorrelatorTable<C: Scalar> {
    entries: BTreeMap<(u32, usize), Rf<C>>,
    pub max_level: u32,
}

impl<C: Scalar> CorrelatorTable<C> {
    /// Solves the loop equations level by level; entries of one level are independent.
    pub fn compute(max_level: u32) -> Result<Self> {
        let mut table = CorrelatorTable {
            entries: BTreeMap::new(),
            max_level: 1,
        };
        table.entries.insert((0, 1), w01::<C>().value);
        for level in 2..=max_level {
            let todo: Vec<(u32, usize)> = (0..=level / 2)
                .map(|g| (g, (level - 2 * g) as usize))
                .filter(|&(_, n)| n >= 1)
                .collect();
            let done: Vec<((u32, usize), Rf<C>)> = todo
                .par_iter()
                .map(|&(g, n)| loop_step(&table, g, n - 1).map(|w| ((g, n), w)))
                .collect::<Result<_>>()?;
            table.entries.extend(done);
            table.max_level = level;
        }
        Ok(table)
    }

    pub fn get(&self, g: u32, n: usize) -> Result<&Rf<C>> {
        self.entries
            .get(&(g, n))
            .ok_or_else(|| Error::MissingDependency(format!("W_{{{g},{n}}} has not been computed")))
    }

    pub fn correlator(&self, g: u32, n: usize) -> Result<Correlator<C>> {
        Ok(Correlator {
            g,
            n,
            value: self.get(g, n)?.clone(),
        })
    }

    /// The computed `(g, n)` pairs in level order.
    pub fn keys(&self) -> Vec<(u32, usize)> {
        let mut keys: Vec<_> = self.entries.keys().copied().collect();
        keys.sort_by_key(|&(g, n)| (2 * g as usize + n, g));
        keys
    }
}

/// Right-hand side of the loop equation for `W_{g,m+1}(x, x_1, …, x_m)`.
///
/// With `primed` the two products containing `W_{0,1}(x)` are left out (they
/// are moved to the left-hand side); without it the full sum and both
/// `δ` terms are kept.
fn loop_rhs<C: Scalar>(
    table: &CorrelatorTable<C>,
    g: u32,
    m: usize,
    primed: bool,
) -> Result<Rf<C>> {
    let nvars = m + 2;
    let all: u32 = (1 << m) - 1;
    let points = |mask: u32| -> Vec<usize> {
        let mut p = vec![1];
        p.extend((0..m).filter(|i| mask & (1 << i) != 0).map(|i| i + 2));
        p
    };
    let w02_point = |q: u32, mask: u32| -> Option<usize> {
        (q == 0 && mask.count_ones() == 1).then(|| mask.trailing_zeros() as usize)
    };
    let product = |q: u32, mask: u32| -> Result<Rf<C>> {
        let (p, comp) = (g - q, all ^ mask);
        let left = embed(
            table.get(q, mask.count_ones() as usize + 1)?,
            nvars,
            &points(mask),
        )?;
        let right = embed(
            table.get(p, comp.count_ones() as usize + 1)?,
            nvars,
            &points(comp),
        )?;
        Ok(left.mul(&right))
    };

    // ¼ Σ W_{q,|I|+1}(x, x_I) W_{g−q,|J|+1}(x, x_J). Products with a factor
    // W_{0,2}(x, x_i) carry a pole at u = −u_i that cancels only against the
    // i-th difference quotient, so they are collected with it; the remaining
    // products have monomial denominators and are summed over unordered pairs.
    let mut general = Rf::zero(nvars);
    let mut by_point: Vec<Vec<(u32, u32)>> = vec![Vec::new(); m];
    for q in 0..=g {
        for mask in 0..=all {
            let (p, comp) = (g - q, all ^ mask);
            let excluded = (q == 0 && mask == 0) || (p == 0 && comp == 0);
            if primed && excluded {
                continue;
            }
            if let Some(i) = w02_point(q, mask).or(w02_point(p, comp)) {
                by_point[i].push((q, mask));
                continue;
            }
            if (q, mask) > (p, comp) {
                continue;
            }
            let term = product(q, mask)?;
            general = if (q, mask) == (p, comp) {
                general.add(&term)
            } else {
                general.add(&term.scale(&C::from_int(2)))
            };
        }
    }
    let mut acc = general.scale(&C::from_frac(1, 4));

    // Σ_i (x_i ∂_i + ½) (W_{g,m}(…, x at slot i, …) − W_{g,m}(x_1, …, x_m)) / (x − x_i)
    let buckets: Vec<Rf<C>> = (0..m)
        .into_par_iter()
        .map(|i| -> Result<Rf<C>> {
            let mut t = Rf::zero(nvars);
            for &(q, mask) in &by_point[i] {
                t = t.add(&product(q, mask)?);
            }
            t = t.scale(&C::from_frac(1, 4));
            let w = table.get(g, m)?;
            let rest: Vec<usize> = (2..m + 2).collect();
            let fixed = embed(w, nvars, &rest)?;
            let mut moved = rest.clone();
            moved[i] = 1;
            let shifted = embed(w, nvars, &moved)?;
            let quotient = shifted
                .sub(&fixed)
                .mul(&inverse_difference(nvars, 1, i + 2));
            Ok(t.add(&euler_half(&quotient, i + 2)))
        })
        .collect::<Result<_>>()?;
    for b in &buckets {
        acc = acc.add(b);
    }

    // ¼ W_{g−1,m+2}(x, x, x_1, …, x_m)
    if g >= 1 {
        let mut pts = vec![1, 1];
        pts.extend(2..m + 2);
        let coincident = embed(table.get(g - 1, m + 2)?, nvars, &pts).map_err(|_| {
            Error::Consistency(format!(
                "W_{{{},{}}} is singular at coincident points",
                g - 1,
                m + 2
            ))
        })?;
        acc = acc.add(&coincident.scale(&C::from_frac(1, 4)));
    }

    if m == 0 {
        // 1/(16x) = (u² − 1)/(4s) and s/(4x) = u² − 1
        let u = var::<C>(nvars, 1);
        let u2m1 = u.mul(&u).sub(&Poly::one(nvars));
        if g == 1 {
            acc = acc.add(&Rf::quotient(&u2m1, &var(nvars, 0))?.scale(&C::from_frac(1, 4)));
        }
        if g == 0 && !primed {
            acc = acc.sub(&Rf::from_poly(u2m1));
        }
    }
    Ok(acc)
}

/// One step of the loop recursion: `W_{g,m+1} = (1/u) · (primed right-hand side)`.
pub fn loop_step<C: Scalar>(table: &CorrelatorTable<C>, g: u32, m: usize) -> Result<Rf<C>> {
    if g == 0 && m == 0 {
        return Ok(w01::<C>().value);
    }
    let rhs = loop_rhs(table, g, m, true)?;
    Ok(rhs.mul(&Rf::recip_power(&var(m + 2, 1), 1)?))
}

/// `W_{g,m+1} − (full right-hand side of the loop equation)`; zero when the equation holds.
pub fn loop_residual<C: Scalar>(table: &CorrelatorTable<C>, g: u32, n: usize) -> Result<Rf<C>> {
    if n == 0 {
        return domain("loop equations need at least one point");
    }
    Ok(table.get(g, n)?.sub(&loop_rhs(table, g, n - 1, false)?))
}

/// The printed closed forms of `W_{0,1}, W_{0,2}, W_{1,1}, W_{0,3}, W_{1,2}, W_{2,1}`.
pub fn closed_form<C: Scalar>(g: u32, n: usize) -> Result<Rf<C>> {
    let nv = n + 1;
    let s = Rf::from_poly(var::<C>(nv, 0));
    let x = |i: usize| x_coordinate::<C>(nv, i);
    let u = |i: usize| Rf::from_poly(var::<C>(nv, i));
    let inv = |r: &Rf<C>| -> Result<Rf<C>> {
        // inverse of a product of atoms and a numerator made of atoms
        let mut out = Rf::constant(nv, C::one());
        out = out.mul(&Rf::recip_power(r.numerator(), 1)?);
        for (a, e) in r.denominator() {
            out = out.mul_poly(&a.pow(*e));
        }
        Ok(out)
    };
    let c = |a: i64, b: i64| Rf::constant(nv, C::from_frac(a, b));
    let form = match (g, n) {
        (0, 1) => w01::<C>().value,
        (0, 2) => {
            let sum = x(1).add(&x(2));
            let diff = x(1).sub(&x(2));
            let inner = s
                .add(&sum.scale(&C::from_int(2)))
                .mul(&inv(&u(1).mul(&u(2)))?)
                .sub(&sum.scale(&C::from_int(2)));
            inner
                .mul(&inv(&diff.mul(&diff))?)
                .scale(&C::from_frac(1, 2))
        }
        (1, 1) => inv(&x(1).mul(&u(1).pow(5)))?.scale(&C::from_frac(1, 16)),
        (0, 3) => {
            let den = x(1).mul(&x(2)).mul(&x(3)).mul(&u(1)).mul(&u(2)).mul(&u(3));
            s.mul(&inv(&den)?).scale(&C::from_frac(-1, 8))
        }
        (1, 2) => {
            let (x1, x2) = (x(1), x(2));
            let p = x1.mul(&x2);
            let num = s
                .pow(4)
                .sub(&c(6, 1).mul(&x1.add(&x2)).mul(&s.pow(3)))
                .sub(&c(136, 1).mul(&s.pow(2)).mul(&p))
                .sub(&c(128, 1).mul(&p).mul(&x1.add(&x2)).mul(&s))
                .add(&c(128, 1).mul(&p.pow(2)));
            let den = p.pow(3).mul(&u(1).pow(7)).mul(&u(2).pow(7));
            num.mul(&inv(&den)?).scale(&C::from_frac(1, 4096))
        }
        (2, 1) => {
            let x1 = x(1);
            let num = s
                .pow(2)
                .sub(&c(20, 1).mul(&s).mul(&x1))
                .add(&c(9, 1).mul(&x1.pow(2)));
            num.mul(&inv(&x1.pow(4).mul(&u(1).pow(11)))?)
                .scale(&C::from_frac(1, 1024))
        }
        _ => return domain(format!("no printed closed form for W_{{{g},{n}}}")),
    };
    Ok(form)
}

/// `W_{0,3}` with the `u_i³` denominator implied by its series expansion and by `ω_{0,3}`.
pub fn w03_corrected<C: Scalar>() -> Rf<C> {
    let nv = 4;
    let mut den = Rf::one(nv);
    for i in 1..=3 {
        den = den
            .mul(&x_coordinate::<C>(nv, i))
            .mul_poly(&var(nv, i).pow(3));
    }
    let mut r = Rf::from_poly(var::<C>(nv, 0).scale(&C::from_frac(-1, 8)));
    r = r.mul(&Rf::recip_power(den.numerator(), 1).expect("non-zero"));
    for (a, e) in den.denominator() {
        r = r.mul_poly(&a.pow(*e));
    }
    r
}

/// Denominator factors of an evenized correlator, written in `v_i = u_i²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum EvenAtom {
    S,
    V(usize),
    VMinusOne(usize),
    VDiff(usize, usize),
}

/// `W = Σ_A (parts[A] / den) Π_{i∈A} u_i` with `parts[A]` and `den` polynomials in `(s, v_1, …, v_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenForm<C: Scalar> {
    pub n: usize,
    pub den: Vec<(EvenAtom, u32)>,
    /// Keyed by the bit mask of `A` (bit `i − 1` for `u_i`).
    pub parts: BTreeMap<u32, Poly<C>>,
}

fn classify_atom<C: Scalar>(a: &Poly<C>, n: usize) -> Option<(EvenAtom, Poly<C>, i32)> {
    let nv = n + 1;
    let one = Poly::one(nv);
    if a == &var(nv, 0) {
        return Some((EvenAtom::S, one, 0));
    }
    for i in 1..=n {
        let u = var::<C>(nv, i);
        if a == &u {
            return Some((EvenAtom::V(i), u, 0));
        }
        if a == &u.sub(&one) {
            return Some((EvenAtom::VMinusOne(i), u.add(&one), 1));
        }
        if a == &u.add(&one) {
            return Some((EvenAtom::VMinusOne(i), u.sub(&one), -1));
        }
        for j in i + 1..=n {
            let w = var::<C>(nv, j);
            if a == &u.sub(&w) {
                return Some((EvenAtom::VDiff(i, j), u.add(&w), 1));
            }
            if a == &u.add(&w) {
                return Some((EvenAtom::VDiff(i, j), u.sub(&w), -1));
            }
        }
    }
    None
}

/// Rewrites a correlator with a denominator even in every `u_i` and splits the numerator by parity.
pub fn evenize<C: Scalar>(f: &Rf<C>, n: usize) -> Result<EvenForm<C>> {
    let nv = n + 1;
    // exponent of each even atom and, for paired atoms, of each half
    let mut halves: BTreeMap<EvenAtom, [u32; 2]> = BTreeMap::new();
    let mut partners: BTreeMap<EvenAtom, [Poly<C>; 2]> = BTreeMap::new();
    for (a, e) in f.denominator() {
        let (atom, partner, side) = classify_atom(a, n).ok_or_else(|| {
            Error::Consistency(format!("unexpected denominator factor {a} in a correlator"))
        })?;
        let slot = halves.entry(atom).or_insert([0, 0]);
        match side {
            0 => slot[0] += e,
            1 => {
                slot[0] += e;
                partners
                    .entry(atom)
                    .or_insert_with(|| [Poly::one(nv), Poly::one(nv)])[0] = partner;
            }
            _ => {
                slot[1] += e;
                partners
                    .entry(atom)
                    .or_insert_with(|| [Poly::one(nv), Poly::one(nv)])[1] = partner;
            }
        }
    }
    let mut num = f.numerator().clone();
    let mut den = Vec::new();
    for (atom, [a, b]) in halves {
        match atom {
            EvenAtom::S => den.push((atom, a)),
            EvenAtom::V(i) => {
                if a % 2 == 1 {
                    num = num.mul(&var(nv, i));
                }
                den.push((atom, a.div_ceil(2)));
            }
            _ => {
                let top = a.max(b);
                let [pa, pb] = &partners[&atom];
                // the (u − w) half is missing top − a powers of its partner (u + w) and vice versa
                if top > a {
                    num = num.mul(&pb.pow(top - a).clone());
                }
                if top > b {
                    num = num.mul(&pa.pow(top - b));
                }
                den.push((atom, top));
            }
        }
    }
    let mut parts: BTreeMap<u32, Poly<C>> = BTreeMap::new();
    for (e, c) in num.iter() {
        let mut mask = 0u32;
        let mut ve = e.clone();
        for i in 1..=n {
            if e[i] % 2 == 1 {
                mask |= 1 << (i - 1);
            }
            ve[i] = e[i] / 2;
        }
        parts
            .entry(mask)
            .or_insert_with(|| Poly::zero(nv))
            .add_term(ve, c.clone());
    }
    parts.retain(|_, p| !p.is_zero());
    Ok(EvenForm { n, den, parts })
}

/// `v_i = num / (coeff · atom)` in a target coordinate system.
struct VImage<C: Scalar> {
    num: Poly<C>,
    coeff: C,
    atom: Poly<C>,
}

/// Images of the even atoms as `(c, numerator factors, denominator factors)`.
type AtomImage<C> = (C, Vec<(Poly<C>, u32)>, Vec<(Poly<C>, u32)>);

struct Chart<C: Scalar> {
    v: Vec<VImage<C>>,
    atom: Box<dyn Fn(EvenAtom) -> AtomImage<C>>,
}

impl<C: Scalar> Chart<C> {
    fn x(n: usize) -> Self {
        let nv = n + 1;
        let s = var::<C>(nv, 0);
        let v = (1..=n)
            .map(|i| VImage {
                num: var::<C>(nv, i).scale(&C::from_int(4)).add(&s),
                coeff: C::from_int(4),
                atom: var(nv, i),
            })
            .collect();
        let atom = Box::new(move |a: EvenAtom| -> AtomImage<C> {
            let x = |i: usize| var::<C>(nv, i);
            let quarter = C::from_frac(1, 4);
            match a {
                EvenAtom::S => (C::one(), vec![(x(0), 1)], vec![]),
                EvenAtom::V(i) => (
                    quarter,
                    vec![(x(i).scale(&C::from_int(4)).add(&x(0)), 1)],
                    vec![(x(i), 1)],
                ),
                EvenAtom::VMinusOne(i) => (quarter, vec![(x(0), 1)], vec![(x(i), 1)]),
                EvenAtom::VDiff(i, j) => (
                    quarter,
                    vec![(x(0), 1), (x(j).sub(&x(i)), 1)],
                    vec![(x(i), 1), (x(j), 1)],
                ),
            }
        });
        Chart { v, atom }
    }

    fn z(n: usize) -> Self {
        let nv = n + 1;
        let one = Poly::<C>::one(nv);
        let v = (1..=n)
            .map(|i| VImage {
                num: var::<C>(nv, i).pow(2),
                coeff: C::from_int(4),
                atom: var::<C>(nv, i).sub(&one),
            })
            .collect();
        let atom = Box::new(move |a: EvenAtom| -> AtomImage<C> {
            let z = |i: usize| var::<C>(nv, i);
            let one = Poly::<C>::one(nv);
            let quarter = C::from_frac(1, 4);
            match a {
                EvenAtom::S => (C::one(), vec![(z(0), 1)], vec![]),
                EvenAtom::V(i) => (quarter, vec![(z(i), 2)], vec![(z(i).sub(&one), 1)]),
                EvenAtom::VMinusOne(i) => (
                    quarter,
                    vec![(z(i).sub(&one.scale(&C::from_int(2))), 2)],
                    vec![(z(i).sub(&one), 1)],
                ),
                EvenAtom::VDiff(i, j) => (
                    quarter,
                    vec![
                        (z(i).sub(&z(j)), 1),
                        (z(i).mul(&z(j)).sub(&z(i)).sub(&z(j)), 1),
                    ],
                    vec![(z(i).sub(&one), 1), (z(j).sub(&one), 1)],
                ),
            }
        });
        Chart { v, atom }
    }

    /// `P(s, v)` in the chart's coordinates.
    fn numerator(&self, p: &Poly<C>) -> Result<Rf<C>> {
        let nv = p.nvars();
        let mut acc = p.clone();
        let mut out_den = Rf::one(nv);
        for (k, img) in self.v.iter().enumerate() {
            let i = k + 1;
            let d = acc.degree_in(i);
            if d == 0 {
                continue;
            }
            let b = img.atom.scale(&img.coeff);
            let coeffs = acc.coefficients_in(i);
            let mut next = Poly::zero(nv);
            for (e, ce) in coeffs.iter().enumerate() {
                if !ce.is_zero() {
                    next = next.add(&ce.mul(&img.num.pow(e as u32)).mul(&b.pow(d - e as u32)));
                }
            }
            acc = next;
            out_den = out_den.mul(&Rf::recip_power(&b, d)?);
        }
        Ok(out_den.mul_poly(&acc))
    }

    fn inverse_denominator(&self, den: &[(EvenAtom, u32)], nv: usize) -> Result<Rf<C>> {
        let mut out = Rf::one(nv);
        for &(a, e) in den {
            let (c, num, dd) = (self.atom)(a);
            let inv = from_factors(nv, C::one() / c, &dd, &num)?;
            out = out.mul(&inv.pow(e));
        }
        Ok(out)
    }
}

/// `W = Σ_A R_A(x, S) Π_{i∈A} u_i`, each `R_A` a reduced rational function of `(s, x_1, …, x_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multilinear<C: Scalar> {
    pub n: usize,
    pub components: BTreeMap<u32, Rf<C>>,
}

impl<C: Scalar> Multilinear<C> {
    pub fn variable_names(&self) -> Vec<String> {
        let mut names = vec!["S^2".to_string()];
        names.extend((1..=self.n).map(|i| format!("x{i}")));
        names
    }

    /// `u1*u3`-style label of a subset, `1` for the empty one.
    pub fn subset_label(mask: u32, n: usize) -> String {
        let parts: Vec<String> = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| format!("u{}", i + 1))
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    /// `Σ_A R_A` at `S = 0` (where every `u_i = 1`).
    pub fn at_s_zero(&self) -> Result<Rf<C>> {
        let nv = self.n + 1;
        let zero = Poly::zero(nv);
        let mut out = Rf::zero(nv);
        for r in self.components.values() {
            out = out.add(&r.substitute(0, &zero).map_err(|_| {
                Error::Consistency("a multilinear component is singular at S = 0".into())
            })?);
        }
        Ok(out)
    }
}

impl<C: Scalar> Correlator<C> {
    /// Names of the ring variables: `S^2, u1, …, un`.
    pub fn variable_names(&self) -> Vec<String> {
        let mut names = vec!["S^2".to_string()];
        names.extend((1..=self.n).map(|i| format!("u{i}")));
        names
    }

    pub fn evenize(&self) -> Result<EvenForm<C>> {
        evenize(&self.value, self.n)
    }

    /// The multilinear form in `(S², x_i)` with `u_i² = 1 + S²/(4x_i)`.
    pub fn multilinear(&self) -> Result<Multilinear<C>> {
        let even = self.evenize()?;
        let chart = Chart::x(self.n);
        let nv = self.n + 1;
        let inv_den = chart.inverse_denominator(&even.den, nv)?;
        let mut components = BTreeMap::new();
        for (&mask, p) in &even.parts {
            let r = chart.numerator(p)?.mul(&inv_den);
            if !r.is_zero() {
                components.insert(mask, r);
            }
        }
        Ok(Multilinear {
            n: self.n,
            components,
        })
    }

    /// Whether `W` is unchanged by every transposition of adjacent points.
    pub fn is_symmetric(&self) -> Result<bool> {
        let nv = self.n + 1;
        for i in 1..self.n {
            let mut map: Vec<usize> = (0..nv).collect();
            map.swap(i, i + 1);
            if !self.value.remap(nv, &map)?.sub(&self.value).is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Fast route to `ω_{g,n}` when the denominator is `s^a Π v_i^{b_i}`.
    ///
    /// With `y = 1/v` and `w = 1/z` one has `y = 4w(1 − w)`, `1 − y = (1 − 2w)²`
    /// and `1/(z − 2)² = w²/(1 − 2w)²`, so the cleared form is
    /// `(−1)^n P(y) / Π (1 − y_i)` at `y_i = 4w_i(1 − w_i)`, where `P` collects
    /// the numerator in `y`. Returns `None` whenever the shortcut does not
    /// apply (a positive power of `v`, or a division that is not exact); the
    /// general route then decides.
    fn z_differential_by_inverse_z(&self, even: &EvenForm<C>) -> Result<Option<ZDifferential<C>>> {
        let (g, n) = (self.g, self.n);
        let mut a = 0u32;
        let mut b = vec![0u32; n + 1];
        for &(atom, e) in &even.den {
            match atom {
                EvenAtom::S => a += e,
                EvenAtom::V(i) => b[i] += e,
                _ => return Ok(None),
            }
        }
        let full = (1u32 << n) - 1;
        let Some(body) = even.parts.get(&full) else {
            return Ok(None);
        };
        let s_power = a as i64 - (g as i64 - 1 + n as i64);
        if body.iter().any(|(e, _)| e[0] as i64 != s_power) {
            return Err(Error::Counterexample(format!("ω_{{{g},{n}}} depends on S")));
        }
        // W Π u_i = body Π v_i / (s^a Π v_i^{b_i}); v^{e+1−b} = y^{b−1−e}
        let mut p = Poly::zero(n);
        for (e, c) in body.iter() {
            let mut ye = Vec::with_capacity(n);
            for i in 1..=n {
                let k = b[i] as i64 - 1 - e[i] as i64;
                if k < 0 {
                    return Ok(None);
                }
                ye.push(k as u32);
            }
            p.add_term(ye, c.clone());
        }
        let one = Poly::<C>::one(n);
        for i in 0..n {
            match p.div_exact(&one.sub(&var(n, i))) {
                Some(r) => p = r,
                None => return Ok(None),
            }
        }
        for i in 0..n {
            let w = var::<C>(n, i);
            p = p.substitute(i, &w.mul(&one.sub(&w)).scale(&C::from_int(4)));
        }
        if n % 2 == 1 {
            p = p.neg();
        }
        // ω/Π dz = Π w_i² · H(w) = N(z) / Π z_i^{D_i}
        let top: Vec<u32> = (0..n).map(|i| p.degree_in(i) + 2).collect();
        let num = Poly::from_terms(
            n,
            p.iter().map(|(e, c)| {
                (
                    e.iter().zip(&top).map(|(a, d)| d - a - 2).collect(),
                    c.clone(),
                )
            }),
        );
        let mut value = Rf::from_poly(num);
        for (i, &d) in top.iter().enumerate() {
            value = value.mul(&Rf::recip_power(&var(n, i), d)?);
        }
        Ok(Some(ZDifferential { g, n, value }))
    }

    /// `ω_{g,n}/Π dz_i` for a stable `(g, n)`.
    ///
    /// With `√x = S r/(z − 2)`, `r² = z − 1` and `u = z/(2r)`, one has
    /// `d√x = −S u dz/(z − 2)²`, so
    /// `ω/Π dz = s^{g−1+n} · W Π u_i · Π (−1/(z_i − 2)²)`. The odd powers of
    /// `r_i` cancel exactly when `W` is odd in every `u_i`, and the result must
    /// not depend on `s`; either failure is reported as a counterexample.
    pub fn to_z_differential(&self) -> Result<ZDifferential<C>> {
        let (g, n) = (self.g, self.n);
        if 2 * g as i64 + n as i64 - 2 <= 0 {
            return domain(format!("ω_{{{g},{n}}} is outside the stable range"));
        }
        let nv = n + 1;
        let full = (1u32 << n) - 1;
        let even = self.evenize()?;
        if let Some(&mask) = even.parts.keys().find(|&&m| m != full) {
            return Err(Error::Counterexample(format!(
                "ω_{{{g},{n}}}: the square roots r_i survive (component {})",
                Multilinear::<C>::subset_label(mask, n)
            )));
        }
        if let Some(z) = self.z_differential_by_inverse_z(&even)? {
            return Ok(z);
        }
        let chart = Chart::z(n);
        let mut body = even
            .parts
            .get(&full)
            .cloned()
            .unwrap_or_else(|| Poly::zero(nv));
        for i in 1..=n {
            body = body.mul(&var(nv, i));
        }
        let mut w = chart
            .numerator(&body)?
            .mul(&chart.inverse_denominator(&even.den, nv)?);
        let two = Poly::<C>::constant(nv, C::from_int(2));
        for i in 1..=n {
            w = w.mul(&Rf::recip_power(&var::<C>(nv, i).sub(&two), 2)?);
        }
        w = w.mul_poly(&var(nv, 0).pow(g + n as u32 - 1));
        if n % 2 == 1 {
            w = w.neg();
        }
        let s_free = w.numerator().degree_in(0) == 0
            && w.denominator().iter().all(|(a, _)| a.degree_in(0) == 0);
        if !s_free {
            return Err(Error::Counterexample(format!("ω_{{{g},{n}}} depends on S")));
        }
        let map: Vec<usize> = (0..nv).map(|i| i.saturating_sub(1)).collect();
        Ok(ZDifferential {
            g,
            n,
            value: w.remap(n, &map)?,
        })
    }
}

/// `ω_{g,n}/(dz_1 … dz_n)` as a rational function of `z_1, …, z_n` (ring variable `i − 1` is `z_i`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZDifferential<C: Scalar> {
    pub g: u32,
    pub n: usize,
    pub value: Rf<C>,
}

impl<C: Scalar> ZDifferential<C> {
    pub fn variable_names(&self) -> Vec<String> {
        (1..=self.n).map(|i| format!("z{i}")).collect()
    }

    /// `z_1² ⋯ z_n² ω/Π dz_i`.
    pub fn cleared(&self) -> Rf<C> {
        let mut h = self.value.clone();
        for i in 0..self.n {
            h = h.mul_poly(&var(self.n, i).pow(2));
        }
        h
    }

    /// Ways in which the cleared form fails to be a polynomial in the `1/z_i`.
    pub fn polynomiality_failures(&self) -> Vec<String> {
        let h = self.cleared();
        let mut out = Vec::new();
        let mut pole = vec![0u32; self.n];
        for (a, e) in h.denominator() {
            match (0..self.n).find(|&i| a == &var(self.n, i)) {
                Some(i) => pole[i] = *e,
                None => out.push(format!(
                    "pole away from z = 0: ({})",
                    a.render(&self.names())
                )),
            }
        }
        for (i, &p) in pole.iter().enumerate() {
            let d = h.numerator().degree_in(i);
            if d > p {
                out.push(format!(
                    "degree {d} in z{} exceeds the pole order {p}",
                    i + 1
                ));
            }
        }
        out
    }

    fn names(&self) -> Vec<&str> {
        const N: [&str; 8] = ["z1", "z2", "z3", "z4", "z5", "z6", "z7", "z8"];
        N[..self.n.min(8)].to_vec()
    }

    /// Coefficients of the cleared form as a polynomial in `w_i = 1/z_i`: `(exponents of w, coefficient)`.
    pub fn inverse_z_coefficients(&self) -> Result<Vec<(Vec<u32>, C)>> {
        let failures = self.polynomiality_failures();
        if !failures.is_empty() {
            return Err(Error::Counterexample(format!(
                "ω_{{{},{}}}: {}",
                self.g,
                self.n,
                failures.join("; ")
            )));
        }
        let h = self.cleared();
        let mut pole = vec![0u32; self.n];
        for (a, e) in h.denominator() {
            if let Some(i) = (0..self.n).find(|&i| a == &var(self.n, i)) {
                pole[i] = *e;
            }
        }
        let mut out: Vec<(Vec<u32>, C)> = h
            .numerator()
            .iter()
            .map(|(e, c)| (e.iter().zip(&pole).map(|(a, p)| p - a).collect(), c.clone()))
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(out)
    }
}

/// The printed `ω_{1,1}, ω_{2,1}, ω_{1,2}, ω_{0,3}` divided by `Π dz_i`.
pub fn printed_differential<C: Scalar>(g: u32, n: usize) -> Result<Rf<C>> {
    let z = |i: usize| var::<C>(n, i);
    let k = |c: i64| Poly::<C>::constant(n, C::from_int(c));
    let poly = |terms: &[(i64, &[u32])]| -> Poly<C> {
        Poly::from_terms(n, terms.iter().map(|(c, e)| (e.to_vec(), C::from_int(*c))))
    };
    match (g, n) {
        (1, 1) => Rf::quotient(&z(0).sub(&k(1)), &z(0))
            .map(|r| r.mul(&Rf::recip_power(&z(0), 3).unwrap())),
        (2, 1) => {
            let q = poly(&[
                (105, &[0]),
                (-210, &[1]),
                (133, &[2]),
                (-28, &[3]),
                (1, &[4]),
            ]);
            let num = q.mul(&z(0).sub(&k(2)).pow(2)).mul(&z(0).sub(&k(1)));
            Rf::recip_power(&z(0), 10).map(|r| r.mul_poly(&num))
        }
        (1, 2) => {
            let num = poly(&[
                (54, &[4, 2]),
                (24, &[3, 3]),
                (-14, &[4, 3]),
                (54, &[2, 4]),
                (-14, &[3, 4]),
                (1, &[4, 4]),
                (24, &[2, 2]),
                (-80, &[4, 1]),
                (-24, &[3, 2]),
                (-24, &[2, 3]),
                (-80, &[1, 4]),
                (40, &[0, 4]),
                (40, &[4, 0]),
            ]);
            let den = Rf::recip_power(&z(0), 6)?.mul(&Rf::recip_power(&z(1), 6)?);
            Ok(den.mul_poly(&num))
        }
        (0, 3) => {
            let mut r = Rf::constant(3, C::from_int(8));
            for i in 0..3 {
                r = r.mul(&Rf::recip_power(&z(i), 2)?);
            }
            Ok(r)
        }
        _ => domain(format!("no printed differential for ω_{{{g},{n}}}")),
    }
}

/// Power series in `(s, y_1, …, y_n)`, `y_i = 1/x_i`, truncated at total `y`-degree `top`.
fn y_degree(e: &[u32]) -> u32 {
    e[1..].iter().sum()
}

fn truncate<C: Scalar>(p: &Poly<C>, top: u32) -> Poly<C> {
    Poly::from_terms(
        p.nvars(),
        p.iter()
            .filter(|(e, _)| y_degree(e) <= top)
            .map(|(e, c)| (e.clone(), c.clone())),
    )
}

fn mul_truncated<C: Scalar>(a: &Poly<C>, b: &Poly<C>, top: u32) -> Poly<C> {
    let mut out = Poly::zero(a.nvars());
    for (ea, ca) in a.iter() {
        let da = y_degree(ea);
        for (eb, cb) in b.iter() {
            if da + y_degree(eb) <= top {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.mul_ref(cb));
            }
        }
    }
    out
}

/// `(1 + s y_i/4)^α` through `y_i^top`.
fn binomial_series<C: Scalar>(nv: usize, i: usize, alpha: C, top: u32) -> Poly<C> {
    let mut out = Poly::zero(nv);
    let mut c = C::one();
    for k in 0..=top {
        let mut e = vec![0; nv];
        e[0] = k;
        e[i] = k;
        out.add_term(e, c.clone() / C::from_int(4).powi(k));
        c = c * (alpha.clone() - C::from_int(k as i64)) / C::from_int(k as i64 + 1);
    }
    out
}

/// Series of `W_{g,n}` in `y_i = 1/x_i` through total degree `top`, coefficients polynomial in `s`.
pub fn nabla_series<C: Scalar>(corr: &Correlator<C>, top: u32) -> Result<Poly<C>> {
    let n = corr.n;
    let nv = n + 1;
    let even = corr.evenize()?;
    let mut s_shift = 0u32;
    let mut mono = vec![0u32; nv];
    let mut vdiff: Vec<(usize, usize, u32)> = Vec::new();
    let mut v_pow = vec![0u32; nv];
    let mut scale = C::one();
    for &(a, e) in &even.den {
        match a {
            EvenAtom::S => s_shift += e,
            EvenAtom::V(i) => v_pow[i] += e,
            EvenAtom::VMinusOne(i) => {
                s_shift += e;
                mono[i] += e;
                scale = scale * C::from_int(4).powi(e);
            }
            EvenAtom::VDiff(i, j) => {
                s_shift += e;
                vdiff.push((i, j, e));
                scale = scale * C::from_int(4).powi(e);
            }
        }
    }
    let diff_degree: u32 = vdiff.iter().map(|v| v.2).sum();
    let budget = top + mono.iter().sum::<u32>() + diff_degree;
    // v_i = 1 + s y_i / 4
    let v_sub: Vec<Poly<C>> = (0..nv)
        .map(|i| {
            let mut e = vec![0; nv];
            e[0] = 1;
            if i > 0 {
                e[i] = 1;
            }
            Poly::one(nv).add(&Poly::from_terms(nv, [(e, C::from_frac(1, 4))]))
        })
        .collect();
    let mut total = Poly::zero(nv);
    for (&mask, p) in &even.parts {
        let mut q = p.clone();
        for (i, v) in v_sub.iter().enumerate().skip(1) {
            q = truncate(&q.substitute(i, v), budget);
        }
        for i in 1..=n {
            if mask & (1 << (i - 1)) != 0 {
                q = mul_truncated(
                    &q,
                    &binomial_series(nv, i, C::from_frac(1, 2), budget),
                    budget,
                );
            }
        }
        total = total.add(&q);
    }
    for (i, &b) in v_pow.iter().enumerate() {
        if b > 0 {
            total = mul_truncated(
                &total,
                &binomial_series(nv, i, C::from_int(-(b as i64)), budget),
                budget,
            );
        }
    }
    // divide by s^shift · Π y_i^mono
    let mut shifted = Poly::zero(nv);
    for (e, c) in total.iter() {
        if e[0] < s_shift || (1..nv).any(|i| e[i] < mono[i]) {
            return Err(Error::Consistency(format!(
                "W_{{{},{}}} series has a negative power of S or x^{{-1}}",
                corr.g, n
            )));
        }
        let mut ee = e.clone();
        ee[0] -= s_shift;
        for i in 1..nv {
            ee[i] -= mono[i];
        }
        shifted.add_term(ee, c.mul_ref(&scale));
    }
    let remaining = budget - mono.iter().sum::<u32>();
    // exact division by Π (y_i − y_j)^d, one homogeneous component at a time
    let mut divisor = Poly::one(nv);
    for &(i, j, d) in &vdiff {
        divisor = divisor.mul(&var::<C>(nv, i).sub(&var(nv, j)).pow(d));
    }
    let mut by_degree: BTreeMap<u32, Poly<C>> = BTreeMap::new();
    for (e, c) in shifted.iter() {
        by_degree
            .entry(y_degree(e))
            .or_insert_with(|| Poly::zero(nv))
            .add_term(e.clone(), c.clone());
    }
    let mut out = Poly::zero(nv);
    for (deg, comp) in by_degree {
        if deg > remaining {
            continue;
        }
        if deg < diff_degree {
            return Err(Error::Consistency(
                "series component below the divisor degree".into(),
            ));
        }
        let q = comp.div_exact(&divisor).ok_or_else(|| {
            Error::Consistency(format!("series component of degree {deg} is not divisible"))
        })?;
        out = out.add(&q);
    }
    Ok(truncate(&out, top))
}

/// Outcome of comparing a correlator's series with free-energy derivatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NablaReport {
    pub g: u32,
    pub n: usize,
    /// Number of `(x^{-(k+1)}, S^{2d})` coefficients compared.
    pub compared: usize,
    pub mismatches: Vec<String>,
}

impl NablaReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares the coefficient of `S^{2d} Π x_i^{−(k_i+1)}` in `W_{g,n}` with
/// `∂ⁿ F_g / ∂t_{2k_1+1} ⋯ ∂t_{2k_n+1}` at `t = 0` for all `k_i ≤ max_power − 1`.
///
/// The table must contain the genus-`g` free energy with at least `n` time
/// factors through weighted degree `n(2 max_power − 1)`.
pub fn nabla_crosscheck<C: Scalar>(
    corr: &Correlator<C>,
    table: &GenusTable<C>,
    max_power: u32,
) -> Result<NablaReport> {
    let n = corr.n;
    let needed = n as u32 * (2 * max_power - 1);
    if (table.max_order as u32) < needed || table.max_factors.is_some_and(|w| (w as usize) < n) {
        return Err(Error::MissingDependency(format!(
            "W_{{{},{n}}} through x^-{max_power} needs tau order {needed} with {n} time factors",
            corr.g
        )));
    }
    let series = nabla_series(corr, n as u32 * max_power)?;
    let f = table.genus(corr.g);
    let mut report = NablaReport {
        g: corr.g,
        n,
        compared: 0,
        mismatches: Vec::new(),
    };
    let mut seen: BTreeMap<Vec<u32>, ()> = BTreeMap::new();
    for (e, _) in series.iter() {
        let ys = e[1..].to_vec();
        if ys.contains(&0) {
            report.mismatches.push(format!(
                "term without x{} factor: {:?}",
                ys.iter().position(|&k| k == 0).unwrap() + 1,
                e
            ));
        }
        seen.insert(ys, ());
    }
    let mut ks = vec![1u32; n];
    loop {
        // multiplicity factor Π m_j! for the derivative multiset
        let mut slots: BTreeMap<u32, u32> = BTreeMap::new();
        for &k in &ks {
            *slots.entry(k - 1).or_default() += 1;
        }
        let mut mult = C::one();
        let mut exps = vec![0u32; max_power as usize];
        for (&slot, &m) in &slots {
            exps[slot as usize] = m;
            for i in 1..=m {
                mult = mult.mul_int(i as i64);
            }
        }
        let max_d = series
            .iter()
            .map(|(e, _)| e[0])
            .chain(f.iter().map(|(m, _)| m.nu_power()))
            .max()
            .unwrap_or(0);
        for d in 0..=max_d {
            let mut e = vec![d];
            e.extend_from_slice(&ks);
            let lhs = series.coefficient(&e);
            let rhs = f
                .coefficient(&TimeMonomial::new(exps.clone(), d))
                .mul_ref(&mult);
            report.compared += 1;
            if lhs != rhs {
                report.mismatches.push(format!(
                    "S^{} x^-{:?}: correlator {} vs free energy {}",
                    2 * d,
                    ks,
                    lhs.to_fraction_string(),
                    rhs.to_fraction_string()
                ));
            }
        }
        // next multi-index
        let mut i = 0;
        while i < n && ks[i] == max_power {
            ks[i] = 1;
            i += 1;
        }
        if i == n {
            break;
        }
        ks[i] += 1;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cutjoin::{tau_expansion, Nu};
    use crate::exactalg::Rational;
    use crate::freenergy::{genus_split, log_expansion_truncated};

    type C = Rational;

    #[test]
    fn w01_quadratic() {
        let w = w01::<C>().value;
        // W² − 4W − S²/x with S²/x = 4(u² − 1)
        let u = var::<C>(2, 1);
        let sx = Rf::from_poly(u.mul(&u).sub(&Poly::one(2)).scale(&C::from_int(4)));
        let res = w.mul(&w).sub(&w.scale(&C::from_int(4))).sub(&sx);
        assert!(res.is_zero());
    }

    #[test]
    fn low_levels_match_closed_forms() {
        let table = CorrelatorTable::<C>::compute(5).unwrap();
        for (g, n) in [(0, 1), (0, 2), (1, 1), (1, 2), (2, 1)] {
            let diff = table.get(g, n).unwrap().sub(&closed_form(g, n).unwrap());
            assert!(diff.is_zero(), "W_{{{g},{n}}}");
        }
        for g in 0..=2u32 {
            for n in 1..=(5 - 2 * g as usize) {
                assert!(
                    loop_residual(&table, g, n).unwrap().is_zero(),
                    "residual ({g},{n})"
                );
            }
        }
    }

    #[test]
    fn w03_printed_form_differs_by_u_squared() {
        let table = CorrelatorTable::<C>::compute(3).unwrap();
        let w = table.get(0, 3).unwrap();
        assert!(w.sub(&w03_corrected()).is_zero());
        assert!(!w.sub(&closed_form(0, 3).unwrap()).is_zero());
    }

    #[test]
    fn w02_sheets() {
        let w = w02::<C>();
        assert!(w.is_symmetric().unwrap());
        // same sheet: u_2 → u_1 is regular
        assert!(w.value.remap(2, &[0, 1, 1]).is_ok());
        // opposite sheet: pole in u_1 + u_2
        assert!(w
            .value
            .denominator()
            .iter()
            .any(|(a, _)| a == &var::<C>(3, 1).add(&var(3, 2))));
    }

    #[test]
    fn multilinear_w11_and_s_zero() {
        let table = CorrelatorTable::<C>::compute(3).unwrap();
        let w11 = table.correlator(1, 1).unwrap().multilinear().unwrap();
        assert_eq!(w11.components.keys().copied().collect::<Vec<_>>(), vec![1]);
        // at S = 0: 1/(16x)
        let at0 = w11.at_s_zero().unwrap();
        let expect = Rf::recip_power(&var::<C>(2, 1), 1)
            .unwrap()
            .scale(&C::from_frac(1, 16));
        assert!(at0.sub(&expect).is_zero());
    }

    #[test]
    fn z_forms_low() {
        let table = CorrelatorTable::<C>::compute(3).unwrap();
        let w11 = table.correlator(1, 1).unwrap().to_z_differential().unwrap();
        assert!(w11
            .value
            .add(&printed_differential(1, 1).unwrap())
            .is_zero());
        let w03 = table.correlator(0, 3).unwrap().to_z_differential().unwrap();
        assert!(w03
            .value
            .sub(&printed_differential(0, 3).unwrap())
            .is_zero());
        assert!(w03.polynomiality_failures().is_empty());
        assert!(w02::<C>().to_z_differential().is_err());
    }

    #[test]
    fn nabla_w11() {
        let tau = tau_expansion::<C>(6, Nu::Symbolic);
        let table = genus_split(&log_expansion_truncated(&tau, Some(1)).unwrap()).unwrap();
        let corr = CorrelatorTable::<C>::compute(3)
            .unwrap()
            .correlator(1, 1)
            .unwrap();
        let report = nabla_crosscheck(&corr, &table, 3).unwrap();
        assert!(report.passed(), "{:?}", report.mismatches);
        let series = nabla_series(&corr, 1).unwrap();
        assert_eq!(series.coefficient(&[0, 1]), C::from_frac(1, 16));
    }
}
