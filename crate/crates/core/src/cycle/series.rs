use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::exactalg::{binomial, factorial, IntBiPoly, RatBiPoly, Rational};
use crate::groebner::HilbertSeries;

/// The Hilbert polynomial `p(p, q)` of a bigraded quotient, with `p` in the
/// first slot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPolynomial {
    pub poly: RatBiPoly,
}

/// `C(x - a + m - 1, m - 1)` as a polynomial in `x` (first slot if `first`).
fn shifted_binomial(a: u32, m: u32, first: bool) -> RatBiPoly {
    if m == 0 {
        return RatBiPoly::zero();
    }
    let var = if first { RatBiPoly::x() } else { RatBiPoly::y() };
    let mut p = RatBiPoly::one();
    for j in 1..m {
        let shift = Rational::from_integer(BigInt::from(j as i64 - a as i64));
        p = &p * &(&var + &RatBiPoly::constant(shift));
    }
    let f = Rational::from_integer(factorial(m - 1));
    p.scale(&(Rational::one() / f))
}

impl HilbertPolynomial {
    pub fn from_series(hs: &HilbertSeries) -> Self {
        let mut poly = RatBiPoly::zero();
        for (&(a, b), c) in hs.k.terms() {
            let t = &shifted_binomial(a, hs.m, true) * &shifted_binomial(b, hs.n, false);
            poly = &poly + &t.scale(&Rational::from_integer(c.clone()));
        }
        HilbertPolynomial { poly }
    }

    pub fn eval(&self, p: i64, q: i64) -> Rational {
        self.poly.eval(&Rational::from_integer(p.into()), &Rational::from_integer(q.into()))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.poly.total_degree()
    }

    /// Bidegree from which the series coefficients follow the polynomial.
    pub fn stability_offset(hs: &HilbertSeries) -> (u32, u32) {
        (hs.k.degree_x().unwrap_or(0), hs.k.degree_y().unwrap_or(0))
    }

    pub fn display(&self) -> String {
        self.poly.display("p", "q")
    }
}

/// `(1/(n-2)!) sum_i t_{i0} C(n-2, i-1) p^(i-1) q^(n-1-i)` for `1 <= i <= min(l, n-1)`.
pub fn expected_hpoly_leading(tutte: &IntBiPoly, l: u32, n: u32) -> RatBiPoly {
    let mut out = RatBiPoly::zero();
    if n < 2 {
        return out;
    }
    let f = Rational::from_integer(factorial(n - 2));
    for i in 1..=l.min(n - 1) {
        let c = tutte.coeff(i, 0) * binomial((n - 2) as i64, (i - 1) as i64);
        if c.is_zero() {
            continue;
        }
        out.add_term(i - 1, n - 1 - i, Rational::from_integer(c) / &f);
    }
    out
}

/// Pole coefficients of the highest total order `n` and any terms whose
/// pole order exceeds `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleAnalysis {
    /// `i -> coefficient of (1-t)^-i (1-u)^-(n-i)`.
    pub leading: BTreeMap<u32, BigInt>,
    /// Nonzero `kappa_{i,j}` with `i + j < m`.
    pub excess: Vec<((u32, u32), BigInt)>,
}

impl PoleAnalysis {
    pub fn to_json_value(&self) -> Value {
        let leading: serde_json::Map<String, Value> =
            self.leading.iter().map(|(i, c)| (i.to_string(), json!(c.to_string()))).collect();
        json!({
            "leading": leading,
            "excess": self.excess.iter().map(|((i, j), c)| json!([i, j, c.to_string()])).collect::<Vec<_>>(),
        })
    }
}

/// Reads the pole expansion from `K = sum kappa_ij (1-t)^i (1-u)^j`.
pub fn leading_poles(hs: &HilbertSeries) -> PoleAnalysis {
    let kappa = hs.taylor_at_one();
    let mut leading = BTreeMap::new();
    for i in 0..=hs.n {
        let c = if i <= hs.m { kappa.coeff(hs.m - i, i) } else { BigInt::zero() };
        leading.insert(i, c);
    }
    let excess =
        kappa.terms().filter(|(&(i, j), c)| i + j < hs.m && !c.is_zero()).map(|(k, c)| (*k, c.clone())).collect();
    PoleAnalysis { leading, excess }
}

/// `(1-t)^-m G(s,t)` for `G` given over the denominator `(1-t)^m`, with `s`
/// in the first slot and `t` in the second.
fn divide_by_one_minus_t(g: &IntBiPoly, m: u32) -> Option<IntBiPoly> {
    let mut q = g.clone();
    for _ in 0..m {
        q = q.div_one_minus_y()?;
    }
    Some(q)
}

/// `u = t - s t (1 - t)` in the `(s, t)` plane.
fn u_substitution() -> IntBiPoly {
    let s = IntBiPoly::x();
    let t = IntBiPoly::y();
    let st = &s * &t;
    &(&t - &st) + &(&st * &t)
}

/// `K(t, t - s t (1 - t)) / (1 - t)^m`, if the division is exact.
pub fn tutte_quotient(hs: &HilbertSeries) -> Option<IntBiPoly> {
    let g = hs.k.compose(&IntBiPoly::y(), &u_substitution());
    divide_by_one_minus_t(&g, hs.m)
}

/// `sign * chi(-s)` as a polynomial in the first slot.
pub fn signed_chi_at_minus_s(chi: &IntBiPoly, sign_exponent: u32) -> IntBiPoly {
    let mut out = IntBiPoly::zero();
    for (&(i, j), c) in chi.terms() {
        let neg = (i + sign_exponent) % 2 == 1;
        out.add_term(i, j, if neg { -c.clone() } else { c.clone() });
    }
    out
}

/// `Psi(s,t) = P(t, s t (1-t) - t)` for `P(x,y) = num(x,y) / (1-x)^m`.
pub fn psi_from_p(num: &IntBiPoly, m: u32) -> Option<IntBiPoly> {
    let s = IntBiPoly::x();
    let t = IntBiPoly::y();
    let st = &s * &t;
    let y = &(&st - &(&st * &t)) - &t;
    divide_by_one_minus_t(&num.compose(&t, &y), m)
}

/// `Psi` modulo `t^(bound+1)` from truncated Hilbert functions of `D_p`:
/// `dims[p][d] = dim D_p(A)_d`.
pub fn psi_truncated(dims: &[Vec<usize>], bound: u32) -> IntBiPoly {
    let s = IntBiPoly::x();
    let t = IntBiPoly::y();
    let st = &s * &t;
    let factor = &(&(&st - &(&st * &t)) - &t);
    let mut out = IntBiPoly::zero();
    let mut power = IntBiPoly::one();
    for row in dims {
        let h = IntBiPoly::from_terms(row.iter().enumerate().map(|(d, &c)| ((0, d as u32), BigInt::from(c))));
        out = &out + &truncate_t(&(&h * &power), bound);
        power = truncate_t(&(&power * factor), bound);
    }
    out
}

fn truncate_t(p: &IntBiPoly, bound: u32) -> IntBiPoly {
    IntBiPoly::from_terms(p.terms().filter(|(k, _)| k.1 <= bound).map(|(k, c)| (*k, c.clone())))
}
