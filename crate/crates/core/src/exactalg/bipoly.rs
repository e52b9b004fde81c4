//! Bivariate polynomials with exact coefficients.
//!
//! Used for characteristic and Tutte polynomials, homogenized characteristic
//! polynomials, K-polynomials of Hilbert series and Chow classes. The two
//! variables are positional; names are only supplied when printing.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Num, One, Signed, Zero};
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use super::rational::{format_rational, Rational};

/// Coefficient rings usable in a [`BiPoly`].
pub trait Coeff: Clone + Num + Neg<Output = Self> + Signed + fmt::Debug {
    fn to_json(&self) -> String;
    fn from_i64(n: i64) -> Self;
}

impl Coeff for BigInt {
    fn to_json(&self) -> String {
        self.to_string()
    }
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
}

impl Coeff for Rational {
    fn to_json(&self) -> String {
        format_rational(self)
    }
    fn from_i64(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiPoly<C> {
    terms: BTreeMap<(u32, u32), C>,
}

pub type IntBiPoly = BiPoly<BigInt>;
pub type RatBiPoly = BiPoly<Rational>;

impl<C: Coeff> Default for BiPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> BiPoly<C> {
    pub fn zero() -> Self {
        BiPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(i: u32, j: u32, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    /// The first variable.
    pub fn x() -> Self {
        Self::monomial(1, 0, C::one())
    }

    /// The second variable.
    pub fn y() -> Self {
        Self::monomial(0, 1, C::one())
    }

    /// Univariate polynomial in the first variable from ascending coefficients.
    pub fn from_univariate(coeffs: &[C]) -> Self {
        let mut p = Self::zero();
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(i as u32, 0, c.clone());
        }
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), C)>) -> Self {
        let mut p = Self::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((i, j)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> C {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree in the first variable (`None` for the zero polynomial).
    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0 + k.1).max()
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, a)| (*k, a.clone() * c.clone())))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Part of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        Self::from_terms(self.terms.iter().filter(|(k, _)| k.0 + k.1 == d).map(|(k, c)| (*k, c.clone())))
    }

    /// Lowest total degree carrying a nonzero coefficient.
    pub fn min_total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0 + k.1).min()
    }

    /// Substitutes `x -> xs`, `y -> ys`.
    pub fn compose(&self, xs: &Self, ys: &Self) -> Self {
        let mut xp: Vec<Self> = vec![Self::one()];
        let mut yp: Vec<Self> = vec![Self::one()];
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            while xp.len() <= i as usize {
                let n = xp.last().unwrap() * xs;
                xp.push(n);
            }
            while yp.len() <= j as usize {
                let n = yp.last().unwrap() * ys;
                yp.push(n);
            }
            let t = (&xp[i as usize] * &yp[j as usize]).scale(c);
            out = &out + &t;
        }
        out
    }

    pub fn swap_vars(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())))
    }

    pub fn eval(&self, x: &C, y: &C) -> C {
        let mut acc = C::zero();
        for (&(i, j), c) in &self.terms {
            let mut t = c.clone();
            for _ in 0..i {
                t = t * x.clone();
            }
            for _ in 0..j {
                t = t * y.clone();
            }
            acc = acc + t;
        }
        acc
    }

    /// Sets the first variable to one, leaving a polynomial in the second
    /// variable (stored in the first slot).
    pub fn eval_x_at_one(&self) -> Self {
        let mut p = Self::zero();
        for (&(_, j), c) in &self.terms {
            p.add_term(j, 0, c.clone());
        }
        p
    }

    /// Sets the second variable to one.
    pub fn eval_y_at_one(&self) -> Self {
        let mut p = Self::zero();
        for (&(i, _), c) in &self.terms {
            p.add_term(i, 0, c.clone());
        }
        p
    }

    /// Exact division by `(1 - x)`; `None` if it does not divide.
    pub fn div_one_minus_x(&self) -> Option<Self> {
        self.swap_vars().div_one_minus_y().map(|q| q.swap_vars())
    }

    /// Exact division by `(1 - y)`; `None` if it does not divide.
    pub fn div_one_minus_y(&self) -> Option<Self> {
        // p = (1-y) q  <=>  q_j = sum_{r<=j} p_r  (per power of x), with sum_j p_j = 0.
        let mut by_x: BTreeMap<u32, BTreeMap<u32, C>> = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            by_x.entry(i).or_default().insert(j, c.clone());
        }
        let mut q = Self::zero();
        for (i, col) in by_x {
            let top = *col.keys().next_back().unwrap();
            let mut acc = C::zero();
            for j in 0..=top {
                if let Some(c) = col.get(&j) {
                    acc = acc + c.clone();
                }
                if j < top {
                    q.add_term(i, j, acc.clone());
                }
            }
            if !acc.is_zero() {
                return None;
            }
        }
        Some(q)
    }

    /// Pretty form with the given variable names, highest total degree first.
    pub fn display(&self, xn: &str, yn: &str) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by(|a, b| (b.0 + b.1).cmp(&(a.0 + a.1)).then(b.0.cmp(&a.0)));
        let mut out = String::new();
        for (n, k) in keys.into_iter().enumerate() {
            let c = &self.terms[k];
            let neg = c.is_negative();
            let a = c.abs();
            if n == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut f = Vec::new();
            for (name, e) in [(xn, k.0), (yn, k.1)] {
                match e {
                    0 => {}
                    1 => f.push(name.to_string()),
                    _ => f.push(format!("{name}^{e}")),
                }
            }
            let cs = a.to_json();
            if f.is_empty() {
                out.push_str(&cs);
            } else {
                if !a.is_one() {
                    out.push_str(&cs);
                    out.push('*');
                }
                out.push_str(&f.join("*"));
            }
        }
        out
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> BiPoly<D> {
        BiPoly::from_terms(self.terms.iter().map(|(k, c)| (*k, f(c))))
    }

    /// Ascending coefficients of the first variable, for polynomials without `y`.
    pub fn univariate_coeffs(&self) -> Vec<C> {
        let deg = self.degree_x().unwrap_or(0);
        (0..=deg).map(|i| self.coeff(i, 0)).collect()
    }
}

impl IntBiPoly {
    pub fn to_rational(&self) -> RatBiPoly {
        self.map_coeffs(|c| Rational::from_integer(c.clone()))
    }
}

impl RatBiPoly {
    /// Integer version when every coefficient is integral.
    pub fn to_integer(&self) -> Option<IntBiPoly> {
        if self.terms.values().all(|c| c.is_integer()) {
            Some(self.map_coeffs(|c| c.numer().clone()))
        } else {
            None
        }
    }
}

impl<C: Coeff> Add<&BiPoly<C>> for &BiPoly<C> {
    type Output = BiPoly<C>;
    fn add(self, rhs: &BiPoly<C>) -> BiPoly<C> {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl<C: Coeff> Sub<&BiPoly<C>> for &BiPoly<C> {
    type Output = BiPoly<C>;
    fn sub(self, rhs: &BiPoly<C>) -> BiPoly<C> {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c.clone());
        }
        out
    }
}

impl<C: Coeff> Mul<&BiPoly<C>> for &BiPoly<C> {
    type Output = BiPoly<C>;
    fn mul(self, rhs: &BiPoly<C>) -> BiPoly<C> {
        let mut out = BiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<C: Coeff> Neg for &BiPoly<C> {
    type Output = BiPoly<C>;
    fn neg(self) -> BiPoly<C> {
        BiPoly::from_terms(self.terms.iter().map(|(k, c)| (*k, -c.clone())))
    }
}

impl<C: Coeff> Serialize for BiPoly<C> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for (&(i, j), c) in &self.terms {
            map.serialize_entry(&format!("{i},{j}"), &c.to_json())?;
        }
        map.end()
    }
}

/// Re-expands `K(t,u)` as `sum kappa_ij (1-t)^i (1-u)^j`, returning the table
/// `kappa` as a polynomial whose `(i,j)` coefficient is `kappa_ij`.
pub fn taylor_at_one<C: Coeff>(k: &BiPoly<C>) -> BiPoly<C> {
    // t = 1 - T, u = 1 - U
    let one = BiPoly::<C>::one();
    k.compose(&(&one - &BiPoly::x()), &(&one - &BiPoly::y()))
}

/// Binomial coefficient `C(n, k)` as an exact integer; zero when `n < k` or `n < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k || n < 0 {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n as i64).fold(BigInt::one(), |a, b| a * BigInt::from(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(terms: &[((u32, u32), i64)]) -> IntBiPoly {
        IntBiPoly::from_terms(terms.iter().map(|&(k, c)| (k, BigInt::from(c))))
    }

    #[test]
    fn taylor_trivial_cases() {
        assert_eq!(taylor_at_one(&IntBiPoly::one()), IntBiPoly::one());
        // t = 1 - (1-t)
        assert_eq!(taylor_at_one(&IntBiPoly::x()), ip(&[((0, 0), 1), ((1, 0), -1)]));
    }

    #[test]
    fn taylor_three_lines_numerator() {
        // K = (1-u)(1-tu) = 1 - u - tu + tu^2
        let k = ip(&[((0, 0), 1), ((0, 1), -1), ((1, 1), -1), ((1, 2), 1)]);
        let kappa = taylor_at_one(&k);
        // expand 1 - tu = (1-t) + (1-u) - (1-t)(1-u), times (1-u)
        assert_eq!(kappa, ip(&[((1, 1), 1), ((0, 2), 1), ((1, 2), -1)]));
        // inverse substitution recovers K
        let one = IntBiPoly::one();
        let back = kappa.compose(&(&one - &IntBiPoly::x()), &(&one - &IntBiPoly::y()));
        assert_eq!(back, k);
    }

    #[test]
    fn division_by_one_minus() {
        let one = IntBiPoly::one();
        let omx = &one - &IntBiPoly::x();
        let p = &omx.pow(3) * &ip(&[((0, 1), 2), ((2, 2), -5)]);
        let mut q = p.clone();
        for _ in 0..3 {
            q = q.div_one_minus_x().unwrap();
        }
        assert_eq!(q, ip(&[((0, 1), 2), ((2, 2), -5)]));
        assert!(q.div_one_minus_x().is_none());
        assert!(IntBiPoly::x().div_one_minus_y().is_none());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(-1, 0), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
    }

    #[test]
    fn display_orders_by_degree() {
        let p = ip(&[((2, 0), 1), ((1, 0), 1), ((0, 1), 1)]);
        assert_eq!(p.display("x", "y"), "x^2 + x + y");
        let q = ip(&[((0, 0), 2), ((1, 0), -3), ((2, 0), 1)]);
        assert_eq!(q.display("t", "u"), "t^2 - 3*t + 2");
    }
}
