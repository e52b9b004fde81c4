//! Sparse multivariate polynomials over the rationals.
//!
//! Variables are addressed by index. In the bigraded ring used throughout the
//! crate the first `nx` variables are the coordinates of `V` (degree `(1,0)`)
//! and the following ones are the weight variables `a_i` (degree `(0,1)`);
//! a `MultiPoly` itself carries no grading, callers pass `nx` when asking for
//! a bidegree.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use super::rational::{format_rational, parse_rational, Rational};

/// Exponent vector. The derived ordering is lexicographic on exponents,
/// which is the canonical storage order for polynomials.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(SmallVec<[u16; 16]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    /// `(x-degree, a-degree)` where the first `nx` variables are x-variables.
    pub fn bidegree(&self, nx: usize) -> (u32, u32) {
        let dx = self.0[..nx].iter().map(|&e| e as u32).sum();
        let da = self.0[nx..].iter().map(|&e| e as u32).sum();
        (dx, da)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub fn set_exp(&mut self, i: usize, e: u16) {
        self.0[i] = e;
    }

    /// Monomial in a ring with `n` variables: truncates or pads with zeros.
    pub fn resized(&self, n: usize) -> Monomial {
        let mut v: SmallVec<[u16; 16]> = self.0.iter().copied().take(n).collect();
        v.resize(n, 0);
        Monomial(v)
    }

    fn key(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        parts.join(",")
    }
}

/// All exponent vectors in `nvars` variables of total degree `d`, in
/// descending lexicographic order (so `x_1^d` comes first).
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i + 1 == nvars {
            cur[i] = left as u16;
            out.push(Monomial::from_exponents(cur));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e as u16;
            rec(nvars, i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    let mut cur = vec![0u16; nvars];
    rec(nvars, 0, d, &mut cur, &mut out);
    out
}

/// Monomials of bidegree `(a, b)` in `nx + na` variables.
pub fn monomials_of_bidegree(nx: usize, na: usize, a: u32, b: u32) -> Vec<Monomial> {
    let xs = monomials_of_degree(nx, a);
    let as_ = monomials_of_degree(na, b);
    let mut out = Vec::with_capacity(xs.len() * as_.len());
    for mx in &xs {
        for ma in &as_ {
            let mut e: Vec<u16> = mx.exponents().to_vec();
            e.extend_from_slice(ma.exponents());
            out.push(Monomial::from_exponents(&e));
        }
    }
    out
}

/// Multivariate polynomial with rational coefficients; no zero coefficient is stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(Monomial::var(nvars, i), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(m.nvars());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Linear form `sum coeffs[i] * x_i` in a ring of `nvars >= coeffs.len()` variables.
    pub fn linear(nvars: usize, coeffs: &[Rational]) -> Self {
        let mut p = Self::zero(nvars);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(nvars, i), c.clone());
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity mismatch");
            p.add_term(m, c);
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

    /// Terms in ascending lexicographic order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(k, a)| (k.mul(m), a.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Bidegree if the polynomial is bihomogeneous and nonzero.
    pub fn bidegree(&self, nx: usize) -> Option<(u32, u32)> {
        let mut it = self.terms.keys().map(|m| m.bidegree(nx));
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }

    /// Largest term in lexicographic order.
    pub fn lex_leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn derivative(&self, i: usize) -> Self {
        let mut p = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exp(i);
            if e > 0 {
                let mut m2 = m.clone();
                m2.set_exp(i, e - 1);
                p.add_term(m2, c * Rational::from_integer(BigInt::from(e)));
            }
        }
        p
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        assert_eq!(self.nvars, divisor.nvars);
        let (dm, dc) = divisor.lex_leading()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((m, c)) = rem.lex_leading() {
            if !dm.divides(m) {
                return None;
            }
            let q = dm.quotient_of(m);
            let qc = c / &dc;
            rem = &rem - &divisor.mul_monomial(&q).scale(&qc);
            quot.add_term(q, qc);
        }
        Some(quot)
    }

    /// Substitutes `x_i -> images[i]`; all images live in one common ring.
    pub fn substitute(&self, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map(|p| p.nvars).unwrap_or(0);
        let mut out = Self::zero(target);
        let mut powers: Vec<Vec<MultiPoly>> = images.iter().map(|p| vec![Self::one(p.nvars)]).collect();
        for (m, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            out = &out + &t;
        }
        out
    }

    /// Re-embeds into a ring with `n` variables. Truncation requires the
    /// dropped variables to be absent.
    pub fn resized(&self, n: usize) -> MultiPoly {
        if n < self.nvars {
            debug_assert!(self.terms.keys().all(|m| m.exponents()[n..].iter().all(|&e| e == 0)));
        }
        MultiPoly { nvars: n, terms: self.terms.iter().map(|(m, c)| (m.resized(n), c.clone())).collect() }
    }

    /// Renames variables: variable `i` becomes `map[i]` in a ring of `n` variables.
    pub fn remap(&self, n: usize, map: &[usize]) -> MultiPoly {
        let mut p = Self::zero(n);
        for (m, c) in &self.terms {
            let mut e = vec![0u16; n];
            for (i, &x) in m.exponents().iter().enumerate() {
                e[map[i]] += x;
            }
            p.add_term(Monomial::from_exponents(&e), c.clone());
        }
        p
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.exp(i) > 0)
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Divides by the leading (lex) coefficient.
    pub fn monic(&self) -> MultiPoly {
        match self.lex_leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&(Rational::one() / c)),
        }
    }

    /// Pretty form using the given variable names.
    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => factors.push(format!("{}^{}", names[i], e)),
                }
            }
            let coeff = format_rational(&a);
            if factors.is_empty() {
                out.push_str(&coeff);
            } else {
                if !a.is_one() {
                    out.push_str(&coeff);
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

/// Standard names `x1..x{nx}, a1..a{na}` for the bigraded ring.
pub fn bigraded_names(nx: usize, na: usize) -> Vec<String> {
    let mut v: Vec<String> = (1..=nx).map(|i| format!("x{i}")).collect();
    v.extend((1..=na).map(|i| format!("a{i}")));
    v
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        f.write_str(&self.to_string_with(&names))
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "ring mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "ring mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "ring mismatch");
        let mut out = MultiPoly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            map.serialize_entry(&m.key(), &format_rational(c))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = MultiPoly;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from exponent tuples to rational strings")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<MultiPoly, A::Error> {
                let mut terms: Vec<(Monomial, Rational)> = Vec::new();
                let mut nvars: Option<usize> = None;
                while let Some((k, v)) = access.next_entry::<String, String>()? {
                    let exps: Vec<u16> = if k.is_empty() {
                        Vec::new()
                    } else {
                        k.split(',')
                            .map(|e| e.trim().parse::<u16>())
                            .collect::<Result<_, _>>()
                            .map_err(|_| de::Error::custom(format!("bad exponent tuple {k:?}")))?
                    };
                    match nvars {
                        None => nvars = Some(exps.len()),
                        Some(n) if n != exps.len() => {
                            return Err(de::Error::custom("inconsistent exponent tuple lengths"))
                        }
                        _ => {}
                    }
                    let c = parse_rational(&v).map_err(de::Error::custom)?;
                    terms.push((Monomial::from_exponents(&exps), c));
                }
                Ok(MultiPoly::from_terms(nvars.unwrap_or(0), terms))
            }
        }
        d.deserialize_map(V)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::rat;

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    #[test]
    fn arithmetic_and_division() {
        let (a, b) = (x(2, 0), x(2, 1));
        let f = &(&a * &b) * &(&a - &b); // xy(x-y)
        let q = f.div_exact(&(&a - &b)).unwrap();
        assert_eq!(q, &a * &b);
        assert!(f.div_exact(&(&a + &b)).is_none());
        assert_eq!(f.total_degree(), Some(3));
        assert!(f.is_homogeneous());
    }

    #[test]
    fn bidegree_and_derivative() {
        // x1*a1 + x2*a2 in 2+2 variables
        let p = &(&x(4, 0) * &x(4, 2)) + &(&x(4, 1) * &x(4, 3));
        assert_eq!(p.bidegree(2), Some((1, 1)));
        let q = &p + &x(4, 2);
        assert_eq!(q.bidegree(2), None);
        assert_eq!(p.derivative(0), x(4, 2));
    }

    #[test]
    fn monomial_enumeration() {
        let ms = monomials_of_degree(3, 2);
        assert_eq!(ms.len(), 6);
        assert_eq!(ms[0].exponents(), &[2, 0, 0]);
        assert_eq!(ms[5].exponents(), &[0, 0, 2]);
        assert_eq!(monomials_of_bidegree(2, 3, 1, 1).len(), 6);
        assert_eq!(monomials_of_degree(0, 0).len(), 1);
        assert!(monomials_of_degree(0, 1).is_empty());
    }

    #[test]
    fn substitution() {
        // p(x,y) = x^2 - y, with x -> y+1, y -> 2y in one variable ring
        let p = &x(2, 0).pow(2) - &x(2, 1);
        let y = x(1, 0);
        let img = [&y + &MultiPoly::one(1), y.scale(&rat(2))];
        let r = p.substitute(&img);
        // (y+1)^2 - 2y = y^2 + 1
        assert_eq!(r, &y.pow(2) + &MultiPoly::one(1));
    }

    #[test]
    fn json_round_trip() {
        let p = &x(3, 0).scale(&rat(-2)) + &(&x(3, 1) * &x(3, 2)).scale(&Rational::new(1.into(), 3.into()));
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"0,1,1":"1/3","1,0,0":"-2"}"#);
        let back: MultiPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn display() {
        let p = &x(2, 0).scale(&rat(-2)) + &x(2, 1).pow(2);
        assert_eq!(p.to_string(), "-2*x1 + x2^2");
    }
}
