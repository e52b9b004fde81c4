use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::exactalg::{binomial, taylor_at_one, IntBiPoly, Monomial};

/// `h(t,u) = K(t,u) / ((1-t)^m (1-u)^n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    pub m: u32,
    pub n: u32,
    pub k: IntBiPoly,
}

impl HilbertSeries {
    /// Coefficient of `t^a u^b` in the expanded series.
    pub fn coefficient(&self, a: u32, b: u32) -> BigInt {
        let mut s = BigInt::zero();
        for (&(i, j), c) in self.k.terms() {
            if i > a || j > b {
                continue;
            }
            s += c * series_binom(a - i, self.m) * series_binom(b - j, self.n);
        }
        s
    }

    /// Cancels common factors of `(1-t)` and `(1-u)` between numerator and
    /// denominator, returning `(K', m', n')`.
    pub fn reduced(&self) -> (IntBiPoly, u32, u32) {
        let mut k = self.k.clone();
        let (mut m, mut n) = (self.m, self.n);
        while m > 0 {
            match k.div_one_minus_x() {
                Some(q) => {
                    k = q;
                    m -= 1;
                }
                None => break,
            }
        }
        while n > 0 {
            match k.div_one_minus_y() {
                Some(q) => {
                    k = q;
                    n -= 1;
                }
                None => break,
            }
        }
        (k, m, n)
    }

    /// The numerator over the smaller denominator `(1-t)^m (1-u)^n`, when the
    /// dropped factors divide `K`.
    pub fn numerator_over(&self, m: u32, n: u32) -> Option<IntBiPoly> {
        if m > self.m || n > self.n {
            return None;
        }
        let mut k = self.k.clone();
        for _ in 0..self.m - m {
            k = k.div_one_minus_x()?;
        }
        for _ in 0..self.n - n {
            k = k.div_one_minus_y()?;
        }
        Some(k)
    }

    /// `kappa` with `K = sum kappa_ij (1-t)^i (1-u)^j`.
    pub fn taylor_at_one(&self) -> IntBiPoly {
        taylor_at_one(&self.k)
    }

    pub fn to_json_value(&self) -> Value {
        json!({
            "m": self.m,
            "n": self.n,
            "K": self.k.display("t", "u"),
            "K_expanded": self.taylor_at_one().display("(1-t)", "(1-u)"),
        })
    }
}

/// Number of monomials of degree `d` in `m` variables.
pub(crate) fn series_binom(d: u32, m: u32) -> BigInt {
    if m == 0 {
        return if d == 0 { BigInt::one() } else { BigInt::zero() };
    }
    binomial(d as i64 + m as i64 - 1, m as i64 - 1)
}

/// K-polynomial of `S / (gens)` for a monomial ideal, where variable `v` has
/// weight `weights[v]` in `Z^2`.
pub fn monomial_k_polynomial(gens: &[Monomial], weights: &[(u32, u32)]) -> IntBiPoly {
    let mut g = minimalize(gens.to_vec());
    g.sort();
    k_rec(g, weights)
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !out.iter().any(|o| o.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn weight_of(m: &Monomial, weights: &[(u32, u32)]) -> (u32, u32) {
    let mut w = (0, 0);
    for (i, &e) in m.exponents().iter().enumerate() {
        w.0 += weights[i].0 * e as u32;
        w.1 += weights[i].1 * e as u32;
    }
    w
}

fn k_rec(gens: Vec<Monomial>, weights: &[(u32, u32)]) -> IntBiPoly {
    if gens.is_empty() {
        return IntBiPoly::one();
    }
    let nv = weights.len();
    let pairwise_coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.coprime(b)));
    if pairwise_coprime {
        let mut p = IntBiPoly::one();
        for g in &gens {
            let (i, j) = weight_of(g, weights);
            let f = &IntBiPoly::one() - &IntBiPoly::monomial(i, j, BigInt::one());
            p = &p * &f;
        }
        return p;
    }
    // pivot on the variable occurring in the most minimal generators
    let mut counts = vec![0usize; nv];
    for g in &gens {
        for (i, &e) in g.exponents().iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    let v = (0..nv).max_by(|&a, &b| counts[a].cmp(&counts[b]).then(b.cmp(&a))).unwrap();
    let xv = Monomial::var(nv, v);
    // I + (v)
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.exp(v) == 0).cloned().collect();
    plus.push(xv.clone());
    // I : v
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut q = g.clone();
            if q.exp(v) > 0 {
                q.set_exp(v, q.exp(v) - 1);
            }
            q
        })
        .collect();
    let (wi, wj) = weights[v];
    let a = k_rec(minimalize(plus), weights);
    let b = k_rec(minimalize(colon), weights);
    &a + &(&IntBiPoly::monomial(wi, wj, BigInt::one()) * &b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn k_polynomials() {
        let w = [(1, 0), (1, 0)];
        // (x y) in k[x,y]: 1 - t^2
        let k = monomial_k_polynomial(&[m(&[1, 1])], &w);
        assert_eq!(k, &IntBiPoly::one() - &IntBiPoly::x().pow(2));
        // (x^2, x y): 1 - 2t^2 + t^3
        let k = monomial_k_polynomial(&[m(&[2, 0]), m(&[1, 1])], &w);
        let t = IntBiPoly::x();
        let expect = &(&IntBiPoly::one() - &t.pow(2).scale(&BigInt::from(2))) + &t.pow(3);
        assert_eq!(k, expect);
        // empty ideal
        assert_eq!(monomial_k_polynomial(&[], &w), IntBiPoly::one());
    }

    #[test]
    fn three_lines_lead_ideal() {
        // lead ideal (a1, x a2) in k[x, y, a1, a2, a3]
        let w = [(1, 0), (1, 0), (0, 1), (0, 1), (0, 1)];
        let k = monomial_k_polynomial(&[m(&[0, 0, 1, 0, 0]), m(&[1, 0, 0, 1, 0])], &w);
        let u = IntBiPoly::y();
        let one = IntBiPoly::one();
        let tu = &IntBiPoly::x() * &u;
        assert_eq!(k, &(&one - &u) * &(&one - &tu));
        let hs = HilbertSeries { m: 2, n: 3, k };
        // dim (S/I)_(1,1) = 3
        assert_eq!(hs.coefficient(1, 1), BigInt::from(3));
        assert_eq!(hs.coefficient(0, 0), BigInt::one());
        let (kr, mr, nr) = hs.reduced();
        assert_eq!((mr, nr), (2, 2));
        assert_eq!(kr, &one - &tu);
    }
}
