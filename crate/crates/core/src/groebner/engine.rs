//! Fraction-free Buchberger algorithm with the Gebauer-Moller criteria.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::order::MonomialOrder;
use crate::exactalg::rational::common_denominator;
use crate::exactalg::{Monomial, MultiPoly, Rational};

/// Integer polynomial with terms sorted in decreasing monomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IPoly {
    pub terms: Vec<(Monomial, BigInt)>,
}

impl IPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    pub fn from_multipoly(p: &MultiPoly, order: &MonomialOrder) -> Self {
        let den = common_denominator(p.terms().map(|(_, c)| c));
        let mut terms: Vec<(Monomial, BigInt)> = p
            .terms()
            .map(|(m, c)| {
                let v = c * Rational::from_integer(den.clone());
                (m.clone(), v.numer().clone())
            })
            .collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out = IPoly { terms };
        out.make_primitive();
        out
    }

    pub fn to_multipoly(&self, nvars: usize) -> MultiPoly {
        let lc = Rational::from_integer(self.lc().clone());
        MultiPoly::from_terms(
            nvars,
            self.terms.iter().map(|(m, c)| (m.clone(), Rational::from_integer(c.clone()) / &lc)),
        )
    }

    /// Divides out the content and makes the leading coefficient positive.
    /// Returns the factor that was divided out (with sign).
    pub fn make_primitive(&mut self) -> BigInt {
        if self.terms.is_empty() {
            return BigInt::one();
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in &mut self.terms {
                *c = &*c / &g;
            }
        }
        g
    }

    fn max_bits(&self) -> u64 {
        self.terms.iter().map(|(_, c)| c.bits()).max().unwrap_or(0)
    }
}

/// `a*f - b*m*g` with both inputs sorted decreasingly.
fn sub_mul(
    f: &[(Monomial, BigInt)],
    a: &BigInt,
    g: &[(Monomial, BigInt)],
    m: &Monomial,
    b: &BigInt,
    order: &MonomialOrder,
) -> Vec<(Monomial, BigInt)> {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let mut i = 0;
    let mut gi = g.iter().map(|(gm, gc)| (m.mul(gm), gc)).peekable();
    let a_one = a.is_one();
    while i < f.len() || gi.peek().is_some() {
        let ord = match (f.get(i), gi.peek()) {
            (Some(ft), Some(gt)) => order.cmp(&ft.0, &gt.0),
            (Some(_), None) => Ordering::Greater,
            (None, _) => Ordering::Less,
        };
        match ord {
            Ordering::Greater => {
                let (fm, fc) = &f[i];
                out.push((fm.clone(), if a_one { fc.clone() } else { fc * a }));
                i += 1;
            }
            Ordering::Less => {
                let (gm, gc) = gi.next().unwrap();
                out.push((gm, -(gc * b)));
            }
            Ordering::Equal => {
                let (fm, fc) = &f[i];
                let (_, gc) = gi.next().unwrap();
                let c = if a_one { fc.clone() } else { fc * a } - gc * b;
                if !c.is_zero() {
                    out.push((fm.clone(), c));
                }
                i += 1;
            }
        }
    }
    out
}

fn divmask(m: &Monomial) -> u64 {
    let mut mask = 0u64;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e > 0 {
            mask |= 1 << (i % 64);
        }
    }
    mask
}

/// Reducer set: polynomials together with their leading monomial masks.
pub(crate) struct Reducers<'a> {
    polys: Vec<&'a IPoly>,
    masks: Vec<u64>,
}

impl<'a> Reducers<'a> {
    pub fn new(polys: Vec<&'a IPoly>) -> Self {
        let masks = polys.iter().map(|p| divmask(p.lead())).collect();
        Reducers { polys, masks }
    }

    fn find(&self, t: &Monomial) -> Option<&'a IPoly> {
        let tm = divmask(t);
        for (p, &mk) in self.polys.iter().zip(&self.masks) {
            if mk & !tm == 0 && p.lead().divides(t) {
                return Some(p);
            }
        }
        None
    }
}

/// Full reduction of `f`. Returns `(r, s)` with `s * f - r` in the ideal
/// generated by the reducers and no term of `r` divisible by a reducer lead.
pub(crate) fn reduce(f: &IPoly, reducers: &Reducers, order: &MonomialOrder) -> (IPoly, Rational) {
    let mut p = f.terms.clone();
    let mut scale = Rational::one();
    let mut i = 0;
    let mut steps = 0u32;
    while i < p.len() {
        let Some(g) = reducers.find(&p[i].0) else {
            i += 1;
            continue;
        };
        let c = &p[i].1;
        let d = g.lc();
        let gg = c.gcd(d);
        let a = d / &gg;
        let b = c / &gg;
        let m = g.lead().quotient_of(&p[i].0);
        // terms before i are untouched apart from scaling by a
        let tail = sub_mul(&p[i..], &a, &g.terms, &m, &b, order);
        if !a.is_one() {
            for t in &mut p[..i] {
                t.1 = &t.1 * &a;
            }
            scale *= Rational::from_integer(a);
        }
        p.truncate(i);
        p.extend(tail);
        steps += 1;
        if steps.is_multiple_of(8) {
            let mut q = IPoly { terms: std::mem::take(&mut p) };
            if q.max_bits() > 64 {
                let g = q.make_primitive();
                scale /= Rational::from_integer(g);
            }
            p = q.terms;
        }
    }
    let mut r = IPoly { terms: p };
    let g = r.make_primitive();
    scale /= Rational::from_integer(g);
    (r, scale)
}

/// S-polynomial, cancelling the leading terms without dividing.
pub(crate) fn spoly_of(f: &IPoly, g: &IPoly, order: &MonomialOrder) -> IPoly {
    let lcm = f.lead().lcm(g.lead());
    let gg = f.lc().gcd(g.lc());
    let a = g.lc() / &gg;
    let b = f.lc() / &gg;
    let mf = f.lead().quotient_of(&lcm);
    let mg = g.lead().quotient_of(&lcm);
    let fs: Vec<(Monomial, BigInt)> = f.terms[1..].iter().map(|(m, c)| (mf.mul(m), c.clone())).collect();
    IPoly { terms: sub_mul(&fs, &a, &g.terms[1..], &mg, &b, order) }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    deg: u32,
}

fn select(pairs: &[Pair], order: &MonomialOrder) -> usize {
    let mut best = 0;
    for k in 1..pairs.len() {
        let (p, q) = (&pairs[k], &pairs[best]);
        let better = match p.deg.cmp(&q.deg) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => match order.cmp(&p.lcm, &q.lcm) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => (p.i, p.j) < (q.i, q.j),
            },
        };
        if better {
            best = k;
        }
    }
    best
}

/// Statistics of one Buchberger run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EngineStats {
    pub pairs_reduced: usize,
    pub zero_reductions: usize,
    pub basis_size_before_reduction: usize,
}

pub(crate) struct Engine<'o> {
    order: &'o MonomialOrder,
    store: Vec<IPoly>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    pub stats: EngineStats,
}

impl<'o> Engine<'o> {
    pub fn new(order: &'o MonomialOrder) -> Self {
        Engine { order, store: Vec::new(), active: Vec::new(), pairs: Vec::new(), stats: EngineStats::default() }
    }

    fn reducers(&self) -> Reducers<'_> {
        Reducers::new(self.store.iter().zip(&self.active).filter(|(_, &a)| a).map(|(p, _)| p).collect())
    }

    /// Gebauer-Moller installation of a new basis element.
    fn update(&mut self, h: IPoly) {
        let hl = h.lead().clone();
        self.store.push(h);
        self.active.push(false);
        let k = self.store.len() - 1;
        let active: Vec<usize> = (0..k).filter(|&g| self.active[g]).collect();

        let cands: Vec<Pair> = active
            .iter()
            .map(|&g| {
                let lcm = hl.lcm(self.store[g].lead());
                Pair { i: g, j: k, deg: lcm.degree(), lcm }
            })
            .collect();
        let coprime = |p: &Pair, store: &[IPoly]| hl.coprime(store[p.i].lead());

        // chain criterion among the new pairs
        let mut kept: Vec<Pair> = Vec::new();
        for (idx, p) in cands.iter().enumerate() {
            if coprime(p, &self.store) {
                kept.push(p.clone());
                continue;
            }
            let dominated = cands[idx + 1..].iter().chain(kept.iter()).any(|q| q.lcm.divides(&p.lcm));
            if !dominated {
                kept.push(p.clone());
            }
        }
        // product criterion
        let new_pairs: Vec<Pair> = kept.into_iter().filter(|p| !coprime(p, &self.store)).collect();

        // chain criterion on old pairs
        let store = &self.store;
        self.pairs.retain(|p| {
            if !hl.divides(&p.lcm) {
                return true;
            }
            let l1 = store[p.i].lead().lcm(&hl);
            let l2 = store[p.j].lead().lcm(&hl);
            l1 == p.lcm || l2 == p.lcm
        });
        self.pairs.extend(new_pairs);

        for g in active {
            if hl.divides(self.store[g].lead()) {
                self.active[g] = false;
            }
        }
        self.active[k] = true;
    }

    fn spoly(&self, p: &Pair) -> IPoly {
        spoly_of(&self.store[p.i], &self.store[p.j], self.order)
    }

    pub fn run(&mut self, gens: Vec<IPoly>) {
        for g in gens {
            if g.is_zero() {
                continue;
            }
            let (h, _) = reduce(&g, &self.reducers(), self.order);
            if !h.is_zero() {
                self.update(h);
            }
        }
        while !self.pairs.is_empty() {
            let k = select(&self.pairs, self.order);
            let p = self.pairs.swap_remove(k);
            let s = self.spoly(&p);
            self.stats.pairs_reduced += 1;
            let (h, _) = reduce(&s, &self.reducers(), self.order);
            if h.is_zero() {
                self.stats.zero_reductions += 1;
            } else {
                self.update(h);
            }
        }
    }

    /// Reduced basis, sorted by increasing leading monomial, primitive integer form.
    pub fn reduced_basis(self) -> Vec<IPoly> {
        let order = self.order;
        let mut g: Vec<IPoly> = self.store.into_iter().zip(self.active).filter(|(_, a)| *a).map(|(p, _)| p).collect();
        g.sort_by(|a, b| order.cmp(a.lead(), b.lead()));
        let mut out = Vec::with_capacity(g.len());
        for k in 0..g.len() {
            let others: Vec<&IPoly> = g.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, p)| p).collect();
            let red = Reducers::new(others);
            let head = IPoly { terms: vec![g[k].terms[0].clone()] };
            let tail = IPoly { terms: g[k].terms[1..].to_vec() };
            let (r, s) = reduce(&tail, &red, order);
            // g = head + tail ~ head + r / s
            let num = s.numer().clone();
            let den = s.denom().clone();
            let mut terms = vec![(head.terms[0].0.clone(), &head.terms[0].1 * &num)];
            terms.extend(r.terms.into_iter().map(|(m, c)| (m, c * &den)));
            let mut p = IPoly { terms };
            p.make_primitive();
            out.push(p);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn poly(n: usize, terms: &[(&[u16], i64)]) -> MultiPoly {
        MultiPoly::from_terms(n, terms.iter().map(|(e, c)| (Monomial::from_exponents(e), rat(*c))))
    }

    #[test]
    fn sub_mul_cancels() {
        let o = MonomialOrder::Grevlex;
        let f = IPoly::from_multipoly(&poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]), &o);
        let r = sub_mul(&f.terms, &BigInt::one(), &f.terms, &Monomial::one(2), &BigInt::one(), &o);
        assert!(r.is_empty());
    }

    #[test]
    fn twisted_cubic() {
        // (y^2 - x z, x y - z w?) use the classical x^2-y, x y - z ideal in grevlex
        let o = MonomialOrder::Grevlex;
        let gens = vec![
            IPoly::from_multipoly(&poly(3, &[(&[2, 0, 0], 1), (&[0, 1, 0], -1)]), &o),
            IPoly::from_multipoly(&poly(3, &[(&[1, 1, 0], 1), (&[0, 0, 1], -1)]), &o),
        ];
        let mut e = Engine::new(&o);
        e.run(gens);
        let g = e.reduced_basis();
        // every pair reduces to zero
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                let lcm = g[i].lead().lcm(g[j].lead());
                let p = Pair { i, j, deg: lcm.degree(), lcm };
                let eng = Engine {
                    order: &o,
                    store: g.clone(),
                    active: vec![true; g.len()],
                    pairs: vec![],
                    stats: Default::default(),
                };
                let s = eng.spoly(&p);
                let (r, _) = reduce(&s, &eng.reducers(), &o);
                assert!(r.is_zero());
            }
        }
        assert_eq!(g.len(), 3);
    }
}
