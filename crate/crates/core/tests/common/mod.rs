#![allow(dead_code)]

use logarr::arrgmt::Arrangement;
use logarr::exactalg::{rat, Monomial, MultiPoly, Rational, RationalMatrix};
use logarr::groebner::{GroebnerBasis, MonomialOrder};
use logarr::logideal::{log_ideal_auto, BigradedIdeal};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Keeps the rows that are nonzero and not proportional to an earlier row.
pub fn arrangement_from_rows(name: &str, dim: usize, rows: &[Vec<i64>]) -> Option<Arrangement> {
    let mut kept: Vec<Vec<Rational>> = Vec::new();
    for r in rows {
        let row: Vec<Rational> = r.iter().map(|&c| rat(c)).collect();
        if row.iter().all(Zero::is_zero) {
            continue;
        }
        let mut trial = kept.clone();
        trial.push(row);
        if Arrangement::new(name, dim, trial.clone(), None).is_ok() {
            kept = trial;
        }
    }
    if kept.len() < 2 {
        return None;
    }
    Arrangement::new(name, dim, kept, None).ok()
}

/// Small central arrangements in dimension 2 or 3 with integer entries.
pub fn arrangement_strategy(max_n: usize) -> impl Strategy<Value = Arrangement> {
    (2usize..=3)
        .prop_flat_map(move |m| (Just(m), prop::collection::vec(prop::collection::vec(-3i64..=3, m), 2..=max_n)))
        .prop_filter_map("degenerate rows", |(m, rows)| arrangement_from_rows("random", m, &rows))
}

/// A non-essential arrangement `g ∘ P` together with the arrangement `g`.
pub fn embedded_strategy() -> impl Strategy<Value = (Arrangement, Arrangement)> {
    (arrangement_strategy(5), 1usize..=2, prop::collection::vec(-2i64..=2, 15)).prop_filter_map(
        "projection not surjective",
        |(g, extra, entries)| {
            let r = g.dim();
            let m = r + extra;
            let p = RationalMatrix::from_rows(
                m,
                (0..r).map(|i| (0..m).map(|j| rat(entries[i * m + j])).collect()).collect(),
            );
            if p.rank() < r {
                return None;
            }
            let rows: Vec<Vec<Rational>> = g
                .rows()
                .iter()
                .map(|row| (0..m).map(|j| (0..r).fold(rat(0), |acc, i| acc + &row[i] * p.get(i, j))).collect())
                .collect();
            let f = Arrangement::new("embedded", m, rows, None).ok()?;
            Some((f, g))
        },
    )
}

/// Ideals of a few short polynomials in three variables.
pub fn ideal_strategy() -> impl Strategy<Value = Vec<MultiPoly>> {
    let term = (prop::collection::vec(0u16..=2, 3), -3i64..=3);
    let poly = prop::collection::vec(term, 1..=3)
        .prop_map(|ts| MultiPoly::from_terms(3, ts.into_iter().map(|(e, c)| (Monomial::from_exponents(&e), rat(c)))));
    prop::collection::vec(poly, 1..=3).prop_filter("zero ideal", |gs| gs.iter().any(|g| !g.is_zero()))
}

pub fn prop_spairs_reduce(gens: &[MultiPoly]) -> Result<(), String> {
    let gb = GroebnerBasis::compute(3, gens, MonomialOrder::Grevlex);
    if !gb.spairs_reduce_to_zero() {
        return Err("an S-pair has a nonzero remainder".into());
    }
    if let Some(g) = gens.iter().find(|g| !gb.contains(g)) {
        return Err(format!("generator {g:?} is not in the ideal of its basis"));
    }
    Ok(())
}

pub fn prop_hs_permutation(a: &Arrangement, seed: u64) -> Result<(), String> {
    let ideal = log_ideal_auto(a, a.n() as u32).map_err(|e| e.to_string())?;
    let mut gens = ideal.generators().to_vec();
    gens.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let shuffled = BigradedIdeal::new(ideal.nx(), ideal.na(), gens).map_err(|e| e.to_string())?;
    if ideal.hilbert_series() != shuffled.hilbert_series() {
        return Err("Hilbert series depends on generator order".into());
    }
    Ok(())
}

pub fn prop_mobius_sum(a: &Arrangement) -> Result<(), String> {
    let lat = a.lattice();
    for x in 0..lat.len() {
        let s: BigInt = (0..lat.len()).filter(|&y| lat.leq(y, x)).map(|y| lat.mobius(y).clone()).sum();
        let want = if lat.flats()[x].rank == 0 { BigInt::from(1) } else { BigInt::zero() };
        if s != want {
            return Err(format!("sum of mu below flat {x} is {s}"));
        }
    }
    Ok(())
}

pub fn prop_tutte_order(a: &Arrangement, seed: u64) -> Result<(), String> {
    let mut order: Vec<usize> = (0..a.n()).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    if a.tutte_with_order(&order) != a.tutte() {
        return Err(format!("Tutte polynomial changes under order {order:?}"));
    }
    Ok(())
}

fn supports(a: &Arrangement) -> Vec<(usize, Vec<usize>)> {
    let mut s: Vec<(usize, Vec<usize>)> = a.lattice().flats().iter().map(|f| (f.rank, f.support.clone())).collect();
    s.sort();
    s
}

pub fn prop_essentialization(f: &Arrangement, g: &Arrangement) -> Result<(), String> {
    let e = f.essentialize();
    if !e.is_essential() || e.dim() != g.rank() {
        return Err("essentialization is not essential".into());
    }
    if supports(&e) != supports(f) || supports(f) != supports(g) {
        return Err("flats differ after essentializing".into());
    }
    if e.char_poly() != f.char_poly() || e.tutte() != g.tutte() {
        return Err("polynomials differ after essentializing".into());
    }
    Ok(())
}

/// `T(x,y) = sum over subsets (x-1)^(r - r(S)) (y-1)^(|S| - r(S))`.
pub fn tutte_by_subsets(a: &Arrangement) -> logarr::exactalg::IntBiPoly {
    use logarr::exactalg::IntBiPoly;
    let n = a.n();
    let r = a.rank();
    let xm1 = &IntBiPoly::x() - &IntBiPoly::one();
    let ym1 = &IntBiPoly::y() - &IntBiPoly::one();
    let mut t = IntBiPoly::zero();
    for mask in 0u32..(1 << n) {
        let s: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let rs = a.rank_of(&s);
        t = &t + &(&xm1.pow((r - rs) as u32) * &ym1.pow((s.len() - rs) as u32));
    }
    t
}

/// `chi(t) = sum over subsets (-1)^|S| t^(r - r(S))`.
pub fn chi_by_subsets(a: &Arrangement) -> logarr::exactalg::IntBiPoly {
    let n = a.n();
    let r = a.rank();
    let mut chi = logarr::exactalg::IntBiPoly::zero();
    for mask in 0u32..(1 << n) {
        let s: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let sign = if s.len().is_multiple_of(2) { 1 } else { -1 };
        chi.add_term((r - a.rank_of(&s)) as u32, 0, BigInt::from(sign));
    }
    chi
}
