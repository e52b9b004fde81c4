use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::Arrangement;
use crate::exactalg::{format_rational, IntBiPoly, Rational, RationalMatrix};

/// An element of the intersection lattice, identified by the reduced
/// row-echelon basis of the span of its defining forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat {
    pub basis: Vec<Vec<Rational>>,
    pub rank: usize,
    /// Indices of the hyperplanes containing the flat.
    pub support: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct IntersectionLattice {
    flats: Vec<Flat>,
    /// `by_rank[r]` lists the indices of the rank-`r` flats.
    by_rank: Vec<Vec<usize>>,
    /// Pairs `(x, y)` with `y` covering `x`.
    covers: Vec<(usize, usize)>,
    mobius: Vec<BigInt>,
}

impl IntersectionLattice {
    pub fn build(a: &Arrangement) -> Self {
        let dim = a.dim();
        let mut flats = vec![Flat { basis: Vec::new(), rank: 0, support: Vec::new() }];
        let mut index: BTreeMap<Vec<Vec<Rational>>, usize> = BTreeMap::new();
        index.insert(Vec::new(), 0);
        let mut by_rank = vec![vec![0usize]];
        let mut covers = Vec::new();

        for r in 0..a.rank() {
            let mut next = Vec::new();
            for &x in &by_rank[r] {
                let sup = flats[x].support.clone();
                for h in 0..a.n() {
                    if sup.contains(&h) {
                        continue;
                    }
                    let mut rows = flats[x].basis.clone();
                    rows.push(a.row(h).to_vec());
                    let basis = RationalMatrix::from_rows(dim, rows).row_space_basis();
                    let y = match index.get(&basis) {
                        Some(&y) => y,
                        None => {
                            let support = (0..a.n()).filter(|&j| in_span(&basis, a.row(j), dim)).collect();
                            flats.push(Flat { basis: basis.clone(), rank: r + 1, support });
                            let y = flats.len() - 1;
                            index.insert(basis, y);
                            next.push(y);
                            y
                        }
                    };
                    if !covers.contains(&(x, y)) {
                        covers.push((x, y));
                    }
                }
            }
            next.sort_by(|&p, &q| flats[p].support.cmp(&flats[q].support));
            by_rank.push(next);
        }

        // renumber so flats are listed by rank, then by support
        let order: Vec<usize> = by_rank.iter().flatten().copied().collect();
        let mut new_id = vec![0; flats.len()];
        for (k, &old) in order.iter().enumerate() {
            new_id[old] = k;
        }
        let flats: Vec<Flat> = order.iter().map(|&i| flats[i].clone()).collect();
        let by_rank = by_rank.iter().map(|v| v.iter().map(|&i| new_id[i]).collect()).collect();
        let mut covers: Vec<(usize, usize)> = covers.iter().map(|&(x, y)| (new_id[x], new_id[y])).collect();
        covers.sort();

        let mut mobius: Vec<BigInt> = Vec::with_capacity(flats.len());
        for (x, fx) in flats.iter().enumerate() {
            if x == 0 {
                mobius.push(BigInt::one());
                continue;
            }
            let mut s = BigInt::zero();
            for (y, fy) in flats.iter().enumerate().take(x) {
                if fy.rank < fx.rank && is_subset(&fy.support, &fx.support) {
                    s += &mobius[y];
                }
            }
            mobius.push(-s);
        }
        IntersectionLattice { flats, by_rank, covers, mobius }
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.by_rank.len() - 1
    }

    pub fn flats_of_rank(&self, r: usize) -> &[usize] {
        &self.by_rank[r]
    }

    /// Number of flats of each rank.
    pub fn rank_sizes(&self) -> Vec<usize> {
        self.by_rank.iter().map(Vec::len).collect()
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// `mu(V, X)` for the flat with index `x`.
    pub fn mobius(&self, x: usize) -> &BigInt {
        &self.mobius[x]
    }

    /// Order relation `X <= Y` (reverse inclusion of subspaces).
    pub fn leq(&self, x: usize, y: usize) -> bool {
        is_subset(&self.flats[x].support, &self.flats[y].support)
    }

    /// Characteristic polynomial `sum mu(V,X) t^(l - rank X)` in the first variable.
    pub fn char_poly(&self) -> IntBiPoly {
        let l = self.rank() as u32;
        let mut p = IntBiPoly::zero();
        for (f, mu) in self.flats.iter().zip(&self.mobius) {
            p.add_term(l - f.rank as u32, 0, mu.clone());
        }
        p
    }

    pub fn to_json_value(&self) -> Value {
        let flats: Vec<Value> = self
            .flats
            .iter()
            .zip(&self.mobius)
            .enumerate()
            .map(|(i, (f, mu))| {
                let basis: Vec<Vec<String>> = f.basis.iter().map(|r| r.iter().map(format_rational).collect()).collect();
                json!({
                    "id": i,
                    "rank": f.rank,
                    "support": f.support,
                    "mobius": mu.to_string(),
                    "basis": basis,
                })
            })
            .collect();
        json!({ "flats": flats, "covers": self.covers })
    }
}

fn in_span(basis: &[Vec<Rational>], v: &[Rational], dim: usize) -> bool {
    let mut rows = basis.to_vec();
    rows.push(v.to_vec());
    RationalMatrix::from_rows(dim, rows).rank() == basis.len()
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}
