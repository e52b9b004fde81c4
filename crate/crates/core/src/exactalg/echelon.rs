use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use num_traits::{One, Zero};

use super::rational::Rational;

/// Incrementally built echelon basis of a span of sparse vectors. Each stored
/// row has a distinct pivot (its largest key) with coefficient one.
#[derive(Clone, Debug, Default)]
pub struct SparseEchelon<K: Ord + Hash + Clone> {
    rows: HashMap<K, BTreeMap<K, Rational>>,
}

impl<K: Ord + Hash + Clone> SparseEchelon<K> {
    pub fn new() -> Self {
        SparseEchelon { rows: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows; inserts the remainder if nonzero.
    /// Returns whether the rank grew.
    pub fn insert(&mut self, mut v: BTreeMap<K, Rational>) -> bool {
        v.retain(|_, c| !c.is_zero());
        while let Some((lead, c)) = v.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) {
            match self.rows.get(&lead) {
                Some(row) => {
                    for (k, r) in row {
                        let e = v.entry(k.clone()).or_insert_with(Rational::zero);
                        *e -= &c * r;
                        if e.is_zero() {
                            v.remove(k);
                        }
                    }
                }
                None => {
                    if !c.is_one() {
                        let inv = Rational::one() / &c;
                        for x in v.values_mut() {
                            *x *= &inv;
                        }
                    }
                    self.rows.insert(lead, v);
                    return true;
                }
            }
        }
        false
    }

    /// Whether `v` lies in the span.
    pub fn contains(&self, v: &BTreeMap<K, Rational>) -> bool {
        let mut probe = self.clone();
        !probe.insert(v.clone())
    }
}

impl SparseEchelon<usize> {
    /// Basis of the null space of the stored rows in `k^width`, one vector per
    /// non-pivot column, in increasing column order.
    pub fn kernel_basis(&self, width: usize) -> Vec<Vec<Rational>> {
        let mut pivots: Vec<usize> = self.rows.keys().copied().collect();
        pivots.sort_unstable();
        // back-substitute so that no row mentions another row's pivot
        let mut reduced: BTreeMap<usize, BTreeMap<usize, Rational>> = BTreeMap::new();
        for &p in &pivots {
            let mut row = self.rows[&p].clone();
            let others: Vec<usize> = row.keys().copied().filter(|k| *k != p && reduced.contains_key(k)).collect();
            for k in others {
                let c = match row.get(&k) {
                    Some(c) => c.clone(),
                    None => continue,
                };
                for (j, r) in &reduced[&k] {
                    let e = row.entry(*j).or_insert_with(Rational::zero);
                    *e -= &c * r;
                    if e.is_zero() {
                        row.remove(j);
                    }
                }
            }
            reduced.insert(p, row);
        }
        let mut out = Vec::new();
        for free in 0..width {
            if reduced.contains_key(&free) {
                continue;
            }
            let mut v = vec![Rational::zero(); width];
            v[free] = Rational::one();
            for (&p, row) in &reduced {
                if let Some(c) = row.get(&free) {
                    v[p] = -c.clone();
                }
            }
            out.push(v);
        }
        out
    }
}

/// Dense vector to sparse map keyed by position.
pub fn sparse_from_dense(v: &[Rational]) -> BTreeMap<usize, Rational> {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}
