use num_traits::Zero;
use serde_json::{json, Value};

use super::{normalize_first, Arrangement};
use crate::error::Result;
use crate::exactalg::{format_rational, Rational, RationalMatrix};

/// Deletion, restriction and multirestriction at one hyperplane `H = H_index`.
#[derive(Clone, Debug)]
pub struct DeletionRestrictionTriple {
    pub index: usize,
    /// `A'`, the arrangement without `H`.
    pub deletion: Arrangement,
    /// `A''`, the distinct hyperplanes induced on `H`, in coordinates `y` with `x = B y`.
    pub restriction: Arrangement,
    /// Restricted forms of `A'` in `A'` order, with repetitions.
    pub multirestriction: Vec<Vec<Rational>>,
    /// `sigma[k]` is the `A''` hyperplane that `A'` hyperplane `k` restricts to.
    pub sigma: Vec<usize>,
    /// `iota[k]` is the index in `A` of `A'` hyperplane `k`.
    pub iota: Vec<usize>,
    /// The `m x (m-1)` matrix `B` whose columns span `H`.
    pub basis: RationalMatrix,
}

impl DeletionRestrictionTriple {
    pub fn to_json_value(&self) -> Value {
        let multi: Vec<Vec<String>> =
            self.multirestriction.iter().map(|r| r.iter().map(format_rational).collect()).collect();
        json!({
            "index": self.index,
            "deletion": self.deletion.to_json_value(),
            "restriction": self.restriction.to_json_value(),
            "multirestriction": multi,
            "sigma": self.sigma,
            "iota": self.iota,
        })
    }
}

impl Arrangement {
    /// The sub-family on the given rows (in the given order).
    pub fn subarrangement(&self, rows: &[usize], name: impl Into<String>) -> Arrangement {
        let r = rows.iter().map(|&i| self.row(i).to_vec()).collect();
        let labels = rows.iter().map(|&i| self.labels()[i].clone()).collect();
        Arrangement::new(name, self.dim(), r, Some(labels)).expect("sub-family of a valid arrangement")
    }

    /// `A'`: the arrangement with hyperplane `i` removed.
    pub fn delete(&self, i: usize) -> Result<Arrangement> {
        self.check_index(i)?;
        let keep: Vec<usize> = (0..self.n()).filter(|&j| j != i).collect();
        Ok(self.subarrangement(&keep, format!("{}\\{}", self.name(), self.labels()[i])))
    }

    /// Deletion, restriction and multirestriction at hyperplane `i`.
    pub fn restrict(&self, i: usize) -> Result<DeletionRestrictionTriple> {
        self.check_index(i)?;
        let m = self.dim();
        let deletion = self.delete(i)?;
        let iota: Vec<usize> = (0..self.n()).filter(|&j| j != i).collect();
        let kernel = RationalMatrix::from_rows(m, vec![self.row(i).to_vec()]).kernel_basis();
        let basis = RationalMatrix::from_rows(m - 1, {
            (0..m).map(|r| kernel.iter().map(|v| v[r].clone()).collect()).collect()
        });
        let mut multirestriction = Vec::with_capacity(iota.len());
        let mut sigma = Vec::with_capacity(iota.len());
        let mut distinct: Vec<Vec<Rational>> = Vec::new();
        let mut normalized: Vec<Vec<Rational>> = Vec::new();
        let mut labels = Vec::new();
        for &j in &iota {
            let f = self.row(j);
            let g: Vec<Rational> =
                kernel.iter().map(|b| f.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)).collect();
            let key = normalize_first(&g);
            let k = match normalized.iter().position(|n| *n == key) {
                Some(k) => k,
                None => {
                    normalized.push(key);
                    distinct.push(g.clone());
                    labels.push(self.labels()[j].clone());
                    distinct.len() - 1
                }
            };
            sigma.push(k);
            multirestriction.push(g);
        }
        let restriction =
            Arrangement::new(format!("{}/{}", self.name(), self.labels()[i]), m - 1, distinct, Some(labels))?;
        Ok(DeletionRestrictionTriple { index: i, deletion, restriction, multirestriction, sigma, iota, basis })
    }

    /// Whether deleting hyperplane `i` lowers the rank.
    pub fn is_bridge(&self, i: usize) -> Result<bool> {
        Ok(self.delete(i)?.rank() < self.rank())
    }

    pub fn bridges(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.is_bridge(i).unwrap_or(false)).collect()
    }

    /// Checks the deletion-restriction recurrence for `chi` at hyperplane `i`.
    pub fn delres_check_at(&self, i: usize) -> Result<bool> {
        let chi = self.char_poly();
        let tr = self.restrict(i)?;
        let chi1 = tr.deletion.char_poly();
        if self.is_bridge(i)? {
            let t_minus_1 = &crate::exactalg::IntBiPoly::x() - &crate::exactalg::IntBiPoly::one();
            Ok(chi == &t_minus_1 * &chi1)
        } else {
            Ok(chi == &chi1 - &tr.restriction.char_poly())
        }
    }

    /// The recurrence at every hyperplane.
    pub fn delres_check(&self) -> bool {
        (0..self.n()).all(|i| self.delres_check_at(i).unwrap_or(false))
    }

    /// Projects to `V / W` with `W` the common intersection; the result has
    /// ambient dimension equal to the rank and an isomorphic lattice.
    pub fn essentialize(&self) -> Arrangement {
        if self.is_essential() {
            return self.clone();
        }
        let pivots = self.matrix().rref().pivots;
        let rows = (0..self.n()).map(|i| pivots.iter().map(|&c| self.row(i)[c].clone()).collect()).collect();
        Arrangement::new(self.name(), self.rank(), rows, Some(self.labels().to_vec()))
            .expect("projection keeps hyperplanes distinct")
    }

    /// Index sets of the connected components of the underlying matroid,
    /// ordered by smallest element.
    pub fn decompose_indices(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut comp: Vec<usize> = (0..n).collect();
        fn find(c: &mut [usize], i: usize) -> usize {
            let mut r = i;
            while c[r] != r {
                r = c[r];
            }
            c[i] = r;
            r
        }
        let mut basis: Vec<usize> = Vec::new();
        for e in 0..n {
            let mut with = basis.clone();
            with.push(e);
            if self.rank_of(&with) > basis.len() {
                basis.push(e);
                continue;
            }
            // the unique dependency among basis + e is the fundamental circuit of e
            let rows: Vec<Vec<Rational>> = with.iter().map(|&i| self.row(i).to_vec()).collect();
            let t = RationalMatrix::from_rows(self.dim(), rows).transpose();
            let lam = t.kernel_basis().pop().expect("dependent set has a relation");
            for (k, &idx) in with.iter().enumerate() {
                if !lam[k].is_zero() {
                    let (a, b) = (find(&mut comp, idx), find(&mut comp, e));
                    comp[a] = b;
                }
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut root_of: Vec<(usize, usize)> = Vec::new();
        for i in 0..n {
            let r = find(&mut comp, i);
            match root_of.iter().find(|(rr, _)| *rr == r) {
                Some(&(_, g)) => groups[g].push(i),
                None => {
                    root_of.push((r, groups.len()));
                    groups.push(vec![i]);
                }
            }
        }
        groups
    }

    /// The irreducible summands, each essentialized.
    pub fn decompose(&self) -> Vec<Arrangement> {
        self.decompose_indices()
            .iter()
            .enumerate()
            .map(|(k, g)| self.subarrangement(g, format!("{}#{}", self.name(), k + 1)).essentialize())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_lines() -> Arrangement {
        Arrangement::from_int_rows("3lines", 2, &[&[1, 0], &[0, 1], &[1, -1]]).unwrap()
    }

    #[test]
    fn delete_and_restrict_three_lines() {
        let a = three_lines();
        let d = a.delete(2).unwrap();
        assert!(d.is_boolean() && d.rank() == 2);
        let tr = a.restrict(2).unwrap();
        assert_eq!(tr.restriction.n(), 1);
        assert_eq!(tr.restriction.dim(), 1);
        assert_eq!(tr.sigma, vec![0, 0]);
        assert_eq!(tr.iota, vec![0, 1]);
        assert!(a.delres_check());
    }

    #[test]
    fn bridges() {
        let a = Arrangement::boolean(2);
        assert!(a.is_bridge(1).unwrap());
        assert!(three_lines().bridges().is_empty());
        assert!(a.delete(5).is_err());
    }

    #[test]
    fn essentialize_examples() {
        let a = Arrangement::from_int_rows("x", 3, &[&[1, 0, 0]]).unwrap();
        let e = a.essentialize();
        assert_eq!(e.dim(), 1);
        assert_eq!(e.rows(), vec![vec![Rational::from_integer(1.into())]]);
        assert_eq!(three_lines().essentialize(), three_lines());
    }

    #[test]
    fn decomposition() {
        assert_eq!(Arrangement::boolean(3).decompose_indices(), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(three_lines().decompose_indices(), vec![vec![0, 1, 2]]);
        let b = Arrangement::from_int_rows("bridge", 3, &[&[1, 0, 0], &[0, 1, 0], &[1, -1, 0], &[0, 0, 1]]).unwrap();
        let parts = b.decompose();
        assert_eq!(parts.iter().map(|p| p.n()).collect::<Vec<_>>(), vec![3, 1]);
        assert!(parts.iter().all(|p| p.is_essential()));
    }
}
