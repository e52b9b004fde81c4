use num_bigint::BigInt;
use num_traits::Zero;

use super::{Arrangement, IntersectionLattice};
use crate::exactalg::{IntBiPoly, Rational, RationalMatrix};

impl Arrangement {
    pub fn lattice(&self) -> IntersectionLattice {
        IntersectionLattice::build(self)
    }

    /// `chi(A,t)` in the first variable, of degree equal to the rank.
    pub fn char_poly(&self) -> IntBiPoly {
        self.lattice().char_poly()
    }

    /// Tutte polynomial `T_A(x,y)` by deletion-contraction in index order.
    pub fn tutte(&self) -> IntBiPoly {
        let order: Vec<usize> = (0..self.n()).collect();
        self.tutte_with_order(&order)
    }

    /// Tutte polynomial along the given hyperplane order (a permutation of `0..n`).
    pub fn tutte_with_order(&self, order: &[usize]) -> IntBiPoly {
        let mut sorted = order.to_vec();
        sorted.sort_unstable();
        assert!(sorted == (0..self.n()).collect::<Vec<_>>(), "order must be a permutation");
        let vecs: Vec<Vec<Rational>> = order.iter().map(|&i| self.row(i).to_vec()).collect();
        tutte_of_rows(self.dim(), vecs)
    }

    /// `sum_i t_{i0} s^(l-i) t^i`, with `s` in the first slot and `t` in the second.
    pub fn homog_char(&self) -> IntBiPoly {
        homog_from_tutte(&self.tutte(), self.rank() as u32)
    }

    /// `chi-hom(A,-s,t-s)` computed directly from `chi(A,t)`.
    pub fn homog_char_direct(&self) -> IntBiPoly {
        let chi = self.char_poly();
        let l = self.rank() as u32;
        let mut hom = IntBiPoly::zero();
        for (&(k, _), c) in chi.terms() {
            hom.add_term(l - k, k, c.clone());
        }
        let s = IntBiPoly::x();
        let t = IntBiPoly::y();
        hom.compose(&-&s, &(&t - &s))
    }

    /// The beta invariant `t_{10}`.
    pub fn beta(&self) -> BigInt {
        self.tutte().coeff(1, 0)
    }
}

pub(crate) fn homog_from_tutte(t: &IntBiPoly, l: u32) -> IntBiPoly {
    let mut out = IntBiPoly::zero();
    for i in 1..=l {
        out.add_term(l - i, i, t.coeff(i, 0));
    }
    out
}

/// Tutte polynomial of the matroid of a list of vectors, deleting and
/// contracting the vectors in list order.
pub fn tutte_of_rows(dim: usize, vecs: Vec<Vec<Rational>>) -> IntBiPoly {
    if vecs.is_empty() {
        return IntBiPoly::one();
    }
    let e = vecs[0].clone();
    let rest: Vec<Vec<Rational>> = vecs[1..].to_vec();
    let Some(c) = e.iter().position(|v| !v.is_zero()) else {
        return &IntBiPoly::y() * &tutte_of_rows(dim, rest);
    };
    let contracted: Vec<Vec<Rational>> = rest
        .iter()
        .map(|u| {
            let s = &u[c] / &e[c];
            u.iter().zip(&e).map(|(a, b)| a - &s * b).collect()
        })
        .collect();
    if rank(dim, &rest) < rank(dim, &vecs) {
        &IntBiPoly::x() * &tutte_of_rows(dim, contracted)
    } else {
        &tutte_of_rows(dim, rest) + &tutte_of_rows(dim, contracted)
    }
}

fn rank(dim: usize, vecs: &[Vec<Rational>]) -> usize {
    if vecs.is_empty() {
        return 0;
    }
    RationalMatrix::from_rows(dim, vecs.to_vec()).rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(terms: &[((u32, u32), i64)]) -> IntBiPoly {
        IntBiPoly::from_terms(terms.iter().map(|&(k, c)| (k, BigInt::from(c))))
    }

    fn three_lines() -> Arrangement {
        Arrangement::from_int_rows("3lines", 2, &[&[1, 0], &[0, 1], &[1, -1]]).unwrap()
    }

    #[test]
    fn three_lines_polys() {
        let a = three_lines();
        assert_eq!(a.char_poly(), ip(&[((2, 0), 1), ((1, 0), -3), ((0, 0), 2)]));
        assert_eq!(a.tutte(), ip(&[((2, 0), 1), ((1, 0), 1), ((0, 1), 1)]));
        assert_eq!(a.homog_char(), ip(&[((1, 1), 1), ((0, 2), 1)]));
        assert_eq!(a.homog_char_direct(), a.homog_char());
        assert_eq!(a.beta(), BigInt::from(1));
        assert_eq!(a.char_poly().univariate_coeffs(), vec![2.into(), (-3).into(), 1.into()]);
    }

    #[test]
    fn single_hyperplane_and_boolean() {
        let a = Arrangement::from_int_rows("x", 1, &[&[1]]).unwrap();
        assert_eq!(a.tutte(), IntBiPoly::x());
        let b = Arrangement::boolean(3);
        assert_eq!(b.tutte(), IntBiPoly::x().pow(3));
        assert_eq!(b.homog_char(), IntBiPoly::y().pow(3));
        assert_eq!(b.beta(), BigInt::zero());
    }
}
