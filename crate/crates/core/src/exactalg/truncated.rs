use num_bigint::BigInt;
use serde::Serialize;

use super::bipoly::IntBiPoly;

/// The quotient `Z[h,k]/(h^p, k^q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TruncatedRing {
    pub h_bound: u32,
    pub k_bound: u32,
}

impl TruncatedRing {
    pub fn new(h_bound: u32, k_bound: u32) -> Self {
        TruncatedRing { h_bound, k_bound }
    }

    /// Drops every monomial with `h`-exponent `>= h_bound` or `k`-exponent `>= k_bound`.
    pub fn reduce(&self, p: &IntBiPoly) -> IntBiPoly {
        IntBiPoly::from_terms(
            p.terms().filter(|(k, _)| k.0 < self.h_bound && k.1 < self.k_bound).map(|(k, c)| (*k, c.clone())),
        )
    }

    pub fn mul(&self, a: &IntBiPoly, b: &IntBiPoly) -> IntBiPoly {
        let mut out = IntBiPoly::zero();
        for (&(i1, j1), c1) in a.terms() {
            for (&(i2, j2), c2) in b.terms() {
                let (i, j) = (i1 + i2, j1 + j2);
                if i < self.h_bound && j < self.k_bound {
                    out.add_term(i, j, c1 * c2);
                }
            }
        }
        out
    }

    pub fn h(&self) -> IntBiPoly {
        self.reduce(&IntBiPoly::x())
    }

    pub fn k(&self) -> IntBiPoly {
        self.reduce(&IntBiPoly::y())
    }

    pub fn scalar(&self, c: BigInt) -> IntBiPoly {
        self.reduce(&IntBiPoly::constant(c))
    }
}
