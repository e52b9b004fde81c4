use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde_json::{Map, Value};

use crate::arrgmt::Arrangement;
use crate::error::{Error, Result};
use crate::exactalg::{IntBiPoly, TruncatedRing};
use crate::groebner::HilbertSeries;

/// A homogeneous element of `Z[h,k]/(h^l, k^n)`, stored reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChowClass {
    ring: TruncatedRing,
    degree: u32,
    poly: IntBiPoly,
}

impl ChowClass {
    pub fn new(ring: TruncatedRing, degree: u32, poly: &IntBiPoly) -> Result<Self> {
        if let Some((&(i, j), _)) = poly.terms().find(|(&(i, j), _)| i + j != degree) {
            return Err(Error::Precondition(format!("term h^{i} k^{j} has degree {}, expected {degree}", i + j)));
        }
        Ok(ChowClass { ring, degree, poly: ring.reduce(poly) })
    }

    pub fn zero(ring: TruncatedRing, degree: u32) -> Self {
        ChowClass { ring, degree, poly: IntBiPoly::zero() }
    }

    pub fn ring(&self) -> TruncatedRing {
        self.ring
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn poly(&self) -> &IntBiPoly {
        &self.poly
    }

    /// Coefficient of `h^i k^j`.
    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.poly.coeff(i, j)
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Product with a homogeneous polynomial in `h, k`.
    pub fn mul(&self, p: &IntBiPoly) -> Result<Self> {
        let d = p.total_degree().unwrap_or(0);
        let prod = self.ring.mul(&self.poly, p);
        ChowClass::new(self.ring, self.degree + d, &prod)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        ChowClass { ring: self.ring, degree: self.degree, poly: self.poly.scale(c) }
    }

    /// The same coefficient table read in another truncation.
    pub fn lift(&self, ring: TruncatedRing) -> Self {
        ChowClass { ring, degree: self.degree, poly: ring.reduce(&self.poly) }
    }

    pub fn display(&self) -> String {
        self.poly.display("h", "k")
    }

    /// `{"i,j": c}` for the coefficient of `h^i k^j`.
    pub fn to_json_value(&self) -> Value {
        coefficient_table(&self.poly)
    }
}

/// Coefficient table `{"i,j": c}` with integer values where they fit.
pub fn coefficient_table(p: &IntBiPoly) -> Value {
    let mut map = Map::new();
    for (&(i, j), c) in p.terms() {
        let v = match c.to_i64() {
            Some(x) => Value::from(x),
            None => Value::from(c.to_string()),
        };
        map.insert(format!("{i},{j}"), v);
    }
    Value::Object(map)
}

/// `K(1-h, 1-k)` restricted to degree `c`, before truncation. Fails when a
/// lower-degree part survives.
pub fn multidegree_raw(hs: &HilbertSeries, c: u32) -> Result<IntBiPoly> {
    let one = IntBiPoly::one();
    let sub = hs.k.compose(&(&one - &IntBiPoly::x()), &(&one - &IntBiPoly::y()));
    for d in 0..c {
        if !sub.homogeneous_part(d).is_zero() {
            return Err(Error::CodimensionMismatch { degree: d, codim: c });
        }
    }
    Ok(sub.homogeneous_part(c))
}

/// The multidegree of `S/I` in codimension `c`, in `Z[h,k]/(h^m, k^n)`.
pub fn multidegree(hs: &HilbertSeries, c: u32) -> Result<ChowClass> {
    let raw = multidegree_raw(hs, c)?;
    ChowClass::new(TruncatedRing::new(hs.m, hs.n), c, &raw)
}

/// `sum_i t_{i0} h^(l-i) k^i` in `Z[h,k]/(h^l, k^n)` for an essential arrangement.
pub fn class_from_tutte(a: &Arrangement) -> ChowClass {
    let l = a.rank() as u32;
    let ring = TruncatedRing::new(l, a.n() as u32);
    ChowClass::new(ring, l, &a.homog_char()).expect("homog_char is homogeneous of degree l")
}

/// `chi-hom(A, -h, k-h)` expanded directly from `chi`, in the same ring.
pub fn class_from_chi(a: &Arrangement) -> ChowClass {
    let l = a.rank() as u32;
    let ring = TruncatedRing::new(l, a.n() as u32);
    ChowClass::new(ring, l, &a.homog_char_direct()).expect("homogeneous of degree l")
}

/// `chi-hom(A, h, h-k)`, untruncated.
pub fn chi_hom_at(a: &Arrangement, s: &IntBiPoly, t: &IntBiPoly) -> IntBiPoly {
    let chi = a.char_poly();
    let l = a.rank() as u32;
    let mut hom = IntBiPoly::zero();
    for (&(k, _), c) in chi.terms() {
        hom.add_term(l - k, k, c.clone());
    }
    hom.compose(s, t)
}

/// The coefficient of `h^(l-1) k` in a class of degree `l`.
pub fn beta_intersection(cls: &ChowClass) -> BigInt {
    let l = cls.degree();
    if l == 0 {
        return BigInt::zero();
    }
    cls.coeff(l - 1, 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_lines_multidegree() {
        // K = (1-u)(1-tu) over (1-t)^2 (1-u)^3
        let u = IntBiPoly::y();
        let t = IntBiPoly::x();
        let one = IntBiPoly::one();
        let k = &(&one - &u) * &(&one - &(&t * &u));
        let hs = HilbertSeries { m: 2, n: 3, k };
        let cls = multidegree(&hs, 2).unwrap();
        assert_eq!(cls.display(), "h*k + k^2");
        assert_eq!(beta_intersection(&cls), BigInt::from(1));
        assert!(matches!(multidegree(&hs, 3), Err(Error::CodimensionMismatch { degree: 2, codim: 3 })));
    }

    #[test]
    fn boolean_class_vanishes() {
        let one = IntBiPoly::one();
        let k = (&one - &IntBiPoly::y()).pow(3);
        let hs = HilbertSeries { m: 3, n: 3, k };
        assert_eq!(multidegree_raw(&hs, 3).unwrap(), IntBiPoly::monomial(0, 3, BigInt::from(1)));
        assert!(multidegree(&hs, 3).unwrap().is_zero());
    }

    #[test]
    fn products_and_lifts() {
        let r = TruncatedRing::new(2, 3);
        let c = ChowClass::new(r, 2, &IntBiPoly::from_terms([((1, 1), 1.into()), ((0, 2), 1.into())])).unwrap();
        let kc = c.mul(&IntBiPoly::y()).unwrap();
        assert_eq!(kc.display(), "h*k^2");
        let big = c.lift(TruncatedRing::new(3, 4)).mul(&IntBiPoly::y()).unwrap();
        assert_eq!(big.display(), "h*k^2 + k^3");
        assert!(ChowClass::new(r, 2, &IntBiPoly::x()).is_err());
    }
}
