//! The logarithmic ideal `I(A)` in `S = k[x_1..x_m] ⊗ k[a_1..a_n]`.

use serde_json::{json, Value};

use crate::arrgmt::Arrangement;
use crate::error::{Error, Result};
use crate::exactalg::{bigraded_names, MultiPoly, Rational};
use crate::groebner::{self, GroebnerBasis, HilbertSeries};
use crate::logder::Derivation;

/// An ideal of `S` given by generators; the first `nx` variables have degree
/// `(1,0)` and the remaining `na` have degree `(0,1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigradedIdeal {
    nx: usize,
    na: usize,
    gens: Vec<MultiPoly>,
}

impl BigradedIdeal {
    pub fn new(nx: usize, na: usize, gens: Vec<MultiPoly>) -> Result<Self> {
        for (i, g) in gens.iter().enumerate() {
            if g.nvars() != nx + na {
                return Err(Error::Precondition(format!(
                    "generator {} lives in {} variables, expected {}",
                    i + 1,
                    g.nvars(),
                    nx + na
                )));
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(BigradedIdeal { nx, na, gens })
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn na(&self) -> usize {
        self.na
    }

    pub fn nvars(&self) -> usize {
        self.nx + self.na
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.gens
    }

    pub fn names(&self) -> Vec<String> {
        bigraded_names(self.nx, self.na)
    }

    /// Bidegrees of the generators (`None` for non-bihomogeneous ones).
    pub fn bidegrees(&self) -> Vec<Option<(u32, u32)>> {
        self.gens.iter().map(|g| g.bidegree(self.nx)).collect()
    }

    pub fn is_bihomogeneous(&self) -> bool {
        self.bidegrees().iter().all(Option::is_some)
    }

    pub fn with_generators(&self, extra: impl IntoIterator<Item = MultiPoly>) -> Self {
        let mut gens = self.gens.clone();
        gens.extend(extra.into_iter().filter(|g| !g.is_zero()));
        BigradedIdeal { nx: self.nx, na: self.na, gens }
    }

    /// The variable `a_i` as an element of `S`.
    pub fn a_var(&self, i: usize) -> MultiPoly {
        MultiPoly::var(self.nvars(), self.nx + i)
    }

    pub fn groebner(&self) -> GroebnerBasis {
        groebner::buchberger(self)
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        groebner::hilbert_series(self)
    }

    pub fn contains(&self, f: &MultiPoly) -> bool {
        self.groebner().contains(f)
    }

    /// Equality of ideals by comparing reduced Gröbner bases.
    pub fn same_ideal(&self, other: &BigradedIdeal) -> bool {
        self.nvars() == other.nvars() && self.groebner().basis() == other.groebner().basis()
    }

    pub fn intersect(&self, other: &BigradedIdeal) -> BigradedIdeal {
        let gens = groebner::intersect(self.nvars(), &self.gens, &other.gens);
        BigradedIdeal { nx: self.nx, na: self.na, gens }
    }

    /// Eliminates the given variables (by index in `S`).
    pub fn eliminate(&self, vars: &[usize]) -> BigradedIdeal {
        let gens = groebner::eliminate(self.nvars(), &self.gens, vars);
        BigradedIdeal { nx: self.nx, na: self.na, gens }
    }

    pub fn saturate(&self, g: &MultiPoly) -> BigradedIdeal {
        let gens = groebner::saturate(self.nvars(), &self.gens, g);
        BigradedIdeal { nx: self.nx, na: self.na, gens }
    }

    /// Whether `g` vanishes on the zero set of the ideal.
    pub fn radical_member(&self, g: &MultiPoly) -> bool {
        groebner::radical_member(self.nvars(), g, &self.gens)
    }

    pub fn to_json_value(&self) -> Value {
        let names = self.names();
        let gens: Vec<Value> = self
            .gens
            .iter()
            .map(|g| {
                json!({
                    "polynomial": g,
                    "display": g.to_string_with(&names),
                    "bidegree": g.bidegree(self.nx).map(|(a, b)| vec![a, b]),
                })
            })
            .collect();
        json!({ "nx": self.nx, "na": self.na, "generators": gens })
    }
}

/// `<theta, omega_a> = sum_i a_i theta(f_i) / f_i`, with every division exact.
pub fn contract(theta: &Derivation, a: &Arrangement) -> Result<MultiPoly> {
    let m = a.dim();
    let n = a.n();
    if theta.dim() != m || theta.p() != 1 {
        return Err(Error::Precondition("contraction needs a 1-derivation on the ambient space".into()));
    }
    let nv = m + n;
    let mut out = MultiPoly::zero(nv);
    for i in 0..n {
        let f = a.form(i, m);
        let q = theta
            .apply(&f)
            .div_exact(&f)
            .ok_or_else(|| Error::ContractViolation(format!("theta(f_{}) is not divisible by f_{}", i + 1, i + 1)))?;
        let ai = MultiPoly::var(nv, m + i);
        out = &out + &(&q.resized(nv) * &ai);
    }
    Ok(out)
}

/// `I(A)` generated by the contractions of the given derivations.
pub fn log_ideal(a: &Arrangement, gens: &[Derivation]) -> Result<BigradedIdeal> {
    let polys = gens.iter().map(|t| contract(t, a)).collect::<Result<Vec<_>>>()?;
    BigradedIdeal::new(a.dim(), a.n(), polys)
}

/// `I(A)` from the module generators of `D(A)` up to degree `dmax`.
pub fn log_ideal_auto(a: &Arrangement, dmax: u32) -> Result<BigradedIdeal> {
    let gens = crate::logder::dp_generators(a, 1, dmax)?;
    log_ideal(a, &gens.generators)
}

/// `sum_i a_i`, the contraction of the Euler derivation.
pub fn euler_generator(a: &Arrangement) -> MultiPoly {
    let nv = a.dim() + a.n();
    MultiPoly::linear(
        nv,
        &(0..nv)
            .map(|i| if i < a.dim() { Rational::from_integer(0.into()) } else { Rational::from_integer(1.into()) })
            .collect::<Vec<_>>(),
    )
}
