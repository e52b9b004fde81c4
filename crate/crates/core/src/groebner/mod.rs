//! Reduced Gröbner bases over the rationals, Hilbert series of bigraded
//! quotients, elimination and radical membership.

mod engine;
mod hilbert;
mod ops;
mod oracle;
mod order;

pub use engine::EngineStats;
pub use hilbert::{monomial_k_polynomial, HilbertSeries};
pub use ops::{eliminate, intersect, radical_member, saturate};
pub use oracle::{hilbert_function_oracle, ORACLE_MAX_COLUMNS};
pub use order::MonomialOrder;

use serde_json::{json, Value};

use crate::exactalg::{Monomial, MultiPoly, Rational};
use crate::logideal::BigradedIdeal;
use engine::{reduce, Engine, IPoly, Reducers};

/// A reduced Gröbner basis: monic, sorted by increasing leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    nvars: usize,
    order: MonomialOrder,
    polys: Vec<MultiPoly>,
    ipolys: Vec<IPoly>,
    stats: EngineStats,
}

impl GroebnerBasis {
    /// Runs Buchberger's algorithm on the given generators.
    pub fn compute(nvars: usize, gens: &[MultiPoly], order: MonomialOrder) -> Self {
        let inputs: Vec<IPoly> = gens
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| {
                assert_eq!(g.nvars(), nvars, "generator in the wrong ring");
                IPoly::from_multipoly(g, &order)
            })
            .collect();
        let mut e = Engine::new(&order);
        e.run(inputs);
        let stats = e.stats.clone();
        let ipolys = e.reduced_basis();
        let polys = ipolys.iter().map(|p| p.to_multipoly(nvars)).collect();
        GroebnerBasis { nvars, order, polys, ipolys, stats }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn basis(&self) -> &[MultiPoly] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn stats(&self) -> &EngineStats {
        &self.stats
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.ipolys.iter().map(|p| p.lead().clone()).collect()
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.ipolys.iter().any(|p| p.lead().is_one())
    }

    /// The unique remainder of `f` on division by the basis.
    pub fn normal_form(&self, f: &MultiPoly) -> MultiPoly {
        if f.is_zero() {
            return f.clone();
        }
        // `content` is a rational multiple of f
        let content = IPoly::from_multipoly(f, &self.order);
        let ratio = f.coeff(content.lead()) / Rational::from_integer(content.lc().clone());
        let red = Reducers::new(self.ipolys.iter().collect());
        let (r, s) = reduce(&content, &red, &self.order);
        // s * content = r  (mod I), so f = ratio * content = ratio * r / s
        let factor = ratio / s;
        MultiPoly::from_terms(
            self.nvars,
            r.terms.iter().map(|(m, c)| (m.clone(), Rational::from_integer(c.clone()) * &factor)),
        )
    }

    pub fn contains(&self, f: &MultiPoly) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Checks that every S-polynomial of the basis reduces to zero.
    pub fn spairs_reduce_to_zero(&self) -> bool {
        let red = Reducers::new(self.ipolys.iter().collect());
        for i in 0..self.ipolys.len() {
            for j in i + 1..self.ipolys.len() {
                let s = engine::spoly_of(&self.ipolys[i], &self.ipolys[j], &self.order);
                if !reduce(&s, &red, &self.order).0.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Hilbert series of `S / I` for `S` graded with the first `nx` variables
    /// in degree `(1,0)` and the rest in degree `(0,1)`.
    pub fn hilbert_series(&self, nx: usize) -> HilbertSeries {
        let weights: Vec<(u32, u32)> = (0..self.nvars).map(|i| if i < nx { (1, 0) } else { (0, 1) }).collect();
        HilbertSeries {
            m: nx as u32,
            n: (self.nvars - nx) as u32,
            k: monomial_k_polynomial(&self.leading_monomials(), &weights),
        }
    }

    /// Single-graded K-polynomial (every variable of degree one), in the first slot.
    pub fn hilbert_numerator_total(&self) -> crate::exactalg::IntBiPoly {
        let weights = vec![(1, 0); self.nvars];
        monomial_k_polynomial(&self.leading_monomials(), &weights)
    }

    pub fn to_json_value(&self, names: &[String]) -> Value {
        json!({
            "order": self.order.name(),
            "basis": self.polys.iter().map(|p| p.to_string_with(names)).collect::<Vec<_>>(),
            "leading": self.leading_monomials().iter().map(|m| {
                MultiPoly::term(m.clone(), Rational::from_integer(1.into())).to_string_with(names)
            }).collect::<Vec<_>>(),
        })
    }
}

/// Reduced basis of a bigraded ideal under grevlex.
pub fn buchberger(ideal: &BigradedIdeal) -> GroebnerBasis {
    GroebnerBasis::compute(ideal.nvars(), ideal.generators(), MonomialOrder::Grevlex)
}

/// Bigraded Hilbert series of `S / I`.
pub fn hilbert_series(ideal: &BigradedIdeal) -> HilbertSeries {
    buchberger(ideal).hilbert_series(ideal.nx())
}
