use num_traits::One;

use super::{GroebnerBasis, MonomialOrder};
use crate::exactalg::{MultiPoly, Rational};

/// Generators of `I ∩ k[other variables]`, still written in `nvars` variables.
pub fn eliminate(nvars: usize, gens: &[MultiPoly], vars: &[usize]) -> Vec<MultiPoly> {
    let gb = GroebnerBasis::compute(nvars, gens, MonomialOrder::elimination(vars));
    gb.basis().iter().filter(|p| vars.iter().all(|&v| !p.uses_var(v))).cloned().collect()
}

/// Generators of `I ∩ J` via `w I + (1 - w) J` and elimination of the tag `w`.
pub fn intersect(nvars: usize, i: &[MultiPoly], j: &[MultiPoly]) -> Vec<MultiPoly> {
    let n1 = nvars + 1;
    let w = MultiPoly::var(n1, nvars);
    let one_minus_w = &MultiPoly::one(n1) - &w;
    let mut gens: Vec<MultiPoly> = i.iter().map(|f| &w * &f.resized(n1)).collect();
    gens.extend(j.iter().map(|g| &one_minus_w * &g.resized(n1)));
    eliminate(n1, &gens, &[nvars]).into_iter().map(|p| p.resized(nvars)).collect()
}

fn rabinowitsch(nvars: usize, gens: &[MultiPoly], g: &MultiPoly) -> Vec<MultiPoly> {
    let n1 = nvars + 1;
    let z = MultiPoly::var(n1, nvars);
    let mut out: Vec<MultiPoly> = gens.iter().map(|f| f.resized(n1)).collect();
    out.push(&MultiPoly::one(n1) - &(&z * &g.resized(n1)));
    out
}

/// Generators of the saturation `I : g^∞`.
pub fn saturate(nvars: usize, gens: &[MultiPoly], g: &MultiPoly) -> Vec<MultiPoly> {
    eliminate(nvars + 1, &rabinowitsch(nvars, gens, g), &[nvars]).into_iter().map(|p| p.resized(nvars)).collect()
}

/// Whether `g` vanishes on the zero set of `I`, i.e. `1 ∈ I + (1 - z g)`.
pub fn radical_member(nvars: usize, g: &MultiPoly, gens: &[MultiPoly]) -> bool {
    if g.terms().all(|(_, c)| c == &Rational::from_integer(0.into())) {
        return true;
    }
    let gb = GroebnerBasis::compute(nvars + 1, &rabinowitsch(nvars, gens, g), MonomialOrder::Grevlex);
    gb.is_unit() && gb.basis().len() == 1 && gb.basis()[0] == MultiPoly::constant(nvars + 1, Rational::one())
}
