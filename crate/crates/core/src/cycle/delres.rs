use crate::arrgmt::Arrangement;
use crate::error::{Error, Result};
use crate::exactalg::{MultiPoly, Rational};
use crate::logder::dp_generators;
use crate::logideal::{log_ideal_auto, BigradedIdeal};

/// The three ideals of the set-level deletion-restriction statement at one
/// hyperplane `H`, all in `S = k[x] ⊗ k[a]` of `A`.
#[derive(Clone, Debug)]
pub struct DelresIdeals {
    pub bridge: bool,
    /// `I(A) + (a_H)`.
    pub j: BigradedIdeal,
    /// Preimage of `I(A')`: its generators with `a'` renamed into `a`, plus `a_H`.
    pub j1: BigradedIdeal,
    /// Preimage of `<D(A''), omega^H>`: `f_H`, `a_H` and lifted contractions.
    pub j2: BigradedIdeal,
}

/// Builds the ideals for hyperplane `i` of an essential arrangement. Each
/// derivation module is searched up to `dmax` (default: its number of
/// hyperplanes).
pub fn delres_ideals(a: &Arrangement, i: usize, dmax: Option<u32>) -> Result<DelresIdeals> {
    if !a.is_essential() {
        return Err(Error::Precondition("set-level check expects an essential arrangement".into()));
    }
    let (m, n) = (a.dim(), a.n());
    let nv = m + n;
    let tr = a.restrict(i)?;
    let bridge = a.is_bridge(i)?;
    let a_h = MultiPoly::var(nv, m + i);

    let ia = log_ideal_auto(a, dmax.unwrap_or(n as u32))?;
    let j = ia.with_generators([a_h.clone()]);

    let mut j1_gens = vec![a_h.clone()];
    if tr.deletion.n() > 0 {
        let ia1 = log_ideal_auto(&tr.deletion, dmax.unwrap_or(n as u32 - 1))?;
        let map: Vec<usize> = (0..m).chain(tr.iota.iter().map(|&k| m + k)).collect();
        j1_gens.extend(ia1.generators().iter().map(|g| g.remap(nv, &map)));
    }
    let j1 = BigradedIdeal::new(m, n, j1_gens)?;

    let mut j2_gens = vec![a.form(i, nv), a_h];
    let res = &tr.restriction;
    if res.dim() > 0 && res.n() > 0 {
        // y = L x with L B = I lifts functions on H to V
        let l = tr
            .basis
            .left_inverse()
            .ok_or_else(|| Error::Precondition("hyperplane basis is not of full rank".into()))?;
        let images: Vec<MultiPoly> = (0..m - 1)
            .map(|r| {
                let mut row = l.row_vec(r);
                row.resize(nv, Rational::from_integer(0.into()));
                MultiPoly::linear(nv, &row)
            })
            .collect();
        let forms = res.forms();
        let gens = dp_generators(res, 1, dmax.unwrap_or(res.n() as u32))?;
        for theta in &gens.generators {
            let mut c = MultiPoly::zero(nv);
            for (k, &h2) in tr.sigma.iter().enumerate() {
                let f = &forms[h2];
                let q = theta.apply(f).div_exact(f).ok_or_else(|| {
                    Error::ContractViolation(format!("restriction derivation does not preserve hyperplane {}", h2 + 1))
                })?;
                let lifted = q.substitute(&images);
                c = &c + &(&lifted * &MultiPoly::var(nv, m + tr.iota[k]));
            }
            j2_gens.push(c);
        }
    }
    let j2 = BigradedIdeal::new(m, n, j2_gens)?;
    Ok(DelresIdeals { bridge, j, j1, j2 })
}

/// Outcome of the membership tests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DelresOutcome {
    pub bridge: bool,
    /// Non-bridge: `V(J) ⊆ V(J1) ∪ V(J2)`. Bridge: `J = J1` exactly.
    pub forward: bool,
    /// Non-bridge: `V(J1) ∪ V(J2) ⊆ V(J)`. Bridge: `V(J2) ⊆ V(J1)`.
    pub backward: bool,
    /// Bridge only: `J1 ⊆ J2` as ideals.
    pub exact_containment: Option<bool>,
}

impl DelresOutcome {
    pub fn holds(&self) -> bool {
        self.forward && self.backward
    }
}

pub fn check_delres(ideals: &DelresIdeals) -> DelresOutcome {
    let DelresIdeals { bridge, j, j1, j2 } = ideals;
    if *bridge {
        let exact = j1.generators().iter().all(|g| j2.contains(g));
        DelresOutcome {
            bridge: true,
            forward: j.same_ideal(j1),
            backward: j1.generators().iter().all(|g| j2.radical_member(g)),
            exact_containment: Some(exact),
        }
    } else {
        let union = j1.intersect(j2);
        DelresOutcome {
            bridge: false,
            forward: union.generators().iter().all(|g| j.radical_member(g)),
            backward: j.generators().iter().all(|g| union.radical_member(g)),
            exact_containment: None,
        }
    }
}
