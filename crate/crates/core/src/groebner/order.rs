use std::cmp::Ordering;

use serde::Serialize;

use crate::exactalg::Monomial;

/// Graded reverse lexicographic order with variable 0 the largest, or a block
/// elimination order that compares the degree in `block` first and breaks ties
/// by the same grevlex order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum MonomialOrder {
    Grevlex,
    Elimination { block: Vec<usize> },
}

impl MonomialOrder {
    pub fn elimination(block: &[usize]) -> Self {
        let mut b = block.to_vec();
        b.sort_unstable();
        b.dedup();
        MonomialOrder::Elimination { block: b }
    }

    /// Compares two monomials; `Greater` means `a` is the larger.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if let MonomialOrder::Elimination { block } = self {
            let da: u32 = block.iter().map(|&i| a.exp(i) as u32).sum();
            let db: u32 = block.iter().map(|&i| b.exp(i) as u32).sum();
            if da != db {
                return da.cmp(&db);
            }
        }
        grevlex(a.exponents(), b.exponents())
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Grevlex => "grevlex",
            MonomialOrder::Elimination { .. } => "elimination",
        }
    }
}

pub(crate) fn grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    if da != db {
        return da.cmp(&db);
    }
    for i in (0..a.len().max(b.len())).rev() {
        let (x, y) = (a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0));
        if x != y {
            return y.cmp(&x);
        }
    }
    Ordering::Equal
}
