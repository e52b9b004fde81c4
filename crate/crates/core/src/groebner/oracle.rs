use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactalg::{monomials_of_bidegree, Monomial, SparseEchelon};
use crate::logideal::BigradedIdeal;

/// Largest graded piece (number of monomials) the oracle will handle.
pub const ORACLE_MAX_COLUMNS: usize = 20_000;

/// `dim (S/I)_(a,b)` by linear algebra on the span of generator multiples,
/// independent of any Gröbner computation.
pub fn hilbert_function_oracle(ideal: &BigradedIdeal, a: u32, b: u32) -> Result<BigInt> {
    let (nx, na) = (ideal.nx(), ideal.na());
    let total = monomials_of_bidegree(nx, na, a, b).len();
    if total > ORACLE_MAX_COLUMNS {
        return Err(Error::ResourceLimit(format!(
            "bidegree ({a},{b}) has {total} monomials, limit {ORACLE_MAX_COLUMNS}"
        )));
    }
    let mut span: SparseEchelon<Monomial> = SparseEchelon::new();
    for g in ideal.generators() {
        let Some((ga, gb)) = g.bidegree(nx) else { continue };
        if ga > a || gb > b {
            continue;
        }
        for m in monomials_of_bidegree(nx, na, a - ga, b - gb) {
            if span.rank() == total {
                break;
            }
            span.insert(g.terms().map(|(t, c)| (m.mul(t), c.clone())).collect());
        }
    }
    Ok(BigInt::from(total - span.rank()))
}
