//! Cycle classes of logarithmic ideals and the checks built on them.

mod class;
mod delres;
mod report;
mod series;
mod verify;

pub use class::{
    beta_intersection, chi_hom_at, class_from_chi, class_from_tutte, coefficient_table, multidegree, multidegree_raw,
    ChowClass,
};
pub use delres::{check_delres, delres_ideals, DelresIdeals, DelresOutcome};
pub use report::{aggregate, Report, Status};
pub use series::{
    expected_hpoly_leading, leading_poles, psi_from_p, psi_truncated, signed_chi_at_minus_s, tutte_quotient,
    HilbertPolynomial, PoleAnalysis,
};
pub use verify::{class_data, Check, ClassData, Verifier, VerifyOptions};
