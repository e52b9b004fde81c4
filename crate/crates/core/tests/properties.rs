mod common;

use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn spairs_reduce_to_zero(gens in ideal_strategy()) {
        prop_spairs_reduce(&gens).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn hilbert_series_ignores_generator_order(a in arrangement_strategy(5), seed in any::<u64>()) {
        prop_hs_permutation(&a, seed).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn mobius_sums_vanish(a in arrangement_strategy(6)) {
        prop_mobius_sum(&a).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn tutte_ignores_deletion_order(a in arrangement_strategy(6), seed in any::<u64>()) {
        prop_tutte_order(&a, seed).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn essentialization_keeps_lattice((f, g) in embedded_strategy()) {
        prop_essentialization(&f, &g).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn tutte_matches_subset_expansion(a in arrangement_strategy(6)) {
        prop_assert_eq!(a.tutte(), tutte_by_subsets(&a));
        prop_assert_eq!(a.char_poly(), chi_by_subsets(&a));
    }
}
