//! Cross-module properties on randomly generated eta-quotients: the
//! valence identity for cusp orders, agreement between the series engine
//! and the closed-form order at infinity, the Fricke involution contract,
//! and the behaviour of quotients built to satisfy the modularity
//! conditions by construction.

use proptest::prelude::*;

use etadiv::arith::divisors;
use etadiv::gamma0::Cusp;
use etadiv::rational::rat;
use etadiv::valence::{self, Divisor};
use etadiv::EtaQuotient;

fn small_quotient(max_level: u64, max_exp: i64) -> impl Strategy<Value = EtaQuotient> {
    (1..=max_level)
        .prop_flat_map(move |level| {
            let ds = divisors(level);
            let n = ds.len();
            proptest::collection::vec(-max_exp..=max_exp, n).prop_map(move |rs| {
                EtaQuotient::new(level, ds.iter().copied().zip(rs)).expect("valid divisors")
            })
        })
        .prop_filter("nonzero quotient", |f| f.exponents().next().is_some())
}

/// Exponents `r_d = 24 s_d` with `sum s_d = 0` satisfy all four modularity
/// conditions by construction.
fn function_field_quotient() -> impl Strategy<Value = EtaQuotient> {
    (2u64..=20)
        .prop_flat_map(|level| {
            let ds = divisors(level);
            let n = ds.len();
            proptest::collection::vec(-2i64..=2, n - 1).prop_map(move |mut s| {
                let last = -s.iter().sum::<i64>();
                s.push(last);
                let rs = s.into_iter().map(|v| 24 * v);
                EtaQuotient::new(level, ds.iter().copied().zip(rs)).expect("valid divisors")
            })
        })
        .prop_filter("nonzero quotient", |f| f.exponents().next().is_some())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cusp_orders_sum_to_the_budget(f in small_quotient(40, 8)) {
        let budget = valence::budget(f.level(), &f.weight()).unwrap();
        prop_assert_eq!(f.divisor().degree(), budget);
    }

    #[test]
    fn expansion_valuation_matches_order_at_infinity(f in small_quotient(16, 5)) {
        let leading: i64 = f.exponents().map(|(d, r)| d as i64 * r).sum();
        let series = f.expansion(leading + 24 * 20).unwrap();
        let at_infinity = f.order_at_cusp(&Cusp::infinity(f.level())).unwrap();
        prop_assert_eq!(series.valuation().unwrap(), at_infinity);
    }

    #[test]
    fn fricke_is_an_involution_and_swaps_zero_and_infinity(f in small_quotient(40, 8)) {
        let g = f.fricke_transform();
        prop_assert_eq!(g.level(), f.level());
        prop_assert_eq!(g.fricke_transform(), f.clone());
        prop_assert_eq!(g.weight(), f.weight());
        let zero = Cusp::zero(f.level());
        let infinity = Cusp::infinity(f.level());
        prop_assert_eq!(
            g.order_at_cusp(&zero).unwrap(),
            f.order_at_cusp(&infinity).unwrap()
        );
        prop_assert_eq!(
            g.order_at_cusp(&infinity).unwrap(),
            f.order_at_cusp(&zero).unwrap()
        );
    }

    #[test]
    fn constructed_modular_functions_pass_every_gate(f in function_field_quotient()) {
        let rep = f.ligozat_check();
        prop_assert!(rep.all_conditions_hold(), "{f}: {rep:?}");
        prop_assert_eq!(f.weight(), rat(0));
        let cusp_div = f.divisor();
        prop_assert!(cusp_div.is_integral(), "{f}: {cusp_div}");
        let div = Divisor::from_cusp_orders(cusp_div.integer_orders().unwrap());
        prop_assert!(valence::check_valence(&div, f.level(), &rat(0)).unwrap());
    }
}
