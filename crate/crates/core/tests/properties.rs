use proptest::prelude::*;
use quadsum_core::constructive::*;
use quadsum_core::{find_witness, lookup, validate_witness, Witness};

fn valid(id: &str, n: i64, w: &Witness) -> bool {
    let st = lookup(id).unwrap().statement;
    w.n == st.target_for(n).unwrap() && validate_witness(&st, w).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn identity_both_sides_agree(a in -300i64..300, b in -300i64..300, s in -300i64..300,
                                 t in -300i64..300, u in -300i64..300, v in -300i64..300) {
        let (lhs, terms) = identity_3_7(a, b, s, t, u, v).unwrap();
        prop_assert_eq!(lhs, terms.iter().sum::<i64>());
    }

    #[test]
    fn seven_map_inverts(s in -10_000i64..10_000, t in -10_000i64..10_000,
                         u in -10_000i64..10_000, v in -10_000i64..10_000) {
        let [x, y, z, w] = seven_map(s, t, u, v).unwrap();
        prop_assert_eq!(x * x + y * y + z * z + 2 * w * w, 7 * (s * s + t * t + u * u + 2 * v * v));
        prop_assert_eq!(seven_unmap(x, y, z, w), Some([s, t, u, v]));
    }

    #[test]
    fn unmap_output_maps_back(x in -500i64..500, y in -500i64..500, z in -500i64..500, w in -500i64..500) {
        if let Some([s, t, u, v]) = seven_unmap(x, y, z, w) {
            prop_assert_eq!(seven_map(s, t, u, v).unwrap(), [x, y, z, w]);
        }
    }

    #[test]
    fn two_adic_difference_large(n in 1i64..2_000_000_000_000) {
        prop_assert!(valid("T1.1ii", n, &decompose_1_1_ii(n).unwrap()));
    }

    #[test]
    fn two_adic_sum_large(n in 1i64..2_000_000_000_000) {
        prop_assert!(valid("T1.1iv", n, &decompose_1_1_iv(n).unwrap()));
    }

    #[test]
    fn power_of_four_difference_large(n in 1i64..2_000_000_000_000) {
        prop_assert!(valid("T1.2i", n, &decompose_1_2_i(n).unwrap()));
    }

    #[test]
    fn weighted_linear_power_large(n in 1i64..1_000_000_000_000, cube in any::<bool>()) {
        let (m, id) = if cube { (3, "T1.4ii-sq") } else { (2, "T1.4ii") };
        let n = if cube { n % 1_000_000 + 1 } else { n };
        prop_assert!(valid(id, n, &decompose_1_4_ii(n, m).unwrap()));
    }

    #[test]
    fn seven_fold_large(n in 0i64..100_000_000_000, cube in any::<bool>(), weighted in any::<bool>()) {
        let m = if cube { 3 } else { 2 };
        let (part, id) = match (weighted, cube) {
            (false, false) => (SixPart::Sum, "T1.6i-sq"),
            (false, true) => (SixPart::Sum, "T1.6i-cube"),
            (true, false) => (SixPart::Weighted, "T1.6ii-sq-var"),
            (true, true) => (SixPart::Weighted, "T1.6ii-cube-var"),
        };
        prop_assert!(valid(id, n, &decompose_1_6(n, m, part).unwrap()));
    }

    #[test]
    fn engine_witnesses_validate(n in 1i64..5000, k in 0usize..40) {
        let reg = quadsum_core::registry();
        let rec = &reg[k * 7 % reg.len()];
        if rec.statement.applies(n) && !rec.probabilistic {
            if let Some(w) = find_witness(&rec.statement, n).unwrap() {
                prop_assert!(validate_witness(&rec.statement, &w).unwrap());
            }
        }
    }
}
