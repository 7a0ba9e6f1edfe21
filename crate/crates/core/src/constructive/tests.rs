use super::*;
use crate::forms::validate_witness;
use crate::statements::lookup;

fn check_all(id: &str, lo: i64, hi: i64, f: impl Fn(i64) -> Result<Witness>) {
    let st = lookup(id).unwrap().statement;
    for n in lo..=hi {
        let w = f(n).unwrap_or_else(|e| panic!("{id} at {n}: {e}"));
        assert_eq!(w.n, st.target_for(n).unwrap(), "{id} at {n}");
        assert!(
            validate_witness(&st, &w).unwrap(),
            "{id} at {n}: {:?}",
            w.values
        );
    }
}

#[test]
fn identity_holds_on_random_tuples() {
    let r = identity_check(10_000, 7).unwrap();
    assert!(r.passed(), "{r:?}");
    assert_eq!(r.samples, 10_000);
}

#[test]
fn identity_small_cases() {
    let (lhs, terms) = identity_3_7(2, 1, 1, 0, 0, 0).unwrap();
    assert_eq!(lhs, 7);
    assert_eq!(terms.iter().sum::<i64>(), 7);
    let (lhs, terms) = identity_3_7(1, 1, 1, 1, 1, 1).unwrap();
    assert_eq!(lhs, 12);
    assert_eq!(terms.iter().sum::<i64>(), 12);
}

#[test]
fn faulty_evaluator_is_caught() {
    let mut bad = |t: [i64; 6]| {
        let (l, mut terms) = identity_3_7(t[0], t[1], t[2], t[3], t[4], t[5])?;
        if t[2] == 3 {
            terms[0] += 1;
        }
        Ok((l, terms))
    };
    let r = identity_check_with(2_000, 1, &mut bad).unwrap();
    assert!(!r.passed());
    assert_eq!(r.first_failure.unwrap()[2], 3);
}

#[test]
fn seven_map_scales_the_norm_on_a_grid() {
    for s in -20..=20i64 {
        for t in -20..=20i64 {
            for u in -20..=20i64 {
                for v in -20..=20i64 {
                    let [x, y, z, w] = seven_map(s, t, u, v).unwrap();
                    assert_eq!(
                        x * x + y * y + z * z + 2 * w * w,
                        7 * (s * s + t * t + u * u + 2 * v * v)
                    );
                }
            }
        }
    }
}

#[test]
fn seven_unmap_examples() {
    assert_eq!(seven_map(1, 0, 0, 0).unwrap(), [1, 0, 2, 1]);
    assert_eq!(seven_unmap(1, 0, 2, 1), Some([1, 0, 0, 0]));
    assert_eq!(seven_unmap(1, 1, 1, 1), None);
    let st = SevenTuple::from_preimage(1, 0, 0, 0).unwrap();
    assert_eq!(SevenTuple::from_image(st.x, st.y, st.z, st.w), Some(st));
}

#[test]
fn seven_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..1000 {
        let q: [i64; 4] = core::array::from_fn(|_| (rng.next_u64() % 2001) as i64 - 1000);
        let img = seven_map(q[0], q[1], q[2], q[3]).unwrap();
        assert_eq!(seven_unmap(img[0], img[1], img[2], img[3]), Some(q));
    }
}

#[test]
fn decompose_1_1_ii_examples_and_range() {
    assert_eq!(decompose_1_1_ii(1).unwrap().values, [1, 0, 0, 0]);
    let w = decompose_1_1_ii(4).unwrap();
    assert_eq!(w.values[0] - w.values[1], 2);
    check_all("T1.1ii", 1, 10_000, decompose_1_1_ii);
    for n in 1..=10_000 {
        let v = decompose_1_1_ii(n).unwrap().values;
        assert_eq!(v[0] - v[1], 1 << (n.trailing_zeros() / 2), "{n}");
    }
}

#[test]
fn decompose_1_1_iv_examples_and_range() {
    let sum = |n| decompose_1_1_iv(n).unwrap().values.iter().sum::<i64>();
    assert_eq!(sum(14), 2);
    assert_eq!(sum(107), 1);
    assert_eq!(sum(2), 2);
    check_all("T1.1iv", 1, 10_000, decompose_1_1_iv);
    for n in 1..=10_000i64 {
        assert_eq!(sum(n), 1 << ((n.trailing_zeros() + 1) / 2), "{n}");
    }
}

#[test]
fn decompose_1_2_i_examples_and_range() {
    assert_eq!(decompose_1_2_i(1).unwrap().values, [0, 1, 0, 0]);
    assert_eq!(decompose_1_2_i(3).unwrap().values, [1, 1, 1, 0]);
    assert_eq!(decompose_1_2_i(16).unwrap().values, [0, 4, 0, 0]);
    check_all("T1.2i", 1, 10_000, decompose_1_2_i);
}

#[test]
fn decompose_1_4_ii_ranges() {
    assert_eq!(decompose_1_4_ii(1, 2).unwrap().values, [1, 0, 0, 0]);
    let w = decompose_1_4_ii(3, 3).unwrap();
    assert_eq!(w.n, 9);
    assert!([1, 8].contains(&(w.values[0] + 2 * w.values[1] + 2 * w.values[2])));
    check_all("T1.4ii", 1, 2000, |n| decompose_1_4_ii(n, 2));
    check_all("T1.4ii-sq", 1, 2000, |n| decompose_1_4_ii(n, 3));
    assert!(decompose_1_4_ii(5, 4).is_err());
    assert!(decompose_1_4_ii(0, 2).is_err());
}

#[test]
fn decompose_1_6_squares() {
    assert_eq!(
        decompose_1_6(0, 2, SixPart::Sum).unwrap().values,
        [0, 0, 0, 0]
    );
    check_all("T1.6i-sq", 0, 5000, |n| decompose_1_6(n, 2, SixPart::Sum));
    check_all("T1.6ii-sq-var", 0, 5000, |n| {
        decompose_1_6(n, 2, SixPart::Weighted)
    });
}

#[test]
fn decompose_1_6_cubes() {
    let lo = six_threshold(3);
    assert_eq!(lo, 33614);
    check_all("T1.6i-cube", 0, 2000, |n| decompose_1_6(n, 3, SixPart::Sum));
    check_all("T1.6i-cube", lo, lo + 2000, |n| {
        decompose_1_6(n, 3, SixPart::Sum)
    });
    check_all("T1.6ii-cube-var", 0, 2000, |n| {
        decompose_1_6(n, 3, SixPart::Weighted)
    });
    check_all("T1.6ii-cube-var", lo, lo + 2000, |n| {
        decompose_1_6(n, 3, SixPart::Weighted)
    });
}

#[test]
fn decomposer_and_engine_agree_on_existence() {
    for (id, f) in [
        ("T1.1ii", decompose_1_1_ii as fn(i64) -> Result<Witness>),
        ("T1.1iv", decompose_1_1_iv),
        ("T1.2i", decompose_1_2_i),
    ] {
        let st = lookup(id).unwrap().statement;
        for n in (1..=3000).step_by(37) {
            assert!(f(n).is_ok());
            assert!(find_witness(&st, n).unwrap().is_some(), "{id} {n}");
        }
    }
}

#[test]
fn rejects_bad_inputs() {
    assert!(decompose_1_1_ii(0).is_err());
    assert!(decompose_1_1_iv(-3).is_err());
    assert!(decompose_1_2_i(0).is_err());
    assert!(decompose_1_6(-1, 2, SixPart::Sum).is_err());
    assert!(decompose_1_6(5, 4, SixPart::Sum).is_err());
}
