use proptest::prelude::*;
use wsbound::oracle::brute_shifted_complement;
use wsbound::NumericalSemigroup;

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn semigroup() -> impl Strategy<Value = NumericalSemigroup> {
    prop::collection::vec(2i64..=30, 2..=4)
        .prop_filter("coprime", |g| g.iter().fold(0, |a, &b| gcd(a, b)) == 1)
        .prop_map(|g| NumericalSemigroup::from_generators(&g).unwrap())
}

/// A semigroup with one of its nonzero elements up to 3 * conductor.
fn semigroup_and_element() -> impl Strategy<Value = (NumericalSemigroup, i64)> {
    semigroup().prop_flat_map(|h| {
        let elems: Vec<i64> = h
            .elements_up_to(3 * h.conductor().max(h.multiplicity()))
            .filter(|&x| x > 0)
            .collect();
        (Just(h), prop::sample::select(elems))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn additive_closure(h in semigroup()) {
        let top = 3 * h.conductor();
        let elems: Vec<i64> = h.elements_up_to(top).collect();
        for &a in &elems {
            for &b in &elems {
                prop_assert!(h.contains(a + b), "{a} + {b} not in {h}");
            }
        }
    }

    #[test]
    fn apery_reconstruction((h, e) in semigroup_and_element()) {
        let ap = h.apery_set(e).unwrap();
        prop_assert_eq!(ap.elements.len() as i64, e);
        let top = 3 * h.conductor() + e;
        for x in 0..=top {
            let w = ap.elements[(x % e) as usize];
            prop_assert_eq!(h.contains(x), x >= w, "x = {}", x);
            if let Some((r, k)) = ap.decompose(x) {
                prop_assert_eq!(ap.elements[r] + k * e, x);
            }
        }
    }

    #[test]
    fn complement_has_e_times_multiplicity_elements((h, e) in semigroup_and_element()) {
        prop_assert_eq!(h.shifted_sum_complement_len(e).unwrap(), e * h.multiplicity());
    }

    #[test]
    fn engine_matches_oracle(h in semigroup(), e in 1i64..=40) {
        let cap = e * h.multiplicity() + h.conductor();
        let slow: Vec<i64> = brute_shifted_complement(h.generators(), e, cap).unwrap().into_iter().collect();
        prop_assert_eq!(h.shifted_sum_complement(e).unwrap(), slow);
    }

    #[test]
    fn shifted_translates_nest((h, e) in semigroup_and_element(), a in 0usize..6, b in 0usize..6) {
        let small: Vec<i64> = h.elements_up_to(h.conductor() + 40).filter(|&x| x > 0).collect();
        let (lambda, mu) = (small[a.min(b) % small.len()], small[a.max(b) % small.len()]);
        let (lambda, mu) = (lambda.min(mu), lambda.max(mu));
        // e*mu + H inside e*lambda + H
        for x in e * mu..=e * mu + 3 * h.conductor() {
            if h.contains(x - e * mu) {
                prop_assert!(h.contains(x - e * lambda), "x = {x}, lambda = {lambda}, mu = {mu}");
            }
        }
    }

    #[test]
    fn gm_against_lewittes(h in semigroup(), q in 2i64..=64) {
        let gm = h.geil_matsumoto_bound(q).unwrap();
        let lw = h.lewittes_bound(q).unwrap();
        prop_assert!(gm <= lw);
        if h.contains(q) {
            prop_assert_eq!(gm, lw);
        }
    }

    #[test]
    fn unit_set_refines(h in semigroup(), q in 3i64..=64) {
        let plain = h.shifted_sum_complement(q).unwrap();
        let unit = h.shifted_sum_complement(q - 1).unwrap();
        prop_assert!(unit.iter().all(|x| plain.binary_search(x).is_ok()));
        prop_assert!(h.single_point_t_bound(q).unwrap() < h.geil_matsumoto_bound(q).unwrap());
    }

    #[test]
    fn converse_for_consecutive_generators(m in 2i64..=12, e in 1i64..=200) {
        let h = NumericalSemigroup::from_generators(&[m, m + 1]).unwrap();
        if h.shifted_sum_complement_len(e).unwrap() == e * m {
            prop_assert!(h.contains(e), "e = {e} outside {h}");
        }
    }
}

#[test]
fn general_converse_fails() {
    let h = NumericalSemigroup::from_generators(&[2, 5]).unwrap();
    assert!(!h.contains(3));
    assert_eq!(h.shifted_sum_complement_len(3).unwrap(), 6);
}
