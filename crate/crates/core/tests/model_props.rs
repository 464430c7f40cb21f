mod common;

use proptest::prelude::*;
use wsbound::bound_engine::{delta, evaluate_path, min_weight_path_in_window, BoundError, NegligibilityWitness};
use wsbound::lattice::{Rule, Window};
use wsbound::t_bound_engine::{t_delta, t_path_bound, verify_t_hypothesis, PathOrSearch};
use wsbound::{CurveModel, DivisorIndex, ModelSpec};

use common::{genus6, klein};

fn idx(v: &[i64]) -> DivisorIndex {
    DivisorIndex::new(v.to_vec())
}

fn both() -> [CurveModel; 2] {
    [klein(), genus6()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn h_sets_grow_with_the_other_coordinates(
        a in -3i64..25, b in -3i64..25, up in 0i64..6, j in 0usize..2, mu in -10i64..40, which in 0usize..2,
    ) {
        let model = &both()[which];
        let mut i = vec![a, b];
        let mut bigger = i.clone();
        bigger[1 - j] += up;
        i[j] = 0;
        bigger[j] = 7;
        if model.h_set_contains(&idx(&i), j, mu).unwrap() {
            prop_assert!(model.h_set_contains(&idx(&bigger), j, mu).unwrap());
        }
    }

    #[test]
    fn witnesses_check_out(a in -3i64..30, b in -3i64..30, j in 0usize..2, mu in -10i64..40, which in 0usize..2) {
        let model = &both()[which];
        let i = idx(&[a, b]);
        if let Some(w) = model.h_set_witness(&i, j, mu).unwrap() {
            prop_assert!(model.witness_certifies(&i, j, mu, &w));
            prop_assert_eq!(model.distinguished_valuation(&w, j), -mu);
            prop_assert!(model.distinguished_valuation(&w, 1 - j) >= -i.0[1 - j]);
        }
        if mu < model.h_set_lower_cutoff(&i, j) {
            prop_assert!(!model.h_set_contains(&i, j, mu).unwrap());
        }
    }

    #[test]
    fn delta_is_zero_past_the_horizon(a in 0i64..60, b in 0i64..60, j in 0usize..2, which in 0usize..2) {
        let model = &both()[which];
        let i = idx(&[a, b]);
        let h = model.q() * model.multiplicity(j) + 2 * model.genus() - 1;
        let (d, w) = delta(model, &i, j).unwrap();
        prop_assert!(d <= 1);
        if i.degree() >= h {
            prop_assert_eq!(d, 0);
        }
        if let NegligibilityWitness::HorizonRule { threshold } = w {
            prop_assert!(i.degree() >= threshold);
        }
    }

    #[test]
    fn any_path_is_no_better_than_dijkstra(steps in prop::collection::vec(0usize..2, 60), which in 0usize..2) {
        let model = &both()[which];
        let target = 2 * model.genus() - 1 + model.q() * model.multiplicity(0).min(model.multiplicity(1));
        let window = Window::new(vec![-1, 0], vec![target, 5]);
        let mut path = vec![idx(&[-1, 0])];
        let mut k = 0;
        while path.last().unwrap().degree() < target {
            let here = path.last().unwrap();
            let mut next = here.step(steps[k % steps.len()]);
            if !window.contains(&next) {
                next = here.step(0);
            }
            path.push(next);
            k += 1;
        }
        let any = evaluate_path(model, &path).unwrap();
        let best = min_weight_path_in_window(model, &window).unwrap();
        prop_assert!(any.bound >= best.bound);
        prop_assert_eq!(any.bound, 2 + any.edges.iter().map(|e| e.delta as i64).sum::<i64>());
    }
}

#[test]
fn place_semigroups_match_h_sets_at_zero() {
    for model in both() {
        for j in 0..model.n() {
            let h = model.place_semigroup(j).clone();
            let zero = DivisorIndex::zero(model.n());
            for mu in -5..=h.conductor() + h.multiplicity() + 10 {
                assert_eq!(h.contains(mu), model.h_set_contains(&zero, j, mu).unwrap(), "{} mu {mu}", model.name());
            }
        }
    }
}

#[test]
fn unit_decompositions_use_q_minus_one() {
    for model in both() {
        let cert = t_path_bound(&model, &PathOrSearch::Search { max_width: 6 }, 0).unwrap();
        for (node, edge) in cert.certificate.path.iter().zip(&cert.certificate.edges) {
            if let NegligibilityWitness::Decomposition { lambda, mu, pole_monomial, .. } = &edge.witness {
                assert_eq!(mu + (model.q() - 1) * lambda, node.0[edge.direction] + 1);
                assert!(model.exact_pole_certified(edge.direction, *lambda, pole_monomial.as_ref().unwrap()));
            }
        }
        assert_eq!(cert.certificate.rule, Rule::Unit);
    }
}

/// Klein with a loose exponent bound: the unit hypothesis can no longer be
/// extended to the whole semigroup, so the unit horizon is off limits.
#[test]
fn unit_horizon_needs_the_hypothesis() {
    let mut spec: ModelSpec = klein().spec().clone();
    spec.exponent_lower_bounds = vec![Some(-40), None];
    let model = CurveModel::new(spec).unwrap();
    let report = verify_t_hypothesis(&model, 0, 40).unwrap();
    assert!(!report.covers_semigroup);
    assert!(matches!(
        t_path_bound(&model, &PathOrSearch::Search { max_width: 0 }, 0),
        Err(BoundError::HypothesisUnverified(_))
    ));
    let (_, w) = t_delta(&model, &idx(&[60, 0]), 0).unwrap();
    assert!(!matches!(w, NegligibilityWitness::HorizonRule { .. }));
}
