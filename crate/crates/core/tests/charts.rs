mod common;

use common::*;
use coorbit_core::liealg::coadjoint_apply;
use coorbit_core::oracle::{random_orbit_point, resolve_sign_conventions, survey_sign_conventions};
use coorbit_core::orbits::{construct_group_word, orbit_chart, singular_set, Style};
use coorbit_core::rational::{frac, int};
use coorbit_core::{Error, Functional, PositiveRoot, Rational, RootSystem, RootSystemKind, SignConvention};
use num_traits::Zero;
use proptest::prelude::*;
use std::collections::BTreeMap;
use PositiveRoot::*;

fn lines(kind: RootSystemKind, n: usize, alpha: PositiveRoot, style: Style) -> Vec<String> {
    let sys = RootSystem::shared(kind, n).unwrap();
    orbit_chart(&sys, alpha, int(1)).unwrap().render(style)
}

#[test]
fn a3_long_root_equation() {
    let l = lines(RootSystemKind::A, 4, Diff(1, 4), Style::Text);
    assert!(l.contains(&"f(e2-e3) = f(e1-e3)*f(e2-e4)".to_string()));
}

#[test]
fn b3_sum_root_equation_verbatim() {
    let l = lines(RootSystemKind::B, 3, Sum(1, 3), Style::Text);
    assert!(l.contains(&"f(e1-e3) = -1/2*f(e1)^2".to_string()), "{l:?}");
    let tex = lines(RootSystemKind::B, 3, Sum(1, 3), Style::Latex);
    assert!(
        tex.contains(&"f(e_{\\epsilon_{1}-\\epsilon_{3}}) = -\\frac{1}{2} f(e_{\\epsilon_{1}})^{2}".to_string()),
        "{tex:?}"
    );
}

#[test]
fn simple_root_orbit_is_a_point() {
    let l = lines(RootSystemKind::A, 3, Diff(1, 2), Style::Text);
    assert_eq!(l, ["f(e1-e2) = 1", "f(e2-e3) = 0", "f(e1-e3) = 0"]);
}

#[test]
fn d3_sum_root_samples_vanish_at_e1_minus_e3() {
    let sys = RootSystem::shared(RootSystemKind::D, 3).unwrap();
    for seed in 0..50 {
        let (f, _) = random_orbit_point(&sys, Sum(1, 3), &int(1), seed, None).unwrap();
        assert!(f.get(Diff(1, 3)).is_zero());
        assert!(f.get(Diff(2, 3)).is_zero());
    }
}

#[test]
fn singular_set_sizes_closed_form() {
    for kind in RootSystemKind::ALL {
        for n in kind.min_rank()..=8 {
            let sys = RootSystem::new(kind, n).unwrap();
            for &a in sys.roots() {
                let expected = match (kind, a) {
                    (_, Diff(i, j)) => 2 * (j - i - 1),
                    (_, Short(i)) => 2 * (n - i),
                    (RootSystemKind::B, Sum(i, j)) => 2 * (2 * n - i - j),
                    (_, Sum(i, j)) => 2 * (2 * n - i - j - 1),
                };
                assert_eq!(singular_set(&sys, a).unwrap().singular.len(), expected, "{kind}{n} {a}");
            }
        }
    }
}

#[test]
fn sign_rule_is_ambiguous_at_rank_three() {
    match resolve_sign_conventions(3, 1) {
        Err(Error::AmbiguousConvention { survivors, .. }) => {
            assert!(survivors.contains(&"-1".to_string()));
            assert!(survivors.len() > 1);
        }
        other => panic!("expected an ambiguity, got {other:?}"),
    }
    assert!(matches!(resolve_sign_conventions(2, 1), Err(Error::RankOutOfRange { .. })));
}

#[test]
fn sign_rule_certified_and_stable() {
    let first = resolve_sign_conventions(4, 1).unwrap();
    let second = resolve_sign_conventions(4, 1_000_003).unwrap();
    assert_eq!(first, SignConvention::certified());
    assert_eq!(first, second);
    let survey = survey_sign_conventions(4, 7).unwrap();
    assert_eq!(survey.survivors(RootSystemKind::B).len(), 1);
    assert!(survey.failures[&RootSystemKind::B]["(-1)^k"] > 0);
}

#[test]
fn printed_alternating_sign_fails_in_rank_four() {
    let sys = RootSystem::shared(RootSystemKind::B, 4).unwrap();
    let printed = coorbit_core::orbits::orbit_chart_with(&sys, Sum(1, 2), int(1), SignConvention::AS_PRINTED).unwrap();
    let certified = orbit_chart(&sys, Sum(1, 2), int(1)).unwrap();
    let misses = (0..20)
        .map(|seed| random_orbit_point(&sys, Sum(1, 2), &int(1), seed, None).unwrap().0)
        .filter(|f| {
            assert!(certified.contains(f).unwrap());
            !printed.contains(f).unwrap()
        })
        .count();
    assert!(misses > 0);
}

fn orbit_case() -> impl Strategy<Value = (std::sync::Arc<RootSystem>, PositiveRoot, Rational)> {
    system_strategy(2, 4).prop_flat_map(|sys| {
        let len = sys.len();
        (Just(sys), 0..len, nonzero_rational())
    })
    .prop_map(|(sys, k, c)| {
        let a = sys.root(k);
        (sys, a, c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn orbit_images_satisfy_chart((sys, alpha, c) in orbit_case(), seed in any::<u64>()) {
        let (f, w) = random_orbit_point(&sys, alpha, &c, seed, None).unwrap();
        let chart = orbit_chart(&sys, alpha, c.clone()).unwrap();
        prop_assert!(chart.contains(&f).unwrap(), "word {:?}", w);
        let unit = orbit_chart(&sys, alpha, int(1)).unwrap();
        prop_assert!(unit.contains(&f.scale(&c.recip())).unwrap());
        prop_assert_eq!(f.orbit_dimension(), chart.singular().singular.len());
    }

    #[test]
    fn chart_points_round_trip((sys, alpha, c) in orbit_case(), values in prop::collection::vec(small_rational(), 64)) {
        let chart = orbit_chart(&sys, alpha, c.clone()).unwrap();
        let assignment: BTreeMap<PositiveRoot, Rational> = chart
            .singular()
            .singular
            .iter()
            .zip(values)
            .map(|(&r, v)| (r, v))
            .collect();
        let f = chart.point(&assignment).unwrap();
        prop_assert!(chart.contains(&f).unwrap());
        prop_assert_eq!(f.orbit_dimension(), assignment.len());
        let g = f.scale(&c.recip());
        let w = construct_group_word(&sys, alpha, &g).unwrap();
        let base = Functional::basis(sys.clone(), alpha, int(1)).unwrap();
        prop_assert_eq!(coadjoint_apply(&w, &base).unwrap(), g.clone());
        prop_assert_eq!(act(&w, &base), g);
    }

    #[test]
    fn basis_dimension_matches_singular_count(sys in system_strategy(2, 6), k in 0usize..64) {
        let alpha = sys.root(k % sys.len());
        let s = singular_set(&sys, alpha).unwrap().singular.len();
        for c in [int(1), int(2), frac(-3, 5)] {
            let f = Functional::basis(sys.clone(), alpha, c).unwrap();
            prop_assert_eq!(f.orbit_dimension(), s);
        }
    }
}
