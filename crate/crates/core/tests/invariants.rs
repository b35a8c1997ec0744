use proptest::prelude::*;
use proptest::sample::subsequence;

use qderiv::derivations::derivation_space;
use qderiv::exactla::FieldSpec;
use qderiv::lietransform::lie_transformation_algebra;
use qderiv::quandle::{catalog_entry, catalog_labels, AlexanderParams, Quandle, QuandleData};

fn fields() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::Rationals),
        Just(FieldSpec::prime(2).unwrap()),
        Just(FieldSpec::prime(3).unwrap()),
        Just(FieldSpec::prime(5).unwrap()),
    ]
}

fn quandles() -> impl Strategy<Value = Quandle> {
    let alexander = (2usize..=7, 1usize..7).prop_filter_map("alpha must be a unit", |(n, a)| {
        AlexanderParams::new(n, a % n)
            .ok()
            .map(|p| Quandle::alexander(p).unwrap())
    });
    let catalog = prop::sample::select(catalog_labels()).prop_map(|l| catalog_entry(&l).unwrap().quandle);
    prop_oneof![alexander, catalog]
}

fn with_permutation() -> impl Strategy<Value = (Quandle, Vec<usize>)> {
    quandles().prop_flat_map(|q| {
        let n = q.order();
        (Just(q), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn relabelling_transports_derivations((q, perm) in with_permutation(), f in fields()) {
        let r = q.relabel(&perm).unwrap();
        let (dq, dr) = (derivation_space(&q, f), derivation_space(&r, f));
        prop_assert_eq!(dq.dim(), dr.dim());
        for d in dq.basis() {
            prop_assert!(dr.contains(&d.conjugate_by_permutation(&perm).unwrap()));
        }
        prop_assert_eq!(lie_transformation_algebra(&q, f).dim(), lie_transformation_algebra(&r, f).dim());
    }

    #[test]
    fn json_round_trip_preserves_results(q in quandles(), f in fields()) {
        let text = serde_json::to_string(&q.to_data()).unwrap();
        let back = Quandle::from_data(&serde_json::from_str::<QuandleData>(&text).unwrap()).unwrap();
        prop_assert_eq!(back.rows(), q.rows());
        let (a, b) = (derivation_space(&back, f), derivation_space(&q, f));
        prop_assert_eq!(a.span(), b.span());
    }

    #[test]
    fn derivation_spaces_are_lie_algebras(q in quandles(), f in fields()) {
        prop_assert!(derivation_space(&q, f).is_lie_closed());
    }

    #[test]
    fn orbit_unions_are_subquandles(q in quandles(), pick in subsequence((0..8).collect::<Vec<usize>>(), 0..=8)) {
        let orbits = q.props().orbits;
        let chosen: Vec<usize> = pick
            .iter()
            .filter(|&&i| i < orbits.len())
            .flat_map(|&i| orbits[i].clone())
            .collect();
        for &x in &chosen {
            for &y in &chosen {
                prop_assert!(chosen.contains(&q.op(x, y)));
            }
        }
    }
}
