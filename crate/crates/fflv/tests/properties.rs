//! Randomized structural properties of the segment-family machinery.

use fflv::perm::PermA;
use fflv::polytope_a::contains_a;
use fflv::segments::{family_of_perm, is_intersection_closed, perm_of_family, tight_point};
use fflv::weights::WeightA;
use proptest::prelude::*;

fn random_perm(max_n: usize) -> impl Strategy<Value = PermA> {
    (2usize..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|images| PermA::from_images(images).unwrap())
}

fn weight_pair_with_perm() -> impl Strategy<Value = (WeightA, WeightA, PermA)> {
    (2usize..=4).prop_flat_map(|n| {
        (
            proptest::collection::vec(0i64..=3, n - 1),
            proptest::collection::vec(0i64..=3, n - 1),
            Just((1..=n).collect::<Vec<_>>()).prop_shuffle(),
        )
            .prop_map(|(a, b, images)| {
                (
                    WeightA::new(a).unwrap(),
                    WeightA::new(b).unwrap(),
                    PermA::from_images(images).unwrap(),
                )
            })
    })
}

proptest! {
    // The exhaustive check in the acceptance suite stops at rank 6; sampling
    // extends the round trip to ranks 7 and 8.
    #[test]
    fn family_permutation_round_trip(w in random_perm(8)) {
        let family = family_of_perm(&w);
        prop_assert!(is_intersection_closed(&family));
        let back = perm_of_family(&family, w.n()).unwrap();
        prop_assert_eq!(back, w);
    }

    // The tightness equations are linear in the weight, so the solved point
    // must be additive; a drifting pivot choice in the solver would break it.
    #[test]
    fn tight_points_are_additive_in_the_weight((lambda, mu, w) in weight_pair_with_perm()) {
        let family = family_of_perm(&w);
        let x_l = tight_point(&lambda, &family).unwrap();
        let x_m = tight_point(&mu, &family).unwrap();

        let combined: Vec<i64> = lambda
            .coords()
            .iter()
            .zip(mu.coords())
            .map(|(a, b)| a + b)
            .collect();
        let x_sum = tight_point(&WeightA::new(combined).unwrap(), &family).unwrap();

        for (entry, (l, m)) in x_sum
            .entries()
            .iter()
            .zip(x_l.entries().iter().zip(x_m.entries()))
        {
            prop_assert_eq!(entry.clone(), l.clone() + m.clone());
        }
        prop_assert!(contains_a(&lambda, &x_l).unwrap());
    }
}
