mod common;

use common::{c, random_el, random_graph, random_tree, sig};
use model_change::characteristic::{dagger, dagger_of_tree};
use model_change::interpretation::{canonical_model, unfold};
use model_change::relations::{alc_satisfiable, bisimilar, equivalent};
use model_change::{model_check, Error};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn models_of_the_dagger_are_the_bisimilar_ones() {
    let s = sig(&["A", "B"], &["r"]);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..60 {
        let tree = random_tree(&mut rng, &s, 2, 2);
        let d = dagger_of_tree(&tree, &s).unwrap();
        assert!(model_check(&tree, &d));
        for _ in 0..20 {
            let other = random_graph(&mut rng, &s, 3);
            let expected = bisimilar(&tree, &other, &s).is_some();
            assert_eq!(model_check(&other, &d), expected, "{d}");
        }
        // some copies of the tree are bisimilar without being isomorphic
        let unfolded = unfold(&tree, 3);
        assert!(model_check(&unfolded, &d));
    }
}

#[test]
fn dagger_of_concept_matches_dagger_of_its_canonical_model() {
    let s = sig(&["A", "B"], &["r", "s"]);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let concept = random_el(&mut rng, &s, 2, false);
        let d = dagger(&concept, &s).unwrap();
        assert!(alc_satisfiable(&d));
        assert!(equivalent(
            &d,
            &dagger_of_tree(&canonical_model(&concept).unwrap(), &s).unwrap()
        ));
        assert!(model_check(&canonical_model(&concept).unwrap(), &d));
    }
}

#[test]
fn dagger_rejects_bad_input() {
    let s = sig(&["A"], &["r"]);
    assert!(matches!(dagger(&c("not A"), &s), Err(Error::Dialect { .. })));
    assert!(matches!(
        dagger(&c("exists r.bot"), &s),
        Err(Error::Unsatisfiable(_))
    ));
    assert!(matches!(dagger(&c("B"), &s), Err(Error::UndeclaredName { .. })));
}
