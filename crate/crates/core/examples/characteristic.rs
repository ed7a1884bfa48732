//! Canonical models, concepts of trees and characteristic ALC concepts.

use model_change::characteristic::dagger;
use model_change::interpretation::{canonical_model, concept_of_tree, unfold};
use model_change::oracle::enumerate_universe;
use model_change::relations::bisimilar;
use model_change::{model_check, Concept, Signature};

fn main() -> model_change::Result<()> {
    let concept: Concept = "B and exists r.(A and B)".parse()?;
    let tree = canonical_model(&concept)?;
    println!("canonical model:\n{}", tree.to_json());
    println!("back to a concept: {}", concept_of_tree(&tree)?);

    let sig = Signature::new(["A", "B"], ["r", "s"])?;
    let characteristic = dagger(&concept, &sig)?;
    println!("characteristic concept over {sig}:\n  {characteristic}");

    // over a small universe, the models of the characteristic concept are
    // exactly the trees bisimilar to the canonical model
    let small = Signature::new(["A"], ["r"])?;
    let c: Concept = "exists r.A".parse()?;
    let d = dagger(&c, &small)?;
    let canonical = canonical_model(&c)?;
    let u = enumerate_universe(&small, 2)?;
    let satisfying: Vec<usize> = (0..u.len()).filter(|&i| model_check(u.model(i), &d)).collect();
    println!("classes satisfying the characteristic concept of {c}: {satisfying:?}");
    for i in satisfying {
        let bisim = bisimilar(&unfold(u.model(i), 2), &canonical, &small).is_some();
        println!(
            "  class {i} ({}) bisimilar to the canonical model: {bisim}",
            u.description(i)
        );
    }
    Ok(())
}
