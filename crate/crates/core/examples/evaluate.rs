//! Parse a concept and evaluate it on pointed interpretations loaded from JSON.

use model_change::{model_check, parse_concept, PointedInterpretation, Signature};

fn main() -> model_change::Result<()> {
    let sig = Signature::from_json(r#"{"concepts": ["Egg", "Herbivore", "Mammal"], "roles": ["lays"]}"#)?;
    let concept = parse_concept("Mammal and exists lays.Egg", &sig)?;
    println!(
        "concept: {concept} (depth {}, {})",
        concept.depth(),
        concept.dialect()
    );

    let platypus = PointedInterpretation::from_json(
        r#"{
            "domain": ["d", "e"],
            "concepts": {"Mammal": ["d"], "Egg": ["e"]},
            "roles": {"lays": [["d", "e"]]},
            "point": "d"
        }"#,
    )?;
    println!("platypus satisfies it: {}", model_check(&platypus, &concept));

    let egg = parse_concept("exists lays.(Egg and Mammal)", &sig)?;
    println!("{egg}: {}", model_check(&platypus, &egg));
    println!("{}", platypus.to_json());
    Ok(())
}
