//! Subsumption by homomorphism for EL⊥ and by tableau for ALC.

use model_change::relations::{alc_entails, alc_satisfiable, el_subsumes, equivalent};
use model_change::Concept;

fn c(text: &str) -> Concept {
    text.parse().unwrap()
}

fn main() -> model_change::Result<()> {
    let pairs = [
        ("exists r.(A and B)", "exists r.A"),
        ("exists r.A", "exists r.(A and B)"),
        ("exists r.bot", "B"),
        ("A and exists r.exists r.top", "exists r.top"),
    ];
    for (sub, sup) in pairs {
        let (sub, sup) = (c(sub), c(sup));
        println!(
            "{sub} ⊑ {sup}: homomorphism {}, tableau {}",
            el_subsumes(&sub, &sup)?,
            alc_entails(&sub, &sup)
        );
    }

    let tricky = c("exists r.A and forall r.(not A or B) and forall r.not B");
    println!("{tricky} satisfiable: {}", alc_satisfiable(&tricky));
    println!(
        "forall r.A or exists r.not A is valid: {}",
        equivalent(&c("forall r.A or exists r.not A"), &Concept::Top)
    );
    Ok(())
}
