//! EL⊥ reception through least common subsumers, and why composing
//! reception and eviction is not revision.

use model_change::change::{el_lcs, el_receive, revise_alc, ChangeRequest};
use model_change::scenarios::{
    evict_then_receive, one_name_signature, receive_then_evict, revision_pair, short_chains,
};
use model_change::{model_check, Concept};

fn main() -> model_change::Result<()> {
    let lcs = el_lcs(
        &"A and exists r.(A and B)".parse()?,
        &"B and exists r.(A and exists r.top)".parse()?,
    )?;
    println!("lcs: {lcs}");

    let (one_edge, _) = short_chains();
    let r3 = Concept::exists_chain("r", 3, Concept::Top);
    println!(
        "receive the one-edge chain into {r3}: {}",
        el_receive(&r3, &[one_edge])?
    );

    let base: Concept = "exists r.top".parse()?;
    let (plus, minus) = revision_pair();
    let request = ChangeRequest::new(
        base.clone(),
        one_name_signature(),
        vec![plus.clone()],
        vec![minus.clone()],
    )?;
    let report = |label: &str, c: &Concept| {
        println!(
            "{label}: {c}\n  keeps the positive: {}, drops the negative: {}",
            model_check(&plus, c),
            !model_check(&minus, c)
        )
    };
    report("revise", &revise_alc(&request)?);
    report(
        "evict then receive",
        &evict_then_receive(
            &base,
            std::slice::from_ref(&plus),
            std::slice::from_ref(&minus),
            "r",
        )?,
    );
    report(
        "receive then evict",
        &receive_then_evict(
            &base,
            std::slice::from_ref(&plus),
            std::slice::from_ref(&minus),
            "r",
        )?,
    );
    Ok(())
}
