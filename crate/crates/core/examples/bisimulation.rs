//! Bisimulation, k-bisimulation and unfolding on chains and loops.

use model_change::interpretation::{chain_model, unfold};
use model_change::relations::{bisimilar, k_bisimilar};
use model_change::{Interpretation, PointedInterpretation, Signature};

fn main() -> model_change::Result<()> {
    let sig = Signature::new(Vec::<String>::new(), ["r"])?;
    let mut looped = Interpretation::new(["d"])?;
    looped.add_edge("r", "d", "d")?;
    let looped = PointedInterpretation::new(looped, "d")?;

    for n in 1..=4 {
        let chain = chain_model(n, "r");
        let k = (0..=n + 1)
            .take_while(|&k| k_bisimilar(&looped, &chain, k))
            .last();
        println!(
            "loop vs chain of length {n}: bisimilar {}, k-bisimilar up to k = {}",
            bisimilar(&looped, &chain, &sig).is_some(),
            k.map_or("none".into(), |k| k.to_string()),
        );
    }

    let unfolded = unfold(&looped, 3);
    println!(
        "unfolding to depth 3 has {} elements",
        unfolded.interpretation().len()
    );
    println!(
        "it is 3-bisimilar to the chain of length 3: {}",
        k_bisimilar(&unfolded, &chain_model(3, "r"), 3)
    );
    if let Some(z) = bisimilar(&unfolded, &chain_model(3, "r"), &sig) {
        println!("and bisimilar, via {} pairs", z.len());
    }
    Ok(())
}
