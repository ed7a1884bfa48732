//! The finite-universe oracle: k-types, model sets, representable families
//! and postulate checks.

use model_change::change::receive_alc;
use model_change::oracle::{
    check_postulates, class_count, enumerate_universe, min_fr_sups, mod_set, FrFamily, Operation, Run,
};
use model_change::{Concept, Signature};

fn main() -> model_change::Result<()> {
    let sig = Signature::new(["A"], ["r"])?;
    let u = enumerate_universe(&sig, 1)?;
    println!(
        "{} classes at depth 1 (expected {:?})",
        u.len(),
        class_count(1, 1, 1)
    );
    for i in 0..u.len() {
        println!("  {i}: {}", u.description(i));
    }

    let u = enumerate_universe(&sig, 2)?;
    let el = FrFamily::el(&u, 2, true);
    println!(
        "depth 2: {} classes, {:?} EL-representable sets",
        u.len(),
        el.len()
    );

    let odd = mod_set(&"A and not exists r.A".parse()?, &u)?;
    let sups = min_fr_sups(&odd, &el);
    for s in &sups {
        println!(
            "least EL superset of mod(A and not exists r.A): {}",
            el.witness(s).unwrap()
        );
    }

    let base: Concept = "exists r.A".parse()?;
    let newcomer = u.model(u.len() - 1).clone();
    let output = receive_alc(&base, std::slice::from_ref(&newcomer), &sig)?;
    let run = Run {
        base: mod_set(&base, &u)?,
        positives: u.set_of(&[newcomer])?,
        negatives: u.empty_set(),
        output: mod_set(&output, &u)?,
    };
    for verdict in check_postulates(Operation::Reception, &run, &FrFamily::alc(&u)) {
        println!("{}", verdict.to_json(&u));
    }
    Ok(())
}
