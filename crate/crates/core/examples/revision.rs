//! Symmetric-differential revision against the naive closest-candidate
//! revision over a small EL universe.

use model_change::oracle::{
    check_postulates, chi_min, mod_set, naive_revise, symmetric_differential_revise, FiniteUniverse,
    FrFamily, Operation, Run, UniverseLimits,
};
use model_change::scenarios::{single_points, three_name_signature};

fn main() -> model_change::Result<()> {
    let u = FiniteUniverse::new(&three_name_signature(), 0, &UniverseLimits::budget(8))?;
    let fr = FrFamily::el(&u, 2, true);
    let [p1, p2, _, _] = single_points();
    let base = mod_set(&"B and C".parse()?, &u)?;
    let plus = u.set_of(&[p1])?;
    let minus = u.set_of(&[p2])?;

    let (case, revised) = symmetric_differential_revise(&base, &plus, &minus, &fr)?;
    println!(
        "symmetric-differential, case ({}): {}",
        case.as_str(),
        fr.witness(&revised).unwrap()
    );
    for m in chi_min(&base, &plus, &minus, &fr)? {
        println!("closest candidate: {}", fr.witness(&m).unwrap());
    }
    let naive = naive_revise(&base, &plus, &minus, &fr)?;
    println!("naive choice: {}", fr.witness(&naive).unwrap());

    for (label, output) in [("symmetric-differential", revised), ("naive", naive)] {
        let run = Run {
            base: base.clone(),
            positives: plus.clone(),
            negatives: minus.clone(),
            output,
        };
        let failed: Vec<_> = check_postulates(Operation::Revision, &run, &fr)
            .into_iter()
            .filter(|v| !v.pass)
            .map(|v| v.postulate.as_str())
            .collect();
        println!("{label} violates: {failed:?}");
    }
    Ok(())
}
