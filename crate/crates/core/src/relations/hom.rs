use std::collections::HashMap;

use crate::concept::{Concept, Dialect};
use crate::error::Result;
use crate::interpretation::{canonical_model, el_bot_satisfiable, Interpretation, PointedInterpretation};

/// Whether a homomorphism maps the tree `src` into `tgt`, point to point.
pub fn homomorphism_exists(src: &PointedInterpretation, tgt: &PointedInterpretation) -> Result<bool> {
    src.require_tree()?;
    let mut memo = HashMap::new();
    Ok(maps_into(
        src.interpretation(),
        src.point(),
        tgt.interpretation(),
        tgt.point(),
        &mut memo,
    ))
}

fn maps_into(
    src: &Interpretation,
    x: usize,
    tgt: &Interpretation,
    y: usize,
    memo: &mut HashMap<(usize, usize), bool>,
) -> bool {
    if let Some(&known) = memo.get(&(x, y)) {
        return known;
    }
    let labels_ok = src.labels(x).all(|a| tgt.has_label(a, y));
    let result = labels_ok
        && src.successors(x).collect::<Vec<_>>().into_iter().all(|(r, x2)| {
            tgt.role_successors(r, y)
                .collect::<Vec<_>>()
                .into_iter()
                .any(|y2| maps_into(src, x2, tgt, y2, memo))
        });
    memo.insert((x, y), result);
    result
}

/// Subsumption `c ⊑ d` between EL⊥ concepts, via a homomorphism from the
/// canonical model of `d` into that of `c`. Unsatisfiable arguments are
/// handled directly.
pub fn el_subsumes(c: &Concept, d: &Concept) -> Result<bool> {
    crate::interpretation::require_dialect(c, Dialect::ElBot)?;
    crate::interpretation::require_dialect(d, Dialect::ElBot)?;
    if !el_bot_satisfiable(c)? {
        return Ok(true);
    }
    if !el_bot_satisfiable(d)? {
        return Ok(false);
    }
    homomorphism_exists(&canonical_model(d)?, &canonical_model(c)?)
}
