use crate::concept::Concept;
use crate::signature::Signature;

/// EL concepts over `sig` of depth at most `depth`, syntactically.
///
/// A concept is a set of concept names plus a set of existential
/// restrictions `∃r.C` with `C` from the level below. `max_existentials`
/// bounds the number of existential conjuncts per node; without a bound the
/// count grows doubly exponentially with the depth. Conjunctions are built
/// with [`Concept::and`], so each concept appears once.
pub fn el_concepts(sig: &Signature, depth: usize, max_existentials: Option<usize>) -> Vec<Concept> {
    let names: Vec<&String> = sig.concept_names().iter().collect();
    let atom_sets: Vec<Vec<Concept>> = (0..1usize << names.len())
        .map(|mask| {
            names
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, a)| Concept::name(a.as_str()))
                .collect()
        })
        .collect();
    let mut level: Vec<Concept> = atom_sets
        .iter()
        .map(|atoms| Concept::and(atoms.clone()))
        .collect();
    for _ in 0..depth {
        let restrictions: Vec<Concept> = sig
            .role_names()
            .iter()
            .flat_map(|r| level.iter().map(move |c| Concept::exists(r.as_str(), c.clone())))
            .collect();
        let limit = max_existentials
            .unwrap_or(restrictions.len())
            .min(restrictions.len());
        let mut groups: Vec<Vec<Concept>> = Vec::new();
        for size in 0..=limit {
            combinations(&restrictions, size, &mut Vec::new(), 0, &mut groups);
        }
        let mut next = Vec::with_capacity(atom_sets.len() * groups.len());
        for atoms in &atom_sets {
            for group in &groups {
                next.push(Concept::and(atoms.iter().cloned().chain(group.iter().cloned())));
            }
        }
        level = next;
    }
    level
}

fn combinations(
    items: &[Concept],
    size: usize,
    current: &mut Vec<Concept>,
    from: usize,
    out: &mut Vec<Vec<Concept>>,
) {
    if current.len() == size {
        out.push(current.clone());
        return;
    }
    for i in from..items.len() {
        if items.len() - i < size - current.len() {
            break;
        }
        current.push(items[i].clone());
        combinations(items, size, current, i + 1, out);
        current.pop();
    }
}
