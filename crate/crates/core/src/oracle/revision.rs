use crate::error::{Error, Result};

use super::{max_fr_subs, min_fr_sups, FrFamily, ModelSet};

/// Members of `fr` containing `mplus` and disjoint from `mminus` that are
/// closest to `b`: no other candidate `Y'` has `b ⊕ Y' ⊂ b ⊕ Y`. Sorted in
/// lexicographic order.
pub fn chi_min(b: &ModelSet, mplus: &ModelSet, mminus: &ModelSet, fr: &FrFamily) -> Result<Vec<ModelSet>> {
    if !mplus.is_disjoint(mminus) {
        return Err(Error::Realizability(
            "the same model is both to be incorporated and to be removed".into(),
        ));
    }
    match fr {
        // every subset is a candidate; (b ∪ M⁺) \ M⁻ differs from b only
        // where it must
        FrFamily::AllSubsets { .. } => Ok(vec![b.union(mplus).difference(mminus)]),
        FrFamily::Explicit { sets, .. } => {
            let candidates: Vec<&ModelSet> = sets
                .iter()
                .filter(|y| mplus.is_subset(y) && y.is_disjoint(mminus))
                .collect();
            if candidates.is_empty() {
                return Err(Error::Realizability(
                    "no finitely representable set contains every model to incorporate \
                     and avoids every model to remove"
                        .into(),
                ));
            }
            let distances: Vec<ModelSet> = candidates.iter().map(|y| b.symmetric_difference(y)).collect();
            let mut minima: Vec<ModelSet> = candidates
                .iter()
                .zip(&distances)
                .filter(|(_, d)| !distances.iter().any(|e| e.is_proper_subset(d)))
                .map(|(y, _)| (*y).clone())
                .collect();
            minima.sort_by(ModelSet::cmp_lex);
            minima.dedup();
            Ok(minima)
        }
    }
}

/// The choice among minima: the lexicographically least membership vector.
pub fn sel(minima: &[ModelSet]) -> Option<&ModelSet> {
    minima.iter().min_by(|a, b| a.cmp_lex(b))
}

/// Which branch of the symmetric-differential construction applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RevisionCase {
    /// Every model to incorporate is already a model of the base.
    PositivesInBase,
    /// Not case one, and no model to remove is a model of the base.
    NegativesOutsideBase,
    General,
}

impl RevisionCase {
    pub fn as_str(self) -> &'static str {
        match self {
            RevisionCase::PositivesInBase => "i",
            RevisionCase::NegativesOutsideBase => "ii",
            RevisionCase::General => "iii",
        }
    }
}

/// The case of the construction and its candidate minima.
pub fn symmetric_differential_minima(
    b: &ModelSet,
    mplus: &ModelSet,
    mminus: &ModelSet,
    fr: &FrFamily,
) -> Result<(RevisionCase, Vec<ModelSet>)> {
    if mplus.is_subset(b) {
        let outside = mminus.union(&b.complement());
        Ok((RevisionCase::PositivesInBase, chi_min(b, mplus, &outside, fr)?))
    } else if mminus.is_disjoint(b) {
        Ok((
            RevisionCase::NegativesOutsideBase,
            chi_min(b, &mplus.union(b), mminus, fr)?,
        ))
    } else {
        Ok((RevisionCase::General, chi_min(b, mplus, mminus, fr)?))
    }
}

/// Symmetric-differential revision of the model set `b`: in case one only
/// removals are allowed, in case two only additions, otherwise the plain
/// closest candidates; ties are broken by [`sel`].
pub fn symmetric_differential_revise(
    b: &ModelSet,
    mplus: &ModelSet,
    mminus: &ModelSet,
    fr: &FrFamily,
) -> Result<(RevisionCase, ModelSet)> {
    let (case, minima) = symmetric_differential_minima(b, mplus, mminus, fr)?;
    let chosen = sel(&minima)
        .cloned()
        .ok_or_else(|| Error::Realizability(format!("no candidate in case ({})", case.as_str())))?;
    Ok((case, chosen))
}

/// Naive revision: [`sel`] of [`chi_min`].
pub fn naive_revise(b: &ModelSet, mplus: &ModelSet, mminus: &ModelSet, fr: &FrFamily) -> Result<ModelSet> {
    let minima = chi_min(b, mplus, mminus, fr)?;
    Ok(sel(&minima).cloned().expect("chi_min is non-empty on success"))
}

/// Reception within the fragment: a least representable superset of
/// `b ∪ m`, if one exists.
pub fn bounded_receive(b: &ModelSet, m: &ModelSet, fr: &FrFamily) -> Option<ModelSet> {
    sel(&min_fr_sups(&b.union(m), fr)).cloned()
}

/// Eviction within the fragment: a greatest representable subset of
/// `b \ m`, if one exists.
pub fn bounded_evict(b: &ModelSet, m: &ModelSet, fr: &FrFamily) -> Option<ModelSet> {
    sel(&max_fr_subs(&b.difference(m), fr)).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::concept::Concept;
    use crate::interpretation::{Interpretation, PointedInterpretation};
    use crate::oracle::{mod_set, FiniteUniverse, UniverseLimits};
    use crate::signature::Signature;

    fn point(labels: &[&str]) -> PointedInterpretation {
        let mut i = Interpretation::new(["d"]).unwrap();
        labels.iter().for_each(|a| i.add_concept(a, "d").unwrap());
        PointedInterpretation::new(i, "d").unwrap()
    }

    #[test]
    fn lethargy_returns_base() {
        let fr = FrFamily::AllSubsets { size: 4 };
        let b = ModelSet::from_indices(4, [0, 1]);
        let (case, got) = symmetric_differential_revise(
            &b,
            &ModelSet::from_indices(4, [1]),
            &ModelSet::from_indices(4, [3]),
            &fr,
        )
        .unwrap();
        assert_eq!(case, RevisionCase::PositivesInBase);
        assert_eq!(got, b);
    }

    #[test]
    fn all_subsets_closed_form() {
        let fr = FrFamily::AllSubsets { size: 4 };
        let b = ModelSet::from_indices(4, [0, 1]);
        let plus = ModelSet::from_indices(4, [2]);
        let minus = ModelSet::from_indices(4, [0]);
        let (_, got) = symmetric_differential_revise(&b, &plus, &minus, &fr).unwrap();
        assert_eq!(got, ModelSet::from_indices(4, [1, 2]));
        assert!(chi_min(&b, &plus, &plus, &fr).is_err());
    }

    #[test]
    fn single_point_el_example() {
        let sig = Signature::new(["A", "B", "C"], ["r"]).unwrap();
        let u = FiniteUniverse::new(&sig, 0, &UniverseLimits::budget(8)).unwrap();
        let fr = FrFamily::el(&u, 2, true);
        let c = |t: &str| -> Concept { t.parse().unwrap() };
        let b = mod_set(&c("B and C"), &u).unwrap();
        let plus = u.set_of(&[point(&["A", "C"])]).unwrap();
        let minus = u.set_of(&[point(&[])]).unwrap();
        let i4 = u.class_of(&point(&["B", "C"])).unwrap();

        let (case, got) = symmetric_differential_revise(&b, &plus, &minus, &fr).unwrap();
        assert_eq!(case, RevisionCase::NegativesOutsideBase);
        assert_eq!(got, mod_set(&c("C"), &u).unwrap());

        let naive = chi_min(&b, &plus, &minus, &fr).unwrap();
        assert!(naive.contains(&mod_set(&c("A and C"), &u).unwrap()));
        assert!(naive.iter().any(|y| !y.contains(i4)));
    }
}
