use std::collections::HashMap;

use crate::concept::Concept;
use crate::error::{Error, Result};
use crate::interpretation::{canonical_model, model_check, Interpretation, PointedInterpretation};
use crate::signature::Signature;

use super::ModelSet;

/// Bounds on universe construction.
///
/// The default caps the signature at two concept names and one role name,
/// the depth at two and the class count at 4096. [`UniverseLimits::budget`]
/// lifts the caps and keeps only the class-count limit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UniverseLimits {
    pub max_concept_names: usize,
    pub max_role_names: usize,
    pub max_depth: usize,
    pub max_classes: usize,
}

pub const DEFAULT_CLASS_BUDGET: usize = 4096;

impl Default for UniverseLimits {
    fn default() -> Self {
        UniverseLimits {
            max_concept_names: 2,
            max_role_names: 1,
            max_depth: 2,
            max_classes: DEFAULT_CLASS_BUDGET,
        }
    }
}

impl UniverseLimits {
    pub fn budget(max_classes: usize) -> Self {
        UniverseLimits {
            max_concept_names: usize::MAX,
            max_role_names: usize::MAX,
            max_depth: usize::MAX,
            max_classes,
        }
    }
}

/// Number of `k`-bisimulation classes of trees of depth at most `k`:
/// `T₀ = 2^nc`, `Tᵢ₊₁ = 2^nc · (2^Tᵢ)^nr`. `None` when it exceeds `u128`.
pub fn class_count(concept_names: usize, role_names: usize, k: usize) -> Option<u128> {
    let pow2 = |e: u128| (e < 127).then(|| 1u128 << e);
    let labels = pow2(concept_names as u128)?;
    let mut count = labels;
    for _ in 0..k {
        if role_names == 0 {
            break;
        }
        let exponent = count.checked_mul(role_names as u128)?;
        count = labels.checked_mul(pow2(exponent)?)?;
    }
    Some(count)
}

// labels as a bitmask over concept-name positions, children as sorted class
// indices of the level below, one list per role
type ClassKey = (u32, Vec<Vec<usize>>);

/// One representative per bisimulation class of trees of depth at most `k`
/// over a finite signature.
///
/// Two trees of depth at most `k` are bisimilar iff they are
/// `k`-bisimilar, so the classes are exactly the `k`-types, built level by
/// level: a level-`j` class is a label set plus, per role, a set of
/// level-`(j-1)` classes.
#[derive(Clone, Debug)]
pub struct FiniteUniverse {
    sig: Signature,
    depth: usize,
    concept_names: Vec<String>,
    role_names: Vec<String>,
    levels: Vec<Vec<ClassKey>>,
    index: Vec<HashMap<ClassKey, usize>>,
    descriptions: Vec<Concept>,
    models: Vec<PointedInterpretation>,
    /// per model and role, the universe indices of its successors' classes
    successors: Vec<Vec<Vec<usize>>>,
}

/// [`FiniteUniverse::new`] with default limits.
pub fn enumerate_universe(sig: &Signature, k: usize) -> Result<FiniteUniverse> {
    FiniteUniverse::new(sig, k, &UniverseLimits::default())
}

impl FiniteUniverse {
    pub fn new(sig: &Signature, k: usize, limits: &UniverseLimits) -> Result<Self> {
        let nc = sig.concept_names().len();
        let nr = sig.role_names().len();
        if nc > limits.max_concept_names || nr > limits.max_role_names || k > limits.max_depth {
            return Err(Error::Fragment(format!(
                "universe over {sig} at depth {k} exceeds the default caps \
                 ({} concept names, {} role names, depth {}); pass an explicit budget",
                limits.max_concept_names, limits.max_role_names, limits.max_depth
            )));
        }
        let count = class_count(nc, nr, k);
        match count {
            Some(n) if n <= limits.max_classes as u128 => {}
            Some(n) => {
                return Err(Error::Budget {
                    count: n.to_string(),
                    limit: limits.max_classes,
                })
            }
            None => {
                return Err(Error::Budget {
                    count: "more than 2^128".into(),
                    limit: limits.max_classes,
                })
            }
        }

        let concept_names: Vec<String> = sig.concept_names().iter().cloned().collect();
        let role_names: Vec<String> = sig.role_names().iter().cloned().collect();
        let mut levels: Vec<Vec<ClassKey>> = Vec::with_capacity(k + 1);
        for j in 0..=k {
            let below = if j == 0 { 0 } else { levels[j - 1].len() };
            let per_role = if j == 0 || nr == 0 { 1u64 } else { 1u64 << below };
            let combos = per_role.pow(nr as u32);
            let mut classes = Vec::new();
            for labels in 0..(1u32 << nc) {
                for combo in 0..combos {
                    let mut rest = combo;
                    let mut children = Vec::with_capacity(nr);
                    for _ in 0..nr {
                        let mask = rest % per_role;
                        rest /= per_role;
                        children.push((0..below).filter(|i| mask >> i & 1 == 1).collect());
                    }
                    if j == 0 {
                        children.iter_mut().for_each(Vec::clear);
                    }
                    classes.push((labels, children));
                }
            }
            levels.push(classes);
        }
        let index = levels
            .iter()
            .map(|classes| {
                classes
                    .iter()
                    .cloned()
                    .enumerate()
                    .map(|(i, key)| (key, i))
                    .collect()
            })
            .collect();

        let mut universe = FiniteUniverse {
            sig: sig.clone(),
            depth: k,
            concept_names,
            role_names,
            levels,
            index,
            descriptions: Vec::new(),
            models: Vec::new(),
            successors: Vec::new(),
        };
        let mut memo = HashMap::new();
        let top = universe.levels[k].len();
        for i in 0..top {
            let description = universe.describe(k, i, &mut memo);
            let mut model = canonical_model(&description).expect("class descriptions are EL");
            universe.declare_signature(&mut model);
            universe.models.push(model);
            universe.descriptions.push(description);
        }
        universe.successors = (0..top)
            .map(|i| {
                let (_, children) = &universe.levels[k][i];
                children
                    .iter()
                    .map(|cs| {
                        let mut lifted: Vec<usize> = cs.iter().map(|&c| universe.lift(k - 1, c)).collect();
                        lifted.sort_unstable();
                        lifted
                    })
                    .collect()
            })
            .collect();
        Ok(universe)
    }

    fn declare_signature(&self, model: &mut PointedInterpretation) {
        let point = model.point();
        let mut interp: Interpretation = model.interpretation().clone();
        self.concept_names.iter().for_each(|a| interp.declare_concept(a));
        self.role_names.iter().for_each(|r| interp.declare_role(r));
        *model = PointedInterpretation::from_index(interp, point);
    }

    /// EL concept whose canonical model represents class `i` of level `j`.
    fn describe(&self, j: usize, i: usize, memo: &mut HashMap<(usize, usize), Concept>) -> Concept {
        if let Some(c) = memo.get(&(j, i)) {
            return c.clone();
        }
        let (labels, children) = &self.levels[j][i];
        let mut conjuncts: Vec<Concept> = self
            .concept_names
            .iter()
            .enumerate()
            .filter(|(a, _)| labels >> a & 1 == 1)
            .map(|(_, name)| Concept::name(name.as_str()))
            .collect();
        for (role, cs) in self.role_names.iter().zip(children) {
            for &c in cs {
                conjuncts.push(Concept::exists(role.as_str(), self.describe(j - 1, c, memo)));
            }
        }
        let c = Concept::and(conjuncts);
        memo.insert((j, i), c.clone());
        c
    }

    /// The level-`(j+1)` class of the tree represented by class `i` of level `j`.
    fn lift(&self, j: usize, i: usize) -> usize {
        let (labels, children) = &self.levels[j][i];
        let children = if j == 0 {
            vec![Vec::new(); self.role_names.len()]
        } else {
            children
                .iter()
                .map(|cs| {
                    let mut up: Vec<usize> = cs.iter().map(|&c| self.lift(j - 1, c)).collect();
                    up.sort_unstable();
                    up.dedup();
                    up
                })
                .collect()
        };
        self.index[j + 1][&(*labels, children)]
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn len(&self) -> usize {
        self.models.len()
    }

    pub fn is_empty(&self) -> bool {
        self.models.is_empty()
    }

    pub fn models(&self) -> &[PointedInterpretation] {
        &self.models
    }

    pub fn model(&self, i: usize) -> &PointedInterpretation {
        &self.models[i]
    }

    /// The EL concept whose canonical model is representative `i`.
    pub fn description(&self, i: usize) -> &Concept {
        &self.descriptions[i]
    }

    /// Universe indices of the successor classes of representative `i`,
    /// one list per role in signature order.
    pub fn successor_classes(&self, i: usize) -> &[Vec<usize>] {
        &self.successors[i]
    }

    pub fn empty_set(&self) -> ModelSet {
        ModelSet::empty(self.len())
    }

    pub fn full_set(&self) -> ModelSet {
        ModelSet::full(self.len())
    }

    /// The representative index of the `k`-type of any pointed
    /// interpretation; names outside the signature are ignored.
    pub fn k_type(&self, pi: &PointedInterpretation) -> usize {
        self.type_at(pi.interpretation(), pi.point(), self.depth)
    }

    fn type_at(&self, interp: &Interpretation, e: usize, j: usize) -> usize {
        let labels = self
            .concept_names
            .iter()
            .enumerate()
            .filter(|(_, a)| interp.has_label(a, e))
            .fold(0u32, |acc, (i, _)| acc | 1 << i);
        let children = self
            .role_names
            .iter()
            .map(|r| {
                if j == 0 {
                    return Vec::new();
                }
                let mut cs: Vec<usize> = interp
                    .role_successors(r, e)
                    .map(|c| self.type_at(interp, c, j - 1))
                    .collect();
                cs.sort_unstable();
                cs.dedup();
                cs
            })
            .collect();
        self.index[j][&(labels, children)]
    }

    /// The representative bisimilar to `pi`, which must be a tree of depth
    /// at most `k` over the universe's signature.
    pub fn class_of(&self, pi: &PointedInterpretation) -> Result<usize> {
        pi.interpretation().check_signature(&self.sig)?;
        let depth = pi.tree_depth()?;
        if depth > self.depth {
            return Err(Error::Fragment(format!(
                "model of depth {depth} lies outside the depth-{} universe",
                self.depth
            )));
        }
        Ok(self.k_type(pi))
    }

    /// The set of representatives of the given models.
    pub fn set_of(&self, models: &[PointedInterpretation]) -> Result<ModelSet> {
        let mut set = self.empty_set();
        for pi in models {
            set.insert(self.class_of(pi)?);
        }
        Ok(set)
    }
}

/// Representatives satisfying `c`.
///
/// Every concept over the universe's signature is accepted: the universe is
/// read as the satisfaction system whose models are the bisimulation classes
/// of depth-bounded trees, so concepts deeper than the bound are evaluated
/// on the representatives directly.
pub fn mod_set(c: &Concept, u: &FiniteUniverse) -> Result<ModelSet> {
    u.sig.check_concept(c)?;
    Ok(ModelSet::from_indices(
        u.len(),
        (0..u.len()).filter(|&i| model_check(&u.models[i], c)),
    ))
}
