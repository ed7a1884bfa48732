use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

/// A set of universe models, as a membership bitmask over model indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModelSet {
    bits: FixedBitSet,
}

impl ModelSet {
    pub fn empty(size: usize) -> Self {
        ModelSet {
            bits: FixedBitSet::with_capacity(size),
        }
    }

    pub fn full(size: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(size);
        bits.insert_range(..);
        ModelSet { bits }
    }

    pub fn from_indices(size: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut set = ModelSet::empty(size);
        indices.into_iter().for_each(|i| set.insert(i));
        set
    }

    pub(crate) fn from_bits(bits: FixedBitSet) -> Self {
        ModelSet { bits }
    }

    /// The set whose membership vector is the low `size` bits of `mask`.
    pub fn from_mask(size: usize, mask: u64) -> Self {
        ModelSet::from_indices(size, (0..size).filter(|i| mask >> i & 1 == 1))
    }

    /// Size of the universe the set lives in.
    pub fn universe_size(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits.contains(i)
    }

    pub fn insert(&mut self, i: usize) {
        self.bits.insert(i);
    }

    pub fn remove(&mut self, i: usize) {
        self.bits.set(i, false);
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn is_subset(&self, other: &ModelSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_proper_subset(&self, other: &ModelSet) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn is_disjoint(&self, other: &ModelSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn union(&self, other: &ModelSet) -> ModelSet {
        ModelSet::from_bits(&self.bits | &other.bits)
    }

    pub fn intersection(&self, other: &ModelSet) -> ModelSet {
        ModelSet::from_bits(&self.bits & &other.bits)
    }

    pub fn difference(&self, other: &ModelSet) -> ModelSet {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        ModelSet::from_bits(bits)
    }

    pub fn symmetric_difference(&self, other: &ModelSet) -> ModelSet {
        ModelSet::from_bits(&self.bits ^ &other.bits)
    }

    pub fn complement(&self) -> ModelSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        ModelSet::from_bits(bits)
    }

    /// Lexicographic order of membership vectors, model 0 first, absent
    /// before present.
    pub fn cmp_lex(&self, other: &ModelSet) -> Ordering {
        let diff = &self.bits ^ &other.bits;
        match diff.minimum() {
            None => self.bits.len().cmp(&other.bits.len()),
            Some(i) if other.bits.contains(i) => Ordering::Less,
            Some(_) => Ordering::Greater,
        }
    }

    /// Membership vector as a string of `0`/`1`, model 0 first.
    pub fn to_bit_string(&self) -> String {
        (0..self.bits.len())
            .map(|i| if self.bits.contains(i) { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Display for ModelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", items.join(", "))
    }
}
