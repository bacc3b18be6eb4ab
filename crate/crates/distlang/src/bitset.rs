//! A small dynamically sized bit set used for subset constructions.
//!
//! The width is fixed at construction from the universe size, so equal
//! subsets of the same universe always compare and hash identically.

/// A set of state indices backed by `u64` blocks.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct StateSet {
    blocks: Vec<u64>,
}

#[allow(dead_code)] // small utility surface; not every op is used yet

impl StateSet {
    pub fn empty(universe: usize) -> Self {
        StateSet {
            blocks: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self::empty(universe);
        for q in 0..universe {
            set.insert(q);
        }
        set
    }

    pub fn from_iter(universe: usize, items: impl IntoIterator<Item = usize>) -> Self {
        let mut set = Self::empty(universe);
        for q in items {
            set.insert(q);
        }
        set
    }

    pub fn insert(&mut self, q: usize) {
        self.blocks[q / 64] |= 1u64 << (q % 64);
    }

    pub fn contains(&self, q: usize) -> bool {
        self.blocks
            .get(q / 64)
            .is_some_and(|b| b & (1u64 << (q % 64)) != 0)
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    /// Ascending iteration over members.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(i, &block)| {
            (0..64).filter_map(move |bit| {
                if block & (1u64 << bit) != 0 {
                    Some(i * 64 + bit)
                } else {
                    None
                }
            })
        })
    }
}

impl std::fmt::Debug for StateSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_contains_iter() {
        let mut s = StateSet::empty(100);
        s.insert(0);
        s.insert(63);
        s.insert(64);
        s.insert(99);
        assert!(s.contains(63) && s.contains(64));
        assert!(!s.contains(1));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 63, 64, 99]);
        assert_eq!(s.len(), 4);
    }

    #[test]
    fn equal_subsets_hash_equal() {
        let a = StateSet::from_iter(70, [3, 65]);
        let b = StateSet::from_iter(70, [65, 3]);
        assert_eq!(a, b);
        assert!(!StateSet::full(70).is_empty());
    }
}
