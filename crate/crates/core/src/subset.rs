use std::fmt;

/// A subset of a finite universe `{0, .., len - 1}` stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    len: usize,
    words: Vec<u64>,
}

impl Subset {
    pub fn empty(len: usize) -> Self {
        Subset {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Subset::empty(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn from_elems(len: usize, elems: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Subset::empty(len);
        for e in elems {
            s.insert(e);
        }
        s
    }

    /// Subset whose members are the set bits of `mask`; `len` must be at most 64.
    pub fn from_mask(len: usize, mask: u64) -> Self {
        assert!(len <= 64);
        let mut s = Subset::empty(len);
        if len > 0 {
            let keep = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
            s.words[0] = mask & keep;
        }
        s
    }

    /// Size of the ambient universe.
    pub fn universe(&self) -> usize {
        self.len
    }

    pub fn contains(&self, e: usize) -> bool {
        e < self.len && self.words[e / 64] >> (e % 64) & 1 == 1
    }

    pub fn insert(&mut self, e: usize) -> bool {
        assert!(e < self.len, "element {e} outside universe of size {}", self.len);
        let fresh = !self.contains(e);
        self.words[e / 64] |= 1 << (e % 64);
        fresh
    }

    pub fn remove(&mut self, e: usize) {
        if e < self.len {
            self.words[e / 64] &= !(1 << (e % 64));
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.len
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &Subset) -> Subset {
        let mut s = self.clone();
        for (a, b) in s.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
        s
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        let mut s = self.clone();
        for (a, b) in s.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        s
    }

    pub fn complement(&self) -> Subset {
        let mut s = Subset::empty(self.len);
        for e in 0..self.len {
            if !self.contains(e) {
                s.insert(e);
            }
        }
        s
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&e| self.contains(e))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Ordering key: by cardinality, then by the sorted member list.
    pub fn popcount_key(&self) -> (usize, Vec<usize>) {
        (self.count(), self.to_vec())
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_set_operations() {
        let a = Subset::from_elems(70, [1, 65, 3]);
        let b = Subset::from_elems(70, [3, 4]);
        assert_eq!(a.count(), 3);
        assert!(a.contains(65));
        assert!(!a.contains(69));
        assert_eq!(a.union(&b).to_vec(), vec![1, 3, 4, 65]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3]);
        assert!(Subset::from_elems(70, [3]).is_subset(&b));
        assert_eq!(a.complement().count(), 67);
    }

    #[test]
    fn mask_roundtrip() {
        let s = Subset::from_mask(5, 0b10110);
        assert_eq!(s.to_vec(), vec![1, 2, 4]);
        assert!(Subset::full(5).is_full());
        assert!(Subset::empty(0).is_empty());
    }
}
