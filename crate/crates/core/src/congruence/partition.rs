use std::fmt;

use crate::algebra::{Elem, FiniteAlgebra};

/// An equivalence relation on `{0, .., n - 1}`.
///
/// Blocks are numbered in order of their least element, so equal relations
/// have equal representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    block_of: Vec<usize>,
    num_blocks: usize,
}

impl Partition {
    /// Builds the kernel of `key`: elements are related iff their keys agree.
    pub fn from_key<K: PartialEq>(n: usize, key: impl Fn(Elem) -> K) -> Self {
        let keys: Vec<K> = (0..n).map(&key).collect();
        let mut reps: Vec<Elem> = Vec::new();
        let mut block_of = Vec::with_capacity(n);
        for e in 0..n {
            match reps.iter().position(|&r| keys[r] == keys[e]) {
                Some(b) => block_of.push(b),
                None => {
                    block_of.push(reps.len());
                    reps.push(e);
                }
            }
        }
        Partition {
            num_blocks: reps.len(),
            block_of,
        }
    }

    /// Canonicalizes an arbitrary block labelling.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut rename = std::collections::HashMap::new();
        let block_of = labels
            .iter()
            .map(|l| {
                let next = rename.len();
                *rename.entry(*l).or_insert(next)
            })
            .collect();
        Partition {
            num_blocks: rename.len(),
            block_of,
        }
    }

    /// Builds a partition from blocks; elements not mentioned become singletons.
    pub fn from_blocks(n: usize, blocks: &[Vec<Elem>]) -> Self {
        let mut labels: Vec<usize> = (0..n).map(|e| blocks.len() + e).collect();
        for (b, block) in blocks.iter().enumerate() {
            for &e in block {
                labels[e] = b;
            }
        }
        Partition::from_labels(&labels)
    }

    pub fn identity(n: usize) -> Self {
        Partition {
            block_of: (0..n).collect(),
            num_blocks: n,
        }
    }

    pub fn total(n: usize) -> Self {
        Partition {
            block_of: vec![0; n],
            num_blocks: n.min(1),
        }
    }

    pub fn universe(&self) -> usize {
        self.block_of.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.num_blocks
    }

    pub fn block_of(&self, e: Elem) -> usize {
        self.block_of[e]
    }

    pub fn relates(&self, a: Elem, b: Elem) -> bool {
        self.block_of[a] == self.block_of[b]
    }

    pub fn is_identity(&self) -> bool {
        self.num_blocks == self.universe()
    }

    pub fn is_total(&self) -> bool {
        self.num_blocks <= 1
    }

    /// Least element of every block, in block order.
    pub fn representatives(&self) -> Vec<Elem> {
        let mut reps = vec![usize::MAX; self.num_blocks];
        for (e, &b) in self.block_of.iter().enumerate() {
            if reps[b] == usize::MAX {
                reps[b] = e;
            }
        }
        reps
    }

    /// Sorted blocks, ordered by least element.
    pub fn blocks(&self) -> Vec<Vec<Elem>> {
        let mut out = vec![Vec::new(); self.num_blocks];
        for (e, &b) in self.block_of.iter().enumerate() {
            out[b].push(e);
        }
        out
    }

    /// Whether `self ⊆ other` as relations.
    pub fn refines(&self, other: &Partition) -> bool {
        let reps = self.representatives();
        (0..self.universe()).all(|e| other.relates(e, reps[self.block_of[e]]))
    }

    /// Intersection of the two relations.
    pub fn meet(&self, other: &Partition) -> Partition {
        Partition::from_key(self.universe(), |e| (self.block_of[e], other.block_of[e]))
    }

    /// Least equivalence containing both relations.
    pub fn join(&self, other: &Partition) -> Partition {
        let n = self.universe();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for p in [self, other] {
            let reps = p.representatives();
            for e in 0..n {
                let (a, b) = (find(&mut parent, e), find(&mut parent, reps[p.block_of[e]]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let labels: Vec<usize> = (0..n).map(|e| find(&mut parent, e)).collect();
        Partition::from_labels(&labels)
    }

    /// Blocks written with the algebra's element labels, e.g. `{a,e,c},{0,d}`.
    pub fn display_with(&self, alg: &FiniteAlgebra) -> String {
        self.blocks()
            .iter()
            .map(|b| {
                let names: Vec<String> = b.iter().map(|&e| alg.label(e)).collect();
                format!("{{{}}}", names.join(","))
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{:?}", self.blocks())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let p = Partition::from_labels(&[7, 3, 7, 1]);
        assert_eq!(p.blocks(), vec![vec![0, 2], vec![1], vec![3]]);
        assert_eq!(p, Partition::from_blocks(4, &[vec![2, 0]]));
        assert!(Partition::total(0).is_total());
        assert!(Partition::identity(3).is_identity());
    }

    #[test]
    fn lattice_operations() {
        let p = Partition::from_blocks(4, &[vec![0, 1]]);
        let q = Partition::from_blocks(4, &[vec![1, 2]]);
        assert_eq!(p.join(&q).blocks(), vec![vec![0, 1, 2], vec![3]]);
        assert!(p.meet(&q).is_identity());
        assert!(p.refines(&p.join(&q)));
        assert!(!p.refines(&q));
    }
}
