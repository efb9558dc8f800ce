use std::collections::HashSet;

use crate::algebra::{for_each_tuple, Elem, FiniteAlgebra, Matrix};
use crate::congruence::Partition;

/// All basic translations `x ↦ f(c_1, .., x, .., c_k)` as maps on the universe, deduplicated.
pub fn basic_translations(alg: &FiniteAlgebra) -> Vec<Vec<Elem>> {
    let n = alg.size();
    let mut seen: HashSet<Vec<Elem>> = HashSet::new();
    let mut out = Vec::new();
    let mut args = Vec::new();
    for sym in 0..alg.signature().len() {
        let k = alg.signature().arity(sym);
        for pos in 0..k {
            for_each_tuple(n, k - 1, |consts| {
                let map: Vec<Elem> = (0..n)
                    .map(|x| {
                        args.clear();
                        args.extend_from_slice(&consts[..pos]);
                        args.push(x);
                        args.extend_from_slice(&consts[pos..]);
                        alg.apply(sym, &args)
                    })
                    .collect();
                if seen.insert(map.clone()) {
                    out.push(map);
                }
            });
        }
    }
    out
}

/// True iff every operation maps related tuples to related results.
pub fn is_congruence(alg: &FiniteAlgebra, p: &Partition) -> bool {
    if p.universe() != alg.size() {
        return false;
    }
    let reps = p.representatives();
    // Compatibility with each basic translation suffices, by changing one argument at a time.
    basic_translations(alg)
        .iter()
        .all(|t| (0..alg.size()).all(|x| p.relates(t[x], t[reps[p.block_of(x)]])))
}

/// Largest congruence contained in `initial`, by Hopcroft-style partition refinement
/// over the basic translations.
pub fn largest_congruence_below(alg: &FiniteAlgebra, initial: &Partition) -> Partition {
    let n = alg.size();
    if initial.is_total() {
        return initial.clone();
    }
    let letters = basic_translations(alg);
    let inverses: Vec<Inverse> = letters.iter().map(|l| Inverse::new(l, n)).collect();
    let mut r = Refiner::new(initial);
    let largest = (0..r.blocks.len())
        .max_by_key(|&b| r.blocks[b].1 - r.blocks[b].0)
        .unwrap_or(0);
    for b in 0..r.blocks.len() {
        if b != largest {
            r.push(b);
        }
    }
    let mut preimage = Vec::new();
    while let Some(splitter) = r.worklist.pop() {
        r.queued[splitter] = false;
        let (s, e) = r.blocks[splitter];
        let members: Vec<Elem> = r.elems[s..e].to_vec();
        for inv in &inverses {
            preimage.clear();
            for &y in &members {
                preimage.extend_from_slice(inv.of(y));
            }
            r.split(&preimage);
        }
    }
    Partition::from_labels(&r.block_of)
}

/// Leibniz congruence: the largest congruence compatible with the designated set.
pub fn leibniz_congruence(m: &Matrix) -> Partition {
    let f = m.designated();
    largest_congruence_below(m.algebra(), &Partition::from_key(m.size(), |e| f.contains(e)))
}

struct Inverse {
    start: Vec<usize>,
    order: Vec<Elem>,
}

impl Inverse {
    fn new(map: &[Elem], n: usize) -> Self {
        let mut start = vec![0; n + 1];
        for &y in map {
            start[y + 1] += 1;
        }
        for i in 0..n {
            start[i + 1] += start[i];
        }
        let mut fill = start.clone();
        let mut order = vec![0; map.len()];
        for (x, &y) in map.iter().enumerate() {
            order[fill[y]] = x;
            fill[y] += 1;
        }
        Inverse { start, order }
    }

    fn of(&self, y: Elem) -> &[Elem] {
        &self.order[self.start[y]..self.start[y + 1]]
    }
}

struct Refiner {
    elems: Vec<Elem>,
    pos: Vec<usize>,
    block_of: Vec<usize>,
    blocks: Vec<(usize, usize)>,
    marked: Vec<usize>,
    queued: Vec<bool>,
    worklist: Vec<usize>,
    touched: Vec<usize>,
}

impl Refiner {
    fn new(initial: &Partition) -> Self {
        let n = initial.universe();
        let mut elems: Vec<Elem> = (0..n).collect();
        elems.sort_by_key(|&e| initial.block_of(e));
        let mut pos = vec![0; n];
        for (i, &e) in elems.iter().enumerate() {
            pos[e] = i;
        }
        let mut blocks = vec![(n, 0); initial.num_blocks()];
        for (i, &e) in elems.iter().enumerate() {
            let b = initial.block_of(e);
            blocks[b].0 = blocks[b].0.min(i);
            blocks[b].1 = blocks[b].1.max(i + 1);
        }
        let k = blocks.len();
        Refiner {
            elems,
            pos,
            block_of: (0..n).map(|e| initial.block_of(e)).collect(),
            blocks,
            marked: vec![0; k],
            queued: vec![false; k],
            worklist: Vec::new(),
            touched: Vec::new(),
        }
    }

    fn push(&mut self, b: usize) {
        if !self.queued[b] {
            self.queued[b] = true;
            self.worklist.push(b);
        }
    }

    /// Splits every block that `set` cuts. `set` must not repeat elements.
    fn split(&mut self, set: &[Elem]) {
        for &x in set {
            let b = self.block_of[x];
            let (start, _) = self.blocks[b];
            let target = start + self.marked[b];
            let other = self.elems[target];
            let px = self.pos[x];
            self.elems.swap(target, px);
            self.pos[other] = px;
            self.pos[x] = target;
            if self.marked[b] == 0 {
                self.touched.push(b);
            }
            self.marked[b] += 1;
        }
        while let Some(b) = self.touched.pop() {
            let (start, end) = self.blocks[b];
            let k = self.marked[b];
            self.marked[b] = 0;
            if k == end - start {
                continue;
            }
            let fresh = self.blocks.len();
            self.blocks.push((start, start + k));
            self.blocks[b] = (start + k, end);
            self.marked.push(0);
            self.queued.push(false);
            for i in start..start + k {
                self.block_of[self.elems[i]] = fresh;
            }
            if self.queued[b] || k <= end - start - k {
                self.push(fresh);
            } else {
                self.push(b);
            }
        }
    }
}
