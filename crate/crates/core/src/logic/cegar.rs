//! Exact filterhood and filter generation for matrix-presented logics.
//!
//! Take one variable `x_b` per element `b` of the algebra `B` and let `h0` send
//! `x_b` to `b`. `F` is a filter iff `h0⁻¹(F)` is a theory. A valuation `w` into
//! a generator `<A, G>` respects that theory iff the subalgebra of `B × A`
//! generated by the pairs `(b, w(x_b))` has no pair in `F × (A ∖ G)`; call such
//! valuations admissible. `F` fails to be a filter iff some term `φ` has
//! `h0(φ) ∉ F` while every admissible valuation sends `φ` into its filter.
//!
//! The engine keeps a growing set `T` of admissible valuations, computes the
//! subalgebra of `B × ∏_T A` generated by the variable tuples, and looks for a
//! tuple outside `F` on the first coordinate but designated everywhere else.
//! Its construction gives a term `φ`; either some admissible valuation refutes
//! `φ` (it joins `T` and the loop repeats) or `h0(φ)` is forced into `Fg(F)`.

use std::collections::HashMap;

use crate::algebra::{for_each_tuple, Elem, FiniteAlgebra, Matrix};
use crate::subset::Subset;
use crate::syntax::Term;

#[derive(Clone, Debug)]
enum Node {
    Var(Elem),
    App(usize, Vec<usize>),
}

/// A term as a straight-line program; children precede parents, the root is last.
#[derive(Clone, Debug)]
struct Program {
    nodes: Vec<Node>,
}

impl Program {
    fn eval(&self, alg: &FiniteAlgebra, values: &[Elem]) -> Elem {
        let mut out: Vec<Elem> = Vec::with_capacity(self.nodes.len());
        let mut args = Vec::new();
        for node in &self.nodes {
            let v = match node {
                Node::Var(b) => values[*b],
                Node::App(sym, children) => {
                    args.clear();
                    args.extend(children.iter().map(|&c| out[c]));
                    alg.apply(*sym, &args)
                }
            };
            out.push(v);
        }
        *out.last().expect("programs are non-empty")
    }

    fn vars(&self) -> Vec<Elem> {
        let mut vs: Vec<Elem> = self
            .nodes
            .iter()
            .filter_map(|n| match n {
                Node::Var(b) => Some(*b),
                Node::App(..) => None,
            })
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// The term, writing `x<b+1>` for the variable of element `b`.
    fn to_term(&self) -> Term {
        fn build(nodes: &[Node], i: usize) -> Term {
            match &nodes[i] {
                Node::Var(b) => Term::Var(*b as u32 + 1),
                Node::App(sym, cs) => Term::App(*sym, cs.iter().map(|&c| build(nodes, c)).collect()),
            }
        }
        build(&self.nodes, self.nodes.len() - 1)
    }
}

#[derive(Clone, Debug)]
struct Valuation {
    gen: usize,
    values: Vec<Elem>,
    /// First coordinates of generated pairs whose second coordinate is undesignated;
    /// the valuation is admissible for `F` iff this misses `F`.
    forbidden: Subset,
}

/// A term whose value is forced into every filter containing `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcedElement {
    pub element: Elem,
    pub term: Term,
}

/// Subalgebra of `B × A` grown one generating pair at a time.
#[derive(Clone)]
struct PairClosure {
    members: Vec<(Elem, Elem)>,
    present: Vec<bool>,
    processed: usize,
    forbidden: Subset,
}

impl PairClosure {
    fn new(nb: usize, na: usize) -> Self {
        PairClosure {
            members: Vec::new(),
            present: vec![false; nb * na],
            processed: 0,
            forbidden: Subset::empty(nb),
        }
    }

    /// Adds a pair and closes. Returns false as soon as a generated pair lands in
    /// `F × (A ∖ G)`, when `f` is given.
    fn add(
        &mut self,
        b: &FiniteAlgebra,
        a: &FiniteAlgebra,
        g: &Subset,
        f: Option<&Subset>,
        pair: (Elem, Elem),
    ) -> bool {
        let na = a.size();
        let insert = |this: &mut PairClosure, (p, q): (Elem, Elem)| -> bool {
            let idx = p * na + q;
            if this.present[idx] {
                return true;
            }
            this.present[idx] = true;
            this.members.push((p, q));
            if !g.contains(q) {
                this.forbidden.insert(p);
                if f.is_some_and(|f| f.contains(p)) {
                    return false;
                }
            }
            true
        };
        if !insert(self, pair) {
            return false;
        }
        let mut argb = Vec::new();
        let mut arga = Vec::new();
        while self.processed < self.members.len() {
            let fresh = self.processed;
            self.processed += 1;
            for sym in 0..b.signature().len() {
                let k = b.signature().arity(sym);
                for pos in 0..k {
                    let mut produced = Vec::new();
                    for_each_tuple(fresh + 1, k - 1, |rest| {
                        if rest[..pos].contains(&fresh) {
                            return;
                        }
                        argb.clear();
                        arga.clear();
                        for &r in rest[..pos].iter().chain([&fresh]).chain(&rest[pos..]) {
                            argb.push(self.members[r].0);
                            arga.push(self.members[r].1);
                        }
                        produced.push((b.apply(sym, &argb), a.apply(sym, &arga)));
                    });
                    for p in produced {
                        if !insert(self, p) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Subalgebra of `B × ∏_T A_t` generated by the variable tuples, with derivations.
struct Reach {
    tuples: Vec<Vec<Elem>>,
    nodes: Vec<Node>,
}

pub(crate) struct MatrixEngine<'a> {
    alg: &'a FiniteAlgebra,
    gens: &'a [Matrix],
    /// Every valuation found so far. A killer is never admissible-and-active, so
    /// the pool has no duplicates.
    pool: Vec<Valuation>,
}

impl<'a> MatrixEngine<'a> {
    pub(crate) fn new(alg: &'a FiniteAlgebra, gens: &'a [Matrix]) -> Self {
        MatrixEngine {
            alg,
            gens,
            pool: Vec::new(),
        }
    }

    /// `None` if `f` is a filter, otherwise an element forced into `Fg(f)`.
    pub(crate) fn forced(&mut self, f: &Subset) -> Option<ForcedElement> {
        if f.is_full() {
            return None;
        }
        let mut active: Vec<usize> = (0..self.pool.len())
            .filter(|&i| self.pool[i].forbidden.intersection(f).is_empty())
            .collect();
        loop {
            let reach = self.reach(&active);
            let bad: Vec<usize> = (0..reach.tuples.len())
                .filter(|&i| self.is_bad(&reach.tuples[i], &active, f))
                .collect();
            if bad.is_empty() {
                return None;
            }
            let fresh_from = self.pool.len();
            for i in bad {
                let prog = extract(&reach.nodes, i);
                let killed = self.pool[fresh_from..].iter().any(|w| {
                    let gm = &self.gens[w.gen];
                    !gm.is_designated(prog.eval(gm.algebra(), &w.values))
                });
                if killed {
                    continue;
                }
                match self.find_killer(f, &prog) {
                    Some(w) => {
                        active.push(self.pool.len());
                        self.pool.push(w);
                    }
                    None => {
                        return Some(ForcedElement {
                            element: reach.tuples[i][0],
                            term: prog.to_term(),
                        })
                    }
                }
            }
        }
    }

    /// Least filter containing `seed`.
    pub(crate) fn generate(&mut self, seed: &Subset) -> Subset {
        let mut f = seed.clone();
        while let Some(forced) = self.forced(&f) {
            f.insert(forced.element);
        }
        f
    }

    fn is_bad(&self, tuple: &[Elem], active: &[usize], f: &Subset) -> bool {
        !f.contains(tuple[0])
            && active
                .iter()
                .zip(&tuple[1..])
                .all(|(&w, &v)| self.gens[self.pool[w].gen].is_designated(v))
    }

    fn reach(&self, active: &[usize]) -> Reach {
        let m = self.alg.size();
        let mut reach = Reach {
            tuples: Vec::new(),
            nodes: Vec::new(),
        };
        let mut index: HashMap<Vec<Elem>, usize> = HashMap::new();
        let mut push = |reach: &mut Reach, tuple: Vec<Elem>, node: Node| {
            if let std::collections::hash_map::Entry::Vacant(e) = index.entry(tuple.clone()) {
                e.insert(reach.tuples.len());
                reach.tuples.push(tuple);
                reach.nodes.push(node);
            }
        };
        for b in 0..m {
            let mut tuple = vec![b];
            tuple.extend(active.iter().map(|&w| self.pool[w].values[b]));
            push(&mut reach, tuple, Node::Var(b));
        }
        let sig = self.alg.signature();
        let mut processed = 0;
        let mut args = Vec::new();
        while processed < reach.tuples.len() {
            let fresh = processed;
            processed += 1;
            for sym in 0..sig.len() {
                let k = sig.arity(sym);
                for pos in 0..k {
                    let mut produced = Vec::new();
                    for_each_tuple(fresh + 1, k - 1, |rest| {
                        if rest[..pos].contains(&fresh) {
                            return;
                        }
                        let children: Vec<usize> = rest[..pos]
                            .iter()
                            .chain([&fresh])
                            .chain(&rest[pos..])
                            .copied()
                            .collect();
                        let mut tuple = Vec::with_capacity(active.len() + 1);
                        args.clear();
                        args.extend(children.iter().map(|&c| reach.tuples[c][0]));
                        tuple.push(self.alg.apply(sym, &args));
                        for (j, &w) in active.iter().enumerate() {
                            args.clear();
                            args.extend(children.iter().map(|&c| reach.tuples[c][j + 1]));
                            tuple.push(self.gens[self.pool[w].gen].algebra().apply(sym, &args));
                        }
                        produced.push((tuple, children));
                    });
                    for (tuple, children) in produced {
                        push(&mut reach, tuple, Node::App(sym, children));
                    }
                }
            }
        }
        reach
    }

    /// An admissible valuation sending `prog` outside its generator's filter.
    fn find_killer(&self, f: &Subset, prog: &Program) -> Option<Valuation> {
        let m = self.alg.size();
        let vars = prog.vars();
        let mut order = vars.clone();
        order.extend((0..m).filter(|b| !vars.contains(b)));
        for gen in 0..self.gens.len() {
            let a = self.gens[gen].algebra();
            let mut search = KillerSearch {
                b: self.alg,
                gm: &self.gens[gen],
                f,
                prog,
                order: &order,
                split: vars.len(),
                values: vec![0; m],
            };
            let closure = PairClosure::new(m, a.size());
            if let Some(c) = search.dfs(0, &closure) {
                return Some(Valuation {
                    gen,
                    values: search.values,
                    forbidden: c.forbidden,
                });
            }
        }
        None
    }
}

struct KillerSearch<'s> {
    b: &'s FiniteAlgebra,
    gm: &'s Matrix,
    f: &'s Subset,
    prog: &'s Program,
    order: &'s [Elem],
    split: usize,
    values: Vec<Elem>,
}

impl KillerSearch<'_> {
    fn dfs(&mut self, level: usize, closure: &PairClosure) -> Option<PairClosure> {
        if level == self.split
            && self
                .gm
                .is_designated(self.prog.eval(self.gm.algebra(), &self.values))
        {
            return None;
        }
        if level == self.order.len() {
            return Some(closure.clone());
        }
        let b = self.order[level];
        let a = self.gm.algebra();
        for q in 0..a.size() {
            let mut next = closure.clone();
            if !next.add(self.b, a, self.gm.designated(), Some(self.f), (b, q)) {
                continue;
            }
            self.values[b] = q;
            if let Some(done) = self.dfs(level + 1, &next) {
                return Some(done);
            }
        }
        None
    }
}

fn extract(nodes: &[Node], root: usize) -> Program {
    let mut keep = vec![false; root + 1];
    keep[root] = true;
    for i in (0..=root).rev() {
        if keep[i] {
            if let Node::App(_, cs) = &nodes[i] {
                for &c in cs {
                    keep[c] = true;
                }
            }
        }
    }
    let mut remap = vec![usize::MAX; root + 1];
    let mut out = Vec::new();
    for i in 0..=root {
        if keep[i] {
            remap[i] = out.len();
            out.push(match &nodes[i] {
                Node::Var(b) => Node::Var(*b),
                Node::App(s, cs) => Node::App(*s, cs.iter().map(|&c| remap[c]).collect()),
            });
        }
    }
    Program { nodes: out }
}
