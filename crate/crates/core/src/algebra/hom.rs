use std::ops::ControlFlow;

use crate::algebra::{for_each_tuple, Elem, FiniteAlgebra, Matrix};
use crate::subset::Subset;

/// A map between universes commuting with every operation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homomorphism {
    pub map: Vec<Elem>,
}

impl Homomorphism {
    pub fn apply(&self, e: Elem) -> Elem {
        self.map[e]
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.map.iter().all(|v| seen.insert(*v))
    }
}

pub fn is_homomorphism(src: &FiniteAlgebra, dst: &FiniteAlgebra, map: &[Elem]) -> bool {
    if src.signature() != dst.signature() || map.len() != src.size() {
        return false;
    }
    if map.iter().any(|&v| v >= dst.size()) {
        return false;
    }
    let mut ok = true;
    let mut image = Vec::new();
    for sym in 0..src.signature().len() {
        for_each_tuple(src.size(), src.signature().arity(sym), |args| {
            if !ok {
                return;
            }
            image.clear();
            image.extend(args.iter().map(|&a| map[a]));
            ok = map[src.apply(sym, args)] == dst.apply(sym, &image);
        });
    }
    ok
}

/// Table constraints grouped by the largest element they mention, so a
/// constraint is checked as soon as all of its elements are assigned.
struct Constraints {
    by_level: Vec<Vec<(usize, Vec<Elem>, Elem)>>,
}

impl Constraints {
    fn new(src: &FiniteAlgebra) -> Self {
        let mut by_level = vec![Vec::new(); src.size()];
        for sym in 0..src.signature().len() {
            for_each_tuple(src.size(), src.signature().arity(sym), |args| {
                let r = src.apply(sym, args);
                let level = args.iter().copied().max().unwrap_or(0).max(r);
                by_level[level].push((sym, args.to_vec(), r));
            });
        }
        Constraints { by_level }
    }
}

#[derive(Clone, Copy)]
struct Mode<'a> {
    designated: Option<(&'a Subset, &'a Subset)>,
    bijective: bool,
    reflect: bool,
}

fn search(
    src: &FiniteAlgebra,
    dst: &FiniteAlgebra,
    mode: Mode<'_>,
    visit: &mut dyn FnMut(&[Elem]) -> ControlFlow<()>,
) {
    if src.signature() != dst.signature() {
        return;
    }
    if mode.bijective && src.size() != dst.size() {
        return;
    }
    let cons = Constraints::new(src);
    let mut map = vec![0; src.size()];
    let mut used = vec![false; dst.size()];
    let mut image = Vec::new();
    let _ = assign(src, dst, mode, &cons, 0, &mut map, &mut used, &mut image, visit);
}

#[allow(clippy::too_many_arguments)]
fn assign(
    src: &FiniteAlgebra,
    dst: &FiniteAlgebra,
    mode: Mode<'_>,
    cons: &Constraints,
    level: usize,
    map: &mut Vec<Elem>,
    used: &mut Vec<bool>,
    image: &mut Vec<Elem>,
    visit: &mut dyn FnMut(&[Elem]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if level == src.size() {
        return visit(map);
    }
    for v in 0..dst.size() {
        if mode.bijective && used[v] {
            continue;
        }
        if let Some((fs, fd)) = mode.designated {
            let (a, b) = (fs.contains(level), fd.contains(v));
            if (a && !b) || (mode.reflect && b && !a) {
                continue;
            }
        }
        map[level] = v;
        let consistent = cons.by_level[level].iter().all(|(sym, args, r)| {
            image.clear();
            image.extend(args.iter().map(|&a| map[a]));
            map[*r] == dst.apply(*sym, image)
        });
        if !consistent {
            continue;
        }
        used[v] = true;
        let flow = assign(src, dst, mode, cons, level + 1, map, used, image, visit);
        used[v] = false;
        flow?;
    }
    ControlFlow::Continue(())
}

/// Visits every homomorphism `src -> dst` in lexicographic order of value maps.
/// With `matrix_mode = Some((F, G))` only maps with `h[F] ⊆ G` are visited.
pub fn for_each_homomorphism(
    src: &FiniteAlgebra,
    dst: &FiniteAlgebra,
    matrix_mode: Option<(&Subset, &Subset)>,
    mut visit: impl FnMut(&[Elem]) -> ControlFlow<()>,
) {
    let mode = Mode {
        designated: matrix_mode,
        bijective: false,
        reflect: false,
    };
    search(src, dst, mode, &mut visit);
}

pub fn enumerate_homomorphisms(
    src: &FiniteAlgebra,
    dst: &FiniteAlgebra,
    matrix_mode: Option<(&Subset, &Subset)>,
) -> Vec<Homomorphism> {
    let mut out = Vec::new();
    for_each_homomorphism(src, dst, matrix_mode, |m| {
        out.push(Homomorphism { map: m.to_vec() });
        ControlFlow::Continue(())
    });
    out
}

/// An isomorphism of algebras, if one exists.
pub fn find_algebra_isomorphism(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Option<Homomorphism> {
    first_bijection(a, b, None)
}

/// A matrix isomorphism: a bijective homomorphism with `h[F] = G`.
pub fn find_isomorphism(m1: &Matrix, m2: &Matrix) -> Option<Homomorphism> {
    if m1.designated().count() != m2.designated().count() {
        return None;
    }
    first_bijection(
        m1.algebra(),
        m2.algebra(),
        Some((m1.designated(), m2.designated())),
    )
}

pub fn is_isomorphic(m1: &Matrix, m2: &Matrix) -> bool {
    find_isomorphism(m1, m2).is_some()
}

fn first_bijection(
    a: &FiniteAlgebra,
    b: &FiniteAlgebra,
    designated: Option<(&Subset, &Subset)>,
) -> Option<Homomorphism> {
    let mode = Mode {
        designated,
        bijective: true,
        reflect: true,
    };
    let mut found = None;
    search(a, b, mode, &mut |m| {
        found = Some(Homomorphism { map: m.to_vec() });
        ControlFlow::Break(())
    });
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::Signature;

    fn neg2() -> FiniteAlgebra {
        let sig = Signature::new([("neg", 1)]).unwrap();
        FiniteAlgebra::new(sig, 2, vec![vec![1, 0]]).unwrap()
    }

    #[test]
    fn negation_endomorphisms() {
        let homs = enumerate_homomorphisms(&neg2(), &neg2(), None);
        let maps: Vec<_> = homs.into_iter().map(|h| h.map).collect();
        assert_eq!(maps, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn into_trivial_algebra() {
        let one = FiniteAlgebra::trivial(neg2().signature().clone());
        assert_eq!(enumerate_homomorphisms(&neg2(), &one, None).len(), 1);
        // The only subuniverse-free target: neg has no fixed point in neg2.
        assert!(enumerate_homomorphisms(&one, &neg2(), None).is_empty());
    }

    #[test]
    fn matrix_mode_and_isomorphism() {
        let m = Matrix::from_elems(neg2(), [1]).unwrap();
        let f = m.designated();
        assert_eq!(enumerate_homomorphisms(m.algebra(), m.algebra(), Some((f, f))).len(), 1);
        let swapped = Matrix::from_elems(neg2(), [0]).unwrap();
        assert_eq!(find_isomorphism(&m, &swapped).unwrap().map, vec![1, 0]);
    }
}
