use crate::syntax::{Signature, Term};

/// All terms over `sig` in the variables `x1..x<arity>` of depth at most `depth`.
///
/// Order: by depth; within a depth, variables before applications, applications
/// by symbol index and then lexicographically by the positions of their
/// arguments in this same list.
pub fn enumerate_terms(sig: &Signature, arity: usize, depth: usize) -> Vec<Term> {
    let mut out: Vec<Term> = (1..=arity as u32).map(Term::Var).collect();
    // `out[..levels[d]]` holds the terms of depth at most `d`.
    let mut levels = vec![out.len()];
    for d in 1..=depth {
        let below = levels[d - 1];
        let previous = if d >= 2 { levels[d - 2] } else { 0 };
        for f in 0..sig.len() {
            let mut idx = vec![0usize; sig.arity(f)];
            if below == 0 {
                break;
            }
            loop {
                // At least one argument must have depth exactly `d - 1`.
                if idx.iter().any(|&i| i >= previous) {
                    out.push(Term::App(f, idx.iter().map(|&i| out[i].clone()).collect()));
                }
                if !advance(&mut idx, below) {
                    break;
                }
            }
        }
        levels.push(out.len());
    }
    out
}

/// Odometer step over `0..bound` in each position, last position fastest.
fn advance(idx: &mut [usize], bound: usize) -> bool {
    for pos in (0..idx.len()).rev() {
        idx[pos] += 1;
        if idx[pos] < bound {
            return true;
        }
        idx[pos] = 0;
    }
    false
}

/// Number of terms `enumerate_terms` would return, saturating on overflow.
pub fn count_terms(sig: &Signature, arity: usize, depth: usize) -> u128 {
    let mut at_most = arity as u128;
    for _ in 0..depth {
        let mut next = arity as u128;
        for f in 0..sig.len() {
            next = next.saturating_add(at_most.saturating_pow(sig.arity(f) as u32));
        }
        at_most = next;
    }
    at_most
}
