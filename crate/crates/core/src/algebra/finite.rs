use std::collections::BTreeMap;

use serde_json::json;

use crate::error::{Error, Result};
use crate::subset::Subset;
use crate::syntax::{Signature, Term};

pub type Elem = usize;

/// A finite algebra over `{0, .., size - 1}` with one row-major table per symbol.
///
/// The entry for the argument tuple `(a_1, .., a_k)` sits at offset
/// `a_1 * n^(k-1) + .. + a_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    signature: Signature,
    size: usize,
    tables: Vec<Vec<Elem>>,
    labels: Option<Vec<String>>,
}

impl FiniteAlgebra {
    pub fn new(signature: Signature, size: usize, tables: Vec<Vec<Elem>>) -> Result<Self> {
        if size == 0 {
            return Err(Error::Invalid("universe must be non-empty".into()));
        }
        if tables.len() != signature.len() {
            return Err(Error::Invalid(format!(
                "{} tables given for {} symbols",
                tables.len(),
                signature.len()
            )));
        }
        for (sym, table) in tables.iter().enumerate() {
            let expected = table_len(size, signature.arity(sym))?;
            let name = signature.name(sym).to_string();
            if table.len() != expected {
                return Err(Error::InvalidTable {
                    name,
                    reason: format!("expected {expected} entries, found {}", table.len()),
                });
            }
            if let Some(&bad) = table.iter().find(|&&v| v >= size) {
                return Err(Error::InvalidTable {
                    name,
                    reason: format!("entry {bad} outside universe of size {size}"),
                });
            }
        }
        Ok(FiniteAlgebra {
            signature,
            size,
            tables,
            labels: None,
        })
    }

    /// Builds the tables by calling `f(symbol, args)` on every tuple.
    pub fn from_fn(
        signature: Signature,
        size: usize,
        mut f: impl FnMut(usize, &[Elem]) -> Elem,
    ) -> Result<Self> {
        let mut tables = Vec::with_capacity(signature.len());
        for sym in 0..signature.len() {
            let arity = signature.arity(sym);
            let mut table = Vec::with_capacity(table_len(size, arity)?);
            for_each_tuple(size, arity, |args| table.push(f(sym, args)));
            tables.push(table);
        }
        FiniteAlgebra::new(signature, size, tables)
    }

    /// The one-element algebra over `signature`.
    pub fn trivial(signature: Signature) -> Self {
        let tables = vec![vec![0]; signature.len()];
        FiniteAlgebra {
            signature,
            size: 1,
            tables,
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.size {
            return Err(Error::Invalid(format!(
                "{} labels for a universe of size {}",
                labels.len(),
                self.size
            )));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateName(l.clone()));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn table(&self, sym: usize) -> &[Elem] {
        &self.tables[sym]
    }

    pub fn tables(&self) -> &[Vec<Elem>] {
        &self.tables
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, e: Elem) -> String {
        match &self.labels {
            Some(l) => l[e].clone(),
            None => e.to_string(),
        }
    }

    /// Resolves a label, or a plain index when the algebra has no label of that name.
    pub fn element(&self, name: &str) -> Option<Elem> {
        if let Some(l) = &self.labels {
            if let Some(i) = l.iter().position(|x| x == name) {
                return Some(i);
            }
        }
        name.parse().ok().filter(|&i| i < self.size)
    }

    pub fn offset(&self, args: &[Elem]) -> usize {
        args.iter().fold(0, |acc, &a| acc * self.size + a)
    }

    pub fn apply(&self, sym: usize, args: &[Elem]) -> Elem {
        self.tables[sym][self.offset(args)]
    }

    /// Evaluates `t` with `env[i]` as the value of `x<i>`.
    pub fn eval(&self, t: &Term, env: &[Elem]) -> Result<Elem> {
        self.eval_by(t, &|v| env.get(v as usize).copied())
    }

    pub fn eval_by(&self, t: &Term, env: &impl Fn(u32) -> Option<Elem>) -> Result<Elem> {
        match t {
            Term::Var(v) => match env(*v) {
                Some(e) if e < self.size => Ok(e),
                Some(e) => Err(Error::ElementOutOfRange(e)),
                None => Err(Error::UnboundVariable(*v)),
            },
            Term::App(f, args) => {
                if *f >= self.signature.len() || self.signature.arity(*f) != args.len() {
                    return Err(Error::UnknownSymbol(format!("#{f}")));
                }
                let mut off = 0;
                for a in args {
                    off = off * self.size + self.eval_by(a, env)?;
                }
                Ok(self.tables[*f][off])
            }
        }
    }

    /// Table of `t` read as an operation in `x1..x<arity>`.
    pub fn term_table(&self, t: &Term, arity: usize) -> Result<Vec<Elem>> {
        let mut out = Vec::with_capacity(table_len(self.size, arity)?);
        let mut env = vec![0; arity + 1];
        let mut err = None;
        for_each_tuple(self.size, arity, |args| {
            env[1..].copy_from_slice(args);
            match self.eval(t, &env) {
                Ok(v) => out.push(v),
                Err(e) => {
                    err.get_or_insert(e);
                }
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(out),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let ops: Vec<_> = self
            .signature
            .symbols()
            .iter()
            .zip(&self.tables)
            .map(|(s, t)| json!({"name": s.name, "arity": s.arity, "table": t}))
            .collect();
        let mut v = json!({"size": self.size, "operations": ops});
        if let Some(l) = &self.labels {
            v["labels"] = json!(l);
        }
        v
    }
}

/// Evaluates `t` under a map from variable indices to elements.
pub fn evaluate(alg: &FiniteAlgebra, t: &Term, env: &BTreeMap<u32, Elem>) -> Result<Elem> {
    alg.eval_by(t, &|v| env.get(&v).copied())
}

fn table_len(size: usize, arity: usize) -> Result<usize> {
    size.checked_pow(arity as u32)
        .filter(|&n| n <= 1 << 26)
        .ok_or_else(|| Error::Unsupported(format!("table of arity {arity} over {size} elements is too large")))
}

/// Calls `f` on every tuple in `{0..n-1}^k`, in row-major order.
pub fn for_each_tuple(n: usize, k: usize, mut f: impl FnMut(&[Elem])) {
    let mut tuple = vec![0; k];
    if k > 0 && n == 0 {
        return;
    }
    loop {
        f(&tuple);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            tuple[i] += 1;
            if tuple[i] < n {
                break;
            }
            tuple[i] = 0;
        }
    }
}

/// A logical matrix: an algebra with a designated subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    algebra: FiniteAlgebra,
    designated: Subset,
}

impl Matrix {
    pub fn new(algebra: FiniteAlgebra, designated: Subset) -> Result<Self> {
        if designated.universe() != algebra.size() {
            return Err(Error::Invalid(format!(
                "designated set over {} elements for a universe of size {}",
                designated.universe(),
                algebra.size()
            )));
        }
        Ok(Matrix {
            algebra,
            designated,
        })
    }

    pub fn from_elems(algebra: FiniteAlgebra, elems: impl IntoIterator<Item = Elem>) -> Result<Self> {
        let n = algebra.size();
        let elems: Vec<_> = elems.into_iter().collect();
        if let Some(&e) = elems.iter().find(|&&e| e >= n) {
            return Err(Error::ElementOutOfRange(e));
        }
        Matrix::new(algebra, Subset::from_elems(n, elems))
    }

    /// The trivial matrix `<1, {1}>`.
    pub fn trivial(signature: Signature) -> Self {
        Matrix {
            algebra: FiniteAlgebra::trivial(signature),
            designated: Subset::full(1),
        }
    }

    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.algebra
    }

    pub fn designated(&self) -> &Subset {
        &self.designated
    }

    pub fn size(&self) -> usize {
        self.algebra.size()
    }

    pub fn signature(&self) -> &Signature {
        self.algebra.signature()
    }

    pub fn is_designated(&self, e: Elem) -> bool {
        self.designated.contains(e)
    }

    pub fn with_designated(&self, designated: Subset) -> Result<Self> {
        Matrix::new(self.algebra.clone(), designated)
    }

    pub fn into_parts(self) -> (FiniteAlgebra, Subset) {
        (self.algebra, self.designated)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = self.algebra.to_json();
        v["designated"] = json!(self.designated.to_vec());
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuples_are_row_major() {
        let mut seen = Vec::new();
        for_each_tuple(2, 2, |t| seen.push(t.to_vec()));
        assert_eq!(seen, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        let mut count = 0;
        for_each_tuple(3, 0, |_| count += 1);
        assert_eq!(count, 1);
    }

    #[test]
    fn table_validation() {
        let sig = Signature::new([("f", 2)]).unwrap();
        assert!(FiniteAlgebra::new(sig.clone(), 2, vec![vec![0, 1, 1]]).is_err());
        assert!(FiniteAlgebra::new(sig.clone(), 2, vec![vec![0, 1, 1, 2]]).is_err());
        let alg = FiniteAlgebra::new(sig, 2, vec![vec![0, 1, 1, 0]]).unwrap();
        assert_eq!(alg.apply(0, &[1, 0]), 1);
    }

    #[test]
    fn evaluation_needs_bindings() {
        let sig = Signature::new([("f", 1)]).unwrap();
        let alg = FiniteAlgebra::new(sig, 2, vec![vec![1, 0]]).unwrap();
        let t = Term::App(0, vec![Term::Var(1)]);
        assert_eq!(alg.eval(&t, &[0, 1]).unwrap(), 0);
        assert_eq!(alg.eval(&t, &[0]), Err(Error::UnboundVariable(1)));
        let env = BTreeMap::from([(1, 0)]);
        assert_eq!(evaluate(&alg, &Term::Var(1), &env).unwrap(), 0);
    }
}
