use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};

/// An operation symbol with a positive arity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Symbol {
    pub name: String,
    pub arity: usize,
}

/// A finite list of operation symbols. Symbols are addressed by their index.
///
/// Nullary symbols are rejected: constants are unary operations whose table
/// is a constant map.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Signature {
    symbols: Vec<Symbol>,
    index: HashMap<String, usize>,
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '.')
}

/// Names of the form `x<digits>` are reserved for variables.
pub(crate) fn is_variable_name(name: &str) -> bool {
    name.len() > 1 && name.starts_with('x') && name[1..].bytes().all(|b| b.is_ascii_digit())
}

impl Signature {
    pub fn new<S: Into<String>>(symbols: impl IntoIterator<Item = (S, usize)>) -> Result<Self> {
        let mut sig = Signature::default();
        for (name, arity) in symbols {
            sig.push(name.into(), arity)?;
        }
        Ok(sig)
    }

    pub fn empty() -> Self {
        Signature::default()
    }

    fn push(&mut self, name: String, arity: usize) -> Result<()> {
        if !is_identifier(&name) || is_variable_name(&name) {
            return Err(Error::InvalidSignature(format!(
                "`{name}` is not a valid symbol name"
            )));
        }
        if arity == 0 {
            return Err(Error::InvalidSignature(format!(
                "symbol `{name}` is nullary; constants must be unary"
            )));
        }
        if self.index.contains_key(&name) {
            return Err(Error::DuplicateName(name));
        }
        self.index.insert(name.clone(), self.symbols.len());
        self.symbols.push(Symbol { name, arity });
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn name(&self, sym: usize) -> &str {
        &self.symbols[sym].name
    }

    pub fn arity(&self, sym: usize) -> usize {
        self.symbols[sym].arity
    }

    pub fn lookup(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.lookup(name)
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    pub fn max_arity(&self) -> usize {
        self.symbols.iter().map(|s| s.arity).max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_nullary_and_duplicates() {
        assert!(Signature::new([("c", 0)]).is_err());
        assert_eq!(
            Signature::new([("f", 1), ("f", 2)]),
            Err(Error::DuplicateName("f".into()))
        );
        assert!(Signature::new([("x3", 1)]).is_err());
        let sig = Signature::new([("join", 2), ("neg", 1)]).unwrap();
        assert_eq!(sig.lookup("neg"), Some(1));
        assert_eq!(sig.max_arity(), 2);
    }
}
