use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::syntax::Signature;

/// A formula: a variable `x<i>` or a symbol (by index) applied to arguments.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(u32),
    App(usize, Vec<Term>),
}

impl Term {
    pub fn var(i: u32) -> Term {
        Term::Var(i)
    }

    pub fn app(sym: usize, args: Vec<Term>) -> Term {
        Term::App(sym, args)
    }

    /// Builds `name(args..)`, checking the name and arity against `sig`.
    pub fn apply(sig: &Signature, name: &str, args: Vec<Term>) -> Result<Term> {
        let sym = sig.require(name)?;
        if sig.arity(sym) != args.len() {
            return Err(Error::ArityMismatch {
                name: name.to_string(),
                expected: sig.arity(sym),
                found: args.len(),
            });
        }
        Ok(Term::App(sym, args))
    }

    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) => 0,
            Term::App(_, args) => 1 + args.iter().map(Term::depth).max().unwrap_or(0),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::App(_, args) => 1 + args.iter().map(Term::size).sum::<usize>(),
        }
    }

    pub fn vars(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    pub(crate) fn collect_vars(&self, out: &mut BTreeSet<u32>) {
        match self {
            Term::Var(i) => {
                out.insert(*i);
            }
            Term::App(_, args) => args.iter().for_each(|a| a.collect_vars(out)),
        }
    }

    pub fn max_var(&self) -> Option<u32> {
        self.vars().last().copied()
    }

    pub fn contains_symbol(&self, sym: usize) -> bool {
        match self {
            Term::Var(_) => false,
            Term::App(f, args) => *f == sym || args.iter().any(|a| a.contains_symbol(sym)),
        }
    }

    /// Checks symbol indices and arities against `sig`.
    pub fn check(&self, sig: &Signature) -> Result<()> {
        match self {
            Term::Var(_) => Ok(()),
            Term::App(f, args) => {
                if *f >= sig.len() {
                    return Err(Error::UnknownSymbol(format!("#{f}")));
                }
                if sig.arity(*f) != args.len() {
                    return Err(Error::ArityMismatch {
                        name: sig.name(*f).to_string(),
                        expected: sig.arity(*f),
                        found: args.len(),
                    });
                }
                args.iter().try_for_each(|a| a.check(sig))
            }
        }
    }

    pub fn substitute(&self, s: &Substitution) -> Term {
        match self {
            Term::Var(i) => s.get(*i).cloned().unwrap_or(Term::Var(*i)),
            Term::App(f, args) => Term::App(*f, args.iter().map(|a| a.substitute(s)).collect()),
        }
    }

    /// Replaces every variable `x<i>` by `f(i)`.
    pub fn map_vars(&self, f: &impl Fn(u32) -> Term) -> Term {
        match self {
            Term::Var(i) => f(*i),
            Term::App(g, args) => Term::App(*g, args.iter().map(|a| a.map_vars(f)).collect()),
        }
    }

    pub fn display<'a>(&'a self, sig: &'a Signature) -> TermDisplay<'a> {
        TermDisplay { term: self, sig }
    }
}

pub struct TermDisplay<'a> {
    term: &'a Term,
    sig: &'a Signature,
}

impl fmt::Display for TermDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.term {
            Term::Var(i) => write!(f, "x{i}"),
            Term::App(sym, args) => {
                write!(f, "{}(", self.sig.name(*sym))?;
                for (k, a) in args.iter().enumerate() {
                    if k > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{}", a.display(self.sig))?;
                }
                write!(f, ")")
            }
        }
    }
}

/// A finite-support map from variables to terms; identity elsewhere.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Substitution {
    map: BTreeMap<u32, Term>,
}

impl Substitution {
    pub fn new() -> Self {
        Substitution::default()
    }

    pub fn with(mut self, var: u32, t: Term) -> Self {
        self.map.insert(var, t);
        self
    }

    pub fn insert(&mut self, var: u32, t: Term) {
        self.map.insert(var, t);
    }

    pub fn get(&self, var: u32) -> Option<&Term> {
        self.map.get(&var)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &Term)> {
        self.map.iter().map(|(v, t)| (*v, t))
    }

    /// Substitution sending `x<i+1>` to `args[i]`.
    pub fn positional(args: &[Term]) -> Self {
        let mut s = Substitution::new();
        for (i, a) in args.iter().enumerate() {
            s.insert(i as u32 + 1, a.clone());
        }
        s
    }
}

pub fn apply_substitution(s: &Substitution, t: &Term) -> Term {
    t.substitute(s)
}

/// A finitary rule `premises |- conclusion`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rule {
    pub premises: Vec<Term>,
    pub conclusion: Term,
}

impl Rule {
    pub fn new(premises: Vec<Term>, conclusion: Term) -> Self {
        Rule {
            premises,
            conclusion,
        }
    }

    pub fn check(&self, sig: &Signature) -> Result<()> {
        self.premises.iter().try_for_each(|p| p.check(sig))?;
        self.conclusion.check(sig)
    }

    pub fn vars(&self) -> BTreeSet<u32> {
        let mut out = self.conclusion.vars();
        for p in &self.premises {
            p.collect_vars(&mut out);
        }
        out
    }

    pub fn display<'a>(&'a self, sig: &'a Signature) -> impl fmt::Display + 'a {
        RuleDisplay { rule: self, sig }
    }
}

struct RuleDisplay<'a> {
    rule: &'a Rule,
    sig: &'a Signature,
}

impl fmt::Display for RuleDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.rule.premises.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", p.display(self.sig))?;
        }
        if !self.rule.premises.is_empty() {
            write!(f, " ")?;
        }
        write!(f, "|- {}", self.rule.conclusion.display(self.sig))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig() -> Signature {
        Signature::new([("join", 2), ("not", 1)]).unwrap()
    }

    #[test]
    fn substitution_examples() {
        let s = Substitution::new().with(1, Term::Var(2));
        let t = Term::App(0, vec![Term::Var(1), Term::Var(1)]);
        assert_eq!(t.substitute(&s), Term::App(0, vec![Term::Var(2), Term::Var(2)]));

        let s = Substitution::new().with(1, Term::App(1, vec![Term::Var(2)]));
        let t = Term::App(1, vec![Term::Var(1)]);
        assert_eq!(
            t.substitute(&s).display(&sig()).to_string(),
            "not(not(x2))"
        );
        assert_eq!(t.substitute(&Substitution::new()), t);
    }

    #[test]
    fn arity_is_checked() {
        let err = Term::apply(&sig(), "join", vec![Term::Var(1)]).unwrap_err();
        assert!(matches!(err, Error::ArityMismatch { expected: 2, found: 1, .. }));
        assert!(Term::App(0, vec![Term::Var(1)]).check(&sig()).is_err());
    }

    #[test]
    fn depth_size_vars() {
        let t = Term::App(0, vec![Term::Var(3), Term::App(1, vec![Term::Var(1)])]);
        assert_eq!(t.depth(), 2);
        assert_eq!(t.size(), 4);
        assert_eq!(t.vars().into_iter().collect::<Vec<_>>(), vec![1, 3]);
    }
}
