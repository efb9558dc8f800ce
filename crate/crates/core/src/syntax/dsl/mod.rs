//! The workspace text format.
//!
//! ```text
//! signature S { op join/2; const a; }
//! algebra A over S { universe 2; labels ["0", "1"]; table join = [0, 1, 1, 1]; const a = 1; }
//! matrix M { algebra A; designated {"1"}; }
//! product P of M, M default;
//! logic L = matrices(M);
//! logic R = rules over S { x1, join(x1, x2) |- x2; |- a(x1); }
//! translation T : S -> S { join(x1, x2) -> join(x2, x1); a(x1) -> a(x1); }
//! ```
//!
//! `const a;` declares the unary symbol `a/1`, and `const a = v;` gives it the
//! constant table `v`. Elements are written as indices or as quoted labels.
//! Names share one namespace and must be declared before use. `#` starts a
//! comment. A `rules` block without `over` ranges over the most recently
//! declared signature.

mod lexer;
mod parser;
mod printer;

use std::fmt;

use crate::algebra::{FiniteAlgebra, Matrix};
use crate::constructions::{ProductMatrix, ProductSymbol};
use crate::logic::LogicPresentation;
use crate::syntax::{Signature, Translation};

pub use parser::{parse_spec, parse_term};
pub use printer::print_bundle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Code {
    Lexical,
    Syntax,
    Arity,
    Duplicate,
    Dangling,
    Invalid,
}

impl Code {
    pub fn as_str(self) -> &'static str {
        match self {
            Code::Lexical => "E001",
            Code::Syntax => "E002",
            Code::Arity => "E003",
            Code::Duplicate => "E004",
            Code::Dangling => "E005",
            Code::Invalid => "E006",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub code: Code,
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl Diagnostic {
    pub fn new(code: Code, line: usize, col: usize, message: impl Into<String>) -> Self {
        Diagnostic {
            code,
            line,
            col,
            message: message.into(),
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: error[{}]: {}", self.line, self.col, self.code.as_str(), self.message)
    }
}

impl std::error::Error for Diagnostic {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDecl {
    pub name: String,
    pub signature: String,
    pub algebra: FiniteAlgebra,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixDecl {
    pub name: String,
    pub algebra: String,
    pub matrix: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LogicSource {
    Matrices(Vec<String>),
    Rules { signature: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogicDecl {
    pub source: LogicSource,
    pub logic: LogicPresentation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TranslationDecl {
    pub name: String,
    pub source: String,
    pub target: String,
    pub translation: Translation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductDecl {
    pub name: String,
    pub factors: Vec<String>,
    /// `None` for the default snapshot.
    pub explicit: Option<Vec<ProductSymbol>>,
    pub product: ProductMatrix,
}

/// Everything declared in one workspace file, in declaration order per kind.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WorkspaceBundle {
    pub signatures: Vec<(String, Signature)>,
    pub algebras: Vec<AlgebraDecl>,
    pub matrices: Vec<MatrixDecl>,
    pub products: Vec<ProductDecl>,
    pub logics: Vec<LogicDecl>,
    pub translations: Vec<TranslationDecl>,
}

impl WorkspaceBundle {
    pub fn is_empty(&self) -> bool {
        *self == WorkspaceBundle::default()
    }

    pub fn signature(&self, name: &str) -> Option<&Signature> {
        self.signatures.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }

    pub fn algebra(&self, name: &str) -> Option<&FiniteAlgebra> {
        self.algebras.iter().find(|d| d.name == name).map(|d| &d.algebra)
    }

    /// A declared matrix or product.
    pub fn matrix(&self, name: &str) -> Option<&Matrix> {
        self.matrices
            .iter()
            .find(|d| d.name == name)
            .map(|d| &d.matrix)
            .or_else(|| self.product(name).map(|p| &p.matrix))
    }

    pub fn product(&self, name: &str) -> Option<&ProductMatrix> {
        self.products.iter().find(|d| d.name == name).map(|d| &d.product)
    }

    pub fn logic(&self, name: &str) -> Option<&LogicPresentation> {
        self.logics.iter().find(|d| d.logic.name() == name).map(|d| &d.logic)
    }

    pub fn translation(&self, name: &str) -> Option<&Translation> {
        self.translations.iter().find(|d| d.name == name).map(|d| &d.translation)
    }

    /// Names of all declarations, in the order the printer emits them.
    pub fn names(&self) -> Vec<&str> {
        let mut out: Vec<&str> = self.signatures.iter().map(|(n, _)| n.as_str()).collect();
        out.extend(self.algebras.iter().map(|d| d.name.as_str()));
        out.extend(self.matrices.iter().map(|d| d.name.as_str()));
        out.extend(self.products.iter().map(|d| d.name.as_str()));
        out.extend(self.logics.iter().map(|d| d.logic.name()));
        out.extend(self.translations.iter().map(|d| d.name.as_str()));
        out
    }
}
