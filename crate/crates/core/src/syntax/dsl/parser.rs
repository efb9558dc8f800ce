use std::collections::HashMap;

use super::lexer::{lex, Tok, Token};
use super::{
    AlgebraDecl, Code, Diagnostic, LogicDecl, LogicSource, MatrixDecl, ProductDecl, TranslationDecl,
    WorkspaceBundle,
};
use crate::algebra::{Elem, FiniteAlgebra, Matrix};
use crate::constructions::{default_snapshot, non_indexed_product, ProductSymbol};
use crate::error::Error;
use crate::logic::LogicPresentation;
use crate::subset::Subset;
use crate::syntax::{is_identifier, is_variable_name, Rule, Signature, Term, Translation};

type Parsed<T> = Result<T, Diagnostic>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Signature,
    Algebra,
    Matrix,
    Logic,
    Translation,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::Signature => "signature",
            Kind::Algebra => "algebra",
            Kind::Matrix => "matrix",
            Kind::Logic => "logic",
            Kind::Translation => "translation",
        }
    }
}

/// Parses a workspace file. Every reference is resolved and every object is
/// validated; the first problem is reported with its position.
pub fn parse_spec(text: &str) -> Parsed<WorkspaceBundle> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        bundle: WorkspaceBundle::default(),
        kinds: HashMap::new(),
    };
    while p.peek().tok != Tok::Eof {
        p.item()?;
    }
    Ok(p.bundle)
}

/// Parses a single term over `sig`, e.g. `join(x1, a(x2))`.
pub fn parse_term(sig: &Signature, text: &str) -> Parsed<Term> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        bundle: WorkspaceBundle::default(),
        kinds: HashMap::new(),
    };
    let t = p.term(sig)?;
    if p.peek().tok != Tok::Eof {
        return Err(p.unexpected("end of term"));
    }
    Ok(t)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    bundle: WorkspaceBundle,
    kinds: HashMap<String, Kind>,
}

fn diag(code: Code, at: &Token, msg: impl Into<String>) -> Diagnostic {
    Diagnostic::new(code, at.line, at.col, msg)
}

/// Maps a validation error from the object constructors to a diagnostic.
fn invalid(at: &Token, e: Error) -> Diagnostic {
    let code = match e {
        Error::DuplicateName(_) => Code::Duplicate,
        Error::ArityMismatch { .. } => Code::Arity,
        Error::UnknownSymbol(_) => Code::Dangling,
        _ => Code::Invalid,
    };
    diag(code, at, e.to_string())
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Int(n) => format!("`{n}`"),
        Tok::Str(s) => format!("\"{s}\""),
        Tok::Punct(p) => format!("`{p}`"),
        Tok::Eof => "end of input".into(),
    }
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> Diagnostic {
        let t = self.peek();
        diag(Code::Syntax, t, format!("expected {wanted}, found {}", describe(&t.tok)))
    }

    fn is_punct(&self, p: &str) -> bool {
        self.peek().tok == Tok::Punct(punct(p))
    }

    fn eat_punct(&mut self, p: &str) -> bool {
        let hit = self.is_punct(p);
        if hit {
            self.pos += 1;
        }
        hit
    }

    fn punct(&mut self, p: &str) -> Parsed<Token> {
        if self.is_punct(p) {
            Ok(self.next())
        } else {
            Err(self.unexpected(&format!("`{p}`")))
        }
    }

    fn is_keyword(&self, kw: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(s) if s == kw)
    }

    fn keyword(&mut self, kw: &str) -> Parsed<Token> {
        if self.is_keyword(kw) {
            Ok(self.next())
        } else {
            Err(self.unexpected(&format!("`{kw}`")))
        }
    }

    fn ident(&mut self) -> Parsed<(String, Token)> {
        match self.peek().tok.clone() {
            Tok::Ident(s) => Ok((s, self.next())),
            _ => Err(self.unexpected("a name")),
        }
    }

    fn int(&mut self) -> Parsed<(usize, Token)> {
        match self.peek().tok {
            Tok::Int(n) => Ok((n, self.next())),
            _ => Err(self.unexpected("an integer")),
        }
    }

    /// Comma-separated items up to (and consuming) `close`.
    fn list<T>(&mut self, close: &str, mut item: impl FnMut(&mut Self) -> Parsed<T>) -> Parsed<Vec<T>> {
        let mut out = Vec::new();
        if self.eat_punct(close) {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat_punct(close) {
                return Ok(out);
            }
            self.punct(",")?;
        }
    }

    fn declare(&mut self, name: &str, at: &Token, kind: Kind) -> Parsed<()> {
        if !is_identifier(name) || is_variable_name(name) {
            return Err(diag(Code::Invalid, at, format!("`{name}` cannot be used as a name")));
        }
        if let Some(k) = self.kinds.get(name) {
            return Err(diag(Code::Duplicate, at, format!("`{name}` is already declared as a {}", k.name())));
        }
        self.kinds.insert(name.to_string(), kind);
        Ok(())
    }

    fn reference(&self, name: &str, at: &Token, kind: Kind) -> Parsed<()> {
        match self.kinds.get(name) {
            Some(k) if *k == kind => Ok(()),
            Some(k) => Err(diag(Code::Dangling, at, format!("`{name}` is a {}, not a {}", k.name(), kind.name()))),
            None => Err(diag(Code::Dangling, at, format!("no {} named `{name}`", kind.name()))),
        }
    }

    fn item(&mut self) -> Parsed<()> {
        let (kw, at) = self.ident()?;
        match kw.as_str() {
            "signature" => self.signature(),
            "algebra" => self.algebra(),
            "matrix" => self.matrix(),
            "product" => self.product(),
            "logic" => self.logic(),
            "translation" => self.translation(),
            _ => Err(diag(
                Code::Syntax,
                &at,
                format!("expected a declaration (signature, algebra, matrix, product, logic, translation), found `{kw}`"),
            )),
        }
    }

    fn signature(&mut self) -> Parsed<()> {
        let (name, at) = self.ident()?;
        self.declare(&name, &at, Kind::Signature)?;
        self.punct("{")?;
        let mut symbols: Vec<(String, usize)> = Vec::new();
        while !self.eat_punct("}") {
            let (sym, arity, sym_at) = if self.is_keyword("op") {
                self.next();
                let (sym, sym_at) = self.ident()?;
                self.punct("/")?;
                let (arity, arity_at) = self.int()?;
                if arity == 0 {
                    return Err(diag(Code::Arity, &arity_at, format!("`{sym}` is nullary; declare it with `const`")));
                }
                (sym, arity, sym_at)
            } else if self.is_keyword("const") {
                self.next();
                let (sym, sym_at) = self.ident()?;
                (sym, 1, sym_at)
            } else {
                return Err(self.unexpected("`op`, `const` or `}`"));
            };
            self.punct(";")?;
            if symbols.iter().any(|(s, _)| *s == sym) {
                return Err(diag(Code::Duplicate, &sym_at, format!("symbol `{sym}` is declared twice")));
            }
            if !is_identifier(&sym) || is_variable_name(&sym) {
                return Err(diag(Code::Invalid, &sym_at, format!("`{sym}` cannot be a symbol name")));
            }
            symbols.push((sym, arity));
        }
        let sig = Signature::new(symbols).map_err(|e| invalid(&at, e))?;
        self.bundle.signatures.push((name, sig));
        Ok(())
    }

    fn element(&mut self, size: usize, labels: Option<&[String]>) -> Parsed<Elem> {
        match self.peek().tok.clone() {
            Tok::Int(n) => {
                let at = self.next();
                if n >= size {
                    return Err(diag(Code::Invalid, &at, format!("element {n} is outside a universe of size {size}")));
                }
                Ok(n)
            }
            Tok::Str(s) => {
                let at = self.next();
                labels
                    .and_then(|ls| ls.iter().position(|l| *l == s))
                    .ok_or_else(|| diag(Code::Dangling, &at, format!("no element labelled \"{s}\"")))
            }
            _ => Err(self.unexpected("an element index or label")),
        }
    }

    fn algebra(&mut self) -> Parsed<()> {
        let (name, at) = self.ident()?;
        self.declare(&name, &at, Kind::Algebra)?;
        self.keyword("over")?;
        let (sig_name, sig_at) = self.ident()?;
        self.reference(&sig_name, &sig_at, Kind::Signature)?;
        let sig = self.bundle.signature(&sig_name).expect("declared").clone();
        self.punct("{")?;
        self.keyword("universe")?;
        let (size, size_at) = self.int()?;
        if size == 0 {
            return Err(diag(Code::Invalid, &size_at, "the universe must be non-empty"));
        }
        self.punct(";")?;
        let mut labels: Option<Vec<String>> = None;
        if self.is_keyword("labels") {
            self.next();
            self.punct("[")?;
            let ls = self.list("]", |p| match p.peek().tok.clone() {
                Tok::Str(s) => {
                    p.next();
                    Ok(s)
                }
                _ => Err(p.unexpected("a quoted label")),
            })?;
            self.punct(";")?;
            labels = Some(ls);
        }
        let mut tables: Vec<Option<Vec<Elem>>> = vec![None; sig.len()];
        while !self.eat_punct("}") {
            let constant = if self.is_keyword("table") {
                false
            } else if self.is_keyword("const") {
                true
            } else {
                return Err(self.unexpected("`table`, `const` or `}`"));
            };
            self.next();
            let (sym_name, sym_at) = self.ident()?;
            let sym = sig
                .lookup(&sym_name)
                .ok_or_else(|| diag(Code::Dangling, &sym_at, format!("`{sym_name}` is not a symbol of `{sig_name}`")))?;
            if tables[sym].is_some() {
                return Err(diag(Code::Duplicate, &sym_at, format!("`{sym_name}` already has a table")));
            }
            self.punct("=")?;
            let table = if constant {
                if sig.arity(sym) != 1 {
                    return Err(diag(Code::Arity, &sym_at, format!("`{sym_name}` has arity {}, constants are unary", sig.arity(sym))));
                }
                vec![self.element(size, labels.as_deref())?; size]
            } else {
                let open = self.punct("[")?;
                let t = self.list("]", |p| p.element(size, labels.as_deref()))?;
                let want = size.checked_pow(sig.arity(sym) as u32).unwrap_or(usize::MAX);
                if t.len() != want {
                    return Err(diag(Code::Invalid, &open, format!(
                        "table of `{sym_name}` has {} entries, expected {want}",
                        t.len()
                    )));
                }
                t
            };
            self.punct(";")?;
            tables[sym] = Some(table);
        }
        if let Some(missing) = tables.iter().position(Option::is_none) {
            return Err(diag(Code::Invalid, &at, format!("no table for `{}`", sig.name(missing))));
        }
        let mut alg = FiniteAlgebra::new(sig, size, tables.into_iter().map(Option::unwrap).collect())
            .map_err(|e| invalid(&at, e))?;
        if let Some(ls) = labels {
            alg = alg.with_labels(ls).map_err(|e| invalid(&at, e))?;
        }
        self.bundle.algebras.push(AlgebraDecl { name, signature: sig_name, algebra: alg });
        Ok(())
    }

    fn matrix(&mut self) -> Parsed<()> {
        let (name, at) = self.ident()?;
        self.declare(&name, &at, Kind::Matrix)?;
        self.punct("{")?;
        self.keyword("algebra")?;
        let (alg_name, alg_at) = self.ident()?;
        self.reference(&alg_name, &alg_at, Kind::Algebra)?;
        let alg = self.bundle.algebra(&alg_name).expect("declared").clone();
        self.punct(";")?;
        self.keyword("designated")?;
        self.punct("{")?;
        let elems = self.list("}", |p| p.element(alg.size(), alg.labels()))?;
        self.punct(";")?;
        self.punct("}")?;
        let matrix = Matrix::new(alg.clone(), Subset::from_elems(alg.size(), elems)).map_err(|e| invalid(&at, e))?;
        self.bundle.matrices.push(MatrixDecl { name, algebra: alg_name, matrix });
        Ok(())
    }

    fn matrix_ref(&mut self) -> Parsed<(String, Matrix)> {
        let (name, at) = self.ident()?;
        self.reference(&name, &at, Kind::Matrix)?;
        Ok((name.clone(), self.bundle.matrix(&name).expect("declared").clone()))
    }

    fn product(&mut self) -> Parsed<()> {
        let (name, at) = self.ident()?;
        self.declare(&name, &at, Kind::Matrix)?;
        self.keyword("of")?;
        let mut factors = vec![self.matrix_ref()?];
        while self.eat_punct(",") {
            factors.push(self.matrix_ref()?);
        }
        let sigs: Vec<Signature> = factors.iter().map(|(_, m)| m.signature().clone()).collect();
        let explicit = if self.is_keyword("default") {
            self.next();
            self.punct(";")?;
            None
        } else {
            self.punct("{")?;
            let mut syms: Vec<ProductSymbol> = Vec::new();
            while !self.eat_punct("}") {
                self.keyword("sym")?;
                let (sym, sym_at) = self.ident()?;
                if syms.iter().any(|s| s.name == sym) {
                    return Err(diag(Code::Duplicate, &sym_at, format!("product symbol `{sym}` is declared twice")));
                }
                self.punct("/")?;
                let (arity, arity_at) = self.int()?;
                if arity == 0 {
                    return Err(diag(Code::Arity, &arity_at, "product symbols need a positive arity"));
                }
                self.punct("=")?;
                let open = self.punct("<")?;
                let mut components = Vec::new();
                loop {
                    let Some(sig) = sigs.get(components.len()) else {
                        return Err(diag(Code::Arity, &open, format!("more components than the {} factors", sigs.len())));
                    };
                    components.push(self.term_within(sig, arity)?);
                    if self.eat_punct(">") {
                        break;
                    }
                    self.punct("|")?;
                }
                if components.len() != sigs.len() {
                    return Err(diag(Code::Arity, &open, format!(
                        "{} components for {} factors",
                        components.len(),
                        sigs.len()
                    )));
                }
                self.punct(";")?;
                syms.push(ProductSymbol::new(sym, arity, components));
            }
            Some(syms)
        };
        let snapshot = match &explicit {
            Some(s) => s.clone(),
            None => default_snapshot(&sigs, None).map_err(|e| invalid(&at, e))?,
        };
        let ms: Vec<Matrix> = factors.iter().map(|(_, m)| m.clone()).collect();
        let product = non_indexed_product(&ms, &snapshot).map_err(|e| invalid(&at, e))?;
        self.bundle.products.push(ProductDecl {
            name,
            factors: factors.into_iter().map(|(n, _)| n).collect(),
            explicit,
            product,
        });
        Ok(())
    }

    fn logic(&mut self) -> Parsed<()> {
        let (name, at) = self.ident()?;
        self.declare(&name, &at, Kind::Logic)?;
        self.punct("=")?;
        if self.is_keyword("matrices") {
            self.next();
            self.punct("(")?;
            let gens = self.list(")", |p| p.matrix_ref())?;
            self.punct(";")?;
            let Some((_, first)) = gens.first() else {
                return Err(diag(Code::Invalid, &at, "a logic needs at least one matrix"));
            };
            let sig = first.signature().clone();
            let logic = LogicPresentation::from_matrices(
                name,
                sig,
                gens.iter().map(|(_, m)| m.clone()).collect(),
            )
            .map_err(|e| invalid(&at, e))?;
            self.bundle.logics.push(LogicDecl {
                source: LogicSource::Matrices(gens.into_iter().map(|(n, _)| n).collect()),
                logic,
            });
        } else if self.is_keyword("rules") {
            let rules_at = self.next();
            // Without `over`, the rules range over the latest signature.
            let sig_name = if self.is_keyword("over") {
                self.next();
                let (sig_name, sig_at) = self.ident()?;
                self.reference(&sig_name, &sig_at, Kind::Signature)?;
                sig_name
            } else {
                match self.bundle.signatures.last() {
                    Some((n, _)) => n.clone(),
                    None => return Err(diag(Code::Dangling, &rules_at, "no signature declared before these rules")),
                }
            };
            let sig = self.bundle.signature(&sig_name).expect("declared").clone();
            self.punct("{")?;
            let mut rules = Vec::new();
            while !self.eat_punct("}") {
                let mut premises = Vec::new();
                if !self.is_punct("|-") {
                    premises.push(self.term(&sig)?);
                    while self.eat_punct(",") {
                        premises.push(self.term(&sig)?);
                    }
                }
                self.punct("|-")?;
                let conclusion = self.term(&sig)?;
                self.punct(";")?;
                rules.push(Rule::new(premises, conclusion));
            }
            let logic = LogicPresentation::from_rules(name, sig, rules).map_err(|e| invalid(&at, e))?;
            self.bundle.logics.push(LogicDecl {
                source: LogicSource::Rules { signature: sig_name },
                logic,
            });
        } else {
            return Err(self.unexpected("`matrices` or `rules`"));
        }
        Ok(())
    }

    fn translation(&mut self) -> Parsed<()> {
        let (name, at) = self.ident()?;
        self.declare(&name, &at, Kind::Translation)?;
        self.punct(":")?;
        let (src_name, src_at) = self.ident()?;
        self.reference(&src_name, &src_at, Kind::Signature)?;
        self.punct("->")?;
        let (tgt_name, tgt_at) = self.ident()?;
        self.reference(&tgt_name, &tgt_at, Kind::Signature)?;
        let src = self.bundle.signature(&src_name).expect("declared").clone();
        let tgt = self.bundle.signature(&tgt_name).expect("declared").clone();
        self.punct("{")?;
        let mut images: Vec<Option<Term>> = vec![None; src.len()];
        while !self.eat_punct("}") {
            let (sym_name, sym_at) = self.ident()?;
            let sym = src
                .lookup(&sym_name)
                .ok_or_else(|| diag(Code::Dangling, &sym_at, format!("`{sym_name}` is not a symbol of `{src_name}`")))?;
            if images[sym].is_some() {
                return Err(diag(Code::Duplicate, &sym_at, format!("`{sym_name}` already has an image")));
            }
            self.punct("(")?;
            let vars = self.list(")", |p| {
                let (v, v_at) = p.ident()?;
                Ok((v, v_at))
            })?;
            let n = src.arity(sym);
            if vars.len() != n {
                return Err(diag(Code::Arity, &sym_at, format!("`{sym_name}` takes {n} arguments, found {}", vars.len())));
            }
            for (i, (v, v_at)) in vars.iter().enumerate() {
                if *v != format!("x{}", i + 1) {
                    return Err(diag(Code::Syntax, v_at, format!("expected `x{}` on the left of `->`", i + 1)));
                }
            }
            self.punct("->")?;
            let image = self.term_within(&tgt, n)?;
            self.punct(";")?;
            images[sym] = Some(image);
        }
        if let Some(missing) = images.iter().position(Option::is_none) {
            return Err(diag(Code::Invalid, &at, format!("no image for `{}`", src.name(missing))));
        }
        let translation = Translation::new(src, tgt, images.into_iter().map(Option::unwrap).collect())
            .map_err(|e| invalid(&at, e))?;
        self.bundle.translations.push(TranslationDecl {
            name,
            source: src_name,
            target: tgt_name,
            translation,
        });
        Ok(())
    }

    /// A term whose variables are among `x1..x<arity>`.
    fn term_within(&mut self, sig: &Signature, arity: usize) -> Parsed<Term> {
        let start = self.peek().clone();
        let t = self.term(sig)?;
        if let Some(v) = t.vars().into_iter().find(|&v| v as usize > arity) {
            return Err(diag(Code::Invalid, &start, format!("x{v} is outside x1..x{arity}")));
        }
        Ok(t)
    }

    fn term(&mut self, sig: &Signature) -> Parsed<Term> {
        let (name, at) = self.ident()?;
        if is_variable_name(&name) {
            let index: u32 = name[1..]
                .parse()
                .ok()
                .filter(|&i| i > 0)
                .ok_or_else(|| diag(Code::Invalid, &at, format!("variable `{name}` is out of range")))?;
            return Ok(Term::Var(index));
        }
        let sym = sig
            .lookup(&name)
            .ok_or_else(|| diag(Code::Dangling, &at, format!("unknown symbol `{name}`")))?;
        self.punct("(")?;
        let args = self.list(")", |p| p.term(sig))?;
        if args.len() != sig.arity(sym) {
            return Err(diag(Code::Arity, &at, format!(
                "`{name}` takes {} arguments, found {}",
                sig.arity(sym),
                args.len()
            )));
        }
        Ok(Term::App(sym, args))
    }
}

/// Interns a punctuation string as the lexer's static form.
fn punct(p: &str) -> &'static str {
    match p {
        "|-" => "|-",
        "->" => "->",
        "{" => "{",
        "}" => "}",
        "(" => "(",
        ")" => ")",
        "[" => "[",
        "]" => "]",
        "<" => "<",
        ">" => ">",
        ";" => ";",
        "," => ",",
        "=" => "=",
        "/" => "/",
        "|" => "|",
        ":" => ":",
        _ => unreachable!("not a punctuation token: {p}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const HEAD: &str = "signature S { op join/2; const a; }\n";

    fn fails(body: &str) -> (Code, usize, usize) {
        let d = parse_spec(&format!("{HEAD}{body}")).unwrap_err();
        (d.code, d.line, d.col)
    }

    #[test]
    fn constants_desugar_to_unary_tables() {
        let b = parse_spec(&format!(
            "{HEAD}algebra B over S {{ universe 2; labels [\"lo\", \"hi\"]; table join = [0,1,1,1]; const a = \"hi\"; }}"
        ))
        .unwrap();
        let alg = b.algebra("B").unwrap();
        assert_eq!(alg.signature().arity(1), 1);
        assert_eq!(alg.table(1), &[1, 1]);
    }

    #[test]
    fn arity_mismatch_in_a_term() {
        let body = "logic L = rules over S {\n  |- join(x1, x2, x3);\n}";
        assert_eq!(fails(body), (Code::Arity, 3, 6));
    }

    #[test]
    fn duplicate_names() {
        assert_eq!(fails("signature S { op f/1; }").0, Code::Duplicate);
        assert_eq!(fails("signature T { op f/1; op f/2; }").0, Code::Duplicate);
    }

    #[test]
    fn dangling_references() {
        assert_eq!(fails("matrix M { algebra Nope; designated {}; }"), (Code::Dangling, 2, 20));
        assert_eq!(fails("logic L = rules over S { |- meet(x1, x1); }").0, Code::Dangling);
        // A signature name where a matrix is expected.
        assert_eq!(fails("logic L = matrices(S);").0, Code::Dangling);
    }

    #[test]
    fn invalid_definitions() {
        assert_eq!(fails("algebra B over S { universe 2; table join = [0, 1]; const a = 0; }").0, Code::Invalid);
        assert_eq!(fails("algebra B over S { universe 2; table join = [0, 1, 1, 2]; const a = 0; }").0, Code::Invalid);
        assert_eq!(fails("algebra B over S { universe 2; table join = [0, 1, 1, 1]; }").0, Code::Invalid);
        assert_eq!(fails("translation T : S -> S { join(x1, x2) -> join(x1, x3); a(x1) -> x1; }").0, Code::Invalid);
        assert_eq!(fails("translation T : S -> S { join(x1, x2) -> x1; }").0, Code::Invalid);
    }

    #[test]
    fn syntax_errors() {
        assert_eq!(fails("algebra B S {}").0, Code::Syntax);
        assert_eq!(fails("widget W;").0, Code::Syntax);
        assert_eq!(fails("translation T : S -> S { join(x2, x1) -> x1; a(x1) -> x1; }").0, Code::Syntax);
    }

    #[test]
    fn standalone_terms() {
        let sig = Signature::new([("join", 2), ("a", 1)]).unwrap();
        assert_eq!(
            parse_term(&sig, "join(x1, a(x2))").unwrap(),
            Term::App(0, vec![Term::Var(1), Term::App(1, vec![Term::Var(2)])])
        );
        assert_eq!(parse_term(&sig, "x1 x2").unwrap_err().code, Code::Syntax);
        assert_eq!(parse_term(&sig, "a(x1, x2)").unwrap_err().code, Code::Arity);
    }

    #[test]
    fn rules_default_to_the_latest_signature() {
        let b = parse_spec(&format!("{HEAD}logic L = rules {{ x1 |- join(x1, x2); }}")).unwrap();
        assert_eq!(b.logic("L").unwrap().signature(), b.signature("S").unwrap());
        assert!(matches!(&b.logics[0].source, LogicSource::Rules { signature } if signature == "S"));
    }

    #[test]
    fn explicit_product_symbols() {
        let text = format!(
            "{HEAD}algebra B over S {{ universe 2; table join = [0,1,1,1]; const a = 1; }}\n\
             matrix M {{ algebra B; designated {{1}}; }}\n\
             product P of M, M {{ sym p/2 = <join(x1, x2) | x2>; sym q/1 = <a(x1) | x1>; }}"
        );
        let b = parse_spec(&text).unwrap();
        let p = b.product("P").unwrap();
        assert_eq!(p.matrix.size(), 4);
        assert_eq!(p.matrix.signature().len(), 2);
        assert_eq!(p.matrix.designated().to_vec(), vec![3]);
        let short = text.replace(" | x2>", ">");
        assert_eq!(parse_spec(&short).unwrap_err().code, Code::Arity);
    }
}
