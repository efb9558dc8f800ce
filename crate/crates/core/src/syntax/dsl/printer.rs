use std::fmt::Write;

use super::{LogicSource, WorkspaceBundle};
use crate::algebra::Elem;
use crate::logic::Presentation;
use crate::syntax::Term;

/// Renders a bundle in the workspace format. Elements are printed as indices,
/// constants as unary tables, so `parse_spec(print_bundle(b)) == b`.
pub fn print_bundle(bundle: &WorkspaceBundle) -> String {
    let mut out = String::new();
    for (name, sig) in &bundle.signatures {
        writeln!(out, "signature {name} {{").unwrap();
        for s in sig.symbols() {
            writeln!(out, "  op {}/{};", s.name, s.arity).unwrap();
        }
        out.push_str("}\n\n");
    }
    for decl in &bundle.algebras {
        let alg = &decl.algebra;
        writeln!(out, "algebra {} over {} {{", decl.name, decl.signature).unwrap();
        writeln!(out, "  universe {};", alg.size()).unwrap();
        if let Some(labels) = alg.labels() {
            let quoted: Vec<String> = labels.iter().map(|l| quote(l)).collect();
            writeln!(out, "  labels [{}];", quoted.join(", ")).unwrap();
        }
        for (sym, table) in alg.tables().iter().enumerate() {
            writeln!(out, "  table {} = [{}];", alg.signature().name(sym), elems(table)).unwrap();
        }
        out.push_str("}\n\n");
    }
    for decl in &bundle.matrices {
        writeln!(out, "matrix {} {{", decl.name).unwrap();
        writeln!(out, "  algebra {};", decl.algebra).unwrap();
        writeln!(out, "  designated {{{}}};", elems(&decl.matrix.designated().to_vec())).unwrap();
        out.push_str("}\n\n");
    }
    for decl in &bundle.products {
        write!(out, "product {} of {}", decl.name, decl.factors.join(", ")).unwrap();
        match &decl.explicit {
            None => out.push_str(" default;\n\n"),
            Some(syms) => {
                out.push_str(" {\n");
                let sigs: Vec<_> = decl
                    .factors
                    .iter()
                    .map(|f| bundle.matrix(f).expect("factor is declared").signature().clone())
                    .collect();
                for s in syms {
                    let parts: Vec<String> = s
                        .components()
                        .iter()
                        .zip(&sigs)
                        .map(|(t, sig)| t.display(sig).to_string())
                        .collect();
                    writeln!(out, "  sym {}/{} = <{}>;", s.name, s.arity(), parts.join(" | ")).unwrap();
                }
                out.push_str("}\n\n");
            }
        }
    }
    for decl in &bundle.logics {
        let logic = &decl.logic;
        match (&decl.source, logic.presentation()) {
            (LogicSource::Matrices(names), _) => {
                writeln!(out, "logic {} = matrices({});\n", logic.name(), names.join(", ")).unwrap();
            }
            (LogicSource::Rules { signature }, Presentation::Rules(rules)) => {
                let sig = logic.signature();
                writeln!(out, "logic {} = rules over {signature} {{", logic.name()).unwrap();
                for r in rules {
                    let premises: Vec<String> = r.premises.iter().map(|t| t.display(sig).to_string()).collect();
                    let lead = if premises.is_empty() { String::new() } else { premises.join(", ") + " " };
                    writeln!(out, "  {lead}|- {};", r.conclusion.display(sig)).unwrap();
                }
                out.push_str("}\n\n");
            }
            (LogicSource::Rules { .. }, Presentation::Matrices(_)) => {
                unreachable!("rule-sourced logic `{}` holds matrices", logic.name())
            }
        }
    }
    for decl in &bundle.translations {
        let tr = &decl.translation;
        writeln!(out, "translation {} : {} -> {} {{", decl.name, decl.source, decl.target).unwrap();
        for (sym, image) in tr.images().iter().enumerate() {
            let n = tr.source().arity(sym) as u32;
            let lhs = Term::App(sym, (1..=n).map(Term::Var).collect());
            writeln!(out, "  {} -> {};", lhs.display(tr.source()), image.display(tr.target())).unwrap();
        }
        out.push_str("}\n\n");
    }
    if out.ends_with("\n\n") {
        out.pop();
    }
    out
}

fn elems(es: &[Elem]) -> String {
    es.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ")
}

fn quote(s: &str) -> String {
    let mut q = String::with_capacity(s.len() + 2);
    q.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            q.push('\\');
        }
        q.push(c);
    }
    q.push('"');
    q
}
