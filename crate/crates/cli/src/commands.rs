use std::path::PathBuf;

use serde_json::{json, Value};

use aalkit_core::algebra::is_homomorphism;
use aalkit_core::casebook::{self, ENTRIES};
use aalkit_core::congruence::{is_reduced, leibniz_congruence, reduce as reduce_matrix, suszko_congruence};
use aalkit_core::constructions::{
    default_power_snapshot, default_snapshot, diagonal_power_matrix, flat_decomposition, fuse as fuse_matrices,
    in_fusion_class, non_indexed_product, power_class_witness,
};
use aalkit_core::interp::{self, InterpretationCertificate, InterpretationMode};
use aalkit_core::logic::{self, Presentation};
use aalkit_core::syntax::dsl::{print_bundle, AlgebraDecl, MatrixDecl, WorkspaceBundle};
use aalkit_core::{FiniteAlgebra, Matrix, Partition, Signature};

use crate::output::{block_labels, set_labels, set_text, Outcome};
use crate::resolve::{delta_for, load_file, parse_elements, parse_terms, CliResult, ResolvedLogic, Workspace};

fn partition_outcome(query: Value, alg: &FiniteAlgebra, name: &str, p: &Partition) -> Outcome {
    Outcome::new(query, block_labels(alg, p), format!("{name} = {}", p.display_with(alg)))
        .witness(json!({"blocks": p.num_blocks(), "identity": p.is_identity()}))
}

pub fn parse<'a>(files: impl Iterator<Item = &'a PathBuf>) -> CliResult<Outcome> {
    let mut text = String::new();
    let mut listed = serde_json::Map::new();
    for path in files {
        let b = load_file(path)?;
        let names = b.names();
        text.push_str(&format!("{}: {} declarations: {}\n", path.display(), names.len(), names.join(", ")));
        listed.insert(path.display().to_string(), json!(names));
    }
    Ok(Outcome::new(json!({"command": "parse"}), json!(true), text).witness(Value::Object(listed)))
}

pub fn leibniz(ws: &Workspace, r: &str, designated: Option<&str>) -> CliResult<Outcome> {
    let m = ws.matrix(r, designated)?;
    let p = leibniz_congruence(&m);
    let query = json!({"command": "leibniz", "matrix": r, "designated": set_labels(m.algebra(), m.designated())});
    Ok(partition_outcome(query, m.algebra(), "leibniz", &p))
}

pub fn suszko(ws: &Workspace, l: &str, r: &str, designated: Option<&str>) -> CliResult<Outcome> {
    let logic = ws.logic(l)?.logic;
    let m = ws.matrix(r, designated)?;
    let p = suszko_congruence(&logic, &m)?;
    let query = json!({
        "command": "suszko",
        "logic": l,
        "matrix": r,
        "designated": set_labels(m.algebra(), m.designated()),
    });
    Ok(partition_outcome(query, m.algebra(), "suszko", &p))
}

pub fn reduce(ws: &Workspace, r: &str, designated: Option<&str>) -> CliResult<Outcome> {
    let m = ws.matrix(r, designated)?;
    let classes = leibniz_congruence(&m);
    let reduced = reduce_matrix(&m);
    let mut bundle = WorkspaceBundle::default();
    bundle.signatures.push(("S".into(), reduced.signature().clone()));
    bundle.algebras.push(AlgebraDecl {
        name: "R".into(),
        signature: "S".into(),
        algebra: reduced.algebra().clone(),
    });
    bundle.matrices.push(MatrixDecl {
        name: "Reduced".into(),
        algebra: "R".into(),
        matrix: reduced.clone(),
    });
    let query = json!({"command": "reduce", "matrix": r, "designated": set_labels(m.algebra(), m.designated())});
    Ok(Outcome::new(query, reduced.to_json(), print_bundle(&bundle))
        .witness(json!({"classes": block_labels(m.algebra(), &classes)})))
}

pub fn filters(ws: &Workspace, l: &str, a: &str) -> CliResult<Outcome> {
    let logic = ws.logic(l)?.logic;
    let alg = ws.algebra(a)?;
    let fs = logic::enumerate_filters(&logic, &alg)?;
    let text: Vec<String> = fs.iter().map(|f| set_text(&alg, f)).collect();
    let answer: Vec<Vec<String>> = fs.iter().map(|f| set_labels(&alg, f)).collect();
    let query = json!({"command": "filters", "logic": l, "algebra": a});
    Ok(Outcome::new(query, json!(answer), text.join("\n")).witness(json!({"count": fs.len()})))
}

pub fn fg(ws: &Workspace, l: &str, a: &str, generators: &str) -> CliResult<Outcome> {
    let logic = ws.logic(l)?.logic;
    let alg = ws.algebra(a)?;
    let seed = parse_elements(&alg, generators)?;
    let f = logic::generate_filter(&logic, &alg, &seed)?;
    let query = json!({"command": "fg", "logic": l, "algebra": a, "generators": set_labels(&alg, &seed)});
    Ok(Outcome::new(query, json!(set_labels(&alg, &f)), format!("fg({}) = {}", set_text(&alg, &seed), set_text(&alg, &f))))
}

pub fn check_filter(ws: &Workspace, l: &str, r: &str, designated: Option<&str>) -> CliResult<Outcome> {
    let logic = ws.logic(l)?.logic;
    let m = ws.matrix(r, designated)?;
    let alg = m.algebra();
    let query = json!({"command": "check-filter", "logic": l, "matrix": r, "designated": set_labels(alg, m.designated())});
    let f = set_text(alg, m.designated());
    Ok(match logic::check_filter(&logic, &m)? {
        None => Outcome::new(query, json!(true), format!("{f} is a filter of {}", logic.name())),
        Some(w) => Outcome::new(
            query,
            json!(false),
            format!("{f} is not a filter of {}: it forces {}", logic.name(), alg.label(w.element())),
        )
        .witness(w.to_json(&logic, alg))
        .holds(false),
    })
}

pub fn consequence(ws: &Workspace, l: &str, premises: &[String], conclusion: &str) -> CliResult<Outcome> {
    let logic = ws.logic(l)?.logic;
    let sig = logic.signature();
    let ps = parse_terms(sig, premises)?;
    let c = parse_terms(sig, &[conclusion.to_string()])?.remove(0);
    let shown: Vec<String> = ps.iter().map(|t| t.display(sig).to_string()).collect();
    let rule = format!("{} |- {}", shown.join(", "), c.display(sig));
    let query = json!({"command": "consequence", "logic": l, "premises": shown, "conclusion": c.display(sig).to_string()});
    Ok(match logic::counterexample(&logic, &ps, &c)? {
        None => Outcome::new(query, json!(true), format!("{rule} holds in {}", logic.name())),
        Some(cx) => {
            let alg = logic.generators().expect("counterexamples come from generators")[cx.generator].algebra();
            let asg: serde_json::Map<String, Value> =
                cx.assignment.iter().map(|(v, e)| (format!("x{v}"), json!(alg.label(*e)))).collect();
            let shown_asg: Vec<String> = cx.assignment.iter().map(|(v, e)| format!("x{v}={}", alg.label(*e))).collect();
            Outcome::new(
                query,
                json!(false),
                format!("{rule} fails in generator {} at {}", cx.generator, shown_asg.join(", ")),
            )
            .witness(json!({"generator": cx.generator, "assignment": asg}))
            .holds(false)
        }
    })
}

fn matrices(ws: &Workspace, refs: &[String]) -> CliResult<Vec<Matrix>> {
    refs.iter().map(|r| ws.matrix(r, None)).collect()
}

fn signatures(ms: &[Matrix]) -> Vec<Signature> {
    ms.iter().map(|m| m.signature().clone()).collect()
}

pub fn product(ws: &Workspace, refs: &[String]) -> CliResult<Outcome> {
    let ms = matrices(ws, refs)?;
    let snapshot = default_snapshot(&signatures(&ms), None)?;
    let p = non_indexed_product(&ms, &snapshot)?;
    let reduced = is_reduced(&p.matrix);
    let symbols: Vec<String> = snapshot.iter().map(|s| format!("{}/{}", s.name, s.arity())).collect();
    let text = format!(
        "product of {}: {} elements, {} designated, {}\nsymbols: {}",
        refs.join(", "),
        p.matrix.size(),
        p.matrix.designated().count(),
        if reduced { "reduced" } else { "not reduced" },
        symbols.join(", ")
    );
    let query = json!({"command": "product", "factors": refs, "snapshot": "default"});
    Ok(Outcome::new(query, p.matrix.to_json(), text)
        .witness(json!({"reduced": reduced, "factor_sizes": p.factor_sizes, "symbols": symbols})))
}

pub fn flat(ws: &Workspace, refs: &[String]) -> CliResult<Outcome> {
    let ms = matrices(ws, refs)?;
    let snapshot = default_snapshot(&signatures(&ms), None)?;
    let d = flat_decomposition(&ms, &snapshot)?;
    let target = &d.product.matrix;
    let mut seen = vec![false; target.size()];
    for &x in &d.map {
        seen[x] = true;
    }
    let bijective = d.map.len() == target.size() && seen.iter().all(|&s| s);
    let homomorphism = is_homomorphism(d.flats_product.algebra(), target.algebra(), &d.map);
    let designation = (0..d.map.len()).all(|e| d.flats_product.is_designated(e) == target.is_designated(d.map[e]));
    let iso = bijective && homomorphism && designation;
    let text = format!(
        "product of flats: {} elements; product: {} elements; diagonal map is {}an isomorphism",
        d.flats_product.size(),
        target.size(),
        if iso { "" } else { "not " }
    );
    let query = json!({"command": "flat", "factors": refs, "snapshot": "default"});
    Ok(Outcome::new(query, json!(iso), text)
        .witness(json!({
            "map": d.map,
            "bijective": bijective,
            "homomorphism": homomorphism,
            "preserves_designation": designation,
        }))
        .holds(iso))
}

pub fn fuse(ws: &Workspace, left: &str, right: &str, logics: Option<&[String]>) -> CliResult<Outcome> {
    let fm = fuse_matrices(&ws.matrix(left, None)?, &ws.matrix(right, None)?)?;
    let symbols: Vec<String> = fm.signature.signature.symbols().iter().map(|s| format!("{}/{}", s.name, s.arity)).collect();
    let mut query = json!({"command": "fuse", "left": left, "right": right});
    let mut text = format!(
        "fusion: {} elements, symbols {}",
        fm.matrix.size(),
        symbols.join(", ")
    );
    let mut witness = json!({"matrix": fm.matrix.to_json()});
    let mut holds = true;
    if let Some(names) = logics {
        let ls = names.iter().map(|n| ws.logic(n).map(|r| r.logic)).collect::<CliResult<Vec<_>>>()?;
        holds = in_fusion_class(&fm, &ls)?;
        query["logics"] = json!(names);
        witness["in_fusion_class"] = json!(holds);
        text.push_str(&format!(
            "\n{} the model class of the fusion of {}",
            if holds { "in" } else { "not in" },
            names.join(" and ")
        ));
    }
    Ok(Outcome::new(query, json!(holds), text).witness(witness).holds(holds))
}

pub fn matrix_power(ws: &Workspace, a: &str, compare: Option<&str>) -> CliResult<Outcome> {
    let alg = ws.algebra(a)?;
    let snapshot = default_power_snapshot(&alg);
    let m = diagonal_power_matrix(&alg, &snapshot)?;
    let names: Vec<&str> = snapshot.iter().map(|(n, _)| n.as_str()).collect();
    let mut query = json!({"command": "matrix-power", "algebra": a});
    let mut text = format!(
        "diagonal power matrix: {} elements, {} designated, symbols {}",
        m.size(),
        m.designated().count(),
        names.join(", ")
    );
    let mut holds = true;
    if let Some(r) = compare {
        let other = ws.matrix(r, None)?;
        holds = power_class_witness(&other, std::slice::from_ref(&alg), default_power_snapshot)?.is_some();
        query["compare"] = json!(r);
        text.push_str(&format!("\n{r} is {}isomorphic to it", if holds { "" } else { "not " }));
    }
    Ok(Outcome::new(query, m.to_json(), text).witness(json!({"isomorphic": compare.map(|_| holds)})).holds(holds))
}

fn require_delta(l: &ResolvedLogic, text: Option<&str>) -> CliResult<aalkit_core::CongruenceFormulaSet> {
    delta_for(l, text)?.ok_or_else(|| {
        crate::resolve::CliError::Usage(format!("no congruence formulas known for {}; pass --delta", l.logic.name()))
    })
}

fn delta_strings(sig: &Signature, delta: &aalkit_core::CongruenceFormulaSet) -> Vec<String> {
    delta.terms().iter().map(|t| t.display(sig).to_string()).collect()
}

pub fn check_equivalential(ws: &Workspace, l: &str, delta: Option<&str>) -> CliResult<Outcome> {
    let resolved = ws.logic(l)?;
    let logic = &resolved.logic;
    if matches!(logic.presentation(), Presentation::Rules(_)) {
        return Err(crate::resolve::CliError::Usage(
            "check-equivalential needs a matrix-presented logic".into(),
        ));
    }
    let d = require_delta(&resolved, delta)?;
    let shown = delta_strings(logic.signature(), &d);
    let query = json!({"command": "check-equivalential", "logic": l, "delta": shown});
    Ok(match logic::equivalential_failure(logic, &d)? {
        None => Outcome::new(
            query,
            json!(true),
            format!("{} is equivalential with delta {{{}}}", logic.name(), shown.join(", ")),
        ),
        Some(f) => {
            let sig = logic.signature();
            let alg = logic.generators().expect("matrix-presented")[f.counterexample.generator].algebra();
            let asg: serde_json::Map<String, Value> = f
                .counterexample
                .assignment
                .iter()
                .map(|(v, e)| (format!("x{v}"), json!(alg.label(*e))))
                .collect();
            Outcome::new(
                query,
                json!(false),
                format!("{} fails: {}", f.family, f.rule.display(sig)),
            )
            .witness(json!({
                "family": f.family,
                "rule": f.rule.display(sig).to_string(),
                "generator": f.counterexample.generator,
                "assignment": asg,
            }))
            .holds(false)
        }
    })
}

fn pick_mode(
    target: &ResolvedLogic,
    mode: Option<InterpretationMode>,
    delta: Option<&str>,
) -> CliResult<(InterpretationMode, Option<aalkit_core::CongruenceFormulaSet>)> {
    let d = delta_for(target, delta)?;
    let mode = mode.unwrap_or(if d.is_some() {
        InterpretationMode::Equivalential
    } else {
        InterpretationMode::Generators
    });
    Ok((mode, d))
}

fn certificate_text(cert: &InterpretationCertificate) -> String {
    let tr = &cert.translation;
    let mut lines = vec![format!(
        "{} -> {} ({}): {}",
        cert.source,
        cert.target,
        cert.mode.name(),
        if cert.holds { "interpretation" } else { "not an interpretation" }
    )];
    for s in 0..tr.source().len() {
        let args: Vec<String> = (1..=tr.source().arity(s)).map(|i| format!("x{i}")).collect();
        lines.push(format!(
            "  {}({}) -> {}",
            tr.source().name(s),
            args.join(", "),
            tr.image(s).display(tr.target())
        ));
    }
    if let Some(e) = cert.failure() {
        lines.push(format!("  fails on generator {} restricted to {:?}", e.generator, e.subuniverse));
    }
    if cert.generator_relative() {
        lines.push("  (relative to the listed generators)".into());
    }
    lines.join("\n")
}

pub fn check_interpretation(
    ws: &Workspace,
    from: &str,
    to: &str,
    translation: &str,
    mode: Option<InterpretationMode>,
    delta: Option<&str>,
) -> CliResult<Outcome> {
    let source = ws.logic(from)?;
    let target = ws.logic(to)?;
    let (mode, d) = pick_mode(&target, mode, delta)?;
    let tr = ws.translation(translation, source.logic.signature(), target.logic.signature())?;
    let cert = interp::check_interpretation(&tr, &source.logic, &target.logic, mode, d.as_ref())?;
    let verified = cert.verify(&source.logic, &target.logic)?;
    let query = json!({
        "command": "check-interpretation",
        "from": from,
        "to": to,
        "translation": translation,
        "mode": mode.name(),
    });
    let mut witness = cert.to_json();
    witness["reverified"] = json!(verified);
    Ok(Outcome::new(query, json!(cert.holds), certificate_text(&cert))
        .witness(witness)
        .holds(cert.holds))
}

pub fn search_interpretation(
    ws: &Workspace,
    from: &str,
    to: &str,
    depth: usize,
    mode: Option<InterpretationMode>,
    delta: Option<&str>,
) -> CliResult<Outcome> {
    let source = ws.logic(from)?;
    let target = ws.logic(to)?;
    let (mode, d) = pick_mode(&target, mode, delta)?;
    let outcome = interp::search_interpretation(&source.logic, &target.logic, depth, mode, d.as_ref())?;
    let query = json!({
        "command": "search-interpretation",
        "from": from,
        "to": to,
        "depth": depth,
        "mode": mode.name(),
    });
    let stats = format!("{} of {} candidates examined", outcome.tried, outcome.candidates);
    Ok(match &outcome.found {
        Some(cert) => {
            let mut witness = cert.to_json();
            witness["candidates"] = json!(outcome.candidates);
            witness["tried"] = json!(outcome.tried);
            witness["reverified"] = json!(cert.verify(&source.logic, &target.logic)?);
            Outcome::new(query, json!(true), format!("{}\n{stats}", certificate_text(cert))).witness(witness)
        }
        None => Outcome::new(query, json!(false), format!("no interpretation of depth <= {depth}; {stats}"))
            .witness(json!({"candidates": outcome.candidates, "tried": outcome.tried}))
            .holds(false),
    })
}

pub fn casebook_list() -> Outcome {
    let text: Vec<String> = ENTRIES.iter().map(|(id, summary)| format!("{id:<24} {summary}")).collect();
    let answer: Vec<Value> = ENTRIES.iter().map(|(id, summary)| json!({"id": id, "summary": summary})).collect();
    Outcome::new(json!({"command": "casebook list"}), json!(answer), text.join("\n"))
}

pub fn casebook_verify(id: Option<&str>) -> CliResult<Outcome> {
    let reports = match id {
        Some(id) => vec![casebook::verify(id)?],
        None => casebook::verify_all()?,
    };
    let holds = reports.iter().all(|r| r.passed());
    let mut text = String::new();
    for r in &reports {
        text.push_str(&r.to_string());
    }
    let query = json!({"command": "casebook verify", "id": id.unwrap_or("--all")});
    let answer: Vec<Value> = reports.iter().map(|r| r.to_json()).collect();
    Ok(Outcome::new(query, json!(holds), text).witness(json!(answer)).holds(holds))
}
