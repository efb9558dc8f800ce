//! Object references: `casebook:NAME`, `FILE#NAME`, or a `NAME` declared in
//! one of the `--input` files.

use std::fs;
use std::path::{Path, PathBuf};

use aalkit_core::casebook::{self, KAPPA_CAP};
use aalkit_core::logic::CongruenceFormulaSet;
use aalkit_core::syntax::dsl::{parse_spec, parse_term, Diagnostic, WorkspaceBundle};
use aalkit_core::{Elem, FiniteAlgebra, LogicPresentation, Matrix, Signature, Subset, Term, Translation};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse { path: PathBuf, diagnostic: Diagnostic },
    Core(aalkit_core::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "error: {m}"),
            CliError::Parse { path, diagnostic } => write!(f, "{}:{diagnostic}", path.display()),
            CliError::Core(e) => write!(f, "error: {e}"),
        }
    }
}

impl From<aalkit_core::Error> for CliError {
    fn from(e: aalkit_core::Error) -> Self {
        CliError::Core(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Usage(msg.into()))
}

pub fn load_file(path: &Path) -> CliResult<WorkspaceBundle> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_spec(&text).map_err(|diagnostic| CliError::Parse {
        path: path.to_path_buf(),
        diagnostic,
    })
}

/// A logic together with the congruence formulas known to witness its
/// equivalentiality, if any.
pub struct ResolvedLogic {
    pub logic: LogicPresentation,
    pub delta: Option<CongruenceFormulaSet>,
}

pub struct Workspace {
    inputs: Vec<(PathBuf, WorkspaceBundle)>,
}

enum Source<'a> {
    Casebook(&'a str),
    Bundle(WorkspaceBundle, String),
}

impl Workspace {
    pub fn load(paths: &[PathBuf]) -> CliResult<Self> {
        let inputs = paths
            .iter()
            .map(|p| Ok((p.clone(), load_file(p)?)))
            .collect::<CliResult<_>>()?;
        Ok(Workspace { inputs })
    }

    fn source<'a>(&self, r: &'a str, has: impl Fn(&WorkspaceBundle, &str) -> bool) -> CliResult<Source<'a>> {
        if let Some(name) = r.strip_prefix("casebook:") {
            return Ok(Source::Casebook(name));
        }
        if let Some((file, name)) = r.split_once('#') {
            return Ok(Source::Bundle(load_file(Path::new(file))?, name.to_string()));
        }
        let hits: Vec<&(PathBuf, WorkspaceBundle)> = self.inputs.iter().filter(|(_, b)| has(b, r)).collect();
        match hits.as_slice() {
            [(_, b)] => Ok(Source::Bundle(b.clone(), r.to_string())),
            [] if self.inputs.is_empty() => usage(format!("`{r}` is not a casebook: reference and no --input files were given")),
            [] => usage(format!("`{r}` is not declared in the input files")),
            _ => usage(format!("`{r}` is declared in more than one input file; use FILE#{r}")),
        }
    }

    pub fn algebra(&self, r: &str) -> CliResult<FiniteAlgebra> {
        match self.source(r, |b, n| b.algebra(n).is_some())? {
            Source::Casebook(name) => builtin_algebra(name),
            Source::Bundle(b, name) => b
                .algebra(&name)
                .cloned()
                .ok_or_else(|| CliError::Usage(format!("no algebra named `{name}`"))),
        }
    }

    /// A matrix reference, or an algebra reference paired with `--designated`.
    /// An explicit designated set replaces the one a matrix carries.
    pub fn matrix(&self, r: &str, designated: Option<&str>) -> CliResult<Matrix> {
        let bare = |a: &FiniteAlgebra| Matrix::new(a.clone(), Subset::empty(a.size())).expect("empty set");
        // (matrix, whether the reference named an algebra)
        let (base, is_algebra) = match self.source(r, |b, n| b.matrix(n).is_some() || b.algebra(n).is_some())? {
            Source::Casebook(name) => match builtin_matrix(name)? {
                Some(m) => (m, false),
                None if name.starts_with('A') && alpha_kappa(name).is_some() => (bare(&builtin_algebra(name)?), true),
                None => match builtin_algebra(name) {
                    Ok(a) => (bare(&a), true),
                    Err(_) => {
                        return usage(format!(
                            "unknown casebook matrix `{name}` (matrices: {BUILTIN_MATRICES}; algebras: {BUILTIN_ALGEBRAS})"
                        ))
                    }
                },
            },
            Source::Bundle(b, name) => match (b.matrix(&name), b.algebra(&name)) {
                (Some(m), _) => (m.clone(), false),
                (None, Some(a)) => (bare(a), true),
                (None, None) => return usage(format!("no matrix or algebra named `{name}`")),
            },
        };
        match designated {
            Some(d) => {
                let set = parse_elements(base.algebra(), d)?;
                Ok(base.with_designated(set)?)
            }
            None if is_algebra => usage(format!("`{r}` is an algebra; pass --designated to make it a matrix")),
            None => Ok(base),
        }
    }

    pub fn logic(&self, r: &str) -> CliResult<ResolvedLogic> {
        match self.source(r, |b, n| b.logic(n).is_some())? {
            Source::Casebook(name) => builtin_logic(name),
            Source::Bundle(b, name) => b
                .logic(&name)
                .map(|l| ResolvedLogic { logic: l.clone(), delta: None })
                .ok_or_else(|| CliError::Usage(format!("no logic named `{name}`"))),
        }
    }

    /// A declared translation, or `by-name` for the translation sending every
    /// source symbol to the target symbol of the same name.
    pub fn translation(&self, r: &str, source: &Signature, target: &Signature) -> CliResult<Translation> {
        if r == "by-name" {
            return Ok(Translation::by_name(source, target)?);
        }
        let tr = match self.source(r, |b, n| b.translation(n).is_some())? {
            Source::Casebook(name) => return usage(format!("the casebook has no translation `{name}`; try by-name")),
            Source::Bundle(b, name) => b
                .translation(&name)
                .cloned()
                .ok_or_else(|| CliError::Usage(format!("no translation named `{name}`")))?,
        };
        if tr.source() != source || tr.target() != target {
            return usage(format!("translation `{r}` does not map between the given logics' signatures"));
        }
        Ok(tr)
    }
}

pub const BUILTIN_ALGEBRAS: &str = "A, two, join_neg_e, A<alpha>_<kappa>";
pub const BUILTIN_MATRICES: &str = "A_top, A_c, two_top, A<alpha>_<kappa>_top";
pub const BUILTIN_LOGICS: &str = "or, neg, neg_sem, kappa<k>, inconsistent, almost_inconsistent";

/// Parses `A<alpha>_<kappa>`.
fn alpha_kappa(name: &str) -> Option<(usize, usize)> {
    let (alpha, kappa) = name.strip_prefix('A')?.split_once('_')?;
    Some((alpha.parse().ok()?, kappa.parse().ok()?))
}

fn builtin_algebra(name: &str) -> CliResult<FiniteAlgebra> {
    match name {
        "A" => Ok(casebook::build_a()),
        "two" => Ok(casebook::build_two()),
        "join_neg_e" => Ok(casebook::build_join_neg_e()),
        _ => match alpha_kappa(name) {
            Some((alpha, kappa)) => Ok(casebook::build_a_alpha_kappa(alpha, kappa)?),
            None => usage(format!("unknown casebook algebra `{name}` (known: {BUILTIN_ALGEBRAS})")),
        },
    }
}

fn builtin_matrix(name: &str) -> CliResult<Option<Matrix>> {
    let top = |alg: FiniteAlgebra, elems: &[Elem]| Matrix::from_elems(alg, elems.iter().copied()).map(Some);
    Ok(match name {
        "A_top" => top(casebook::build_a(), &[casebook::ONE])?,
        "A_c" => top(casebook::build_a(), &[casebook::C, casebook::ONE])?,
        "two_top" => Some(casebook::matrix_two()),
        _ => match name.strip_suffix("_top").and_then(alpha_kappa) {
            Some((alpha, kappa)) => top(casebook::build_a_alpha_kappa(alpha, kappa)?, &[casebook::ONE])?,
            None => None,
        },
    })
}

fn builtin_logic(name: &str) -> CliResult<ResolvedLogic> {
    let plain = |logic| Ok(ResolvedLogic { logic, delta: None });
    match name {
        "or" => plain(casebook::or_logic()),
        "neg" => plain(casebook::neg_logic_rules()),
        "neg_sem" => plain(casebook::neg_logic_matrices().with_name("neg_sem")),
        "inconsistent" => plain(casebook::inconsistent_logic()),
        "almost_inconsistent" => plain(casebook::almost_inconsistent_logic()),
        _ => match name.strip_prefix("kappa").and_then(|k| k.parse::<usize>().ok()) {
            Some(kappa) if (1..=KAPPA_CAP).contains(&kappa) => Ok(ResolvedLogic {
                logic: casebook::kappa_logic(kappa)?,
                delta: Some(casebook::kappa_delta(kappa)),
            }),
            Some(_) => usage(format!("kappa must be between 1 and {KAPPA_CAP}")),
            None => usage(format!("unknown casebook logic `{name}` (known: {BUILTIN_LOGICS})")),
        },
    }
}

/// A comma-separated element list. Each item is matched against the labels
/// first and read as an index otherwise, so `1` on `A` is the top element.
pub fn parse_elements(alg: &FiniteAlgebra, text: &str) -> CliResult<Subset> {
    let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
    let mut set = Subset::empty(alg.size());
    for item in inner.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let e = alg
            .element(item)
            .or_else(|| item.parse().ok().filter(|&i: &usize| i < alg.size()))
            .ok_or_else(|| CliError::Usage(format!("`{item}` is not an element of the algebra")))?;
        set.insert(e);
    }
    Ok(set)
}

pub fn parse_terms(sig: &Signature, items: &[String]) -> CliResult<Vec<Term>> {
    items
        .iter()
        .map(|t| {
            parse_term(sig, t).map_err(|d| CliError::Usage(format!("in term `{t}`: {}", d.message)))
        })
        .collect()
}

/// `--delta` if given, else the formulas the logic came with.
pub fn delta_for(logic: &ResolvedLogic, text: Option<&str>) -> CliResult<Option<CongruenceFormulaSet>> {
    match text {
        None => Ok(logic.delta.clone()),
        Some(t) => {
            let items: Vec<String> = split_terms(t);
            let terms = parse_terms(logic.logic.signature(), &items)?;
            Ok(Some(CongruenceFormulaSet::new(terms)?))
        }
    }
}

/// Splits `f(x1, x2), g(x1)` at top-level commas.
fn split_terms(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let (mut depth, mut cur) = (0usize, String::new());
    for c in text.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur).trim().to_string());
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}
