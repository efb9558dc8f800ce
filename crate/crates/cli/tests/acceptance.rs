//! Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
//! Every oracle below is computed here, independently of the kernels it checks.

use std::collections::{BTreeSet, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use aalkit_core::casebook::{self, C, E, ONE};
use aalkit_core::congruence::{is_reduced, leibniz_congruence, reduce, suszko_congruence};
use aalkit_core::constructions::{default_snapshot, generated_submatrix, non_indexed_product, product_logic};
use aalkit_core::interp::{check_interpretation, search_interpretation, InterpretationMode};
use aalkit_core::logic::{check_equivalential, has_theorems, in_mod_eq, is_filter, leibniz_via_delta};
use aalkit_core::algebra::is_isomorphic;
use aalkit_core::{Elem, FiniteAlgebra, LogicPresentation, Matrix, Partition, Signature, Subset, Translation};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn core<T>(r: aalkit_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

// ---------------------------------------------------------------- oracles

/// Every partition of `0..n` as a restricted growth string.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, n: usize, next: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for l in 0..=next {
            cur.push(l);
            go(cur, n, next.max(l + 1), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, 0, &mut out);
    out
}

/// All argument tuples of length `k` over `0..n`, row-major.
fn tuples(n: usize, k: usize) -> Vec<Vec<Elem>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| (0..n).map(move |x| [t.clone(), vec![x]].concat()))
            .collect();
    }
    out
}

fn apply(alg: &FiniteAlgebra, f: usize, args: &[Elem]) -> Elem {
    let n = alg.size();
    alg.table(f)[args.iter().fold(0, |acc, &a| acc * n + a)]
}

/// Compatibility with every operation, checked one argument position at a time.
fn compatible(alg: &FiniteAlgebra, labels: &[usize]) -> bool {
    let n = alg.size();
    (0..alg.signature().len()).all(|f| {
        let k = alg.signature().arity(f);
        tuples(n, k).iter().all(|args| {
            (0..k).all(|pos| {
                (0..n).all(|b| {
                    if labels[args[pos]] != labels[b] {
                        return true;
                    }
                    let mut other = args.clone();
                    other[pos] = b;
                    labels[apply(alg, f, args)] == labels[apply(alg, f, &other)]
                })
            })
        })
    })
}

/// The largest congruence that does not split the designated set from its complement.
fn brute_leibniz(m: &Matrix) -> Vec<usize> {
    let n = m.size();
    partitions(n)
        .into_iter()
        .filter(|l| (0..n).all(|a| (0..n).all(|b| l[a] != l[b] || m.is_designated(a) == m.is_designated(b))))
        .filter(|l| compatible(m.algebra(), l))
        .min_by_key(|l| l.iter().max().map_or(0, |&x| x + 1))
        .expect("identity always qualifies")
}

fn same_partition(p: &Partition, labels: &[usize]) -> bool {
    let n = labels.len();
    (0..n).all(|a| (0..n).all(|b| p.relates(a, b) == (labels[a] == labels[b])))
}

fn random_matrix(rng: &mut StdRng, max_size: usize, nonempty: bool) -> Matrix {
    let n: usize = rng.gen_range(1..=max_size);
    let sig = Signature::new((0..rng.gen_range(1..=3)).map(|i| (format!("f{i}"), rng.gen_range(1..=2)))).unwrap();
    let tables = (0..sig.len())
        .map(|f| (0..n.pow(sig.arity(f) as u32)).map(|_| rng.gen_range(0..n)).collect())
        .collect();
    let alg = FiniteAlgebra::new(sig, n, tables).unwrap();
    let mut f = Subset::from_elems(n, (0..n).filter(|_| rng.gen_bool(0.5)));
    if nonempty && f.is_empty() {
        f.insert(rng.gen_range(0..n));
    }
    Matrix::new(alg, f).unwrap()
}

/// Blocks as label sets, for order-free comparison.
fn label_blocks(alg: &FiniteAlgebra, p: &Partition) -> BTreeSet<BTreeSet<String>> {
    p.blocks().iter().map(|b| b.iter().map(|&e| alg.label(e)).collect()).collect()
}

fn blocks_of(blocks: &[&[&str]]) -> BTreeSet<BTreeSet<String>> {
    blocks.iter().map(|b| b.iter().map(|s| s.to_string()).collect()).collect()
}

// ---------------------------------------------------------------- criteria

fn c1_leibniz_golden() -> Outcome {
    let a = casebook::build_a();
    let top = Matrix::from_elems(a.clone(), [ONE]).unwrap();
    let c_top = Matrix::from_elems(a.clone(), [C, ONE]).unwrap();
    let got1 = label_blocks(&a, &leibniz_congruence(&top));
    let got2 = label_blocks(&a, &leibniz_congruence(&c_top));
    let want1 = blocks_of(&[&["a", "e", "c"], &["0", "d"], &["b"], &["1"]]);
    let want2 = blocks_of(&[&["0"], &["a"], &["e"], &["b", "d"], &["c", "1"]]);
    ensure(got1 == want1, || format!("<A,{{1}}>: {got1:?}"))?;
    ensure(got2 == want2, || format!("<A,{{c,1}}>: {got2:?}"))?;
    Ok("both block systems exact".into())
}

/// Filters of the logic of `gens` on `alg`: intersections of homomorphic
/// preimages of the generators' designated sets, plus the whole universe.
fn preimage_filters(alg: &FiniteAlgebra, gens: &[Matrix]) -> BTreeSet<Vec<Elem>> {
    let n = alg.size();
    let mut preimages = BTreeSet::new();
    for g in gens {
        let m = g.size();
        // A constant operation pins its value: h(c^A) = c^B.
        let mut pinned: Vec<Option<Elem>> = vec![None; n];
        for f in 0..alg.signature().len() {
            let (src, dst) = (alg.table(f), g.algebra().table(f));
            if alg.signature().arity(f) == 1 && src.iter().all(|&v| v == src[0]) {
                pinned[src[0]] = Some(dst[0]);
            }
        }
        let free: Vec<Elem> = (0..n).filter(|&x| pinned[x].is_none()).collect();
        for choice in tuples(m, free.len()) {
            let mut h: Vec<Elem> = pinned.iter().map(|p| p.unwrap_or(0)).collect();
            for (&x, &v) in free.iter().zip(&choice) {
                h[x] = v;
            }
            let hom = (0..alg.signature().len()).all(|f| {
                tuples(n, alg.signature().arity(f)).iter().all(|args| {
                    let image: Vec<Elem> = args.iter().map(|&x| h[x]).collect();
                    h[apply(alg, f, args)] == apply(g.algebra(), f, &image)
                })
            });
            if hom {
                preimages.insert((0..n).filter(|&x| g.is_designated(h[x])).collect::<Vec<_>>());
            }
        }
    }
    let mut closed: BTreeSet<Vec<Elem>> = BTreeSet::from([(0..n).collect()]);
    loop {
        let mut grew = false;
        for p in &preimages {
            for f in closed.clone() {
                let meet: Vec<Elem> = f.iter().copied().filter(|x| p.contains(x)).collect();
                grew |= closed.insert(meet);
            }
        }
        if !grew {
            return closed;
        }
    }
}

fn c2_suszko_golden() -> Outcome {
    let logic = casebook::or_logic();
    let a = casebook::build_a();
    let top = Matrix::from_elems(a.clone(), [ONE]).unwrap();
    let start = Instant::now();
    let p = core(suszko_congruence(&logic, &top))?;
    let computed = core(aalkit_core::logic::enumerate_filters(&logic, &a))?;
    let kernel = start.elapsed();
    ensure(p.is_identity(), || format!("suszko = {}", p.display_with(&a)))?;
    // The definition, from independently enumerated filters.
    let filters = preimage_filters(&a, logic.generators().unwrap());
    let above: Vec<&Vec<Elem>> = filters.iter().filter(|f| f.contains(&ONE)).collect();
    let mut meet: Vec<usize> = vec![0; 7];
    for f in &above {
        let m = Matrix::from_elems(a.clone(), f.iter().copied()).unwrap();
        let l = brute_leibniz(&m);
        meet = (0..7).map(|x| meet[x] * 7 + l[x]).collect();
    }
    let distinct: HashSet<usize> = meet.iter().copied().collect();
    ensure(distinct.len() == 7, || "filter-wise meet is not the identity".into())?;
    let computed: BTreeSet<Vec<Elem>> = computed.iter().map(|f| f.to_vec()).collect();
    ensure(computed == filters, || format!("filters {computed:?} vs oracle {filters:?}"))?;
    Ok(format!("identity; {} filters, {} above {{1}}; kernels {kernel:.2?}", filters.len(), above.len()))
}

fn c3_leibniz_oracle() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x1e1b);
    for i in 0..500 {
        let m = random_matrix(&mut rng, 5, false);
        let oracle = brute_leibniz(&m);
        ensure(same_partition(&leibniz_congruence(&m), &oracle), || format!("matrix #{i}: {:?}", m.to_json()))?;
    }
    Ok("500/500 agree".into())
}

/// Trivial, or an involution with at most one fixed point designating nothing
/// or a single non-fixed element.
fn negation_characterization(table: &[Elem], f: &[Elem]) -> bool {
    let n = table.len();
    if n == 1 {
        return true;
    }
    let involution = (0..n).all(|x| table[table[x]] == x);
    let fixed = (0..n).filter(|&x| table[x] == x).count();
    involution
        && fixed <= 1
        && match f {
            [] => true,
            [a] => table[*a] != *a,
            _ => false,
        }
}

fn unary_matrices(max: usize) -> Vec<Matrix> {
    let sig = Signature::new([("neg", 1)]).unwrap();
    let mut out = Vec::new();
    for n in 1..=max {
        for table in tuples(n, n) {
            let alg = FiniteAlgebra::new(sig.clone(), n, vec![table]).unwrap();
            for mask in 0..(1u64 << n) {
                out.push(Matrix::new(alg.clone(), Subset::from_mask(n, mask)).unwrap());
            }
        }
    }
    out
}

fn c4_negation_class() -> Outcome {
    let by_matrices = casebook::neg_logic_matrices();
    let by_rules = casebook::neg_logic_rules();
    let ms = unary_matrices(4);
    let mut members = 0;
    for m in &ms {
        let want = negation_characterization(m.algebra().table(0), &m.designated().to_vec());
        for logic in [&by_matrices, &by_rules] {
            let got = core(in_mod_eq(logic, m))?;
            ensure(got == want, || {
                format!("{} on {:?} F={:?}: {got}", logic.name(), m.algebra().table(0), m.designated().to_vec())
            })?;
        }
        members += want as usize;
    }
    Ok(format!("{} matrices, {members} members, both presentations", ms.len()))
}

fn c5_presentations() -> Outcome {
    let by_matrices = casebook::neg_logic_matrices();
    let by_rules = casebook::neg_logic_rules();
    let ms = unary_matrices(4);
    for m in &ms {
        let (a, b) = (core(is_filter(&by_rules, m))?, core(is_filter(&by_matrices, m))?);
        ensure(a == b, || format!("{:?} F={:?}: rules {a}, matrices {b}", m.algebra().table(0), m.designated().to_vec()))?;
    }
    Ok(format!("{} matrices agree", ms.len()))
}

fn c6_equivalential() -> Outcome {
    let logic = core(casebook::kappa_logic(3))?;
    let delta = casebook::kappa_delta(3);
    ensure(core(check_equivalential(&logic, &delta))?, || "check_equivalential = false".into())?;
    for alpha in 0..3 {
        let m = Matrix::from_elems(core(casebook::build_a_alpha_kappa(alpha, 3))?, [ONE]).unwrap();
        let via = core(leibniz_via_delta(&delta, &m))?;
        let direct = leibniz_congruence(&m);
        ensure(via == direct, || format!("alpha = {alpha}: {via:?} vs {direct:?}"))?;
        ensure(same_partition(&direct, &brute_leibniz(&m)), || format!("alpha = {alpha}: brute force differs"))?;
    }
    Ok("equivalential; delta Leibniz exact for alpha = 0, 1, 2".into())
}

/// A random subdirect submatrix with non-empty designated set of the default
/// product of `factors`, with its embedding.
fn subdirect_sample(rng: &mut StdRng, factors: &[Matrix]) -> Option<(Matrix, Vec<Vec<Elem>>)> {
    let sigs: Vec<Signature> = factors.iter().map(|m| m.signature().clone()).collect();
    let product = non_indexed_product(factors, &default_snapshot(&sigs, None).unwrap()).unwrap();
    let size = product.matrix.size();
    let seed = Subset::from_elems(size, (0..rng.gen_range(1..=3)).map(|_| rng.gen_range(0..size)));
    let (sub, embedding) = generated_submatrix(&product, &seed).unwrap();
    let coords: Vec<Vec<Elem>> = embedding.iter().map(|&x| product.coordinates(x)).collect();
    let onto = factors
        .iter()
        .enumerate()
        .all(|(i, f)| (0..f.size()).all(|a| coords.iter().any(|c| c[i] == a)));
    let designated_ok = (0..sub.size()).all(|x| {
        sub.is_designated(x) == factors.iter().enumerate().all(|(i, f)| f.is_designated(coords[x][i]))
    });
    assert!(designated_ok, "submatrix designation is not inherited from the product");
    (onto && !sub.designated().is_empty()).then_some((sub, coords))
}

fn c7_componentwise_leibniz() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x7a7);
    let (mut pairs_done, mut factors_done, mut attempts) = (0, 0, 0);
    while pairs_done < 200 || factors_done < 200 {
        attempts += 1;
        if attempts > 200_000 {
            return Err(format!("only {pairs_done} + {factors_done} subdirect samples found"));
        }
        let factors = [random_matrix(&mut rng, 4, true), random_matrix(&mut rng, 4, true)];
        if pairs_done < 200 {
            if let Some((sub, coords)) = subdirect_sample(&mut rng, &factors) {
                let omega = leibniz_congruence(&sub);
                let parts: Vec<Vec<usize>> = factors.iter().map(brute_leibniz).collect();
                for x in 0..sub.size() {
                    for y in 0..sub.size() {
                        let componentwise = (0..2).all(|i| parts[i][coords[x][i]] == parts[i][coords[y][i]]);
                        ensure(omega.relates(x, y) == componentwise, || {
                            format!("sample {pairs_done}: pair ({x}, {y}) of a {}-element submatrix", sub.size())
                        })?;
                    }
                }
                pairs_done += 1;
            }
        }
        if factors_done < 200 {
            let reduced = [reduce(&factors[0]), reduce(&factors[1])];
            if let Some((sub, _)) = subdirect_sample(&mut rng, &reduced) {
                ensure(is_reduced(&sub), || format!("reduced-factor sample {factors_done} is not reduced"))?;
                factors_done += 1;
            }
        }
    }
    Ok(format!("200 componentwise samples, 200 reduced-factor samples ({attempts} draws)"))
}

fn c8_theorems() -> Outcome {
    let unit = casebook::signature_unit();
    let or = casebook::or_logic();
    // Oracle: join(a(x1), b(x1)) is the top element, designated in both generators.
    for g in or.generators().unwrap() {
        let sig = g.signature();
        let (join, a, b) = (sig.lookup("join").unwrap(), sig.lookup("a").unwrap(), sig.lookup("b").unwrap());
        ensure(
            (0..7).all(|x| g.is_designated(apply(g.algebra(), join, &[apply(g.algebra(), a, &[x]), apply(g.algebra(), b, &[x])]))),
            || "join(a(x1), b(x1)) is not a theorem of the join logic".into(),
        )?;
    }
    let logics: [(LogicPresentation, bool); 4] = [
        (or, true),
        (casebook::neg_logic_matrices(), false),
        (LogicPresentation::inconsistent_by_matrices(unit.clone()), true),
        (LogicPresentation::almost_inconsistent_by_matrices(unit), false),
    ];
    for (l, expected) in &logics {
        let got = core(has_theorems(l))?;
        ensure(got == *expected, || format!("{}: has_theorems = {got}", l.name()))?;
    }
    let mut pairs = 0;
    for (l1, t1) in &logics {
        for (l2, t2) in &logics {
            let sigs = [l1.signature().clone(), l2.signature().clone()];
            let product = core(product_logic(&[l1.clone(), l2.clone()], &core(default_snapshot(&sigs, None))?))?;
            let got = core(has_theorems(&product))?;
            ensure(got == (*t1 && *t2), || format!("{} x {}: {got}", l1.name(), l2.name()))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} ordered pairs"))
}

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_aalkit")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn c9_interpretation() -> Outcome {
    let or = casebook::or_logic();
    let kappa = core(casebook::kappa_logic(3))?;
    let delta = casebook::kappa_delta(3);
    let identity = core(Translation::by_name(or.signature(), kappa.signature()))?;
    let cert = core(check_interpretation(&identity, &or, &kappa, InterpretationMode::Equivalential, Some(&delta)))?;
    ensure(cert.holds, || "identity translation refuted".into())?;
    ensure(core(cert.verify(&or, &kappa))?, || "certificate does not re-verify".into())?;
    let found = core(search_interpretation(&or, &kappa, 1, InterpretationMode::Equivalential, Some(&delta)))?;
    let hit = found.found.ok_or("search at depth 1 found nothing")?;
    ensure(hit.translation == identity, || "search returned a different translation".into())?;
    ensure(core(hit.verify(&or, &kappa))?, || "searched certificate does not re-verify".into())?;

    let search = ["search-interpretation", "--from", "casebook:or", "--to", "casebook:kappa3", "--depth", "1", "--format", "json"];
    let (code, first, _) = run_cli(&search);
    ensure(code == 0, || format!("search exit {code}"))?;
    let (_, second, _) = run_cli(&search);
    ensure(first == second, || "JSON output differs between runs".into())?;
    let (code, _, _) = run_cli(&["check-interpretation", "--from", "casebook:or", "--to", "casebook:kappa3"]);
    ensure(code == 0, || format!("check exit {code}"))?;
    let (code, _, _) = run_cli(&["check-filter", "casebook:or", "casebook:A", "--designated", "b,1"]);
    ensure(code == 1, || format!("refuted property exit {code}"))?;
    let bad = std::env::temp_dir().join(format!("aalkit-acceptance-{}.aal", std::process::id()));
    std::fs::write(&bad, "signature S { op join/2; }\nlogic L = rules over S { |- join(x1, x2, x3); }\n").unwrap();
    let (code, _, err) = run_cli(&["parse", bad.to_str().unwrap()]);
    let _ = std::fs::remove_file(&bad);
    ensure(code == 2 && err.contains(":2:29: error[E003]"), || format!("parse exit {code}: {err}"))?;
    let (code, _, _) = run_cli(&["leibniz", "casebook:A", "--no-such-flag"]);
    ensure(code == 2, || format!("unknown flag exit {code}"))?;
    Ok(format!("certified, found at candidate {} of {}, exit codes 0/1/2", found.tried, found.candidates))
}

/// Unary term functions of `<A; join, neg, e>` as (table, contains e) pairs.
type TermFn = ([u8; 7], bool);

fn term_fn_ops(alg: &FiniteAlgebra) -> (impl Fn(&TermFn, &TermFn) -> TermFn + '_, impl Fn(&TermFn) -> TermFn + '_) {
    let join = move |f: &TermFn, g: &TermFn| {
        let t = std::array::from_fn(|x| apply(alg, 0, &[f.0[x] as Elem, g.0[x] as Elem]) as u8);
        (t, f.1 || g.1)
    };
    let neg = move |f: &TermFn| {
        let t = std::array::from_fn(|x| apply(alg, 1, &[f.0[x] as Elem]) as u8);
        (t, f.1)
    };
    (join, neg)
}

fn c10_no_constants() -> Outcome {
    let alg = casebook::build_join_neg_e();
    let sig = alg.signature();
    ensure(
        sig.lookup("join") == Some(0) && sig.lookup("neg") == Some(1) && sig.lookup("e") == Some(2),
        || "unexpected symbol order".into(),
    )?;
    let (join, neg) = term_fn_ops(&alg);
    let var: TermFn = ([0, 1, 2, 3, 4, 5, 6], false);
    let e_const: TermFn = ([E as u8; 7], true);

    // Terms one by one, up to depth 4.
    let mut trees: Vec<TermFn> = vec![var];
    for _ in 0..4 {
        let mut next = vec![var];
        next.extend(trees.iter().map(&neg));
        next.extend(trees.iter().map(|_| e_const));
        for f in &trees {
            for g in &trees {
                next.push(join(f, g));
            }
        }
        trees = next;
    }
    ensure(trees.len() == 458_329, || format!("{} terms of depth <= 4", trees.len()))?;

    // Deduplicated closure, up to depth 6.
    let mut level: HashSet<TermFn> = HashSet::from([var]);
    let mut at_four = HashSet::new();
    for depth in 1..=6 {
        let prev: Vec<TermFn> = level.iter().copied().collect();
        let mut next: HashSet<TermFn> = HashSet::from([var, e_const]);
        next.extend(prev.iter().map(&neg));
        for f in &prev {
            for g in &prev {
                next.insert(join(f, g));
            }
        }
        level = next;
        if depth == 4 {
            at_four = level.clone();
        }
    }
    let enumerated: HashSet<TermFn> = trees.into_iter().collect();
    ensure(enumerated == at_four, || "closure and enumeration disagree at depth 4".into())?;
    let allowed = [E as u8, casebook::A as u8, C as u8];
    if let Some(bad) = level.iter().find(|(t, has_e)| *has_e && !allowed.contains(&t[0])) {
        return Err(format!("an e-term sends 0 to {}", alg.label(bad.0[0] as Elem)));
    }
    let with_e = level.iter().filter(|f| f.1).count();
    Ok(format!("{with_e} distinct e-term functions at depth <= 6, all in {{e,a,c}} at 0"))
}

fn c11_reduction() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x11);
    for i in 0..500 {
        let m = random_matrix(&mut rng, 6, false);
        let r = reduce(&m);
        ensure(leibniz_congruence(&r).is_identity(), || format!("#{i}: reduct not reduced"))?;
        ensure(r.size() == brute_leibniz(&m).iter().max().map_or(0, |&x| x + 1), || format!("#{i}: wrong size"))?;
        let rr = reduce(&r);
        ensure(is_isomorphic(&rr, &r), || format!("#{i}: reduce is not idempotent"))?;
    }
    Ok("500/500".into())
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);
    let criteria: [Criterion; 11] = [
        ("leibniz golden facts", c1_leibniz_golden, Some(Duration::from_secs(1))),
        ("suszko golden fact", c2_suszko_golden, Some(Duration::from_secs(5))),
        ("leibniz vs brute force", c3_leibniz_oracle, Some(Duration::from_secs(60))),
        ("negation-fragment classification", c4_negation_class, Some(Duration::from_secs(300))),
        ("cross-presentation filters", c5_presentations, None),
        ("equivalentiality", c6_equivalential, None),
        ("componentwise leibniz", c7_componentwise_leibniz, None),
        ("theorem-existence law", c8_theorems, None),
        ("interpretation certification", c9_interpretation, None),
        ("bounded e-terms", c10_no_constants, Some(Duration::from_secs(120))),
        ("reduction laws", c11_reduction, None),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panicked".into()))
        });
        let elapsed = start.elapsed();
        let result = match (result, limit) {
            (Ok(_), Some(l)) if elapsed > *l => Err(format!("took {elapsed:.2?}, limit {l:?}")),
            (r, _) => r,
        };
        let (status, detail) = match &result {
            Ok(d) => ("PASS", d.clone()),
            Err(d) => ("FAIL", d.clone()),
        };
        failed += result.is_err() as usize;
        println!("{status} {:>2} {name:<34} {elapsed:>10.2?}  {detail}", i + 1);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
