//! Acceptance suite: one PASS/FAIL line per criterion; exits nonzero if
//! any criterion fails.

mod support;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use gs_core::present::Relations;
use gs_core::words::{words_of_degree, words_up_to};
use gs_core::{
    catalog, compositions, is_alsw, lie_gs_check, lsw_bracket, normal_form_word, pbw_basis, shirshov_factorize,
    Alphabet, CompletionConfig, CompletionResult, CompletionStatus, Field, NcPolynomial, Rational, StructureTable,
    Word,
};

use support::*;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Degree cap used where a catalog basis must be complete; plactic-3
/// has a composition of degree 7.
const CAP: usize = 8;

fn completed(name: &str) -> CompletionResult {
    catalog(name).unwrap().complete(&CompletionConfig::default().with_max_degree(CAP)).unwrap()
}

fn q(n: i64) -> Rational {
    Rational::from_i64(n)
}

fn random_word(rng: &mut StdRng, letters: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::new((0..len).map(|_| rng.gen_range(0..letters as u32)).collect())
}

fn criterion_1() -> Check {
    let mut rng = StdRng::seed_from_u64(1);
    let entries = [
        "bicyclic",
        "free-comm-2",
        "free-comm-3",
        "sl2",
        "heisenberg-3",
        "plactic-2",
        "plactic-3",
        "chinese-2",
        "chinese-3",
    ];
    let mut total = 0;
    for name in entries {
        let r = completed(name);
        let basis = r.complete_basis().map_err(|e| format!("{name}: {e}"))?;
        let k = basis.alphabet().len();
        for _ in 0..200 {
            let mut f = NcPolynomial::zero();
            for _ in 0..rng.gen_range(1..=4) {
                let s = &basis.rules()[rng.gen_range(0..basis.len())];
                let room = 6usize.saturating_sub(s.degree());
                let a = random_word(&mut rng, k, room);
                let b = random_word(&mut rng, k, room - a.len());
                let c = q(rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 });
                f = &f + &s.poly().mul_bounded(&a, &b).scale(&c);
            }
            if let Some(lead) = f.leading_word() {
                ensure(basis.rules().iter().any(|s| lead.contains(s.lead())), || {
                    format!("{name}: leading word {lead:?} of an ideal member contains no lead")
                })?;
            }
            ensure(basis.reduce(&f).is_zero(), || format!("{name}: ideal member did not reduce to 0"))?;
            total += 1;
        }
    }
    Ok(format!("{total} ideal members over {} bases reduce to 0", entries.len()))
}

fn free(names: &[&str]) -> CompletionResult {
    CompletionResult::free(std::sync::Arc::new(Alphabet::new(names.iter().copied()).unwrap()))
}

fn pbw_counts_by_degree(r: &CompletionResult, d: usize) -> Vec<u64> {
    let mut counts = vec![0u64; d + 1];
    for m in pbw_basis(r, d).unwrap() {
        counts[m.degree()] += 1;
    }
    counts
}

fn criterion_2() -> Check {
    for (names, d) in [(&["a", "b"][..], 8usize), (&["a", "b", "c"][..], 6)] {
        let k = names.len() as u64;
        let counts = pbw_counts_by_degree(&free(names), d);
        for (deg, &c) in counts.iter().enumerate() {
            ensure(c == k.pow(deg as u32), || format!("{k} letters, degree {deg}: {c} monomials"))?;
        }
    }
    Ok("2^d (d <= 8) and 3^d (d <= 6) PBW monomials".into())
}

fn criterion_3() -> Check {
    let mut words = 0;
    for (k, max_len) in [(2usize, 10usize), (3, 7)] {
        for w in words_up_to(k, max_len).into_iter().filter(|w| !w.is_empty()) {
            let found = monotone_factorizations(w.letters());
            ensure(found.len() == 1, || format!("{w:?}: {} monotone factorizations", found.len()))?;
            let ours: Vec<Vec<u32>> = shirshov_factorize(&w).unwrap().iter().map(|f| f.letters().to_vec()).collect();
            ensure(ours == found[0], || format!("{w:?}: factorization {ours:?} vs {:?}", found[0]))?;
            words += 1;
        }
    }
    Ok(format!("{words} words have exactly one factorization, matching the engine"))
}

fn criterion_4() -> Check {
    for k in [2u64, 3] {
        for d in 1..=10u64 {
            let all = words_of_degree(k as usize, d as usize);
            let by_rotation = all.iter().filter(|w| alsw_by_rotation(w.letters())).count() as u64;
            let by_engine = all.iter().filter(|w| is_alsw(w).unwrap()).count() as u64;
            let formula = necklaces(k, d);
            ensure(by_rotation == formula && by_engine == formula, || {
                format!("k={k} d={d}: formula {formula}, rotation {by_rotation}, engine {by_engine}")
            })?;
        }
    }
    Ok("ALSW counts match the necklace formula for d <= 10, k = 2, 3".into())
}

fn criterion_5() -> Check {
    let r = completed("sl2");
    ensure(r.status == CompletionStatus::Complete && r.stats.rules_added == 0, || {
        format!("status {}, {} rules added", r.status, r.stats.rules_added)
    })?;
    let counts = pbw_counts_by_degree(&r, 10);
    let mut cumulative = 0;
    for (d, c) in counts.iter().enumerate() {
        cumulative += c;
        let expected = binomial(d as u64 + 3, 3);
        ensure(cumulative == expected, || format!("degree <= {d}: {cumulative} monomials, expected {expected}"))?;
    }
    let al = r.alphabet();
    let rule = |lead: &str| {
        let w = al.parse_word(lead).unwrap();
        r.basis.rules().iter().find(|s| s.lead() == &w).cloned().unwrap()
    };
    let comp = compositions(&rule("he"), &rule("ef"))
        .into_iter()
        .find(|c| al.render(c.w()) == "hef")
        .ok_or("no composition at hef")?;
    let mut f = comp.value.clone();
    let mut steps = 0;
    while let Some(next) = r.basis.rewrite_step(&f) {
        ensure(next.leading_word() <= f.leading_word(), || "rewrite step raised the leading word".into())?;
        f = next;
        steps += 1;
    }
    ensure(f.is_zero(), || format!("hef composition reduced to {}", f.render(al)))?;
    Ok(format!("complete, 0 rules added, C(d+3,3) monomials for d <= 10, hef composition -> 0 in {steps} steps"))
}

fn random_table(rng: &mut StdRng, dim: usize) -> Table {
    let mut t = vec![vec![vec![0i64; dim]; dim]; dim];
    for i in 0..dim {
        for j in 0..i {
            for k in 0..dim {
                // sparse enough that both verdicts occur
                let c = if rng.gen_bool(0.3) { rng.gen_range(-2..=2) } else { 0 };
                t[i][j][k] = c;
                t[j][i][k] = -c;
            }
        }
    }
    t
}

fn lie_relations(t: &Table) -> (std::sync::Arc<Alphabet>, Vec<NcPolynomial>) {
    let dim = t.len();
    let al = std::sync::Arc::new(Alphabet::new(["x", "y", "z", "w"].into_iter().take(dim)).unwrap());
    let mut table = StructureTable::new(dim);
    for i in 0..dim {
        for j in 0..i {
            table.set(i, j, t[i][j].iter().map(|&c| q(c)).collect()).unwrap();
        }
    }
    let rels = gs_core::from_structure_constants(&table, &al).unwrap().into_iter().map(|r| r.expansion).collect();
    (al, rels)
}

fn criterion_6() -> Check {
    // x < y < z: [x,y] = x, [y,z] = y, [x,z] = 0
    let mut t = vec![vec![vec![0i64; 3]; 3]; 3];
    t[0][1] = vec![1, 0, 0];
    t[1][0] = vec![-1, 0, 0];
    t[1][2] = vec![0, 1, 0];
    t[2][1] = vec![0, -1, 0];
    let (al, rels) = lie_relations(&t);
    let check = lie_gs_check(al.clone(), &rels).unwrap();
    ensure(!check.is_gs() && check.failures.len() == 1, || format!("{} failing compositions", check.failures.len()))?;
    let residue = &check.failures[0].residue;
    let x = NcPolynomial::word(Word::letter(0));
    ensure(residue.monic().unwrap() == x, || format!("residue {}", residue.render(&al)))?;
    let shown = residue.render(&al);

    let mut rng = StdRng::seed_from_u64(6);
    let (mut lie, mut non_lie) = (0, 0);
    for _ in 0..50 {
        let dim = rng.gen_range(2..=4);
        let t = random_table(&mut rng, dim);
        let (al, rels) = lie_relations(&t);
        let verdict = lie_gs_check(al, &rels).unwrap().is_gs();
        let direct = jacobi_holds(&t);
        ensure(verdict == direct, || format!("table {t:?}: GS check {verdict}, Jacobiator {direct}"))?;
        if direct {
            lie += 1;
        } else {
            non_lie += 1;
        }
    }
    Ok(format!("residue {shown}; 50 random tables agree ({lie} Lie, {non_lie} not)"))
}

fn criterion_7() -> Check {
    for n in 1..=4u64 {
        let name = format!("free-comm-{n}");
        let p = catalog(&name).unwrap();
        let r = completed(&name);
        let input: Vec<NcPolynomial> = p.to_algebra_relations::<Rational>().unwrap();
        let mut expected: Vec<NcPolynomial> = input.iter().map(|f| f.monic().unwrap()).collect();
        expected.sort_by(|a, b| a.leading_word().cmp(&b.leading_word()));
        ensure(r.status == CompletionStatus::Complete && r.basis.polys() == expected, || {
            format!("{name}: status {}, {} rules", r.status, r.basis.len())
        })?;
        let counts = r.basis.irr_counts(8);
        for (d, &c) in counts.iter().enumerate() {
            let expected = binomial(n + d as u64 - 1, d as u64) as u128;
            ensure(c == expected, || format!("{name}, degree {d}: {c} irreducible words, expected {expected}"))?;
        }
    }
    Ok("free-comm-1..4 complete to themselves with C(n+d-1,d) irreducible words".into())
}

fn criterion_8() -> Check {
    for name in ["plactic-2", "plactic-3", "chinese-2", "chinese-3"] {
        let p = catalog(name).unwrap();
        let Relations::Words(rels) = &p.relations else { return Err(format!("{name}: not a monoid")) };
        let r = completed(name);
        for len in 0..=6 {
            let nf: Vec<_> =
                words_of_degree(p.alphabet.len(), len).iter().map(|w| normal_form_word(w, &r).unwrap()).collect();
            let classes = closure_classes(p.alphabet.len(), rels, len);
            ensure(same_partition(&nf, &classes), || format!("{name}: partitions differ at length {len}"))?;
        }
    }
    let growth = gs_core::growth_series(&completed("bicyclic"), 10).unwrap().counts;
    let expected: Vec<u128> = (1..=11).collect();
    ensure(growth == expected, || format!("bicyclic growth {growth:?}"))?;
    Ok("normal-form partitions match the closure oracle for length <= 6; bicyclic growth 1..11".into())
}

fn criterion_9() -> Check {
    let mut count = 0;
    for w in words_up_to(2, 8).into_iter().filter(|w| !w.is_empty() && is_alsw(w).unwrap()) {
        let e = lsw_bracket(&w).unwrap().expand::<Rational>();
        let (lead, c) = e.leading().unwrap();
        ensure(lead == &w && c == &q(1), || format!("{w:?}: leading term {c}*{lead:?}"))?;
        count += 1;
    }
    Ok(format!("{count} ALSWs have triangular standard bracketings"))
}

const CATALOG: &[&str] = &[
    "bicyclic",
    "sl2",
    "heisenberg-3",
    "plactic-1",
    "plactic-2",
    "plactic-3",
    "plactic-4",
    "chinese-1",
    "chinese-2",
    "chinese-3",
    "chinese-4",
    "free-comm-1",
    "free-comm-2",
    "free-comm-3",
    "free-comm-4",
];

fn criterion_10() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut codes = BTreeMap::new();
    for name in CATALOG {
        let text = stdout(&run(&["catalog", name]));
        let file = write(dir.path(), &format!("{name}.gs"), &text);
        let file = file.to_str().unwrap();
        let (first, second) = (run(&["complete", file, "--json"]), run(&["complete", file, "--json"]));
        ensure(!first.stdout.is_empty() && first.stdout == second.stdout, || format!("{name}: outputs differ"))?;
        *codes.entry(first.status.code().unwrap_or(-1)).or_insert(0) += 1;
    }
    Ok(format!("{} catalog entries give byte-identical JSON (exit codes {codes:?})", CATALOG.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("CD-lemma property suite", criterion_1),
        ("PBW counts for free Lie algebras", criterion_2),
        ("Shirshov factorization uniqueness", criterion_3),
        ("ALSW census", criterion_4),
        ("sl2 PBW basis", criterion_5),
        ("Jacobi detection", criterion_6),
        ("commutative sanity", criterion_7),
        ("monoid oracle equivalence", criterion_8),
        ("triangularity", criterion_9),
        ("determinism", criterion_10),
    ];
    let mut failed = 0;
    for (i, (title, f)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {title}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {title}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
