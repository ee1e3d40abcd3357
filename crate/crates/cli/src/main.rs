//! `gsb`: batch front end for Gröbner–Shirshov completion, normal forms
//! and basis enumeration.
//!
//! Exit codes: 0 success, 1 negative answer (not a GS basis, not equal),
//! 2 usage, input or parse error, 3 a cap was reached.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use gs_core::complete::CompositionRecord;
use gs_core::{
    catalog, is_gs_basis, nlsw_decompose, normal_form_word, parse_presentation, pbw_basis, CompletionConfig,
    CompletionResult, GsError, NcPolynomial, Presentation, PresentationKind, Rational, RuleSet,
};

#[derive(Parser)]
#[command(name = "gsb", version, about = "Gröbner–Shirshov bases, normal forms and PBW bases")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Caps {
    /// Degree cap on compositions.
    #[arg(long = "max-deg", default_value_t = 6)]
    max_deg: usize,
    /// Cap on the number of rules created.
    #[arg(long = "max-rules", default_value_t = 10_000)]
    max_rules: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Complete the relations and print the basis.
    Complete {
        file: PathBuf,
        #[command(flatten)]
        caps: Caps,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether the relations already form a GS basis.
    Check {
        file: PathBuf,
        /// Only check compositions up to this degree.
        #[arg(long = "max-deg")]
        max_deg: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Normal form of a word.
    Nf {
        file: PathBuf,
        word: String,
        #[command(flatten)]
        caps: Caps,
        #[arg(long)]
        json: bool,
    },
    /// Word problem: do two words represent the same element?
    Eq {
        file: PathBuf,
        w1: String,
        w2: String,
        #[command(flatten)]
        caps: Caps,
        #[arg(long)]
        json: bool,
    },
    /// Irreducible words of degree at most D.
    Irr {
        file: PathBuf,
        #[arg(long)]
        deg: usize,
        #[command(flatten)]
        caps: Caps,
        #[arg(long)]
        json: bool,
    },
    /// PBW monomials of degree at most D (Lie presentations only).
    Pbw {
        file: PathBuf,
        #[arg(long)]
        deg: usize,
        #[command(flatten)]
        caps: Caps,
        #[arg(long)]
        json: bool,
    },
    /// Number of irreducible words of each length up to L.
    Growth {
        file: PathBuf,
        #[arg(long)]
        len: usize,
        #[command(flatten)]
        caps: Caps,
        #[arg(long)]
        json: bool,
    },
    /// Print a built-in presentation in the file format.
    Catalog { name: String },
}

enum Failure {
    Input(String),
    Cap(String),
}

impl From<GsError> for Failure {
    fn from(e: GsError) -> Self {
        match e {
            GsError::StepLimit(_) | GsError::Incomplete(_) | GsError::DegreeExceedsCap { .. } => {
                Failure::Cap(e.to_string())
            }
            other => Failure::Input(other.to_string()),
        }
    }
}

type Outcome = Result<u8, Failure>;

const NEGATIVE: u8 = 1;
const CAPPED: u8 = 3;

fn max_steps() -> Result<u64, Failure> {
    match std::env::var("GS_MAX_STEPS") {
        Err(_) => Ok(10_000_000),
        Ok(v) => v.trim().parse().map_err(|_| Failure::Input(format!("GS_MAX_STEPS: not a number: {v:?}"))),
    }
}

fn load(path: &PathBuf) -> Result<Presentation, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_presentation(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn config(caps: &Caps) -> Result<CompletionConfig, Failure> {
    Ok(CompletionConfig {
        max_degree: caps.max_deg,
        max_rules: caps.max_rules,
        max_steps: Some(max_steps()?),
        ..CompletionConfig::default()
    })
}

fn complete(p: &Presentation, caps: &Caps) -> Result<CompletionResult, Failure> {
    Ok(p.complete(&config(caps)?)?)
}

/// A completed basis, or a cap failure naming the status.
fn complete_basis(p: &Presentation, caps: &Caps) -> Result<CompletionResult, Failure> {
    let r = complete(p, caps)?;
    r.complete_basis().map_err(|_| {
        Failure::Cap(format!(
            "completion stopped with status {} at degree cap {}; raise --max-deg",
            r.status, caps.max_deg
        ))
    })?;
    Ok(r)
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn run_complete(file: &PathBuf, caps: &Caps, as_json: bool) -> Outcome {
    let p = load(file)?;
    let r = complete(&p, caps)?;
    if as_json {
        println!("{}", r.to_json());
    } else {
        let al = r.alphabet();
        println!("status: {}", r.status);
        println!("rules: {} ({} added)", r.basis.len(), r.stats.rules_added);
        for (rule, id) in r.basis.rules().iter().zip(&r.rule_ids) {
            println!("  [{id}] {}", rule.poly().render(al));
        }
        println!(
            "compositions: {} processed, {} skipped",
            r.stats.compositions_processed, r.stats.compositions_skipped
        );
        for c in &r.skipped {
            println!("  skipped w={} ({}, {})", al.render(c.w()), c.source.0, c.source.1);
        }
    }
    Ok(if r.status.is_complete() { 0 } else { CAPPED })
}

fn run_check(file: &PathBuf, max_deg: Option<usize>, as_json: bool) -> Outcome {
    let p = load(file)?;
    let rels = p.to_algebra_relations::<Rational>()?;
    let steps = Some(max_steps()?);
    if p.kind == PresentationKind::Lie {
        for r in &rels {
            nlsw_decompose(r)?;
        }
    }
    let rules = RuleSet::new(p.alphabet.clone(), &rels)?;
    let check = is_gs_basis(&rules, max_deg, steps)?;
    let al = rules.alphabet();
    if as_json {
        let failures: Vec<CompositionRecord> =
            check.failures.iter().map(|c| CompositionRecord::new(&c.composition, Some(&c.residue), al)).collect();
        print_json(&json!({
            "format": 1,
            "gs_basis": check.is_gs(),
            "rules": rules.rules().iter().map(|r| r.poly().render(al)).collect::<Vec<_>>(),
            "checked": check.checked,
            "failures": failures,
        }));
    } else {
        let verdict = if check.is_gs() { "yes" } else { "no" };
        print!("GS basis: {verdict} ({} rules, {} composition(s) checked", rules.len(), check.checked);
        if check.is_gs() {
            println!(")");
        } else {
            println!(", {} failing)", check.failures.len());
        }
        for c in &check.failures {
            let (i, j) = c.composition.source;
            println!(
                "  ({}, {})_{} -> {}",
                rules.rules()[i].poly().render(al),
                rules.rules()[j].poly().render(al),
                al.render(c.composition.w()),
                c.residue.render(al)
            );
        }
    }
    Ok(if check.is_gs() { 0 } else { NEGATIVE })
}

fn parse_word(r: &CompletionResult, text: &str) -> Result<NcPolynomial, Failure> {
    let w = r.alphabet().parse_word(text).map_err(|e| Failure::Input(format!("{text:?}: {e}")))?;
    Ok(NcPolynomial::word(w))
}

/// Reduced form of a word: a word (or `0`) for monoids and groups, a
/// polynomial otherwise.
fn normal_form(p: &Presentation, r: &CompletionResult, text: &str) -> Result<String, Failure> {
    let f = parse_word(r, text)?;
    if matches!(p.kind, PresentationKind::Monoid | PresentationKind::Group) {
        let w = f.leading_word().expect("a word").clone();
        return Ok(normal_form_word(&w, r)?.render(r.alphabet()));
    }
    Ok(r.basis.reduce(&f).render(r.alphabet()))
}

fn run_nf(file: &PathBuf, word: &str, caps: &Caps, as_json: bool) -> Outcome {
    let p = load(file)?;
    let r = complete_basis(&p, caps)?;
    let nf = normal_form(&p, &r, word)?;
    if as_json {
        print_json(&json!({ "word": word, "normal_form": nf }));
    } else {
        println!("{nf}");
    }
    Ok(0)
}

fn run_eq(file: &PathBuf, w1: &str, w2: &str, caps: &Caps, as_json: bool) -> Outcome {
    let p = load(file)?;
    let r = complete_basis(&p, caps)?;
    let (a, b) = (normal_form(&p, &r, w1)?, normal_form(&p, &r, w2)?);
    let equal = a == b;
    if as_json {
        print_json(&json!({ "equal": equal, "normal_forms": [a, b] }));
    } else {
        println!("{}", if equal { "equal" } else { "not equal" });
    }
    Ok(if equal { 0 } else { NEGATIVE })
}

fn run_irr(file: &PathBuf, deg: usize, caps: &Caps, as_json: bool) -> Outcome {
    let r = complete_basis(&load(file)?, caps)?;
    let words: Vec<String> = r.basis.irr_words(deg).iter().map(|w| r.alphabet().render(w)).collect();
    if as_json {
        print_json(&json!({ "degree": deg, "count": words.len(), "words": words }));
    } else {
        for w in &words {
            println!("{w}");
        }
    }
    Ok(0)
}

fn run_pbw(file: &PathBuf, deg: usize, caps: &Caps, as_json: bool) -> Outcome {
    let p = load(file)?;
    if p.kind != PresentationKind::Lie {
        return Err(Failure::Input(format!("pbw needs a lie presentation, got {}", p.kind.name())));
    }
    let r = complete_basis(&p, caps)?;
    let monomials: Vec<String> = pbw_basis(&r, deg)?.iter().map(|m| m.render(r.alphabet())).collect();
    if as_json {
        print_json(&json!({ "degree": deg, "count": monomials.len(), "monomials": monomials }));
    } else {
        for m in &monomials {
            println!("{m}");
        }
        println!("{} monomials", monomials.len());
    }
    Ok(0)
}

fn run_growth(file: &PathBuf, len: usize, caps: &Caps, as_json: bool) -> Outcome {
    let r = complete_basis(&load(file)?, caps)?;
    let counts = r.basis.irr_counts(len);
    if as_json {
        print_json(&json!({ "length": len, "counts": counts }));
    } else {
        println!("{}", counts.iter().map(u128::to_string).collect::<Vec<_>>().join(" "));
    }
    Ok(0)
}

fn run_catalog(name: &str) -> Outcome {
    print!("{}", catalog(name)?.to_text());
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Complete { file, caps, json } => run_complete(file, caps, *json),
        Command::Check { file, max_deg, json } => run_check(file, *max_deg, *json),
        Command::Nf { file, word, caps, json } => run_nf(file, word, caps, *json),
        Command::Eq { file, w1, w2, caps, json } => run_eq(file, w1, w2, caps, *json),
        Command::Irr { file, deg, caps, json } => run_irr(file, *deg, caps, *json),
        Command::Pbw { file, deg, caps, json } => run_pbw(file, *deg, caps, *json),
        Command::Growth { file, len, caps, json } => run_growth(file, *len, caps, *json),
        Command::Catalog { name } => run_catalog(name),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Input(msg)) => {
            eprintln!("gsb: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("gsb: {msg}");
            ExitCode::from(CAPPED)
        }
    }
}
