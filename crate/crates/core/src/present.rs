//! Presentations of algebras, monoids, groups and Lie algebras; their
//! translation into polynomial relations; normal forms and word problems.
//!
//! File format (line oriented, `#` starts a comment):
//!
//! ```text
//! kind: monoid            # algebra | monoid | group | lie
//! generators: q p         # precedence ascending, left to right
//! relations:
//!   p q = 1               # monoid/group: word = word; 1 is the empty word
//! ```
//!
//! Algebra relations are polynomials (`h*e - e*h - 2*e`, optionally
//! `lhs = rhs`); Lie relations read `bracket h e = 2*e`, brackets not
//! listed being zero, and a Lie presentation without any `bracket` line is
//! the free Lie algebra. Group presentations
//! get an inverse generator `x^-1` for every generator `x`, placed after
//! all declared generators in precedence.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::complete::{shirshov_complete, CompletionConfig, CompletionDocument, CompletionResult};
use crate::error::GsError;
use crate::lie::{from_structure_constants, StructureTable};
use crate::ncpoly::{parse_polynomial, NcPolynomial};
use crate::scalar::{Field, Rational};
use crate::words::{Alphabet, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PresentationKind {
    Algebra,
    Monoid,
    Group,
    Lie,
}

impl PresentationKind {
    pub fn name(self) -> &'static str {
        match self {
            PresentationKind::Algebra => "algebra",
            PresentationKind::Monoid => "monoid",
            PresentationKind::Group => "group",
            PresentationKind::Lie => "lie",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "algebra" => PresentationKind::Algebra,
            "monoid" => PresentationKind::Monoid,
            "group" => PresentationKind::Group,
            "lie" => PresentationKind::Lie,
            _ => return None,
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Relations {
    Polynomials(Vec<NcPolynomial<Rational>>),
    Words(Vec<(Word, Word)>),
    Table(StructureTable<Rational>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Presentation {
    pub kind: PresentationKind,
    /// For groups this includes the inverse generators.
    pub alphabet: Arc<Alphabet>,
    /// Number of declared generators (the prefix of `alphabet` that is not
    /// an inverse).
    pub generators: usize,
    pub relations: Relations,
}

/// Name of the formal inverse of generator `x`.
pub fn inverse_name(x: &str) -> String {
    format!("{x}^-1")
}

fn group_alphabet(names: &[String]) -> Result<Alphabet, GsError> {
    Alphabet::new(names.iter().cloned().chain(names.iter().map(|n| inverse_name(n))))
}

impl Presentation {
    pub fn monoid(names: &[&str], relations: Vec<(Word, Word)>) -> Result<Self, GsError> {
        Ok(Presentation {
            kind: PresentationKind::Monoid,
            alphabet: Arc::new(Alphabet::new(names.iter().copied())?),
            generators: names.len(),
            relations: Relations::Words(relations),
        })
    }

    pub fn relation_count(&self) -> usize {
        match &self.relations {
            Relations::Polynomials(p) => p.len(),
            Relations::Words(w) => w.len(),
            Relations::Table(t) => t.dim() * t.dim().saturating_sub(1) / 2,
        }
    }

    /// The defining relations as polynomials: `u - v` for word relations,
    /// plus `x·x⁻¹ - 1` and `x⁻¹·x - 1` for groups; commutator relations
    /// for structure tables. Relations with identical sides are dropped.
    pub fn to_algebra_relations<K: Field>(&self) -> Result<Vec<NcPolynomial<K>>, GsError> {
        let convert = |p: &NcPolynomial<Rational>| p.map_coefficients(K::from_rational);
        let mut out = Vec::new();
        match &self.relations {
            Relations::Polynomials(ps) => {
                for p in ps {
                    out.push(convert(p)?);
                }
            }
            Relations::Words(pairs) => {
                for (u, v) in pairs {
                    if u != v {
                        out.push(NcPolynomial::binomial(u.clone(), v.clone()));
                    }
                }
                if self.kind == PresentationKind::Group {
                    let n = self.generators as u32;
                    for x in 0..n {
                        let (g, inv) = (Word::letter(x), Word::letter(x + n));
                        out.push(NcPolynomial::binomial(g.concat(&inv), Word::empty()));
                        out.push(NcPolynomial::binomial(inv.concat(&g), Word::empty()));
                    }
                }
            }
            Relations::Table(t) => {
                let t = t.map_coefficients(K::from_rational)?;
                for r in from_structure_constants(&t, &self.alphabet)? {
                    out.push(r.expansion);
                }
            }
        }
        out.retain(|p| !p.is_zero());
        Ok(out)
    }

    /// Completion configuration adjusted for the kind: word presentations
    /// assert the binomial rule shape.
    pub fn completion_config(&self, base: &CompletionConfig) -> CompletionConfig {
        let mut cfg = base.clone();
        cfg.require_binomial = matches!(self.kind, PresentationKind::Monoid | PresentationKind::Group);
        cfg
    }

    /// Completes the relations; a presentation without relations yields
    /// the free basis.
    pub fn complete<K: Field>(&self, cfg: &CompletionConfig) -> Result<CompletionResult<K>, GsError> {
        let rels = self.to_algebra_relations::<K>()?;
        if rels.is_empty() {
            return Ok(CompletionResult::free(self.alphabet.clone()));
        }
        shirshov_complete(self.alphabet.clone(), &rels, &self.completion_config(cfg))
    }

    fn spaced(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.letters().iter().map(|&l| self.alphabet.symbol(l)).collect::<Vec<_>>().join(" ")
    }

    /// Serializes in the presentation file format; parsing the output
    /// returns an equal presentation.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "kind: {}", self.kind.name());
        let _ = writeln!(out, "generators: {}", self.alphabet.symbols()[..self.generators].join(" "));
        out.push_str("relations:\n");
        match &self.relations {
            Relations::Polynomials(ps) => {
                for p in ps {
                    let _ = writeln!(out, "  {}", p.render(&self.alphabet));
                }
            }
            Relations::Words(pairs) => {
                for (u, v) in pairs {
                    let _ = writeln!(out, "  {} = {}", self.spaced(u), self.spaced(v));
                }
            }
            Relations::Table(t) => {
                for i in 0..t.dim() {
                    for j in 0..i {
                        let v = t.bracket(i, j);
                        let rhs = NcPolynomial::from_terms(
                            v.into_iter().enumerate().map(|(k, c)| (Word::letter(k as u32), c)),
                        );
                        let _ = writeln!(
                            out,
                            "  bracket {} {} = {}",
                            self.alphabet.symbol(i as u32),
                            self.alphabet.symbol(j as u32),
                            rhs.render(&self.alphabet)
                        );
                    }
                }
            }
        }
        out
    }
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> GsError {
    GsError::Parse { line, column, message: message.into() }
}

fn valid_generator(name: &str) -> bool {
    let base = name.strip_suffix("^-1").unwrap_or(name);
    let mut chars = base.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

/// Whitespace-separated tokens of `text` with their 1-based columns,
/// `text` itself starting at column `offset + 1`.
fn tokens(text: &str, offset: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (col, (i, c)) in text.char_indices().enumerate() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some((col, i)),
            (true, Some((scol, si))) => {
                out.push((offset + scol + 1, &text[si..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((scol, si)) = start {
        out.push((offset + scol + 1, &text[si..]));
    }
    out
}

fn char_col(text: &str, byte: usize) -> usize {
    text[..byte].chars().count()
}

/// Parses a presentation file. A completion JSON document (as written by
/// [`CompletionResult::to_json`]) is accepted too and read as an algebra
/// presentation of its basis.
pub fn parse_presentation(text: &str) -> Result<Presentation, GsError> {
    if text.trim_start().starts_with('{') {
        return from_completion_json(text);
    }
    let mut kind = None;
    let mut alphabet: Option<(Arc<Alphabet>, usize)> = None;
    let mut in_relations = false;
    let mut polys = Vec::new();
    let mut words = Vec::new();
    let mut table: Option<StructureTable<Rational>> = None;
    let mut saw_bracket = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let indent = char_col(line, line.len() - line.trim_start().len());
        let trimmed = line.trim();

        let mut body: Option<(usize, &str)> = None;
        if let Some((key, rest)) = trimmed.split_once(':') {
            let key = key.trim();
            let rest_off = indent + char_col(trimmed, key.len() + 1) + (rest.len() - rest.trim_start().len());
            match key {
                "kind" => {
                    let k = PresentationKind::parse(rest.trim())
                        .ok_or_else(|| syntax(line_no, rest_off + 1, format!("unknown kind {:?}", rest.trim())))?;
                    kind = Some(k);
                    continue;
                }
                "generators" => {
                    let k = kind.ok_or_else(|| syntax(line_no, 1, "`kind:` must come first"))?;
                    let toks = tokens(rest, indent + char_col(trimmed, key.len() + 1));
                    if toks.is_empty() {
                        return Err(syntax(line_no, rest_off + 1, "expected generator names"));
                    }
                    let mut names = Vec::new();
                    for (col, t) in toks {
                        if !valid_generator(t) || (k == PresentationKind::Group && t.ends_with("^-1")) {
                            return Err(syntax(line_no, col, format!("invalid generator name {t:?}")));
                        }
                        names.push(t.to_string());
                    }
                    let al = if k == PresentationKind::Group {
                        group_alphabet(&names)
                    } else {
                        Alphabet::new(names.clone())
                    };
                    let al = al.map_err(|e| syntax(line_no, rest_off + 1, e.to_string()))?;
                    if k == PresentationKind::Lie {
                        table = Some(StructureTable::new(names.len()));
                    }
                    alphabet = Some((Arc::new(al), names.len()));
                    continue;
                }
                "relations" => {
                    if alphabet.is_none() {
                        return Err(syntax(line_no, 1, "`generators:` must precede `relations:`"));
                    }
                    in_relations = true;
                    if rest.trim().is_empty() {
                        continue;
                    }
                    body = Some((rest_off, rest.trim()));
                }
                _ if !in_relations => {
                    return Err(syntax(line_no, indent + 1, format!("unknown key {key:?}")));
                }
                _ => {}
            }
        }
        let (offset, body) = match body {
            Some(b) => b,
            None if in_relations => (indent, trimmed),
            None => return Err(syntax(line_no, indent + 1, "expected `kind:`, `generators:` or `relations:`")),
        };
        let k = kind.expect("generators require kind");
        let (al, _) = alphabet.as_ref().expect("relations require generators");
        match k {
            PresentationKind::Monoid | PresentationKind::Group => {
                let sides = parse_word_chain(al, body, offset, line_no)?;
                for pair in sides.windows(2) {
                    words.push((pair[0].clone(), pair[1].clone()));
                }
            }
            PresentationKind::Algebra => polys.push(parse_poly_relation(al, body, offset, line_no)?),
            PresentationKind::Lie => {
                parse_bracket(al, body, offset, line_no, table.as_mut().expect("lie table"))?;
                saw_bracket = true;
            }
        }
    }

    let kind = kind.ok_or_else(|| syntax(1, 1, "missing `kind:`"))?;
    let (alphabet, generators) = alphabet.ok_or_else(|| syntax(1, 1, "missing `generators:`"))?;
    let relations = match kind {
        PresentationKind::Algebra => Relations::Polynomials(polys),
        PresentationKind::Monoid | PresentationKind::Group => Relations::Words(words),
        PresentationKind::Lie if saw_bracket => Relations::Table(table.expect("lie table")),
        PresentationKind::Lie => Relations::Polynomials(Vec::new()),
    };
    Ok(Presentation { kind, alphabet, generators, relations })
}

fn parse_side(al: &Alphabet, text: &str, offset: usize, line: usize) -> Result<Word, GsError> {
    let toks = tokens(text, offset);
    if toks.is_empty() {
        return Err(syntax(line, offset + 1, "expected a word"));
    }
    let mut letters = Vec::new();
    for (col, t) in toks {
        if t == "1" {
            continue;
        }
        let w = match al.letter(t) {
            Some(l) => Word::letter(l),
            None => al.parse_word(t).map_err(|_| syntax(line, col, format!("unknown generator {t:?}")))?,
        };
        letters.extend_from_slice(w.letters());
    }
    Ok(Word::new(letters))
}

/// `w1 = w2 = … = wk` with at least two sides.
fn parse_word_chain(al: &Alphabet, body: &str, offset: usize, line: usize) -> Result<Vec<Word>, GsError> {
    let mut sides = Vec::new();
    let mut start = 0;
    let parts: Vec<&str> = body.split('=').collect();
    if parts.len() < 2 {
        return Err(syntax(line, offset + char_col(body, body.len()) + 1, "expected `=`"));
    }
    for part in parts {
        sides.push(parse_side(al, part, offset + char_col(body, start), line)?);
        start += part.len() + 1;
    }
    Ok(sides)
}

fn shift(e: GsError, line: usize, offset: usize) -> GsError {
    match e {
        GsError::Parse { column, message, .. } => GsError::Parse { line, column: column + offset, message },
        other => other,
    }
}

fn parse_poly_relation(al: &Alphabet, body: &str, offset: usize, line: usize) -> Result<NcPolynomial, GsError> {
    match body.split_once('=') {
        None => parse_polynomial(al, body).map_err(|e| shift(e, line, offset)),
        Some((lhs, rhs)) => {
            let l = parse_polynomial(al, lhs).map_err(|e| shift(e, line, offset))?;
            let r_off = offset + char_col(body, lhs.len() + 1);
            let r = parse_polynomial(al, rhs).map_err(|e| shift(e, line, r_off))?;
            Ok(&l - &r)
        }
    }
}

fn parse_bracket(
    al: &Alphabet,
    body: &str,
    offset: usize,
    line: usize,
    table: &mut StructureTable<Rational>,
) -> Result<(), GsError> {
    let Some(rest) = body.strip_prefix("bracket") else {
        return Err(syntax(line, offset + 1, "expected `bracket X Y = ...`"));
    };
    let Some((pair, rhs)) = rest.split_once('=') else {
        return Err(syntax(line, offset + char_col(body, body.len()) + 1, "expected `=`"));
    };
    let toks = tokens(pair, offset + "bracket".len());
    if toks.len() != 2 {
        return Err(syntax(line, offset + 1, "a bracket takes exactly two generators"));
    }
    let mut idx = [0usize; 2];
    for (slot, (col, t)) in idx.iter_mut().zip(&toks) {
        *slot = al.letter(t).ok_or_else(|| syntax(line, *col, format!("unknown generator {t:?}")))? as usize;
    }
    let rhs_off = offset + char_col(body, "bracket".len() + pair.len() + 1);
    let value = parse_polynomial(al, rhs).map_err(|e| shift(e, line, rhs_off))?;
    let mut coeffs = vec![Rational::from_i64(0); table.dim()];
    for (w, c) in value.terms() {
        if w.len() != 1 {
            return Err(syntax(line, rhs_off + 1, "bracket values must be linear in the generators"));
        }
        coeffs[w.letters()[0] as usize] = c.clone();
    }
    table.set(idx[0], idx[1], coeffs).map_err(|e| syntax(line, offset + 1, e.to_string()))
}

fn from_completion_json(text: &str) -> Result<Presentation, GsError> {
    let doc: CompletionDocument =
        serde_json::from_str(text).map_err(|e| syntax(e.line(), e.column(), e.to_string()))?;
    let alphabet = Arc::new(Alphabet::new(doc.generators.clone())?);
    let polys = doc.basis.iter().map(|b| parse_polynomial(&alphabet, &b.poly)).collect::<Result<Vec<_>, _>>()?;
    Ok(Presentation {
        kind: PresentationKind::Algebra,
        generators: alphabet.len(),
        alphabet,
        relations: Relations::Polynomials(polys),
    })
}

/// Normal form of a word in a monoid or group quotient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum NormalForm {
    Word(Word),
    /// The word lies in the ideal (absorbed by a monomial rule).
    Zero,
}

impl NormalForm {
    pub fn render(&self, alphabet: &Alphabet) -> String {
        match self {
            NormalForm::Word(w) => alphabet.render(w),
            NormalForm::Zero => "0".into(),
        }
    }
}

fn binomial_basis<K: Field>(r: &CompletionResult<K>) -> Result<&crate::rewrite::RuleSet<K>, GsError> {
    let basis = r.complete_basis()?;
    if let Some(bad) = basis.rules().iter().find(|rule| !rule.is_binomial_or_monomial()) {
        return Err(GsError::NonBinomial(bad.poly().render(basis.alphabet())));
    }
    Ok(basis)
}

/// The irreducible representative of `u`'s class.
pub fn normal_form_word<K: Field>(u: &Word, r: &CompletionResult<K>) -> Result<NormalForm, GsError> {
    let basis = binomial_basis(r)?;
    basis.alphabet().validate(u)?;
    let reduced = basis.reduce(&NcPolynomial::word(u.clone()));
    let mut terms = reduced.terms();
    match (terms.next(), terms.next()) {
        (None, _) => Ok(NormalForm::Zero),
        (Some((w, c)), None) if c.is_one() => Ok(NormalForm::Word(w.clone())),
        _ => Err(GsError::NonBinomial(reduced.render(basis.alphabet()))),
    }
}

/// Whether `u` and `v` represent the same element.
pub fn word_problem<K: Field>(u: &Word, v: &Word, r: &CompletionResult<K>) -> Result<bool, GsError> {
    Ok(normal_form_word(u, r)? == normal_form_word(v, r)?)
}

/// Counts of irreducible words per length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthSeries {
    pub counts: Vec<u128>,
}

pub fn growth_series<K: Field>(r: &CompletionResult<K>, max_len: usize) -> Result<GrowthSeries, GsError> {
    let basis = binomial_basis(r)?;
    Ok(GrowthSeries { counts: basis.irr_counts(max_len) })
}

const LETTERS: [&str; 4] = ["a", "b", "c", "d"];

fn rank(name: &str, prefix: &str) -> Option<usize> {
    let n: usize = name.strip_prefix(prefix)?.parse().ok()?;
    (1..=LETTERS.len()).contains(&n).then_some(n)
}

fn dedup_relations(rels: Vec<(Word, Word)>) -> Vec<(Word, Word)> {
    let mut out: Vec<(Word, Word)> = Vec::new();
    for (u, v) in rels {
        if u != v && !out.iter().any(|(a, b)| (a == &u && b == &v) || (a == &v && b == &u)) {
            out.push((u, v));
        }
    }
    out
}

fn plactic(n: usize) -> Vec<(Word, Word)> {
    let w = |l: &[usize]| Word::new(l.iter().map(|&x| x as u32).collect());
    let mut rels = Vec::new();
    // x z y = z x y for x <= y < z
    for z in 0..n {
        for y in 0..z {
            for x in 0..=y {
                rels.push((w(&[x, z, y]), w(&[z, x, y])));
            }
        }
    }
    // y x z = y z x for x < y <= z
    for z in 0..n {
        for y in 0..=z {
            for x in 0..y {
                rels.push((w(&[y, x, z]), w(&[y, z, x])));
            }
        }
    }
    dedup_relations(rels)
}

fn chinese(n: usize) -> Vec<(Word, Word)> {
    let w = |l: &[usize]| Word::new(l.iter().map(|&x| x as u32).collect());
    let mut rels = Vec::new();
    // c b a = c a b = b c a for a <= b <= c, not all equal
    for c in 0..n {
        for b in 0..=c {
            for a in 0..=b {
                if a == c {
                    continue;
                }
                rels.push((w(&[c, b, a]), w(&[c, a, b])));
                rels.push((w(&[c, a, b]), w(&[b, c, a])));
            }
        }
    }
    dedup_relations(rels)
}

fn free_commutative(n: usize) -> Vec<(Word, Word)> {
    let mut rels = Vec::new();
    for j in 0..n as u32 {
        for i in 0..j {
            rels.push((Word::new(vec![j, i]), Word::new(vec![i, j])));
        }
    }
    rels
}

/// Names accepted by [`catalog`].
pub const CATALOG_NAMES: &[&str] = &["bicyclic", "sl2", "heisenberg-3", "plactic-N", "chinese-N", "free-comm-N"];

/// A named presentation. `N` ranges over 1..=4 for the parametrized
/// families.
pub fn catalog(name: &str) -> Result<Presentation, GsError> {
    let q = Rational::from_i64;
    if let Some(n) = rank(name, "plactic-") {
        return Presentation::monoid(&LETTERS[..n], plactic(n));
    }
    if let Some(n) = rank(name, "chinese-") {
        return Presentation::monoid(&LETTERS[..n], chinese(n));
    }
    if let Some(n) = rank(name, "free-comm-") {
        return Presentation::monoid(&LETTERS[..n], free_commutative(n));
    }
    match name {
        "bicyclic" => Presentation::monoid(&["q", "p"], vec![(Word::new(vec![1, 0]), Word::empty())]),
        "sl2" => {
            // f < e < h: [h,e] = 2e, [h,f] = -2f, [e,f] = h
            let mut t = StructureTable::new(3);
            t.set(2, 1, vec![q(0), q(2), q(0)])?;
            t.set(2, 0, vec![q(-2), q(0), q(0)])?;
            t.set(1, 0, vec![q(0), q(0), q(1)])?;
            lie(&["f", "e", "h"], t)
        }
        "heisenberg-3" => {
            // x < y < z: [y, x] = -z, z central
            let mut t = StructureTable::new(3);
            t.set(1, 0, vec![q(0), q(0), q(-1)])?;
            lie(&["x", "y", "z"], t)
        }
        _ => Err(GsError::UnknownCatalog(name.to_string())),
    }
}

fn lie(names: &[&str], table: StructureTable<Rational>) -> Result<Presentation, GsError> {
    Ok(Presentation {
        kind: PresentationKind::Lie,
        alphabet: Arc::new(Alphabet::new(names.iter().copied())?),
        generators: names.len(),
        relations: Relations::Table(table),
    })
}
