//! Compositions of relations and Shirshov's completion procedure.
//!
//! Only intersection and inclusion compositions are formed: over a field a
//! composition relative to a trivial common multiple `u·c·v` is always
//! trivial.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::GsError;
use crate::ncpoly::NcPolynomial;
use crate::rewrite::{Rule, RuleSet};
use crate::scalar::{Field, Rational};
use crate::words::{find_inclusions, find_intersections, Alphabet, Overlap, OverlapKind, Word};

/// `(s_i, s_j)_w` for one overlap of the leading words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition<K: Field = Rational> {
    /// Rule identifiers `(i, j)`; the overlap is read with `s̄_i` as `u`
    /// and `s̄_j` as `v`.
    pub source: (usize, usize),
    pub overlap: Overlap,
    pub value: NcPolynomial<K>,
}

impl<K: Field> Composition<K> {
    pub fn w(&self) -> &Word {
        &self.overlap.w
    }
}

/// A composition together with its reduction modulo the basis current at
/// the time it was processed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate<K: Field = Rational> {
    pub composition: Composition<K>,
    pub residue: NcPolynomial<K>,
}

fn composition_value<K: Field>(s1: &Rule<K>, s2: &Rule<K>, o: &Overlap) -> NcPolynomial<K> {
    let eps = Word::empty();
    match o.kind {
        OverlapKind::Intersection => &s1.poly().mul_bounded(&eps, &o.b) - &s2.poly().mul_bounded(&o.a, &eps),
        OverlapKind::Inclusion => s1.poly() - &s2.poly().mul_bounded(&o.a, &o.b),
    }
}

/// Overlaps between `s̄1` (as `u`) and `s̄2` (as `v`) that give
/// compositions, without forming their values. `same` marks a rule paired
/// with itself, which has no inclusion composition.
fn directed_overlaps(u: &Word, v: &Word, same: bool, equal_leads_seen: bool) -> Vec<Overlap> {
    let mut out = find_intersections(u, v);
    if !same && !(u == v && equal_leads_seen) {
        out.extend(find_inclusions(u, v));
    }
    out
}

/// Every `(i, j, overlap)` among two rules with identifiers `i <= j`.
fn pair_overlaps<K: Field>(i: usize, s1: &Rule<K>, j: usize, s2: &Rule<K>) -> Vec<(usize, usize, Overlap)> {
    let (u, v) = (s1.lead(), s2.lead());
    let mut out: Vec<_> = directed_overlaps(u, v, i == j, false).into_iter().map(|o| (i, j, o)).collect();
    if i != j {
        // equal leads: the inclusion u = v was already emitted above
        out.extend(directed_overlaps(v, u, false, true).into_iter().map(|o| (j, i, o)));
    }
    out
}

/// All compositions of two monic rules: intersections in both directions
/// and inclusions in both containment directions. Equal rules are treated
/// as a single rule paired with itself.
pub fn compositions<K: Field>(s1: &Rule<K>, s2: &Rule<K>) -> Vec<Composition<K>> {
    let j = if s1 == s2 { 0 } else { 1 };
    let rules = [s1, s2];
    pair_overlaps(0, s1, j, s2)
        .into_iter()
        .map(|(a, b, overlap)| Composition {
            source: (a, b),
            value: composition_value(rules[a], rules[b], &overlap),
            overlap,
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CompletionStatus {
    /// Every composition among the basis rules reduces to zero.
    Complete,
    /// Some composition exceeded the degree cap and was not processed.
    CappedDegree,
    /// The rule budget ran out.
    CappedRules,
    /// A nonzero scalar lies in the ideal; the quotient is zero.
    UnitIdeal,
}

impl CompletionStatus {
    /// Whether the basis is a Gröbner–Shirshov basis: true for
    /// `Complete` and for the (trivially complete) unit ideal.
    pub fn is_complete(self) -> bool {
        matches!(self, CompletionStatus::Complete | CompletionStatus::UnitIdeal)
    }
}

impl fmt::Display for CompletionStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CompletionStatus::Complete => "complete",
            CompletionStatus::CappedDegree => "capped_degree",
            CompletionStatus::CappedRules => "capped_rules",
            CompletionStatus::UnitIdeal => "unit_ideal",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletionConfig {
    /// Compositions whose common multiple is longer than this are skipped.
    pub max_degree: usize,
    pub max_rules: usize,
    /// Keep the basis reduced: drop and re-reduce rules whose lead contains
    /// a newer lead, and reduce tails at the end.
    pub interreduce: bool,
    /// Safety cap on rewrite steps per reduction.
    pub max_steps: Option<u64>,
    /// Assert that every rule is a binomial `u - v` or a single word, as
    /// happens for monoid and group presentations.
    pub require_binomial: bool,
}

impl Default for CompletionConfig {
    fn default() -> Self {
        CompletionConfig {
            max_degree: 12,
            max_rules: 10_000,
            interreduce: true,
            max_steps: Some(10_000_000),
            require_binomial: false,
        }
    }
}

impl CompletionConfig {
    pub fn with_max_degree(mut self, d: usize) -> Self {
        self.max_degree = d;
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompletionStats {
    pub compositions_processed: u64,
    pub compositions_skipped: u64,
    pub rules_added: u64,
    pub rules_removed: u64,
    pub reduction_steps: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CompletionResult<K: Field = Rational> {
    /// Rules sorted by leading word (degree, then deg-lex).
    pub basis: RuleSet<K>,
    /// Identifier of each basis rule, parallel to `basis.rules()`. Input
    /// relations are numbered first, added rules after them in creation
    /// order; certificates refer to these identifiers.
    pub rule_ids: Vec<usize>,
    pub status: CompletionStatus,
    pub certificates: Vec<Certificate<K>>,
    pub skipped: Vec<Composition<K>>,
    pub stats: CompletionStats,
}

impl<K: Field> CompletionResult<K> {
    /// The complete, empty basis of the free algebra.
    pub fn free(alphabet: Arc<Alphabet>) -> Self {
        CompletionResult {
            basis: RuleSet::empty(alphabet),
            rule_ids: Vec::new(),
            status: CompletionStatus::Complete,
            certificates: Vec::new(),
            skipped: Vec::new(),
            stats: CompletionStats::default(),
        }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        self.basis.alphabet()
    }

    /// The basis, provided it is a Gröbner–Shirshov basis.
    pub fn complete_basis(&self) -> Result<&RuleSet<K>, GsError> {
        if self.status.is_complete() {
            Ok(&self.basis)
        } else {
            Err(GsError::Incomplete(self.status.to_string()))
        }
    }

    pub fn to_document(&self) -> CompletionDocument {
        let al = self.alphabet();
        CompletionDocument {
            format: 1,
            status: self.status,
            generators: al.symbols().to_vec(),
            basis: self
                .basis
                .rules()
                .iter()
                .zip(&self.rule_ids)
                .map(|(r, &id)| BasisRecord { id, lead: al.render(r.lead()), poly: r.poly().render(al) })
                .collect(),
            certificates: self
                .certificates
                .iter()
                .map(|c| CompositionRecord::new(&c.composition, Some(&c.residue), al))
                .collect(),
            skipped: self.skipped.iter().map(|c| CompositionRecord::new(c, None, al)).collect(),
            stats: self.stats.clone(),
        }
    }

    /// Pretty-printed JSON serialization; deterministic for identical
    /// input and configuration.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("serializable")
    }
}

/// JSON form of a [`CompletionResult`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CompletionDocument {
    pub format: u32,
    pub status: CompletionStatus,
    pub generators: Vec<String>,
    pub basis: Vec<BasisRecord>,
    pub certificates: Vec<CompositionRecord>,
    #[serde(default)]
    pub skipped: Vec<CompositionRecord>,
    pub stats: CompletionStats,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BasisRecord {
    pub id: usize,
    pub lead: String,
    pub poly: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CompositionRecord {
    pub left: usize,
    pub right: usize,
    pub kind: String,
    pub a: String,
    pub b: String,
    pub w: String,
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub residue: Option<String>,
}

impl CompositionRecord {
    pub fn new<K: Field>(c: &Composition<K>, residue: Option<&NcPolynomial<K>>, al: &Alphabet) -> Self {
        CompositionRecord {
            left: c.source.0,
            right: c.source.1,
            kind: match c.overlap.kind {
                OverlapKind::Intersection => "intersection".into(),
                OverlapKind::Inclusion => "inclusion".into(),
            },
            a: al.render(&c.overlap.a),
            b: al.render(&c.overlap.b),
            w: al.render(&c.overlap.w),
            value: c.value.render(al),
            residue: residue.map(|r| r.render(al)),
        }
    }
}

/// Pending composition, ordered by common multiple, then source rules.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct QueueKey {
    w: Word,
    i: usize,
    j: usize,
    kind: OverlapKind,
    a_len: usize,
}

enum Added {
    Rule,
    Redundant,
    Unit,
}

struct Completion<K: Field> {
    alphabet: Arc<Alphabet>,
    cfg: CompletionConfig,
    rules: Vec<Option<Rule<K>>>,
    /// Live rules in identifier order, with their identifiers.
    index: RuleSet<K>,
    index_ids: Vec<usize>,
    queue: BTreeMap<QueueKey, Overlap>,
    certificates: Vec<Certificate<K>>,
    skipped: Vec<Composition<K>>,
    stats: CompletionStats,
}

impl<K: Field> Completion<K> {
    fn new(alphabet: Arc<Alphabet>, cfg: CompletionConfig) -> Self {
        Completion {
            index: RuleSet::empty(alphabet.clone()),
            alphabet,
            cfg,
            rules: Vec::new(),
            index_ids: Vec::new(),
            queue: BTreeMap::new(),
            certificates: Vec::new(),
            skipped: Vec::new(),
            stats: CompletionStats::default(),
        }
    }

    fn live_count(&self) -> usize {
        self.index_ids.len()
    }

    fn rebuild_index(&mut self) -> Result<(), GsError> {
        let (ids, rules): (Vec<usize>, Vec<Rule<K>>) =
            self.rules.iter().enumerate().filter_map(|(id, r)| r.clone().map(|r| (id, r))).unzip();
        self.index = RuleSet::from_rules(self.alphabet.clone(), rules)?;
        self.index_ids = ids;
        Ok(())
    }

    fn reduce(&mut self, f: &NcPolynomial<K>) -> Result<NcPolynomial<K>, GsError> {
        let r = self.index.reduce_counted(f, self.cfg.max_steps)?;
        self.stats.reduction_steps += r.steps;
        Ok(r.remainder)
    }

    fn check_shape(&self, rule: &Rule<K>) -> Result<(), GsError> {
        if self.cfg.require_binomial && !rule.is_binomial_or_monomial() {
            return Err(GsError::NonBinomial(rule.poly().render(&self.alphabet)));
        }
        Ok(())
    }

    /// Inserts an already-reduced nonzero polynomial as a new rule and
    /// queues its compositions with every live rule.
    fn insert(&mut self, poly: &NcPolynomial<K>) -> Result<usize, GsError> {
        let rule = Rule::new(poly)?;
        self.check_shape(&rule)?;
        let id = self.rules.len();
        self.rules.push(Some(rule));
        self.rebuild_index()?;
        let new_rule = self.rules[id].clone().expect("just inserted");
        for other in 0..=id {
            let Some(r) = &self.rules[other] else { continue };
            for (i, j, o) in pair_overlaps(other, r, id, &new_rule) {
                let key = QueueKey { w: o.w.clone(), i, j, kind: o.kind, a_len: o.a.len() };
                self.queue.insert(key, o);
            }
        }
        Ok(id)
    }

    /// Reduces `poly`, inserts it if nonzero, and (when interreducing)
    /// re-reduces every older rule whose lead contains the new lead.
    fn add(&mut self, poly: &NcPolynomial<K>) -> Result<Added, GsError> {
        let mut worklist = vec![poly.clone()];
        let mut added = false;
        while let Some(p) = worklist.pop() {
            let p = if self.cfg.interreduce { self.reduce(&p)? } else { p };
            if p.is_zero() {
                continue;
            }
            if p.degree() == Some(0) {
                return Ok(Added::Unit);
            }
            let id = self.insert(&p)?;
            added = true;
            if !self.cfg.interreduce {
                continue;
            }
            let lead = self.rules[id].as_ref().expect("live").lead().clone();
            let stale: Vec<usize> =
                (0..id).filter(|&k| self.rules[k].as_ref().is_some_and(|r| r.lead().contains(&lead))).collect();
            if stale.is_empty() {
                continue;
            }
            for k in stale.into_iter().rev() {
                let r = self.rules[k].take().expect("live");
                self.stats.rules_removed += 1;
                worklist.push(r.poly().clone());
            }
            self.rebuild_index()?;
        }
        Ok(if added { Added::Rule } else { Added::Redundant })
    }

    fn pop(&mut self) -> Option<(QueueKey, Overlap)> {
        self.queue.pop_first()
    }

    fn run(&mut self) -> Result<CompletionStatus, GsError> {
        loop {
            while let Some((key, overlap)) = self.pop() {
                let (Some(s1), Some(s2)) = (&self.rules[key.i], &self.rules[key.j]) else {
                    continue;
                };
                let value = composition_value(s1, s2, &overlap);
                debug_assert!(value.leading_word().is_none_or(|l| *l < overlap.w));
                let composition = Composition { source: (key.i, key.j), overlap, value };
                if composition.w().degree() > self.cfg.max_degree {
                    self.stats.compositions_skipped += 1;
                    self.skipped.push(composition);
                    continue;
                }
                let residue = self.reduce(&composition.value)?;
                self.stats.compositions_processed += 1;
                let nonzero = !residue.is_zero();
                self.certificates.push(Certificate { composition, residue: residue.clone() });
                if nonzero {
                    match self.add(&residue)? {
                        Added::Unit => return Ok(CompletionStatus::UnitIdeal),
                        Added::Rule => self.stats.rules_added += 1,
                        Added::Redundant => {}
                    }
                    if self.live_count() > self.cfg.max_rules {
                        return Ok(CompletionStatus::CappedRules);
                    }
                }
            }
            if !self.skipped.is_empty() {
                return Ok(CompletionStatus::CappedDegree);
            }
            if self.cfg.interreduce {
                self.reduce_tails()?;
            }
            // Final audit of the live basis; normally empty.
            let check = is_gs_basis(&self.index, None, self.cfg.max_steps)?;
            if check.is_gs() {
                return Ok(CompletionStatus::Complete);
            }
            for failure in check.failures {
                match self.add(&failure.residue)? {
                    Added::Unit => return Ok(CompletionStatus::UnitIdeal),
                    Added::Rule => self.stats.rules_added += 1,
                    Added::Redundant => {}
                }
            }
        }
    }

    fn reduce_tails(&mut self) -> Result<(), GsError> {
        for id in 0..self.rules.len() {
            let Some(rule) = self.rules[id].clone() else { continue };
            let tail = self.reduce(rule.tail())?;
            if &tail != rule.tail() {
                let poly = &NcPolynomial::word(rule.lead().clone()) - &tail;
                let new_rule = Rule::new(&poly)?;
                self.check_shape(&new_rule)?;
                self.rules[id] = Some(new_rule);
                self.rebuild_index()?;
            }
        }
        Ok(())
    }

    fn finish(self, status: CompletionStatus) -> Result<CompletionResult<K>, GsError> {
        let mut live: Vec<(usize, Rule<K>)> = if status == CompletionStatus::UnitIdeal {
            vec![(self.rules.len(), Rule::new(&NcPolynomial::one())?)]
        } else {
            self.rules.into_iter().enumerate().filter_map(|(id, r)| r.map(|r| (id, r))).collect()
        };
        live.sort_by(|(ia, a), (ib, b)| a.lead().cmp(b.lead()).then(ia.cmp(ib)));
        let (rule_ids, rules): (Vec<_>, Vec<_>) = live.into_iter().unzip();
        Ok(CompletionResult {
            basis: RuleSet::from_rules(self.alphabet, rules)?,
            rule_ids,
            status,
            certificates: self.certificates,
            skipped: self.skipped,
            stats: self.stats,
        })
    }
}

/// Completes `relations` to a Gröbner–Shirshov basis, up to the caps in
/// `cfg`.
///
/// Relations are monicized and (with `cfg.interreduce`) interreduced, then
/// compositions are processed smallest common multiple first. Each nonzero
/// residue becomes a new rule. A status other than
/// [`CompletionStatus::Complete`] or [`CompletionStatus::UnitIdeal`] means
/// the result is only a basis up to the cap.
pub fn shirshov_complete<K: Field>(
    alphabet: Arc<Alphabet>,
    relations: &[NcPolynomial<K>],
    cfg: &CompletionConfig,
) -> Result<CompletionResult<K>, GsError> {
    if relations.is_empty() {
        return Err(GsError::EmptyInput);
    }
    for r in relations {
        for (w, _) in r.terms() {
            alphabet.validate(w)?;
        }
        let degree = r.degree().ok_or(GsError::ZeroPolynomial)?;
        if degree > cfg.max_degree {
            return Err(GsError::DegreeExceedsCap { degree, cap: cfg.max_degree });
        }
    }
    let mut state = Completion::new(alphabet, cfg.clone());
    for r in relations {
        if let Added::Unit = state.add(r)? {
            return state.finish(CompletionStatus::UnitIdeal);
        }
    }
    let status = state.run()?;
    state.finish(status)
}

/// Outcome of [`is_gs_basis`].
#[derive(Clone, Debug, PartialEq)]
pub struct GsCheck<K: Field = Rational> {
    /// Number of compositions reduced.
    pub checked: usize,
    /// Compositions with a nonzero residue.
    pub failures: Vec<Certificate<K>>,
}

impl<K: Field> GsCheck<K> {
    pub fn is_gs(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that every composition with `|w| <= max_degree` (all of them
/// when `None`) reduces to zero. Source indices refer to positions in
/// `rules`.
pub fn is_gs_basis<K: Field>(
    rules: &RuleSet<K>,
    max_degree: Option<usize>,
    max_steps: Option<u64>,
) -> Result<GsCheck<K>, GsError> {
    let rs = rules.rules();
    let mut check = GsCheck { checked: 0, failures: Vec::new() };
    let mut overlaps = Vec::new();
    for j in 0..rs.len() {
        for i in 0..=j {
            overlaps.extend(pair_overlaps(i, &rs[i], j, &rs[j]));
        }
    }
    overlaps.sort_by(|(i1, j1, o1), (i2, j2, o2)| {
        (&o1.w, i1, j1, o1.kind, o1.a.len()).cmp(&(&o2.w, i2, j2, o2.kind, o2.a.len()))
    });
    for (i, j, overlap) in overlaps {
        if max_degree.is_some_and(|d| overlap.w.degree() > d) {
            continue;
        }
        let value = composition_value(&rs[i], &rs[j], &overlap);
        let residue = rules.reduce_counted(&value, max_steps)?.remainder;
        check.checked += 1;
        if !residue.is_zero() {
            check.failures.push(Certificate { composition: Composition { source: (i, j), overlap, value }, residue });
        }
    }
    Ok(check)
}
