//! Reduction modulo a set of monic relations and enumeration of the
//! irreducible words Irr(S).
//!
//! A monic polynomial `s` with leading word `s̄` acts as the rewrite rule
//! `s̄ → s̄ - s`. Reduction always rewrites the greatest reducible word of
//! the support, at its leftmost reducible position, with the lowest-index
//! matching rule.

mod matcher;

use std::sync::Arc;

use crate::error::GsError;
use crate::ncpoly::NcPolynomial;
use crate::scalar::{Field, Rational};
use crate::words::{Alphabet, Word};

use matcher::Matcher;

/// One monic relation, split into its leading word and the tail it
/// rewrites to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule<K: Field = Rational> {
    poly: NcPolynomial<K>,
    lead: Word,
    tail: NcPolynomial<K>,
}

impl<K: Field> Rule<K> {
    /// Monicizes `poly`. Fails on zero.
    pub fn new(poly: &NcPolynomial<K>) -> Result<Self, GsError> {
        let poly = poly.monic()?;
        let lead = poly.leading_word().expect("nonzero").clone();
        let tail = &NcPolynomial::word(lead.clone()) - &poly;
        Ok(Rule { poly, lead, tail })
    }

    pub fn poly(&self) -> &NcPolynomial<K> {
        &self.poly
    }

    pub fn lead(&self) -> &Word {
        &self.lead
    }

    /// `lead - poly`: what an occurrence of the lead is replaced by.
    pub fn tail(&self) -> &NcPolynomial<K> {
        &self.tail
    }

    pub fn degree(&self) -> usize {
        self.lead.degree()
    }

    /// `u - v` or a lone word, both with unit coefficients.
    pub fn is_binomial_or_monomial(&self) -> bool {
        match self.tail.len() {
            0 => true,
            1 => self.tail.terms().all(|(_, c)| c.is_one()),
            _ => false,
        }
    }
}

/// An ordered set of monic rules over one alphabet, indexed for subword
/// lookup.
#[derive(Clone, Debug)]
pub struct RuleSet<K: Field = Rational> {
    alphabet: Arc<Alphabet>,
    rules: Vec<Rule<K>>,
    matcher: Matcher,
}

impl<K: Field> PartialEq for RuleSet<K> {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet && self.rules == other.rules
    }
}

/// Outcome of a counted reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction<K: Field = Rational> {
    pub remainder: NcPolynomial<K>,
    pub steps: u64,
}

impl<K: Field> RuleSet<K> {
    /// Builds a rule set, monicizing every polynomial. Zero polynomials and
    /// letters outside `alphabet` are rejected.
    pub fn new(alphabet: Arc<Alphabet>, polys: &[NcPolynomial<K>]) -> Result<Self, GsError> {
        let rules = polys.iter().map(Rule::new).collect::<Result<Vec<_>, _>>()?;
        Self::from_rules(alphabet, rules)
    }

    pub fn empty(alphabet: Arc<Alphabet>) -> Self {
        Self::from_rules(alphabet, Vec::new()).expect("no rules to validate")
    }

    pub fn from_rules(alphabet: Arc<Alphabet>, rules: Vec<Rule<K>>) -> Result<Self, GsError> {
        for r in &rules {
            for (w, _) in r.poly.terms() {
                alphabet.validate(w)?;
            }
        }
        let leads: Vec<&Word> = rules.iter().map(|r| &r.lead).collect();
        let matcher = Matcher::new(alphabet.len(), &leads);
        Ok(RuleSet { alphabet, rules, matcher })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn rules(&self) -> &[Rule<K>] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn polys(&self) -> Vec<NcPolynomial<K>> {
        self.rules.iter().map(|r| r.poly.clone()).collect()
    }

    /// True when no leading word is a subword of another rule's leading
    /// word.
    pub fn is_interreduced(&self) -> bool {
        self.rules
            .iter()
            .enumerate()
            .all(|(i, r)| self.rules.iter().enumerate().all(|(j, s)| i == j || !r.lead.contains(&s.lead)))
    }

    /// Whether `w` contains no leading word as a subword.
    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.matcher.leftmost(w).is_none()
    }

    /// Leftmost occurrence of a leading word in `w`, as `(position, rule)`.
    pub fn find_reducible(&self, w: &Word) -> Option<(usize, usize)> {
        self.matcher.leftmost(w)
    }

    /// `c·w` with `w = a·s̄·b` replaced by `c·a·tail(s)·b`, added into `acc`.
    fn rewrite_into(&self, acc: &mut NcPolynomial<K>, w: &Word, c: &K, pos: usize, rule: usize) {
        let r = &self.rules[rule];
        let a = w.slice(0, pos);
        let b = w.slice(pos + r.lead.len(), w.len());
        r.tail.add_bounded_into(acc, c, &a, &b);
    }

    /// Every polynomial obtained from the word `w` by one rewrite at any
    /// position with any matching rule.
    pub fn successors(&self, w: &Word) -> Vec<NcPolynomial<K>> {
        self.matcher
            .all_matches(w)
            .into_iter()
            .map(|(pos, rule)| {
                let mut out = NcPolynomial::zero();
                self.rewrite_into(&mut out, w, &K::one(), pos, rule);
                out
            })
            .collect()
    }

    /// One step of the fixed reduction strategy, or `None` when `f` is
    /// already irreducible.
    pub fn rewrite_step(&self, f: &NcPolynomial<K>) -> Option<NcPolynomial<K>> {
        let (w, c, pos, rule) = f.terms().rev().find_map(|(w, c)| self.find_reducible(w).map(|(p, r)| (w, c, p, r)))?;
        let mut out = f.clone();
        out.add_term(w.clone(), -c.clone());
        self.rewrite_into(&mut out, w, c, pos, rule);
        Some(out)
    }

    /// Reduces `f` to a polynomial in which no word contains a leading
    /// word. Deg-lex is a well order, so this always terminates.
    pub fn reduce(&self, f: &NcPolynomial<K>) -> NcPolynomial<K> {
        self.reduce_counted(f, None).expect("no step limit").remainder
    }

    /// As [`RuleSet::reduce`], counting rewrite steps and failing once
    /// `max_steps` is exceeded.
    pub fn reduce_counted(&self, f: &NcPolynomial<K>, max_steps: Option<u64>) -> Result<Reduction<K>, GsError> {
        // Rewriting a term only introduces smaller words, so popping the
        // greatest remaining term visits words in exactly the order the
        // strategy prescribes.
        let mut pending = f.clone();
        let mut remainder = NcPolynomial::zero();
        let mut steps = 0u64;
        while let Some((w, c)) = pending.pop_leading() {
            match self.find_reducible(&w) {
                Some((pos, rule)) => {
                    steps += 1;
                    if let Some(limit) = max_steps {
                        if steps > limit {
                            return Err(GsError::StepLimit(limit));
                        }
                    }
                    self.rewrite_into(&mut pending, &w, &c, pos, rule);
                }
                None => remainder.add_term(w, c),
            }
        }
        Ok(Reduction { remainder, steps })
    }

    /// Whether `f` is trivial modulo `(S, w)`: `f` must be zero or have a
    /// leading word below `w`, and is trivial iff it reduces to zero.
    /// Every rewrite stays at or below the leading word of `f`, so a
    /// reduction to zero is a representation by normal S-words below `w`.
    pub fn is_trivial_mod(&self, f: &NcPolynomial<K>, w: &Word) -> Result<bool, GsError> {
        if let Some(lead) = f.leading_word() {
            if lead >= w {
                return Err(GsError::NotBelow { lead: self.alphabet.render(lead), w: self.alphabet.render(w) });
            }
        }
        Ok(self.reduce(f).is_zero())
    }

    /// Irreducible words of degree at most `d`, deg-lex ascending.
    ///
    /// Words are grown one letter at a time from irreducible parents, so
    /// only the newly created suffixes need checking; the automaton state
    /// of each parent is carried along for that.
    pub fn irr_words(&self, d: usize) -> Vec<Word> {
        let mut out = Vec::new();
        let start = self.matcher.start();
        if self.matcher.accepting(start) {
            return out;
        }
        let mut level = vec![(Word::empty(), start)];
        for k in 0..=d {
            out.extend(level.iter().map(|(w, _)| w.clone()));
            if k == d {
                break;
            }
            level = level
                .iter()
                .flat_map(|(w, s)| {
                    self.alphabet.letters().filter_map(move |l| {
                        let t = self.matcher.step(*s, l);
                        (!self.matcher.accepting(t)).then(|| {
                            let mut child = w.clone();
                            child.push(l);
                            (child, t)
                        })
                    })
                })
                .collect();
            if level.is_empty() {
                break;
            }
        }
        out
    }

    /// Number of irreducible words of each degree `0..=d`, computed by
    /// dynamic programming over automaton states.
    pub fn irr_counts(&self, d: usize) -> Vec<u128> {
        let n = self.matcher.state_count();
        let mut counts = vec![0u128; n];
        let start = self.matcher.start();
        if self.matcher.accepting(start) {
            return vec![0; d + 1];
        }
        counts[start as usize] = 1;
        let mut out = Vec::with_capacity(d + 1);
        for k in 0..=d {
            out.push(counts.iter().sum());
            if k == d {
                break;
            }
            let mut next = vec![0u128; n];
            for (s, &c) in counts.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for l in self.alphabet.letters() {
                    let t = self.matcher.step(s as u32, l);
                    if !self.matcher.accepting(t) {
                        next[t as usize] += c;
                    }
                }
            }
            counts = next;
        }
        out
    }
}

/// Free-function form of [`RuleSet::reduce`].
pub fn reduce<K: Field>(f: &NcPolynomial<K>, rules: &RuleSet<K>) -> NcPolynomial<K> {
    rules.reduce(f)
}

/// Free-function form of [`RuleSet::is_trivial_mod`].
pub fn is_trivial_mod<K: Field>(f: &NcPolynomial<K>, rules: &RuleSet<K>, w: &Word) -> Result<bool, GsError> {
    rules.is_trivial_mod(f, w)
}

/// Free-function form of [`RuleSet::irr_words`].
pub fn irr_words<K: Field>(rules: &RuleSet<K>, d: usize) -> Vec<Word> {
    rules.irr_words(d)
}
