//! Lyndon–Shirshov words, Shirshov factorization, standard bracketing and
//! PBW bases of enveloping algebras.
//!
//! An associative Lyndon–Shirshov word (ALSW) is a word strictly greater
//! than each of its proper cyclic rotations. Factors of a Shirshov
//! factorization are ordered by [`cmp_lex_prefix_greater`], written `⪯`.
//! Lie Gröbner–Shirshov checks go through the associative expansions of the
//! relations: a set of Lie polynomials is a Lie GS basis exactly when it is
//! an associative one.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use crate::complete::{is_gs_basis, CompletionResult, GsCheck};
use crate::error::GsError;
use crate::ncpoly::{LieElement, LieTerm, NcPolynomial};
use crate::rewrite::RuleSet;
use crate::scalar::{Field, Rational};
use crate::words::{cmp_lex_prefix_greater, Alphabet, Letter, Word};

/// Whether `u` is an associative Lyndon–Shirshov word.
///
/// Checked through the equivalent suffix condition: every proper suffix
/// of `u` is `⪯`-smaller than `u`.
pub fn is_alsw(u: &Word) -> Result<bool, GsError> {
    if u.is_empty() {
        return Err(GsError::EmptyWord);
    }
    Ok(alsw(u.letters()))
}

fn alsw(u: &[Letter]) -> bool {
    (1..u.len()).all(|k| cmp_slices_prefix_greater(&u[k..], u) == Ordering::Less)
}

fn cmp_slices_prefix_greater(u: &[Letter], v: &[Letter]) -> Ordering {
    match u.iter().zip(v).map(|(a, b)| a.cmp(b)).find(|o| o.is_ne()) {
        Some(o) => o,
        None => v.len().cmp(&u.len()),
    }
}

/// The unique factorization `u = u_1 ⋯ u_t` into ALSWs with
/// `u_1 ⪯ ⋯ ⪯ u_t`.
///
/// Duval's algorithm with the letter order reversed: ALSWs are the Lyndon
/// words of the reversed alphabet.
pub fn shirshov_factorize(u: &Word) -> Result<Vec<Word>, GsError> {
    if u.is_empty() {
        return Err(GsError::EmptyWord);
    }
    let s = u.letters();
    let n = s.len();
    let mut factors = Vec::new();
    let mut i = 0;
    while i < n {
        let (mut j, mut k) = (i + 1, i);
        while j < n && s[k] >= s[j] {
            if s[k] > s[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            factors.push(u.slice(i, i + j - k));
            i += j - k;
        }
    }
    Ok(factors)
}

/// Standard bracketing of an ALSW: `[lsw_bracket(v), lsw_bracket(w)]`
/// where `w` is the longest proper suffix that is an ALSW.
pub fn lsw_bracket(u: &Word) -> Result<LieTerm, GsError> {
    if !is_alsw(u)? {
        return Err(GsError::NotAlsw);
    }
    Ok(bracket_alsw(u.letters()))
}

fn bracket_alsw(u: &[Letter]) -> LieTerm {
    if u.len() == 1 {
        return LieTerm::Gen(u[0]);
    }
    let split = (1..u.len()).find(|&k| alsw(&u[k..])).expect("a single letter suffix is an ALSW");
    LieTerm::bracket(bracket_alsw(&u[..split]), bracket_alsw(&u[split..]))
}

/// A non-associative Lyndon–Shirshov word: an ALSW with its standard
/// bracketing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NlswElement {
    pub word: Word,
    pub bracketing: LieTerm,
}

impl NlswElement {
    pub fn new(word: Word) -> Result<Self, GsError> {
        let bracketing = lsw_bracket(&word)?;
        Ok(NlswElement { word, bracketing })
    }
}

/// Writes the expansion of a Lie element as a combination of standard
/// bracketed NLSWs, by triangular elimination on leading words.
pub fn nlsw_decompose<K: Field>(f: &NcPolynomial<K>) -> Result<Vec<(NlswElement, K)>, GsError> {
    let mut rest = f.clone();
    let mut out = Vec::new();
    while let Ok((u, c)) = rest.leading() {
        let (u, c) = (u.clone(), c.clone());
        if u.is_empty() {
            return Err(GsError::NotLie("nonzero constant term".into()));
        }
        if !is_alsw(&u)? {
            return Err(GsError::NotLie(format!("leading word {:?} is not Lyndon–Shirshov", u.letters())));
        }
        let nlsw = NlswElement::new(u)?;
        let e = nlsw.bracketing.expand::<K>().scale(&c);
        rest = &rest - &e;
        out.push((nlsw, c));
    }
    Ok(out)
}

/// Structure constants of a finite-dimensional Lie algebra in a basis
/// `x_0, …, x_{n-1}`. Only products `[x_i, x_j]` with `i > j` are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTable<K: Field = Rational> {
    dim: usize,
    products: BTreeMap<(usize, usize), Vec<K>>,
}

impl<K: Field> StructureTable<K> {
    /// The abelian table of dimension `dim`.
    pub fn new(dim: usize) -> Self {
        StructureTable { dim, products: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Sets `[x_i, x_j] = Σ_t coeffs[t] x_t`. `i < j` is accepted and stored
    /// through antisymmetry.
    pub fn set(&mut self, i: usize, j: usize, coeffs: Vec<K>) -> Result<(), GsError> {
        if i >= self.dim || j >= self.dim || coeffs.len() != self.dim {
            return Err(GsError::StructureTable(format!("index out of range for dimension {}", self.dim)));
        }
        if i == j {
            if coeffs.iter().all(Zero::is_zero) {
                return Ok(());
            }
            return Err(GsError::StructureTable("[x, x] must vanish".into()));
        }
        let (key, coeffs) = if i > j { ((i, j), coeffs) } else { ((j, i), coeffs.into_iter().map(|c| -c).collect()) };
        if coeffs.iter().all(Zero::is_zero) {
            self.products.remove(&key);
        } else {
            self.products.insert(key, coeffs);
        }
        Ok(())
    }

    /// `[x_i, x_j]` as a coefficient vector.
    pub fn bracket(&self, i: usize, j: usize) -> Vec<K> {
        let zero = || vec![K::zero(); self.dim];
        match i.cmp(&j) {
            Ordering::Equal => zero(),
            Ordering::Greater => self.products.get(&(i, j)).cloned().unwrap_or_else(zero),
            Ordering::Less => self.bracket(j, i).into_iter().map(|c| -c).collect(),
        }
    }

    /// `[v, x_k]` for a coefficient vector `v`.
    fn bracket_vec(&self, v: &[K], k: usize) -> Vec<K> {
        let mut out = vec![K::zero(); self.dim];
        for (t, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (s, b) in self.bracket(t, k).into_iter().enumerate() {
                out[s] = out[s].clone() + c.clone() * b;
            }
        }
        out
    }

    /// `[[x_i, x_j], x_k] + [[x_j, x_k], x_i] + [[x_k, x_i], x_j]`.
    pub fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vec<K> {
        let terms = [
            self.bracket_vec(&self.bracket(i, j), k),
            self.bracket_vec(&self.bracket(j, k), i),
            self.bracket_vec(&self.bracket(k, i), j),
        ];
        (0..self.dim).map(|s| terms.iter().fold(K::zero(), |acc, t| acc + t[s].clone())).collect()
    }

    /// Whether the Jacobi identity holds on every triple of basis elements.
    pub fn satisfies_jacobi(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| (0..j).all(|k| self.jacobiator(i, j, k).iter().all(Zero::is_zero))))
    }

    /// Converts coefficients into another field.
    pub fn map_coefficients<L: Field>(&self, f: impl Fn(&K) -> Option<L>) -> Result<StructureTable<L>, GsError> {
        let mut products = BTreeMap::new();
        for (&key, v) in &self.products {
            let image = v
                .iter()
                .map(|c| f(c).ok_or_else(|| GsError::Coefficient(c.to_string())))
                .collect::<Result<Vec<L>, _>>()?;
            products.insert(key, image);
        }
        Ok(StructureTable { dim: self.dim, products })
    }
}

/// One defining relation `[x_i, x_j] - Σ α x_t` of a Lie algebra given by
/// structure constants, with `i > j`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieRelation<K: Field = Rational> {
    pub pair: (usize, usize),
    pub element: LieElement<K>,
    pub expansion: NcPolynomial<K>,
}

/// The relations of the Lie algebra presented by `table` on the generators
/// of `alphabet` (precedence = basis order), so every leading word is
/// `x_i x_j` with `i > j`. Emitted for `i` ascending, then `j` ascending.
pub fn from_structure_constants<K: Field>(
    table: &StructureTable<K>,
    alphabet: &Alphabet,
) -> Result<Vec<LieRelation<K>>, GsError> {
    if alphabet.len() != table.dim() {
        return Err(GsError::StructureTable(format!(
            "{} generators for a table of dimension {}",
            alphabet.len(),
            table.dim()
        )));
    }
    let mut out = Vec::new();
    for i in 0..table.dim() {
        for j in 0..i {
            let mut element = LieElement::term(LieTerm::bracket(LieTerm::Gen(i as Letter), LieTerm::Gen(j as Letter)));
            for (t, c) in table.bracket(i, j).into_iter().enumerate() {
                element.add_term(LieTerm::Gen(t as Letter), -c);
            }
            let expansion = element.expand();
            out.push(LieRelation { pair: (i, j), element, expansion });
        }
    }
    Ok(out)
}

/// Lie Gröbner–Shirshov check of `relations`, each the expansion of a Lie
/// polynomial. Runs the associative check on the expansions.
pub fn lie_gs_check<K: Field>(alphabet: Arc<Alphabet>, relations: &[NcPolynomial<K>]) -> Result<GsCheck<K>, GsError> {
    for r in relations {
        nlsw_decompose(r)?;
    }
    let rules = RuleSet::new(alphabet, relations)?;
    is_gs_basis(&rules, None, None)
}

/// A PBW monomial `u_1 ⋯ u_t`: ALSW factors with `u_1 ⪯ ⋯ ⪯ u_t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PbwMonomial {
    pub factors: Vec<Word>,
}

impl PbwMonomial {
    pub fn degree(&self) -> usize {
        self.factors.iter().map(Word::len).sum()
    }

    /// Concatenation of the factors.
    pub fn word(&self) -> Word {
        Word::new(self.factors.iter().flat_map(|f| f.letters().iter().copied()).collect())
    }

    /// Factors joined by `·`; multi-letter factors are parenthesized when
    /// generator names are longer than one character.
    pub fn render(&self, alphabet: &Alphabet) -> String {
        if self.factors.is_empty() {
            return "1".into();
        }
        let plain = alphabet.symbols().iter().all(|s| s.chars().count() == 1);
        self.factors
            .iter()
            .map(|f| {
                let r = alphabet.render(f);
                if plain || f.len() == 1 {
                    r
                } else {
                    format!("({r})")
                }
            })
            .collect::<Vec<_>>()
            .join("·")
    }
}

/// PBW monomials of total degree at most `d` built from the ALSWs in
/// Irr(S), ordered by degree and then deg-lex on the concatenation.
///
/// Only complete bases are accepted: the monomials of a capped basis are
/// not a basis of anything.
pub fn pbw_basis<K: Field>(completion: &CompletionResult<K>, d: usize) -> Result<Vec<PbwMonomial>, GsError> {
    let rules = completion.complete_basis()?;
    let mut factors: Vec<Word> =
        rules.irr_words(d).into_iter().filter(|w| !w.is_empty() && alsw(w.letters())).collect();
    factors.sort_by(cmp_lex_prefix_greater);

    let mut out = Vec::new();
    let mut current = Vec::new();
    extend_pbw(&factors, 0, d, &mut current, &mut out);
    out.sort_by_key(|a| a.word());
    Ok(out)
}

fn extend_pbw(factors: &[Word], from: usize, budget: usize, current: &mut Vec<Word>, out: &mut Vec<PbwMonomial>) {
    out.push(PbwMonomial { factors: current.clone() });
    for (k, f) in factors.iter().enumerate().skip(from) {
        if f.len() <= budget {
            current.push(f.clone());
            extend_pbw(factors, k, budget - f.len(), current, out);
            current.pop();
        }
    }
}
