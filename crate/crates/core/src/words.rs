//! Alphabets, words and the two word orders used throughout the crate.
//!
//! Letters are indices into an [`Alphabet`]; a smaller index means a
//! smaller generator. [`Word`]'s `Ord` implementation is the deg-lex order,
//! so ordered maps keyed by words keep terms in monomial order.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use crate::error::GsError;

pub type Letter = u32;

/// Ordered generating set. Precedence is declaration order: the first
/// symbol is the smallest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self, GsError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(GsError::EmptyAlphabet);
        }
        let mut seen = HashSet::new();
        for s in &symbols {
            if s.is_empty() {
                return Err(GsError::InvalidSymbol(s.clone()));
            }
            if !seen.insert(s.as_str()) {
                return Err(GsError::DuplicateSymbol(s.clone()));
            }
        }
        Ok(Alphabet { symbols })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol(&self, letter: Letter) -> &str {
        &self.symbols[letter as usize]
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.symbols.iter().position(|s| s == name).map(|i| i as Letter)
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        0..self.symbols.len() as Letter
    }

    /// Checks that every letter of `w` is an index into this alphabet.
    pub fn validate(&self, w: &Word) -> Result<(), GsError> {
        match w.letters().iter().find(|&&l| l as usize >= self.len()) {
            Some(&l) => Err(GsError::AlphabetMismatch { letter: l, size: self.len() }),
            None => Ok(()),
        }
    }

    fn single_char_names(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }

    /// Renders `w`: plain concatenation when every generator name is one
    /// character, `·`-separated otherwise; the empty word prints as `1`.
    pub fn render(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let sep = if self.single_char_names() { "" } else { "·" };
        w.letters().iter().map(|&l| self.symbol(l)).collect::<Vec<_>>().join(sep)
    }

    /// Parses a word from generator names separated by whitespace, `·` or
    /// `*`. `1` (or an empty string) is the empty word. When every generator
    /// name is a single character, an unseparated token such as `pqp` is
    /// split into letters.
    pub fn parse_word(&self, text: &str) -> Result<Word, GsError> {
        let mut letters = Vec::new();
        for token in text.split(|c: char| c.is_whitespace() || c == '·' || c == '*').filter(|t| !t.is_empty()) {
            if token == "1" && self.letter("1").is_none() {
                continue;
            }
            if let Some(l) = self.letter(token) {
                letters.push(l);
            } else if self.single_char_names() {
                for ch in token.chars() {
                    let l = self
                        .letter(ch.encode_utf8(&mut [0; 4]))
                        .ok_or_else(|| GsError::UnknownGenerator(token.to_string()))?;
                    letters.push(l);
                }
            } else {
                return Err(GsError::UnknownGenerator(token.to_string()));
            }
        }
        Ok(Word::new(letters))
    }
}

/// A finite sequence of letters: a monomial of the free algebra.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `a·self·b`
    pub fn bounded(&self, a: &Word, b: &Word) -> Word {
        let mut v = Vec::with_capacity(a.len() + self.len() + b.len());
        v.extend_from_slice(&a.0);
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&b.0);
        Word(v)
    }

    pub fn concat(&self, other: &Word) -> Word {
        self.bounded(&Word::empty(), other)
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    /// Replaces `self[start..start + len]` by `middle`.
    pub fn splice(&self, start: usize, len: usize, middle: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() - len + middle.len());
        v.extend_from_slice(&self.0[..start]);
        v.extend_from_slice(&middle.0);
        v.extend_from_slice(&self.0[start + len..]);
        Word(v)
    }

    pub fn contains(&self, pattern: &Word) -> bool {
        pattern.is_empty() || self.0.windows(pattern.len()).any(|w| w == pattern.0.as_slice())
    }

    /// Cyclic rotation moving the first `k` letters to the end.
    pub fn rotate(&self, k: usize) -> Word {
        let mut v = self.0.clone();
        v.rotate_left(k);
        Word(v)
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{:?}", self.0)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_deglex(self, other)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree first, then left to right by generator precedence.
pub fn cmp_deglex(u: &Word, v: &Word) -> Ordering {
    u.len().cmp(&v.len()).then_with(|| u.0.cmp(&v.0))
}

/// Pure lexicographic order in which a proper prefix is *greater* than
/// its extensions. Used to order Lyndon–Shirshov factors.
pub fn cmp_lex_prefix_greater(u: &Word, v: &Word) -> Ordering {
    for (a, b) in u.0.iter().zip(&v.0) {
        match a.cmp(b) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    // One is a prefix of the other: the shorter one is greater.
    v.len().cmp(&u.len())
}

/// [`cmp_deglex`] after checking both words against `alphabet`.
pub fn cmp_deglex_in(alphabet: &Alphabet, u: &Word, v: &Word) -> Result<Ordering, GsError> {
    alphabet.validate(u)?;
    alphabet.validate(v)?;
    Ok(cmp_deglex(u, v))
}

/// [`cmp_lex_prefix_greater`] after checking both words against `alphabet`.
pub fn cmp_lex_prefix_greater_in(alphabet: &Alphabet, u: &Word, v: &Word) -> Result<Ordering, GsError> {
    alphabet.validate(u)?;
    alphabet.validate(v)?;
    Ok(cmp_lex_prefix_greater(u, v))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OverlapKind {
    /// `u·b = a·v` with `a`, `b` nonempty.
    Intersection,
    /// `u = a·v·b`.
    Inclusion,
}

/// A non-trivial common multiple `w` of two leading words `u` and `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Overlap {
    pub kind: OverlapKind,
    pub a: Word,
    pub b: Word,
    pub w: Word,
}

impl Overlap {
    /// Rebuilds `w` from `(a, b, u, v)` according to the kind's equation;
    /// returns whether both sides agree with the stored `w`.
    pub fn reconstructs(&self, u: &Word, v: &Word) -> bool {
        match self.kind {
            OverlapKind::Intersection => {
                !self.a.is_empty()
                    && !self.b.is_empty()
                    && u.concat(&self.b) == self.w
                    && self.a.concat(v) == self.w
                    && self.w.len() < u.len() + v.len()
            }
            OverlapKind::Inclusion => v.bounded(&self.a, &self.b) == self.w && *u == self.w,
        }
    }
}

/// All `(a, b)` with `u·b = a·v`, `0 < |a| < |u|`, `0 < |b| < |v|`,
/// ordered by `|b|` ascending.
pub fn find_intersections(u: &Word, v: &Word) -> Vec<Overlap> {
    let max_k = u.len().min(v.len()).saturating_sub(1);
    (1..=max_k)
        .rev()
        .filter(|&k| u.0[u.len() - k..] == v.0[..k])
        .map(|k| Overlap {
            kind: OverlapKind::Intersection,
            a: u.slice(0, u.len() - k),
            b: v.slice(k, v.len()),
            w: u.concat(&v.slice(k, v.len())),
        })
        .collect()
}

/// All `(a, b)` with `u = a·v·b`, ordered by `|a|` ascending.
pub fn find_inclusions(u: &Word, v: &Word) -> Vec<Overlap> {
    if v.len() > u.len() {
        return Vec::new();
    }
    (0..=u.len() - v.len())
        .filter(|&i| u.0[i..i + v.len()] == v.0[..])
        .map(|i| Overlap {
            kind: OverlapKind::Inclusion,
            a: u.slice(0, i),
            b: u.slice(i + v.len(), u.len()),
            w: u.clone(),
        })
        .collect()
}

/// Every word over `letters` generators of degree exactly `d`, deg-lex
/// ascending.
pub fn words_of_degree(letters: usize, d: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..d {
        out = out
            .iter()
            .flat_map(|w| {
                (0..letters as Letter).map(move |l| {
                    let mut w = w.clone();
                    w.push(l);
                    w
                })
            })
            .collect();
    }
    out
}

/// Every word of degree at most `d`, deg-lex ascending.
pub fn words_up_to(letters: usize, d: usize) -> Vec<Word> {
    (0..=d).flat_map(|k| words_of_degree(letters, k)).collect()
}
