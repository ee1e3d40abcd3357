//! Noncommutative polynomials with exact coefficients, Lie bracket terms,
//! and the text syntax for both.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::GsError;
use crate::scalar::{parse_rational, Field, Rational};
use crate::words::{Alphabet, Letter, Word};

/// An element of the free associative algebra: a finite map from words to
/// nonzero coefficients, kept in deg-lex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NcPolynomial<K: Field = Rational> {
    terms: BTreeMap<Word, K>,
}

impl<K: Field> Default for NcPolynomial<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Field> NcPolynomial<K> {
    pub fn zero() -> Self {
        NcPolynomial { terms: BTreeMap::new() }
    }

    pub fn constant(c: K) -> Self {
        Self::monomial(Word::empty(), c)
    }

    pub fn one() -> Self {
        Self::constant(K::one())
    }

    pub fn monomial(w: Word, c: K) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn word(w: Word) -> Self {
        Self::monomial(w, K::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, K)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    /// `u - v`, the polynomial form of a monoid relation.
    pub fn binomial(u: Word, v: Word) -> Self {
        Self::from_terms([(u, K::one()), (v, -K::one())])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in deg-lex ascending order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &K)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> Option<&K> {
        self.terms.get(w)
    }

    pub fn degree(&self) -> Option<usize> {
        self.leading_word().map(Word::degree)
    }

    pub fn add_term(&mut self, w: Word, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Word, K)> {
        self.terms.pop_last()
    }

    /// The deg-lex greatest word of the support together with its
    /// coefficient.
    pub fn leading(&self) -> Result<(&Word, &K), GsError> {
        self.terms.iter().next_back().ok_or(GsError::ZeroPolynomial)
    }

    pub fn leading_word(&self) -> Option<&Word> {
        self.terms.keys().next_back()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map(|(_, c)| c.is_one()).unwrap_or(false)
    }

    /// Scales so that the leading coefficient is 1.
    pub fn monic(&self) -> Result<Self, GsError> {
        let (_, c) = self.leading()?;
        let inv = c.inverse().ok_or(GsError::ZeroPolynomial)?;
        Ok(self.scale(&inv))
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        NcPolynomial { terms: self.terms.iter().map(|(w, k)| (w.clone(), k.clone() * c.clone())).collect() }
    }

    /// `a·self·b`. Deg-lex is admissible, so the term order is preserved
    /// and the leading word of the result is `a·lead·b`.
    pub fn mul_bounded(&self, a: &Word, b: &Word) -> Self {
        NcPolynomial { terms: self.terms.iter().map(|(w, c)| (w.bounded(a, b), c.clone())).collect() }
    }

    /// `c·a·self·b` added into `self`-independent accumulator `acc`.
    pub(crate) fn add_bounded_into(&self, acc: &mut Self, c: &K, a: &Word, b: &Word) {
        for (w, k) in &self.terms {
            acc.add_term(w.bounded(a, b), k.clone() * c.clone());
        }
    }

    /// Converts coefficients into another field.
    pub fn map_coefficients<L: Field>(&self, f: impl Fn(&K) -> Option<L>) -> Result<NcPolynomial<L>, GsError> {
        let mut out = NcPolynomial::zero();
        for (w, c) in &self.terms {
            let image = f(c).ok_or_else(|| GsError::Coefficient(c.to_string()))?;
            out.add_term(w.clone(), image);
        }
        Ok(out)
    }

    /// Renders in the text syntax accepted by [`parse_polynomial`]:
    /// descending terms, `*` between factors, `1` for the empty word.
    pub fn render(&self, alphabet: &Alphabet) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let word = w.letters().iter().map(|&l| alphabet.symbol(l)).collect::<Vec<_>>().join("*");
            if w.is_empty() {
                let _ = write!(out, "{magnitude}");
            } else if magnitude.is_one() {
                out.push_str(&word);
            } else {
                let _ = write!(out, "{magnitude}*{word}");
            }
        }
        out
    }
}

impl<K: Field> Add for &NcPolynomial<K> {
    type Output = NcPolynomial<K>;
    fn add(self, rhs: Self) -> NcPolynomial<K> {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl<K: Field> Sub for &NcPolynomial<K> {
    type Output = NcPolynomial<K>;
    fn sub(self, rhs: Self) -> NcPolynomial<K> {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl<K: Field> Neg for &NcPolynomial<K> {
    type Output = NcPolynomial<K>;
    fn neg(self) -> NcPolynomial<K> {
        self.scale(&-K::one())
    }
}

impl<K: Field> Mul for &NcPolynomial<K> {
    type Output = NcPolynomial<K>;
    fn mul(self, rhs: Self) -> NcPolynomial<K> {
        let mut out = NcPolynomial::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(u.concat(v), a.clone() * b.clone());
            }
        }
        out
    }
}

/// A bracketing tree over generators: an element of the free magma that
/// maps onto the free Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LieTerm {
    Gen(Letter),
    Bracket(Box<LieTerm>, Box<LieTerm>),
}

impl LieTerm {
    pub fn bracket(left: LieTerm, right: LieTerm) -> LieTerm {
        LieTerm::Bracket(Box::new(left), Box::new(right))
    }

    pub fn degree(&self) -> usize {
        match self {
            LieTerm::Gen(_) => 1,
            LieTerm::Bracket(l, r) => l.degree() + r.degree(),
        }
    }

    /// Leaves read left to right.
    pub fn word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.degree());
        self.collect_leaves(&mut letters);
        Word::new(letters)
    }

    fn collect_leaves(&self, out: &mut Vec<Letter>) {
        match self {
            LieTerm::Gen(l) => out.push(*l),
            LieTerm::Bracket(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    /// Works out all brackets via `[u, v] = uv - vu`.
    pub fn expand<K: Field>(&self) -> NcPolynomial<K> {
        match self {
            LieTerm::Gen(l) => NcPolynomial::word(Word::letter(*l)),
            LieTerm::Bracket(l, r) => {
                let (l, r) = (l.expand::<K>(), r.expand::<K>());
                &(&l * &r) - &(&r * &l)
            }
        }
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        match self {
            LieTerm::Gen(l) => alphabet.symbol(*l).to_string(),
            LieTerm::Bracket(l, r) => format!("[{},{}]", l.render(alphabet), r.render(alphabet)),
        }
    }
}

/// A linear combination of bracket terms. The empty-word constant is
/// allowed so that relations such as `[x, y] - 1` can be written, although
/// such relations leave the Lie world.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LieElement<K: Field = Rational> {
    terms: BTreeMap<LieTerm, K>,
}

impl<K: Field> LieElement<K> {
    pub fn zero() -> Self {
        LieElement { terms: BTreeMap::new() }
    }

    pub fn term(t: LieTerm) -> Self {
        let mut e = Self::zero();
        e.add_term(t, K::one());
        e
    }

    pub fn add_term(&mut self, t: LieTerm, c: K) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&t) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(t, sum);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LieTerm, &K)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn expand(&self) -> NcPolynomial<K> {
        let mut out = NcPolynomial::zero();
        for (t, c) in &self.terms {
            let e = t.expand::<K>().scale(c);
            out = &out + &e;
        }
        out
    }
}

/// Parses a polynomial such as `h*e - e*h - 2*e` or `1/2*x y + 3`.
///
/// Factors are integers, `n/m` rationals and generator names; they are
/// joined by `*` or whitespace. When every generator name is a single
/// character, an unknown identifier like `he` is read letter by letter.
/// Parse errors carry line 1 and the 1-based column of the offending token.
pub fn parse_polynomial(alphabet: &Alphabet, text: &str) -> Result<NcPolynomial<Rational>, GsError> {
    PolyParser::new(alphabet, text).parse()
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(String),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
}

struct PolyParser<'a> {
    alphabet: &'a Alphabet,
    tokens: Vec<(usize, Token)>,
    pos: usize,
    error: Option<GsError>,
    text_len: usize,
}

fn parse_error(column: usize, message: impl Into<String>) -> GsError {
    GsError::Parse { line: 1, column, message: message.into() }
}

fn is_name_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_name_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

impl<'a> PolyParser<'a> {
    fn new(alphabet: &'a Alphabet, text: &str) -> Self {
        let mut tokens = Vec::new();
        let mut error = None;
        let chars: Vec<char> = text.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            if c.is_whitespace() || c == '·' {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                tokens.push((col, Token::Number(chars[start..i].iter().collect())));
            } else if is_name_start(c) {
                let start = i;
                while i < chars.len() && is_name_char(chars[i]) {
                    i += 1;
                }
                // inverse generators are spelled `x^-1`
                if chars[i..].starts_with(&['^', '-', '1']) {
                    i += 3;
                }
                tokens.push((col, Token::Name(chars[start..i].iter().collect())));
            } else {
                let tok = match c {
                    '+' => Token::Plus,
                    '-' => Token::Minus,
                    '*' => Token::Star,
                    '/' => Token::Slash,
                    _ => {
                        error.get_or_insert(parse_error(col, format!("unexpected character {c:?}")));
                        i += 1;
                        continue;
                    }
                };
                tokens.push((col, tok));
                i += 1;
            }
        }
        PolyParser { alphabet, tokens, pos: 0, error, text_len: chars.len() }
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn column(&self) -> usize {
        self.tokens.get(self.pos).map(|(c, _)| *c).unwrap_or(self.text_len + 1)
    }

    fn parse(mut self) -> Result<NcPolynomial<Rational>, GsError> {
        if let Some(e) = self.error.take() {
            return Err(e);
        }
        if self.tokens.is_empty() {
            return Err(parse_error(1, "expected a polynomial"));
        }
        let mut out = NcPolynomial::zero();
        let mut first = true;
        while self.pos < self.tokens.len() {
            let negative = match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    false
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => return Err(parse_error(self.column(), "expected '+' or '-'")),
            };
            first = false;
            let (w, c) = self.term()?;
            out.add_term(w, if negative { -c } else { c });
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(Word, Rational), GsError> {
        let mut coeff = Rational::from_i64(1);
        let mut letters = Vec::new();
        let mut factors = 0;
        loop {
            match self.peek().cloned() {
                Some(Token::Number(n)) => {
                    let col = self.column();
                    self.pos += 1;
                    let mut text = n;
                    if self.peek() == Some(&Token::Slash) {
                        self.pos += 1;
                        match self.peek().cloned() {
                            Some(Token::Number(d)) => {
                                self.pos += 1;
                                text = format!("{text}/{d}");
                            }
                            _ => return Err(parse_error(self.column(), "expected a denominator")),
                        }
                    }
                    let q = parse_rational(&text).ok_or_else(|| parse_error(col, "zero denominator"))?;
                    coeff *= q;
                }
                Some(Token::Name(name)) => {
                    let col = self.column();
                    self.pos += 1;
                    self.push_name(&name, col, &mut letters)?;
                }
                _ => {
                    return Err(parse_error(self.column(), "expected a coefficient or generator"));
                }
            }
            factors += 1;
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                }
                Some(Token::Number(_)) | Some(Token::Name(_)) => {}
                _ => break,
            }
        }
        debug_assert!(factors > 0);
        Ok((Word::new(letters), coeff))
    }

    fn push_name(&self, name: &str, col: usize, letters: &mut Vec<Letter>) -> Result<(), GsError> {
        if let Some(l) = self.alphabet.letter(name) {
            letters.push(l);
            return Ok(());
        }
        let word =
            self.alphabet.parse_word(name).map_err(|_| parse_error(col, format!("unknown generator {name:?}")))?;
        letters.extend_from_slice(word.letters());
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn efh() -> Alphabet {
        Alphabet::new(["f", "e", "h"]).unwrap()
    }

    fn poly(al: &Alphabet, s: &str) -> NcPolynomial {
        parse_polynomial(al, s).unwrap()
    }

    #[test]
    fn leading_term() {
        let al = Alphabet::new(["e", "f", "h"]).unwrap();
        let p = poly(&al, "h*e - e*h - 2*e");
        let (w, c) = p.leading().unwrap();
        assert_eq!(al.render(w), "he");
        assert_eq!(*c, q(1));

        let xs = Alphabet::new(["x"]).unwrap();
        let p = poly(&xs, "3*x - 2");
        assert_eq!(p.leading().unwrap(), (&Word::letter(0), &q(3)));

        assert_eq!(NcPolynomial::<Rational>::zero().leading(), Err(GsError::ZeroPolynomial));
    }

    #[test]
    fn monic_examples() {
        let al = Alphabet::new(["x", "y"]).unwrap();
        let p = poly(&al, "2*x*y - 4*y*x");
        assert_eq!(p.monic().unwrap(), poly(&al, "y*x - 1/2*x*y"));
        let m = poly(&al, "y*x - x");
        assert_eq!(m.monic().unwrap(), m);
        assert_eq!(poly(&al, "x").monic().unwrap(), poly(&al, "x"));
        assert!(NcPolynomial::<Rational>::zero().monic().is_err());
    }

    #[test]
    fn bounded_products() {
        let al = efh();
        let f = poly(&al, "e*f - f*e - h");
        assert_eq!(f.mul_bounded(&Word::empty(), &Word::empty()), f);
        let h = al.parse_word("h").unwrap();
        assert_eq!(f.mul_bounded(&h, &Word::empty()), poly(&al, "h*e*f - h*f*e - h*h"));
        assert!(NcPolynomial::<Rational>::zero().mul_bounded(&h, &h).is_zero());
    }

    #[test]
    fn bracket_expansion_examples() {
        let al = Alphabet::new(["a", "b"]).unwrap();
        let (a, b) = (LieTerm::Gen(0), LieTerm::Gen(1));
        assert_eq!(LieTerm::bracket(a.clone(), b.clone()).expand::<Rational>(), poly(&al, "a b - b a"));
        let t = LieTerm::bracket(LieTerm::bracket(b.clone(), a.clone()), a.clone());
        // [[b,a],a] = (ba - ab)a - a(ba - ab)
        assert_eq!(t.expand::<Rational>(), poly(&al, "b a a - 2 a b a + a a b"));
        assert!(LieTerm::bracket(a.clone(), a).expand::<Rational>().is_zero());
        assert_eq!(t.render(&al), "[[b,a],a]");
    }

    #[test]
    fn render_round_trips_through_parser() {
        let al = Alphabet::new(["x", "y", "x^-1"]).unwrap();
        for text in ["y*x - 1/2*x*y", "-x + 3", "x*x^-1 - 1", "2*y*y*x - x^-1"] {
            let p = poly(&al, text);
            assert_eq!(p.render(&al), text);
            assert_eq!(poly(&al, &p.render(&al)), p);
        }
        assert_eq!(NcPolynomial::<Rational>::zero().render(&al), "0");
    }

    #[test]
    fn parser_accepts_juxtaposition_and_split_names() {
        let al = efh();
        assert_eq!(poly(&al, "he - eh - 2e"), poly(&al, "h*e - e*h - 2*e"));
        assert_eq!(poly(&al, "2 h e"), poly(&al, "2*h*e"));
        assert_eq!(poly(&al, "h*e - h*e"), NcPolynomial::zero());
    }

    #[test]
    fn parser_reports_columns() {
        let al = efh();
        match parse_polynomial(&al, "h*e - ") {
            Err(GsError::Parse { column, .. }) => assert_eq!(column, 7),
            other => panic!("unexpected {other:?}"),
        }
        match parse_polynomial(&al, "h*q") {
            Err(GsError::Parse { column, .. }) => assert_eq!(column, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_polynomial(&al, "h % e").is_err());
        assert!(parse_polynomial(&al, "1/0*h").is_err());
    }
}
