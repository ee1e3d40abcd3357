//! Inputs shared by the benchmarks.

use gs_core::{catalog, CompletionConfig, CompletionResult, NcPolynomial, RuleSet, Word};

/// A completed catalog basis.
pub fn completed(name: &str, max_degree: usize) -> CompletionResult {
    catalog(name)
        .expect("catalog entry")
        .complete(&CompletionConfig::default().with_max_degree(max_degree))
        .expect("completion runs")
}

/// Sum of every word of length `len` over the basis alphabet.
pub fn all_words(basis: &RuleSet, len: usize) -> NcPolynomial {
    NcPolynomial::from_terms(
        gs_core::words::words_of_degree(basis.alphabet().len(), len)
            .into_iter()
            .map(|w| (w, <gs_core::Rational as gs_core::Field>::from_i64(1))),
    )
}

/// `b^n a^n`: the worst case for sorting a word with `ba -> ab`.
pub fn unsorted(n: usize) -> Word {
    Word::new(std::iter::repeat_n(1, n).chain(std::iter::repeat_n(0, n)).collect())
}
