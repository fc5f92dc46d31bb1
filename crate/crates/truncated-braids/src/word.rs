//! Free-group words over signed generators.
//!
//! A [`Word`] is an explicit sequence of [`Letter`]s, each a generator index
//! with an orientation. Words are plain data: reduction is a separate step,
//! and validity against a particular generator count is checked at use sites.

use std::fmt;

use thiserror::Error;

/// One signed letter: generator `gen` taken forward or inverted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize) -> Self {
        Letter {
            gen,
            inverse: false,
        }
    }

    pub fn inverse_of(gen: usize) -> Self {
        Letter { gen, inverse: true }
    }

    pub fn inverted(self) -> Self {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.inverse != other.inverse
    }
}

/// A word in the free group on some generator set.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    /// The empty word.
    pub fn identity() -> Self {
        Word::default()
    }

    /// The one-letter word for generator `gen`.
    pub fn generator(gen: usize) -> Self {
        Word {
            letters: vec![Letter::new(gen)],
        }
    }

    pub fn from_letters(letters: impl Into<Vec<Letter>>) -> Self {
        Word {
            letters: letters.into(),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index used, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.gen).max()
    }

    /// Concatenation `self · other` (no reduction).
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// The group inverse: letters reversed and each inverted.
    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverted()).collect(),
        }
    }

    /// `self` repeated `exponent` times (inverted first if negative).
    pub fn pow(&self, exponent: i64) -> Word {
        let base = if exponent < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut letters = Vec::with_capacity(self.letters.len() * exponent.unsigned_abs() as usize);
        for _ in 0..exponent.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Word { letters }
    }

    /// The unique freely reduced word equal to `self` in the free group.
    ///
    /// Idempotent, and never longer than the input.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last().is_some_and(|p| p.cancels(l)) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }

    /// Freely reduce, then strip cancelling first/last pairs.
    pub fn cyclically_reduce(&self) -> Word {
        let mut w = self.free_reduce();
        while w.letters.len() >= 2 {
            let first = w.letters[0];
            let last = *w.letters.last().unwrap();
            if first.cancels(last) {
                w.letters.pop();
                w.letters.remove(0);
            } else {
                break;
            }
        }
        w
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.letters.windows(2).all(|p| !p[0].cancels(p[1]))
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        if !self.is_freely_reduced() {
            return false;
        }
        match (self.letters.first(), self.letters.last()) {
            (Some(&f), Some(&l)) => self.letters.len() < 2 || !f.cancels(l),
            _ => true,
        }
    }

    /// Render with the given generator names (`name` / `name^-1` per letter).
    pub fn display_with(&self, labels: &[String]) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            let name: &str = labels.get(l.gen).map(String::as_str).unwrap_or("<?>");
            if l.inverse {
                parts.push(format!("{name}^-1"));
            } else {
                parts.push(name.to_string());
            }
        }
        parts.join(" ")
    }
}

impl fmt::Display for Word {
    /// Default rendering with braid-style names `s1 s2 ...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let max = self.max_generator().map_or(0, |g| g + 1);
        let labels: Vec<String> = (0..max).map(|g| format!("s{}", g + 1)).collect();
        f.write_str(&self.display_with(&labels))
    }
}

/// Errors from [`parse_word`].
#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordParseError {
    #[error("unknown generator name `{0}`")]
    UnknownGenerator(String),
    #[error("unexpected character `{0}` in word")]
    UnexpectedChar(char),
    #[error("expected an integer exponent after `^`")]
    MissingExponent,
    #[error("unbalanced parenthesis")]
    UnbalancedParen,
    #[error("exponent out of range")]
    ExponentOverflow,
}

/// Parse the word text syntax against a fixed list of generator names.
///
/// Generators are named by `labels` (e.g. `s1 s2 ...` or `x y`), inverses are
/// written `^-1`, repetition `^k`, and factors are juxtaposed with optional
/// whitespace. Parenthesised subwords may carry exponents, so `(s1 s2)^3`
/// parses to the same word as `s1 s2 s1 s2 s1 s2`.
pub fn parse_word(text: &str, labels: &[String]) -> Result<Word, WordParseError> {
    let mut chars = text.chars().peekable();
    let word = parse_sequence(&mut chars, labels, false)?;
    Ok(word.free_reduce())
}

fn parse_sequence(
    chars: &mut std::iter::Peekable<std::str::Chars<'_>>,
    labels: &[String],
    in_paren: bool,
) -> Result<Word, WordParseError> {
    let mut word = Word::identity();
    loop {
        match chars.peek().copied() {
            None => {
                if in_paren {
                    return Err(WordParseError::UnbalancedParen);
                }
                return Ok(word);
            }
            Some(c) if c.is_whitespace() => {
                chars.next();
            }
            Some(')') => {
                if !in_paren {
                    return Err(WordParseError::UnbalancedParen);
                }
                return Ok(word);
            }
            Some('(') => {
                chars.next();
                let inner = parse_sequence(chars, labels, true)?;
                if chars.next() != Some(')') {
                    return Err(WordParseError::UnbalancedParen);
                }
                let exp = parse_optional_exponent(chars)?;
                word = word.concat(&inner.pow(exp));
            }
            Some(c) if c.is_ascii_alphanumeric() || c == '_' => {
                let mut name = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        name.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let gen = labels
                    .iter()
                    .position(|l| *l == name)
                    .ok_or(WordParseError::UnknownGenerator(name))?;
                let exp = parse_optional_exponent(chars)?;
                word = word.concat(&Word::generator(gen).pow(exp));
            }
            Some(c) => return Err(WordParseError::UnexpectedChar(c)),
        }
    }
}

fn parse_optional_exponent(
    chars: &mut std::iter::Peekable<std::str::Chars<'_>>,
) -> Result<i64, WordParseError> {
    if chars.peek() != Some(&'^') {
        return Ok(1);
    }
    chars.next();
    let negative = if chars.peek() == Some(&'-') {
        chars.next();
        true
    } else {
        false
    };
    let mut digits = String::new();
    while let Some(&c) = chars.peek() {
        if c.is_ascii_digit() {
            digits.push(c);
            chars.next();
        } else {
            break;
        }
    }
    if digits.is_empty() {
        return Err(WordParseError::MissingExponent);
    }
    let value: i64 = digits
        .parse()
        .map_err(|_| WordParseError::ExponentOverflow)?;
    Ok(if negative { -value } else { value })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn w(pairs: &[(usize, bool)]) -> Word {
        Word::from_letters(
            pairs
                .iter()
                .map(|&(gen, inverse)| Letter { gen, inverse })
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn free_reduce_empty() {
        assert_eq!(Word::identity().free_reduce(), Word::identity());
    }

    #[test]
    fn free_reduce_cancellation() {
        assert_eq!(w(&[(0, false), (0, true)]).free_reduce(), Word::identity());
    }

    #[test]
    fn free_reduce_inner_cancellation() {
        let input = w(&[(0, false), (1, false), (1, true), (0, false)]);
        assert_eq!(input.free_reduce(), w(&[(0, false), (0, false)]));
    }

    #[test]
    fn free_reduce_idempotent_and_nonincreasing() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..500 {
            let len = rng.gen_range(0..40);
            let word = Word::from_letters(
                (0..len)
                    .map(|_| Letter {
                        gen: rng.gen_range(0..4),
                        inverse: rng.gen_bool(0.5),
                    })
                    .collect::<Vec<_>>(),
            );
            let once = word.free_reduce();
            assert!(once.len() <= word.len());
            assert!(once.is_freely_reduced());
            assert_eq!(once.free_reduce(), once);
        }
    }

    #[test]
    fn cyclic_reduction_strips_conjugating_pairs() {
        // a b a^-1, cyclically reduced to b
        let input = w(&[(0, false), (1, false), (0, true)]);
        assert_eq!(input.cyclically_reduce(), w(&[(1, false)]));
        assert!(input.free_reduce().is_freely_reduced());
        assert!(!input.is_cyclically_reduced());
    }

    #[test]
    fn inverse_concat_reduces_to_identity() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..200 {
            let len = rng.gen_range(0..30);
            let word = Word::from_letters(
                (0..len)
                    .map(|_| Letter {
                        gen: rng.gen_range(0..5),
                        inverse: rng.gen_bool(0.5),
                    })
                    .collect::<Vec<_>>(),
            );
            assert_eq!(word.concat(&word.inverse()).free_reduce(), Word::identity());
        }
    }

    #[test]
    fn parse_matches_expanded_spelling() {
        let labels: Vec<String> = vec!["s1".into(), "s2".into()];
        let a = parse_word("(s1 s2)^3", &labels).unwrap();
        let b = parse_word("s1 s2 s1 s2 s1 s2", &labels).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 6);
    }

    #[test]
    fn parse_inverse_and_negative_exponents() {
        let labels: Vec<String> = vec!["x".into(), "y".into()];
        let a = parse_word("x y^-1", &labels).unwrap();
        assert_eq!(a, w(&[(0, false), (1, true)]));
        let b = parse_word("(x y)^-2", &labels).unwrap();
        assert_eq!(b, w(&[(1, true), (0, true), (1, true), (0, true)]));
        // exponents reduce against neighbours
        let c = parse_word("x^2 x^-2", &labels).unwrap();
        assert!(c.is_empty());
    }

    #[test]
    fn parse_rejects_unknown_names_and_syntax() {
        let labels: Vec<String> = vec!["s1".into()];
        assert_eq!(
            parse_word("s9", &labels),
            Err(WordParseError::UnknownGenerator("s9".into()))
        );
        assert_eq!(
            parse_word("(s1", &labels),
            Err(WordParseError::UnbalancedParen)
        );
        assert_eq!(
            parse_word("s1^", &labels),
            Err(WordParseError::MissingExponent)
        );
        assert_eq!(
            parse_word("s1 + s1", &labels),
            Err(WordParseError::UnexpectedChar('+'))
        );
    }

    #[test]
    fn display_round_trips_through_parser() {
        let labels: Vec<String> = vec!["s1".into(), "s2".into(), "s3".into()];
        let word = w(&[(0, false), (2, true), (1, false)]);
        let text = word.display_with(&labels);
        assert_eq!(text, "s1 s3^-1 s2");
        assert_eq!(parse_word(&text, &labels).unwrap(), word);
    }
}
