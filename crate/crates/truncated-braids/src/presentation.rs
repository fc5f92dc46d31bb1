//! Finitely presented groups: braid quotients and von Dyck triangle groups.

use thiserror::Error;

use crate::word::{parse_word, Letter, Word, WordParseError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PresentationError {
    #[error("a braid group needs at least 2 strands, got {0}")]
    TooFewStrands(usize),
    #[error("the half-twist order must be at least 2, got {0}")]
    TorsionTooSmall(usize),
    #[error("triangle group parameters must all be at least 2, got ({0}, {1}, {2})")]
    TriangleParamTooSmall(usize, usize, usize),
    #[error("a presentation needs at least one generator")]
    NoGenerators,
    #[error("relator references generator {gen} but the presentation has {count}")]
    GeneratorOutOfRange { gen: usize, count: usize },
    #[error("relator is trivial after reduction")]
    EmptyRelator,
    #[error("label count {0} does not match generator count {1}")]
    LabelCountMismatch(usize, usize),
}

/// A finite presentation: generator count, relators, display names.
///
/// Relators are stored freely and cyclically reduced; [`Presentation::new`]
/// reduces its inputs and rejects any that become empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generator_count: usize,
    relators: Vec<Word>,
    labels: Vec<String>,
}

impl Presentation {
    pub fn new(
        generator_count: usize,
        relators: Vec<Word>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, PresentationError> {
        if generator_count == 0 {
            return Err(PresentationError::NoGenerators);
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != generator_count {
                    return Err(PresentationError::LabelCountMismatch(
                        l.len(),
                        generator_count,
                    ));
                }
                l
            }
            None => (0..generator_count)
                .map(|g| format!("s{}", g + 1))
                .collect(),
        };
        let mut reduced = Vec::with_capacity(relators.len());
        for r in relators {
            let r = r.cyclically_reduce();
            if r.is_empty() {
                return Err(PresentationError::EmptyRelator);
            }
            if let Some(gen) = r.max_generator() {
                if gen >= generator_count {
                    return Err(PresentationError::GeneratorOutOfRange {
                        gen,
                        count: generator_count,
                    });
                }
            }
            reduced.push(r);
        }
        Ok(Presentation {
            generator_count,
            relators: reduced,
            labels,
        })
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Check that a word only references this presentation's generators.
    pub fn check_word(&self, word: &Word) -> Result<(), PresentationError> {
        match word.max_generator() {
            Some(gen) if gen >= self.generator_count => {
                Err(PresentationError::GeneratorOutOfRange {
                    gen,
                    count: self.generator_count,
                })
            }
            _ => Ok(()),
        }
    }

    /// Parse a word in this presentation's generator names.
    pub fn parse(&self, text: &str) -> Result<Word, WordParseError> {
        parse_word(text, &self.labels)
    }

    /// A stable 64-bit content hash over generator count and relators.
    ///
    /// Used to tag coset table dumps; FNV-1a over a canonical byte encoding.
    pub fn content_hash(&self) -> u64 {
        let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
        let mut eat = |byte: u8| {
            hash ^= u64::from(byte);
            hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
        };
        for byte in (self.generator_count as u64).to_le_bytes() {
            eat(byte);
        }
        for relator in &self.relators {
            for byte in (relator.len() as u64).to_le_bytes() {
                eat(byte);
            }
            for letter in relator.letters() {
                for byte in (letter.gen as u64).to_le_bytes() {
                    eat(byte);
                }
                eat(letter.inverse as u8);
            }
        }
        hash
    }
}

/// The braid group quotient on `strands` strands where every half-twist
/// generator has order `torsion`; `None` leaves the order infinite and
/// presents the plain braid group.
///
/// Relators come in a fixed order: braid relators for adjacent generators,
/// commutators for distant pairs, then the torsion powers.
pub fn braid_presentation(
    strands: usize,
    torsion: Option<usize>,
) -> Result<Presentation, PresentationError> {
    if strands < 2 {
        return Err(PresentationError::TooFewStrands(strands));
    }
    if let Some(d) = torsion {
        if d < 2 {
            return Err(PresentationError::TorsionTooSmall(d));
        }
    }
    let gens = strands - 1;
    let mut relators = Vec::new();
    // s_i s_{i+1} s_i s_{i+1}^-1 s_i^-1 s_{i+1}^-1
    for i in 0..gens.saturating_sub(1) {
        relators.push(Word::from_letters(vec![
            Letter::new(i),
            Letter::new(i + 1),
            Letter::new(i),
            Letter::inverse_of(i + 1),
            Letter::inverse_of(i),
            Letter::inverse_of(i + 1),
        ]));
    }
    // s_i s_j s_i^-1 s_j^-1 for |i - j| > 1
    for i in 0..gens {
        for j in (i + 2)..gens {
            relators.push(Word::from_letters(vec![
                Letter::new(i),
                Letter::new(j),
                Letter::inverse_of(i),
                Letter::inverse_of(j),
            ]));
        }
    }
    if let Some(d) = torsion {
        for i in 0..gens {
            relators.push(Word::generator(i).pow(d as i64));
        }
    }
    Presentation::new(gens, relators, None)
}

/// The von Dyck triangle group `<x, y | x^p, y^q, (xy)^r>`.
pub fn triangle_presentation(
    p: usize,
    q: usize,
    r: usize,
) -> Result<Presentation, PresentationError> {
    if p < 2 || q < 2 || r < 2 {
        return Err(PresentationError::TriangleParamTooSmall(p, q, r));
    }
    let x = Word::generator(0);
    let y = Word::generator(1);
    let relators = vec![x.pow(p as i64), y.pow(q as i64), x.concat(&y).pow(r as i64)];
    Presentation::new(2, relators, Some(vec!["x".into(), "y".into()]))
}

/// The full twist `(s1 s2 ... s_{n-1})^n`, already reduced.
///
/// For three strands this is `(s1 s2)^3`, the generator of the center.
pub fn full_twist_word(strands: usize) -> Result<Word, PresentationError> {
    if strands < 2 {
        return Err(PresentationError::TooFewStrands(strands));
    }
    let mut pass = Word::identity();
    for i in 0..strands - 1 {
        pass = pass.concat(&Word::generator(i));
    }
    Ok(pass.pow(strands as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::braid_permutation;

    #[test]
    fn b2_has_single_torsion_relator() {
        let p = braid_presentation(2, Some(5)).unwrap();
        assert_eq!(p.generator_count(), 1);
        assert_eq!(p.relators().len(), 1);
        assert_eq!(p.relators()[0], Word::generator(0).pow(5));
    }

    #[test]
    fn b3_4_matches_displayed_presentation() {
        let p = braid_presentation(3, Some(4)).unwrap();
        assert_eq!(p.generator_count(), 2);
        let braid = p.parse("s1 s2 s1 s2^-1 s1^-1 s2^-1").unwrap();
        let t1 = p.parse("s1^4").unwrap();
        let t2 = p.parse("s2^4").unwrap();
        assert_eq!(p.relators(), &[braid, t1, t2]);
    }

    #[test]
    fn b4_infinite_has_two_braid_and_one_commutator_relator() {
        let p = braid_presentation(4, None).unwrap();
        assert_eq!(p.generator_count(), 3);
        assert_eq!(p.relators().len(), 3);
        let commutator = p.parse("s1 s3 s1^-1 s3^-1").unwrap();
        assert_eq!(p.relators()[2], commutator);
    }

    #[test]
    fn rejects_degenerate_parameters() {
        assert_eq!(
            braid_presentation(1, Some(3)),
            Err(PresentationError::TooFewStrands(1))
        );
        assert_eq!(
            braid_presentation(3, Some(1)),
            Err(PresentationError::TorsionTooSmall(1))
        );
        assert_eq!(
            triangle_presentation(2, 1, 3),
            Err(PresentationError::TriangleParamTooSmall(2, 1, 3))
        );
        assert_eq!(full_twist_word(1), Err(PresentationError::TooFewStrands(1)));
    }

    #[test]
    fn triangle_presentation_is_the_von_dyck_template() {
        for (p, q, r) in [(2, 3, 3), (2, 3, 5), (2, 3, 2)] {
            let pres = triangle_presentation(p, q, r).unwrap();
            assert_eq!(pres.generator_count(), 2);
            let x = Word::generator(0);
            let y = Word::generator(1);
            assert_eq!(
                pres.relators(),
                &[x.pow(p as i64), y.pow(q as i64), x.concat(&y).pow(r as i64)]
            );
        }
    }

    #[test]
    fn full_twist_examples() {
        let p = braid_presentation(3, None).unwrap();
        assert_eq!(
            full_twist_word(3).unwrap(),
            p.parse("s1 s2 s1 s2 s1 s2").unwrap()
        );
        assert_eq!(full_twist_word(2).unwrap(), Word::generator(0).pow(2));
    }

    #[test]
    fn braid_relators_of_d2_quotient_map_to_identity_permutation() {
        for n in 2..=6 {
            let p = braid_presentation(n, Some(2)).unwrap();
            for relator in p.relators() {
                assert!(braid_permutation(relator, n).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn content_hash_distinguishes_presentations() {
        let a = braid_presentation(3, Some(3)).unwrap();
        let b = braid_presentation(3, Some(4)).unwrap();
        assert_ne!(a.content_hash(), b.content_hash());
        let a2 = braid_presentation(3, Some(3)).unwrap();
        assert_eq!(a.content_hash(), a2.content_hash());
    }

    #[test]
    fn relators_are_stored_cyclically_reduced() {
        // a b a^-1 reduces to b
        let raw = Word::from_letters(vec![Letter::new(0), Letter::new(1), Letter::inverse_of(0)]);
        let p = Presentation::new(2, vec![raw], None).unwrap();
        assert_eq!(p.relators()[0], Word::generator(1));
        assert!(matches!(
            Presentation::new(2, vec![Word::identity()], None),
            Err(PresentationError::EmptyRelator)
        ));
    }
}
