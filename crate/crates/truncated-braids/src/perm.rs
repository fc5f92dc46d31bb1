//! Finite permutations and the strand permutation of a braid word.

use std::fmt;

use thiserror::Error;

use crate::word::Word;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("images {0:?} are not a bijection")]
    NotBijective(Vec<usize>),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("generator {gen} out of range: braid on {strands} strands has generators up to {max}")]
    GeneratorOutOfRange {
        gen: usize,
        strands: usize,
        max: usize,
    },
}

/// A permutation of `{0, .., degree-1}` stored as an image table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(PermError::NotBijective(images));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    pub fn transposition(degree: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (0..degree).collect();
        images.swap(i, j);
        Perm { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Left-to-right composition: apply `self` first, then `other`.
    pub fn then(&self, other: &Perm) -> Result<Perm, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Perm {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by it.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut cycles = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.images[start];
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        cycles
    }

    /// Multiplicative order: lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        let mut order: u64 = 1;
        let mut seen = vec![false; self.images.len()];
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len: u64 = 1;
            seen[start] = true;
            let mut p = self.images[start];
            while p != start {
                seen[p] = true;
                len += 1;
                p = self.images[p];
            }
            order = lcm(order, len);
        }
        order
    }

    pub fn is_transposition(&self) -> bool {
        let cycles = self.cycles();
        cycles.len() == 1 && cycles[0].len() == 2
    }
}

impl fmt::Display for Perm {
    /// Cycle notation on 1-based points; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            let inner: Vec<String> = cycle.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", inner.join(" "))?;
        }
        Ok(())
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// The strand permutation induced by a braid word on `strands` strands.
///
/// Generator `i` (0-based) maps to the transposition of strands `i` and
/// `i + 1`; letters act left to right and the sign of a letter is irrelevant.
pub fn braid_permutation(word: &Word, strands: usize) -> Result<Perm, PermError> {
    let mut images: Vec<usize> = (0..strands).collect();
    for letter in word.letters() {
        if letter.gen + 1 >= strands {
            return Err(PermError::GeneratorOutOfRange {
                gen: letter.gen,
                strands,
                max: strands.saturating_sub(2),
            });
        }
        // right-compose with the transposition (gen, gen+1): later letters act
        // on the output of earlier ones
        for img in images.iter_mut() {
            if *img == letter.gen {
                *img = letter.gen + 1;
            } else if *img == letter.gen + 1 {
                *img = letter.gen;
            }
        }
    }
    Ok(Perm { images })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Letter;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_word(rng: &mut StdRng, gens: usize, max_len: usize) -> Word {
        let len = rng.gen_range(0..=max_len);
        Word::from_letters(
            (0..len)
                .map(|_| Letter {
                    gen: rng.gen_range(0..gens),
                    inverse: rng.gen_bool(0.5),
                })
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn braid_word_from_figure_is_a_four_cycle() {
        // s1 s3 s2^-1 in B4 sends 1 -> 3 -> 4 -> 2 -> 1 (1-based strands)
        let word = Word::from_letters(vec![Letter::new(0), Letter::new(2), Letter::inverse_of(1)]);
        let perm = braid_permutation(&word, 4).unwrap();
        assert_eq!(perm.apply(0), 2);
        assert_eq!(perm.apply(2), 3);
        assert_eq!(perm.apply(3), 1);
        assert_eq!(perm.apply(1), 0);
        assert_eq!(perm.to_string(), "(1 3 4 2)");
    }

    #[test]
    fn empty_word_is_identity() {
        assert!(braid_permutation(&Word::identity(), 5)
            .unwrap()
            .is_identity());
    }

    #[test]
    fn full_twist_in_b3_is_pure() {
        let s1s2 = Word::generator(0).concat(&Word::generator(1));
        let twist = s1s2.pow(3);
        assert!(braid_permutation(&twist, 3).unwrap().is_identity());
    }

    #[test]
    fn out_of_range_generator_rejected() {
        let word = Word::generator(3);
        assert!(matches!(
            braid_permutation(&word, 4),
            Err(PermError::GeneratorOutOfRange { gen: 3, .. })
        ));
    }

    #[test]
    fn braid_permutation_is_a_homomorphism() {
        let mut rng = StdRng::seed_from_u64(23);
        for _ in 0..300 {
            let u = random_word(&mut rng, 4, 12);
            let v = random_word(&mut rng, 4, 12);
            let uv = braid_permutation(&u.concat(&v), 5).unwrap();
            let composed = braid_permutation(&u, 5)
                .unwrap()
                .then(&braid_permutation(&v, 5).unwrap())
                .unwrap();
            assert_eq!(uv, composed);
        }
    }

    #[test]
    fn word_times_inverse_maps_to_identity() {
        let mut rng = StdRng::seed_from_u64(29);
        for _ in 0..300 {
            let u = random_word(&mut rng, 5, 16);
            let perm = braid_permutation(&u.concat(&u.inverse()), 6).unwrap();
            assert!(perm.is_identity());
        }
    }

    #[test]
    fn order_and_cycles() {
        let p = Perm::from_images(vec![1, 2, 0, 4, 3]).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(p.cycles(), vec![vec![0, 1, 2], vec![3, 4]]);
        assert!(!p.is_transposition());
        assert!(Perm::transposition(5, 1, 4).is_transposition());
        assert_eq!(p.then(&p.inverse()).unwrap(), Perm::identity(5));
    }
}
