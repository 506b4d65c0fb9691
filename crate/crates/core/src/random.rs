//! Seeded random instances for tests and benchmarks.
//!
//! All generators draw from a ChaCha8 stream, so a seed fixes every instance.
//! Nilpotent ε-matrices are drawn strictly upper-triangular.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automaton::{EpsilonAutomaton, LinearRepresentation};
use crate::matrix::Matrix;
use crate::semiring::{Bool, Nat, NatInf, Rational, Semiring, Tropical};
use crate::series::{Alphabet, Letter, Polynomial, Word};

/// Semirings with a sampler for small nonzero values.
pub trait RandomValue: Semiring {
    fn random_nonzero(rng: &mut ChaCha8Rng) -> Self;
}

impl RandomValue for Bool {
    fn random_nonzero(_: &mut ChaCha8Rng) -> Self {
        Bool(true)
    }
}

impl RandomValue for Nat {
    fn random_nonzero(rng: &mut ChaCha8Rng) -> Self {
        Nat::new(rng.gen_range(1..=3))
    }
}

impl RandomValue for Rational {
    fn random_nonzero(rng: &mut ChaCha8Rng) -> Self {
        let mut p = rng.gen_range(1..=4);
        if rng.gen_bool(0.5) {
            p = -p;
        }
        Rational::new(p, rng.gen_range(1..=3))
    }
}

impl RandomValue for Tropical {
    // Zero is +∞, so every finite value is nonzero.
    fn random_nonzero(rng: &mut ChaCha8Rng) -> Self {
        let numer = BigInt::from(rng.gen_range(0..=12u32));
        Tropical::finite(BigRational::new(numer, BigInt::from(rng.gen_range(1..=2u32))))
    }
}

impl RandomValue for NatInf {
    fn random_nonzero(rng: &mut ChaCha8Rng) -> Self {
        if rng.gen_bool(0.1) {
            NatInf::Infinity
        } else {
            NatInf::new(rng.gen_range(1..=3))
        }
    }
}

pub struct InstanceGen {
    rng: ChaCha8Rng,
    /// Probability that a sampled entry is nonzero.
    pub density: f64,
}

impl InstanceGen {
    pub fn seeded(seed: u64) -> Self {
        InstanceGen {
            rng: ChaCha8Rng::seed_from_u64(seed),
            density: 0.5,
        }
    }

    pub fn with_density(mut self, density: f64) -> Self {
        self.density = density;
        self
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn value<S: RandomValue>(&mut self) -> S {
        if self.rng.gen_bool(self.density) {
            S::random_nonzero(&mut self.rng)
        } else {
            S::zero()
        }
    }

    pub fn values<S: RandomValue>(&mut self, len: usize) -> Vec<S> {
        (0..len).map(|_| self.value()).collect()
    }

    pub fn matrix<S: RandomValue>(&mut self, rows: usize, cols: usize) -> Matrix<S> {
        let data = self.values(rows * cols);
        Matrix::new(rows, cols, data).expect("sized to fit")
    }

    pub fn strictly_upper<S: RandomValue>(&mut self, n: usize) -> Matrix<S> {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i + 1..n {
                m[(i, j)] = self.value();
            }
        }
        m
    }

    /// A strictly upper-triangular matrix conjugated by a random permutation:
    /// nilpotent, but with no triangular shape for the block star to exploit.
    pub fn permuted_nilpotent<S: RandomValue>(&mut self, n: usize) -> Matrix<S> {
        let upper = self.strictly_upper::<S>(n);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut self.rng);
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(perm[i], perm[j])] = upper[(i, j)].clone();
            }
        }
        m
    }

    /// The first `1..=max_letters` letters of `a, b, c, …`.
    pub fn alphabet(&mut self, max_letters: usize) -> Alphabet {
        let k = self.rng.gen_range(1..=max_letters.max(1));
        Alphabet::new(('a'..='z').take(k)).expect("plain letters")
    }

    pub fn linear_representation<S: RandomValue>(&mut self, alphabet: &Alphabet, n: usize) -> LinearRepresentation<S> {
        let lambda = self.values(n);
        let mu: BTreeMap<char, Matrix<S>> = alphabet.symbols().map(|c| (c, self.matrix(n, n))).collect();
        let gamma = self.values(n);
        LinearRepresentation::new(alphabet.clone(), lambda, mu, gamma).expect("consistent dimensions")
    }

    /// An ε-automaton whose ε-matrix is strictly upper-triangular when
    /// `nilpotent` is set and unconstrained otherwise.
    pub fn epsilon_automaton<S: RandomValue>(
        &mut self,
        alphabet: &Alphabet,
        n: usize,
        nilpotent: bool,
    ) -> EpsilonAutomaton<S> {
        let base = self.linear_representation(alphabet, n);
        let eps = if nilpotent {
            self.strictly_upper(n)
        } else {
            self.matrix(n, n)
        };
        EpsilonAutomaton::new(base, eps).expect("consistent dimensions")
    }

    /// A word over `Σ ∪ {ε̃}` of length at most `max_len`; `ε̃` is drawn with
    /// the same weight as each letter.
    pub fn word(&mut self, alphabet: &Alphabet, max_len: usize, with_eps: bool) -> Word {
        let mut letters: Vec<Letter> = alphabet.symbols().map(Letter::Sym).collect();
        if with_eps {
            letters.push(Letter::Eps);
        }
        let len = self.rng.gen_range(0..=max_len);
        Word::from_letters((0..len).map(|_| *letters.choose(&mut self.rng).expect("nonempty alphabet")))
    }

    /// Up to `max_terms` terms over `Σ ∪ {ε̃}`, nonzero coefficients only.
    pub fn polynomial<S: RandomValue>(
        &mut self,
        alphabet: &Alphabet,
        max_terms: usize,
        max_len: usize,
    ) -> Polynomial<S> {
        let count = self.rng.gen_range(0..=max_terms);
        let terms: Vec<(Word, S)> = (0..count)
            .map(|_| {
                let w = self.word(alphabet, max_len, true);
                (w, S::random_nonzero(&mut self.rng))
            })
            .collect();
        Polynomial::from_terms(alphabet.clone(), terms).expect("words drawn from the alphabet")
    }
}
