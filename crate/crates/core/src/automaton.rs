//! Weighted automata as linear representations, and ε-removal.
//!
//! A linear representation `(λ, μ, γ)` of dimension `n` assigns the word
//! `a₁…a_k` the weight `λ·μ(a₁)⋯μ(a_k)·γ`. An ε-automaton adds a transition
//! matrix `μ(ε̃)` for the silent letter. When `μ(ε̃)` has a star `μ(ε̃)*`, the
//! ε-free automaton `(λ, μ(ε̃)*·μ(a), μ(ε̃)*·γ)` (or the mirrored
//! `(λ·μ(ε̃)*, μ(a)·μ(ε̃)*, γ)`) computes `Φ` of the ε-automaton's behaviour.
//!
//! This is the algebraic route: one matrix star plus `|Σ|` products. The
//! shortest-distance style of ε-removal (Floyd–Warshall closure per state) is
//! not used here.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result, StarError};
use crate::matrix::{
    is_nilpotent, is_star, mat_mul, power_sum, star_block, star_iterative, star_nilpotent, Matrix, OpCounter, Side,
};
use crate::semiring::{Semiring, SemiringKind};
use crate::series::{Alphabet, Letter, Polynomial, Word};

/// An ε-free weighted automaton `(λ, μ, γ)`.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearRepresentation<S> {
    alphabet: Alphabet,
    lambda: Vec<S>,
    mu: BTreeMap<char, Matrix<S>>,
    gamma: Vec<S>,
}

impl<S: Semiring> LinearRepresentation<S> {
    /// `mu` must hold exactly one `n×n` matrix per letter of `alphabet`.
    pub fn new(alphabet: Alphabet, lambda: Vec<S>, mu: BTreeMap<char, Matrix<S>>, gamma: Vec<S>) -> Result<Self> {
        let n = lambda.len();
        if gamma.len() != n {
            return Err(Error::InvalidAutomaton(format!(
                "lambda has {n} entries but gamma has {}",
                gamma.len()
            )));
        }
        if mu.keys().copied().ne(alphabet.symbols()) {
            return Err(Error::InvalidAutomaton(
                "transition matrices must be given for exactly the alphabet's letters".into(),
            ));
        }
        if let Some((c, m)) = mu.iter().find(|(_, m)| m.shape() != (n, n)) {
            return Err(Error::InvalidAutomaton(format!(
                "mu({c}) is {}x{}, expected {n}x{n}",
                m.rows(),
                m.cols()
            )));
        }
        Ok(LinearRepresentation {
            alphabet,
            lambda,
            mu,
            gamma,
        })
    }

    pub fn dim(&self) -> usize {
        self.lambda.len()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn lambda(&self) -> &[S] {
        &self.lambda
    }

    pub fn gamma(&self) -> &[S] {
        &self.gamma
    }

    pub fn mu(&self, letter: char) -> Option<&Matrix<S>> {
        self.mu.get(&letter)
    }

    pub fn transitions(&self) -> impl Iterator<Item = (char, &Matrix<S>)> {
        self.mu.iter().map(|(c, m)| (*c, m))
    }

    fn letter_matrix(&self, letter: Letter) -> Result<&Matrix<S>> {
        match letter {
            Letter::Sym(c) => self.mu.get(&c).ok_or_else(|| Error::ForeignLetter(c.to_string())),
            Letter::Eps => Err(Error::ForeignLetter(letter.to_string())),
        }
    }

    /// `μ(u)` with `μ(ε) = I`.
    pub fn mu_word(&self, u: &Word) -> Result<Matrix<S>> {
        let mut acc = Matrix::identity(self.dim());
        let mut scratch = OpCounter::new();
        for &l in u.letters() {
            acc = mat_mul(&acc, self.letter_matrix(l)?, &mut scratch)?;
        }
        Ok(acc)
    }

    /// `λ·μ(u)·γ`, evaluated left to right on row vectors.
    pub fn weight(&self, u: &Word) -> Result<S> {
        let mut row = self.lambda.clone();
        for &l in u.letters() {
            row = row_times(&row, self.letter_matrix(l)?);
        }
        Ok(dot(&row, &self.gamma))
    }

    /// `Σ_{|u| ≤ max_len} weight(u)·u`.
    pub fn behaviour_truncated(&self, max_len: usize) -> Polynomial<S> {
        let terms = self.alphabet.words_up_to(max_len).into_iter().map(|u| {
            let w = self.weight(&u).expect("words are over the alphabet");
            (u, w)
        });
        Polynomial::from_terms(self.alphabet.clone(), terms).expect("words are over the alphabet")
    }
}

/// Which side of the transitions absorbs `μ(ε̃)*` during elimination.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Variant {
    /// `(λ, μ(ε̃)*·μ(a), μ(ε̃)*·γ)`
    #[default]
    LeftClosure,
    /// `(λ·μ(ε̃)*, μ(a)·μ(ε̃)*, γ)`
    RightClosure,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ClosureStrategy {
    /// Nilpotent sum when possible; otherwise partial sums for the ordered
    /// semirings and the block star for the rest.
    #[default]
    Auto,
    Nilpotent,
    Block,
    Iterative,
}

/// A weighted automaton over `Σ ∪ {ε̃}`.
#[derive(Clone, PartialEq, Eq)]
pub struct EpsilonAutomaton<S> {
    base: LinearRepresentation<S>,
    eps: Matrix<S>,
}

impl<S: Semiring> EpsilonAutomaton<S> {
    pub fn new(base: LinearRepresentation<S>, eps: Matrix<S>) -> Result<Self> {
        let n = base.dim();
        if eps.shape() != (n, n) {
            return Err(Error::InvalidAutomaton(format!(
                "epsilon matrix is {}x{}, expected {n}x{n}",
                eps.rows(),
                eps.cols()
            )));
        }
        Ok(EpsilonAutomaton { base, eps })
    }

    /// Wraps an ε-free automaton with `μ(ε̃) = 0`.
    pub fn without_epsilon(base: LinearRepresentation<S>) -> Self {
        let n = base.dim();
        EpsilonAutomaton {
            base,
            eps: Matrix::zeros(n, n),
        }
    }

    pub fn base(&self) -> &LinearRepresentation<S> {
        &self.base
    }

    pub fn eps(&self) -> &Matrix<S> {
        &self.eps
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.base.alphabet
    }

    fn letter_matrix(&self, letter: Letter) -> Result<&Matrix<S>> {
        match letter {
            Letter::Eps => Ok(&self.eps),
            sym => self.base.letter_matrix(sym),
        }
    }

    /// Weight of a word over `Σ ∪ {ε̃}`, with `ε̃` read as an ordinary letter.
    pub fn weight(&self, v: &Word) -> Result<S> {
        let mut row = self.base.lambda.clone();
        for &l in v.letters() {
            row = row_times(&row, self.letter_matrix(l)?);
        }
        Ok(dot(&row, &self.base.gamma))
    }

    /// Behaviour over `Σ ∪ {ε̃}` up to length `max_len`.
    pub fn behaviour_truncated(&self, max_len: usize) -> Polynomial<S> {
        let mut layer = vec![Word::empty()];
        let mut words = layer.clone();
        let letters: Vec<Letter> = std::iter::once(Letter::Eps)
            .chain(self.alphabet().symbols().map(Letter::Sym))
            .collect();
        for _ in 0..max_len {
            layer = layer
                .iter()
                .flat_map(|w| {
                    letters.iter().map(move |&l| {
                        let mut v = w.clone();
                        v.push(l);
                        v
                    })
                })
                .collect();
            words.extend(layer.iter().cloned());
        }
        let terms = words.into_iter().map(|v| {
            let w = self.weight(&v).expect("words are over the alphabet");
            (v, w)
        });
        Polynomial::from_terms(self.alphabet().clone(), terms).expect("words are over the alphabet")
    }

    /// `μ(ε̃)*`, checked against both star identities before it is returned.
    pub fn epsilon_closure(&self, strategy: ClosureStrategy, ctr: &mut OpCounter) -> Result<Matrix<S>> {
        star_with(&self.eps, strategy, Side::Right, ctr)
    }

    /// ε-free automaton computing `Φ(behaviour)`, closing with
    /// [`ClosureStrategy::Auto`].
    pub fn eliminate(&self, variant: Variant, ctr: &mut OpCounter) -> Result<LinearRepresentation<S>> {
        self.eliminate_with(variant, ClosureStrategy::Auto, ctr)
    }

    /// One closure, `|Σ|` matrix products and one matrix–vector product.
    pub fn eliminate_with(
        &self,
        variant: Variant,
        strategy: ClosureStrategy,
        ctr: &mut OpCounter,
    ) -> Result<LinearRepresentation<S>> {
        let star = self.epsilon_closure(strategy, ctr)?;
        let base = &self.base;
        let mut mu = BTreeMap::new();
        for (c, m) in &base.mu {
            let absorbed = match variant {
                Variant::LeftClosure => mat_mul(&star, m, ctr)?,
                Variant::RightClosure => mat_mul(m, &star, ctr)?,
            };
            mu.insert(*c, absorbed);
        }
        let (lambda, gamma) = match variant {
            Variant::LeftClosure => {
                let gamma = mat_mul(&star, &Matrix::column_vector(base.gamma.clone()), ctr)?;
                (base.lambda.clone(), gamma.into_entries())
            }
            Variant::RightClosure => {
                let lambda = mat_mul(&Matrix::row_vector(base.lambda.clone()), &star, ctr)?;
                (lambda.into_entries(), base.gamma.clone())
            }
        };
        LinearRepresentation::new(base.alphabet.clone(), lambda, mu, gamma)
    }

    /// Brute-force `Φ`-weight of `u`: the sum of `λ·μ(v)·γ` over every preimage
    /// `v = ε̃^{n₀} a₁ ε̃^{n₁} … a_k ε̃^{n_k}` with all `n_i < bound`.
    ///
    /// Each preimage contributes its own product. The product is bracketed at
    /// the middle letter: the row vectors `λ·ε̃^{n₀}·a₁ ⋯ a_h` and the column
    /// vectors `ε̃^{n_h}·a_{h+1} ⋯ ε̃^{n_k}·γ` are listed once, then every
    /// pair is joined by one dot product.
    pub fn phi_weight_oracle(&self, u: &Word, bound: usize) -> Result<S> {
        let mats = u
            .letters()
            .iter()
            .map(|&l| self.base.letter_matrix(l))
            .collect::<Result<Vec<_>>>()?;
        if bound == 0 {
            return Ok(S::zero());
        }
        let (head, tail) = mats.split_at(mats.len() / 2);
        let mut rows = vec![self.base.lambda.clone()];
        for m in head {
            rows = rows
                .iter()
                .flat_map(|r| self.eps_runs(r.clone(), bound, |x| row_times(x, &self.eps)))
                .map(|r| row_times(&r, m))
                .collect();
        }
        let mut cols = self.eps_runs(self.base.gamma.clone(), bound, |x| times_col(&self.eps, x));
        for m in tail.iter().rev() {
            cols = cols
                .iter()
                .flat_map(|c| self.eps_runs(times_col(m, c), bound, |x| times_col(&self.eps, x)))
                .collect();
        }
        let mut acc = S::zero();
        for r in &rows {
            for c in &cols {
                acc = acc.add(&dot(r, c));
            }
        }
        Ok(acc)
    }

    /// `[x, εx, ε²x, …]` with `bound` entries, where `step` applies one `ε̃`.
    fn eps_runs(&self, x: Vec<S>, bound: usize, step: impl Fn(&[S]) -> Vec<S>) -> Vec<Vec<S>> {
        let mut runs = Vec::with_capacity(bound);
        runs.push(x);
        for _ in 1..bound {
            let next = step(runs.last().expect("nonempty"));
            runs.push(next);
        }
        runs
    }

    /// Smallest `K ≤ limit` for which the partial sums of `μ(ε̃)` settle,
    /// `Σ_{k<K} μ(ε̃)^k = Σ_{k≤K} μ(ε̃)^k`. With such a `K` the oracle is exact.
    pub fn exact_oracle_bound(&self, limit: usize) -> Option<usize> {
        let mut prev = power_sum(&self.eps, 0).expect("square");
        for k in 0..=limit {
            let next = power_sum(&self.eps, k + 1).expect("square");
            if k > 0 && prev == next {
                return Some(k);
            }
            prev = next;
        }
        None
    }

    /// Sufficient test for a `Φ`-finite behaviour: `μ(ε̃)` is nilpotent.
    pub fn is_phi_finite_representation(&self) -> bool {
        matches!(is_nilpotent(&self.eps), Ok(Some(_)))
    }
}

/// Star of a square matrix by the given strategy. `side` picks the block
/// recursion; every result is checked against both star identities.
///
/// `Auto` sums powers of a nilpotent matrix. Otherwise it iterates partial
/// sums over `bool` and tropical, tries iteration then the block star over
/// `nat_inf`, and uses the block star over `nat` and `rational`.
pub fn star_with<S: Semiring>(
    m: &Matrix<S>,
    strategy: ClosureStrategy,
    side: Side,
    ctr: &mut OpCounter,
) -> Result<Matrix<S>> {
    let iterations = m.rows() + 1;
    let star = match strategy {
        ClosureStrategy::Nilpotent => star_nilpotent(m, ctr)?,
        ClosureStrategy::Block => star_block(m, side, ctr)?,
        ClosureStrategy::Iterative => star_iterative(m, iterations, ctr)?,
        ClosureStrategy::Auto => {
            if is_nilpotent(m)?.is_some() {
                star_nilpotent(m, ctr)?
            } else {
                match S::KIND {
                    SemiringKind::Bool | SemiringKind::Tropical => star_iterative(m, iterations, ctr)?,
                    // Cycles of finite positive weight never settle; the
                    // block star reaches the +∞ limit directly.
                    SemiringKind::NatInf => match star_iterative(m, iterations, ctr) {
                        Ok(s) => s,
                        Err(Error::Star(StarError::NotStationary { .. })) => star_block(m, side, ctr)?,
                        Err(e) => return Err(e),
                    },
                    SemiringKind::Nat | SemiringKind::Rational => star_block(m, side, ctr)?,
                }
            }
        }
    };
    if is_star(m, &star, Side::Right) && is_star(m, &star, Side::Left) {
        Ok(star)
    } else {
        Err(StarError::Undefined(S::KIND).into())
    }
}

impl<S: Semiring> fmt::Debug for LinearRepresentation<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LinearRepresentation")
            .field("alphabet", &self.alphabet)
            .field("lambda", &self.lambda)
            .field("mu", &self.mu)
            .field("gamma", &self.gamma)
            .finish()
    }
}

impl<S: Semiring> fmt::Debug for EpsilonAutomaton<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EpsilonAutomaton")
            .field("base", &self.base)
            .field("eps", &self.eps)
            .finish()
    }
}

impl<S: Semiring> From<LinearRepresentation<S>> for EpsilonAutomaton<S> {
    fn from(base: LinearRepresentation<S>) -> Self {
        EpsilonAutomaton::without_epsilon(base)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleMode {
    /// The oracle bound covers every preimage with a nonzero contribution
    /// pattern; comparisons are equalities.
    Exact,
    /// The oracle is a partial sum; values are reported, not judged.
    PartialSum,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordCheck<S> {
    pub word: Word,
    pub weight: S,
    pub oracle: S,
    /// `weight − oracle`, available over rings.
    pub gap: Option<S>,
}

impl<S: Semiring> WordCheck<S> {
    pub fn agrees(&self) -> bool {
        self.weight == self.oracle
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport<S> {
    pub mode: OracleMode,
    pub bound: usize,
    pub rows: Vec<WordCheck<S>>,
}

impl<S: Semiring> EquivalenceReport<S> {
    /// `Some(true)` when every exact comparison holds; `None` in partial-sum mode.
    pub fn verdict(&self) -> Option<bool> {
        match self.mode {
            OracleMode::Exact => Some(self.rows.iter().all(WordCheck::agrees)),
            OracleMode::PartialSum => None,
        }
    }

    pub fn first_mismatch(&self) -> Option<&WordCheck<S>> {
        match self.mode {
            OracleMode::Exact => self.rows.iter().find(|r| !r.agrees()),
            OracleMode::PartialSum => None,
        }
    }
}

/// Compares `weight(a, u)` with the `Φ`-weight oracle of `ae` for all
/// `|u| ≤ max_len`. The comparison is exact when the partial power sums of
/// `μ(ε̃)` have settled by `bound` (always the case for a nilpotent `μ(ε̃)`
/// whose index is at most `bound`).
pub fn check_equivalence<S: Semiring>(
    a: &LinearRepresentation<S>,
    ae: &EpsilonAutomaton<S>,
    max_len: usize,
    bound: usize,
) -> Result<EquivalenceReport<S>> {
    if a.alphabet() != ae.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let settled = bound > 0 && power_sum(ae.eps(), bound)? == power_sum(ae.eps(), bound + 1)?;
    let mode = if settled {
        OracleMode::Exact
    } else {
        OracleMode::PartialSum
    };
    let rows = a
        .alphabet()
        .words_up_to(max_len)
        .into_iter()
        .map(|u| {
            let weight = a.weight(&u)?;
            let oracle = ae.phi_weight_oracle(&u, bound)?;
            let gap = oracle.neg().map(|neg| weight.add(&neg));
            Ok(WordCheck {
                word: u,
                weight,
                oracle,
                gap,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EquivalenceReport { mode, bound, rows })
}

fn row_times<S: Semiring>(row: &[S], m: &Matrix<S>) -> Vec<S> {
    (0..m.cols())
        .map(|j| {
            row.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .fold(S::zero(), |acc, (i, x)| acc.add(&x.mul(&m[(i, j)])))
        })
        .collect()
}

fn times_col<S: Semiring>(m: &Matrix<S>, col: &[S]) -> Vec<S> {
    (0..m.rows()).map(|i| dot(m.row(i), col)).collect()
}

fn dot<S: Semiring>(row: &[S], col: &[S]) -> S {
    row.iter()
        .zip(col)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(S::zero(), |acc, (x, y)| acc.add(&x.mul(y)))
}
