//! Words over `Σ ∪ {ε̃}`, polynomials, and the erasing morphism `Φ`.
//!
//! `ε̃` is an ordinary letter (written `@`) whose image under `Φ` is the empty
//! word `ε`. A polynomial is a finitely supported map from words to weights;
//! `Φ` sums the weights of all preimages of each word, which is always a
//! finite sum for polynomials.
//!
//! Infinite series are only ever handled through their linear representations
//! (see [`crate::automaton`]). `Φ`-finiteness does not need rationality:
//! `Σ_{|u|_a = |u|_ε̃} u` is not rational, yet each of its `Φ`-fibers is finite
//! (see the `balanced_series` test).

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result, StarError};
use crate::semiring::Semiring;

/// Text symbol for `ε̃` in word literals.
pub const EPS_SYMBOL: char = '@';

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// The silent letter `ε̃`.
    Eps,
    Sym(char),
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Eps => write!(f, "{EPS_SYMBOL}"),
            Letter::Sym(c) => write!(f, "{c}"),
        }
    }
}

/// A finite alphabet `Σ`; `ε̃` is implicit and never a member.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Alphabet(BTreeSet<char>);

impl Alphabet {
    pub fn new(symbols: impl IntoIterator<Item = char>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for c in symbols {
            if c == EPS_SYMBOL || c.is_whitespace() {
                return Err(Error::parse("alphabet symbol", c.to_string()));
            }
            set.insert(c);
        }
        Ok(Alphabet(set))
    }

    pub fn contains(&self, c: char) -> bool {
        self.0.contains(&c)
    }

    pub fn symbols(&self) -> impl Iterator<Item = char> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All words over `Σ` of length at most `max_len`, shortest first.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(layer.len() * self.len());
            for w in &layer {
                for c in self.symbols() {
                    let mut v = w.clone();
                    v.push(Letter::Sym(c));
                    next.push(v);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

/// A word over `Σ ∪ {ε̃}`. Ordered by length, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        Word(letters.into_iter().collect())
    }

    /// Parses a literal: each character is a letter of `alphabet`, `@` is `ε̃`,
    /// and the empty string is `ε`.
    pub fn parse(s: &str, alphabet: &Alphabet) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                EPS_SYMBOL => Ok(Letter::Eps),
                c if alphabet.contains(c) => Ok(Letter::Sym(c)),
                c => Err(Error::ForeignLetter(c.to_string())),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn has_eps(&self) -> bool {
        self.0.contains(&Letter::Eps)
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Literal form accepted by [`Word::parse`]; `ε` prints as the empty string.
    pub fn literal(&self) -> String {
        self.0.iter().map(Letter::to_string).collect()
    }

    fn uses_only(&self, alphabet: &Alphabet) -> bool {
        self.0.iter().all(|l| match l {
            Letter::Eps => true,
            Letter::Sym(c) => alphabet.contains(*c),
        })
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("ε")
        } else {
            f.write_str(&self.literal())
        }
    }
}

/// `Φ` on words: deletes every `ε̃`.
pub fn phi_word(v: &Word) -> Word {
    Word(v.0.iter().copied().filter(|l| *l != Letter::Eps).collect())
}

/// Every `ε̃^{n₀} a₁ ε̃^{n₁} … a_k ε̃^{n_k}` with all `n_i < bound`, in
/// lexicographic order of `(n₀, …, n_k)`. There are `bound^{k+1}` of them.
pub fn enumerate_preimages(u: &Word, bound: usize) -> Result<Vec<Word>> {
    if u.has_eps() {
        return Err(Error::ForeignLetter(EPS_SYMBOL.to_string()));
    }
    let gaps = u.len() + 1;
    if bound == 0 {
        return Ok(Vec::new());
    }
    let mut runs = vec![0usize; gaps];
    let mut out = Vec::new();
    loop {
        let mut w = Vec::with_capacity(u.len() + runs.iter().sum::<usize>());
        for (i, &run) in runs.iter().enumerate() {
            w.extend(std::iter::repeat_n(Letter::Eps, run));
            if let Some(&a) = u.0.get(i) {
                w.push(a);
            }
        }
        out.push(Word(w));
        // Odometer with the last run varying fastest.
        let mut pos = gaps;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            runs[pos] += 1;
            if runs[pos] < bound {
                break;
            }
            runs[pos] = 0;
        }
    }
}

/// A finitely supported series with no stored zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial<S> {
    alphabet: Alphabet,
    terms: BTreeMap<Word, S>,
}

impl<S: Semiring> Polynomial<S> {
    pub fn zero(alphabet: Alphabet) -> Self {
        Polynomial {
            alphabet,
            terms: BTreeMap::new(),
        }
    }

    /// The polynomial `1·ε`.
    pub fn one(alphabet: Alphabet) -> Self {
        Self::zero(alphabet).with_term(Word::empty(), S::one())
    }

    pub fn monomial(alphabet: Alphabet, word: Word, coeff: S) -> Result<Self> {
        Self::from_terms(alphabet, [(word, coeff)])
    }

    /// Sums coefficients of repeated words.
    pub fn from_terms(alphabet: Alphabet, terms: impl IntoIterator<Item = (Word, S)>) -> Result<Self> {
        let mut p = Self::zero(alphabet);
        for (w, c) in terms {
            if !w.uses_only(&p.alphabet) {
                return Err(Error::ForeignLetter(w.literal()));
            }
            p.accumulate(w, &c);
        }
        Ok(p)
    }

    fn with_term(mut self, w: Word, c: S) -> Self {
        self.accumulate(w, &c);
        self
    }

    fn accumulate(&mut self, w: Word, c: &S) {
        let updated = match self.terms.remove(&w) {
            Some(old) => old.add(c),
            None => c.clone(),
        };
        if !updated.is_zero() {
            self.terms.insert(w, updated);
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn coefficient(&self, w: &Word) -> S {
        self.terms.get(w).cloned().unwrap_or_else(S::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &S)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn same_context(&self, other: &Self) -> Result<()> {
        if self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_context(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.accumulate(w.clone(), c);
        }
        Ok(out)
    }

    /// `α·P`
    pub fn scale_left(&self, alpha: &S) -> Self {
        self.map_coefficients(|c| alpha.mul(c))
    }

    /// `P·α`
    pub fn scale_right(&self, alpha: &S) -> Self {
        self.map_coefficients(|c| c.mul(alpha))
    }

    fn map_coefficients(&self, f: impl Fn(&S) -> S) -> Self {
        Polynomial {
            alphabet: self.alphabet.clone(),
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), f(c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Cauchy product: `⟨PQ, w⟩ = ⊕_{w = w₁w₂} ⟨P,w₁⟩ ⊗ ⟨Q,w₂⟩`.
    pub fn cauchy(&self, other: &Self) -> Result<Self> {
        self.same_context(other)?;
        let mut out = Self::zero(self.alphabet.clone());
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.accumulate(w1.concat(w2), &c1.mul(c2));
            }
        }
        Ok(out)
    }

    /// `Φ(P)`: the coefficient of `u` is the sum over all preimages of `u`.
    pub fn phi(&self) -> Self {
        let mut out = Self::zero(self.alphabet.clone());
        for (w, c) in &self.terms {
            out.accumulate(phi_word(w), c);
        }
        out
    }

    /// Drops every term longer than `max_len`.
    pub fn truncate(&self, max_len: usize) -> Self {
        Polynomial {
            alphabet: self.alphabet.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() <= max_len)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Terms of `P*` up to length `max_len`, from `Y = 1 ⊕ P·Y` solved one
    /// length layer at a time. With `c = ⟨P, ε⟩` each layer is
    /// `Y_w = c* ⊗ ⊕_{w = w₁w₂, w₁ ≠ ε} ⟨P,w₁⟩ ⊗ Y_{w₂}`.
    pub fn star_truncated(&self, max_len: usize) -> Result<Self> {
        let constant = self.coefficient(&Word::empty());
        let c_star = constant.star().ok_or(StarError::Undefined(S::KIND))?;
        let proper: Vec<(&Word, &S)> = self.terms.iter().filter(|(w, _)| !w.is_empty()).collect();

        let mut layers: Vec<BTreeMap<Word, S>> = vec![BTreeMap::from([(Word::empty(), c_star.clone())])];
        for len in 1..=max_len {
            let mut acc: BTreeMap<Word, S> = BTreeMap::new();
            for &(w1, c1) in &proper {
                if w1.len() > len {
                    continue;
                }
                for (w2, y) in &layers[len - w1.len()] {
                    let term = c1.mul(y);
                    let w = w1.concat(w2);
                    let entry = match acc.remove(&w) {
                        Some(old) => old.add(&term),
                        None => term,
                    };
                    acc.insert(w, entry);
                }
            }
            let layer = acc
                .into_iter()
                .map(|(w, s)| (w, c_star.mul(&s)))
                .filter(|(_, c)| !c.is_zero())
                .collect();
            layers.push(layer);
        }
        let mut out = Self::zero(self.alphabet.clone());
        for layer in layers {
            for (w, c) in layer {
                out.accumulate(w, &c);
            }
        }
        Ok(out)
    }
}

impl<S: Semiring> fmt::Display for Polynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| if c.is_one() { w.to_string() } else { format!("{c}·{w}") })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl<S: Semiring> fmt::Debug for Polynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial<{}>({self})", S::KIND)
    }
}
