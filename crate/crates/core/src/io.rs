//! JSON file formats for matrices and automata.
//!
//! Entries are written as strings in the semiring's text encoding. On input,
//! JSON numbers and booleans are accepted as well.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::automaton::{EpsilonAutomaton, LinearRepresentation};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::semiring::{Semiring, SemiringKind};
use crate::series::Alphabet;

/// Runs `$body` with `$S` bound to the semiring type selected by `$kind`.
///
/// ```
/// use semistar::{with_semiring, Semiring, SemiringKind};
/// let one = with_semiring!(SemiringKind::Tropical, S => S::one().encode());
/// assert_eq!(one, "0");
/// ```
#[macro_export]
macro_rules! with_semiring {
    ($kind:expr, $S:ident => $body:expr) => {
        match $kind {
            $crate::SemiringKind::Bool => {
                type $S = $crate::Bool;
                $body
            }
            $crate::SemiringKind::Nat => {
                type $S = $crate::Nat;
                $body
            }
            $crate::SemiringKind::Rational => {
                type $S = $crate::Rational;
                $body
            }
            $crate::SemiringKind::Tropical => {
                type $S = $crate::Tropical;
                $body
            }
            $crate::SemiringKind::NatInf => {
                type $S = $crate::NatInf;
                $body
            }
        }
    };
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RawEntry {
    Text(String),
    Number(serde_json::Number),
    Flag(bool),
}

impl RawEntry {
    fn decode<S: Semiring>(&self) -> Result<S> {
        match self {
            RawEntry::Text(s) => S::decode(s),
            RawEntry::Number(n) => S::decode(&n.to_string()),
            RawEntry::Flag(b) => S::decode(if *b { "1" } else { "0" }),
        }
    }

    fn encode<S: Semiring>(x: &S) -> Self {
        RawEntry::Text(x.encode())
    }
}

fn decode_all<S: Semiring>(raw: &[RawEntry]) -> Result<Vec<S>> {
    raw.iter().map(RawEntry::decode).collect()
}

fn decode_square<S: Semiring>(raw: &[Vec<RawEntry>], dim: usize, what: &str) -> Result<Matrix<S>> {
    if raw.len() != dim || raw.iter().any(|r| r.len() != dim) {
        return Err(Error::InvalidAutomaton(format!("{what} must be a {dim}x{dim} array")));
    }
    let data = raw.iter().flatten().map(RawEntry::decode).collect::<Result<Vec<S>>>()?;
    Matrix::new(dim, dim, data)
}

fn encode_rows<S: Semiring>(m: &Matrix<S>) -> Vec<Vec<RawEntry>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(RawEntry::encode).collect())
        .collect()
}

fn check_kind<S: Semiring>(declared: &str) -> Result<()> {
    let kind: SemiringKind = declared.parse()?;
    if kind != S::KIND {
        return Err(Error::SemiringMismatch {
            left: kind,
            right: S::KIND,
        });
    }
    Ok(())
}

/// `{"semiring", "rows", "cols", "entries"}` with row-major entries.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub semiring: String,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<RawEntry>,
}

impl MatrixFile {
    pub fn kind(&self) -> Result<SemiringKind> {
        self.semiring.parse()
    }

    pub fn decode<S: Semiring>(&self) -> Result<Matrix<S>> {
        check_kind::<S>(&self.semiring)?;
        Matrix::new(self.rows, self.cols, decode_all(&self.entries)?)
    }

    pub fn encode<S: Semiring>(m: &Matrix<S>) -> Self {
        MatrixFile {
            semiring: S::KIND.id().to_string(),
            rows: m.rows(),
            cols: m.cols(),
            entries: m.entries().iter().map(RawEntry::encode).collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&fs::read_to_string(path)?)
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        Ok(fs::write(path, self.to_json() + "\n")?)
    }
}

/// An automaton file decoded at a concrete semiring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Automaton<S: Semiring> {
    Plain(LinearRepresentation<S>),
    Epsilon(EpsilonAutomaton<S>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AutomatonFile {
    pub semiring: String,
    pub alphabet: Vec<String>,
    pub dim: usize,
    pub lambda: Vec<RawEntry>,
    pub gamma: Vec<RawEntry>,
    pub mu: BTreeMap<String, Vec<Vec<RawEntry>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<Vec<Vec<RawEntry>>>,
}

impl AutomatonFile {
    pub fn kind(&self) -> Result<SemiringKind> {
        self.semiring.parse()
    }

    pub fn has_epsilon(&self) -> bool {
        self.epsilon.is_some()
    }

    fn single_char(s: &str) -> Result<char> {
        let mut chars = s.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => Ok(c),
            _ => Err(Error::InvalidAutomaton(format!(
                "letter {s:?} is not a single character"
            ))),
        }
    }

    /// The ε-free part, ignoring any `epsilon` field.
    pub fn decode_base<S: Semiring>(&self) -> Result<LinearRepresentation<S>> {
        check_kind::<S>(&self.semiring)?;
        let n = self.dim;
        let letters = self
            .alphabet
            .iter()
            .map(|s| Self::single_char(s))
            .collect::<Result<Vec<_>>>()?;
        let alphabet = Alphabet::new(letters)?;
        if alphabet.len() != self.alphabet.len() {
            return Err(Error::InvalidAutomaton("alphabet has repeated letters".into()));
        }
        if self.lambda.len() != n || self.gamma.len() != n {
            return Err(Error::InvalidAutomaton(format!(
                "lambda and gamma must have {n} entries"
            )));
        }
        let mut mu = BTreeMap::new();
        for (key, rows) in &self.mu {
            let c = Self::single_char(key)?;
            if !alphabet.contains(c) {
                return Err(Error::ForeignLetter(key.clone()));
            }
            mu.insert(c, decode_square(rows, n, &format!("mu[{key}]"))?);
        }
        LinearRepresentation::new(alphabet, decode_all(&self.lambda)?, mu, decode_all(&self.gamma)?)
    }

    /// Fails when the file has no `epsilon` field.
    pub fn decode_epsilon<S: Semiring>(&self) -> Result<EpsilonAutomaton<S>> {
        let raw = self
            .epsilon
            .as_ref()
            .ok_or_else(|| Error::InvalidAutomaton("missing epsilon field".into()))?;
        let base = self.decode_base()?;
        let eps = decode_square(raw, self.dim, "epsilon")?;
        EpsilonAutomaton::new(base, eps)
    }

    pub fn decode<S: Semiring>(&self) -> Result<Automaton<S>> {
        if self.has_epsilon() {
            self.decode_epsilon().map(Automaton::Epsilon)
        } else {
            self.decode_base().map(Automaton::Plain)
        }
    }

    pub fn encode_linear<S: Semiring>(a: &LinearRepresentation<S>) -> Self {
        AutomatonFile {
            semiring: S::KIND.id().to_string(),
            alphabet: a.alphabet().symbols().map(String::from).collect(),
            dim: a.dim(),
            lambda: a.lambda().iter().map(RawEntry::encode).collect(),
            gamma: a.gamma().iter().map(RawEntry::encode).collect(),
            mu: a.transitions().map(|(c, m)| (c.to_string(), encode_rows(m))).collect(),
            epsilon: None,
        }
    }

    pub fn encode_epsilon<S: Semiring>(a: &EpsilonAutomaton<S>) -> Self {
        AutomatonFile {
            epsilon: Some(encode_rows(a.eps())),
            ..Self::encode_linear(a.base())
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&fs::read_to_string(path)?)
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        Ok(fs::write(path, self.to_json() + "\n")?)
    }
}
