#![allow(dead_code)]

use semistar::io::AutomatonFile;
use semistar::{EpsilonAutomaton, LinearRepresentation, Matrix, MatrixFile, Semiring};

pub const TWO_STATE: &str = include_str!("../../../../data/two_state.json");
pub const EPS_CHAIN: &str = include_str!("../../../../data/eps_chain.json");
pub const BOOL_EPS: &str = include_str!("../../../../data/bool_eps.json");
pub const RATIONAL_EPS: &str = include_str!("../../../../data/rational_eps.json");
pub const RATIONAL_ELIMINATED: &str = include_str!("../../../../data/rational_eliminated.json");
pub const RATIONAL_EPS_STAR: &str = include_str!("../../../../data/rational_eps_star.json");

pub fn linear<S: Semiring>(json: &str) -> LinearRepresentation<S> {
    AutomatonFile::from_json(json).unwrap().decode_base().unwrap()
}

pub fn epsilon<S: Semiring>(json: &str) -> EpsilonAutomaton<S> {
    AutomatonFile::from_json(json).unwrap().decode_epsilon().unwrap()
}

pub fn matrix<S: Semiring>(json: &str) -> Matrix<S> {
    MatrixFile::from_json(json).unwrap().decode().unwrap()
}

/// Builds a matrix from rows of encoded entries.
pub fn parse_matrix<S: Semiring>(rows: &[&[&str]]) -> Matrix<S> {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|x| S::decode(x).unwrap()).collect())
            .collect(),
    )
    .unwrap()
}
