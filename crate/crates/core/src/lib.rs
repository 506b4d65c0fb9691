pub mod automaton;
pub mod bench;
pub mod error;
pub mod io;
pub mod matrix;
pub mod random;
pub mod semiring;
pub mod series;

pub use automaton::{
    check_equivalence, star_with, ClosureStrategy, EpsilonAutomaton, EquivalenceReport, LinearRepresentation,
    OracleMode, Variant, WordCheck,
};
pub use bench::{bench_star, write_csv, BenchRecord};
pub use error::{Error, Result, StarError};
pub use io::{Automaton, AutomatonFile, MatrixFile};
pub use matrix::{Matrix, OpCounter};
pub use semiring::{
    sum_family, Bool, Nat, NatInf, Rational, Semiring, SemiringDescriptor, SemiringKind, Tropical, Value,
};
pub use series::{Alphabet, Letter, Polynomial, Word};
