mod common;

use common::*;
use semistar::matrix::{
    is_nilpotent, mat_add, mat_mul, mat_mul_strassen, power_sum, star_block, star_iterative, star_nilpotent, Side,
};
use semistar::series::{enumerate_preimages, phi_word, Alphabet, Letter, Polynomial, Word};
use semistar::{
    check_equivalence, Bool, ClosureStrategy, EpsilonAutomaton, Error, LinearRepresentation, Matrix, Nat, NatInf,
    OpCounter, OracleMode, Rational, Semiring, SemiringKind, StarError, Tropical, Value, Variant,
};

fn ab() -> Alphabet {
    Alphabet::new(['a', 'b']).unwrap()
}

fn w(s: &str) -> Word {
    Word::parse(s, &Alphabet::new(['a', 'b', 'c']).unwrap()).unwrap()
}

fn poly<S: Semiring>(alphabet: &Alphabet, terms: &[(&str, S)]) -> Polynomial<S> {
    Polynomial::from_terms(
        alphabet.clone(),
        terms
            .iter()
            .map(|(u, c)| (Word::parse(u, alphabet).unwrap(), c.clone())),
    )
    .unwrap()
}

#[test]
fn scalar_operations() {
    assert_eq!(Nat::new(2).add(&Nat::new(3)), Nat::new(5));
    assert_eq!(Tropical::int(2).add(&Tropical::int(3)), Tropical::int(2));
    assert_eq!(Bool(true).add(&Bool(true)), Bool(true));
    assert_eq!(Tropical::int(2).mul(&Tropical::int(3)), Tropical::int(5));
    assert_eq!(Rational::new(1, 2).mul(&Rational::new(2, 3)), Rational::new(1, 3));
    assert_eq!(Tropical::zero().mul(&Tropical::int(4)), Tropical::zero());
    assert_eq!(Rational::new(1, 2), Rational::new(2, 4));
    assert_eq!(NatInf::Infinity, NatInf::Infinity);
    assert_ne!(Nat::new(2), Nat::new(3));
}

#[test]
fn scalar_stars() {
    assert_eq!(Rational::new(1, 2).star(), Some(Rational::integer(2)));
    assert_eq!(Rational::integer(1).star(), None);
    assert_eq!(Nat::new(0).star(), Some(Nat::new(1)));
    assert_eq!(Nat::new(1).star(), None);
    assert_eq!(Tropical::int(3).star(), Some(Tropical::int(0)));
    assert_eq!(Tropical::Infinity.star(), Some(Tropical::int(0)));
    assert_eq!(NatInf::new(2).star(), Some(NatInf::Infinity));
    assert_eq!(NatInf::new(0).star(), Some(NatInf::new(1)));
    assert_eq!(Bool(false).star(), Some(Bool(true)));
}

#[test]
fn descriptors() {
    for kind in SemiringKind::ALL {
        let d = kind.descriptor();
        assert!(!d.is_field || d.is_ring);
        assert_eq!(d.is_ring, kind == SemiringKind::Rational);
    }
    assert!(SemiringKind::Rational.descriptor().is_field);
}

#[test]
fn dynamic_values_reject_mixed_operands() {
    let two = Value::parse(SemiringKind::Nat, "2").unwrap();
    let three = Value::parse(SemiringKind::Nat, "3").unwrap();
    assert_eq!(two.add(&three).unwrap().encode(), "5");
    let t = Value::parse(SemiringKind::Tropical, "2").unwrap();
    assert!(matches!(two.add(&t), Err(Error::SemiringMismatch { .. })));
    assert!(matches!(two.mul(&t), Err(Error::SemiringMismatch { .. })));
    assert!(two.try_eq(&t).is_err());
    assert!(Value::parse(SemiringKind::Tropical, "-1").is_err());
}

#[test]
fn matrix_products_and_counts() {
    let a = linear::<Nat>(TWO_STATE);
    let (ma, mb) = (a.mu('a').unwrap(), a.mu('b').unwrap());
    let mut ctr = OpCounter::new();
    let m = mat_mul(&mat_mul(ma, mb, &mut ctr).unwrap(), ma, &mut ctr).unwrap();
    let row = mat_mul(&Matrix::row_vector(a.lambda().to_vec()), &m, &mut ctr).unwrap();
    let value = mat_mul(&row, &Matrix::column_vector(a.gamma().to_vec()), &mut ctr).unwrap();
    assert_eq!(value[(0, 0)], Nat::new(21));

    let mut ctr = OpCounter::new();
    mat_mul(ma, mb, &mut ctr).unwrap();
    assert_eq!((ctr.muls, ctr.adds), (8, 4));
    let mut ctr = OpCounter::new();
    let four: Matrix<Nat> = Matrix::identity(4);
    mat_add(&four, &four, &mut ctr).unwrap();
    assert_eq!(ctr.adds, 16);
}

#[test]
fn strassen_basics() {
    let a = parse_matrix::<Rational>(&[&["1/2", "2"], &["-3", "4"]]);
    let b = parse_matrix::<Rational>(&[&["5", "6/7"], &["7", "-8"]]);
    let mut ctr = OpCounter::new();
    assert_eq!(
        mat_mul_strassen(&a, &b, &mut ctr).unwrap(),
        mat_mul(&a, &b, &mut OpCounter::new()).unwrap()
    );
    assert_eq!(ctr.muls, 7);
    let nat: Matrix<Nat> = Matrix::identity(2);
    assert!(matches!(
        mat_mul_strassen(&nat, &nat, &mut OpCounter::new()),
        Err(Error::NotARing(..))
    ));
}

#[test]
fn matrix_star_examples() {
    let eps = epsilon::<Rational>(RATIONAL_EPS).eps().clone();
    let expected = matrix::<Rational>(RATIONAL_EPS_STAR);
    assert_eq!(star_block(&eps, Side::Right, &mut OpCounter::new()).unwrap(), expected);
    assert_eq!(star_block(&eps, Side::Left, &mut OpCounter::new()).unwrap(), expected);

    let zero = parse_matrix::<Nat>(&[&["0"]]);
    assert_eq!(
        star_block(&zero, Side::Right, &mut OpCounter::new()).unwrap(),
        Matrix::identity(1)
    );
    let empty: Matrix<Nat> = Matrix::identity(0);
    assert_eq!(star_block(&empty, Side::Right, &mut OpCounter::new()).unwrap(), empty);

    let chain = epsilon::<Bool>(BOOL_EPS).eps().clone();
    let reach = parse_matrix::<Bool>(&[
        &["1", "1", "1", "1"],
        &["0", "1", "1", "1"],
        &["0", "0", "1", "1"],
        &["0", "0", "0", "1"],
    ]);
    assert_eq!(star_block(&chain, Side::Right, &mut OpCounter::new()).unwrap(), reach);
    assert_eq!(star_nilpotent(&chain, &mut OpCounter::new()).unwrap(), reach);
}

#[test]
fn nilpotence_and_iteration() {
    let eps = epsilon::<Nat>(EPS_CHAIN).eps().clone();
    assert_eq!(is_nilpotent(&eps).unwrap(), Some(3));
    assert_eq!(is_nilpotent(&Matrix::<Nat>::identity(3)).unwrap(), None);
    assert_eq!(is_nilpotent(&Matrix::<Nat>::zeros(2, 2)).unwrap(), Some(1));
    let sum = parse_matrix::<Nat>(&[&["1", "2", "6"], &["0", "1", "3"], &["0", "0", "1"]]);
    assert_eq!(star_nilpotent(&eps, &mut OpCounter::new()).unwrap(), sum);
    assert_eq!(star_iterative(&eps, 3, &mut OpCounter::new()).unwrap(), sum);
    assert_eq!(
        star_nilpotent(&Matrix::<Nat>::zeros(2, 2), &mut OpCounter::new()).unwrap(),
        Matrix::identity(2)
    );

    let two = parse_matrix::<Rational>(&[&["2"]]);
    assert!(matches!(
        star_iterative(&two, 100, &mut OpCounter::new()),
        Err(Error::Star(StarError::NotStationary { .. }))
    ));
    assert_eq!(
        star_block(&two, Side::Right, &mut OpCounter::new()).unwrap(),
        parse_matrix(&[&["-1"]])
    );
}

#[test]
fn phi_on_words() {
    assert_eq!(phi_word(&w("@a@@b")), w("ab"));
    assert_eq!(phi_word(&w("@@")), Word::empty());
    assert_eq!(phi_word(&w("abc")), w("abc"));
}

#[test]
fn phi_on_polynomials() {
    let sigma = ab();
    let p = poly(&sigma, &[("@a", Nat::new(2)), ("a@", Nat::new(3)), ("b", Nat::new(1))]);
    assert_eq!(p.phi(), poly(&sigma, &[("a", Nat::new(5)), ("b", Nat::new(1))]));
    let q = poly(&sigma, &[("@@", Nat::new(18))]);
    assert_eq!(q.phi(), poly(&sigma, &[("", Nat::new(18))]));
    assert!(Polynomial::<Nat>::zero(sigma).phi().is_zero());
}

#[test]
fn polynomial_arithmetic() {
    let sigma = ab();
    let a = poly(&sigma, &[("a", Nat::new(1))]);
    let b = poly(&sigma, &[("b", Nat::new(1))]);
    let a_plus_b = a.add(&b).unwrap();
    assert_eq!(
        a_plus_b.add(&a).unwrap(),
        poly(&sigma, &[("a", Nat::new(2)), ("b", Nat::new(1))])
    );
    assert_eq!(a.add(&Polynomial::zero(sigma.clone())).unwrap(), a);
    assert!(a.scale_left(&Nat::zero()).is_zero());
    assert_eq!(a.cauchy(&b).unwrap(), poly(&sigma, &[("ab", Nat::new(1))]));
    let a_plus_one = a.add(&Polynomial::one(sigma.clone())).unwrap();
    assert_eq!(
        a_plus_one.cauchy(&a).unwrap(),
        poly(&sigma, &[("aa", Nat::new(1)), ("a", Nat::new(1))])
    );
    let other = Polynomial::<Nat>::zero(Alphabet::new(['x']).unwrap());
    assert!(matches!(a.add(&other), Err(Error::AlphabetMismatch)));
    assert!(a.cauchy(&other).is_err());
}

#[test]
fn truncated_stars() {
    let sigma = Alphabet::new(['a']).unwrap();
    let a = poly(&sigma, &[("a", Bool(true))]);
    let expected = poly(
        &sigma,
        &[
            ("", Bool(true)),
            ("a", Bool(true)),
            ("aa", Bool(true)),
            ("aaa", Bool(true)),
        ],
    );
    assert_eq!(a.star_truncated(3).unwrap(), expected);

    let two_a = poly(&sigma, &[("a", Rational::integer(2))]);
    let expected = poly(
        &sigma,
        &[
            ("", Rational::integer(1)),
            ("a", Rational::integer(2)),
            ("aa", Rational::integer(4)),
        ],
    );
    assert_eq!(two_a.star_truncated(2).unwrap(), expected);

    let one = Polynomial::<Nat>::one(sigma);
    assert!(one.star_truncated(2).unwrap_err().is_star());
}

#[test]
fn preimage_enumeration() {
    let sigma = Alphabet::new(['a']).unwrap();
    let eps = Word::from_letters([Letter::Eps]);
    assert_eq!(
        enumerate_preimages(&Word::empty(), 2).unwrap(),
        vec![Word::empty(), eps]
    );
    assert_eq!(
        enumerate_preimages(&Word::parse("a", &sigma).unwrap(), 1)
            .unwrap()
            .len(),
        1
    );
    let four = enumerate_preimages(&Word::parse("a", &sigma).unwrap(), 2).unwrap();
    assert_eq!(four.len(), 4);
    assert!(four.iter().all(|v| phi_word(v) == Word::parse("a", &sigma).unwrap()));
}

#[test]
fn weights() {
    let a = linear::<Nat>(TWO_STATE);
    assert_eq!(
        a.weight(&Word::parse("aba", a.alphabet()).unwrap()).unwrap(),
        Nat::new(21)
    );
    assert_eq!(a.weight(&Word::empty()).unwrap(), Nat::zero());
    assert!(matches!(a.weight(&w("c")), Err(Error::ForeignLetter(_))));
    let b = a.behaviour_truncated(1);
    assert_eq!(b.terms().count(), 1);
    assert_eq!(b.coefficient(&Word::parse("a", a.alphabet()).unwrap()), Nat::new(3));

    let ae = epsilon::<Nat>(EPS_CHAIN);
    let eps2 = Word::from_letters([Letter::Eps, Letter::Eps]);
    assert_eq!(ae.behaviour_truncated(2).coefficient(&eps2), Nat::new(18));
}

#[test]
fn closures() {
    let ae = epsilon::<Rational>(RATIONAL_EPS);
    let star = ae
        .epsilon_closure(ClosureStrategy::Auto, &mut OpCounter::new())
        .unwrap();
    assert_eq!(star, matrix::<Rational>(RATIONAL_EPS_STAR));
    assert!(!ae.is_phi_finite_representation());

    let free = EpsilonAutomaton::without_epsilon(linear::<Nat>(TWO_STATE));
    assert_eq!(
        free.epsilon_closure(ClosureStrategy::Auto, &mut OpCounter::new())
            .unwrap(),
        Matrix::identity(2)
    );
    assert!(free.is_phi_finite_representation());

    let bool_eps = epsilon::<Bool>(BOOL_EPS);
    let star = bool_eps
        .epsilon_closure(ClosureStrategy::Auto, &mut OpCounter::new())
        .unwrap();
    assert_eq!(star, power_sum(bool_eps.eps(), 4).unwrap());
    // The published closure omits the (3,4) entry although ε̃ links state 3 to 4.
    assert_eq!(star[(2, 3)], Bool(true));
    for strategy in [
        ClosureStrategy::Nilpotent,
        ClosureStrategy::Block,
        ClosureStrategy::Iterative,
    ] {
        assert_eq!(bool_eps.epsilon_closure(strategy, &mut OpCounter::new()).unwrap(), star);
    }
    assert!(epsilon::<Nat>(EPS_CHAIN).is_phi_finite_representation());
}

#[test]
fn elimination_examples() {
    let a = epsilon::<Rational>(RATIONAL_EPS)
        .eliminate(Variant::LeftClosure, &mut OpCounter::new())
        .unwrap();
    assert_eq!(a, linear::<Rational>(RATIONAL_ELIMINATED));

    let free = linear::<Nat>(TWO_STATE);
    let same = EpsilonAutomaton::without_epsilon(free.clone()).eliminate(Variant::RightClosure, &mut OpCounter::new());
    assert_eq!(same.unwrap(), free);

    let chain = epsilon::<Nat>(EPS_CHAIN);
    let a = chain.eliminate(Variant::LeftClosure, &mut OpCounter::new()).unwrap();
    assert_eq!(a.weight(&Word::empty()).unwrap(), Nat::new(18));
    assert_eq!(
        a.weight(&Word::parse("a", a.alphabet()).unwrap()).unwrap(),
        Nat::new(36)
    );
}

#[test]
fn elimination_cost_shape() {
    let ae = epsilon::<Rational>(RATIONAL_EPS);
    let mut closure = OpCounter::new();
    ae.epsilon_closure(ClosureStrategy::Auto, &mut closure).unwrap();
    let mut total = OpCounter::new();
    ae.eliminate(Variant::LeftClosure, &mut total).unwrap();
    // |Σ| = 2 matrix products plus one matrix-vector product after the closure.
    assert_eq!(total.products - closure.products, 3);
    let n = 4;
    assert_eq!(total.muls - closure.muls, 2 * n * n * n + n * n);
}

#[test]
fn oracle_examples() {
    let chain = epsilon::<Nat>(EPS_CHAIN);
    let sigma = chain.alphabet().clone();
    assert_eq!(
        chain.phi_weight_oracle(&Word::parse("a", &sigma).unwrap(), 3).unwrap(),
        Nat::new(36)
    );
    let lg = chain
        .base()
        .lambda()
        .iter()
        .zip(chain.base().gamma())
        .fold(Nat::zero(), |acc, (x, y)| acc.add(&x.mul(y)));
    assert_eq!(chain.phi_weight_oracle(&Word::empty(), 1).unwrap(), lg);

    // Rational ε̃-cycle: partial sums increase toward the eliminated weight
    // without reaching it.
    let ae = epsilon::<Rational>(RATIONAL_EPS);
    let a = ae.eliminate(Variant::LeftClosure, &mut OpCounter::new()).unwrap();
    let u = Word::parse("aa", a.alphabet()).unwrap();
    let target = a.weight(&u).unwrap();
    assert_eq!(target, Rational::new(1, 4));
    let mut last = Rational::zero();
    for k in 1..8 {
        let partial = ae.phi_weight_oracle(&u, k).unwrap();
        assert!(partial.0 >= last.0 && partial.0 < target.0);
        last = partial;
    }
}

#[test]
fn equivalence_examples() {
    let chain = epsilon::<Nat>(EPS_CHAIN);
    let a = chain.eliminate(Variant::LeftClosure, &mut OpCounter::new()).unwrap();
    assert_eq!(check_equivalence(&a, &chain, 3, 3).unwrap().verdict(), Some(true));

    let bool_eps = epsilon::<Bool>(BOOL_EPS);
    let b = bool_eps.eliminate(Variant::LeftClosure, &mut OpCounter::new()).unwrap();
    assert_eq!(check_equivalence(&b, &bool_eps, 4, 4).unwrap().verdict(), Some(true));

    let mut gamma = a.gamma().to_vec();
    gamma[0] = Nat::new(7);
    let perturbed = LinearRepresentation::new(
        a.alphabet().clone(),
        a.lambda().to_vec(),
        a.transitions().map(|(c, m)| (c, m.clone())).collect(),
        gamma,
    )
    .unwrap();
    let report = check_equivalence(&perturbed, &chain, 3, 3).unwrap();
    assert_eq!(report.verdict(), Some(false));
    assert!(report.first_mismatch().unwrap().word.len() <= 3);

    let rational = epsilon::<Rational>(RATIONAL_EPS);
    let r = rational.eliminate(Variant::LeftClosure, &mut OpCounter::new()).unwrap();
    let report = check_equivalence(&r, &rational, 2, 5).unwrap();
    assert_eq!(report.mode, OracleMode::PartialSum);
    assert_eq!(report.verdict(), None);

    let other = linear::<Nat>(TWO_STATE);
    assert!(matches!(
        check_equivalence(&other, &chain, 1, 3),
        Err(Error::AlphabetMismatch)
    ));
}
