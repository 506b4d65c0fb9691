//! Semirings with a partial star.
//!
//! A semiring `(k, ⊕, ⊗, 0, 1)` is a commutative monoid under `⊕`, a monoid
//! under `⊗`, with `⊗` distributing over `⊕` and `0` annihilating. The star of
//! `x` is a `y` with `x⊗y ⊕ 1 = y` (right) and `y⊗x ⊕ 1 = y` (left); it may not
//! exist, so [`Semiring::star`] returns an `Option`.
//!
//! Five exact instances are provided: [`Bool`], [`Nat`], [`Rational`],
//! [`Tropical`] (min-plus on the closed half-ray `[0, +∞]`) and [`NatInf`]
//! (naturals completed with `+∞`). None of them uses floating point, so
//! equality is always exact.
//!
//! Not every right star is a left star in general: in the ring of linear
//! operators on `ℝ[x]`, `X(x^n) = x^n - n x^{n-1}` admits the whole family
//! `Y_α(x^n) = x^{n+1}/(n+1) + α` as right stars, none of which is a left star
//! when `α ≠ 0`. That ring is not modelled here.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Identifies one of the built-in semirings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SemiringKind {
    Bool,
    Nat,
    Rational,
    Tropical,
    NatInf,
}

impl SemiringKind {
    pub const ALL: [SemiringKind; 5] = [
        SemiringKind::Bool,
        SemiringKind::Nat,
        SemiringKind::Rational,
        SemiringKind::Tropical,
        SemiringKind::NatInf,
    ];

    pub fn id(self) -> &'static str {
        match self {
            SemiringKind::Bool => "bool",
            SemiringKind::Nat => "nat",
            SemiringKind::Rational => "rational",
            SemiringKind::Tropical => "tropical",
            SemiringKind::NatInf => "nat_inf",
        }
    }

    pub fn descriptor(self) -> SemiringDescriptor {
        let is_ring = self == SemiringKind::Rational;
        SemiringDescriptor {
            kind: self,
            is_ring,
            is_field: is_ring,
            is_commutative: true,
        }
    }
}

impl fmt::Display for SemiringKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for SemiringKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SemiringKind::ALL
            .into_iter()
            .find(|k| k.id() == s)
            .ok_or_else(|| Error::UnknownSemiring(s.to_string()))
    }
}

/// Capability flags of a semiring. `is_field` implies `is_ring`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SemiringDescriptor {
    pub kind: SemiringKind,
    pub is_ring: bool,
    pub is_field: bool,
    pub is_commutative: bool,
}

pub trait Semiring: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const KIND: SemiringKind;

    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;

    /// Two-sided star, or `None` when no solution exists in the carrier.
    fn star(&self) -> Option<Self>;

    /// Additive inverse; `None` for every semiring that is not a ring.
    fn neg(&self) -> Option<Self> {
        None
    }

    /// Text form used by the file formats.
    fn encode(&self) -> String {
        self.to_string()
    }

    fn decode(s: &str) -> Result<Self>;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn descriptor() -> SemiringDescriptor {
        Self::KIND.descriptor()
    }
}

/// `⊕` over a finite family; the empty family sums to `0`.
///
/// Countable sums are out of reach, but on finite families the sum must
/// agree with iterated `⊕`, split over pointwise sums, and regroup over any
/// finite partition of the index set.
pub fn sum_family<'a, S: Semiring>(family: impl IntoIterator<Item = &'a S>) -> S {
    family.into_iter().fold(S::zero(), |acc, x| acc.add(x))
}

/// Boolean semiring `({0,1}, ∨, ∧, 0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bool(pub bool);

impl Semiring for Bool {
    const KIND: SemiringKind = SemiringKind::Bool;

    fn zero() -> Self {
        Bool(false)
    }
    fn one() -> Self {
        Bool(true)
    }
    fn add(&self, rhs: &Self) -> Self {
        Bool(self.0 || rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Bool(self.0 && rhs.0)
    }
    fn star(&self) -> Option<Self> {
        Some(Bool(true))
    }
    fn decode(s: &str) -> Result<Self> {
        match s.trim() {
            "0" | "false" => Ok(Bool(false)),
            "1" | "true" => Ok(Bool(true)),
            other => Err(Error::parse("bool", other)),
        }
    }
}

impl fmt::Display for Bool {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.0 { "1" } else { "0" })
    }
}

/// Natural numbers `(ℕ, +, ×, 0, 1)` with arbitrary precision.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Nat(pub BigUint);

impl Nat {
    pub fn new(n: u64) -> Self {
        Nat(BigUint::from(n))
    }
}

impl Semiring for Nat {
    const KIND: SemiringKind = SemiringKind::Nat;

    fn zero() -> Self {
        Nat(BigUint::zero())
    }
    fn one() -> Self {
        Nat(BigUint::one())
    }
    fn add(&self, rhs: &Self) -> Self {
        Nat(&self.0 + &rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Nat(&self.0 * &rhs.0)
    }
    fn star(&self) -> Option<Self> {
        // y = n·y + 1 forces y > n·y, impossible for n ≥ 1.
        self.0.is_zero().then(Nat::one)
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn decode(s: &str) -> Result<Self> {
        parse_natural(s).map(Nat).ok_or_else(|| Error::parse("nat", s))
    }
}

impl fmt::Display for Nat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Exact rationals `(ℚ, +, ×, 0, 1)`, always in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl Semiring for Rational {
    const KIND: SemiringKind = SemiringKind::Rational;

    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn one() -> Self {
        Rational(BigRational::one())
    }
    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }
    fn star(&self) -> Option<Self> {
        let denom = BigRational::one() - &self.0;
        (!denom.is_zero()).then(|| Rational(denom.recip()))
    }
    fn neg(&self) -> Option<Self> {
        Some(Rational(-&self.0))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn decode(s: &str) -> Result<Self> {
        parse_rational(s)
            .map(Rational)
            .ok_or_else(|| Error::parse("rational", s))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// Min-plus semiring on `[0, +∞]`: `⊕ = min`, `⊗ = +`, `0 = +∞`, `1 = 0`.
///
/// Finite values are exact non-negative rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Tropical {
    Finite(BigRational),
    Infinity,
}

impl Tropical {
    /// Panics on a negative value; the carrier is the closed half-ray.
    pub fn finite(value: BigRational) -> Self {
        assert!(!value.is_negative(), "tropical values must be non-negative");
        Tropical::Finite(value)
    }

    pub fn int(n: u64) -> Self {
        Tropical::Finite(BigRational::from_integer(BigInt::from(n)))
    }
}

impl Semiring for Tropical {
    const KIND: SemiringKind = SemiringKind::Tropical;

    fn zero() -> Self {
        Tropical::Infinity
    }
    fn one() -> Self {
        Tropical::Finite(BigRational::zero())
    }
    fn add(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (Tropical::Infinity, x) | (x, Tropical::Infinity) => x.clone(),
            (Tropical::Finite(a), Tropical::Finite(b)) => {
                // Cross-multiplying beats the generic rational comparison;
                // denominators are positive.
                let a_le_b = if a.denom() == b.denom() {
                    a.numer() <= b.numer()
                } else {
                    a.numer() * b.denom() <= b.numer() * a.denom()
                };
                Tropical::Finite(if a_le_b { a.clone() } else { b.clone() })
            }
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (Tropical::Finite(a), Tropical::Finite(b)) if a.is_integer() && b.is_integer() => {
                Tropical::Finite(BigRational::from_integer(a.numer() + b.numer()))
            }
            (Tropical::Finite(a), Tropical::Finite(b)) => Tropical::Finite(a + b),
            _ => Tropical::Infinity,
        }
    }
    fn star(&self) -> Option<Self> {
        // min(x + y, 0) = y has the unique solution y = 0 when x ≥ 0.
        Some(Tropical::one())
    }
    fn decode(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "inf" {
            return Ok(Tropical::Infinity);
        }
        match parse_decimal(s).or_else(|| parse_rational(s)) {
            Some(v) if !v.is_negative() => Ok(Tropical::Finite(v)),
            _ => Err(Error::parse("tropical", s)),
        }
    }
}

impl fmt::Display for Tropical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tropical::Infinity => f.write_str("inf"),
            Tropical::Finite(v) => f.write_str(&format_decimal(v)),
        }
    }
}

/// Naturals completed with `+∞`: `(ℕ ∪ {∞}, +, ×, 0, 1)` with `0·∞ = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum NatInf {
    Finite(BigUint),
    Infinity,
}

impl NatInf {
    pub fn new(n: u64) -> Self {
        NatInf::Finite(BigUint::from(n))
    }
}

impl Semiring for NatInf {
    const KIND: SemiringKind = SemiringKind::NatInf;

    fn zero() -> Self {
        NatInf::Finite(BigUint::zero())
    }
    fn one() -> Self {
        NatInf::Finite(BigUint::one())
    }
    fn add(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (NatInf::Finite(a), NatInf::Finite(b)) => NatInf::Finite(a + b),
            _ => NatInf::Infinity,
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (NatInf::Finite(a), NatInf::Finite(b)) => NatInf::Finite(a * b),
            (NatInf::Finite(z), _) | (_, NatInf::Finite(z)) if z.is_zero() => NatInf::zero(),
            _ => NatInf::Infinity,
        }
    }
    fn star(&self) -> Option<Self> {
        // 1 + x + x² + … : finite only for x = 0.
        Some(if self.is_zero() {
            NatInf::one()
        } else {
            NatInf::Infinity
        })
    }
    fn is_zero(&self) -> bool {
        matches!(self, NatInf::Finite(z) if z.is_zero())
    }
    fn decode(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "inf" {
            return Ok(NatInf::Infinity);
        }
        parse_natural(s)
            .map(NatInf::Finite)
            .ok_or_else(|| Error::parse("nat_inf", s))
    }
}

impl fmt::Display for NatInf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NatInf::Infinity => f.write_str("inf"),
            NatInf::Finite(n) => write!(f, "{n}"),
        }
    }
}

fn parse_natural(s: &str) -> Option<BigUint> {
    let s = s.trim();
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    parse_natural(digits)?;
    s.parse().ok()
}

/// Accepts `p` or `p/q` with `q ≠ 0`.
fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        None => parse_integer(s).map(BigRational::from_integer),
        Some((p, q)) => {
            let p = parse_integer(p.trim())?;
            let q = parse_integer(q.trim())?;
            (!q.is_zero()).then(|| BigRational::new(p, q))
        }
    }
}

/// Accepts plain decimals such as `2`, `0.25` or `-1.5`.
fn parse_decimal(s: &str) -> Option<BigRational> {
    let (int_part, frac_part) = s.split_once('.')?;
    let negative = int_part.starts_with('-');
    let int_digits = int_part.strip_prefix('-').unwrap_or(int_part);
    if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let whole = if int_digits.is_empty() {
        BigUint::zero()
    } else {
        parse_natural(int_digits)?
    };
    let frac: BigUint = frac_part.parse().ok()?;
    let scale = num_traits::pow(BigUint::from(10u8), frac_part.len());
    let magnitude = BigRational::new(BigInt::from(whole * &scale + frac), BigInt::from(scale));
    Some(if negative { -magnitude } else { magnitude })
}

/// Terminating decimal when the denominator is `2^a·5^b`, `p/q` otherwise.
fn format_decimal(v: &BigRational) -> String {
    if v.denom().is_one() {
        return v.numer().to_string();
    }
    let mut d = v.denom().clone();
    let (two, five) = (BigInt::from(2), BigInt::from(5));
    let mut digits = 0usize;
    let (mut twos, mut fives) = (0usize, 0usize);
    while d.is_multiple_of(&two) {
        d /= &two;
        twos += 1;
    }
    while d.is_multiple_of(&five) {
        d /= &five;
        fives += 1;
    }
    if !d.is_one() {
        return format!("{}/{}", v.numer(), v.denom());
    }
    digits += twos.max(fives);
    let scaled = v * BigRational::from_integer(num_traits::pow(BigInt::from(10), digits));
    let n = scaled.to_integer();
    let sign = if n.is_negative() { "-" } else { "" };
    let s = n.abs().to_string();
    let s = format!("{s:0>width$}", width = digits + 1);
    let (int_part, frac_part) = s.split_at(s.len() - digits);
    format!("{sign}{int_part}.{frac_part}")
}

/// A semiring element whose semiring is only known at runtime.
///
/// Arithmetic on values from different semirings is a usage error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Bool(Bool),
    Nat(Nat),
    Rational(Rational),
    Tropical(Tropical),
    NatInf(NatInf),
}

macro_rules! value_binop {
    ($self:ident, $rhs:ident, $a:ident, $b:ident => $body:expr) => {
        match ($self, $rhs) {
            (Value::Bool($a), Value::Bool($b)) => Ok(Value::Bool($body)),
            (Value::Nat($a), Value::Nat($b)) => Ok(Value::Nat($body)),
            (Value::Rational($a), Value::Rational($b)) => Ok(Value::Rational($body)),
            (Value::Tropical($a), Value::Tropical($b)) => Ok(Value::Tropical($body)),
            (Value::NatInf($a), Value::NatInf($b)) => Ok(Value::NatInf($body)),
            (l, r) => Err(Error::SemiringMismatch {
                left: l.kind(),
                right: r.kind(),
            }),
        }
    };
}

macro_rules! value_unop {
    ($self:ident, $a:ident => $body:expr) => {
        match $self {
            Value::Bool($a) => $body.map(Value::Bool),
            Value::Nat($a) => $body.map(Value::Nat),
            Value::Rational($a) => $body.map(Value::Rational),
            Value::Tropical($a) => $body.map(Value::Tropical),
            Value::NatInf($a) => $body.map(Value::NatInf),
        }
    };
}

impl Value {
    pub fn kind(&self) -> SemiringKind {
        match self {
            Value::Bool(_) => SemiringKind::Bool,
            Value::Nat(_) => SemiringKind::Nat,
            Value::Rational(_) => SemiringKind::Rational,
            Value::Tropical(_) => SemiringKind::Tropical,
            Value::NatInf(_) => SemiringKind::NatInf,
        }
    }

    pub fn parse(kind: SemiringKind, s: &str) -> Result<Self> {
        Ok(match kind {
            SemiringKind::Bool => Value::Bool(Bool::decode(s)?),
            SemiringKind::Nat => Value::Nat(Nat::decode(s)?),
            SemiringKind::Rational => Value::Rational(Rational::decode(s)?),
            SemiringKind::Tropical => Value::Tropical(Tropical::decode(s)?),
            SemiringKind::NatInf => Value::NatInf(NatInf::decode(s)?),
        })
    }

    pub fn zero(kind: SemiringKind) -> Self {
        match kind {
            SemiringKind::Bool => Value::Bool(Bool::zero()),
            SemiringKind::Nat => Value::Nat(Nat::zero()),
            SemiringKind::Rational => Value::Rational(Rational::zero()),
            SemiringKind::Tropical => Value::Tropical(Tropical::zero()),
            SemiringKind::NatInf => Value::NatInf(NatInf::zero()),
        }
    }

    pub fn one(kind: SemiringKind) -> Self {
        match kind {
            SemiringKind::Bool => Value::Bool(Bool::one()),
            SemiringKind::Nat => Value::Nat(Nat::one()),
            SemiringKind::Rational => Value::Rational(Rational::one()),
            SemiringKind::Tropical => Value::Tropical(Tropical::one()),
            SemiringKind::NatInf => Value::NatInf(NatInf::one()),
        }
    }

    pub fn add(&self, rhs: &Value) -> Result<Value> {
        value_binop!(self, rhs, a, b => a.add(b))
    }

    pub fn mul(&self, rhs: &Value) -> Result<Value> {
        value_binop!(self, rhs, a, b => a.mul(b))
    }

    /// Exact equality; comparing values of different semirings is an error.
    pub fn try_eq(&self, rhs: &Value) -> Result<bool> {
        if self.kind() != rhs.kind() {
            return Err(Error::SemiringMismatch {
                left: self.kind(),
                right: rhs.kind(),
            });
        }
        Ok(self == rhs)
    }

    pub fn star(&self) -> Option<Value> {
        value_unop!(self, a => a.star())
    }

    pub fn encode(&self) -> String {
        match self {
            Value::Bool(a) => a.encode(),
            Value::Nat(a) => a.encode(),
            Value::Rational(a) => a.encode(),
            Value::Tropical(a) => a.encode(),
            Value::NatInf(a) => a.encode(),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p, d)
    }

    fn satisfies_star<S: Semiring>(x: &S, y: &S) -> bool {
        x.mul(y).add(&S::one()) == *y && y.mul(x).add(&S::one()) == *y
    }

    #[test]
    fn descriptor_flags() {
        for kind in SemiringKind::ALL {
            let d = kind.descriptor();
            assert!(!d.is_field || d.is_ring);
            assert_eq!(d.is_ring, kind == SemiringKind::Rational);
        }
        assert_eq!("nat_inf".parse::<SemiringKind>().unwrap(), SemiringKind::NatInf);
        assert!("real".parse::<SemiringKind>().is_err());
    }

    #[test]
    fn addition_examples() {
        assert_eq!(Nat::new(2).add(&Nat::new(3)), Nat::new(5));
        assert_eq!(Tropical::int(2).add(&Tropical::int(3)), Tropical::int(2));
        assert_eq!(Bool(true).add(&Bool(true)), Bool(true));
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(Tropical::int(2).mul(&Tropical::int(3)), Tropical::int(5));
        assert_eq!(q(1, 2).mul(&q(2, 3)), q(1, 3));
        assert!(Tropical::zero().mul(&Tropical::int(7)).is_zero());
        assert!(NatInf::zero().mul(&NatInf::Infinity).is_zero());
        assert!(NatInf::Infinity.mul(&NatInf::zero()).is_zero());
        assert_eq!(NatInf::Infinity.mul(&NatInf::new(2)), NatInf::Infinity);
    }

    #[test]
    fn scalar_star_examples() {
        assert_eq!(q(1, 2).star(), Some(Rational::integer(2)));
        assert_eq!(Rational::one().star(), None);
        assert_eq!(Rational::integer(2).star(), Some(Rational::integer(-1)));
        assert_eq!(Nat::zero().star(), Some(Nat::one()));
        assert_eq!(Tropical::int(3).star(), Some(Tropical::int(0)));
        assert_eq!(Tropical::Infinity.star(), Some(Tropical::int(0)));
        assert_eq!(NatInf::new(2).star(), Some(NatInf::Infinity));
        assert_eq!(NatInf::zero().star(), Some(NatInf::one()));
        assert_eq!(Bool(false).star(), Some(Bool(true)));
    }

    #[test]
    fn nat_star_has_no_solution_for_positive_values() {
        // Exhaustive over a window: y = n·y + 1 has no solution y ≤ 1000.
        for n in 1..20u64 {
            assert_eq!(Nat::new(n).star(), None);
            let x = Nat::new(n);
            assert!((0..1000u64).all(|y| !satisfies_star(&x, &Nat::new(y))));
        }
    }

    #[test]
    fn tropical_star_is_unique_fixpoint() {
        // Over a grid of candidates only y = 0 solves min(x + y, 0) = y.
        for x in 0..6u64 {
            let x = Tropical::int(x);
            let sols: Vec<_> = (0..10u64)
                .map(Tropical::int)
                .chain([Tropical::Infinity])
                .filter(|y| satisfies_star(&x, y))
                .collect();
            assert_eq!(sols, vec![Tropical::int(0)]);
        }
    }

    #[test]
    fn defined_stars_satisfy_both_identities() {
        for p in -6..6 {
            for d in 1..5 {
                let x = q(p, d);
                if let Some(y) = x.star() {
                    assert!(satisfies_star(&x, &y));
                }
            }
        }
        for n in 0..4 {
            let x = NatInf::new(n);
            assert!(satisfies_star(&x, &x.star().unwrap()));
        }
        assert!(satisfies_star(&NatInf::Infinity, &NatInf::Infinity.star().unwrap()));
    }

    #[test]
    fn encoding_round_trips() {
        assert_eq!(Rational::decode("2/4").unwrap(), q(1, 2));
        assert_eq!(Rational::decode("-3").unwrap().encode(), "-3");
        assert_eq!(q(4, 3).encode(), "4/3");
        assert!(Rational::decode("1/0").is_err());
        assert_eq!(
            Tropical::decode("2.5").unwrap(),
            Tropical::Finite(BigRational::new(5.into(), 2.into()))
        );
        assert_eq!(Tropical::decode("2.5").unwrap().encode(), "2.5");
        assert_eq!(Tropical::decode("0.125").unwrap().encode(), "0.125");
        assert_eq!(Tropical::decode("1/3").unwrap().encode(), "1/3");
        assert_eq!(Tropical::decode("inf").unwrap(), Tropical::Infinity);
        assert!(Tropical::decode("-1").is_err());
        assert_eq!(NatInf::decode("inf").unwrap(), NatInf::Infinity);
        assert_eq!(
            Nat::decode("123456789012345678901234567890").unwrap().encode(),
            "123456789012345678901234567890"
        );
        assert!(Nat::decode("-1").is_err());
        assert!(Bool::decode("2").is_err());
    }

    #[test]
    fn dynamic_values_reject_mixed_operands() {
        let a = Value::parse(SemiringKind::Nat, "2").unwrap();
        let b = Value::parse(SemiringKind::Tropical, "3").unwrap();
        assert!(matches!(a.add(&b), Err(Error::SemiringMismatch { .. })));
        assert!(a.mul(&b).is_err());
        assert!(a.try_eq(&b).is_err());
        let c = Value::parse(SemiringKind::Rational, "1/2").unwrap();
        let d = Value::parse(SemiringKind::Rational, "2/4").unwrap();
        assert!(c.try_eq(&d).unwrap());
        let inf = Value::parse(SemiringKind::Tropical, "inf").unwrap();
        assert!(inf.try_eq(&inf.clone()).unwrap());
        let two = Value::parse(SemiringKind::Nat, "2").unwrap();
        let three = Value::parse(SemiringKind::Nat, "3").unwrap();
        assert!(!two.try_eq(&three).unwrap());
        assert_eq!(c.star().unwrap().encode(), "2");
    }
}
