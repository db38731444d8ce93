//! Laurent polynomials in `t` with half-integer exponents and big-integer
//! coefficients, plus small matrices over that ring.
//!
//! Exponents are stored doubled: the key `e` in the term map stands for
//! `t^(e/2)`. Zero coefficients are never stored, so the zero polynomial is
//! the empty map and structural equality is ring equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix rows have unequal lengths")]
    RaggedRows,
    #[error("polynomial has half-integer exponents; this evaluation needs integral exponents")]
    NonIntegral,
    #[error("modulus must be positive, got {0}")]
    InvalidModulus(BigInt),
    #[error("image {image} of t is not a unit modulo {modulus}")]
    ImageNotUnit { modulus: BigInt, image: BigInt },
    #[error("cannot parse polynomial at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

/// A sign `±1`, used for units of the Laurent ring and for crossing signs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn of(x: &BigInt) -> Sign {
        if x.is_negative() {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// An exponent in `(1/2)·ℤ`, stored as its numerator over 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Exponent(i64);

impl Exponent {
    pub const ZERO: Exponent = Exponent(0);

    pub const fn from_halves(halves: i64) -> Self {
        Exponent(halves)
    }

    pub const fn from_integer(n: i64) -> Self {
        Exponent(2 * n)
    }

    pub const fn halves(self) -> i64 {
        self.0
    }

    pub const fn is_integral(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn as_integer(self) -> Option<i64> {
        self.is_integral().then_some(self.0 / 2)
    }
}

impl Add for Exponent {
    type Output = Exponent;
    fn add(self, rhs: Exponent) -> Exponent {
        Exponent(self.0 + rhs.0)
    }
}

impl Sub for Exponent {
    type Output = Exponent;
    fn sub(self, rhs: Exponent) -> Exponent {
        Exponent(self.0 - rhs.0)
    }
}

impl Neg for Exponent {
    type Output = Exponent;
    fn neg(self) -> Exponent {
        Exponent(-self.0)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_integer() {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "{}/2", self.0),
        }
    }
}

/// A unit `sign · t^shift` of the Laurent ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Unit {
    pub sign: Sign,
    pub shift: Exponent,
}

/// Where to evaluate a polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalPoint {
    /// `t = 1` (equivalently `t^(1/2) = 1`).
    One,
    /// `t = -1`; integral polynomials only.
    MinusOne,
    /// The ring map into `ℤ/modulus` sending `t` to `image`.
    Residue { modulus: BigInt, image: BigInt },
}

/// Laurent polynomial in `t^(1/2)` over ℤ.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct HalfLaurent {
    terms: BTreeMap<i64, BigInt>,
}

impl HalfLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, Exponent::ZERO)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(1, Exponent::from_integer(1))
    }

    pub fn monomial(c: impl Into<BigInt>, e: Exponent) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    /// Builds `Σ coeffs[j]·t^(low + j)` with integer exponents.
    pub fn from_coeffs(low: i64, coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (j, &c) in coeffs.iter().enumerate() {
            p.add_term(Exponent::from_integer(low + j as i64), BigInt::from(c));
        }
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, e: Exponent, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e.halves()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e.halves());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Exponent, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (Exponent(e), c))
    }

    pub fn coefficient(&self, e: Exponent) -> BigInt {
        self.terms.get(&e.halves()).cloned().unwrap_or_default()
    }

    pub fn min_exponent(&self) -> Option<Exponent> {
        self.terms.keys().next().map(|&e| Exponent(e))
    }

    pub fn max_exponent(&self) -> Option<Exponent> {
        self.terms.keys().next_back().map(|&e| Exponent(e))
    }

    /// Coefficient of the highest power, zero for the zero polynomial.
    pub fn leading_coefficient(&self) -> BigInt {
        self.terms.values().next_back().cloned().unwrap_or_default()
    }

    pub fn trailing_coefficient(&self) -> BigInt {
        self.terms.values().next().cloned().unwrap_or_default()
    }

    /// Multiplies by the monomial `t^e`.
    pub fn shift(&self, e: Exponent) -> Self {
        HalfLaurent { terms: self.terms.iter().map(|(&k, c)| (k + e.halves(), c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        HalfLaurent { terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect() }
    }

    pub fn mul_unit(&self, unit: Unit) -> Self {
        let shifted = self.shift(unit.shift);
        match unit.sign {
            Sign::Plus => shifted,
            Sign::Minus => -shifted,
        }
    }

    /// Substitutes `t ↦ t^(-1)`.
    pub fn mirror(&self) -> Self {
        HalfLaurent { terms: self.terms.iter().map(|(&k, c)| (-k, c.clone())).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Returns the unit `u` with `self = u · other`, if one exists.
    ///
    /// Two zero polynomials are related by the trivial unit.
    pub fn equals_up_to_unit(&self, other: &HalfLaurent) -> Option<Unit> {
        match (self.min_exponent(), other.min_exponent()) {
            (None, None) => Some(Unit { sign: Sign::Plus, shift: Exponent::ZERO }),
            (Some(a), Some(b)) => {
                if self.num_terms() != other.num_terms() {
                    return None;
                }
                let sign = Sign::of(&self.trailing_coefficient()) * Sign::of(&other.trailing_coefficient());
                let unit = Unit { sign, shift: a - b };
                (other.mul_unit(unit) == *self).then_some(unit)
            }
            _ => None,
        }
    }

    /// Canonical representative of the associate class: lowest exponent 0
    /// and positive leading coefficient. Zero maps to zero.
    pub fn normalized(&self) -> Self {
        let Some(low) = self.min_exponent() else {
            return Self::zero();
        };
        let p = self.shift(-low);
        if p.leading_coefficient().is_negative() {
            -p
        } else {
            p
        }
    }

    pub fn evaluate(&self, point: &EvalPoint) -> Result<BigInt, LaurentError> {
        match point {
            EvalPoint::One => Ok(self.terms.values().sum()),
            EvalPoint::MinusOne => {
                if !self.is_integral() {
                    return Err(LaurentError::NonIntegral);
                }
                Ok(self.terms.iter().map(|(&k, c)| if (k / 2).is_even() { c.clone() } else { -c }).sum())
            }
            EvalPoint::Residue { modulus, image } => self.evaluate_mod(modulus, image),
        }
    }

    fn evaluate_mod(&self, modulus: &BigInt, image: &BigInt) -> Result<BigInt, LaurentError> {
        if !modulus.is_positive() {
            return Err(LaurentError::InvalidModulus(modulus.clone()));
        }
        let c = image.mod_floor(modulus);
        let gcd = c.extended_gcd(modulus);
        if !gcd.gcd.is_one() {
            return Err(LaurentError::ImageNotUnit { modulus: modulus.clone(), image: image.clone() });
        }
        if !self.is_integral() {
            return Err(LaurentError::NonIntegral);
        }
        let inverse = gcd.x.mod_floor(modulus);
        let mut acc = BigInt::zero();
        for (&k, coeff) in &self.terms {
            let e = k / 2;
            let base = if e >= 0 { &c } else { &inverse };
            let power = base.modpow(&BigInt::from(e.unsigned_abs()), modulus);
            acc = (acc + coeff * power).mod_floor(modulus);
        }
        Ok(acc)
    }
}

impl From<i64> for HalfLaurent {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&HalfLaurent> for HalfLaurent {
    fn add_assign(&mut self, rhs: &HalfLaurent) {
        for (&k, c) in &rhs.terms {
            self.add_term(Exponent(k), c.clone());
        }
    }
}

impl SubAssign<&HalfLaurent> for HalfLaurent {
    fn sub_assign(&mut self, rhs: &HalfLaurent) {
        for (&k, c) in &rhs.terms {
            self.add_term(Exponent(k), -c);
        }
    }
}

impl Add<&HalfLaurent> for &HalfLaurent {
    type Output = HalfLaurent;
    fn add(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&HalfLaurent> for &HalfLaurent {
    type Output = HalfLaurent;
    fn sub(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&HalfLaurent> for &HalfLaurent {
    type Output = HalfLaurent;
    fn mul(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = HalfLaurent::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                out.add_term(Exponent(a + b), ca * cb);
            }
        }
        out
    }
}

impl Neg for &HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        HalfLaurent { terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect() }
    }
}

impl Neg for HalfLaurent {
    type Output = HalfLaurent;
    fn neg(mut self) -> HalfLaurent {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<HalfLaurent> for HalfLaurent {
            type Output = HalfLaurent;
            fn $method(self, rhs: HalfLaurent) -> HalfLaurent {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&HalfLaurent> for HalfLaurent {
            type Output = HalfLaurent;
            fn $method(self, rhs: &HalfLaurent) -> HalfLaurent {
                (&self).$method(rhs)
            }
        }
        impl $tr<HalfLaurent> for &HalfLaurent {
            type Output = HalfLaurent;
            fn $method(self, rhs: HalfLaurent) -> HalfLaurent {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl std::iter::Sum for HalfLaurent {
    fn sum<I: Iterator<Item = HalfLaurent>>(iter: I) -> Self {
        iter.fold(HalfLaurent::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

/// Renders terms by decreasing exponent as `c*t^(e/2)`, e.g.
/// `-1*t^(-9/2) - 1*t^(-5/2)` or `2*t^2 - 5*t + 2`.
impl fmt::Display for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (&k, c)) in self.terms.iter().rev().enumerate() {
            let magnitude = c.abs();
            match (n, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if k == 0 {
                write!(f, "{magnitude}")?;
                continue;
            }
            write!(f, "{magnitude}*t")?;
            if k % 2 != 0 {
                write!(f, "^({k}/2)")?;
            } else if k != 2 {
                write!(f, "^{}", k / 2)?;
            }
        }
        Ok(())
    }
}

impl FromStr for HalfLaurent {
    type Err = LaurentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Parser { src: s.as_bytes(), pos: 0 }.polynomial()
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> LaurentError {
        LaurentError::Parse { position: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<(), LaurentError> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", b as char)))
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.src[start..self.pos]).ok()?.parse().ok()
    }

    fn signed_int(&mut self) -> Result<i64, LaurentError> {
        let negative = self.eat(b'-');
        let n = self.digits().ok_or_else(|| self.error("expected an integer"))?;
        let n: i64 = n.try_into().map_err(|_| self.error("exponent out of range"))?;
        Ok(if negative { -n } else { n })
    }

    fn polynomial(mut self) -> Result<HalfLaurent, LaurentError> {
        let mut p = HalfLaurent::zero();
        let mut negative = self.eat(b'-');
        loop {
            let (e, c) = self.term()?;
            p.add_term(e, if negative { -c } else { c });
            if self.peek().is_none() {
                return Ok(p);
            }
            negative = if self.eat(b'+') {
                false
            } else if self.eat(b'-') {
                true
            } else {
                return Err(self.error("expected '+' or '-'"));
            };
        }
    }

    fn term(&mut self) -> Result<(Exponent, BigInt), LaurentError> {
        let coeff = self.digits();
        let has_var = match coeff {
            Some(_) => self.eat(b'*'),
            None => true,
        };
        if !has_var {
            return Ok((Exponent::ZERO, coeff.unwrap_or_default()));
        }
        self.expect(b't')?;
        let coeff = coeff.unwrap_or_else(BigInt::one);
        if !self.eat(b'^') {
            return Ok((Exponent::from_integer(1), coeff));
        }
        if self.eat(b'(') {
            let num = self.signed_int()?;
            let e = if self.eat(b'/') {
                if self.signed_int()? != 2 {
                    return Err(self.error("only denominators of 2 are supported"));
                }
                Exponent::from_halves(num)
            } else {
                Exponent::from_integer(num)
            };
            self.expect(b')')?;
            Ok((e, coeff))
        } else {
            Ok((Exponent::from_integer(self.signed_int()?), coeff))
        }
    }
}

/// Rectangular matrix over the Laurent ring, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<HalfLaurent>,
}

impl LaurentMatrix {
    pub fn from_rows(rows: Vec<Vec<HalfLaurent>>) -> Result<Self, LaurentError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LaurentError::RaggedRows);
        }
        Ok(LaurentMatrix { rows: rows.len(), cols, entries: rows.into_iter().flatten().collect() })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        LaurentMatrix { rows, cols, entries: vec![HalfLaurent::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.entries[i * n + i] = HalfLaurent::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &HalfLaurent {
        &self.entries[r * self.cols + c]
    }

    pub fn entries(&self) -> &[HalfLaurent] {
        &self.entries
    }

    /// Determinant of the submatrix on the given rows and columns.
    ///
    /// Cofactor expansion; intended for the 2×2 to 4×4 matrices used here.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> HalfLaurent {
        debug_assert_eq!(rows.len(), cols.len());
        match rows.len() {
            0 => HalfLaurent::one(),
            1 => self.get(rows[0], cols[0]).clone(),
            _ => {
                let mut acc = HalfLaurent::zero();
                let rest_rows = &rows[1..];
                for (j, &c) in cols.iter().enumerate() {
                    let entry = self.get(rows[0], c);
                    if entry.is_zero() {
                        continue;
                    }
                    let rest_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                    let term = entry * self.minor(rest_rows, &rest_cols);
                    if j % 2 == 0 {
                        acc += &term;
                    } else {
                        acc -= &term;
                    }
                }
                acc
            }
        }
    }

    pub fn determinant(&self) -> Result<HalfLaurent, LaurentError> {
        if !self.is_square() {
            return Err(LaurentError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let idx: Vec<usize> = (0..self.rows).collect();
        Ok(self.minor(&idx, &idx))
    }
}

impl fmt::Display for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> HalfLaurent {
        s.parse().unwrap()
    }

    fn half(h: i64) -> Exponent {
        Exponent::from_halves(h)
    }

    #[test]
    fn product_of_alexander_factors() {
        let a = HalfLaurent::from_coeffs(0, &[-1, 2]);
        let b = HalfLaurent::from_coeffs(0, &[-2, 1]);
        assert_eq!(&a * &b, HalfLaurent::from_coeffs(0, &[2, -5, 2]));
    }

    #[test]
    fn difference_of_squares_in_half_powers() {
        let a = HalfLaurent::from_terms([(half(1), 1), (half(-1), -1)]);
        let b = HalfLaurent::from_terms([(half(1), 1), (half(-1), 1)]);
        assert_eq!(&a * &b, HalfLaurent::from_coeffs(-1, &[-1, 0, 1]));
    }

    #[test]
    fn additive_identity() {
        let q = p("2*t^2 - 5*t + 2");
        assert_eq!(&q + &HalfLaurent::zero(), q);
    }

    #[test]
    fn mirror_examples() {
        assert_eq!(p("2*t^2 - 5*t + 2").mirror(), p("2 - 5*t^-1 + 2*t^-2"));
        assert_eq!(HalfLaurent::monomial(1, half(-5)).mirror(), HalfLaurent::monomial(1, half(5)));
    }

    #[test]
    fn unit_detection() {
        let q = p("2*t^2 - 5*t + 2");
        let negated = -(HalfLaurent::from_coeffs(0, &[-1, 2]) * HalfLaurent::from_coeffs(0, &[-2, 1]));
        assert_eq!(negated.equals_up_to_unit(&q), Some(Unit { sign: Sign::Minus, shift: Exponent::ZERO }));
        assert_eq!(q.equals_up_to_unit(&q), Some(Unit { sign: Sign::Plus, shift: Exponent::ZERO }));
        let shifted = &q * &HalfLaurent::t();
        assert_eq!(shifted.equals_up_to_unit(&q), Some(Unit { sign: Sign::Plus, shift: half(2) }));
        assert_eq!(p("2*t^2 - 5*t + 3").equals_up_to_unit(&q), None);
        assert_eq!(HalfLaurent::zero().equals_up_to_unit(&q), None);
    }

    #[test]
    fn evaluation_points() {
        let q = p("2*t^2 - 5*t + 2");
        assert_eq!(q.evaluate(&EvalPoint::MinusOne).unwrap(), BigInt::from(9));
        assert_eq!(q.evaluate(&EvalPoint::One).unwrap(), BigInt::from(-1));
        let r = EvalPoint::Residue { modulus: 3.into(), image: 2.into() };
        assert_eq!(p("3*t - 3").evaluate(&r).unwrap(), BigInt::zero());
        // t^-1 ↦ 2^-1 = 2 (mod 3)
        assert_eq!(p("1*t^-1").evaluate(&r).unwrap(), BigInt::from(2));
    }

    #[test]
    fn evaluation_rejects_half_exponents() {
        let q = HalfLaurent::monomial(1, half(-1));
        assert_eq!(q.evaluate(&EvalPoint::MinusOne), Err(LaurentError::NonIntegral));
        let r = EvalPoint::Residue { modulus: 3.into(), image: 2.into() };
        assert_eq!(q.evaluate(&r), Err(LaurentError::NonIntegral));
        assert_eq!(q.evaluate(&EvalPoint::One).unwrap(), BigInt::one());
        let bad = EvalPoint::Residue { modulus: 4.into(), image: 2.into() };
        assert!(matches!(p("t").evaluate(&bad), Err(LaurentError::ImageNotUnit { .. })));
    }

    #[test]
    fn determinants() {
        let m = LaurentMatrix::from_rows(vec![vec![HalfLaurent::zero(), p("2*t - 1")], vec![p("t - 2"), p("3*t - 3")]])
            .unwrap();
        assert_eq!(m.determinant().unwrap(), -(p("2*t - 1") * p("t - 2")));
        assert_eq!(LaurentMatrix::identity(2).determinant().unwrap(), HalfLaurent::one());

        let (s, i) = (2, 4);
        let m = LaurentMatrix::from_rows(vec![
            vec![HalfLaurent::zero(), HalfLaurent::from_coeffs(0, &[-s, s + 1])],
            vec![HalfLaurent::from_coeffs(0, &[-(s + 1), s]), HalfLaurent::from_coeffs(0, &[-(s + i + 1), s + i + 1])],
        ])
        .unwrap();
        assert_eq!(m.determinant().unwrap(), p("-6*t^2 + 13*t - 6"));
        assert!(matches!(LaurentMatrix::zero(2, 3).determinant(), Err(LaurentError::NotSquare { .. })));
    }

    #[test]
    fn three_by_three_determinant() {
        let m = LaurentMatrix::from_rows(vec![
            vec![p("t"), 1.into(), 0.into()],
            vec![1.into(), p("t"), 1.into()],
            vec![0.into(), 1.into(), p("t")],
        ])
        .unwrap();
        assert_eq!(m.determinant().unwrap(), p("t^3 - 2*t"));
    }

    #[test]
    fn rendering() {
        assert_eq!(HalfLaurent::zero().to_string(), "0");
        assert_eq!(HalfLaurent::from_coeffs(0, &[2, -5, 2]).to_string(), "2*t^2 - 5*t + 2");
        assert_eq!(HalfLaurent::monomial(-2, Exponent::from_integer(-7)).to_string(), "-2*t^-7");
        assert_eq!(HalfLaurent::monomial(-1, half(-5)).to_string(), "-1*t^(-5/2)");
        let v = HalfLaurent::from_terms([(half(-9), -1), (half(-5), -1), (half(-3), 1), (half(-1), -1)]);
        assert_eq!(v.to_string(), "-1*t^(-1/2) + 1*t^(-3/2) - 1*t^(-5/2) - 1*t^(-9/2)");
    }

    #[test]
    fn parse_errors() {
        assert!("2*t^".parse::<HalfLaurent>().is_err());
        assert!("2*t^(1/3)".parse::<HalfLaurent>().is_err());
        assert!("2 3".parse::<HalfLaurent>().is_err());
        assert!("".parse::<HalfLaurent>().is_err());
        assert_eq!(p("0"), HalfLaurent::zero());
        assert_eq!(p("t - t"), HalfLaurent::zero());
    }

    fn arb_poly() -> impl Strategy<Value = HalfLaurent> {
        prop::collection::vec((-8i64..8, -20i64..20), 0..6)
            .prop_map(|terms| HalfLaurent::from_terms(terms.into_iter().map(|(e, c)| (half(e), c))))
    }

    fn arb_integral() -> impl Strategy<Value = HalfLaurent> {
        prop::collection::vec((-4i64..4, -20i64..20), 0..6)
            .prop_map(|terms| HalfLaurent::from_terms(terms.into_iter().map(|(e, c)| (Exponent::from_integer(e), c))))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, HalfLaurent::zero());
            prop_assert_eq!(&a * &HalfLaurent::one(), a.clone());
        }

        #[test]
        fn no_zero_coefficients_stored(a in arb_poly(), b in arb_poly()) {
            let prod = &a * &b;
            prop_assert!(prod.terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn display_parse_round_trip(a in arb_poly()) {
            prop_assert_eq!(a.to_string().parse::<HalfLaurent>().unwrap(), a);
        }

        #[test]
        fn mirror_is_involution(a in arb_poly()) {
            prop_assert_eq!(a.mirror().mirror(), a);
        }

        #[test]
        fn unit_relation_is_an_equivalence(a in arb_poly(), s1 in -6i64..6, s2 in -6i64..6, n1: bool, n2: bool) {
            prop_assume!(!a.is_zero());
            let sign = |n: bool| if n { Sign::Minus } else { Sign::Plus };
            let b = a.mul_unit(Unit { sign: sign(n1), shift: half(s1) });
            let c = b.mul_unit(Unit { sign: sign(n2), shift: half(s2) });
            prop_assert!(a.equals_up_to_unit(&a).is_some());
            prop_assert!(b.equals_up_to_unit(&a).is_some());
            prop_assert!(a.equals_up_to_unit(&b).is_some());
            prop_assert!(c.equals_up_to_unit(&a).is_some());
            let u = b.equals_up_to_unit(&a).unwrap();
            prop_assert_eq!(a.mul_unit(u), b);
        }

        #[test]
        fn evaluation_is_multiplicative(a in arb_integral(), b in arb_integral(), n in 2i64..30, c in 1i64..30) {
            let prod = &a * &b;
            for point in [EvalPoint::One, EvalPoint::MinusOne] {
                prop_assert_eq!(prod.evaluate(&point).unwrap(), a.evaluate(&point).unwrap() * b.evaluate(&point).unwrap());
            }
            let point = EvalPoint::Residue { modulus: n.into(), image: c.into() };
            if let (Ok(x), Ok(y)) = (a.evaluate(&point), b.evaluate(&point)) {
                prop_assert_eq!(prod.evaluate(&point).unwrap(), (x * y).mod_floor(&BigInt::from(n)));
            }
        }
    }
}
