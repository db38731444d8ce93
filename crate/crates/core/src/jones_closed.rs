//! Closed forms and skein recurrences for the Jones polynomials of
//! `T(2, 2k)` and of `P(-(2s+1), 2s+1, 2i+1)`.
//!
//! Everything is assembled term by term in exact arithmetic. Sums over an
//! empty index range are zero.

use std::collections::HashSet;
use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use thiserror::Error;

use crate::laurent::{Exponent, HalfLaurent};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JonesError {
    #[error("torus index k must be at least 1, got {0}")]
    TorusIndex(i64),
    #[error("(s, i) = ({s}, {i}) is outside the closed-form domain s >= 1, i >= {min_i}")]
    PretzelDomain { s: i64, i: i64, min_i: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    ClosedForm,
    SkeinRecurrence,
    Bracket,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::ClosedForm => "closed",
            Provenance::SkeinRecurrence => "skein",
            Provenance::Bracket => "bracket",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JonesValue {
    pub polynomial: HalfLaurent,
    pub provenance: Provenance,
}

impl JonesValue {
    fn closed(polynomial: HalfLaurent) -> Self {
        JonesValue { polynomial, provenance: Provenance::ClosedForm }
    }

    fn skein(polynomial: HalfLaurent) -> Self {
        JonesValue { polynomial, provenance: Provenance::SkeinRecurrence }
    }
}

fn t_pow(n: i64) -> HalfLaurent {
    HalfLaurent::monomial(1, Exponent::from_integer(n))
}

fn t_half(halves: i64) -> HalfLaurent {
    HalfLaurent::monomial(1, Exponent::from_halves(halves))
}

/// `t^(1/2) − t^(−1/2)`.
fn sqrt_t_difference() -> HalfLaurent {
    t_half(1) - t_half(-1)
}

/// `−t^(−1/2) · (t^(−2k) + t^(−2k+2) + Σ_{j=0}^{2k−3} (−1)^j t^(−j))`.
pub fn torus_jones(k: i64) -> Result<JonesValue, JonesError> {
    if k < 1 {
        return Err(JonesError::TorusIndex(k));
    }
    let mut inner = t_pow(-2 * k) + t_pow(-2 * k + 2);
    for j in 0..=2 * k - 3 {
        inner += &HalfLaurent::monomial(if j % 2 == 0 { 1 } else { -1 }, Exponent::from_integer(-j));
    }
    Ok(JonesValue::closed(-(t_half(-1) * inner)))
}

/// The Hopf value `−t^(−5/2) − t^(−1/2)` pushed up by
/// `V(T(2,2k+2)) = t⁻² V(T(2,2k)) + t⁻¹ (t^(−1/2) − t^(1/2))`.
pub fn torus_jones_skein(k: i64) -> Result<JonesValue, JonesError> {
    if k < 1 {
        return Err(JonesError::TorusIndex(k));
    }
    let step = t_pow(-1) * (t_half(-1) - t_half(1));
    let mut v = -(t_half(-5) + t_half(-1));
    for _ in 1..k {
        v = t_pow(-2) * v + &step;
    }
    Ok(JonesValue::skein(v))
}

/// Whether `t⁻¹ v_k − t v_next + (t^(−1/2) − t^(1/2)) = 0`.
pub fn torus_recurrence_holds(v_k: &HalfLaurent, v_next: &HalfLaurent) -> bool {
    let lhs = t_pow(-1) * v_k - t_pow(1) * v_next - sqrt_t_difference();
    lhs.is_zero()
}

/// Checks the skein relation between the closed forms at `k` and `k + 1`.
pub fn torus_jones_recurrence_check(k: i64) -> bool {
    match (torus_jones(k), torus_jones(k + 1)) {
        (Ok(a), Ok(b)) => torus_recurrence_holds(&a.polynomial, &b.polynomial),
        _ => false,
    }
}

/// `t^(−2i−4) − t^(−2i−3) + t^(−2i−2) − 2t^(−2i−1) + t^(−2i) − t^(−2i+1) + t^(−2i+2) + 1`
/// for `P(-3, 3, 2i+1)`, `i ≥ 3`.
pub fn pretzel_jones_s1(i: i64) -> Result<JonesValue, JonesError> {
    if i < 3 {
        return Err(JonesError::PretzelDomain { s: 1, i, min_i: 3 });
    }
    let low = -2 * i - 4;
    Ok(JonesValue::closed(HalfLaurent::from_coeffs(low, &[1, -1, 1, -2, 1, -1, 1]) + HalfLaurent::one()))
}

/// The bracketed expression of the general closed form, without any domain
/// check: `1 + t^(−2i−1) [t^(2s+1) + t^(−2s−1) − (t + t⁻¹) − 2s
/// + Σ_{j=1}^{2s} (−1)^(j+1) (2s+1−j)(t^j + t^(−j))]`. At `s = 0` this is 1.
fn family_closed_form(s: i64, i: i64) -> HalfLaurent {
    let mut bracket = t_pow(2 * s + 1) + t_pow(-2 * s - 1) - t_pow(1) - t_pow(-1) - HalfLaurent::constant(2 * s);
    for j in 1..=2 * s {
        let sign = if j % 2 == 1 { 1 } else { -1 };
        let weight = BigInt::from(sign * (2 * s + 1 - j));
        bracket += &(t_pow(j) + t_pow(-j)).scale(&weight);
    }
    HalfLaurent::one() + bracket.shift(Exponent::from_integer(-2 * i - 1))
}

fn check_family_domain(s: i64, i: i64) -> Result<(), JonesError> {
    if s < 1 || i < s + 2 {
        return Err(JonesError::PretzelDomain { s, i, min_i: s.max(1) + 2 });
    }
    Ok(())
}

/// Closed form for `P(-(2s+1), 2s+1, 2i+1)`, `s ≥ 1`, `i ≥ s + 2`.
pub fn pretzel_jones(s: i64, i: i64) -> Result<JonesValue, JonesError> {
    check_family_domain(s, i)?;
    Ok(JonesValue::closed(family_closed_form(s, i)))
}

/// As [`pretzel_jones`] but also accepts `i = s + 1`. The formula is not
/// claimed there; it is kept so the edge can be compared against the bracket.
pub fn pretzel_jones_extended(s: i64, i: i64) -> Result<JonesValue, JonesError> {
    if s < 1 || i < s + 1 {
        return Err(JonesError::PretzelDomain { s, i, min_i: s.max(1) + 1 });
    }
    Ok(JonesValue::closed(family_closed_form(s, i)))
}

/// `t⁻¹ (t^(1/2) − t^(−1/2)) (V(T(2, 2i+2σ)) − V(T(2, 2i−2σ)))`: the change
/// in `V` when the first two tassels grow from `∓(2σ−1)` to `∓(2σ+1)`.
fn skein_step(sigma: i64, i: i64) -> Result<HalfLaurent, JonesError> {
    let wide = torus_jones(i + sigma)?.polynomial;
    let narrow = torus_jones(i - sigma)?.polynomial;
    Ok(t_pow(-1) * sqrt_t_difference() * (wide - narrow))
}

/// Telescopes the level-by-level skein recurrence from the unknot
/// `P(-1, 1, 2i+1)` up to level `s`. Requires `i ≥ s + 2`.
pub fn pretzel_jones_skein(s: i64, i: i64) -> Result<JonesValue, JonesError> {
    check_family_domain(s, i)?;
    pretzel_jones_skein_extended(s, i)
}

/// As [`pretzel_jones_skein`] but also accepts `i = s + 1`, where the last
/// step involves the Hopf link `T(2, 2)`.
pub fn pretzel_jones_skein_extended(s: i64, i: i64) -> Result<JonesValue, JonesError> {
    if s < 1 || i < s + 1 {
        return Err(JonesError::PretzelDomain { s, i, min_i: s.max(1) + 1 });
    }
    let mut v = HalfLaurent::one();
    for sigma in 1..=s {
        v += &skein_step(sigma, i)?;
    }
    Ok(JonesValue::skein(v))
}

/// Whether the closed forms at levels `s` and `s − 1` differ by exactly one
/// skein step (the level-0 closed form is the unknot's 1).
pub fn family_recurrence_holds(s: i64, i: i64) -> Result<bool, JonesError> {
    check_family_domain(s, i)?;
    let diff = family_closed_form(s, i) - family_closed_form(s - 1, i);
    Ok(diff == skein_step(s, i)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinctnessReport {
    pub s: i64,
    /// `(i, lowest exponent of V)` for each `i` in the range.
    pub min_exponents: Vec<(i64, Exponent)>,
    pub all_distinct: bool,
    pub strictly_decreasing: bool,
}

pub fn family_distinct(s: i64, range: RangeInclusive<i64>) -> Result<DistinctnessReport, JonesError> {
    let mut seen = HashSet::new();
    let mut all_distinct = true;
    let mut min_exponents = Vec::new();
    for i in range {
        let v = pretzel_jones(s, i)?.polynomial;
        min_exponents.push((i, v.min_exponent().expect("nonzero")));
        all_distinct &= seen.insert(v);
    }
    let strictly_decreasing = min_exponents.windows(2).all(|w| w[1].1 < w[0].1);
    Ok(DistinctnessReport { s, min_exponents, all_distinct, strictly_decreasing })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::EvalPoint;

    fn p(s: &str) -> HalfLaurent {
        s.parse().unwrap()
    }

    #[test]
    fn torus_closed_forms() {
        assert_eq!(torus_jones(1).unwrap().polynomial, p("-1*t^(-1/2) - 1*t^(-5/2)"));
        assert_eq!(torus_jones(2).unwrap().polynomial, p("-1*t^(-9/2) - 1*t^(-5/2) + 1*t^(-3/2) - 1*t^(-1/2)"));
        // k = 3 from one application of the recurrence to k = 2
        let expected = -(t_half(-1) * p("t^-6 + t^-4 + 1 - t^-1 + t^-2 - t^-3"));
        assert_eq!(torus_jones(3).unwrap().polynomial, expected);
        assert_eq!(torus_jones(0), Err(JonesError::TorusIndex(0)));
    }

    #[test]
    fn torus_skein_matches_closed_form() {
        for k in 1..=20 {
            assert_eq!(torus_jones_skein(k).unwrap().polynomial, torus_jones(k).unwrap().polynomial);
        }
    }

    #[test]
    fn torus_recurrence() {
        for k in 1..=30 {
            assert!(torus_jones_recurrence_check(k), "k={k}");
        }
        let v1 = torus_jones(1).unwrap().polynomial;
        let v2 = torus_jones(2).unwrap().polynomial + HalfLaurent::one();
        assert!(!torus_recurrence_holds(&v1, &v2));
    }

    #[test]
    fn s1_closed_form() {
        assert_eq!(pretzel_jones_s1(3).unwrap().polynomial, p("t^-10 - t^-9 + t^-8 - 2*t^-7 + t^-6 - t^-5 + t^-4 + 1"));
        let v = pretzel_jones_s1(3).unwrap().polynomial;
        assert_eq!(v.evaluate(&EvalPoint::MinusOne).unwrap(), BigInt::from(9));
        assert_eq!(pretzel_jones_s1(4).unwrap().polynomial.min_exponent(), Some(Exponent::from_integer(-12)));
        assert!(pretzel_jones_s1(2).is_err());
    }

    #[test]
    fn general_form_specializes() {
        for i in 3..=30 {
            assert_eq!(pretzel_jones(1, i).unwrap().polynomial, pretzel_jones_s1(i).unwrap().polynomial);
        }
    }

    #[test]
    fn general_form_s2_i4() {
        let inner = p("t^5 + t^-5 - t - t^-1 - 4") + p("t + t^-1").scale(&BigInt::from(4))
            - p("t^2 + t^-2").scale(&BigInt::from(3))
            + p("t^3 + t^-3").scale(&BigInt::from(2))
            - p("t^4 + t^-4");
        let expected = HalfLaurent::one() + inner.shift(Exponent::from_integer(-9));
        let v = pretzel_jones(2, 4).unwrap().polynomial;
        assert_eq!(v, expected);
        assert_eq!(v.evaluate(&EvalPoint::MinusOne).unwrap(), BigInt::from(25));
    }

    #[test]
    fn skein_matches_closed_forms() {
        assert_eq!(pretzel_jones_skein(1, 3).unwrap().polynomial, pretzel_jones_s1(3).unwrap().polynomial);
        assert_eq!(pretzel_jones_skein(2, 4).unwrap().polynomial, pretzel_jones(2, 4).unwrap().polynomial);
        assert_eq!(pretzel_jones_skein(3, 5).unwrap().polynomial, pretzel_jones(3, 5).unwrap().polynomial);
    }

    #[test]
    fn domains() {
        assert!(pretzel_jones(2, 3).is_err());
        assert!(pretzel_jones(0, 5).is_err());
        assert!(pretzel_jones_skein(2, 3).is_err());
        assert!(pretzel_jones_skein_extended(2, 3).is_ok());
        assert!(pretzel_jones_skein_extended(2, 2).is_err());
    }

    #[test]
    fn distinctness() {
        let r = family_distinct(1, 3..=100).unwrap();
        assert!(r.all_distinct && r.strictly_decreasing);
        assert_eq!(r.min_exponents[0], (3, Exponent::from_integer(-10)));
        let r = family_distinct(2, 4..=100).unwrap();
        assert!(r.all_distinct && r.strictly_decreasing);
        let r = family_distinct(2, 7..=7).unwrap();
        assert!(r.all_distinct && r.strictly_decreasing);
    }

    #[test]
    fn values_at_one() {
        for s in 1..=4 {
            for i in s + 2..s + 10 {
                let v = pretzel_jones(s, i).unwrap().polynomial;
                assert_eq!(v.evaluate(&EvalPoint::One).unwrap(), BigInt::from(1));
            }
        }
        for k in 1..=10 {
            assert_eq!(torus_jones(k).unwrap().polynomial.evaluate(&EvalPoint::One).unwrap(), BigInt::from(-2));
        }
    }
}
