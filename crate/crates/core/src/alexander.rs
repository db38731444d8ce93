//! Seifert matrices, presentation matrices and Alexander polynomials of
//! pretzel knots `P(p, q, r)` with three odd tassels.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::laurent::{HalfLaurent, LaurentMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("tassel {0} is even; only odd tassels are supported")]
    EvenTassel(i64),
    #[error("tassels must be nonzero")]
    ZeroTassel,
    #[error("family parameter s must be at least 1, got {0}")]
    FamilyParameter(i64),
    #[error("torus link T(2,{0}) is out of scope; the twist count must be even and at least 2")]
    TorusTwists(i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlexanderError {
    #[error("the zero polynomial has no leading coefficient")]
    ZeroPolynomial,
    #[error("Alexander polynomial must have integral exponents")]
    NonIntegral,
}

/// A pretzel knot with three odd, nonzero tassels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PretzelSpec {
    tassels: [i64; 3],
}

impl PretzelSpec {
    pub fn new(p: i64, q: i64, r: i64) -> Result<Self, SpecError> {
        for x in [p, q, r] {
            if x == 0 {
                return Err(SpecError::ZeroTassel);
            }
            if x % 2 == 0 {
                return Err(SpecError::EvenTassel(x));
            }
        }
        Ok(PretzelSpec { tassels: [p, q, r] })
    }

    /// `P(-(2s+1), 2s+1, 2i+1)`.
    pub fn family(s: i64, i: i64) -> Result<Self, SpecError> {
        if s < 1 {
            return Err(SpecError::FamilyParameter(s));
        }
        Self::new(-(2 * s + 1), 2 * s + 1, 2 * i + 1)
    }

    pub fn tassels(&self) -> [i64; 3] {
        self.tassels
    }

    pub fn crossing_count(&self) -> usize {
        self.tassels.iter().map(|t| t.unsigned_abs() as usize).sum()
    }

    /// Recovers `(s, i)` when the spec has the shape `P(-(2s+1), 2s+1, 2i+1)`.
    pub fn as_family(&self) -> Option<(i64, i64)> {
        let [p, q, r] = self.tassels;
        (q >= 3 && p == -q).then(|| ((q - 1) / 2, (r - 1).div_euclid(2)))
    }
}

impl fmt::Display for PretzelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [p, q, r] = self.tassels;
        write!(f, "P({p},{q},{r})")
    }
}

/// Integer Seifert matrix of the standard genus-1 surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeifertMatrix2(pub [[i64; 2]; 2]);

impl SeifertMatrix2 {
    /// `det(V - Vᵀ)`; equals 1 for a genus-1 Seifert pairing.
    pub fn skew_determinant(&self) -> i64 {
        let v = self.0;
        let off = v[0][1] - v[1][0];
        off * off
    }

    /// `tV - Vᵀ`.
    pub fn presentation_matrix(&self) -> LaurentMatrix {
        let v = self.0;
        let entry = |r: usize, c: usize| HalfLaurent::from_coeffs(0, &[-v[c][r], v[r][c]]);
        LaurentMatrix::from_rows(vec![vec![entry(0, 0), entry(0, 1)], vec![entry(1, 0), entry(1, 1)]])
            .expect("2x2 rows")
    }
}

impl fmt::Display for SeifertMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.0;
        write!(f, "[[{}, {}], [{}, {}]]", v[0][0], v[0][1], v[1][0], v[1][1])
    }
}

/// `V = [[(p+q)/2, (q+1)/2], [(q-1)/2, (q+r)/2]]`.
pub fn seifert_matrix(spec: &PretzelSpec) -> SeifertMatrix2 {
    let [p, q, r] = spec.tassels;
    SeifertMatrix2([[(p + q) / 2, (q + 1) / 2], [(q - 1) / 2, (q + r) / 2]])
}

pub fn presentation_matrix(spec: &PretzelSpec) -> LaurentMatrix {
    seifert_matrix(spec).presentation_matrix()
}

/// Determinant of the presentation matrix in canonical form: lowest
/// exponent 0, positive leading coefficient.
pub fn alexander_polynomial(spec: &PretzelSpec) -> HalfLaurent {
    presentation_matrix(spec).determinant().expect("presentation matrix is square").normalized()
}

/// `s(s+1)t² − (2s(s+1)+1)t + s(s+1)`.
pub fn family_alexander(s: i64) -> Result<HalfLaurent, SpecError> {
    if s < 1 {
        return Err(SpecError::FamilyParameter(s));
    }
    let a = s * (s + 1);
    Ok(HalfLaurent::from_coeffs(0, &[a, -(2 * a + 1), a]))
}

/// One family `P(-(2s+1), 2s+1, 2i+1)` for fixed `s`, with its shared
/// Alexander polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyDescriptor {
    pub s: i64,
    /// `A = −s(s+1)`, so that `Δ ≐ A − (2A−1)t + At²`.
    pub a: i64,
    pub delta: HalfLaurent,
}

impl FamilyDescriptor {
    pub fn new(s: i64) -> Result<Self, SpecError> {
        Ok(FamilyDescriptor { s, a: -s * (s + 1), delta: family_alexander(s)? })
    }

    /// `A − (2A−1)t + At²`.
    pub fn coefficient_form(&self) -> HalfLaurent {
        HalfLaurent::from_coeffs(0, &[self.a, -(2 * self.a - 1), self.a])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiberedVerdict {
    /// Non-monic Alexander polynomial: the knot is not fibered.
    NotFibered,
    /// Monic; this test says nothing.
    Inconclusive,
}

impl fmt::Display for FiberedVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FiberedVerdict::NotFibered => "NotFibered",
            FiberedVerdict::Inconclusive => "Inconclusive",
        })
    }
}

pub fn fibered_obstruction(delta: &HalfLaurent) -> Result<FiberedVerdict, AlexanderError> {
    if delta.is_zero() {
        return Err(AlexanderError::ZeroPolynomial);
    }
    if !delta.is_integral() {
        return Err(AlexanderError::NonIntegral);
    }
    Ok(if delta.leading_coefficient().abs() == BigInt::one() {
        FiberedVerdict::Inconclusive
    } else {
        FiberedVerdict::NotFibered
    })
}
