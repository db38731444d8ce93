//! Elementary ideals of presentation matrices and exact membership tests in
//! `ℤ[t, t⁻¹]`.
//!
//! Membership is decided with certificates rather than a general Gröbner
//! engine. The ideals arising from the pretzel families are all kernels of
//! an evaluation `ℤ[t, t⁻¹] → ℤ/n, t ↦ c`, and such a kernel decides
//! membership by a single evaluation. For other inputs a bounded search for
//! an explicit combination certifies membership, and any finite quotient
//! killing the generators but not the candidate certifies non-membership.
//! When neither certificate turns up the answer is [`IdealError::Undecided`].

use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::alexander::{presentation_matrix, PretzelSpec, SpecError};
use crate::laurent::{EvalPoint, Exponent, HalfLaurent, LaurentError, LaurentMatrix};

/// Default degree and `t`-power bound for the combination search.
pub const DEFAULT_SEARCH_BOUND: u32 = 8;

/// Largest modulus tried when looking for a separating quotient.
const SEPARATING_MODULUS_LIMIT: i64 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("ideal generators must have integral exponents")]
    NonIntegral,
    #[error("elementary ideal index must be at least 1")]
    InvalidIndex,
    #[error("generators do not reduce to the shape {{n, t - c}}")]
    NotLinearQuotient,
    #[error("membership undecided within search bound {bound}")]
    Undecided { bound: u32 },
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Spec(#[from] SpecError),
}

/// A finite generating set of an ideal in `ℤ[t, t⁻¹]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealGens {
    generators: Vec<HalfLaurent>,
}

impl IdealGens {
    /// Zero generators are dropped.
    pub fn new(generators: impl IntoIterator<Item = HalfLaurent>) -> Result<Self, IdealError> {
        let generators: Vec<_> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        if generators.iter().any(|g| !g.is_integral()) {
            return Err(IdealError::NonIntegral);
        }
        Ok(IdealGens { generators })
    }

    pub fn unit() -> Self {
        IdealGens { generators: vec![HalfLaurent::one()] }
    }

    pub fn generators(&self) -> &[HalfLaurent] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }
}

impl fmt::Display for IdealGens {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
        write!(f, "({})", gens.join(", "))
    }
}

/// The kernel of `ℤ[t, t⁻¹] → ℤ/modulus`, `t ↦ residue`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearQuotient {
    modulus: BigInt,
    residue: BigInt,
}

impl LinearQuotient {
    pub fn new(modulus: impl Into<BigInt>, residue: impl Into<BigInt>) -> Result<Self, IdealError> {
        let modulus = modulus.into();
        if !modulus.is_positive() {
            return Err(LaurentError::InvalidModulus(modulus).into());
        }
        let residue = residue.into().mod_floor(&modulus);
        if !residue.gcd(&modulus).is_one() {
            return Err(LaurentError::ImageNotUnit { modulus, image: residue }.into());
        }
        Ok(LinearQuotient { modulus, residue })
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    /// Image of `t`, reduced into `[0, modulus)`.
    pub fn residue(&self) -> &BigInt {
        &self.residue
    }

    pub fn eval_point(&self) -> EvalPoint {
        EvalPoint::Residue { modulus: self.modulus.clone(), image: self.residue.clone() }
    }

    pub fn image(&self, f: &HalfLaurent) -> Result<BigInt, IdealError> {
        Ok(f.evaluate(&self.eval_point())?)
    }

    pub fn kills(&self, f: &HalfLaurent) -> Result<bool, IdealError> {
        Ok(self.image(f)?.is_zero())
    }
}

impl fmt::Display for LinearQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z/{} with t -> {}", self.modulus, self.residue)
    }
}

/// Generators of `E_k(M)`: all `(n−k+1)`-minors of the `n×n` matrix `M`.
///
/// For a 2×2 matrix `E_1` is `(det M)` and `E_2` is generated by the
/// entries. For `k > n` the result is the unit ideal.
pub fn elementary_ideal(m: &LaurentMatrix, k: usize) -> Result<IdealGens, IdealError> {
    if !m.is_square() {
        return Err(LaurentError::NotSquare { rows: m.rows(), cols: m.cols() }.into());
    }
    if k == 0 {
        return Err(IdealError::InvalidIndex);
    }
    let n = m.rows();
    if k > n {
        return Ok(IdealGens::unit());
    }
    let size = n - k + 1;
    let subsets = index_subsets(n, size);
    let mut minors = Vec::new();
    for rows in &subsets {
        for cols in &subsets {
            let minor = m.minor(rows, cols);
            if !minor.is_zero() && !minors.contains(&minor) {
                minors.push(minor);
            }
        }
    }
    IdealGens::new(minors)
}

fn index_subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, size: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            go(i + 1, n, size, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, size, &mut Vec::new(), &mut out);
    out
}

/// Writes a nonzero integral polynomial as `t^m · (a + b·t)` and returns
/// `(b, a)`, or `None` if its span of exponents exceeds one.
fn linear_coefficients(g: &HalfLaurent) -> Option<(BigInt, BigInt)> {
    let low = g.min_exponent()?;
    let g = g.shift(-low);
    let degree = g.max_exponent()?.as_integer()?;
    (degree <= 1).then(|| (g.coefficient(Exponent::from_integer(1)), g.coefficient(Exponent::ZERO)))
}

/// Reduces the ideal `(g1, g2)` to the form `(n, t − c)` by integer row
/// operations, and returns it as a [`LinearQuotient`].
///
/// Fails with [`IdealError::NotLinearQuotient`] unless both generators are
/// (up to units) of degree at most one, their `t`-coefficients are coprime,
/// and the resulting `c` is invertible modulo `n > 0`.
pub fn linear_quotient_of(g1: &HalfLaurent, g2: &HalfLaurent) -> Result<LinearQuotient, IdealError> {
    if !g1.is_integral() || !g2.is_integral() {
        return Err(IdealError::NonIntegral);
    }
    let (mut top, mut bottom) = match (linear_coefficients(g1), linear_coefficients(g2)) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(IdealError::NotLinearQuotient),
    };
    // Euclid on the t-coefficients; each step is a unimodular row operation.
    while !bottom.0.is_zero() {
        let q = top.0.div_floor(&bottom.0);
        top = (&top.0 - &q * &bottom.0, &top.1 - &q * &bottom.1);
        std::mem::swap(&mut top, &mut bottom);
    }
    let (lead, constant) = top;
    if lead.abs() != BigInt::one() {
        return Err(IdealError::NotLinearQuotient);
    }
    // lead·t + constant = 0 gives t = -constant/lead.
    let residue = -constant * &lead;
    let modulus = bottom.1.abs();
    if modulus.is_zero() {
        return Err(IdealError::NotLinearQuotient);
    }
    LinearQuotient::new(modulus, residue).map_err(|_| IdealError::NotLinearQuotient)
}

/// Why a membership verdict holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// The ideal equals the kernel of this quotient; membership is decided
    /// by evaluating.
    Kernel(LinearQuotient),
    /// `f = Σ multipliers[j] · generators[j]`.
    Combination(Vec<HalfLaurent>),
    /// The quotient kills every generator but not `f`.
    Separated(LinearQuotient),
    /// `f` is zero, or the ideal contains a unit.
    Trivial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    pub certificate: Certificate,
}

/// Finds a pair of generators whose ideal is a linear-quotient kernel that
/// also contains every other generator, so that the whole ideal is that kernel.
pub fn kernel_quotient(ideal: &IdealGens) -> Result<Option<LinearQuotient>, IdealError> {
    let gens = ideal.generators();
    for (a, g1) in gens.iter().enumerate() {
        for g2 in &gens[a + 1..] {
            let Ok(q) = linear_quotient_of(g1, g2) else { continue };
            if gens.iter().try_fold(true, |ok, g| Ok::<_, IdealError>(ok && q.kills(g)?))? {
                return Ok(Some(q));
            }
        }
    }
    Ok(None)
}

fn is_unit(g: &HalfLaurent) -> bool {
    g.num_terms() == 1 && g.leading_coefficient().abs().is_one()
}

pub fn decide_membership(ideal: &IdealGens, f: &HalfLaurent, bound: u32) -> Result<Membership, IdealError> {
    if !f.is_integral() {
        return Err(IdealError::NonIntegral);
    }
    if f.is_zero() || ideal.generators().iter().any(is_unit) {
        return Ok(Membership { member: true, certificate: Certificate::Trivial });
    }
    if ideal.is_zero_ideal() {
        return Ok(Membership { member: false, certificate: Certificate::Trivial });
    }
    if let Some(q) = kernel_quotient(ideal)? {
        return Ok(Membership { member: q.kills(f)?, certificate: Certificate::Kernel(q) });
    }
    if let Some(multipliers) = search_combination(ideal, f, bound) {
        return Ok(Membership { member: true, certificate: Certificate::Combination(multipliers) });
    }
    if let Some(q) = separating_quotient(ideal, f)? {
        return Ok(Membership { member: false, certificate: Certificate::Separated(q) });
    }
    Err(IdealError::Undecided { bound })
}

/// Whether `f` lies in the ideal, using [`DEFAULT_SEARCH_BOUND`].
pub fn contains(ideal: &IdealGens, f: &HalfLaurent) -> Result<bool, IdealError> {
    decide_membership(ideal, f, DEFAULT_SEARCH_BOUND).map(|m| m.member)
}

pub fn ideal_contains_all(ideal: &IdealGens, other: &IdealGens) -> Result<bool, IdealError> {
    for g in other.generators() {
        if !contains(ideal, g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn ideal_equal(a: &IdealGens, b: &IdealGens) -> Result<bool, IdealError> {
    Ok(ideal_contains_all(a, b)? && ideal_contains_all(b, a)?)
}

fn separating_quotient(ideal: &IdealGens, f: &HalfLaurent) -> Result<Option<LinearQuotient>, IdealError> {
    for n in 2..=SEPARATING_MODULUS_LIMIT {
        for c in 1..n {
            if c.gcd(&n) != 1 {
                continue;
            }
            let q = LinearQuotient::new(n, c)?;
            let kills_all = ideal.generators().iter().try_fold(true, |ok, g| Ok::<_, IdealError>(ok && q.kills(g)?))?;
            if kills_all && !q.kills(f)? {
                return Ok(Some(q));
            }
        }
    }
    Ok(None)
}

/// Looks for `f · t^N = Σ a_j g_j` with `N ≤ bound` and polynomial `a_j` of
/// degree `≤ bound`, after shifting every polynomial to lowest exponent 0.
/// Returns Laurent multipliers `b_j` with `f = Σ b_j g_j`.
fn search_combination(ideal: &IdealGens, f: &HalfLaurent, bound: u32) -> Option<Vec<HalfLaurent>> {
    let gens = ideal.generators();
    let f_low = f.min_exponent()?.as_integer()?;
    let f0 = f.shift(Exponent::from_integer(-f_low));
    let lows: Vec<i64> = gens.iter().map(|g| g.min_exponent().and_then(Exponent::as_integer)).collect::<Option<_>>()?;
    let shifted: Vec<HalfLaurent> =
        gens.iter().zip(&lows).map(|(g, &low)| g.shift(Exponent::from_integer(-low))).collect();
    let bound = bound as i64;
    let max_gen = shifted.iter().filter_map(|g| g.max_exponent()?.as_integer()).max().unwrap_or(0);
    let f_deg = f0.max_exponent()?.as_integer()?;
    let rows = (max_gen.max(f_deg) + bound + 1) as usize;

    let dense = |p: &HalfLaurent| -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); rows];
        for (e, c) in p.terms() {
            v[e.as_integer().expect("integral") as usize] = c.clone();
        }
        v
    };
    let mut columns = Vec::new();
    for g in &shifted {
        for d in 0..=bound {
            columns.push(dense(&g.shift(Exponent::from_integer(d))));
        }
    }
    let lattice = IntegerLattice::new(columns, rows);

    for n in 0..=bound {
        let target = f0.shift(Exponent::from_integer(n));
        if target.max_exponent()?.as_integer()? as usize >= rows {
            break;
        }
        if let Some(x) = lattice.solve(&dense(&target)) {
            let per_gen = (bound + 1) as usize;
            let multipliers: Vec<HalfLaurent> = (0..gens.len())
                .map(|j| {
                    let a = HalfLaurent::from_terms(
                        (0..per_gen).map(|d| (Exponent::from_integer(d as i64), x[j * per_gen + d].clone())),
                    );
                    a.shift(Exponent::from_integer(f_low - n - lows[j]))
                })
                .collect();
            debug_assert_eq!(multipliers.iter().zip(gens).map(|(a, g)| a * g).sum::<HalfLaurent>(), *f);
            return Some(multipliers);
        }
    }
    None
}

/// Column echelon form of an integer matrix, tracking the unimodular
/// transform, for deciding whether a vector is an integer combination of
/// the original columns.
struct IntegerLattice {
    /// Reduced columns with their pivot row, pivots strictly increasing.
    pivots: Vec<(usize, Vec<BigInt>, Vec<BigInt>)>,
}

impl IntegerLattice {
    fn new(columns: Vec<Vec<BigInt>>, rows: usize) -> Self {
        let ncols = columns.len();
        let mut work: Vec<(Vec<BigInt>, Vec<BigInt>)> = columns
            .into_iter()
            .enumerate()
            .map(|(j, col)| {
                let mut unit = vec![BigInt::zero(); ncols];
                unit[j] = BigInt::one();
                (col, unit)
            })
            .collect();
        let mut pivots = Vec::new();
        for r in 0..rows {
            loop {
                let nonzero: Vec<usize> = (0..work.len()).filter(|&j| !work[j].0[r].is_zero()).collect();
                if nonzero.len() <= 1 {
                    if let Some(&j) = nonzero.first() {
                        pivots.push((r, work.swap_remove(j)));
                    }
                    break;
                }
                let &best = nonzero.iter().min_by_key(|&&j| work[j].0[r].abs()).expect("nonempty");
                let (pivot_col, pivot_tr) = work[best].clone();
                for &j in &nonzero {
                    if j == best {
                        continue;
                    }
                    let q = work[j].0[r].div_floor(&pivot_col[r]);
                    let (col, tr) = &mut work[j];
                    for (a, b) in col.iter_mut().zip(&pivot_col) {
                        *a -= &q * b;
                    }
                    for (a, b) in tr.iter_mut().zip(&pivot_tr) {
                        *a -= &q * b;
                    }
                }
            }
        }
        IntegerLattice { pivots: pivots.into_iter().map(|(r, (c, t))| (r, c, t)).collect() }
    }

    fn solve(&self, target: &[BigInt]) -> Option<Vec<BigInt>> {
        let mut v = target.to_vec();
        let mut x = vec![BigInt::zero(); self.pivots.first().map_or(0, |p| p.2.len())];
        for (r, col, tr) in &self.pivots {
            let (q, rem) = v[*r].div_rem(&col[*r]);
            if !rem.is_zero() {
                return None;
            }
            for (a, b) in v.iter_mut().zip(col) {
                *a -= &q * b;
            }
            for (a, b) in x.iter_mut().zip(tr) {
                *a += &q * b;
            }
        }
        v.iter().all(Zero::is_zero).then_some(x)
    }
}

/// `i = (2k − 1)s + k − 1`, the `k`-th index of the subfamily with equal
/// elementary ideals. Equivalently `i ≡ s (mod 2s+1)`.
pub fn subfamily_index(s: i64, k: i64) -> i64 {
    (2 * k - 1) * s + k - 1
}

/// Whether `i ≡ s (mod 2s+1)`.
pub fn in_subfamily(s: i64, i: i64) -> bool {
    (i - s).rem_euclid(2 * s + 1) == 0
}

/// The ideal `((s+1)t − s, st − (s+1))` that every subfamily member's
/// second elementary ideal equals.
pub fn family_base_ideal(s: i64) -> IdealGens {
    IdealGens::new([HalfLaurent::from_coeffs(0, &[-s, s + 1]), HalfLaurent::from_coeffs(0, &[-(s + 1), s])])
        .expect("integral generators")
}

/// Elementary ideals `E_1, …, E_{n+1}` of the family member's presentation matrix.
pub fn elementary_ideal_sequence(spec: &PretzelSpec) -> Result<Vec<IdealGens>, IdealError> {
    let m = presentation_matrix(spec);
    (1..=m.rows() + 1).map(|k| elementary_ideal(&m, k)).collect()
}

/// Whether `E_2` of `P(-(2s+1), 2s+1, 2i+1)` equals [`family_base_ideal`].
pub fn second_ideal_is_base(s: i64, i: i64) -> Result<bool, IdealError> {
    let spec = PretzelSpec::family(s, i)?;
    let e2 = elementary_ideal(&presentation_matrix(&spec), 2)?;
    ideal_equal(&e2, &family_base_ideal(s))
}

/// Candidate rules for which `i` give equal elementary ideals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexRule {
    /// `i = 3k − 1` (meaningful for `s = 1` only).
    ThreeKMinusOne,
    /// `i = (2k − 1)s + k − 1`.
    General,
}

impl IndexRule {
    pub fn selects(self, s: i64, i: i64) -> bool {
        match self {
            IndexRule::ThreeKMinusOne => i >= 2 && i % 3 == 2,
            IndexRule::General => i >= s && in_subfamily(s, i),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            IndexRule::ThreeKMinusOne => "i = 3k-1",
            IndexRule::General => "i = (2k-1)s+k-1",
        }
    }
}

/// How well an index rule predicts equality of `E_2` with the base ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleAgreement {
    pub rule: IndexRule,
    pub s: i64,
    pub matches: bool,
    /// First `i` where the rule and the matrices disagree.
    pub first_mismatch: Option<i64>,
}

pub fn index_rule_agreement(
    rule: IndexRule,
    s: i64,
    indices: RangeInclusive<i64>,
) -> Result<RuleAgreement, IdealError> {
    for i in indices {
        if second_ideal_is_base(s, i)? != rule.selects(s, i) {
            return Ok(RuleAgreement { rule, s, matches: false, first_mismatch: Some(i) });
        }
    }
    Ok(RuleAgreement { rule, s, matches: true, first_mismatch: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> HalfLaurent {
        s.parse().unwrap()
    }

    fn ideal(gens: &[&str]) -> IdealGens {
        IdealGens::new(gens.iter().map(|g| p(g))).unwrap()
    }

    fn p333() -> LaurentMatrix {
        presentation_matrix(&PretzelSpec::new(-3, 3, 3).unwrap())
    }

    #[test]
    fn elementary_ideals_of_first_example() {
        let e2 = elementary_ideal(&p333(), 2).unwrap();
        assert_eq!(e2.generators(), &[p("2*t - 1"), p("t - 2"), p("3*t - 3")]);
        let e1 = elementary_ideal(&p333(), 1).unwrap();
        assert_eq!(e1.generators(), &[-(p("2*t - 1") * p("t - 2"))]);
        assert_eq!(elementary_ideal(&p333(), 3).unwrap(), IdealGens::unit());
        assert_eq!(elementary_ideal(&p333(), 0), Err(IdealError::InvalidIndex));
        assert!(elementary_ideal(&LaurentMatrix::zero(2, 3), 1).is_err());
    }

    #[test]
    fn three_by_three_elementary_ideals() {
        let m = LaurentMatrix::identity(3);
        assert_eq!(elementary_ideal(&m, 1).unwrap().generators(), &[HalfLaurent::one()]);
        // 2-minors of the identity are 0 or ±1; deduplicated.
        let e2 = elementary_ideal(&m, 2).unwrap();
        assert!(e2.generators().contains(&HalfLaurent::one()));
    }

    #[test]
    fn linear_quotients() {
        let q = linear_quotient_of(&p("2*t - 1"), &p("t - 2")).unwrap();
        assert_eq!((q.modulus(), q.residue()), (&BigInt::from(3), &BigInt::from(2)));
        let q = linear_quotient_of(&p("3*t - 2"), &p("2*t - 3")).unwrap();
        assert_eq!((q.modulus(), q.residue()), (&BigInt::from(5), &BigInt::from(4)));
        let q = linear_quotient_of(&p("t - 1"), &p("2")).unwrap();
        assert_eq!((q.modulus(), q.residue()), (&BigInt::from(2), &BigInt::from(1)));
        assert_eq!(linear_quotient_of(&p("t^2 - 1"), &p("2")), Err(IdealError::NotLinearQuotient));
        assert_eq!(linear_quotient_of(&p("2*t - 1"), &p("4*t - 2")), Err(IdealError::NotLinearQuotient));
    }

    /// Brute force: `(n, c)` is right iff both generators vanish at `c`
    /// modulo `n` and `n`, `t − c` are combinations of the generators.
    #[test]
    fn linear_quotient_oracle() {
        for s in 1..=6i64 {
            let g1 = HalfLaurent::from_coeffs(0, &[-s, s + 1]);
            let g2 = HalfLaurent::from_coeffs(0, &[-(s + 1), s]);
            let q = linear_quotient_of(&g1, &g2).unwrap();
            let n = 2 * s + 1;
            assert_eq!(q.modulus(), &BigInt::from(n));
            assert_eq!(q.residue(), &BigInt::from(n - 1));
            // t + 1 = g1 − g2 and 2s+1 = (s+1)(t+1) − g1
            let t_plus_1 = &g1 - &g2;
            assert_eq!(t_plus_1, p("t + 1"));
            assert_eq!(&t_plus_1.scale(&BigInt::from(s + 1)) - &g1, HalfLaurent::constant(n));
            assert!(q.kills(&g1).unwrap() && q.kills(&g2).unwrap());
        }
    }

    #[test]
    fn membership_examples() {
        let i = ideal(&["2*t - 1", "t - 2"]);
        assert!(contains(&i, &p("3*t - 3")).unwrap());
        assert!(!contains(&i, &p("t - 1")).unwrap());
        assert!(contains(&i, &HalfLaurent::zero()).unwrap());
        assert!(contains(&i, &p("3*t^-4")).unwrap());
        assert!(contains(&IdealGens::unit(), &p("t - 7")).unwrap());
    }

    #[test]
    fn principal_ideal_membership_uses_search() {
        let delta = p("2*t^2 - 5*t + 2");
        let i = IdealGens::new([delta.clone()]).unwrap();
        let m = decide_membership(&i, &delta.shift(Exponent::from_integer(-3)), DEFAULT_SEARCH_BOUND).unwrap();
        assert!(m.member);
        assert!(matches!(m.certificate, Certificate::Combination(_)));
        let m = decide_membership(&i, &p("t - 2"), DEFAULT_SEARCH_BOUND).unwrap();
        assert!(!m.member);
        assert!(matches!(m.certificate, Certificate::Separated(_)));
    }

    #[test]
    fn combination_certificate_is_exact() {
        let i = ideal(&["t^2 + 1", "t^3 - 2*t"]);
        let f = p("5*t^4 + t^3 + 3*t^2 - 2*t - 2");
        let m = decide_membership(&i, &f, DEFAULT_SEARCH_BOUND).unwrap();
        let Certificate::Combination(multipliers) = m.certificate else { panic!("{m:?}") };
        let sum: HalfLaurent = multipliers.iter().zip(i.generators()).map(|(a, g)| a * g).sum();
        assert_eq!(sum, f);
    }

    #[test]
    fn undecided_is_reported() {
        // (t² + 1, 67) has no quotient with modulus ≤ 64 and t - 3 is not in it.
        let i = ideal(&["t^2 + 1", "67"]);
        assert_eq!(contains(&i, &p("t - 3")), Err(IdealError::Undecided { bound: DEFAULT_SEARCH_BOUND }));
    }

    #[test]
    fn equality_examples() {
        let base = ideal(&["2*t - 1", "t - 2"]);
        assert!(ideal_equal(&ideal(&["2*t - 1", "t - 2", "3*t - 3"]), &base).unwrap());
        assert!(!ideal_equal(&ideal(&["2*t - 1", "t - 2", "t - 1"]), &base).unwrap());
        assert!(ideal_equal(&base, &base).unwrap());
    }

    #[test]
    fn subfamily_indices() {
        assert_eq!(subfamily_index(1, 2), 4);
        assert_eq!(subfamily_index(2, 1), 2);
        assert_eq!(subfamily_index(3, 3), 17);
        assert!(in_subfamily(3, 17));
        for s in 1..6 {
            for k in 1..20 {
                assert!(in_subfamily(s, subfamily_index(s, k)));
                assert_eq!(subfamily_index(s, k), s + (k - 1) * (2 * s + 1));
            }
        }
    }

    #[test]
    fn second_ideal_membership_tracks_congruence() {
        for s in 1..=5 {
            let base = family_base_ideal(s);
            for i in s + 1..=s + 30 {
                let f = HalfLaurent::from_coeffs(0, &[-(s + i + 1), s + i + 1]);
                assert_eq!(contains(&base, &f).unwrap(), in_subfamily(s, i), "s={s} i={i}");
            }
        }
    }

    #[test]
    fn index_rules_against_matrices() {
        let general = index_rule_agreement(IndexRule::General, 1, 2..=40).unwrap();
        assert!(general.matches);
        let first = index_rule_agreement(IndexRule::ThreeKMinusOne, 1, 2..=40).unwrap();
        assert!(!first.matches);
        assert_eq!(first.first_mismatch, Some(2));
    }

    #[test]
    fn membership_is_monotone() {
        let small = ideal(&["6*t - 3", "t - 2"]);
        let big = ideal(&["2*t - 1", "t - 2"]);
        assert!(ideal_contains_all(&big, &small).unwrap());
        for f in ["3*t - 3", "t - 1", "6*t^2 - 15*t + 6", "9"] {
            let f = p(f);
            if contains(&small, &f).unwrap() {
                assert!(contains(&big, &f).unwrap());
            }
        }
    }
}
