//! Brute-force Kauffman bracket: a state sum over all `2^c` smoothings,
//! normalized by the writhe to give the Jones polynomial.
//!
//! At a crossing `X(a,b,c,d)` the A-smoothing joins `a` with `b` and `c`
//! with `d`; the B-smoothing joins `a` with `d` and `b` with `c`. Loops are
//! counted with a rollback union-find over arcs while the states are walked
//! depth first, so each state costs a constant number of unions.
//!
//! The sum is accumulated as a histogram of `(#A-smoothings, #loops)` with
//! machine-integer counts and only then turned into a polynomial, so
//! splitting the enumeration across threads cannot change the result.

use num_bigint::BigInt;
use rayon::prelude::*;
use thiserror::Error;

use crate::diagram::OrientedDiagram;
use crate::laurent::{Exponent, HalfLaurent};
use crate::union_find::UnionFind;

pub const DEFAULT_MAX_CROSSINGS: usize = 24;

/// Crossings resolved up front to split the enumeration into independent jobs.
const SPLIT_LEVELS: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BracketError {
    #[error("diagram has {crossings} crossings, above the state-sum budget of {max}")]
    BudgetExceeded { crossings: usize, max: usize },
    #[error("normalized bracket has a term A^{0}, which is not a power of t^(1/2)")]
    OddExponent(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BracketOptions {
    pub max_crossings: usize,
    pub parallel: bool,
}

impl Default for BracketOptions {
    fn default() -> Self {
        BracketOptions { max_crossings: DEFAULT_MAX_CROSSINGS, parallel: false }
    }
}

/// A Laurent polynomial in the bracket variable `A` (integral exponents).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketPoly(HalfLaurent);

impl BracketPoly {
    /// `Σ coeff · A^exponent`.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        BracketPoly(HalfLaurent::from_terms(terms.into_iter().map(|(e, c)| (Exponent::from_integer(e), c))))
    }

    /// Underlying polynomial, with `A` in the role of `t`.
    pub fn as_polynomial(&self) -> &HalfLaurent {
        &self.0
    }

    /// `(−A³)^(−w) · ⟨D⟩` with `A = t^(−1/4)`.
    pub fn to_jones(&self, writhe: i64) -> Result<HalfLaurent, BracketError> {
        let mut normalized = self.0.shift(Exponent::from_integer(-3 * writhe));
        if writhe % 2 != 0 {
            normalized = -normalized;
        }
        let mut terms = Vec::with_capacity(normalized.num_terms());
        for (e, c) in normalized.terms() {
            let m = e.as_integer().expect("bracket exponents are integral");
            if m % 2 != 0 {
                return Err(BracketError::OddExponent(m));
            }
            terms.push((Exponent::from_halves(-m / 2), c.clone()));
        }
        Ok(HalfLaurent::from_terms(terms))
    }
}

/// `counts[a][l]` = number of states with `a` A-smoothings and `l` loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateHistogram {
    counts: Vec<Vec<u64>>,
}

impl StateHistogram {
    fn new(crossings: usize, max_loops: usize) -> Self {
        StateHistogram { counts: vec![vec![0; max_loops + 1]; crossings + 1] }
    }

    fn merge(mut self, other: StateHistogram) -> Self {
        for (row, other_row) in self.counts.iter_mut().zip(other.counts) {
            for (x, y) in row.iter_mut().zip(other_row) {
                *x += y;
            }
        }
        self
    }

    pub fn total_states(&self) -> u64 {
        self.counts.iter().flatten().sum()
    }

    pub fn count(&self, a_smoothings: usize, loops: usize) -> u64 {
        self.counts.get(a_smoothings).and_then(|r| r.get(loops)).copied().unwrap_or(0)
    }

    /// `Σ counts[a][l] · A^(2a − c) · δ^(l − 1)` with `δ = −A² − A⁻²`.
    fn to_bracket(&self) -> BracketPoly {
        let c = self.counts.len() as i64 - 1;
        let delta = BracketPoly::from_terms([(2, -1), (-2, -1)]).0;
        let max_loops = self.counts.first().map_or(0, Vec::len);
        let mut delta_pows = vec![HalfLaurent::one()];
        for j in 1..max_loops.max(1) {
            let next = &delta_pows[j - 1] * &delta;
            delta_pows.push(next);
        }
        let mut acc = HalfLaurent::zero();
        for (a, row) in self.counts.iter().enumerate() {
            let shift = Exponent::from_integer(2 * a as i64 - c);
            for (loops, &n) in row.iter().enumerate() {
                if n == 0 {
                    continue;
                }
                let term = delta_pows[loops - 1].shift(shift).scale(&BigInt::from(n));
                acc += &term;
            }
        }
        BracketPoly(acc)
    }
}

struct StateSum {
    /// Per crossing: arc pairs joined by the A- and B-smoothings, as dense indices.
    smoothings: Vec<[[(u32, u32); 2]; 2]>,
    arcs: usize,
    free_loops: usize,
}

impl StateSum {
    fn new(d: &OrientedDiagram) -> Self {
        let arcs = d.arcs();
        let index = |a| arcs.binary_search(&a).expect("arc listed") as u32;
        let smoothings = d
            .crossings()
            .iter()
            .map(|x| {
                let [a, b, c, dd] = x.arcs.map(index);
                [[(a, b), (c, dd)], [(a, dd), (b, c)]]
            })
            .collect();
        StateSum { smoothings, arcs: arcs.len(), free_loops: d.free_loops() }
    }

    fn histogram(&self, parallel: bool) -> StateHistogram {
        let c = self.smoothings.len();
        let split = SPLIT_LEVELS.min(c);
        let job = |prefix: u64| self.prefix_histogram(prefix, split);
        let empty = || StateHistogram::new(c, self.arcs + self.free_loops);
        if parallel {
            (0..1u64 << split).into_par_iter().map(job).reduce(empty, StateHistogram::merge)
        } else {
            (0..1u64 << split).map(job).fold(empty(), StateHistogram::merge)
        }
    }

    /// States whose first `split` choices are given by the bits of `prefix`
    /// (bit set = B-smoothing).
    fn prefix_histogram(&self, prefix: u64, split: usize) -> StateHistogram {
        let mut hist = StateHistogram::new(self.smoothings.len(), self.arcs + self.free_loops);
        let mut uf = UnionFind::new(self.arcs);
        let mut a_count = 0;
        for level in 0..split {
            let choice = (prefix >> level & 1) as usize;
            a_count += 1 - choice;
            for &(x, y) in &self.smoothings[level][choice] {
                uf.union(x, y);
            }
        }
        self.walk(split, a_count, &mut uf, &mut hist);
        hist
    }

    fn walk(&self, level: usize, a_count: usize, uf: &mut UnionFind, hist: &mut StateHistogram) {
        if level == self.smoothings.len() {
            hist.counts[a_count][uf.components() + self.free_loops] += 1;
            return;
        }
        for (choice, pairs) in self.smoothings[level].iter().enumerate() {
            for &(x, y) in pairs {
                uf.union(x, y);
            }
            self.walk(level + 1, a_count + (choice == 0) as usize, uf, hist);
            uf.rollback();
            uf.rollback();
        }
    }
}

pub fn state_histogram(d: &OrientedDiagram, opts: &BracketOptions) -> Result<StateHistogram, BracketError> {
    if d.crossing_count() > opts.max_crossings {
        return Err(BracketError::BudgetExceeded { crossings: d.crossing_count(), max: opts.max_crossings });
    }
    Ok(StateSum::new(d).histogram(opts.parallel))
}

pub fn kauffman_bracket(d: &OrientedDiagram) -> Result<BracketPoly, BracketError> {
    kauffman_bracket_with(d, &BracketOptions::default())
}

pub fn kauffman_bracket_with(d: &OrientedDiagram, opts: &BracketOptions) -> Result<BracketPoly, BracketError> {
    Ok(state_histogram(d, opts)?.to_bracket())
}

pub fn jones_from_bracket(d: &OrientedDiagram) -> Result<HalfLaurent, BracketError> {
    jones_from_bracket_with(d, &BracketOptions::default())
}

pub fn jones_from_bracket_with(d: &OrientedDiagram, opts: &BracketOptions) -> Result<HalfLaurent, BracketError> {
    kauffman_bracket_with(d, opts)?.to_jones(d.writhe())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alexander::PretzelSpec;
    use crate::diagram::{pretzel_diagram, torus2_diagram, PdCrossing, TorusSpec};
    use crate::laurent::Sign;

    fn p(s: &str) -> HalfLaurent {
        s.parse().unwrap()
    }

    #[test]
    fn unknot_bracket() {
        assert_eq!(kauffman_bracket(&OrientedDiagram::unknot()).unwrap(), BracketPoly::from_terms([(0, 1)]));
        assert_eq!(jones_from_bracket(&OrientedDiagram::unknot()).unwrap(), HalfLaurent::one());
    }

    #[test]
    fn positive_kink_bracket() {
        let d = OrientedDiagram::unknot().add_kink(Sign::Plus);
        assert_eq!(kauffman_bracket(&d).unwrap(), BracketPoly::from_terms([(3, -1)]));
        let d = OrientedDiagram::unknot().add_kink(Sign::Minus);
        assert_eq!(kauffman_bracket(&d).unwrap(), BracketPoly::from_terms([(-3, -1)]));
    }

    /// Left-handed trefoil, all crossings negative: V = −t⁻⁴ + t⁻³ + t⁻¹.
    #[test]
    fn left_trefoil_from_pd() {
        let x = |a, b, c, d| PdCrossing { arcs: [a, b, c, d], sign: Sign::Minus };
        let d = OrientedDiagram::from_pd(vec![x(1, 4, 2, 5), x(3, 6, 4, 1), x(5, 2, 6, 3)], 0).unwrap();
        assert_eq!(d.writhe(), -3);
        assert_eq!(jones_from_bracket(&d).unwrap(), p("1*t^-1 + 1*t^-3 - 1*t^-4"));
    }

    #[test]
    fn hopf_states_by_hand() {
        // Four states: AA and BB give two loops, AB and BA one.
        let d = torus2_diagram(&TorusSpec::new(2).unwrap());
        let h = state_histogram(&d, &BracketOptions::default()).unwrap();
        assert_eq!(h.total_states(), 4);
        assert_eq!(h.count(2, 2) + h.count(0, 2), 2);
        assert_eq!(h.count(1, 1), 2);
    }

    #[test]
    fn budget_is_enforced() {
        let d = pretzel_diagram(&PretzelSpec::new(-3, 3, 7).unwrap());
        let opts = BracketOptions { max_crossings: 12, parallel: false };
        assert_eq!(kauffman_bracket_with(&d, &opts), Err(BracketError::BudgetExceeded { crossings: 13, max: 12 }));
    }

    #[test]
    fn parallel_matches_sequential() {
        let d = pretzel_diagram(&PretzelSpec::new(-3, 3, 5).unwrap());
        let seq = kauffman_bracket_with(&d, &BracketOptions::default()).unwrap();
        let par = kauffman_bracket_with(&d, &BracketOptions { parallel: true, ..Default::default() }).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn state_sum_ignores_labels_and_order() {
        let d = pretzel_diagram(&PretzelSpec::new(-3, 3, 5).unwrap());
        let base = kauffman_bracket(&d).unwrap();
        assert_eq!(kauffman_bracket(&d.relabel(|a| 7 * a + 100)).unwrap(), base);
        let reversed: Vec<usize> = (0..d.crossing_count()).rev().collect();
        assert_eq!(kauffman_bracket(&d.permute_crossings(&reversed)).unwrap(), base);
    }
}
