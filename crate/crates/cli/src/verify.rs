//! Verification sweeps. Each sweep produces one row per asserted check, in
//! a fixed order, so repeated runs print identical output.

use std::io::Write;
use std::ops::RangeInclusive;

use serde::Serialize;

use pretzel_invariants::alexander::{alexander_polynomial, family_alexander, PretzelSpec};
use pretzel_invariants::ideals::{
    family_base_ideal, in_subfamily, index_rule_agreement, second_ideal_is_base, IndexRule,
};
use pretzel_invariants::jones_closed::{
    family_distinct, family_recurrence_holds, pretzel_jones, pretzel_jones_s1, pretzel_jones_skein, torus_jones,
    torus_jones_recurrence_check, torus_jones_skein,
};
use pretzel_invariants::{EvalPoint, Exponent, HalfLaurent};

use crate::error::CliError;
use crate::knot::parse_range;
use crate::{RowFormat, Theorem};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub s: Option<i64>,
    pub i: Option<i64>,
    pub invariant: String,
    pub value: String,
    pub pass: bool,
}

impl Row {
    fn new(
        s: impl Into<Option<i64>>,
        i: impl Into<Option<i64>>,
        invariant: &str,
        value: impl ToString,
        pass: bool,
    ) -> Self {
        Row { s: s.into(), i: i.into(), invariant: invariant.into(), value: value.to_string(), pass }
    }
}

/// Which `i` to visit for a given `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IndexSpan {
    Explicit(RangeInclusive<i64>),
    /// `extent` values starting `offset` above `s`.
    Relative {
        offset: i64,
        extent: i64,
    },
    /// From `offset` above `s` up to a fixed `last`.
    UpTo {
        offset: i64,
        last: i64,
    },
}

impl IndexSpan {
    fn for_s(&self, s: i64) -> RangeInclusive<i64> {
        match *self {
            IndexSpan::Explicit(ref r) => r.clone(),
            IndexSpan::Relative { offset, extent } => s + offset..=s + offset + extent - 1,
            IndexSpan::UpTo { offset, last } => s + offset..=last,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sweep {
    pub theorem: Theorem,
    pub s: RangeInclusive<i64>,
    pub i: IndexSpan,
    pub k: RangeInclusive<i64>,
}

impl Sweep {
    pub fn from_flags(
        theorem: Theorem,
        s: Option<&str>,
        i: Option<&str>,
        i_extent: Option<i64>,
        k: Option<&str>,
    ) -> Result<Self, CliError> {
        let (default_s, offset, default_span) = match theorem {
            Theorem::Constancy => (1..=1, 0, IndexSpan::Explicit(1..=50)),
            Theorem::FirstFamilyJones => (1..=1, 2, IndexSpan::Explicit(3..=30)),
            Theorem::FamilyIdeals => (1..=5, 1, IndexSpan::Relative { offset: 1, extent: 30 }),
            Theorem::FamilyJones => (1..=8, 2, IndexSpan::Relative { offset: 2, extent: 20 }),
            Theorem::TorusJones => (1..=1, 0, IndexSpan::Relative { offset: 0, extent: 0 }),
            Theorem::Distinct => (1..=5, 2, IndexSpan::UpTo { offset: 2, last: 100 }),
        };
        let torus = theorem == Theorem::TorusJones;
        if torus && (s.is_some() || i.is_some() || i_extent.is_some()) {
            return Err(CliError::Usage("the torus sweep takes --k, not --s, --i or --i-extent".into()));
        }
        if !torus && k.is_some() {
            return Err(CliError::Usage("--k applies only to the torus sweep".into()));
        }
        let s = match s {
            Some(arg) => parse_range(arg, "--s")?,
            None => default_s.clone(),
        };
        if matches!(theorem, Theorem::Constancy | Theorem::FirstFamilyJones) && s != default_s {
            return Err(CliError::Usage("this sweep is for s = 1 only".into()));
        }
        let span = match (i, i_extent) {
            (Some(arg), _) => IndexSpan::Explicit(parse_range(arg, "--i")?),
            (None, Some(extent)) if extent < 0 => return Err(CliError::Usage("--i-extent must be nonnegative".into())),
            (None, Some(extent)) => IndexSpan::Relative { offset, extent },
            (None, None) => default_span,
        };
        let k = match k {
            Some(arg) => parse_range(arg, "--k")?,
            None => 1..=30,
        };
        Ok(Sweep { theorem, s, i: span, k })
    }

    pub fn rows(&self) -> Result<Vec<Row>, CliError> {
        match self.theorem {
            Theorem::Constancy => self.constancy(),
            Theorem::FirstFamilyJones => self.first_family_jones(),
            Theorem::FamilyIdeals => self.family_ideals(),
            Theorem::FamilyJones => self.family_jones(),
            Theorem::TorusJones => self.torus_jones(),
            Theorem::Distinct => self.distinct(),
        }
    }

    fn constancy(&self) -> Result<Vec<Row>, CliError> {
        let expected: HalfLaurent = "2*t^2 - 5*t + 2".parse().expect("valid literal");
        let indices = self.i.for_s(1);
        let mut rows = Vec::new();
        for i in indices.clone() {
            let delta = alexander_polynomial(&PretzelSpec::family(1, i).map_err(CliError::usage)?);
            let pass = delta == expected;
            rows.push(Row::new(1, i, "alexander", delta, pass));
        }
        for i in indices.clone() {
            rows.push(second_ideal_row(1, i)?);
        }
        let first = indices.start().max(&1);
        let span = *first..=*indices.end();
        let old = index_rule_agreement(IndexRule::ThreeKMinusOne, 1, span.clone()).map_err(CliError::usage)?;
        let general = index_rule_agreement(IndexRule::General, 1, span).map_err(CliError::usage)?;
        let describe = |matches: bool, first_mismatch: Option<i64>| match first_mismatch {
            Some(i) => format!("fails at i={i}"),
            None if matches => "holds".to_string(),
            None => "no data".to_string(),
        };
        rows.push(Row::new(
            1,
            None,
            "index rule",
            format!(
                "i = 3k-1 {}; i = 3k-2 {}",
                describe(old.matches, old.first_mismatch),
                describe(general.matches, general.first_mismatch)
            ),
            general.matches,
        ));
        Ok(rows)
    }

    fn first_family_jones(&self) -> Result<Vec<Row>, CliError> {
        let mut rows = Vec::new();
        for i in self.i.for_s(1) {
            let closed = pretzel_jones_s1(i).map_err(CliError::usage)?.polynomial;
            let skein = pretzel_jones_skein(1, i).map_err(CliError::usage)?.polynomial;
            let general = pretzel_jones(1, i).map_err(CliError::usage)?.polynomial;
            let pass = closed == skein && closed == general;
            rows.push(Row::new(1, i, "jones", closed, pass));
        }
        Ok(rows)
    }

    fn family_ideals(&self) -> Result<Vec<Row>, CliError> {
        let mut rows = Vec::new();
        for s in self.s.clone() {
            let expected = family_alexander(s).map_err(CliError::usage)?;
            for i in self.i.for_s(s) {
                let delta = alexander_polynomial(&PretzelSpec::family(s, i).map_err(CliError::usage)?);
                let pass = delta == expected;
                rows.push(Row::new(s, i, "alexander", delta, pass));
                rows.push(second_ideal_row(s, i)?);
            }
        }
        Ok(rows)
    }

    fn family_jones(&self) -> Result<Vec<Row>, CliError> {
        let mut rows = Vec::new();
        for s in self.s.clone() {
            for i in self.i.for_s(s) {
                let closed = pretzel_jones(s, i).map_err(CliError::usage)?.polynomial;
                let skein = pretzel_jones_skein(s, i).map_err(CliError::usage)?.polynomial;
                let recurrence = family_recurrence_holds(s, i).map_err(CliError::usage)?;
                rows.push(Row::new(s, i, "jones", closed.clone(), closed == skein && recurrence));
            }
        }
        Ok(rows)
    }

    fn torus_jones(&self) -> Result<Vec<Row>, CliError> {
        let mut rows = Vec::new();
        for k in self.k.clone() {
            let closed = torus_jones(k).map_err(CliError::usage)?.polynomial;
            let skein = torus_jones_skein(k).map_err(CliError::usage)?.polynomial;
            let at_one = closed.evaluate(&EvalPoint::One).map_err(CliError::usage)?;
            let pass = closed == skein && torus_jones_recurrence_check(k) && at_one == (-2).into();
            rows.push(Row::new(None, None, &format!("jones T(2,{})", 2 * k), closed, pass));
        }
        Ok(rows)
    }

    fn distinct(&self) -> Result<Vec<Row>, CliError> {
        let mut rows = Vec::new();
        for s in self.s.clone() {
            let report = family_distinct(s, self.i.for_s(s)).map_err(CliError::usage)?;
            for &(i, e) in &report.min_exponents {
                let pass = e == Exponent::from_integer(-2 * i - 2 * s - 2);
                rows.push(Row::new(s, i, "jones min exponent", e, pass));
            }
            let value = format!(
                "{} polynomials, distinct: {}, min exponent strictly decreasing: {}",
                report.min_exponents.len(),
                report.all_distinct,
                report.strictly_decreasing
            );
            rows.push(Row::new(s, None, "distinct", value, report.all_distinct && report.strictly_decreasing));
        }
        Ok(rows)
    }
}

fn second_ideal_row(s: i64, i: i64) -> Result<Row, CliError> {
    let equal = second_ideal_is_base(s, i).map_err(CliError::usage)?;
    let value = if equal { "equal" } else { "different" };
    let invariant = format!("E2 = {}", family_base_ideal(s));
    Ok(Row::new(s, i, &invariant, value, equal == in_subfamily(s, i)))
}

fn cell(x: Option<i64>) -> String {
    x.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn write_text(theorem: &str, rows: &[Row], out: &mut dyn Write) -> Result<(), CliError> {
    let width = rows.iter().map(|r| r.invariant.len()).max().unwrap_or(0).max("invariant".len());
    writeln!(out, "verify {theorem}")?;
    writeln!(out, "{:>4} {:>4}  {:<width$}  pass  value", "s", "i", "invariant")?;
    for r in rows {
        let pass = if r.pass { "PASS" } else { "FAIL" };
        writeln!(out, "{:>4} {:>4}  {:<width$}  {pass}  {}", cell(r.s), cell(r.i), r.invariant, r.value)?;
    }
    let failed = rows.iter().filter(|r| !r.pass).count();
    writeln!(out, "{} checks, {} failed", rows.len(), failed)?;
    Ok(())
}

pub fn write_rows(rows: &[Row], format: RowFormat, theorem: &str, out: &mut dyn Write) -> Result<(), CliError> {
    match format {
        RowFormat::Text => write_text(theorem, rows, out),
        RowFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, rows)?;
            writeln!(out)?;
            Ok(())
        }
        RowFormat::Csv => {
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
            w.write_record(["s", "i", "invariant", "value", "pass"])?;
            for r in rows {
                w.serialize(r)?;
            }
            w.flush()?;
            Ok(())
        }
    }
}

fn tag(theorem: Theorem) -> &'static str {
    match theorem {
        Theorem::Constancy => "2.1",
        Theorem::FirstFamilyJones => "3.1",
        Theorem::FamilyIdeals => "4.1",
        Theorem::FamilyJones => "4.2",
        Theorem::TorusJones => "lemma3.1",
        Theorem::Distinct => "cor-distinct",
    }
}

pub fn run(sweep: &Sweep, format: RowFormat, out: &mut dyn Write) -> Result<(), CliError> {
    let rows = sweep.rows()?;
    write_rows(&rows, format, tag(sweep.theorem), out)?;
    let failed = rows.iter().filter(|r| !r.pass).count();
    if failed == 0 {
        Ok(())
    } else {
        Err(CliError::Failed(format!("{failed} of {} checks failed", rows.len())))
    }
}
