//! Parsing of knot and range arguments.

use std::fmt;
use std::ops::RangeInclusive;

use pretzel_invariants::alexander::PretzelSpec;
use pretzel_invariants::diagram::TorusSpec;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Knot {
    Pretzel(PretzelSpec),
    Torus(TorusSpec),
}

impl fmt::Display for Knot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Knot::Pretzel(p) => write!(f, "{p}"),
            Knot::Torus(t) => write!(f, "{t}"),
        }
    }
}

fn int(s: &str, what: &str) -> Result<i64, CliError> {
    s.trim().parse().map_err(|_| CliError::Usage(format!("{what}: `{s}` is not an integer")))
}

/// `-3,3,7`
pub fn parse_pretzel(arg: &str) -> Result<PretzelSpec, CliError> {
    let parts: Vec<&str> = arg.split(',').collect();
    let [p, q, r] = parts[..] else {
        return Err(CliError::Usage(format!("--pretzel expects three comma-separated tassels, got `{arg}`")));
    };
    PretzelSpec::new(int(p, "--pretzel")?, int(q, "--pretzel")?, int(r, "--pretzel")?).map_err(CliError::usage)
}

/// `s=2,i=4`; the keys may come in either order.
pub fn parse_family(arg: &str) -> Result<PretzelSpec, CliError> {
    let (mut s, mut i) = (None, None);
    for part in arg.split(',') {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("--family expects `s=<n>,i=<n>`, got `{arg}`")))?;
        let slot = match key.trim() {
            "s" => &mut s,
            "i" => &mut i,
            other => return Err(CliError::Usage(format!("--family: unknown key `{other}`"))),
        };
        *slot = Some(int(value, "--family")?);
    }
    match (s, i) {
        (Some(s), Some(i)) => PretzelSpec::family(s, i).map_err(CliError::usage),
        _ => Err(CliError::Usage(format!("--family needs both s and i, got `{arg}`"))),
    }
}

/// `2,4` for `T(2,4)`.
pub fn parse_torus(arg: &str) -> Result<TorusSpec, CliError> {
    let Some((two, n)) = arg.split_once(',') else {
        return Err(CliError::Usage(format!("--torus expects `2,<n>`, got `{arg}`")));
    };
    if int(two, "--torus")? != 2 {
        return Err(CliError::Usage(format!("only torus links T(2,n) are supported, got T({arg})")));
    }
    TorusSpec::new(int(n, "--torus")?).map_err(CliError::usage)
}

/// `a..b` (inclusive) or a single integer. `a > b` is an empty range.
pub fn parse_range(arg: &str, flag: &str) -> Result<RangeInclusive<i64>, CliError> {
    match arg.split_once("..") {
        Some((a, b)) => Ok(int(a, flag)?..=int(b.trim_start_matches('='), flag)?),
        None => {
            let n = int(arg, flag)?;
            Ok(n..=n)
        }
    }
}
