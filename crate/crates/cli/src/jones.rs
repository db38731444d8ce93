use std::io::Write;

use pretzel_invariants::bracket::{jones_from_bracket_with, BracketOptions};
use pretzel_invariants::diagram::{pretzel_diagram, torus2_diagram, OrientedDiagram};
use pretzel_invariants::jones_closed::{pretzel_jones, pretzel_jones_skein, torus_jones, torus_jones_skein};
use pretzel_invariants::HalfLaurent;

use crate::error::CliError;
use crate::knot::Knot;
use crate::Method;

const NOT_IN_FAMILY: &str = "only P(-(2s+1), 2s+1, 2i+1) with s >= 1 has a formula here; use --method bracket";

fn diagram(knot: &Knot) -> OrientedDiagram {
    match knot {
        Knot::Pretzel(spec) => pretzel_diagram(spec),
        Knot::Torus(spec) => torus2_diagram(spec),
    }
}

/// `Err` carries the reason the method does not apply to this knot.
fn formula(knot: &Knot, method: Method) -> Result<HalfLaurent, String> {
    let value = match (knot, method) {
        (Knot::Torus(t), Method::Closed) => torus_jones(t.k()),
        (Knot::Torus(t), _) => torus_jones_skein(t.k()),
        (Knot::Pretzel(spec), method) => {
            let (s, i) = spec.as_family().ok_or_else(|| NOT_IN_FAMILY.to_string())?;
            if method == Method::Closed {
                pretzel_jones(s, i)
            } else {
                pretzel_jones_skein(s, i)
            }
        }
    };
    value.map(|v| v.polynomial).map_err(|e| e.to_string())
}

fn label(method: Method) -> &'static str {
    match method {
        Method::Closed => "closed",
        Method::Skein => "skein",
        Method::Bracket => "bracket",
        Method::All => "all",
    }
}

pub fn run(
    knot: &Knot,
    method: Method,
    max_crossings: usize,
    dump_pd: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let opts = BracketOptions { max_crossings, parallel: true };
    let d = diagram(knot);
    writeln!(out, "knot: {knot}")?;

    let methods: &[Method] = match method {
        Method::All => &[Method::Closed, Method::Skein, Method::Bracket],
        _ => std::slice::from_ref(&method),
    };
    let mut values = Vec::new();
    for &m in methods {
        if m == Method::Bracket {
            values.push((m, jones_from_bracket_with(&d, &opts)?));
            continue;
        }
        match formula(knot, m) {
            Ok(v) => values.push((m, v)),
            Err(reason) if method == Method::All => writeln!(out, "skipped {}: {reason}", label(m))?,
            Err(reason) => return Err(CliError::Usage(reason)),
        }
    }

    let agree = values.windows(2).all(|w| w[0].1 == w[1].1);
    if agree {
        writeln!(out, "jones: {}", values[0].1)?;
    } else {
        for (m, v) in &values {
            writeln!(out, "{}: {v}", label(*m))?;
        }
    }
    let names: Vec<&str> = values.iter().map(|(m, _)| label(*m)).collect();
    writeln!(out, "method: {}", names.join(", "))?;
    if method == Method::All {
        writeln!(out, "agree: {agree}")?;
    }
    if dump_pd {
        write!(out, "writhe: {}\npd:\n{}", d.writhe(), d.to_pd_string())?;
    }
    if agree {
        Ok(())
    } else {
        Err(CliError::Failed(format!("methods disagree on {knot}")))
    }
}
