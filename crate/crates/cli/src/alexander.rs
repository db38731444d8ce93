use std::io::Write;

use pretzel_invariants::alexander::{
    alexander_polynomial, fibered_obstruction, presentation_matrix, seifert_matrix, PretzelSpec,
};
use pretzel_invariants::diagram::pretzel_diagram;

use crate::error::CliError;

pub fn run(spec: &PretzelSpec, show_matrices: bool, dump_pd: bool, out: &mut dyn Write) -> Result<(), CliError> {
    let delta = alexander_polynomial(spec);
    let verdict = fibered_obstruction(&delta).map_err(|e| CliError::Failed(e.to_string()))?;
    writeln!(out, "knot: {spec}")?;
    writeln!(out, "alexander: {delta}")?;
    writeln!(out, "fibered: {verdict}")?;
    if show_matrices {
        writeln!(out, "seifert: {}", seifert_matrix(spec))?;
        write!(out, "presentation (tV - V^T):\n{}", presentation_matrix(spec))?;
    }
    if dump_pd {
        write!(out, "pd:\n{}", pretzel_diagram(spec).to_pd_string())?;
    }
    Ok(())
}
