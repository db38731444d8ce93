//! Exact invariants of the pretzel knots `P(-(2s+1), 2s+1, 2i+1)` and the
//! torus links `T(2, 2k)`.
//!
//! - [`laurent`]: Laurent polynomials in `t^(1/2)` with big-integer
//!   coefficients, and determinants over that ring.
//! - [`alexander`]: Seifert and presentation matrices, Alexander
//!   polynomials, the non-monic fiberedness obstruction.
//! - [`ideals`]: elementary ideals and certified membership tests.
//! - [`diagram`]: oriented PD diagrams for the pretzel and torus families.
//! - [`bracket`]: brute-force Kauffman bracket state sum.
//! - [`jones_closed`]: closed forms and skein recurrences for the Jones
//!   polynomial.
//!
//! ```
//! use pretzel_invariants::alexander::{alexander_polynomial, PretzelSpec};
//! use pretzel_invariants::jones_closed::pretzel_jones;
//!
//! let knot = PretzelSpec::family(2, 4).unwrap();
//! assert_eq!(alexander_polynomial(&knot).to_string(), "6*t^2 - 13*t + 6");
//! assert_eq!(pretzel_jones(2, 4).unwrap().polynomial.min_exponent().unwrap().to_string(), "-14");
//! ```

pub mod alexander;
pub mod bracket;
pub mod diagram;
pub mod ideals;
pub mod jones_closed;
pub mod laurent;
mod union_find;

pub use laurent::{EvalPoint, Exponent, HalfLaurent, LaurentMatrix, Sign};
