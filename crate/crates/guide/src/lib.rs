//! The chapters of the guide in `book/src`, one module each, so that
//! `cargo test --doc` runs every Rust snippet in the book.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/laurent.md")]
pub mod laurent {}
#[doc = include_str!("../../../book/src/alexander.md")]
pub mod alexander {}
#[doc = include_str!("../../../book/src/ideals.md")]
pub mod ideals {}
#[doc = include_str!("../../../book/src/diagrams.md")]
pub mod diagrams {}
#[doc = include_str!("../../../book/src/bracket.md")]
pub mod bracket {}
#[doc = include_str!("../../../book/src/closed_forms.md")]
pub mod closed_forms {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
#[doc = include_str!("../../../README.md")]
pub mod readme {}
