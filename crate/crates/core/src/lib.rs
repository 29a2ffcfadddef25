//! Exact computation of twisted de Rham, Dolbeault, Bott-Chern, and Aeppli
//! cohomologies on the invariant complex of a Lie algebra with complex
//! structure, with full Hodge theory over the field Q(i).
//!
//! The `examples/` directory is the primary tour of the library; the
//! `twisted-hodge` binary exposes the same engine as a CLI.

pub mod catalog;
pub mod cli;
pub mod cohomology;
pub mod complex;
pub mod error;
pub mod hodge;
pub mod matrix;
pub mod operator;
pub mod scalar;
pub mod subspace;
pub mod twist;

use complex::SpecDocument;
use error::Result;
use scalar::GaussianRational;
use twist::TwistedComplex;

/// Full pipeline: parse and validate a spec document, build the monomial
/// basis and untwisted operators, validate the twist, and assemble the
/// twisted complex with all structural identities verified.
pub fn build_complex(
    doc: &SpecDocument,
    theta1: Vec<GaussianRational>,
    theta2: Vec<GaussianRational>,
    allow_large: bool,
) -> Result<TwistedComplex> {
    let spec = complex::parse_and_validate(doc)?;
    let basis = complex::build_basis(&spec, allow_large)?;
    let ops = complex::assemble_untwisted(&spec, &basis);
    let pair = twist::validate_twist(&spec, &basis, &ops, theta1, theta2)?;
    Ok(twist::assemble_twisted(&spec, &basis, &ops, pair))
}
