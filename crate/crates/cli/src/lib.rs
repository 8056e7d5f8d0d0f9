//! Verification pipeline, JSON reports and CLI front end for the ML1 affine
//! pseudo-planes `X = {x^m y = z^d - 1} / Z_d`.
//!
//! [`pipeline::verify`] runs every check for a triple `(d, e, m)` and returns
//! a [`report::VerificationReport`]; [`pipeline::classify`] works directly on
//! a divisor pair; [`pipeline::sweep`] runs `verify` over a parameter grid.

pub mod pipeline;
pub mod render;
pub mod report;

pub use pipeline::{classify, sweep, verify, InputError, VerifyOptions};
pub use report::{ClassifyReport, SweepReport, Verdict, VerificationReport, FORMAT_VERSION};
