//! Access-optimal convertible codes over prime fields.
//!
//! Two families are supported in the merge regime, where `zeta` codewords of an
//! initial code are combined into one codeword of a final code:
//!
//! * MDS codes built from generalized Reed-Solomon codes on cosets of a
//!   multiplicative subgroup ([`mds_convert`]);
//! * locally repairable codes built with the good polynomial `x^{r+1}`
//!   ([`lrc_convert`]).
//!
//! Every conversion returns a [`access::ConversionTrace`] recording which
//! symbols were kept, read and written, and [`bounds`] gives the matching lower
//! bounds on those costs.

pub mod access;
pub mod bounds;
pub mod cli;
pub mod codes;
pub mod error;
pub mod field;
pub mod lrc_convert;
pub mod matrix;
pub mod mds_convert;
pub mod poly;

pub use error::{CodeError, Result};
pub use field::{FieldElem, PrimeField};
