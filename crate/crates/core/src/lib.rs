#![no_std]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod error;
pub mod hypgeo;
pub mod kernel;
pub mod quadrature;
pub mod seqan;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use hypgeo::{Complex, Domain, DomainPoint, LiftedPoint};
