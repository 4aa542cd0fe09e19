//! Construction, enumeration and brute-force verification of the self-dual
//! cyclic codes of length 2^s over the chain ring F_{2^m} + uF_{2^m}, u^2 = 0,
//! together with their Gray images over F_{2^m}.

pub mod bitmatrix;
pub mod cli;
pub mod codes;
pub mod error;
pub mod gf2m;
pub mod gray;
pub mod linalg;
pub mod oracle;
pub mod ring;
pub mod solver;
pub mod ypoly;

pub use error::{Error, Result};
pub use codes::{CodeSpec, Family};
pub use gf2m::{FieldElement, FieldSpec};
pub use ring::{RingElement, RingVector};
pub use solver::SolutionSpace;
pub use ypoly::YPoly;
