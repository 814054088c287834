//! Exact construction and classification of p-ary bent functions.

pub mod bent;
pub mod constructions;
pub mod cyclo;
pub mod error;
pub mod field;
pub mod pfunc;
pub mod reference;
pub mod search;
pub mod walsh;

pub use cyclo::CycInt;
pub use error::{Error, Result};
pub use field::{FieldCtx, FieldElement};
pub use pfunc::{Component, Domain, PFunction};
pub use walsh::{walsh, walsh_fast, walsh_naive, WalshSpectrum};
