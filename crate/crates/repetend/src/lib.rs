//! Exact arithmetic of repeating decimals and the keystreams they generate.
//!
//! A reduced fraction whose denominator is coprime to 10 expands to a purely
//! periodic decimal; the repeating block (the repetend) has length equal to
//! the multiplicative order of 10 modulo the denominator. This crate computes
//! those expansions exactly, selects denominators by period length, counts
//! reduced fractions and coprime pairs over bounded ranges, and exposes the
//! repetend digits as an infinite keystream with a demonstration cipher on
//! top.
//!
//! Everything is integer arithmetic; there is no floating point anywhere.
//! The crate is `no_std` (requires `alloc`).

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod census;
pub mod cipher;
pub mod expansion;
pub mod keystream;
pub mod numtheory;

pub use census::{CensusReport, OddSeriesEntry};
pub use cipher::CipherText;
pub use expansion::{DecimalExpansion, DigitStream, ExactRational};
pub use keystream::KeyDescriptor;
pub use numtheory::{Factorization, SearchPolicy};
