//! Exact toolkit for Harish-Chandra series of rational Cherednik algebras
//! attached to finite Coxeter groups.

pub mod arith;
pub mod cli;
pub mod coxeter;
pub mod error;
pub mod gha;
pub mod hecke;
pub mod repdata;
pub mod simplecount;
pub mod zelt;

pub use error::{Error, Result};
