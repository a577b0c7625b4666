//! Free-group words, presentations, Fox calculus, Alexander polynomials,
//! automorphisms of free groups and invariants of class-2 nilpotent Lie algebras.

pub mod alexander;
pub mod autom;
pub mod error;
pub mod fox;
pub mod parse;
pub mod poly;
pub mod presentation;
pub mod scheuneman;
pub mod word;

pub use error::{Error, Result};
pub use word::{Alphabet, Generator, Letter, Word};
