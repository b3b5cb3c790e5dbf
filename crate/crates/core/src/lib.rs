//! Exact algebra, lemma checks and exhaustive search for N-tilings of a
//! triangle by copies of a triangle with a 120° angle.

pub mod exactnum;
pub mod lemmalab;
pub mod cli;
pub mod constraints;
pub mod tilealgebra;
pub mod search;
