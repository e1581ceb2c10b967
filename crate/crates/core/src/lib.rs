//! Finite root systems, extended Dynkin diagrams and exact checks of the
//! identity `sum_{i=0}^{l} nu(R^(i)) = 1`, where `R^(i)` is the root system of
//! the extended diagram with node `i` removed and
//! `nu(R) = prod_i (d_i - 1) / d_i` over the invariant degrees of `W(R)`.
//!
//! Besides the identity itself the crate checks the central-binomial
//! convolutions it reduces to for the classical families, several character
//! identities over explicitly enumerated Weyl groups, and (by Monte Carlo)
//! that `nu(R)` is the fraction of the sphere inside the simple-root cone.
//!
//! All verification arithmetic is exact (`BigRational`); floating point
//! appears only in [`geometry`].

pub mod cli;
pub mod diagram;
pub mod error;
pub mod geometry;
pub mod identity;
pub mod invariants;
pub mod linalg;
pub mod rootsys;
pub mod series;
pub mod suite;
pub mod weylgrp;

pub use diagram::{cartan_of_type, classify, extend, CartanMatrix, DecompositionLabel, Family, MarkedDiagram, TypeLabel};
pub use error::{Error, Result};
pub use num_rational::BigRational;
pub use rootsys::{Root, RootSystem};

/// Rationals travel as reduced `"p/q"` strings (integers as `"p"`).
pub(crate) mod serde_rat {
    use num_rational::BigRational;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(x)
    }
}

/// The irreducible types of the standard sweep: all exceptional types and
/// the classical families up to rank `max_rank`.
pub fn standard_types(max_rank: usize) -> Vec<TypeLabel> {
    let mut out = Vec::new();
    for (fam, lo) in [(Family::A, 1), (Family::B, 2), (Family::C, 2), (Family::D, 4)] {
        for r in lo..=max_rank {
            out.push(TypeLabel::new(fam, r).expect("admissible"));
        }
    }
    for (fam, r) in [(Family::E, 6), (Family::E, 7), (Family::E, 8), (Family::F, 4), (Family::G, 2)] {
        out.push(TypeLabel::new(fam, r).expect("admissible"));
    }
    out
}
