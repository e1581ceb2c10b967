//! Degrees, exponents, Weyl group orders and `nu(R) = prod (d_i - 1) / d_i`.
//!
//! Degrees come from two independent places: a per-type catalogue
//! ([`degrees_of`]) and the height distribution of the positive roots
//! ([`exponents_from_heights`]). The two must agree.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::diagram::{DecompositionLabel, Family, TypeLabel};
use crate::linalg::ratio;
use crate::rootsys::RootSystem;

/// Sorted invariant degrees `d_1 <= ... <= d_l`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct DegreeVector(Vec<u64>);

impl DegreeVector {
    pub fn new(mut degrees: Vec<u64>) -> Self {
        degrees.sort_unstable();
        Self(degrees)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &DegreeVector) -> DegreeVector {
        DegreeVector::new(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn exponents(&self) -> ExponentVector {
        ExponentVector(self.0.iter().map(|d| d - 1).collect())
    }
}

/// Sorted exponents `m_i = d_i - 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct ExponentVector(Vec<u64>);

impl ExponentVector {
    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn degrees(&self) -> DegreeVector {
        DegreeVector(self.0.iter().map(|m| m + 1).collect())
    }
}

fn catalogue(t: TypeLabel) -> Vec<u64> {
    let n = t.rank() as u64;
    match t.family() {
        Family::A => (2..=n + 1).collect(),
        Family::B | Family::C => (1..=n).map(|k| 2 * k).collect(),
        Family::D => (1..n).map(|k| 2 * k).chain([n]).collect(),
        Family::E => match n {
            6 => vec![2, 5, 6, 8, 9, 12],
            7 => vec![2, 6, 8, 10, 12, 14, 18],
            _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
        },
        Family::F => vec![2, 6, 8, 12],
        Family::G => vec![2, 6],
    }
}

/// Concatenated catalogue degrees of the factors.
pub fn degrees_of(label: &DecompositionLabel) -> DegreeVector {
    DegreeVector::new(label.factors().iter().flat_map(|&t| catalogue(t)).collect())
}

/// Exponents as the conjugate partition of the height distribution:
/// `#{i : m_i >= k}` equals the number of positive roots of height `k`.
pub fn exponents_from_heights(rs: &RootSystem) -> ExponentVector {
    let max = rs.positive().iter().map(|r| r.height()).max().unwrap_or(0) as usize;
    let mut count = vec![0usize; max + 2];
    for r in rs.positive() {
        count[r.height() as usize] += 1;
    }
    let mut exps = Vec::with_capacity(rs.rank());
    for m in 1..=max {
        for _ in 0..count[m] - count[m + 1] {
            exps.push(m as u64);
        }
    }
    exps.sort_unstable();
    ExponentVector(exps)
}

pub fn nu(d: &DegreeVector) -> BigRational {
    d.0.iter()
        .map(|&x| ratio(x as i64 - 1, x as i64))
        .fold(BigRational::one(), |acc, f| acc * f)
}

/// `|W| = prod d_i`.
pub fn weyl_order(d: &DegreeVector) -> BigUint {
    d.0.iter().map(|&x| BigUint::from(x)).product()
}

/// Convenience: `nu(degrees_of(label))`.
pub fn nu_of(label: &DecompositionLabel) -> BigRational {
    nu(&degrees_of(label))
}
