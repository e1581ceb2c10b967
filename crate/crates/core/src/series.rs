//! Truncated power series with exact rational coefficients, and the three
//! central-binomial convolution identities.
//!
//! Each identity is checked twice: by summing the binomials directly and by
//! reading off a coefficient of a product of generating functions built from
//! `f(t) = 1 / sqrt(1 - 4t)` and `g(t) = (1 - 2t) f(t) / 2`.

use std::ops::{Add, Mul, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{rat, ratio};
use crate::serde_rat;

pub const DEFAULT_ORDER: usize = 30;

/// Coefficients `c_0 .. c_N` of a series truncated after `t^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    coeffs: Vec<BigRational>,
}

impl RationalSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    /// Pads with zeros (or truncates) to exactly `order`.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::from_ints(&[1], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs[..=order.min(self.order())].to_vec(), order.min(self.order()))
    }

    /// `1 / self`; the constant term must be nonzero.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let n = self.order();
        let mut inv: Vec<BigRational> = Vec::with_capacity(n + 1);
        inv.push(c0.recip());
        for k in 1..=n {
            let s: BigRational = (1..=k).map(|j| &self.coeffs[j] * &inv[k - j]).sum();
            inv.push(-s / c0);
        }
        Ok(Self { coeffs: inv })
    }

    /// Square root with constant term 1, by solving `s * s = self`
    /// coefficient by coefficient.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::InvalidArgument(
                "sqrt needs constant term 1".into(),
            ));
        }
        let n = self.order();
        let mut s: Vec<BigRational> = vec![BigRational::one()];
        let two = rat(2);
        for k in 1..=n {
            let cross: BigRational = (1..k).map(|j| &s[j] * &s[k - j]).sum();
            s.push((&self.coeffs[k] - cross) / &two);
        }
        Ok(Self { coeffs: s })
    }

    /// Term-by-term derivative; the order drops by one.
    pub fn derivative(&self) -> Self {
        let n = self.order();
        let coeffs = (1..=n.max(1))
            .map(|k| {
                if k <= n {
                    &self.coeffs[k] * rat(k as i64)
                } else {
                    BigRational::zero()
                }
            })
            .collect();
        Self { coeffs }
    }

    /// Antiderivative with zero constant term, truncated to the same order.
    pub fn integrate(&self) -> Self {
        let n = self.order();
        let mut coeffs = vec![BigRational::zero()];
        coeffs.extend((0..n).map(|k| &self.coeffs[k] / rat(k as i64 + 1)));
        Self { coeffs }
    }
}

impl Add for &RationalSeries {
    type Output = RationalSeries;

    fn add(self, rhs: &RationalSeries) -> RationalSeries {
        let n = self.order().min(rhs.order());
        RationalSeries {
            coeffs: (0..=n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl Sub for &RationalSeries {
    type Output = RationalSeries;

    fn sub(self, rhs: &RationalSeries) -> RationalSeries {
        let n = self.order().min(rhs.order());
        RationalSeries {
            coeffs: (0..=n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }
}

impl Mul for &RationalSeries {
    type Output = RationalSeries;

    fn mul(self, rhs: &RationalSeries) -> RationalSeries {
        let n = self.order().min(rhs.order());
        RationalSeries {
            coeffs: (0..=n)
                .map(|k| (0..=k).map(|j| &self.coeffs[j] * &rhs.coeffs[k - j]).sum())
                .collect(),
        }
    }
}

/// `C(2n, n)`.
pub fn central_binomial(n: u64) -> BigUint {
    let mut b = BigUint::one();
    for k in 1..=n {
        b = b * BigUint::from(n + k) / BigUint::from(k);
    }
    b
}

fn cb(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(central_binomial(n)))
}

/// `1 / sqrt(1 - 4t)` from the recurrence `a_{h+1} = 2(2h+1)/(h+1) a_h`,
/// which is `(1 - 4t) f' = 2 f` read coefficientwise.
pub fn inv_sqrt_one_minus_4t(order: usize) -> RationalSeries {
    let mut a = vec![BigRational::one()];
    for h in 0..order as i64 {
        let next = &a[h as usize] * ratio(2 * (2 * h + 1), h + 1);
        a.push(next);
    }
    RationalSeries { coeffs: a }
}

/// `(1 - 2t) / (2 sqrt(1 - 4t))`.
pub fn half_shifted(order: usize) -> RationalSeries {
    let f = inv_sqrt_one_minus_4t(order);
    let lin = RationalSeries::from_coeffs(vec![ratio(1, 2), rat(-1)], order);
    &lin * &f
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaCheck {
    pub part: u8,
    pub n: u64,
    /// the power of four
    #[serde(serialize_with = "serde_rat::serialize")]
    pub lhs: BigRational,
    /// right side by direct binomial summation
    #[serde(serialize_with = "serde_rat::serialize")]
    pub direct: BigRational,
    /// right side as a coefficient of the generating-function product
    #[serde(serialize_with = "serde_rat::serialize")]
    pub series: BigRational,
    pub pass: bool,
}

fn pow4(e: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(4u8).pow(e as u32))
}

/// Checks one of the three identities at `n`:
///
/// 1. `4^n = sum_{h=0}^{n} C(2h,h) C(2(n-h),n-h)` for `n >= 0`;
/// 2. `4^(n-1) = C(2n,n)/2 + sum_{h=2}^{n} (h-1)/h C(2(h-1),h-1) C(2(n-h),n-h)` for `n >= 2`;
/// 3. `4^(n-2) = (n-1)/n C(2(n-1),n-1)
///       + sum_{h=2}^{n-2} (h-1)(n-h-1)/(h(n-h)) C(2(h-1),h-1) C(2(n-1-h),n-1-h)` for `n >= 2`.
///
/// Parts 1, 2 and 3 are the coefficients of `t^n` in `f^2`, `g f` and `g^2`.
pub fn check_lemma(part: u8, n: u64) -> Result<LemmaCheck> {
    let min = match part {
        1 => 0,
        2 | 3 => 2,
        _ => return Err(Error::InvalidArgument(format!("lemma part {part} (expected 1, 2 or 3)"))),
    };
    if n < min {
        return Err(Error::LemmaRange { part, min, n });
    }
    let order = n as usize;
    let f = inv_sqrt_one_minus_4t(order);
    let g = half_shifted(order);
    let (lhs, direct, product) = match part {
        1 => {
            let direct = (0..=n).map(|h| cb(h) * cb(n - h)).sum();
            (pow4(n), direct, &f * &f)
        }
        2 => {
            let direct = cb(n) / rat(2)
                + (2..=n)
                    .map(|h| ratio(h as i64 - 1, h as i64) * cb(h - 1) * cb(n - h))
                    .sum::<BigRational>();
            (pow4(n - 1), direct, &g * &f)
        }
        _ => {
            let ni = n as i64;
            let direct = ratio(ni - 1, ni) * cb(n - 1)
                + (2..=n.saturating_sub(2))
                    .map(|h| {
                        let hi = h as i64;
                        ratio((hi - 1) * (ni - hi - 1), hi * (ni - hi)) * cb(h - 1) * cb(n - 1 - h)
                    })
                    .sum::<BigRational>();
            (pow4(n - 2), direct, &g * &g)
        }
    };
    let series = product.coeff(order).clone();
    Ok(LemmaCheck {
        part,
        n,
        pass: lhs == direct && lhs == series,
        lhs,
        direct,
        series,
    })
}

/// Every part over its range up to `max_n`.
pub fn check_all(max_n: u64) -> Vec<LemmaCheck> {
    let mut out = Vec::new();
    for part in 1..=3u8 {
        let lo = if part == 1 { 0 } else { 2 };
        for n in lo..=max_n {
            out.push(check_lemma(part, n).expect("in range"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(n: u64) -> BigUint {
        (1..=n).map(BigUint::from).product()
    }

    #[test]
    fn central_binomial_small_and_factorial_oracle() {
        assert_eq!(central_binomial(0), BigUint::one());
        assert_eq!(central_binomial(1), BigUint::from(2u8));
        let f = factorial(60) / (factorial(30) * factorial(30));
        assert_eq!(central_binomial(30), f);
        assert!(central_binomial(30) > BigUint::from(u64::MAX) / BigUint::from(1_000_000u32));
        // b_{h+1} = 2(2h+1)/(h+1) b_h
        for h in 0..30u64 {
            assert_eq!(
                central_binomial(h + 1) * BigUint::from(h + 1),
                central_binomial(h) * BigUint::from(2 * (2 * h + 1))
            );
        }
    }

    #[test]
    fn expansion_of_inverse_sqrt() {
        let f = inv_sqrt_one_minus_4t(5);
        let want: Vec<BigRational> = [1, 2, 6, 20, 70, 252].iter().map(|&x| rat(x)).collect();
        assert_eq!(f.coeffs(), &want[..]);
        // generic square root route agrees
        let one_minus_4t = RationalSeries::from_ints(&[1, -4], 20);
        let via_sqrt = one_minus_4t.sqrt().unwrap().reciprocal().unwrap();
        assert_eq!(via_sqrt, inv_sqrt_one_minus_4t(20));
    }

    #[test]
    fn square_of_half_shifted() {
        let g = half_shifted(20);
        let sq = &g * &g;
        let num = RationalSeries::from_ints(&[1, -4, 4], 20);
        let den = RationalSeries::from_ints(&[4, -16], 20);
        assert_eq!(sq, &num * &den.reciprocal().unwrap());
        // 1/2 + t/(1-4t)
        let gf = &g * &inv_sqrt_one_minus_4t(20);
        for n in 1..=20 {
            assert_eq!(*gf.coeff(n), pow4(n as u64 - 1));
        }
    }

    #[test]
    fn half_sqrt_by_integration() {
        // 1/2 - sum_{h>=1} C(2(h-1),h-1)/h t^h = sqrt(1-4t)/2
        let f = inv_sqrt_one_minus_4t(15);
        let integrated = f.integrate();
        let lhs = &RationalSeries::from_coeffs(vec![ratio(1, 2)], 15) - &integrated;
        let rhs = RationalSeries::from_ints(&[1, -4], 15).sqrt().unwrap().scale(&ratio(1, 2));
        assert_eq!(lhs, rhs);
        assert_eq!(f.derivative().order(), 14);
    }

    #[test]
    fn reciprocal_round_trip_and_errors() {
        let s = RationalSeries::from_ints(&[3, 1, -2, 5], 10);
        let id = &s * &s.reciprocal().unwrap();
        assert_eq!(id, RationalSeries::one(10));
        let z = RationalSeries::from_ints(&[0, 1], 4);
        assert_eq!(z.reciprocal(), Err(Error::ZeroConstantTerm));
        assert!(RationalSeries::from_ints(&[4, 1], 4).sqrt().is_err());
    }

    #[test]
    fn lemma_small_cases() {
        let c = check_lemma(1, 2).unwrap();
        assert_eq!(c.lhs, rat(16));
        assert!(c.pass);
        let c = check_lemma(2, 2).unwrap();
        assert_eq!(c.lhs, rat(4));
        assert!(c.pass);
        assert_eq!(check_lemma(1, 0).unwrap().direct, rat(1));
        assert!(matches!(check_lemma(2, 1), Err(Error::LemmaRange { part: 2, min: 2, n: 1 })));
        assert!(matches!(check_lemma(3, 0), Err(Error::LemmaRange { .. })));
        assert!(check_lemma(4, 5).is_err());
    }

    #[test]
    fn quarter_coefficient_in_part_three_fails() {
        // with (n-1)/(4n) in front of the first binomial the identity breaks at n = 2
        let n = 2i64;
        let printed = ratio(n - 1, 4 * n) * cb(1);
        assert_ne!(printed, pow4(0));
        assert!(check_lemma(3, 2).unwrap().pass);
    }
}
