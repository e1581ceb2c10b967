//! Small exact linear algebra helpers over `i64` and `BigRational`.
//!
//! Matrices here are tiny (rank at most a dozen or so), so everything is
//! dense and row-major with no attempt at blocking.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Determinant by Gaussian elimination with exact rationals.
pub fn det_rational(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &p;
            for c in col..n {
                let sub = &factor * &a[col][c];
                a[r][c] -= sub;
            }
        }
    }
    det
}

/// All leading principal minors, smallest first.
pub fn leading_minors(m: &[Vec<BigRational>]) -> Vec<BigRational> {
    (1..=m.len())
        .map(|k| {
            let sub: Vec<Vec<BigRational>> = m[..k].iter().map(|row| row[..k].to_vec()).collect();
            det_rational(&sub)
        })
        .collect()
}

/// Fraction-free (Bareiss) determinant of an `n x n` integer matrix.
pub fn det_int(m: &[i64], n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<BigInt> = m.iter().map(|&x| BigInt::from(x)).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for c in 0..n {
                a.swap(k * n + c, r * n + c);
            }
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                a[i * n + j] = v / &prev;
            }
        }
        prev = a[k * n + k].clone();
    }
    sign * &a[(n - 1) * n + (n - 1)]
}

/// Coefficients `c[0..=n]` of `det(x I - M)` (so `c[n] = 1`), by Faddeev-LeVerrier.
pub fn char_poly(m: &[i64], n: usize) -> Vec<i64> {
    let mm: Vec<i128> = m.iter().map(|&x| x as i128).collect();
    let mut c = vec![0i128; n + 1];
    c[n] = 1;
    // running matrix M_k
    let mut mk = vec![0i128; n * n];
    for k in 1..=n {
        // M_k = M * M_{k-1} + c_{n-k+1} I
        let mut next = vec![0i128; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut s = 0i128;
                for l in 0..n {
                    s += mm[i * n + l] * mk[l * n + j];
                }
                next[i * n + j] = s;
            }
            next[i * n + i] += c[n - k + 1];
        }
        mk = next;
        let mut tr = 0i128;
        for i in 0..n {
            for l in 0..n {
                tr += mm[i * n + l] * mk[l * n + i];
            }
        }
        debug_assert_eq!(tr % k as i128, 0);
        c[n - k] = -tr / k as i128;
    }
    c.into_iter().map(|x| x as i64).collect()
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// `x^k` for a rational and non-negative integer exponent.
pub fn pow(x: &BigRational, k: u32) -> BigRational {
    num_traits::pow(x.clone(), k as usize)
}

pub fn is_positive(x: &BigRational) -> bool {
    x.is_positive()
}
