//! Generalized and fractional binomial coefficients.

use num::{BigInt, BigUint, One};

use super::field::Field;
use super::rational::Rat;
use crate::error::{Error, Result};

/// binom(m, r) = m(m-1)...(m-r+1)/r! for arbitrary integer m. Always an
/// exact integer, also for negative m.
pub fn gen_binomial(m: i64, r: u32) -> BigInt {
    let mut num = BigInt::one();
    for i in 0..r as i64 {
        num *= BigInt::from(m - i);
    }
    let mut den = BigInt::one();
    for i in 1..=r as i64 {
        den *= BigInt::from(i);
    }
    num / den
}

/// Ordinary binomial coefficient for nonnegative arguments.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// binom(1/k, j) = (1/k)(1/k - 1)...(1/k - j + 1)/j! as an exact rational.
pub fn frac_binomial(k: u64, j: u32) -> Rat {
    assert!(k > 0, "k must be positive");
    let inv_k = Rat::new(1, k as i64);
    let mut acc = Rat::one();
    for i in 0..j as i64 {
        acc = &acc * &(&inv_k - &Rat::from_int(i));
        acc = &acc / &Rat::from_int(i as i64 + 1);
    }
    acc
}

/// binom(1/k, j) reduced into an arbitrary field. In characteristic p the
/// expansion of the k-th root only exists when p is odd and p does not
/// divide k; otherwise this is the wild case.
pub fn frac_binomial_in<F: Field>(field: &F, k: u64, j: u32) -> Result<F::Elem> {
    let p = field.characteristic();
    if p != 0 && (p == 2 || k % p == 0) {
        return Err(Error::WildCharacteristic { p, k });
    }
    field.from_rat(&frac_binomial(k, j))
}
