//! Abstract field interface with two realizations: the rationals and
//! prime fields F_p. Elements are plain values; the field handle holds
//! the context (the modulus, for F_p).

use std::fmt::Debug;

use num::ToPrimitive;

use super::rational::Rat;
use crate::error::{Error, Result};

pub trait Field: Clone + Debug {
    type Elem: Clone + PartialEq + Eq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// Embed an exact rational; fails if the denominator vanishes in the field.
    fn from_rat(&self, r: &Rat) -> Result<Self::Elem>;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    /// 0 for the rationals, p for F_p.
    fn characteristic(&self) -> u64;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn describe(&self) -> String {
        match self.characteristic() {
            0 => "Q".to_string(),
            p => format!("F_{p}"),
        }
    }
}

/// The field of rational numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rat;

    fn zero(&self) -> Rat {
        Rat::zero()
    }

    fn one(&self) -> Rat {
        Rat::one()
    }

    fn from_i64(&self, n: i64) -> Rat {
        Rat::from_int(n)
    }

    fn from_rat(&self, r: &Rat) -> Result<Rat> {
        Ok(r.clone())
    }

    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a + b
    }

    fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        a - b
    }

    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a * b
    }

    fn neg(&self, a: &Rat) -> Rat {
        -a
    }

    fn inv(&self, a: &Rat) -> Result<Rat> {
        a.recip()
    }

    fn characteristic(&self) -> u64 {
        0
    }
}

/// The prime field F_p. Elements are residues in [0, p).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::BadPrime(p));
        }
        Ok(PrimeField { p })
    }

    /// Odd prime field; rejects p = 2 as well.
    pub fn new_odd(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::BadPrime(p));
        }
        Self::new(p)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn from_i64(&self, n: i64) -> u64 {
        self.elem(n)
    }

    fn from_rat(&self, r: &Rat) -> Result<u64> {
        let p = num::BigInt::from(self.p);
        let num = ((r.numer() % &p) + &p) % &p;
        let den = ((r.denom() % &p) + &p) % &p;
        let num = num.to_u64().expect("residue fits in u64");
        let den = den.to_u64().expect("residue fits in u64");
        if den == 0 {
            return Err(Error::NonInvertible { p: self.p });
        }
        Ok(self.mul(&num, &self.inv(&den)?))
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        (self.p - a % self.p) % self.p
    }

    fn inv(&self, a: &u64) -> Result<u64> {
        if a % self.p == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(*a, self.p - 2))
    }

    fn characteristic(&self) -> u64 {
        self.p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(101));
        assert!(!is_prime(1));
        assert!(!is_prime(91));
        assert_eq!(PrimeField::new(15), Err(Error::BadPrime(15)));
        assert_eq!(PrimeField::new_odd(2), Err(Error::BadPrime(2)));
    }

    #[test]
    fn fp_arithmetic() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.add(&5, &4), 2);
        assert_eq!(f.sub(&2, &5), 4);
        assert_eq!(f.mul(&3, &5), 1);
        assert_eq!(f.inv(&3).unwrap(), 5);
        assert_eq!(f.inv(&0), Err(Error::DivisionByZero));
        assert_eq!(f.from_i64(-1), 6);
    }

    #[test]
    fn fp_from_rat() {
        let f = PrimeField::new(5).unwrap();
        // -1/8 mod 5: 8 ≡ 3, 3^{-1} = 2, -1·2 = 3.
        assert_eq!(f.from_rat(&Rat::new(-1, 8)).unwrap(), 3);
        // denominator divisible by p
        assert_eq!(
            f.from_rat(&Rat::new(1, 10)),
            Err(Error::NonInvertible { p: 5 })
        );
    }
}
