//! Dense truncated polynomial arithmetic: elements of k[t]/(t^cap).

use super::field::Field;
use crate::error::{Error, Result};

/// Dense coefficient list indexed by degree 0..cap-1. All degree >= cap
/// terms are dropped by multiplication.
#[derive(Clone, Debug)]
pub struct TruncatedUniPoly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> PartialEq for TruncatedUniPoly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<F: Field> TruncatedUniPoly<F> {
    pub fn zero(field: F, cap: usize) -> Self {
        assert!(cap > 0, "cap must be positive");
        let coeffs = vec![field.zero(); cap];
        TruncatedUniPoly { field, coeffs }
    }

    pub fn one(field: F, cap: usize) -> Self {
        let mut p = Self::zero(field, cap);
        p.coeffs[0] = p.field.one();
        p
    }

    pub fn from_coeffs(field: F, coeffs: Vec<F::Elem>, cap: usize) -> Self {
        let mut p = Self::zero(field, cap);
        for (i, c) in coeffs.into_iter().enumerate().take(cap) {
            p.coeffs[i] = c;
        }
        p
    }

    pub fn from_i64(field: F, coeffs: &[i64], cap: usize) -> Self {
        let elems = coeffs.iter().map(|&c| field.from_i64(c)).collect();
        Self::from_coeffs(field, elems, cap)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn cap(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, deg: usize) -> F::Elem {
        if deg < self.coeffs.len() {
            self.coeffs[deg].clone()
        } else {
            self.field.zero()
        }
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, deg: usize, c: F::Elem) {
        if deg < self.coeffs.len() {
            self.coeffs[deg] = c;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.field.is_zero(c))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.cap(), other.cap(), "cap mismatch");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| self.field.add(a, b))
            .collect();
        TruncatedUniPoly { field: self.field.clone(), coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.cap(), other.cap(), "cap mismatch");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| self.field.sub(a, b))
            .collect();
        TruncatedUniPoly { field: self.field.clone(), coeffs }
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|c| self.field.mul(c, s)).collect();
        TruncatedUniPoly { field: self.field.clone(), coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cap(), other.cap(), "cap mismatch");
        let cap = self.cap();
        let mut out = Self::zero(self.field.clone(), cap);
        for i in 0..cap {
            if self.field.is_zero(&self.coeffs[i]) {
                continue;
            }
            for j in 0..cap - i {
                let prod = self.field.mul(&self.coeffs[i], &other.coeffs[j]);
                out.coeffs[i + j] = self.field.add(&out.coeffs[i + j], &prod);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.field.clone(), self.cap());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse modulo t^cap. The constant term must be a unit.
    pub fn series_inverse(&self) -> Result<Self> {
        if self.field.is_zero(&self.coeffs[0]) {
            return Err(Error::NonUnit);
        }
        let c0_inv = self.field.inv(&self.coeffs[0])?;
        let cap = self.cap();
        let mut out = Self::zero(self.field.clone(), cap);
        out.coeffs[0] = c0_inv.clone();
        for n in 1..cap {
            let mut acc = self.field.zero();
            for i in 1..=n {
                let prod = self.field.mul(&self.coeffs[i], &out.coeffs[n - i]);
                acc = self.field.add(&acc, &prod);
            }
            out.coeffs[n] = self.field.neg(&self.field.mul(&c0_inv, &acc));
        }
        Ok(out)
    }
}
