//! Principal parts of local Laurent expansions: the negative-degree tail
//! of a series, with coefficients in degrees -order..-1.

use std::collections::BTreeMap;

use super::field::Field;

#[derive(Clone, Debug)]
pub struct LaurentPrincipalPart<F: Field> {
    field: F,
    order: u32,
    coeffs: BTreeMap<i64, F::Elem>,
}

impl<F: Field> PartialEq for LaurentPrincipalPart<F> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<F: Field> LaurentPrincipalPart<F> {
    pub fn new(field: F, order: u32) -> Self {
        assert!(order > 0, "order must be positive");
        LaurentPrincipalPart { field, order, coeffs: BTreeMap::new() }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeff(&self, deg: i64) -> F::Elem {
        self.coeffs.get(&deg).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn set_coeff(&mut self, deg: i64, c: F::Elem) {
        assert!(
            deg < 0 && deg >= -(self.order as i64),
            "degree {deg} outside [-{}, -1]",
            self.order
        );
        if self.field.is_zero(&c) {
            self.coeffs.remove(&deg);
        } else {
            self.coeffs.insert(deg, c);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &F::Elem)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest-degree coefficient (at -order), the leading pole.
    pub fn leading(&self) -> F::Elem {
        self.coeff(-(self.order as i64))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{Rat, Rationals};

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut p = LaurentPrincipalPart::new(Rationals, 3);
        p.set_coeff(-1, Rat::from_int(2));
        p.set_coeff(-1, Rat::zero());
        assert!(p.is_zero());
    }

    #[test]
    #[should_panic]
    fn nonnegative_degree_rejected() {
        let mut p = LaurentPrincipalPart::new(Rationals, 2);
        p.set_coeff(0, Rat::one());
    }
}
