//! Exact scalar arithmetic (big rationals, prime fields), generalized and
//! fractional binomial coefficients, and dense truncated series arithmetic.

mod binomial;
mod field;
mod laurent;
mod rational;
mod unipoly;

pub use binomial::{binomial, factorial, frac_binomial, frac_binomial_in, gen_binomial};
pub use field::{is_prime, Field, PrimeField, Rationals};
pub use laurent::LaurentPrincipalPart;
pub use rational::Rat;
pub use unipoly::TruncatedUniPoly;
