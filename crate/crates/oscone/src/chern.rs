//! Chern-class calculus on P^1 x P^{d-2}: the per-fiber point count and
//! the total degree of the rank-drop curve, each computed by several
//! independent routes that must agree exactly.

use num::{BigInt, ToPrimitive};

use crate::error::{Error, Result};
use crate::exactalg::{gen_binomial, Field, Rat, Rationals, TruncatedUniPoly};

/// Element of k[s,t]/(s^2, t^{d-1}): the bigraded ring carrying the
/// hyperplane classes s (from P^1) and t (from P^{d-2}).
#[derive(Clone, Debug)]
pub struct TruncatedBigradedPoly<F: Field> {
    field: F,
    d: u32,
    // index (s_deg, t_deg) -> s_deg * (d-1) + t_deg
    coeffs: Vec<F::Elem>,
}

impl<F: Field> PartialEq for TruncatedBigradedPoly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.d == other.d && self.coeffs == other.coeffs
    }
}

impl<F: Field> TruncatedBigradedPoly<F> {
    pub fn zero(field: F, d: u32) -> Result<Self> {
        if d < 3 {
            return Err(Error::BadDimension { d });
        }
        let n = 2 * (d as usize - 1);
        let coeffs = vec![field.zero(); n];
        Ok(TruncatedBigradedPoly { field, d, coeffs })
    }

    pub fn one(field: F, d: u32) -> Result<Self> {
        let mut p = Self::zero(field, d)?;
        p.coeffs[0] = p.field.one();
        Ok(p)
    }

    fn idx(&self, s_deg: usize, t_deg: usize) -> usize {
        s_deg * (self.d as usize - 1) + t_deg
    }

    pub fn coeff(&self, s_deg: usize, t_deg: usize) -> F::Elem {
        if s_deg <= 1 && t_deg <= self.d as usize - 2 {
            self.coeffs[self.idx(s_deg, t_deg)].clone()
        } else {
            self.field.zero()
        }
    }

    pub fn set_coeff(&mut self, s_deg: usize, t_deg: usize, c: F::Elem) {
        if s_deg <= 1 && t_deg <= self.d as usize - 2 {
            let i = self.idx(s_deg, t_deg);
            self.coeffs[i] = c;
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.d, other.d);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| self.field.add(a, b))
            .collect();
        TruncatedBigradedPoly { field: self.field.clone(), d: self.d, coeffs }
    }

    /// Product with s^2 = 0 and t^{d-1} = 0 enforced (out-of-range terms dropped).
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.d, other.d);
        let tmax = self.d as usize - 2;
        let mut out = Self::zero(self.field.clone(), self.d).expect("d validated");
        for s1 in 0..=1usize {
            for t1 in 0..=tmax {
                let a = self.coeff(s1, t1);
                if self.field.is_zero(&a) {
                    continue;
                }
                for s2 in 0..=1usize - s1 {
                    for t2 in 0..=tmax - t1 {
                        let b = other.coeff(s2, t2);
                        if self.field.is_zero(&b) {
                            continue;
                        }
                        let prod = self.field.mul(&a, &b);
                        let cur = out.coeff(s1 + s2, t1 + t2);
                        out.set_coeff(s1 + s2, t1 + t2, self.field.add(&cur, &prod));
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.field.clone(), self.d).expect("d validated");
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

/// a*s + b*t as a bigraded class.
pub fn linear_class<F: Field>(field: F, d: u32, a: i64, b: i64) -> Result<TruncatedBigradedPoly<F>> {
    let mut p = TruncatedBigradedPoly::zero(field, d)?;
    let ea = p.field.from_i64(a);
    let eb = p.field.from_i64(b);
    p.set_coeff(1, 0, ea);
    p.set_coeff(0, 1, eb);
    Ok(p)
}

/// Total Chern class of the cokernel bundle: 1/(1-t) truncated mod t^{d-1},
/// i.e. 1 + t + ... + t^{d-2}.
pub fn cokernel_total_chern(d: u32) -> Result<TruncatedUniPoly<Rationals>> {
    if d < 3 {
        return Err(Error::BadDimension { d });
    }
    let cap = d as usize - 1;
    let one_minus_t = TruncatedUniPoly::from_i64(Rationals, &[1, -1], cap);
    one_minus_t.series_inverse()
}

fn rat_to_i128(r: &Rat, what: &str) -> Result<i128> {
    if !r.is_integer() {
        return Err(Error::InternalMismatch(format!("{what} is not an integer: {r}")));
    }
    r.numer()
        .to_i128()
        .ok_or_else(|| Error::InternalMismatch(format!("{what} overflows i128")))
}

/// Per-fiber count via the twisting identity
/// c_k(F (x) L) = sum_i binom(rank - i, k - i) c_i(F) c_1(L)^{k-i}
/// with rank = k = d-2 and c_1(L) = 2.
pub fn fiber_count_twisting(d: u32) -> Result<i128> {
    let c = cokernel_total_chern(d)?;
    let r = d as i64 - 2;
    let k = d as u32 - 2;
    let mut acc = Rat::zero();
    for i in 0..=k {
        let b = Rat::from_bigint(gen_binomial(r - i as i64, k - i));
        let two_pow = Rat::from_bigint(BigInt::from(2).pow(k - i));
        acc = &acc + &(&(&b * &c.coeff(i as usize)) * &two_pow);
    }
    rat_to_i128(&acc, "twisting-identity fiber count")
}

/// Per-fiber count read off the bigraded class sum_i t^i (3s+2t)^{d-2-i}
/// at s^0 t^{d-2}, i.e. with the P^1 direction switched off.
pub fn fiber_count_from_bigraded(d: u32) -> Result<i128> {
    let class = top_chern_bigraded(d)?;
    rat_to_i128(&class.coeff(0, d as usize - 2), "bigraded fiber count")
}

/// The top Chern class c_{d-2}(F~(3,2)) = sum_i c_i(F~) (3s+2t)^{d-2-i}
/// with c_i(F~) = t^i.
pub fn top_chern_bigraded(d: u32) -> Result<TruncatedBigradedPoly<Rationals>> {
    if d < 3 {
        return Err(Error::BadDimension { d });
    }
    let l = linear_class(Rationals, d, 3, 2)?;
    let mut acc = TruncatedBigradedPoly::zero(Rationals, d)?;
    for i in 0..=d - 2 {
        let mut ti = TruncatedBigradedPoly::zero(Rationals, d)?;
        ti.set_coeff(0, i as usize, Rat::one());
        acc = acc.add(&ti.mul(&l.pow(d - 2 - i)));
    }
    Ok(acc)
}

/// Degree extracted from the bigraded class: intersect with the Segre
/// hyperplane class s + t and read the point-class coefficient s t^{d-2}.
pub fn degree_from_bigraded(d: u32) -> Result<i128> {
    let class = top_chern_bigraded(d)?;
    let h = linear_class(Rationals, d, 1, 1)?;
    let prod = class.mul(&h);
    rat_to_i128(&prod.coeff(1, d as usize - 2), "bigraded degree")
}

/// Degree as the explicit sum 2^{d-1} - 1 + 3 sum_{i=1}^{d-2} i 2^{i-1}.
pub fn degree_explicit_sum(d: u32) -> Result<i128> {
    if d < 3 {
        return Err(Error::BadDimension { d });
    }
    let mut acc: i128 = (1i128 << (d - 1)) - 1;
    for i in 1..=d as i128 - 2 {
        acc += 3 * i * (1i128 << (i - 1));
    }
    Ok(acc)
}

/// Closed form (3(d-1) - 4) 2^{d-2} + 2.
pub fn degree_closed_form(d: u32) -> Result<i128> {
    if d < 3 {
        return Err(Error::BadDimension { d });
    }
    Ok((3 * (d as i128 - 1) - 4) * (1i128 << (d - 2)) + 2)
}

/// Per-fiber point count 2^{d-1} - 1, cross-checked between the twisting
/// identity, the bigraded class and the closed form.
pub fn fiber_count(d: u32) -> Result<i128> {
    let a = fiber_count_twisting(d)?;
    let b = fiber_count_from_bigraded(d)?;
    let c = (1i128 << (d - 1)) - 1;
    if a != c || b != c {
        return Err(Error::InternalMismatch(format!(
            "fiber count routes disagree at d={d}: twisting {a}, bigraded {b}, closed form {c}"
        )));
    }
    Ok(c)
}

/// Total degree of the rank-drop curve, cross-checked between the bigraded
/// class extraction, the explicit sum and the closed form.
pub fn osculating_cone_degree(d: u32) -> Result<i128> {
    let a = degree_from_bigraded(d)?;
    let b = degree_explicit_sum(d)?;
    let c = degree_closed_form(d)?;
    if a != b || b != c {
        return Err(Error::InternalMismatch(format!(
            "degree routes disagree at d={d}: bigraded {a}, sum {b}, closed form {c}"
        )));
    }
    Ok(c)
}

/// Summary of the numerical invariants at a given d.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub d: u32,
    pub fiber_points: i128,
    pub degree: i128,
    pub genus: i128,
    pub method: &'static str,
}
