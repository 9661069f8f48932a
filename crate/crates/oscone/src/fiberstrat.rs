//! Combinatorics of fibers: the stratification of the rank-drop locus in a
//! fiber from its ramification profile, plus the global bookkeeping
//! (Brill-Noether number, pencil count, per-degree point counts) and the
//! Riemann-Hurwitz checks.

use std::collections::BTreeMap;

use num::ToPrimitive;

use crate::error::{Error, Result};
use crate::exactalg::{binomial, factorial, is_prime};

/// Multiset (k_1,...,k_n) of positive multiplicities of a fiber divisor
/// D = sum k_i p_i, with the ambient characteristic (0 or an odd prime
/// for the tame theory).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamificationProfile {
    mults: Vec<u32>,
    characteristic: u64,
}

impl RamificationProfile {
    pub fn new(mults: Vec<u32>, characteristic: u64) -> Result<Self> {
        assert!(!mults.is_empty(), "profile must have at least one point");
        assert!(mults.iter().all(|&k| k > 0), "multiplicities must be positive");
        if characteristic != 0 && !is_prime(characteristic) {
            return Err(Error::BadPrime(characteristic));
        }
        let mut mults = mults;
        mults.sort_unstable_by(|a, b| b.cmp(a));
        Ok(RamificationProfile { mults, characteristic })
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.mults
    }

    pub fn degree(&self) -> u32 {
        self.mults.iter().sum()
    }

    pub fn support_size(&self) -> usize {
        self.mults.len()
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    /// Tame iff char 0, or p odd and dividing no multiplicity >= 2.
    pub fn is_tame(&self) -> bool {
        let p = self.characteristic;
        if p == 0 {
            return true;
        }
        if p == 2 {
            return false;
        }
        self.mults.iter().all(|&k| k < 2 || k as u64 % p != 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StratumKind {
    /// Isolated point from an unordered support split D = D_1 + D_2.
    Case1Point { left: Vec<u32>, right: Vec<u32> },
    /// Positive piece spanned by the floor divisor sum floor(k_i/2) p_i.
    Case2Component { floor: Vec<u32> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub kind: StratumKind,
    /// Projective dimension: 0 for points, sum floor(k_i/2) - 1 for the component.
    pub dimension: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberStratification {
    pub strata: Vec<Stratum>,
    /// True iff the fiber carries exactly the generic point count, i.e. the
    /// profile is (1,...,1), (2,1,...,1) or (3,1,...,1).
    pub generic_count: bool,
}

impl FiberStratification {
    pub fn case1_points(&self) -> usize {
        self.strata
            .iter()
            .filter(|s| matches!(s.kind, StratumKind::Case1Point { .. }))
            .count()
    }

    pub fn case2_component(&self) -> Option<&Stratum> {
        self.strata
            .iter()
            .find(|s| matches!(s.kind, StratumKind::Case2Component { .. }))
    }
}

/// Brill-Noether number rho(g,d,r) = g - (r+1)(g - d + r).
pub fn brill_noether_rho(g: i64, d: i64, r: i64) -> i64 {
    g - (r + 1) * (g - d + r)
}

/// Number of pencils (2d-2)!/(d!(d-1)!) for genus 2(d-1).
pub fn pencil_count(d: u32) -> u128 {
    assert!(d >= 2, "d must be at least 2");
    let num = factorial(2 * d as u64 - 2);
    let den = factorial(d as u64) * factorial(d as u64 - 1);
    (num / den).to_u128().expect("pencil count fits in u128")
}

/// Exact stratification of the rank-drop locus in the fiber of a profile:
/// 2^{n-1} - 1 isolated points (one per unordered support split) and, when
/// some k_i >= 2, one component of dimension sum floor(k_i/2) - 1.
pub fn stratify_fiber(profile: &RamificationProfile) -> Result<FiberStratification> {
    if !profile.is_tame() {
        return Err(Error::WildRamification { p: profile.characteristic });
    }
    let n = profile.support_size();
    let mults = profile.multiplicities();
    let mut strata = Vec::new();

    // Unordered splits {I, I^c}: subsets of {0..n-1} not containing the
    // last index, nonempty. Exactly 2^{n-1} - 1 of them.
    for mask in 1u64..(1u64 << (n - 1)) {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (i, &k) in mults.iter().enumerate() {
            if mask >> i & 1 == 1 {
                left.push(k);
            } else {
                right.push(k);
            }
        }
        strata.push(Stratum {
            kind: StratumKind::Case1Point { left, right },
            dimension: 0,
        });
    }

    let floor_sum: u32 = mults.iter().map(|k| k / 2).sum();
    if floor_sum >= 1 && mults.iter().any(|&k| k >= 2) {
        let floor: Vec<u32> = mults.iter().map(|k| k / 2).collect();
        strata.push(Stratum {
            kind: StratumKind::Case2Component { floor },
            dimension: floor_sum - 1,
        });
    }

    // Generic count iff at most one multiplicity exceeds 1 and it is <= 3.
    let generic_count = mults[1..].iter().all(|&k| k == 1) && mults[0] <= 3;

    Ok(FiberStratification { strata, generic_count })
}

/// Per-degree-class point counts in a general fiber: binom(d,i) points for
/// i < d/2, binom(d,i)/2 for i = d/2; asserts they sum to 2^{d-1} - 1.
pub fn general_fiber_component_counts(d: u32) -> Result<BTreeMap<u32, u128>> {
    if d < 3 {
        return Err(Error::BadDimension { d });
    }
    let mut counts = BTreeMap::new();
    for i in 1..=d / 2 {
        let b = binomial(d as u64, i as u64)
            .to_u128()
            .expect("count fits in u128");
        let c = if 2 * i == d { b / 2 } else { b };
        counts.insert(i, c);
    }
    let total: u128 = counts.values().sum();
    let expected = (1u128 << (d - 1)) - 1;
    if total != expected {
        return Err(Error::InternalMismatch(format!(
            "component counts sum to {total}, expected {expected} at d={d}"
        )));
    }
    Ok(counts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RiemannHurwitz {
    /// 2g - 2 + 2d simple ramification points of the degree-d cover.
    pub ramification_count: i64,
    /// Genus of the companion curve sharing those simple ramification points.
    pub companion_genus: i64,
    /// Transversality count chi(C) + chi(companion) - chi(union), using the
    /// union's genus from the resolution route. None when d < 3.
    pub intersection_chi: Option<i64>,
}

/// Riemann-Hurwitz bookkeeping for a degree-d cover of P^1 of genus g with
/// only simple branch points, and its companion cover of the given degree.
pub fn riemann_hurwitz_checks(g: i64, d: i64, companion_degree: i64) -> Result<RiemannHurwitz> {
    let ramification_count = 2 * g - 2 + 2 * d;
    let numer = -2 * companion_degree + ramification_count;
    if numer % 2 != 0 {
        return Err(Error::NonIntegerGenus);
    }
    let companion_genus = numer / 2 + 1;
    let intersection_chi = if d >= 3 {
        let union_genus = crate::resolution::genus_from_sum(d as u32)? as i64;
        Some((1 - g) + (1 - companion_genus) - (1 - union_genus))
    } else {
        None
    };
    Ok(RiemannHurwitz { ramification_count, companion_genus, intersection_chi })
}
