//! Intersection and self-intersection numbers read off from brackets of powers.

use crate::bracket::{bracket_of_powers_from, manhattan_norm};
use crate::conjugacy::{are_conjugate, subgroup_root};
use crate::enumeration::crossing_double_cosets;
use crate::error::{Error, Result};
use crate::matrix::{trace_of_power, ProjectiveMatrix};
use crate::subgroup::SubgroupSpec;

pub const DEFAULT_P_MAX: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionReport {
    pub value: u64,
    pub p_used: u32,
    pub q_used: u32,
    pub norm: u64,
    pub oracle: u64,
    pub agreed: bool,
    pub stabilized: bool,
}

impl IntersectionReport {
    fn trivial() -> Self {
        IntersectionReport { value: 0, p_used: 1, q_used: 1, norm: 0, oracle: 0, agreed: true, stabilized: true }
    }
}

struct Sample {
    p: u32,
    q: u32,
    norm: u64,
    value: Option<u64>,
}

/// Runs the stopping rule over samples: two consecutive equal values that
/// also match the oracle. At the cap, a final pair of equal values that
/// misses the oracle is reported unstabilized.
fn drive(oracle: u64, cap: u64, mut next: impl FnMut() -> Result<Option<Sample>>) -> Result<IntersectionReport> {
    let mut prev: Option<Sample> = None;
    let mut last_pair_equal = false;
    while let Some(s) = next()? {
        last_pair_equal = prev.as_ref().is_some_and(|p| s.value.is_some() && s.value == p.value);
        if last_pair_equal && s.value == Some(oracle) {
            return Ok(report(&s, oracle, true));
        }
        prev = Some(s);
    }
    match prev {
        Some(s) if last_pair_equal => Ok(report(&s, oracle, false)),
        _ => Err(Error::NoStabilization(cap)),
    }
}

fn report(s: &Sample, oracle: u64, stabilized: bool) -> IntersectionReport {
    let value = s.value.unwrap_or(0);
    IntersectionReport { value, p_used: s.p, q_used: s.q, norm: s.norm, oracle, agreed: value == oracle, stabilized }
}

/// `M[x^p, y] / p` for `p = 1, 2, …` until it stabilizes on the oracle value.
pub fn intersection_number(x: &ProjectiveMatrix, y: &ProjectiveMatrix, spec: &SubgroupSpec) -> Result<IntersectionReport> {
    intersection_number_capped(x, y, spec, DEFAULT_P_MAX)
}

pub fn intersection_number_capped(
    x: &ProjectiveMatrix,
    y: &ProjectiveMatrix,
    spec: &SubgroupSpec,
    p_max: u32,
) -> Result<IntersectionReport> {
    spec.check_member(x)?;
    spec.check_member(y)?;
    if !x.is_hyperbolic() || !y.is_hyperbolic() {
        return Ok(IntersectionReport::trivial());
    }
    if are_conjugate(x, y, spec)?.is_some() {
        return Err(Error::ConjugateInputs);
    }
    let cosets = crossing_double_cosets(x, y, spec)?;
    let oracle = cosets.len() as u64;
    let ty = trace_of_power(y, 1);
    let mut p = 0u32;
    drive(oracle, p_max as u64, || {
        loop {
            p += 1;
            if p > p_max {
                return Ok(None);
            }
            if trace_of_power(x, p as u64) != ty {
                break;
            }
        }
        let norm = manhattan_norm(&bracket_of_powers_from(&cosets, x, y, p, 1, spec)?);
        let value = norm.is_multiple_of(p as u64).then(|| norm / p as u64);
        Ok(Some(Sample { p, q: 1, norm, value }))
    })
}

/// Exponent pairs `(1,2), (1,3), (2,3), (1,4), (2,4), (3,4), …`.
fn exponent_pairs(p_max: u32) -> impl Iterator<Item = (u32, u32)> {
    (2..=p_max).flat_map(|q| (1..q).map(move |p| (p, q)))
}

/// `M[x^p, x^q] / 2pq` over `p < q ≤ p_max`.
pub fn self_intersection_number(x: &ProjectiveMatrix, spec: &SubgroupSpec) -> Result<IntersectionReport> {
    self_intersection_number_capped(x, spec, DEFAULT_P_MAX)
}

pub fn self_intersection_number_capped(x: &ProjectiveMatrix, spec: &SubgroupSpec, p_max: u32) -> Result<IntersectionReport> {
    spec.check_member(x)?;
    if !x.is_hyperbolic() {
        return Ok(IntersectionReport::trivial());
    }
    let (_, n) = subgroup_root(x, spec)?;
    if n > 1 {
        return Err(Error::NotPrimitive(n));
    }
    let cosets = crossing_double_cosets(x, x, spec)?;
    if cosets.len() % 2 == 1 {
        return Err(Error::OddCosetCount(cosets.len()));
    }
    let oracle = cosets.len() as u64 / 2;
    let mut pairs = exponent_pairs(p_max);
    drive(oracle, p_max as u64, || {
        let Some((p, q)) = pairs.next() else {
            return Ok(None);
        };
        let norm = manhattan_norm(&bracket_of_powers_from(&cosets, x, x, p, q, spec)?);
        let d = 2 * p as u64 * q as u64;
        let value = norm.is_multiple_of(d).then(|| norm / d);
        Ok(Some(Sample { p, q, norm, value }))
    })
}

/// Smallest admissible `p ≤ p_max` for which `[x^p, y^q]` has no cancellation.
pub fn min_noncancel_exponent(
    x: &ProjectiveMatrix,
    y: &ProjectiveMatrix,
    q: u32,
    p_max: u32,
    spec: &SubgroupSpec,
) -> Result<Option<u32>> {
    spec.check_member(x)?;
    spec.check_member(y)?;
    if !x.is_hyperbolic() || !y.is_hyperbolic() {
        return Ok(Some(1));
    }
    if are_conjugate(x, y, spec)?.is_some() {
        return Err(Error::ConjugateInputs);
    }
    let cosets = crossing_double_cosets(x, y, spec)?;
    let tyq = trace_of_power(y, q as u64);
    for p in 1..=p_max {
        if trace_of_power(x, p as u64) == tyq {
            continue;
        }
        let s = bracket_of_powers_from(&cosets, x, y, p, q, spec)?;
        if manhattan_norm(&s) as usize == s.pre_grouping.len() {
            return Ok(Some(p));
        }
    }
    Ok(None)
}
