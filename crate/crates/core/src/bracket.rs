//! The bracket `[⟨x⟩,⟨y⟩] = Σ ι(x, y^b) ⟨x y^b⟩` over crossing double cosets.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::conjugacy::{conjugacy_class, ConjugacyClass};
use crate::enumeration::{crossing_double_cosets, DoubleCosetRep};
use crate::error::Result;
use crate::matrix::ProjectiveMatrix;
use crate::subgroup::SubgroupSpec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketTerm {
    pub sign: i32,
    pub class: ConjugacyClass,
    /// The product `x · y^b`.
    pub rep: ProjectiveMatrix,
}

/// A formal integer combination of conjugacy classes, together with the
/// ungrouped terms it came from.
#[derive(Debug, Clone, Default)]
pub struct BracketSum {
    pub coefficients: BTreeMap<ConjugacyClass, i64>,
    pub pre_grouping: Vec<BracketTerm>,
    /// One member of each class occurring in `coefficients`.
    representatives: BTreeMap<ConjugacyClass, ProjectiveMatrix>,
}

impl BracketSum {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: Vec<BracketTerm>) -> Self {
        let mut sum = BracketSum::empty();
        for t in &terms {
            sum.add_class(t.class.clone(), t.sign as i64, &t.rep);
        }
        sum.pre_grouping = terms;
        sum
    }

    fn add_class(&mut self, class: ConjugacyClass, coeff: i64, rep: &ProjectiveMatrix) {
        if coeff == 0 {
            return;
        }
        self.representatives.entry(class.clone()).or_insert_with(|| rep.clone());
        let c = self.coefficients.entry(class.clone()).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.coefficients.remove(&class);
        }
    }

    /// Adds `coeff · other` to the grouped part; ungrouped terms are appended.
    pub fn add_scaled(&mut self, other: &BracketSum, coeff: i64) {
        for (class, c) in &other.coefficients {
            self.add_class(class.clone(), coeff * c, &other.representatives[class]);
        }
        for t in &other.pre_grouping {
            for _ in 0..coeff.unsigned_abs() {
                self.pre_grouping.push(BracketTerm { sign: t.sign * coeff.signum() as i32, ..t.clone() });
            }
        }
    }

    pub fn negated(&self) -> BracketSum {
        let mut out = BracketSum::empty();
        out.add_scaled(self, -1);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn representative(&self, class: &ConjugacyClass) -> Option<&ProjectiveMatrix> {
        self.representatives.get(class)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ConjugacyClass, i64, &ProjectiveMatrix)> {
        self.coefficients.iter().map(|(c, n)| (c, *n, &self.representatives[c]))
    }
}

/// Equality of grouped sums; the ungrouped terms are ignored.
impl PartialEq for BracketSum {
    fn eq(&self, other: &Self) -> bool {
        self.coefficients == other.coefficients
    }
}

impl Eq for BracketSum {}

impl fmt::Display for BracketSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (class, n)) in self.coefficients.iter().enumerate() {
            let sign = if *n < 0 { "-" } else if i > 0 { "+" } else { "" };
            let sep = if i > 0 { " " } else { "" };
            let abs = n.unsigned_abs();
            let space = if i > 0 && !sign.is_empty() { " " } else { "" };
            if abs == 1 {
                write!(f, "{sep}{sign}{space}⟨{class}⟩")?;
            } else {
                write!(f, "{sep}{sign}{space}{abs}⟨{class}⟩")?;
            }
        }
        Ok(())
    }
}

pub fn manhattan_norm(s: &BracketSum) -> u64 {
    s.coefficients.values().map(|c| c.unsigned_abs()).sum()
}

fn inputs_trivial(x: &ProjectiveMatrix, y: &ProjectiveMatrix, spec: &SubgroupSpec) -> Result<bool> {
    spec.check_member(x)?;
    spec.check_member(y)?;
    Ok(!x.is_hyperbolic() || !y.is_hyperbolic())
}

pub fn bracket(x: &ProjectiveMatrix, y: &ProjectiveMatrix, spec: &SubgroupSpec) -> Result<BracketSum> {
    bracket_of_powers(x, y, 1, 1, spec)
}

pub fn bracket_of_powers(x: &ProjectiveMatrix, y: &ProjectiveMatrix, p: u32, q: u32, spec: &SubgroupSpec) -> Result<BracketSum> {
    if inputs_trivial(x, y, spec)? {
        return Ok(BracketSum::empty());
    }
    let cosets = crossing_double_cosets(x, y, spec)?;
    bracket_of_powers_from(&cosets, x, y, p, q, spec)
}

/// `pq Σ ι(x, y^b) ⟨x^p (y^b)^q⟩` over already enumerated double cosets of `(x, y)`.
pub fn bracket_of_powers_from(
    cosets: &[DoubleCosetRep],
    x: &ProjectiveMatrix,
    y: &ProjectiveMatrix,
    p: u32,
    q: u32,
    spec: &SubgroupSpec,
) -> Result<BracketSum> {
    let xp = x.power(p as i64);
    let yq = y.power(q as i64);
    let terms: Vec<BracketTerm> = cosets
        .par_iter()
        .filter(|c| c.sign != 0)
        .map(|c| {
            let rep = xp.compose(&yq.conjugate_by(&c.rep));
            let class = conjugacy_class(&rep, spec)?;
            Ok(BracketTerm { sign: c.sign, class, rep })
        })
        .collect::<Result<_>>()?;
    let copies = (p as usize) * (q as usize);
    let mut all = Vec::with_capacity(terms.len() * copies);
    for t in terms {
        for _ in 0..copies {
            all.push(t.clone());
        }
    }
    Ok(BracketSum::from_terms(all))
}

/// `[s, ⟨z⟩]` extended linearly over the grouped classes of `s`.
pub fn bracket_sum_with(s: &BracketSum, z: &ProjectiveMatrix, spec: &SubgroupSpec) -> Result<BracketSum> {
    let parts: Vec<(i64, BracketSum)> = s
        .iter()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(_, n, rep)| Ok((n, bracket(rep, z, spec)?)))
        .collect::<Result<_>>()?;
    let mut out = BracketSum::empty();
    for (n, b) in &parts {
        out.add_scaled(b, *n);
    }
    Ok(out)
}

/// `[[x,y],z] + [[y,z],x] + [[z,x],y]`.
pub fn jacobi_defect(x: &ProjectiveMatrix, y: &ProjectiveMatrix, z: &ProjectiveMatrix, spec: &SubgroupSpec) -> Result<BracketSum> {
    for m in [x, y, z] {
        spec.check_member(m)?;
    }
    let mut out = BracketSum::empty();
    for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
        let inner = bracket(a, b, spec)?;
        out.add_scaled(&bracket_sum_with(&inner, c, spec)?, 1);
    }
    Ok(out)
}
