//! Conjugacy classes: cyclic L/R words for hyperbolic elements, fixed
//! canonical forms otherwise, and conjugacy tests in congruence subgroups.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::enumeration::enumerate_ball;
use crate::error::{Error, Result};
use crate::geometry::fixed_points;
use crate::matrix::{IsometryClass, ProjectiveMatrix};
use crate::subgroup::{mat_mul_mod, SubgroupSpec};

/// A cyclic word over `{L, R}` stored in its least rotation (`L < R`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicWord {
    letters: Vec<u8>,
}

/// Start index of the lexicographically least rotation.
fn least_rotation(s: &[u8]) -> usize {
    let n = s.len();
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let (a, b) = (s[(i + k) % n], s[(j + k) % n]);
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

impl CyclicWord {
    /// Canonicalizes an arbitrary rotation. Panics on letters other than `L`, `R`.
    pub fn new(letters: impl Into<Vec<u8>>) -> Self {
        let letters: Vec<u8> = letters.into();
        assert!(letters.iter().all(|&c| c == b'L' || c == b'R'), "cyclic words use only L and R");
        let k = least_rotation(&letters);
        let mut rotated = letters[k..].to_vec();
        rotated.extend_from_slice(&letters[..k]);
        CyclicWord { letters: rotated }
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Word of the inverse class: reversed with `L` and `R` exchanged.
    pub fn inverse(&self) -> Self {
        let swapped: Vec<u8> = self.letters.iter().rev().map(|&c| if c == b'L' { b'R' } else { b'L' }).collect();
        CyclicWord::new(swapped)
    }

    /// Smallest `p` such that the word is a power of its length-`p` prefix.
    pub fn period(&self) -> usize {
        let n = self.letters.len();
        (1..=n)
            .filter(|p| n.is_multiple_of(*p))
            .find(|&p| (p..n).all(|i| self.letters[i] == self.letters[i - p]))
            .unwrap_or(n)
    }

    pub fn primitive(&self) -> (CyclicWord, u64) {
        let p = self.period();
        (CyclicWord { letters: self.letters[..p].to_vec() }, (self.letters.len() / p.max(1)) as u64)
    }

    pub fn repeat(&self, n: usize) -> CyclicWord {
        CyclicWord::new(self.letters.repeat(n))
    }

    pub fn evaluate(&self) -> ProjectiveMatrix {
        eval_lr(&self.letters)
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(std::str::from_utf8(&self.letters).unwrap_or("?"))
    }
}

/// Product of an `L`/`R` string, one run at a time.
fn eval_lr(letters: &[u8]) -> ProjectiveMatrix {
    let mut acc = ProjectiveMatrix::identity();
    let mut i = 0;
    while i < letters.len() {
        let c = letters[i];
        let mut j = i;
        while j < letters.len() && letters[j] == c {
            j += 1;
        }
        let run = BigInt::from(j - i);
        let step = if c == b'R' {
            ProjectiveMatrix::translation(run)
        } else {
            ProjectiveMatrix::from_entries_unchecked(BigInt::one(), BigInt::zero(), run, BigInt::one())
        };
        acc = acc.compose(&step);
        i = j;
    }
    acc
}

/// Conjugates a hyperbolic element to one with all entries positive,
/// returning `(h M h⁻¹, h)`.
fn reduce_to_positive(m: &ProjectiveMatrix) -> (ProjectiveMatrix, ProjectiveMatrix) {
    let mut cur = m.clone();
    let mut h = ProjectiveMatrix::identity();
    let mut apply = |g: ProjectiveMatrix, cur: &mut ProjectiveMatrix| {
        *cur = cur.conjugate_by(&g);
        h = g.compose(&h);
    };
    loop {
        let ax = fixed_points(&cur).expect("hyperbolic");
        let (sr, sa) = (ax.repelling.signum(), ax.attracting.signum());
        if sr < 0 && sa > 0 {
            break;
        }
        if sr > 0 && sa < 0 {
            apply(ProjectiveMatrix::s(), &mut cur);
            break;
        }
        let (lo, hi) = if ax.repelling < ax.attracting {
            (ax.repelling, ax.attracting)
        } else {
            (ax.attracting, ax.repelling)
        };
        let n = hi.floor();
        let shift = ProjectiveMatrix::translation(-&n);
        if lo.cmp_integer(&n) == Ordering::Less {
            apply(shift, &mut cur);
        } else {
            // Both endpoints lie in (n, n+1): continued-fraction step.
            apply(ProjectiveMatrix::s().compose(&shift), &mut cur);
        }
    }
    (cur, h)
}

/// Writes a matrix with nonnegative entries as a word in `L` and `R`.
fn peel(m: &ProjectiveMatrix) -> Vec<u8> {
    let (mut a, mut b, mut c, mut d) = (m.a().clone(), m.b().clone(), m.c().clone(), m.d().clone());
    let mut out = Vec::new();
    loop {
        if c.is_zero() {
            let k = b.to_usize().expect("word length fits in memory");
            out.extend(std::iter::repeat_n(b'R', k));
            return out;
        }
        if b.is_zero() {
            let k = c.to_usize().expect("word length fits in memory");
            out.extend(std::iter::repeat_n(b'L', k));
            return out;
        }
        if a >= c && b >= d {
            let k = (&a / &c).min(&b / &d);
            a -= &k * &c;
            b -= &k * &d;
            out.extend(std::iter::repeat_n(b'R', k.to_usize().expect("word length fits in memory")));
        } else {
            let k = (&c / &a).min(&d / &b);
            c -= &k * &a;
            d -= &k * &b;
            out.extend(std::iter::repeat_n(b'L', k.to_usize().expect("word length fits in memory")));
        }
    }
}

/// Canonical cyclic word of a hyperbolic element together with a conjugator
/// `h` such that `h M h⁻¹ = evaluate(word)`.
pub fn rl_normal_form(m: &ProjectiveMatrix) -> Result<(CyclicWord, ProjectiveMatrix)> {
    if !m.is_hyperbolic() {
        return Err(Error::NotHyperbolic);
    }
    let (pos, h) = reduce_to_positive(m);
    let word = peel(&pos);
    let k = least_rotation(&word);
    let prefix = eval_lr(&word[..k]);
    let h = prefix.inverse().compose(&h);
    let mut rotated = word[k..].to_vec();
    rotated.extend_from_slice(&word[..k]);
    Ok((CyclicWord { letters: rotated }, h))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    R,
    L,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EllipticKind {
    /// The class of `S`.
    Order2,
    /// The class of `ST`.
    Order3,
    /// The class of `STST`.
    Order3Inverse,
}

impl EllipticKind {
    pub fn tag(self) -> ProjectiveMatrix {
        let st = ProjectiveMatrix::s().compose(&ProjectiveMatrix::t());
        match self {
            EllipticKind::Order2 => ProjectiveMatrix::s(),
            EllipticKind::Order3 => st,
            EllipticKind::Order3Inverse => st.power(2),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConjugacyClass {
    Identity,
    Elliptic(EllipticKind),
    /// `R^n` (side `R`) or `L^n` (side `L`), `n > 0`.
    Parabolic { n: BigInt, side: Side },
    /// In a proper subgroup, `coset` distinguishes the subgroup classes that
    /// fuse in the full group.
    Hyperbolic { word: CyclicWord, coset: Option<Vec<u64>> },
}

impl ConjugacyClass {
    pub fn kind(&self) -> IsometryClass {
        match self {
            ConjugacyClass::Identity => IsometryClass::Identity,
            ConjugacyClass::Elliptic(_) => IsometryClass::Elliptic,
            ConjugacyClass::Parabolic { .. } => IsometryClass::Parabolic,
            ConjugacyClass::Hyperbolic { .. } => IsometryClass::Hyperbolic,
        }
    }

    pub fn word(&self) -> Option<&CyclicWord> {
        match self {
            ConjugacyClass::Hyperbolic { word, .. } => Some(word),
            _ => None,
        }
    }

    /// Canonical matrix of a non-hyperbolic class.
    pub fn tag(&self) -> Option<ProjectiveMatrix> {
        match self {
            ConjugacyClass::Identity => Some(ProjectiveMatrix::identity()),
            ConjugacyClass::Elliptic(k) => Some(k.tag()),
            ConjugacyClass::Parabolic { n, side } => Some(parabolic_tag(n, *side)),
            ConjugacyClass::Hyperbolic { .. } => None,
        }
    }

    /// A canonical representative of the class.
    pub fn representative(&self) -> ProjectiveMatrix {
        match self {
            ConjugacyClass::Hyperbolic { word, .. } => word.evaluate(),
            other => other.tag().expect("non-hyperbolic classes have tags"),
        }
    }
}

fn parabolic_tag(n: &BigInt, side: Side) -> ProjectiveMatrix {
    match side {
        Side::R => ProjectiveMatrix::translation(n.clone()),
        Side::L => ProjectiveMatrix::from_entries_unchecked(BigInt::one(), BigInt::zero(), n.clone(), BigInt::one()),
    }
}

impl fmt::Display for ConjugacyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConjugacyClass::Identity => f.write_str("I"),
            ConjugacyClass::Elliptic(EllipticKind::Order2) => f.write_str("S"),
            ConjugacyClass::Elliptic(EllipticKind::Order3) => f.write_str("ST"),
            ConjugacyClass::Elliptic(EllipticKind::Order3Inverse) => f.write_str("STST"),
            ConjugacyClass::Parabolic { n, side } => write!(f, "{}^{}", if *side == Side::R { 'R' } else { 'L' }, n),
            ConjugacyClass::Hyperbolic { word, coset: None } => write!(f, "{word}"),
            ConjugacyClass::Hyperbolic { word, coset: Some(key) } => {
                let parts: Vec<String> = key.iter().map(u64::to_string).collect();
                write!(f, "{word}@{}", parts.join(","))
            }
        }
    }
}

fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    (e.gcd, e.x, e.y)
}

/// Class and conjugator `h` (with `h M h⁻¹ = tag`) of a non-hyperbolic element.
fn reduce_non_hyperbolic(m: &ProjectiveMatrix) -> (ConjugacyClass, ProjectiveMatrix) {
    match m.classify() {
        IsometryClass::Identity => (ConjugacyClass::Identity, ProjectiveMatrix::identity()),
        IsometryClass::Parabolic => {
            let (a, _, c, d) = m.positive_trace_entries();
            // Fixed cusp p/q, sent to infinity by g = [[u, v], [q, -p]].
            let (p, q) = if c.is_zero() {
                (BigInt::one(), BigInt::zero())
            } else {
                let num = &a - &d;
                let den = BigInt::from(2) * &c;
                let g = num.gcd(&den);
                let (mut p, mut q) = (num / &g, den / &g);
                if q.is_negative() {
                    p = -p;
                    q = -q;
                }
                (p, q)
            };
            // -u p - v q = 1
            let (g, x, y) = ext_gcd(&p, &q);
            debug_assert!(g.is_one());
            let (u, v) = (-x, -y);
            let conj = ProjectiveMatrix::new(u, v, q, -p).expect("determinant one by construction");
            let moved = m.conjugate_by(&conj);
            // moved = ±[[1, k], [0, 1]]
            let k = moved.b() * moved.a();
            if k.is_positive() {
                (ConjugacyClass::Parabolic { n: k, side: Side::R }, conj)
            } else {
                let s = ProjectiveMatrix::s();
                (ConjugacyClass::Parabolic { n: -k, side: Side::L }, s.compose(&conj))
            }
        }
        IsometryClass::Elliptic => {
            let (a, _b, c, d) = m.positive_trace_entries();
            let kind = if (&a + &d).is_zero() {
                EllipticKind::Order2
            } else if c.is_positive() {
                EllipticKind::Order3
            } else {
                EllipticKind::Order3Inverse
            };
            let tag = kind.tag();
            // Move the fixed point into the standard fundamental domain.
            let [fa, _, fc, fd] = [a, BigInt::zero(), c, d].map(|v| v.to_f64().unwrap_or(0.0));
            let t = fa + fd;
            let mut z = Complex64::new((fa - fd) / (2.0 * fc), (4.0 - t * t).abs().sqrt() / (2.0 * fc.abs()));
            let mut h = ProjectiveMatrix::identity();
            for _ in 0..10_000 {
                let n = z.re.round();
                if n != 0.0 {
                    z -= n;
                    h = ProjectiveMatrix::translation(-(n as i64)).compose(&h);
                }
                if z.norm_sqr() < 1.0 - 1e-9 {
                    z = -1.0 / z;
                    h = ProjectiveMatrix::s().compose(&h);
                } else {
                    break;
                }
            }
            let candidates = [
                ProjectiveMatrix::identity(),
                ProjectiveMatrix::t_inv(),
                ProjectiveMatrix::t(),
                ProjectiveMatrix::s(),
                ProjectiveMatrix::s().compose(&ProjectiveMatrix::t_inv()),
            ];
            for extra in candidates {
                let g = extra.compose(&h);
                if m.conjugate_by(&g) == tag {
                    return (ConjugacyClass::Elliptic(kind), g);
                }
            }
            panic!("elliptic reduction failed for {m}");
        }
        IsometryClass::Hyperbolic => unreachable!(),
    }
}

/// Orbit of the coset `Γ c` under right multiplication by `w`, returning the
/// least key on it.
fn min_coset_key_on_orbit(spec: &SubgroupSpec, c: &ProjectiveMatrix, w: &ProjectiveMatrix) -> Vec<u64> {
    let n = spec.level();
    let wm = w.entries_mod(n);
    let mut e = c.entries_mod(n);
    let start = spec.coset_key_mod(e);
    let mut best = start;
    loop {
        e = mat_mul_mod(e, wm, n);
        let key = spec.coset_key_mod(e);
        if key == start {
            break;
        }
        best = best.min(key);
    }
    let used = match spec {
        SubgroupSpec::Gamma(_) => 4,
        _ => 2,
    };
    best[..used].to_vec()
}

pub fn conjugacy_class(m: &ProjectiveMatrix, spec: &SubgroupSpec) -> Result<ConjugacyClass> {
    spec.check_member(m)?;
    if !m.is_hyperbolic() {
        if !spec.is_full() {
            return Err(Error::UnsupportedClassKind);
        }
        return Ok(reduce_non_hyperbolic(m).0);
    }
    let (word, h) = rl_normal_form(m)?;
    let coset = if spec.is_full() {
        None
    } else {
        let (prim, _) = word.primitive();
        Some(min_coset_key_on_orbit(spec, &h.inverse(), &prim.evaluate()))
    };
    Ok(ConjugacyClass::Hyperbolic { word, coset })
}

/// `(M₀, n)` with `M₀ⁿ = M` and `M₀` not a proper power.
pub fn primitive_root(m: &ProjectiveMatrix) -> Result<(ProjectiveMatrix, u64)> {
    let (word, h) = rl_normal_form(m)?;
    let (prim, n) = word.primitive();
    Ok((prim.evaluate().conjugate_by(&h.inverse()), n))
}

/// Root of `M` inside the subgroup: `(M₁, n)` with `M₁ⁿ = M`, `M₁ ∈ Γ`, and
/// no element of `Γ` a proper root of `M₁`.
pub fn subgroup_root(m: &ProjectiveMatrix, spec: &SubgroupSpec) -> Result<(ProjectiveMatrix, u64)> {
    spec.check_member(m)?;
    let (root, n) = primitive_root(m)?;
    // The exponents e with root^e in Γ form a subgroup of Z containing n.
    let e = (1..=n).find(|e| n % e == 0 && spec.is_member(&root.power(*e as i64))).unwrap_or(n);
    Ok((root.power(e as i64), n / e))
}

/// A conjugator `g` with `g M g⁻¹ = N` inside `spec`, if one exists.
pub fn are_conjugate(m: &ProjectiveMatrix, n: &ProjectiveMatrix, spec: &SubgroupSpec) -> Result<Option<ProjectiveMatrix>> {
    spec.check_member(m)?;
    spec.check_member(n)?;
    if m.classify() != n.classify() {
        return Ok(None);
    }
    if !m.is_hyperbolic() {
        if !spec.is_full() {
            return Err(Error::UnsupportedClassKind);
        }
        let (cm, hm) = reduce_non_hyperbolic(m);
        let (cn, hn) = reduce_non_hyperbolic(n);
        return Ok((cm == cn).then(|| hn.inverse().compose(&hm)));
    }
    if m.abs_trace() != n.abs_trace() {
        return Ok(None);
    }
    let (wm, hm) = rl_normal_form(m)?;
    let (wn, hn) = rl_normal_form(n)?;
    if wm != wn {
        return Ok(None);
    }
    if spec.is_full() {
        return Ok(Some(hn.inverse().compose(&hm)));
    }
    // All full-group conjugators are hn⁻¹ W₀^k hm.
    let w0 = wm.primitive().0.evaluate();
    let level = spec.level();
    let w0m = w0.entries_mod(level);
    let left = hn.inverse();
    let mut acc = [1, 0, 0, 1];
    let mut seen = HashSet::new();
    for k in 0.. {
        let key = acc.min([acc[0], acc[1], acc[2], acc[3]].map(|v| (level - v) % level));
        if !seen.insert(key) {
            break;
        }
        let g = left.compose(&w0.power(k)).compose(&hm);
        if spec.is_member(&g) {
            return Ok(Some(g));
        }
        acc = mat_mul_mod(acc, w0m, level);
    }
    Ok(None)
}

/// Searches a metric ball for a conjugator, in canonical order.
pub fn brute_force_conjugacy_oracle(
    m: &ProjectiveMatrix,
    n: &ProjectiveMatrix,
    spec: &SubgroupSpec,
    radius: f64,
) -> Result<Option<ProjectiveMatrix>> {
    spec.check_member(m)?;
    spec.check_member(n)?;
    let ball = enumerate_ball(radius, spec);
    let mut elems: Vec<ProjectiveMatrix> = ball.elements.into_iter().collect();
    elems.sort_by(canonical_order);
    Ok(elems.into_par_iter().find_first(|g| &m.conjugate_by(g) == n))
}

/// Frobenius norm, then entries lexicographically.
pub fn canonical_order(a: &ProjectiveMatrix, b: &ProjectiveMatrix) -> Ordering {
    a.frobenius_sq().cmp(&b.frobenius_sq()).then_with(|| a.cmp(b))
}
