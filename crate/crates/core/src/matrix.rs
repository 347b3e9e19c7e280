//! Elements of PSL(2,Z) as sign-canonical integer matrices.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An element of PSL(2,Z).
///
/// The matrix `[[a, b], [c, d]]` has determinant 1 and is stored in the sign
/// for which the entry tuple `(a, b, c, d)` is lexicographically larger than
/// its negation, i.e. the first nonzero entry is positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectiveMatrix {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IsometryClass {
    Identity,
    Elliptic,
    Parabolic,
    Hyperbolic,
}

impl fmt::Display for IsometryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            IsometryClass::Identity => "Identity",
            IsometryClass::Elliptic => "Elliptic",
            IsometryClass::Parabolic => "Parabolic",
            IsometryClass::Hyperbolic => "Hyperbolic",
        };
        f.write_str(s)
    }
}

fn first_nonzero_negative(e: [&BigInt; 4]) -> bool {
    for x in e {
        if !x.is_zero() {
            return x.is_negative();
        }
    }
    false
}

impl ProjectiveMatrix {
    /// Builds a matrix, checking `ad - bc = 1`.
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self> {
        if &a * &d - &b * &c != BigInt::one() {
            return Err(Error::BadDeterminant);
        }
        Ok(Self::from_entries_unchecked(a, b, c, d))
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    /// Caller guarantees determinant 1 (or -1 times a sign that is then
    /// discarded; only `ad - bc = 1` is meaningful).
    pub(crate) fn from_entries_unchecked(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        debug_assert!(&a * &d - &b * &c == BigInt::one());
        if first_nonzero_negative([&a, &b, &c, &d]) {
            ProjectiveMatrix { a: -a, b: -b, c: -c, d: -d }
        } else {
            ProjectiveMatrix { a, b, c, d }
        }
    }

    pub fn identity() -> Self {
        Self::from_entries_unchecked(1.into(), 0.into(), 0.into(), 1.into())
    }

    pub fn t() -> Self {
        Self::from_entries_unchecked(1.into(), 1.into(), 0.into(), 1.into())
    }

    pub fn t_inv() -> Self {
        Self::from_entries_unchecked(1.into(), (-1).into(), 0.into(), 1.into())
    }

    pub fn s() -> Self {
        Self::from_entries_unchecked(0.into(), (-1).into(), 1.into(), 0.into())
    }

    pub fn l() -> Self {
        Self::from_entries_unchecked(1.into(), 0.into(), 1.into(), 1.into())
    }

    pub fn l_inv() -> Self {
        Self::from_entries_unchecked(1.into(), 0.into(), (-1).into(), 1.into())
    }

    /// `T^n`.
    pub fn translation(n: impl Into<BigInt>) -> Self {
        Self::from_entries_unchecked(1.into(), n.into(), 0.into(), 1.into())
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn b(&self) -> &BigInt {
        &self.b
    }
    pub fn c(&self) -> &BigInt {
        &self.c
    }
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// Entries as `i64` when they fit.
    pub fn to_i64(&self) -> Option<[i64; 4]> {
        Some([self.a.to_i64()?, self.b.to_i64()?, self.c.to_i64()?, self.d.to_i64()?])
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_one()
    }

    /// Trace of the canonical representative (sign depends on canonicalization).
    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn abs_trace(&self) -> BigInt {
        self.trace().abs()
    }

    /// Entries of the sign choice with nonnegative trace (and, for trace 0,
    /// the canonical sign).
    pub(crate) fn positive_trace_entries(&self) -> (BigInt, BigInt, BigInt, BigInt) {
        if self.trace().is_negative() {
            (-&self.a, -&self.b, -&self.c, -&self.d)
        } else {
            (self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone())
        }
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self::from_entries_unchecked(
            &self.a * &other.a + &self.b * &other.c,
            &self.a * &other.b + &self.b * &other.d,
            &self.c * &other.a + &self.d * &other.c,
            &self.c * &other.b + &self.d * &other.d,
        )
    }

    pub fn inverse(&self) -> Self {
        Self::from_entries_unchecked(self.d.clone(), -&self.b, -&self.c, self.a.clone())
    }

    /// `self^n` by binary exponentiation; negative `n` inverts.
    pub fn power(&self, n: i64) -> Self {
        let mut base = if n < 0 { self.inverse() } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Self::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.compose(&base);
            }
        }
        acc
    }

    /// `g * self * g^-1`.
    pub fn conjugate_by(&self, g: &Self) -> Self {
        g.compose(self).compose(&g.inverse())
    }

    pub fn classify(&self) -> IsometryClass {
        if self.is_identity() {
            return IsometryClass::Identity;
        }
        let t = self.abs_trace();
        let two = BigInt::from(2);
        if t < two {
            IsometryClass::Elliptic
        } else if t == two {
            IsometryClass::Parabolic
        } else {
            IsometryClass::Hyperbolic
        }
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.classify() == IsometryClass::Hyperbolic
    }

    /// Squared Frobenius norm `a² + b² + c² + d²`.
    pub fn frobenius_sq(&self) -> BigInt {
        &self.a * &self.a + &self.b * &self.b + &self.c * &self.c + &self.d * &self.d
    }

    /// Entries reduced modulo `n` into `0..n`, for the canonical sign.
    pub(crate) fn entries_mod(&self, n: u64) -> [u64; 4] {
        let m = BigInt::from(n);
        let r = |x: &BigInt| x.mod_floor(&m).to_u64().unwrap_or(0);
        [r(&self.a), r(&self.b), r(&self.c), r(&self.d)]
    }

    /// Möbius action on a complex point.
    pub fn act(&self, z: num_complex::Complex64) -> num_complex::Complex64 {
        let [a, b, c, d] = self.entries_f64();
        (z * a + b) / (z * c + d)
    }

    pub fn entries_f64(&self) -> [f64; 4] {
        [
            self.a.to_f64().unwrap_or(f64::NAN),
            self.b.to_f64().unwrap_or(f64::NAN),
            self.c.to_f64().unwrap_or(f64::NAN),
            self.d.to_f64().unwrap_or(f64::NAN),
        ]
    }
}

impl Mul for &ProjectiveMatrix {
    type Output = ProjectiveMatrix;
    fn mul(self, rhs: &ProjectiveMatrix) -> ProjectiveMatrix {
        self.compose(rhs)
    }
}

impl Mul for ProjectiveMatrix {
    type Output = ProjectiveMatrix;
    fn mul(self, rhs: ProjectiveMatrix) -> ProjectiveMatrix {
        self.compose(&rhs)
    }
}

impl fmt::Debug for ProjectiveMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{},{}]", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Display for ProjectiveMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{},{}]", self.a, self.b, self.c, self.d)
    }
}

/// `|trace(M^n)|` via the recurrence `t_{k+1} = t t_k - t_{k-1}`, without
/// forming the power.
pub fn trace_of_power(m: &ProjectiveMatrix, n: u64) -> BigInt {
    let t = m.abs_trace();
    let mut prev = BigInt::from(2);
    if n == 0 {
        return prev;
    }
    let mut cur = t.clone();
    for _ in 1..n {
        let next = &t * &cur - &prev;
        prev = cur;
        cur = next;
    }
    cur.abs()
}

/// Natural logarithm of a positive big integer, robust beyond `f64` range.
pub(crate) fn ln_big(x: &BigInt) -> f64 {
    if let Some(v) = x.to_f64() {
        if v.is_finite() {
            return v.ln();
        }
    }
    let bits = x.bits();
    let shift = bits.saturating_sub(60);
    let top = (x >> shift).to_f64().unwrap_or(1.0);
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Hyperbolic translation length `2 arccosh(|tr| / 2)`.
pub fn translation_length(m: &ProjectiveMatrix) -> Result<f64> {
    if !m.is_hyperbolic() {
        return Err(Error::NotHyperbolic);
    }
    Ok(translation_length_from_trace(&m.abs_trace()))
}

pub(crate) fn translation_length_from_trace(t: &BigInt) -> f64 {
    match t.to_f64() {
        Some(v) if v < 1e150 => 2.0 * (v / 2.0).acosh(),
        // acosh(t/2) = ln(t) - O(t^-2) for large t
        _ => 2.0 * ln_big(t),
    }
}
