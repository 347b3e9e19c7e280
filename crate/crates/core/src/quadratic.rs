//! Exact real quadratic irrationals `(p + q√D) / r`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::matrix::ProjectiveMatrix;

/// A point of the real line, `(p + q√D) / r` with `r > 0`.
#[derive(Clone)]
pub struct BoundaryPoint {
    p: BigInt,
    q: BigInt,
    r: BigInt,
    d: BigInt,
}

fn sign(x: &BigInt) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn big_ratio(num: &BigInt, den: &BigInt) -> f64 {
    let shift = |x: &BigInt| x.bits().saturating_sub(64);
    let (s1, s2) = (shift(num), shift(den));
    let n = (num >> s1).to_f64().unwrap_or(f64::NAN);
    let d = (den >> s2).to_f64().unwrap_or(f64::NAN);
    let e = s1 as i64 - s2 as i64;
    n / d * 2f64.powi(e.clamp(-2000, 2000) as i32)
}

/// Sign of `a + b√d` for `d ≥ 0`.
pub fn sign_with_root(a: &BigInt, b: &BigInt, d: &BigInt) -> i32 {
    let sa = sign(a);
    let sb = if d.is_zero() { 0 } else { sign(b) };
    if sb == 0 {
        return sa;
    }
    if sa == 0 || sa == sb {
        return sb;
    }
    // Opposite signs: compare a² with b²d.
    match (a * a).cmp(&(b * b * d)) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => 0,
    }
}

/// Sign of `a + b√d1 + c√d2` for `d1, d2 ≥ 0`.
pub fn sign_with_two_roots(a: &BigInt, b: &BigInt, d1: &BigInt, c: &BigInt, d2: &BigInt) -> i32 {
    let su = sign_with_root(a, b, d1);
    let sv = if d2.is_zero() { 0 } else { sign(c) };
    if sv == 0 {
        return su;
    }
    if su == 0 || su == sv {
        return sv;
    }
    // |a + b√d1|² - |c√d2|² = (a² + b²d1 - c²d2) + 2ab√d1
    let lhs = a * a + b * b * d1 - c * c * d2;
    let rhs = BigInt::from(2) * a * b;
    match sign_with_root(&lhs, &rhs, d1) {
        1 => su,
        -1 => sv,
        _ => 0,
    }
}

impl BoundaryPoint {
    /// `(p + q√d) / r`; panics if `r = 0` or `d < 0`.
    pub fn new(p: BigInt, q: BigInt, r: BigInt, d: BigInt) -> Self {
        assert!(!r.is_zero(), "zero denominator");
        assert!(!d.is_negative(), "negative radicand");
        let (mut p, mut q, mut r, mut d) = (p, q, r, d);
        if !d.is_zero() {
            let s = d.sqrt();
            if &s * &s == d {
                p += &q * s;
                q = BigInt::zero();
            }
        }
        if q.is_zero() {
            d = BigInt::zero();
        }
        if r.is_negative() {
            p = -p;
            q = -q;
            r = -r;
        }
        let g = p.gcd(&q).gcd(&r);
        if !g.is_one() && !g.is_zero() {
            p /= &g;
            q /= &g;
            r /= &g;
        }
        BoundaryPoint { p, q, r, d }
    }

    pub fn rational(n: BigInt, r: BigInt) -> Self {
        Self::new(n, BigInt::zero(), r, BigInt::zero())
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Self::rational(n.into(), BigInt::one())
    }

    pub fn parts(&self) -> (&BigInt, &BigInt, &BigInt, &BigInt) {
        (&self.p, &self.q, &self.r, &self.d)
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        if self.q.is_zero() {
            return big_ratio(&self.p, &self.r);
        }
        // q√d scaled by 2^64, rounded toward zero.
        let root = ((&self.q * &self.q * &self.d) << 128u32).sqrt();
        let qroot = if self.q.is_negative() { -root } else { root };
        let sp = &self.p << 64u32;
        if sign(&sp) * sign(&qroot) >= 0 || (sp.bits() as i64 - qroot.bits() as i64).abs() > 2 {
            return big_ratio(&(sp + qroot), &(&self.r << 64u32));
        }
        // Nearly cancelling: use the conjugate.
        let norm = &self.p * &self.p - &self.q * &self.q * &self.d;
        big_ratio(&(norm << 64u32), &(&self.r * (sp - qroot)))
    }

    /// Sign of `self - other` computed exactly.
    pub fn exact_cmp(&self, other: &Self) -> Ordering {
        let a = &self.p * &other.r - &other.p * &self.r;
        let b = &self.q * &other.r;
        let c = -(&other.q * &self.r);
        match sign_with_two_roots(&a, &b, &self.d, &c, &other.d) {
            1 => Ordering::Greater,
            -1 => Ordering::Less,
            _ => Ordering::Equal,
        }
    }

    pub fn cmp_integer(&self, n: &BigInt) -> Ordering {
        let a = &self.p - n * &self.r;
        match sign_with_root(&a, &self.q, &self.d) {
            1 => Ordering::Greater,
            -1 => Ordering::Less,
            _ => Ordering::Equal,
        }
    }

    pub fn signum(&self) -> i32 {
        sign_with_root(&self.p, &self.q, &self.d)
    }

    /// Greatest integer `≤ self`.
    pub fn floor(&self) -> BigInt {
        let s = self.d.sqrt();
        // Start from an integer-root estimate and adjust exactly.
        let approx = (&self.p + &self.q * &s).div_floor(&self.r);
        let mut n = approx;
        while self.cmp_integer(&n) == Ordering::Less {
            n -= 1;
        }
        loop {
            let next = &n + 1;
            if self.cmp_integer(&next) == Ordering::Less {
                return n;
            }
            n = next;
        }
    }

    /// Möbius image `(a z + b) / (c z + d)`; `None` if it is the point at infinity.
    pub fn mobius(&self, g: &ProjectiveMatrix) -> Option<BoundaryPoint> {
        let [a, b, c, d] = g.entries();
        let n0 = a * &self.p + b * &self.r;
        let n1 = a * &self.q;
        let m0 = c * &self.p + d * &self.r;
        let m1 = c * &self.q;
        let den = &m0 * &m0 - &m1 * &m1 * &self.d;
        if den.is_zero() {
            return None;
        }
        let p = &n0 * &m0 - &n1 * &m1 * &self.d;
        let q = &n1 * &m0 - &n0 * &m1;
        Some(BoundaryPoint::new(p, q, den, self.d.clone()))
    }

    /// Evaluates `c z² + e z + f` exactly and reports whether it vanishes.
    pub fn is_root_of(&self, c: &BigInt, e: &BigInt, f: &BigInt) -> bool {
        let (p, q, r, d) = (&self.p, &self.q, &self.r, &self.d);
        let rational = c * (p * p + q * q * d) + e * p * r + f * r * r;
        let radical = BigInt::from(2) * c * p * q + e * q * r;
        rational.is_zero() && (radical.is_zero() || d.is_zero())
    }
}

impl PartialEq for BoundaryPoint {
    fn eq(&self, other: &Self) -> bool {
        self.exact_cmp(other) == Ordering::Equal
    }
}

impl Eq for BoundaryPoint {}

impl PartialOrd for BoundaryPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BoundaryPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exact_cmp(other)
    }
}

impl fmt::Debug for BoundaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}√{})/{}", self.p, self.q, self.d, self.r)
    }
}

impl fmt::Display for BoundaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            if self.r.is_one() {
                return write!(f, "{}", self.p);
            }
            return write!(f, "{}/{}", self.p, self.r);
        }
        write!(f, "({}{}{}√{})/{}", self.p, if self.q.is_negative() { "-" } else { "+" }, self.q.abs(), self.d, self.r)
    }
}

/// `α < β` as real numbers.
pub fn boundary_less(alpha: &BoundaryPoint, beta: &BoundaryPoint) -> bool {
    alpha.exact_cmp(beta) == Ordering::Less
}
