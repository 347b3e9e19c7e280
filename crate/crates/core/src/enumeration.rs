//! Metric balls in the group and the set `I(x, y)` of double cosets
//! `XbY` whose translated axes `A_x`, `b A_y` cross.

use std::collections::{HashMap, HashSet};

use num_complex::Complex64;
use rayon::prelude::*;

use crate::conjugacy::{are_conjugate, canonical_order, rl_normal_form, subgroup_root};
use crate::error::{Error, Result};
use crate::geometry::{crossing_sign, fixed_points, transport_axis, Axis, NumAxis, PlanePoint};
use crate::matrix::{translation_length, ProjectiveMatrix};
use crate::subgroup::SubgroupSpec;

/// Guard added to every covering radius.
const RADIUS_GUARD: f64 = 0.01;

/// All members of a subgroup moving `i` by at most `radius`.
#[derive(Debug, Clone)]
pub struct Ball {
    pub radius: f64,
    pub spec: SubgroupSpec,
    /// Sorted by Frobenius norm, then entries.
    pub elements: Vec<ProjectiveMatrix>,
}

impl Ball {
    pub fn contains(&self, m: &ProjectiveMatrix) -> bool {
        self.elements.binary_search_by(|e| canonical_order(e, m)).is_ok()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    ext_gcd(a, b).0
}

/// `(a0, b0)` with `a0 d - b0 c = 1`, for coprime `(c, d)`.
fn complete_row(c: i128, d: i128) -> (i128, i128) {
    let (_, x, y) = ext_gcd(d, c);
    (x, -y)
}

fn from_i128(e: [i128; 4]) -> ProjectiveMatrix {
    ProjectiveMatrix::from_entries_unchecked(e[0].into(), e[1].into(), e[2].into(), e[3].into())
}

/// Integer bound on `‖M‖²` for the ball of the given radius.
fn norm_bound(radius: f64) -> i128 {
    (2.0 * radius.max(0.0).cosh() - 1e-9).ceil() as i128
}

pub fn enumerate_ball(radius: f64, spec: &SubgroupSpec) -> Ball {
    let bound = norm_bound(radius);
    let cmax = ((bound - 1) as f64).sqrt().floor() as i128 + 1;
    let mut elements: Vec<ProjectiveMatrix> = (0..=cmax)
        .into_par_iter()
        .flat_map_iter(|c| {
            let mut out = Vec::new();
            let rows: Vec<(i128, i128)> = if c == 0 {
                vec![(0, 1)]
            } else {
                let dmax = ((bound - c * c).max(0) as f64).sqrt().floor() as i128 + 1;
                (-dmax..=dmax).filter(|&d| gcd(c, d) == 1 && c * c + d * d < bound).map(|d| (c, d)).collect()
            };
            for (c, d) in rows {
                let (a0, b0) = complete_row(c, d);
                let rest = bound - c * c - d * d;
                // (a0 + tc)² + (b0 + td)² ≤ rest
                let nn = (c * c + d * d) as f64;
                let center = -((a0 * c + b0 * d) as f64) / nn;
                let off = (a0 * a0 + b0 * b0) as f64 - center * center * nn;
                let half = ((rest as f64 - off).max(0.0) / nn).sqrt();
                let lo = (center - half).floor() as i128 - 1;
                let hi = (center + half).ceil() as i128 + 1;
                for t in lo..=hi {
                    let (a, b) = (a0 + t * c, b0 + t * d);
                    if a * a + b * b <= rest {
                        let m = from_i128([a, b, c, d]);
                        if spec.is_member(&m) {
                            out.push(m);
                        }
                    }
                }
            }
            out
        })
        .collect();
    elements.sort_by(canonical_order);
    elements.dedup();
    Ball { radius, spec: *spec, elements }
}

/// Moves `z` into the standard fundamental domain; returns the image and
/// the matrix `k` with `k z` equal to it.
fn reduce_point(mut z: Complex64) -> (Complex64, [i128; 4]) {
    let mut k = [1i128, 0, 0, 1];
    for _ in 0..100_000 {
        let n = z.re.round();
        if n != 0.0 {
            z.re -= n;
            let n = n as i128;
            k = [k[0] - n * k[2], k[1] - n * k[3], k[2], k[3]];
        }
        if z.norm_sqr() < 1.0 - 1e-12 {
            z = -1.0 / z;
            k = [-k[2], -k[3], k[0], k[1]];
        } else {
            break;
        }
    }
    (z, k)
}

fn mul128(x: [i128; 4], y: [i128; 4]) -> [i128; 4] {
    [
        x[0] * y[0] + x[1] * y[2],
        x[0] * y[1] + x[1] * y[3],
        x[2] * y[0] + x[3] * y[2],
        x[2] * y[1] + x[3] * y[3],
    ]
}

/// Every `g` in the full group with `d(g·base, center) ≤ rho` (possibly with
/// a few extra elements just outside).
pub fn orbit_in_disk(base: PlanePoint, center: PlanePoint, rho: f64) -> Vec<ProjectiveMatrix> {
    let (z0, k0) = reduce_point(base.z());
    let (w, k1) = reduce_point(center.z());
    let k1_inv = [k1[3], -k1[1], -k1[2], k1[0]];
    let (u0, v0) = (z0.re, z0.im);
    // Im(g z0) ≥ Im(w) e^{-ρ} on the disk.
    let limit = v0 / (w.im * (-rho).exp()) * (1.0 + 1e-9);
    let ec = w.im * rho.cosh();
    let er = w.im * rho.sinh();
    let mut out = Vec::new();
    let mut sweep = |a0: i128, b0: i128, c: i128, d: i128| {
        let den = Complex64::new(c as f64 * u0 + d as f64, c as f64 * v0);
        let gz = (z0 * a0 as f64 + b0 as f64) / den;
        let dy = gz.im - ec;
        if dy.abs() > er * (1.0 + 1e-9) {
            return;
        }
        let h = (er * er - dy * dy).max(0.0).sqrt() * (1.0 + 1e-9) + 1e-9;
        let lo = (w.re - h - gz.re).ceil() as i128;
        let hi = (w.re + h - gz.re).floor() as i128;
        for t in lo..=hi {
            let g2 = [a0 + t * c, b0 + t * d, c, d];
            out.push(from_i128(mul128(mul128(k1_inv, g2), k0)));
        }
    };
    sweep(1, 0, 0, 1);
    let cmax = (limit.sqrt() / v0).floor() as i128;
    for c in 1..=cmax {
        let cf = c as f64;
        let rest = limit - cf * cf * v0 * v0;
        if rest < 0.0 {
            continue;
        }
        let s = rest.sqrt();
        let dlo = (-cf * u0 - s).ceil() as i128;
        let dhi = (-cf * u0 + s).floor() as i128;
        for d in dlo..=dhi {
            if gcd(c, d) != 1 {
                continue;
            }
            let (a0, b0) = complete_row(c, d);
            sweep(a0, b0, c, d);
        }
    }
    out
}

/// A crossing double coset `XbY`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleCosetRep {
    /// Minimal Frobenius norm in the double coset, ties broken on entries.
    pub rep: ProjectiveMatrix,
    pub sign: i32,
    /// `x · (rep y rep⁻¹)`.
    pub term: ProjectiveMatrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CandidateStrategy {
    /// Disks along a fundamental segment of the first axis.
    Segment,
    /// One ball around `i`.
    Ball,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingOptions {
    pub strategy: CandidateStrategy,
    /// Moves the fundamental segment by this many periods of `x`.
    pub base_shift: i64,
    /// Lets the element with the shorter axis period play the role of `y`
    /// during candidate generation.
    pub allow_swap: bool,
}

impl Default for CrossingOptions {
    fn default() -> Self {
        CrossingOptions { strategy: CandidateStrategy::Segment, base_shift: 0, allow_swap: true }
    }
}

/// Elements `c` with `A_u` and `c A_v` crossing, covering every crossing
/// double coset of `⟨u⟩\G/⟨v⟩` at least once.
fn crossing_candidates(u: &ProjectiveMatrix, v: &ProjectiveMatrix, opts: &CrossingOptions) -> Result<Vec<ProjectiveMatrix>> {
    let (wu, cu) = rl_normal_form(u)?;
    let (wv, cv) = rl_normal_form(v)?;
    let up = wu.evaluate();
    let vp = wv.evaluate();
    let ax_u = fixed_points(&up)?;
    let ax_v = fixed_points(&vp)?;
    let nu = ax_u.numeric();
    let nv = ax_v.numeric();
    let tu = translation_length(u)?;
    let tv = translation_length(v)?;
    let p0 = nu.advance(nu.closest_point(PlanePoint::I), opts.base_shift as f64 * tu);
    let q0 = nv.closest_point(PlanePoint::I);

    let raw: Vec<ProjectiveMatrix> = match opts.strategy {
        CandidateStrategy::Segment => {
            let pieces = tu.ceil().max(1.0) as usize;
            let step = tu / pieces as f64;
            let rho = step / 2.0 + tv / 2.0 + RADIUS_GUARD;
            let found: Vec<Vec<ProjectiveMatrix>> = (0..pieces)
                .into_par_iter()
                .map(|j| orbit_in_disk(q0, nu.advance(p0, (j as f64 + 0.5) * step), rho))
                .collect();
            let mut seen = HashSet::new();
            found.into_iter().flatten().filter(|g| seen.insert(g.clone())).collect()
        }
        CandidateStrategy::Ball => {
            let dp = crate::geometry::hyperbolic_distance(PlanePoint::I, p0);
            let dq = crate::geometry::hyperbolic_distance(PlanePoint::I, q0);
            let radius = dp + tu / 2.0 + tv / 2.0 + dq + RADIUS_GUARD;
            enumerate_ball(radius, &SubgroupSpec::Full).elements
        }
    };

    let (ru, su) = (nu.repelling, nu.attracting);
    let (rv, sv) = (nv.repelling, nv.attracting);
    let cu_inv = cu.inverse();
    let crossing: Vec<ProjectiveMatrix> = raw
        .into_par_iter()
        .filter(|g| {
            let [a, b, c, d] = g.entries_f64();
            let img = |z: f64| (a * z + b) / (c * z + d);
            let (e1, e2) = (img(rv), img(sv));
            let tol = |z: f64| 1e-9 * (1.0 + z.abs());
            let clear = |z: f64| {
                z.is_finite() && (z - ru).abs() > tol(z) && (z - su).abs() > tol(z)
            };
            let inside = |z: f64| ru.min(su) < z && z < ru.max(su);
            if clear(e1) && clear(e2) && inside(e1) == inside(e2) {
                return false;
            }
            crossing_sign(&ax_u, &transport_axis(&ax_v, g)) != 0
        })
        .map(|g| cu_inv.compose(&g).compose(&cv))
        .collect();
    Ok(crossing)
}

/// `j` with `z = w^j`, when `z` lies in the cyclic group generated by `w`.
fn log_in_cyclic(z: &ProjectiveMatrix, w: &ProjectiveMatrix) -> Option<i64> {
    if z.is_identity() {
        return Some(0);
    }
    if !z.is_hyperbolic() || z.compose(w) != w.compose(z) {
        return None;
    }
    let ratio = translation_length(z).ok()? / translation_length(w).ok()?;
    let j = ratio.round() as i64;
    if j == 0 {
        return None;
    }
    [j, -j].into_iter().find(|&s| &w.power(s) == z)
}

/// Least element of `XbY`, searched over a window of `(m, k)` outside of
/// which `‖x^m b y^k‖` provably exceeds `‖b‖`.
fn canonical_rep(b: &ProjectiveMatrix, x: &ProjectiveMatrix, y: &ProjectiveMatrix) -> ProjectiveMatrix {
    let ax = fixed_points(x).expect("hyperbolic").numeric();
    let ay = fixed_points(y).expect("hyperbolic").numeric();
    let yb = y.conjugate_by(b);
    let ab = fixed_points(&yb).expect("hyperbolic").numeric();
    let tx = translation_length(x).expect("hyperbolic");
    let ty = translation_length(y).expect("hyperbolic");

    let window = (|| {
        let p = ax.intersection(&ab)?;
        let tangent = |n: &NumAxis| {
            let cen = 0.5 * (n.repelling + n.attracting);
            let (tu, tv) = (-p.v, p.u - cen);
            let len = (tu * tu + tv * tv).sqrt();
            (tu / len, tv / len)
        };
        let (t1, t2) = (tangent(&ax), tangent(&ab));
        let cos = (t1.0 * t2.0 + t1.1 * t2.1).abs().min(1.0);
        let fx = ax.closest_point(PlanePoint::I);
        let s0 = ax.coordinate(fx) - ax.coordinate(p);
        let fy = ay.closest_point(PlanePoint::I).moved_by(b);
        let t0 = ab.coordinate(fy) - ab.coordinate(p);
        let dx = ax.distance_to(PlanePoint::I);
        let dy = ay.distance_to(PlanePoint::I);
        let d0 = crate::geometry::displacement_radius(b);
        // cosh d(F1, F2) ≥ cosh s cosh t (1 - |cos θ|) for feet at signed
        // distances s, t from the crossing point.
        let cap = (d0 + dx + dy + 1.0).cosh() / (1.0 - cos);
        if !(cap.is_finite() && s0.is_finite() && t0.is_finite()) {
            return None;
        }
        let a = cap.acosh();
        let m_lo = ((s0 - a) / tx).floor() as i64;
        let m_hi = ((s0 + a) / tx).ceil() as i64;
        let mut ranges = Vec::new();
        for m in m_lo..=m_hi {
            let s = s0 - m as f64 * tx;
            let left = cap / s.cosh();
            if left < 1.0 {
                continue;
            }
            let bnd = left.acosh();
            let k_lo = ((-bnd - t0) / ty).floor() as i64;
            let k_hi = ((bnd - t0) / ty).ceil() as i64;
            ranges.push((m, k_lo, k_hi));
        }
        Some(ranges)
    })();
    let ranges = window.unwrap_or_else(|| (-6..=6).map(|m| (m, -6, 6)).collect());
    let mut best = b.clone();
    for (m, k_lo, k_hi) in ranges {
        let left = x.power(m).compose(b);
        let mut cur = left.compose(&y.power(k_lo));
        for _ in k_lo..=k_hi {
            if canonical_order(&cur, &best).is_lt() {
                best = cur.clone();
            }
            cur = cur.compose(y);
        }
    }
    best
}

fn check_inputs(x: &ProjectiveMatrix, y: &ProjectiveMatrix, spec: &SubgroupSpec) -> Result<()> {
    if !x.is_hyperbolic() || !y.is_hyperbolic() {
        return Err(Error::NotHyperbolic);
    }
    spec.check_member(x)?;
    spec.check_member(y)
}

pub fn crossing_double_cosets(x: &ProjectiveMatrix, y: &ProjectiveMatrix, spec: &SubgroupSpec) -> Result<Vec<DoubleCosetRep>> {
    crossing_double_cosets_with(x, y, spec, &CrossingOptions::default())
}

pub fn crossing_double_cosets_with(
    x: &ProjectiveMatrix,
    y: &ProjectiveMatrix,
    spec: &SubgroupSpec,
    opts: &CrossingOptions,
) -> Result<Vec<DoubleCosetRep>> {
    check_inputs(x, y, spec)?;
    let swap = opts.allow_swap && translation_length(y)? > translation_length(x)? + 1e-12;
    let bs: Vec<ProjectiveMatrix> = if swap {
        crossing_candidates(y, x, opts)?.into_iter().map(|c| c.inverse()).collect()
    } else {
        crossing_candidates(x, y, opts)?
    };
    let bs: Vec<ProjectiveMatrix> = bs.into_iter().filter(|b| spec.is_member(b)).collect();

    // Normalize in the frame where the axis of x runs from r < 0 to s > 0.
    let (wx, cx) = rl_normal_form(x)?;
    let (wy, cy) = rl_normal_form(y)?;
    let xp = wx.evaluate();
    let yp = wy.evaluate();
    let (wy0, ny) = wy.primitive();
    let y0 = wy0.evaluate();
    let ax = fixed_points(&xp)?;
    let ay = fixed_points(&yp)?;
    let (r, s) = (ax.repelling.clone(), ax.attracting.clone());
    let (rf, sf) = (r.to_f64(), s.to_f64());
    let tx = translation_length(x)?;
    let x_of_zero = crate::quadratic::BoundaryPoint::rational(xp.b().clone(), xp.d().clone());
    let zero = crate::quadratic::BoundaryPoint::integer(0);
    let ln_psi = |z: f64| ((z - rf) / (sf - z)).ln();
    let cy_inv = cy.inverse();
    let cx_inv = cx.inverse();

    let normalized: Vec<(ProjectiveMatrix, ProjectiveMatrix)> = bs
        .par_iter()
        .map(|b| {
            let h = cx.compose(b).compose(&cy_inv);
            let moved: Axis = transport_axis(&ay, &h);
            let e = if r < moved.repelling && moved.repelling < s { moved.repelling } else { moved.attracting };
            let mut m = ((ln_psi(0.0) - ln_psi(e.to_f64())) / tx).ceil();
            if !m.is_finite() {
                m = 0.0;
            }
            let mut m = m as i64;
            loop {
                let em = e.mobius(&xp.power(m)).expect("finite");
                if em < zero {
                    m += 1;
                } else if em >= x_of_zero {
                    m -= 1;
                } else {
                    break;
                }
            }
            let h2 = xp.power(m).compose(&h);
            (yp.conjugate_by(&h2), h2)
        })
        .collect();

    let mut buckets: HashMap<ProjectiveMatrix, Vec<ProjectiveMatrix>> = HashMap::new();
    let mut order: Vec<ProjectiveMatrix> = Vec::new();
    for (key, h2) in normalized {
        let bucket = buckets.entry(key).or_default();
        let duplicate = bucket.iter().any(|rep| {
            ny == 1 || log_in_cyclic(&rep.inverse().compose(&h2), &y0).is_some_and(|j| j % ny as i64 == 0)
        });
        if !duplicate {
            bucket.push(h2.clone());
            order.push(h2);
        }
    }

    let axis_x = fixed_points(x)?;
    let mut reps: Vec<DoubleCosetRep> = order
        .par_iter()
        .map(|h2| {
            let b = cx_inv.compose(h2).compose(&cy);
            let rep = canonical_rep(&b, x, y);
            let yb = y.conjugate_by(&rep);
            let sign = crossing_sign(&axis_x, &fixed_points(&yb).expect("hyperbolic"));
            DoubleCosetRep { term: x.compose(&yb), rep, sign }
        })
        .collect();
    reps.sort_by(|a, b| canonical_order(&a.rep, &b.rep));
    Ok(reps)
}

/// Witness `(m, k)` with `x^m g y^k = g2`, if the double cosets agree.
pub fn same_double_coset(
    g: &ProjectiveMatrix,
    g2: &ProjectiveMatrix,
    x: &ProjectiveMatrix,
    y: &ProjectiveMatrix,
) -> Result<Option<(i64, i64)>> {
    if !x.is_hyperbolic() || !y.is_hyperbolic() {
        return Err(Error::NotHyperbolic);
    }
    let (w0, a) = crate::conjugacy::primitive_root(x)?;
    let a = a as i64;
    let ginv = g.inverse();
    let u2 = y.conjugate_by(g2);
    if u2.compose(x) == x.compose(&u2) {
        // g2 A_y = A_x; then g A_y = A_x too, and everything is a power of w0.
        let Some(s) = log_in_cyclic(&y.conjugate_by(g), &w0) else {
            return Ok(None);
        };
        let Some(t) = log_in_cyclic(&g2.compose(&ginv), &w0) else {
            return Ok(None);
        };
        // a m + s k = t
        let (d, p, q) = ext_gcd(a as i128, s as i128);
        if (t as i128) % d != 0 {
            return Ok(None);
        }
        let f = t as i128 / d;
        let (m, k) = ((p * f) as i64, (q * f) as i64);
        debug_assert_eq!(&x.power(m).compose(g).compose(&y.power(k)), g2);
        return Ok(Some((m, k)));
    }
    let axis_x = fixed_points(x)?.numeric();
    let ay = fixed_points(y)?.numeric();
    let foot = ay.closest_point(PlanePoint::I);
    let dy = ay.distance_to(PlanePoint::I);
    let target = axis_x.distance_to(PlanePoint::I.moved_by(g)) + dy;
    let test = |k: i64| -> Option<(i64, i64)> {
        let z = g2.compose(&y.power(-k)).compose(&ginv);
        let j = log_in_cyclic(&z, &w0)?;
        (j % a == 0).then_some((j / a, k))
    };
    if let Some(w) = test(0) {
        return Ok(Some(w));
    }
    for dir in [1i64, -1] {
        let mut prev = f64::NEG_INFINITY;
        for step in 1..=100_000i64 {
            let k = dir * step;
            if let Some(w) = test(k) {
                return Ok(Some(w));
            }
            // Distance from A_x along g2 A_y is convex in k.
            let f = foot.moved_by(&g2.compose(&y.power(-k)));
            let dist = axis_x.distance_to(f);
            if !dist.is_finite() || (dist > target + 1e-6 && dist > prev) {
                break;
            }
            prev = dist;
        }
    }
    Ok(None)
}

/// `|I(x, y)|`; elements that are not hyperbolic meet nothing.
pub fn geometric_intersection_oracle(x: &ProjectiveMatrix, y: &ProjectiveMatrix, spec: &SubgroupSpec) -> Result<u64> {
    spec.check_member(x)?;
    spec.check_member(y)?;
    if !x.is_hyperbolic() || !y.is_hyperbolic() {
        return Ok(0);
    }
    if are_conjugate(x, y, spec)?.is_some() {
        return Err(Error::ConjugateInputs);
    }
    Ok(crossing_double_cosets(x, y, spec)?.len() as u64)
}

/// Half the number of crossing double cosets `XgX`.
pub fn geometric_self_intersection_oracle(x: &ProjectiveMatrix, spec: &SubgroupSpec) -> Result<u64> {
    spec.check_member(x)?;
    if !x.is_hyperbolic() {
        return Ok(0);
    }
    let (_, n) = subgroup_root(x, spec)?;
    if n > 1 {
        return Err(Error::NotPrimitive(n));
    }
    let count = crossing_double_cosets(x, x, spec)?.len();
    if count % 2 == 1 {
        return Err(Error::OddCosetCount(count));
    }
    Ok(count as u64 / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_element;

    fn w(s: &str) -> ProjectiveMatrix {
        parse_element(s).unwrap()
    }

    #[test]
    fn ball_examples() {
        let b0 = enumerate_ball(0.0, &SubgroupSpec::Full);
        assert_eq!(b0.len(), 2);
        assert!(b0.contains(&ProjectiveMatrix::identity()) && b0.contains(&ProjectiveMatrix::s()));
        let b = enumerate_ball(0.97, &SubgroupSpec::Full);
        assert!(b.contains(&ProjectiveMatrix::t()) && b.contains(&ProjectiveMatrix::t_inv()));
        assert_eq!(enumerate_ball(0.0, &SubgroupSpec::Gamma(2)).elements, vec![ProjectiveMatrix::identity()]);
    }

    #[test]
    fn ball_matches_brute_force() {
        for r in [1.0, 2.5, 3.3] {
            let ball = enumerate_ball(r, &SubgroupSpec::Full);
            let bound = norm_bound(r);
            let lim = (bound as f64).sqrt() as i64 + 1;
            let mut brute = HashSet::new();
            for a in -lim..=lim {
                for b in -lim..=lim {
                    for c in -lim..=lim {
                        for d in -lim..=lim {
                            if a * d - b * c == 1 && (a * a + b * b + c * c + d * d) as i128 <= bound {
                                brute.insert(ProjectiveMatrix::from_i64(a, b, c, d).unwrap());
                            }
                        }
                    }
                }
            }
            assert_eq!(ball.len(), brute.len());
            assert!(ball.elements.iter().all(|m| brute.contains(m)));
        }
    }

    #[test]
    fn disk_orbit_is_complete() {
        let base = PlanePoint::new(0.3, 1.7);
        let center = PlanePoint::new(-1.2, 0.4);
        let rho = 2.2;
        let found: HashSet<_> = orbit_in_disk(base, center, rho).into_iter().collect();
        for g in enumerate_ball(9.0, &SubgroupSpec::Full).elements {
            let d = crate::geometry::hyperbolic_distance(base.moved_by(&g), center);
            if d <= rho - 1e-9 {
                assert!(found.contains(&g), "{g}");
            }
        }
    }

    #[test]
    fn worked_example_cosets() {
        let x = w("TSTT");
        let y = w("TTTSTTT");
        let set = crossing_double_cosets(&x, &y, &SubgroupSpec::Full).unwrap();
        assert_eq!(set.len(), 4);
        for g in ["T^-4", "T^-3", "T^2", "T^3"] {
            let hits = set
                .iter()
                .filter(|d| same_double_coset(&d.rep, &w(g), &x, &y).unwrap().is_some())
                .count();
            assert_eq!(hits, 1, "{g}");
        }
        let ball = crossing_double_cosets_with(
            &x,
            &y,
            &SubgroupSpec::Full,
            &CrossingOptions { strategy: CandidateStrategy::Ball, ..Default::default() },
        )
        .unwrap();
        assert_eq!(ball, set);
    }

    #[test]
    fn same_double_coset_examples() {
        let x = w("TSTT");
        let y = w("TTTSTTT");
        let g = w("T^2 S");
        assert_eq!(same_double_coset(&g, &g, &x, &y).unwrap(), Some((0, 0)));
        let g2 = x.compose(&g).compose(&y);
        assert_eq!(same_double_coset(&g, &g2, &x, &y).unwrap(), Some((1, 1)));
        assert_eq!(same_double_coset(&w("T^2"), &w("T^3"), &x, &y).unwrap(), None);
        // Coincident axes.
        let x2 = x.power(2);
        let g3 = x.power(3);
        assert!(same_double_coset(&ProjectiveMatrix::identity(), &g3, &x2, &x).unwrap().is_some());
        let z = w("T^5 S L");
        assert_eq!(same_double_coset(&ProjectiveMatrix::identity(), &z, &x2, &x).unwrap(), None);
    }

    #[test]
    fn oracle_examples() {
        let full = SubgroupSpec::Full;
        assert_eq!(geometric_intersection_oracle(&w("TSTT"), &w("TTTSTTT"), &full).unwrap(), 4);
        assert_eq!(
            geometric_intersection_oracle(&w("TSTT"), &w("TSTT").conjugate_by(&w("T^2 S")), &full),
            Err(Error::ConjugateInputs)
        );
        assert_eq!(geometric_intersection_oracle(&w("T"), &w("TSTT"), &full).unwrap(), 0);
        assert_eq!(geometric_self_intersection_oracle(&w("TSTT").power(2), &full), Err(Error::NotPrimitive(2)));
        let x = w("TSTT");
        assert!(matches!(
            crossing_double_cosets(&x, &x, &SubgroupSpec::Gamma0(2)),
            Err(Error::NotMember(_))
        ));
    }

    #[test]
    fn self_cosets_exclude_identity() {
        let x = w("TSTT");
        let set = crossing_double_cosets(&x, &x, &SubgroupSpec::Full).unwrap();
        assert!(set.iter().all(|d| same_double_coset(&d.rep, &ProjectiveMatrix::identity(), &x, &x).unwrap().is_none()));
        assert!(set.iter().all(|d| d.sign != 0 && d.term.is_hyperbolic()));
    }
}
