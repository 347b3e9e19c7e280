//! Axes of hyperbolic elements, exact crossing signs, and floating-point
//! upper-half-plane utilities.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{ln_big, translation_length, ProjectiveMatrix};
use crate::quadratic::BoundaryPoint;

/// Oriented axis of a hyperbolic element, from the repelling to the
/// attracting fixed point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Axis {
    pub repelling: BoundaryPoint,
    pub attracting: BoundaryPoint,
    pub owner: ProjectiveMatrix,
}

impl Axis {
    pub fn reversed(&self) -> Axis {
        Axis {
            repelling: self.attracting.clone(),
            attracting: self.repelling.clone(),
            owner: self.owner.inverse(),
        }
    }

    pub fn numeric(&self) -> NumAxis {
        NumAxis::new(self.repelling.to_f64(), self.attracting.to_f64())
    }
}

pub fn fixed_points(m: &ProjectiveMatrix) -> Result<Axis> {
    if !m.is_hyperbolic() {
        return Err(Error::NotHyperbolic);
    }
    let (a, _b, c, d) = m.positive_trace_entries();
    let t = &a + &d;
    let disc = &t * &t - BigInt::from(4);
    let two_c = BigInt::from(2) * &c;
    // cz + d = (t ± √D)/2 at the two roots; the + root has |cz + d| > 1.
    let attracting = BoundaryPoint::new(&a - &d, BigInt::from(1), two_c.clone(), disc.clone());
    let repelling = BoundaryPoint::new(&a - &d, BigInt::from(-1), two_c, disc);
    debug_assert!(!attracting.is_rational());
    Ok(Axis { repelling, attracting, owner: m.clone() })
}

/// True iff `z` lies on the counterclockwise boundary arc running from `from`
/// to `to` (open at both ends).
fn in_ccw_arc(from: &BoundaryPoint, to: &BoundaryPoint, z: &BoundaryPoint) -> bool {
    match from.cmp(to) {
        Ordering::Less => from < z && z < to,
        Ordering::Greater => z > from || z < to,
        Ordering::Equal => false,
    }
}

/// Crossing sign of two oriented axes: 0 unless their endpoints link; +1 when
/// `B` enters through the arc from `A.repelling` counterclockwise to
/// `A.attracting`.
pub fn crossing_sign(a: &Axis, b: &Axis) -> i32 {
    let ends = [&a.repelling, &a.attracting];
    if ends.iter().any(|e| **e == b.repelling || **e == b.attracting) {
        return 0;
    }
    let rep_inside = in_ccw_arc(&a.repelling, &a.attracting, &b.repelling);
    let att_inside = in_ccw_arc(&a.repelling, &a.attracting, &b.attracting);
    match (rep_inside, att_inside) {
        (true, false) => 1,
        (false, true) => -1,
        _ => 0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanePoint {
    pub u: f64,
    pub v: f64,
}

impl PlanePoint {
    pub fn new(u: f64, v: f64) -> Self {
        PlanePoint { u, v }
    }

    pub const I: PlanePoint = PlanePoint { u: 0.0, v: 1.0 };

    pub fn z(self) -> Complex64 {
        Complex64::new(self.u, self.v)
    }

    pub fn from_z(z: Complex64) -> Self {
        PlanePoint { u: z.re, v: z.im }
    }

    pub fn moved_by(self, g: &ProjectiveMatrix) -> Self {
        PlanePoint::from_z(g.act(self.z()))
    }
}

pub fn hyperbolic_distance(p: PlanePoint, q: PlanePoint) -> f64 {
    let du = p.u - q.u;
    let dv = p.v - q.v;
    let x = (du * du + dv * dv) / (2.0 * p.v * q.v);
    // acosh(1 + x) computed without cancellation for small x.
    (x + (x * (x + 2.0)).sqrt()).ln_1p()
}

/// `d(i, M i)`, from `cosh d = ‖M‖²/2`.
pub fn displacement_radius(m: &ProjectiveMatrix) -> f64 {
    let f = m.frobenius_sq();
    let x = f - BigInt::from(2);
    if x.bits() < 50 {
        let x = x.to_string().parse::<f64>().unwrap_or(0.0) / 2.0;
        return (x + (x * (x + 2.0)).sqrt()).ln_1p();
    }
    ln_big(&m.frobenius_sq())
}

/// A geodesic between two finite boundary points, in floating point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumAxis {
    pub repelling: f64,
    pub attracting: f64,
    eps: f64,
}

impl NumAxis {
    pub fn new(repelling: f64, attracting: f64) -> Self {
        NumAxis { repelling, attracting, eps: (repelling - attracting).signum() }
    }

    /// Möbius map sending the axis to the positive imaginary axis, forward
    /// direction upward.
    pub fn to_standard(&self, p: PlanePoint) -> Complex64 {
        let z = p.z();
        (z - self.repelling) / (z - self.attracting) * self.eps
    }

    pub fn from_standard(&self, w: Complex64) -> PlanePoint {
        PlanePoint::from_z((w * self.attracting - self.eps * self.repelling) / (w - self.eps))
    }

    pub fn distance_to(&self, p: PlanePoint) -> f64 {
        let w = self.to_standard(p);
        (w.re.abs() / w.im).asinh()
    }

    /// Foot of the perpendicular from `p`.
    pub fn closest_point(&self, p: PlanePoint) -> PlanePoint {
        let w = self.to_standard(p);
        self.from_standard(Complex64::new(0.0, w.norm()))
    }

    /// The point at signed distance `t` along the axis from `p` (which must
    /// lie on the axis).
    pub fn advance(&self, p: PlanePoint, t: f64) -> PlanePoint {
        let w = self.to_standard(p);
        self.from_standard(Complex64::new(0.0, w.norm() * t.exp()))
    }

    /// Signed position along the axis, relative to an arbitrary fixed origin.
    pub fn coordinate(&self, p: PlanePoint) -> f64 {
        self.to_standard(p).norm().ln()
    }

    pub fn reversed(&self) -> NumAxis {
        NumAxis::new(self.attracting, self.repelling)
    }

    /// Intersection point with another geodesic, if the endpoints link.
    pub fn intersection(&self, other: &NumAxis) -> Option<PlanePoint> {
        let b1 = (other.repelling - self.repelling) / (other.repelling - self.attracting) * self.eps;
        let b2 = (other.attracting - self.repelling) / (other.attracting - self.attracting) * self.eps;
        let prod = -b1 * b2;
        if !prod.is_finite() || prod <= 0.0 {
            return None;
        }
        Some(self.from_standard(Complex64::new(0.0, prod.sqrt())))
    }
}

/// Geodesic through two points, oriented from `p` to `q`; `None` when the
/// geodesic is vertical.
fn geodesic_through(p: PlanePoint, q: PlanePoint) -> Option<NumAxis> {
    let du = q.u - p.u;
    if du.abs() < 1e-12 * (1.0 + p.u.abs() + q.u.abs()) {
        return None;
    }
    let center = (q.u * q.u + q.v * q.v - p.u * p.u - p.v * p.v) / (2.0 * du);
    let rad = ((p.u - center).powi(2) + p.v * p.v).sqrt();
    Some(if du > 0.0 {
        NumAxis::new(center - rad, center + rad)
    } else {
        NumAxis::new(center + rad, center - rad)
    })
}

pub fn geodesic_midpoint(p: PlanePoint, q: PlanePoint) -> PlanePoint {
    match geodesic_through(p, q) {
        None => PlanePoint::new(0.5 * (p.u + q.u), (p.v * q.v).sqrt()),
        Some(g) => {
            let a = g.to_standard(p).norm();
            let b = g.to_standard(q).norm();
            g.from_standard(Complex64::new(0.0, (a * b).sqrt()))
        }
    }
}

/// Exact image of the axis under `g`: endpoints move by the Möbius action.
pub fn transport_axis(axis: &Axis, g: &ProjectiveMatrix) -> Axis {
    let rep = axis.repelling.mobius(g).expect("irrational endpoint maps to a finite point");
    let att = axis.attracting.mobius(g).expect("irrational endpoint maps to a finite point");
    Axis { repelling: rep, attracting: att, owner: axis.owner.conjugate_by(g) }
}

fn crossing_point(x: &ProjectiveMatrix, y: &ProjectiveMatrix) -> Result<(Axis, Axis, PlanePoint)> {
    let ax = fixed_points(x)?;
    let ay = fixed_points(y)?;
    if crossing_sign(&ax, &ay) == 0 {
        return Err(Error::AxesDoNotCross);
    }
    let p = ax.numeric().intersection(&ay.numeric()).ok_or(Error::AxesDoNotCross)?;
    Ok((ax, ay, p))
}

/// Points `R` on `A_y` and `Q` on `A_x` that lie on the axis of `xy`, a
/// half translation length from the crossing point in either direction.
pub fn product_axis_witnesses(x: &ProjectiveMatrix, y: &ProjectiveMatrix) -> Result<(PlanePoint, PlanePoint)> {
    let (ax, ay, p) = crossing_point(x, y)?;
    let tx = translation_length(x)?;
    let ty = translation_length(y)?;
    let q = ax.numeric().advance(p, tx / 2.0);
    let r = ay.numeric().advance(p, -ty / 2.0);
    Ok((r, q))
}

/// Periodic piecewise geodesic alternating between translates of `A_y`
/// and `A_x`.
#[derive(Debug, Clone)]
pub struct QuasiGeodesic {
    /// The crossing point `P` of `A_x` and `A_y`.
    pub base: PlanePoint,
    /// Vertices in path order; pairs `(g^k y^-q P, g^k P)` for `g = x^p y^q`.
    pub vertices: Vec<PlanePoint>,
    /// `h` with `vertices[i] = h · base`. Far out along the path the floating
    /// point vertices lose precision; pulling back by these keeps checks
    /// near `base`.
    pub transforms: Vec<ProjectiveMatrix>,
    /// Element whose axis carries segment `i` (from vertex `i` to `i + 1`).
    pub segment_owners: Vec<ProjectiveMatrix>,
    pub period: ProjectiveMatrix,
}

pub fn quasigeodesic(x: &ProjectiveMatrix, y: &ProjectiveMatrix, p: u32, q: u32, window: u32) -> Result<QuasiGeodesic> {
    let (_, _, base) = crossing_point(x, y)?;
    let xp = x.power(p as i64);
    let yq = y.power(q as i64);
    let g = xp.compose(&yq);
    let yq_inv = yq.inverse();
    let w = window as i64;
    let mut transforms = Vec::new();
    let mut owners = Vec::new();
    for k in -w..=w {
        let gk = g.power(k);
        transforms.push(gk.compose(&yq_inv));
        transforms.push(gk.clone());
        owners.push(yq.conjugate_by(&gk));
        if k < w {
            owners.push(xp.conjugate_by(&gk));
        }
    }
    let vertices = transforms.iter().map(|h| base.moved_by(h)).collect();
    Ok(QuasiGeodesic { base, vertices, transforms, segment_owners: owners, period: g })
}

/// Point of the axis closest to `i`.
pub fn closest_point_to_i(axis: &NumAxis) -> PlanePoint {
    axis.closest_point(PlanePoint::I)
}

/// `d(i, A)`.
pub fn distance_from_i(axis: &Axis) -> f64 {
    axis.numeric().distance_to(PlanePoint::I)
}
