//! SVG pictures of two axes and the crossing translates of the second.

use std::fmt::Write as _;
use std::path::Path;

use goldman_core::geometry::{closest_point_to_i, NumAxis};
use goldman_core::*;
use serde_json::json;

use crate::render::matrix;
use crate::{Input, Output};

const WIDTH: f64 = 960.0;
const POSITIVE: &str = "#c0392b";
const NEGATIVE: &str = "#1e8449";

struct Frame {
    xmin: f64,
    ymax: f64,
    scale: f64,
}

impl Frame {
    fn new(xmin: f64, xmax: f64, ymax: f64) -> Frame {
        Frame { xmin, ymax, scale: WIDTH / (xmax - xmin) }
    }

    fn height(&self) -> f64 {
        self.ymax * self.scale
    }

    fn px(&self, p: PlanePoint) -> (f64, f64) {
        ((p.u - self.xmin) * self.scale, (self.ymax - p.v) * self.scale)
    }
}

/// SVG path of the geodesic through `p` and `q`.
fn geodesic_path(f: &Frame, p: PlanePoint, q: PlanePoint) -> String {
    let (x1, y1) = f.px(p);
    let (x2, y2) = f.px(q);
    if (p.u - q.u).abs() < 1e-12 * (1.0 + p.u.abs()) {
        return format!("M {x1:.3} {y1:.3} L {x2:.3} {y2:.3}");
    }
    let center = (p.u * p.u + p.v * p.v - q.u * q.u - q.v * q.v) / (2.0 * (p.u - q.u));
    let r = ((p.u - center).powi(2) + p.v * p.v).sqrt() * f.scale;
    // Moving left to right along an upper semicircle is clockwise on screen.
    let sweep = if q.u > p.u { 1 } else { 0 };
    format!("M {x1:.3} {y1:.3} A {r:.3} {r:.3} 0 0 {sweep} {x2:.3} {y2:.3}")
}

fn full_axis(f: &Frame, a: &NumAxis) -> String {
    geodesic_path(f, PlanePoint::new(a.repelling, 0.0), PlanePoint::new(a.attracting, 0.0))
}

fn default_window(axes: &[NumAxis]) -> (f64, f64, f64) {
    let lo = axes.iter().map(|a| a.repelling.min(a.attracting)).fold(f64::INFINITY, f64::min);
    let hi = axes.iter().map(|a| a.repelling.max(a.attracting)).fold(f64::NEG_INFINITY, f64::max);
    let margin = 0.1 * (hi - lo).max(1e-6);
    let (xmin, xmax) = (lo - margin, hi + margin);
    let radius = axes.iter().map(|a| (a.attracting - a.repelling).abs() / 2.0).fold(0.0, f64::max);
    (xmin, xmax, 1.15 * radius)
}

pub fn plot(
    ins: &[Input],
    spec: &SubgroupSpec,
    out: &Path,
    window: Option<(f64, f64, f64)>,
    qg: Option<(u32, u32)>,
) -> Result<Output> {
    let (x, y) = (&ins[0].matrix, &ins[1].matrix);
    let ax = fixed_points(x)?.numeric();
    let ay = fixed_points(y)?.numeric();
    let tau = translation_length(x)?;

    // Translate each crossing so that it meets A_x inside [P0, x P0).
    let p0 = closest_point_to_i(&ax);
    let s0 = ax.coordinate(p0);
    let mut translates = Vec::new();
    for c in crossing_double_cosets(x, y, spec)? {
        let b = c.rep.clone();
        let axis = fixed_points(&y.conjugate_by(&b))?.numeric();
        let hit = ax.intersection(&axis).ok_or(Error::AxesDoNotCross)?;
        let k = ((ax.coordinate(hit) - s0) / tau).floor() as i64;
        let shifted = x.power(-k).compose(&b);
        translates.push((shifted, c.sign));
    }
    let mut axes: Vec<NumAxis> = vec![ax, ay];
    for (b, _) in &translates {
        axes.push(fixed_points(&y.conjugate_by(b))?.numeric());
    }

    let (xmin, xmax, ymax) = window.unwrap_or_else(|| default_window(&axes));
    if !(xmax > xmin && ymax > 0.0) {
        return Err(Error::Syntax { position: 0, message: "window needs XMIN < XMAX and YMAX > 0".into() });
    }
    let f = Frame::new(xmin, xmax, ymax);
    let mut svg = String::new();
    let h = f.height();
    writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH:.0}" height="{h:.0}" viewBox="0 0 {WIDTH:.3} {h:.3}">"#
    )
    .unwrap();
    writeln!(svg, r#"<defs><clipPath id="half"><rect x="0" y="0" width="{WIDTH:.3}" height="{h:.3}"/></clipPath></defs>"#).unwrap();
    writeln!(svg, r##"<rect x="0" y="0" width="{WIDTH:.3}" height="{h:.3}" fill="#ffffff"/>"##).unwrap();
    writeln!(svg, r#"<g clip-path="url(#half)" fill="none">"#).unwrap();
    writeln!(svg, r##"<line x1="0" y1="{h:.3}" x2="{WIDTH:.3}" y2="{h:.3}" stroke="#000000" stroke-width="1"/>"##).unwrap();
    writeln!(svg, r##"<path d="{}" stroke="#999999" stroke-width="1" stroke-dasharray="4 3"/>"##, full_axis(&f, &ay)).unwrap();
    for ((_, sign), axis) in translates.iter().zip(&axes[2..]) {
        let colour = if *sign > 0 { POSITIVE } else { NEGATIVE };
        writeln!(svg, r#"<path d="{}" stroke="{colour}" stroke-width="1.5"/>"#, full_axis(&f, axis)).unwrap();
    }
    writeln!(svg, r##"<path d="{}" stroke="#1f4e9c" stroke-width="2"/>"##, full_axis(&f, &ax)).unwrap();
    let p1 = p0.moved_by(x);
    writeln!(svg, r##"<path d="{}" stroke="#1f4e9c" stroke-width="5"/>"##, geodesic_path(&f, p0, p1)).unwrap();
    if let (Some((p, q)), Some((b, _))) = (qg, translates.first()) {
        let path = quasigeodesic(x, &y.conjugate_by(b), p, q, 3)?;
        let d: Vec<String> = path.vertices.windows(2).map(|w| geodesic_path(&f, w[0], w[1])).collect();
        writeln!(svg, r##"<path d="{}" stroke="#8e44ad" stroke-width="1.5"/>"##, d.join(" ")).unwrap();
    }
    writeln!(svg, "</g>").unwrap();
    writeln!(svg, "</svg>").unwrap();

    let crossings: Vec<_> = translates.iter().map(|(b, s)| json!({ "rep": matrix(b), "sign": s })).collect();
    let text = format!("wrote {} with {} crossing translates\n", out.display(), translates.len());
    let result = json!({ "path": out.display().to_string(), "window": [xmin, xmax, ymax], "crossings": crossings });
    Ok(Output { text, inputs: ins.iter().map(crate::render::input).collect(), result, file: Some((out.to_path_buf(), svg)) })
}
