//! SVG drawings of the stereographic plane.

use std::fmt::Write;

use kgeom::embedding::{geodesic_interpolate, PlanarPoint};
use kgeom::{Curvature, Result};

/// Samples per drawn geodesic edge.
pub const EDGE_SAMPLES: usize = 64;

const SIZE: f64 = 512.0;

pub struct Scene {
    k: Curvature,
    polylines: Vec<Vec<PlanarPoint>>,
    dots: Vec<(PlanarPoint, String, &'static str)>,
    view: [f64; 4],
}

impl Scene {
    /// View box fitted around `anchor` points (plus the model disk for `k < 0`).
    pub fn new(k: Curvature, anchor: &[PlanarPoint]) -> Self {
        let mut lo = [f64::INFINITY; 2];
        let mut hi = [f64::NEG_INFINITY; 2];
        for p in anchor {
            lo = [lo[0].min(p.x1), lo[1].min(p.x2)];
            hi = [hi[0].max(p.x1), hi[1].max(p.x2)];
        }
        if let (true, Some(r)) = (k.value() < 0.0, k.radius()) {
            lo = [lo[0].min(-2.0 * r), lo[1].min(-2.0 * r)];
            hi = [hi[0].max(2.0 * r), hi[1].max(2.0 * r)];
        }
        let span = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1e-9);
        let margin = 0.1 * span;
        let view = [lo[0] - margin, lo[1] - margin, span + 2.0 * margin, span + 2.0 * margin];
        Scene { k, polylines: Vec::new(), dots: Vec::new(), view }
    }

    /// The closed geodesic polygon through `vertices`.
    pub fn polygon(&mut self, vertices: &[PlanarPoint]) -> Result<()> {
        for i in 0..vertices.len() {
            let (p, q) = (vertices[i], vertices[(i + 1) % vertices.len()]);
            let line = (0..EDGE_SAMPLES)
                .map(|j| geodesic_interpolate(&p, &q, j as f64 / (EDGE_SAMPLES - 1) as f64, self.k))
                .collect::<Result<Vec<_>>>()?;
            self.polylines.push(line);
        }
        Ok(())
    }

    pub fn dot(&mut self, p: PlanarPoint, label: &str, color: &'static str) {
        self.dots.push((p, label.to_string(), color));
    }

    fn map(&self, p: &PlanarPoint) -> (f64, f64) {
        let s = SIZE / self.view[2];
        ((p.x1 - self.view[0]) * s, (self.view[1] + self.view[3] - p.x2) * s)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#);
        let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
        if let (true, Some(r)) = (self.k.value() < 0.0, self.k.radius()) {
            let (cx, cy) = self.map(&PlanarPoint::ORIGIN);
            let rr = 2.0 * r * SIZE / self.view[2];
            let _ = writeln!(out, r#"<circle cx="{cx:.3}" cy="{cy:.3}" r="{rr:.3}" fill="none" stroke="gray" stroke-dasharray="4 3"/>"#);
        }
        for line in &self.polylines {
            let pts: Vec<String> = line
                .iter()
                .map(|p| {
                    let (x, y) = self.map(p);
                    format!("{x:.3},{y:.3}")
                })
                .collect();
            let _ = writeln!(out, r#"<polyline points="{}" fill="none" stroke="black"/>"#, pts.join(" "));
        }
        for (p, label, color) in &self.dots {
            let (x, y) = self.map(p);
            let _ = writeln!(out, r#"<circle cx="{x:.3}" cy="{y:.3}" r="3" fill="{color}"/>"#);
            let _ = writeln!(out, r#"<text x="{:.3}" y="{:.3}" font-size="11" font-family="sans-serif">{label}</text>"#, x + 5.0, y - 5.0);
        }
        out.push_str("</svg>\n");
        out
    }
}
