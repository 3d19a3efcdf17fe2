//! Conversions between the stereographic plane, the embedded surface and
//! homogeneous coordinates relative to a reference triangle.
//!
//! The surface of curvature `k` is embedded in a three-dimensional ambient
//! space with radius `ρ = 1/√|k|`, tangent to the projection plane at the
//! origin `T`. Stored [`EmbeddedPoint`]s use `T`-centered coordinates
//! `(t0, u1, u2)`: `t0` is the offset along the axis through `T` and the
//! surface center `O`, which sits at `t0 = -ρ`. For `k < 0` the physical
//! first coordinate is imaginary (`x0 = i·t0`); we keep the real magnitude and
//! use the symmetric form
//!
//! ```text
//! <x, y> = sign(k)·x0·y0 + x1·y1 + x2·y2
//! ```
//!
//! on `O`-centered vectors, so that the surface is `<ξ, ξ> = 1/k` for both
//! signs: a sphere for `k > 0`, the upper sheet of a hyperboloid for `k < 0`.
//!
//! At `k = 0` there is no embedding; the homogeneous-coordinate conversions
//! fall back to plane trilinear geometry.

use crate::error::{GeomError, Result};
use crate::gtrig::{asing, sing, tang, Curvature};
use crate::projective::HomPoint;
use crate::triangle::Triangle;

/// Residual accepted for externally supplied embedded points.
pub const SURFACE_TOL: f64 = 1e-9;

/// A point in the stereographic projection plane, origin at `T`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlanarPoint {
    pub x1: f64,
    pub x2: f64,
}

impl PlanarPoint {
    pub const ORIGIN: PlanarPoint = PlanarPoint { x1: 0.0, x2: 0.0 };

    pub fn new(x1: f64, x2: f64) -> Self {
        PlanarPoint { x1, x2 }
    }

    pub fn is_finite(&self) -> bool {
        self.x1.is_finite() && self.x2.is_finite()
    }

    pub fn norm(&self) -> f64 {
        self.x1.hypot(self.x2)
    }

    pub fn as_array(&self) -> [f64; 2] {
        [self.x1, self.x2]
    }

    /// Plane polar form `rθ` with `rθ_i = x_i`.
    pub fn to_polar(&self) -> PolarPoint {
        let r = self.norm();
        let theta = if r == 0.0 { [1.0, 0.0] } else { [self.x1 / r, self.x2 / r] };
        PolarPoint { r, theta }
    }

    /// Euclidean distance in the projection plane.
    pub fn chart_distance(&self, other: &PlanarPoint) -> f64 {
        (self.x1 - other.x1).hypot(self.x2 - other.x2)
    }
}

impl From<[f64; 2]> for PlanarPoint {
    fn from(v: [f64; 2]) -> Self {
        PlanarPoint::new(v[0], v[1])
    }
}

/// Plane polar coordinates: distance `r` from `T` in the projection plane
/// and a pair of direction cosines.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PolarPoint {
    r: f64,
    theta: [f64; 2],
}

impl PolarPoint {
    pub fn new(r: f64, theta: [f64; 2]) -> Result<Self> {
        if !r.is_finite() || !theta[0].is_finite() || !theta[1].is_finite() {
            return Err(GeomError::NonFinite("polar coordinate"));
        }
        if r < 0.0 {
            return Err(GeomError::Domain { func: "polar radius", value: r });
        }
        let n2 = theta[0] * theta[0] + theta[1] * theta[1];
        if (n2 - 1.0).abs() > 1e-12 {
            return Err(GeomError::Domain { func: "direction cosines", value: n2 });
        }
        Ok(PolarPoint { r, theta })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn theta(&self) -> [f64; 2] {
        self.theta
    }

    pub fn to_planar(&self) -> PlanarPoint {
        PlanarPoint::new(self.r * self.theta[0], self.r * self.theta[1])
    }
}

/// Geodesic polar coordinates about some origin: arc length `r` along the
/// surface and the direction cosines of the initial tangent.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeodesicPolar {
    pub r: f64,
    pub theta: [f64; 2],
}

/// A point of the embedded surface in `T`-centered coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EmbeddedPoint {
    pub t0: f64,
    pub u1: f64,
    pub u2: f64,
}

fn radius(k: Curvature) -> Result<f64> {
    k.radius().ok_or(GeomError::FlatSpace)
}

impl EmbeddedPoint {
    pub const TANGENT_POINT: EmbeddedPoint = EmbeddedPoint { t0: 0.0, u1: 0.0, u2: 0.0 };

    pub fn new(t0: f64, u1: f64, u2: f64) -> Self {
        EmbeddedPoint { t0, u1, u2 }
    }

    /// Coordinates relative to the surface center `O`.
    pub fn centered(&self, k: Curvature) -> Result<[f64; 3]> {
        Ok([self.t0 + radius(k)?, self.u1, self.u2])
    }

    pub fn from_centered(xi: [f64; 3], k: Curvature) -> Result<Self> {
        Ok(EmbeddedPoint { t0: xi[0] - radius(k)?, u1: xi[1], u2: xi[2] })
    }

    /// Dimensionless distance from the surface, computed without forming
    /// `ρ + t0`.
    pub fn surface_residual(&self, k: Curvature) -> Result<f64> {
        let rho = radius(k)?;
        let u2 = self.u1 * self.u1 + self.u2 * self.u2;
        let f = u2 + k.sign() * self.t0 * (self.t0 + 2.0 * rho);
        Ok((k.value() * f).abs() / (1.0 + k.value().abs() * (u2 + self.t0 * self.t0)))
    }

    fn check_on_surface(&self, k: Curvature) -> Result<()> {
        if !(self.t0.is_finite() && self.u1.is_finite() && self.u2.is_finite()) {
            return Err(GeomError::NonFinite("embedded point"));
        }
        let residual = self.surface_residual(k)?;
        if residual > SURFACE_TOL {
            return Err(GeomError::OffSurface { residual });
        }
        if k.value() < 0.0 && self.t0 + radius(k)? <= 0.0 {
            // lower sheet of the hyperboloid
            return Err(GeomError::OffSurface { residual: f64::INFINITY });
        }
        Ok(())
    }
}

/// `sign(k)·x0·y0 + x1·y1 + x2·y2`.
pub fn ambient_dot(x: &[f64; 3], y: &[f64; 3], k: Curvature) -> f64 {
    k.sign() * x[0] * y[0] + x[1] * y[1] + x[2] * y[2]
}

fn dot3(x: &[f64; 3], y: &[f64; 3]) -> f64 {
    x[0] * y[0] + x[1] * y[1] + x[2] * y[2]
}

fn cross3(p: &[f64; 3], q: &[f64; 3]) -> [f64; 3] {
    [p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]]
}

fn norm3(x: &[f64; 3]) -> f64 {
    dot3(x, x).sqrt()
}

/// Lifts a point of the projection plane onto the surface:
/// `x0 = -2r²/((4 + kr²)√(1/k))`, `r' = 4r/(4 + kr²)`.
pub fn stereo_to_embedded(p: &PlanarPoint, k: Curvature) -> Result<EmbeddedPoint> {
    if !p.is_finite() {
        return Err(GeomError::NonFinite("planar point"));
    }
    let rho = radius(k)?;
    let r2 = p.x1 * p.x1 + p.x2 * p.x2;
    let den = 4.0 + k.value() * r2;
    if den <= 0.0 {
        // on or outside the boundary circle r = 2ρ of the hyperbolic chart
        return Err(GeomError::ProjectionPole { r: r2.sqrt() });
    }
    let t0 = -2.0 * k.value() * rho * r2 / den;
    Ok(EmbeddedPoint { t0, u1: 4.0 * p.x1 / den, u2: 4.0 * p.x2 / den })
}

/// Projects a surface point back to the plane from the point diametrically
/// opposite `T`: `x = 2ρ u / (2ρ + t0)`.
pub fn embedded_to_stereo(e: &EmbeddedPoint, k: Curvature) -> Result<PlanarPoint> {
    let rho = radius(k)?;
    e.check_on_surface(k)?;
    let den = 2.0 * rho + e.t0;
    if den.abs() <= 1e-15 * rho {
        return Err(GeomError::ProjectionPole { r: f64::INFINITY });
    }
    let s = 2.0 * rho / den;
    Ok(PlanarPoint::new(s * e.u1, s * e.u2))
}

/// Arc length along the surface, from the ambient chord:
/// `d = 2·asing(|chord|/2)`.
pub fn geodesic_distance(e1: &EmbeddedPoint, e2: &EmbeddedPoint, k: Curvature) -> Result<f64> {
    e1.check_on_surface(k)?;
    e2.check_on_surface(k)?;
    let diff = [e1.t0 - e2.t0, e1.u1 - e2.u1, e1.u2 - e2.u2];
    let chord2 = ambient_dot(&diff, &diff, k).max(0.0);
    Ok(2.0 * asing(0.5 * chord2.sqrt(), k)?)
}

/// Geodesic distance between two points of the projection plane; plain
/// Euclidean distance at `k = 0`.
pub fn planar_distance(p: &PlanarPoint, q: &PlanarPoint, k: Curvature) -> Result<f64> {
    if k.is_flat() {
        return Ok(p.chart_distance(q));
    }
    geodesic_distance(&stereo_to_embedded(p, k)?, &stereo_to_embedded(q, k)?, k)
}

/// Embeds geodesic polar coordinates about `T`: the `O`-centered point is
/// `(ρ·cosg r, sing(r)·θ)`.
pub fn from_geodesic_polar(g: &GeodesicPolar, k: Curvature) -> Result<EmbeddedPoint> {
    let rho = radius(k)?;
    let s = sing(g.r, k);
    // ρ(cosg r - 1) = -k ρ versg r, kept exact near T
    let half = sing(0.5 * g.r, k);
    let t0 = -2.0 * k.value() * rho * half * half;
    Ok(EmbeddedPoint { t0, u1: s * g.theta[0], u2: s * g.theta[1] })
}

/// The point of the projection plane at arc length `g.r` from `T` in
/// direction `g.theta`; its plane radius is `2·tang(r/2)`.
pub fn geodesic_polar_to_planar(g: &GeodesicPolar, k: Curvature) -> Result<PlanarPoint> {
    let r = if k.is_flat() { g.r } else { 2.0 * tang(0.5 * g.r, k)? };
    if !r.is_finite() || (k.value() < 0.0 && r >= 2.0 * radius(k)?) {
        return Err(GeomError::ProjectionPole { r });
    }
    Ok(PlanarPoint::new(r * g.theta[0], r * g.theta[1]))
}

/// Geodesic polar coordinates of an `O`-centered surface point about `T`.
pub fn geodesic_polar_of_centered(xi: &[f64; 3], k: Curvature) -> Result<GeodesicPolar> {
    let rho = radius(k)?;
    let su = xi[1].hypot(xi[2]);
    let q = k.value().abs().sqrt();
    let r = if k.value() > 0.0 { (su * q).atan2(xi[0] / rho) / q } else { (su * q).asinh() / q };
    let theta = if su == 0.0 { [1.0, 0.0] } else { [xi[1] / su, xi[2] / su] };
    Ok(GeodesicPolar { r, theta })
}

/// Orientation-preserving isometry of the surface that carries `T` to a
/// given point along the geodesic joining them.
///
/// On `O`-centered vectors with target `b = (b0, b_u)` and `c = b0/ρ`:
///
/// ```text
/// ξ0' = c ξ0 - kρ (b_u·ξ_u)
/// ξ_u' = ξ_u + (ξ0/ρ) b_u - k/(1 + c) (b_u·ξ_u) b_u
/// ```
#[derive(Clone, Copy, Debug)]
pub struct Translation {
    c: f64,
    bu: [f64; 2],
    rho: f64,
    k: f64,
}

impl Translation {
    pub fn to_point(b: &EmbeddedPoint, k: Curvature) -> Result<Self> {
        let rho = radius(k)?;
        let c = (rho + b.t0) / rho;
        if 1.0 + c <= 1e-12 {
            // antipode of T: the geodesic is not unique
            return Err(GeomError::ProjectionPole { r: f64::INFINITY });
        }
        Ok(Translation { c, bu: [b.u1, b.u2], rho, k: k.value() })
    }

    pub fn inverse(&self) -> Self {
        Translation { bu: [-self.bu[0], -self.bu[1]], ..*self }
    }

    pub fn apply(&self, xi: &[f64; 3]) -> [f64; 3] {
        let bx = self.bu[0] * xi[1] + self.bu[1] * xi[2];
        let g = self.k / (1.0 + self.c) * bx;
        let f = xi[0] / self.rho;
        [
            self.c * xi[0] - self.k * self.rho * bx,
            xi[1] + f * self.bu[0] - g * self.bu[0],
            xi[2] + f * self.bu[1] - g * self.bu[1],
        ]
    }
}

/// Interpolates along the geodesic from `p` (`t = 0`) to `q` (`t = 1`).
pub fn geodesic_interpolate(p: &PlanarPoint, q: &PlanarPoint, t: f64, k: Curvature) -> Result<PlanarPoint> {
    if k.is_flat() {
        return Ok(PlanarPoint::new(p.x1 + t * (q.x1 - p.x1), p.x2 + t * (q.x2 - p.x2)));
    }
    let (ep, eq) = (stereo_to_embedded(p, k)?, stereo_to_embedded(q, k)?);
    let d = geodesic_distance(&ep, &eq, k)?;
    if d == 0.0 {
        return Ok(*p);
    }
    let (xp, xq) = (ep.centered(k)?, eq.centered(k)?);
    let (wp, wq) = (sing((1.0 - t) * d, k), sing(t * d, k));
    let s = sing(d, k);
    let xi = [0, 1, 2].map(|i| (wp * xp[i] + wq * xq[i]) / s);
    embedded_to_stereo(&EmbeddedPoint::from_centered(xi, k)?, k)
}

/// A plane through the surface center `O` containing one edge of the
/// reference triangle, with its normal pointing toward the opposite vertex.
///
/// The normal is scaled to unit length in the ambient form, so that
/// `n·ξ = sing h` for a surface point `ξ` at directed distance `h` from the
/// edge.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrientedPlane {
    n: [f64; 3],
}

impl OrientedPlane {
    /// Unit normal in `O`-centered coordinates.
    pub fn normal(&self) -> [f64; 3] {
        self.n
    }

    /// `n·ξ` for an `O`-centered point.
    pub fn evaluate(&self, xi: &[f64; 3]) -> f64 {
        dot3(&self.n, xi)
    }

    /// Coefficients `[n0, n1, n2, d]` of the plane `n0 t0 + n1 u1 + n2 u2 + d = 0`
    /// in `T`-centered coordinates with a real first coordinate.
    pub fn t_centered_coefficients(&self, k: Curvature) -> Result<[f64; 4]> {
        let rho = radius(k)?;
        Ok([self.n[0], self.n[1], self.n[2], self.n[0] * rho])
    }
}

fn centered_vertices(vertices: &[PlanarPoint; 3], k: Curvature) -> Result<[[f64; 3]; 3]> {
    let mut out = [[0.0; 3]; 3];
    for (o, v) in out.iter_mut().zip(vertices) {
        *o = stereo_to_embedded(v, k)?.centered(k)?;
    }
    Ok(out)
}

/// Planes through `O` and each edge, in the order `a = BC`, `b = CA`, `c = AB`.
pub fn edge_planes(vertices: &[PlanarPoint; 3], k: Curvature) -> Result<[OrientedPlane; 3]> {
    let xi = centered_vertices(vertices, k)?;
    planes_from_centered(&xi, k)
}

fn planes_from_centered(xi: &[[f64; 3]; 3], k: Curvature) -> Result<[OrientedPlane; 3]> {
    let mut planes = [OrientedPlane { n: [0.0; 3] }; 3];
    for i in 0..3 {
        let (p, q, opp) = (&xi[(i + 1) % 3], &xi[(i + 2) % 3], &xi[i]);
        let mut n = cross3(p, q);
        let side = dot3(&n, opp);
        if side.abs() <= 1e-12 * norm3(&n) * norm3(opp) || norm3(&n) == 0.0 {
            return Err(GeomError::DegenerateTriangle);
        }
        if side < 0.0 {
            n = n.map(|v| -v);
        }
        let m2 = ambient_dot(&n, &n, k);
        if m2 <= 0.0 {
            return Err(GeomError::DegenerateTriangle);
        }
        let m = m2.sqrt();
        planes[i] = OrientedPlane { n: n.map(|v| v / m) };
    }
    Ok(planes)
}

/// Builds the reference triangle from its vertices in the projection plane.
pub fn triangle_from_vertices(vertices: &[PlanarPoint; 3], k: Curvature) -> Result<Triangle> {
    let d = |i: usize, j: usize| planar_distance(&vertices[i], &vertices[j], k);
    Triangle::from_sides(d(1, 2)?, d(2, 0)?, d(0, 1)?, k)
}

/// Signed Euclidean distances from `p` to the three edge lines, positive
/// toward the opposite vertex.
fn flat_directed_distances(p: &PlanarPoint, v: &[PlanarPoint; 3]) -> Result<[f64; 3]> {
    let mut h = [0.0; 3];
    for (i, hi) in h.iter_mut().enumerate() {
        let (b, c, a) = (&v[(i + 1) % 3], &v[(i + 2) % 3], &v[i]);
        let (ex, ey) = (c.x1 - b.x1, c.x2 - b.x2);
        let len = ex.hypot(ey);
        let side = |q: &PlanarPoint| (ex * (q.x2 - b.x2) - ey * (q.x1 - b.x1)) / len;
        let s_opp = side(a);
        if len == 0.0 || s_opp.abs() <= 1e-12 * len {
            return Err(GeomError::DegenerateTriangle);
        }
        *hi = side(p) * s_opp.signum();
    }
    Ok(h)
}

/// Directed geodesic distances `(h_a, h_b, h_c)` from `p` to the edges.
pub fn directed_distances(p: &PlanarPoint, vertices: &[PlanarPoint; 3], k: Curvature) -> Result<[f64; 3]> {
    if k.is_flat() {
        return flat_directed_distances(p, vertices);
    }
    let hs = sines_of_directed_distances(p, vertices, k)?;
    Ok([asing(hs[0], k)?, asing(hs[1], k)?, asing(hs[2], k)?])
}

fn sines_of_directed_distances(p: &PlanarPoint, vertices: &[PlanarPoint; 3], k: Curvature) -> Result<[f64; 3]> {
    let planes = edge_planes(vertices, k)?;
    let xi = stereo_to_embedded(p, k)?.centered(k)?;
    Ok(planes.map(|pl| pl.evaluate(&xi)))
}

/// `(sing h_a : sing h_b : sing h_c)`, normalized.
pub fn stereo_to_homog(p: &PlanarPoint, vertices: &[PlanarPoint; 3], k: Curvature) -> Result<HomPoint> {
    let s = if k.is_flat() {
        flat_directed_distances(p, vertices)?
    } else {
        sines_of_directed_distances(p, vertices, k)?
    };
    Ok(HomPoint::from_array(s)?.normalize())
}

/// Inverse of [`stereo_to_homog`].
///
/// Each edge plane is translated along its unit normal by the matching
/// homogeneous coordinate; the three translated planes meet in a point which
/// is projected onto the surface from `O`. For `k > 0`, `(x)` and `(-x)` name
/// antipodal points; the one on the same side as the reference triangle is
/// returned.
pub fn homog_to_stereo(h: &HomPoint, vertices: &[PlanarPoint; 3], k: Curvature) -> Result<PlanarPoint> {
    let x = h.components();
    if k.is_flat() {
        // trilinear to barycentric weights: x_i times the side length
        let d = |i: usize, j: usize| vertices[i].chart_distance(&vertices[j]);
        flat_directed_distances(&PlanarPoint::ORIGIN, vertices)?;
        let w = [x[0] * d(1, 2), x[1] * d(2, 0), x[2] * d(0, 1)];
        let total = w[0] + w[1] + w[2];
        let scale = w.iter().map(|v| v.abs()).sum::<f64>();
        if total.abs() <= 1e-14 * scale {
            return Err(GeomError::CenterProjection);
        }
        let p = (0..3).fold([0.0, 0.0], |acc, i| {
            [acc[0] + w[i] * vertices[i].x1, acc[1] + w[i] * vertices[i].x2]
        });
        return Ok(PlanarPoint::new(p[0] / total, p[1] / total));
    }
    let xi_v = centered_vertices(vertices, k)?;
    let planes = planes_from_centered(&xi_v, k)?;
    let n = planes.map(|p| p.n);
    let cof = [cross3(&n[1], &n[2]), cross3(&n[2], &n[0]), cross3(&n[0], &n[1])];
    let det = dot3(&n[0], &cof[0]);
    if det.abs() <= 1e-12 {
        return Err(GeomError::ParallelPlanes);
    }
    let m = [0, 1, 2].map(|j| (x[0] * cof[0][j] + x[1] * cof[1][j] + x[2] * cof[2][j]) / det);
    let q = k.value() * ambient_dot(&m, &m, k);
    if q.is_nan() || q <= 0.0 {
        return Err(GeomError::CenterProjection);
    }
    let mut s = 1.0 / q.sqrt();
    let flip = if k.value() > 0.0 {
        let centroid = [0, 1, 2].map(|j| xi_v[0][j] + xi_v[1][j] + xi_v[2][j]);
        dot3(&m, &centroid) < 0.0
    } else {
        m[0] < 0.0
    };
    if flip {
        s = -s;
    }
    let e = EmbeddedPoint::from_centered(m.map(|v| v * s), k)?;
    embedded_to_stereo(&e, k)
}
