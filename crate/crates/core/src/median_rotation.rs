//! Median points and planar centers of rotation of finite point sets.
//!
//! Both are defined through polar coordinates `r_i θ_i` about a candidate
//! origin `T`: the median point solves `Σ sing(r_i) θ_i = 0`, a center of
//! rotation solves `Σ sing(2 r_i) θ_i = 0`. Points are re-expressed about `T`
//! by the surface translation taking `T` to the tangent point, after which
//! `(ρ·cosg r, sing(r)·θ)` can be read off the `O`-centered coordinates.

use crate::embedding::{
    embedded_to_stereo, geodesic_polar_of_centered, stereo_to_embedded, EmbeddedPoint, GeodesicPolar,
    PlanarPoint, Translation,
};
use crate::error::{GeomError, Result};
use crate::gtrig::Curvature;

/// A nonempty ordered set of points of equal mass in the projection plane.
#[derive(Clone, Debug, PartialEq)]
pub struct PointSet {
    points: Vec<PlanarPoint>,
    k: Curvature,
}

impl PointSet {
    pub fn new(points: Vec<PlanarPoint>, k: Curvature) -> Result<Self> {
        if points.is_empty() {
            return Err(GeomError::EmptyPointSet);
        }
        for p in &points {
            if !p.is_finite() {
                return Err(GeomError::NonFinite("point set"));
            }
            if !k.is_flat() {
                stereo_to_embedded(p, k)?;
            }
        }
        Ok(PointSet { points, k })
    }

    pub fn points(&self) -> &[PlanarPoint] {
        &self.points
    }

    pub fn curvature(&self) -> Curvature {
        self.k
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// A two-component residual vector.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Residual2 {
    pub v1: f64,
    pub v2: f64,
}

impl Residual2 {
    pub fn norm(&self) -> f64 {
        self.v1.hypot(self.v2)
    }

    pub fn max_abs(&self) -> f64 {
        self.v1.abs().max(self.v2.abs())
    }
}

fn rho(k: Curvature) -> f64 {
    k.radius().unwrap_or(f64::INFINITY)
}

/// `O`-centered coordinates of each point after moving `t` to the tangent
/// point. At `k = 0` the first entry is unused and the rest is `P - T`.
fn about(t: &PlanarPoint, ps: &PointSet) -> Result<Vec<[f64; 3]>> {
    let k = ps.k;
    if k.is_flat() {
        return Ok(ps.points.iter().map(|p| [0.0, p.x1 - t.x1, p.x2 - t.x2]).collect());
    }
    let back = Translation::to_point(&stereo_to_embedded(t, k)?, k)?.inverse();
    ps.points
        .iter()
        .map(|p| Ok(back.apply(&stereo_to_embedded(p, k)?.centered(k)?)))
        .collect()
}

/// Geodesic polar coordinates of every point about `t`.
pub fn polar_about(t: &PlanarPoint, ps: &PointSet) -> Result<Vec<GeodesicPolar>> {
    let q = about(t, ps)?;
    if ps.k.is_flat() {
        return Ok(q
            .iter()
            .map(|v| {
                let r = v[1].hypot(v[2]);
                let theta = if r == 0.0 { [1.0, 0.0] } else { [v[1] / r, v[2] / r] };
                GeodesicPolar { r, theta }
            })
            .collect());
    }
    q.iter().map(|v| geodesic_polar_of_centered(v, ps.k)).collect()
}

/// `Σ sing(r_i) θ_i` about `t`.
pub fn residual_median(t: &PlanarPoint, ps: &PointSet) -> Result<Residual2> {
    // sing(r)θ is exactly the tangential part of the moved point
    let q = about(t, ps)?;
    Ok(Residual2 { v1: q.iter().map(|v| v[1]).sum(), v2: q.iter().map(|v| v[2]).sum() })
}

/// `Σ sing(2 r_i) θ_i` about `t`, using `sing 2r = 2 sing r cosg r`.
pub fn residual_rotation(t: &PlanarPoint, ps: &PointSet) -> Result<Residual2> {
    let q = about(t, ps)?;
    if ps.k.is_flat() {
        return Ok(Residual2 { v1: 2.0 * q.iter().map(|v| v[1]).sum::<f64>(), v2: 2.0 * q.iter().map(|v| v[2]).sum::<f64>() });
    }
    let r = rho(ps.k);
    let f = |i: usize| q.iter().map(|v| 2.0 * v[i] * v[0] / r).sum();
    Ok(Residual2 { v1: f(1), v2: f(2) })
}

/// Point of the set's median: the Euclidean centroid of the embedded points,
/// projected onto the surface from its center `O`.
pub fn median_point(ps: &PointSet) -> Result<PlanarPoint> {
    let k = ps.k;
    let n = ps.len() as f64;
    if k.is_flat() {
        let (sx, sy) = ps.points.iter().fold((0.0, 0.0), |(x, y), p| (x + p.x1, y + p.x2));
        return Ok(PlanarPoint::new(sx / n, sy / n));
    }
    let mut m = [0.0; 3];
    for p in &ps.points {
        let xi = stereo_to_embedded(p, k)?.centered(k)?;
        for j in 0..3 {
            m[j] += xi[j] / n;
        }
    }
    let q = k.value() * (k.sign() * m[0] * m[0] + m[1] * m[1] + m[2] * m[2]);
    let size = m[0].abs().max(m[1].abs()).max(m[2].abs());
    if q.is_nan() || q <= 0.0 || size <= 1e-12 * rho(k) {
        return Err(GeomError::UndefinedMedian);
    }
    let s = 1.0 / q.sqrt();
    embedded_to_stereo(&EmbeddedPoint::from_centered(m.map(|v| v * s), k)?, k)
}

/// Moves each point to twice its distance from `t` along the same ray.
pub fn doubled_points(t: &PlanarPoint, ps: &PointSet) -> Result<PointSet> {
    let k = ps.k;
    if k.is_flat() {
        let pts = ps.points.iter().map(|p| PlanarPoint::new(2.0 * p.x1 - t.x1, 2.0 * p.x2 - t.x2)).collect();
        return PointSet::new(pts, k);
    }
    let r = rho(k);
    let fwd = Translation::to_point(&stereo_to_embedded(t, k)?, k)?;
    let q = about(t, ps)?;
    let mut out = Vec::with_capacity(q.len());
    for v in &q {
        if k.value() > 0.0 {
            let g = geodesic_polar_of_centered(v, k)?;
            let limit = std::f64::consts::PI * r;
            if 2.0 * g.r > limit {
                return Err(GeomError::Domain { func: "doubled distance", value: 2.0 * g.r });
            }
        }
        let c = v[0] / r;
        let doubled = [r * (2.0 * c * c - 1.0), 2.0 * v[1] * c, 2.0 * v[2] * c];
        let e = EmbeddedPoint::from_centered(fwd.apply(&doubled), k)?;
        out.push(embedded_to_stereo(&e, k)?);
    }
    PointSet::new(out, k)
}

/// Newton solver settings for [`rotation_center`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolverOptions {
    /// Residual tolerance per point.
    pub tolerance: f64,
    pub max_iterations: usize,
    /// Relative finite-difference step for the Jacobian.
    pub fd_step: f64,
    /// Smallest damping factor tried before a step is taken regardless.
    pub min_damping: f64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { tolerance: 1e-12, max_iterations: 100, fd_step: 1e-6, min_damping: 1e-4 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RotationSolution {
    pub point: PlanarPoint,
    pub iterations: usize,
    pub residual: f64,
}

fn residual_vec(t: &PlanarPoint, ps: &PointSet) -> Option<[f64; 2]> {
    let r = residual_rotation(t, ps).ok()?;
    (r.v1.is_finite() && r.v2.is_finite()).then_some([r.v1, r.v2])
}

/// Threshold on `‖Σ sing(2r)θ‖`: `tolerance·n`, scaled up for point sets
/// whose individual terms are larger than 1.
fn threshold(t: &PlanarPoint, ps: &PointSet, tol: f64) -> f64 {
    let n = ps.len() as f64;
    let mean = match (about(t, ps), ps.k.is_flat()) {
        (Ok(q), true) => q.iter().map(|v| 2.0 * v[1].hypot(v[2])).sum::<f64>() / n,
        (Ok(q), false) => q.iter().map(|v| (2.0 * v[1].hypot(v[2]) * v[0] / rho(ps.k)).abs()).sum::<f64>() / n,
        (Err(_), _) => 1.0,
    };
    tol * n * mean.max(1.0)
}

/// Planar center of rotation, by damped Newton iteration from `init`
/// (default: the median point). For `k > 0` there are several centers; the
/// one reached from `init` is returned.
pub fn rotation_center(ps: &PointSet, init: Option<PlanarPoint>, opts: &SolverOptions) -> Result<RotationSolution> {
    if ps.k.is_flat() {
        // Σ 2(P_i - T) = 0 at the centroid
        let point = median_point(ps)?;
        return Ok(RotationSolution { point, iterations: 0, residual: residual_rotation(&point, ps)?.norm() });
    }
    let mut t = match init {
        Some(p) => p,
        None => median_point(ps)?,
    };
    let mut f = residual_vec(&t, ps).ok_or(GeomError::NonFinite("initial residual"))?;
    for it in 0..=opts.max_iterations {
        let fnorm = f[0].hypot(f[1]);
        if fnorm <= threshold(&t, ps, opts.tolerance) {
            return Ok(RotationSolution { point: t, iterations: it, residual: fnorm });
        }
        if it == opts.max_iterations {
            break;
        }
        let h = opts.fd_step * t.norm().max(1.0);
        let mut jac = [[0.0; 2]; 2];
        for j in 0..2 {
            let shift = |s: f64| {
                let mut p = t;
                if j == 0 {
                    p.x1 += s;
                } else {
                    p.x2 += s;
                }
                residual_vec(&p, ps)
            };
            let (fp, fm) = match (shift(h), shift(-h)) {
                (Some(a), Some(b)) => (a, b),
                _ => return Err(GeomError::SingularJacobian { x1: t.x1, x2: t.x2 }),
            };
            for i in 0..2 {
                jac[i][j] = (fp[i] - fm[i]) / (2.0 * h);
            }
        }
        let det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
        let scale = jac.iter().flatten().map(|v| v.abs()).fold(0.0, f64::max);
        if !det.is_finite() || det.abs() <= 1e-14 * scale * scale {
            return Err(GeomError::SingularJacobian { x1: t.x1, x2: t.x2 });
        }
        let step = [(jac[1][1] * f[0] - jac[0][1] * f[1]) / det, (jac[0][0] * f[1] - jac[1][0] * f[0]) / det];
        let mut lambda = 1.0;
        loop {
            let trial = PlanarPoint::new(t.x1 - lambda * step[0], t.x2 - lambda * step[1]);
            match residual_vec(&trial, ps) {
                Some(ft) if ft[0].hypot(ft[1]) < fnorm || lambda <= opts.min_damping => {
                    t = trial;
                    f = ft;
                    break;
                }
                None if lambda <= opts.min_damping => {
                    return Err(GeomError::NonConvergence { iterations: it + 1, residual: fnorm });
                }
                _ => lambda *= 0.5,
            }
        }
    }
    Err(GeomError::NonConvergence { iterations: opts.max_iterations, residual: f[0].hypot(f[1]) })
}
