//! Catalog of triangle centers in homogeneous coordinates.
//!
//! Every entry is a closed formula in the sides, angles and curvature of the
//! reference triangle. The same triple names the same center at every
//! curvature; at `k = 0` the triples are the classical trilinears.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::{GeomError, Result};
use crate::gtrig::{cosg, sing, tang};
use crate::projective::{join, HomLine, HomPoint};
use crate::triangle::{Edge, Triangle, Vertex};

/// Below this value of `|k|·s²` the triangle median point uses its flat limit.
pub const FLAT_LIMIT: f64 = 1e-8;

/// Tolerance on `|a - b|` for the isosceles rotation center.
pub const ISOSCELES_TOL: f64 = 1e-9;

/// `|cos A|` below this is a right angle.
const RIGHT_ANGLE_EPS: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CenterId {
    Incenter,
    VertexMedian,
    Circumcenter,
    Orthocenter,
    EulerCenter,
    Symmedian,
    Gergonne,
    Nagel,
    Mittenpunkt,
    EdgeMedian,
    Feuerbach,
    MedialIncenter,
    TriangleMedian,
    PolarMedian,
    CosCenter,
    IsoscelesRotation,
}

impl CenterId {
    pub const ALL: [CenterId; 16] = [
        CenterId::Incenter,
        CenterId::VertexMedian,
        CenterId::Circumcenter,
        CenterId::Orthocenter,
        CenterId::EulerCenter,
        CenterId::Symmedian,
        CenterId::Gergonne,
        CenterId::Nagel,
        CenterId::Mittenpunkt,
        CenterId::EdgeMedian,
        CenterId::Feuerbach,
        CenterId::MedialIncenter,
        CenterId::TriangleMedian,
        CenterId::PolarMedian,
        CenterId::CosCenter,
        CenterId::IsoscelesRotation,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CenterId::Incenter => "incenter",
            CenterId::VertexMedian => "vertex_median",
            CenterId::Circumcenter => "circumcenter",
            CenterId::Orthocenter => "orthocenter",
            CenterId::EulerCenter => "euler_center",
            CenterId::Symmedian => "symmedian",
            CenterId::Gergonne => "gergonne",
            CenterId::Nagel => "nagel",
            CenterId::Mittenpunkt => "mittenpunkt",
            CenterId::EdgeMedian => "edge_median",
            CenterId::Feuerbach => "feuerbach",
            CenterId::MedialIncenter => "medial_incenter",
            CenterId::TriangleMedian => "triangle_median",
            CenterId::PolarMedian => "polar_median",
            CenterId::CosCenter => "cos_center",
            CenterId::IsoscelesRotation => "isosceles_rotation",
        }
    }

    /// Position 1 to 14 in the catalog, `None` for the two extra centers.
    pub fn catalog_number(self) -> Option<u8> {
        let i = self as u8;
        (i < 14).then_some(i + 1)
    }
}

impl fmt::Display for CenterId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownCenter(pub String);

impl fmt::Display for UnknownCenter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown center id '{}'", self.0)
    }
}

impl std::error::Error for UnknownCenter {}

impl FromStr for CenterId {
    type Err = UnknownCenter;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        CenterId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| UnknownCenter(s.to_string()))
    }
}

fn cyclic(f: impl Fn(usize, usize, usize) -> f64) -> [f64; 3] {
    [f(0, 1, 2), f(1, 2, 0), f(2, 0, 1)]
}

fn triple(c: [f64; 3]) -> Result<HomPoint> {
    let scale = c.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if scale == 0.0 {
        return Err(GeomError::ZeroTriple);
    }
    Ok(HomPoint::from_array(c)?.normalize())
}

/// Unnormalized catalog formula.
fn raw_coords(t: &Triangle, id: CenterId) -> Result<[f64; 3]> {
    let k = t.curvature();
    let sides = t.sides();
    let ang = t.angles();
    let sin = t.sin_angles();
    let cos = t.cos_angles();
    let s = t.semiperimeter();
    let big_s = t.half_angle_sum();
    Ok(match id {
        CenterId::Incenter => [1.0, 1.0, 1.0],
        CenterId::VertexMedian => sin.map(|x| 1.0 / x),
        CenterId::Circumcenter => ang.map(|x| (big_s - x).sin()),
        // (sec A : sec B : sec C) with the denominators cleared, so that a
        // right angle at C gives the vertex (0:0:1)
        CenterId::Orthocenter => {
            let c = cos.map(|x| if x.abs() < RIGHT_ANGLE_EPS { 0.0 } else { x });
            cyclic(|_, j, l| c[j] * c[l])
        }
        CenterId::EulerCenter => cyclic(|_, j, l| (ang[j] - ang[l]).cos()),
        CenterId::Symmedian => sin,
        CenterId::Gergonne => cyclic(|i, _, _| 1.0 / (sin[i] * sing(s - sides[i], k))),
        CenterId::Nagel => cyclic(|i, _, _| sing(s - sides[i], k) / sin[i]),
        CenterId::Mittenpunkt => cyclic(|i, j, l| -sin[i] + sin[j] + sin[l]),
        CenterId::EdgeMedian => {
            let tg = [tang(sides[0], k)?, tang(sides[1], k)?, tang(sides[2], k)?];
            cyclic(|i, j, l| (tg[j] + tg[l]) / sin[i])
        }
        CenterId::Feuerbach => cyclic(|_, j, l| 1.0 - (ang[j] - ang[l]).cos()),
        CenterId::MedialIncenter => {
            let m = t.medial_edges()?.as_array();
            let half = sides.map(|x| 0.5 * x);
            cyclic(|i, j, l| {
                (cosg(half[j], k) * sing(m[l], k) + cosg(half[l], k) * sing(m[j], k)) / sing(half[i], k)
            })
        }
        CenterId::TriangleMedian => {
            if t.flatness() < FLAT_LIMIT {
                sin.map(|x| 1.0 / x)
            } else {
                cyclic(|i, j, l| sides[i] - sides[j] * cos[l] - sides[l] * cos[j])
            }
        }
        CenterId::PolarMedian => cyclic(|i, _, _| (PI - ang[i]) / sin[i]),
        CenterId::CosCenter => cos,
        CenterId::IsoscelesRotation => return isosceles_raw(t),
    })
}

/// Normalized homogeneous coordinates of a catalog center.
pub fn center_coords(t: &Triangle, id: CenterId) -> Result<HomPoint> {
    triple(raw_coords(t, id)?)
}

/// `M_a = (0 : sin C : sin B)` and its cyclic analogues.
pub fn midpoint_of_edge(t: &Triangle, edge: Edge) -> HomPoint {
    let [sa, sb, sc] = t.sin_angles();
    let c = match edge {
        Edge::A => [0.0, sc, sb],
        Edge::B => [sc, 0.0, sa],
        Edge::C => [sb, sa, 0.0],
    };
    HomPoint::from_array(c).expect("angles of a valid triangle have nonzero sines")
}

/// The median through a vertex, e.g. `AM_a = [0 : -sin B : sin C]`.
pub fn median_line(t: &Triangle, vertex: Vertex) -> HomLine {
    let mut v = [0.0; 3];
    v[vertex.index()] = 1.0;
    let apex = HomPoint::from_array(v).expect("unit vector");
    join(&apex, &midpoint_of_edge(t, vertex.opposite())).expect("a vertex is never the opposite midpoint")
}

/// Converts to coordinates that are barycentric at `k = 0`:
/// `(x0 sing a : x1 sing b : x2 sing c)`.
pub fn to_barycentric(p: &HomPoint, t: &Triangle) -> Result<HomPoint> {
    let k = t.curvature();
    let [x0, x1, x2] = p.components();
    let [a, b, c] = t.sides();
    HomPoint::new(x0 * sing(a, k), x1 * sing(b, k), x2 * sing(c, k))
}

/// Interior center of rotation of the vertices of an isosceles triangle with
/// apex `C` (`a = b`).
///
/// With `u = cosg b`, `w = cosg c` and `D = √(8u² + w²)`, the center is
/// `(csc A·g : csc B·g : csc C·h)` where `g = u(D - w - 2)` and
/// `h = 4u² - (1 + w)(D - w)`. Both `g` and `h` carry the common factor
/// `(D - w - 2)/(D + w + 2)`, which vanishes at `k = 0`; dividing it out
/// leaves `g : h = 2u : D - w`, which is what is evaluated here.
pub fn isosceles_rotation_center(t: &Triangle) -> Result<HomPoint> {
    triple(isosceles_raw(t)?)
}

fn isosceles_raw(t: &Triangle) -> Result<[f64; 3]> {
    let k = t.curvature();
    let [a, b, c] = t.sides();
    if (a - b).abs() > ISOSCELES_TOL * a.max(1.0) {
        return Err(GeomError::NotIsosceles { a, b });
    }
    let u = cosg(b, k);
    let w = cosg(c, k);
    let d = (8.0 * u * u + w * w).sqrt();
    // D - w = 8u²/(D + w) avoids cancellation when w > 0
    let d_minus_w = if w > 0.0 { 8.0 * u * u / (d + w) } else { d - w };
    let [sa, sb, sc] = t.sin_angles();
    Ok([2.0 * u / sa, 2.0 * u / sb, d_minus_w / sc])
}
