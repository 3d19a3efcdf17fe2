//! The reference triangle and the generalized laws of cosines and sines.
//!
//! Angles from sides use the versine form of the law of cosines,
//!
//! ```text
//! cos C = (V(a) + V(b) - V(c) - k V(a) V(b)) / (sing a sing b),  V = versg
//! ```
//!
//! which is algebraically `(cosg c - cosg a cosg b)/(k sing a sing b)` but has
//! no `0/0` at `k = 0`, where it is the classical `(a² + b² - c²)/(2ab)`.

use std::f64::consts::PI;

use crate::error::{GeomError, Result};
use crate::gtrig::{aversg, cosg, sing, versg, Curvature, DOMAIN_SLACK};

/// Vertex labels of the reference triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Vertex {
    A,
    B,
    C,
}

/// Edge labels; edge `a` is opposite vertex `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Edge {
    A,
    B,
    C,
}

impl Vertex {
    pub const ALL: [Vertex; 3] = [Vertex::A, Vertex::B, Vertex::C];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn opposite(self) -> Edge {
        match self {
            Vertex::A => Edge::A,
            Vertex::B => Edge::B,
            Vertex::C => Edge::C,
        }
    }
}

impl Edge {
    pub const ALL: [Edge; 3] = [Edge::A, Edge::B, Edge::C];

    pub fn index(self) -> usize {
        self as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Triangle {
    sides: [f64; 3],
    angles: [f64; 3],
    k: Curvature,
}

/// Side lengths of the triangle formed by the three edge midpoints.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MedialEdges {
    pub a_m: f64,
    pub b_m: f64,
    pub c_m: f64,
}

impl MedialEdges {
    pub fn as_array(&self) -> [f64; 3] {
        [self.a_m, self.b_m, self.c_m]
    }
}

/// Cosine of the angle between sides `x` and `y`, opposite side `z`.
fn cos_angle(x: f64, y: f64, z: f64, k: Curvature) -> f64 {
    let (vx, vy, vz) = (versg(x, k), versg(y, k), versg(z, k));
    (vx + vy - vz - k.value() * vx * vy) / (sing(x, k) * sing(y, k))
}

fn clamp_unit(c: f64, what: &str) -> Result<f64> {
    if !c.is_finite() || c.abs() > 1.0 + DOMAIN_SLACK {
        return Err(GeomError::Inexistent(format!("cos {what} = {c}")));
    }
    Ok(c.clamp(-1.0, 1.0))
}

impl Triangle {
    /// Solves the generalized law of cosines for all three angles.
    pub fn from_sides(a: f64, b: f64, c: f64, k: Curvature) -> Result<Self> {
        let sides = [a, b, c];
        if sides.iter().any(|s| !s.is_finite()) {
            return Err(GeomError::NonFinite("side length"));
        }
        if sides.iter().any(|&s| s <= 0.0) {
            return Err(GeomError::Inexistent("side lengths must be positive".into()));
        }
        if k.value() > 0.0 {
            let limit = PI / k.value().sqrt();
            if let Some(&side) = sides.iter().find(|&&s| s >= limit) {
                return Err(GeomError::OversizedSide { side, limit });
            }
        }
        let cos_a = clamp_unit(cos_angle(b, c, a, k), "A")?;
        let cos_b = clamp_unit(cos_angle(c, a, b, k), "B")?;
        let cos_c = clamp_unit(cos_angle(a, b, c, k), "C")?;
        let angles = [cos_a.acos(), cos_b.acos(), cos_c.acos()];
        if angles.iter().any(|&x| x == 0.0 || x == PI) {
            return Err(GeomError::Inexistent("triangle is degenerate".into()));
        }
        Ok(Triangle { sides, angles, k })
    }

    /// Solves the dual law of cosines for the sides; needs `k != 0`.
    ///
    /// Uses `versg a = -2 cos S cos(S - A) / (k sin B sin C)`, the versine
    /// form of `cosg a = (cos A + cos B cos C)/(sin B sin C)`.
    pub fn from_angles(alpha: f64, beta: f64, gamma: f64, k: Curvature) -> Result<Self> {
        let angles = [alpha, beta, gamma];
        if angles.iter().any(|x| !x.is_finite()) {
            return Err(GeomError::NonFinite("angle"));
        }
        if k.is_flat() {
            return Err(GeomError::ScaleIndeterminate);
        }
        if angles.iter().any(|&x| x <= 0.0 || x >= PI) {
            return Err(GeomError::Inexistent("angles must lie in (0, pi)".into()));
        }
        let sum = alpha + beta + gamma;
        let excess = sum - PI;
        if (k.value() > 0.0 && excess <= 0.0) || (k.value() < 0.0 && excess >= 0.0) {
            return Err(GeomError::AngleSumInconsistent { sum, k: k.value() });
        }
        let half = 0.5 * sum;
        let side = |x: f64, y: f64, z: f64| -> Result<f64> {
            let v = -2.0 * half.cos() * (half - x).cos() / (k.value() * y.sin() * z.sin());
            aversg(v, k).map_err(|_| GeomError::Inexistent(format!("versg of side = {v}")))
        };
        let sides = [side(alpha, beta, gamma)?, side(beta, gamma, alpha)?, side(gamma, alpha, beta)?];
        if sides.iter().any(|&s| s <= 0.0) {
            return Err(GeomError::Inexistent("triangle is degenerate".into()));
        }
        Ok(Triangle { sides, angles, k })
    }

    pub fn curvature(&self) -> Curvature {
        self.k
    }

    pub fn sides(&self) -> [f64; 3] {
        self.sides
    }

    pub fn angles(&self) -> [f64; 3] {
        self.angles
    }

    pub fn a(&self) -> f64 {
        self.sides[0]
    }

    pub fn b(&self) -> f64 {
        self.sides[1]
    }

    pub fn c(&self) -> f64 {
        self.sides[2]
    }

    pub fn side(&self, e: Edge) -> f64 {
        self.sides[e.index()]
    }

    pub fn angle(&self, v: Vertex) -> f64 {
        self.angles[v.index()]
    }

    pub fn sin_angles(&self) -> [f64; 3] {
        self.angles.map(f64::sin)
    }

    pub fn cos_angles(&self) -> [f64; 3] {
        self.angles.map(f64::cos)
    }

    /// `S = (A + B + C)/2`.
    pub fn half_angle_sum(&self) -> f64 {
        0.5 * (self.angles[0] + self.angles[1] + self.angles[2])
    }

    /// `s = (a + b + c)/2`.
    pub fn semiperimeter(&self) -> f64 {
        0.5 * (self.sides[0] + self.sides[1] + self.sides[2])
    }

    /// `|k|·s²`, the dimensionless size used to detect the flat limit.
    pub fn flatness(&self) -> f64 {
        let s = self.semiperimeter();
        self.k.value().abs() * s * s
    }

    /// `sing a / sin A`.
    pub fn law_of_sines_ratio(&self) -> f64 {
        sing(self.sides[0], self.k) / self.angles[0].sin()
    }

    /// The three law-of-sines ratios, one per vertex.
    pub fn law_of_sines_ratios(&self) -> [f64; 3] {
        [0, 1, 2].map(|i| sing(self.sides[i], self.k) / self.angles[i].sin())
    }

    /// `cosg z - cosg x cosg y - k sing x sing y cos Z` for each vertex.
    pub fn law_of_cosines_residuals(&self) -> [f64; 3] {
        let k = self.k;
        [0, 1, 2].map(|i| {
            let (x, y, z) = (self.sides[(i + 1) % 3], self.sides[(i + 2) % 3], self.sides[i]);
            cosg(z, k) - cosg(x, k) * cosg(y, k) - k.value() * sing(x, k) * sing(y, k) * self.angles[i].cos()
        })
    }

    /// Sides of the medial triangle, from the law of cosines applied to
    /// half-sides and the parent's angles.
    pub fn medial_edges(&self) -> Result<MedialEdges> {
        let k = self.k;
        let m = |i: usize| -> Result<f64> {
            let (x, y) = (0.5 * self.sides[(i + 1) % 3], 0.5 * self.sides[(i + 2) % 3]);
            let (vx, vy) = (versg(x, k), versg(y, k));
            let v = vx + vy - k.value() * vx * vy - sing(x, k) * sing(y, k) * self.angles[i].cos();
            aversg(v, k)
        };
        Ok(MedialEdges { a_m: m(0)?, b_m: m(1)?, c_m: m(2)? })
    }
}
