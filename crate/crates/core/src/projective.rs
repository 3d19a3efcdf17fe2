//! Homogeneous coordinates of points `(x0:x1:x2)` and lines `[Y0:Y1:Y2]`
//! relative to a reference triangle.
//!
//! A triple is a ratio: any nonzero multiple denotes the same point or line.
//! Points and lines are distinct types so that a join always yields a line
//! and a meet always yields a point.

use std::fmt;
use std::marker::PhantomData;

use crate::error::{GeomError, Result};

/// Componentwise tolerance for proportionality after normalization.
pub const PROPORTIONAL_TOL: f64 = 1e-9;

/// Whether a triple denotes a point or a line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Point,
    Line,
}

pub trait Role: Copy + fmt::Debug + PartialEq {
    const KIND: Kind;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointRole {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LineRole {}

impl Role for PointRole {
    const KIND: Kind = Kind::Point;
}

impl Role for LineRole {
    const KIND: Kind = Kind::Line;
}

/// A nonzero ratio of three reals.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HomogeneousTriple<R: Role> {
    c: [f64; 3],
    _role: PhantomData<R>,
}

pub type HomPoint = HomogeneousTriple<PointRole>;
pub type HomLine = HomogeneousTriple<LineRole>;

impl<R: Role> HomogeneousTriple<R> {
    pub fn new(c0: f64, c1: f64, c2: f64) -> Result<Self> {
        Self::from_array([c0, c1, c2])
    }

    pub fn from_array(c: [f64; 3]) -> Result<Self> {
        if c.iter().any(|v| !v.is_finite()) {
            return Err(GeomError::NonFinite("homogeneous component"));
        }
        if c.iter().all(|&v| v == 0.0) {
            return Err(GeomError::ZeroTriple);
        }
        Ok(HomogeneousTriple { c, _role: PhantomData })
    }

    #[inline]
    pub fn components(&self) -> [f64; 3] {
        self.c
    }

    pub fn kind(&self) -> Kind {
        R::KIND
    }

    /// Scales so that the component of largest magnitude becomes `+1`
    /// (the first such component on ties).
    pub fn normalize(&self) -> Self {
        let mut pivot = self.c[0];
        for &v in &self.c[1..] {
            if v.abs() > pivot.abs() {
                pivot = v;
            }
        }
        HomogeneousTriple { c: self.c.map(|v| v / pivot), _role: PhantomData }
    }

    /// Scales to unit Euclidean length, keeping the overall sign.
    pub fn unit(&self) -> [f64; 3] {
        let n = norm(self.c);
        self.c.map(|v| v / n)
    }

    pub fn scaled(&self, lambda: f64) -> Self {
        HomogeneousTriple { c: self.c.map(|v| v * lambda), _role: PhantomData }
    }

    /// True when the two triples denote the same ratio, up to a
    /// componentwise tolerance on their unit-length forms.
    pub fn proportional(&self, other: &Self, tol: f64) -> bool {
        let u = self.unit();
        let v = other.unit();
        let same = (0..3).all(|i| (u[i] - v[i]).abs() <= tol);
        let opposite = (0..3).all(|i| (u[i] + v[i]).abs() <= tol);
        same || opposite
    }
}

impl<R: Role> fmt::Display for HomogeneousTriple<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.c;
        match R::KIND {
            Kind::Point => write!(f, "({a}:{b}:{c})"),
            Kind::Line => write!(f, "[{a}:{b}:{c}]"),
        }
    }
}

fn norm(c: [f64; 3]) -> f64 {
    (c[0] * c[0] + c[1] * c[1] + c[2] * c[2]).sqrt()
}

fn cross(p: [f64; 3], q: [f64; 3]) -> [f64; 3] {
    [p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]]
}

/// `{xY} = x0 Y0 + x1 Y1 + x2 Y2`; zero exactly when the point is on the line.
pub fn incidence(p: &HomPoint, line: &HomLine) -> f64 {
    let (x, y) = (p.c, line.c);
    x[0] * y[0] + x[1] * y[1] + x[2] * y[2]
}

/// Incidence test on unit-length representatives.
pub fn is_incident(p: &HomPoint, line: &HomLine, tol: f64) -> bool {
    let (x, y) = (p.unit(), line.unit());
    (x[0] * y[0] + x[1] * y[1] + x[2] * y[2]).abs() <= tol
}

/// The line through two points.
pub fn join(p: &HomPoint, q: &HomPoint) -> Result<HomLine> {
    if p.proportional(q, PROPORTIONAL_TOL) {
        return Err(GeomError::CoincidentPoints);
    }
    HomLine::from_array(cross(p.c, q.c))
}

/// The intersection point of two lines.
pub fn meet(x: &HomLine, y: &HomLine) -> Result<HomPoint> {
    if x.proportional(y, PROPORTIONAL_TOL) {
        return Err(GeomError::CoincidentLines);
    }
    HomPoint::from_array(cross(x.c, y.c))
}

/// Determinant of the three stacked point triples.
pub fn determinant(p: &HomPoint, q: &HomPoint, r: &HomPoint) -> f64 {
    let c = cross(q.c, r.c);
    p.c[0] * c[0] + p.c[1] * c[1] + p.c[2] * c[2]
}

/// Collinearity with the default tolerance.
pub fn collinear(p: &HomPoint, q: &HomPoint, r: &HomPoint) -> bool {
    collinear_tol(p, q, r, PROPORTIONAL_TOL)
}

/// Collinearity: the determinant of the unit-length triples is within `tol`.
pub fn collinear_tol(p: &HomPoint, q: &HomPoint, r: &HomPoint, tol: f64) -> bool {
    let (p, q, r) = (p.unit(), q.unit(), r.unit());
    let c = cross(q, r);
    (p[0] * c[0] + p[1] * c[1] + p[2] * c[2]).abs() <= tol
}
