//! Generalized trigonometric functions for a surface of constant Gaussian
//! curvature `k`.
//!
//! `sing`, `cosg` and `tang` interpolate between circular functions
//! (`k > 0`), the identity-like Euclidean limit (`k = 0`) and hyperbolic
//! functions (`k < 0`):
//!
//! ```text
//! sing(x) = sin(x√k)/√k      cosg(x) = cos(x√k)       k > 0
//! sing(x) = x                cosg(x) = 1              k = 0
//! sing(x) = sinh(x√-k)/√-k   cosg(x) = cosh(x√-k)     k < 0
//! ```
//!
//! Near the Euclidean limit (`|k·x²| < SERIES_THRESHOLD`) the functions are
//! evaluated from their Taylor series so that they stay continuous in `k`.

use crate::error::{GeomError, Result};

/// Below this value of `|k·x²|` the series branch is used.
pub const SERIES_THRESHOLD: f64 = 1e-8;

/// Inverse functions accept arguments this far outside their domain and
/// clamp them onto the boundary.
pub const DOMAIN_SLACK: f64 = 1e-12;

/// `|cosg x|` below this is treated as a pole of `tang`.
pub const POLE_EPS: f64 = 1e-14;

/// Gaussian curvature of the ambient surface, in units of 1/length².
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct Curvature(f64);

impl Curvature {
    pub const EUCLIDEAN: Curvature = Curvature(0.0);

    pub fn new(k: f64) -> Result<Self> {
        if !k.is_finite() {
            return Err(GeomError::NonFinite("curvature"));
        }
        Ok(Curvature(k))
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    /// -1, 0 or +1.
    #[inline]
    pub fn sign(self) -> f64 {
        if self.0 > 0.0 {
            1.0
        } else if self.0 < 0.0 {
            -1.0
        } else {
            0.0
        }
    }

    #[inline]
    pub fn is_flat(self) -> bool {
        self.0 == 0.0
    }

    /// `1/√|k|`, the radius of the embedded sphere or hyperboloid.
    pub fn radius(self) -> Option<f64> {
        if self.is_flat() {
            None
        } else {
            Some(1.0 / self.0.abs().sqrt())
        }
    }

    pub fn sing(self, x: f64) -> f64 {
        sing(x, self)
    }

    pub fn cosg(self, x: f64) -> f64 {
        cosg(x, self)
    }

    pub fn tang(self, x: f64) -> Result<f64> {
        tang(x, self)
    }
}

impl TryFrom<f64> for Curvature {
    type Error = GeomError;

    fn try_from(k: f64) -> Result<Self> {
        Curvature::new(k)
    }
}

#[inline]
fn near_flat(x: f64, k: f64) -> bool {
    (k * x * x).abs() < SERIES_THRESHOLD
}

/// Generalized sine.
pub fn sing(x: f64, k: Curvature) -> f64 {
    let k = k.0;
    if near_flat(x, k) {
        // x Σ (-k x²)^i / (2i+1)!, through the K⁴x⁹ guard term
        let z = -k * x * x;
        return x * (1.0 + z / 6.0 * (1.0 + z / 20.0 * (1.0 + z / 42.0 * (1.0 + z / 72.0))));
    }
    if k > 0.0 {
        let q = k.sqrt();
        (x * q).sin() / q
    } else {
        let q = (-k).sqrt();
        (x * q).sinh() / q
    }
}

/// Generalized cosine.
pub fn cosg(x: f64, k: Curvature) -> f64 {
    let k = k.0;
    if near_flat(x, k) {
        let z = -k * x * x;
        return 1.0 + z / 2.0 * (1.0 + z / 12.0 * (1.0 + z / 30.0 * (1.0 + z / 56.0)));
    }
    if k > 0.0 {
        (x * k.sqrt()).cos()
    } else {
        (x * (-k).sqrt()).cosh()
    }
}

/// Generalized tangent, `sing x / cosg x`.
pub fn tang(x: f64, k: Curvature) -> Result<f64> {
    let c = cosg(x, k);
    if c.abs() < POLE_EPS {
        return Err(GeomError::Pole { func: "tang", value: x });
    }
    Ok(sing(x, k) / c)
}

/// Generalized versine, `(1 - cosg x)/k = 2 sing²(x/2)`.
///
/// Finite and cancellation-free at every curvature; equals `x²/2` at `k = 0`.
pub fn versg(x: f64, k: Curvature) -> f64 {
    let s = sing(0.5 * x, k);
    2.0 * s * s
}

/// Principal inverse of `sing`.
///
/// For `k > 0` the result lies in `[-π/(2√k), π/(2√k)]`.
pub fn asing(y: f64, k: Curvature) -> Result<f64> {
    if !y.is_finite() {
        return Err(GeomError::NonFinite("asing argument"));
    }
    let kv = k.0;
    if near_flat(y, kv) {
        // asin(z)/√k and asinh(z)/√-k share one series in k
        let w = kv * y * y;
        return Ok(y * (1.0 + w / 6.0 * (1.0 + w * 9.0 / 20.0 * (1.0 + w * 25.0 / 42.0))));
    }
    if kv > 0.0 {
        let q = kv.sqrt();
        let mut z = y * q;
        if z.abs() > 1.0 {
            if z.abs() > 1.0 + DOMAIN_SLACK {
                return Err(GeomError::Domain { func: "asing", value: y });
            }
            z = z.signum();
        }
        Ok(z.asin() / q)
    } else {
        let q = (-kv).sqrt();
        Ok((y * q).asinh() / q)
    }
}

/// Principal inverse of `cosg`, returning `x >= 0`.
///
/// Domain: `|y| <= 1` for `k > 0`, `y >= 1` for `k < 0`, `y = 1` for `k = 0`.
pub fn acosg(y: f64, k: Curvature) -> Result<f64> {
    if !y.is_finite() {
        return Err(GeomError::NonFinite("acosg argument"));
    }
    let kv = k.0;
    let err = || GeomError::Domain { func: "acosg", value: y };
    let d = 1.0 - y;
    if kv == 0.0 {
        return if d.abs() <= DOMAIN_SLACK { Ok(0.0) } else { Err(err()) };
    }
    if d.abs() < 0.5 * SERIES_THRESHOLD {
        // acos(1-d) = √(2d)(1 + d/12 + 3d²/160) and the acosh
        // expansion agree once written in terms of d/k
        let ratio = d / kv;
        if ratio < 0.0 {
            return if d.abs() <= DOMAIN_SLACK { Ok(0.0) } else { Err(err()) };
        }
        return Ok((2.0 * ratio).sqrt() * (1.0 + d / 12.0 + 3.0 * d * d / 160.0));
    }
    if kv > 0.0 {
        let mut z = y;
        if z.abs() > 1.0 {
            if z.abs() > 1.0 + DOMAIN_SLACK {
                return Err(err());
            }
            z = z.signum();
        }
        Ok(z.acos() / kv.sqrt())
    } else {
        if y < 1.0 {
            return Err(err());
        }
        Ok(y.acosh() / (-kv).sqrt())
    }
}

/// Inverse of [`versg`]: the non-negative `x` with `versg(x) = v`.
pub fn aversg(v: f64, k: Curvature) -> Result<f64> {
    if !v.is_finite() {
        return Err(GeomError::NonFinite("aversg argument"));
    }
    let mut v = v;
    if v < 0.0 {
        if v < -DOMAIN_SLACK {
            return Err(GeomError::Domain { func: "aversg", value: v });
        }
        v = 0.0;
    }
    asing((0.5 * v).sqrt(), k)
        .map(|h| 2.0 * h)
        .map_err(|_| GeomError::Domain { func: "aversg", value: v })
}
