//! JSON payloads read from stdin.

use kgeom::embedding::{triangle_from_vertices, PlanarPoint};
use kgeom::{Curvature, HomPoint, PointSet, Triangle};
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Payload {
    pub vertices: Option<Vec<[f64; 2]>>,
    pub sides: Option<[f64; 3]>,
    pub angles: Option<[f64; 3]>,
    pub points: Option<Vec<[f64; 2]>>,
    pub point: Option<[f64; 2]>,
    pub coords: Option<[f64; 3]>,
}

pub fn parse(text: &str) -> Result<Payload, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Input(format!("malformed input: {e}")))
}

/// Reference triangle, with vertices when they were given.
pub struct Reference {
    pub triangle: Triangle,
    pub vertices: Option<[PlanarPoint; 3]>,
}

impl Reference {
    pub fn vertices(&self, why: &str) -> Result<[PlanarPoint; 3], CliError> {
        self.vertices.ok_or_else(|| CliError::Input(format!("{why} needs the triangle given as \"vertices\"")))
    }
}

impl Payload {
    pub fn reference(&self, k: Curvature) -> Result<Reference, CliError> {
        let given = [self.vertices.is_some(), self.sides.is_some(), self.angles.is_some()];
        if given.iter().filter(|&&g| g).count() != 1 {
            return Err(CliError::Input("give exactly one of \"vertices\", \"sides\" or \"angles\"".into()));
        }
        if let Some(v) = &self.vertices {
            let v: [PlanarPoint; 3] = match v.as_slice() {
                [a, b, c] => [(*a).into(), (*b).into(), (*c).into()],
                _ => return Err(CliError::Input(format!("\"vertices\" needs 3 points, got {}", v.len()))),
            };
            return Ok(Reference { triangle: triangle_from_vertices(&v, k)?, vertices: Some(v) });
        }
        let triangle = match (self.sides, self.angles) {
            (Some([a, b, c]), _) => Triangle::from_sides(a, b, c, k)?,
            (_, Some([a, b, c])) => Triangle::from_angles(a, b, c, k)?,
            _ => unreachable!("checked above"),
        };
        Ok(Reference { triangle, vertices: None })
    }

    pub fn point_set(&self, k: Curvature) -> Result<PointSet, CliError> {
        let pts = self.points.as_ref().ok_or_else(|| CliError::Input("missing \"points\"".into()))?;
        Ok(PointSet::new(pts.iter().map(|&p| p.into()).collect(), k)?)
    }

    pub fn coords(&self) -> Result<Option<HomPoint>, CliError> {
        self.coords.map(HomPoint::from_array).transpose().map_err(CliError::from)
    }
}
