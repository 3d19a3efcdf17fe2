//! Triangle centers, coordinate conversions and median points on surfaces of
//! constant Gaussian curvature.
//!
//! One curvature parameter `k` selects the geometry: spherical (`k > 0`),
//! Euclidean (`k = 0`) or hyperbolic (`k < 0`). Every routine works for all
//! three.
//!
//! - [`gtrig`]: `sing`, `cosg`, `tang` and their inverses.
//! - [`projective`]: homogeneous point and line triples, join, meet, incidence.
//! - [`triangle`]: the reference triangle and the generalized metric laws.
//! - [`centers`]: the catalog of triangle centers.
//! - [`embedding`]: stereographic plane, embedded surface, homogeneous coordinates.
//! - [`median_rotation`]: median points and planar centers of rotation of point sets.

pub mod centers;
pub mod embedding;
pub mod error;
pub mod gtrig;
pub mod median_rotation;
pub mod projective;
pub mod triangle;

pub use centers::{center_coords, CenterId};
pub use embedding::{EmbeddedPoint, OrientedPlane, PlanarPoint, PolarPoint};
pub use error::{GeomError, Result};
pub use gtrig::Curvature;
pub use median_rotation::{PointSet, Residual2};
pub use projective::{HomLine, HomPoint, HomogeneousTriple};
pub use triangle::{Edge, MedialEdges, Triangle, Vertex};
