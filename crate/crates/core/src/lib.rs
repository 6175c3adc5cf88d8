//! Graded region connection calculus relations between vague regions.
//!
//! A [`FuzzyRegion`] is a crisp core with a linear halo. Two regions are
//! connected to the degree that some point of one is near some point of
//! the other, with "near" controlled by an `(alpha, beta)` tolerance; the
//! remaining RCC-8 relations are built from connection, parthood and
//! overlap under a chosen t-norm. A fuzzy skyline operator ranks regions
//! by how well they escape domination with respect to target regions.

pub mod cli;
pub mod connection;
pub mod dataset;
pub mod error;
pub mod fuzzy;
pub mod geometry;
pub mod rcc;
pub mod skyline;

pub use connection::{connect_grid, connect_oracle, nearness, ConnectionConfig, NearnessParams};
pub use dataset::{Dataset, RegionRecord};
pub use error::{Error, Result};
pub use fuzzy::{membership, residuum, tnorm, FuzzyRegion, Grade, TNormKind};
pub use geometry::{BoundingBox, Geometry, Point, Polygon, Ring};
pub use rcc::{overlap, part_of, relation_vector, Relation, RelationVector};
pub use skyline::{
    crisp_skyline, fuzzy_dominance, fuzzy_skyline, CandidateTuple, SkylineMode, SkylineQuery,
    SkylineResult,
};
