//! Maximum-width empty axis-parallel square and rectangular annuli.
//!
//! Given a planar point set, [`max_esa`] finds a widest square annulus and
//! [`max_era`] a widest rectangular annulus whose interior holds no point
//! while both the inner region and the outside keep at least one point.
//!
//! ```
//! use annulus_core::{max_era, max_esa, PointSet};
//!
//! let ps = PointSet::from_coords(&[(0.0, 0.0), (10.0, 0.0), (0.0, 10.0), (10.0, 10.0), (5.0, 5.0)]).unwrap();
//! assert_eq!(max_era(&ps).unwrap().width, 5.0);
//! assert_eq!(max_esa(&ps).unwrap().width, 5.0);
//! ```
//!
//! The [`oracle`] module holds brute-force references for every solver and
//! query structure; [`gen`] produces seeded point sets.

pub mod corridor;
pub mod envelope;
pub mod error;
pub mod gen;
pub mod geometry;
pub mod oracle;
pub mod range;
pub mod rect;
pub mod square;

pub use corridor::widest_l_corridor;
pub use error::Error;
pub use geometry::{
    annulus_width, is_empty, is_valid, partition, AnnulusSolution, Direction, ExtReal, OrthoRect, Point,
    PointSet, RectAnnulus, Shape, SquareAnnulus,
};
pub use rect::{max_era, max_era_with, DecisionMode};
pub use square::max_esa;
