//! Query structures for the rectangular solver and the corridor search.

mod gap_tree;
mod neighbor;
mod wavelet;

pub use gap_tree::GapTree;
pub use neighbor::{Band, Neighbor, NeighborStructure};
