//! Library side of the `annulus` command: input parsing, output encoding,
//! SVG rendering, the benchmark table and the oracle self-check.

pub mod bench;
pub mod io;
pub mod svg;
pub mod verify;

use annulus_core::{max_era, max_esa, AnnulusSolution, Error, PointSet};

/// Which annulus family to solve for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Problem {
    Square,
    Rect,
}

impl Problem {
    pub fn name(self) -> &'static str {
        match self {
            Problem::Square => "square",
            Problem::Rect => "rect",
        }
    }
}

pub fn solve(ps: &PointSet, problem: Problem) -> Result<AnnulusSolution, Error> {
    match problem {
        Problem::Square => max_esa(ps),
        Problem::Rect => max_era(ps),
    }
}
