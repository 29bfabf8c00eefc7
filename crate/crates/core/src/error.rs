use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("point at index {index} carries id {id}; ids must follow input order")]
    BadId { index: usize, id: usize },
    #[error("point {id} has a non-finite coordinate")]
    NonFinite { id: usize },
    #[error("no valid annulus: need at least two distinct points")]
    NoValidAnnulus,
    #[error("oracle refused {n} points (cap is {cap})")]
    OracleCapExceeded { n: usize, cap: usize },
}
