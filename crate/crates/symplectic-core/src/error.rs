use galois_rings::RingError;
use root_data::RootError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SympError {
    #[error("X^t J X is not a unit multiple of J")]
    NotSymplectic,
    #[error("expected a {expected}x{expected} matrix, got {rows}x{cols}")]
    BadShape { expected: usize, rows: usize, cols: usize },
    #[error("p = {p} must exceed 2n = {}", 2 * n)]
    PrimeTooSmall { p: u64, n: usize },
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("matrix is not unipotent")]
    NotUnipotent,
    #[error("matrix does not lie in the filtration piece of height >= {0}")]
    NotInFiltration(i64),
    #[error("element is not in U_1")]
    NotInU1,
    #[error("not a Borel element: {0}")]
    NotBorel(String),
    #[error("group enumeration exceeded the cap of {0} elements")]
    CapExceeded(usize),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Root(#[from] RootError),
}
