//! Exact combinatorial free probability.
//!
//! * [`ncpart`]: non-crossing partitions, the Kreweras complement and its
//!   relatives.
//! * [`ncseries`]: truncated non-commutative power series with Gaussian
//!   rational coefficients and the boxed convolution `⋆`.
//! * [`freespace`]: free families given by their cumulants, mixed moments,
//!   R-transforms and freeness checks.
//! * [`rdiagonal`]: R-diagonal and diagonally balanced pairs.
//! * [`epscomp`]: the ε-dependent circle layout and the complement maps
//!   `C_Q`, `C_R`.
//! * [`verify`]: seeded verification suites built on the above.

pub mod epscomp;
pub mod error;
pub mod freespace;
pub mod gaussian;
pub mod ncpart;
pub mod ncseries;
pub mod rdiagonal;
pub mod verify;

pub use error::{Error, Result};
pub use gaussian::GaussianRational;
pub use ncpart::{Partition, Permutation};
pub use ncseries::{NCSeries, Word};
