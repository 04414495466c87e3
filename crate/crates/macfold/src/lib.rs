//! Combinatorics of transformed Macdonald polynomials on permutations.
//!
//! The crate builds the polynomial H~_mu(X;q,t) from Haglund's inv and maj
//! statistics on fillings of a partition shape, partitions the symmetric
//! group into dual equivalence classes under three involution families, and
//! computes the Kostka-Macdonald coefficients K~_{lambda,mu}(q,t) by two
//! independent routes: brute-force decomposition of the full expansion, and a
//! folding formula over super-standard permutations for shapes whose second
//! part is at most 2. Everything is exact integer arithmetic; the `verify`
//! module cross-checks the routes and the structural properties behind them.

pub mod dual_equiv;
pub mod error;
pub mod expansion;
pub mod filling;
pub mod fold;
pub mod macdonald;
pub mod partition;
pub mod perm;
pub mod poly;
pub mod schur;
pub mod stats;
pub mod verify;

pub use error::{Error, Result};
pub use expansion::{DescentSubset, FundExpansion, SchurExpansion};
pub use filling::{ShapeGeometry, ShapedFilling};
pub use partition::{CellCoord, Partition};
pub use perm::{Permutation, Word};
pub use poly::QtPolynomial;
