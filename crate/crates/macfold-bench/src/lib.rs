//! Shared fixtures for the benchmark targets.

use macfold::partition::Partition;
use macfold::perm::Permutation;

/// The running nine-letter example word.
pub fn example_word() -> Permutation {
    "841567392".parse().expect("valid word")
}

/// The running nine-cell example shape.
pub fn example_shape() -> Partition {
    "4,2,2,1".parse().expect("valid shape")
}
