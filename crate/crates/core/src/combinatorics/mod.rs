//! Integer partitions, set partitions, permutations, tableaux and Kostka numbers.

mod kostka;
mod partition;
mod permutation;
mod set_partition;
mod tableau;

pub use kostka::kostka;
pub use partition::{binomial, factorial, IntPartition};
pub use permutation::Permutation;
pub use set_partition::{count_type, enumerate_type, subsets, SetPartition};
pub use tableau::{syt_count, StandardTableau};

pub(crate) use partition::check_same_size;
pub(crate) use permutation::parity_sign;
pub(crate) use set_partition::for_each_combination;
