//! Exact combinatorics of the extended affine symmetric group.
//!
//! Elements are pairs `t_gamma * u` with `gamma` in the weight lattice P
//! (integer vectors modulo the all-ones vector) and `u` a permutation of
//! `{1, ..., rank}`. All alcove geometry is exact: membership and crossing
//! tests compare barycenter pairings, which are rationals with fixed
//! denominator `rank`.

pub mod alcove;
pub mod extaffine;
pub mod partition;
pub mod perm;
pub mod root;
pub mod weight;

pub use alcove::{crossing_sign, AlcovePoint};
pub use extaffine::ExtAffine;
pub use partition::Partition;
pub use perm::Perm;
pub use root::Root;
pub use weight::WeightP;
