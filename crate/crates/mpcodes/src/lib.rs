//! Multipermutation codes for rank-modulation storage.
//!
//! Rank modulation stores information in the relative order of cell
//! charges; letting r cells share each rank turns the stored object
//! into an r-regular multipermutation. Charge fluctuations move single
//! cells across several ranks at once, which reads back as
//! translocations of the cell ordering, so code design happens in the
//! Ulam metric on equivalence classes of permutations.
//!
//! The crate provides:
//!
//! - representations of permutations, rank vectors, and ordered set
//!   partitions ([`perm`]);
//! - exact distance computation in the plain and r-regular Hamming and
//!   Ulam metrics, with a brute-force oracle for cross-checking
//!   ([`metrics`]);
//! - cardinality bounds, ball-size bounds, and capacity formula
//!   evaluation with arbitrary-precision arithmetic ([`bounds`]);
//! - semi-Latin squares and resolvable designs ([`designs`]), and the
//!   code constructions built on them ([`constructions`]);
//! - decoders for each construction ([`decode`]);
//! - a translocation-error channel and a reproducible Monte Carlo
//!   harness ([`channel`]).
//!
//! Heavy inner loops (pairwise distance sweeps, oracle scans, simulation
//! trials) run on rayon when the default `parallel` feature is enabled
//! and fall back to sequential loops without it.

pub mod bounds;
pub mod channel;
pub mod codebook;
pub mod constructions;
pub mod decode;
pub mod designs;
pub mod error;
pub mod exec;
pub mod format;
pub mod metrics;
pub mod perm;

pub use codebook::{Codebook, Metric};
pub use error::{Error, Result};
pub use perm::{Multipermutation, OrderedSetPartition, Permutation, DEFAULT_ENUM_CAP};
