//! Sequence generators and orthogonality statistics for desk-scale
//! experiments around Möbius/Liouville disjointness.
//!
//! The crate is organized around four families of objects:
//!
//! * [`arith`] — sieved multiplicative functions (Möbius, Liouville, Ω),
//!   Dirichlet characters and the pretentious distance `D(u, v; M)`.
//! * [`symbolic`] — zero-entropy symbolic systems: generalized Morse
//!   sequences (block products), Toeplitz derivatives, constant-length
//!   substitutions, odometer scales and Morse-cocycle combinatorics.
//! * [`averages`] — the orthogonality statistics themselves: Sarnak
//!   averages, MOMO / strong MOMO sums over block partitions,
//!   short-interval double averages, quadrant frequencies, KBSZ
//!   cross-correlations and the adversarial strong-MOMO search.
//! * [`entropy`] — positive-entropy constructions: a deterministic
//!   SplitMix64 stream, the Bernoulli/Liouville mix and correlation
//!   statistics.
//!
//! # Index conventions
//!
//! Arithmetic sequences are 1-based: entry `i` of an [`arith::ArithSeq`]
//! holds `u(i + 1)`, so entry 0 is `u(1)`. Observable sequences carry an
//! explicit `start` index; entry `i` holds the sample `f(T^{start+i} x)`.
//! Every statistic pairs the two streams *positionally*: term `j` of an
//! average multiplies entry `j` of the arithmetic sequence with entry `j`
//! of the observable. Canned experiments that need the literal pairing
//! `a(n)·u(n)` construct their observables with `start = 1`.
//!
//! All golden-value statistics accumulate in a fixed ascending order and
//! are bit-exactly reproducible for fixed inputs, independent of any
//! worker pool that may schedule them.

pub mod arith;
pub mod averages;
pub mod entropy;
pub mod error;
pub mod report;
pub mod symbolic;
mod util;

pub use error::{Error, Result};
pub use num_complex::Complex64;
