//! Counting st-paths on directed graphs through the counting Laplacian
//! `L = I - A`, whose inverse entries are exactly the pairwise path counts
//! on acyclic graphs.
//!
//! The crate has four layers:
//!
//! - [`graph`]: directed graphs, an exact big-integer path-counting oracle,
//!   the layered acyclic expansion, unambiguity classification, seeded
//!   generators and a random-walk baseline.
//! - [`linalg`]: dense matrices, a deterministic Jacobi SVD, a symmetric
//!   Jacobi eigensolver, the counting Laplacian and its Hermitian embedding.
//! - [`qsim`]: the spectral subroutines as they would behave inside a
//!   space-bounded quantum machine, simulated at matrix level - exact SVD
//!   values plus a configurable noise model for readout accuracy, failure
//!   probability and the randomized truncation threshold.
//! - [`algorithms`]: the end-to-end pipelines - counting under a
//!   strongly-few or few-endpoints promise, recognition of strongly-few
//!   st-connected inputs, and a midpoint-doubling reachability baseline.
//!
//! Everything is deterministic given the explicit seeds, and every spectral
//! result can be cross-checked against the oracle.
//!
//! ```
//! use fewpaths::graph::gen_chain_figure1;
//! use fewpaths::algorithms::count_paths_strongly_few;
//! use fewpaths::qsim::NoiseModel;
//!
//! let g = gen_chain_figure1(10);
//! let result = count_paths_strongly_few(&g, 0, 19, 1, &NoiseModel::exact()).unwrap();
//! assert_eq!(result.count, 1);
//! ```

pub mod algorithms;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod qsim;

pub use error::{Error, Result};
