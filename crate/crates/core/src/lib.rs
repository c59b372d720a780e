//! Exact combinatorics for Skolem sets and diagonal X-rays.
//!
//! * [`xray`]: permutations, diagonal/antidiagonal X-rays, characteristics.
//! * [`skolem`]: difference multisets, pairings, the exact partition solver.
//! * [`bijection`]: maps between pairings, permutations and involutions.
//! * [`lab`]: exhaustive checks of the open conjectures at small orders.
//! * [`ds`]: doubly stochastic matrices, exact LP feasibility, Birkhoff
//!   decomposition.
//! * [`parse`]: text input formats shared by the command line and fuzzers.
//!
//! ```
//! use skolem_xray::bijection::extremal_pairing_to_permutation;
//! use skolem_xray::skolem::solve_partition;
//! use skolem_xray::xray::{characteristic_of_xray, diagonal_xray};
//! use skolem_xray::{DifferenceMultiset, SearchBudget};
//!
//! let a = DifferenceMultiset::new(vec![1, 4, 5, 6])?;
//! let pairing = solve_partition(&a, SearchBudget::UNLIMITED).into_witness().unwrap();
//! let pi = extremal_pairing_to_permutation(&pairing)?;
//! assert_eq!(pi.images(), &[3, 2, 4, 1]);
//! let d = diagonal_xray(&pi);
//! assert_eq!(d.counts().unwrap(), vec![1, 0, 0, 1, 1, 1, 0]);
//! assert_eq!(characteristic_of_xray(&d)?.indices(), &[1, 4, 5, 6]);
//! # Ok::<(), skolem_xray::Error>(())
//! ```

pub mod bijection;
pub mod ds;
pub mod error;
pub mod lab;
pub mod parse;
pub mod rational;
pub mod search;
pub mod skolem;
pub mod xray;

pub use error::{Error, Result};
pub use rational::Rational;
pub use search::{Outcome, SearchBudget, SearchResult, SearchStatus};
pub use skolem::{DifferenceMultiset, Pairing, SkolemSequence};
pub use xray::{Characteristic, Permutation, XRay};
