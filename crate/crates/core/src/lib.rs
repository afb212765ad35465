//! Preparation and analysis of a three-parameter family of three-qubit pure
//! states built from a vacuum--one-photon superposition fed through a tritter.
//!
//! The crate covers the full pipeline:
//!
//! - [`qstate`]: the state family `c0|000> + c1|100> + c2|010> + c3|001>`
//!   indexed by (|alpha|, phi, T), and its degenerate-case taxonomy;
//! - [`focksim`]: a truncated Fock-space simulator of the optical circuit
//!   (quantum scissors + tritter), used as an independent oracle for the
//!   closed-form preparation map;
//! - [`entanglement`]: Schmidt decompositions, one-vs-pair concurrences,
//!   the concurrence triangle and the concurrence-fill measure;
//! - [`steering`]: Pauli measurement statistics, the six uncertainty-relation
//!   steering functionals and the nine-way steering-configuration classifier;
//! - [`locc`]: monotonicity checks of the concurrence fill under
//!   binary-outcome POVMs on a single qubit.
//!
//! The crate is `no_std` (with `alloc`); all operations are pure and safe to
//! call concurrently.

#![no_std]

extern crate alloc;

pub mod entanglement;
pub mod focksim;
pub mod locc;
pub mod qstate;
pub mod steering;

pub use num_complex::Complex64;
