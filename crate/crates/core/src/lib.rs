//! Exact computation of Grothendieck groups of repetitive cluster categories.
//!
//! The repetitive cluster category `C(n,p)` is the orbit category of the bounded
//! derived category of a Dynkin quiver of type `A_n` or `D_n` under the glide
//! `(τ⁻¹Σ)^p`. Its Grothendieck group is computed here by three independent routes:
//!
//! * [`coxeter_k0`]: the cokernel of `1 + Φ^p` (p odd) or `1 − Φ^p` (p even), where
//!   `Φ` is the Coxeter matrix in the basis of simple modules.
//! * [`ar`]: a brute-force model of the Auslander–Reiten quiver `ZΔ` modulo the
//!   glide, with one mesh relation per vertex.
//! * [`closed_forms`]: the known closed-form congruence results, evaluated as
//!   explicit groups or presentations.
//!
//! All arithmetic is exact ([`num_bigint::BigInt`]). The crate is `no_std` and only
//! needs `alloc`; IO, file formats and the CLI live in the companion `k0rep-cli` crate.

#![no_std]

extern crate alloc;

pub mod abelian;
pub mod ar;
pub mod closed_forms;
pub mod coxeter_k0;
pub mod dynkin;
pub mod error;
pub mod linalg;

pub use abelian::{FgAbelianGroup, Presentation};
pub use ar::{OrbitQuiver, ZVertex};
pub use closed_forms::{predict, verify, Prediction, PredictionKind, VerificationReport};
pub use coxeter_k0::{k0_repetitive, K0Job};
pub use dynkin::{DynkinSpec, Family, K0Vector};
pub use error::Error;
pub use linalg::{IntMatrix, SnfResult};

pub type Result<T, E = Error> = core::result::Result<T, E>;
