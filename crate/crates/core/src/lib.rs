//! Exact arithmetic in the rational cohomology ring of the Grassmannian
//! `G(k, C^{k+l})`, written `R^{k,l}`, in its truncated Schur basis.
//!
//! The crate is organised bottom-up:
//!
//! * [`partitions`]: partitions, boxes, conjugation, complements, and the
//!   rectangle decomposition behind the `m = k` Hilbert series identity.
//! * [`qseries`]: integer polynomials in `q`, Gaussian binomials and the
//!   closed-form Hilbert series.
//! * [`tableaux`]: standard Young tableaux counts.
//! * [`schur_ring`]: ring elements, Pieri rules, Littlewood-Richardson
//!   products and the Jacobi-Trudi cross-check.
//! * [`exact_linalg`]: dense matrices over an exact field.
//! * [`filtration`], [`lefschetz`], [`endo`]: the checkers.
//! * [`runner`]: sweeps, the JSONL result cache and the self-test.
//!
//! Linear algebra and ring elements are generic over the coefficient field
//! (see [`scalar::Field`]); everything user-facing is instantiated at
//! [`Rational`].

pub mod endo;
pub mod error;
pub mod exact_linalg;
pub mod filtration;
pub mod lefschetz;
pub mod partitions;
pub mod qseries;
pub mod report;
pub mod runner;
pub mod scalar;
pub mod schur_ring;
pub mod tableaux;

pub use error::{Error, Result};
pub use partitions::{Partition, Rectangle};
pub use qseries::QPoly;
pub use report::{Claim, ConjectureReport, Verdict};
pub use schur_ring::BoxContext;

/// Arbitrary-precision rational, the coefficient field used throughout.
pub type Rational = num_rational::BigRational;

/// Dense exact-rational matrix.
pub type RationalMatrix = exact_linalg::Matrix<Rational>;

/// Element of `R^{k,l}` with rational coefficients.
pub type RingElement = schur_ring::Element<Rational>;

/// Version string stamped into every report.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
