//! Exact arithmetic for verifying asymptotic-Fermat criteria over the layers
//! of cyclotomic Z_p-extensions of Q.
//!
//! Everything here is computed over exact integers and rationals — no floating
//! point anywhere. The crate is organised in layers:
//!
//! - [`arith`], [`poly`], [`modpoly`]: arbitrary-precision integers and
//!   rationals (backed by `num`), integer polynomials with resultants,
//!   discriminants and Sturm root counting, and polynomials over prime fields
//!   with distinct-degree factorization.
//! - [`layers`]: defining polynomials of the layer fields Q_{n,p} via Gaussian
//!   periods, and the inertness congruence q^(p-1) != 1 (mod p^2).
//! - [`nf`]: arithmetic in a monogenic number-field presentation — norms,
//!   splitting patterns, residues at a totally ramified prime, valuations at
//!   an inert 2.
//! - [`sunit`]: bounded enumeration of unit-equation and S-unit-equation
//!   solutions, their classification by q-adic orders, and the criterion
//!   check on the order signature.
//! - [`verdict`]: Wieferich scanning, per-(p, n) verdicts with citations, and
//!   the certifier for general totally real p-extensions.
//!
//! All values are immutable after construction; every operation is a pure
//! function, so values can be shared freely across threads. The only internal
//! parallelism is in the search box partition and the sieve segments, both of
//! which merge deterministically.

pub mod arith;
pub mod error;
pub mod layers;
pub mod modpoly;
pub mod nf;
pub mod poly;
pub mod sunit;
pub mod verdict;

pub use arith::{Integer, Rational};
pub use error::{Error, Result};
pub use layers::LayerSpec;
pub use modpoly::ModPolynomial;
pub use nf::{FieldElement, InertPrimeContext, NumberField, RamifiedPrimeContext, SplittingPattern};
pub use poly::IntPolynomial;
pub use sunit::{SUnitSolution, SearchConfig, SearchOutcome, SolutionClass};
pub use verdict::{CertificateReport, Citation, Verdict, VerdictStatus};
