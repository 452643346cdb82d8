//! disclab — a numerical laboratory for Hardy and Bergman spaces on the
//! unit disc.
//!
//! The crate computes with analytic polynomials and smooth boundary data:
//!
//! * [`poly`], [`boundary`], [`grid`], [`norms`], [`lift`] — representations
//!   of functions on the disc and circle, quadrature, integral means,
//!   Hardy/Bergman norms, and the nonlinear lift |F|^{p-2}F;
//! * [`projections`] — Bergman and Szegő projections, with independent
//!   closed-form and quadrature routes;
//! * [`squarefn`] — cone square functions, the nontangential maximal
//!   function, and Calderón-type ratio experiments;
//! * [`extremal`] — primal extremal problems (maximal pairing on the unit
//!   ball) with optimality-condition certificates;
//! * [`dual`] — minimal-norm dual problems, duality-gap verification, the
//!   extremal-kernel identity, and best analytic approximation in L^p;
//! * [`experiments`] — seeded corpora, the empirical constants ledger, and
//!   the experiment runner behind the `disclab` binary.
//!
//! Everything is deterministic: corpora are generated from explicit seeds,
//! reductions run in fixed order, and report files are byte-reproducible.
//!
//! See the `examples/` directory for one runnable walkthrough per
//! capability, e.g. `cargo run --release --example extremal_problems`.

pub mod boundary;
pub mod dual;
pub mod error;
pub mod experiments;
pub mod extremal;
pub mod grid;
pub mod lift;
pub mod norms;
pub mod poly;
pub mod projections;
pub mod squarefn;

pub use boundary::{BoundarySamples, FourierCoefficients};
pub use error::{Error, Result};
pub use grid::PolarGrid;
pub use poly::{TaylorPoly, ZzbarPoly};
