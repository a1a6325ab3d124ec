//! Spectra and energy-like invariants of derived graphs, with verified
//! analytic bounds.
//!
//! The library works with simple undirected graphs and three classical
//! derived constructions: the line graph `L(G)`, the R-graph `R(G)` (one new
//! vertex per edge, joined to that edge's endpoints) and the Q-graph `Q(G)`
//! (each edge subdivided, subdivision vertices joined when their edges were
//! adjacent). For regular and semiregular base graphs the Laplacian and
//! signless-Laplacian spectra of these derived graphs are known in closed
//! form; this crate computes them both ways — a dense Jacobi eigensolver on
//! the constructed graph, and the closed-form spectral maps applied to the
//! base spectrum — and cross-checks the two routes.
//!
//! On top of the spectra it computes two invariants,
//!
//! * `LEL(G) = Σ_{i=1}^{n-1} √μ_i` (Laplacian-energy-like invariant), and
//! * `IE(G) = Σ_{i=1}^{n} √q_i` (incidence energy, the sum of singular
//!   values of the incidence matrix),
//!
//! and evaluates a registry of analytic upper/lower bounds on those
//! invariants for `R(G)`, `Q(G)` and `L(G)`, reporting slack, violations and
//! equality cases (several upper bounds are tight exactly for complete
//! graphs). The [`verify`] module drives whole-family sweeps and serializes
//! machine-readable reports.

pub mod bounds;
pub mod closed_form;
pub mod energy;
mod error;
pub mod family;
pub mod graph;
pub mod io;
pub mod report;
pub mod rng;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
