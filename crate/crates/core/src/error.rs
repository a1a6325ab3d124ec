//! Crate-wide error type.

use crate::spectral::SpectrumKind;
use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error)]
pub enum Error {
    /// An edge joins a vertex to itself.
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    /// The same unordered vertex pair appears twice in an edge list.
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    /// An edge endpoint is not a valid vertex index.
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    /// The operation needs at least one edge.
    #[error("graph has no edges")]
    EmptyEdgeSet,
    /// A family spec violates a feasibility constraint (parity, degree, …).
    #[error("infeasible family spec: {0}")]
    InfeasibleSpec(String),
    /// Random generation hit the resample cap without producing a simple
    /// connected graph.
    #[error("graph generation exhausted after {attempts} attempts")]
    GenerationExhausted { attempts: usize },
    /// The Jacobi eigensolver did not reach the convergence threshold.
    #[error("eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    /// An eigenvalue of a positive semidefinite matrix came out below the
    /// clamping threshold.
    #[error("numerical anomaly: eigenvalue {value:e} below -1e-9")]
    NumericalAnomaly { value: f64 },
    /// A spectrum has the wrong number of values for the requested map.
    #[error("spectrum has {actual} values, expected {expected}")]
    BadLength { expected: usize, actual: usize },
    /// A closed-form pair discriminant is negative beyond the clamping
    /// threshold.
    #[error("negative discriminant {value:e} in closed-form pair")]
    NegativeDiscriminant { value: f64 },
    /// A Laplacian-kind operation received a signless spectrum or vice versa.
    #[error("expected a {expected:?} spectrum, got {actual:?}")]
    KindMismatch {
        expected: SpectrumKind,
        actual: SpectrumKind,
    },
    /// The requested spectral map does not apply to this input.
    #[error("spectral map not applicable: {0}")]
    InapplicableMap(String),
    /// An invariant was asked to take the square root of a significantly
    /// negative value.
    #[error("negative eigenvalue {value:e} in spectrum")]
    NegativeEigenvalue { value: f64 },
    /// A bound needs an input the caller did not supply.
    #[error("missing input: {0}")]
    MissingInput(String),
    /// The requested computation does not apply to this regularity class.
    #[error("not applicable: {0}")]
    NotApplicable(String),
    /// A sequence value lies outside its declared box.
    #[error("value outside declared box: {0}")]
    BoundsViolated(String),
    /// The refined inequality's applicability gate fails.
    #[error("refinement inapplicable: (1 + p/P)(1 + q/Q) = {factor} < 2")]
    RefinementInapplicable { factor: f64 },
    /// Parameters are mutually inconsistent (e.g. 2m != n*r).
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    /// A text input failed to parse; `line` is 1-based.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
