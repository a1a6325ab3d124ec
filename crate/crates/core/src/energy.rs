//! The two spectral invariants: `LEL` (Laplacian-energy-like invariant) and
//! `IE` (incidence energy).
//!
//! `LEL` sums the square roots of the `n−1` largest Laplacian eigenvalues,
//! dropping the single smallest (the zero eigenvalue, for a connected
//! graph). `IE` sums the square roots of all `n` signless-Laplacian
//! eigenvalues, which equals the sum of the singular values of the
//! incidence matrix.

use crate::error::{Error, Result};
use crate::spectral::{Spectrum, SpectrumKind, EIG_CLAMP};
use serde::{Deserialize, Serialize};

/// Which invariant a value measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InvariantKind {
    Lel,
    Ie,
}

impl InvariantKind {
    pub fn name(self) -> &'static str {
        match self {
            InvariantKind::Lel => "lel",
            InvariantKind::Ie => "ie",
        }
    }

    /// The matrix kind whose spectrum feeds this invariant.
    pub fn spectrum_kind(self) -> SpectrumKind {
        match self {
            InvariantKind::Lel => SpectrumKind::Laplacian,
            InvariantKind::Ie => SpectrumKind::SignlessLaplacian,
        }
    }
}

/// How the spectrum behind a value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ValueSource {
    DirectEigen,
    ClosedForm,
}

/// A computed invariant, tagged with its provenance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InvariantValue {
    pub kind: InvariantKind,
    pub value: f64,
    pub source: ValueSource,
}

/// `LEL`: sum of square roots of the `n−1` largest Laplacian eigenvalues.
pub fn lel(sp: &Spectrum, source: ValueSource) -> Result<InvariantValue> {
    if sp.kind() != SpectrumKind::Laplacian {
        return Err(Error::KindMismatch {
            expected: SpectrumKind::Laplacian,
            actual: sp.kind(),
        });
    }
    let kept = match sp.values().split_last() {
        Some((_smallest, rest)) => rest,
        None => &[],
    };
    Ok(InvariantValue {
        kind: InvariantKind::Lel,
        value: root_sum(kept)?,
        source,
    })
}

/// `IE`: sum of square roots of all signless-Laplacian eigenvalues.
pub fn ie(sp: &Spectrum, source: ValueSource) -> Result<InvariantValue> {
    if sp.kind() != SpectrumKind::SignlessLaplacian {
        return Err(Error::KindMismatch {
            expected: SpectrumKind::SignlessLaplacian,
            actual: sp.kind(),
        });
    }
    Ok(InvariantValue {
        kind: InvariantKind::Ie,
        value: root_sum(sp.values())?,
        source,
    })
}

/// Σ√vᵢ with the standard clamp: tiny negatives count as 0, real negatives
/// are an error. (A [`Spectrum`] never carries negatives, so the error arm
/// is defensive.)
fn root_sum(values: &[f64]) -> Result<f64> {
    let mut sum = 0.0;
    for &v in values {
        if v < 0.0 {
            if v > -EIG_CLAMP {
                continue;
            }
            return Err(Error::NegativeEigenvalue { value: v });
        }
        sum += v.sqrt();
    }
    Ok(sum)
}
