//! Closed-form spectral maps: derived-graph spectra computed from the base
//! graph's spectrum alone, without constructing the derived graph, plus
//! evaluation of the factored characteristic polynomials of `R(G)` and
//! `Q(G)` for regular bases.
//!
//! For an `r`-regular base (`r ≥ 2`) with Laplacian eigenvalues `μᵢ` and
//! signless-Laplacian eigenvalues `qᵢ`:
//!
//! * `L(R(G))`: `2` with multiplicity `m − n`, plus the root pair of
//!   `x² − (r+2+μᵢ)x + 3μᵢ` for each `i`;
//! * `Q(R(G))`: `2` with multiplicity `m − n`, plus roots of
//!   `x² − (r+2+qᵢ)x + (2r+qᵢ)`;
//! * `L(Q(G))`: `2r+2` with multiplicity `m − n`, plus roots of
//!   `x² − (r+2+μᵢ)x + μᵢ(r+1)`;
//! * `Q(Q(G))`: `2r−2` with multiplicity `m − n`, plus roots of
//!   `x² − (3r−2+qᵢ)x + r(2r−2+qᵢ) − qᵢ`.
//!
//! For an `(r₁, r₂)`-semiregular bipartite base (this includes `r`-regular
//! bipartite graphs as the `r₁ = r₂` case):
//!
//! * `L(L(G))`: `r₁+r₂` with multiplicity `m − n`, plus `r₁+r₂−μᵢ`;
//! * `Q(L(G))`: `r₁+r₂−4` with multiplicity `m − n`, plus `r₁+r₂−4+qᵢ`.
//!
//! The line-graph maps need `m ≥ n`; stars (and anything else with
//! `m < n`) are rejected as inapplicable rather than juggling negative
//! multiplicities. All discriminants are provably non-negative for valid
//! inputs; values in `(−1e−9, 0)` are clamped to absorb eigensolver noise
//! and anything lower is reported as an error.

use crate::error::{Error, Result};
use crate::graph::{Graph, RegularityKind};
use crate::spectral::{Spectrum, SpectrumKind, EIG_CLAMP};

/// Degree data of a base graph, as used by the closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DegreeClass {
    Regular { r: usize },
    /// `r1 >= r2` by convention.
    Semiregular { r1: usize, r2: usize },
}

/// Base-graph parameters consumed by the spectral maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BaseParams {
    pub n: usize,
    pub m: usize,
    pub degrees: DegreeClass,
}

impl BaseParams {
    /// Parameters of an `r`-regular graph; checks `2m = n·r`.
    pub fn regular(n: usize, m: usize, r: usize) -> Result<BaseParams> {
        if 2 * m != n * r {
            return Err(Error::InvalidParams(format!(
                "regular parameters need 2m = n*r, got n={n}, m={m}, r={r}"
            )));
        }
        Ok(BaseParams { n, m, degrees: DegreeClass::Regular { r } })
    }

    /// Parameters of an `(r1, r2)`-semiregular bipartite graph; checks
    /// `m·(r1+r2) = n·r1·r2` and orders the degrees descending.
    pub fn semiregular(n: usize, m: usize, r1: usize, r2: usize) -> Result<BaseParams> {
        let (r1, r2) = (r1.max(r2), r1.min(r2));
        if m * (r1 + r2) != n * r1 * r2 {
            return Err(Error::InvalidParams(format!(
                "semiregular parameters need m = n*r1*r2/(r1+r2), got n={n}, m={m}, r1={r1}, r2={r2}"
            )));
        }
        Ok(BaseParams { n, m, degrees: DegreeClass::Semiregular { r1, r2 } })
    }

    /// Derives parameters from a graph's degree classification.
    pub fn from_graph(g: &Graph) -> Result<BaseParams> {
        match g.classify().kind {
            RegularityKind::Regular { r } => BaseParams::regular(g.order(), g.size(), r),
            RegularityKind::Semiregular { r1, r2, .. } => {
                BaseParams::semiregular(g.order(), g.size(), r1, r2)
            }
            RegularityKind::Irregular => Err(Error::InapplicableMap(
                "closed forms need a regular or semiregular bipartite base".into(),
            )),
        }
    }

    /// Semiregular parameters for the line-graph maps. Regular bipartite
    /// graphs qualify as the `r1 = r2` case; non-bipartite or irregular
    /// graphs do not.
    pub fn semiregular_from_graph(g: &Graph) -> Result<BaseParams> {
        match g.classify().kind {
            RegularityKind::Semiregular { r1, r2, .. } => {
                BaseParams::semiregular(g.order(), g.size(), r1, r2)
            }
            RegularityKind::Regular { r } if g.is_bipartite() => {
                BaseParams::semiregular(g.order(), g.size(), r, r)
            }
            _ => Err(Error::InapplicableMap(
                "line-graph maps need a semiregular (or regular) bipartite base".into(),
            )),
        }
    }

    fn require_regular(&self, what: &str) -> Result<usize> {
        match self.degrees {
            DegreeClass::Regular { r } if r >= 2 => Ok(r),
            DegreeClass::Regular { r } => Err(Error::InapplicableMap(format!(
                "{what} needs a regular base with r >= 2, got r={r}"
            ))),
            DegreeClass::Semiregular { .. } => Err(Error::InapplicableMap(format!(
                "{what} needs a regular base, got a semiregular one"
            ))),
        }
    }

    fn require_semiregular(&self, what: &str) -> Result<(usize, usize)> {
        match self.degrees {
            DegreeClass::Semiregular { r1, r2 } => Ok((r1, r2)),
            DegreeClass::Regular { .. } => Err(Error::InapplicableMap(format!(
                "{what} needs semiregular parameters (regular bipartite bases \
                 qualify via the r1 = r2 view)"
            ))),
        }
    }
}

fn check_input(sp: &Spectrum, p: &BaseParams, expected: SpectrumKind) -> Result<()> {
    if sp.kind() != expected {
        return Err(Error::KindMismatch { expected, actual: sp.kind() });
    }
    if sp.len() != p.n {
        return Err(Error::BadLength { expected: p.n, actual: sp.len() });
    }
    Ok(())
}

/// Smaller/larger roots of `x² − sum·x + product`, with the usual clamp on
/// a slightly negative discriminant.
fn pair_roots(sum: f64, product: f64) -> Result<(f64, f64)> {
    let mut disc = sum * sum - 4.0 * product;
    if disc < 0.0 {
        if disc > -EIG_CLAMP {
            disc = 0.0;
        } else {
            return Err(Error::NegativeDiscriminant { value: disc });
        }
    }
    let root = disc.sqrt();
    Ok(((sum + root) / 2.0, (sum - root) / 2.0))
}

/// Spectrum made of `value` repeated `mult` times plus one root pair per
/// base eigenvalue, where `quad` maps an eigenvalue to the (sum, product)
/// of its quadratic factor.
fn pair_spectrum(
    sp: &Spectrum,
    kind: SpectrumKind,
    value: f64,
    mult: usize,
    quad: impl Fn(f64) -> (f64, f64),
) -> Result<Spectrum> {
    let mut out = Vec::with_capacity(mult + 2 * sp.len());
    out.resize(mult, value);
    for &ev in sp.values() {
        let (sum, product) = quad(ev);
        let (hi, lo) = pair_roots(sum, product)?;
        out.push(hi);
        out.push(lo);
    }
    Spectrum::new(kind, out)
}

/// Laplacian spectrum of the line graph of a semiregular bipartite base:
/// `r₁+r₂` with multiplicity `m−n`, plus `r₁+r₂−μᵢ` for each `i`.
pub fn line_l_spectrum(sp: &Spectrum, p: &BaseParams) -> Result<Spectrum> {
    let (r1, r2) = p.require_semiregular("the line-graph Laplacian map")?;
    check_input(sp, p, SpectrumKind::Laplacian)?;
    line_map(sp, p, (r1 + r2) as f64, SpectrumKind::Laplacian, |s, mu| s - mu)
}

/// Signless-Laplacian spectrum of the line graph of a semiregular bipartite
/// base: `r₁+r₂−4` with multiplicity `m−n`, plus `r₁+r₂−4+qᵢ`.
pub fn line_q_spectrum(sp: &Spectrum, p: &BaseParams) -> Result<Spectrum> {
    let (r1, r2) = p.require_semiregular("the line-graph signless map")?;
    check_input(sp, p, SpectrumKind::SignlessLaplacian)?;
    line_map(sp, p, (r1 + r2) as f64 - 4.0, SpectrumKind::SignlessLaplacian, |s4, q| s4 + q)
}

fn line_map(
    sp: &Spectrum,
    p: &BaseParams,
    base_value: f64,
    kind: SpectrumKind,
    shift: impl Fn(f64, f64) -> f64,
) -> Result<Spectrum> {
    if p.m < p.n {
        return Err(Error::InapplicableMap(format!(
            "line-graph maps need m >= n (multiplicity m−n), got n={}, m={} \
             (stars are the typical rejected case)",
            p.n, p.m
        )));
    }
    let mut out = Vec::with_capacity(p.m);
    out.resize(p.m - p.n, base_value);
    out.extend(sp.values().iter().map(|&ev| shift(base_value, ev)));
    Spectrum::new(kind, out)
}

/// Laplacian spectrum of `R(G)` for an `r`-regular base.
pub fn rgraph_l_spectrum(sp: &Spectrum, p: &BaseParams) -> Result<Spectrum> {
    let r = p.require_regular("the R-graph Laplacian map")? as f64;
    check_input(sp, p, SpectrumKind::Laplacian)?;
    pair_spectrum(sp, SpectrumKind::Laplacian, 2.0, p.m - p.n, |mu| {
        (r + 2.0 + mu, 3.0 * mu)
    })
}

/// Signless-Laplacian spectrum of `R(G)` for an `r`-regular base.
pub fn rgraph_q_spectrum(sp: &Spectrum, p: &BaseParams) -> Result<Spectrum> {
    let r = p.require_regular("the R-graph signless map")? as f64;
    check_input(sp, p, SpectrumKind::SignlessLaplacian)?;
    pair_spectrum(sp, SpectrumKind::SignlessLaplacian, 2.0, p.m - p.n, |q| {
        (r + 2.0 + q, 2.0 * r + q)
    })
}

/// Laplacian spectrum of `Q(G)` for an `r`-regular base.
pub fn qgraph_l_spectrum(sp: &Spectrum, p: &BaseParams) -> Result<Spectrum> {
    let r = p.require_regular("the Q-graph Laplacian map")? as f64;
    check_input(sp, p, SpectrumKind::Laplacian)?;
    pair_spectrum(sp, SpectrumKind::Laplacian, 2.0 * r + 2.0, p.m - p.n, |mu| {
        (r + 2.0 + mu, mu * (r + 1.0))
    })
}

/// Signless-Laplacian spectrum of `Q(G)` for an `r`-regular base.
pub fn qgraph_q_spectrum(sp: &Spectrum, p: &BaseParams) -> Result<Spectrum> {
    let r = p.require_regular("the Q-graph signless map")? as f64;
    check_input(sp, p, SpectrumKind::SignlessLaplacian)?;
    pair_spectrum(sp, SpectrumKind::SignlessLaplacian, 2.0 * r - 2.0, p.m - p.n, |q| {
        (3.0 * r - 2.0 + q, r * (2.0 * r - 2.0 + q) - q)
    })
}

/// Which derived characteristic polynomial to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CharPolyKind {
    /// Laplacian of `R(G)`.
    LaplacianOfR,
    /// Signless Laplacian of `R(G)`.
    SignlessOfR,
    /// Laplacian of `Q(G)`.
    LaplacianOfQ,
    /// Signless Laplacian of `Q(G)`.
    SignlessOfQ,
}

impl CharPolyKind {
    pub fn spectrum_kind(self) -> SpectrumKind {
        match self {
            CharPolyKind::LaplacianOfR | CharPolyKind::LaplacianOfQ => SpectrumKind::Laplacian,
            CharPolyKind::SignlessOfR | CharPolyKind::SignlessOfQ => {
                SpectrumKind::SignlessLaplacian
            }
        }
    }
}

/// Evaluates the factored characteristic polynomial of the chosen derived
/// matrix at `x`, for an `r`-regular base with spectrum `sp`.
///
/// The Laplacian forms split off the base eigenvalue `μₙ = 0` as the
/// explicit factor `x·(x−r−2)`; the signless forms split off `q₁ = 2r`
/// (always present for a regular graph) as an explicit quadratic. The
/// `(x−r−2)` factor appears with exponent 1 — the value forced by the
/// multiplicities of the corresponding spectral map.
pub fn char_poly_eval(kind: CharPolyKind, x: f64, sp: &Spectrum, p: &BaseParams) -> Result<f64> {
    let r = p.require_regular("characteristic-polynomial evaluation")? as f64;
    check_input(sp, p, kind.spectrum_kind())?;
    let exp = (p.m - p.n) as i32;
    let value = match kind {
        CharPolyKind::LaplacianOfR => match sp.values().split_last() {
            None => 1.0,
            Some((_, mu_rest)) => {
                x * (x - 2.0).powi(exp)
                    * (x - r - 2.0)
                    * product(mu_rest, |mu| x * x - (r + 2.0 + mu) * x + 3.0 * mu)
            }
        },
        CharPolyKind::LaplacianOfQ => match sp.values().split_last() {
            None => 1.0,
            Some((_, mu_rest)) => {
                x * (x - 2.0 * r - 2.0).powi(exp)
                    * (x - r - 2.0)
                    * product(mu_rest, |mu| x * x - (r + 2.0 + mu) * x + mu * (r + 1.0))
            }
        },
        CharPolyKind::SignlessOfR => match sp.values().split_first() {
            None => 1.0,
            Some((_, q_rest)) => {
                (x - 2.0).powi(exp)
                    * (x * x - (3.0 * r + 2.0) * x + 4.0 * r)
                    * product(q_rest, |q| x * x - (r + 2.0 + q) * x + 2.0 * r + q)
            }
        },
        CharPolyKind::SignlessOfQ => match sp.values().split_first() {
            None => 1.0,
            Some((_, q_rest)) => {
                (x - 2.0 * r + 2.0).powi(exp)
                    * (x * x - (5.0 * r - 2.0) * x + 4.0 * r * r - 4.0 * r)
                    * product(q_rest, |q| {
                        x * x - (3.0 * r - 2.0 + q) * x + r * (2.0 * r - 2.0 + q) - q
                    })
            }
        },
    };
    Ok(value)
}

fn product(values: &[f64], factor: impl Fn(f64) -> f64) -> f64 {
    values.iter().map(|&v| factor(v)).product()
}
