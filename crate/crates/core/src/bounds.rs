//! The bound registry: every analytic upper/lower bound on `LEL` and `IE`
//! of base, line, R- and Q-graphs that this crate evaluates and verifies,
//! plus the Ozeki-type inequality utilities used in their derivations.
//!
//! Each [`BoundId`] is one formula with a fixed side, target graph,
//! invariant, and input list. Formulas are transcribed literally, with no
//! algebraic simplification, so a transcription slip shows up as a sandwich
//! or equality failure in the verification suite instead of being silently
//! compensated. Regular-base bounds assume `r ≥ 2`; line-graph bounds
//! assume a semiregular bipartite base with `r₁ + r₂ ≥ 4` and `m ≥ n`.
//! Parameters below those thresholds yield an inapplicable (but well-typed)
//! result rather than an error, while structurally wrong inputs (wrong
//! regularity class, missing `LEL(G)`) are errors.

use crate::closed_form::{BaseParams, DegreeClass};
use crate::energy::InvariantKind;
use crate::error::{Error, Result};
use crate::graph::RegularityKind;
use serde::{Deserialize, Serialize};
use std::f64::consts::SQRT_2;

/// Violation tolerance used for `holds` in [`ozeki_check`].
pub const DEFAULT_TOL: f64 = 1e-9;

/// Which side of the exact value a bound sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundSide {
    Upper,
    Lower,
}

impl BoundSide {
    pub fn name(self) -> &'static str {
        match self {
            BoundSide::Upper => "upper",
            BoundSide::Lower => "lower",
        }
    }
}

/// Which graph a bound constrains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundTarget {
    Base,
    RGraph,
    QGraph,
    LineGraph,
}

impl BoundTarget {
    pub fn name(self) -> &'static str {
        match self {
            BoundTarget::Base => "base",
            BoundTarget::RGraph => "r_graph",
            BoundTarget::QGraph => "q_graph",
            BoundTarget::LineGraph => "line_graph",
        }
    }
}

/// Registry of all evaluated bounds.
///
/// Naming: `{target}_{invariant}_{qualifier}_{side}`. The unqualified
/// `r_lel`/`q_lel` bounds take `LEL(G)` as an input; the `param` variants
/// eliminate that input by substituting the base-graph `LEL` bounds; the
/// `pirzada`/`wang_yang` variants are the earlier published bounds that the
/// parameter-free ones are checked to improve on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundId {
    BaseLelLower,
    BaseLelUpper,
    RLelUpper,
    RLelLower,
    RLelParamUpper,
    RLelParamLower,
    RLelPirzadaUpper,
    RLelPirzadaLower,
    QLelUpper,
    QLelLower,
    QLelParamUpper,
    QLelParamLower,
    QLelPirzadaUpper,
    QLelPirzadaLower,
    LineLelPirzadaUpper,
    LineLelLower,
    RIeUpper,
    RIeLower,
    QIeUpper,
    QIeLower,
    LineIeWangYangUpper,
    LineIeLower,
}

impl BoundId {
    /// Every registry member, in canonical order.
    pub const ALL: [BoundId; 22] = [
        BoundId::BaseLelLower,
        BoundId::BaseLelUpper,
        BoundId::RLelUpper,
        BoundId::RLelLower,
        BoundId::RLelParamUpper,
        BoundId::RLelParamLower,
        BoundId::RLelPirzadaUpper,
        BoundId::RLelPirzadaLower,
        BoundId::QLelUpper,
        BoundId::QLelLower,
        BoundId::QLelParamUpper,
        BoundId::QLelParamLower,
        BoundId::QLelPirzadaUpper,
        BoundId::QLelPirzadaLower,
        BoundId::LineLelPirzadaUpper,
        BoundId::LineLelLower,
        BoundId::RIeUpper,
        BoundId::RIeLower,
        BoundId::QIeUpper,
        BoundId::QIeLower,
        BoundId::LineIeWangYangUpper,
        BoundId::LineIeLower,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundId::BaseLelLower => "base_lel_lower",
            BoundId::BaseLelUpper => "base_lel_upper",
            BoundId::RLelUpper => "r_lel_upper",
            BoundId::RLelLower => "r_lel_lower",
            BoundId::RLelParamUpper => "r_lel_param_upper",
            BoundId::RLelParamLower => "r_lel_param_lower",
            BoundId::RLelPirzadaUpper => "r_lel_pirzada_upper",
            BoundId::RLelPirzadaLower => "r_lel_pirzada_lower",
            BoundId::QLelUpper => "q_lel_upper",
            BoundId::QLelLower => "q_lel_lower",
            BoundId::QLelParamUpper => "q_lel_param_upper",
            BoundId::QLelParamLower => "q_lel_param_lower",
            BoundId::QLelPirzadaUpper => "q_lel_pirzada_upper",
            BoundId::QLelPirzadaLower => "q_lel_pirzada_lower",
            BoundId::LineLelPirzadaUpper => "line_lel_pirzada_upper",
            BoundId::LineLelLower => "line_lel_lower",
            BoundId::RIeUpper => "r_ie_upper",
            BoundId::RIeLower => "r_ie_lower",
            BoundId::QIeUpper => "q_ie_upper",
            BoundId::QIeLower => "q_ie_lower",
            BoundId::LineIeWangYangUpper => "line_ie_wang_yang_upper",
            BoundId::LineIeLower => "line_ie_lower",
        }
    }

    pub fn side(self) -> BoundSide {
        match self {
            BoundId::BaseLelUpper
            | BoundId::RLelUpper
            | BoundId::RLelParamUpper
            | BoundId::RLelPirzadaUpper
            | BoundId::QLelUpper
            | BoundId::QLelParamUpper
            | BoundId::QLelPirzadaUpper
            | BoundId::LineLelPirzadaUpper
            | BoundId::RIeUpper
            | BoundId::QIeUpper
            | BoundId::LineIeWangYangUpper => BoundSide::Upper,
            _ => BoundSide::Lower,
        }
    }

    pub fn target(self) -> BoundTarget {
        match self {
            BoundId::BaseLelLower | BoundId::BaseLelUpper => BoundTarget::Base,
            BoundId::RLelUpper
            | BoundId::RLelLower
            | BoundId::RLelParamUpper
            | BoundId::RLelParamLower
            | BoundId::RLelPirzadaUpper
            | BoundId::RLelPirzadaLower
            | BoundId::RIeUpper
            | BoundId::RIeLower => BoundTarget::RGraph,
            BoundId::QLelUpper
            | BoundId::QLelLower
            | BoundId::QLelParamUpper
            | BoundId::QLelParamLower
            | BoundId::QLelPirzadaUpper
            | BoundId::QLelPirzadaLower
            | BoundId::QIeUpper
            | BoundId::QIeLower => BoundTarget::QGraph,
            BoundId::LineLelPirzadaUpper
            | BoundId::LineLelLower
            | BoundId::LineIeWangYangUpper
            | BoundId::LineIeLower => BoundTarget::LineGraph,
        }
    }

    pub fn invariant(self) -> InvariantKind {
        match self {
            BoundId::RIeUpper
            | BoundId::RIeLower
            | BoundId::QIeUpper
            | BoundId::QIeLower
            | BoundId::LineIeWangYangUpper
            | BoundId::LineIeLower => InvariantKind::Ie,
            _ => InvariantKind::Lel,
        }
    }

    /// True for the four bounds that take `LEL(G)` as an input.
    pub fn needs_lel_base(self) -> bool {
        matches!(
            self,
            BoundId::RLelUpper | BoundId::RLelLower | BoundId::QLelUpper | BoundId::QLelLower
        )
    }

    /// True for bounds whose equality case is a complete base graph.
    fn equality_family(self) -> bool {
        matches!(
            self,
            BoundId::BaseLelLower
                | BoundId::BaseLelUpper
                | BoundId::RLelUpper
                | BoundId::RLelParamUpper
                | BoundId::QLelUpper
                | BoundId::QLelParamUpper
                | BoundId::RIeUpper
                | BoundId::QIeUpper
        )
    }
}

/// Inputs to a bound evaluation: base-graph counts and degrees, plus the
/// optional exact `LEL(G)` required by the non-parametric R/Q LEL bounds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundParams {
    pub base: BaseParams,
    pub lel_base: Option<f64>,
}

impl BoundParams {
    pub fn regular(n: usize, m: usize, r: usize) -> Result<BoundParams> {
        Ok(BoundParams { base: BaseParams::regular(n, m, r)?, lel_base: None })
    }

    pub fn semiregular(n: usize, m: usize, r1: usize, r2: usize) -> Result<BoundParams> {
        Ok(BoundParams { base: BaseParams::semiregular(n, m, r1, r2)?, lel_base: None })
    }

    pub fn with_lel_base(mut self, value: f64) -> BoundParams {
        self.lel_base = Some(value);
        self
    }
}

/// Outcome of one bound evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundResult {
    pub id: BoundId,
    pub side: BoundSide,
    /// `None` when the bound is inapplicable at these parameters.
    pub value: Option<f64>,
    pub applicable: bool,
    /// Present exactly when `applicable` is false.
    pub reason: Option<String>,
    /// True when the parameters describe a complete base graph and this
    /// bound's equality case is attained there.
    pub equality_expected: bool,
}

/// Evaluates one registry member at the given parameters.
///
/// Structurally wrong inputs are errors: a regular-base bound given
/// semiregular parameters (or vice versa) is `NotApplicable`, and a bound
/// that needs `LEL(G)` without one is `MissingInput`. Parameters of the
/// right shape but below the standing degree thresholds come back as
/// `applicable: false` with a reason instead.
pub fn evaluate_bound(id: BoundId, params: &BoundParams) -> Result<BoundResult> {
    let n = params.base.n as f64;
    let m = params.base.m;
    let equality_expected = id.equality_family()
        && matches!(params.base.degrees, DegreeClass::Regular { r } if r + 1 == params.base.n);
    let inapplicable = |reason: String| {
        Ok(BoundResult {
            id,
            side: id.side(),
            value: None,
            applicable: false,
            reason: Some(reason),
            equality_expected,
        })
    };
    let value = match (id.target(), params.base.degrees) {
        (BoundTarget::LineGraph, DegreeClass::Semiregular { r1, r2 }) => {
            if r1 + r2 < 4 {
                return inapplicable(format!(
                    "line-graph bounds assume r1 + r2 >= 4, got {}",
                    r1 + r2
                ));
            }
            if m < params.base.n {
                return inapplicable(format!(
                    "line-graph bounds need m >= n, got n={}, m={m}",
                    params.base.n
                ));
            }
            semiregular_bound(id, n, r1 as f64, r2 as f64)
        }
        (BoundTarget::LineGraph, DegreeClass::Regular { .. }) => {
            return Err(Error::NotApplicable(format!(
                "{} needs a semiregular bipartite base, got regular parameters",
                id.name()
            )));
        }
        (_, DegreeClass::Regular { r }) => {
            if r < 2 {
                return inapplicable(format!("regular-base bounds assume r >= 2, got r={r}"));
            }
            let lel_base = if id.needs_lel_base() {
                match params.lel_base {
                    Some(v) => Some(v),
                    None => {
                        return Err(Error::MissingInput(format!(
                            "{} requires the base-graph LEL value (lel_base)",
                            id.name()
                        )))
                    }
                }
            } else {
                None
            };
            regular_bound(id, n, r as f64, lel_base)
        }
        (_, DegreeClass::Semiregular { .. }) => {
            return Err(Error::NotApplicable(format!(
                "{} needs a regular base, got semiregular parameters",
                id.name()
            )));
        }
    };
    if !value.is_finite() {
        return inapplicable(format!("formula is not finite at these parameters ({value})"));
    }
    Ok(BoundResult {
        id,
        side: id.side(),
        value: Some(value),
        applicable: true,
        reason: None,
        equality_expected,
    })
}

/// Base-graph `LEL` bounds for an `r`-regular graph on `n` vertices.
fn base_lel_lower(n: f64, r: f64) -> f64 {
    n * r / (r + 1.0).sqrt()
}

fn base_lel_upper(n: f64, r: f64) -> f64 {
    (r + 1.0).sqrt() + ((n - 2.0) * (n * r - r - 1.0)).sqrt()
}

fn regular_bound(id: BoundId, n: f64, r: f64, lel_base: Option<f64>) -> f64 {
    // Heads: (m−n)·√λ* where λ* is the multiplicity eigenvalue of the
    // derived matrix — √2 for R(G) (both kinds), √(2r+2) for L(Q(G)),
    // √(2r−2) for Q(Q(G)) — and m−n = n(r−2)/2. Zero at r = 2 by design.
    let head2 = n * (r - 2.0) / 2.0 * SQRT_2;
    let headq = n * (r - 2.0) / 2.0 * (2.0 * r + 2.0).sqrt();
    let headqq = n * (r - 2.0) / 2.0 * (2.0 * r - 2.0).sqrt();
    let sqrt3 = 3f64.sqrt();
    let lel = lel_base.unwrap_or(f64::NAN);
    match id {
        BoundId::BaseLelLower => base_lel_lower(n, r),
        BoundId::BaseLelUpper => base_lel_upper(n, r),
        BoundId::RLelUpper => {
            head2
                + (r + 2.0).sqrt()
                + (n - 1.0) * (r + 2.0 + n * r / (n - 1.0) + 2.0 * sqrt3 * lel / (n - 1.0)).sqrt()
        }
        BoundId::RLelLower => {
            head2
                + (r + 2.0).sqrt()
                + (n - 1.0)
                    * (0.75 * (r + 2.0) + n * r / (n - 1.0) + 2.0 * sqrt3 * lel / (n - 1.0)).sqrt()
        }
        BoundId::RLelParamUpper => {
            regular_bound(BoundId::RLelUpper, n, r, Some(base_lel_upper(n, r)))
        }
        BoundId::RLelParamLower => {
            regular_bound(BoundId::RLelLower, n, r, Some(base_lel_lower(n, r)))
        }
        BoundId::RLelPirzadaUpper => {
            head2 + (r + 2.0).sqrt() + (n - 1.0) * ((3.0 * r).sqrt() + SQRT_2)
        }
        BoundId::RLelPirzadaLower => head2 + n * (r + 2.0).sqrt(),
        BoundId::QLelUpper => {
            headq
                + (r + 2.0).sqrt()
                + (n - 1.0)
                    * (r + 2.0 + n * r / (n - 1.0) + 2.0 * (r + 1.0).sqrt() * lel / (n - 1.0))
                        .sqrt()
        }
        BoundId::QLelLower => {
            headq
                + (r + 2.0).sqrt()
                + (n - 1.0)
                    * (r + 2.0 + n * r / (n - 1.0) + 2.0 * (r + 1.0).sqrt() * lel / (n - 1.0)
                        - 0.75 * r)
                        .sqrt()
        }
        BoundId::QLelParamUpper => {
            regular_bound(BoundId::QLelUpper, n, r, Some(base_lel_upper(n, r)))
        }
        BoundId::QLelParamLower => {
            headq
                + (r + 2.0).sqrt()
                + (n - 1.0) * ((3.0 * n / (n - 1.0) + 0.25) * r + 2.0).sqrt()
        }
        BoundId::QLelPirzadaUpper => {
            (n - 1.0) * r.sqrt() + (r + 2.0).sqrt() + (n * r - 2.0) * (2.0 * r + 2.0).sqrt() / 2.0
        }
        BoundId::QLelPirzadaLower => headq + n * (r + 2.0).sqrt(),
        BoundId::RIeUpper => {
            head2
                + (3.0 * r + 2.0 + 4.0 * r.sqrt()).sqrt()
                + (n - 1.0)
                    * ((2.0 * n - 3.0) / (n - 1.0) * r
                        + 2.0 * ((3.0 * n - 4.0) / (n - 1.0) * r).sqrt()
                        + 2.0)
                        .sqrt()
        }
        BoundId::RIeLower => {
            head2
                + (3.0 * r + 2.0 + 4.0 * r.sqrt()).sqrt()
                + (n - 1.0)
                    * (((2.0 * n - 3.0) / (n - 1.0) - (2.0 - sqrt3) / 2.0) * r
                        + 2.0
                            * (((3.0 * n - 4.0) / (n - 1.0) - (3.0 - 2.0 * SQRT_2) / 2.0) * r)
                                .sqrt()
                        + 2.0)
                        .sqrt()
        }
        BoundId::QIeUpper => {
            headqq
                + (5.0 * r - 2.0 + 4.0 * (r * (r - 1.0)).sqrt()).sqrt()
                + (n - 1.0)
                    * ((4.0 * n - 5.0) / (n - 1.0) * r
                        + 2.0 * ((3.0 * n - 4.0) / (n - 1.0) * r * (r - 1.0)).sqrt()
                        - 2.0)
                        .sqrt()
        }
        BoundId::QIeLower => {
            headqq
                + (5.0 * r - 2.0 + 4.0 * (r * (r - 1.0)).sqrt()).sqrt()
                + (n - 1.0)
                    * (((4.0 * n - 5.0) / (n - 1.0) - 0.25) * r
                        + 2.0
                            * (((3.0 * n - 4.0) / (n - 1.0) - (3.0 - 2.0 * SQRT_2) / 2.0)
                                * r
                                * (r - 1.0))
                                .sqrt()
                        - 2.0)
                        .sqrt()
        }
        _ => unreachable!("semiregular ids are dispatched before regular_bound"),
    }
}

fn semiregular_bound(id: BoundId, n: f64, r1: f64, r2: f64) -> f64 {
    let s = r1 + r2;
    // Coefficient of the leading term: n·r₁·r₂/s − n + 1 = m − n + 1.
    let co = n * r1 * r2 / s - n + 1.0;
    let cross = 2.0 * n * r1 * r2 / ((n - 2.0) * s);
    match id {
        BoundId::LineLelPirzadaUpper => {
            co * s.sqrt() + (n - 2.0) * ((n - 1.0) / (n - 2.0) * s - cross).sqrt()
        }
        BoundId::LineLelLower => {
            co * s.sqrt()
                + (n - 2.0) * ((3.0 * n - 2.0) / (4.0 * n - 8.0) * s - cross).sqrt()
        }
        BoundId::LineIeWangYangUpper => {
            co * (s - 4.0).sqrt()
                + (2.0 * s - 4.0).sqrt()
                + (n - 2.0) * ((n - 3.0) / (n - 2.0) * s + cross - 4.0).sqrt()
        }
        BoundId::LineIeLower => {
            co * (s - 4.0).sqrt()
                + (2.0 * s - 4.0).sqrt()
                + (n - 2.0) * ((3.0 * n - 10.0) / (4.0 * n - 8.0) * s + cross - 4.0).sqrt()
        }
        _ => unreachable!("regular ids are dispatched before semiregular_bound"),
    }
}

/// Registry members matching a regularity class, target graph, and
/// invariant, in canonical order. Irregular graphs match nothing.
pub fn applicable_bounds(
    kind: &RegularityKind,
    target: BoundTarget,
    invariant: InvariantKind,
) -> Vec<BoundId> {
    let class_matches = |id: BoundId| match kind {
        RegularityKind::Regular { .. } => id.target() != BoundTarget::LineGraph,
        RegularityKind::Semiregular { .. } => id.target() == BoundTarget::LineGraph,
        RegularityKind::Irregular => false,
    };
    BoundId::ALL
        .into_iter()
        .filter(|&id| id.target() == target && id.invariant() == invariant && class_matches(id))
        .collect()
}

/// One instance of the Ozeki-type inequality: tuples `a`, `b` with entry
/// boxes `[a_min, a_max]` and `[b_min, b_max]`.
#[derive(Debug, Clone, PartialEq)]
pub struct OzekiInstance {
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub a_min: f64,
    pub a_max: f64,
    pub b_min: f64,
    pub b_max: f64,
}

/// Evaluated inequality: `lhs = Σa²·Σb² − (Σab)²`,
/// `rhs = ¼·k²·(a_max·b_max − a_min·b_min)²` for tuple length `k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OzekiOutcome {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

/// Checks the Ozeki inequality on an instance.
///
/// The standard form needs strictly positive box minima. The refined form
/// relaxes them to `a_min, b_min ≥ 0` (with positive maxima) but applies
/// only when `(1 + a_min/a_max)(1 + b_min/b_max) ≥ 2`; below that gate the
/// result is a `RefinementInapplicable` error, not a verdict. In both
/// forms every entry must lie inside its declared box.
pub fn ozeki_check(inst: &OzekiInstance, refined: bool) -> Result<OzekiOutcome> {
    if inst.a.len() != inst.b.len() {
        return Err(Error::BadLength { expected: inst.a.len(), actual: inst.b.len() });
    }
    let (p, pp, q, qq) = (inst.a_min, inst.a_max, inst.b_min, inst.b_max);
    if refined {
        if p < 0.0 || q < 0.0 || pp <= 0.0 || qq <= 0.0 {
            return Err(Error::BoundsViolated(format!(
                "refined form needs a_min, b_min >= 0 and a_max, b_max > 0; \
                 got [{p}, {pp}] and [{q}, {qq}]"
            )));
        }
        let factor = (1.0 + p / pp) * (1.0 + q / qq);
        if factor < 2.0 {
            return Err(Error::RefinementInapplicable { factor });
        }
    } else if p <= 0.0 || q <= 0.0 {
        return Err(Error::BoundsViolated(format!(
            "standard form needs strictly positive box minima; got a_min={p}, b_min={q}"
        )));
    }
    for (i, &x) in inst.a.iter().enumerate() {
        if x < p || x > pp {
            return Err(Error::BoundsViolated(format!(
                "a[{i}] = {x} outside declared box [{p}, {pp}]"
            )));
        }
    }
    for (i, &x) in inst.b.iter().enumerate() {
        if x < q || x > qq {
            return Err(Error::BoundsViolated(format!(
                "b[{i}] = {x} outside declared box [{q}, {qq}]"
            )));
        }
    }
    let sum_a2: f64 = inst.a.iter().map(|x| x * x).sum();
    let sum_b2: f64 = inst.b.iter().map(|x| x * x).sum();
    let sum_ab: f64 = inst.a.iter().zip(&inst.b).map(|(x, y)| x * y).sum();
    let lhs = sum_a2 * sum_b2 - sum_ab * sum_ab;
    let k = inst.a.len() as f64;
    let rhs = 0.25 * k * k * (pp * qq - p * q) * (pp * qq - p * q);
    Ok(OzekiOutcome { lhs, rhs, holds: lhs <= rhs + DEFAULT_TOL })
}

#[cfg(test)]
// Reference decimals keep their full oracle digits even where f64 needs fewer.
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;
    use crate::energy::{ie, lel, ValueSource};
    use crate::family::FamilySpec;
    use crate::rng::SplitMix64;
    use crate::spectral::{
        eigenvalues, laplacian, signless_laplacian, SpectrumKind, DEFAULT_EIG_TOL,
    };

    fn k3_params() -> BoundParams {
        BoundParams::regular(3, 3, 2).unwrap().with_lel_base(2.0 * 3f64.sqrt())
    }

    fn value(id: BoundId, params: &BoundParams) -> f64 {
        let res = evaluate_bound(id, params).unwrap();
        assert!(res.applicable, "{} unexpectedly inapplicable: {:?}", id.name(), res.reason);
        res.value.unwrap()
    }

    #[test]
    fn registry_is_complete_and_consistent() {
        assert_eq!(BoundId::ALL.len(), 22);
        let mut names: Vec<&str> = BoundId::ALL.iter().map(|id| id.name()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), 22, "names must be unique");
        for id in BoundId::ALL {
            // The name's suffix encodes the side.
            let expect = match id.side() {
                BoundSide::Upper => "_upper",
                BoundSide::Lower => "_lower",
            };
            assert!(id.name().ends_with(expect), "{}", id.name());
            // JSON serialization matches name().
            assert_eq!(
                serde_json::to_value(id).unwrap(),
                serde_json::Value::String(id.name().into())
            );
        }
        let needing: Vec<BoundId> =
            BoundId::ALL.into_iter().filter(|id| id.needs_lel_base()).collect();
        assert_eq!(
            needing,
            vec![BoundId::RLelUpper, BoundId::RLelLower, BoundId::QLelUpper, BoundId::QLelLower]
        );
        let equality: Vec<BoundId> =
            BoundId::ALL.into_iter().filter(|id| id.equality_family()).collect();
        assert_eq!(equality.len(), 8);
    }

    #[test]
    fn regular_values_at_triangle() {
        let p = k3_params();
        let cases = [
            (BoundId::BaseLelLower, 3.464_101_615_137_754_8),
            (BoundId::BaseLelUpper, 3.464_101_615_137_754_4),
            (BoundId::RLelUpper, 9.211_102_550_927_979),
            (BoundId::RLelLower, 8.928_203_230_275_509),
            (BoundId::RLelParamUpper, 9.211_102_550_927_979),
            (BoundId::RLelParamLower, 8.928_203_230_275_509),
            (BoundId::RLelPirzadaUpper, 9.727_406_610_312_546),
            (BoundId::RLelPirzadaLower, 6.0),
            (BoundId::QLelUpper, 9.211_102_550_927_979),
            (BoundId::QLelLower, 8.782_329_983_125_269),
            (BoundId::QLelParamUpper, 9.211_102_550_927_979),
            (BoundId::QLelParamLower, 8.782_329_983_125_269),
            (BoundId::QLelPirzadaUpper, 9.727_406_610_312_546),
            (BoundId::QLelPirzadaLower, 6.0),
            (BoundId::RIeUpper, 9.850_885_204_395_654),
            (BoundId::RIeLower, 9.737_632_747_110_968),
            (BoundId::QIeUpper, 9.850_885_204_395_654),
            (BoundId::QIeLower, 9.660_327_080_504_914),
        ];
        for (id, expected) in cases {
            let got = value(id, &p);
            assert!(
                (got - expected).abs() < 1e-10,
                "{}: got {got}, expected {expected}",
                id.name()
            );
        }
    }

    #[test]
    fn semiregular_values_at_k23() {
        let p = BoundParams::semiregular(5, 6, 3, 2).unwrap();
        let cases = [
            (BoundId::LineLelPirzadaUpper, 9.371_115_440_565_935),
            (BoundId::LineLelLower, 8.042_850_169_271_004),
            (BoundId::LineIeWangYangUpper, 9.926_715_317_834_837),
            (BoundId::LineIeLower, 8.779_616_761_705_372),
        ];
        for (id, expected) in cases {
            let got = value(id, &p);
            assert!(
                (got - expected).abs() < 1e-10,
                "{}: got {got}, expected {expected}",
                id.name()
            );
        }
    }

    #[test]
    fn equality_flags_only_for_complete_bases() {
        let k3 = k3_params();
        let expected_true = [
            BoundId::BaseLelLower,
            BoundId::BaseLelUpper,
            BoundId::RLelUpper,
            BoundId::RLelParamUpper,
            BoundId::QLelUpper,
            BoundId::QLelParamUpper,
            BoundId::RIeUpper,
            BoundId::QIeUpper,
        ];
        for id in BoundId::ALL {
            if id.target() == BoundTarget::LineGraph {
                continue;
            }
            let res = evaluate_bound(id, &k3).unwrap();
            assert_eq!(res.equality_expected, expected_true.contains(&id), "{}", id.name());
        }
        // C₄ is regular but not complete: never expected.
        let c4 = BoundParams::regular(4, 4, 2).unwrap().with_lel_base(2.0 + SQRT_2);
        for id in BoundId::ALL {
            if id.target() == BoundTarget::LineGraph {
                continue;
            }
            assert!(!evaluate_bound(id, &c4).unwrap().equality_expected, "{}", id.name());
        }
    }

    #[test]
    fn equality_at_k4_against_exact_values() {
        let g = FamilySpec::Complete { n: 4 }.generate().unwrap();
        let mu = eigenvalues(&laplacian(&g), SpectrumKind::Laplacian, DEFAULT_EIG_TOL).unwrap();
        let lel_g = lel(&mu, ValueSource::DirectEigen).unwrap().value;
        let p = BoundParams::regular(4, 6, 3).unwrap().with_lel_base(lel_g);

        let rq = g.r_graph();
        let exact_r_lel = lel(
            &eigenvalues(&laplacian(&rq), SpectrumKind::Laplacian, DEFAULT_EIG_TOL).unwrap(),
            ValueSource::DirectEigen,
        )
        .unwrap()
        .value;
        assert!((value(BoundId::RLelUpper, &p) - exact_r_lel).abs() < 1e-8);

        let qq = g.q_graph();
        let exact_q_ie = ie(
            &eigenvalues(
                &signless_laplacian(&qq),
                SpectrumKind::SignlessLaplacian,
                DEFAULT_EIG_TOL,
            )
            .unwrap(),
            ValueSource::DirectEigen,
        )
        .unwrap()
        .value;
        let bound = value(BoundId::QIeUpper, &p);
        assert!(
            (bound - exact_q_ie).abs() < 1e-8,
            "QIeUpper {bound} vs exact {exact_q_ie}"
        );
        // Frozen from an independent computation.
        assert!((exact_q_ie - 21.144_037_703_365_537).abs() < 1e-9);
    }

    #[test]
    fn wrong_class_is_an_error() {
        let semi = BoundParams::semiregular(5, 6, 3, 2).unwrap();
        assert!(matches!(
            evaluate_bound(BoundId::RLelUpper, &semi),
            Err(Error::NotApplicable(_))
        ));
        let reg = k3_params();
        assert!(matches!(
            evaluate_bound(BoundId::LineLelLower, &reg),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn missing_lel_base_is_an_error() {
        let p = BoundParams::regular(3, 3, 2).unwrap();
        for id in [BoundId::RLelUpper, BoundId::RLelLower, BoundId::QLelUpper, BoundId::QLelLower]
        {
            assert!(matches!(evaluate_bound(id, &p), Err(Error::MissingInput(_))), "{id:?}");
        }
        // Parametric variants do not need it.
        assert!(evaluate_bound(BoundId::RLelParamUpper, &p).unwrap().applicable);
    }

    #[test]
    fn below_threshold_is_inapplicable_not_an_error() {
        // 1-regular: below the r >= 2 assumption.
        let p = BoundParams::regular(4, 2, 1).unwrap();
        let res = evaluate_bound(BoundId::RLelParamUpper, &p).unwrap();
        assert!(!res.applicable && res.value.is_none() && res.reason.is_some());
        // Star K₁,₃: r1 + r2 = 4 but m < n.
        let star = BoundParams::semiregular(4, 3, 3, 1).unwrap();
        let res = evaluate_bound(BoundId::LineLelLower, &star).unwrap();
        assert!(!res.applicable && res.reason.as_deref().unwrap().contains("m >= n"));
        // Path P₃: r1 + r2 = 3.
        let p3 = BoundParams::semiregular(3, 2, 2, 1).unwrap();
        let res = evaluate_bound(BoundId::LineIeLower, &p3).unwrap();
        assert!(!res.applicable && res.reason.as_deref().unwrap().contains("r1 + r2 >= 4"));
    }

    #[test]
    fn dispatch_matches_registry() {
        let reg3 = RegularityKind::Regular { r: 3 };
        assert_eq!(
            applicable_bounds(&reg3, BoundTarget::RGraph, InvariantKind::Lel),
            vec![
                BoundId::RLelUpper,
                BoundId::RLelLower,
                BoundId::RLelParamUpper,
                BoundId::RLelParamLower,
                BoundId::RLelPirzadaUpper,
                BoundId::RLelPirzadaLower,
            ]
        );
        assert_eq!(
            applicable_bounds(&reg3, BoundTarget::Base, InvariantKind::Lel),
            vec![BoundId::BaseLelLower, BoundId::BaseLelUpper]
        );
        assert_eq!(
            applicable_bounds(&reg3, BoundTarget::QGraph, InvariantKind::Ie),
            vec![BoundId::QIeUpper, BoundId::QIeLower]
        );
        let semi = RegularityKind::Semiregular { r1: 3, r2: 2, part1: vec![], part2: vec![] };
        assert_eq!(
            applicable_bounds(&semi, BoundTarget::LineGraph, InvariantKind::Ie),
            vec![BoundId::LineIeWangYangUpper, BoundId::LineIeLower]
        );
        assert!(applicable_bounds(&semi, BoundTarget::RGraph, InvariantKind::Lel).is_empty());
        assert!(applicable_bounds(&reg3, BoundTarget::LineGraph, InvariantKind::Lel).is_empty());
        assert!(applicable_bounds(
            &RegularityKind::Irregular,
            BoundTarget::RGraph,
            InvariantKind::Lel
        )
        .is_empty());
    }

    #[test]
    fn improvement_over_prior_bounds_on_small_grid() {
        for n in 3..=12usize {
            for r in 2..=6.min(n - 1) {
                if (n * r) % 2 != 0 {
                    continue;
                }
                let p = BoundParams::regular(n, n * r / 2, r).unwrap();
                let tighter_up = value(BoundId::RLelParamUpper, &p);
                let prior_up = value(BoundId::RLelPirzadaUpper, &p);
                assert!(tighter_up <= prior_up + 1e-9, "n={n} r={r}");
                let tighter_lo = value(BoundId::RLelParamLower, &p);
                let prior_lo = value(BoundId::RLelPirzadaLower, &p);
                assert!(tighter_lo >= prior_lo - 1e-9, "n={n} r={r}");
                let tighter_up = value(BoundId::QLelParamUpper, &p);
                let prior_up = value(BoundId::QLelPirzadaUpper, &p);
                assert!(tighter_up <= prior_up + 1e-9, "n={n} r={r}");
                let tighter_lo = value(BoundId::QLelParamLower, &p);
                let prior_lo = value(BoundId::QLelPirzadaLower, &p);
                assert!(tighter_lo >= prior_lo - 1e-9, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn ozeki_equality_instance() {
        let inst = OzekiInstance {
            a: vec![1.0, 2.0],
            b: vec![2.0, 1.0],
            a_min: 1.0,
            a_max: 2.0,
            b_min: 1.0,
            b_max: 2.0,
        };
        let out = ozeki_check(&inst, false).unwrap();
        assert_eq!((out.lhs, out.rhs), (9.0, 9.0));
        assert!(out.holds);
    }

    #[test]
    fn ozeki_constant_tuples_hold_trivially() {
        let inst = OzekiInstance {
            a: vec![3.0; 5],
            b: vec![3.0; 5],
            a_min: 1.0,
            a_max: 4.0,
            b_min: 2.0,
            b_max: 3.5,
        };
        let out = ozeki_check(&inst, false).unwrap();
        assert_eq!(out.lhs, 0.0);
        assert!(out.holds);
    }

    #[test]
    fn ozeki_box_violations_and_gates() {
        let bad = OzekiInstance {
            a: vec![1.0, 5.0],
            b: vec![1.0, 1.0],
            a_min: 1.0,
            a_max: 2.0,
            b_min: 1.0,
            b_max: 2.0,
        };
        assert!(matches!(ozeki_check(&bad, false), Err(Error::BoundsViolated(_))));
        // Standard form rejects a zero minimum …
        let zero_min = OzekiInstance {
            a: vec![0.5],
            b: vec![1.0],
            a_min: 0.0,
            a_max: 1.0,
            b_min: 1.0,
            b_max: 1.0,
        };
        assert!(matches!(ozeki_check(&zero_min, false), Err(Error::BoundsViolated(_))));
        // … which the refined form admits when the gate reaches 2:
        // (1 + 0)(1 + 1) = 2 — the configuration used with box
        // [0, √(r₁+r₂)] × [1, 1].
        let refined = OzekiInstance {
            a: vec![0.0, 5f64.sqrt()],
            b: vec![1.0, 1.0],
            a_min: 0.0,
            a_max: 5f64.sqrt(),
            b_min: 1.0,
            b_max: 1.0,
        };
        let out = ozeki_check(&refined, true).unwrap();
        assert!(out.holds);
        // Below the gate the refined form is inapplicable.
        let gated = OzekiInstance {
            a: vec![0.5],
            b: vec![0.5],
            a_min: 0.0,
            a_max: 1.0,
            b_min: 0.0,
            b_max: 1.0,
        };
        assert!(matches!(
            ozeki_check(&gated, true),
            Err(Error::RefinementInapplicable { factor }) if (factor - 1.0).abs() < 1e-12
        ));
    }

    #[test]
    fn ozeki_holds_on_random_instances() {
        let mut rng = SplitMix64::new(11);
        for _ in 0..200 {
            let len = 1 + rng.next_below(16) as usize;
            let p = 0.1 + rng.next_f64();
            let pp = p + 0.1 + rng.next_f64() * 3.0;
            let q = 0.1 + rng.next_f64();
            let qq = q + 0.1 + rng.next_f64() * 3.0;
            let a: Vec<f64> = (0..len).map(|_| p + rng.next_f64() * (pp - p)).collect();
            let b: Vec<f64> = (0..len).map(|_| q + rng.next_f64() * (qq - q)).collect();
            let inst = OzekiInstance { a, b, a_min: p, a_max: pp, b_min: q, b_max: qq };
            assert!(ozeki_check(&inst, false).unwrap().holds);
        }
    }

    #[test]
    fn mismatched_tuple_lengths() {
        let inst = OzekiInstance {
            a: vec![1.0, 1.0],
            b: vec![1.0],
            a_min: 1.0,
            a_max: 1.0,
            b_min: 1.0,
            b_max: 1.0,
        };
        assert!(matches!(ozeki_check(&inst, false), Err(Error::BadLength { .. })));
    }
}
