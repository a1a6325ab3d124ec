//! Named graph families and deterministic random generators.
//!
//! Family strings use the mini-grammar `name:params`:
//!
//! * `complete:5`, `complete:3..7` (inclusive range over `n`)
//! * `cycle:6`, `cycle:3..10`
//! * `petersen`
//! * `complete_bipartite:2,3`
//! * `random_regular:n=12,r=3,seed=42` (`seed=1..5` expands; seed optional)
//! * `random_biregular:n1=4,n2=6,r1=3,r2=2,seed=7`
//!
//! Random families use the configuration (stub-pairing) model driven by the
//! seeded [`SplitMix64`](crate::rng::SplitMix64) generator with whole-sample
//! rejection: a candidate pairing is discarded if it produces a self-loop, a
//! repeated edge, or a disconnected graph, and generation fails after
//! [`GENERATION_ATTEMPT_CAP`] rejected samples. Identical spec + seed always
//! reproduces the identical edge list.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::SplitMix64;
use std::fmt;

/// Maximum number of rejected samples before random generation gives up.
pub const GENERATION_ATTEMPT_CAP: usize = 1000;

/// A named graph family, possibly seeded.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Complete { n: usize },
    Cycle { n: usize },
    Petersen,
    CompleteBipartite { a: usize, b: usize },
    RandomRegular { n: usize, r: usize, seed: u64 },
    RandomBiregular { n1: usize, n2: usize, r1: usize, r2: usize, seed: u64 },
}

impl FamilySpec {
    /// Canonical family string; `parse_list(spec.label(), _)` yields `[spec]`.
    pub fn label(&self) -> String {
        match *self {
            FamilySpec::Complete { n } => format!("complete:{n}"),
            FamilySpec::Cycle { n } => format!("cycle:{n}"),
            FamilySpec::Petersen => "petersen".into(),
            FamilySpec::CompleteBipartite { a, b } => format!("complete_bipartite:{a},{b}"),
            FamilySpec::RandomRegular { n, r, seed } => {
                format!("random_regular:n={n},r={r},seed={seed}")
            }
            FamilySpec::RandomBiregular { n1, n2, r1, r2, seed } => {
                format!("random_biregular:n1={n1},n2={n2},r1={r1},r2={r2},seed={seed}")
            }
        }
    }

    /// Builds the graph described by this spec. Random variants are
    /// deterministic functions of the seed.
    pub fn generate(&self) -> Result<Graph> {
        match *self {
            FamilySpec::Complete { n } => {
                let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
                for u in 0..n {
                    for v in u + 1..n {
                        pairs.push((u, v));
                    }
                }
                Graph::from_edge_list(n, &pairs)
            }
            FamilySpec::Cycle { n } => {
                if n < 3 {
                    return Err(Error::InfeasibleSpec(format!(
                        "cycle needs n >= 3, got n={n}"
                    )));
                }
                let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
                Graph::from_edge_list(n, &pairs)
            }
            FamilySpec::Petersen => {
                // Kneser graph K(5,2): vertices are the 2-subsets of
                // {0,...,4} in lexicographic order, adjacent iff disjoint.
                let mut subsets = Vec::with_capacity(10);
                for a in 0..5usize {
                    for b in a + 1..5 {
                        subsets.push((a, b));
                    }
                }
                let mut pairs = Vec::with_capacity(15);
                for (i, &(a, b)) in subsets.iter().enumerate() {
                    for (j, &(c, d)) in subsets.iter().enumerate().skip(i + 1) {
                        if a != c && a != d && b != c && b != d {
                            pairs.push((i, j));
                        }
                    }
                }
                Graph::from_edge_list(10, &pairs)
            }
            FamilySpec::CompleteBipartite { a, b } => {
                if a == 0 || b == 0 {
                    return Err(Error::InfeasibleSpec(format!(
                        "complete_bipartite needs both part sizes >= 1, got {a},{b}"
                    )));
                }
                let mut pairs = Vec::with_capacity(a * b);
                for u in 0..a {
                    for v in 0..b {
                        pairs.push((u, a + v));
                    }
                }
                Graph::from_edge_list(a + b, &pairs)
            }
            FamilySpec::RandomRegular { n, r, seed } => random_regular(n, r, seed),
            FamilySpec::RandomBiregular { n1, n2, r1, r2, seed } => {
                random_biregular(n1, n2, r1, r2, seed)
            }
        }
    }

    /// Parses one family string, expanding any range into one spec per value.
    /// Seeded families without an explicit `seed=` use `default_seed`.
    pub fn parse_list(input: &str, default_seed: u64) -> Result<Vec<FamilySpec>> {
        let input = input.trim();
        let (name, params) = match input.split_once(':') {
            Some((n, p)) => (n.trim(), Some(p.trim())),
            None => (input, None),
        };
        match name {
            "complete" | "cycle" => {
                let p = params.filter(|p| !p.is_empty()).ok_or_else(|| {
                    invalid(format!(
                        "family '{name}' needs a vertex count, e.g. {name}:5 or {name}:3..7"
                    ))
                })?;
                let (lo, hi) = parse_usize_range(p)?;
                Ok((lo..=hi)
                    .map(|n| {
                        if name == "complete" {
                            FamilySpec::Complete { n }
                        } else {
                            FamilySpec::Cycle { n }
                        }
                    })
                    .collect())
            }
            "petersen" => match params {
                Some(p) if !p.is_empty() => {
                    Err(invalid("family 'petersen' takes no parameters".into()))
                }
                _ => Ok(vec![FamilySpec::Petersen]),
            },
            "complete_bipartite" => {
                let p = params.filter(|p| !p.is_empty()).ok_or_else(|| {
                    invalid("family 'complete_bipartite' needs two part sizes, e.g. complete_bipartite:2,3".into())
                })?;
                let parts: Vec<&str> = p.split(',').map(str::trim).collect();
                if parts.len() != 2 {
                    return Err(invalid(format!(
                        "complete_bipartite needs exactly two part sizes, got '{p}'"
                    )));
                }
                let a = parse_usize(parts[0])?;
                let b = parse_usize(parts[1])?;
                Ok(vec![FamilySpec::CompleteBipartite { a, b }])
            }
            "random_regular" => {
                let fields = parse_named(params.unwrap_or(""), &["n", "r", "seed"], name)?;
                let n = require_usize(&fields, "n", name)?;
                let r = require_usize(&fields, "r", name)?;
                let seeds = seed_values(&fields, default_seed)?;
                Ok(seeds
                    .map(|seed| FamilySpec::RandomRegular { n, r, seed })
                    .collect())
            }
            "random_biregular" => {
                let fields =
                    parse_named(params.unwrap_or(""), &["n1", "n2", "r1", "r2", "seed"], name)?;
                let n1 = require_usize(&fields, "n1", name)?;
                let n2 = require_usize(&fields, "n2", name)?;
                let r1 = require_usize(&fields, "r1", name)?;
                let r2 = require_usize(&fields, "r2", name)?;
                let seeds = seed_values(&fields, default_seed)?;
                Ok(seeds
                    .map(|seed| FamilySpec::RandomBiregular { n1, n2, r1, r2, seed })
                    .collect())
            }
            other => Err(invalid(format!(
                "unknown family '{other}' (expected complete, cycle, petersen, \
                 complete_bipartite, random_regular, or random_biregular)"
            ))),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

fn invalid(msg: String) -> Error {
    Error::InvalidParams(msg)
}

fn parse_usize(s: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| invalid(format!("expected a non-negative integer, got '{s}'")))
}

fn parse_u64(s: &str) -> Result<u64> {
    s.parse()
        .map_err(|_| invalid(format!("expected a non-negative integer, got '{s}'")))
}

/// `"5"` parses to `(5, 5)`; `"3..7"` to `(3, 7)` (inclusive).
fn parse_usize_range(s: &str) -> Result<(usize, usize)> {
    match s.split_once("..") {
        Some((lo, hi)) => {
            let lo = parse_usize(lo.trim())?;
            let hi = parse_usize(hi.trim())?;
            if lo > hi {
                return Err(invalid(format!("empty range '{s}'")));
            }
            Ok((lo, hi))
        }
        None => {
            let v = parse_usize(s)?;
            Ok((v, v))
        }
    }
}

fn parse_u64_range(s: &str) -> Result<(u64, u64)> {
    match s.split_once("..") {
        Some((lo, hi)) => {
            let lo = parse_u64(lo.trim())?;
            let hi = parse_u64(hi.trim())?;
            if lo > hi {
                return Err(invalid(format!("empty range '{s}'")));
            }
            Ok((lo, hi))
        }
        None => {
            let v = parse_u64(s)?;
            Ok((v, v))
        }
    }
}

/// Parses `key=value,key=value` with keys restricted to `allowed`.
fn parse_named<'a>(
    params: &'a str,
    allowed: &[&str],
    family: &str,
) -> Result<Vec<(&'a str, &'a str)>> {
    let mut fields = Vec::new();
    if params.is_empty() {
        return Ok(fields);
    }
    for piece in params.split(',') {
        let (k, v) = piece.split_once('=').ok_or_else(|| {
            invalid(format!(
                "family '{family}' takes named parameters (key=value), got '{piece}'"
            ))
        })?;
        let (k, v) = (k.trim(), v.trim());
        if !allowed.contains(&k) {
            return Err(invalid(format!(
                "unknown parameter '{k}' for family '{family}' (expected {})",
                allowed.join(", ")
            )));
        }
        if fields.iter().any(|&(seen, _)| seen == k) {
            return Err(invalid(format!(
                "parameter '{k}' given twice for family '{family}'"
            )));
        }
        fields.push((k, v));
    }
    Ok(fields)
}

fn require_usize(fields: &[(&str, &str)], key: &str, family: &str) -> Result<usize> {
    let v = fields
        .iter()
        .find(|&&(k, _)| k == key)
        .map(|&(_, v)| v)
        .ok_or_else(|| invalid(format!("family '{family}' is missing parameter '{key}'")))?;
    parse_usize(v)
}

fn seed_values(
    fields: &[(&str, &str)],
    default_seed: u64,
) -> Result<std::ops::RangeInclusive<u64>> {
    match fields.iter().find(|&&(k, _)| k == "seed") {
        Some(&(_, v)) => {
            let (lo, hi) = parse_u64_range(v)?;
            Ok(lo..=hi)
        }
        None => Ok(default_seed..=default_seed),
    }
}

fn random_regular(n: usize, r: usize, seed: u64) -> Result<Graph> {
    if r >= n || !(n * r).is_multiple_of(2) {
        return Err(Error::InfeasibleSpec(format!(
            "random_regular needs r < n and n*r even, got n={n}, r={r}"
        )));
    }
    let mut rng = SplitMix64::new(seed);
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, r)).collect();
    for _ in 0..GENERATION_ATTEMPT_CAP {
        rng.shuffle(&mut stubs);
        let pairs: Vec<(usize, usize)> = stubs.chunks_exact(2).map(|c| (c[0], c[1])).collect();
        if let Some(g) = accept_sample(n, &pairs)? {
            return Ok(g);
        }
    }
    Err(Error::GenerationExhausted { attempts: GENERATION_ATTEMPT_CAP })
}

fn random_biregular(n1: usize, n2: usize, r1: usize, r2: usize, seed: u64) -> Result<Graph> {
    if n1 * r1 != n2 * r2 || r1 > n2 || r2 > n1 {
        return Err(Error::InfeasibleSpec(format!(
            "random_biregular needs n1*r1 = n2*r2, r1 <= n2, r2 <= n1; \
             got n1={n1}, n2={n2}, r1={r1}, r2={r2}"
        )));
    }
    let n = n1 + n2;
    let mut rng = SplitMix64::new(seed);
    let left: Vec<usize> = (0..n1).flat_map(|v| std::iter::repeat_n(v, r1)).collect();
    let mut right: Vec<usize> = (0..n2).flat_map(|v| std::iter::repeat_n(n1 + v, r2)).collect();
    for _ in 0..GENERATION_ATTEMPT_CAP {
        rng.shuffle(&mut right);
        let pairs: Vec<(usize, usize)> =
            left.iter().copied().zip(right.iter().copied()).collect();
        if let Some(g) = accept_sample(n, &pairs)? {
            return Ok(g);
        }
    }
    Err(Error::GenerationExhausted { attempts: GENERATION_ATTEMPT_CAP })
}

/// Whole-sample acceptance: `Ok(None)` rejects (loop, repeat, disconnected).
fn accept_sample(n: usize, pairs: &[(usize, usize)]) -> Result<Option<Graph>> {
    match Graph::from_edge_list(n, pairs) {
        Ok(g) if g.is_connected() => Ok(Some(g)),
        Ok(_) | Err(Error::SelfLoop(_)) | Err(Error::DuplicateEdge(_, _)) => Ok(None),
        Err(e) => Err(e),
    }
}
