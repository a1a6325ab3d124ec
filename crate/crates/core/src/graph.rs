//! Simple undirected graphs, regularity classification, and the derived
//! constructions `L(G)`, `R(G)`, `Q(G)`.
//!
//! Edges are stored canonically: each pair as `(u, v)` with `u < v`, sorted
//! lexicographically, and the position of a pair in that list is its edge
//! index. Derived constructions index new vertices by edge index (originals
//! first, then `w_i` at `n + i`), so all derived spectra are reproducible.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A simple undirected graph (no loops, no multi-edges).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

/// Degree structure of a graph together with its connectivity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityClass {
    pub kind: RegularityKind,
    pub connected: bool,
}

/// Regular, semiregular-bipartite, or neither.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RegularityKind {
    /// Every vertex has degree `r`.
    Regular { r: usize },
    /// Bipartite with all part-1 degrees `r1` and all part-2 degrees `r2`;
    /// by convention `r1 >= r2` and part 1 is the higher-degree part.
    Semiregular {
        r1: usize,
        r2: usize,
        part1: Vec<usize>,
        part2: Vec<usize>,
    },
    Irregular,
}

impl RegularityKind {
    /// Short display name: `regular(3)`, `semiregular(3,2)` or `irregular`.
    pub fn name(&self) -> String {
        match self {
            RegularityKind::Regular { r } => format!("regular({r})"),
            RegularityKind::Semiregular { r1, r2, .. } => format!("semiregular({r1},{r2})"),
            RegularityKind::Irregular => "irregular".into(),
        }
    }
}

impl Graph {
    /// Builds a graph from an edge list, validating and canonicalizing.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, order: n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, order: n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list; the index of a pair is its edge index.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// True when the graph has at most one connected component.
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// True when the graph admits a proper 2-coloring (no odd cycle).
    pub fn is_bipartite(&self) -> bool {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(true);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let cv = color[v].unwrap();
                for &w in &self.adj[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cv);
                            stack.push(w);
                        }
                        Some(cw) if cw == cv => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut components = 0;
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            components += 1;
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        components
    }

    /// Classifies the degree structure: regular, semiregular bipartite
    /// (constant degree per part, parts reported with the higher degree
    /// first), or irregular. The empty and edgeless graphs are `Regular(0)`.
    pub fn classify(&self) -> RegularityClass {
        let connected = self.is_connected();
        let degrees = self.degrees();
        if degrees.iter().all(|&d| d == degrees.first().copied().unwrap_or(0)) {
            let r = degrees.first().copied().unwrap_or(0);
            return RegularityClass {
                kind: RegularityKind::Regular { r },
                connected,
            };
        }
        match self.semiregular_parts(&degrees) {
            Some((r1, r2, part1, part2)) => RegularityClass {
                kind: RegularityKind::Semiregular { r1, r2, part1, part2 },
                connected,
            },
            None => RegularityClass {
                kind: RegularityKind::Irregular,
                connected,
            },
        }
    }

    /// Attempts a 2-coloring with uniform degree per color class, orienting
    /// each component so the globally higher degree lands in part 1.
    fn semiregular_parts(
        &self,
        degrees: &[usize],
    ) -> Option<(usize, usize, Vec<usize>, Vec<usize>)> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        // Per-component color classes before global orientation.
        let mut pair: Option<(usize, usize)> = None; // (high, low) degrees
        let mut part1 = Vec::new();
        let mut part2 = Vec::new();
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(true);
            let mut class_a = vec![start];
            let mut class_b = Vec::new();
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let cv = color[v].unwrap();
                for &w in &self.adj[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cv);
                            if !cv {
                                class_a.push(w);
                            } else {
                                class_b.push(w);
                            }
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cv => return None, // odd cycle
                        Some(_) => {}
                    }
                }
            }
            let da = uniform_degree(&class_a, degrees)?;
            let db = uniform_degree(&class_b, degrees)?;
            let (hi, lo) = (da.max(db), da.min(db));
            match pair {
                None => pair = Some((hi, lo)),
                Some(p) if p != (hi, lo) => return None,
                Some(_) => {}
            }
            // Isolated vertices form a class of their own with degree 0 and
            // an empty partner class; they can only join a (0, 0) pair,
            // which the all-equal check already classified as regular.
            if da >= db {
                part1.extend(&class_a);
                part2.extend(&class_b);
            } else {
                part1.extend(&class_b);
                part2.extend(&class_a);
            }
        }
        let (r1, r2) = pair?;
        part1.sort_unstable();
        part2.sort_unstable();
        Some((r1, r2, part1, part2))
    }

    /// Line graph: vertex `i` is edge `i` of this graph; two vertices are
    /// adjacent iff the corresponding edges share exactly one endpoint.
    pub fn line_graph(&self) -> Result<Graph> {
        let m = self.size();
        if m == 0 {
            return Err(Error::EmptyEdgeSet);
        }
        // Enumerate incident edge pairs per vertex; in a simple graph two
        // distinct edges share at most one endpoint, so each adjacency is
        // produced exactly once (at the shared vertex).
        let mut incident = vec![Vec::new(); self.n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
        }
        let mut pairs = Vec::new();
        for list in &incident {
            for (k, &a) in list.iter().enumerate() {
                for &b in &list[k + 1..] {
                    pairs.push((a, b));
                }
            }
        }
        Graph::from_edge_list(m, &pairs)
    }

    /// R-graph: keeps the original graph and adds, for each edge
    /// `e_i = uv`, a new vertex `w_i` (at index `n + i`) joined to `u` and
    /// `v`. Result: `n + m` vertices, `3m` edges.
    pub fn r_graph(&self) -> Graph {
        let n = self.n;
        let mut pairs = self.edges.clone();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            pairs.push((u, n + i));
            pairs.push((v, n + i));
        }
        Graph::from_edge_list(n + self.size(), &pairs)
            .expect("derived construction preserves simplicity")
    }

    /// Q-graph: replaces each edge `e_i = uv` by the path `u – w_i – v`
    /// (`w_i` at index `n + i`) and joins `w_i ~ w_j` whenever `e_i` and
    /// `e_j` are adjacent. Result: `n + m` vertices, `2m + |E(L(G))|` edges.
    pub fn q_graph(&self) -> Graph {
        let n = self.n;
        let mut pairs = Vec::with_capacity(2 * self.size());
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            pairs.push((u, n + i));
            pairs.push((v, n + i));
        }
        let mut incident = vec![Vec::new(); self.n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
        }
        for list in &incident {
            for (k, &a) in list.iter().enumerate() {
                for &b in &list[k + 1..] {
                    pairs.push((n + a, n + b));
                }
            }
        }
        Graph::from_edge_list(n + self.size(), &pairs)
            .expect("derived construction preserves simplicity")
    }
}

fn uniform_degree(class: &[usize], degrees: &[usize]) -> Option<usize> {
    let mut iter = class.iter();
    let first = match iter.next() {
        Some(&v) => degrees[v],
        // An empty color class (isolated-vertex component) pairs its vertex
        // degree with 0.
        None => 0,
    };
    if iter.all(|&v| degrees[v] == first) {
        Some(first)
    } else {
        None
    }
}
