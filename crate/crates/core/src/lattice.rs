//! The index set `I_{n,d}`, the graph `Γ_{n,d}` on it, and the linear orders
//! `≺_κ` used to enumerate generators.
//!
//! A multi-index `(i₀, i₁, …, i_n)` has `i₀ ∈ {1, 2}` and `i_ν ∈ {1, …, 3d−1}`
//! for `ν ≥ 1`, so `|I_{n,d}| = 2(3d−1)ⁿ`. Two distinct indices are joined by
//! an edge when one dominates the other by at most one in every coordinate.

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One element of `I_{n,d}`; labels a generator `t_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiIndex(pub Vec<u32>);

impl MultiIndex {
    pub fn new(entries: impl Into<Vec<u32>>) -> Self {
        MultiIndex(entries.into())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// Number of base coordinates `n` (the index has `n + 1` entries).
    pub fn n(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_valid_for(&self, n: usize, d: u32) -> bool {
        self.0.len() == n + 1
            && (1..=2).contains(&self.0[0])
            && self.0[1..].iter().all(|&i| (1..3 * d).contains(&i))
    }

    /// Label used in DOT output, e.g. `"1.2"`.
    pub fn dotted(&self) -> String {
        join(&self.0, ".")
    }

    /// Generator name used in serialized presentations, e.g. `"t_1_2"`.
    pub fn generator_name(&self) -> String {
        format!("t_{}", join(&self.0, "_"))
    }

    /// Drops the last coordinate, giving the index of the `n − 1` truncation.
    pub fn truncated(&self) -> MultiIndex {
        MultiIndex(self.0[..self.0.len() - 1].to_vec())
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.0, ","))
    }
}

fn join(entries: &[u32], sep: &str) -> String {
    entries
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

/// Selects the order `≺_κ`. `κ = 0` is the reversed lexicographic order;
/// `κ ≥ 1` sorts by coordinate `κ` ascending and breaks ties with `≺₀`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrderTag(pub usize);

impl OrderTag {
    pub const REVERSE_LEX: OrderTag = OrderTag(0);

    pub fn kappa(self) -> usize {
        self.0
    }
}

pub(crate) fn check_domain(n: usize, d: u32) -> Result<()> {
    if d == 0 {
        return Err(Error::Domain(format!("d must be at least 1 (got {d})")));
    }
    // 2(3d-1)^n must stay addressable.
    let base = 3u64 * d as u64 - 1;
    let mut size: u64 = 2;
    for _ in 0..n {
        size = size
            .checked_mul(base)
            .filter(|&s| s <= 1 << 32)
            .ok_or_else(|| Error::Domain(format!("I_{{{n},{d}}} is too large to enumerate")))?;
    }
    Ok(())
}

/// Total comparison of two multi-indices under `≺_κ`.
pub fn compare(order: OrderTag, a: &MultiIndex, b: &MultiIndex) -> Result<Ordering> {
    if a.0.len() != b.0.len() {
        return Err(Error::Domain(format!(
            "cannot compare {a} and {b}: different lengths"
        )));
    }
    let kappa = order.kappa();
    if kappa >= a.0.len() {
        return Err(Error::Domain(format!(
            "order index κ = {kappa} out of range for n = {}",
            a.n()
        )));
    }
    Ok(compare_unchecked(kappa, a, b))
}

fn compare_unchecked(kappa: usize, a: &MultiIndex, b: &MultiIndex) -> Ordering {
    // ≺₀: lexicographic with `>` inside each coordinate.
    let reverse_lex = b.0.cmp(&a.0);
    if kappa == 0 {
        reverse_lex
    } else {
        a.0[kappa].cmp(&b.0[kappa]).then(reverse_lex)
    }
}

/// All of `I_{n,d}`, ascending under `≺₀`.
pub fn build_index_set(n: usize, d: u32) -> Result<Vec<MultiIndex>> {
    enumerate(n, d, OrderTag::REVERSE_LEX)
}

/// The `≺_κ`-ascending listing of `I_{n,d}`, i.e. the enumeration map `i_κ`.
pub fn enumerate(n: usize, d: u32, order: OrderTag) -> Result<Vec<MultiIndex>> {
    check_domain(n, d)?;
    if order.kappa() > n {
        return Err(Error::Domain(format!(
            "order index κ = {} out of range 0..={n}",
            order.kappa()
        )));
    }
    let top = 3 * d - 1;
    let mut all = vec![MultiIndex(vec![1])];
    all.push(MultiIndex(vec![2]));
    for _ in 0..n {
        all = all
            .into_iter()
            .flat_map(|prefix| {
                (1..=top).map(move |i| {
                    let mut e = prefix.0.clone();
                    e.push(i);
                    MultiIndex(e)
                })
            })
            .collect();
    }
    all.sort_by(|a, b| compare_unchecked(order.kappa(), a, b));
    Ok(all)
}

/// Edge predicate of `Γ_{n,d}`: distinct, and `a − b` or `b − a` lies in `{0,1}` coordinatewise.
pub fn is_edge(a: &MultiIndex, b: &MultiIndex) -> bool {
    if a == b || a.0.len() != b.0.len() {
        return false;
    }
    let dominated = |x: &MultiIndex, y: &MultiIndex| {
        x.0.iter()
            .zip(&y.0)
            .all(|(&xi, &yi)| xi == yi || xi == yi + 1)
    };
    dominated(a, b) || dominated(b, a)
}

/// The graph `Γ_{n,d}`. Vertices are stored in `≺₀` order, so vertex indices
/// compare the same way the multi-indices do.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeGraph {
    pub n: usize,
    pub d: u32,
    pub vertices: Vec<MultiIndex>,
    /// Unordered edges as index pairs `(i, j)` with `i < j`, sorted.
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub vertices: usize,
    pub edges: usize,
    pub connected: bool,
}

pub fn build_graph(n: usize, d: u32) -> Result<LatticeGraph> {
    let vertices = build_index_set(n, d)?;
    let position: HashMap<&MultiIndex, usize> =
        vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();

    // Neighbours dominating `v` are `v + s` for nonzero 0/1 shifts `s`; the
    // dominated ones are found from the other endpoint.
    let width = n + 1;
    let mut edges = Vec::new();
    for (i, v) in vertices.iter().enumerate() {
        for mask in 1u32..(1 << width) {
            let shifted: Vec<u32> = v
                .0
                .iter()
                .enumerate()
                .map(|(k, &e)| e + ((mask >> k) & 1))
                .collect();
            if let Some(&j) = position.get(&MultiIndex(shifted)) {
                edges.push((i.min(j), i.max(j)));
            }
        }
    }
    edges.sort_unstable();
    Ok(LatticeGraph {
        n,
        d,
        vertices,
        edges,
    })
}

impl LatticeGraph {
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn index_of(&self, v: &MultiIndex) -> Option<usize> {
        self.vertices
            .binary_search_by(|probe| compare_unchecked(0, probe, v))
            .ok()
    }

    /// Every triple `i ≺₀ j ≺₀ k` of pairwise adjacent vertices, as vertex indices.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let adj = self.adjacency();
        let mut out = Vec::new();
        for &(i, j) in &self.edges {
            for &k in adj[j].iter().filter(|&&k| k > j) {
                if adj[i].binary_search(&k).is_ok() {
                    out.push([i, j, k]);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Unordered pairs of distinct vertices that are not edges.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let adj = self.adjacency();
        let count = self.vertices.len();
        let mut out = Vec::new();
        for (i, row) in adj.iter().enumerate() {
            for j in (i + 1)..count {
                if row.binary_search(&j).is_err() {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let adj = self.adjacency();
        // Start from (1,…,1), the ≺₀-largest vertex.
        let start = self.vertices.len() - 1;
        let mut seen = vec![false; self.vertices.len()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == self.vertices.len()
    }

    pub fn stats(&self) -> GraphStats {
        GraphStats {
            vertices: self.vertices.len(),
            edges: self.edges.len(),
            connected: self.is_connected(),
        }
    }

    pub fn to_dot(&self) -> String {
        let mut out = format!("graph gamma_{}_{} {{\n", self.n, self.d);
        for v in &self.vertices {
            out.push_str(&format!("  \"{}\";\n", v.dotted()));
        }
        for &(a, b) in &self.edges {
            out.push_str(&format!(
                "  \"{}\" -- \"{}\";\n",
                self.vertices[a].dotted(),
                self.vertices[b].dotted()
            ));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph serializes")
    }
}

pub fn triangles(g: &LatticeGraph) -> Vec<[usize; 3]> {
    g.triangles()
}

pub fn graph_stats(g: &LatticeGraph) -> GraphStats {
    g.stats()
}
