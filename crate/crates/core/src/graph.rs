//! Finite simple graphs on vertices labelled `1..=n`, stored as adjacency bit rows.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported vertex count. `2n` monomial slots must fit one `u64`.
pub const MAX_VERTICES: usize = 31;

/// A set of vertices. Bit `k` stands for vertex `k + 1`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u32) -> Self {
        VertexSet(bits)
    }

    /// All of `1..=n`.
    pub fn full(n: usize) -> Self {
        if n >= 32 {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!((1..=32).contains(&v));
        VertexSet(1 << (v - 1))
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        vertices
            .into_iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.with(v))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=32).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1 << (v - 1)))
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << (v - 1)))
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest vertex label in the set.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Vertex labels in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(v + 1)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet::from_vertices(iter)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardKind {
    Complete,
    Path,
    Isolated,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexKind {
    Simplicial,
    Internal,
}

/// A simple undirected graph on the vertices `1..=n`.
///
/// Row `v - 1` holds the neighbourhood of `v`; bit `u - 1` is set iff `{u, v}` is an edge.
/// Rows are symmetric and the diagonal is zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    rows: Vec<u32>,
}

/// One way of writing a connected graph as `G_1 ∪_v G_2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingSplit {
    pub first: Graph,
    pub second: Graph,
    /// Labels in the original graph of the vertices of `first` and `second`.
    pub first_vertices: VertexSet,
    pub second_vertices: VertexSet,
    /// The shared vertex, as a label of the original graph.
    pub vertex: usize,
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::TooManyVertices(n, MAX_VERTICES))
    } else {
        Ok(())
    }
}

impl Graph {
    /// `n` vertices and no edges. `n = 0` is allowed here; the empty graph only
    /// shows up as an intermediate value.
    pub fn empty(n: usize) -> Result<Self> {
        check_size(n)?;
        Ok(Graph {
            n,
            rows: vec![0; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    pub fn standard(kind: StandardKind, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("standard graphs need n >= 1".into()));
        }
        let mut g = Graph::empty(n)?;
        match kind {
            StandardKind::Complete => {
                for v in 1..=n {
                    g.rows[v - 1] = VertexSet::full(n).without(v).bits();
                }
            }
            StandardKind::Path => {
                for v in 1..n {
                    g.set_edge(v, v + 1);
                }
            }
            StandardKind::Isolated => {}
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        Graph::standard(StandardKind::Complete, n)
    }

    pub fn path(n: usize) -> Result<Self> {
        Graph::standard(StandardKind::Path, n)
    }

    pub fn isolated(n: usize) -> Result<Self> {
        Graph::standard(StandardKind::Isolated, n)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument("cycles need n >= 3".into()));
        }
        let mut g = Graph::path(n)?;
        g.set_edge(n, 1);
        Ok(g)
    }

    /// `K_{1,k}` with centre `1`.
    pub fn star(leaves: usize) -> Result<Self> {
        let mut g = Graph::empty(leaves + 1)?;
        for v in 2..=leaves + 1 {
            g.set_edge(1, v);
        }
        Ok(g)
    }

    pub(crate) fn from_rows(rows: Vec<u32>) -> Self {
        Graph {
            n: rows.len(),
            rows,
        }
    }

    pub(crate) fn rows(&self) -> &[u32] {
        &self.rows
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        self.rows[u - 1] |= 1 << (v - 1);
        self.rows[v - 1] |= 1 << (u - 1);
    }

    fn clear_edge(&mut self, u: usize, v: usize) {
        self.rows[u - 1] &= !(1 << (v - 1));
        self.rows[v - 1] &= !(1 << (u - 1));
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::NoSuchVertex(v, self.n))
        } else {
            Ok(())
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && v >= 1 && u <= self.n && v <= self.n && self.rows[u - 1] & (1 << (v - 1)) != 0
    }

    /// Edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 1..=self.n {
            for j in VertexSet(self.rows[i - 1]).iter().filter(|&j| j > i) {
                out.push((i, j));
            }
        }
        out
    }

    /// `N_G(v)`. Panics if `v` is not a vertex.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v - 1])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v - 1].count_ones() as usize
    }

    pub fn is_clique(&self, w: VertexSet) -> bool {
        w.iter().all(|v| w.without(v).is_subset(self.neighbors(v)))
    }

    pub fn is_complete(&self) -> bool {
        self.is_clique(self.vertices())
    }

    pub fn has_isolated_vertices(&self) -> bool {
        self.rows.contains(&0)
    }

    /// Vertices with at least one neighbour.
    pub fn non_isolated(&self) -> VertexSet {
        VertexSet::from_vertices((1..=self.n).filter(|&v| self.rows[v - 1] != 0))
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(1, self.vertices()) == self.vertices()
    }

    /// True iff the graph is isomorphic to `P_n`.
    pub fn is_path_graph(&self) -> bool {
        if self.n == 1 {
            return true;
        }
        self.is_connected()
            && self.edge_count() == self.n - 1
            && (1..=self.n).all(|v| self.degree(v) <= 2)
    }

    /// Vertices reachable from `start` inside `within`.
    fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.neighbors(v));
            }
            next = next.intersection(within).difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    /// Components of the subgraph induced on `within`, each listed once, ordered by smallest label.
    pub(crate) fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut remaining = within;
        let mut out = Vec::new();
        while let Some(v) = remaining.first() {
            let comp = self.reach(v, within);
            remaining = remaining.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Concatenates vertex blocks in order, shifting labels.
    pub fn disjoint_union(parts: &[Graph]) -> Result<Graph> {
        if parts.is_empty() {
            return Err(Error::InvalidArgument("disjoint union of no graphs".into()));
        }
        let total: usize = parts.iter().map(|g| g.n).sum();
        check_size(total)?;
        let mut rows = Vec::with_capacity(total);
        let mut offset = 0;
        for g in parts {
            rows.extend(g.rows.iter().map(|r| r << offset));
            offset += g.n;
        }
        Ok(Graph { n: total, rows })
    }

    /// `G_1 * G_2`: the disjoint union plus every edge between the two blocks.
    pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph> {
        if g1.n == 0 || g2.n == 0 {
            return Err(Error::InvalidArgument(
                "join needs two nonempty graphs".into(),
            ));
        }
        let mut g = Graph::disjoint_union(&[g1.clone(), g2.clone()])?;
        let first = VertexSet::full(g1.n).bits();
        let second = VertexSet::full(g.n).bits() & !first;
        for v in 0..g1.n {
            g.rows[v] |= second;
        }
        for v in g1.n..g.n {
            g.rows[v] |= first;
        }
        debug_assert!(g.is_connected() && !g.has_isolated_vertices());
        Ok(g)
    }

    /// `G * K_1`, with the apex labelled `n + 1`.
    pub fn cone(&self) -> Result<Graph> {
        Graph::join(self, &Graph::isolated(1)?)
    }

    /// `G_W`, relabelled `1..=|W|` keeping the order of the original labels.
    pub fn induced_subgraph(&self, w: VertexSet) -> Result<Graph> {
        if w.is_empty() {
            return Err(Error::InvalidArgument(
                "induced subgraph on the empty set".into(),
            ));
        }
        if !w.is_subset(self.vertices()) {
            return Err(Error::InvalidArgument(format!(
                "{w:?} is not a subset of V(G)"
            )));
        }
        let kept = w.to_vec();
        let rows = kept
            .iter()
            .map(|&v| compress(self.rows[v - 1] & w.bits(), w.bits()))
            .collect();
        Ok(Graph {
            n: kept.len(),
            rows,
        })
    }

    /// `G \ v`.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        self.induced_subgraph(self.vertices().without(v))
    }

    /// `G_v`: the neighbourhood of `v` turned into a clique.
    pub fn neighborhood_completion(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let mut g = self.clone();
        g.complete_set(self.neighbors(v));
        Ok(g)
    }

    fn complete_set(&mut self, set: VertexSet) {
        for a in set.iter() {
            self.rows[a - 1] |= set.without(a).bits();
        }
    }

    /// `G \ e`.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NoSuchEdge(u, v));
        }
        let mut g = self.clone();
        g.clear_edge(u, v);
        Ok(g)
    }

    /// `G_e` for `e = {u, v}`: both endpoint neighbourhoods completed into cliques.
    /// `e` itself need not be an edge.
    pub fn edge_completion(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidArgument(
                "edge_completion needs u != v".into(),
            ));
        }
        let mut g = self.clone();
        g.complete_set(self.neighbors(u));
        g.complete_set(self.neighbors(v));
        Ok(g)
    }

    pub fn classify_vertex(&self, v: usize) -> Result<VertexKind> {
        self.check_vertex(v)?;
        Ok(if self.is_clique(self.neighbors(v)) {
            VertexKind::Simplicial
        } else {
            VertexKind::Internal
        })
    }

    /// `ℓ(G)`: the least number of vertices whose removal disconnects the graph.
    /// `K_n` gets `n - 1`. Exhaustive over vertex subsets, so limited to 16 vertices.
    pub fn vertex_connectivity(&self) -> Result<usize> {
        if !self.is_connected() || self.n == 0 {
            return Err(Error::Disconnected);
        }
        if self.n > 16 {
            return Err(Error::Budget(format!(
                "vertex connectivity on {} vertices",
                self.n
            )));
        }
        if self.is_complete() {
            return Ok(self.n - 1);
        }
        let full = self.vertices().bits();
        let mut by_size: Vec<u32> = (0..=full).collect();
        by_size.sort_by_key(|s| (s.count_ones(), *s));
        for cut in by_size {
            let rest = VertexSet(full & !cut);
            if rest.len() >= 2 {
                let start = rest.first().unwrap();
                if self.reach(start, rest) != rest {
                    return Ok(cut.count_ones() as usize);
                }
            }
        }
        unreachable!("a non-complete connected graph has a separating set")
    }

    /// Finds a split `G = G_1 ∪_v G_2` with `v` simplicial in both parts.
    ///
    /// The lowest-labelled valid `v` wins; `first` is the smaller side (ties: the side
    /// holding the smaller label). Returns `None` for disconnected graphs too.
    pub fn decompose_gluing(&self) -> Option<GluingSplit> {
        if !self.is_connected() {
            return None;
        }
        for v in 1..=self.n {
            let rest = self.vertices().without(v);
            let comps = self.components_within(rest);
            if comps.len() != 2 {
                continue;
            }
            let nv = self.neighbors(v);
            if !comps.iter().all(|c| self.is_clique(nv.intersection(*c))) {
                continue;
            }
            let (a, b) = (comps[0], comps[1]);
            let (small, large) = if b.len() < a.len() { (b, a) } else { (a, b) };
            let first_vertices = small.with(v);
            let second_vertices = large.with(v);
            return Some(GluingSplit {
                first: self.induced_subgraph(first_vertices).ok()?,
                second: self.induced_subgraph(second_vertices).ok()?,
                first_vertices,
                second_vertices,
                vertex: v,
            });
        }
        None
    }

    /// Applies a relabelling: old vertex `v` becomes `perm[v - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidArgument("permutation length mismatch".into()));
        }
        let image: VertexSet = perm.iter().copied().collect();
        if image != self.vertices() || perm.contains(&0) {
            return Err(Error::InvalidArgument("not a permutation of 1..=n".into()));
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.set_edge(perm[u - 1], perm[v - 1]);
        }
        Ok(g)
    }
}

/// Packs the bits of `value` selected by `mask` into the low bits.
fn compress(value: u32, mask: u32) -> u32 {
    let mut out = 0;
    let mut k = 0;
    let mut m = mask;
    while m != 0 {
        let bit = m & m.wrapping_neg();
        if value & bit != 0 {
            out |= 1 << k;
        }
        k += 1;
        m &= m - 1;
    }
    out
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
