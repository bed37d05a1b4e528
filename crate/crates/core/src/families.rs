//! Explicit graph families with prescribed `(pd, reg)` and the recursive realiser for
//! every pair of the closed form of `pdreg(n)`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::betti::{pd_reg, PdRegPair};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graph::{Graph, VertexSet};

fn range_error(what: &str, detail: String) -> Error {
    Error::InvalidArgument(format!("{what}: {detail}"))
}

/// `P_r ⊔ mK_1` (just `P_r` when `m = 0`).
fn path_plus_isolated(r: usize, m: usize) -> Result<Graph> {
    let p = Graph::path(r)?;
    if m == 0 {
        Ok(p)
    } else {
        Graph::disjoint_union(&[p, Graph::isolated(m)?])
    }
}

/// `(P_r ⊔ (n - 2 - r)K_1) * 2K_1`: `pd = 2n - 5`, `reg = r`.
pub fn family_join_2k1(n: usize, r: usize) -> Result<Graph> {
    if n < 5 || r < 3 || r > n - 2 {
        return Err(range_error(
            "family_join_2k1",
            format!("need n >= 5, 3 <= r <= n - 2, got n = {n}, r = {r}"),
        ));
    }
    Graph::join(&path_plus_isolated(r, n - 2 - r)?, &Graph::isolated(2)?)
}

/// A graph with `pd = 2n - 6` and `reg = r`: `(P_r ⊔ (n - r - 3)K_1) * 3K_1` for
/// `r ≤ n - 3` (except `P_3 * 3K_1`), and for `r = n - 2` the graph on the path `1..n-2` with `u = n - 1`
/// adjacent to `1..n-3` and `v = n` adjacent to `1..n-4` and `n - 2`.
pub fn family_d5(n: usize, r: usize) -> Result<Graph> {
    // `P_3 * 3K_1` is `(K_1 * 3K_1) * 2K_1`, whose pd is `2n - 5`
    if n < 5 || r < 3 || r > n - 2 || (r == n - 2 && n < 6) || (r == 3 && n < 7) {
        return Err(range_error("family_d5", format!("need 3 <= r <= n - 2, n >= 7 when r = 3, n >= 6 when r = n - 2, got n = {n}, r = {r}")));
    }
    if r <= n - 3 {
        return Graph::join(&path_plus_isolated(r, n - r - 3)?, &Graph::isolated(3)?);
    }
    let (u, v) = (n - 1, n);
    let mut edges = Vec::new();
    for i in 1..=n - 3 {
        edges.push((i, i + 1));
        edges.push((i, u));
    }
    for i in 1..=n - 4 {
        edges.push((i, v));
    }
    edges.push((n - 2, v));
    Graph::from_edges(n, &edges)
}

/// A graph with `pd = p` and `reg = 3` on `n` vertices, following the induction on `n`:
/// `2K_2`, `(P_2 ⊔ K_1) * K_1`, `P_2 * 2K_1` at `n = 4`; then `*2K_1` and `*3K_1` joins
/// at the top, `K_2 ⊔ K_{n-2}` at `p = n - 3`, and cones in between.
pub fn family_reg3(n: usize, p: usize) -> Result<Graph> {
    Ok(reg3_traced(n, p)?.0)
}

fn reg3_traced(n: usize, p: usize) -> Result<(Graph, Vec<String>)> {
    if n < 4 || p + 3 < n || p > 2 * n - 5 {
        return Err(range_error(
            "family_reg3",
            format!("need n >= 4, n - 3 <= p <= 2n - 5, got n = {n}, p = {p}"),
        ));
    }
    if n == 4 {
        let g = match p {
            1 => Graph::disjoint_union(&[Graph::complete(2)?, Graph::complete(2)?])?,
            2 => Graph::disjoint_union(&[Graph::path(2)?, Graph::isolated(1)?])?.cone()?,
            _ => Graph::join(&Graph::path(2)?, &Graph::isolated(2)?)?,
        };
        return Ok((g, vec![format!("reg3_base(p={p})")]));
    }
    if p == 2 * n - 5 {
        return Ok((family_join_2k1(n, 3)?, vec!["join_2k1".into()]));
    }
    if p == 2 * n - 6 && n >= 7 {
        return Ok((family_d5(n, 3)?, vec!["d5_join_3k1".into()]));
    }
    if p == n - 3 {
        let g = Graph::disjoint_union(&[Graph::complete(2)?, Graph::complete(n - 2)?])?;
        return Ok((g, vec!["two_cliques".into()]));
    }
    let (inner, mut trace) = reg3_traced(n - 1, p - 2)?;
    trace.insert(0, "cone".into());
    Ok((inner.cone()?, trace))
}

/// `K_{n-1}` on `1..n-1` plus the vertex `n` adjacent to `m..n-1`.
pub fn family_clique_fan(n: usize, m: usize) -> Result<Graph> {
    if n < 2 || m < 1 || m > n - 1 {
        return Err(range_error(
            "family_clique_fan",
            format!("need n >= 2, 1 <= m <= n - 1, got n = {n}, m = {m}"),
        ));
    }
    let mut edges = Vec::new();
    for i in 1..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    edges.extend((m..n).map(|i| (i, n)));
    Graph::from_edges(n, &edges)
}

/// A graph with `pd = p` and `reg = n - 2` for `n ≥ 6`, `n - 4 ≤ p ≤ 2n - 5`.
pub fn family_reg_n_minus_2(n: usize, p: usize) -> Result<Graph> {
    Ok(reg_n_minus_2_traced(n, p)?.0)
}

fn reg_n_minus_2_traced(n: usize, p: usize) -> Result<(Graph, &'static str)> {
    if n < 6 || p + 4 < n || p > 2 * n - 5 {
        return Err(range_error(
            "family_reg_n_minus_2",
            format!("need n >= 6, n - 4 <= p <= 2n - 5, got n = {n}, p = {p}"),
        ));
    }
    if p == n - 4 {
        let g = Graph::disjoint_union(&[Graph::path(2)?, Graph::path(2)?, Graph::path(n - 4)?])?;
        return Ok((g, "two_edges_and_path"));
    }
    if p == n - 3 {
        return Ok((
            Graph::disjoint_union(&[Graph::complete(3)?, Graph::path(n - 3)?])?,
            "triangle_and_path",
        ));
    }
    let mut edges: Vec<(usize, usize)> = (1..n - 2).map(|i| (i, i + 1)).collect();
    if p == n - 2 {
        edges.extend([(1, n - 1), (2, n - 1), (2, n), (3, n)]);
        return Ok((Graph::from_edges(n, &edges)?, "two_triangles_on_path"));
    }
    let m = 2 * n - 4 - p;
    edges.extend((m..=n - 2).map(|i| (i, n - 1)));
    edges.extend((1..=n - 2).map(|i| (i, n)));
    Ok((Graph::from_edges(n, &edges)?, "path_with_two_apices"))
}

/// The pairs of `pdreg(n)` given by the closed form, without the undetermined part
/// `A_n`.
pub fn pdreg_closed_form(n: usize) -> Result<BTreeSet<PdRegPair>> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "the closed form needs n >= 3, got {n}"
        )));
    }
    let n = n as u32;
    let mut out = BTreeSet::new();
    out.insert(PdRegPair::new(n - 2, 2));
    out.insert(PdRegPair::new(n - 2, n));
    for r in 3..=n / 2 + 1 {
        for p in n - r..=2 * n - 5 {
            out.insert(PdRegPair::new(p, r));
        }
    }
    for r in n.div_ceil(2) + 1..=n.saturating_sub(2) {
        for p in r - 2..=2 * n - 5 {
            out.insert(PdRegPair::new(p, r));
        }
    }
    Ok(out)
}

/// The closed form of `pdreg` over connected graphs, without its `r = n - 1` part.
pub fn pdreg_connected_closed_form(n: usize) -> Result<BTreeSet<PdRegPair>> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "the closed form needs n >= 3, got {n}"
        )));
    }
    let n = n as u32;
    let mut out = BTreeSet::new();
    out.insert(PdRegPair::new(n - 2, 2));
    out.insert(PdRegPair::new(n - 2, n));
    for r in 3..=n - 2 {
        for p in n - 2..=2 * n - 5 {
            out.insert(PdRegPair::new(p, r));
        }
    }
    Ok(out)
}

/// A witness graph with the rules used to build it, outermost first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub graph: Graph,
    pub trace: Vec<String>,
}

/// A construction whose `(pd, reg)` was recomputed by the engine.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizeCert {
    #[serde(with = "crate::graph6::serde_string")]
    pub graph: Graph,
    pub claimed: PdRegPair,
    pub construction_trace: Vec<String>,
}

fn check_request(n: usize, p: u32, r: u32, connected: bool) -> Result<()> {
    let pair = PdRegPair::new(p, r);
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "realize needs n >= 3, got {n}"
        )));
    }
    if !pdreg_closed_form(n)?.contains(&pair) {
        if r as usize + 1 == n {
            return Err(Error::Undetermined(r));
        }
        return Err(Error::NotRealizable(p, r, n));
    }
    if connected && (p as usize) + 2 < n {
        return Err(Error::ContradictsConnectedBound(n, n as u32 - 2, p));
    }
    Ok(())
}

/// Builds a witness for `(p, r)` on `n` non-isolated vertices without verifying it.
///
/// Rules, first match wins:
/// 1. `r = 2` gives `K_n`, `r = n` gives `P_n`;
/// 2. `r = 3`: [`family_reg3`];
/// 3. `r = n - 2`: [`family_reg_n_minus_2`];
/// 4. `p = 2n - 5`: [`family_join_2k1`]; `p = 2n - 6`: [`family_d5`];
/// 5. `n - 1 ≤ p ≤ 2n - 7`: cone over a connected witness for `(p - 2, r)` on `n - 1`;
/// 6. `p = n - 2`, `r = n - 3`: `(P_{n-4} ⊔ K_3) * K_1`;
/// 7. `p = n - 2`: `(H ⊔ K_2) * K_1` with `H` a witness for `(n - 5, r - 1)` on `n - 3`;
/// 8. `p ≤ n - 3`: `H ⊔ K_2` with `H` a witness for `(p - 1, r - 1)` on `n - 2`.
pub fn construct(n: usize, p: u32, r: u32, connected_required: bool) -> Result<Construction> {
    check_request(n, p, r, connected_required)?;
    let (graph, trace) = dispatch(n, p as usize, r as usize)?;
    if connected_required && !graph.is_connected() {
        return Err(Error::Precondition(format!(
            "rule {} produced a disconnected graph for ({p}, {r}) on {n} vertices",
            trace.join(" > ")
        )));
    }
    Ok(Construction { graph, trace })
}

fn nested(
    rule: &str,
    inner: (Graph, Vec<String>),
    build: impl FnOnce(Graph) -> Result<Graph>,
) -> Result<(Graph, Vec<String>)> {
    let (g, mut trace) = inner;
    trace.insert(0, rule.to_string());
    Ok((build(g)?, trace))
}

fn dispatch(n: usize, p: usize, r: usize) -> Result<(Graph, Vec<String>)> {
    if r == 2 {
        return Ok((Graph::complete(n)?, vec!["complete".into()]));
    }
    if r == n {
        return Ok((Graph::path(n)?, vec!["path".into()]));
    }
    if r == 3 {
        let (g, mut trace) = reg3_traced(n, p)?;
        trace.insert(0, "reg3".into());
        return Ok((g, trace));
    }
    if r == n - 2 {
        let (g, rule) = reg_n_minus_2_traced(n, p)?;
        return Ok((g, vec!["reg_n_minus_2".into(), rule.into()]));
    }
    if p == 2 * n - 5 {
        return Ok((family_join_2k1(n, r)?, vec!["join_2k1".into()]));
    }
    if p == 2 * n - 6 {
        return Ok((family_d5(n, r)?, vec!["d5_join_3k1".into()]));
    }
    if p + 1 >= n && p + 7 <= 2 * n {
        return nested("cone", dispatch(n - 1, p - 2, r)?, |g| g.cone());
    }
    if p + 2 == n && r + 3 == n {
        let g = Graph::disjoint_union(&[Graph::path(n - 4)?, Graph::complete(3)?])?.cone()?;
        return Ok((g, vec!["cone_over_path_and_triangle".into()]));
    }
    if p + 2 == n {
        return nested(
            "cone_over_union_with_edge",
            dispatch(n - 3, n - 5, r - 1)?,
            |g| Graph::disjoint_union(&[g, Graph::complete(2)?])?.cone(),
        );
    }
    nested("union_with_edge", dispatch(n - 2, p - 1, r - 1)?, |g| {
        Graph::disjoint_union(&[g, Graph::complete(2)?])
    })
}

/// [`construct`] followed by recomputation of `(pd, reg)` over `field`.
pub fn realize(
    n: usize,
    p: u32,
    r: u32,
    connected_required: bool,
    field: Field,
) -> Result<RealizeCert> {
    let Construction { graph, trace } = construct(n, p, r, connected_required)?;
    let computed = pd_reg(&graph, field)?;
    let claimed = PdRegPair::new(p, r);
    if computed != claimed {
        return Err(Error::CertificateMismatch {
            rule: trace.join(" > "),
            claimed: claimed.to_string(),
            computed: computed.to_string(),
        });
    }
    Ok(RealizeCert {
        graph,
        claimed,
        construction_trace: trace,
    })
}

/// Data showing `G ∈ 𝒢_T`: non-adjacent `u, v` with `N(u) = V_0 ∪ V_1`,
/// `N(v) = V_0 ∪ V_2`, `V_1, V_2 ≠ ∅`, `V_0 ⊔ V_1 ⊔ V_2 = T = V ∖ {u, v}`, and every
/// vertex of `V_1` adjacent to every vertex of `V_2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GTWitness {
    pub u: usize,
    pub v: usize,
    pub v0: VertexSet,
    pub v1: VertexSet,
    pub v2: VertexSet,
    pub t: VertexSet,
}

impl GTWitness {
    /// The same witness with the roles of `u` and `v` exchanged.
    pub fn swapped(self) -> GTWitness {
        GTWitness {
            u: self.v,
            v: self.u,
            v1: self.v2,
            v2: self.v1,
            ..self
        }
    }
}

fn gt_witness_for(g: &Graph, u: usize, v: usize) -> Option<GTWitness> {
    let (nu, nv) = (g.neighbors(u), g.neighbors(v));
    let t = g.vertices().without(u).without(v);
    let v0 = nu.intersection(nv);
    let v1 = nu.difference(v0);
    let v2 = nv.difference(v0);
    if v1.is_empty() || v2.is_empty() || v0.union(v1).union(v2) != t {
        return None;
    }
    if !v1.iter().all(|a| v2.is_subset(g.neighbors(a))) {
        return None;
    }
    Some(GTWitness {
        u,
        v,
        v0,
        v1,
        v2,
        t,
    })
}

/// A witness for `G ∈ 𝒢_T` with `u < v`, the first such pair in lexicographic order.
/// The partition is forced by `u` and `v`.
pub fn is_gt_member(g: &Graph) -> Option<GTWitness> {
    let n = g.vertex_count();
    (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .find_map(|(u, v)| gt_witness_for(g, u, v))
}

/// Which clause makes a graph `D_5`-type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum D5Reason {
    /// `G = G̃ * 3K_1`.
    Join3K1,
    /// `G = G̃ * (K_1 ⊔ K_2)`.
    JoinK1K2,
    /// `G ∈ 𝒢_T`.
    Gt,
    NotD5,
}

/// Two non-adjacent vertices adjacent to everything else, i.e. `G = H * 2K_1`.
pub fn join_2k1_apices(g: &Graph) -> Option<(usize, usize)> {
    let n = g.vertex_count();
    if n < 3 {
        return None;
    }
    (1..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
        .find(|&(a, b)| {
            !g.has_edge(a, b)
                && g.neighbors(a) == g.vertices().without(a).without(b)
                && g.neighbors(b) == g.vertices().without(a).without(b)
        })
}

/// Sets `X` with `|X| = 3` whose vertices are adjacent to every vertex outside `X`,
/// together with the number of edges inside `X`.
fn three_apex_sets(g: &Graph) -> impl Iterator<Item = (VertexSet, usize)> + '_ {
    let n = g.vertex_count();
    let all = g.vertices();
    (1..=n).flat_map(move |a| {
        (a + 1..=n).flat_map(move |b| {
            (b + 1..=n).filter_map(move |c| {
                let x = VertexSet::from_vertices([a, b, c]);
                let rest = all.difference(x);
                if rest.is_empty() || !x.iter().all(|w| rest.is_subset(g.neighbors(w))) {
                    return None;
                }
                let inside = [(a, b), (a, c), (b, c)]
                    .iter()
                    .filter(|&&(s, t)| g.has_edge(s, t))
                    .count();
                Some((x, inside))
            })
        })
    })
}

/// Classifies `g` against the `D_5`-type definition. Graphs of the form `H * 2K_1` are
/// excluded before the three clauses are tried.
pub fn is_d5_type(g: &Graph) -> D5Reason {
    if join_2k1_apices(g).is_some() {
        return D5Reason::NotD5;
    }
    let mut has_k1k2 = false;
    for (_, inside) in three_apex_sets(g) {
        match inside {
            0 => return D5Reason::Join3K1,
            1 => has_k1k2 = true,
            _ => {}
        }
    }
    if has_k1k2 {
        return D5Reason::JoinK1K2;
    }
    if is_gt_member(g).is_some() {
        return D5Reason::Gt;
    }
    D5Reason::NotD5
}
