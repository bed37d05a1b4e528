//! Executable checks of the bounds, composition formulas and characterisations for
//! `pd(J_G)` and `reg(J_G)`. Every quantity is recomputed by the engine.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::betti::{pd_reg, PdRegPair};
use crate::error::{Error, Result};
use crate::families::{is_d5_type, join_2k1_apices, D5Reason};
use crate::field::Field;
use crate::graph::{Graph, VertexKind, VertexSet};

/// What went wrong, with the failing graph in graph6 when there is one (a missing pair
/// of a set comparison has none).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph6: Option<String>,
    pub details: String,
}

/// Outcome of one check. `passed == false` always comes with a counterexample.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_name: String,
    pub population: String,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
    pub values: BTreeMap<String, Value>,
}

impl CheckReport {
    pub(crate) fn single(
        name: &str,
        g: &Graph,
        values: BTreeMap<String, Value>,
        failures: Vec<String>,
    ) -> Self {
        let counterexample = (!failures.is_empty()).then(|| Counterexample {
            graph6: Some(g.to_graph6()),
            details: failures.join("; "),
        });
        CheckReport {
            check_name: name.to_string(),
            population: format!("graph {}", g.to_graph6()),
            passed: counterexample.is_none(),
            counterexample,
            values,
        }
    }

    /// Folds per-case reports into one: it passes iff all cases pass, and carries the
    /// first failure in input order.
    pub fn aggregate(name: &str, population: &str, reports: &[CheckReport]) -> CheckReport {
        let failures = reports.iter().filter(|r| !r.passed).count();
        let mut values = BTreeMap::new();
        values.insert("cases".into(), json!(reports.len()));
        values.insert("failures".into(), json!(failures));
        CheckReport {
            check_name: name.to_string(),
            population: population.to_string(),
            passed: failures == 0,
            counterexample: reports.iter().find_map(|r| r.counterexample.clone()),
            values,
        }
    }
}

/// Collects failed clauses of a check.
#[derive(Default)]
struct Clauses {
    failures: Vec<String>,
}

impl Clauses {
    fn require(&mut self, holds: bool, clause: impl FnOnce() -> String) {
        if !holds {
            self.failures.push(clause());
        }
    }
}

fn has_edge(g: &Graph) -> bool {
    g.edge_count() > 0
}

fn pair_value(p: PdRegPair) -> Value {
    json!([p.p, p.r])
}

/// `G` restricted to its non-isolated vertices.
fn strip_isolated(g: &Graph) -> Result<Graph> {
    if !has_edge(g) {
        return Err(Error::Edgeless);
    }
    g.induced_subgraph(g.non_isolated())
}

/// Upper and lower bounds on `pd` and `reg`, the iff clauses for `reg = 2` and `reg = n`,
/// the refined bound `max{n - r, r - 2} ≤ p`, `depth(S/J_G) ≥ 4`, and for connected
/// graphs `p ≥ n - 2` and (non-complete) `p ≥ n + ℓ(G) - 3`. `n` counts non-isolated
/// vertices.
pub fn check_global_bounds(g: &Graph, field: Field) -> Result<CheckReport> {
    let h = strip_isolated(g)?;
    let n = h.vertex_count() as i64;
    let pair = pd_reg(&h, field)?;
    let (p, r) = (pair.p as i64, pair.r as i64);
    let depth = 2 * n - (p + 1);
    let connected = h.is_connected();
    let mut values = BTreeMap::new();
    values.insert("n".into(), json!(n));
    values.insert("pd_reg".into(), pair_value(pair));
    values.insert("depth".into(), json!(depth));
    values.insert("connected".into(), json!(connected));

    let mut c = Clauses::default();
    c.require(2 <= r && r <= n, || format!("reg {r} outside [2, {n}]"));
    c.require((r == 2) == h.is_complete(), || {
        format!("reg = 2 is {} but G = K_n is {}", r == 2, h.is_complete())
    });
    c.require((r == n) == h.is_path_graph(), || {
        format!("reg = n is {} but G = P_n is {}", r == n, h.is_path_graph())
    });
    if r == 2 || r == n {
        c.require(p == n - 2, || {
            format!("extremal reg {r} with pd {p} != n - 2")
        });
    }
    if n >= 3 {
        c.require(p <= 2 * n - 5, || format!("pd {p} > 2n - 5"));
        c.require(depth >= 4, || format!("depth {depth} < 4"));
        if 3 <= r && r < n {
            let lower = (n - r).max(r - 2);
            c.require(lower <= p, || {
                format!("pd {p} < max(n - r, r - 2) = {lower}")
            });
        }
    }
    if connected {
        c.require(p >= n - 2, || format!("connected with pd {p} < n - 2"));
        if !h.is_complete() {
            let ell = h.vertex_connectivity()? as i64;
            values.insert("vertex_connectivity".into(), json!(ell));
            c.require(p >= n + ell - 3, || {
                format!("pd {p} < n + l(G) - 3 = {}", n + ell - 3)
            });
        }
    }
    Ok(CheckReport::single("global_bounds", g, values, c.failures))
}

/// A composition whose `(pd, reg)` is predicted from its parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Composition {
    /// `G_1 ⊔ … ⊔ G_c`, each part with an edge.
    DisjointUnion(Vec<Graph>),
    /// `G_1 * G_2`, not both complete. Only `reg` is predicted.
    Join(Graph, Graph),
    /// `G̃ * K_1` with `G̃` non-complete, on at least two vertices and with an edge.
    /// Only `pd` is predicted.
    Cone(Graph),
    /// A decomposable graph, split by [`Graph::decompose_gluing`].
    Gluing(Graph),
}

/// `reg(J_H)`, or `None` for edgeless `H` where `J_H = 0` drops out of the join formula.
fn join_reg(g: &Graph, field: Field) -> Result<Option<u32>> {
    if has_edge(g) {
        Ok(Some(pd_reg(g, field)?.r))
    } else {
        Ok(None)
    }
}

/// Recomputes the composed graph from scratch and compares against the formula
/// assembled from the parts' invariants.
pub fn check_composition_formulas(case: &Composition, field: Field) -> Result<CheckReport> {
    let mut values = BTreeMap::new();
    let mut c = Clauses::default();
    let (name, whole) = match case {
        Composition::DisjointUnion(parts) => {
            if parts.is_empty() || parts.iter().any(|h| !has_edge(h)) {
                return Err(Error::Precondition(
                    "every part of a disjoint union needs an edge".into(),
                ));
            }
            let whole = Graph::disjoint_union(parts)?;
            let got = pd_reg(&whole, field)?;
            let pairs = parts
                .iter()
                .map(|h| pd_reg(h, field))
                .collect::<Result<Vec<_>>>()?;
            let k = parts.len() as u32 - 1;
            let pd = pairs.iter().map(|q| q.p).sum::<u32>() + k;
            let reg = pairs.iter().map(|q| q.r).sum::<u32>() - k;
            values.insert(
                "parts".into(),
                Value::Array(pairs.iter().copied().map(pair_value).collect()),
            );
            values.insert("computed".into(), pair_value(got));
            values.insert("predicted".into(), json!([pd, reg]));
            c.require(got == PdRegPair::new(pd, reg), || {
                format!("union gives {got}, formula gives ({pd}, {reg})")
            });
            ("disjoint_union", whole)
        }
        Composition::Join(g1, g2) => {
            if g1.is_complete() && g2.is_complete() {
                return Err(Error::Precondition(
                    "join of two complete graphs is outside the formula".into(),
                ));
            }
            let whole = Graph::join(g1, g2)?;
            let got = pd_reg(&whole, field)?.r;
            let (r1, r2) = (join_reg(g1, field)?, join_reg(g2, field)?);
            let predicted = r1.into_iter().chain(r2).fold(3, u32::max);
            values.insert("part_regs".into(), json!([r1, r2]));
            values.insert("computed".into(), json!(got));
            values.insert("predicted".into(), json!(predicted));
            c.require(got == predicted, || {
                format!("join reg {got}, formula gives {predicted}")
            });
            ("join", whole)
        }
        Composition::Cone(base) => {
            // a cone over K_{n-1} is K_n, one below the connected branch
            if base.vertex_count() < 2 || !has_edge(base) || base.is_complete() {
                return Err(Error::Precondition(
                    "cone base needs two vertices, an edge, and a non-edge".into(),
                ));
            }
            let whole = base.cone()?;
            let n = whole.vertex_count() as u32;
            let got = pd_reg(&whole, field)?.p;
            let inner = pd_reg(base, field)?.p;
            let connected = base.is_connected();
            // with two components n - 2 and n - 3 agree; three or more need n - 2 (3K_2 * K_1)
            let predicted = if connected {
                inner + 2
            } else {
                (inner + 2).max(n - 2)
            };
            values.insert("base_connected".into(), json!(connected));
            values.insert("computed".into(), json!(got));
            values.insert("predicted".into(), json!(predicted));
            c.require(got == predicted, || {
                format!("cone pd {got}, formula gives {predicted}")
            });
            ("cone", whole)
        }
        Composition::Gluing(g) => {
            let split = g
                .decompose_gluing()
                .ok_or_else(|| Error::Precondition("graph is not decomposable".into()))?;
            let got = pd_reg(g, field)?;
            let (a, b) = (pd_reg(&split.first, field)?, pd_reg(&split.second, field)?);
            let predicted = PdRegPair::new(a.p + b.p + 1, a.r + b.r - 1);
            values.insert("vertex".into(), json!(split.vertex));
            values.insert("parts".into(), json!([pair_value(a), pair_value(b)]));
            values.insert("computed".into(), pair_value(got));
            values.insert("predicted".into(), pair_value(predicted));
            c.require(got == predicted, || {
                format!("gluing gives {got}, formula gives {predicted}")
            });
            ("gluing", g.clone())
        }
    };
    Ok(CheckReport::single(name, &whole, values, c.failures))
}

/// Splits `V = A ⊔ B` with every `A`–`B` pair adjacent, both sides nonempty, and
/// `reg(J_{G_A}), reg(J_{G_B}) ≤ 3` (edgeless sides qualify). `A` holds vertex 1.
pub fn reg3_join_factorization(g: &Graph, field: Field) -> Result<Option<(VertexSet, VertexSet)>> {
    let n = g.vertex_count();
    if n < 2 {
        return Ok(None);
    }
    let all = g.vertices();
    let small_reg = |w: VertexSet| -> Result<bool> {
        let h = g.induced_subgraph(w)?;
        Ok(join_reg(&h, field)?.is_none_or(|r| r <= 3))
    };
    for bits in 0u32..1 << (n - 1) {
        let a = VertexSet::from_bits(bits << 1).with(1);
        let b = all.difference(a);
        if b.is_empty() || !a.iter().all(|v| b.is_subset(g.neighbors(v))) {
            continue;
        }
        if small_reg(a)? && small_reg(b)? {
            return Ok(Some((a, b)));
        }
    }
    Ok(None)
}

/// `G = K_r ⊔ K_s` with `r, s ≥ 2`.
fn is_two_cliques(g: &Graph) -> bool {
    let comps = g.connected_components();
    comps.len() == 2 && comps.iter().all(|&c| c.len() >= 2 && g.is_clique(c))
}

/// Both directions of: `pd = 2n - 5` iff `G = G̃ * 2K_1`; `pd = 2n - 6` iff `G` is
/// `D_5`-type; for non-complete `G`, `reg = 3` iff `G = K_r ⊔ K_s` or `G = G_1 * G_2`
/// with `reg(J_{G_i}) ≤ 3`. Also the window `3 ≤ reg ≤ n - 2` when `pd = 2n - 5`, or
/// `pd = 2n - 6` and `n ≥ 6`. Needs `n ≥ 5` and no isolated vertices.
pub fn check_characterizations(g: &Graph, field: Field) -> Result<CheckReport> {
    let n = g.vertex_count() as u32;
    if n < 5 || g.has_isolated_vertices() {
        return Err(Error::Precondition(
            "characterisations need n >= 5 and no isolated vertices".into(),
        ));
    }
    let pair = pd_reg(g, field)?;
    let join2 = join_2k1_apices(g);
    let d5 = is_d5_type(g);
    let mut values = BTreeMap::new();
    values.insert("pd_reg".into(), pair_value(pair));
    values.insert("join_2k1".into(), json!(join2));
    values.insert("d5".into(), json!(d5));

    let mut c = Clauses::default();
    let top = pair.p == 2 * n - 5;
    let next = pair.p == 2 * n - 6;
    c.require(top == join2.is_some(), || {
        format!(
            "pd = 2n - 5 is {top}, *2K_1 factorisation found is {}",
            join2.is_some()
        )
    });
    c.require(next == (d5 != D5Reason::NotD5), || {
        format!("pd = 2n - 6 is {next}, D5 reason {d5:?}")
    });
    if top || (next && n >= 6) {
        c.require(3 <= pair.r && pair.r <= n - 2, || {
            format!("pd {} with reg {} outside [3, n - 2]", pair.p, pair.r)
        });
    }
    if !g.is_complete() {
        let cliques = is_two_cliques(g);
        let factor = if cliques {
            None
        } else {
            reg3_join_factorization(g, field)?
        };
        let characterised = cliques || factor.is_some();
        values.insert("two_cliques".into(), json!(cliques));
        values.insert("reg3_join".into(), json!(factor.map(|(a, b)| [a, b])));
        let is3 = pair.r == 3;
        c.require(is3 == characterised, || {
            format!("reg = 3 is {is3}, characterisation holds is {characterised}")
        });
    }
    Ok(CheckReport::single(
        "characterizations",
        g,
        values,
        c.failures,
    ))
}

/// `reg(J_H)`, reading an edgeless `H` as `reg(S/J_H) + 1 = 1`.
fn reg_or_one(h: &Graph, field: Field) -> Result<u32> {
    Ok(join_reg(h, field)?.unwrap_or(1))
}

/// `reg(J_G) ≤ max{reg(J_{G∖v}), reg(J_{G_v}), reg(J_{G_v∖v}) + 1}` for internal `v`.
/// Edgeless derived graphs enter with regularity 1, as in the exact sequence.
pub fn check_ohtani_inequality(g: &Graph, v: usize, field: Field) -> Result<CheckReport> {
    if g.classify_vertex(v)? != VertexKind::Internal {
        return Err(Error::Precondition(format!("vertex {v} is simplicial")));
    }
    let deleted = g.delete_vertex(v)?;
    let completed = g.neighborhood_completion(v)?;
    let both = completed.delete_vertex(v)?;
    let r = pd_reg(g, field)?.r;
    let r_del = reg_or_one(&deleted, field)?;
    let r_comp = reg_or_one(&completed, field)?;
    let r_both = reg_or_one(&both, field)?;
    let bound = r_del.max(r_comp).max(r_both + 1);
    let mut values = BTreeMap::new();
    values.insert("vertex".into(), json!(v));
    values.insert("reg".into(), json!(r));
    values.insert("reg_deleted".into(), json!(r_del));
    values.insert("reg_completed".into(), json!(r_comp));
    values.insert("reg_completed_deleted".into(), json!(r_both));
    let mut c = Clauses::default();
    c.require(r <= bound, || format!("reg {r} > {bound} at vertex {v}"));
    Ok(CheckReport::single(
        "ohtani_inequality",
        g,
        values,
        c.failures,
    ))
}

/// `reg(J_G) ≤ n + 2 - |W|` for a clique `W` of a connected graph.
pub fn check_clique_bound(g: &Graph, w: VertexSet, field: Field) -> Result<CheckReport> {
    if !g.is_connected() || !has_edge(g) {
        return Err(Error::Disconnected);
    }
    if w.is_empty() || !w.is_subset(g.vertices()) || !g.is_clique(w) {
        return Err(Error::Precondition(format!("{w:?} is not a clique")));
    }
    let r = pd_reg(g, field)?.r as usize;
    let bound = g.vertex_count() + 2 - w.len();
    let mut values = BTreeMap::new();
    values.insert("clique".into(), json!(w));
    values.insert("reg".into(), json!(r));
    values.insert("bound".into(), json!(bound));
    let mut c = Clauses::default();
    c.require(r <= bound, || format!("reg {r} > n + 2 - |W| = {bound}"));
    Ok(CheckReport::single("clique_bound", g, values, c.failures))
}

/// `pd(J_{G_W}) ≤ pd(J_G)` and `reg(J_{G_W}) ≤ reg(J_G)`.
pub fn check_monotonicity(g: &Graph, w: VertexSet, field: Field) -> Result<CheckReport> {
    let sub = g.induced_subgraph(w)?;
    if !has_edge(&sub) {
        return Err(Error::Precondition("induced subgraph is edgeless".into()));
    }
    let (whole, part) = (pd_reg(g, field)?, pd_reg(&sub, field)?);
    let mut values = BTreeMap::new();
    values.insert("subset".into(), json!(w));
    values.insert("pd_reg".into(), pair_value(whole));
    values.insert("induced_pd_reg".into(), pair_value(part));
    let mut c = Clauses::default();
    c.require(part.le(whole), || format!("induced {part} exceeds {whole}"));
    Ok(CheckReport::single("monotonicity", g, values, c.failures))
}

/// Which population checks to run in [`run_suite`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Bounds,
    Characterizations,
    Composition,
    Ohtani,
    Clique,
    Monotonicity,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Bounds,
        Suite::Characterizations,
        Suite::Composition,
        Suite::Ohtani,
        Suite::Clique,
        Suite::Monotonicity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bounds => "bounds",
            Suite::Characterizations => "characterizations",
            Suite::Composition => "composition",
            Suite::Ohtani => "ohtani",
            Suite::Clique => "clique",
            Suite::Monotonicity => "monotonicity",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite `{s}`")))
    }
}

/// Maximal cliques by brute force (fine for the small graphs checked here).
fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let n = g.vertex_count();
    let cliques: Vec<VertexSet> = (1u32..1 << n)
        .map(VertexSet::from_bits)
        .filter(|&w| g.is_clique(w))
        .collect();
    cliques
        .iter()
        .copied()
        .filter(|&w| !cliques.iter().any(|&o| o != w && w.is_subset(o)))
        .collect()
}

/// The cases of `suite` applicable to `g`; graphs outside every precondition give none.
fn suite_cases(g: &Graph, suite: Suite, field: Field) -> Result<Vec<CheckReport>> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    match suite {
        Suite::Bounds => out.push(check_global_bounds(g, field)?),
        Suite::Characterizations => {
            if n >= 5 && !g.has_isolated_vertices() {
                out.push(check_characterizations(g, field)?);
            }
        }
        Suite::Composition => {
            let comps = g.connected_components();
            if comps.len() > 1 && comps.iter().all(|c| c.len() >= 2) {
                let parts = comps
                    .iter()
                    .map(|&c| g.induced_subgraph(c))
                    .collect::<Result<Vec<_>>>()?;
                out.push(check_composition_formulas(
                    &Composition::DisjointUnion(parts),
                    field,
                )?);
            }
            if g.decompose_gluing().is_some() {
                out.push(check_composition_formulas(
                    &Composition::Gluing(g.clone()),
                    field,
                )?);
            }
            if n >= 2 && has_edge(g) && !g.is_complete() {
                out.push(check_composition_formulas(
                    &Composition::Cone(g.clone()),
                    field,
                )?);
            }
        }
        Suite::Ohtani => {
            for v in 1..=n {
                if g.classify_vertex(v)? != VertexKind::Internal {
                    continue;
                }
                out.push(check_ohtani_inequality(g, v, field)?);
            }
        }
        Suite::Clique => {
            if g.is_connected() && has_edge(g) {
                for w in maximal_cliques(g) {
                    out.push(check_clique_bound(g, w, field)?);
                }
            }
        }
        Suite::Monotonicity => {
            for v in 1..=n {
                let w = g.vertices().without(v);
                if !w.is_empty() && has_edge(&g.induced_subgraph(w)?) {
                    out.push(check_monotonicity(g, w, field)?);
                }
            }
        }
    }
    Ok(out)
}

/// Runs `suite` over `graphs` in parallel; the aggregate is independent of scheduling.
pub fn run_suite(
    suite: Suite,
    graphs: &[Graph],
    population: &str,
    field: Field,
) -> Result<CheckReport> {
    let per_graph = graphs
        .par_iter()
        .map(|g| suite_cases(g, suite, field))
        .collect::<Result<Vec<_>>>()?;
    let cases: Vec<CheckReport> = per_graph.into_iter().flatten().collect();
    Ok(CheckReport::aggregate(suite.name(), population, &cases))
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn global_bounds_examples() {
        let k5 = check_global_bounds(&Graph::complete(5).unwrap(), Q).unwrap();
        assert!(k5.passed);
        assert_eq!(k5.values["pd_reg"], json!([3, 2]));
        let p6 = check_global_bounds(&Graph::path(6).unwrap(), Q).unwrap();
        assert!(p6.passed);
        assert_eq!(p6.values["pd_reg"], json!([4, 6]));
        let c5 = check_global_bounds(&Graph::cycle(5).unwrap(), Q).unwrap();
        assert!(c5.passed, "{c5:?}");
        assert_eq!(c5.values["vertex_connectivity"], json!(2));
        let r = c5.values["pd_reg"][1].as_i64().unwrap();
        assert!(2 < r && r < 5);
        assert_eq!(
            check_global_bounds(&Graph::isolated(3).unwrap(), Q),
            Err(Error::Edgeless)
        );
    }

    #[test]
    fn composition_examples() {
        let k2 = Graph::complete(2).unwrap();
        let union = check_composition_formulas(
            &Composition::DisjointUnion(vec![k2.clone(), k2.clone()]),
            Q,
        )
        .unwrap();
        assert!(union.passed);
        assert_eq!(union.values["computed"], json!([1, 3]));
        let join = Composition::Join(Graph::path(3).unwrap(), Graph::isolated(2).unwrap());
        let report = check_composition_formulas(&join, Q).unwrap();
        assert!(report.passed);
        assert_eq!(report.values["predicted"], json!(3));
        let base =
            Graph::disjoint_union(&[Graph::complete(3).unwrap(), Graph::path(2).unwrap()]).unwrap();
        let cone = check_composition_formulas(&Composition::Cone(base), Q).unwrap();
        assert!(cone.passed);
        assert_eq!(cone.values["computed"], json!(4));
        let fan = crate::families::family_clique_fan(5, 4).unwrap();
        assert!(
            check_composition_formulas(&Composition::Gluing(fan), Q)
                .unwrap()
                .passed
        );
        let k4 = Composition::Cone(Graph::complete(4).unwrap());
        assert!(matches!(
            check_composition_formulas(&k4, Q),
            Err(Error::Precondition(_))
        ));
        let both_complete = Composition::Join(k2.clone(), k2);
        assert!(matches!(
            check_composition_formulas(&both_complete, Q),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn characterization_examples() {
        let j = Graph::join(&Graph::path(3).unwrap(), &Graph::isolated(2).unwrap()).unwrap();
        let report = check_characterizations(&j, Q).unwrap();
        assert!(report.passed, "{report:?}");
        assert_eq!(report.values["pd_reg"], json!([5, 3]));
        let gt = crate::families::family_d5(6, 4).unwrap();
        let report = check_characterizations(&gt, Q).unwrap();
        assert!(report.passed);
        assert_eq!(report.values["pd_reg"], json!([6, 4]));
        let c6 = check_characterizations(&Graph::cycle(6).unwrap(), Q).unwrap();
        assert!(c6.passed);
        assert_eq!(c6.values["join_2k1"], Value::Null);
    }

    #[test]
    fn local_inequalities() {
        let p4 = Graph::path(4).unwrap();
        let report = check_ohtani_inequality(&p4, 2, Q).unwrap();
        assert!(report.passed);
        assert_eq!(report.values["reg"], json!(4));
        assert!(matches!(
            check_ohtani_inequality(&p4, 1, Q),
            Err(Error::Precondition(_))
        ));
        let star = Graph::star(4).unwrap();
        let centre = check_ohtani_inequality(&star, 1, Q).unwrap();
        assert!(centre.passed);
        assert_eq!(centre.values["reg_deleted"], json!(1));

        let k5 = Graph::complete(5).unwrap();
        let eq = check_clique_bound(&k5, k5.vertices(), Q).unwrap();
        assert!(eq.passed);
        assert_eq!(eq.values["bound"], json!(2));
        let fan = crate::families::family_clique_fan(6, 3).unwrap();
        assert!(
            check_clique_bound(&fan, VertexSet::from_vertices(1..=5), Q)
                .unwrap()
                .passed
        );
        assert!(check_clique_bound(
            &Graph::path(3).unwrap(),
            VertexSet::from_vertices([1, 3]),
            Q
        )
        .is_err());

        let p5 = Graph::path(5).unwrap();
        let m = check_monotonicity(&p5, VertexSet::from_vertices([1, 2, 3]), Q).unwrap();
        assert!(m.passed);
        assert_eq!(m.values["induced_pd_reg"], json!([1, 3]));
        assert!(check_monotonicity(&k5, VertexSet::from_vertices([1]), Q).is_err());
    }

    #[test]
    fn failing_report_carries_counterexample() {
        let g = Graph::path(3).unwrap();
        let r = CheckReport::single("x", &g, BTreeMap::new(), vec!["broken".into()]);
        assert!(!r.passed);
        assert_eq!(r.counterexample.as_ref().unwrap().details, "broken");
        let agg = CheckReport::aggregate("x", "pop", &[r.clone(), r]);
        assert!(!agg.passed);
        assert_eq!(agg.values["failures"], json!(2));
    }

    #[test]
    fn suites_on_small_graphs() {
        let graphs: Vec<Graph> = [
            Graph::path(5),
            Graph::cycle(5),
            Graph::star(4),
            Graph::complete(4),
        ]
        .into_iter()
        .map(Result::unwrap)
        .collect();
        for suite in Suite::ALL {
            let r = run_suite(suite, &graphs, "sample", Q).unwrap();
            assert!(r.passed, "{suite:?}: {r:?}");
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
    }
}
