//! Exhaustive enumeration of small graphs and the empirical `pdreg(n)`.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::betti::{initial_betti_table, pd_reg, PdRegPair};
use crate::error::{Error, Result};
use crate::families::{pdreg_closed_form, pdreg_connected_closed_form};
use crate::field::Field;
use crate::graph::Graph;
use crate::theorems::{CheckReport, Counterexample};

/// Largest `n` for exhaustive enumeration.
pub const MAX_EXHAUSTIVE_N: usize = 7;

fn check_budget(n: usize) -> Result<()> {
    if n == 0 || n > MAX_EXHAUSTIVE_N {
        return Err(Error::Budget(format!(
            "exhaustive enumeration covers 1 <= n <= {MAX_EXHAUSTIVE_N}, got {n}"
        )));
    }
    Ok(())
}

/// Graph on `[n]` whose upper-triangle pairs are switched on by the bits of `mask`, pairs
/// ordered `(1,2), (1,3), (2,3), (1,4), …`.
fn graph_from_mask(n: usize, mask: u32) -> Graph {
    let mut rows = vec![0u32; n];
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> bit & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    Graph::from_rows(rows)
}

/// Canonical forms of all graphs on `[n]`, isolated vertices allowed, sorted. Built by
/// adding a vertex with every possible neighbourhood to the classes on `n - 1` vertices.
fn all_classes(n: usize) -> Vec<Graph> {
    let mut classes = vec![Graph::from_rows(Vec::new())];
    for k in 1..=n {
        let next: HashSet<Graph> = classes
            .par_iter()
            .flat_map_iter(|g| {
                (0u32..1 << (k - 1)).map(move |nbrs| {
                    let mut rows = g.rows().to_vec();
                    for (i, row) in rows.iter_mut().enumerate() {
                        *row |= (nbrs >> i & 1) << (k - 1);
                    }
                    rows.push(nbrs);
                    Graph::from_rows(rows).canonical_form()
                })
            })
            .collect();
        classes = next.into_iter().collect();
        classes.sort_unstable();
    }
    classes
}

/// All graphs on `[n]` without isolated vertices, optionally only connected ones, and
/// optionally one canonical form per isomorphism class. Labelled graphs come in mask
/// order; classes come sorted.
pub fn enumerate_graphs(
    n: usize,
    dedup: bool,
    connected_only: bool,
) -> Result<Box<dyn Iterator<Item = Graph> + Send>> {
    check_budget(n)?;
    let keep = move |g: &Graph| !g.has_isolated_vertices() && (!connected_only || g.is_connected());
    if dedup {
        return Ok(Box::new(all_classes(n).into_iter().filter(keep)));
    }
    let pairs = n * (n - 1) / 2;
    Ok(Box::new(
        (0u32..1 << pairs)
            .map(move |m| graph_from_mask(n, m))
            .filter(keep),
    ))
}

/// One enumerated graph with its invariants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasRecord {
    /// Canonical form.
    #[serde(with = "crate::graph6::serde_string")]
    pub graph: Graph,
    pub pd: u32,
    pub reg: u32,
    pub connected: bool,
    pub components: usize,
}

impl AtlasRecord {
    pub fn of(g: &Graph, field: Field) -> Result<Self> {
        let pair = pd_reg(g, field)?;
        Ok(AtlasRecord {
            graph: g.canonical_form(),
            pd: pair.p,
            reg: pair.r,
            connected: g.is_connected(),
            components: g.connected_components().len(),
        })
    }

    pub fn pair(&self) -> PdRegPair {
        PdRegPair::new(self.pd, self.reg)
    }
}

/// A set of `(pd, reg)` pairs with one witness per pair, the least canonical form seen.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdRegSet {
    pub n: usize,
    pub pairs: BTreeSet<PdRegPair>,
    #[serde(with = "witness_list")]
    pub witnesses: BTreeMap<PdRegPair, Graph>,
}

impl PdRegSet {
    pub fn new(n: usize) -> Self {
        PdRegSet {
            n,
            ..Default::default()
        }
    }

    /// Adds a pair with a canonical witness, keeping the least witness per pair.
    pub fn insert(&mut self, pair: PdRegPair, canonical: &Graph) {
        self.pairs.insert(pair);
        self.witnesses
            .entry(pair)
            .and_modify(|w| {
                if canonical < w {
                    *w = canonical.clone();
                }
            })
            .or_insert_with(|| canonical.clone());
    }

    /// The pairs with `reg = n - 1`.
    pub fn undetermined_slice(&self) -> BTreeSet<PdRegPair> {
        self.pairs
            .iter()
            .copied()
            .filter(|q| q.r as usize + 1 == self.n)
            .collect()
    }
}

mod witness_list {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::betti::PdRegPair;
    use crate::graph::Graph;

    #[derive(Serialize, Deserialize)]
    struct Witness {
        p: u32,
        r: u32,
        graph6: String,
    }

    pub fn serialize<S: Serializer>(
        map: &BTreeMap<PdRegPair, Graph>,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        let list: Vec<Witness> = map
            .iter()
            .map(|(q, g)| Witness {
                p: q.p,
                r: q.r,
                graph6: g.to_graph6(),
            })
            .collect();
        list.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<BTreeMap<PdRegPair, Graph>, D::Error> {
        Vec::<Witness>::deserialize(d)?
            .into_iter()
            .map(|w| {
                let g = Graph::from_graph6(&w.graph6).map_err(serde::de::Error::custom)?;
                Ok((PdRegPair::new(w.p, w.r), g))
            })
            .collect()
    }
}

/// Empirical `pdreg(n)`, its connected part, and `A_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Atlas {
    pub n: usize,
    pub field: Field,
    pub graphs: usize,
    pub all: PdRegSet,
    pub connected: PdRegSet,
    pub undetermined: BTreeSet<PdRegPair>,
    pub records: Vec<AtlasRecord>,
}

/// Folds records computed from `graphs` into an [`Atlas`]. The result does not depend
/// on the order of `graphs` or on the number of workers.
pub fn atlas_from_graphs(n: usize, graphs: &[Graph], field: Field) -> Result<Atlas> {
    let records = graphs
        .par_iter()
        .map(|g| AtlasRecord::of(g, field))
        .collect::<Result<Vec<_>>>()?;
    let mut all = PdRegSet::new(n);
    let mut connected = PdRegSet::new(n);
    for rec in &records {
        all.insert(rec.pair(), &rec.graph);
        if rec.connected {
            connected.insert(rec.pair(), &rec.graph);
        }
    }
    let undetermined = all.undetermined_slice();
    Ok(Atlas {
        n,
        field,
        graphs: records.len(),
        all,
        connected,
        undetermined,
        records,
    })
}

/// Runs the atlas over all graphs on `n` non-isolated vertices, one per isomorphism
/// class when `dedup` is set.
pub fn compute_atlas(n: usize, field: Field, dedup: bool) -> Result<Atlas> {
    let graphs: Vec<Graph> = enumerate_graphs(n, dedup, false)?.collect();
    atlas_from_graphs(n, &graphs, field)
}

fn pairs_value(set: &BTreeSet<PdRegPair>) -> serde_json::Value {
    json!(set.iter().map(|q| [q.p, q.r]).collect::<Vec<_>>())
}

/// Compares `empirical` with `closed ∪ (r = n - 1 slice of empirical)` and describes the
/// first discrepancy.
fn compare_with_closed_form(
    empirical: &PdRegSet,
    closed: &BTreeSet<PdRegPair>,
) -> Option<Counterexample> {
    let mut expected = closed.clone();
    expected.extend(empirical.undetermined_slice());
    if let Some(extra) = empirical.pairs.difference(&expected).next() {
        return Some(Counterexample {
            graph6: empirical.witnesses.get(extra).map(Graph::to_graph6),
            details: format!("{extra} occurs but is outside the closed form"),
        });
    }
    expected
        .difference(&empirical.pairs)
        .next()
        .map(|missing| Counterexample {
            graph6: None,
            details: format!("{missing} is in the closed form but no graph attains it"),
        })
}

/// Checks that the empirical `pdreg(n)` outside its `r = n - 1` slice is the closed form,
/// and likewise for connected graphs.
pub fn verify_main_theorem(n: usize, field: Field) -> Result<CheckReport> {
    let atlas = compute_atlas(n, field, true)?;
    verify_atlas(&atlas)
}

/// [`verify_main_theorem`] on a precomputed atlas.
pub fn verify_atlas(atlas: &Atlas) -> Result<CheckReport> {
    let n = atlas.n;
    let closed = pdreg_closed_form(n)?;
    let closed_connected = pdreg_connected_closed_form(n)?;
    let counterexample = compare_with_closed_form(&atlas.all, &closed)
        .or_else(|| compare_with_closed_form(&atlas.connected, &closed_connected));
    let mut values = BTreeMap::new();
    values.insert("graphs".into(), json!(atlas.graphs));
    values.insert("pdreg".into(), pairs_value(&atlas.all.pairs));
    values.insert("closed_form".into(), pairs_value(&closed));
    values.insert("undetermined".into(), pairs_value(&atlas.undetermined));
    values.insert(
        "pdreg_connected".into(),
        pairs_value(&atlas.connected.pairs),
    );
    values.insert(
        "closed_form_connected".into(),
        pairs_value(&closed_connected),
    );
    Ok(CheckReport {
        check_name: "main_theorem".into(),
        population: format!("all graphs on {n} non-isolated vertices up to isomorphism"),
        passed: counterexample.is_none(),
        counterexample,
        values,
    })
}

/// For every class with `reg = n - 1`: `pd ≤ n`, and `pd ≤ 2n - 7` when `n ≥ 6`.
pub fn probe_conjecture(n: usize, field: Field) -> Result<CheckReport> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "the probe needs n >= 3, got {n}"
        )));
    }
    let atlas = compute_atlas(n, field, true)?;
    Ok(probe_atlas(&atlas))
}

/// [`probe_conjecture`] on a precomputed atlas.
pub fn probe_atlas(atlas: &Atlas) -> CheckReport {
    let n = atlas.n as u32;
    let ceiling = if n >= 6 { n.min(2 * n - 7) } else { n };
    let slice: Vec<&AtlasRecord> = atlas.records.iter().filter(|r| r.reg + 1 == n).collect();
    let max_pd = slice.iter().map(|r| r.pd).max();
    let violation = slice
        .iter()
        .filter(|r| r.pd > ceiling)
        .min_by(|a, b| a.graph.cmp(&b.graph));
    let mut values = BTreeMap::new();
    values.insert("classes_with_reg_n_minus_1".into(), json!(slice.len()));
    values.insert("max_pd".into(), json!(max_pd));
    values.insert("ceiling".into(), json!(ceiling));
    values.insert("undetermined".into(), pairs_value(&atlas.undetermined));
    CheckReport {
        check_name: "conjecture".into(),
        population: format!("graphs on {n} non-isolated vertices with reg = {}", n - 1),
        passed: violation.is_none(),
        counterexample: violation.map(|r| Counterexample {
            graph6: Some(r.graph.to_graph6()),
            details: format!("pd {} exceeds {ceiling}", r.pd),
        }),
        values,
    }
}

/// Compares the Betti tables of `in(J_G)` over ℚ and over `other` for every class on
/// `n` vertices; any difference is reported as a failure.
pub fn characteristic_shadow(n: usize, other: Field) -> Result<CheckReport> {
    let graphs: Vec<Graph> = enumerate_graphs(n, true, false)?.collect();
    let differing = graphs
        .par_iter()
        .map(|g| {
            let a = initial_betti_table(g, Field::Rationals)?;
            let b = initial_betti_table(g, other)?;
            Ok((a.entries() != b.entries()).then(|| g.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    let differing: Vec<Graph> = differing.into_iter().flatten().collect();
    let mut values = BTreeMap::new();
    values.insert("graphs".into(), json!(graphs.len()));
    values.insert(
        "differing".into(),
        json!(differing.iter().map(Graph::to_graph6).collect::<Vec<_>>()),
    );
    Ok(CheckReport {
        check_name: format!("characteristic_shadow_{other}"),
        population: format!("all graphs on {n} non-isolated vertices up to isomorphism"),
        passed: differing.is_empty(),
        counterexample: differing.first().map(|g| Counterexample {
            graph6: Some(g.to_graph6()),
            details: format!("Betti table over {other} differs from the one over q"),
        }),
        values,
    })
}
