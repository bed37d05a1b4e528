//! Machine-readable reports for the command-line front end.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::atlas::{characteristic_shadow, compute_atlas, probe_atlas, verify_atlas, Atlas};
use crate::betti::{initial_betti_table, PdRegPair};
use crate::error::{Error, Result};
use crate::families::{realize, RealizeCert};
use crate::field::Field;
use crate::graph::Graph;
use crate::theorems::{run_suite, CheckReport, Suite};

pub const SCHEMA_VERSION: u32 = 1;

/// Sizes at which exhaustive commands need an explicit opt-in.
pub const SLOW_FROM_N: usize = 7;

/// Parses an edge list such as `1-2,2-3,3-1`. The vertex count is the largest label
/// unless `n` is given.
pub fn parse_edges(text: &str, n: Option<usize>) -> Result<Graph> {
    let bad = |part: &str| Error::InvalidArgument(format!("bad edge `{part}`, expected `u-v`"));
    let edges = text
        .split(',')
        .map(str::trim)
        .filter(|part| !part.is_empty())
        .map(|part| {
            let (u, v) = part.split_once('-').ok_or_else(|| bad(part))?;
            let u = u.trim().parse::<usize>().map_err(|_| bad(part))?;
            let v = v.trim().parse::<usize>().map_err(|_| bad(part))?;
            Ok((u, v))
        })
        .collect::<Result<Vec<_>>>()?;
    let largest = edges.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0);
    Graph::from_edges(n.unwrap_or(largest), &edges)
}

/// Payload of a report, tagged by command.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Results {
    Compute {
        graph6: String,
        n: usize,
        edges: Vec<(usize, usize)>,
        pd: u32,
        reg: u32,
        depth: u32,
        /// Graded Betti numbers `[i, j, β_{i,j}]` of `S/in(J_G)`, sorted.
        betti: Option<Vec<(u32, u32, u64)>>,
    },
    Construct {
        graph6: String,
        edges: Vec<(usize, usize)>,
        certificate: RealizeCert,
    },
    Checks {
        checks: Vec<CheckReport>,
    },
    Atlas {
        atlas: Atlas,
    },
    Error {
        message: String,
    },
}

/// Wall-clock time spent on the command.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_ms: u64,
}

/// One command's inputs, outcome and results.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub command: String,
    pub inputs: Value,
    pub field: Field,
    pub passed: bool,
    pub results: Results,
    pub timing: Timing,
}

impl ReportDocument {
    fn finish(
        command: &str,
        inputs: Value,
        field: Field,
        start: Instant,
        outcome: Result<(bool, Results)>,
    ) -> Self {
        let (passed, results) = outcome.unwrap_or_else(|e| {
            (
                false,
                Results::Error {
                    message: e.to_string(),
                },
            )
        });
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            inputs,
            field,
            passed,
            results,
            timing: Timing {
                elapsed_ms: start.elapsed().as_millis() as u64,
            },
        }
    }

    /// An input error caught before any command ran.
    pub fn input_error(command: &str, inputs: Value, field: Field, err: &Error) -> Self {
        Self::finish(command, inputs, field, Instant::now(), Err(err.clone()))
    }

    /// `0` when everything passed, `1` when a check or certificate failed, `2` on bad
    /// input.
    pub fn exit_code(&self) -> i32 {
        match &self.results {
            Results::Error { message } if message.starts_with("construction ") => 1,
            Results::Error { .. } => 2,
            _ if self.passed => 0,
            _ => 1,
        }
    }

    /// Plain-text rendering for terminals.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let status = if self.passed { "pass" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{} [{}] {status} ({} ms)",
            self.command, self.field, self.timing.elapsed_ms
        );
        match &self.results {
            Results::Compute {
                graph6,
                n,
                pd,
                reg,
                depth,
                betti,
                ..
            } => {
                let _ = writeln!(out, "graph {graph6} on {n} vertices");
                let _ = writeln!(
                    out,
                    "pd(J_G) = {pd}, reg(J_G) = {reg}, depth(S/J_G) = {depth}"
                );
                if let Some(entries) = betti {
                    let _ = writeln!(out, "Betti numbers of S/in(J_G) (i, j, beta):");
                    for (i, j, b) in entries {
                        let _ = writeln!(out, "  {i:>2} {j:>3} {b:>8}");
                    }
                }
            }
            Results::Construct {
                graph6,
                edges,
                certificate,
            } => {
                let _ = writeln!(out, "graph {graph6} with pd_reg {}", certificate.claimed);
                let _ = writeln!(out, "rules: {}", certificate.construction_trace.join(" > "));
                let list: Vec<String> = edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                let _ = writeln!(out, "edges: {}", list.join(","));
            }
            Results::Checks { checks } => {
                for c in checks {
                    let mark = if c.passed { "pass" } else { "FAIL" };
                    let _ = writeln!(out, "  {mark} {:<24} {}", c.check_name, c.population);
                    if let Some(cx) = &c.counterexample {
                        let g = cx.graph6.as_deref().unwrap_or("-");
                        let _ = writeln!(out, "       counterexample {g}: {}", cx.details);
                    }
                }
            }
            Results::Atlas { atlas } => {
                let _ = writeln!(out, "{} graphs on {} vertices", atlas.graphs, atlas.n);
                let _ = writeln!(out, "  pd  reg  witness  connected");
                for (pair, w) in &atlas.all.witnesses {
                    let conn = atlas.connected.pairs.contains(pair);
                    let _ = writeln!(
                        out,
                        "  {:>2}  {:>3}  {:<8} {}",
                        pair.p,
                        pair.r,
                        w.to_graph6(),
                        if conn { "yes" } else { "no" }
                    );
                }
                let a: Vec<String> = atlas
                    .undetermined
                    .iter()
                    .map(PdRegPair::to_string)
                    .collect();
                let _ = writeln!(out, "reg = n - 1 slice: {}", a.join(" "));
            }
            Results::Error { message } => {
                let _ = writeln!(out, "error: {message}");
            }
        }
        out
    }
}

fn gate(n: usize, slow_ok: bool) -> Result<()> {
    if n >= SLOW_FROM_N && !slow_ok {
        return Err(Error::Budget(format!(
            "n = {n} is slow, pass --slow-ok to run it"
        )));
    }
    Ok(())
}

/// `pd`, `reg` and depth of `J_G`, with the Betti table of `S/in(J_G)` on request.
pub fn run_compute(g: &Graph, field: Field, emit_betti: bool) -> ReportDocument {
    let start = Instant::now();
    let inputs = serde_json::json!({ "graph6": g.to_graph6(), "betti": emit_betti });
    let outcome = initial_betti_table(g, field).map(|table| {
        let pd = table.projective_dimension() - 1;
        let reg = table.regularity() + 1;
        let n = g.vertex_count();
        let results = Results::Compute {
            graph6: g.to_graph6(),
            n,
            edges: g.edges(),
            pd,
            reg,
            depth: 2 * n as u32 - (pd + 1),
            betti: emit_betti.then(|| table.entries().to_vec()),
        };
        (true, results)
    });
    ReportDocument::finish("compute", inputs, field, start, outcome)
}

/// A verified witness for `(p, r)` on `n` vertices.
pub fn run_construct(n: usize, p: u32, r: u32, connected: bool, field: Field) -> ReportDocument {
    let start = Instant::now();
    let inputs = serde_json::json!({ "n": n, "pd": p, "reg": r, "connected": connected });
    let outcome = realize(n, p, r, connected, field).map(|cert| {
        let results = Results::Construct {
            graph6: cert.graph.to_graph6(),
            edges: cert.graph.edges(),
            certificate: cert,
        };
        (true, results)
    });
    ReportDocument::finish("construct", inputs, field, start, outcome)
}

/// What `verify` runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerifyTarget {
    /// Empirical `pdreg(n)` against the closed forms.
    MainTheorem,
    /// Betti tables over `GF(2)` against ℚ.
    Shadow,
    Suite(Suite),
}

impl VerifyTarget {
    /// Everything, with the shadow run only for `n ≤ 5`.
    pub fn all(n: usize) -> Vec<VerifyTarget> {
        let mut out = vec![VerifyTarget::MainTheorem];
        out.extend(Suite::ALL.map(VerifyTarget::Suite));
        if n <= 5 {
            out.push(VerifyTarget::Shadow);
        }
        out
    }
}

impl FromStr for VerifyTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<VerifyTarget> {
        match s {
            "main" | "main_theorem" => Ok(VerifyTarget::MainTheorem),
            "shadow" => Ok(VerifyTarget::Shadow),
            other => other.parse().map(VerifyTarget::Suite),
        }
    }
}

/// Runs `targets` over all graphs on `n` non-isolated vertices up to isomorphism.
pub fn run_verify(
    n: usize,
    targets: &[VerifyTarget],
    field: Field,
    slow_ok: bool,
) -> ReportDocument {
    let start = Instant::now();
    let inputs = serde_json::json!({ "n": n, "targets": targets });
    let outcome = (|| {
        gate(n, slow_ok)?;
        let atlas = compute_atlas(n, field, true)?;
        let graphs: Vec<Graph> = atlas.records.iter().map(|r| r.graph.clone()).collect();
        let population = format!("all graphs on {n} non-isolated vertices up to isomorphism");
        let mut checks = Vec::new();
        for &target in targets {
            checks.push(match target {
                VerifyTarget::MainTheorem => verify_atlas(&atlas)?,
                VerifyTarget::Shadow => characteristic_shadow(n, Field::GF2)?,
                VerifyTarget::Suite(suite) => run_suite(suite, &graphs, &population, field)?,
            });
        }
        let passed = checks.iter().all(|c| c.passed);
        Ok((passed, Results::Checks { checks }))
    })();
    ReportDocument::finish("verify", inputs, field, start, outcome)
}

/// Empirical `pdreg(n)` with witnesses.
pub fn run_atlas(n: usize, field: Field, dedup: bool, slow_ok: bool) -> ReportDocument {
    let start = Instant::now();
    let inputs = serde_json::json!({ "n": n, "dedup": dedup });
    let outcome = gate(n, slow_ok)
        .and_then(|()| compute_atlas(n, field, dedup))
        .map(|atlas| (true, Results::Atlas { atlas }));
    ReportDocument::finish("atlas", inputs, field, start, outcome)
}

/// The `reg = n - 1` ceiling probe.
pub fn run_conjecture(n: usize, field: Field, slow_ok: bool) -> ReportDocument {
    let start = Instant::now();
    let inputs = serde_json::json!({ "n": n });
    let outcome = (|| {
        gate(n, slow_ok)?;
        if n < 3 {
            return Err(Error::InvalidArgument(format!(
                "the probe needs n >= 3, got {n}"
            )));
        }
        let check = probe_atlas(&compute_atlas(n, field, true)?);
        Ok((
            check.passed,
            Results::Checks {
                checks: vec![check],
            },
        ))
    })();
    ReportDocument::finish("conjecture", inputs, field, start, outcome)
}
