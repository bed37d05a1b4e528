//! Squarefree monomial ideals in `S = K[x_1..x_n, y_1..y_n]`, the lex initial ideal of a
//! binomial edge ideal, and the path ideal appearing in the colon `J_{G∖e} : f_e`.
//!
//! Slot `k < n` holds `x_{k+1}`, slot `n + k` holds `y_{k+1}`.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct SquarefreeMonomial(pub u64);

impl SquarefreeMonomial {
    pub const ONE: SquarefreeMonomial = SquarefreeMonomial(0);

    /// `x_i` among `n` vertex labels.
    pub fn x(i: usize, _n: usize) -> Self {
        SquarefreeMonomial(1 << (i - 1))
    }

    /// `y_i` among `n` vertex labels.
    pub fn y(i: usize, n: usize) -> Self {
        SquarefreeMonomial(1 << (n + i - 1))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn degree(self) -> u32 {
        self.0.count_ones()
    }

    pub fn divides(self, other: SquarefreeMonomial) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn times(self, other: SquarefreeMonomial) -> Self {
        SquarefreeMonomial(self.0 | other.0)
    }

    /// Renders the monomial with `x`/`y` names for a graph on `n` vertices.
    pub fn display(self, n: usize) -> String {
        if self.0 == 0 {
            return "1".into();
        }
        let mut parts = Vec::new();
        for k in 0..2 * n {
            if self.0 >> k & 1 == 1 {
                if k < n {
                    parts.push(format!("x{}", k + 1));
                } else {
                    parts.push(format!("y{}", k - n + 1));
                }
            }
        }
        parts.join("*")
    }
}

/// An ideal generated by squarefree monomials, kept as a minimal generating set
/// sorted by mask value.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    num_vars: usize,
    generators: Vec<u64>,
}

/// Drops duplicates and non-minimal masks, sorting the rest.
pub(crate) fn minimalize(mut masks: Vec<u64>) -> Vec<u64> {
    masks.sort_unstable_by_key(|m| (m.count_ones(), *m));
    masks.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(masks.len());
    for m in masks {
        if !kept.iter().any(|&k| k & !m == 0) {
            kept.push(m);
        }
    }
    kept.sort_unstable();
    kept
}

impl MonomialIdeal {
    pub fn new(num_vars: usize, generators: impl IntoIterator<Item = u64>) -> Result<Self> {
        if num_vars > 62 {
            return Err(Error::InvalidArgument(format!(
                "{num_vars} variables exceed 62 slots"
            )));
        }
        let limit = if num_vars == 64 {
            u64::MAX
        } else {
            (1u64 << num_vars) - 1
        };
        let masks: Vec<u64> = generators.into_iter().collect();
        if let Some(bad) = masks.iter().find(|&&m| m & !limit != 0) {
            return Err(Error::InvalidArgument(format!(
                "generator {bad:#x} uses slots beyond {num_vars}"
            )));
        }
        Ok(MonomialIdeal {
            num_vars,
            generators: minimalize(masks),
        })
    }

    pub fn from_monomials(
        num_vars: usize,
        generators: impl IntoIterator<Item = SquarefreeMonomial>,
    ) -> Result<Self> {
        MonomialIdeal::new(num_vars, generators.into_iter().map(|m| m.0))
    }

    pub fn zero(num_vars: usize) -> Result<Self> {
        MonomialIdeal::new(num_vars, [])
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn masks(&self) -> &[u64] {
        &self.generators
    }

    pub fn generators(&self) -> impl Iterator<Item = SquarefreeMonomial> + '_ {
        self.generators.iter().map(|&m| SquarefreeMonomial(m))
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.contains(&0)
    }

    pub fn contains(&self, m: SquarefreeMonomial) -> bool {
        self.generators.iter().any(|&g| g & !m.0 == 0)
    }

    /// Generators of a given degree.
    pub fn of_degree(&self, d: u32) -> impl Iterator<Item = SquarefreeMonomial> + '_ {
        self.generators().filter(move |m| m.degree() == d)
    }

    /// Renders generators as `x`/`y` monomials; assumes `num_vars = 2n`.
    pub fn display(&self) -> String {
        let n = self.num_vars / 2;
        let parts: Vec<String> = self.generators().map(|m| m.display(n)).collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal[{} vars]{}", self.num_vars, self.display())
    }
}

/// Index pairs `(i, j)`, `i < j`, of the generators `x_i y_j - x_j y_i` of `J_G`.
pub fn edge_generators(g: &Graph) -> Vec<(usize, usize)> {
    g.edges()
}

/// A path `i = i_0, …, i_r = j` with `i < j` whose interior vertices all lie outside
/// the interval `[i, j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissiblePath {
    pub vertices: Vec<usize>,
    /// `∏_{interior v > j} x_v · ∏_{interior v < i} y_v`.
    pub monomial: SquarefreeMonomial,
}

impl AdmissiblePath {
    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    /// `u_π · x_i y_j`, the leading term of the Gröbner basis element of this path.
    pub fn leading_term(&self, n: usize) -> SquarefreeMonomial {
        self.monomial
            .times(SquarefreeMonomial::x(self.start(), n))
            .times(SquarefreeMonomial::y(self.end(), n))
    }
}

fn path_weight(interior: VertexSet, i: usize, j: usize, n: usize) -> SquarefreeMonomial {
    interior.iter().fold(SquarefreeMonomial::ONE, |m, v| {
        if v > j {
            m.times(SquarefreeMonomial::x(v, n))
        } else {
            debug_assert!(v < i);
            m.times(SquarefreeMonomial::y(v, n))
        }
    })
}

/// Every admissible path of `g` (no minimality condition imposed). Exponential; meant
/// for small graphs and tests.
pub fn admissible_paths(g: &Graph) -> Vec<AdmissiblePath> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let outside: VertexSet = VertexSet::from_vertices((1..=n).filter(|&v| v < i || v > j));
            let mut stack = vec![i];
            walk_all(g, j, outside, &mut stack, &mut |path| {
                let interior = VertexSet::from_vertices(path[1..path.len() - 1].iter().copied());
                out.push(AdmissiblePath {
                    vertices: path.to_vec(),
                    monomial: path_weight(interior, i, j, n),
                });
            });
        }
    }
    out
}

fn walk_all(
    g: &Graph,
    target: usize,
    allowed: VertexSet,
    stack: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    let cur = *stack.last().unwrap();
    for next in g.neighbors(cur).iter() {
        if next == target {
            stack.push(next);
            emit(stack);
            stack.pop();
        } else if allowed.contains(next) && !stack.contains(&next) {
            stack.push(next);
            walk_all(g, target, allowed, stack, emit);
            stack.pop();
        }
    }
}

/// `in_<(J_G)` for lex with `x_1 > … > x_n > y_1 > … > y_n`, generated by the leading
/// terms `u_π x_i y_j` of all admissible paths `π`.
///
/// The monomial of a path only depends on its set of interior vertices, so the search
/// memoises `(current vertex, visited set)` states.
pub fn initial_ideal(g: &Graph) -> MonomialIdeal {
    let n = g.vertex_count();
    let mut masks = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let outside = VertexSet::from_vertices((1..=n).filter(|&v| v < i || v > j));
            let lead = SquarefreeMonomial::x(i, n).times(SquarefreeMonomial::y(j, n));
            let mut seen = HashSet::new();
            let mut found = HashSet::new();
            interior_sets(g, i, j, outside, VertexSet::EMPTY, &mut seen, &mut found);
            masks.extend(
                found
                    .into_iter()
                    .map(|s| path_weight(s, i, j, n).times(lead).0),
            );
        }
    }
    MonomialIdeal::new(2 * n, masks).expect("2n slots fit")
}

fn interior_sets(
    g: &Graph,
    cur: usize,
    target: usize,
    allowed: VertexSet,
    interior: VertexSet,
    seen: &mut HashSet<(usize, VertexSet)>,
    found: &mut HashSet<VertexSet>,
) {
    if !seen.insert((cur, interior)) {
        return;
    }
    let nbrs = g.neighbors(cur);
    if nbrs.contains(target) {
        found.insert(interior);
    }
    for next in nbrs.intersection(allowed).difference(interior).iter() {
        interior_sets(g, next, target, allowed, interior.with(next), seen, found);
    }
}

/// The ideal `I_G = (g_{P,t})` over paths `P: u, u_1, …, u_s, v` with `s ≥ 1` and
/// `0 ≤ t ≤ s`, where `g_{P,t} = y_{u_1}⋯y_{u_t} x_{u_{t+1}}⋯x_{u_s}`.
pub fn colon_path_generators(g: &Graph, u: usize, v: usize) -> Result<MonomialIdeal> {
    let n = g.vertex_count();
    for w in [u, v] {
        if w == 0 || w > n {
            return Err(Error::NoSuchVertex(w, n));
        }
    }
    if u == v {
        return Err(Error::InvalidArgument("colon ideal needs u != v".into()));
    }
    let allowed = g.vertices().without(u).without(v);
    let mut masks = Vec::new();
    let mut stack = vec![u];
    walk_all(g, v, allowed, &mut stack, &mut |path| {
        let interior = &path[1..path.len() - 1];
        if interior.is_empty() {
            return;
        }
        for t in 0..=interior.len() {
            let mut m = SquarefreeMonomial::ONE;
            for (k, &w) in interior.iter().enumerate() {
                let var = if k < t {
                    SquarefreeMonomial::y(w, n)
                } else {
                    SquarefreeMonomial::x(w, n)
                };
                m = m.times(var);
            }
            masks.push(m.0);
        }
    });
    MonomialIdeal::new(2 * n, masks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize, n: usize) -> u64 {
        SquarefreeMonomial::x(i, n).0
    }

    fn y(i: usize, n: usize) -> u64 {
        SquarefreeMonomial::y(i, n).0
    }

    #[test]
    fn edge_generator_lists() {
        assert_eq!(
            edge_generators(&Graph::path(3).unwrap()),
            vec![(1, 2), (2, 3)]
        );
        assert_eq!(
            edge_generators(&Graph::complete(3).unwrap()),
            vec![(1, 2), (1, 3), (2, 3)]
        );
        assert!(edge_generators(&Graph::isolated(2).unwrap()).is_empty());
    }

    #[test]
    fn initial_ideal_small_cases() {
        let p3 = initial_ideal(&Graph::path(3).unwrap());
        assert_eq!(
            p3,
            MonomialIdeal::new(6, [x(1, 3) | y(2, 3), x(2, 3) | y(3, 3)]).unwrap()
        );
        assert_eq!(
            initial_ideal(&Graph::complete(2).unwrap()),
            MonomialIdeal::new(4, [x(1, 2) | y(2, 2)]).unwrap()
        );
        assert!(initial_ideal(&Graph::isolated(3).unwrap()).is_zero());
    }

    #[test]
    fn initial_ideal_of_bent_path() {
        // edges {1,3}, {2,3}: the admissible path 1-3-2 adds x1 x3 y2
        let g = Graph::from_edges(3, &[(1, 3), (2, 3)]).unwrap();
        let expected = MonomialIdeal::new(
            6,
            [
                x(1, 3) | y(3, 3),
                x(2, 3) | y(3, 3),
                x(1, 3) | x(3, 3) | y(2, 3),
            ],
        )
        .unwrap();
        assert_eq!(initial_ideal(&g), expected);
        assert_eq!(initial_ideal(&g).display(), "(x1*x3*y2, x1*y3, x2*y3)");
    }

    #[test]
    fn initial_ideal_matches_path_listing() {
        let g = Graph::cycle(5).unwrap();
        let n = 5;
        let from_paths = MonomialIdeal::from_monomials(
            2 * n,
            admissible_paths(&g).iter().map(|p| p.leading_term(n)),
        )
        .unwrap();
        assert_eq!(initial_ideal(&g), from_paths);
    }

    #[test]
    fn admissible_path_invariants() {
        let g = Graph::complete(5).unwrap();
        for p in admissible_paths(&g) {
            let (i, j) = (p.start(), p.end());
            assert!(i < j);
            for w in p.vertices.windows(2) {
                assert!(g.has_edge(w[0], w[1]));
            }
            let interior = &p.vertices[1..p.vertices.len() - 1];
            assert!(interior.iter().all(|&v| v < i || v > j));
            let set: HashSet<_> = p.vertices.iter().collect();
            assert_eq!(set.len(), p.vertices.len());
        }
    }

    #[test]
    fn colon_generators() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(
            colon_path_generators(&k3, 1, 2).unwrap(),
            MonomialIdeal::new(6, [x(3, 3), y(3, 3)]).unwrap()
        );
        let p4 = Graph::path(4).unwrap();
        assert_eq!(
            colon_path_generators(&p4, 1, 4).unwrap(),
            MonomialIdeal::new(8, [x(2, 4) | x(3, 4), y(2, 4) | x(3, 4), y(2, 4) | y(3, 4)])
                .unwrap()
        );
        assert!(colon_path_generators(&p4, 2, 2).is_err());
        // no path other than the edge itself
        assert!(colon_path_generators(&Graph::path(2).unwrap(), 1, 2)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn minimalize_keeps_antichain() {
        let i = MonomialIdeal::new(4, [0b0011, 0b0111, 0b0011, 0b1000, 0b1001]).unwrap();
        assert_eq!(i.masks(), &[0b0011, 0b1000]);
        assert!(MonomialIdeal::new(4, [0b10000]).is_err());
        assert!(MonomialIdeal::new(4, [0]).unwrap().is_unit());
    }
}
