//! Graded Betti numbers of squarefree monomial quotients and the `(pd, reg)` of binomial
//! edge ideals.
//!
//! The main engine uses Hochster's formula on the Stanley–Reisner complex;
//! [`betti_table_koszul`] is an independent check through the Koszul complex.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{faces_off_star, homology_from_faces};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graph::Graph;
use crate::ideal::{initial_ideal, MonomialIdeal};
use crate::linalg::{dense_rank, ExactField, Fp};

/// Slot ceiling for the Hochster engine (all `2^slots` restrictions are visited).
pub const MAX_HOCHSTER_SLOTS: usize = 24;
/// Slot ceiling for the Koszul oracle.
pub const MAX_KOSZUL_SLOTS: usize = 16;

/// Graded Betti numbers `β_{i,j}(S/I)`, stored as sorted `(i, j, β)` triples with
/// `β > 0`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    num_vars: usize,
    field: Field,
    entries: Vec<(u32, u32, u64)>,
}

impl BettiTable {
    pub fn from_map(num_vars: usize, field: Field, map: BTreeMap<(u32, u32), u64>) -> Self {
        let entries = map
            .into_iter()
            .filter(|&(_, b)| b > 0)
            .map(|((i, j), b)| (i, j, b))
            .collect();
        BettiTable {
            num_vars,
            field,
            entries,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Nonzero entries sorted by `(i, j)`.
    pub fn entries(&self) -> &[(u32, u32, u64)] {
        &self.entries
    }

    pub fn get(&self, i: u32, j: u32) -> u64 {
        self.entries
            .binary_search_by_key(&(i, j), |&(a, b, _)| (a, b))
            .map_or(0, |k| self.entries[k].2)
    }

    /// Total Betti number `β_i = Σ_j β_{i,j}`.
    pub fn total(&self, i: u32) -> u64 {
        self.entries.iter().filter(|e| e.0 == i).map(|e| e.2).sum()
    }

    /// `pd(S/I)`.
    pub fn projective_dimension(&self) -> u32 {
        self.entries.iter().map(|e| e.0).max().unwrap_or(0)
    }

    /// `reg(S/I)`.
    pub fn regularity(&self) -> u32 {
        self.entries.iter().map(|e| e.1 - e.0).max().unwrap_or(0)
    }

    /// Coefficients of `Σ (-1)^i β_{i,j} t^j`, indexed by `j`.
    pub fn k_polynomial(&self) -> Vec<i64> {
        let top = self.entries.iter().map(|e| e.1 as usize).max().unwrap_or(0);
        let mut coeffs = vec![0i64; top + 1];
        for &(i, j, b) in &self.entries {
            let b = b as i64;
            coeffs[j as usize] += if i % 2 == 0 { b } else { -b };
        }
        coeffs
    }
}

impl fmt::Debug for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BettiTable[{} vars, {}]{:?}",
            self.num_vars, self.field, self.entries
        )
    }
}

/// Renders the table in the usual layout: row `j - i`, column `i`.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pd = self.projective_dimension();
        let reg = self.regularity();
        write!(f, "{:>5}", "")?;
        for i in 0..=pd {
            write!(f, " {i:>5}")?;
        }
        writeln!(f)?;
        for row in 0..=reg {
            write!(f, "{:>4}:", row)?;
            for i in 0..=pd {
                match self.get(i, i + row) {
                    0 => write!(f, " {:>5}", "-")?,
                    b => write!(f, " {b:>5}")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn check_ideal(ideal: &MonomialIdeal, ceiling: usize) -> Result<()> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if ideal.num_vars() > ceiling {
        return Err(Error::Budget(format!(
            "{} slots exceed the ceiling of {ceiling}",
            ideal.num_vars()
        )));
    }
    Ok(())
}

/// `W` can carry homology only if it is a union of generators: a slot of `W` lying in
/// no generator inside `W` is a cone point of `Δ_W`.
fn is_generator_union(generators: &[u64], w: u64) -> bool {
    generators
        .iter()
        .filter(|&&g| g & !w == 0)
        .fold(0, |acc, &g| acc | g)
        == w
}

/// Contributions `(i, |W|, dim)` of one restriction `Δ_W`.
fn hochster_at(generators: &[u64], w: u64, field: Field) -> Vec<(u32, u32, u64)> {
    if w == 0 {
        return vec![(0, 0, 1)];
    }
    let size = w.count_ones();
    // excise the star of the slot lying in the fewest generators
    let inside: Vec<u64> = generators
        .iter()
        .copied()
        .filter(|&g| g & !w == 0)
        .collect();
    let v = (0..64u32)
        .filter(|&b| w >> b & 1 == 1)
        .min_by_key(|&b| inside.iter().filter(|&&g| g >> b & 1 == 1).count())
        .expect("W is nonempty");
    let faces = faces_off_star(&inside, w, v);
    homology_from_faces(&faces, field)
        .into_iter()
        .enumerate()
        .filter(|&(_, h)| h > 0)
        // faces of cardinality k carry H̃_{k-1}, which feeds β_{|W|-k, W}
        .map(|(k, h)| (size - k as u32, size, h))
        .collect()
}

fn accumulate(
    num_vars: usize,
    field: Field,
    parts: impl IntoIterator<Item = (u32, u32, u64)>,
) -> BettiTable {
    let mut map = BTreeMap::new();
    for (i, j, b) in parts {
        *map.entry((i, j)).or_insert(0) += b;
    }
    BettiTable::from_map(num_vars, field, map)
}

/// `β_{i,j}(S/I) = Σ_{|W| = j} dim H̃_{j-i-1}(Δ_W)` over all slot subsets `W`.
pub fn betti_table_hochster(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    check_ideal(ideal, MAX_HOCHSTER_SLOTS)?;
    let gens = ideal.masks();
    let parts: Vec<Vec<(u32, u32, u64)>> = (0..1u32 << ideal.num_vars())
        .into_par_iter()
        .with_min_len(64)
        .map(u64::from)
        .filter(|&w| is_generator_union(gens, w))
        .map(|w| hochster_at(gens, w, field))
        .collect();
    Ok(accumulate(
        ideal.num_vars(),
        field,
        parts.into_iter().flatten(),
    ))
}

/// Same as [`betti_table_hochster`] without the generator-union prefilter.
pub fn betti_table_hochster_unfiltered(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    check_ideal(ideal, MAX_HOCHSTER_SLOTS)?;
    let gens = ideal.masks();
    let parts: Vec<Vec<(u32, u32, u64)>> = (0..1u32 << ideal.num_vars())
        .into_par_iter()
        .with_min_len(64)
        .map(u64::from)
        .map(|w| hochster_at(gens, w, field))
        .collect();
    Ok(accumulate(
        ideal.num_vars(),
        field,
        parts.into_iter().flatten(),
    ))
}

/// Ranks of the Koszul differentials of `S/I` in squarefree multidegree `w`.
///
/// `K_i` in degree `w` has basis `e_F ⊗ x^{w∖F}` over `F ⊆ w`, `|F| = i`, with
/// `x^{w∖F} ∉ I`; `d(e_F) = Σ_{v ∈ F} ± x_v e_{F∖v}`.
fn koszul_at<F: ExactField>(generators: &[u64], w: u64) -> Vec<(u32, u64)> {
    let in_ideal = |m: u64| generators.iter().any(|&g| g & !m == 0);
    let size = w.count_ones() as usize;
    let mut basis: Vec<Vec<u64>> = vec![Vec::new(); size + 1];
    let mut f = w;
    loop {
        if !in_ideal(w & !f) {
            basis[f.count_ones() as usize].push(f);
        }
        if f == 0 {
            break;
        }
        f = (f - 1) & w;
    }
    for layer in &mut basis {
        layer.sort_unstable();
    }
    // rank of d_i: K_i -> K_{i-1}
    let mut ranks = vec![0usize; size + 2];
    for i in 1..=size {
        let (src, dst) = (&basis[i], &basis[i - 1]);
        if src.is_empty() || dst.is_empty() {
            continue;
        }
        let mut rows = vec![vec![F::zero(); src.len()]; dst.len()];
        for (c, &face) in src.iter().enumerate() {
            for v in (0..64).filter(|&v| face >> v & 1 == 1) {
                let smaller = face & !(1u64 << v);
                if let Ok(r) = dst.binary_search(&smaller) {
                    let odd = (face & ((1u64 << v) - 1)).count_ones() % 2 == 1;
                    rows[r][c] = if odd { -F::one() } else { F::one() };
                }
            }
        }
        ranks[i] = dense_rank(rows);
    }
    (0..=size)
        .map(|i| (i as u32, (basis[i].len() - ranks[i] - ranks[i + 1]) as u64))
        .filter(|&(_, b)| b > 0)
        .collect()
}

fn koszul_table<F: ExactField>(ideal: &MonomialIdeal, field: Field) -> BettiTable {
    let gens = ideal.masks();
    let parts: Vec<Vec<(u32, u32, u64)>> = (0..1u64 << ideal.num_vars())
        .into_par_iter()
        .map(|w| {
            let j = w.count_ones();
            koszul_at::<F>(gens, w)
                .into_iter()
                .map(|(i, b)| (i, j, b))
                .collect()
        })
        .collect();
    accumulate(ideal.num_vars(), field, parts.into_iter().flatten())
}

/// Primes the Koszul oracle supports over `GF(p)`.
pub const KOSZUL_PRIMES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 32003];

/// `β_{i,j}(S/I) = dim Tor_i(S/I, K)_j` from the Koszul complex, one squarefree
/// multidegree at a time with dense elimination.
pub fn betti_table_koszul(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    check_ideal(ideal, MAX_KOSZUL_SLOTS)?;
    macro_rules! by_prime {
        ($p:expr; $($q:literal),*) => {
            match $p {
                $($q => Ok(koszul_table::<Fp<$q>>(ideal, field)),)*
                other => Err(Error::InvalidArgument(format!(
                    "the Koszul oracle supports GF(p) for p in {KOSZUL_PRIMES:?}, not {other}"
                ))),
            }
        };
    }
    match field {
        Field::Rationals => Ok(koszul_table::<BigRational>(ideal, field)),
        Field::Prime(p) => by_prime!(p; 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 32003),
    }
}

/// `(proj dim J_G, reg J_G)` of the ideal itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PdRegPair {
    pub p: u32,
    pub r: u32,
}

impl PdRegPair {
    pub fn new(p: u32, r: u32) -> Self {
        PdRegPair { p, r }
    }

    /// Componentwise `≤`.
    pub fn le(self, other: PdRegPair) -> bool {
        self.p <= other.p && self.r <= other.r
    }
}

impl fmt::Display for PdRegPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.r)
    }
}

impl From<(u32, u32)> for PdRegPair {
    fn from((p, r): (u32, u32)) -> Self {
        PdRegPair { p, r }
    }
}

/// Betti table of `S/in(J_G)`.
///
/// Since the lex initial ideal is squarefree, its extremal Betti numbers agree with those
/// of `J_G` (Conca–Varbaro), so `pd` and `reg` read off this table are those of `S/J_G`.
pub fn initial_betti_table(g: &Graph, field: Field) -> Result<BettiTable> {
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    betti_table_hochster(&initial_ideal(g), field)
}

/// `p = pd(S/in(J_G)) - 1`, `r = reg(S/in(J_G)) + 1`.
pub fn pd_reg(g: &Graph, field: Field) -> Result<PdRegPair> {
    let table = initial_betti_table(g, field)?;
    Ok(PdRegPair {
        p: table.projective_dimension() - 1,
        r: table.regularity() + 1,
    })
}

/// `depth(S/J_G) = 2n - pd(S/J_G)`.
pub fn depth_of_quotient(g: &Graph, field: Field) -> Result<u32> {
    let PdRegPair { p, .. } = pd_reg(g, field)?;
    Ok(2 * g.vertex_count() as u32 - (p + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::SquarefreeMonomial;

    fn table(entries: &[(u32, u32, u64)]) -> Vec<(u32, u32, u64)> {
        entries.to_vec()
    }

    #[test]
    fn principal_ideal() {
        let i = MonomialIdeal::new(4, [0b1001]).unwrap();
        for f in [Field::Rationals, Field::GF2] {
            let t = betti_table_hochster(&i, f).unwrap();
            assert_eq!(t.entries(), table(&[(0, 0, 1), (1, 2, 1)]));
            assert_eq!(betti_table_koszul(&i, f).unwrap(), t);
        }
    }

    #[test]
    fn path_on_three_vertices() {
        let g = Graph::path(3).unwrap();
        let i = initial_ideal(&g);
        let t = betti_table_hochster(&i, Field::Rationals).unwrap();
        assert_eq!(t.entries(), table(&[(0, 0, 1), (1, 2, 2), (2, 4, 1)]));
        assert_eq!(betti_table_koszul(&i, Field::Rationals).unwrap(), t);
        assert_eq!(pd_reg(&g, Field::Rationals).unwrap(), PdRegPair::new(1, 3));
    }

    #[test]
    fn triangle() {
        let g = Graph::complete(3).unwrap();
        let t = initial_betti_table(&g, Field::Rationals).unwrap();
        assert_eq!((t.projective_dimension(), t.regularity()), (2, 1));
        assert_eq!(
            betti_table_koszul(&initial_ideal(&g), Field::Rationals).unwrap(),
            t
        );
        assert_eq!(pd_reg(&g, Field::Rationals).unwrap(), PdRegPair::new(1, 2));
        assert_eq!(depth_of_quotient(&g, Field::Rationals).unwrap(), 4);
    }

    #[test]
    fn extremal_graphs() {
        for n in 2..=5 {
            let k = Graph::complete(n).unwrap();
            let p = Graph::path(n).unwrap();
            let n = n as u32;
            assert_eq!(
                pd_reg(&k, Field::Rationals).unwrap(),
                PdRegPair::new(n - 2, 2)
            );
            assert_eq!(pd_reg(&p, Field::GF2).unwrap(), PdRegPair::new(n - 2, n));
        }
        let two_edges = Graph::from_edges(4, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(
            pd_reg(&two_edges, Field::Rationals).unwrap(),
            PdRegPair::new(1, 3)
        );
        assert_eq!(
            depth_of_quotient(&Graph::path(4).unwrap(), Field::Rationals).unwrap(),
            5
        );
    }

    #[test]
    fn edgeless_and_unit() {
        assert_eq!(
            pd_reg(&Graph::isolated(3).unwrap(), Field::Rationals),
            Err(Error::Edgeless)
        );
        let unit = MonomialIdeal::new(2, [0]).unwrap();
        assert_eq!(
            betti_table_hochster(&unit, Field::Rationals),
            Err(Error::UnitIdeal)
        );
        assert_eq!(
            betti_table_koszul(&unit, Field::Rationals),
            Err(Error::UnitIdeal)
        );
        let zero = MonomialIdeal::zero(3).unwrap();
        assert_eq!(
            betti_table_hochster(&zero, Field::Rationals)
                .unwrap()
                .entries(),
            &[(0, 0, 1)]
        );
    }

    #[test]
    fn koszul_rejects_unlisted_prime() {
        let i = MonomialIdeal::new(2, [0b11]).unwrap();
        assert!(betti_table_koszul(&i, Field::Prime(37)).is_err());
        assert!(betti_table_hochster(&i, Field::Prime(37)).is_ok());
    }

    #[test]
    fn prefilter_does_not_change_tables() {
        let g = Graph::cycle(4).unwrap();
        let i = initial_ideal(&g);
        assert_eq!(
            betti_table_hochster(&i, Field::Rationals).unwrap(),
            betti_table_hochster_unfiltered(&i, Field::Rationals).unwrap()
        );
    }

    #[test]
    fn table_display_and_kpoly() {
        let g = Graph::path(3).unwrap();
        let t = initial_betti_table(&g, Field::Rationals).unwrap();
        assert_eq!(t.k_polynomial(), vec![1, 0, -2, 0, 1]);
        let shown = t.to_string();
        assert!(shown.contains("1:"), "{shown}");
        let _ = SquarefreeMonomial::ONE;
    }
}
