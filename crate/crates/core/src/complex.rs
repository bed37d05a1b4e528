//! Simplicial complexes on a ground set of at most 64 slots and their reduced homology.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::MonomialIdeal;
use crate::linalg::{
    ColumnArithmetic, ColumnReducer, Gf2Columns, MachineRationals, Overflow, PrimeColumns,
    WideRationals,
};

/// Largest ground set for which [`stanley_reisner`] lists facets.
pub const MAX_FACET_GROUND: usize = 24;

/// A simplicial complex given by its facets.
///
/// `facets == []` is the complex `{∅}` unless `void` is set, in which case the complex
/// has no faces at all. The empty face is never listed as a facet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialComplex {
    ground_size: usize,
    facets: Vec<u64>,
    void: bool,
}

impl SimplicialComplex {
    pub fn from_facets(ground_size: usize, facets: impl IntoIterator<Item = u64>) -> Result<Self> {
        let limit = if ground_size >= 64 {
            u64::MAX
        } else {
            (1u64 << ground_size) - 1
        };
        let mut masks: Vec<u64> = facets.into_iter().filter(|&f| f != 0).collect();
        if let Some(bad) = masks.iter().find(|&&m| m & !limit != 0) {
            return Err(Error::InvalidArgument(format!(
                "facet {bad:#x} leaves the ground set of size {ground_size}"
            )));
        }
        masks.sort_unstable_by_key(|m| std::cmp::Reverse(m.count_ones()));
        masks.dedup();
        let mut kept: Vec<u64> = Vec::new();
        for m in masks {
            if !kept.iter().any(|&k| m & !k == 0) {
                kept.push(m);
            }
        }
        kept.sort_unstable();
        Ok(SimplicialComplex {
            ground_size,
            facets: kept,
            void: false,
        })
    }

    pub fn void(ground_size: usize) -> Self {
        SimplicialComplex {
            ground_size,
            facets: Vec::new(),
            void: true,
        }
    }

    pub fn simplex(ground_size: usize) -> Result<Self> {
        let all = if ground_size >= 64 {
            u64::MAX
        } else {
            (1u64 << ground_size) - 1
        };
        SimplicialComplex::from_facets(ground_size, [all])
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.void
    }

    pub fn contains(&self, face: u64) -> bool {
        !self.void && (face == 0 || self.facets.iter().any(|&f| face & !f == 0))
    }

    /// Dimension; `-1` for `{∅}` and `None` for the void complex.
    pub fn dimension(&self) -> Option<i32> {
        if self.void {
            return None;
        }
        Some(
            self.facets
                .iter()
                .map(|f| f.count_ones() as i32)
                .max()
                .unwrap_or(0)
                - 1,
        )
    }

    /// All faces grouped by cardinality (index 0 holds the empty face).
    pub fn faces_by_size(&self) -> Vec<Vec<u64>> {
        if self.void {
            return Vec::new();
        }
        let mut all = BTreeSet::new();
        all.insert(0u64);
        for &f in &self.facets {
            // enumerate all submasks of f
            let mut s = f;
            loop {
                all.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        group_by_size(all.into_iter())
    }
}

pub(crate) fn group_by_size(faces: impl Iterator<Item = u64>) -> Vec<Vec<u64>> {
    let mut by_size: Vec<Vec<u64>> = Vec::new();
    for f in faces {
        let k = f.count_ones() as usize;
        if by_size.len() <= k {
            by_size.resize_with(k + 1, Vec::new);
        }
        by_size[k].push(f);
    }
    for layer in &mut by_size {
        layer.sort_unstable();
    }
    by_size
}

/// Stanley–Reisner complex: faces are the slot sets containing no generator.
pub fn stanley_reisner(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let n = ideal.num_vars();
    if n > MAX_FACET_GROUND {
        return Err(Error::Budget(format!(
            "facet listing is limited to {MAX_FACET_GROUND} slots, got {n}"
        )));
    }
    let all = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let faces = faces_avoiding(ideal.masks(), all);
    let gens = ideal.masks();
    let facets = faces.into_iter().flatten().filter(|&f| {
        (0..n).all(|v| f >> v & 1 == 1 || gens.iter().any(|&g| g & !(f | 1 << v) == 0))
    });
    SimplicialComplex::from_facets(n, facets)
}

/// The faces of the restriction of the Stanley–Reisner complex of `generators` to
/// `within`, grouped by size.
pub(crate) fn faces_avoiding(generators: &[u64], within: u64) -> Vec<Vec<u64>> {
    let slots: Vec<u32> = (0..64).filter(|&b| within >> b & 1 == 1).collect();
    // generators inside `within`, listed under each of their slots
    let mut by_slot: Vec<Vec<u64>> = vec![Vec::new(); slots.len()];
    for &g in generators.iter().filter(|&&g| g & !within == 0) {
        for (k, &b) in slots.iter().enumerate() {
            if g >> b & 1 == 1 {
                by_slot[k].push(g);
            }
        }
    }
    let mut out: Vec<Vec<u64>> = vec![Vec::new(); slots.len() + 1];
    fn extend(
        face: u64,
        from: usize,
        slots: &[u32],
        by_slot: &[Vec<u64>],
        out: &mut Vec<Vec<u64>>,
    ) {
        out[face.count_ones() as usize].push(face);
        for k in from..slots.len() {
            let next = face | 1 << slots[k];
            if by_slot[k].iter().all(|&g| g & !next != 0) {
                extend(next, k + 1, slots, by_slot, out);
            }
        }
    }
    extend(0, 0, &slots, &by_slot, &mut out);
    while out.len() > 1 && out.last().is_some_and(Vec::is_empty) {
        out.pop();
    }
    for layer in &mut out {
        layer.sort_unstable();
    }
    out
}

/// Relative chains of `(Δ_W, st(v))` for `Δ_W` the restriction of the Stanley–Reisner
/// complex of `generators` to `within`, grouped by size: the faces `σ ∌ v` with
/// `σ ∪ v ∉ Δ_W`. Since the star is contractible their homology is `H̃(Δ_W)`.
pub(crate) fn faces_off_star(generators: &[u64], within: u64, v: u32) -> Vec<Vec<u64>> {
    let bit = 1u64 << v;
    let shadows: Vec<u64> = generators
        .iter()
        .filter(|&&g| g & bit != 0 && g & !within == 0)
        .map(|&g| g & !bit)
        .collect();
    let mut out = faces_avoiding(generators, within & !bit);
    for layer in &mut out {
        layer.retain(|&f| shadows.iter().any(|&s| s & !f == 0));
    }
    while out.len() > 1 && out.last().is_some_and(Vec::is_empty) {
        out.pop();
    }
    out
}

/// Ranks of the boundary maps `∂_k` from size-`k` faces to size-`(k-1)` faces,
/// `ranks[k]` for `k ≥ 1`. Columns that are pivots of the map one size up are skipped
/// since they reduce to zero.
fn boundary_ranks<A: ColumnArithmetic>(
    arith: &A,
    faces: &[Vec<u64>],
) -> Result<Vec<usize>, Overflow> {
    let mut ranks = vec![0; faces.len() + 1];
    let mut cleared: Vec<bool> = Vec::new();
    for k in (1..faces.len()).rev() {
        let rows = &faces[k - 1];
        let mut reducer = ColumnReducer::new(arith, rows.len());
        let mut pivots = vec![false; rows.len()];
        for (c, &face) in faces[k].iter().enumerate() {
            if cleared.get(c).copied().unwrap_or(false) {
                continue;
            }
            let mut col = Vec::with_capacity(k);
            let mut rest = face;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest ^= bit;
                // a missing facet lies in the subcomplex of a relative chain group
                if let Ok(row) = rows.binary_search(&(face ^ bit)) {
                    let negative = (face & (bit - 1)).count_ones() % 2 == 1;
                    col.push((row as u32, arith.unit(negative)));
                }
            }
            col.sort_unstable_by_key(|e| e.0);
            if let Some(low) = reducer.push(col)? {
                pivots[low as usize] = true;
            }
        }
        ranks[k] = reducer.rank();
        cleared = pivots;
    }
    Ok(ranks)
}

/// Reduced homology ranks from a face list grouped by size; entry `k` is
/// `dim H̃_{k-1}`. Relative chain groups work too.
pub(crate) fn homology_from_faces(faces: &[Vec<u64>], field: Field) -> Vec<u64> {
    let ranks = match field {
        Field::Prime(2) => boundary_ranks(&Gf2Columns, faces).expect("GF(2) cannot overflow"),
        Field::Prime(p) => {
            boundary_ranks(&PrimeColumns::new(p), faces).expect("GF(p) cannot overflow")
        }
        Field::Rationals => boundary_ranks(&MachineRationals::default(), faces)
            .or_else(|Overflow| boundary_ranks(&WideRationals::default(), faces))
            .expect("arbitrary precision cannot overflow"),
    };
    (0..faces.len())
        .map(|k| (faces[k].len() - ranks[k] - ranks[k + 1]) as u64)
        .collect()
}

/// `dim H̃_d(Δ; K)` for `d = -1, 0, …, dim Δ` (index 0 is `d = -1`).
pub fn reduced_homology_ranks(cx: &SimplicialComplex, field: Field) -> Vec<u64> {
    let faces = cx.faces_by_size();
    if faces.is_empty() {
        return Vec::new();
    }
    homology_from_faces(&faces, field)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_fields() -> [Field; 3] {
        [Field::Rationals, Field::GF2, Field::Prime(3)]
    }

    #[test]
    fn stanley_reisner_examples() {
        // x1*y2 in four slots: x1 = slot 0, x2 = 1, y1 = 2, y2 = 3
        let i = MonomialIdeal::new(4, [0b1001]).unwrap();
        let cx = stanley_reisner(&i).unwrap();
        assert_eq!(cx.facets(), &[0b0111, 0b1110]);
        let zero = MonomialIdeal::zero(3).unwrap();
        assert_eq!(stanley_reisner(&zero).unwrap().facets(), &[0b111]);
        let both = MonomialIdeal::new(2, [0b01, 0b10]).unwrap();
        let cx = stanley_reisner(&both).unwrap();
        assert!(cx.facets().is_empty() && !cx.is_void());
        assert_eq!(cx.dimension(), Some(-1));
        assert_eq!(reduced_homology_ranks(&cx, Field::Rationals), vec![1]);
        assert_eq!(
            stanley_reisner(&MonomialIdeal::new(2, [0]).unwrap()),
            Err(Error::UnitIdeal)
        );
    }

    #[test]
    fn homology_examples() {
        let circle = SimplicialComplex::from_facets(3, [0b011, 0b101, 0b110]).unwrap();
        let two_points = SimplicialComplex::from_facets(2, [0b01, 0b10]).unwrap();
        let simplex = SimplicialComplex::simplex(4).unwrap();
        for f in all_fields() {
            assert_eq!(reduced_homology_ranks(&circle, f), vec![0, 0, 1]);
            assert_eq!(reduced_homology_ranks(&two_points, f), vec![0, 1]);
            assert_eq!(reduced_homology_ranks(&simplex, f), vec![0; 5]);
        }
        assert!(reduced_homology_ranks(&SimplicialComplex::void(3), Field::Rationals).is_empty());
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        // six-vertex triangulation of RP^2
        let tri = [
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 1, 5],
            [1, 2, 4],
            [2, 3, 5],
            [1, 3, 4],
            [1, 3, 5],
            [2, 4, 5],
        ];
        let facets = tri.iter().map(|t| t.iter().fold(0u64, |m, &v| m | 1 << v));
        let rp2 = SimplicialComplex::from_facets(6, facets).unwrap();
        assert_eq!(
            reduced_homology_ranks(&rp2, Field::Rationals),
            vec![0, 0, 0, 0]
        );
        assert_eq!(
            reduced_homology_ranks(&rp2, Field::Prime(3)),
            vec![0, 0, 0, 0]
        );
        assert_eq!(reduced_homology_ranks(&rp2, Field::GF2), vec![0, 0, 1, 1]);
    }

    #[test]
    fn faces_avoiding_matches_facets() {
        let i = MonomialIdeal::new(5, [0b00011, 0b01100, 0b10101]).unwrap();
        let cx = stanley_reisner(&i).unwrap();
        assert_eq!(faces_avoiding(i.masks(), 0b11111), cx.faces_by_size());
    }
}
