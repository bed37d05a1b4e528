//! Canonical labelling by equitable-partition refinement and individualisation.
//!
//! Every leaf of the search tree is a discrete partition; the canonical form is the
//! relabelled graph with the smallest adjacency rows over all leaves. Twins (vertices
//! whose neighbourhoods agree outside each other) span isomorphic subtrees, so only one
//! per twin class is individualised.

use crate::graph::Graph;

type Partition = Vec<Vec<usize>>;

fn refine(rows: &[u32], mut cells: Partition) -> Partition {
    'outer: loop {
        for s in 0..cells.len() {
            let splitter: u32 = cells[s].iter().fold(0, |m, &v| m | 1 << v);
            let mut next = Vec::with_capacity(cells.len());
            let mut split = false;
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cell
                    .iter()
                    .map(|&v| ((rows[v] & splitter).count_ones(), v))
                    .collect();
                keyed.sort_unstable();
                let mut start = 0;
                for k in 1..=keyed.len() {
                    if k == keyed.len() || keyed[k].0 != keyed[start].0 {
                        next.push(keyed[start..k].iter().map(|&(_, v)| v).collect());
                        start = k;
                    }
                }
                split |= keyed.first().map(|f| f.0) != keyed.last().map(|l| l.0);
            }
            cells = next;
            if split {
                continue 'outer;
            }
        }
        return cells;
    }
}

fn relabelled_rows(rows: &[u32], order: &[usize]) -> Vec<u32> {
    // order[k] = old index receiving new index k
    let mut new_of_old = vec![0usize; rows.len()];
    for (k, &v) in order.iter().enumerate() {
        new_of_old[v] = k;
    }
    order
        .iter()
        .map(|&v| {
            let mut r = rows[v];
            let mut out = 0u32;
            while r != 0 {
                let u = r.trailing_zeros() as usize;
                out |= 1 << new_of_old[u];
                r &= r - 1;
            }
            out
        })
        .collect()
}

fn are_twins(rows: &[u32], u: usize, v: usize) -> bool {
    let mask = !((1u32 << u) | (1u32 << v));
    rows[u] & mask == rows[v] & mask
}

fn search(rows: &[u32], cells: Partition, best: &mut Option<(Vec<u32>, Vec<usize>)>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = relabelled_rows(rows, &order);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, order));
        }
        return;
    };
    let cell = &cells[target];
    let mut tried: Vec<usize> = Vec::new();
    for &v in cell {
        if tried.iter().any(|&t| are_twins(rows, t, v)) {
            continue;
        }
        tried.push(v);
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..target]);
        next.push(vec![v]);
        next.push(cell.iter().copied().filter(|&u| u != v).collect());
        next.extend_from_slice(&cells[target + 1..]);
        search(rows, refine(rows, next), best);
    }
}

/// A relabelling `perm` (old vertex `v` becomes `perm[v - 1]`) that takes `g` to its
/// canonical form.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let rows = g.rows();
    let start = refine(rows, vec![(0..n).collect()]);
    let mut best = None;
    search(rows, start, &mut best);
    let (_, order) = best.expect("search visits at least one leaf");
    let mut perm = vec![0; n];
    for (k, &v) in order.iter().enumerate() {
        perm[v] = k + 1;
    }
    perm
}

/// Canonical representative of the isomorphism class of `g`: two graphs get equal
/// canonical forms iff they are isomorphic.
pub fn canonical_form(g: &Graph) -> Graph {
    if g.vertex_count() == 0 {
        return g.clone();
    }
    let order = canonical_labeling(g);
    g.relabel(&order)
        .expect("canonical labelling is a permutation")
}

impl Graph {
    pub fn canonical_form(&self) -> Graph {
        canonical_form(self)
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.vertex_count() == other.vertex_count()
            && self.edge_count() == other.edge_count()
            && canonical_form(self) == canonical_form(other)
    }
}
