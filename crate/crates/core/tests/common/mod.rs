#![allow(dead_code)]

use bettisize::{Graph, PdRegPair};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// The small-n catalogue with its recorded `(pd, reg)`.
pub fn catalog() -> Vec<(usize, PdRegPair, Graph)> {
    include_str!("../fixtures/catalog.txt")
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|line| {
            let f: Vec<&str> = line.split_whitespace().collect();
            let n: usize = f[0].parse().unwrap();
            let pair = PdRegPair::new(f[1].parse().unwrap(), f[2].parse().unwrap());
            (n, pair, Graph::from_graph6(f[3]).unwrap())
        })
        .collect()
}

/// `G(n, q)` with the given edge probability.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, q: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(q))
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// A random graph on `n` vertices with no isolated vertex.
pub fn random_graph_without_isolated(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    loop {
        let q = rng.gen_range(0.2..0.9);
        let g = random_graph(rng, n, q);
        if !g.has_isolated_vertices() {
            return g;
        }
    }
}

/// A random connected graph on `n ≥ 2` vertices.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    loop {
        let q = rng.gen_range(0.25..0.9);
        let g = random_graph(rng, n, q);
        if g.is_connected() {
            return g;
        }
    }
}

/// A random permutation of `1..=n` as a relabelling vector.
pub fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut perm: Vec<usize> = (1..=n).collect();
    perm.shuffle(rng);
    perm
}
