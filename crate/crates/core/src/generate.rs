//! Seeded instance generators.
//!
//! All randomness comes from xoshiro256** seeded through SplitMix64
//! (`Xoshiro256StarStar::seed_from_u64`), so a seed reproduces the same graph
//! on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;
use thiserror::Error;

use crate::graph::Graph;

pub type GenRng = Xoshiro256StarStar;

pub fn rng(seed: u64) -> GenRng {
    Xoshiro256StarStar::seed_from_u64(seed)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
}

fn infeasible(msg: impl Into<String>) -> GenError {
    GenError::Infeasible(msg.into())
}

/// Disjoint union of `r` complete graphs of order `p`.
pub fn extremal_graph(p: usize, r: usize) -> Result<Graph, GenError> {
    if p < 3 || r < 1 {
        return Err(infeasible(format!("need p >= 3 and r >= 1, got p = {p}, r = {r}")));
    }
    clique_union(&vec![p; r])
}

/// Disjoint cliques of the given sizes on consecutive labels.
pub fn clique_union(sizes: &[usize]) -> Result<Graph, GenError> {
    if sizes.contains(&0) {
        return Err(infeasible("clique sizes must be positive"));
    }
    let n = sizes.iter().sum();
    let mut g = Graph::new(n);
    let mut start = 0;
    for &s in sizes {
        for a in start..start + s {
            for b in a + 1..start + s {
                g.add_edge(a, b).expect("fresh pair");
            }
        }
        start += s;
    }
    Ok(g)
}

/// Cliques of the given sizes plus `m` distinct random edges between
/// different cliques. The independence number is at most `sizes.len()`.
pub fn clique_union_cross(sizes: &[usize], m: usize, rng: &mut GenRng) -> Result<Graph, GenError> {
    let mut g = clique_union(sizes)?;
    let mut owner = Vec::with_capacity(g.order());
    for (c, &s) in sizes.iter().enumerate() {
        owner.extend(std::iter::repeat_n(c, s));
    }
    let n = g.order();
    let cross: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| owner[a] != owner[b])
        .collect();
    if m > cross.len() {
        return Err(infeasible(format!("only {} cross pairs available, asked for {m}", cross.len())));
    }
    for i in rand::seq::index::sample(rng, cross.len(), m).into_vec() {
        let (a, b) = cross[i];
        g.add_edge(a, b).expect("distinct cross pairs");
    }
    Ok(g)
}

/// A saw on `2k + 1` vertices with backbone `0, 1, ..., 2k` and degree
/// exactly `d`: the last two backbone vertices get random extra neighbours
/// up to degree `d`, and every other pair is joined with probability
/// `density`.
pub fn saw_tail(k: usize, d: usize, density: f64, rng: &mut GenRng) -> Result<Graph, GenError> {
    if k < 1 {
        return Err(infeasible("k must be at least 1"));
    }
    if !(2..=2 * k).contains(&d) {
        return Err(infeasible(format!("degree {d} outside [2, {}]", 2 * k)));
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(infeasible("density must lie in [0, 1]"));
    }
    let n = 2 * k + 1;
    let mut g = Graph::cycle(n);
    for s in (0..n - 2).step_by(2) {
        g.ensure_edge(s, s + 2);
    }
    let (a, b) = (n - 2, n - 1);
    for end in [a, b] {
        let mut others: Vec<usize> = (0..n).filter(|&w| w != end && !g.has_edge(end, w)).collect();
        others.shuffle(rng);
        let need = d.saturating_sub(g.degree(end));
        for &w in others.iter().take(need) {
            g.add_edge(end, w).expect("non-neighbour");
        }
    }
    for x in 0..n - 2 {
        for y in x + 1..n - 2 {
            if !g.has_edge(x, y) && rng.random_bool(density) {
                g.add_edge(x, y).expect("non-edge");
            }
        }
    }
    Ok(g)
}

/// A random Hamiltonian (hence 2-connected) graph on `n` vertices with
/// minimum degree at least `delta`.
pub fn two_connected_random(n: usize, delta: usize, rng: &mut GenRng) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(infeasible("need at least 3 vertices"));
    }
    if delta >= n {
        return Err(infeasible(format!("minimum degree {delta} impossible on {n} vertices")));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut g = Graph::new(n);
    for i in 0..n {
        g.ensure_edge(order[i], order[(i + 1) % n]);
    }
    for v in 0..n {
        while g.degree(v) < delta {
            let choices: Vec<usize> = (0..n).filter(|&w| w != v && !g.has_edge(v, w)).collect();
            let w = choices[rng.random_range(0..choices.len())];
            g.add_edge(v, w).expect("non-neighbour");
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use crate::saw::Saw;

    #[test]
    fn extremal_counts() {
        let g = extremal_graph(4, 2).unwrap();
        assert_eq!((g.order(), g.size()), (8, 12));
        let g = extremal_graph(5, 3).unwrap();
        assert_eq!((g.order(), g.size()), (15, 30));
        assert_eq!(extremal_graph(3, 1).unwrap(), Graph::complete(3));
        assert!(extremal_graph(2, 3).is_err());
    }

    #[test]
    fn clique_union_cross_is_seeded() {
        let a = clique_union_cross(&[13, 14], 5, &mut rng(3)).unwrap();
        let b = clique_union_cross(&[13, 14], 5, &mut rng(3)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.order(), 27);
        assert_eq!(a.size(), 78 + 91 + 5);
        assert_eq!(oracle::independence_number(&a).unwrap(), 2);
        assert!(clique_union_cross(&[2, 2], 5, &mut rng(0)).is_err());
    }

    #[test]
    fn saw_tail_has_requested_degree() {
        for seed in 0..20 {
            let g = saw_tail(5, 10, 0.3, &mut rng(seed)).unwrap();
            let s = Saw::from_local(g).unwrap();
            assert_eq!(s.degree(), 10);
        }
        let s = Saw::from_local(saw_tail(4, 3, 0.0, &mut rng(1)).unwrap()).unwrap();
        assert_eq!(s.degree(), 3);
        assert!(saw_tail(3, 7, 0.5, &mut rng(0)).is_err());
    }

    #[test]
    fn two_connected_random_meets_degree() {
        for seed in 0..20 {
            let g = two_connected_random(10, 4, &mut rng(seed)).unwrap();
            assert!(g.is_two_connected());
            assert!(g.min_degree() >= 4);
        }
    }
}
