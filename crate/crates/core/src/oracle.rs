//! Exact, exponential-time oracles: independence number, and the full sets of
//! path and cycle orders.
//!
//! Every oracle refuses inputs above a size cap instead of silently running
//! for hours. The path and cycle oracles are subset dynamic programs over
//! `2^n` states; the independence oracle is a colouring-bounded
//! branch-and-bound maximum-clique search on the complement.

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::graph::{Cycle, Graph, Path, VertexSet};

pub const DEFAULT_PATH_CAP: usize = 16;
pub const DEFAULT_INDEPENDENCE_CAP: usize = 60;
/// Hard ceiling for the subset DP regardless of configuration.
const SUBSET_DP_LIMIT: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph of order {order} exceeds the {oracle} oracle cap of {cap}")]
    TooLarge {
        oracle: &'static str,
        order: usize,
        cap: usize,
    },
    #[error("endpoints must be distinct vertices of the graph")]
    BadEndpoints,
}

/// Size caps for the exponential oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub path_cap: usize,
    pub independence_cap: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            path_cap: DEFAULT_PATH_CAP,
            independence_cap: DEFAULT_INDEPENDENCE_CAP,
        }
    }
}

impl OracleLimits {
    fn check_paths(&self, g: &Graph, oracle: &'static str) -> Result<(), OracleError> {
        let cap = self.path_cap.min(SUBSET_DP_LIMIT);
        if g.order() > cap {
            return Err(OracleError::TooLarge { oracle, order: g.order(), cap });
        }
        Ok(())
    }

    fn check_independence(&self, g: &Graph) -> Result<(), OracleError> {
        if g.order() > self.independence_cap {
            return Err(OracleError::TooLarge {
                oracle: "independence",
                order: g.order(),
                cap: self.independence_cap,
            });
        }
        Ok(())
    }
}

/// α(g) under the default caps.
pub fn independence_number(g: &Graph) -> Result<usize, OracleError> {
    max_independent_set(g).map(|s| s.len())
}

/// A maximum independent set under the default caps.
pub fn max_independent_set(g: &Graph) -> Result<VertexSet, OracleError> {
    max_independent_set_with(g, &OracleLimits::default())
}

pub fn max_independent_set_with(g: &Graph, limits: &OracleLimits) -> Result<VertexSet, OracleError> {
    limits.check_independence(g)?;
    let n = g.order();
    // Independent sets of g are cliques of the complement.
    let comp: Vec<FixedBitSet> = (0..n)
        .map(|v| {
            let mut row = crate::graph::full_set(n);
            row.difference_with(g.neighbor_bits(v));
            row.set(v, false);
            row
        })
        .collect();
    let mut best = Vec::new();
    let mut current = Vec::new();
    let cand = crate::graph::full_set(n);
    if n > 0 {
        expand_clique(&comp, &mut current, cand, &mut best);
    }
    Ok(best.into_iter().collect())
}

/// Greedy colouring of `cand` in label order; returns vertices in colour
/// order together with their colour numbers (non-decreasing).
fn colour_sort(adj: &[FixedBitSet], cand: &FixedBitSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(cand.count_ones(..));
    let mut colours = Vec::with_capacity(order.capacity());
    let mut uncoloured = cand.clone();
    let mut colour = 0;
    while !uncoloured.is_clear() {
        colour += 1;
        let mut q = uncoloured.clone();
        while let Some(v) = q.minimum() {
            q.set(v, false);
            q.difference_with(&adj[v]);
            uncoloured.set(v, false);
            order.push(v);
            colours.push(colour);
        }
    }
    (order, colours)
}

fn expand_clique(adj: &[FixedBitSet], current: &mut Vec<usize>, mut cand: FixedBitSet, best: &mut Vec<usize>) {
    let (order, colours) = colour_sort(adj, &cand);
    for idx in (0..order.len()).rev() {
        if current.len() + colours[idx] <= best.len() {
            return;
        }
        let v = order[idx];
        current.push(v);
        let mut next = cand.clone();
        next.intersect_with(&adj[v]);
        if next.is_clear() {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand_clique(adj, current, next, best);
        }
        current.pop();
        cand.set(v, false);
    }
}

/// `dp[mask]` = bitmask of vertices `e` such that some path starting at
/// `start` covers exactly `mask` and ends at `e`.
fn path_dp(g: &Graph, start: usize) -> Vec<u32> {
    let n = g.order();
    let nbr: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).fold(0u32, |m, w| m | (1 << w)))
        .collect();
    let mut dp = vec![0u32; 1 << n];
    dp[1 << start] = 1 << start;
    for mask in 0..(1usize << n) {
        let ends = dp[mask];
        if ends == 0 {
            continue;
        }
        let mut e = ends;
        while e != 0 {
            let x = e.trailing_zeros() as usize;
            e &= e - 1;
            let mut ext = nbr[x] & !(mask as u32);
            while ext != 0 {
                let w = ext.trailing_zeros() as usize;
                ext &= ext - 1;
                dp[mask | (1 << w)] |= 1 << w;
            }
        }
    }
    dp
}

fn check_endpoints(g: &Graph, u: usize, v: usize) -> Result<(), OracleError> {
    if u == v || u >= g.order() || v >= g.order() {
        return Err(OracleError::BadEndpoints);
    }
    Ok(())
}

/// R_G(u, v): the set of orders of all `u`–`v` paths.
pub fn all_path_orders(g: &Graph, u: usize, v: usize) -> Result<BTreeSet<usize>, OracleError> {
    all_path_orders_with(g, u, v, &OracleLimits::default())
}

pub fn all_path_orders_with(
    g: &Graph,
    u: usize,
    v: usize,
    limits: &OracleLimits,
) -> Result<BTreeSet<usize>, OracleError> {
    limits.check_paths(g, "path-order")?;
    check_endpoints(g, u, v)?;
    let dp = path_dp(g, u);
    Ok(dp
        .iter()
        .enumerate()
        .filter(|(_, &ends)| ends & (1 << v) != 0)
        .map(|(mask, _)| mask.count_ones() as usize)
        .collect())
}

/// Some `u`–`v` path of exactly `order` vertices, if one exists.
pub fn path_of_order(g: &Graph, u: usize, v: usize, order: usize) -> Result<Option<Path>, OracleError> {
    OracleLimits::default().check_paths(g, "path-order")?;
    check_endpoints(g, u, v)?;
    let dp = path_dp(g, u);
    let Some(mask) = (0..dp.len()).find(|&m| dp[m] & (1 << v) != 0 && m.count_ones() as usize == order) else {
        return Ok(None);
    };
    let mut seq = vec![v];
    let (mut mask, mut end) = (mask, v);
    while end != u {
        let prev_mask = mask & !(1 << end);
        let prev = (0..g.order())
            .find(|&x| dp[prev_mask] & (1 << x) != 0 && g.has_edge(x, end))
            .expect("dp states are backed by a predecessor");
        seq.push(prev);
        mask = prev_mask;
        end = prev;
    }
    seq.reverse();
    Ok(Some(Path::new(seq)))
}

/// Paths rooted at the smallest vertex of their mask, extending only to
/// larger labels; each cycle is seen from its minimum vertex.
fn cycle_dp(g: &Graph) -> Vec<u32> {
    let n = g.order();
    let nbr: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).fold(0u32, |m, w| m | (1 << w)))
        .collect();
    let mut dp = vec![0u32; 1 << n];
    for s in 0..n {
        dp[1 << s] = 1 << s;
    }
    for mask in 1..(1usize << n) {
        let ends = dp[mask];
        if ends == 0 {
            continue;
        }
        let low = mask.trailing_zeros();
        let above: u32 = !((1u32 << low) | ((1u32 << low) - 1));
        let mut e = ends;
        while e != 0 {
            let x = e.trailing_zeros() as usize;
            e &= e - 1;
            let mut ext = nbr[x] & !(mask as u32) & above;
            while ext != 0 {
                let w = ext.trailing_zeros() as usize;
                ext &= ext - 1;
                dp[mask | (1 << w)] |= 1 << w;
            }
        }
    }
    dp
}

fn closes_cycle(g: &Graph, dp: &[u32], mask: usize) -> Option<usize> {
    if mask.count_ones() < 3 {
        return None;
    }
    let s = mask.trailing_zeros() as usize;
    let mut e = dp[mask];
    while e != 0 {
        let x = e.trailing_zeros() as usize;
        e &= e - 1;
        if g.has_edge(x, s) {
            return Some(x);
        }
    }
    None
}

/// The set of orders of all cycles in `g`.
pub fn all_cycle_orders(g: &Graph) -> Result<BTreeSet<usize>, OracleError> {
    all_cycle_orders_with(g, &OracleLimits::default())
}

pub fn all_cycle_orders_with(g: &Graph, limits: &OracleLimits) -> Result<BTreeSet<usize>, OracleError> {
    limits.check_paths(g, "cycle-order")?;
    let dp = cycle_dp(g);
    Ok((1..dp.len())
        .filter(|&m| closes_cycle(g, &dp, m).is_some())
        .map(|m| m.count_ones() as usize)
        .collect())
}

/// Some cycle of exactly `order` vertices, if one exists.
pub fn cycle_of_order(g: &Graph, order: usize) -> Result<Option<Cycle>, OracleError> {
    OracleLimits::default().check_paths(g, "cycle-order")?;
    let dp = cycle_dp(g);
    for mask in 1..dp.len() {
        if mask.count_ones() as usize != order {
            continue;
        }
        if let Some(mut end) = closes_cycle(g, &dp, mask) {
            let s = mask.trailing_zeros() as usize;
            let mut seq = vec![end];
            let mut m = mask;
            while end != s {
                let prev_mask = m & !(1 << end);
                let prev = (0..g.order())
                    .find(|&x| dp[prev_mask] & (1 << x) != 0 && g.has_edge(x, end))
                    .expect("dp states are backed by a predecessor");
                seq.push(prev);
                m = prev_mask;
                end = prev;
            }
            seq.reverse();
            return Ok(Some(Cycle::new(seq)));
        }
    }
    Ok(None)
}
