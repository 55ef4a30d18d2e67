//! Target-threshold depth-first search for long paths and cycles.
//!
//! The search stops at the first path (cycle) whose order reaches the
//! target. A reachability bound prunes branches that cannot reach the target
//! any more, and an optional node budget turns runaway searches into a
//! [`Outcome::BudgetExceeded`] that callers can react to.

use fixedbitset::FixedBitSet;

use crate::graph::{Cycle, Graph, Path};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome<T> {
    Found(T),
    /// The whole search space was explored without success.
    Exhausted,
    BudgetExceeded,
}

impl<T> Outcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Outcome::Found(t) => Some(t),
            _ => None,
        }
    }
}

struct Dfs<'a> {
    g: &'a Graph,
    allowed: &'a FixedBitSet,
    visited: FixedBitSet,
    stack: Vec<usize>,
    nodes: u64,
    budget: Option<u64>,
}

enum Step {
    Done,
    Continue,
    Abort,
}

impl Dfs<'_> {
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        self.budget.is_some_and(|b| self.nodes > b)
    }

    /// Vertices reachable from `x` through allowed, unvisited vertices
    /// (not counting `x`), restricted to `extra_mask` when given.
    fn reach(&self, x: usize, extra_mask: Option<&FixedBitSet>) -> FixedBitSet {
        let mut open = self.allowed.clone();
        open.difference_with(&self.visited);
        if let Some(m) = extra_mask {
            open.intersect_with(m);
        }
        let mut seen = FixedBitSet::with_capacity(self.g.order());
        let mut frontier = vec![x];
        while let Some(y) = frontier.pop() {
            for z in self.g.neighbor_bits(y).intersection(&open) {
                if !seen.contains(z) {
                    seen.insert(z);
                    frontier.push(z);
                }
            }
        }
        seen
    }

    fn candidates(&self, x: usize, exclude: usize, mask: Option<&FixedBitSet>) -> Vec<usize> {
        let mut c: Vec<(usize, usize)> = self
            .g
            .neighbors(x)
            .filter(|&y| y != exclude && self.allowed.contains(y) && !self.visited.contains(y))
            .filter(|&y| mask.is_none_or(|m| m.contains(y)))
            .map(|y| {
                let onward = self
                    .g
                    .neighbors(y)
                    .filter(|&z| self.allowed.contains(z) && !self.visited.contains(z))
                    .count();
                (onward, y)
            })
            .collect();
        c.sort_unstable();
        c.into_iter().map(|(_, y)| y).collect()
    }

    fn path_step(&mut self, target_end: usize, target: usize) -> Step {
        if self.tick() {
            return Step::Abort;
        }
        let x = *self.stack.last().expect("stack is nonempty");
        if self.g.has_edge(x, target_end) && self.stack.len() + 1 >= target {
            self.stack.push(target_end);
            return Step::Done;
        }
        // `target_end` is pre-marked visited, so it never shows up in `reach`.
        let reach = self.reach(x, None);
        let end_reachable = self.g.has_edge(x, target_end) || reach.ones().any(|z| self.g.has_edge(z, target_end));
        if !end_reachable || self.stack.len() + reach.count_ones(..) + 1 < target {
            return Step::Continue;
        }
        for y in self.candidates(x, target_end, None) {
            self.visited.insert(y);
            self.stack.push(y);
            match self.path_step(target_end, target) {
                Step::Done => return Step::Done,
                Step::Abort => return Step::Abort,
                Step::Continue => {}
            }
            self.stack.pop();
            self.visited.set(y, false);
        }
        Step::Continue
    }

    fn cycle_step(&mut self, start: usize, target: usize, above: &FixedBitSet) -> Step {
        if self.tick() {
            return Step::Abort;
        }
        let x = *self.stack.last().expect("stack is nonempty");
        if self.stack.len() >= target.max(3) && self.g.has_edge(x, start) {
            return Step::Done;
        }
        let reach = self.reach(x, Some(above));
        if self.stack.len() + reach.count_ones(..) < target {
            return Step::Continue;
        }
        if !reach.ones().any(|z| self.g.has_edge(z, start)) {
            return Step::Continue;
        }
        for y in self.candidates(x, start, Some(above)) {
            self.visited.insert(y);
            self.stack.push(y);
            match self.cycle_step(start, target, above) {
                Step::Done => return Step::Done,
                Step::Abort => return Step::Abort,
                Step::Continue => {}
            }
            self.stack.pop();
            self.visited.set(y, false);
        }
        Step::Continue
    }
}

/// A `u`–`v` path of order at least `target` using only `allowed` vertices.
pub fn path_at_least_within(
    g: &Graph,
    u: usize,
    v: usize,
    target: usize,
    allowed: &FixedBitSet,
    budget: Option<u64>,
) -> Outcome<Path> {
    if u == v || !allowed.contains(u) || !allowed.contains(v) {
        return Outcome::Exhausted;
    }
    let mut dfs = Dfs {
        g,
        allowed,
        visited: FixedBitSet::with_capacity(g.order()),
        stack: vec![u],
        nodes: 0,
        budget,
    };
    dfs.visited.insert(u);
    dfs.visited.insert(v);
    match dfs.path_step(v, target) {
        Step::Done => Outcome::Found(Path::new(dfs.stack)),
        Step::Continue => Outcome::Exhausted,
        Step::Abort => Outcome::BudgetExceeded,
    }
}

pub fn path_at_least(g: &Graph, u: usize, v: usize, target: usize, budget: Option<u64>) -> Outcome<Path> {
    path_at_least_within(g, u, v, target, &crate::graph::full_set(g.order()), budget)
}

/// A cycle of order at least `target` (and at least 3) inside `allowed`.
/// Each cycle is searched from its smallest vertex.
pub fn cycle_at_least_within(g: &Graph, target: usize, allowed: &FixedBitSet, budget: Option<u64>) -> Outcome<Cycle> {
    let n = g.order();
    let mut spent = 0u64;
    for start in allowed.ones() {
        let mut above = FixedBitSet::with_capacity(n);
        above.insert_range(start + 1..);
        let mut dfs = Dfs {
            g,
            allowed,
            visited: FixedBitSet::with_capacity(n),
            stack: vec![start],
            nodes: 0,
            budget: budget.map(|b| b.saturating_sub(spent)),
        };
        dfs.visited.insert(start);
        let step = dfs.cycle_step(start, target, &above);
        spent += dfs.nodes;
        match step {
            Step::Done => return Outcome::Found(Cycle::new(dfs.stack)),
            Step::Abort => return Outcome::BudgetExceeded,
            Step::Continue => {}
        }
    }
    Outcome::Exhausted
}

pub fn cycle_at_least(g: &Graph, target: usize, budget: Option<u64>) -> Outcome<Cycle> {
    cycle_at_least_within(g, target, &crate::graph::full_set(g.order()), budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{oracle, verify};

    #[test]
    fn hamilton_path_in_complete_graph() {
        let g = Graph::complete(6);
        let p = path_at_least(&g, 0, 5, 6, None).found().unwrap();
        assert_eq!(p.order(), 6);
        assert!(verify::check_path(&g, &p).is_ok());
        assert_eq!(p.endpoints(), (0, 5));
    }

    #[test]
    fn impossible_target_is_exhausted() {
        let g = Graph::cycle(6);
        assert_eq!(path_at_least(&g, 0, 1, 7, None), Outcome::Exhausted);
        assert_eq!(path_at_least(&g, 0, 1, 6, None).found().unwrap().order(), 6);
    }

    #[test]
    fn budget_is_reported() {
        let g = Graph::petersen();
        assert_eq!(path_at_least(&g, 0, 1, 10, Some(3)), Outcome::BudgetExceeded);
    }

    #[test]
    fn cycles_meet_target() {
        let g = Graph::petersen();
        let c = cycle_at_least(&g, 9, None).found().unwrap();
        assert!(c.order() >= 9);
        assert!(verify::check_cycle(&g, &c).is_ok());
        assert_eq!(cycle_at_least(&g, 10, None), Outcome::Exhausted);
    }

    #[test]
    fn agrees_with_oracle_maximum() {
        let g = Graph::petersen();
        for v in 1..10 {
            let best = *oracle::all_path_orders(&g, 0, v).unwrap().iter().max().unwrap();
            assert_eq!(path_at_least(&g, 0, v, best, None).found().map(|p| p.order() >= best), Some(true));
            assert_eq!(path_at_least(&g, 0, v, best + 1, None), Outcome::Exhausted);
        }
    }
}
