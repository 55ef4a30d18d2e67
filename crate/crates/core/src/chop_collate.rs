//! Chopping a path into reductions of nearly every order, and collating two
//! path families across a vertex partition into cycles of every order in a
//! range.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{Cycle, Graph, Path, VertexSet};
use crate::verify::{self, Violation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChopError {
    #[error("alpha must be at least 1")]
    ZeroAlpha,
    #[error("input path is invalid: {0}")]
    InvalidPath(Violation),
    /// The supplied bound was wrong; the payload is an independent set of
    /// size `alpha + 1` taken from a chordless prefix.
    #[error("no chord in a prefix of the current path; independent set {independent_set:?}")]
    NoChord { independent_set: VertexSet },
    #[error("no ladder step has order in [{lo}, {hi}]")]
    NotCovered { lo: usize, hi: usize },
}

/// Successive reductions `P_0, P_1, ..., P_s` of one path.
///
/// Orders strictly decrease, consecutive orders differ by at most
/// `2 * alpha`, and only the last step has order at most `2 * alpha`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionLadder {
    pub steps: Vec<Path>,
    pub alpha: usize,
}

impl ReductionLadder {
    pub fn orders(&self) -> Vec<usize> {
        self.steps.iter().map(Path::order).collect()
    }

    pub fn endpoints(&self) -> (usize, usize) {
        self.steps[0].endpoints()
    }

    /// Checks the ladder invariants against `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        let first = self.steps.first().ok_or("empty ladder")?;
        let ends = first.endpoints();
        let two_a = 2 * self.alpha;
        for (i, step) in self.steps.iter().enumerate() {
            verify::check_path(g, step).map_err(|e| format!("step {i}: {e}"))?;
            if step.endpoints() != ends {
                return Err(format!("step {i} changes endpoints"));
            }
            if i + 1 < self.steps.len() && step.order() <= two_a {
                return Err(format!("step {i} is short but not last"));
            }
        }
        for (i, w) in self.steps.windows(2).enumerate() {
            let (big, small) = (w[0].order(), w[1].order());
            if small >= big || big - small > two_a {
                return Err(format!("gap {big} -> {small} at step {i}"));
            }
            let prev = w[0].vertex_set();
            if w[1].vertices().iter().any(|&x| !prev.contains(x)) {
                return Err(format!("step {} leaves the previous path", i + 1));
            }
        }
        Ok(())
    }
}

/// Repeatedly shortcuts the shortest chord inside the first `2 alpha + 1`
/// vertices of the current path, until the order drops to `2 alpha`.
///
/// `alpha` must bound the independence number of `g` restricted to the
/// path's vertices; if it does not, the chordless prefix is reported.
pub fn chop(g: &Graph, p: &Path, alpha: usize) -> Result<ReductionLadder, ChopError> {
    if alpha == 0 {
        return Err(ChopError::ZeroAlpha);
    }
    verify::check_path(g, p).map_err(ChopError::InvalidPath)?;
    let window = 2 * alpha + 1;
    let mut steps = vec![p.clone()];
    loop {
        let cur = steps.last().expect("ladder is nonempty").vertices();
        if cur.len() < window {
            break;
        }
        let prefix = &cur[..window];
        let chord = (2..window)
            .flat_map(|span| (0..window - span).map(move |i| (i, i + span)))
            .find(|&(i, j)| g.has_edge(prefix[i], prefix[j]));
        let Some((i, j)) = chord else {
            let independent_set = prefix.iter().step_by(2).copied().collect();
            return Err(ChopError::NoChord { independent_set });
        };
        let mut next = cur[..=i].to_vec();
        next.extend_from_slice(&cur[j..]);
        steps.push(Path::new(next));
    }
    Ok(ReductionLadder { steps, alpha })
}

/// A ladder step with order in `[lo, hi]`. Any window of width `2 alpha`
/// inside `[1, order(P_0)]` is hit.
pub fn reduction_in_interval(ladder: &ReductionLadder, lo: usize, hi: usize) -> Result<&Path, ChopError> {
    ladder
        .steps
        .iter()
        .find(|s| (lo..=hi).contains(&s.order()))
        .ok_or(ChopError::NotCovered { lo, hi })
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("path {0} does not join the family endpoints")]
    WrongEndpoints(Path),
    #[error("path of order {order} is invalid: {violation}")]
    InvalidPath { order: usize, violation: Violation },
    #[error("path of order {0} leaves the allowed vertex set")]
    OutsidePart(usize),
}

/// Concrete paths between two fixed endpoints, one per achieved order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderFamily {
    endpoints: (usize, usize),
    paths: BTreeMap<usize, Path>,
}

impl OrderFamily {
    pub fn new(u: usize, v: usize) -> Self {
        OrderFamily {
            endpoints: (u, v),
            paths: BTreeMap::new(),
        }
    }

    pub fn endpoints(&self) -> (usize, usize) {
        self.endpoints
    }

    /// Adds `p` under its order unless that order is already present.
    /// Paths running from the second endpoint to the first are reversed.
    pub fn insert(&mut self, p: Path) -> Result<bool, FamilyError> {
        let (u, v) = self.endpoints;
        let p = match p.endpoints() {
            (a, b) if (a, b) == (u, v) => p,
            (a, b) if (a, b) == (v, u) => p.reversed(),
            _ => return Err(FamilyError::WrongEndpoints(p)),
        };
        let order = p.order();
        if self.paths.contains_key(&order) {
            return Ok(false);
        }
        self.paths.insert(order, p);
        Ok(true)
    }

    pub fn get(&self, order: usize) -> Option<&Path> {
        self.paths.get(&order)
    }

    pub fn contains(&self, order: usize) -> bool {
        self.paths.contains_key(&order)
    }

    pub fn orders(&self) -> impl Iterator<Item = usize> + '_ {
        self.paths.keys().copied()
    }

    pub fn paths(&self) -> impl Iterator<Item = &Path> {
        self.paths.values()
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn max_order(&self) -> Option<usize> {
        self.paths.keys().next_back().copied()
    }

    /// Every order in `[lo, hi]` is present.
    pub fn covers(&self, lo: usize, hi: usize) -> bool {
        (lo..=hi).all(|q| self.contains(q))
    }

    /// First order in `[lo, hi]` that is missing.
    pub fn first_gap(&self, lo: usize, hi: usize) -> Option<usize> {
        (lo..=hi).find(|&q| !self.contains(q))
    }

    /// Every window of `k` consecutive integers inside `[l1, l2]` contains
    /// some order of the family.
    pub fn hits_every_window(&self, l1: usize, l2: usize, k: usize) -> bool {
        if k == 0 {
            return false;
        }
        if l2 + 1 < l1 + k {
            return true;
        }
        (l1..=l2 + 1 - k).all(|lo| self.paths.range(lo..lo + k).next().is_some())
    }

    /// Same endpoints swapped, every path reversed.
    pub fn reversed(&self) -> OrderFamily {
        OrderFamily {
            endpoints: (self.endpoints.1, self.endpoints.0),
            paths: self.paths.iter().map(|(&q, p)| (q, p.reversed())).collect(),
        }
    }

    /// All steps of a ladder, keyed by order.
    pub fn from_ladder(ladder: &ReductionLadder) -> OrderFamily {
        let (u, v) = ladder.endpoints();
        let mut fam = OrderFamily::new(u, v);
        for step in &ladder.steps {
            fam.insert(step.clone()).expect("ladder steps share endpoints");
        }
        fam
    }

    /// Every path is valid in `g`, joins the endpoints, and stays in `part`
    /// when one is given.
    pub fn validate(&self, g: &Graph, part: Option<&VertexSet>) -> Result<(), FamilyError> {
        for (&order, p) in &self.paths {
            verify::check_path_between(g, p, self.endpoints.0, self.endpoints.1, order)
                .map_err(|violation| FamilyError::InvalidPath { order, violation })?;
            if let Some(part) = part {
                if p.vertices().iter().any(|&x| !part.contains(x)) {
                    return Err(FamilyError::OutsidePart(order));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CollateError {
    #[error("order {s} outside [{lo}, {hi}]")]
    OutOfRange { s: usize, lo: usize, hi: usize },
    #[error("bad family: {0}")]
    BadFamily(#[from] FamilyError),
    #[error("condition violated: {0}")]
    ConditionViolated(String),
    #[error("no pair of family orders sums to {0}")]
    NoSplice(usize),
}

/// The data of a collating step: two families in disjoint parts `v1`, `v2`
/// joined by the crossing edges `(x1, x2)` and `(y1, y2)`.
#[derive(Debug, Clone)]
pub struct Collation<'a> {
    pub g: &'a Graph,
    pub v1: &'a VertexSet,
    pub v2: &'a VertexSet,
    pub x_edge: (usize, usize),
    pub y_edge: (usize, usize),
    /// Paths from `x1` to `y1` inside `v1`.
    pub fam1: &'a OrderFamily,
    /// Paths from `x2` to `y2` inside `v2`.
    pub fam2: &'a OrderFamily,
    pub k: usize,
    pub a: usize,
    pub b: usize,
    pub l1: usize,
    pub l2: usize,
}

impl Collation<'_> {
    /// `[a + l1 + k, b + l2]`.
    pub fn range(&self) -> (usize, usize) {
        (self.a + self.l1 + self.k, self.b + self.l2)
    }

    fn fail(msg: impl Into<String>) -> CollateError {
        CollateError::ConditionViolated(msg.into())
    }

    /// Checks the structural data and the three numeric conditions.
    ///
    /// The upper end `b + l2` is only reachable when `l2` itself is an order
    /// of `fam2`, so that is required as well.
    pub fn check(&self) -> Result<(), CollateError> {
        let (x1, x2) = self.x_edge;
        let (y1, y2) = self.y_edge;
        if !self.v1.is_disjoint(self.v2) {
            return Err(Self::fail("parts overlap"));
        }
        if x1 == y1 || x2 == y2 {
            return Err(Self::fail("crossing edges are not disjoint"));
        }
        if !(self.v1.contains(x1) && self.v1.contains(y1) && self.v2.contains(x2) && self.v2.contains(y2)) {
            return Err(Self::fail("crossing edges do not cross the partition"));
        }
        if !self.g.has_edge(x1, x2) || !self.g.has_edge(y1, y2) {
            return Err(Self::fail("crossing edge missing from graph"));
        }
        if self.fam1.endpoints() != (x1, y1) || self.fam2.endpoints() != (x2, y2) {
            return Err(Self::fail("family endpoints do not match the crossing edges"));
        }
        self.fam1.validate(self.g, Some(self.v1))?;
        self.fam2.validate(self.g, Some(self.v2))?;
        if self.k == 0 || self.a == 0 || self.a > self.b || self.l1 > self.l2 {
            return Err(Self::fail("parameters must be positive with a <= b and l1 <= l2"));
        }
        if self.b - self.a + 1 < self.k {
            return Err(Self::fail(format!("b - a = {} < k - 1 = {}", self.b - self.a, self.k - 1)));
        }
        if let Some(q) = self.fam1.first_gap(self.a, self.b) {
            return Err(Self::fail(format!("first family misses order {q}")));
        }
        if !self.fam2.hits_every_window(self.l1, self.l2, self.k) {
            return Err(Self::fail("second family misses a window"));
        }
        if !self.fam2.contains(self.l2) {
            return Err(Self::fail(format!("second family lacks the top order {}", self.l2)));
        }
        Ok(())
    }

    /// A cycle of order exactly `s`.
    pub fn cycle(&self, s: usize) -> Result<Cycle, CollateError> {
        self.check()?;
        let (lo, hi) = self.range();
        if !(lo..=hi).contains(&s) {
            return Err(CollateError::OutOfRange { s, lo, hi });
        }
        splice(self.fam1, self.fam2, s).ok_or(CollateError::NoSplice(s))
    }
}

/// Joins a `fam1` path and a reversed `fam2` path whose orders sum to `s`,
/// using the smallest usable `fam2` order. The crossing edges are the pairs
/// of first and of last endpoints.
pub fn splice(fam1: &OrderFamily, fam2: &OrderFamily, s: usize) -> Option<Cycle> {
    let (q2, q1) = fam2
        .orders()
        .filter(|&q2| q2 < s)
        .map(|q2| (q2, s - q2))
        .find(|&(_, q1)| fam1.contains(q1))?;
    let mut seq = fam1.get(q1)?.vertices().to_vec();
    seq.extend(fam2.get(q2)?.vertices().iter().rev());
    Some(Cycle::new(seq))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn two_triangles() -> (Graph, VertexSet, VertexSet) {
        // triangles {0,1,2} and {3,4,5}; crossing edges (0,3) and (1,4)
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4)]).unwrap();
        (g, VertexSet::from(vec![0, 1, 2]), VertexSet::from(vec![3, 4, 5]))
    }

    fn triangle_family(x: usize, y: usize, z: usize) -> OrderFamily {
        let mut f = OrderFamily::new(x, y);
        f.insert(Path::new(vec![x, y])).unwrap();
        f.insert(Path::new(vec![x, z, y])).unwrap();
        f
    }

    #[test]
    fn short_path_is_its_own_ladder() {
        let g = Graph::path(4);
        let ladder = chop(&g, &Path::new(vec![0, 1, 2, 3]), 2).unwrap();
        assert_eq!(ladder.orders(), vec![4]);
    }

    #[test]
    fn complete_graph_descends_to_an_edge() {
        let g = Graph::complete(6);
        let ladder = chop(&g, &Path::new((0..6).collect()), 1).unwrap();
        assert_eq!(ladder.orders(), vec![6, 5, 4, 3, 2]);
        ladder.validate(&g).unwrap();
    }

    #[test]
    fn wrong_alpha_reports_independent_set() {
        let g = Graph::path(6);
        let err = chop(&g, &Path::new((0..6).collect()), 2).unwrap_err();
        let ChopError::NoChord { independent_set } = err else {
            panic!("expected NoChord");
        };
        assert_eq!(independent_set, VertexSet::from(vec![0, 2, 4]));
        assert!(verify::check_independent_set(&g, &independent_set).is_ok());
    }

    #[test]
    fn interval_queries() {
        let ladder = ReductionLadder {
            steps: vec![Path::new((0..9).collect()), Path::new((0..6).collect()), Path::new((0..3).collect())],
            alpha: 2,
        };
        assert_eq!(reduction_in_interval(&ladder, 5, 8).unwrap().order(), 6);
        assert!([3, 6].contains(&reduction_in_interval(&ladder, 3, 6).unwrap().order()));
        assert_eq!(reduction_in_interval(&ladder, 7, 8), Err(ChopError::NotCovered { lo: 7, hi: 8 }));
    }

    #[test]
    fn triangles_collate_to_six_cycle() {
        let (g, v1, v2) = two_triangles();
        let fam1 = triangle_family(0, 1, 2);
        let fam2 = triangle_family(3, 4, 5);
        let c = Collation {
            g: &g,
            v1: &v1,
            v2: &v2,
            x_edge: (0, 3),
            y_edge: (1, 4),
            fam1: &fam1,
            fam2: &fam2,
            k: 2,
            a: 2,
            b: 3,
            l1: 2,
            l2: 3,
        };
        let cyc = c.cycle(6).unwrap();
        assert_eq!(cyc.order(), 6);
        assert!(verify::check_cycle(&g, &cyc).is_ok());
        assert_eq!(c.cycle(7), Err(CollateError::OutOfRange { s: 7, lo: 6, hi: 6 }));
    }

    #[test]
    fn collate_rejects_missing_top_order() {
        let (g, v1, v2) = two_triangles();
        let fam1 = triangle_family(0, 1, 2);
        let mut fam2 = OrderFamily::new(3, 4);
        fam2.insert(Path::new(vec![3, 4])).unwrap();
        let c = Collation {
            g: &g,
            v1: &v1,
            v2: &v2,
            x_edge: (0, 3),
            y_edge: (1, 4),
            fam1: &fam1,
            fam2: &fam2,
            k: 2,
            a: 2,
            b: 3,
            l1: 2,
            l2: 3,
        };
        assert!(matches!(c.check(), Err(CollateError::ConditionViolated(_))));
    }

    #[test]
    fn family_windows_and_reversal() {
        let mut f = OrderFamily::new(0, 5);
        for q in [2, 4, 5, 8] {
            let mut v: Vec<usize> = (10..10 + q - 2).collect();
            v.insert(0, 0);
            v.push(5);
            f.insert(Path::new(v)).unwrap();
        }
        assert!(f.hits_every_window(2, 8, 3));
        assert!(!f.hits_every_window(2, 8, 2));
        assert!(f.covers(4, 5));
        assert_eq!(f.first_gap(2, 5), Some(3));
        let r = f.reversed();
        assert_eq!(r.endpoints(), (5, 0));
        assert_eq!(r.get(4).unwrap().first(), 5);
    }

    use proptest::prelude::*;

    fn dense_graph() -> impl Strategy<Value = Graph> {
        (4usize..=12, proptest::collection::vec(0u8..100, 66), 40u8..95).prop_map(|(n, coins, pct)| {
            let mut g = Graph::new(n);
            let mut it = coins.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap_or(0) < pct {
                        g.ensure_edge(u, v);
                    }
                }
            }
            g
        })
    }

    proptest! {
        #[test]
        fn ladder_hits_every_window(g in dense_graph()) {
            let alpha = oracle::independence_number(&g).unwrap();
            let n = g.order();
            // longest path from vertex 0 found by the exact oracle
            let best = (1..n)
                .filter_map(|v| {
                    let orders = oracle::all_path_orders(&g, 0, v).unwrap();
                    orders.iter().max().map(|&q| (q, v))
                })
                .max();
            if let Some((q, v)) = best {
                let p = oracle::path_of_order(&g, 0, v, q).unwrap().unwrap();
                let ladder = chop(&g, &p, alpha).unwrap();
                prop_assert!(ladder.validate(&g).is_ok());
                let w = 2 * alpha;
                if q >= w {
                    for lo in 1..=q + 1 - w {
                        prop_assert!(reduction_in_interval(&ladder, lo, lo + w - 1).is_ok());
                    }
                }
            }
        }
    }
}
