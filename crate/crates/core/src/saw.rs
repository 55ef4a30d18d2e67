//! Saws: a Hamiltonian backbone `(v_1, ..., v_{2k+1}, v_1)` carrying every
//! chord `(v_{2s-1}, v_{2s+1})`, and the path families they support.
//!
//! Backbone positions are 1-based throughout this module. Paths are built as
//! position sequences and converted to host labels at the end. Shortening a
//! path along the backbone always works the same way: a run
//! `(v_{2s-1}, v_{2s}, v_{2s+1})` of consecutive positions is replaced by
//! its chord, dropping `v_{2s}`.

use std::fmt;

use thiserror::Error;

use crate::chop_collate::{self, OrderFamily};
use crate::graph::{Cycle, Graph, Path, VertexSet};
use crate::oracle;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SawError {
    #[error("not a saw: {0}")]
    NotASaw(String),
    #[error("hypothesis violated: {reason}")]
    HypothesisViolated {
        reason: String,
        /// An independent set that is too large, when that is the reason.
        independent_set: Option<VertexSet>,
    },
    #[error("no saw of degree at least {0} was assembled")]
    SawNotFound(usize),
    #[error("{q} outside [{lo}, {hi}]")]
    OutOfRange { q: usize, lo: usize, hi: usize },
    #[error("no scan pair yields order {0}")]
    PairNotFound(usize),
    #[error("order {missing} of [{lo}, {hi}] was not produced")]
    Uncovered { missing: usize, lo: usize, hi: usize },
    #[error("bad backbone position or vertex {0}")]
    BadIndex(usize),
}

fn hypothesis(reason: impl Into<String>) -> SawError {
    SawError::HypothesisViolated {
        reason: reason.into(),
        independent_set: None,
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Saw {
    backbone: Vec<usize>,
    /// Induced subgraph on the backbone; local vertex `i` is position `i + 1`.
    local: Graph,
    k: usize,
    degree: usize,
}

impl fmt::Debug for Saw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Saw(k={}, d={}, backbone={:?})", self.k, self.degree, self.backbone)
    }
}

/// One line: the host labels of `v_1 .. v_{2k+1}`, space separated.
impl fmt::Display for Saw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.backbone.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

impl Saw {
    /// Validates the backbone against `host` and takes the induced subgraph.
    pub fn new(host: &Graph, backbone: Vec<usize>) -> Result<Saw, SawError> {
        let n = backbone.len();
        if n < 3 || n.is_multiple_of(2) {
            return Err(SawError::NotASaw(format!("backbone has {n} vertices")));
        }
        if let Some(&v) = backbone.iter().find(|&&v| v >= host.order()) {
            return Err(SawError::BadIndex(v));
        }
        let mut g = Graph::new(n);
        let mut seen = std::collections::HashSet::new();
        for &v in &backbone {
            if !seen.insert(v) {
                return Err(SawError::NotASaw(format!("vertex {v} repeated")));
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if host.has_edge(backbone[a], backbone[b]) {
                    g.add_edge(a, b).expect("fresh pair");
                }
            }
        }
        Saw::from_local(g).map(|mut s| {
            s.backbone = backbone;
            s
        })
    }

    /// A saw whose backbone is `0, 1, ..., n-1` in `g` itself.
    pub fn from_local(g: Graph) -> Result<Saw, SawError> {
        let n = g.order();
        if n < 3 || n.is_multiple_of(2) {
            return Err(SawError::NotASaw(format!("backbone has {n} vertices")));
        }
        for a in 0..n {
            let b = (a + 1) % n;
            if !g.has_edge(a, b) {
                return Err(SawError::NotASaw(format!("backbone edge v{} v{} missing", a + 1, b + 1)));
            }
        }
        for s in (0..n - 2).step_by(2) {
            if !g.has_edge(s, s + 2) {
                return Err(SawError::NotASaw(format!("chord v{} v{} missing", s + 1, s + 3)));
            }
        }
        let k = (n - 1) / 2;
        let degree = g.degree(2 * k - 1).min(g.degree(2 * k));
        Ok(Saw {
            backbone: (0..n).collect(),
            local: g,
            k,
            degree,
        })
    }

    /// Reads the one-line form written by `Display`.
    pub fn parse_line(host: &Graph, line: &str) -> Result<Saw, SawError> {
        let backbone = line
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| SawError::NotASaw(format!("bad label {t:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Saw::new(host, backbone)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> usize {
        2 * self.k + 1
    }

    /// `min(d_S(v_{2k}), d_S(v_{2k+1}))` inside the saw.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn backbone(&self) -> &[usize] {
        &self.backbone
    }

    /// Induced subgraph on the backbone, local vertex `i` = position `i + 1`.
    pub fn local(&self) -> &Graph {
        &self.local
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.backbone.iter().copied().collect()
    }

    /// Host label of position `pos`.
    pub fn at(&self, pos: usize) -> usize {
        self.backbone[pos - 1]
    }

    /// Position of host vertex `v`.
    pub fn position(&self, v: usize) -> Option<usize> {
        self.backbone.iter().position(|&w| w == v).map(|i| i + 1)
    }

    /// `pos + offset` reduced cyclically into `1..=2k+1`.
    pub fn cyclic(&self, pos: usize, offset: isize) -> usize {
        let n = self.order() as isize;
        ((pos as isize - 1 + offset).rem_euclid(n) + 1) as usize
    }

    fn adj(&self, a: usize, b: usize) -> bool {
        self.local.has_edge(a - 1, b - 1)
    }

    fn to_path(&self, seq: &[usize]) -> Path {
        Path::new(seq.iter().map(|&p| self.at(p)).collect())
    }

    /// Positions of the arc from `i` to `j` that does (or does not) contain
    /// the wrap edge `(v_{2k+1}, v_1)`.
    pub fn arc(&self, i: usize, j: usize, uses_wrap: bool) -> Result<Vec<usize>, SawError> {
        let n = self.order();
        for x in [i, j] {
            if x == 0 || x > n {
                return Err(SawError::BadIndex(x));
            }
        }
        if i == j {
            return Err(SawError::BadIndex(i));
        }
        let step: isize = match (uses_wrap, i < j) {
            (false, true) | (true, false) => 1,
            (false, false) | (true, true) => -1,
        };
        let mut seq = vec![i];
        let mut cur = i;
        while cur != j {
            cur = self.cyclic(cur, step);
            seq.push(cur);
        }
        Ok(seq)
    }

    /// Host-label form of a cycle given by positions.
    fn to_cycle(&self, seq: &[usize]) -> Cycle {
        Cycle::new(seq.iter().map(|&p| self.at(p)).collect())
    }
}

/// Indices `m` of `seq` where `seq[m-1], seq[m], seq[m+1]` is a run
/// `2s-1, 2s, 2s+1` in either direction.
fn removable(seq: &[usize]) -> Vec<usize> {
    (1..seq.len().saturating_sub(1))
        .filter(|&m| {
            let mid = seq[m];
            mid.is_multiple_of(2) && {
                let (a, b) = (seq[m - 1], seq[m + 1]);
                (a + 1 == mid && b == mid + 1) || (b + 1 == mid && a == mid + 1)
            }
        })
        .collect()
}

/// `seq` with the middles of its first `count` removable runs dropped.
fn shortened(seq: &[usize], count: usize) -> Option<Vec<usize>> {
    let runs = removable(seq);
    if count > runs.len() {
        return None;
    }
    let drop = &runs[..count];
    Some(
        seq.iter()
            .enumerate()
            .filter(|(m, _)| !drop.contains(m))
            .map(|(_, &p)| p)
            .collect(),
    )
}

fn add_with_reductions(s: &Saw, fam: &mut OrderFamily, seq: &[usize]) {
    let runs = removable(seq).len();
    for c in 0..=runs {
        let reduced = shortened(seq, c).expect("count within range");
        fam.insert(s.to_path(&reduced)).expect("family endpoints match");
    }
}

/// A `q`-reduction of the backbone arc from `v_i` to `v_j`.
///
/// Allowed orders: `[ceil(l/2) + 1, l]` for arcs avoiding the wrap edge and
/// `[floor(l/2) + 2, l]` for arcs through it, where `l` is the arc's order.
pub fn backbone_reduction(s: &Saw, i: usize, j: usize, uses_wrap: bool, q: usize) -> Result<Path, SawError> {
    let seq = s.arc(i, j, uses_wrap)?;
    let l = seq.len();
    let lo = if uses_wrap { l / 2 + 2 } else { l.div_ceil(2) + 1 }.min(l);
    if !(lo..=l).contains(&q) {
        return Err(SawError::OutOfRange { q, lo, hi: l });
    }
    let reduced = shortened(&seq, l - q).ok_or(SawError::OutOfRange { q, lo, hi: l })?;
    Ok(s.to_path(&reduced))
}

/// Every reduction of the arc, one per order.
pub fn arc_family(s: &Saw, i: usize, j: usize, uses_wrap: bool) -> Result<OrderFamily, SawError> {
    let seq = s.arc(i, j, uses_wrap)?;
    let mut fam = OrderFamily::new(s.at(i), s.at(j));
    add_with_reductions(s, &mut fam, &seq);
    Ok(fam)
}

/// Paths from `v_{2k}` to `v_{2k+1}` of every order in `[2, 2k+1]`, for
/// saws with `3 d(S) >= 2 (2k+1)`.
pub fn endpair_paths(s: &Saw) -> Result<OrderFamily, SawError> {
    let n = s.order();
    if 3 * s.degree() < 2 * n {
        return Err(hypothesis(format!("degree {} below 2(2k+1)/3 = {:.2}", s.degree(), 2.0 * n as f64 / 3.0)));
    }
    let fam = endpair_family(s);
    match fam.first_gap(2, n) {
        None => Ok(fam),
        Some(q) => Err(SawError::PairNotFound(q)),
    }
}

/// The constructions behind [`endpair_paths`], without the degree check.
pub fn endpair_family(s: &Saw) -> OrderFamily {
    let k = s.k();
    let n = s.order();
    let (a, b) = (2 * k, n);
    let mut fam = OrderFamily::new(s.at(a), s.at(b));
    // long way round, through the wrap edge
    let long: Vec<usize> = (1..=2 * k).rev().chain([n]).collect();
    add_with_reductions(s, &mut fam, &long);
    fam.insert(s.to_path(&[a, b])).expect("endpoints");
    if let Some(w) = (1..n).find(|&w| w != a && s.adj(a, w) && s.adj(w, b)) {
        fam.insert(s.to_path(&[a, w, b])).expect("endpoints");
    }
    // Relabel the backbone cycle as w_1 = v_{2k}, w_2 = v_{2k-1}, ...,
    // w_{2k} = v_1, w_n = v_{2k+1}, then join w_1 and w_n through a run
    // w_i .. w_{i+g} whose ends see them crosswise.
    let w = |m: usize| if m == n { n } else { 2 * k + 1 - m };
    for g in 1..n.saturating_sub(3) + 1 {
        for i in 2..n - g {
            let (x, y) = (w(i), w(i + g));
            let run: Vec<usize> = (i..=i + g).map(w).collect();
            let seq: Option<Vec<usize>> = if s.adj(a, x) && s.adj(b, y) {
                Some([a].into_iter().chain(run.iter().copied()).chain([b]).collect())
            } else if s.adj(a, y) && s.adj(b, x) {
                Some([a].into_iter().chain(run.iter().rev().copied()).chain([b]).collect())
            } else {
                None
            };
            if let Some(seq) = seq {
                add_with_reductions(s, &mut fam, &seq);
                break;
            }
        }
    }
    fam
}

/// The maximal-span chain of pairs `(i, l)` with `i <= j < l <= 2k`, both
/// adjacent to `v_{2k+1}`: start from `(1, 2k)` and, while the span is at
/// least `2t + 5` with `t = 2k - d`, move to the dominated pair of largest
/// span.
pub fn pr_chain(s: &Saw, j: usize) -> Vec<(usize, usize)> {
    let k = s.k();
    let top = s.order();
    if j == 0 || j >= 2 * k {
        return Vec::new();
    }
    let t = (2 * k).saturating_sub(s.degree());
    let hub = |x: usize| s.adj(x, top);
    let mut chain = vec![(1, 2 * k)];
    loop {
        let (i0, l0) = *chain.last().expect("nonempty");
        if l0 - i0 < 2 * t + 5 {
            break;
        }
        let next = (i0..=j)
            .filter(|&i| hub(i))
            .flat_map(|i| (j + 1..=l0).filter(|&l| hub(l)).map(move |l| (i, l)))
            .filter(|&p| p != (i0, l0))
            .max_by_key(|&(i, l)| (l - i, std::cmp::Reverse(i)));
        match next {
            Some(p) => chain.push(p),
            None => break,
        }
    }
    chain
}

/// Paths between the consecutive backbone vertices `v_j`, `v_{j+1}`
/// (`j = 2k+1` is the wrap pair `v_{2k+1}`, `v_1`), covering
/// `[2k - d + 6, 2k + 1]`.
pub fn consecutive_pair_paths(s: &Saw, j: usize) -> Result<OrderFamily, SawError> {
    let fam = consecutive_pair_family(s, j)?;
    let hi = s.order();
    let lo = (2 * s.k() + 6).saturating_sub(s.degree()).max(2);
    match fam.first_gap(lo, hi) {
        Some(missing) if lo <= hi => Err(SawError::Uncovered { missing, lo, hi }),
        _ => Ok(fam),
    }
}

/// The constructions behind [`consecutive_pair_paths`], without the
/// coverage check.
pub fn consecutive_pair_family(s: &Saw, j: usize) -> Result<OrderFamily, SawError> {
    let k = s.k();
    let top = s.order();
    if j == 0 || j > top {
        return Err(SawError::BadIndex(j));
    }
    let next = s.cyclic(j, 1);
    let mut fam = OrderFamily::new(s.at(j), s.at(next));
    let hub = |x: usize| s.adj(x, top);
    if j < 2 * k {
        // v_j .. v_i, v_{2k+1}, v_l .. v_{j+1}; the maximal-span chain first.
        let chain = pr_chain(s, j);
        let all: Vec<(usize, usize)> = (1..=j)
            .filter(|&i| hub(i))
            .flat_map(|i| (j + 1..=2 * k).filter(|&l| hub(l)).map(move |l| (i, l)))
            .collect();
        for &(i, l) in chain.iter().chain(all.iter()) {
            let seq: Vec<usize> = (i..=j).rev().chain([top]).chain((j + 1..=l).rev()).collect();
            add_with_reductions(s, &mut fam, &seq);
        }
    } else if j == 2 * k {
        for i in (1..2 * k).filter(|&i| hub(i)) {
            let seq: Vec<usize> = (i..=2 * k).rev().chain([top]).collect();
            add_with_reductions(s, &mut fam, &seq);
        }
        for p in endpair_family(s).paths() {
            fam.insert(p.clone()).expect("same endpoints");
        }
    } else {
        for l in (1..=2 * k).filter(|&l| hub(l)) {
            let seq: Vec<usize> = [top].into_iter().chain((1..=l).rev()).collect();
            add_with_reductions(s, &mut fam, &seq);
        }
    }
    Ok(fam)
}

/// Result of [`any_pair_paths`]: `l > d` and a family covering
/// `[l - ceil(d/2) + 5, l]`.
#[derive(Debug, Clone)]
pub struct AnyPair {
    pub l: usize,
    pub family: OrderFamily,
}

impl AnyPair {
    /// The guaranteed window `[l - ceil(d/2) + 5, l]` (possibly a singleton).
    pub fn window(&self, d: usize) -> (usize, usize) {
        ((self.l + 5).saturating_sub(d.div_ceil(2)).min(self.l), self.l)
    }
}

/// Paths between two arbitrary backbone vertices `x`, `y` (host labels) in a
/// saw with `d(S) >= k`.
pub fn any_pair_paths(s: &Saw, x: usize, y: usize) -> Result<AnyPair, SawError> {
    let d = s.degree();
    if d < s.k() {
        return Err(hypothesis(format!("degree {d} below k = {}", s.k())));
    }
    let family = any_pair_family(s, x, y)?;
    let ceil = d.div_ceil(2);
    let l = family
        .orders()
        .filter(|&l| l > d)
        .filter(|&l| family.covers((l + 5).saturating_sub(ceil).min(l), l))
        .max();
    match l {
        Some(l) => Ok(AnyPair { l, family }),
        None => Err(SawError::Uncovered {
            missing: d + 1,
            lo: d + 1,
            hi: s.order(),
        }),
    }
}

/// Union of every construction for the pair `x`, `y` (host labels).
pub fn any_pair_family(s: &Saw, x: usize, y: usize) -> Result<OrderFamily, SawError> {
    let px = s.position(x).ok_or(SawError::BadIndex(x))?;
    let py = s.position(y).ok_or(SawError::BadIndex(y))?;
    if px == py {
        return Err(SawError::BadIndex(x));
    }
    let k = s.k();
    let top = s.order();
    let mut fam = OrderFamily::new(x, y);
    // both arcs along the backbone
    for wrap in [false, true] {
        add_with_reductions(s, &mut fam, &s.arc(px, py, wrap)?);
    }
    let (i, j) = (px.min(py), px.max(py));
    let mut seqs: Vec<Vec<usize>> = Vec::new();
    if j < 2 * k {
        // v_i .. v_1, v_{2k+1}, run between i and j, v_{2k}, v_{2k-1} .. v_j
        let head: Vec<usize> = (1..=i).rev().chain([top]).collect();
        let tail: Vec<usize> = (j..=2 * k).rev().collect();
        for p in i + 1..j {
            for q in p..j {
                let run: Option<Vec<usize>> = if s.adj(top, p) && s.adj(2 * k, q) {
                    Some((p..=q).collect())
                } else if s.adj(top, q) && s.adj(2 * k, p) {
                    Some((p..=q).rev().collect())
                } else {
                    None
                };
                if let Some(run) = run {
                    seqs.push(head.iter().chain(run.iter()).chain(tail.iter()).copied().collect());
                }
            }
        }
    } else if j == top && i < 2 * k {
        // v_{2k+1}, v_1 .. v_q, v_{2k}, v_{2k-1} .. v_i
        for q in (1..i).filter(|&q| s.adj(2 * k, q)) {
            let seq: Vec<usize> = [top].into_iter().chain(1..=q).chain((i..=2 * k).rev()).collect();
            seqs.push(seq);
        }
    } else if j == 2 * k && i < 2 * k {
        // v_{2k} .. v_q, v_{2k+1}, v_1 .. v_i
        for q in (i + 1..=2 * k).filter(|&q| s.adj(top, q)) {
            let seq: Vec<usize> = (q..=2 * k).rev().chain([top]).chain(1..=i).collect();
            seqs.push(seq);
        }
    } else {
        for p in endpair_family(s).paths() {
            fam.insert(p.clone()).expect("same endpoints");
        }
    }
    for seq in seqs {
        // constructions run from v_i to v_j or the reverse; the family
        // orients them
        add_with_reductions(s, &mut fam, &seq);
    }
    Ok(fam)
}

/// A cycle of order exactly `q` inside the saw, for `q` in `[4r, 2k+1]`,
/// when `alpha(S) <= r`, `k >= 3` and `2r <= k`.
pub fn saw_cycle(s: &Saw, r: usize, q: usize) -> Result<Cycle, SawError> {
    let k = s.k();
    let top = s.order();
    if k < 3 || 2 * r > k || r == 0 {
        return Err(hypothesis(format!("need k >= 3 and 1 <= 2r <= k, got k = {k}, r = {r}")));
    }
    if !(4 * r..=top).contains(&q) {
        return Err(SawError::OutOfRange { q, lo: 4 * r, hi: top });
    }
    let alpha_set = oracle::max_independent_set(s.local()).map_err(|e| hypothesis(e.to_string()))?;
    if alpha_set.len() > r {
        return Err(SawError::HypothesisViolated {
            reason: format!("saw has independence number {} > {r}", alpha_set.len()),
            independent_set: Some(alpha_set.iter().map(|v| s.at(v + 1)).collect()),
        });
    }
    if q > k {
        let full: Vec<usize> = (1..=top).collect();
        let reduced = shortened(&full, top - q).ok_or(SawError::OutOfRange { q, lo: k + 1, hi: top })?;
        return Ok(s.to_cycle(&reduced));
    }
    // Split at 4r: reductions of v_1 .. v_{4r-1} against a chopped
    // v_{2k+1} .. v_{4r}, joined by (v_1, v_{2k+1}) and (v_{4r-1}, v_{4r}).
    let cut = 4 * r;
    let mut fam1 = OrderFamily::new(s.at(1), s.at(cut - 1));
    add_with_reductions(s, &mut fam1, &(1..cut).collect::<Vec<_>>());
    let second = s.to_path(&(cut..=top).rev().collect::<Vec<_>>());
    let ladder = chop_collate::chop(s.local(), &local_path(s, &second), r).map_err(|e| hypothesis(e.to_string()))?;
    let mut fam2 = OrderFamily::new(s.at(top), s.at(cut));
    for step in &ladder.steps {
        fam2.insert(s.to_path(&step.vertices().iter().map(|&v| v + 1).collect::<Vec<_>>()))
            .expect("ladder keeps endpoints");
    }
    chop_collate::splice(&fam1, &fam2, q).ok_or(SawError::Uncovered { missing: q, lo: cut, hi: k })
}

fn local_path(s: &Saw, host_path: &Path) -> Path {
    Path::new(
        host_path
            .vertices()
            .iter()
            .map(|&v| s.position(v).expect("path inside saw") - 1)
            .collect(),
    )
}

/// Extracts a saw of degree at least `p - r` from a graph with minimum
/// degree at least `p` and independence number at most `r`.
pub fn find_saw(g: &Graph, p: usize, r: usize) -> Result<Saw, SawError> {
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) < p) {
        return Err(hypothesis(format!("vertex {v} has degree {} < {p}", g.degree(v))));
    }
    let big = oracle::max_independent_set(g).map_err(|e| hypothesis(e.to_string()))?;
    if big.len() > r {
        return Err(SawError::HypothesisViolated {
            reason: format!("independence number {} > {r}", big.len()),
            independent_set: Some(big),
        });
    }
    if g.order() == 0 {
        return Err(SawError::SawNotFound(p.saturating_sub(r)));
    }
    let backbone = grow_chorded_path(g);
    let saw = close_saw(g, backbone)?;
    if saw.degree() + r < p {
        return Err(SawError::SawNotFound(p - r));
    }
    Ok(saw)
}

/// First edge `(a, b)`, lexicographically, inside the neighbourhood of `end`
/// outside `path`.
fn extension(g: &Graph, path: &[usize], end: usize) -> Option<(usize, usize)> {
    let outside: Vec<usize> = g.neighbors(end).filter(|w| !path.contains(w)).collect();
    outside
        .iter()
        .enumerate()
        .flat_map(|(ia, &a)| outside[ia + 1..].iter().map(move |&b| (a, b)))
        .find(|&(a, b)| g.has_edge(a, b))
}

/// Greedily grows `(v_1, ..., v_{2t+1})` with all chords `(v_{2s-1},
/// v_{2s+1})`, from vertex 0, until neither end orientation extends.
fn grow_chorded_path(g: &Graph) -> Vec<usize> {
    let mut path = vec![0];
    loop {
        let end = *path.last().expect("nonempty");
        if let Some((a, b)) = extension(g, &path, end) {
            path.extend([a, b]);
            continue;
        }
        if path.len() >= 3 {
            let m = path.len();
            path.swap(m - 1, m - 2);
            let end = path[m - 1];
            if let Some((a, b)) = extension(g, &path, end) {
                path.extend([a, b]);
                continue;
            }
            path.swap(m - 1, m - 2);
        }
        return path;
    }
}

/// Cuts the chorded path at the first vertex seeing one of its last two
/// vertices and rearranges it into a saw.
fn close_saw(g: &Graph, mut path: Vec<usize>) -> Result<Saw, SawError> {
    let m = path.len();
    if m < 3 {
        return Err(SawError::SawNotFound(0));
    }
    let (a, b) = (path[m - 2], path[m - 1]);
    let i = (0..m - 2)
        .find(|&i| g.has_edge(path[i], a) || g.has_edge(path[i], b))
        .expect("v_{2t-1} sees both ends");
    if !g.has_edge(path[i], b) {
        path.swap(m - 1, m - 2);
    }
    // `i` is 0-based, so an odd 1-based index means even `i`.
    let backbone: Vec<usize> = if i % 2 == 0 {
        path[i..].to_vec()
    } else {
        [path[i], path[i - 1]].into_iter().chain(path[i + 1..].iter().copied()).collect()
    };
    Saw::new(g, backbone)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{all_cycle_orders, all_path_orders};
    use crate::verify;

    fn complete_saw(n: usize) -> Saw {
        Saw::from_local(Graph::complete(n)).unwrap()
    }

    /// Bare backbone plus chords.
    fn bare(k: usize) -> Graph {
        let n = 2 * k + 1;
        let mut g = Graph::cycle(n);
        for s in (0..n - 2).step_by(2) {
            g.ensure_edge(s, s + 2);
        }
        g
    }

    /// Bare saw whose last two vertices see everything.
    fn heavy_tail(k: usize) -> Saw {
        let mut g = bare(k);
        let n = 2 * k + 1;
        for v in 0..n {
            for w in [n - 2, n - 1] {
                if v != w {
                    g.ensure_edge(v, w);
                }
            }
        }
        Saw::from_local(g).unwrap()
    }

    #[test]
    fn saw_invariants_are_checked() {
        assert!(Saw::from_local(bare(3)).is_ok());
        let mut g = Graph::cycle(7);
        g.ensure_edge(0, 2);
        assert!(matches!(Saw::from_local(g), Err(SawError::NotASaw(_))));
        assert!(Saw::from_local(Graph::complete(4)).is_err());
        let s = complete_saw(7);
        assert_eq!((s.k(), s.degree()), (3, 6));
        assert_eq!(s.cyclic(7, 1), 1);
        assert_eq!(s.cyclic(1, -1), 7);
    }

    #[test]
    fn saw_line_round_trip() {
        let host = Graph::complete(9);
        let s = Saw::new(&host, vec![4, 2, 8, 0, 1]).unwrap();
        assert_eq!(s.to_string(), "4 2 8 0 1");
        assert_eq!(Saw::parse_line(&host, "4 2 8 0 1").unwrap(), s);
    }

    #[test]
    fn reductions_of_short_backbone() {
        let s = Saw::from_local(bare(2)).unwrap();
        assert_eq!(backbone_reduction(&s, 1, 5, false, 5).unwrap(), Path::new(vec![0, 1, 2, 3, 4]));
        assert_eq!(backbone_reduction(&s, 1, 5, false, 4).unwrap(), Path::new(vec![0, 2, 3, 4]));
        assert!(matches!(backbone_reduction(&s, 1, 5, false, 3), Err(SawError::OutOfRange { .. })));
        assert!(backbone_reduction(&s, 1, 5, true, 2).is_ok());
    }

    #[test]
    fn full_backbone_reductions_match_oracle() {
        let s = Saw::from_local(bare(3)).unwrap();
        let r = all_path_orders(s.local(), 0, 6).unwrap();
        for q in 5..=7 {
            let p = backbone_reduction(&s, 1, 7, false, q).unwrap();
            assert_eq!(p.order(), q);
            assert!(verify::check_path(s.local(), &p).is_ok());
            assert!(r.contains(&q));
        }
    }

    #[test]
    fn endpair_examples() {
        let fam = endpair_paths(&complete_saw(7)).unwrap();
        assert!(fam.covers(2, 7));
        let s = heavy_tail(4);
        assert_eq!(s.degree(), 8);
        let fam = endpair_paths(&s).unwrap();
        let r = all_path_orders(s.local(), 7, 8).unwrap();
        for q in 2..=9 {
            assert!(fam.contains(q) && r.contains(&q), "order {q}");
        }
        let weak = Saw::from_local(bare(4)).unwrap();
        assert!(matches!(endpair_paths(&weak), Err(SawError::HypothesisViolated { .. })));
    }

    #[test]
    fn consecutive_pair_examples() {
        let s = complete_saw(7);
        let fam = consecutive_pair_paths(&s, 1).unwrap();
        assert!(fam.covers(6, 7));
        let s = heavy_tail(5);
        assert_eq!(s.degree(), 10);
        for j in 1..=11 {
            let fam = consecutive_pair_paths(&s, j).unwrap();
            assert!(fam.covers(6, 11), "pair {j}");
            fam.validate(s.local(), None).unwrap();
        }
    }

    #[test]
    fn chain_spans_shrink_slowly() {
        let s = heavy_tail(6);
        let t = 2 * s.k() - s.degree();
        for j in 1..2 * s.k() {
            let chain = pr_chain(&s, j);
            for w in chain.windows(2) {
                let (a, b) = (w[0].1 - w[0].0, w[1].1 - w[1].0);
                assert!(b < a && b + t + 2 >= a);
            }
        }
    }

    #[test]
    fn any_pair_in_complete_saw() {
        let s = complete_saw(13);
        let out = any_pair_paths(&s, 2, 9).unwrap();
        assert_eq!(out.l, 13);
        assert!(out.family.covers(12, 13));
    }

    #[test]
    fn any_pair_degree_check() {
        let s = Saw::from_local(bare(4)).unwrap();
        assert!(matches!(any_pair_paths(&s, 0, 3), Err(SawError::HypothesisViolated { .. })));
    }

    #[test]
    fn pancyclic_complete_saws() {
        let s = complete_saw(9);
        for q in 4..=9 {
            let c = saw_cycle(&s, 1, q).unwrap();
            assert_eq!(c.order(), q);
            assert!(verify::check_cycle(s.local(), &c).is_ok());
        }
        let s = complete_saw(13);
        let c = saw_cycle(&s, 2, 8).unwrap();
        assert_eq!(c.order(), 8);
        assert!(all_cycle_orders(s.local()).unwrap().contains(&8));
    }

    #[test]
    fn find_saw_in_complete_graph() {
        let g = Graph::complete(9);
        let s = find_saw(&g, 6, 1).unwrap();
        assert!(s.degree() >= 5);
    }

    #[test]
    fn find_saw_in_overlapping_cliques() {
        // two K8 sharing three vertices: 13 vertices, alpha 2, min degree 7
        let mut g = Graph::new(13);
        for block in [0..8, 5..13] {
            let vs: Vec<usize> = block.collect();
            for (a, &x) in vs.iter().enumerate() {
                for &y in &vs[a + 1..] {
                    g.ensure_edge(x, y);
                }
            }
        }
        let s = find_saw(&g, 7, 2).unwrap();
        assert!(s.degree() >= 5);
        assert!(Saw::new(&g, s.backbone().to_vec()).is_ok());
    }

    #[test]
    fn find_saw_hypotheses() {
        let g = Graph::cycle(8);
        assert!(matches!(find_saw(&g, 6, 3), Err(SawError::HypothesisViolated { .. })));
        let two = Graph::complete(4).disjoint_union(&Graph::complete(4));
        let err = find_saw(&two, 3, 1).unwrap_err();
        let SawError::HypothesisViolated { independent_set: Some(set), .. } = err else {
            panic!("expected a witness set");
        };
        assert_eq!(set.len(), 2);
    }
}
