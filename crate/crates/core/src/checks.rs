//! Randomized property suites: each lemma's guaranteed conclusion checked
//! against the brute-force oracles on seeded instances.
//!
//! Trials are independent and run in parallel; a trial's instance depends
//! only on the suite seed and the trial index.

use std::fmt;
use std::str::FromStr;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;
use rayon::prelude::*;

use crate::chop_collate::{self, Collation, OrderFamily};
use crate::eg_paths;
use crate::generate::{self, GenRng};
use crate::graph::{Graph, Path, VertexSet};
use crate::oracle;
use crate::saw::{self, Saw};
use crate::verify;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Lemma {
    Chop,
    Collate,
    ErdosGallai,
    SawFind,
    Pr1,
    Super,
    Lux,
    Flat,
    SawCycles,
}

impl Lemma {
    pub const ALL: [Lemma; 9] = [
        Lemma::Chop,
        Lemma::Collate,
        Lemma::ErdosGallai,
        Lemma::SawFind,
        Lemma::Pr1,
        Lemma::Super,
        Lemma::Lux,
        Lemma::Flat,
        Lemma::SawCycles,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Lemma::Chop => "chop",
            Lemma::Collate => "collate",
            Lemma::ErdosGallai => "erdos_gallai",
            Lemma::SawFind => "saw_find",
            Lemma::Pr1 => "pr1",
            Lemma::Super => "super",
            Lemma::Lux => "lux",
            Lemma::Flat => "flat",
            Lemma::SawCycles => "saw_cycles",
        }
    }

    /// Default `max_n` for the suite.
    pub fn default_max_n(self) -> usize {
        match self {
            Lemma::Chop => 12,
            Lemma::Collate => 14,
            Lemma::ErdosGallai => 11,
            Lemma::SawFind => 30,
            _ => 13,
        }
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Lemma {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Lemma::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| format!("unknown lemma {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub trials: usize,
    pub seed: u64,
    pub max_n: usize,
    /// Harness self-test: shifts a claimed interval bound by one.
    pub mutate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub lemma: Lemma,
    pub trials: usize,
    pub passed: usize,
    /// Smallest failing trial index with its message.
    pub first_failure: Option<(usize, String)>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.passed == self.trials
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}/{} passed", self.lemma, self.passed, self.trials)?;
        if let Some((i, msg)) = &self.first_failure {
            write!(f, "; first counterexample at trial {i}: {msg}")?;
        }
        Ok(())
    }
}

/// Seed of trial `index` under suite seed `seed`.
pub fn trial_rng(seed: u64, index: usize) -> GenRng {
    generate::rng(seed ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

pub fn run_suite(lemma: Lemma, cfg: &SuiteConfig) -> SuiteReport {
    let mut results: Vec<(usize, Result<(), String>)> = (0..cfg.trials)
        .into_par_iter()
        .map(|i| (i, run_trial(lemma, cfg, i)))
        .collect();
    results.sort_by_key(|(i, _)| *i);
    let passed = results.iter().filter(|(_, r)| r.is_ok()).count();
    let first_failure = results.into_iter().find_map(|(i, r)| r.err().map(|e| (i, e)));
    SuiteReport {
        lemma,
        trials: cfg.trials,
        passed,
        first_failure,
    }
}

/// Runs `trial` for indices `0..trials` in parallel, reporting under
/// `lemma`.
pub fn run_trials<F>(lemma: Lemma, trials: usize, seed: u64, trial: F) -> SuiteReport
where
    F: Fn(&mut GenRng) -> Result<(), String> + Sync,
{
    let mut results: Vec<(usize, Result<(), String>)> = (0..trials)
        .into_par_iter()
        .map(|i| (i, trial(&mut trial_rng(seed, i))))
        .collect();
    results.sort_by_key(|(i, _)| *i);
    let passed = results.iter().filter(|(_, r)| r.is_ok()).count();
    let first_failure = results.into_iter().find_map(|(i, r)| r.err().map(|e| (i, e)));
    SuiteReport {
        lemma,
        trials,
        passed,
        first_failure,
    }
}

pub fn run_trial(lemma: Lemma, cfg: &SuiteConfig, index: usize) -> Result<(), String> {
    let mut rng = trial_rng(cfg.seed, index);
    match lemma {
        Lemma::Chop => chop_trial(&mut rng, cfg.max_n),
        Lemma::Collate => collate_trial(&mut rng, cfg.max_n),
        Lemma::ErdosGallai => match index % 3 {
            0 => eg_trial(&mut rng, cfg.max_n),
            1 => avoiding_trial(&mut rng, cfg.max_n),
            _ => one_exception_trial(&mut rng, cfg.max_n),
        },
        Lemma::SawFind => saw_find_trial(&mut rng, cfg.max_n),
        Lemma::Pr1 => pr1_trial(&mut rng, cfg.max_n),
        Lemma::Super => super_trial(&mut rng, cfg.max_n),
        Lemma::Lux => lux_trial(&mut rng, cfg.max_n),
        Lemma::Flat => flat_trial(&mut rng, cfg.max_n, cfg.mutate),
        Lemma::SawCycles => saw_cycles_trial(&mut rng, cfg.max_n),
    }
}

fn err(e: impl fmt::Display) -> String {
    e.to_string()
}

/// Erdős–Rényi graph with edge probability `density`.
pub fn random_graph(n: usize, density: f64, rng: &mut GenRng) -> Graph {
    let mut g = Graph::new(n);
    for a in 0..n {
        for b in a + 1..n {
            if rng.random_bool(density) {
                g.add_edge(a, b).expect("fresh pair");
            }
        }
    }
    g
}

/// Extends a single vertex at both ends until neither end has a new
/// neighbour.
pub fn maximal_path(g: &Graph, start: usize, rng: &mut GenRng) -> Path {
    let mut seq = vec![start];
    let mut on = vec![false; g.order()];
    on[start] = true;
    for _ in 0..2 {
        loop {
            let end = *seq.last().expect("nonempty");
            let next: Vec<usize> = g.neighbors(end).filter(|&w| !on[w]).collect();
            let Some(&w) = next.choose(rng) else { break };
            on[w] = true;
            seq.push(w);
        }
        seq.reverse();
    }
    Path::new(seq)
}

/// Orders claimed for endpoints `(u, v)` must be realized by `fam` paths
/// valid in `g` and must lie in the oracle's set for `host` (labels of `g`).
fn check_claim(g: &Graph, fam: &OrderFamily, lo: usize, hi: usize, oracle_orders: &std::collections::BTreeSet<usize>) -> Result<(), String> {
    let (u, v) = fam.endpoints();
    for q in lo..=hi {
        let p = fam.get(q).ok_or_else(|| format!("claimed order {q} has no path"))?;
        verify::check_path_between(g, p, u, v, q).map_err(|e| format!("order {q}: {e}"))?;
        if !oracle_orders.contains(&q) {
            return Err(format!("claimed order {q} not in the oracle set"));
        }
    }
    Ok(())
}

fn chop_trial(rng: &mut GenRng, max_n: usize) -> Result<(), String> {
    let n = rng.random_range(4.min(max_n)..=max_n.max(4));
    let g = random_graph(n, rng.random_range(0.3..0.9), rng);
    let alpha = oracle::independence_number(&g).map_err(err)?;
    let start = rng.random_range(0..n);
    let p = maximal_path(&g, start, rng);
    let ladder = chop_collate::chop(&g, &p, alpha).map_err(err)?;
    ladder.validate(&g)?;
    let sub = g.induced(p.vertices());
    let (u, v) = p.endpoints();
    if p.order() >= 2 {
        let orders = oracle::all_path_orders(&sub.graph, sub.to_local(u).unwrap(), sub.to_local(v).unwrap()).map_err(err)?;
        for step in &ladder.steps {
            if step.vertices().iter().any(|&w| !p.contains(w)) {
                return Err("ladder step leaves the path".into());
            }
            if !orders.contains(&step.order()) {
                return Err(format!("ladder order {} not a reduction order", step.order()));
            }
        }
    }
    let width = 2 * alpha;
    for lo in 1..=p.order().saturating_sub(width - 1) {
        let hi = lo + width - 1;
        let step = chop_collate::reduction_in_interval(&ladder, lo, hi).map_err(err)?;
        if !(lo..=hi).contains(&step.order()) {
            return Err(format!("window [{lo}, {hi}] answered with order {}", step.order()));
        }
    }
    Ok(())
}

/// A longest `u`–`v` path of `g` by the oracle.
fn longest_path(g: &Graph, u: usize, v: usize) -> Result<Option<Path>, String> {
    let orders = oracle::all_path_orders(g, u, v).map_err(err)?;
    match orders.iter().next_back() {
        Some(&q) => oracle::path_of_order(g, u, v, q).map_err(err),
        None => Ok(None),
    }
}

fn collate_trial(rng: &mut GenRng, max_total: usize) -> Result<(), String> {
    let max_total = max_total.max(8);
    for _ in 0..200 {
        let n1 = rng.random_range(3..=(max_total - 4).min(8));
        let n2 = rng.random_range(4..=max_total - n1);
        let g1 = generate::two_connected_random(n1, rng.random_range(2..n1), rng).map_err(err)?;
        let g2 = generate::two_connected_random(n2, rng.random_range(2..n2), rng).map_err(err)?;
        let mut g = g1.disjoint_union(&g2);
        let pick = |rng: &mut GenRng, n: usize| {
            let mut all: Vec<usize> = (0..n).collect();
            all.shuffle(rng);
            (all[0], all[1])
        };
        let (x1, y1) = pick(rng, n1);
        let (x2, y2) = pick(rng, n2);
        g.add_edge(x1, n1 + x2).map_err(err)?;
        g.add_edge(y1, n1 + y2).map_err(err)?;
        // fam1: the longest run of consecutive orders, from the oracle
        let orders1: Vec<usize> = oracle::all_path_orders(&g1, x1, y1).map_err(err)?.into_iter().collect();
        let (mut a, mut b) = (orders1[0], orders1[0]);
        let mut run_start = orders1[0];
        for w in orders1.windows(2) {
            if w[1] != w[0] + 1 {
                run_start = w[1];
            }
            if w[1] - run_start > b - a {
                (a, b) = (run_start, w[1]);
            }
        }
        let mut fam1 = OrderFamily::new(x1, y1);
        for q in a..=b {
            fam1.insert(oracle::path_of_order(&g1, x1, y1, q).map_err(err)?.expect("order in oracle set"))
                .map_err(err)?;
        }
        // fam2: a chopped longest path
        let Some(long) = longest_path(&g2, x2, y2)? else { continue };
        let alpha2 = oracle::independence_number(&g2).map_err(err)?;
        let ladder = chop_collate::chop(&g2, &long, alpha2).map_err(err)?;
        let shifted = Path::new(long.vertices().iter().map(|&w| w + n1).collect());
        let mut fam2 = OrderFamily::new(n1 + x2, n1 + y2);
        fam2.insert(shifted).map_err(err)?;
        for st in &ladder.steps {
            fam2.insert(Path::new(st.vertices().iter().map(|&w| w + n1).collect())).map_err(err)?;
        }
        let l1 = fam2.orders().next().expect("nonempty");
        let l2 = fam2.max_order().expect("nonempty");
        let Some(k) = (1..=l2).find(|&k| fam2.hits_every_window(l1, l2, k)) else { continue };
        if b + 1 < a + k {
            continue;
        }
        let v1: VertexSet = (0..n1).collect();
        let v2: VertexSet = (n1..n1 + n2).collect();
        let col = Collation {
            g: &g,
            v1: &v1,
            v2: &v2,
            x_edge: (x1, n1 + x2),
            y_edge: (y1, n1 + y2),
            fam1: &fam1,
            fam2: &fam2,
            k,
            a,
            b,
            l1,
            l2,
        };
        col.check().map_err(err)?;
        let (lo, hi) = col.range();
        let cycles = oracle::all_cycle_orders(&g).map_err(err)?;
        for s in lo..=hi {
            let c = col.cycle(s).map_err(err)?;
            verify::check_cycle(&g, &c).map_err(err)?;
            if c.order() != s {
                return Err(format!("asked for order {s}, got {}", c.order()));
            }
            if !cycles.contains(&s) {
                return Err(format!("order {s} missing from the cycle oracle"));
            }
        }
        if col.cycle(hi + 1).is_ok() {
            return Err("order above the range accepted".into());
        }
        return Ok(());
    }
    Err("no instance met the collating conditions".into())
}

pub fn eg_trial(rng: &mut GenRng, max_n: usize) -> Result<(), String> {
    let n = rng.random_range(5.min(max_n)..=max_n.max(5));
    let g = generate::two_connected_random(n, rng.random_range(2..n.min(7)), rng).map_err(err)?;
    let delta = g.min_degree();
    for u in 0..n {
        for v in u + 1..n {
            let p = eg_paths::path_at_least(&g, u, v, delta).map_err(err)?;
            verify::check_path(&g, &p).map_err(err)?;
            if p.endpoints() != (u, v) || p.order() < delta + 1 {
                return Err(format!("pair ({u}, {v}): order {} below {}", p.order(), delta + 1));
            }
            if !oracle::all_path_orders(&g, u, v).map_err(err)?.contains(&p.order()) {
                return Err(format!("pair ({u}, {v}): order {} not in the oracle set", p.order()));
            }
        }
    }
    Ok(())
}

/// Two 2-connected graphs sharing the vertices `u`, `v`; paths must avoid the
/// interior of either side.
pub fn avoiding_trial(rng: &mut GenRng, max_n: usize) -> Result<(), String> {
    let total = rng.random_range(8.min(max_n)..=max_n.max(8));
    let a = rng.random_range(4..=total - 2);
    let b = total + 2 - a;
    let ga = generate::two_connected_random(a, 2, rng).map_err(err)?;
    let gb = generate::two_connected_random(b, 2, rng).map_err(err)?;
    // gb's vertices 0 and 1 become u = 0 and v = 1 of ga
    let mut g = ga.clone();
    let map = |w: usize| if w < 2 { w } else { a + w - 2 };
    for _ in 2..b {
        g.add_vertex();
    }
    for (x, y) in gb.edges() {
        g.ensure_edge(map(x), map(y));
    }
    let (u, v) = (0, 1);
    if !g.is_two_connected() {
        return Err("glued graph is not 2-connected".into());
    }
    let delta = (2..total).map(|w| g.degree(w)).min().unwrap_or(1);
    let side_b: VertexSet = (a..total).collect();
    let side_a: VertexSet = (2..a).collect();
    for avoid in [&side_a, &side_b] {
        if avoid.is_empty() {
            continue;
        }
        let p = match eg_paths::path_avoiding(&g, u, v, avoid, delta) {
            Ok(p) => p,
            Err(eg_paths::EgError::PreconditionViolated(_)) => continue,
            Err(e) => return Err(err(e)),
        };
        verify::check_path(&g, &p).map_err(err)?;
        if p.vertices().iter().any(|&w| avoid.contains(w)) {
            return Err("path enters the avoided part".into());
        }
        if p.order() < delta + 1 {
            return Err(format!("order {} below {}", p.order(), delta + 1));
        }
    }
    Ok(())
}

/// A 2-connected graph in which one vertex `x` has had edges removed.
pub fn one_exception_trial(rng: &mut GenRng, max_n: usize) -> Result<(), String> {
    let n = rng.random_range(6.min(max_n)..=max_n.max(6));
    let mut g = generate::two_connected_random(n, rng.random_range(3..n.min(8)), rng).map_err(err)?;
    let x = rng.random_range(0..n);
    let mut nbrs: Vec<usize> = g.neighbors(x).collect();
    nbrs.shuffle(rng);
    for w in nbrs {
        if g.degree(x) <= 2 {
            break;
        }
        let mut h = Graph::new(n);
        for (a, b) in g.edges() {
            if (a, b) != (x.min(w), x.max(w)) {
                h.add_edge(a, b).expect("fresh pair");
            }
        }
        if h.is_two_connected() {
            g = h;
        }
    }
    let delta = (0..n).filter(|&w| w != x).map(|w| g.degree(w)).min().unwrap_or(1);
    for u in 0..n {
        for v in u + 1..n {
            let p = eg_paths::path_one_exception(&g, x, u, v, delta).map_err(err)?;
            verify::check_path(&g, &p).map_err(err)?;
            if p.endpoints() != (u, v) || p.order() < delta + 1 {
                return Err(format!("pair ({u}, {v}) with exception {x}: order {} below {}", p.order(), delta + 1));
            }
        }
    }
    Ok(())
}

fn saw_find_trial(rng: &mut GenRng, max_n: usize) -> Result<(), String> {
    let r = rng.random_range(1..=3usize);
    let max_p = (max_n / r).saturating_sub(1).max(3);
    let p = rng.random_range(3..=max_p.max(3));
    let sizes: Vec<usize> = (0..r).map(|_| rng.random_range(p + 1..=(max_n / r).max(p + 1))).collect();
    let n: usize = sizes.iter().sum();
    let available: usize = (0..r).flat_map(|i| (i + 1..r).map(move |j| (i, j))).map(|(i, j)| sizes[i] * sizes[j]).sum();
    let cross = rng.random_range(0..=n.min(available));
    let g = generate::clique_union_cross(&sizes, cross, rng).map_err(err)?;
    let s = saw::find_saw(&g, p, r).map_err(err)?;
    // re-check the saw directly in the host graph
    let bb = s.backbone();
    let m = bb.len();
    if m % 2 == 0 || m < 3 {
        return Err(format!("backbone of even or tiny length {m}"));
    }
    for i in 0..m {
        if !g.has_edge(bb[i], bb[(i + 1) % m]) {
            return Err(format!("backbone edge {i} missing"));
        }
    }
    for i in (0..m - 2).step_by(2) {
        if !g.has_edge(bb[i], bb[i + 2]) {
            return Err(format!("chord at {i} missing"));
        }
    }
    let inside = |v: usize| bb.iter().filter(|&&w| g.has_edge(v, w)).count();
    let d = inside(bb[m - 2]).min(inside(bb[m - 1]));
    if d != s.degree() || d + r < p {
        return Err(format!("degree {d} (reported {}) below p - r = {}", s.degree(), p - r));
    }
    Ok(())
}

/// A `saw_tail` instance with `k <= 6` fitting in `max_n` and degree in
/// `[d_lo, 2k]`.
fn tail_saw(rng: &mut GenRng, max_n: usize, k_min: usize, d_lo: impl Fn(usize) -> usize) -> Result<Saw, String> {
    let k_max = ((max_n.saturating_sub(1)) / 2).clamp(k_min, 6);
    let k = rng.random_range(k_min..=k_max);
    let lo = d_lo(k).clamp(2, 2 * k);
    let d = rng.random_range(lo..=2 * k);
    let g = generate::saw_tail(k, d, rng.random_range(0.1..0.9), rng).map_err(err)?;
    Saw::from_local(g).map_err(err)
}

fn pr1_trial(rng: &mut GenRng, max_n: usize) -> Result<(), String> {
    let s = tail_saw(rng, max_n, 2, |_| 2)?;
    let n = s.order();
    let i = rng.random_range(1..=n);
    let j = loop {
        let j = rng.random_range(1..=n);
        if j != i {
            break j;
        }
    };
    let uses_wrap = rng.random_bool(0.5);
    let arc = s.arc(i, j, uses_wrap).map_err(err)?;
    let l = arc.len();
    let lo = if uses_wrap { l / 2 + 2 } else { l.div_ceil(2) + 1 }.min(l);
    let arc_graph = s.local().induced(&arc.iter().map(|&x| x - 1).collect::<Vec<_>>());
    let orders = oracle::all_path_orders(&arc_graph.graph, 0, l - 1).map_err(err)?;
    for q in lo..=l {
        let p = saw::backbone_reduction(&s, i, j, uses_wrap, q).map_err(err)?;
        verify::check_path_between(s.local(), &p, s.at(i), s.at(j), q).map_err(err)?;
        if !orders.contains(&q) {
            return Err(format!("order {q} not in the arc's oracle set"));
        }
    }
    if uses_wrap && i == 1 && j == n || !uses_wrap {
        // the full backbone path admits every q in [k + 2, 2k + 1]
        let full = saw::arc_family(&s, 1, n, false).map_err(err)?;
        if let Some(q) = full.first_gap(s.k() + 2, n) {
            return Err(format!("full backbone path lacks order {q}"));
        }
    }
    Ok(())
}

fn super_trial(rng: &mut GenRng, max_n: usize) -> Result<(), String> {
    let s = tail_saw(rng, max_n, 2, |k| (2 * (2 * k + 1)).div_ceil(3))?;
    let n = s.order();
    let fam = saw::endpair_paths(&s).map_err(err)?;
    let orders = oracle::all_path_orders(s.local(), n - 2, n - 1).map_err(err)?;
    check_claim(s.local(), &fam, 2, n, &orders)
}

fn lux_trial(rng: &mut GenRng, max_n: usize) -> Result<(), String> {
    let s = tail_saw(rng, max_n, 2, |_| 2)?;
    let n = s.order();
    let j = rng.random_range(1..=n);
    let next = s.cyclic(j, 1);
    let fam = saw::consecutive_pair_paths(&s, j).map_err(err)?;
    let lo = (2 * s.k() + 6).saturating_sub(s.degree()).max(2);
    if lo > n {
        return Ok(());
    }
    let orders = oracle::all_path_orders(s.local(), j - 1, next - 1).map_err(err)?;
    check_claim(s.local(), &fam, lo, n, &orders)?;
    if !orders.contains(&n) {
        return Err("no Hamiltonian path between the pair".into());
    }
    Ok(())
}

fn flat_trial(rng: &mut GenRng, max_n: usize, mutate: bool) -> Result<(), String> {
    let s = tail_saw(rng, max_n, 2, |k| k)?;
    let n = s.order();
    let x = rng.random_range(1..=n);
    let y = loop {
        let y = rng.random_range(1..=n);
        if y != x {
            break y;
        }
    };
    let ap = saw::any_pair_paths(&s, x - 1, y - 1).map_err(err)?;
    let d = s.degree();
    if ap.l <= d {
        return Err(format!("l = {} not above d = {d}", ap.l));
    }
    let (lo, hi) = ap.window(d);
    let hi = if mutate { hi + 1 } else { hi };
    let orders = oracle::all_path_orders(s.local(), x - 1, y - 1).map_err(err)?;
    check_claim(s.local(), &ap.family, lo, hi, &orders)
}

fn saw_cycles_trial(rng: &mut GenRng, max_n: usize) -> Result<(), String> {
    for _ in 0..100 {
        let s = tail_saw(rng, max_n, 3, |k| k)?;
        let alpha = oracle::independence_number(s.local()).map_err(err)?;
        if 2 * alpha > s.k() {
            // densify: retry with another instance
            continue;
        }
        let cycles = oracle::all_cycle_orders(s.local()).map_err(err)?;
        for q in 4 * alpha..=s.order() {
            let c = saw::saw_cycle(&s, alpha, q).map_err(err)?;
            verify::check_cycle(s.local(), &c).map_err(err)?;
            if c.order() != q || !cycles.contains(&q) {
                return Err(format!("cycle order {} for q = {q}", c.order()));
            }
        }
        return Ok(());
    }
    Err("no saw with 2 alpha <= k was generated".into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(trials: usize) -> SuiteConfig {
        SuiteConfig {
            trials,
            seed: 11,
            max_n: 0,
            mutate: false,
        }
    }

    #[test]
    fn names_round_trip() {
        for l in Lemma::ALL {
            assert_eq!(l.name().parse::<Lemma>().unwrap(), l);
        }
        assert!("nope".parse::<Lemma>().is_err());
    }

    #[test]
    fn every_suite_passes_a_few_trials() {
        for l in Lemma::ALL {
            let c = SuiteConfig {
                max_n: l.default_max_n(),
                ..cfg(12)
            };
            let rep = run_suite(l, &c);
            assert!(rep.ok(), "{rep}");
        }
    }

    #[test]
    fn mutation_is_caught() {
        let c = SuiteConfig {
            max_n: 13,
            mutate: true,
            ..cfg(60)
        };
        assert!(!run_suite(Lemma::Flat, &c).ok());
    }

    #[test]
    fn reports_are_deterministic() {
        let c = SuiteConfig { max_n: 12, ..cfg(30) };
        assert_eq!(run_suite(Lemma::Chop, &c), run_suite(Lemma::Chop, &c));
    }
}
