//! The witness dichotomy: in a graph of order `pr + 1` with `p >= 4r + 5`
//! (or `r = 1`), find a cycle of order exactly `p + 1` or an independent set
//! of size `r + 1`.
//!
//! The search recurses on `r`. A vertex of minimum degree either has many
//! non-neighbours, which carry a smaller instance, or every degree is at
//! least `p`. Disconnected graphs and graphs with a cutvertex are split and
//! the part that is too large for its independence number is solved again.
//! What is left is 2-connected with large minimum degree: a saw `S` is
//! extracted, and paths inside `S` are joined to paths in `G - S` through two
//! disjoint crossing edges.
//!
//! Every step is appended to the certificate's trace. Vertex labels inside
//! trace parameters refer to the graph of the recursion level named by
//! `level`; the cycle or independent set in the certificate always uses the
//! input labels.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::blocks;
use crate::chop_collate::{self, OrderFamily};
use crate::eg_paths::{self, PathOptions};
use crate::graph::{Cycle, Graph, Path, Subgraph, VertexSet};
use crate::oracle;
use crate::saw::{self, Saw, SawError};
use crate::verify::{self, Violation};

pub use crate::generate::extremal_graph;

pub const SCHEMA_VERSION: u32 = 1;

/// Cap on candidate crossings tried per route.
const MAX_ATTEMPTS: usize = 400;
/// Node budget of the last-resort exact cycle search.
const EXHAUSTIVE_BUDGET: u64 = 20_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    CycleFound,
    IndependentSetFound,
    HypothesisViolated,
    Failure,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub level: usize,
    pub case: String,
    pub lemma: String,
    pub params: BTreeMap<String, usize>,
    pub output_order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema_version: u32,
    pub kind: CertificateKind,
    pub p: usize,
    pub r: usize,
    pub order: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycle: Option<Cycle>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub independent_set: Option<VertexSet>,
    pub explanation: String,
    pub trace: Vec<TraceStep>,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Certificate, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn is_dichotomy(&self) -> bool {
        matches!(self.kind, CertificateKind::CycleFound | CertificateKind::IndependentSetFound)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertificateViolation {
    #[error("unsupported schema version {0}")]
    Schema(u32),
    #[error("certificate is for p = {p}, r = {r}, order {order}")]
    ParameterMismatch { p: usize, r: usize, order: usize },
    #[error("certificate of kind {0:?} lacks its object")]
    MissingObject(CertificateKind),
    #[error("expected size {expected}, found {found}")]
    WrongSize { expected: usize, found: usize },
    #[error("{0}")]
    Invalid(Violation),
    #[error("the hypothesis holds, so it cannot be reported as violated")]
    HypothesisHolds,
    #[error("the certificate reports a failure")]
    Failure,
}

impl CertificateViolation {
    pub fn code(&self) -> &'static str {
        match self {
            CertificateViolation::Schema(_) => "schema",
            CertificateViolation::ParameterMismatch { .. } => "parameter_mismatch",
            CertificateViolation::MissingObject(_) => "missing_object",
            CertificateViolation::WrongSize { .. } => "wrong_size",
            CertificateViolation::Invalid(v) => v.code(),
            CertificateViolation::HypothesisHolds => "hypothesis_holds",
            CertificateViolation::Failure => "failure",
        }
    }
}

/// `Err` describes why `(order, p, r)` is outside the supported regime.
pub fn check_hypothesis(order: usize, p: usize, r: usize) -> Result<(), String> {
    if r == 0 {
        return Err("r must be at least 1".into());
    }
    if p < 2 {
        return Err(format!("p = {p} is below 2"));
    }
    if r >= 2 && p < 4 * r + 5 {
        return Err(format!("p = {p} is below 4r + 5 = {}", 4 * r + 5));
    }
    let want = p.checked_mul(r).and_then(|x| x.checked_add(1));
    if want != Some(order) {
        return Err(format!("order {order} differs from pr + 1 = {}", p * r + 1));
    }
    Ok(())
}

/// Re-checks a certificate against `g` without using any of the code that
/// produced it.
pub fn verify_certificate(g: &Graph, p: usize, r: usize, c: &Certificate) -> Result<(), CertificateViolation> {
    if c.schema_version != SCHEMA_VERSION {
        return Err(CertificateViolation::Schema(c.schema_version));
    }
    if c.p != p || c.r != r || c.order != g.order() {
        return Err(CertificateViolation::ParameterMismatch {
            p: c.p,
            r: c.r,
            order: c.order,
        });
    }
    match c.kind {
        CertificateKind::CycleFound => {
            let cycle = c.cycle.as_ref().ok_or(CertificateViolation::MissingObject(c.kind))?;
            if cycle.order() != p + 1 {
                return Err(CertificateViolation::WrongSize {
                    expected: p + 1,
                    found: cycle.order(),
                });
            }
            verify::check_cycle(g, cycle).map_err(CertificateViolation::Invalid)
        }
        CertificateKind::IndependentSetFound => {
            let set = c.independent_set.as_ref().ok_or(CertificateViolation::MissingObject(c.kind))?;
            if set.len() != r + 1 {
                return Err(CertificateViolation::WrongSize {
                    expected: r + 1,
                    found: set.len(),
                });
            }
            verify::check_independent_set(g, set).map_err(CertificateViolation::Invalid)
        }
        CertificateKind::HypothesisViolated => match check_hypothesis(g.order(), p, r) {
            Ok(()) => Err(CertificateViolation::HypothesisHolds),
            Err(_) => Ok(()),
        },
        CertificateKind::Failure => Err(CertificateViolation::Failure),
    }
}

/// Runs the dichotomy on `g` and returns a certificate that has already
/// passed [`verify_certificate`], or a `HypothesisViolated` / `Failure`
/// certificate.
pub fn ramsey_witness(g: &Graph, p: usize, r: usize) -> Certificate {
    let mut cert = Certificate {
        schema_version: SCHEMA_VERSION,
        kind: CertificateKind::Failure,
        p,
        r,
        order: g.order(),
        cycle: None,
        independent_set: None,
        explanation: String::new(),
        trace: Vec::new(),
    };
    if let Err(why) = check_hypothesis(g.order(), p, r) {
        cert.kind = CertificateKind::HypothesisViolated;
        cert.explanation = why;
        return cert;
    }
    let mut solver = Solver { p, trace: Vec::new() };
    let result = solver.solve(g, r, 0);
    cert.trace = solver.trace;
    match result {
        Ok(Found::Cycle(c)) => {
            cert.kind = CertificateKind::CycleFound;
            cert.explanation = format!("cycle of order {}", c.order());
            cert.cycle = Some(c);
        }
        Ok(Found::Independent(s)) => {
            cert.kind = CertificateKind::IndependentSetFound;
            cert.explanation = format!("independent set of size {}", s.len());
            cert.independent_set = Some(s);
        }
        Err(why) => {
            cert.explanation = why;
        }
    }
    if cert.is_dichotomy() {
        if let Err(e) = verify_certificate(g, p, r, &cert) {
            cert.trace.push(step(0, "failure", "verify_certificate", &[], None, Some(e.to_string())));
            cert.kind = CertificateKind::Failure;
            cert.explanation = format!("produced object failed verification: {e}");
            cert.cycle = None;
            cert.independent_set = None;
        }
    }
    if cert.kind == CertificateKind::Failure && cert.trace.is_empty() {
        cert.trace.push(step(0, "failure", "none", &[], None, Some(cert.explanation.clone())));
    }
    cert
}

fn step(
    level: usize,
    case: &str,
    lemma: &str,
    params: &[(&str, usize)],
    output_order: Option<usize>,
    note: Option<String>,
) -> TraceStep {
    TraceStep {
        level,
        case: case.into(),
        lemma: lemma.into(),
        params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        output_order,
        note,
    }
}

enum Found {
    Cycle(Cycle),
    Independent(VertexSet),
}

impl Found {
    fn into_host(self, sub: &Subgraph) -> Found {
        match self {
            Found::Cycle(c) => Found::Cycle(sub.cycle_to_host(&c)),
            Found::Independent(s) => Found::Independent(sub.set_to_host(&s)),
        }
    }
}

type Solved = Result<Found, String>;

fn alpha_set(g: &Graph) -> Result<VertexSet, String> {
    oracle::max_independent_set(g).map_err(|e| e.to_string())
}

fn truncated(s: &VertexSet, n: usize) -> VertexSet {
    s.iter().take(n).collect()
}

struct Solver {
    p: usize,
    trace: Vec<TraceStep>,
}

impl Solver {
    fn log(&mut self, level: usize, case: &str, lemma: &str, params: &[(&str, usize)], out: Option<usize>) {
        self.trace.push(step(level, case, lemma, params, out, None));
    }

    fn note(&mut self, level: usize, case: &str, lemma: &str, params: &[(&str, usize)], note: String) {
        self.trace.push(step(level, case, lemma, params, None, Some(note)));
    }

    fn solve(&mut self, g: &Graph, r: usize, level: usize) -> Solved {
        let p = self.p;
        let n = g.order();
        if n != p * r + 1 {
            return Err(format!("level {level}: order {n} differs from pr + 1 = {}", p * r + 1));
        }
        if r == 1 {
            return Ok(self.base(g, level));
        }
        let u = (0..n).min_by_key(|&v| g.degree(v)).expect("nonempty");
        let far: Vec<usize> = (0..n).filter(|&w| w != u && !g.has_edge(u, w)).collect();
        let need = p * (r - 1) + 1;
        if far.len() >= need {
            self.log(
                level,
                "min_degree_lift",
                "induction",
                &[("u", u), ("degree", g.degree(u)), ("non_neighbours", far.len()), ("sub_order", need)],
                None,
            );
            let sub = g.induced(&far[..need]);
            return match self.solve(&sub.graph, r - 1, level + 1)? {
                Found::Independent(s) => {
                    let mut s = sub.set_to_host(&s);
                    s.insert(u);
                    Ok(Found::Independent(s))
                }
                found => Ok(found.into_host(&sub)),
            };
        }
        let comps = g.components();
        if comps.len() > 1 {
            return self.disconnected(g, r, level, &comps);
        }
        if !g.is_two_connected() {
            return self.cutvertex(g, r, level);
        }
        let big = alpha_set(g)?;
        if big.len() > r {
            self.log(level, "independent_set", "exact_alpha", &[("alpha", big.len())], Some(r + 1));
            return Ok(Found::Independent(truncated(&big, r + 1)));
        }
        self.two_connected(g, r, big.len(), level)
    }

    fn base(&mut self, g: &Graph, level: usize) -> Found {
        let n = g.order();
        for a in 0..n {
            if let Some(b) = (a + 1..n).find(|&b| !g.has_edge(a, b)) {
                self.log(level, "base", "non_edge", &[("a", a), ("b", b)], Some(2));
                return Found::Independent(VertexSet::from(vec![a, b]));
            }
        }
        self.log(level, "base", "complete_graph", &[("order", n)], Some(n));
        Found::Cycle(Cycle::new((0..n).collect()))
    }

    /// Recurses into `part` (labels of `g`) of order at least `p * a + 1`
    /// with independence number `a < r`.
    fn descend(&mut self, g: &Graph, part: &[usize], a: usize, level: usize, case: &str) -> Solved {
        let take = self.p * a + 1;
        let sub = g.induced(&part[..take]);
        self.log(level, case, "recurse", &[("part_order", part.len()), ("alpha", a), ("sub_order", take)], None);
        match self.solve(&sub.graph, a, level + 1)? {
            Found::Independent(s) => Err(format!(
                "level {}: independent set of size {} inside a part with independence number {a}",
                level + 1,
                s.len()
            )),
            found => Ok(found.into_host(&sub)),
        }
    }

    fn disconnected(&mut self, g: &Graph, r: usize, level: usize, comps: &[Vec<usize>]) -> Solved {
        let p = self.p;
        let mut sets = Vec::new();
        for comp in comps {
            let sub = g.induced(comp);
            sets.push(sub.set_to_host(&alpha_set(&sub.graph)?));
        }
        let total: usize = sets.iter().map(VertexSet::len).sum();
        if total > r {
            let all = sets.iter().fold(VertexSet::new(), |acc, s| acc.union(s));
            self.log(level, "disconnected", "alpha_sum", &[("components", comps.len()), ("alpha_sum", total)], Some(r + 1));
            return Ok(Found::Independent(truncated(&all, r + 1)));
        }
        for (comp, set) in comps.iter().zip(&sets) {
            if comp.len() > p * set.len() {
                return self.descend(g, comp, set.len(), level, "disconnected");
            }
        }
        Err(format!("level {level}: no component exceeds p times its independence number"))
    }

    fn cutvertex(&mut self, g: &Graph, r: usize, level: usize) -> Solved {
        let p = self.p;
        let bd = blocks::block_decomposition(g).map_err(|e| e.to_string())?;
        let u = bd.cutvertices.min().expect("graph has a cutvertex");
        let rest = g.without(&[u]);
        let comps = rest.graph.components();
        let part1: Vec<usize> = comps[0].iter().map(|&w| rest.to_host(w)).collect();
        let mut part2: Vec<usize> = comps[1..].iter().flatten().map(|&w| rest.to_host(w)).collect();
        part2.sort_unstable();
        let s1 = g.induced(&part1);
        let s2 = g.induced(&part2);
        let i1 = s1.set_to_host(&alpha_set(&s1.graph)?);
        let i2 = s2.set_to_host(&alpha_set(&s2.graph)?);
        let params = [("cutvertex", u), ("alpha_1", i1.len()), ("alpha_2", i2.len())];
        if i1.len() + i2.len() > r {
            self.log(level, "cutvertex", "alpha_sum", &params, Some(r + 1));
            return Ok(Found::Independent(truncated(&i1.union(&i2), r + 1)));
        }
        if part1.len() > p * i1.len() {
            return self.descend(g, &part1, i1.len(), level, "cutvertex");
        }
        if part2.len() > p * i2.len() {
            return self.descend(g, &part2, i2.len(), level, "cutvertex");
        }
        let mut with_u = Vec::new();
        for (part, base) in [(&part1, &i1), (&part2, &i2)] {
            let mut verts = part.clone();
            verts.push(u);
            verts.sort_unstable();
            let sub = g.induced(&verts);
            let set = sub.set_to_host(&alpha_set(&sub.graph)?);
            if set.len() == base.len() {
                // order p * alpha + 1 with the same independence number
                return self.descend(g, &verts, base.len(), level, "cutvertex");
            }
            with_u.push(set);
        }
        self.log(level, "cutvertex", "shared_cutvertex", &params, Some(r + 1));
        let all = with_u[0].union(&with_u[1]);
        if all.len() != r + 1 {
            return Err(format!("level {level}: sets through the cutvertex have union of size {}", all.len()));
        }
        Ok(Found::Independent(all))
    }

    fn two_connected(&mut self, g: &Graph, r: usize, alpha: usize, level: usize) -> Solved {
        let p = self.p;
        if g.min_degree() < p {
            return Err(format!("level {level}: minimum degree {} below p after the lift", g.min_degree()));
        }
        let s = match saw::find_saw(g, p, alpha) {
            Ok(s) => s,
            Err(SawError::HypothesisViolated {
                independent_set: Some(set),
                ..
            }) if set.len() > r => return Ok(Found::Independent(truncated(&set, r + 1))),
            Err(e) => {
                self.note(level, "saw", "find_saw", &[("alpha", alpha)], e.to_string());
                return Err(format!("level {level}: {e}"));
            }
        };
        let (k, d) = (s.k(), s.degree());
        self.log(level, "saw", "find_saw", &[("k", k), ("degree", d), ("alpha", alpha)], Some(s.order()));
        if s.order() > p {
            let a_s = oracle::independence_number(s.local()).map_err(|e| e.to_string())?;
            match saw::saw_cycle(&s, a_s, p + 1) {
                Ok(c) => {
                    self.log(level, "saw_cycle", "saw_cycle", &[("k", k), ("alpha", a_s)], Some(c.order()));
                    return Ok(Found::Cycle(c));
                }
                Err(e) => self.note(level, "saw_cycle", "saw_cycle", &[("k", k), ("alpha", a_s)], e.to_string()),
            }
        }
        let mut stage = Stage::new(g, &s, p, r, level);
        let found = stage.run();
        self.trace.append(&mut stage.trace);
        if let Some(c) = found {
            return Ok(Found::Cycle(c));
        }
        self.note(level, "exhaustive", "exact_cycle_search", &[("order", p + 1)], "structured routes exhausted".into());
        if let Some(c) = exact_cycle(g, p + 1, EXHAUSTIVE_BUDGET) {
            self.log(level, "exhaustive", "exact_cycle_search", &[("order", p + 1)], Some(c.order()));
            return Ok(Found::Cycle(c));
        }
        Err(format!("level {level}: no cycle of order {} assembled", p + 1))
    }
}

/// Runs only the collating stage around a fixed saw `s` of `g`: joins saw
/// paths to paths of `G - S` into a cycle of order `p + 1`. The exhaustive
/// fallback is not used.
pub fn cycle_around_saw(g: &Graph, s: &Saw, p: usize, r: usize) -> (Option<Cycle>, Vec<TraceStep>) {
    let mut stage = Stage::new(g, s, p, r, 0);
    let found = stage.run();
    (found, stage.trace)
}

/// A piece of `G - S` that paths are drawn from: a whole 2-connected
/// component, a bridge component, or an endblock with its cutvertex.
struct Piece {
    /// Labels of the level graph, sorted.
    verts: Vec<usize>,
    cut: Option<usize>,
    /// The component containing the piece.
    component: Vec<usize>,
    alpha: usize,
}

/// The collating stage once a saw of order at most `p` is fixed.
struct Stage<'a> {
    g: &'a Graph,
    s: &'a Saw,
    p: usize,
    r: usize,
    level: usize,
    in_saw: FixedBitSet,
    star: Vec<usize>,
    components: Vec<Vec<usize>>,
    trace: Vec<TraceStep>,
}

type Route<'a> = fn(&mut Stage<'a>, &[Piece]) -> Option<Cycle>;

impl<'a> Stage<'a> {
    fn new(g: &'a Graph, s: &'a Saw, p: usize, r: usize, level: usize) -> Self {
        let mut in_saw = FixedBitSet::with_capacity(g.order());
        for &v in s.backbone() {
            in_saw.insert(v);
        }
        let star_sub = g.without(s.backbone());
        let components = star_sub
            .graph
            .components()
            .into_iter()
            .map(|c| c.into_iter().map(|w| star_sub.to_host(w)).collect())
            .collect();
        Stage {
            g,
            s,
            p,
            r,
            level,
            in_saw,
            star: star_sub.labels.clone(),
            components,
            trace: Vec::new(),
        }
    }

    fn log(&mut self, case: &str, lemma: &str, params: &[(&str, usize)], out: Option<usize>, note: Option<String>) {
        self.trace.push(step(self.level, case, lemma, params, out, note));
    }

    fn saw_neighbours(&self, w: usize) -> Vec<usize> {
        self.g.neighbors(w).filter(|&x| self.in_saw.contains(x)).collect()
    }

    fn star_neighbours(&self, w: usize, within: &[usize]) -> Vec<usize> {
        self.g.neighbors(w).filter(|x| within.binary_search(x).is_ok()).collect()
    }

    fn run(&mut self) -> Option<Cycle> {
        let target = self.p + 1;
        self.log(
            "collate",
            "split",
            &[("saw_order", self.s.order()), ("rest_order", self.star.len()), ("components", self.components.len())],
            None,
            None,
        );
        if self.star.is_empty() {
            return None;
        }
        let pieces = self.pieces();
        let connected = self.components.len() == 1;
        let whole_two_connected = connected && self.star.len() >= 3 && self.pieces_are_whole(&pieces);
        let routes: [(&str, Route<'a>); 6] = [
            ("case_1", Self::case_1),
            ("case_2", Self::case_2),
            ("case_3", Self::case_3),
            ("case_4", Self::case_4),
            ("through_vertex", Self::through_vertex),
            ("any_pair", Self::any_pair_all),
        ];
        for (name, route) in routes {
            if name == "case_1" && !whole_two_connected {
                continue;
            }
            if let Some(c) = route(self, &pieces) {
                debug_assert_eq!(c.order(), target);
                self.log(name, "collate", &[("order", target)], Some(c.order()), None);
                return Some(c);
            }
            self.log(name, "collate", &[("order", target)], None, Some("no splice".into()));
        }
        None
    }

    fn pieces_are_whole(&self, pieces: &[Piece]) -> bool {
        pieces.len() == 1 && pieces[0].cut.is_none()
    }

    /// Endblocks of every component of `G - S` (whole components when they
    /// have no cutvertex), by increasing independence number. Isolated
    /// vertices are left to the through-vertex route.
    fn pieces(&self) -> Vec<Piece> {
        let mut out = Vec::new();
        for comp in &self.components {
            if comp.len() < 2 {
                continue;
            }
            let sub = self.g.induced(comp);
            if comp.len() == 2 || sub.graph.is_two_connected() {
                out.push((comp.clone(), None, comp.clone()));
                continue;
            }
            let bd = blocks::block_decomposition(&sub.graph).expect("component is connected");
            for i in bd.endblocks() {
                let verts: Vec<usize> = bd.blocks[i].iter().map(|w| sub.to_host(w)).collect();
                let cut = bd.cutvertex_of(i).map(|z| sub.to_host(z));
                out.push((verts, cut, comp.clone()));
            }
        }
        let mut pieces: Vec<Piece> = out
            .into_iter()
            .map(|(mut verts, cut, component)| {
                verts.sort_unstable();
                let alpha = oracle::independence_number(&self.g.induced(&verts).graph).unwrap_or(usize::MAX);
                Piece {
                    verts,
                    cut,
                    component,
                    alpha,
                }
            })
            .collect();
        pieces.sort_by(|a, b| (a.alpha, &a.verts).cmp(&(b.alpha, &b.verts)));
        pieces
    }

    /// A long `u`–`v` path inside `part` (sorted labels), found with the
    /// degree bound of the vertices other than `u`, `v` and `exception`.
    /// Falls back to a shortest path.
    fn long_path(&self, part: &[usize], u: usize, v: usize, exception: Option<usize>) -> Option<Path> {
        let sub = self.g.induced(part);
        let (lu, lv) = (sub.to_local(u)?, sub.to_local(v)?);
        let h = &sub.graph;
        let lx = exception.and_then(|x| sub.to_local(x));
        let delta = (0..h.order())
            .filter(|&w| w != lu && w != lv && Some(w) != lx)
            .map(|w| h.degree(w))
            .min()
            .unwrap_or(1);
        let opts = PathOptions {
            strict: false,
            budget: Some(200_000),
        };
        let path = if h.order() >= 3 {
            match lx {
                Some(x) if x != lu && x != lv => eg_paths::path_one_exception_with(h, x, lu, lv, delta, &opts),
                _ => eg_paths::path_at_least_with(h, lu, lv, delta, &opts),
            }
            .ok()
        } else {
            None
        };
        path.or_else(|| h.shortest_path(lu, lv)).map(|p| sub.path_to_host(&p))
    }

    /// The path and its chopped reductions, keyed by order.
    fn chopped(&self, path: &Path) -> OrderFamily {
        let (u, v) = path.endpoints();
        let mut fam = OrderFamily::new(u, v);
        let sub = self.g.induced(path.vertices());
        let local = Path::new((0..path.order()).collect());
        let alpha = oracle::independence_number(&sub.graph).unwrap_or(path.order()).max(1);
        fam.insert(path.clone()).expect("endpoints");
        if let Ok(ladder) = chop_collate::chop(&sub.graph, &local, alpha) {
            for st in &ladder.steps {
                fam.insert(sub.path_to_host(st)).expect("ladder keeps endpoints");
            }
        }
        fam
    }

    /// Tries `fam1` (inside the saw, `x1`..`y1`) against long `x2`..`y2`
    /// paths in `part`, for crossing edges `x1 x2` and `y1 y2`.
    fn try_pair(&self, fam1: &OrderFamily, part: &[usize], x2: usize, y2: usize, exception: Option<usize>) -> Option<Cycle> {
        let path = self.long_path(part, x2, y2, exception)?;
        let fam2 = self.chopped(&path);
        chop_collate::splice(fam1, &fam2, self.p + 1)
    }

    fn case_1(&mut self, _: &[Piece]) -> Option<Cycle> {
        let k = self.s.k();
        let (a, b) = (self.s.at(2 * k), self.s.at(2 * k + 1));
        let fam1 = saw::endpair_family(self.s);
        let star = self.star.clone();
        let xs = self.star_neighbours(a, &star);
        let ys = self.star_neighbours(b, &star);
        self.log(
            "case_1",
            "endpair_paths",
            &[("family_size", fam1.len()), ("x_candidates", xs.len()), ("y_candidates", ys.len())],
            None,
            None,
        );
        let mut attempts = 0;
        for &x2 in &xs {
            for &y2 in ys.iter().filter(|&&y| y != x2) {
                attempts += 1;
                if attempts > MAX_ATTEMPTS {
                    return None;
                }
                if let Some(c) = self.try_pair(&fam1, &star, x2, y2, None) {
                    return Some(c);
                }
            }
        }
        // a single common neighbour closes a saw path of order p
        for &w in xs.iter().filter(|w| ys.contains(w)) {
            if let Some(path) = fam1.get(self.p) {
                let mut seq = path.vertices().to_vec();
                seq.push(w);
                return Some(Cycle::new(seq));
            }
        }
        None
    }

    #[allow(clippy::needless_range_loop)]
    fn case_2(&mut self, pieces: &[Piece]) -> Option<Cycle> {
        let n = self.s.order();
        let mut families: Vec<Option<OrderFamily>> = vec![None; n + 1];
        let mut attempts = 0;
        for piece in pieces {
            for j in 1..=n {
                let (x1, y1) = (self.s.at(j), self.s.at(self.s.cyclic(j, 1)));
                let xs = self.star_neighbours(x1, &piece.verts);
                let ys = self.star_neighbours(y1, &piece.verts);
                if !xs.iter().any(|x| ys.iter().any(|y| y != x)) {
                    continue;
                }
                if families[j].is_none() {
                    families[j] = saw::consecutive_pair_family(self.s, j).ok();
                }
                let Some(fam1) = families[j].clone() else { continue };
                for &x2 in &xs {
                    for &y2 in ys.iter().filter(|&&y| y != x2) {
                        attempts += 1;
                        if attempts > MAX_ATTEMPTS {
                            return None;
                        }
                        if let Some(c) = self.try_pair(&fam1, &piece.verts, x2, y2, piece.cut) {
                            self.log(
                                "case_2",
                                "consecutive_pair_paths",
                                &[("j", j), ("piece_order", piece.verts.len()), ("piece_alpha", piece.alpha)],
                                Some(c.order()),
                                None,
                            );
                            return Some(c);
                        }
                    }
                }
            }
        }
        None
    }

    /// Vertex of `verts` (other than `skip`) with the most saw neighbours,
    /// smallest label on ties.
    fn best_attached(&self, verts: &[usize], skip: Option<usize>) -> Option<usize> {
        verts
            .iter()
            .copied()
            .filter(|&w| Some(w) != skip)
            .max_by_key(|&w| (self.saw_neighbours(w).len(), std::cmp::Reverse(w)))
    }

    fn record_window(&mut self, case: &str, x1: usize, y1: usize, extra: usize) {
        let d = self.s.degree();
        if let Ok(ap) = saw::any_pair_paths(self.s, x1, y1) {
            let (lo, hi) = ap.window(d);
            let brackets = usize::from(lo + 2 * self.r <= self.p + 1 && self.p < hi + extra);
            self.log(
                case,
                "any_pair_paths",
                &[("l", ap.l), ("degree", d), ("window_lo", lo), ("window_hi", hi), ("brackets", brackets)],
                None,
                None,
            );
        }
    }

    /// Generic any-pair splice over the given pieces, preferring `u1` as an
    /// endpoint in each piece.
    fn any_pair_over(&mut self, pieces: &[&Piece], case: &str) -> Option<Cycle> {
        let mut attempts = 0;
        let mut logged = false;
        for piece in pieces {
            let u1 = self.best_attached(&piece.verts, piece.cut);
            let mut ends: Vec<usize> = piece.verts.clone();
            if let Some(u1) = u1 {
                ends.retain(|&w| w != u1);
                ends.insert(0, u1);
            }
            for (ix, &x2) in ends.iter().enumerate() {
                for &y2 in &ends[ix + 1..] {
                    let xs = self.saw_neighbours(x2);
                    let ys = self.saw_neighbours(y2);
                    // the non-endpoint exception: u1 when it is not an end,
                    // otherwise the cutvertex
                    let exception = match u1 {
                        Some(u) if u != x2 && u != y2 => Some(u),
                        _ => piece.cut,
                    };
                    for &x1 in &xs {
                        for &y1 in ys.iter().filter(|&&y| y != x1) {
                            attempts += 1;
                            if attempts > MAX_ATTEMPTS {
                                return None;
                            }
                            if !logged {
                                logged = true;
                                self.record_window(case, x1, y1, piece.verts.len());
                            }
                            let Ok(fam1) = saw::any_pair_family(self.s, x1, y1) else { continue };
                            if let Some(c) = self.try_pair(&fam1, &piece.verts, x2, y2, exception) {
                                return Some(c);
                            }
                        }
                    }
                }
            }
        }
        None
    }

    fn case_3(&mut self, pieces: &[Piece]) -> Option<Cycle> {
        if self.components.len() < 2 {
            return None;
        }
        let whole: Vec<&Piece> = pieces.iter().filter(|pc| pc.cut.is_none() && pc.verts.len() >= 3).collect();
        if whole.is_empty() {
            return None;
        }
        self.any_pair_over(&whole, "case_3")
    }

    fn case_4(&mut self, pieces: &[Piece]) -> Option<Cycle> {
        let mut attempts = 0;
        for piece in pieces.iter().filter(|pc| pc.cut.is_some()) {
            let z = piece.cut.expect("filtered");
            let Some(u1) = self.best_attached(&piece.verts, Some(z)) else { continue };
            let Some(p1) = self.long_path(&piece.verts, u1, z, None) else { continue };
            let ladder1 = self.chopped(&p1);
            // the rest of the component, plus z
            let mut outside: Vec<usize> = piece
                .component
                .iter()
                .copied()
                .filter(|w| *w == z || piece.verts.binary_search(w).is_err())
                .collect();
            outside.sort_unstable();
            let allowed = crate::graph::bitset_of(self.g.order(), outside.iter().copied());
            let x1s = self.saw_neighbours(u1);
            for &u2 in outside.iter().filter(|&&w| w != z) {
                let x2s = self.saw_neighbours(u2);
                if !x1s.iter().any(|a| x2s.iter().any(|b| a != b)) {
                    continue;
                }
                let Some(p2) = self.g.shortest_path_within(z, u2, &allowed) else { continue };
                let q = p1.concat_shared(&p2);
                let mut fam2 = OrderFamily::new(u1, u2);
                for step_path in ladder1.paths() {
                    fam2.insert(step_path.concat_shared(&p2)).expect("endpoints");
                }
                for path in self.chopped(&q).paths() {
                    fam2.insert(path.clone()).expect("endpoints");
                }
                for &x1 in &x1s {
                    for &x2 in x2s.iter().filter(|&&b| b != x1) {
                        attempts += 1;
                        if attempts > MAX_ATTEMPTS {
                            return None;
                        }
                        let Ok(fam1) = saw::any_pair_family(self.s, x1, x2) else { continue };
                        if let Some(c) = chop_collate::splice(&fam1, &fam2, self.p + 1) {
                            self.log(
                                "case_4_1",
                                "concatenation",
                                &[("path_1", p1.order()), ("path_2", p2.order()), ("piece_alpha", piece.alpha)],
                                Some(c.order()),
                                None,
                            );
                            return Some(c);
                        }
                    }
                }
            }
            // both ends inside the endblock
            if let Some(c) = self.any_pair_over(&[piece], "case_4_2") {
                self.log("case_4_2", "any_pair_paths", &[("piece_alpha", piece.alpha)], Some(c.order()), None);
                return Some(c);
            }
        }
        None
    }

    /// A vertex outside the saw closing a saw path of order `p` between two
    /// of its saw neighbours.
    fn through_vertex(&mut self, _: &[Piece]) -> Option<Cycle> {
        if self.s.order() < self.p {
            return None;
        }
        let mut attempts = 0;
        for &w in &self.star {
            let ns = self.saw_neighbours(w);
            for (i, &a) in ns.iter().enumerate() {
                for &b in &ns[i + 1..] {
                    attempts += 1;
                    if attempts > MAX_ATTEMPTS {
                        return None;
                    }
                    let fam = saw::any_pair_family(self.s, a, b).ok()?;
                    if let Some(path) = fam.get(self.p) {
                        let mut seq = path.vertices().to_vec();
                        seq.push(w);
                        return Some(Cycle::new(seq));
                    }
                }
            }
        }
        None
    }

    fn any_pair_all(&mut self, pieces: &[Piece]) -> Option<Cycle> {
        let all: Vec<&Piece> = pieces.iter().collect();
        self.any_pair_over(&all, "any_pair")
    }
}

/// Depth-first search for a cycle of order exactly `q` whose smallest vertex
/// is the start, within a node budget.
pub fn exact_cycle(g: &Graph, q: usize, budget: u64) -> Option<Cycle> {
    let n = g.order();
    if q < 3 || q > n {
        return None;
    }
    let mut nodes = 0u64;
    for s in 0..n {
        if n - s < q {
            break;
        }
        let mut path = vec![s];
        let mut on = FixedBitSet::with_capacity(n);
        on.insert(s);
        if extend(g, q, &mut path, &mut on, &mut nodes, budget) {
            return Some(Cycle::new(path));
        }
        if nodes > budget {
            return None;
        }
    }
    None
}

fn extend(g: &Graph, q: usize, path: &mut Vec<usize>, on: &mut FixedBitSet, nodes: &mut u64, budget: u64) -> bool {
    *nodes += 1;
    if *nodes > budget {
        return false;
    }
    let s = path[0];
    let last = *path.last().expect("nonempty");
    if path.len() == q {
        return g.has_edge(last, s);
    }
    let next: Vec<usize> = g.neighbors(last).filter(|&w| w > s && !on.contains(w)).collect();
    for w in next {
        if path.len() + 1 == q && !g.has_edge(w, s) {
            continue;
        }
        path.push(w);
        on.insert(w);
        if extend(g, q, path, on, nodes, budget) {
            return true;
        }
        on.set(w, false);
        path.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{clique_union_cross, rng};

    fn with_isolated(g: &Graph) -> Graph {
        let mut h = g.clone();
        h.add_vertex();
        h
    }

    #[test]
    fn complete_graph_yields_cycle() {
        let g = Graph::complete(27);
        let c = ramsey_witness(&g, 13, 2);
        assert_eq!(c.kind, CertificateKind::CycleFound);
        assert_eq!(c.cycle.as_ref().unwrap().order(), 14);
        verify_certificate(&g, 13, 2, &c).unwrap();
    }

    #[test]
    fn extremal_plus_isolated_yields_independent_set() {
        let g = with_isolated(&extremal_graph(13, 2).unwrap());
        let c = ramsey_witness(&g, 13, 2);
        assert_eq!(c.kind, CertificateKind::IndependentSetFound);
        let set = c.independent_set.as_ref().unwrap();
        assert_eq!(set.len(), 3);
        assert!(set.contains(26));
        verify_certificate(&g, 13, 2, &c).unwrap();
    }

    #[test]
    fn hypothesis_is_enforced() {
        let c = ramsey_witness(&Graph::complete(10), 13, 2);
        assert_eq!(c.kind, CertificateKind::HypothesisViolated);
        verify_certificate(&Graph::complete(10), 13, 2, &c).unwrap();
        let c = ramsey_witness(&Graph::complete(21), 10, 2);
        assert_eq!(c.kind, CertificateKind::HypothesisViolated);
        assert!(check_hypothesis(27, 13, 2).is_ok());
        assert!(check_hypothesis(4, 3, 1).is_ok());
        assert!(check_hypothesis(5, 4, 0).is_err());
    }

    #[test]
    fn clique_pairs_with_cross_edges() {
        for seed in 0..10 {
            let m = (seed as usize * 3) % 31;
            let g = clique_union_cross(&[13, 14], m, &mut rng(seed)).unwrap();
            let c = ramsey_witness(&g, 13, 2);
            assert_eq!(c.kind, CertificateKind::CycleFound, "seed {seed}: {}", c.explanation);
            verify_certificate(&g, 13, 2, &c).unwrap();
        }
    }

    #[test]
    fn tampering_is_detected() {
        let g = clique_union_cross(&[13, 14], 4, &mut rng(9)).unwrap();
        let c = ramsey_witness(&g, 13, 2);
        let mut bad = c.clone();
        let mut seq = bad.cycle.unwrap().vertices().to_vec();
        // swap in a vertex of the other clique
        let other = (0..27).find(|v| !seq.contains(v) && seq.iter().all(|&w| !g.has_edge(*v, w))).unwrap();
        seq[3] = other;
        bad.cycle = Some(Cycle::new(seq));
        assert_eq!(verify_certificate(&g, 13, 2, &bad).unwrap_err().code(), "missing_edge");

        let h = with_isolated(&extremal_graph(13, 2).unwrap());
        let mut small = ramsey_witness(&h, 13, 2);
        let set = small.independent_set.take().unwrap();
        small.independent_set = Some(truncated(&set, 2));
        assert_eq!(verify_certificate(&h, 13, 2, &small).unwrap_err().code(), "wrong_size");
    }

    #[test]
    fn base_level() {
        let c = ramsey_witness(&Graph::complete(6), 5, 1);
        assert_eq!(c.kind, CertificateKind::CycleFound);
        let mut h = Graph::new(6);
        for (a, b) in Graph::complete(6).edges() {
            if (a, b) != (1, 4) {
                h.add_edge(a, b).unwrap();
            }
        }
        let c = ramsey_witness(&h, 5, 1);
        assert_eq!(c.kind, CertificateKind::IndependentSetFound);
        assert_eq!(c.independent_set.unwrap().to_vec(), vec![1, 4]);
    }

    #[test]
    fn certificate_round_trips_through_json() {
        let g = Graph::complete(27);
        let c = ramsey_witness(&g, 13, 2);
        let back = Certificate::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
        assert!(c.to_json().contains("\"kind\": \"cycle_found\""));
    }

    #[test]
    fn traces_are_deterministic() {
        let g = clique_union_cross(&[13, 14], 20, &mut rng(5)).unwrap();
        assert_eq!(ramsey_witness(&g, 13, 2), ramsey_witness(&g, 13, 2));
    }

    /// A complete saw on `m` vertices, then cliques of the given sizes (the
    /// first two glued at one vertex when `glue`), each clique vertex joined
    /// to a random set of saw vertices of size at least `min_links`.
    fn saw_and_cliques(m: usize, sizes: &[usize], glue: bool, min_links: usize, seed: u64) -> (Graph, Saw) {
        use rand::seq::index::sample;
        use rand::Rng;
        let mut rg = rng(seed);
        let mut g = Graph::complete(m);
        let mut start = m;
        let mut starts = Vec::new();
        for (i, &size) in sizes.iter().enumerate() {
            let shared = glue && i == 1;
            let first = if shared { start - 1 } else { start };
            let fresh = if shared { size - 1 } else { size };
            for _ in 0..fresh {
                g.add_vertex();
            }
            for a in first..first + size {
                for b in a + 1..first + size {
                    g.ensure_edge(a, b);
                }
            }
            starts.push(first);
            start += fresh;
        }
        for w in m..g.order() {
            let links = rg.random_range(min_links..=m);
            for x in sample(&mut rg, m, links).into_vec() {
                g.ensure_edge(w, x);
            }
        }
        let s = Saw::new(&g, (0..m).collect()).unwrap();
        (g, s)
    }

    fn around(g: &Graph, s: &Saw, p: usize, r: usize) -> String {
        let (c, trace) = cycle_around_saw(g, s, p, r);
        let c = c.expect("collating stage found a cycle");
        verify::check_cycle(g, &c).unwrap();
        assert_eq!(c.order(), p + 1);
        trace.iter().rev().find(|t| t.output_order.is_some()).unwrap().case.clone()
    }

    #[test]
    fn collating_stage_when_rest_is_disconnected() {
        for seed in 0..8 {
            let (g, s) = saw_and_cliques(9, &[9, 9], false, 2, seed);
            let case = around(&g, &s, 13, 2);
            assert!(["case_2", "case_3", "any_pair"].contains(&case.as_str()), "{case}");
        }
    }

    #[test]
    fn collating_stage_with_an_endblock() {
        for seed in 0..8 {
            let (g, s) = saw_and_cliques(9, &[9, 10], true, 2, seed);
            let case = around(&g, &s, 13, 2);
            assert!(["case_2", "case_4", "any_pair"].contains(&case.as_str()), "{case}");
        }
    }

    #[test]
    fn collating_stage_single_attachments() {
        // clique vertices may see a single saw vertex
        for seed in 0..8 {
            let (g, s) = saw_and_cliques(11, &[8, 8], true, 1, seed);
            around(&g, &s, 13, 2);
        }
    }

    #[test]
    fn exact_cycle_search() {
        let g = Graph::petersen();
        assert!(exact_cycle(&g, 4, 1_000_000).is_none());
        let c = exact_cycle(&g, 9, 1_000_000).unwrap();
        verify::check_cycle(&g, &c).unwrap();
        assert_eq!(c.order(), 9);
    }
}
