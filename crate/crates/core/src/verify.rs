//! Stand-alone validity checks for paths, cycles and independent sets.
//!
//! These are deliberately independent of every construction in the crate:
//! they only look at the host graph and the object handed to them.

use std::collections::HashSet;

use thiserror::Error;

use crate::graph::{Cycle, Graph, Path, VertexSet};

/// First violated condition found by a checker.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Violation {
    #[error("empty object")]
    Empty,
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(usize),
    #[error("vertex {0} is repeated")]
    RepeatedVertex(usize),
    #[error("missing edge ({0}, {1})")]
    MissingEdge(usize, usize),
    #[error("cycle has order {0}, below 3")]
    CycleTooShort(usize),
    #[error("vertices {0} and {1} are adjacent")]
    AdjacentPair(usize, usize),
    #[error("expected order {expected}, found {found}")]
    WrongOrder { expected: usize, found: usize },
    #[error("expected endpoints ({0}, {1})")]
    WrongEndpoints(usize, usize),
}

impl Violation {
    /// Stable short code for reports and certificates.
    pub fn code(&self) -> &'static str {
        match self {
            Violation::Empty => "empty",
            Violation::UnknownVertex(_) => "unknown_vertex",
            Violation::RepeatedVertex(_) => "repeated_vertex",
            Violation::MissingEdge(..) => "missing_edge",
            Violation::CycleTooShort(_) => "cycle_too_short",
            Violation::AdjacentPair(..) => "adjacent_pair",
            Violation::WrongOrder { .. } => "wrong_order",
            Violation::WrongEndpoints(..) => "wrong_endpoints",
        }
    }
}

/// Any object a certificate can carry.
#[derive(Debug, Clone, Copy)]
pub enum CertificatePart<'a> {
    Path(&'a Path),
    Cycle(&'a Cycle),
    IndependentSet(&'a VertexSet),
}

pub fn verify_certificate_part(g: &Graph, part: CertificatePart<'_>) -> Result<(), Violation> {
    match part {
        CertificatePart::Path(p) => check_path(g, p),
        CertificatePart::Cycle(c) => check_cycle(g, c),
        CertificatePart::IndependentSet(s) => check_independent_set(g, s),
    }
}

fn check_sequence(g: &Graph, seq: &[usize]) -> Result<(), Violation> {
    if seq.is_empty() {
        return Err(Violation::Empty);
    }
    let mut seen = HashSet::with_capacity(seq.len());
    for &v in seq {
        if v >= g.order() {
            return Err(Violation::UnknownVertex(v));
        }
        if !seen.insert(v) {
            return Err(Violation::RepeatedVertex(v));
        }
    }
    for w in seq.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return Err(Violation::MissingEdge(w[0], w[1]));
        }
    }
    Ok(())
}

pub fn check_path(g: &Graph, p: &Path) -> Result<(), Violation> {
    check_sequence(g, p.vertices())
}

/// Path validity plus prescribed endpoints and order.
pub fn check_path_between(g: &Graph, p: &Path, u: usize, v: usize, order: usize) -> Result<(), Violation> {
    check_path(g, p)?;
    if p.endpoints() != (u, v) {
        return Err(Violation::WrongEndpoints(u, v));
    }
    if p.order() != order {
        return Err(Violation::WrongOrder { expected: order, found: p.order() });
    }
    Ok(())
}

pub fn check_cycle(g: &Graph, c: &Cycle) -> Result<(), Violation> {
    let seq = c.vertices();
    check_sequence(g, seq)?;
    if seq.len() < 3 {
        return Err(Violation::CycleTooShort(seq.len()));
    }
    let (first, last) = (seq[0], seq[seq.len() - 1]);
    if !g.has_edge(last, first) {
        return Err(Violation::MissingEdge(last, first));
    }
    Ok(())
}

pub fn check_independent_set(g: &Graph, s: &VertexSet) -> Result<(), Violation> {
    let members = s.to_vec();
    for &v in &members {
        if v >= g.order() {
            return Err(Violation::UnknownVertex(v));
        }
    }
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if g.has_edge(u, v) {
                return Err(Violation::AdjacentPair(u, v));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_hamilton_cycle_is_valid() {
        let g = Graph::complete(4);
        let c = Cycle::new(vec![0, 1, 2, 3]);
        assert_eq!(verify_certificate_part(&g, CertificatePart::Cycle(&c)), Ok(()));
    }

    #[test]
    fn adjacent_pair_is_not_independent() {
        let g = Graph::cycle(5);
        let s = VertexSet::from(vec![0, 1]);
        let err = verify_certificate_part(&g, CertificatePart::IndependentSet(&s)).unwrap_err();
        assert_eq!(err, Violation::AdjacentPair(0, 1));
        assert_eq!(err.code(), "adjacent_pair");
        assert!(check_independent_set(&g, &VertexSet::from(vec![0, 2])).is_ok());
    }

    #[test]
    fn repeated_vertex_rejected() {
        let g = Graph::complete(5);
        let p = Path::new(vec![0, 1, 2, 1]);
        assert_eq!(check_path(&g, &p), Err(Violation::RepeatedVertex(1)));
    }

    #[test]
    fn cycle_needs_closing_edge_and_three_vertices() {
        let g = Graph::path(4);
        assert_eq!(check_cycle(&g, &Cycle::new(vec![0, 1, 2, 3])), Err(Violation::MissingEdge(3, 0)));
        let k2 = Graph::complete(2);
        assert_eq!(check_cycle(&k2, &Cycle::new(vec![0, 1])), Err(Violation::CycleTooShort(2)));
    }

    #[test]
    fn endpoints_and_order_are_checked() {
        let g = Graph::complete(5);
        let p = Path::new(vec![0, 3, 2]);
        assert!(check_path_between(&g, &p, 0, 2, 3).is_ok());
        assert_eq!(check_path_between(&g, &p, 0, 3, 3), Err(Violation::WrongEndpoints(0, 3)));
        assert_eq!(
            check_path_between(&g, &p, 0, 2, 4),
            Err(Violation::WrongOrder { expected: 4, found: 3 })
        );
        assert_eq!(check_path(&g, &Path::new(vec![])), Err(Violation::Empty));
        assert_eq!(check_path(&g, &Path::new(vec![7])), Err(Violation::UnknownVertex(7)));
    }
}
