//! Block / cutvertex decomposition (Hopcroft–Tarjan).

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BlockError {
    #[error("graph is not connected")]
    DisconnectedInput,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Maximal 2-connected pieces and bridge edges, ordered by smallest
    /// vertex, then lexicographically.
    pub blocks: Vec<VertexSet>,
    pub cutvertices: VertexSet,
    /// `endblock[i]`: block `i` contains at most one cutvertex.
    pub endblock: Vec<bool>,
}

impl BlockDecomposition {
    /// The unique cutvertex of block `i`, if it has exactly one.
    pub fn cutvertex_of(&self, i: usize) -> Option<usize> {
        let mut it = self.blocks[i].iter().filter(|&v| self.cutvertices.contains(v));
        let first = it.next()?;
        it.next().is_none().then_some(first)
    }

    pub fn endblocks(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.blocks.len()).filter(|&i| self.endblock[i])
    }
}

struct Tarjan<'g> {
    g: &'g Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    blocks: Vec<BTreeSet<usize>>,
    cut: BTreeSet<usize>,
}

impl Tarjan<'_> {
    fn visit(&mut self, v: usize, parent: Option<usize>) {
        self.time += 1;
        self.disc[v] = self.time;
        self.low[v] = self.time;
        let mut children = 0;
        let nbrs: Vec<usize> = self.g.neighbors(v).collect();
        for w in nbrs {
            if self.disc[w] == 0 {
                children += 1;
                self.stack.push((v, w));
                self.visit(w, Some(v));
                self.low[v] = self.low[v].min(self.low[w]);
                if self.low[w] >= self.disc[v] {
                    if parent.is_some() || children > 1 {
                        self.cut.insert(v);
                    }
                    let mut block = BTreeSet::new();
                    while let Some((a, b)) = self.stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (v, w) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if Some(w) != parent && self.disc[w] < self.disc[v] {
                self.stack.push((v, w));
                self.low[v] = self.low[v].min(self.disc[w]);
            }
        }
        if parent.is_none() && children > 1 {
            self.cut.insert(v);
        }
    }
}

pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition, BlockError> {
    let n = g.order();
    if n == 0 || !g.is_connected() {
        return Err(BlockError::DisconnectedInput);
    }
    if n == 1 {
        return Ok(BlockDecomposition {
            blocks: vec![VertexSet::from(vec![0])],
            cutvertices: VertexSet::new(),
            endblock: vec![true],
        });
    }
    let mut t = Tarjan {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
        cut: BTreeSet::new(),
    };
    t.visit(0, None);
    let mut blocks: Vec<Vec<usize>> = t.blocks.into_iter().map(|b| b.into_iter().collect()).collect();
    blocks.sort();
    let cutvertices: VertexSet = t.cut.into_iter().collect();
    let endblock = blocks
        .iter()
        .map(|b| b.iter().filter(|&&v| cutvertices.contains(v)).count() <= 1)
        .collect();
    Ok(BlockDecomposition {
        blocks: blocks.into_iter().map(VertexSet::from).collect(),
        cutvertices,
        endblock,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_is_one_block() {
        let d = block_decomposition(&Graph::complete(4)).unwrap();
        assert_eq!(d.blocks, vec![VertexSet::from(vec![0, 1, 2, 3])]);
        assert!(d.cutvertices.is_empty());
        assert_eq!(d.endblock, vec![true]);
    }

    #[test]
    fn path_has_bridge_blocks() {
        let d = block_decomposition(&Graph::path(3)).unwrap();
        assert_eq!(d.blocks, vec![VertexSet::from(vec![0, 1]), VertexSet::from(vec![1, 2])]);
        assert_eq!(d.cutvertices, VertexSet::from(vec![1]));
        assert_eq!(d.cutvertex_of(0), Some(1));
    }

    #[test]
    fn bowtie_has_two_endblocks() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let d = block_decomposition(&g).unwrap();
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.cutvertices, VertexSet::from(vec![2]));
        assert_eq!(d.endblock, vec![true, true]);
    }

    #[test]
    fn middle_block_is_not_an_endblock() {
        // triangle - edge - triangle
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]).unwrap();
        let d = block_decomposition(&g).unwrap();
        assert_eq!(d.blocks.len(), 3);
        let mid = d.blocks.iter().position(|b| b == &VertexSet::from(vec![2, 3])).unwrap();
        assert!(!d.endblock[mid]);
        assert_eq!(d.endblocks().count(), 2);
    }

    #[test]
    fn disconnected_input_rejected() {
        assert_eq!(block_decomposition(&Graph::new(2)), Err(BlockError::DisconnectedInput));
    }

    use proptest::prelude::*;

    fn connected_graph() -> impl Strategy<Value = Graph> {
        (2usize..10).prop_flat_map(|n| {
            (
                proptest::collection::vec(0usize..100, n - 1),
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
            )
                .prop_map(move |(parents, extra)| {
                    let mut g = Graph::new(n);
                    for v in 1..n {
                        g.ensure_edge(v, parents[v - 1] % v);
                    }
                    let mut it = extra.into_iter();
                    for u in 0..n {
                        for v in u + 1..n {
                            if it.next().unwrap() && (u * 7 + v) % 3 == 0 {
                                g.ensure_edge(u, v);
                            }
                        }
                    }
                    g
                })
        })
    }

    proptest! {
        #[test]
        fn blocks_cover_edges_and_are_two_connected(g in connected_graph()) {
            let d = block_decomposition(&g).unwrap();
            let mut covered = BTreeSet::new();
            for b in &d.blocks {
                let sub = g.induced(&b.to_vec());
                if b.len() >= 3 {
                    prop_assert!(sub.graph.is_two_connected());
                }
                for (u, v) in sub.graph.edges() {
                    covered.insert((sub.to_host(u), sub.to_host(v)));
                }
            }
            prop_assert_eq!(covered.into_iter().collect::<Vec<_>>(), g.edges());
            for (i, a) in d.blocks.iter().enumerate() {
                for b in &d.blocks[i + 1..] {
                    let shared: Vec<usize> = a.iter().filter(|&v| b.contains(v)).collect();
                    prop_assert!(shared.len() <= 1);
                    if let Some(&v) = shared.first() {
                        prop_assert!(d.cutvertices.contains(v));
                    }
                }
            }
        }
    }
}
