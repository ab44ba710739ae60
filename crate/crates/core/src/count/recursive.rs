use std::collections::HashMap;

use rug::Integer;

use super::{BigCount, IndexKind};
use crate::graph::CactusGraph;

/// Counts via the deletion identities
///
/// * `m(G) = m(G - e) + m(G - {u, v})` for an edge `e = uv`, applied to every
///   edge at the lowest remaining vertex `v`, which gives
///   `m(G) = m(G - v) + sum over neighbours u of m(G - v - u)`;
/// * `i(G) = i(G - v) + i(G - N[v])`.
///
/// Every intermediate graph is an induced subgraph, so the state is just the
/// set of surviving vertices. Components are counted separately and
/// multiplied, and results are memoized per vertex set.
pub fn count_recursive(g: &CactusGraph, kind: IndexKind) -> BigCount {
    let mut counter = Counter {
        adjacency: g.adjacency(),
        kind,
        memo: HashMap::new(),
    };
    let all = VertexSet::full(g.vertex_count());
    BigCount::from(counter.count(&all))
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct VertexSet(Vec<u64>);

impl VertexSet {
    fn full(n: usize) -> Self {
        let mut words = vec![u64::MAX; n.div_ceil(64)];
        if !n.is_multiple_of(64) {
            if let Some(last) = words.last_mut() {
                *last = (1u64 << (n % 64)) - 1;
            }
        }
        Self(words)
    }

    fn empty_like(&self) -> Self {
        Self(vec![0; self.0.len()])
    }

    fn contains(&self, v: usize) -> bool {
        self.0[v / 64] >> (v % 64) & 1 == 1
    }

    fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }

    fn remove(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }

    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|w| *w == 0)
    }

    fn difference(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }
}

struct Counter {
    adjacency: Vec<Vec<usize>>,
    kind: IndexKind,
    memo: HashMap<VertexSet, Integer>,
}

impl Counter {
    fn count(&mut self, set: &VertexSet) -> Integer {
        if set.is_empty() {
            return Integer::from(1);
        }
        if let Some(hit) = self.memo.get(set) {
            return hit.clone();
        }
        let component = self.component_of(set, set.first().unwrap());
        let rest = set.difference(&component);
        let result = if !rest.is_empty() {
            self.count(&component) * self.count(&rest)
        } else {
            self.expand(set)
        };
        self.memo.insert(set.clone(), result.clone());
        result
    }

    fn expand(&mut self, set: &VertexSet) -> Integer {
        let v = set.first().unwrap();
        let mut without_v = set.clone();
        without_v.remove(v);
        let neighbours: Vec<usize> = self.adjacency[v]
            .iter()
            .copied()
            .filter(|&u| set.contains(u))
            .collect();
        let mut total = self.count(&without_v);
        match self.kind {
            IndexKind::Hosoya => {
                for u in neighbours {
                    let mut reduced = without_v.clone();
                    reduced.remove(u);
                    total += self.count(&reduced);
                }
            }
            IndexKind::MerrifieldSimmons => {
                let mut reduced = without_v;
                for u in neighbours {
                    reduced.remove(u);
                }
                total += self.count(&reduced);
            }
        }
        total
    }

    fn component_of(&self, set: &VertexSet, start: usize) -> VertexSet {
        let mut seen = set.empty_like();
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &u in &self.adjacency[v] {
                if set.contains(u) && !seen.contains(u) {
                    seen.insert(u);
                    stack.push(u);
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_chain, AttachmentSequence, AttachmentType};

    #[test]
    fn two_hexagons() {
        let g = build_chain(&AttachmentSequence::new(2, vec![]).unwrap());
        assert_eq!(count_recursive(&g, IndexKind::Hosoya), 224);
        assert_eq!(count_recursive(&g, IndexKind::MerrifieldSimmons), 194);
    }

    #[test]
    fn single_vertex_and_disconnected() {
        let g = CactusGraph::from_edges(1, vec![]).unwrap();
        assert_eq!(count_recursive(&g, IndexKind::MerrifieldSimmons), 2);
        assert_eq!(count_recursive(&g, IndexKind::Hosoya), 1);
        // Two disjoint edges plus an isolated vertex.
        let g = CactusGraph::from_edges(5, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(count_recursive(&g, IndexKind::Hosoya), 4);
        assert_eq!(count_recursive(&g, IndexKind::MerrifieldSimmons), 3 * 3 * 2);
    }

    #[test]
    fn handles_graphs_beyond_one_word() {
        // R_20 has 101 vertices; compare against the transfer-matrix engine.
        let seq = AttachmentSequence::uniform(20, AttachmentType::Meta);
        let g = build_chain(&seq);
        for kind in IndexKind::ALL {
            assert_eq!(count_recursive(&g, kind), crate::count::count_chain(&seq, kind));
        }
    }
}
