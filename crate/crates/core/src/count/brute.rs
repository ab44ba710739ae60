use super::{BigCount, IndexKind};
use crate::error::{Error, Result};
use crate::graph::CactusGraph;

/// Largest number of edges (Hosoya) or vertices (Merrifield-Simmons) that
/// [`count_brute`] will enumerate over.
pub const BRUTE_FORCE_LIMIT: usize = 26;

/// Counts matchings or independent sets by walking every subset of edges
/// (resp. vertices) in lexicographic order. A branch is cut as soon as the
/// partial subset stops being a matching (resp. independent set).
pub fn count_brute(g: &CactusGraph, kind: IndexKind) -> Result<BigCount> {
    let (what, size) = match kind {
        IndexKind::Hosoya => ("edge count", g.edge_count()),
        IndexKind::MerrifieldSimmons => ("vertex count", g.vertex_count()),
    };
    if size > BRUTE_FORCE_LIMIT {
        return Err(Error::SizeLimitExceeded {
            engine: "brute-force enumeration",
            what,
            limit: BRUTE_FORCE_LIMIT,
            actual: size,
        });
    }
    let total = match kind {
        IndexKind::Hosoya => {
            // Relabel endpoints densely so isolated vertices cannot push a bit
            // index past 63; at most 2 * BRUTE_FORCE_LIMIT endpoints remain.
            let mut dense = vec![usize::MAX; g.vertex_count()];
            let mut next = 0;
            let mut bit = |v: usize| {
                if dense[v] == usize::MAX {
                    dense[v] = next;
                    next += 1;
                }
                1u64 << dense[v]
            };
            let edges: Vec<u64> = g.edges().iter().map(|&(u, v)| bit(u) | bit(v)).collect();
            matchings(&edges, 0, 0)
        }
        IndexKind::MerrifieldSimmons => {
            let mut neighbours = vec![0u64; g.vertex_count()];
            for &(u, v) in g.edges() {
                neighbours[u] |= 1 << v;
                neighbours[v] |= 1 << u;
            }
            independent_sets(&neighbours, 0, 0)
        }
    };
    Ok(BigCount::from(total))
}

fn matchings(edges: &[u64], next: usize, covered: u64) -> u64 {
    if next == edges.len() {
        return 1;
    }
    let mut total = matchings(edges, next + 1, covered);
    if edges[next] & covered == 0 {
        total += matchings(edges, next + 1, covered | edges[next]);
    }
    total
}

fn independent_sets(neighbours: &[u64], next: usize, chosen: u64) -> u64 {
    if next == neighbours.len() {
        return 1;
    }
    let mut total = independent_sets(neighbours, next + 1, chosen);
    if neighbours[next] & chosen == 0 {
        total += independent_sets(neighbours, next + 1, chosen | (1 << next));
    }
    total
}
