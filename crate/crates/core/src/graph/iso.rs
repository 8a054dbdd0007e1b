use super::{Graph, VertexSet};

/// Backtracking isomorphism test for small graphs.
///
/// Vertices of `g` are mapped in index order; a candidate image must have
/// the same degree and agree on adjacency with every vertex already mapped.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    let mut image = vec![usize::MAX; g.n()];
    extend(g, h, 0, &mut image, VertexSet::EMPTY)
}

fn extend(g: &Graph, h: &Graph, v: usize, image: &mut [usize], used: VertexSet) -> bool {
    if v == g.n() {
        return true;
    }
    for w in h.vertex_set() - used {
        if h.degree(w) != g.degree(v) {
            continue;
        }
        let consistent = (0..v).all(|u| g.has_edge(u, v) == h.has_edge(image[u], w));
        if consistent {
            image[v] = w;
            if extend(g, h, v + 1, image, used.with(w)) {
                return true;
            }
        }
    }
    false
}
