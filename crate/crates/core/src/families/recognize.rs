use serde::Serialize;

use super::{generate, FamilySpec};
use crate::graph::{is_isomorphic, Graph, VertexSet};

/// Why a graph is in family B: the leaf `x`, its support `y`, the
/// independent set `N(y) \ {x}` and the clique `V \ (N(y) ∪ {x, y})`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyBWitness {
    pub leaf: usize,
    pub support: usize,
    pub independent: VertexSet,
    pub clique: VertexSet,
}

/// The first leaf (by index) that makes `g` a member of family B.
pub fn is_in_family_b(g: &Graph) -> Option<FamilyBWitness> {
    let all = g.vertex_set();
    g.leaves().iter().find_map(|x| {
        let y = g.neighbors(x).first()?;
        let independent = g.neighbors(y).without(x);
        let clique = all - g.neighbors(y) - VertexSet::from_iter([x, y]);
        if independent.is_empty() || clique.is_empty() {
            return None;
        }
        let ok = independent.iter().all(|a| g.neighbors(a).is_disjoint(independent) && clique.is_subset(g.neighbors(a)))
            && clique.iter().all(|b| clique.without(b).is_subset(g.neighbors(b)));
        ok.then_some(FamilyBWitness { leaf: x, support: y, independent, clique })
    })
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum TClass {
    /// `K_{r,r}` minus a perfect matching.
    T1 { r: usize },
    /// `K_{r,s}` minus a matching of size `m < min(r, s)`.
    T2 { r: usize, s: usize, m: usize },
    Neither,
}

/// Decides membership in T1 or T2 up to isomorphism.
///
/// Every vertex must miss at most one vertex on the other side, so no
/// vertex is isolated, and a vertex misses every other-side vertex outside
/// its own component; hence at most two components. Both 2-colorings of
/// the second component are tried.
pub fn classify_t1_t2(g: &Graph) -> TClass {
    let n = g.n();
    if n < 4 || g.min_degree() == 0 {
        return TClass::Neither;
    }
    let comps = g.components();
    if comps.len() > 2 {
        return TClass::Neither;
    }
    let Some(colors) = comps.iter().map(|&c| two_color(g, c)).collect::<Option<Vec<_>>>() else {
        return TClass::Neither;
    };
    let flips: &[bool] = if comps.len() == 2 { &[false, true] } else { &[false] };
    for &flip in flips {
        let mut x = colors[0].0;
        let mut y = colors[0].1;
        if let Some(&(a, b)) = colors.get(1) {
            let (a, b) = if flip { (b, a) } else { (a, b) };
            x |= a;
            y |= b;
        }
        let class = classify_sides(g, x, y);
        if class != TClass::Neither {
            return class;
        }
    }
    TClass::Neither
}

/// The two color classes of a connected, bipartite vertex set.
fn two_color(g: &Graph, comp: VertexSet) -> Option<(VertexSet, VertexSet)> {
    let start = comp.first()?;
    let mut sides = [VertexSet::singleton(start), VertexSet::EMPTY];
    let mut frontier = VertexSet::singleton(start);
    let mut side = 0;
    let mut seen = frontier;
    while !frontier.is_empty() {
        let next = frontier.iter().fold(VertexSet::EMPTY, |acc, v| acc | g.neighbors(v)) - seen;
        side ^= 1;
        sides[side] |= next;
        seen |= next;
        frontier = next;
    }
    let closed = sides.iter().all(|&s| s.iter().all(|v| g.neighbors(v).is_disjoint(s)));
    closed.then_some((sides[0], sides[1]))
}

fn classify_sides(g: &Graph, x: VertexSet, y: VertexSet) -> TClass {
    let (r, s) = (x.len(), y.len());
    if r < 2 || s < 2 {
        return TClass::Neither;
    }
    let mut m = 0;
    for v in x.iter() {
        match (y - g.neighbors(v)).len() {
            0 => {}
            1 => m += 1,
            _ => return TClass::Neither,
        }
    }
    if y.iter().any(|v| (x - g.neighbors(v)).len() > 1) {
        return TClass::Neither;
    }
    if r == s && m == r {
        TClass::T1 { r }
    } else if m < r.min(s) {
        TClass::T2 { r: r.min(s), s: r.max(s), m }
    } else {
        TClass::Neither
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyMembership {
    pub family_b: Option<FamilyBWitness>,
    pub t_class: TClass,
}

impl FamilyMembership {
    pub fn in_b(&self) -> bool {
        self.family_b.is_some()
    }

    pub fn in_t1_or_t2(&self) -> bool {
        self.t_class != TClass::Neither
    }
}

pub fn family_membership(g: &Graph) -> FamilyMembership {
    FamilyMembership { family_b: is_in_family_b(g), t_class: classify_t1_t2(g) }
}

/// Whether `g` is a path on all of its vertices (any labeling).
pub fn is_path(g: &Graph) -> bool {
    g.n() >= 1 && g.is_connected() && g.edge_count() == g.n() - 1 && g.max_degree() <= 2
}

pub fn is_tree_r(g: &Graph) -> bool {
    g.n() == 6 && is_isomorphic(g, &generate(&FamilySpec::TreeR).expect("fixed construction"))
}
